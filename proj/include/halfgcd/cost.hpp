#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace halfgcd {

/// Transform invocations at one length. `doubling` counts the subset of
/// forward transforms issued by FFT doubling.
struct TransformTally {
  std::uint64_t forward = 0;
  std::uint64_t inverse = 0;
  std::uint64_t doubling = 0;

  std::uint64_t total() const { return forward + inverse; }
  TransformTally& operator+=(const TransformTally& o) {
    forward += o.forward;
    inverse += o.inverse;
    doubling += o.doubling;
    return *this;
  }
};

/// Operations issued by one recursion node itself, children excluded.
struct NodeRecord {
  std::string algorithm;
  std::int64_t k = 0;
  std::uint64_t length = 0;
  std::int64_t degeneracy = 0;
  std::map<std::uint64_t, TransformTally> transforms;
  std::uint64_t field_mults = 0;
  /// Part of `transforms` spent inside the quotient computation, whose
  /// Newton iteration picks its own lengths.
  std::map<std::uint64_t, TransformTally> division_transforms;
};

/// Additive tally of field operations and transforms. Counters are always
/// supplied by the caller; nothing in the library counts into global state.
struct CostCounter {
  std::uint64_t field_mults = 0;
  std::uint64_t field_adds = 0;
  std::uint64_t field_divs = 0;
  std::map<std::uint64_t, TransformTally> transforms;
  /// When set, recursive algorithms append one record per internal node.
  std::vector<NodeRecord>* trace = nullptr;

  void mults(std::uint64_t n) { field_mults += n; }
  void adds(std::uint64_t n) { field_adds += n; }
  void divs(std::uint64_t n) { field_divs += n; }
  void forward(std::uint64_t len, std::uint64_t count = 1) { transforms[len].forward += count; }
  void inverse(std::uint64_t len, std::uint64_t count = 1) { transforms[len].inverse += count; }
  void doubling(std::uint64_t len, std::uint64_t count = 1) {
    auto& t = transforms[len];
    t.forward += count;
    t.doubling += count;
  }

  /// An empty counter that shares nothing with this one.
  CostCounter fresh() const { return {}; }

  CostCounter& operator+=(const CostCounter& o) {
    field_mults += o.field_mults;
    field_adds += o.field_adds;
    field_divs += o.field_divs;
    for (const auto& [len, t] : o.transforms) transforms[len] += t;
    return *this;
  }

  std::uint64_t transform_count() const {
    std::uint64_t n = 0;
    for (const auto& [len, t] : transforms) n += t.total();
    return n;
  }

  /// Sum of (n/2) log2 n over all transforms, i.e. the butterfly count.
  std::uint64_t transform_weight() const {
    std::uint64_t w = 0;
    for (const auto& [len, t] : transforms) {
      std::uint64_t lg = 0;
      while ((std::uint64_t{1} << lg) < len) ++lg;
      w += t.total() * (len / 2) * lg;
    }
    return w;
  }
};

}  // namespace halfgcd
