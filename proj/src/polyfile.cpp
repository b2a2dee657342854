#include "halfgcd/polyfile.hpp"

#include <fstream>
#include <istream>
#include <memory>
#include <ostream>

namespace halfgcd {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool all_digits(const std::string& s, std::size_t from) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

PrimeField::Elem parse_residue(const PrimeField& f, const std::string& s, std::size_t line) {
  std::size_t from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (!all_digits(s, from)) throw ParseError("line " + std::to_string(line) + ": bad coefficient '" + s + "'");
  PrimeField::Elem v = 0;
  for (std::size_t i = from; i < s.size(); ++i) {
    v = f.add(f.mul(v, 10), static_cast<PrimeField::Elem>(s[i] - '0'));
  }
  return s[0] == '-' ? f.neg(v) : v;
}

mpq_class parse_fraction(const std::string& s, std::size_t line) {
  std::size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::size_t from = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
  bool ok = all_digits(num, from);
  if (slash != std::string::npos) ok = ok && all_digits(s, slash + 1);
  if (!ok) throw ParseError("line " + std::to_string(line) + ": bad coefficient '" + s + "'");
  mpz_class n(num.substr(from)), d(1);
  if (num[0] == '-') n = -n;
  if (slash != std::string::npos) d = mpz_class(s.substr(slash + 1));
  if (d == 0) throw ParseError("line " + std::to_string(line) + ": zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

PolyFile parse_polyfile(std::istream& in) {
  PolyFile file;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(line);
    if (!line.empty()) break;
  }
  if (line.empty()) throw ParseError("empty input: missing field line");
  std::unique_ptr<PrimeField> f;
  if (line == "Q") {
    file.rational = true;
  } else if (line.rfind("p=", 0) == 0 && all_digits(line, 2)) {
    try {
      file.modulus = std::stoull(line.substr(2));
    } catch (const std::out_of_range&) {
      throw UnsupportedField("modulus " + line.substr(2) + " does not fit in 64 bits");
    }
    f = std::make_unique<PrimeField>(file.modulus);
  } else {
    throw ParseError("line " + std::to_string(lineno) + ": expected 'p=<prime>' or 'Q', got '" + line + "'");
  }

  std::vector<std::string> block;
  std::vector<std::size_t> where;
  auto flush = [&] {
    if (block.empty()) return;
    if (file.rational) {
      std::vector<mpq_class> c;
      for (std::size_t i = 0; i < block.size(); ++i) c.push_back(parse_fraction(block[i], where[i]));
      file.rationals.emplace_back(std::move(c));
    } else {
      std::vector<PrimeField::Elem> c;
      for (std::size_t i = 0; i < block.size(); ++i) c.push_back(parse_residue(*f, block[i], where[i]));
      file.prime.emplace_back(std::move(c));
    }
    block.clear();
    where.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty()) {
      flush();
    } else {
      block.push_back(line);
      where.push_back(lineno);
    }
  }
  flush();
  return file;
}

PolyFile read_polyfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_polyfile(in);
}

void write_polyfile(std::ostream& out, const PolyFile& file) {
  if (file.rational) {
    out << "Q\n";
  } else {
    out << "p=" << file.modulus << "\n";
  }
  for (std::size_t i = 0; i < file.count(); ++i) {
    if (i > 0) out << "\n";
    if (file.rational) {
      const auto& p = file.rationals[i];
      if (p.is_zero()) out << "0\n";
      for (const auto& c : p.coeffs()) out << c.get_str() << "\n";
    } else {
      const auto& p = file.prime[i];
      if (p.is_zero()) out << "0\n";
      for (auto c : p.coeffs()) out << c << "\n";
    }
  }
}

}  // namespace halfgcd
