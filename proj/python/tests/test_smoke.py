import pytest

import halfgcd

P = halfgcd.DEFAULT_PRIME


def mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % P
    return out


def add(a, b):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    out = [(x + y) % P for x, y in zip(a, b)]
    while out and out[-1] == 0:
        out.pop()
    return out


def test_gcd_of_common_factor():
    g = [3, 1]  # x + 3
    a = mul(g, [1, 0, 1])
    b = mul(g, [5, 1])
    assert halfgcd.gcd(a, b) == g


@pytest.mark.parametrize("alg", ["auto", "general", "general-fft", "normal-any", "euclid-ref"])
def test_xgcd_identity(alg):
    a = [7, 0, 2, 9, 1, 4, 1]
    b = [1, 5, 0, 3, 8]
    g, u, v = halfgcd.xgcd(a, b, alg=alg)
    assert g[-1] == 1
    assert add(mul(u, a), mul(v, b)) == g


def test_hgcd_matches_reference():
    a = [2, 7, 1, 8, 2, 8, 1, 8, 2]
    b = [3, 1, 4, 1, 5, 9, 2, 6]
    assert halfgcd.hgcd(a, b, 4, alg="general-fft") == halfgcd.hgcd(a, b, 4, alg="euclid-ref")


def test_errors():
    with pytest.raises(halfgcd.Undefined):
        halfgcd.gcd([], [])
    with pytest.raises(halfgcd.ParseError):
        halfgcd.gcd([1], [1], alg="nope")
    with pytest.raises(halfgcd.UnsupportedField):
        halfgcd.gcd([1], [1], modulus=15)


def test_bench_rows():
    rows = halfgcd.bench("hgcd-normal-fft,hgcd-general", "16..32", "1,2")
    assert len(rows) == 2 * 2 * 2
    assert all(r["field_mults"] > 0 for r in rows)


def test_selftest():
    passed, failed = halfgcd.selftest("field")
    assert passed > 0 and failed == 0
