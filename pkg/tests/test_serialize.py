import json

from hauptmodul.jst import run_jst
from hauptmodul.serialize import (
    ResultCache,
    canonical_dumps,
    identity_from_json,
    identity_to_json,
    identity_to_latex,
    printed_formulas,
    result_from_json,
    result_to_json,
    run_cached,
)


def test_identity_roundtrip():
    r = run_jst(3, "jst3")
    for ident in (r.hauptmodul, r.kronecker_power):
        assert identity_from_json(identity_to_json(ident)) == ident


def test_result_roundtrip_is_byte_stable():
    r = run_jst(5, "jst2")
    text = canonical_dumps(result_to_json(r))
    back = result_from_json(json.loads(text))
    assert back.hauptmodul == r.hauptmodul and back.hauptmodul_series == r.hauptmodul_series
    assert canonical_dumps(result_to_json(back)) == text


def test_cleared_denominators_are_integral():
    ident = run_jst(2, "jst3").kronecker_power
    assert ident.cleared_denominator == 1152
    assert sorted(c for _, c in ident.cleared_terms) == [-17, 17]


def test_latex():
    tex = identity_to_latex(run_jst(2, "jst3").hauptmodul)
    assert tex.startswith("j_{2}(z)\\Delta_{2}(z) = ")
    assert "\\tfrac{ 221 }{ 144 }" in tex and "E^{(2)}_{8}(z)" in tex
    tex2 = identity_to_latex(run_jst(2, "jst2").hauptmodul)
    assert "104 \\Delta_{2}(z)" in tex2


def test_cache_hit_and_corruption(tmp_path):
    cache = ResultCache(tmp_path)
    r1 = run_cached(2, "jst3", cache=cache)
    p = cache.path(2, "jst3", r1.kappa)
    assert p.exists()
    before = p.read_bytes()
    r2 = run_cached(2, "jst3", cache=cache)
    assert r2.hauptmodul == r1.hauptmodul and p.read_bytes() == before
    p.write_text("{ truncated")
    assert cache.load(2, "jst3", r1.kappa) is None
    run_cached(2, "jst3", cache=cache)
    assert p.read_bytes() == before
    assert not list(tmp_path.glob("*.tmp"))


def test_printed_formula_data_shape():
    doc = printed_formulas()
    assert set(doc["jst3"]) == {"2", "3", "5", "17"}
    assert len(doc["jst3"]["17"]["hauptmodul-numerator"]) == 28
