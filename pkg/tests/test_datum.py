import json

from covering_serre.arith import PI, q_pow
from covering_serre.datum import (RootDatumInvolution, SuperCartanDatum, load_datum,
                                  validate_datum, validate_parameters)


def datum(index, parity, dot):
    return SuperCartanDatum.build(index, parity, dot)


def codes(v):
    return {s.split(")")[0] + ")" for s in v.violations if s.startswith("(")}


def test_osp12_is_valid():
    d = datum([1], {1: 1}, {(1, 1): 2})
    assert validate_datum(d)
    assert d.d(1) == 1 and d.pi_i(1) == PI and d.q_i(1) == q_pow(1)


def test_odd_node_needs_even_cartan_entries():
    d = datum([1, 2], {1: 1, 2: 0}, {(1, 1): 2, (1, 2): -1, (2, 2): 2})
    v = validate_datum(d)
    assert not v
    assert "(d)" in codes(v)


def test_bar_consistency():
    v = validate_datum(datum([1], {1: 1}, {(1, 1): 4}))
    assert not v and "(e)" in codes(v)


def test_other_conditions():
    assert "(a)" in codes(validate_datum(datum([1], {1: 0}, {(1, 1): 0})))
    assert "(b)" in codes(validate_datum(datum([1, 2], {1: 0, 2: 0},
                                                {(1, 1): 4, (1, 2): 2, (2, 2): 4})))
    assert "(f)" in codes(validate_datum(datum([1, 2], {1: 0, 2: 0},
                                                {(1, 1): 4, (1, 2): -3, (2, 2): 6})))


def test_valid_datum_odd_rows_are_even():
    d = datum([1, 2], {1: 1, 2: 0}, {(1, 1): 2, (1, 2): -4, (2, 2): 4})
    assert validate_datum(d)
    assert d.a(1, 2) % 2 == 0


def test_distinguished_parameters():
    d = datum([1, 2], {1: 1, 2: 0}, {(1, 1): 2, (1, 2): -2, (2, 2): 4})
    r = RootDatumInvolution({1: 1, 2: 2}, {1: q_pow(-1), 2: q_pow(-2)})
    assert validate_parameters(r, d)
    bad = RootDatumInvolution({1: 1, 2: 2}, {1: q_pow(1), 2: q_pow(-2)})
    v = validate_parameters(bad, d)
    assert not v and any("(bar1)" in s for s in v.violations)


def test_bar3_pairing():
    # two odd nodes swapped by tau with a_{1,2} = -2 and d_i = 1
    d = datum([1, 2], {1: 1, 2: 1}, {(1, 1): 2, (1, 2): -2, (2, 2): 2})
    good = RootDatumInvolution({1: 2, 2: 1}, {1: q_pow(3), 2: q_pow(-1).times_pi(1)})
    r = validate_parameters(good, d)
    assert all("(bar3) sigma_2" not in s for s in r.violations)
    bad = RootDatumInvolution({1: 2, 2: 1}, {1: q_pow(3), 2: q_pow(-1)})
    assert any("(bar3) sigma_2" in s for s in validate_parameters(bad, d).violations)


def test_involution_must_square_to_identity():
    d = datum([1, 2, 3], {1: 0, 2: 0, 3: 0}, {(1, 1): 2, (2, 2): 2, (3, 3): 2})
    r = RootDatumInvolution({1: 2, 2: 3, 3: 1}, {i: q_pow(-1) for i in (1, 2, 3)})
    assert not validate_parameters(r, d)


def test_json_loader(tmp_path):
    raw = {"I": [1, 2], "parity": {"1": 1, "2": 0}, "dot": {"1,1": 2, "1,2": -4, "2,2": 4},
           "tau": {"1": 1, "2": 2}, "sigma": {"1": "q^-1", "2": "q^-2"}}
    path = tmp_path / "d.json"
    path.write_text(json.dumps(raw))
    d, r = load_datum(str(path))
    assert validate_datum(d) and validate_parameters(r, d)
    assert r.sigma[2] == q_pow(-2)
    d2, r2 = load_datum({k: v for k, v in raw.items() if k != "sigma"})
    assert r2.sigma[2] == q_pow(-2)
