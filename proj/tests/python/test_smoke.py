from fractions import Fraction

import pytest

import nsreal


def test_goldbach_partial_sum():
    out = nsreal.goldbach(9)
    assert out["partial_sum"] == "101/168"
    big = nsreal.goldbach(10**6)
    gap = nsreal.fraction(big["abs_err_vs_1"])
    assert 0 < gap <= nsreal.fraction(big["tail_bound"]) <= Fraction(3, 1000)


def test_sieve_bases():
    out = nsreal.sieve(10_000, 20)
    assert out["removed_bases"][:8] == [2, 3, 5, 6, 7, 10, 11, 12]
    for step in out["steps"]:
        assert nsreal.fraction(step["contribution"]) == Fraction(1, step["base"] - 1)


def test_hermite_integers():
    assert nsreal.hermite_m(1, 3, 0) == 32
    assert nsreal.hermite_m(1, 3, 1) == 87


def test_certificate_round_trip():
    cert = nsreal.certificate([3, -1])
    assert cert["prime"] == 5
    assert all(nsreal.verify_certificate(cert).values())
    cert["M"][0] = str(int(cert["M"][0]) + 1)
    assert not all(nsreal.verify_certificate(cert).values())


def test_certificate_rejects_zero_leading_coefficient():
    with pytest.raises(nsreal.NsrealError, match="ZeroLeadingCoefficient"):
        nsreal.certificate([0, 1])


def test_pi_convergents():
    out = nsreal.dirichlet("pi", 4)
    got = [(c["p"], c["q"]) for c in out["convergents"]]
    assert got == [("3", "1"), ("22", "7"), ("333", "106"), ("355", "113")]
    assert len(nsreal.dirichlet(Fraction(7, 3), 5)["convergents"]) == 2


def test_liouville():
    assert nsreal.liouville(2, 2)["holds"]
    assert not nsreal.liouville(4, 3)["holds"]


def test_flat_sum_and_canonical_form():
    out = nsreal.extsum("geom(1/2)", depth=512)
    assert out["sign"] == -1 and out["delta"] == "eps_d"
    assert nsreal.wat("1# + eps_d - eps_d")["canonical"] == "1# - eps_d"


def test_command_line_entry():
    code, out, err = nsreal.run("hermite", "m", "--n", "1", "--p", "3", "--k", "0")
    assert code == 0 and '"M": "32"' in out
    code, _, err = nsreal.run("extsum", "--series", "harmonic", "--depth", "512")
    assert code == 3 and err
