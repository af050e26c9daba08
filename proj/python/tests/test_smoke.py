import pytest

import dickson4


def test_field_model():
    f = dickson4.Field(5, 2)
    assert f.q == 25
    assert f.modulus == [2, 0, 1]
    assert f.describe() == "p=5,e=2,mod=[2,0,1]"
    assert len(f.elements()) == 25
    assert dickson4.Field(5).sqrt(4) == 2
    assert dickson4.Field(5).sqrt(2) is None


def test_bad_characteristic():
    with pytest.raises(dickson4.Error):
        dickson4.Field(3)
    with pytest.raises(ValueError):
        dickson4.Field(5, 2, [1, 0, 1])


def test_evaluate():
    f5 = dickson4.Field(5)
    assert [dickson4.evaluate(f5, 8, x) for x in range(5)] == [1, 2, 1, 4, 3]
    assert dickson4.evaluate(dickson4.Field(7), 10, 2) == 4
    assert dickson4.evaluate(f5, 3, 4, a=0) == 0
    f25 = dickson4.Field(5, 2)
    assert dickson4.evaluate(f25, 2, [2, 3]) == [3, 3]
    big = 10**40 + 7
    for x in f25.elements():
        assert dickson4.evaluate(f25, big, x) == dickson4.evaluate_closed(f25, big, x)


def test_coefficients():
    assert dickson4.coefficients(4) == [1, -1, -1]
    assert dickson4.coefficients(0) == [-1]
    assert dickson4.aux_coefficients(2) == [5, -1]
    c = dickson4.coefficients(200)
    assert isinstance(c[50], int) and abs(c[50]) > 2**64


def test_scan():
    rows = dickson4.pp_scan(dickson4.Field(5), 0, 24)
    assert len(rows) == 25
    assert [r["n"] for r in rows if r["direct"]] == [2]
    for r in rows:
        assert r["direct"] == r["hermite"] == r["two_to_one"]
    assert rows[3]["aux_equiv"] is None


def test_moments():
    f = dickson4.Field(5)
    assert dickson4.moment_divergences(f, "corrected") == []
    div = dickson4.moment_divergences(f, "as-printed")
    assert div[0] == (4, 2, 0)
    table = dickson4.moment_table(f)
    assert table["a"][8] == 1 == dickson4.first_moment(f, 8)
    with pytest.raises(dickson4.Error):
        dickson4.moment_table(f, "bogus")


def test_verify_and_cli():
    results = dickson4.verify(dickson4.Field(7), n_max=50)
    assert all(ok for _, ok, _ in results)
    code, out, _ = dickson4.run_cli(["eval", "--p", "5", "--n", "8", "--x", "3"])
    assert (code, out) == (0, "4\n")
    code, _, err = dickson4.run_cli(["eval", "--p", "4", "--n", "1", "--x", "0"])
    assert code == 1 and err
