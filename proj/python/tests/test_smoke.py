import pytest

import lilrs


@pytest.fixture(scope="module")
def sim_code():
    return lilrs.Code(q=3, m=3, s=3, shots=(3, 3), k=3, gamma=6, delta=1, trials=500, seed=7)


def test_summary(sim_code):
    info = sim_code.summary()
    assert info["min_distance"] == 8
    assert info["rate"] == pytest.approx(27 / 72)


def test_encode_transmit_decode(sim_code):
    f = sim_code.random_message(3)
    assert len(f) == 3
    word = sim_code.encode(f)
    assert [len(s["rows"]) for s in word["subspaces"]] == [3, 3]
    assert sim_code.decode(word["subspaces"])["message"] == f
    rx = sim_code.transmit(f, 4, 1, seed=11)
    assert sum(len(s["rows"]) for s in rx["subspaces"]) == 9
    for decoder in ("lo", "unique", "list"):
        out = sim_code.decode(rx["subspaces"], decoder)
        assert out["outcome"] != "failure" or decoder == "lo"
    assert sim_code.decode(rx["subspaces"])["message"] == f


def test_complementary(sim_code):
    f = sim_code.message(123)
    rx = sim_code.transmit(f, 1, 4, seed=5, dual=True)
    out = sim_code.decode(rx["subspaces"], "complementary")
    assert out["message"] == f
    assert "dual_codeword" in out


def test_bounds_and_simulate(sim_code):
    b = sim_code.bounds(6, 1)
    assert b.strict == pytest.approx(0.2107, rel=1e-3)
    assert sim_code.bounds(7, 1).strict is None
    (row,) = sim_code.simulate()
    assert row["trials"] == 500
    assert row["ci_low"] <= row["rate"] <= row["ci_high"]
    assert row["rate"] <= b.strict


def test_tiny_exhaustive():
    tiny = lilrs.Code(q=3, m=2, s=1, shots=(1, 1), k=1)
    rep = tiny.exhaustive()
    assert rep["passed"]
    assert rep["min_distance"] == 4


def test_helpers():
    assert lilrs.gaussian_binomial(4, 2, 2) == 35
    assert lilrs.gaussian_binomial(40, 20, 4) > 2**64
    assert lilrs.kappa(3) == pytest.approx(1.785, abs=5e-4)
    lo, hi = lilrs.clopper_pearson(0, 10)
    assert lo == 0 and hi == pytest.approx(1 - 0.025**0.1)


def test_errors():
    with pytest.raises(ValueError):
        lilrs.Code(q=3, m=3, s=1, shots=(3,), k=9)
    with pytest.raises(ValueError):
        lilrs.Code.from_yaml("bogus_key: 1")
