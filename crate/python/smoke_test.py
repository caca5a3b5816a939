"""Quick end-to-end check of the Python bindings."""

import json
from fractions import Fraction

import hnkac


def main():
    k3 = hnkac.Quiver.kronecker(3)
    a = hnkac.kac_polynomial(k3, [1, 1])
    assert a == hnkac.Polynomial([1, 1, 1]), a
    assert a.degree == 2
    assert a(2) == 7
    assert a.terms() == [(0, Fraction(1)), (1, Fraction(1)), (2, Fraction(1))]
    assert hnkac.Polynomial.from_json(a.to_json()) == a

    q = hnkac.Quiver.from_json('{"vertices":["1","2"],"arrows":[{"from":"1","to":"2","mult":2}]}')
    assert q == hnkac.Quiver.kronecker(2)
    assert json.loads(q.to_json())["arrows"][0]["mult"] == 2
    assert q.euler_form([1, 1], [1, 1]) == 0
    assert q.classify_root([2, 1]) == "real"
    assert hnkac.kac_polynomial(hnkac.Quiver.kronecker(1), [2, 1]).is_zero()

    k10 = hnkac.Quiver.kronecker(10)
    rows = hnkac.strata_report(k10, [3, 2], [2, -3])["rows"]
    row = next(r for r in rows if r["hn_type"] == [[2, 1], [1, 1]])
    assert (row["epsilon"], row["threshold"], row["codim_moment"]) == (1, 10, 24)
    assert [[3, 2]] in hnkac.hn_types(k10, [3, 2], [2, -3])

    d = hnkac.decompose(hnkac.Quiver.kronecker(4), [1, 1], [1, -1])
    total = hnkac.Polynomial([])
    for _key, p in d["buckets"]:
        total = total + p
    # (q − 1)·Σ buckets = φ_α·A
    phi = hnkac.Polynomial([1, -1]) * hnkac.Polynomial([1, -1])
    assert total * hnkac.Polynomial([-1, 1]) == phi * d["kac"]
    assert all(c["holds"] for c in d["checks"])

    shift = hnkac.verify_shift(hnkac.Quiver.kronecker(1), [2, 1], [1, -2], 3, 7)
    assert all(r["shifted_equal"] for r in shift["rows"] if r["key"]["kind"] == "hn")

    stab = hnkac.stabilization(hnkac.Quiver.kronecker(1), [1, 1], 1, 6, 3)
    assert stab["low_stable_from"] == 4

    o = hnkac.oracle(q, [1, 1], 3)
    assert (o["abs_indec_count"], o["engine_eval"], o["pass"]) == (4, 4, True)

    assert hnkac.epsilon([[3, 5], [1, 6], [6, 4]]) == 3
    assert hnkac.codim_moment(k10, [[2, 1], [1, 1]]) == 24
    assert hnkac.s0_commutant_dim(k10, [[2, 1], [1, 1]]) == 1

    for bad in (lambda: hnkac.kac_polynomial(q, [2, 2]), lambda: hnkac.Quiver(["a"], [("a", "a", 1)])):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    try:
        hnkac.oracle(hnkac.Quiver.kronecker(9), [3, 3], 5)
    except hnkac.GuardExceeded:
        pass
    else:
        raise AssertionError("expected GuardExceeded")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
