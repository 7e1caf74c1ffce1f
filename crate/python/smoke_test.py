"""Smoke test for the `frt` Python bindings.

Build and install first:  pip install --no-build-isolation -e crates/py
"""

import json

import frt


def main():
    e0, f0, h0 = frt.LieElt.e(0), frt.LieElt.f(0), frt.LieElt.h(0)
    assert frt.bracket(e0, f0) == h0
    assert str(h0.bracket(e0)) == "2*e_0"

    a0, a1 = frt.OnsElt("A", 0), frt.OnsElt("A", 1)
    g1 = a1.bracket(a0)
    print("[A_1, A_0] =", g1)
    assert g1.image() == a1.image().bracket(a0.image())

    u = frt.UeaElt(e0) * frt.UeaElt(f0) - frt.UeaElt(f0) * frt.UeaElt(e0)
    assert u == frt.UeaElt(h0)

    for report in (
        frt.check_cybe(),
        frt.check_jacobi("onsager", 4),
        frt.check_dolan_grady("onsager"),
        frt.check_exchange("onsager", 4),
        frt.check_charge_commutativity("onsager", "quadratic", 2, 6),
    ):
        print(report.name, "PASS" if report.passed else "FAIL")
        assert report.passed, report.to_json()

    q = frt.build_quadratic_charge("onsager", 1, 6)
    print("t_1 has", len(q), "PBW terms")

    out = json.loads(frt.run("rmatrix"))
    assert out["summary"]["fail"] == 0, out["summary"]

    try:
        frt.check_jacobi("nonsense", 4)
    except ValueError as exc:
        print("rejected:", exc)
    else:
        raise AssertionError("unknown family accepted")
    print("ok")


if __name__ == "__main__":
    main()
