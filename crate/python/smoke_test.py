"""Smoke test for the `trilie` extension module.

Build with `cargo build -p trilie-python --release`, then copy
target/release/libtrilie.so to trilie.so somewhere on PYTHONPATH.
"""

import json
from fractions import Fraction

import trilie


def main():
    heis = trilie.Algebra(2, 3, {(1, 2): {3: 1}})
    assert heis.verify()
    assert heis.arity == 2 and heis.dim == 3
    assert heis.brackets() == {(1, 2): {3: Fraction(1)}}
    assert heis.derived_series_dims() == [3, 1, 0]
    assert heis.center() == [[0, 0, 1]]

    m8 = trilie.Algebra.from_catalog("M8")
    assert len(m8.trace_space()) >= 1
    induced = m8.induce([1, 0, 1, 0])
    assert induced.arity == 3 and induced.verify()
    assert m8.cohomology("lie", "adjoint", 1) == (4, 4, 0)
    assert induced.cohomology("trilie", "adjoint", 1) == (9, 5, 4)

    found = induced.recognize()
    assert found is not None
    i0, lie, tau = found
    assert lie.induce(tau) == induced

    back = trilie.Algebra.from_json(induced.to_json("m8_induced"))
    assert back == induced
    assert json.loads(induced.to_json())["arity"] == 3

    m3 = trilie.Algebra.from_catalog("M3_a", {"a": Fraction(1, 2)})
    assert m3.verify()

    try:
        trilie.Algebra(2, 3, {(1, 2): {1: 1}, (2, 3): {2: 1}, (1, 3): {3: "x"}})
    except ValueError:
        pass
    else:
        raise AssertionError("bad coefficient accepted")

    flags = dict(trilie.induced_classification())
    assert flags["T5.5a"] == "not-induced"
    assert flags["T5.1"] == "induced"
    assert "M8" in trilie.catalog_ids(arity=2, dim=4)
    assert trilie.table6("M4").startswith("M4")

    ext = heis.central_extend({(1, 3): 1})
    assert ext.dim == 4 and ext.verify()
    assert heis.is_trivial_extension({(1, 2): 1})

    print("smoke test passed")


if __name__ == "__main__":
    main()
