"""Smoke test for the stringlink_py extension module.

Build and run:

    cargo build -p stringlink-py --release
    cp target/release/libstringlink_py.so python/stringlink_py.so
    python3 python/smoke.py
"""

import sys

sys.path.insert(0, "python")
sys.path.insert(0, ".")

import stringlink_py as sl


def main() -> None:
    w = sl.whitehead(2)
    assert w.num_strands == 2
    assert w.crossing_count == 5
    assert w.linking_number(1, 2) == 0
    assert w.sato_levine(1, 2) == 1
    assert w.milnor([1, 1, 2, 2]) == 1
    assert w.mirror().sato_levine(1, 2) == -1

    assert sl.borromean().triple_linking(1, 2, 3) == 1
    assert sl.figure_eight_component().component_arf(1) == 1
    assert sl.twisted_hopf(1).classify_full_2comp() == (0, 0, 0, 1)
    assert sl.braid_generator_a(3, 1, 3).classify_linking() == [0, 1, 0]

    # Round trip through the text format.
    again = sl.StringLink(w.to_text())
    assert again == w
    assert repr(again) == "StringLink(strands=2, crossings=5)"

    # Group operations and the solvable-filtration verdicts.
    assert w.verdict() == "LinkingTrivialNot0Solvable; not 0.5-solvable (SL = 1)"
    square = w.stack(w)
    assert square.verdict() == "ZeroSolvable; not 0.5-solvable (SL = 2)"
    cancel = w.stack(w.inverse())
    assert cancel.classify_zero() == {
        "lk": [0],
        "triple": [],
        "sl_mod2": [0],
        "arf": [0, 0],
    }

    rep = sl.borromean().report()
    assert rep[(1, 2, 3)] == 1
    assert rep[(1, 2)] == 0

    try:
        sl.twisted_hopf(2).sato_levine(1, 2)
    except ValueError as e:
        assert "must vanish" in str(e)
    else:
        raise AssertionError("sato_levine accepted nonzero linking")

    print("smoke: ok")


if __name__ == "__main__":
    main()
