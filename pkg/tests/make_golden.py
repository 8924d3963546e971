"""Regenerate tests/golden/*.txt from the recursive definition of the divided powers.

Run by hand only when the element text format changes; the files are checked in.
"""
from pathlib import Path

from covering_serre.idivided import IdpSpec, idp_recursive
from covering_serre.rank1 import render_element

HERE = Path(__file__).parent / "golden"
WEIGHTS = {"ev": range(-6, 7, 2), "odd": range(-7, 6, 2)}


def lines(parity):
    for n in (2, 3, 4):
        for m in WEIGHTS[parity]:
            yield f"{parity} n={n} m={m} :: {render_element(idp_recursive(IdpSpec(parity, n), m))}"


if __name__ == "__main__":
    for parity in WEIGHTS:
        (HERE / f"examples_{parity}.txt").write_text("\n".join(lines(parity)) + "\n")
