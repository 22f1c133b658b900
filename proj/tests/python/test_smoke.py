from fractions import Fraction
from pathlib import Path

import pytest

import flowzeta

DATA = Path(__file__).resolve().parents[2] / "data"


@pytest.fixture(scope="module")
def endo():
    return (DATA / "ay_endomorphism.txt").read_text()


def read_matrix():
    rows = []
    for line in (DATA / "ay_matrix.txt").read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            rows.append([int(x) for x in line.split()])
    return rows


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def test_snf_certificate():
    m = read_matrix()
    r = flowzeta.smith_normal_form(m)
    assert r["diagonal"] == [1, 1, 1, 1, 1, 2, 0]
    assert matmul(matmul(r["U"], m), r["V"]) == r["D"]
    c = flowzeta.cokernel(m)
    assert c["torsion"] == [2] and c["free_rank"] == 1


def test_big_integers_round_trip():
    big = 10**40 + 7
    assert flowzeta.determinant([[big, 0], [0, -1]]) == -big


def test_zeta(endo):
    z = flowzeta.zeta(endo)
    assert z["reduced"] == "1 - v*t^2 - 4*v*t^3 - v*t^4 + v^2*t^6"
    assert z["denominator"] == "1 - t"
    assert z["F1"][6][1] == "-v^-1"


def test_sections(endo):
    assert flowzeta.sections_with_degree(endo, 2) == []
    six = flowzeta.sections_with_degree(endo, 6)
    assert [(s["a"], s["b"]) for s in six] == [(-3, 2), (0, 1)]
    degree, witnesses = flowzeta.min_section_degree(endo)
    assert degree == 4 and (witnesses[0]["a"], witnesses[0]["b"]) == (-1, 1)
    rows = flowzeta.genus_search(endo, 4, 10)
    assert len(rows) == 42 and not any(r["divisible"] for r in rows)


def test_roots_and_division():
    lo, hi = flowzeta.largest_real_root([-1, -1, -1, 1])
    assert isinstance(lo, Fraction) and hi - lo <= Fraction(1, 10**9)
    assert abs(float(lo) - 1.839286755) < 1e-8
    assert flowzeta.exact_quotient([1, 0, -1, -4, -1, 0, 1], [-1, -1, -1, 1]) == [-1, 1, 1, 1]
    assert flowzeta.exact_quotient([1, 0, 0, -1, -4, -1, 0, 0, 1], [-1, -1, -1, -1, 1]) is None


def test_ay():
    orbit = flowzeta.ay_verify_orbit()
    assert orbit["h2_returns"] and orbit["h_moves"]
    assert orbit["x0_region"] == "R3" and orbit["h_x0_region"] == "R1"
    assert flowzeta.ay_stretch_certificate()["vanishes_at_inverse_alpha"]


def test_words_and_errors():
    checks = flowzeta.verify_words((DATA / "ay_generation_words.txt").read_text())
    holds = {c["label"]: c["holds"] for c in checks}
    assert holds["solved-5"] and holds["solved-6"]
    assert not holds["stated-5"]
    with pytest.raises(flowzeta.ParseError):
        flowzeta.zeta("a b\na -> a q\nb -> b\n")
    with pytest.raises(flowzeta.DegenerateQuotient):
        flowzeta.zeta("a\na -> a a\n")
