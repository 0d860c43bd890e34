"""Transcribed B_3 matrices and the Cartan blocks of w_{alpha_i}(1), checked against generated ones.

The transcriptions live in ``data/b3_fixtures.json`` exactly as printed
(terms e_{a,b} with coefficients).  Each deviation from the generated matrix
is listed there as a correction with the computation that forces it; the
check reports any entry that differs without such a note.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

import numpy as np

from .group import h_elem, w_elem
from .lie import BasisIndex, ad_matrix
from .rings import PrimeField
from .relations import _lift, weyl_block
from .roots import RootSystem

_CHECK_RING = PrimeField(101)


@lru_cache(maxsize=None)
def load_data() -> dict:
    text = resources.files("chevalley_b").joinpath("data/b3_fixtures.json").read_text()
    return json.loads(text)


def label_index(rs: RootSystem, label: str) -> int:
    """Position of "alpha_k", "-alpha_k" or "h_k" (k-th positive root, 1-based)."""
    bi = BasisIndex(rs)
    if label.startswith("h_"):
        return bi.h_index(int(label[2:]))
    r = rs.positive[int(label.split("_")[1]) - 1]
    return bi.root_index(-r if label.startswith("-") else r)


@dataclass
class Correction:
    row: str
    col: str
    printed: int
    corrected: int
    note: str


@dataclass
class Fixture:
    """A printed matrix with its documented corrections; ``sign`` relates it to the generated one."""

    name: str
    rank: int
    printed: np.ndarray
    corrections: list[Correction] = field(default_factory=list)
    sign: int = 1
    generated_by: str = ""

    def corrected(self) -> np.ndarray:
        rs = RootSystem(self.rank)
        out = self.printed.copy()
        for c in self.corrections:
            i, j = label_index(rs, c.row), label_index(rs, c.col)
            if out[i, j] != c.printed:
                raise ValueError(f"{self.name}: correction at ({c.row}, {c.col}) does not match the printed entry")
            out[i, j] = c.corrected
        return out

    def entry(self, row: str, col: str, corrected: bool = False) -> int:
        rs = RootSystem(self.rank)
        m = self.corrected() if corrected else self.printed
        return int(m[label_index(rs, row), label_index(rs, col)])


def _corrections(raw: list[dict]) -> list[Correction]:
    return [Correction(c["row"], c["col"], c["printed"], c["corrected"], c["note"]) for c in raw]


def fixtures() -> list[Fixture]:
    data = load_data()
    rs = RootSystem(data["rank"])
    out = []
    for f in data["fixtures"]:
        m = np.zeros((rs.n, rs.n), dtype=np.int64)
        for c, a, b in f["terms"]:
            m[label_index(rs, a), label_index(rs, b)] += c
        out.append(Fixture(f["name"], rs.rank, m, _corrections(f["corrections"]), f["sign"], f["generated"]))
    for d in data["diagonals"]:
        out.append(Fixture(d["name"], rs.rank, np.diag(np.array(d["diagonal"], dtype=np.int64)),
                           _corrections(d["corrections"]), 1, d["generated"]))
    return out


def fixture(name: str) -> Fixture:
    for f in fixtures():
        if f.name == name:
            return f
    raise KeyError(name)


def _as_ints(m) -> np.ndarray:
    return np.array([[_lift(m[i, j]) for j in range(m.n)] for i in range(m.n)], dtype=np.int64)


def generated(name: str) -> np.ndarray:
    """The matrix a fixture is compared against, as integers (B_3)."""
    rs = RootSystem(3)
    a = rs.simple
    if name.startswith("w_"):
        return _as_ints(w_elem(rs, a[int(name[2:]) - 1], 1, _CHECK_RING).matrix)
    if name.startswith("X_"):
        return ad_matrix(rs, a[int(name[2:]) - 1]).astype(np.int64)
    if name.startswith("h_alpha_"):
        return _as_ints(h_elem(rs, a[int(name[8:].split("(")[0]) - 1], -1, _CHECK_RING).matrix)
    raise KeyError(name)


@dataclass
class FixtureResult:
    name: str
    verbatim: bool          # printed display equals the generated matrix (up to ``sign``)
    matches: bool           # after the recorded corrections
    corrections: int
    silent: list[tuple[str, str, int, int]]   # (row, col, display, generated) not covered by a note
    sign: int = 1

    def summary(self) -> str:
        state = "match" if self.matches else "MISMATCH"
        how = "verbatim" if self.verbatim else f"{self.corrections} corrected entries"
        if self.sign == -1:
            how += ", display = -ad"
        return f"{self.name}: {state} ({how})"


@dataclass
class FixtureReport:
    results: list[FixtureResult]

    @property
    def all_match(self) -> bool:
        return all(r.matches for r in self.results)

    def silent_divergences(self) -> list[tuple[str, str, str, int, int]]:
        return [(r.name, *d) for r in self.results for d in r.silent]

    def to_json(self) -> list[dict]:
        return [{"name": r.name, "match": r.matches, "verbatim": r.verbatim,
                 "corrections": r.corrections, "silent": [list(d) for d in r.silent]} for r in self.results]


def _compare(name: str, printed: np.ndarray, corrected: np.ndarray, gen: np.ndarray,
             sign: int, labels: list[str], ncorr: int) -> FixtureResult:
    silent = []
    for i, j in zip(*np.nonzero(sign * corrected != gen)):
        silent.append((labels[i], labels[j], int(corrected[i, j]), int(sign * gen[i, j])))
    return FixtureResult(name, bool(np.array_equal(sign * printed, gen)), not silent, ncorr, silent, sign)


def block_fixtures() -> list[dict]:
    return load_data()["cartan_blocks"]


def expected_weyl_block(rank: int, i: int) -> np.ndarray:
    """The printed w~_i: identity except the 2x2 or 3x3 pattern at i-1, i, i+1."""
    blocks = {b["name"]: np.array(b["block"], dtype=np.int64) for b in block_fixtures()}
    out = np.eye(rank, dtype=np.int64)
    if i == 1:
        out[0:2, 0:2] = blocks["w~_1"]
    elif i == rank:
        out[rank - 2:rank, rank - 2:rank] = blocks["w~_l"]
    else:
        out[i - 2:i + 1, i - 2:i + 1] = blocks["w~_i"]
    return out


def check_blocks(ranks=(2, 3, 4, 5)) -> list[FixtureResult]:
    out = []
    for l in ranks:
        rs = RootSystem(l)
        labels = [f"h_{k}" for k in range(1, l + 1)]
        for i in range(1, l + 1):
            exp = expected_weyl_block(l, i)
            got = weyl_block(rs, i).astype(np.int64)
            out.append(_compare(f"w~_{i} (B{l})", exp, exp, got, 1, labels, 0))
    return out


def check_all() -> FixtureReport:
    """Every B_3 fixture against the generated matrix, then the w~_i blocks for l = 2..5."""
    rs = RootSystem(3)
    labels = load_data()["basis"]
    results = []
    for f in fixtures():
        results.append(_compare(f.name, f.printed, f.corrected(), generated(f.name), f.sign, labels,
                                len(f.corrections)))
    results += check_blocks()
    assert len(labels) == rs.n
    return FixtureReport(results)
