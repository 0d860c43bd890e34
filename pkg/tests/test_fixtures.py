from __future__ import annotations

import numpy as np
import pytest

from chevalley_b.fixtures import check_all, check_blocks, expected_weyl_block, fixture, fixtures, generated


@pytest.fixture(scope="module")
def report():
    return check_all()


def test_every_fixture_matches_after_corrections(report):
    assert report.all_match
    assert report.silent_divergences() == []


def test_correction_counts(report):
    counts = {r.name: r.corrections for r in report.results if not r.name.startswith("w~")}
    assert counts["w_1"] == 4
    assert counts["w_2"] == 4
    assert counts["w_3"] == 10
    assert counts["X_1"] == 0
    assert counts["X_3"] == 4


def test_x_displays_carry_the_opposite_sign(report):
    signs = {r.name: r.sign for r in report.results}
    assert signs["X_1"] == signs["X_3"] == -1
    assert signs["w_1"] == 1
    assert "display = -ad" in next(r for r in report.results if r.name == "X_1").summary()


def test_printed_entries_are_kept_verbatim():
    f = fixture("X_3")
    assert f.entry("alpha_5", "alpha_2") == 2
    for c in f.corrections:
        assert f.entry(c.row, c.col) == c.printed
        assert f.entry(c.row, c.col, corrected=True) == c.corrected


def test_corrected_w_fixtures_equal_generated():
    for f in fixtures():
        if f.name.startswith("w_"):
            assert np.array_equal(f.corrected(), generated(f.name))


def test_diagonal_fixtures_are_verbatim(report):
    for r in report.results:
        if r.name.startswith("h_alpha"):
            assert r.verbatim


def test_weyl_blocks_for_ranks_two_to_five():
    results = check_blocks()
    assert len(results) == 2 + 3 + 4 + 5
    assert all(r.matches for r in results)


def test_expected_block_shapes():
    assert expected_weyl_block(3, 1).tolist() == [[-1, 1, 0], [0, 1, 0], [0, 0, 1]]
    assert expected_weyl_block(3, 3).tolist() == [[1, 0, 0], [0, 1, 0], [0, 2, -1]]


def test_unknown_fixture():
    with pytest.raises(KeyError):
        fixture("w_9")
