"""Smoke tests for the compiled module and the CLI."""

import json
import os
import subprocess

import pytest

import baire


def test_points_and_distance():
    x = baire.Point([0, 0, 1], 0)
    y = baire.Point([0, 0, 2], 0)
    d = baire.distance(x, y)
    assert not d.is_infinite
    assert d.exponent == 2

    # canonical form: a stem ending in the tail collapses
    assert baire.Point([0, 0], 0) == baire.Point([], 0)
    assert baire.distance(x, x).is_infinite


def test_word_meet_and_opens():
    assert baire.word_meet([0, 1, 2], [0, 1, 5]) == [0, 1]
    assert baire.in_basic_open([0, 0], baire.Point([0], 0))
    assert not baire.in_basic_open([1], baire.Point([0], 0))


def test_hom_combinators():
    parity = baire.TreeHom.parity(baire.Alphabet.countable())
    assert parity.apply([2, 5, 0]) == [0, 1, 0]

    prepend = baire.TreeHom.prepend(baire.Alphabet.countable(), [7])
    assert prepend.apply([0, 1]) == [7, 0, 1]
    assert prepend.level_shift == 1

    composed = baire.compose_homs(
        parity, baire.TreeHom.prepend(baire.Alphabet.countable(), [2]))
    assert composed.apply([1]) == [0, 1]


def test_lipschitz_checks():
    ok = baire.PartialMap([
        (baire.Point([0, 0], 0), baire.Point([3, 1], 0)),
        (baire.Point([0, 1], 0), baire.Point([3, 2], 0)),
    ])
    assert baire.check_lipschitz(ok).ok
    assert baire.check_isometry(ok).ok

    bad = baire.PartialMap([
        (baire.Point([0, 0], 0), baire.Point([3], 0)),
        (baire.Point([0, 1], 0), baire.Point([4], 0)),
    ])
    verdict = baire.check_lipschitz(bad)
    assert not verdict.ok
    assert verdict.witness.k == 0

    with pytest.raises(baire.NotLipschitzError):
        baire.induced_hom(bad, 2)


def test_level_analysis_identity():
    report = baire.level_analysis(
        baire.TreeHom.identity(baire.Alphabet.finite(2)), 3)
    assert report.all_injective and report.all_surjective


def test_back_and_forth_run():
    two = baire.Alphabet.finite(2)
    A = baire.EventuallyConstantDense(two, 0, seed=3)
    B = baire.EventuallyConstantDense(two, 1, seed=4)
    result, transcript = baire.bnf_run(A, B, 40)
    assert baire.check_isometry(result).ok
    assert 41 <= len(result) <= 82
    assert all(step.agreement >= 0 for step in transcript)
    for i in range(41):
        assert result.contains_domain(A.enumerate(i))
        assert result.contains_range(B.enumerate(i))


def test_parity_families():
    odd = baire.gen_family(baire.ParityKind.Odd, [[], [0]], 6,
                           baire.Alphabet.countable(), 11)
    even = baire.gen_family(baire.ParityKind.Even, [[], [0]], 6,
                            baire.Alphabet.countable(), 12)
    assert baire.family_violation(odd) is None
    cert = baire.certify_no_isometry(odd, even)
    assert cert.isometric_pairs == 0
    assert cert.pairs_checked > 0


def test_slaloms():
    points = [baire.Point([a, b], 0) for a in (0, 1) for b in (0, 1)]
    sample = baire.BoundedSample([], points)
    slalom = baire.slalom_from_hom(
        baire.TreeHom.identity(baire.Alphabet.countable()), sample, 2)
    assert slalom.at(0) == {0, 1}
    assert baire.slalom_width_ok(slalom, baire.WidthProfile.pow_two_plus_one())
    assert baire.captures(slalom, baire.Point([], 0), baire.CaptureMode.Total)


def test_forcing_roundtrip():
    A = baire.EventuallyConstantDense(baire.Alphabet.countable(), 0)
    B = baire.EventuallyConstantDense(baire.Alphabet.countable(), 0)
    empty = baire.Condition(baire.PartialMap())
    q = baire.extend_condition(empty, baire.Point([4, 4], 0),
                               baire.Point([6], 0), A, B)
    assert baire.is_condition(q.map).ok
    assert len(q) == 2

    fan = [
        baire.Condition(baire.PartialMap([(baire.Point([9], 0),
                                           baire.Point([l, 5], 0))]))
        for l in range(5)
    ]
    result = baire.find_antichain(fan, 5)
    assert result.exact and result.meets_min_size
    assert len(result.indices) == 5


def test_selftest_json():
    report = json.loads(baire.selftest(seed=2, trials=40, depth=5))
    assert report["all_ok"] is True
    assert {s["name"] for s in report["suites"]} >= {"metric_core", "forcing"}


@pytest.fixture(scope="module")
def cli_path():
    path = os.environ.get("BAIRE_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("BAIRE_CLI not set")
    return path


def test_cli_check_isometry(cli_path):
    payload = json.dumps([
        [{"stem": [0], "tail": 1}, {"stem": [7], "tail": 0}],
        [{"stem": [1], "tail": 1}, {"stem": [7], "tail": 0}],
    ])
    proc = subprocess.run([cli_path, "check-isometry"], input=payload,
                          capture_output=True, text=True)
    assert proc.returncode == 1
    verdict = json.loads(proc.stdout)
    assert verdict["ok"] is False


def test_cli_malformed_input(cli_path):
    proc = subprocess.run([cli_path, "tree-width"], input="not json",
                          capture_output=True, text=True)
    assert proc.returncode == 2


def test_cli_selftest_deterministic(cli_path):
    args = [cli_path, "selftest", "--seed", "5", "--trials", "40", "--depth", "5"]
    first = subprocess.run(args, capture_output=True, text=True)
    second = subprocess.run(args, capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
