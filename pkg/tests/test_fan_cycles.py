import itertools
import random

import pytest

from vminor.canon import is_isomorphic
from vminor.extraction import (
    ExtractionError, FanView, consecutive_fan_to_cycles, even_spaced_fan_to_cycles, fan_potential,
    incomplete_fan_to_cycle, infer_fan, kl_fan_reduce, odd_gap_extract,
)
from vminor.generators import cycle, fan, fan_from_gaps, incomplete_fan, kl_fan, random_kl_fan
from vminor.graph import Graph
from vminor.search import Kind, is_pivot_minor, verify_witness


def _is(cert, g):
    return cert is not None and verify_witness(cert) and is_isomorphic(cert.pattern, g)


def test_infer_fan():
    v = infer_fan(incomplete_fan(5, [0, 2, 5]))
    assert v == FanView(6, (0, 1, 2, 3, 4, 5))
    with pytest.raises(ExtractionError):
        infer_fan(Graph.empty(3))


def test_odd_gap_base_case():
    cert = odd_gap_extract(incomplete_fan(5, [0, 5]))
    assert cert.trace == () and _is(cert, cycle(7))


@pytest.mark.parametrize("idx, k", [((0, 3, 4), 4), ((0, 3, 5, 6), 4), ((0, 5, 7, 8), 6)])
def test_odd_gap(idx, k):
    cert = odd_gap_extract(incomplete_fan(idx[-1], idx))
    assert _is(cert, cycle(k)) and cert.kind is Kind.PIVOT


def test_odd_gap_parity_precondition():
    with pytest.raises(ExtractionError):
        odd_gap_extract(incomplete_fan(5, [0, 3, 5]))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_consecutive(k):
    odd, even = consecutive_fan_to_cycles(k)
    assert _is(odd, cycle(2 * k + 1)) and _is(even, cycle(2 * k + 2))
    assert odd.host == fan(4 * k)


def test_consecutive_k1_needs_no_pivot():
    odd, _ = consecutive_fan_to_cycles(1)
    assert all(op.kind == "del" for op in odd.trace)


@pytest.mark.parametrize("gaps, k, sizes", [
    ((2, 2), 1, [4]),
    ((2, 2, 2, 2, 2), 2, [6]),
    ((2, 3), 1, [4, 3]),
    ((2, 2, 2, 1), 2, [6, 5]),
])
def test_even_spaced(gaps, k, sizes):
    certs = even_spaced_fan_to_cycles(gaps, k)
    assert [c.pattern.order for c in certs] == sizes
    assert all(_is(c, cycle(s)) for c, s in zip(certs, sizes))


def test_fan_potential():
    assert fan_potential([1, 1, 2, 1, 1, 1]) == (2, 5, 3)
    assert fan_potential([2, 1]) == (0, 1, 0)


def test_kl_fan_full_fan():
    g = fan_from_gaps([1] * 4)
    cert = kl_fan_reduce(g, 4, 4)
    assert _is(cert, fan(4)) and all(op.kind == "del" for op in cert.trace)


def test_kl_fan_examples():
    # (1, 4)-fan: leading odd gap, then four odd gaps in total
    assert _is(kl_fan_reduce(kl_fan(1, [1, 2, 2, 1, 1, 1], 4), 1, 4), fan(2))
    g = kl_fan(2, [1, 3, 4, 1, 1, 1], 5)
    cert = kl_fan_reduce(g, 2, 5)
    assert _is(cert, fan(3)) and any(op.kind == "pv" for op in cert.trace)


def test_kl_fan_rejects_wrong_gaps():
    with pytest.raises(ExtractionError):
        kl_fan_reduce(fan_from_gaps([2, 1, 1]), 1, 2)


@pytest.mark.parametrize("seed", range(30))
def test_kl_fan_random(seed):
    rng = random.Random(seed)
    k = rng.randint(1, 3)
    l = rng.randint(k, 8)
    g, gaps = random_kl_fan(k, l, 5, rng)
    assert _is(kl_fan_reduce(g, k, l), fan(k + (l - k) // 3))


@pytest.mark.parametrize("n, s, k", [
    (3, [0, 3], 3),
    (4, [0, 1, 2, 3, 4], 4),
    (5, [0, 2, 5], 3),
])
def test_incomplete_fan_examples(n, s, k):
    assert _is(incomplete_fan_to_cycle(incomplete_fan(n, s), k), cycle(k))


def test_incomplete_fan_parity_mismatch():
    with pytest.raises(ExtractionError):
        incomplete_fan_to_cycle(incomplete_fan(4, [0, 4]), 3)


def test_incomplete_fan_all_k3_up_to_7():
    for n in (1, 3, 5, 7):
        for mid in itertools.product((0, 1), repeat=n - 1):
            s = [0, n] + [i + 1 for i, b in enumerate(mid) if b]
            g = incomplete_fan(n, s)
            assert _is(incomplete_fan_to_cycle(g, 3), cycle(3))


@pytest.mark.parametrize("k", [5, 6, 7])
def test_long_full_fans_give_cycles(k):
    n = 4 * k + k % 2
    g = incomplete_fan(n, range(n + 1))
    cert = incomplete_fan_to_cycle(g, k)
    assert _is(cert, cycle(k))


def test_incomplete_fan_none_is_possible():
    # F_3 is too small for C_4 and the case analysis says so
    assert incomplete_fan_to_cycle(incomplete_fan(2, [0, 1, 2]), 4) is None
    assert is_pivot_minor(cycle(4), fan(3)) is None
