import random

import pytest

from vminor.canon import is_isomorphic
from vminor.extraction import ExtractionError, attach_ek, ek_gadget_to_fan
from vminor.generators import complete, fan, path, random_connected, star
from vminor.search import verify_witness


def run(h, vs, k):
    host, hv, leaf_map = attach_ek(h, vs)
    return ek_gadget_to_fan(host, hv, leaf_map, k)


def test_path_gives_ladder_case():
    res = run(path(9), list(range(9)), 2)
    assert res.case == "ladder" and is_isomorphic(res.certificate.pattern, fan(2))


def test_star_independent_branch():
    res = run(star(8), list(range(9)), 3)
    assert res.case == "star" and verify_witness(res.certificate)
    assert not any(op.kind == "lc" and op.args == (8,) for op in res.certificate.trace)


def test_clique_branch_starts_with_lc():
    res = run(complete(9), list(range(9)), 3)
    assert res.case == "star" and verify_witness(res.certificate)
    assert any(op.kind == "lc" for op in res.certificate.trace)


@pytest.mark.parametrize("k", [2, 3])
def test_ladder_for_longer_fans(k):
    n = 2 * (k - 1) ** 2 + 1
    res = run(path(4 * n), list(range(4 * n)), k)
    assert res is not None and is_isomorphic(res.certificate.pattern, fan(k))


def test_gadget_checks():
    host, hv, leaf_map = attach_ek(path(3), [0, 1, 2])
    bad = [(v, x, y) for (v, x, _), (_, _, y) in zip(leaf_map, leaf_map[::-1])]
    with pytest.raises(ExtractionError):
        ek_gadget_to_fan(host, hv, bad, 2)
    with pytest.raises(ExtractionError):
        attach_ek(path(3), [0, 0, 1])


@pytest.mark.parametrize("seed", range(25))
def test_random_hosts(seed):
    rng = random.Random(seed)
    h = random_connected(12, 0.25, seed)
    vs = rng.sample(h.labels, 10)
    res = run(h, vs, 3)
    if res is not None:
        assert verify_witness(res.certificate) and is_isomorphic(res.certificate.pattern, fan(3))
