from fractions import Fraction

import pytest

from conifold_flop import linalg
from conifold_flop.paths import (POTENTIAL, FreePathElement, Path, Potential, cyclic_derivative,
                                 fpe, is_composable, relations, word_source, word_target)
from conifold_flop.truncated import truncated_algebra


def test_relation_words_composable():
    for w in ("xyz", "zyx", "yzw", "wzy", "zwx", "xwz", "wxy", "yxw"):
        assert is_composable(w)
    assert not is_composable("zwy")  # the misprinted word does not compose
    assert not is_composable("xx")


def test_path_endpoints():
    p = Path("xyz")
    assert p.source == 0 and p.target == 1
    assert word_source("yzw") == 1 and word_target("yzw") == 0
    with pytest.raises(ValueError):
        Path("xz")  # z cannot feed into x: both start at v0


def test_xy_is_composable_but_xz_is_not():
    assert is_composable("xy")
    assert not is_composable("xz")


def test_cyclic_derivatives():
    dx = cyclic_derivative(POTENTIAL, "x")
    assert dx == FreePathElement({"yzw": 1, "wzy": -1})
    dw = cyclic_derivative(POTENTIAL, "w")
    assert dw == FreePathElement({"xyz": 1, "zyx": -1})
    single = Potential([(1, "xyzw")])
    assert cyclic_derivative(single, "x") == fpe("yzw")


def test_relations_list():
    rels = relations()
    assert len(rels) == 4
    assert FreePathElement({"xyz": 1, "zyx": -1}) in rels
    for r in rels:
        words = r.words()
        assert len(words) == 2 and all(len(w) == 3 for w in words)
        assert r.grading() is not None  # homogeneous (source, target)
    assert {frozenset(r.coeffs) for r in rels} == {
        frozenset({"yzw", "wzy"}), frozenset({"zwx", "xwz"}),
        frozenset({"wxy", "yxw"}), frozenset({"xyz", "zyx"})}


def test_element_arithmetic_grading():
    e = fpe("xyz") - fpe("zyx")
    assert e.grading() == (0, 1)
    assert (fpe("x") * fpe("yx")).words() == ["xyx"]
    assert (fpe("y") * fpe("wz")).is_zero()  # non-composable concatenation
    assert 0 * fpe("x") == FreePathElement()


# --- truncation ---------------------------------------------------------


def _oracle_dim(source, length):
    """Independent check: exact row reduction of the relation span inside
    the degree-(source, length) word component."""
    from conifold_flop.truncated import _words_from

    rel_pairs = [tuple(sorted(r.coeffs)) for r in relations()]
    words = _words_from(source, length)
    index = {w: i for i, w in enumerate(words)}
    vectors = []
    for w in words:
        for i in range(length - 2):
            for w1, w2 in rel_pairs:
                if w[i:i + 3] == w1:
                    other = w[:i] + w2 + w[i + 3:]
                    row = [Fraction(0)] * len(words)
                    row[index[w]] += 1
                    row[index[other]] -= 1
                    vectors.append(tuple(row))
    return len(words) - linalg.rank(tuple(vectors), len(words))


@pytest.mark.parametrize("source,length,expected", [
    (0, 0, 1), (0, 2, 4), (0, 4, 9), (0, 1, 2), (0, 3, 6), (1, 2, 4), (1, 4, 9),
])
def test_truncation_dims_match_oracle(source, length, expected):
    A = truncated_algebra(8)
    target = source if length % 2 == 0 else 1 - source
    assert A.dim(source, target, length) == expected
    assert _oracle_dim(source, length) == expected


def test_hilbert_function_of_loop_components():
    A = truncated_algebra(8)
    for k in range(0, 5):
        assert A.dim(0, 0, 2 * k) == (k + 1) ** 2
        assert A.dim(1, 1, 2 * k) == (k + 1) ** 2


def test_dims_nondecreasing_in_cutoff():
    prev = {}
    for n in range(0, 9):
        dims = truncated_algebra(n).dims()
        for key, value in prev.items():
            assert dims.get(key, 0) == value  # homogeneous relations: stable per length
        prev = dims


def test_cutoff_zero_is_the_two_idempotents():
    A = truncated_algebra(0)
    assert sum(len(v) for v in A.basis.values()) == 2


def test_reduce_relations_to_zero():
    A = truncated_algebra(8)
    for r in relations():
        assert A.is_zero(r)
    assert A.class_of("yzw") == A.class_of("wzy")
    assert all(c == 0 for c in A.reduce(FreePathElement(), grading=(0, 0)))


def test_reduce_rejects_long_words():
    A = truncated_algebra(4)
    with pytest.raises(ValueError):
        A.reduce(fpe("xyxyx"))


def test_reduce_is_multiplicative():
    A = truncated_algebra(8)
    words = ["yx", "wz", "xyx", "x", "zwx"]
    for u in words:
        for v in words:
            if not is_composable(u) or not is_composable(v):
                continue
            uv = fpe(u) * fpe(v)
            if uv.is_zero():
                continue
            cu, cv = A.class_of(u), A.class_of(v)
            assert A.product(cu, cv) == A.class_of(next(iter(uv.coeffs)))


def test_cutoff_bounds():
    with pytest.raises(ValueError):
        truncated_algebra(13)
    with pytest.raises(ValueError):
        truncated_algebra(-1)
