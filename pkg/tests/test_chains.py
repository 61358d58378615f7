from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from progdisc.chains import (
    ChainPair,
    build_chain_pair,
    chain_size,
    fixed_index_range,
    invariant_from_gram,
    invariant_S,
    invariant_table,
    verify_mirror,
)
from progdisc.exactnum import SqrtRational
from progdisc.symbasis import ProblemSize, Side, all_basis_vectors

S23 = ProblemSize(2, 3)
S41 = ProblemSize(4, 1)
S43 = ProblemSize(4, 3)

APPENDIX_V = [
    {(4, 0, 0), (3, 1, 0)},
    {(0, 0, 4)},
    {(1, 0, 3), (0, 1, 3)},
    {(3, 0, 1), (2, 1, 1)},
    {(2, 0, 2), (1, 1, 2)},
]
APPENDIX_VP = [
    {(0, 0, 4), (0, 1, 3)},
    {(4, 0, 0)},
    {(3, 0, 1), (3, 1, 0)},
    {(1, 0, 3), (1, 1, 2)},
    {(2, 0, 2), (2, 1, 1)},
]


def test_chain_size_examples():
    assert chain_size(0, S23) == 1
    assert chain_size(1, S23) == 2
    sizes = [chain_size(N, S23) for N in range(8)]
    assert sizes == [1, 2, 3, 3, 3, 3, 2, 1]
    assert sum(sizes) == S23.D
    with pytest.raises(ValueError):
        chain_size(8, S23)


def test_chain_sizes_sum_to_dimension():
    for n in range(1, 13):
        for m in range(1, 13):
            size = ProblemSize(n, m)
            assert sum(chain_size(N, size) for N in range(size.N_max + 1)) == size.D
            assert len(fixed_index_range(0, size)) == 1


def test_appendix_example():
    chain = build_chain_pair(4, S41)
    assert chain.order() == (0, 4, 3, 1, 2)
    assert [set(v.coefficients) for v in chain.elements_v] == APPENDIX_V
    assert [set(v.coefficients) for v in chain.elements_vp] == APPENDIX_VP
    assert verify_mirror(chain)
    # <v1|v'2> as written out for the worked example
    assert chain.gram[0][1] == SqrtRational.sqrt_of(Fraction(1, 5))
    assert chain.gram[0][2] == SqrtRational.sqrt_of(Fraction(4, 5) * Fraction(1, 5))


@pytest.mark.parametrize("size", [S23, S41, S43, ProblemSize(1, 1)])
def test_end_chains_are_shared_brackets(size):
    for N in (0, size.N_max):
        chain = build_chain_pair(N, size)
        assert chain.size_L == 1
        assert chain.gram == ((SqrtRational.from_rational(1),),)


def test_swapped_chain_breaks_mirror():
    chain = build_chain_pair(4, S41)
    vp = list(chain.elements_vp)
    vp[0], vp[1] = vp[1], vp[0]
    broken = ChainPair.from_elements(4, S41, chain.elements_v, vp)
    assert not verify_mirror(broken)


@pytest.mark.parametrize("n,m", [(1, 1), (2, 3), (3, 2), (4, 1), (4, 3)])
def test_chains_partition_the_bases(n, m):
    size = ProblemSize(n, m)
    seen_v, seen_vp = Counter(), Counter()
    for N in range(size.N_max + 1):
        chain = build_chain_pair(N, size)
        assert chain.size_L == chain_size(N, size)
        assert verify_mirror(chain)
        seen_v.update(v.jk for v in chain.elements_v)
        seen_vp.update(v.jk for v in chain.elements_vp)
        # overlaps outside the chain vanish
        for v in chain.elements_v:
            assert all(b.N == N for b in v.terms)
    assert seen_v == Counter(v.jk for v in all_basis_vectors(Side.H1, size))
    assert seen_vp == Counter(v.jk for v in all_basis_vectors(Side.H2, size))


def test_invariant_examples():
    for N in (4, 5, 6, 7):
        assert invariant_S(N, S43) == Fraction(22, 35)
    assert invariant_S(0, S43) == 1
    assert invariant_from_gram(build_chain_pair(0, S23)) == 1
    chain = build_chain_pair(1, S23)
    assert chain.gram[0][0] == SqrtRational.from_rational(Fraction(3, 5))
    assert chain.gram[1][1].is_zero()
    assert invariant_from_gram(chain) == Fraction(3, 5)
    assert invariant_from_gram(build_chain_pair(4, S41)) == invariant_S(4, S41)


def test_invariant_two_paths_agree():
    for n in range(1, 9):
        for m in range(1, 9):
            size = ProblemSize(n, m)
            for N in range(size.N_max + 1):
                assert invariant_from_gram(build_chain_pair(N, size)) == invariant_S(N, size)


def test_invariant_table_symmetries():
    for n in range(1, 9):
        for m in range(1, 9):
            size = ProblemSize(n, m)
            values = invariant_table(size).values
            assert all(values[N] == values[size.N_max - N] for N in values)
            assert len({values[N] for N in range(n, n + m + 1)}) == 1


@pytest.mark.parametrize("n,m", [(2, 3), (3, 1), (4, 3)])
def test_conjugate_chains_share_gram_entries(n, m):
    size = ProblemSize(n, m)
    for N in range(size.N_max + 1):
        a = Counter(g for row in build_chain_pair(N, size).gram for g in row)
        b = Counter(g for row in build_chain_pair(size.N_max - N, size).gram for g in row)
        assert a == b


def test_diagonal_entries_are_rational():
    for n, m in [(2, 3), (4, 3), (5, 2)]:
        size = ProblemSize(n, m)
        for N in range(size.N_max + 1):
            chain = build_chain_pair(N, size)
            assert all(chain.gram[i][i].is_rational() for i in range(chain.size_L))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_order_independence(n, m, data):
    """Any common ordering of both chains is mirror-symmetric with the same spectrum."""
    size = ProblemSize(n, m)
    N = data.draw(st.integers(0, size.N_max))
    canonical = build_chain_pair(N, size)
    order = data.draw(st.permutations(list(fixed_index_range(N, size))))
    other = build_chain_pair(N, size, order=order)
    assert verify_mirror(other)
    assert invariant_from_gram(other) == invariant_from_gram(canonical)
    np.testing.assert_allclose(
        np.linalg.eigvalsh(other.gram_float()), np.linalg.eigvalsh(canonical.gram_float()), atol=1e-12
    )


def test_bad_order_rejected():
    with pytest.raises(ValueError):
        build_chain_pair(4, S41, order=[0, 1, 2, 3])
