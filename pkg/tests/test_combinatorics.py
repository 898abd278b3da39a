"""Index sets A and T, split indices, and their exact lemmas."""

import random

import pytest

from periodkit import (
    PpClassError,
    RegularMotiveData,
    set_A,
    set_T,
    split_indices,
    verify_cardinality_lemma,
)
from periodkit.sampling import random_pp_free_pair

M = RegularMotiveData("M", 1, (1, 0))
MP = RegularMotiveData("M'", 0, (1,))


class TestSets:
    def test_worked_example(self):
        assert set_A(M, MP).members == frozenset({(1, 1), (2, 1)})
        assert set_T(M, MP).members == frozenset()

    def test_rank_one_pair(self):
        m = RegularMotiveData("M", 0, (1,))
        mp = RegularMotiveData("M'", 0, (0,))
        assert set_A(m, mp).members == frozenset({(1, 1)})
        assert set_T(m, mp).members == frozenset()

    def test_tie_raises_with_indices(self):
        m = RegularMotiveData("M", 0, (0,))
        with pytest.raises(PpClassError) as err:
            set_A(m, m)
        assert "(1,1)" in str(err.value)

    def test_duality_on_random_pairs(self):
        rng = random.Random(21)
        for _ in range(200):
            m, mp = random_pp_free_pair(rng, 4)
            a, t = set_A(m, mp), set_T(m, mp)
            for tt in range(1, m.rank + 1):
                for uu in range(1, mp.rank + 1):
                    assert ((tt, uu) in t.members) == (
                        (m.rank + 1 - tt, mp.rank + 1 - uu) not in a.members
                    )

    def test_tableau_on_random_pairs(self):
        rng = random.Random(22)
        for _ in range(200):
            m, mp = random_pp_free_pair(rng, 4)
            assert set_A(m, mp).is_tableau()


class TestSplitIndices:
    def test_worked_example(self):
        assert split_indices(M, MP).values == (0, 0, 1)
        assert split_indices(MP, M).values == (0, 2)

    def test_sum_and_conjugation_on_random_pairs(self):
        rng = random.Random(23)
        for _ in range(200):
            m, mp = random_pp_free_pair(rng, 4)
            sp = split_indices(m, mp)
            assert sp.total() == mp.rank
            spc = split_indices(m.conjugate(), mp.conjugate())
            assert all(sp[i] == spc[m.rank - i] for i in range(m.rank + 1))

    def test_tie_raises(self):
        m = RegularMotiveData("M", 0, (1, -1))
        mp = RegularMotiveData("M'", 0, (1,))
        # p_2 + r_1 = 0 = w/2
        with pytest.raises(PpClassError):
            split_indices(m, mp)


class TestCardinalityLemma:
    def test_worked_example(self):
        assert verify_cardinality_lemma(M, MP)

    def test_empty_rows(self):
        # A empty: every p_a + r_b below w/2
        m = RegularMotiveData("M", 2, (0,))
        mp = RegularMotiveData("M'", 0, (0,))
        assert set_A(m, mp).members == frozenset()
        assert verify_cardinality_lemma(m, mp)

    def test_random_instances(self):
        rng = random.Random(24)
        for _ in range(200):
            m, mp = random_pp_free_pair(rng, 4)
            assert verify_cardinality_lemma(m, mp)
