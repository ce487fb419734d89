"""Generator-word reduction of SL(2, Z) bases, full and parity-refined."""
import numpy as np
import pytest
from hypothesis import given, strategies as st

from torelli import euclid, linalg
from torelli.errors import PreconditionError
from torelli.euclid import GeneratorWord

I2 = euclid.IDENTITY2


def carries_to_standard(word, x):
    """Independent check: multiply the letters out with numpy object arrays."""
    m = np.eye(2, dtype=object)
    for name, k in word.letters:
        m = m.dot(np.array(euclid.generator_power(name, k), dtype=object))
    return (m.dot(np.array(x, dtype=object).T) == np.eye(2, dtype=object)).all()


letters = st.tuples(st.sampled_from(["R1", "R2"]), st.integers(-4, 4).filter(bool))


def word_to_row_matrix(word, refined=False):
    m = I2
    for name, k in word:
        if refined and name == "R1":
            k *= 2
        m = linalg.matmul(euclid.generator_power(name, k), m)
    return linalg.transpose(m)


class TestGenerators:
    def test_matrices(self):
        assert euclid.R1 == ((1, 1), (0, 1)) and euclid.R2 == ((1, 0), (1, 1))

    def test_minus_identity_word(self):
        assert GeneratorWord(euclid.MINUS_IDENTITY_WORD).matrix() == ((-1, 0), (0, -1))

    def test_bad_letters(self):
        with pytest.raises(ValueError):
            GeneratorWord((("R3", 1),))
        with pytest.raises(ValueError):
            GeneratorWord((("R1", 0),))

    def test_json_round_trip(self):
        w = GeneratorWord((("R2", -1), ("R1", 4)))
        assert GeneratorWord.from_json(w.to_json()) == w

    def test_refined_membership(self):
        assert GeneratorWord((("R2", 3), ("R1", -2))).in_refined_subgroup()
        assert not GeneratorWord((("R1", 1),)).in_refined_subgroup()


class TestReduceFull:
    def test_identity(self):
        assert euclid.reduce_full(I2) == GeneratorWord()

    def test_single_letter(self):
        x = ((1, 0), (1, 1))
        w = euclid.reduce_full(x)
        assert len(w) == 1 and carries_to_standard(w, x)

    def test_quarter_turn(self):
        x = ((0, 1), (-1, 0))
        assert carries_to_standard(euclid.reduce_full(x), x)

    def test_minus_identity(self):
        x = ((-1, 0), (0, -1))
        assert carries_to_standard(euclid.reduce_full(x), x)

    def test_det_not_one(self):
        with pytest.raises(PreconditionError):
            euclid.reduce_full(((2, 0), (0, 1)))
        with pytest.raises(PreconditionError):
            euclid.reduce_full(((0, 1), (1, 0)))

    @given(st.lists(letters, max_size=12))
    def test_random_words(self, word):
        x = word_to_row_matrix(word)
        assert carries_to_standard(euclid.reduce_full(x), x)

    def test_thousand_seeded(self):
        rng = np.random.default_rng(5)
        for _ in range(1000):
            x = euclid.random_sl2(rng, int(rng.integers(0, 12)))
            assert carries_to_standard(euclid.reduce_full(x), x)


def nu_pair(cols):
    (x1, y1), (x2, y2) = cols
    return euclid.nu_value(x1, x2), euclid.nu_value(y1, y2)


class TestReduceRefined:
    def test_identity(self):
        assert euclid.reduce_refined(I2) == GeneratorWord()

    def test_minus_identity_endgame(self):
        w = euclid.reduce_refined(((-1, 0), (0, -1)))
        assert w.letters == (("R2", 1), ("R1", -2), ("R2", 1), ("R1", -2))

    def test_example_matrix(self):
        x = ((3, 1), (2, 1))
        w = euclid.reduce_refined(x)
        assert w.in_refined_subgroup() and carries_to_standard(w, x)
        assert w.letters == (("R2", -1), ("R1", -2))

    def test_nu_precondition(self):
        with pytest.raises(PreconditionError):
            euclid.reduce_refined(((1, 0), (1, 1)))

    def test_det_precondition(self):
        with pytest.raises(PreconditionError):
            euclid.reduce_refined(((1, 0), (0, 3)))

    @given(st.lists(letters, max_size=12))
    def test_random_refined_words(self, word):
        x = word_to_row_matrix(word, refined=True)
        red = euclid.reduce_refined_trace(x)
        assert red.word.in_refined_subgroup()
        assert carries_to_standard(red.word, x)
        assert red.iterations <= euclid.descent_bound(x)

    @given(st.lists(letters, max_size=12))
    def test_trace_keeps_nu_values(self, word):
        red = euclid.reduce_refined_trace(word_to_row_matrix(word, refined=True))
        assert all(nu_pair(cols) == (0, 1) for cols in red.trace)

    def test_precondition_matches_generated_subgroup(self):
        # every basis reachable by refined words satisfies nu = (0, 1)
        rng = np.random.default_rng(9)
        for _ in range(300):
            x = euclid.random_sl2(rng, int(rng.integers(0, 10)), refined=True)
            euclid.check_refined_precondition(x)

    def test_thousand_seeded(self):
        rng = np.random.default_rng(6)
        for _ in range(1000):
            x = euclid.random_sl2(rng, int(rng.integers(0, 12)), refined=True)
            red = euclid.reduce_refined_trace(x)
            assert red.word.in_refined_subgroup() and carries_to_standard(red.word, x)
            assert red.iterations <= euclid.descent_bound(x)


@pytest.mark.parametrize("n,d,expected", [(5, 2, 2), (-5, 2, -2), (7, 2, 3), (9, 4, 2), (3, 4, 1), (1, 4, 0), (-3, 4, -1), (6, -4, -1)])
def test_rounding_ties_toward_zero(n, d, expected):
    assert euclid._round_ties_to_zero(n, d) == expected
