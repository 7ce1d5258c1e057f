"""Lasso word and Büchi automaton tests."""

import unittest
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from hypothesis import given, settings
from hypothesis import strategies as st

from models import Alphabet, BuchiAutomaton, LassoWord
from models.errors import AlphabetMismatchError, InvalidBoundError, InvalidLassoError, LassoSyntaxError
from services.omega_core import (
    OmegaCore,
    enumerate_lassos,
    first_difference,
    lasso_concat,
    lasso_equal,
    lasso_format,
    lasso_normalize,
    lasso_parse,
    lasso_project,
    nba_accepts_lasso,
    nba_is_empty,
    nba_product_intersection,
    nba_trim,
    prefix_set,
    primitive_root,
    universal_automaton,
)
from services.samples import AB, infinitely_many, only_power
from services.sampling import make_rng, random_automaton, random_lasso

letters = st.sampled_from(['a', 'b'])
prefixes = st.lists(letters, max_size=5).map(tuple)
loops = st.lists(letters, min_size=1, max_size=5).map(tuple)


def a_then_anything() -> BuchiAutomaton:
    """a·{a,b}^ω plus a dead state reachable on b."""
    return BuchiAutomaton(3, AB, ((0, 'a', 1), (0, 'b', 2), (1, 'a', 1), (1, 'b', 1)), 0, frozenset({1}))


class TestLassoNormalization(unittest.TestCase):
    """Test canonical lasso representatives."""

    def test_rotates_prefix_into_loop(self):
        """Test that ab·(bb)^ω normalizes to a·b^ω."""
        word = lasso_normalize(('a', 'b'), ('b', 'b'))
        self.assertEqual(word, LassoWord(('a',), ('b',)))

    def test_two_spellings_of_alternation(self):
        """Test that a·(ba)^ω and ab·(ab)^ω share one representative."""
        first = lasso_normalize(('a',), ('b', 'a'))
        second = lasso_normalize(('a', 'b'), ('a', 'b'))
        self.assertEqual(first, second)
        self.assertEqual(first, LassoWord((), ('a', 'b')))

    def test_primitive_root(self):
        """Test loop reduction to its primitive root."""
        self.assertEqual(primitive_root(('a', 'b', 'a', 'b')), ('a', 'b'))
        self.assertEqual(primitive_root(('a', 'b', 'a')), ('a', 'b', 'a'))

    def test_empty_loop_rejected(self):
        """Test that an empty loop is not a lasso."""
        with self.assertRaises(InvalidLassoError):
            lasso_normalize(('a',), ())

    @given(prefixes, loops)
    def test_normalize_is_idempotent(self, prefix, loop):
        """Normalizing a canonical lasso changes nothing."""
        word = lasso_normalize(prefix, loop)
        self.assertEqual(lasso_normalize(word.prefix, word.loop), word)
        self.assertTrue(lasso_equal(word, LassoWord(prefix, loop)))

    @given(prefixes, loops, st.integers(min_value=0, max_value=4), st.integers(min_value=1, max_value=3))
    def test_equal_words_share_representative(self, prefix, loop, unroll, repeat):
        """Unrolling and repeating the loop keeps the canonical form."""
        other = LassoWord(prefix + (loop * 6)[:unroll], (loop * 6)[unroll:unroll + len(loop)] * repeat)
        self.assertTrue(lasso_equal(LassoWord(prefix, loop), other))
        self.assertEqual(lasso_normalize(prefix, loop), lasso_normalize(other.prefix, other.loop))


class TestLassoOperations(unittest.TestCase):
    """Test equality, projection, parsing and formatting."""

    def test_first_difference(self):
        """Test the first differing position of two lassos."""
        self.assertEqual(first_difference(LassoWord(('a',), ('b',)), LassoWord(('a', 'b', 'b'), ('a',))), 3)
        self.assertIsNone(first_difference(LassoWord((), ('a',)), LassoWord(('a',), ('a', 'a'))))

    def test_lasso_equal_checks_alphabet(self):
        """Test that foreign letters raise an alphabet mismatch."""
        with self.assertRaises(AlphabetMismatchError):
            lasso_equal(LassoWord((), ('c',)), LassoWord((), ('c',)), AB)

    def test_concat_and_project(self):
        """Test concatenation and projection onto a letter subset."""
        word = lasso_concat(('b',), LassoWord(('1',), ('2', 'a')))
        self.assertEqual(word, LassoWord(('b', '1'), ('2', 'a')))
        self.assertEqual(lasso_project(word, {'1', '2'}), LassoWord(('1',), ('2',)))
        self.assertIsNone(lasso_project(LassoWord(('1',), ('a',)), {'1', '2'}))

    def test_parse_simple_and_dotted(self):
        """Test parsing of single-letter and dotted lassos."""
        self.assertEqual(lasso_parse('a(ba)'), LassoWord(('a',), ('b', 'a')))
        self.assertEqual(lasso_parse('q0.X(#)'), LassoWord(('q0', 'X'), ('#',)))
        self.assertEqual(lasso_parse('(ab)'), LassoWord((), ('a', 'b')))
        self.assertEqual(lasso_parse('ε(a)'), LassoWord((), ('a',)))

    def test_parse_with_long_symbols(self):
        """Test longest-match tokenization against an alphabet."""
        alphabet = Alphabet(('1', '10', 'a'))
        self.assertEqual(lasso_parse('101(a)', alphabet), LassoWord(('10', '1'), ('a',)))

    def test_parse_errors(self):
        """Test malformed lasso text."""
        for text in ('ab', 'a()', 'a(b)(c)', 'a(b'):
            with self.assertRaises(LassoSyntaxError):
                lasso_parse(text)

    def test_format_round_trip(self):
        """Test formatting of plain and dotted lassos."""
        self.assertEqual(lasso_format(LassoWord(('a',), ('b',))), 'a(b)')
        self.assertEqual(lasso_format(LassoWord(('q0',), ('X', '#'))), 'q0(X.#)')
        tape = Alphabet(('q0', 'X', '#'))
        self.assertEqual(lasso_parse(lasso_format(LassoWord(('q0',), ('X', '#'))), tape), LassoWord(('q0',), ('X', '#')))


class TestBuchiMembership(unittest.TestCase):
    """Test lasso membership."""

    def setUp(self):
        """Set up test environment."""
        self.inf_a = infinitely_many(AB, 'a')

    def test_infinitely_many_a(self):
        """Test the automaton for infinitely many a."""
        self.assertTrue(nba_accepts_lasso(self.inf_a, LassoWord((), ('a', 'b'))))
        self.assertTrue(nba_accepts_lasso(self.inf_a, LassoWord(('b', 'b'), ('a',))))
        self.assertFalse(nba_accepts_lasso(self.inf_a, LassoWord(('a', 'b'), ('b',))))

    def test_no_accepting_states(self):
        """Test that an automaton without accepting states rejects everything."""
        automaton = BuchiAutomaton(1, AB, ((0, 'a', 0), (0, 'b', 0)), 0, frozenset())
        self.assertFalse(nba_accepts_lasso(automaton, LassoWord((), ('a',))))

    def test_alphabet_mismatch(self):
        """Test that a foreign letter raises."""
        with self.assertRaises(AlphabetMismatchError):
            nba_accepts_lasso(self.inf_a, LassoWord((), ('c',)))

    @given(prefixes, loops)
    def test_membership_ignores_representation(self, prefix, loop):
        """Two spellings of the same word get the same answer."""
        other = LassoWord(prefix + loop, loop + loop)
        self.assertEqual(nba_accepts_lasso(self.inf_a, LassoWord(prefix, loop)),
                         nba_accepts_lasso(self.inf_a, other))


class TestEmptiness(unittest.TestCase):
    """Test emptiness with witnesses."""

    def test_universal_witness(self):
        """Test the witness of the universal automaton."""
        witness = nba_is_empty(universal_automaton(AB))
        self.assertEqual(witness, LassoWord((), ('a',)))

    def test_unreachable_accepting_cycle(self):
        """Test that an accepting cycle off the reachable part is ignored."""
        automaton = BuchiAutomaton(2, AB, ((0, 'a', 0), (1, 'a', 1)), 0, frozenset({1}))
        self.assertIsNone(nba_is_empty(automaton))

    def test_accepting_state_without_cycle(self):
        """Test that visiting an accepting state once is not enough."""
        automaton = BuchiAutomaton(2, AB, ((0, 'a', 1), (1, 'b', 0)), 0, frozenset({1}))
        self.assertEqual(nba_is_empty(automaton), LassoWord((), ('a', 'b')))
        automaton = BuchiAutomaton(2, AB, ((0, 'a', 1), (0, 'b', 0)), 0, frozenset({1}))
        self.assertIsNone(nba_is_empty(automaton))

    def test_agrees_with_enumeration(self):
        """Emptiness matches brute force over 500 random automata."""
        rng = make_rng(7)
        # Every nonempty language with at most 4 states has a lasso of this size.
        candidates = list(enumerate_lassos(AB, max_prefix=3, max_loop=4))
        for _ in range(500):
            automaton = random_automaton(rng, int(rng.integers(1, 5)), AB)
            witness = nba_is_empty(automaton)
            if witness is not None:
                self.assertTrue(nba_accepts_lasso(automaton, witness))
            else:
                self.assertFalse(any(nba_accepts_lasso(automaton, w) for w in candidates))


class TestProductAndTrim(unittest.TestCase):
    """Test intersection, trimming and prefix sets."""

    def test_intersection_of_infinitely_many(self):
        """Test infinitely many a and infinitely many b."""
        product = nba_product_intersection(infinitely_many(AB, 'a'), infinitely_many(AB, 'b'))
        self.assertTrue(nba_accepts_lasso(product, LassoWord((), ('a', 'b'))))
        self.assertFalse(nba_accepts_lasso(product, LassoWord(('b',), ('a',))))
        self.assertFalse(nba_accepts_lasso(product, LassoWord(('a',), ('b',))))

    def test_intersection_alphabet_mismatch(self):
        """Test that products need equal alphabets."""
        with self.assertRaises(AlphabetMismatchError):
            nba_product_intersection(universal_automaton(AB), universal_automaton(Alphabet(('a',))))

    def test_random_intersection(self):
        """Product membership is the conjunction of memberships."""
        rng = make_rng(11)
        for _ in range(60):
            a1 = random_automaton(rng, 3, AB, edge_probability=0.5)
            a2 = random_automaton(rng, 3, AB, edge_probability=0.5)
            product = nba_product_intersection(a1, a2)
            for _ in range(10):
                word = random_lasso(rng, AB)
                self.assertEqual(nba_accepts_lasso(product, word),
                                 nba_accepts_lasso(a1, word) and nba_accepts_lasso(a2, word))

    def test_trim_removes_dead_state(self):
        """Test that trimming drops the dead branch and keeps the language."""
        trimmed = nba_trim(a_then_anything())
        self.assertEqual(trimmed.num_states, 2)
        self.assertTrue(nba_accepts_lasso(trimmed, LassoWord(('a',), ('b',))))
        self.assertFalse(nba_accepts_lasso(trimmed, LassoWord(('b',), ('a',))))

    def test_trim_preserves_random_languages(self):
        """Trimming never changes membership."""
        rng = make_rng(3)
        for _ in range(60):
            automaton = random_automaton(rng, 4, AB)
            trimmed = nba_trim(automaton)
            for _ in range(10):
                word = random_lasso(rng, AB)
                self.assertEqual(nba_accepts_lasso(trimmed, word), nba_accepts_lasso(automaton, word))

    def test_prefix_set(self):
        """Test prefixes of a·{a,b}^ω and of a single word."""
        self.assertEqual(prefix_set(a_then_anything(), 2), {('a', 'a'), ('a', 'b')})
        self.assertEqual(prefix_set(only_power(AB, 'b'), 3), {('b', 'b', 'b')})
        self.assertEqual(prefix_set(BuchiAutomaton(1, AB, (), 0, frozenset({0})), 1), frozenset())
        with self.assertRaises(InvalidBoundError):
            prefix_set(a_then_anything(), 0)

    @settings(max_examples=50)
    @given(st.integers(min_value=0, max_value=2 ** 32 - 1), st.integers(min_value=1, max_value=5))
    def test_prefix_set_covers_accepted_words(self, seed, m):
        """Every accepted lasso contributes its prefix."""
        rng = make_rng(seed)
        automaton = random_automaton(rng, 3, AB, edge_probability=0.5)
        prefixes_m = prefix_set(automaton, m)
        for _ in range(5):
            word = random_lasso(rng, AB)
            if nba_accepts_lasso(automaton, word):
                self.assertIn(word.take(m), prefixes_m)

    @settings(max_examples=50)
    @given(st.integers(min_value=0, max_value=2 ** 32 - 1), st.integers(min_value=1, max_value=5))
    def test_prefix_set_refines(self, seed, m):
        """Cutting the length-(m+1) prefixes back to m gives the length-m prefixes."""
        automaton = random_automaton(make_rng(seed), 3, AB, edge_probability=0.4)
        longer = prefix_set(automaton, m + 1)
        self.assertEqual({word[:m] for word in longer}, set(prefix_set(automaton, m)))
        self.assertTrue(all(len(word) == m + 1 for word in longer))


class TestOmegaCoreService(unittest.TestCase):
    """Test the service wrapper over lassos and automata."""

    def setUp(self):
        """Set up test environment."""
        self.core = OmegaCore()

    def test_parse_and_format(self):
        """Test parsing, formatting and equality of lassos."""
        word = self.core.parse('ab(ab)', AB)
        self.assertTrue(self.core.equal(word, LassoWord((), ('a', 'b', 'a', 'b'))))
        self.assertEqual(self.core.format(self.core.parse('a(b)', AB)), 'a(b)')

    def test_witness_and_membership(self):
        """Test that the emptiness witness is accepted."""
        automaton = infinitely_many(AB, 'b')
        witness = self.core.witness(automaton)
        self.assertTrue(self.core.accepts(automaton, witness))
        self.assertIsNone(self.core.witness(BuchiAutomaton(1, AB, (), 0, frozenset({0}))))

    def test_intersect_trim_and_prefixes(self):
        """Test the product of a·{a,b}^ω with infinitely many b."""
        product = self.core.trim(self.core.intersect(a_then_anything(), infinitely_many(AB, 'b')))
        self.assertEqual(self.core.prefixes(product, 2), {('a', 'a'), ('a', 'b')})
        with self.assertRaises(InvalidBoundError):
            self.core.prefixes(product, 0)


if __name__ == '__main__':
    unittest.main()
