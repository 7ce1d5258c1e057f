"""Continuity probe tests."""

import itertools
import math
import unittest
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from models import BallPrefix, ContinuityVerdict, LassoWord, VerdictKind
from models.errors import InvalidBoundError, InvalidLassoError, InvalidVerdictError, NotInDomainError, NoWitnessError
from services.continuity import (
    ContinuityService,
    ball_prefix,
    continuity_probe,
    f_discontinuity_witness,
    f_witness_generator,
    fprime_point,
    image_prefixes,
    prefix_distance_exponent,
    xkn_test,
)
from services.reductions import fprime_block, pcp1_is_solution, pcp_to_function_F, pcp_to_function_Fprime
from services.samples import doubling_transducer, i1_instance, identity_transducer
from services.transducer_ops import apply_lasso

SOLUTION_POINT = LassoWord(('1',), ('2', 'a'))
NON_SOLUTION_POINT = LassoWord(('1',), ('1', 'a'))


class TestPrefixMetric(unittest.TestCase):
    """Test distances and balls."""

    def test_distance_exponent(self):
        """Test common-prefix lengths."""
        self.assertEqual(prefix_distance_exponent(LassoWord(('a',), ('b',)), LassoWord(('a',), ('a',))), 1)
        self.assertEqual(prefix_distance_exponent(LassoWord((), ('a',)), LassoWord(('a',), ('a',))), math.inf)

    def test_ball(self):
        """Test that a ball of exponent k fixes k+1 letters."""
        ball = ball_prefix(LassoWord(('a',), ('b',)), 2)
        self.assertEqual(ball.prefix, ('a', 'b', 'b'))
        self.assertTrue(ball.contains(LassoWord(('a', 'b', 'b'), ('a',))))
        self.assertFalse(ball.contains(LassoWord(('a', 'b'), ('a',))))
        with self.assertRaises(InvalidLassoError):
            BallPrefix(LassoWord((), ('a',)), 0)

    def test_image_prefixes(self):
        """Test image prefixes of the doubling transducer."""
        self.assertEqual(image_prefixes(doubling_transducer(), ('a',), 2), {('a', 'a')})
        self.assertEqual(image_prefixes(doubling_transducer(), ('a',), 3), {('a', 'a', 'a'), ('a', 'a', 'b')})


class TestXknTest(unittest.TestCase):
    """Test the X_{k,n} membership test."""

    def test_identity(self):
        """Test that the identity needs k >= n."""
        point = LassoWord(('a',), ('b',))
        self.assertTrue(xkn_test(identity_transducer(), point, 3, 3))
        self.assertFalse(xkn_test(identity_transducer(), point, 2, 3))

    def test_doubling(self):
        """Test that doubling needs roughly half the precision."""
        point = LassoWord((), ('a', 'b'))
        self.assertTrue(xkn_test(doubling_transducer(), point, 2, 5))
        self.assertFalse(xkn_test(doubling_transducer(), point, 1, 5))

    def test_outside_domain(self):
        """Test that points outside the domain fail the test."""
        function = pcp_to_function_F(i1_instance('universal'))
        self.assertFalse(xkn_test(function, LassoWord(('1',), ('a',)), 3, 1))

    def test_invalid_precision(self):
        """Test that k and n must be positive."""
        with self.assertRaises(InvalidBoundError):
            xkn_test(identity_transducer(), LassoWord((), ('a',)), 0, 1)
        with self.assertRaises(InvalidBoundError):
            xkn_test(identity_transducer(), LassoWord((), ('a',)), 1, 0)

    def test_monotone_in_k_and_n(self):
        """Test that raising k or lowering n never breaks the test."""
        cases = [
            (identity_transducer(), LassoWord(('a',), ('b',)), 8),
            (doubling_transducer(), LassoWord(('b',), ('a', 'b')), 8),
            (pcp_to_function_F(i1_instance('universal')), SOLUTION_POINT, 8),
        ]
        for transducer, point, size in cases:
            table = {(k, n): xkn_test(transducer, point, k, n)
                     for k in range(1, size + 1) for n in range(1, size + 1)}
            for (k, n), holds in table.items():
                if not holds:
                    continue
                if k < size:
                    self.assertTrue(table[(k + 1, n)])
                if n > 1:
                    self.assertTrue(table[(k, n - 1)])


class TestContinuityProbe(unittest.TestCase):
    """Test the bounded probe."""

    def setUp(self):
        """Set up test environment."""
        self.instance = i1_instance('universal')
        self.function = pcp_to_function_F(self.instance)

    def test_continuous_at_solution(self):
        """Test that F is continuous up to 4 where the indices form a solution."""
        verdict = continuity_probe(self.function, SOLUTION_POINT, depth=4, k_max=16)
        self.assertEqual(verdict.kind, VerdictKind.CONTINUOUS_UP_TO)
        self.assertEqual(verdict.depth_n, 4)
        self.assertEqual(sorted(verdict.witness_k), [1, 2, 3, 4])
        ks = [verdict.witness_k[n] for n in range(1, 5)]
        self.assertEqual(ks, sorted(ks))

    def test_continuous_at_sampled_solution_points(self):
        """Test points of both branches whose indices spell 1·2^ω or (12)^ω."""
        points = [
            SOLUTION_POINT,
            LassoWord(('1',), ('2', 'b')),
            LassoWord((), ('1', 'a', '2')),
            LassoWord((), ('1', '2', 'b')),
            LassoWord(('1', 'a'), ('2', 'a', 'b')),
        ]
        for point in points:
            with self.subTest(point=point):
                verdict = continuity_probe(self.function, point, depth=4, k_max=16)
                self.assertEqual(verdict.describe(), 'ContinuousUpTo(4)')

    def test_unknown_without_generator(self):
        """Test that a non-solution point stays unresolved."""
        verdict = continuity_probe(self.function, NON_SOLUTION_POINT, depth=4, k_max=10)
        self.assertEqual(verdict.kind, VerdictKind.UNKNOWN)
        self.assertEqual(verdict.depth_n, 1)

    def test_discontinuity_with_generator(self):
        """Test that the witness generator certifies the failure."""
        generator = f_witness_generator(self.instance, self.function)
        verdict = continuity_probe(self.function, NON_SOLUTION_POINT, depth=4, k_max=10,
                                   witness_generator=generator)
        self.assertEqual(verdict.kind, VerdictKind.DISCONTINUITY_EVIDENCE)
        self.assertEqual(verdict.depth_n, 1)
        self.assertGreaterEqual(prefix_distance_exponent(NON_SOLUTION_POINT, verdict.counterexample), 11)

    def test_outside_domain(self):
        """Test that probing outside the domain raises."""
        with self.assertRaises(NotInDomainError):
            continuity_probe(self.function, LassoWord(('1',), ('a',)), depth=2, k_max=4)

    def test_evidence_reports_the_failing_n(self):
        """Test that evidence names the n that failed, not the counterexample's distance."""
        function = pcp_to_function_Fprime(self.instance)
        point = fprime_point(fprime_block(self.instance, [1, 2]), SOLUTION_POINT)
        verdict = continuity_probe(function, point, depth=5, k_max=12,
                                   witness_generator=lambda at, k: (at, 1))
        self.assertEqual(verdict.kind, VerdictKind.DISCONTINUITY_EVIDENCE)
        self.assertEqual(verdict.depth_n, 2)
        self.assertEqual(verdict.witness_k[2], 12)
        self.assertIn(1, verdict.witness_k)
        self.assertEqual(verdict.counterexample, point)

    def test_distant_counterexample_stays_unknown(self):
        """Test that outputs splitting after the failing n do not count as evidence."""
        function = pcp_to_function_Fprime(self.instance)
        point = fprime_point(fprime_block(self.instance, [1, 2]), SOLUTION_POINT)
        verdict = continuity_probe(function, point, depth=5, k_max=12,
                                   witness_generator=lambda at, k: (at, 7))
        self.assertEqual(verdict.describe(), 'Unknown(n=2)')
        self.assertIsNone(verdict.counterexample)

    def test_verdict_requires_evidence(self):
        """Test that a continuous verdict must name a k for every n."""
        with self.assertRaises(InvalidVerdictError):
            ContinuityVerdict(VerdictKind.CONTINUOUS_UP_TO, SOLUTION_POINT, 2, {1: 3})


class TestDiscontinuityWitness(unittest.TestCase):
    """Test the opposite-branch witness for F."""

    def setUp(self):
        """Set up test environment."""
        self.instance = i1_instance('universal')
        self.function = pcp_to_function_F(self.instance)

    def test_witness_for_ones(self):
        """Test the witness near 1(1a) at k = 3."""
        neighbour, distance = f_discontinuity_witness(self.instance, self.function, NON_SOLUTION_POINT, 3)
        self.assertEqual(neighbour, LassoWord(('1', '1', 'a', '1', 'a'), ('1', 'b')))
        self.assertEqual(distance, 1)

    def test_witness_stays_in_ball(self):
        """Test that witnesses share k+1 letters with the point and differ at a fixed depth."""
        points = [
            NON_SOLUTION_POINT,
            LassoWord((), ('1', 'a')),
            LassoWord((), ('1', 'b')),
            LassoWord((), ('a', '1')),
            LassoWord(('1', 'b'), ('1', 'a')),
            LassoWord((), ('1', 'a', 'b')),
        ]
        for point in points:
            for k in range(1, 11):
                with self.subTest(point=point, k=k):
                    neighbour, distance = f_discontinuity_witness(self.instance, self.function, point, k)
                    self.assertGreaterEqual(prefix_distance_exponent(point, neighbour), k + 1)
                    self.assertEqual(distance, 1)
                    self.assertNotEqual(apply_lasso(self.function, point), apply_lasso(self.function, neighbour))

    def test_no_witness_at_solution(self):
        """Test that a solution projection has no witness."""
        with self.assertRaises(NoWitnessError):
            f_discontinuity_witness(self.instance, self.function, SOLUTION_POINT, 3)


class TestFprimeContinuity(unittest.TestCase):
    """Test that continuity after a block tracks the gadget's solutions."""

    BLOCKS = [list(block) for length in range(1, 7) for block in itertools.product((1, 2, 3), repeat=length)]

    def setUp(self):
        """Set up test environment."""
        self.instance = i1_instance('universal')
        self.function = pcp_to_function_Fprime(self.instance)

    def test_continuity_iff_block_solves_gadget(self):
        """Test every block of up to six indices at a point whose indices solve the instance."""
        self.assertEqual(len(self.BLOCKS), 1092)
        for indices in self.BLOCKS:
            with self.subTest(block=indices):
                depth = max(3, 2 * len(indices) + 1)
                point = fprime_point(fprime_block(self.instance, indices), SOLUTION_POINT)
                verdict = continuity_probe(self.function, point, depth=depth, k_max=2 * depth + 2)
                self.assertEqual(verdict.is_continuous, pcp1_is_solution(indices))


class TestContinuityService(unittest.TestCase):
    """Test the continuity service and its configured limits."""

    def setUp(self):
        """Set up test environment."""
        self.service = ContinuityService(depth=4, k_max=10)
        self.instance = i1_instance('universal')
        self.function = pcp_to_function_F(self.instance)

    def test_defaults(self):
        """Test a check that uses the configured depth."""
        verdict = self.service.probe(self.function, SOLUTION_POINT)
        self.assertEqual(verdict.describe(), 'ContinuousUpTo(4)')

    def test_instance_enables_witnesses(self):
        """Test that passing the instance turns Unknown into evidence."""
        self.assertEqual(self.service.probe(self.function, NON_SOLUTION_POINT).kind, VerdictKind.UNKNOWN)
        verdict = self.service.probe(self.function, NON_SOLUTION_POINT, instance=self.instance)
        self.assertEqual(verdict.describe(), 'DiscontinuityEvidence(n=1)')

    def test_helpers(self):
        """Test the X_{k,n} test, the distance and the witness through the service."""
        self.assertTrue(self.service.xkn(identity_transducer(), LassoWord(('a',), ('b',)), 3, 3))
        self.assertEqual(self.service.distance(LassoWord((), ('a',)), LassoWord(('a',), ('b',))), 1)
        _, distance = self.service.witness(self.instance, self.function, NON_SOLUTION_POINT, 3)
        self.assertEqual(distance, 1)

    def test_invalid_limits(self):
        """Test that depth and k_max must be positive."""
        with self.assertRaises(InvalidBoundError):
            ContinuityService(depth=0)
        with self.assertRaises(InvalidBoundError):
            f_discontinuity_witness(self.instance, self.function, NON_SOLUTION_POINT, 0)


if __name__ == '__main__':
    unittest.main()
