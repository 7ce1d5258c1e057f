"""Prefix metric, the X_{k,n} membership test and bounded continuity probes."""

import logging
import math
from typing import Callable, Dict, Optional, Tuple, Union

from models import BallPrefix, BuchiTransducer, ContinuityVerdict, LassoWord, PcpRegInstance, VerdictKind, Word
from models.errors import InvalidBoundError, NotInDomainError, NoWitnessError, SearchInvariantError

from .omega_core import first_difference, lasso_concat, lasso_normalize, lasso_project, nba_accepts_lasso, prefix_set
from .pcp_solver import verify_solution
from .reductions import AB_LETTERS
from .transducer_ops import apply_lasso, domain_automaton, image_automaton, restrict_input_prefix

logger = logging.getLogger(__name__)

Distance = Union[int, float]
WitnessGenerator = Callable[[LassoWord, int], Tuple[LassoWord, int]]


def prefix_distance_exponent(u: LassoWord, v: LassoWord) -> Distance:
    """Length of the longest common prefix; math.inf for equal words."""
    position = first_difference(u, v)
    return math.inf if position is None else position


def ball_prefix(point: LassoWord, k: int) -> BallPrefix:
    return BallPrefix(point, k)


def image_prefixes(transducer: BuchiTransducer, prefix: Word, length: int):
    """Length-`length` prefixes of F[prefix·Σ^ω ∩ Dom]."""
    return prefix_set(image_automaton(restrict_input_prefix(transducer, prefix)), length)


def _in_domain(transducer: BuchiTransducer, point: LassoWord) -> bool:
    return nba_accepts_lasso(domain_automaton(transducer), point)


def _ball_maps_into(transducer: BuchiTransducer, point: LassoWord, image: LassoWord, k: int, n: int) -> bool:
    expected = image.take(n + 1)
    return image_prefixes(transducer, ball_prefix(point, k).prefix, n + 1) == {expected}


def xkn_test(transducer: BuchiTransducer, point: LassoWord, k: int, n: int) -> bool:
    """point ∈ Dom and F[B(point, 2^-k) ∩ Dom] ⊆ B(F(point), 2^-n)."""
    if k < 1 or n < 1:
        raise InvalidBoundError(f"Precisions must be positive, got k={k}, n={n}")
    if not _in_domain(transducer, point):
        return False
    return _ball_maps_into(transducer, point, apply_lasso(transducer, point), k, n)


def continuity_probe(
    transducer: BuchiTransducer,
    point: LassoWord,
    depth: int,
    k_max: int,
    witness_generator: Optional[WitnessGenerator] = None,
) -> ContinuityVerdict:
    """For n = 1..depth look for k <= k_max with the X_{k,n} test true.

    Success for n carries over to the next n as a starting k, since the
    test is monotone in k. Exhausting k_max gives Unknown unless a witness
    generator certifies the failure.
    """
    if not _in_domain(transducer, point):
        raise NotInDomainError(f"Point {point.prefix}({point.loop}) is not in the domain")
    image = apply_lasso(transducer, point)
    evidence: Dict[int, int] = {}
    k = 1
    for n in range(1, depth + 1):
        while k <= k_max and not _ball_maps_into(transducer, point, image, k, n):
            k += 1
        if k > k_max:
            evidence[n] = k_max
            logger.info(f"No k <= {k_max} certifies n={n} at {point}")
            return _unresolved(point, n, evidence, witness_generator, k_max)
        evidence[n] = k
        logger.debug(f"n={n} certified with k={k}")
    return ContinuityVerdict(VerdictKind.CONTINUOUS_UP_TO, point, depth, evidence)


def _unresolved(point, n, evidence, witness_generator, k_max) -> ContinuityVerdict:
    if witness_generator is not None:
        try:
            counterexample, distance = witness_generator(point, k_max)
        except NoWitnessError as exc:
            logger.info(f"Witness generator declined: {exc}")
        else:
            # refutes n only when the outputs split within their first n+1 letters
            if distance <= n:
                return ContinuityVerdict(VerdictKind.DISCONTINUITY_EVIDENCE, point, n, evidence, counterexample)
            logger.info(f"Counterexample at distance {distance} does not refute n={n}")
    return ContinuityVerdict(VerdictKind.UNKNOWN, point, n, evidence)


def _unrolled(point: LassoWord, length: int) -> Word:
    repeats = max(1, math.ceil((length - len(point.prefix)) / len(point.loop)))
    return point.prefix + point.loop * repeats


def f_discontinuity_witness(
    instance: PcpRegInstance,
    function: BuchiTransducer,
    point: LassoWord,
    k: int,
) -> Tuple[LassoWord, int]:
    """Point of the opposite branch inside B(point, 2^-k) and its output distance.

    Both points share the index projection, so when that projection is no
    solution the outputs differ at a position that does not depend on k.
    """
    if k < 1:
        raise InvalidBoundError(f"Precision k must be positive, got {k}")
    sigma = lasso_project(point, instance.indices.symbols)
    guards = lasso_project(point, AB_LETTERS)
    if sigma is None or guards is None or not nba_accepts_lasso(instance.constraint, sigma):
        raise NotInDomainError(f"Point {point.prefix}({point.loop}) is not in the domain")
    if verify_solution(instance, sigma):
        raise NoWitnessError(f"Index projection {sigma.prefix}({sigma.loop}) is a solution")
    flip_to = 'b' if 'a' in guards.loop else 'a'
    loop = tuple(flip_to if letter in AB_LETTERS else letter for letter in point.loop)
    neighbour = lasso_normalize(_unrolled(point, k + 1), loop)
    distance = prefix_distance_exponent(apply_lasso(function, point), apply_lasso(function, neighbour))
    if distance == math.inf:
        raise SearchInvariantError("Opposite branches agree on a non-solution")
    return neighbour, int(distance)


def f_witness_generator(instance: PcpRegInstance, function: BuchiTransducer) -> WitnessGenerator:
    def generate(point: LassoWord, k: int) -> Tuple[LassoWord, int]:
        return f_discontinuity_witness(instance, function, point, k)
    return generate


def fprime_point(block: Word, point: LassoWord) -> LassoWord:
    """block·point, the input of the gadget-prefixed function."""
    return lasso_concat(block, point)


class ContinuityService:
    """Bounded continuity checks for functional transducers."""

    def __init__(self, depth: int = 4, k_max: int = 16):
        """Initialize the default output depth and input precision limit."""
        if depth < 1 or k_max < 1:
            raise InvalidBoundError(f"Depth and k_max must be positive, got {depth}, {k_max}")
        self.depth = depth
        self.k_max = k_max

    @classmethod
    def from_config(cls, settings) -> 'ContinuityService':
        return cls(settings.PROBE_DEPTH, settings.PROBE_K_MAX)

    def xkn(self, transducer: BuchiTransducer, point: LassoWord, k: int, n: int) -> bool:
        return xkn_test(transducer, point, k, n)

    def distance(self, u: LassoWord, v: LassoWord) -> Distance:
        return prefix_distance_exponent(u, v)

    def witness(self, instance: PcpRegInstance, function: BuchiTransducer,
                point: LassoWord, k: int) -> Tuple[LassoWord, int]:
        return f_discontinuity_witness(instance, function, point, k)

    def probe(
        self,
        transducer: BuchiTransducer,
        point: LassoWord,
        depth: Optional[int] = None,
        k_max: Optional[int] = None,
        instance: Optional[PcpRegInstance] = None,
    ) -> ContinuityVerdict:
        """Run the bounded check; `instance` enables discontinuity witnesses for F."""
        generator = f_witness_generator(instance, transducer) if instance is not None else None
        return continuity_probe(transducer, point, depth or self.depth, k_max or self.k_max, generator)
