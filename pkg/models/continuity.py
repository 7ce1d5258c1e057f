"""Continuity verdicts and prefix-metric balls."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional

from .errors import InvalidLassoError, InvalidVerdictError
from .words import LassoWord, Word


class VerdictKind(str, Enum):
    CONTINUOUS_UP_TO = 'ContinuousUpTo'
    DISCONTINUITY_EVIDENCE = 'DiscontinuityEvidence'
    UNKNOWN = 'Unknown'


@dataclass(frozen=True)
class ContinuityVerdict:
    """Outcome of a bounded continuity probe at one point.

    ``depth_n`` is the certified depth for ContinuousUpTo and the failing n
    otherwise. ``witness_k`` maps each certified n to the k that worked;
    for the other kinds the failing n maps to the last k tried.
    """

    kind: VerdictKind
    point: LassoWord
    depth_n: int
    witness_k: Dict[int, int] = field(default_factory=dict)
    counterexample: Optional[LassoWord] = None

    def __post_init__(self):
        if self.kind is VerdictKind.CONTINUOUS_UP_TO:
            missing = [n for n in range(1, self.depth_n + 1) if n not in self.witness_k]
            if missing:
                raise InvalidVerdictError(f"ContinuousUpTo({self.depth_n}) lacks evidence for n={missing}")

    @property
    def is_continuous(self) -> bool:
        return self.kind is VerdictKind.CONTINUOUS_UP_TO

    def evidence_table(self) -> str:
        rows = ['  n | k', '----+----']
        for n in sorted(self.witness_k):
            rows.append(f'{n:>3} | {self.witness_k[n]}')
        return '\n'.join(rows)

    def describe(self) -> str:
        if self.kind is VerdictKind.CONTINUOUS_UP_TO:
            return f'ContinuousUpTo({self.depth_n})'
        return f'{self.kind.value}(n={self.depth_n})'

    def to_dict(self):
        return {
            'kind': self.kind.value,
            'point': self.point.to_dict(),
            'depth_n': self.depth_n,
            'witness_k': {str(n): k for n, k in sorted(self.witness_k.items())},
            'counterexample': self.counterexample.to_dict() if self.counterexample else None,
        }

    @classmethod
    def from_dict(cls, data) -> 'ContinuityVerdict':
        counterexample = data.get('counterexample')
        return cls(
            kind=VerdictKind(data['kind']),
            point=LassoWord.from_dict(data['point']),
            depth_n=int(data['depth_n']),
            witness_k={int(n): int(k) for n, k in data['witness_k'].items()},
            counterexample=LassoWord.from_dict(counterexample) if counterexample else None,
        )


@dataclass(frozen=True)
class BallPrefix:
    """Ball B(center, 2^-k): the words sharing the first k+1 letters of center."""

    center: LassoWord
    radius_exponent: int

    def __post_init__(self):
        if self.radius_exponent < 1:
            raise InvalidLassoError("Ball radius exponent k must be at least 1")

    @property
    def prefix(self) -> Word:
        return self.center.take(self.radius_exponent + 1)

    def contains(self, word: LassoWord) -> bool:
        return word.take(self.radius_exponent + 1) == self.prefix
