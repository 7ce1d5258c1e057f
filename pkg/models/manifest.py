"""Manifest envelope shared by every serialized object."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional


class ManifestKind(str, Enum):
    AUTOMATON = 'automaton'
    TRANSDUCER = 'transducer'
    PCP_INSTANCE = 'pcp-instance'
    TURING_MACHINE = 'turing-machine'
    LASSO = 'lasso'
    VERDICT = 'verdict'
    WITNESS = 'witness'


@dataclass(frozen=True)
class Provenance:
    source_sha256: str
    command: str

    def to_dict(self):
        return {'source_sha256': self.source_sha256, 'command': self.command}


@dataclass(frozen=True)
class Manifest:
    kind: ManifestKind
    version: str
    payload: Dict[str, Any]
    provenance: Optional[Provenance] = None

    def to_dict(self):
        return {
            'kind': self.kind.value,
            'version': self.version,
            'provenance': self.provenance.to_dict() if self.provenance else None,
            'payload': self.payload,
        }

    def __repr__(self):
        return f'<Manifest {self.kind.value} v{self.version}>'
