"""JSON manifests for every object the toolkit reads or writes.

Payloads are emitted with a fixed key order, so serializing, parsing and
serializing again reproduces the same bytes.
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Tuple, Union

from packaging.version import InvalidVersion, Version

from models import (
    Alphabet,
    BuchiAutomaton,
    BuchiTransducer,
    ContinuityVerdict,
    LassoWord,
    Manifest,
    ManifestKind,
    PcpRegInstance,
    Provenance,
    RationalRelationWitness,
    Rule,
    TuringMachine,
)
from models.errors import ManifestError, OmegaError

logger = logging.getLogger(__name__)

FORMAT_VERSION = '1.0'
SUPPORTED_MAJOR = 1

Serializable = Union[BuchiAutomaton, BuchiTransducer, PcpRegInstance, TuringMachine,
                     LassoWord, ContinuityVerdict, RationalRelationWitness]


# ---------------------------------------------------------------------------
# Payloads
# ---------------------------------------------------------------------------

def _names(names):
    return list(names) if names is not None else None


def automaton_payload(automaton: BuchiAutomaton) -> Dict[str, Any]:
    return {
        'alphabet': automaton.alphabet.to_dict(),
        'states': automaton.num_states,
        'state_names': _names(automaton.state_names),
        'initial': automaton.initial,
        'accepting': sorted(automaton.accepting),
        'transitions': [[p, a, q] for p, a, q in automaton.transitions],
    }


def automaton_from_payload(data: Dict[str, Any]) -> BuchiAutomaton:
    return BuchiAutomaton(
        num_states=int(data['states']),
        alphabet=Alphabet.of(data['alphabet']),
        transitions=tuple((int(p), str(a), int(q)) for p, a, q in data['transitions']),
        initial=int(data['initial']),
        accepting=frozenset(int(q) for q in data['accepting']),
        state_names=data.get('state_names'),
    )


def transducer_payload(transducer: BuchiTransducer) -> Dict[str, Any]:
    return {
        'input_alphabet': transducer.input_alphabet.to_dict(),
        'output_alphabet': transducer.output_alphabet.to_dict(),
        'states': transducer.num_states,
        'state_names': _names(transducer.state_names),
        'initial': transducer.initial,
        'accepting': sorted(transducer.accepting),
        'transitions': [[p, list(u), list(v), q] for p, u, v, q in transducer.transitions],
    }


def transducer_from_payload(data: Dict[str, Any]) -> BuchiTransducer:
    return BuchiTransducer(
        num_states=int(data['states']),
        input_alphabet=Alphabet.of(data['input_alphabet']),
        output_alphabet=Alphabet.of(data['output_alphabet']),
        transitions=tuple((int(p), tuple(u), tuple(v), int(q)) for p, u, v, q in data['transitions']),
        initial=int(data['initial']),
        accepting=frozenset(int(q) for q in data['accepting']),
        state_names=data.get('state_names'),
    )


def instance_payload(instance: PcpRegInstance) -> Dict[str, Any]:
    return {
        'x_words': [list(w) for w in instance.x_words],
        'y_words': [list(w) for w in instance.y_words],
        'constraint': automaton_payload(instance.constraint),
    }


def instance_from_payload(data: Dict[str, Any]) -> PcpRegInstance:
    return PcpRegInstance(
        x_words=tuple(tuple(w) for w in data['x_words']),
        y_words=tuple(tuple(w) for w in data['y_words']),
        constraint=automaton_from_payload(data['constraint']),
    )


def machine_payload(machine: TuringMachine) -> Dict[str, Any]:
    return {
        'states': list(machine.states),
        'input_alphabet': machine.input_alphabet.to_dict(),
        'tape_alphabet': machine.tape_alphabet.to_dict(),
        'blank': machine.blank,
        'initial': machine.initial,
        'rules': [rule.to_list() for rule in machine.rules],
    }


def machine_from_payload(data: Dict[str, Any]) -> TuringMachine:
    return TuringMachine(
        states=tuple(data['states']),
        input_alphabet=Alphabet.of(data['input_alphabet']),
        tape_alphabet=Alphabet.of(data['tape_alphabet']),
        blank=data['blank'],
        initial=data['initial'],
        rules=tuple(Rule(*entry) for entry in data['rules']),
    )


def witness_from_payload(data: Dict[str, Any]) -> RationalRelationWitness:
    run = data.get('run') or {'stem': [], 'cycle': []}
    return RationalRelationWitness(
        input=LassoWord.from_dict(data['input']),
        output=LassoWord.from_dict(data['output']),
        stem=tuple(int(t) for t in run['stem']),
        cycle=tuple(int(t) for t in run['cycle']),
    )


_WRITERS = [
    (BuchiAutomaton, ManifestKind.AUTOMATON, automaton_payload),
    (BuchiTransducer, ManifestKind.TRANSDUCER, transducer_payload),
    (PcpRegInstance, ManifestKind.PCP_INSTANCE, instance_payload),
    (TuringMachine, ManifestKind.TURING_MACHINE, machine_payload),
    (LassoWord, ManifestKind.LASSO, lambda w: w.to_dict()),
    (ContinuityVerdict, ManifestKind.VERDICT, lambda v: v.to_dict()),
    (RationalRelationWitness, ManifestKind.WITNESS, lambda w: w.to_dict()),
]

_READERS = {
    ManifestKind.AUTOMATON: automaton_from_payload,
    ManifestKind.TRANSDUCER: transducer_from_payload,
    ManifestKind.PCP_INSTANCE: instance_from_payload,
    ManifestKind.TURING_MACHINE: machine_from_payload,
    ManifestKind.LASSO: LassoWord.from_dict,
    ManifestKind.VERDICT: ContinuityVerdict.from_dict,
    ManifestKind.WITNESS: witness_from_payload,
}


# ---------------------------------------------------------------------------
# Manifests
# ---------------------------------------------------------------------------

def to_manifest(obj: Serializable, provenance: Optional[Provenance] = None,
                version: str = FORMAT_VERSION) -> Manifest:
    for cls, kind, writer in _WRITERS:
        if isinstance(obj, cls):
            return Manifest(kind, version, writer(obj), provenance)
    raise ManifestError(f"No manifest kind for {type(obj).__name__}")


def check_version(version: str):
    try:
        parsed = Version(str(version))
    except InvalidVersion:
        raise ManifestError(f"Unrecognized manifest version {version!r}") from None
    if parsed.major != SUPPORTED_MAJOR:
        raise ManifestError(f"Manifest version {version} is not supported (expected {SUPPORTED_MAJOR}.x)")


def dumps(obj: Serializable, provenance: Optional[Provenance] = None, version: str = FORMAT_VERSION) -> str:
    return dump_manifest(to_manifest(obj, provenance, version))


def dump_manifest(manifest: Manifest) -> str:
    return json.dumps(manifest.to_dict(), indent=2, ensure_ascii=False) + '\n'


def parse_manifest(text: str) -> Manifest:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ManifestError(f"Manifest is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ManifestError("Manifest must be a JSON object")
    missing = {'kind', 'version', 'payload'} - set(data)
    if missing:
        raise ManifestError(f"Manifest lacks fields {sorted(missing)}")
    try:
        kind = ManifestKind(data['kind'])
    except ValueError:
        raise ManifestError(f"Unknown manifest kind {data['kind']!r}") from None
    check_version(data['version'])
    provenance = data.get('provenance')
    if provenance is not None:
        try:
            provenance = Provenance(str(provenance['source_sha256']), str(provenance['command']))
        except (KeyError, TypeError):
            raise ManifestError("Provenance needs source_sha256 and command") from None
    return Manifest(kind, str(data['version']), data['payload'], provenance)


def from_manifest(manifest: Manifest, expected: Optional[Iterable[ManifestKind]] = None) -> Serializable:
    if expected is not None:
        expected = tuple(expected)
        if manifest.kind not in expected:
            names = ', '.join(k.value for k in expected)
            raise ManifestError(f"Expected a manifest of kind {names}, got {manifest.kind.value}")
    try:
        return _READERS[manifest.kind](manifest.payload)
    except OmegaError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ManifestError(f"Invalid {manifest.kind.value} payload: {exc!r}") from exc


def loads(text: str, expected: Optional[Iterable[ManifestKind]] = None) -> Tuple[Serializable, Manifest]:
    manifest = parse_manifest(text)
    return from_manifest(manifest, expected), manifest


def file_sha256(path: Union[str, Path]) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def load_file(path: Union[str, Path], expected: Optional[Iterable[ManifestKind]] = None
              ) -> Tuple[Serializable, Manifest]:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise ManifestError(f"Cannot read {path}: {exc.strerror}") from exc
    obj, manifest = loads(text, expected)
    logger.debug(f"Loaded {manifest.kind.value} from {path}")
    return obj, manifest


def save_file(path: Union[str, Path], obj: Serializable, provenance: Optional[Provenance] = None,
              version: str = FORMAT_VERSION) -> Path:
    path = Path(path)
    if path.parent:
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(obj, provenance, version), encoding='utf-8')
    logger.info(f"Wrote {path}")
    return path


def verify_provenance(manifest: Manifest, source: Union[str, Path]) -> bool:
    """True when the manifest records the hash of `source`'s bytes."""
    if manifest.provenance is None:
        return False
    return manifest.provenance.source_sha256 == file_sha256(source)


class ManifestStore:
    """Reads and writes versioned manifests on disk."""

    def __init__(self, version: str = FORMAT_VERSION):
        """Initialize the store with the format version it writes."""
        check_version(version)
        self.version = version

    @classmethod
    def from_config(cls, settings) -> 'ManifestStore':
        return cls(settings.MANIFEST_VERSION)

    def load(self, path: Union[str, Path], expected: Optional[Iterable[ManifestKind]] = None
             ) -> Tuple[Serializable, Manifest]:
        return load_file(path, expected)

    def save(self, path: Union[str, Path], obj: Serializable, provenance: Optional[Provenance] = None) -> Path:
        return save_file(path, obj, provenance, version=self.version)

    def dumps(self, obj: Serializable) -> str:
        return dump_manifest(to_manifest(obj, version=self.version))

    def provenance_for(self, source: Union[str, Path], command: str) -> Provenance:
        return Provenance(source_sha256=file_sha256(source), command=command)

    def verify_provenance(self, manifest: Manifest, source: Union[str, Path]) -> bool:
        """True when the recorded hash matches `source`; a manifest without provenance is an error."""
        if manifest.provenance is None:
            raise ManifestError(f"{manifest.kind.value} manifest records no provenance")
        matches = verify_provenance(manifest, source)
        logger.info(f"Provenance of {manifest.kind.value} against {source}: {'match' if matches else 'mismatch'}")
        return matches
