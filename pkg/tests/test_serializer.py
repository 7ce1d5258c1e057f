"""Manifest and HOA serialization tests."""

import json
import tempfile
import unittest
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from models import (
    ContinuityVerdict,
    LassoWord,
    ManifestKind,
    Provenance,
    RationalRelationWitness,
    VerdictKind,
)
from models.errors import InvalidLassoError, ManifestError
from services.hoa import HoaCodec, export_hoa, import_hoa
from services.omega_core import enumerate_lassos, nba_accepts_lasso, nba_is_empty
from services.reductions import pcp_to_function_F, tm_to_pcpreg
from services.samples import AB, i1_instance, infinitely_many, m_rec, two_branch_transducer
from services.sampling import RandomSampler
from services.serializer import (
    ManifestStore,
    dumps,
    file_sha256,
    load_file,
    loads,
    save_file,
    verify_provenance,
)

INSTANCES = Path(__file__).parent.parent / 'instances'


class TestManifests(unittest.TestCase):
    """Test manifest round trips for every kind."""

    def samples(self):
        return {
            ManifestKind.AUTOMATON: infinitely_many(AB, 'a'),
            ManifestKind.TRANSDUCER: pcp_to_function_F(i1_instance('universal')),
            ManifestKind.PCP_INSTANCE: tm_to_pcpreg(m_rec()),
            ManifestKind.TURING_MACHINE: m_rec(),
            ManifestKind.LASSO: LassoWord(('q0',), ('X', '#')),
            ManifestKind.VERDICT: ContinuityVerdict(
                VerdictKind.DISCONTINUITY_EVIDENCE, LassoWord(('1',), ('1', 'a')), 1, {1: 10},
                LassoWord(('1', '1', 'a'), ('1', 'b'))),
            ManifestKind.WITNESS: RationalRelationWitness(
                LassoWord((), ('a',)), LassoWord((), ('b',)), (0,), (1,)),
        }

    def test_round_trip_every_kind(self):
        """Test that dump, load and dump reproduce the same text."""
        for kind, obj in self.samples().items():
            with self.subTest(kind=kind.value):
                text = dumps(obj)
                loaded, manifest = loads(text)
                self.assertEqual(manifest.kind, kind)
                self.assertEqual(loaded, obj)
                self.assertEqual(dumps(loaded), text)

    def test_envelope(self):
        """Test the envelope fields and version."""
        data = json.loads(dumps(m_rec()))
        self.assertEqual(data['kind'], 'turing-machine')
        self.assertEqual(data['version'], '1.0')
        self.assertIsNone(data['provenance'])
        self.assertEqual(data['payload']['rules'][0], ['q0', '_', 'q1', 'X', 'S'])

    def test_runless_witness(self):
        """Test that a witness without a run writes null."""
        witness = RationalRelationWitness(LassoWord((), ('1', '2')), LassoWord((), ('a', 'b', 'b')), (), ())
        data = json.loads(dumps(witness))
        self.assertIsNone(data['payload']['run'])
        self.assertEqual(loads(dumps(witness))[0], witness)

    def test_expected_kind(self):
        """Test that reading the wrong kind raises."""
        with self.assertRaises(ManifestError):
            loads(dumps(m_rec()), expected=[ManifestKind.PCP_INSTANCE])

    def test_unsupported_version(self):
        """Test that other major versions are refused."""
        text = dumps(m_rec(), version='2.0')
        with self.assertRaises(ManifestError):
            loads(text)
        loads(dumps(m_rec(), version='1.3'))

    def test_malformed_manifests(self):
        """Test broken JSON, unknown kinds and bad payloads."""
        for text in ('{', '[]', '{"kind": "automaton", "version": "1.0"}',
                     '{"kind": "spaceship", "version": "1.0", "payload": {}}',
                     '{"kind": "lasso", "version": "1.0", "payload": {"prefix": []}}'):
            with self.subTest(text=text):
                with self.assertRaises(ManifestError):
                    loads(text)

    def test_invalid_object_inside_manifest(self):
        """Test that model validation errors surface unchanged."""
        text = '{"kind": "lasso", "version": "1.0", "payload": {"prefix": [], "loop": []}}'
        with self.assertRaises(InvalidLassoError):
            loads(text)

    def test_sample_instances_load(self):
        """Test that every shipped manifest loads."""
        for path in sorted(INSTANCES.glob('*.json')):
            with self.subTest(path=path.name):
                obj, manifest = load_file(path)
                self.assertEqual(dumps(obj), path.read_text(encoding='utf-8'))


class TestFiles(unittest.TestCase):
    """Test file helpers and provenance."""

    def setUp(self):
        """Set up test environment."""
        self.tmp = tempfile.TemporaryDirectory()
        self.root = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_provenance(self):
        """Test that provenance records the source hash."""
        source = save_file(self.root / 'm.json', m_rec())
        provenance = Provenance(file_sha256(source), 'reduce --target pcp')
        target = save_file(self.root / 'm.pcp.json', tm_to_pcpreg(m_rec()), provenance)
        _, manifest = load_file(target)
        self.assertTrue(verify_provenance(manifest, source))
        source.write_text(source.read_text(encoding='utf-8') + ' ', encoding='utf-8')
        self.assertFalse(verify_provenance(manifest, source))

    def test_missing_file(self):
        """Test that unreadable files raise a manifest error."""
        with self.assertRaises(ManifestError):
            load_file(self.root / 'absent.json')

    def test_store_round_trip_and_provenance(self):
        """Test saving, loading and checking provenance through the store."""
        store = ManifestStore('1.2')
        source = store.save(self.root / 'i1.json', i1_instance('universal'))
        target = store.save(self.root / 'i1.f.json', pcp_to_function_F(i1_instance('universal')),
                            store.provenance_for(source, 'reduce --target f'))
        obj, manifest = store.load(target, expected=[ManifestKind.TRANSDUCER])
        self.assertEqual(obj, pcp_to_function_F(i1_instance('universal')))
        self.assertEqual(manifest.version, '1.2')
        self.assertTrue(store.verify_provenance(manifest, source))
        self.assertFalse(store.verify_provenance(manifest, target))

    def test_store_refuses_missing_provenance(self):
        """Test that a manifest without provenance cannot be checked."""
        store = ManifestStore()
        path = store.save(self.root / 'm.json', m_rec())
        _, manifest = store.load(path)
        with self.assertRaises(ManifestError):
            store.verify_provenance(manifest, path)

    def test_store_version(self):
        """Test that the store only writes supported versions."""
        self.assertEqual(json.loads(ManifestStore('1.3').dumps(m_rec()))['version'], '1.3')
        with self.assertRaises(ManifestError):
            ManifestStore('2.0')


class TestHoa(unittest.TestCase):
    """Test HOA export and import."""

    def test_round_trip(self):
        """Test that export then import keeps the automaton."""
        automaton = infinitely_many(AB, 'a')
        text = export_hoa(automaton, name='inf_a')
        self.assertIn('Acceptance: 1 Inf(0)', text)
        self.assertIn('[0&!1] 1', text)
        self.assertEqual(import_hoa(text), automaton)

    def test_true_label(self):
        """Test that the label t stands for every symbol."""
        text = '\n'.join([
            'HOA: v1', 'States: 1', 'Start: 0', 'AP: 2 "a" "b"', 'Acceptance: 1 Inf(0)',
            '--BODY--', 'State: 0 {0}', '[t] 0', '--END--',
        ])
        automaton = import_hoa(text)
        self.assertEqual(len(automaton.transitions), 2)
        self.assertIsNotNone(nba_is_empty(automaton))
        self.assertTrue(nba_accepts_lasso(automaton, LassoWord((), ('a', 'b'))))

    def test_rejects_other_acceptance(self):
        """Test that generalized acceptance is refused."""
        text = '\n'.join([
            'HOA: v1', 'States: 1', 'Start: 0', 'AP: 1 "a"', 'Acceptance: 2 Inf(0)&Inf(1)',
            '--BODY--', 'State: 0', '[0] 0', '--END--',
        ])
        with self.assertRaises(ManifestError):
            import_hoa(text)

    def test_transducer_is_not_hoa(self):
        """Test that a transducer manifest is not an automaton."""
        with self.assertRaises(ManifestError):
            loads(dumps(two_branch_transducer()), expected=[ManifestKind.AUTOMATON])

    def test_codec(self):
        """Test the codec on a seeded random automaton."""
        codec = HoaCodec()
        automaton = RandomSampler(7).automaton(3, AB, edge_probability=0.5)
        imported = codec.parse(codec.export(automaton))
        for word in enumerate_lassos(AB, 2, 2):
            self.assertEqual(nba_accepts_lasso(imported, word), nba_accepts_lasso(automaton, word))


class TestRandomSampler(unittest.TestCase):
    """Test the seeded sampler."""

    def test_equal_seeds(self):
        """Test that equal seeds draw equal automata and lassos."""
        first, second = RandomSampler(5), RandomSampler(5)
        self.assertEqual(first.automaton(4, AB), second.automaton(4, AB))
        self.assertEqual(first.lasso(AB), second.lasso(AB))


if __name__ == '__main__':
    unittest.main()
