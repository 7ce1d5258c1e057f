"""Script to regenerate the sample manifests under instances/."""

import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import logging

from config import get_config
from services.samples import (
    infinitely_many,
    AB,
    sample_machines,
    suite_instances,
    two_branch_transducer,
)
from services.serializer import save_file

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def build_instances(target: Path):
    """Write every sample instance, machine and transducer as a manifest."""
    settings = get_config()
    objects = {}
    objects.update(suite_instances())
    objects.update(sample_machines())
    objects['two_branch'] = two_branch_transducer()
    objects['inf_a'] = infinitely_many(AB, 'a')

    for name, obj in objects.items():
        save_file(target / f'{name}.json', obj, version=settings.MANIFEST_VERSION)
    logger.info(f"Wrote {len(objects)} manifests to {target}")


if __name__ == '__main__':
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else get_config().INSTANCES_PATH
    build_instances(target)
