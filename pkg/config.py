"""Configuration settings for the ω-PCP toolkit."""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Base directory
BASE_DIR = Path(__file__).resolve().parent


class Config:
    """Base configuration."""

    DEBUG = False
    TESTING = False

    # Search bounds
    OVERHANG_BOUND = int(os.getenv('OVERHANG_BOUND', 8))
    TM_CONFIG_BOUND = int(os.getenv('TM_CONFIG_BOUND', 8))
    STEP_BUDGET = int(os.getenv('STEP_BUDGET', 100000))
    NONFUNCTIONALITY_BOUND = int(os.getenv('NONFUNCTIONALITY_BOUND', 8))
    PAIR_SEARCH_BOUND = int(os.getenv('PAIR_SEARCH_BOUND', 8))

    # Continuity probing
    PROBE_DEPTH = int(os.getenv('PROBE_DEPTH', 4))
    PROBE_K_MAX = int(os.getenv('PROBE_K_MAX', 16))

    # Manifests
    MANIFEST_VERSION = os.getenv('MANIFEST_VERSION', '1.0')
    INSTANCES_PATH = Path(os.getenv('INSTANCES_PATH', BASE_DIR / 'instances'))

    # Randomized sampling
    RANDOM_SEED = int(os.getenv('RANDOM_SEED', 0))

    # Logging
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
    LOG_FORMAT = os.getenv('LOG_FORMAT', 'text')


class DevelopmentConfig(Config):
    """Development configuration."""
    DEBUG = True
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'DEBUG')


class ProductionConfig(Config):
    """Production configuration."""
    DEBUG = False


class TestingConfig(Config):
    """Testing configuration."""
    TESTING = True
    STEP_BUDGET = 20000
    LOG_LEVEL = 'WARNING'


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}


def get_config():
    """Get configuration based on environment."""
    env = os.getenv('OMEGA_ENV', 'default')
    return config.get(env, ProductionConfig)
