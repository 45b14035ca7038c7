"""
SteinCert Configuration Module
"""
import os
from dotenv import load_dotenv

load_dotenv()

# Base directory
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def _env_bool(name, default):
    return os.environ.get(name, str(default)).strip().lower() in ('1', 'true', 'yes', 'on')


class Config:
    """Base configuration"""
    # Caps and tolerances
    DEGREE_CAP = int(os.environ.get('STEINCERT_DEGREE_CAP', 5000))
    K_VERIFY = int(os.environ.get('STEINCERT_K_VERIFY', 10000))
    GRID_SIZE = int(os.environ.get('STEINCERT_GRID', 400))
    TOLERANCE = float(os.environ.get('STEINCERT_TOL', 1e-9))

    # Sampling
    SEED = int(os.environ.get('STEINCERT_SEED', 0))
    SAMPLES = int(os.environ.get('STEINCERT_SAMPLES', 100000))

    # Output
    OUTPUT_FORMAT = os.environ.get('STEINCERT_FORMAT', 'json')

    # Lemma search
    LEMMA_SCAN_LIMIT = int(os.environ.get('STEINCERT_LEMMA_SCAN_LIMIT', 400))
    LEMMA_FLOOR = -0.48

    # Distance generation
    START_FRACTION = float(os.environ.get('STEINCERT_START_FRACTION', 0.9))
    SHRINK = float(os.environ.get('STEINCERT_SHRINK', 1.0))
    DECAY_SAFETY = 1.05
    POINTS_PER_PERIOD = 16
    DECAY_EXTRAPOLATION = _env_bool('STEINCERT_EXTRAPOLATE', True)

    # Logging - file under logs/ unless disabled
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'DEBUG')
    LOG_FILE = os.environ.get('STEINCERT_LOG_FILE', os.path.join(BASE_DIR, 'logs', 'steincert.log'))


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    ENV = 'development'


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False
    ENV = 'production'
    LOG_LEVEL = 'INFO'


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    ENV = 'testing'
    LOG_LEVEL = 'WARNING'
    LOG_FILE = None
    SAMPLES = 20000


config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}
