"""
SteinCert - Application Factory
Numerical certificates for the quantitative Steinhaus theorem on
compact rank-one symmetric spaces
"""
import os
import logging
from logging.handlers import RotatingFileHandler

from flask import Flask

from .config import config

LOG_FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'


def create_app(config_name=None):
    """Application factory function"""
    if config_name is None:
        config_name = os.environ.get('STEINCERT_ENV', 'development')
    if config_name not in config:
        raise KeyError(f"Unknown configuration '{config_name}'")

    app = Flask(__name__)
    app.config.from_object(config[config_name])

    log_file = app.config.get('LOG_FILE')
    if log_file:
        try:
            os.makedirs(os.path.dirname(log_file), exist_ok=True)
        except OSError as e:
            app.config['LOG_FILE'] = None
            logging.getLogger(__name__).warning(f"Log file disabled: {e}")

    configure_logging(app)

    app.logger.debug(f"SteinCert configured for '{config_name}'")
    return app


def configure_logging(app):
    """Configure package logging"""
    log_level = getattr(logging, str(app.config['LOG_LEVEL']).upper(), logging.DEBUG)
    formatter = logging.Formatter(LOG_FORMAT)

    # Repeated factory calls replace the handlers instead of stacking them
    for handler in list(app.logger.handlers):
        app.logger.removeHandler(handler)
        handler.close()

    if app.config.get('LOG_FILE'):
        file_handler = RotatingFileHandler(
            app.config['LOG_FILE'],
            maxBytes=10 * 1024 * 1024,  # 10MB
            backupCount=10
        )
        file_handler.setLevel(log_level)
        file_handler.setFormatter(formatter)
        app.logger.addHandler(file_handler)

    # Console output goes to stderr so command output on stdout stays clean
    console_handler = logging.StreamHandler()
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)
    app.logger.addHandler(console_handler)

    app.logger.setLevel(log_level)
    app.logger.propagate = False
