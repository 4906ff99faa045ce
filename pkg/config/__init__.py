"""Configuration module."""
from config.settings import settings
from config.log_setup import configure_logging

__all__ = ["settings", "configure_logging"]
