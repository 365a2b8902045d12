"""Shared test configuration."""

from hypothesis import settings

settings.register_profile("ballratio", deadline=None, derandomize=True)
settings.load_profile("ballratio")
