"""
WHQ Engine - Configuration Package
"""
from .settings import settings

__all__ = ["settings"]
