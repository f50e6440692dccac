"""Provide the canonstrip models."""
from .base import CanonStripBase
from .generator import CatalogGenerator, ScanGenerator
from .helpers import EhrhartHelper, EmbeddedHelper, HilbertHelper
