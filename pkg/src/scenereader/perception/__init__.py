"""Pluggable perception backends: object detection, depth, pointer."""

from .adapter import AdapterDepthBackend, AdapterDetectorBackend, AdapterProcess
from .backends import (
    BackendUnavailable,
    DepthBackend,
    DepthScript,
    DetectorBackend,
    FixtureDepthBackend,
    FixtureDetectorBackend,
    FixtureScene,
    parse_annotation_file,
)
from .letterbox import LetterboxTransform, bbox_to_original, letterbox, letterbox_transform
from .pointer import GREEN_POINTER, PointerColorProfile, detect_pointer

__all__ = [
    "AdapterDepthBackend",
    "AdapterDetectorBackend",
    "AdapterProcess",
    "BackendUnavailable",
    "DepthBackend",
    "DepthScript",
    "DetectorBackend",
    "FixtureDepthBackend",
    "FixtureDetectorBackend",
    "FixtureScene",
    "GREEN_POINTER",
    "LetterboxTransform",
    "PointerColorProfile",
    "bbox_to_original",
    "detect_pointer",
    "letterbox",
    "letterbox_transform",
    "parse_annotation_file",
]
