"""Engine configuration: one YAML file, environment variables for secrets.

Every load error names the offending field path so a typo in a nested
section is findable without reading this module.  Secrets (provider API
keys) are never stored in the file; the file names the environment
variable that holds them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

import yaml

from .perception.pointer import PointerColorProfile
from .services import DEFAULT_TIMEOUT_S
from .spatial import SpatialConfig
from .transport import DEFAULT_PORT

INGESTION_MODES = ("live-camera", "image-dir", "video-file")
DETECTOR_KINDS = ("fixture", "adapter")
SERVICE_MODES = ("fixture", "http")


class ConfigError(Exception):
    """Configuration file invalid; message carries the field path."""


def _type_name(value: object) -> str:
    return type(value).__name__


class _Section:
    """Typed accessor over one mapping level, tracking the field path."""

    def __init__(self, data: Mapping[str, Any], path: str) -> None:
        self._data = data
        self._path = path

    def _full(self, key: str) -> str:
        return f"{self._path}.{key}" if self._path else key

    def section(self, key: str) -> "_Section":
        value = self._data.get(key, {})
        if value is None:
            value = {}
        if not isinstance(value, Mapping):
            raise ConfigError(f"{self._full(key)}: expected a mapping, got {_type_name(value)}")
        return _Section(value, self._full(key))

    def get(self, key: str, kind: type, default: Any) -> Any:
        if key not in self._data or self._data[key] is None:
            return default
        value = self._data[key]
        if kind is float and isinstance(value, int) and not isinstance(value, bool):
            return float(value)
        if kind is int and isinstance(value, bool):
            raise ConfigError(f"{self._full(key)}: expected int, got bool")
        if not isinstance(value, kind):
            raise ConfigError(
                f"{self._full(key)}: expected {kind.__name__}, got {_type_name(value)}"
            )
        return value

    def require(self, key: str, kind: type) -> Any:
        if key not in self._data or self._data[key] is None:
            raise ConfigError(f"{self._full(key)}: required field is missing")
        return self.get(key, kind, None)

    def choice(self, key: str, options: tuple[str, ...], default: str | None = None) -> str:
        value = (
            self.require(key, str) if default is None else self.get(key, str, default)
        )
        if value not in options:
            raise ConfigError(
                f"{self._full(key)}: {value!r} is not one of {', '.join(options)}"
            )
        return value

    def str_list(self, key: str) -> tuple[str, ...]:
        value = self._data.get(key)
        if value is None:
            return ()
        if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
            raise ConfigError(f"{self._full(key)}: expected a list of strings")
        return tuple(value)


@dataclass(frozen=True, slots=True)
class IngestionConfig:
    mode: str
    path: str | None = None
    device: int = 0
    fps: float = 30.0


@dataclass(frozen=True, slots=True)
class PerceptionConfig:
    detector: str = "fixture"
    depth: str = "fixture"
    annotations: str | None = None
    conf_threshold: float = 0.25
    adapter_cmd: tuple[str, ...] = ()
    adapter_letterboxed: bool = False
    pointer: PointerColorProfile = field(default_factory=PointerColorProfile)


@dataclass(frozen=True, slots=True)
class ServicesConfig:
    mode: str = "fixture"
    fixture_dir: str | None = None
    scene_name: str = ""
    endpoint: str = ""
    api_key_env: str = "SCENEREADER_API_KEY"
    model: str = "default"
    timeout_s: float = DEFAULT_TIMEOUT_S


@dataclass(frozen=True, slots=True)
class TransportConfig:
    host: str = "127.0.0.1"
    port: int = DEFAULT_PORT


@dataclass(frozen=True, slots=True)
class BenchConfig:
    iterations: int = 100
    dispatches: int = 60
    seed: int = 0


@dataclass(frozen=True, slots=True)
class EngineConfig:
    ingestion: IngestionConfig
    perception: PerceptionConfig = field(default_factory=PerceptionConfig)
    spatial: SpatialConfig = field(default_factory=SpatialConfig)
    services: ServicesConfig = field(default_factory=ServicesConfig)
    transport: TransportConfig = field(default_factory=TransportConfig)
    bench: BenchConfig = field(default_factory=BenchConfig)


def _parse_ingestion(sec: _Section, base: Path) -> IngestionConfig:
    mode = sec.choice("mode", INGESTION_MODES)
    fps = sec.get("fps", float, 30.0)
    if fps <= 0:
        raise ConfigError("ingestion.fps: must be positive")
    if mode == "live-camera":
        return IngestionConfig(mode=mode, device=sec.get("device", int, 0), fps=fps)
    raw_path = sec.require("path", str)
    resolved = (base / raw_path).resolve() if not Path(raw_path).is_absolute() else Path(raw_path)
    if mode == "image-dir" and not resolved.is_dir():
        raise ConfigError(f"ingestion.path: directory {resolved} does not exist")
    if mode == "video-file" and not resolved.is_file():
        raise ConfigError(f"ingestion.path: file {resolved} does not exist")
    return IngestionConfig(mode=mode, path=str(resolved), fps=fps)


def _resolve_existing(value: str | None, base: Path, field_path: str, *, is_dir: bool) -> str | None:
    if value is None:
        return None
    resolved = (base / value).resolve() if not Path(value).is_absolute() else Path(value)
    ok = resolved.is_dir() if is_dir else resolved.is_file()
    if not ok:
        kind = "directory" if is_dir else "file"
        raise ConfigError(f"{field_path}: {kind} {resolved} does not exist")
    return str(resolved)


def _parse_perception(sec: _Section, base: Path) -> PerceptionConfig:
    detector = sec.choice("detector", DETECTOR_KINDS, default="fixture")
    depth = sec.choice("depth", DETECTOR_KINDS, default="fixture")
    annotations = _resolve_existing(
        sec.get("annotations", str, None), base, "perception.annotations", is_dir=False
    )
    if "fixture" in (detector, depth) and annotations is None:
        raise ConfigError(
            "perception.annotations: required when a fixture backend is selected"
        )
    adapter_cmd = sec.str_list("adapter_cmd")
    if "adapter" in (detector, depth) and not adapter_cmd:
        raise ConfigError("perception.adapter_cmd: required for adapter backends")
    conf = sec.get("conf_threshold", float, 0.25)
    if not 0.0 <= conf <= 1.0:
        raise ConfigError("perception.conf_threshold: outside [0, 1]")
    psec = sec.section("pointer")
    pointer = PointerColorProfile(
        hue_lo=psec.get("hue_lo", float, 90.0),
        hue_hi=psec.get("hue_hi", float, 150.0),
        s_min=psec.get("s_min", float, 0.35),
        v_min=psec.get("v_min", float, 0.25),
        min_pixels=psec.get("min_pixels", int, 50),
    )
    return PerceptionConfig(
        detector=detector,
        depth=depth,
        annotations=annotations,
        conf_threshold=conf,
        adapter_cmd=adapter_cmd,
        adapter_letterboxed=sec.get("adapter_letterboxed", bool, False),
        pointer=pointer,
    )


def _parse_spatial(sec: _Section) -> SpatialConfig:
    try:
        return SpatialConfig(
            horizontal_fov=sec.get("horizontal_fov", float, 1.745),
            min_gain=sec.get("min_gain", float, 0.15),
            gain_exponent=sec.get("gain_exponent", float, 1.0),
            sweep_gap_ms=sec.get("sweep_gap_ms", int, 350),
            aim_radius=sec.get("aim_radius", float, 80.0),
        )
    except ValueError as exc:
        raise ConfigError(f"spatial: {exc}") from None


def _parse_services(sec: _Section, base: Path) -> ServicesConfig:
    mode = sec.choice("mode", SERVICE_MODES, default="fixture")
    endpoint = sec.get("endpoint", str, "")
    if mode == "http" and not endpoint:
        raise ConfigError("services.endpoint: required when services.mode is http")
    return ServicesConfig(
        mode=mode,
        fixture_dir=_resolve_existing(
            sec.get("fixture_dir", str, None), base, "services.fixture_dir", is_dir=True
        ),
        scene_name=sec.get("scene_name", str, ""),
        endpoint=endpoint,
        api_key_env=sec.get("api_key_env", str, "SCENEREADER_API_KEY"),
        model=sec.get("model", str, "default"),
        timeout_s=sec.get("timeout_s", float, DEFAULT_TIMEOUT_S),
    )


def _parse_transport(sec: _Section) -> TransportConfig:
    port = sec.get("port", int, DEFAULT_PORT)
    if not 0 <= port <= 65535:
        raise ConfigError("transport.port: outside [0, 65535]")
    return TransportConfig(host=sec.get("host", str, "127.0.0.1"), port=port)


def _parse_bench(sec: _Section) -> BenchConfig:
    return BenchConfig(
        iterations=sec.get("iterations", int, 100),
        dispatches=sec.get("dispatches", int, 60),
        seed=sec.get("seed", int, 0),
    )


def parse_config(data: Mapping[str, Any], base: Path) -> EngineConfig:
    root = _Section(data, "")
    return EngineConfig(
        ingestion=_parse_ingestion(root.section("ingestion"), base),
        perception=_parse_perception(root.section("perception"), base),
        spatial=_parse_spatial(root.section("spatial")),
        services=_parse_services(root.section("services"), base),
        transport=_parse_transport(root.section("transport")),
        bench=_parse_bench(root.section("bench")),
    )


def load_config(path: str | Path) -> EngineConfig:
    """Parse and validate the engine config; relative paths resolve against
    the config file's directory."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file {path} does not exist")
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    if data is None:
        data = {}
    if not isinstance(data, Mapping):
        raise ConfigError(f"{path}: top level must be a mapping")
    return parse_config(data, path.parent)
