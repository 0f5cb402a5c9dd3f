"""Place-name geocoding with an on-disk cache and polite rate limiting.

The client speaks the lowest common denominator of public geocoding
services: HTTP GET with a single query parameter against a configurable base
URL, answered by a JSON array of results carrying decimal "lat"/"lon" fields
(strings or numbers); the first result wins.

Lookups are cached in a JSON-lines file keyed by the normalized query
(lowercased, whitespace collapsed). A cached query never touches the network
again until the cache file is deleted. Network requests are serialized, at
least one second apart, and retried with exponential backoff.
"""

from __future__ import annotations

import json
import logging
import os
import threading
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import requests

from .errors import (
    GeocodeNotFoundError,
    GeocodeProtocolError,
    GeocodeTransportError,
    InputError,
)
from .geodesy import Coordinate

logger = logging.getLogger(__name__)

ENDPOINT_ENV = "IXP_PLACEMENT_GEOCODER_URL"
CACHE_ENV = "IXP_PLACEMENT_GEOCODE_CACHE"


def normalize_query(query: str) -> str:
    """Lowercase and collapse whitespace; cache lookups match on this exactly."""
    return " ".join(query.split()).lower()


def default_cache_path() -> Path:
    override = os.environ.get(CACHE_ENV)
    if override:
        return Path(override)
    data_home = os.environ.get("XDG_DATA_HOME")
    base = Path(data_home) if data_home else Path.home() / ".local" / "share"
    return base / "ixp-placement" / "geocode-cache.jsonl"


@dataclass(frozen=True)
class CacheEntry:
    query: str
    lat: float
    lon: float
    retrieved_at: str


class GeocodeCache:
    """JSON-lines cache file; whole-file rewrites go through a temp+rename."""

    def __init__(self, path=None):
        self.path = Path(path) if path is not None else default_cache_path()
        self._entries: dict[str, CacheEntry] = {}
        self._load()

    def _load(self):
        if not self.path.exists():
            return
        for raw in self.path.read_text(encoding="utf-8").splitlines():
            raw = raw.strip()
            if not raw:
                continue
            try:
                doc = json.loads(raw)
                entry = CacheEntry(
                    query=doc["query"],
                    lat=float(doc["lat"]),
                    lon=float(doc["lon"]),
                    retrieved_at=doc["retrieved_at"],
                )
            except (json.JSONDecodeError, KeyError, TypeError, ValueError):
                logger.warning("skipping unreadable cache line in %s", self.path)
                continue
            self._entries[entry.query] = entry  # later lines win

    def get(self, normalized_query: str) -> Coordinate | None:
        entry = self._entries.get(normalized_query)
        if entry is None:
            return None
        return Coordinate(entry.lat, entry.lon)

    def put(self, normalized_query: str, coordinate: Coordinate) -> None:
        entry = CacheEntry(
            query=normalized_query,
            lat=coordinate.latitude_deg,
            lon=coordinate.longitude_deg,
            retrieved_at=datetime.now(timezone.utc).isoformat(),
        )
        self._entries[normalized_query] = entry
        self._write()

    def _write(self):
        self.path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.path.with_name(self.path.name + ".tmp")
        lines = [
            json.dumps(
                {"query": e.query, "lat": e.lat, "lon": e.lon,
                 "retrieved_at": e.retrieved_at},
                ensure_ascii=False,
            )
            for e in self._entries.values()
        ]
        tmp.write_text("\n".join(lines) + "\n", encoding="utf-8")
        os.replace(tmp, self.path)

    def __len__(self):
        return len(self._entries)


class GeocoderClient:
    """Serialized, cached, rate-limited geocoding client.

    sleep/clock are injectable so tests do not wait out real backoff.
    """

    def __init__(self, base_url=None, cache=None, *, query_param="q",
                 timeout_s=10.0, max_attempts=3, backoff_start_s=1.0,
                 min_interval_s=1.0, sleep=time.sleep, clock=time.monotonic,
                 session=None):
        self.base_url = base_url if base_url is not None else os.environ.get(ENDPOINT_ENV)
        self.cache = cache if cache is not None else GeocodeCache()
        self.query_param = query_param
        self.timeout_s = timeout_s
        self.max_attempts = max_attempts
        self.backoff_start_s = backoff_start_s
        self.min_interval_s = min_interval_s
        self._sleep = sleep
        self._clock = clock
        self._session = session if session is not None else requests.Session()
        self._lock = threading.Lock()
        self._last_request_at = None

    def geocode(self, query: str) -> Coordinate:
        """Resolve a place name to a coordinate, via cache when possible."""
        normalized = normalize_query(query)
        if not normalized:
            raise InputError("geocode query must be non-empty")
        cached = self.cache.get(normalized)
        if cached is not None:
            logger.debug("cache hit for %r", normalized)
            return cached
        if not self.base_url:
            raise GeocodeTransportError(
                f"no geocoder endpoint configured (set {ENDPOINT_ENV} or pass base_url)"
            )
        with self._lock:
            self._respect_rate_limit()
            response = self._request(normalized)
        coordinate = self._parse(response)
        self.cache.put(normalized, coordinate)
        return coordinate

    def _respect_rate_limit(self):
        if self._last_request_at is None:
            return
        elapsed = self._clock() - self._last_request_at
        remaining = self.min_interval_s - elapsed
        if remaining > 0:
            self._sleep(remaining)

    def _request(self, normalized_query: str):
        delay = self.backoff_start_s
        last_exc = None
        for attempt in range(1, self.max_attempts + 1):
            try:
                response = self._session.get(
                    self.base_url,
                    params={self.query_param: normalized_query},
                    timeout=self.timeout_s,
                )
                self._last_request_at = self._clock()
                response.raise_for_status()
                return response
            except requests.RequestException as exc:
                self._last_request_at = self._clock()
                last_exc = exc
                if attempt < self.max_attempts:
                    logger.warning("geocode attempt %d/%d failed (%s); retrying in %.1fs",
                                   attempt, self.max_attempts, exc, delay)
                    self._sleep(delay)
                    delay *= 2
        raise GeocodeTransportError(
            f"geocoder unreachable after {self.max_attempts} attempts: {last_exc}"
        ) from last_exc

    def _parse(self, response) -> Coordinate:
        try:
            doc = response.json()
        except ValueError as exc:
            raise GeocodeProtocolError(f"response is not valid JSON: {exc}") from None
        if not isinstance(doc, list):
            raise GeocodeProtocolError(
                f"expected a JSON array of results, got {type(doc).__name__}"
            )
        if not doc:
            raise GeocodeNotFoundError("no results for query")
        first = doc[0]
        if not isinstance(first, dict) or "lat" not in first or "lon" not in first:
            raise GeocodeProtocolError(f"first result lacks lat/lon fields: {first!r}")
        try:
            return Coordinate(float(first["lat"]), float(first["lon"]))
        except (TypeError, ValueError, InputError) as exc:
            raise GeocodeProtocolError(f"unusable lat/lon in result: {exc}") from None


def geocode(query: str, client: GeocoderClient) -> Coordinate:
    """Module-level convenience wrapper around GeocoderClient.geocode."""
    return client.geocode(query)
