"""Parsing and validation of chronological tweet streams.

Input is newline-delimited JSON, one record per line, shaped like the
objects Twitter's streaming endpoint emits: ``id_str``, ``timestamp_ms``
(string or integer) or a textual ``created_at`` fallback, ``text``, ``lang``,
``source``, and a nested ``user`` object with ``id_str``, ``name``,
``time_zone``, ``location``, ``url`` and ``description``.  Unknown keys are
ignored.  Malformed lines never raise out of the stream readers; they are
classified and counted so callers can skip them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime
from typing import IO, Iterable, Iterator

MAX_TEXT_CODEPOINTS = 280

# Twitter's classic textual creation date, e.g. "Wed Aug 27 13:08:45 +0000 2008".
CREATED_AT_FORMAT = "%a %b %d %H:%M:%S %z %Y"


class RecordError(ValueError):
    """A line that cannot become a valid TweetRecord.

    ``reason`` is a stable machine-readable code:
    bad_json, missing_tweet_id, missing_user_id, missing_timestamp,
    bad_timestamp, missing_text, text_too_long.
    """

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


@dataclass(frozen=True)
class TweetRecord:
    """One element of a chronological tweet stream."""

    tweet_id: str
    user_id: str
    timestamp_ms: int
    text: str
    lang: str | None = None
    source: str | None = None
    user_name: str | None = None
    time_zone: str | None = None
    location: str | None = None
    profile_url: str | None = None
    profile_description: str | None = None


@dataclass(frozen=True)
class StreamStats:
    tweet_count: int
    period_ms: int
    malformed_count: int = 0
    out_of_order_count: int = 0


def _clean_optional(value: object) -> str | None:
    """Trim whitespace; empty-after-trim normalizes to absent."""
    if value is None:
        return None
    text = str(value).strip()
    return text if text else None


def _extract_timestamp(obj: dict) -> int:
    raw = obj.get("timestamp_ms")
    if raw is not None and str(raw).strip():
        try:
            ts = int(str(raw).strip())
        except ValueError:
            raise RecordError("bad_timestamp", f"timestamp_ms={raw!r}")
    else:
        created = obj.get("created_at")
        if created is None or not str(created).strip():
            raise RecordError("missing_timestamp")
        try:
            dt = datetime.strptime(str(created).strip(), CREATED_AT_FORMAT)
        except ValueError:
            raise RecordError("bad_timestamp", f"created_at={created!r}")
        ts = int(dt.timestamp() * 1000)
    if ts <= 0:
        raise RecordError("bad_timestamp", f"timestamp_ms must be > 0, got {ts}")
    return ts


def parse_record(line: str | bytes) -> TweetRecord:
    """Parse one raw line into a TweetRecord.

    Raises RecordError for anything that is not a valid record; never raises
    any other exception for arbitrary byte input.
    """
    if isinstance(line, bytes):
        line = line.decode("utf-8", errors="replace")
    try:
        obj = json.loads(line)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise RecordError("bad_json", str(exc)[:80])
    if not isinstance(obj, dict):
        raise RecordError("bad_json", "record is not an object")

    tweet_id = _clean_optional(obj.get("id_str"))
    if tweet_id is None:
        raise RecordError("missing_tweet_id")

    user = obj.get("user")
    if not isinstance(user, dict):
        user = {}
    user_id = _clean_optional(user.get("id_str"))
    if user_id is None:
        raise RecordError("missing_user_id")

    text = obj.get("text")
    if text is None:
        raise RecordError("missing_text")
    text = str(text).strip()
    if len(text) > MAX_TEXT_CODEPOINTS:
        raise RecordError("text_too_long", f"{len(text)} code points")

    return TweetRecord(
        tweet_id=tweet_id,
        user_id=user_id,
        timestamp_ms=_extract_timestamp(obj),
        text=text,
        lang=_clean_optional(obj.get("lang")),
        source=_clean_optional(obj.get("source")),
        user_name=_clean_optional(user.get("name")),
        time_zone=_clean_optional(user.get("time_zone")),
        location=_clean_optional(user.get("location")),
        profile_url=_clean_optional(user.get("url")),
        profile_description=_clean_optional(user.get("description")),
    )


def record_to_json(record: TweetRecord) -> dict:
    """Serialize back to the input schema; absent optionals are omitted."""
    user: dict = {"id_str": record.user_id}
    for key, value in (
        ("name", record.user_name),
        ("time_zone", record.time_zone),
        ("location", record.location),
        ("url", record.profile_url),
        ("description", record.profile_description),
    ):
        if value is not None:
            user[key] = value
    obj: dict = {
        "id_str": record.tweet_id,
        "timestamp_ms": record.timestamp_ms,
        "text": record.text,
        "user": user,
    }
    if record.lang is not None:
        obj["lang"] = record.lang
    if record.source is not None:
        obj["source"] = record.source
    return obj


def record_to_line(record: TweetRecord) -> str:
    return json.dumps(record_to_json(record), ensure_ascii=False)


@dataclass
class ReadCounters:
    """Mutable tallies filled while iterating a stream."""

    malformed: int = 0
    out_of_order: int = 0
    reasons: dict = field(default_factory=dict)


def read_records(
    lines: Iterable[str | bytes],
    counters: ReadCounters | None = None,
) -> Iterator[TweetRecord]:
    """Yield valid records from raw lines, counting skipped ones.

    Stream order is preserved as-is; out-of-order timestamps are tolerated
    and only tallied.
    """
    counters = counters if counters is not None else ReadCounters()
    last_ts = None
    for line in lines:
        if isinstance(line, str) and not line.strip():
            continue
        if isinstance(line, bytes) and not line.strip():
            continue
        try:
            record = parse_record(line)
        except RecordError as err:
            counters.malformed += 1
            counters.reasons[err.reason] = counters.reasons.get(err.reason, 0) + 1
            continue
        if last_ts is not None and record.timestamp_ms < last_ts:
            counters.out_of_order += 1
        last_ts = record.timestamp_ms
        yield record


def ensure_records(items: Iterable) -> list[TweetRecord]:
    """Validation helper: coerce TweetRecords, dicts or NDJSON lines.

    Unlike the stream readers this is strict and raises on the first invalid
    item, which suits library/estimator use where silent skips would
    misalign outputs.
    """
    records = []
    for i, item in enumerate(items):
        if isinstance(item, TweetRecord):
            records.append(item)
        elif isinstance(item, dict):
            records.append(parse_record(json.dumps(item)))
        elif isinstance(item, (str, bytes)):
            records.append(parse_record(item))
        else:
            raise TypeError(
                f"item {i}: expected TweetRecord, dict or NDJSON line, "
                f"got {type(item).__name__}"
            )
    return records


def stream_stats(
    records: Iterable[TweetRecord],
    malformed_count: int = 0,
    out_of_order_count: int = 0,
) -> StreamStats:
    """Count records and measure the covered period (max - min timestamp)."""
    count = 0
    lo = hi = None
    for record in records:
        count += 1
        ts = record.timestamp_ms
        if lo is None or ts < lo:
            lo = ts
        if hi is None or ts > hi:
            hi = ts
    period = (hi - lo) if count else 0
    return StreamStats(
        tweet_count=count,
        period_ms=period,
        malformed_count=malformed_count,
        out_of_order_count=out_of_order_count,
    )


def stats_from_lines(lines: Iterable[str | bytes]) -> StreamStats:
    counters = ReadCounters()
    stats = stream_stats(read_records(lines, counters))
    return StreamStats(
        tweet_count=stats.tweet_count,
        period_ms=stats.period_ms,
        malformed_count=counters.malformed,
        out_of_order_count=counters.out_of_order,
    )


def format_period(period_ms: int) -> str:
    """Human-readable duration, e.g. 51000 -> '51s', 17115000 -> '4h 45m 15s'."""
    seconds = period_ms // 1000
    days, seconds = divmod(seconds, 86400)
    hours, seconds = divmod(seconds, 3600)
    minutes, seconds = divmod(seconds, 60)
    parts = []
    if days:
        parts.append(f"{days}d")
    if hours or parts:
        parts.append(f"{hours}h")
    if minutes or parts:
        parts.append(f"{minutes}m")
    parts.append(f"{seconds}s")
    return " ".join(parts)


def open_input(path: str) -> IO[str]:
    """Open an input path for reading; '-' means stdin."""
    import sys

    if path == "-":
        return sys.stdin
    return open(path, "r", encoding="utf-8", errors="replace")
