"""Feature families for encoder fingerprinting and mp3stego detection.

Four fixed schemas:

* SI52 -- 13 side-info measurement series x (mean, std, min, max).
* MDCT64 -- 16 high-band magnitude sums per frame x the same four statistics.
* STEGO3 -- std/skewness/kurtosis of the calibrated relative gain difference.
* PROPOSED7 -- STEGO3 followed by four caller-selected SI52 features.

Stereo handling: each per-channel series is concatenated channel 0 first
("pooled", the default), or restricted to channel 0.  Feature names are stable
across runs; statistics use the sample standard deviation (n-1), with 0 for
degenerate series, and kurtosis is the non-excess standardized fourth moment.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, TextIO, Union

import numpy as np

from .errors import FieldRangeError, SchemaMismatchError, TooFewFramesError
from .sideinfo import ParsedFrame

POLICIES = ("pooled", "channel0")

_STATS = ("mean", "std", "min", "max")
_SI_SERIES = (
    "mdb", "scfsi_sum", "p23l.g0", "p23l.g1", "big_values", "region0_count",
    "region1_count", "preflag", "block_type", "global_gain",
    "table_select0", "table_select1", "table_select2",
)

SI52_NAMES = tuple(f"si.{series}.{stat}" for series in _SI_SERIES for stat in _STATS)
MDCT64_NAMES = tuple(f"mdct.sb{band:02d}.{stat}" for band in range(16) for stat in _STATS)
STEGO3_NAMES = ("stego.g.std", "stego.g.skewness", "stego.g.kurtosis")

SCHEMA_NAMES = {"SI52": SI52_NAMES, "MDCT64": MDCT64_NAMES, "STEGO3": STEGO3_NAMES}

# High-band selection: 1-based coefficients 419..576 of each granule are kept
# (the low 418 are discarded), both granules concatenated, then split into 16
# contiguous sub-bands: twelve of 20 followed by four of 19.
KEEP_START = 418          # 0-based start of the kept range
KEPT_PER_GRANULE = 576 - KEEP_START
SUBBAND_SIZES = (20,) * 12 + (19,) * 4
assert sum(SUBBAND_SIZES) == 2 * KEPT_PER_GRANULE


@dataclass
class FeatureVector:
    schema_id: str
    names: tuple
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if len(self.names) != len(self.values):
            raise SchemaMismatchError(
                "%d names for %d values" % (len(self.names), len(self.values))
            )
        if len(set(self.names)) != len(self.names):
            raise SchemaMismatchError("feature names must be unique")


@dataclass
class GainSeries:
    """Time-ordered global_gain values, one per granule in decode order."""

    values: np.ndarray
    source: str = ""
    channel_policy: str = ""
    dropped_zeros: int = 0
    clamp_events: int = 0

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)

    def __len__(self) -> int:
        return len(self.values)


@dataclass
class CalibratedSeries:
    """c[m] = x[m]/x~[m] and g[m] = 2(x[m]-x[m+1])/(x[m]+x[m+1])."""

    c: np.ndarray
    g: np.ndarray


@dataclass
class NormStats:
    """Per-feature training mean/std, reused verbatim at prediction time."""

    schema_id: str
    names: tuple
    mean: np.ndarray
    std: np.ndarray


@dataclass(frozen=True)
class SignatureHit:
    rule: str
    encoder: str


def _check_policy(policy: str) -> None:
    if policy not in POLICIES:
        raise ValueError("channel_policy must be one of %r" % (POLICIES,))


def _channels(frames: Sequence[ParsedFrame], policy: str) -> range:
    if policy == "channel0":
        return range(1)
    return range(max(f.side_info.channels for f in frames))


def _stats(values) -> tuple[float, float, float, float]:
    arr = np.asarray(values, dtype=np.float64)
    std = float(arr.std(ddof=1)) if arr.size >= 2 else 0.0
    return float(arr.mean()), std, float(arr.min()), float(arr.max())


def si_feature_vector(frames: Sequence[ParsedFrame],
                      channel_policy: str = "pooled") -> FeatureVector:
    """52 side-info features: 13 series x (mean, std, min, max).

    main_data_begin drops the first two frames; scfsi flags are summed per
    channel per frame; part2_3_length is taken per granule; the remaining nine
    fields concatenate both granules.
    """
    _check_policy(channel_policy)
    if len(frames) < 3:
        raise TooFewFramesError(
            "SI features need >= 3 frames, got %d" % len(frames)
        )
    channels = _channels(frames, channel_policy)

    def per_channel(getter):
        out = []
        for ch in channels:
            for f in frames:
                if ch < f.side_info.channels:
                    out.append(getter(f, ch))
        return out

    def per_granule_channel(getter):
        out = []
        for ch in channels:
            for f in frames:
                if ch < f.side_info.channels:
                    out.append(getter(f.side_info.granules[0][ch]))
                    out.append(getter(f.side_info.granules[1][ch]))
        return out

    series = [
        [f.side_info.main_data_begin for f in frames[2:]],
        per_channel(lambda f, ch: sum(f.side_info.scfsi[ch])),
        per_channel(lambda f, ch: f.side_info.granules[0][ch].part2_3_length),
        per_channel(lambda f, ch: f.side_info.granules[1][ch].part2_3_length),
        per_granule_channel(lambda gc: gc.big_values),
        per_granule_channel(lambda gc: gc.region0_count),
        per_granule_channel(lambda gc: gc.region1_count),
        per_granule_channel(lambda gc: gc.preflag),
        per_granule_channel(lambda gc: gc.block_type),
        per_granule_channel(lambda gc: gc.global_gain),
        per_granule_channel(lambda gc: gc.table_select[0]),
        per_granule_channel(lambda gc: gc.table_select[1]),
        per_granule_channel(lambda gc: gc.table_select[2]),
    ]
    values = [stat for s in series for stat in _stats(s)]
    return FeatureVector(schema_id="SI52", names=SI52_NAMES, values=np.array(values))


def frame_subband_sums(granule_magnitudes) -> np.ndarray:
    """16 sub-band sums for one frame/channel given both granules' magnitudes."""
    kept = np.concatenate([np.asarray(m)[KEEP_START:] for m in granule_magnitudes])
    sums = np.empty(16, dtype=np.float64)
    start = 0
    for band, size in enumerate(SUBBAND_SIZES):
        sums[band] = kept[start:start + size].sum()
        start += size
    return sums


def mdct_feature_vector(spectra, channel_policy: str = "pooled") -> FeatureVector:
    """64 spectral features from decodable frames.

    `spectra` holds, per frame, [granule][channel] objects with a
    `magnitudes` array (or None for frames excluded by the decoder).  Each
    decodable frame/channel contributes one 16-band observation.
    """
    _check_policy(channel_policy)
    rows = []
    for frame in spectra:
        if frame is None:
            continue
        n_channels = len(frame[0])
        use = range(1) if channel_policy == "channel0" else range(n_channels)
        for ch in use:
            mags = [frame[granule][ch].magnitudes for granule in range(2)]
            if any(m is None for m in mags):
                continue
            rows.append(frame_subband_sums(mags))
    if not rows:
        raise TooFewFramesError("MDCT features need >= 1 decodable frame")
    table = np.vstack(rows)
    values = []
    for band in range(16):
        values.extend(_stats(table[:, band]))
    return FeatureVector(schema_id="MDCT64", names=MDCT64_NAMES, values=np.array(values))


def global_gain_series(frames: Sequence[ParsedFrame],
                       channel_policy: str = "pooled") -> GainSeries:
    """Granule-ordered global_gain sequence; zero-gain granules are dropped
    (counted) so calibration denominators stay positive."""
    _check_policy(channel_policy)
    raw = []
    for ch in _channels(frames, channel_policy):
        for f in frames:
            if ch < f.side_info.channels:
                raw.append(f.side_info.granules[0][ch].global_gain)
                raw.append(f.side_info.granules[1][ch].global_gain)
    dropped = sum(1 for v in raw if v == 0)
    values = [float(v) for v in raw if v != 0]
    if len(values) < 2:
        raise TooFewFramesError(
            "gain series needs >= 2 positive granules, got %d" % len(values)
        )
    return GainSeries(values=np.array(values), channel_policy=channel_policy,
                      dropped_zeros=dropped)


def calibrated_series(x: Union[GainSeries, np.ndarray, Sequence[float]]) -> CalibratedSeries:
    """Two-tap calibration: x~[m]=(x[m]+x[m+1])/2, c=x/x~, g=2(x[m]-x[m+1])/(x[m]+x[m+1])."""
    values = x.values if isinstance(x, GainSeries) else np.asarray(x, dtype=np.float64)
    if len(values) < 2:
        raise TooFewFramesError("calibration needs >= 2 values")
    if np.any(values <= 0):
        raise FieldRangeError("calibration requires strictly positive gains")
    head, tail = values[:-1], values[1:]
    estimate = (head + tail) / 2.0
    c = head / estimate
    g = 2.0 * (head - tail) / (head + tail)
    return CalibratedSeries(c=c, g=g)


def _g_moments(g: np.ndarray) -> tuple[float, float, float]:
    std = float(g.std(ddof=1)) if len(g) >= 2 else 0.0
    if std == 0.0:
        return 0.0, 0.0, 0.0
    centered = g - g.mean()
    skew = float(np.mean(centered ** 3) / std ** 3)
    kurt = float(np.mean(centered ** 4) / std ** 4)
    return std, skew, kurt


def stego_feature_vector(x: GainSeries) -> FeatureVector:
    """STEGO3: std, skewness, kurtosis of g[m]; all zero for constant input."""
    if len(x) < 4:
        raise TooFewFramesError("STEGO3 needs >= 4 gain values, got %d" % len(x))
    g = calibrated_series(x).g
    return FeatureVector(schema_id="STEGO3", names=STEGO3_NAMES,
                         values=np.array(_g_moments(g)))


def proposed7_vector(frames: Sequence[ParsedFrame], selected_si: Sequence[str],
                     channel_policy: str = "pooled") -> FeatureVector:
    """STEGO3 followed by four named SI52 features (GA-selected upstream)."""
    selected = tuple(selected_si)
    if len(selected) != 4:
        raise SchemaMismatchError("PROPOSED7 needs exactly 4 SI names, got %d" % len(selected))
    if len(set(selected)) != 4:
        raise SchemaMismatchError("selected SI names must be unique")
    unknown = [n for n in selected if n not in SI52_NAMES]
    if unknown:
        raise SchemaMismatchError("unknown SI features: %s" % ", ".join(unknown))
    stego = stego_feature_vector(global_gain_series(frames, channel_policy))
    si = si_feature_vector(frames, channel_policy)
    index = {name: i for i, name in enumerate(si.names)}
    si_values = [si.values[index[name]] for name in selected]
    return FeatureVector(
        schema_id="PROPOSED7",
        names=STEGO3_NAMES + selected,
        values=np.concatenate([stego.values, si_values]),
    )


def proposed7_names(selected_si: Sequence[str]) -> tuple:
    return STEGO3_NAMES + tuple(selected_si)


# ---------------------------------------------------------------------------
# first-frame encoder signatures


def _si_fingerprint(si) -> tuple:
    d = si.to_dict()
    d.pop("private_bits")
    return repr(d)


def first_frame_signature(frames: Sequence[ParsedFrame]) -> list[SignatureHit]:
    """Advisory encoder hints from the opening frames.

    Each rule inspects frame 0 (the constancy rule looks at frames 0..3) and
    must hold across all channels.  Hints are not a classification.
    """
    if len(frames) < 4:
        raise TooFewFramesError("signature rules need >= 4 frames, got %d" % len(frames))
    si = frames[0].side_info
    channels = range(si.channels)
    g0 = [si.granules[0][ch] for ch in channels]
    g1 = [si.granules[1][ch] for ch in channels]
    hits: list[SignatureHit] = []

    def coded_fields_zero() -> bool:
        if si.main_data_begin != 0 or any(sum(f) for f in si.scfsi):
            return False
        return not any(
            np.any(value)
            for gc in g0 + g1
            for value in gc.to_dict().values()
        )

    if coded_fields_zero():
        hits.append(SignatureHit("first_frame_si_zero", "lame"))
    if all(gc.global_gain == 210 for gc in g0 + g1):
        hits.append(SignatureHit("first_frame_gain_210_both", "plugger"))
    if all(gc.global_gain == 210 for gc in g0):
        hits.append(SignatureHit("first_frame_gain_210_g0", "gogo"))
    if any(flag for flags in si.scfsi for flag in flags):
        hits.append(SignatureHit("first_frame_scfsi_nonzero", "xing"))
    if all(gc.region0_count == 8 for gc in g0) and all(gc.region0_count == 7 for gc in g1):
        hits.append(SignatureHit("first_frame_region0_8_7", "plugger"))
    if all(gc.region0_count == 7 for gc in g0) and all(gc.region0_count == 8 for gc in g1):
        hits.append(SignatureHit("first_frame_region0_7_8", "8hz"))
    if all(gc.block_type == 3 for gc in g0) and all(gc.block_type == 2 for gc in g1):
        hits.append(SignatureHit("first_frame_blocktype_end_short", "plugger"))
    if all(gc.block_type == 1 for gc in g0) and all(gc.block_type == 3 for gc in g1):
        hits.append(SignatureHit("first_frame_blocktype_start_end", "8hz"))
    if all(gc.part2_3_length == 0 for gc in g0 + g1):
        hits.append(SignatureHit("first_frame_p23l_zero_both", "lame"))
        hits.append(SignatureHit("first_frame_p23l_zero_both", "plugger"))
    if all(gc.part2_3_length == 0 for gc in g0):
        hits.append(SignatureHit("first_frame_p23l_zero_g0", "gogo"))
    prints = {_si_fingerprint(frames[i].side_info) for i in range(4)}
    if len(prints) == 1:
        hits.append(SignatureHit("first_four_frames_si_constant", "plugger"))
    return hits


# ---------------------------------------------------------------------------
# normalization (per-feature standardization)


def fit_norm(X, names: Sequence[str] = (), schema_id: str = "") -> NormStats:
    """Per-column mean and sample std over a training matrix (rows = samples)."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] < 2:
        raise SchemaMismatchError("fit_norm needs >= 2 training vectors")
    return NormStats(
        schema_id=schema_id,
        names=tuple(names),
        mean=X.mean(axis=0),
        std=X.std(axis=0, ddof=1),
    )


def apply_norm(stats: NormStats, X) -> np.ndarray:
    """(x - mean) / std per column; zero-variance columns map to 0."""
    X = np.asarray(X, dtype=np.float64)
    width = X.shape[-1]
    if width != len(stats.mean):
        raise SchemaMismatchError(
            "vector has %d features, stats expect %d" % (width, len(stats.mean))
        )
    safe = np.where(stats.std == 0.0, 1.0, stats.std)
    out = (X - stats.mean) / safe
    return np.where(stats.std == 0.0, 0.0, out)


# ---------------------------------------------------------------------------
# feature CSV interface


def write_feature_csv(fh: TextIO, rows, include_label: bool = False) -> None:
    """Write (path, FeatureVector, label) rows; column order follows the schema."""
    rows = list(rows)
    if not rows:
        raise ValueError("no rows to write")
    names = rows[0][1].names
    header = ["path", *names] + (["label"] if include_label else [])
    fh.write(",".join(header) + "\n")
    for path, vector, label in rows:
        if vector.names != names:
            raise SchemaMismatchError("mixed schemas in one CSV")
        cells = [str(path), *(repr(float(v)) for v in vector.values)]
        if include_label:
            cells.append("" if label is None else str(label))
        fh.write(",".join(cells) + "\n")


@dataclass
class FeatureTable:
    paths: list
    names: tuple
    X: np.ndarray
    labels: Optional[list] = None


def read_feature_csv(fh: TextIO) -> FeatureTable:
    header = fh.readline().strip()
    if not header:
        raise ValueError("empty feature CSV")
    columns = header.split(",")
    has_path = columns and columns[0] == "path"
    has_label = columns and columns[-1] == "label"
    lo = 1 if has_path else 0
    hi = len(columns) - 1 if has_label else len(columns)
    names = tuple(columns[lo:hi])
    paths, rows, labels = [], [], []
    for line in fh:
        line = line.strip()
        if not line:
            continue
        cells = line.split(",")
        if len(cells) != len(columns):
            raise ValueError("row width %d != header width %d" % (len(cells), len(columns)))
        paths.append(cells[0] if has_path else "")
        rows.append([float(v) for v in cells[lo:hi]])
        labels.append(cells[-1] if has_label else None)
    X = np.array(rows, dtype=np.float64) if rows else np.empty((0, len(names)))
    return FeatureTable(
        paths=paths,
        names=names,
        X=X,
        labels=labels if has_label else None,
    )
