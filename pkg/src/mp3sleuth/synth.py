"""Synthetic gain series, embedding-noise injection, and fixture bitstreams.

Covers are band-limited integer gain series (leaky random walk shaped by a
windowed-sinc lowpass, scaled into 0..255).  The embedder perturbs a uniform
random subset of granules with zero-mean integer noise, abstracting the real
tool's hash-driven frame selection behind a single rate parameter.  The
fixture writer emits minimal CBR streams (no CRC) whose headers, side info,
and Huffman-coded main data parse back to the written values, including
reservoir placement via main_data_begin.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy import signal

from . import huffman
from .bitstream import BitWriter, FrameHeader, build_header
from .errors import FixtureError, InfeasibleSpecError, UnencodableSymbolError
from .features import GainSeries
from .maindata import SCFSI_GROUPS, _region_boundaries
from .sideinfo import BLOCK_SHORT, SideInfo, write_side_info

GAIN_MAX = 255

# Zero-mean integer noise model used for embedding simulation.
NOISE_VALUES = (-2, -1, 0, 1, 2)
NOISE_PROBS = (0.1, 0.3, 0.2, 0.3, 0.1)

_FIR_TAPS = 257
_WALK_POLE = 0.99
_WARMUP = 512


@dataclass
class CoverSpec:
    length: int = 4096
    cutoff: float = 0.04            # normalized frequency, Nyquist = 0.5
    base: float = 180.0
    amplitude: float = 10.0         # sample std of the generated series
    seed: int = 0


@dataclass
class StegoSpec:
    rate: float = 1.0               # fraction of granules perturbed
    seed: int = 0
    noise_values: tuple = NOISE_VALUES
    noise_probs: tuple = NOISE_PROBS

    def __post_init__(self):
        if not 0.0 <= self.rate <= 1.0:
            raise InfeasibleSpecError("rate must be in [0, 1], got %r" % (self.rate,))
        probs = np.asarray(self.noise_probs, dtype=np.float64)
        values = np.asarray(self.noise_values, dtype=np.float64)
        if len(probs) != len(values):
            raise InfeasibleSpecError("noise values and probabilities differ in length")
        if abs(probs.sum() - 1.0) > 1e-12 or np.any(probs < 0):
            raise InfeasibleSpecError("noise probabilities must be a distribution")
        if abs(float(values @ probs)) > 1e-12:
            raise InfeasibleSpecError("noise distribution must have zero mean")


def gen_cover_series(spec: CoverSpec) -> GainSeries:
    """Band-limited integer gain series; deterministic for a fixed seed."""
    if spec.length < 8:
        raise InfeasibleSpecError("cover length must be >= 8, got %d" % spec.length)
    if not 0.0 < spec.cutoff < 0.5:
        raise InfeasibleSpecError("cutoff must lie in (0, 0.5)")
    if spec.amplitude < 0:
        raise InfeasibleSpecError("amplitude must be non-negative")

    if spec.amplitude == 0:
        level = float(np.rint(spec.base))
        if not 0 <= level <= GAIN_MAX:
            raise InfeasibleSpecError("base level %r outside 0..255" % (spec.base,))
        return GainSeries(values=np.full(spec.length, level),
                          source="synth:seed=%d" % spec.seed)

    rng = np.random.default_rng(spec.seed)
    n = spec.length + _FIR_TAPS - 1 + _WARMUP
    white = rng.standard_normal(n)
    walk = signal.lfilter([1.0], [1.0, -_WALK_POLE], white)
    taps = signal.firwin(_FIR_TAPS, spec.cutoff, fs=1.0)
    shaped = np.convolve(walk, taps, mode="valid")[-spec.length:]
    shaped = (shaped - shaped.mean()) / shaped.std(ddof=1)
    values = np.rint(spec.base + spec.amplitude * shaped)
    if values.min() < 0 or values.max() > GAIN_MAX:
        raise InfeasibleSpecError(
            "spec places gains in [%g, %g], outside 0..255"
            % (values.min(), values.max())
        )
    return GainSeries(values=values, source="synth:seed=%d" % spec.seed)


def draw_noise(spec: StegoSpec, size: int, rng=None) -> np.ndarray:
    if rng is None:
        rng = np.random.default_rng(spec.seed)
    return rng.choice(np.asarray(spec.noise_values, dtype=np.float64),
                      size=size, p=spec.noise_probs)


def embed_noise(x: GainSeries, spec: StegoSpec) -> GainSeries:
    """Perturb round(rate * len) uniformly chosen granules with zero-mean noise.

    Results are clamped to 0..255; clamp events are counted on the returned
    series.  Unchanged positions are bit-identical to the input.
    """
    rng = np.random.default_rng(spec.seed)
    n = len(x)
    count = int(round(spec.rate * n))
    values = x.values.copy()
    clamped = 0
    if count:
        positions = rng.choice(n, size=count, replace=False)
        noise = draw_noise(spec, count, rng)
        values[positions] += noise
        outside = (values < 0) | (values > GAIN_MAX)
        clamped = int(outside.sum())
        np.clip(values, 0, GAIN_MAX, out=values)
    return GainSeries(values=values, source=x.source, channel_policy=x.channel_policy,
                      dropped_zeros=x.dropped_zeros, clamp_events=clamped)


# ---------------------------------------------------------------------------
# fixture bitstream writer


@dataclass
class GranulePayload:
    """Main-data content for one granule/channel of a fixture frame."""

    quantized: Optional[Sequence[int]] = None       # 576 values
    scalefactors_long: Optional[Sequence[int]] = None   # 21 values
    scalefactors_short: Optional[Sequence] = None       # 12 bands x 3 windows


@dataclass
class FrameSpec:
    side_info: SideInfo
    bitrate_kbps: int = 128
    sample_rate_hz: int = 44100
    padding: int = 0
    channel_mode: str = "mono"
    # payload[granule][channel]; None emits part2_3_length zero bits.
    payload: Optional[list] = None


def _encode_scalefactors(gc, payload: GranulePayload, scfsi_flags, granule_index,
                         granule0_payload, writer: BitWriter) -> None:
    slen1, slen2 = gc.slen1, gc.slen2
    is_short = gc.window_switching and gc.block_type == BLOCK_SHORT
    long_sf = list(payload.scalefactors_long or [0] * 21)
    short_sf = [list(row) for row in (payload.scalefactors_short or [[0] * 3] * 12)]

    def check(value, width, what):
        if not 0 <= value < (1 << width) or (width == 0 and value != 0):
            raise FixtureError("%s value %d does not fit %d bits" % (what, value, width))

    if is_short and not gc.mixed_block_flag:
        for band in range(12):
            width = slen1 if band < 6 else slen2
            for window in range(3):
                check(short_sf[band][window], width, "short scalefactor")
                if width:
                    writer.write(short_sf[band][window], width)
    elif is_short and gc.mixed_block_flag:
        for band in range(8):
            check(long_sf[band], slen1, "long scalefactor")
            if slen1:
                writer.write(long_sf[band], slen1)
        for band in range(3, 12):
            width = slen1 if band < 6 else slen2
            for window in range(3):
                check(short_sf[band][window], width, "short scalefactor")
                if width:
                    writer.write(short_sf[band][window], width)
    else:
        for group, (lo, hi) in enumerate(SCFSI_GROUPS):
            width = slen1 if group < 2 else slen2
            if granule_index == 1 and scfsi_flags[group]:
                reference = list((granule0_payload and granule0_payload.scalefactors_long)
                                 or [0] * 21)
                if long_sf[lo:hi] != reference[lo:hi] and payload.scalefactors_long:
                    raise FixtureError(
                        "scfsi group %d set but granule 1 scalefactors differ" % group
                    )
                continue
            for band in range(lo, hi):
                check(long_sf[band], width, "long scalefactor")
                if width:
                    writer.write(long_sf[band], width)


def _encode_spectrum(gc, quantized, sample_rate_hz: int, writer: BitWriter) -> None:
    q = list(quantized)
    if len(q) != 576:
        raise FixtureError("quantized spectrum must hold 576 values, got %d" % len(q))
    region1, region2 = _region_boundaries(gc, sample_rate_hz)
    tables = [huffman.pair_table(sel) for sel in gc.table_select]
    n_big = 2 * gc.big_values
    for i in range(0, n_big, 2):
        region = 0 if i < region1 else (1 if i < region2 else 2)
        huffman.encode_pair(tables[region], q[i], q[i + 1], writer)

    last_nonzero = max((i for i in range(n_big, 576) if q[i] != 0), default=n_big - 1)
    count1_end = n_big + -(-(last_nonzero + 1 - n_big) // 4) * 4 if last_nonzero >= n_big else n_big
    if count1_end > 576:
        raise FixtureError("count1 region runs past 576 values")
    quads = huffman.quad_table(gc.count1table_select)
    for i in range(n_big, count1_end, 4):
        huffman.encode_quad(quads, q[i:i + 4], writer)


def _granule_bits(gc, payload, scfsi_flags, granule_index, granule0_payload,
                  sample_rate_hz) -> BitWriter:
    writer = BitWriter()
    if payload is None:
        writer.write(0, 0)
        return writer
    _encode_scalefactors(gc, payload, scfsi_flags, granule_index, granule0_payload, writer)
    if payload.quantized is not None:
        try:
            _encode_spectrum(gc, payload.quantized, sample_rate_hz, writer)
        except UnencodableSymbolError as exc:
            raise FixtureError(str(exc)) from exc
    return writer


def write_fixture(frames: Sequence[FrameSpec], autofill_lengths: bool = False) -> bytes:
    """Emit a syntactically valid CBR MPEG-1 Layer III byte stream.

    part2_3_length accounting is enforced: coded content must fit each
    granule's declared budget (shortfall becomes zero stuffing), and reservoir
    placement honors main_data_begin.  With autofill_lengths the writer
    patches each part2_3_length to the exact coded size instead.
    """
    frames = [copy.deepcopy(spec) for spec in frames]
    headers = []
    capacities = []
    frame_bits: list[list[int]] = []

    for spec in frames:
        header = FrameHeader(
            bitrate_kbps=spec.bitrate_kbps,
            sample_rate_hz=spec.sample_rate_hz,
            padding=spec.padding,
            channel_mode=spec.channel_mode,
        )
        si = spec.side_info
        if si.channels != header.channels:
            raise FixtureError("side info channels do not match channel mode")
        capacity = header.frame_length_bytes - 4 - header.side_info_bytes
        if capacity < 0:
            raise FixtureError("frame too small for header and side info")
        headers.append(header)
        capacities.append(capacity)

        chunks = []
        for granule_index in range(2):
            for channel in range(header.channels):
                gc = si.granules[granule_index][channel]
                payload = None
                if spec.payload is not None:
                    payload = spec.payload[granule_index][channel]
                granule0_payload = None
                if spec.payload is not None and granule_index == 1:
                    granule0_payload = spec.payload[0][channel]
                writer = _granule_bits(gc, payload, si.scfsi[channel], granule_index,
                                       granule0_payload, spec.sample_rate_hz)
                coded = writer.bit_length
                if autofill_lengths and payload is not None:
                    gc.part2_3_length = coded
                if coded > gc.part2_3_length:
                    raise FixtureError(
                        "granule content (%d bits) exceeds part2_3_length %d"
                        % (coded, gc.part2_3_length)
                    )
                chunks.append((writer, gc.part2_3_length))
        frame_bits.append(chunks)

    pool_offsets = []
    acc = 0
    for capacity in capacities:
        pool_offsets.append(acc)
        acc += capacity
    total_pool_bytes = acc

    pool = BitWriter()
    for i, spec in enumerate(frames):
        declared = sum(length for _, length in frame_bits[i])
        start_byte = pool_offsets[i] - spec.side_info.main_data_begin
        if declared == 0:
            continue
        if start_byte < 0:
            raise FixtureError("frame %d main_data_begin exceeds available history" % i)
        start_bit = 8 * start_byte
        if start_bit < pool.bit_length:
            raise FixtureError("frame %d main data overlaps previous frame's" % i)
        if start_bit + declared > 8 * (pool_offsets[i] + capacities[i]):
            raise FixtureError("frame %d main data spills past its own frame" % i)
        pool.write(0, start_bit - pool.bit_length)
        for writer, length in frame_bits[i]:
            chunk = writer.getvalue()
            coded = writer.bit_length
            for j in range(0, coded, 8):
                take = min(8, coded - j)
                pool.write(chunk[j // 8] >> (8 - take), take)
            pool.write(0, length - coded)
    pool.write(0, 8 * total_pool_bytes - pool.bit_length)
    pool_bytes = pool.getvalue()

    out = bytearray()
    for i, spec in enumerate(frames):
        out += build_header(headers[i])
        out += write_side_info(spec.side_info, spec.channel_mode)
        out += pool_bytes[pool_offsets[i]:pool_offsets[i] + capacities[i]]
    return bytes(out)


def make_gain_fixture(gains: Sequence[int], channel_mode: str = "mono",
                      bitrate_kbps: int = 128, sample_rate_hz: int = 44100) -> bytes:
    """Minimal stream whose global_gain sequence equals `gains`.

    Gains are consumed in decode order (two granules per frame and channel);
    the length must divide evenly into frames.  All other fields stay zero.
    """
    from .sideinfo import GranuleChannel

    channels = 1 if channel_mode == "mono" else 2
    per_frame = 2 * channels
    if len(gains) == 0 or len(gains) % per_frame:
        raise FixtureError(
            "need a positive multiple of %d gains, got %d" % (per_frame, len(gains))
        )
    specs = []
    it = iter(gains)
    for _ in range(len(gains) // per_frame):
        granules = []
        for _ in range(2):
            row = []
            for _ in range(channels):
                row.append(GranuleChannel(global_gain=int(next(it))))
            granules.append(tuple(row))
        si = SideInfo(
            scfsi=tuple((0, 0, 0, 0) for _ in range(channels)),
            granules=tuple(granules),
        )
        specs.append(FrameSpec(side_info=si, channel_mode=channel_mode,
                               bitrate_kbps=bitrate_kbps, sample_rate_hz=sample_rate_hz))
    return write_fixture(specs)


def series_to_csv(fh, series: GainSeries) -> None:
    fh.write("index,gain\n")
    for i, value in enumerate(series.values):
        fh.write("%d,%d\n" % (i, int(value)))
