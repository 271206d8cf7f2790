"""Scalefactor and spectrum decoding plus requantization of granule main data.

Each granule/channel owns part2_3_length bits of the frame's assembled main
data: scalefactors first (part2), then Huffman-coded spectral values (part3).
Frames whose main data is incomplete still contribute side-info features but
are excluded here; a malformed codeword marks the whole frame undecodable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from . import huffman
from .bitstream import BitReader, MainDataSlice
from .errors import MalformedCodewordError, TruncatedStreamError
from .sideinfo import (
    BLOCK_SHORT,
    GranuleChannel,
    ParsedFrame,
    parse_stream,
    stream_slices,
)

# Scalefactor band start indices (ISO 11172-3 table B.8), terminated at 576
# (long) / 192 per window (short).
SCALEFAC_BANDS_LONG = {
    44100: (0, 4, 8, 12, 16, 20, 24, 30, 36, 44, 52, 62, 74, 90, 110, 134,
            162, 196, 238, 288, 342, 418, 576),
    48000: (0, 4, 8, 12, 16, 20, 24, 30, 36, 42, 50, 60, 72, 88, 106, 128,
            156, 190, 230, 276, 330, 384, 576),
    32000: (0, 4, 8, 12, 16, 20, 24, 30, 36, 44, 54, 66, 82, 102, 126, 156,
            194, 240, 296, 364, 448, 550, 576),
}
SCALEFAC_BANDS_SHORT = {
    44100: (0, 4, 8, 12, 16, 22, 30, 40, 52, 66, 84, 106, 136, 192),
    48000: (0, 4, 8, 12, 16, 22, 28, 38, 50, 64, 80, 100, 126, 192),
    32000: (0, 4, 8, 12, 16, 22, 30, 42, 58, 78, 104, 138, 180, 192),
}

# Pre-emphasis amounts per long scalefactor band (preflag).
PRETAB = (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 3, 3, 3, 2)

# scfsi groups cover long bands [0,6), [6,11), [11,16), [16,21).
SCFSI_GROUPS = ((0, 6), (6, 11), (11, 16), (16, 21))

# Window-switched granules split big_values at line 36 and have no region2.
SWITCH_REGION1_START = 36


@dataclass
class ScaleFactors:
    long: list          # 21 values (zero for pure short blocks)
    short: list         # 12 bands x 3 windows (zero for long blocks)
    part2_bits: int

    @classmethod
    def zeros(cls) -> "ScaleFactors":
        return cls(long=[0] * 21, short=[[0, 0, 0] for _ in range(12)], part2_bits=0)


@dataclass
class GranuleSpectrum:
    quantized: np.ndarray             # 576 signed integers
    big_values_end: int
    count1_end: int
    rzero_start: int
    magnitudes: Optional[np.ndarray] = None


def decode_scalefactors(gc: GranuleChannel, reader: BitReader, scfsi_flags,
                        granule_index: int,
                        previous: Optional[ScaleFactors]) -> ScaleFactors:
    """Decode part2 of a granule/channel.

    For granule 1, long-block band groups with their scfsi flag set copy
    granule 0's values and consume no bits; scfsi never applies to short
    blocks (all 12x3 values are decoded fresh).
    """
    slen1, slen2 = gc.slen1, gc.slen2
    sf = ScaleFactors.zeros()
    start = reader.position
    is_short = gc.window_switching and gc.block_type == BLOCK_SHORT

    if is_short and not gc.mixed_block_flag:
        for band in range(12):
            width = slen1 if band < 6 else slen2
            for window in range(3):
                sf.short[band][window] = reader.read(width) if width else 0
    elif is_short and gc.mixed_block_flag:
        for band in range(8):
            sf.long[band] = reader.read(slen1) if slen1 else 0
        for band in range(3, 12):
            width = slen1 if band < 6 else slen2
            for window in range(3):
                sf.short[band][window] = reader.read(width) if width else 0
    else:
        copy = granule_index == 1 and previous is not None
        for group, (lo, hi) in enumerate(SCFSI_GROUPS):
            width = slen1 if group < 2 else slen2
            if copy and scfsi_flags[group]:
                sf.long[lo:hi] = previous.long[lo:hi]
            else:
                for band in range(lo, hi):
                    sf.long[band] = reader.read(width) if width else 0

    sf.part2_bits = reader.position - start
    return sf


def _region_boundaries(gc: GranuleChannel, sample_rate_hz: int) -> tuple[int, int]:
    if gc.window_switching:
        return SWITCH_REGION1_START, 576
    bands = SCALEFAC_BANDS_LONG[sample_rate_hz]
    region1 = bands[min(gc.region0_count + 1, 22)]
    region2 = bands[min(gc.region0_count + 1 + gc.region1_count + 1, 22)]
    return region1, region2


def decode_spectrum(gc: GranuleChannel, reader: BitReader, part2_bits: int,
                    sample_rate_hz: int) -> GranuleSpectrum:
    """Decode part3: big_values pairs, count1 quads, implicit rzero tail.

    The reader must sit right after the granule's scalefactors.  Exactly
    part2_3_length - part2_bits bits are consumed (stuffing skipped); a quad
    straddling the budget is discarded and the cursor restored, matching
    reference decoder behavior.
    """
    budget = gc.part2_3_length - part2_bits
    if budget < 0:
        raise MalformedCodewordError(
            "scalefactors consumed %d of %d bits" % (part2_bits, gc.part2_3_length)
        )
    end = reader.position + budget
    quantized = np.zeros(576, dtype=np.int32)

    region1, region2 = _region_boundaries(gc, sample_rate_hz)
    tables = [huffman.pair_table(sel) for sel in gc.table_select]
    n_big = 2 * gc.big_values
    try:
        for i in range(0, n_big, 2):
            region = 0 if i < region1 else (1 if i < region2 else 2)
            table = tables[region]
            if table is None:
                continue
            x, y = huffman.decode_pair(table, reader)
            quantized[i] = x
            quantized[i + 1] = y
    except TruncatedStreamError as exc:
        raise MalformedCodewordError("big_values ran past stream end") from exc
    if reader.position > end:
        raise MalformedCodewordError(
            "big_values region overran part2_3_length by %d bits" % (reader.position - end)
        )

    quads = huffman.quad_table(gc.count1table_select)
    index = n_big
    while reader.position < end and index + 4 <= 576:
        mark = reader.position
        try:
            values = huffman.decode_quad(quads, reader)
        except TruncatedStreamError:
            reader.seek(mark)
            break
        if reader.position > end:
            reader.seek(mark)
            break
        quantized[index:index + 4] = values
        index += 4

    reader.seek(end)
    return GranuleSpectrum(
        quantized=quantized,
        big_values_end=n_big,
        count1_end=index,
        rzero_start=index,
    )


@lru_cache(maxsize=None)
def _long_band_of_line(sample_rate_hz: int) -> tuple:
    bands = SCALEFAC_BANDS_LONG[sample_rate_hz]
    out = []
    band = 0
    for line in range(576):
        while bands[band + 1] <= line:
            band += 1
        out.append(band)
    return tuple(out)


@lru_cache(maxsize=None)
def _short_band_window_of_line(sample_rate_hz: int) -> tuple:
    bands = SCALEFAC_BANDS_SHORT[sample_rate_hz]
    out = []
    for band in range(13):
        width = bands[band + 1] - bands[band]
        for window in range(3):
            out.extend((band, window) for _ in range(width))
    return tuple(out)  # 576 (band, window) pairs in spectral order


def dequantize(spectrum: GranuleSpectrum, gc: GranuleChannel, sf: ScaleFactors,
               sample_rate_hz: int) -> GranuleSpectrum:
    """Fill magnitudes: |q|^(4/3) * 2^((global_gain-210)/4) * band scale.

    Band scale applies scalefac_scale, the band's scalefactor, preflag
    pre-emphasis (long bands), and subblock_gain (short windows).
    """
    multiplier = 0.5 * (1 + gc.scalefac_scale)
    exponents = np.empty(576, dtype=np.float64)
    base = (gc.global_gain - 210) / 4.0
    is_short = gc.window_switching and gc.block_type == BLOCK_SHORT

    long_limit = 576
    if is_short:
        long_limit = 36 if gc.mixed_block_flag else 0

    long_bands = _long_band_of_line(sample_rate_hz)
    for line in range(long_limit):
        band = long_bands[line]
        scale = sf.long[band] if band < 21 else 0
        pre = PRETAB[band] if (gc.preflag and band < 21) else 0
        exponents[line] = base - multiplier * (scale + pre)

    if long_limit < 576:
        short_map = _short_band_window_of_line(sample_rate_hz)
        for line in range(long_limit, 576):
            band, window = short_map[line]
            scale = sf.short[band][window] if band < 12 else 0
            exponents[line] = (
                base
                - 2.0 * gc.subblock_gain[window]
                - multiplier * scale
            )

    magnitudes = np.abs(spectrum.quantized).astype(np.float64) ** (4.0 / 3.0)
    magnitudes *= np.exp2(exponents)
    spectrum.magnitudes = magnitudes
    return spectrum


@dataclass
class StreamDecode:
    frames: list                 # ParsedFrame per located frame
    slices: list                 # MainDataSlice per frame
    spectra: list                # per frame: [granule][channel] GranuleSpectrum, or None
    incomplete_frames: int
    undecodable_frames: int


def decode_frame(frame: ParsedFrame, slice_: MainDataSlice):
    """Decode all granules of one frame; returns [granule][channel] spectra.

    Raises MalformedCodewordError when any granule fails to decode.
    """
    reader = BitReader(slice_.data)
    si = frame.side_info
    sample_rate = frame.header.sample_rate_hz
    expected_start = 0
    previous_sf = [None] * si.channels
    out = [[None] * si.channels for _ in range(2)]
    for granule_index in range(2):
        for channel in range(si.channels):
            gc = si.granules[granule_index][channel]
            reader.seek(expected_start)
            sf = decode_scalefactors(
                gc, reader, si.scfsi[channel], granule_index, previous_sf[channel]
            )
            spectrum = decode_spectrum(gc, reader, sf.part2_bits, sample_rate)
            dequantize(spectrum, gc, sf, sample_rate)
            out[granule_index][channel] = spectrum
            if granule_index == 0:
                previous_sf[channel] = sf
            expected_start += gc.part2_3_length
    return out


def decode_stream(data: bytes, frames: Optional[Sequence[ParsedFrame]] = None) -> StreamDecode:
    """Parse (if needed), assemble the reservoir, and decode every frame.

    Frames with incomplete main data or malformed codewords yield None in
    `spectra` and are counted, keeping them available for SI-only features.
    """
    if frames is None:
        frames = parse_stream(data)
    slices = stream_slices(data, frames)
    spectra = []
    incomplete = 0
    undecodable = 0
    for frame, slice_ in zip(frames, slices):
        if not slice_.complete:
            incomplete += 1
            spectra.append(None)
            continue
        try:
            spectra.append(decode_frame(frame, slice_))
        except (MalformedCodewordError, TruncatedStreamError):
            undecodable += 1
            spectra.append(None)
    return StreamDecode(
        frames=list(frames),
        slices=list(slices),
        spectra=spectra,
        incomplete_frames=incomplete,
        undecodable_frames=undecodable,
    )
