"""Side-information parsing and writing for MPEG-1 Layer III frames.

Mono side info is 17 bytes (136 bits), two-channel is 32 bytes (256 bits);
joint-stereo and dual-channel modes are parsed as two channels.  Window-switched
granules do not transmit region counts, so the standard's implied values are
filled in and flagged via `regions_implied` to keep downstream field series
free of holes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .bitstream import (
    BitReader,
    BitWriter,
    FrameHeader,
    FrameLocator,
    MainDataSlice,
    assemble_main_data,
    parse_header,
    scan_frames,
)
from .errors import FieldRangeError, SideInfoError, TruncatedStreamError

__all__ = [
    "GranuleChannel",
    "SideInfo",
    "ParsedFrame",
    "parse_header",
    "parse_side_info",
    "write_side_info",
    "parse_stream",
    "SLEN",
]

# scalefac_compress -> (slen1, slen2) bit widths.
SLEN = (
    (0, 0), (0, 1), (0, 2), (0, 3), (3, 0), (1, 1), (1, 2), (1, 3),
    (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (4, 2), (4, 3),
)

BLOCK_LONG = 0
BLOCK_START = 1
BLOCK_SHORT = 2
BLOCK_END = 3


@dataclass
class GranuleChannel:
    part2_3_length: int = 0
    big_values: int = 0
    global_gain: int = 0
    scalefac_compress: int = 0
    window_switching: bool = False
    block_type: int = 0
    mixed_block_flag: bool = False
    table_select: tuple[int, int, int] = (0, 0, 0)
    subblock_gain: tuple[int, int, int] = (0, 0, 0)
    region0_count: int = 0
    region1_count: int = 0
    preflag: int = 0
    scalefac_scale: int = 0
    count1table_select: int = 0
    # True when region counts were filled from the window-switching defaults
    # rather than read from the stream.
    regions_implied: bool = False

    @property
    def slen1(self) -> int:
        return SLEN[self.scalefac_compress][0]

    @property
    def slen2(self) -> int:
        return SLEN[self.scalefac_compress][1]

    def validate(self) -> None:
        checks = (
            ("part2_3_length", self.part2_3_length, 4095),
            ("big_values", self.big_values, 288),
            ("global_gain", self.global_gain, 255),
            ("scalefac_compress", self.scalefac_compress, 15),
            ("block_type", self.block_type, 3),
            ("region0_count", self.region0_count, 15),
            ("region1_count", self.region1_count, 7),
            ("preflag", self.preflag, 1),
            ("scalefac_scale", self.scalefac_scale, 1),
            ("count1table_select", self.count1table_select, 1),
        )
        for name, value, upper in checks:
            if not 0 <= value <= upper:
                raise FieldRangeError("%s=%d outside 0..%d" % (name, value, upper))
        for i, t in enumerate(self.table_select):
            if not 0 <= t <= 31:
                raise FieldRangeError("table_select[%d]=%d outside 0..31" % (i, t))
        for i, g in enumerate(self.subblock_gain):
            if not 0 <= g <= 7:
                raise FieldRangeError("subblock_gain[%d]=%d outside 0..7" % (i, g))
        if self.window_switching and self.block_type == BLOCK_LONG:
            raise FieldRangeError("window_switching requires block_type != 0")

    def to_dict(self) -> dict:
        return {
            "part2_3_length": self.part2_3_length,
            "big_values": self.big_values,
            "global_gain": self.global_gain,
            "scalefac_compress": self.scalefac_compress,
            "window_switching": self.window_switching,
            "block_type": self.block_type,
            "mixed_block_flag": self.mixed_block_flag,
            "table_select": list(self.table_select),
            "subblock_gain": list(self.subblock_gain),
            "region0_count": self.region0_count,
            "region1_count": self.region1_count,
            "preflag": self.preflag,
            "scalefac_scale": self.scalefac_scale,
            "count1table_select": self.count1table_select,
        }


@dataclass
class SideInfo:
    main_data_begin: int = 0
    private_bits: int = 0
    # scfsi[channel] is a tuple of four 0/1 group flags.
    scfsi: tuple = ((0, 0, 0, 0),)
    # granules[granule][channel]
    granules: tuple = ()

    @property
    def channels(self) -> int:
        return len(self.scfsi)

    def validate(self) -> None:
        if not 0 <= self.main_data_begin <= 511:
            raise FieldRangeError("main_data_begin=%d outside 0..511" % self.main_data_begin)
        private_width = 5 if self.channels == 1 else 3
        if not 0 <= self.private_bits < (1 << private_width):
            raise FieldRangeError("private_bits too wide for %d channels" % self.channels)
        if len(self.granules) != 2:
            raise FieldRangeError("side info must hold exactly 2 granules")
        for flags in self.scfsi:
            if len(flags) != 4 or any(f not in (0, 1) for f in flags):
                raise FieldRangeError("scfsi must be four 0/1 flags per channel")
        for granule in self.granules:
            if len(granule) != self.channels:
                raise FieldRangeError("granule channel count mismatch")
            for gc in granule:
                gc.validate()

    def to_dict(self) -> dict:
        return {
            "main_data_begin": self.main_data_begin,
            "private_bits": self.private_bits,
            "scfsi": [list(flags) for flags in self.scfsi],
            "granules": [[gc.to_dict() for gc in granule] for granule in self.granules],
        }


@dataclass
class ParsedFrame:
    """One located frame with its decoded header and side info."""

    frame_index: int
    byte_offset: int
    header: FrameHeader
    side_info: SideInfo


def _implied_regions(block_type: int, mixed: bool) -> tuple[int, int]:
    region0 = 8 if (block_type == BLOCK_SHORT and not mixed) else 7
    return region0, 20 - region0


def parse_side_info(source: Union[bytes, BitReader], channel_mode: str) -> SideInfo:
    """Decode a side-information block; consumes exactly 136 or 256 bits."""
    channels = 1 if channel_mode == "mono" else 2
    reader = BitReader(source) if isinstance(source, (bytes, bytearray)) else source
    need = 136 if channels == 1 else 256
    if reader.remaining < need:
        raise SideInfoError(
            "side info needs %d bits, only %d available" % (need, reader.remaining)
        )
    try:
        main_data_begin = reader.read(9)
        private_bits = reader.read(5 if channels == 1 else 3)
        scfsi = tuple(tuple(reader.read(1) for _ in range(4)) for _ in range(channels))
        granules = []
        for _ in range(2):
            row = []
            for _ in range(channels):
                gc = GranuleChannel()
                gc.part2_3_length = reader.read(12)
                gc.big_values = reader.read(9)
                gc.global_gain = reader.read(8)
                gc.scalefac_compress = reader.read(4)
                gc.window_switching = bool(reader.read(1))
                if gc.window_switching:
                    gc.block_type = reader.read(2)
                    gc.mixed_block_flag = bool(reader.read(1))
                    gc.table_select = (reader.read(5), reader.read(5), 0)
                    gc.subblock_gain = (reader.read(3), reader.read(3), reader.read(3))
                    region0, region1 = _implied_regions(gc.block_type, gc.mixed_block_flag)
                    gc.region0_count = region0
                    gc.region1_count = region1
                    gc.regions_implied = True
                    if gc.block_type == BLOCK_LONG:
                        raise SideInfoError("window_switching set with block_type 0")
                else:
                    gc.table_select = (reader.read(5), reader.read(5), reader.read(5))
                    gc.region0_count = reader.read(4)
                    gc.region1_count = reader.read(3)
                row.append(gc)
            granules.append(tuple(row))
    except TruncatedStreamError as exc:
        raise SideInfoError(str(exc)) from exc
    si = SideInfo(
        main_data_begin=main_data_begin,
        private_bits=private_bits,
        scfsi=scfsi,
        granules=tuple(granules),
    )
    for granule in si.granules:
        for gc in granule:
            if gc.big_values > 288:
                raise SideInfoError("big_values %d exceeds 288" % gc.big_values)
    return si


def write_side_info(si: SideInfo, channel_mode: str) -> bytes:
    """Emit the exact bit layout parse_side_info consumes (17 or 32 bytes)."""
    channels = 1 if channel_mode == "mono" else 2
    if si.channels != channels:
        raise FieldRangeError(
            "side info has %d channels, mode %r needs %d" % (si.channels, channel_mode, channels)
        )
    si.validate()
    writer = BitWriter()
    writer.write(si.main_data_begin, 9)
    writer.write(si.private_bits, 5 if channels == 1 else 3)
    for flags in si.scfsi:
        for flag in flags:
            writer.write(flag, 1)
    for granule in si.granules:
        for gc in granule:
            writer.write(gc.part2_3_length, 12)
            writer.write(gc.big_values, 9)
            writer.write(gc.global_gain, 8)
            writer.write(gc.scalefac_compress, 4)
            writer.write(int(gc.window_switching), 1)
            if gc.window_switching:
                writer.write(gc.block_type, 2)
                writer.write(int(gc.mixed_block_flag), 1)
                writer.write(gc.table_select[0], 5)
                writer.write(gc.table_select[1], 5)
                for gain in gc.subblock_gain:
                    writer.write(gain, 3)
            else:
                for t in gc.table_select:
                    writer.write(t, 5)
                writer.write(gc.region0_count, 4)
                writer.write(gc.region1_count, 3)
            writer.write(gc.preflag, 1)
            writer.write(gc.scalefac_scale, 1)
            writer.write(gc.count1table_select, 1)
    out = writer.getvalue()
    assert len(out) == (17 if channels == 1 else 32)
    return out


def parse_stream(data: bytes) -> list[ParsedFrame]:
    """Scan a byte stream and parse the side info of every located frame."""
    frames = []
    for index, locator in enumerate(scan_frames(data)):
        si_start = locator.byte_offset + 4 + (2 if locator.header.crc_present else 0)
        si = parse_side_info(
            data[si_start:si_start + locator.header.side_info_bytes],
            locator.header.channel_mode,
        )
        frames.append(
            ParsedFrame(
                frame_index=index,
                byte_offset=locator.byte_offset,
                header=locator.header,
                side_info=si,
            )
        )
    return frames


def stream_slices(data: bytes, frames: Sequence[ParsedFrame]) -> list[MainDataSlice]:
    """Assemble main-data slices for frames produced by parse_stream."""
    pairs = [
        (FrameLocator(byte_offset=f.byte_offset, header=f.header), f.side_info)
        for f in frames
    ]
    return assemble_main_data(pairs, data)
