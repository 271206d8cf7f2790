"""Frame location, bit-level access, and bit-reservoir assembly for MPEG-1 Layer III.

Only MPEG-1 Layer III is accepted; other versions and layers raise
UnsupportedFormatError, and free-format streams are rejected.  Resynchronization
is byte-by-byte, so ID3 tags and junk prefixes are skipped without tag parsing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BadSyncError,
    FieldRangeError,
    ReservedFieldError,
    TruncatedStreamError,
    UnsupportedFormatError,
)

# MPEG-1 Layer III bitrate table, indexed by the header's 4-bit field.
# Index 0 is free format, index 15 is forbidden; both are rejected.
BITRATE_KBPS = {
    1: 32, 2: 40, 3: 48, 4: 56, 5: 64, 6: 80, 7: 96, 8: 112,
    9: 128, 10: 160, 11: 192, 12: 224, 13: 256, 14: 320,
}
SAMPLE_RATE_HZ = {0: 44100, 1: 48000, 2: 32000}
CHANNEL_MODES = ("stereo", "joint_stereo", "dual", "mono")


@dataclass(frozen=True)
class FrameHeader:
    bitrate_kbps: int
    sample_rate_hz: int
    padding: int
    channel_mode: str
    crc_present: bool = False
    version: str = "MPEG1"
    layer: str = "III"

    @property
    def channels(self) -> int:
        return 1 if self.channel_mode == "mono" else 2

    @property
    def side_info_bytes(self) -> int:
        return 17 if self.channels == 1 else 32

    @property
    def frame_length_bytes(self) -> int:
        return (144 * self.bitrate_kbps * 1000) // self.sample_rate_hz + self.padding

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "layer": self.layer,
            "crc_present": self.crc_present,
            "bitrate_kbps": self.bitrate_kbps,
            "sample_rate_hz": self.sample_rate_hz,
            "padding": self.padding,
            "channel_mode": self.channel_mode,
            "frame_length_bytes": self.frame_length_bytes,
        }


@dataclass(frozen=True)
class FrameLocator:
    byte_offset: int
    header: FrameHeader


@dataclass
class MainDataSlice:
    """Main data assembled for one frame: reservoir tail plus own region.

    `complete` is False when the back-pointer reaches before the start of the
    stream or the slice holds fewer bits than the frame's granules declare.
    """

    frame_index: int
    data: bytes
    complete: bool

    @property
    def bit_length(self) -> int:
        return 8 * len(self.data)


_BITRATE_BITS = {v: k for k, v in BITRATE_KBPS.items()}
_RATE_BITS = {v: k for k, v in SAMPLE_RATE_HZ.items()}


def parse_header(data: bytes) -> FrameHeader:
    """Decode a 4-byte MPEG-1 Layer III frame header.

    Raises BadSyncError, UnsupportedFormatError (MPEG-2/2.5, Layers I/II), or
    ReservedFieldError (free/forbidden bitrate, reserved sample rate).
    """
    if len(data) < 4:
        raise TruncatedStreamError("header needs 4 bytes, got %d" % len(data))
    b1, b2, b3 = data[1], data[2], data[3]
    if data[0] != 0xFF or (b1 & 0xE0) != 0xE0:
        raise BadSyncError("sync bits missing")
    version_bits = (b1 >> 3) & 0x3
    layer_bits = (b1 >> 1) & 0x3
    if version_bits != 0x3:
        raise UnsupportedFormatError("not MPEG-1 (version bits %d)" % version_bits)
    if layer_bits != 0x1:
        raise UnsupportedFormatError("not Layer III (layer bits %d)" % layer_bits)
    crc_present = (b1 & 0x1) == 0
    bitrate_index = (b2 >> 4) & 0xF
    rate_index = (b2 >> 2) & 0x3
    if bitrate_index not in BITRATE_KBPS:
        raise ReservedFieldError("bitrate index %d is free/forbidden" % bitrate_index)
    if rate_index not in SAMPLE_RATE_HZ:
        raise ReservedFieldError("sample-rate index 3 is reserved")
    return FrameHeader(
        bitrate_kbps=BITRATE_KBPS[bitrate_index],
        sample_rate_hz=SAMPLE_RATE_HZ[rate_index],
        padding=(b2 >> 1) & 0x1,
        channel_mode=CHANNEL_MODES[(b3 >> 6) & 0x3],
        crc_present=crc_present,
    )


def build_header(header: FrameHeader) -> bytes:
    """Emit the 4-byte header parse_header() reads back."""
    b1 = 0xE0 | (0x3 << 3) | (0x1 << 1) | (0 if header.crc_present else 1)
    b2 = (_BITRATE_BITS[header.bitrate_kbps] << 4) | (_RATE_BITS[header.sample_rate_hz] << 2)
    b2 |= (header.padding & 1) << 1
    b3 = CHANNEL_MODES.index(header.channel_mode) << 6
    return bytes((0xFF, b1, b2, b3))


def scan_frames(data: bytes) -> list[FrameLocator]:
    """Locate every syntactically valid frame that fits entirely in `data`.

    Invalid candidates advance the scan by one byte, so garbage (ID3 tags,
    corrupt regions) is skipped and scanning resynchronizes on the next frame.
    """
    locators: list[FrameLocator] = []
    i, n = 0, len(data)
    while i + 4 <= n:
        if data[i] != 0xFF or (data[i + 1] & 0xE0) != 0xE0:
            i += 1
            continue
        try:
            header = parse_header(data[i:i + 4])
        except (BadSyncError, UnsupportedFormatError, ReservedFieldError):
            i += 1
            continue
        length = header.frame_length_bytes
        if i + length > n:
            i += 1
            continue
        locators.append(FrameLocator(byte_offset=i, header=header))
        i += length
    return locators


class BitReader:
    """Big-endian (MSB-first) bit cursor over an immutable byte buffer.

    Not shareable across threads; create one cursor per consumer.
    """

    def __init__(self, data: bytes, bit_offset: int = 0):
        self._data = data
        self._pos = bit_offset
        self._end = 8 * len(data)
        if not 0 <= bit_offset <= self._end:
            raise ValueError("bit_offset out of range")

    @property
    def position(self) -> int:
        return self._pos

    @property
    def remaining(self) -> int:
        return self._end - self._pos

    def read(self, n: int) -> int:
        """Read the next n bits (0..32) as an unsigned big-endian integer."""
        if not 0 <= n <= 32:
            raise ValueError("bit count must be in 0..32, got %d" % n)
        if n > self.remaining:
            raise TruncatedStreamError(
                "read of %d bits at position %d exceeds %d available"
                % (n, self._pos, self._end)
            )
        value = 0
        pos = self._pos
        remaining = n
        while remaining:
            byte = self._data[pos >> 3]
            offset = pos & 7
            take = min(8 - offset, remaining)
            chunk = (byte >> (8 - offset - take)) & ((1 << take) - 1)
            value = (value << take) | chunk
            pos += take
            remaining -= take
        self._pos = pos
        return value

    def read_bit(self) -> int:
        return self.read(1)

    def seek(self, bit_position: int) -> None:
        if not 0 <= bit_position <= self._end:
            raise TruncatedStreamError("seek to %d outside stream" % bit_position)
        self._pos = bit_position

    def skip(self, n: int) -> None:
        self.seek(self._pos + n)


class BitWriter:
    """Append-only big-endian bit emitter; getvalue() zero-pads the last byte."""

    def __init__(self):
        self._buf = bytearray()
        self._acc = 0
        self._nacc = 0
        self._bits = 0

    @property
    def bit_length(self) -> int:
        return self._bits

    def write(self, value: int, n: int) -> None:
        if n < 0:
            raise ValueError("negative bit count")
        if value < 0 or n < value.bit_length():
            raise FieldRangeError("value %d does not fit in %d bits" % (value, n))
        self._acc = (self._acc << n) | value
        self._nacc += n
        self._bits += n
        while self._nacc >= 8:
            self._nacc -= 8
            self._buf.append((self._acc >> self._nacc) & 0xFF)
        self._acc &= (1 << self._nacc) - 1

    def pad_to_byte(self) -> None:
        if self._nacc:
            self.write(0, 8 - self._nacc)

    def getvalue(self) -> bytes:
        if self._nacc == 0:
            return bytes(self._buf)
        tail = (self._acc << (8 - self._nacc)) & 0xFF
        return bytes(self._buf) + bytes((tail,))


def main_data_region(locator: FrameLocator) -> tuple[int, int]:
    """Byte range [start, end) of a frame's own main-data area in the stream."""
    header = locator.header
    start = locator.byte_offset + 4 + (2 if header.crc_present else 0) + header.side_info_bytes
    end = locator.byte_offset + header.frame_length_bytes
    return start, end


def assemble_main_data(frames: Sequence[tuple[FrameLocator, "SideInfo"]],
                       data: bytes) -> list[MainDataSlice]:
    """Resolve the bit reservoir: one MainDataSlice per frame.

    Frame i's main data starts main_data_begin bytes before the end of the
    pool of preceding frames' main-data regions and may extend through frame
    i's own region.  Insufficient history or too few bits for the declared
    part2_3_length total marks the slice incomplete instead of raising, so
    side-info-only features remain available.
    """
    regions = [main_data_region(loc) for loc, _ in frames]
    pool = b"".join(data[a:b] for a, b in regions)
    sizes = [b - a for a, b in regions]
    starts = []
    acc = 0
    for size in sizes:
        starts.append(acc)
        acc += size

    slices: list[MainDataSlice] = []
    for i, (_, side_info) in enumerate(frames):
        begin = starts[i] - side_info.main_data_begin
        needed_bits = sum(
            gc.part2_3_length for granule in side_info.granules for gc in granule
        )
        if begin < 0:
            slices.append(MainDataSlice(frame_index=i, data=b"", complete=False))
            continue
        chunk = pool[begin:starts[i] + sizes[i]]
        complete = 8 * len(chunk) >= needed_bits
        slices.append(MainDataSlice(frame_index=i, data=chunk, complete=complete))
    return slices
