"""Huffman coding of quantized spectral values.

Two decode routes are built from the same published code lists in
`hufftables`: a fast per-length lookup keyed on (bit length, codeword), and a
deliberately naive longest-prefix walk that rescans the raw code list after
every bit.  Tests hold them equal over every codeword, escape, and sign path.

Big-values entries code (x, y) pairs; magnitudes of 15 in a linbits table are
escapes followed by `linbits` extension bits, and every nonzero magnitude is
followed by one sign bit (1 = negative).  Count1 entries code four values of
magnitude <= 1 with the same sign rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import hufftables
from .bitstream import BitReader, BitWriter
from .errors import MalformedCodewordError, UnencodableSymbolError


@dataclass(frozen=True)
class PairTable:
    select: int          # table_select index as coded in side info
    table_id: int        # physical code table shared between selects
    width: int           # x/y grid width (max magnitude + 1 before escapes)
    linbits: int
    entries: tuple       # flat ((code, length), ...) indexed by x * width + y

    @property
    def max_value(self) -> int:
        if self.linbits:
            return self.width - 1 + ((1 << self.linbits) - 1)
        return self.width - 1


@dataclass(frozen=True)
class QuadTable:
    select: int
    entries: tuple       # 16 entries indexed by v*8 + w*4 + x*2 + y


@lru_cache(maxsize=None)
def pair_table(select: int) -> PairTable | None:
    """Table for a table_select index; None for index 0 (zero-filled region)."""
    if select not in hufftables.TABLE_REGISTRY:
        raise MalformedCodewordError("table_select %d is reserved" % select)
    table_id, linbits = hufftables.TABLE_REGISTRY[select]
    if table_id is None:
        return None
    return PairTable(
        select=select,
        table_id=table_id,
        width=hufftables.PAIR_WIDTHS[table_id],
        linbits=linbits,
        entries=hufftables.PAIR_CODE_TABLES[table_id],
    )


@lru_cache(maxsize=None)
def quad_table(select: int) -> QuadTable:
    if select == 0:
        return QuadTable(select=0, entries=hufftables.QUAD_CODES_A)
    if select == 1:
        return QuadTable(select=1, entries=hufftables.QUAD_CODES_B)
    raise MalformedCodewordError("count1table_select %d invalid" % select)


# ---------------------------------------------------------------------------
# fast route: per-length dictionaries


@lru_cache(maxsize=None)
def _length_lookup(entries: tuple) -> tuple[dict, int]:
    lookup: dict[tuple[int, int], int] = {}
    max_len = 0
    for index, (code, length) in enumerate(entries):
        lookup[(length, code)] = index
        max_len = max(max_len, length)
    return lookup, max_len


def _decode_index_fast(entries: tuple, reader: BitReader) -> int:
    lookup, max_len = _length_lookup(entries)
    code = 0
    for length in range(1, max_len + 1):
        code = (code << 1) | reader.read(1)
        index = lookup.get((length, code))
        if index is not None:
            return index
    raise MalformedCodewordError("no codeword matched after %d bits" % max_len)


# ---------------------------------------------------------------------------
# naive oracle route: rescan the raw code list after every bit


def _decode_index_naive(entries: tuple, reader: BitReader) -> int:
    code = 0
    length = 0
    longest = max(ln for _, ln in entries)
    while length < longest:
        code = (code << 1) | reader.read(1)
        length += 1
        for index, (c, ln) in enumerate(entries):
            if ln == length and c == code:
                return index
    raise MalformedCodewordError("no codeword matched after %d bits" % longest)


# ---------------------------------------------------------------------------
# value assembly shared by both routes


def _finish_pair(table: PairTable, index: int, reader: BitReader) -> tuple[int, int]:
    x, y = divmod(index, table.width)
    values = []
    for magnitude in (x, y):
        if magnitude == 15 and table.linbits:
            magnitude += reader.read(table.linbits)
        if magnitude != 0 and reader.read(1):
            magnitude = -magnitude
        values.append(magnitude)
    return values[0], values[1]


def _finish_quad(index: int, reader: BitReader) -> tuple[int, int, int, int]:
    values = []
    for shift in (3, 2, 1, 0):
        magnitude = (index >> shift) & 1
        if magnitude and reader.read(1):
            magnitude = -magnitude
        values.append(magnitude)
    return tuple(values)


def decode_pair(table: PairTable, reader: BitReader) -> tuple[int, int]:
    return _finish_pair(table, _decode_index_fast(table.entries, reader), reader)


def decode_pair_naive(table: PairTable, reader: BitReader) -> tuple[int, int]:
    return _finish_pair(table, _decode_index_naive(table.entries, reader), reader)


def decode_quad(table: QuadTable, reader: BitReader) -> tuple[int, int, int, int]:
    return _finish_quad(_decode_index_fast(table.entries, reader), reader)


def decode_quad_naive(table: QuadTable, reader: BitReader) -> tuple[int, int, int, int]:
    return _finish_quad(_decode_index_naive(table.entries, reader), reader)


# ---------------------------------------------------------------------------
# encoding (fixture writer)


def encode_pair(table: PairTable | None, x: int, y: int, writer: BitWriter) -> None:
    if table is None:
        if x != 0 or y != 0:
            raise UnencodableSymbolError("table 0 can only code zero pairs")
        return
    parts = []
    for value in (x, y):
        magnitude = abs(value)
        if magnitude > table.max_value:
            raise UnencodableSymbolError(
                "magnitude %d exceeds table %d limit %d"
                % (magnitude, table.select, table.max_value)
            )
        if table.linbits and magnitude >= 15:
            parts.append((15, magnitude - 15, value < 0))
        elif magnitude >= table.width:
            raise UnencodableSymbolError(
                "magnitude %d needs linbits, table %d has none" % (magnitude, table.select)
            )
        else:
            parts.append((magnitude, None, value < 0))
    index = parts[0][0] * table.width + parts[1][0]
    code, length = table.entries[index]
    writer.write(code, length)
    for magnitude, linval, negative in parts:
        if linval is not None:
            writer.write(linval, table.linbits)
        if magnitude != 0:
            writer.write(1 if negative else 0, 1)


def encode_quad(table: QuadTable, values, writer: BitWriter) -> None:
    if len(values) != 4:
        raise UnencodableSymbolError("count1 codes exactly 4 values")
    index = 0
    for value in values:
        if abs(value) > 1:
            raise UnencodableSymbolError("count1 magnitude must be <= 1, got %d" % value)
        index = (index << 1) | (1 if value != 0 else 0)
    code, length = table.entries[index]
    writer.write(code, length)
    for value in values:
        if value != 0:
            writer.write(1 if value < 0 else 0, 1)


def pair_bit_cost(table: PairTable | None, x: int, y: int) -> int:
    """Bits encode_pair would emit for (x, y)."""
    if table is None:
        if x != 0 or y != 0:
            raise UnencodableSymbolError("table 0 can only code zero pairs")
        return 0
    writer = BitWriter()
    encode_pair(table, x, y, writer)
    return writer.bit_length


def quad_bit_cost(table: QuadTable, values) -> int:
    writer = BitWriter()
    encode_quad(table, values, writer)
    return writer.bit_length
