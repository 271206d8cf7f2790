"""MPEG-1 Layer III Huffman code tables (ISO 11172-3 annex B).

Each big-values table maps an (x, y) pair, row-major with x as the row,
to a (codeword, bit length) entry.  Codewords are MSB-first.  The table
registry maps the 5-bit table_select index onto a shared code table plus
its linbits escape width.  Quad tables cover the count1 region.
"""

PAIR_CODES_1 = (
    (0x0001,  1), (0x0001,  3),
    (0x0001,  2), (0x0000,  3),
)

PAIR_CODES_2 = (
    (0x0001,  1), (0x0002,  3), (0x0001,  6),
    (0x0003,  3), (0x0001,  3), (0x0001,  5),
    (0x0003,  5), (0x0002,  5), (0x0000,  6),
)

PAIR_CODES_3 = (
    (0x0003,  2), (0x0002,  2), (0x0001,  6),
    (0x0001,  3), (0x0001,  2), (0x0001,  5),
    (0x0003,  5), (0x0002,  5), (0x0000,  6),
)

PAIR_CODES_5 = (
    (0x0001,  1), (0x0002,  3), (0x0006,  6), (0x0005,  7),
    (0x0003,  3), (0x0001,  3), (0x0004,  6), (0x0004,  7),
    (0x0007,  6), (0x0005,  6), (0x0007,  7), (0x0001,  8),
    (0x0006,  7), (0x0001,  6), (0x0001,  7), (0x0000,  8),
)

PAIR_CODES_6 = (
    (0x0007,  3), (0x0003,  3), (0x0005,  5), (0x0001,  7),
    (0x0006,  3), (0x0002,  2), (0x0003,  4), (0x0002,  5),
    (0x0005,  4), (0x0004,  4), (0x0004,  5), (0x0001,  6),
    (0x0003,  6), (0x0003,  5), (0x0002,  6), (0x0000,  7),
)

PAIR_CODES_7 = (
    (0x0001,  1), (0x0002,  3), (0x000a,  6), (0x0013,  8), (0x0010,  8), (0x000a,  9),
    (0x0003,  3), (0x0003,  4), (0x0007,  6), (0x000a,  7), (0x0005,  7), (0x0003,  8),
    (0x000b,  6), (0x0004,  5), (0x000d,  7), (0x0011,  8), (0x0008,  8), (0x0004,  9),
    (0x000c,  7), (0x000b,  7), (0x0012,  8), (0x000f,  9), (0x000b,  9), (0x0002,  9),
    (0x0007,  7), (0x0006,  7), (0x0009,  8), (0x000e,  9), (0x0003,  9), (0x0001, 10),
    (0x0006,  8), (0x0004,  8), (0x0005,  9), (0x0003, 10), (0x0002, 10), (0x0000, 10),
)

PAIR_CODES_8 = (
    (0x0003,  2), (0x0004,  3), (0x0006,  6), (0x0012,  8), (0x000c,  8), (0x0005,  9),
    (0x0005,  3), (0x0001,  2), (0x0002,  4), (0x0010,  8), (0x0009,  8), (0x0003,  8),
    (0x0007,  6), (0x0003,  4), (0x0005,  6), (0x000e,  8), (0x0007,  8), (0x0003,  9),
    (0x0013,  8), (0x0011,  8), (0x000f,  8), (0x000d,  9), (0x000a,  9), (0x0004, 10),
    (0x000d,  8), (0x0005,  7), (0x0008,  8), (0x000b,  9), (0x0005, 10), (0x0001, 10),
    (0x000c,  9), (0x0004,  8), (0x0004,  9), (0x0001,  9), (0x0001, 11), (0x0000, 11),
)

PAIR_CODES_9 = (
    (0x0007,  3), (0x0005,  3), (0x0009,  5), (0x000e,  6), (0x000f,  8), (0x0007,  9),
    (0x0006,  3), (0x0004,  3), (0x0005,  4), (0x0005,  5), (0x0006,  6), (0x0007,  8),
    (0x0007,  4), (0x0006,  4), (0x0008,  5), (0x0008,  6), (0x0008,  7), (0x0005,  8),
    (0x000f,  6), (0x0006,  5), (0x0009,  6), (0x000a,  7), (0x0005,  7), (0x0001,  8),
    (0x000b,  7), (0x0007,  6), (0x0009,  7), (0x0006,  7), (0x0004,  8), (0x0001,  9),
    (0x000e,  8), (0x0004,  7), (0x0006,  8), (0x0002,  8), (0x0006,  9), (0x0000,  9),
)

PAIR_CODES_10 = (
    (0x0001,  1), (0x0002,  3), (0x000a,  6), (0x0017,  8), (0x0023,  9), (0x001e,  9), (0x000c,  9), (0x0011, 10),
    (0x0003,  3), (0x0003,  4), (0x0008,  6), (0x000c,  7), (0x0012,  8), (0x0015,  9), (0x000c,  8), (0x0007,  8),
    (0x000b,  6), (0x0009,  6), (0x000f,  7), (0x0015,  8), (0x0020,  9), (0x0028, 10), (0x0013,  9), (0x0006,  9),
    (0x000e,  7), (0x000d,  7), (0x0016,  8), (0x0022,  9), (0x002e, 10), (0x0017, 10), (0x0012,  9), (0x0007, 10),
    (0x0014,  8), (0x0013,  8), (0x0021,  9), (0x002f, 10), (0x001b, 10), (0x0016, 10), (0x0009, 10), (0x0003, 10),
    (0x001f,  9), (0x0016,  9), (0x0029, 10), (0x001a, 10), (0x0015, 11), (0x0014, 11), (0x0005, 10), (0x0003, 11),
    (0x000e,  8), (0x000d,  8), (0x000a,  9), (0x000b, 10), (0x0010, 10), (0x0006, 10), (0x0005, 11), (0x0001, 11),
    (0x0009,  9), (0x0008,  8), (0x0007,  9), (0x0008, 10), (0x0004, 10), (0x0004, 11), (0x0002, 11), (0x0000, 11),
)

PAIR_CODES_11 = (
    (0x0003,  2), (0x0004,  3), (0x000a,  5), (0x0018,  7), (0x0022,  8), (0x0021,  9), (0x0015,  8), (0x000f,  9),
    (0x0005,  3), (0x0003,  3), (0x0004,  4), (0x000a,  6), (0x0020,  8), (0x0011,  8), (0x000b,  7), (0x000a,  8),
    (0x000b,  5), (0x0007,  5), (0x000d,  6), (0x0012,  7), (0x001e,  8), (0x001f,  9), (0x0014,  8), (0x0005,  8),
    (0x0019,  7), (0x000b,  6), (0x0013,  7), (0x003b,  9), (0x001b,  8), (0x0012, 10), (0x000c,  8), (0x0005,  9),
    (0x0023,  8), (0x0021,  8), (0x001f,  8), (0x003a,  9), (0x001e,  9), (0x0010, 10), (0x0007,  9), (0x0005, 10),
    (0x001c,  8), (0x001a,  8), (0x0020,  9), (0x0013, 10), (0x0011, 10), (0x000f, 11), (0x0008, 10), (0x000e, 11),
    (0x000e,  8), (0x000c,  7), (0x0009,  7), (0x000d,  8), (0x000e,  9), (0x0009, 10), (0x0004, 10), (0x0001, 10),
    (0x000b,  8), (0x0004,  7), (0x0006,  8), (0x0006,  9), (0x0006, 10), (0x0003, 10), (0x0002, 10), (0x0000, 10),
)

PAIR_CODES_12 = (
    (0x0009,  4), (0x0006,  3), (0x0010,  5), (0x0021,  7), (0x0029,  8), (0x0027,  9), (0x0026,  9), (0x001a,  9),
    (0x0007,  3), (0x0005,  3), (0x0006,  4), (0x0009,  5), (0x0017,  7), (0x0010,  7), (0x001a,  8), (0x000b,  8),
    (0x0011,  5), (0x0007,  4), (0x000b,  5), (0x000e,  6), (0x0015,  7), (0x001e,  8), (0x000a,  7), (0x0007,  8),
    (0x0011,  6), (0x000a,  5), (0x000f,  6), (0x000c,  6), (0x0012,  7), (0x001c,  8), (0x000e,  8), (0x0005,  8),
    (0x0020,  7), (0x000d,  6), (0x0016,  7), (0x0013,  7), (0x0012,  8), (0x0010,  8), (0x0009,  8), (0x0005,  9),
    (0x0028,  8), (0x0011,  7), (0x001f,  8), (0x001d,  8), (0x0011,  8), (0x000d,  9), (0x0004,  8), (0x0002,  9),
    (0x001b,  8), (0x000c,  7), (0x000b,  7), (0x000f,  8), (0x000a,  8), (0x0007,  9), (0x0004,  9), (0x0001, 10),
    (0x001b,  9), (0x000c,  8), (0x0008,  8), (0x000c,  9), (0x0006,  9), (0x0003,  9), (0x0001,  9), (0x0000, 10),
)

PAIR_CODES_13 = (
    (0x0001,  1), (0x0005,  4), (0x000e,  6), (0x0015,  7), (0x0022,  8), (0x0033,  9), (0x002e,  9), (0x0047, 10),
    (0x002a,  9), (0x0034, 10), (0x0044, 11), (0x0034, 11), (0x0043, 12), (0x002c, 12), (0x002b, 13), (0x0013, 13),
    (0x0003,  3), (0x0004,  4), (0x000c,  6), (0x0013,  7), (0x001f,  8), (0x001a,  8), (0x002c,  9), (0x0021,  9),
    (0x001f,  9), (0x0018,  9), (0x0020, 10), (0x0018, 10), (0x001f, 11), (0x0023, 12), (0x0016, 12), (0x000e, 12),
    (0x000f,  6), (0x000d,  6), (0x0017,  7), (0x0024,  8), (0x003b,  9), (0x0031,  9), (0x004d, 10), (0x0041, 10),
    (0x001d,  9), (0x0028, 10), (0x001e, 10), (0x0028, 11), (0x001b, 11), (0x0021, 12), (0x002a, 13), (0x0010, 13),
    (0x0016,  7), (0x0014,  7), (0x0025,  8), (0x003d,  9), (0x0038,  9), (0x004f, 10), (0x0049, 10), (0x0040, 10),
    (0x002b, 10), (0x004c, 11), (0x0038, 11), (0x0025, 11), (0x001a, 11), (0x001f, 12), (0x0019, 13), (0x000e, 13),
    (0x0023,  8), (0x0010,  7), (0x003c,  9), (0x0039,  9), (0x0061, 10), (0x004b, 10), (0x0072, 11), (0x005b, 11),
    (0x0036, 10), (0x0049, 11), (0x0037, 11), (0x0029, 12), (0x0030, 12), (0x0035, 13), (0x0017, 13), (0x0018, 14),
    (0x003a,  9), (0x001b,  8), (0x0032,  9), (0x0060, 10), (0x004c, 10), (0x0046, 10), (0x005d, 11), (0x0054, 11),
    (0x004d, 11), (0x003a, 11), (0x004f, 12), (0x001d, 11), (0x004a, 13), (0x0031, 13), (0x0029, 14), (0x0011, 14),
    (0x002f,  9), (0x002d,  9), (0x004e, 10), (0x004a, 10), (0x0073, 11), (0x005e, 11), (0x005a, 11), (0x004f, 11),
    (0x0045, 11), (0x0053, 12), (0x0047, 12), (0x0032, 12), (0x003b, 13), (0x0026, 13), (0x0024, 14), (0x000f, 14),
    (0x0048, 10), (0x0022,  9), (0x0038, 10), (0x005f, 11), (0x005c, 11), (0x0055, 11), (0x005b, 12), (0x005a, 12),
    (0x0056, 12), (0x0049, 12), (0x004d, 13), (0x0041, 13), (0x0033, 13), (0x002c, 14), (0x002b, 16), (0x002a, 16),
    (0x002b,  9), (0x0014,  8), (0x001e,  9), (0x002c, 10), (0x0037, 10), (0x004e, 11), (0x0048, 11), (0x0057, 12),
    (0x004e, 12), (0x003d, 12), (0x002e, 12), (0x0036, 13), (0x0025, 13), (0x001e, 14), (0x0014, 15), (0x0010, 15),
    (0x0035, 10), (0x0019,  9), (0x0029, 10), (0x0025, 10), (0x002c, 11), (0x003b, 11), (0x0036, 11), (0x0051, 13),
    (0x0042, 12), (0x004c, 13), (0x0039, 13), (0x0036, 14), (0x0025, 14), (0x0012, 14), (0x0027, 16), (0x000b, 15),
    (0x0023, 10), (0x0021, 10), (0x001f, 10), (0x0039, 11), (0x002a, 11), (0x0052, 12), (0x0048, 12), (0x0050, 13),
    (0x002f, 12), (0x003a, 13), (0x0037, 14), (0x0015, 13), (0x0016, 14), (0x001a, 15), (0x0026, 16), (0x0016, 17),
    (0x0035, 11), (0x0019, 10), (0x0017, 10), (0x0026, 11), (0x0046, 12), (0x003c, 12), (0x0033, 12), (0x0024, 12),
    (0x0037, 13), (0x001a, 13), (0x0022, 13), (0x0017, 14), (0x001b, 15), (0x000e, 15), (0x0009, 15), (0x0007, 16),
    (0x0022, 11), (0x0020, 11), (0x001c, 11), (0x0027, 12), (0x0031, 12), (0x004b, 13), (0x001e, 12), (0x0034, 13),
    (0x0030, 14), (0x0028, 14), (0x0034, 15), (0x001c, 15), (0x0012, 15), (0x0011, 16), (0x0009, 16), (0x0005, 16),
    (0x002d, 12), (0x0015, 11), (0x0022, 12), (0x0040, 13), (0x0038, 13), (0x0032, 13), (0x0031, 14), (0x002d, 14),
    (0x001f, 14), (0x0013, 14), (0x000c, 14), (0x000f, 15), (0x000a, 16), (0x0007, 15), (0x0006, 16), (0x0003, 16),
    (0x0030, 13), (0x0017, 12), (0x0014, 12), (0x0027, 13), (0x0024, 13), (0x0023, 13), (0x0035, 15), (0x0015, 14),
    (0x0010, 14), (0x0017, 17), (0x000d, 15), (0x000a, 15), (0x0006, 15), (0x0001, 17), (0x0004, 16), (0x0002, 16),
    (0x0010, 12), (0x000f, 12), (0x0011, 13), (0x001b, 14), (0x0019, 14), (0x0014, 14), (0x001d, 15), (0x000b, 14),
    (0x0011, 15), (0x000c, 15), (0x0010, 16), (0x0008, 16), (0x0001, 19), (0x0001, 18), (0x0000, 19), (0x0001, 16),
)

PAIR_CODES_15 = (
    (0x0007,  3), (0x000c,  4), (0x0012,  5), (0x0035,  7), (0x002f,  7), (0x004c,  8), (0x007c,  9), (0x006c,  9),
    (0x0059,  9), (0x007b, 10), (0x006c, 10), (0x0077, 11), (0x006b, 11), (0x0051, 11), (0x007a, 12), (0x003f, 13),
    (0x000d,  4), (0x0005,  3), (0x0010,  5), (0x001b,  6), (0x002e,  7), (0x0024,  7), (0x003d,  8), (0x0033,  8),
    (0x002a,  8), (0x0046,  9), (0x0034,  9), (0x0053, 10), (0x0041, 10), (0x0029, 10), (0x003b, 11), (0x0024, 11),
    (0x0013,  5), (0x0011,  5), (0x000f,  5), (0x0018,  6), (0x0029,  7), (0x0022,  7), (0x003b,  8), (0x0030,  8),
    (0x0028,  8), (0x0040,  9), (0x0032,  9), (0x004e, 10), (0x003e, 10), (0x0050, 11), (0x0038, 11), (0x0021, 11),
    (0x001d,  6), (0x001c,  6), (0x0019,  6), (0x002b,  7), (0x0027,  7), (0x003f,  8), (0x0037,  8), (0x005d,  9),
    (0x004c,  9), (0x003b,  9), (0x005d, 10), (0x0048, 10), (0x0036, 10), (0x004b, 11), (0x0032, 11), (0x001d, 11),
    (0x0034,  7), (0x0016,  6), (0x002a,  7), (0x0028,  7), (0x0043,  8), (0x0039,  8), (0x005f,  9), (0x004f,  9),
    (0x0048,  9), (0x0039,  9), (0x0059, 10), (0x0045, 10), (0x0031, 10), (0x0042, 11), (0x002e, 11), (0x001b, 11),
    (0x004d,  8), (0x0025,  7), (0x0023,  7), (0x0042,  8), (0x003a,  8), (0x0034,  8), (0x005b,  9), (0x004a,  9),
    (0x003e,  9), (0x0030,  9), (0x004f, 10), (0x003f, 10), (0x005a, 11), (0x003e, 11), (0x0028, 11), (0x0026, 12),
    (0x007d,  9), (0x0020,  7), (0x003c,  8), (0x0038,  8), (0x0032,  8), (0x005c,  9), (0x004e,  9), (0x0041,  9),
    (0x0037,  9), (0x0057, 10), (0x0047, 10), (0x0033, 10), (0x0049, 11), (0x0033, 11), (0x0046, 12), (0x001e, 12),
    (0x006d,  9), (0x0035,  8), (0x0031,  8), (0x005e,  9), (0x0058,  9), (0x004b,  9), (0x0042,  9), (0x007a, 10),
    (0x005b, 10), (0x0049, 10), (0x0038, 10), (0x002a, 10), (0x0040, 11), (0x002c, 11), (0x0015, 11), (0x0019, 12),
    (0x005a,  9), (0x002b,  8), (0x0029,  8), (0x004d,  9), (0x0049,  9), (0x003f,  9), (0x0038,  9), (0x005c, 10),
    (0x004d, 10), (0x0042, 10), (0x002f, 10), (0x0043, 11), (0x0030, 11), (0x0035, 12), (0x0024, 12), (0x0014, 12),
    (0x0047,  9), (0x0022,  8), (0x0043,  9), (0x003c,  9), (0x003a,  9), (0x0031,  9), (0x0058, 10), (0x004c, 10),
    (0x0043, 10), (0x006a, 11), (0x0047, 11), (0x0036, 11), (0x0026, 11), (0x0027, 12), (0x0017, 12), (0x000f, 12),
    (0x006d, 10), (0x0035,  9), (0x0033,  9), (0x002f,  9), (0x005a, 10), (0x0052, 10), (0x003a, 10), (0x0039, 10),
    (0x0030, 10), (0x0048, 11), (0x0039, 11), (0x0029, 11), (0x0017, 11), (0x001b, 12), (0x003e, 13), (0x0009, 12),
    (0x0056, 10), (0x002a,  9), (0x0028,  9), (0x0025,  9), (0x0046, 10), (0x0040, 10), (0x0034, 10), (0x002b, 10),
    (0x0046, 11), (0x0037, 11), (0x002a, 11), (0x0019, 11), (0x001d, 12), (0x0012, 12), (0x000b, 12), (0x000b, 13),
    (0x0076, 11), (0x0044, 10), (0x001e,  9), (0x0037, 10), (0x0032, 10), (0x002e, 10), (0x004a, 11), (0x0041, 11),
    (0x0031, 11), (0x0027, 11), (0x0018, 11), (0x0010, 11), (0x0016, 12), (0x000d, 12), (0x000e, 13), (0x0007, 13),
    (0x005b, 11), (0x002c, 10), (0x0027, 10), (0x0026, 10), (0x0022, 10), (0x003f, 11), (0x0034, 11), (0x002d, 11),
    (0x001f, 11), (0x0034, 12), (0x001c, 12), (0x0013, 12), (0x000e, 12), (0x0008, 12), (0x0009, 13), (0x0003, 13),
    (0x007b, 12), (0x003c, 11), (0x003a, 11), (0x0035, 11), (0x002f, 11), (0x002b, 11), (0x0020, 11), (0x0016, 11),
    (0x0025, 12), (0x0018, 12), (0x0011, 12), (0x000c, 12), (0x000f, 13), (0x000a, 13), (0x0002, 12), (0x0001, 13),
    (0x0047, 12), (0x0025, 11), (0x0022, 11), (0x001e, 11), (0x001c, 11), (0x0014, 11), (0x0011, 11), (0x001a, 12),
    (0x0015, 12), (0x0010, 12), (0x000a, 12), (0x0006, 12), (0x0008, 13), (0x0006, 13), (0x0002, 13), (0x0000, 13),
)

PAIR_CODES_16 = (
    (0x0001,  1), (0x0005,  4), (0x000e,  6), (0x002c,  8), (0x004a,  9), (0x003f,  9), (0x006e, 10), (0x005d, 10),
    (0x00ac, 11), (0x0095, 11), (0x008a, 11), (0x00f2, 12), (0x00e1, 12), (0x00c3, 12), (0x0178, 13), (0x0011,  9),
    (0x0003,  3), (0x0004,  4), (0x000c,  6), (0x0014,  7), (0x0023,  8), (0x003e,  9), (0x0035,  9), (0x002f,  9),
    (0x0053, 10), (0x004b, 10), (0x0044, 10), (0x0077, 11), (0x00c9, 12), (0x006b, 11), (0x00cf, 12), (0x0009,  8),
    (0x000f,  6), (0x000d,  6), (0x0017,  7), (0x0026,  8), (0x0043,  9), (0x003a,  9), (0x0067, 10), (0x005a, 10),
    (0x00a1, 11), (0x0048, 10), (0x007f, 11), (0x0075, 11), (0x006e, 11), (0x00d1, 12), (0x00ce, 12), (0x0010,  9),
    (0x002d,  8), (0x0015,  7), (0x0027,  8), (0x0045,  9), (0x0040,  9), (0x0072, 10), (0x0063, 10), (0x0057, 10),
    (0x009e, 11), (0x008c, 11), (0x00fc, 12), (0x00d4, 12), (0x00c7, 12), (0x0183, 13), (0x016d, 13), (0x001a, 10),
    (0x004b,  9), (0x0024,  8), (0x0044,  9), (0x0041,  9), (0x0073, 10), (0x0065, 10), (0x00b3, 11), (0x00a4, 11),
    (0x009b, 11), (0x0108, 12), (0x00f6, 12), (0x00e2, 12), (0x018b, 13), (0x017e, 13), (0x016a, 13), (0x0009,  9),
    (0x0042,  9), (0x001e,  8), (0x003b,  9), (0x0038,  9), (0x0066, 10), (0x00b9, 11), (0x00ad, 11), (0x0109, 12),
    (0x008e, 11), (0x00fd, 12), (0x00e8, 12), (0x0190, 13), (0x0184, 13), (0x017a, 13), (0x01bd, 14), (0x0010, 10),
    (0x006f, 10), (0x0036,  9), (0x0034,  9), (0x0064, 10), (0x00b8, 11), (0x00b2, 11), (0x00a0, 11), (0x0085, 11),
    (0x0101, 12), (0x00f4, 12), (0x00e4, 12), (0x00d9, 12), (0x0181, 13), (0x016e, 13), (0x02cb, 14), (0x000a, 10),
    (0x0062, 10), (0x0030,  9), (0x005b, 10), (0x0058, 10), (0x00a5, 11), (0x009d, 11), (0x0094, 11), (0x0105, 12),
    (0x00f8, 12), (0x0197, 13), (0x018d, 13), (0x0174, 13), (0x017c, 13), (0x0379, 15), (0x0374, 15), (0x0008, 10),
    (0x0055, 10), (0x0054, 10), (0x0051, 10), (0x009f, 11), (0x009c, 11), (0x008f, 11), (0x0104, 12), (0x00f9, 12),
    (0x01ab, 13), (0x0191, 13), (0x0188, 13), (0x017f, 13), (0x02d7, 14), (0x02c9, 14), (0x02c4, 14), (0x0007, 10),
    (0x009a, 11), (0x004c, 10), (0x0049, 10), (0x008d, 11), (0x0083, 11), (0x0100, 12), (0x00f5, 12), (0x01aa, 13),
    (0x0196, 13), (0x018a, 13), (0x0180, 13), (0x02df, 14), (0x0167, 13), (0x02c6, 14), (0x0160, 13), (0x000b, 11),
    (0x008b, 11), (0x0081, 11), (0x0043, 10), (0x007d, 11), (0x00f7, 12), (0x00e9, 12), (0x00e5, 12), (0x00db, 12),
    (0x0189, 13), (0x02e7, 14), (0x02e1, 14), (0x02d0, 14), (0x0375, 15), (0x0372, 15), (0x01b7, 14), (0x0004, 10),
    (0x00f3, 12), (0x0078, 11), (0x0076, 11), (0x0073, 11), (0x00e3, 12), (0x00df, 12), (0x018c, 13), (0x02ea, 14),
    (0x02e6, 14), (0x02e0, 14), (0x02d1, 14), (0x02c8, 14), (0x02c2, 14), (0x00df, 13), (0x01b4, 14), (0x0006, 11),
    (0x00ca, 12), (0x00e0, 12), (0x00de, 12), (0x00da, 12), (0x00d8, 12), (0x0185, 13), (0x0182, 13), (0x017d, 13),
    (0x016c, 13), (0x0378, 15), (0x01bb, 14), (0x02c3, 14), (0x01b8, 14), (0x01b5, 14), (0x06c0, 16), (0x0004, 11),
    (0x02eb, 14), (0x00d3, 12), (0x00d2, 12), (0x00d0, 12), (0x0172, 13), (0x017b, 13), (0x02de, 14), (0x02d3, 14),
    (0x02ca, 14), (0x06c7, 16), (0x0373, 15), (0x036d, 15), (0x036c, 15), (0x0d83, 17), (0x0361, 15), (0x0002, 11),
    (0x0179, 13), (0x0171, 13), (0x0066, 11), (0x00bb, 12), (0x02d6, 14), (0x02d2, 14), (0x0166, 13), (0x02c7, 14),
    (0x02c5, 14), (0x0362, 15), (0x06c6, 16), (0x0367, 15), (0x0d82, 17), (0x0366, 15), (0x01b2, 14), (0x0000, 11),
    (0x000c,  9), (0x000a,  8), (0x0007,  8), (0x000b,  9), (0x000a,  9), (0x0011, 10), (0x000b, 10), (0x0009, 10),
    (0x000d, 11), (0x000c, 11), (0x000a, 11), (0x0007, 11), (0x0005, 11), (0x0003, 11), (0x0001, 11), (0x0003,  8),
)

PAIR_CODES_24 = (
    (0x000f,  4), (0x000d,  4), (0x002e,  6), (0x0050,  7), (0x0092,  8), (0x0106,  9), (0x00f8,  9), (0x01b2, 10),
    (0x01aa, 10), (0x029d, 11), (0x028d, 11), (0x0289, 11), (0x026d, 11), (0x0205, 11), (0x0408, 12), (0x0058,  9),
    (0x000e,  4), (0x000c,  4), (0x0015,  5), (0x0026,  6), (0x0047,  7), (0x0082,  8), (0x007a,  8), (0x00d8,  9),
    (0x00d1,  9), (0x00c6,  9), (0x0147, 10), (0x0159, 10), (0x013f, 10), (0x0129, 10), (0x0117, 10), (0x002a,  8),
    (0x002f,  6), (0x0016,  5), (0x0029,  6), (0x004a,  7), (0x0044,  7), (0x0080,  8), (0x0078,  8), (0x00dd,  9),
    (0x00cf,  9), (0x00c2,  9), (0x00b6,  9), (0x0154, 10), (0x013b, 10), (0x0127, 10), (0x021d, 11), (0x0012,  7),
    (0x0051,  7), (0x0027,  6), (0x004b,  7), (0x0046,  7), (0x0086,  8), (0x007d,  8), (0x0074,  8), (0x00dc,  9),
    (0x00cc,  9), (0x00be,  9), (0x00b2,  9), (0x0145, 10), (0x0137, 10), (0x0125, 10), (0x010f, 10), (0x0010,  7),
    (0x0093,  8), (0x0048,  7), (0x0045,  7), (0x0087,  8), (0x007f,  8), (0x0076,  8), (0x0070,  8), (0x00d2,  9),
    (0x00c8,  9), (0x00bc,  9), (0x0160, 10), (0x0143, 10), (0x0132, 10), (0x011d, 10), (0x021c, 11), (0x000e,  7),
    (0x0107,  9), (0x0042,  7), (0x0081,  8), (0x007e,  8), (0x0077,  8), (0x0072,  8), (0x00d6,  9), (0x00ca,  9),
    (0x00c0,  9), (0x00b4,  9), (0x0155, 10), (0x013d, 10), (0x012d, 10), (0x0119, 10), (0x0106, 10), (0x000c,  7),
    (0x00f9,  9), (0x007b,  8), (0x0079,  8), (0x0075,  8), (0x0071,  8), (0x00d7,  9), (0x00ce,  9), (0x00c3,  9),
    (0x00b9,  9), (0x015b, 10), (0x014a, 10), (0x0134, 10), (0x0123, 10), (0x0110, 10), (0x0208, 11), (0x000a,  7),
    (0x01b3, 10), (0x0073,  8), (0x006f,  8), (0x006d,  8), (0x00d3,  9), (0x00cb,  9), (0x00c4,  9), (0x00bb,  9),
    (0x0161, 10), (0x014c, 10), (0x0139, 10), (0x012a, 10), (0x011b, 10), (0x0213, 11), (0x017d, 11), (0x0011,  8),
    (0x01ab, 10), (0x00d4,  9), (0x00d0,  9), (0x00cd,  9), (0x00c9,  9), (0x00c1,  9), (0x00ba,  9), (0x00b1,  9),
    (0x00a9,  9), (0x0140, 10), (0x012f, 10), (0x011e, 10), (0x010c, 10), (0x0202, 11), (0x0179, 11), (0x0010,  8),
    (0x014f, 10), (0x00c7,  9), (0x00c5,  9), (0x00bf,  9), (0x00bd,  9), (0x00b5,  9), (0x00ae,  9), (0x014d, 10),
    (0x0141, 10), (0x0131, 10), (0x0121, 10), (0x0113, 10), (0x0209, 11), (0x017b, 11), (0x0173, 11), (0x000b,  8),
    (0x029c, 11), (0x00b8,  9), (0x00b7,  9), (0x00b3,  9), (0x00af,  9), (0x0158, 10), (0x014b, 10), (0x013a, 10),
    (0x0130, 10), (0x0122, 10), (0x0115, 10), (0x0212, 11), (0x017f, 11), (0x0175, 11), (0x016e, 11), (0x000a,  8),
    (0x028c, 11), (0x015a, 10), (0x00ab,  9), (0x00a8,  9), (0x00a4,  9), (0x013e, 10), (0x0135, 10), (0x012b, 10),
    (0x011f, 10), (0x0114, 10), (0x0107, 10), (0x0201, 11), (0x0177, 11), (0x0170, 11), (0x016a, 11), (0x0006,  8),
    (0x0288, 11), (0x0142, 10), (0x013c, 10), (0x0138, 10), (0x0133, 10), (0x012e, 10), (0x0124, 10), (0x011c, 10),
    (0x010d, 10), (0x0105, 10), (0x0200, 11), (0x0178, 11), (0x0172, 11), (0x016c, 11), (0x0167, 11), (0x0004,  8),
    (0x026c, 11), (0x012c, 10), (0x0128, 10), (0x0126, 10), (0x0120, 10), (0x011a, 10), (0x0111, 10), (0x010a, 10),
    (0x0203, 11), (0x017c, 11), (0x0176, 11), (0x0171, 11), (0x016d, 11), (0x0169, 11), (0x0165, 11), (0x0002,  8),
    (0x0409, 12), (0x0118, 10), (0x0116, 10), (0x0112, 10), (0x010b, 10), (0x0108, 10), (0x0103, 10), (0x017e, 11),
    (0x017a, 11), (0x0174, 11), (0x016f, 11), (0x016b, 11), (0x0168, 11), (0x0166, 11), (0x0164, 11), (0x0000,  8),
    (0x002b,  8), (0x0014,  7), (0x0013,  7), (0x0011,  7), (0x000f,  7), (0x000d,  7), (0x000b,  7), (0x0009,  7),
    (0x0007,  7), (0x0006,  7), (0x0004,  7), (0x0007,  8), (0x0005,  8), (0x0003,  8), (0x0001,  8), (0x0003,  4),
)

QUAD_CODES_A = (
    (0x0001,  1), (0x0005,  4), (0x0004,  4), (0x0005,  5), (0x0006,  4), (0x0005,  6), (0x0004,  5), (0x0004,  6),
    (0x0007,  4), (0x0003,  5), (0x0006,  5), (0x0000,  6), (0x0007,  5), (0x0002,  6), (0x0003,  6), (0x0001,  6),
)

QUAD_CODES_B = (
    (0x000f,  4), (0x000e,  4), (0x000d,  4), (0x000c,  4), (0x000b,  4), (0x000a,  4), (0x0009,  4), (0x0008,  4),
    (0x0007,  4), (0x0006,  4), (0x0005,  4), (0x0004,  4), (0x0003,  4), (0x0002,  4), (0x0001,  4), (0x0000,  4),
)

# (x, y) grid width per code table; index into the flat tuples above is
# x * width + y.
PAIR_WIDTHS = {
    1: 2,
    2: 3,
    3: 3,
    5: 4,
    6: 4,
    7: 6,
    8: 6,
    9: 6,
    10: 8,
    11: 8,
    12: 8,
    13: 16,
    15: 16,
    16: 16,
    24: 16,
}

PAIR_CODE_TABLES = {
    1: PAIR_CODES_1,
    2: PAIR_CODES_2,
    3: PAIR_CODES_3,
    5: PAIR_CODES_5,
    6: PAIR_CODES_6,
    7: PAIR_CODES_7,
    8: PAIR_CODES_8,
    9: PAIR_CODES_9,
    10: PAIR_CODES_10,
    11: PAIR_CODES_11,
    12: PAIR_CODES_12,
    13: PAIR_CODES_13,
    15: PAIR_CODES_15,
    16: PAIR_CODES_16,
    24: PAIR_CODES_24,
}

# table_select index -> (code table id, linbits).  Index 0 codes an
# all-zero region with no bits; 4 and 14 are reserved.
TABLE_REGISTRY = {
    0: (None, 0),
    1: (1, 0),
    2: (2, 0),
    3: (3, 0),
    5: (5, 0),
    6: (6, 0),
    7: (7, 0),
    8: (8, 0),
    9: (9, 0),
    10: (10, 0),
    11: (11, 0),
    12: (12, 0),
    13: (13, 0),
    15: (15, 0),
    16: (16, 1),
    17: (16, 2),
    18: (16, 3),
    19: (16, 4),
    20: (16, 6),
    21: (16, 8),
    22: (16, 10),
    23: (16, 13),
    24: (24, 4),
    25: (24, 5),
    26: (24, 6),
    27: (24, 7),
    28: (24, 8),
    29: (24, 9),
    30: (24, 11),
    31: (24, 13),
}

