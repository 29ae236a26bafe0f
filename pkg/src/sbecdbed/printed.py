"""Published parameter tables, transcribed verbatim (typos included).
Used only for the printed-vs-computed audit.

Table 2 rows: (r_sym, n_bits, k_bits).  Table 4 rows: (r_bits, n_bits, k_bits).
Tables 3 and 5 rows: (n_bits, k_bits).  Table 6 rows: (n_bits, k_bits, sources).
"""

# max code length in bytes of the 3-check-byte code, and its (n, k) row
TABLE1 = {
    5: (16, 79, 64),
    6: (46, 274, 256),
    7: (77, 533, 512),
    8: (131, 1048, 1024),
    9: (231, 2075, 2048),
    10: (823, 8222, 8192),
    11: (1493, 16417, 16384),
    12: (2734, 32804, 32768),
    13: (5045, 65575, 65536),
    14: (9366, 131114, 131072),
    15: (17480, 262189, 262144),
}

TABLE2 = {
    5: [(3, 170, 155), (4, 340, 320), (5, 5780, 5755), (6, 11560, 11530)],
    6: [(3, 396, 378), (4, 792, 768), (5, 26136, 26106), (6, 52272, 52236)],
    7: [(3, 910, 889), (4, 1820, 1792), (5, 11300, 118265), (6, 236600, 236558)],
    8: [(3, 2064, 2040), (4, 4128, 4096)],
    9: [(3, 4626, 4599), (4, 9252, 9216)],
    10: [(3, 10260, 10230), (4, 20520, 20480)],
    11: [(3, 22550, 22517), (4, 45100, 45056)],
    12: [(3, 49176, 49140), (4, 98352, 98304)],
    13: [(3, 106522, 106483), (4, 213044, 212992)],
    14: [(3, 229404, 229362), (4, 458808, 458752)],
    15: [(3, 491550, 491505)],
}

TABLE3 = {
    5: [(47, 32), (79, 64), (143, 128), (276, 256), (537, 512), (1049, 1024), (2073, 2048),
        (4121, 4096), (8222, 8192), (16419, 16384), (32803, 32768), (65571, 65536),
        (131107, 131072), (262184, 262144), (524333, 524288)],
    6: [(82, 64), (146, 128), (274, 256), (536, 512), (1054, 1024), (2078, 2048), (4126, 4096),
        (8222, 8192), (16414, 16384), (32804, 32768), (65578, 65536), (131114, 131072),
        (262186, 262144), (524330, 524288)],
    7: [(149, 128), (277, 256), (533, 512), (1052, 1024), (2083, 2048), (4131, 4096),
        (8227, 8192), (16419, 16384), (32803, 32768), (65571, 65536), (131114, 131072),
        (262193, 262144), (524337, 524288)],
    8: [(280, 256), (536, 512), (1048, 1024), (2080, 2048), (4128, 4096), (8232, 8192),
        (16424, 16384), (32808, 32768), (65576, 65536), (131112, 131072), (262184, 262144),
        (524328, 524288)],
    9: [(539, 512), (1051, 1024), (2075, 2048), (4123, 4096), (8228, 8192), (16429, 16384),
        (32813, 32768), (65581, 65536), (131117, 131072), (262189, 262144), (524333, 524288)],
    10: [(1054, 1024), (2078, 2048), (4126, 4096), (8222, 8192), (16424, 16384), (32818, 32768),
         (65586, 65536), (131122, 131072), (262194, 262144), (524338, 524288)],
    11: [(2081, 2048), (4129, 4096), (8225, 8192), (16417, 16384), (32812, 32768),
         (65591, 65536), (131127, 131072), (262199, 262144), (524343, 524288)],
    12: [(4132, 4096), (8228, 8192), (16420, 16384), (32804, 32768), (65584, 65536),
         (131132, 131072), (262204, 262144), (524348, 524288)],
    13: [(8231, 8192), (16423, 16384), (32807, 32768), (65575, 65536), (131124, 131072),
         (262209, 262144), (524353, 524288)],
    14: [(16426, 16384), (32810, 32768), (65578, 65536), (131114, 131072), (262200, 262144),
         (524344, 524288)],
    15: [(32813, 32768), (65581, 65536), (131117, 131072), (262189, 262144), (524348, 524288)],
}

TABLE4 = {
    5: [(16, 340, 324), (21, 680, 659), (26, 11560, 11534)],
    6: [(19, 792, 773), (25, 1584, 1559), (31, 52272, 52241)],
    7: [(22, 1820, 1798), (29, 3640, 3611), (36, 236600, 236564)],
    8: [(25, 4128, 4103), (33, 8256, 8223)],
    9: [(28, 9252, 9224), (37, 18504, 18467)],
    10: [(31, 20520, 20489), (41, 41040, 40999)],
    11: [(34, 45100, 45066), (45, 90200, 90155)],
    12: [(37, 98352, 98315), (49, 196704, 196655)],
    13: [(40, 213044, 213004), (53, 426088, 426035)],
    14: [(43, 458808, 458765)],
    15: [(46, 983100, 983054)],
}

TABLE5 = {
    5: [(48, 32), (80, 64), (144, 128), (272, 256), (533, 512), (1050, 1024), (2074, 2048),
        (4122, 4096), (8218, 8192), (16415, 16384), (32804, 32768), (65572, 65536),
        (131108, 131072), (262180, 262144), (524329, 524288)],
    6: [(83, 64), (147, 128), (275, 256), (531, 512), (1049, 1024), (2079, 2048), (4127, 4096),
        (8223, 8192), (16415, 16384), (326799, 32768), (65573, 65536), (131115, 131072),
        (262187, 262144), (524331, 524288)],
    7: [(150, 128), (278, 256), (534, 512), (1046, 1024), (2077, 2048), (4132, 4096),
        (8228, 8192), (16420, 16384), (32804, 32768), (65572, 65536), (131104, 131072),
        (262187, 262144), (524338, 524288)],
    8: [(281, 256), (537, 512), (1049, 1024), (2073, 2048), (4121, 4096), (8225, 8192),
        (16425, 16384), (32809, 32768), (65577, 65536), (131113, 131072), (262185, 262144),
        (524329, 524288)],
    9: [(540, 512), (1052, 1024), (2076, 2048), (4124, 4096), (8220, 8192), (16421, 16384),
        (32814, 32768), (65582, 65536), (131118, 131072), (262190, 262144), (524334, 524288)],
    10: [(1055, 1024), (2079, 2048), (4127, 4096), (8223, 8192), (16415, 16384), (32809, 32768),
         (65587, 65536), (131123, 131072), (262195, 262144), (524339, 524288)],
    11: [(2080, 2048), (4130, 4096), (8226, 8192), (16418, 16384), (32802, 32768),
         (65581, 65536), (131128, 131072), (262200, 262144), (524344, 524288)],
    12: [(4133, 4096), (8229, 8192), (16421, 16384), (32805, 32768), (65573, 65536),
         (131121, 131072), (262205, 262144), (524349, 524288)],
    13: [(8232, 8192), (16424, 16384), (32808, 32768), (65576, 65536), (131112, 31072),
         (262197, 262144), (524354, 524288)],
    14: [(16427, 16384), (32811, 32768), (65579, 65536), (131115, 131072), (262187, 262144),
         (524345, 524288)],
    15: [(32814, 32768), (65582, 65536), (131118, 131072), (262190, 262144), (524334, 524288)],
}

TABLE6 = {
    5: [(47, 32, "3"), (79, 64, "1,3"), (143, 128, "1,3"), (272, 256, "5"), (533, 512, "5"),
        (1049, 1024, "3"), (2073, 2048, "3"), (4121, 4096, "3"), (8218, 8192, "5"),
        (16415, 16384, "5"), (32803, 32768, "3"), (65571, 65536, "3"), (131107, 131072, "3"),
        (262180, 262144, "5"), (524329, 524288, "5")],
    6: [(82, 64, "3"), (146, 128, "3"), (274, 256, "1,3"), (531, 512, "1"), (1049, 1024, "1"),
        (2078, 2048, "3"), (4126, 4096, "3"), (8222, 8192, "3"), (16414, 16384, "3"),
        (32799, 32768, "5"), (65573, 65536, "5"), (131114, 131072, "3"), (262186, 262144, "3"),
        (524330, 524288, "3")],
    7: [(149, 128, "3"), (277, 256, "3"), (533, 512, "1,3"), (1046, 1024, "5"), (2077, 2048, "5"),
        (4131, 4096, "3"), (8227, 8192, "3"), (10419, 16384, "3"), (32803, 32768, "3"),
        (65571, 65536, "3"), (131108, 131072, "5"), (262187, 262144, "5"), (524377, 524288, "3")],
    8: [(280, 256, "3"), (536, 512, "3"), (1048, 1024, "1,3"), (2073, 2048, "5"), (4121, 4096, "5"),
        (8225, 8192, "5"), (16424, 16384, "3"), (32808, 32768, "3"), (65576, 65536, "3"),
        (131112, 131072, "3"), (262184, 262144, "3"), (524328, 524288, "3")],
    9: [(539, 512, "3"), (1051, 1024, "3"), (2075, 2048, "1,3"), (4123, 4096, "1,3"),
        (8220, 8192, "5"), (16421, 16384, "5"), (32813, 32768, "3"), (65581, 65536, "3"),
        (131117, 131072, "3"), (262189, 262144, "3"), (524333, 524288, "3")],
    10: [(1054, 1024, "3"), (2078, 2048, "3"), (4126, 4096, "3"), (8222, 8192, "1,3"),
         (16415, 16384, "5"), (32809, 32768, "5"), (65586, 65536, "3"), (131122, 131072, "3"),
         (262194, 262144, "3"), (524338, 524288, "3")],
    11: [(2081, 2048, "3"), (4129, 4096, "3"), (8225, 8192, "3"), (16417, 16384, "1,3"),
         (32802, 32768, "5"), (65581, 65536, "5"), (131127, 131072, "3"), (262199, 262144, "3"),
         (524343, 524288, "3")],
    12: [(4132, 4096, "3"), (8228, 8192, "3"), (16420, 16384, "3"), (32804, 32768, "1,3"),
         (65573, 65536, "5"), (131121, 131072, "5"), (262204, 262144, "3"), (524348, 524288, "3")],
    13: [(8231, 8192, "3"), (16423, 16384, "3"), (32807, 32768, "3"), (65575, 65536, "1,3"),
         (131112, 131072, "5"), (262197, 262144, "5"), (524353, 524288, "3")],
    14: [(16426, 16384, "3"), (32810, 32768, "3"), (65578, 65536, "3"), (131114, 131072, "1,3"),
         (262187, 262144, "5"), (524344, 524288, "3")],
    15: [(32813, 32768, "3"), (65581, 65536, "3"), (131117, 131072, "3"), (262189, 262144, "3"),
         (524334, 524288, "5")],
}
