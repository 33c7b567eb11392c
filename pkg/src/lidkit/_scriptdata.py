"""Unicode script property runs for letter codepoints.

Generated by tools/gen_script_table.py from the Unicode Character
Database (via regex 2026.7.10). Do not edit by hand.

Each run is (first codepoint, last codepoint) inclusive, covering
codepoints with general category Letter; the parallel list holds
ISO 15924 script codes.
"""

RUN_STARTS = (
    65, 97, 170, 181, 186, 192, 216, 248, 697, 710,
    736, 748, 750, 880, 884, 886, 890, 895, 902, 904,
    908, 910, 931, 994, 1008, 1015, 1024, 1162, 1329, 1369,
    1376, 1488, 1519, 1568, 1600, 1601, 1646, 1649, 1749, 1765,
    1774, 1786, 1791, 1808, 1810, 1869, 1872, 1920, 1969, 1994,
    2036, 2042, 2048, 2074, 2084, 2088, 2112, 2144, 2160, 2185,
    2208, 2308, 2365, 2384, 2392, 2417, 2432, 2437, 2447, 2451,
    2474, 2482, 2486, 2493, 2510, 2524, 2527, 2544, 2556, 2565,
    2575, 2579, 2602, 2610, 2613, 2616, 2649, 2654, 2674, 2693,
    2703, 2707, 2730, 2738, 2741, 2749, 2768, 2784, 2809, 2821,
    2831, 2835, 2858, 2866, 2869, 2877, 2908, 2911, 2929, 2947,
    2949, 2958, 2962, 2969, 2972, 2974, 2979, 2984, 2990, 3024,
    3077, 3086, 3090, 3114, 3133, 3160, 3164, 3168, 3200, 3205,
    3214, 3218, 3242, 3253, 3261, 3292, 3296, 3313, 3332, 3342,
    3346, 3389, 3406, 3412, 3423, 3450, 3461, 3482, 3507, 3517,
    3520, 3585, 3634, 3648, 3713, 3716, 3718, 3724, 3749, 3751,
    3762, 3773, 3776, 3782, 3804, 3840, 3904, 3913, 3976, 4096,
    4159, 4176, 4186, 4193, 4197, 4206, 4213, 4238, 4256, 4295,
    4301, 4304, 4348, 4352, 4608, 4682, 4688, 4696, 4698, 4704,
    4746, 4752, 4786, 4792, 4800, 4802, 4808, 4824, 4882, 4888,
    4992, 5024, 5112, 5121, 5743, 5761, 5792, 5873, 5888, 5919,
    5920, 5952, 5984, 5998, 6016, 6103, 6108, 6176, 6272, 6279,
    6314, 6320, 6400, 6480, 6512, 6528, 6576, 6656, 6688, 6823,
    6917, 6981, 7043, 7086, 7098, 7104, 7168, 7245, 7258, 7296,
    7312, 7357, 7401, 7406, 7413, 7418, 7424, 7462, 7467, 7468,
    7517, 7522, 7526, 7531, 7544, 7545, 7615, 7680, 7936, 7960,
    7968, 8008, 8016, 8025, 8027, 8029, 8031, 8064, 8118, 8126,
    8130, 8134, 8144, 8150, 8160, 8178, 8182, 8305, 8319, 8336,
    8450, 8455, 8458, 8469, 8473, 8484, 8486, 8488, 8490, 8492,
    8495, 8498, 8499, 8508, 8517, 8526, 8579, 11264, 11360, 11392,
    11499, 11506, 11520, 11559, 11565, 11568, 11631, 11648, 11680, 11688,
    11696, 11704, 11712, 11720, 11728, 11736, 11823, 12293, 12294, 12337,
    12347, 12348, 12353, 12445, 12449, 12540, 12541, 12549, 12593, 12704,
    12784, 13312, 19968, 40960, 42192, 42240, 42512, 42538, 42560, 42623,
    42656, 42775, 42786, 42888, 42891, 42993, 43008, 43011, 43015, 43020,
    43072, 43138, 43250, 43259, 43261, 43274, 43312, 43360, 43396, 43471,
    43488, 43494, 43514, 43520, 43584, 43588, 43616, 43642, 43646, 43648,
    43697, 43701, 43705, 43712, 43714, 43739, 43744, 43762, 43777, 43785,
    43793, 43808, 43816, 43824, 43868, 43877, 43878, 43888, 43968, 44032,
    55216, 55243, 63744, 64112, 64256, 64275, 64285, 64287, 64298, 64312,
    64318, 64320, 64323, 64326, 64336, 64467, 64848, 64914, 65008, 65136,
    65142, 65313, 65345, 65382, 65392, 65393, 65438, 65440, 65474, 65482,
    65490, 65498, 65536, 65549, 65576, 65596, 65599, 65616, 65664, 66176,
    66208, 66304, 66349, 66352, 66370, 66384, 66432, 66464, 66504, 66560,
    66640, 66688, 66736, 66776, 66816, 66864, 66928, 66940, 66956, 66964,
    66967, 66979, 66995, 67003, 67008, 67072, 67392, 67424, 67456, 67463,
    67506, 67584, 67592, 67594, 67639, 67644, 67647, 67648, 67680, 67712,
    67808, 67828, 67840, 67872, 67904, 67968, 68000, 68030, 68096, 68112,
    68117, 68121, 68192, 68224, 68288, 68297, 68352, 68416, 68448, 68480,
    68608, 68736, 68800, 68864, 68938, 68975, 69248, 69296, 69314, 69376,
    69415, 69424, 69488, 69552, 69600, 69635, 69745, 69749, 69763, 69840,
    69891, 69956, 69959, 69968, 70006, 70019, 70081, 70106, 70108, 70144,
    70163, 70207, 70272, 70280, 70282, 70287, 70303, 70320, 70405, 70415,
    70419, 70442, 70450, 70453, 70461, 70480, 70493, 70528, 70539, 70542,
    70544, 70583, 70609, 70611, 70656, 70727, 70751, 70784, 70852, 70855,
    71040, 71128, 71168, 71236, 71296, 71352, 71424, 71488, 71680, 71840,
    71935, 71936, 71945, 71948, 71957, 71960, 71999, 72001, 72096, 72106,
    72161, 72163, 72192, 72203, 72250, 72272, 72284, 72349, 72368, 72384,
    72640, 72704, 72714, 72768, 72818, 72960, 72968, 72971, 73030, 73056,
    73063, 73066, 73112, 73136, 73440, 73474, 73476, 73490, 73648, 73728,
    74880, 77712, 77824, 78913, 78944, 82944, 90368, 92160, 92736, 92784,
    92880, 92928, 92992, 93027, 93053, 93504, 93760, 93856, 93883, 93952,
    94032, 94099, 94176, 94177, 94179, 94194, 94208, 101120, 101631, 101632,
    101760, 110576, 110581, 110589, 110592, 110593, 110880, 110898, 110928, 110933,
    110948, 110960, 113664, 113776, 113792, 113808, 119808, 119894, 119966, 119970,
    119973, 119977, 119982, 119995, 119997, 120005, 120071, 120077, 120086, 120094,
    120123, 120128, 120134, 120138, 120146, 120488, 120514, 120540, 120572, 120598,
    120630, 120656, 120688, 120714, 120746, 120772, 122624, 122661, 122928, 123136,
    123191, 123214, 123536, 123584, 124112, 124368, 124400, 124608, 124640, 124644,
    124647, 124656, 124670, 124896, 124904, 124909, 124912, 124928, 125184, 125259,
    126464, 126469, 126497, 126500, 126503, 126505, 126516, 126521, 126523, 126530,
    126535, 126537, 126539, 126541, 126545, 126548, 126551, 126553, 126555, 126557,
    126559, 126561, 126564, 126567, 126572, 126580, 126585, 126590, 126592, 126603,
    126625, 126629, 126635, 131072, 173824, 178208, 183984, 191472, 194560, 196608,
    201552,
)

RUN_ENDS = (
    90, 122, 170, 181, 186, 214, 246, 696, 705, 721,
    740, 748, 750, 883, 884, 887, 893, 895, 902, 906,
    908, 929, 993, 1007, 1013, 1023, 1153, 1327, 1366, 1369,
    1416, 1514, 1522, 1599, 1600, 1610, 1647, 1747, 1749, 1766,
    1775, 1788, 1791, 1808, 1839, 1871, 1919, 1957, 1969, 2026,
    2037, 2042, 2069, 2074, 2084, 2088, 2136, 2154, 2183, 2191,
    2249, 2361, 2365, 2384, 2401, 2431, 2432, 2444, 2448, 2472,
    2480, 2482, 2489, 2493, 2510, 2525, 2529, 2545, 2556, 2570,
    2576, 2600, 2608, 2611, 2614, 2617, 2652, 2654, 2676, 2701,
    2705, 2728, 2736, 2739, 2745, 2749, 2768, 2785, 2809, 2828,
    2832, 2856, 2864, 2867, 2873, 2877, 2909, 2913, 2929, 2947,
    2954, 2960, 2965, 2970, 2972, 2975, 2980, 2986, 3001, 3024,
    3084, 3088, 3112, 3129, 3133, 3162, 3165, 3169, 3200, 3212,
    3216, 3240, 3251, 3257, 3261, 3294, 3297, 3314, 3340, 3344,
    3386, 3389, 3406, 3414, 3425, 3455, 3478, 3505, 3515, 3517,
    3526, 3632, 3635, 3654, 3714, 3716, 3722, 3747, 3749, 3760,
    3763, 3773, 3780, 3782, 3807, 3840, 3911, 3948, 3980, 4138,
    4159, 4181, 4189, 4193, 4198, 4208, 4225, 4238, 4293, 4295,
    4301, 4346, 4351, 4607, 4680, 4685, 4694, 4696, 4701, 4744,
    4749, 4784, 4789, 4798, 4800, 4805, 4822, 4880, 4885, 4954,
    5007, 5109, 5117, 5740, 5759, 5786, 5866, 5880, 5905, 5919,
    5937, 5969, 5996, 6000, 6067, 6103, 6108, 6264, 6276, 6312,
    6314, 6389, 6430, 6509, 6516, 6571, 6601, 6678, 6740, 6823,
    6963, 6988, 7072, 7087, 7103, 7141, 7203, 7247, 7293, 7306,
    7354, 7359, 7404, 7411, 7414, 7418, 7461, 7466, 7467, 7516,
    7521, 7525, 7530, 7543, 7544, 7614, 7615, 7935, 7957, 7965,
    8005, 8013, 8023, 8025, 8027, 8029, 8061, 8116, 8124, 8126,
    8132, 8140, 8147, 8155, 8172, 8180, 8188, 8305, 8319, 8348,
    8450, 8455, 8467, 8469, 8477, 8484, 8486, 8488, 8491, 8493,
    8497, 8498, 8505, 8511, 8521, 8526, 8580, 11359, 11391, 11492,
    11502, 11507, 11557, 11559, 11565, 11623, 11631, 11670, 11686, 11694,
    11702, 11710, 11718, 11726, 11734, 11742, 11823, 12293, 12294, 12341,
    12347, 12348, 12438, 12447, 12538, 12540, 12543, 12591, 12686, 12735,
    12799, 19903, 40959, 42124, 42237, 42508, 42527, 42539, 42606, 42653,
    42725, 42783, 42887, 42888, 42972, 43007, 43009, 43013, 43018, 43042,
    43123, 43187, 43255, 43259, 43262, 43301, 43334, 43388, 43442, 43471,
    43492, 43503, 43518, 43560, 43586, 43595, 43638, 43642, 43647, 43695,
    43697, 43702, 43709, 43712, 43714, 43741, 43754, 43764, 43782, 43790,
    43798, 43814, 43822, 43866, 43876, 43877, 43881, 43967, 44002, 55203,
    55238, 55291, 64109, 64217, 64262, 64279, 64285, 64296, 64310, 64316,
    64318, 64321, 64324, 64335, 64433, 64829, 64911, 64967, 65019, 65140,
    65276, 65338, 65370, 65391, 65392, 65437, 65439, 65470, 65479, 65487,
    65495, 65500, 65547, 65574, 65594, 65597, 65613, 65629, 65786, 66204,
    66256, 66335, 66351, 66368, 66377, 66421, 66461, 66499, 66511, 66639,
    66687, 66717, 66771, 66811, 66855, 66915, 66938, 66954, 66962, 66965,
    66977, 66993, 67001, 67004, 67059, 67382, 67413, 67431, 67461, 67504,
    67514, 67589, 67592, 67637, 67640, 67644, 67647, 67669, 67702, 67742,
    67826, 67829, 67861, 67897, 67929, 67999, 68023, 68031, 68096, 68115,
    68119, 68149, 68220, 68252, 68295, 68324, 68405, 68437, 68466, 68497,
    68680, 68786, 68850, 68899, 68965, 68997, 69289, 69297, 69319, 69404,
    69415, 69445, 69505, 69572, 69622, 69687, 69746, 69749, 69807, 69864,
    69926, 69956, 69959, 70002, 70006, 70066, 70084, 70106, 70108, 70161,
    70187, 70208, 70278, 70280, 70285, 70301, 70312, 70366, 70412, 70416,
    70440, 70448, 70451, 70457, 70461, 70480, 70497, 70537, 70539, 70542,
    70581, 70583, 70609, 70611, 70708, 70730, 70753, 70831, 70853, 70855,
    71086, 71131, 71215, 71236, 71338, 71352, 71450, 71494, 71723, 71903,
    71935, 71942, 71945, 71955, 71958, 71983, 71999, 72001, 72103, 72144,
    72161, 72163, 72192, 72242, 72250, 72272, 72329, 72349, 72383, 72440,
    72672, 72712, 72750, 72768, 72847, 72966, 72969, 73008, 73030, 73061,
    73064, 73097, 73112, 73179, 73458, 73474, 73488, 73523, 73648, 74649,
    75075, 77808, 78895, 78918, 82938, 83526, 90397, 92728, 92766, 92862,
    92909, 92975, 92995, 93047, 93071, 93548, 93823, 93880, 93907, 94026,
    94032, 94111, 94176, 94177, 94179, 94195, 101119, 101589, 101631, 101662,
    101874, 110579, 110587, 110590, 110592, 110879, 110882, 110898, 110930, 110933,
    110951, 111355, 113770, 113788, 113800, 113817, 119892, 119964, 119967, 119970,
    119974, 119980, 119993, 119995, 120003, 120069, 120074, 120084, 120092, 120121,
    120126, 120132, 120134, 120144, 120485, 120512, 120538, 120570, 120596, 120628,
    120654, 120686, 120712, 120744, 120770, 120779, 122654, 122666, 122989, 123180,
    123197, 123214, 123565, 123627, 124139, 124397, 124400, 124638, 124642, 124645,
    124653, 124660, 124671, 124902, 124907, 124910, 124926, 125124, 125251, 125259,
    126467, 126495, 126498, 126500, 126503, 126514, 126519, 126521, 126523, 126530,
    126535, 126537, 126539, 126543, 126546, 126548, 126551, 126553, 126555, 126557,
    126559, 126562, 126564, 126570, 126578, 126583, 126588, 126590, 126601, 126619,
    126627, 126633, 126651, 173791, 178205, 183981, 191456, 192093, 195101, 201546,
    210041,
)

RUN_SCRIPTS = (
    "Latn", "Latn", "Latn", "Zyyy", "Latn", "Latn", "Latn", "Latn", "Zyyy", "Zyyy",
    "Latn", "Zyyy", "Zyyy", "Grek", "Zyyy", "Grek", "Grek", "Grek", "Grek", "Grek",
    "Grek", "Grek", "Grek", "Copt", "Grek", "Grek", "Cyrl", "Cyrl", "Armn", "Armn",
    "Armn", "Hebr", "Hebr", "Arab", "Zyyy", "Arab", "Arab", "Arab", "Arab", "Arab",
    "Arab", "Arab", "Arab", "Syrc", "Syrc", "Syrc", "Arab", "Thaa", "Thaa", "Nkoo",
    "Nkoo", "Nkoo", "Samr", "Samr", "Samr", "Samr", "Mand", "Syrc", "Arab", "Arab",
    "Arab", "Deva", "Deva", "Deva", "Deva", "Deva", "Beng", "Beng", "Beng", "Beng",
    "Beng", "Beng", "Beng", "Beng", "Beng", "Beng", "Beng", "Beng", "Beng", "Guru",
    "Guru", "Guru", "Guru", "Guru", "Guru", "Guru", "Guru", "Guru", "Guru", "Gujr",
    "Gujr", "Gujr", "Gujr", "Gujr", "Gujr", "Gujr", "Gujr", "Gujr", "Gujr", "Orya",
    "Orya", "Orya", "Orya", "Orya", "Orya", "Orya", "Orya", "Orya", "Orya", "Taml",
    "Taml", "Taml", "Taml", "Taml", "Taml", "Taml", "Taml", "Taml", "Taml", "Taml",
    "Telu", "Telu", "Telu", "Telu", "Telu", "Telu", "Telu", "Telu", "Knda", "Knda",
    "Knda", "Knda", "Knda", "Knda", "Knda", "Knda", "Knda", "Knda", "Mlym", "Mlym",
    "Mlym", "Mlym", "Mlym", "Mlym", "Mlym", "Mlym", "Sinh", "Sinh", "Sinh", "Sinh",
    "Sinh", "Thai", "Thai", "Thai", "Laoo", "Laoo", "Laoo", "Laoo", "Laoo", "Laoo",
    "Laoo", "Laoo", "Laoo", "Laoo", "Laoo", "Tibt", "Tibt", "Tibt", "Tibt", "Mymr",
    "Mymr", "Mymr", "Mymr", "Mymr", "Mymr", "Mymr", "Mymr", "Mymr", "Geor", "Geor",
    "Geor", "Geor", "Geor", "Hang", "Ethi", "Ethi", "Ethi", "Ethi", "Ethi", "Ethi",
    "Ethi", "Ethi", "Ethi", "Ethi", "Ethi", "Ethi", "Ethi", "Ethi", "Ethi", "Ethi",
    "Ethi", "Cher", "Cher", "Cans", "Cans", "Ogam", "Runr", "Runr", "Tglg", "Tglg",
    "Hano", "Buhd", "Tagb", "Tagb", "Khmr", "Khmr", "Khmr", "Mong", "Mong", "Mong",
    "Mong", "Cans", "Limb", "Tale", "Tale", "Talu", "Talu", "Bugi", "Lana", "Lana",
    "Bali", "Bali", "Sund", "Sund", "Sund", "Batk", "Lepc", "Lepc", "Olck", "Cyrl",
    "Geor", "Geor", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Latn", "Grek", "Cyrl", "Latn",
    "Grek", "Latn", "Grek", "Latn", "Cyrl", "Latn", "Grek", "Latn", "Grek", "Grek",
    "Grek", "Grek", "Grek", "Grek", "Grek", "Grek", "Grek", "Grek", "Grek", "Grek",
    "Grek", "Grek", "Grek", "Grek", "Grek", "Grek", "Grek", "Latn", "Latn", "Latn",
    "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Grek", "Zyyy", "Latn", "Zyyy",
    "Zyyy", "Latn", "Zyyy", "Zyyy", "Zyyy", "Latn", "Latn", "Glag", "Latn", "Copt",
    "Copt", "Copt", "Geor", "Geor", "Geor", "Tfng", "Tfng", "Ethi", "Ethi", "Ethi",
    "Ethi", "Ethi", "Ethi", "Ethi", "Ethi", "Ethi", "Zyyy", "Hani", "Zyyy", "Zyyy",
    "Hani", "Zyyy", "Hira", "Hira", "Kana", "Zyyy", "Kana", "Bopo", "Hang", "Bopo",
    "Kana", "Hani", "Hani", "Yiii", "Lisu", "Vaii", "Vaii", "Vaii", "Cyrl", "Cyrl",
    "Bamu", "Zyyy", "Latn", "Zyyy", "Latn", "Latn", "Sylo", "Sylo", "Sylo", "Sylo",
    "Phag", "Saur", "Deva", "Deva", "Deva", "Kali", "Rjng", "Hang", "Java", "Zyyy",
    "Mymr", "Mymr", "Mymr", "Cham", "Cham", "Cham", "Mymr", "Mymr", "Mymr", "Tavt",
    "Tavt", "Tavt", "Tavt", "Tavt", "Tavt", "Tavt", "Mtei", "Mtei", "Ethi", "Ethi",
    "Ethi", "Ethi", "Ethi", "Latn", "Latn", "Grek", "Latn", "Cher", "Mtei", "Hang",
    "Hang", "Hang", "Hani", "Hani", "Latn", "Armn", "Hebr", "Hebr", "Hebr", "Hebr",
    "Hebr", "Hebr", "Hebr", "Hebr", "Arab", "Arab", "Arab", "Arab", "Arab", "Arab",
    "Arab", "Latn", "Latn", "Kana", "Zyyy", "Kana", "Zyyy", "Hang", "Hang", "Hang",
    "Hang", "Hang", "Linb", "Linb", "Linb", "Linb", "Linb", "Linb", "Linb", "Lyci",
    "Cari", "Ital", "Ital", "Goth", "Goth", "Perm", "Ugar", "Xpeo", "Xpeo", "Dsrt",
    "Shaw", "Osma", "Osge", "Osge", "Elba", "Aghb", "Vith", "Vith", "Vith", "Vith",
    "Vith", "Vith", "Vith", "Vith", "Todr", "Lina", "Lina", "Lina", "Latn", "Latn",
    "Latn", "Cprt", "Cprt", "Cprt", "Cprt", "Cprt", "Cprt", "Armi", "Palm", "Nbat",
    "Hatr", "Hatr", "Phnx", "Lydi", "Sidt", "Mero", "Merc", "Merc", "Khar", "Khar",
    "Khar", "Khar", "Sarb", "Narb", "Mani", "Mani", "Avst", "Prti", "Phli", "Phlp",
    "Orkh", "Hung", "Hung", "Rohg", "Gara", "Gara", "Yezi", "Yezi", "Arab", "Sogo",
    "Sogo", "Sogd", "Ougr", "Chrs", "Elym", "Brah", "Brah", "Brah", "Kthi", "Sora",
    "Cakm", "Cakm", "Cakm", "Mahj", "Mahj", "Shrd", "Shrd", "Shrd", "Shrd", "Khoj",
    "Khoj", "Khoj", "Mult", "Mult", "Mult", "Mult", "Mult", "Sind", "Gran", "Gran",
    "Gran", "Gran", "Gran", "Gran", "Gran", "Gran", "Gran", "Tutg", "Tutg", "Tutg",
    "Tutg", "Tutg", "Tutg", "Tutg", "Newa", "Newa", "Newa", "Tirh", "Tirh", "Tirh",
    "Sidd", "Sidd", "Modi", "Modi", "Takr", "Takr", "Ahom", "Ahom", "Dogr", "Wara",
    "Wara", "Diak", "Diak", "Diak", "Diak", "Diak", "Diak", "Diak", "Nand", "Nand",
    "Nand", "Nand", "Zanb", "Zanb", "Zanb", "Soyo", "Soyo", "Soyo", "Cans", "Pauc",
    "Sunu", "Bhks", "Bhks", "Bhks", "Marc", "Gonm", "Gonm", "Gonm", "Gonm", "Gong",
    "Gong", "Gong", "Gong", "Tols", "Maka", "Kawi", "Kawi", "Kawi", "Lisu", "Xsux",
    "Xsux", "Cpmn", "Egyp", "Egyp", "Egyp", "Hluw", "Gukh", "Bamu", "Mroo", "Tnsa",
    "Bass", "Hmng", "Hmng", "Hmng", "Hmng", "Krai", "Medf", "Berf", "Berf", "Plrd",
    "Plrd", "Plrd", "Tang", "Nshu", "Hani", "Hani", "Tang", "Kits", "Kits", "Tang",
    "Tang", "Kana", "Kana", "Kana", "Kana", "Hira", "Kana", "Hira", "Hira", "Kana",
    "Kana", "Nshu", "Dupl", "Dupl", "Dupl", "Dupl", "Zyyy", "Zyyy", "Zyyy", "Zyyy",
    "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy",
    "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy",
    "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Zyyy", "Latn", "Latn", "Cyrl", "Hmnp",
    "Hmnp", "Hmnp", "Toto", "Wcho", "Nagm", "Onao", "Onao", "Tayo", "Tayo", "Tayo",
    "Tayo", "Tayo", "Tayo", "Ethi", "Ethi", "Ethi", "Ethi", "Mend", "Adlm", "Adlm",
    "Arab", "Arab", "Arab", "Arab", "Arab", "Arab", "Arab", "Arab", "Arab", "Arab",
    "Arab", "Arab", "Arab", "Arab", "Arab", "Arab", "Arab", "Arab", "Arab", "Arab",
    "Arab", "Arab", "Arab", "Arab", "Arab", "Arab", "Arab", "Arab", "Arab", "Arab",
    "Arab", "Arab", "Arab", "Hani", "Hani", "Hani", "Hani", "Hani", "Hani", "Hani",
    "Hani",
)
