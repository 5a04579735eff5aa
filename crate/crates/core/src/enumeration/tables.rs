//! Reference tables as printed, row for row, including their typos.
//! Corrections live only in the comparison report.

use super::discrepancy::Confidence::{self, Clear, Doubtful};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub n: u64,
    /// Extra terms printed for `n`.
    pub terms: &'static [u64],
    pub confidence: Confidence,
}

const fn row(n: u64, terms: &'static [u64], confidence: Confidence) -> TableRow {
    TableRow { n, terms, confidence }
}

/// Published additive table: one printed extra term per number below 10000.
/// Rows marked doubtful break the column order of the printed layout.
#[rustfmt::skip]
pub static ADDITIVE_TABLE: &[TableRow] = &[
    row(0, &[0], Clear),
    row(10, &[4], Clear),
    row(11, &[8], Clear),
    row(12, &[3], Clear),
    row(14, &[2], Clear),
    row(16, &[1], Clear),
    row(18, &[0], Clear),
    row(22, &[7], Clear),
    row(33, &[6], Clear),
    row(44, &[5], Clear),
    row(55, &[4], Clear),
    row(66, &[3], Clear),
    row(77, &[2], Clear),
    row(88, &[1], Clear),
    row(99, &[0], Clear),
    row(101, &[98], Clear),
    row(110, &[17], Clear),
    row(121, &[25], Clear),
    row(132, &[33], Clear),
    row(141, &[114], Clear),
    row(143, &[41], Clear),
    row(154, &[49], Clear),
    row(161, &[22], Clear),
    row(165, &[57], Clear),
    row(176, &[65], Clear),
    row(181, &[130], Clear),
    row(187, &[73], Clear),
    row(198, &[81], Clear),
    row(201, &[147], Clear),
    row(202, &[97], Clear),
    row(221, &[155], Clear),
    row(222, &[105], Clear),
    row(241, &[163], Clear),
    row(242, &[113], Clear),
    row(261, &[171], Clear),
    row(262, &[121], Clear),
    row(281, &[179], Clear),
    row(282, &[129], Clear),
    row(302, &[146], Clear),
    row(303, &[96], Clear),
    row(322, &[154], Clear),
    row(323, &[104], Clear),
    row(342, &[162], Clear),
    row(343, &[112], Clear),
    row(362, &[170], Clear),
    row(363, &[120], Clear),
    row(382, &[178], Clear),
    row(383, &[128], Clear),
    row(403, &[145], Clear),
    row(404, &[95], Clear),
    row(423, &[153], Clear),
    row(424, &[103], Clear),
    row(443, &[161], Clear),
    row(444, &[111], Clear),
    row(463, &[169], Clear),
    row(464, &[119], Clear),
    row(483, &[177], Clear),
    row(484, &[127], Clear),
    row(504, &[144], Clear),
    row(505, &[94], Clear),
    row(524, &[152], Clear),
    row(525, &[102], Clear),
    row(544, &[160], Clear),
    row(545, &[110], Clear),
    row(584, &[176], Clear),
    row(585, &[126], Clear),
    row(605, &[143], Clear),
    row(606, &[101], Clear),
    row(625, &[151], Clear),
    row(626, &[101], Clear),
    row(645, &[159], Clear),
    row(646, &[109], Clear),
    row(665, &[167], Clear),
    row(666, &[117], Clear),
    row(685, &[175], Clear),
    row(686, &[125], Clear),
    row(706, &[142], Clear),
    row(707, &[92], Clear),
    row(726, &[150], Clear),
    row(727, &[100], Clear),
    row(746, &[158], Clear),
    row(747, &[108], Clear),
    row(766, &[166], Clear),
    row(767, &[116], Clear),
    row(786, &[174], Clear),
    row(787, &[124], Clear),
    row(807, &[141], Clear),
    row(808, &[91], Clear),
    row(827, &[149], Clear),
    row(828, &[99], Clear),
    row(847, &[157], Clear),
    row(848, &[107], Clear),
    row(867, &[165], Clear),
    row(868, &[115], Clear),
    row(887, &[173], Clear),
    row(888, &[123], Clear),
    row(908, &[140], Clear),
    row(909, &[90], Clear),
    row(928, &[148], Clear),
    row(929, &[98], Clear),
    row(948, &[156], Clear),
    row(949, &[106], Clear),
    row(968, &[164], Clear),
    row(969, &[114], Clear),
    row(988, &[172], Clear),
    row(989, &[122], Clear),
    row(1001, &[998], Clear),
    row(1009, &[148], Clear),
    row(1010, &[107], Clear),
    row(1029, &[156], Clear),
    row(1030, &[115], Clear),
    row(1049, &[164], Clear),
    row(1050, &[123], Clear),
    row(1069, &[172], Clear),
    row(1070, &[131], Clear),
    row(1089, &[180], Clear),
    row(1090, &[139], Clear),
    row(1110, &[156], Clear),
    row(1111, &[205], Clear),
    row(1130, &[164], Clear),
    row(1131, &[213], Clear),
    row(1150, &[172], Clear),
    row(1151, &[221], Clear),
    row(1170, &[180], Clear),
    row(1171, &[229], Clear),
    row(1190, &[188], Clear),
    row(1191, &[237], Clear),
    row(1211, &[254], Clear),
    row(1212, &[303], Clear),
    row(1221, &[1014], Clear),
    row(1231, &[262], Clear),
    row(1232, &[311], Clear),
    row(1251, &[270], Clear),
    row(1252, &[319], Clear),
    row(1271, &[278], Clear),
    row(1272, &[327], Clear),
    row(1291, &[286], Clear),
    row(1292, &[335], Clear),
    row(1312, &[352], Clear),
    row(1313, &[401], Clear),
    row(1331, &[1022], Clear),
    row(1332, &[360], Clear),
    row(1333, &[409], Clear),
    row(1352, &[368], Clear),
    row(1353, &[417], Clear),
    row(1372, &[376], Clear),
    row(1373, &[1425], Clear),
    row(1392, &[384], Clear),
    row(1393, &[433], Clear),
    row(1413, &[450], Clear),
    row(1414, &[499], Clear),
    row(1433, &[458], Clear),
    row(1434, &[507], Clear),
    row(1441, &[1030], Clear),
    row(1453, &[466], Clear),
    row(1454, &[515], Clear),
    row(1473, &[474], Clear),
    row(1474, &[523], Clear),
    row(1493, &[482], Clear),
    row(1494, &[531], Clear),
    row(1514, &[548], Clear),
    row(1515, &[567], Clear),
    row(1534, &[556], Clear),
    row(1535, &[605], Clear),
    row(1551, &[1038], Clear),
    row(1554, &[564], Clear),
    row(1555, &[613], Clear),
    row(1574, &[572], Clear),
    row(1575, &[621], Clear),
    row(1594, &[580], Clear),
    row(1595, &[629], Clear),
    row(1615, &[646], Clear),
    row(1616, &[695], Clear),
    row(1635, &[654], Clear),
    row(1636, &[703], Clear),
    row(1655, &[662], Clear),
    row(1656, &[711], Clear),
    row(1661, &[1046], Clear),
    row(1675, &[670], Clear),
    row(1676, &[719], Clear),
    row(1695, &[678], Clear),
    row(1696, &[727], Clear),
    row(1716, &[744], Clear),
    row(1717, &[793], Clear),
    row(1736, &[752], Clear),
    row(1737, &[801], Clear),
    row(1756, &[160], Doubtful),
    row(1771, &[1054], Clear),
    row(1776, &[768], Clear),
    row(1777, &[817], Clear),
    row(1796, &[776], Clear),
    row(1797, &[825], Clear),
    row(1877, &[842], Doubtful),
    row(1818, &[891], Clear),
    row(1837, &[850], Clear),
    row(1838, &[899], Clear),
    row(1854, &[907], Clear),
    row(1858, &[907], Clear),
    row(1877, &[866], Clear),
    row(1878, &[915], Clear),
    row(1881, &[1062], Clear),
    row(1897, &[874], Clear),
    row(1898, &[923], Clear),
    row(1918, &[940], Clear),
    row(1938, &[948], Clear),
    row(1958, &[956], Clear),
    row(1978, &[964], Clear),
    row(1991, &[1070], Clear),
    row(1998, &[972], Clear),
    row(2002, &[997], Clear),
    row(2101, &[1186], Clear),
    row(2112, &[1005], Clear),
    row(2211, &[1284], Clear),
    row(2222, &[1013], Clear),
    row(2332, &[1021], Clear),
    row(2431, &[1480], Clear),
    row(2442, &[1029], Clear),
    row(2541, &[578], Clear),
    row(2552, &[1037], Clear),
    row(2651, &[1676], Clear),
    row(2662, &[1045], Clear),
    row(2761, &[1774], Clear),
    row(2772, &[1053], Clear),
    row(2871, &[1872], Clear),
    row(2882, &[1061], Clear),
    row(2981, &[1970], Clear),
    row(2992, &[1069], Clear),
    row(3002, &[996], Clear),
    row(3102, &[1185], Clear),
    row(3113, &[1004], Clear),
    row(3212, &[1283], Clear),
    row(3223, &[1012], Clear),
    row(3322, &[1381], Clear),
    row(3333, &[1020], Clear),
    row(3432, &[1479], Clear),
    row(3443, &[1028], Clear),
    row(3542, &[1577], Clear),
    row(3553, &[1036], Clear),
    row(3652, &[1675], Clear),
    row(1663, &[1044], Doubtful),
    row(3762, &[1773], Clear),
    row(1773, &[1052], Doubtful),
    row(3872, &[1871], Clear),
    row(3883, &[1060], Clear),
    row(3982, &[1969], Clear),
    row(3993, &[1068], Clear),
    row(4004, &[1184], Clear),
    row(4103, &[1184], Clear),
    row(4114, &[1003], Clear),
    row(4213, &[1282], Clear),
    row(4224, &[1011], Clear),
    row(4323, &[1380], Clear),
    row(4334, &[1478], Clear),
    row(4444, &[1027], Clear),
    row(4543, &[1576], Clear),
    row(4554, &[1035], Clear),
    row(4654, &[1674], Clear),
    row(4664, &[1043], Clear),
    row(4763, &[1772], Clear),
    row(4774, &[1051], Clear),
    row(4873, &[1870], Clear),
    row(4884, &[1059], Clear),
    row(4983, &[1968], Clear),
    row(4994, &[1067], Clear),
    row(5005, &[994], Clear),
    row(5104, &[1183], Clear),
    row(5115, &[1002], Clear),
    row(5214, &[1281], Clear),
    row(5225, &[1010], Clear),
    row(5324, &[1379], Clear),
    row(5335, &[1018], Clear),
    row(5434, &[1477], Clear),
    row(5445, &[1026], Clear),
    row(5544, &[1575], Clear),
    row(5555, &[1034], Clear),
    row(5654, &[1673], Clear),
    row(5665, &[1042], Clear),
    row(5764, &[1771], Clear),
    row(5775, &[1050], Clear),
    row(5874, &[1869], Clear),
    row(5885, &[1058], Clear),
    row(5984, &[1967], Clear),
    row(5995, &[1066], Clear),
    row(6006, &[993], Clear),
    row(6105, &[1182], Clear),
    row(6215, &[1280], Clear),
    row(6226, &[1009], Clear),
    row(6325, &[1378], Clear),
    row(6336, &[1017], Clear),
    row(6435, &[1476], Clear),
    row(6446, &[1025], Clear),
    row(6545, &[1574], Clear),
    row(6556, &[1033], Clear),
    row(6666, &[1041], Clear),
    row(6765, &[1770], Clear),
    row(6875, &[1868], Clear),
    row(6886, &[1057], Clear),
    row(6985, &[1966], Clear),
    row(6996, &[1065], Clear),
    row(7007, &[92], Clear),
    row(7106, &[1181], Clear),
    row(7117, &[1000], Clear),
    row(7216, &[1279], Clear),
    row(7227, &[1008], Clear),
    row(7326, &[1377], Clear),
    row(7337, &[1016], Clear),
    row(7436, &[1475], Clear),
    row(7447, &[1024], Clear),
    row(7546, &[1573], Clear),
    row(7557, &[1032], Clear),
    row(7656, &[1671], Clear),
    row(7766, &[1769], Clear),
    row(7777, &[1048], Clear),
    row(7876, &[1867], Clear),
    row(7887, &[1056], Clear),
    row(7986, &[1965], Clear),
    row(7997, &[1064], Clear),
    row(8008, &[991], Clear),
    row(8107, &[1180], Clear),
    row(8118, &[999], Clear),
    row(8217, &[1278], Clear),
    row(8228, &[1007], Clear),
    row(8327, &[1376], Clear),
    row(8338, &[1015], Clear),
    row(8437, &[1474], Clear),
    row(8448, &[1023], Clear),
    row(8547, &[1572], Clear),
    row(8558, &[1031], Clear),
    row(8657, &[1670], Clear),
    row(8668, &[1039], Clear),
    row(8767, &[1768], Clear),
    row(8778, &[1047], Clear),
    row(8877, &[1866], Clear),
    row(8888, &[1055], Clear),
    row(8987, &[1964], Clear),
    row(8988, &[1063], Clear),
    row(9009, &[990], Clear),
    row(9108, &[1179], Clear),
    row(9119, &[998], Clear),
    row(9218, &[1277], Clear),
    row(9229, &[1006], Clear),
    row(9328, &[1375], Clear),
    row(9339, &[1014], Clear),
    row(9438, &[1473], Clear),
    row(9449, &[1022], Clear),
    row(9548, &[1571], Clear),
    row(9559, &[1030], Clear),
    row(9658, &[669], Clear),
    row(9669, &[1038], Clear),
    row(9768, &[1767], Clear),
    row(9779, &[1046], Clear),
    row(9878, &[1865], Clear),
    row(9889, &[1054], Clear),
    row(9988, &[1963], Clear),
    row(9999, &[1062], Clear),
];

/// Published multiplicative table: every extra term of each number below
/// 10000.
#[rustfmt::skip]
pub static MULTIPLICATIVE_TABLE: &[TableRow] = &[
    row(0, &[0], Clear),
    row(1, &[0], Clear),
    row(10, &[9], Clear),
    row(40, &[16], Clear),
    row(81, &[0], Clear),
    row(90, &[21], Clear),
    row(100, &[99], Clear),
    row(121, &[7], Clear),
    row(160, &[33], Clear),
    row(250, &[43], Clear),
    row(252, &[3, 12], Clear),
    row(360, &[51], Clear),
    row(400, &[196], Clear),
    row(403, &[6, 24], Clear),
    row(484, &[6], Clear),
    row(490, &[57], Clear),
    row(574, &[25], Clear),
    row(640, &[70], Clear),
    row(736, &[7, 16], Clear),
    row(765, &[33], Clear),
    row(810, &[81], Clear),
    row(900, &[291], Clear),
    row(976, &[39], Clear),
    row(1000, &[999], Clear),
    row(1008, &[15, 33], Clear),
    row(1089, &[15], Clear),
    row(1207, &[7, 61], Clear),
    row(1210, &[106], Clear),
    row(1300, &[21, 48], Clear),
    row(1458, &[0, 63], Clear),
    row(1462, &[21, 30], Clear),
    row(1600, &[393], Clear),
    row(1612, &[16, 52], Clear),
    row(1729, &[0, 63], Clear),
    row(1855, &[16, 34], Clear),
    row(1936, &[25], Clear),
    row(1944, &[9, 54], Clear),
    row(2268, &[18, 45], Clear),
    row(2296, &[9, 63], Clear),
    row(2430, &[36, 45], Clear),
    row(2500, &[493], Clear),
    row(2520, &[11, 201], Clear),
    row(2668, &[7, 70], Clear),
    row(2701, &[27, 63], Clear),
    row(2944, &[27, 45], Clear),
    row(3025, &[45], Clear),
    row(3154, &[25, 70], Clear),
    row(3478, &[25, 52], Clear),
    row(3600, &[591], Clear),
    row(3627, &[21, 75], Clear),
    row(3640, &[43, 52], Clear),
    row(4000, &[1996], Clear),
    row(4030, &[123, 303], Clear),
    row(4032, &[39, 75], Clear),
    row(4275, &[39, 57], Clear),
    row(4356, &[48], Clear),
    row(4606, &[23, 78], Clear),
    row(4840, &[204], Clear),
    row(4900, &[687], Clear),
    row(4930, &[42, 69], Clear),
    row(5092, &[51, 160], Clear),
    row(5605, &[43, 79], Clear),
    row(5740, &[124, 94], Clear),
    row(5848, &[43, 61], Clear),
    row(5929, &[52], Clear),
    row(6400, &[790], Clear),
    row(6624, &[51, 78], Clear),
    row(6786, &[51, 60], Clear),
    row(7360, &[214, 304], Clear),
    row(7650, &[132, 192], Clear),
    row(7663, &[57, 75], Clear),
    row(7744, &[66], Clear),
    row(8100, &[891], Clear),
    row(8722, &[70, 79], Clear),
    row(9000, &[2991], Clear),
    row(9760, &[138, 588], Clear),
    row(9801, &[81], Clear),
];
