// Generated per-codepoint NFKC compatibility mapping (Unicode 13.0.0).
// Each row maps one codepoint to its normalized UTF-8 replacement in the pool.

#include "addrparse/text.hpp"

#include <cstdint>

namespace addrparse::detail {

extern const NfkcRow kNfkcRows[4807];
extern const char kNfkcPool[13620];

const NfkcRow kNfkcRows[4807] = {
    {0xA0,0,1}, {0xA8,1,3}, {0xAA,4,1}, {0xAF,5,3},
    {0xB2,8,1}, {0xB3,9,1}, {0xB4,10,3}, {0xB5,13,2},
    {0xB8,15,3}, {0xB9,18,1}, {0xBA,19,1}, {0xBC,20,5},
    {0xBD,25,5}, {0xBE,30,5}, {0x132,35,2}, {0x133,37,2},
    {0x13F,39,3}, {0x140,42,3}, {0x149,45,3}, {0x17F,48,1},
    {0x1C4,49,3}, {0x1C5,52,3}, {0x1C6,55,3}, {0x1C7,58,2},
    {0x1C8,60,2}, {0x1C9,62,2}, {0x1CA,64,2}, {0x1CB,66,2},
    {0x1CC,68,2}, {0x1F1,70,2}, {0x1F2,72,2}, {0x1F3,74,2},
    {0x2B0,76,1}, {0x2B1,77,2}, {0x2B2,79,1}, {0x2B3,80,1},
    {0x2B4,81,2}, {0x2B5,83,2}, {0x2B6,85,2}, {0x2B7,87,1},
    {0x2B8,88,1}, {0x2D8,89,3}, {0x2D9,92,3}, {0x2DA,95,3},
    {0x2DB,98,3}, {0x2DC,101,3}, {0x2DD,104,3}, {0x2E0,107,2},
    {0x2E1,109,1}, {0x2E2,110,1}, {0x2E3,111,1}, {0x2E4,112,2},
    {0x340,114,2}, {0x341,116,2}, {0x343,118,2}, {0x344,120,4},
    {0x374,124,2}, {0x37A,126,3}, {0x37E,129,1}, {0x384,130,3},
    {0x385,133,5}, {0x387,138,2}, {0x3D0,140,2}, {0x3D1,142,2},
    {0x3D2,144,2}, {0x3D3,146,2}, {0x3D4,148,2}, {0x3D5,150,2},
    {0x3D6,152,2}, {0x3F0,154,2}, {0x3F1,156,2}, {0x3F2,158,2},
    {0x3F4,160,2}, {0x3F5,162,2}, {0x3F9,164,2}, {0x587,166,4},
    {0x675,170,4}, {0x676,174,4}, {0x677,178,4}, {0x678,182,4},
    {0x958,186,6}, {0x959,192,6}, {0x95A,198,6}, {0x95B,204,6},
    {0x95C,210,6}, {0x95D,216,6}, {0x95E,222,6}, {0x95F,228,6},
    {0x9DC,234,6}, {0x9DD,240,6}, {0x9DF,246,6}, {0xA33,252,6},
    {0xA36,258,6}, {0xA59,264,6}, {0xA5A,270,6}, {0xA5B,276,6},
    {0xA5E,282,6}, {0xB5C,288,6}, {0xB5D,294,6}, {0xE33,300,6},
    {0xEB3,306,6}, {0xEDC,312,6}, {0xEDD,318,6}, {0xF0C,324,3},
    {0xF43,327,6}, {0xF4D,333,6}, {0xF52,339,6}, {0xF57,345,6},
    {0xF5C,351,6}, {0xF69,357,6}, {0xF73,363,6}, {0xF75,369,6},
    {0xF76,375,6}, {0xF77,381,9}, {0xF78,390,6}, {0xF79,396,9},
    {0xF81,405,6}, {0xF93,411,6}, {0xF9D,417,6}, {0xFA2,423,6},
    {0xFA7,429,6}, {0xFAC,435,6}, {0xFB9,441,6}, {0x10FC,447,3},
    {0x1D2C,450,1}, {0x1D2D,451,2}, {0x1D2E,453,1}, {0x1D30,454,1},
    {0x1D31,455,1}, {0x1D32,456,2}, {0x1D33,458,1}, {0x1D34,459,1},
    {0x1D35,460,1}, {0x1D36,461,1}, {0x1D37,462,1}, {0x1D38,463,1},
    {0x1D39,464,1}, {0x1D3A,465,1}, {0x1D3C,466,1}, {0x1D3D,467,2},
    {0x1D3E,469,1}, {0x1D3F,470,1}, {0x1D40,471,1}, {0x1D41,472,1},
    {0x1D42,473,1}, {0x1D43,474,1}, {0x1D44,475,2}, {0x1D45,477,2},
    {0x1D46,479,3}, {0x1D47,482,1}, {0x1D48,483,1}, {0x1D49,484,1},
    {0x1D4A,485,2}, {0x1D4B,487,2}, {0x1D4C,489,2}, {0x1D4D,491,1},
    {0x1D4F,492,1}, {0x1D50,493,1}, {0x1D51,494,2}, {0x1D52,496,1},
    {0x1D53,497,2}, {0x1D54,499,3}, {0x1D55,502,3}, {0x1D56,505,1},
    {0x1D57,506,1}, {0x1D58,507,1}, {0x1D59,508,3}, {0x1D5A,511,2},
    {0x1D5B,513,1}, {0x1D5C,514,3}, {0x1D5D,517,2}, {0x1D5E,519,2},
    {0x1D5F,521,2}, {0x1D60,523,2}, {0x1D61,525,2}, {0x1D62,527,1},
    {0x1D63,528,1}, {0x1D64,529,1}, {0x1D65,530,1}, {0x1D66,531,2},
    {0x1D67,533,2}, {0x1D68,535,2}, {0x1D69,537,2}, {0x1D6A,539,2},
    {0x1D78,541,2}, {0x1D9B,543,2}, {0x1D9C,545,1}, {0x1D9D,546,2},
    {0x1D9E,548,2}, {0x1D9F,550,2}, {0x1DA0,552,1}, {0x1DA1,553,2},
    {0x1DA2,555,2}, {0x1DA3,557,2}, {0x1DA4,559,2}, {0x1DA5,561,2},
    {0x1DA6,563,2}, {0x1DA7,565,3}, {0x1DA8,568,2}, {0x1DA9,570,2},
    {0x1DAA,572,3}, {0x1DAB,575,2}, {0x1DAC,577,2}, {0x1DAD,579,2},
    {0x1DAE,581,2}, {0x1DAF,583,2}, {0x1DB0,585,2}, {0x1DB1,587,2},
    {0x1DB2,589,2}, {0x1DB3,591,2}, {0x1DB4,593,2}, {0x1DB5,595,2},
    {0x1DB6,597,2}, {0x1DB7,599,2}, {0x1DB8,601,3}, {0x1DB9,604,2},
    {0x1DBA,606,2}, {0x1DBB,608,1}, {0x1DBC,609,2}, {0x1DBD,611,2},
    {0x1DBE,613,2}, {0x1DBF,615,2}, {0x1E9A,617,3}, {0x1E9B,620,3},
    {0x1F71,623,2}, {0x1F73,625,2}, {0x1F75,627,2}, {0x1F77,629,2},
    {0x1F79,631,2}, {0x1F7B,633,2}, {0x1F7D,635,2}, {0x1FBB,637,2},
    {0x1FBD,639,3}, {0x1FBE,642,2}, {0x1FBF,644,3}, {0x1FC0,647,3},
    {0x1FC1,650,5}, {0x1FC9,655,2}, {0x1FCB,657,2}, {0x1FCD,659,5},
    {0x1FCE,664,5}, {0x1FCF,669,5}, {0x1FD3,674,2}, {0x1FDB,676,2},
    {0x1FDD,678,5}, {0x1FDE,683,5}, {0x1FDF,688,5}, {0x1FE3,693,2},
    {0x1FEB,695,2}, {0x1FED,697,5}, {0x1FEE,702,5}, {0x1FEF,707,1},
    {0x1FF9,708,2}, {0x1FFB,710,2}, {0x1FFD,712,3}, {0x1FFE,715,3},
    {0x2000,718,1}, {0x2001,719,1}, {0x2002,720,1}, {0x2003,721,1},
    {0x2004,722,1}, {0x2005,723,1}, {0x2006,724,1}, {0x2007,725,1},
    {0x2008,726,1}, {0x2009,727,1}, {0x200A,728,1}, {0x2011,729,3},
    {0x2017,732,3}, {0x2024,735,1}, {0x2025,736,2}, {0x2026,738,3},
    {0x202F,741,1}, {0x2033,742,6}, {0x2034,748,9}, {0x2036,757,6},
    {0x2037,763,9}, {0x203C,772,2}, {0x203E,774,3}, {0x2047,777,2},
    {0x2048,779,2}, {0x2049,781,2}, {0x2057,783,12}, {0x205F,795,1},
    {0x2070,796,1}, {0x2071,797,1}, {0x2074,798,1}, {0x2075,799,1},
    {0x2076,800,1}, {0x2077,801,1}, {0x2078,802,1}, {0x2079,803,1},
    {0x207A,804,1}, {0x207B,805,3}, {0x207C,808,1}, {0x207D,809,1},
    {0x207E,810,1}, {0x207F,811,1}, {0x2080,812,1}, {0x2081,813,1},
    {0x2082,814,1}, {0x2083,815,1}, {0x2084,816,1}, {0x2085,817,1},
    {0x2086,818,1}, {0x2087,819,1}, {0x2088,820,1}, {0x2089,821,1},
    {0x208A,822,1}, {0x208B,823,3}, {0x208C,826,1}, {0x208D,827,1},
    {0x208E,828,1}, {0x2090,829,1}, {0x2091,830,1}, {0x2092,831,1},
    {0x2093,832,1}, {0x2094,833,2}, {0x2095,835,1}, {0x2096,836,1},
    {0x2097,837,1}, {0x2098,838,1}, {0x2099,839,1}, {0x209A,840,1},
    {0x209B,841,1}, {0x209C,842,1}, {0x20A8,843,2}, {0x2100,845,3},
    {0x2101,848,3}, {0x2102,851,1}, {0x2103,852,3}, {0x2105,855,3},
    {0x2106,858,3}, {0x2107,861,2}, {0x2109,863,3}, {0x210A,866,1},
    {0x210B,867,1}, {0x210C,868,1}, {0x210D,869,1}, {0x210E,870,1},
    {0x210F,871,2}, {0x2110,873,1}, {0x2111,874,1}, {0x2112,875,1},
    {0x2113,876,1}, {0x2115,877,1}, {0x2116,878,2}, {0x2119,880,1},
    {0x211A,881,1}, {0x211B,882,1}, {0x211C,883,1}, {0x211D,884,1},
    {0x2120,885,2}, {0x2121,887,3}, {0x2122,890,2}, {0x2124,892,1},
    {0x2126,893,2}, {0x2128,895,1}, {0x212A,896,1}, {0x212B,897,2},
    {0x212C,899,1}, {0x212D,900,1}, {0x212F,901,1}, {0x2130,902,1},
    {0x2131,903,1}, {0x2133,904,1}, {0x2134,905,1}, {0x2135,906,2},
    {0x2136,908,2}, {0x2137,910,2}, {0x2138,912,2}, {0x2139,914,1},
    {0x213B,915,3}, {0x213C,918,2}, {0x213D,920,2}, {0x213E,922,2},
    {0x213F,924,2}, {0x2140,926,3}, {0x2145,929,1}, {0x2146,930,1},
    {0x2147,931,1}, {0x2148,932,1}, {0x2149,933,1}, {0x2150,934,5},
    {0x2151,939,5}, {0x2152,944,6}, {0x2153,950,5}, {0x2154,955,5},
    {0x2155,960,5}, {0x2156,965,5}, {0x2157,970,5}, {0x2158,975,5},
    {0x2159,980,5}, {0x215A,985,5}, {0x215B,990,5}, {0x215C,995,5},
    {0x215D,1000,5}, {0x215E,1005,5}, {0x215F,1010,4}, {0x2160,1014,1},
    {0x2161,1015,2}, {0x2162,1017,3}, {0x2163,1020,2}, {0x2164,1022,1},
    {0x2165,1023,2}, {0x2166,1025,3}, {0x2167,1028,4}, {0x2168,1032,2},
    {0x2169,1034,1}, {0x216A,1035,2}, {0x216B,1037,3}, {0x216C,1040,1},
    {0x216D,1041,1}, {0x216E,1042,1}, {0x216F,1043,1}, {0x2170,1044,1},
    {0x2171,1045,2}, {0x2172,1047,3}, {0x2173,1050,2}, {0x2174,1052,1},
    {0x2175,1053,2}, {0x2176,1055,3}, {0x2177,1058,4}, {0x2178,1062,2},
    {0x2179,1064,1}, {0x217A,1065,2}, {0x217B,1067,3}, {0x217C,1070,1},
    {0x217D,1071,1}, {0x217E,1072,1}, {0x217F,1073,1}, {0x2189,1074,5},
    {0x222C,1079,6}, {0x222D,1085,9}, {0x222F,1094,6}, {0x2230,1100,9},
    {0x2329,1109,3}, {0x232A,1112,3}, {0x2460,1115,1}, {0x2461,1116,1},
    {0x2462,1117,1}, {0x2463,1118,1}, {0x2464,1119,1}, {0x2465,1120,1},
    {0x2466,1121,1}, {0x2467,1122,1}, {0x2468,1123,1}, {0x2469,1124,2},
    {0x246A,1126,2}, {0x246B,1128,2}, {0x246C,1130,2}, {0x246D,1132,2},
    {0x246E,1134,2}, {0x246F,1136,2}, {0x2470,1138,2}, {0x2471,1140,2},
    {0x2472,1142,2}, {0x2473,1144,2}, {0x2474,1146,3}, {0x2475,1149,3},
    {0x2476,1152,3}, {0x2477,1155,3}, {0x2478,1158,3}, {0x2479,1161,3},
    {0x247A,1164,3}, {0x247B,1167,3}, {0x247C,1170,3}, {0x247D,1173,4},
    {0x247E,1177,4}, {0x247F,1181,4}, {0x2480,1185,4}, {0x2481,1189,4},
    {0x2482,1193,4}, {0x2483,1197,4}, {0x2484,1201,4}, {0x2485,1205,4},
    {0x2486,1209,4}, {0x2487,1213,4}, {0x2488,1217,2}, {0x2489,1219,2},
    {0x248A,1221,2}, {0x248B,1223,2}, {0x248C,1225,2}, {0x248D,1227,2},
    {0x248E,1229,2}, {0x248F,1231,2}, {0x2490,1233,2}, {0x2491,1235,3},
    {0x2492,1238,3}, {0x2493,1241,3}, {0x2494,1244,3}, {0x2495,1247,3},
    {0x2496,1250,3}, {0x2497,1253,3}, {0x2498,1256,3}, {0x2499,1259,3},
    {0x249A,1262,3}, {0x249B,1265,3}, {0x249C,1268,3}, {0x249D,1271,3},
    {0x249E,1274,3}, {0x249F,1277,3}, {0x24A0,1280,3}, {0x24A1,1283,3},
    {0x24A2,1286,3}, {0x24A3,1289,3}, {0x24A4,1292,3}, {0x24A5,1295,3},
    {0x24A6,1298,3}, {0x24A7,1301,3}, {0x24A8,1304,3}, {0x24A9,1307,3},
    {0x24AA,1310,3}, {0x24AB,1313,3}, {0x24AC,1316,3}, {0x24AD,1319,3},
    {0x24AE,1322,3}, {0x24AF,1325,3}, {0x24B0,1328,3}, {0x24B1,1331,3},
    {0x24B2,1334,3}, {0x24B3,1337,3}, {0x24B4,1340,3}, {0x24B5,1343,3},
    {0x24B6,1346,1}, {0x24B7,1347,1}, {0x24B8,1348,1}, {0x24B9,1349,1},
    {0x24BA,1350,1}, {0x24BB,1351,1}, {0x24BC,1352,1}, {0x24BD,1353,1},
    {0x24BE,1354,1}, {0x24BF,1355,1}, {0x24C0,1356,1}, {0x24C1,1357,1},
    {0x24C2,1358,1}, {0x24C3,1359,1}, {0x24C4,1360,1}, {0x24C5,1361,1},
    {0x24C6,1362,1}, {0x24C7,1363,1}, {0x24C8,1364,1}, {0x24C9,1365,1},
    {0x24CA,1366,1}, {0x24CB,1367,1}, {0x24CC,1368,1}, {0x24CD,1369,1},
    {0x24CE,1370,1}, {0x24CF,1371,1}, {0x24D0,1372,1}, {0x24D1,1373,1},
    {0x24D2,1374,1}, {0x24D3,1375,1}, {0x24D4,1376,1}, {0x24D5,1377,1},
    {0x24D6,1378,1}, {0x24D7,1379,1}, {0x24D8,1380,1}, {0x24D9,1381,1},
    {0x24DA,1382,1}, {0x24DB,1383,1}, {0x24DC,1384,1}, {0x24DD,1385,1},
    {0x24DE,1386,1}, {0x24DF,1387,1}, {0x24E0,1388,1}, {0x24E1,1389,1},
    {0x24E2,1390,1}, {0x24E3,1391,1}, {0x24E4,1392,1}, {0x24E5,1393,1},
    {0x24E6,1394,1}, {0x24E7,1395,1}, {0x24E8,1396,1}, {0x24E9,1397,1},
    {0x24EA,1398,1}, {0x2A0C,1399,12}, {0x2A74,1411,3}, {0x2A75,1414,2},
    {0x2A76,1416,3}, {0x2ADC,1419,5}, {0x2C7C,1424,1}, {0x2C7D,1425,1},
    {0x2D6F,1426,3}, {0x2E9F,1429,3}, {0x2EF3,1432,3}, {0x2F00,1435,3},
    {0x2F01,1438,3}, {0x2F02,1441,3}, {0x2F03,1444,3}, {0x2F04,1447,3},
    {0x2F05,1450,3}, {0x2F06,1453,3}, {0x2F07,1456,3}, {0x2F08,1459,3},
    {0x2F09,1462,3}, {0x2F0A,1465,3}, {0x2F0B,1468,3}, {0x2F0C,1471,3},
    {0x2F0D,1474,3}, {0x2F0E,1477,3}, {0x2F0F,1480,3}, {0x2F10,1483,3},
    {0x2F11,1486,3}, {0x2F12,1489,3}, {0x2F13,1492,3}, {0x2F14,1495,3},
    {0x2F15,1498,3}, {0x2F16,1501,3}, {0x2F17,1504,3}, {0x2F18,1507,3},
    {0x2F19,1510,3}, {0x2F1A,1513,3}, {0x2F1B,1516,3}, {0x2F1C,1519,3},
    {0x2F1D,1522,3}, {0x2F1E,1525,3}, {0x2F1F,1528,3}, {0x2F20,1531,3},
    {0x2F21,1534,3}, {0x2F22,1537,3}, {0x2F23,1540,3}, {0x2F24,1543,3},
    {0x2F25,1546,3}, {0x2F26,1549,3}, {0x2F27,1552,3}, {0x2F28,1555,3},
    {0x2F29,1558,3}, {0x2F2A,1561,3}, {0x2F2B,1564,3}, {0x2F2C,1567,3},
    {0x2F2D,1570,3}, {0x2F2E,1573,3}, {0x2F2F,1576,3}, {0x2F30,1579,3},
    {0x2F31,1582,3}, {0x2F32,1585,3}, {0x2F33,1588,3}, {0x2F34,1591,3},
    {0x2F35,1594,3}, {0x2F36,1597,3}, {0x2F37,1600,3}, {0x2F38,1603,3},
    {0x2F39,1606,3}, {0x2F3A,1609,3}, {0x2F3B,1612,3}, {0x2F3C,1615,3},
    {0x2F3D,1618,3}, {0x2F3E,1621,3}, {0x2F3F,1624,3}, {0x2F40,1627,3},
    {0x2F41,1630,3}, {0x2F42,1633,3}, {0x2F43,1636,3}, {0x2F44,1639,3},
    {0x2F45,1642,3}, {0x2F46,1645,3}, {0x2F47,1648,3}, {0x2F48,1651,3},
    {0x2F49,1654,3}, {0x2F4A,1657,3}, {0x2F4B,1660,3}, {0x2F4C,1663,3},
    {0x2F4D,1666,3}, {0x2F4E,1669,3}, {0x2F4F,1672,3}, {0x2F50,1675,3},
    {0x2F51,1678,3}, {0x2F52,1681,3}, {0x2F53,1684,3}, {0x2F54,1687,3},
    {0x2F55,1690,3}, {0x2F56,1693,3}, {0x2F57,1696,3}, {0x2F58,1699,3},
    {0x2F59,1702,3}, {0x2F5A,1705,3}, {0x2F5B,1708,3}, {0x2F5C,1711,3},
    {0x2F5D,1714,3}, {0x2F5E,1717,3}, {0x2F5F,1720,3}, {0x2F60,1723,3},
    {0x2F61,1726,3}, {0x2F62,1729,3}, {0x2F63,1732,3}, {0x2F64,1735,3},
    {0x2F65,1738,3}, {0x2F66,1741,3}, {0x2F67,1744,3}, {0x2F68,1747,3},
    {0x2F69,1750,3}, {0x2F6A,1753,3}, {0x2F6B,1756,3}, {0x2F6C,1759,3},
    {0x2F6D,1762,3}, {0x2F6E,1765,3}, {0x2F6F,1768,3}, {0x2F70,1771,3},
    {0x2F71,1774,3}, {0x2F72,1777,3}, {0x2F73,1780,3}, {0x2F74,1783,3},
    {0x2F75,1786,3}, {0x2F76,1789,3}, {0x2F77,1792,3}, {0x2F78,1795,3},
    {0x2F79,1798,3}, {0x2F7A,1801,3}, {0x2F7B,1804,3}, {0x2F7C,1807,3},
    {0x2F7D,1810,3}, {0x2F7E,1813,3}, {0x2F7F,1816,3}, {0x2F80,1819,3},
    {0x2F81,1822,3}, {0x2F82,1825,3}, {0x2F83,1828,3}, {0x2F84,1831,3},
    {0x2F85,1834,3}, {0x2F86,1837,3}, {0x2F87,1840,3}, {0x2F88,1843,3},
    {0x2F89,1846,3}, {0x2F8A,1849,3}, {0x2F8B,1852,3}, {0x2F8C,1855,3},
    {0x2F8D,1858,3}, {0x2F8E,1861,3}, {0x2F8F,1864,3}, {0x2F90,1867,3},
    {0x2F91,1870,3}, {0x2F92,1873,3}, {0x2F93,1876,3}, {0x2F94,1879,3},
    {0x2F95,1882,3}, {0x2F96,1885,3}, {0x2F97,1888,3}, {0x2F98,1891,3},
    {0x2F99,1894,3}, {0x2F9A,1897,3}, {0x2F9B,1900,3}, {0x2F9C,1903,3},
    {0x2F9D,1906,3}, {0x2F9E,1909,3}, {0x2F9F,1912,3}, {0x2FA0,1915,3},
    {0x2FA1,1918,3}, {0x2FA2,1921,3}, {0x2FA3,1924,3}, {0x2FA4,1927,3},
    {0x2FA5,1930,3}, {0x2FA6,1933,3}, {0x2FA7,1936,3}, {0x2FA8,1939,3},
    {0x2FA9,1942,3}, {0x2FAA,1945,3}, {0x2FAB,1948,3}, {0x2FAC,1951,3},
    {0x2FAD,1954,3}, {0x2FAE,1957,3}, {0x2FAF,1960,3}, {0x2FB0,1963,3},
    {0x2FB1,1966,3}, {0x2FB2,1969,3}, {0x2FB3,1972,3}, {0x2FB4,1975,3},
    {0x2FB5,1978,3}, {0x2FB6,1981,3}, {0x2FB7,1984,3}, {0x2FB8,1987,3},
    {0x2FB9,1990,3}, {0x2FBA,1993,3}, {0x2FBB,1996,3}, {0x2FBC,1999,3},
    {0x2FBD,2002,3}, {0x2FBE,2005,3}, {0x2FBF,2008,3}, {0x2FC0,2011,3},
    {0x2FC1,2014,3}, {0x2FC2,2017,3}, {0x2FC3,2020,3}, {0x2FC4,2023,3},
    {0x2FC5,2026,3}, {0x2FC6,2029,3}, {0x2FC7,2032,3}, {0x2FC8,2035,3},
    {0x2FC9,2038,3}, {0x2FCA,2041,3}, {0x2FCB,2044,3}, {0x2FCC,2047,3},
    {0x2FCD,2050,3}, {0x2FCE,2053,3}, {0x2FCF,2056,3}, {0x2FD0,2059,3},
    {0x2FD1,2062,3}, {0x2FD2,2065,3}, {0x2FD3,2068,3}, {0x2FD4,2071,3},
    {0x2FD5,2074,3}, {0x3000,2077,1}, {0x3036,2078,3}, {0x3038,2081,3},
    {0x3039,2084,3}, {0x303A,2087,3}, {0x309B,2090,4}, {0x309C,2094,4},
    {0x309F,2098,6}, {0x30FF,2104,6}, {0x3131,2110,3}, {0x3132,2113,3},
    {0x3133,2116,3}, {0x3134,2119,3}, {0x3135,2122,3}, {0x3136,2125,3},
    {0x3137,2128,3}, {0x3138,2131,3}, {0x3139,2134,3}, {0x313A,2137,3},
    {0x313B,2140,3}, {0x313C,2143,3}, {0x313D,2146,3}, {0x313E,2149,3},
    {0x313F,2152,3}, {0x3140,2155,3}, {0x3141,2158,3}, {0x3142,2161,3},
    {0x3143,2164,3}, {0x3144,2167,3}, {0x3145,2170,3}, {0x3146,2173,3},
    {0x3147,2176,3}, {0x3148,2179,3}, {0x3149,2182,3}, {0x314A,2185,3},
    {0x314B,2188,3}, {0x314C,2191,3}, {0x314D,2194,3}, {0x314E,2197,3},
    {0x314F,2200,3}, {0x3150,2203,3}, {0x3151,2206,3}, {0x3152,2209,3},
    {0x3153,2212,3}, {0x3154,2215,3}, {0x3155,2218,3}, {0x3156,2221,3},
    {0x3157,2224,3}, {0x3158,2227,3}, {0x3159,2230,3}, {0x315A,2233,3},
    {0x315B,2236,3}, {0x315C,2239,3}, {0x315D,2242,3}, {0x315E,2245,3},
    {0x315F,2248,3}, {0x3160,2251,3}, {0x3161,2254,3}, {0x3162,2257,3},
    {0x3163,2260,3}, {0x3164,2263,3}, {0x3165,2266,3}, {0x3166,2269,3},
    {0x3167,2272,3}, {0x3168,2275,3}, {0x3169,2278,3}, {0x316A,2281,3},
    {0x316B,2284,3}, {0x316C,2287,3}, {0x316D,2290,3}, {0x316E,2293,3},
    {0x316F,2296,3}, {0x3170,2299,3}, {0x3171,2302,3}, {0x3172,2305,3},
    {0x3173,2308,3}, {0x3174,2311,3}, {0x3175,2314,3}, {0x3176,2317,3},
    {0x3177,2320,3}, {0x3178,2323,3}, {0x3179,2326,3}, {0x317A,2329,3},
    {0x317B,2332,3}, {0x317C,2335,3}, {0x317D,2338,3}, {0x317E,2341,3},
    {0x317F,2344,3}, {0x3180,2347,3}, {0x3181,2350,3}, {0x3182,2353,3},
    {0x3183,2356,3}, {0x3184,2359,3}, {0x3185,2362,3}, {0x3186,2365,3},
    {0x3187,2368,3}, {0x3188,2371,3}, {0x3189,2374,3}, {0x318A,2377,3},
    {0x318B,2380,3}, {0x318C,2383,3}, {0x318D,2386,3}, {0x318E,2389,3},
    {0x3192,2392,3}, {0x3193,2395,3}, {0x3194,2398,3}, {0x3195,2401,3},
    {0x3196,2404,3}, {0x3197,2407,3}, {0x3198,2410,3}, {0x3199,2413,3},
    {0x319A,2416,3}, {0x319B,2419,3}, {0x319C,2422,3}, {0x319D,2425,3},
    {0x319E,2428,3}, {0x319F,2431,3}, {0x3200,2434,5}, {0x3201,2439,5},
    {0x3202,2444,5}, {0x3203,2449,5}, {0x3204,2454,5}, {0x3205,2459,5},
    {0x3206,2464,5}, {0x3207,2469,5}, {0x3208,2474,5}, {0x3209,2479,5},
    {0x320A,2484,5}, {0x320B,2489,5}, {0x320C,2494,5}, {0x320D,2499,5},
    {0x320E,2504,5}, {0x320F,2509,5}, {0x3210,2514,5}, {0x3211,2519,5},
    {0x3212,2524,5}, {0x3213,2529,5}, {0x3214,2534,5}, {0x3215,2539,5},
    {0x3216,2544,5}, {0x3217,2549,5}, {0x3218,2554,5}, {0x3219,2559,5},
    {0x321A,2564,5}, {0x321B,2569,5}, {0x321C,2574,5}, {0x321D,2579,8},
    {0x321E,2587,8}, {0x3220,2595,5}, {0x3221,2600,5}, {0x3222,2605,5},
    {0x3223,2610,5}, {0x3224,2615,5}, {0x3225,2620,5}, {0x3226,2625,5},
    {0x3227,2630,5}, {0x3228,2635,5}, {0x3229,2640,5}, {0x322A,2645,5},
    {0x322B,2650,5}, {0x322C,2655,5}, {0x322D,2660,5}, {0x322E,2665,5},
    {0x322F,2670,5}, {0x3230,2675,5}, {0x3231,2680,5}, {0x3232,2685,5},
    {0x3233,2690,5}, {0x3234,2695,5}, {0x3235,2700,5}, {0x3236,2705,5},
    {0x3237,2710,5}, {0x3238,2715,5}, {0x3239,2720,5}, {0x323A,2725,5},
    {0x323B,2730,5}, {0x323C,2735,5}, {0x323D,2740,5}, {0x323E,2745,5},
    {0x323F,2750,5}, {0x3240,2755,5}, {0x3241,2760,5}, {0x3242,2765,5},
    {0x3243,2770,5}, {0x3244,2775,3}, {0x3245,2778,3}, {0x3246,2781,3},
    {0x3247,2784,3}, {0x3250,2787,3}, {0x3251,2790,2}, {0x3252,2792,2},
    {0x3253,2794,2}, {0x3254,2796,2}, {0x3255,2798,2}, {0x3256,2800,2},
    {0x3257,2802,2}, {0x3258,2804,2}, {0x3259,2806,2}, {0x325A,2808,2},
    {0x325B,2810,2}, {0x325C,2812,2}, {0x325D,2814,2}, {0x325E,2816,2},
    {0x325F,2818,2}, {0x3260,2820,3}, {0x3261,2823,3}, {0x3262,2826,3},
    {0x3263,2829,3}, {0x3264,2832,3}, {0x3265,2835,3}, {0x3266,2838,3},
    {0x3267,2841,3}, {0x3268,2844,3}, {0x3269,2847,3}, {0x326A,2850,3},
    {0x326B,2853,3}, {0x326C,2856,3}, {0x326D,2859,3}, {0x326E,2862,3},
    {0x326F,2865,3}, {0x3270,2868,3}, {0x3271,2871,3}, {0x3272,2874,3},
    {0x3273,2877,3}, {0x3274,2880,3}, {0x3275,2883,3}, {0x3276,2886,3},
    {0x3277,2889,3}, {0x3278,2892,3}, {0x3279,2895,3}, {0x327A,2898,3},
    {0x327B,2901,3}, {0x327C,2904,6}, {0x327D,2910,6}, {0x327E,2916,3},
    {0x3280,2919,3}, {0x3281,2922,3}, {0x3282,2925,3}, {0x3283,2928,3},
    {0x3284,2931,3}, {0x3285,2934,3}, {0x3286,2937,3}, {0x3287,2940,3},
    {0x3288,2943,3}, {0x3289,2946,3}, {0x328A,2949,3}, {0x328B,2952,3},
    {0x328C,2955,3}, {0x328D,2958,3}, {0x328E,2961,3}, {0x328F,2964,3},
    {0x3290,2967,3}, {0x3291,2970,3}, {0x3292,2973,3}, {0x3293,2976,3},
    {0x3294,2979,3}, {0x3295,2982,3}, {0x3296,2985,3}, {0x3297,2988,3},
    {0x3298,2991,3}, {0x3299,2994,3}, {0x329A,2997,3}, {0x329B,3000,3},
    {0x329C,3003,3}, {0x329D,3006,3}, {0x329E,3009,3}, {0x329F,3012,3},
    {0x32A0,3015,3}, {0x32A1,3018,3}, {0x32A2,3021,3}, {0x32A3,3024,3},
    {0x32A4,3027,3}, {0x32A5,3030,3}, {0x32A6,3033,3}, {0x32A7,3036,3},
    {0x32A8,3039,3}, {0x32A9,3042,3}, {0x32AA,3045,3}, {0x32AB,3048,3},
    {0x32AC,3051,3}, {0x32AD,3054,3}, {0x32AE,3057,3}, {0x32AF,3060,3},
    {0x32B0,3063,3}, {0x32B1,3066,2}, {0x32B2,3068,2}, {0x32B3,3070,2},
    {0x32B4,3072,2}, {0x32B5,3074,2}, {0x32B6,3076,2}, {0x32B7,3078,2},
    {0x32B8,3080,2}, {0x32B9,3082,2}, {0x32BA,3084,2}, {0x32BB,3086,2},
    {0x32BC,3088,2}, {0x32BD,3090,2}, {0x32BE,3092,2}, {0x32BF,3094,2},
    {0x32C0,3096,4}, {0x32C1,3100,4}, {0x32C2,3104,4}, {0x32C3,3108,4},
    {0x32C4,3112,4}, {0x32C5,3116,4}, {0x32C6,3120,4}, {0x32C7,3124,4},
    {0x32C8,3128,4}, {0x32C9,3132,5}, {0x32CA,3137,5}, {0x32CB,3142,5},
    {0x32CC,3147,2}, {0x32CD,3149,3}, {0x32CE,3152,2}, {0x32CF,3154,3},
    {0x32D0,3157,3}, {0x32D1,3160,3}, {0x32D2,3163,3}, {0x32D3,3166,3},
    {0x32D4,3169,3}, {0x32D5,3172,3}, {0x32D6,3175,3}, {0x32D7,3178,3},
    {0x32D8,3181,3}, {0x32D9,3184,3}, {0x32DA,3187,3}, {0x32DB,3190,3},
    {0x32DC,3193,3}, {0x32DD,3196,3}, {0x32DE,3199,3}, {0x32DF,3202,3},
    {0x32E0,3205,3}, {0x32E1,3208,3}, {0x32E2,3211,3}, {0x32E3,3214,3},
    {0x32E4,3217,3}, {0x32E5,3220,3}, {0x32E6,3223,3}, {0x32E7,3226,3},
    {0x32E8,3229,3}, {0x32E9,3232,3}, {0x32EA,3235,3}, {0x32EB,3238,3},
    {0x32EC,3241,3}, {0x32ED,3244,3}, {0x32EE,3247,3}, {0x32EF,3250,3},
    {0x32F0,3253,3}, {0x32F1,3256,3}, {0x32F2,3259,3}, {0x32F3,3262,3},
    {0x32F4,3265,3}, {0x32F5,3268,3}, {0x32F6,3271,3}, {0x32F7,3274,3},
    {0x32F8,3277,3}, {0x32F9,3280,3}, {0x32FA,3283,3}, {0x32FB,3286,3},
    {0x32FC,3289,3}, {0x32FD,3292,3}, {0x32FE,3295,3}, {0x32FF,3298,6},
    {0x3300,3304,12}, {0x3301,3316,12}, {0x3302,3328,12}, {0x3303,3340,9},
    {0x3304,3349,12}, {0x3305,3361,9}, {0x3306,3370,9}, {0x3307,3379,15},
    {0x3308,3394,12}, {0x3309,3406,9}, {0x330A,3415,9}, {0x330B,3424,9},
    {0x330C,3433,12}, {0x330D,3445,12}, {0x330E,3457,9}, {0x330F,3466,9},
    {0x3310,3475,6}, {0x3311,3481,9}, {0x3312,3490,12}, {0x3313,3502,12},
    {0x3314,3514,6}, {0x3315,3520,15}, {0x3316,3535,18}, {0x3317,3553,15},
    {0x3318,3568,9}, {0x3319,3577,15}, {0x331A,3592,15}, {0x331B,3607,12},
    {0x331C,3619,9}, {0x331D,3628,9}, {0x331E,3637,9}, {0x331F,3646,12},
    {0x3320,3658,15}, {0x3321,3673,12}, {0x3322,3685,9}, {0x3323,3694,9},
    {0x3324,3703,9}, {0x3325,3712,6}, {0x3326,3718,6}, {0x3327,3724,6},
    {0x3328,3730,6}, {0x3329,3736,9}, {0x332A,3745,9}, {0x332B,3754,15},
    {0x332C,3769,9}, {0x332D,3778,12}, {0x332E,3790,15}, {0x332F,3805,9},
    {0x3330,3814,6}, {0x3331,3820,6}, {0x3332,3826,15}, {0x3333,3841,12},
    {0x3334,3853,15}, {0x3335,3868,9}, {0x3336,3877,15}, {0x3337,3892,6},
    {0x3338,3898,9}, {0x3339,3907,9}, {0x333A,3916,9}, {0x333B,3925,9},
    {0x333C,3934,9}, {0x333D,3943,12}, {0x333E,3955,9}, {0x333F,3964,6},
    {0x3340,3970,9}, {0x3341,3979,9}, {0x3342,3988,9}, {0x3343,3997,12},
    {0x3344,4009,9}, {0x3345,4018,9}, {0x3346,4027,9}, {0x3347,4036,15},
    {0x3348,4051,12}, {0x3349,4063,6}, {0x334A,4069,15}, {0x334B,4084,6},
    {0x334C,4090,12}, {0x334D,4102,12}, {0x334E,4114,9}, {0x334F,4123,9},
    {0x3350,4132,9}, {0x3351,4141,12}, {0x3352,4153,6}, {0x3353,4159,9},
    {0x3354,4168,12}, {0x3355,4180,6}, {0x3356,4186,15}, {0x3357,4201,9},
    {0x3358,4210,4}, {0x3359,4214,4}, {0x335A,4218,4}, {0x335B,4222,4},
    {0x335C,4226,4}, {0x335D,4230,4}, {0x335E,4234,4}, {0x335F,4238,4},
    {0x3360,4242,4}, {0x3361,4246,4}, {0x3362,4250,5}, {0x3363,4255,5},
    {0x3364,4260,5}, {0x3365,4265,5}, {0x3366,4270,5}, {0x3367,4275,5},
    {0x3368,4280,5}, {0x3369,4285,5}, {0x336A,4290,5}, {0x336B,4295,5},
    {0x336C,4300,5}, {0x336D,4305,5}, {0x336E,4310,5}, {0x336F,4315,5},
    {0x3370,4320,5}, {0x3371,4325,3}, {0x3372,4328,2}, {0x3373,4330,2},
    {0x3374,4332,3}, {0x3375,4335,2}, {0x3376,4337,2}, {0x3377,4339,2},
    {0x3378,4341,3}, {0x3379,4344,3}, {0x337A,4347,2}, {0x337B,4349,6},
    {0x337C,4355,6}, {0x337D,4361,6}, {0x337E,4367,6}, {0x337F,4373,12},
    {0x3380,4385,2}, {0x3381,4387,2}, {0x3382,4389,3}, {0x3383,4392,2},
    {0x3384,4394,2}, {0x3385,4396,2}, {0x3386,4398,2}, {0x3387,4400,2},
    {0x3388,4402,3}, {0x3389,4405,4}, {0x338A,4409,2}, {0x338B,4411,2},
    {0x338C,4413,3}, {0x338D,4416,3}, {0x338E,4419,2}, {0x338F,4421,2},
    {0x3390,4423,2}, {0x3391,4425,3}, {0x3392,4428,3}, {0x3393,4431,3},
    {0x3394,4434,3}, {0x3395,4437,3}, {0x3396,4440,2}, {0x3397,4442,2},
    {0x3398,4444,2}, {0x3399,4446,2}, {0x339A,4448,2}, {0x339B,4450,3},
    {0x339C,4453,2}, {0x339D,4455,2}, {0x339E,4457,2}, {0x339F,4459,3},
    {0x33A0,4462,3}, {0x33A1,4465,2}, {0x33A2,4467,3}, {0x33A3,4470,3},
    {0x33A4,4473,3}, {0x33A5,4476,2}, {0x33A6,4478,3}, {0x33A7,4481,5},
    {0x33A8,4486,6}, {0x33A9,4492,2}, {0x33AA,4494,3}, {0x33AB,4497,3},
    {0x33AC,4500,3}, {0x33AD,4503,3}, {0x33AE,4506,7}, {0x33AF,4513,8},
    {0x33B0,4521,2}, {0x33B1,4523,2}, {0x33B2,4525,3}, {0x33B3,4528,2},
    {0x33B4,4530,2}, {0x33B5,4532,2}, {0x33B6,4534,3}, {0x33B7,4537,2},
    {0x33B8,4539,2}, {0x33B9,4541,2}, {0x33BA,4543,2}, {0x33BB,4545,2},
    {0x33BC,4547,3}, {0x33BD,4550,2}, {0x33BE,4552,2}, {0x33BF,4554,2},
    {0x33C0,4556,3}, {0x33C1,4559,3}, {0x33C2,4562,4}, {0x33C3,4566,2},
    {0x33C4,4568,2}, {0x33C5,4570,2}, {0x33C6,4572,6}, {0x33C7,4578,3},
    {0x33C8,4581,2}, {0x33C9,4583,2}, {0x33CA,4585,2}, {0x33CB,4587,2},
    {0x33CC,4589,2}, {0x33CD,4591,2}, {0x33CE,4593,2}, {0x33CF,4595,2},
    {0x33D0,4597,2}, {0x33D1,4599,2}, {0x33D2,4601,3}, {0x33D3,4604,2},
    {0x33D4,4606,2}, {0x33D5,4608,3}, {0x33D6,4611,3}, {0x33D7,4614,2},
    {0x33D8,4616,4}, {0x33D9,4620,3}, {0x33DA,4623,2}, {0x33DB,4625,2},
    {0x33DC,4627,2}, {0x33DD,4629,2}, {0x33DE,4631,5}, {0x33DF,4636,5},
    {0x33E0,4641,4}, {0x33E1,4645,4}, {0x33E2,4649,4}, {0x33E3,4653,4},
    {0x33E4,4657,4}, {0x33E5,4661,4}, {0x33E6,4665,4}, {0x33E7,4669,4},
    {0x33E8,4673,4}, {0x33E9,4677,5}, {0x33EA,4682,5}, {0x33EB,4687,5},
    {0x33EC,4692,5}, {0x33ED,4697,5}, {0x33EE,4702,5}, {0x33EF,4707,5},
    {0x33F0,4712,5}, {0x33F1,4717,5}, {0x33F2,4722,5}, {0x33F3,4727,5},
    {0x33F4,4732,5}, {0x33F5,4737,5}, {0x33F6,4742,5}, {0x33F7,4747,5},
    {0x33F8,4752,5}, {0x33F9,4757,5}, {0x33FA,4762,5}, {0x33FB,4767,5},
    {0x33FC,4772,5}, {0x33FD,4777,5}, {0x33FE,4782,5}, {0x33FF,4787,3},
    {0xA69C,4790,2}, {0xA69D,4792,2}, {0xA770,4794,3}, {0xA7F8,4797,2},
    {0xA7F9,4799,2}, {0xAB5C,4801,3}, {0xAB5D,4804,3}, {0xAB5E,4807,2},
    {0xAB5F,4809,3}, {0xAB69,4812,2}, {0xF900,4814,3}, {0xF901,4817,3},
    {0xF902,4820,3}, {0xF903,4823,3}, {0xF904,4826,3}, {0xF905,4829,3},
    {0xF906,4832,3}, {0xF907,4835,3}, {0xF908,4838,3}, {0xF909,4841,3},
    {0xF90A,4844,3}, {0xF90B,4847,3}, {0xF90C,4850,3}, {0xF90D,4853,3},
    {0xF90E,4856,3}, {0xF90F,4859,3}, {0xF910,4862,3}, {0xF911,4865,3},
    {0xF912,4868,3}, {0xF913,4871,3}, {0xF914,4874,3}, {0xF915,4877,3},
    {0xF916,4880,3}, {0xF917,4883,3}, {0xF918,4886,3}, {0xF919,4889,3},
    {0xF91A,4892,3}, {0xF91B,4895,3}, {0xF91C,4898,3}, {0xF91D,4901,3},
    {0xF91E,4904,3}, {0xF91F,4907,3}, {0xF920,4910,3}, {0xF921,4913,3},
    {0xF922,4916,3}, {0xF923,4919,3}, {0xF924,4922,3}, {0xF925,4925,3},
    {0xF926,4928,3}, {0xF927,4931,3}, {0xF928,4934,3}, {0xF929,4937,3},
    {0xF92A,4940,3}, {0xF92B,4943,3}, {0xF92C,4946,3}, {0xF92D,4949,3},
    {0xF92E,4952,3}, {0xF92F,4955,3}, {0xF930,4958,3}, {0xF931,4961,3},
    {0xF932,4964,3}, {0xF933,4967,3}, {0xF934,4970,3}, {0xF935,4973,3},
    {0xF936,4976,3}, {0xF937,4979,3}, {0xF938,4982,3}, {0xF939,4985,3},
    {0xF93A,4988,3}, {0xF93B,4991,3}, {0xF93C,4994,3}, {0xF93D,4997,3},
    {0xF93E,5000,3}, {0xF93F,5003,3}, {0xF940,5006,3}, {0xF941,5009,3},
    {0xF942,5012,3}, {0xF943,5015,3}, {0xF944,5018,3}, {0xF945,5021,3},
    {0xF946,5024,3}, {0xF947,5027,3}, {0xF948,5030,3}, {0xF949,5033,3},
    {0xF94A,5036,3}, {0xF94B,5039,3}, {0xF94C,5042,3}, {0xF94D,5045,3},
    {0xF94E,5048,3}, {0xF94F,5051,3}, {0xF950,5054,3}, {0xF951,5057,3},
    {0xF952,5060,3}, {0xF953,5063,3}, {0xF954,5066,3}, {0xF955,5069,3},
    {0xF956,5072,3}, {0xF957,5075,3}, {0xF958,5078,3}, {0xF959,5081,3},
    {0xF95A,5084,3}, {0xF95B,5087,3}, {0xF95C,5090,3}, {0xF95D,5093,3},
    {0xF95E,5096,3}, {0xF95F,5099,3}, {0xF960,5102,3}, {0xF961,5105,3},
    {0xF962,5108,3}, {0xF963,5111,3}, {0xF964,5114,3}, {0xF965,5117,3},
    {0xF966,5120,3}, {0xF967,5123,3}, {0xF968,5126,3}, {0xF969,5129,3},
    {0xF96A,5132,3}, {0xF96B,5135,3}, {0xF96C,5138,3}, {0xF96D,5141,3},
    {0xF96E,5144,3}, {0xF96F,5147,3}, {0xF970,5150,3}, {0xF971,5153,3},
    {0xF972,5156,3}, {0xF973,5159,3}, {0xF974,5162,3}, {0xF975,5165,3},
    {0xF976,5168,3}, {0xF977,5171,3}, {0xF978,5174,3}, {0xF979,5177,3},
    {0xF97A,5180,3}, {0xF97B,5183,3}, {0xF97C,5186,3}, {0xF97D,5189,3},
    {0xF97E,5192,3}, {0xF97F,5195,3}, {0xF980,5198,3}, {0xF981,5201,3},
    {0xF982,5204,3}, {0xF983,5207,3}, {0xF984,5210,3}, {0xF985,5213,3},
    {0xF986,5216,3}, {0xF987,5219,3}, {0xF988,5222,3}, {0xF989,5225,3},
    {0xF98A,5228,3}, {0xF98B,5231,3}, {0xF98C,5234,3}, {0xF98D,5237,3},
    {0xF98E,5240,3}, {0xF98F,5243,3}, {0xF990,5246,3}, {0xF991,5249,3},
    {0xF992,5252,3}, {0xF993,5255,3}, {0xF994,5258,3}, {0xF995,5261,3},
    {0xF996,5264,3}, {0xF997,5267,3}, {0xF998,5270,3}, {0xF999,5273,3},
    {0xF99A,5276,3}, {0xF99B,5279,3}, {0xF99C,5282,3}, {0xF99D,5285,3},
    {0xF99E,5288,3}, {0xF99F,5291,3}, {0xF9A0,5294,3}, {0xF9A1,5297,3},
    {0xF9A2,5300,3}, {0xF9A3,5303,3}, {0xF9A4,5306,3}, {0xF9A5,5309,3},
    {0xF9A6,5312,3}, {0xF9A7,5315,3}, {0xF9A8,5318,3}, {0xF9A9,5321,3},
    {0xF9AA,5324,3}, {0xF9AB,5327,3}, {0xF9AC,5330,3}, {0xF9AD,5333,3},
    {0xF9AE,5336,3}, {0xF9AF,5339,3}, {0xF9B0,5342,3}, {0xF9B1,5345,3},
    {0xF9B2,5348,3}, {0xF9B3,5351,3}, {0xF9B4,5354,3}, {0xF9B5,5357,3},
    {0xF9B6,5360,3}, {0xF9B7,5363,3}, {0xF9B8,5366,3}, {0xF9B9,5369,3},
    {0xF9BA,5372,3}, {0xF9BB,5375,3}, {0xF9BC,5378,3}, {0xF9BD,5381,3},
    {0xF9BE,5384,3}, {0xF9BF,5387,3}, {0xF9C0,5390,3}, {0xF9C1,5393,3},
    {0xF9C2,5396,3}, {0xF9C3,5399,3}, {0xF9C4,5402,3}, {0xF9C5,5405,3},
    {0xF9C6,5408,3}, {0xF9C7,5411,3}, {0xF9C8,5414,3}, {0xF9C9,5417,3},
    {0xF9CA,5420,3}, {0xF9CB,5423,3}, {0xF9CC,5426,3}, {0xF9CD,5429,3},
    {0xF9CE,5432,3}, {0xF9CF,5435,3}, {0xF9D0,5438,3}, {0xF9D1,5441,3},
    {0xF9D2,5444,3}, {0xF9D3,5447,3}, {0xF9D4,5450,3}, {0xF9D5,5453,3},
    {0xF9D6,5456,3}, {0xF9D7,5459,3}, {0xF9D8,5462,3}, {0xF9D9,5465,3},
    {0xF9DA,5468,3}, {0xF9DB,5471,3}, {0xF9DC,5474,3}, {0xF9DD,5477,3},
    {0xF9DE,5480,3}, {0xF9DF,5483,3}, {0xF9E0,5486,3}, {0xF9E1,5489,3},
    {0xF9E2,5492,3}, {0xF9E3,5495,3}, {0xF9E4,5498,3}, {0xF9E5,5501,3},
    {0xF9E6,5504,3}, {0xF9E7,5507,3}, {0xF9E8,5510,3}, {0xF9E9,5513,3},
    {0xF9EA,5516,3}, {0xF9EB,5519,3}, {0xF9EC,5522,3}, {0xF9ED,5525,3},
    {0xF9EE,5528,3}, {0xF9EF,5531,3}, {0xF9F0,5534,3}, {0xF9F1,5537,3},
    {0xF9F2,5540,3}, {0xF9F3,5543,3}, {0xF9F4,5546,3}, {0xF9F5,5549,3},
    {0xF9F6,5552,3}, {0xF9F7,5555,3}, {0xF9F8,5558,3}, {0xF9F9,5561,3},
    {0xF9FA,5564,3}, {0xF9FB,5567,3}, {0xF9FC,5570,3}, {0xF9FD,5573,3},
    {0xF9FE,5576,3}, {0xF9FF,5579,3}, {0xFA00,5582,3}, {0xFA01,5585,3},
    {0xFA02,5588,3}, {0xFA03,5591,3}, {0xFA04,5594,3}, {0xFA05,5597,3},
    {0xFA06,5600,3}, {0xFA07,5603,3}, {0xFA08,5606,3}, {0xFA09,5609,3},
    {0xFA0A,5612,3}, {0xFA0B,5615,3}, {0xFA0C,5618,3}, {0xFA0D,5621,3},
    {0xFA10,5624,3}, {0xFA12,5627,3}, {0xFA15,5630,3}, {0xFA16,5633,3},
    {0xFA17,5636,3}, {0xFA18,5639,3}, {0xFA19,5642,3}, {0xFA1A,5645,3},
    {0xFA1B,5648,3}, {0xFA1C,5651,3}, {0xFA1D,5654,3}, {0xFA1E,5657,3},
    {0xFA20,5660,3}, {0xFA22,5663,3}, {0xFA25,5666,3}, {0xFA26,5669,3},
    {0xFA2A,5672,3}, {0xFA2B,5675,3}, {0xFA2C,5678,3}, {0xFA2D,5681,3},
    {0xFA2E,5684,3}, {0xFA2F,5687,3}, {0xFA30,5690,3}, {0xFA31,5693,3},
    {0xFA32,5696,3}, {0xFA33,5699,3}, {0xFA34,5702,3}, {0xFA35,5705,3},
    {0xFA36,5708,3}, {0xFA37,5711,3}, {0xFA38,5714,3}, {0xFA39,5717,3},
    {0xFA3A,5720,3}, {0xFA3B,5723,3}, {0xFA3C,5726,3}, {0xFA3D,5729,3},
    {0xFA3E,5732,3}, {0xFA3F,5735,3}, {0xFA40,5738,3}, {0xFA41,5741,3},
    {0xFA42,5744,3}, {0xFA43,5747,3}, {0xFA44,5750,3}, {0xFA45,5753,3},
    {0xFA46,5756,3}, {0xFA47,5759,3}, {0xFA48,5762,3}, {0xFA49,5765,3},
    {0xFA4A,5768,3}, {0xFA4B,5771,3}, {0xFA4C,5774,3}, {0xFA4D,5777,3},
    {0xFA4E,5780,3}, {0xFA4F,5783,3}, {0xFA50,5786,3}, {0xFA51,5789,3},
    {0xFA52,5792,3}, {0xFA53,5795,3}, {0xFA54,5798,3}, {0xFA55,5801,3},
    {0xFA56,5804,3}, {0xFA57,5807,3}, {0xFA58,5810,3}, {0xFA59,5813,3},
    {0xFA5A,5816,3}, {0xFA5B,5819,3}, {0xFA5C,5822,3}, {0xFA5D,5825,3},
    {0xFA5E,5828,3}, {0xFA5F,5831,3}, {0xFA60,5834,3}, {0xFA61,5837,3},
    {0xFA62,5840,3}, {0xFA63,5843,3}, {0xFA64,5846,3}, {0xFA65,5849,3},
    {0xFA66,5852,3}, {0xFA67,5855,3}, {0xFA68,5858,3}, {0xFA69,5861,3},
    {0xFA6A,5864,3}, {0xFA6B,5867,3}, {0xFA6C,5870,4}, {0xFA6D,5874,3},
    {0xFA70,5877,3}, {0xFA71,5880,3}, {0xFA72,5883,3}, {0xFA73,5886,3},
    {0xFA74,5889,3}, {0xFA75,5892,3}, {0xFA76,5895,3}, {0xFA77,5898,3},
    {0xFA78,5901,3}, {0xFA79,5904,3}, {0xFA7A,5907,3}, {0xFA7B,5910,3},
    {0xFA7C,5913,3}, {0xFA7D,5916,3}, {0xFA7E,5919,3}, {0xFA7F,5922,3},
    {0xFA80,5925,3}, {0xFA81,5928,3}, {0xFA82,5931,3}, {0xFA83,5934,3},
    {0xFA84,5937,3}, {0xFA85,5940,3}, {0xFA86,5943,3}, {0xFA87,5946,3},
    {0xFA88,5949,3}, {0xFA89,5952,3}, {0xFA8A,5955,3}, {0xFA8B,5958,3},
    {0xFA8C,5961,3}, {0xFA8D,5964,3}, {0xFA8E,5967,3}, {0xFA8F,5970,3},
    {0xFA90,5973,3}, {0xFA91,5976,3}, {0xFA92,5979,3}, {0xFA93,5982,3},
    {0xFA94,5985,3}, {0xFA95,5988,3}, {0xFA96,5991,3}, {0xFA97,5994,3},
    {0xFA98,5997,3}, {0xFA99,6000,3}, {0xFA9A,6003,3}, {0xFA9B,6006,3},
    {0xFA9C,6009,3}, {0xFA9D,6012,3}, {0xFA9E,6015,3}, {0xFA9F,6018,3},
    {0xFAA0,6021,3}, {0xFAA1,6024,3}, {0xFAA2,6027,3}, {0xFAA3,6030,3},
    {0xFAA4,6033,3}, {0xFAA5,6036,3}, {0xFAA6,6039,3}, {0xFAA7,6042,3},
    {0xFAA8,6045,3}, {0xFAA9,6048,3}, {0xFAAA,6051,3}, {0xFAAB,6054,3},
    {0xFAAC,6057,3}, {0xFAAD,6060,3}, {0xFAAE,6063,3}, {0xFAAF,6066,3},
    {0xFAB0,6069,3}, {0xFAB1,6072,3}, {0xFAB2,6075,3}, {0xFAB3,6078,3},
    {0xFAB4,6081,3}, {0xFAB5,6084,3}, {0xFAB6,6087,3}, {0xFAB7,6090,3},
    {0xFAB8,6093,3}, {0xFAB9,6096,3}, {0xFABA,6099,3}, {0xFABB,6102,3},
    {0xFABC,6105,3}, {0xFABD,6108,3}, {0xFABE,6111,3}, {0xFABF,6114,3},
    {0xFAC0,6117,3}, {0xFAC1,6120,3}, {0xFAC2,6123,3}, {0xFAC3,6126,3},
    {0xFAC4,6129,3}, {0xFAC5,6132,3}, {0xFAC6,6135,3}, {0xFAC7,6138,3},
    {0xFAC8,6141,3}, {0xFAC9,6144,3}, {0xFACA,6147,3}, {0xFACB,6150,3},
    {0xFACC,6153,3}, {0xFACD,6156,3}, {0xFACE,6159,3}, {0xFACF,6162,4},
    {0xFAD0,6166,4}, {0xFAD1,6170,4}, {0xFAD2,6174,3}, {0xFAD3,6177,3},
    {0xFAD4,6180,3}, {0xFAD5,6183,4}, {0xFAD6,6187,4}, {0xFAD7,6191,4},
    {0xFAD8,6195,3}, {0xFAD9,6198,3}, {0xFB00,6201,2}, {0xFB01,6203,2},
    {0xFB02,6205,2}, {0xFB03,6207,3}, {0xFB04,6210,3}, {0xFB05,6213,2},
    {0xFB06,6215,2}, {0xFB13,6217,4}, {0xFB14,6221,4}, {0xFB15,6225,4},
    {0xFB16,6229,4}, {0xFB17,6233,4}, {0xFB1D,6237,4}, {0xFB1F,6241,4},
    {0xFB20,6245,2}, {0xFB21,6247,2}, {0xFB22,6249,2}, {0xFB23,6251,2},
    {0xFB24,6253,2}, {0xFB25,6255,2}, {0xFB26,6257,2}, {0xFB27,6259,2},
    {0xFB28,6261,2}, {0xFB29,6263,1}, {0xFB2A,6264,4}, {0xFB2B,6268,4},
    {0xFB2C,6272,6}, {0xFB2D,6278,6}, {0xFB2E,6284,4}, {0xFB2F,6288,4},
    {0xFB30,6292,4}, {0xFB31,6296,4}, {0xFB32,6300,4}, {0xFB33,6304,4},
    {0xFB34,6308,4}, {0xFB35,6312,4}, {0xFB36,6316,4}, {0xFB38,6320,4},
    {0xFB39,6324,4}, {0xFB3A,6328,4}, {0xFB3B,6332,4}, {0xFB3C,6336,4},
    {0xFB3E,6340,4}, {0xFB40,6344,4}, {0xFB41,6348,4}, {0xFB43,6352,4},
    {0xFB44,6356,4}, {0xFB46,6360,4}, {0xFB47,6364,4}, {0xFB48,6368,4},
    {0xFB49,6372,4}, {0xFB4A,6376,4}, {0xFB4B,6380,4}, {0xFB4C,6384,4},
    {0xFB4D,6388,4}, {0xFB4E,6392,4}, {0xFB4F,6396,4}, {0xFB50,6400,2},
    {0xFB51,6402,2}, {0xFB52,6404,2}, {0xFB53,6406,2}, {0xFB54,6408,2},
    {0xFB55,6410,2}, {0xFB56,6412,2}, {0xFB57,6414,2}, {0xFB58,6416,2},
    {0xFB59,6418,2}, {0xFB5A,6420,2}, {0xFB5B,6422,2}, {0xFB5C,6424,2},
    {0xFB5D,6426,2}, {0xFB5E,6428,2}, {0xFB5F,6430,2}, {0xFB60,6432,2},
    {0xFB61,6434,2}, {0xFB62,6436,2}, {0xFB63,6438,2}, {0xFB64,6440,2},
    {0xFB65,6442,2}, {0xFB66,6444,2}, {0xFB67,6446,2}, {0xFB68,6448,2},
    {0xFB69,6450,2}, {0xFB6A,6452,2}, {0xFB6B,6454,2}, {0xFB6C,6456,2},
    {0xFB6D,6458,2}, {0xFB6E,6460,2}, {0xFB6F,6462,2}, {0xFB70,6464,2},
    {0xFB71,6466,2}, {0xFB72,6468,2}, {0xFB73,6470,2}, {0xFB74,6472,2},
    {0xFB75,6474,2}, {0xFB76,6476,2}, {0xFB77,6478,2}, {0xFB78,6480,2},
    {0xFB79,6482,2}, {0xFB7A,6484,2}, {0xFB7B,6486,2}, {0xFB7C,6488,2},
    {0xFB7D,6490,2}, {0xFB7E,6492,2}, {0xFB7F,6494,2}, {0xFB80,6496,2},
    {0xFB81,6498,2}, {0xFB82,6500,2}, {0xFB83,6502,2}, {0xFB84,6504,2},
    {0xFB85,6506,2}, {0xFB86,6508,2}, {0xFB87,6510,2}, {0xFB88,6512,2},
    {0xFB89,6514,2}, {0xFB8A,6516,2}, {0xFB8B,6518,2}, {0xFB8C,6520,2},
    {0xFB8D,6522,2}, {0xFB8E,6524,2}, {0xFB8F,6526,2}, {0xFB90,6528,2},
    {0xFB91,6530,2}, {0xFB92,6532,2}, {0xFB93,6534,2}, {0xFB94,6536,2},
    {0xFB95,6538,2}, {0xFB96,6540,2}, {0xFB97,6542,2}, {0xFB98,6544,2},
    {0xFB99,6546,2}, {0xFB9A,6548,2}, {0xFB9B,6550,2}, {0xFB9C,6552,2},
    {0xFB9D,6554,2}, {0xFB9E,6556,2}, {0xFB9F,6558,2}, {0xFBA0,6560,2},
    {0xFBA1,6562,2}, {0xFBA2,6564,2}, {0xFBA3,6566,2}, {0xFBA4,6568,2},
    {0xFBA5,6570,2}, {0xFBA6,6572,2}, {0xFBA7,6574,2}, {0xFBA8,6576,2},
    {0xFBA9,6578,2}, {0xFBAA,6580,2}, {0xFBAB,6582,2}, {0xFBAC,6584,2},
    {0xFBAD,6586,2}, {0xFBAE,6588,2}, {0xFBAF,6590,2}, {0xFBB0,6592,2},
    {0xFBB1,6594,2}, {0xFBD3,6596,2}, {0xFBD4,6598,2}, {0xFBD5,6600,2},
    {0xFBD6,6602,2}, {0xFBD7,6604,2}, {0xFBD8,6606,2}, {0xFBD9,6608,2},
    {0xFBDA,6610,2}, {0xFBDB,6612,2}, {0xFBDC,6614,2}, {0xFBDD,6616,4},
    {0xFBDE,6620,2}, {0xFBDF,6622,2}, {0xFBE0,6624,2}, {0xFBE1,6626,2},
    {0xFBE2,6628,2}, {0xFBE3,6630,2}, {0xFBE4,6632,2}, {0xFBE5,6634,2},
    {0xFBE6,6636,2}, {0xFBE7,6638,2}, {0xFBE8,6640,2}, {0xFBE9,6642,2},
    {0xFBEA,6644,4}, {0xFBEB,6648,4}, {0xFBEC,6652,4}, {0xFBED,6656,4},
    {0xFBEE,6660,4}, {0xFBEF,6664,4}, {0xFBF0,6668,4}, {0xFBF1,6672,4},
    {0xFBF2,6676,4}, {0xFBF3,6680,4}, {0xFBF4,6684,4}, {0xFBF5,6688,4},
    {0xFBF6,6692,4}, {0xFBF7,6696,4}, {0xFBF8,6700,4}, {0xFBF9,6704,4},
    {0xFBFA,6708,4}, {0xFBFB,6712,4}, {0xFBFC,6716,2}, {0xFBFD,6718,2},
    {0xFBFE,6720,2}, {0xFBFF,6722,2}, {0xFC00,6724,4}, {0xFC01,6728,4},
    {0xFC02,6732,4}, {0xFC03,6736,4}, {0xFC04,6740,4}, {0xFC05,6744,4},
    {0xFC06,6748,4}, {0xFC07,6752,4}, {0xFC08,6756,4}, {0xFC09,6760,4},
    {0xFC0A,6764,4}, {0xFC0B,6768,4}, {0xFC0C,6772,4}, {0xFC0D,6776,4},
    {0xFC0E,6780,4}, {0xFC0F,6784,4}, {0xFC10,6788,4}, {0xFC11,6792,4},
    {0xFC12,6796,4}, {0xFC13,6800,4}, {0xFC14,6804,4}, {0xFC15,6808,4},
    {0xFC16,6812,4}, {0xFC17,6816,4}, {0xFC18,6820,4}, {0xFC19,6824,4},
    {0xFC1A,6828,4}, {0xFC1B,6832,4}, {0xFC1C,6836,4}, {0xFC1D,6840,4},
    {0xFC1E,6844,4}, {0xFC1F,6848,4}, {0xFC20,6852,4}, {0xFC21,6856,4},
    {0xFC22,6860,4}, {0xFC23,6864,4}, {0xFC24,6868,4}, {0xFC25,6872,4},
    {0xFC26,6876,4}, {0xFC27,6880,4}, {0xFC28,6884,4}, {0xFC29,6888,4},
    {0xFC2A,6892,4}, {0xFC2B,6896,4}, {0xFC2C,6900,4}, {0xFC2D,6904,4},
    {0xFC2E,6908,4}, {0xFC2F,6912,4}, {0xFC30,6916,4}, {0xFC31,6920,4},
    {0xFC32,6924,4}, {0xFC33,6928,4}, {0xFC34,6932,4}, {0xFC35,6936,4},
    {0xFC36,6940,4}, {0xFC37,6944,4}, {0xFC38,6948,4}, {0xFC39,6952,4},
    {0xFC3A,6956,4}, {0xFC3B,6960,4}, {0xFC3C,6964,4}, {0xFC3D,6968,4},
    {0xFC3E,6972,4}, {0xFC3F,6976,4}, {0xFC40,6980,4}, {0xFC41,6984,4},
    {0xFC42,6988,4}, {0xFC43,6992,4}, {0xFC44,6996,4}, {0xFC45,7000,4},
    {0xFC46,7004,4}, {0xFC47,7008,4}, {0xFC48,7012,4}, {0xFC49,7016,4},
    {0xFC4A,7020,4}, {0xFC4B,7024,4}, {0xFC4C,7028,4}, {0xFC4D,7032,4},
    {0xFC4E,7036,4}, {0xFC4F,7040,4}, {0xFC50,7044,4}, {0xFC51,7048,4},
    {0xFC52,7052,4}, {0xFC53,7056,4}, {0xFC54,7060,4}, {0xFC55,7064,4},
    {0xFC56,7068,4}, {0xFC57,7072,4}, {0xFC58,7076,4}, {0xFC59,7080,4},
    {0xFC5A,7084,4}, {0xFC5B,7088,4}, {0xFC5C,7092,4}, {0xFC5D,7096,4},
    {0xFC5E,7100,5}, {0xFC5F,7105,5}, {0xFC60,7110,5}, {0xFC61,7115,5},
    {0xFC62,7120,5}, {0xFC63,7125,5}, {0xFC64,7130,4}, {0xFC65,7134,4},
    {0xFC66,7138,4}, {0xFC67,7142,4}, {0xFC68,7146,4}, {0xFC69,7150,4},
    {0xFC6A,7154,4}, {0xFC6B,7158,4}, {0xFC6C,7162,4}, {0xFC6D,7166,4},
    {0xFC6E,7170,4}, {0xFC6F,7174,4}, {0xFC70,7178,4}, {0xFC71,7182,4},
    {0xFC72,7186,4}, {0xFC73,7190,4}, {0xFC74,7194,4}, {0xFC75,7198,4},
    {0xFC76,7202,4}, {0xFC77,7206,4}, {0xFC78,7210,4}, {0xFC79,7214,4},
    {0xFC7A,7218,4}, {0xFC7B,7222,4}, {0xFC7C,7226,4}, {0xFC7D,7230,4},
    {0xFC7E,7234,4}, {0xFC7F,7238,4}, {0xFC80,7242,4}, {0xFC81,7246,4},
    {0xFC82,7250,4}, {0xFC83,7254,4}, {0xFC84,7258,4}, {0xFC85,7262,4},
    {0xFC86,7266,4}, {0xFC87,7270,4}, {0xFC88,7274,4}, {0xFC89,7278,4},
    {0xFC8A,7282,4}, {0xFC8B,7286,4}, {0xFC8C,7290,4}, {0xFC8D,7294,4},
    {0xFC8E,7298,4}, {0xFC8F,7302,4}, {0xFC90,7306,4}, {0xFC91,7310,4},
    {0xFC92,7314,4}, {0xFC93,7318,4}, {0xFC94,7322,4}, {0xFC95,7326,4},
    {0xFC96,7330,4}, {0xFC97,7334,4}, {0xFC98,7338,4}, {0xFC99,7342,4},
    {0xFC9A,7346,4}, {0xFC9B,7350,4}, {0xFC9C,7354,4}, {0xFC9D,7358,4},
    {0xFC9E,7362,4}, {0xFC9F,7366,4}, {0xFCA0,7370,4}, {0xFCA1,7374,4},
    {0xFCA2,7378,4}, {0xFCA3,7382,4}, {0xFCA4,7386,4}, {0xFCA5,7390,4},
    {0xFCA6,7394,4}, {0xFCA7,7398,4}, {0xFCA8,7402,4}, {0xFCA9,7406,4},
    {0xFCAA,7410,4}, {0xFCAB,7414,4}, {0xFCAC,7418,4}, {0xFCAD,7422,4},
    {0xFCAE,7426,4}, {0xFCAF,7430,4}, {0xFCB0,7434,4}, {0xFCB1,7438,4},
    {0xFCB2,7442,4}, {0xFCB3,7446,4}, {0xFCB4,7450,4}, {0xFCB5,7454,4},
    {0xFCB6,7458,4}, {0xFCB7,7462,4}, {0xFCB8,7466,4}, {0xFCB9,7470,4},
    {0xFCBA,7474,4}, {0xFCBB,7478,4}, {0xFCBC,7482,4}, {0xFCBD,7486,4},
    {0xFCBE,7490,4}, {0xFCBF,7494,4}, {0xFCC0,7498,4}, {0xFCC1,7502,4},
    {0xFCC2,7506,4}, {0xFCC3,7510,4}, {0xFCC4,7514,4}, {0xFCC5,7518,4},
    {0xFCC6,7522,4}, {0xFCC7,7526,4}, {0xFCC8,7530,4}, {0xFCC9,7534,4},
    {0xFCCA,7538,4}, {0xFCCB,7542,4}, {0xFCCC,7546,4}, {0xFCCD,7550,4},
    {0xFCCE,7554,4}, {0xFCCF,7558,4}, {0xFCD0,7562,4}, {0xFCD1,7566,4},
    {0xFCD2,7570,4}, {0xFCD3,7574,4}, {0xFCD4,7578,4}, {0xFCD5,7582,4},
    {0xFCD6,7586,4}, {0xFCD7,7590,4}, {0xFCD8,7594,4}, {0xFCD9,7598,4},
    {0xFCDA,7602,4}, {0xFCDB,7606,4}, {0xFCDC,7610,4}, {0xFCDD,7614,4},
    {0xFCDE,7618,4}, {0xFCDF,7622,4}, {0xFCE0,7626,4}, {0xFCE1,7630,4},
    {0xFCE2,7634,4}, {0xFCE3,7638,4}, {0xFCE4,7642,4}, {0xFCE5,7646,4},
    {0xFCE6,7650,4}, {0xFCE7,7654,4}, {0xFCE8,7658,4}, {0xFCE9,7662,4},
    {0xFCEA,7666,4}, {0xFCEB,7670,4}, {0xFCEC,7674,4}, {0xFCED,7678,4},
    {0xFCEE,7682,4}, {0xFCEF,7686,4}, {0xFCF0,7690,4}, {0xFCF1,7694,4},
    {0xFCF2,7698,6}, {0xFCF3,7704,6}, {0xFCF4,7710,6}, {0xFCF5,7716,4},
    {0xFCF6,7720,4}, {0xFCF7,7724,4}, {0xFCF8,7728,4}, {0xFCF9,7732,4},
    {0xFCFA,7736,4}, {0xFCFB,7740,4}, {0xFCFC,7744,4}, {0xFCFD,7748,4},
    {0xFCFE,7752,4}, {0xFCFF,7756,4}, {0xFD00,7760,4}, {0xFD01,7764,4},
    {0xFD02,7768,4}, {0xFD03,7772,4}, {0xFD04,7776,4}, {0xFD05,7780,4},
    {0xFD06,7784,4}, {0xFD07,7788,4}, {0xFD08,7792,4}, {0xFD09,7796,4},
    {0xFD0A,7800,4}, {0xFD0B,7804,4}, {0xFD0C,7808,4}, {0xFD0D,7812,4},
    {0xFD0E,7816,4}, {0xFD0F,7820,4}, {0xFD10,7824,4}, {0xFD11,7828,4},
    {0xFD12,7832,4}, {0xFD13,7836,4}, {0xFD14,7840,4}, {0xFD15,7844,4},
    {0xFD16,7848,4}, {0xFD17,7852,4}, {0xFD18,7856,4}, {0xFD19,7860,4},
    {0xFD1A,7864,4}, {0xFD1B,7868,4}, {0xFD1C,7872,4}, {0xFD1D,7876,4},
    {0xFD1E,7880,4}, {0xFD1F,7884,4}, {0xFD20,7888,4}, {0xFD21,7892,4},
    {0xFD22,7896,4}, {0xFD23,7900,4}, {0xFD24,7904,4}, {0xFD25,7908,4},
    {0xFD26,7912,4}, {0xFD27,7916,4}, {0xFD28,7920,4}, {0xFD29,7924,4},
    {0xFD2A,7928,4}, {0xFD2B,7932,4}, {0xFD2C,7936,4}, {0xFD2D,7940,4},
    {0xFD2E,7944,4}, {0xFD2F,7948,4}, {0xFD30,7952,4}, {0xFD31,7956,4},
    {0xFD32,7960,4}, {0xFD33,7964,4}, {0xFD34,7968,4}, {0xFD35,7972,4},
    {0xFD36,7976,4}, {0xFD37,7980,4}, {0xFD38,7984,4}, {0xFD39,7988,4},
    {0xFD3A,7992,4}, {0xFD3B,7996,4}, {0xFD3C,8000,4}, {0xFD3D,8004,4},
    {0xFD50,8008,6}, {0xFD51,8014,6}, {0xFD52,8020,6}, {0xFD53,8026,6},
    {0xFD54,8032,6}, {0xFD55,8038,6}, {0xFD56,8044,6}, {0xFD57,8050,6},
    {0xFD58,8056,6}, {0xFD59,8062,6}, {0xFD5A,8068,6}, {0xFD5B,8074,6},
    {0xFD5C,8080,6}, {0xFD5D,8086,6}, {0xFD5E,8092,6}, {0xFD5F,8098,6},
    {0xFD60,8104,6}, {0xFD61,8110,6}, {0xFD62,8116,6}, {0xFD63,8122,6},
    {0xFD64,8128,6}, {0xFD65,8134,6}, {0xFD66,8140,6}, {0xFD67,8146,6},
    {0xFD68,8152,6}, {0xFD69,8158,6}, {0xFD6A,8164,6}, {0xFD6B,8170,6},
    {0xFD6C,8176,6}, {0xFD6D,8182,6}, {0xFD6E,8188,6}, {0xFD6F,8194,6},
    {0xFD70,8200,6}, {0xFD71,8206,6}, {0xFD72,8212,6}, {0xFD73,8218,6},
    {0xFD74,8224,6}, {0xFD75,8230,6}, {0xFD76,8236,6}, {0xFD77,8242,6},
    {0xFD78,8248,6}, {0xFD79,8254,6}, {0xFD7A,8260,6}, {0xFD7B,8266,6},
    {0xFD7C,8272,6}, {0xFD7D,8278,6}, {0xFD7E,8284,6}, {0xFD7F,8290,6},
    {0xFD80,8296,6}, {0xFD81,8302,6}, {0xFD82,8308,6}, {0xFD83,8314,6},
    {0xFD84,8320,6}, {0xFD85,8326,6}, {0xFD86,8332,6}, {0xFD87,8338,6},
    {0xFD88,8344,6}, {0xFD89,8350,6}, {0xFD8A,8356,6}, {0xFD8B,8362,6},
    {0xFD8C,8368,6}, {0xFD8D,8374,6}, {0xFD8E,8380,6}, {0xFD8F,8386,6},
    {0xFD92,8392,6}, {0xFD93,8398,6}, {0xFD94,8404,6}, {0xFD95,8410,6},
    {0xFD96,8416,6}, {0xFD97,8422,6}, {0xFD98,8428,6}, {0xFD99,8434,6},
    {0xFD9A,8440,6}, {0xFD9B,8446,6}, {0xFD9C,8452,6}, {0xFD9D,8458,6},
    {0xFD9E,8464,6}, {0xFD9F,8470,6}, {0xFDA0,8476,6}, {0xFDA1,8482,6},
    {0xFDA2,8488,6}, {0xFDA3,8494,6}, {0xFDA4,8500,6}, {0xFDA5,8506,6},
    {0xFDA6,8512,6}, {0xFDA7,8518,6}, {0xFDA8,8524,6}, {0xFDA9,8530,6},
    {0xFDAA,8536,6}, {0xFDAB,8542,6}, {0xFDAC,8548,6}, {0xFDAD,8554,6},
    {0xFDAE,8560,6}, {0xFDAF,8566,6}, {0xFDB0,8572,6}, {0xFDB1,8578,6},
    {0xFDB2,8584,6}, {0xFDB3,8590,6}, {0xFDB4,8596,6}, {0xFDB5,8602,6},
    {0xFDB6,8608,6}, {0xFDB7,8614,6}, {0xFDB8,8620,6}, {0xFDB9,8626,6},
    {0xFDBA,8632,6}, {0xFDBB,8638,6}, {0xFDBC,8644,6}, {0xFDBD,8650,6},
    {0xFDBE,8656,6}, {0xFDBF,8662,6}, {0xFDC0,8668,6}, {0xFDC1,8674,6},
    {0xFDC2,8680,6}, {0xFDC3,8686,6}, {0xFDC4,8692,6}, {0xFDC5,8698,6},
    {0xFDC6,8704,6}, {0xFDC7,8710,6}, {0xFDF0,8716,6}, {0xFDF1,8722,6},
    {0xFDF2,8728,8}, {0xFDF3,8736,8}, {0xFDF4,8744,8}, {0xFDF5,8752,8},
    {0xFDF6,8760,8}, {0xFDF7,8768,8}, {0xFDF8,8776,8}, {0xFDF9,8784,6},
    {0xFDFA,8790,33}, {0xFDFB,8823,15}, {0xFDFC,8838,8}, {0xFE10,8846,1},
    {0xFE11,8847,3}, {0xFE12,8850,3}, {0xFE13,8853,1}, {0xFE14,8854,1},
    {0xFE15,8855,1}, {0xFE16,8856,1}, {0xFE17,8857,3}, {0xFE18,8860,3},
    {0xFE19,8863,3}, {0xFE30,8866,2}, {0xFE31,8868,3}, {0xFE32,8871,3},
    {0xFE33,8874,1}, {0xFE34,8875,1}, {0xFE35,8876,1}, {0xFE36,8877,1},
    {0xFE37,8878,1}, {0xFE38,8879,1}, {0xFE39,8880,3}, {0xFE3A,8883,3},
    {0xFE3B,8886,3}, {0xFE3C,8889,3}, {0xFE3D,8892,3}, {0xFE3E,8895,3},
    {0xFE3F,8898,3}, {0xFE40,8901,3}, {0xFE41,8904,3}, {0xFE42,8907,3},
    {0xFE43,8910,3}, {0xFE44,8913,3}, {0xFE47,8916,1}, {0xFE48,8917,1},
    {0xFE49,8918,3}, {0xFE4A,8921,3}, {0xFE4B,8924,3}, {0xFE4C,8927,3},
    {0xFE4D,8930,1}, {0xFE4E,8931,1}, {0xFE4F,8932,1}, {0xFE50,8933,1},
    {0xFE51,8934,3}, {0xFE52,8937,1}, {0xFE54,8938,1}, {0xFE55,8939,1},
    {0xFE56,8940,1}, {0xFE57,8941,1}, {0xFE58,8942,3}, {0xFE59,8945,1},
    {0xFE5A,8946,1}, {0xFE5B,8947,1}, {0xFE5C,8948,1}, {0xFE5D,8949,3},
    {0xFE5E,8952,3}, {0xFE5F,8955,1}, {0xFE60,8956,1}, {0xFE61,8957,1},
    {0xFE62,8958,1}, {0xFE63,8959,1}, {0xFE64,8960,1}, {0xFE65,8961,1},
    {0xFE66,8962,1}, {0xFE68,8963,1}, {0xFE69,8964,1}, {0xFE6A,8965,1},
    {0xFE6B,8966,1}, {0xFE70,8967,3}, {0xFE71,8970,4}, {0xFE72,8974,3},
    {0xFE74,8977,3}, {0xFE76,8980,3}, {0xFE77,8983,4}, {0xFE78,8987,3},
    {0xFE79,8990,4}, {0xFE7A,8994,3}, {0xFE7B,8997,4}, {0xFE7C,9001,3},
    {0xFE7D,9004,4}, {0xFE7E,9008,3}, {0xFE7F,9011,4}, {0xFE80,9015,2},
    {0xFE81,9017,2}, {0xFE82,9019,2}, {0xFE83,9021,2}, {0xFE84,9023,2},
    {0xFE85,9025,2}, {0xFE86,9027,2}, {0xFE87,9029,2}, {0xFE88,9031,2},
    {0xFE89,9033,2}, {0xFE8A,9035,2}, {0xFE8B,9037,2}, {0xFE8C,9039,2},
    {0xFE8D,9041,2}, {0xFE8E,9043,2}, {0xFE8F,9045,2}, {0xFE90,9047,2},
    {0xFE91,9049,2}, {0xFE92,9051,2}, {0xFE93,9053,2}, {0xFE94,9055,2},
    {0xFE95,9057,2}, {0xFE96,9059,2}, {0xFE97,9061,2}, {0xFE98,9063,2},
    {0xFE99,9065,2}, {0xFE9A,9067,2}, {0xFE9B,9069,2}, {0xFE9C,9071,2},
    {0xFE9D,9073,2}, {0xFE9E,9075,2}, {0xFE9F,9077,2}, {0xFEA0,9079,2},
    {0xFEA1,9081,2}, {0xFEA2,9083,2}, {0xFEA3,9085,2}, {0xFEA4,9087,2},
    {0xFEA5,9089,2}, {0xFEA6,9091,2}, {0xFEA7,9093,2}, {0xFEA8,9095,2},
    {0xFEA9,9097,2}, {0xFEAA,9099,2}, {0xFEAB,9101,2}, {0xFEAC,9103,2},
    {0xFEAD,9105,2}, {0xFEAE,9107,2}, {0xFEAF,9109,2}, {0xFEB0,9111,2},
    {0xFEB1,9113,2}, {0xFEB2,9115,2}, {0xFEB3,9117,2}, {0xFEB4,9119,2},
    {0xFEB5,9121,2}, {0xFEB6,9123,2}, {0xFEB7,9125,2}, {0xFEB8,9127,2},
    {0xFEB9,9129,2}, {0xFEBA,9131,2}, {0xFEBB,9133,2}, {0xFEBC,9135,2},
    {0xFEBD,9137,2}, {0xFEBE,9139,2}, {0xFEBF,9141,2}, {0xFEC0,9143,2},
    {0xFEC1,9145,2}, {0xFEC2,9147,2}, {0xFEC3,9149,2}, {0xFEC4,9151,2},
    {0xFEC5,9153,2}, {0xFEC6,9155,2}, {0xFEC7,9157,2}, {0xFEC8,9159,2},
    {0xFEC9,9161,2}, {0xFECA,9163,2}, {0xFECB,9165,2}, {0xFECC,9167,2},
    {0xFECD,9169,2}, {0xFECE,9171,2}, {0xFECF,9173,2}, {0xFED0,9175,2},
    {0xFED1,9177,2}, {0xFED2,9179,2}, {0xFED3,9181,2}, {0xFED4,9183,2},
    {0xFED5,9185,2}, {0xFED6,9187,2}, {0xFED7,9189,2}, {0xFED8,9191,2},
    {0xFED9,9193,2}, {0xFEDA,9195,2}, {0xFEDB,9197,2}, {0xFEDC,9199,2},
    {0xFEDD,9201,2}, {0xFEDE,9203,2}, {0xFEDF,9205,2}, {0xFEE0,9207,2},
    {0xFEE1,9209,2}, {0xFEE2,9211,2}, {0xFEE3,9213,2}, {0xFEE4,9215,2},
    {0xFEE5,9217,2}, {0xFEE6,9219,2}, {0xFEE7,9221,2}, {0xFEE8,9223,2},
    {0xFEE9,9225,2}, {0xFEEA,9227,2}, {0xFEEB,9229,2}, {0xFEEC,9231,2},
    {0xFEED,9233,2}, {0xFEEE,9235,2}, {0xFEEF,9237,2}, {0xFEF0,9239,2},
    {0xFEF1,9241,2}, {0xFEF2,9243,2}, {0xFEF3,9245,2}, {0xFEF4,9247,2},
    {0xFEF5,9249,4}, {0xFEF6,9253,4}, {0xFEF7,9257,4}, {0xFEF8,9261,4},
    {0xFEF9,9265,4}, {0xFEFA,9269,4}, {0xFEFB,9273,4}, {0xFEFC,9277,4},
    {0xFF01,9281,1}, {0xFF02,9282,1}, {0xFF03,9283,1}, {0xFF04,9284,1},
    {0xFF05,9285,1}, {0xFF06,9286,1}, {0xFF07,9287,1}, {0xFF08,9288,1},
    {0xFF09,9289,1}, {0xFF0A,9290,1}, {0xFF0B,9291,1}, {0xFF0C,9292,1},
    {0xFF0D,9293,1}, {0xFF0E,9294,1}, {0xFF0F,9295,1}, {0xFF10,9296,1},
    {0xFF11,9297,1}, {0xFF12,9298,1}, {0xFF13,9299,1}, {0xFF14,9300,1},
    {0xFF15,9301,1}, {0xFF16,9302,1}, {0xFF17,9303,1}, {0xFF18,9304,1},
    {0xFF19,9305,1}, {0xFF1A,9306,1}, {0xFF1B,9307,1}, {0xFF1C,9308,1},
    {0xFF1D,9309,1}, {0xFF1E,9310,1}, {0xFF1F,9311,1}, {0xFF20,9312,1},
    {0xFF21,9313,1}, {0xFF22,9314,1}, {0xFF23,9315,1}, {0xFF24,9316,1},
    {0xFF25,9317,1}, {0xFF26,9318,1}, {0xFF27,9319,1}, {0xFF28,9320,1},
    {0xFF29,9321,1}, {0xFF2A,9322,1}, {0xFF2B,9323,1}, {0xFF2C,9324,1},
    {0xFF2D,9325,1}, {0xFF2E,9326,1}, {0xFF2F,9327,1}, {0xFF30,9328,1},
    {0xFF31,9329,1}, {0xFF32,9330,1}, {0xFF33,9331,1}, {0xFF34,9332,1},
    {0xFF35,9333,1}, {0xFF36,9334,1}, {0xFF37,9335,1}, {0xFF38,9336,1},
    {0xFF39,9337,1}, {0xFF3A,9338,1}, {0xFF3B,9339,1}, {0xFF3C,9340,1},
    {0xFF3D,9341,1}, {0xFF3E,9342,1}, {0xFF3F,9343,1}, {0xFF40,9344,1},
    {0xFF41,9345,1}, {0xFF42,9346,1}, {0xFF43,9347,1}, {0xFF44,9348,1},
    {0xFF45,9349,1}, {0xFF46,9350,1}, {0xFF47,9351,1}, {0xFF48,9352,1},
    {0xFF49,9353,1}, {0xFF4A,9354,1}, {0xFF4B,9355,1}, {0xFF4C,9356,1},
    {0xFF4D,9357,1}, {0xFF4E,9358,1}, {0xFF4F,9359,1}, {0xFF50,9360,1},
    {0xFF51,9361,1}, {0xFF52,9362,1}, {0xFF53,9363,1}, {0xFF54,9364,1},
    {0xFF55,9365,1}, {0xFF56,9366,1}, {0xFF57,9367,1}, {0xFF58,9368,1},
    {0xFF59,9369,1}, {0xFF5A,9370,1}, {0xFF5B,9371,1}, {0xFF5C,9372,1},
    {0xFF5D,9373,1}, {0xFF5E,9374,1}, {0xFF5F,9375,3}, {0xFF60,9378,3},
    {0xFF61,9381,3}, {0xFF62,9384,3}, {0xFF63,9387,3}, {0xFF64,9390,3},
    {0xFF65,9393,3}, {0xFF66,9396,3}, {0xFF67,9399,3}, {0xFF68,9402,3},
    {0xFF69,9405,3}, {0xFF6A,9408,3}, {0xFF6B,9411,3}, {0xFF6C,9414,3},
    {0xFF6D,9417,3}, {0xFF6E,9420,3}, {0xFF6F,9423,3}, {0xFF70,9426,3},
    {0xFF71,9429,3}, {0xFF72,9432,3}, {0xFF73,9435,3}, {0xFF74,9438,3},
    {0xFF75,9441,3}, {0xFF76,9444,3}, {0xFF77,9447,3}, {0xFF78,9450,3},
    {0xFF79,9453,3}, {0xFF7A,9456,3}, {0xFF7B,9459,3}, {0xFF7C,9462,3},
    {0xFF7D,9465,3}, {0xFF7E,9468,3}, {0xFF7F,9471,3}, {0xFF80,9474,3},
    {0xFF81,9477,3}, {0xFF82,9480,3}, {0xFF83,9483,3}, {0xFF84,9486,3},
    {0xFF85,9489,3}, {0xFF86,9492,3}, {0xFF87,9495,3}, {0xFF88,9498,3},
    {0xFF89,9501,3}, {0xFF8A,9504,3}, {0xFF8B,9507,3}, {0xFF8C,9510,3},
    {0xFF8D,9513,3}, {0xFF8E,9516,3}, {0xFF8F,9519,3}, {0xFF90,9522,3},
    {0xFF91,9525,3}, {0xFF92,9528,3}, {0xFF93,9531,3}, {0xFF94,9534,3},
    {0xFF95,9537,3}, {0xFF96,9540,3}, {0xFF97,9543,3}, {0xFF98,9546,3},
    {0xFF99,9549,3}, {0xFF9A,9552,3}, {0xFF9B,9555,3}, {0xFF9C,9558,3},
    {0xFF9D,9561,3}, {0xFF9E,9564,3}, {0xFF9F,9567,3}, {0xFFA0,9570,3},
    {0xFFA1,9573,3}, {0xFFA2,9576,3}, {0xFFA3,9579,3}, {0xFFA4,9582,3},
    {0xFFA5,9585,3}, {0xFFA6,9588,3}, {0xFFA7,9591,3}, {0xFFA8,9594,3},
    {0xFFA9,9597,3}, {0xFFAA,9600,3}, {0xFFAB,9603,3}, {0xFFAC,9606,3},
    {0xFFAD,9609,3}, {0xFFAE,9612,3}, {0xFFAF,9615,3}, {0xFFB0,9618,3},
    {0xFFB1,9621,3}, {0xFFB2,9624,3}, {0xFFB3,9627,3}, {0xFFB4,9630,3},
    {0xFFB5,9633,3}, {0xFFB6,9636,3}, {0xFFB7,9639,3}, {0xFFB8,9642,3},
    {0xFFB9,9645,3}, {0xFFBA,9648,3}, {0xFFBB,9651,3}, {0xFFBC,9654,3},
    {0xFFBD,9657,3}, {0xFFBE,9660,3}, {0xFFC2,9663,3}, {0xFFC3,9666,3},
    {0xFFC4,9669,3}, {0xFFC5,9672,3}, {0xFFC6,9675,3}, {0xFFC7,9678,3},
    {0xFFCA,9681,3}, {0xFFCB,9684,3}, {0xFFCC,9687,3}, {0xFFCD,9690,3},
    {0xFFCE,9693,3}, {0xFFCF,9696,3}, {0xFFD2,9699,3}, {0xFFD3,9702,3},
    {0xFFD4,9705,3}, {0xFFD5,9708,3}, {0xFFD6,9711,3}, {0xFFD7,9714,3},
    {0xFFDA,9717,3}, {0xFFDB,9720,3}, {0xFFDC,9723,3}, {0xFFE0,9726,2},
    {0xFFE1,9728,2}, {0xFFE2,9730,2}, {0xFFE3,9732,3}, {0xFFE4,9735,2},
    {0xFFE5,9737,2}, {0xFFE6,9739,3}, {0xFFE8,9742,3}, {0xFFE9,9745,3},
    {0xFFEA,9748,3}, {0xFFEB,9751,3}, {0xFFEC,9754,3}, {0xFFED,9757,3},
    {0xFFEE,9760,3}, {0x1D15E,9763,8}, {0x1D15F,9771,8}, {0x1D160,9779,12},
    {0x1D161,9791,12}, {0x1D162,9803,12}, {0x1D163,9815,12}, {0x1D164,9827,12},
    {0x1D1BB,9839,8}, {0x1D1BC,9847,8}, {0x1D1BD,9855,12}, {0x1D1BE,9867,12},
    {0x1D1BF,9879,12}, {0x1D1C0,9891,12}, {0x1D400,9903,1}, {0x1D401,9904,1},
    {0x1D402,9905,1}, {0x1D403,9906,1}, {0x1D404,9907,1}, {0x1D405,9908,1},
    {0x1D406,9909,1}, {0x1D407,9910,1}, {0x1D408,9911,1}, {0x1D409,9912,1},
    {0x1D40A,9913,1}, {0x1D40B,9914,1}, {0x1D40C,9915,1}, {0x1D40D,9916,1},
    {0x1D40E,9917,1}, {0x1D40F,9918,1}, {0x1D410,9919,1}, {0x1D411,9920,1},
    {0x1D412,9921,1}, {0x1D413,9922,1}, {0x1D414,9923,1}, {0x1D415,9924,1},
    {0x1D416,9925,1}, {0x1D417,9926,1}, {0x1D418,9927,1}, {0x1D419,9928,1},
    {0x1D41A,9929,1}, {0x1D41B,9930,1}, {0x1D41C,9931,1}, {0x1D41D,9932,1},
    {0x1D41E,9933,1}, {0x1D41F,9934,1}, {0x1D420,9935,1}, {0x1D421,9936,1},
    {0x1D422,9937,1}, {0x1D423,9938,1}, {0x1D424,9939,1}, {0x1D425,9940,1},
    {0x1D426,9941,1}, {0x1D427,9942,1}, {0x1D428,9943,1}, {0x1D429,9944,1},
    {0x1D42A,9945,1}, {0x1D42B,9946,1}, {0x1D42C,9947,1}, {0x1D42D,9948,1},
    {0x1D42E,9949,1}, {0x1D42F,9950,1}, {0x1D430,9951,1}, {0x1D431,9952,1},
    {0x1D432,9953,1}, {0x1D433,9954,1}, {0x1D434,9955,1}, {0x1D435,9956,1},
    {0x1D436,9957,1}, {0x1D437,9958,1}, {0x1D438,9959,1}, {0x1D439,9960,1},
    {0x1D43A,9961,1}, {0x1D43B,9962,1}, {0x1D43C,9963,1}, {0x1D43D,9964,1},
    {0x1D43E,9965,1}, {0x1D43F,9966,1}, {0x1D440,9967,1}, {0x1D441,9968,1},
    {0x1D442,9969,1}, {0x1D443,9970,1}, {0x1D444,9971,1}, {0x1D445,9972,1},
    {0x1D446,9973,1}, {0x1D447,9974,1}, {0x1D448,9975,1}, {0x1D449,9976,1},
    {0x1D44A,9977,1}, {0x1D44B,9978,1}, {0x1D44C,9979,1}, {0x1D44D,9980,1},
    {0x1D44E,9981,1}, {0x1D44F,9982,1}, {0x1D450,9983,1}, {0x1D451,9984,1},
    {0x1D452,9985,1}, {0x1D453,9986,1}, {0x1D454,9987,1}, {0x1D456,9988,1},
    {0x1D457,9989,1}, {0x1D458,9990,1}, {0x1D459,9991,1}, {0x1D45A,9992,1},
    {0x1D45B,9993,1}, {0x1D45C,9994,1}, {0x1D45D,9995,1}, {0x1D45E,9996,1},
    {0x1D45F,9997,1}, {0x1D460,9998,1}, {0x1D461,9999,1}, {0x1D462,10000,1},
    {0x1D463,10001,1}, {0x1D464,10002,1}, {0x1D465,10003,1}, {0x1D466,10004,1},
    {0x1D467,10005,1}, {0x1D468,10006,1}, {0x1D469,10007,1}, {0x1D46A,10008,1},
    {0x1D46B,10009,1}, {0x1D46C,10010,1}, {0x1D46D,10011,1}, {0x1D46E,10012,1},
    {0x1D46F,10013,1}, {0x1D470,10014,1}, {0x1D471,10015,1}, {0x1D472,10016,1},
    {0x1D473,10017,1}, {0x1D474,10018,1}, {0x1D475,10019,1}, {0x1D476,10020,1},
    {0x1D477,10021,1}, {0x1D478,10022,1}, {0x1D479,10023,1}, {0x1D47A,10024,1},
    {0x1D47B,10025,1}, {0x1D47C,10026,1}, {0x1D47D,10027,1}, {0x1D47E,10028,1},
    {0x1D47F,10029,1}, {0x1D480,10030,1}, {0x1D481,10031,1}, {0x1D482,10032,1},
    {0x1D483,10033,1}, {0x1D484,10034,1}, {0x1D485,10035,1}, {0x1D486,10036,1},
    {0x1D487,10037,1}, {0x1D488,10038,1}, {0x1D489,10039,1}, {0x1D48A,10040,1},
    {0x1D48B,10041,1}, {0x1D48C,10042,1}, {0x1D48D,10043,1}, {0x1D48E,10044,1},
    {0x1D48F,10045,1}, {0x1D490,10046,1}, {0x1D491,10047,1}, {0x1D492,10048,1},
    {0x1D493,10049,1}, {0x1D494,10050,1}, {0x1D495,10051,1}, {0x1D496,10052,1},
    {0x1D497,10053,1}, {0x1D498,10054,1}, {0x1D499,10055,1}, {0x1D49A,10056,1},
    {0x1D49B,10057,1}, {0x1D49C,10058,1}, {0x1D49E,10059,1}, {0x1D49F,10060,1},
    {0x1D4A2,10061,1}, {0x1D4A5,10062,1}, {0x1D4A6,10063,1}, {0x1D4A9,10064,1},
    {0x1D4AA,10065,1}, {0x1D4AB,10066,1}, {0x1D4AC,10067,1}, {0x1D4AE,10068,1},
    {0x1D4AF,10069,1}, {0x1D4B0,10070,1}, {0x1D4B1,10071,1}, {0x1D4B2,10072,1},
    {0x1D4B3,10073,1}, {0x1D4B4,10074,1}, {0x1D4B5,10075,1}, {0x1D4B6,10076,1},
    {0x1D4B7,10077,1}, {0x1D4B8,10078,1}, {0x1D4B9,10079,1}, {0x1D4BB,10080,1},
    {0x1D4BD,10081,1}, {0x1D4BE,10082,1}, {0x1D4BF,10083,1}, {0x1D4C0,10084,1},
    {0x1D4C1,10085,1}, {0x1D4C2,10086,1}, {0x1D4C3,10087,1}, {0x1D4C5,10088,1},
    {0x1D4C6,10089,1}, {0x1D4C7,10090,1}, {0x1D4C8,10091,1}, {0x1D4C9,10092,1},
    {0x1D4CA,10093,1}, {0x1D4CB,10094,1}, {0x1D4CC,10095,1}, {0x1D4CD,10096,1},
    {0x1D4CE,10097,1}, {0x1D4CF,10098,1}, {0x1D4D0,10099,1}, {0x1D4D1,10100,1},
    {0x1D4D2,10101,1}, {0x1D4D3,10102,1}, {0x1D4D4,10103,1}, {0x1D4D5,10104,1},
    {0x1D4D6,10105,1}, {0x1D4D7,10106,1}, {0x1D4D8,10107,1}, {0x1D4D9,10108,1},
    {0x1D4DA,10109,1}, {0x1D4DB,10110,1}, {0x1D4DC,10111,1}, {0x1D4DD,10112,1},
    {0x1D4DE,10113,1}, {0x1D4DF,10114,1}, {0x1D4E0,10115,1}, {0x1D4E1,10116,1},
    {0x1D4E2,10117,1}, {0x1D4E3,10118,1}, {0x1D4E4,10119,1}, {0x1D4E5,10120,1},
    {0x1D4E6,10121,1}, {0x1D4E7,10122,1}, {0x1D4E8,10123,1}, {0x1D4E9,10124,1},
    {0x1D4EA,10125,1}, {0x1D4EB,10126,1}, {0x1D4EC,10127,1}, {0x1D4ED,10128,1},
    {0x1D4EE,10129,1}, {0x1D4EF,10130,1}, {0x1D4F0,10131,1}, {0x1D4F1,10132,1},
    {0x1D4F2,10133,1}, {0x1D4F3,10134,1}, {0x1D4F4,10135,1}, {0x1D4F5,10136,1},
    {0x1D4F6,10137,1}, {0x1D4F7,10138,1}, {0x1D4F8,10139,1}, {0x1D4F9,10140,1},
    {0x1D4FA,10141,1}, {0x1D4FB,10142,1}, {0x1D4FC,10143,1}, {0x1D4FD,10144,1},
    {0x1D4FE,10145,1}, {0x1D4FF,10146,1}, {0x1D500,10147,1}, {0x1D501,10148,1},
    {0x1D502,10149,1}, {0x1D503,10150,1}, {0x1D504,10151,1}, {0x1D505,10152,1},
    {0x1D507,10153,1}, {0x1D508,10154,1}, {0x1D509,10155,1}, {0x1D50A,10156,1},
    {0x1D50D,10157,1}, {0x1D50E,10158,1}, {0x1D50F,10159,1}, {0x1D510,10160,1},
    {0x1D511,10161,1}, {0x1D512,10162,1}, {0x1D513,10163,1}, {0x1D514,10164,1},
    {0x1D516,10165,1}, {0x1D517,10166,1}, {0x1D518,10167,1}, {0x1D519,10168,1},
    {0x1D51A,10169,1}, {0x1D51B,10170,1}, {0x1D51C,10171,1}, {0x1D51E,10172,1},
    {0x1D51F,10173,1}, {0x1D520,10174,1}, {0x1D521,10175,1}, {0x1D522,10176,1},
    {0x1D523,10177,1}, {0x1D524,10178,1}, {0x1D525,10179,1}, {0x1D526,10180,1},
    {0x1D527,10181,1}, {0x1D528,10182,1}, {0x1D529,10183,1}, {0x1D52A,10184,1},
    {0x1D52B,10185,1}, {0x1D52C,10186,1}, {0x1D52D,10187,1}, {0x1D52E,10188,1},
    {0x1D52F,10189,1}, {0x1D530,10190,1}, {0x1D531,10191,1}, {0x1D532,10192,1},
    {0x1D533,10193,1}, {0x1D534,10194,1}, {0x1D535,10195,1}, {0x1D536,10196,1},
    {0x1D537,10197,1}, {0x1D538,10198,1}, {0x1D539,10199,1}, {0x1D53B,10200,1},
    {0x1D53C,10201,1}, {0x1D53D,10202,1}, {0x1D53E,10203,1}, {0x1D540,10204,1},
    {0x1D541,10205,1}, {0x1D542,10206,1}, {0x1D543,10207,1}, {0x1D544,10208,1},
    {0x1D546,10209,1}, {0x1D54A,10210,1}, {0x1D54B,10211,1}, {0x1D54C,10212,1},
    {0x1D54D,10213,1}, {0x1D54E,10214,1}, {0x1D54F,10215,1}, {0x1D550,10216,1},
    {0x1D552,10217,1}, {0x1D553,10218,1}, {0x1D554,10219,1}, {0x1D555,10220,1},
    {0x1D556,10221,1}, {0x1D557,10222,1}, {0x1D558,10223,1}, {0x1D559,10224,1},
    {0x1D55A,10225,1}, {0x1D55B,10226,1}, {0x1D55C,10227,1}, {0x1D55D,10228,1},
    {0x1D55E,10229,1}, {0x1D55F,10230,1}, {0x1D560,10231,1}, {0x1D561,10232,1},
    {0x1D562,10233,1}, {0x1D563,10234,1}, {0x1D564,10235,1}, {0x1D565,10236,1},
    {0x1D566,10237,1}, {0x1D567,10238,1}, {0x1D568,10239,1}, {0x1D569,10240,1},
    {0x1D56A,10241,1}, {0x1D56B,10242,1}, {0x1D56C,10243,1}, {0x1D56D,10244,1},
    {0x1D56E,10245,1}, {0x1D56F,10246,1}, {0x1D570,10247,1}, {0x1D571,10248,1},
    {0x1D572,10249,1}, {0x1D573,10250,1}, {0x1D574,10251,1}, {0x1D575,10252,1},
    {0x1D576,10253,1}, {0x1D577,10254,1}, {0x1D578,10255,1}, {0x1D579,10256,1},
    {0x1D57A,10257,1}, {0x1D57B,10258,1}, {0x1D57C,10259,1}, {0x1D57D,10260,1},
    {0x1D57E,10261,1}, {0x1D57F,10262,1}, {0x1D580,10263,1}, {0x1D581,10264,1},
    {0x1D582,10265,1}, {0x1D583,10266,1}, {0x1D584,10267,1}, {0x1D585,10268,1},
    {0x1D586,10269,1}, {0x1D587,10270,1}, {0x1D588,10271,1}, {0x1D589,10272,1},
    {0x1D58A,10273,1}, {0x1D58B,10274,1}, {0x1D58C,10275,1}, {0x1D58D,10276,1},
    {0x1D58E,10277,1}, {0x1D58F,10278,1}, {0x1D590,10279,1}, {0x1D591,10280,1},
    {0x1D592,10281,1}, {0x1D593,10282,1}, {0x1D594,10283,1}, {0x1D595,10284,1},
    {0x1D596,10285,1}, {0x1D597,10286,1}, {0x1D598,10287,1}, {0x1D599,10288,1},
    {0x1D59A,10289,1}, {0x1D59B,10290,1}, {0x1D59C,10291,1}, {0x1D59D,10292,1},
    {0x1D59E,10293,1}, {0x1D59F,10294,1}, {0x1D5A0,10295,1}, {0x1D5A1,10296,1},
    {0x1D5A2,10297,1}, {0x1D5A3,10298,1}, {0x1D5A4,10299,1}, {0x1D5A5,10300,1},
    {0x1D5A6,10301,1}, {0x1D5A7,10302,1}, {0x1D5A8,10303,1}, {0x1D5A9,10304,1},
    {0x1D5AA,10305,1}, {0x1D5AB,10306,1}, {0x1D5AC,10307,1}, {0x1D5AD,10308,1},
    {0x1D5AE,10309,1}, {0x1D5AF,10310,1}, {0x1D5B0,10311,1}, {0x1D5B1,10312,1},
    {0x1D5B2,10313,1}, {0x1D5B3,10314,1}, {0x1D5B4,10315,1}, {0x1D5B5,10316,1},
    {0x1D5B6,10317,1}, {0x1D5B7,10318,1}, {0x1D5B8,10319,1}, {0x1D5B9,10320,1},
    {0x1D5BA,10321,1}, {0x1D5BB,10322,1}, {0x1D5BC,10323,1}, {0x1D5BD,10324,1},
    {0x1D5BE,10325,1}, {0x1D5BF,10326,1}, {0x1D5C0,10327,1}, {0x1D5C1,10328,1},
    {0x1D5C2,10329,1}, {0x1D5C3,10330,1}, {0x1D5C4,10331,1}, {0x1D5C5,10332,1},
    {0x1D5C6,10333,1}, {0x1D5C7,10334,1}, {0x1D5C8,10335,1}, {0x1D5C9,10336,1},
    {0x1D5CA,10337,1}, {0x1D5CB,10338,1}, {0x1D5CC,10339,1}, {0x1D5CD,10340,1},
    {0x1D5CE,10341,1}, {0x1D5CF,10342,1}, {0x1D5D0,10343,1}, {0x1D5D1,10344,1},
    {0x1D5D2,10345,1}, {0x1D5D3,10346,1}, {0x1D5D4,10347,1}, {0x1D5D5,10348,1},
    {0x1D5D6,10349,1}, {0x1D5D7,10350,1}, {0x1D5D8,10351,1}, {0x1D5D9,10352,1},
    {0x1D5DA,10353,1}, {0x1D5DB,10354,1}, {0x1D5DC,10355,1}, {0x1D5DD,10356,1},
    {0x1D5DE,10357,1}, {0x1D5DF,10358,1}, {0x1D5E0,10359,1}, {0x1D5E1,10360,1},
    {0x1D5E2,10361,1}, {0x1D5E3,10362,1}, {0x1D5E4,10363,1}, {0x1D5E5,10364,1},
    {0x1D5E6,10365,1}, {0x1D5E7,10366,1}, {0x1D5E8,10367,1}, {0x1D5E9,10368,1},
    {0x1D5EA,10369,1}, {0x1D5EB,10370,1}, {0x1D5EC,10371,1}, {0x1D5ED,10372,1},
    {0x1D5EE,10373,1}, {0x1D5EF,10374,1}, {0x1D5F0,10375,1}, {0x1D5F1,10376,1},
    {0x1D5F2,10377,1}, {0x1D5F3,10378,1}, {0x1D5F4,10379,1}, {0x1D5F5,10380,1},
    {0x1D5F6,10381,1}, {0x1D5F7,10382,1}, {0x1D5F8,10383,1}, {0x1D5F9,10384,1},
    {0x1D5FA,10385,1}, {0x1D5FB,10386,1}, {0x1D5FC,10387,1}, {0x1D5FD,10388,1},
    {0x1D5FE,10389,1}, {0x1D5FF,10390,1}, {0x1D600,10391,1}, {0x1D601,10392,1},
    {0x1D602,10393,1}, {0x1D603,10394,1}, {0x1D604,10395,1}, {0x1D605,10396,1},
    {0x1D606,10397,1}, {0x1D607,10398,1}, {0x1D608,10399,1}, {0x1D609,10400,1},
    {0x1D60A,10401,1}, {0x1D60B,10402,1}, {0x1D60C,10403,1}, {0x1D60D,10404,1},
    {0x1D60E,10405,1}, {0x1D60F,10406,1}, {0x1D610,10407,1}, {0x1D611,10408,1},
    {0x1D612,10409,1}, {0x1D613,10410,1}, {0x1D614,10411,1}, {0x1D615,10412,1},
    {0x1D616,10413,1}, {0x1D617,10414,1}, {0x1D618,10415,1}, {0x1D619,10416,1},
    {0x1D61A,10417,1}, {0x1D61B,10418,1}, {0x1D61C,10419,1}, {0x1D61D,10420,1},
    {0x1D61E,10421,1}, {0x1D61F,10422,1}, {0x1D620,10423,1}, {0x1D621,10424,1},
    {0x1D622,10425,1}, {0x1D623,10426,1}, {0x1D624,10427,1}, {0x1D625,10428,1},
    {0x1D626,10429,1}, {0x1D627,10430,1}, {0x1D628,10431,1}, {0x1D629,10432,1},
    {0x1D62A,10433,1}, {0x1D62B,10434,1}, {0x1D62C,10435,1}, {0x1D62D,10436,1},
    {0x1D62E,10437,1}, {0x1D62F,10438,1}, {0x1D630,10439,1}, {0x1D631,10440,1},
    {0x1D632,10441,1}, {0x1D633,10442,1}, {0x1D634,10443,1}, {0x1D635,10444,1},
    {0x1D636,10445,1}, {0x1D637,10446,1}, {0x1D638,10447,1}, {0x1D639,10448,1},
    {0x1D63A,10449,1}, {0x1D63B,10450,1}, {0x1D63C,10451,1}, {0x1D63D,10452,1},
    {0x1D63E,10453,1}, {0x1D63F,10454,1}, {0x1D640,10455,1}, {0x1D641,10456,1},
    {0x1D642,10457,1}, {0x1D643,10458,1}, {0x1D644,10459,1}, {0x1D645,10460,1},
    {0x1D646,10461,1}, {0x1D647,10462,1}, {0x1D648,10463,1}, {0x1D649,10464,1},
    {0x1D64A,10465,1}, {0x1D64B,10466,1}, {0x1D64C,10467,1}, {0x1D64D,10468,1},
    {0x1D64E,10469,1}, {0x1D64F,10470,1}, {0x1D650,10471,1}, {0x1D651,10472,1},
    {0x1D652,10473,1}, {0x1D653,10474,1}, {0x1D654,10475,1}, {0x1D655,10476,1},
    {0x1D656,10477,1}, {0x1D657,10478,1}, {0x1D658,10479,1}, {0x1D659,10480,1},
    {0x1D65A,10481,1}, {0x1D65B,10482,1}, {0x1D65C,10483,1}, {0x1D65D,10484,1},
    {0x1D65E,10485,1}, {0x1D65F,10486,1}, {0x1D660,10487,1}, {0x1D661,10488,1},
    {0x1D662,10489,1}, {0x1D663,10490,1}, {0x1D664,10491,1}, {0x1D665,10492,1},
    {0x1D666,10493,1}, {0x1D667,10494,1}, {0x1D668,10495,1}, {0x1D669,10496,1},
    {0x1D66A,10497,1}, {0x1D66B,10498,1}, {0x1D66C,10499,1}, {0x1D66D,10500,1},
    {0x1D66E,10501,1}, {0x1D66F,10502,1}, {0x1D670,10503,1}, {0x1D671,10504,1},
    {0x1D672,10505,1}, {0x1D673,10506,1}, {0x1D674,10507,1}, {0x1D675,10508,1},
    {0x1D676,10509,1}, {0x1D677,10510,1}, {0x1D678,10511,1}, {0x1D679,10512,1},
    {0x1D67A,10513,1}, {0x1D67B,10514,1}, {0x1D67C,10515,1}, {0x1D67D,10516,1},
    {0x1D67E,10517,1}, {0x1D67F,10518,1}, {0x1D680,10519,1}, {0x1D681,10520,1},
    {0x1D682,10521,1}, {0x1D683,10522,1}, {0x1D684,10523,1}, {0x1D685,10524,1},
    {0x1D686,10525,1}, {0x1D687,10526,1}, {0x1D688,10527,1}, {0x1D689,10528,1},
    {0x1D68A,10529,1}, {0x1D68B,10530,1}, {0x1D68C,10531,1}, {0x1D68D,10532,1},
    {0x1D68E,10533,1}, {0x1D68F,10534,1}, {0x1D690,10535,1}, {0x1D691,10536,1},
    {0x1D692,10537,1}, {0x1D693,10538,1}, {0x1D694,10539,1}, {0x1D695,10540,1},
    {0x1D696,10541,1}, {0x1D697,10542,1}, {0x1D698,10543,1}, {0x1D699,10544,1},
    {0x1D69A,10545,1}, {0x1D69B,10546,1}, {0x1D69C,10547,1}, {0x1D69D,10548,1},
    {0x1D69E,10549,1}, {0x1D69F,10550,1}, {0x1D6A0,10551,1}, {0x1D6A1,10552,1},
    {0x1D6A2,10553,1}, {0x1D6A3,10554,1}, {0x1D6A4,10555,2}, {0x1D6A5,10557,2},
    {0x1D6A8,10559,2}, {0x1D6A9,10561,2}, {0x1D6AA,10563,2}, {0x1D6AB,10565,2},
    {0x1D6AC,10567,2}, {0x1D6AD,10569,2}, {0x1D6AE,10571,2}, {0x1D6AF,10573,2},
    {0x1D6B0,10575,2}, {0x1D6B1,10577,2}, {0x1D6B2,10579,2}, {0x1D6B3,10581,2},
    {0x1D6B4,10583,2}, {0x1D6B5,10585,2}, {0x1D6B6,10587,2}, {0x1D6B7,10589,2},
    {0x1D6B8,10591,2}, {0x1D6B9,10593,2}, {0x1D6BA,10595,2}, {0x1D6BB,10597,2},
    {0x1D6BC,10599,2}, {0x1D6BD,10601,2}, {0x1D6BE,10603,2}, {0x1D6BF,10605,2},
    {0x1D6C0,10607,2}, {0x1D6C1,10609,3}, {0x1D6C2,10612,2}, {0x1D6C3,10614,2},
    {0x1D6C4,10616,2}, {0x1D6C5,10618,2}, {0x1D6C6,10620,2}, {0x1D6C7,10622,2},
    {0x1D6C8,10624,2}, {0x1D6C9,10626,2}, {0x1D6CA,10628,2}, {0x1D6CB,10630,2},
    {0x1D6CC,10632,2}, {0x1D6CD,10634,2}, {0x1D6CE,10636,2}, {0x1D6CF,10638,2},
    {0x1D6D0,10640,2}, {0x1D6D1,10642,2}, {0x1D6D2,10644,2}, {0x1D6D3,10646,2},
    {0x1D6D4,10648,2}, {0x1D6D5,10650,2}, {0x1D6D6,10652,2}, {0x1D6D7,10654,2},
    {0x1D6D8,10656,2}, {0x1D6D9,10658,2}, {0x1D6DA,10660,2}, {0x1D6DB,10662,3},
    {0x1D6DC,10665,2}, {0x1D6DD,10667,2}, {0x1D6DE,10669,2}, {0x1D6DF,10671,2},
    {0x1D6E0,10673,2}, {0x1D6E1,10675,2}, {0x1D6E2,10677,2}, {0x1D6E3,10679,2},
    {0x1D6E4,10681,2}, {0x1D6E5,10683,2}, {0x1D6E6,10685,2}, {0x1D6E7,10687,2},
    {0x1D6E8,10689,2}, {0x1D6E9,10691,2}, {0x1D6EA,10693,2}, {0x1D6EB,10695,2},
    {0x1D6EC,10697,2}, {0x1D6ED,10699,2}, {0x1D6EE,10701,2}, {0x1D6EF,10703,2},
    {0x1D6F0,10705,2}, {0x1D6F1,10707,2}, {0x1D6F2,10709,2}, {0x1D6F3,10711,2},
    {0x1D6F4,10713,2}, {0x1D6F5,10715,2}, {0x1D6F6,10717,2}, {0x1D6F7,10719,2},
    {0x1D6F8,10721,2}, {0x1D6F9,10723,2}, {0x1D6FA,10725,2}, {0x1D6FB,10727,3},
    {0x1D6FC,10730,2}, {0x1D6FD,10732,2}, {0x1D6FE,10734,2}, {0x1D6FF,10736,2},
    {0x1D700,10738,2}, {0x1D701,10740,2}, {0x1D702,10742,2}, {0x1D703,10744,2},
    {0x1D704,10746,2}, {0x1D705,10748,2}, {0x1D706,10750,2}, {0x1D707,10752,2},
    {0x1D708,10754,2}, {0x1D709,10756,2}, {0x1D70A,10758,2}, {0x1D70B,10760,2},
    {0x1D70C,10762,2}, {0x1D70D,10764,2}, {0x1D70E,10766,2}, {0x1D70F,10768,2},
    {0x1D710,10770,2}, {0x1D711,10772,2}, {0x1D712,10774,2}, {0x1D713,10776,2},
    {0x1D714,10778,2}, {0x1D715,10780,3}, {0x1D716,10783,2}, {0x1D717,10785,2},
    {0x1D718,10787,2}, {0x1D719,10789,2}, {0x1D71A,10791,2}, {0x1D71B,10793,2},
    {0x1D71C,10795,2}, {0x1D71D,10797,2}, {0x1D71E,10799,2}, {0x1D71F,10801,2},
    {0x1D720,10803,2}, {0x1D721,10805,2}, {0x1D722,10807,2}, {0x1D723,10809,2},
    {0x1D724,10811,2}, {0x1D725,10813,2}, {0x1D726,10815,2}, {0x1D727,10817,2},
    {0x1D728,10819,2}, {0x1D729,10821,2}, {0x1D72A,10823,2}, {0x1D72B,10825,2},
    {0x1D72C,10827,2}, {0x1D72D,10829,2}, {0x1D72E,10831,2}, {0x1D72F,10833,2},
    {0x1D730,10835,2}, {0x1D731,10837,2}, {0x1D732,10839,2}, {0x1D733,10841,2},
    {0x1D734,10843,2}, {0x1D735,10845,3}, {0x1D736,10848,2}, {0x1D737,10850,2},
    {0x1D738,10852,2}, {0x1D739,10854,2}, {0x1D73A,10856,2}, {0x1D73B,10858,2},
    {0x1D73C,10860,2}, {0x1D73D,10862,2}, {0x1D73E,10864,2}, {0x1D73F,10866,2},
    {0x1D740,10868,2}, {0x1D741,10870,2}, {0x1D742,10872,2}, {0x1D743,10874,2},
    {0x1D744,10876,2}, {0x1D745,10878,2}, {0x1D746,10880,2}, {0x1D747,10882,2},
    {0x1D748,10884,2}, {0x1D749,10886,2}, {0x1D74A,10888,2}, {0x1D74B,10890,2},
    {0x1D74C,10892,2}, {0x1D74D,10894,2}, {0x1D74E,10896,2}, {0x1D74F,10898,3},
    {0x1D750,10901,2}, {0x1D751,10903,2}, {0x1D752,10905,2}, {0x1D753,10907,2},
    {0x1D754,10909,2}, {0x1D755,10911,2}, {0x1D756,10913,2}, {0x1D757,10915,2},
    {0x1D758,10917,2}, {0x1D759,10919,2}, {0x1D75A,10921,2}, {0x1D75B,10923,2},
    {0x1D75C,10925,2}, {0x1D75D,10927,2}, {0x1D75E,10929,2}, {0x1D75F,10931,2},
    {0x1D760,10933,2}, {0x1D761,10935,2}, {0x1D762,10937,2}, {0x1D763,10939,2},
    {0x1D764,10941,2}, {0x1D765,10943,2}, {0x1D766,10945,2}, {0x1D767,10947,2},
    {0x1D768,10949,2}, {0x1D769,10951,2}, {0x1D76A,10953,2}, {0x1D76B,10955,2},
    {0x1D76C,10957,2}, {0x1D76D,10959,2}, {0x1D76E,10961,2}, {0x1D76F,10963,3},
    {0x1D770,10966,2}, {0x1D771,10968,2}, {0x1D772,10970,2}, {0x1D773,10972,2},
    {0x1D774,10974,2}, {0x1D775,10976,2}, {0x1D776,10978,2}, {0x1D777,10980,2},
    {0x1D778,10982,2}, {0x1D779,10984,2}, {0x1D77A,10986,2}, {0x1D77B,10988,2},
    {0x1D77C,10990,2}, {0x1D77D,10992,2}, {0x1D77E,10994,2}, {0x1D77F,10996,2},
    {0x1D780,10998,2}, {0x1D781,11000,2}, {0x1D782,11002,2}, {0x1D783,11004,2},
    {0x1D784,11006,2}, {0x1D785,11008,2}, {0x1D786,11010,2}, {0x1D787,11012,2},
    {0x1D788,11014,2}, {0x1D789,11016,3}, {0x1D78A,11019,2}, {0x1D78B,11021,2},
    {0x1D78C,11023,2}, {0x1D78D,11025,2}, {0x1D78E,11027,2}, {0x1D78F,11029,2},
    {0x1D790,11031,2}, {0x1D791,11033,2}, {0x1D792,11035,2}, {0x1D793,11037,2},
    {0x1D794,11039,2}, {0x1D795,11041,2}, {0x1D796,11043,2}, {0x1D797,11045,2},
    {0x1D798,11047,2}, {0x1D799,11049,2}, {0x1D79A,11051,2}, {0x1D79B,11053,2},
    {0x1D79C,11055,2}, {0x1D79D,11057,2}, {0x1D79E,11059,2}, {0x1D79F,11061,2},
    {0x1D7A0,11063,2}, {0x1D7A1,11065,2}, {0x1D7A2,11067,2}, {0x1D7A3,11069,2},
    {0x1D7A4,11071,2}, {0x1D7A5,11073,2}, {0x1D7A6,11075,2}, {0x1D7A7,11077,2},
    {0x1D7A8,11079,2}, {0x1D7A9,11081,3}, {0x1D7AA,11084,2}, {0x1D7AB,11086,2},
    {0x1D7AC,11088,2}, {0x1D7AD,11090,2}, {0x1D7AE,11092,2}, {0x1D7AF,11094,2},
    {0x1D7B0,11096,2}, {0x1D7B1,11098,2}, {0x1D7B2,11100,2}, {0x1D7B3,11102,2},
    {0x1D7B4,11104,2}, {0x1D7B5,11106,2}, {0x1D7B6,11108,2}, {0x1D7B7,11110,2},
    {0x1D7B8,11112,2}, {0x1D7B9,11114,2}, {0x1D7BA,11116,2}, {0x1D7BB,11118,2},
    {0x1D7BC,11120,2}, {0x1D7BD,11122,2}, {0x1D7BE,11124,2}, {0x1D7BF,11126,2},
    {0x1D7C0,11128,2}, {0x1D7C1,11130,2}, {0x1D7C2,11132,2}, {0x1D7C3,11134,3},
    {0x1D7C4,11137,2}, {0x1D7C5,11139,2}, {0x1D7C6,11141,2}, {0x1D7C7,11143,2},
    {0x1D7C8,11145,2}, {0x1D7C9,11147,2}, {0x1D7CA,11149,2}, {0x1D7CB,11151,2},
    {0x1D7CE,11153,1}, {0x1D7CF,11154,1}, {0x1D7D0,11155,1}, {0x1D7D1,11156,1},
    {0x1D7D2,11157,1}, {0x1D7D3,11158,1}, {0x1D7D4,11159,1}, {0x1D7D5,11160,1},
    {0x1D7D6,11161,1}, {0x1D7D7,11162,1}, {0x1D7D8,11163,1}, {0x1D7D9,11164,1},
    {0x1D7DA,11165,1}, {0x1D7DB,11166,1}, {0x1D7DC,11167,1}, {0x1D7DD,11168,1},
    {0x1D7DE,11169,1}, {0x1D7DF,11170,1}, {0x1D7E0,11171,1}, {0x1D7E1,11172,1},
    {0x1D7E2,11173,1}, {0x1D7E3,11174,1}, {0x1D7E4,11175,1}, {0x1D7E5,11176,1},
    {0x1D7E6,11177,1}, {0x1D7E7,11178,1}, {0x1D7E8,11179,1}, {0x1D7E9,11180,1},
    {0x1D7EA,11181,1}, {0x1D7EB,11182,1}, {0x1D7EC,11183,1}, {0x1D7ED,11184,1},
    {0x1D7EE,11185,1}, {0x1D7EF,11186,1}, {0x1D7F0,11187,1}, {0x1D7F1,11188,1},
    {0x1D7F2,11189,1}, {0x1D7F3,11190,1}, {0x1D7F4,11191,1}, {0x1D7F5,11192,1},
    {0x1D7F6,11193,1}, {0x1D7F7,11194,1}, {0x1D7F8,11195,1}, {0x1D7F9,11196,1},
    {0x1D7FA,11197,1}, {0x1D7FB,11198,1}, {0x1D7FC,11199,1}, {0x1D7FD,11200,1},
    {0x1D7FE,11201,1}, {0x1D7FF,11202,1}, {0x1EE00,11203,2}, {0x1EE01,11205,2},
    {0x1EE02,11207,2}, {0x1EE03,11209,2}, {0x1EE05,11211,2}, {0x1EE06,11213,2},
    {0x1EE07,11215,2}, {0x1EE08,11217,2}, {0x1EE09,11219,2}, {0x1EE0A,11221,2},
    {0x1EE0B,11223,2}, {0x1EE0C,11225,2}, {0x1EE0D,11227,2}, {0x1EE0E,11229,2},
    {0x1EE0F,11231,2}, {0x1EE10,11233,2}, {0x1EE11,11235,2}, {0x1EE12,11237,2},
    {0x1EE13,11239,2}, {0x1EE14,11241,2}, {0x1EE15,11243,2}, {0x1EE16,11245,2},
    {0x1EE17,11247,2}, {0x1EE18,11249,2}, {0x1EE19,11251,2}, {0x1EE1A,11253,2},
    {0x1EE1B,11255,2}, {0x1EE1C,11257,2}, {0x1EE1D,11259,2}, {0x1EE1E,11261,2},
    {0x1EE1F,11263,2}, {0x1EE21,11265,2}, {0x1EE22,11267,2}, {0x1EE24,11269,2},
    {0x1EE27,11271,2}, {0x1EE29,11273,2}, {0x1EE2A,11275,2}, {0x1EE2B,11277,2},
    {0x1EE2C,11279,2}, {0x1EE2D,11281,2}, {0x1EE2E,11283,2}, {0x1EE2F,11285,2},
    {0x1EE30,11287,2}, {0x1EE31,11289,2}, {0x1EE32,11291,2}, {0x1EE34,11293,2},
    {0x1EE35,11295,2}, {0x1EE36,11297,2}, {0x1EE37,11299,2}, {0x1EE39,11301,2},
    {0x1EE3B,11303,2}, {0x1EE42,11305,2}, {0x1EE47,11307,2}, {0x1EE49,11309,2},
    {0x1EE4B,11311,2}, {0x1EE4D,11313,2}, {0x1EE4E,11315,2}, {0x1EE4F,11317,2},
    {0x1EE51,11319,2}, {0x1EE52,11321,2}, {0x1EE54,11323,2}, {0x1EE57,11325,2},
    {0x1EE59,11327,2}, {0x1EE5B,11329,2}, {0x1EE5D,11331,2}, {0x1EE5F,11333,2},
    {0x1EE61,11335,2}, {0x1EE62,11337,2}, {0x1EE64,11339,2}, {0x1EE67,11341,2},
    {0x1EE68,11343,2}, {0x1EE69,11345,2}, {0x1EE6A,11347,2}, {0x1EE6C,11349,2},
    {0x1EE6D,11351,2}, {0x1EE6E,11353,2}, {0x1EE6F,11355,2}, {0x1EE70,11357,2},
    {0x1EE71,11359,2}, {0x1EE72,11361,2}, {0x1EE74,11363,2}, {0x1EE75,11365,2},
    {0x1EE76,11367,2}, {0x1EE77,11369,2}, {0x1EE79,11371,2}, {0x1EE7A,11373,2},
    {0x1EE7B,11375,2}, {0x1EE7C,11377,2}, {0x1EE7E,11379,2}, {0x1EE80,11381,2},
    {0x1EE81,11383,2}, {0x1EE82,11385,2}, {0x1EE83,11387,2}, {0x1EE84,11389,2},
    {0x1EE85,11391,2}, {0x1EE86,11393,2}, {0x1EE87,11395,2}, {0x1EE88,11397,2},
    {0x1EE89,11399,2}, {0x1EE8B,11401,2}, {0x1EE8C,11403,2}, {0x1EE8D,11405,2},
    {0x1EE8E,11407,2}, {0x1EE8F,11409,2}, {0x1EE90,11411,2}, {0x1EE91,11413,2},
    {0x1EE92,11415,2}, {0x1EE93,11417,2}, {0x1EE94,11419,2}, {0x1EE95,11421,2},
    {0x1EE96,11423,2}, {0x1EE97,11425,2}, {0x1EE98,11427,2}, {0x1EE99,11429,2},
    {0x1EE9A,11431,2}, {0x1EE9B,11433,2}, {0x1EEA1,11435,2}, {0x1EEA2,11437,2},
    {0x1EEA3,11439,2}, {0x1EEA5,11441,2}, {0x1EEA6,11443,2}, {0x1EEA7,11445,2},
    {0x1EEA8,11447,2}, {0x1EEA9,11449,2}, {0x1EEAB,11451,2}, {0x1EEAC,11453,2},
    {0x1EEAD,11455,2}, {0x1EEAE,11457,2}, {0x1EEAF,11459,2}, {0x1EEB0,11461,2},
    {0x1EEB1,11463,2}, {0x1EEB2,11465,2}, {0x1EEB3,11467,2}, {0x1EEB4,11469,2},
    {0x1EEB5,11471,2}, {0x1EEB6,11473,2}, {0x1EEB7,11475,2}, {0x1EEB8,11477,2},
    {0x1EEB9,11479,2}, {0x1EEBA,11481,2}, {0x1EEBB,11483,2}, {0x1F100,11485,2},
    {0x1F101,11487,2}, {0x1F102,11489,2}, {0x1F103,11491,2}, {0x1F104,11493,2},
    {0x1F105,11495,2}, {0x1F106,11497,2}, {0x1F107,11499,2}, {0x1F108,11501,2},
    {0x1F109,11503,2}, {0x1F10A,11505,2}, {0x1F110,11507,3}, {0x1F111,11510,3},
    {0x1F112,11513,3}, {0x1F113,11516,3}, {0x1F114,11519,3}, {0x1F115,11522,3},
    {0x1F116,11525,3}, {0x1F117,11528,3}, {0x1F118,11531,3}, {0x1F119,11534,3},
    {0x1F11A,11537,3}, {0x1F11B,11540,3}, {0x1F11C,11543,3}, {0x1F11D,11546,3},
    {0x1F11E,11549,3}, {0x1F11F,11552,3}, {0x1F120,11555,3}, {0x1F121,11558,3},
    {0x1F122,11561,3}, {0x1F123,11564,3}, {0x1F124,11567,3}, {0x1F125,11570,3},
    {0x1F126,11573,3}, {0x1F127,11576,3}, {0x1F128,11579,3}, {0x1F129,11582,3},
    {0x1F12A,11585,7}, {0x1F12B,11592,1}, {0x1F12C,11593,1}, {0x1F12D,11594,2},
    {0x1F12E,11596,2}, {0x1F130,11598,1}, {0x1F131,11599,1}, {0x1F132,11600,1},
    {0x1F133,11601,1}, {0x1F134,11602,1}, {0x1F135,11603,1}, {0x1F136,11604,1},
    {0x1F137,11605,1}, {0x1F138,11606,1}, {0x1F139,11607,1}, {0x1F13A,11608,1},
    {0x1F13B,11609,1}, {0x1F13C,11610,1}, {0x1F13D,11611,1}, {0x1F13E,11612,1},
    {0x1F13F,11613,1}, {0x1F140,11614,1}, {0x1F141,11615,1}, {0x1F142,11616,1},
    {0x1F143,11617,1}, {0x1F144,11618,1}, {0x1F145,11619,1}, {0x1F146,11620,1},
    {0x1F147,11621,1}, {0x1F148,11622,1}, {0x1F149,11623,1}, {0x1F14A,11624,2},
    {0x1F14B,11626,2}, {0x1F14C,11628,2}, {0x1F14D,11630,2}, {0x1F14E,11632,3},
    {0x1F14F,11635,2}, {0x1F16A,11637,2}, {0x1F16B,11639,2}, {0x1F16C,11641,2},
    {0x1F190,11643,2}, {0x1F200,11645,6}, {0x1F201,11651,6}, {0x1F202,11657,3},
    {0x1F210,11660,3}, {0x1F211,11663,3}, {0x1F212,11666,3}, {0x1F213,11669,3},
    {0x1F214,11672,3}, {0x1F215,11675,3}, {0x1F216,11678,3}, {0x1F217,11681,3},
    {0x1F218,11684,3}, {0x1F219,11687,3}, {0x1F21A,11690,3}, {0x1F21B,11693,3},
    {0x1F21C,11696,3}, {0x1F21D,11699,3}, {0x1F21E,11702,3}, {0x1F21F,11705,3},
    {0x1F220,11708,3}, {0x1F221,11711,3}, {0x1F222,11714,3}, {0x1F223,11717,3},
    {0x1F224,11720,3}, {0x1F225,11723,3}, {0x1F226,11726,3}, {0x1F227,11729,3},
    {0x1F228,11732,3}, {0x1F229,11735,3}, {0x1F22A,11738,3}, {0x1F22B,11741,3},
    {0x1F22C,11744,3}, {0x1F22D,11747,3}, {0x1F22E,11750,3}, {0x1F22F,11753,3},
    {0x1F230,11756,3}, {0x1F231,11759,3}, {0x1F232,11762,3}, {0x1F233,11765,3},
    {0x1F234,11768,3}, {0x1F235,11771,3}, {0x1F236,11774,3}, {0x1F237,11777,3},
    {0x1F238,11780,3}, {0x1F239,11783,3}, {0x1F23A,11786,3}, {0x1F23B,11789,3},
    {0x1F240,11792,9}, {0x1F241,11801,9}, {0x1F242,11810,9}, {0x1F243,11819,9},
    {0x1F244,11828,9}, {0x1F245,11837,9}, {0x1F246,11846,9}, {0x1F247,11855,9},
    {0x1F248,11864,9}, {0x1F250,11873,3}, {0x1F251,11876,3}, {0x1FBF0,11879,1},
    {0x1FBF1,11880,1}, {0x1FBF2,11881,1}, {0x1FBF3,11882,1}, {0x1FBF4,11883,1},
    {0x1FBF5,11884,1}, {0x1FBF6,11885,1}, {0x1FBF7,11886,1}, {0x1FBF8,11887,1},
    {0x1FBF9,11888,1}, {0x2F800,11889,3}, {0x2F801,11892,3}, {0x2F802,11895,3},
    {0x2F803,11898,4}, {0x2F804,11902,3}, {0x2F805,11905,3}, {0x2F806,11908,3},
    {0x2F807,11911,3}, {0x2F808,11914,3}, {0x2F809,11917,3}, {0x2F80A,11920,3},
    {0x2F80B,11923,3}, {0x2F80C,11926,3}, {0x2F80D,11929,4}, {0x2F80E,11933,3},
    {0x2F80F,11936,3}, {0x2F810,11939,3}, {0x2F811,11942,3}, {0x2F812,11945,4},
    {0x2F813,11949,3}, {0x2F814,11952,3}, {0x2F815,11955,3}, {0x2F816,11958,4},
    {0x2F817,11962,3}, {0x2F818,11965,3}, {0x2F819,11968,3}, {0x2F81A,11971,3},
    {0x2F81B,11974,3}, {0x2F81C,11977,4}, {0x2F81D,11981,3}, {0x2F81E,11984,3},
    {0x2F81F,11987,3}, {0x2F820,11990,3}, {0x2F821,11993,3}, {0x2F822,11996,3},
    {0x2F823,11999,3}, {0x2F824,12002,3}, {0x2F825,12005,3}, {0x2F826,12008,3},
    {0x2F827,12011,3}, {0x2F828,12014,3}, {0x2F829,12017,3}, {0x2F82A,12020,3},
    {0x2F82B,12023,3}, {0x2F82C,12026,3}, {0x2F82D,12029,3}, {0x2F82E,12032,3},
    {0x2F82F,12035,3}, {0x2F830,12038,3}, {0x2F831,12041,3}, {0x2F832,12044,3},
    {0x2F833,12047,3}, {0x2F834,12050,4}, {0x2F835,12054,3}, {0x2F836,12057,3},
    {0x2F837,12060,3}, {0x2F838,12063,4}, {0x2F839,12067,3}, {0x2F83A,12070,3},
    {0x2F83B,12073,3}, {0x2F83C,12076,3}, {0x2F83D,12079,3}, {0x2F83E,12082,3},
    {0x2F83F,12085,3}, {0x2F840,12088,3}, {0x2F841,12091,3}, {0x2F842,12094,3},
    {0x2F843,12097,3}, {0x2F844,12100,3}, {0x2F845,12103,3}, {0x2F846,12106,3},
    {0x2F847,12109,3}, {0x2F848,12112,3}, {0x2F849,12115,3}, {0x2F84A,12118,3},
    {0x2F84B,12121,3}, {0x2F84C,12124,3}, {0x2F84D,12127,3}, {0x2F84E,12130,3},
    {0x2F84F,12133,3}, {0x2F850,12136,3}, {0x2F851,12139,3}, {0x2F852,12142,3},
    {0x2F853,12145,3}, {0x2F854,12148,3}, {0x2F855,12151,3}, {0x2F856,12154,3},
    {0x2F857,12157,3}, {0x2F858,12160,3}, {0x2F859,12163,4}, {0x2F85A,12167,3},
    {0x2F85B,12170,3}, {0x2F85C,12173,3}, {0x2F85D,12176,3}, {0x2F85E,12179,3},
    {0x2F85F,12182,3}, {0x2F860,12185,4}, {0x2F861,12189,4}, {0x2F862,12193,3},
    {0x2F863,12196,3}, {0x2F864,12199,3}, {0x2F865,12202,3}, {0x2F866,12205,3},
    {0x2F867,12208,3}, {0x2F868,12211,3}, {0x2F869,12214,3}, {0x2F86A,12217,3},
    {0x2F86B,12220,3}, {0x2F86C,12223,4}, {0x2F86D,12227,3}, {0x2F86E,12230,3},
    {0x2F86F,12233,3}, {0x2F870,12236,3}, {0x2F871,12239,4}, {0x2F872,12243,3},
    {0x2F873,12246,3}, {0x2F874,12249,3}, {0x2F875,12252,3}, {0x2F876,12255,3},
    {0x2F877,12258,3}, {0x2F878,12261,3}, {0x2F879,12264,3}, {0x2F87A,12267,3},
    {0x2F87B,12270,4}, {0x2F87C,12274,3}, {0x2F87D,12277,4}, {0x2F87E,12281,3},
    {0x2F87F,12284,3}, {0x2F880,12287,3}, {0x2F881,12290,3}, {0x2F882,12293,3},
    {0x2F883,12296,3}, {0x2F884,12299,3}, {0x2F885,12302,3}, {0x2F886,12305,3},
    {0x2F887,12308,3}, {0x2F888,12311,3}, {0x2F889,12314,4}, {0x2F88A,12318,3},
    {0x2F88B,12321,3}, {0x2F88C,12324,3}, {0x2F88D,12327,3}, {0x2F88E,12330,3},
    {0x2F88F,12333,4}, {0x2F890,12337,3}, {0x2F891,12340,4}, {0x2F892,12344,4},
    {0x2F893,12348,3}, {0x2F894,12351,3}, {0x2F895,12354,3}, {0x2F896,12357,3},
    {0x2F897,12360,4}, {0x2F898,12364,4}, {0x2F899,12368,3}, {0x2F89A,12371,3},
    {0x2F89B,12374,3}, {0x2F89C,12377,3}, {0x2F89D,12380,3}, {0x2F89E,12383,3},
    {0x2F89F,12386,3}, {0x2F8A0,12389,3}, {0x2F8A1,12392,3}, {0x2F8A2,12395,3},
    {0x2F8A3,12398,3}, {0x2F8A4,12401,4}, {0x2F8A5,12405,3}, {0x2F8A6,12408,3},
    {0x2F8A7,12411,3}, {0x2F8A8,12414,3}, {0x2F8A9,12417,3}, {0x2F8AA,12420,3},
    {0x2F8AB,12423,3}, {0x2F8AC,12426,3}, {0x2F8AD,12429,3}, {0x2F8AE,12432,3},
    {0x2F8AF,12435,3}, {0x2F8B0,12438,3}, {0x2F8B1,12441,3}, {0x2F8B2,12444,3},
    {0x2F8B3,12447,3}, {0x2F8B4,12450,3}, {0x2F8B5,12453,3}, {0x2F8B6,12456,3},
    {0x2F8B7,12459,3}, {0x2F8B8,12462,4}, {0x2F8B9,12466,3}, {0x2F8BA,12469,3},
    {0x2F8BB,12472,3}, {0x2F8BC,12475,3}, {0x2F8BD,12478,3}, {0x2F8BE,12481,4},
    {0x2F8BF,12485,3}, {0x2F8C0,12488,3}, {0x2F8C1,12491,3}, {0x2F8C2,12494,3},
    {0x2F8C3,12497,3}, {0x2F8C4,12500,3}, {0x2F8C5,12503,3}, {0x2F8C6,12506,3},
    {0x2F8C7,12509,3}, {0x2F8C8,12512,3}, {0x2F8C9,12515,3}, {0x2F8CA,12518,4},
    {0x2F8CB,12522,3}, {0x2F8CC,12525,3}, {0x2F8CD,12528,3}, {0x2F8CE,12531,3},
    {0x2F8CF,12534,3}, {0x2F8D0,12537,3}, {0x2F8D1,12540,3}, {0x2F8D2,12543,3},
    {0x2F8D3,12546,3}, {0x2F8D4,12549,3}, {0x2F8D5,12552,3}, {0x2F8D6,12555,3},
    {0x2F8D7,12558,3}, {0x2F8D8,12561,3}, {0x2F8D9,12564,3}, {0x2F8DA,12567,3},
    {0x2F8DB,12570,3}, {0x2F8DC,12573,3}, {0x2F8DD,12576,4}, {0x2F8DE,12580,3},
    {0x2F8DF,12583,3}, {0x2F8E0,12586,3}, {0x2F8E1,12589,3}, {0x2F8E2,12592,3},
    {0x2F8E3,12595,4}, {0x2F8E4,12599,3}, {0x2F8E5,12602,3}, {0x2F8E6,12605,3},
    {0x2F8E7,12608,3}, {0x2F8E8,12611,3}, {0x2F8E9,12614,3}, {0x2F8EA,12617,3},
    {0x2F8EB,12620,3}, {0x2F8EC,12623,4}, {0x2F8ED,12627,3}, {0x2F8EE,12630,3},
    {0x2F8EF,12633,3}, {0x2F8F0,12636,4}, {0x2F8F1,12640,3}, {0x2F8F2,12643,3},
    {0x2F8F3,12646,3}, {0x2F8F4,12649,3}, {0x2F8F5,12652,3}, {0x2F8F6,12655,3},
    {0x2F8F7,12658,4}, {0x2F8F8,12662,4}, {0x2F8F9,12666,4}, {0x2F8FA,12670,3},
    {0x2F8FB,12673,4}, {0x2F8FC,12677,3}, {0x2F8FD,12680,3}, {0x2F8FE,12683,3},
    {0x2F8FF,12686,3}, {0x2F900,12689,3}, {0x2F901,12692,3}, {0x2F902,12695,3},
    {0x2F903,12698,3}, {0x2F904,12701,3}, {0x2F905,12704,3}, {0x2F906,12707,4},
    {0x2F907,12711,3}, {0x2F908,12714,3}, {0x2F909,12717,3}, {0x2F90A,12720,3},
    {0x2F90B,12723,3}, {0x2F90C,12726,3}, {0x2F90D,12729,4}, {0x2F90E,12733,3},
    {0x2F90F,12736,3}, {0x2F910,12739,4}, {0x2F911,12743,4}, {0x2F912,12747,3},
    {0x2F913,12750,3}, {0x2F914,12753,3}, {0x2F915,12756,3}, {0x2F916,12759,3},
    {0x2F917,12762,3}, {0x2F918,12765,3}, {0x2F919,12768,3}, {0x2F91A,12771,3},
    {0x2F91B,12774,4}, {0x2F91C,12778,3}, {0x2F91D,12781,4}, {0x2F91E,12785,3},
    {0x2F91F,12788,4}, {0x2F920,12792,3}, {0x2F921,12795,3}, {0x2F922,12798,3},
    {0x2F923,12801,4}, {0x2F924,12805,3}, {0x2F925,12808,3}, {0x2F926,12811,4},
    {0x2F927,12815,4}, {0x2F928,12819,3}, {0x2F929,12822,3}, {0x2F92A,12825,3},
    {0x2F92B,12828,3}, {0x2F92C,12831,3}, {0x2F92D,12834,3}, {0x2F92E,12837,3},
    {0x2F92F,12840,3}, {0x2F930,12843,3}, {0x2F931,12846,3}, {0x2F932,12849,3},
    {0x2F933,12852,3}, {0x2F934,12855,3}, {0x2F935,12858,4}, {0x2F936,12862,3},
    {0x2F937,12865,4}, {0x2F938,12869,3}, {0x2F939,12872,4}, {0x2F93A,12876,3},
    {0x2F93B,12879,4}, {0x2F93C,12883,4}, {0x2F93D,12887,4}, {0x2F93E,12891,3},
    {0x2F93F,12894,3}, {0x2F940,12897,3}, {0x2F941,12900,4}, {0x2F942,12904,4},
    {0x2F943,12908,4}, {0x2F944,12912,4}, {0x2F945,12916,3}, {0x2F946,12919,3},
    {0x2F947,12922,3}, {0x2F948,12925,3}, {0x2F949,12928,3}, {0x2F94A,12931,3},
    {0x2F94B,12934,3}, {0x2F94C,12937,3}, {0x2F94D,12940,4}, {0x2F94E,12944,3},
    {0x2F94F,12947,3}, {0x2F950,12950,3}, {0x2F951,12953,3}, {0x2F952,12956,4},
    {0x2F953,12960,3}, {0x2F954,12963,4}, {0x2F955,12967,4}, {0x2F956,12971,3},
    {0x2F957,12974,3}, {0x2F958,12977,3}, {0x2F959,12980,3}, {0x2F95A,12983,3},
    {0x2F95B,12986,3}, {0x2F95C,12989,4}, {0x2F95D,12993,4}, {0x2F95E,12997,4},
    {0x2F95F,13001,3}, {0x2F960,13004,3}, {0x2F961,13007,4}, {0x2F962,13011,3},
    {0x2F963,13014,3}, {0x2F964,13017,3}, {0x2F965,13020,4}, {0x2F966,13024,3},
    {0x2F967,13027,3}, {0x2F968,13030,3}, {0x2F969,13033,3}, {0x2F96A,13036,3},
    {0x2F96B,13039,4}, {0x2F96C,13043,3}, {0x2F96D,13046,3}, {0x2F96E,13049,3},
    {0x2F96F,13052,3}, {0x2F970,13055,3}, {0x2F971,13058,3}, {0x2F972,13061,4},
    {0x2F973,13065,4}, {0x2F974,13069,3}, {0x2F975,13072,4}, {0x2F976,13076,3},
    {0x2F977,13079,4}, {0x2F978,13083,3}, {0x2F979,13086,3}, {0x2F97A,13089,3},
    {0x2F97B,13092,4}, {0x2F97C,13096,4}, {0x2F97D,13100,3}, {0x2F97E,13103,4},
    {0x2F97F,13107,3}, {0x2F980,13110,4}, {0x2F981,13114,3}, {0x2F982,13117,3},
    {0x2F983,13120,3}, {0x2F984,13123,3}, {0x2F985,13126,3}, {0x2F986,13129,3},
    {0x2F987,13132,4}, {0x2F988,13136,4}, {0x2F989,13140,4}, {0x2F98A,13144,4},
    {0x2F98B,13148,3}, {0x2F98C,13151,3}, {0x2F98D,13154,3}, {0x2F98E,13157,3},
    {0x2F98F,13160,3}, {0x2F990,13163,3}, {0x2F991,13166,3}, {0x2F992,13169,3},
    {0x2F993,13172,3}, {0x2F994,13175,3}, {0x2F995,13178,3}, {0x2F996,13181,3},
    {0x2F997,13184,4}, {0x2F998,13188,3}, {0x2F999,13191,3}, {0x2F99A,13194,3},
    {0x2F99B,13197,3}, {0x2F99C,13200,3}, {0x2F99D,13203,3}, {0x2F99E,13206,3},
    {0x2F99F,13209,3}, {0x2F9A0,13212,3}, {0x2F9A1,13215,3}, {0x2F9A2,13218,3},
    {0x2F9A3,13221,3}, {0x2F9A4,13224,4}, {0x2F9A5,13228,4}, {0x2F9A6,13232,4},
    {0x2F9A7,13236,3}, {0x2F9A8,13239,3}, {0x2F9A9,13242,3}, {0x2F9AA,13245,3},
    {0x2F9AB,13248,4}, {0x2F9AC,13252,3}, {0x2F9AD,13255,4}, {0x2F9AE,13259,3},
    {0x2F9AF,13262,3}, {0x2F9B0,13265,4}, {0x2F9B1,13269,4}, {0x2F9B2,13273,3},
    {0x2F9B3,13276,3}, {0x2F9B4,13279,3}, {0x2F9B5,13282,3}, {0x2F9B6,13285,3},
    {0x2F9B7,13288,3}, {0x2F9B8,13291,3}, {0x2F9B9,13294,3}, {0x2F9BA,13297,3},
    {0x2F9BB,13300,3}, {0x2F9BC,13303,3}, {0x2F9BD,13306,3}, {0x2F9BE,13309,3},
    {0x2F9BF,13312,3}, {0x2F9C0,13315,3}, {0x2F9C1,13318,3}, {0x2F9C2,13321,3},
    {0x2F9C3,13324,3}, {0x2F9C4,13327,3}, {0x2F9C5,13330,4}, {0x2F9C6,13334,3},
    {0x2F9C7,13337,3}, {0x2F9C8,13340,3}, {0x2F9C9,13343,3}, {0x2F9CA,13346,3},
    {0x2F9CB,13349,4}, {0x2F9CC,13353,4}, {0x2F9CD,13357,3}, {0x2F9CE,13360,3},
    {0x2F9CF,13363,3}, {0x2F9D0,13366,3}, {0x2F9D1,13369,3}, {0x2F9D2,13372,3},
    {0x2F9D3,13375,4}, {0x2F9D4,13379,3}, {0x2F9D5,13382,3}, {0x2F9D6,13385,3},
    {0x2F9D7,13388,3}, {0x2F9D8,13391,4}, {0x2F9D9,13395,4}, {0x2F9DA,13399,3},
    {0x2F9DB,13402,3}, {0x2F9DC,13405,3}, {0x2F9DD,13408,4}, {0x2F9DE,13412,3},
    {0x2F9DF,13415,3}, {0x2F9E0,13418,4}, {0x2F9E1,13422,4}, {0x2F9E2,13426,3},
    {0x2F9E3,13429,3}, {0x2F9E4,13432,3}, {0x2F9E5,13435,4}, {0x2F9E6,13439,3},
    {0x2F9E7,13442,3}, {0x2F9E8,13445,3}, {0x2F9E9,13448,3}, {0x2F9EA,13451,3},
    {0x2F9EB,13454,3}, {0x2F9EC,13457,3}, {0x2F9ED,13460,4}, {0x2F9EE,13464,3},
    {0x2F9EF,13467,3}, {0x2F9F0,13470,3}, {0x2F9F1,13473,4}, {0x2F9F2,13477,3},
    {0x2F9F3,13480,3}, {0x2F9F4,13483,3}, {0x2F9F5,13486,3}, {0x2F9F6,13489,4},
    {0x2F9F7,13493,4}, {0x2F9F8,13497,3}, {0x2F9F9,13500,3}, {0x2F9FA,13503,3},
    {0x2F9FB,13506,4}, {0x2F9FC,13510,3}, {0x2F9FD,13513,4}, {0x2F9FE,13517,3},
    {0x2F9FF,13520,3}, {0x2FA00,13523,3}, {0x2FA01,13526,4}, {0x2FA02,13530,3},
    {0x2FA03,13533,3}, {0x2FA04,13536,3}, {0x2FA05,13539,3}, {0x2FA06,13542,3},
    {0x2FA07,13545,3}, {0x2FA08,13548,3}, {0x2FA09,13551,4}, {0x2FA0A,13555,3},
    {0x2FA0B,13558,3}, {0x2FA0C,13561,3}, {0x2FA0D,13564,3}, {0x2FA0E,13567,3},
    {0x2FA0F,13570,3}, {0x2FA10,13573,4}, {0x2FA11,13577,3}, {0x2FA12,13580,4},
    {0x2FA13,13584,4}, {0x2FA14,13588,4}, {0x2FA15,13592,3}, {0x2FA16,13595,3},
    {0x2FA17,13598,3}, {0x2FA18,13601,3}, {0x2FA19,13604,3}, {0x2FA1A,13607,3},
    {0x2FA1B,13610,3}, {0x2FA1C,13613,3}, {0x2FA1D,13616,4},
};

const char kNfkcPool[13620] = {
    32,32,-52,-120,97,32,-52,-124,50,51,32,-52,-127,-50,-68,32,-52,-89,49,111,
    49,-30,-127,-124,52,49,-30,-127,-124,50,51,-30,-127,-124,52,73,74,105,106,76,
    -62,-73,108,-62,-73,-54,-68,110,115,68,-59,-67,68,-59,-66,100,-59,-66,76,74,
    76,106,108,106,78,74,78,106,110,106,68,90,68,122,100,122,104,-55,-90,106,
    114,-55,-71,-55,-69,-54,-127,119,121,32,-52,-122,32,-52,-121,32,-52,-118,32,-52,
    -88,32,-52,-125,32,-52,-117,-55,-93,108,115,120,-54,-107,-52,-128,-52,-127,-52,-109,
    -52,-120,-52,-127,-54,-71,32,-51,-123,59,32,-52,-127,32,-52,-120,-52,-127,-62,-73,
    -50,-78,-50,-72,-50,-91,-50,-114,-50,-85,-49,-122,-49,-128,-50,-70,-49,-127,-49,-126,
    -50,-104,-50,-75,-50,-93,-43,-91,-42,-126,-40,-89,-39,-76,-39,-120,-39,-76,-37,-121,
    -39,-76,-39,-118,-39,-76,-32,-92,-107,-32,-92,-68,-32,-92,-106,-32,-92,-68,-32,-92,
    -105,-32,-92,-68,-32,-92,-100,-32,-92,-68,-32,-92,-95,-32,-92,-68,-32,-92,-94,-32,
    -92,-68,-32,-92,-85,-32,-92,-68,-32,-92,-81,-32,-92,-68,-32,-90,-95,-32,-90,-68,
    -32,-90,-94,-32,-90,-68,-32,-90,-81,-32,-90,-68,-32,-88,-78,-32,-88,-68,-32,-88,
    -72,-32,-88,-68,-32,-88,-106,-32,-88,-68,-32,-88,-105,-32,-88,-68,-32,-88,-100,-32,
    -88,-68,-32,-88,-85,-32,-88,-68,-32,-84,-95,-32,-84,-68,-32,-84,-94,-32,-84,-68,
    -32,-71,-115,-32,-72,-78,-32,-69,-115,-32,-70,-78,-32,-70,-85,-32,-70,-103,-32,-70,
    -85,-32,-70,-95,-32,-68,-117,-32,-67,-126,-32,-66,-73,-32,-67,-116,-32,-66,-73,-32,
    -67,-111,-32,-66,-73,-32,-67,-106,-32,-66,-73,-32,-67,-101,-32,-66,-73,-32,-67,-128,
    -32,-66,-75,-32,-67,-79,-32,-67,-78,-32,-67,-79,-32,-67,-76,-32,-66,-78,-32,-66,
    -128,-32,-66,-78,-32,-67,-79,-32,-66,-128,-32,-66,-77,-32,-66,-128,-32,-66,-77,-32,
    -67,-79,-32,-66,-128,-32,-67,-79,-32,-66,-128,-32,-66,-110,-32,-66,-73,-32,-66,-100,
    -32,-66,-73,-32,-66,-95,-32,-66,-73,-32,-66,-90,-32,-66,-73,-32,-66,-85,-32,-66,
    -73,-32,-66,-112,-32,-66,-75,-31,-125,-100,65,-61,-122,66,68,69,-58,-114,71,72,
    73,74,75,76,77,78,79,-56,-94,80,82,84,85,87,97,-55,-112,-55,-111,-31,
    -76,-126,98,100,101,-55,-103,-55,-101,-55,-100,103,107,109,-59,-117,111,-55,-108,-31,
    -76,-106,-31,-76,-105,112,116,117,-31,-76,-99,-55,-81,118,-31,-76,-91,-50,-78,-50,
    -77,-50,-76,-49,-122,-49,-121,105,114,117,118,-50,-78,-50,-77,-49,-127,-49,-122,-49,
    -121,-48,-67,-55,-110,99,-55,-107,-61,-80,-55,-100,102,-55,-97,-55,-95,-55,-91,-55,
    -88,-55,-87,-55,-86,-31,-75,-69,-54,-99,-55,-83,-31,-74,-123,-54,-97,-55,-79,-55,
    -80,-55,-78,-55,-77,-55,-76,-55,-75,-55,-72,-54,-126,-54,-125,-58,-85,-54,-119,-54,
    -118,-31,-76,-100,-54,-117,-54,-116,122,-54,-112,-54,-111,-54,-110,-50,-72,97,-54,-66,
    -31,-71,-95,-50,-84,-50,-83,-50,-82,-50,-81,-49,-116,-49,-115,-49,-114,-50,-122,32,
    -52,-109,-50,-71,32,-52,-109,32,-51,-126,32,-52,-120,-51,-126,-50,-120,-50,-119,32,
    -52,-109,-52,-128,32,-52,-109,-52,-127,32,-52,-109,-51,-126,-50,-112,-50,-118,32,-52,
    -108,-52,-128,32,-52,-108,-52,-127,32,-52,-108,-51,-126,-50,-80,-50,-114,32,-52,-120,
    -52,-128,32,-52,-120,-52,-127,96,-50,-116,-50,-113,32,-52,-127,32,-52,-108,32,32,
    32,32,32,32,32,32,32,32,32,-30,-128,-112,32,-52,-77,46,46,46,46,46,
    46,32,-30,-128,-78,-30,-128,-78,-30,-128,-78,-30,-128,-78,-30,-128,-78,-30,-128,-75,
    -30,-128,-75,-30,-128,-75,-30,-128,-75,-30,-128,-75,33,33,32,-52,-123,63,63,63,
    33,33,63,-30,-128,-78,-30,-128,-78,-30,-128,-78,-30,-128,-78,32,48,105,52,53,
    54,55,56,57,43,-30,-120,-110,61,40,41,110,48,49,50,51,52,53,54,55,
    56,57,43,-30,-120,-110,61,40,41,97,101,111,120,-55,-103,104,107,108,109,110,
    112,115,116,82,115,97,47,99,97,47,115,67,-62,-80,67,99,47,111,99,47,
    117,-58,-112,-62,-80,70,103,72,72,72,104,-60,-89,73,73,76,108,78,78,111,
    80,81,82,82,82,83,77,84,69,76,84,77,90,-50,-87,90,75,-61,-123,66,
    67,101,69,70,77,111,-41,-112,-41,-111,-41,-110,-41,-109,105,70,65,88,-49,-128,
    -50,-77,-50,-109,-50,-96,-30,-120,-111,68,100,101,105,106,49,-30,-127,-124,55,49,
    -30,-127,-124,57,49,-30,-127,-124,49,48,49,-30,-127,-124,51,50,-30,-127,-124,51,
    49,-30,-127,-124,53,50,-30,-127,-124,53,51,-30,-127,-124,53,52,-30,-127,-124,53,
    49,-30,-127,-124,54,53,-30,-127,-124,54,49,-30,-127,-124,56,51,-30,-127,-124,56,
    53,-30,-127,-124,56,55,-30,-127,-124,56,49,-30,-127,-124,73,73,73,73,73,73,
    73,86,86,86,73,86,73,73,86,73,73,73,73,88,88,88,73,88,73,73,
    76,67,68,77,105,105,105,105,105,105,105,118,118,118,105,118,105,105,118,105,
    105,105,105,120,120,120,105,120,105,105,108,99,100,109,48,-30,-127,-124,51,-30,
    -120,-85,-30,-120,-85,-30,-120,-85,-30,-120,-85,-30,-120,-85,-30,-120,-82,-30,-120,-82,
    -30,-120,-82,-30,-120,-82,-30,-120,-82,-29,-128,-120,-29,-128,-119,49,50,51,52,53,
    54,55,56,57,49,48,49,49,49,50,49,51,49,52,49,53,49,54,49,55,
    49,56,49,57,50,48,40,49,41,40,50,41,40,51,41,40,52,41,40,53,
    41,40,54,41,40,55,41,40,56,41,40,57,41,40,49,48,41,40,49,49,
    41,40,49,50,41,40,49,51,41,40,49,52,41,40,49,53,41,40,49,54,
    41,40,49,55,41,40,49,56,41,40,49,57,41,40,50,48,41,49,46,50,
    46,51,46,52,46,53,46,54,46,55,46,56,46,57,46,49,48,46,49,49,
    46,49,50,46,49,51,46,49,52,46,49,53,46,49,54,46,49,55,46,49,
    56,46,49,57,46,50,48,46,40,97,41,40,98,41,40,99,41,40,100,41,
    40,101,41,40,102,41,40,103,41,40,104,41,40,105,41,40,106,41,40,107,
    41,40,108,41,40,109,41,40,110,41,40,111,41,40,112,41,40,113,41,40,
    114,41,40,115,41,40,116,41,40,117,41,40,118,41,40,119,41,40,120,41,
    40,121,41,40,122,41,65,66,67,68,69,70,71,72,73,74,75,76,77,78,
    79,80,81,82,83,84,85,86,87,88,89,90,97,98,99,100,101,102,103,104,
    105,106,107,108,109,110,111,112,113,114,115,116,117,118,119,120,121,122,48,-30,
    -120,-85,-30,-120,-85,-30,-120,-85,-30,-120,-85,58,58,61,61,61,61,61,61,-30,
    -85,-99,-52,-72,106,86,-30,-75,-95,-26,-81,-115,-23,-66,-97,-28,-72,-128,-28,-72,
    -88,-28,-72,-74,-28,-72,-65,-28,-71,-103,-28,-70,-123,-28,-70,-116,-28,-70,-96,-28,
    -70,-70,-27,-124,-65,-27,-123,-91,-27,-123,-85,-27,-122,-126,-27,-122,-106,-27,-122,-85,
    -27,-121,-96,-27,-121,-75,-27,-120,-128,-27,-118,-101,-27,-117,-71,-27,-116,-107,-27,-116,
    -102,-27,-116,-72,-27,-115,-127,-27,-115,-100,-27,-115,-87,-27,-114,-126,-27,-114,-74,-27,
    -113,-120,-27,-113,-93,-27,-101,-105,-27,-100,-97,-27,-93,-85,-27,-92,-126,-27,-92,-118,
    -27,-92,-107,-27,-92,-89,-27,-91,-77,-27,-83,-112,-27,-82,-128,-27,-81,-72,-27,-80,
    -113,-27,-80,-94,-27,-80,-72,-27,-79,-82,-27,-79,-79,-27,-73,-101,-27,-73,-91,-27,
    -73,-79,-27,-73,-66,-27,-71,-78,-27,-71,-70,-27,-71,-65,-27,-69,-76,-27,-69,-66,
    -27,-68,-117,-27,-68,-109,-27,-67,-112,-27,-67,-95,-27,-67,-77,-27,-65,-125,-26,-120,
    -120,-26,-120,-74,-26,-119,-117,-26,-108,-81,-26,-108,-76,-26,-106,-121,-26,-106,-105,-26,
    -106,-92,-26,-106,-71,-26,-105,-96,-26,-105,-91,-26,-101,-80,-26,-100,-120,-26,-100,-88,
    -26,-84,-96,-26,-83,-94,-26,-83,-71,-26,-82,-77,-26,-81,-117,-26,-81,-108,-26,-81,
    -101,-26,-80,-113,-26,-80,-108,-26,-80,-76,-25,-127,-85,-25,-120,-86,-25,-120,-74,-25,
    -120,-69,-25,-120,-65,-25,-119,-121,-25,-119,-103,-25,-119,-101,-25,-118,-84,-25,-114,-124,
    -25,-114,-119,-25,-109,-100,-25,-109,-90,-25,-108,-104,-25,-108,-97,-25,-108,-88,-25,-108,
    -80,-25,-106,-117,-25,-106,-110,-25,-103,-74,-25,-103,-67,-25,-102,-82,-25,-102,-65,-25,
    -101,-82,-25,-97,-101,-25,-97,-94,-25,-97,-77,-25,-92,-70,-25,-90,-72,-25,-90,-66,
    -25,-87,-76,-25,-85,-117,-25,-85,-71,-25,-79,-77,-25,-77,-72,-25,-68,-74,-25,-67,
    -111,-25,-66,-118,-25,-66,-67,-24,-128,-127,-24,-128,-116,-24,-128,-110,-24,-128,-77,-24,
    -127,-65,-24,-126,-119,-24,-121,-93,-24,-121,-86,-24,-121,-77,-24,-121,-68,-24,-120,-116,
    -24,-120,-101,-24,-120,-97,-24,-119,-82,-24,-119,-78,-24,-119,-72,-24,-103,-115,-24,-103,
    -85,-24,-95,-128,-24,-95,-116,-24,-95,-93,-24,-91,-66,-24,-90,-117,-24,-89,-110,-24,
    -88,-128,-24,-80,-73,-24,-79,-122,-24,-79,-107,-24,-79,-72,-24,-78,-99,-24,-75,-92,
    -24,-75,-80,-24,-74,-77,-24,-70,-85,-24,-69,-118,-24,-66,-101,-24,-66,-80,-24,-66,
    -75,-23,-126,-111,-23,-123,-119,-23,-121,-122,-23,-121,-116,-23,-121,-111,-23,-107,-73,-23,
    -106,-128,-23,-104,-100,-23,-102,-74,-23,-102,-71,-23,-101,-88,-23,-99,-111,-23,-99,-98,
    -23,-99,-94,-23,-99,-87,-23,-97,-117,-23,-97,-83,-23,-97,-77,-23,-96,-127,-23,-94,
    -88,-23,-93,-101,-23,-93,-97,-23,-90,-106,-23,-90,-103,-23,-90,-84,-23,-86,-88,-23,
    -85,-104,-23,-85,-97,-23,-84,-91,-23,-84,-81,-23,-84,-78,-23,-84,-68,-23,-83,-102,
    -23,-77,-91,-23,-71,-75,-23,-71,-65,-23,-70,-91,-23,-70,-69,-23,-69,-125,-23,-69,
    -115,-23,-69,-111,-23,-69,-71,-23,-69,-67,-23,-68,-114,-23,-68,-109,-23,-68,-96,-23,
    -68,-69,-23,-67,-118,-23,-67,-110,-23,-66,-115,-23,-66,-100,-23,-66,-96,32,-29,-128,
    -110,-27,-115,-127,-27,-115,-124,-27,-115,-123,32,-29,-126,-103,32,-29,-126,-102,-29,-126,
    -120,-29,-126,-118,-29,-126,-77,-29,-125,-120,-31,-124,-128,-31,-124,-127,-31,-122,-86,-31,
    -124,-126,-31,-122,-84,-31,-122,-83,-31,-124,-125,-31,-124,-124,-31,-124,-123,-31,-122,-80,
    -31,-122,-79,-31,-122,-78,-31,-122,-77,-31,-122,-76,-31,-122,-75,-31,-124,-102,-31,-124,
    -122,-31,-124,-121,-31,-124,-120,-31,-124,-95,-31,-124,-119,-31,-124,-118,-31,-124,-117,-31,
    -124,-116,-31,-124,-115,-31,-124,-114,-31,-124,-113,-31,-124,-112,-31,-124,-111,-31,-124,-110,
    -31,-123,-95,-31,-123,-94,-31,-123,-93,-31,-123,-92,-31,-123,-91,-31,-123,-90,-31,-123,
    -89,-31,-123,-88,-31,-123,-87,-31,-123,-86,-31,-123,-85,-31,-123,-84,-31,-123,-83,-31,
    -123,-82,-31,-123,-81,-31,-123,-80,-31,-123,-79,-31,-123,-78,-31,-123,-77,-31,-123,-76,
    -31,-123,-75,-31,-123,-96,-31,-124,-108,-31,-124,-107,-31,-121,-121,-31,-121,-120,-31,-121,
    -116,-31,-121,-114,-31,-121,-109,-31,-121,-105,-31,-121,-103,-31,-124,-100,-31,-121,-99,-31,
    -121,-97,-31,-124,-99,-31,-124,-98,-31,-124,-96,-31,-124,-94,-31,-124,-93,-31,-124,-89,
    -31,-124,-87,-31,-124,-85,-31,-124,-84,-31,-124,-83,-31,-124,-82,-31,-124,-81,-31,-124,
    -78,-31,-124,-74,-31,-123,-128,-31,-123,-121,-31,-123,-116,-31,-121,-79,-31,-121,-78,-31,
    -123,-105,-31,-123,-104,-31,-123,-103,-31,-122,-124,-31,-122,-123,-31,-122,-120,-31,-122,-111,
    -31,-122,-110,-31,-122,-108,-31,-122,-98,-31,-122,-95,-28,-72,-128,-28,-70,-116,-28,-72,
    -119,-27,-101,-101,-28,-72,-118,-28,-72,-83,-28,-72,-117,-25,-108,-78,-28,-71,-103,-28,
    -72,-103,-28,-72,-127,-27,-92,-87,-27,-100,-80,-28,-70,-70,40,-31,-124,-128,41,40,
    -31,-124,-126,41,40,-31,-124,-125,41,40,-31,-124,-123,41,40,-31,-124,-122,41,40,
    -31,-124,-121,41,40,-31,-124,-119,41,40,-31,-124,-117,41,40,-31,-124,-116,41,40,
    -31,-124,-114,41,40,-31,-124,-113,41,40,-31,-124,-112,41,40,-31,-124,-111,41,40,
    -31,-124,-110,41,40,-22,-80,-128,41,40,-21,-126,-104,41,40,-21,-117,-92,41,40,
    -21,-99,-68,41,40,-21,-89,-120,41,40,-21,-80,-108,41,40,-20,-126,-84,41,40,
    -20,-107,-124,41,40,-20,-98,-112,41,40,-20,-80,-88,41,40,-20,-71,-76,41,40,
    -19,-125,-128,41,40,-19,-116,-116,41,40,-19,-107,-104,41,40,-20,-93,-68,41,40,
    -20,-104,-92,-20,-96,-124,41,40,-20,-104,-92,-19,-101,-124,41,40,-28,-72,-128,41,
    40,-28,-70,-116,41,40,-28,-72,-119,41,40,-27,-101,-101,41,40,-28,-70,-108,41,
    40,-27,-123,-83,41,40,-28,-72,-125,41,40,-27,-123,-85,41,40,-28,-71,-99,41,
    40,-27,-115,-127,41,40,-26,-100,-120,41,40,-25,-127,-85,41,40,-26,-80,-76,41,
    40,-26,-100,-88,41,40,-23,-121,-111,41,40,-27,-100,-97,41,40,-26,-105,-91,41,
    40,-26,-96,-86,41,40,-26,-100,-119,41,40,-25,-92,-66,41,40,-27,-112,-115,41,
    40,-25,-119,-71,41,40,-24,-78,-95,41,40,-25,-91,-99,41,40,-27,-118,-76,41,
    40,-28,-69,-93,41,40,-27,-111,-68,41,40,-27,-83,-90,41,40,-25,-101,-93,41,
    40,-28,-68,-127,41,40,-24,-77,-121,41,40,-27,-115,-108,41,40,-25,-91,-83,41,
    40,-28,-68,-111,41,40,-24,-121,-86,41,40,-24,-121,-77,41,-27,-107,-113,-27,-71,
    -68,-26,-106,-121,-25,-82,-113,80,84,69,50,49,50,50,50,51,50,52,50,53,
    50,54,50,55,50,56,50,57,51,48,51,49,51,50,51,51,51,52,51,53,
    -31,-124,-128,-31,-124,-126,-31,-124,-125,-31,-124,-123,-31,-124,-122,-31,-124,-121,-31,-124,
    -119,-31,-124,-117,-31,-124,-116,-31,-124,-114,-31,-124,-113,-31,-124,-112,-31,-124,-111,-31,
    -124,-110,-22,-80,-128,-21,-126,-104,-21,-117,-92,-21,-99,-68,-21,-89,-120,-21,-80,-108,
    -20,-126,-84,-20,-107,-124,-20,-98,-112,-20,-80,-88,-20,-71,-76,-19,-125,-128,-19,-116,
    -116,-19,-107,-104,-20,-80,-72,-22,-77,-96,-20,-93,-68,-20,-99,-104,-20,-102,-80,-28,
    -72,-128,-28,-70,-116,-28,-72,-119,-27,-101,-101,-28,-70,-108,-27,-123,-83,-28,-72,-125,
    -27,-123,-85,-28,-71,-99,-27,-115,-127,-26,-100,-120,-25,-127,-85,-26,-80,-76,-26,-100,
    -88,-23,-121,-111,-27,-100,-97,-26,-105,-91,-26,-96,-86,-26,-100,-119,-25,-92,-66,-27,
    -112,-115,-25,-119,-71,-24,-78,-95,-25,-91,-99,-27,-118,-76,-25,-89,-104,-25,-108,-73,
    -27,-91,-77,-23,-127,-87,-27,-124,-86,-27,-115,-80,-26,-77,-88,-23,-96,-123,-28,-68,
    -111,-27,-122,-103,-26,-83,-93,-28,-72,-118,-28,-72,-83,-28,-72,-117,-27,-73,-90,-27,
    -113,-77,-27,-116,-69,-27,-82,-105,-27,-83,-90,-25,-101,-93,-28,-68,-127,-24,-77,-121,
    -27,-115,-108,-27,-92,-100,51,54,51,55,51,56,51,57,52,48,52,49,52,50,
    52,51,52,52,52,53,52,54,52,55,52,56,52,57,53,48,49,-26,-100,-120,
    50,-26,-100,-120,51,-26,-100,-120,52,-26,-100,-120,53,-26,-100,-120,54,-26,-100,-120,
    55,-26,-100,-120,56,-26,-100,-120,57,-26,-100,-120,49,48,-26,-100,-120,49,49,-26,
    -100,-120,49,50,-26,-100,-120,72,103,101,114,103,101,86,76,84,68,-29,-126,-94,
    -29,-126,-92,-29,-126,-90,-29,-126,-88,-29,-126,-86,-29,-126,-85,-29,-126,-83,-29,-126,
    -81,-29,-126,-79,-29,-126,-77,-29,-126,-75,-29,-126,-73,-29,-126,-71,-29,-126,-69,-29,
    -126,-67,-29,-126,-65,-29,-125,-127,-29,-125,-124,-29,-125,-122,-29,-125,-120,-29,-125,-118,
    -29,-125,-117,-29,-125,-116,-29,-125,-115,-29,-125,-114,-29,-125,-113,-29,-125,-110,-29,-125,
    -107,-29,-125,-104,-29,-125,-101,-29,-125,-98,-29,-125,-97,-29,-125,-96,-29,-125,-95,-29,
    -125,-94,-29,-125,-92,-29,-125,-90,-29,-125,-88,-29,-125,-87,-29,-125,-86,-29,-125,-85,
    -29,-125,-84,-29,-125,-83,-29,-125,-81,-29,-125,-80,-29,-125,-79,-29,-125,-78,-28,-69,
    -92,-27,-110,-116,-29,-126,-94,-29,-125,-111,-29,-125,-68,-29,-125,-120,-29,-126,-94,-29,
    -125,-85,-29,-125,-107,-29,-126,-95,-29,-126,-94,-29,-125,-77,-29,-125,-102,-29,-126,-94,
    -29,-126,-94,-29,-125,-68,-29,-125,-85,-29,-126,-92,-29,-125,-117,-29,-125,-77,-29,-126,
    -80,-29,-126,-92,-29,-125,-77,-29,-125,-127,-29,-126,-90,-29,-126,-87,-29,-125,-77,-29,
    -126,-88,-29,-126,-71,-29,-126,-81,-29,-125,-68,-29,-125,-119,-29,-126,-88,-29,-125,-68,
    -29,-126,-85,-29,-125,-68,-29,-126,-86,-29,-125,-77,-29,-126,-71,-29,-126,-86,-29,-125,
    -68,-29,-125,-96,-29,-126,-85,-29,-126,-92,-29,-125,-86,-29,-126,-85,-29,-125,-87,-29,
    -125,-125,-29,-125,-120,-29,-126,-85,-29,-125,-83,-29,-125,-86,-29,-125,-68,-29,-126,-84,
    -29,-125,-83,-29,-125,-77,-29,-126,-84,-29,-125,-77,-29,-125,-98,-29,-126,-82,-29,-126,
    -84,-29,-126,-82,-29,-125,-117,-29,-125,-68,-29,-126,-83,-29,-125,-91,-29,-125,-86,-29,
    -125,-68,-29,-126,-82,-29,-125,-85,-29,-125,-128,-29,-125,-68,-29,-126,-83,-29,-125,-83,
    -29,-126,-83,-29,-125,-83,-29,-126,-80,-29,-125,-87,-29,-125,-96,-29,-126,-83,-29,-125,
    -83,-29,-125,-95,-29,-125,-68,-29,-125,-120,-29,-125,-85,-29,-126,-83,-29,-125,-83,-29,
    -125,-81,-29,-125,-125,-29,-125,-120,-29,-126,-80,-29,-125,-87,-29,-125,-96,-29,-126,-80,
    -29,-125,-87,-29,-125,-96,-29,-125,-120,-29,-125,-77,-29,-126,-81,-29,-125,-85,-29,-126,
    -68,-29,-126,-92,-29,-125,-83,-29,-126,-81,-29,-125,-83,-29,-125,-68,-29,-125,-115,-29,
    -126,-79,-29,-125,-68,-29,-126,-71,-29,-126,-77,-29,-125,-85,-29,-125,-118,-29,-126,-77,
    -29,-125,-68,-29,-125,-99,-29,-126,-75,-29,-126,-92,-29,-126,-81,-29,-125,-85,-29,-126,
    -75,-29,-125,-77,-29,-125,-127,-29,-125,-68,-29,-125,-96,-29,-126,-73,-29,-125,-86,-29,
    -125,-77,-29,-126,-80,-29,-126,-69,-29,-125,-77,-29,-125,-127,-29,-126,-69,-29,-125,-77,
    -29,-125,-120,-29,-125,-128,-29,-125,-68,-29,-126,-71,-29,-125,-121,-29,-126,-73,-29,-125,
    -119,-29,-125,-85,-29,-125,-120,-29,-125,-77,-29,-125,-118,-29,-125,-114,-29,-125,-114,-29,
    -125,-125,-29,-125,-120,-29,-125,-113,-29,-126,-92,-29,-125,-124,-29,-125,-111,-29,-125,-68,
    -29,-126,-69,-29,-125,-77,-29,-125,-120,-29,-125,-111,-29,-125,-68,-29,-125,-124,-29,-125,
    -112,-29,-125,-68,-29,-125,-84,-29,-125,-85,-29,-125,-108,-29,-126,-94,-29,-126,-71,-29,
    -125,-120,-29,-125,-85,-29,-125,-108,-29,-126,-81,-29,-125,-85,-29,-125,-108,-29,-126,-77,
    -29,-125,-109,-29,-125,-85,-29,-125,-107,-29,-126,-95,-29,-125,-87,-29,-125,-125,-29,-125,
    -119,-29,-125,-107,-29,-126,-93,-29,-125,-68,-29,-125,-120,-29,-125,-106,-29,-125,-125,-29,
    -126,-73,-29,-126,-89,-29,-125,-85,-29,-125,-107,-29,-125,-87,-29,-125,-77,-29,-125,-104,
    -29,-126,-81,-29,-126,-65,-29,-125,-68,-29,-125,-85,-29,-125,-102,-29,-126,-67,-29,-125,
    -102,-29,-125,-117,-29,-125,-110,-29,-125,-104,-29,-125,-85,-29,-125,-124,-29,-125,-102,-29,
    -125,-77,-29,-126,-71,-29,-125,-102,-29,-125,-68,-29,-126,-72,-29,-125,-103,-29,-125,-68,
    -29,-126,-65,-29,-125,-99,-29,-126,-92,-29,-125,-77,-29,-125,-120,-29,-125,-100,-29,-125,
    -85,-29,-125,-120,-29,-125,-101,-29,-125,-77,-29,-125,-99,-29,-125,-77,-29,-125,-119,-29,
    -125,-101,-29,-125,-68,-29,-125,-85,-29,-125,-101,-29,-125,-68,-29,-125,-77,-29,-125,-98,
    -29,-126,-92,-29,-126,-81,-29,-125,-83,-29,-125,-98,-29,-126,-92,-29,-125,-85,-29,-125,
    -98,-29,-125,-125,-29,-125,-113,-29,-125,-98,-29,-125,-85,-29,-126,-81,-29,-125,-98,-29,
    -125,-77,-29,-126,-73,-29,-125,-89,-29,-125,-77,-29,-125,-97,-29,-126,-81,-29,-125,-83,
    -29,-125,-77,-29,-125,-97,-29,-125,-86,-29,-125,-97,-29,-125,-86,-29,-125,-112,-29,-125,
    -68,-29,-125,-85,-29,-125,-95,-29,-126,-84,-29,-125,-95,-29,-126,-84,-29,-125,-120,-29,
    -125,-77,-29,-125,-95,-29,-125,-68,-29,-125,-120,-29,-125,-85,-29,-125,-92,-29,-125,-68,
    -29,-125,-119,-29,-125,-92,-29,-125,-68,-29,-125,-85,-29,-125,-90,-29,-126,-94,-29,-125,
    -77,-29,-125,-86,-29,-125,-125,-29,-125,-120,-29,-125,-85,-29,-125,-86,-29,-125,-87,-29,
    -125,-85,-29,-125,-108,-29,-125,-68,-29,-125,-85,-29,-125,-68,-29,-125,-106,-29,-125,-85,
    -29,-125,-84,-29,-125,-96,-29,-125,-84,-29,-125,-77,-29,-125,-120,-29,-126,-78,-29,-125,
    -77,-29,-125,-81,-29,-125,-125,-29,-125,-120,48,-25,-126,-71,49,-25,-126,-71,50,-25,
    -126,-71,51,-25,-126,-71,52,-25,-126,-71,53,-25,-126,-71,54,-25,-126,-71,55,-25,
    -126,-71,56,-25,-126,-71,57,-25,-126,-71,49,48,-25,-126,-71,49,49,-25,-126,-71,
    49,50,-25,-126,-71,49,51,-25,-126,-71,49,52,-25,-126,-71,49,53,-25,-126,-71,
    49,54,-25,-126,-71,49,55,-25,-126,-71,49,56,-25,-126,-71,49,57,-25,-126,-71,
    50,48,-25,-126,-71,50,49,-25,-126,-71,50,50,-25,-126,-71,50,51,-25,-126,-71,
    50,52,-25,-126,-71,104,80,97,100,97,65,85,98,97,114,111,86,112,99,100,
    109,100,109,50,100,109,51,73,85,-27,-71,-77,-26,-120,-112,-26,-104,-83,-27,-110,
    -116,-27,-92,-89,-26,-83,-93,-26,-104,-114,-26,-78,-69,-26,-96,-86,-27,-68,-113,-28,
    -68,-102,-25,-92,-66,112,65,110,65,-50,-68,65,109,65,107,65,75,66,77,66,
    71,66,99,97,108,107,99,97,108,112,70,110,70,-50,-68,70,-50,-68,103,109,
    103,107,103,72,122,107,72,122,77,72,122,71,72,122,84,72,122,-50,-68,108,
    109,108,100,108,107,108,102,109,110,109,-50,-68,109,109,109,99,109,107,109,109,
    109,50,99,109,50,109,50,107,109,50,109,109,51,99,109,51,109,51,107,109,
    51,109,-30,-120,-107,115,109,-30,-120,-107,115,50,80,97,107,80,97,77,80,97,
    71,80,97,114,97,100,114,97,100,-30,-120,-107,115,114,97,100,-30,-120,-107,115,
    50,112,115,110,115,-50,-68,115,109,115,112,86,110,86,-50,-68,86,109,86,107,
    86,77,86,112,87,110,87,-50,-68,87,109,87,107,87,77,87,107,-50,-87,77,
    -50,-87,97,46,109,46,66,113,99,99,99,100,67,-30,-120,-107,107,103,67,111,
    46,100,66,71,121,104,97,72,80,105,110,75,75,75,77,107,116,108,109,108,
    110,108,111,103,108,120,109,98,109,105,108,109,111,108,80,72,112,46,109,46,
    80,80,77,80,82,115,114,83,118,87,98,86,-30,-120,-107,109,65,-30,-120,-107,
    109,49,-26,-105,-91,50,-26,-105,-91,51,-26,-105,-91,52,-26,-105,-91,53,-26,-105,
    -91,54,-26,-105,-91,55,-26,-105,-91,56,-26,-105,-91,57,-26,-105,-91,49,48,-26,
    -105,-91,49,49,-26,-105,-91,49,50,-26,-105,-91,49,51,-26,-105,-91,49,52,-26,
    -105,-91,49,53,-26,-105,-91,49,54,-26,-105,-91,49,55,-26,-105,-91,49,56,-26,
    -105,-91,49,57,-26,-105,-91,50,48,-26,-105,-91,50,49,-26,-105,-91,50,50,-26,
    -105,-91,50,51,-26,-105,-91,50,52,-26,-105,-91,50,53,-26,-105,-91,50,54,-26,
    -105,-91,50,55,-26,-105,-91,50,56,-26,-105,-91,50,57,-26,-105,-91,51,48,-26,
    -105,-91,51,49,-26,-105,-91,103,97,108,-47,-118,-47,-116,-22,-99,-81,-60,-90,-59,
    -109,-22,-100,-89,-22,-84,-73,-55,-85,-22,-83,-110,-54,-115,-24,-79,-120,-26,-101,-76,
    -24,-69,-118,-24,-77,-120,-26,-69,-111,-28,-72,-78,-27,-113,-91,-23,-66,-100,-23,-66,
    -100,-27,-91,-111,-23,-121,-111,-27,-106,-121,-27,-91,-120,-26,-121,-74,-25,-103,-87,-25,
    -66,-123,-24,-104,-65,-24,-98,-70,-24,-93,-72,-23,-126,-113,-26,-88,-126,-26,-76,-101,
    -25,-125,-103,-25,-113,-98,-24,-112,-67,-23,-123,-86,-23,-89,-79,-28,-70,-126,-27,-115,
    -75,-26,-84,-124,-25,-120,-101,-24,-104,-83,-23,-72,-98,-27,-75,-112,-26,-65,-85,-24,
    -105,-115,-24,-91,-92,-26,-117,-119,-24,-121,-104,-24,-96,-97,-27,-69,-118,-26,-100,-105,
    -26,-75,-86,-25,-117,-68,-23,-125,-114,-28,-66,-122,-27,-122,-73,-27,-117,-98,-26,-109,
    -124,-26,-85,-109,-25,-120,-112,-25,-101,-89,-24,-128,-127,-24,-104,-122,-24,-103,-100,-24,
    -73,-81,-23,-100,-78,-23,-83,-81,-23,-73,-70,-25,-94,-116,-25,-91,-65,-25,-74,-96,
    -24,-113,-119,-23,-116,-124,-23,-71,-65,-24,-85,-106,-27,-93,-97,-27,-68,-124,-25,-79,
    -96,-24,-127,-66,-25,-119,-94,-25,-93,-118,-24,-77,-126,-23,-101,-73,-27,-93,-104,-27,
    -79,-94,-26,-88,-109,-26,-73,-102,-26,-68,-113,-25,-76,-81,-25,-72,-73,-23,-103,-117,
    -27,-117,-110,-24,-126,-117,-27,-121,-100,-27,-121,-116,-25,-88,-100,-25,-74,-66,-24,-113,
    -79,-23,-103,-75,-24,-82,-128,-26,-117,-113,-26,-88,-126,-24,-85,-66,-28,-72,-71,-27,
    -81,-89,-26,-128,-110,-25,-114,-121,-25,-107,-80,-27,-116,-105,-25,-93,-69,-28,-66,-65,
    -27,-66,-87,-28,-72,-115,-26,-77,-116,-26,-107,-72,-25,-76,-94,-27,-113,-125,-27,-95,
    -98,-25,-100,-127,-24,-111,-119,-24,-86,-86,-26,-82,-70,-24,-66,-80,-26,-78,-120,-26,
    -117,-66,-24,-117,-91,-26,-114,-96,-25,-107,-91,-28,-70,-82,-27,-123,-87,-27,-121,-119,
    -26,-94,-127,-25,-77,-89,-24,-119,-81,-24,-85,-110,-23,-121,-113,-27,-117,-75,-27,-111,
    -126,-27,-91,-77,-27,-69,-84,-26,-105,-123,-26,-65,-66,-25,-92,-86,-23,-106,-83,-23,
    -87,-86,-23,-70,-105,-23,-69,-114,-27,-118,-101,-26,-101,-122,-26,-83,-73,-24,-67,-94,
    -27,-71,-76,-26,-122,-112,-26,-120,-128,-26,-110,-102,-26,-68,-93,-25,-123,-119,-25,-110,
    -119,-25,-89,-118,-25,-73,-76,-24,-127,-81,-24,-68,-90,-24,-109,-82,-23,-128,-93,-23,
    -115,-118,-27,-120,-105,-27,-118,-93,-27,-110,-67,-25,-125,-120,-24,-93,-126,-24,-86,-86,
    -27,-69,-119,-27,-65,-75,-26,-115,-69,-26,-82,-82,-25,-80,-66,-25,-115,-75,-28,-69,
    -92,-27,-101,-71,-27,-81,-89,-27,-74,-70,-26,-128,-100,-25,-114,-78,-25,-111,-87,-25,
    -66,-102,-24,-127,-122,-23,-120,-76,-23,-101,-74,-23,-99,-120,-23,-96,-104,-28,-66,-117,
    -25,-90,-82,-23,-122,-76,-23,-102,-72,-26,-125,-95,-28,-70,-122,-27,-125,-102,-27,-81,
    -82,-27,-80,-65,-26,-106,-103,-26,-88,-126,-25,-121,-114,-25,-103,-126,-24,-109,-68,-23,
    -127,-68,-23,-66,-115,-26,-102,-120,-23,-104,-82,-27,-118,-119,-26,-99,-69,-26,-97,-77,
    -26,-75,-127,-26,-70,-100,-25,-112,-119,-25,-107,-103,-25,-95,-85,-25,-76,-112,-23,-95,
    -98,-27,-123,-83,-26,-120,-82,-23,-103,-72,-27,-128,-85,-27,-76,-103,-26,-73,-86,-24,
    -68,-86,-27,-66,-117,-26,-123,-124,-26,-96,-105,-25,-114,-121,-23,-102,-122,-27,-120,-87,
    -27,-112,-113,-27,-79,-91,-26,-104,-109,-26,-99,-114,-26,-94,-88,-26,-77,-91,-25,-112,
    -122,-25,-105,-94,-25,-67,-71,-24,-93,-113,-24,-93,-95,-23,-121,-116,-23,-101,-94,-27,
    -116,-65,-26,-70,-70,-27,-112,-99,-25,-121,-112,-25,-110,-104,-24,-105,-70,-23,-102,-93,
    -23,-79,-105,-23,-70,-97,-26,-98,-105,-26,-73,-117,-24,-121,-88,-25,-85,-117,-25,-84,
    -96,-25,-78,-110,-25,-117,-128,-25,-126,-103,-24,-83,-104,-28,-69,-128,-24,-116,-74,-27,
    -120,-70,-27,-120,-121,-27,-70,-90,-26,-117,-109,-25,-77,-106,-27,-82,-123,-26,-76,-98,
    -26,-102,-76,-24,-68,-69,-24,-95,-116,-23,-103,-115,-24,-90,-117,-27,-69,-109,-27,-123,
    -128,-27,-105,-128,-27,-95,-102,-26,-103,-76,-27,-121,-98,-25,-116,-86,-25,-101,-118,-25,
    -92,-68,-25,-91,-98,-25,-91,-91,-25,-90,-113,-23,-99,-106,-25,-78,-66,-25,-66,-67,
    -24,-104,-110,-24,-85,-72,-23,-128,-72,-23,-125,-67,-23,-93,-81,-23,-93,-68,-23,-92,
    -88,-23,-74,-76,-23,-125,-98,-23,-102,-73,-28,-66,-82,-27,-125,-89,-27,-123,-115,-27,
    -117,-119,-27,-117,-92,-27,-115,-111,-27,-106,-99,-27,-104,-122,-27,-103,-88,-27,-95,-128,
    -27,-94,-88,-27,-79,-92,-27,-79,-82,-26,-126,-108,-26,-123,-88,-26,-122,-114,-26,-121,
    -78,-26,-107,-113,-26,-105,-94,-26,-102,-111,-26,-94,-123,-26,-75,-73,-26,-72,-102,-26,
    -68,-94,-25,-123,-82,-25,-120,-85,-25,-112,-94,-25,-94,-111,-25,-92,-66,-25,-91,-119,
    -25,-91,-120,-25,-91,-112,-25,-91,-106,-25,-91,-99,-25,-90,-115,-25,-90,-114,-25,-87,
    -128,-25,-86,-127,-25,-81,-128,-25,-73,-76,-25,-72,-119,-25,-71,-127,-25,-67,-78,-24,
    -128,-123,-24,-121,-83,-24,-119,-71,-24,-119,-71,-24,-111,-105,-24,-92,-112,-24,-90,-106,
    -24,-84,-127,-24,-84,-71,-24,-77,-109,-24,-76,-120,-24,-66,-74,-23,-128,-72,-23,-101,
    -93,-23,-97,-65,-23,-96,-69,-26,-127,-75,-16,-92,-117,-82,-24,-120,-104,-28,-72,-90,
    -27,-122,-75,-27,-123,-88,-28,-66,-128,-27,-123,-123,-27,-122,-128,-27,-117,-121,-27,-117,
    -70,-27,-106,-99,-27,-107,-107,-27,-106,-103,-27,-105,-94,-27,-95,-102,-27,-94,-77,-27,
    -91,-124,-27,-91,-108,-27,-87,-94,-27,-84,-88,-27,-69,-110,-27,-69,-103,-27,-67,-87,
    -27,-66,-83,-26,-125,-104,-26,-123,-114,-26,-124,-120,-26,-122,-114,-26,-123,-96,-26,-121,
    -78,-26,-120,-76,-26,-113,-124,-26,-112,-100,-26,-111,-110,-26,-107,-106,-26,-103,-76,-26,
    -100,-105,-26,-100,-101,-26,-99,-106,-26,-83,-71,-26,-82,-70,-26,-75,-127,-26,-69,-101,
    -26,-69,-117,-26,-68,-94,-25,-128,-98,-25,-123,-82,-25,-98,-89,-25,-120,-75,-25,-118,
    -81,-25,-116,-86,-25,-111,-79,-25,-108,-122,-25,-108,-69,-25,-104,-99,-25,-104,-97,-25,
    -101,-118,-25,-101,-101,-25,-101,-76,-25,-99,-118,-25,-99,-128,-25,-93,-116,-25,-86,-79,
    -25,-81,-128,-25,-79,-69,-25,-75,-101,-25,-73,-76,-25,-68,-66,-24,-128,-123,-24,-115,
    -110,-24,-113,-81,-24,-99,-71,-24,-91,-127,-24,-90,-122,-24,-90,-106,-24,-86,-65,-24,
    -85,-72,-24,-85,-117,-24,-84,-127,-24,-85,-66,-24,-85,-83,-24,-84,-71,-24,-82,-118,
    -24,-76,-120,-24,-68,-72,-23,-127,-78,-23,-122,-103,-23,-119,-74,-23,-103,-68,-23,-101,
    -93,-23,-99,-106,-23,-97,-101,-23,-97,-65,-23,-96,-117,-23,-96,-69,-23,-84,-110,-23,
    -66,-100,-16,-94,-95,-118,-16,-94,-95,-124,-16,-93,-113,-107,-29,-82,-99,-28,-128,-104,
    -28,-128,-71,-16,-91,-119,-119,-16,-91,-77,-112,-16,-89,-69,-109,-23,-67,-125,-23,-66,
    -114,102,102,102,105,102,108,102,102,105,102,102,108,115,116,115,116,-43,-76,-43,
    -74,-43,-76,-43,-91,-43,-76,-43,-85,-43,-66,-43,-74,-43,-76,-43,-83,-41,-103,-42,
    -76,-41,-78,-42,-73,-41,-94,-41,-112,-41,-109,-41,-108,-41,-101,-41,-100,-41,-99,-41,
    -88,-41,-86,43,-41,-87,-41,-127,-41,-87,-41,-126,-41,-87,-42,-68,-41,-127,-41,-87,
    -42,-68,-41,-126,-41,-112,-42,-73,-41,-112,-42,-72,-41,-112,-42,-68,-41,-111,-42,-68,
    -41,-110,-42,-68,-41,-109,-42,-68,-41,-108,-42,-68,-41,-107,-42,-68,-41,-106,-42,-68,
    -41,-104,-42,-68,-41,-103,-42,-68,-41,-102,-42,-68,-41,-101,-42,-68,-41,-100,-42,-68,
    -41,-98,-42,-68,-41,-96,-42,-68,-41,-95,-42,-68,-41,-93,-42,-68,-41,-92,-42,-68,
    -41,-90,-42,-68,-41,-89,-42,-68,-41,-88,-42,-68,-41,-87,-42,-68,-41,-86,-42,-68,
    -41,-107,-42,-71,-41,-111,-42,-65,-41,-101,-42,-65,-41,-92,-42,-65,-41,-112,-41,-100,
    -39,-79,-39,-79,-39,-69,-39,-69,-39,-69,-39,-69,-39,-66,-39,-66,-39,-66,-39,-66,
    -38,-128,-38,-128,-38,-128,-38,-128,-39,-70,-39,-70,-39,-70,-39,-70,-39,-65,-39,-65,
    -39,-65,-39,-65,-39,-71,-39,-71,-39,-71,-39,-71,-38,-92,-38,-92,-38,-92,-38,-92,
    -38,-90,-38,-90,-38,-90,-38,-90,-38,-124,-38,-124,-38,-124,-38,-124,-38,-125,-38,-125,
    -38,-125,-38,-125,-38,-122,-38,-122,-38,-122,-38,-122,-38,-121,-38,-121,-38,-121,-38,-121,
    -38,-115,-38,-115,-38,-116,-38,-116,-38,-114,-38,-114,-38,-120,-38,-120,-38,-104,-38,-104,
    -38,-111,-38,-111,-38,-87,-38,-87,-38,-87,-38,-87,-38,-81,-38,-81,-38,-81,-38,-81,
    -38,-77,-38,-77,-38,-77,-38,-77,-38,-79,-38,-79,-38,-79,-38,-79,-38,-70,-38,-70,
    -38,-69,-38,-69,-38,-69,-38,-69,-37,-128,-37,-128,-37,-127,-37,-127,-37,-127,-37,-127,
    -38,-66,-38,-66,-38,-66,-38,-66,-37,-110,-37,-110,-37,-109,-37,-109,-38,-83,-38,-83,
    -38,-83,-38,-83,-37,-121,-37,-121,-37,-122,-37,-122,-37,-120,-37,-120,-37,-121,-39,-76,
    -37,-117,-37,-117,-37,-123,-37,-123,-37,-119,-37,-119,-37,-112,-37,-112,-37,-112,-37,-112,
    -39,-119,-39,-119,-40,-90,-40,-89,-40,-90,-40,-89,-40,-90,-37,-107,-40,-90,-37,-107,
    -40,-90,-39,-120,-40,-90,-39,-120,-40,-90,-37,-121,-40,-90,-37,-121,-40,-90,-37,-122,
    -40,-90,-37,-122,-40,-90,-37,-120,-40,-90,-37,-120,-40,-90,-37,-112,-40,-90,-37,-112,
    -40,-90,-37,-112,-40,-90,-39,-119,-40,-90,-39,-119,-40,-90,-39,-119,-37,-116,-37,-116,
    -37,-116,-37,-116,-40,-90,-40,-84,-40,-90,-40,-83,-40,-90,-39,-123,-40,-90,-39,-119,
    -40,-90,-39,-118,-40,-88,-40,-84,-40,-88,-40,-83,-40,-88,-40,-82,-40,-88,-39,-123,
    -40,-88,-39,-119,-40,-88,-39,-118,-40,-86,-40,-84,-40,-86,-40,-83,-40,-86,-40,-82,
    -40,-86,-39,-123,-40,-86,-39,-119,-40,-86,-39,-118,-40,-85,-40,-84,-40,-85,-39,-123,
    -40,-85,-39,-119,-40,-85,-39,-118,-40,-84,-40,-83,-40,-84,-39,-123,-40,-83,-40,-84,
    -40,-83,-39,-123,-40,-82,-40,-84,-40,-82,-40,-83,-40,-82,-39,-123,-40,-77,-40,-84,
    -40,-77,-40,-83,-40,-77,-40,-82,-40,-77,-39,-123,-40,-75,-40,-83,-40,-75,-39,-123,
    -40,-74,-40,-84,-40,-74,-40,-83,-40,-74,-40,-82,-40,-74,-39,-123,-40,-73,-40,-83,
    -40,-73,-39,-123,-40,-72,-39,-123,-40,-71,-40,-84,-40,-71,-39,-123,-40,-70,-40,-84,
    -40,-70,-39,-123,-39,-127,-40,-84,-39,-127,-40,-83,-39,-127,-40,-82,-39,-127,-39,-123,
    -39,-127,-39,-119,-39,-127,-39,-118,-39,-126,-40,-83,-39,-126,-39,-123,-39,-126,-39,-119,
    -39,-126,-39,-118,-39,-125,-40,-89,-39,-125,-40,-84,-39,-125,-40,-83,-39,-125,-40,-82,
    -39,-125,-39,-124,-39,-125,-39,-123,-39,-125,-39,-119,-39,-125,-39,-118,-39,-124,-40,-84,
    -39,-124,-40,-83,-39,-124,-40,-82,-39,-124,-39,-123,-39,-124,-39,-119,-39,-124,-39,-118,
    -39,-123,-40,-84,-39,-123,-40,-83,-39,-123,-40,-82,-39,-123,-39,-123,-39,-123,-39,-119,
    -39,-123,-39,-118,-39,-122,-40,-84,-39,-122,-40,-83,-39,-122,-40,-82,-39,-122,-39,-123,
    -39,-122,-39,-119,-39,-122,-39,-118,-39,-121,-40,-84,-39,-121,-39,-123,-39,-121,-39,-119,
    -39,-121,-39,-118,-39,-118,-40,-84,-39,-118,-40,-83,-39,-118,-40,-82,-39,-118,-39,-123,
    -39,-118,-39,-119,-39,-118,-39,-118,-40,-80,-39,-80,-40,-79,-39,-80,-39,-119,-39,-80,
    32,-39,-116,-39,-111,32,-39,-115,-39,-111,32,-39,-114,-39,-111,32,-39,-113,-39,-111,
    32,-39,-112,-39,-111,32,-39,-111,-39,-80,-40,-90,-40,-79,-40,-90,-40,-78,-40,-90,
    -39,-123,-40,-90,-39,-122,-40,-90,-39,-119,-40,-90,-39,-118,-40,-88,-40,-79,-40,-88,
    -40,-78,-40,-88,-39,-123,-40,-88,-39,-122,-40,-88,-39,-119,-40,-88,-39,-118,-40,-86,
    -40,-79,-40,-86,-40,-78,-40,-86,-39,-123,-40,-86,-39,-122,-40,-86,-39,-119,-40,-86,
    -39,-118,-40,-85,-40,-79,-40,-85,-40,-78,-40,-85,-39,-123,-40,-85,-39,-122,-40,-85,
    -39,-119,-40,-85,-39,-118,-39,-127,-39,-119,-39,-127,-39,-118,-39,-126,-39,-119,-39,-126,
    -39,-118,-39,-125,-40,-89,-39,-125,-39,-124,-39,-125,-39,-123,-39,-125,-39,-119,-39,-125,
    -39,-118,-39,-124,-39,-123,-39,-124,-39,-119,-39,-124,-39,-118,-39,-123,-40,-89,-39,-123,
    -39,-123,-39,-122,-40,-79,-39,-122,-40,-78,-39,-122,-39,-123,-39,-122,-39,-122,-39,-122,
    -39,-119,-39,-122,-39,-118,-39,-119,-39,-80,-39,-118,-40,-79,-39,-118,-40,-78,-39,-118,
    -39,-123,-39,-118,-39,-122,-39,-118,-39,-119,-39,-118,-39,-118,-40,-90,-40,-84,-40,-90,
    -40,-83,-40,-90,-40,-82,-40,-90,-39,-123,-40,-90,-39,-121,-40,-88,-40,-84,-40,-88,
    -40,-83,-40,-88,-40,-82,-40,-88,-39,-123,-40,-88,-39,-121,-40,-86,-40,-84,-40,-86,
    -40,-83,-40,-86,-40,-82,-40,-86,-39,-123,-40,-86,-39,-121,-40,-85,-39,-123,-40,-84,
    -40,-83,-40,-84,-39,-123,-40,-83,-40,-84,-40,-83,-39,-123,-40,-82,-40,-84,-40,-82,
    -39,-123,-40,-77,-40,-84,-40,-77,-40,-83,-40,-77,-40,-82,-40,-77,-39,-123,-40,-75,
    -40,-83,-40,-75,-40,-82,-40,-75,-39,-123,-40,-74,-40,-84,-40,-74,-40,-83,-40,-74,
    -40,-82,-40,-74,-39,-123,-40,-73,-40,-83,-40,-72,-39,-123,-40,-71,-40,-84,-40,-71,
    -39,-123,-40,-70,-40,-84,-40,-70,-39,-123,-39,-127,-40,-84,-39,-127,-40,-83,-39,-127,
    -40,-82,-39,-127,-39,-123,-39,-126,-40,-83,-39,-126,-39,-123,-39,-125,-40,-84,-39,-125,
    -40,-83,-39,-125,-40,-82,-39,-125,-39,-124,-39,-125,-39,-123,-39,-124,-40,-84,-39,-124,
    -40,-83,-39,-124,-40,-82,-39,-124,-39,-123,-39,-124,-39,-121,-39,-123,-40,-84,-39,-123,
    -40,-83,-39,-123,-40,-82,-39,-123,-39,-123,-39,-122,-40,-84,-39,-122,-40,-83,-39,-122,
    -40,-82,-39,-122,-39,-123,-39,-122,-39,-121,-39,-121,-40,-84,-39,-121,-39,-123,-39,-121,
    -39,-80,-39,-118,-40,-84,-39,-118,-40,-83,-39,-118,-40,-82,-39,-118,-39,-123,-39,-118,
    -39,-121,-40,-90,-39,-123,-40,-90,-39,-121,-40,-88,-39,-123,-40,-88,-39,-121,-40,-86,
    -39,-123,-40,-86,-39,-121,-40,-85,-39,-123,-40,-85,-39,-121,-40,-77,-39,-123,-40,-77,
    -39,-121,-40,-76,-39,-123,-40,-76,-39,-121,-39,-125,-39,-124,-39,-125,-39,-123,-39,-124,
    -39,-123,-39,-122,-39,-123,-39,-122,-39,-121,-39,-118,-39,-123,-39,-118,-39,-121,-39,-128,
    -39,-114,-39,-111,-39,-128,-39,-113,-39,-111,-39,-128,-39,-112,-39,-111,-40,-73,-39,-119,
    -40,-73,-39,-118,-40,-71,-39,-119,-40,-71,-39,-118,-40,-70,-39,-119,-40,-70,-39,-118,
    -40,-77,-39,-119,-40,-77,-39,-118,-40,-76,-39,-119,-40,-76,-39,-118,-40,-83,-39,-119,
    -40,-83,-39,-118,-40,-84,-39,-119,-40,-84,-39,-118,-40,-82,-39,-119,-40,-82,-39,-118,
    -40,-75,-39,-119,-40,-75,-39,-118,-40,-74,-39,-119,-40,-74,-39,-118,-40,-76,-40,-84,
    -40,-76,-40,-83,-40,-76,-40,-82,-40,-76,-39,-123,-40,-76,-40,-79,-40,-77,-40,-79,
    -40,-75,-40,-79,-40,-74,-40,-79,-40,-73,-39,-119,-40,-73,-39,-118,-40,-71,-39,-119,
    -40,-71,-39,-118,-40,-70,-39,-119,-40,-70,-39,-118,-40,-77,-39,-119,-40,-77,-39,-118,
    -40,-76,-39,-119,-40,-76,-39,-118,-40,-83,-39,-119,-40,-83,-39,-118,-40,-84,-39,-119,
    -40,-84,-39,-118,-40,-82,-39,-119,-40,-82,-39,-118,-40,-75,-39,-119,-40,-75,-39,-118,
    -40,-74,-39,-119,-40,-74,-39,-118,-40,-76,-40,-84,-40,-76,-40,-83,-40,-76,-40,-82,
    -40,-76,-39,-123,-40,-76,-40,-79,-40,-77,-40,-79,-40,-75,-40,-79,-40,-74,-40,-79,
    -40,-76,-40,-84,-40,-76,-40,-83,-40,-76,-40,-82,-40,-76,-39,-123,-40,-77,-39,-121,
    -40,-76,-39,-121,-40,-73,-39,-123,-40,-77,-40,-84,-40,-77,-40,-83,-40,-77,-40,-82,
    -40,-76,-40,-84,-40,-76,-40,-83,-40,-76,-40,-82,-40,-73,-39,-123,-40,-72,-39,-123,
    -40,-89,-39,-117,-40,-89,-39,-117,-40,-86,-40,-84,-39,-123,-40,-86,-40,-83,-40,-84,
    -40,-86,-40,-83,-40,-84,-40,-86,-40,-83,-39,-123,-40,-86,-40,-82,-39,-123,-40,-86,
    -39,-123,-40,-84,-40,-86,-39,-123,-40,-83,-40,-86,-39,-123,-40,-82,-40,-84,-39,-123,
    -40,-83,-40,-84,-39,-123,-40,-83,-40,-83,-39,-123,-39,-118,-40,-83,-39,-123,-39,-119,
    -40,-77,-40,-83,-40,-84,-40,-77,-40,-84,-40,-83,-40,-77,-40,-84,-39,-119,-40,-77,
    -39,-123,-40,-83,-40,-77,-39,-123,-40,-83,-40,-77,-39,-123,-40,-84,-40,-77,-39,-123,
    -39,-123,-40,-77,-39,-123,-39,-123,-40,-75,-40,-83,-40,-83,-40,-75,-40,-83,-40,-83,
    -40,-75,-39,-123,-39,-123,-40,-76,-40,-83,-39,-123,-40,-76,-40,-83,-39,-123,-40,-76,
    -40,-84,-39,-118,-40,-76,-39,-123,-40,-82,-40,-76,-39,-123,-40,-82,-40,-76,-39,-123,
    -39,-123,-40,-76,-39,-123,-39,-123,-40,-74,-40,-83,-39,-119,-40,-74,-40,-82,-39,-123,
    -40,-74,-40,-82,-39,-123,-40,-73,-39,-123,-40,-83,-40,-73,-39,-123,-40,-83,-40,-73,
    -39,-123,-39,-123,-40,-73,-39,-123,-39,-118,-40,-71,-40,-84,-39,-123,-40,-71,-39,-123,
    -39,-123,-40,-71,-39,-123,-39,-123,-40,-71,-39,-123,-39,-119,-40,-70,-39,-123,-39,-123,
    -40,-70,-39,-123,-39,-118,-40,-70,-39,-123,-39,-119,-39,-127,-40,-82,-39,-123,-39,-127,
    -40,-82,-39,-123,-39,-126,-39,-123,-40,-83,-39,-126,-39,-123,-39,-123,-39,-124,-40,-83,
    -39,-123,-39,-124,-40,-83,-39,-118,-39,-124,-40,-83,-39,-119,-39,-124,-40,-84,-40,-84,
    -39,-124,-40,-84,-40,-84,-39,-124,-40,-82,-39,-123,-39,-124,-40,-82,-39,-123,-39,-124,
    -39,-123,-40,-83,-39,-124,-39,-123,-40,-83,-39,-123,-40,-83,-40,-84,-39,-123,-40,-83,
    -39,-123,-39,-123,-40,-83,-39,-118,-39,-123,-40,-84,-40,-83,-39,-123,-40,-84,-39,-123,
    -39,-123,-40,-82,-40,-84,-39,-123,-40,-82,-39,-123,-39,-123,-40,-84,-40,-82,-39,-121,
    -39,-123,-40,-84,-39,-121,-39,-123,-39,-123,-39,-122,-40,-83,-39,-123,-39,-122,-40,-83,
    -39,-119,-39,-122,-40,-84,-39,-123,-39,-122,-40,-84,-39,-123,-39,-122,-40,-84,-39,-119,
    -39,-122,-39,-123,-39,-118,-39,-122,-39,-123,-39,-119,-39,-118,-39,-123,-39,-123,-39,-118,
    -39,-123,-39,-123,-40,-88,-40,-82,-39,-118,-40,-86,-40,-84,-39,-118,-40,-86,-40,-84,
    -39,-119,-40,-86,-40,-82,-39,-118,-40,-86,-40,-82,-39,-119,-40,-86,-39,-123,-39,-118,
    -40,-86,-39,-123,-39,-119,-40,-84,-39,-123,-39,-118,-40,-84,-40,-83,-39,-119,-40,-84,
    -39,-123,-39,-119,-40,-77,-40,-82,-39,-119,-40,-75,-40,-83,-39,-118,-40,-76,-40,-83,
    -39,-118,-40,-74,-40,-83,-39,-118,-39,-124,-40,-84,-39,-118,-39,-124,-39,-123,-39,-118,
    -39,-118,-40,-83,-39,-118,-39,-118,-40,-84,-39,-118,-39,-118,-39,-123,-39,-118,-39,-123,
    -39,-123,-39,-118,-39,-126,-39,-123,-39,-118,-39,-122,-40,-83,-39,-118,-39,-126,-39,-123,
    -40,-83,-39,-124,-40,-83,-39,-123,-40,-71,-39,-123,-39,-118,-39,-125,-39,-123,-39,-118,
    -39,-122,-40,-84,-40,-83,-39,-123,-40,-82,-39,-118,-39,-124,-40,-84,-39,-123,-39,-125,
    -39,-123,-39,-123,-39,-124,-40,-84,-39,-123,-39,-122,-40,-84,-40,-83,-40,-84,-40,-83,
    -39,-118,-40,-83,-40,-84,-39,-118,-39,-123,-40,-84,-39,-118,-39,-127,-39,-123,-39,-118,
    -40,-88,-40,-83,-39,-118,-39,-125,-39,-123,-39,-123,-40,-71,-40,-84,-39,-123,-40,-75,
    -39,-123,-39,-123,-40,-77,-40,-82,-39,-118,-39,-122,-40,-84,-39,-118,-40,-75,-39,-124,
    -37,-110,-39,-126,-39,-124,-37,-110,-40,-89,-39,-124,-39,-124,-39,-121,-40,-89,-39,-125,
    -40,-88,-40,-79,-39,-123,-40,-83,-39,-123,-40,-81,-40,-75,-39,-124,-40,-71,-39,-123,
    -40,-79,-40,-77,-39,-120,-39,-124,-40,-71,-39,-124,-39,-118,-39,-121,-39,-120,-40,-77,
    -39,-124,-39,-123,-40,-75,-39,-124,-39,-119,-40,-75,-39,-124,-39,-119,32,-40,-89,-39,
    -124,-39,-124,-39,-121,32,-40,-71,-39,-124,-39,-118,-39,-121,32,-39,-120,-40,-77,-39,
    -124,-39,-123,-40,-84,-39,-124,32,-40,-84,-39,-124,-40,-89,-39,-124,-39,-121,-40,-79,
    -37,-116,-40,-89,-39,-124,44,-29,-128,-127,-29,-128,-126,58,59,33,63,-29,-128,-106,
    -29,-128,-105,46,46,46,46,46,-30,-128,-108,-30,-128,-109,95,95,40,41,123,125,
    -29,-128,-108,-29,-128,-107,-29,-128,-112,-29,-128,-111,-29,-128,-118,-29,-128,-117,-29,-128,
    -120,-29,-128,-119,-29,-128,-116,-29,-128,-115,-29,-128,-114,-29,-128,-113,91,93,32,-52,
    -123,32,-52,-123,32,-52,-123,32,-52,-123,95,95,95,44,-29,-128,-127,46,59,58,
    63,33,-30,-128,-108,40,41,123,125,-29,-128,-108,-29,-128,-107,35,38,42,43,45,
    60,62,61,92,36,37,64,32,-39,-117,-39,-128,-39,-117,32,-39,-116,32,-39,-115,
    32,-39,-114,-39,-128,-39,-114,32,-39,-113,-39,-128,-39,-113,32,-39,-112,-39,-128,-39,
    -112,32,-39,-111,-39,-128,-39,-111,32,-39,-110,-39,-128,-39,-110,-40,-95,-40,-94,-40,
    -94,-40,-93,-40,-93,-40,-92,-40,-92,-40,-91,-40,-91,-40,-90,-40,-90,-40,-90,-40,
    -90,-40,-89,-40,-89,-40,-88,-40,-88,-40,-88,-40,-88,-40,-87,-40,-87,-40,-86,-40,
    -86,-40,-86,-40,-86,-40,-85,-40,-85,-40,-85,-40,-85,-40,-84,-40,-84,-40,-84,-40,
    -84,-40,-83,-40,-83,-40,-83,-40,-83,-40,-82,-40,-82,-40,-82,-40,-82,-40,-81,-40,
    -81,-40,-80,-40,-80,-40,-79,-40,-79,-40,-78,-40,-78,-40,-77,-40,-77,-40,-77,-40,
    -77,-40,-76,-40,-76,-40,-76,-40,-76,-40,-75,-40,-75,-40,-75,-40,-75,-40,-74,-40,
    -74,-40,-74,-40,-74,-40,-73,-40,-73,-40,-73,-40,-73,-40,-72,-40,-72,-40,-72,-40,
    -72,-40,-71,-40,-71,-40,-71,-40,-71,-40,-70,-40,-70,-40,-70,-40,-70,-39,-127,-39,
    -127,-39,-127,-39,-127,-39,-126,-39,-126,-39,-126,-39,-126,-39,-125,-39,-125,-39,-125,-39,
    -125,-39,-124,-39,-124,-39,-124,-39,-124,-39,-123,-39,-123,-39,-123,-39,-123,-39,-122,-39,
    -122,-39,-122,-39,-122,-39,-121,-39,-121,-39,-121,-39,-121,-39,-120,-39,-120,-39,-119,-39,
    -119,-39,-118,-39,-118,-39,-118,-39,-118,-39,-124,-40,-94,-39,-124,-40,-94,-39,-124,-40,
    -93,-39,-124,-40,-93,-39,-124,-40,-91,-39,-124,-40,-91,-39,-124,-40,-89,-39,-124,-40,
    -89,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,
    52,53,54,55,56,57,58,59,60,61,62,63,64,65,66,67,68,69,70,71,
    72,73,74,75,76,77,78,79,80,81,82,83,84,85,86,87,88,89,90,91,
    92,93,94,95,96,97,98,99,100,101,102,103,104,105,106,107,108,109,110,111,
    112,113,114,115,116,117,118,119,120,121,122,123,124,125,126,-30,-90,-123,-30,-90,
    -122,-29,-128,-126,-29,-128,-116,-29,-128,-115,-29,-128,-127,-29,-125,-69,-29,-125,-78,-29,
    -126,-95,-29,-126,-93,-29,-126,-91,-29,-126,-89,-29,-126,-87,-29,-125,-93,-29,-125,-91,
    -29,-125,-89,-29,-125,-125,-29,-125,-68,-29,-126,-94,-29,-126,-92,-29,-126,-90,-29,-126,
    -88,-29,-126,-86,-29,-126,-85,-29,-126,-83,-29,-126,-81,-29,-126,-79,-29,-126,-77,-29,
    -126,-75,-29,-126,-73,-29,-126,-71,-29,-126,-69,-29,-126,-67,-29,-126,-65,-29,-125,-127,
    -29,-125,-124,-29,-125,-122,-29,-125,-120,-29,-125,-118,-29,-125,-117,-29,-125,-116,-29,-125,
    -115,-29,-125,-114,-29,-125,-113,-29,-125,-110,-29,-125,-107,-29,-125,-104,-29,-125,-101,-29,
    -125,-98,-29,-125,-97,-29,-125,-96,-29,-125,-95,-29,-125,-94,-29,-125,-92,-29,-125,-90,
    -29,-125,-88,-29,-125,-87,-29,-125,-86,-29,-125,-85,-29,-125,-84,-29,-125,-83,-29,-125,
    -81,-29,-125,-77,-29,-126,-103,-29,-126,-102,-31,-123,-96,-31,-124,-128,-31,-124,-127,-31,
    -122,-86,-31,-124,-126,-31,-122,-84,-31,-122,-83,-31,-124,-125,-31,-124,-124,-31,-124,-123,
    -31,-122,-80,-31,-122,-79,-31,-122,-78,-31,-122,-77,-31,-122,-76,-31,-122,-75,-31,-124,
    -102,-31,-124,-122,-31,-124,-121,-31,-124,-120,-31,-124,-95,-31,-124,-119,-31,-124,-118,-31,
    -124,-117,-31,-124,-116,-31,-124,-115,-31,-124,-114,-31,-124,-113,-31,-124,-112,-31,-124,-111,
    -31,-124,-110,-31,-123,-95,-31,-123,-94,-31,-123,-93,-31,-123,-92,-31,-123,-91,-31,-123,
    -90,-31,-123,-89,-31,-123,-88,-31,-123,-87,-31,-123,-86,-31,-123,-85,-31,-123,-84,-31,
    -123,-83,-31,-123,-82,-31,-123,-81,-31,-123,-80,-31,-123,-79,-31,-123,-78,-31,-123,-77,
    -31,-123,-76,-31,-123,-75,-62,-94,-62,-93,-62,-84,32,-52,-124,-62,-90,-62,-91,-30,
    -126,-87,-30,-108,-126,-30,-122,-112,-30,-122,-111,-30,-122,-110,-30,-122,-109,-30,-106,-96,
    -30,-105,-117,-16,-99,-123,-105,-16,-99,-123,-91,-16,-99,-123,-104,-16,-99,-123,-91,-16,
    -99,-123,-104,-16,-99,-123,-91,-16,-99,-123,-82,-16,-99,-123,-104,-16,-99,-123,-91,-16,
    -99,-123,-81,-16,-99,-123,-104,-16,-99,-123,-91,-16,-99,-123,-80,-16,-99,-123,-104,-16,
    -99,-123,-91,-16,-99,-123,-79,-16,-99,-123,-104,-16,-99,-123,-91,-16,-99,-123,-78,-16,
    -99,-122,-71,-16,-99,-123,-91,-16,-99,-122,-70,-16,-99,-123,-91,-16,-99,-122,-71,-16,
    -99,-123,-91,-16,-99,-123,-82,-16,-99,-122,-70,-16,-99,-123,-91,-16,-99,-123,-82,-16,
    -99,-122,-71,-16,-99,-123,-91,-16,-99,-123,-81,-16,-99,-122,-70,-16,-99,-123,-91,-16,
    -99,-123,-81,65,66,67,68,69,70,71,72,73,74,75,76,77,78,79,80,81,
    82,83,84,85,86,87,88,89,90,97,98,99,100,101,102,103,104,105,106,107,
    108,109,110,111,112,113,114,115,116,117,118,119,120,121,122,65,66,67,68,69,
    70,71,72,73,74,75,76,77,78,79,80,81,82,83,84,85,86,87,88,89,
    90,97,98,99,100,101,102,103,105,106,107,108,109,110,111,112,113,114,115,116,
    117,118,119,120,121,122,65,66,67,68,69,70,71,72,73,74,75,76,77,78,
    79,80,81,82,83,84,85,86,87,88,89,90,97,98,99,100,101,102,103,104,
    105,106,107,108,109,110,111,112,113,114,115,116,117,118,119,120,121,122,65,67,
    68,71,74,75,78,79,80,81,83,84,85,86,87,88,89,90,97,98,99,100,
    102,104,105,106,107,108,109,110,112,113,114,115,116,117,118,119,120,121,122,65,
    66,67,68,69,70,71,72,73,74,75,76,77,78,79,80,81,82,83,84,85,
    86,87,88,89,90,97,98,99,100,101,102,103,104,105,106,107,108,109,110,111,
    112,113,114,115,116,117,118,119,120,121,122,65,66,68,69,70,71,74,75,76,
    77,78,79,80,81,83,84,85,86,87,88,89,97,98,99,100,101,102,103,104,
    105,106,107,108,109,110,111,112,113,114,115,116,117,118,119,120,121,122,65,66,
    68,69,70,71,73,74,75,76,77,79,83,84,85,86,87,88,89,97,98,99,
    100,101,102,103,104,105,106,107,108,109,110,111,112,113,114,115,116,117,118,119,
    120,121,122,65,66,67,68,69,70,71,72,73,74,75,76,77,78,79,80,81,
    82,83,84,85,86,87,88,89,90,97,98,99,100,101,102,103,104,105,106,107,
    108,109,110,111,112,113,114,115,116,117,118,119,120,121,122,65,66,67,68,69,
    70,71,72,73,74,75,76,77,78,79,80,81,82,83,84,85,86,87,88,89,
    90,97,98,99,100,101,102,103,104,105,106,107,108,109,110,111,112,113,114,115,
    116,117,118,119,120,121,122,65,66,67,68,69,70,71,72,73,74,75,76,77,
    78,79,80,81,82,83,84,85,86,87,88,89,90,97,98,99,100,101,102,103,
    104,105,106,107,108,109,110,111,112,113,114,115,116,117,118,119,120,121,122,65,
    66,67,68,69,70,71,72,73,74,75,76,77,78,79,80,81,82,83,84,85,
    86,87,88,89,90,97,98,99,100,101,102,103,104,105,106,107,108,109,110,111,
    112,113,114,115,116,117,118,119,120,121,122,65,66,67,68,69,70,71,72,73,
    74,75,76,77,78,79,80,81,82,83,84,85,86,87,88,89,90,97,98,99,
    100,101,102,103,104,105,106,107,108,109,110,111,112,113,114,115,116,117,118,119,
    120,121,122,65,66,67,68,69,70,71,72,73,74,75,76,77,78,79,80,81,
    82,83,84,85,86,87,88,89,90,97,98,99,100,101,102,103,104,105,106,107,
    108,109,110,111,112,113,114,115,116,117,118,119,120,121,122,-60,-79,-56,-73,-50,
    -111,-50,-110,-50,-109,-50,-108,-50,-107,-50,-106,-50,-105,-50,-104,-50,-103,-50,-102,-50,
    -101,-50,-100,-50,-99,-50,-98,-50,-97,-50,-96,-50,-95,-50,-104,-50,-93,-50,-92,-50,
    -91,-50,-90,-50,-89,-50,-88,-50,-87,-30,-120,-121,-50,-79,-50,-78,-50,-77,-50,-76,
    -50,-75,-50,-74,-50,-73,-50,-72,-50,-71,-50,-70,-50,-69,-50,-68,-50,-67,-50,-66,
    -50,-65,-49,-128,-49,-127,-49,-126,-49,-125,-49,-124,-49,-123,-49,-122,-49,-121,-49,-120,
    -49,-119,-30,-120,-126,-50,-75,-50,-72,-50,-70,-49,-122,-49,-127,-49,-128,-50,-111,-50,
    -110,-50,-109,-50,-108,-50,-107,-50,-106,-50,-105,-50,-104,-50,-103,-50,-102,-50,-101,-50,
    -100,-50,-99,-50,-98,-50,-97,-50,-96,-50,-95,-50,-104,-50,-93,-50,-92,-50,-91,-50,
    -90,-50,-89,-50,-88,-50,-87,-30,-120,-121,-50,-79,-50,-78,-50,-77,-50,-76,-50,-75,
    -50,-74,-50,-73,-50,-72,-50,-71,-50,-70,-50,-69,-50,-68,-50,-67,-50,-66,-50,-65,
    -49,-128,-49,-127,-49,-126,-49,-125,-49,-124,-49,-123,-49,-122,-49,-121,-49,-120,-49,-119,
    -30,-120,-126,-50,-75,-50,-72,-50,-70,-49,-122,-49,-127,-49,-128,-50,-111,-50,-110,-50,
    -109,-50,-108,-50,-107,-50,-106,-50,-105,-50,-104,-50,-103,-50,-102,-50,-101,-50,-100,-50,
    -99,-50,-98,-50,-97,-50,-96,-50,-95,-50,-104,-50,-93,-50,-92,-50,-91,-50,-90,-50,
    -89,-50,-88,-50,-87,-30,-120,-121,-50,-79,-50,-78,-50,-77,-50,-76,-50,-75,-50,-74,
    -50,-73,-50,-72,-50,-71,-50,-70,-50,-69,-50,-68,-50,-67,-50,-66,-50,-65,-49,-128,
    -49,-127,-49,-126,-49,-125,-49,-124,-49,-123,-49,-122,-49,-121,-49,-120,-49,-119,-30,-120,
    -126,-50,-75,-50,-72,-50,-70,-49,-122,-49,-127,-49,-128,-50,-111,-50,-110,-50,-109,-50,
    -108,-50,-107,-50,-106,-50,-105,-50,-104,-50,-103,-50,-102,-50,-101,-50,-100,-50,-99,-50,
    -98,-50,-97,-50,-96,-50,-95,-50,-104,-50,-93,-50,-92,-50,-91,-50,-90,-50,-89,-50,
    -88,-50,-87,-30,-120,-121,-50,-79,-50,-78,-50,-77,-50,-76,-50,-75,-50,-74,-50,-73,
    -50,-72,-50,-71,-50,-70,-50,-69,-50,-68,-50,-67,-50,-66,-50,-65,-49,-128,-49,-127,
    -49,-126,-49,-125,-49,-124,-49,-123,-49,-122,-49,-121,-49,-120,-49,-119,-30,-120,-126,-50,
    -75,-50,-72,-50,-70,-49,-122,-49,-127,-49,-128,-50,-111,-50,-110,-50,-109,-50,-108,-50,
    -107,-50,-106,-50,-105,-50,-104,-50,-103,-50,-102,-50,-101,-50,-100,-50,-99,-50,-98,-50,
    -97,-50,-96,-50,-95,-50,-104,-50,-93,-50,-92,-50,-91,-50,-90,-50,-89,-50,-88,-50,
    -87,-30,-120,-121,-50,-79,-50,-78,-50,-77,-50,-76,-50,-75,-50,-74,-50,-73,-50,-72,
    -50,-71,-50,-70,-50,-69,-50,-68,-50,-67,-50,-66,-50,-65,-49,-128,-49,-127,-49,-126,
    -49,-125,-49,-124,-49,-123,-49,-122,-49,-121,-49,-120,-49,-119,-30,-120,-126,-50,-75,-50,
    -72,-50,-70,-49,-122,-49,-127,-49,-128,-49,-100,-49,-99,48,49,50,51,52,53,54,
    55,56,57,48,49,50,51,52,53,54,55,56,57,48,49,50,51,52,53,54,
    55,56,57,48,49,50,51,52,53,54,55,56,57,48,49,50,51,52,53,54,
    55,56,57,-40,-89,-40,-88,-40,-84,-40,-81,-39,-120,-40,-78,-40,-83,-40,-73,-39,
    -118,-39,-125,-39,-124,-39,-123,-39,-122,-40,-77,-40,-71,-39,-127,-40,-75,-39,-126,-40,
    -79,-40,-76,-40,-86,-40,-85,-40,-82,-40,-80,-40,-74,-40,-72,-40,-70,-39,-82,-38,
    -70,-38,-95,-39,-81,-40,-88,-40,-84,-39,-121,-40,-83,-39,-118,-39,-125,-39,-124,-39,
    -123,-39,-122,-40,-77,-40,-71,-39,-127,-40,-75,-39,-126,-40,-76,-40,-86,-40,-85,-40,
    -82,-40,-74,-40,-70,-40,-84,-40,-83,-39,-118,-39,-124,-39,-122,-40,-77,-40,-71,-40,
    -75,-39,-126,-40,-76,-40,-82,-40,-74,-40,-70,-38,-70,-39,-81,-40,-88,-40,-84,-39,
    -121,-40,-83,-40,-73,-39,-118,-39,-125,-39,-123,-39,-122,-40,-77,-40,-71,-39,-127,-40,
    -75,-39,-126,-40,-76,-40,-86,-40,-85,-40,-82,-40,-74,-40,-72,-40,-70,-39,-82,-38,
    -95,-40,-89,-40,-88,-40,-84,-40,-81,-39,-121,-39,-120,-40,-78,-40,-83,-40,-73,-39,
    -118,-39,-124,-39,-123,-39,-122,-40,-77,-40,-71,-39,-127,-40,-75,-39,-126,-40,-79,-40,
    -76,-40,-86,-40,-85,-40,-82,-40,-80,-40,-74,-40,-72,-40,-70,-40,-88,-40,-84,-40,
    -81,-39,-120,-40,-78,-40,-83,-40,-73,-39,-118,-39,-124,-39,-123,-39,-122,-40,-77,-40,
    -71,-39,-127,-40,-75,-39,-126,-40,-79,-40,-76,-40,-86,-40,-85,-40,-82,-40,-80,-40,
    -74,-40,-72,-40,-70,48,46,48,44,49,44,50,44,51,44,52,44,53,44,54,
    44,55,44,56,44,57,44,40,65,41,40,66,41,40,67,41,40,68,41,40,
    69,41,40,70,41,40,71,41,40,72,41,40,73,41,40,74,41,40,75,41,
    40,76,41,40,77,41,40,78,41,40,79,41,40,80,41,40,81,41,40,82,
    41,40,83,41,40,84,41,40,85,41,40,86,41,40,87,41,40,88,41,40,
    89,41,40,90,41,-29,-128,-108,83,-29,-128,-107,67,82,67,68,87,90,65,66,
    67,68,69,70,71,72,73,74,75,76,77,78,79,80,81,82,83,84,85,86,
    87,88,89,90,72,86,77,86,83,68,83,83,80,80,86,87,67,77,67,77,
    68,77,82,68,74,-29,-127,-69,-29,-127,-117,-29,-126,-77,-29,-126,-77,-29,-126,-75,
    -26,-119,-117,-27,-83,-105,-27,-113,-116,-29,-125,-121,-28,-70,-116,-27,-92,-102,-24,-89,
    -93,-27,-92,-87,-28,-70,-92,-26,-104,-96,-25,-124,-95,-26,-106,-103,-27,-119,-115,-27,
    -66,-116,-27,-122,-115,-26,-106,-80,-27,-120,-99,-25,-75,-126,-25,-108,-97,-24,-78,-87,
    -27,-93,-80,-27,-112,-71,-26,-68,-108,-26,-118,-107,-26,-115,-107,-28,-72,-128,-28,-72,
    -119,-23,-127,-118,-27,-73,-90,-28,-72,-83,-27,-113,-77,-26,-116,-121,-24,-75,-80,-26,
    -119,-109,-25,-90,-127,-25,-87,-70,-27,-112,-120,-26,-70,-128,-26,-100,-119,-26,-100,-120,
    -25,-108,-77,-27,-119,-78,-27,-106,-74,-23,-123,-115,-29,-128,-108,-26,-100,-84,-29,-128,
    -107,-29,-128,-108,-28,-72,-119,-29,-128,-107,-29,-128,-108,-28,-70,-116,-29,-128,-107,-29,
    -128,-108,-27,-82,-119,-29,-128,-107,-29,-128,-108,-25,-126,-71,-29,-128,-107,-29,-128,-108,
    -26,-119,-109,-29,-128,-107,-29,-128,-108,-25,-101,-105,-29,-128,-107,-29,-128,-108,-27,-117,
    -99,-29,-128,-107,-29,-128,-108,-26,-107,-105,-29,-128,-107,-27,-66,-105,-27,-113,-81,48,
    49,50,51,52,53,54,55,56,57,-28,-72,-67,-28,-72,-72,-28,-71,-127,-16,-96,
    -124,-94,-28,-67,-96,-28,-66,-82,-28,-66,-69,-27,-128,-126,-27,-127,-70,-27,-126,-103,
    -27,-125,-89,-27,-125,-113,-29,-110,-98,-16,-96,-104,-70,-27,-123,-115,-27,-123,-108,-27,
    -123,-92,-27,-123,-73,-16,-96,-108,-100,-29,-110,-71,-27,-123,-89,-27,-122,-115,-16,-96,
    -107,-117,-27,-122,-105,-27,-122,-92,-28,-69,-116,-27,-122,-84,-27,-122,-75,-16,-87,-121,
    -97,-27,-121,-75,-27,-120,-125,-29,-109,-97,-27,-120,-69,-27,-119,-122,-27,-119,-78,-27,
    -119,-73,-29,-108,-107,-27,-117,-121,-27,-117,-119,-27,-117,-92,-27,-117,-70,-27,-116,-123,
    -27,-116,-122,-27,-116,-105,-27,-115,-119,-27,-115,-111,-27,-115,-102,-27,-115,-77,-27,-115,
    -67,-27,-115,-65,-27,-115,-65,-27,-115,-65,-16,-96,-88,-84,-25,-127,-80,-27,-113,-118,
    -27,-113,-97,-16,-96,-83,-93,-27,-113,-85,-27,-113,-79,-27,-112,-122,-27,-110,-98,-27,
    -112,-72,-27,-111,-120,-27,-111,-88,-27,-110,-94,-27,-109,-74,-27,-108,-112,-27,-107,-109,
    -27,-107,-93,-27,-106,-124,-27,-106,-124,-27,-106,-103,-27,-106,-85,-27,-106,-77,-27,-105,
    -126,-27,-100,-106,-27,-104,-122,-27,-100,-105,-27,-103,-111,-27,-103,-76,-27,-120,-121,-27,
    -93,-82,-27,-97,-114,-27,-97,-76,-27,-96,-115,-27,-98,-117,-27,-96,-78,-27,-96,-79,
    -27,-94,-84,-16,-95,-109,-92,-27,-93,-78,-27,-93,-73,-27,-92,-122,-27,-92,-102,-27,
    -92,-94,-27,-91,-94,-16,-95,-102,-88,-16,-95,-101,-86,-27,-89,-84,-27,-88,-101,-27,
    -88,-89,-27,-89,-104,-27,-87,-90,-29,-101,-82,-29,-101,-68,-27,-84,-120,-27,-84,-66,
    -27,-84,-66,-16,-95,-89,-120,-27,-81,-125,-27,-81,-104,-27,-81,-89,-27,-81,-77,-16,
    -95,-84,-104,-27,-81,-65,-27,-80,-122,-27,-67,-109,-27,-80,-94,-29,-98,-127,-27,-79,
    -96,-27,-79,-82,-27,-77,-128,-27,-78,-115,-16,-95,-73,-92,-27,-75,-125,-16,-95,-73,
    -90,-27,-75,-82,-27,-75,-85,-27,-75,-68,-27,-73,-95,-27,-73,-94,-29,-96,-81,-27,
    -73,-67,-27,-72,-88,-27,-72,-67,-27,-71,-87,-29,-95,-94,-16,-94,-122,-125,-29,-95,
    -68,-27,-70,-80,-27,-70,-77,-27,-70,-74,-27,-69,-118,-16,-86,-114,-110,-27,-69,-66,
    -16,-94,-116,-79,-16,-94,-116,-79,-24,-120,-127,-27,-68,-94,-27,-68,-94,-29,-93,-121,
    -16,-93,-118,-72,-16,-90,-121,-102,-27,-67,-94,-27,-67,-85,-29,-93,-93,-27,-66,-102,
    -27,-65,-115,-27,-65,-105,-27,-65,-71,-26,-126,-127,-29,-92,-70,-29,-92,-100,-26,-126,
    -108,-16,-94,-101,-108,-26,-125,-121,-26,-123,-120,-26,-123,-116,-26,-123,-114,-26,-123,-116,
    -26,-123,-70,-26,-122,-114,-26,-122,-78,-26,-122,-92,-26,-122,-81,-26,-121,-98,-26,-121,
    -78,-26,-121,-74,-26,-120,-112,-26,-120,-101,-26,-119,-99,-26,-118,-79,-26,-117,-108,-26,
    -115,-112,-16,-94,-84,-116,-26,-116,-67,-26,-117,-68,-26,-115,-88,-26,-114,-125,-26,-113,
    -92,-16,-94,-81,-79,-26,-112,-94,-26,-113,-123,-26,-114,-87,-29,-88,-82,-26,-111,-87,
    -26,-111,-66,-26,-110,-99,-26,-111,-73,-29,-87,-84,-26,-107,-113,-26,-107,-84,-16,-93,
    -128,-118,-26,-105,-93,-26,-101,-72,-26,-103,-119,-29,-84,-103,-26,-102,-111,-29,-84,-120,
    -29,-85,-92,-27,-122,-110,-27,-122,-107,-26,-100,-128,-26,-102,-100,-24,-126,-83,-28,-113,
    -103,-26,-100,-105,-26,-100,-101,-26,-100,-95,-26,-99,-98,-26,-99,-109,-16,-93,-113,-125,
    -29,-83,-119,-26,-97,-70,-26,-98,-123,-26,-95,-110,-26,-94,-123,-16,-93,-111,-83,-26,
    -94,-114,-26,-96,-97,-26,-92,-108,-29,-82,-99,-26,-91,-126,-26,-90,-93,-26,-89,-86,
    -26,-86,-88,-16,-93,-102,-93,-26,-85,-101,-29,-80,-104,-26,-84,-95,-16,-93,-94,-89,
    -26,-83,-108,-29,-79,-114,-26,-83,-78,-26,-82,-97,-26,-82,-70,-26,-82,-69,-16,-93,
    -86,-115,-16,-95,-76,-117,-16,-93,-85,-70,-26,-79,-114,-16,-93,-78,-68,-26,-78,-65,
    -26,-77,-115,-26,-79,-89,-26,-76,-106,-26,-76,-66,-26,-75,-73,-26,-75,-127,-26,-75,
    -87,-26,-75,-72,-26,-74,-123,-16,-93,-76,-98,-26,-76,-76,-26,-72,-81,-26,-71,-82,
    -29,-76,-77,-26,-69,-117,-26,-69,-121,-16,-93,-69,-111,-26,-73,-71,-26,-67,-82,-16,
    -93,-67,-98,-16,-93,-66,-114,-26,-65,-122,-25,-128,-71,-25,-128,-98,-25,-128,-101,-29,
    -74,-106,-25,-127,-118,-25,-127,-67,-25,-127,-73,-25,-126,-83,-16,-96,-108,-91,-25,-123,
    -123,-16,-92,-119,-93,-25,-122,-100,-16,-92,-114,-85,-25,-120,-88,-25,-120,-75,-25,-119,
    -112,-16,-92,-104,-120,-25,-118,-128,-25,-118,-107,-16,-92,-100,-75,-16,-92,-96,-108,-25,
    -115,-70,-25,-114,-117,-29,-70,-84,-25,-114,-91,-29,-70,-72,-29,-70,-72,-25,-111,-121,
    -25,-111,-100,-25,-111,-79,-25,-110,-123,-25,-109,-118,-29,-68,-101,-25,-108,-92,-16,-92,
    -80,-74,-25,-108,-66,-16,-92,-78,-110,-25,-107,-80,-16,-94,-122,-97,-25,-104,-112,-16,
    -92,-66,-95,-16,-92,-66,-72,-16,-91,-127,-124,-29,-65,-68,-28,-128,-120,-25,-101,-76,
    -16,-91,-125,-77,-16,-91,-125,-78,-16,-91,-124,-103,-16,-91,-124,-77,-25,-100,-98,-25,
    -100,-97,-25,-100,-97,-25,-99,-118,-28,-128,-71,-25,-98,-117,-28,-127,-122,-28,-126,-106,
    -16,-91,-112,-99,-25,-95,-114,-25,-94,-116,-25,-93,-116,-28,-125,-93,-16,-91,-104,-90,
    -25,-91,-106,-16,-91,-102,-102,-16,-91,-101,-123,-25,-90,-113,-25,-89,-85,-28,-124,-81,
    -25,-87,-128,-25,-87,-118,-25,-87,-113,-16,-91,-91,-68,-16,-91,-86,-89,-16,-91,-86,
    -89,-25,-85,-82,-28,-120,-126,-16,-91,-82,-85,-25,-81,-122,-25,-81,-119,-28,-120,-89,
    -16,-91,-78,-128,-25,-77,-110,-28,-118,-96,-25,-77,-88,-25,-77,-93,-25,-76,-128,-16,
    -91,-66,-122,-25,-75,-93,-28,-116,-127,-25,-73,-121,-25,-72,-126,-25,-71,-123,-28,-116,
    -76,-16,-90,-120,-88,-16,-90,-119,-121,-28,-115,-103,-16,-90,-117,-103,-25,-67,-70,-16,
    -90,-116,-66,-25,-66,-107,-25,-65,-70,-24,-128,-123,-16,-90,-109,-102,-16,-90,-108,-93,
    -24,-127,-96,-16,-90,-106,-88,-24,-127,-80,-16,-93,-115,-97,-28,-113,-107,-24,-126,-78,
    -24,-124,-125,-28,-112,-117,-24,-124,-66,-27,-86,-75,-16,-90,-98,-89,-16,-90,-98,-75,
    -16,-93,-114,-109,-16,-93,-114,-100,-24,-120,-127,-24,-120,-124,-24,-66,-98,-28,-111,-85,
    -24,-118,-111,-24,-118,-117,-24,-118,-99,-27,-118,-77,-24,-118,-79,-24,-118,-77,-24,-118,
    -67,-24,-117,-90,-16,-90,-84,-68,-24,-117,-91,-24,-116,-99,-24,-115,-93,-24,-114,-83,
    -24,-116,-93,-24,-114,-67,-24,-113,-89,-24,-111,-105,-24,-115,-109,-24,-113,-118,-24,-113,
    -116,-24,-113,-100,-16,-90,-80,-74,-16,-90,-75,-85,-16,-90,-77,-107,-28,-108,-85,-24,
    -109,-79,-24,-109,-77,-24,-108,-106,-16,-89,-113,-118,-24,-107,-92,-16,-90,-68,-84,-28,
    -107,-99,-28,-107,-95,-16,-90,-66,-79,-16,-89,-125,-110,-28,-107,-85,-24,-103,-112,-24,
    -103,-100,-24,-103,-89,-24,-103,-87,-24,-102,-87,-24,-102,-120,-24,-100,-114,-24,-101,-94,
    -24,-99,-71,-24,-100,-88,-24,-99,-85,-24,-98,-122,-28,-105,-105,-24,-97,-95,-24,-96,
    -127,-28,-105,-71,-24,-95,-96,-24,-95,-93,-16,-89,-103,-89,-24,-93,-105,-24,-93,-98,
    -28,-104,-75,-24,-93,-70,-29,-110,-69,-16,-89,-94,-82,-16,-89,-91,-90,-28,-102,-66,
    -28,-101,-121,-24,-86,-96,-24,-85,-83,-24,-82,-118,-24,-79,-107,-16,-89,-78,-88,-24,
    -78,-85,-24,-77,-127,-24,-76,-101,-24,-75,-73,-16,-89,-68,-81,-16,-96,-96,-124,-24,
    -73,-117,-24,-74,-68,-24,-73,-80,-16,-96,-93,-98,-24,-69,-108,-24,-68,-72,-16,-88,
    -105,-110,-16,-88,-105,-83,-23,-126,-108,-23,-125,-79,-23,-124,-111,-16,-88,-100,-82,-23,
    -124,-101,-23,-120,-72,-23,-117,-105,-23,-117,-104,-23,-119,-68,-23,-113,-71,-23,-112,-107,
    -16,-88,-81,-70,-23,-106,-117,-28,-90,-107,-23,-106,-73,-16,-88,-75,-73,-28,-89,-90,
    -23,-101,-125,-27,-74,-78,-23,-100,-93,-16,-87,-123,-123,-16,-87,-120,-102,-28,-87,-82,
    -28,-87,-74,-23,-97,-96,-16,-87,-112,-118,-28,-86,-78,-16,-87,-110,-106,-23,-96,-117,
    -23,-96,-117,-23,-96,-87,-16,-87,-106,-74,-23,-93,-94,-28,-84,-77,-23,-92,-87,-23,
    -90,-89,-23,-89,-126,-23,-89,-66,-28,-81,-114,-16,-87,-84,-80,-23,-84,-110,-23,-79,
    -128,-23,-77,-67,-28,-77,-114,-28,-77,-83,-23,-75,-89,-16,-86,-125,-114,-28,-77,-72,
    -16,-86,-124,-123,-16,-86,-120,-114,-16,-86,-118,-111,-23,-70,-69,-28,-75,-106,-23,-69,
    -71,-23,-69,-66,-23,-68,-123,-23,-68,-113,-23,-68,-106,-23,-68,-69,-16,-86,-104,-128,
};

const NfkcTable& nfkc_table() {
    static const NfkcTable table{kNfkcRows, 4807, kNfkcPool};
    return table;
}

}  // namespace addrparse::detail
