#include "tables.hpp"

namespace ehpack::tables {

// Large-item types of the square/cube parameter set: upper boundary, beta, gamma, phi.
const BaseRow kBaseRows[151] = {
    {"1", 1, 0, 0},  // 1
    {"0.7", 1, 0, 1},  // 2
    {"0.6875", 1, 0, 2},  // 3
    {"0.675", 1, 0, 3},  // 4
    {"0.67", 1, 0, 4},  // 5
    {"0.668", 1, 0, 5},  // 6
    {"0.667", 1, 0, 6},  // 7
    {"0.6667", 1, 0, 7},  // 8
    {"2/3", 1, 0, 8},  // 9
    {"0.666", 1, 0, 9},  // 10
    {"0.665", 1, 0, 10},  // 11
    {"0.6625", 1, 0, 11},  // 12
    {"0.65625", 1, 0, 12},  // 13
    {"0.65", 1, 0, 13},  // 14
    {"7/11", 1, 0, 14},  // 15
    {"0.625", 1, 0, 15},  // 16
    {"0.6", 1, 0, 16},  // 17
    {"0.5", 2, 0, 0},  // 18
    {"0.4", 2, 1, 0},  // 19
    {"0.375", 2, 1, 0},  // 20
    {"4/11", 2, 1, 0},  // 21
    {"0.35", 2, 1, 1},  // 22
    {"0.34375", 2, 1, 2},  // 23
    {"0.3375", 2, 1, 3},  // 24
    {"0.335", 2, 1, 4},  // 25
    {"0.334", 2, 1, 5},  // 26
    {"0.3335", 2, 1, 6},  // 27
    {"0.33335", 2, 1, 7},  // 28
    {"1/3", 3, 1, 0},  // 29
    {"0.3333", 3, 1, 0},  // 30
    {"0.333", 3, 1, 0},  // 31
    {"0.332", 3, 1, 0},  // 32
    {"0.33", 3, 1, 0},  // 33
    {"0.325", 3, 1, 0},  // 34
    {"0.3125", 3, 1, 0},  // 35
    {"0.3", 3, 1, 0},  // 36
    {"3/11", 3, 1, 0},  // 37
    {"1/4", 4, 1, 0},  // 38
    {"1/5", 5, 1, 0},  // 39
    {"2/11", 5, 1, 0},  // 40
    {"1/6", 6, 1, 0},  // 41
    {"0.15", 6, 2, 0},  // 42
    {"1/7", 7, 2, 0},  // 43
    {"1/8", 8, 2, 0},  // 44
    {"1/9", 9, 2, 0},  // 45
    {"1/10", 10, 3, 0},  // 46
    {"1/11", 11, 3, 0},  // 47
    {"1/12", 12, 3, 0},  // 48
    {"1/13", 13, 3, 0},  // 49
    {"0.075", 13, 4, 0},  // 50
    {"1/14", 14, 4, 0},  // 51
    {"1/15", 15, 4, 0},  // 52
    {"1/16", 16, 4, 0},  // 53
    {"0.06", 16, 5, 0},  // 54
    {"1/17", 17, 5, 0},  // 55
    {"1/18", 18, 5, 0},  // 56
    {"1/19", 19, 5, 0},  // 57
    {"1/20", 20, 6, 0},  // 58
    {"1/21", 21, 6, 0},  // 59
    {"1/22", 22, 6, 0},  // 60
    {"1/23", 23, 6, 0},  // 61
    {"3/70", 23, 7, 0},  // 62
    {"1/24", 24, 7, 0},  // 63
    {"1/25", 25, 7, 0},  // 64
    {"1/26", 26, 7, 0},  // 65
    {"3/80", 26, 8, 0},  // 66
    {"1/27", 27, 8, 0},  // 67
    {"1/28", 28, 8, 0},  // 68
    {"1/29", 29, 8, 0},  // 69
    {"1/30", 30, 9, 0},  // 70
    {"1/31", 31, 9, 0},  // 71
    {"1/32", 32, 9, 0},  // 72
    {"1/33", 33, 9, 0},  // 73
    {"0.03", 33, 10, 0},  // 74
    {"1/34", 34, 10, 0},  // 75
    {"1/35", 35, 10, 0},  // 76
    {"1/36", 36, 10, 0},  // 77
    {"1/37", 37, 11, 0},  // 78
    {"1/38", 38, 11, 0},  // 79
    {"1/39", 39, 11, 0},  // 80
    {"1/40", 40, 12, 0},  // 81
    {"1/41", 41, 12, 0},  // 82
    {"1/42", 42, 12, 0},  // 83
    {"1/43", 43, 12, 0},  // 84
    {"1/44", 44, 13, 0},  // 85
    {"1/45", 45, 13, 0},  // 86
    {"1/46", 46, 13, 0},  // 87
    {"1/47", 47, 14, 0},  // 88
    {"1/48", 48, 14, 0},  // 89
    {"1/49", 49, 14, 0},  // 90
    {"1/50", 50, 15, 0},  // 91
    {"1/51", 51, 15, 0},  // 92
    {"1/52", 52, 15, 0},  // 93
    {"1/53", 53, 15, 0},  // 94
    {"1/54", 54, 16, 0},  // 95
    {"1/55", 55, 16, 0},  // 96
    {"1/56", 56, 16, 0},  // 97
    {"1/57", 57, 17, 0},  // 98
    {"1/58", 58, 17, 0},  // 99
    {"1/59", 59, 17, 0},  // 100
    {"1/60", 60, 18, 0},  // 101
    {"1/61", 61, 18, 0},  // 102
    {"1/62", 62, 18, 0},  // 103
    {"1/63", 63, 18, 0},  // 104
    {"1/64", 64, 19, 0},  // 105
    {"1/65", 65, 19, 0},  // 106
    {"1/66", 66, 19, 0},  // 107
    {"1/67", 67, 20, 0},  // 108
    {"1/68", 68, 20, 0},  // 109
    {"1/69", 69, 20, 0},  // 110
    {"1/70", 70, 21, 0},  // 111
    {"1/71", 71, 21, 0},  // 112
    {"1/72", 72, 21, 0},  // 113
    {"1/73", 73, 21, 0},  // 114
    {"1/74", 74, 22, 0},  // 115
    {"1/75", 75, 22, 0},  // 116
    {"1/76", 76, 22, 0},  // 117
    {"1/77", 77, 23, 0},  // 118
    {"1/78", 78, 23, 0},  // 119
    {"1/79", 79, 23, 0},  // 120
    {"1/80", 80, 24, 0},  // 121
    {"1/81", 81, 24, 0},  // 122
    {"1/82", 82, 24, 0},  // 123
    {"1/83", 83, 24, 0},  // 124
    {"1/84", 84, 25, 0},  // 125
    {"1/85", 85, 25, 0},  // 126
    {"1/86", 86, 25, 0},  // 127
    {"1/87", 87, 26, 0},  // 128
    {"1/88", 88, 26, 0},  // 129
    {"1/89", 89, 26, 0},  // 130
    {"1/90", 90, 27, 0},  // 131
    {"1/91", 91, 27, 0},  // 132
    {"1/92", 92, 27, 0},  // 133
    {"1/93", 92, 27, 0},  // 134
    {"1/94", 94, 28, 0},  // 135
    {"1/95", 95, 28, 0},  // 136
    {"1/96", 96, 28, 0},  // 137
    {"1/97", 97, 29, 0},  // 138
    {"1/98", 98, 29, 0},  // 139
    {"1/99", 98, 29, 0},  // 140
    {"1/100", 100, 30, 0},  // 141
    {"1/101", 101, 30, 0},  // 142
    {"1/102", 102, 30, 0},  // 143
    {"1/103", 103, 30, 0},  // 144
    {"1/104", 104, 31, 0},  // 145
    {"1/105", 105, 31, 0},  // 146
    {"1/106", 106, 31, 0},  // 147
    {"1/107", 107, 32, 0},  // 148
    {"1/108", 108, 32, 0},  // 149
    {"1/109", 109, 32, 0},  // 150
    {"1/110", 110, 33, 0},  // 151
};

const char* const kBaseDelta[16] = {
    "0.3", "0.3125", "0.325", "0.33", "0.332", "0.333", "0.3333", "1/3", "0.334", "0.335", "0.3375", "0.34375", "0.35", "4/11", "0.375", "0.4"};

// alpha_i for d=2, types 19..151 (types 1..18 have alpha 0).
const char* const kBaseAlpha2[133] = {
    "0.11526431542309074",  // 19
    "0.17175402209391144",  // 20
    "0.14364948238440467",  // 21
    "0.17775964679070577",  // 22
    "0.16247599807416024",  // 23
    "0.17013150154133094",  // 24
    "0.17218382694021506",  // 25
    "0.17186065470253054",  // 26
    "0.1712411485735466",  // 27
    "0.17115325420709004",  // 28
    "0.011808683266528508",  // 29
    "0.08864616236688028",  // 30
    "0.0746578085809842",  // 31
    "0.1392973955221088",  // 32
    "0.20463684875950888",  // 33
    "0.11988863237025116",  // 34
    "0.1489855469399089",  // 35
    "0.42658319200096906",  // 36
    "0.3313855159770591",  // 37
    "0.26591984078589526",  // 38
    "0.23652286713889142",  // 39
    "0.17320945474790095",  // 40
    "0.2907287245318693",  // 41
    "0.27690915366279856",  // 42
    "0.35186597263941155",  // 43
    "0.28487022531216166",  // 44
    "0.3405383352070134",  // 45
    "0.13927977565087557",  // 46
    "0.12478043051170912",  // 47
    "0.17368906765817593",  // 48
    "0.049341692986982266",  // 49
    "0.21756972846743544",  // 50
    "0.15176378068862706",  // 51
    "0.27986004047748236",  // 52
    "0.09140290314421057",  // 53
    "0.16115290643799296",  // 54
    "0.10509477906408826",  // 55
    "0.07908677596102542",  // 56
    "0.06049271754448721",  // 57
    "0.027902842302122366",  // 58
    "0.03757222734769261",  // 59
    "0.044034294107809235",  // 60
    "0.04169873464584284",  // 61
    "0.045855398808323844",  // 62
    "0.03268220721227799",  // 63
    "0.020287554239005412",  // 64
    "0.03662245261759983",  // 65
    "0.05299014948250891",  // 66
    "0.05837546569384355",  // 67
    "0.06021197613253543",  // 68
    "0.05286287383333055",  // 69
    "0.041141831190207534",  // 70
    "0.025858702537442546",  // 71
    "0.03667621572334345",  // 72
    "0.05790545597682889",  // 73
    "0.0249935407107143",  // 74
    "0.05090633446809589",  // 75
    "0.04180489086300371",  // 76
    "0.0598352802367374",  // 77
    "0.04622400142944383",  // 78
    "0.06598393751625004",  // 79
    "0.015819026610491616",  // 80
    "0.014052365574156844",  // 81
    "0.019542717826361966",  // 82
    "0.02093163772726897",  // 83
    "0.03232182211334006",  // 84
    "0.035404672067686827",  // 85
    "0.04160032480693088",  // 86
    "0.03084632143248167",  // 87
    "0.03218274376106067",  // 88
    "0.027386520210324672",  // 89
    "0.0467579925718552",  // 90
    "0.03515363399072097",  // 91
    "0.009522308778970257",  // 92
    "0.050007623111272215",  // 93
    "0.027397549490475293",  // 94
    "0.040108142281991443",  // 95
    "0.04060265542768865",  // 96
    "0.06176115933187615",  // 97
    "0.05149748670123738",  // 98
    "0.030976848369531906",  // 99
    "0.04985378105030419",  // 100
    "0.02428257540185641",  // 101
    "0.039279772504672905",  // 102
    "0.018431969726226516",  // 103
    "0.01615117687134704",  // 104
    "0.033836619264623",  // 105
    "0.021684498478341585",  // 106
    "0.018653119555053665",  // 107
    "0.017510378838004492",  // 108
    "0.005027225774378641",  // 109
    "0.0050070660422215085",  // 110
    "0.008641122238781884",  // 111
    "0.0114109321956688",  // 112
    "0.00017017085816917188",  // 113
    "0.007227843412475732",  // 114
    "0.02380064289496081",  // 115
    "0.024626599428481333",  // 116
    "0.0002926203031912711",  // 117
    "0.00367483614722508",  // 118
    "0.003637542351726364",  // 119
    "0.0022174466541568516",  // 120
    "0.003972815375790473",  // 121
    "0.0063500940342546275",  // 122
    "0.0008190666659831924",  // 123
    "0.006404294461389681",  // 124
    "0.0772226658137164",  // 125
    "0.002848362891246903",  // 126
    "0.0012952627416890072",  // 127
    "0.017932379180303493",  // 128
    "0.007137167661640409",  // 129
    "0.03712900994359092",  // 130
    "0.0029178803264349185",  // 131
    "0.015565067465901694",  // 132
    "0.0007797083742386857",  // 133
    "0.045217214440781583",  // 134
    "0.0013741843692585687",  // 135
    "0.0003354018167419648",  // 136
    "0.0012121494697902024",  // 137
    "0.015325390110678683",  // 138
    "0.0028034548030816953",  // 139
    "0.0415339431984868",  // 140
    "0.002954384831987067",  // 141
    "0.028214095268082884",  // 142
    "0.008801691293012892",  // 143
    "0.011981667605959034",  // 144
    "0",  // 145
    "0.04442994587106425",  // 146
    "0.0025122969557108132",  // 147
    "0.005897723663266186",  // 148
    "0.0008298536197157702",  // 149
    "0.003146593473569992",  // 150
    "0.007423928474611485",  // 151
};

const char* const kBaseW2[15] = {
    "0.5218896004296165",  // case 2
    "0.6367683021976823",  // case 3
    "0.5508161595298383",  // case 4
    "0.6081996168574735",  // case 5
    "0.5966563767881228",  // case 6
    "0.5417242692011557",  // case 7
    "0.6988933681604961",  // case 8
    "0.7677036830017706",  // case 9
    "0.7691331237757477",  // case 10
    "0.773230983786544",  // case 11
    "0.7836563381680435",  // case 12
    "0.7929071522802713",  // case 13
    "0.8113137810136913",  // case 14
    "0.8219971336489986",  // case 15
    "0.872756492818088",  // case 16
};

// alpha_i for d=3, types 19..151 (types 1..18 have alpha 0).
const char* const kBaseAlpha3[133] = {
    "0.23560671174940934",  // 19
    "0.24349456708719025",  // 20
    "0.011054757786850555",  // 21
    "0.09233137770530553",  // 22
    "0.10296544873687286",  // 23
    "0.09980866333707894",  // 24
    "0.11275956304754697",  // 25
    "0.10573246664180191",  // 26
    "0.21831169314212995",  // 27
    "0.16810602509149197",  // 28
    "0.28469363087983357",  // 29
    "0.46134537517964436",  // 30
    "0.4754821887062161",  // 31
    "0.4834778208599464",  // 32
    "0.38230203454521344",  // 33
    "0.20815458494242878",  // 34
    "0.2094357013281899",  // 35
    "0.6476643335428202",  // 36
    "0.4846417112019235",  // 37
    "0.3459551479018446",  // 38
    "0.1967822914561262",  // 39
    "0.22903844377204607",  // 40
    "0.38585033090166515",  // 41
    "0.2633509344925706",  // 42
    "0.37148866892244403",  // 43
    "0.3228819685751433",  // 44
    "0.294966161863426",  // 45
    "0.11613078486074929",  // 46
    "0.21976007519116803",  // 47
    "0.2367222519372697",  // 48
    "0.06874946889000572",  // 49
    "0.30801878565803864",  // 50
    "0.10874307802527139",  // 51
    "0.34382124885682674",  // 52
    "0.19822255924214388",  // 53
    "0.21657253679087018",  // 54
    "0.21064008575188697",  // 55
    "0.5286073975827003",  // 56
    "0.23593465027098925",  // 57
    "0.10627837309910759",  // 58
    "0.08778737037136902",  // 59
    "0.0628782883568702",  // 60
    "0.07892306409577904",  // 61
    "0.06811428634665145",  // 62
    "0.08934119933293255",  // 63
    "0.10985985543445637",  // 64
    "0.16657268323184893",  // 65
    "0.16370099694324725",  // 66
    "0.14763245122124014",  // 67
    "0.1671268810238925",  // 68
    "0.18510082544610912",  // 69
    "0.011723129997064097",  // 70
    "0.02425242847273701",  // 71
    "0.011268687510284647",  // 72
    "0.01566133856254459",  // 73
    "0.0023807218784999695",  // 74
    "0",  // 75
    "0.014065837749926702",  // 76
    "0.07665846642009927",  // 77
    "0.08912467432180055",  // 78
    "0.06724339050226902",  // 79
    "0.11390203480637812",  // 80
    "0.1529879344816335",  // 81
    "0.09257293559305935",  // 82
    "0.13375170776745032",  // 83
    "0.10899217160505548",  // 84
    "0.08961421224461213",  // 85
    "0.0870469166593813",  // 86
    "0.11967303625257314",  // 87
    "0.08625153412085623",  // 88
    "0.11468071689788334",  // 89
    "0.09031490851523155",  // 90
    "0.06420968479797878",  // 91
    "0.08246536630622064",  // 92
    "0.06735253993260948",  // 93
    "0.07986056987421691",  // 94
    "0.08506428649843378",  // 95
    "0.06921061897885533",  // 96
    "0.07888370245488946",  // 97
    "0.0730839676106615",  // 98
    "0.07882644193751703",  // 99
    "0.07855811096717208",  // 100
    "0.0755618507268449",  // 101
    "0.06683328717340548",  // 102
    "0.07109645510485962",  // 103
    "0.07686292296039537",  // 104
    "0.09207944256220246",  // 105
    "0.06792762522935986",  // 106
    "0.07184860065578008",  // 107
    "0.09077658256097626",  // 108
    "0.06892046751777886",  // 109
    "0.08404266181153941",  // 110
    "0.05725657878308299",  // 111
    "0.04505359172704221",  // 112
    "0.05865839976147119",  // 113
    "0.06098740030051164",  // 114
    "0.06750979580178162",  // 115
    "0.07232664164227215",  // 116
    "0.07155889973262747",  // 117
    "0.07655628977344214",  // 118
    "0.08531209453810662",  // 119
    "0.07272780537431511",  // 120
    "0.060692790181056167",  // 121
    "0.07565018146829666",  // 122
    "0.07435001036624961",  // 123
    "0.07641678559172299",  // 124
    "0.09172841413844901",  // 125
    "0.09045869915075516",  // 126
    "0.05284222333171534",  // 127
    "0.07194325920411004",  // 128
    "0.08907570891638156",  // 129
    "0.09267691307775361",  // 130
    "0.06180156823851851",  // 131
    "0.057769376722262844",  // 132
    "0.06774002323306783",  // 133
    "0.0751076759531758",  // 134
    "0.12059175834028163",  // 135
    "0.08660859544741523",  // 136
    "0.06185526343471609",  // 137
    "0.06456079230878453",  // 138
    "0.0636821969541907",  // 139
    "0.07602483985713077",  // 140
    "0.08915221681102126",  // 141
    "0.0984722500891399",  // 142
    "0.09067271353727313",  // 143
    "0.09414865557456398",  // 144
    "0.10168269428760995",  // 145
    "0.0909148528042305",  // 146
    "0.09549983384551514",  // 147
    "0.07970401566114022",  // 148
    "0.09550429166121593",  // 149
    "0.11367223296069545",  // 150
    "0.09621713402681015",  // 151
};

const char* const kBaseW3[15] = {
    "0.3559465695997889",  // case 2
    "0.3324106710303888",  // case 3
    "0.3547433890555143",  // case 4
    "0.29283548893321054",  // case 5
    "0.2680609843073525",  // case 6
    "0.30382397508342246",  // case 7
    "0.42984690908567424",  // case 8
    "0.7660334876156012",  // case 9
    "0.7674343307466625",  // case 10
    "0.773273461291727",  // case 11
    "0.7932633383349649",  // case 12
    "0.8240834379579076",  // case 13
    "0.8470244201613557",  // case 14
    "0.88618415266251",  // case 15
    "0.9152418129618586",  // case 16
};

}  // namespace ehpack::tables
