#pragma once
// Published coefficient tables, transcribed digit for digit. Index k of an
// n-point list is the q^k coefficient; index d-1 of an instanton list is n_d.
#include <string>
#include <vector>

namespace reference {

using Digits = std::vector<std::string>;

inline const Digits npoint_n3 = {
    "5",
    "2875",
    "4876875",
    "8564575000",
    "15517926796875",
    "28663236110956000",
    "53621944306062201000",
    "101216230345800061125625",
    "192323666400003538944396875",
    "367299732093982242625847031250",
    "704288164978454714776724365580000",
    "1354842473951260627644461070753075500",
    "2613295702542192770504516764304958585000",
    "5051976384195377826370376750184667397150000",
    "9784992122065556293839548184561593434114765625",
    "18983216783256131050355758292004110332155634496875",
    "36880398908911843175757970052077286676680907186572875",
    "71739993072775923425756947313710004388338109828244718125",
    "139702324572802672116486725324237666156179096139345867681250",
};

inline const Digits npoint_n4 = {
    "6",
    "120960",
    "4136832000",
    "148146924602880",
    "5420219848911544320",
    "200623934537137119778560",
    "7478994517395643259712737280",
    "280135301818357004749298146851840",
    "10528167289356385699173014219946393600",
    "396658819202496234945300681212382224722560",
    "14972930462574202465673643937107499992165427200",
    "566037069767251121484562070892662863943365345190400",
    "21424151141341932048068067497996096856724987411324108800",
};

inline const Digits npoint_n5 = {
    "7",
    "3727381",
    "2637885990187",
    "1927092954108108787",
    "1425153551321014327663291",
    "1060347883438857662557634869906",
    "791661306374088776109692880989252173",
    "592348256908461616176898022359492565546566",
    "443865568545713063761643598030194801299861575595",
    "332947403131697202086626568381790256001850741509664373",
};

inline const Digits npoint_n6 = {
    "8",
    "106975232",
    "1672023727001600",
    "26611692333081695092736",
    "426129121674687823674948571136",
    "6842148599241293047857339542861643776",
    "110018992594692024449889564415904439556898816",
    "1770551943055574073245974844490813198478975912902656",
    "28508925683951911989843155602330000507452539542539447947264",
};

// n = 3, Y^1_1, degree factor d^3.
inline const Digits quintic_y11 = {
    "2875",
    "609250",
    "317206375",
    "242467530000",
    "229305888887625",
    "248249742118022000",
    "295091050570845659250",
    "375632160937476603550000",
    "503840510416985243645106250",
    "704288164978454686113488249750",
    "1017913203569692432490203659468875",
    "1512323901934139334751675234074638000",
    "2299488568136266648325160104772265542625",
    "3565959228158001564810294084668822024070250",
    "5624656824668483274179483938371579753751395250",
    "9004003639871055462831535610291411200360685606000",
};

// n = 4, Y^1_1, degree factor d^2.
inline const Digits sextic_y11 = {
    "60480",
    "440884080",
    "6255156277440",
    "117715791990353760",
    "2591176156368821985600",
};

// n = 5: Y^1_1 with d^2, Y^1_2 with d^1.
inline const Digits septic_y11 = {
    "1009792",
    "122239786088",
    "30528671745480104",
    "10378199509395886153216",
};
inline const Digits septic_y12 = {
    "1707797",
    "510787745643",
    "222548537108926490",
    "113635631482486991647224",
};

// n = 6: Y^1_1 with d^2, Y^1_2 with d^1, Y^2_2 with d^0.
inline const Digits octic_y11 = {
    "15984640",
    "33397159706624",
    "154090254047541417984",
    "1000674891265872131899670528",
};
inline const Digits octic_y12 = {
    "37502976",
    "224340704157696",
    "2000750410187341381632",
    "21122119007324663457380794368",
};
inline const Digits octic_y22 = {
    "59021312",
    "821654025830400",
    "12197109744970010814464",
    "186083410628492378226388631552",
};

inline const Digits& npoint(int dimension) {
  switch (dimension) {
    case 3: return npoint_n3;
    case 4: return npoint_n4;
    case 5: return npoint_n5;
    default: return npoint_n6;
  }
}

}  // namespace reference
