// Generated by tools/gen_constants.py. Do not edit by hand.

use crate::precision::DoubleDouble;

pub const DD_PI: DoubleDouble = DoubleDouble::from_parts(3.141592653589793, 1.2246467991473532e-16);
pub const DD_LN_2: DoubleDouble = DoubleDouble::from_parts(0.6931471805599453, 2.3190468138462996e-17);
pub const DD_LN_PI: DoubleDouble = DoubleDouble::from_parts(1.1447298858494002, 1.0265951162707826e-17);
pub const DD_LN_2PI: DoubleDouble = DoubleDouble::from_parts(1.8378770664093456, -7.756588316134483e-17);
pub const DD_EULER_GAMMA: DoubleDouble = DoubleDouble::from_parts(0.5772156649015329, -4.942915152430645e-18);

/// `B_{2k} / (2k)!` for `k = 1..`.
pub const EM_BERNOULLI: [DoubleDouble; 90] = [
    DoubleDouble::from_parts(0.08333333333333333, 4.625929269271485e-18),
    DoubleDouble::from_parts(-0.001388888888888889, 5.300543954373577e-20),
    DoubleDouble::from_parts(3.306878306878307e-05, -2.2300719288557665e-21),
    DoubleDouble::from_parts(-8.267195767195768e-07, 3.457597454003665e-23),
    DoubleDouble::from_parts(2.08767569878681e-08, -1.2073450591132599e-24),
    DoubleDouble::from_parts(-5.284190138687493e-10, 3.517096671929869e-27),
    DoubleDouble::from_parts(1.3382536530684679e-11, -2.828354019907999e-29),
    DoubleDouble::from_parts(-3.3896802963225827e-13, -1.4986928409964295e-29),
    DoubleDouble::from_parts(8.586062056277845e-15, -6.05252374381974e-31),
    DoubleDouble::from_parts(-2.174868698558062e-16, 4.961617782549996e-33),
    DoubleDouble::from_parts(5.5090028283602295e-18, -1.49827152194499e-35),
    DoubleDouble::from_parts(-1.3954464685812522e-19, -1.0350590497256251e-35),
    DoubleDouble::from_parts(3.534707039629467e-21, 1.894231142684204e-37),
    DoubleDouble::from_parts(-8.953517427037546e-23, -5.728752743153026e-39),
    DoubleDouble::from_parts(2.267952452337683e-24, 1.3043458462619563e-40),
    DoubleDouble::from_parts(-5.744790668872202e-26, 1.663242973708004e-43),
    DoubleDouble::from_parts(1.455172475614865e-27, -5.613265715443096e-44),
    DoubleDouble::from_parts(-3.6859949406653103e-29, 1.0778256413554197e-45),
    DoubleDouble::from_parts(9.336734257095045e-31, -3.9347970210731877e-47),
    DoubleDouble::from_parts(-2.36502241570063e-32, 2.0347170931532494e-49),
    DoubleDouble::from_parts(5.990671762482134e-34, 1.6265467158179092e-50),
    DoubleDouble::from_parts(-1.5174548844682903e-35, 5.493014407946745e-52),
    DoubleDouble::from_parts(3.843758125454189e-37, -3.685053096067968e-53),
    DoubleDouble::from_parts(-9.736353072646691e-39, 2.258059165188444e-55),
    DoubleDouble::from_parts(2.466247044200681e-40, -1.505641802268162e-56),
    DoubleDouble::from_parts(-6.247076741820743e-42, -2.7106815859687654e-58),
    DoubleDouble::from_parts(1.5824030244644914e-43, 2.545428531496969e-60),
    DoubleDouble::from_parts(-4.008273685948936e-45, -2.2124211668946826e-61),
    DoubleDouble::from_parts(1.0153075855569557e-46, -9.404269751258486e-63),
    DoubleDouble::from_parts(-2.5718041582418717e-48, -6.537655454012542e-65),
    DoubleDouble::from_parts(6.514456035233815e-50, -2.763626172529861e-66),
    DoubleDouble::from_parts(-1.6501309906896525e-51, 3.1794529475063687e-68),
    DoubleDouble::from_parts(4.179830628539476e-53, 2.617556823159939e-69),
    DoubleDouble::from_parts(-1.058763466770291e-54, 6.6915528436035195e-71),
    DoubleDouble::from_parts(2.6818791912607708e-56, -8.70695425146146e-73),
    DoubleDouble::from_parts(-6.793279351107421e-58, 2.795667911354165e-74),
    DoubleDouble::from_parts(1.7207577616681404e-59, 4.65433497191727e-76),
    DoubleDouble::from_parts(-4.358730329348894e-61, 2.8840522874209336e-77),
    DoubleDouble::from_parts(1.1040792903684666e-62, 6.624841731022409e-79),
    DoubleDouble::from_parts(-2.7966655133781345e-64, 2.628041826403209e-81),
    DoubleDouble::from_parts(7.084036501679471e-66, -5.026235239023924e-82),
    DoubleDouble::from_parts(-1.794407408289224e-67, 1.5372719769275798e-84),
    DoubleDouble::from_parts(4.545287063611096e-69, 9.87696151726261e-87),
    DoubleDouble::from_parts(-1.1513346631982051e-70, -7.192856523313341e-87),
    DoubleDouble::from_parts(2.9163647710923614e-72, -3.8911087510195904e-89),
    DoubleDouble::from_parts(-7.387238263497337e-74, -6.923136687699924e-90),
    DoubleDouble::from_parts(1.8712093117637953e-75, 1.5886680102062367e-92),
    DoubleDouble::from_parts(-4.739828557761799e-77, -9.517121002177184e-94),
    DoubleDouble::from_parts(1.2006125993354507e-78, -1.109850335891779e-95),
    DoubleDouble::from_parts(-3.0411872415142924e-80, 5.125117133572647e-97),
    DoubleDouble::from_parts(7.703417274705106e-82, 3.948211996024456e-99),
    DoubleDouble::from_parts(-1.951298390909883e-83, -1.2533409416284754e-99),
    DoubleDouble::from_parts(4.942696565159462e-85, -2.8094990080509668e-101),
    DoubleDouble::from_parts(-1.2519996659171848e-86, -2.5859037541718075e-103),
    DoubleDouble::from_parts(3.1713522017635153e-88, 1.808466797142321e-104),
    DoubleDouble::from_parts(-8.033128970735334e-90, -5.501602254025203e-106),
    DoubleDouble::from_parts(2.0348153391661465e-91, 4.956249311149982e-108),
    DoubleDouble::from_parts(-5.154247466447474e-93, -2.4639060810936437e-109),
    DoubleDouble::from_parts(1.3055861352149468e-94, -3.669056422783558e-111),
    DoubleDouble::from_parts(-3.307088314175091e-96, -6.886640190175871e-113),
    DoubleDouble::from_parts(8.376952560049092e-98, -6.082546927852001e-114),
    DoubleDouble::from_parts(-2.1219068717497136e-99, -1.893178093634648e-115),
    DoubleDouble::from_parts(5.37485289561228e-101, 1.5431494060360965e-118),
    DoubleDouble::from_parts(-1.3614661432172069e-102, -4.0565948103494285e-119),
    DoubleDouble::from_parts(3.448634027993399e-104, 2.9458047085233967e-120),
    DoubleDouble::from_parts(-8.735492041638356e-106, 9.4189357054137e-122),
    DoubleDouble::from_parts(2.2127259833925496e-107, 1.2061839538632616e-123),
    DoubleDouble::from_parts(-5.604900392837224e-109, 1.1590480702591175e-125),
    DoubleDouble::from_parts(1.419737854999179e-110, -1.0538661729107658e-126),
    DoubleDouble::from_parts(-3.596237998258763e-112, 1.3118059698383575e-128),
    DoubleDouble::from_parts(9.109377266078232e-114, -5.075775794901921e-131),
    DoubleDouble::from_parts(-2.307432217109123e-115, -1.0179374029871243e-131),
    DoubleDouble::from_parts(5.844794085299002e-117, 3.158983160261219e-133),
    DoubleDouble::from_parts(-1.4805036371705745e-118, -1.8032521549667245e-135),
    DoubleDouble::from_parts(3.7501595226227194e-120, 2.8585141457797e-136),
    DoubleDouble::from_parts(-9.499265041992958e-122, -2.9137013725177297e-139),
    DoubleDouble::from_parts(2.40619194446752e-123, -2.156821690478659e-140),
    DoubleDouble::from_parts(-6.094955397102685e-125, -2.4131212075875234e-141),
    DoubleDouble::from_parts(1.5438702377042473e-126, -1.4827854235963976e-142),
    DoubleDouble::from_parts(-3.9106689968592925e-128, 1.9958189536928135e-144),
    DoubleDouble::from_parts(9.90584028987943e-130, -5.990937108052624e-146),
    DoubleDouble::from_parts(-2.5091786578563554e-131, 1.280123839457573e-147),
    DoubleDouble::from_parts(6.35582378960246e-133, -3.3994016155804947e-149),
    DoubleDouble::from_parts(-1.609948973461625e-134, 1.1085599508572997e-151),
    DoubleDouble::from_parts(4.0780483898724625e-136, -2.2687099531588687e-152),
    DoubleDouble::from_parts(-1.032981724531519e-137, -9.220601136512268e-155),
    DoubleDouble::from_parts(2.6165732752609202e-139, -4.3351815619058493e-156),
    DoubleDouble::from_parts(-6.627857533408623e-141, 5.518180594483479e-157),
    DoubleDouble::from_parts(1.6788559257443675e-142, -1.7064658138350165e-158),
    DoubleDouble::from_parts(-4.2525917390343004e-144, -2.3021245512754632e-160),
];

/// Stirling series coefficients `B_{2k} / (2k (2k - 1))` for `k = 1..`.
pub const STIRLING: [DoubleDouble; 40] = [
    DoubleDouble::from_parts(0.08333333333333333, 4.625929269271485e-18),
    DoubleDouble::from_parts(-0.002777777777777778, 1.0601087908747154e-19),
    DoubleDouble::from_parts(0.0007936507936507937, 6.883823317368282e-22),
    DoubleDouble::from_parts(-0.0005952380952380953, 5.36938218754726e-20),
    DoubleDouble::from_parts(0.0008417508417508417, 3.6870174889237694e-20),
    DoubleDouble::from_parts(-0.0019175269175269176, 1.0675702776872475e-19),
    DoubleDouble::from_parts(0.00641025641025641, 2.2240044563805217e-19),
    DoubleDouble::from_parts(-0.029550653594771242, 4.861760957508855e-19),
    DoubleDouble::from_parts(0.17964437236883057, -6.401600482710946e-19),
    DoubleDouble::from_parts(-1.3924322169059011, 1.5837056989230303e-17),
    DoubleDouble::from_parts(13.402864044168393, -6.154114101993966e-16),
    DoubleDouble::from_parts(-156.84828462600203, 9.391823141715389e-15),
    DoubleDouble::from_parts(2193.1033333333335, -1.3339255626002948e-13),
    DoubleDouble::from_parts(-36108.77125372499, 5.897583353514365e-13),
    DoubleDouble::from_parts(691472.268851313, 2.5585296305158e-11),
    DoubleDouble::from_parts(-15238221.539407415, -8.76774522490625e-10),
    DoubleDouble::from_parts(382900751.39141417, -2.4082684757733585e-08),
    DoubleDouble::from_parts(-10882266035.784391, 3.141830930219749e-07),
    DoubleDouble::from_parts(347320283765.00226, -6.048528997747748e-06),
    DoubleDouble::from_parts(-12369602142269.275, 0.0009363732896507286),
    DoubleDouble::from_parts(488788064793079.3, 0.022575815162518022),
    DoubleDouble::from_parts(-2.1320333960919372e+16, -1.8969750589821368),
    DoubleDouble::from_parts(1.0217752965257001e+18, -18.434712371946414),
    DoubleDouble::from_parts(-5.35754721733002e+19, -90.8277091919692),
    DoubleDouble::from_parts(3.0615782637048834e+21, -14332.848948670377),
    DoubleDouble::from_parts(-1.8999917426399204e+23, -1259161.1429306944),
    DoubleDouble::from_parts(1.2763374033828835e+25, -644253432.6223022),
    DoubleDouble::from_parts(-9.252847176120416e+26, -53092754794.83476),
    DoubleDouble::from_parts(7.218822595185611e+28, -3236401453454.9834),
    DoubleDouble::from_parts(-6.045183405995857e+30, 226514861971549.44),
    DoubleDouble::from_parts(5.4206704715700946e+32, -656273188931470.0),
    DoubleDouble::from_parts(-5.192957815314082e+34, 4.115957613443205e+18),
    DoubleDouble::from_parts(5.303658855119701e+36, -2.605543773787007e+20),
    DoubleDouble::from_parts(-5.763325348164964e+38, -2.137311915777353e+22),
    DoubleDouble::from_parts(6.651155714848453e+40, 4.7810483168784347e+24),
    DoubleDouble::from_parts(-8.13737835813668e+42, -4.3111864277839465e+26),
    DoubleDouble::from_parts(1.0536966953357141e+45, 6.483380370787348e+28),
    DoubleDouble::from_parts(-1.4418180599962207e+47, 6.051327079642469e+30),
    DoubleDouble::from_parts(2.0817356522089566e+49, -8.384344823409712e+32),
    DoubleDouble::from_parts(-3.167022663488666e+51, -2.641349399124396e+35),
];

/// Riemann-Siegel correction polynomials `C_k` in powers of `p - 1/2`.
pub const RS_C0: [f64; 83] = [0.3826834323650898, 0.0, 1.7489618723100817, 0.0, 2.118025207685496, 0.0, -0.8707216670511481, 0.0, -3.4733112243465167, 0.0, -1.6626947308999325, 0.0, 1.216731288919232, 0.0, 1.3014304161007977, 0.0, 0.03051102182736167, 0.0, -0.3755803051545095, 0.0, -0.1085784416564066, 0.0, 0.051832902999549624, 0.0, 0.029999480619902277, 0.0, -0.0022759396706125644, 0.0, -0.004382647416580339, 0.0, -0.0004064230183729847, 0.0, 0.0004006097785422114, 0.0, 8.971057991388841e-05, 0.0, -2.3025650027239108e-05, 0.0, -9.380006601906792e-06, 0.0, 6.323514947609108e-07, 0.0, 6.551022819231502e-07, 0.0, 2.210523745552697e-08, 0.0, -3.322316176445629e-08, 0.0, -3.734910989933656e-09, 0.0, 1.2445067060797738e-09, 0.0, 2.476820537650219e-10, 0.0, -3.284272816891627e-11, 0.0, -1.1305406852298404e-11, 0.0, 4.565463979588694e-13, 0.0, 3.9598480945249214e-13, 0.0, 7.849566221259617e-15, 0.0, -1.1059043150991233e-14, 0.0, -7.738543987641508e-16, 0.0, 2.4857755550271373e-16, 0.0, 3.0514797188827216e-17, 0.0, -4.414297887793303e-18, 0.0, -8.631388878188415e-19, 0.0, 5.701292196842975e-20, 0.0, 1.952964016419934e-20, 0.0, -3.3707667135349604e-22, 0.0, -3.679459871576221e-22];
pub const RS_C1: [f64; 86] = [0.0, -0.053650205256750697, 0.0, 0.11027818741081483, 0.0, 1.2317200154315227, 0.0, 1.2634964862799458, 0.0, -1.695108997559503, 0.0, -2.9998711967650102, 0.0, -0.10819944959899208, 0.0, 1.9407662946212714, 0.0, 0.7838423561500687, 0.0, -0.5054829667900366, 0.0, -0.38450723496057976, 0.0, 0.03747264646531532, 0.0, 0.09092026610973176, 0.0, 0.01044923755006451, 0.0, -0.012582979651583417, 0.0, -0.003399503721151274, 0.0, 0.0010410950537714891, 0.0, 0.0005010949051118486, 0.0, -3.956359669003182e-05, 0.0, -4.7624592453571896e-05, 0.0, -1.8539355338085133e-06, 0.0, 3.1936918080068973e-06, 0.0, 4.0907807608506065e-07, 0.0, -1.5446624332576631e-07, 0.0, -3.466307491769133e-08, 0.0, 5.158711258806155e-09, 0.0, 1.9845392556407944e-09, 0.0, -8.92082086255149e-11, 0.0, -8.581017807796222e-11, 0.0, -1.879955001383285e-12, 0.0, 2.9178219505943536e-12, 0.0, 2.2424643283789434e-13, 0.0, -7.888938771825912e-14, 0.0, -1.0577804908852487e-14, 0.0, 1.667168683572909e-15, 0.0, 3.543209091148632e-16, 0.0, -2.538100978709331e-17, 0.0, -9.408538863065022e-18, 0.0, 1.7537569258694453e-19, 0.0, 2.0634880144665682e-19, 0.0, 4.411928113648421e-21, 0.0, -3.8036171519186026e-21, 0.0, -2.175600072560314e-22];
pub const RS_C2: [f64; 89] = [0.005188542830293168, 0.0, 0.0012378633552253898, 0.0, -0.18137505725166997, 0.0, 0.14291492748532125, 0.0, 1.3303391766687565, 0.0, 0.3522472353403734, 0.0, -2.421001595891951, 0.0, -1.6760787022538108, 0.0, 1.3689416723328371, 0.0, 1.5539019430222982, 0.0, -0.1722164273472998, 0.0, -0.6359068055045431, 0.0, -0.09911649873041208, 0.0, 0.14033480067387008, 0.0, 0.04782352019827292, 0.0, -0.017356040641479782, 0.0, -0.010225012534028593, 0.0, 0.0009274149159794888, 0.0, 0.0013572194372373386, 0.0, 6.41369012029388e-05, 0.0, -0.0001230080569819663, 0.0, -1.83135074047892e-05, 0.0, 7.821628604322627e-06, 0.0, 2.0087542484759946e-06, 0.0, -3.3532765393185714e-07, 0.0, -1.4616020917418232e-07, 0.0, 7.261497384040072e-09, 0.0, 7.894805679006707e-09, 0.0, 1.9589858234644104e-10, 0.0, -3.302802050431173e-10, 0.0, -2.8148945373762787e-11, 0.0, 1.0840079315144842e-11, 0.0, 1.5991960200093041e-12, 0.0, -2.747810753378103e-13, 0.0, -6.388781373997463e-14, 0.0, 4.962566999974764e-15, 0.0, 2.0041971253003113e-15, 0.0, -4.0104967010275156e-17, 0.0, -5.1481323045710403e-17, 0.0, -1.1952444267177729e-18, 0.0, 1.1026854039662788e-18, 0.0, 6.795774139729972e-20, 0.0, -1.9776066332393864e-20, 0.0, -2.0219425460581845e-21, 0.0, 2.9359968671161085e-22];
pub const RS_C3: [f64; 92] = [0.0, -0.0026794321814389136, 0.0, 0.02995372109103515, 0.0, -0.042570172541828696, 0.0, -0.28997965779803886, 0.0, 0.4888831999235446, 0.0, 1.230855876395746, 0.0, -0.8297560708527408, 0.0, -2.249763536666567, 0.0, 0.07845139961005472, 0.0, 1.7467492800868893, 0.0, 0.45968080979749937, 0.0, -0.6619353471039775, 0.0, -0.31590441036173633, 0.0, 0.12844792545207495, 0.0, 0.10073382716626152, 0.0, -0.009530183848825268, 0.0, -0.019264421687514088, 0.0, -0.001246463715876929, 0.0, 0.0024243969641103086, 0.0, 0.000437647697741857, 0.0, -0.00020714032687001792, 0.0, -6.274344504186516e-05, 0.0, 1.157534381459567e-05, 0.0, 5.88385492454038e-06, 0.0, -3.124677400696336e-07, 0.0, -4.0240657754989595e-07, 0.0, -1.199110779489633e-08, 0.0, 2.0963754063938708e-08, 0.0, 2.0203560225402153e-09, 0.0, -8.44014646390939e-10, 0.0, -1.3888845420040128e-10, 0.0, 2.5884906921719735e-11, 0.0, 6.664830790556666e-12, 0.0, -5.57756983389127e-13, 0.0, -2.48783596116849e-13, 0.0, 5.220722370970689e-15, 0.0, 7.534873081244042e-15, 0.0, 1.9399027467110145e-16, 0.0, -1.886892371609057e-16, 0.0, -1.2646482744316157e-17, 0.0, 3.925715193537364e-18, 0.0, 4.3367651607530243e-19, 0.0, -6.712223979407536e-20, 0.0, -1.1176176558125043e-20, 0.0, 9.037721692447814e-22, 0.0, 2.358420992377783e-22];
pub const RS_C4: [f64; 93] = [0.00046483389361763383, 0.0, -0.004022642946136188, 0.0, 0.003847177051796127, 0.0, 0.06581175135809486, 0.0, -0.19604124343694448, 0.0, -0.20854053686358853, 0.0, 0.9507754185141751, 0.0, 0.5341535312914873, 0.0, -1.67634944117634, 0.0, -1.076747157875129, 0.0, 1.235339301656597, 0.0, 1.0257825340057276, 0.0, -0.40124095793988546, 0.0, -0.5036663995108304, 0.0, 0.03573487795502745, 0.0, 0.14431763086785418, 0.0, 0.01509152741790347, 0.0, -0.026098874779194363, 0.0, -0.006126628379519262, 0.0, 0.003077503129870841, 0.0, 0.0011562478934088753, 0.0, -0.00022775966758472127, 0.0, -0.00014189637118181445, 0.0, 7.4648603079559195e-06, 0.0, 1.2479701645409117e-05, 0.0, 4.863945184002094e-07, 0.0, -8.210237414123167e-07, 0.0, -9.22325839749527e-08, 0.0, 4.1036878488162326e-08, 0.0, 7.693057400376144e-09, 0.0, -1.5371475683282222e-09, 0.0, -4.4664684290450274e-10, 0.0, 3.970731966941122e-11, 0.0, 1.99934657248258e-11, 0.0, -4.1970632941947125e-13, 0.0, -7.193102535061939e-13, 0.0, -2.1211042971278547e-14, 0.0, 2.1203816316910652e-14, 0.0, 1.5672942250054947e-15, 0.0, -5.148771682757868e-16, 0.0, -6.208386562023205e-17, 0.0, 1.0191313512868506e-17, 0.0, 1.842732566741699e-18, 0.0, -1.5752500476699018e-19, 0.0, -4.4554544382516186e-20, 0.0, 1.6179728886011441e-21, 0.0, 9.085049972738518e-22];

