#pragma once

// Generated by tests/oracles/reference_sim.py; do not edit by hand.

#include <array>

namespace vfc_test {

inline constexpr double kRefCap2x2 = 4.594953215386611e-06;

struct RefTriple {
  int round, agent, arm, congestion;
  double adversary, collision, outlier, realized, normalized;
};

inline constexpr std::array<RefTriple, 80> kRefTriples2x2 = {{
    {1, 0, 0, 1, 7.042109663760457e-07, 7.042109663760457e-07, 0.7775249124266485, 7.042109663760457e-07, 0.15325748345335324},
    {1, 0, 0, 2, 7.042109663760457e-07, 9.266240495711211e-07, 0.7775249124266485, 8.771426794098376e-07, 0.19089262464580642},
    {1, 0, 1, 1, 1.4023380828526083e-06, 1.4023380828526083e-06, 0.7083738675775285, 1.4023380828526083e-06, 0.30519093821385473},
    {1, 0, 1, 2, 1.4023380828526083e-06, 1.9177378503896616e-06, 0.7083738675775285, 1.7674338095313899e-06, 0.38464674756926365},
    {1, 1, 0, 1, 7.020964000318122e-07, 7.020964000318122e-07, 0.047602775497505356, 7.020964000318122e-07, 0.1527972902271953},
    {1, 1, 0, 2, 7.020964000318122e-07, 9.6773526266182e-07, 0.047602775497505356, 7.147415471730011e-07, 0.15554925451245627},
    {1, 1, 1, 1, 1.214291144518249e-06, 1.214291144518249e-06, 0.2607580575800359, 1.214291144518249e-06, 0.2642662694479863},
    {1, 1, 1, 2, 1.214291144518249e-06, 1.6583532910054555e-06, 0.2607580575800359, 1.3300839272810743e-06, 0.2894662611203896},
    {2, 0, 0, 1, 7.677393131881526e-07, 7.677393131881526e-07, 0.8684860372359477, 7.677393131881526e-07, 0.16708316215653926},
    {2, 0, 0, 2, 7.677393131881526e-07, 9.96576781386787e-07, 0.8684860372359477, 9.664814591150918e-07, 0.21033542972292785},
    {2, 0, 1, 1, 1.2497610321644963e-06, 1.2497610321644963e-06, 0.46895753802228246, 1.2497610321644963e-06, 0.271985583657209},
    {2, 0, 1, 2, 1.2497610321644963e-06, 1.7131314685035888e-06, 0.46895753802228246, 1.467062091182388e-06, 0.3192768288194534},
    {2, 1, 0, 1, 6.546754085402318e-07, 6.546754085402318e-07, 0.8338662582210707, 6.546754085402318e-07, 0.14247705642529565},
    {2, 1, 0, 2, 6.546754085402318e-07, 8.990018048501495e-07, 0.8338662582210707, 8.584109464158213e-07, 0.18681603624196993},
    {2, 1, 1, 1, 1.407102327241265e-06, 1.407102327241265e-06, 0.6552923773669408, 1.407102327241265e-06, 0.3062277810641156},
    {2, 1, 1, 2, 1.407102327241265e-06, 1.936791629709308e-06, 0.6552923773669408, 1.7542036895213856e-06, 0.38176747559632995},
    {3, 0, 0, 1, 7.738430811172949e-07, 7.738430811172949e-07, 0.09203814661922971, 7.738430811172949e-07, 0.1684115256116237},
    {3, 0, 0, 2, 7.738430811172949e-07, 1.0308337826410615e-06, 0.09203814661922971, 7.97496028983918e-07, 0.1735591183634757},
    {3, 0, 1, 1, 1.4148137736368496e-06, 1.4148137736368496e-06, 0.9119508252815016, 1.4148137736368496e-06, 0.3079060236999192},
    {3, 0, 1, 2, 1.4148137736368496e-06, 1.9375328546202526e-06, 0.9119508252815016, 1.8915078709300521e-06, 0.411648994509056},
    {3, 1, 0, 1, 7.112049252415497e-07, 7.112049252415497e-07, 0.2192389537027234, 7.112049252415497e-07, 0.15477957922618593},
    {3, 1, 0, 2, 7.112049252415497e-07, 9.773747847593165e-07, 0.2192389537027234, 7.695597267494258e-07, 0.167479338891305},
    {3, 1, 1, 1, 1.3336152551934678e-06, 1.3336152551934678e-06, 0.6382584816238074, 1.3336152551934678e-06, 0.29023478426891014},
    {3, 1, 1, 2, 1.3336152551934678e-06, 1.8402029397452324e-06, 0.6382584816238074, 1.6569491415447974e-06, 0.36060196129883443},
    {4, 0, 0, 1, 7.54758033939197e-07, 7.54758033939197e-07, 0.2320382675000373, 7.54758033939197e-07, 0.1642580454163978},
    {4, 0, 0, 2, 7.54758033939197e-07, 1.0071996567699566e-06, 0.2320382675000373, 8.133341507457443e-07, 0.1770059699459447},
    {4, 0, 1, 1, 1.4247969096889288e-06, 1.4247969096889288e-06, 0.9062638790769383, 1.4247969096889288e-06, 0.3100786543196717},
    {4, 0, 1, 2, 1.4247969096889288e-06, 1.9478958781810237e-06, 0.9062638790769383, 1.89886261001572e-06, 0.4132496069072497},
    {4, 1, 0, 1, 6.766593264319132e-07, 6.766593264319132e-07, 0.9649191255807859, 6.766593264319132e-07, 0.14726141806320445},
    {4, 1, 0, 2, 6.766593264319132e-07, 9.304211616165134e-07, 0.9649191255807859, 9.21518974544013e-07, 0.20055024095963037},
    {4, 1, 1, 1, 1.2904328136235358e-06, 1.2904328136235358e-06, 0.3703897773550723, 1.2904328136235358e-06, 0.28083698639246346},
    {4, 1, 1, 2, 1.2904328136235358e-06, 1.7745893745282122e-06, 0.3703897773550723, 1.4697594544220164e-06, 0.3198638561760315},
    {5, 0, 0, 1, 6.960216269469387e-07, 6.960216269469387e-07, 0.34432018307965817, 6.960216269469387e-07, 0.1514752369221624},
    {5, 0, 0, 2, 6.960216269469387e-07, 9.244189805471166e-07, 0.34432018307965817, 7.746634455534613e-07, 0.1685900615830933},
    {5, 0, 1, 1, 1.2768934554547844e-06, 1.2768934554547844e-06, 0.9250348119271808, 1.2768934554547844e-06, 0.27789041489671595},
    {5, 0, 1, 2, 1.2768934554547844e-06, 1.743563450318592e-06, 0.9250348119271808, 1.7085794463856852e-06, 0.37183826826883776},
    {5, 1, 0, 1, 6.872283179687938e-07, 6.872283179687938e-07, 0.7616807897746122, 6.872283179687938e-07, 0.14956154845441047},
    {5, 1, 0, 2, 6.872283179687938e-07, 9.443522956714588e-07, 0.7616807897746122, 8.830747123753494e-07, 0.19218361340835746},
    {5, 1, 1, 1, 1.2027873066954046e-06, 1.2027873066954046e-06, 0.8496588163427056, 1.2027873066954046e-06, 0.26176268839207417},
    {5, 1, 1, 2, 1.2027873066954046e-06, 1.6408502809869601e-06, 0.8496588163427056, 1.5749913749155327e-06, 0.3427654866303173},
    {6, 0, 0, 1, 8.91054709212241e-07, 8.91054709212241e-07, 0.7759734345728952, 8.91054709212241e-07, 0.19392030069609084},
    {6, 0, 0, 2, 8.91054709212241e-07, 1.1559463667178025e-06, 0.7759734345728952, 1.0966035984765386e-06, 0.23865392030640564},
    {6, 0, 1, 1, 1.362356781494896e-06, 1.362356781494896e-06, 0.720675873917422, 1.362356781494896e-06, 0.2964898047129017},
    {6, 0, 1, 2, 1.362356781494896e-06, 1.8704319626131966e-06, 0.720675873917422, 1.72851430666308e-06, 0.3761766933502164},
    {6, 1, 0, 1, 6.243638732553515e-07, 6.243638732553515e-07, 0.8737294382351818, 6.243638732553515e-07, 0.1358803548128876},
    {6, 1, 0, 2, 6.243638732553515e-07, 8.566813240866179e-07, 0.8737294382351818, 8.273464690623834e-07, 0.18005547179282258},
    {6, 1, 1, 1, 1.1891041955148383e-06, 1.1891041955148383e-06, 0.9417679679295246, 1.1891041955148383e-06, 0.25878483191798707},
    {6, 1, 1, 2, 1.1891041955148383e-06, 1.6332857657866668e-06, 0.9417679679295246, 1.6074201703414836e-06, 0.34982296772008337},
    {7, 0, 0, 1, 7.0857904899852e-07, 7.0857904899852e-07, 0.778113477033488, 7.0857904899852e-07, 0.15420810958983866},
    {7, 0, 0, 2, 7.0857904899852e-07, 9.461712613731296e-07, 0.778113477033488, 8.934527514854064e-07, 0.19444218680912795},
    {7, 0, 1, 1, 1.4397119268007115e-06, 1.4397119268007115e-06, 0.13165423647865204, 1.4397119268007115e-06, 0.3133246105705076},
    {7, 0, 1, 2, 1.4397119268007115e-06, 1.909428877090636e-06, 0.13165423647865204, 1.5015521532522124e-06, 0.3267829035177401},
    {7, 1, 0, 1, 6.389720742104321e-07, 6.389720742104321e-07, 0.23815043451675855, 6.389720742104321e-07, 0.13905953864138967},
    {7, 1, 0, 2, 6.389720742104321e-07, 8.776957695746278e-07, 0.23815043451675855, 6.958242259908615e-07, 0.15143227653783983},
    {7, 1, 1, 1, 1.288911084159958e-06, 1.288911084159958e-06, 0.9913106081723038, 1.288911084159958e-06, 0.2805058122994428},
    {7, 1, 1, 2, 1.288911084159958e-06, 1.771395720594841e-06, 0.9913106081723038, 1.7672032225380148e-06, 0.3845965649052481},
    {8, 0, 0, 1, 6.748839411635789e-07, 6.748839411635789e-07, 0.37503932811627594, 6.748839411635789e-07, 0.14687504083908184},
    {8, 0, 0, 2, 6.748839411635789e-07, 8.973234038021185e-07, 0.37503932811627594, 7.583074877780823e-07, 0.16503051331160937},
    {8, 0, 1, 1, 1.332898016887722e-06, 1.332898016887722e-06, 0.31942191121108177, 1.332898016887722e-06, 0.2900786916446492},
    {8, 0, 1, 2, 1.332898016887722e-06, 1.827055697584704e-06, 0.31942191121108177, 1.4907428076955876e-06, 0.3244304648638646},
    {8, 1, 0, 1, 6.970974187179171e-07, 6.970974187179171e-07, 0.7899735184897294, 6.970974187179171e-07, 0.15170936156294784},
    {8, 1, 0, 2, 6.970974187179171e-07, 9.582819846626325e-07, 0.7899735184897294, 9.034263092524766e-07, 0.19661273290602244},
    {8, 1, 1, 1, 1.29510942828028e-06, 1.29510942828028e-06, 0.9301444399917959, 1.29510942828028e-06, 0.28185475837784174},
    {8, 1, 1, 2, 1.29510942828028e-06, 1.7758115526866633e-06, 0.9301444399917959, 1.7422318365891219e-06, 0.37916204037836626},
    {9, 0, 0, 1, 6.798087190977209e-07, 6.798087190977209e-07, 0.4199400633427437, 6.798087190977209e-07, 0.1479468206164365},
    {9, 0, 0, 2, 6.798087190977209e-07, 9.031820699330885e-07, 0.4199400633427437, 7.736121381966061e-07, 0.16836126548712113},
    {9, 0, 1, 1, 1.2707540461540602e-06, 1.2707540461540602e-06, 0.954848405202761, 1.2707540461540602e-06, 0.27655429480736105},
    {9, 0, 1, 2, 1.2707540461540602e-06, 1.7401933891828153e-06, 0.954848405202761, 1.7189974541844989e-06, 0.37410554005822794},
    {9, 1, 0, 1, 7.087176342577373e-07, 7.087176342577373e-07, 0.12022010882831036, 7.087176342577373e-07, 0.15423826990980738},
    {9, 1, 0, 2, 7.087176342577373e-07, 9.734080079485028e-07, 0.12022010882831036, 7.405387397886472e-07, 0.16116349940384317},
    {9, 1, 1, 1, 1.3191081144175839e-06, 1.3191081144175839e-06, 0.12475311819314183, 1.3191081144175839e-06, 0.28707759417450274},
    {9, 1, 1, 2, 1.3191081144175839e-06, 1.8166615631186294e-06, 0.12475311819314183, 1.3811794586107906e-06, 0.3005861852925484},
    {10, 0, 0, 1, 6.998761884931934e-07, 6.998761884931934e-07, 0.15750351934145412, 6.998761884931934e-07, 0.15231410542975618},
    {10, 0, 0, 2, 6.998761884931934e-07, 9.344623366297758e-07, 0.15750351934145412, 7.368243324134609e-07, 0.16035513265861748},
    {10, 0, 1, 1, 1.3084837313892995e-06, 1.3084837313892995e-06, 0.4189751163211186, 1.3084837313892995e-06, 0.28476540892902347},
    {10, 0, 1, 2, 1.3084837313892995e-06, 1.7940261539263519e-06, 0.4189751163211186, 1.5119139243505988e-06, 0.3290379365099562},
    {10, 1, 0, 1, 6.354092015573529e-07, 6.354092015573529e-07, 0.33324803749044485, 6.354092015573529e-07, 0.1382841504086763},
    {10, 1, 0, 2, 6.354092015573529e-07, 8.712383821684075e-07, 0.33324803749044485, 7.139988131789665e-07, 0.15538761325971237},
    {10, 1, 1, 1, 1.3981508430531557e-06, 1.3981508430531557e-06, 0.1134726890166109, 1.3981508430531557e-06, 0.30427966891399955},
    {10, 1, 1, 2, 1.3981508430531557e-06, 1.9229999419256543e-06, 0.1134726890166109, 1.4577068816301632e-06, 0.31724085388919776}
}};

struct RefExpected {
  int agent, arm, congestion;
  double value;
};
inline constexpr std::array<RefExpected, 8> kRefExpected2x2 = {{
    {0, 0, 1, 0.16263565642144015},
    {0, 0, 2, 0.18918591818103722},
    {0, 1, 1, 0.2892381033969419},
    {0, 1, 2, 0.34186450953169556},
    {1, 0, 1, 0.14250929428921272},
    {1, 0, 2, 0.16906031749459066},
    {1, 1, 1, 0.28349742186307325},
    {1, 1, 2, 0.33612559688813964}
}};

struct RefRecord {
  int round, agent, chosen, congestion;
  double p0, p1, normalized, estimate, zeta;
};
inline constexpr std::array<RefRecord, 100> kRefTrace2x2 = {{
    {1, 0, 1, 1, 0.5, 0.5, 0.30519093821385473, 0.38420088820925014, 1.5135677477525524},
    {1, 1, 0, 1, 0.5, 0.5, 0.1527972902271953, 0.19235451407839338, 1.246599017824382},
    {2, 0, 1, 1, 0.5954240942498286, 0.4045759057501715, 0.271985583657209, 0.4439025968396869, 1.7085191198842309},
    {2, 1, 0, 1, 0.458404796409353, 0.5415952035906471, 0.14247705642529565, 0.21375509217975372, 1.4726787274091275},
    {3, 0, 0, 2, 0.6770590284985029, 0.3229409715014972, 0.1735591183634757, 0.20490955805921807, 1.8013317044497876},
    {3, 1, 0, 2, 0.41821953428090053, 0.5817804657190995, 0.167479338891305, 0.2847493719377776, 1.6323028885708122},
    {4, 0, 0, 2, 0.5892446536747599, 0.41075534632524013, 0.1770059699459447, 0.24035978390374768, 1.057197275519075},
    {4, 1, 0, 2, 0.36879899698984003, 0.6312010030101599, 0.20055024095963037, 0.3886819009937112, 1.7972048499758042},
    {5, 0, 1, 2, 0.572118811246241, 0.42788118875375897, 0.37183826826883776, 0.6645669741934186, 1.0736612473663403},
    {5, 1, 1, 2, 0.36999785163377513, 0.6300021483662249, 0.3427654866303173, 0.4500357396806683, 1.287391967617164},
    {6, 0, 0, 1, 0.6788634947268956, 0.3211365052731044, 0.19392030069609084, 0.24269391356893946, 1.680120854395433},
    {6, 1, 1, 1, 0.3831783556517234, 0.6168216443482766, 0.25878483191798707, 0.35113724506840877, 1.6142106738645436},
    {7, 0, 0, 1, 0.6261386652030907, 0.3738613347969093, 0.15420810958983866, 0.2091259538187737, 1.331811369197589},
    {7, 1, 1, 1, 0.4450954691004908, 0.5549045308995092, 0.2805058122994428, 0.4210791677583553, 1.0473486733862714},
    {8, 0, 1, 2, 0.6496938354170175, 0.3503061645829825, 0.3244304648638646, 0.7140140067101262, 1.8131485402432865},
    {8, 1, 1, 2, 0.4446764603087816, 0.5553235396912184, 0.37916204037836626, 0.5750168979367677, 1.9017077911721838},
    {9, 0, 1, 2, 0.6458969228055803, 0.3541030771944197, 0.37410554005822794, 0.8272634138565658, 1.2284201053645163},
    {9, 1, 1, 2, 0.5014040803892308, 0.49859591961076927, 0.3005861852925484, 0.5037362567502888, 1.9784006379967076},
    {10, 0, 0, 1, 0.6647129071632463, 0.33528709283675373, 0.15231410542975618, 0.2009963599662422, 1.0502457890869952},
    {10, 1, 1, 1, 0.5429460280429917, 0.4570539719570082, 0.30427966891399955, 0.5530985859382687, 1.6934729046668795},
    {11, 0, 0, 1, 0.757924091475298, 0.2420759085247019, 0.1608008652712677, 0.18992047729662292, 1.8582168751691621},
    {11, 1, 1, 1, 0.5963381013912633, 0.40366189860873675, 0.28801789442412573, 0.5849118039950603, 1.9067516490018575},
    {12, 0, 1, 1, 0.7131557103246375, 0.2868442896753624, 0.2797110631374027, 0.752282467041249, 1.568931905464218},
    {12, 1, 0, 1, 0.6253887741216817, 0.37461122587831824, 0.13669427733283504, 0.19242930404226496, 1.661324514370676},
    {13, 0, 0, 2, 0.7823771148872207, 0.2176228851127793, 0.2293814464351674, 0.26548292688737934, 1.8064309404705456},
    {13, 1, 0, 2, 0.6224538410956952, 0.3775461589043049, 0.18384701376090196, 0.26111200444869903, 1.8129723640637145},
    {14, 0, 0, 2, 0.6886563042886367, 0.31134369571136333, 0.18217212060541446, 0.23741184571621632, 1.193759053926516},
    {14, 1, 0, 2, 0.5750348455168606, 0.4249651544831393, 0.17368794490751202, 0.2656982084326652, 1.2971552154412598},
    {15, 0, 0, 2, 0.7127096815563069, 0.2872903184436931, 0.22759915368144323, 0.28857097737023973, 1.4476101098788507},
    {15, 1, 0, 2, 0.547856535100733, 0.45214346489926704, 0.15844439383884085, 0.2539750831541407, 1.003526398338437},
    {16, 0, 0, 2, 0.723598208534637, 0.2764017914653631, 0.17631269378452746, 0.22116873566001044, 1.648537868415036},
    {16, 1, 0, 2, 0.5399545269701379, 0.46004547302986204, 0.17420697042210884, 0.28393620144118015, 1.0486162814016666},
    {17, 0, 0, 1, 0.6851449728626625, 0.31485502713733743, 0.1614959619073256, 0.21346766622066693, 1.410521197502654},
    {17, 1, 1, 1, 0.5383586159594677, 0.46164138404053234, 0.2599592927799184, 0.48769890106929625, 1.3856936432167195},
    {18, 0, 0, 1, 0.7290771368013128, 0.2709228631986873, 0.14995945111081227, 0.18781162887737107, 1.9010057815889072},
    {18, 1, 1, 1, 0.5878397223302215, 0.41216027766977853, 0.30370769886622057, 0.6307010984936859, 1.9661188695544296},
    {19, 0, 1, 2, 0.6416492425784055, 0.35835075742159445, 0.41659975886539746, 0.9782095946191304, 1.1775703702749887},
    {19, 1, 1, 2, 0.6108258097730992, 0.3891741902269007, 0.3048720955376302, 0.6675495987616376, 1.681432621109699},
    {20, 0, 0, 1, 0.6826232683282976, 0.31737673167170244, 0.14551355670784352, 0.19442182765551555, 1.2218412781492873},
    {20, 1, 1, 1, 0.6359450218313868, 0.3640549781686133, 0.25657254876774166, 0.5968549616342517, 1.557017307833745},
    {21, 0, 1, 1, 0.665631558285497, 0.3343684417145029, 0.2791497606204293, 0.700323038196963, 1.1451795249473768},
    {21, 1, 0, 1, 0.608936464472495, 0.39106353552750495, 0.1328737286757988, 0.1973852634299908, 1.0137839186803135},
    {22, 0, 0, 1, 0.7319886323852856, 0.26801136761471445, 0.1806636566114486, 0.22732285532655713, 1.4536585396164265},
    {22, 1, 1, 1, 0.6082520048399103, 0.3917479951600897, 0.2656204134005358, 0.5844180024034171, 1.0692768674349118},
    {23, 0, 1, 2, 0.7278184038064928, 0.2721815961935073, 0.37518222262669215, 1.1247874259151278, 1.4843265775951204},
    {23, 1, 1, 2, 0.6920738229364245, 0.30792617706357556, 0.2799732602491749, 0.7581127771622088, 1.6703876448623034},
    {24, 0, 0, 2, 0.7788313312946655, 0.22116866870533444, 0.16723198167416298, 0.19934299089805796, 1.5721772102693716},
    {24, 1, 0, 2, 0.738394042437571, 0.26160595756242905, 0.18383471682736538, 0.2302312682654741, 1.7956004599311461},
    {25, 0, 0, 1, 0.7703990393171822, 0.2296009606828177, 0.17040365184417766, 0.205486447450073, 1.5584768969420701},
    {25, 1, 1, 1, 0.6962151738891265, 0.30378482611087354, 0.27146441505057356, 0.7485466079295507, 1.5073097438775502},
    {26, 0, 1, 2, 0.7400182972706848, 0.25998170272931515, 0.3574524442493234, 1.1250939332444696, 1.389992384802252},
    {26, 1, 1, 2, 0.6810914625263491, 0.31890853747365094, 0.3772363096294067, 1.0015943687840156, 1.188684705611943},
    {27, 0, 1, 2, 0.7755463014768105, 0.2244536985231895, 0.29391650519790735, 1.0455871773404, 1.4050393761366782},
    {27, 1, 1, 2, 0.7829006783882402, 0.21709932161175982, 0.3364994490458064, 1.2292330126329214, 1.7011629310607825},
    {28, 0, 0, 2, 0.8676714007885934, 0.13232859921140658, 0.2028218977617963, 0.21967092204958968, 1.878784512580899},
    {28, 1, 0, 2, 0.7483897374469151, 0.251610262553085, 0.18951696001735535, 0.2357125892076475, 1.2203075559847252},
    {29, 0, 0, 1, 0.866851875595609, 0.13314812440439103, 0.16678317889157246, 0.1809886595772257, 1.9185162086254417},
    {29, 1, 1, 1, 0.7125593312643066, 0.2874406687356935, 0.28966961703120503, 0.8467382214482577, 1.0470786720784684},
    {30, 0, 0, 1, 0.8669085744523893, 0.13309142554761058, 0.17317229551277635, 0.18809791316663754, 1.9587068121066262},
    {30, 1, 1, 1, 0.7752606106651135, 0.22473938933488644, 0.28182483653607, 1.0120090183555925, 1.2903983831528905},
    {31, 0, 0, 2, 0.7581647482611185, 0.2418352517388816, 0.18779422389945016, 0.2315497039754409, 1.2201425309193796},
    {31, 1, 0, 2, 0.7726567738177282, 0.22734322618227176, 0.1991408888023801, 0.2412296651208427, 1.1450883581523006},
    {32, 0, 1, 1, 0.7372090807778033, 0.2627909192221968, 0.26734476826533526, 0.8491837486988518, 1.1310432292391033},
    {32, 1, 0, 1, 0.8891917336010524, 0.11080826639894753, 0.13240204790455234, 0.14066971384878207, 1.9969229957121768},
    {33, 0, 0, 2, 0.8444591649882094, 0.15554083501179067, 0.193428830689906, 0.21595285148381682, 1.6911535473335229},
    {33, 1, 0, 2, 0.8753714313120093, 0.12462856868799067, 0.17592231858190333, 0.18985550551864686, 1.8958091853076624},
    {34, 0, 0, 2, 0.7687372524634252, 0.23126274753657483, 0.17250689918024764, 0.21057500929371742, 1.2279087839196947},
    {34, 1, 0, 2, 0.8228796379044148, 0.17712036209558524, 0.1779360486821416, 0.20373718847284863, 1.5226355510930394},
    {35, 0, 0, 1, 0.734554060654499, 0.26544593934550104, 0.15574172759512986, 0.19857197119576506, 1.0636041952690105},
    {35, 1, 1, 1, 0.8229514202945716, 0.1770485797054283, 0.25499143219355763, 1.124284814905229, 1.554828388172403},
    {36, 0, 1, 1, 0.8614922407835166, 0.13850775921648348, 0.2888638452289179, 1.5400608828877873, 1.9501622598977322},
    {36, 1, 0, 1, 0.8611257211358636, 0.13887427886413634, 0.15111487377186067, 0.16602664449715343, 1.6586845637110361},
    {37, 0, 1, 1, 0.8679977897787214, 0.1320022102212786, 0.28189593107235106, 1.5626726419675678, 1.730512035387612},
    {37, 1, 0, 1, 0.8418626540004003, 0.15813734599959975, 0.14995214389898043, 0.16843750145773734, 1.5428878252391942},
    {38, 0, 0, 2, 0.8706700954477912, 0.1293299045522088, 0.21269287251614835, 0.23158553293314188, 1.5383523965775692},
    {38, 1, 0, 2, 0.8934779302406959, 0.10652206975930409, 0.1766403781461281, 0.1876700845670125, 1.9923281729795},
    {39, 0, 0, 2, 0.8955638518351168, 0.10443614816488318, 0.16903528791422798, 0.17931012092290832, 1.7650583457127165},
    {39, 1, 0, 2, 0.8704032630107673, 0.12959673698923269, 0.1500358431324566, 0.16352014138264198, 1.8146029555229317},
    {40, 0, 0, 2, 0.8506923230180311, 0.14930767698196878, 0.21925997118905755, 0.24437335571370067, 1.449369078101879},
    {40, 1, 0, 2, 0.7803108021142229, 0.21968919788577726, 0.16741463540136317, 0.20247230629185983, 1.2256327869295947},
    {41, 0, 0, 2, 0.8044290939754625, 0.19557090602453753, 0.16432033303478144, 0.1932272829419636, 1.200717392365311},
    {41, 1, 0, 2, 0.7432593892971877, 0.2567406107028122, 0.13171959147346513, 0.16689643113534594, 1.0469649543318704},
    {42, 0, 0, 2, 0.8974213266559954, 0.1025786733440046, 0.16575358078789013, 0.17580228013459998, 1.8696750588222062},
    {42, 1, 0, 2, 0.8806311463138256, 0.11936885368617453, 0.15582951623201488, 0.16827319734557247, 1.9985184694567772},
    {43, 0, 0, 1, 0.891774093759904, 0.108225906240096, 0.15307901268629975, 0.16343029012001156, 1.8434134192441045},
    {43, 1, 1, 1, 0.7651596787385022, 0.23484032126149768, 0.2582275246623612, 0.9231357520886169, 1.1995739580786438},
    {44, 0, 0, 2, 0.9009192067489439, 0.09908079325105612, 0.17328007734349135, 0.18330803183135644, 1.9545655718644648},
    {44, 1, 0, 2, 0.8071032714503591, 0.192896728549641, 0.19663629870268792, 0.23093510866284594, 1.3407413040768672},
    {45, 0, 1, 2, 0.8387429452890726, 0.1612570547109275, 0.3409431517897184, 1.6620303689340628, 1.4813251710196234},
    {45, 1, 1, 2, 0.8351031648259213, 0.16489683517407866, 0.27515589497729803, 1.3179459255201167, 1.549345301952163},
    {46, 0, 0, 2, 0.8099378581320521, 0.19006214186794795, 0.18573603089081925, 0.21765828022027514, 1.1514078314251088},
    {46, 1, 0, 2, 0.8933319872502242, 0.10666801274977568, 0.14867458760481256, 0.1587162646682732, 1.827835034740438},
    {47, 0, 0, 2, 0.8913061859042182, 0.10869381409578185, 0.16709663932474633, 0.178857999457855, 1.6967698887237144},
    {47, 1, 0, 2, 0.8014521719849254, 0.19854782801507462, 0.18566166364798986, 0.21987722011438024, 1.2145165357578727},
    {48, 0, 0, 2, 0.8924447404275536, 0.1075552595724464, 0.1904460107783551, 0.20370063488566575, 1.727688468137361},
    {48, 1, 0, 2, 0.7861862345705354, 0.2138137654294645, 0.18724271342283338, 0.22595506095126877, 1.1522400985162917},
    {49, 0, 0, 2, 0.8678628346375031, 0.1321371653624968, 0.2151979551335055, 0.23650383013160306, 1.5588480274670775},
    {49, 1, 0, 2, 0.7922060942481308, 0.20779390575186912, 0.13800418299169734, 0.1654217748374352, 1.2047309234013945},
    {50, 0, 1, 1, 0.7787008838369377, 0.2212991161630622, 0.27896862351828156, 1.0610123195763275, 1.0594308023893808},
    {50, 1, 0, 1, 0.8296277451121812, 0.17037225488781885, 0.13223711049770515, 0.15177765212437153, 1.443100771230927}
}};

inline constexpr std::array<double, 2> kRefSingleAgentScores = {3.692583168425276, 3.77361747078823};

}  // namespace vfc_test
