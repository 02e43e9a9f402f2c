// Generated by generate_reference.py -- do not edit by hand.
// Reference values computed with mpmath (40+ significant digits).
#pragma once

namespace invosc_ref {

struct CoeffRef { double nu, G, am_re, am_im, bm_re, bm_im; };

inline constexpr CoeffRef kCoefficientsPre[] = {
  {0.25, 50.0, -0.621948746468224, -1.081801972324477, 1.209319098505255, 0.31758734544397627},
  {0.3333333333333333, 10.0, 0.1605130091157688, -1.1734265573474985, 0.9346826427358317, 0.7003677838790975},
  {0.3333333333333333, 15.0, -0.37535740931948525, 1.126176501734047, -0.7831624730829858, -0.8717568743971432},
  {0.16666666666666666, 50.0, -0.6276680631697331, 1.316129132371513, -0.10874561377097333, -1.440370052172816},
  {0.25, 20.0, -0.24682131743070293, 1.2339937988719294, -0.6950398926939139, -1.0252186465123108},
};

struct ModeRef { int n; double G, t, eps_re, eps_im, epsdot_re, epsdot_im, log_scale; };

inline constexpr ModeRef kModePower[] = {
  {2, 50.0, -1.0, 0.1414213562373095, 8.352389719038111e-53, 0.0, 7.0710678118654755, 0.0},
  {2, 50.0, -0.62, -0.17141197677846326, 0.05510176176681232, -1.7948286846277584, -5.256935917447616, 0.0},
  {2, 50.0, -0.5, 0.19917859839996854, -0.017652609715390094, 0.5899735707928959, 4.968332113800808, 0.0},
  {2, 50.0, -1e-06, 0.5248419559051448, 0.1378303374242909, 1.2902118203095194, 2.244161918249805, 0.0},
  {2, 50.0, 0.0, 0.5248432461169652, 0.13783258158620915, 1.290211820309519, 2.244161918249805, 0.0},
  {2, 50.0, 1e-06, 0.5248445363156644, 0.13783482574468153, 1.290211820277264, 2.244161918193701, 2.5e-11},
  {2, 50.0, 0.1, 0.519044197652211, 0.28655825858894474, 1.4116860596426406, 1.947928448504853, 0.25},
  {2, 50.0, 0.3, 0.28340819649151344, 0.21523009701208512, 3.62192134214002, 2.7898116150668786, 2.25},
  {2, 50.0, 0.7, 0.17604164742621306, 0.13452472371171117, 6.031501836515271, 4.60905774292348, 12.25},
  {2, 50.0, 1.0, 0.1466744748242357, 0.1120833819158256, 7.2592394695722735, 5.547250882346864, 25.0},
  {2, 50.0, 2.0, 0.10341562037250927, 0.07902651424635425, 10.315610195177777, 7.882819956140381, 100.0},
  {1, 10.0, -1.0, 0.31622776601683794, 3.3409558876152446e-52, 0.0, 3.1622776601683795, 0.0},
  {1, 10.0, -0.62, -0.33924548652211445, -0.09835578158757725, 0.7147045842459134, -2.740507122271364, 0.0},
  {1, 10.0, -0.5, -0.13220752988101642, -0.34639508599570246, 2.4409696152223455, -1.1683156047251564, 0.0},
  {1, 10.0, -1e-06, 0.4620777144253034, 0.34623765035499093, -0.2685107372021728, 1.962941394791413, 0.0},
  {1, 10.0, 0.0, 0.4620774459145662, 0.3462396132963857, -0.2685107372252767, 1.962941394774101, 0.0},
  {1, 10.0, 1e-06, 0.46207717432331447, 0.34624157392950333, -0.26851073541210124, 1.9629413817051373, 6.666666666666667e-09},
  {1, 10.0, 0.1, 0.3585755971954443, 0.44542689859512463, -0.0363786196543249, 1.7841930385808502, 0.21081851067789195},
  {1, 10.0, 0.3, 0.1971448532930176, 0.4169068684887536, 0.6476209873244637, 1.936722124456496, 1.0954451150103321},
  {1, 10.0, 0.7, 0.1336364568645487, 0.3232700104017755, 1.0617470576039358, 2.5714324116111436, 3.9044134571590194},
  {1, 10.0, 1.0, 0.12098360914944765, 0.29282714450283576, 1.177309951245104, 2.849558987687406, 6.666666666666667},
  {1, 10.0, 2.0, 0.10096682340455801, 0.24437933772010306, 1.4149706275184415, 3.4247842329438405, 18.856180831641268},
  {4, 50.0, -1.0, 0.1414213562373095, 0.0, -1.0440487148797639e-51, 7.0710678118654755, 0.0},
  {4, 50.0, -0.62, 0.22422453000279718, 0.03367629128115227, -0.38347583323656714, 4.402221095650547, 0.0},
  {4, 50.0, -0.5, -0.13638114772812135, 0.24716892115842, -3.3797422257592284, -1.2071518901845077, 0.0},
  {4, 50.0, -1e-06, -0.06766064435204432, -0.8961718566110224, 0.9633480364585938, -2.0200014781589872, 0.0},
  {4, 50.0, 0.0, -0.06765968100400786, -0.8961738766125006, 0.9633480364585938, -2.0200014781589872, 0.0},
  {4, 50.0, 1e-06, -0.0676587176559714, -0.8961758966139787, 0.9633480364585938, -2.0200014781589872, 1.6666666666666667e-17},
  {4, 50.0, 0.1, 0.02820125886098587, -1.0801080778018177, 0.9474873468133354, -1.9918485448818093, 0.016666666666666666},
  {4, 50.0, 0.3, 0.14656860827460105, -1.0099889613178854, 0.7510408316314948, -2.4014234279060758, 0.45},
  {4, 50.0, 0.7, 0.07402255245368286, -0.3932083888602268, 1.7000703914506825, -9.030641189202154, 5.716666666666667},
  {4, 50.0, 1.0, 0.051059468305734004, -0.27122623604181173, 2.5008249212929687, -13.28430069699093, 16.666666666666668},
  {4, 50.0, 2.0, 0.025375898856714266, -0.13479594992788804, 5.062459861322414, -26.89162223698735, 133.33333333333334},
  {2, 100.0, -1.0, 0.1, 0.0, 0.0, 10.0, 0.0},
  {2, 100.0, -0.62, 0.10276439571884499, -0.0751109315924618, 4.709277750071062, 6.288965711749858, 0.0},
  {2, 100.0, -0.5, 0.1388790479900833, -0.027187486220923797, 1.464085421919598, 6.913895304307304, 0.0},
  {2, 100.0, -1e-06, 0.4535272021375106, 0.057177260008723724, 1.8836515168020103, 2.4424158624252867, 0.0},
  {2, 100.0, 0.0, 0.4535290857890274, 0.05717970242458615, 1.883651516802009, 2.4424158624252867, 0.0},
  {2, 100.0, 1e-06, 0.45353096941786764, 0.05718214483758947, 1.8836515167078278, 2.442415862303166, 5e-11},
  {2, 100.0, 0.1, 0.4184565803869886, 0.19327389563642008, 2.385375235012469, 1.9808750638605497, 0.5},
  {2, 100.0, 0.3, 0.21169576005081714, 0.1209893611051589, 5.957117625204044, 3.4052229724995993, 4.5},
  {2, 100.0, 0.7, 0.13581970742155305, 0.07763058679009724, 9.40881573780455, 5.377804889968132, 24.5},
  {2, 100.0, 1.0, 0.11340629099103082, 0.06481973111602492, 11.283491899970192, 6.449315153634272, 50.0},
  {2, 100.0, 2.0, 0.08007622987077435, 0.045769239463259656, 15.995189191809034, 9.142384020345125, 200.0},
};

inline constexpr ModeRef kModeRevival[] = {
  {2, 100.0, 0.5, 0.215247473360973, 0.07183478613175379, 10.033484769908066, 7.994301655364046, 0.0},
  {2, 100.0, 1.0, 0.12154132664047183, 0.027931322442113365, 17.085815007206598, 12.154132664047184, 0.0},
  {2, 100.0, 1.5, 0.04838580375913052, -0.010700316930836845, 24.680253443108672, 15.209284729231996, 0.0},
  {2, 100.0, 2.0, -0.026371039857032815, -0.047592544350566826, 29.257742493550488, 14.881870769957661, 0.0},
  {1, 100.0, 0.5, -0.035480817675235345, 0.14877184641655578, -4.321108596601363, -10.065740276511097, 0.0},
  {1, 100.0, 1.0, 0.020975490841788673, 0.17120140357512442, -5.584083181742741, 2.0975490841788673, 0.0},
  {1, 100.0, 1.5, 0.04799659823977398, 0.1011552410201808, -2.999835369280164, 14.51250621387542, 0.0},
  {1, 100.0, 2.0, -0.04178800210622399, -0.10609022967187705, 3.9182748918926946, -13.982705258706938, 0.0},
  {2, 50.0, 0.5, 0.293926989472306, 0.14715035342051566, 5.928893836257948, 6.370421534816205, 0.0},
  {2, 50.0, 1.0, 0.1917201882433874, 0.08748852052324642, 9.576473850433628, 9.58600941216937, 0.0},
  {2, 50.0, 1.5, 0.12869051467471393, 0.04483378931290587, 13.559023445954827, 12.494334990647312, 0.0},
  {2, 50.0, 2.0, 0.07242997571063162, 0.004641183127017647, 17.82650057659354, 14.948728659188644, 0.0},
};

struct RatioRef { int n; double G, t; int branch; double mant, log_scale; };

inline constexpr RatioRef kEnergyRatio[] = {
  {2, 100.0, -1.0, 0, 1.0, -1.3363823550460978e-51},
  {2, 100.0, -0.8, 0, 1.0, -0.22309575289000758},
  {2, 100.0, -0.62, 0, 1.0, -0.47795886890063377},
  {2, 100.0, -0.5, 0, 1.0, -0.6930285091445562},
  {2, 50.0, -0.5, 0, 1.0, -0.6927028145307366},
  {2, 50.0, 0.3, 1, -1.0, 1.9221332382165697},
  {2, 50.0, 0.8, 1, -1.0, 28.172007816324445},
  {4, 50.0, 1.5, 1, -1.0, 109.51301340922512},
  {2, 100.0, 1.0, 2, 1.0, 1.0905339865800014},
  {2, 100.0, 1.5, 2, 1.0, 1.4992771324953773},
  {2, 100.0, 2.0, 2, 1.0, 1.7883410115109741},
  {1, 100.0, 1.0, 2, 1.0, 0.5100671817093969},
  {1, 100.0, 2.0, 2, 1.0, 0.8563207532068902},
};

inline constexpr double kR0FormulaNu14G50 = 0.06759782400672848;
inline constexpr double kR0ExactNu14G50 = 0.06700909256589048;

}  // namespace invosc_ref
