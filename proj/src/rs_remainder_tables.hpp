#pragma once

// Chebyshev coefficients (variable x = 2p - 1, p the fractional part of
// sqrt(t/2pi)) of the first four Riemann-Siegel remainder functions
//   C0(p) = Psi(p)
//   C1(p) = -Psi'''(p) / (96 pi^2)
//   C2(p) = Psi''(p)/(64 pi^2) + Psi^(6)(p)/(18432 pi^4)
//   C3(p) = -Psi'(p)/(64 pi^2) - Psi^(5)(p)/(3840 pi^4) - Psi^(9)(p)/(5308416 pi^6)
// with Psi(p) = cos(2pi(p^2 - p - 1/16))/cos(2pi p). Convention: the
// function equals c[0]/2 + sum_{k>=1} c[k] T_k(x). Tails truncated below
// 1e-19; Psi is entire and symmetric about p = 1/2, so alternate
// coefficients vanish.

namespace zetamax::rs_tables {

inline constexpr double kC0[] = {
    1.2853345724795369,
    1.620576895276339e-62,
    0.27197299999785507,
    1.0371692129768569e-61,
    0.010738605819340285,
    6.6443652706329896e-62,
    -0.0013743815296336614,
    8.913172924019864e-62,
    -0.00012468221880320676,
    1.91228073642608e-61,
    -5.764599706783048e-07,
    1.2316384404100176e-61,
    2.728067429580452e-07,
    1.377490360984888e-61,
    8.07795305950047e-09,
    -4.521409537820986e-61,
    -2.0884608068869654e-10,
    4.051442238190848e-62,
    -1.3115561854739528e-11,
    -2.5929230324421422e-62,
    -1.4207987228087186e-14,
    4.7644960721124366e-61,
    1.0271701357931162e-14,
    -2.0743384259537138e-61,
    1.3974598819518373e-16,
    -3.079096101025044e-62,
    -4.4841187339522885e-18,
    -3.030478794166754e-61,
    -1.1830599573845289e-19,
};

inline constexpr double kC1[] = {
    3.5450119584169914e-63,
    0.010697913921003001,
    2.8360095667335934e-63,
    0.017170651243377882,
    5.216231881670716e-63,
    0.002793211149788471,
    4.304657378077775e-63,
    -3.6375653719275045e-05,
    1.9244350631406525e-63,
    -2.7108955231150888e-05,
    2.734723510778822e-63,
    -1.0483749866752774e-06,
    9.774104399635419e-63,
    5.886467166527572e-08,
    5.672019133467187e-63,
    4.322967268502779e-09,
    2.0763641470728092e-63,
    -1.1369591588273712e-11,
    1.8231490071858814e-63,
    -6.6998339103553274e-12,
    9.115745035929407e-64,
    -1.0079997652808475e-13,
    -1.7725059792084957e-63,
    5.152488009222117e-15,
    -8.96381595199725e-63,
    1.521695447183697e-16,
    2.4308653429145085e-63,
    -1.8619464833687103e-18,
    1.0077962567499732e-62,
    -1.1301846184246265e-19,
};

inline constexpr double kC2[] = {
    0.0062922317079778245,
    -1.0761643445194439e-64,
    -0.0023087838845307503,
    -1.0761643445194439e-64,
    5.769820766689844e-05,
    3.829878990789786e-64,
    0.000352388620236659,
    9.81208667061846e-65,
    2.5246667458684434e-05,
    6.488637959602529e-64,
    -3.442821197193136e-06,
    2.1523286890388878e-64,
    -3.535074556622459e-07,
    2.3738919364399497e-64,
    3.730830183792625e-09,
    -4.0830941306767135e-64,
    1.2776951864116635e-09,
    -3.4817081734452594e-65,
    2.1874616204147057e-11,
    -3.734923313332188e-64,
    -1.914141096461037e-12,
    1.5192908393215678e-63,
    -6.562883102168523e-14,
    -7.849669336494767e-64,
    1.2586009182411715e-15,
    -1.867461656666094e-64,
    8.140076623881463e-17,
};

inline constexpr double kC3[] = {
    0.0,
    7.123256221203874e-05,
    2.8091054581206073e-65,
    0.00023234305298164808,
    1.8595486835446272e-65,
    -0.00012929912045472474,
    7.161240674927182e-65,
    1.807449641367144e-05,
    3.363013576623262e-65,
    6.5261851872204395e-06,
    -2.6112811300839447e-65,
    -1.1696365378521986e-07,
    5.578646050633882e-65,
    -7.349476126518126e-08,
    3.996051426340582e-65,
    -1.7750910077907072e-09,
    3.877356829518584e-65,
    2.555552961326525e-10,
    -7.912973121466499e-66,
    1.13766366005373e-11,
    -1.5034648930786347e-65,
    -3.349863898530277e-13,
    -8.110797449503161e-65,
    -2.5537379354163893e-14,
    -1.4045527290603035e-64,
    6.766500771321871e-17,
    -4.7477838728798994e-66,
    2.976888471991973e-17,
    5.103867663345892e-65,
    2.9952208087566915e-19,
};

} // namespace zetamax::rs_tables
