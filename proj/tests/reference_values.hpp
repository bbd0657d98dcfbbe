#pragma once

// Frozen reference values, computed at 35-digit working precision with the
// independent oracles described in oracles.hpp (series/product/quadrature
// routes) and rounded to double. Tests compare against these anchors in
// addition to running the live oracles.

namespace ref {

// exp-accurate principal log Gamma at 0.5 + 1.0i.
inline constexpr double kLogGammaHalfPlusIRe = -0.65279064420437291527;
inline constexpr double kLogGammaHalfPlusIIm = -0.95500772434256910956;

inline constexpr double kZeta3 = 1.2020569031595942854;             // zeta(3,1)
inline constexpr double kZeta2Half = 4.9348022005446793094;         // zeta(2,1/2) = pi^2/2
inline constexpr double kZetaM25Half = -0.0070113342544251247152;   // zeta(-2.5,0.5)
inline constexpr double kZetaHalf23 = -2.6916470973476131159;       // zeta(0.5,2.3)
inline constexpr double kZeta37_23 = 0.067740905935986331865;       // zeta(3.7,2.3)
inline constexpr double kZeta30Half = 1073741824.0000052151;        // zeta(30,0.5)
inline constexpr double kZeta2p3iRe = 0.45530945184922633485;       // zeta(2+3i,1+0.5i)
inline constexpr double kZeta2p3iIm = -3.0793900124277702078;
inline constexpr double kZeta2_1p05iRe = 1.0681978909500613712;     // zeta(2,1+0.5i)
inline constexpr double kZeta2_1p05iIm = -0.82504197243379084853;

inline constexpr double kZetaDs01 = -0.91893853320467274178;   // zeta'(0,1) = -ln(2 pi)/2
inline constexpr double kZetaDs21 = -0.93754825431584375370;   // zeta'(2,1)
inline constexpr double kZetaDsM11 = -0.16542114370045092921;  // zeta'(-1,1) (Glaisher)
inline constexpr double kZetaDs0_25 = -0.63425566273175358215; // zeta'(0,2.5)

inline constexpr double kPi2Over6 = 1.6449340668482264365;
inline constexpr double kPi2Over12 = 0.82246703342411321824;
inline constexpr double kPi2Over24 = 0.41123351671205660912;
inline constexpr double kPi2Over48 = 0.20561675835602830456;
inline constexpr double kTwoCatalan = 1.8319311883544380301;

// Kernel transforms at w = 1 (beta = pi where applicable).
inline constexpr double kBoseSineW1 = 0.040988353434663212193;
inline constexpr double kSinhSineW1 = 0.23105857863000487925;  // tanh(1/2)/2
inline constexpr double kFermiSineW1 = 0.074540935880339227433;
inline constexpr double kCoshCosW1 = 0.44340944198503695433;

inline constexpr double kGSine0121 = 0.57786367489546085896;       // (pi/2) e^{-1}
inline constexpr double kGSine1162 = -0.056689110878351510459;     // -2 pi/(15 e^2)

// Family anchors (canonical candidates).
inline constexpr double kBoseEven0_1_2 = 0.072467033424113218236;  // (zeta(2)-3/2)/2
inline constexpr double kBoseEven1_1_6 = 0.0037612739622429236820;
inline constexpr double kSinhEven1_2_6 = 0.00075811289934911022764;
inline constexpr double kBoseOdd0_1_4 = 0.023466498609105286391;
inline constexpr double kSechEvenCos0_1_2 = 0.41123351671205660912;  // pi^2/24
inline constexpr double kSechOddSin0_1_5 = 0.057621618034223908076;
inline constexpr double kFermiEvenPi0_1_2 = 0.088766483287943390882; // 1/2 - pi^2/24

// Open-family values, indexed [k][q-index] with q in {0.5, 1, 2}.
inline constexpr double kOpenI[3][3] = {
    {0.13518142273073908501, 0.038607832450766430303, 0.010181422730739085012},
    {0.11685027506808491368, 0.036233516712056609118, 0.0099670334241132182362},
    {0.10466251633318247835, 0.034315492072963437954, 0.0097702099358254472589},
};
inline constexpr double kOpenT[3][3] = {
    {0.15342640972002734529, 0.040530733397663629110, 0.010335173988852323523},
    {0.064232900773309245954, 0.0090587314500204607776, 0.0011874346452873835886},
    {0.049465890763490708768, 0.0037167958755265215108, 0.00025135047997369524602},
};
inline constexpr double kOpenL[3][3] = {
    {0.058858760982223062679, 0.0087694205801102402715, 0.0011757625523122676052},
    {0.042940407774198731373, 0.0035173895042218125664, 0.00024700469553076601578},
    {0.044474250470018537778, 0.0019890543423616079679, 0.000073337684740155100332},
};

// Integrand spot value: t * atan(t) weight at t = 2 for the open-T family
// (k = 1, q = 1): 2 atan(2) / (e^{4 pi} - 1).
inline constexpr double kOpenTIntegrandK1Q1T2 = 7.7220401657693700115e-06;

}  // namespace ref
