#pragma once
// Frozen high-precision reference values.  Regenerate with gen_constants.py;
// all values were computed with 60-digit working precision (mpmath).

namespace oracle {

// B_{4/3}
inline constexpr double kB_4_3 = 0.93668707437524814;
// 50 digits: 0.93668707437524813991686126759782126171674078474319

// B_{3/2}
inline constexpr double kB_3_2 = 0.95318429299693657;
// 50 digits: 0.95318429299693657375740899539942715777290709465035

// B_{1.9}
inline constexpr double kB_1_9 = 0.99196950351062021;
// 50 digits: 0.99196950351062020838663208566282971896727559111865

// B_{6/5}
inline constexpr double kB_6_5 = 0.92927926814981235;
// 50 digits: 0.92927926814981235152898687268693967093187488719894

// B_{4/3}^2 (Young [4/3,4/3], n=1; Weyl limit constant)
inline constexpr double kB_4_3_sq = 0.87738267530166164;
// 50 digits: 0.87738267530166164054614593453133270344004572680388

// B_{4/3}^3 (Heisenberg / SU(2) limit constant)
inline constexpr double kB_4_3_cubed = 0.82183301123584173;
// 50 digits: 0.82183301123584172632343718346122691377475139848556

// B_{4/3}^4 (Young [4/3,4/3], n=2)
inline constexpr double kB_4_3_4th = 0.76980035891950102;
// 50 digits: 0.76980035891950101934553170733594327419680233502684

// B_{3/2}^2
inline constexpr double kB_3_2_sq = 0.90856029641606983;
// 50 digits: 0.90856029641606982944560587816363025121410523157061

// B_{3/2}^3
inline constexpr double kB_3_2_cubed = 0.86602540378443865;
// 50 digits: 0.86602540378443864676372317075293618347140262690519

// B_{1.9}^2
inline constexpr double kB_1_9_sq = 0.98400349589510636;
// 50 digits: 0.98400349589510635793082072093042881994593631037129

// 2^{1/4}; value of the ground Hermite function at 0
inline constexpr double kHermite0At0 = 1.1892071150027211;
// 50 digits: 1.1892071150027210667174999705604759152929720924638

// (int exp(-2 pi x^2) dx)^{1/2} = 2^{-1/4}
inline constexpr double kGaussL2Dim1 = 0.84089641525371454;
// 50 digits: 0.84089641525371454303112547623321489504003426235678

// first positive zero of J_0
inline constexpr double kJ0FirstZero = 2.4048255576957728;
// 50 digits: 2.4048255576957727686216318793264546431242449091460

// J_1(2 pi); Hankel transform of the unit-disc indicator at zeta=1
inline constexpr double kJ1At2Pi = -0.21238253007636905;
// 50 digits: -0.21238253007636905220285865567108499622725602585369

// L_2(1) = -1/2
inline constexpr double kLaguerre2At1 = -0.5;
// 50 digits: -0.50000000000000000000000000000000000000000000000000

// 1/sqrt(2); twisted/plain convolution ratio of chi_0
inline constexpr double kInvSqrt2 = 0.70710678118654752;
// 50 digits: 0.70710678118654752440084436210484903928483593768847

// (sum_k (2^-(k+1))^4)^{1/4} = (1/15)^{1/4}
inline constexpr double kGeom2Pow4 = 0.50813274815461474;
// 50 digits: 0.50813274815461473628020524337847757175268861657688

}  // namespace oracle
