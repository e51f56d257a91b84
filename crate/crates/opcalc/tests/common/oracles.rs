// Frozen reference values. Regenerate with tools/oracles.py (mpmath, 40 digits).
#![allow(dead_code)]

pub const GAMMA_HALF: f64 = 1.7724538509055160;  // sqrt(pi)
pub const DIGAMMA_37: f64 = 1.1671535393615114;
pub const LGAMMA_65: f64 = 5.6625620598571415;
pub const LGAMMA_025_20I_RE: f64 = -31.245901532192641;  // Re log-gamma(0.25+20i)
pub const LGAMMA_025_20I_IM: f64 = 39.522467241706900;  // Im log-gamma(0.25+20i)
pub const BESSELI_1_2: f64 = 1.5906368546373291;
pub const BESSELJ_07_32: f64 = 0.097720467525300120;
pub const BESSELY_07_32: f64 = 0.43761298580182799;
pub const BESSELI_07_32: f64 = 5.2133809318459064;
pub const BESSELK_07_32: f64 = 0.029513878867860135;
pub const BESSELJ_07_18: f64 = -0.17222700895713097;  // asymptotic regime
pub const BESSELJ_15_40: f64 = 0.086488679736133760;
pub const BESSELJ_08_250: f64 = -0.049167305169148686;
pub const BESSELY_2_9: f64 = -0.22675568157464337;  // integer order
pub const BESSELY_0_05: f64 = -0.44451873350670656;
pub const BESSELK_2_27: f64 = 0.092024585328059035;  // integer order
pub const BESSELI_07_30: f64 = 775205402418.45179;  // asymptotic regime
pub const BESSELK_07_14: f64 = 2.8084781003719115e-7;  // asymptotic regime
pub const JNORM_07_24: f64 = 0.35165495616626994;
pub const JNORM_07_11: f64 = 0.83175949906392811;
pub const LEGP_07_0_13: f64 = 1.1734731119962099;
pub const LEGP_07_03_13: f64 = 1.3035622695793358;
pub const LEGPCUT_07_03_06: f64 = 0.60847122825617896;
pub const LEGPCUT_07_0_03: f64 = 0.54667266377560985;
pub const LEGQ_05_0_125: f64 = 0.61741211166685315;
pub const LEGQ_05_1_125: f64 = -1.0748305833117760;
pub const LEGQ_13_1_17: f64 = -0.23359780723898988;
pub const LEGQCUT_05_1_03: f64 = -1.1362062506013320;
pub const LEGQCUT_13_1_06: f64 = -1.0194586953905379;
pub const LEGQ_13_1_101: f64 = -6.6330241905722426;  // stresses the z -> 1+ limit of the second-kind kernel
pub const LEGQCUT_05_0_035: f64 = -0.47266010179096385;  // order-zero Ferrers Q, Richardson limit at mu = 0
pub const LEGP_07_M07_14: f64 = 0.66785577992751840;  // P_nu^{-nu}, equals (z^2-1)^{nu/2}/(2^nu Gamma(nu+1))
pub const LEGP_DERIV_07_13: f64 = 0.56268544334918866;
pub const LEGPCUT_DERIV_07_06: f64 = 0.65263878607910599;
pub const HYP2F1_A: f64 = 1.0845097772444292;
pub const HYP2F1_M09: f64 = 0.91440328705495975;
pub const HYP2F1_NEG30: f64 = 0.31368708904724252;
pub const HYP2F1_NEAR1_LOG: f64 = 1.7008562689954483;  // c-a-b = 0 logarithmic case
pub const HYP2F1_CAB1: f64 = 1.1463212867435260;  // c-a-b = 1
pub const HYP2F1_NEAR1: f64 = 1.1964312867832791;
pub const HYP2F1_CAB2: f64 = 1.0908037172582786;  // c-a-b = 2
pub const HYP2F1_CABM1: f64 = 13.751213790463901;  // c-a-b = -1
pub const HYP2F1_CABM1_NU05: f64 = 1198.9045377726714;  // Q_nu^1 inner function near its z -> 1 limit, c-a-b = -1
pub const HYP2F1_AEQB: f64 = 0.32212860388221011;  // a = b, exercises the log case after Pfaff
pub const HYP1F1_05_2_M3: f64 = 0.58647299647508401;
pub const HYP1F1_05_2_M40: f64 = 0.17728653406811469;
pub const HYP1F1_12_23_5: f64 = 30.143453239978892;
pub const HYP1F1_2_3_M40: f64 = 0.0012499999999999998;
pub const HYP1F1_15_2_M12: f64 = 0.014605973331310692;
pub const WRIGHT_1_1_02: f64 = 0.24204500446923690;
pub const WRIGHT_05_05_03: f64 = 0.19027494998371372;
pub const WRIGHT_05_05_TERM1: f64 = 0.067523723711782955;  // k=1 term of the (0.5, 0.5, 0.3) series
pub const OSC_SIN40_EXP: f64 = 0.024984384781451454;  // int_0^20 sin(40x) e^{-x} dx
pub const BETA_07_13: f64 = 1.1649666232352799;
pub const MELLIN_EXP_TRUNC_RE: f64 = 0.086828673278990111;  // int_{1e-4}^{40} x^{s-1} e^{-x} dx at s = 1/2 + 2i
pub const MELLIN_EXP_TRUNC_IM: f64 = -0.056703494790537638;
pub const ABS_M_S0P_NU03_U1: f64 = 1.0368353401061613;  // |m_{S0+}(1/2+i)| at nu=0.3
pub const NORM_S0P_NU03: f64 = 2.2882456112707372;
pub const P4_FACTOR_M2_03_04: f64 = 0.95423409761385289;  // power-law factor at m=-2, alpha=0.3, nu=0.4
pub const RL_HALF_X2_17: f64 = 2.2676503467217944;  // I^{1/2} x^2 at x=1.7
pub const EK_FACTOR_07_025_1: f64 = 0.59295714036921775;  // EK power factor at alpha=0.7, eta=0.25, s=1
pub const RESOLVENT_K_2_1_03_04: f64 = 1.2488478238939173;
pub const SPD_P_COS_CONST: f64 = 0.60668597618085570;  // P_{0.7} cos = const * j_{0.7}
pub const RIEMANN_INTERIOR: f64 = 1.1351881076193071;  // R at (nu,s,tau,xi,eta)=(0.5,4,0.5,2,1)
