// Generated by generate.py; do not edit by hand.
#![allow(dead_code)]
pub const LOG_GAMMA_HALF_PLUS_14I: (f64, f64) = (-21.283835577051322374, 23.305944472665731117);
pub const DIGAMMA_QUARTER: f64 = -4.2274535333762654081;
pub const TRIGAMMA_TEN: f64 = 0.10516633568168574612;
pub const TETRAGAMMA_ONE: f64 = -2.4041138063191885708;
pub const PSIBAR1_TWO: f64 = -0.10506593315177356353;
pub const ZETA_HALF: f64 = -1.4603545088095868129;
pub const XI_ZERO: f64 = 0.49712077818831410991;
pub const XI_FIVE: f64 = 0.27554999734420419223;
pub const K0_ONE: f64 = 0.42102443824070833334;
pub const K0_TWENTY: f64 = 0.00000000057412378153365242927;
pub const K0_FIVE: f64 = 0.0036910983340425942747;
pub const K0_HALF: f64 = 0.92441907122766586178;
pub const S_DIRECT_FIVE: f64 = -1.2418011527585853445;
pub const S_LATTICE_CENTI: f64 = -13.117960580952414568;
pub const S_AT_ONE: f64 = -3.9375766550439577896;
pub const THETA_REST_ONE: f64 = 0.043217405606654007288;
pub const ERFI_ONE: f64 = 1.650425758797542876;
pub const ERFC_TWO: f64 = 0.0046777349810472658379;
pub const EI_MINUS_ONE: f64 = -0.21938393439552027368;
pub const EI_MINUS_TENTH: f64 = -1.8229239584193906661;
pub const LOG_GAUSSIAN_MOMENT_ONE: f64 = -0.87005772672831550673;
pub const LOG_GAUSSIAN_MOMENT_HUNDRED: f64 = -0.29106706342857815096;
pub const C1: f64 = 0.95289419468608789465;
pub const C2: f64 = 1.5662449044474548887;
pub const HARDY_INTEGRAL_ONE: f64 = 0.89898958470739901876;
pub const HARDY_INTEGRAL_PI: f64 = 0.68740406613526977437;
pub const HARDY_INTEGRAL_TEN_THOUSAND: f64 = 0.044479114177585138534;
pub const HARDY_LHS_ZERO: f64 = 0.34370203306763488718;
pub const HARDY_RHS_TWO: f64 = 0.16871000696706350044;
pub const GENPSI_M1_X0: f64 = 0.34370203306763488718;
pub const KOSH2_RHS_ZERO: f64 = 1.0884997710675796739;
pub const KOSH2_RHS_ONE: f64 = 1.0549343535178999256;
pub const XI_KERNEL_INTEGRAL: f64 = 0.68740406613526977437;
pub const XI_MOMENT_0: f64 = 2.8066794017776921831;
pub const XI_MOMENT_1: f64 = 52.560418324686096261;
pub const XI_MOMENT_2: f64 = 2551.4847911022316923;
pub const XI_MOMENT_3: f64 = 159390.98378136405326;
pub const COSINE13_RHS_QUARTER_PRINTED: f64 = 0.51635766675330458073;
pub const COSINE13_RHS_QUARTER_CORRECTED: f64 = 0.65744700053748837417;
pub const COSINE13_RHS_MINUS_QUARTER_CORRECTED: f64 = 0.65744700053748837417;
