//! The frozen enumeration of claim identifiers. Reports are diffable across
//! versions only while this list is append-only.

pub const LEMMA1_DEGREE_AK: &str = "lemma1.degree_ak";
pub const LEMMA1_LEADING_COEFF: &str = "lemma1.leading_coeff";
pub const LEMMA1_DEGREE_AN: &str = "lemma1.degree_an";
pub const LEMMA1_VANISH: &str = "lemma1.vanish_an1_an";
pub const LEMMA1_MONOMIAL_AN: &str = "lemma1.monomial_an";
pub const LEMMA1_MONOMIAL_AN1: &str = "lemma1.monomial_an1";
pub const LEMMA1_QH_DEGREE: &str = "lemma1.qh_degree";

pub const REMARK1_PRODUCT: &str = "remark1.product_formula";

pub const LEMMA2_DET_JK: &str = "lemma2.det_jk";

pub const PROP1_CASE_I: &str = "prop1.case_i";
pub const PROP1_CASE_II: &str = "prop1.case_ii";
pub const PROP1_TRIPLE_ROOT: &str = "prop1.triple_root";
pub const PROP1_PARAMETRIZATION: &str = "prop1.parametrization";

pub const DIV_PART1: &str = "prop.div.part1";
pub const DIV_PART2: &str = "prop.div.part2";
pub const DIV_PART3: &str = "prop.div.part3";
pub const DIV_PART4: &str = "prop.div.part4";

pub const STMT_A_SHAPE: &str = "stmtA.shape";
pub const STMT_B_SHAPE: &str = "stmtB.shape";
pub const STMT_B_FACTOR: &str = "stmtB.factor";
pub const STMT_C_DIVISIBLE: &str = "stmtC.divisible";
pub const STMT_C_COFACTOR: &str = "stmtC.cofactor";

pub const SIGMA_TRIPLE_ROOT: &str = "sigma.triple_root";
pub const SIGMA_TRIPLE_ROOT_ZERO: &str = "sigma.triple_root_zero";
pub const SIGMA_DOUBLE_ROOT_ONLY: &str = "sigma.double_root_only";

pub const PROP2_R: &str = "prop2.R";
pub const PROP2_VK: &str = "prop2.Vk";
pub const PROP2_VN1: &str = "prop2.Vn1";

/// One registered claim: its id, the check that produces it, and a short
/// description for text reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub check: &'static str,
    pub description: &'static str,
}

const fn claim(id: &'static str, check: &'static str, description: &'static str) -> ClaimInfo {
    ClaimInfo { id, check, description }
}

pub const CLAIMS: &[ClaimInfo] = &[
    claim(LEMMA1_DEGREE_AK, "lemma1", "R has degree n in a_k for k < n"),
    claim(LEMMA1_LEADING_COEFF, "lemma1", "leading coefficient in a_k is ±k^k (n-k)^(n-k) a_n^(n-k-1)"),
    claim(LEMMA1_DEGREE_AN, "lemma1", "R has degree n-1 in a_n"),
    claim(LEMMA1_VANISH, "lemma1", "R vanishes identically at a_(n-1) = a_n = 0"),
    claim(LEMMA1_MONOMIAL_AN, "lemma1", "R contains A a_n^(n-1) with A != 0"),
    claim(LEMMA1_MONOMIAL_AN1, "lemma1", "R contains B a_(n-1)^n with B != 0"),
    claim(LEMMA1_QH_DEGREE, "lemma1", "R is quasi-homogeneous of degree n(n-1) under w(a_j) = j"),
    claim(REMARK1_PRODUCT, "remark1", "|R| equals the product of squared root differences"),
    claim(LEMMA2_DET_JK, "lemma2", "det J_k = (-1)^n 2 lambda^(n-k) Q(-lambda)"),
    claim(PROP1_CASE_I, "smoothness", "all partials of R are nonzero at generic double-root points"),
    claim(PROP1_CASE_II, "smoothness", "at a double root 0, dR/da_k = 0 for k < n and dR/da_n != 0"),
    claim(PROP1_TRIPLE_ROOT, "smoothness", "the gradient of R vanishes at triple-root points"),
    claim(PROP1_PARAMETRIZATION, "smoothness", "R vanishes identically on the double-root parametrization"),
    claim(DIV_PART1, "divisibility", "D~_k (k < n) is not divisible by a_i for k != i != n"),
    claim(DIV_PART2, "divisibility", "D~_n is not divisible by a_i for i < n"),
    claim(DIV_PART3, "divisibility", "D~_k (k <= n-2) has order exactly n-k-1 in a_n"),
    claim(DIV_PART4, "divisibility", "D~_(n-1) has order exactly 1 in a_n"),
    claim(STMT_A_SHAPE, "statements", "R restricted to a_k, a_n has support {a_k^n a_n^(n-k-1), a_n^(n-1)}"),
    claim(STMT_B_SHAPE, "statements", "Res(P0, P0') has support {a_(n-1)^n, a_k^(n-1) a_(n-1)^(n-k)}"),
    claim(STMT_B_FACTOR, "statements", "Res(P0, P0') = a_(n-1) det S(P0/x, P0')"),
    claim(STMT_C_DIVISIBLE, "statements", "R at a_n = 0 is divisible by a_(n-1)^2"),
    claim(STMT_C_COFACTOR, "statements", "the a_n-cofactor V satisfies V at a_n = 0 nonzero"),
    claim(SIGMA_TRIPLE_ROOT, "sigma", "triple-root samples: V_k, Res(P,P') and Res(P',P'') vanish"),
    claim(SIGMA_TRIPLE_ROOT_ZERO, "sigma", "triple root at 0: V_(n-1) vanishes"),
    claim(SIGMA_DOUBLE_ROOT_ONLY, "sigma", "double-root-only samples: Res(P',P'') and all V_k are nonzero"),
    claim(PROP2_R, "irreducibility", "R is irreducible"),
    claim(PROP2_VK, "irreducibility", "V_k is irreducible for k != n-1"),
    claim(PROP2_VN1, "irreducibility", "V_(n-1) is irreducible"),
];

pub fn lookup(id: &str) -> Option<&'static ClaimInfo> {
    CLAIMS.iter().find(|c| c.id == id)
}
