//! The numerical intersection ring of the projectivization of a parabolic
//! bundle over a curve.
//!
//! The ring is generated by the tautological class `xi` and the fiber class
//! `L`, subject to `xi^r = N^r * d * [pt]`, `xi^(r-1) * L = N^(r-1) * [pt]`
//! and `L^2 = 0`, where `r` is the rank, `N` the level, and `d` the
//! parabolic degree. Every homogeneous class of grade `g` is therefore
//! `a * xi^g + b * xi^(g-1) * L`; classes are stored as that coefficient
//! pair, exact rationals throughout.
//!
//! A class carries a side tag: `Upper` for a weight-`g` polynomial class, or
//! `Lower` for the same polynomial capped against the fundamental class
//! (a dimension-`r - g` cycle class). Products of two capped classes are
//! meaningless and rejected; so are products landing beyond the top grade.
//!
//! A [`CoverContext`] relates the ring to the intersection ring of the
//! projectivization of the honest bundle living on a Galois cover of degree
//! `gamma` (a multiple of `N`), via exact pullback and pushforward maps.

use std::fmt;

use num::{One, Signed, Zero};

use crate::arith::{int, primitive_integer_pair, rat_pow, Rat};
use crate::bundle::ParabolicBundleSpec;
use crate::error::{Error, Result};

/// Whether a class is a weight-`g` polynomial class (`Upper`) or that
/// polynomial capped against the fundamental class (`Lower`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Upper,
    Lower,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::Upper => Side::Lower,
            Side::Lower => Side::Upper,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Upper => write!(f, "upper"),
            Side::Lower => write!(f, "lower"),
        }
    }
}

/// The constants that determine the numerical ring: rank, level, and
/// parabolic degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingContext {
    rank: u32,
    level: u64,
    pardeg: Rat,
}

impl RingContext {
    /// A ring context with the given relation constants. The rank and the
    /// level must be positive.
    pub fn new(rank: u32, level: u64, pardeg: Rat) -> RingContext {
        assert!(rank >= 1, "ring context needs a positive rank");
        assert!(level >= 1, "ring context needs a positive level");
        RingContext { rank, level, pardeg }
    }

    /// The ring context of the projectivization of the given bundle.
    pub fn for_bundle(spec: &ParabolicBundleSpec) -> Result<RingContext> {
        Ok(RingContext::new(spec.rank(), spec.level()?, spec.parabolic_degree()))
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn pardeg(&self) -> &Rat {
        &self.pardeg
    }

    pub fn level_rat(&self) -> Rat {
        int(self.level as i64)
    }

    /// Value of `xi^r` against the point class: `N^r * d`.
    pub fn top_xi_value(&self) -> Rat {
        rat_pow(&self.level_rat(), self.rank) * &self.pardeg
    }

    /// Value of `xi^(r-1) * L` against the point class: `N^(r-1)`.
    pub fn top_xi_ell_value(&self) -> Rat {
        rat_pow(&self.level_rat(), self.rank - 1)
    }

    /// The multiplicative unit (grade 0, upper).
    pub fn one(&self) -> NumericalClass {
        NumericalClass {
            ctx: self.clone(),
            grade: 0,
            side: Side::Upper,
            xi_coeff: Rat::one(),
            ell_coeff: Rat::zero(),
        }
    }

    /// The tautological class `xi` (grade 1, upper).
    pub fn xi(&self) -> NumericalClass {
        self.monomial(1, 0).expect("xi is always representable")
    }

    /// The fiber class `L` (grade 1, upper).
    pub fn ell(&self) -> NumericalClass {
        self.monomial(0, 1).expect("L is always representable")
    }

    /// The monomial `xi^a * L^b` with `b <= 1` and `a + b <= r`, as an upper
    /// class.
    pub fn monomial(&self, xi_exp: u32, ell_exp: u32) -> Result<NumericalClass> {
        if ell_exp > 1 {
            return Err(Error::GradeMismatch {
                detail: format!("monomial with L-exponent {ell_exp}; the fiber class squares to zero"),
            });
        }
        let grade = xi_exp + ell_exp;
        if grade > self.rank {
            return Err(Error::GradeOverflow { grade, rank: self.rank });
        }
        let (xi_coeff, ell_coeff) =
            if ell_exp == 0 { (Rat::one(), Rat::zero()) } else { (Rat::zero(), Rat::one()) };
        Ok(NumericalClass { ctx: self.clone(), grade, side: Side::Upper, xi_coeff, ell_coeff })
    }

    /// A general homogeneous class `a * xi^g + b * xi^(g-1) * L` with the
    /// given side tag. Grade 0 admits no `L` part.
    pub fn class(&self, grade: u32, side: Side, xi_coeff: Rat, ell_coeff: Rat) -> Result<NumericalClass> {
        if grade > self.rank {
            return Err(Error::GradeOverflow { grade, rank: self.rank });
        }
        if grade == 0 && !ell_coeff.is_zero() {
            return Err(Error::GradeMismatch {
                detail: "a grade-0 class cannot have an L part".into(),
            });
        }
        Ok(NumericalClass { ctx: self.clone(), grade, side, xi_coeff, ell_coeff })
    }
}

/// A homogeneous class `a * xi^g + b * xi^(g-1) * L` in the numerical ring,
/// tagged with the side it lives on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalClass {
    ctx: RingContext,
    grade: u32,
    side: Side,
    xi_coeff: Rat,
    ell_coeff: Rat,
}

impl NumericalClass {
    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn grade(&self) -> u32 {
        self.grade
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Coefficient of `xi^g`.
    pub fn xi_coeff(&self) -> &Rat {
        &self.xi_coeff
    }

    /// Coefficient of `xi^(g-1) * L` (zero for grade 0).
    pub fn ell_coeff(&self) -> &Rat {
        &self.ell_coeff
    }

    pub fn is_zero(&self) -> bool {
        self.xi_coeff.is_zero() && self.ell_coeff.is_zero()
    }

    fn check_same_slice(&self, rhs: &NumericalClass, op: &str) -> Result<()> {
        if self.ctx != rhs.ctx {
            return Err(Error::ContextMismatch { detail: format!("{op} across different rings") });
        }
        if self.grade != rhs.grade {
            return Err(Error::GradeMismatch {
                detail: format!("{op} of grades {} and {}", self.grade, rhs.grade),
            });
        }
        if self.side != rhs.side {
            return Err(Error::SideMismatch {
                detail: format!("{op} of a {} and a {} class", self.side, rhs.side),
            });
        }
        Ok(())
    }

    /// Sum of two classes of the same slice (context, grade and side).
    pub fn add(&self, rhs: &NumericalClass) -> Result<NumericalClass> {
        self.check_same_slice(rhs, "sum")?;
        Ok(NumericalClass {
            ctx: self.ctx.clone(),
            grade: self.grade,
            side: self.side,
            xi_coeff: &self.xi_coeff + &rhs.xi_coeff,
            ell_coeff: &self.ell_coeff + &rhs.ell_coeff,
        })
    }

    /// Difference of two classes of the same slice.
    pub fn sub(&self, rhs: &NumericalClass) -> Result<NumericalClass> {
        self.add(&rhs.scaled(&int(-1)))
    }

    /// The class scaled by a rational.
    pub fn scaled(&self, c: &Rat) -> NumericalClass {
        NumericalClass {
            ctx: self.ctx.clone(),
            grade: self.grade,
            side: self.side,
            xi_coeff: &self.xi_coeff * c,
            ell_coeff: &self.ell_coeff * c,
        }
    }

    /// Ring product. Upper times upper stays upper; upper times lower (in
    /// either order) is the module action and gives a lower class; lower
    /// times lower is rejected. The product applies `L^2 = 0`, and a product
    /// landing beyond grade `r` is an error, not zero.
    pub fn multiply(&self, rhs: &NumericalClass) -> Result<NumericalClass> {
        if self.ctx != rhs.ctx {
            return Err(Error::ContextMismatch { detail: "product across different rings".into() });
        }
        let side = match (self.side, rhs.side) {
            (Side::Upper, Side::Upper) => Side::Upper,
            (Side::Upper, Side::Lower) | (Side::Lower, Side::Upper) => Side::Lower,
            (Side::Lower, Side::Lower) => {
                return Err(Error::SideMismatch {
                    detail: "product of two lower (capped) classes".into(),
                })
            }
        };
        let grade = self.grade + rhs.grade;
        if grade > self.ctx.rank {
            return Err(Error::GradeOverflow { grade, rank: self.ctx.rank });
        }
        Ok(NumericalClass {
            ctx: self.ctx.clone(),
            grade,
            side,
            xi_coeff: &self.xi_coeff * &rhs.xi_coeff,
            // The L^2 cross term of the two L parts is annihilated.
            ell_coeff: &self.xi_coeff * &rhs.ell_coeff + &self.ell_coeff * &rhs.xi_coeff,
        })
    }

    /// Small power of an upper class (repeated [`multiply`](Self::multiply)).
    pub fn pow(&self, exp: u32) -> Result<NumericalClass> {
        if self.side != Side::Upper {
            return Err(Error::SideMismatch {
                detail: "powers are defined for upper classes only".into(),
            });
        }
        let mut out = self.ctx.one();
        for _ in 0..exp {
            out = out.multiply(self)?;
        }
        Ok(out)
    }

    /// Flips the side tag, keeping the polynomial representation: capping
    /// with the fundamental class, or un-capping.
    pub fn cyclified(&self) -> NumericalClass {
        NumericalClass { side: self.side.flipped(), ..self.clone() }
    }

    /// Evaluates a top-grade class (grade exactly `r`) against the point
    /// class: `a * N^r * d + b * N^(r-1)`.
    pub fn degree_of_top(&self) -> Result<Rat> {
        if self.grade != self.ctx.rank {
            return Err(Error::GradeMismatch {
                detail: format!(
                    "top-degree evaluation of a grade-{} class in a rank-{} ring",
                    self.grade, self.ctx.rank
                ),
            });
        }
        Ok(&self.xi_coeff * self.ctx.top_xi_value() + &self.ell_coeff * self.ctx.top_xi_ell_value())
    }

    /// The intersection pairing of an upper class of grade `k` against a
    /// lower class of grade `r - k` (grades referring to the polynomial
    /// representations): multiply and evaluate on top.
    pub fn pair(&self, lower: &NumericalClass) -> Result<Rat> {
        if self.side != Side::Upper || lower.side != Side::Lower {
            return Err(Error::SideMismatch {
                detail: format!(
                    "pairing takes an upper and a lower class, got {} and {}",
                    self.side, lower.side
                ),
            });
        }
        if self.grade + lower.grade != self.ctx.rank {
            return Err(Error::GradeMismatch {
                detail: format!(
                    "pairing grades {} and {} do not fill rank {}",
                    self.grade, lower.grade, self.ctx.rank
                ),
            });
        }
        self.multiply(lower)?.degree_of_top()
    }

    /// The unique positively-scaled representative with coprime integer
    /// coefficients. Used as the canonical form of a ray.
    pub fn canonicalized(&self) -> NumericalClass {
        let (xi_coeff, ell_coeff) = primitive_integer_pair(&self.xi_coeff, &self.ell_coeff);
        NumericalClass { ctx: self.ctx.clone(), grade: self.grade, side: self.side, xi_coeff, ell_coeff }
    }
}

impl fmt::Display for NumericalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn monomial(xi_exp: u32, ell: bool) -> String {
            let mut parts: Vec<String> = Vec::new();
            match xi_exp {
                0 => {}
                1 => parts.push("xi".into()),
                e => parts.push(format!("xi^{e}")),
            }
            if ell {
                parts.push("L".into());
            }
            parts.join("*")
        }
        fn push_term(out: &mut String, coeff: &Rat, mon: String) {
            if coeff.is_zero() {
                return;
            }
            let mag = coeff.abs();
            if out.is_empty() {
                if coeff.is_negative() {
                    out.push('-');
                }
            } else if coeff.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if mon.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mon);
            } else {
                out.push_str(&format!("{mag}*{mon}"));
            }
        }
        let mut out = String::new();
        push_term(&mut out, &self.xi_coeff, monomial(self.grade, false));
        if self.grade > 0 {
            push_term(&mut out, &self.ell_coeff, monomial(self.grade - 1, true));
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

/// A Galois cover of degree `gamma` (a positive multiple of the level) on
/// which the parabolic bundle is realized by an honest bundle, together with
/// the base ring. Owns the exact pullback/pushforward maps between the two
/// numerical rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverContext {
    base: RingContext,
    gamma: u64,
}

impl CoverContext {
    /// Pairs a base ring with a cover degree. The degree must be a positive
    /// multiple of the level.
    pub fn new(base: RingContext, gamma: u64) -> Result<CoverContext> {
        if gamma == 0 || !gamma.is_multiple_of(base.level) {
            return Err(Error::InadmissibleGamma { gamma, smallest: base.level });
        }
        Ok(CoverContext { base, gamma })
    }

    pub fn base(&self) -> &RingContext {
        &self.base
    }

    pub fn gamma(&self) -> u64 {
        self.gamma
    }

    pub fn gamma_rat(&self) -> Rat {
        int(self.gamma as i64)
    }

    /// The numerical ring upstairs: same rank, level 1 (the bundle is
    /// honest there), and degree `gamma * d`.
    pub fn cover_ring(&self) -> RingContext {
        RingContext::new(self.base.rank, 1, self.gamma_rat() * &self.base.pardeg)
    }

    /// Pullback to the cover: `xi` maps to `N * xi~` and `L` maps to
    /// `gamma * L~`, extended multiplicatively. The side tag is preserved.
    pub fn pullback_to_cover(&self, class: &NumericalClass) -> Result<NumericalClass> {
        if class.ctx != self.base {
            return Err(Error::ContextMismatch {
                detail: "pullback of a class from a different ring".into(),
            });
        }
        let n = self.base.level_rat();
        let xi_coeff = &class.xi_coeff * rat_pow(&n, class.grade);
        let ell_coeff = if class.grade == 0 {
            Rat::zero()
        } else {
            &class.ell_coeff * rat_pow(&n, class.grade - 1) * self.gamma_rat()
        };
        self.cover_ring().class(class.grade, class.side, xi_coeff, ell_coeff)
    }

    /// Pushforward from the cover: `xi~^j` maps to `(gamma / N^j) * xi^j`
    /// and `xi~^(j-1) * L~` maps to `(1 / N^(j-1)) * xi^(j-1) * L`. The side
    /// tag is preserved. Composed with pullback this multiplies by `gamma`.
    pub fn pushforward_from_cover(&self, class: &NumericalClass) -> Result<NumericalClass> {
        if class.ctx != self.cover_ring() {
            return Err(Error::ContextMismatch {
                detail: "pushforward of a class not from the cover ring".into(),
            });
        }
        let n = self.base.level_rat();
        let xi_coeff = &class.xi_coeff * self.gamma_rat() / rat_pow(&n, class.grade);
        let ell_coeff = if class.grade == 0 {
            Rat::zero()
        } else {
            &class.ell_coeff / rat_pow(&n, class.grade - 1)
        };
        self.base.class(class.grade, class.side, xi_coeff, ell_coeff)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    /// Rank 2, level 2, parabolic degree 3/2 (two summands: degree 0 with
    /// weight 1/2, degree 1 with weight 0).
    fn ctx_b() -> RingContext {
        RingContext::new(2, 2, rat(3, 2))
    }

    /// Rank 3, level 2, parabolic degree 3/2.
    fn ctx_c() -> RingContext {
        RingContext::new(3, 2, rat(3, 2))
    }

    #[test]
    fn squaring_xi_minus_ell_applies_ell_nilpotence() {
        let ctx = ctx_b();
        let c = ctx.xi().sub(&ctx.ell()).unwrap();
        let sq = c.multiply(&c).unwrap();
        assert_eq!(sq, ctx.class(2, Side::Upper, int(1), int(-2)).unwrap());
    }

    #[test]
    fn ell_squared_is_the_zero_class() {
        let ctx = ctx_b();
        let sq = ctx.ell().multiply(&ctx.ell()).unwrap();
        assert!(sq.is_zero());
        assert_eq!(sq.grade(), 2);
    }

    #[test]
    fn products_beyond_the_top_grade_are_errors_not_zero() {
        let ctx = ctx_b();
        let xi2 = ctx.xi().pow(2).unwrap();
        let err = xi2.multiply(&ctx.xi()).unwrap_err();
        assert_eq!(err, Error::GradeOverflow { grade: 3, rank: 2 });
    }

    #[test]
    fn top_evaluation_reads_the_relation_constants() {
        let ctx = ctx_b();
        // xi^2 = N^2 * d = 4 * 3/2 = 6 and xi * L = N = 2 against the point.
        assert_eq!(ctx.xi().pow(2).unwrap().degree_of_top().unwrap(), int(6));
        let xi_ell = ctx.xi().multiply(&ctx.ell()).unwrap();
        assert_eq!(xi_ell.degree_of_top().unwrap(), int(2));
    }

    #[test]
    fn top_evaluation_requires_the_top_grade() {
        let ctx = ctx_b();
        assert!(matches!(ctx.xi().degree_of_top(), Err(Error::GradeMismatch { .. })));
    }

    #[test]
    fn pairing_is_the_matrix_of_relation_constants() {
        // In rank 3, level 2, degree 3/2:
        //   <xi^k, xi^(r-k)>     = N^3 * d = 12
        //   <xi^k, xi^(r-k-1) L> = N^2 = 4, in both positions
        //   <xi^(k-1) L, xi^(r-k-1) L> = 0.
        let ctx = ctx_c();
        for k in 1..=2u32 {
            let up_xi = ctx.monomial(k, 0).unwrap();
            let up_ell = ctx.monomial(k - 1, 1).unwrap();
            let lo_xi = ctx.monomial(3 - k, 0).unwrap().cyclified();
            let lo_ell = ctx.monomial(3 - k - 1, 1).unwrap().cyclified();
            assert_eq!(up_xi.pair(&lo_xi).unwrap(), int(12));
            assert_eq!(up_xi.pair(&lo_ell).unwrap(), int(4));
            assert_eq!(up_ell.pair(&lo_xi).unwrap(), int(4));
            assert_eq!(up_ell.pair(&lo_ell).unwrap(), int(0));
        }
    }

    #[test]
    fn pairing_example_vanishes_on_dual_boundary_rays() {
        // pair(xi - L, xi - 2L) in rank 2, level 2, degree 3/2:
        // 1*1*6 + (1*(-2) + (-1)*1)*2 = 0.
        let ctx = ctx_b();
        let nef_gen = ctx.xi().sub(&ctx.ell()).unwrap();
        let eff_gen = ctx.xi().sub(&ctx.ell().scaled(&int(2))).unwrap().cyclified();
        assert_eq!(nef_gen.pair(&eff_gen).unwrap(), int(0));
    }

    #[test]
    fn pairing_enforces_sides_and_grades() {
        let ctx = ctx_b();
        let upper = ctx.xi();
        assert!(matches!(upper.pair(&ctx.ell()), Err(Error::SideMismatch { .. })));
        let lower_wrong_grade = ctx.monomial(1, 1).unwrap().cyclified();
        assert!(matches!(
            ctx.xi().pow(2).unwrap().pair(&lower_wrong_grade),
            Err(Error::GradeMismatch { .. })
        ));
    }

    #[test]
    fn lower_times_lower_is_rejected() {
        let ctx = ctx_b();
        let a = ctx.xi().cyclified();
        let err = a.multiply(&a).unwrap_err();
        assert!(matches!(err, Error::SideMismatch { .. }));
    }

    #[test]
    fn upper_times_lower_caps_the_product() {
        let ctx = ctx_c();
        let up = ctx.xi();
        let lo = ctx.ell().cyclified();
        let prod = up.multiply(&lo).unwrap();
        assert_eq!(prod.side(), Side::Lower);
        assert_eq!(prod.grade(), 2);
    }

    #[test]
    fn cyclify_is_an_involution_on_the_polynomial() {
        let ctx = ctx_c();
        let c = ctx.class(2, Side::Upper, rat(5, 3), int(-7)).unwrap();
        assert_eq!(c.cyclified().cyclified(), c);
        assert_eq!(c.cyclified().side(), Side::Lower);
        assert_eq!(c.cyclified().xi_coeff(), c.xi_coeff());
    }

    #[test]
    fn canonical_form_clears_denominators_and_common_factors() {
        let ctx = ctx_b();
        let c = ctx.class(1, Side::Upper, rat(4, 6), rat(-2, 3)).unwrap();
        let canon = c.canonicalized();
        assert_eq!(canon.xi_coeff(), &int(1));
        assert_eq!(canon.ell_coeff(), &int(-1));
    }

    #[test]
    fn pullback_scales_xi_by_level_and_ell_by_gamma() {
        // Rank 2, level 2, gamma 2: xi - L pulls back to 2 xi~ - 2 L~.
        let cover = CoverContext::new(ctx_b(), 2).unwrap();
        let pulled = cover.pullback_to_cover(&ctx_b().xi().sub(&ctx_b().ell()).unwrap()).unwrap();
        let expected = cover.cover_ring().class(1, Side::Upper, int(2), int(-2)).unwrap();
        assert_eq!(pulled, expected);
    }

    #[test]
    fn pushforward_scales_by_gamma_over_level_powers() {
        let cover = CoverContext::new(ctx_b(), 4).unwrap(); // gamma = 2N
        let up = cover.cover_ring();
        // xi~ has grade 1: pushes to (gamma / N) xi = 2 xi.
        let pushed_xi = cover.pushforward_from_cover(&up.xi()).unwrap();
        assert_eq!(pushed_xi, ctx_b().xi().scaled(&int(2)));
        // L~ pushes to L (no level power at grade 1 for the L part).
        let pushed_ell = cover.pushforward_from_cover(&up.ell()).unwrap();
        assert_eq!(pushed_ell, ctx_b().ell());
    }

    #[test]
    fn pushforward_after_pullback_is_multiplication_by_gamma() {
        let ctx = ctx_c();
        for gamma in [2u64, 4, 6] {
            let cover = CoverContext::new(ctx.clone(), gamma).unwrap();
            for grade in 0..=3u32 {
                let class = ctx
                    .class(grade, Side::Upper, rat(3, 7), if grade == 0 { int(0) } else { rat(-5, 2) })
                    .unwrap();
                let round = cover
                    .pushforward_from_cover(&cover.pullback_to_cover(&class).unwrap())
                    .unwrap();
                assert_eq!(round, class.scaled(&int(gamma as i64)));
            }
        }
    }

    #[test]
    fn cover_ring_has_level_one_and_scaled_degree() {
        let cover = CoverContext::new(ctx_b(), 6).unwrap();
        let up = cover.cover_ring();
        assert_eq!(up.level(), 1);
        assert_eq!(up.pardeg(), &int(9)); // 6 * 3/2
        // xi~^2 evaluates to the cover degree, xi~ L~ to 1.
        assert_eq!(up.xi().pow(2).unwrap().degree_of_top().unwrap(), int(9));
        assert_eq!(
            up.xi().multiply(&up.ell()).unwrap().degree_of_top().unwrap(),
            int(1)
        );
    }

    #[test]
    fn cover_degree_must_be_a_positive_multiple_of_the_level() {
        assert!(matches!(
            CoverContext::new(ctx_b(), 3),
            Err(Error::InadmissibleGamma { gamma: 3, smallest: 2 })
        ));
        assert!(CoverContext::new(ctx_b(), 0).is_err());
    }

    #[test]
    fn display_renders_sparse_polynomials() {
        let ctx = ctx_c();
        let c = ctx.class(2, Side::Upper, int(1), int(-3)).unwrap();
        assert_eq!(c.to_string(), "xi^2 - 3*xi*L");
        assert_eq!(ctx.ell().to_string(), "L");
        assert_eq!(ctx.one().to_string(), "1");
        assert_eq!(ctx.class(2, Side::Upper, int(0), int(0)).unwrap().to_string(), "0");
        assert_eq!(
            ctx.class(1, Side::Upper, rat(1, 2), int(1)).unwrap().to_string(),
            "1/2*xi + L"
        );
    }
}
