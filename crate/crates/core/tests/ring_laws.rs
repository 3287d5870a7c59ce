//! Algebraic laws of the numerical ring and of the cover maps, checked on
//! randomized inputs: ring axioms, fiber-class nilpotence, the intersection
//! pairing matrix and its nondegeneracy, pullback/pushforward composition,
//! the projection formula, and duality as an involution.

use num::{Signed, Zero};
use proptest::prelude::*;

use parabolic_cones::arith::{int, rat, rat_pow, Rat};
use parabolic_cones::cone::Cone2D;
use parabolic_cones::ring::{CoverContext, NumericalClass, RingContext, Side};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

prop_compose! {
    fn arb_ctx()(rank in 1u32..=6, level in 1u64..=12, n in -9i64..=9, d in 1i64..=9)
        -> RingContext
    {
        RingContext::new(rank, level, rat(n, d))
    }
}

// A context of rank 6 with three upper classes whose grades sum to at most
// the rank, so that all pairwise and triple products are representable.
prop_compose! {
    fn ctx_and_three_classes()(
        level in 1u64..=12,
        n in -9i64..=9,
        d in 1i64..=9,
        grades in (0u32..=2, 0u32..=2, 0u32..=2),
        coeffs in prop::collection::vec(small_rat(), 6),
    ) -> (RingContext, NumericalClass, NumericalClass, NumericalClass) {
        let ctx = RingContext::new(6, level, rat(n, d));
        let class = |g: u32, a: &Rat, b: &Rat| {
            let ell = if g == 0 { int(0) } else { b.clone() };
            ctx.class(g, Side::Upper, a.clone(), ell).expect("grade fits rank 6")
        };
        let x = class(grades.0, &coeffs[0], &coeffs[1]);
        let y = class(grades.1, &coeffs[2], &coeffs[3]);
        let z = class(grades.2, &coeffs[4], &coeffs[5]);
        (ctx, x, y, z)
    }
}

proptest! {
    #[test]
    fn product_is_commutative((_, x, y, _) in ctx_and_three_classes()) {
        prop_assert_eq!(x.multiply(&y).unwrap(), y.multiply(&x).unwrap());
    }

    #[test]
    fn product_is_associative((_, x, y, z) in ctx_and_three_classes()) {
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_is_bilinear((ctx, x, y, z) in ctx_and_three_classes(), c in small_rat()) {
        // Rebuild y at x's grade so the sum is defined.
        let y = ctx.class(
            x.grade(),
            Side::Upper,
            y.xi_coeff().clone(),
            if x.grade() == 0 { int(0) } else { y.ell_coeff().clone() },
        ).unwrap();
        let left = x.add(&y).unwrap().scaled(&c).multiply(&z).unwrap();
        let right = x.multiply(&z).unwrap().scaled(&c)
            .add(&y.multiply(&z).unwrap().scaled(&c)).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn one_is_the_unit((_, x, _, _) in ctx_and_three_classes()) {
        prop_assert_eq!(x.ctx().one().multiply(&x).unwrap(), x);
    }

    /// The fiber class is nilpotent: any product carrying two fiber factors
    /// vanishes identically.
    #[test]
    fn fiber_class_squares_to_zero(ctx in arb_ctx(), a in small_rat(), b in small_rat()) {
        prop_assume!(ctx.rank() >= 2);
        let ell_part = |c: &Rat| ctx.class(1, Side::Upper, int(0), c.clone()).unwrap();
        let prod = ell_part(&a).multiply(&ell_part(&b)).unwrap();
        prop_assert!(prod.is_zero());
    }

    /// In every middle grade the pairing matrix in the monomial bases is
    /// `[[N^r d, N^(r-1)], [N^(r-1), 0]]`, with determinant `-N^(2r-2)`,
    /// which never vanishes: the pairing is perfect.
    #[test]
    fn pairing_matrix_and_nondegeneracy(ctx in arb_ctx()) {
        prop_assume!(ctx.rank() >= 2);
        let r = ctx.rank();
        let n = ctx.level_rat();
        let p = rat_pow(&n, r) * ctx.pardeg();
        let q = rat_pow(&n, r - 1);
        for k in 1..r {
            let up_xi = ctx.monomial(k, 0).unwrap();
            let up_ell = ctx.monomial(k - 1, 1).unwrap();
            let lo_xi = ctx.monomial(r - k, 0).unwrap().cyclified();
            let lo_ell = ctx.monomial(r - k - 1, 1).unwrap().cyclified();
            prop_assert_eq!(up_xi.pair(&lo_xi).unwrap(), p.clone());
            prop_assert_eq!(up_xi.pair(&lo_ell).unwrap(), q.clone());
            prop_assert_eq!(up_ell.pair(&lo_xi).unwrap(), q.clone());
            prop_assert_eq!(up_ell.pair(&lo_ell).unwrap(), int(0));
            let det = &p * int(0) - &q * &q;
            prop_assert!(!det.is_zero());
        }
    }

    /// Pushing a pulled-back class straight back down multiplies it by the
    /// cover degree, on every grade and side, for gamma in {N, 2N, 3N}.
    #[test]
    fn pushforward_after_pullback_scales_by_gamma(
        ctx in arb_ctx(),
        mult in 1u64..=3,
        a in small_rat(),
        b in small_rat(),
        lower in proptest::bool::ANY,
    ) {
        let gamma = ctx.level() * mult;
        let cover = CoverContext::new(ctx.clone(), gamma).unwrap();
        for grade in 0..=ctx.rank() {
            let side = if lower { Side::Lower } else { Side::Upper };
            let ell = if grade == 0 { int(0) } else { b.clone() };
            let class = ctx.class(grade, side, a.clone(), ell).unwrap();
            let round = cover
                .pushforward_from_cover(&cover.pullback_to_cover(&class).unwrap())
                .unwrap();
            prop_assert_eq!(round, class.scaled(&int(gamma as i64)));
        }
    }

    /// Projection formula: pushing down `pullback(P) * alpha` equals
    /// `P * pushforward(alpha)`.
    #[test]
    fn projection_formula(
        ctx in arb_ctx(),
        mult in 1u64..=3,
        grades in (0u32..=3, 0u32..=3),
        coeffs in prop::collection::vec(small_rat(), 4),
        lower in proptest::bool::ANY,
    ) {
        let (ga, gb) = grades;
        prop_assume!(ga + gb <= ctx.rank());
        let cover = CoverContext::new(ctx.clone(), ctx.level() * mult).unwrap();
        let up_ring = cover.cover_ring();
        let p = ctx.class(
            ga,
            Side::Upper,
            coeffs[0].clone(),
            if ga == 0 { int(0) } else { coeffs[1].clone() },
        ).unwrap();
        let side = if lower { Side::Lower } else { Side::Upper };
        let alpha = up_ring.class(
            gb,
            side,
            coeffs[2].clone(),
            if gb == 0 { int(0) } else { coeffs[3].clone() },
        ).unwrap();
        let left = cover
            .pushforward_from_cover(&cover.pullback_to_cover(&p).unwrap().multiply(&alpha).unwrap())
            .unwrap();
        let right = p.multiply(&cover.pushforward_from_cover(&alpha).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    /// Duality is an involution on full-dimensional cones in middle grades,
    /// no matter which rays span them.
    #[test]
    fn dual_of_dual_returns_the_cone(
        ctx in arb_ctx(),
        grade_pick in 0u32..=5,
        coeffs in prop::collection::vec(small_rat(), 4),
        lower in proptest::bool::ANY,
    ) {
        prop_assume!(ctx.rank() >= 2);
        let grade = 1 + grade_pick % (ctx.rank() - 1);
        let side = if lower { Side::Lower } else { Side::Upper };
        let a = ctx.class(grade, side, coeffs[0].clone(), coeffs[1].clone()).unwrap();
        let b = ctx.class(grade, side, coeffs[2].clone(), coeffs[3].clone()).unwrap();
        let cross = a.xi_coeff() * b.ell_coeff() - a.ell_coeff() * b.xi_coeff();
        prop_assume!(!cross.is_zero());
        let cone = Cone2D::from_generators(a, b).unwrap();
        let dual = cone.dual().unwrap();
        prop_assert_eq!(dual.side(), cone.side().flipped());
        prop_assert_eq!(dual.grade(), ctx.rank() - grade);
        prop_assert!(dual.dual().unwrap().same_cone_as(&cone).unwrap());
    }

    /// Every dual generator pairs non-negatively against the whole source
    /// cone, and each one annihilates exactly one source generator.
    #[test]
    fn dual_generators_support_the_cone(
        ctx in arb_ctx(),
        coeffs in prop::collection::vec(small_rat(), 4),
    ) {
        prop_assume!(ctx.rank() >= 2);
        let grade = 1;
        let a = ctx.class(grade, Side::Lower, coeffs[0].clone(), coeffs[1].clone()).unwrap();
        let b = ctx.class(grade, Side::Lower, coeffs[2].clone(), coeffs[3].clone()).unwrap();
        let cross = a.xi_coeff() * b.ell_coeff() - a.ell_coeff() * b.xi_coeff();
        prop_assume!(!cross.is_zero());
        let cone = Cone2D::from_generators(a, b).unwrap();
        let dual = cone.dual().unwrap();
        let mut zero_pairings = 0;
        for d in dual.generators() {
            for g in cone.generators() {
                let v = d.pair(g).unwrap();
                prop_assert!(!v.is_negative(), "dual ray pairs negatively");
                if v.is_zero() {
                    zero_pairings += 1;
                }
            }
        }
        prop_assert_eq!(zero_pairings, 2);
    }
}
