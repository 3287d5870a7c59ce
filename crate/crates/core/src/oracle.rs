//! Independent cross-check of the cone formulas through a Galois cover.
//!
//! On a suitable cover of the curve, a parabolic bundle of level `N` is
//! realized by an honest vector bundle whose numerical invariants are the
//! parabolic ones scaled by the cover degree `gamma`. Upstairs the classical
//! results apply directly: the nef cone of the projectivization is cut out
//! by the minimal filtration slope (Miyaoka's description), and the
//! pseudo-effective cones of cycle classes follow the classical recursive
//! description for unstable bundles. This module computes those cones
//! upstairs *without* consulting the downstairs slope-excess table, pushes
//! them down, and compares.

use num::{BigInt, Integer, One};

use crate::arith::{big_to_u64, int, Rat};
use crate::bundle::ParabolicBundleSpec;
use crate::cone::{eff_cone_lower, nef_cone_1, Cone2D};
use crate::error::{Error, Result};
use crate::ring::{CoverContext, NumericalClass, RingContext, Side};

/// Numerical data of the honest bundle living on a cover of degree `gamma`:
/// its rank, degree, and Harder-Narasimhan pieces, all integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbifoldBundleData {
    rank: u32,
    gamma: u64,
    degree: BigInt,
    pieces: Vec<(u32, BigInt)>,
}

impl OrbifoldBundleData {
    /// Assembles cover-side data from filtration pieces `(rank, degree)`
    /// with strictly increasing slopes. The total degree is the sum of the
    /// piece degrees.
    pub fn new(gamma: u64, pieces: Vec<(u32, BigInt)>) -> Result<OrbifoldBundleData> {
        if gamma == 0 {
            return Err(Error::InadmissibleGamma { gamma, smallest: 1 });
        }
        if pieces.is_empty() {
            return Err(Error::InvalidFiltration { detail: "HN data must be nonempty".into() });
        }
        if pieces.iter().any(|(r, _)| *r == 0) {
            return Err(Error::InvalidFiltration { detail: "HN piece of rank 0".into() });
        }
        let slope = |(r, d): &(u32, BigInt)| Rat::new(d.clone(), BigInt::from(*r));
        for pair in pieces.windows(2) {
            if slope(&pair[0]) >= slope(&pair[1]) {
                return Err(Error::InvalidFiltration {
                    detail: "HN slopes must be strictly increasing".into(),
                });
            }
        }
        let rank = pieces.iter().map(|(r, _)| r).sum();
        let degree = pieces.iter().map(|(_, d)| d).sum();
        Ok(OrbifoldBundleData { rank, gamma, degree, pieces })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn gamma(&self) -> u64 {
        self.gamma
    }

    pub fn degree(&self) -> &BigInt {
        &self.degree
    }

    pub fn pieces(&self) -> &[(u32, BigInt)] {
        &self.pieces
    }

    /// Slope of the `i`-th piece, `i` counted from 1.
    pub fn slope(&self, i: usize) -> Rat {
        let (r, d) = &self.pieces[i - 1];
        Rat::new(d.clone(), BigInt::from(*r))
    }

    /// The numerical ring upstairs: level 1 (the bundle is honest) and the
    /// integral cover degree.
    pub fn ring(&self) -> RingContext {
        RingContext::new(self.rank, 1, Rat::from_integer(self.degree.clone()))
    }
}

/// The smallest cover degree on which the bundle's numerical data becomes
/// integral: the least common multiple of the level and the denominators of
/// the filtration piece degrees. For a bundle split into line summands this
/// is the level itself.
pub fn smallest_admissible_gamma(spec: &ParabolicBundleSpec) -> Result<u64> {
    let hn = spec.resolve_hn()?;
    let mut acc = BigInt::from(spec.level()?);
    for piece in hn.pieces() {
        acc = acc.lcm(piece.degree.denom());
    }
    big_to_u64(&acc)
}

/// The default cover degrees used for cross-checking: the smallest
/// admissible degree and its first two proper multiples.
pub fn default_gammas(spec: &ParabolicBundleSpec) -> Result<Vec<u64>> {
    let m = smallest_admissible_gamma(spec)?;
    Ok(vec![m, 2 * m, 3 * m])
}

/// Scales the bundle's numerical data to a cover of degree `gamma`: the
/// rank is unchanged, every degree is multiplied by `gamma`, and the
/// filtration upstairs is the scaled filtration. Requires `gamma` to be a
/// multiple of the level that clears every piece-degree denominator.
pub fn lift(spec: &ParabolicBundleSpec, gamma: u64) -> Result<OrbifoldBundleData> {
    let hn = spec.resolve_hn()?;
    let smallest = smallest_admissible_gamma(spec)?;
    if gamma == 0 || !gamma.is_multiple_of(smallest) {
        return Err(Error::InadmissibleGamma { gamma, smallest });
    }
    let gamma_int = int(gamma as i64);
    let pieces = hn
        .pieces()
        .iter()
        .map(|p| {
            let scaled = &p.degree * &gamma_int;
            debug_assert!(scaled.denom().is_one(), "admissible degrees are integral");
            (p.rank, scaled.numer().clone())
        })
        .collect();
    OrbifoldBundleData::new(gamma, pieces)
}

/// The nef cone of divisor classes upstairs, from the minimal filtration
/// slope: `< xi~ - mu~_1 * L~ , L~ >`.
pub fn miyaoka_nef(orb: &OrbifoldBundleData) -> Result<Cone2D> {
    let ring = orb.ring();
    let gen1 = ring.class(1, Side::Upper, Rat::one(), -orb.slope(1))?;
    Cone2D::from_generators(gen1, ring.ell())
}

/// The cone of pseudo-effective dimension-`k` cycle classes upstairs,
/// computed by the classical recursive description:
///
/// * one filtration piece (semistable): `< (xi~ - mu~ L~)^(r-k) ,
///   xi~^(r-k-1) L~ >`;
/// * `k` at most the rank `r_1` of the minimal-slope quotient: the
///   non-trivial ray is `delta~ * (xi~ - mu~_1 L~)^(r_1 - k)`, where
///   `delta~ = xi~^(r - r_1) + (d~_1 - d~) xi~^(r - r_1 - 1) L~` is the
///   class of the projectivized minimal-slope quotient;
/// * `k > r_1`: recurse into the complementary sub-bundle (drop the first
///   piece, dimension shifts by `r_1`) and re-read the generators in the
///   ambient ring, monomial by monomial.
///
/// No slope-excess table is consulted: this is an independent route to the
/// same cones.
pub fn fulton_eff_lower(orb: &OrbifoldBundleData, k: u32) -> Result<Cone2D> {
    let r = orb.rank;
    if k == 0 || k >= r {
        return Err(Error::KOutOfRange { k, rank: r });
    }
    let ring = orb.ring();
    let fiber_gen = ring.monomial(r - k - 1, 1)?.cyclified();

    if orb.pieces.len() == 1 {
        let mu = orb.slope(1);
        let linear = ring.class(1, Side::Upper, Rat::one(), -mu)?;
        let gen1 = linear.pow(r - k)?;
        return Cone2D::from_generators(gen1.cyclified(), fiber_gen);
    }

    let (r1, d1) = orb.pieces[0].clone();
    if k <= r1 {
        let delta = ring.class(
            r - r1,
            Side::Upper,
            Rat::one(),
            Rat::from_integer(&d1 - &orb.degree),
        )?;
        let linear = ring.class(1, Side::Upper, Rat::one(), -orb.slope(1))?;
        let gen1 = delta.multiply(&linear.pow(r1 - k)?)?;
        return Cone2D::from_generators(gen1.cyclified(), fiber_gen);
    }

    // Recurse into the complementary sub-bundle of rank r - r_1 and degree
    // d~ - d~_1, whose filtration is the remaining pieces.
    let rest = OrbifoldBundleData::new(orb.gamma, orb.pieces[1..].to_vec())?;
    let inner = fulton_eff_lower(&rest, k - r1)?;
    // The inner generators have polynomial grade (r - r_1) - (k - r_1) =
    // r - k; re-reading the same monomials in the ambient ring lands on the
    // generators there.
    let reread = |gen: &NumericalClass| -> Result<NumericalClass> {
        ring.class(gen.grade(), gen.side(), gen.xi_coeff().clone(), gen.ell_coeff().clone())
    };
    let gens = inner.generators();
    Cone2D::from_generators(reread(gens[0])?, reread(gens[1])?)
}

/// One cover degree's worth of comparison: the pushed-down pseudo-effective
/// cone against the closed form, and nef consistency through pullback.
#[derive(Debug, Clone)]
pub struct GammaCheck {
    pub gamma: u64,
    /// The pushforward of the cover-side pseudo-effective cone equals the
    /// closed-form cone downstairs.
    pub eff_match: bool,
    /// The pullbacks of the downstairs nef generators are nef upstairs, and
    /// the non-trivial ray pulls back onto the cover nef boundary ray.
    pub nef_consistent: bool,
    /// Closed-form generators downstairs (canonical).
    pub expected_gens: [NumericalClass; 2],
    /// Generators pushed down from the cover (canonical).
    pub pushed_gens: [NumericalClass; 2],
}

impl GammaCheck {
    pub fn pass(&self) -> bool {
        self.eff_match && self.nef_consistent
    }
}

/// Side-by-side comparison of the downstairs cone formulas against the
/// cover-side classical ones, for one dimension `k` and several cover
/// degrees.
#[derive(Debug, Clone)]
pub struct CrossCheckReport {
    pub k: u32,
    pub checks: Vec<GammaCheck>,
}

impl CrossCheckReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(GammaCheck::pass)
    }
}

/// Runs the cover cross-check for dimension `k` over the given cover
/// degrees. Every degree must be admissible (otherwise the lift errors):
/// the caller chooses the degrees, typically via [`default_gammas`].
pub fn cross_check(
    spec: &ParabolicBundleSpec,
    k: u32,
    gammas: &[u64],
) -> Result<CrossCheckReport> {
    let eff = eff_cone_lower(spec, k)?;
    let nef = nef_cone_1(spec)?;
    let base = RingContext::for_bundle(spec)?;
    let mut checks = Vec::with_capacity(gammas.len());
    for &gamma in gammas {
        let orb = lift(spec, gamma)?;
        let cover = CoverContext::new(base.clone(), gamma)?;
        debug_assert_eq!(cover.cover_ring(), orb.ring(), "the two cover routes agree");

        let upstairs = fulton_eff_lower(&orb, k)?;
        let up_gens = upstairs.generators();
        let pushed_cone = Cone2D::from_generators(
            cover.pushforward_from_cover(up_gens[0])?,
            cover.pushforward_from_cover(up_gens[1])?,
        )?;
        let eff_match = pushed_cone.same_cone_as(&eff)?;

        let upstairs_nef = miyaoka_nef(&orb)?;
        let nef_gens = nef.generators();
        let pulled_main = cover.pullback_to_cover(nef_gens[0])?;
        let pulled_fiber = cover.pullback_to_cover(nef_gens[1])?;
        let nef_consistent = upstairs_nef.contains(&pulled_main)?
            && upstairs_nef.contains(&pulled_fiber)?
            && pulled_main.canonicalized() == upstairs_nef.generators()[0].canonicalized();

        let clone_pair = |cone: &Cone2D| -> [NumericalClass; 2] {
            let g = cone.generators();
            [g[0].clone(), g[1].clone()]
        };
        checks.push(GammaCheck {
            gamma,
            eff_match,
            nef_consistent,
            expected_gens: clone_pair(&eff),
            pushed_gens: clone_pair(&pushed_cone),
        });
    }
    Ok(CrossCheckReport { k, checks })
}
