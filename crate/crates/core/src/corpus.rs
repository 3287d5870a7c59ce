//! Deterministic random sample data at desk scale.
//!
//! These generators produce small, always-valid bundle descriptions (ranks
//! up to 8, weight denominators up to 12, a handful of marked points) and
//! random ring elements. They are used by the property and acceptance
//! suites; seeding the RNG makes every corpus reproducible.

use num::Zero;
use rand::Rng;

use crate::arith::{int, rat, Rat};
use crate::bundle::{LineSummand, ParabolicBundleSpec, ParabolicPoint};
use crate::ring::{NumericalClass, RingContext, Side};

/// Size limits for generated samples.
#[derive(Debug, Clone)]
pub struct SampleLimits {
    pub max_rank: u32,
    pub max_points: usize,
    pub max_denominator: i64,
    pub degree_bound: i64,
}

impl Default for SampleLimits {
    fn default() -> Self {
        SampleLimits { max_rank: 8, max_points: 3, max_denominator: 12, degree_bound: 3 }
    }
}

fn random_denominator(rng: &mut impl Rng, limits: &SampleLimits) -> i64 {
    rng.gen_range(1..=limits.max_denominator)
}

/// A composition of `total` into `parts` non-negative integers, each at most
/// `cap`. Requires `total <= parts * cap`.
fn bounded_composition(rng: &mut impl Rng, total: i64, parts: usize, cap: i64) -> Vec<i64> {
    debug_assert!(total >= 0 && total <= parts as i64 * cap);
    let mut out = Vec::with_capacity(parts);
    let mut remaining = total;
    for i in 0..parts {
        let slots_left = (parts - 1 - i) as i64;
        let lo = (remaining - slots_left * cap).max(0);
        let hi = remaining.min(cap);
        let take = rng.gen_range(lo..=hi);
        out.push(take);
        remaining -= take;
    }
    debug_assert_eq!(remaining, 0);
    out
}

/// Groups a list of summand weights (one column per point) into the
/// point-wise weight/multiplicity lists and assembles the bundle.
fn assemble_split(
    rank: u32,
    summands: Vec<LineSummand>,
    point_count: usize,
) -> ParabolicBundleSpec {
    let degree: i64 = summands.iter().map(|s| s.degree).sum();
    let mut points = Vec::with_capacity(point_count);
    for idx in 0..point_count {
        let mut column: Vec<Rat> = summands.iter().map(|s| s.weights[idx].clone()).collect();
        column.sort();
        let mut weights: Vec<(Rat, u32)> = Vec::new();
        for w in column {
            match weights.last_mut() {
                Some((alpha, mult)) if *alpha == w => *mult += 1,
                _ => weights.push((w, 1)),
            }
        }
        points.push(ParabolicPoint::new(format!("x{}", idx + 1), weights).expect("valid point"));
    }
    ParabolicBundleSpec::new(rank, degree, points, Some(summands), None)
        .expect("generated split data is consistent by construction")
}

/// A random bundle split into line summands, with arbitrary slopes.
pub fn sample_split_spec(rng: &mut impl Rng, limits: &SampleLimits) -> ParabolicBundleSpec {
    let rank = rng.gen_range(1..=limits.max_rank);
    let point_count = rng.gen_range(0..=limits.max_points);
    let dens: Vec<i64> = (0..point_count).map(|_| random_denominator(rng, limits)).collect();
    let summands = (0..rank)
        .map(|_| {
            let degree = rng.gen_range(-limits.degree_bound..=limits.degree_bound);
            let weights = dens.iter().map(|&den| rat(rng.gen_range(0..den), den)).collect();
            LineSummand::new(degree, weights)
        })
        .collect();
    assemble_split(rank, summands, point_count)
}

/// A random bundle carrying only point data (no filtration refinement).
/// Suitable for exercising degree, slope and level computations.
pub fn sample_pointset_spec(rng: &mut impl Rng, limits: &SampleLimits) -> ParabolicBundleSpec {
    let rank = rng.gen_range(1..=limits.max_rank);
    let degree = rng.gen_range(-limits.degree_bound..=limits.degree_bound);
    let point_count = rng.gen_range(0..=limits.max_points);
    let mut points = Vec::with_capacity(point_count);
    for idx in 0..point_count {
        let den = random_denominator(rng, limits);
        let distinct = rng.gen_range(1..=(rank as i64).min(den)) as usize;
        // Pick `distinct` strictly increasing numerators below `den`.
        let mut numerators: Vec<i64> = Vec::with_capacity(distinct);
        let mut next = rng.gen_range(0..=(den - distinct as i64));
        for i in 0..distinct {
            numerators.push(next);
            if i + 1 < distinct {
                next = rng.gen_range(next + 1..=(den - (distinct - 1 - i) as i64));
            }
        }
        // Positive multiplicities summing to the rank.
        let extra = bounded_composition(rng, i64::from(rank) - distinct as i64, distinct, i64::from(rank));
        let weights = numerators
            .into_iter()
            .zip(extra)
            .map(|(num, e)| (rat(num, den), 1 + e as u32))
            .collect();
        points.push(ParabolicPoint::new(format!("x{}", idx + 1), weights).expect("valid point"));
    }
    ParabolicBundleSpec::new(rank, degree, points, None, None)
        .expect("generated point data is consistent by construction")
}

/// A random bundle carrying explicit filtration data: a split sample whose
/// derived filtration is re-attached as explicit data (the summands are
/// dropped). Exercises the explicit-data code paths, including fractional
/// piece degrees.
pub fn sample_hn_spec(rng: &mut impl Rng, limits: &SampleLimits) -> ParabolicBundleSpec {
    let split = sample_split_spec(rng, limits);
    let hn = split.resolve_hn().expect("split samples always resolve");
    ParabolicBundleSpec::new(
        split.rank(),
        split.degree(),
        split.points().to_vec(),
        None,
        Some(hn),
    )
    .expect("derived filtration data is consistent")
}

/// A random semistable bundle split into line summands: all summands share
/// one parabolic slope (degrees and weights still vary when marked points
/// are present).
pub fn sample_semistable_split(rng: &mut impl Rng, limits: &SampleLimits) -> ParabolicBundleSpec {
    let rank = rng.gen_range(1..=limits.max_rank);
    let point_count = rng.gen_range(0..=limits.max_points);
    if point_count == 0 {
        let g = rng.gen_range(-limits.degree_bound..=limits.degree_bound);
        let summands = (0..rank).map(|_| LineSummand::new(g, vec![])).collect();
        return assemble_split(rank, summands, 0);
    }
    let den = random_denominator(rng, limits);
    let cap = den - 1; // largest numerator of a weight strictly below 1
    let budget_cap = point_count as i64 * cap;
    let g0 = rng.gen_range(-limits.degree_bound..=limits.degree_bound);
    let target_m = rng.gen_range(0..=budget_cap);
    // Common slope g0 + target_m / den; each summand trades integer degree
    // against weight budget within the representable window.
    let summands = (0..rank)
        .map(|_| {
            // Optionally trade one unit of underlying degree for `den` units
            // of weight budget; the parabolic slope stays fixed.
            let dip = if target_m + den <= budget_cap && rng.gen_bool(0.4) { 1 } else { 0 };
            let degree = g0 - dip;
            let m = target_m + dip * den;
            let parts = bounded_composition(rng, m, point_count, cap);
            LineSummand::new(degree, parts.into_iter().map(|p| rat(p, den)).collect())
        })
        .collect();
    assemble_split(rank, summands, point_count)
}

/// A random unstable bundle (filtration length at least 2) split into line
/// summands. Rank is at least 2.
pub fn sample_unstable_split(rng: &mut impl Rng, limits: &SampleLimits) -> ParabolicBundleSpec {
    for _ in 0..64 {
        let candidate = sample_split_spec(rng, limits);
        if candidate.rank() >= 2
            && candidate.resolve_hn().expect("split resolves").length() >= 2
        {
            return candidate;
        }
    }
    // Random search virtually never fails, but stay total: distinct integer
    // degrees with a shared zero weight give filtration length = rank.
    let rank = rng.gen_range(2..=limits.max_rank.max(2));
    let point_count = rng.gen_range(0..=limits.max_points);
    let summands = (0..rank)
        .map(|s| LineSummand::new(s as i64, vec![Rat::zero(); point_count]))
        .collect();
    assemble_split(rank, summands, point_count)
}

/// A random ring context at desk scale: small rank, a level assembled from
/// small denominators, and a small rational degree.
pub fn sample_ring_context(rng: &mut impl Rng, limits: &SampleLimits) -> RingContext {
    let rank = rng.gen_range(1..=limits.max_rank);
    let level = rng.gen_range(1..=limits.max_denominator) as u64
        * rng.gen_range(1..=limits.max_denominator) as u64;
    let pardeg = rat(rng.gen_range(-20..=20), rng.gen_range(1..=limits.max_denominator));
    RingContext::new(rank, level, pardeg)
}

/// A random homogeneous class of the given grade and side, with small
/// rational coefficients. Never the zero class.
pub fn sample_class(
    rng: &mut impl Rng,
    ctx: &RingContext,
    grade: u32,
    side: Side,
) -> NumericalClass {
    let mut coeff = || rat(rng.gen_range(-9..=9), rng.gen_range(1..=6));
    let xi = coeff();
    let ell = if grade == 0 { int(0) } else { coeff() };
    let (xi, ell) = if xi.is_zero() && ell.is_zero() { (int(1), ell) } else { (xi, ell) };
    ctx.class(grade, side, xi, ell).expect("sampled class is representable")
}
