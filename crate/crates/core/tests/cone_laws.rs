//! Structural laws tying the cones to each other and to the filtration data,
//! exercised over seeded random corpora: the two parabolic-degree formulas,
//! duality between effective and nef cones, cyclification, the collapse of
//! the top-grade nef cone onto the divisor nef cone, boundary orthogonality,
//! semistability detection, and the generator shift into a sub-bundle.
//!
//! Seeds are fixed so every run sees the same corpus.

use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use parabolic_cones::arith::{int, rat, Rat};
use parabolic_cones::bundle::{LineSummand, ParabolicBundleSpec, ParabolicPoint};
use parabolic_cones::cone::{
    eff_cone_lower, eff_cone_upper, is_k_homogeneous, is_semistable, is_semistable_by_cones,
    is_semistable_by_hn, nef_cone_1, nef_cone_upper, nu_table, Cone2D,
};
use parabolic_cones::corpus::{
    sample_hn_spec, sample_pointset_spec, sample_semistable_split, sample_split_spec,
    sample_unstable_split, SampleLimits,
};
use parabolic_cones::ring::{RingContext, Side};

/// Bundles from all three samplers; those from the point-set sampler carry
/// no filtration data and only support degree-level questions.
fn mixed_corpus(seed: u64, per_sampler: usize) -> Vec<ParabolicBundleSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limits = SampleLimits::default();
    let mut specs = Vec::new();
    for _ in 0..per_sampler {
        specs.push(sample_split_spec(&mut rng, &limits));
        specs.push(sample_pointset_spec(&mut rng, &limits));
        specs.push(sample_hn_spec(&mut rng, &limits));
    }
    specs
}

/// Bundles whose filtration is always resolvable: split and explicit-data
/// samplers only.
fn filtered_corpus(seed: u64, per_sampler: usize) -> Vec<ParabolicBundleSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limits = SampleLimits::default();
    let mut specs = Vec::new();
    for _ in 0..per_sampler {
        specs.push(sample_split_spec(&mut rng, &limits));
        specs.push(sample_hn_spec(&mut rng, &limits));
    }
    specs
}

/// Rebuilds a standalone bundle from a subset of the summands of a split
/// bundle, keeping the marked points (weights regrouped per point).
fn spec_from_summands(labels: &[String], summands: Vec<LineSummand>) -> ParabolicBundleSpec {
    let rank = u32::try_from(summands.len()).unwrap();
    let degree: i64 = summands.iter().map(|s| s.degree).sum();
    let points = labels
        .iter()
        .enumerate()
        .map(|(idx, label)| {
            let mut column: Vec<Rat> =
                summands.iter().map(|s| s.weights[idx].clone()).collect();
            column.sort();
            let mut grouped: Vec<(Rat, u32)> = Vec::new();
            for w in column {
                match grouped.last_mut() {
                    Some((prev, mult)) if *prev == w => *mult += 1,
                    _ => grouped.push((w, 1)),
                }
            }
            ParabolicPoint::new(label.clone(), grouped).unwrap()
        })
        .collect();
    ParabolicBundleSpec::new(rank, degree, points, Some(summands), None).unwrap()
}

#[test]
fn the_two_degree_formulas_agree_on_random_bundles() {
    for spec in mixed_corpus(0x00d3_67ee, 100) {
        assert_eq!(
            spec.parabolic_degree(),
            spec.parabolic_degree_integral(),
            "finite sum and integral form disagree for rank {} with {} points",
            spec.rank(),
            spec.points().len(),
        );
        if spec.split().is_some() || spec.explicit_hn().is_some() || spec.rank() == 1 {
            let hn = spec.resolve_hn().unwrap();
            assert_eq!(hn.total_rank(), spec.rank());
            assert_eq!(hn.total_degree(), spec.parabolic_degree());
        }
    }
}

#[test]
fn nu_table_covers_every_middle_dimension_once() {
    for spec in filtered_corpus(0x0070_ab1e, 40) {
        if spec.rank() < 2 {
            continue;
        }
        let table = nu_table(&spec.resolve_hn().unwrap(), spec.level().unwrap()).unwrap();
        assert_eq!(table.values().len() as u32, spec.rank() - 1);
        for k in 1..spec.rank() {
            table.nu(k).unwrap();
        }
    }
}

#[test]
fn effective_and_nef_cones_are_dual_in_every_dimension() {
    for spec in filtered_corpus(0x0d0a_117e, 40) {
        let r = spec.rank();
        for k in 1..r {
            let eff = eff_cone_lower(&spec, k).unwrap();
            let nef = nef_cone_upper(&spec, k).unwrap();
            assert!(
                eff.dual().unwrap().same_cone_as(&nef).unwrap(),
                "dual of the dimension-{k} effective cone is not the nef cone (rank {r})",
            );
            assert!(nef.dual().unwrap().same_cone_as(&eff).unwrap());
        }
    }
}

#[test]
fn upper_effective_cone_is_the_cyclified_lower_one() {
    for spec in filtered_corpus(0x51de_f119, 40) {
        let r = spec.rank();
        for k in 1..r {
            let upper = eff_cone_upper(&spec, k).unwrap();
            let lower = eff_cone_lower(&spec, r - k).unwrap();
            let gens = lower.generators();
            let flipped =
                Cone2D::from_generators(gens[0].cyclified(), gens[1].cyclified()).unwrap();
            assert!(flipped.same_cone_as(&upper).unwrap());
        }
    }
}

#[test]
fn dimension_one_nef_cone_collapses_to_the_divisor_cone() {
    for spec in filtered_corpus(0xc011_a25e, 60) {
        if spec.rank() < 2 {
            continue;
        }
        let from_table = nef_cone_upper(&spec, 1).unwrap();
        let divisor = nef_cone_1(&spec).unwrap();
        assert!(from_table.same_cone_as(&divisor).unwrap());
    }
}

#[test]
fn cone_boundaries_pair_orthogonally() {
    for spec in filtered_corpus(0x0b0d_a275, 30) {
        let r = spec.rank();
        for k in 1..r {
            let nef = nef_cone_upper(&spec, k).unwrap();
            let eff = eff_cone_lower(&spec, k).unwrap();
            let mut zeros = 0;
            for n in nef.generators() {
                for e in eff.generators() {
                    let v = n.pair(e).unwrap();
                    assert!(!v.is_negative(), "nef ray pairs negatively with effective ray");
                    if v.is_zero() {
                        zeros += 1;
                    }
                }
            }
            assert_eq!(zeros, 2, "each nef ray must annihilate exactly one effective ray");
        }
    }
}

#[test]
fn homogeneity_holds_in_every_dimension_exactly_for_semistable_bundles() {
    for spec in filtered_corpus(0x0610_d00d, 40) {
        let all_homogeneous =
            (1..spec.rank()).all(|k| is_k_homogeneous(&spec, k).unwrap());
        // Rank-one bundles have no middle dimensions, so the conjunction is
        // vacuously true, matching their semistability.
        assert_eq!(all_homogeneous, is_semistable(&spec).unwrap());
    }
}

#[test]
fn random_semistable_bundles_are_detected_by_both_routes() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e31_57ab);
    let limits = SampleLimits::default();
    for _ in 0..100 {
        let spec = sample_semistable_split(&mut rng, &limits);
        assert!(is_semistable_by_hn(&spec).unwrap());
        assert!(is_semistable_by_cones(&spec).unwrap());
        assert!(is_semistable(&spec).unwrap());
    }
}

#[test]
fn random_unstable_bundles_are_detected_by_both_routes() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0075_7ab1);
    let limits = SampleLimits::default();
    for _ in 0..100 {
        let spec = sample_unstable_split(&mut rng, &limits);
        assert!(!is_semistable_by_hn(&spec).unwrap());
        assert!(!is_semistable_by_cones(&spec).unwrap());
        assert!(!is_semistable(&spec).unwrap());
    }
}

/// Builds a split bundle with exactly two slope blocks over one marked
/// point: block `i` repeats a line of integer degree `e_i` and weight `f_i`,
/// with the block slopes strictly ordered. The two weight denominators are
/// drawn independently, so the maximal-slope block frequently has a strictly
/// smaller level than the whole bundle.
fn two_block_single_point_split(rng: &mut ChaCha8Rng) -> ParabolicBundleSpec {
    loop {
        let r1 = rng.gen_range(1..=3u32);
        let r2 = rng.gen_range(2..=4u32);
        let den1 = rng.gen_range(1..=6i64);
        let den2 = rng.gen_range(1..=6i64);
        let f1 = rat(rng.gen_range(0..den1), den1);
        let f2 = rat(rng.gen_range(0..den2), den2);
        let e1 = rng.gen_range(-2..=2i64);
        let e2 = rng.gen_range(-2..=2i64);
        if int(e1) + &f1 >= int(e2) + &f2 {
            continue;
        }
        let weights = if f1 == f2 {
            vec![(f1.clone(), r1 + r2)]
        } else if f1 < f2 {
            vec![(f1.clone(), r1), (f2.clone(), r2)]
        } else {
            vec![(f2.clone(), r2), (f1.clone(), r1)]
        };
        let point = ParabolicPoint::new("p", weights).unwrap();
        let summands: Vec<LineSummand> = (0..r1)
            .map(|_| LineSummand::new(e1, vec![f1.clone()]))
            .chain((0..r2).map(|_| LineSummand::new(e2, vec![f2.clone()])))
            .collect();
        let degree = i64::from(r1) * e1 + i64::from(r2) * e2;
        return ParabolicBundleSpec::new(r1 + r2, degree, vec![point], Some(summands), None)
            .unwrap();
    }
}

/// For a two-step filtration the effective cones past the first block are
/// carried by the maximal-slope sub-bundle: its own effective generators map
/// onto the big ones once the fiber coefficient is rescaled by the ratio of
/// the two levels.
#[test]
fn effective_cones_past_the_first_block_come_from_the_sub_bundle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5b1f_7001);
    let limits = SampleLimits::default();
    let mut candidates: Vec<ParabolicBundleSpec> = Vec::new();
    for _ in 0..400 {
        let spec = sample_split_spec(&mut rng, &limits);
        let hn = spec.resolve_hn().unwrap();
        if hn.length() == 2 && hn.pieces()[1].rank >= 2 {
            candidates.push(spec);
        }
    }
    assert!(
        candidates.len() >= 3,
        "general corpus produced only {} two-block bundles",
        candidates.len()
    );
    for _ in 0..120 {
        candidates.push(two_block_single_point_split(&mut rng));
    }

    let mut unequal_levels = 0;
    for spec in &candidates {
        let hn = spec.resolve_hn().unwrap();
        let top_slope = hn.slope(2);
        let labels: Vec<String> =
            spec.points().iter().map(|p| p.label().to_string()).collect();
        let sub_summands: Vec<LineSummand> = spec
            .split()
            .unwrap()
            .iter()
            .filter(|s| s.parabolic_degree() == top_slope)
            .cloned()
            .collect();
        assert_eq!(sub_summands.len() as u32, hn.pieces()[1].rank);
        let sub = spec_from_summands(&labels, sub_summands);

        let big_level = spec.level().unwrap();
        let sub_level = sub.level().unwrap();
        assert_eq!(
            big_level % sub_level,
            0,
            "the sub-bundle level must divide the ambient level"
        );
        if sub_level != big_level {
            unequal_levels += 1;
        }
        let level_ratio = rat(big_level as i64, sub_level as i64);

        let big_ctx = RingContext::for_bundle(spec).unwrap();
        let r1 = hn.pieces()[0].rank;
        let r2 = hn.pieces()[1].rank;
        for j in 1..r2 {
            let sub_cone = eff_cone_lower(&sub, j).unwrap();
            let mapped = {
                let gens = sub_cone.generators();
                let image = |g: &parabolic_cones::ring::NumericalClass| {
                    big_ctx
                        .class(
                            g.grade(),
                            Side::Lower,
                            g.xi_coeff().clone(),
                            g.ell_coeff() * &level_ratio,
                        )
                        .unwrap()
                };
                Cone2D::from_generators(image(gens[0]), image(gens[1])).unwrap()
            };
            let big_cone = eff_cone_lower(spec, r1 + j).unwrap();
            assert!(
                mapped.same_cone_as(&big_cone).unwrap(),
                "mapped sub-bundle cone disagrees in dimension {} (ranks {}+{})",
                r1 + j,
                r1,
                r2,
            );
        }
    }
    assert!(
        unequal_levels >= 10,
        "only {unequal_levels} bundles exercised a sub-bundle with a strictly smaller level"
    );
}

/// Fixed instance of the sub-bundle shift where the levels genuinely differ:
/// weights 1/3, 1/2, 1/2 at one point give ambient level 6 while the
/// maximal-slope sub-bundle has level 2.
#[test]
fn sub_bundle_shift_with_level_six_over_level_two() {
    let point = |weights: Vec<(Rat, u32)>| ParabolicPoint::new("p", weights).unwrap();
    let spec = ParabolicBundleSpec::new(
        3,
        0,
        vec![point(vec![(rat(1, 3), 1), (rat(1, 2), 2)])],
        Some(vec![
            LineSummand::new(0, vec![rat(1, 3)]),
            LineSummand::new(0, vec![rat(1, 2)]),
            LineSummand::new(0, vec![rat(1, 2)]),
        ]),
        None,
    )
    .unwrap();
    assert_eq!(spec.level().unwrap(), 6);

    let sub = ParabolicBundleSpec::new(
        2,
        0,
        vec![point(vec![(rat(1, 2), 2)])],
        Some(vec![
            LineSummand::new(0, vec![rat(1, 2)]),
            LineSummand::new(0, vec![rat(1, 2)]),
        ]),
        None,
    )
    .unwrap();
    assert_eq!(sub.level().unwrap(), 2);

    // Sub-bundle: nu'_1 = (1 * 1/2 - 1) * 2 = -1.
    let sub_cone = eff_cone_lower(&sub, 1).unwrap();
    let sub_gens = sub_cone.generators();
    assert_eq!(sub_gens[0].xi_coeff(), &int(1));
    assert_eq!(sub_gens[0].ell_coeff(), &int(-1));

    // Ambient: nu_2 = (1 * 1/2 - 1) * 6 = -3 = -1 * (6 / 2).
    let big_cone = eff_cone_lower(&spec, 2).unwrap();
    let big_gens = big_cone.generators();
    assert_eq!(big_gens[0].xi_coeff(), &int(1));
    assert_eq!(big_gens[0].ell_coeff(), &int(-3));
    assert_eq!(big_gens[1].xi_coeff(), &int(0));
    assert_eq!(big_gens[1].ell_coeff(), &int(1));
}
