//! Numerical data of a parabolic vector bundle on a smooth projective curve.
//!
//! A bundle is described by its rank, the degree of the underlying bundle,
//! and, at each marked point of the parabolic divisor, a strictly increasing
//! list of rational weights in `[0, 1)` with multiplicities summing to the
//! rank. Two optional refinements pin down the Harder-Narasimhan filtration:
//! a decomposition into parabolic line summands, or the filtration data
//! itself (ranks and parabolic degrees of the quotients, slopes increasing).

use num::{BigInt, One, Zero};

use crate::arith::{big_to_u64, int, lcm_with_denominator, Rat};
use crate::error::{Error, Result};

/// A marked point of the parabolic divisor together with the weights and
/// multiplicities carried by the flag at that point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicPoint {
    label: String,
    weights: Vec<(Rat, u32)>,
}

impl ParabolicPoint {
    /// Builds a marked point. Weights must lie in `[0, 1)`, be strictly
    /// increasing, and carry positive multiplicities. The multiplicity sum is
    /// checked against the rank later, by [`ParabolicBundleSpec::new`].
    pub fn new(label: impl Into<String>, weights: Vec<(Rat, u32)>) -> Result<Self> {
        let label = label.into();
        let invalid = |detail: String| Error::InvalidWeights { point: label.clone(), detail };
        if weights.is_empty() {
            return Err(invalid("a marked point must carry at least one weight".into()));
        }
        for (alpha, mult) in &weights {
            if alpha < &Rat::zero() || alpha >= &Rat::one() {
                return Err(invalid(format!("weight {alpha} not in [0, 1)")));
            }
            if *mult == 0 {
                return Err(invalid(format!("weight {alpha} has zero multiplicity")));
            }
        }
        for pair in weights.windows(2) {
            if pair[0].0 >= pair[1].0 {
                return Err(invalid(format!(
                    "weights must be strictly increasing, got {} before {}",
                    pair[0].0, pair[1].0
                )));
            }
        }
        Ok(ParabolicPoint { label, weights })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Weight/multiplicity pairs, strictly increasing in the weight.
    pub fn weights(&self) -> &[(Rat, u32)] {
        &self.weights
    }

    /// Sum of the multiplicities at this point.
    pub fn multiplicity_sum(&self) -> u32 {
        self.weights.iter().map(|(_, m)| m).sum()
    }

    /// Weighted contribution `sum_i alpha_i * m_i` of this point to the
    /// parabolic degree.
    pub fn weight_contribution(&self) -> Rat {
        self.weights
            .iter()
            .map(|(alpha, m)| alpha * int(i64::from(*m)))
            .sum()
    }
}

/// A parabolic line bundle appearing as a direct summand: an integer degree
/// plus one weight per marked point (in the same order as the points of the
/// enclosing bundle).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineSummand {
    pub degree: i64,
    pub weights: Vec<Rat>,
}

impl LineSummand {
    pub fn new(degree: i64, weights: Vec<Rat>) -> Self {
        LineSummand { degree, weights }
    }

    /// Parabolic degree of the summand: underlying degree plus all weights.
    /// For a line bundle this is also its parabolic slope.
    pub fn parabolic_degree(&self) -> Rat {
        self.weights.iter().fold(int(self.degree), |acc, w| acc + w)
    }
}

/// One quotient of the Harder-Narasimhan filtration: its rank and parabolic
/// degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnPiece {
    pub rank: u32,
    pub degree: Rat,
}

impl HnPiece {
    pub fn new(rank: u32, degree: Rat) -> Self {
        HnPiece { rank, degree }
    }

    /// Parabolic slope `degree / rank` of the piece.
    pub fn slope(&self) -> Rat {
        &self.degree / int(i64::from(self.rank))
    }
}

/// Harder-Narasimhan data in the quotient convention: the pieces are the
/// successive semistable quotients, listed with *strictly increasing* slopes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnData {
    pieces: Vec<HnPiece>,
}

impl HnData {
    /// Validates and wraps filtration data: pieces must be nonempty, have
    /// positive ranks, and strictly increasing slopes.
    pub fn new(pieces: Vec<HnPiece>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::InvalidFiltration { detail: "HN data must be nonempty".into() });
        }
        if let Some(p) = pieces.iter().find(|p| p.rank == 0) {
            return Err(Error::InvalidFiltration {
                detail: format!("HN piece of degree {} has rank 0", p.degree),
            });
        }
        for pair in pieces.windows(2) {
            if pair[0].slope() >= pair[1].slope() {
                return Err(Error::InvalidFiltration {
                    detail: "HN slopes must be strictly increasing".into(),
                });
            }
        }
        Ok(HnData { pieces })
    }

    pub fn pieces(&self) -> &[HnPiece] {
        &self.pieces
    }

    /// Number of pieces (the length of the filtration).
    pub fn length(&self) -> usize {
        self.pieces.len()
    }

    /// A bundle is semistable exactly when its filtration has one piece.
    pub fn is_semistable(&self) -> bool {
        self.pieces.len() == 1
    }

    pub fn total_rank(&self) -> u32 {
        self.pieces.iter().map(|p| p.rank).sum()
    }

    /// Sum of the piece degrees; equals the parabolic degree of the bundle.
    pub fn total_degree(&self) -> Rat {
        self.pieces.iter().map(|p| p.degree.clone()).sum()
    }

    /// Slope of the `i`-th piece, `i` counted from 1.
    pub fn slope(&self, i: usize) -> Rat {
        self.pieces[i - 1].slope()
    }

    /// Partial rank sum `r_1 + ... + r_i` (zero for `i = 0`).
    pub fn partial_rank(&self, i: usize) -> u32 {
        self.pieces[..i].iter().map(|p| p.rank).sum()
    }

    /// Degree remainder after the first `i` pieces: the total degree minus
    /// `d_1 + ... + d_i`. For `i = 0` this is the parabolic degree itself.
    pub fn degree_remainder(&self, i: usize) -> Rat {
        self.total_degree() - self.pieces[..i].iter().map(|p| p.degree.clone()).sum::<Rat>()
    }

    /// Checks the cross-cutting invariants against the enclosing bundle.
    fn validate_against(&self, rank: u32, parabolic_degree: &Rat) -> Result<()> {
        if self.total_rank() != rank {
            return Err(Error::InvalidFiltration {
                detail: format!(
                    "HN ranks sum to {}, but the bundle has rank {rank}",
                    self.total_rank()
                ),
            });
        }
        if &self.total_degree() != parabolic_degree {
            return Err(Error::InvalidFiltration {
                detail: format!(
                    "HN degrees sum to {}, but the parabolic degree is {parabolic_degree}",
                    self.total_degree()
                ),
            });
        }
        Ok(())
    }
}

/// Numerical data of a parabolic bundle, with optional line-summand or
/// explicit Harder-Narasimhan refinements (at most one of the two).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicBundleSpec {
    rank: u32,
    degree: i64,
    points: Vec<ParabolicPoint>,
    split: Option<Vec<LineSummand>>,
    explicit_hn: Option<HnData>,
}

impl ParabolicBundleSpec {
    /// Validates and assembles a bundle description.
    ///
    /// Checks performed here: the rank is positive; point labels are
    /// distinct; at every point the multiplicities sum to the rank; summand
    /// data (if any) matches the rank, the underlying degree and the weight
    /// lists; explicit HN data (if any) is consistent with the rank and the
    /// parabolic degree. Supplying both summand and HN data is rejected.
    pub fn new(
        rank: u32,
        degree: i64,
        points: Vec<ParabolicPoint>,
        split: Option<Vec<LineSummand>>,
        explicit_hn: Option<HnData>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::SplitInconsistent { detail: "rank must be positive".into() });
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].iter().any(|q| q.label == p.label) {
                return Err(Error::InvalidWeights {
                    point: p.label.clone(),
                    detail: "duplicate point label".into(),
                });
            }
            if p.multiplicity_sum() != rank {
                return Err(Error::InvalidWeights {
                    point: p.label.clone(),
                    detail: format!(
                        "multiplicities sum to {}, but the rank is {rank}",
                        p.multiplicity_sum()
                    ),
                });
            }
        }
        if split.is_some() && explicit_hn.is_some() {
            return Err(Error::ConflictingFiltrationSources);
        }
        let spec = ParabolicBundleSpec { rank, degree, points, split: None, explicit_hn: None };
        if let Some(summands) = split {
            spec.validate_split(&summands)?;
            return Ok(ParabolicBundleSpec { split: Some(summands), ..spec });
        }
        if let Some(hn) = explicit_hn {
            hn.validate_against(rank, &spec.parabolic_degree())?;
            return Ok(ParabolicBundleSpec { explicit_hn: Some(hn), ..spec });
        }
        Ok(spec)
    }

    /// Consistency of line-summand data with the ambient description: one
    /// summand per rank, degrees summing to the underlying degree, and at
    /// each point the multiset of summand weights equal to the declared
    /// weight/multiplicity list.
    fn validate_split(&self, summands: &[LineSummand]) -> Result<()> {
        if summands.len() != self.rank as usize {
            return Err(Error::SplitInconsistent {
                detail: format!(
                    "{} line summands for a bundle of rank {}",
                    summands.len(),
                    self.rank
                ),
            });
        }
        let degree_sum: i64 = summands.iter().map(|s| s.degree).sum();
        if degree_sum != self.degree {
            return Err(Error::SplitInconsistent {
                detail: format!(
                    "summand degrees sum to {degree_sum}, but the underlying degree is {}",
                    self.degree
                ),
            });
        }
        for s in summands {
            if s.weights.len() != self.points.len() {
                return Err(Error::SplitInconsistent {
                    detail: format!(
                        "a summand carries {} weights for {} marked points",
                        s.weights.len(),
                        self.points.len()
                    ),
                });
            }
        }
        for (idx, point) in self.points.iter().enumerate() {
            let mut column: Vec<&Rat> = summands.iter().map(|s| &s.weights[idx]).collect();
            column.sort();
            let mut declared: Vec<&Rat> = Vec::with_capacity(self.rank as usize);
            for (alpha, mult) in point.weights() {
                for _ in 0..*mult {
                    declared.push(alpha);
                }
            }
            if column != declared {
                return Err(Error::SplitInconsistent {
                    detail: format!(
                        "summand weights at point {} do not match the declared weight multiset",
                        point.label
                    ),
                });
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Degree of the underlying vector bundle.
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn points(&self) -> &[ParabolicPoint] {
        &self.points
    }

    pub fn split(&self) -> Option<&[LineSummand]> {
        self.split.as_deref()
    }

    pub fn explicit_hn(&self) -> Option<&HnData> {
        self.explicit_hn.as_ref()
    }

    /// Parabolic degree: the degree of the underlying bundle plus the
    /// multiplicity-weighted sum of all weights.
    ///
    /// The same number is also computed through the integral of the degrees
    /// of the interpolating sub-sheaves (see
    /// [`parabolic_degree_integral`](Self::parabolic_degree_integral)); the
    /// two routes are asserted to agree on every call.
    pub fn parabolic_degree(&self) -> Rat {
        let finite: Rat = self
            .points
            .iter()
            .fold(int(self.degree), |acc, p| acc + p.weight_contribution());
        debug_assert_eq!(
            finite,
            self.parabolic_degree_integral(),
            "the finite-sum and integral forms of the parabolic degree disagree"
        );
        finite
    }

    /// Parabolic degree computed independently, as the integral over
    /// `t in [0, 1]` of the degree of the sub-sheaf where every piece of
    /// weight `< t` has been twisted away, plus rank times the degree of the
    /// (reduced) parabolic divisor.
    ///
    /// The integrand is piecewise constant between consecutive distinct
    /// weights, so the integral is a finite exact sum.
    pub fn parabolic_degree_integral(&self) -> Rat {
        let mut breakpoints: Vec<Rat> = vec![Rat::zero(), Rat::one()];
        for p in &self.points {
            for (alpha, _) in p.weights() {
                breakpoints.push(alpha.clone());
            }
        }
        breakpoints.sort();
        breakpoints.dedup();

        let mut integral = Rat::zero();
        for window in breakpoints.windows(2) {
            let (a, b) = (&window[0], &window[1]);
            // On (a, b] the twisted-away multiplicity is that of all weights <= a.
            let dropped: i64 = self
                .points
                .iter()
                .flat_map(|p| p.weights())
                .filter(|(alpha, _)| alpha <= a)
                .map(|(_, m)| i64::from(*m))
                .sum();
            let value = int(self.degree - dropped);
            integral += (b - a) * value;
        }
        integral + int(i64::from(self.rank)) * int(self.points.len() as i64)
    }

    /// Parabolic slope: parabolic degree divided by the rank.
    pub fn parabolic_slope(&self) -> Rat {
        self.parabolic_degree() / int(i64::from(self.rank))
    }

    /// The level `N`: the least common multiple, over all marked points, of
    /// the denominators of the weights at that point. A bundle with no
    /// marked points has level 1. All weights become integral after
    /// multiplying by `N`, and `N` is the degree of the smallest cover on
    /// which the parabolic structure can be realized by an honest bundle.
    pub fn level(&self) -> Result<u64> {
        let mut acc = BigInt::one();
        for p in &self.points {
            for (alpha, _) in p.weights() {
                acc = lcm_with_denominator(&acc, alpha);
            }
        }
        big_to_u64(&acc)
    }

    /// Harder-Narasimhan data of the bundle, derived from whichever source
    /// is available: explicit data, line summands, or (for rank 1) the
    /// bundle itself. Anything else is underdetermined.
    pub fn resolve_hn(&self) -> Result<HnData> {
        if let Some(hn) = &self.explicit_hn {
            return Ok(hn.clone());
        }
        if self.split.is_some() {
            return hn_from_split(self);
        }
        if self.rank == 1 {
            return HnData::new(vec![HnPiece::new(1, self.parabolic_degree())]);
        }
        Err(Error::UnderdeterminedBundle)
    }
}

/// Harder-Narasimhan data of a bundle split into parabolic line summands:
/// summands are sorted by parabolic slope and summands of equal slope are
/// grouped into one semistable piece.
pub fn hn_from_split(spec: &ParabolicBundleSpec) -> Result<HnData> {
    let summands = spec.split().ok_or(Error::SplitDataRequired)?;
    let mut slopes: Vec<Rat> = summands.iter().map(|s| s.parabolic_degree()).collect();
    slopes.sort();
    let mut pieces: Vec<HnPiece> = Vec::new();
    for slope in slopes {
        match pieces.last_mut() {
            Some(last) if last.slope() == slope => {
                last.rank += 1;
                last.degree += slope;
            }
            _ => pieces.push(HnPiece::new(1, slope)),
        }
    }
    let hn = HnData::new(pieces)?;
    debug_assert_eq!(hn.total_rank(), spec.rank());
    debug_assert_eq!(hn.total_degree(), spec.parabolic_degree());
    Ok(hn)
}
