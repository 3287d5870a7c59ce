//! Positive cones in the two-dimensional graded slices of the numerical
//! ring, and the stability criterion they encode.
//!
//! For each `k` between 1 and `r - 1` the cycle classes of dimension `k`
//! (equivalently codimension `r - k`) form a two-dimensional space spanned
//! by monomials in the tautological and fiber classes. The pseudo-effective
//! and nef cones in these slices are spanned by two rays each; the positions
//! of the non-trivial rays are controlled by a table of slope excesses read
//! off the Harder-Narasimhan data. Nef and pseudo-effective cones are dual
//! to each other under the intersection pairing, and the bundle is
//! semistable exactly when the upper effective and nef cones coincide in
//! every grade.

use num::{One, Signed, Zero};

use crate::arith::{int, sign, Rat};
use crate::bundle::{HnData, ParabolicBundleSpec};
use crate::error::{Error, Result};
use crate::ring::{NumericalClass, RingContext, Side};

/// The slope-excess table: for each `k` in `1 ..= r - 1`, the rational
/// `nu_k` placing the non-trivial ray of the dimension-`k` pseudo-effective
/// cone at `xi^(r-k) + nu_k * xi^(r-k-1) * L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuTable {
    rank: u32,
    values: Vec<Rat>,
}

impl NuTable {
    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// `nu_k`, for `k` in `1 ..= r - 1`.
    pub fn nu(&self, k: u32) -> Result<&Rat> {
        if k == 0 || k >= self.rank {
            return Err(Error::KOutOfRange { k, rank: self.rank });
        }
        Ok(&self.values[(k - 1) as usize])
    }

    /// All values, `nu_1` first.
    pub fn values(&self) -> &[Rat] {
        &self.values
    }
}

/// Builds the slope-excess table from Harder-Narasimhan data and the level.
///
/// Writing the pieces as `(r_s, d_s)` with slopes `mu_s` increasing, partial
/// rank sums `R_s = r_1 + ... + r_s` and degree remainders
/// `D_s = d - (d_1 + ... + d_s)`, the entry at `k = R_(s-1) + j` (for
/// `1 <= j <= r_s`, excluding the very last piece's last slot) is
/// `nu_k = (j * mu_s - D_(s-1)) * N`. Every `k` in `1 ..= r - 1` is covered
/// exactly once.
pub fn nu_table(hn: &HnData, level: u64) -> Result<NuTable> {
    let rank = hn.total_rank();
    if rank < 2 {
        return Err(Error::EmptyNuTable);
    }
    let n = int(level as i64);
    let length = hn.length();
    let mut values: Vec<Option<Rat>> = vec![None; (rank - 1) as usize];
    for s in 1..=length {
        let mu = hn.slope(s);
        let remainder = hn.degree_remainder(s - 1);
        let piece_rank = hn.pieces()[s - 1].rank;
        for j in 1..=piece_rank {
            if s == length && j == piece_rank {
                continue; // the top slot k = r has no cone slice
            }
            let k = hn.partial_rank(s - 1) + j;
            let slot = &mut values[(k - 1) as usize];
            debug_assert!(slot.is_none(), "slope-excess slot {k} filled twice");
            *slot = Some((int(i64::from(j)) * &mu - &remainder) * &n);
        }
    }
    let values = values
        .into_iter()
        .map(|v| v.expect("every slot 1..r-1 is covered by the index walk"))
        .collect();
    Ok(NuTable { rank, values })
}

/// A full-dimensional closed convex cone in one two-dimensional graded slice
/// of the numerical ring, stored by its two extremal rays in canonical form
/// (coprime integer coefficients, fixed order). Equality of values is
/// equality of cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone2D {
    gens: [NumericalClass; 2],
}

impl Cone2D {
    /// Builds a cone from two generators, which must span the slice: same
    /// context, grade and side, neither zero, not proportional. Generators
    /// are canonicalized and stored in a fixed deterministic order.
    pub fn from_generators(a: NumericalClass, b: NumericalClass) -> Result<Cone2D> {
        if a.ctx() != b.ctx() {
            return Err(Error::ContextMismatch {
                detail: "cone generators from different rings".into(),
            });
        }
        if a.grade() != b.grade() {
            return Err(Error::GradeMismatch {
                detail: format!("cone generators of grades {} and {}", a.grade(), b.grade()),
            });
        }
        if a.side() != b.side() {
            return Err(Error::SideMismatch {
                detail: format!("cone generators on sides {} and {}", a.side(), b.side()),
            });
        }
        let cross = a.xi_coeff() * b.ell_coeff() - a.ell_coeff() * b.xi_coeff();
        if cross.is_zero() {
            return Err(Error::DegenerateCone {
                detail: format!("generators {a} and {b} do not span the slice"),
            });
        }
        let (a, b) = (a.canonicalized(), b.canonicalized());
        // Deterministic order: descending by (xi coefficient, L coefficient).
        let swap = match b.xi_coeff().cmp(a.xi_coeff()) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Equal => b.ell_coeff() > a.ell_coeff(),
            std::cmp::Ordering::Less => false,
        };
        let gens = if swap { [b, a] } else { [a, b] };
        Ok(Cone2D { gens })
    }

    /// The two extremal rays, in canonical form and deterministic order.
    pub fn generators(&self) -> [&NumericalClass; 2] {
        [&self.gens[0], &self.gens[1]]
    }

    pub fn ctx(&self) -> &RingContext {
        self.gens[0].ctx()
    }

    pub fn grade(&self) -> u32 {
        self.gens[0].grade()
    }

    pub fn side(&self) -> Side {
        self.gens[0].side()
    }

    fn check_comparable(&self, class: &NumericalClass) -> Result<()> {
        if class.ctx() != self.ctx() {
            return Err(Error::ContextMismatch {
                detail: "class and cone from different rings".into(),
            });
        }
        if class.grade() != self.grade() {
            return Err(Error::GradeMismatch {
                detail: format!(
                    "class of grade {} against a cone of grade {}",
                    class.grade(),
                    self.grade()
                ),
            });
        }
        if class.side() != self.side() {
            return Err(Error::SideMismatch {
                detail: format!(
                    "class on side {} against a cone on side {}",
                    class.side(),
                    self.side()
                ),
            });
        }
        Ok(())
    }

    /// Coordinates of a class in the basis formed by the two generators.
    pub fn coordinates_of(&self, class: &NumericalClass) -> Result<(Rat, Rat)> {
        self.check_comparable(class)?;
        let (p, q) = (self.gens[0].xi_coeff(), self.gens[0].ell_coeff());
        let (u, v) = (self.gens[1].xi_coeff(), self.gens[1].ell_coeff());
        let det = p * v - q * u;
        debug_assert!(!det.is_zero(), "cone generators are independent by construction");
        let a = (class.xi_coeff() * v - class.ell_coeff() * u) / &det;
        let b = (p * class.ell_coeff() - q * class.xi_coeff()) / det;
        Ok((a, b))
    }

    /// Whether the class lies in the (closed) cone: both generator
    /// coordinates non-negative.
    pub fn contains(&self, class: &NumericalClass) -> Result<bool> {
        let (a, b) = self.coordinates_of(class)?;
        Ok(!a.is_negative() && !b.is_negative())
    }

    /// Whether the class lies in the interior of the cone: both generator
    /// coordinates strictly positive.
    pub fn contains_interior(&self, class: &NumericalClass) -> Result<bool> {
        let (a, b) = self.coordinates_of(class)?;
        Ok(a.is_positive() && b.is_positive())
    }

    /// Equality as cones. Errors when the cones live in different slices
    /// (context, grade or side differ); otherwise compares the canonical
    /// generator sets.
    pub fn same_cone_as(&self, other: &Cone2D) -> Result<bool> {
        if self.ctx() != other.ctx() {
            return Err(Error::ContextMismatch {
                detail: "cone comparison across different rings".into(),
            });
        }
        if self.grade() != other.grade() {
            return Err(Error::GradeMismatch {
                detail: format!(
                    "cone comparison across grades {} and {}",
                    self.grade(),
                    other.grade()
                ),
            });
        }
        if self.side() != other.side() {
            return Err(Error::SideMismatch {
                detail: format!(
                    "cone comparison across sides {} and {}",
                    self.side(),
                    other.side()
                ),
            });
        }
        Ok(self.gens == other.gens)
    }

    /// The dual cone under the intersection pairing: all classes of the
    /// complementary grade and opposite side pairing non-negatively against
    /// the whole cone. Each dual generator is orthogonal to one input
    /// generator and pairs positively with the other. Requires the
    /// complementary slice to be two-dimensional, i.e. grade in
    /// `1 ..= r - 1`.
    pub fn dual(&self) -> Result<Cone2D> {
        let ctx = self.ctx().clone();
        let r = ctx.rank();
        let w = self.grade();
        if w == 0 || w >= r {
            return Err(Error::GradeMismatch {
                detail: format!("duality needs grade in 1..={}, got {w}", r - 1),
            });
        }
        let out_grade = r - w;
        let out_side = self.side().flipped();
        let p = ctx.top_xi_value();
        let q = ctx.top_xi_ell_value();
        // For a generator with coefficients (s, t), the pairing-orthogonal
        // ray in the complementary slice is (-s*q, s*p + t*q), up to sign.
        let orthogonal = |gen: &NumericalClass| -> Result<NumericalClass> {
            ctx.class(
                out_grade,
                out_side,
                -(gen.xi_coeff() * &q),
                gen.xi_coeff() * &p + gen.ell_coeff() * &q,
            )
        };
        let mut duals: Vec<NumericalClass> = Vec::with_capacity(2);
        for (this, other) in [(1usize, 0usize), (0, 1)] {
            let cand = orthogonal(&self.gens[this])?;
            let pairing = match out_side {
                Side::Upper => cand.pair(&self.gens[other])?,
                Side::Lower => self.gens[other].pair(&cand)?,
            };
            match sign(&pairing) {
                1 => duals.push(cand),
                -1 => duals.push(cand.scaled(&int(-1))),
                _ => {
                    return Err(Error::DegenerateCone {
                        detail: "dual ray pairs to zero against both generators".into(),
                    })
                }
            }
        }
        let second = duals.pop().expect("two duals");
        let first = duals.pop().expect("two duals");
        Cone2D::from_generators(first, second)
    }
}

/// Ring context, Harder-Narasimhan data and slope-excess table of a bundle,
/// computed together.
fn analyze(spec: &ParabolicBundleSpec) -> Result<(RingContext, HnData, NuTable)> {
    let ctx = RingContext::for_bundle(spec)?;
    let hn = spec.resolve_hn()?;
    let nu = nu_table(&hn, ctx.level())?;
    Ok((ctx, hn, nu))
}

fn check_k(k: u32, rank: u32) -> Result<()> {
    if k == 0 || k >= rank {
        return Err(Error::KOutOfRange { k, rank });
    }
    Ok(())
}

/// The cone of pseudo-effective cycle classes of dimension `k` (a lower
/// cone, polynomial grade `r - k`):
/// `< xi^(r-k) + nu_k * xi^(r-k-1) * L , xi^(r-k-1) * L >`.
///
/// For `k` up to the rank of the first (minimal-slope) filtration quotient,
/// the non-trivial generator also arises geometrically from the class of
/// the projectivized minimal-slope quotient, as
/// `delta * (xi - mu_1 * N * L)^(r_1 - k)` with
/// `delta = xi^(r - r_1) + (d_1 - d) * N * xi^(r - r_1 - 1) * L`;
/// the expansion of that product is recomputed here and checked against the
/// closed form on every call.
pub fn eff_cone_lower(spec: &ParabolicBundleSpec, k: u32) -> Result<Cone2D> {
    let (ctx, hn, nu) = analyze(spec)?;
    let r = ctx.rank();
    check_k(k, r)?;
    let n = ctx.level_rat();
    let gen1 = ctx.class(r - k, Side::Upper, Rat::one(), nu.nu(k)?.clone())?;
    let gen2 = ctx.monomial(r - k - 1, 1)?;

    let r1 = hn.pieces()[0].rank;
    if k <= r1 {
        let delta = if r == r1 {
            ctx.one()
        } else {
            let d1 = &hn.pieces()[0].degree;
            let coeff = (d1 - hn.total_degree()) * &n;
            ctx.class(r - r1, Side::Upper, Rat::one(), coeff)?
        };
        let linear = ctx.class(1, Side::Upper, Rat::one(), -(hn.slope(1) * &n))?;
        let product = delta.multiply(&linear.pow(r1 - k)?)?;
        assert_eq!(
            product.canonicalized(),
            gen1.canonicalized(),
            "the product route through the minimal-slope quotient class must land on \
             the effective generator ray"
        );
    }

    Cone2D::from_generators(gen1.cyclified(), gen2.cyclified())
}

/// The nef cone in codimension `k` (an upper cone, polynomial grade `k`):
/// `< xi^k - (N*d + nu_k) * xi^(k-1) * L , xi^(k-1) * L >`.
///
/// This is exactly the dual of [`eff_cone_lower`] at the same `k` under the
/// intersection pairing.
pub fn nef_cone_upper(spec: &ParabolicBundleSpec, k: u32) -> Result<Cone2D> {
    let (ctx, _, nu) = analyze(spec)?;
    check_k(k, ctx.rank())?;
    let coeff = -(ctx.level_rat() * ctx.pardeg() + nu.nu(k)?);
    let gen1 = ctx.class(k, Side::Upper, Rat::one(), coeff)?;
    let gen2 = ctx.monomial(k - 1, 1)?;
    Cone2D::from_generators(gen1, gen2)
}

/// The cone of pseudo-effective classes in codimension `k` (an upper cone,
/// polynomial grade `k`):
/// `< xi^k + nu_(r-k) * xi^(k-1) * L , xi^(k-1) * L >`.
///
/// Its generators are the cyclify-preimages of the generators of
/// [`eff_cone_lower`] in dimension `r - k`.
pub fn eff_cone_upper(spec: &ParabolicBundleSpec, k: u32) -> Result<Cone2D> {
    let (ctx, _, nu) = analyze(spec)?;
    let r = ctx.rank();
    check_k(k, r)?;
    let gen1 = ctx.class(k, Side::Upper, Rat::one(), nu.nu(r - k)?.clone())?;
    let gen2 = ctx.monomial(k - 1, 1)?;
    Cone2D::from_generators(gen1, gen2)
}

/// The nef cone of divisor classes: `< xi - mu_1 * N * L , L >`, where
/// `mu_1` is the minimal slope of the Harder-Narasimhan data. For a bundle
/// with trivial parabolic structure this degenerates to the classical
/// statement with `N = 1`.
pub fn nef_cone_1(spec: &ParabolicBundleSpec) -> Result<Cone2D> {
    let ctx = RingContext::for_bundle(spec)?;
    let hn = spec.resolve_hn()?;
    let coeff = -(hn.slope(1) * ctx.level_rat());
    let gen1 = ctx.class(1, Side::Upper, Rat::one(), coeff)?;
    let gen2 = ctx.ell();
    Cone2D::from_generators(gen1, gen2)
}

/// Whether the upper pseudo-effective and nef cones agree in codimension
/// `k`. The nef cone is always contained in the pseudo-effective cone; that
/// inclusion is re-checked unconditionally on every call.
pub fn is_k_homogeneous(spec: &ParabolicBundleSpec, k: u32) -> Result<bool> {
    let eff = eff_cone_upper(spec, k)?;
    let nef = nef_cone_upper(spec, k)?;
    for gen in nef.generators() {
        assert!(
            eff.contains(gen)?,
            "nef classes must be pseudo-effective: generator {gen} of the codimension-{k} \
             nef cone falls outside the pseudo-effective cone"
        );
    }
    eff.same_cone_as(&nef)
}

/// Semistability read off the Harder-Narasimhan data: one piece.
pub fn is_semistable_by_hn(spec: &ParabolicBundleSpec) -> Result<bool> {
    Ok(spec.resolve_hn()?.length() == 1)
}

/// Semistability read off the positive cones: the upper pseudo-effective
/// and nef cones agree in every codimension `1 ..= r - 1` (vacuously true
/// for rank 1).
pub fn is_semistable_by_cones(spec: &ParabolicBundleSpec) -> Result<bool> {
    for k in 1..spec.rank() {
        if !is_k_homogeneous(spec, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the bundle is parabolically semistable. Both available routes —
/// the filtration length and the cone comparison — are evaluated and must
/// agree; their equivalence is the heart of the theory this crate
/// implements.
pub fn is_semistable(spec: &ParabolicBundleSpec) -> Result<bool> {
    let by_hn = is_semistable_by_hn(spec)?;
    let by_cones = is_semistable_by_cones(spec)?;
    assert_eq!(
        by_hn, by_cones,
        "filtration length and cone comparison disagree about semistability"
    );
    Ok(by_hn)
}
