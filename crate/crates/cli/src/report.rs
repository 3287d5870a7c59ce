//! Report generation: everything the tool can say about one bundle,
//! collected into a plain serializable structure. The JSON output is the
//! serialization of [`ConeReport`] and the text output is rendered *from*
//! the same structure, so the two always carry the same numbers.

use std::fmt;

use num::ToPrimitive;
use serde::{Deserialize, Serialize};

use parabolic_cones::arith::Rat;
use parabolic_cones::bundle::ParabolicBundleSpec;
use parabolic_cones::cone::{
    eff_cone_lower, eff_cone_upper, is_k_homogeneous, is_semistable, is_semistable_by_cones,
    is_semistable_by_hn, nef_cone_upper, nu_table, Cone2D,
};
use parabolic_cones::oracle::{cross_check, default_gammas, smallest_admissible_gamma};
use parabolic_cones::ring::Side;

use crate::document::{to_spec, BundleDocument};

/// Options controlling what a report contains.
#[derive(Debug, Clone, Default)]
pub struct ReportFlags {
    /// Restrict the per-dimension section to these values of `k`
    /// (out-of-range entries are skipped with a warning). `None` means all
    /// of `1..rank`.
    pub k_filter: Option<Vec<u32>>,
    /// Add the oracle section: recompute every reported effective cone
    /// through classical formulas on finite covers and compare.
    pub check_oracle: bool,
    /// Cover degrees for the oracle. `None` picks the three smallest
    /// admissible ones. Inadmissible entries are skipped with a warning;
    /// if none survive, the report fails.
    pub gammas: Option<Vec<u64>>,
}

#[derive(Debug)]
pub enum ReportError {
    /// The document failed schema validation or could not be converted.
    Document(crate::document::DocumentError),
    /// The model rejected the data (underdetermined filtration,
    /// inadmissible cover degree, ...).
    Model(parabolic_cones::Error),
    /// A value in the report did not fit the serialized integer width.
    Unrepresentable(String),
}

impl fmt::Display for ReportError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportError::Document(e) => write!(f, "{e}"),
            ReportError::Model(e) => write!(f, "{e}"),
            ReportError::Unrepresentable(what) => {
                write!(f, "value does not fit the report integer range: {what}")
            }
        }
    }
}

impl std::error::Error for ReportError {}

impl From<parabolic_cones::Error> for ReportError {
    fn from(e: parabolic_cones::Error) -> Self {
        ReportError::Model(e)
    }
}

impl From<crate::document::DocumentError> for ReportError {
    fn from(e: crate::document::DocumentError) -> Self {
        ReportError::Document(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionOut {
    pub num: i64,
    pub den: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HnPieceOut {
    pub rank: u32,
    pub degree: FractionOut,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuOut {
    pub k: u32,
    pub value: FractionOut,
}

/// One monomial of a generator: `coefficient * xi^xi_exp * L^ell_exp`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermOut {
    pub xi_exp: u32,
    pub ell_exp: u32,
    pub num: i64,
    pub den: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorOut {
    pub terms: Vec<TermOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeOut {
    /// "lower" for cones of cycle classes, "upper" for their duals.
    pub side: String,
    pub grade: u32,
    pub generators: Vec<GeneratorOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionOut {
    pub k: u32,
    pub eff_lower: ConeOut,
    pub nef_upper: ConeOut,
    pub eff_upper: ConeOut,
    pub k_homogeneous: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemistabilityOut {
    pub by_filtration: bool,
    pub by_cones: bool,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheckOut {
    pub gamma: u64,
    pub eff_match: bool,
    pub nef_consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDimOut {
    pub k: u32,
    pub checks: Vec<OracleCheckOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOut {
    pub gammas: Vec<u64>,
    pub dimensions: Vec<OracleDimOut>,
    pub pass: bool,
}

/// Everything computed for one bundle. A pure function of the document and
/// the flags: identical inputs serialize to identical bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeReport {
    pub schema_version: u32,
    pub name: String,
    pub rank: u32,
    pub degree: i64,
    pub level: u64,
    pub parabolic_degree: FractionOut,
    pub parabolic_slope: FractionOut,
    pub hn: Vec<HnPieceOut>,
    pub nu: Vec<NuOut>,
    pub dimensions: Vec<DimensionOut>,
    pub semistable: SemistabilityOut,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleOut>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

fn fraction(value: &Rat, what: &str) -> Result<FractionOut, ReportError> {
    let num = value
        .numer()
        .to_i64()
        .ok_or_else(|| ReportError::Unrepresentable(format!("{what} numerator")))?;
    let den = value
        .denom()
        .to_i64()
        .ok_or_else(|| ReportError::Unrepresentable(format!("{what} denominator")))?;
    Ok(FractionOut { num, den })
}

fn cone_out(cone: &Cone2D, what: &str) -> Result<ConeOut, ReportError> {
    let side = match cone.side() {
        Side::Lower => "lower",
        Side::Upper => "upper",
    };
    let grade = cone.grade();
    let mut generators = Vec::with_capacity(2);
    for gen in cone.generators() {
        let mut terms = Vec::new();
        if !num::Zero::is_zero(gen.xi_coeff()) {
            let c = fraction(gen.xi_coeff(), what)?;
            terms.push(TermOut { xi_exp: grade, ell_exp: 0, num: c.num, den: c.den });
        }
        if grade >= 1 && !num::Zero::is_zero(gen.ell_coeff()) {
            let c = fraction(gen.ell_coeff(), what)?;
            terms.push(TermOut { xi_exp: grade - 1, ell_exp: 1, num: c.num, den: c.den });
        }
        generators.push(GeneratorOut { terms });
    }
    Ok(ConeOut { side: side.to_string(), grade, generators })
}

/// Computes the full report for a document. The report never depends on
/// anything but `doc` and `flags`.
pub fn run_report(doc: &BundleDocument, flags: &ReportFlags) -> Result<ConeReport, ReportError> {
    let spec = to_spec(doc)?;
    let mut warnings = Vec::new();

    let rank = spec.rank();
    let level = spec.level()?;
    let pardeg = spec.parabolic_degree();

    let requested: Vec<u32> = match &flags.k_filter {
        Some(list) => {
            let mut ks: Vec<u32> = list.clone();
            ks.sort_unstable();
            ks.dedup();
            let mut kept = Vec::new();
            for k in ks {
                if k >= 1 && k < rank {
                    kept.push(k);
                } else if rank == 1 {
                    warnings.push(format!(
                        "k: {k} is out of range for rank 1 (no middle dimensions); skipped"
                    ));
                } else {
                    warnings.push(format!(
                        "k: {k} is out of range for rank {rank} (valid: 1..={}); skipped",
                        rank - 1
                    ));
                }
            }
            kept
        }
        None => (1..rank).collect(),
    };

    let hn = spec.resolve_hn()?;
    let hn_out = hn
        .pieces()
        .iter()
        .map(|p| {
            Ok(HnPieceOut {
                rank: p.rank,
                degree: fraction(&p.degree, "filtration degree")?,
            })
        })
        .collect::<Result<Vec<_>, ReportError>>()?;

    let nu_out = if rank >= 2 {
        let table = nu_table(&hn, level)?;
        (1..rank)
            .map(|k| {
                Ok(NuOut {
                    k,
                    value: fraction(table.nu(k)?, "nu value")?,
                })
            })
            .collect::<Result<Vec<_>, ReportError>>()?
    } else {
        Vec::new()
    };

    let mut dimensions = Vec::with_capacity(requested.len());
    for &k in &requested {
        dimensions.push(DimensionOut {
            k,
            eff_lower: cone_out(&eff_cone_lower(&spec, k)?, "effective generator")?,
            nef_upper: cone_out(&nef_cone_upper(&spec, k)?, "nef generator")?,
            eff_upper: cone_out(&eff_cone_upper(&spec, k)?, "effective generator")?,
            k_homogeneous: is_k_homogeneous(&spec, k)?,
        });
    }

    let semistable = SemistabilityOut {
        by_filtration: is_semistable_by_hn(&spec)?,
        by_cones: is_semistable_by_cones(&spec)?,
        verdict: is_semistable(&spec)?,
    };

    let oracle = if flags.check_oracle {
        Some(oracle_section(&spec, flags, &requested, &mut warnings)?)
    } else {
        None
    };

    Ok(ConeReport {
        schema_version: crate::document::SCHEMA_VERSION,
        name: doc.name.clone(),
        rank,
        degree: spec.degree(),
        level,
        parabolic_degree: fraction(&pardeg, "parabolic degree")?,
        parabolic_slope: fraction(&spec.parabolic_slope(), "parabolic slope")?,
        hn: hn_out,
        nu: nu_out,
        dimensions,
        semistable,
        oracle,
        warnings,
    })
}

fn oracle_section(
    spec: &ParabolicBundleSpec,
    flags: &ReportFlags,
    requested: &[u32],
    warnings: &mut Vec<String>,
) -> Result<OracleOut, ReportError> {
    let gammas = match &flags.gammas {
        Some(user) => {
            let smallest = smallest_admissible_gamma(spec)?;
            let mut kept = Vec::new();
            let mut first_rejected = None;
            for &g in user {
                if g > 0 && g % smallest == 0 {
                    if !kept.contains(&g) {
                        kept.push(g);
                    }
                } else {
                    warnings.push(format!(
                        "gammas: {g} is not admissible (must be a positive multiple \
                         of {smallest}); skipped"
                    ));
                    first_rejected.get_or_insert(g);
                }
            }
            if kept.is_empty() {
                return Err(ReportError::Model(
                    parabolic_cones::Error::InadmissibleGamma {
                        gamma: first_rejected.unwrap_or(0),
                        smallest,
                    },
                ));
            }
            kept
        }
        None => default_gammas(spec)?,
    };

    let mut dims = Vec::with_capacity(requested.len());
    let mut pass = true;
    for &k in requested {
        let report = cross_check(spec, k, &gammas)?;
        pass &= report.pass();
        dims.push(OracleDimOut {
            k,
            checks: report
                .checks
                .iter()
                .map(|c| OracleCheckOut {
                    gamma: c.gamma,
                    eff_match: c.eff_match,
                    nef_consistent: c.nef_consistent,
                })
                .collect(),
        });
    }
    Ok(OracleOut { gammas, dimensions: dims, pass })
}

/// Serializes a report as pretty JSON with a trailing newline.
pub fn render_json(report: &ConeReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serialization is infallible");
    s.push('\n');
    s
}

fn fraction_text(f: &FractionOut) -> String {
    if f.den == 1 {
        f.num.to_string()
    } else {
        format!("{}/{}", f.num, f.den)
    }
}

fn monomial_text(xi_exp: u32, ell_exp: u32) -> String {
    let mut parts = Vec::new();
    match xi_exp {
        0 => {}
        1 => parts.push("xi".to_string()),
        e => parts.push(format!("xi^{e}")),
    }
    if ell_exp == 1 {
        parts.push("L".to_string());
    }
    parts.join("*")
}

fn generator_text(gen: &GeneratorOut) -> String {
    if gen.terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, term) in gen.terms.iter().enumerate() {
        let mono = monomial_text(term.xi_exp, term.ell_exp);
        let negative = term.num < 0;
        let abs = FractionOut { num: term.num.abs(), den: term.den };
        let coeff = fraction_text(&abs);
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&coeff);
        } else if coeff == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&coeff);
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

fn cone_text(cone: &ConeOut) -> String {
    let gens: Vec<String> = cone.generators.iter().map(generator_text).collect();
    format!("< {} >", gens.join(", "))
}

/// Renders the human-readable form of a report. Every number shown here is
/// read back out of the structured report, never recomputed.
pub fn render_text(report: &ConeReport) -> String {
    let mut out = String::new();
    let push = |out: &mut String, line: String| {
        out.push_str(&line);
        out.push('\n');
    };

    push(&mut out, format!("bundle {}", report.name));
    push(
        &mut out,
        format!(
            "  rank {}, underlying degree {}, level {}",
            report.rank, report.degree, report.level
        ),
    );
    push(
        &mut out,
        format!(
            "  parabolic degree {} (slope {})",
            fraction_text(&report.parabolic_degree),
            fraction_text(&report.parabolic_slope)
        ),
    );
    let pieces: Vec<String> = report
        .hn
        .iter()
        .map(|p| format!("({}, {})", p.rank, fraction_text(&p.degree)))
        .collect();
    push(
        &mut out,
        format!("  filtration quotients (rank, degree): {}", pieces.join(", ")),
    );
    if !report.nu.is_empty() {
        let nus: Vec<String> = report
            .nu
            .iter()
            .map(|n| format!("nu_{} = {}", n.k, fraction_text(&n.value)))
            .collect();
        push(&mut out, format!("  {}", nus.join(", ")));
    }
    for dim in &report.dimensions {
        push(&mut out, format!("  k = {}", dim.k));
        push(
            &mut out,
            format!("    eff  (cycles, dim {}):    {}", dim.eff_lower.grade, cone_text(&dim.eff_lower)),
        );
        push(
            &mut out,
            format!("    nef  (dual, codim {}):    {}", dim.nef_upper.grade, cone_text(&dim.nef_upper)),
        );
        push(
            &mut out,
            format!("    eff  (dual side, codim {}): {}", dim.eff_upper.grade, cone_text(&dim.eff_upper)),
        );
        push(
            &mut out,
            format!("    k-homogeneous: {}", if dim.k_homogeneous { "yes" } else { "no" }),
        );
    }
    push(
        &mut out,
        format!(
            "  semistable: {} (filtration route: {}, cone route: {})",
            if report.semistable.verdict { "yes" } else { "no" },
            if report.semistable.by_filtration { "yes" } else { "no" },
            if report.semistable.by_cones { "yes" } else { "no" },
        ),
    );
    if let Some(oracle) = &report.oracle {
        let degrees: Vec<String> = oracle.gammas.iter().map(u64::to_string).collect();
        push(
            &mut out,
            format!(
                "  oracle (cover degrees {}): {}",
                degrees.join(", "),
                if oracle.pass { "pass" } else { "FAIL" }
            ),
        );
        if !oracle.pass {
            for dim in &oracle.dimensions {
                for check in &dim.checks {
                    if !check.eff_match || !check.nef_consistent {
                        push(
                            &mut out,
                            format!(
                                "    mismatch at k = {}, cover degree {} (eff: {}, nef: {})",
                                dim.k, check.gamma, check.eff_match, check.nef_consistent
                            ),
                        );
                    }
                }
            }
        }
    }
    for w in &report.warnings {
        push(&mut out, format!("  warning: {w}"));
    }
    out
}
