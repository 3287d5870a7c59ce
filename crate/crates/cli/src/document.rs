//! The on-disk bundle description: a small JSON schema mirroring the
//! in-memory types, with every rational given as an integer `num`/`den`
//! pair so nothing is ever rounded.
//!
//! Parsing is two-staged: [`parse_document`] reads the bytes and collects
//! *all* schema-level problems (not just the first), then [`to_spec`]
//! converts a clean document into a [`ParabolicBundleSpec`], surfacing any
//! remaining model-level inconsistency.

use std::fmt;

use serde::{Deserialize, Serialize};

use parabolic_cones::arith::{rat, Rat};
use parabolic_cones::bundle::{
    HnData, HnPiece, LineSummand, ParabolicBundleSpec, ParabolicPoint,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleDocument {
    pub schema_version: u32,
    pub name: String,
    pub rank: u32,
    pub degree: i64,
    #[serde(default)]
    pub points: Vec<PointDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<Vec<SummandDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hn: Option<Vec<HnPieceDoc>>,
    /// Genus of the base curve. Recorded for provenance only: none of the
    /// computed quantities depend on it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDoc {
    pub label: String,
    pub weights: Vec<WeightDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightDoc {
    pub num: i64,
    pub den: i64,
    pub mult: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandDoc {
    pub degree: i64,
    /// One weight per marked point, in the order of `points`.
    pub weights: Vec<FractionDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FractionDoc {
    pub num: i64,
    pub den: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HnPieceDoc {
    pub rank: u32,
    pub deg_num: i64,
    pub deg_den: i64,
}

impl FractionDoc {
    fn value(&self) -> Rat {
        rat(self.num, self.den)
    }
}

/// Why a document could not be used: either the bytes are not valid JSON for
/// the schema (with the position of the first offence), or the fields parse
/// but violate the documented invariants (all violations listed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentError {
    Syntax {
        line: usize,
        column: usize,
        detail: String,
    },
    Invalid {
        problems: Vec<String>,
    },
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Syntax { line, column, detail } => {
                write!(f, "syntax error at line {line}, column {column}: {detail}")
            }
            DocumentError::Invalid { problems } => {
                write!(f, "invalid document:")?;
                for p in problems {
                    write!(f, "\n  - {p}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for DocumentError {}

/// Parses and validates a document, reporting every schema-level problem at
/// once. Field paths in the messages follow the JSON structure, e.g.
/// `points[0].weights[1].den`.
pub fn parse_document(bytes: &[u8]) -> Result<BundleDocument, DocumentError> {
    let doc: BundleDocument =
        serde_json::from_slice(bytes).map_err(|e| DocumentError::Syntax {
            line: e.line(),
            column: e.column(),
            detail: e.to_string(),
        })?;
    let problems = validate(&doc);
    if problems.is_empty() {
        Ok(doc)
    } else {
        Err(DocumentError::Invalid { problems })
    }
}

fn validate(doc: &BundleDocument) -> Vec<String> {
    let mut problems = Vec::new();
    if doc.schema_version != SCHEMA_VERSION {
        problems.push(format!(
            "schema_version: unsupported value {} (this tool reads version {})",
            doc.schema_version, SCHEMA_VERSION
        ));
    }
    if doc.name.is_empty() {
        problems.push("name: must be nonempty".to_string());
    }
    if doc.rank == 0 {
        problems.push("rank: must be at least 1".to_string());
    }

    for (i, point) in doc.points.iter().enumerate() {
        if point.label.is_empty() {
            problems.push(format!("points[{i}].label: must be nonempty"));
        }
        if doc.points[..i].iter().any(|p| p.label == point.label) {
            problems.push(format!(
                "points[{i}].label: duplicate label \"{}\"",
                point.label
            ));
        }
        if point.weights.is_empty() {
            problems.push(format!("points[{i}].weights: must be nonempty"));
        }
        let mut mult_sum: u64 = 0;
        let mut previous: Option<Rat> = None;
        for (j, w) in point.weights.iter().enumerate() {
            if w.den <= 0 {
                problems.push(format!("points[{i}].weights[{j}].den: must be positive"));
                continue;
            }
            if w.mult == 0 {
                problems.push(format!("points[{i}].weights[{j}].mult: must be at least 1"));
            }
            mult_sum += u64::from(w.mult);
            let value = rat(w.num, w.den);
            if value < rat(0, 1) || value >= rat(1, 1) {
                problems.push(format!(
                    "points[{i}].weights[{j}]: weight {}/{} not in [0, 1)",
                    w.num, w.den
                ));
            }
            if let Some(prev) = &previous {
                if *prev >= value {
                    problems.push(format!(
                        "points[{i}].weights: weights must be strictly increasing \
                         (entry {j} does not exceed its predecessor)"
                    ));
                }
            }
            previous = Some(value);
        }
        if doc.rank > 0 && mult_sum != u64::from(doc.rank) {
            problems.push(format!(
                "points[{i}]: multiplicities sum to {mult_sum}, expected the rank {}",
                doc.rank
            ));
        }
    }

    if doc.split.is_some() && doc.hn.is_some() {
        problems.push(
            "split/hn: at most one source of filtration data may be supplied".to_string(),
        );
    }

    if let Some(split) = &doc.split {
        if doc.rank > 0 && split.len() != doc.rank as usize {
            problems.push(format!(
                "split: has {} summands, expected the rank {}",
                split.len(),
                doc.rank
            ));
        }
        for (s, summand) in split.iter().enumerate() {
            if summand.weights.len() != doc.points.len() {
                problems.push(format!(
                    "split[{s}].weights: expected one weight per point ({}), found {}",
                    doc.points.len(),
                    summand.weights.len()
                ));
            }
            for (j, w) in summand.weights.iter().enumerate() {
                if w.den <= 0 {
                    problems.push(format!("split[{s}].weights[{j}].den: must be positive"));
                    continue;
                }
                let value = w.value();
                if value < rat(0, 1) || value >= rat(1, 1) {
                    problems.push(format!(
                        "split[{s}].weights[{j}]: weight {}/{} not in [0, 1)",
                        w.num, w.den
                    ));
                }
            }
        }
    }

    if let Some(hn) = &doc.hn {
        if hn.is_empty() {
            problems.push("hn: must contain at least one piece".to_string());
        }
        let mut rank_sum: u64 = 0;
        let mut previous_slope: Option<Rat> = None;
        for (i, piece) in hn.iter().enumerate() {
            if piece.rank == 0 {
                problems.push(format!("hn[{i}].rank: must be at least 1"));
                continue;
            }
            rank_sum += u64::from(piece.rank);
            if piece.deg_den <= 0 {
                problems.push(format!("hn[{i}].deg_den: must be positive"));
                continue;
            }
            let slope = rat(piece.deg_num, piece.deg_den) / rat(i64::from(piece.rank), 1);
            if let Some(prev) = &previous_slope {
                if *prev >= slope {
                    problems.push("hn: HN slopes must be strictly increasing".to_string());
                }
            }
            previous_slope = Some(slope);
        }
        if doc.rank > 0 && !hn.is_empty() && rank_sum != u64::from(doc.rank) {
            problems.push(format!(
                "hn: piece ranks sum to {rank_sum}, expected the rank {}",
                doc.rank
            ));
        }
    }

    problems
}

/// Converts a schema-valid document into the in-memory model, surfacing any
/// remaining inconsistency (weight/summand mismatch, filtration totals that
/// contradict the parabolic degree, and so on) as a validation problem.
pub fn to_spec(doc: &BundleDocument) -> Result<ParabolicBundleSpec, DocumentError> {
    let wrap = |detail: String| DocumentError::Invalid { problems: vec![detail] };

    let mut points = Vec::with_capacity(doc.points.len());
    for p in &doc.points {
        let weights: Vec<(Rat, u32)> = p
            .weights
            .iter()
            .map(|w| (rat(w.num, w.den), w.mult))
            .collect();
        points.push(ParabolicPoint::new(p.label.clone(), weights).map_err(|e| {
            wrap(format!("points: {e}"))
        })?);
    }

    let split = doc.split.as_ref().map(|summands| {
        summands
            .iter()
            .map(|s| LineSummand::new(s.degree, s.weights.iter().map(FractionDoc::value).collect()))
            .collect::<Vec<_>>()
    });

    let hn = match &doc.hn {
        Some(pieces) => Some(
            HnData::new(
                pieces
                    .iter()
                    .map(|p| HnPiece::new(p.rank, rat(p.deg_num, p.deg_den)))
                    .collect(),
            )
            .map_err(|e| wrap(format!("hn: {e}")))?,
        ),
        None => None,
    };

    ParabolicBundleSpec::new(doc.rank, doc.degree, points, split, hn)
        .map_err(|e| wrap(e.to_string()))
}
