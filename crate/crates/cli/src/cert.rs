//! Certificates written by `solve`, `density` and `hamilton`, and their
//! independent re-checks.

use serde::{Deserialize, Serialize};
use tb_core::density::{lift_check, DensityRecord};
use tb_core::hamilton::{cut_indices, hexagon_cut_set, verify_cut};
use tb_core::solve::{is_feasible, objective};
use tb_core::{
    build_family, build_quotient, format_ratio, validate_quotient, FamilyKind, FamilySpec,
    LatticeQuotient, ParamKind, Rational, SolveResult, VertexAddr,
};

use crate::format::GraphDocument;
use crate::CliError;

/// Side of the square window used when re-checking a periodic pattern.
pub const LIFT_WINDOW: u64 = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    Witness {
        param: String,
        value: usize,
        witness: Vec<usize>,
        graph: GraphDocument,
    },
    Density {
        param: String,
        quotient: String,
        value: usize,
        density: String,
        witness: Vec<String>,
        validated_radius: usize,
    },
    Cut {
        family: String,
        rows: u64,
        cols: u64,
        anchor: [i64; 2],
        removed: Vec<String>,
        components_after: usize,
        isolated_after: usize,
        certifies: bool,
    },
}

impl Certificate {
    pub fn witness(result: &SolveResult, graph: GraphDocument) -> Self {
        Certificate::Witness {
            param: result.kind.name().to_string(),
            value: result.value,
            witness: result.witness.clone(),
            graph,
        }
    }

    pub fn density(rec: &DensityRecord) -> Self {
        Certificate::Density {
            param: rec.kind.name().to_string(),
            quotient: rec.quotient.to_string(),
            value: rec.value,
            density: format_ratio(&rec.density),
            witness: rec.witness.iter().map(ToString::to_string).collect(),
            validated_radius: rec.validated_radius,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificates serialise");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("certificate: {e}")))
    }
}

fn reject(msg: impl Into<String>) -> CliError {
    CliError::Rejected(msg.into())
}

fn parse_param(s: &str) -> Result<ParamKind, CliError> {
    s.parse()
        .map_err(|e: tb_core::solve::ParseParamError| CliError::Parse(e.to_string()))
}

fn family_kind(s: &str) -> Result<FamilyKind, CliError> {
    match s.to_ascii_lowercase().as_str() {
        "tbt" => Ok(FamilyKind::Tbt),
        "tbp" => Ok(FamilyKind::Tbp),
        "tbr" => Ok(FamilyKind::Tbr),
        _ => Err(CliError::Parse(format!("unknown family {s:?}"))),
    }
}

/// Re-checks a certificate from scratch and returns a one-line summary.
pub fn verify_certificate(cert: &Certificate) -> Result<String, CliError> {
    match cert {
        Certificate::Witness {
            param,
            value,
            witness,
            graph,
        } => {
            let kind = parse_param(param)?;
            let g = graph
                .to_graph()
                .map_err(|e| CliError::Parse(e.to_string()))?;
            if witness.windows(2).any(|w| w[0] >= w[1]) {
                return Err(reject("witness is not strictly increasing"));
            }
            if witness.iter().any(|&v| v >= g.n()) {
                return Err(reject("witness vertex out of range"));
            }
            if !is_feasible(&g, kind, witness).expect("checked range") {
                return Err(reject(format!(
                    "witness is not a feasible {} set",
                    kind.name()
                )));
            }
            let actual = objective(&g, kind, witness).expect("checked range");
            if actual != *value {
                return Err(reject(format!(
                    "witness value is {actual}, certificate claims {value}"
                )));
            }
            Ok(format!("{} = {value} on {} vertices", kind.name(), g.n()))
        }
        Certificate::Density {
            param,
            quotient,
            value,
            density,
            witness,
            validated_radius,
        } => {
            let kind = parse_param(param)?;
            let q: LatticeQuotient = quotient
                .parse()
                .map_err(|e: tb_core::QuotientError| CliError::Parse(e.to_string()))?;
            if !validate_quotient(&q, *validated_radius) {
                return Err(reject(format!(
                    "quotient {q} does not validate at radius {validated_radius}"
                )));
            }
            let witness: Vec<VertexAddr> = witness
                .iter()
                .map(|s| s.parse())
                .collect::<Result<_, _>>()
                .map_err(|e: tb_core::addr::ParseAddrError| CliError::Parse(e.to_string()))?;
            let g = build_quotient(&q).map_err(|e| reject(e.to_string()))?;
            let mut ids = Vec::with_capacity(witness.len());
            for a in &witness {
                if q.canonical(*a) != *a {
                    return Err(reject(format!("{a} is not a quotient representative")));
                }
                ids.push(q.index(*a));
            }
            if !is_feasible(&g, kind, &ids).expect("indices come from the quotient") {
                return Err(reject(format!(
                    "pattern is not a feasible {} set on {q}",
                    kind.name()
                )));
            }
            let actual = objective(&g, kind, &ids).expect("indices come from the quotient");
            let claimed = Rational::new(actual as i64, g.n() as i64);
            if actual != *value || format_ratio(&claimed) != *density {
                return Err(reject(format!(
                    "pattern gives {actual} ({}), certificate claims {value} ({density})",
                    format_ratio(&claimed)
                )));
            }
            let rec = DensityRecord {
                kind,
                quotient: q,
                value: actual,
                density: claimed,
                set_density: Rational::new(ids.len() as i64, g.n() as i64),
                witness,
                validated_radius: *validated_radius,
            };
            if !lift_check(&rec, LIFT_WINDOW, LIFT_WINDOW).map_err(|e| reject(e.to_string()))? {
                return Err(reject("lifted pattern fails the local condition"));
            }
            Ok(format!("{} density {density} on quotient {q}", kind.name()))
        }
        Certificate::Cut {
            family,
            rows,
            cols,
            anchor,
            removed,
            components_after,
            isolated_after,
            certifies,
        } => {
            let spec = FamilySpec {
                kind: family_kind(family)?,
                r: *rows,
                s: *cols,
            };
            let g = build_family(&spec).map_err(|e| reject(e.to_string()))?;
            let cut = hexagon_cut_set(anchor[0], anchor[1]);
            let names: Vec<String> = cut.iter().map(ToString::to_string).collect();
            if names != *removed {
                return Err(reject("removed set differs from the cut at the anchor"));
            }
            let ids = cut_indices(&g, &cut).map_err(|e| reject(e.to_string()))?;
            let c = verify_cut(&g, &ids).map_err(|e| reject(e.to_string()))?;
            if (c.components_after, c.isolated_after, c.certifies)
                != (*components_after, *isolated_after, *certifies)
            {
                return Err(reject(format!(
                    "recomputed {} components, {} isolated, certifies {}",
                    c.components_after, c.isolated_after, c.certifies
                )));
            }
            Ok(format!(
                "{spec}: {} components after removing {} vertices",
                c.components_after,
                ids.len()
            ))
        }
    }
}
