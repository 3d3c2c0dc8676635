//! JSON shapes for models, verdicts, certificates and antichain reports.
//! Every document carries `"schema": 1` and unknown fields are rejected.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;
use wqoim_core::antichains::{PairOutcome, Report};
use wqoim_core::cographs::BasicTag;
use wqoim_core::decompose::{GemCertificate, GemComponent, K4HatCertificate, SubdivisionBase};
use wqoim_core::dichotomy::{FilterReport, NotWqoReason, WqoVerdict};
use wqoim_core::{ContainmentModel, VertexSet};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("certificate is for '{found}', expected '{expected}'")]
    Kind { expected: String, found: String },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    Vertex { v: usize, n: usize },
    #[error("vertex {0} listed twice")]
    Repeated(usize),
    #[error("missing field '{0}'")]
    Missing(&'static str),
    #[error("unknown value '{value}' for '{field}'")]
    Value { field: &'static str, value: String },
}

/// Pattern vertex to host vertices.
pub type ModelJson = BTreeMap<usize, Vec<usize>>;

pub fn model_json(m: &ContainmentModel) -> ModelJson {
    m.branch_sets.iter().enumerate().map(|(i, s)| (i, s.to_vec())).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContainsJson {
    pub schema: u32,
    pub relation: String,
    /// `contained`, `absent` or `unknown`.
    pub result: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FilterJson {
    pub linear_forest: bool,
    pub r1: bool,
    pub r2: bool,
    pub r3: bool,
    pub r4: bool,
    pub r5: bool,
    pub r6: bool,
}

impl From<FilterReport> for FilterJson {
    fn from(f: FilterReport) -> FilterJson {
        FilterJson { linear_forest: f.linear_forest, r1: f.r1, r2: f.r2, r3: f.r3, r4: f.r4, r5: f.r5, r6: f.r6 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReasonJson {
    pub rule: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictJson {
    pub schema: u32,
    /// `wqo` or `not-wqo`.
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reasons: Vec<ReasonJson>,
    pub filter: FilterJson,
}

pub fn verdict_json(v: &WqoVerdict, filter: FilterReport) -> VerdictJson {
    let filter = filter.into();
    match v {
        WqoVerdict::Wqo { witness, model } => VerdictJson {
            schema: SCHEMA,
            verdict: "wqo".into(),
            witness: Some(witness.name().into()),
            model: Some(model_json(model)),
            reasons: vec![],
            filter,
        },
        WqoVerdict::NotWqo { reasons } => VerdictJson {
            schema: SCHEMA,
            verdict: "not-wqo".into(),
            witness: None,
            model: None,
            reasons: reasons
                .iter()
                .map(|r| match r {
                    NotWqoReason::NoWitness => ReasonJson { rule: "no-witness".into(), family: None },
                    NotWqoReason::Rule { rule, family } => {
                        ReasonJson { rule: rule.name().into(), family: Some(family.name().into()) }
                    }
                })
                .collect(),
            filter,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentJson {
    pub vertices: Vec<usize>,
    /// `cograph` or `path`.
    pub tag: String,
}

/// One shape for both certificate kinds; which fields appear depends on
/// `kind` and `case`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub schema: u32,
    /// `k4hat` or `gem`.
    pub kind: String,
    /// For `k4hat`: `k4-free`, `subdivision` or `cycle-multipartite`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch_map: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<Vec<usize>>>,
    #[serde(rename = "X", default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentJson>>,
}

fn base_from_name(s: &str) -> Result<SubdivisionBase, JsonError> {
    SubdivisionBase::ALL
        .into_iter()
        .find(|b| b.name() == s)
        .ok_or_else(|| JsonError::Value { field: "base", value: s.into() })
}

fn tag_name(t: BasicTag) -> &'static str {
    match t {
        BasicTag::Cograph => "cograph",
        BasicTag::Degree2Path => "path",
    }
}

fn tag_from_name(s: &str) -> Result<BasicTag, JsonError> {
    match s {
        "cograph" => Ok(BasicTag::Cograph),
        "path" => Ok(BasicTag::Degree2Path),
        _ => Err(JsonError::Value { field: "tag", value: s.into() }),
    }
}

/// Checks ids against `n` and collects them.
fn vertex_set(ids: &[usize], n: usize) -> Result<VertexSet, JsonError> {
    let mut s = VertexSet::EMPTY;
    for &v in ids {
        if v >= n {
            return Err(JsonError::Vertex { v, n });
        }
        if s.contains(v) {
            return Err(JsonError::Repeated(v));
        }
        s.insert(v);
    }
    Ok(s)
}

impl CertificateJson {
    fn check_header(&self, kind: &str) -> Result<(), JsonError> {
        if self.schema != SCHEMA {
            return Err(JsonError::Schema(self.schema));
        }
        if self.kind != kind {
            return Err(JsonError::Kind { expected: kind.into(), found: self.kind.clone() });
        }
        Ok(())
    }

    pub fn from_k4hat(c: &K4HatCertificate) -> CertificateJson {
        let mut out = CertificateJson { schema: SCHEMA, kind: "k4hat".into(), ..Default::default() };
        match c {
            K4HatCertificate::K4Free => out.case = Some("k4-free".into()),
            K4HatCertificate::SubdivisionOf { base, branch_map } => {
                out.case = Some("subdivision".into());
                out.base = Some(base.name().into());
                out.branch_map = Some(branch_map.clone());
            }
            K4HatCertificate::CycleMultipartite { cycle, m, parts } => {
                out.case = Some("cycle-multipartite".into());
                out.cycle = Some(cycle.clone());
                out.m = Some(m.to_vec());
                out.parts = Some(parts.iter().map(|p| p.to_vec()).collect());
            }
        }
        out
    }

    /// Rebuilds the certificate for a graph on `n` vertices.
    pub fn to_k4hat(&self, n: usize) -> Result<K4HatCertificate, JsonError> {
        self.check_header("k4hat")?;
        let case = self.case.as_deref().ok_or(JsonError::Missing("case"))?;
        match case {
            "k4-free" => Ok(K4HatCertificate::K4Free),
            "subdivision" => {
                let base = base_from_name(self.base.as_deref().ok_or(JsonError::Missing("base"))?)?;
                let branch_map = self.branch_map.clone().ok_or(JsonError::Missing("branch_map"))?;
                vertex_set(&branch_map, n)?;
                Ok(K4HatCertificate::SubdivisionOf { base, branch_map })
            }
            "cycle-multipartite" => {
                let cycle = self.cycle.clone().ok_or(JsonError::Missing("cycle"))?;
                vertex_set(&cycle, n)?;
                let m = vertex_set(self.m.as_deref().ok_or(JsonError::Missing("m"))?, n)?;
                let parts = self
                    .parts
                    .as_deref()
                    .ok_or(JsonError::Missing("parts"))?
                    .iter()
                    .map(|p| vertex_set(p, n))
                    .collect::<Result<_, _>>()?;
                Ok(K4HatCertificate::CycleMultipartite { cycle, m, parts })
            }
            other => Err(JsonError::Value { field: "case", value: other.into() }),
        }
    }

    pub fn from_gem(c: &GemCertificate) -> CertificateJson {
        CertificateJson {
            schema: SCHEMA,
            kind: "gem".into(),
            x: Some(c.x.to_vec()),
            components: Some(
                c.components
                    .iter()
                    .map(|k| ComponentJson { vertices: k.vertices.to_vec(), tag: tag_name(k.tag).into() })
                    .collect(),
            ),
            ..Default::default()
        }
    }

    pub fn to_gem(&self, n: usize) -> Result<GemCertificate, JsonError> {
        self.check_header("gem")?;
        let x = vertex_set(self.x.as_deref().ok_or(JsonError::Missing("X"))?, n)?;
        let components = self
            .components
            .as_deref()
            .ok_or(JsonError::Missing("components"))?
            .iter()
            .map(|c| Ok(GemComponent { vertices: vertex_set(&c.vertices, n)?, tag: tag_from_name(&c.tag)? }))
            .collect::<Result<_, JsonError>>()?;
        Ok(GemCertificate { x, components })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PreconditionJson {
    pub schema: u32,
    /// `not-biconnected` or `pattern-found`.
    pub error: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cut_vertex: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pattern: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairJson {
    pub pattern: usize,
    pub host: usize,
    /// `incomparable`, `comparable` or `unknown`.
    pub outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportJson {
    pub schema: u32,
    pub family: String,
    pub indices: Vec<usize>,
    pub all_incomparable: bool,
    pub pairs: Vec<PairJson>,
}

impl From<&Report> for ReportJson {
    fn from(r: &Report) -> ReportJson {
        ReportJson {
            schema: SCHEMA,
            family: r.family.name().into(),
            indices: r.indices.clone(),
            all_incomparable: r.all_incomparable(),
            pairs: r
                .pairs
                .iter()
                .map(|p| {
                    let (outcome, model) = match &p.outcome {
                        PairOutcome::Incomparable => ("incomparable", None),
                        PairOutcome::Comparable(m) => ("comparable", Some(model_json(m))),
                        PairOutcome::Unknown => ("unknown", None),
                    };
                    PairJson { pattern: p.pattern, host: p.host, outcome: outcome.into(), model }
                })
                .collect(),
        }
    }
}
