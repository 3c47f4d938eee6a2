//! JSON wire formats for representations and witnesses.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::decomposition::{BoxRepresentation, Coloring, ColoringMode, Interval, Rational};
use crate::graph::{Graph, GraphError};
use crate::representation::{Family, Representation};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("factor {factor}: {source}")]
    Factor { factor: usize, source: GraphError },
    #[error("bad interval endpoint {0}")]
    Endpoint(String),
    #[error("bad vertex key {0:?}")]
    VertexKey(String),
    #[error("no intervals for vertex {0}")]
    MissingVertex(usize),
    #[error("interval for vertex {vertex} is not a pair")]
    NotAPair { vertex: usize },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FactorJson {
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RepresentationJson {
    family: Family,
    n: usize,
    factors: Vec<FactorJson>,
}

pub fn representation_to_json(rep: &Representation, n: usize) -> Value {
    let doc = RepresentationJson {
        family: rep.family,
        n,
        factors: rep
            .factors
            .iter()
            .map(|f| FactorJson {
                edges: f.edges().collect(),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("plain data")
}

/// Parses a representation; every factor is built on the declared `n`.
pub fn parse_representation(text: &str) -> Result<(usize, Representation), JsonError> {
    let doc: RepresentationJson = serde_json::from_str(text)?;
    let factors = doc
        .factors
        .into_iter()
        .enumerate()
        .map(|(i, f)| {
            Graph::from_edges(doc.n, f.edges)
                .map_err(|source| JsonError::Factor { factor: i, source })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((doc.n, Representation::new(doc.family, factors)))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ColoringJson {
    mode: ColoringMode,
    colors: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    num_colors: Option<usize>,
}

pub fn coloring_to_json(c: &Coloring) -> Value {
    serde_json::to_value(ColoringJson {
        mode: c.mode,
        colors: c.colors.clone(),
        num_colors: Some(c.num_colors),
    })
    .expect("plain data")
}

/// `num_colors` defaults to one more than the largest colour used.
pub fn parse_coloring(text: &str) -> Result<Coloring, JsonError> {
    let doc: ColoringJson = serde_json::from_str(text)?;
    let mut c = Coloring::new(doc.mode, doc.colors);
    if let Some(k) = doc.num_colors {
        c.num_colors = k;
    }
    Ok(c)
}

fn endpoint_to_json(r: &Rational) -> Value {
    if *r.denom() == 1 {
        Value::from(*r.numer())
    } else {
        Value::from(format!("{}/{}", r.numer(), r.denom()))
    }
}

fn parse_endpoint(v: &Value) -> Result<Rational, JsonError> {
    let bad = || JsonError::Endpoint(v.to_string());
    match v {
        Value::Number(x) => x.as_i64().map(Rational::from_integer).ok_or_else(bad),
        Value::String(s) => {
            let (p, q) = match s.split_once('/') {
                Some((p, q)) => (p.trim(), q.trim()),
                None => (s.trim(), "1"),
            };
            let p: i64 = p.parse().map_err(|_| bad())?;
            let q: i64 = q.parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        _ => Err(bad()),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct BoxesJson {
    k: usize,
    intervals: BTreeMap<String, Vec<Vec<Value>>>,
}

pub fn boxes_to_json(b: &BoxRepresentation) -> Value {
    let intervals: serde_json::Map<String, Value> = b
        .intervals
        .iter()
        .enumerate()
        .map(|(u, sides)| {
            let sides: Vec<Value> = sides
                .iter()
                .map(|i| Value::Array(vec![endpoint_to_json(&i.lo), endpoint_to_json(&i.hi)]))
                .collect();
            (u.to_string(), Value::Array(sides))
        })
        .collect();
    serde_json::json!({ "k": b.k, "intervals": intervals })
}

/// Parses boxes for vertices `0..n`; endpoints are integers or `"p/q"`.
/// Dimension mismatches are left to the validator.
pub fn parse_boxes(text: &str, n: usize) -> Result<BoxRepresentation, JsonError> {
    let doc: BoxesJson = serde_json::from_str(text)?;
    let mut intervals: Vec<Option<Vec<Interval>>> = vec![None; n];
    for (key, sides) in doc.intervals {
        let u: usize = key.parse().map_err(|_| JsonError::VertexKey(key.clone()))?;
        if u >= n {
            return Err(JsonError::VertexKey(key));
        }
        let parsed = sides
            .iter()
            .map(|pair| match pair.as_slice() {
                [lo, hi] => Ok(Interval {
                    lo: parse_endpoint(lo)?,
                    hi: parse_endpoint(hi)?,
                }),
                _ => Err(JsonError::NotAPair { vertex: u }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        intervals[u] = Some(parsed);
    }
    let intervals = intervals
        .into_iter()
        .enumerate()
        .map(|(u, s)| s.ok_or(JsonError::MissingVertex(u)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BoxRepresentation {
        k: doc.k,
        intervals,
    })
}
