//! JSON loading for manifold models, bundle descriptors and lifts.
//!
//! Integers are read from the literal digits (serde_json's arbitrary-precision
//! numbers), so values of any size survive. Homomorphisms are written as the
//! list of images of the source generators; `cup["p,q"][i][j]` is the
//! coordinate vector of `g_i ⌣ g_j`.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::Number;
use thiserror::Error;

use super::{BundleDescriptor, CohomologyModel, ModelError, SpincManifold};
use crate::fga::FgaGroup;
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("{path}: {message}")]
    Syntax { path: String, message: String },
    #[error("{path}: {message}")]
    Value { path: String, message: String },
    #[error(transparent)]
    Model(#[from] ModelError),
}

type Vector = Vec<Number>;
type Images = Vec<Vector>;
type Table = Vec<Vec<Vector>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    rank: usize,
    #[serde(default)]
    torsion: Vector,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    dim: usize,
    #[serde(rename = "H")]
    h: BTreeMap<String, RawGroup>,
    #[serde(rename = "H2mod2", default)]
    h2: BTreeMap<String, RawGroup>,
    #[serde(default)]
    rho2: BTreeMap<String, Images>,
    #[serde(default)]
    sq1: BTreeMap<String, Images>,
    #[serde(default)]
    sq2: BTreeMap<String, Images>,
    #[serde(default)]
    bockstein: BTreeMap<String, Images>,
    #[serde(default)]
    cup: BTreeMap<String, Table>,
    #[serde(default)]
    cup2: BTreeMap<String, Table>,
    #[serde(rename = "w2M")]
    w2m: Vector,
    #[serde(default)]
    l0: Option<Vector>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBundle {
    rank: usize,
    w2: Vector,
    l_ref: Vector,
    q1_ref: Vector,
    #[serde(default)]
    euler: Option<Vector>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawLift {
    Bare(Vector),
    Wrapped { l: Vector },
}

fn deserialize<'a, R: Deserialize<'a>>(text: &'a str) -> Result<R, JsonError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        JsonError::Syntax { path: if path == "." { "<root>".into() } else { path }, message: inner.to_string() }
    })
}

fn integer<T: Scalar>(n: &Number, path: &str) -> Result<T, JsonError> {
    let s = n.to_string();
    T::parse_decimal(&s).ok_or_else(|| JsonError::Value { path: path.into(), message: format!("{s} is not an integer") })
}

fn vector<T: Scalar>(v: &[Number], path: &str) -> Result<Vec<T>, JsonError> {
    v.iter().enumerate().map(|(i, n)| integer(n, &format!("{path}[{i}]"))).collect()
}

fn images<T: Scalar>(m: &Images, path: &str) -> Result<Vec<Vec<T>>, JsonError> {
    m.iter().enumerate().map(|(i, v)| vector(v, &format!("{path}[{i}]"))).collect()
}

fn table<T: Scalar>(t: &Table, path: &str) -> Result<Vec<Vec<Vec<T>>>, JsonError> {
    t.iter().enumerate().map(|(i, row)| images(row, &format!("{path}[{i}]"))).collect()
}

fn degree(key: &str, path: &str) -> Result<usize, JsonError> {
    key.trim()
        .parse()
        .map_err(|_| JsonError::Value { path: format!("{path}.\"{key}\""), message: "degree keys must be non-negative integers".into() })
}

fn bidegree(key: &str, path: &str) -> Result<(usize, usize), JsonError> {
    let bad = || JsonError::Value { path: format!("{path}.\"{key}\""), message: "bidegree keys look like \"2,4\"".into() };
    let (p, q) = key.split_once(',').ok_or_else(bad)?;
    Ok((p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
}

fn group<T: Scalar>(g: &RawGroup, path: &str) -> Result<FgaGroup<T>, JsonError> {
    let torsion = vector(&g.torsion, &format!("{path}.torsion"))?;
    FgaGroup::new(g.rank, torsion).map_err(|e| JsonError::Value { path: path.into(), message: e.to_string() })
}

/// Parses a manifold model file.
pub fn parse_manifold<T: Scalar>(text: &str) -> Result<SpincManifold<T>, JsonError> {
    let raw: RawModel = deserialize(text)?;
    let mut model = CohomologyModel::new(raw.dim).map_err(|e| JsonError::Value { path: "dim".into(), message: e.to_string() })?;
    for (key, g) in &raw.h {
        let k = degree(key, "H")?;
        model.set_integral(k, group(g, &format!("H.\"{key}\""))?)?;
    }
    for (key, g) in &raw.h2 {
        let k = degree(key, "H2mod2")?;
        model.set_mod2(k, group(g, &format!("H2mod2.\"{key}\""))?)?;
    }
    type Setter<T> = fn(&mut CohomologyModel<T>, usize, Vec<Vec<T>>) -> Result<(), ModelError>;
    let maps: [(&str, &BTreeMap<String, Images>, Setter<T>); 4] = [
        ("rho2", &raw.rho2, CohomologyModel::set_rho2),
        ("bockstein", &raw.bockstein, CohomologyModel::set_bockstein),
        ("sq1", &raw.sq1, CohomologyModel::set_sq1),
        ("sq2", &raw.sq2, CohomologyModel::set_sq2),
    ];
    for (name, entries, set) in maps {
        for (key, m) in entries {
            let k = degree(key, name)?;
            set(&mut model, k, images(m, &format!("{name}.\"{key}\""))?)?;
        }
    }
    for (key, t) in &raw.cup {
        let (p, q) = bidegree(key, "cup")?;
        model.set_cup(p, q, table(t, &format!("cup.\"{key}\""))?)?;
    }
    for (key, t) in &raw.cup2 {
        let (p, q) = bidegree(key, "cup2")?;
        model.set_cup2(p, q, table(t, &format!("cup2.\"{key}\""))?)?;
    }
    let w2m = vector(&raw.w2m, "w2M")?;
    let l0 = raw.l0.as_deref().map(|v| vector(v, "l0")).transpose()?;
    Ok(SpincManifold::new(model, w2m, l0)?)
}

/// Parses a bundle descriptor file against a manifold.
pub fn parse_bundle<T: Scalar>(m: &SpincManifold<T>, text: &str) -> Result<BundleDescriptor<T>, JsonError> {
    let raw: RawBundle = deserialize(text)?;
    Ok(BundleDescriptor::new(
        m,
        raw.rank,
        vector(&raw.w2, "w2")?,
        vector(&raw.l_ref, "l_ref")?,
        vector(&raw.q1_ref, "q1_ref")?,
        raw.euler.as_deref().map(|v| vector(v, "euler")).transpose()?,
    )?)
}

/// Parses a lift file: either a bare coordinate array or `{"l": [...]}`.
pub fn parse_lift<T: Scalar>(text: &str) -> Result<Vec<T>, JsonError> {
    match deserialize(text)? {
        RawLift::Bare(v) => vector(&v, "<root>"),
        RawLift::Wrapped { l } => vector(&l, "l"),
    }
}
