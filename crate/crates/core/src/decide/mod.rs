//! Decision procedures for existence, isomorphism and structure-group
//! reduction of rank 6/7 bundles over spin^c 6- and 7-manifolds.
//!
//! Every procedure is total: it answers `holds`, reports `criterion false`, or
//! lists the hypotheses that were not met. Existential answers carry
//! witnesses, and each witness is substituted back into its defining equation
//! before the decision is returned.

mod common;
mod seven;
mod six;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Number, Value};
use thiserror::Error;

use crate::charclass::CharClassError;
use crate::cohomodel::{BundleDescriptor, ModelError, SpincManifold};
use crate::fga::{FgaElement, FgaGroup};
use crate::scalar::Scalar;

pub use common::{exists_u2, exists_u3};
pub use seven::{
    g2_reduce, iso_7, prop_7u3, reduce_so3_7, reduce_u2_7, sections_7, so3_collapse, so3_enumerate, sp1_menu, So3Witness,
    SP1_CASES,
};
pub use six::{cor6_cases, iso_6, reduce_u2_6};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecideError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    CharClass(#[from] CharClassError),
    #[error("{op} needs a {expected}-dimensional manifold, the model has dimension {got}")]
    Dimension { op: &'static str, expected: usize, got: usize },
    #[error("{0}")]
    Argument(String),
    #[error("representation {0} does not factor through SO(3)")]
    NotSo3(String),
    #[error("profile with a(V) = 0 but c(V) = {0}; canonical representations never produce this")]
    DegenerateProfile(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    HypothesisFailure,
}

impl Verdict {
    /// 0 = holds, 1 = criterion false, 2 = hypotheses not met.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Holds => 0,
            Verdict::Fails => 1,
            Verdict::HypothesisFailure => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::HypothesisFailure => "hypothesis failure",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<T> {
    pub degree: usize,
    pub value: FgaElement<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision<T> {
    pub holds: bool,
    pub witnesses: BTreeMap<String, Witness<T>>,
    pub hypothesis_failures: Vec<String>,
    pub trace: Vec<String>,
}

/// Labelled sub-decisions, as returned by the case menus.
pub type Cases<T> = Vec<(&'static str, Decision<T>)>;

impl<T: Scalar> Decision<T> {
    pub fn verdict(&self) -> Verdict {
        if !self.hypothesis_failures.is_empty() {
            Verdict::HypothesisFailure
        } else if self.holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn witness(&self, name: &str) -> Option<&FgaElement<T>> {
        self.witnesses.get(name).map(|w| &w.value)
    }

    pub fn to_json(&self) -> Value {
        let witnesses: Map<String, Value> = self
            .witnesses
            .iter()
            .map(|(k, w)| (k.clone(), json!({"degree": w.degree, "value": element_json(&w.value)})))
            .collect();
        json!({
            "holds": self.holds,
            "verdict": self.verdict().as_str(),
            "witnesses": witnesses,
            "hypothesis_failures": self.hypothesis_failures,
            "trace": self.trace,
        })
    }
}

/// Coordinates as exact JSON integers.
pub fn element_json<T: Scalar>(x: &FgaElement<T>) -> Value {
    Value::Array(x.coords().iter().map(|c| Value::Number(Number::from_str(&c.to_string()).expect("integer literal"))).collect())
}

pub fn cases_json<T: Scalar>(cases: &Cases<T>) -> Value {
    Value::Object(cases.iter().map(|(k, d)| (k.to_string(), d.to_json())).collect())
}

/// Accumulates trace, witnesses and hypothesis failures for one decision.
pub(crate) struct Run<T> {
    d: Decision<T>,
}

impl<T: Scalar> Run<T> {
    pub(crate) fn new(op: &str) -> Self {
        Run {
            d: Decision { holds: false, witnesses: BTreeMap::new(), hypothesis_failures: Vec::new(), trace: vec![op.to_string()] },
        }
    }

    pub(crate) fn note(&mut self, line: impl Into<String>) {
        self.d.trace.push(line.into());
    }

    /// Records a hypothesis failure unless `ok`.
    pub(crate) fn require(&mut self, ok: bool, what: impl Into<String>) -> bool {
        if !ok {
            self.d.hypothesis_failures.push(what.into());
        }
        ok
    }

    pub(crate) fn failed(&self) -> bool {
        !self.d.hypothesis_failures.is_empty()
    }

    pub(crate) fn witness(&mut self, name: &str, degree: usize, value: FgaElement<T>) {
        self.d.witnesses.insert(name.to_string(), Witness { degree, value });
    }

    pub(crate) fn finish(mut self, holds: bool) -> Decision<T> {
        self.d.holds = holds && self.d.hypothesis_failures.is_empty();
        let v = self.d.verdict();
        self.d.trace.push(format!("=> {v}"));
        self.d
    }
}

pub(crate) fn expect_dim<T: Scalar>(m: &SpincManifold<T>, op: &'static str, expected: usize) -> Result<(), DecideError> {
    if m.dim() != expected {
        return Err(DecideError::Dimension { op, expected, got: m.dim() });
    }
    Ok(())
}

/// Fails loudly when a witness does not satisfy its equation.
pub(crate) fn resubstitute(ok: bool, what: &str) -> Result<(), DecideError> {
    if ok {
        Ok(())
    } else {
        Err(DecideError::Internal(format!("witness re-substitution failed: {what}")))
    }
}

pub(crate) fn member<T: Scalar>(g: &FgaGroup<T>, x: &FgaElement<T>, what: &str) -> Result<(), DecideError> {
    if g.contains(x) {
        Ok(())
    } else {
        Err(DecideError::Argument(format!("{what} = {x} is not an element of {g}")))
    }
}

/// Common hypothesis block: `rank ξ = dim M` and `w2(ξ) = w2(M)`.
pub(crate) fn bundle_hypotheses<T: Scalar>(run: &mut Run<T>, m: &SpincManifold<T>, xi: &BundleDescriptor<T>) {
    run.require(xi.rank() == m.dim(), format!("rank of ξ is {}, expected {}", xi.rank(), m.dim()));
    run.require(xi.w2() == m.w2(), format!("w2(ξ) = {} differs from w2(M) = {}", xi.w2(), m.w2()));
}

/// The spin class `q1(ξ) = q1(ξ; 0)`; only meaningful when `w2(ξ) = 0`.
pub(crate) fn spin_q1<T: Scalar>(m: &SpincManifold<T>, xi: &BundleDescriptor<T>) -> Result<FgaElement<T>, DecideError> {
    let zero = m.model().h(2)?.zero();
    Ok(m.q1_at(xi, &zero)?)
}

/// `x ∈ {y, -y}`.
pub(crate) fn plus_minus<T: Scalar>(g: &FgaGroup<T>, x: &FgaElement<T>, y: &FgaElement<T>) -> bool {
    x == y || *x == g.neg(y)
}
