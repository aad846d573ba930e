//! Regenerates the tables of U(2)-modules of real dimension 7 and 6 with their
//! coefficient profiles.

use super::{coeff_profile_raw, CharClassError, CoeffProfile};
use crate::reps::{canonicalize, RawSummand, RealRep};
use crate::scalar::Scalar;

/// A parametrized family of modules, e.g. `A1 + L^s + L^t`.
#[derive(Clone, Copy, Debug)]
pub struct Family {
    pub label: &'static str,
    pub params: &'static [&'static str],
    build: fn(&[i64]) -> Vec<RawSummand>,
}

impl Family {
    pub fn build(&self, params: &[i64]) -> Vec<RawSummand> {
        assert_eq!(params.len(), self.params.len(), "wrong number of parameters for {}", self.label);
        (self.build)(params)
    }

    /// Label with the parameters substituted, e.g. `A1+L^2+L^-1`.
    pub fn instantiate(&self, params: &[i64]) -> String {
        let mut out = String::new();
        let mut chars = self.label.chars().peekable();
        while let Some(c) = chars.next() {
            out.push(c);
            if c == '^' {
                if let Some(&p) = chars.peek() {
                    if let Some(idx) = self.params.iter().position(|n| n.starts_with(p)) {
                        chars.next();
                        out.push_str(&params[idx].to_string());
                    }
                }
            }
        }
        out
    }
}

use RawSummand::{ETensorL, LPower, RealForm, Trivial};

pub const SEVEN: [Family; 7] = [
    Family { label: "L^r+L^s+L^t+R", params: &["r", "s", "t"], build: |p| vec![LPower(p[0]), LPower(p[1]), LPower(p[2]), Trivial] },
    Family { label: "(L^s*E)+L^t+R", params: &["s", "t"], build: |p| vec![ETensorL(p[0]), LPower(p[1]), Trivial] },
    Family { label: "A1+L^s+L^t", params: &["s", "t"], build: |p| vec![RealForm(1), LPower(p[0]), LPower(p[1])] },
    Family { label: "A1+(L^s*E)", params: &["s"], build: |p| vec![RealForm(1), ETensorL(p[0])] },
    Family { label: "(A1xL^s)+R", params: &["s"], build: |p| vec![RawSummand::A1TensorL(p[0]), Trivial] },
    Family { label: "A2+L^s", params: &["s"], build: |p| vec![RealForm(2), LPower(p[0])] },
    Family { label: "A3", params: &[], build: |_| vec![RealForm(3)] },
];

pub const SIX: [Family; 5] = [
    Family { label: "L^r+L^s+L^t", params: &["r", "s", "t"], build: |p| vec![LPower(p[0]), LPower(p[1]), LPower(p[2])] },
    Family { label: "(L^s*E)+L^t", params: &["s", "t"], build: |p| vec![ETensorL(p[0]), LPower(p[1])] },
    Family { label: "A1+L^s+R", params: &["s"], build: |p| vec![RealForm(1), LPower(p[0]), Trivial] },
    Family { label: "A1xL^s", params: &["s"], build: |p| vec![RawSummand::A1TensorL(p[0])] },
    Family { label: "A2+R", params: &[], build: |_| vec![RealForm(2), Trivial] },
];

pub fn families(dim: usize) -> Option<&'static [Family]> {
    match dim {
        7 => Some(&SEVEN),
        6 => Some(&SIX),
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct TableRow<T> {
    pub family: &'static str,
    pub params: Vec<i64>,
    pub label: String,
    pub rep: RealRep,
    pub profile: CoeffProfile<T>,
}

fn param_grid(n: usize, range: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-range..=range).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

/// Every row of the dimension-`dim` table with parameters in `[-range, range]`.
/// Euler columns are oriented by the complex structures as written in the family.
pub fn table_rows<T: Scalar>(dim: usize, range: u32) -> Result<Vec<TableRow<T>>, CharClassError> {
    let fams = families(dim).ok_or(CharClassError::WrongDim { op: "table", expected: "6 or 7", got: dim })?;
    let mut rows = Vec::new();
    for fam in fams {
        for params in param_grid(fam.params.len(), range as i64) {
            let raw = fam.build(&params);
            let rep = canonicalize(&raw).expect("family parameters are valid");
            let profile = coeff_profile_raw(&raw)?;
            rows.push(TableRow { family: fam.label, label: fam.instantiate(&params), params, rep, profile });
        }
    }
    Ok(rows)
}
