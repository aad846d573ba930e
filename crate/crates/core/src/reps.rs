//! Real representations of U(2) as canonical multisets of irreducible summands.
//!
//! `V_{j,k} = S^j E ⊗ L^k` is the irreducible complex module with `L = Λ²E`.
//! Its realification is isomorphic to that of its conjugate `V_{j,-j-k}`, so a
//! realified summand is stored with `2k + j < 0`. When `2k + j = 0` the module
//! is `C ⊗ A_i` (`j = 2i`) and its realification splits as `A_i ⊕ A_i`.

use std::cmp::{Ordering, Reverse};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("negative parameter {name} = {value}")]
    NegativeParameter { name: &'static str, value: i64 },
    #[error("unsupported dimension {0} (supported: 1..=7)")]
    UnsupportedDim(usize),
    #[error("cannot parse representation {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// One irreducible real summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Summand {
    /// `A_i`, real dimension `2i + 1`; `A_0 = R`.
    RealForm(u32),
    /// Underlying real module of `V_{j,k}`, real dimension `2j + 2`.
    Realified { j: u32, k: i64 },
}

impl Summand {
    pub fn dim(&self) -> usize {
        match *self {
            Summand::RealForm(i) => 2 * i as usize + 1,
            Summand::Realified { j, .. } => 2 * j as usize + 2,
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Summand::RealForm(0))
    }

    /// Weights of the summand's complex form: `V_{j,k}` itself for realified
    /// summands (without conjugates), `V_{2i,-i}` for `A_i`.
    pub fn complex_weights(&self) -> Vec<Weight> {
        match *self {
            Summand::RealForm(i) => {
                let i = i as i64;
                (0..=2 * i).map(|r| Weight::new(i - r, r - i)).collect()
            }
            Summand::Realified { j, k } => {
                let j = j as i64;
                (0..=j).map(|r| Weight::new(j - r + k, r + k)).collect()
            }
        }
    }

    fn sort_key(&self) -> (u8, Reverse<u32>, i64) {
        match *self {
            Summand::RealForm(0) => (2, Reverse(0), 0),
            Summand::RealForm(i) => (0, Reverse(i), 0),
            Summand::Realified { j, k } => (1, Reverse(j), k),
        }
    }
}

impl Ord for Summand {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Summand {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Summand::RealForm(0) => write!(f, "R"),
            Summand::RealForm(i) => write!(f, "A{i}"),
            Summand::Realified { j: 0, k } => write!(f, "L({k})"),
            Summand::Realified { j: 1, k } => write!(f, "E({k})"),
            Summand::Realified { j: 2, k } => write!(f, "A1xL({})", k + 1),
            Summand::Realified { j, k } => write!(f, "V({j},{k})"),
        }
    }
}

/// Uncanonicalized summand as a caller writes it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RawSummand {
    RealForm(i64),
    Realified(i64, i64),
    Trivial,
    /// `L^r = V_{0,r}`
    LPower(i64),
    /// `L^s ⊗ E = V_{1,s}`
    ETensorL(i64),
    /// `A_1 ⊗_R L^s ≅ V_{2,s-1}`
    A1TensorL(i64),
}

/// Torus weight `alpha·x1 + beta·x2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub alpha: i64,
    pub beta: i64,
}

impl Weight {
    pub fn new(alpha: i64, beta: i64) -> Self {
        Weight { alpha, beta }
    }

    pub fn negated(self) -> Self {
        Weight::new(-self.alpha, -self.beta)
    }
}

/// A real U(2)-module in canonical form. Equality is multiset equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealRep {
    summands: Vec<Summand>,
}

fn push_canonical(out: &mut Vec<Summand>, j: i64, k: i64) -> Result<(), RepError> {
    if j < 0 {
        return Err(RepError::NegativeParameter { name: "j", value: j });
    }
    let twist = 2 * k + j;
    match twist.cmp(&0) {
        Ordering::Less => out.push(Summand::Realified { j: j as u32, k }),
        Ordering::Greater => out.push(Summand::Realified { j: j as u32, k: -j - k }),
        Ordering::Equal => {
            let i = (j / 2) as u32;
            out.push(Summand::RealForm(i));
            out.push(Summand::RealForm(i));
        }
    }
    Ok(())
}

/// Canonical form of a list of summands.
pub fn canonicalize(raw: &[RawSummand]) -> Result<RealRep, RepError> {
    let mut out = Vec::with_capacity(raw.len());
    for s in raw {
        match *s {
            RawSummand::RealForm(i) if i < 0 => return Err(RepError::NegativeParameter { name: "i", value: i }),
            RawSummand::RealForm(i) => out.push(Summand::RealForm(i as u32)),
            RawSummand::Trivial => out.push(Summand::RealForm(0)),
            RawSummand::Realified(j, k) => push_canonical(&mut out, j, k)?,
            RawSummand::LPower(r) => push_canonical(&mut out, 0, r)?,
            RawSummand::ETensorL(s) => push_canonical(&mut out, 1, s)?,
            RawSummand::A1TensorL(s) => push_canonical(&mut out, 2, s - 1)?,
        }
    }
    out.sort();
    Ok(RealRep { summands: out })
}

impl RealRep {
    /// Builds from summands that are already individually canonical.
    fn from_sorted(summands: Vec<Summand>) -> Self {
        RealRep { summands }
    }

    /// Re-canonicalizes arbitrary summands (e.g. `Realified` with `2k + j ≥ 0`).
    pub fn from_summands(summands: &[Summand]) -> Self {
        let raw: Vec<RawSummand> = summands
            .iter()
            .map(|s| match *s {
                Summand::RealForm(i) => RawSummand::RealForm(i as i64),
                Summand::Realified { j, k } => RawSummand::Realified(j as i64, k),
            })
            .collect();
        canonicalize(&raw).expect("summand parameters are non-negative by type")
    }

    pub fn trivial(dim: usize) -> Self {
        RealRep { summands: vec![Summand::RealForm(0); dim] }
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn dim(&self) -> usize {
        self.summands.iter().map(Summand::dim).sum()
    }

    /// Direct sum.
    pub fn sum(&self, other: &RealRep) -> RealRep {
        let mut s = self.summands.clone();
        s.extend_from_slice(&other.summands);
        s.sort();
        RealRep { summands: s }
    }

    /// True when the centre of U(2) acts trivially, i.e. the module comes from SO(3).
    pub fn factors_through_so3(&self) -> bool {
        self.summands.iter().all(|s| matches!(s, Summand::RealForm(_)))
    }

    pub fn has_real_form_summand(&self) -> bool {
        self.summands.iter().any(|s| matches!(s, Summand::RealForm(_)))
    }

    /// Weights of `V ⊗ C`, sorted. A realified `V_{j,k}` contributes its weights
    /// and their negatives; `A_i` contributes the weights of `V_{2i,-i}`.
    pub fn complexified_weights(&self) -> Vec<Weight> {
        let mut out = Vec::new();
        for s in &self.summands {
            let ws = s.complex_weights();
            if let Summand::Realified { .. } = s {
                out.extend(ws.iter().map(|w| w.negated()));
            }
            out.extend(ws);
        }
        out.sort();
        out
    }
}

impl fmt::Display for RealRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        for (n, s) in self.summands.iter().enumerate() {
            if n > 0 {
                write!(f, "+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

fn parse_token(tok: &str) -> Result<RawSummand, String> {
    let int = |s: &str| s.trim().parse::<i64>().map_err(|e| format!("bad integer {s:?}: {e}"));
    let args = |rest: &str| -> Result<String, String> {
        rest.strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .map(str::to_owned)
            .ok_or_else(|| format!("expected parenthesized argument in {tok:?}"))
    };
    if tok == "R" {
        return Ok(RawSummand::Trivial);
    }
    if let Some(rest) = tok.strip_prefix("A1xL") {
        return Ok(RawSummand::A1TensorL(int(&args(rest)?)?));
    }
    if let Some(rest) = tok.strip_prefix('A') {
        return Ok(RawSummand::RealForm(int(rest)?));
    }
    if let Some(rest) = tok.strip_prefix('L') {
        return Ok(RawSummand::LPower(int(&args(rest)?)?));
    }
    if let Some(rest) = tok.strip_prefix('E') {
        return Ok(RawSummand::ETensorL(int(&args(rest)?)?));
    }
    if let Some(rest) = tok.strip_prefix('V') {
        let a = args(rest)?;
        let (j, k) = a.split_once(',').ok_or_else(|| format!("V needs two arguments in {tok:?}"))?;
        return Ok(RawSummand::Realified(int(j)?, int(k)?));
    }
    Err(format!("unknown summand {tok:?}"))
}

/// Parses `A1+L(2)+L(-1)+R`-style expressions.
///
/// Tokens: `R`, `A<i>`, `L(<k>)`, `E(<s>)`, `A1xL(<s>)` and `V(<j>,<k>)` for a
/// general realified `V_{j,k}`. Whitespace is ignored.
pub fn parse_rep(input: &str) -> Result<RealRep, RepError> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |reason: String| RepError::Parse { input: input.to_owned(), reason };
    if compact.is_empty() {
        return Err(err("empty expression".into()));
    }
    // Split on '+' outside parentheses; a '+' inside "L(+2)" belongs to the number.
    let mut tokens = Vec::new();
    let (mut depth, mut start) = (0usize, 0usize);
    for (i, c) in compact.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1).ok_or_else(|| err("unbalanced ')'".into()))?,
            '+' if depth == 0 => {
                tokens.push(&compact[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    tokens.push(&compact[start..]);
    let raw = tokens
        .into_iter()
        .map(|t| if t.is_empty() { Err("empty summand".to_string()) } else { parse_token(t) })
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    canonicalize(&raw)
}

impl FromStr for RealRep {
    type Err = RepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rep(s)
    }
}

/// Canonical irreducible summands of dimension at most `dim` whose `k` (for
/// some representative of the conjugate pair) satisfies `|k| ≤ k_bound`.
fn candidate_summands(dim: usize, k_bound: i64) -> Vec<Summand> {
    let mut out = Vec::new();
    for i in 0..=dim as u32 {
        if 2 * (i as usize) < dim {
            out.push(Summand::RealForm(i));
        }
    }
    for j in 0..=dim as i64 {
        if 2 * j as usize + 2 > dim {
            break;
        }
        for k in (-j - k_bound)..=k_bound {
            if 2 * k + j < 0 && k.abs().min((j + k).abs()) <= k_bound {
                out.push(Summand::Realified { j: j as u32, k });
            }
        }
    }
    out.sort();
    out
}

/// All canonical real representations of real dimension `dim` with realified
/// parameters bounded by `k_bound`, in a deterministic order.
pub fn enumerate_reps(dim: usize, k_bound: u32) -> Result<Vec<RealRep>, RepError> {
    if !(1..=7).contains(&dim) {
        return Err(RepError::UnsupportedDim(dim));
    }
    let candidates = candidate_summands(dim, k_bound as i64);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(cands: &[Summand], from: usize, left: usize, stack: &mut Vec<Summand>, out: &mut Vec<RealRep>) {
        if left == 0 {
            out.push(RealRep::from_sorted(stack.clone()));
            return;
        }
        for (idx, s) in cands.iter().enumerate().skip(from) {
            if s.dim() <= left {
                stack.push(*s);
                rec(cands, idx, left - s.dim(), stack, out);
                stack.pop();
            }
        }
    }
    rec(&candidates, 0, dim, &mut stack, &mut out);
    Ok(out)
}
