//! Criteria over closed spin^c 7-manifolds.

use super::common::{half_b, u2_target};
use super::{bundle_hypotheses, expect_dim, member, resubstitute, spin_q1, Cases, DecideError, Decision, Run};
use crate::charclass::coeff_profile;
use crate::cohomodel::{BundleDescriptor, SpincManifold};
use crate::fga::FgaElement;
use crate::reps::RealRep;
use crate::scalar::Scalar;

/// Largest `|H²/a H²|` the SO(3) enumeration path will walk.
const MAX_ENUMERATION: u64 = 1 << 20;

/// Two rank-7 bundles with the same `w2` are isomorphic iff their `q1` agree
/// at a common lift. The lift defaults to `l_ref` of `xi`.
pub fn iso_7<T: Scalar>(
    m: &SpincManifold<T>,
    xi: &BundleDescriptor<T>,
    other: &BundleDescriptor<T>,
    l: Option<&FgaElement<T>>,
) -> Result<Decision<T>, DecideError> {
    expect_dim(m, "iso_7", 7)?;
    let mut run = Run::new("iso_7");
    run.require(xi.rank() == 7 && other.rank() == 7, "both bundles must have rank 7");
    run.require(xi.w2() == other.w2(), format!("w2(ξ) = {} differs from w2(ξ') = {}", xi.w2(), other.w2()));
    let l = l.unwrap_or(xi.l_ref()).clone();
    member(m.model().h(2)?, &l, "l")?;
    run.require(m.is_lift_of(&l, xi.w2())?, format!("l = {l} does not lift w2(ξ)"));
    if run.failed() {
        return Ok(run.finish(false));
    }
    let q = m.q1_at(xi, &l)?;
    let q_other = m.q1_at(other, &l)?;
    run.note(format!("common lift l = {l}: q1(ξ; l) = {q}, q1(ξ'; l) = {q_other}"));
    run.witness("l", 2, l);
    Ok(run.finish(q == q_other))
}

/// U(2)-structure through a 7-dimensional representation `V` with `c1 = l`.
pub fn reduce_u2_7<T: Scalar>(
    m: &SpincManifold<T>,
    xi: &BundleDescriptor<T>,
    v: &RealRep,
    l: &FgaElement<T>,
) -> Result<Decision<T>, DecideError> {
    expect_dim(m, "reduce_u2_7", 7)?;
    let model = m.model();
    member(model.h(2)?, l, "l")?;
    let mut run = Run::new("reduce_u2_7");
    bundle_hypotheses(&mut run, m, xi);
    run.require(v.dim() == 7, format!("V = {v} has dimension {}, expected 7", v.dim()));
    if run.failed() {
        return Ok(run.finish(false));
    }
    let prof = coeff_profile::<T>(v)?;
    run.note(format!("V = {v}: {prof}"));
    let Some(x) = u2_target(&mut run, m, xi, &prof, l)? else {
        return Ok(run.finish(false));
    };
    let h4 = model.h(4)?;
    match h4.in_multiple(&x, &prof.a) {
        Some(u) => {
            resubstitute(h4.scale(&prof.a, &u) == x, "a(V)·u = target")?;
            run.note(format!("target = {}·u with u = {u}", prof.a));
            run.witness("l", 2, l.clone());
            run.witness("u", 4, u);
            Ok(run.finish(true))
        }
        None => {
            run.note(format!("target ∉ {}·H⁴", prof.a));
            Ok(run.finish(false))
        }
    }
}

/// Result of the SO(3) enumeration: the lexicographically least class that works.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct So3Witness<T> {
    /// `m` with `l = 2m` (even `b`) or `l = l0 + 2m` (odd `b`).
    pub m: FgaElement<T>,
    /// `u` with `target = a(V)·u`.
    pub u: FgaElement<T>,
}

struct So3Setup<T> {
    a: T,
    b: T,
    b_odd: bool,
    /// Base lift: 0 for even `b`, `l0` (or `l_ref`) for odd `b`.
    base: FgaElement<T>,
}

fn so3_setup<T: Scalar>(m: &SpincManifold<T>, xi: &BundleDescriptor<T>, v: &RealRep) -> Result<So3Setup<T>, DecideError> {
    expect_dim(m, "reduce_so3_7", 7)?;
    if !v.factors_through_so3() {
        return Err(DecideError::NotSo3(v.to_string()));
    }
    if v.dim() != 7 {
        return Err(DecideError::Argument(format!("V = {v} has dimension {}, expected 7", v.dim())));
    }
    let prof = coeff_profile::<T>(v)?;
    let model = m.model();
    let base = if prof.b_is_odd() {
        m.l0().cloned().unwrap_or_else(|| xi.l_ref().clone())
    } else {
        if !model.h2(2)?.is_zero(xi.w2()) {
            return Err(DecideError::Argument("even b(V) needs w2(ξ) = 0".into()));
        }
        model.h(2)?.zero()
    };
    Ok(So3Setup { b_odd: prof.b_is_odd(), a: prof.a, b: prof.b, base })
}

/// `q1(ξ; l) - ½(b-1) l²` at `l = base + 2m` (odd) or `q1(ξ) - a·m²` (even).
fn so3_target<T: Scalar>(
    m: &SpincManifold<T>,
    xi: &BundleDescriptor<T>,
    s: &So3Setup<T>,
    shift: &FgaElement<T>,
) -> Result<FgaElement<T>, DecideError> {
    let model = m.model();
    let h2 = model.h(2)?;
    let h4 = model.h(4)?;
    if s.b_odd {
        let l = h2.add(&s.base, &h2.scale(&T::of(2), shift));
        let l2 = model.cup22(&l, &l)?;
        Ok(h4.sub(&m.q1_at(xi, &l)?, &h4.scale(&half_b(&s.b), &l2)))
    } else {
        let mm = model.cup22(shift, shift)?;
        Ok(h4.sub(&spin_q1(m, xi)?, &h4.scale(&s.a, &mm)))
    }
}

/// Fast path: the existential over `m` (or over the lift) collapses to a
/// single membership test, because every candidate differs from the base
/// target by an element of `a(V)·H⁴`.
pub fn so3_collapse<T: Scalar>(m: &SpincManifold<T>, xi: &BundleDescriptor<T>, v: &RealRep) -> Result<bool, DecideError> {
    let s = so3_setup(m, xi, v)?;
    let zero = m.model().h(2)?.zero();
    let x = so3_target(m, xi, &s, &zero)?;
    Ok(m.model().h(4)?.in_multiple(&x, &s.a).is_some())
}

/// Slow path: walks `m` over representatives of `H²/a(V)H²` (lifts `base + 2m`
/// modulo `2a(V)H²` in the odd case) and returns the least one that works.
/// `Ok(None)` also when the quotient is too large to walk; see
/// [`so3_quotient_size`].
pub fn so3_enumerate<T: Scalar>(
    m: &SpincManifold<T>,
    xi: &BundleDescriptor<T>,
    v: &RealRep,
) -> Result<Option<So3Witness<T>>, DecideError> {
    let s = so3_setup(m, xi, v)?;
    let h2 = m.model().h(2)?;
    let h4 = m.model().h(4)?;
    // a = 0 only for R⁷: the m-term vanishes identically.
    let reps = if s.a.is_zero() {
        vec![h2.zero()]
    } else {
        if so3_quotient_size(h2, &s.a).is_none_or(|n| n > MAX_ENUMERATION) {
            return Err(DecideError::Argument(format!("H²/{}H² is too large to enumerate", s.a)));
        }
        h2.quotient_reps(&s.a).map_err(|e| DecideError::Internal(e.to_string()))?
    };
    for shift in reps {
        let x = so3_target(m, xi, &s, &shift)?;
        if let Some(u) = h4.in_multiple(&x, &s.a) {
            return Ok(Some(So3Witness { m: shift, u }));
        }
    }
    Ok(None)
}

fn so3_quotient_size<T: Scalar>(h2: &crate::fga::FgaGroup<T>, a: &T) -> Option<u64> {
    let mut n: u64 = a.to_u64()?.checked_pow(h2.rank() as u32)?;
    for d in h2.torsion() {
        n = n.checked_mul(a.gcd(d).to_u64()?)?;
    }
    Some(n)
}

/// SO(3)-structure through a representation trivial on the centre of U(2).
/// Both the collapse and the enumeration are run and must agree.
pub fn reduce_so3_7<T: Scalar>(m: &SpincManifold<T>, xi: &BundleDescriptor<T>, v: &RealRep) -> Result<Decision<T>, DecideError> {
    expect_dim(m, "reduce_so3_7", 7)?;
    if !v.factors_through_so3() {
        return Err(DecideError::NotSo3(v.to_string()));
    }
    let mut run = Run::new("reduce_so3_7");
    bundle_hypotheses(&mut run, m, xi);
    run.require(v.dim() == 7, format!("V = {v} has dimension {}, expected 7", v.dim()));
    if run.failed() {
        return Ok(run.finish(false));
    }
    let prof = coeff_profile::<T>(v)?;
    run.note(format!("V = {v}: {prof}"));
    let model = m.model();
    if !prof.b_is_odd() && !model.h2(2)?.is_zero(xi.w2()) {
        run.note("b(V) even forces ξ and M spin, but w2(ξ) ≠ 0");
        return Ok(run.finish(false));
    }
    if prof.b_is_odd() {
        match m.l0() {
            Some(l0) => run.note(format!("odd b(V): base lift l0 = {l0}")),
            None => run.note(format!("odd b(V): no stored l0, base lift l_ref = {}", xi.l_ref())),
        }
    } else {
        run.note("even b(V): l = 2m, q1(ξ) - a(V)m² ∈ a(V)H⁴");
    }
    let fast = so3_collapse(m, xi, v)?;
    run.note(format!("collapse: {}", if fast { "member" } else { "not a member" }));
    let slow = match so3_enumerate(m, xi, v) {
        Ok(w) => Some(w),
        Err(DecideError::Argument(msg)) => {
            run.note(format!("enumeration skipped: {msg}"));
            None
        }
        Err(e) => return Err(e),
    };
    if let Some(w) = &slow {
        if w.is_some() != fast {
            return Err(DecideError::Internal(format!("SO(3) collapse ({fast}) and enumeration ({}) disagree", w.is_some())));
        }
        run.note("enumeration over H²/a(V)H² agrees");
    }
    if !fast {
        return Ok(run.finish(false));
    }
    let h2 = model.h(2)?;
    let h4 = model.h(4)?;
    let s = so3_setup(m, xi, v)?;
    let (shift, u) = match slow.flatten() {
        Some(w) => (w.m, w.u),
        None => {
            let zero = h2.zero();
            let x = so3_target(m, xi, &s, &zero)?;
            (zero, h4.in_multiple(&x, &s.a).expect("collapse said member"))
        }
    };
    let x = so3_target(m, xi, &s, &shift)?;
    resubstitute(h4.scale(&s.a, &u) == x, "a(V)·u = target")?;
    if s.b_odd {
        run.witness("l", 2, h2.add(&s.base, &h2.scale(&T::of(2), &shift)));
    } else {
        run.witness("m", 2, shift);
    }
    run.witness("u", 4, u);
    Ok(run.finish(true))
}

/// Case labels and divisors of the Sp(1)-reduction menu.
pub const SP1_CASES: [(&str, i64); 7] = [("i", 0), ("ii", 1), ("iii", 2), ("iv", 3), ("v", 4), ("vi", 10), ("vii", 28)];

/// For a spin rank-7 bundle over a spin 7-manifold: in which of the seven
/// cases is `q1(ξ)` divisible by the listed integer (0 meaning `q1 = 0`).
pub fn sp1_menu<T: Scalar>(m: &SpincManifold<T>, xi: &BundleDescriptor<T>) -> Result<Cases<T>, DecideError> {
    expect_dim(m, "sp1_menu", 7)?;
    let model = m.model();
    let h4 = model.h(4)?;
    let spin_xi = model.h2(2)?.is_zero(xi.w2());
    let q = if spin_xi { Some(spin_q1(m, xi)?) } else { None };
    let mut out = Vec::new();
    for (label, n) in SP1_CASES {
        let mut run = Run::new(&format!("sp1_menu({label}): divisible by {n}"));
        run.require(xi.rank() == 7, format!("rank of ξ is {}, expected 7", xi.rank()));
        run.require(spin_xi, "ξ is not spin (w2(ξ) ≠ 0)");
        run.require(m.is_spin(), "M is not spin (w2(M) ≠ 0)");
        let Some(q) = q.as_ref().filter(|_| !run.failed()) else {
            out.push((label, run.finish(false)));
            continue;
        };
        run.note(format!("q1(ξ) = {q}"));
        let n = T::of(n);
        let decision = match h4.in_multiple(q, &n) {
            Some(u) => {
                resubstitute(h4.scale(&n, &u) == *q, "n·u = q1(ξ)")?;
                run.witness("u", 4, u);
                run.finish(true)
            }
            None => run.finish(false),
        };
        out.push((label, decision));
    }
    Ok(out)
}

/// G2-structure: every spin rank-7 bundle over a spin 7-manifold splits as
/// `R³ ⊕ μ` and carries a Cayley multiplication.
pub fn g2_reduce<T: Scalar>(m: &SpincManifold<T>, xi: &BundleDescriptor<T>) -> Result<Decision<T>, DecideError> {
    expect_dim(m, "g2_reduce", 7)?;
    let model = m.model();
    let mut run = Run::new("g2_reduce");
    run.require(xi.rank() == 7, format!("rank of ξ is {}, expected 7", xi.rank()));
    run.require(model.h2(2)?.is_zero(xi.w2()), "ξ is not spin (w2(ξ) ≠ 0)");
    run.require(m.is_spin(), "M is not spin (w2(M) ≠ 0)");
    run.note("ξ ≅ R³ ⊕ μ with μ a quaternionic line bundle (divisible-by-1 case of the Sp(1) menu)");
    Ok(run.finish(true))
}

/// `k` linearly independent sections of a rank-7 bundle, `k ≤ 4`.
pub fn sections_7<T: Scalar>(m: &SpincManifold<T>, xi: &BundleDescriptor<T>, k: u32) -> Result<Decision<T>, DecideError> {
    expect_dim(m, "sections_7", 7)?;
    if !(1..=4).contains(&k) {
        return Err(DecideError::Argument(format!("sections_7 decides k in 1..=4, got {k}")));
    }
    let mut run = Run::new(&format!("sections_7(k = {k})"));
    bundle_hypotheses(&mut run, m, xi);
    if run.failed() {
        return Ok(run.finish(false));
    }
    if k <= 3 {
        run.note("ξ ≅ η ⊕ R³ always");
        return Ok(run.finish(true));
    }
    let w4 = m.w4_of_bundle(xi)?;
    run.note(format!("w4(ξ) = ρ2 q1(ξ; l_ref) = {w4}"));
    Ok(run.finish(m.model().h2(4)?.is_zero(&w4)))
}

/// For `v ∈ 2H⁶` there is a rank-3 complex `ζ` with Chern classes `(l, u, v)`;
/// `ξ ≅ ζ ⊕ R` iff `q1(ξ; l) = -u`.
pub fn prop_7u3<T: Scalar>(
    m: &SpincManifold<T>,
    xi: &BundleDescriptor<T>,
    l: &FgaElement<T>,
    u: &FgaElement<T>,
    v: &FgaElement<T>,
) -> Result<Decision<T>, DecideError> {
    expect_dim(m, "prop_7u3", 7)?;
    let model = m.model();
    member(model.h(2)?, l, "l")?;
    member(model.h(4)?, u, "u")?;
    member(model.h(6)?, v, "v")?;
    let mut run = Run::new("prop_7u3");
    bundle_hypotheses(&mut run, m, xi);
    run.require(m.is_lift_of(l, m.w2())?, format!("ρ2(l) differs from w2(M) for l = {l}"));
    let half_v = model.h(6)?.in_multiple(v, &T::of(2));
    run.require(half_v.is_some(), format!("v = {v} is not in 2H⁶"));
    if run.failed() {
        return Ok(run.finish(false));
    }
    let h4 = model.h(4)?;
    let q = m.q1_at(xi, l)?;
    run.note(format!("ζ exists with c = (l, u, v); q1(ξ; l) = {q}, -u = {}", h4.neg(u)));
    run.witness("c1", 2, l.clone());
    run.witness("c2", 4, u.clone());
    run.witness("c3", 6, v.clone());
    run.witness("v/2", 6, half_v.expect("checked"));
    Ok(run.finish(q == h4.neg(u)))
}
