//! Decisions that make sense in both dimensions, and the U(2) lift bookkeeping
//! shared by the 6- and 7-dimensional reduction theorems.

use super::{expect_dim, member, spin_q1, DecideError, Decision, Run};
use crate::charclass::CoeffProfile;
use crate::cohomodel::{BundleDescriptor, SpincManifold};
use crate::fga::FgaElement;
use crate::scalar::Scalar;

fn expect_6_or_7<T: Scalar>(m: &SpincManifold<T>, op: &'static str) -> Result<(), DecideError> {
    if m.dim() == 6 {
        Ok(())
    } else {
        expect_dim(m, op, 7)
    }
}

/// A rank-2 complex bundle with `c1 = l`, `c2 = u` exists whenever `l` lifts `w2(M)`.
pub fn exists_u2<T: Scalar>(m: &SpincManifold<T>, l: &FgaElement<T>, u: &FgaElement<T>) -> Result<Decision<T>, DecideError> {
    expect_6_or_7(m, "exists_u2")?;
    let model = m.model();
    member(model.h(2)?, l, "l")?;
    member(model.h(4)?, u, "u")?;
    let mut run = Run::new("exists_u2");
    let rl = model.reduce2(2, l)?;
    run.require(rl == *m.w2(), format!("ρ2(l) = {rl} differs from w2(M) = {}", m.w2()));
    if run.failed() {
        return Ok(run.finish(false));
    }
    run.note("every u is c2 of a U(2)-bundle with c1 = l once l lifts w2(M)");
    run.witness("c1", 2, l.clone());
    run.witness("c2", 4, u.clone());
    Ok(run.finish(true))
}

/// `(l, u, v)` are the Chern classes of a rank-3 complex bundle iff
/// `Sq²ρ2(u) + ρ2(l u) = ρ2(v)`.
pub fn exists_u3<T: Scalar>(
    m: &SpincManifold<T>,
    l: &FgaElement<T>,
    u: &FgaElement<T>,
    v: &FgaElement<T>,
) -> Result<Decision<T>, DecideError> {
    expect_6_or_7(m, "exists_u3")?;
    let model = m.model();
    member(model.h(2)?, l, "l")?;
    member(model.h(4)?, u, "u")?;
    member(model.h(6)?, v, "v")?;
    let mut run = Run::new("exists_u3");
    let h6_2 = model.h2(6)?;
    let sq = model.sq2(4)?.apply(&model.reduce2(4, u)?);
    let lu = model.reduce2(6, &model.product(2, 4, l, u)?)?;
    let lhs = h6_2.add(&sq, &lu);
    let rhs = model.reduce2(6, v)?;
    run.note(format!("Sq²ρ2(u) = {sq}, ρ2(lu) = {lu}, sum = {lhs}"));
    run.note(format!("ρ2(v) = {rhs}"));
    let holds = lhs == rhs;
    if holds {
        run.witness("c1", 2, l.clone());
        run.witness("c2", 4, u.clone());
        run.witness("c3", 6, v.clone());
    }
    Ok(run.finish(holds))
}

/// Half of the `l²` coefficient in the U(2) criteria: `(b-1)/2` for odd `b`, `b/2` for even.
pub(crate) fn half_b<T: Scalar>(b: &T) -> T {
    if b.is_odd() {
        (b.clone() - T::one()) / T::of(2)
    } else {
        b.clone() / T::of(2)
    }
}

/// `x = q1(ξ; l) - ½(b-1) l²` (odd `b`) or `q1(ξ) - ½ b l²` (even `b`).
///
/// `Ok(None)` means the decision is already settled; the reason is in `run`.
/// In the odd case `ρ2(l) = w2(ξ)` is part of the criterion, in the even case
/// it is a hypothesis and `w2(ξ) = 0` is part of the criterion.
pub(crate) fn u2_target<T: Scalar>(
    run: &mut Run<T>,
    m: &SpincManifold<T>,
    xi: &BundleDescriptor<T>,
    prof: &CoeffProfile<T>,
    l: &FgaElement<T>,
) -> Result<Option<FgaElement<T>>, DecideError> {
    let model = m.model();
    let h4 = model.h(4)?;
    let rl = model.reduce2(2, l)?;
    let h = half_b(&prof.b);
    let l2 = model.cup22(l, l)?;
    let q = if prof.b_is_odd() {
        run.note(format!("b(V) = {} odd", prof.b));
        if rl != *xi.w2() {
            run.note(format!("ρ2(l) = {rl} is not w2(ξ) = {}", xi.w2()));
            return Ok(None);
        }
        let q = m.q1_at(xi, l)?;
        run.note(format!("q1(ξ; l) = {q}"));
        q
    } else {
        run.note(format!("b(V) = {} even", prof.b));
        if !run.require(rl == *xi.w2(), format!("ρ2(l) = {rl} differs from w2(ξ) = {}", xi.w2())) {
            return Ok(None);
        }
        if !model.h2(2)?.is_zero(xi.w2()) {
            run.note("even b(V) needs ξ and M spin, but w2(ξ) ≠ 0");
            return Ok(None);
        }
        let q = spin_q1(m, xi)?;
        run.note(format!("q1(ξ) = {q}"));
        q
    };
    let x = h4.sub(&q, &h4.scale(&h, &l2));
    run.note(format!("l² = {l2}, target q1 - {h}·l² = {x}"));
    Ok(Some(x))
}
