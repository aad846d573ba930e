//! Criteria over closed spin^c 6-manifolds.

use super::common::u2_target;
use super::{bundle_hypotheses, expect_dim, member, plus_minus, resubstitute, spin_q1, Cases, DecideError, Decision, Run};
use crate::charclass::coeff_profile;
use crate::cohomodel::{BundleDescriptor, SpincManifold};
use crate::fga::{FgaElement, FgaHom};
use crate::reps::RealRep;
use crate::scalar::Scalar;

/// Rank-6 bundles with equal `w2` are isomorphic iff `q1` agree at a common
/// lift and `e(ξ) = ±e(ξ')`.
pub fn iso_6<T: Scalar>(
    m: &SpincManifold<T>,
    xi: &BundleDescriptor<T>,
    other: &BundleDescriptor<T>,
    l: Option<&FgaElement<T>>,
) -> Result<Decision<T>, DecideError> {
    expect_dim(m, "iso_6", 6)?;
    let mut run = Run::new("iso_6");
    run.require(xi.rank() == 6 && other.rank() == 6, "both bundles must have rank 6");
    run.require(xi.w2() == other.w2(), format!("w2(ξ) = {} differs from w2(ξ') = {}", xi.w2(), other.w2()));
    let l = l.unwrap_or(xi.l_ref()).clone();
    member(m.model().h(2)?, &l, "l")?;
    run.require(m.is_lift_of(&l, xi.w2())?, format!("l = {l} does not lift w2(ξ)"));
    if run.failed() {
        return Ok(run.finish(false));
    }
    let q = m.q1_at(xi, &l)?;
    let q_other = m.q1_at(other, &l)?;
    let (e, e_other) = (xi.euler().expect("rank 6"), other.euler().expect("rank 6"));
    let same_e = plus_minus(m.model().h(6)?, e, e_other);
    run.note(format!("common lift l = {l}: q1(ξ; l) = {q}, q1(ξ'; l) = {q_other}"));
    run.note(format!("e(ξ) = {e}, e(ξ') = {e_other}: {}", if same_e { "equal up to sign" } else { "not ±-equal" }));
    run.witness("l", 2, l);
    Ok(run.finish(q == q_other && same_e))
}

/// U(2)-structure through a 6-dimensional representation `V` with `c1 = l`:
/// one `u ∈ H⁴` has to satisfy both the `q1` equation and the Euler equation.
pub fn reduce_u2_6<T: Scalar>(
    m: &SpincManifold<T>,
    xi: &BundleDescriptor<T>,
    v: &RealRep,
    l: &FgaElement<T>,
) -> Result<Decision<T>, DecideError> {
    expect_dim(m, "reduce_u2_6", 6)?;
    let model = m.model();
    member(model.h(2)?, l, "l")?;
    let mut run = Run::new("reduce_u2_6");
    bundle_hypotheses(&mut run, m, xi);
    run.require(v.dim() == 6, format!("V = {v} has dimension {}, expected 6", v.dim()));
    if run.failed() {
        return Ok(run.finish(false));
    }
    let prof = coeff_profile::<T>(v)?;
    let (c, d) = (prof.c.clone().expect("dim 6"), prof.d.clone().expect("dim 6"));
    run.note(format!("V = {v}: {prof}"));
    let Some(x) = u2_target(&mut run, m, xi, &prof, l)? else {
        return Ok(run.finish(false));
    };
    let h4 = model.h(4)?;
    let h6 = model.h(6)?;
    let e = xi.euler().expect("rank 6").clone();
    let l3 = model.cube(l)?;
    let euler_of = |u: &FgaElement<T>| -> Result<FgaElement<T>, DecideError> {
        let lu = model.product(2, 4, l, u)?;
        Ok(h6.add(&h6.scale(&c, &lu), &h6.scale(&d, &l3)))
    };
    // q1 = h·l² - a·u, i.e. a·u = -x
    let target = h4.neg(&x);
    let candidates: Vec<FgaElement<T>> = if prof.a.is_zero() {
        if !c.is_zero() {
            return Err(DecideError::DegenerateProfile(c.to_string()));
        }
        if !h4.is_zero(&x) {
            run.note("a(V) = 0: q1 must equal the l² term exactly, and it does not");
            return Ok(run.finish(false));
        }
        run.note("a(V) = 0: q1 matches exactly, u is free");
        vec![h4.zero()]
    } else {
        let Some(sol) = FgaHom::scalar(h4.clone(), &prof.a).solve(&target) else {
            run.note(format!("{}·u = {target} has no solution", prof.a));
            return Ok(run.finish(false));
        };
        let mut all: Vec<FgaElement<T>> = h4.n_torsion(&prof.a).iter().map(|k| h4.add(&sol.particular, k)).collect();
        all.sort();
        all.dedup();
        run.note(format!("{}·u = {target}: {} solution(s) u0 + ker", prof.a, all.len()));
        all
    };
    for u in candidates {
        let eu = euler_of(&u)?;
        if plus_minus(h6, &e, &eu) {
            resubstitute(h4.is_zero(&h4.add(&x, &h4.scale(&prof.a, &u))), "q1 = h·l² - a·u")?;
            resubstitute(plus_minus(h6, &e, &euler_of(&u)?), "±e = c·lu + d·l³")?;
            run.note(format!("u = {u}: c·lu + d·l³ = {eu} = ±e(ξ)"));
            run.witness("l", 2, l.clone());
            run.witness("u", 4, u);
            return Ok(run.finish(true));
        }
        run.note(format!("u = {u}: c·lu + d·l³ = {eu} ≠ ±{e}"));
    }
    Ok(run.finish(false))
}

/// The seven special structures on a rank-6 bundle over a 6-manifold.
/// `l` defaults to `l_ref`.
pub fn cor6_cases<T: Scalar>(
    m: &SpincManifold<T>,
    xi: &BundleDescriptor<T>,
    l: Option<&FgaElement<T>>,
) -> Result<Cases<T>, DecideError> {
    expect_dim(m, "cor6_cases", 6)?;
    let model = m.model();
    let (h2_2, h4, h6) = (model.h2(2)?, model.h(4)?, model.h(6)?);
    let l = l.unwrap_or(xi.l_ref()).clone();
    member(model.h(2)?, &l, "l")?;
    let lift_ok = m.is_lift_of(&l, xi.w2())?;

    let labels = ["1", "2", "3", "4", "5", "6", "7"];
    let mut out: Cases<T> = Vec::new();
    let mut runs: Vec<Run<T>> = labels
        .iter()
        .map(|k| {
            let mut run = Run::new(&format!("cor6_cases({k})"));
            bundle_hypotheses(&mut run, m, xi);
            run.require(lift_ok, format!("l = {l} does not lift w2(ξ)"));
            run
        })
        .collect();
    if runs[0].failed() {
        return Ok(labels.into_iter().zip(runs).map(|(k, r)| (k, r.finish(false))).collect());
    }

    let q = m.q1_at(xi, &l)?;
    let e = xi.euler().expect("rank 6").clone();
    let w4 = m.w4_of_bundle(xi)?;
    let p1 = m.p1_of_bundle(xi)?;
    let spin = h2_2.is_zero(xi.w2());
    let q_spin = if spin { Some(spin_q1(m, xi)?) } else { None };
    let e0 = h6.is_zero(&e);
    let w40 = model.h2(4)?.is_zero(&w4);
    for r in runs.iter_mut() {
        r.note(format!("l = {l}, q1(ξ; l) = {q}, e = {e}, w4 = {w4}, p1 = {p1}, w2(ξ) = {}", xi.w2()));
    }
    let mut it = runs.into_iter();
    let mut next = || it.next().expect("seven cases");

    // (1) ξ is a rank-3 complex bundle with c = (l, -q1(ξ; l), e)
    let mut r = next();
    r.witness("c1", 2, l.clone());
    r.witness("c2", 4, h4.neg(&q));
    r.witness("c3", 6, e.clone());
    out.push(("1", r.finish(true)));

    // (2) ξ ≅ η ⊕ R²
    let mut r = next();
    if e0 {
        r.witness("c1", 2, l.clone());
        r.witness("c2", 4, h4.neg(&q));
    }
    out.push(("2", r.finish(e0)));

    // (3) ξ ≅ α ⊕ R³
    out.push(("3", next().finish(e0 && w40)));

    // (4) ξ ≅ α ⊕ α, α spin
    let mut r = next();
    let four = T::of(4);
    let u4 = q_spin.as_ref().and_then(|qs| h4.in_multiple(qs, &four));
    if let (Some(u), Some(qs)) = (&u4, &q_spin) {
        resubstitute(h4.scale(&four, u) == *qs, "4u = q1(ξ)")?;
        r.note(format!("q1(ξ) = {qs} = 4·{u}"));
        r.witness("u", 4, u.clone());
    } else if !spin {
        r.note("w2(ξ) ≠ 0");
    }
    out.push(("4", r.finish(spin && e0 && u4.is_some())));

    // (5) ξ ≅ S²α
    let mut r = next();
    let five = T::of(5);
    let u5 = h4.in_multiple(&p1, &five);
    if let Some(u) = &u5 {
        resubstitute(h4.scale(&five, u) == p1, "5u = p1(ξ)")?;
        r.witness("u", 4, u.clone());
    }
    out.push(("5", r.finish(e0 && w40 && u5.is_some())));

    // (6) ξ ≅ λ ⊕ R⁴ with c1(λ) = l
    let mut r = next();
    let holds6 = e0 && h4.is_zero(&q);
    if holds6 {
        r.witness("l", 2, l.clone());
    }
    out.push(("6", r.finish(holds6)));

    // (7) ξ trivial
    let r = next();
    let holds7 = spin && e0 && q_spin.as_ref().is_some_and(|qs| h4.is_zero(qs));
    out.push(("7", r.finish(holds7)));
    Ok(out)
}
