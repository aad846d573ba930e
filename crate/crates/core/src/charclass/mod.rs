//! Characteristic classes of real U(2)-modules over `H*(BU(2)) = Z[l, u]`.
//!
//! Everything is computed on the maximal torus: a module's weights are linear
//! forms in `x1`, `x2`, and the resulting symmetric polynomials are rewritten in
//! `l = x1 + x2`, `u = x1·x2`.

mod poly;
pub mod table;

use thiserror::Error;

pub use poly::{ClassPolynomial, TorusPolynomial};

use crate::reps::{RawSummand, RealRep, Summand, Weight};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharClassError {
    #[error("{op} needs a representation of dimension {expected}, got {got}")]
    WrongDim { op: &'static str, expected: &'static str, got: usize },
    #[error("u-coefficient {0} of p1 is odd")]
    OddUCoefficient(String),
    #[error("symmetric rewrite failed for {0}")]
    NotSymmetric(String),
}

fn square_of(w: Weight) -> TorusPolynomial<i64> {
    let lin = TorusPolynomial::linear(w.alpha, w.beta);
    lin.mul(&lin)
}

fn to_scalar<T: Scalar>(p: &ClassPolynomial<i64>) -> ClassPolynomial<T> {
    let mut out = ClassPolynomial::zero();
    for (a, b, c) in p.terms() {
        out.add_term(T::of(*c), a, b);
    }
    out
}

/// `p1(V)` as `Σ_w (α x1 + β x2)² / 2` over the weights of `V ⊗ C`.
///
/// Halving the full sum is the same as summing over one weight of each
/// `±` pair, which is how `p1 = -c2(V ⊗ C)` reads when `c1(V ⊗ C) = 0`.
pub fn p1_of<T: Scalar>(v: &RealRep) -> ClassPolynomial<T> {
    let total = v
        .complexified_weights()
        .into_iter()
        .fold(TorusPolynomial::zero(), |acc, w| acc.add(&square_of(w)));
    let half = total.div_exact(&2).expect("sum of squares over a ±-closed weight set is even");
    to_scalar(&half.to_class_polynomial().expect("p1 is symmetric"))
}

/// Top Chern class of a list of complex summands `V_{j,k}`, oriented by their
/// complex structures in the given order.
fn top_chern(parts: &[(u32, i64)]) -> ClassPolynomial<i64> {
    let mut prod = TorusPolynomial::one();
    for &(j, k) in parts {
        for w in (Summand::Realified { j, k }).complex_weights() {
            prod = prod.mul(&TorusPolynomial::linear(w.alpha, w.beta));
        }
    }
    prod.to_class_polynomial().expect("product over full weight strings is symmetric")
}

/// Euler class of a 6-dimensional module.
///
/// Zero as soon as an `A_i` summand (odd real dimension) occurs. Otherwise the
/// product of the top Chern classes of the realified summands, each oriented by
/// its canonical complex structure `V_{j,k}` with `2k + j < 0`.
pub fn euler_of<T: Scalar>(v: &RealRep) -> Result<ClassPolynomial<T>, CharClassError> {
    if v.dim() != 6 {
        return Err(CharClassError::WrongDim { op: "euler_of", expected: "6", got: v.dim() });
    }
    if v.has_real_form_summand() {
        return Ok(ClassPolynomial::zero());
    }
    let parts: Vec<(u32, i64)> = v
        .summands()
        .iter()
        .map(|s| match *s {
            Summand::Realified { j, k } => (j, k),
            Summand::RealForm(_) => unreachable!(),
        })
        .collect();
    Ok(to_scalar(&top_chern(&parts)))
}

/// Euler class of a 6-dimensional module written as raw summands, oriented by
/// the complex structures exactly as written (no conjugation to canonical form).
pub fn euler_of_raw<T: Scalar>(raw: &[RawSummand]) -> Result<ClassPolynomial<T>, CharClassError> {
    let mut parts = Vec::new();
    let mut odd = false;
    let mut dim = 0usize;
    for s in raw {
        let (j, k) = match *s {
            RawSummand::RealForm(i) => {
                dim += 2 * i.max(0) as usize + 1;
                odd = true;
                continue;
            }
            RawSummand::Trivial => {
                dim += 1;
                odd = true;
                continue;
            }
            RawSummand::Realified(j, k) => (j, k),
            RawSummand::LPower(r) => (0, r),
            RawSummand::ETensorL(s) => (1, s),
            RawSummand::A1TensorL(s) => (2, s - 1),
        };
        dim += 2 * j.max(0) as usize + 2;
        parts.push((j.max(0) as u32, k));
    }
    if dim != 6 {
        return Err(CharClassError::WrongDim { op: "euler_of_raw", expected: "6", got: dim });
    }
    if odd {
        return Ok(ClassPolynomial::zero());
    }
    Ok(to_scalar(&top_chern(&parts)))
}

/// `(a, b, c, d)` with `p1 = -2a·u + b·l²` and, in dimension 6, `e = c·lu + d·l³`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffProfile<T> {
    pub a: T,
    pub b: T,
    pub c: Option<T>,
    pub d: Option<T>,
}

impl<T: Scalar> CoeffProfile<T> {
    pub fn p1(&self) -> ClassPolynomial<T> {
        ClassPolynomial::monomial(-T::of(2) * self.a.clone(), 0, 1).add(&ClassPolynomial::monomial(self.b.clone(), 2, 0))
    }

    pub fn euler(&self) -> Option<ClassPolynomial<T>> {
        Some(
            ClassPolynomial::monomial(self.c.clone()?, 1, 1)
                .add(&ClassPolynomial::monomial(self.d.clone()?, 3, 0)),
        )
    }

    pub fn b_is_odd(&self) -> bool {
        self.b.is_odd()
    }
}

impl<T: Scalar> std::fmt::Display for CoeffProfile<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "a={} b={}", self.a, self.b)?;
        if let (Some(c), Some(d)) = (&self.c, &self.d) {
            write!(f, " c={c} d={d}")?;
        }
        Ok(())
    }
}

fn profile_from<T: Scalar>(p1: &ClassPolynomial<T>, euler: Option<ClassPolynomial<T>>) -> Result<CoeffProfile<T>, CharClassError> {
    let u_coeff = p1.coeff(0, 1);
    if u_coeff.is_odd() {
        return Err(CharClassError::OddUCoefficient(u_coeff.to_string()));
    }
    Ok(CoeffProfile {
        a: -(u_coeff / T::of(2)),
        b: p1.coeff(2, 0),
        c: euler.as_ref().map(|e| e.coeff(1, 1)),
        d: euler.as_ref().map(|e| e.coeff(3, 0)),
    })
}

pub fn coeff_profile<T: Scalar>(v: &RealRep) -> Result<CoeffProfile<T>, CharClassError> {
    let euler = match v.dim() {
        6 => Some(euler_of(v)?),
        7 => None,
        got => return Err(CharClassError::WrongDim { op: "coeff_profile", expected: "6 or 7", got }),
    };
    profile_from(&p1_of(v), euler)
}

/// Profile with the Euler columns oriented as the raw summands are written.
pub fn coeff_profile_raw<T: Scalar>(raw: &[RawSummand]) -> Result<CoeffProfile<T>, CharClassError> {
    let v = crate::reps::canonicalize(raw).map_err(|e| CharClassError::NotSymmetric(e.to_string()))?;
    let euler = match v.dim() {
        6 => Some(euler_of_raw(raw)?),
        7 => None,
        got => return Err(CharClassError::WrongDim { op: "coeff_profile", expected: "6 or 7", got }),
    };
    profile_from(&p1_of(&v), euler)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// `q1` of a 6/7-dimensional module with the parity of `b`, which is also
/// `w2(V) = b·ρ2(l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinClass<T> {
    pub parity: Parity,
    /// `-a·u + b/2·l²` (even) or `-a·u + (b-1)/2·l²`, the latter taken at the lift `l`.
    pub poly: ClassPolynomial<T>,
}

impl<T: Scalar> SpinClass<T> {
    /// True when `w2(V) = ρ2(l)`, false when `w2(V) = 0`.
    pub fn w2_is_rho2_l(&self) -> bool {
        self.parity == Parity::Odd
    }
}

pub fn q1_poly_of<T: Scalar>(v: &RealRep) -> Result<SpinClass<T>, CharClassError> {
    let prof = coeff_profile::<T>(v)?;
    let (parity, half_b) = if prof.b.is_even() {
        (Parity::Even, prof.b.clone() / T::of(2))
    } else {
        (Parity::Odd, (prof.b.clone() - T::one()) / T::of(2))
    };
    let poly = ClassPolynomial::monomial(-prof.a, 0, 1).add(&ClassPolynomial::monomial(half_b, 2, 0));
    Ok(SpinClass { parity, poly })
}

/// A disagreement between the weight expansion and a closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormMismatch {
    pub rep: String,
    pub quantity: &'static str,
    pub expected: i64,
    pub computed: i64,
}

/// `b(A_i) = i(i+1)(2i+1)/6`.
pub fn b_real_form(i: i64) -> i64 {
    i * (i + 1) * (2 * i + 1) / 6
}

/// `a(V_{j,k}) = ½ Σ_{r=0..j} (j - 2r)² = j(j+1)(j+2)/6`, independent of `k`.
pub fn a_realified(j: i64) -> i64 {
    j * (j + 1) * (j + 2) / 6
}

/// `b(V_{j,k}) = Σ_{r=0..j} (r + k)²`.
pub fn b_realified(j: i64, k: i64) -> i64 {
    (0..=j).map(|r| (r + k) * (r + k)).sum()
}

/// Compares the weight expansion against the closed forms for `A_i`
/// (`i ≤ i_max`) and `rV_{j,k}` (`j ≤ j_max`, `|k| ≤ k_bound`).
pub fn closed_forms_check(i_max: u32, j_max: u32, k_bound: u32) -> Vec<ClosedFormMismatch> {
    let mut out = Vec::new();
    let mut check = |rep: &RealRep, quantity, expected: i64, computed: i64| {
        if expected != computed {
            out.push(ClosedFormMismatch { rep: rep.to_string(), quantity, expected, computed });
        }
    };
    for i in 0..=i_max as i64 {
        let v = crate::reps::canonicalize(&[RawSummand::RealForm(i)]).unwrap();
        let p1 = p1_of::<i64>(&v);
        let (a, b) = (-p1.coeff(0, 1) / 2, p1.coeff(2, 0));
        check(&v, "b(A_i)", b_real_form(i), b);
        check(&v, "a(A_i)", 2 * b_real_form(i), a);
    }
    let kb = k_bound as i64;
    for j in 0..=j_max as i64 {
        for k in -kb..=kb {
            let v = crate::reps::canonicalize(&[RawSummand::Realified(j, k)]).unwrap();
            let p1 = p1_of::<i64>(&v);
            let (a, b) = (-p1.coeff(0, 1) / 2, p1.coeff(2, 0));
            check(&v, "a(V_jk)", a_realified(j), a);
            check(&v, "b(V_jk)", b_realified(j, k), b);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::canonicalize;
    use proptest::prelude::*;

    type P = ClassPolynomial<i64>;

    fn rep(s: &str) -> RealRep {
        s.parse().unwrap()
    }

    fn lu(u: i64, l2: i64) -> P {
        P::monomial(u, 0, 1).add(&P::monomial(l2, 2, 0))
    }

    #[test]
    fn p1_examples() {
        // E ⊕ L^t ⊕ R with s = 0: a = 1, b = 0² + 1² + t².
        for t in -3..=3 {
            let v = canonicalize(&[RawSummand::ETensorL(0), RawSummand::LPower(t), RawSummand::Trivial]).unwrap();
            assert_eq!(p1_of::<i64>(&v), lu(-2, 1 + t * t));
        }
        assert_eq!(p1_of::<i64>(&rep("A3")), lu(-56, 14));
        assert!(p1_of::<i64>(&RealRep::trivial(7)).is_zero());
    }

    #[test]
    fn euler_examples() {
        let e = euler_of_raw::<i64>(&[RawSummand::ETensorL(2), RawSummand::LPower(3)]).unwrap();
        assert_eq!(e, P::monomial(3, 1, 1).add(&P::monomial(2 * 3 * 3, 3, 0)));
        assert!(euler_of::<i64>(&rep("A2+R")).unwrap().is_zero());
        for s in -3i64..=3 {
            let e = euler_of_raw::<i64>(&[RawSummand::A1TensorL(s)]).unwrap();
            assert_eq!(e, P::monomial(4 * s, 1, 1).add(&P::monomial((s * s - 1) * s, 3, 0)));
        }
        assert!(matches!(euler_of::<i64>(&rep("A3")), Err(CharClassError::WrongDim { .. })));
    }

    #[test]
    fn profile_examples() {
        let p = coeff_profile::<i64>(&rep("A2+R+R")).unwrap();
        assert_eq!((p.a, p.b, p.c), (10, 5, None));
        let p = coeff_profile::<i64>(&rep("A1+A1+R")).unwrap();
        assert_eq!((p.a, p.b), (4, 2));
        let p = coeff_profile::<i64>(&RealRep::trivial(6)).unwrap();
        assert_eq!((p.a, p.b, p.c, p.d), (0, 0, Some(0), Some(0)));
        assert!(coeff_profile::<i64>(&rep("A2")).is_err());
    }

    #[test]
    fn q1_examples() {
        let q = q1_poly_of::<i64>(&rep("A3")).unwrap();
        assert_eq!((q.parity, q.poly), (Parity::Even, lu(-28, 7)));
        let q = q1_poly_of::<i64>(&rep("A1+R+R+R+R")).unwrap();
        assert_eq!((q.parity, q.poly), (Parity::Odd, lu(-2, 0)));
        let q = q1_poly_of::<i64>(&RealRep::trivial(7)).unwrap();
        assert_eq!(q.parity, Parity::Even);
        assert!(q.poly.is_zero());
    }

    #[test]
    fn closed_forms_small() {
        assert!(closed_forms_check(3, 1, 1).is_empty());
        assert_eq!(b_real_form(1), 1);
        assert_eq!(b_real_form(2), 5);
        assert_eq!(b_real_form(3), 14);
        assert_eq!(b_real_form(0), 0);
        let v = canonicalize(&[RawSummand::Realified(1, -1)]).unwrap();
        let p = p1_of::<i64>(&v);
        assert_eq!((-p.coeff(0, 1) / 2, p.coeff(2, 0)), (1, 1));
        assert!(closed_forms_check(12, 8, 8).is_empty());
    }

    #[test]
    fn a_vanishes_implies_c_vanishes_in_dim_six() {
        for v in crate::reps::enumerate_reps(6, 8).unwrap() {
            let p = coeff_profile::<i64>(&v).unwrap();
            if p.a == 0 {
                assert_eq!(p.c, Some(0), "{v}");
            }
        }
    }

    fn arb_rep(max_dim: usize) -> impl Strategy<Value = RealRep> {
        let s = prop_oneof![
            (0i64..3).prop_map(RawSummand::RealForm),
            (0i64..3, -4i64..4).prop_map(|(j, k)| RawSummand::Realified(j, k)),
        ];
        proptest::collection::vec(s, 1..4)
            .prop_map(|raw| canonicalize(&raw).unwrap())
            .prop_filter("dimension bound", move |v| v.dim() <= max_dim)
    }

    proptest! {
        #[test]
        fn p1_is_additive(v in arb_rep(8), w in arb_rep(8)) {
            prop_assert_eq!(p1_of::<i64>(&v.sum(&w)), p1_of::<i64>(&v).add(&p1_of::<i64>(&w)));
        }

        #[test]
        fn a_nonnegative_and_zero_only_for_line_sums(v in arb_rep(10)) {
            let p = p1_of::<i64>(&v);
            let a = -p.coeff(0, 1);
            prop_assert!(a >= 0 && a % 2 == 0);
            let flat = v.summands().iter().all(|s| matches!(s, Summand::RealForm(0) | Summand::Realified { j: 0, .. }));
            prop_assert_eq!(a == 0, flat);
            prop_assert!(p.is_zero() || p.homogeneous_degree() == Some(4));
        }

        #[test]
        fn p1_conjugation_invariant(j in 0i64..5, k in -6i64..6) {
            let direct = top_weights_p1(j, k);
            let conj = top_weights_p1(j, -j - k);
            prop_assert_eq!(&direct, &conj);
            prop_assert_eq!(direct, p1_of::<i64>(&canonicalize(&[RawSummand::Realified(j, k)]).unwrap()));
        }

        #[test]
        fn euler_is_multiplicative(s in -3i64..3, t in -3i64..3, r in -3i64..3) {
            let lines = [RawSummand::LPower(r), RawSummand::LPower(s), RawSummand::LPower(t)];
            let whole = euler_of_raw::<i64>(&lines).unwrap();
            let parts = lines.iter().fold(P::constant(1), |acc, x| {
                let RawSummand::LPower(k) = *x else { unreachable!() };
                acc.mul(&P::monomial(k, 1, 0))
            });
            prop_assert_eq!(whole.clone(), parts.truncate(6));
            // canonical orientation agrees up to sign
            let canon = euler_of::<i64>(&canonicalize(&lines).unwrap()).unwrap();
            prop_assert!(canon == whole || canon == whole.neg());
        }
    }

    /// `Σ_r ((j-r+k)x1 + (r+k)x2)²` straight from the uncanonicalized weights.
    fn top_weights_p1(j: i64, k: i64) -> P {
        let mut t = TorusPolynomial::<i64>::zero();
        for r in 0..=j {
            t = t.add(&square_of(Weight::new(j - r + k, r + k)));
        }
        t.to_class_polynomial().unwrap()
    }
}
