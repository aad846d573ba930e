use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// Graded polynomial in `l` (degree 2) and `u` (degree 4) over the integers.
///
/// Keys are `(p, q)` for the monomial `l^p u^q`; zero coefficients are never
/// stored, so the zero polynomial has an empty map.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ClassPolynomial<T> {
    coeffs: BTreeMap<(u32, u32), T>,
}

impl<T: Scalar> ClassPolynomial<T> {
    pub fn zero() -> Self {
        ClassPolynomial { coeffs: BTreeMap::new() }
    }

    pub fn monomial(c: T, l_pow: u32, u_pow: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, l_pow, u_pow);
        p
    }

    /// `l`
    pub fn l() -> Self {
        Self::monomial(T::one(), 1, 0)
    }

    /// `u`
    pub fn u() -> Self {
        Self::monomial(T::one(), 0, 1)
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn add_term(&mut self, c: T, l_pow: u32, u_pow: u32) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((l_pow, u_pow)).or_insert_with(T::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.coeffs.remove(&(l_pow, u_pow));
        }
    }

    /// Coefficient of `l^p u^q`.
    pub fn coeff(&self, l_pow: u32, u_pow: u32) -> T {
        self.coeffs.get(&(l_pow, u_pow)).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &T)> {
        self.coeffs.iter().map(|(&(p, q), c)| (p, q, c))
    }

    /// Cohomological degree of the monomial `l^p u^q`.
    pub fn monomial_degree(l_pow: u32, u_pow: u32) -> u32 {
        2 * l_pow + 4 * u_pow
    }

    /// The common degree, if the polynomial is non-zero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.coeffs.keys().map(|&(p, q)| Self::monomial_degree(p, q));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(p, q), c) in &other.coeffs {
            out.add_term(c.clone(), p, q);
        }
        out
    }

    pub fn neg(&self) -> Self {
        ClassPolynomial { coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero();
        for (&(p, q), v) in &self.coeffs {
            out.add_term(v.clone() * c.clone(), p, q);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(p1, q1), a) in &self.coeffs {
            for (&(p2, q2), b) in &other.coeffs {
                out.add_term(a.clone() * b.clone(), p1 + p2, q1 + q2);
            }
        }
        out
    }

    /// Drops every monomial of degree greater than `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Self {
        ClassPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&(p, q), _)| Self::monomial_degree(p, q) <= max_degree)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Exact division of every coefficient; `None` if some coefficient is not divisible.
    pub fn div_exact(&self, d: &T) -> Option<Self> {
        let mut out = Self::zero();
        for (&(p, q), c) in &self.coeffs {
            if !c.is_multiple_of(d) {
                return None;
            }
            out.add_term(c.clone() / d.clone(), p, q);
        }
        Some(out)
    }
}

impl<T: Scalar> fmt::Display for ClassPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // Highest u-power first: -56u + 14l^2, 4lu + 6l^3.
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by(|a, b| b.0 .1.cmp(&a.0 .1).then(a.0 .0.cmp(&b.0 .0)));
        for (n, (&(p, q), c)) in terms.into_iter().enumerate() {
            let mono = match (p, q) {
                (0, 0) => String::new(),
                _ => {
                    let part = |sym: &str, e: u32| match e {
                        0 => String::new(),
                        1 => sym.to_owned(),
                        e => format!("{sym}^{e}"),
                    };
                    format!("{}{}", part("l", p), part("u", q))
                }
            };
            let mag = c.abs();
            let coef = if mag.is_one() && !mono.is_empty() { String::new() } else { mag.to_string() };
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{coef}{mono}")?;
        }
        Ok(())
    }
}

/// Polynomial in the torus classes `x1`, `x2`; keys are `(a, b)` for `x1^a x2^b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorusPolynomial<T> {
    coeffs: BTreeMap<(u32, u32), T>,
}

impl<T: Scalar> TorusPolynomial<T> {
    pub fn zero() -> Self {
        TorusPolynomial { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_term(T::one(), 0, 0);
        p
    }

    /// The linear form `alpha·x1 + beta·x2`.
    pub fn linear(alpha: i64, beta: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(T::of(alpha), 1, 0);
        p.add_term(T::of(beta), 0, 1);
        p
    }

    pub fn add_term(&mut self, c: T, a: u32, b: u32) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((a, b)).or_insert_with(T::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.coeffs.remove(&(a, b));
        }
    }

    pub fn coeff(&self, a: u32, b: u32) -> T {
        self.coeffs.get(&(a, b)).cloned().unwrap_or_else(T::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &other.coeffs {
            out.add_term(c.clone(), a, b);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a1, b1), c1) in &self.coeffs {
            for (&(a2, b2), c2) in &other.coeffs {
                out.add_term(c1.clone() * c2.clone(), a1 + a2, b1 + b2);
            }
        }
        out
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.coeffs {
            out.add_term(c.clone() * k.clone(), a, b);
        }
        out
    }

    pub fn div_exact(&self, d: &T) -> Option<Self> {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.coeffs {
            if !c.is_multiple_of(d) {
                return None;
            }
            out.add_term(c.clone() / d.clone(), a, b);
        }
        Some(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&(a, b), c)| self.coeff(b, a) == *c)
    }

    /// Rewrites a symmetric polynomial in `l = x1 + x2`, `u = x1·x2`.
    ///
    /// Repeatedly strips the leading monomial `c·x1^a x2^b` (`a ≥ b`) by
    /// subtracting `c·l^(a-b) u^b`. Returns `None` for non-symmetric input.
    pub fn to_class_polynomial(&self) -> Option<ClassPolynomial<T>> {
        if !self.is_symmetric() {
            return None;
        }
        let mut rest = self.clone();
        let mut out = ClassPolynomial::zero();
        let lu = |p: u32, q: u32| -> TorusPolynomial<T> {
            let l = TorusPolynomial::linear(1, 1);
            let mut u = TorusPolynomial::zero();
            u.add_term(T::one(), 1, 1);
            let mut acc = TorusPolynomial::one();
            for _ in 0..p {
                acc = acc.mul(&l);
            }
            for _ in 0..q {
                acc = acc.mul(&u);
            }
            acc
        };
        // Leading term in lex order on (a, b) is the last key; for symmetric
        // input it always has a ≥ b.
        while let Some((&(a, b), c)) = rest.coeffs.iter().next_back() {
            debug_assert!(a >= b);
            let c = c.clone();
            out.add_term(c.clone(), a - b, b);
            rest = rest.add(&lu(a - b, b).scale(&-c));
        }
        Some(out)
    }
}
