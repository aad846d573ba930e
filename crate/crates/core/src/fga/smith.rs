//! Smith normal form over the integers with both transforms and their inverses.

use super::matrix::IntMatrix;
use crate::scalar::Scalar;

/// `A = U * D * W` with `U`, `W` unimodular and `D` diagonal, `D[i][i] | D[i+1][i+1]`,
/// all diagonal entries non-negative.
#[derive(Clone, Debug)]
pub struct SmithDecomposition<T> {
    pub u: IntMatrix<T>,
    pub d: IntMatrix<T>,
    pub w: IntMatrix<T>,
    pub u_inv: IntMatrix<T>,
    pub w_inv: IntMatrix<T>,
}

impl<T: Scalar> SmithDecomposition<T> {
    /// Non-zero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<T> {
        self.diagonal().into_iter().filter(|d| !d.is_zero()).collect()
    }

    pub fn diagonal(&self) -> Vec<T> {
        let n = self.d.nrows().min(self.d.ncols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }
}

/// Working state: invariant `A = U * cur * W`, `u_inv = U^-1`, `w_inv = W^-1`.
struct Reducer<T> {
    cur: IntMatrix<T>,
    u: IntMatrix<T>,
    u_inv: IntMatrix<T>,
    w: IntMatrix<T>,
    w_inv: IntMatrix<T>,
}

impl<T: Scalar> Reducer<T> {
    // cur' = E cur with E = I + c e_{dst,src}; U' = U E^-1, U^-1' = E U^-1.
    fn row_add(&mut self, dst: usize, src: usize, c: &T) {
        if c.is_zero() {
            return;
        }
        self.cur.add_row(dst, src, c);
        self.u_inv.add_row(dst, src, c);
        self.u.add_col(src, dst, &-c.clone());
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.cur.swap_rows(a, b);
        self.u_inv.swap_rows(a, b);
        self.u.swap_cols(a, b);
    }

    fn row_negate(&mut self, r: usize) {
        self.cur.negate_row(r);
        self.u_inv.negate_row(r);
        self.u.negate_col(r);
    }

    // cur' = cur F with F = I + c e_{src,dst}; W' = F^-1 W, W^-1' = W^-1 F.
    fn col_add(&mut self, dst: usize, src: usize, c: &T) {
        if c.is_zero() {
            return;
        }
        self.cur.add_col(dst, src, c);
        self.w_inv.add_col(dst, src, c);
        self.w.add_row(src, dst, &-c.clone());
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.cur.swap_cols(a, b);
        self.w_inv.swap_cols(a, b);
        self.w.swap_rows(a, b);
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.cur.nrows() {
            for j in t..self.cur.ncols() {
                let v = &self.cur[(i, j)];
                if v.is_zero() {
                    continue;
                }
                match best {
                    Some(b) if self.cur[b].abs() <= v.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn reduce(&mut self) {
        let n = self.cur.nrows().min(self.cur.ncols());
        for t in 0..n {
            loop {
                let Some((pi, pj)) = self.min_entry(t) else { return };
                self.row_swap(t, pi);
                self.col_swap(t, pj);
                let p = self.cur[(t, t)].clone();
                let mut clean = true;
                for i in t + 1..self.cur.nrows() {
                    let q = nearest_quotient(&self.cur[(i, t)], &p);
                    self.row_add(i, t, &-q);
                    if !self.cur[(i, t)].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..self.cur.ncols() {
                    let q = nearest_quotient(&self.cur[(t, j)], &p);
                    self.col_add(j, t, &-q);
                    if !self.cur[(t, j)].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    continue;
                }
                // Row and column cleared; enforce divisibility of the remaining block.
                let bad = (t + 1..self.cur.nrows())
                    .flat_map(|i| (t + 1..self.cur.ncols()).map(move |j| (i, j)))
                    .find(|&(i, j)| !self.cur[(i, j)].is_multiple_of(&p));
                match bad {
                    Some((i, _)) => self.row_add(t, i, &T::one()),
                    None => break,
                }
            }
            if self.cur[(t, t)].is_negative() {
                self.row_negate(t);
            }
        }
    }
}

/// `q` minimizing `|a - q p|`; keeps transform entries small.
fn nearest_quotient<T: Scalar>(a: &T, p: &T) -> T {
    let q = a.div_floor(p);
    let r = a.clone() - q.clone() * p.clone();
    if r.abs() * T::of(2) > p.abs() {
        q + T::one()
    } else {
        q
    }
}

pub fn smith<T: Scalar>(a: &IntMatrix<T>) -> SmithDecomposition<T> {
    let (m, n) = (a.nrows(), a.ncols());
    let mut r = Reducer {
        cur: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        w: IntMatrix::identity(n),
        w_inv: IntMatrix::identity(n),
    };
    r.reduce();
    SmithDecomposition { u: r.u, d: r.cur, w: r.w, u_inv: r.u_inv, w_inv: r.w_inv }
}

/// Solution set of `A x = b` over the integers: `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSolution<T> {
    pub particular: Vec<T>,
    pub kernel: Vec<Vec<T>>,
}

/// Solves `A x = b` in `Z^n`. `None` when no integer solution exists.
pub fn solve_integer_system<T: Scalar>(a: &IntMatrix<T>, b: &[T]) -> Option<IntegerSolution<T>> {
    assert_eq!(a.nrows(), b.len(), "right-hand side has wrong length");
    let snf = smith(a);
    let c = snf.u_inv.mul_vec(b);
    let rank = snf.rank();
    let mut y = vec![T::zero(); a.ncols()];
    for (i, ci) in c.iter().enumerate() {
        if i < rank {
            let d = &snf.d[(i, i)];
            if !ci.is_multiple_of(d) {
                return None;
            }
            y[i] = ci.clone() / d.clone();
        } else if !ci.is_zero() {
            return None;
        }
    }
    let particular = snf.w_inv.mul_vec(&y);
    let kernel = (rank..a.ncols()).map(|i| snf.w_inv.column(i)).collect();
    Some(IntegerSolution { particular, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn check<T: Scalar>(a: &IntMatrix<T>) -> SmithDecomposition<T> {
        let s = smith(a);
        assert_eq!(s.u.mul(&s.d).mul(&s.w), *a, "U D W != A");
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(a.nrows()));
        assert_eq!(s.w.mul(&s.w_inv), IntMatrix::identity(a.ncols()));
        assert!(s.u.determinant().abs().is_one());
        assert!(s.w.determinant().abs().is_one());
        for i in 0..s.d.nrows() {
            for j in 0..s.d.ncols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        s
    }

    #[test]
    fn two_by_two() {
        // gcd of entries is 2, |det| = 8, so D = diag(2, 4).
        let s = check(&IntMatrix::<i64>::from_i64(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.diagonal(), vec![2, 4]);
    }

    #[test]
    fn identity_and_zero() {
        let s = check(&IntMatrix::<i64>::identity(4));
        assert_eq!(s.diagonal(), vec![1; 4]);
        let s = check(&IntMatrix::<i64>::zeros(3, 2));
        assert_eq!(s.diagonal(), vec![0, 0]);
        check(&IntMatrix::<i64>::zeros(0, 3));
    }

    #[test]
    fn divisibility_fixup() {
        let s = check(&IntMatrix::<i64>::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal(), vec![1, 6]);
    }

    #[test]
    fn solve_system() {
        let a = IntMatrix::<i64>::from_i64(&[&[2, 0], &[0, 3]]);
        let sol = solve_integer_system(&a, &[4, 9]).unwrap();
        assert_eq!(a.mul_vec(&sol.particular), vec![4, 9]);
        assert!(sol.kernel.is_empty());
        assert!(solve_integer_system(&a, &[1, 0]).is_none());
        let a = IntMatrix::<i64>::from_i64(&[&[2]]);
        assert!(solve_integer_system(&a, &[1]).is_none());
        let a = IntMatrix::<i64>::from_i64(&[&[1, 1]]);
        let sol = solve_integer_system(&a, &[5]).unwrap();
        assert_eq!(sol.kernel.len(), 1);
        assert_eq!(a.mul_vec(&sol.kernel[0]), vec![0]);
    }

    proptest! {
        #[test]
        fn decomposition_is_exact(rows in 0usize..5, cols in 0usize..5, seed in proptest::collection::vec(-30i64..30, 25)) {
            let data: Vec<Vec<BigInt>> = (0..rows).map(|i| (0..cols).map(|j| BigInt::from(seed[i * 5 + j])).collect()).collect();
            let a = if rows == 0 { IntMatrix::zeros(0, cols) } else { IntMatrix::from_rows(data) };
            check(&a);
        }
    }
}
