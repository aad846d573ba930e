//! Finitely generated abelian groups in invariant-factor form.
//!
//! A group `Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_t` owns its arithmetic: elements are bare
//! coordinate vectors and every operation goes through the group, which keeps
//! torsion coordinates reduced into `[0, d_i)`.

pub mod matrix;
pub mod smith;

use std::fmt;

use thiserror::Error;

pub use matrix::IntMatrix;
pub use smith::{smith, solve_integer_system, IntegerSolution, SmithDecomposition};

use crate::scalar::{mod_inverse, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FgaError {
    #[error("torsion coefficient {0} must be at least 2")]
    TorsionTooSmall(String),
    #[error("torsion coefficients {0} and {1} violate the divisibility chain")]
    NotAChain(String, String),
    #[error("expected {expected} coordinates, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("hom matrix is {rows}x{cols}, expected {exp_rows}x{exp_cols}")]
    HomShape { rows: usize, cols: usize, exp_rows: usize, exp_cols: usize },
    #[error("hom is not well defined: {order} * image of torsion generator {generator} is non-zero")]
    IllDefined { generator: usize, order: String },
    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FgaGroup<T> {
    rank: usize,
    torsion: Vec<T>,
}

/// Coordinates of an element relative to some [`FgaGroup`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FgaElement<T> {
    coords: Vec<T>,
}

impl<T: Scalar> FgaElement<T> {
    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }
}

impl<T: fmt::Debug> fmt::Debug for FgaElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, ")")
    }
}

impl<T: fmt::Debug> fmt::Display for FgaElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<T: Scalar> FgaGroup<T> {
    pub fn new(rank: usize, torsion: Vec<T>) -> Result<Self, FgaError> {
        let two = T::of(2);
        for d in &torsion {
            if *d < two {
                return Err(FgaError::TorsionTooSmall(d.to_string()));
            }
        }
        for w in torsion.windows(2) {
            if !w[1].is_multiple_of(&w[0]) {
                return Err(FgaError::NotAChain(w[0].to_string(), w[1].to_string()));
            }
        }
        Ok(FgaGroup { rank, torsion })
    }

    /// Normalizes an arbitrary list of cyclic orders (`0` meaning `Z`, `1` dropped)
    /// into invariant-factor form.
    pub fn from_cyclic_orders(orders: &[T]) -> Self {
        let mut rank = 0;
        let mut finite = Vec::new();
        for o in orders {
            let o = o.abs();
            if o.is_zero() {
                rank += 1;
            } else if !o.is_one() {
                finite.push(o);
            }
        }
        let diag = IntMatrix::from_columns(
            finite.len(),
            &(0..finite.len())
                .map(|j| (0..finite.len()).map(|i| if i == j { finite[i].clone() } else { T::zero() }).collect())
                .collect::<Vec<_>>(),
        );
        let torsion = smith(&diag).invariant_factors().into_iter().filter(|d| !d.is_one()).collect();
        FgaGroup { rank, torsion }
    }

    pub fn free(rank: usize) -> Self {
        FgaGroup { rank, torsion: Vec::new() }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// `(Z/2)^n`.
    pub fn mod2(n: usize) -> Self {
        FgaGroup { rank: 0, torsion: vec![T::of(2); n] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[T] {
        &self.torsion
    }

    pub fn ngens(&self) -> usize {
        self.rank + self.torsion.len()
    }

    /// Order of generator `i`; zero for free generators.
    pub fn generator_order(&self, i: usize) -> T {
        if i < self.rank {
            T::zero()
        } else {
            self.torsion[i - self.rank].clone()
        }
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> T {
        self.torsion.iter().fold(T::one(), |acc, d| acc * d.clone())
    }

    pub fn is_mod2(&self) -> bool {
        let two = T::of(2);
        self.rank == 0 && self.torsion.iter().all(|d| *d == two)
    }

    fn reduce_coords(&self, mut coords: Vec<T>) -> Vec<T> {
        for (i, d) in self.torsion.iter().enumerate() {
            let c = &mut coords[self.rank + i];
            *c = c.mod_floor(d);
        }
        coords
    }

    pub fn element(&self, coords: Vec<T>) -> Result<FgaElement<T>, FgaError> {
        if coords.len() != self.ngens() {
            return Err(FgaError::WrongLength { expected: self.ngens(), got: coords.len() });
        }
        Ok(FgaElement { coords: self.reduce_coords(coords) })
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<FgaElement<T>, FgaError> {
        self.element(coords.iter().map(|&c| T::of(c)).collect())
    }

    pub fn zero(&self) -> FgaElement<T> {
        FgaElement { coords: vec![T::zero(); self.ngens()] }
    }

    pub fn generator(&self, i: usize) -> FgaElement<T> {
        let mut coords = vec![T::zero(); self.ngens()];
        coords[i] = T::one();
        FgaElement { coords: self.reduce_coords(coords) }
    }

    pub fn contains(&self, x: &FgaElement<T>) -> bool {
        x.coords.len() == self.ngens()
            && self.torsion.iter().enumerate().all(|(i, d)| {
                let c = &x.coords[self.rank + i];
                !c.is_negative() && c < d
            })
    }

    pub fn add(&self, x: &FgaElement<T>, y: &FgaElement<T>) -> FgaElement<T> {
        debug_assert!(self.contains(x) && self.contains(y));
        let coords = x.coords.iter().zip(&y.coords).map(|(a, b)| a.clone() + b.clone()).collect();
        FgaElement { coords: self.reduce_coords(coords) }
    }

    pub fn neg(&self, x: &FgaElement<T>) -> FgaElement<T> {
        FgaElement { coords: self.reduce_coords(x.coords.iter().map(|a| -a.clone()).collect()) }
    }

    pub fn sub(&self, x: &FgaElement<T>, y: &FgaElement<T>) -> FgaElement<T> {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, n: &T, x: &FgaElement<T>) -> FgaElement<T> {
        FgaElement { coords: self.reduce_coords(x.coords.iter().map(|a| a.clone() * n.clone()).collect()) }
    }

    pub fn is_zero(&self, x: &FgaElement<T>) -> bool {
        x.coords.iter().all(|c| c.is_zero())
    }

    /// Decides `x ∈ nG` and returns `y` with `n·y = x` when it is.
    ///
    /// `n = 0` asks whether `x = 0`. The witness is computed coordinatewise:
    /// free coordinates divide exactly, and on `Z/d` the equation `n·y = x`
    /// is solvable iff `gcd(n, d) | x`.
    pub fn in_multiple(&self, x: &FgaElement<T>, n: &T) -> Option<FgaElement<T>> {
        if n.is_zero() {
            return self.is_zero(x).then(|| self.zero());
        }
        let mut witness = Vec::with_capacity(self.ngens());
        for (i, c) in x.coords.iter().enumerate() {
            if i < self.rank {
                if !c.is_multiple_of(n) {
                    return None;
                }
                witness.push(c.clone() / n.clone());
            } else {
                let d = &self.torsion[i - self.rank];
                let g = n.gcd(d);
                if !c.is_multiple_of(&g) {
                    return None;
                }
                let dg = d.clone() / g.clone();
                let inv = mod_inverse(&(n.clone() / g.clone()), &dg).expect("n/g is a unit mod d/g");
                witness.push(((c.clone() / g) * inv).mod_floor(&dg));
            }
        }
        Some(FgaElement { coords: witness })
    }

    /// One representative per coset of `nG`, in lexicographic order.
    pub fn quotient_reps(&self, n: &T) -> Result<Vec<FgaElement<T>>, FgaError> {
        if !n.is_positive() {
            return Err(FgaError::NonPositiveModulus(n.to_string()));
        }
        let bounds: Vec<T> = (0..self.ngens())
            .map(|i| if i < self.rank { n.clone() } else { n.gcd(&self.torsion[i - self.rank]) })
            .collect();
        Ok(box_points(&bounds).into_iter().map(|coords| FgaElement { coords }).collect())
    }

    /// Every element of a finite group, lexicographically.
    pub fn elements(&self) -> Option<Vec<FgaElement<T>>> {
        self.is_finite()
            .then(|| box_points(&self.torsion).into_iter().map(|coords| FgaElement { coords }).collect())
    }

    /// Subgroup `{x : n·x = 0}` listed exhaustively. Finite whenever `n ≠ 0`.
    pub fn n_torsion(&self, n: &T) -> Vec<FgaElement<T>> {
        assert!(!n.is_zero(), "0-torsion is the whole group");
        let steps: Vec<(T, T)> = self
            .torsion
            .iter()
            .map(|d| {
                let g = n.gcd(d);
                (d.clone() / g.clone(), g)
            })
            .collect();
        let counts: Vec<T> = steps.iter().map(|(_, g)| g.clone()).collect();
        box_points(&counts)
            .into_iter()
            .map(|idx| {
                let mut coords = vec![T::zero(); self.rank];
                coords.extend(idx.into_iter().zip(&steps).map(|(k, (step, _))| k * step.clone()));
                FgaElement { coords }
            })
            .collect()
    }
}

/// All integer points of `[0, b_0) x [0, b_1) x ...`, lexicographically.
fn box_points<T: Scalar>(bounds: &[T]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for b in bounds {
        let mut next = Vec::new();
        for prefix in &out {
            let mut k = T::zero();
            while k < *b {
                let mut p = prefix.clone();
                p.push(k.clone());
                next.push(p);
                k = k + T::one();
            }
        }
        out = next;
    }
    out
}

impl<T: fmt::Debug> fmt::Display for FgaGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.rank == 1 {
            parts.push("Z".into());
        } else if self.rank > 1 {
            parts.push(format!("Z^{}", self.rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d:?}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for FgaGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Homomorphism given on generators: column `j` of `matrix` is the image of
/// source generator `j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FgaHom<T> {
    source: FgaGroup<T>,
    target: FgaGroup<T>,
    matrix: IntMatrix<T>,
}

/// Full solution set of `f(x) = b`: `particular + <kernel_gens>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSolution<T> {
    pub particular: FgaElement<T>,
    pub kernel_gens: Vec<FgaElement<T>>,
}

impl<T: Scalar> FgaHom<T> {
    pub fn new(source: FgaGroup<T>, target: FgaGroup<T>, matrix: IntMatrix<T>) -> Result<Self, FgaError> {
        if matrix.nrows() != target.ngens() || matrix.ncols() != source.ngens() {
            return Err(FgaError::HomShape {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
                exp_rows: target.ngens(),
                exp_cols: source.ngens(),
            });
        }
        let hom = FgaHom { source, target, matrix };
        hom.check_well_defined()?;
        Ok(hom)
    }

    /// Builds from the images of the source generators.
    pub fn from_images(source: FgaGroup<T>, target: FgaGroup<T>, images: Vec<Vec<T>>) -> Result<Self, FgaError> {
        if images.len() != source.ngens() || images.iter().any(|v| v.len() != target.ngens()) {
            return Err(FgaError::HomShape {
                rows: images.first().map_or(target.ngens(), |v| v.len()),
                cols: images.len(),
                exp_rows: target.ngens(),
                exp_cols: source.ngens(),
            });
        }
        let m = IntMatrix::from_columns(target.ngens(), &images);
        Self::new(source, target, m)
    }

    pub fn zero(source: FgaGroup<T>, target: FgaGroup<T>) -> Self {
        let m = IntMatrix::zeros(target.ngens(), source.ngens());
        FgaHom { source, target, matrix: m }
    }

    /// Multiplication by `n` on `g`.
    pub fn scalar(g: FgaGroup<T>, n: &T) -> Self {
        let mut m = IntMatrix::identity(g.ngens());
        for i in 0..g.ngens() {
            m[(i, i)] = n.clone();
        }
        FgaHom { source: g.clone(), target: g, matrix: m }
    }

    fn check_well_defined(&self) -> Result<(), FgaError> {
        for (i, d) in self.source.torsion.iter().enumerate() {
            let j = self.source.rank + i;
            let img = self.target.element(self.matrix.column(j))?;
            if !self.target.is_zero(&self.target.scale(d, &img)) {
                return Err(FgaError::IllDefined { generator: j, order: d.to_string() });
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &FgaGroup<T> {
        &self.source
    }

    pub fn target(&self) -> &FgaGroup<T> {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix<T> {
        &self.matrix
    }

    pub fn apply(&self, x: &FgaElement<T>) -> FgaElement<T> {
        FgaElement { coords: self.target.reduce_coords(self.matrix.mul_vec(&x.coords)) }
    }

    pub fn compose(&self, inner: &FgaHom<T>) -> FgaHom<T> {
        assert_eq!(inner.target, self.source, "composition of incompatible homs");
        FgaHom { source: inner.source.clone(), target: self.target.clone(), matrix: self.matrix.mul(&inner.matrix) }
    }

    /// Equality as homomorphisms (images compared after reduction).
    pub fn same_map(&self, other: &FgaHom<T>) -> bool {
        self.source == other.source
            && self.target == other.target
            && (0..self.source.ngens()).all(|j| {
                let g = self.source.generator(j);
                self.apply(&g) == other.apply(&g)
            })
    }

    /// Solves `f(x) = b`.
    ///
    /// Works on the relation-augmented system `M x + D_target y = b`, where the
    /// columns of `D_target` are the torsion relations of the target. The
    /// kernel of the augmented matrix, projected to `x` and reduced in the
    /// source, generates `ker f`.
    pub fn solve(&self, b: &FgaElement<T>) -> Option<HomSolution<T>> {
        let n_src = self.source.ngens();
        let n_tgt = self.target.ngens();
        let t_len = self.target.torsion.len();
        let mut aug = IntMatrix::zeros(n_tgt, n_src + t_len);
        for i in 0..n_tgt {
            for j in 0..n_src {
                aug[(i, j)] = self.matrix[(i, j)].clone();
            }
        }
        for (k, d) in self.target.torsion.iter().enumerate() {
            aug[(self.target.rank + k, n_src + k)] = d.clone();
        }
        let sol = solve_integer_system(&aug, &b.coords)?;
        let particular = FgaElement { coords: self.source.reduce_coords(sol.particular[..n_src].to_vec()) };
        let mut kernel_gens: Vec<FgaElement<T>> = Vec::new();
        for k in sol.kernel {
            let g = FgaElement { coords: self.source.reduce_coords(k[..n_src].to_vec()) };
            if !self.source.is_zero(&g) && !kernel_gens.contains(&g) {
                kernel_gens.push(g);
            }
        }
        debug_assert_eq!(self.apply(&particular), *b);
        Some(HomSolution { particular, kernel_gens })
    }
}
