//! Cohomology data of a closed spin^c 6- or 7-manifold and bundle descriptors.
//!
//! Integral and mod-2 groups are stored separately and linked by explicit
//! `ρ2` maps: with 2-torsion around, `H^k(M; Z/2)` is bigger than the image
//! of reduction and `Sq²` has to act on all of it. Only the tables a given
//! decision consumes have to be present.

pub mod fixtures;
pub mod json;
mod validate;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::fga::{FgaElement, FgaError, FgaGroup, FgaHom};
use crate::scalar::Scalar;

pub use validate::{validate_model, ValidationReport, Violation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("manifold dimension must be 6 or 7, got {0}")]
    BadDimension(usize),
    #[error("model is missing {0}")]
    Missing(String),
    #[error("{path}: {source}")]
    Group { path: String, source: FgaError },
    #[error("{path}: {reason}")]
    Invalid { path: String, reason: String },
    #[error("{0} is not a lift of w2 (ρ2 of it differs)")]
    NotALift(String),
    #[error("model defect: ρ2(l) = ρ2(l_ref) but l - l_ref = {0} is not divisible by 2")]
    LiftDifferenceNotEven(String),
}

fn grp(path: impl Into<String>) -> impl FnOnce(FgaError) -> ModelError {
    let path = path.into();
    move |source| ModelError::Group { path, source }
}

/// Bilinear pairing given by structure constants: `table[i][j]` is `g_i ⌣ g_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupTable<T> {
    left: FgaGroup<T>,
    right: FgaGroup<T>,
    target: FgaGroup<T>,
    table: Vec<Vec<FgaElement<T>>>,
}

impl<T: Scalar> CupTable<T> {
    /// Shape-checks and reduces the entries. Well-definedness on torsion is left
    /// to [`CupTable::violations`] so that corrupt inputs can be reported.
    pub fn new(left: FgaGroup<T>, right: FgaGroup<T>, target: FgaGroup<T>, entries: Vec<Vec<Vec<T>>>) -> Result<Self, FgaError> {
        if entries.len() != left.ngens() {
            return Err(FgaError::WrongLength { expected: left.ngens(), got: entries.len() });
        }
        let mut table = Vec::with_capacity(entries.len());
        for row in entries {
            if row.len() != right.ngens() {
                return Err(FgaError::WrongLength { expected: right.ngens(), got: row.len() });
            }
            table.push(row.into_iter().map(|v| target.element(v)).collect::<Result<Vec<_>, _>>()?);
        }
        Ok(CupTable { left, right, target, table })
    }

    pub fn left(&self) -> &FgaGroup<T> {
        &self.left
    }

    pub fn right(&self) -> &FgaGroup<T> {
        &self.right
    }

    pub fn target(&self) -> &FgaGroup<T> {
        &self.target
    }

    pub fn entry(&self, i: usize, j: usize) -> &FgaElement<T> {
        &self.table[i][j]
    }

    pub fn apply(&self, x: &FgaElement<T>, y: &FgaElement<T>) -> FgaElement<T> {
        let mut acc = self.target.zero();
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let term = self.target.scale(&(xi.clone() * yj.clone()), &self.table[i][j]);
                acc = self.target.add(&acc, &term);
            }
        }
        acc
    }

    /// Entries violating `n·g = 0 ⇒ n·(g ⌣ h) = 0` (and symmetrically).
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..self.left.ngens() {
            let d = self.left.generator_order(i);
            if d.is_zero() {
                continue;
            }
            for j in 0..self.right.ngens() {
                if !self.target.is_zero(&self.target.scale(&d, &self.table[i][j])) {
                    out.push(format!("[{i}][{j}]: left generator has order {d} but {d}·entry ≠ 0"));
                }
            }
        }
        for j in 0..self.right.ngens() {
            let d = self.right.generator_order(j);
            if d.is_zero() {
                continue;
            }
            for i in 0..self.left.ngens() {
                if !self.target.is_zero(&self.target.scale(&d, &self.table[i][j])) {
                    out.push(format!("[{i}][{j}]: right generator has order {d} but {d}·entry ≠ 0"));
                }
            }
        }
        out
    }
}

/// Graded cohomology data in degrees `0..=dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyModel<T> {
    dim: usize,
    integral: BTreeMap<usize, FgaGroup<T>>,
    mod2: BTreeMap<usize, FgaGroup<T>>,
    rho2: BTreeMap<usize, FgaHom<T>>,
    bockstein: BTreeMap<usize, FgaHom<T>>,
    sq1: BTreeMap<usize, FgaHom<T>>,
    sq2: BTreeMap<usize, FgaHom<T>>,
    cup: BTreeMap<(usize, usize), CupTable<T>>,
    cup2: BTreeMap<(usize, usize), CupTable<T>>,
}

impl<T: Scalar> CohomologyModel<T> {
    pub fn new(dim: usize) -> Result<Self, ModelError> {
        if dim != 6 && dim != 7 {
            return Err(ModelError::BadDimension(dim));
        }
        Ok(CohomologyModel {
            dim,
            integral: BTreeMap::new(),
            mod2: BTreeMap::new(),
            rho2: BTreeMap::new(),
            bockstein: BTreeMap::new(),
            sq1: BTreeMap::new(),
            sq2: BTreeMap::new(),
            cup: BTreeMap::new(),
            cup2: BTreeMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check_degree(&self, k: usize, path: &str) -> Result<(), ModelError> {
        if k > self.dim {
            return Err(ModelError::Invalid { path: path.into(), reason: format!("degree {k} exceeds dimension {}", self.dim) });
        }
        Ok(())
    }

    pub fn set_integral(&mut self, k: usize, g: FgaGroup<T>) -> Result<(), ModelError> {
        self.check_degree(k, &format!("H.{k}"))?;
        self.integral.insert(k, g);
        Ok(())
    }

    pub fn set_mod2(&mut self, k: usize, g: FgaGroup<T>) -> Result<(), ModelError> {
        self.check_degree(k, &format!("H2mod2.{k}"))?;
        if !g.is_mod2() {
            return Err(ModelError::Invalid { path: format!("H2mod2.{k}"), reason: format!("{g} is not an F2-vector space") });
        }
        self.mod2.insert(k, g);
        Ok(())
    }

    /// `images[i]` is the image of generator `i`.
    pub fn set_rho2(&mut self, k: usize, images: Vec<Vec<T>>) -> Result<(), ModelError> {
        let path = format!("rho2.{k}");
        let h = self.integral_in(k, &path)?.clone();
        let h2 = self.mod2_in(k, &path)?.clone();
        self.rho2.insert(k, FgaHom::from_images(h, h2, images).map_err(grp(path))?);
        Ok(())
    }

    pub fn set_bockstein(&mut self, k: usize, images: Vec<Vec<T>>) -> Result<(), ModelError> {
        let path = format!("bockstein.{k}");
        let src = self.mod2_in(k, &path)?.clone();
        let tgt = self.integral_in(k + 1, &path)?.clone();
        self.bockstein.insert(k, FgaHom::from_images(src, tgt, images).map_err(grp(path))?);
        Ok(())
    }

    pub fn set_sq1(&mut self, k: usize, images: Vec<Vec<T>>) -> Result<(), ModelError> {
        let path = format!("sq1.{k}");
        let src = self.mod2_in(k, &path)?.clone();
        let tgt = self.mod2_in(k + 1, &path)?.clone();
        self.sq1.insert(k, FgaHom::from_images(src, tgt, images).map_err(grp(path))?);
        Ok(())
    }

    pub fn set_sq2(&mut self, k: usize, images: Vec<Vec<T>>) -> Result<(), ModelError> {
        let path = format!("sq2.{k}");
        let src = self.mod2_in(k, &path)?.clone();
        let tgt = self.mod2_in(k + 2, &path)?.clone();
        self.sq2.insert(k, FgaHom::from_images(src, tgt, images).map_err(grp(path))?);
        Ok(())
    }

    pub fn set_cup(&mut self, p: usize, q: usize, entries: Vec<Vec<Vec<T>>>) -> Result<(), ModelError> {
        let path = format!("cup.\"{p},{q}\"");
        let t = CupTable::new(
            self.integral_in(p, &path)?.clone(),
            self.integral_in(q, &path)?.clone(),
            self.integral_in(p + q, &path)?.clone(),
            entries,
        )
        .map_err(grp(path))?;
        self.cup.insert((p, q), t);
        Ok(())
    }

    pub fn set_cup2(&mut self, p: usize, q: usize, entries: Vec<Vec<Vec<T>>>) -> Result<(), ModelError> {
        let path = format!("cup2.\"{p},{q}\"");
        let t = CupTable::new(
            self.mod2_in(p, &path)?.clone(),
            self.mod2_in(q, &path)?.clone(),
            self.mod2_in(p + q, &path)?.clone(),
            entries,
        )
        .map_err(grp(path))?;
        self.cup2.insert((p, q), t);
        Ok(())
    }

    fn integral_in(&self, k: usize, path: &str) -> Result<&FgaGroup<T>, ModelError> {
        self.integral.get(&k).ok_or_else(|| ModelError::Missing(format!("H^{k}(M;Z) (needed by {path})")))
    }

    fn mod2_in(&self, k: usize, path: &str) -> Result<&FgaGroup<T>, ModelError> {
        self.mod2.get(&k).ok_or_else(|| ModelError::Missing(format!("H^{k}(M;Z/2) (needed by {path})")))
    }

    pub fn h(&self, k: usize) -> Result<&FgaGroup<T>, ModelError> {
        self.integral.get(&k).ok_or_else(|| ModelError::Missing(format!("H^{k}(M;Z)")))
    }

    pub fn h2(&self, k: usize) -> Result<&FgaGroup<T>, ModelError> {
        self.mod2.get(&k).ok_or_else(|| ModelError::Missing(format!("H^{k}(M;Z/2)")))
    }

    pub fn rho2(&self, k: usize) -> Result<&FgaHom<T>, ModelError> {
        self.rho2.get(&k).ok_or_else(|| ModelError::Missing(format!("rho2 in degree {k}")))
    }

    pub fn bockstein(&self, k: usize) -> Result<&FgaHom<T>, ModelError> {
        self.bockstein.get(&k).ok_or_else(|| ModelError::Missing(format!("bockstein in degree {k}")))
    }

    pub fn sq1(&self, k: usize) -> Result<&FgaHom<T>, ModelError> {
        self.sq1.get(&k).ok_or_else(|| ModelError::Missing(format!("sq1 in degree {k}")))
    }

    pub fn sq2(&self, k: usize) -> Result<&FgaHom<T>, ModelError> {
        self.sq2.get(&k).ok_or_else(|| ModelError::Missing(format!("sq2 in degree {k}")))
    }

    pub fn cup(&self, p: usize, q: usize) -> Result<&CupTable<T>, ModelError> {
        self.cup.get(&(p, q)).ok_or_else(|| ModelError::Missing(format!("integral cup table \"{p},{q}\"")))
    }

    pub fn cup2(&self, p: usize, q: usize) -> Result<&CupTable<T>, ModelError> {
        self.cup2.get(&(p, q)).ok_or_else(|| ModelError::Missing(format!("mod-2 cup table \"{p},{q}\"")))
    }

    pub fn has_rho2(&self, k: usize) -> bool {
        self.rho2.contains_key(&k)
    }

    pub fn has_cup(&self, p: usize, q: usize) -> bool {
        self.cup.contains_key(&(p, q))
    }

    pub fn has_cup2(&self, p: usize, q: usize) -> bool {
        self.cup2.contains_key(&(p, q))
    }

    pub fn has_sq2(&self, k: usize) -> bool {
        self.sq2.contains_key(&k)
    }




    pub(crate) fn sq1_maps(&self) -> &BTreeMap<usize, FgaHom<T>> {
        &self.sq1
    }

    pub(crate) fn bockstein_maps(&self) -> &BTreeMap<usize, FgaHom<T>> {
        &self.bockstein
    }

    pub(crate) fn cup_tables(&self) -> &BTreeMap<(usize, usize), CupTable<T>> {
        &self.cup
    }

    pub(crate) fn cup2_tables(&self) -> &BTreeMap<(usize, usize), CupTable<T>> {
        &self.cup2
    }

    /// `x ⌣ y` for `x ∈ H^p`, `y ∈ H^q`. A product with a zero factor needs no table.
    pub fn product(&self, p: usize, q: usize, x: &FgaElement<T>, y: &FgaElement<T>) -> Result<FgaElement<T>, ModelError> {
        if x.coords().iter().all(|c| c.is_zero()) || y.coords().iter().all(|c| c.is_zero()) {
            return Ok(self.h(p + q)?.zero());
        }
        Ok(self.cup(p, q)?.apply(x, y))
    }

    /// `x ⌣ y` for `x, y ∈ H²`.
    pub fn cup22(&self, x: &FgaElement<T>, y: &FgaElement<T>) -> Result<FgaElement<T>, ModelError> {
        self.product(2, 2, x, y)
    }

    /// `l ⌣ l ⌣ l ∈ H⁶`.
    pub fn cube(&self, l: &FgaElement<T>) -> Result<FgaElement<T>, ModelError> {
        let sq = self.cup22(l, l)?;
        self.product(2, 4, l, &sq)
    }

    pub fn reduce2(&self, k: usize, x: &FgaElement<T>) -> Result<FgaElement<T>, ModelError> {
        Ok(self.rho2(k)?.apply(x))
    }

    fn parse_element(group: &FgaGroup<T>, coords: Vec<T>, path: &str) -> Result<FgaElement<T>, ModelError> {
        group.element(coords).map_err(grp(path))
    }
}

/// A cohomology model together with `w2(M)` and an optional integral lift of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpincManifold<T> {
    model: CohomologyModel<T>,
    w2m: FgaElement<T>,
    l0: Option<FgaElement<T>>,
}

impl<T: Scalar> SpincManifold<T> {
    pub fn new(model: CohomologyModel<T>, w2m: Vec<T>, l0: Option<Vec<T>>) -> Result<Self, ModelError> {
        let w2m = CohomologyModel::parse_element(model.h2(2)?, w2m, "w2M")?;
        let l0 = match l0 {
            Some(c) => {
                let l = CohomologyModel::parse_element(model.h(2)?, c, "l0")?;
                if model.reduce2(2, &l)? != w2m {
                    return Err(ModelError::NotALift("l0".into()));
                }
                Some(l)
            }
            None => None,
        };
        Ok(SpincManifold { model, w2m, l0 })
    }

    pub fn model(&self) -> &CohomologyModel<T> {
        &self.model
    }

    pub fn dim(&self) -> usize {
        self.model.dim
    }

    pub fn w2(&self) -> &FgaElement<T> {
        &self.w2m
    }

    pub fn l0(&self) -> Option<&FgaElement<T>> {
        self.l0.as_ref()
    }

    pub fn is_spin(&self) -> bool {
        self.model.h2(2).map(|g| g.is_zero(&self.w2m)).unwrap_or(false)
    }

    /// Integral class from coordinates in `H^k(M;Z)`.
    pub fn class(&self, k: usize, coords: Vec<T>) -> Result<FgaElement<T>, ModelError> {
        CohomologyModel::parse_element(self.model.h(k)?, coords, &format!("H^{k} element"))
    }

    pub fn class_i64(&self, k: usize, coords: &[i64]) -> Result<FgaElement<T>, ModelError> {
        self.class(k, coords.iter().map(|&c| T::of(c)).collect())
    }

    pub fn is_lift_of(&self, l: &FgaElement<T>, w2: &FgaElement<T>) -> Result<bool, ModelError> {
        Ok(self.model.reduce2(2, l)? == *w2)
    }

    /// `q1(ξ; l) = q1(ξ; l_ref) - 2 l_ref m - 2 m²` where `l = l_ref + 2m`.
    ///
    /// The result does not depend on which `m` is picked: two choices differ by
    /// 2-torsion `t`, and every term of the difference is a cup product with `2t`.
    pub fn q1_at(&self, xi: &BundleDescriptor<T>, l: &FgaElement<T>) -> Result<FgaElement<T>, ModelError> {
        let h2 = self.model.h(2)?;
        if !h2.contains(l) {
            return Err(ModelError::Invalid { path: "l".into(), reason: "not an element of H^2".into() });
        }
        if !self.is_lift_of(l, &xi.w2)? {
            return Err(ModelError::NotALift(format!("l = {l}")));
        }
        let diff = h2.sub(l, &xi.l_ref);
        let m = h2.in_multiple(&diff, &T::of(2)).ok_or_else(|| ModelError::LiftDifferenceNotEven(diff.to_string()))?;
        self.q1_shift(xi, &m)
    }

    /// `q1(ξ; l_ref + 2m)`.
    pub fn q1_shift(&self, xi: &BundleDescriptor<T>, m: &FgaElement<T>) -> Result<FgaElement<T>, ModelError> {
        let h4 = self.model.h(4)?;
        let two = T::of(2);
        let lm = self.model.cup22(&xi.l_ref, m)?;
        let mm = self.model.cup22(m, m)?;
        let shift = h4.add(&h4.scale(&two, &lm), &h4.scale(&two, &mm));
        Ok(h4.sub(&xi.q1_ref, &shift))
    }

    /// The gauge-equivalent descriptor with reference lift `l_ref + 2m`.
    pub fn gauge(&self, xi: &BundleDescriptor<T>, m: &FgaElement<T>) -> Result<BundleDescriptor<T>, ModelError> {
        let h2 = self.model.h(2)?;
        let l_ref = h2.add(&xi.l_ref, &h2.scale(&T::of(2), m));
        let q1_ref = self.q1_shift(xi, m)?;
        Ok(BundleDescriptor { rank: xi.rank, w2: xi.w2.clone(), l_ref, q1_ref, euler: xi.euler.clone() })
    }

    /// `p1(ξ) = 2 q1(ξ; l) + l²`.
    pub fn p1_of_bundle(&self, xi: &BundleDescriptor<T>) -> Result<FgaElement<T>, ModelError> {
        let h4 = self.model.h(4)?;
        let l2 = self.model.cup22(&xi.l_ref, &xi.l_ref)?;
        Ok(h4.add(&h4.scale(&T::of(2), &xi.q1_ref), &l2))
    }

    /// `w4(ξ) = ρ2 q1(ξ; l)`.
    pub fn w4_of_bundle(&self, xi: &BundleDescriptor<T>) -> Result<FgaElement<T>, ModelError> {
        self.model.reduce2(4, &xi.q1_ref)
    }

    /// `w4(M) = w2(M)²`: on a spin^c manifold `v3 = 0` and `v_j = 0` for `j ≥ 4`,
    /// so `w4 = Sq²v2 = v2²`.
    pub fn tangent_w4(&self) -> Result<FgaElement<T>, ModelError> {
        if self.is_spin() {
            return Ok(self.model.h2(4)?.zero());
        }
        Ok(self.model.cup2(2, 2)?.apply(&self.w2m, &self.w2m))
    }

    /// `w4` of the normal bundle of any immersion of `M`: always zero.
    pub fn normal_w4(&self) -> Result<FgaElement<T>, ModelError> {
        Ok(self.model.h2(4)?.zero())
    }
}

/// Rank, `w2`, a reference lift with its `q1`, and (rank 6) the Euler class.
///
/// A rank-7 bundle carries no Euler class: `e` of an odd-rank bundle is
/// 2-torsion and `H⁷` of a closed oriented connected 7-manifold is `Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleDescriptor<T> {
    rank: usize,
    w2: FgaElement<T>,
    l_ref: FgaElement<T>,
    q1_ref: FgaElement<T>,
    euler: Option<FgaElement<T>>,
}

impl<T: Scalar> BundleDescriptor<T> {
    pub fn new(
        m: &SpincManifold<T>,
        rank: usize,
        w2: Vec<T>,
        l_ref: Vec<T>,
        q1_ref: Vec<T>,
        euler: Option<Vec<T>>,
    ) -> Result<Self, ModelError> {
        let model = m.model();
        if rank != 6 && rank != 7 {
            return Err(ModelError::Invalid { path: "rank".into(), reason: format!("rank must be 6 or 7, got {rank}") });
        }
        let w2 = CohomologyModel::parse_element(model.h2(2)?, w2, "w2")?;
        let l_ref = CohomologyModel::parse_element(model.h(2)?, l_ref, "l_ref")?;
        let q1_ref = CohomologyModel::parse_element(model.h(4)?, q1_ref, "q1_ref")?;
        if model.reduce2(2, &l_ref)? != w2 {
            return Err(ModelError::NotALift("l_ref".into()));
        }
        let euler = match (rank, euler) {
            (6, Some(e)) => Some(CohomologyModel::parse_element(model.h(6)?, e, "euler")?),
            (6, None) => return Err(ModelError::Invalid { path: "euler".into(), reason: "rank-6 bundles need an Euler class".into() }),
            (_, Some(_)) => {
                return Err(ModelError::Invalid { path: "euler".into(), reason: "rank-7 bundles carry no Euler class".into() })
            }
            (_, None) => None,
        };
        Ok(BundleDescriptor { rank, w2, l_ref, q1_ref, euler })
    }

    pub fn new_i64(
        m: &SpincManifold<T>,
        rank: usize,
        w2: &[i64],
        l_ref: &[i64],
        q1_ref: &[i64],
        euler: Option<&[i64]>,
    ) -> Result<Self, ModelError> {
        let conv = |v: &[i64]| v.iter().map(|&c| T::of(c)).collect::<Vec<T>>();
        Self::new(m, rank, conv(w2), conv(l_ref), conv(q1_ref), euler.map(conv))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn w2(&self) -> &FgaElement<T> {
        &self.w2
    }

    pub fn l_ref(&self) -> &FgaElement<T> {
        &self.l_ref
    }

    pub fn q1_ref(&self) -> &FgaElement<T> {
        &self.q1_ref
    }

    /// Euler class; zero-dimensional `None` for rank 7.
    pub fn euler(&self) -> Option<&FgaElement<T>> {
        self.euler.as_ref()
    }

    /// Same bundle data with a different Euler class (rank 6 only).
    pub fn with_euler(&self, e: FgaElement<T>) -> Self {
        BundleDescriptor { euler: Some(e), ..self.clone() }
    }

    /// Same `w2` and `l_ref`, different `q1_ref`.
    pub fn with_q1_ref(&self, q1: FgaElement<T>) -> Self {
        BundleDescriptor { q1_ref: q1, ..self.clone() }
    }
}
