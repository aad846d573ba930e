//! Small standard models and a builder for synthetic ones.
//!
//! [`Synthetic`] takes integral groups and cup tables and fills in the mod-2
//! side as `H ⊗ Z/2` with the obvious `ρ2`, mod-2 products induced from the
//! integral ones, `Sq² = squaring` on degree 2 and (dimension 6) the Wu
//! relation on degree 4. That is the full mod-2 story only when `H^*` has no
//! 2-torsion in odd degrees, which is all the worked examples need.

use std::collections::BTreeMap;

use super::{BundleDescriptor, CohomologyModel, ModelError, SpincManifold};
use crate::fga::FgaGroup;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Synthetic<T> {
    dim: usize,
    groups: BTreeMap<usize, FgaGroup<T>>,
    cups: BTreeMap<(usize, usize), Vec<Vec<Vec<T>>>>,
    sq2_4: Option<Vec<Vec<T>>>,
    l0: Option<Vec<T>>,
}

/// Indices of the generators that survive `⊗ Z/2` (free or even order).
fn mod2_support<T: Scalar>(g: &FgaGroup<T>) -> Vec<usize> {
    (0..g.ngens()).filter(|&i| g.generator_order(i).is_even()).collect()
}

impl<T: Scalar> Synthetic<T> {
    /// `H⁰ = H^dim = Z`; every other degree starts out as 0.
    pub fn new(dim: usize) -> Self {
        let mut groups = BTreeMap::new();
        for k in [0, 2, 4, 6] {
            groups.insert(k, FgaGroup::trivial());
        }
        groups.insert(0, FgaGroup::free(1));
        groups.insert(dim, FgaGroup::free(1));
        Synthetic { dim, groups, cups: BTreeMap::new(), sq2_4: None, l0: None }
    }

    pub fn group(mut self, k: usize, g: FgaGroup<T>) -> Self {
        self.groups.insert(k, g);
        self
    }

    pub fn cup(mut self, p: usize, q: usize, entries: Vec<Vec<Vec<T>>>) -> Self {
        self.cups.insert((p, q), entries);
        self
    }

    pub fn cup_i64(self, p: usize, q: usize, entries: &[&[&[i64]]]) -> Self {
        let e = entries.iter().map(|row| row.iter().map(|v| v.iter().map(|&c| T::of(c)).collect()).collect()).collect();
        self.cup(p, q, e)
    }

    /// `Sq²` on `H⁴ ⊗ Z/2`, as images of generators.
    pub fn sq2_4(mut self, images: Vec<Vec<T>>) -> Self {
        self.sq2_4 = Some(images);
        self
    }

    /// Integral lift of `w2(M)`; `w2(M) = ρ2(l0)`. Default `0` (spin).
    pub fn l0(mut self, coords: Vec<T>) -> Self {
        self.l0 = Some(coords);
        self
    }

    pub fn l0_i64(self, coords: &[i64]) -> Self {
        self.l0(coords.iter().map(|&c| T::of(c)).collect())
    }

    pub fn build(self) -> Result<SpincManifold<T>, ModelError> {
        let mut model = CohomologyModel::new(self.dim)?;
        let mut support = BTreeMap::new();
        for (&k, g) in &self.groups {
            if k > self.dim {
                continue;
            }
            let s = mod2_support(g);
            model.set_integral(k, g.clone())?;
            model.set_mod2(k, FgaGroup::mod2(s.len()))?;
            let images = (0..g.ngens())
                .map(|i| {
                    let mut v = vec![T::zero(); s.len()];
                    if let Some(pos) = s.iter().position(|&j| j == i) {
                        v[pos] = T::one();
                    }
                    v
                })
                .collect();
            model.set_rho2(k, images)?;
            support.insert(k, s);
        }
        for (&(p, q), entries) in &self.cups {
            model.set_cup(p, q, entries.clone())?;
            let cup = model.cup(p, q)?.clone();
            let rho = model.rho2(p + q)?.clone();
            let table = support[&p]
                .iter()
                .map(|&i| support[&q].iter().map(|&j| rho.apply(cup.entry(i, j)).into_coords()).collect())
                .collect();
            model.set_cup2(p, q, table)?;
        }
        let h2 = model.h(2)?.clone();
        let l0 = self.l0.unwrap_or_else(|| vec![T::zero(); h2.ngens()]);
        let l0_el = h2.element(l0.clone()).map_err(|source| ModelError::Group { path: "l0".into(), source })?;
        let w2 = model.reduce2(2, &l0_el)?;

        if let Ok(c22) = model.cup2(2, 2).cloned() {
            let g = c22.left().clone();
            let sq = (0..g.ngens()).map(|i| c22.apply(&g.generator(i), &g.generator(i)).into_coords()).collect();
            model.set_sq2(2, sq)?;
        }
        match self.sq2_4 {
            Some(images) => model.set_sq2(4, images)?,
            None if self.dim == 6 => {
                let h4 = model.h2(4)?.clone();
                let images = match model.cup2(2, 4) {
                    Ok(c) => (0..h4.ngens()).map(|i| c.apply(&w2, &h4.generator(i)).into_coords()).collect(),
                    Err(_) => vec![vec![T::zero(); model.h2(6)?.ngens()]; h4.ngens()],
                };
                model.set_sq2(4, images)?;
            }
            None => {
                let h4 = model.h2(4)?.ngens();
                model.set_sq2(4, vec![vec![T::zero(); model.h2(6)?.ngens()]; h4])?;
            }
        }
        SpincManifold::new(model, w2.into_coords(), Some(l0))
    }
}

/// `CP³`: `H^* = Z[h]/h⁴`, spin.
pub fn cp3<T: Scalar>() -> SpincManifold<T> {
    Synthetic::new(6)
        .group(2, FgaGroup::free(1))
        .group(4, FgaGroup::free(1))
        .cup_i64(2, 2, &[&[&[1]]])
        .cup_i64(2, 4, &[&[&[1]]])
        .build()
        .expect("CP3 model")
}

/// Tangent bundle of `CP³`: `c = (1+h)⁴`, so `p1 = 4h²`, `q1 = 2h²` at `l = 0`, `e = 4h³`.
pub fn cp3_tangent<T: Scalar>(m: &SpincManifold<T>) -> BundleDescriptor<T> {
    BundleDescriptor::new_i64(m, 6, &[0], &[0], &[2], Some(&[4])).expect("CP3 tangent descriptor")
}

/// `S² × S⁴` with generators `a ∈ H²`, `b ∈ H⁴`, `a² = 0`, `ab` the top class.
pub fn s2xs4<T: Scalar>() -> SpincManifold<T> {
    Synthetic::new(6)
        .group(2, FgaGroup::free(1))
        .group(4, FgaGroup::free(1))
        .cup_i64(2, 2, &[&[&[0]]])
        .cup_i64(2, 4, &[&[&[1]]])
        .build()
        .expect("S2xS4 model")
}

/// Tangent bundle of `S² × S⁴`: stably trivial, Euler number `χ = 4`.
pub fn s2xs4_tangent<T: Scalar>(m: &SpincManifold<T>) -> BundleDescriptor<T> {
    BundleDescriptor::new_i64(m, 6, &[0], &[0], &[0], Some(&[4])).expect("S2xS4 tangent descriptor")
}

/// `S⁷`: cohomology only in degrees 0 and 7.
pub fn s7<T: Scalar>() -> SpincManifold<T> {
    Synthetic::new(7).cup(2, 2, vec![]).cup(2, 4, vec![]).build().expect("S7 model")
}

/// The trivial bundle of rank `m.dim()`.
pub fn trivial_bundle<T: Scalar>(m: &SpincManifold<T>) -> BundleDescriptor<T> {
    let model = m.model();
    let z = |k: usize| vec![T::zero(); model.h(k).map(|g| g.ngens()).unwrap_or(0)];
    let z2 = vec![T::zero(); model.h2(2).map(|g| g.ngens()).unwrap_or(0)];
    let euler = (m.dim() == 6).then(|| z(6));
    BundleDescriptor::new(m, m.dim(), z2, z(2), z(4), euler).expect("trivial bundle")
}
