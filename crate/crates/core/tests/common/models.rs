//! Random synthetic models and bundles for the property sweeps.

use obstrukt::cohomodel::fixtures::Synthetic;
use obstrukt::fga::FgaGroup;
use obstrukt::{Bundle, Element, Int, Manifold};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn group(free: usize, tors: &[i64]) -> FgaGroup<Int> {
    FgaGroup::new(free, tors.iter().map(|&d| Int::from(d)).collect()).unwrap()
}

fn orders(g: &FgaGroup<Int>) -> Vec<i64> {
    (0..g.ngens()).map(|i| i64::try_from(g.generator_order(i)).unwrap()).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Random element of `target` killed by `n` (`n = 0`: no constraint).
fn random_killed(target: &FgaGroup<Int>, n: i64, rng: &mut ChaCha8Rng) -> Vec<Int> {
    orders(target)
        .into_iter()
        .map(|d| {
            let c = match (d, n) {
                (0, 0) => rng.gen_range(-3..=3),
                (0, _) => 0,
                (d, 0) => rng.gen_range(0..d),
                (d, n) => (d / gcd(n, d)) * rng.gen_range(0..gcd(n, d)),
            };
            Int::from(c)
        })
        .collect()
}

/// Random well-defined bilinear table `left × right → target`, symmetric when
/// `left == right`.
fn random_table(left: &FgaGroup<Int>, right: &FgaGroup<Int>, target: &FgaGroup<Int>, sym: bool, rng: &mut ChaCha8Rng) -> Vec<Vec<Vec<Int>>> {
    let (lo, ro) = (orders(left), orders(right));
    let mut t = vec![vec![Vec::new(); ro.len()]; lo.len()];
    for i in 0..lo.len() {
        for j in 0..ro.len() {
            t[i][j] = if sym && j < i { t[j][i].clone() } else { random_killed(target, gcd(lo[i], ro[j]), rng) };
        }
    }
    t
}

pub fn random_class(g: &FgaGroup<Int>, r: i64, rng: &mut ChaCha8Rng) -> Element {
    let coords = orders(g).into_iter().map(|d| Int::from(if d == 0 { rng.gen_range(-r..=r) } else { rng.gen_range(0..d) })).collect();
    g.element(coords).unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum L0 {
    /// `l0 = 0`.
    Spin,
    /// Random `l0`.
    Random,
    /// Random `w2(M)` with no stored lift.
    Dropped,
}

/// Random model of dimension `dim` with the given `H²` and `H⁴`.
pub fn random_manifold(dim: usize, h2: FgaGroup<Int>, h4: FgaGroup<Int>, l0_mode: L0, rng: &mut ChaCha8Rng) -> Manifold {
    let h6 = if dim == 6 {
        group(1, &[])
    } else {
        [group(0, &[]), group(0, &[2]), group(1, &[])][rng.gen_range(0..3)].clone()
    };
    let c22 = random_table(&h2, &h2, &h4, true, rng);
    let c24 = random_table(&h2, &h4, &h6, false, rng);
    let l0 = if l0_mode == L0::Spin { h2.zero() } else { random_class(&h2, 2, rng) };
    let m = Synthetic::new(dim)
        .group(2, h2)
        .group(4, h4)
        .group(6, h6)
        .cup(2, 2, c22)
        .cup(2, 4, c24)
        .l0(l0.into_coords())
        .build()
        .unwrap();
    match l0_mode {
        L0::Dropped => Manifold::new(m.model().clone(), m.w2().coords().to_vec(), None).unwrap(),
        _ => m,
    }
}

/// Random bundle of rank `dim`. With `matching` the lift is `l0 + 2r`, so
/// `w2(ξ) = w2(M)`; otherwise the lift is arbitrary.
pub fn random_bundle(m: &Manifold, matching: bool, rng: &mut ChaCha8Rng) -> Bundle {
    let model = m.model();
    let h2 = model.h(2).unwrap();
    let r = random_class(h2, 3, rng);
    let l_ref = if matching {
        let base = m.l0().cloned().unwrap_or_else(|| lift_of(m, m.w2()));
        h2.add(&base, &h2.scale(&Int::from(2), &r))
    } else {
        r
    };
    let w2 = model.reduce2(2, &l_ref).unwrap();
    let q1 = random_class(model.h(4).unwrap(), 30, rng);
    let euler = (m.dim() == 6).then(|| random_class(model.h(6).unwrap(), 10, rng).into_coords());
    Bundle::new(m, m.dim(), w2.into_coords(), l_ref.into_coords(), q1.into_coords(), euler).unwrap()
}

/// Some integral lift of a mod-2 class, by search over `{0,1}` coordinates.
pub fn lift_of(m: &Manifold, w: &Element) -> Element {
    let h2 = m.model().h(2).unwrap();
    let n = h2.ngens();
    (0..1u32 << n)
        .map(|bits| h2.element((0..n).map(|i| Int::from((bits >> i) & 1)).collect()).unwrap())
        .find(|l| m.is_lift_of(l, w).unwrap())
        .expect("w2 is a reduction")
}

pub fn random_gauge(m: &Manifold, rng: &mut ChaCha8Rng) -> Element {
    random_class(m.model().h(2).unwrap(), 4, rng)
}
