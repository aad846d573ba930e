//! Exhaustive group arithmetic over `Z^r ⊕ Z/d_1 ⊕ ...` on plain `i64`
//! coordinates, sharing nothing with the library beyond the coordinate layout.

use std::collections::{BTreeSet, HashMap, HashSet};

use obstrukt::fga::{FgaGroup, FgaHom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct Brute {
    pub free: usize,
    pub tors: Vec<i64>,
}

pub type V = Vec<i64>;

impl Brute {
    pub fn new(free: usize, tors: &[i64]) -> Self {
        Brute { free, tors: tors.to_vec() }
    }

    pub fn lib(&self) -> FgaGroup<i64> {
        FgaGroup::new(self.free, self.tors.clone()).unwrap()
    }

    pub fn order(&self) -> i64 {
        self.tors.iter().product()
    }

    pub fn norm(&self, mut x: V) -> V {
        for (i, d) in self.tors.iter().enumerate() {
            x[self.free + i] = x[self.free + i].rem_euclid(*d);
        }
        x
    }

    pub fn add(&self, x: &[i64], y: &[i64]) -> V {
        self.norm(x.iter().zip(y).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, n: i64, x: &[i64]) -> V {
        self.norm(x.iter().map(|a| a * n).collect())
    }

    pub fn zero(&self) -> V {
        vec![0; self.free + self.tors.len()]
    }

    /// Torsion parts only, lexicographic.
    pub fn finite(&self) -> Vec<V> {
        let mut out = vec![Vec::new()];
        for d in &self.tors {
            out = out.into_iter().flat_map(|p| (0..*d).map(move |c| [p.clone(), vec![c]].concat())).collect();
        }
        out
    }

    /// Free coordinates in `[-r, r]` times the torsion part.
    pub fn boxed(&self, r: i64) -> Vec<V> {
        let mut free = vec![Vec::new()];
        for _ in 0..self.free {
            free = free.into_iter().flat_map(|p| (-r..=r).map(move |c| [p.clone(), vec![c]].concat())).collect();
        }
        let fin = self.finite();
        free.iter().flat_map(|f| fin.iter().map(move |t| [f.clone(), t.clone()].concat())).collect()
    }

    /// `n·T` for the torsion part `T`.
    pub fn multiples_of_torsion(&self, n: i64) -> HashSet<V> {
        let t = Brute::new(0, &self.tors);
        t.finite().iter().map(|x| t.scale(n, x)).collect()
    }

    /// `x ∈ nG` by search: `y` ranges over `|y_i| ≤ |x_i|` on free coordinates
    /// and over all of `T`.
    pub fn in_multiple(&self, x: &[i64], n: i64, nt: &HashSet<V>) -> bool {
        if n == 0 {
            return x.iter().all(|&c| c == 0);
        }
        let free_ok = x[..self.free].iter().all(|&c| (-c.abs()..=c.abs()).any(|y| n * y == c));
        free_ok && nt.contains(&x[self.free..].to_vec())
    }

    /// Torsion part of each element mapped to the least element of its
    /// `nT`-coset; one pass, each coset labelled once.
    pub fn torsion_coset_keys(&self, n: i64) -> HashMap<V, V> {
        let t = Brute::new(0, &self.tors);
        let nt = self.multiples_of_torsion(n);
        let mut keys = HashMap::new();
        for x in t.finite() {
            if !keys.contains_key(&x) {
                for s in &nt {
                    keys.insert(t.add(&x, s), x.clone());
                }
            }
        }
        keys
    }

    /// Canonical name of `x + nG` (`n ≥ 1`).
    pub fn coset_key(&self, x: &[i64], n: i64, tkeys: &HashMap<V, V>) -> V {
        let free = x[..self.free].iter().map(|c| c.rem_euclid(n));
        free.chain(tkeys[&x[self.free..]].iter().copied()).collect()
    }

    /// `|G/nG|` for `n ≥ 1`.
    pub fn quotient_order(&self, n: i64) -> i64 {
        n.pow(self.free as u32) * self.order() / self.multiples_of_torsion(n).len() as i64
    }

    /// Elements `x` with `d·x = 0`; the admissible images of an order-`d` generator.
    pub fn killed_by(&self, d: i64) -> Vec<V> {
        assert_eq!(self.free, 0);
        self.finite().into_iter().filter(|x| self.scale(d, x).iter().all(|&c| c == 0)).collect()
    }

    /// Subgroup generated by `gens`, by closure (finite groups only).
    pub fn span(&self, gens: &[V]) -> BTreeSet<V> {
        assert_eq!(self.free, 0);
        let mut seen: BTreeSet<V> = BTreeSet::from([self.zero()]);
        let mut frontier = vec![self.zero()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.add(&x, g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }
}

/// Every invariant-factor chain `d_1 | d_2 | ...` with product `≤ max`.
pub fn chains(max: i64) -> Vec<Vec<i64>> {
    fn go(prefix: Vec<i64>, prod: i64, max: i64, out: &mut Vec<Vec<i64>>) {
        out.push(prefix.clone());
        let start = prefix.last().copied().unwrap_or(1).max(2);
        let mut d = start;
        while prod * d <= max {
            if prefix.last().is_none_or(|&l| d % l == 0) {
                let mut p = prefix.clone();
                p.push(d);
                go(p, prod * d, max, out);
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    go(Vec::new(), 1, max, &mut out);
    out
}

/// `f(x) = Σ x_j · img_j`, reduced in the target.
pub fn apply(target: &Brute, images: &[V], x: &[i64]) -> V {
    let mut y = target.zero();
    for (xj, img) in x.iter().zip(images) {
        for (yi, c) in y.iter_mut().zip(img) {
            *yi += xj * c;
        }
    }
    target.norm(y)
}

/// Random well-defined images: free generators anywhere in the target's
/// torsion part (plus small free coordinates), torsion generators killed by
/// their order.
pub fn random_images(src: &Brute, tgt: &Brute, rng: &mut ChaCha8Rng) -> Vec<V> {
    let t_fin = Brute::new(0, &tgt.tors);
    let pick = |cands: &[V], rng: &mut ChaCha8Rng| cands[rng.gen_range(0..cands.len())].clone();
    let mut out = Vec::new();
    for _ in 0..src.free {
        let free: V = (0..tgt.free).map(|_| rng.gen_range(-4..=4)).collect();
        out.push([free, pick(&t_fin.finite(), rng)].concat());
    }
    for &d in &src.tors {
        out.push([vec![0; tgt.free], pick(&t_fin.killed_by(d), rng)].concat());
    }
    out
}

pub fn lib_hom(src: &Brute, tgt: &Brute, images: &[V]) -> FgaHom<i64> {
    FgaHom::from_images(src.lib(), tgt.lib(), images.to_vec()).expect("well-defined by construction")
}

/// Outcome of one sweep: number of comparisons, or the first disagreement.
pub type Sweep = Result<usize, String>;

/// `in_multiple` on every group of order `≤ max_order`, plus free rank 1 and
/// 2 on smaller torsion with coordinates in a box.
pub fn sweep_in_multiple(max_order: i64) -> Sweep {
    let mut n_checks = 0;
    let mut cases: Vec<(Brute, i64)> = chains(max_order).into_iter().map(|t| (Brute::new(0, &t), 0)).collect();
    cases.extend(chains(24).into_iter().map(|t| (Brute::new(1, &t), 5)));
    cases.extend(chains(8).into_iter().map(|t| (Brute::new(2, &t), 3)));
    for (g, r) in cases {
        let lib = g.lib();
        let mut ns: Vec<i64> = (0..=8).collect();
        if let Some(&e) = g.tors.last() {
            ns.extend([e, e + 1, 2 * e]);
        }
        for n in ns {
            let nt = g.multiples_of_torsion(n);
            for x in g.boxed(r) {
                let got = lib.in_multiple(&lib.element(x.clone()).unwrap(), &n);
                let want = g.in_multiple(&x, n, &nt);
                if got.is_some() != want {
                    return Err(format!("in_multiple({x:?}, {n}) on {g:?}: library {got:?}, oracle {want}"));
                }
                if let Some(w) = got {
                    if g.scale(n, w.coords()) != x || !lib.contains(&w) {
                        return Err(format!("in_multiple({x:?}, {n}) on {g:?}: bad witness {w:?}"));
                    }
                }
                n_checks += 1;
            }
        }
    }
    Ok(n_checks)
}

/// `quotient_reps` hits every coset of `nG` exactly once.
pub fn sweep_quotient_reps(max_order: i64) -> Sweep {
    let mut n_checks = 0;
    let mut groups: Vec<Brute> = chains(max_order).into_iter().map(|t| Brute::new(0, &t)).collect();
    groups.extend(chains(24).into_iter().map(|t| Brute::new(1, &t)));
    groups.extend(chains(8).into_iter().map(|t| Brute::new(2, &t)));
    for g in groups {
        let lib = g.lib();
        let mut ns: Vec<i64> = (1..=6).collect();
        if let Some(&e) = g.tors.last() {
            ns.extend([e, 2 * e]);
        }
        for n in ns {
            let reps: Vec<V> = lib.quotient_reps(&n).unwrap().into_iter().map(|r| r.into_coords()).collect();
            if reps.len() as i64 != g.quotient_order(n) {
                return Err(format!("{g:?} / {n}: {} reps, expected {}", reps.len(), g.quotient_order(n)));
            }
            let nt = g.torsion_coset_keys(n);
            let keys: HashSet<V> = reps.iter().map(|x| g.coset_key(x, n, &nt)).collect();
            if keys.len() != reps.len() {
                return Err(format!("{g:?} / {n}: two reps share a coset"));
            }
            if g.free == 0 {
                // coverage, independently of the count
                if let Some(x) = g.finite().into_iter().find(|x| !keys.contains(&g.coset_key(x, n, &nt))) {
                    return Err(format!("{g:?} / {n}: {x:?} is in no listed coset"));
                }
            }
            n_checks += 1;
        }
        if lib.quotient_reps(&0).is_ok() {
            return Err(format!("{g:?}: quotient by 0 accepted"));
        }
    }
    Ok(n_checks)
}

/// `solve` against exhaustive preimages. Finite pairs compare the full
/// solution coset; free sources compare solvability in a period box.
pub fn sweep_solve(max_order: i64, homs_per_pair: usize, rng: &mut ChaCha8Rng) -> Sweep {
    let mut n_checks = 0;
    let finite: Vec<Brute> = chains(max_order).into_iter().map(|t| Brute::new(0, &t)).collect();
    for src in &finite {
        for tgt in &finite {
            for _ in 0..homs_per_pair {
                let images = random_images(src, tgt, rng);
                let f = lib_hom(src, tgt, &images);
                let dom = src.finite();
                for b in tgt.finite() {
                    let pre: BTreeSet<V> = dom.iter().filter(|x| apply(tgt, &images, x) == b).cloned().collect();
                    let got = f.solve(&tgt.lib().element(b.clone()).unwrap());
                    match (got, pre.is_empty()) {
                        (None, true) => {}
                        (Some(s), false) => {
                            let kern: Vec<V> = s.kernel_gens.iter().map(|k| k.coords().to_vec()).collect();
                            let coset: BTreeSet<V> = src.span(&kern).iter().map(|k| src.add(k, s.particular.coords())).collect();
                            if coset != pre {
                                return Err(format!("solve {images:?} on {src:?}->{tgt:?} at {b:?}: coset mismatch"));
                            }
                        }
                        (got, _) => return Err(format!("solve {images:?} on {src:?}->{tgt:?} at {b:?}: {got:?} vs {pre:?}")),
                    }
                    n_checks += 1;
                }
            }
        }
    }
    // free sources into finite targets: free coordinates only matter modulo the exponent
    for free in 1..=2 {
        for t_src in chains(6) {
            let src = Brute::new(free, &t_src);
            for tgt in finite.iter().filter(|t| t.order() <= 12) {
                for _ in 0..homs_per_pair {
                    let images = random_images(&src, tgt, rng);
                    let f = lib_hom(&src, tgt, &images);
                    let e = tgt.tors.last().copied().unwrap_or(1);
                    let dom: Vec<V> = src.boxed(e).into_iter().filter(|x| x[..free].iter().all(|&c| c >= 0 && c < e)).collect();
                    for b in tgt.finite() {
                        let want = dom.iter().any(|x| apply(tgt, &images, x) == b);
                        let got = f.solve(&tgt.lib().element(b.clone()).unwrap());
                        if got.is_some() != want {
                            return Err(format!("solve {images:?} on {src:?}->{tgt:?} at {b:?}: {got:?} vs {want}"));
                        }
                        if let Some(s) = got {
                            if apply(tgt, &images, s.particular.coords()) != b
                                || s.kernel_gens.iter().any(|k| apply(tgt, &images, k.coords()) != tgt.zero())
                            {
                                return Err(format!("solve {images:?} on {src:?}->{tgt:?} at {b:?}: unsound {s:?}"));
                            }
                        }
                        n_checks += 1;
                    }
                }
            }
        }
    }
    // into Z: solvable iff some bounded preimage exists (Bézout coefficients stay small)
    for free in 1..=2 {
        for t_src in chains(4) {
            let src = Brute::new(free, &t_src);
            let tgt = Brute::new(1, &[]);
            for _ in 0..homs_per_pair {
                let images = random_images(&src, &tgt, rng);
                let f = lib_hom(&src, &tgt, &images);
                let dom = src.boxed(30);
                for b in -6..=6 {
                    let want = dom.iter().any(|x| apply(&tgt, &images, x) == vec![b]);
                    let got = f.solve(&tgt.lib().element(vec![b]).unwrap());
                    if got.is_some() != want {
                        return Err(format!("solve {images:?} on {src:?}->Z at {b}: {got:?} vs {want}"));
                    }
                    n_checks += 1;
                }
            }
        }
    }
    Ok(n_checks)
}
