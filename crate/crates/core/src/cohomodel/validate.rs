//! Consistency checks on a cohomology model.

use std::fmt;

use super::{CohomologyModel, SpincManifold};
use crate::fga::FgaGroup;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

/// Outcome of [`validate_model`]. An empty `violations` list means usable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Checks that could not run because an optional table is missing.
    pub skipped: Vec<String>,
    /// Decision procedures whose tables are all present.
    pub unlocked: Vec<&'static str>,
    /// Decision procedures for this dimension with what they still need.
    pub locked: Vec<(&'static str, Vec<String>)>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn flag(&mut self, check: &'static str, detail: String) {
        self.violations.push(Violation { check, detail });
    }
}

#[derive(Clone, Copy)]
enum Need {
    H(usize),
    Rho2(usize),
    Cup(usize, usize),
    Cup2(usize, usize),
    Sq2(usize),
}

const NEEDS: &[(&str, usize, &[Need])] = &[
    ("iso_7", 7, &[Need::Rho2(2), Need::Cup(2, 2)]),
    ("exists_u2", 7, &[Need::Rho2(2)]),
    ("exists_u3", 7, &[Need::Sq2(4), Need::Rho2(4), Need::Rho2(6), Need::Cup(2, 4)]),
    ("reduce_u2_7", 7, &[Need::Rho2(2), Need::Cup(2, 2)]),
    ("reduce_so3_7", 7, &[Need::Rho2(2), Need::Cup(2, 2)]),
    ("sp1_menu", 7, &[Need::H(4)]),
    ("g2_reduce", 7, &[]),
    ("sections_7", 7, &[Need::Rho2(4)]),
    ("prop_7u3", 7, &[Need::Rho2(2), Need::Cup(2, 2), Need::H(6)]),
    ("iso_6", 6, &[Need::Rho2(2), Need::Cup(2, 2), Need::H(6)]),
    ("exists_u2", 6, &[Need::Rho2(2)]),
    ("exists_u3", 6, &[Need::Sq2(4), Need::Rho2(4), Need::Rho2(6), Need::Cup(2, 4)]),
    ("reduce_u2_6", 6, &[Need::Rho2(2), Need::Cup(2, 2), Need::Cup(2, 4)]),
    ("cor6_cases", 6, &[Need::Rho2(2), Need::Rho2(4), Need::Cup(2, 2), Need::H(6)]),
    ("tangent_w4", 6, &[Need::Cup2(2, 2)]),
    ("tangent_w4", 7, &[Need::Cup2(2, 2)]),
];

fn missing<T: Scalar>(m: &CohomologyModel<T>, need: Need) -> Option<String> {
    let ok = match need {
        Need::H(k) => m.h(k).is_ok(),
        Need::Rho2(k) => m.has_rho2(k),
        Need::Cup(p, q) => m.has_cup(p, q) || [p, q].iter().any(|&k| m.h(k).is_ok_and(|g| g.ngens() == 0)),
        Need::Cup2(p, q) => m.has_cup2(p, q) || [p, q].iter().any(|&k| m.h2(k).is_ok_and(|g| g.ngens() == 0)),
        Need::Sq2(k) => m.has_sq2(k),
    };
    if ok {
        return None;
    }
    Some(match need {
        Need::H(k) => format!("H.\"{k}\""),
        Need::Rho2(k) => format!("rho2.\"{k}\""),
        Need::Cup(p, q) => format!("cup.\"{p},{q}\""),
        Need::Cup2(p, q) => format!("cup2.\"{p},{q}\""),
        Need::Sq2(k) => format!("sq2.\"{k}\""),
    })
}

fn is_z<T: Scalar>(g: &FgaGroup<T>) -> bool {
    g.rank() == 1 && g.torsion().is_empty()
}

/// Checks the structural invariants of a model and reports which decisions it
/// can feed.
///
/// Checked: orientation (`H⁰ = H^m = Z`), bilinearity of every cup table on
/// torsion, commutativity of the (2,2) tables, `Sq¹ = ρ2 δ`, `ρ2(x ⌣ y) =
/// ρ2x ⌣ ρ2y`, `Sq²x = x²` in degree 2, the Cartan formula on products of
/// degree-2 classes, and the Wu relation `Sq² = w2(M) ⌣ ·` into the top degree.
pub fn validate_model<T: Scalar>(m: &SpincManifold<T>) -> ValidationReport {
    let model = m.model();
    let dim = model.dim();
    let mut r = ValidationReport::default();

    for k in [0, dim] {
        match model.h(k) {
            Ok(g) if !is_z(g) => r.flag("orientation", format!("H^{k} is {g}, a closed connected oriented manifold has Z")),
            Ok(_) => {}
            Err(_) if k == dim => r.flag("orientation", format!("H^{dim} missing; it must be Z")),
            Err(_) => {}
        }
    }

    for (name, tables) in [("cup", model.cup_tables()), ("cup2", model.cup2_tables())] {
        for (&(p, q), t) in tables {
            for v in t.violations() {
                r.flag("bilinearity", format!("{name}.\"{p},{q}\"{v}"));
            }
            if p + q > dim {
                r.flag("degree", format!("{name}.\"{p},{q}\" lands above dimension {dim}"));
            }
        }
        if let Some(t) = tables.get(&(2, 2)) {
            for i in 0..t.left().ngens() {
                for j in 0..i {
                    if t.entry(i, j) != t.entry(j, i) {
                        r.flag("commutativity", format!("{name}.\"2,2\"[{i}][{j}] = {} but [{j}][{i}] = {}", t.entry(i, j), t.entry(j, i)));
                    }
                }
            }
        }
    }
    for (name, degs) in [("sq1", model.sq1_maps().keys().copied().collect::<Vec<_>>()), ("bockstein", model.bockstein_maps().keys().copied().collect())] {
        for k in degs {
            if k + 1 > dim {
                r.flag("degree", format!("{name}.\"{k}\" lands above dimension {dim}"));
            }
        }
    }

    for (&k, sq1) in model.sq1_maps() {
        match (model.bockstein(k), model.rho2(k + 1)) {
            (Ok(b), Ok(rho)) => {
                if !sq1.same_map(&rho.compose(b)) {
                    r.flag("sq1 = rho2 . bockstein", format!("fails in degree {k}"));
                }
            }
            _ => r.skipped.push(format!("sq1 = rho2 . bockstein in degree {k} (needs bockstein.\"{k}\" and rho2.\"{}\")", k + 1)),
        }
    }

    for (&(p, q), cup) in model.cup_tables() {
        let (Ok(cup2), Ok(rp), Ok(rq), Ok(rpq)) = (model.cup2(p, q), model.rho2(p), model.rho2(q), model.rho2(p + q)) else {
            r.skipped.push(format!("rho2 compatibility of cup.\"{p},{q}\""));
            continue;
        };
        for i in 0..cup.left().ngens() {
            for j in 0..cup.right().ngens() {
                let lhs = rpq.apply(cup.entry(i, j));
                let rhs = cup2.apply(&rp.apply(&cup.left().generator(i)), &rq.apply(&cup.right().generator(j)));
                if lhs != rhs {
                    r.flag("rho2 compatibility", format!("cup.\"{p},{q}\"[{i}][{j}]: rho2(x.y) = {lhs}, rho2x.rho2y = {rhs}"));
                }
            }
        }
    }

    if let (Ok(sq2), Ok(c22)) = (model.sq2(2), model.cup2(2, 2)) {
        for i in 0..sq2.source().ngens() {
            let x = sq2.source().generator(i);
            if sq2.apply(&x) != c22.apply(&x, &x) {
                r.flag("Sq2 on degree 2 is squaring", format!("generator {i}: sq2 gives {}, x.x = {}", sq2.apply(&x), c22.apply(&x, &x)));
            }
        }
    }

    cartan(model, &mut r);

    let top = dim - 2;
    match (model.sq2(top), model.cup2(2, top)) {
        (Ok(sq2), Ok(c)) => {
            for i in 0..sq2.source().ngens() {
                let x = sq2.source().generator(i);
                if sq2.apply(&x) != c.apply(m.w2(), &x) {
                    r.flag("Wu relation", format!("Sq2 of generator {i} of H^{top}(M;Z/2) is {}, w2(M).x is {}", sq2.apply(&x), c.apply(m.w2(), &x)));
                }
            }
        }
        _ => r.skipped.push(format!("Wu relation on H^{top}(M;Z/2) (needs sq2.\"{top}\" and cup2.\"2,{top}\")")),
    }

    for &(name, d, needs) in NEEDS {
        if d != dim {
            continue;
        }
        let miss: Vec<String> = needs.iter().filter_map(|&n| missing(model, n)).collect();
        if miss.is_empty() {
            r.unlocked.push(name);
        } else {
            r.locked.push((name, miss));
        }
    }
    r
}

/// `Sq²(xy) = x²y + Sq¹x Sq¹y + x y²` for `x, y ∈ H²(M;Z/2)`.
fn cartan<T: Scalar>(model: &CohomologyModel<T>, r: &mut ValidationReport) {
    let (Ok(sq2_4), Ok(c22), Ok(c24)) = (model.sq2(4), model.cup2(2, 2), model.cup2(2, 4)) else {
        r.skipped.push("Cartan formula (needs sq2.\"4\", cup2.\"2,2\", cup2.\"2,4\")".into());
        return;
    };
    let h2 = c22.left();
    let h6 = c24.target();
    // Sq¹x Sq¹y vanishes when H³(M;Z/2) is zero or Sq¹ is zero on H².
    let sq1_term: Option<Box<dyn Fn(usize, usize) -> _>> = match (model.h2(3), model.sq1(2), model.cup2(3, 3)) {
        (Err(_), _, _) => Some(Box::new(|_, _| h6.zero())),
        (Ok(g), _, _) if g.ngens() == 0 => Some(Box::new(|_, _| h6.zero())),
        (Ok(_), Ok(s), _) if (0..h2.ngens()).all(|i| s.target().is_zero(&s.apply(&h2.generator(i)))) => Some(Box::new(|_, _| h6.zero())),
        (Ok(_), Ok(s), Ok(c33)) => Some(Box::new(move |i, j| c33.apply(&s.apply(&h2.generator(i)), &s.apply(&h2.generator(j))))),
        _ => None,
    };
    let Some(sq1_term) = sq1_term else {
        r.skipped.push("Cartan formula (needs sq1.\"2\" and cup2.\"3,3\")".into());
        return;
    };
    for i in 0..h2.ngens() {
        for j in 0..h2.ngens() {
            let (x, y) = (h2.generator(i), h2.generator(j));
            let lhs = sq2_4.apply(&c22.apply(&x, &y));
            let xx = c22.apply(&x, &x);
            let yy = c22.apply(&y, &y);
            let rhs = h6.add(&h6.add(&c24.apply(&y, &xx), &sq1_term(i, j)), &c24.apply(&x, &yy));
            if lhs != rhs {
                r.flag("Cartan formula", format!("generators {i},{j}: Sq2(xy) = {lhs}, expansion gives {rhs}"));
            }
        }
    }
}
