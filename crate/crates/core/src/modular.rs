//! Modular data: `S~` from the group-character sum, `S`, `T`, `C`, `P+-`,
//! and exact checks of the matrix relations.

use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::cat_d::CategoryD;
use crate::cyclotomic::Cyclotomic;
use crate::linalg::CMat;

/// `sum_{u,v in G; s,t in M; su vt = vt su} chi_{W_{us}}(s^-1 t^-1 v^-1 s) chi_{V_{vt}}(u^-1 s^-1)`.
///
/// This is the trace of the double braiding on `V (x) W`.
pub fn s_tilde_entry(cat: &CategoryD, v: usize, w: usize) -> Cyclotomic {
    let f = &cat.f;
    let g = f.group();
    let mut acc = Cyclotomic::zero(cat.n);
    // a = s u (MG order), b = v t (GM order)
    for a in g.elements() {
        let (s, u) = f.factor_mg(a);
        let us = g.mul(u, s);
        if cat.elem_class[us] != cat.class_idx[w] {
            continue;
        }
        let si = g.inv(s);
        let usi = g.inv(a);
        for b in g.elements() {
            if !g.commute(a, b) {
                continue;
            }
            if cat.elem_class[b] != cat.class_idx[v] {
                continue;
            }
            let (vv, t) = f.factor_gm(b);
            let arg_w = g.mul(si, g.mul(g.inv(t), g.mul(g.inv(vv), s)));
            let x = cat.chi_at(w, us, arg_w);
            if x.is_zero() {
                continue;
            }
            let y = cat.chi_at(v, b, usi);
            if !y.is_zero() {
                acc += &(&x * &y);
            }
        }
    }
    acc
}

/// The same sum with `V*` in place of `V`.
pub fn s_tilde_dual_entry(cat: &CategoryD, v: usize, w: usize) -> Cyclotomic {
    s_tilde_entry(cat, cat.dual(v), w)
}

pub fn s_tilde(cat: &CategoryD) -> CMat {
    matrix_of(cat, s_tilde_entry)
}

pub fn s_tilde_dual(cat: &CategoryD) -> CMat {
    matrix_of(cat, s_tilde_dual_entry)
}

fn matrix_of(cat: &CategoryD, f: fn(&CategoryD, usize, usize) -> Cyclotomic) -> CMat {
    let k = cat.len();
    let rows: Vec<Vec<Cyclotomic>> = (0..k)
        .into_par_iter()
        .map(|i| (0..k).map(|j| f(cat, i, j)).collect())
        .collect();
    CMat::from_rows(rows, cat.n)
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    /// `None` when the relation could not be evaluated exactly.
    pub holds: Option<bool>,
    /// First differing entry `(row, col)`.
    pub first_difference: Option<(usize, usize)>,
    pub note: Option<String>,
}

impl RelationCheck {
    fn mat(name: impl Into<String>, lhs: &CMat, rhs: &CMat) -> Self {
        let d = lhs.first_difference(rhs);
        RelationCheck {
            name: name.into(),
            holds: Some(d.is_none()),
            first_difference: d,
            note: None,
        }
    }

    fn flag(name: impl Into<String>, ok: bool, note: Option<String>) -> Self {
        RelationCheck {
            name: name.into(),
            holds: Some(ok),
            first_difference: None,
            note,
        }
    }

    fn skipped(name: impl Into<String>, note: impl Into<String>) -> Self {
        RelationCheck {
            name: name.into(),
            holds: None,
            first_difference: None,
            note: Some(note.into()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ModularData {
    pub labels: Vec<String>,
    pub dims: Vec<usize>,
    pub theta: Vec<Cyclotomic>,
    pub s_tilde: CMat,
    /// `S~` with the first index dualized.
    pub s_tilde_dual: CMat,
    /// `S~ / sqrt(P+ P-)` when the root is rational.
    pub s: Option<CMat>,
    pub t: CMat,
    pub c: CMat,
    pub p_plus: Cyclotomic,
    pub p_minus: Cyclotomic,
    /// `sqrt(P+ P-)` when rational.
    pub d: Option<Cyclotomic>,
    pub report: Vec<RelationCheck>,
    pub n: u32,
}

impl ModularData {
    pub fn all_hold(&self) -> bool {
        self.report.iter().all(|r| r.holds != Some(false))
    }

    pub fn check(&self, name: &str) -> Option<&RelationCheck> {
        self.report.iter().find(|r| r.name == name)
    }
}

pub fn build_modular_data(cat: &CategoryD) -> ModularData {
    let n = cat.n;
    let k = cat.len();
    let s_tilde = s_tilde(cat);
    let s_tilde_dual = s_tilde_dual(cat);
    let theta: Vec<Cyclotomic> = (0..k).map(|i| cat.theta(i)).collect();
    let dims: Vec<usize> = (0..k).map(|i| cat.dim(i)).collect();
    let mut p_plus = Cyclotomic::zero(n);
    let mut p_minus = Cyclotomic::zero(n);
    for i in 0..k {
        let d2 = Cyclotomic::from_int(n, (dims[i] * dims[i]) as i64);
        p_plus += &(&theta[i] * &d2);
        p_minus += &(&theta[i].inv().expect("root of unity") * &d2);
    }
    let t = CMat::diag(&theta, n);
    let mut c = CMat::zeros(k, k, n);
    for i in 0..k {
        c[(i, cat.dual(i))] = Cyclotomic::one(n);
    }
    let pp = &p_plus * &p_minus;
    let d = pp.as_rational().and_then(|r| rational_sqrt(&r)).map(|r| Cyclotomic::from_rational(n, r));

    let mut report = Vec::new();
    let id = CMat::identity(k, n);
    report.push(RelationCheck::flag("S~ symmetric", s_tilde.is_symmetric(), None));
    let unit = cat.unit();
    let col_ok = (0..k).all(|i| s_tilde[(i, unit)] == Cyclotomic::from_int(n, dims[i] as i64));
    report.push(RelationCheck::flag("S~_{V,1} = dim V", col_ok, None));
    let dual_sym = (0..k).all(|i| (0..k).all(|j| s_tilde[(i, j)] == s_tilde[(cat.dual(i), cat.dual(j))]));
    report.push(RelationCheck::flag("S~_{VW} = S~_{V*W*}", dual_sym, None));
    let rank = s_tilde.rank();
    report.push(RelationCheck::flag(
        "S~ invertible",
        rank == k,
        (rank < k).then(|| format!("rank {rank} < {k}")),
    ));
    report.push(RelationCheck::mat("C^2 = 1", &(&c * &c), &id));
    report.push(RelationCheck::mat("CS~ = S~C", &(&c * &s_tilde), &(&s_tilde * &c)));
    report.push(RelationCheck::mat("CT = TC", &(&c * &t), &(&t * &c)));

    let st = &s_tilde * &t;
    let st3 = st.pow(3);
    let s2 = &s_tilde * &s_tilde;
    report.push(RelationCheck::mat("(S~T)^3 = P+ S~^2", &st3, &s2.scale(&p_plus)));
    report.push(RelationCheck::mat("S~^2 = P+ P- C", &s2, &c.scale(&pp)));
    let st6 = &st3 * &st3;
    let s4 = &s2 * &s2;
    report.push(RelationCheck::mat(
        "(S~T)^6 = (P+)^2 S~^4",
        &st6,
        &s4.scale(&(&p_plus * &p_plus)),
    ));

    let s = d.as_ref().map(|d| s_tilde.scale(&d.inv().expect("nonzero")));
    match (&s, &d) {
        (Some(s), Some(d)) => {
            let sn2 = s * s;
            // sqrt(P+/P-) = P+ / sqrt(P+ P-)
            let ratio = &p_plus / d;
            report.push(RelationCheck::mat(
                "S~^2 = (1/sqrt(P+P-)) (S~T)^3",
                &s2,
                &st3.scale(&d.inv().expect("nonzero")),
            ));
            report.push(RelationCheck::mat(
                "(ST)^3 = sqrt(P+/P-) S^2",
                &(s * &t).pow(3),
                &sn2.scale(&ratio),
            ));
            report.push(RelationCheck::mat("S^2 = C", &sn2, &c));
        }
        _ => {
            let why = format!("P+ P- = {} is not a rational square", pp.render());
            report.push(RelationCheck::skipped("S~^2 = (1/sqrt(P+P-)) (S~T)^3", why.clone()));
            report.push(RelationCheck::skipped("(ST)^3 = sqrt(P+/P-) S^2", why.clone()));
            report.push(RelationCheck::skipped("S^2 = C", why));
        }
    }

    ModularData {
        labels: cat.labels(),
        dims,
        theta,
        s_tilde,
        s_tilde_dual,
        s,
        t,
        c,
        p_plus,
        p_minus,
        d,
        report,
        n,
    }
}

/// Summary of the modularity conditions.
#[derive(Clone, Debug, Serialize)]
pub struct ModularityVerdict {
    pub finitely_many_simples: bool,
    pub schur_labels_unique: bool,
    pub s_tilde_invertible: bool,
}

pub fn verify_modular(cat: &CategoryD, md: &ModularData) -> ModularityVerdict {
    let mut keys: Vec<(usize, usize)> = cat.simples.iter().map(|s| (s.base, s.row)).collect();
    keys.sort_unstable();
    keys.dedup();
    ModularityVerdict {
        finitely_many_simples: true,
        schur_labels_unique: keys.len() == cat.len(),
        s_tilde_invertible: md.s_tilde.rank() == cat.len(),
    }
}

/// Non-negative square root of a rational, if it is a perfect square.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let (a, b) = (r.numer(), r.denom());
    let (sa, sb) = (a.sqrt(), b.sqrt());
    (&sa * &sa == *a && &sb * &sb == *b).then(|| BigRational::new(sa, sb))
}
