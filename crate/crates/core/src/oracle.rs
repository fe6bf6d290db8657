//! Brute-force leg. Simples are built as explicit matrix modules and every
//! structural map (twist, braiding, pairing, trace) is evaluated literally.
//! Also the algebra `D(X)`, the map `psi`, the functor to `D(X)`-modules and
//! the monoidal map `c`.
//!
//! Basis of `V (x) W` is `p * dim W + q`. Matrices act on row vectors.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::cat_d::CategoryD;
use crate::cyclotomic::Cyclotomic;
use crate::error::OracleError;
use crate::group::FiniteGroup;
use crate::linalg::CMat;
use crate::matched_pair::CosetFactorization;
use crate::modular::s_tilde_entry;
use crate::representation::{induced_matrix, irreducible_matrices};

#[derive(Clone, Debug)]
pub struct ExplicitModule {
    pub label: String,
    /// Class members `y_1..y_k`, `y_1` the base.
    pub points: Vec<usize>,
    /// `conn[i]^-1 y_1 conn[i] = y_i`
    pub conn: Vec<usize>,
    pub d: usize,
    /// `action[x]` is the matrix of `<|^ x`.
    pub action: Vec<CMat>,
    /// Grade of each basis vector.
    pub grades: Vec<usize>,
    pub n: u32,
}

impl ExplicitModule {
    pub fn dim(&self) -> usize {
        self.grades.len()
    }

    pub fn act(&self, x: usize) -> &CMat {
        &self.action[x]
    }

    /// The unit object: one vector graded at `e`, trivial action.
    pub fn unit(group: &FiniteGroup, n: u32) -> Self {
        ExplicitModule {
            label: "1".into(),
            points: vec![group.identity()],
            conn: vec![group.identity()],
            d: 1,
            action: group.elements().map(|_| CMat::identity(1, n)).collect(),
            grades: vec![group.identity()],
            n,
        }
    }
}

pub fn build_explicit_module(cat: &CategoryD, k: usize) -> Result<ExplicitModule, OracleError> {
    let g = cat.f.group();
    let n = cat.n;
    let s = &cat.simples[k];
    let cd = &cat.classes[cat.class_idx[k]];
    let rep = irreducible_matrices(&cd.table, s.row, n)?;
    for &h in s.stab.elements() {
        let want = s.chi.eval(h).expect("stab");
        if rep.get(h).trace() != *want {
            return Err(OracleError::ProjectionFailed(format!(
                "{}: trace at {} is {}, expected {}",
                s.label,
                g.name(h),
                rep.get(h).trace().render(),
                want.render()
            )));
        }
    }
    let points = cd.class.members.clone();
    let conn = cd.conn.clone();
    let d = rep.degree();
    let action = g
        .elements()
        .map(|x| {
            let target: Vec<usize> = points
                .iter()
                .map(|&y| points.binary_search(&g.conj(y, x)).expect("class closed"))
                .collect();
            induced_matrix(g, &rep, &conn, &target, x, n)
        })
        .collect();
    let grades = points.iter().flat_map(|&y| std::iter::repeat(y).take(d)).collect();
    Ok(ExplicitModule {
        label: s.label.clone(),
        points,
        conn,
        d,
        action,
        grades,
        n,
    })
}

pub fn build_all(cat: &CategoryD) -> Result<Vec<ExplicitModule>, OracleError> {
    (0..cat.len()).into_par_iter().map(|k| build_explicit_module(cat, k)).collect()
}

/// A small generating set, greedily.
pub fn generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut span = g.generate(&[]);
    for x in g.elements() {
        if span.order() == g.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = g.generate(&gens);
        }
    }
    gens
}

/// `theta(xi) = xi <|^ ||xi||`.
pub fn twist(m: &ExplicitModule) -> CMat {
    let mut out = CMat::zeros(m.dim(), m.dim(), m.n);
    for p in 0..m.dim() {
        out.set_row(p, m.act(m.grades[p]).row(p));
    }
    out
}

/// `Some(c)` if `a = c I`.
pub fn scalar_of(a: &CMat) -> Option<Cyclotomic> {
    let c = a[(0, 0)].clone();
    let ok = (0..a.rows()).all(|i| (0..a.cols()).all(|j| if i == j { a[(i, j)] == c } else { a[(i, j)].is_zero() }));
    ok.then_some(c)
}

/// Grade of `xi (x) eta`: `|eta|^-1 |xi|^-1 <xi> <eta>`.
pub fn tensor_grade(f: &CosetFactorization, a: usize, b: usize) -> usize {
    let g = f.group();
    let (s1, u1) = f.grade(a);
    let (s2, u2) = f.grade(b);
    g.mul(g.inv(u2), g.mul(g.inv(u1), g.mul(s1, s2)))
}

pub fn tensor_grades(f: &CosetFactorization, v: &ExplicitModule, w: &ExplicitModule) -> Vec<usize> {
    let mut out = Vec::with_capacity(v.dim() * w.dim());
    for &a in &v.grades {
        for &b in &w.grades {
            out.push(tensor_grade(f, a, b));
        }
    }
    out
}

/// `(xi (x) eta) <|^ x = xi <|^ (|eta| ~> x) (x) eta <|^ x`.
pub fn tensor_action(f: &CosetFactorization, v: &ExplicitModule, w: &ExplicitModule, x: usize) -> CMat {
    let dw = w.dim();
    let aw = w.act(x);
    let mut out = CMat::zeros(v.dim() * dw, v.dim() * dw, v.n);
    for q in 0..dw {
        let av = v.act(f.tilde_act(w.grades[q], x));
        for p in 0..v.dim() {
            for (p2, a) in av.row(p).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (q2, b) in aw.row(q).iter().enumerate() {
                    if !b.is_zero() {
                        out[(p * dw + q, p2 * dw + q2)] = a * b;
                    }
                }
            }
        }
    }
    out
}

/// `Psi(xi (x) eta) = eta <|^ (<xi> <| |eta|)^-1 (x) xi <|^ |eta|`, as a map
/// from `V (x) W` to `W (x) V`.
pub fn braid(f: &CosetFactorization, v: &ExplicitModule, w: &ExplicitModule) -> CMat {
    let g = f.group();
    let (dv, dw) = (v.dim(), w.dim());
    let mut out = CMat::zeros(dv * dw, dw * dv, v.n);
    for p in 0..dv {
        let (t, _) = f.grade(v.grades[p]);
        for q in 0..dw {
            let (_, u) = f.grade(w.grades[q]);
            let m = f.act_m(t, u);
            let rw = w.act(g.inv(m)).row(q);
            let rv = v.act(u).row(p);
            for (q2, a) in rw.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (p2, b) in rv.iter().enumerate() {
                    if !b.is_zero() {
                        out[(p * dw + q, q2 * dv + p2)] = a * b;
                    }
                }
            }
        }
    }
    out
}

/// Evaluation of the dual of `V (x) W`, seen as `W* (x) V*`, against
/// coevaluation; entry `(r, c)` pairs dual vector `r` with basis vector `c`
/// after the `tau` corrections. The identity when `tau` is trivial.
pub fn pairing_matrix(f: &CosetFactorization, v: &ExplicitModule, w: &ExplicitModule) -> CMat {
    let g = f.group();
    let (dv, dw) = (v.dim(), w.dim());
    let n = v.n;
    let mut out = CMat::zeros(dv * dw, dv * dw, n);
    let mg = |gr: usize| f.grade(gr).0;
    for p in 0..dv {
        for q in 0..dw {
            let (sx, sy) = (mg(v.grades[p]), mg(w.grades[q]));
            let g2 = f.tau(sx, sy);
            let mb = f.act_m(f.left_inv(sx), g2);
            let g1 = f.tau(mb, f.dot(sx, sy));
            let aw1 = w.act(g1);
            let av2 = v.act(g.inv(g2));
            let alpha: Vec<Cyclotomic> = (0..dw).map(|j| aw1[(j, q)].clone()).collect();
            let beta: Vec<Cyclotomic> = (0..dv).map(|i| av2[(i, p)].clone()).collect();
            for p2 in 0..dv {
                for q2 in 0..dw {
                    let (s2, t2) = (mg(v.grades[p2]), mg(w.grades[q2]));
                    let h1 = f.tau(mb, f.dot(s2, t2));
                    let aw = w.act(g.inv(h1));
                    let av = v.act(f.tau(s2, t2));
                    let a2 = dot(&alpha, aw.row(q2));
                    if a2.is_zero() {
                        continue;
                    }
                    let b2 = dot(&beta, av.row(p2));
                    out[(p * dw + q, p2 * dw + q2)] = &a2 * &b2;
                }
            }
        }
    }
    out
}

fn dot(a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
    let mut acc = Cyclotomic::zero(a.first().map_or(1, |x| x.conductor()));
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Checks that `t` preserves grades and commutes with the action of `gens`.
pub fn check_morphism(
    grades: &[usize],
    act: impl Fn(usize) -> CMat,
    t: &CMat,
    gens: &[usize],
) -> Result<(), OracleError> {
    for i in 0..t.rows() {
        for j in 0..t.cols() {
            if !t[(i, j)].is_zero() && grades[i] != grades[j] {
                return Err(OracleError::NotAMorphism(format!("entry ({i},{j}) mixes grades")));
            }
        }
    }
    for &x in gens {
        let a = act(x);
        if let Some((i, j)) = (t * &a).first_difference(&(&a * t)) {
            return Err(OracleError::NotAMorphism(format!("fails to commute with element {x} at ({i},{j})")));
        }
    }
    Ok(())
}

/// Categorical trace of an endomorphism of `V (x) W`.
pub fn categorical_trace(
    f: &CosetFactorization,
    v: &ExplicitModule,
    w: &ExplicitModule,
    t: &CMat,
) -> Result<Cyclotomic, OracleError> {
    let gens = generators(f.group());
    check_morphism(&tensor_grades(f, v, w), |x| tensor_action(f, v, w, x), t, &gens)?;
    let p = pairing_matrix(f, v, w);
    let mut acc = Cyclotomic::zero(v.n);
    for r in 0..t.rows() {
        for c in 0..t.cols() {
            if !t[(r, c)].is_zero() && !p[(r, c)].is_zero() {
                acc += &(&t[(r, c)] * &p[(r, c)]);
            }
        }
    }
    Ok(acc)
}

/// Trace of an endomorphism of a single module, as `V (x) 1`.
pub fn module_trace(f: &CosetFactorization, v: &ExplicitModule, t: &CMat) -> Result<Cyclotomic, OracleError> {
    let one = ExplicitModule::unit(f.group(), v.n);
    categorical_trace(f, v, &one, t)
}

/// Trace of the double braiding on `V (x) W`.
pub fn s_tilde_oracle(f: &CosetFactorization, v: &ExplicitModule, w: &ExplicitModule) -> Result<Cyclotomic, OracleError> {
    let dd = &braid(f, v, w) * &braid(f, w, v);
    categorical_trace(f, v, w, &dd)
}

/// `Psi_{WV} Psi_{VW} theta_{V (x) W} = theta_V theta_W` on `V (x) W`.
pub fn ribbon_compatible(f: &CosetFactorization, v: &ExplicitModule, w: &ExplicitModule) -> bool {
    let (Some(tv), Some(tw)) = (scalar_of(&twist(v)), scalar_of(&twist(w))) else {
        return false;
    };
    let gr = tensor_grades(f, v, w);
    let k = gr.len();
    let mut th = CMat::zeros(k, k, v.n);
    for r in 0..k {
        th.set_row(r, tensor_action(f, v, w, gr[r]).row(r));
    }
    let lhs = &(&braid(f, v, w) * &braid(f, w, v)) * &th;
    lhs == CMat::identity(k, v.n).scale(&(&tv * &tw))
}

/// The twist commutes with every `<|^ x`.
pub fn theta_natural(m: &ExplicitModule) -> bool {
    let t = twist(m);
    m.action.iter().all(|a| &t * a == a * &t)
}

/// Trace of `xi -> delta_{y, ||xi||} xi <|^ x`.
pub fn brute_char(m: &ExplicitModule, y: usize, x: usize) -> Cyclotomic {
    let a = m.act(x);
    let mut acc = Cyclotomic::zero(m.n);
    for p in 0..m.dim() {
        if m.grades[p] == y {
            acc += &a[(p, p)];
        }
    }
    acc
}

// ---- D(X) ----

/// Formal sum of `delta_y (x) x`, keyed by `(y, x)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DXElement(pub BTreeMap<(usize, usize), Cyclotomic>);

impl DXElement {
    pub fn basis(y: usize, x: usize, n: u32) -> Self {
        let mut m = BTreeMap::new();
        m.insert((y, x), Cyclotomic::one(n));
        DXElement(m)
    }

    /// `1 = sum_y delta_y (x) e`.
    pub fn unit(g: &FiniteGroup, n: u32) -> Self {
        Self::sum_over_y(g, g.identity(), n)
    }

    /// `sum_y delta_y (x) x`.
    pub fn sum_over_y(g: &FiniteGroup, x: usize, n: u32) -> Self {
        DXElement(g.elements().map(|y| ((y, x), Cyclotomic::one(n))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, key: (usize, usize), c: Cyclotomic) {
        let e = self.0.entry(key).or_insert_with(|| Cyclotomic::zero(c.conductor()));
        *e += &c;
        if e.is_zero() {
            self.0.remove(&key);
        }
    }
}

/// `(delta_y (x) x)(delta_y' (x) x') = [y' = x^-1 y x] delta_y (x) x x'`.
pub fn dx_product(g: &FiniteGroup, a: &DXElement, b: &DXElement) -> DXElement {
    let mut out = DXElement::default();
    for (&(y, x), ca) in &a.0 {
        for (&(y2, x2), cb) in &b.0 {
            if y2 == g.conj(y, x) {
                out.add_term((y, g.mul(x, x2)), ca * cb);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PsiForm {
    /// `delta_{x^-1 y x} (x) x^-1`
    Literal,
    /// `delta_{x^-1 y^-1 x} (x) x^-1`
    Antipode,
}

pub fn psi_basis(g: &FiniteGroup, form: PsiForm, y: usize, x: usize) -> (usize, usize) {
    let y2 = match form {
        PsiForm::Literal => g.conj(y, x),
        PsiForm::Antipode => g.conj(g.inv(y), x),
    };
    (y2, g.inv(x))
}

pub fn psi(g: &FiniteGroup, form: PsiForm, a: &DXElement) -> DXElement {
    let mut out = DXElement::default();
    for (&(y, x), c) in &a.0 {
        out.add_term(psi_basis(g, form, y, x), c.clone());
    }
    out
}

/// Product of basis elements of the category-side algebra: the unique `ab`
/// with `(xi <| a) <| b = (xi <| t) <| ab`, `t = tau(<a>, <b>)`, where
/// `<delta_y (x) x> = <y>`. `None` when the product vanishes.
pub fn d_product(f: &CosetFactorization, a: (usize, usize), b: (usize, usize)) -> Option<(usize, usize)> {
    let g = f.group();
    let ((y, x), (y2, x2)) = (a, b);
    if y2 != g.conj(y, x) {
        return None;
    }
    let t = d_tau(f, a, b);
    let ti = g.inv(t);
    Some((g.conj(y, t), g.mul(ti, g.mul(x, x2))))
}

/// `tau(<a>, <b>)` for basis elements.
pub fn d_tau(f: &CosetFactorization, a: (usize, usize), b: (usize, usize)) -> usize {
    f.tau(f.grade(a.0).0, f.grade(b.0).0)
}

/// Matrix of `xi -> xi <| (delta_y (x) x)`.
pub fn d_action(m: &ExplicitModule, y: usize, x: usize) -> CMat {
    let mut out = CMat::zeros(m.dim(), m.dim(), m.n);
    for p in 0..m.dim() {
        if m.grades[p] == y {
            out.set_row(p, m.act(x).row(p));
        }
    }
    out
}

/// Failures of `M_a M_b = M_t M_ab` over all pairs of basis elements.
pub fn d_product_failures(f: &CosetFactorization, m: &ExplicitModule) -> usize {
    let g = f.group();
    let mut bad = 0;
    for y in g.elements() {
        for x in g.elements() {
            let ma = d_action(m, y, x);
            for y2 in g.elements() {
                for x2 in g.elements() {
                    let lhs = &ma * &d_action(m, y2, x2);
                    let rhs = match d_product(f, (y, x), (y2, x2)) {
                        Some((yy, xx)) => m.act(d_tau(f, (y, x), (y2, x2))) * &d_action(m, yy, xx),
                        None => CMat::zeros(m.dim(), m.dim(), m.n),
                    };
                    if lhs != rhs {
                        bad += 1;
                    }
                }
            }
        }
    }
    bad
}

/// Failures of `psi(b) psi(a) = psi(ab) (sum_z delta_z (x) t^-1)` over all
/// pairs of basis elements.
pub fn twisted_multiplicativity_failures(f: &CosetFactorization, form: PsiForm, n: u32) -> usize {
    let g = f.group();
    let mut bad = 0;
    for y in g.elements() {
        for x in g.elements() {
            let a = (y, x);
            let pa = psi(g, form, &DXElement::basis(y, x, n));
            for y2 in g.elements() {
                for x2 in g.elements() {
                    let b = (y2, x2);
                    let pb = psi(g, form, &DXElement::basis(y2, x2, n));
                    let lhs = dx_product(g, &pb, &pa);
                    let rhs = match d_product(f, a, b) {
                        Some((yy, xx)) => {
                            let t = d_tau(f, a, b);
                            let corr = DXElement::sum_over_y(g, g.inv(t), n);
                            dx_product(g, &psi(g, form, &DXElement::basis(yy, xx, n)), &corr)
                        }
                        None => DXElement::default(),
                    };
                    if lhs != rhs {
                        bad += 1;
                    }
                }
            }
        }
    }
    bad
}

/// `chi(V)`: same space, grade `|||chi(xi)||| = ||xi||^-1`, and
/// `x .> chi(xi) = chi(xi <|^ x^-1)`.
pub fn chi_grades(g: &FiniteGroup, m: &ExplicitModule) -> Vec<usize> {
    m.grades.iter().map(|&y| g.inv(y)).collect()
}

pub fn chi_left_action(g: &FiniteGroup, m: &ExplicitModule, x: usize) -> CMat {
    m.act(g.inv(x)).clone()
}

/// `|||x .> xi||| = x |||xi||| x^-1` on basis vectors.
pub fn chi_grade_covariant(g: &FiniteGroup, m: &ExplicitModule) -> bool {
    let gr = chi_grades(g, m);
    g.elements().all(|x| {
        let a = chi_left_action(g, m, x);
        (0..m.dim()).all(|p| {
            (0..m.dim()).all(|r| a[(p, r)].is_zero() || gr[r] == g.mul(x, g.mul(gr[p], g.inv(x))))
        })
    })
}

/// `(y, x, basis vector)` triples where
/// `chi(xi <|^ (delta_y (x) x)) = psi(delta_y (x) x) .> chi(xi)` fails.
pub fn intertwining_failures(g: &FiniteGroup, m: &ExplicitModule, form: PsiForm) -> usize {
    let gr = chi_grades(g, m);
    let mut bad = 0;
    for x in g.elements() {
        let a = m.act(x);
        for y in g.elements() {
            let (y2, xi) = psi_basis(g, form, y, x);
            let b = chi_left_action(g, m, xi);
            for p in 0..m.dim() {
                let hit = m.grades[p] == y;
                let ok = (0..m.dim()).all(|r| {
                    let lhs = if hit { a[(p, r)].clone() } else { Cyclotomic::zero(m.n) };
                    let rhs = if gr[r] == y2 { b[(p, r)].clone() } else { Cyclotomic::zero(m.n) };
                    lhs == rhs
                });
                if !ok {
                    bad += 1;
                }
            }
        }
    }
    bad
}

/// `c: chi(V) (x) chi(W) -> chi(V (x) W)`,
/// `chi(eta) (x) chi(xi) -> chi(eta <|^ <xi>^-1 (x) xi)`.
pub fn c_map(f: &CosetFactorization, v: &ExplicitModule, w: &ExplicitModule) -> CMat {
    let g = f.group();
    let (dv, dw) = (v.dim(), w.dim());
    let mut out = CMat::zeros(dv * dw, dv * dw, v.n);
    for q in 0..dw {
        let (s, _) = f.grade(w.grades[q]);
        let av = v.act(g.inv(s));
        for p in 0..dv {
            for (p2, a) in av.row(p).iter().enumerate() {
                if !a.is_zero() {
                    out[(p * dw + q, p2 * dw + q)] = a.clone();
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CMapCheck {
    pub equivariant: bool,
    pub grade_preserving: bool,
    pub invertible: bool,
}

pub fn check_c_map(f: &CosetFactorization, v: &ExplicitModule, w: &ExplicitModule) -> CMapCheck {
    let g = f.group();
    let c = c_map(f, v, w);
    let equivariant = g.elements().all(|x| {
        let xi = g.inv(x);
        let src = v.act(xi).kron(w.act(xi));
        &src * &c == &c * &tensor_action(f, v, w, xi)
    });
    let tg = tensor_grades(f, v, w);
    let dw = w.dim();
    let grade_preserving = (0..c.rows()).all(|r| {
        let want = g.mul(g.inv(v.grades[r / dw]), g.inv(w.grades[r % dw]));
        (0..c.cols()).all(|col| c[(r, col)].is_zero() || g.inv(tg[col]) == want)
    });
    CMapCheck {
        equivariant,
        grade_preserving,
        invertible: c.rank() == c.rows(),
    }
}

/// Character of `delta_y (x) x` on a `D(X)`-module with the given grades and
/// left action `x .> ` (matrix `act`).
pub fn dx_char(grades: &[usize], act: &CMat, y: usize) -> Cyclotomic {
    let mut acc = Cyclotomic::zero(act.conductor());
    for p in 0..grades.len() {
        if grades[p] == y {
            acc += &act[(p, p)];
        }
    }
    acc
}

/// `chi_{V (x) W}(delta_y (x) x) = sum_{ab = y} chi_V(delta_a (x) x) chi_W(delta_b (x) x)`
/// for all `(y, x)`; returns the number of failures.
pub fn multiplicativity_failures(f: &CosetFactorization, v: &ExplicitModule, w: &ExplicitModule) -> usize {
    let g = f.group();
    let gv = chi_grades(g, v);
    let gw = chi_grades(g, w);
    let gt: Vec<usize> = tensor_grades(f, v, w).into_iter().map(|y| g.inv(y)).collect();
    let mut bad = 0;
    for x in g.elements() {
        let xi = g.inv(x);
        let at = tensor_action(f, v, w, xi);
        let (av, aw) = (v.act(xi), w.act(xi));
        for y in g.elements() {
            let lhs = dx_char(&gt, &at, y);
            let mut rhs = Cyclotomic::zero(v.n);
            for a in g.elements() {
                let b = g.mul(g.inv(a), y);
                let cv = dx_char(&gv, av, a);
                if cv.is_zero() {
                    continue;
                }
                rhs += &(&cv * &dx_char(&gw, aw, b));
            }
            if lhs != rhs {
                bad += 1;
            }
        }
    }
    bad
}

/// `chi(delta_{h y h^-1} (x) h x h^-1) = chi(delta_y (x) x)`; failure count.
pub fn adjoint_invariance_failures(g: &FiniteGroup, m: &ExplicitModule) -> usize {
    let gr = chi_grades(g, m);
    let ch = |y: usize, x: usize| dx_char(&gr, &chi_left_action(g, m, x), y);
    let mut bad = 0;
    for y in g.elements() {
        for x in g.elements() {
            let base = ch(y, x);
            for h in g.elements() {
                let hi = g.inv(h);
                if ch(g.mul(h, g.mul(y, hi)), g.mul(h, g.mul(x, hi))) != base {
                    bad += 1;
                }
            }
        }
    }
    bad
}

// ---- suite ----

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSelection {
    All,
    /// Every `k`-th pair in row-major order, plus the diagonal.
    Sample(usize),
}

impl PairSelection {
    pub fn parse(s: &str) -> Option<Self> {
        if s == "all" {
            return Some(PairSelection::All);
        }
        let k = s.strip_prefix("sample:")?.parse().ok()?;
        (k > 0).then_some(PairSelection::Sample(k))
    }

    fn pairs(&self, k: usize) -> Vec<(usize, usize)> {
        let all = (0..k).flat_map(|i| (0..k).map(move |j| (i, j)));
        match *self {
            PairSelection::All => all.collect(),
            PairSelection::Sample(step) => all.enumerate().filter(|(i, (a, b))| i % step == 0 || a == b).map(|(_, p)| p).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub v: String,
    pub w: String,
    pub formula: String,
    pub oracle: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub checks: Vec<OracleCheck>,
    pub pairs_checked: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl OracleReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&OracleCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn push(checks: &mut Vec<OracleCheck>, name: &str, bad: usize, of: usize) {
    checks.push(OracleCheck {
        name: name.into(),
        pass: bad == 0,
        detail: format!("{bad} failures out of {of}"),
    });
}

/// Per-module and per-pair comparisons of the explicit modules against the
/// formula side.
pub fn run_module_checks(cat: &CategoryD, mods: &[ExplicitModule], sel: PairSelection) -> Result<OracleReport, OracleError> {
    let f = &cat.f;
    let g = f.group();
    let k = cat.len();
    let mut checks = Vec::new();

    let dims = (0..k).filter(|&i| module_trace(f, &mods[i], &CMat::identity(mods[i].dim(), cat.n)).ok() != Some(Cyclotomic::from_int(cat.n, cat.dim(i) as i64))).count();
    push(&mut checks, "trace(id_V) = dim V", dims, k);

    let theta_bad = (0..k)
        .filter(|&i| scalar_of(&twist(&mods[i])).as_ref() != Some(&cat.theta(i)))
        .count();
    push(&mut checks, "twist = Theta_V I", theta_bad, k);

    let tr_theta = (0..k)
        .filter(|&i| {
            let want = &cat.theta(i) * &Cyclotomic::from_int(cat.n, cat.dim(i) as i64);
            module_trace(f, &mods[i], &twist(&mods[i])).ok() != Some(want)
        })
        .count();
    push(&mut checks, "trace(theta_V) = Theta_V dim V", tr_theta, k);

    let dual_bad = (0..k)
        .filter(|&i| scalar_of(&twist(&mods[cat.dual(i)])) != scalar_of(&twist(&mods[i])))
        .count();
    push(&mut checks, "theta_{V*} = Theta_V", dual_bad, k);

    let nat = (0..k).filter(|&i| !theta_natural(&mods[i])).count();
    push(&mut checks, "theta natural", nat, k);

    let mut char_bad = 0;
    let mut char_total = 0;
    for (i, m) in mods.iter().enumerate() {
        for y in g.elements() {
            for x in g.elements() {
                if !g.commute(x, y) {
                    if !brute_char(m, y, x).is_zero() {
                        char_bad += 1;
                    }
                    continue;
                }
                char_total += 1;
                if brute_char(m, y, x) != cat.char_d(i, y, x) {
                    char_bad += 1;
                }
            }
        }
    }
    push(&mut checks, "brute_char = char_D", char_bad, char_total);

    let pairs = sel.pairs(k);
    let results: Vec<Result<(bool, bool, Option<Mismatch>), OracleError>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let o = s_tilde_oracle(f, &mods[i], &mods[j])?;
            let e = s_tilde_entry(cat, i, j);
            let mm = (o != e).then(|| Mismatch {
                v: mods[i].label.clone(),
                w: mods[j].label.clone(),
                formula: e.render(),
                oracle: o.render(),
            });
            Ok((mm.is_none(), ribbon_compatible(f, &mods[i], &mods[j]), mm))
        })
        .collect();
    let mut s_bad = 0;
    let mut r_bad = 0;
    let mut first = None;
    for r in results {
        let (ok, rib, mm) = r?;
        if !ok {
            s_bad += 1;
            if first.is_none() {
                first = mm;
            }
        }
        if !rib {
            r_bad += 1;
        }
    }
    push(&mut checks, "trace(Psi^2) = S~ entry", s_bad, pairs.len());
    push(&mut checks, "ribbon compatibility", r_bad, pairs.len());

    Ok(OracleReport {
        checks,
        pairs_checked: pairs.len(),
        first_mismatch: first,
    })
}

/// Checks of the passage to `D(X)`-modules.
pub fn run_dx_checks(cat: &CategoryD, mods: &[ExplicitModule], sel: PairSelection) -> Vec<OracleCheck> {
    let f = &cat.f;
    let g = f.group();
    let k = cat.len();
    let n = cat.n;
    let mut checks = Vec::new();
    let ord = g.order();

    push(&mut checks, "D(X) unit", usize::from(!dx_unit_ok(g, n)), 1);
    push(
        &mut checks,
        "psi twisted multiplicativity (literal)",
        twisted_multiplicativity_failures(f, PsiForm::Literal, n),
        ord.pow(4),
    );
    push(
        &mut checks,
        "psi twisted multiplicativity (antipode)",
        twisted_multiplicativity_failures(f, PsiForm::Antipode, n),
        ord.pow(4),
    );

    let dprod: usize = mods.par_iter().map(|m| usize::from(d_product_failures(f, m) > 0)).sum();
    push(&mut checks, "D-product on modules", dprod, k);

    let cov = mods.iter().filter(|m| !chi_grade_covariant(g, m)).count();
    push(&mut checks, "chi grade covariance", cov, k);

    let lit = mods.iter().filter(|m| intertwining_failures(g, m, PsiForm::Literal) > 0).count();
    checks.push(OracleCheck {
        name: "intertwining (literal psi)".into(),
        pass: lit == 0,
        detail: format!("{lit} of {k} simples fail"),
    });
    let anti = mods.iter().filter(|m| intertwining_failures(g, m, PsiForm::Antipode) > 0).count();
    push(&mut checks, "intertwining (antipode psi)", anti, k);

    let adj = mods.iter().filter(|m| adjoint_invariance_failures(g, m) > 0).count();
    push(&mut checks, "adjoint invariance", adj, k);

    let pairs = sel.pairs(k);
    let res: Vec<(CMapCheck, usize)> = pairs
        .par_iter()
        .map(|&(i, j)| (check_c_map(f, &mods[i], &mods[j]), multiplicativity_failures(f, &mods[i], &mods[j])))
        .collect();
    let np = pairs.len();
    push(&mut checks, "c equivariant", res.iter().filter(|r| !r.0.equivariant).count(), np);
    push(&mut checks, "c grade preserving", res.iter().filter(|r| !r.0.grade_preserving).count(), np);
    push(&mut checks, "c invertible", res.iter().filter(|r| !r.0.invertible).count(), np);
    push(&mut checks, "character multiplicativity", res.iter().filter(|r| r.1 > 0).count(), np);
    checks
}

fn dx_unit_ok(g: &FiniteGroup, n: u32) -> bool {
    let one = DXElement::unit(g, n);
    g.elements().all(|y| {
        g.elements().all(|x| {
            let b = DXElement::basis(y, x, n);
            dx_product(g, &one, &b) == b && dx_product(g, &b, &one) == b
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn d6() -> FiniteGroup {
        let mul = |x: usize, y: usize| {
            let (i, j) = (x / 6, x % 6);
            let (k, l) = (y / 6, y % 6);
            let jj = if k % 2 == 1 { 6 - j } else { j } + l;
            6 * ((i + k) % 2) + jj % 6
        };
        let names = ["e", "a", "a2", "a3", "a4", "a5", "b", "ba", "ba2", "ba3", "ba4", "ba5"];
        let table = (0..12).map(|x| (0..12).map(|y| mul(x, y)).collect()).collect();
        FiniteGroup::from_table(names.iter().map(|s| s.to_string()).collect(), table).unwrap()
    }

    fn cat() -> CategoryD {
        let x = d6();
        let g = x.subgroup(&[0, 2, 4, 6, 8, 10]).unwrap();
        CategoryD::new(&CosetFactorization::build(&x, &g, &[0, 1]).unwrap()).unwrap()
    }

    #[test]
    fn modules_are_right_representations() {
        let c = cat();
        let g = c.f.group();
        for k in (0..c.len()).step_by(5) {
            let m = build_explicit_module(&c, k).unwrap();
            assert_eq!(m.dim(), c.dim(k));
            for x in g.elements() {
                for z in g.elements() {
                    assert_eq!(m.act(x) * m.act(z), *m.act(g.mul(x, z)));
                }
            }
        }
    }

    #[test]
    fn unit_braid_is_flip_and_pairing_trivial() {
        let c = cat();
        let u = build_explicit_module(&c, c.unit()).unwrap();
        let one = ExplicitModule::unit(c.f.group(), c.n);
        assert_eq!(twist(&u), CMat::identity(1, c.n));
        assert_eq!(braid(&c.f, &u, &one), CMat::identity(1, c.n));
        let v = build_explicit_module(&c, 30).unwrap();
        assert!(pairing_matrix(&c.f, &v, &v).is_identity());
    }

    #[test]
    fn non_morphism_is_rejected() {
        let c = cat();
        let v = build_explicit_module(&c, 4).unwrap();
        let one = ExplicitModule::unit(c.f.group(), c.n);
        let mut t = CMat::zeros(v.dim(), v.dim(), c.n);
        t[(0, v.dim() - 1)] = Cyclotomic::one(c.n);
        assert!(matches!(module_trace(&c.f, &v, &t), Err(OracleError::NotAMorphism(_))));
        assert!(categorical_trace(&c.f, &v, &one, &CMat::identity(v.dim(), c.n)).is_ok());
    }

    #[test]
    fn dx_product_rules() {
        let g = d6();
        let n = 6;
        let b = DXElement::basis(7, 0, n);
        assert_eq!(dx_product(&g, &b, &b), b);
        assert!(dx_product(&g, &DXElement::basis(7, 1, n), &DXElement::basis(7, 0, n)).is_zero());
        assert!(dx_unit_ok(&g, n));
        assert_eq!(psi_basis(&g, PsiForm::Literal, 0, 1), (0, 5));
    }

    #[test]
    fn pair_selection_parses() {
        assert_eq!(PairSelection::parse("all"), Some(PairSelection::All));
        assert_eq!(PairSelection::parse("sample:7"), Some(PairSelection::Sample(7)));
        assert_eq!(PairSelection::parse("sample:0"), None);
        assert_eq!(PairSelection::Sample(3).pairs(2).len(), 2);
        assert_eq!(PairSelection::Sample(2).pairs(3).len(), 5);
    }
}
