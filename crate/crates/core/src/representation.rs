//! Explicit irreducible matrices realizing a given irreducible character.
//!
//! For `chi` of degree `d`, pick a subgroup `K` and a linear character `lambda`
//! of `K` with `<Res chi, lambda> = 1`. Then `f = e_chi e_lambda` generates a
//! right ideal of `Q(z)[H]` affording `chi`, and right multiplication on the
//! basis `f h_1, ..., f h_d` gives the matrices (row-vector convention,
//! `rho(gh) = rho(g) rho(h)`).

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::chartable::{character_table, CharacterTable};
use crate::cyclotomic::Cyclotomic;
use crate::error::OracleError;
use crate::group::FiniteGroup;
use crate::linalg::{vec_mul, CMat};

#[derive(Clone, Debug)]
pub struct MatrixRep {
    /// Ambient element indices, sorted.
    pub support: Vec<usize>,
    pub mats: Vec<CMat>,
}

impl MatrixRep {
    pub fn degree(&self) -> usize {
        self.mats[0].rows()
    }

    pub fn get(&self, g: usize) -> &CMat {
        let i = self.support.binary_search(&g).expect("element in support");
        &self.mats[i]
    }
}

/// Matrices for row `r` of `table`, all entries in `Q(z_n)`; `n` must be a
/// multiple of `table.conductor`.
pub fn irreducible_matrices(table: &CharacterTable, r: usize, n: u32) -> Result<MatrixRep, OracleError> {
    let h = &table.group;
    let order = h.order();
    let d = table.degrees[r];
    let chi: Vec<Cyclotomic> = (0..order).map(|g| table.value(r, g).lift(n)).collect();
    if d == 1 {
        return Ok(MatrixRep {
            support: table.parent.clone(),
            mats: chi.iter().map(|v| CMat::from_rows(vec![vec![v.clone()]], n)).collect(),
        });
    }
    for k in candidate_subgroups(h) {
        let kg = sub_as_group(h, &k);
        let kt = character_table(&kg)?;
        for lr in 0..kt.rows.len() {
            if kt.degrees[lr] != 1 {
                continue;
            }
            let lambda: Vec<Cyclotomic> = (0..k.len()).map(|i| kt.value(lr, i).lift(n)).collect();
            let mut ip = Cyclotomic::zero(n);
            for (i, &kk) in k.iter().enumerate() {
                ip += &(&chi[kk] * &lambda[i].conj());
            }
            let ip = ip.scale(&BigRational::new(1.into(), BigInt::from(k.len())));
            if !ip.is_one() {
                continue;
            }
            for (conj_chi, conj_lambda) in [(false, false), (false, true), (true, false), (true, true)] {
                if let Some(mats) = try_build(h, &chi, d, &k, &lambda, conj_chi, conj_lambda, n) {
                    return Ok(MatrixRep {
                        support: table.parent.clone(),
                        mats,
                    });
                }
            }
        }
    }
    Err(OracleError::ProjectionFailed(format!(
        "no monomial construction found for degree {d} character of a group of order {order}"
    )))
}

/// Right regular representation: `e_h rho(g) = e_{hg}`.
pub fn regular_rep(table: &CharacterTable, n: u32) -> MatrixRep {
    let h = &table.group;
    let k = h.order();
    let mats = h
        .elements()
        .map(|g| {
            let mut m = CMat::zeros(k, k, n);
            for a in h.elements() {
                m[(a, h.mul(a, g))] = Cyclotomic::one(n);
            }
            m
        })
        .collect();
    MatrixRep {
        support: table.parent.clone(),
        mats,
    }
}

/// Block matrix of an induced action. Point `i` is reached from the base by
/// `conn[i]`; `x` sends point `i` to `target[i]`; block `(i, target[i])` is
/// `rho(conn[i] x conn[target[i]]^-1)`.
pub fn induced_matrix(group: &FiniteGroup, rep: &MatrixRep, conn: &[usize], target: &[usize], x: usize, n: u32) -> CMat {
    let d = rep.degree();
    let k = conn.len();
    let mut out = CMat::zeros(k * d, k * d, n);
    for (i, &j) in target.iter().enumerate() {
        let h = group.mul(conn[i], group.mul(x, group.inv(conn[j])));
        let b = rep.get(h);
        for p in 0..d {
            for q in 0..d {
                out[(i * d + p, j * d + q)] = b[(p, q)].clone();
            }
        }
    }
    out
}

fn sub_as_group(h: &FiniteGroup, k: &[usize]) -> FiniteGroup {
    let sub = h.subgroup(k).expect("generated subgroup");
    sub.as_group(h)
}

/// Cyclic subgroups (largest first), then two-generated ones.
fn candidate_subgroups(h: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for g in h.elements() {
        let s = h.generate(&[g]).elements().to_vec();
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let cyclic = out.len();
    for a in h.elements() {
        for b in (a + 1)..h.order() {
            let s = h.generate(&[a, b]).elements().to_vec();
            if s.len() < h.order() && !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out[cyclic..].sort_by_key(|s| std::cmp::Reverse(s.len()));
    out
}

/// Group algebra product.
fn ga_mul(h: &FiniteGroup, a: &[Cyclotomic], b: &[Cyclotomic], n: u32) -> Vec<Cyclotomic> {
    let mut out = vec![Cyclotomic::zero(n); h.order()];
    for (g, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (k, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[h.mul(g, k)] += &(x * y);
        }
    }
    out
}

/// `f * g` for a group element `g`: coefficient of `x` is `f[x g^-1]`.
fn right_translate(h: &FiniteGroup, f: &[Cyclotomic], g: usize) -> Vec<Cyclotomic> {
    let gi = h.inv(g);
    (0..h.order()).map(|x| f[h.mul(x, gi)].clone()).collect()
}

#[allow(clippy::too_many_arguments)]
fn try_build(
    h: &FiniteGroup,
    chi: &[Cyclotomic],
    d: usize,
    k: &[usize],
    lambda: &[Cyclotomic],
    conj_chi: bool,
    conj_lambda: bool,
    n: u32,
) -> Option<Vec<CMat>> {
    let order = h.order();
    let sc = BigRational::new(BigInt::from(d), BigInt::from(order));
    let e_chi: Vec<Cyclotomic> = (0..order)
        .map(|g| {
            let v = &chi[h.inv(g)];
            let v = if conj_chi { v.conj() } else { v.clone() };
            v.scale(&sc)
        })
        .collect();
    let sl = BigRational::new(1.into(), BigInt::from(k.len()));
    let mut e_lambda = vec![Cyclotomic::zero(n); order];
    for &kk in k {
        let ki = h.inv(kk);
        let j = k.iter().position(|&x| x == ki).expect("closed");
        let v = if conj_lambda { lambda[j].conj() } else { lambda[j].clone() };
        e_lambda[kk] = v.scale(&sl);
    }
    let f = ga_mul(h, &e_chi, &e_lambda, n);
    if f.iter().all(|x| x.is_zero()) {
        return None;
    }
    let translates: Vec<Vec<Cyclotomic>> = (0..order).map(|g| right_translate(h, &f, g)).collect();
    let all = CMat::from_rows(translates.clone(), n);
    let picked = all.independent_rows();
    if picked.len() != d {
        return None;
    }
    let basis = all.select_rows(&picked);
    let piv = basis.pivot_columns();
    let bp_inv = basis.select_cols(&piv).inverse()?;
    let mut mats = Vec::with_capacity(order);
    for g in 0..order {
        let mut m = CMat::zeros(d, d, n);
        for (a, &ha) in picked.iter().enumerate() {
            let v = &translates[h.mul(ha, g)];
            let vp: Vec<Cyclotomic> = piv.iter().map(|&c| v[c].clone()).collect();
            let coords = vec_mul(&vp, &bp_inv);
            m.set_row(a, &coords);
        }
        if m.trace() != chi[g] {
            return None;
        }
        mats.push(m);
    }
    Some(mats)
}
