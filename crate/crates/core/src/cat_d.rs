//! Simple objects of the double: `X`-graded right `X`-modules with `X`
//! acting on grades by conjugation. A simple is a conjugacy class with an
//! irreducible character of the centralizer of its base point.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cat_c::lift_cf;
use crate::chartable::{subgroup_table, CharacterTable, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::{CategoryError, ModularError};
use crate::group::{ConjugacyClass, Subgroup};
use crate::matched_pair::CosetFactorization;

#[derive(Clone, Debug)]
pub struct SimpleObjectD {
    pub class: ConjugacyClass,
    pub base: usize,
    pub stab: Subgroup,
    pub chi: ClassFunction,
    pub row: usize,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct ClassData {
    pub class: ConjugacyClass,
    /// `conn[i]^-1 base conn[i] = class.members[i]`
    pub conn: Vec<usize>,
    pub table: CharacterTable,
}

#[derive(Clone, Debug)]
pub struct CategoryD {
    pub f: CosetFactorization,
    pub classes: Vec<ClassData>,
    pub simples: Vec<SimpleObjectD>,
    /// Class index of each simple.
    pub class_idx: Vec<usize>,
    /// Class index of each element.
    pub elem_class: Vec<usize>,
    /// `point_chars[k][i]`: character of simple `k` at `class.members[i]`.
    point_chars: Vec<Vec<ClassFunction>>,
    pub n: u32,
}

impl CategoryD {
    pub fn new(f: &CosetFactorization) -> Result<Self, CategoryError> {
        let x = f.group();
        let n = x.exponent() as u32;
        let mut elem_class = vec![0; x.order()];
        let mut classes = Vec::new();
        for (ci, c) in x.conjugacy_classes().into_iter().enumerate() {
            for &m in &c.members {
                elem_class[m] = ci;
            }
            let base = c.representative;
            let conn = c
                .members
                .iter()
                .map(|&y| x.elements().find(|&g| x.conj(base, g) == y).expect("class member"))
                .collect();
            let table = subgroup_table(x, &x.centralizer(base))?;
            classes.push(ClassData { class: c, conn, table });
        }
        let mut simples = Vec::new();
        let mut class_idx = Vec::new();
        let mut point_chars = Vec::new();
        for (ci, cd) in classes.iter().enumerate() {
            let stab = x.centralizer(cd.class.representative);
            for r in 0..cd.table.rows.len() {
                let chi = lift_cf(&cd.table.class_function(r), n);
                point_chars.push(cd.conn.iter().map(|&g| chi.conjugated(x, g)).collect());
                class_idx.push(ci);
                simples.push(SimpleObjectD {
                    class: cd.class.clone(),
                    base: cd.class.representative,
                    stab: stab.clone(),
                    chi,
                    row: r,
                    label: format!("{}:{}", x.name(cd.class.representative), r),
                });
            }
        }
        Ok(CategoryD {
            f: f.clone(),
            classes,
            simples,
            class_idx,
            elem_class,
            point_chars,
            n,
        })
    }

    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.simples.iter().map(|s| s.label.clone()).collect()
    }

    /// Character of simple `k` at class point `p`, evaluated at `h`; zero off
    /// the class or off the centralizer of `p`.
    pub fn chi_at(&self, k: usize, p: usize, h: usize) -> Cyclotomic {
        let ci = self.class_idx[k];
        if self.elem_class[p] != ci {
            return Cyclotomic::zero(self.n);
        }
        let i = self.classes[ci]
            .class
            .members
            .binary_search(&p)
            .expect("member");
        self.point_chars[k][i]
            .eval(h)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.n))
    }

    /// `Theta_V = chi(base) / chi(e)`.
    pub fn theta(&self, k: usize) -> Cyclotomic {
        let s = &self.simples[k];
        let d = Cyclotomic::from_int(self.n, s.chi.degree() as i64);
        s.chi.eval(s.base).expect("base centralizes itself") / &d
    }

    pub fn dim(&self, k: usize) -> usize {
        self.simples[k].class.len() * self.simples[k].chi.degree()
    }

    /// Character of `d_y (x) x`: zero unless `xy = yx`; otherwise with
    /// `y = s v` (`s` in `M`, `v` in `G`) it is the character at `v s`
    /// evaluated at `s^-1 x s`.
    pub fn char_d(&self, k: usize, y: usize, x: usize) -> Cyclotomic {
        let g = self.f.group();
        if !g.commute(x, y) {
            return Cyclotomic::zero(self.n);
        }
        let (s, v) = self.f.factor_mg(y);
        let p = g.mul(v, s);
        let si = g.inv(s);
        self.chi_at(k, p, g.mul(si, g.mul(x, s)))
    }

    /// Index of the simple on the class of `base` with character `chi` at `base`.
    pub fn find(&self, base: usize, chi: &ClassFunction) -> Option<usize> {
        (0..self.len()).find(|&k| self.simples[k].base == base && self.simples[k].chi == *chi)
    }

    /// The dual: class of `y^-1` with the dual character moved to the base.
    pub fn dual(&self, k: usize) -> usize {
        let g = self.f.group();
        let s = &self.simples[k];
        let yi = g.inv(s.base);
        let cd = &self.classes[self.elem_class[yi]];
        let j = cd.class.members.binary_search(&yi).expect("member");
        let star = s.chi.dual(g);
        // yi = conn^-1 base' conn, so base' = u^-1 yi u with u = conn^-1
        let at_base = star.conjugated(g, g.inv(cd.conn[j]));
        self.find(cd.class.representative, &at_base)
            .expect("dual character is irreducible")
    }

    /// Index of the unit object.
    pub fn unit(&self) -> usize {
        let e = self.f.group().identity();
        (0..self.len())
            .find(|&k| self.simples[k].base == e && self.simples[k].chi.values.iter().all(|v| v.is_one()))
            .expect("trivial character on the identity class")
    }

    /// Reorder simples to match `ord` and relabel them.
    pub fn reordered(&self, ord: &OrderingFile) -> Result<CategoryD, ModularError> {
        let perm = ord.resolve(self)?;
        let mut out = self.clone();
        out.simples = perm.iter().map(|&k| self.simples[k].clone()).collect();
        out.class_idx = perm.iter().map(|&k| self.class_idx[k]).collect();
        out.point_chars = perm.iter().map(|&k| self.point_chars[k].clone()).collect();
        for (s, e) in out.simples.iter_mut().zip(&ord.labels) {
            s.label = e.label.clone();
        }
        Ok(out)
    }

    pub fn summary(&self, k: usize) -> SimpleSummary {
        let g = self.f.group();
        let s = &self.simples[k];
        SimpleSummary {
            index: k,
            label: s.label.clone(),
            base: g.name(s.base).to_string(),
            class: s.class.members.iter().map(|&m| g.name(m).to_string()).collect(),
            stabilizer: s.stab.elements().iter().map(|&m| g.name(m).to_string()).collect(),
            character: s
                .stab
                .elements()
                .iter()
                .map(|&m| (g.name(m).to_string(), s.chi.eval(m).expect("stab").render()))
                .collect(),
            dim: self.dim(k),
            theta: self.theta(k).render(),
            dual: self.simples[self.dual(k)].label.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleSummary {
    pub index: usize,
    pub label: String,
    pub base: String,
    pub class: Vec<String>,
    pub stabilizer: Vec<String>,
    pub character: BTreeMap<String, String>,
    pub dim: usize,
    pub theta: String,
    pub dual: String,
}

/// Explicit labeling of simples. Each entry names a base point and character
/// values (rendered, `w = exp(2 pi i / n)`) at chosen centralizer elements,
/// enough to single out one simple.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrderingFile {
    pub labels: Vec<OrderingEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrderingEntry {
    pub label: String,
    pub base: String,
    pub chi: BTreeMap<String, String>,
}

impl OrderingFile {
    pub fn from_json(s: &str) -> Result<Self, ModularError> {
        serde_json::from_str(s).map_err(|e| ModularError::Ordering(e.to_string()))
    }

    /// `perm[i]` is the internal index of the `i`-th listed label.
    pub fn resolve(&self, cat: &CategoryD) -> Result<Vec<usize>, ModularError> {
        let g = cat.f.group();
        let bad = |m: String| ModularError::Ordering(m);
        if self.labels.len() != cat.len() {
            return Err(bad(format!("{} labels for {} simples", self.labels.len(), cat.len())));
        }
        let mut used = vec![false; cat.len()];
        let mut perm = Vec::with_capacity(cat.len());
        for e in &self.labels {
            let base = g.index_of(&e.base).map_err(|x| bad(x.to_string()))?;
            let mut want = Vec::new();
            for (el, v) in &e.chi {
                let el = g.index_of(el).map_err(|x| bad(x.to_string()))?;
                let v = Cyclotomic::parse(v, cat.n).map_err(|x| bad(x.to_string()))?;
                want.push((el, v));
            }
            let hits: Vec<usize> = (0..cat.len())
                .filter(|&k| {
                    cat.simples[k].base == base
                        && want.iter().all(|(el, v)| cat.simples[k].chi.eval(*el) == Some(v))
                })
                .collect();
            match hits.as_slice() {
                [k] if !used[*k] => {
                    used[*k] = true;
                    perm.push(*k);
                }
                [k] => return Err(bad(format!("{} repeats simple {}", e.label, cat.simples[*k].label))),
                [] => return Err(bad(format!("{} matches no simple", e.label))),
                _ => return Err(bad(format!("{} is ambiguous", e.label))),
            }
        }
        Ok(perm)
    }
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
    fn d6_counts_and_dims() {
        let c = cat();
        assert_eq!(c.len(), 32);
        let per: Vec<usize> = (0..6).map(|ci| c.class_idx.iter().filter(|&&k| k == ci).count()).collect();
        assert_eq!(per, vec![6, 6, 6, 6, 4, 4]);
        let total: usize = (0..32).map(|k| c.dim(k) * c.dim(k)).sum();
        assert_eq!(total, 144);
        assert!(c.theta(c.unit()).is_one());
    }

    #[test]
    fn d6_self_dual_and_theta_roots() {
        let c = cat();
        for k in 0..32 {
            assert_eq!(c.dual(k), k);
            let t = c.theta(k);
            assert!(t.pow(6).is_one());
        }
    }

    #[test]
    fn char_d_vanishes_off_commuting_pairs() {
        let c = cat();
        let g = c.f.group();
        for k in 0..32 {
            for y in g.elements() {
                for x in g.elements() {
                    if !g.commute(x, y) {
                        assert!(c.char_d(k, y, x).is_zero());
                    }
                    for h in g.elements() {
                        assert_eq!(c.char_d(k, g.conj(y, h), g.conj(x, h)), c.char_d(k, y, x));
                    }
                }
            }
        }
    }

    #[test]
    fn z3_duals_move_classes() {
        let z3 = FiniteGroup::from_permutations(3, &[vec![1, 2, 0]]).unwrap();
        let f = CosetFactorization::build(&z3, &z3.whole(), &[0]).unwrap();
        let c = CategoryD::new(&f).unwrap();
        assert_eq!(c.len(), 9);
        let moved = (0..9).filter(|&k| c.dual(k) != k).count();
        assert_eq!(moved, 8);
        for k in 0..9 {
            assert_eq!(c.dual(c.dual(k)), k);
            assert_eq!(c.theta(c.dual(k)), c.theta(k));
        }
    }
}
