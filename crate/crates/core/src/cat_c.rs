//! Simple objects of the category of `M`-graded `G`-modules: an orbit of `<|`
//! on `M` together with an irreducible character of the base stabilizer.

use serde::Serialize;

use crate::chartable::{subgroup_table, CharacterTable, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::CategoryError;
use crate::group::Subgroup;
use crate::linalg::CMat;
use crate::matched_pair::CosetFactorization;
use crate::representation::{induced_matrix, irreducible_matrices, regular_rep, MatrixRep};

#[derive(Clone, Debug)]
pub struct SimpleObjectC {
    pub orbit: Vec<usize>,
    pub base: usize,
    pub stab: Subgroup,
    pub chi: ClassFunction,
    /// Row of the stabilizer's character table.
    pub row: usize,
    pub label: String,
}

/// An orbit of `M` with its stabilizer table and connecting elements.
#[derive(Clone, Debug)]
pub struct OrbitC {
    pub points: Vec<usize>,
    /// `base <| conn[i] = points[i]`
    pub conn: Vec<usize>,
    pub table: CharacterTable,
}

#[derive(Clone, Debug)]
pub struct CategoryC {
    pub f: CosetFactorization,
    pub orbits: Vec<OrbitC>,
    pub simples: Vec<SimpleObjectC>,
    /// `orbit_of[i]` for simple `i`.
    pub orbit_of: Vec<usize>,
    pub n: u32,
}

/// An explicit graded module: one `M`-grade per basis vector and one matrix
/// per element of `G` (in the order of `G`'s elements), row-vector convention.
#[derive(Clone, Debug)]
pub struct GradedModule {
    pub grades: Vec<usize>,
    pub action: Vec<CMat>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Multiplicity {
    pub simple: usize,
    pub label: String,
    pub multiplicity: usize,
}

impl CategoryC {
    pub fn new(f: &CosetFactorization) -> Result<Self, CategoryError> {
        let x = f.group();
        let n = x.exponent() as u32;
        let gs = f.subgroup().elements();
        let mut seen = vec![false; x.order()];
        let mut orbits = Vec::new();
        let mut simples = Vec::new();
        let mut orbit_of = Vec::new();
        for &s in f.transversal() {
            if seen[s] {
                continue;
            }
            let mut points = vec![s];
            let mut conn = vec![x.identity()];
            seen[s] = true;
            // first connecting element in index order
            for &u in gs {
                let t = f.act_m(s, u);
                if !seen[t] {
                    seen[t] = true;
                    points.push(t);
                    conn.push(u);
                }
            }
            let mut idx: Vec<usize> = (0..points.len()).collect();
            idx.sort_by_key(|&i| points[i]);
            let points: Vec<usize> = idx.iter().map(|&i| points[i]).collect();
            let conn: Vec<usize> = idx.iter().map(|&i| conn[i]).collect();
            let stab: Vec<usize> = gs.iter().copied().filter(|&u| f.act_m(s, u) == s).collect();
            let stab = x.subgroup(&stab).expect("stabilizer is a subgroup");
            let table = subgroup_table(x, &stab)?;
            for r in 0..table.rows.len() {
                orbit_of.push(orbits.len());
                simples.push(SimpleObjectC {
                    orbit: points.clone(),
                    base: s,
                    stab: stab.clone(),
                    chi: lift_cf(&table.class_function(r), n),
                    row: r,
                    label: format!("{}:{}", x.name(s), r),
                });
            }
            orbits.push(OrbitC { points, conn, table });
        }
        Ok(CategoryC {
            f: f.clone(),
            orbits,
            simples,
            orbit_of,
            n,
        })
    }

    /// Index of the simple on the orbit with base `base` whose character is `chi`.
    pub fn find(&self, base: usize, chi: &ClassFunction) -> Option<usize> {
        (0..self.simples.len()).find(|&i| self.simples[i].base == base && self.simples[i].chi == *chi)
    }

    /// The dual simple, as an index.
    pub fn dual(&self, i: usize) -> usize {
        let f = &self.f;
        let x = f.group();
        let v = &self.simples[i];
        let s = v.base;
        let sl = f.left_inv(s);
        // chi_{(V*)_{s^L}}(s |> z) = chi(z^-1)
        let mut pairs: Vec<(usize, Cyclotomic)> = v
            .stab
            .elements()
            .iter()
            .map(|&z| (f.act_g(s, z), v.chi.eval(x.inv(z)).expect("stab").clone()))
            .collect();
        pairs.sort_by_key(|p| p.0);
        let at_sl = ClassFunction {
            support: pairs.iter().map(|p| p.0).collect(),
            values: pairs.into_iter().map(|p| p.1).collect(),
        };
        let o = self
            .orbits
            .iter()
            .find(|o| o.points.contains(&sl))
            .expect("left inverse lies in some orbit");
        let p = o.points[0];
        let k = o.points.iter().position(|&t| t == sl).expect("member");
        // sl = p <| conn[k], so chi_p(w) = chi_{sl}(conn w conn^-1) after moving back
        let u = o.conn[k];
        let at_p = at_sl.conjugated(x, x.inv(u));
        self.find(p, &at_p).expect("dual character is irreducible")
    }

    /// Explicit induced module realizing simple `i`.
    pub fn explicit(&self, i: usize) -> Result<GradedModule, CategoryError> {
        let o = &self.orbits[self.orbit_of[i]];
        let rep = irreducible_matrices(&o.table, self.simples[i].row, self.n)?;
        Ok(self.induce(self.orbit_of[i], &rep))
    }

    /// `(+)_{s in O} C[stab(s)]`, the module induced from the regular representation.
    pub fn regular_type(&self, orbit: usize) -> GradedModule {
        let rep = regular_rep(&self.orbits[orbit].table, self.n);
        self.induce(orbit, &rep)
    }

    fn induce(&self, orbit: usize, rep: &MatrixRep) -> GradedModule {
        let f = &self.f;
        let x = f.group();
        let o = &self.orbits[orbit];
        let d = rep.degree();
        let grades = o.points.iter().flat_map(|&t| std::iter::repeat_n(t, d)).collect();
        let action = f
            .subgroup()
            .elements()
            .iter()
            .map(|&u| {
                let target: Vec<usize> = o
                    .points
                    .iter()
                    .map(|&t| o.points.iter().position(|&q| q == f.act_m(t, u)).expect("orbit closed"))
                    .collect();
                induced_matrix(x, rep, &o.conn, &target, u, self.n)
            })
            .collect();
        GradedModule { grades, action }
    }

    /// Multiplicities of the simples in an explicit graded module.
    pub fn decompose(&self, t: &GradedModule) -> Result<Vec<Multiplicity>, CategoryError> {
        let f = &self.f;
        let x = f.group();
        let gs = f.subgroup().elements();
        let dim = t.grades.len();
        if t.action.len() != gs.len() {
            return Err(CategoryError::GradingNotRespected(format!(
                "{} action matrices for a subgroup of order {}",
                t.action.len(),
                gs.len()
            )));
        }
        for (k, (&u, a)) in gs.iter().zip(&t.action).enumerate() {
            if a.rows() != dim || a.cols() != dim {
                return Err(CategoryError::GradingNotRespected(format!("matrix {k} has the wrong shape")));
            }
            for i in 0..dim {
                if !f.in_m(t.grades[i]) {
                    return Err(CategoryError::GradingNotRespected(format!(
                        "grade {} is not in M",
                        x.name(t.grades[i])
                    )));
                }
                let want = f.act_m(t.grades[i], u);
                if let Some(j) = (0..dim).find(|&j| !a[(i, j)].is_zero() && t.grades[j] != want) {
                    return Err(CategoryError::GradingNotRespected(format!(
                        "basis vector {i} of grade {} acted on by {} reaches grade {}, expected {}",
                        x.name(t.grades[i]),
                        x.name(u),
                        x.name(t.grades[j]),
                        x.name(want)
                    )));
                }
            }
        }
        let mut out = Vec::new();
        for (oi, o) in self.orbits.iter().enumerate() {
            let fiber = |p: usize| (0..dim).filter(|&i| t.grades[i] == p).count();
            let base_dim = fiber(o.points[0]);
            if o.points.iter().any(|&p| fiber(p) != base_dim) {
                return Err(CategoryError::GradingNotRespected(format!(
                    "fibers over the orbit of {} have unequal dimensions",
                    x.name(o.points[0])
                )));
            }
            if base_dim == 0 {
                continue;
            }
            let idx: Vec<usize> = (0..dim).filter(|&i| t.grades[i] == o.points[0]).collect();
            let support = o.table.parent.clone();
            let values: Vec<Cyclotomic> = support
                .iter()
                .map(|&v| {
                    let a = &t.action[f.subgroup().local(v).expect("stab in G")];
                    let mut acc = Cyclotomic::zero(self.n);
                    for &i in &idx {
                        acc += &a[(i, i)];
                    }
                    acc
                })
                .collect();
            let cf = ClassFunction { support, values };
            let mut covered = 0;
            for (si, s) in self.simples.iter().enumerate() {
                if self.orbit_of[si] != oi {
                    continue;
                }
                let m = cf.inner(&s.chi);
                let m = m
                    .as_integer()
                    .and_then(|v| usize::try_from(v).ok())
                    .ok_or_else(|| CategoryError::GradingNotRespected("fiber is not a representation".into()))?;
                covered += m * s.chi.degree();
                if m > 0 {
                    out.push(Multiplicity {
                        simple: si,
                        label: s.label.clone(),
                        multiplicity: m,
                    });
                }
            }
            if covered != base_dim {
                return Err(CategoryError::GradingNotRespected(
                    "fiber action is not a representation of the stabilizer".into(),
                ));
            }
        }
        Ok(out)
    }
}

/// Re-express all values in `Q(z_n)`.
pub fn lift_cf(c: &ClassFunction, n: u32) -> ClassFunction {
    ClassFunction {
        support: c.support.clone(),
        values: c.values.iter().map(|v| v.lift(n)).collect(),
    }
}

/// Direct sum of graded modules.
pub fn direct_sum(a: &GradedModule, b: &GradedModule) -> GradedModule {
    let (da, db) = (a.grades.len(), b.grades.len());
    let mut grades = a.grades.clone();
    grades.extend_from_slice(&b.grades);
    let action = a
        .action
        .iter()
        .zip(&b.action)
        .map(|(x, y)| {
            let n = x.conductor();
            let mut m = CMat::zeros(da + db, da + db, n);
            for i in 0..da {
                for j in 0..da {
                    m[(i, j)] = x[(i, j)].clone();
                }
            }
            for i in 0..db {
                for j in 0..db {
                    m[(da + i, da + j)] = y[(i, j)].clone();
                }
            }
            m
        })
        .collect();
    GradedModule { grades, action }
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

    #[test]
    fn d6_six_simples_all_self_dual() {
        let x = d6();
        let g = x.subgroup(&[0, 2, 4, 6, 8, 10]).unwrap();
        let f = CosetFactorization::build(&x, &g, &[0, 1]).unwrap();
        let c = CategoryC::new(&f).unwrap();
        assert_eq!(c.simples.len(), 6);
        assert_eq!(c.orbits.len(), 2);
        for i in 0..6 {
            assert_eq!(c.dual(i), i);
        }
    }

    #[test]
    fn nontrivial_orbits_and_decomposition() {
        let x = d6();
        let h = x.subgroup(&[0, 6]).unwrap();
        let f = CosetFactorization::build_auto(&x, &h).unwrap();
        let c = CategoryC::new(&f).unwrap();
        for i in 0..c.simples.len() {
            assert_eq!(c.dual(c.dual(i)), i);
            let m = c.explicit(i).unwrap();
            let d = c.decompose(&m).unwrap();
            assert_eq!(d.len(), 1);
            assert_eq!((d[0].simple, d[0].multiplicity), (i, 1));
        }
        let a = c.explicit(0).unwrap();
        let b = c.explicit(c.simples.len() - 1).unwrap();
        let d = c.decompose(&direct_sum(&a, &b)).unwrap();
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn regular_type_multiplicities_are_degrees() {
        let x = d6();
        let g = x.subgroup(&[0, 2, 4, 6, 8, 10]).unwrap();
        let f = CosetFactorization::build(&x, &g, &[0, 1]).unwrap();
        let c = CategoryC::new(&f).unwrap();
        for o in 0..c.orbits.len() {
            let d = c.decompose(&c.regular_type(o)).unwrap();
            assert_eq!(d.len(), 3);
            for m in d {
                assert_eq!(m.multiplicity, c.simples[m.simple].chi.degree());
            }
        }
    }

    #[test]
    fn bad_grading_rejected() {
        let x = d6();
        let g = x.subgroup(&[0, 2, 4, 6, 8, 10]).unwrap();
        let f = CosetFactorization::build(&x, &g, &[0, 1]).unwrap();
        let c = CategoryC::new(&f).unwrap();
        let mut m = direct_sum(&c.explicit(0).unwrap(), &c.explicit(3).unwrap());
        // swap the two basis vectors under b, mixing grades e and a
        let n = c.n;
        let one = Cyclotomic::one(n);
        let mut sw = CMat::zeros(2, 2, n);
        sw[(0, 1)] = one.clone();
        sw[(1, 0)] = one;
        m.action[3] = sw;
        assert!(matches!(c.decompose(&m), Err(CategoryError::GradingNotRespected(_))));
    }
}
