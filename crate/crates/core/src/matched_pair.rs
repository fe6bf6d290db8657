//! Coset data for `X = GM`: the actions `|>`, `<|`, the cocycle `tau`, the
//! product `.` on `M`, left inverses, and both factorization orders.
//!
//! All maps take and return ambient element indices.

use serde::Serialize;

use crate::error::FactorError;
use crate::group::{FiniteGroup, Subgroup};

#[derive(Clone, Debug)]
pub struct CosetFactorization {
    group: FiniteGroup,
    g: Subgroup,
    m: Vec<usize>,
    m_pos: Vec<Option<usize>>,
    /// `x = u s`
    gm: Vec<(usize, usize)>,
    /// `x = s v`
    mg: Vec<(usize, usize)>,
    act_g: Vec<usize>,
    act_m: Vec<usize>,
    tau: Vec<usize>,
    dot: Vec<usize>,
    left_inv: Vec<usize>,
}

/// One named invariant and whether it held on every input.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub holds: bool,
    pub witness: Option<String>,
}

impl CosetFactorization {
    /// `m` need not be sorted; the identity must be present.
    pub fn build(group: &FiniteGroup, g: &Subgroup, m: &[usize]) -> Result<Self, FactorError> {
        let n = group.order();
        let mut mm = m.to_vec();
        mm.sort_unstable();
        mm.dedup();
        if mm.len() != m.len() {
            return Err(FactorError::NotATransversal("repeated element in M".into()));
        }
        if let Some(&bad) = mm.iter().find(|&&s| s >= n) {
            return Err(FactorError::NotATransversal(format!("element {bad} out of range")));
        }
        if mm.first() != Some(&group.identity()) {
            return Err(FactorError::IdentityNotInM);
        }
        if mm.len() * g.order() != n {
            return Err(FactorError::NotATransversal(format!(
                "|M| |G| = {} * {} != {}",
                mm.len(),
                g.order(),
                n
            )));
        }
        let mut gm = vec![None; n];
        let mut mg = vec![None; n];
        for &s in &mm {
            for &u in g.elements() {
                let x = group.mul(u, s);
                if gm[x].replace((u, s)).is_some() {
                    return Err(FactorError::NotATransversal(format!(
                        "{} has two factorizations u s",
                        group.name(x)
                    )));
                }
                let y = group.mul(s, u);
                if mg[y].replace((s, u)).is_some() {
                    return Err(FactorError::FactorizationNotClosed(format!(
                        "{} has two factorizations s v",
                        group.name(y)
                    )));
                }
            }
        }
        let gm: Vec<(usize, usize)> = gm.into_iter().map(|p| p.expect("counted")).collect();
        let mg: Vec<(usize, usize)> = mg.into_iter().map(|p| p.expect("counted")).collect();

        let mut m_pos = vec![None; n];
        for (i, &s) in mm.iter().enumerate() {
            m_pos[s] = Some(i);
        }
        let (k, og) = (mm.len(), g.order());
        let mut act_g = vec![0; k * og];
        let mut act_m = vec![0; k * og];
        for (i, &s) in mm.iter().enumerate() {
            for (j, &u) in g.elements().iter().enumerate() {
                let (a, b) = gm[group.mul(s, u)];
                act_g[i * og + j] = a;
                act_m[i * og + j] = b;
            }
        }
        let mut tau = vec![0; k * k];
        let mut dot = vec![0; k * k];
        for (i, &s) in mm.iter().enumerate() {
            for (j, &t) in mm.iter().enumerate() {
                let (a, b) = gm[group.mul(s, t)];
                tau[i * k + j] = a;
                dot[i * k + j] = b;
            }
        }
        let e = group.identity();
        let mut left_inv = vec![0; k];
        for (j, _) in mm.iter().enumerate() {
            left_inv[j] = *mm
                .iter()
                .find(|&&t| dot[m_pos[t].expect("in M") * k + j] == e)
                .expect("G s^-1 meets M once");
        }
        let f = CosetFactorization {
            group: group.clone(),
            g: g.clone(),
            m: mm,
            m_pos,
            gm,
            mg,
            act_g,
            act_m,
            tau,
            dot,
            left_inv,
        };
        if let Some(c) = f.check_invariants().into_iter().find(|c| !c.holds) {
            return Err(FactorError::FactorizationNotClosed(format!(
                "{}: {}",
                c.name,
                c.witness.unwrap_or_default()
            )));
        }
        Ok(f)
    }

    /// Build with `M` chosen automatically (see [`auto_transversal`]).
    pub fn build_auto(group: &FiniteGroup, g: &Subgroup) -> Result<Self, FactorError> {
        let m = auto_transversal(group, g).ok_or_else(|| {
            FactorError::NotATransversal("no common transversal of left and right cosets".into())
        })?;
        Self::build(group, g, &m)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.g
    }

    pub fn transversal(&self) -> &[usize] {
        &self.m
    }

    pub fn in_m(&self, s: usize) -> bool {
        self.m_pos[s].is_some()
    }

    fn mi(&self, s: usize) -> usize {
        self.m_pos[s].unwrap_or_else(|| panic!("{} is not in M", self.group.name(s)))
    }

    fn gi(&self, u: usize) -> usize {
        self.g
            .local(u)
            .unwrap_or_else(|| panic!("{} is not in G", self.group.name(u)))
    }

    /// `s |> u`
    pub fn act_g(&self, s: usize, u: usize) -> usize {
        self.act_g[self.mi(s) * self.g.order() + self.gi(u)]
    }

    /// `s <| u`
    pub fn act_m(&self, s: usize, u: usize) -> usize {
        self.act_m[self.mi(s) * self.g.order() + self.gi(u)]
    }

    pub fn tau(&self, s: usize, t: usize) -> usize {
        self.tau[self.mi(s) * self.m.len() + self.mi(t)]
    }

    pub fn dot(&self, s: usize, t: usize) -> usize {
        self.dot[self.mi(s) * self.m.len() + self.mi(t)]
    }

    /// `s^L`, the element with `s^L . s = e`.
    pub fn left_inv(&self, s: usize) -> usize {
        self.left_inv[self.mi(s)]
    }

    /// `x = u s`, returns `(u, s)`.
    pub fn factor_gm(&self, x: usize) -> (usize, usize) {
        self.gm[x]
    }

    /// `x = s v`, returns `(s, v)`.
    pub fn factor_mg(&self, x: usize) -> (usize, usize) {
        self.mg[x]
    }

    /// `y = |y|^-1 <y>`, returns `(<y>, |y|)`.
    pub fn grade(&self, y: usize) -> (usize, usize) {
        let (g, s) = self.gm[y];
        (s, self.group.inv(g))
    }

    /// `y ~|> x = t x t'^-1` where `y = v t` and `x^-1 y x = v' t'`.
    pub fn tilde_act(&self, y: usize, x: usize) -> usize {
        let t = self.gm[y].1;
        let t2 = self.gm[self.group.conj(y, x)].1;
        self.group.mul(t, self.group.mul(x, self.group.inv(t2)))
    }

    /// `y^L = |y| tau(<y>^L,<y>)^-1 <y>^L`, the left inverse of a grade.
    pub fn y_left_inv(&self, y: usize) -> usize {
        let x = &self.group;
        let (s, u) = self.grade(y);
        let l = self.left_inv(s);
        x.mul(u, x.mul(x.inv(self.tau(l, s)), l))
    }

    /// Every structural identity, evaluated exhaustively.
    pub fn check_invariants(&self) -> Vec<InvariantCheck> {
        let x = &self.group;
        let e = x.identity();
        let gs = self.g.elements();
        let ms = &self.m;
        let nm = |v: usize| x.name(v).to_string();
        let mut out = Vec::new();
        let mut push = |name: &'static str, w: Option<String>| {
            out.push(InvariantCheck {
                name,
                holds: w.is_none(),
                witness: w,
            })
        };

        push(
            "unique GM and MG factorization",
            x.elements().find_map(|v| {
                let (u, s) = self.gm[v];
                let (s2, u2) = self.mg[v];
                let ok = x.mul(u, s) == v && x.mul(s2, u2) == v && self.g.contains(u) && self.g.contains(u2);
                (!ok).then(|| nm(v))
            }),
        );
        push(
            "s u = (s |> u)(s <| u)",
            ms.iter().find_map(|&s| {
                gs.iter().find_map(|&u| {
                    let ok = x.mul(s, u) == x.mul(self.act_g(s, u), self.act_m(s, u));
                    (!ok).then(|| format!("s={}, u={}", nm(s), nm(u)))
                })
            }),
        );
        push(
            "s t = tau(s,t)(s.t)",
            ms.iter().find_map(|&s| {
                ms.iter().find_map(|&t| {
                    let ok = x.mul(s, t) == x.mul(self.tau(s, t), self.dot(s, t));
                    (!ok).then(|| format!("s={}, t={}", nm(s), nm(t)))
                })
            }),
        );
        push(
            "e |> u = u, e <| u = e",
            gs.iter()
                .find_map(|&u| (self.act_g(e, u) != u || self.act_m(e, u) != e).then(|| nm(u))),
        );
        push(
            "tau(s,e) = tau(e,s) = e, s.e = e.s = s",
            ms.iter().find_map(|&s| {
                let ok = self.tau(s, e) == e && self.tau(e, s) == e && self.dot(s, e) == s && self.dot(e, s) == s;
                (!ok).then(|| nm(s))
            }),
        );
        push(
            "s^L . s = e, tau(s^L,s) = s^L s",
            ms.iter().find_map(|&s| {
                let l = self.left_inv(s);
                let ok = self.dot(l, s) == e && self.tau(l, s) == x.mul(l, s);
                (!ok).then(|| nm(s))
            }),
        );
        push(
            "(s.t) <| u = (s <| (t |> u)).(t <| u)",
            ms.iter().find_map(|&s| {
                ms.iter().find_map(|&t| {
                    gs.iter().find_map(|&u| {
                        let lhs = self.act_m(self.dot(s, t), u);
                        let rhs = self.dot(self.act_m(s, self.act_g(t, u)), self.act_m(t, u));
                        (lhs != rhs).then(|| format!("s={}, t={}, u={}", nm(s), nm(t), nm(u)))
                    })
                })
            }),
        );
        push(
            "|y| tau(<y>^L,<y>)^-1 <y>^L = <y> y^-1 <y>^-1",
            x.elements().find_map(|y| {
                let (s, _) = self.grade(y);
                (self.y_left_inv(y) != x.conj(x.inv(y), x.inv(s))).then(|| nm(y))
            }),
        );
        out
    }

    /// Tables keyed by element names, for display.
    pub fn tables(&self) -> FactorTables {
        let x = &self.group;
        let nm = |v: usize| x.name(v).to_string();
        let ms = &self.m;
        let gs = self.g.elements();
        let grid = |f: &dyn Fn(usize, usize) -> usize, rows: &[usize], cols: &[usize]| -> Vec<Vec<String>> {
            rows.iter()
                .map(|&a| cols.iter().map(|&b| nm(f(a, b))).collect())
                .collect()
        };
        FactorTables {
            subgroup: gs.iter().map(|&u| nm(u)).collect(),
            transversal: ms.iter().map(|&s| nm(s)).collect(),
            act_g: grid(&|s, u| self.act_g(s, u), ms, gs),
            act_m: grid(&|s, u| self.act_m(s, u), ms, gs),
            tau: grid(&|s, t| self.tau(s, t), ms, ms),
            dot: grid(&|s, t| self.dot(s, t), ms, ms),
            left_inv: ms.iter().map(|&s| nm(self.left_inv(s))).collect(),
            factor_gm: x.elements().map(|v| [nm(self.gm[v].0), nm(self.gm[v].1)]).collect(),
            factor_mg: x.elements().map(|v| [nm(self.mg[v].0), nm(self.mg[v].1)]).collect(),
            invariants: self.check_invariants(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorTables {
    pub subgroup: Vec<String>,
    pub transversal: Vec<String>,
    /// `[s][u]`
    pub act_g: Vec<Vec<String>>,
    pub act_m: Vec<Vec<String>>,
    /// `[s][t]`
    pub tau: Vec<Vec<String>>,
    pub dot: Vec<Vec<String>>,
    pub left_inv: Vec<String>,
    /// Per element `x`: `[u, s]` with `x = u s`.
    pub factor_gm: Vec<[String; 2]>,
    /// Per element `x`: `[s, v]` with `x = s v`.
    pub factor_mg: Vec<[String; 2]>,
    pub invariants: Vec<InvariantCheck>,
}

/// Lexicographically first set of element indices meeting every coset `G x`
/// and every coset `x G` exactly once, starting from the identity.
pub fn auto_transversal(group: &FiniteGroup, g: &Subgroup) -> Option<Vec<usize>> {
    let n = group.order();
    let mut right = vec![usize::MAX; n];
    let mut left = vec![usize::MAX; n];
    let mut rc = 0;
    let mut lc = 0;
    for x in group.elements() {
        if right[x] == usize::MAX {
            for &u in g.elements() {
                right[group.mul(u, x)] = rc;
            }
            rc += 1;
        }
        if left[x] == usize::MAX {
            for &u in g.elements() {
                left[group.mul(x, u)] = lc;
            }
            lc += 1;
        }
    }
    let mut used_r = vec![false; rc];
    let mut used_l = vec![false; lc];
    let mut chosen = Vec::with_capacity(rc);

    fn go(
        right: &[usize],
        left: &[usize],
        used_r: &mut [bool],
        used_l: &mut [bool],
        chosen: &mut Vec<usize>,
        target: usize,
    ) -> bool {
        if chosen.len() == target {
            return true;
        }
        // the lowest uncovered right coset must be covered next
        let want = used_r.iter().position(|&b| !b).expect("not done");
        for x in 0..right.len() {
            if right[x] != want || used_l[left[x]] {
                continue;
            }
            used_r[want] = true;
            used_l[left[x]] = true;
            chosen.push(x);
            if go(right, left, used_r, used_l, chosen, target) {
                return true;
            }
            chosen.pop();
            used_r[want] = false;
            used_l[left[x]] = false;
        }
        false
    }

    if go(&right, &left, &mut used_r, &mut used_l, &mut chosen, rc) {
        chosen.sort_unstable();
        Some(chosen)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn d6() -> FiniteGroup {
        // index 6i + j is b^i a^j
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
    fn d6_example() {
        let x = d6();
        let g = x.subgroup(&[0, 2, 4, 6, 8, 10]).unwrap();
        let f = CosetFactorization::build(&x, &g, &[0, 1]).unwrap();
        let (a, a2, b) = (1, 2, 6);
        assert_eq!(f.tau(a, a), a2);
        assert_eq!(f.dot(a, a), 0);
        assert_eq!(f.left_inv(a), a);
        assert_eq!(f.act_g(a, b), 10);
        assert_eq!(f.act_m(a, b), a);
        assert_eq!(f.factor_gm(a), (0, a));
        assert_eq!(f.factor_gm(b), (b, 0));
        assert_eq!(f.factor_gm(11), (10, a));
        assert_eq!(f.grade(0), (0, 0));
        assert_eq!(f.grade(a), (a, 0));
        assert_eq!(f.grade(3), (a, 4));
        assert!(f.check_invariants().iter().all(|c| c.holds));
    }

    #[test]
    fn broken_transversal_rejected() {
        let x = d6();
        let g = x.subgroup(&[0, 2, 4, 6, 8, 10]).unwrap();
        assert!(matches!(
            CosetFactorization::build(&x, &g, &[0, 6]),
            Err(FactorError::NotATransversal(_))
        ));
        assert!(matches!(
            CosetFactorization::build(&x, &g, &[1, 3]),
            Err(FactorError::IdentityNotInM)
        ));
        assert!(matches!(
            CosetFactorization::build(&x, &g, &[0, 1, 3]),
            Err(FactorError::NotATransversal(_))
        ));
    }

    #[test]
    fn trivial_extremes() {
        let x = d6();
        let f = CosetFactorization::build(&x, &x.whole(), &[0]).unwrap();
        assert!(x.elements().all(|u| f.act_g(0, u) == u));
        let one = x.subgroup(&[0]).unwrap();
        let f = CosetFactorization::build_auto(&x, &one).unwrap();
        assert_eq!(f.transversal().len(), 12);
        assert!(x.elements().all(|y| f.grade(y) == (y, 0)));
    }

    #[test]
    fn auto_picks_smallest() {
        let x = d6();
        let g = x.subgroup(&[0, 2, 4, 6, 8, 10]).unwrap();
        assert_eq!(auto_transversal(&x, &g), Some(vec![0, 1]));
        // non-normal <b>: smallest per right coset alone would not be a left transversal in general
        let h = x.subgroup(&[0, 6]).unwrap();
        let m = auto_transversal(&x, &h).unwrap();
        let r = CosetFactorization::build(&x, &h, &m);
        assert!(r.is_ok(), "{m:?} {r:?}");
    }

    #[test]
    fn tilde_act_is_action() {
        let x = d6();
        let h = x.subgroup(&[0, 6]).unwrap();
        let f = CosetFactorization::build_auto(&x, &h).unwrap();
        for y in x.elements() {
            assert_eq!(f.tilde_act(y, 0), 0);
            for a in x.elements() {
                for b in x.elements() {
                    let lhs = f.tilde_act(y, x.mul(a, b));
                    let rhs = x.mul(f.tilde_act(y, a), f.tilde_act(x.conj(y, a), b));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
