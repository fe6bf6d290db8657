//! Finite groups given by Cayley tables, with subgroups, classes and centralizers.
//!
//! Elements are dense indices `0..order`; the identity is always index 0.

use std::collections::{HashMap, VecDeque};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::GroupError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    names: Vec<String>,
}

/// Input description of a group, as read from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Table {
        names: Vec<String>,
        table: Vec<Vec<usize>>,
    },
    Perms {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Table { names, table } => FiniteGroup::from_table(names.clone(), table.clone()),
            GroupSpec::Perms { degree, generators } => FiniteGroup::from_permutations(*degree, generators),
        }
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

impl FiniteGroup {
    /// Build from an explicit table; `table[i][j]` is the index of `g_i g_j`.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::NotLatinSquare("empty table".into()));
        }
        if names.len() != n {
            return Err(GroupError::BadNames(format!("{} names for {} elements", names.len(), n)));
        }
        let mut seen = HashMap::new();
        for (i, nm) in names.iter().enumerate() {
            if nm.is_empty() || nm.contains(',') {
                return Err(GroupError::BadNames(format!("invalid name {nm:?}")));
            }
            if seen.insert(nm.clone(), i).is_some() {
                return Err(GroupError::BadNames(format!("duplicate name {nm:?}")));
            }
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotLatinSquare(format!("row {i} has length {}", row.len())));
            }
            if !is_permutation(row) {
                return Err(GroupError::NotLatinSquare(format!("row {i} is not a permutation")));
            }
        }
        for j in 0..n {
            let col: Vec<usize> = table.iter().map(|r| r[j]).collect();
            if !is_permutation(&col) {
                return Err(GroupError::NotLatinSquare(format!("column {j} is not a permutation")));
            }
        }
        let id = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g));
        match id {
            Some(0) => {}
            Some(_) => return Err(GroupError::IdentityNotFirst),
            None => return Err(GroupError::NotLatinSquare("no two-sided identity".into())),
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        for a in 0..n {
            for b in 0..n {
                let ab = flat[a * n + b];
                for c in 0..n {
                    if flat[ab * n + c] != flat[a * n + flat[b * n + c]] {
                        return Err(GroupError::NonAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(Self::from_flat_unchecked(names, flat))
    }

    fn from_flat_unchecked(names: Vec<String>, table: Vec<usize>) -> Self {
        let n = names.len();
        let inverse = (0..n)
            .map(|g| (0..n).find(|&h| table[g * n + h] == 0).expect("latin square"))
            .collect();
        FiniteGroup {
            order: n,
            table,
            inverse,
            names,
        }
    }

    /// Closure of permutations of `0..degree`, elements in breadth-first discovery order.
    /// The product `pq` applies `p` first, then `q`.
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> Result<Self, GroupError> {
        if gens.is_empty() {
            return Err(GroupError::EmptyGeneratorSet);
        }
        for g in gens {
            if g.len() != degree || !is_permutation(g) {
                return Err(GroupError::InvalidPermutation(format!("{g:?}")));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let p = compose(&elems[i], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elems[a], &elems[b])];
            }
        }
        let names = elems.iter().map(|p| cycle_name(p)).collect();
        Ok(Self::from_flat_unchecked(names, table))
    }

    /// Table spec reproducing this group exactly.
    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec::Table {
            names: self.names.clone(),
            table: (0..self.order)
                .map(|a| self.table[a * self.order..(a + 1) * self.order].to_vec())
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `x^-1 y x`.
    #[inline]
    pub fn conj(&self, y: usize, x: usize) -> usize {
        self.mul(self.inv(x), self.mul(y, x))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn index_of(&self, name: &str) -> Result<usize, GroupError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| GroupError::UnknownElement(name.to_string()))
    }

    /// Parse a comma separated list of element names.
    pub fn parse_elements(&self, list: &str) -> Result<Vec<usize>, GroupError> {
        list.split(',')
            .map(|s| s.trim())
            .filter(|s| !s.is_empty())
            .map(|s| self.index_of(s))
            .collect()
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// lcm of element orders.
    pub fn exponent(&self) -> usize {
        self.elements().fold(1, |acc, g| acc.lcm(&self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.commute(a, b)))
    }

    /// Conjugacy classes sorted by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        classes_within(self, &self.elements().collect::<Vec<_>>(), &self.elements().collect::<Vec<_>>())
    }

    pub fn class_of(&self, y: usize) -> Vec<usize> {
        let mut c: Vec<usize> = self.elements().map(|x| self.conj(y, x)).collect();
        c.sort_unstable();
        c.dedup();
        c
    }

    pub fn centralizer(&self, y: usize) -> Subgroup {
        Subgroup {
            elements: self.elements().filter(|&x| self.commute(x, y)).collect(),
        }
    }

    /// The subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut elems = vec![0usize];
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut i = 0;
        while i < elems.len() {
            for &g in gens {
                let p = self.mul(elems[i], g);
                if !seen[p] {
                    seen[p] = true;
                    elems.push(p);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        Subgroup { elements: elems }
    }

    /// Validate that `elems` is a subgroup.
    pub fn subgroup(&self, elems: &[usize]) -> Result<Subgroup, GroupError> {
        let mut e = elems.to_vec();
        e.sort_unstable();
        e.dedup();
        if e.first() != Some(&0) {
            return Err(GroupError::NotASubgroup("missing identity".into()));
        }
        let mut member = vec![false; self.order];
        for &g in &e {
            if g >= self.order {
                return Err(GroupError::UnknownElement(g.to_string()));
            }
            member[g] = true;
        }
        for &a in &e {
            if !member[self.inv(a)] {
                return Err(GroupError::NotASubgroup(format!("inverse of {} missing", self.name(a))));
            }
            for &b in &e {
                if !member[self.mul(a, b)] {
                    return Err(GroupError::NotASubgroup(format!(
                        "{}*{} not in set",
                        self.name(a),
                        self.name(b)
                    )));
                }
            }
        }
        Ok(Subgroup { elements: e })
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            elements: self.elements().collect(),
        }
    }
}

/// A subgroup, as a sorted set of parent element indices (identity first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// Position of a parent element inside the subgroup.
    pub fn local(&self, g: usize) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }

    /// The subgroup as a standalone group; local index i is `elements()[i]`.
    pub fn as_group(&self, parent: &FiniteGroup) -> FiniteGroup {
        let n = self.elements.len();
        let mut table = vec![0; n * n];
        for (i, &a) in self.elements.iter().enumerate() {
            for (j, &b) in self.elements.iter().enumerate() {
                table[i * n + j] = self.local(parent.mul(a, b)).expect("closed");
            }
        }
        let names = self.elements.iter().map(|&g| parent.name(g).to_string()).collect();
        FiniteGroup::from_flat_unchecked(names, table)
    }

    /// `x^-1 H x`.
    pub fn conjugate(&self, parent: &FiniteGroup, x: usize) -> Subgroup {
        let mut e: Vec<usize> = self.elements.iter().map(|&h| parent.conj(h, x)).collect();
        e.sort_unstable();
        Subgroup { elements: e }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Classes of `set` under conjugation by `by` (both subsets of `g`).
fn classes_within(g: &FiniteGroup, set: &[usize], by: &[usize]) -> Vec<ConjugacyClass> {
    let mut done = vec![false; g.order()];
    let mut out = Vec::new();
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    for &y in &sorted {
        if done[y] {
            continue;
        }
        let mut members: Vec<usize> = by.iter().map(|&x| g.conj(y, x)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            done[m] = true;
        }
        out.push(ConjugacyClass {
            representative: y,
            members,
        });
    }
    out
}

fn is_permutation(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    for &x in v {
        if x >= v.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    p.iter().map(|&i| q[i]).collect()
}

/// Cycle notation such as `(0 1 2)(3 4)`; the identity is `e`.
pub fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut i = p[start];
        while i != start {
            seen[i] = true;
            cyc.push(i);
            i = p[i];
        }
        let body: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        let names = (0..n).map(|i| if i == 0 { "e".into() } else { format!("g{i}") }).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(names, table).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_permutations(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes().len(), 1);
        assert_eq!(g.exponent(), 1);
    }

    #[test]
    fn s3_from_perms() {
        let g = FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.conjugacy_classes().len(), 3);
        assert_eq!(g.name(0), "e");
    }

    #[test]
    fn rejects_bad_tables() {
        let names = vec!["e".to_string(), "x".to_string()];
        assert!(matches!(
            FiniteGroup::from_table(names.clone(), vec![vec![0, 1], vec![1, 1]]),
            Err(GroupError::NotLatinSquare(_))
        ));
        assert_eq!(
            FiniteGroup::from_table(names, vec![vec![1, 0], vec![0, 1]]),
            Err(GroupError::IdentityNotFirst)
        );
        assert_eq!(FiniteGroup::from_permutations(2, &[]), Err(GroupError::EmptyGeneratorSet));
    }

    #[test]
    fn non_associative_latin_square() {
        // a loop of order 5 that is not a group
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let names = (0..5).map(|i| format!("x{i}")).collect();
        assert!(matches!(FiniteGroup::from_table(names, t), Err(GroupError::NonAssociative(..))));
    }

    #[test]
    fn cyclic_classes_are_singletons() {
        let g = cyclic(6);
        assert_eq!(g.conjugacy_classes().len(), 6);
        assert_eq!(g.exponent(), 6);
        assert_eq!(g.centralizer(3).order(), 6);
    }

    #[test]
    fn spec_roundtrip() {
        let g = cyclic(4);
        let spec = g.to_spec();
        let s = spec.to_json();
        let back = GroupSpec::from_json(&s).unwrap();
        assert_eq!(back, spec);
        assert_eq!(back.to_json(), s);
        assert_eq!(back.build().unwrap(), g);
    }
}
