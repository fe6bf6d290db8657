//! Character tables by the Burnside-Dixon method, plus class functions.
//!
//! Class sums are diagonalised over `F_p` with `p = 1 mod exponent`, then the
//! values are lifted to `Q(z_e)` through the discrete log of a fixed `e`-th
//! root of unity mod `p`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclotomic::Cyclotomic;
use crate::error::CharTableError;
use crate::group::{ConjugacyClass, FiniteGroup, Subgroup};

pub const DEFAULT_ORDER_BOUND: usize = 2000;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    /// The group, with local indices; `parent[i]` is the index in the ambient group.
    pub group: FiniteGroup,
    pub parent: Vec<usize>,
    pub classes: Vec<ConjugacyClass>,
    pub class_of: Vec<usize>,
    /// `rows[r][c]`: value of irreducible `r` on class `c`.
    pub rows: Vec<Vec<Cyclotomic>>,
    pub degrees: Vec<usize>,
    pub conductor: u32,
    pub prime: u64,
}

impl CharacterTable {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Value of row `r` at local element `g`.
    pub fn value(&self, r: usize, g: usize) -> &Cyclotomic {
        &self.rows[r][self.class_of[g]]
    }

    /// Row `r` as a class function on the ambient group's subgroup.
    pub fn class_function(&self, r: usize) -> ClassFunction {
        ClassFunction {
            support: self.parent.clone(),
            values: (0..self.order()).map(|g| self.value(r, g).clone()).collect(),
        }
    }

    /// Row index matching a class function on the same support.
    pub fn find_row(&self, f: &ClassFunction) -> Option<usize> {
        if f.support != self.parent {
            return None;
        }
        (0..self.rows.len()).find(|&r| (0..self.order()).all(|g| *self.value(r, g) == f.values[g]))
    }

    /// Exact row and column orthogonality.
    pub fn check_orthogonality(&self) -> bool {
        let h = self.order() as i64;
        let n = self.conductor;
        let k = self.rows.len();
        for a in 0..k {
            for b in 0..k {
                let mut acc = Cyclotomic::zero(n);
                for (c, cl) in self.classes.iter().enumerate() {
                    let t = &self.rows[a][c] * &self.rows[b][c].conj();
                    acc += &t.scale(&BigRational::from_integer(BigInt::from(cl.len())));
                }
                let want = if a == b { h } else { 0 };
                if acc != Cyclotomic::from_int(n, want) {
                    return false;
                }
            }
        }
        for c in 0..k {
            for d in 0..k {
                let mut acc = Cyclotomic::zero(n);
                for r in 0..k {
                    acc += &(&self.rows[r][c] * &self.rows[r][d].conj());
                }
                let want = if c == d { (h as usize / self.classes[c].len()) as i64 } else { 0 };
                if acc != Cyclotomic::from_int(n, want) {
                    return false;
                }
            }
        }
        true
    }
}

/// A function on a subgroup (given by ambient indices), constant on its classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    /// Sorted ambient element indices.
    pub support: Vec<usize>,
    pub values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn eval(&self, g: usize) -> Option<&Cyclotomic> {
        self.support.binary_search(&g).ok().map(|i| &self.values[i])
    }

    pub fn degree(&self) -> usize {
        let v = self.values[0].as_integer().expect("integral degree");
        usize::try_from(v).expect("positive degree")
    }

    /// `chi'(v) = chi(u v u^-1)` on `u^-1 H u`.
    pub fn conjugated(&self, parent: &FiniteGroup, u: usize) -> ClassFunction {
        let ui = parent.inv(u);
        let mut pairs: Vec<(usize, Cyclotomic)> = self
            .support
            .iter()
            .map(|&h| {
                let v = parent.conj(h, u);
                let back = parent.mul(u, parent.mul(v, ui));
                (v, self.eval(back).expect("conjugate lands in support").clone())
            })
            .collect();
        pairs.sort_by_key(|p| p.0);
        ClassFunction {
            support: pairs.iter().map(|p| p.0).collect(),
            values: pairs.into_iter().map(|p| p.1).collect(),
        }
    }

    /// `chi*(z) = chi(z^-1)`.
    pub fn dual(&self, parent: &FiniteGroup) -> ClassFunction {
        ClassFunction {
            support: self.support.clone(),
            values: self
                .support
                .iter()
                .map(|&h| self.eval(parent.inv(h)).expect("closed under inverse").clone())
                .collect(),
        }
    }

    /// `(1/|H|) sum chi(h) conj(psi(h))`.
    pub fn inner(&self, other: &ClassFunction) -> Cyclotomic {
        assert_eq!(self.support, other.support);
        let n = self.values[0].conductor();
        let mut acc = Cyclotomic::zero(n);
        for (a, b) in self.values.iter().zip(&other.values) {
            acc += &(a * &b.conj());
        }
        acc.scale(&BigRational::new(1.into(), BigInt::from(self.support.len())))
    }
}

/// Transport along conjugation: the character at `y` moved to `y2 = u^-1 y u`.
pub fn transport_character(
    parent: &FiniteGroup,
    chi: &ClassFunction,
    y: usize,
    y2: usize,
    u: usize,
) -> Result<ClassFunction, CharTableError> {
    if parent.conj(y, u) != y2 {
        return Err(CharTableError::ElementDoesNotConnect);
    }
    Ok(chi.conjugated(parent, u))
}

pub fn dual_character(parent: &FiniteGroup, chi: &ClassFunction) -> ClassFunction {
    chi.dual(parent)
}

pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable, CharTableError> {
    character_table_bounded(g, DEFAULT_ORDER_BOUND)
}

pub fn subgroup_table(parent: &FiniteGroup, h: &Subgroup) -> Result<CharacterTable, CharTableError> {
    let mut t = character_table(&h.as_group(parent))?;
    t.parent = h.elements().to_vec();
    Ok(t)
}

pub fn character_table_bounded(g: &FiniteGroup, bound: usize) -> Result<CharacterTable, CharTableError> {
    let order = g.order();
    if order > bound {
        return Err(CharTableError::GroupTooLarge { order, bound });
    }
    let classes = g.conjugacy_classes();
    let k = classes.len();
    let mut class_of = vec![0; order];
    for (i, c) in classes.iter().enumerate() {
        for &m in &c.members {
            class_of[m] = i;
        }
    }
    let e = g.exponent() as u64;
    let p = choose_prime(e, order);
    let z = pow_mod(primitive_root(p), (p - 1) / e, p);

    // a[j][i][l]: number of (x, y) in C_j x C_i with xy = rep(C_l)
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (l, cl) in classes.iter().enumerate() {
        for x in g.elements() {
            let y = g.mul(g.inv(x), cl.representative);
            a[class_of[x]][class_of[y]][l] += 1;
        }
    }
    let mats: Vec<Vec<Vec<u64>>> = (0..k).map(|j| a[j].iter().map(|r| r.iter().map(|v| v % p).collect()).collect()).collect();

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k).map(|i| unit(k, i)).collect()];
    for mj in mats.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for sp in spaces {
            if sp.len() == 1 {
                next.push(sp);
                continue;
            }
            next.extend(split(mj, &sp, p)?);
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s.len() != 1) {
        return Err(CharTableError::SplittingFailed(s.len()));
    }

    let inv_class: Vec<usize> = classes.iter().map(|c| class_of[g.inv(c.representative)]).collect();
    let sizes: Vec<u64> = classes.iter().map(|c| c.len() as u64).collect();
    let power_class: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| (0..e).map(|l| class_of[g.pow(c.representative, l as usize)]).collect())
        .collect();
    let n = e as u32;
    let mut rows = Vec::with_capacity(k);
    let mut degrees = Vec::with_capacity(k);
    for sp in &spaces {
        let v = &sp[0];
        let s = inv_mod(v[0], p);
        let w: Vec<u64> = v.iter().map(|x| x * s % p).collect();
        let mut sum = 0;
        for i in 0..k {
            sum = (sum + w[i] * w[inv_class[i]] % p * inv_mod(sizes[i], p)) % p;
        }
        let d2 = (order as u64 % p) * inv_mod(sum, p) % p;
        let d = (1..=isqrt(order as u64))
            .find(|d| d * d % p == d2)
            .ok_or_else(|| CharTableError::LiftFailed("no degree".into()))?;
        let chi_p: Vec<u64> = (0..k).map(|i| w[i] * d % p * inv_mod(sizes[i], p) % p).collect();
        let mut row = Vec::with_capacity(k);
        for i in 0..k {
            let mut poly = vec![BigRational::from_integer(0.into()); e as usize];
            for (kk, slot) in poly.iter_mut().enumerate() {
                let mut m = 0;
                for l in 0..e {
                    let zexp = (e - (kk as u64 * l) % e) % e;
                    m = (m + chi_p[power_class[i][l as usize]] * pow_mod(z, zexp, p)) % p;
                }
                m = m * inv_mod(e % p, p) % p;
                if m > d {
                    return Err(CharTableError::LiftFailed(format!("multiplicity {m} > degree {d}")));
                }
                *slot = BigRational::from_integer(BigInt::from(m));
            }
            row.push(Cyclotomic::from_poly(n, poly));
        }
        rows.push(row);
        degrees.push(d as usize);
    }

    let mut order_idx: Vec<usize> = (0..k).collect();
    order_idx.sort_by(|&x, &y| row_cmp(&rows[x], degrees[x], &rows[y], degrees[y]));
    let rows: Vec<Vec<Cyclotomic>> = order_idx.iter().map(|&i| rows[i].clone()).collect();
    let degrees: Vec<usize> = order_idx.iter().map(|&i| degrees[i]).collect();

    let table = CharacterTable {
        group: g.clone(),
        parent: g.elements().collect(),
        classes,
        class_of,
        rows,
        degrees,
        conductor: n,
        prime: p,
    };
    if !table.check_orthogonality() {
        return Err(CharTableError::NotOrthogonal);
    }
    Ok(table)
}

/// Degree ascending, then values descending (real part, then imaginary part).
fn row_cmp(a: &[Cyclotomic], da: usize, b: &[Cyclotomic], db: usize) -> Ordering {
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b) {
            let (zx, zy) = (x.to_complex(), y.to_complex());
            let key = |f: f64| (f * 1e9).round() as i64;
            let o = key(zy.re).cmp(&key(zx.re)).then(key(zy.im).cmp(&key(zx.im)));
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

fn unit(k: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; k];
    v[i] = 1;
    v
}

/// Split an invariant subspace (basis rows) into eigenspaces of `m` acting on columns.
fn split(m: &[Vec<u64>], basis: &[Vec<u64>], p: u64) -> Result<Vec<Vec<Vec<u64>>>, CharTableError> {
    let k = m.len();
    let dim = basis.len();
    // images M b for each basis vector
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| (0..k).map(|i| (0..k).fold(0, |acc, j| (acc + m[i][j] * b[j]) % p)).collect())
        .collect();
    let mut out = Vec::new();
    let mut found = 0;
    for lambda in 0..p {
        if found == dim {
            break;
        }
        // columns: (M - lambda) b_l, as a k x dim system in coefficients c
        let sys: Vec<Vec<u64>> = (0..k)
            .map(|i| (0..dim).map(|l| (images[l][i] + p - lambda * basis[l][i] % p) % p).collect())
            .collect();
        let null = nullspace_mod(&sys, dim, p);
        if null.is_empty() {
            continue;
        }
        found += null.len();
        let vecs: Vec<Vec<u64>> = null
            .iter()
            .map(|c| (0..k).map(|i| (0..dim).fold(0, |acc, l| (acc + c[l] * basis[l][i]) % p)).collect())
            .collect();
        out.push(vecs);
    }
    if found != dim {
        return Err(CharTableError::SplittingFailed(dim));
    }
    Ok(out)
}

fn nullspace_mod(a: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut m: Vec<Vec<u64>> = a.to_vec();
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + p - f * m[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; cols];
            v[f] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[ri][f]) % p;
            }
            v
        })
        .collect()
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Smallest prime `p = 1 (mod e)` with `p > 2 sqrt(order)`.
pub fn choose_prime(e: u64, order: usize) -> u64 {
    let mut p = e + 1;
    loop {
        if is_prime(p) && p * p > 4 * order as u64 {
            return p;
        }
        p += e;
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).expect("prime has a primitive root")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]]).unwrap()
    }

    #[test]
    fn prime_choice() {
        assert_eq!(choose_prime(6, 12), 7);
        assert_eq!(choose_prime(1, 1), 3);
        assert_eq!(choose_prime(2, 4), 5);
    }

    #[test]
    fn s3_table() {
        let t = character_table(&s3()).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2]);
        assert!(t.rows[0].iter().all(|v| v.is_one()));
    }

    #[test]
    fn quaternion_table() {
        let q8 = FiniteGroup::from_permutations(
            8,
            &[vec![1, 2, 3, 0, 5, 6, 7, 4], vec![4, 7, 6, 5, 2, 1, 0, 3]],
        )
        .unwrap();
        assert_eq!(q8.order(), 8);
        let t = character_table(&q8).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn cyclic_five() {
        let c5 = FiniteGroup::from_permutations(5, &[vec![1, 2, 3, 4, 0]]).unwrap();
        let t = character_table(&c5).unwrap();
        assert_eq!(t.rows.len(), 5);
        assert_eq!(t.conductor, 5);
    }

    #[test]
    fn too_large() {
        let g = s3();
        assert_eq!(
            character_table_bounded(&g, 5).unwrap_err(),
            CharTableError::GroupTooLarge { order: 6, bound: 5 }
        );
    }

    #[test]
    fn transport_needs_connecting_element() {
        let g = s3();
        let t = character_table(&g).unwrap();
        let chi = t.class_function(2);
        let y = 1;
        let u = 2;
        let y2 = g.conj(y, u);
        assert!(transport_character(&g, &chi, y, y2, u).is_ok());
        let wrong = (0..6).find(|&x| x != y2).unwrap();
        assert_eq!(
            transport_character(&g, &chi, y, wrong, u).unwrap_err(),
            CharTableError::ElementDoesNotConnect
        );
    }
}
