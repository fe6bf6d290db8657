//! Dense matrices over cyclotomic fields, row-vector convention.

use std::ops::{Add, Mul, Sub};

use crate::cyclotomic::Cyclotomic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMat {
    rows: usize,
    cols: usize,
    n: u32,
    data: Vec<Cyclotomic>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize, n: u32) -> Self {
        CMat {
            rows,
            cols,
            n,
            data: vec![Cyclotomic::zero(n); rows * cols],
        }
    }

    pub fn identity(k: usize, n: u32) -> Self {
        let mut m = Self::zeros(k, k, n);
        for i in 0..k {
            m[(i, i)] = Cyclotomic::one(n);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>, n: u32) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.into_iter().map(|x| x.lift(n)));
        }
        CMat { rows: r, cols: c, n, data }
    }

    pub fn diag(entries: &[Cyclotomic], n: u32) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len(), n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.lift(n);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn set_row(&mut self, i: usize, v: &[Cyclotomic]) {
        assert_eq!(v.len(), self.cols);
        for (j, x) in v.iter().enumerate() {
            self.data[i * self.cols + j] = x.lift(self.n);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        CMat {
            rows: self.rows,
            cols: self.cols,
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.n);
        for i in 0..self.rows.min(self.cols) {
            acc += &self[(i, i)];
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn kron(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols, n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows, self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Row echelon form in place; returns pivot columns.
    fn echelon(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("nonzero pivot");
            for j in c..self.cols {
                self[(r, j)] = &self[(r, j)] * &inv;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    let v = &self[(i, j)] - &(&f * &self[(r, j)]);
                    self[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon().len()
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let k = self.rows;
        if k == 0 {
            return Some(self.clone());
        }
        let mut aug = Self::zeros(k, 2 * k, self.n);
        for i in 0..k {
            for j in 0..k {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, k + i)] = Cyclotomic::one(self.n);
        }
        let piv = aug.echelon();
        if piv.len() < k || piv[k - 1] >= k {
            return None;
        }
        let mut inv = Self::zeros(k, k, self.n);
        for i in 0..k {
            for j in 0..k {
                inv[(i, j)] = aug[(i, k + j)].clone();
            }
        }
        Some(inv)
    }

    /// Indices of a maximal set of linearly independent rows, greedy from the top.
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        let mut basis = Self::zeros(0, self.cols, self.n);
        for i in 0..self.rows {
            let mut trial = basis.clone();
            trial.data.extend(self.row(i).iter().cloned());
            trial.rows += 1;
            if trial.rank() == trial.rows {
                basis = trial;
                chosen.push(i);
            }
        }
        chosen
    }

    /// Columns `cols` of the matrix.
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, cols.len(), self.n);
        for i in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                out[(i, k)] = self[(i, c)].clone();
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), self.cols, self.n);
        for (k, &r) in rows.iter().enumerate() {
            out.set_row(k, self.row(r));
        }
        out
    }

    /// Pivot columns of the row space (a column set on which the rows are independent).
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.clone().echelon()
    }

    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((self.rows.min(other.rows), self.cols.min(other.cols)));
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self[(i, j)] != other[(i, j)] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Permute rows and columns: out[i][j] = self[p[i]][p[j]].
    pub fn permuted(&self, p: &[usize]) -> Self {
        let mut out = Self::zeros(p.len(), p.len(), self.n);
        for (i, &pi) in p.iter().enumerate() {
            for (j, &pj) in p.iter().enumerate() {
                out[(i, j)] = self[(pi, pj)].clone();
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Cyclotomic;
    fn index(&self, (i, j): (usize, usize)) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cyclotomic {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a CMat> for &'a CMat {
    type Output = CMat;
    fn mul(self, rhs: &CMat) -> CMat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let n = self.n;
        let mut out = CMat::zeros(self.rows, rhs.cols, n);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let p = a * b;
                    out[(i, j)] += &p;
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a CMat> for &'a CMat {
    type Output = CMat;
    fn add(self, rhs: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMat {
            rows: self.rows,
            cols: self.cols,
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CMat> for &'a CMat {
    type Output = CMat;
    fn sub(self, rhs: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMat {
            rows: self.rows,
            cols: self.cols,
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Vector times matrix.
pub fn vec_mul(v: &[Cyclotomic], m: &CMat) -> Vec<Cyclotomic> {
    assert_eq!(v.len(), m.rows());
    let mut out = vec![Cyclotomic::zero(m.conductor()); m.cols()];
    for (k, a) in v.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            let b = &m[(k, j)];
            if !b.is_zero() {
                *o += &(a * b);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> Cyclotomic {
        Cyclotomic::from_int(6, v)
    }

    #[test]
    fn inverse_roundtrip() {
        let m = CMat::from_rows(
            vec![vec![c(2), Cyclotomic::zeta(6, 1)], vec![c(1), Cyclotomic::zeta(6, 2)]],
            6,
        );
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        let sing = CMat::from_rows(vec![vec![c(1), c(2)], vec![c(2), c(4)]], 6);
        assert!(sing.inverse().is_none());
        assert_eq!(sing.rank(), 1);
    }

    #[test]
    fn kron_shapes() {
        let a = CMat::identity(2, 6);
        let b = CMat::from_rows(vec![vec![c(1), c(2), c(3)]], 6);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 6));
        assert_eq!(k[(1, 5)], c(3));
    }

    #[test]
    fn independent_rows_greedy() {
        let m = CMat::from_rows(vec![vec![c(1), c(1)], vec![c(2), c(2)], vec![c(0), c(1)]], 6);
        assert_eq!(m.independent_rows(), vec![0, 2]);
    }
}
