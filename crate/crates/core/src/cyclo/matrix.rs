use std::fmt;

use num_integer::Integer;

use super::number::CycloNumber;
use super::root::RootOfUnity;
use crate::error::{Error, Result};

/// Dense row-major matrix over `Q(ζ_N)`; every entry is written over the
/// common modulus `N`.
#[derive(Clone, Debug)]
pub struct CycloMatrix {
    n: usize,
    rows: usize,
    cols: usize,
    entries: Vec<CycloNumber>,
}

pub type CycloVector = Vec<CycloNumber>;

impl PartialEq for CycloMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl Eq for CycloMatrix {}

impl CycloMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<CycloNumber>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        let n = entries.iter().fold(1, |acc, e| acc.lcm(&e.modulus()));
        let entries = entries.into_iter().map(|e| e.lift(n)).collect();
        CycloMatrix {
            n,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<CycloNumber>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zero(rows: usize, cols: usize, n: usize) -> Self {
        Self::new(rows, cols, vec![CycloNumber::zero(n); rows * cols])
    }

    pub fn identity(dim: usize, n: usize) -> Self {
        Self::scalar(dim, &CycloNumber::one(n))
    }

    pub fn scalar(dim: usize, c: &CycloNumber) -> Self {
        let mut m = Self::zero(dim, dim, c.modulus());
        for i in 0..dim {
            m.entries[i * dim + i] = c.clone();
        }
        m
    }

    pub fn diagonal(roots: &[RootOfUnity]) -> Self {
        let dim = roots.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(if i == j {
                    CycloNumber::from_root(&roots[i])
                } else {
                    CycloNumber::zero(1)
                });
            }
        }
        Self::new(dim, dim, entries)
    }

    /// A `1×1` matrix.
    pub fn from_root(r: &RootOfUnity) -> Self {
        Self::diagonal(&[*r])
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNumber {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[CycloNumber] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn lift(&self, l: usize) -> Self {
        CycloMatrix {
            n: l,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.lift(l)).collect(),
        }
    }

    pub fn mul(&self, other: &CycloMatrix) -> CycloMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = CycloNumber::zero(self.n);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if a.coeffs().iter().all(num_traits::Zero::is_zero)
                        || b.coeffs().iter().all(num_traits::Zero::is_zero)
                    {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                out.push(acc.normalize());
            }
        }
        CycloMatrix::new(self.rows, other.cols, out)
    }

    pub fn add(&self, other: &CycloMatrix) -> CycloMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        CycloMatrix::new(self.rows, self.cols, entries)
    }

    pub fn sub(&self, other: &CycloMatrix) -> CycloMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        CycloMatrix::new(self.rows, self.cols, entries)
    }

    pub fn scale(&self, c: &CycloNumber) -> CycloMatrix {
        let entries = self.entries.iter().map(|e| e * c).collect();
        CycloMatrix::new(self.rows, self.cols, entries)
    }

    pub fn pow(&self, e: u64) -> CycloMatrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut acc = Self::identity(self.rows, self.n);
        let mut sq = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    pub fn apply(&self, v: &[CycloNumber]) -> CycloVector {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = CycloNumber::zero(self.n);
                for (k, x) in v.iter().enumerate() {
                    acc = &acc + &(self.get(i, k) * x);
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> CycloNumber {
        (0..self.rows.min(self.cols)).fold(CycloNumber::zero(self.n), |acc, i| &acc + self.get(i, i))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows, self.n)
    }

    /// `c` when the matrix equals `c·Id`.
    pub fn scalar_value(&self) -> Option<CycloNumber> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0).clone();
        (*self == Self::scalar(self.rows, &c)).then_some(c)
    }

    pub fn commutes_with(&self, other: &CycloMatrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Least `k ≤ bound` with `M^k = Id`.
    pub fn finite_order(&self, bound: u32) -> Option<u32> {
        if self.rows != self.cols {
            return None;
        }
        let mut p = self.clone();
        for k in 1..=bound {
            if p.is_identity() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }

    pub fn rank(&self) -> usize {
        rref(self.to_rows()).1.len()
    }

    /// Basis of the kernel; the free coordinate of each vector is 1.
    pub fn nullspace(&self) -> Vec<CycloVector> {
        let (reduced, pivots) = rref(self.to_rows());
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![CycloNumber::zero(self.n); self.cols];
                v[f] = CycloNumber::one(self.n);
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = (-&reduced[r][f]).normalize();
                }
                v
            })
            .collect()
    }

    fn to_rows(&self) -> Vec<Vec<CycloNumber>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[CycloVector]) -> Self {
        let rows = cols.first().map_or(0, |c| c.len());
        let mut entries = Vec::with_capacity(rows * cols.len());
        for i in 0..rows {
            for c in cols {
                entries.push(c[i].clone());
            }
        }
        Self::new(rows, cols.len(), entries)
    }
}

/// Reduced row echelon form; returns the rows and the pivot columns.
pub fn rref(mut rows: Vec<Vec<CycloNumber>>) -> (Vec<Vec<CycloNumber>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        let pivot_row: Vec<CycloNumber> = rows[r].iter().map(|x| (x * &inv).normalize()).collect();
        rows[r] = pivot_row;
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            let updated: Vec<CycloNumber> = rows[i]
                .iter()
                .zip(&rows[r])
                .map(|(x, y)| (x - &(&f * y)).normalize())
                .collect();
            rows[i] = updated;
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Eigenspaces of a matrix with `M^order = Id`, eigenvalues ascending by
/// exponent `k` of `ζ_order^k`, empty ones omitted.
pub fn eigenspaces(m: &CycloMatrix, order: u32) -> Result<Vec<(RootOfUnity, Vec<CycloVector>)>> {
    if m.rows() != m.cols() || order == 0 || !m.pow(order as u64).is_identity() {
        return Err(Error::NotFiniteOrder(order));
    }
    let l = m.modulus().lcm(&(order as usize));
    let m = m.lift(l);
    let mut out = Vec::new();
    for k in 0..order as i64 {
        let z = RootOfUnity::new(k, order as u64);
        let shifted = m.sub(&CycloMatrix::scalar(m.rows(), &CycloNumber::from_root(&z)));
        let basis = shifted.nullspace();
        if !basis.is_empty() {
            out.push((z, basis));
        }
    }
    Ok(out)
}

/// Splits the space into the joint eigenspaces of the given matrices (which
/// need not commute): every returned vector is an eigenvector of each input,
/// with the listed eigenvalues. The spaces may not fill the whole space.
pub fn common_eigenspaces(mats: &[CycloMatrix]) -> Result<Vec<(Vec<RootOfUnity>, Vec<CycloVector>)>> {
    let Some(first) = mats.first() else {
        return Ok(Vec::new());
    };
    let dim = first.rows();
    let n = mats.iter().fold(1, |acc, m| acc.lcm(&m.modulus()));
    let start: Vec<CycloVector> = (0..dim)
        .map(|i| {
            let mut v = vec![CycloNumber::zero(n); dim];
            v[i] = CycloNumber::one(n);
            v
        })
        .collect();
    let mut spaces: Vec<(Vec<RootOfUnity>, Vec<CycloVector>)> = vec![(Vec::new(), start)];
    for m in mats {
        let order = m.finite_order(1000).ok_or(Error::NotFiniteOrder(1000))?;
        let l = n.lcm(&(order as usize));
        let m = m.lift(l);
        let mut next = Vec::new();
        for (tags, basis) in &spaces {
            let b = CycloMatrix::from_columns(basis);
            let mb = m.mul(&b.lift(l));
            for k in 0..order as i64 {
                let z = RootOfUnity::new(k, order as u64);
                let shifted = mb.sub(&b.lift(l).scale(&CycloNumber::from_root(&z)));
                let coords = shifted.nullspace();
                if coords.is_empty() {
                    continue;
                }
                let vectors: Vec<CycloVector> = coords
                    .iter()
                    .map(|c| b.apply(c).into_iter().map(|x| x.normalize()).collect())
                    .collect();
                let mut t = tags.clone();
                t.push(z);
                next.push((t, vectors));
            }
        }
        spaces = next;
    }
    Ok(spaces)
}

/// A basis of common eigenvectors for pairwise commuting matrices of finite
/// order, each vector with its eigenvalue under every matrix.
pub fn simultaneous_eigenbasis(mats: &[CycloMatrix]) -> Result<Vec<(CycloVector, Vec<RootOfUnity>)>> {
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[i + 1..] {
            if !a.commutes_with(b) {
                return Err(Error::NonCommuting);
            }
        }
    }
    let spaces = common_eigenspaces(mats)?;
    let mut out = Vec::new();
    for (tags, basis) in spaces {
        for v in basis {
            out.push((v, tags.clone()));
        }
    }
    Ok(out)
}

impl fmt::Display for CycloMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
