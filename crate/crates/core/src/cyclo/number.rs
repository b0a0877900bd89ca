use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{self, Poly};
use super::root::RootOfUnity;

/// An element `Σ c_i ζ_N^i` of `Q(ζ_N)` with one rational coefficient per
/// power `0 ≤ i < N`.
///
/// Products are cyclic convolutions. The representation is not unique;
/// comparisons reduce modulo `Φ_N` first.
#[derive(Clone, Debug)]
pub struct CycloNumber {
    n: usize,
    coeffs: Vec<BigRational>,
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl CycloNumber {
    pub fn zero(n: usize) -> Self {
        assert!(n > 0);
        CycloNumber {
            n,
            coeffs: vec![BigRational::zero(); n],
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_integer(n, 1)
    }

    pub fn from_integer(n: usize, x: i64) -> Self {
        Self::from_rational(n, rat(x))
    }

    pub fn from_rational(n: usize, x: BigRational) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = x;
        z
    }

    /// `ζ_n^k`.
    pub fn root_in(n: usize, k: i64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[k.rem_euclid(n as i64) as usize] = BigRational::one();
        z
    }

    pub fn from_root(r: &RootOfUnity) -> Self {
        Self::root_in(r.order() as usize, r.numerator() as i64)
    }

    /// Builds `Σ c_i ζ_n^i` from integer coefficients.
    pub fn from_integer_coeffs(n: usize, coeffs: &[i64]) -> Self {
        let mut z = Self::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            z.coeffs[i % n] += rat(c);
        }
        z
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The same number written over `ζ_l`; requires `n | l`.
    pub fn lift(&self, l: usize) -> Self {
        assert!(l.is_multiple_of(self.n), "cannot lift modulus {} to {l}", self.n);
        if l == self.n {
            return self.clone();
        }
        let step = l / self.n;
        let mut z = Self::zero(l);
        for (i, c) in self.coeffs.iter().enumerate() {
            z.coeffs[i * step] = c.clone();
        }
        z
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let l = self.n.lcm(&other.n);
        (self.lift(l), other.lift(l))
    }

    pub fn scale(&self, x: &BigRational) -> Self {
        CycloNumber {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * x).collect(),
        }
    }

    /// Multiplies by `ζ_n^k` (a rotation of the coefficients).
    pub fn mul_root(&self, r: &RootOfUnity) -> Self {
        let l = self.n.lcm(&(r.order() as usize));
        let a = self.lift(l);
        let shift = r.exponent_in(l as u64) as usize;
        let mut z = Self::zero(l);
        for (i, c) in a.coeffs.into_iter().enumerate() {
            z.coeffs[(i + shift) % l] = c;
        }
        z
    }

    /// Remainder modulo `Φ_n`, trimmed: the canonical coordinates.
    pub fn reduced(&self) -> Poly {
        let phi = poly::cyclotomic(self.n);
        let d = phi.len() - 1;
        let mut r = self.coeffs.clone();
        for top in (d..self.n).rev() {
            if r[top].is_zero() {
                continue;
            }
            let c = r[top].clone();
            for (i, &p) in phi.iter().enumerate() {
                if p != 0 {
                    r[top - d + i] -= &c * rat(p);
                }
            }
        }
        r.truncate(d);
        poly::trim(&mut r);
        r
    }

    /// Canonical representative: coefficients only below `deg Φ_n`.
    pub fn normalize(&self) -> Self {
        let mut z = Self::zero(self.n);
        for (i, c) in self.reduced().into_iter().enumerate() {
            z.coeffs[i] = c;
        }
        z
    }

    pub fn is_zero(&self) -> bool {
        if self.coeffs.iter().all(|c| c.is_zero()) {
            return true;
        }
        self.reduced().is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// The value when it is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        let r = self.reduced();
        match r.len() {
            0 => Some(BigRational::zero()),
            1 => Some(r[0].clone()),
            _ => None,
        }
    }

    /// The value as a root of unity, when it is one.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        let l = self.n.lcm(&2);
        let target = self.lift(l).normalize();
        (0..l as i64)
            .map(|k| RootOfUnity::new(k, l as u64))
            .find(|r| CycloNumber::from_root(r) == target)
    }

    pub fn inverse(&self) -> Option<Self> {
        let a = self.reduced();
        if a.is_empty() {
            return None;
        }
        let phi: Poly = poly::cyclotomic(self.n).iter().map(|&c| rat(c)).collect();
        let inv = poly::inverse_mod(&a, &phi)?;
        let mut z = Self::zero(self.n);
        for (i, c) in inv.into_iter().enumerate() {
            z.coeffs[i] = c;
        }
        Some(z)
    }

    /// Complex conjugate: `ζ^k ↦ ζ^{-k}`.
    pub fn conj(&self) -> Self {
        let mut z = Self::zero(self.n);
        for (i, c) in self.coeffs.iter().enumerate() {
            z.coeffs[(self.n - i) % self.n] = c.clone();
        }
        z
    }

    /// Approximate complex value `(re, im)`.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let t = std::f64::consts::TAU * i as f64 / self.n as f64;
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for CycloNumber {}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, other: &CycloNumber) -> CycloNumber {
        let (mut a, b) = self.aligned(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, other: &CycloNumber) -> CycloNumber {
        let (mut a, b) = self.aligned(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, other: &CycloNumber) -> CycloNumber {
        let (a, b) = self.aligned(other);
        let n = a.n;
        let mut z = CycloNumber::zero(n);
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    z.coeffs[(i + j) % n] += x * y;
                }
            }
        }
        z
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        if r.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in r.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "zeta({})^{i}", self.n)?,
                (_, false) => write!(f, "{a}*zeta({})^{i}", self.n)?,
            }
        }
        Ok(())
    }
}
