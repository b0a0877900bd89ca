//! Dense univariate polynomials over Q, lowest degree first.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Poly = Vec<BigRational>;

pub fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Degree of a trimmed polynomial; `None` for zero.
pub fn degree(p: &Poly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub fn divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut r = a.clone();
    trim(&mut r);
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            r[i + shift] -= &c * bc;
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Inverse of `a` modulo `m` when `gcd(a, m) = 1`.
pub fn inverse_mod(a: &Poly, m: &Poly) -> Option<Poly> {
    let (mut r0, mut r1) = (m.clone(), a.clone());
    trim(&mut r1);
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![BigRational::one()]);
    while degree(&r1).is_some() {
        let (q, r) = divmod(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is the gcd, s0·a ≡ r0 (mod m)
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = r0[0].clone();
    let mut inv: Poly = s0.into_iter().map(|x| x / &c).collect();
    let (_, rem) = divmod(&inv, m);
    inv = rem;
    Some(inv)
}

thread_local! {
    static CYCLOTOMIC: RefCell<HashMap<usize, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

/// Integer coefficients of the cyclotomic polynomial `Φ_n`, lowest degree first.
pub fn cyclotomic(n: usize) -> Rc<Vec<i64>> {
    assert!(n > 0);
    if let Some(p) = CYCLOTOMIC.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = exact_div_monic(&p, &cyclotomic(d));
    }
    let p = Rc::new(p);
    CYCLOTOMIC.with(|c| c.borrow_mut().insert(n, p.clone()));
    p
}

fn exact_div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for shift in (0..q.len()).rev() {
        let c = r[shift + db];
        q[shift] = c;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= c * bc;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

pub fn euler_phi(n: usize) -> usize {
    cyclotomic(n).len() - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Poly {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic(1), vec![-1, 1]);
        assert_eq!(*cyclotomic(2), vec![1, 1]);
        assert_eq!(*cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(60), 16);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic(105).contains(&-2));
    }

    #[test]
    fn modular_inverse() {
        let m = q(&[1, 1, 1]);
        let a = q(&[0, 1]);
        let inv = inverse_mod(&a, &m).unwrap();
        let (_, r) = divmod(&mul(&a, &inv), &m);
        assert_eq!(r, q(&[1]));
        assert!(inverse_mod(&q(&[1, 1]), &q(&[1, 0, -1])).is_none());
    }
}
