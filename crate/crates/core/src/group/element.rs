use std::fmt;

use super::perm::Perm;

/// An element of one of the supported finite groups.
///
/// Elements carry their own modulus so products need no group context.
/// Dihedral elements are in normal form `x^a y^b` with
/// `(a1, b1)·(a2, b2) = (a1 + a2 mod 2, (−1)^{a2}·b1 + b2 mod n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GroupElement {
    Perm(Perm),
    Dihedral { n: u32, a: u8, b: u32 },
    Cyclic { n: u32, k: u32 },
    Product(Vec<GroupElement>),
}

impl GroupElement {
    pub fn dihedral(n: u32, a: u8, b: i64) -> Self {
        GroupElement::Dihedral {
            n,
            a: a % 2,
            b: b.rem_euclid(n as i64) as u32,
        }
    }

    pub fn cyclic(n: u32, k: i64) -> Self {
        GroupElement::Cyclic {
            n,
            k: k.rem_euclid(n as i64) as u32,
        }
    }

    /// Product `self · other`.
    ///
    /// Panics when the operands come from different groups.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        use GroupElement::*;
        match (self, other) {
            (Perm(p), Perm(q)) => Perm(p.compose(q)),
            (
                Dihedral { n, a: a1, b: b1 },
                Dihedral {
                    n: n2,
                    a: a2,
                    b: b2,
                },
            ) => {
                assert_eq!(n, n2, "dihedral moduli differ");
                let b1 = if *a2 == 1 { (n - b1) % n } else { *b1 };
                Dihedral {
                    n: *n,
                    a: (a1 + a2) % 2,
                    b: (b1 + b2) % n,
                }
            }
            (Cyclic { n, k: k1 }, Cyclic { n: n2, k: k2 }) => {
                assert_eq!(n, n2, "cyclic moduli differ");
                Cyclic {
                    n: *n,
                    k: (k1 + k2) % n,
                }
            }
            (Product(xs), Product(ys)) => {
                assert_eq!(xs.len(), ys.len(), "product arities differ");
                Product(xs.iter().zip(ys).map(|(x, y)| x.mul(y)).collect())
            }
            _ => panic!("cannot multiply {self} by {other}"),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        use GroupElement::*;
        match self {
            Perm(p) => Perm(p.inverse()),
            Dihedral { n, a: 1, b } => Dihedral { n: *n, a: 1, b: *b },
            Dihedral { n, a, b } => Dihedral {
                n: *n,
                a: *a,
                b: (n - b) % n,
            },
            Cyclic { n, k } => Cyclic {
                n: *n,
                k: (n - k) % n,
            },
            Product(xs) => Product(xs.iter().map(|x| x.inverse()).collect()),
        }
    }

    /// The identity of the group this element belongs to.
    pub fn identity_like(&self) -> GroupElement {
        use GroupElement::*;
        match self {
            Perm(p) => Perm(super::perm::Perm::identity(p.degree())),
            Dihedral { n, .. } => Dihedral { n: *n, a: 0, b: 0 },
            Cyclic { n, .. } => Cyclic { n: *n, k: 0 },
            Product(xs) => Product(xs.iter().map(|x| x.identity_like()).collect()),
        }
    }

    pub fn is_identity(&self) -> bool {
        use GroupElement::*;
        match self {
            Perm(p) => p.is_identity(),
            Dihedral { a, b, .. } => *a == 0 && *b == 0,
            Cyclic { k, .. } => *k == 0,
            Product(xs) => xs.iter().all(|x| x.is_identity()),
        }
    }

    /// `self^e` for any integer `e`.
    pub fn pow(&self, e: i64) -> GroupElement {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.identity_like();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// `self · other · self^{-1}`, the rack operation `self ▷ other`.
    pub fn conjugate(&self, other: &GroupElement) -> GroupElement {
        self.mul(other).mul(&self.inverse())
    }

    pub fn commutes_with(&self, other: &GroupElement) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Least `k ≥ 1` with `self^k = e`.
    pub fn order(&self) -> u64 {
        use GroupElement::*;
        match self {
            Perm(p) => p.order(),
            Dihedral { a: 1, .. } => 2,
            Dihedral { n, b, .. } | Cyclic { n, k: b } => {
                (*n / num_integer::gcd(*n, *b)) as u64
            }
            Product(xs) => xs
                .iter()
                .fold(1u64, |acc, x| num_integer::lcm(acc, x.order())),
        }
    }

    pub fn as_perm(&self) -> Option<&Perm> {
        match self {
            GroupElement::Perm(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => write!(f, "{p}"),
            GroupElement::Dihedral { a, b, .. } => write!(f, "x^{a}*y^{b}"),
            GroupElement::Cyclic { k, .. } => write!(f, "{k}"),
            GroupElement::Product(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_relations() {
        let n = 7;
        let x = GroupElement::dihedral(n, 1, 0);
        let y = GroupElement::dihedral(n, 0, 1);
        assert!(x.mul(&x).is_identity());
        assert!(y.pow(7).is_identity());
        // x y x = y^{-1}
        assert_eq!(x.mul(&y).mul(&x), y.inverse());
        assert_eq!(x.order(), 2);
        assert_eq!(y.order(), 7);
        // normal form x^a y^b is literally x^a · y^b
        let xy3 = x.mul(&y.pow(3));
        assert_eq!(xy3, GroupElement::dihedral(n, 1, 3));
        assert_eq!(xy3.to_string(), "x^1*y^3");
    }

    #[test]
    fn reflection_conjugation_rule() {
        // xy^a ▷ xy^b = xy^{2a-b}
        let n = 9;
        for a in 0..n as i64 {
            for b in 0..n as i64 {
                let u = GroupElement::dihedral(n, 1, a);
                let v = GroupElement::dihedral(n, 1, b);
                assert_eq!(u.conjugate(&v), GroupElement::dihedral(n, 1, 2 * a - b));
            }
        }
    }

    #[test]
    fn orders() {
        let p = GroupElement::Perm(Perm::parse(6, "(1 2)(3 4 5 6)").unwrap());
        assert_eq!(p.order(), 4);
        assert_eq!(p.identity_like().order(), 1);
        let c = GroupElement::cyclic(12, 8);
        assert_eq!(c.order(), 3);
        let prod = GroupElement::Product(vec![p.clone(), GroupElement::cyclic(3, 1)]);
        assert_eq!(prod.order(), 12);
        assert_eq!(p.pow(-1), p.inverse());
    }
}
