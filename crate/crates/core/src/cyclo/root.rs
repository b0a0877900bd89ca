use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// The root of unity `ζ_N^k = exp(2πi·k/N)`, kept with `k/N` in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RootOfUnity {
    k: u64,
    n: u64,
}

impl RootOfUnity {
    pub fn new(k: i64, n: u64) -> Self {
        assert!(n > 0, "modulus must be positive");
        let k = k.rem_euclid(n as i64) as u64;
        let g = k.gcd(&n);
        RootOfUnity { k: k / g, n: n / g }
    }

    pub fn one() -> Self {
        RootOfUnity { k: 0, n: 1 }
    }

    pub fn minus_one() -> Self {
        RootOfUnity { k: 1, n: 2 }
    }

    /// Numerator of the reduced fraction.
    pub fn numerator(&self) -> u64 {
        self.k
    }

    /// Multiplicative order, the reduced denominator.
    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn is_one(&self) -> bool {
        self.n == 1
    }

    pub fn is_minus_one(&self) -> bool {
        self.n == 2
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let l = self.n.lcm(&other.n);
        RootOfUnity::new((self.k * (l / self.n) + other.k * (l / other.n)) as i64, l)
    }

    pub fn div(&self, other: &RootOfUnity) -> RootOfUnity {
        self.mul(&other.inverse())
    }

    pub fn inverse(&self) -> RootOfUnity {
        RootOfUnity::new(-(self.k as i64), self.n)
    }

    pub fn pow(&self, e: i64) -> RootOfUnity {
        let e = e.rem_euclid(self.n as i64) as u128;
        RootOfUnity::new(((self.k as u128 * e) % self.n as u128) as i64, self.n)
    }

    /// Exponent `m` with `self = ζ_L^m`; requires `order | L`.
    pub fn exponent_in(&self, l: u64) -> u64 {
        assert!(l.is_multiple_of(self.n), "order {} does not divide {l}", self.n);
        self.k * (l / self.n)
    }

    /// All `N`-th roots of unity `ζ_N^0, …, ζ_N^{N-1}`.
    pub fn all_of_order_dividing(n: u64) -> Vec<RootOfUnity> {
        (0..n).map(|k| RootOfUnity::new(k as i64, n)).collect()
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta({})^{}", self.n, self.k)
    }
}

impl FromStr for RootOfUnity {
    type Err = Error;

    /// Parses `zeta(N)^k`, `1` or `-1`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "1" => return Ok(RootOfUnity::one()),
            "-1" => return Ok(RootOfUnity::minus_one()),
            _ => {}
        }
        let bad = || Error::InvalidArgument(format!("root of unity `{s}`"));
        let body = t.strip_prefix("zeta(").ok_or_else(bad)?;
        let (n, k) = body.split_once(")^").ok_or_else(bad)?;
        let n: u64 = n.trim().parse().map_err(|_| bad())?;
        let k: i64 = k.trim().parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        Ok(RootOfUnity::new(k, n))
    }
}
