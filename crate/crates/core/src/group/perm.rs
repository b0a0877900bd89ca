//! Permutations of `{1..n}` stored as image arrays.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1..n}`, stored 0-based as `images[i] = p(i)`.
///
/// Products compose right to left: `(p * q)(i) = p(q(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::MalformedElement(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of degree `n` from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &point) in cycle.iter().enumerate() {
                if point == 0 || point > n || used[point - 1] {
                    return Err(Error::MalformedElement(format!("{cycles:?}")));
                }
                used[point - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                images[point - 1] = (next - 1) as u8;
            }
        }
        Ok(Perm { images })
    }

    /// Parses disjoint-cycle notation such as `(1 2)(3 4 5 6)`.
    ///
    /// `()`, `e`, `id` and the empty string denote the identity. Commas are
    /// accepted as separators inside a cycle.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "e" || t == "id" || t == "()" {
            return Ok(Perm::identity(n));
        }
        let bad = || Error::MalformedElement(text.to_string());
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let cycle: Vec<usize> = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = &body[close + 1..];
        }
        Perm::from_cycles(n, &cycles).map_err(|_| bad())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// All cycles (1-based), fixed points included, each starting at its
    /// smallest point, ordered by that point.
    pub fn all_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.apply(i);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Nontrivial cycles only.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.all_cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut m = vec![0usize; self.degree()];
        for c in self.all_cycles() {
            m[c.len() - 1] += 1;
        }
        CycleType { multiplicities: m }
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i32 {
        self.cycle_type().sign()
    }

    pub fn order(&self) -> u64 {
        self.all_cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Cycle type `(1^{m_1}, 2^{m_2}, …, n^{m_n})` of a permutation of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycleType {
    /// `multiplicities[j - 1] = m_j`.
    multiplicities: Vec<usize>,
}

impl CycleType {
    /// Builds a type from `m_1, m_2, …`; the degree is `Σ j·m_j`.
    pub fn new(multiplicities: Vec<usize>) -> Self {
        let mut m = multiplicities;
        let n: usize = m.iter().enumerate().map(|(i, k)| (i + 1) * k).sum();
        // entries past index n are necessarily zero
        m.resize(n, 0);
        CycleType { multiplicities: m }
    }

    /// Builds a type from a list of cycle lengths (fixed points as `1`).
    pub fn from_lengths(lengths: &[usize]) -> Self {
        let n: usize = lengths.iter().sum();
        let mut m = vec![0; n];
        for &l in lengths {
            m[l - 1] += 1;
        }
        CycleType { multiplicities: m }
    }

    pub fn degree(&self) -> usize {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(i, k)| (i + 1) * k)
            .sum()
    }

    /// `m_j` for `j ≥ 1`; zero beyond the degree.
    pub fn m(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.multiplicities.get(j - 1).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn is_even(&self) -> bool {
        let even_cycles: usize = (2..=self.multiplicities.len())
            .step_by(2)
            .map(|j| self.m(j))
            .sum();
        even_cycles.is_multiple_of(2)
    }

    pub fn sign(&self) -> i32 {
        if self.is_even() {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths in ascending order, fixed points included.
    pub fn lengths(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for j in 1..=self.multiplicities.len() {
            out.extend(std::iter::repeat_n(j, self.m(j)));
        }
        out
    }

    /// The permutation with consecutive cycles of ascending length, fixed
    /// points last: type `(2,4)` gives `(1 2)(3 4 5 6)`.
    pub fn standard_representative(&self) -> Perm {
        let n = self.degree();
        let mut cycles = Vec::new();
        let mut next = 1;
        for len in self.lengths().into_iter().filter(|&l| l > 1) {
            cycles.push((next..next + len).collect::<Vec<_>>());
            next += len;
        }
        Perm::from_cycles(n, &cycles).expect("consecutive cycles are disjoint")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (1..=self.multiplicities.len())
            .filter(|&j| self.m(j) > 0)
            .map(|j| match self.m(j) {
                1 => j.to_string(),
                k => format!("{j}^{k}"),
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_round_trip() {
        let p = Perm::parse(6, "(1 2)(3 4 5 6)").unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4 5 6)");
        assert_eq!(p.order(), 4);
        assert_eq!(Perm::parse(4, "()").unwrap(), Perm::identity(4));
        assert_eq!(Perm::parse(4, "(3,1)").unwrap().to_string(), "(1 3)");
    }

    #[test]
    fn rejects_overlapping_cycles() {
        assert!(Perm::parse(4, "(1 2)(2 3)").is_err());
        assert!(Perm::parse(3, "(1 4)").is_err());
        assert!(Perm::parse(3, "1 2").is_err());
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = Perm::parse(6, "(3 4)(5 6)").unwrap();
        let b = Perm::parse(6, "(1 3 2 4)(5 6)").unwrap();
        assert_eq!(a.compose(&b).to_string(), "(1 4)(2 3)");
    }

    #[test]
    fn cycle_types() {
        let t = Perm::parse(4, "(1 2)(3 4)").unwrap().cycle_type();
        assert_eq!(t.to_string(), "(2^2)");
        assert!(t.is_even());
        let t = Perm::parse(6, "(1 2)(3 4 5 6)").unwrap().cycle_type();
        assert_eq!(t.to_string(), "(2,4)");
        assert!(t.is_even());
        assert_eq!(Perm::identity(5).cycle_type().to_string(), "(1^5)");
        assert_eq!(Perm::parse(3, "(1 2)").unwrap().sign(), -1);
    }

    #[test]
    fn standard_representatives() {
        let t = CycleType::from_lengths(&[4, 2]);
        assert_eq!(t.standard_representative().to_string(), "(1 2)(3 4 5 6)");
        let t = CycleType::from_lengths(&[3, 1]);
        assert_eq!(t.standard_representative().to_string(), "(1 2 3)");
    }
}
