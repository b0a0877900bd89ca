//! Group-theoretic hypotheses used by the screening rules: reality,
//! absolute reality, class splitting in alternating groups and powers of the
//! base point lying in its own class.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, CycleType, FiniteGroup, GroupElement, Perm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealityReport {
    pub is_real: bool,
    pub is_absolutely_real: bool,
    /// First `g` in enumeration order with `g s g^{-1} = s^{-1}`.
    pub inverting_witness: Option<GroupElement>,
    /// First `g` with `g^2 = e` and `g s g^{-1} = s^{-1}`.
    pub involution_witness: Option<GroupElement>,
}

/// Brute-force reality test over the whole group.
pub fn reality_report(group: &FiniteGroup, s: &GroupElement) -> Result<RealityReport> {
    group.check_member(s)?;
    let inv = s.inverse();
    let inverting_witness = group
        .elements()
        .iter()
        .find(|g| g.conjugate(s) == inv)
        .cloned();
    let involution_witness = match inverting_witness {
        None => None,
        Some(_) => group
            .elements()
            .iter()
            .find(|g| g.mul(g).is_identity() && g.conjugate(s) == inv)
            .cloned(),
    };
    Ok(RealityReport {
        is_real: inverting_witness.is_some(),
        is_absolutely_real: involution_witness.is_some(),
        inverting_witness,
        involution_witness,
    })
}

/// The involution `(1, j−1)(2, j−2)…` of `{1..j}` inverting the cycle
/// `(1 2 … j)`; it fixes `j` (and `k` when `j = 2k`).
pub fn an_inverting_involution(j: usize) -> Result<Perm> {
    if j < 2 {
        return Err(Error::InvalidArgument(format!("cycle length {j} < 2")));
    }
    let cycles: Vec<Vec<usize>> = (1..j)
        .filter(|&i| i < j - i)
        .map(|i| vec![i, j - i])
        .collect();
    Perm::from_cycles(j, &cycles)
}

/// Sign exponent of the standard inverting involution of a permutation of
/// the given type: the number of cycles of length `4h` (`h ≥ 1`) or
/// `4h + 3` (`h ≥ 0`).
pub fn inverting_involution_sign_exponent(t: &CycleType) -> usize {
    (1..=t.degree())
        .filter(|&j| (j % 4 == 0) || (j % 4 == 3))
        .map(|j| t.m(j))
        .sum()
}

/// Sufficient criterion for an even permutation to be inverted by an even
/// involution: two fixed points, or an even sign exponent.
pub fn an_absolutely_real_by_type(t: &CycleType) -> bool {
    t.m(1) >= 2 || inverting_involution_sign_exponent(t).is_multiple_of(2)
}

/// Whether the `S_n`-class of an even permutation of this type splits into
/// two `A_n`-classes: all cycle lengths (fixed points included) are odd and
/// pairwise distinct.
pub fn an_class_splits(t: &CycleType) -> Result<bool> {
    if !t.is_even() {
        return Err(Error::OddParity(t.to_string()));
    }
    if t.degree() < 2 {
        return Ok(false);
    }
    Ok((1..=t.degree()).all(|j| {
        let m = t.m(j);
        if j % 2 == 0 {
            m == 0
        } else {
            m <= 1
        }
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerWitness {
    pub j: u64,
    /// `σ s σ^{-1} = s^j`.
    pub sigma: GroupElement,
    /// `s`, `s^j`, `s^{j²}` pairwise distinct.
    pub distinct3: bool,
    /// `s^{j²} = s`.
    pub square_returns: bool,
}

impl PowerWitness {
    pub fn sigma_order(&self) -> u64 {
        self.sigma.order()
    }
}

/// One witness per exponent `2 ≤ j < |s|` coprime to `|s|` with
/// `s^j ≠ s` and `s^j` in the class.
pub fn power_witnesses(group: &FiniteGroup, class: &ConjugacyClass) -> Vec<PowerWitness> {
    let s = class.base();
    let order = s.order();
    let mut out = Vec::new();
    for j in 2..order {
        if j.gcd(&order) != 1 {
            continue;
        }
        let p = s.pow(j as i64);
        if &p == s || !class.contains(&p) {
            continue;
        }
        let Some(sigma) = group.elements().iter().find(|g| g.conjugate(s) == p).cloned() else {
            continue;
        };
        let sq = s.pow(((j * j) % order) as i64);
        out.push(PowerWitness {
            j,
            sigma,
            distinct3: &sq != s && sq != p,
            square_returns: &sq == s,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_cycle_in_a5_is_absolutely_real() {
        let a5 = FiniteGroup::alternating(5).unwrap();
        let s = a5.parse_element("(1 2 3 4 5)").unwrap();
        let r = reality_report(&a5, &s).unwrap();
        assert!(r.is_real && r.is_absolutely_real);
        let w = r.involution_witness.unwrap();
        assert_eq!(w.conjugate(&s), s.inverse());
        assert!(w.mul(&w).is_identity());
        let expected = a5.parse_element("(2 5)(3 4)").unwrap();
        assert_eq!(expected.conjugate(&s), s.inverse());
    }

    #[test]
    fn three_cycle_in_a4_is_not_real() {
        let a4 = FiniteGroup::alternating(4).unwrap();
        let s = a4.parse_element("(1 2 3)").unwrap();
        let r = reality_report(&a4, &s).unwrap();
        assert!(!r.is_real && !r.is_absolutely_real);
        assert!(r.inverting_witness.is_none());
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let r = reality_report(&z3, &GroupElement::cyclic(3, 1)).unwrap();
        assert!(!r.is_real);
    }

    #[test]
    fn inverting_involutions() {
        let g4 = an_inverting_involution(4).unwrap();
        assert_eq!(g4.to_string(), "(1 3)");
        assert_eq!(g4.sign(), -1);
        let tau = Perm::parse(4, "(1 2 3 4)").unwrap();
        assert_eq!(g4.compose(&tau).compose(&g4), Perm::parse(4, "(1 4 3 2)").unwrap());
        let g5 = an_inverting_involution(5).unwrap();
        assert_eq!(g5.to_string(), "(1 4)(2 3)");
        assert_eq!(g5.sign(), 1);
        assert!(an_inverting_involution(2).unwrap().is_identity());
        assert!(an_inverting_involution(1).is_err());
    }

    #[test]
    fn splitting_examples() {
        assert!(an_class_splits(&CycleType::from_lengths(&[1, 3])).unwrap());
        assert!(!an_class_splits(&CycleType::from_lengths(&[2, 2])).unwrap());
        assert!(an_class_splits(&CycleType::from_lengths(&[1, 5])).unwrap());
        assert!(an_class_splits(&CycleType::from_lengths(&[2])).is_err());
    }

    #[test]
    fn power_witness_examples() {
        let a5 = FiniteGroup::alternating(5).unwrap();
        let s = a5.parse_element("(1 2 3 4 5)").unwrap();
        let class = a5.conjugacy_class(&s).unwrap();
        let ws = power_witnesses(&a5, &class);
        let w4 = ws.iter().find(|w| w.j == 4).unwrap();
        assert!(w4.square_returns && !w4.distinct3);
        assert_eq!(w4.sigma.conjugate(&s), s.pow(4));

        let a4 = FiniteGroup::alternating(4).unwrap();
        let s = a4.parse_element("(1 2 3)").unwrap();
        assert!(power_witnesses(&a4, &a4.conjugacy_class(&s).unwrap()).is_empty());
    }

    #[test]
    fn seven_cycle_has_a_squaring_witness() {
        let a7 = FiniteGroup::alternating(7).unwrap();
        let s = a7.parse_element("(1 2 3 4 5 6 7)").unwrap();
        let ws = power_witnesses(&a7, &a7.conjugacy_class(&s).unwrap());
        let w2 = ws.iter().find(|w| w.j == 2).unwrap();
        assert!(w2.distinct3);
        assert_eq!(w2.sigma.conjugate(&s), s.pow(2));
        // |s| divides j^{|σ|} - 1
        assert_eq!((2u64.pow(w2.sigma_order() as u32) - 1) % 7, 0);
    }
}
