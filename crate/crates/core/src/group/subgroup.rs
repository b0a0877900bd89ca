use std::collections::{HashMap, HashSet};
use std::fmt;

use super::element::GroupElement;
use crate::error::{Error, Result};

/// Best-effort isomorphism type of a subgroup.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum StructureLabel {
    /// `Z_n`; `Z_1` for the trivial group.
    Cyclic(u64),
    /// Non-cyclic abelian group, invariants in the order the factors were split off.
    Abelian(Vec<u64>),
    /// Dihedral group of order `2n`.
    Dihedral(u64),
    Unknown(usize),
}

impl fmt::Display for StructureLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureLabel::Cyclic(n) => write!(f, "Z{n}"),
            StructureLabel::Abelian(fs) => {
                let parts: Vec<String> = fs.iter().map(|k| format!("Z{k}")).collect();
                write!(f, "{}", parts.join("x"))
            }
            StructureLabel::Dihedral(n) => write!(f, "D{n}"),
            StructureLabel::Unknown(order) => write!(f, "unknown(order={order})"),
        }
    }
}

/// A subgroup given by its full element list, in the ambient enumeration order.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    label: StructureLabel,
    /// Cyclic factors for abelian groups, `[a, b]` for dihedral groups.
    generators: Vec<GroupElement>,
    generator_orders: Vec<u64>,
    abelian: bool,
}

impl Subgroup {
    /// Wraps a closed element list. `preferred` is split off first when the
    /// group is abelian and non-cyclic (the base point of a centralizer).
    pub fn from_elements(
        elements: Vec<GroupElement>,
        preferred: Option<&GroupElement>,
    ) -> Result<Self> {
        let index: HashMap<GroupElement, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        if elements.is_empty() || index.len() != elements.len() {
            return Err(Error::InvalidArgument("subgroup element list".into()));
        }
        let id = elements[0].identity_like();
        if !index.contains_key(&id) {
            return Err(Error::InvalidArgument("subgroup lacks the identity".into()));
        }
        for g in &elements {
            if !index.contains_key(&g.inverse()) {
                return Err(Error::InvalidArgument(format!("not closed under inverse at {g}")));
            }
            for h in &elements {
                if !index.contains_key(&g.mul(h)) {
                    return Err(Error::InvalidArgument(format!(
                        "not closed under multiplication at {g}·{h}"
                    )));
                }
            }
        }
        Ok(Self::from_closed(elements, preferred))
    }

    /// Wraps an element list already known to be a subgroup.
    pub(crate) fn from_closed(elements: Vec<GroupElement>, preferred: Option<&GroupElement>) -> Self {
        let index: HashMap<GroupElement, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        let abelian = elements
            .iter()
            .all(|g| elements.iter().all(|h| g.commutes_with(h)));
        let mut sub = Subgroup {
            elements,
            index,
            label: StructureLabel::Unknown(0),
            generators: Vec::new(),
            generator_orders: Vec::new(),
            abelian,
        };
        sub.classify(preferred);
        sub
    }

    fn classify(&mut self, preferred: Option<&GroupElement>) {
        let order = self.order();
        if self.abelian {
            if let Some(factors) = cyclic_decomposition(&self.elements, preferred) {
                self.label = match factors.len() {
                    0 => StructureLabel::Cyclic(1),
                    1 => StructureLabel::Cyclic(factors[0].1),
                    _ => StructureLabel::Abelian(factors.iter().map(|f| f.1).collect()),
                };
                self.generator_orders = factors.iter().map(|f| f.1).collect();
                self.generators = factors.into_iter().map(|f| f.0).collect();
                return;
            }
        } else if let Some((a, b)) = dihedral_generators(&self.elements) {
            self.label = StructureLabel::Dihedral(order as u64 / 2);
            self.generator_orders = vec![2, order as u64 / 2];
            self.generators = vec![a, b];
            return;
        }
        self.label = StructureLabel::Unknown(order);
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn position(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index.contains_key(g)
    }

    pub fn label(&self) -> &StructureLabel {
        &self.label
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn generator_orders(&self) -> &[u64] {
        &self.generator_orders
    }

    pub fn identity(&self) -> GroupElement {
        self.elements[0].identity_like()
    }

    /// Same element set as `other`.
    pub fn same_elements(&self, other: &Subgroup) -> bool {
        self.order() == other.order() && self.elements.iter().all(|g| other.contains(g))
    }

    /// `g H g^{-1} = H`.
    pub fn normalized_by(&self, g: &GroupElement) -> bool {
        self.elements.iter().all(|h| self.contains(&g.conjugate(h)))
    }

    /// The exponent (lcm of element orders).
    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .fold(1, |acc, g| num_integer::lcm(acc, g.order()))
    }
}

/// Splits an abelian group into cyclic factors `(generator, order)`.
///
/// Greedy: repeatedly take an element of maximal order whose cyclic group
/// meets the part built so far trivially. A cyclic group keeps its
/// enumeration-first generator; otherwise `preferred` leads among elements of
/// maximal order. Returns `None` if the greedy split does not cover the group.
pub fn cyclic_decomposition(
    elements: &[GroupElement],
    preferred: Option<&GroupElement>,
) -> Option<Vec<(GroupElement, u64)>> {
    let n = elements.len() as u64;
    let id = elements[0].identity_like();
    if let Some(g) = elements.iter().find(|g| g.order() == n) {
        return Some(if n == 1 { vec![] } else { vec![(g.clone(), n)] });
    }
    let mut candidates: Vec<&GroupElement> = Vec::with_capacity(elements.len());
    if let Some(p) = preferred {
        if elements.contains(p) {
            candidates.push(p);
        }
    }
    candidates.extend(elements.iter().filter(|g| Some(*g) != preferred));

    let mut built: HashSet<GroupElement> = HashSet::from([id]);
    let mut factors = Vec::new();
    while (built.len() as u64) < n {
        let mut best: Option<(&GroupElement, u64)> = None;
        for g in &candidates {
            let k = g.order();
            if best.is_some_and(|(_, bk)| bk >= k) {
                continue;
            }
            let mut p = (*g).clone();
            let meets_trivially = (1..k).all(|_| {
                let ok = !built.contains(&p);
                p = p.mul(g);
                ok
            });
            if meets_trivially {
                best = Some((g, k));
            }
        }
        let (g, k) = best?;
        let mut next = HashSet::with_capacity(built.len() * k as usize);
        for b in &built {
            let mut p = b.clone();
            for _ in 0..k {
                next.insert(p.clone());
                p = p.mul(g);
            }
        }
        if next.len() != built.len() * k as usize {
            return None;
        }
        built = next;
        factors.push((g.clone(), k));
    }
    Some(factors)
}

/// Finds `(a, b)` with `|a| = 2`, `|b| = |H|/2`, `a ∉ ⟨b⟩`, `aba = b^{-1}`,
/// first matches in enumeration order.
fn dihedral_generators(elements: &[GroupElement]) -> Option<(GroupElement, GroupElement)> {
    let order = elements.len() as u64;
    if order < 6 || !order.is_multiple_of(2) {
        return None;
    }
    let k = order / 2;
    for b in elements.iter().filter(|g| g.order() == k) {
        let cyclic: HashSet<GroupElement> = (0..k as i64).map(|e| b.pow(e)).collect();
        let b_inv = b.inverse();
        if let Some(a) = elements
            .iter()
            .find(|a| a.order() == 2 && !cyclic.contains(a) && a.mul(b).mul(a) == b_inv)
        {
            return Some((a.clone(), b.clone()));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    #[test]
    fn whole_dihedral_group_is_labeled() {
        let d6 = FiniteGroup::dihedral(6).unwrap();
        let sub = Subgroup::from_elements(d6.elements().to_vec(), None).unwrap();
        assert_eq!(sub.label(), &StructureLabel::Dihedral(6));
        assert_eq!(sub.generators()[0], GroupElement::dihedral(6, 1, 0));
        assert_eq!(sub.generators()[1], GroupElement::dihedral(6, 0, 1));
    }

    #[test]
    fn abelian_products_split() {
        let g = crate::group::parse_group("(Zn:2)x(Zn:4)").unwrap();
        let sub = Subgroup::from_elements(g.elements().to_vec(), None).unwrap();
        assert_eq!(sub.label().to_string(), "Z4xZ2");
        let g = crate::group::parse_group("(Zn:3)x(Zn:3)").unwrap();
        let sub = Subgroup::from_elements(g.elements().to_vec(), None).unwrap();
        assert_eq!(sub.label().to_string(), "Z3xZ3");
        let g = crate::group::parse_group("(Zn:2)x(Zn:3)").unwrap();
        let sub = Subgroup::from_elements(g.elements().to_vec(), None).unwrap();
        assert_eq!(sub.label().to_string(), "Z6");
    }

    #[test]
    fn nonclosed_sets_are_rejected() {
        let d = FiniteGroup::dihedral(4).unwrap();
        let elems = vec![d.identity().clone(), GroupElement::dihedral(4, 0, 1)];
        assert!(Subgroup::from_elements(elems, None).is_err());
    }

    #[test]
    fn symmetric_group_s4_is_unknown() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let sub = Subgroup::from_elements(s4.elements().to_vec(), None).unwrap();
        assert_eq!(sub.label().to_string(), "unknown(order=24)");
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let sub = Subgroup::from_elements(s3.elements().to_vec(), None).unwrap();
        assert_eq!(sub.label().to_string(), "D3");
    }
}
