use std::collections::{HashMap, VecDeque};

use super::element::GroupElement;
use super::finite::FiniteGroup;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// A conjugacy class with a fixed numeration `t_1 = s, …, t_M` and coset
/// representatives `g_1 = e, …, g_M` such that `g_i s g_i^{-1} = t_i`.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    elements: Vec<GroupElement>,
    reps: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
}

impl ConjugacyClass {
    /// Orbit of `s` by a breadth-first sweep over the group generators, in
    /// their fixed order; the first representative found for a point is kept.
    fn sweep(group: &FiniteGroup, seeds: Vec<(GroupElement, GroupElement)>) -> Self {
        let mut elements = Vec::new();
        let mut reps = Vec::new();
        let mut index = HashMap::new();
        let mut queue = VecDeque::new();
        for (t, g) in seeds {
            if index.contains_key(&t) {
                continue;
            }
            index.insert(t.clone(), elements.len());
            elements.push(t.clone());
            reps.push(g.clone());
            queue.push_back(elements.len() - 1);
        }
        while let Some(i) = queue.pop_front() {
            for r in group.generators() {
                let t = r.conjugate(&elements[i]);
                if index.contains_key(&t) {
                    continue;
                }
                let g = r.mul(&reps[i]);
                index.insert(t.clone(), elements.len());
                elements.push(t);
                reps.push(g);
                queue.push_back(elements.len() - 1);
            }
        }
        ConjugacyClass {
            elements,
            reps,
            index,
        }
    }

    /// Builds the class of `s` whose numeration starts with the given
    /// `(t_i, g_i)` pairs (after `t_1 = s, g_1 = e`); the rest is swept.
    pub fn with_numeration(
        group: &FiniteGroup,
        s: &GroupElement,
        prefix: &[(GroupElement, GroupElement)],
    ) -> Result<Self> {
        group.check_member(s)?;
        let mut seeds = vec![(s.clone(), group.identity().clone())];
        for (t, g) in prefix {
            group.check_member(t)?;
            group.check_member(g)?;
            if &g.conjugate(s) != t {
                return Err(Error::InvalidArgument(format!("{g} does not conjugate {s} to {t}")));
            }
            if seeds.iter().any(|(u, _)| u == t) {
                return Err(Error::InvalidArgument(format!("{t} listed twice")));
            }
            seeds.push((t.clone(), g.clone()));
        }
        Ok(Self::sweep(group, seeds))
    }

    pub fn base(&self) -> &GroupElement {
        &self.elements[0]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    /// Coset representatives `g_i`.
    pub fn representatives(&self) -> &[GroupElement] {
        &self.reps
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn rep(&self, i: usize) -> &GroupElement {
        &self.reps[i]
    }

    pub fn position(&self, t: &GroupElement) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn contains(&self, t: &GroupElement) -> bool {
        self.index.contains_key(t)
    }

    /// `g_i s g_i^{-1} = t_i` for every `i`.
    pub fn numeration_is_consistent(&self) -> bool {
        let s = self.base();
        self.reps
            .iter()
            .zip(&self.elements)
            .all(|(g, t)| &g.conjugate(s) == t)
    }

    /// All elements pairwise commute (the class is an abelian rack).
    pub fn is_commutative(&self) -> bool {
        self.elements
            .iter()
            .enumerate()
            .all(|(i, a)| self.elements[i + 1..].iter().all(|b| a.commutes_with(b)))
    }
}

impl FiniteGroup {
    pub fn conjugacy_class(&self, s: &GroupElement) -> Result<ConjugacyClass> {
        self.check_member(s)?;
        Ok(ConjugacyClass::sweep(
            self,
            vec![(s.clone(), self.identity().clone())],
        ))
    }

    /// All conjugacy classes. Permutation groups use the representative
    /// with consecutive ascending cycles (`(1 2)(3 4 5 6)`) or its conjugate
    /// by `(1 2)` when the class splits; other groups use the first element
    /// in enumeration order. Permutation classes are sorted by element order, the class holding the
    /// standard representative first.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let mut assigned = vec![false; self.order()];
        let mut classes = Vec::new();
        for (i, x) in self.elements().iter().enumerate() {
            if assigned[i] {
                continue;
            }
            let mut class = self.conjugacy_class(x).expect("member");
            if let Some(rep) = self.preferred_representative(&class) {
                if &rep != x {
                    class = self.conjugacy_class(&rep).expect("member");
                }
            }
            for t in class.elements() {
                assigned[self.position(t).expect("member")] = true;
            }
            classes.push(class);
        }
        if self.kind().is_permutation_group() {
            classes.sort_by_key(|c| {
                let p = c.base().as_perm().expect("permutation");
                (c.base().order(), p != &p.cycle_type().standard_representative())
            });
        }
        classes
    }

    fn preferred_representative(&self, class: &ConjugacyClass) -> Option<GroupElement> {
        let n = self.perm_degree()?;
        let std = class.base().as_perm()?.cycle_type().standard_representative();
        let std = GroupElement::Perm(std);
        if class.contains(&std) {
            return Some(std);
        }
        if n >= 2 {
            let swap = self.parse_element_unchecked("(1 2)");
            let alt = swap.conjugate(&std);
            if class.contains(&alt) {
                return Some(alt);
            }
        }
        None
    }

    fn parse_element_unchecked(&self, text: &str) -> GroupElement {
        let n = self.perm_degree().expect("permutation group");
        GroupElement::Perm(super::perm::Perm::parse(n, text).expect("valid cycle"))
    }

    /// The centralizer `G^s`, labeled with its structure when recognized.
    pub fn centralizer(&self, s: &GroupElement) -> Result<Subgroup> {
        self.check_member(s)?;
        let elements: Vec<GroupElement> = self
            .elements()
            .iter()
            .filter(|g| g.commutes_with(s))
            .cloned()
            .collect();
        Ok(Subgroup::from_closed(elements, Some(s)))
    }

    /// The whole group as a subgroup of itself.
    pub fn as_subgroup(&self) -> Subgroup {
        Subgroup::from_closed(self.elements().to_vec(), None)
    }
}
