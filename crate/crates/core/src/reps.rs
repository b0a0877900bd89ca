//! Irreducible representations of the centralizers met in practice:
//! characters of abelian groups and the irreps of dihedral groups.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::cyclo::{common_eigenspaces, CycloMatrix, CycloNumber, RootOfUnity};
use crate::error::{Error, Result};
use crate::group::{GroupElement, StructureLabel, Subgroup};

/// A representation of a subgroup, given by one matrix per element.
#[derive(Clone, Debug)]
pub struct Irrep {
    domain: Arc<Subgroup>,
    degree: usize,
    label: String,
    images: Vec<CycloMatrix>,
    /// Values of a one-dimensional representation.
    values: Option<Vec<RootOfUnity>>,
}

impl Irrep {
    /// A character given by its value at every element (domain order).
    pub fn from_character(domain: Arc<Subgroup>, label: String, values: Vec<RootOfUnity>) -> Result<Self> {
        assert_eq!(values.len(), domain.order());
        let elems = domain.elements();
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let k = domain.position(&a.mul(b)).expect("closed");
                if values[i].mul(&values[j]) != values[k] {
                    return Err(Error::NotMultiplicative(format!("{label} at {a}·{b}")));
                }
            }
        }
        let images = values.iter().map(CycloMatrix::from_root).collect();
        Ok(Irrep {
            domain,
            degree: 1,
            label,
            images,
            values: Some(values),
        })
    }

    /// Extends images of generators multiplicatively, then checks the result
    /// is a homomorphism on every pair of elements.
    pub fn from_generator_images(
        domain: Arc<Subgroup>,
        label: String,
        generators: &[GroupElement],
        gen_images: &[CycloMatrix],
    ) -> Result<Self> {
        assert_eq!(generators.len(), gen_images.len());
        let degree = gen_images.first().map_or(1, |m| m.rows());
        let n = gen_images.iter().fold(1, |acc, m| acc.lcm(&m.modulus()));
        let mut images: Vec<Option<CycloMatrix>> = vec![None; domain.order()];
        let id = domain.identity();
        let start = domain.position(&id).expect("identity");
        images[start] = Some(CycloMatrix::identity(degree, n));
        let mut queue = VecDeque::from([id]);
        while let Some(h) = queue.pop_front() {
            let hm = images[domain.position(&h).unwrap()].clone().unwrap();
            for (g, gm) in generators.iter().zip(gen_images) {
                let p = h.mul(g);
                let pos = domain
                    .position(&p)
                    .ok_or_else(|| Error::InvalidArgument(format!("generator {g} outside the domain")))?;
                if images[pos].is_none() {
                    images[pos] = Some(hm.mul(gm).lift(n));
                    queue.push_back(p);
                }
            }
        }
        let images: Vec<CycloMatrix> = images
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidArgument("generators do not generate the domain".into()))?;
        let elems = domain.elements();
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let k = domain.position(&a.mul(b)).expect("closed");
                if images[i].mul(&images[j]) != images[k] {
                    return Err(Error::NotMultiplicative(format!("{label} at {a}·{b}")));
                }
            }
        }
        let values = (degree == 1)
            .then(|| images.iter().map(|m| m.get(0, 0).as_root_of_unity()).collect::<Option<Vec<_>>>())
            .flatten();
        Ok(Irrep {
            domain,
            degree,
            label,
            images,
            values,
        })
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn domain_arc(&self) -> &Arc<Subgroup> {
        &self.domain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn modulus(&self) -> usize {
        self.images.iter().fold(1, |acc, m| acc.lcm(&m.modulus()))
    }

    pub fn image(&self, g: &GroupElement) -> Result<&CycloMatrix> {
        let p = self
            .domain
            .position(g)
            .ok_or_else(|| Error::ElementNotInGroup(g.to_string()))?;
        Ok(&self.images[p])
    }

    pub fn image_at(&self, pos: usize) -> &CycloMatrix {
        &self.images[pos]
    }

    /// Values of a one-dimensional representation, domain order.
    pub fn character_values(&self) -> Option<&[RootOfUnity]> {
        self.values.as_deref()
    }

    /// Trace of `ρ(g)`.
    pub fn character(&self, g: &GroupElement) -> Result<CycloNumber> {
        Ok(self.image(g)?.trace())
    }

    fn characters(&self) -> Vec<CycloNumber> {
        self.images.iter().map(|m| m.trace()).collect()
    }

    /// `Σ_g |χ(g)|² = |H|`.
    pub fn is_irreducible(&self) -> bool {
        let total = self
            .characters()
            .iter()
            .fold(CycloNumber::zero(1), |acc, c| &acc + &(c * &c.conj()));
        total == CycloNumber::from_integer(1, self.domain.order() as i64)
    }

    /// Equal characters, hence isomorphic representations.
    pub fn same_character(&self, other: &Irrep) -> bool {
        self.domain.same_elements(&other.domain)
            && self.domain.elements().iter().all(|g| {
                self.character(g).ok() == other.character(g).ok()
            })
    }

    /// Restriction to a subgroup of the domain.
    pub fn restrict(&self, sub: &Subgroup) -> Result<Irrep> {
        let mut images = Vec::with_capacity(sub.order());
        for g in sub.elements() {
            images.push(self.image(g)?.clone());
        }
        let values = (self.degree == 1).then(|| {
            sub.elements()
                .iter()
                .map(|g| self.values.as_ref().unwrap()[self.domain.position(g).unwrap()])
                .collect()
        });
        Ok(Irrep {
            domain: Arc::new(sub.clone()),
            degree: self.degree,
            label: format!("Res({})", self.label),
            images,
            values,
        })
    }
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

fn sign_label(l: u64) -> &'static str {
    if l == 0 {
        "eps"
    } else {
        "sgn"
    }
}

/// Coordinates of every element in the cyclic decomposition of an abelian
/// subgroup, domain order.
fn abelian_coordinates(h: &Subgroup) -> Vec<Vec<u64>> {
    let gens = h.generators();
    let orders = h.generator_orders();
    let mut coords: Vec<Option<Vec<u64>>> = vec![None; h.order()];
    let mut e = vec![0u64; gens.len()];
    loop {
        let mut g = h.identity();
        for (gen, &k) in gens.iter().zip(&e) {
            g = g.mul(&gen.pow(k as i64));
        }
        coords[h.position(&g).expect("closed")] = Some(e.clone());
        // odometer over the exponent box
        let mut i = 0;
        loop {
            if i == e.len() {
                return coords.into_iter().map(|c| c.expect("decomposition covers the group")).collect();
            }
            e[i] += 1;
            if e[i] < orders[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

/// All characters of an abelian group, indexed by `(l_1, …)` in
/// lexicographic order with `χ_l(g_i) = ζ_{n_i}^{l_i}` on the cyclic factors.
pub fn abelian_irreps(h: &Subgroup) -> Result<Vec<Irrep>> {
    if !h.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let domain = Arc::new(h.clone());
    let orders = h.generator_orders().to_vec();
    let coords = abelian_coordinates(h);
    let mut out = Vec::with_capacity(h.order());
    let mut l = vec![0u64; orders.len()];
    loop {
        let values: Vec<RootOfUnity> = coords
            .iter()
            .map(|c| {
                c.iter()
                    .zip(&l)
                    .zip(&orders)
                    .fold(RootOfUnity::one(), |acc, ((&e, &li), &n)| {
                        acc.mul(&RootOfUnity::new((e * li) as i64, n))
                    })
            })
            .collect();
        let label = if orders.is_empty() {
            "eps".to_string()
        } else if orders.iter().all(|&n| n == 2) {
            l.iter().map(|&x| sign_label(x)).collect::<Vec<_>>().join("⊗")
        } else if orders.len() == 1 {
            format!("chi:{}", l[0])
        } else {
            let parts: Vec<String> = l.iter().map(|x| x.to_string()).collect();
            format!("chi:({})", parts.join(","))
        };
        out.push(Irrep::from_character(domain.clone(), label, values)?);
        // lexicographic successor, last index fastest
        let mut i = l.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            l[i] += 1;
            if l[i] < orders[i] {
                break;
            }
            l[i] = 0;
        }
    }
}

/// Irreps of a dihedral subgroup using its designated generators.
pub fn builtin_irreps(h: &Subgroup) -> Result<Vec<Irrep>> {
    match h.label() {
        StructureLabel::Dihedral(_) => {
            let g = h.generators();
            builtin_irreps_with_generators(h, &g[0], &g[1])
        }
        other => Err(Error::UnsupportedCentralizer(other.to_string())),
    }
}

/// Irreps of a dihedral group `⟨a, b | a² = b^k = e, aba = b^{-1}⟩`:
/// the characters `rho:1…` with `(a, b)` values `(1,1)`, `(−1,1)`, then for
/// even `k` also `(1,−1)`, `(−1,−1)`; then the two-dimensional ones with
/// `a ↦ [[0,1],[1,0]]`, `b ↦ diag(ζ_k^l, ζ_k^{-l})`, `0 < l < k/2`.
pub fn builtin_irreps_with_generators(h: &Subgroup, a: &GroupElement, b: &GroupElement) -> Result<Vec<Irrep>> {
    let k = b.order();
    let ok = h.contains(a)
        && h.contains(b)
        && a.order() == 2
        && 2 * k as usize == h.order()
        && a.mul(b).mul(a) == b.inverse()
        && k >= 2;
    if !ok {
        return Err(Error::UnsupportedCentralizer(h.label().to_string()));
    }
    let domain = Arc::new(h.clone());
    let gens = [a.clone(), b.clone()];
    let sign = |x: i64| CycloMatrix::from_root(&RootOfUnity::new(if x < 0 { 1 } else { 0 }, 2));
    let mut chars = vec![(1, 1), (-1, 1)];
    if k.is_multiple_of(2) {
        chars.extend([(1, -1), (-1, -1)]);
    }
    let mut out = Vec::new();
    for (va, vb) in chars {
        let label = format!("rho:{}", out.len() + 1);
        out.push(Irrep::from_generator_images(domain.clone(), label, &gens, &[sign(va), sign(vb)])?);
    }
    let one = CycloNumber::one(1);
    let zero = CycloNumber::zero(1);
    let swap = CycloMatrix::from_rows(vec![vec![zero.clone(), one.clone()], vec![one, zero]]);
    for l in 1..k {
        if 2 * l >= k {
            break;
        }
        let rot = CycloMatrix::diagonal(&[RootOfUnity::new(l as i64, k), RootOfUnity::new(-(l as i64), k)]);
        let label = format!("rho:{}", out.len() + 1);
        out.push(Irrep::from_generator_images(domain.clone(), label, &gens, &[swap.clone(), rot])?);
    }
    Ok(out)
}

/// All irreps of a supported subgroup (abelian or dihedral).
pub fn irreps(h: &Subgroup) -> Result<Vec<Irrep>> {
    if h.is_abelian() {
        abelian_irreps(h)
    } else {
        builtin_irreps(h)
    }
}

fn canonical_rep_name(s: &str) -> String {
    let t: String = s
        .trim()
        .to_lowercase()
        .replace('ε', "eps")
        .replace(['⊗', '*'], "x")
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    let t = t.replace("epsilon", "eps");
    for head in ["chi", "rho"] {
        if let Some(rest) = t.strip_prefix(head) {
            let rest = rest.trim_start_matches([':', '_']);
            return format!("{head}:{rest}");
        }
    }
    t
}

/// Finds an irrep of `h` by name: `chi:<l>`, `chi:(l1,l2)`, `eps`, `sgn`,
/// `sgn⊗eps` (also `sgnxeps`, `sgn⊗ε`), `rho:<k>`.
pub fn parse_rep(h: &Subgroup, spec: &str) -> Result<Irrep> {
    let all = irreps(h)?;
    let want = canonical_rep_name(spec);
    if let Some(r) = all.iter().find(|r| canonical_rep_name(r.label()) == want) {
        return Ok(r.clone());
    }
    // characters of groups of exponent 2 may also be given as chi:<l>
    if let Some(rest) = want.strip_prefix("chi:") {
        let idx: Option<usize> = rest.parse().ok();
        if let (Some(i), true) = (idx, h.is_abelian() && h.generator_orders().len() <= 1) {
            if let Some(r) = all.get(i) {
                return Ok(r.clone());
            }
        }
    }
    Err(Error::UnknownRep(spec.to_string()))
}

/// The scalar by which a central element acts.
pub fn schur_scalar(rho: &Irrep, s: &GroupElement) -> Result<RootOfUnity> {
    let m = rho.image(s)?;
    m.scalar_value()
        .and_then(|c| c.as_root_of_unity())
        .ok_or(Error::NotScalar)
}

/// `h ↦ ρ(g h g^{-1})` for `g` normalizing the domain.
pub fn conjugate_rep(rho: &Irrep, g: &GroupElement) -> Result<Irrep> {
    let h = rho.domain();
    if !h.normalized_by(g) {
        return Err(Error::NotNormalizing(g.to_string()));
    }
    let images: Vec<CycloMatrix> = h
        .elements()
        .iter()
        .map(|x| rho.image(&g.conjugate(x)).cloned())
        .collect::<Result<_>>()?;
    let values = rho.values.as_ref().map(|v| {
        h.elements()
            .iter()
            .map(|x| v[h.position(&g.conjugate(x)).unwrap()])
            .collect()
    });
    Ok(Irrep {
        domain: rho.domain.clone(),
        degree: rho.degree,
        label: format!("conj({})", rho.label),
        images,
        values,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Index2Case {
    /// `η ≄ η′`: the restriction stays irreducible.
    Distinct,
    /// `η ≅ η′`: the restriction splits as `ρ ⊕ ρ̄`.
    SelfConjugate,
}

#[derive(Clone, Debug)]
pub struct Index2Data {
    pub case: Index2Case,
    /// `[Res η]` or the summands of the restriction.
    pub components: Vec<Irrep>,
}

/// Restriction of an irrep of a group to a subgroup of index two.
pub fn index2_decompose(eta: &Irrep, sub: &Subgroup) -> Result<Index2Data> {
    let big = eta.domain();
    if !sub.elements().iter().all(|g| big.contains(g)) || sub.order() == 0 || !big.order().is_multiple_of(sub.order()) {
        return Err(Error::IndexNotTwo(0));
    }
    let index = big.order() / sub.order();
    if index != 2 {
        return Err(Error::IndexNotTwo(index));
    }
    let twisted_differs = big
        .elements()
        .iter()
        .filter(|g| !sub.contains(g))
        .any(|g| !eta.character(g).map(|c| c.is_zero()).unwrap_or(true));
    let res = eta.restrict(sub)?;
    if twisted_differs {
        debug_assert!(res.is_irreducible());
        return Ok(Index2Data {
            case: Index2Case::Distinct,
            components: vec![res],
        });
    }
    if !sub.is_abelian() {
        return Err(Error::UnsupportedCentralizer(sub.label().to_string()));
    }
    let gens = sub.generators();
    let mats: Vec<CycloMatrix> = gens.iter().map(|g| res.image(g).cloned()).collect::<Result<_>>()?;
    let spaces = common_eigenspaces(&mats)?;
    let chars = abelian_irreps(sub)?;
    let mut components = Vec::new();
    for (tags, basis) in spaces {
        let found = chars.iter().find(|c| {
            gens.iter()
                .zip(&tags)
                .all(|(g, t)| c.values.as_ref().unwrap()[sub.position(g).unwrap()] == *t)
        });
        let c = found.ok_or(Error::NotScalar)?;
        for _ in 0..basis.len() {
            components.push(c.clone());
        }
    }
    Ok(Index2Data {
        case: Index2Case::SelfConjugate,
        components,
    })
}

/// Lookup table from element to position, for callers that index images.
pub fn position_map(h: &Subgroup) -> HashMap<GroupElement, usize> {
    h.elements().iter().enumerate().map(|(i, g)| (g.clone(), i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    #[test]
    fn characters_of_z4() {
        let a6 = FiniteGroup::alternating(6).unwrap();
        let pi = a6.parse_element("(1 2)(3 4 5 6)").unwrap();
        let h = a6.centralizer(&pi).unwrap();
        let chars = abelian_irreps(&h).unwrap();
        assert_eq!(chars.len(), 4);
        for (l, c) in chars.iter().enumerate() {
            assert_eq!(c.label(), format!("chi:{l}"));
            assert_eq!(schur_scalar(c, &pi).unwrap(), RootOfUnity::new(l as i64, 4));
        }
    }

    #[test]
    fn characters_of_the_klein_group() {
        let a4 = FiniteGroup::alternating(4).unwrap();
        let s = a4.parse_element("(1 2)(3 4)").unwrap();
        let h = a4.centralizer(&s).unwrap();
        let labels: Vec<String> = abelian_irreps(&h).unwrap().iter().map(|c| c.label().to_string()).collect();
        assert_eq!(labels, ["eps⊗eps", "eps⊗sgn", "sgn⊗eps", "sgn⊗sgn"]);
        let se = parse_rep(&h, "sgn⊗ε").unwrap();
        assert_eq!(se.label(), "sgn⊗eps");
        assert_eq!(schur_scalar(&se, &s).unwrap(), RootOfUnity::minus_one());
        let t2 = a4.parse_element("(1 3)(2 4)").unwrap();
        assert_eq!(se.character_values().unwrap()[h.position(&t2).unwrap()], RootOfUnity::one());
        assert!(parse_rep(&h, "sgnxsgn").is_ok());
        assert!(parse_rep(&h, "rho:1").is_err());
    }

    #[test]
    fn trivial_group() {
        let z1 = FiniteGroup::cyclic(1).unwrap().as_subgroup();
        let chars = abelian_irreps(&z1).unwrap();
        assert_eq!(chars.len(), 1);
        assert_eq!(chars[0].label(), "eps");
    }

    #[test]
    fn dihedral_table_on_the_a6_centralizer() {
        let a6 = FiniteGroup::alternating(6).unwrap();
        let pi = a6.parse_element("(1 2)(3 4)").unwrap();
        let h = a6.centralizer(&pi).unwrap();
        let a = a6.parse_element("(3 4)(5 6)").unwrap();
        let b = a6.parse_element("(1 3 2 4)(5 6)").unwrap();
        let reps = builtin_irreps_with_generators(&h, &a, &b).unwrap();
        let degrees: Vec<usize> = reps.iter().map(|r| r.degree()).collect();
        assert_eq!(degrees, [1, 1, 1, 1, 2]);
        let rho5 = &reps[4];
        assert_eq!(rho5.label(), "rho:5");
        assert_eq!(
            *rho5.image(&pi).unwrap(),
            CycloMatrix::scalar(2, &CycloNumber::from_integer(1, -1))
        );
        assert_eq!(schur_scalar(rho5, &pi).unwrap(), RootOfUnity::minus_one());
        let rho3 = &reps[2];
        assert!(rho3.image(&a).unwrap().is_identity());
        assert_eq!(schur_scalar(rho3, &b).unwrap(), RootOfUnity::minus_one());
        for r in &reps {
            assert!(r.is_irreducible());
        }
        // the automatically found generators give an equivalent table
        assert_eq!(builtin_irreps(&h).unwrap().len(), 5);
    }

    #[test]
    fn non_scalar_is_rejected() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let h = d4.as_subgroup();
        let reps = builtin_irreps(&h).unwrap();
        let x = d4.parse_element("x").unwrap();
        assert_eq!(schur_scalar(&reps[4], &x), Err(Error::NotScalar));
    }

    #[test]
    fn conjugation_by_a_reflection_inverts_characters() {
        let d5 = FiniteGroup::dihedral(5).unwrap();
        let y = d5.parse_element("y").unwrap();
        let x = d5.parse_element("x").unwrap();
        let rot = d5.centralizer(&y).unwrap();
        let chars = abelian_irreps(&rot).unwrap();
        for (l, c) in chars.iter().enumerate() {
            let bar = conjugate_rep(c, &x).unwrap();
            assert!(bar.same_character(&chars[(5 - l) % 5]));
            let inner = conjugate_rep(c, &y).unwrap();
            assert!(inner.same_character(c));
        }
        let refl = d5.centralizer(&x).unwrap();
        let eps = &abelian_irreps(&refl).unwrap()[0];
        assert!(conjugate_rep(eps, &y).is_err());
    }

    #[test]
    fn klein_characters_are_permuted_by_a_three_cycle() {
        let a4 = FiniteGroup::alternating(4).unwrap();
        let s = a4.parse_element("(1 2)(3 4)").unwrap();
        let h = a4.centralizer(&s).unwrap();
        let chars = abelian_irreps(&h).unwrap();
        let g = a4.parse_element("(1 3 2)").unwrap();
        let bar = conjugate_rep(&chars[2], &g).unwrap();
        assert!(!bar.same_character(&chars[2]));
        assert!(chars[1..].iter().any(|c| bar.same_character(c)));
    }

    #[test]
    fn index_two_restrictions() {
        let s5 = FiniteGroup::symmetric(5).unwrap();
        let a5 = FiniteGroup::alternating(5).unwrap();
        let s = s5.parse_element("(1 2)(3 4)").unwrap();
        let big = s5.centralizer(&s).unwrap();
        let small_elems: Vec<GroupElement> = big
            .elements()
            .iter()
            .filter(|g| g.as_perm().unwrap().sign() == 1)
            .cloned()
            .collect();
        let small = Subgroup::from_elements(small_elems, Some(&s)).unwrap();
        assert_eq!(big.order(), 8);
        assert_eq!(small.order(), 4);
        assert_eq!(a5.centralizer(&a5.parse_element("(1 2)(3 4)").unwrap()).unwrap().order(), 4);
        for eta in builtin_irreps(&big).unwrap() {
            let data = index2_decompose(&eta, &small).unwrap();
            let total: usize = data.components.iter().map(|c| c.degree()).sum();
            assert_eq!(total, eta.degree());
            match data.case {
                Index2Case::Distinct => assert_eq!(data.components.len(), 1),
                Index2Case::SelfConjugate => assert_eq!(data.components.len(), 2),
            }
        }
        let trivial = &builtin_irreps(&big).unwrap()[0];
        assert_eq!(index2_decompose(trivial, &small).unwrap().case, Index2Case::Distinct);
        assert!(matches!(index2_decompose(trivial, &big), Err(Error::IndexNotTwo(1))));
    }

    #[test]
    fn self_conjugate_two_dimensional_rep_of_d4_splits() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let whole = d4.as_subgroup();
        let rot: Vec<GroupElement> = d4
            .elements()
            .iter()
            .filter(|g| matches!(g, GroupElement::Dihedral { a: 0, .. }))
            .cloned()
            .collect();
        let rot = Subgroup::from_elements(rot, None).unwrap();
        let rho = builtin_irreps(&whole).unwrap().pop().unwrap();
        let data = index2_decompose(&rho, &rot).unwrap();
        assert_eq!(data.case, Index2Case::SelfConjugate);
        let x = d4.parse_element("x").unwrap();
        let bar = conjugate_rep(&data.components[0], &x).unwrap();
        assert!(bar.same_character(&data.components[1]));
    }
}
