use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use super::element::GroupElement;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Default cap on the number of elements a group may be enumerated with.
pub const DEFAULT_GROUP_BOUND: u128 = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum GroupKind {
    Symmetric(usize),
    Alternating(usize),
    Dihedral(u32),
    Cyclic(u32),
    Product(Vec<GroupKind>),
}

impl GroupKind {
    pub fn order(&self) -> u128 {
        match self {
            GroupKind::Symmetric(n) => factorial(*n),
            GroupKind::Alternating(n) => {
                if *n < 2 {
                    1
                } else {
                    factorial(*n) / 2
                }
            }
            GroupKind::Dihedral(n) => 2 * *n as u128,
            GroupKind::Cyclic(n) => *n as u128,
            GroupKind::Product(fs) => fs.iter().map(|f| f.order()).product(),
        }
    }

    pub fn is_permutation_group(&self) -> bool {
        matches!(self, GroupKind::Symmetric(_) | GroupKind::Alternating(_))
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Symmetric(n) => write!(f, "Sn:{n}"),
            GroupKind::Alternating(n) => write!(f, "An:{n}"),
            GroupKind::Dihedral(n) => write!(f, "Dn:{n}"),
            GroupKind::Cyclic(n) => write!(f, "Zn:{n}"),
            GroupKind::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|g| format!("({g})")).collect();
                write!(f, "{}", parts.join("x"))
            }
        }
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// A fully enumerated finite group.
///
/// Elements are kept in a fixed enumeration order: image arrays in
/// lexicographic order for permutation groups, `(a, b)` for dihedral
/// groups, and lexicographic tuples for products.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    kind: GroupKind,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    generators: Vec<GroupElement>,
    identity: GroupElement,
}

impl FiniteGroup {
    pub fn new(kind: GroupKind) -> Result<Self> {
        Self::with_bound(kind, DEFAULT_GROUP_BOUND)
    }

    pub fn with_bound(kind: GroupKind, bound: u128) -> Result<Self> {
        validate(&kind)?;
        let order = kind.order();
        if order > bound {
            return Err(Error::SizeBoundExceeded { order, bound });
        }
        let elements = enumerate(&kind);
        let generators = generators(&kind);
        let identity = elements[0].identity_like();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        Ok(FiniteGroup {
            kind,
            elements,
            index,
            generators,
            identity,
        })
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        Self::new(GroupKind::Symmetric(n))
    }

    pub fn alternating(n: usize) -> Result<Self> {
        Self::new(GroupKind::Alternating(n))
    }

    pub fn dihedral(n: u32) -> Result<Self> {
        Self::new(GroupKind::Dihedral(n))
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        Self::new(GroupKind::Cyclic(n))
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn identity(&self) -> &GroupElement {
        &self.identity
    }

    pub fn position(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index.contains_key(g)
    }

    pub fn check_member(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::ElementNotInGroup(g.to_string()))
        }
    }

    /// Least `k ≥ 1` with `g^k = e`.
    pub fn element_order(&self, g: &GroupElement) -> Result<u64> {
        self.check_member(g)?;
        Ok(g.order())
    }

    /// Degree of the underlying permutation action, for `Sn`/`An`.
    pub fn perm_degree(&self) -> Option<usize> {
        match self.kind {
            GroupKind::Symmetric(n) | GroupKind::Alternating(n) => Some(n),
            _ => None,
        }
    }

    /// Parses an element in the notation of this group: cycle notation for
    /// permutation groups, `x^a*y^b` (or `x`, `xy^2`, `y^3`, `e`) for dihedral
    /// groups, an integer for cyclic groups and `[g1, g2, …]` for products.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let g = parse_element_of(&self.kind, text)?;
        self.check_member(&g)?;
        Ok(g)
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}

fn validate(kind: &GroupKind) -> Result<()> {
    let bad = || Error::MalformedGroupSpec(kind.to_string());
    match kind {
        GroupKind::Symmetric(n) | GroupKind::Alternating(n) if *n == 0 || *n > 255 => Err(bad()),
        GroupKind::Dihedral(n) | GroupKind::Cyclic(n) if *n == 0 => Err(bad()),
        GroupKind::Product(fs) if fs.is_empty() => Err(bad()),
        GroupKind::Product(fs) => fs.iter().try_for_each(validate),
        _ => Ok(()),
    }
}

fn enumerate(kind: &GroupKind) -> Vec<GroupElement> {
    match kind {
        GroupKind::Symmetric(n) | GroupKind::Alternating(n) => {
            let even_only = matches!(kind, GroupKind::Alternating(_));
            (0..*n as u8)
                .permutations(*n)
                .map(|images| Perm::from_images(images).expect("permutation"))
                .filter(|p| !even_only || p.sign() == 1)
                .map(GroupElement::Perm)
                .collect()
        }
        GroupKind::Dihedral(n) => (0..2u8)
            .flat_map(|a| (0..*n).map(move |b| GroupElement::Dihedral { n: *n, a, b }))
            .collect(),
        GroupKind::Cyclic(n) => (0..*n).map(|k| GroupElement::Cyclic { n: *n, k }).collect(),
        GroupKind::Product(fs) => fs
            .iter()
            .map(enumerate)
            .multi_cartesian_product()
            .map(GroupElement::Product)
            .collect(),
    }
}

fn generators(kind: &GroupKind) -> Vec<GroupElement> {
    match kind {
        GroupKind::Symmetric(n) => {
            let mut gens = Vec::new();
            if *n >= 2 {
                gens.push(Perm::from_cycles(*n, &[vec![1, 2]]).unwrap());
            }
            if *n >= 3 {
                gens.push(Perm::from_cycles(*n, &[(1..=*n).collect()]).unwrap());
            }
            gens.into_iter().map(GroupElement::Perm).collect()
        }
        GroupKind::Alternating(n) => (3..=*n)
            .map(|k| GroupElement::Perm(Perm::from_cycles(*n, &[vec![1, 2, k]]).unwrap()))
            .collect(),
        GroupKind::Dihedral(n) => vec![
            GroupElement::dihedral(*n, 1, 0),
            GroupElement::dihedral(*n, 0, 1),
        ],
        GroupKind::Cyclic(n) => vec![GroupElement::cyclic(*n, 1)],
        GroupKind::Product(fs) => {
            let ids: Vec<GroupElement> = fs.iter().map(enumerate_identity).collect();
            let mut gens = Vec::new();
            for (i, f) in fs.iter().enumerate() {
                for g in generators(f) {
                    let mut tuple = ids.clone();
                    tuple[i] = g;
                    gens.push(GroupElement::Product(tuple));
                }
            }
            gens
        }
    }
}

fn enumerate_identity(kind: &GroupKind) -> GroupElement {
    match kind {
        GroupKind::Symmetric(n) | GroupKind::Alternating(n) => {
            GroupElement::Perm(Perm::identity(*n))
        }
        GroupKind::Dihedral(n) => GroupElement::dihedral(*n, 0, 0),
        GroupKind::Cyclic(n) => GroupElement::cyclic(*n, 0),
        GroupKind::Product(fs) => GroupElement::Product(fs.iter().map(enumerate_identity).collect()),
    }
}

/// Parses `An:<n> | Sn:<n> | Dn:<n> | Zn:<n> | (G1)x(G2)[x(G3)…]`.
pub fn parse_group_kind(spec: &str) -> Result<GroupKind> {
    let bad = || Error::MalformedGroupSpec(spec.to_string());
    let s = spec.trim();
    if s.starts_with('(') {
        let mut factors = Vec::new();
        let mut rest = s;
        loop {
            let inner = rest.strip_prefix('(').ok_or_else(bad)?;
            let mut depth = 1usize;
            let mut close = None;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            close = Some(i);
                            break;
                        }
                    }
                    _ => {}
                }
            }
            let close = close.ok_or_else(bad)?;
            factors.push(parse_group_kind(&inner[..close])?);
            rest = inner[close + 1..].trim_start();
            if rest.is_empty() {
                break;
            }
            rest = rest.strip_prefix('x').ok_or_else(bad)?.trim_start();
        }
        return Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            GroupKind::Product(factors)
        });
    }
    let (name, n) = s.split_once(':').ok_or_else(bad)?;
    let n: u32 = n.trim().parse().map_err(|_| bad())?;
    let kind = match name.trim() {
        "An" => GroupKind::Alternating(n as usize),
        "Sn" => GroupKind::Symmetric(n as usize),
        "Dn" => GroupKind::Dihedral(n),
        "Zn" => GroupKind::Cyclic(n),
        _ => return Err(bad()),
    };
    validate(&kind).map_err(|_| bad())?;
    Ok(kind)
}

/// Parses a group spec and enumerates the group, refusing groups larger
/// than [`DEFAULT_GROUP_BOUND`].
pub fn parse_group(spec: &str) -> Result<FiniteGroup> {
    parse_group_with_bound(spec, DEFAULT_GROUP_BOUND)
}

pub fn parse_group_with_bound(spec: &str, bound: u128) -> Result<FiniteGroup> {
    FiniteGroup::with_bound(parse_group_kind(spec)?, bound)
}

fn parse_element_of(kind: &GroupKind, text: &str) -> Result<GroupElement> {
    let bad = || Error::MalformedElement(text.to_string());
    match kind {
        GroupKind::Symmetric(n) | GroupKind::Alternating(n) => {
            Ok(GroupElement::Perm(Perm::parse(*n, text)?))
        }
        GroupKind::Dihedral(n) => parse_dihedral(*n, text).ok_or_else(bad),
        GroupKind::Cyclic(n) => {
            let k: i64 = text.trim().parse().map_err(|_| bad())?;
            Ok(GroupElement::cyclic(*n, k))
        }
        GroupKind::Product(fs) => {
            let t = text.trim();
            let inner = t
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(bad)?;
            let parts = split_top_level(inner);
            if parts.len() != fs.len() {
                return Err(bad());
            }
            fs.iter()
                .zip(parts)
                .map(|(f, p)| parse_element_of(f, p))
                .collect::<Result<Vec<_>>>()
                .map(GroupElement::Product)
        }
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts
}

fn parse_dihedral(n: u32, text: &str) -> Option<GroupElement> {
    let t: String = text
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '*')
        .collect();
    if t.is_empty() || t == "e" || t == "1" {
        return Some(GroupElement::dihedral(n, 0, 0));
    }
    let mut rest = t.as_str();
    let mut a = 0i64;
    if let Some(r) = rest.strip_prefix('x') {
        rest = r;
        a = 1;
        if let Some(r) = rest.strip_prefix('^') {
            let end = r.find(|c: char| !c.is_ascii_digit() && c != '-').unwrap_or(r.len());
            a = r[..end].parse().ok()?;
            rest = &r[end..];
        }
    }
    let mut b = 0i64;
    if let Some(r) = rest.strip_prefix('y') {
        rest = r;
        b = 1;
        if let Some(r) = rest.strip_prefix('^') {
            let end = r.find(|c: char| !c.is_ascii_digit() && c != '-').unwrap_or(r.len());
            b = r[..end].parse().ok()?;
            rest = &r[end..];
        }
    }
    if !rest.is_empty() {
        return None;
    }
    Some(GroupElement::dihedral(n, a.rem_euclid(2) as u8, b))
}
