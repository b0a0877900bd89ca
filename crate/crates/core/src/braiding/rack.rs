use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, FiniteGroup, GroupElement, GroupKind};

/// Partition of the reflections of `D_n` (`n` odd) into `e = n/d` subracks,
/// each isomorphic to the reflection rack of `D_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RackDecomposition {
    pub n: u32,
    pub d: u32,
    /// Class indices of each block.
    pub blocks: Vec<Vec<usize>>,
    /// For each block, the images in `D_d` of its elements (same order).
    pub isomorphisms: Vec<Vec<GroupElement>>,
}

/// Splits `O_x` by residue of the exponent mod `e`: block `r` is
/// `{x y^{r + e t}}`, mapped to `x y^t` in `D_d`.
pub fn rack_decomposition(class: &ConjugacyClass, d: u32) -> Result<RackDecomposition> {
    let n = match class.base() {
        GroupElement::Dihedral { n, a: 1, .. } => *n,
        _ => return Err(Error::InvalidArgument("class of reflections in a dihedral group required".into())),
    };
    if n % 2 == 0 {
        return Err(Error::InvalidArgument(format!("n = {n} must be odd")));
    }
    if d == 0 || n % d != 0 {
        return Err(Error::InvalidArgument(format!("{d} does not divide {n}")));
    }
    if class.len() != n as usize {
        return Err(Error::InvalidArgument("class is not the reflection class".into()));
    }
    let e = n / d;
    let mut blocks = Vec::with_capacity(e as usize);
    let mut isomorphisms = Vec::with_capacity(e as usize);
    for r in 0..e {
        let mut block = Vec::with_capacity(d as usize);
        let mut iso = Vec::with_capacity(d as usize);
        for t in 0..d {
            let g = GroupElement::dihedral(n, 1, (r + e * t) as i64);
            block.push(class.position(&g).ok_or(Error::ElementNotInGroup(g.to_string()))?);
            iso.push(GroupElement::dihedral(d, 1, t as i64));
        }
        blocks.push(block);
        isomorphisms.push(iso);
    }
    Ok(RackDecomposition {
        n,
        d,
        blocks,
        isomorphisms,
    })
}

impl RackDecomposition {
    /// Checks that the blocks partition the class, each block is closed
    /// under `▷`, and the stated maps are bijective rack morphisms onto
    /// `O_x` in `D_d`.
    pub fn verify(&self, class: &ConjugacyClass) -> bool {
        let mut seen = vec![false; class.len()];
        for b in self.blocks.iter().flatten() {
            if *b >= seen.len() || seen[*b] {
                return false;
            }
            seen[*b] = true;
        }
        if !seen.iter().all(|&s| s) {
            return false;
        }
        let Ok(dd) = FiniteGroup::new(GroupKind::Dihedral(self.d)) else {
            return false;
        };
        let Ok(target) = dd.conjugacy_class(&GroupElement::dihedral(self.d, 1, 0)) else {
            return false;
        };
        for (block, iso) in self.blocks.iter().zip(&self.isomorphisms) {
            let mut images: Vec<usize> = iso.iter().filter_map(|g| target.position(g)).collect();
            images.sort_unstable();
            images.dedup();
            if images.len() != block.len() || block.len() != target.len() {
                return false;
            }
            for (p, &i) in block.iter().enumerate() {
                for (q, &j) in block.iter().enumerate() {
                    let prod = class.element(i).conjugate(class.element(j));
                    let Some(k) = block.iter().position(|&b| class.element(b) == &prod) else {
                        return false;
                    };
                    if iso[p].conjugate(&iso[q]) != iso[k] {
                        return false;
                    }
                }
            }
        }
        true
    }
}
