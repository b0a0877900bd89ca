use std::collections::HashMap;

use crate::cyclo::{CycloMatrix, CycloNumber, RootOfUnity};
use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, GroupElement};
use crate::reps::{schur_scalar, Irrep};

/// The Yetter–Drinfeld module `⊕_i g_i ⊗ V` of a class and a representation
/// of the centralizer of its base point.
///
/// Basis vectors are pairs `(i, p)`: class index `i`, basis index `p` of `V`,
/// flattened as `i·deg + p`.
#[derive(Clone, Debug)]
pub struct YDModule {
    class: ConjugacyClass,
    rep: Irrep,
    /// `(h, γ)` with `t_i g_j = g_h γ`, row-major in `(i, j)`; `γ` is stored as
    /// its position in the representation domain.
    table: Vec<(usize, usize)>,
}

pub type BasisPair = (usize, usize);

impl YDModule {
    pub fn class(&self) -> &ConjugacyClass {
        &self.class
    }

    pub fn rep(&self) -> &Irrep {
        &self.rep
    }

    /// Number of class elements.
    pub fn class_size(&self) -> usize {
        self.class.len()
    }

    pub fn rep_degree(&self) -> usize {
        self.rep.degree()
    }

    /// Dimension `|O|·deg ρ`.
    pub fn degree(&self) -> usize {
        self.class.len() * self.rep.degree()
    }

    pub fn basis_index(&self, (i, p): BasisPair) -> usize {
        i * self.rep.degree() + p
    }

    pub fn basis_pair(&self, k: usize) -> BasisPair {
        (k / self.rep.degree(), k % self.rep.degree())
    }

    /// `(h, γ)` with `t_i g_j = g_h γ`.
    pub fn factor(&self, i: usize, j: usize) -> (usize, &GroupElement) {
        let (h, g) = self.table[i * self.class.len() + j];
        (h, &self.rep.domain().elements()[g])
    }

    /// `ρ(γ)` for the factorization of `t_i g_j`.
    pub fn gamma_image(&self, i: usize, j: usize) -> &CycloMatrix {
        let (_, g) = self.table[i * self.class.len() + j];
        self.rep.image_at(g)
    }

    /// Position of `γ_{ij}` in the representation domain.
    pub fn gamma_position(&self, i: usize, j: usize) -> usize {
        self.table[i * self.class.len() + j].1
    }

    pub fn q_ss(&self) -> Result<RootOfUnity> {
        schur_scalar(&self.rep, self.class.base())
    }

    /// `c(g_i e_p ⊗ g_j e_q) = Σ_r ρ(γ)_{rq} · g_h e_r ⊗ g_i e_p`, returned as
    /// `(first, second, coefficient)` over flattened basis indices.
    pub fn braiding(&self, a: usize, b: usize) -> Vec<(usize, usize, CycloNumber)> {
        let (i, _) = self.basis_pair(a);
        let (j, q) = self.basis_pair(b);
        let (h, _) = self.factor(i, j);
        let m = self.gamma_image(i, j);
        (0..self.rep.degree())
            .filter(|&r| !m.get(r, q).is_zero())
            .map(|r| (self.basis_index((h, r)), a, m.get(r, q).clone()))
            .collect()
    }

    /// Checks `(c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c)` on every basis triple.
    pub fn satisfies_braid_equation(&self) -> bool {
        let d = self.degree();
        let mut cache: HashMap<(usize, usize), Vec<(usize, usize, CycloNumber)>> = HashMap::new();
        let mut c = |x: usize, y: usize| -> Vec<(usize, usize, CycloNumber)> {
            cache.entry((x, y)).or_insert_with(|| self.braiding(x, y)).clone()
        };
        type Tensor = HashMap<(usize, usize, usize), CycloNumber>;
        fn add(t: &mut Tensor, k: (usize, usize, usize), v: CycloNumber) {
            let e = t.entry(k).or_insert_with(|| CycloNumber::zero(1));
            *e = &*e + &v;
        }
        let left = |t: &Tensor, c: &mut dyn FnMut(usize, usize) -> Vec<(usize, usize, CycloNumber)>| {
            let mut out = Tensor::new();
            for (&(x, y, z), v) in t {
                for (u, w, k) in c(x, y) {
                    add(&mut out, (u, w, z), v * &k);
                }
            }
            out
        };
        let right = |t: &Tensor, c: &mut dyn FnMut(usize, usize) -> Vec<(usize, usize, CycloNumber)>| {
            let mut out = Tensor::new();
            for (&(x, y, z), v) in t {
                for (u, w, k) in c(y, z) {
                    add(&mut out, (x, u, w), v * &k);
                }
            }
            out
        };
        let same = |a: &Tensor, b: &Tensor| {
            a.iter().all(|(k, v)| b.get(k).map_or(v.is_zero(), |w| w == v))
                && b.iter().all(|(k, v)| a.contains_key(k) || v.is_zero())
        };
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let start: Tensor = HashMap::from([((x, y, z), CycloNumber::one(1))]);
                    let l1 = left(&start, &mut c);
                    let l2 = right(&l1, &mut c);
                    let lhs = left(&l2, &mut c);
                    let r1 = right(&start, &mut c);
                    let r2 = left(&r1, &mut c);
                    let rhs = right(&r2, &mut c);
                    if !same(&lhs, &rhs) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Builds `M(O, ρ)`, precomputing `t_i g_j = g_h γ` for every pair.
pub fn build_yd_module(class: &ConjugacyClass, rep: &Irrep) -> Result<YDModule> {
    let s = class.base();
    let domain = rep.domain();
    if !domain.contains(s) || !domain.elements().iter().all(|g| g.commutes_with(s)) {
        return Err(Error::DomainMismatch);
    }
    let m = class.len();
    let mut table = Vec::with_capacity(m * m);
    for i in 0..m {
        let t = class.element(i);
        for j in 0..m {
            let h = class
                .position(&t.conjugate(class.element(j)))
                .ok_or(Error::DomainMismatch)?;
            let gamma = class.rep(h).inverse().mul(t).mul(class.rep(j));
            let g = domain.position(&gamma).ok_or(Error::DomainMismatch)?;
            table.push((h, g));
        }
    }
    Ok(YDModule {
        class: class.clone(),
        rep: rep.clone(),
        table,
    })
}
