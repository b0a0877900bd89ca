use std::collections::HashMap;
use std::fmt;

use crate::cyclo::{common_eigenspaces, CycloVector, RootOfUnity};
use crate::error::{Error, Result};
use crate::group::ConjugacyClass;

use super::module::YDModule;

pub const DEFAULT_SUBRACK_BOUND: usize = 120;

/// A subset of class indices closed under `x ▷ y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subrack {
    pub indices: Vec<usize>,
    pub abelian: bool,
    pub maximal: bool,
}

fn commuting_graph(class: &ConjugacyClass) -> Vec<Vec<bool>> {
    let m = class.len();
    let mut adj = vec![vec![false; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            if class.element(i).commutes_with(class.element(j)) {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    adj
}

/// Abelian subracks: cliques of the commuting graph on the class (a set of
/// pairwise commuting elements is automatically closed under `▷`). With
/// `max_only`, only the maximal ones. Sorted lexicographically.
pub fn abelian_subracks(class: &ConjugacyClass, max_only: bool) -> Result<Vec<Subrack>> {
    abelian_subracks_with_bound(class, max_only, DEFAULT_SUBRACK_BOUND)
}

pub fn abelian_subracks_with_bound(class: &ConjugacyClass, max_only: bool, bound: usize) -> Result<Vec<Subrack>> {
    if class.len() > bound {
        return Err(Error::SubrackBoundExceeded {
            size: class.len(),
            bound,
        });
    }
    let adj = commuting_graph(class);
    let mut maximal = Vec::new();
    bron_kerbosch(&adj, Vec::new(), (0..class.len()).collect(), Vec::new(), &mut maximal);
    for c in &mut maximal {
        c.sort_unstable();
    }
    maximal.sort();
    let mut out: Vec<Subrack> = if max_only {
        maximal
            .into_iter()
            .map(|indices| Subrack {
                indices,
                abelian: true,
                maximal: true,
            })
            .collect()
    } else {
        let mut all = Vec::new();
        let mut current = Vec::new();
        all_cliques(&adj, 0, &mut current, &mut all);
        all.into_iter()
            .map(|indices| {
                let is_max = maximal.binary_search(&indices).is_ok();
                Subrack {
                    indices,
                    abelian: true,
                    maximal: is_max,
                }
            })
            .collect()
    };
    out.sort();
    Ok(out)
}

fn bron_kerbosch(adj: &[Vec<bool>], r: Vec<usize>, mut p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
        .expect("nonempty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in candidates {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let x2 = x.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, r2, p2, x2, out);
        p.retain(|&u| u != v);
        x.push(v);
    }
}

fn all_cliques(adj: &[Vec<bool>], from: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    for v in from..adj.len() {
        if current.iter().all(|&u| adj[u][v]) {
            current.push(v);
            out.push(current.clone());
            all_cliques(adj, v + 1, current, out);
            current.pop();
        }
    }
}

/// Braiding matrix of a diagonal braided subspace:
/// `c(v_a ⊗ v_b) = q_ab v_b ⊗ v_a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    entries: Vec<Vec<RootOfUnity>>,
    /// Class indices spanning the subspace, empty when built directly.
    pub subrack: Vec<usize>,
    /// The shared vector `v` of the subspace `span{g_i v}`.
    pub vector: Option<Vec<String>>,
}

impl QMatrix {
    pub fn new(entries: Vec<Vec<RootOfUnity>>) -> Self {
        let n = entries.len();
        assert!(entries.iter().all(|r| r.len() == n), "QMatrix must be square");
        QMatrix {
            entries,
            subrack: Vec::new(),
            vector: None,
        }
    }

    /// Builds from exponent pairs `(k, N)` meaning `ζ_N^k`.
    pub fn from_fractions(rows: &[&[(i64, u64)]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&(k, n)| RootOfUnity::new(k, n)).collect())
                .collect(),
        )
    }

    /// Builds from entries `±1`.
    pub fn from_signs(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| {
                            assert!(x == 1 || x == -1);
                            RootOfUnity::new(if x < 0 { 1 } else { 0 }, 2)
                        })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> RootOfUnity {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<RootOfUnity>] {
        &self.entries
    }

    /// The submatrix on the given indices.
    pub fn principal(&self, idx: &[usize]) -> QMatrix {
        QMatrix {
            entries: idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
            subrack: if self.subrack.is_empty() {
                Vec::new()
            } else {
                idx.iter().map(|&i| self.subrack[i]).collect()
            },
            vector: self.vector.clone(),
        }
    }

    /// Reindexes by a permutation: entry `(a, b)` of the result is
    /// `(perm[a], perm[b])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> QMatrix {
        self.principal(perm)
    }

    /// Least common multiple of the entry orders.
    pub fn modulus(&self) -> u64 {
        use num_integer::Integer;
        self.entries.iter().flatten().fold(1, |acc, q| acc.lcm(&q.order()))
    }

    /// All `q_ii = −1` and `q_ij q_ji = 1` for `i ≠ j`.
    pub fn is_negative(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| {
            self.entries[i][i].is_minus_one()
                && (0..n).all(|j| i == j || self.entries[i][j].mul(&self.entries[j][i]).is_one())
        })
    }
}

fn short_root(q: &RootOfUnity) -> String {
    if q.is_one() {
        "1".into()
    } else if q.is_minus_one() {
        "-1".into()
    } else {
        q.to_string()
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| format!("[{}]", r.iter().map(short_root).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// The diagonal braided subspaces `span{g_i v : i ∈ S}` for an abelian
/// subrack `S`, one per joint eigenspace of the operators `ρ(γ_ij)`,
/// `γ_ij = g_j^{-1} t_i g_j`. Entry `q_ab` is the eigenvalue of `γ` for
/// `(S[a], S[b])` on `v`.
pub fn diagonal_subspace(module: &YDModule, subrack: &[usize]) -> Result<Vec<QMatrix>> {
    let class = module.class();
    for (a, &i) in subrack.iter().enumerate() {
        for &j in &subrack[a + 1..] {
            if !class.element(i).commutes_with(class.element(j)) {
                return Err(Error::NotAbelianSubrack);
            }
        }
    }
    // distinct γ positions, in first-seen order
    let mut slot: HashMap<usize, usize> = HashMap::new();
    let mut mats = Vec::new();
    let mut pair_slot = vec![vec![0usize; subrack.len()]; subrack.len()];
    for (a, &i) in subrack.iter().enumerate() {
        for (b, &j) in subrack.iter().enumerate() {
            debug_assert_eq!(module.factor(i, j).0, j);
            let g = module.gamma_position(i, j);
            let k = *slot.entry(g).or_insert_with(|| {
                mats.push(module.gamma_image(i, j).clone());
                mats.len() - 1
            });
            pair_slot[a][b] = k;
        }
    }
    let spaces = common_eigenspaces(&mats)?;
    Ok(spaces
        .into_iter()
        .map(|(tags, basis)| {
            let entries = pair_slot
                .iter()
                .map(|row| row.iter().map(|&k| tags[k]).collect())
                .collect();
            let v: &CycloVector = &basis[0];
            QMatrix {
                entries,
                subrack: subrack.to_vec(),
                vector: Some(v.iter().map(|x| x.to_string()).collect()),
            }
        })
        .collect())
}

/// Every diagonal subspace from every maximal abelian subrack has
/// `q_ii = −1` and `q_ij q_ji = 1`.
pub fn is_negative_braiding(module: &YDModule) -> Result<bool> {
    for s in abelian_subracks(module.class(), true)? {
        let qs = diagonal_subspace(module, &s.indices)?;
        if qs.is_empty() || !qs.iter().all(|q| q.is_negative()) {
            return Ok(false);
        }
    }
    Ok(true)
}
