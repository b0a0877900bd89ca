use std::collections::{BTreeMap, HashMap};

use crate::braiding::QMatrix;
use crate::cyclo::{CycloMatrix, CycloNumber};
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u128 = 20_000;

/// Symmetrizer budget from `NICHOLS_BUDGET`, falling back to the default.
pub fn budget_from_env() -> u128 {
    std::env::var("NICHOLS_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Dimensions of the homogeneous components of a Nichols algebra up to a
/// degree cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPrefix {
    pub cap: usize,
    /// `dim B^0, dim B^1, …`; stops after the first zero.
    pub coeffs: Vec<u128>,
}

impl HilbertPrefix {
    /// Some coefficient vanished, so the algebra is finite-dimensional.
    pub fn terminated(&self) -> bool {
        self.coeffs.last() == Some(&0)
    }

    /// Total dimension when terminated.
    pub fn total(&self) -> Option<u128> {
        self.terminated().then(|| self.coeffs.iter().sum())
    }
}

type Word = Vec<u8>;
/// Element of `Z[ζ_N]` as coefficients of `1, ζ, …, ζ^{N−1}`.
type Coeff = Vec<i64>;
type Combination = BTreeMap<Word, Coeff>;

struct Symmetrizer {
    n: usize,
    /// `q_ab` as an exponent of `ζ_N`.
    exps: Vec<Vec<usize>>,
    memo: HashMap<Word, Combination>,
}

impl Symmetrizer {
    fn new(q: &QMatrix) -> Self {
        let n = q.modulus() as usize;
        let exps = (0..q.size())
            .map(|i| (0..q.size()).map(|j| q.get(i, j).exponent_in(n as u64) as usize).collect())
            .collect();
        Symmetrizer {
            n,
            exps,
            memo: HashMap::new(),
        }
    }

    /// `Ω_d(w) = Σ_k (Π_{l>k} q_{w_k w_l}) · Ω_{d−1}(w without w_k) ⊗ w_k`.
    fn apply(&mut self, w: &[u8]) -> Combination {
        if w.len() <= 1 {
            let mut one = vec![0; self.n];
            one[0] = 1;
            return BTreeMap::from([(w.to_vec(), one)]);
        }
        if let Some(c) = self.memo.get(w) {
            return c.clone();
        }
        let mut out = Combination::new();
        for k in 0..w.len() {
            let shift: usize = w[k + 1..]
                .iter()
                .map(|&l| self.exps[w[k] as usize][l as usize])
                .sum::<usize>()
                % self.n;
            let mut rest = w.to_vec();
            let letter = rest.remove(k);
            for (mut word, coeff) in self.apply(&rest) {
                word.push(letter);
                let slot = out.entry(word).or_insert_with(|| vec![0; self.n]);
                for (e, c) in coeff.iter().enumerate() {
                    slot[(e + shift) % self.n] += c;
                }
            }
        }
        out.retain(|_, c| c.iter().any(|&x| x != 0));
        self.memo.insert(w.to_vec(), out.clone());
        out
    }
}

/// Distinct arrangements of a multiset given by letter counts, in
/// lexicographic order.
fn arrangements(counts: &mut [usize], prefix: &mut Word, out: &mut Vec<Word>) {
    if counts.iter().all(|&c| c == 0) {
        out.push(prefix.clone());
        return;
    }
    for a in 0..counts.len() {
        if counts[a] > 0 {
            counts[a] -= 1;
            prefix.push(a as u8);
            arrangements(counts, prefix, out);
            prefix.pop();
            counts[a] += 1;
        }
    }
}

fn compositions(parts: usize, total: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(parts - 1, total - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// `dim B^d` for `d = 0..=cap` as ranks of the quantum symmetrizer on
/// each weight block of `V^{⊗d}`, stopping at the first zero.
pub fn nichols_hilbert_prefix(q: &QMatrix, cap: usize, budget: u128) -> Result<HilbertPrefix> {
    let theta = q.size();
    let work = (theta as u128).checked_pow(cap as u32).unwrap_or(u128::MAX);
    if work > budget {
        return Err(Error::BudgetExceeded { work, budget });
    }
    let mut sym = Symmetrizer::new(q);
    let n = sym.n;
    let mut coeffs = vec![1u128];
    for d in 1..=cap {
        if theta == 0 {
            coeffs.push(0);
            break;
        }
        let mut dim = 0u128;
        for mut counts in compositions(theta, d) {
            let mut words = Vec::new();
            arrangements(&mut counts, &mut Vec::new(), &mut words);
            let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let mut entries = vec![CycloNumber::zero(n); words.len() * words.len()];
            for (r, w) in words.iter().enumerate() {
                for (image, coeff) in sym.apply(w) {
                    entries[r * words.len() + index[&image]] = CycloNumber::from_integer_coeffs(n, &coeff);
                }
            }
            dim += CycloMatrix::new(words.len(), words.len(), entries).rank() as u128;
        }
        coeffs.push(dim);
        if dim == 0 {
            break;
        }
    }
    Ok(HilbertPrefix { cap, coeffs })
}
