use std::fmt;

use crate::braiding::QMatrix;

/// Integer matrix with `a_ii = 2` and `a_ij ≤ 0` off the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Panics unless the diagonal is 2 and the off-diagonal entries are
    /// nonpositive.
    pub fn new(entries: Vec<Vec<i64>>) -> Self {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            assert_eq!(row.len(), n, "Cartan matrix must be square");
            for (j, &a) in row.iter().enumerate() {
                if i == j {
                    assert_eq!(a, 2, "diagonal entries must be 2");
                } else {
                    assert!(a <= 0, "off-diagonal entries must be nonpositive");
                }
            }
        }
        CartanMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `a_ij = 0` exactly when `a_ji = 0`.
    pub fn is_generalized(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| (self.entries[i][j] == 0) == (self.entries[j][i] == 0)))
    }

    pub fn principal(&self, idx: &[usize]) -> CartanMatrix {
        CartanMatrix {
            entries: idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
        }
    }

    /// Connected components of the graph with an edge where `a_ij ≠ 0` or
    /// `a_ji ≠ 0`; each sorted, ordered by least element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut k = 0;
            while k < comp.len() {
                let u = comp[k];
                k += 1;
                for v in 0..n {
                    if !seen[v] && (self.entries[u][v] != 0 || self.entries[v][u] != 0) {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CartanOutcome {
    Cartan(CartanMatrix),
    /// Some pair `(i, j)` admits no exponent.
    NotCartanType { pair: (usize, usize) },
    /// Some `q_ii = 1`.
    InfiniteImmediately { index: usize },
}

/// Searches `a_ij = 0, −1, …, −(|q_ii| − 1)` with `q_ii^{a_ij} = q_ij q_ji`;
/// the first match wins.
pub fn cartan_from_q(q: &QMatrix) -> CartanOutcome {
    let n = q.size();
    if let Some(index) = (0..n).find(|&i| q.get(i, i).is_one()) {
        return CartanOutcome::InfiniteImmediately { index };
    }
    let mut entries = vec![vec![0i64; n]; n];
    for i in 0..n {
        entries[i][i] = 2;
        let qii = q.get(i, i);
        for j in 0..n {
            if i == j {
                continue;
            }
            let target = q.get(i, j).mul(&q.get(j, i));
            match (0..qii.order() as i64).find(|&e| qii.pow(-e) == target) {
                Some(e) => entries[i][j] = -e,
                None => return CartanOutcome::NotCartanType { pair: (i, j) },
            }
        }
    }
    CartanOutcome::Cartan(CartanMatrix { entries })
}

/// A Dynkin label such as `A3`, `E6` or `G2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinType {
    pub series: char,
    pub rank: usize,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentType {
    pub indices: Vec<usize>,
    /// `None` when the component is not of finite type.
    pub label: Option<DynkinType>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTypeReport {
    pub finite: bool,
    pub components: Vec<ComponentType>,
}

impl FiniteTypeReport {
    /// Labels joined with ` x `, e.g. `A1 x A2`; `None` unless finite.
    pub fn label(&self) -> Option<String> {
        if !self.finite {
            return None;
        }
        Some(
            self.components
                .iter()
                .map(|c| c.label.as_ref().expect("finite").to_string())
                .collect::<Vec<_>>()
                .join(" x "),
        )
    }
}

/// Matches every connected component against the finite Dynkin list.
pub fn is_finite_type(a: &CartanMatrix) -> FiniteTypeReport {
    let components: Vec<ComponentType> = a
        .components()
        .into_iter()
        .map(|idx| {
            let label = classify_component(&a.principal(&idx));
            ComponentType { indices: idx, label }
        })
        .collect();
    FiniteTypeReport {
        finite: components.iter().all(|c| c.label.is_some()),
        components,
    }
}

fn classify_component(a: &CartanMatrix) -> Option<DynkinType> {
    let k = a.size();
    let ty = |series, rank| Some(DynkinType { series, rank });
    if k == 1 {
        return ty('A', 1);
    }
    if !a.is_generalized() {
        return None;
    }
    let mut adj = vec![Vec::new(); k];
    let mut edges = 0;
    let mut double = None;
    for i in 0..k {
        for j in i + 1..k {
            let p = a.get(i, j) * a.get(j, i);
            match p {
                0 => continue,
                1 => {}
                2 => {
                    if double.is_some() {
                        return None;
                    }
                    double = Some((i, j));
                }
                3 => {
                    return if k == 2 { ty('G', 2) } else { None };
                }
                _ => return None,
            }
            adj[i].push(j);
            adj[j].push(i);
            edges += 1;
        }
    }
    // connected with k − 1 edges: a tree
    if edges != k - 1 {
        return None;
    }
    let max_deg = adj.iter().map(Vec::len).max().unwrap_or(0);
    if let Some((u, v)) = double {
        if max_deg > 2 {
            return None;
        }
        if k == 2 {
            return ty('B', 2);
        }
        let leaf_u = adj[u].len() == 1;
        let leaf_v = adj[v].len() == 1;
        if leaf_u || leaf_v {
            let (leaf, other) = if leaf_u { (u, v) } else { (v, u) };
            return if a.get(leaf, other) == -2 { ty('B', k) } else { ty('C', k) };
        }
        return if k == 4 { ty('F', 4) } else { None };
    }
    if max_deg <= 2 {
        return ty('A', k);
    }
    if max_deg > 3 || adj.iter().filter(|n| n.len() == 3).count() > 1 {
        return None;
    }
    let center = adj.iter().position(|n| n.len() == 3).expect("branch node");
    let mut arms: Vec<usize> = adj[center]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (center, start, 1);
            while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    match arms[..] {
        [1, 1, _] => ty('D', k),
        [1, 2, 2] => ty('E', 6),
        [1, 2, 3] => ty('E', 7),
        [1, 2, 4] => ty('E', 8),
        _ => None,
    }
}

fn determinant(m: &[Vec<i64>]) -> i128 {
    // Bareiss fraction-free elimination
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Every principal minor is positive.
pub fn principal_minors_positive(a: &CartanMatrix) -> bool {
    let n = a.size();
    (1u32..1 << n).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        determinant(a.principal(&idx).entries()) > 0
    })
}
