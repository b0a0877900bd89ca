//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits non-zero when any criterion fails.

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use nichols::analysis::{an_class_splits, an_inverting_involution};
use nichols::braiding::{build_yd_module, diagonal_subspace, QMatrix};
use nichols::cartan::{
    cartan_from_q, is_finite_type, nichols_hilbert_prefix, CartanMatrix, CartanOutcome, DEFAULT_BUDGET,
};
use nichols::cyclo::RootOfUnity;
use nichols::group::{ConjugacyClass, CycleType, FiniteGroup, GroupElement, Perm};
use nichols::reps::{builtin_irreps_with_generators, irreps, parse_rep};
use nichols::screen::{scan_an, screen, summarize_dn, table_dn, ScreenRow, ALL_REPS};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> T) -> Result<(T, Duration), String> {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:?}, limit {limit:?}");
    Ok((out, took))
}

fn rows_of<'a>(rows: &'a [ScreenRow], class_rep: &str) -> Vec<&'a ScreenRow> {
    rows.iter().filter(|r| r.record.class_rep == class_rep).collect()
}

fn dihedral_parts(base: &GroupElement) -> (u32, u8, u32) {
    match *base {
        GroupElement::Dihedral { n, a, b } => (n, a, b),
        _ => panic!("not a dihedral element"),
    }
}

/// Same matrix after some simultaneous reordering of rows and columns.
fn equivalent_up_to_numbering(a: &QMatrix, b: &QMatrix) -> bool {
    let n = a.size();
    if n != b.size() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|i| (0..n).all(|j| a.get(perm[i], perm[j]) == b.get(i, j))) {
            return true;
        }
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return false;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

fn klein_class(g: &FiniteGroup) -> ConjugacyClass {
    let p = |t: &str| g.parse_element(t).unwrap();
    ConjugacyClass::with_numeration(
        g,
        &p("(1 2)(3 4)"),
        &[(p("(1 3)(2 4)"), p("(1 3 2)")), (p("(1 4)(2 3)"), p("(1 2 3)"))],
    )
    .unwrap()
}

fn cyclic_q() -> QMatrix {
    QMatrix::from_signs(&[&[-1, -1, 1], &[1, -1, -1], &[-1, 1, -1]])
}

fn triangle_cartan() -> Vec<Vec<i64>> {
    vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
}

fn odd_dihedral() -> Result<String, String> {
    let mut worst = Duration::ZERO;
    for n in [5u32, 7, 9, 11] {
        let (rows, took) = timed(Duration::from_secs(1), &format!("table-dn {n}"), || table_dn(n))?;
        worst = worst.max(took);
        let rows = rows.map_err(|e| e.to_string())?;
        for row in &rows {
            let r = &row.record;
            let (_, a, _) = dihedral_parts(&row.base);
            if a == 1 && r.rep == "sgn" {
                ensure!(
                    r.verdict == "Undetermined" && r.negative_braiding,
                    "n={n}: (x, sgn) gave {}",
                    r.summary()
                );
            } else {
                ensure!(r.is_infinite(), "n={n}: {} {} gave {}", r.class_rep, r.rep, r.summary());
            }
        }
        let summary = summarize_dn(&rows);
        let lines: Vec<(String, String, String)> = summary
            .iter()
            .map(|l| (l.family.clone(), l.reps.join(","), l.verdict.clone()))
            .collect();
        let expected = [
            ("e", "any", "infinite"),
            ("y^h", "any", "infinite"),
            ("x", "eps", "infinite"),
            ("x", "sgn", "undetermined (negative braiding)"),
        ];
        ensure!(lines.len() == 4, "n={n}: summary has {} lines: {lines:?}", lines.len());
        for (got, want) in lines.iter().zip(expected) {
            ensure!(
                (got.0.as_str(), got.1.as_str(), got.2.as_str()) == want,
                "n={n}: summary line {got:?}, expected {want:?}"
            );
        }
    }
    Ok(format!("n = 5,7,9,11 match, slowest {worst:.2?}"))
}

fn even_dihedral() -> Result<String, String> {
    let mut worst = Duration::ZERO;
    let mut finite = 0;
    for n in [4u32, 6, 8, 10, 12] {
        let (rows, took) = timed(Duration::from_secs(2), &format!("table-dn {n}"), || table_dn(n))?;
        worst = worst.max(took);
        let rows = rows.map_err(|e| e.to_string())?;
        let group = FiniteGroup::dihedral(n).unwrap();
        let m = n / 2;
        let degrees: HashMap<String, usize> = irreps(&group.as_subgroup())
            .map_err(|e| e.to_string())?
            .iter()
            .map(|r| (r.label().to_string(), r.degree()))
            .collect();
        for row in &rows {
            let r = &row.record;
            let (_, a, b) = dihedral_parts(&row.base);
            let minus_one = r.q_ss == RootOfUnity::minus_one().to_string();
            let at = format!("n={n}: {} {}", r.class_rep, r.rep);
            if a == 1 {
                if r.rep.starts_with("sgn") {
                    ensure!(r.negative_braiding && !r.is_infinite(), "{at}: {}", r.summary());
                } else {
                    ensure!(r.is_infinite(), "{at}: {}", r.summary());
                }
            } else if b == m {
                if minus_one {
                    let want = 1u128 << degrees[&r.rep];
                    ensure!(r.dimension == Some(want), "{at}: {} , expected finite ({want})", r.summary());
                    finite += 1;
                } else {
                    ensure!(r.is_infinite(), "{at}: {}", r.summary());
                }
            } else if b != 0 && minus_one {
                ensure!(r.dimension == Some(4), "{at}: {}, expected finite (4)", r.summary());
                finite += 1;
            } else {
                ensure!(r.is_infinite(), "{at}: {}", r.summary());
                if r.rep == ALL_REPS && b != 0 {
                    ensure!(row.base.order() % 2 == 1, "{at}: ALL row hides a q_ss = -1 case");
                }
            }
        }
        let flagged = rows
            .iter()
            .filter(|r| dihedral_parts(&r.base).1 == 1 && r.record.negative_braiding)
            .count();
        ensure!(flagged == 4, "n={n}: {flagged} flagged reflection rows, expected 4");
    }
    Ok(format!("n = 4,6,8,10,12 match, {finite} finite rows, slowest {worst:.2?}"))
}

fn a4_klein() -> Result<String, String> {
    let a4 = FiniteGroup::alternating(4).unwrap();
    let class = klein_class(&a4);
    let h = a4.centralizer(class.base()).unwrap();
    let expected = [
        ("sgn⊗eps", cyclic_q()),
        ("sgn⊗sgn", QMatrix::from_signs(&[&[-1, 1, -1], &[-1, -1, 1], &[1, -1, -1]])),
    ];
    for (label, want) in &expected {
        let rho = parse_rep(&h, label).map_err(|e| e.to_string())?;
        let module = build_yd_module(&class, &rho).map_err(|e| e.to_string())?;
        let qs = diagonal_subspace(&module, &[0, 1, 2]).map_err(|e| e.to_string())?;
        ensure!(qs.len() == 1, "{label}: {} diagonal subspaces", qs.len());
        ensure!(equivalent_up_to_numbering(&qs[0], want), "{label}: Q = {}, expected {want}", qs[0]);
        match cartan_from_q(&qs[0]) {
            CartanOutcome::Cartan(a) => {
                ensure!(a.entries() == triangle_cartan().as_slice(), "{label}: Cartan matrix {a}");
                ensure!(!is_finite_type(&a).finite, "{label}: classified as finite");
            }
            other => return Err(format!("{label}: {other:?}")),
        }
    }
    for rho in irreps(&h).map_err(|e| e.to_string())? {
        let v = screen(&a4, &class, &rho).map_err(|e| e.to_string())?;
        ensure!(v.is_infinite(), "{}: {}", rho.label(), v.summary());
    }
    Ok("both Q matrices, the triangle Cartan matrix and four infinite verdicts".into())
}

fn scan_a5() -> Result<String, String> {
    let (rows, took) = timed(Duration::from_secs(5), "scan-an 5", || scan_an(5))?;
    let rows = rows.map_err(|e| e.to_string())?;
    for row in &rows {
        let r = &row.record;
        ensure!(r.is_infinite(), "{} {}: {}", r.class_rep, r.rep, r.summary());
    }
    let first = |class: &str| rows_of(&rows, class)[0].record.reasons.join("; ");
    ensure!(first("()").starts_with("trivial-self-braiding"), "identity: {}", first("()"));
    for row in rows_of(&rows, "(1 2)(3 4)") {
        let r = &row.record;
        if r.q_ss != RootOfUnity::one().to_string() {
            ensure!(r.reasons.iter().any(|x| x.starts_with("subrack-cartan")), "(2^2) {}: {:?}", r.rep, r.reasons);
        }
    }
    Ok(format!("{} rows, all infinite, {took:.2?}", rows.len()))
}

fn scan_a6() -> Result<String, String> {
    let (rows, took) = timed(Duration::from_secs(60), "scan-an 6", || scan_an(6))?;
    let rows = rows.map_err(|e| e.to_string())?;
    let open: Vec<_> = rows.iter().filter(|r| !r.record.is_infinite()).collect();
    ensure!(open.len() == 1, "{} non-infinite rows", open.len());
    let r = &open[0].record;
    ensure!(
        r.class_rep == "(1 2)(3 4 5 6)" && r.q_ss == RootOfUnity::minus_one().to_string(),
        "open pair is {} {}",
        r.class_rep,
        r.rep
    );
    ensure!(r.verdict == "Undetermined" && r.negative_braiding, "open pair gave {}", r.summary());

    let two_dim = rows_of(&rows, "(1 2)(3 4)")
        .into_iter()
        .find(|row| row.record.rep == "rho:5")
        .ok_or("no two-dimensional row on (1 2)(3 4)")?;
    ensure!(
        two_dim.record.reasons.iter().any(|x| x.starts_with("subrack-cartan")),
        "rho:5 reasons {:?}",
        two_dim.record.reasons
    );

    // same subspace computed from the explicit generators of the centralizer
    let a6 = FiniteGroup::alternating(6).unwrap();
    let class = klein_class(&a6);
    let h = a6.centralizer(class.base()).unwrap();
    let a = a6.parse_element("(3 4)(5 6)").unwrap();
    let b = a6.parse_element("(1 3 2 4)(5 6)").unwrap();
    let rho = builtin_irreps_with_generators(&h, &a, &b)
        .map_err(|e| e.to_string())?
        .into_iter()
        .find(|r| r.degree() == 2)
        .ok_or("no two-dimensional irrep")?;
    let module = build_yd_module(&class, &rho).map_err(|e| e.to_string())?;
    let qs = diagonal_subspace(&module, &[0, 1, 2]).map_err(|e| e.to_string())?;
    let i_one = vec!["zeta(4)^1".to_string(), "1".to_string()];
    let q = qs
        .iter()
        .find(|q| q.vector.as_ref() == Some(&i_one))
        .ok_or("no subspace along (i, 1)")?;
    ensure!(q.entries() == cyclic_q().entries(), "Q along (i, 1) is {q}");
    match cartan_from_q(q) {
        CartanOutcome::Cartan(c) => ensure!(c.entries() == triangle_cartan().as_slice(), "Cartan matrix {c}"),
        other => return Err(format!("{other:?}")),
    }
    Ok(format!("single open pair, rho:5 infinite along (i, 1), {took:.2?}"))
}

fn scan_a7_odd() -> Result<String, String> {
    let (rows, took) = timed(Duration::from_secs(120), "scan-an 7", || scan_an(7))?;
    let rows = rows.map_err(|e| e.to_string())?;
    let a7 = FiniteGroup::alternating(7).unwrap();
    let mut odd = 0;
    for class in a7.conjugacy_classes() {
        if class.base().order() % 2 == 0 {
            continue;
        }
        odd += 1;
        let label = class.base().to_string();
        let mine = rows_of(&rows, &label);
        ensure!(mine.len() == 1, "{label}: {} rows", mine.len());
        let r = &mine[0].record;
        ensure!(r.rep == ALL_REPS && r.is_infinite(), "{label}: {} {}", r.rep, r.summary());
        let rep_free = ["trivial-self-braiding", "real-class", "power-triple", "power-pair"];
        ensure!(
            r.reasons.iter().all(|x| rep_free.iter().any(|p| x.starts_with(p))),
            "{label}: {:?}",
            r.reasons
        );
        if class.base().order() == 7 {
            let w = r.witness.clone().unwrap_or_default();
            ensure!(w.starts_with("j = 2,"), "{label}: witness {w}");
        }
    }
    ensure!(odd == 6, "{odd} odd-order classes");
    Ok(format!("{odd} odd-order classes decided without reps, {took:.2?}"))
}

/// Leading principal minors of every reordering are positive, via exact
/// rational elimination on `i128` numerators.
fn minors_oracle(a: &[Vec<i64>]) -> bool {
    let n = a.len();
    (1u32..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let mut m: Vec<Vec<i128>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| a[i][j] as i128).collect())
            .collect();
        // Bareiss fraction-free elimination
        let k = m.len();
        let mut sign = 1;
        let mut prev = 1i128;
        for p in 0..k {
            if m[p][p] == 0 {
                match (p + 1..k).find(|&r| m[r][p] != 0) {
                    Some(r) => {
                        m.swap(p, r);
                        sign = -sign;
                    }
                    None => return false,
                }
            }
            for i in p + 1..k {
                for j in p + 1..k {
                    m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
                }
            }
            prev = m[p][p];
        }
        sign * m[k - 1][k - 1] > 0
    })
}

fn all_pairs(theta: usize) -> Vec<(usize, usize)> {
    (0..theta).flat_map(|i| (i + 1..theta).map(move |j| (i, j))).collect()
}

fn cartan_oracle() -> Result<String, String> {
    let pair_values: Vec<(i64, i64)> = std::iter::once((0, 0))
        .chain((1..=3).flat_map(|x| (1..=3).map(move |y| (-x, -y))))
        .collect();
    let mut checked = 0u64;
    let mut compare = |a: Vec<Vec<i64>>| -> Result<(), String> {
        let finite = is_finite_type(&CartanMatrix::new(a.clone())).finite;
        checked += 1;
        ensure!(finite == minors_oracle(&a), "disagreement on {a:?}");
        Ok(())
    };
    for theta in 1..=3 {
        let pairs = all_pairs(theta);
        let total = pair_values.len().pow(pairs.len() as u32);
        for mut code in 0..total {
            let mut a = vec![vec![0i64; theta]; theta];
            for i in 0..theta {
                a[i][i] = 2;
            }
            for &(i, j) in &pairs {
                let (x, y) = pair_values[code % pair_values.len()];
                code /= pair_values.len();
                a[i][j] = x;
                a[j][i] = y;
            }
            compare(a)?;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_4);
    for _ in 0..100_000 {
        let mut a = vec![vec![0i64; 4]; 4];
        for i in 0..4 {
            a[i][i] = 2;
        }
        for (i, j) in all_pairs(4) {
            // bias towards sparse matrices so finite types show up
            let (x, y) = if rng.gen_bool(0.4) {
                (0, 0)
            } else {
                pair_values[rng.gen_range(1..pair_values.len())]
            };
            a[i][j] = x;
            a[j][i] = y;
        }
        compare(a)?;
    }
    Ok(format!("{checked} matrices, zero disagreements"))
}

fn braid_equation() -> Result<String, String> {
    let mut groups: Vec<FiniteGroup> = (3..=12).map(|n| FiniteGroup::dihedral(n).unwrap()).collect();
    groups.push(FiniteGroup::symmetric(3).unwrap());
    groups.push(FiniteGroup::symmetric(4).unwrap());
    groups.push(FiniteGroup::alternating(4).unwrap());
    groups.push(FiniteGroup::alternating(5).unwrap());
    let mut modules = 0;
    for g in &groups {
        for class in g.conjugacy_classes() {
            let h = g.centralizer(class.base()).unwrap();
            let Ok(reps) = irreps(&h) else { continue };
            for rho in reps {
                if class.len() * rho.degree() > 12 {
                    continue;
                }
                let m = build_yd_module(&class, &rho).map_err(|e| e.to_string())?;
                ensure!(
                    m.satisfies_braid_equation(),
                    "{} {} {} fails",
                    g.kind(),
                    class.base(),
                    rho.label()
                );
                modules += 1;
            }
        }
    }
    Ok(format!("{modules} modules of degree <= 12"))
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=max.min(n))
        .rev()
        .flat_map(|first| {
            partitions(n - first, first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn inverting_involutions() -> Result<String, String> {
    for j in 2..=10usize {
        let g = an_inverting_involution(j).map_err(|e| e.to_string())?;
        let tau = Perm::from_cycles(j, &[(1..=j).collect()]).unwrap();
        ensure!(g.compose(&g).is_identity(), "g_{j}^2 != id");
        ensure!(g.compose(&tau).compose(&g) == tau.inverse(), "g_{j} does not invert the cycle");
        let k = j / 2;
        let exponent = if j % 2 == 0 { k - 1 } else { k };
        let want = if exponent % 2 == 0 { 1 } else { -1 };
        ensure!(g.sign() == want, "sign(g_{j}) = {}, expected {want}", g.sign());
    }
    let mut classes = 0;
    for n in 2..=8usize {
        let an = FiniteGroup::alternating(n).unwrap();
        let factorial: usize = (1..=n).product();
        for lengths in partitions(n, n) {
            let t = CycleType::from_lengths(&lengths);
            if !t.is_even() {
                continue;
            }
            let centralizer_order: usize = (1..=n).map(|j| j.pow(t.m(j) as u32) * (1..=t.m(j)).product::<usize>()).product();
            let sn_size = factorial / centralizer_order;
            let an_size = an
                .conjugacy_class(&GroupElement::Perm(t.standard_representative()))
                .map_err(|e| e.to_string())?
                .len();
            let splits = an_class_splits(&t).map_err(|e| e.to_string())?;
            ensure!(splits == (2 * an_size == sn_size), "type {t} in A_{n}: criterion says {splits}");
            classes += 1;
        }
    }
    Ok(format!("j = 2..10 involutions, {classes} even classes for n <= 8"))
}

fn hilbert_prefix() -> Result<String, String> {
    let exterior = QMatrix::from_fractions(&[&[(1, 2), (1, 3)], &[(2, 3), (1, 2)]]);
    let (h, took) = timed(Duration::from_secs(10), "exterior rank 2", || {
        nichols_hilbert_prefix(&exterior, 4, DEFAULT_BUDGET)
    })?;
    let h = h.map_err(|e| e.to_string())?;
    ensure!(h.total() == Some(4), "rank-2 exterior series {:?}", h.coeffs);
    let mut worst = took;
    for theta in 1..=3usize {
        let flip = QMatrix::new(vec![vec![RootOfUnity::minus_one(); theta]; theta]);
        let (h, took) = timed(Duration::from_secs(10), &format!("flip rank {theta}"), || {
            nichols_hilbert_prefix(&flip, theta + 1, DEFAULT_BUDGET)
        })?;
        worst = worst.max(took);
        let h = h.map_err(|e| e.to_string())?;
        ensure!(h.terminated() && h.total() == Some(1 << theta), "flip rank {theta}: {:?}", h.coeffs);
    }
    Ok(format!("dims 4, 2, 4, 8 certified, slowest {worst:.2?}"))
}

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("odd dihedral table", odd_dihedral),
        ("even dihedral table", even_dihedral),
        ("A4 Klein class", a4_klein),
        ("A5 scan", scan_a5),
        ("A6 scan", scan_a6),
        ("A7 odd-order classes", scan_a7_odd),
        ("Cartan classifier vs minors oracle", cartan_oracle),
        ("braid equation", braid_equation),
        ("inverting involutions and splitting", inverting_involutions),
        ("Hilbert prefix certificates", hilbert_prefix),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{took:.2?}] {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{took:.2?}] {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
