use std::sync::Arc;

use itertools::Itertools;

use crate::analysis::{power_witnesses, reality_report, PowerWitness, RealityReport};
use crate::braiding::{
    abelian_subracks, build_yd_module, diagonal_subspace, is_negative_braiding, QMatrix, YDModule,
    DEFAULT_SUBRACK_BOUND,
};
use crate::cartan::{budget_from_env, cartan_from_q, is_finite_type, nichols_hilbert_prefix, CartanOutcome};
use crate::cyclo::RootOfUnity;
use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, FiniteGroup, GroupElement, Subgroup};
use crate::reps::{schur_scalar, Irrep};

use super::verdict::{Reason, Rule, Verdict, VerdictKind};

/// Largest clique whose principal subsets are searched when the whole
/// clique is not of Cartan type.
const SUBSET_SEARCH_LIMIT: usize = 10;

/// Options shared by every screen.
#[derive(Clone, Copy, Debug)]
pub struct ScreenOptions {
    pub subrack_bound: usize,
    /// Symmetrizer budget for confirming finite dimensions.
    pub budget: u128,
    /// Extra degrees beyond `θ` computed when confirming a dimension.
    pub max_degree: Option<usize>,
}

impl Default for ScreenOptions {
    fn default() -> Self {
        ScreenOptions {
            subrack_bound: DEFAULT_SUBRACK_BOUND,
            budget: budget_from_env(),
            max_degree: None,
        }
    }
}

/// Rep-independent data of a class: reality and power witnesses.
#[derive(Clone, Debug)]
pub struct ClassContext<'g> {
    group: &'g FiniteGroup,
    class: ConjugacyClass,
    centralizer: Arc<Subgroup>,
    reality: RealityReport,
    witnesses: Vec<PowerWitness>,
    options: ScreenOptions,
}

fn q_pow(q: RootOfUnity, e: u64) -> RootOfUnity {
    q.pow((e % q.order()) as i64)
}

fn pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    (0..exp).fold(1 % m, |acc, _| acc * (base % m) % m)
}

impl<'g> ClassContext<'g> {
    pub fn new(group: &'g FiniteGroup, class: ConjugacyClass) -> Result<Self> {
        Self::with_options(group, class, ScreenOptions::default())
    }

    pub fn with_options(group: &'g FiniteGroup, class: ConjugacyClass, options: ScreenOptions) -> Result<Self> {
        let s = class.base().clone();
        let centralizer = Arc::new(group.centralizer(&s)?);
        let reality = reality_report(group, &s)?;
        let witnesses = power_witnesses(group, &class);
        Ok(ClassContext {
            group,
            class,
            centralizer,
            reality,
            witnesses,
            options,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.group
    }

    pub fn class(&self) -> &ConjugacyClass {
        &self.class
    }

    pub fn centralizer(&self) -> &Arc<Subgroup> {
        &self.centralizer
    }

    pub fn reality(&self) -> &RealityReport {
        &self.reality
    }

    pub fn witnesses(&self) -> &[PowerWitness] {
        &self.witnesses
    }

    pub fn options(&self) -> &ScreenOptions {
        &self.options
    }

    fn base(&self) -> &GroupElement {
        self.class.base()
    }

    fn order(&self) -> u64 {
        self.base().order()
    }

    /// Rules that depend on `ρ` only through `q_ss` and whether
    /// `deg ρ > 1`. Returns the decisive reason and witness.
    pub fn rep_free(&self, q: RootOfUnity, higher_degree: bool) -> Option<(Reason, Option<String>)> {
        let ord = self.order();
        if q.is_one() {
            return Some((
                Reason::new(Rule::TrivialSelfBraiding, "q_ss = 1"),
                Some(format!("line spanned by g_1 v at {}", self.base())),
            ));
        }
        let odd_or_not_minus_one = !q.is_minus_one() || ord % 2 == 1;
        if self.reality.is_real && odd_or_not_minus_one {
            let w = self.reality.involution_witness.as_ref().or(self.reality.inverting_witness.as_ref());
            let kind = if self.reality.is_absolutely_real {
                "involution"
            } else {
                "element"
            };
            return Some((
                Reason::new(Rule::RealClass, format!("s real, q_ss = {q}, |s| = {ord}")),
                w.map(|g| format!("inverting {kind} {g}")),
            ));
        }
        if odd_or_not_minus_one {
            if let Some(w) = self.witnesses.iter().find(|w| w.distinct3) {
                return Some((
                    Reason::new(Rule::PowerTriple, format!("s, s^{0}, s^{1} distinct, q_ss = {q}", w.j, w.j * w.j)),
                    Some(format!("j = {}, sigma = {}", w.j, w.sigma)),
                ));
            }
        }
        for w in self.witnesses.iter().filter(|w| w.square_returns) {
            let e1 = pow_mod(w.j, w.sigma_order().saturating_sub(1), q.order());
            let far = q_pow(q, e1);
            let near = q_pow(q, w.j);
            if higher_degree {
                let qm = QMatrix::new(vec![
                    vec![q, q, far, far],
                    vec![q, q, far, far],
                    vec![near, near, q, q],
                    vec![near, near, q, q],
                ]);
                if let CartanOutcome::Cartan(a) = cartan_from_q(&qm) {
                    if !is_finite_type(&a).finite {
                        return Some((
                            Reason::new(Rule::PowerPair, format!("two vectors over s, s^{}, q_ss = {q}", w.j)),
                            Some(format!("j = {}, sigma = {}, Q = {qm}, A = {a}", w.j, w.sigma)),
                        ));
                    }
                }
            } else if !q.is_minus_one() && q.order() != 3 {
                let qm = QMatrix::new(vec![vec![q, far], vec![near, q]]);
                return Some((
                    Reason::new(Rule::PowerPair, format!("s, s^{} in the class, q_ss = {q} not in {{-1}} or G_3", w.j)),
                    Some(format!("j = {}, sigma = {}, Q = {qm}", w.j, w.sigma)),
                ));
            }
        }
        None
    }

    fn check_domain(&self, rho: &Irrep) -> Result<()> {
        let d = rho.domain();
        if d.order() != self.centralizer.order() || !self.centralizer.elements().iter().all(|g| d.contains(g)) {
            return Err(Error::DomainMismatch);
        }
        Ok(())
    }

    /// Applies the rules in order; the first decisive one wins.
    pub fn screen(&self, rho: &Irrep) -> Result<Verdict> {
        self.check_domain(rho)?;
        let q = schur_scalar(rho, self.base())?;
        if let Some((reason, witness)) = self.rep_free(q, rho.degree() > 1) {
            return Ok(Verdict::infinite(reason, witness));
        }
        let mut notes = Vec::new();
        let small = self.class.len() <= self.options.subrack_bound;
        let module = if small || self.class.is_commutative() {
            Some(build_yd_module(&self.class, rho)?)
        } else {
            None
        };
        let Some(module) = module else {
            notes.push(Reason::new(
                Rule::SubrackCartan,
                format!(
                    "skipped: class of size {} exceeds the subrack bound {}",
                    self.class.len(),
                    self.options.subrack_bound
                ),
            ));
            notes.push(Reason::new(Rule::Exhausted, "negative-braiding check skipped"));
            return Ok(Verdict {
                kind: VerdictKind::Undetermined,
                reasons: notes,
                witness: None,
                negative_braiding: false,
            });
        };
        match self.subrack_rule(&module)? {
            SubrackOutcome::Infinite(reason, witness) => {
                return Ok(Verdict::infinite(reason, Some(witness)));
            }
            SubrackOutcome::NoConclusion(note) => notes.push(note),
        }
        let negative = match is_negative_braiding(&module) {
            Ok(b) => b,
            Err(Error::SubrackBoundExceeded { .. }) => false,
            Err(e) => return Err(e),
        };
        if let Some((reason, dim, witness)) = self.exterior_rule(&module, &mut notes)? {
            notes.push(reason);
            return Ok(Verdict {
                kind: VerdictKind::FiniteDim(dim),
                reasons: notes,
                witness: Some(witness),
                negative_braiding: negative,
            });
        }
        notes.push(Reason::new(
            Rule::Exhausted,
            format!(
                "no rule applies{}",
                if negative { "; braiding is negative" } else { "" }
            ),
        ));
        if let Some(note) = self.uniform_even_type_note() {
            notes.push(note);
        }
        Ok(Verdict {
            kind: VerdictKind::Undetermined,
            reasons: notes,
            witness: None,
            negative_braiding: negative,
        })
    }

    fn uniform_even_type_note(&self) -> Option<Reason> {
        let t = self.base().as_perm()?.cycle_type();
        let lengths: Vec<usize> = t.lengths().into_iter().filter(|&l| l > 1).collect();
        let uniform = t.m(1) == 0 && !lengths.is_empty() && lengths.iter().all_equal() && lengths[0].is_multiple_of(2);
        uniform.then(|| {
            Reason::new(
                Rule::Exhausted,
                format!("finer criteria for type ({}^{}) classes are not implemented", lengths[0], lengths.len()),
            )
        })
    }

    /// Diagonal subspaces over every maximal abelian subrack; principal
    /// subsets are tried when a whole clique is not of Cartan type.
    fn subrack_rule(&self, module: &YDModule) -> Result<SubrackOutcome> {
        let subs = match abelian_subracks(&self.class, true) {
            Ok(s) => s,
            Err(Error::SubrackBoundExceeded { size, bound }) => {
                return Ok(SubrackOutcome::NoConclusion(Reason::new(
                    Rule::SubrackCartan,
                    format!("skipped: class of size {size} exceeds the subrack bound {bound}"),
                )))
            }
            Err(e) => return Err(e),
        };
        let mut finite = 0usize;
        let mut non_cartan = 0usize;
        for s in &subs {
            for q in diagonal_subspace(module, &s.indices)? {
                match cartan_from_q(&q) {
                    CartanOutcome::Cartan(a) => {
                        if !is_finite_type(&a).finite {
                            return Ok(SubrackOutcome::Infinite(
                                subrack_reason(&q),
                                subrack_witness(&q, &a.to_string()),
                            ));
                        }
                        finite += 1;
                    }
                    CartanOutcome::InfiniteImmediately { index } => {
                        let line = q.principal(&[index]);
                        return Ok(SubrackOutcome::Infinite(
                            Reason::new(Rule::SubrackCartan, "diagonal point with q = 1"),
                            subrack_witness(&line, "[[2]]"),
                        ));
                    }
                    CartanOutcome::NotCartanType { .. } => {
                        non_cartan += 1;
                        if q.size() > SUBSET_SEARCH_LIMIT {
                            continue;
                        }
                        for k in (2..q.size()).rev() {
                            for idx in (0..q.size()).combinations(k) {
                                let sub = q.principal(&idx);
                                if let CartanOutcome::Cartan(a) = cartan_from_q(&sub) {
                                    if !is_finite_type(&a).finite {
                                        return Ok(SubrackOutcome::Infinite(
                                            subrack_reason(&sub),
                                            subrack_witness(&sub, &a.to_string()),
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(SubrackOutcome::NoConclusion(Reason::new(
            Rule::SubrackCartan,
            format!(
                "{} maximal abelian subracks: {finite} finite-type and {non_cartan} non-Cartan diagonal subspaces",
                subs.len()
            ),
        )))
    }

    /// The whole module is an exterior algebra braiding: `c(u ⊗ w) = −w ⊗ u`
    /// on a central class, or a commutative class with one-dimensional `ρ`
    /// and negative diagonal data. The dimension is confirmed by the
    /// Hilbert series when the budget allows.
    fn exterior_rule(&self, module: &YDModule, notes: &mut Vec<Reason>) -> Result<Option<(Reason, u128, String)>> {
        if !self.class.is_commutative() {
            return Ok(None);
        }
        let m = self.class.len();
        let deg = module.degree();
        let minus = crate::cyclo::CycloMatrix::scalar(module.rep_degree(), &crate::cyclo::CycloNumber::from_integer(1, -1));
        let flip = (0..m).all(|i| (0..m).all(|j| module.gamma_image(i, j) == &minus));
        let candidate = if flip {
            let q = QMatrix::new(vec![vec![RootOfUnity::minus_one(); deg]; deg]);
            Some((q, "c(u ⊗ w) = -w ⊗ u on the whole module"))
        } else if module.rep_degree() == 1 {
            let all: Vec<usize> = (0..m).collect();
            let q = diagonal_subspace(module, &all)?.remove(0);
            q.is_negative().then_some((q, "whole module diagonal with q_ii = -1, q_ij q_ji = 1"))
        } else {
            None
        };
        let Some((q, what)) = candidate else {
            return Ok(None);
        };
        let theta = q.size();
        let dim = 1u128 << theta;
        let cap = self.options.max_degree.unwrap_or(theta + 1).max(theta + 1);
        let witness = match nichols_hilbert_prefix(&q, cap, self.options.budget) {
            Ok(h) if h.total() == Some(dim) => format!("Q = {q}, Hilbert series {:?}", h.coeffs),
            Ok(h) => {
                notes.push(Reason::new(
                    Rule::ExteriorAlgebra,
                    format!("Hilbert series {:?} disagrees with 2^{theta}", h.coeffs),
                ));
                return Ok(None);
            }
            Err(Error::BudgetExceeded { work, budget }) => {
                notes.push(Reason::new(
                    Rule::ExteriorAlgebra,
                    format!("Hilbert confirmation skipped: work {work} exceeds budget {budget}"),
                ));
                format!("Q = {q}")
            }
            Err(e) => return Err(e),
        };
        Ok(Some((Reason::new(Rule::ExteriorAlgebra, format!("{what}, dim = 2^{theta}")), dim, witness)))
    }
}

enum SubrackOutcome {
    Infinite(Reason, String),
    NoConclusion(Reason),
}

fn subrack_reason(q: &QMatrix) -> Reason {
    Reason::new(
        Rule::SubrackCartan,
        format!("diagonal subspace of rank {} of Cartan type, not of finite type", q.size()),
    )
}

fn subrack_witness(q: &QMatrix, a: &str) -> String {
    let v = q
        .vector
        .as_ref()
        .map(|v| format!(" v = ({})", v.join(", ")))
        .unwrap_or_default();
    format!("subrack {:?}{v}, Q = {q}, A = {a}", q.subrack)
}

/// Screens `M(O, ρ)` where `O` is the class of `class.base()` in `group`.
pub fn screen(group: &FiniteGroup, class: &ConjugacyClass, rho: &Irrep) -> Result<Verdict> {
    ClassContext::new(group, class.clone())?.screen(rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{abelian_irreps, irreps, parse_rep};

    fn context<'g>(g: &'g FiniteGroup, s: &str) -> ClassContext<'g> {
        let class = g.conjugacy_class(&g.parse_element(s).unwrap()).unwrap();
        ClassContext::new(g, class).unwrap()
    }

    #[test]
    fn seven_cycle_needs_no_rep() {
        let a7 = FiniteGroup::alternating(7).unwrap();
        let ctx = context(&a7, "(1 2 3 4 5 6 7)");
        assert!(!ctx.reality().is_real);
        for q in RootOfUnity::all_of_order_dividing(7).into_iter().filter(|q| !q.is_one()) {
            let (reason, witness) = ctx.rep_free(q, false).unwrap();
            assert_eq!(reason.rule, Rule::PowerTriple);
            assert!(witness.unwrap().starts_with("j = 2,"));
        }
    }

    #[test]
    fn minus_one_on_an_even_real_class_is_left_open() {
        let d5 = FiniteGroup::dihedral(5).unwrap();
        let ctx = context(&d5, "x");
        assert!(ctx.rep_free(RootOfUnity::minus_one(), false).is_none());
        let sgn = &abelian_irreps(ctx.centralizer()).unwrap()[1];
        let v = ctx.screen(sgn).unwrap();
        assert_eq!(v.kind, VerdictKind::Undetermined);
        assert!(v.negative_braiding);
        assert_eq!(v.decisive_rule(), None);
    }

    #[test]
    fn central_flip_is_an_exterior_algebra() {
        let d6 = FiniteGroup::dihedral(6).unwrap();
        let ctx = context(&d6, "y^3");
        let two_dim = irreps(ctx.centralizer()).unwrap().into_iter().find(|r| r.degree() == 2).unwrap();
        let v = ctx.screen(&two_dim).unwrap();
        assert_eq!(v.kind, VerdictKind::FiniteDim(4));
        assert_eq!(v.decisive_rule(), Some(Rule::ExteriorAlgebra));
        assert!(v.witness.unwrap().ends_with("Hilbert series [1, 2, 1, 0]"));
    }

    #[test]
    fn unconfirmed_exterior_dimension_is_noted() {
        let d6 = FiniteGroup::dihedral(6).unwrap();
        let class = d6.conjugacy_class(&d6.parse_element("y^3").unwrap()).unwrap();
        let options = ScreenOptions {
            budget: 1,
            ..ScreenOptions::default()
        };
        let ctx = ClassContext::with_options(&d6, class, options).unwrap();
        let two_dim = irreps(ctx.centralizer()).unwrap().into_iter().find(|r| r.degree() == 2).unwrap();
        let v = ctx.screen(&two_dim).unwrap();
        assert_eq!(v.kind, VerdictKind::FiniteDim(4));
        assert!(v.reasons.iter().any(|r| r.detail.contains("exceeds budget 1")));
    }

    #[test]
    fn a5_double_transpositions_fall_to_the_triangle() {
        let a5 = FiniteGroup::alternating(5).unwrap();
        let ctx = context(&a5, "(1 2)(3 4)");
        let rho = parse_rep(ctx.centralizer(), "sgn⊗eps").unwrap();
        let v = ctx.screen(&rho).unwrap();
        assert!(v.is_infinite());
        assert_eq!(v.decisive_rule(), Some(Rule::SubrackCartan));
        assert!(v.witness.unwrap().ends_with("A = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]"));
    }

    #[test]
    fn subrack_witness_holds_up() {
        let a6 = FiniteGroup::alternating(6).unwrap();
        let ctx = context(&a6, "(1 2)(3 4)");
        let rho = irreps(ctx.centralizer()).unwrap().into_iter().find(|r| r.degree() == 2).unwrap();
        let v = ctx.screen(&rho).unwrap();
        assert_eq!(v.decisive_rule(), Some(Rule::SubrackCartan));
        let module = build_yd_module(ctx.class(), &rho).unwrap();
        let witnessed = abelian_subracks(ctx.class(), true)
            .unwrap()
            .iter()
            .flat_map(|s| diagonal_subspace(&module, &s.indices).unwrap())
            .any(|q| match cartan_from_q(&q) {
                CartanOutcome::Cartan(a) => !is_finite_type(&a).finite && v.witness.as_ref().unwrap().contains(&q.to_string()),
                _ => false,
            });
        assert!(witnessed);
    }

    #[test]
    fn four_cycle_times_transposition_stays_open() {
        let a6 = FiniteGroup::alternating(6).unwrap();
        let ctx = context(&a6, "(1 2)(3 4 5 6)");
        let reps = irreps(ctx.centralizer()).unwrap();
        let open: Vec<Verdict> = reps.iter().map(|r| ctx.screen(r).unwrap()).filter(|v| !v.is_infinite()).collect();
        assert_eq!(open.len(), 1);
        assert!(open[0].negative_braiding);
        assert_eq!(open[0].summary(), "undetermined (negative braiding)");
    }

    #[test]
    fn foreign_rep_is_rejected() {
        let a5 = FiniteGroup::alternating(5).unwrap();
        let ctx = context(&a5, "(1 2 3)");
        let other = context(&a5, "(1 2)(3 4)");
        let rho = &irreps(other.centralizer()).unwrap()[0];
        assert_eq!(ctx.screen(rho).unwrap_err(), Error::DomainMismatch);
    }

    #[test]
    fn screening_is_deterministic() {
        let a6 = FiniteGroup::alternating(6).unwrap();
        let ctx = context(&a6, "(1 2)(3 4)");
        for rho in irreps(ctx.centralizer()).unwrap() {
            assert_eq!(ctx.screen(&rho).unwrap(), ctx.screen(&rho).unwrap());
        }
    }
}
