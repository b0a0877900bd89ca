use std::fmt;

/// A screening rule, in application order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// `q_ss = 1`: the line spanned by a basis vector of degree `s` has a
    /// polynomial Nichols algebra.
    TrivialSelfBraiding,
    /// `s` conjugate to `s^{-1}` forces `q_ss = −1` and `|s|` even.
    RealClass,
    /// `s, s^j, s^{j²}` distinct in the class.
    PowerTriple,
    /// `s^j ≠ s` in the class with `s^{j²} = s`.
    PowerPair,
    /// A diagonal subspace over an abelian subrack of Cartan type whose
    /// matrix is not of finite type.
    SubrackCartan,
    /// The module itself is an exterior algebra braiding.
    ExteriorAlgebra,
    Exhausted,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::TrivialSelfBraiding => "trivial-self-braiding",
            Rule::RealClass => "real-class",
            Rule::PowerTriple => "power-triple",
            Rule::PowerPair => "power-pair",
            Rule::SubrackCartan => "subrack-cartan",
            Rule::ExteriorAlgebra => "exterior-algebra",
            Rule::Exhausted => "exhausted",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reason {
    pub rule: Rule,
    pub detail: String,
}

impl Reason {
    pub fn new(rule: Rule, detail: impl Into<String>) -> Self {
        Reason {
            rule,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.detail.is_empty() {
            write!(f, "{}", self.rule)
        } else {
            write!(f, "{}: {}", self.rule, self.detail)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictKind {
    InfiniteDim,
    FiniteDim(u128),
    Undetermined,
}

impl VerdictKind {
    pub fn tag(self) -> &'static str {
        match self {
            VerdictKind::InfiniteDim => "InfiniteDim",
            VerdictKind::FiniteDim(_) => "FiniteDim",
            VerdictKind::Undetermined => "Undetermined",
        }
    }

    pub fn dimension(self) -> Option<u128> {
        match self {
            VerdictKind::FiniteDim(d) => Some(d),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// Decisive rule last; earlier entries are notes from rules that ran.
    pub reasons: Vec<Reason>,
    pub witness: Option<String>,
    pub negative_braiding: bool,
}

impl Verdict {
    pub fn infinite(reason: Reason, witness: Option<String>) -> Self {
        Verdict {
            kind: VerdictKind::InfiniteDim,
            reasons: vec![reason],
            witness,
            negative_braiding: false,
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.kind == VerdictKind::InfiniteDim
    }

    /// The rule that settled the verdict.
    pub fn decisive_rule(&self) -> Option<Rule> {
        match self.kind {
            VerdictKind::Undetermined => None,
            _ => self.reasons.last().map(|r| r.rule),
        }
    }

    pub fn rules(&self) -> Vec<Rule> {
        self.reasons.iter().map(|r| r.rule).collect()
    }

    /// Short human label, e.g. `infinite`, `finite (4)`,
    /// `undetermined (negative braiding)`.
    pub fn summary(&self) -> String {
        match self.kind {
            VerdictKind::InfiniteDim => "infinite".into(),
            VerdictKind::FiniteDim(d) if self.negative_braiding => format!("finite ({d}), negative braiding"),
            VerdictKind::FiniteDim(d) => format!("finite ({d})"),
            VerdictKind::Undetermined if self.negative_braiding => "undetermined (negative braiding)".into(),
            VerdictKind::Undetermined => "undetermined".into(),
        }
    }
}
