use thiserror::Error;

/// Errors raised anywhere in the screening pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed group spec `{0}`")]
    MalformedGroupSpec(String),
    #[error("group of order {order} exceeds the enumeration bound {bound}")]
    SizeBoundExceeded { order: u128, bound: u128 },
    #[error("malformed element `{0}`")]
    MalformedElement(String),
    #[error("element {0} is not in the group")]
    ElementNotInGroup(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cycle type {0} is odd")]
    OddParity(String),
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("no irreducible representations available for centralizer {0}")]
    UnsupportedCentralizer(String),
    #[error("matrix is not scalar on the base point")]
    NotScalar,
    #[error("element {0} does not normalize the subgroup")]
    NotNormalizing(String),
    #[error("subgroup index is {0}, expected 2")]
    IndexNotTwo(usize),
    #[error("representation domain does not match the centralizer of the base point")]
    DomainMismatch,
    #[error("subrack is not abelian")]
    NotAbelianSubrack,
    #[error("class of size {size} exceeds the subrack search bound {bound}")]
    SubrackBoundExceeded { size: usize, bound: usize },
    #[error("symmetrizer work {work} exceeds the budget {budget}")]
    BudgetExceeded { work: u128, budget: u128 },
    #[error("matrix does not have finite order dividing {0}")]
    NotFiniteOrder(u32),
    #[error("matrices do not pairwise commute")]
    NonCommuting,
    #[error("representation is not multiplicative: {0}")]
    NotMultiplicative(String),
    #[error("unknown representation `{0}`")]
    UnknownRep(String),
}

pub type Result<T> = std::result::Result<T, Error>;
