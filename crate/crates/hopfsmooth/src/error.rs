//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("fraction literals are only valid over the rationals")]
    FractionOutsideRationals { pos: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime modulus {0} exceeds the supported bound 2^61")]
    ModulusTooLarge(u64),
    #[error("operation requires a field coefficient ring, got {0}")]
    NotAField(String),
    #[error("coefficient rings do not match: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("polynomial rings do not match")]
    RingMismatch,
    #[error("monomial dimensions do not match: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("monomial rank must be positive")]
    ZeroRank,
    #[error("monomial rank overflows u64")]
    RankOverflow,
    #[error("term of rank {rank} exceeds the bound d = {bound}")]
    UnboundedTerm { rank: u64, bound: u64 },
    #[error("denominator divisible by {0}; cannot reduce modulo {0}")]
    BadReductionDenominator(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero input where a nonzero polynomial is required")]
    ZeroInput,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("basis has not been verified as a Groebner basis")]
    UnverifiedBasis,
    #[error("ideal is the unit ideal")]
    UnitIdeal,
    #[error("attached basis generates a different ideal")]
    BasisMismatch,
    #[error("ideal is not zero-dimensional over the parameter field")]
    NotZeroDimensional,
    #[error("no splitting element with invertible leading coefficient found")]
    NoSplittingElement,
    #[error("identity point does not lie on the scheme")]
    IdentityNotOnScheme,
    #[error("identity lies on {0} isolated components; expected exactly one")]
    AmbiguousComponent(usize),
    #[error("point does not satisfy the chart relations")]
    PointOffChart,
    #[error("localizer vanishes at the identity over the given point")]
    LocalizerVanishesAtIdentity,
    #[error("quadruple violates Hopf axiom: {0}")]
    InvalidQuadruple(String),
    #[error("formula parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("formula size ceiling exceeded: {0}")]
    FormulaSizeLimit(String),
    #[error("formula is not evaluable: {0}")]
    UnsupportedQuantifierShape(String),
    #[error("assignment is missing a value for free variable `{0}`")]
    MissingAssignment(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("invalid input file: {0}")]
    BadInputFile(String),
}

impl Error {
    /// Process exit code for the CLI: 2 input error, 3 resource limit,
    /// 4 engine invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceLimit(_) | Error::RankOverflow | Error::FormulaSizeLimit(_) => 3,
            Error::NoSplittingElement | Error::AmbiguousComponent(_) | Error::BasisMismatch => 4,
            _ => 2,
        }
    }
}
