use thiserror::Error;

/// Syntax error in one of the text grammars, with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        Self { pos, msg: msg.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown variable `{name}` at {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("homogenization degree {d} is below the total degree {degree}")]
    DegreeTooSmall { d: u32, degree: u32 },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("translation point has {got} coordinates, expected {expected}")]
    PointLength { got: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NewtonError {
    #[error("support restricted to the coordinate subset is empty")]
    EmptySupport,
    #[error("points do not lie on a common level set of the covector")]
    NotCoplanar,
    #[error("covector must be primitive with positive entries")]
    BadCovector,
    #[error("support is not convenient: no pure power of variable {0}")]
    NotConvenient(usize),
    #[error("degenerate input: mixed volume coefficient V_{j} = {value} is not a nonnegative integer")]
    NonIntegralMixedVolume { j: usize, value: String },
    #[error("dimension mismatch")]
    Dimension,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GermError {
    #[error("germ does not vanish at the origin")]
    NonzeroAtOrigin,
    #[error("germ is identically zero")]
    ZeroGerm,
    #[error(transparent)]
    Newton(#[from] NewtonError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: bad zeta: {source}")]
    Zeta { line: usize, source: ParseError },
    #[error("line {line}: duplicate stratum label `{label}`")]
    DuplicateLabel { line: usize, label: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Germ(#[from] GermError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
