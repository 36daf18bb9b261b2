use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("duplicate variable in declaration")]
    DuplicateVariable,
    #[error("empty system")]
    EmptySystem,
    #[error("zero polynomial in system")]
    ZeroPolynomial,
    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),
    #[error("zero operand")]
    ZeroOperand,
    #[error("degree too low for discriminant")]
    DegreeTooLow,
    #[error("gcd of zeros")]
    GcdOfZeros,
    #[error("polynomial `{0}` is not univariate in `{1}`")]
    NotUnivariate(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootsError {
    #[error("identically zero has infinitely many roots")]
    ZeroPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectionError {
    #[error("cannot project an empty level")]
    EmptyLevel,
    #[error("ordering {ordering} is not a permutation of the system variables {{{variables}}}")]
    OrderingMismatch { ordering: String, variables: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeuristicError {
    #[error("{count} variables exceeds the enumeration cap of {cap}")]
    TooManyVariables { count: usize, cap: usize },
    #[error("no variables to order")]
    NoVariables,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("empty candidate list")]
    EmptyCandidates,
    #[error("unknown heuristic `{0}` (expected brown, sotd or ndrr)")]
    UnknownHeuristic(String),
    #[error(transparent)]
    Projection(#[from] ProjectionError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("missing or malformed header (expected `problem,ordering,cells,timeout`)")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("duplicate row for problem `{problem}` ordering `{ordering}`")]
    DuplicateRow { problem: String, ordering: String },
    #[error("incomplete orderings for problem `{problem}`: {found} of {expected}")]
    IncompleteOrderings {
        problem: String,
        found: usize,
        expected: usize,
    },
    #[error("problem `{problem}` mixes orderings over different variable sets")]
    MixedVariables { problem: String },
    #[error("line {line}: cells present with timeout=1")]
    CellsWithTimeout { line: usize },
    #[error("line {line}: cells missing with timeout=0")]
    MissingCells { line: usize },
    #[error("pick for problem `{problem}` refers to missing row `{ordering}`")]
    DanglingPick { problem: String, ordering: String },
    #[error("no {heuristic} pick for problem `{problem}`")]
    MissingPick { heuristic: String, problem: String },
    #[error("pick for problem `{problem}` timed out on a problem with no timeouts")]
    PickTimedOut { problem: String },
    #[error("cannot summarize an empty list")]
    EmptyInput,
    #[error("unknown report format `{0}` (expected text, json or csv)")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("syntax error: negative exponent")]
    NegativeExponent,
    #[error("syntax error: exponent must be a non-negative integer literal")]
    NonLiteralExponent,
    #[error("exponent too large")]
    ExponentOverflow,
    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),
    #[error("variable `{0}` declared twice")]
    DuplicateDeclaration(String),
    #[error("polynomial simplifies to zero")]
    ZeroPolynomial,
    #[error("empty system")]
    EmptySystem,
}
