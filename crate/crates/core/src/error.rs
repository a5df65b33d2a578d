use thiserror::Error;

/// Errors raised by field, polynomial, code and detector operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{m} exceeds the size bound {bound}")]
    FieldTooLarge { p: u64, m: u64, bound: u64 },
    #[error("operands belong to different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("zero has no multiplicative order")]
    ZeroOrder,
    #[error("no embedding of {from} into {to}")]
    NoEmbedding { from: String, to: String },

    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("every element is a root of the zero polynomial")]
    ZeroPolynomial,
    #[error("irreducibility is undefined for constant polynomials")]
    ConstantPolynomial,
    #[error("element has multiplicative order {actual}, expected {expected}")]
    WrongOrder { expected: u64, actual: u64 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("sets live in different groups: Z_{0} vs Z_{1}")]
    ModulusMismatch(usize, usize),
    #[error("operation needs a nonempty set")]
    EmptySet,
    #[error("modulus {0} is not prime")]
    CompositeModulus(usize),

    #[error("codes differ in length or field")]
    CodeMismatch,
    #[error("enumerating {q}^{k} codewords exceeds the bound {bound}")]
    EnumerationTooLarge { q: u64, k: usize, bound: u64 },
    #[error("evaluation points are not pairwise distinct")]
    RepeatedPoint,
    #[error("column multipliers must be nonzero")]
    ZeroMultiplier,
    #[error("invalid GRS parameters: {0}")]
    InvalidGrs(String),

    #[error("gcd(n, q) = gcd({n}, {q}) is not 1")]
    NotCoprime { n: usize, q: u64 },
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("defining set is not Galois-closed: coefficient of x^{degree} in g(x) is {coefficient}, outside the base field")]
    NotGaloisClosed { degree: usize, coefficient: String },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("empty code: the defining set is all of Z_{0}")]
    EmptyCode(usize),
    #[error("degenerate code: the defining set is empty, the code is the full space F_q^{0}")]
    FullSpace(usize),

    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
