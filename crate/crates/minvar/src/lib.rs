//! Exact computational workbench for modular invariant theory of finite groups.
//!
//! The crate builds finite groups from generator closures, equips them with
//! matrix representations over finite fields, computes graded invariant
//! spaces by exact linear algebra, and certifies the minimal degrees at which
//! invariants cut out the origin (the sigma and delta numbers) through
//! Groebner-basis radical membership over the algebraic closure.
//!
//! Layers, bottom up:
//!
//! * [`gf`] — arithmetic in `F_p` and `F_{p^k}`, roots of unity
//! * [`linalg`] — dense matrices and echelon reduction over a field
//! * [`group`] — groups as Cayley tables from generator closure
//! * [`rep`] — matrix representations and module constructions
//! * [`poly`] — sparse multivariate polynomials, grevlex order, group action
//! * [`inv`] — graded invariant bases, transfer, relative constructions
//! * [`gb`] — Buchberger engine and the origin-certification predicate
//! * [`sigdel`] — sigma/delta degree certificates and bound reports
//! * [`repspec`]/[`cli`] — the file format and command-line surface

pub mod acceptance;
pub mod cli;
pub mod gb;
pub mod gf;
pub mod group;
pub mod inv;
pub mod linalg;
pub mod poly;
pub mod rep;
pub mod repspec;
pub mod sigdel;

use std::fmt;

/// Resource caps. Every paper-scale computation fits far below the defaults;
/// hitting a cap is treated as a signal that an instance is outside desk
/// scale (or that a closure is running away), never silently truncated.
#[derive(Clone, Debug)]
pub struct Limits {
    /// Maximum group order a closure may reach.
    pub group_order: usize,
    /// Maximum module dimension a constructor may produce.
    pub module_dim: usize,
    /// Maximum number of monomials enumerated in one graded piece.
    pub monomials: usize,
    /// Maximum number of Groebner basis elements.
    pub basis_elements: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            group_order: 512,
            module_dim: 64,
            monomials: 1_000_000,
            basis_elements: 100_000,
        }
    }
}

/// Crate-wide error type.
#[derive(Debug)]
pub enum Error {
    /// `p` is not prime.
    NotPrime(u32),
    /// A requested root-of-unity order is divisible by the characteristic.
    RootOrderDivisibleByChar { n: u32, p: u32 },
    /// `n` does not divide `p^k - 1`, so no primitive n-th root exists.
    NoSuchRootOfUnity { n: u64 },
    /// Division by zero in a field.
    ZeroDivision,
    /// An element does not belong to the field it is used with.
    FieldMismatch(String),
    /// Multiplicative order of zero requested.
    ZeroHasNoOrder,
    /// A configured cap was exceeded; carries the cap name and its value.
    CapExceeded { what: &'static str, cap: usize },
    /// Empty generator list where at least one generator is required.
    EmptyGenerators,
    /// A claimed permutation is not a bijection on the ground set.
    NotAPermutation(String),
    /// A matrix generator is singular over the given field.
    SingularGenerator(usize),
    /// A member list is not closed under the parent group operations.
    NotASubgroup,
    /// A subgroup required to be normal is not.
    NotNormal,
    /// Two representations do not share a group where required.
    GroupMismatch,
    /// Vector or matrix dimensions disagree.
    DimensionMismatch { expected: usize, got: usize },
    /// Generator images do not extend to a group homomorphism.
    NotAHomomorphism(String),
    /// An operation requiring a monomial matrix action met a dense matrix.
    NotMonomialAction,
    /// A polynomial required to be invariant is not.
    NotInvariant(String),
    /// The group order is divisible by the characteristic (averaging impossible).
    ModularGroupOrder { order: usize, p: u32 },
    /// A generator handed to the origin check has a nonzero constant term.
    NonzeroConstantTerm(usize),
    /// A stated arithmetic precondition does not hold.
    Precondition(String),
    /// A theorem-level inequality failed: this signals an implementation bug.
    BoundViolation(String),
    /// Rep-spec file syntax or semantic error, anchored to a line.
    Parse { line: usize, msg: String },
    /// Underlying I/O failure.
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::RootOrderDivisibleByChar { n, p } => write!(
                f,
                "no primitive {n}-th root of unity in characteristic {p} ({p} divides {n})"
            ),
            Error::NoSuchRootOfUnity { n } => {
                write!(f, "{n} does not divide the multiplicative group order")
            }
            Error::ZeroDivision => write!(f, "division by zero"),
            Error::FieldMismatch(msg) => write!(f, "field mismatch: {msg}"),
            Error::ZeroHasNoOrder => write!(f, "zero has no multiplicative order"),
            Error::CapExceeded { what, cap } => write!(f, "cap exceeded: {what} (cap {cap})"),
            Error::EmptyGenerators => write!(f, "empty generator list"),
            Error::NotAPermutation(msg) => write!(f, "not a permutation: {msg}"),
            Error::SingularGenerator(i) => write!(f, "generator {i} is singular"),
            Error::NotASubgroup => write!(f, "member list is not a subgroup"),
            Error::NotNormal => write!(f, "subgroup is not normal"),
            Error::GroupMismatch => write!(f, "representations belong to different groups"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NotAHomomorphism(msg) => write!(f, "not a homomorphism: {msg}"),
            Error::NotMonomialAction => {
                write!(f, "action is not monomial (a generator mixes variables)")
            }
            Error::NotInvariant(msg) => write!(f, "polynomial is not invariant: {msg}"),
            Error::ModularGroupOrder { order, p } => {
                write!(f, "group order {order} is divisible by the characteristic {p}")
            }
            Error::NonzeroConstantTerm(i) => {
                write!(f, "generator {i} has a nonzero constant term")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::BoundViolation(msg) => write!(f, "bound violation (implementation bug): {msg}"),
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

/// Shorthand used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
