//! Error type shared by every fallible operation in the crate.

use core::fmt;

/// Which bracket relation of a candidate triple failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleRelation {
    /// [X, Y] != H
    XY,
    /// [H, X] != 2X
    HX,
    /// [H, Y] != -2Y
    HY,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operands live over different coefficient fields or variable counts.
    RingMismatch,
    /// Division by the zero polynomial.
    DivisionByZero,
    /// Exact division was requested but the divisor does not divide.
    NotDivisible,
    /// The operation decides ideal or comaximality questions only in at most
    /// one variable; supply a certificate instead.
    MultivariateUnsupported,
    /// A matrix inverse was requested but the determinant is not a unit.
    NotInvertibleOverR,
    /// A nonzero matrix was required.
    ZeroElement,
    /// The three bracket relations of an sl2-triple do not all hold.
    NotATriple(TripleRelation),
    /// The matrix does not square to the identity.
    NotInvolution,
    /// The matrix does not square to zero.
    NotNilpotent,
    /// Both off-diagonal coordinates vanish, so the general factorization
    /// does not apply; use the explicit degenerate constructions.
    DegenerateCase,
    /// A supplied Bezout certificate does not certify the required identity.
    BadCertificate,
    /// The two target polynomials generate a proper ideal.
    NotComaximal,
    /// The quadratic invariant is not a nonzero square constant, so no
    /// conjugate is an exact diagonal with entries in the field.
    NotAdDiagonalizable,
    /// The element lies in no conjugate of the split form.
    NotMember,
    /// Membership is undecided: the quadratic invariant is a nonsquare unit,
    /// so a quadratic field extension would be needed.
    RequiresSquareRoot,
    /// The given images violate a forced linear constraint of a derivation.
    NotADerivation(&'static str),
    /// Diagonal generator images are inconsistent with the inner part.
    InconsistentDiagonalData,
    /// An image that must become diagonal after standardization did not.
    NotDiagonalAfterStandardization,
    /// Generator images do not describe an invertible substitution, or no
    /// inverse could be derived.
    NotInvertibleSubstitution,
    /// The modulus is not an odd prime.
    BadModulus,
    /// A quotient that theory forces to be a unit was not; indicates either
    /// corrupted input accepted by earlier checks or an arithmetic bug.
    InternalNonUnitQuotient,
    /// A matrix that theory forces into a fixed shape missed it.
    InternalShapeViolation,
    /// Any other internal consistency check failed.
    Internal(&'static str),
}

impl Error {
    /// Stable identifier used by front ends.
    pub fn name(&self) -> &'static str {
        match self {
            Error::RingMismatch => "RingMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotDivisible => "NotDivisible",
            Error::MultivariateUnsupported => "MultivariateUnsupported",
            Error::NotInvertibleOverR => "NotInvertibleOverR",
            Error::ZeroElement => "ZeroElement",
            Error::NotATriple(_) => "NotATriple",
            Error::NotInvolution => "NotInvolution",
            Error::NotNilpotent => "NotNilpotent",
            Error::DegenerateCase => "DegenerateCase",
            Error::BadCertificate => "BadCertificate",
            Error::NotComaximal => "NotComaximal",
            Error::NotAdDiagonalizable => "NotAdDiagonalizable",
            Error::NotMember => "NotMember",
            Error::RequiresSquareRoot => "RequiresSquareRoot",
            Error::NotADerivation(_) => "NotADerivation",
            Error::InconsistentDiagonalData => "InconsistentDiagonalData",
            Error::NotDiagonalAfterStandardization => "NotDiagonalAfterStandardization",
            Error::NotInvertibleSubstitution => "NotInvertibleSubstitution",
            Error::BadModulus => "BadModulus",
            Error::InternalNonUnitQuotient => "InternalNonUnitQuotient",
            Error::InternalShapeViolation => "InternalShapeViolation",
            Error::Internal(_) => "Internal",
        }
    }

    /// True for failures of a mathematical hypothesis on otherwise
    /// well-formed input, as opposed to malformed requests.
    pub fn is_hypothesis_failure(&self) -> bool {
        !matches!(
            self,
            Error::RingMismatch | Error::MultivariateUnsupported | Error::BadModulus
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch => write!(f, "operands belong to different rings"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotDivisible => write!(f, "exact division failed"),
            Error::MultivariateUnsupported => {
                write!(f, "decision procedure limited to at most one variable")
            }
            Error::NotInvertibleOverR => write!(f, "determinant is not a unit"),
            Error::ZeroElement => write!(f, "nonzero element required"),
            Error::NotATriple(rel) => {
                let which = match rel {
                    TripleRelation::XY => "[X,Y] = H",
                    TripleRelation::HX => "[H,X] = 2X",
                    TripleRelation::HY => "[H,Y] = -2Y",
                };
                write!(f, "bracket relation {which} fails")
            }
            Error::NotInvolution => write!(f, "matrix does not square to the identity"),
            Error::NotNilpotent => write!(f, "matrix does not square to zero"),
            Error::DegenerateCase => write!(f, "off-diagonal coordinates vanish"),
            Error::BadCertificate => write!(f, "certificate does not certify the identity"),
            Error::NotComaximal => write!(f, "target polynomials are not comaximal"),
            Error::NotAdDiagonalizable => {
                write!(f, "quadratic invariant is not a nonzero square constant")
            }
            Error::NotMember => write!(f, "element is not a member"),
            Error::RequiresSquareRoot => {
                write!(f, "membership needs a square root outside the field")
            }
            Error::NotADerivation(what) => write!(f, "derivation constraint violated: {what}"),
            Error::InconsistentDiagonalData => {
                write!(f, "diagonal generator images are inconsistent")
            }
            Error::NotDiagonalAfterStandardization => {
                write!(f, "image is not diagonal after standardization")
            }
            Error::NotInvertibleSubstitution => {
                write!(f, "generator images are not an invertible substitution")
            }
            Error::BadModulus => write!(f, "modulus must be an odd prime"),
            Error::InternalNonUnitQuotient => {
                write!(f, "internal: quotient forced to be a unit was not")
            }
            Error::InternalShapeViolation => {
                write!(f, "internal: matrix missed its forced shape")
            }
            Error::Internal(what) => write!(f, "internal: {what}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
