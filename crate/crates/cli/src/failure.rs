use std::fmt;

use solvlie::attached::float::FloatError;
use solvlie::attached::AttachedError;
use solvlie::catalog::CatalogError;
use solvlie::curvature::CurvatureError;
use solvlie::iwasawa::IwasawaError;
use solvlie::lie::LieError;

/// A failed command, classified by exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Exit 1: unreadable input, unknown names, bad flags.
    Input(String),
    /// Exit 2: the algebra or subset does not meet the requirements.
    Validation(String),
    /// Exit 3: two routes to the same fact disagree.
    Violation(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Validation(_) => 2,
            Failure::Violation(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) => write!(f, "input error: {m}"),
            Failure::Validation(m) => write!(f, "validation failed: {m}"),
            Failure::Violation(m) => write!(f, "internal consistency violation (this is a bug): {m}"),
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl From<IwasawaError> for Failure {
    fn from(e: IwasawaError) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl From<CurvatureError> for Failure {
    fn from(e: CurvatureError) -> Self {
        match e {
            CurvatureError::Inconsistent(m) => Failure::Violation(m),
            CurvatureError::Lie(e) => e.into(),
        }
    }
}

impl From<AttachedError> for Failure {
    fn from(e: AttachedError) -> Self {
        match e {
            AttachedError::NotProper => Failure::Input("lambda-prime must be a proper subset of the simple roots".into()),
            AttachedError::BadSubset(_) => Failure::Input(e.to_string()),
            AttachedError::Inadmissible(_) => Failure::Validation(e.to_string()),
            AttachedError::Inconsistent(m) | AttachedError::TheoremViolation(m) => Failure::Violation(m),
            AttachedError::Iwasawa(e) => e.into(),
            AttachedError::Curvature(e) => e.into(),
            AttachedError::Lie(e) => e.into(),
        }
    }
}

impl From<FloatError> for Failure {
    fn from(e: FloatError) -> Self {
        Failure::Validation(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_the_error_class() {
        assert_eq!(Failure::from(AttachedError::NotProper).code(), 1);
        assert_eq!(Failure::from(AttachedError::Inadmissible("w".into())).code(), 2);
        assert_eq!(Failure::from(IwasawaError::NotRationalSplit).code(), 2);
        assert_eq!(Failure::from(AttachedError::TheoremViolation("t".into())).code(), 3);
        assert_eq!(Failure::from(CurvatureError::Inconsistent("c".into())).code(), 3);
        assert_eq!(Failure::from(CatalogError::UnknownExample("x".into())).code(), 1);
    }
}
