use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable indices are 1-based; found index 0")]
    ZeroIndex,
    #[error("coefficient {0:?} is not a decimal integer")]
    BadCoefficient(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("invalid part {token:?} at position {position}: expected a positive integer")]
    InvalidPart { position: usize, token: String },
    #[error("composition parts must be positive, found 0")]
    ZeroPart,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QsymError {
    #[error(
        "truncation ({n_x} x-variables, {n_y} y-variables) too small for composition {composition}"
    )]
    TruncationTooSmall {
        composition: String,
        n_x: usize,
        n_y: u32,
    },
    #[error("generator factor {index} has a nonzero constant term")]
    NotInMaximalIdeal { index: usize },
    #[error("generator factor {index} must be a polynomial in x1 alone")]
    NotUnivariate { index: usize },
    #[error("{factors} generator factors exceed the {n_x} available x-variables")]
    TooManyFactors { factors: usize, n_x: usize },
    #[error("polynomial is not in the span of the truncated double monomial basis (stuck at x-degree {degree})")]
    NotInSpan { degree: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("box {index} is not one of the {empty} empty boxes")]
    BoxOutOfRange { index: u32, empty: u32 },
    #[error("edge label {label} outside 1..={empty}")]
    EdgeOutOfRange { label: u32, empty: u32 },
    #[error("shape {c}/{a} has more empty boxes than boxes")]
    BadShape { c: u32, a: u32 },
}
