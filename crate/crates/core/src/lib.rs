//! Exact computation with double monomial quasisymmetric functions
//! `M_alpha(x, y)` and the structure coefficients of their products.
//!
//! The modules build on each other bottom-up:
//!
//! - [`poly`]: sparse integer polynomials in `x1, x2, ...` and `y1, y2, ...`
//! - [`compositions`]: compositions, order-preserving injections, overlapping shuffles
//! - [`qsym`]: truncated `M_alpha(x, y)`, quasisymmetry, expansion in the `M` basis
//! - [`tableaux`]: one-row skew edge-labeled tableaux and skyline stacks
//! - [`lrcalc`]: structure coefficients `c^gamma_{alpha,beta}` and oracle verification
//! - [`cli`]: the `dqsym` command-line tool
//!
//! ```
//! use dqsym::{product_expand, Composition, WeightConvention};
//!
//! let one: Composition = "1".parse().unwrap();
//! let e = product_expand(&one, &one, WeightConvention::OracleConsistent);
//! assert_eq!(e.coefficient(&"1,1".parse().unwrap()).to_string(), "2");
//! assert_eq!(e.coefficient(&one).to_string(), "-y1 + y2");
//! ```

pub mod cli;
pub mod compositions;
pub mod error;
pub mod lrcalc;
pub mod poly;
pub mod qsym;
pub mod tableaux;

pub use compositions::{Composition, OrderedInjection, WeakComposition};
pub use error::{CompositionError, PolyError, QsymError, TableauError};
pub use lrcalc::{product_expand, structure_coefficient, verify_expansion, Verification};
pub use poly::{Monomial, Poly, Var};
pub use qsym::{double_monomial, expand_in_m, Expansion, TruncationContext};
pub use tableaux::{SkewEdgeTableau, SkylineTableau, WeightConvention};
