//! Closed, exception-free interval arithmetic.
//!
//! Intervals over binary floating-point formats with directed rounding,
//! sign-classified multiplication and relational division. Every operation
//! is defined for every pair of intervals and no kernel ever evaluates an
//! undefined form, so no bound is ever NaN.
//!
//! ```
//! use ival_core::{Interval, ops};
//!
//! let x = Interval::new(1.0, 2.0).unwrap();
//! let y = Interval::new(-1.0, 1.0).unwrap();
//! assert_eq!(ops::div(x, y).to_string(), "[-inf,-1] ∪ [1,inf]");
//! ```

pub mod error;
pub mod expr;
pub mod interval;
pub mod kernel;
pub mod ops;
pub mod oracle;
pub mod render;

pub use error::{Error, Result};
pub use interval::{Interval, IntervalClass};
pub use kernel::{BinaryFormat, BoundSide, RoundingDirection};
pub use ops::{add, div, div_hull, mul, negate, sub, DivResult};
pub use oracle::minifloat::{MiniFloat, MiniParams};
