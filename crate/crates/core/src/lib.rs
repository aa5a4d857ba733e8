//! Exact tensor product decompositions for mixed tensors of `Gl(n|n)` and for
//! maximal atypical simple modules of `Gl(2|2)`.
//!
//! The crate is layered bottom up:
//!
//! * [`partition`]: partitions, bipartitions and Littlewood-Richardson
//!   coefficients.
//! * [`diagram`]: weight diagrams, cap matchings and the invariants
//!   `rk`, `d`, `k`.
//! * [`deligne`]: the Grothendieck ring of the interpolating category,
//!   `lift`, truncation to `Gl(n|n)` and closed decomposition formulas.
//! * [`gl22`]: K₀ of the maximal atypical block of `Gl(2|2)` and the fusion
//!   rule `S^i ⊗ S^j`.
//! * [`verify`]: self-check suites used by the `check` command.
//!
//! ```
//! use superfuse::deligne::{gl0_tensor, project_max_atypical, truncate, RtElement};
//! use superfuse::partition::Bipartition;
//!
//! let a = RtElement::basis(Bipartition::sym(2));
//! let prod = gl0_tensor(&a, &a).unwrap();
//! let shown = project_max_atypical(&truncate(&prod, 2)).to_text();
//! assert_eq!(shown, "(4) + (3,1) + (2^2) + 2 (3) + 2 (2,1) + (2)");
//! ```

pub mod deligne;
pub mod diagram;
pub mod error;
pub mod gl22;
pub mod parse;
pub mod partition;
pub mod verify;

pub use error::{Error, Result};
