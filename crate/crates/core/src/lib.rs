//! Exact cohomology invariants of spaces of commuting tuples in compact Lie
//! groups, computed by averaging graded characters over the Weyl group.
//!
//! The engine works with the component `R_{n,G}` of `Hom(Z^n, G)` that
//! contains the identity tuple. Its rational cohomology is the
//! `W`-invariant part of `H(G/T) ⊗ H(T^n)`, and its `G`-equivariant
//! cohomology is the `W`-invariant part of `S(t*) ⊗ Λ(t*)^{⊗n}`. Both
//! Hilbert series come from class sums over `W` with exact rational
//! arithmetic:
//!
//! ```
//! use weylcoh::{cohomology, CartanType};
//!
//! let su2: CartanType = "SU(2)".parse().unwrap();
//! let p = cohomology::poincare_poly(su2, 2).unwrap();
//! assert_eq!(p.poly.to_string(), "1 + t^2 + 2*t^3");
//! ```

pub mod chartab;
pub mod cohomology;
pub mod config;
pub mod error;
pub mod partition;
pub mod poly;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use partition::Partition;
pub use poly::{ExactPoly, RationalFunction};
pub use weyl::{CartanType, ClassDescriptor, ConjClassData, Family, WeylData};
