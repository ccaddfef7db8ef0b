//! Exact arithmetic for two generalized polynomial classes, `φ^{a,b}` and
//! `ψ^{a,b}`, that contain the Fibonacci, Lucas, Pell, Fermat, Chebyshev and
//! Dickson families: generation, connection coefficients between any two
//! members, the resulting integer identities and weighted integrals, and
//! reduction of the nested radicals built from them.
//!
//! ```
//! use fibluc_core::{connect, verify_expansion, FamilyParams, rational::int};
//!
//! let fib = FamilyParams::phi(int(1), int(1)).unwrap();
//! let luc = FamilyParams::psi(int(1), int(1)).unwrap();
//! let e = connect(&fib, &luc, 6).unwrap();
//! assert!(verify_expansion(&e).equal);
//! ```

pub mod connect;
pub mod denest;
pub mod error;
pub mod expansion;
pub mod family;
pub mod golden;
pub mod hyp2f1;
pub mod integrals;
pub mod numbers;
pub mod poly;
pub mod radicals;
pub mod rational;
pub mod sample;
pub mod seq;
pub mod surd;
pub mod verify;

pub use connect::{connect, verify_expansion, VerifyReport};
pub use denest::{denest, DenestResult, DenestStatus};
pub use error::{Error, Result};
pub use expansion::{Basis, ConnExpansion, Term};
pub use family::{family_lookup, FamilyParams, FamilyTag, Kind};
pub use integrals::{IntegralKind, PiMultiple};
pub use numbers::NumberFamily;
pub use poly::Poly;
pub use radicals::NestedRadical;
pub use rational::Rational;
pub use surd::Surd;
pub use verify::{cmd_verify_all, Report, VerifyConfig};
