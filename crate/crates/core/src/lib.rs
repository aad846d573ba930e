//! Exact characteristic-class calculus for real representations of U(2) and
//! decision procedures for structure-group reductions of rank 6 and 7
//! bundles over closed spin^c 6- and 7-manifolds.
//!
//! The algebra is generic over an exact integer type (see [`scalar::Scalar`]);
//! the aliases below fix it to `BigInt`.

pub mod charclass;
pub mod cohomodel;
pub mod decide;
pub mod fga;
pub mod reps;
pub mod scalar;

pub use reps::{parse_rep, RealRep, Summand};

pub type Int = num_bigint::BigInt;
pub type Group = fga::FgaGroup<Int>;
pub type Element = fga::FgaElement<Int>;
pub type Hom = fga::FgaHom<Int>;
pub type Poly = charclass::ClassPolynomial<Int>;
pub type Profile = charclass::CoeffProfile<Int>;
pub type Model = cohomodel::CohomologyModel<Int>;
pub type Manifold = cohomodel::SpincManifold<Int>;
pub type Bundle = cohomodel::BundleDescriptor<Int>;
pub type Decision = decide::Decision<Int>;
pub use decide::Verdict;
