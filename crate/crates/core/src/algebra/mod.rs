//! Exact arithmetic over F_q and small extensions, dense univariate
//! polynomials, Newton's identities, and Vandermonde utilities.

mod ext;
mod field;
pub mod linalg;
mod newton;
mod poly;

pub use ext::{find_irreducible, ExtensionField, MAX_EXTENSION_DEGREE};
pub use field::{canonical_ordering, FieldElement, PrimeModulus};
pub use newton::{
    elementary_of_multiset, elementary_to_power_sums, power_sums_of_multiset,
    power_sums_to_elementary,
};
pub use poly::{interpolate, Polynomial};
