//! Bidiagonal and symmetric tridiagonal matrix types, the operations that
//! connect them (Gram product, Golub–Kahan doubling, exact bidiagonal
//! inversion) and the closed-form determinant identities of the ensemble.

mod bidiagonal;
mod dense;
mod identities;
mod tridiagonal;

pub use bidiagonal::{double, gram, invert_lower_bidiagonal, Bidiagonal, Orientation};
pub use dense::DenseMatrix;
pub use identities::{det_identities, DetIdentities};
pub use tridiagonal::SymTridiagonal;
