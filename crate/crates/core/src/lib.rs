//! Exact invariants of isolated hypersurface singularities of Brieskorn–Pham
//! type `x_1^{a_1} + ... + x_{m+1}^{a_{m+1}}`.
//!
//! Everything here is computed with unbounded integers and exact rationals:
//!
//! * [`singularity`]: weight systems, amplitude, Milnor number, Jacobian bases.
//! * [`monodromy`]: integral monodromy, its cyclotomic characteristic
//!   polynomial, and the topology of the link.
//! * [`smith`]: Smith normal form over the integers.
//! * [`maslov`]: Maslov and Conley–Zehnder indices of diagonal unitary paths.
//! * [`hochschild`]: equivariant Hochschild cohomology via γ-monomials.
//! * [`resolutions`]: small-resolution criteria for threefold cDV points.

pub mod error;
pub mod hochschild;
pub mod maslov;
pub mod matrix;
pub mod monodromy;
pub mod poly;
pub mod resolutions;
pub mod singularity;
pub mod smith;

pub use error::{Error, Result};
pub use matrix::IntegerMatrix;
pub use singularity::{DiagonalSingularity, InvertibleMatrixSingularity, WeightSystem};

/// Size caps guarding the enumerations and dense matrix constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest Milnor number for which a dense monodromy matrix is built.
    pub matrix: u64,
    /// Largest number of root tuples enumerated for a characteristic polynomial.
    pub enumeration: u64,
    /// Largest group order `∏ a_i` enumerated for Hochschild cohomology.
    pub group: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            matrix: 4096,
            enumeration: 1_000_000,
            group: 1_000_000,
        }
    }
}
