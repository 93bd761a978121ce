//! Linear subspaces of an ambient rational vector space, canonically
//! represented by their annihilator equations.
//!
//! A subspace is stored as the rref matrix whose row space is the space of
//! linear forms vanishing on it. Because rref is canonical, structural
//! equality of the matrices is equality of subspaces, which makes
//! deduplication and hashing trivial.

use crate::matrix::Matrix;
use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    /// rref matrix; rows span the annihilator.
    equations: Matrix,
}

impl Subspace {
    /// Subspace cut out by the given linear forms (rows).
    pub fn from_forms(ambient: usize, forms: Vec<Vec<Rat>>) -> Self {
        let eq = Matrix::from_rows(ambient, forms).rref();
        Subspace {
            ambient,
            equations: eq,
        }
    }

    pub fn from_equations(equations: Matrix) -> Self {
        let ambient = equations.cols();
        Subspace {
            ambient,
            equations: equations.rref(),
        }
    }

    /// The whole ambient space (no equations).
    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            equations: Matrix::zero(0, ambient).rref(),
        }
    }

    /// The zero subspace.
    pub fn origin(ambient: usize) -> Self {
        Subspace {
            ambient,
            equations: Matrix::identity(ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Codimension `r(V)`.
    pub fn codim(&self) -> usize {
        self.equations.rows()
    }

    /// Dimension `delta(V)`.
    pub fn dim(&self) -> usize {
        self.ambient - self.codim()
    }

    pub fn equations(&self) -> &Matrix {
        &self.equations
    }

    pub fn is_full(&self) -> bool {
        self.codim() == 0
    }

    pub fn is_origin(&self) -> bool {
        self.dim() == 0
    }

    /// Whether `other` is contained in `self`.
    ///
    /// `other ⊆ self` iff every equation of `self` already vanishes on
    /// `other`, i.e. lies in the row space of `other.equations`.
    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        self.equations
            .iter_rows()
            .all(|row| other.equations.row_space_contains(row))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_equations(self.equations.stack(&other.equations))
    }

    /// Spanning vectors of the subspace (kernel of the equations), one per row.
    pub fn basis(&self) -> Matrix {
        self.equations.null_space()
    }

    /// Subspace sum `self + other`: annihilated exactly by the forms that
    /// vanish on both, i.e. the kernel of the stacked spanning vectors.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let span = self.basis().stack(&other.basis());
        Subspace::from_equations(span.null_space())
    }
}
