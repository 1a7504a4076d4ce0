//! Points of the Grassmannian `Gr_{d,r}` in canonical form, exhaustive
//! enumeration over `F_q` via Schubert cells, and seeded sampling.
//!
//! A point is stored as the reduced row echelon form of any spanning matrix,
//! so two subspaces are equal iff their stored matrices are equal. Exhaustive
//! enumeration walks the pivot-column sets and fills the free entries with an
//! odometer, producing every RREF exactly once; the count is the Gaussian
//! binomial coefficient.

use itertools::Itertools;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};

/// A `d`-dimensional subspace of `k^r` with `1 <= d < r`, canonically
/// represented by its RREF basis matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Subspace {
    field: Field,
    r: usize,
    d: usize,
    basis: Matrix,
}

impl Subspace {
    /// Canonicalizes a spanning matrix (rows span the subspace). The rows
    /// must be linearly independent and `1 <= d < r` must hold.
    pub fn from_spanning_rows(rows: Matrix) -> Result<Subspace> {
        let r = rows.cols();
        let d = rows.rows();
        if d < 1 || d >= r {
            return Err(Error::SubspaceDimensionOutOfRange { d, r });
        }
        let rr = rows.rref();
        if rr.rank() != d {
            return Err(Error::NotLinearlyIndependent {
                expected: d,
                got: rr.rank(),
            });
        }
        Ok(Subspace {
            field: rows.field(),
            r,
            d,
            basis: rr.mat,
        })
    }

    /// Span of a single nonzero vector.
    pub fn from_vector(field: Field, alpha: &[i64]) -> Result<Subspace> {
        let m = Matrix::from_int_rows(field, 1, alpha.len(), alpha);
        Subspace::from_spanning_rows(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The canonical `d x r` RREF basis matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Basis rows as scalar tuples, for the `x_T` / `y_T` operators.
    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.d)
            .map(|i| (0..self.r).map(|j| self.basis.get(i, j).clone()).collect())
            .collect()
    }

    pub fn contains_vector(&self, v: &Matrix) -> bool {
        assert_eq!(v.cols(), 1);
        assert_eq!(v.rows(), self.r);
        let bt = self.basis.transpose();
        matches!(bt.solve(v), Ok(Some(_)))
    }
}

impl std::fmt::Display for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "span{}", self.basis)
    }
}

/// Number of points of `Gr_{d,r}(F_q)`: the Gaussian binomial coefficient
/// `prod_{i=0}^{d-1} (q^{r-i} - 1) / (q^{d-i} - 1)`.
pub fn gaussian_binomial(q: u64, d: usize, r: usize) -> u128 {
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..d {
        num *= q.pow((r - i) as u32) - 1;
        den *= q.pow((d - i) as u32) - 1;
    }
    num / den
}

/// Enumerates every point of `Gr_{d,r}(F_q)` exactly once, grouped by pivot
/// columns, in a deterministic order.
pub fn grassmannian_points(field: Field, d: usize, r: usize) -> Result<Vec<Subspace>> {
    if d < 1 || d >= r {
        return Err(Error::SubspaceDimensionOutOfRange { d, r });
    }
    let elements = field.elements()?;
    let mut out = Vec::new();
    for pivots in (0..r).combinations(d) {
        // Free slots: to the right of the row's pivot, excluding pivot columns.
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in (p + 1)..r {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        let mut counters = vec![0usize; free.len()];
        loop {
            let mut basis = Matrix::zero(field, d, r);
            for (i, &p) in pivots.iter().enumerate() {
                basis.set(i, p, field.one());
            }
            for (slot, &(i, j)) in free.iter().enumerate() {
                basis.set(i, j, elements[counters[slot]].clone());
            }
            out.push(Subspace { field, r, d, basis });
            // odometer over the free entries
            let mut k = 0;
            loop {
                if k == free.len() {
                    break;
                }
                counters[k] += 1;
                if counters[k] < elements.len() {
                    break;
                }
                counters[k] = 0;
                k += 1;
            }
            if k == free.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// Draws a uniform-ish random point by rejection on rank; works over `F_p`
/// and (with small integer entries) over `Q`.
pub fn random_subspace<R: Rng>(field: Field, d: usize, r: usize, rng: &mut R) -> Result<Subspace> {
    if d < 1 || d >= r {
        return Err(Error::SubspaceDimensionOutOfRange { d, r });
    }
    loop {
        let m = Matrix::from_fn(field, d, r, |_, _| field.random(rng));
        if let Ok(s) = Subspace::from_spanning_rows(m) {
            return Ok(s);
        }
    }
}
