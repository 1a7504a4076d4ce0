//! The canonical projectives and injectives, the Grassmannian-indexed family
//! of test modules `X_U`, the operators `x_T` / `y_T`, and the subspaces
//! `Soc_U(M)` and `Rad_U(M)` they cut out.
//!
//! `X_U` is the cokernel of the embedding `P_1^d -> P_2` determined by a
//! basis of `U`: concretely its vertex-2 space is `k^r / U` coordinatized on
//! the non-pivot columns of the RREF basis of `U`, and arrow `i` sends the
//! generator to the class of the `i`-th standard basis vector. This makes the
//! construction deterministic: equal subspaces give identical matrices.

use crate::error::{Error, Result};
use crate::grassmann::Subspace;
use crate::linalg::{quotient_projection, Field, Matrix, Scalar};
use crate::quiver::{hom_basis, DimVector, KroneckerModule};

/// The indecomposable projective `P_i`: `dim P_1 = (0,1)` and
/// `dim P_2 = (1,r)` with arrow `i` hitting the `i`-th basis vector.
pub fn projective(field: Field, r: usize, i: usize) -> Result<KroneckerModule> {
    assert!(i == 1 || i == 2, "projectives are indexed by 1 and 2");
    if i == 1 {
        let maps = (0..r).map(|_| Matrix::zero(field, 1, 0)).collect();
        KroneckerModule::new(field, r, DimVector::new(0, 1), maps)
    } else {
        let maps = (0..r)
            .map(|k| {
                let mut m = Matrix::zero(field, r, 1);
                m.set(k, 0, field.one());
                m
            })
            .collect();
        KroneckerModule::new(field, r, DimVector::new(1, r), maps)
    }
}

/// The indecomposable injective `I_i = D(P_i)`.
pub fn injective(field: Field, r: usize, i: usize) -> Result<KroneckerModule> {
    Ok(projective(field, r, i)?.dual())
}

/// The elementary `(2,2)`-module over `Gamma_3` given by
/// `id`, `(a,b) -> (b,0)`, `(a,b) -> (0,a)`.
pub fn ringel_e(field: Field) -> Result<KroneckerModule> {
    KroneckerModule::new(
        field,
        3,
        DimVector::new(2, 2),
        vec![
            Matrix::from_int_rows(field, 2, 2, &[1, 0, 0, 1]),
            Matrix::from_int_rows(field, 2, 2, &[0, 1, 0, 0]),
            Matrix::from_int_rows(field, 2, 2, &[0, 0, 1, 0]),
        ],
    )
}

/// A test module `X_U` together with the subspace that indexes it.
#[derive(Clone, Debug)]
pub struct TestModule {
    pub subspace: Subspace,
    pub module: KroneckerModule,
}

/// Builds `X_U = coker(P_1^d -> P_2)` for `U` in `Gr_{d,r}`; the result is
/// indecomposable with dimension vector `(1, r-d)`.
pub fn x_u_module(u: &Subspace) -> Result<TestModule> {
    let field = u.field();
    let r = u.r();
    let q = quotient_projection(u.basis());
    debug_assert_eq!(q.rows(), r - u.d());
    let maps = (0..r).map(|j| q.column(j)).collect();
    let module = KroneckerModule::new(field, r, DimVector::new(1, r - u.d()), maps)?;
    Ok(TestModule {
        subspace: u.clone(),
        module,
    })
}

/// Recovers the indexing subspace from any module isomorphic to some `X_U`:
/// for `M` indecomposable with `dim M = (1, r-d)`, the kernel of
/// `k^r -> M_2, c -> sum_i c_i M(gamma_i) m` (with `m` spanning `M_1`) is `U`.
/// Errors when the dimension vector is wrong or the columns fail to span
/// `M_2`, which certifies that `M` is decomposable or malformed.
pub fn recover_subspace(m: &KroneckerModule) -> Result<Subspace> {
    let dim = m.dim();
    let r = m.r();
    if dim.d1 != 1 || dim.d2 < 1 || dim.d2 >= r {
        return Err(Error::NotATestModuleDimension {
            got: (dim.d1, dim.d2),
        });
    }
    // Columns gamma_i . m for the generator m = e_1 of M_1.
    let cols: Vec<Matrix> = (0..r).map(|i| m.map(i).clone()).collect();
    let refs: Vec<&Matrix> = cols.iter().collect();
    let reach = Matrix::hstack(&refs);
    if reach.rank() != dim.d2 {
        return Err(Error::NotGeneratedAtVertexOne);
    }
    let kernel = reach.kernel_basis();
    let u = Subspace::from_spanning_rows(kernel.transpose())?;
    // Round-trip certificate: the one-dimensional Hom space from X_U must be
    // spanned by an isomorphism.
    let xu = x_u_module(&u)?;
    let homs = hom_basis(&xu.module, m)?;
    assert_eq!(homs.len(), 1, "recovered subspace must give a brick pair");
    assert!(homs[0].is_invertible(), "round-trip witness must invert");
    Ok(u)
}

/// The operator `x^M_T : M -> M^d` on total spaces, stacked as a
/// `d*(d1+d2) x (d1+d2)` matrix. Each block acts by
/// `sum_i alpha_i M(gamma_i)` out of the vertex-1 part.
pub fn x_t_operator(m: &KroneckerModule, t: &[Vec<Scalar>]) -> Result<Matrix> {
    let blocks: Result<Vec<Matrix>> = t.iter().map(|alpha| x_alpha_total(m, alpha)).collect();
    let blocks = blocks?;
    if blocks.is_empty() {
        return Ok(Matrix::zero(m.field(), 0, m.total_dim()));
    }
    let refs: Vec<&Matrix> = blocks.iter().collect();
    Ok(Matrix::vstack(&refs))
}

/// The companion `y^M_T : M^d -> M`, a `(d1+d2) x d*(d1+d2)` matrix.
pub fn y_t_operator(m: &KroneckerModule, t: &[Vec<Scalar>]) -> Result<Matrix> {
    let blocks: Result<Vec<Matrix>> = t.iter().map(|alpha| x_alpha_total(m, alpha)).collect();
    let blocks = blocks?;
    if blocks.is_empty() {
        return Ok(Matrix::zero(m.field(), m.total_dim(), 0));
    }
    let refs: Vec<&Matrix> = blocks.iter().collect();
    Ok(Matrix::hstack(&refs))
}

/// `x_alpha` on the total space `M_1 (+) M_2`: the block matrix
/// `[[0, 0], [A_alpha, 0]]` with `A_alpha = sum_i alpha_i M(gamma_i)`.
pub fn x_alpha_total(m: &KroneckerModule, alpha: &[Scalar]) -> Result<Matrix> {
    let a = m.arrow_combination(alpha)?;
    let (d1, d2) = (m.dim().d1, m.dim().d2);
    let n = d1 + d2;
    let field = m.field();
    Ok(Matrix::from_fn(field, n, n, |i, j| {
        if i >= d1 && j < d1 {
            a.get(i - d1, j).clone()
        } else {
            field.zero()
        }
    }))
}

/// The block swap identifying `(M_1 (+) M_2)^*` with the total space of the
/// dual module, whose vertex order is `(M_2^*, M_1^*)`. Conjugating the
/// transpose of `x^M_T` by this permutation gives `y^{DM}_T`.
pub fn dual_total_swap(field: Field, d1: usize, d2: usize) -> Matrix {
    let n = d1 + d2;
    Matrix::from_fn(field, n, n, |i, j| {
        let hit = if i < d2 { j == d1 + i } else { j == i - d2 };
        if hit {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// A socle or radical subspace: its dimension plus an explicit basis.
#[derive(Clone, Debug)]
pub struct RankedSubspace {
    pub dim: usize,
    /// Columns form the basis; socles live in the total space, radicals in
    /// the vertex-2 space.
    pub basis: Matrix,
}

/// `Soc_U(M) = intersection of ker x_u over a basis of U`, always containing
/// the whole vertex-2 space. Returned in total-space coordinates.
pub fn soc(m: &KroneckerModule, u: &Subspace) -> Result<RankedSubspace> {
    check_ambient(m, u)?;
    let stack = stacked_combinations(m, u)?;
    let k1 = stack.kernel_basis();
    let (d1, d2) = (m.dim().d1, m.dim().d2);
    let field = m.field();
    let n = d1 + d2;
    let mut basis = Matrix::zero(field, n, k1.cols() + d2);
    for j in 0..k1.cols() {
        for i in 0..d1 {
            basis.set(i, j, k1.get(i, j).clone());
        }
    }
    for j in 0..d2 {
        basis.set(d1 + j, k1.cols() + j, field.one());
    }
    Ok(RankedSubspace {
        dim: k1.cols() + d2,
        basis,
    })
}

/// `dim Soc_U(M)` via a rank computation only.
pub fn soc_dim(m: &KroneckerModule, u: &Subspace) -> Result<usize> {
    check_ambient(m, u)?;
    let stack = stacked_combinations(m, u)?;
    Ok(m.dim().d1 - stack.rank() + m.dim().d2)
}

/// `Rad_U(M) = sum of im x_u over a basis of U`, a subspace of the vertex-2
/// space; returned in vertex-2 coordinates.
pub fn rad(m: &KroneckerModule, u: &Subspace) -> Result<RankedSubspace> {
    check_ambient(m, u)?;
    let side = side_by_side_combinations(m, u)?;
    let basis = side.column_space_basis();
    Ok(RankedSubspace {
        dim: basis.cols(),
        basis,
    })
}

/// `dim Rad_U(M)` via a rank computation only.
pub fn rad_dim(m: &KroneckerModule, u: &Subspace) -> Result<usize> {
    check_ambient(m, u)?;
    Ok(side_by_side_combinations(m, u)?.rank())
}

fn check_ambient(m: &KroneckerModule, u: &Subspace) -> Result<()> {
    if u.field() != m.field() {
        return Err(Error::FieldMismatch);
    }
    if u.r() != m.r() {
        return Err(Error::ArrowCountMismatch(m.r(), u.r()));
    }
    Ok(())
}

/// `[A_{u_1}; ...; A_{u_d}]` for a basis of `U`, as a map `M_1 -> M_2^d`.
fn stacked_combinations(m: &KroneckerModule, u: &Subspace) -> Result<Matrix> {
    let blocks: Result<Vec<Matrix>> = u
        .basis_rows()
        .iter()
        .map(|row| m.arrow_combination(row))
        .collect();
    let blocks = blocks?;
    let refs: Vec<&Matrix> = blocks.iter().collect();
    Ok(Matrix::vstack(&refs))
}

/// `[A_{u_1} | ... | A_{u_d}]`, whose column space is `Rad_U(M)`.
fn side_by_side_combinations(m: &KroneckerModule, u: &Subspace) -> Result<Matrix> {
    let blocks: Result<Vec<Matrix>> = u
        .basis_rows()
        .iter()
        .map(|row| m.arrow_combination(row))
        .collect();
    let blocks = blocks?;
    let refs: Vec<&Matrix> = blocks.iter().collect();
    Ok(Matrix::hstack(&refs))
}
