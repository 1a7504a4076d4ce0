//! Passage between `Gamma_r` and `Gamma_s`, `GL_r` twists, and the functor
//! into radical-square-zero modules over the group algebra of an elementary
//! abelian p-group of rank r.

use crate::error::{Error, Result};
use crate::grassmann::Subspace;
use crate::linalg::{Field, Matrix};
use crate::quiver::KroneckerModule;
use crate::rank_props::{survey_subspaces, PropertyVerdict, Scope, Status, SurveyMode, Witness};
use crate::test_modules::RankedSubspace;

/// Extends a `Gamma_r` representation to `Gamma_s` (`s > r`): spaces and the
/// first `r` maps stay, the new arrows act by zero. Fully faithful and exact.
pub fn inflate(m: &KroneckerModule, s: usize) -> Result<KroneckerModule> {
    let r = m.r();
    if s <= r {
        return Err(Error::InflationTargetTooSmall { r, s });
    }
    let field = m.field();
    let mut maps: Vec<Matrix> = m.maps().to_vec();
    for _ in r..s {
        maps.push(Matrix::zero(field, m.dim().d2, m.dim().d1));
    }
    KroneckerModule::new(field, s, m.dim(), maps)
}

/// Pulls a `Gamma_s` representation back to `Gamma_r` (`r < s`) along the
/// natural embedding: keeps the first `r` maps. Exact left inverse of
/// [`inflate`].
pub fn restrict(n: &KroneckerModule, r: usize) -> Result<KroneckerModule> {
    let s = n.r();
    if r >= s {
        return Err(Error::RestrictionTargetTooLarge { r, s });
    }
    if r < 2 {
        return Err(Error::ArrowCountTooSmall(r));
    }
    let maps = n.maps()[..r].to_vec();
    KroneckerModule::new(n.field(), r, n.dim(), maps)
}

/// An invertible `r x r` matrix acting on the arrow span by
/// `g . gamma_j = sum_i g[i][j] gamma_i`.
#[derive(Clone, Debug)]
pub struct GlMatrix {
    g: Matrix,
}

impl GlMatrix {
    pub fn new(g: Matrix) -> Result<GlMatrix> {
        if !g.is_square() {
            return Err(Error::ShapeMismatch {
                context: "GL matrix",
                left: (g.rows(), g.cols()),
                right: (g.rows(), g.rows()),
            });
        }
        if !g.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(GlMatrix { g })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.g
    }

    pub fn r(&self) -> usize {
        self.g.rows()
    }

    /// Matrix product, so that twisting by `g` then `h` equals twisting by
    /// `g * h` (asserted by tests).
    pub fn compose(&self, h: &GlMatrix) -> Result<GlMatrix> {
        GlMatrix::new(self.g.mul(&h.g))
    }
}

/// The pullback twist `M^(g)`: arrow `j` of the twist acts by
/// `sum_i g[i][j] M(gamma_i)`. Dimensions and Hom spaces are preserved.
pub fn gl_twist(m: &KroneckerModule, g: &GlMatrix) -> Result<KroneckerModule> {
    if g.r() != m.r() {
        return Err(Error::ArrowCountMismatch(m.r(), g.r()));
    }
    if g.matrix().field() != m.field() {
        return Err(Error::FieldMismatch);
    }
    let field = m.field();
    let maps: Vec<Matrix> = (0..m.r())
        .map(|j| {
            let mut acc = Matrix::zero(field, m.dim().d2, m.dim().d1);
            for i in 0..m.r() {
                let c = g.matrix().get(i, j);
                if !c.is_zero() {
                    acc = acc.add(&m.map(i).scale(c));
                }
            }
            acc
        })
        .collect();
    KroneckerModule::new(field, m.r(), m.dim(), maps)
}

/// A radical-square-zero module over `kE_r` with `char k = p > 0`: the
/// generators `x_1..x_r` act from the top space into the socle part and by
/// zero on it, so all products `x_i x_j` act as zero. This is exactly the
/// essential image of the functor from `Gamma_r` representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ERModule {
    field: Field,
    r: usize,
    top: usize,
    socle_part: usize,
    actions: Vec<Matrix>,
}

impl ERModule {
    pub fn new(
        field: Field,
        r: usize,
        top: usize,
        socle_part: usize,
        actions: Vec<Matrix>,
    ) -> Result<ERModule> {
        if field.characteristic() == 0 {
            return Err(Error::CharacteristicZero);
        }
        if r < 2 {
            return Err(Error::ArrowCountTooSmall(r));
        }
        if actions.len() != r {
            return Err(Error::WrongMapCount {
                expected: r,
                got: actions.len(),
            });
        }
        for a in &actions {
            if a.field() != field {
                return Err(Error::FieldMismatch);
            }
            if (a.rows(), a.cols()) != (socle_part, top) {
                return Err(Error::ShapeViolation {
                    context: "generator action",
                    expected: (socle_part, top),
                    got: (a.rows(), a.cols()),
                });
            }
        }
        Ok(ERModule {
            field,
            r,
            top,
            socle_part,
            actions,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn top_dim(&self) -> usize {
        self.top
    }

    pub fn socle_part_dim(&self) -> usize {
        self.socle_part
    }

    pub fn total_dim(&self) -> usize {
        self.top + self.socle_part
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.actions[i]
    }

    /// `sum_i alpha_i x_i` as a map from the top into the socle part.
    fn combination(&self, alpha: &[crate::linalg::Scalar]) -> Matrix {
        let mut acc = Matrix::zero(self.field, self.socle_part, self.top);
        for (a, m) in alpha.iter().zip(&self.actions) {
            if !a.is_zero() {
                acc = acc.add(&m.scale(a));
            }
        }
        acc
    }
}

/// The functor into `kE_r`-modules: same underlying space, `x_i` acts by
/// `gamma_i`. Requires positive characteristic.
pub fn to_elementary_abelian(m: &KroneckerModule) -> Result<ERModule> {
    ERModule::new(m.field(), m.r(), m.dim().d1, m.dim().d2, m.maps().to_vec())
}

/// `Soc_U(N) = { n : u.n = 0 for all u in U }` in total-space coordinates.
pub fn er_soc(n: &ERModule, u: &Subspace) -> Result<RankedSubspace> {
    er_check(n, u)?;
    let stack = er_stack(n, u);
    let k = stack.kernel_basis();
    let field = n.field;
    let total = n.total_dim();
    let mut basis = Matrix::zero(field, total, k.cols() + n.socle_part);
    for j in 0..k.cols() {
        for i in 0..n.top {
            basis.set(i, j, k.get(i, j).clone());
        }
    }
    for j in 0..n.socle_part {
        basis.set(n.top + j, k.cols() + j, field.one());
    }
    Ok(RankedSubspace {
        dim: k.cols() + n.socle_part,
        basis,
    })
}

pub fn er_soc_dim(n: &ERModule, u: &Subspace) -> Result<usize> {
    er_check(n, u)?;
    Ok(n.top - er_stack(n, u).rank() + n.socle_part)
}

/// `Rad_U(N) = sum_{u in U} u.N`, inside the socle part.
pub fn er_rad(n: &ERModule, u: &Subspace) -> Result<RankedSubspace> {
    er_check(n, u)?;
    let side = er_side(n, u);
    let basis = side.column_space_basis();
    Ok(RankedSubspace {
        dim: basis.cols(),
        basis,
    })
}

pub fn er_rad_dim(n: &ERModule, u: &Subspace) -> Result<usize> {
    er_check(n, u)?;
    Ok(er_side(n, u).rank())
}

fn er_check(n: &ERModule, u: &Subspace) -> Result<()> {
    if u.field() != n.field {
        return Err(Error::FieldMismatch);
    }
    if u.r() != n.r {
        return Err(Error::ArrowCountMismatch(n.r, u.r()));
    }
    Ok(())
}

fn er_stack(n: &ERModule, u: &Subspace) -> Matrix {
    let blocks: Vec<Matrix> = u
        .basis_rows()
        .iter()
        .map(|row| n.combination(row))
        .collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    Matrix::vstack(&refs)
}

fn er_side(n: &ERModule, u: &Subspace) -> Matrix {
    let blocks: Vec<Matrix> = u
        .basis_rows()
        .iter()
        .map(|row| n.combination(row))
        .collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    Matrix::hstack(&refs)
}

/// Constant d-Soc rank verdict for a `kE_r`-module of Loewy length <= 2,
/// surveyed exactly like the quiver-side properties.
pub fn er_constant_socle_rank(n: &ERModule, d: usize, mode: SurveyMode) -> Result<PropertyVerdict> {
    er_survey(n, d, mode, er_soc_dim, None)
}

pub fn er_constant_radical_rank(
    n: &ERModule,
    d: usize,
    mode: SurveyMode,
) -> Result<PropertyVerdict> {
    er_survey(n, d, mode, er_rad_dim, None)
}

/// Equal d-Soc property: `Soc_U(N)` equals the socle part for every surveyed
/// subspace.
pub fn er_equal_socle(n: &ERModule, d: usize, mode: SurveyMode) -> Result<PropertyVerdict> {
    er_survey(n, d, mode, er_soc_dim, Some(n.socle_part))
}

pub fn er_equal_radical(n: &ERModule, d: usize, mode: SurveyMode) -> Result<PropertyVerdict> {
    er_survey(n, d, mode, er_rad_dim, Some(n.socle_part))
}

fn er_survey(
    n: &ERModule,
    d: usize,
    mode: SurveyMode,
    value: impl Fn(&ERModule, &Subspace) -> Result<usize>,
    equal_to: Option<usize>,
) -> Result<PropertyVerdict> {
    let (pts, scope) = survey_subspaces(n.field, d, n.r, mode)?;
    let mut first: Option<(Subspace, usize)> = None;
    for u in pts {
        let v = value(n, &u)?;
        match equal_to {
            Some(target) => {
                if v != target {
                    return Ok(PropertyVerdict {
                        status: Status::Fails(Witness::NotVertexTwo {
                            u,
                            observed: v,
                            expected: target,
                        }),
                        scope,
                    });
                }
            }
            None => match &first {
                None => first = Some((u, v)),
                Some((u0, v0)) => {
                    if v != *v0 {
                        return Ok(PropertyVerdict {
                            status: Status::Fails(Witness::RankPair {
                                u: u0.clone(),
                                dim_u: *v0,
                                v: u,
                                dim_v: v,
                            }),
                            scope,
                        });
                    }
                }
            },
        }
    }
    Ok(PropertyVerdict {
        status: match scope {
            Scope::ExactOverFq(_) => Status::Holds,
            Scope::Sampled => Status::EvidenceOnly,
        },
        scope,
    })
}
