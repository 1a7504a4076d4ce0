//! Euler-Ringel bilinear form, its quadratic form, the Coxeter transformation
//! and root classification for the r-Kronecker quiver.
//!
//! For `Gamma_r` the bilinear form on dimension vectors is
//! `<d, e> = d1*e1 + d2*e2 - r*d1*e2`, the quadratic form is
//! `q(x, y) = x^2 + y^2 - r*x*y`, and the Coxeter matrix transporting
//! dimension vectors along the AR translate is
//! `Phi = [[r^2-1, -r], [r, -1]]` with inverse `[[-1, r], [-r, r^2-1]]`.

use crate::error::{Error, Result};
use crate::quiver::DimVector;

/// Fixes the arrow count `r >= 2` for all form computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormContext {
    r: usize,
}

/// Position of a real root in the AR quiver, decided by the dimension test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootPosition {
    Preprojective,
    Preinjective,
}

/// Kac-style classification of a dimension vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootClass {
    /// `q(d) = 1`: exactly one indecomposable, preprojective or preinjective.
    Real(RootPosition),
    /// `q(d) <= 0`: infinitely many indecomposables, all regular.
    Imaginary,
    /// `q(d) > 1`: no indecomposable at all.
    NotARoot,
}

impl FormContext {
    pub fn new(r: usize) -> Result<FormContext> {
        if r < 2 {
            return Err(Error::ArrowCountTooSmall(r));
        }
        Ok(FormContext { r })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn euler_form(&self, d: (i64, i64), e: (i64, i64)) -> i64 {
        d.0 * e.0 + d.1 * e.1 - (self.r as i64) * d.0 * e.1
    }

    pub fn quadratic(&self, d: (i64, i64)) -> i64 {
        self.euler_form(d, d)
    }

    /// Applies the Coxeter matrix: `Phi(c, d) = ((r^2-1)c - rd, rc - d)`.
    pub fn coxeter(&self, d: (i64, i64)) -> (i64, i64) {
        let r = self.r as i64;
        ((r * r - 1) * d.0 - r * d.1, r * d.0 - d.1)
    }

    /// Applies the inverse Coxeter matrix: `(-c + rd, -rc + (r^2-1)d)`.
    pub fn coxeter_inv(&self, d: (i64, i64)) -> (i64, i64) {
        let r = self.r as i64;
        (-d.0 + r * d.1, -r * d.0 + (r * r - 1) * d.1)
    }

    pub fn coxeter_signed(&self, d: (i64, i64), inverse: bool) -> (i64, i64) {
        if inverse {
            self.coxeter_inv(d)
        } else {
            self.coxeter(d)
        }
    }

    /// Classifies a non-negative, nonzero dimension vector.
    pub fn classify_dimvector(&self, d: DimVector) -> Result<RootClass> {
        if d.is_zero() {
            return Err(Error::ZeroDimVector);
        }
        let q = self.quadratic(d.as_pair());
        Ok(if q == 1 {
            // A real root carries a unique indecomposable, preprojective
            // exactly when the vertex-1 space is the smaller one.
            if d.d1 < d.d2 {
                RootClass::Real(RootPosition::Preprojective)
            } else {
                RootClass::Real(RootPosition::Preinjective)
            }
        } else if q <= 0 {
            RootClass::Imaginary
        } else {
            RootClass::NotARoot
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn euler_form_on_projectives() {
        for r in 2..=6 {
            let ctx = FormContext::new(r).unwrap();
            // dim P_1 = (0,1), dim P_2 = (1,r): the form gives dim Hom = r.
            assert_eq!(ctx.euler_form((0, 1), (1, r as i64)), r as i64);
            assert_eq!(ctx.euler_form((3, 4), (0, 0)), 0);
        }
    }

    #[test]
    fn euler_form_hand_values() {
        let ctx = FormContext::new(3).unwrap();
        assert_eq!(ctx.euler_form((1, 1), (1, 1)), -1);
        assert_eq!(ctx.quadratic((1, 1)), -1);
        assert_eq!(ctx.quadratic((0, 1)), 1);
    }

    #[test]
    fn quadratic_of_test_module_dimension_is_imaginary() {
        let ctx = FormContext::new(3).unwrap();
        // dim X_U = (1, r - d) with d = 2.
        assert_eq!(ctx.quadratic((1, 1)), -1);
        assert_eq!(
            ctx.classify_dimvector(DimVector::new(1, 1)).unwrap(),
            RootClass::Imaginary
        );
    }

    #[test]
    fn coxeter_formulas() {
        for r in 2..=5i64 {
            let ctx = FormContext::new(r as usize).unwrap();
            let (c, d) = (7, 3);
            assert_eq!(ctx.coxeter((c, d)), ((r * r - 1) * c - r * d, r * c - d));
            assert_eq!(ctx.coxeter_inv((0, 1)), (r, r * r - 1));
        }
    }

    #[test]
    fn classification_examples() {
        let ctx = FormContext::new(3).unwrap();
        assert_eq!(
            ctx.classify_dimvector(DimVector::new(0, 1)).unwrap(),
            RootClass::Real(RootPosition::Preprojective)
        );
        assert_eq!(
            ctx.classify_dimvector(DimVector::new(1, 3)).unwrap(),
            RootClass::Real(RootPosition::Preprojective)
        );
        assert_eq!(
            ctx.classify_dimvector(DimVector::new(3, 1)).unwrap(),
            RootClass::Real(RootPosition::Preinjective)
        );
        assert_eq!(
            ctx.classify_dimvector(DimVector::new(1, 5)).unwrap(),
            RootClass::NotARoot
        );
        assert!(ctx.classify_dimvector(DimVector::new(0, 0)).is_err());
    }

    #[test]
    fn no_isotropic_vectors_for_r_at_least_3() {
        for r in 3..=5 {
            let ctx = FormContext::new(r).unwrap();
            for a in 0..=50i64 {
                for b in 0..=50i64 {
                    if (a, b) != (0, 0) {
                        assert_ne!(ctx.quadratic((a, b)), 0, "r={r}, ({a},{b})");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn quadratic_is_diagonal_of_euler(r in 2usize..6, a in -20i64..20, b in -20i64..20) {
            let ctx = FormContext::new(r).unwrap();
            prop_assert_eq!(ctx.quadratic((a, b)), ctx.euler_form((a, b), (a, b)));
        }

        #[test]
        fn coxeter_round_trips(r in 2usize..6, a in -50i64..50, b in -50i64..50) {
            let ctx = FormContext::new(r).unwrap();
            prop_assert_eq!(ctx.coxeter_inv(ctx.coxeter((a, b))), (a, b));
            prop_assert_eq!(ctx.coxeter(ctx.coxeter_inv((a, b))), (a, b));
        }

        #[test]
        fn euler_form_is_coxeter_invariant(r in 2usize..6, a in -9i64..9, b in -9i64..9, c in -9i64..9, d in -9i64..9) {
            let ctx = FormContext::new(r).unwrap();
            prop_assert_eq!(
                ctx.euler_form((a, b), (c, d)),
                ctx.euler_form(ctx.coxeter((a, b)), ctx.coxeter((c, d)))
            );
        }
    }
}
