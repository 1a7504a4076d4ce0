//! The Auslander-Reiten translate in action: stripping projective summands,
//! Coxeter dimension checks, the AR formula, and the self-duality of the
//! one-dimensional test modules under tau.
//!
//! Run with `cargo run --example ar_translate`.

use kronrank::ar::{ext_dim, tau, tau_inv};
use kronrank::test_modules::{projective, ringel_e, x_u_module};
use kronrank::{hom_dim, is_isomorphic, Field, Matrix, Subspace};

fn main() -> kronrank::Result<()> {
    let field = Field::prime(5)?;

    let p1 = projective(field, 3, 1)?;
    let t = tau_inv(&p1)?;
    println!(
        "tau^-1 P_1 has dim {} (Coxeter image of (0,1))",
        t.translate.dim()
    );

    let e = ringel_e(field)?;
    let p2 = projective(field, 3, 2)?;
    let with_junk = e.direct_sum(&p2)?.direct_sum(&p1)?;
    let stripped = tau(&with_junk)?;
    println!(
        "tau(E + P_2 + P_1): stripped {} copies of P_1 and {} of P_2, translate dim {}",
        stripped.stripped_p1,
        stripped.stripped_p2,
        stripped.translate.dim()
    );
    let te = tau(&e)?.translate;
    println!(
        "tau is blind to projective junk: {}",
        is_isomorphic(&stripped.translate, &te, 0)?.is_yes()
    );

    let u = Subspace::from_spanning_rows(Matrix::from_int_rows(field, 1, 3, &[1, 2, 0]))?;
    let xu = x_u_module(&u)?.module;
    let txu = tau(&xu)?.translate;
    println!(
        "\nX_alpha has dim {}, tau X_alpha has dim {}, and tau X_alpha = D X_alpha: {}",
        xu.dim(),
        txu.dim(),
        is_isomorphic(&txu, &xu.dual(), 0)?.is_yes()
    );

    println!(
        "AR formula: dim Ext(X_U, X_U) = {} = dim Hom(X_U, tau X_U) = {}",
        ext_dim(&xu, &xu)?,
        hom_dim(&xu, &txu)?
    );
    println!(
        "            dim Ext(E, E)     = {} = dim Hom(E, tau E)     = {}",
        ext_dim(&e, &e)?,
        hom_dim(&e, &tau(&e)?.translate)?
    );
    Ok(())
}
