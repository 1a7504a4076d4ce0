//! The elementary (2,2)-module over Gamma_3 and its socle-rank behaviour:
//! constant on planes, non-constant on lines, with explicit witnesses.
//!
//! Run with `cargo run --example ringel_socle_ranks`.

use kronrank::linalg::scalar_vector;
use kronrank::rank_props::{socle_rank_profile, SurveyMode};
use kronrank::test_modules::{ringel_e, x_t_operator, x_u_module};
use kronrank::{hom_dim, Field, Matrix, Subspace};

fn main() -> kronrank::Result<()> {
    let field = Field::prime(5)?;
    let e = ringel_e(field)?;
    println!("E over {}: dim = {}", field, e.dim());

    for (name, alpha) in [("alpha", [1, 0, 0]), ("beta ", [0, 1, 0])] {
        let op = x_t_operator(&e, &[scalar_vector(field, &alpha)])?;
        println!(
            "dim ker x_{name} = {} for {name} = {alpha:?}",
            op.kernel_basis().cols()
        );
    }

    for rows in [[1i64, 0, 0], [0, 1, 0]] {
        let u = Subspace::from_spanning_rows(Matrix::from_int_rows(field, 1, 3, &rows))?;
        let xu = x_u_module(&u)?;
        println!("dim Hom(X_{rows:?}, E) = {}", hom_dim(&xu.module, &e)?);
    }

    for d in [1usize, 2] {
        let profile = socle_rank_profile(&e, d, SurveyMode::Exhaustive)?;
        println!(
            "d = {d}: {} subspaces surveyed, soc dims in [{}, {}], rad dims in [{}, {}]",
            profile.observations.len(),
            profile.min_soc,
            profile.max_soc,
            profile.min_rad,
            profile.max_rad
        );
    }
    println!("so E has constant 2-socle rank but not constant 1-socle rank");
    Ok(())
}
