//! Carrying modules from Gamma_3 to Gamma_5 by letting the new arrows act by
//! zero: Hom spaces survive, orthogonality moves up, and constant socle rank
//! at the low levels is always destroyed.
//!
//! Run with `cargo run --example inflation`.

use kronrank::functors::{inflate, restrict};
use kronrank::rank_props::{has_constant_socle_rank, orthogonality_flags, SurveyMode};
use kronrank::test_modules::{ringel_e, soc_dim};
use kronrank::{hom_dim, Field, Matrix, Subspace};

fn main() -> kronrank::Result<()> {
    let field = Field::prime(3)?;
    let e = ringel_e(field)?;
    let s = 5;
    let inf = inflate(&e, s)?;
    println!(
        "inflated E from Gamma_3 to Gamma_{s}; dim stays {}",
        inf.dim()
    );
    println!("round trip restores E: {}", restrict(&inf, 3)? == e);
    println!(
        "End dimension survives inflation: {} = {}",
        hom_dim(&e, &e)?,
        hom_dim(&inf, &inf)?
    );

    let level = 2 + s - 3;
    let flags = orthogonality_flags(&inf, level, SurveyMode::Exhaustive)?;
    println!(
        "E was orthogonal to the d=2 family; inf(E) is orthogonal at level {level}: {}",
        flags.both_hold()
    );

    for m in 1..=(s - 3) {
        let verdict = has_constant_socle_rank(&inf, m, SurveyMode::Exhaustive)?;
        // the span of the new arrows socles everything
        let rows: Vec<i64> = (0..m * s)
            .map(|k| if k % s == 3 + k / s { 1 } else { 0 })
            .collect();
        let u = Subspace::from_spanning_rows(Matrix::from_int_rows(field, m, s, &rows))?;
        println!(
            "level {m}: constant socle rank: {}; new-arrow subspace socles everything: {}",
            verdict.holds(),
            soc_dim(&inf, &u)? == inf.total_dim()
        );
    }
    Ok(())
}
