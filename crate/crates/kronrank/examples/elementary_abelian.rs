//! The functor into radical-square-zero modules over the group algebra of an
//! elementary abelian p-group: socles agree point by point, so the equal and
//! constant d-Soc verdicts transfer verbatim.
//!
//! Run with `cargo run --example elementary_abelian`.

use kronrank::functors::{er_equal_socle, er_soc_dim, to_elementary_abelian};
use kronrank::rank_props::{has_equal_socle_property, SurveyMode};
use kronrank::test_modules::{projective, ringel_e, soc_dim};
use kronrank::{grassmannian_points, Field};

fn main() -> kronrank::Result<()> {
    let field = Field::prime(5)?;

    for (name, module) in [
        ("E", ringel_e(field)?),
        ("P_2", projective(field, 3, 2)?),
        ("I_2", projective(field, 3, 2)?.dual()),
    ] {
        let image = to_elementary_abelian(&module)?;
        let mut agree = true;
        for d in 1..3 {
            for u in grassmannian_points(field, d, 3)? {
                agree &= er_soc_dim(&image, &u)? == soc_dim(&module, &u)?;
            }
        }
        println!("{name}: socle dimensions agree on every surveyed subspace: {agree}");
        for d in 1..3 {
            let quiver_side = has_equal_socle_property(&module, d, SurveyMode::Exhaustive)?;
            let group_side = er_equal_socle(&image, d, SurveyMode::Exhaustive)?;
            println!(
                "  equal {d}-socle: quiver side {} / kE_3 side {}",
                quiver_side.holds(),
                group_side.holds()
            );
        }
    }
    Ok(())
}
