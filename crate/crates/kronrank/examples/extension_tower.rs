//! Iterated non-split self-extensions over an orthogonal brick: every member
//! of the tower keeps constant 2-socle rank while failing constant 1-socle
//! rank with explicit witnesses.
//!
//! Run with `cargo run --example extension_tower`.

use kronrank::ar::{ext_dim, realize_extension, self_extension_tower, TowerDirection};
use kronrank::rank_props::{has_constant_socle_rank, orthogonality_flags, SurveyMode};
use kronrank::test_modules::ringel_e;
use kronrank::Field;

fn main() -> kronrank::Result<()> {
    let field = Field::prime(5)?;
    let e = ringel_e(field)?;
    println!(
        "E is a brick with dim Ext(E, E) = {}, so towers exist",
        ext_dim(&e, &e)?
    );

    let witness = realize_extension(&e, &e, 0)?.expect("Ext is nonzero");
    println!(
        "one non-split self-extension: 0 -> E -> B -> E -> 0 with dim B = {}",
        witness.middle.dim()
    );

    let tower = self_extension_tower(&e, 3, 0, TowerDirection::BrickAtBottom)?;
    for (i, member) in tower.iter().enumerate() {
        let flags = orthogonality_flags(member, 2, SurveyMode::Exhaustive)?;
        let csr2 = has_constant_socle_rank(member, 2, SurveyMode::Exhaustive)?;
        let csr1 = has_constant_socle_rank(member, 1, SurveyMode::Exhaustive)?;
        println!(
            "tower[{}]: dim {}, orthogonal to the d=2 family: {}, CSR_2: {}, CSR_1: {}",
            i + 1,
            member.dim(),
            flags.both_hold(),
            csr2.holds(),
            csr1.holds()
        );
    }
    println!("every member lives in a regular component inside CSR_2");
    Ok(())
}
