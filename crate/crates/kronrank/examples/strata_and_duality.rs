//! Strata of the equal-socle chain and the duality between socle and radical
//! properties: every verdict on M has a mirror verdict on the dual module.
//!
//! Run with `cargo run --example strata_and_duality`.

use kronrank::rank_props::{
    has_constant_radical_rank, has_constant_socle_rank, has_equal_radical_property,
    has_equal_socle_property, stratum, SurveyMode,
};
use kronrank::test_modules::{injective, projective, ringel_e, x_u_module};
use kronrank::{grassmannian_points, Field};

fn main() -> kronrank::Result<()> {
    let field = Field::prime(3)?;
    let r = 4;

    println!("strata (minimal i with the equal i-socle property), r = {r}:");
    let mut zoo = vec![
        ("P_1".to_string(), projective(field, r, 1)?),
        ("P_2".to_string(), projective(field, r, 2)?),
        ("I_1".to_string(), injective(field, r, 1)?),
    ];
    for d in 1..r {
        let u = grassmannian_points(field, d, r)?
            .into_iter()
            .next()
            .unwrap();
        zoo.push((format!("X_U, U in Gr_{d}"), x_u_module(&u)?.module));
    }
    for (name, module) in &zoo {
        let s = stratum(module, SurveyMode::Exhaustive)?;
        println!("  {name:<16} -> {:?}", s.map(|v| v.0));
    }

    println!("\nduality on E over F_3 (socle of M versus radical of DM):");
    let e = ringel_e(field)?;
    let dual = e.dual();
    for d in 1..3 {
        println!(
            "  d = {d}: CSR(M) = {:<5}  CRR(DM) = {:<5}  ESP(M) = {:<5}  ERP(DM) = {}",
            has_constant_socle_rank(&e, d, SurveyMode::Exhaustive)?.holds(),
            has_constant_radical_rank(&dual, d, SurveyMode::Exhaustive)?.holds(),
            has_equal_socle_property(&e, d, SurveyMode::Exhaustive)?.holds(),
            has_equal_radical_property(&dual, d, SurveyMode::Exhaustive)?.holds(),
        );
    }
    Ok(())
}
