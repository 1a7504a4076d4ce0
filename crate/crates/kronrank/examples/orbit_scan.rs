//! Walking a tau-orbit and watching the equal-socle and equal-radical cones
//! switch on: the scan prints one row per translate with per-level flags.
//!
//! Run with `cargo run --example orbit_scan`.

use kronrank::ar::cone_scan;
use kronrank::rank_props::SurveyMode;
use kronrank::test_modules::x_u_module;
use kronrank::{Field, Matrix, Subspace};

fn main() -> kronrank::Result<()> {
    let field = Field::prime(2)?;
    let alpha = Subspace::from_spanning_rows(Matrix::from_int_rows(field, 1, 3, &[1, 0, 0]))?;
    let x_alpha = x_u_module(&alpha)?.module;

    let scan = cone_scan(&x_alpha, -3, 3, SurveyMode::Exhaustive)?;
    println!("tau-orbit of X_alpha over {field} (power j means tau^-j):");
    println!(
        "{:>5}  {:>10}  {:<14} {:<14} stratum",
        "j", "dim", "ESP_1 ESP_2", "ERP_1 ERP_2"
    );
    for step in &scan.steps {
        println!(
            "{:>5}  {:>10}  {:<5} {:<8} {:<5} {:<8} {:?}",
            step.power,
            step.dim.to_string(),
            step.esp[0],
            step.esp[1],
            step.erp[0],
            step.erp[1],
            step.stratum()
        );
    }
    println!(
        "window limited: {}; candidate stratum above 1: {:?}; width estimate: {:?}",
        scan.window_limited, scan.m_candidate, scan.width_candidate
    );
    Ok(())
}
