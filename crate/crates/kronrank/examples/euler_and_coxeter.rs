//! The Euler-Ringel form, its quadratic form and the Coxeter transformation:
//! root classification of small dimension vectors and the dimension walk of
//! a tau-orbit.
//!
//! Run with `cargo run --example euler_and_coxeter`.

use kronrank::forms::FormContext;
use kronrank::DimVector;

fn main() -> kronrank::Result<()> {
    let ctx = FormContext::new(3)?;

    println!("r = 3 classification of small dimension vectors:");
    for d in [
        (0, 1),
        (1, 0),
        (1, 1),
        (1, 2),
        (1, 3),
        (2, 2),
        (1, 5),
        (3, 1),
    ] {
        let class = ctx.classify_dimvector(DimVector::new(d.0, d.1))?;
        println!(
            "  q{d:?} = {:3}  ->  {class:?}",
            ctx.quadratic((d.0 as i64, d.1 as i64))
        );
    }

    println!(
        "\nEuler form samples: <(0,1),(1,3)> = {}",
        ctx.euler_form((0, 1), (1, 3))
    );
    println!(
        "                    <(1,1),(1,1)> = {}",
        ctx.euler_form((1, 1), (1, 1))
    );

    println!("\nCoxeter walk from dim P_1 = (0,1) in the inverse direction:");
    let mut d = (0i64, 1i64);
    for step in 0..5 {
        println!("  Phi^(-{step}) (0,1) = {d:?}");
        d = ctx.coxeter_inv(d);
    }
    println!("these are the dimension vectors of the preprojective modules");
    Ok(())
}
