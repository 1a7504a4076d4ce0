//! Exhaustive Grassmannian enumeration over small finite fields: point
//! counts against the Gaussian binomial, and the Schubert-cell canonical
//! forms of a small example.
//!
//! Run with `cargo run --example grassmannian_survey`.

use kronrank::{gaussian_binomial, grassmannian_points, Field};

fn main() -> kronrank::Result<()> {
    for q in [2u64, 3, 5] {
        let field = Field::prime(q)?;
        for r in [3usize, 4] {
            for d in 1..r {
                let points = grassmannian_points(field, d, r)?;
                println!(
                    "|Gr_{{{d},{r}}}(F_{q})| = {:6}   (Gaussian binomial: {})",
                    points.len(),
                    gaussian_binomial(q, d, r)
                );
            }
        }
    }

    println!("\nall seven lines of F_2^3, one canonical matrix each:");
    for u in grassmannian_points(Field::prime(2)?, 1, 3)? {
        println!("  {u}");
    }
    Ok(())
}
