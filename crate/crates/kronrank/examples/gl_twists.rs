//! The GL_r action on the arrow span: twisting by base change, the
//! composition law, and a certified witness that the elementary module is
//! not GL_3-stable.
//!
//! Run with `cargo run --example gl_twists`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use kronrank::functors::{gl_twist, GlMatrix};
use kronrank::test_modules::ringel_e;
use kronrank::{is_isomorphic, Field, IsoVerdict, Matrix};

fn main() -> kronrank::Result<()> {
    let field = Field::prime(5)?;
    let e = ringel_e(field)?;

    let id = GlMatrix::new(Matrix::identity(field, 3))?;
    println!(
        "twist by the identity is the identity: {}",
        gl_twist(&e, &id)? == e
    );

    let g = GlMatrix::new(Matrix::from_int_rows(
        field,
        3,
        3,
        &[1, 2, 0, 0, 1, 3, 1, 0, 1],
    ))?;
    let h = GlMatrix::new(Matrix::from_int_rows(
        field,
        3,
        3,
        &[2, 0, 1, 1, 1, 0, 0, 1, 1],
    ))?;
    let twice = gl_twist(&gl_twist(&e, &g)?, &h)?;
    let once = gl_twist(&e, &g.compose(&h)?)?;
    println!(
        "twisting by g then h equals twisting by g*h: {}",
        twice == once
    );

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for attempt in 0u64..200 {
        let candidate = Matrix::from_fn(field, 3, 3, |_, _| field.random(&mut rng));
        let Ok(g) = GlMatrix::new(candidate) else {
            continue;
        };
        let twisted = gl_twist(&e, &g)?;
        if let IsoVerdict::No(reason) = is_isomorphic(&twisted, &e, attempt)? {
            println!("attempt {attempt}: E^(g) is certified non-isomorphic to E ({reason:?})");
            println!("g = {}", g.matrix());
            println!("so E is not GL_3-stable");
            return Ok(());
        }
    }
    println!("no moving twist found in 200 attempts (unexpected)");
    Ok(())
}
