//! The Grassmannian-indexed test modules X_U: construction, recovery of the
//! indexing subspace, pairwise orthogonality and brick property.
//!
//! Run with `cargo run --example test_module_family`.

use kronrank::forms::FormContext;
use kronrank::{grassmannian_points, hom_dim, recover_subspace, x_u_module, Field, RootClass};

fn main() -> kronrank::Result<()> {
    let field = Field::prime(3)?;
    let r = 4;
    let ctx = FormContext::new(r)?;

    for d in 1..r {
        let points = grassmannian_points(field, d, r)?;
        let modules: Vec<_> = points
            .iter()
            .map(|u| x_u_module(u).map(|t| t.module))
            .collect::<kronrank::Result<_>>()?;

        let mut zero_pairs = 0usize;
        for (i, xu) in modules.iter().enumerate() {
            for (j, xv) in modules.iter().enumerate() {
                if i != j && hom_dim(xu, xv)? == 0 {
                    zero_pairs += 1;
                }
            }
        }
        let recovered = points
            .iter()
            .zip(&modules)
            .all(|(u, m)| recover_subspace(m).is_ok_and(|v| v == *u));
        let bricks = modules.iter().all(|m| hom_dim(m, m).unwrap() == 1);
        let class = ctx.classify_dimvector(modules[0].dim())?;

        println!(
            "d = {d}: {} modules of dim {}, class {:?}",
            modules.len(),
            modules[0].dim(),
            class
        );
        assert!(matches!(class, RootClass::Imaginary));
        println!(
            "   recovery round-trip: {recovered}; bricks: {bricks}; \
             vanishing Hom pairs: {zero_pairs}/{}",
            modules.len() * (modules.len() - 1)
        );
    }
    Ok(())
}
