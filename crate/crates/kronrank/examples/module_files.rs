//! The on-disk module format and the batch interface used by the `kronrank`
//! binary: parse, canonicalize, run a check in-process and inspect the
//! machine-readable report.
//!
//! Run with `cargo run --example module_files`.

use kronrank::cli::{parse_module, run_command, serialize_module};

const DOC: &str = r#"{
  "field": { "prime": 5 },
  "r": 3,
  "dim": [2, 2],
  "maps": [
    [[6, 0], [0, -4]],
    [[0, 11], [5, 0]],
    [[0, 0], [-9, 0]]
  ]
}
"#;

fn main() -> kronrank::Result<()> {
    let module = parse_module(DOC)?;
    println!(
        "parsed a module of dim {} over {}",
        module.dim(),
        module.field()
    );
    println!("canonical serialization (entries reduced mod 5):");
    print!("{}", serialize_module(&module));

    let dir = std::env::temp_dir().join("kronrank-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("module.json");
    std::fs::write(&path, serialize_module(&module))?;

    let argv: Vec<String> = [
        "kronrank",
        "check",
        "csr",
        "--d",
        "1",
        "--mode",
        "exhaustive",
        path.to_str().unwrap(),
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let (report, code) = run_command(&argv);
    println!("\n`check csr --d 1` exited with {code}; report:");
    print!("{}", report.to_json());
    Ok(())
}
