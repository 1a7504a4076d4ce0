use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let (report, code) = kronrank::cli::run_command(&argv);
    // --out redirects the report to a file; everything else goes to stdout.
    if !argv.iter().any(|a| a == "--out") {
        print!("{}", report.to_json());
    }
    ExitCode::from(code as u8)
}
