//! Batch interface: module file parsing, property checks, profiles, orbit
//! scans, constructions and machine-readable reports.
//!
//! Module files are JSON documents with a field descriptor (`{"prime": p}` or
//! `{"rational": true}`), the arrow count, the dimension pair and `r` integer
//! matrices stored dense row-major; entries are reduced modulo `p` on load,
//! so equivalent files canonicalize to the same module and serialization
//! round-trips byte-stably. Reports echo the command, digest the input, and
//! attach a re-checkable witness to every failing verdict.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::time::Instant;

use crate::ar::{cone_scan, ext_dim, self_extension_tower, tau, tau_inv, TowerDirection};
use crate::error::{Error, Result};
use crate::functors::{gl_twist, inflate, GlMatrix};
use crate::grassmann::{gaussian_binomial, grassmannian_points, Subspace};
use crate::linalg::{Field, Matrix, Scalar};
use crate::quiver::{hom_dim, DimVector, KroneckerModule};
use crate::rank_props::{
    has_constant_radical_rank, has_constant_socle_rank, has_equal_radical_property,
    has_equal_socle_property, socle_rank_profile, stratum, PropertyVerdict, Scope, Status,
    SurveyMode, Witness, DEFAULT_SAMPLE_COUNT, DEFAULT_SEED,
};
use crate::test_modules::{injective, projective, ringel_e, x_u_module};

/// Exit status contract: 0 success, 1 error, 2 a checked property failed,
/// 3 the answer is undetermined (sampled evidence only).
pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_PROPERTY_FAILED: i32 = 2;
pub const EXIT_UNDETERMINED: i32 = 3;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(untagged)]
enum FieldDoc {
    Prime { prime: u64 },
    Rational { rational: bool },
}

/// On-disk module document.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ModuleDoc {
    field: FieldDoc,
    r: usize,
    dim: [usize; 2],
    maps: Vec<Vec<Vec<i64>>>,
}

impl ModuleDoc {
    pub fn to_module(&self) -> Result<KroneckerModule> {
        let field = match self.field {
            FieldDoc::Prime { prime } => Field::prime(prime)?,
            FieldDoc::Rational { rational } => {
                if !rational {
                    return Err(Error::Parse(
                        "\"rational\" must be true when present".into(),
                    ));
                }
                Field::Rational
            }
        };
        let [d1, d2] = self.dim;
        if self.maps.len() != self.r {
            return Err(Error::WrongMapCount {
                expected: self.r,
                got: self.maps.len(),
            });
        }
        let mut maps = Vec::with_capacity(self.r);
        for (i, rows) in self.maps.iter().enumerate() {
            if rows.len() != d2 || rows.iter().any(|row| row.len() != d1) {
                return Err(Error::Parse(format!(
                    "map {i} must be a {d2} x {d1} integer matrix"
                )));
            }
            let flat: Vec<i64> = rows.iter().flatten().copied().collect();
            maps.push(Matrix::from_int_rows(field, d2, d1, &flat));
        }
        KroneckerModule::new(field, self.r, DimVector::new(d1, d2), maps)
    }

    pub fn from_module(m: &KroneckerModule) -> ModuleDoc {
        let field = match m.field() {
            Field::Prime(p) => FieldDoc::Prime { prime: p },
            Field::Rational => FieldDoc::Rational { rational: true },
        };
        let maps = m
            .maps()
            .iter()
            .map(|mat| {
                (0..mat.rows())
                    .map(|i| {
                        (0..mat.cols())
                            .map(|j| scalar_to_int(mat.get(i, j)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        ModuleDoc {
            field,
            r: m.r(),
            dim: [m.dim().d1, m.dim().d2],
            maps,
        }
    }
}

fn scalar_to_int(s: &Scalar) -> i64 {
    match s {
        Scalar::Fp(x) => *x as i64,
        Scalar::Rat(x) => {
            assert!(
                x.denom() == &num::BigInt::from(1),
                "serialized rational module entries must be integral"
            );
            let v: num::BigInt = x.to_integer();
            i64::try_from(&v).expect("entry fits in i64")
        }
    }
}

/// Parses a module document, reporting JSON locations on syntax errors.
pub fn parse_module(text: &str) -> Result<KroneckerModule> {
    let doc: ModuleDoc = serde_json::from_str(text).map_err(|e| Error::Parse(format!("{e}")))?;
    doc.to_module()
}

/// Canonical serialization: entries reduced into the field, stable key order
/// and formatting, so serialize(parse(x)) is a fixed point.
pub fn serialize_module(m: &KroneckerModule) -> String {
    let mut s = serde_json::to_string_pretty(&ModuleDoc::from_module(m)).expect("serializable");
    s.push('\n');
    s
}

/// Machine-readable run report.
#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub command: Vec<String>,
    pub input_digest: String,
    pub result: Value,
    pub timing_ms: u128,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "kronrank",
    about = "Exact checks and constructions for Kronecker-quiver representations",
    disable_help_subcommand = true
)]
struct Cli {
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PropertyKind {
    Esp,
    Erp,
    Csr,
    Crr,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeKind {
    Exhaustive,
    Sample,
}

#[derive(Args, Debug)]
struct SurveyArgs {
    /// Subspace dimension d with 1 <= d < r.
    #[arg(long)]
    d: usize,
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: ModeKind,
    /// Reinterpret the module over F_q before checking.
    #[arg(long)]
    q: Option<u64>,
    /// Sample size for --mode sample.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

impl SurveyArgs {
    fn mode(&self) -> SurveyMode {
        match self.mode {
            ModeKind::Exhaustive => SurveyMode::Exhaustive,
            ModeKind::Sample => SurveyMode::Sample {
                count: self.count.unwrap_or(DEFAULT_SAMPLE_COUNT),
                seed: self.seed,
            },
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a rank property of a module file.
    Check {
        #[arg(value_enum)]
        property: PropertyKind,
        #[command(flatten)]
        survey: SurveyArgs,
        /// Module file; stdin when omitted.
        file: Option<std::path::PathBuf>,
    },
    /// Dump the per-subspace socle/radical dimensions.
    Profile {
        #[command(flatten)]
        survey: SurveyArgs,
        file: Option<std::path::PathBuf>,
    },
    /// Minimal i with the equal i-socle property.
    Stratum {
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeKind,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        file: Option<std::path::PathBuf>,
    },
    /// Scan the tau-orbit over a window of powers.
    Orbit {
        /// Window as `lo..hi`, e.g. `-3..3`.
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeKind,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        file: Option<std::path::PathBuf>,
    },
    /// Emit a module document for a standard construction.
    Construct {
        #[command(subcommand)]
        what: ConstructCommand,
    },
    /// Count or enumerate Grassmannian points over F_q.
    Grassmann {
        #[command(subcommand)]
        what: GrassmannCommand,
    },
    /// Dual module document.
    Dual { file: Option<std::path::PathBuf> },
    /// AR translate (or inverse) of a module document.
    Tau {
        #[arg(long)]
        inverse: bool,
        file: Option<std::path::PathBuf>,
    },
    /// dim Hom between two module files.
    Hom {
        file1: std::path::PathBuf,
        file2: std::path::PathBuf,
    },
    /// dim Ext between two module files.
    Ext {
        file1: std::path::PathBuf,
        file2: std::path::PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum ConstructCommand {
    /// Test module X_U from basis rows like "1,0,0;0,1,0".
    Xu {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        basis: String,
    },
    Projective {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: Option<u64>,
    },
    Injective {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: Option<u64>,
    },
    /// The elementary (2,2)-module over Gamma_3.
    RingelE {
        #[arg(long)]
        q: Option<u64>,
    },
    /// Inflate a module file to Gamma_s.
    Inflate {
        #[arg(long)]
        s: usize,
        file: Option<std::path::PathBuf>,
    },
    /// Twist a module file by an invertible matrix like "1,0,0;0,1,0;0,0,1".
    Twist {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        file: Option<std::path::PathBuf>,
    },
    /// Self-extension tower of length n over a brick.
    Tower {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        file: Option<std::path::PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum GrassmannCommand {
    Count {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: u64,
    },
    Enumerate {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: u64,
    },
}

fn scalar_json(s: &Scalar) -> Value {
    match s {
        Scalar::Fp(x) => json!(x),
        Scalar::Rat(x) => {
            if x.denom() == &num::BigInt::from(1) {
                match i64::try_from(&x.to_integer()) {
                    Ok(v) => json!(v),
                    Err(_) => json!(x.to_string()),
                }
            } else {
                json!(x.to_string())
            }
        }
    }
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| scalar_json(m.get(i, j))).collect()))
            .collect(),
    )
}

fn subspace_json(u: &Subspace) -> Value {
    json!({
        "d": u.d(),
        "r": u.r(),
        "basis": matrix_json(u.basis()),
    })
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::RankPair { u, dim_u, v, dim_v } => json!({
            "kind": "rank_pair",
            "u": subspace_json(u),
            "dim_u": dim_u,
            "v": subspace_json(v),
            "dim_v": dim_v,
        }),
        Witness::NotVertexTwo {
            u,
            observed,
            expected,
        } => json!({
            "kind": "not_vertex_two",
            "u": subspace_json(u),
            "observed": observed,
            "expected": expected,
        }),
        Witness::NonzeroHom { u, hom } => json!({
            "kind": "nonzero_hom",
            "u": subspace_json(u),
            "hom": hom,
        }),
    }
}

fn scope_json(s: Scope) -> Value {
    match s {
        Scope::ExactOverFq(q) => json!({"exact_over_fq": q}),
        Scope::Sampled => json!("sampled"),
    }
}

fn verdict_json(property: &str, d: usize, v: &PropertyVerdict) -> (Value, i32) {
    let (status, witness, code) = match &v.status {
        Status::Holds => ("holds", Value::Null, EXIT_OK),
        Status::EvidenceOnly => ("evidence_only", Value::Null, EXIT_UNDETERMINED),
        Status::Fails(w) => ("fails", witness_json(w), EXIT_PROPERTY_FAILED),
    };
    (
        json!({
            "property": property,
            "d": d,
            "status": status,
            "scope": scope_json(v.scope),
            "witness": witness,
        }),
        code,
    )
}

struct Input {
    text: Option<String>,
}

impl Input {
    fn digest(&self) -> String {
        match &self.text {
            None => "none".to_string(),
            Some(t) => {
                let mut h = Sha256::new();
                h.update(t.as_bytes());
                format!("sha256:{:x}", h.finalize())
            }
        }
    }
}

fn read_input(path: &Option<std::path::PathBuf>) -> Result<Input> {
    let text = match path {
        Some(p) => Some(std::fs::read_to_string(p)?),
        None => {
            use std::io::Read;
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Some(buf)
        }
    };
    Ok(Input { text })
}

fn load_module(input: &Input, q: Option<u64>) -> Result<KroneckerModule> {
    let text = input
        .text
        .as_ref()
        .ok_or_else(|| Error::Parse("missing input".into()))?;
    let m = parse_module(text)?;
    match q {
        None => Ok(m),
        Some(q) => {
            // Reinterpret the integer entries over F_q.
            let doc = ModuleDoc::from_module(&m);
            let redoc = ModuleDoc {
                field: FieldDoc::Prime { prime: q },
                ..doc
            };
            redoc.to_module()
        }
    }
}

fn parse_int_matrix(field: Field, text: &str) -> Result<Matrix> {
    let rows: Vec<Vec<i64>> = text
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|v| {
                    v.trim()
                        .parse::<i64>()
                        .map_err(|e| Error::Parse(format!("{e}")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Parse("ragged matrix literal".into()));
    }
    let flat: Vec<i64> = rows.into_iter().flatten().collect();
    Ok(Matrix::from_int_rows(field, nrows, ncols, &flat))
}

/// Runs one command and produces the report plus its exit code.
pub fn run_command(argv: &[String]) -> (Report, i32) {
    let started = Instant::now();
    let echo: Vec<String> = argv.to_vec();
    match execute(argv) {
        Ok((digest, result, code, out)) => {
            let report = Report {
                command: echo,
                input_digest: digest,
                result,
                timing_ms: started.elapsed().as_millis(),
            };
            if let Some(path) = out {
                if let Err(e) = std::fs::write(&path, report.to_json()) {
                    return (
                        Report {
                            command: report.command,
                            input_digest: report.input_digest,
                            result: json!({"error": format!("cannot write {}: {e}", path.display())}),
                            timing_ms: started.elapsed().as_millis(),
                        },
                        EXIT_ERROR,
                    );
                }
            }
            (report, code)
        }
        Err(e) => (
            Report {
                command: echo,
                input_digest: "none".to_string(),
                result: json!({"error": e.to_string()}),
                timing_ms: started.elapsed().as_millis(),
            },
            EXIT_ERROR,
        ),
    }
}

type Executed = (String, Value, i32, Option<std::path::PathBuf>);

fn execute(argv: &[String]) -> Result<Executed> {
    let cli = Cli::try_parse_from(argv).map_err(|e| Error::Parse(e.to_string()))?;
    let out = cli.out.clone();
    let (digest, result, code) = match cli.command {
        Command::Check {
            property,
            survey,
            file,
        } => {
            let input = read_input(&file)?;
            let m = load_module(&input, survey.q)?;
            let mode = survey.mode();
            let (name, verdict) = match property {
                PropertyKind::Esp => ("esp", has_equal_socle_property(&m, survey.d, mode)?),
                PropertyKind::Erp => ("erp", has_equal_radical_property(&m, survey.d, mode)?),
                PropertyKind::Csr => ("csr", has_constant_socle_rank(&m, survey.d, mode)?),
                PropertyKind::Crr => ("crr", has_constant_radical_rank(&m, survey.d, mode)?),
            };
            let (value, code) = verdict_json(name, survey.d, &verdict);
            (input.digest(), json!({"verdicts": [value]}), code)
        }
        Command::Profile { survey, file } => {
            let input = read_input(&file)?;
            let m = load_module(&input, survey.q)?;
            let profile = socle_rank_profile(&m, survey.d, survey.mode())?;
            let observations: Vec<Value> = profile
                .observations
                .iter()
                .map(
                    |(u, s, rd)| json!({"subspace": subspace_json(u), "soc_dim": s, "rad_dim": rd}),
                )
                .collect();
            (
                input.digest(),
                json!({
                    "d": profile.d,
                    "scope": scope_json(profile.scope),
                    "min_soc": profile.min_soc,
                    "max_soc": profile.max_soc,
                    "min_rad": profile.min_rad,
                    "max_rad": profile.max_rad,
                    "observations": observations,
                }),
                EXIT_OK,
            )
        }
        Command::Stratum {
            mode,
            q,
            count,
            seed,
            file,
        } => {
            let input = read_input(&file)?;
            let m = load_module(&input, q)?;
            let mode = match mode {
                ModeKind::Exhaustive => SurveyMode::Exhaustive,
                ModeKind::Sample => SurveyMode::Sample {
                    count: count.unwrap_or(DEFAULT_SAMPLE_COUNT),
                    seed,
                },
            };
            let s = stratum(&m, mode)?;
            let value = match s {
                Some((d, scope)) => json!({"stratum": d, "scope": scope_json(scope)}),
                None => json!({"stratum": null}),
            };
            (input.digest(), value, EXIT_OK)
        }
        Command::Orbit {
            range,
            mode,
            q,
            count,
            seed,
            file,
        } => {
            let input = read_input(&file)?;
            let m = load_module(&input, q)?;
            let (lo, hi) = parse_range(&range)?;
            let mode = match mode {
                ModeKind::Exhaustive => SurveyMode::Exhaustive,
                ModeKind::Sample => SurveyMode::Sample {
                    count: count.unwrap_or(DEFAULT_SAMPLE_COUNT),
                    seed,
                },
            };
            let scan = cone_scan(&m, lo, hi, mode)?;
            let steps: Vec<Value> = scan
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "power": s.power,
                        "dim": [s.dim.d1, s.dim.d2],
                        "esp": s.esp,
                        "erp": s.erp,
                        "stratum": s.stratum(),
                    })
                })
                .collect();
            (
                input.digest(),
                json!({
                    "window": [scan.window.0, scan.window.1],
                    "steps": steps,
                    "stopped_at_projective": scan.stopped_at_projective,
                    "stopped_at_injective": scan.stopped_at_injective,
                    "m_candidate": scan.m_candidate,
                    "width_candidate": scan.width_candidate,
                    "window_limited": scan.window_limited,
                }),
                EXIT_OK,
            )
        }
        Command::Construct { what } => return construct(what, out),
        Command::Grassmann { what } => {
            let value = match what {
                GrassmannCommand::Count { d, r, q } => {
                    Field::prime(q)?;
                    if d < 1 || d >= r {
                        return Err(Error::SubspaceDimensionOutOfRange { d, r });
                    }
                    json!({"count": gaussian_binomial(q, d, r).to_string()})
                }
                GrassmannCommand::Enumerate { d, r, q } => {
                    let field = Field::prime(q)?;
                    let pts = grassmannian_points(field, d, r)?;
                    json!({
                        "count": pts.len(),
                        "points": pts.iter().map(subspace_json).collect::<Vec<_>>(),
                    })
                }
            };
            ("none".to_string(), value, EXIT_OK)
        }
        Command::Dual { file } => {
            let input = read_input(&file)?;
            let m = load_module(&input, None)?;
            (
                input.digest(),
                json!({"module": module_value(&m.dual())}),
                EXIT_OK,
            )
        }
        Command::Tau { inverse, file } => {
            let input = read_input(&file)?;
            let m = load_module(&input, None)?;
            let value = if inverse {
                let t = tau_inv(&m)?;
                json!({
                    "module": module_value(&t.translate),
                    "stripped": {"i1": t.stripped_i1, "i2": t.stripped_i2},
                })
            } else {
                let t = tau(&m)?;
                json!({
                    "module": module_value(&t.translate),
                    "stripped": {"p1": t.stripped_p1, "p2": t.stripped_p2},
                })
            };
            (input.digest(), value, EXIT_OK)
        }
        Command::Hom { file1, file2 } => {
            let t1 = std::fs::read_to_string(&file1)?;
            let t2 = std::fs::read_to_string(&file2)?;
            let m = parse_module(&t1)?;
            let n = parse_module(&t2)?;
            let digest = {
                let mut h = Sha256::new();
                h.update(t1.as_bytes());
                h.update(t2.as_bytes());
                format!("sha256:{:x}", h.finalize())
            };
            (digest, json!({"hom_dim": hom_dim(&m, &n)?}), EXIT_OK)
        }
        Command::Ext { file1, file2 } => {
            let t1 = std::fs::read_to_string(&file1)?;
            let t2 = std::fs::read_to_string(&file2)?;
            let m = parse_module(&t1)?;
            let n = parse_module(&t2)?;
            let digest = {
                let mut h = Sha256::new();
                h.update(t1.as_bytes());
                h.update(t2.as_bytes());
                format!("sha256:{:x}", h.finalize())
            };
            (digest, json!({"ext_dim": ext_dim(&m, &n)?}), EXIT_OK)
        }
    };
    Ok((digest, result, code, out))
}

fn module_value(m: &KroneckerModule) -> Value {
    serde_json::to_value(ModuleDoc::from_module(m)).expect("serializable")
}

fn construct(what: ConstructCommand, out: Option<std::path::PathBuf>) -> Result<Executed> {
    let (digest, value) = match what {
        ConstructCommand::Xu { r, q, basis } => {
            let field = Field::prime(q)?;
            let rows = parse_int_matrix(field, &basis)?;
            if rows.cols() != r {
                return Err(Error::WrongVectorLength {
                    expected: r,
                    got: rows.cols(),
                });
            }
            let u = Subspace::from_spanning_rows(rows)?;
            let xu = x_u_module(&u)?;
            (
                "none".to_string(),
                json!({"module": module_value(&xu.module)}),
            )
        }
        ConstructCommand::Projective { i, r, q } => {
            let field = field_choice(q)?;
            let m = projective(field, r, i)?;
            ("none".to_string(), json!({"module": module_value(&m)}))
        }
        ConstructCommand::Injective { i, r, q } => {
            let field = field_choice(q)?;
            let m = injective(field, r, i)?;
            ("none".to_string(), json!({"module": module_value(&m)}))
        }
        ConstructCommand::RingelE { q } => {
            let field = field_choice(q)?;
            let m = ringel_e(field)?;
            ("none".to_string(), json!({"module": module_value(&m)}))
        }
        ConstructCommand::Inflate { s, file } => {
            let input = read_input(&file)?;
            let m = load_module(&input, None)?;
            let inf = inflate(&m, s)?;
            (input.digest(), json!({"module": module_value(&inf)}))
        }
        ConstructCommand::Twist { g, file } => {
            let input = read_input(&file)?;
            let m = load_module(&input, None)?;
            let gm = parse_int_matrix(m.field(), &g)?;
            let g = GlMatrix::new(gm)?;
            let t = gl_twist(&m, &g)?;
            (input.digest(), json!({"module": module_value(&t)}))
        }
        ConstructCommand::Tower { n, seed, file } => {
            let input = read_input(&file)?;
            let m = load_module(&input, None)?;
            let tower = self_extension_tower(&m, n, seed, TowerDirection::BrickAtBottom)?;
            (
                input.digest(),
                json!({
                    "members": tower.iter().map(module_value).collect::<Vec<_>>(),
                }),
            )
        }
    };
    Ok((digest, value, EXIT_OK, out))
}

fn field_choice(q: Option<u64>) -> Result<Field> {
    match q {
        Some(q) => Field::prime(q),
        None => Ok(Field::Rational),
    }
}

fn parse_range(text: &str) -> Result<(i64, i64)> {
    let parts: Vec<&str> = text.split("..").collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!(
            "range must look like lo..hi, got {text}"
        )));
    }
    let lo: i64 = parts[0]
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("{e}")))?;
    let hi: i64 = parts[1]
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("{e}")))?;
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    const RINGEL_DOC: &str = r#"{
  "field": { "prime": 5 },
  "r": 3,
  "dim": [2, 2],
  "maps": [
    [[1, 0], [0, 1]],
    [[0, 1], [0, 0]],
    [[0, 0], [1, 0]]
  ]
}
"#;

    #[test]
    fn parse_the_ringel_document() {
        let m = parse_module(RINGEL_DOC).unwrap();
        assert_eq!(m.dim(), DimVector::new(2, 2));
        assert_eq!(m, ringel_e(Field::prime(5).unwrap()).unwrap());
    }

    #[test]
    fn map_count_mismatch_is_rejected() {
        let bad = r#"{"field": {"prime": 5}, "r": 4, "dim": [2,2],
            "maps": [[[1,0],[0,1]], [[0,1],[0,0]], [[0,0],[1,0]]]}"#;
        assert!(parse_module(bad).is_err());
    }

    #[test]
    fn entries_reduce_modulo_p_to_a_canonical_form() {
        let shifted = r#"{"field": {"prime": 5}, "r": 3, "dim": [2,2],
            "maps": [[[6,0],[0,-4]], [[0,11],[5,0]], [[0,0],[-9,0]]]}"#;
        let m = parse_module(shifted).unwrap();
        assert_eq!(
            serialize_module(&m),
            serialize_module(&parse_module(RINGEL_DOC).unwrap())
        );
    }

    #[test]
    fn serialization_round_trips_byte_stably() {
        let m = parse_module(RINGEL_DOC).unwrap();
        let once = serialize_module(&m);
        let twice = serialize_module(&parse_module(&once).unwrap());
        assert_eq!(once, twice);
    }

    #[test]
    fn parse_error_carries_location() {
        let e = parse_module("{\"field\": {\"prime\": 5}, ").unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("line") || msg.contains("column"), "{msg}");
    }

    fn run(args: &[&str]) -> (Report, i32) {
        let argv: Vec<String> = std::iter::once("kronrank".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        run_command(&argv)
    }

    #[test]
    fn grassmann_count_command() {
        let (report, code) = run(&["grassmann", "count", "--d", "1", "--r", "3", "--q", "2"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(report.result["count"], "7");
    }

    #[test]
    fn check_commands_follow_the_exit_contract() {
        let dir = std::env::temp_dir().join("kronrank-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("e.json");
        std::fs::write(&path, RINGEL_DOC).unwrap();
        let p = path.to_str().unwrap();

        let (report, code) = run(&["check", "esp", "--d", "2", "--mode", "exhaustive", p]);
        assert_eq!(code, EXIT_OK, "{report:?}");

        let (report, code) = run(&["check", "csr", "--d", "1", p]);
        assert_eq!(code, EXIT_PROPERTY_FAILED);
        let witness = &report.result["verdicts"][0]["witness"];
        let dims = [
            witness["dim_u"].as_u64().unwrap(),
            witness["dim_v"].as_u64().unwrap(),
        ];
        assert_eq!(dims, [2, 3]);

        let (_, code) = run(&[
            "check", "esp", "--d", "2", "--mode", "sample", "--count", "8", p,
        ]);
        assert_eq!(code, EXIT_UNDETERMINED);

        let (_, code) = run(&["check", "esp", "--d", "9", p]);
        assert_eq!(code, EXIT_ERROR);
    }

    #[test]
    fn reports_are_deterministic_up_to_timing() {
        let dir = std::env::temp_dir().join("kronrank-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("e2.json");
        std::fs::write(&path, RINGEL_DOC).unwrap();
        let p = path.to_str().unwrap();
        let (r1, c1) = run(&["profile", "--d", "1", p]);
        let (r2, c2) = run(&["profile", "--d", "1", p]);
        assert_eq!(c1, c2);
        let strip = |r: &Report| {
            let mut v = serde_json::to_value(r).unwrap();
            v.as_object_mut().unwrap().remove("timing_ms");
            v
        };
        assert_eq!(strip(&r1), strip(&r2));
    }

    #[test]
    fn witnesses_reverify_through_the_library() {
        let dir = std::env::temp_dir().join("kronrank-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("e3.json");
        std::fs::write(&path, RINGEL_DOC).unwrap();
        let (report, code) = run(&["check", "csr", "--d", "1", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_PROPERTY_FAILED);
        let w = &report.result["verdicts"][0]["witness"];
        let m = parse_module(RINGEL_DOC).unwrap();
        for (key, dim_key) in [("u", "dim_u"), ("v", "dim_v")] {
            let basis = w[key]["basis"].as_array().unwrap();
            let rows: Vec<i64> = basis
                .iter()
                .flat_map(|row| row.as_array().unwrap().iter().map(|v| v.as_i64().unwrap()))
                .collect();
            let sub = Subspace::from_spanning_rows(Matrix::from_int_rows(
                m.field(),
                basis.len(),
                3,
                &rows,
            ))
            .unwrap();
            assert_eq!(
                crate::test_modules::soc_dim(&m, &sub).unwrap() as u64,
                w[dim_key].as_u64().unwrap()
            );
        }
    }
}
