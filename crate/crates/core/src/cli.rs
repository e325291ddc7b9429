//! Command-line front end.
//!
//! Exit codes: `0` success, `1` the weight is not in the cone (`member`
//! only), `2` usage, parse or validation error. Setting
//! `QUIVER_CONES_THREADS` caps the number of worker threads; output never
//! depends on it.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::cone::{self, Method, Verdict, Violation};
use crate::error::{Error, Result};
use crate::io::{
    parse_dim, parse_int_list, parse_quiver_file, parse_weight, serialize_quiver_file,
};
use crate::quiver::{Involution, OrbitBasis, Quiver};
use crate::reduce;
use crate::schofield::ExtTable;
use crate::zoo::{self, FamilySpec};

pub const THREADS_ENV: &str = "QUIVER_CONES_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "quiver-cones",
    version,
    about = "Semi-invariant weight cones of acyclic quivers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a quiver file.
    Validate { file: PathBuf },
    /// Euler–Ringel form ⟨a,b⟩.
    Euler {
        file: PathBuf,
        #[arg(long = "a")]
        a: String,
        #[arg(long = "b")]
        b: String,
    },
    /// Generic ext(a,b).
    Ext {
        file: PathBuf,
        #[arg(long = "a")]
        a: String,
        #[arg(long = "b")]
        b: String,
    },
    /// Generic hom(a,b).
    Hom {
        file: PathBuf,
        #[arg(long = "a")]
        a: String,
        #[arg(long = "b")]
        b: String,
    },
    /// Test beta ↪ alpha, or list every generic subdimension of alpha.
    Subdim {
        file: PathBuf,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: Option<String>,
    },
    /// Discrepancy max{σ(β) : β ↪ α} and a witness.
    Disc {
        file: PathBuf,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        sigma: String,
    },
    /// Decide σ ∈ Σ(Q, α).
    Member {
        file: PathBuf,
        #[arg(long)]
        alpha: String,
        /// Full weight literal.
        #[arg(long, conflicts_with = "coords")]
        sigma: Option<String>,
        /// Anti-symmetric weight by orbit coordinates, e.g. `1,0,-1`.
        #[arg(long, allow_hyphen_values = true)]
        coords: Option<String>,
        /// Orbit representatives for `--coords`, e.g. `x4,x5,x6`.
        #[arg(long)]
        reps: Option<String>,
        #[arg(long, default_value = "dw")]
        method: String,
        #[arg(long)]
        involution: Option<String>,
    },
    /// Emit the inequality system of a membership test.
    Inequalities {
        file: PathBuf,
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value = "dw")]
        method: String,
        #[arg(long)]
        involution: Option<String>,
        /// Print coefficient rows on anti-symmetric coordinates.
        #[arg(long)]
        coords: bool,
        #[arg(long)]
        reps: Option<String>,
        /// Remove rows defining the same restricted halfspace.
        #[arg(long)]
        dedup: bool,
        /// Remove zero rows.
        #[arg(long)]
        drop_zero: bool,
    },
    /// TSV line `alpha n1 n2 n3...` (one n3 per --involution).
    Counts {
        file: PathBuf,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        involution: Vec<String>,
    },
    /// Irredundant core of an inequality system.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value = "antiinv")]
        method: String,
        #[arg(long)]
        involution: Option<String>,
        #[arg(long)]
        reps: Option<String>,
    },
    /// Print a quiver file for a standard family.
    Zoo {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    Line {
        #[arg(long)]
        n: usize,
    },
    Kronecker {
        #[arg(long)]
        n: usize,
    },
    Sun {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    D5hat,
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let result = match thread_pool() {
        Ok(Some(pool)) => pool.install(|| execute(cli.command)),
        Ok(None) => execute(cli.command),
        Err(e) => Err(e),
    };
    match result {
        Ok((code, text)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn thread_pool() -> Result<Option<rayon::ThreadPool>> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(None);
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| Error::BadParameter(format!("{THREADS_ENV} must be a positive integer")))?;
    if threads == 0 {
        return Err(Error::BadParameter(format!(
            "{THREADS_ENV} must be positive"
        )));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map(Some)
        .map_err(|e| Error::BadParameter(e.to_string()))
}

fn load(file: &PathBuf) -> Result<(Quiver, Vec<Involution>)> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::BadParameter(format!("{}: {e}", file.display())))?;
    parse_quiver_file(&text)
}

fn pick<'a>(invs: &'a [Involution], name: Option<&str>) -> Result<Option<&'a Involution>> {
    name.map(|n| {
        invs.iter()
            .find(|i| i.name() == n)
            .ok_or_else(|| Error::Unknown {
                kind: "involution",
                id: n.to_string(),
            })
    })
    .transpose()
}

fn basis_for(q: &Quiver, inv: &Involution, reps: Option<&str>) -> Result<OrbitBasis> {
    match reps {
        None => Ok(OrbitBasis::new(q, inv)),
        Some(list) => {
            let ids: Vec<&str> = list
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .collect();
            OrbitBasis::with_representatives(q, inv, &ids)
        }
    }
}

fn coords_header(q: &Quiver, basis: &OrbitBasis) -> String {
    let ids: Vec<&str> = basis
        .representatives()
        .into_iter()
        .map(|r| q.vertices()[r].as_str())
        .collect();
    format!("# coordinates\t{}\n", ids.join("\t"))
}

fn tsv_row(row: &[i64]) -> String {
    let cells: Vec<String> = row.iter().map(i64::to_string).collect();
    cells.join("\t")
}

fn execute(command: Command) -> Result<(i32, String)> {
    let mut out = String::new();
    let code = match command {
        Command::Validate { file } => {
            let (q, invs) = load(&file)?;
            let names: Vec<&str> = invs.iter().map(Involution::name).collect();
            out = format!(
                "ok\t{}\t{} vertices\t{} arrows\tinvolutions: {}\n",
                q.name(),
                q.vertex_count(),
                q.arrows().len(),
                if names.is_empty() {
                    "-".to_string()
                } else {
                    names.join(",")
                }
            );
            0
        }
        Command::Euler { file, a, b } => {
            let (q, _) = load(&file)?;
            let v = q.euler_form(&parse_dim(&q, &a)?, &parse_dim(&q, &b)?)?;
            out = format!("{v}\n");
            0
        }
        Command::Ext { file, a, b } => {
            let (q, _) = load(&file)?;
            let t = ExtTable::new(&q);
            out = format!(
                "{}\n",
                t.ext_generic(&parse_dim(&q, &a)?, &parse_dim(&q, &b)?)?
            );
            0
        }
        Command::Hom { file, a, b } => {
            let (q, _) = load(&file)?;
            let t = ExtTable::new(&q);
            out = format!(
                "{}\n",
                t.hom_generic(&parse_dim(&q, &a)?, &parse_dim(&q, &b)?)?
            );
            0
        }
        Command::Subdim { file, alpha, beta } => {
            let (q, _) = load(&file)?;
            let t = ExtTable::new(&q);
            let alpha = parse_dim(&q, &alpha)?;
            match beta {
                Some(beta) => {
                    let b = t.is_generic_subdim(&parse_dim(&q, &beta)?, &alpha)?;
                    out = format!("{b}\n");
                }
                None => {
                    for b in t.enumerate_generic_subdims(&alpha)? {
                        out.push_str(&format!("{b}\n"));
                    }
                }
            }
            0
        }
        Command::Disc { file, alpha, sigma } => {
            let (q, _) = load(&file)?;
            let t = ExtTable::new(&q);
            let (v, w) = t.disc_witness(&parse_dim(&q, &alpha)?, &parse_weight(&q, &sigma)?)?;
            out = format!("{v}\twitness={w}\n");
            0
        }
        Command::Member {
            file,
            alpha,
            sigma,
            coords,
            reps,
            method,
            involution,
        } => {
            let (q, invs) = load(&file)?;
            let method: Method = method.parse()?;
            let inv = pick(&invs, involution.as_deref())?;
            let alpha = parse_dim(&q, &alpha)?;
            let s = match (sigma, coords) {
                (Some(s), None) => parse_weight(&q, &s)?,
                (None, Some(c)) => {
                    let inv = inv.ok_or_else(|| {
                        Error::BadParameter("--coords requires --involution".into())
                    })?;
                    basis_for(&q, inv, reps.as_deref())?.from_coords(&parse_int_list(&c)?)?
                }
                _ => {
                    return Err(Error::BadParameter(
                        "give exactly one of --sigma, --coords".into(),
                    ))
                }
            };
            let t = ExtTable::new(&q);
            match cone::member(&t, &s, &alpha, method, inv)? {
                Verdict::Member => {
                    out.push_str("member\n");
                    0
                }
                Verdict::NotMember(Violation::Equality { value }) => {
                    out = format!("not-member\tsigma(alpha)={value}\n");
                    1
                }
                Verdict::NotMember(Violation::Inequality { beta, value }) => {
                    out = format!("not-member\twitness={beta}\tsigma(beta)={value}\n");
                    1
                }
            }
        }
        Command::Inequalities {
            file,
            alpha,
            method,
            involution,
            coords,
            reps,
            dedup,
            drop_zero,
        } => {
            let (q, invs) = load(&file)?;
            let method: Method = method.parse()?;
            let inv = pick(&invs, involution.as_deref())?;
            let alpha = parse_dim(&q, &alpha)?;
            let basis = match inv {
                Some(inv) if method == Method::AntiInv => {
                    Some(basis_for(&q, inv, reps.as_deref())?)
                }
                _ => None,
            };
            let t = ExtTable::new(&q);
            let mut sys = cone::inequalities(&t, &alpha, method, inv, basis)?;
            if dedup {
                sys.dedup_restricted();
            }
            if drop_zero {
                sys.drop_zero_rows();
            }
            if coords {
                let basis = sys.coordinate_space.as_ref().ok_or_else(|| {
                    Error::BadParameter("--coords requires --method antiinv".into())
                })?;
                out.push_str(&coords_header(&q, basis));
                for row in sys.sorted_rows() {
                    out.push_str(&tsv_row(&row));
                    out.push('\n');
                }
            } else {
                for b in &sys.normals {
                    out.push_str(&format!("{b}\n"));
                }
            }
            0
        }
        Command::Counts {
            file,
            alpha,
            involution,
        } => {
            let (q, invs) = load(&file)?;
            let alpha = parse_dim(&q, &alpha)?;
            let chosen = involution
                .iter()
                .map(|n| pick(&invs, Some(n)).map(|i| i.expect("name given")))
                .collect::<Result<Vec<_>>>()?;
            let t = ExtTable::new(&q);
            let c = cone::counts(&t, &alpha, &chosen)?;
            let mut cells = vec![alpha.to_string(), c.n1.to_string(), c.n2.to_string()];
            cells.extend(c.n3.iter().map(usize::to_string));
            out = format!("{}\n", cells.join("\t"));
            0
        }
        Command::Reduce {
            file,
            alpha,
            method,
            involution,
            reps,
        } => {
            let (q, invs) = load(&file)?;
            let method: Method = method.parse()?;
            let inv = pick(&invs, involution.as_deref())?;
            let alpha = parse_dim(&q, &alpha)?;
            let basis = match inv {
                Some(inv) if method == Method::AntiInv => {
                    Some(basis_for(&q, inv, reps.as_deref())?)
                }
                _ => None,
            };
            let t = ExtTable::new(&q);
            let mut sys = cone::inequalities(&t, &alpha, method, inv, basis)?;
            sys.dedup_restricted();
            let core = reduce::irredundant_core(&sys)?;
            out.push_str(&format!("# rows\t{}\tcore\t{}\n", sys.len(), core.len()));
            match &core.coordinate_space {
                Some(basis) => {
                    out.push_str(&coords_header(&q, basis));
                    for row in core.primitive_rows() {
                        out.push_str(&tsv_row(&row));
                        out.push('\n');
                    }
                }
                None => {
                    for b in &core.normals {
                        out.push_str(&format!("{b}\n"));
                    }
                }
            }
            0
        }
        Command::Zoo { family } => {
            let spec = match family {
                Family::Line { n } => FamilySpec::Line { n },
                Family::Kronecker { n } => FamilySpec::Kronecker { n },
                Family::Sun { k, n } => FamilySpec::Sun { k, n },
                Family::D5hat => FamilySpec::D5Hat,
            };
            let (q, invs) = zoo::build(spec)?;
            out = serialize_quiver_file(&q, &invs);
            0
        }
    };
    Ok((code, out))
}
