//! Command-line front end. `run` is the whole program minus process exit so
//! it can be driven from tests.

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::chevalley::{RootKind, StructureTable};
use crate::claims::{run_all_claims, Config, Format};
use crate::embedding::{decompose_adjoint, generate_submodule, phi_so14_e8, Embedding};
use crate::error::{LieError, Result};
use crate::expr::parse_element;
use crate::rep_theory::tensor_decompose;
use crate::root_system::{CartanType, RootSystem, Weight};

#[derive(Debug, Parser)]
#[command(
    name = "lie",
    version,
    about = "Exact Chevalley-basis computations for E8 and D7"
)]
pub struct Cli {
    /// Structure table dump to use instead of building one.
    #[arg(long, global = true, value_name = "FILE")]
    table: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the positive roots in table order.
    Roots { cartan_type: CartanType },
    /// Evaluate `[A, B]`; the two expressions are separated by a lone `,`.
    Bracket {
        cartan_type: CartanType,
        #[arg(num_args = 3.., allow_hyphen_values = true, value_name = "EXPR")]
        args: Vec<String>,
    },
    /// Left-nested bracket of simple root vectors.
    Nested {
        cartan_type: CartanType,
        #[arg(value_enum, ignore_case = true)]
        kind: Kind,
        /// Comma-separated simple indices.
        indices: String,
    },
    /// Decompose `V(a) ⊗ V(b)` into irreducibles.
    Tensor {
        cartan_type: CartanType,
        a: String,
        b: String,
    },
    /// Submodule generated by an element under the adjoint action of D7
    /// (for E8) or of the whole algebra (otherwise).
    Submodule {
        cartan_type: CartanType,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Decompose E8 under the image of D7.
    Decompose,
    /// Run the claim registry.
    Verify {
        /// Run only these claim ids (repeatable or comma-separated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long, default_value_t = 1_000_000)]
        jacobi_samples: usize,
        /// Flip one structure constant before running (fault injection).
        #[arg(long, hide = true)]
        corrupt_table: bool,
    },
    /// Print the structure table in dump format.
    DumpTable { cartan_type: CartanType },
}

fn load_table(path: &Option<PathBuf>) -> Result<Option<Arc<StructureTable>>> {
    match path {
        None => Ok(None),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| LieError::Invalid(format!("cannot read {}: {e}", p.display())))?;
            Ok(Some(Arc::new(StructureTable::load(&text)?)))
        }
    }
}

fn table_for(ct: CartanType, loaded: &Option<Arc<StructureTable>>) -> Result<Arc<StructureTable>> {
    match loaded {
        Some(t) if t.cartan_type() == ct => Ok(Arc::clone(t)),
        Some(t) => Err(LieError::RootSystemMismatch {
            left: ct.to_string(),
            right: t.cartan_type().to_string(),
        }),
        None => Ok(Arc::new(StructureTable::build(ct)?)),
    }
}

fn parse_indices(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|e| LieError::Invalid(format!("bad index {s:?}: {e}")))
        })
        .collect()
}

fn parse_weight(rs: &RootSystem, text: &str) -> Result<Weight> {
    let coords = text
        .trim_matches(|c| c == '[' || c == ']')
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|e| LieError::Invalid(format!("bad weight coordinate {s:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != rs.rank() {
        return Err(LieError::Invalid(format!(
            "weight has {} coordinates, rank is {}",
            coords.len(),
            rs.rank()
        )));
    }
    Ok(Weight::new(coords))
}

fn split_pair(args: &[String]) -> Result<(String, String)> {
    let commas: Vec<usize> = args
        .iter()
        .enumerate()
        .filter(|(_, a)| a.as_str() == ",")
        .map(|(i, _)| i)
        .collect();
    match commas.as_slice() {
        [k] if *k > 0 && *k + 1 < args.len() => Ok((args[..*k].join(" "), args[k + 1..].join(" "))),
        _ => Err(LieError::Invalid("expected <exprA> , <exprB>".into())),
    }
}

fn embedding_for(t: Arc<StructureTable>) -> Result<Embedding> {
    if t.cartan_type() == CartanType::e8() {
        phi_so14_e8(&RootSystem::new(CartanType::d7())?, t)
    } else {
        Ok(Embedding::identity(t))
    }
}

/// Executes one command, writing its output to `out`. Returns the exit
/// status: 0 on success, 1 when a claim fails.
fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let loaded = load_table(&cli.table)?;
    let mut text = String::new();
    let mut status = 0;
    match cli.command {
        Command::Roots { cartan_type } => {
            text = RootSystem::new(cartan_type)?.dump();
        }
        Command::DumpTable { cartan_type } => {
            text = table_for(cartan_type, &loaded)?.dump();
        }
        Command::Bracket { cartan_type, args } => {
            let t = table_for(cartan_type, &loaded)?;
            let (a, b) = split_pair(&args)?;
            let (a, b) = (parse_element(&t, &a)?, parse_element(&t, &b)?);
            text = format!("{}\n", t.bracket(&a, &b)?);
        }
        Command::Nested {
            cartan_type,
            kind,
            indices,
        } => {
            let t = table_for(cartan_type, &loaded)?;
            let kind = match kind {
                Kind::X => RootKind::X,
                Kind::Y => RootKind::Y,
            };
            text = format!("{}\n", t.nested_bracket(kind, &parse_indices(&indices)?)?);
        }
        Command::Tensor { cartan_type, a, b } => {
            let rs = RootSystem::new(cartan_type)?;
            let (a, b) = (parse_weight(&rs, &a)?, parse_weight(&rs, &b)?);
            let dec = tensor_decompose(&rs, &a, &b)?;
            text = dec.render(&rs)?;
            text += &format!("TOTAL dim={}\n", dec.total_dim(&rs)?);
        }
        Command::Submodule { cartan_type, expr } => {
            let t = table_for(cartan_type, &loaded)?;
            let w = parse_element(&t, &expr)?;
            let emb = embedding_for(Arc::clone(&t))?;
            let m = generate_submodule(&emb, &w)?;
            let hw = m
                .highest_weight()
                .map_or_else(|| "?".to_string(), ToString::to_string);
            text = format!("SUBMODULE gen={w} dim={} hw={hw}\n", m.dim());
            match m.slots(&t) {
                Some(slots) => {
                    let names: Vec<String> = slots.iter().map(ToString::to_string).collect();
                    text += &format!("BASIS {}\n", names.join(" "));
                }
                None => {
                    for e in crate::embedding::span_elements(&t, &m.basis) {
                        text += &format!("VECTOR {e}\n");
                    }
                }
            }
        }
        Command::Decompose => {
            let t = table_for(CartanType::e8(), &loaded)?;
            let dec = decompose_adjoint(&embedding_for(t)?)?;
            for s in &dec.summands {
                let hw = s
                    .module
                    .highest_weight()
                    .map_or_else(|| "?".to_string(), ToString::to_string);
                text += &format!("SUMMAND gen={} dim={} hw={hw}\n", s.name, s.dim());
            }
            text += &format!(
                "TOTAL dim={} independent={}\n",
                dec.total_dim,
                dec.independent()
            );
        }
        Command::Verify {
            only,
            seed,
            format,
            jacobi_samples,
            corrupt_table,
        } => {
            let format = match format {
                OutputFormat::Text => Format::Text,
                OutputFormat::Structured => Format::Structured,
            };
            let config = Config {
                only,
                seed,
                format,
                table: loaded,
                corrupt_table,
                jacobi_samples,
                ..Config::default()
            };
            let report = run_all_claims(&config)?;
            text = report.render(config.format);
            if !report.all_passed() {
                status = 1;
            }
        }
    }
    out.write_all(text.as_bytes())
        .map_err(|e| LieError::Invalid(format!("write failed: {e}")))?;
    Ok(status)
}

/// Parses `argv` and runs the command. Usage and computation errors go to
/// `err` with exit status 2.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
