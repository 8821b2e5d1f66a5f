use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hypersym::charpoly::{self, CharpolyError};
use hypersym::hypergraph::{
    three_class_family, two_class_family, Chromatic, Hypergraph, HypergraphError,
};
use hypersym::json::{self as wire, JsonError};
use hypersym::parity::{self, Certificate, ParityError};
use hypersym::spectra::{self, EigenPair, PowerOptions, SpectraError};
use hypersym::tensor::TensorError;
use hypersym::{CubicalTensor, Scalar};

#[derive(Parser, Debug)]
#[command(
    name = "hypersym",
    version,
    about = "Spectra, parity certificates and characteristic polynomials of cubical tensors"
)]
struct Cli {
    /// Input JSON file; standard input when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Bracket gap at which power iteration stops.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, global = true, default_value_t = 100_000)]
    max_iter: usize,
    /// Largest number of classes tried by `chromatic`.
    #[arg(long, global = true, default_value_t = 8)]
    max_k: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Perron pair of a nonnegative weakly irreducible tensor or hypergraph.
    Rho,
    /// Solve for an odd-coloring, or print an obstruction.
    OddColoring,
    /// Solve for an odd transversal, or print an obstruction.
    OddTransversal,
    /// Turn an odd transversal into an odd-coloring or back.
    ConvertCertificate {
        /// Arity of the target coloring (transversal input only).
        #[arg(long)]
        r: Option<usize>,
        /// Number of vertices (transversal input only).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Decide whether the spectrum is symmetric, with witnesses.
    CheckSymmetric,
    /// Exact characteristic polynomial.
    Charpoly,
    /// Residual of an eigenpair against the input tensor.
    VerifyEigenpair {
        /// EigenPair JSON file.
        #[arg(long)]
        pair: PathBuf,
    },
    /// Compare the characteristic polynomial with the product over components.
    VerifyProduct {
        /// Instead, append an isolated vertex and compare multiplicities.
        #[arg(long)]
        isolated_vertex: bool,
    },
    /// Weak chromatic number of a hypergraph.
    Chromatic {
        /// Search nodes before giving up.
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// Generate one of the counterexample families.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        size_a: Option<usize>,
        #[arg(long)]
        size_b: Option<usize>,
        #[arg(long)]
        size_c: Option<usize>,
        /// Emit the coloring witness instead of the hypergraph.
        #[arg(long)]
        witness: bool,
    },
    /// Emit a named example object.
    Fixture {
        name: FixtureName,
        /// Arity for `edge-r`.
        #[arg(long, default_value_t = 4)]
        r: usize,
    },
}

/// `two-class`: 4k-sets meeting each of two classes in 2k vertices.
/// `three-class`: the 3-chromatic family on three classes.
#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    #[value(name = "two-class", alias = "prop4")]
    TwoClass,
    #[value(name = "three-class", alias = "prop5")]
    ThreeClass,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FixtureName {
    H2,
    A1,
    A2,
    Order6,
    #[value(name = "two-class-k1", alias = "prop4-k1")]
    TwoClassK1,
    #[value(name = "three-class-k1", alias = "prop5-k1")]
    ThreeClassK1,
    EdgeR,
}

enum Failure {
    Usage(String),
    Precondition(String),
    NotConverged(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::NotConverged(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Precondition(m) | Failure::NotConverged(m) => m,
        }
    }
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Self {
        match e {
            JsonError::Syntax(_) | JsonError::Schema(_) => Failure::Usage(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

impl From<SpectraError> for Failure {
    fn from(e: SpectraError) -> Self {
        match e {
            SpectraError::NotConverged { .. } => Failure::NotConverged(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

macro_rules! precondition {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Precondition(e.to_string())
            }
        }
    )*};
}

precondition!(CharpolyError, ParityError, TensorError, HypergraphError);

fn read_input(path: &Option<PathBuf>) -> Result<Value, Failure> {
    let text = match path {
        Some(p) => {
            fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?
        }
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("invalid JSON: {e}")))
}

fn read_tensor(cli: &Cli) -> Result<CubicalTensor, Failure> {
    Ok(wire::load_tensor(&read_input(&cli.input)?)?)
}

fn fixture(name: FixtureName, r: usize) -> Result<Value, Failure> {
    let matrix = |rows: &[Vec<i64>]| -> Result<Value, Failure> {
        Ok(wire::tensor_to_json(&CubicalTensor::from_rows(rows)?))
    };
    match name {
        FixtureName::H2 => matrix(&[vec![1, 1], vec![1, -1]]),
        FixtureName::A1 => matrix(&[
            vec![0, 1, 1, 1],
            vec![1, 0, 1, 1],
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 0],
        ]),
        FixtureName::A2 => matrix(&[
            vec![0, 1, 0, 0],
            vec![1, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 0],
        ]),
        FixtureName::Order6 => {
            let entries = (0..6).map(|k| (vec![k, (k + 1) % 6, (k + 2) % 6], Scalar::one()));
            Ok(wire::tensor_to_json(&CubicalTensor::new(3, 6, entries)?))
        }
        FixtureName::TwoClassK1 => Ok(wire::hypergraph_to_json(&two_class_family(1, 4, 4)?.0)),
        FixtureName::ThreeClassK1 => {
            Ok(wire::hypergraph_to_json(&three_class_family(1, 6, 6, 4)?.0))
        }
        FixtureName::EdgeR => {
            if r < 2 {
                return Err(Failure::Usage(format!("edge-r needs r >= 2, got {r}")));
            }
            Ok(wire::hypergraph_to_json(&Hypergraph::new(
                r,
                r,
                vec![(0..r).collect()],
            )?))
        }
    }
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    let opts = PowerOptions {
        tol: cli.tol,
        max_iter: cli.max_iter,
        shift: None,
    };
    match &cli.verb {
        Verb::Rho => {
            let a = read_tensor(cli)?;
            Ok(wire::perron_to_json(&spectra::spectral_radius_power(
                &a, &opts,
            )?))
        }
        Verb::OddColoring => Ok(wire::coloring_outcome_to_json(&parity::odd_coloring(
            &read_tensor(cli)?,
        )?)),
        Verb::OddTransversal => Ok(wire::transversal_outcome_to_json(&parity::odd_transversal(
            &read_tensor(cli)?,
        ))),
        Verb::ConvertCertificate { r, n } => {
            let cert = wire::certificate_from_json(&read_input(&cli.input)?)?;
            let out = match cert {
                Certificate::Coloring(phi) => {
                    Certificate::Transversal(parity::coloring_to_transversal(&phi)?)
                }
                Certificate::Transversal(x) => {
                    let (Some(r), Some(n)) = (r, n) else {
                        return Err(Failure::Usage(
                            "converting a transversal needs --r and --n".into(),
                        ));
                    };
                    Certificate::Coloring(parity::transversal_to_coloring(&x, *r, *n)?)
                }
            };
            Ok(wire::certificate_to_json(&out))
        }
        Verb::CheckSymmetric => {
            let a = read_tensor(cli)?;
            Ok(wire::symmetry_report_to_json(
                &spectra::check_symmetric_spectrum_certified(&a, &opts)?,
            ))
        }
        Verb::Charpoly => Ok(wire::poly_to_json(&charpoly::charpoly(&read_tensor(cli)?)?)),
        Verb::VerifyEigenpair { pair } => {
            let a = read_tensor(cli)?;
            let (lambda, x) = wire::eigenpair_from_json(&read_input(&Some(pair.clone()))?)?;
            Ok(wire::eigenpair_to_json(&EigenPair::certify(&a, lambda, x)?))
        }
        Verb::VerifyProduct { isolated_vertex } => {
            let a = read_tensor(cli)?;
            if *isolated_vertex {
                Ok(wire::isolated_report_to_json(
                    &charpoly::isolated_vertex_multiplicity_check(&a)?,
                ))
            } else {
                Ok(wire::product_report_to_json(
                    &charpoly::verify_component_product(&a)?,
                ))
            }
        }
        Verb::Chromatic { budget } => {
            let g = wire::hypergraph_from_json(&read_input(&cli.input)?)?;
            Ok(match g.chromatic_number(cli.max_k, *budget)? {
                Chromatic::Exact(c) => json!({"chromatic_number": c.k, "coloring": c.assignment}),
                Chromatic::ExceedsMax(k) => json!({"chromatic_number": null, "exceeds": k}),
            })
        }
        Verb::Gen {
            family,
            k,
            size_a,
            size_b,
            size_c,
            witness,
        } => {
            let (g, phi) = match family {
                Family::TwoClass => {
                    two_class_family(*k, size_a.unwrap_or(4 * k), size_b.unwrap_or(4 * k))?
                }
                Family::ThreeClass => three_class_family(
                    *k,
                    size_a.unwrap_or(6 * k),
                    size_b.unwrap_or(6 * k),
                    size_c.unwrap_or(4 * k),
                )?,
            };
            Ok(if *witness {
                wire::certificate_to_json(&Certificate::Coloring(phi))
            } else {
                wire::hypergraph_to_json(&g)
            })
        }
        Verb::Fixture { name, r } => fixture(*name, *r),
    }
}

fn emit(path: &Option<PathBuf>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Format::Json = cli.format;
    match run(&cli) {
        Ok(v) => match emit(&cli.output, &wire::to_line(&v)) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("hypersym: {e}");
                ExitCode::from(2)
            }
        },
        Err(f) => {
            eprintln!("hypersym: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
