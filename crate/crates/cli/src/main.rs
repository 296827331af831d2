//! The `intpoly` command line: polytope documents in, exact results out.
//!
//! Exit status: 0 on success, 1 on domain errors (and for `eq` when the
//! elements differ, or `verify` when a counterexample is found), 2 on usage
//! errors.

use clap::{Parser, Subcommand};
use intpoly::geometry::Hyperplane;
use intpoly::group::{face_euler_characteristic, seminorm};
use intpoly::ops;
use intpoly::scalar::{format_rat, parse_rat};
use intpoly::Int;
use intpoly_cli::{doc, keytext, plot, suites};
use serde_json::{json, Value};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "intpoly",
    about = "Exact Minkowski-sum algebra of integral polytopes",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Canonicalize a vertex list into its extreme points.
    Hull { file: String },
    /// Minkowski sum of two polytopes.
    Sum { a: String, b: String },
    /// Reflection about the origin.
    Reflect { file: String },
    /// The full face lattice with witness directions.
    Faces { file: String },
    /// The face in a given direction.
    Face {
        file: String,
        /// Integer direction, e.g. "0,1".
        #[arg(long)]
        dir: String,
    },
    /// Shadow (hull of the polytope with its bottom compression).
    Shadow { file: String },
    /// Upper shadow (hull with the top compression).
    UpperShadow { file: String },
    /// Cut along a hyperplane into halves and section.
    Cut {
        file: String,
        /// Integer normal vector, e.g. "0,1".
        #[arg(long)]
        normal: String,
        /// Rational offset, e.g. "1" or "3/2".
        #[arg(long)]
        offset: String,
    },
    /// Vertical stretching towards the flat hyperplane at a height.
    Stretch {
        file: String,
        #[arg(long)]
        height: i64,
    },
    /// Glue the upper half of the first polytope to the lower half of the
    /// second along a flat hyperplane.
    Glue {
        a: String,
        b: String,
        #[arg(long, default_value = "0")]
        height: String,
    },
    /// Face Euler characteristic as a group element.
    Euler { file: String },
    /// Exact equality of two group elements (Minkowski cancellation).
    Eq {
        a: String,
        b: String,
        /// Compare in the translation quotient.
        #[arg(long)]
        quotient: bool,
    },
    /// Seminorm of a direction on a group element.
    Norm {
        file: String,
        /// Integer direction, e.g. "1,2".
        #[arg(long)]
        phi: String,
    },
    /// Basis decomposition of a class in the translation quotient.
    Decompose {
        file: String,
        /// Accepted for symmetry; classes always live in the quotient.
        #[arg(long)]
        quotient: bool,
    },
    /// Collapse basis coefficients back to a group element.
    Reassemble { file: String },
    /// Antisymmetric witness T with T - *T = x for a kernel element.
    Witness {
        file: String,
        #[arg(long)]
        quotient: bool,
    },
    /// Single polytope R with P + *R = Q + R for same-seminorm P, Q.
    WitnessR { p: String, q: String },
    /// Grounded/pillar predicates and facet classification.
    Classify { file: String },
    /// Emit an SVG drawing of a planar polytope.
    Plot2d {
        file: String,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Run a seeded verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Coordinate bound B for sampled vertices in [-B, B]^dim;
        /// defaults to $INTPOLY_COORD_BOUND or 5.
        #[arg(long)]
        coord_bound: Option<i64>,
        #[arg(long, default_value_t = 0)]
        start: u64,
        /// Fan trials out across threads (reports stay identical).
        #[arg(long)]
        parallel: bool,
    },
}

enum Failure {
    Domain(String),
    Usage(String),
    /// `eq` reported "unequal" or `verify` found a counterexample.
    Outcome,
}

impl From<doc::DocError> for Failure {
    fn from(e: doc::DocError) -> Self {
        Failure::Domain(e.0)
    }
}

impl From<intpoly::Error> for Failure {
    fn from(e: intpoly::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Domain(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Domain(format!("reading {path}: {e}")))
    }
}

fn read_polytope(path: &str) -> Result<intpoly::Polytope, Failure> {
    let text = read_input(path)?;
    Ok(doc::PolytopeDocument::parse_str(&text)?.to_polytope()?)
}

fn read_element(path: &str, quotient: bool) -> Result<intpoly::GroupElement, Failure> {
    let text = read_input(path)?;
    Ok(doc::parse_element_str(&text, quotient)?)
}

fn parse_int_vec(s: &str) -> Result<Vec<Int>, Failure> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<Int>()
                .map_err(|_| Failure::Usage(format!("malformed integer vector {s:?}")))
        })
        .collect()
}

fn print_value(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).unwrap());
}

fn optional_polytope(p: &Option<intpoly::Polytope>) -> Value {
    match p {
        Some(p) => doc::polytope_value(p),
        None => Value::Null,
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Hull { file } => {
            let text = read_input(&file)?;
            let parsed = doc::PolytopeDocument::parse_str(&text)?;
            let p = parsed.to_polytope()?;
            print_value(&doc::PolytopeDocument::from_polytope(&p, parsed.name).emit());
        }
        Cmd::Sum { a, b } => {
            let p = read_polytope(&a)?;
            let q = read_polytope(&b)?;
            print_value(&doc::polytope_value(&ops::minkowski_sum(&p, &q)?));
        }
        Cmd::Reflect { file } => {
            let p = read_polytope(&file)?;
            print_value(&doc::polytope_value(&ops::reflect(&p)));
        }
        Cmd::Faces { file } => {
            let p = read_polytope(&file)?;
            let faces: Vec<Value> = intpoly::geometry::face_lattice(&p)
                .iter()
                .map(|f| {
                    json!({
                        "dim": f.dim(),
                        "vertex_indices": f.vertex_indices,
                        "witness": f.witness_direction.iter().map(Int::to_string).collect::<Vec<_>>(),
                        "vertices": doc::polytope_value(&f.polytope)["vertices"],
                    })
                })
                .collect();
            print_value(&json!({ "ambient_dim": p.ambient_dim(), "faces": faces }));
        }
        Cmd::Face { file, dir } => {
            let p = read_polytope(&file)?;
            let phi = parse_int_vec(&dir)?;
            if phi.len() != p.ambient_dim() {
                return Err(Failure::Domain(format!(
                    "direction length {} does not match ambient dimension {}",
                    phi.len(),
                    p.ambient_dim()
                )));
            }
            print_value(&doc::polytope_value(&ops::face_in_direction(&p, &phi)));
        }
        Cmd::Shadow { file } => {
            let p = read_polytope(&file)?;
            print_value(&doc::polytope_value(&ops::shadow(&p)));
        }
        Cmd::UpperShadow { file } => {
            let p = read_polytope(&file)?;
            print_value(&doc::polytope_value(&ops::upper_shadow(&p)));
        }
        Cmd::Cut {
            file,
            normal,
            offset,
        } => {
            let p = read_polytope(&file)?;
            let normal = parse_int_vec(&normal)?;
            let offset = parse_rat(&offset)
                .ok_or_else(|| Failure::Usage(format!("malformed offset {offset:?}")))?;
            if normal.len() != p.ambient_dim() {
                return Err(Failure::Domain("normal length mismatch".into()));
            }
            let h = Hyperplane::new(normal, offset)?;
            let r = ops::cut(&p, &h);
            print_value(&json!({
                "upper": optional_polytope(&r.upper),
                "lower": optional_polytope(&r.lower),
                "section": optional_polytope(&r.section),
            }));
        }
        Cmd::Stretch { file, height } => {
            let p = read_polytope(&file)?;
            let r = ops::vertical_stretch(&p, &Int::from(height))?;
            print_value(&json!({
                "k": r.k.to_string(),
                "stretched": doc::polytope_value(&r.stretched),
            }));
        }
        Cmd::Glue { a, b, height } => {
            let p = read_polytope(&a)?;
            let q = read_polytope(&b)?;
            let h = parse_rat(&height)
                .ok_or_else(|| Failure::Usage(format!("malformed height {height:?}")))?;
            let flat = Hyperplane::flat(p.ambient_dim(), h);
            print_value(&doc::polytope_value(&ops::vertical_glue(&p, &q, &flat)?));
        }
        Cmd::Euler { file } => {
            let p = read_polytope(&file)?;
            print_value(&doc::element_value(&face_euler_characteristic(&p)));
        }
        Cmd::Eq { a, b, quotient } => {
            let x = read_element(&a, quotient)?;
            let y = read_element(&b, quotient)?;
            if x.eq(&y)? {
                println!("equal");
            } else {
                println!("unequal");
                return Err(Failure::Outcome);
            }
        }
        Cmd::Norm { file, phi } => {
            let x = read_element(&file, false)?;
            let phi = parse_int_vec(&phi)?;
            if phi.len() != x.ambient_dim() {
                return Err(Failure::Domain("phi length mismatch".into()));
            }
            println!("{}", format_rat(&seminorm(&x, &phi)));
        }
        Cmd::Decompose { file, quotient: _ } => {
            let x = read_element(&file, true)?;
            let d = intpoly::basis::decompose(&x)?;
            print_value(&keytext::decomposition_value(&d));
        }
        Cmd::Reassemble { file } => {
            let text = read_input(&file)?;
            let v: Value = serde_json::from_str(&text)
                .map_err(|e| Failure::Domain(format!("invalid JSON: {e}")))?;
            let d = keytext::parse_decomposition(&v).map_err(Failure::Domain)?;
            let x = intpoly::basis::reassemble(&d)?;
            print_value(&doc::element_value(&x));
        }
        Cmd::Witness { file, quotient } => {
            let x = read_element(&file, quotient)?;
            let w = if quotient {
                intpoly::witness::witness_antisymmetric_pt(&x)?
            } else {
                intpoly::witness::witness_antisymmetric(&x)?
            };
            print_value(&json!({
                "witness": doc::element_value(&w.witness),
                "certificate": [
                    doc::polytope_value(&w.certificate.0),
                    doc::polytope_value(&w.certificate.1),
                ],
            }));
        }
        Cmd::WitnessR { p, q } => {
            let p = read_polytope(&p)?;
            let q = read_polytope(&q)?;
            let r = intpoly::witness::witness_same_norm(&p, &q)?;
            print_value(&doc::polytope_value(&r));
        }
        Cmd::Classify { file } => {
            let p = read_polytope(&file)?;
            let facets: Vec<Value> = ops::classified_facets(&p)?
                .iter()
                .map(|(f, class)| {
                    json!({
                        "class": class.to_string(),
                        "vertices": doc::polytope_value(&f.polytope)["vertices"],
                        "witness": f.witness_direction.iter().map(Int::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let pillar = ops::is_pillar(&p)?.map(|(base, k)| {
                json!({ "base": doc::polytope_value(&base), "k": k.to_string() })
            });
            print_value(&json!({
                "grounded": ops::is_grounded(&p)?,
                "almost_pillar": ops::is_almost_pillar(&p)?,
                "pillar": pillar.unwrap_or(Value::Null),
                "facets": facets,
            }));
        }
        Cmd::Plot2d { file, out } => {
            let p = read_polytope(&file)?;
            let svg = plot::plot2d(&p).map_err(Failure::Domain)?;
            match out {
                Some(path) => std::fs::write(&path, svg)
                    .map_err(|e| Failure::Domain(format!("writing {path}: {e}")))?,
                None => print!("{svg}"),
            }
        }
        Cmd::Verify {
            suite,
            trials,
            seed,
            dim,
            coord_bound,
            start,
            parallel,
        } => {
            let suite: suites::Suite = suite.parse().map_err(Failure::Usage)?;
            let bound = coord_bound
                .or_else(|| {
                    std::env::var("INTPOLY_COORD_BOUND")
                        .ok()
                        .and_then(|v| v.parse().ok())
                })
                .unwrap_or(5);
            let report = suites::run(suites::Config {
                suite,
                trials,
                seed,
                dim,
                bound,
                start,
                parallel,
            });
            print!("{}", report.render());
            if !report.passed_all() {
                return Err(Failure::Outcome);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Outcome) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
