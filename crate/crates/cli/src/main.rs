use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use bwkit::filtration::{bw_from_complex, bw_polynomial, layers, local_cohomology_scm, scm_check};
use bwkit::groebner::{gin, gin_monomial, initial_ideal, GinOptions, GinResult};
use bwkit::io::{Json, PolynomialList};
use bwkit::monomial::{betti_eliahou_kervaire, MonomialIdeal};
use bwkit::ring::parse::parse_polynomial_list;
use bwkit::ring::{BWPolynomial, Field, RingSpec};
use bwkit::simplicial::{
    complex_of, graded_betti_hochster, local_cohomology_hochster, sr_bridge, symmetric_shift, SimplicialComplex,
};
use bwkit::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Dimension filtrations, BW polynomials, h-triangles and generic initial
/// ideals of monomial ideals and simplicial complexes.
///
/// Inputs are JSON (`{"vars": n, "gens": [[e1..en], ...]}` for monomial
/// ideals, `{"vars": n, "polys": ["x1*x3 - x2^2", ...]}` for polynomials,
/// `{"n": n, "facets": [[1,2], ...]}` for complexes) or comma-separated
/// polynomial text such as `x1*x2, x3^2`, in which case the number of
/// variables is the largest index that occurs.
///
/// Exit status: 0 on success, 2 on invalid input, 3 when a generic initial
/// ideal could not be certified.
#[derive(Parser)]
#[command(name = "bwkit", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// BW polynomial of R/I or of a Stanley-Reisner ring.
    Bw {
        #[command(flatten)]
        common: Common,
        /// Report BW(R/gin(I)); required for non-monomial input.
        #[arg(long)]
        via_gin: bool,
    },
    /// Hilbert series of R/I, k[Δ], or R/in(I) for polynomial input.
    Hilbert {
        #[command(flatten)]
        common: Common,
    },
    /// h-triangle of a complex (or of the complex of a squarefree ideal).
    HTriangle {
        #[command(flatten)]
        common: Common,
    },
    /// Reverse lexicographic generic initial ideal.
    Gin {
        #[command(flatten)]
        common: Common,
    },
    /// Dimension filtration and the h-polynomials of its unmixed layers.
    Filtration {
        #[command(flatten)]
        common: Common,
    },
    /// Sequential Cohen-Macaulay test with per-criterion verdicts.
    Scm {
        #[command(flatten)]
        common: Common,
    },
    /// Local cohomology Hilbert series: by Hochster's formula for complexes,
    /// from the unmixed layers for sequentially Cohen-Macaulay ideals.
    LocalCohomology {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Alexander dual of a complex on its full ground set.
    AlexanderDual {
        #[command(flatten)]
        common: Common,
    },
    /// Symmetric algebraic shifting.
    Shift {
        #[command(flatten)]
        common: Common,
    },
    /// Graded Betti numbers: Hochster's formula for complexes and squarefree
    /// ideals, Eliahou-Kervaire for strongly stable ideals.
    Betti {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        field: FieldArg,
    },
}

#[derive(Args)]
struct Common {
    /// Read the input from a file.
    #[arg(long, short, conflicts_with = "inline")]
    input: Option<PathBuf>,
    /// Inline input, JSON or polynomial text.
    #[arg(required_unless_present = "input")]
    inline: Option<String>,
    /// Seed for random coordinate changes.
    #[arg(long, env = "BWKIT_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct FieldArg {
    /// Coefficient field for homology: `q` or `p:<prime>`.
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: Field,
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

enum Input {
    Ideal(MonomialIdeal),
    Polys(PolynomialList),
    Complex(SimplicialComplex),
}

struct Output {
    json: Value,
    text: String,
}

enum Failure {
    Input(String),
    Certification(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotCertified { .. } => Failure::Certification(e.to_string()),
            Error::Invariant(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Run<T> = Result<T, Failure>;

const EXAMPLE_IDEAL: &str = "x1*x2*x3, x1*x4, x2*x5, x3*x6, x4*x5, x4*x6, x5*x6";
const EXAMPLE_NOTE: &str = "the w^3 coefficient equals the h-polynomial 1 + 3t - t^3 of R/I; \
the form 1 + t - t^3 is incompatible with Hilbert series invariance under gin";

fn load(common: &Common) -> Run<Input> {
    let text = match (&common.input, &common.inline) {
        (Some(path), _) => fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?,
        (None, Some(s)) => s.clone(),
        (None, None) => return Err(Failure::Input("no input given".into())),
    };
    let text = text.trim();
    if text.starts_with('{') {
        let v: Value = serde_json::from_str(text).map_err(|e| Failure::Input(format!("invalid JSON: {e}")))?;
        if v.get("facets").is_some() {
            Ok(Input::Complex(SimplicialComplex::from_json(&v)?))
        } else if v.get("gens").is_some() {
            Ok(Input::Ideal(MonomialIdeal::from_json(&v)?))
        } else if v.get("polys").is_some() {
            Ok(classify(PolynomialList::from_json(&v)?)?)
        } else {
            Err(Failure::Input("JSON input needs one of the keys facets, gens, polys".into()))
        }
    } else {
        let polys = parse_polynomial_list(text, None)?;
        let n = polys.first().map_or(1, |p| p.nvars());
        Ok(classify(PolynomialList {
            ring: RingSpec::new(n)?,
            polys,
        })?)
    }
}

fn classify(list: PolynomialList) -> bwkit::Result<Input> {
    match list.as_monomial_ideal() {
        Some(ideal) => Ok(Input::Ideal(ideal?)),
        None => Ok(Input::Polys(list)),
    }
}

fn monomial_input(input: Input, verb: &str) -> Run<MonomialIdeal> {
    match input {
        Input::Ideal(i) => Ok(i),
        Input::Complex(d) => Ok(sr_bridge(&d)),
        Input::Polys(_) => Err(Failure::Input(format!("{verb} needs a monomial ideal or a complex"))),
    }
}

fn complex_input(input: Input, verb: &str) -> Run<SimplicialComplex> {
    match input {
        Input::Complex(d) => Ok(d),
        Input::Ideal(i) => Ok(complex_of(&i)?),
        Input::Polys(_) => Err(Failure::Input(format!("{verb} needs a complex or a squarefree monomial ideal"))),
    }
}

fn gin_of(input: Input, opts: &GinOptions) -> Run<GinResult> {
    match input {
        Input::Ideal(i) => Ok(gin_monomial(&i, opts)?),
        Input::Polys(p) => Ok(gin(p.ring, &p.polys, opts)?),
        Input::Complex(d) => Ok(gin_monomial(&sr_bridge(&d), opts)?),
    }
}

fn with_keys(mut v: Value, extra: &[(&str, Value)]) -> Value {
    if let Value::Object(m) = &mut v {
        for (k, x) in extra {
            m.insert((*k).to_string(), x.clone());
        }
    }
    v
}

fn bw_output(p: &BWPolynomial, extra: &[(&str, Value)], header: Option<String>) -> Output {
    let mut text = header.map(|h| h + "\n").unwrap_or_default();
    text.push_str(&p.to_text());
    for (k, v) in extra {
        if let Value::String(s) = v {
            text.push_str(&format!("\n{k}: {s}"));
        }
    }
    Output {
        json: with_keys(p.to_json(), extra),
        text,
    }
}

fn run(verb: Verb) -> Run<Output> {
    match verb {
        Verb::Bw { common, via_gin } => {
            let opts = GinOptions::with_seed(common.seed);
            let input = load(&common)?;
            if via_gin {
                let g = gin_of(input, &opts)?;
                let p = bw_polynomial(&g.ideal)?;
                let extra = [("label", json!("BW(R/gin(I))")), ("gin", g.ideal.to_json())];
                return Ok(bw_output(&p, &extra, Some(format!("BW(R/gin(I)), gin(I) = {}", g.ideal))));
            }
            let p = match input {
                Input::Complex(d) => bw_from_complex(&d),
                Input::Ideal(i) => {
                    let p = bw_polynomial(&i)?;
                    let example = MonomialIdeal::parse(EXAMPLE_IDEAL, Some(6))?;
                    if i == example {
                        return Ok(bw_output(&p, &[("erratum_note", json!(EXAMPLE_NOTE))], None));
                    }
                    p
                }
                Input::Polys(_) => {
                    return Err(Failure::Input(
                        "BW of a non-monomial ideal is only available as BW(R/gin(I)); pass --via-gin".into(),
                    ))
                }
            };
            Ok(bw_output(&p, &[], None))
        }
        Verb::Hilbert { common } => {
            let ideal = match load(&common)? {
                Input::Ideal(i) => i,
                Input::Complex(d) => sr_bridge(&d),
                Input::Polys(p) => initial_ideal(p.ring, &p.polys)?,
            };
            let h = ideal.hilbert_series();
            Ok(Output {
                json: with_keys(h.to_json(), &[("dim", json!(ideal.krull_dimension()))]),
                text: h.to_string(),
            })
        }
        Verb::HTriangle { common } => {
            let d = complex_input(load(&common)?, "h-triangle")?;
            let h = d.h_triangle();
            Ok(Output {
                json: h.to_json(),
                text: h.to_string().trim_end().to_string(),
            })
        }
        Verb::Gin { common } => {
            let g = gin_of(load(&common)?, &GinOptions::with_seed(common.seed))?;
            Ok(Output {
                json: g.to_json(),
                text: g.ideal.to_string(),
            })
        }
        Verb::Filtration { common } => {
            let ideal = monomial_input(load(&common)?, "filtration")?;
            if ideal.is_unit() {
                return Err(Failure::Input("the unit ideal has no dimension filtration".into()));
            }
            let lay = layers(&ideal)?;
            let mut text = Vec::new();
            for (i, (level, h)) in lay.chain.ideals.iter().zip(&lay.layer_h).enumerate() {
                text.push(format!("I^<{i}> = {level}"));
                text.push(format!("h(U_{i}) = {}", h.to_text("t")));
            }
            Ok(Output {
                json: lay.to_json(),
                text: text.join("\n"),
            })
        }
        Verb::Scm { common } => {
            let opts = GinOptions::with_seed(common.seed);
            let r = scm_check(&monomial_input(load(&common)?, "scm")?, &opts)?;
            let mut text = vec![format!("scm: {}", r.scm)];
            for c in &r.criteria {
                let mut line = format!("{}: {} ({})", c.name, c.holds, c.description);
                if let Some(w) = &c.witness {
                    line.push_str(&format!(" fails at i = {}: {} vs {}", w.i, w.lhs, w.rhs));
                }
                text.push(line);
            }
            Ok(Output {
                json: r.to_json(),
                text: text.join("\n"),
            })
        }
        Verb::LocalCohomology { common, field } => {
            let table = match load(&common)? {
                Input::Complex(d) => local_cohomology_hochster(&d, field.field),
                Input::Ideal(i) => local_cohomology_scm(&i, &GinOptions::with_seed(common.seed))?,
                Input::Polys(_) => {
                    return Err(Failure::Input(
                        "local-cohomology needs a complex or a monomial ideal".into(),
                    ))
                }
            };
            Ok(Output {
                json: table.to_json(),
                text: table.to_string().trim_end().to_string(),
            })
        }
        Verb::AlexanderDual { common } => {
            let d = complex_input(load(&common)?, "alexander-dual")?;
            let dual = d.alexander_dual()?;
            Ok(Output {
                json: dual.to_json(),
                text: dual.to_string(),
            })
        }
        Verb::Shift { common } => {
            let d = complex_input(load(&common)?, "shift")?;
            let s = symmetric_shift(&d, &GinOptions::with_seed(common.seed))?;
            Ok(Output {
                json: s.to_json(),
                text: s.to_string(),
            })
        }
        Verb::Betti { common, field } => {
            let table = match load(&common)? {
                Input::Complex(d) => graded_betti_hochster(&d, field.field)?,
                Input::Ideal(i) if i.is_strongly_stable() => betti_eliahou_kervaire(&i)?,
                Input::Ideal(i) if i.is_squarefree() => graded_betti_hochster(&complex_of(&i)?, field.field)?,
                _ => {
                    return Err(Failure::Input(
                        "betti needs a complex, a squarefree ideal or a strongly stable ideal".into(),
                    ))
                }
            };
            Ok(Output {
                json: table.to_json(),
                text: table.to_string().trim_end().to_string(),
            })
        }
    }
}

fn format_of(verb: &Verb) -> Format {
    match verb {
        Verb::Bw { common, .. }
        | Verb::Hilbert { common }
        | Verb::HTriangle { common }
        | Verb::Gin { common }
        | Verb::Filtration { common }
        | Verb::Scm { common }
        | Verb::LocalCohomology { common, .. }
        | Verb::AlexanderDual { common }
        | Verb::Shift { common }
        | Verb::Betti { common, .. } => common.format,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = format_of(&cli.verb);
    match run(cli.verb) {
        Ok(out) => {
            let body = match format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
                Format::Text => out.text,
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Certification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
