//! Command-line front end: parse algebra and weight files, dispatch the
//! library computations, and emit JSON (the contract surface) or aligned
//! text reports.
//!
//! Exit status: 0 on success, 1 on validation or precondition failures
//! (with a machine-readable diagnostic), 2 under --strict when an answer is
//! only certified up to a truncation bound.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use superkac::algebra::Algebra;
use superkac::cartan::{self, Growth, Isotropy};
use superkac::characters::{self, DenominatorPart, Rank1Flavor};
use superkac::error::{Error, Result};
use superkac::io;
use superkac::rat::*;
use superkac::roots::{self, WeylWord};
use superkac::series::TruncatedSeries;
use superkac::subsystems::{self, IntegralVariant};
use superkac::weights::{self, Weight};

const DEFAULT_HEIGHT: i64 = 20;
const DEFAULT_DEPTH: i64 = 15;
const DEFAULT_WORD_BOUND: usize = 12;
const DEFAULT_LINK_DEPTH: usize = 6;

#[derive(Parser)]
#[command(
    name = "superkac",
    version,
    about = "Exact Kac-Moody superalgebra combinatorics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; JSON is the stable contract surface.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Exit with status 2 when an answer is only certified up to a bound.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct AlgebraArg {
    /// Path to the algebra JSON file ({"A": [[...]], "p": [0|1,...]}).
    algebra: String,
    /// Override the affine node used for Lambda_0.
    #[arg(long)]
    affine_node: Option<usize>,
}

impl AlgebraArg {
    fn load(&self) -> Result<Algebra> {
        let text = std::fs::read_to_string(&self.algebra)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", self.algebra)))?;
        let mut input = io::AlgebraInput::parse(&text)?;
        if let Some(n) = self.affine_node {
            input.affine_node = Some(n);
        }
        input.build()
    }
}

fn load_weight(path: &str) -> Result<Weight> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
    io::weight_parse(&text)
}

fn load_weight_for(alg: &Algebra, path: &str) -> Result<Weight> {
    let w = load_weight(path)?;
    if w.pairings.len() != alg.rank() {
        return Err(Error::Input(format!(
            "weight has {} pairings but the algebra has rank {}",
            w.pairings.len(),
            alg.rank()
        )));
    }
    Ok(w)
}

fn load_series(path: &str) -> Result<TruncatedSeries> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| Error::Input(format!("bad JSON: {e}")))?;
    io::series_from_json(&v)
}

fn parse_coords(s: &str) -> Result<Vec<i64>> {
    let v: Value = serde_json::from_str(s)
        .map_err(|e| Error::Input(format!("bad coordinate vector {s:?}: {e}")))?;
    v.as_array()
        .ok_or_else(|| Error::Input("coordinates must be a JSON array".into()))?
        .iter()
        .map(|x| {
            x.as_i64()
                .ok_or_else(|| Error::Input("coordinates must be integers".into()))
        })
        .collect()
}

fn parse_word(s: &str) -> Result<WeylWord> {
    if s.trim().is_empty() {
        return Ok(WeylWord::identity());
    }
    let letters: Result<Vec<usize>> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Input(format!("bad word letter {t:?}")))
        })
        .collect();
    Ok(WeylWord(letters?))
}

#[derive(Subcommand)]
enum Command {
    /// Check the supermatrix axioms on the input and its odd-reflection closure.
    Validate {
        /// Path to an algebra JSON file (alternative to --A/--p).
        algebra: Option<String>,
        /// Inline matrix, e.g. "[[2,-1],[0,2]]".
        #[arg(long = "A")]
        matrix: Option<String>,
        /// Inline parity vector, e.g. "[0,0]".
        #[arg(long = "p")]
        parity: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        bound: usize,
    },
    /// Enumerate the set of bases reachable by odd reflections.
    Bases {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value_t = 10_000)]
        bound: usize,
    },
    /// Isotropy and growth classification.
    Classify {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Roots up to a height bound; optionally the Weyl orbit of a vector.
    Roots {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: i64,
        /// Also enumerate the orbit of this vector, e.g. "[0,1]".
        #[arg(long)]
        orbit: Option<String>,
        /// Word-length bound for the orbit enumeration.
        #[arg(long, default_value_t = DEFAULT_WORD_BOUND)]
        word_bound: usize,
    },
    /// Principal roots, their coroots, and the matrix B.
    Principal {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// The integral root subsystem of a weight.
    Integral {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: i64,
        /// Include odd roots whose doubles are integral.
        #[arg(long = "super")]
        super_variant: bool,
    },
    /// The base of the integral subsystem.
    BaseOf {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: i64,
    },
    /// Friendly words: test a word, or transport a base element into Pi_pr.
    Friendly {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        lambda: String,
        /// Base element to transport, as root coordinates "[1,1,0]".
        #[arg(long)]
        beta: Option<String>,
        /// Word to test, comma-separated generator indices "0,2,1".
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: i64,
    },
    /// Snowflake test for the simple highest-weight module.
    Snowflake {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: i64,
    },
    /// Typicality of L(lambda).
    Typical {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: i64,
    },
    /// Level and criticality.
    Critical {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        lambda: String,
    },
    /// Kac-Kazhdan pairs of a weight.
    Kk {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: i64,
    },
    /// Bounded linkage decision between two weights.
    Linkage {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        nu: String,
        #[arg(long, default_value_t = DEFAULT_LINK_DEPTH)]
        depth: usize,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: i64,
    },
    /// Admissibility of a weight or a level k (via k Lambda_0).
    Admissible {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        level: Option<String>,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: i64,
    },
    /// Enumerate snowflake weights of a level with full integral subsystem.
    Enumerate {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, allow_hyphen_values = true)]
        level: String,
        #[arg(long, default_value_t = 24)]
        height: i64,
    },
    /// Characters: denominator, Verma, or snowflake.
    Char {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_enum)]
        kind: CharKind,
        #[arg(long)]
        lambda: Option<String>,
        /// Truncation depth D.
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        height: i64,
        #[arg(long = "super")]
        super_variant: bool,
        /// For --kind denominator: one of full, even, odd.
        #[arg(long, default_value = "full")]
        part: String,
    },
    /// Character-level Enright transforms.
    Enright {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Apply a Weyl word to a numerator series file.
        #[arg(long)]
        word: Option<String>,
        /// Series input for --word / --halfdensity.
        #[arg(long)]
        series: Option<String>,
        /// Rank-one constituents: "--rank1 sl2|osp12 --a Q --b Q".
        #[arg(long)]
        rank1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Half-density transform through the root with these coordinates.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        flavor: Option<String>,
        /// Verma image of --lambda along --alpha in the original base.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Run the bundled reproduction suite.
    Reproduce {
        /// Run the property suites only.
        #[arg(long)]
        properties: bool,
        /// Only run cases whose name contains this substring.
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CharKind {
    Denominator,
    Verma,
    Snowflake,
}

struct Report {
    payload: Value,
    /// Set when the answer is only certified up to a bound.
    truncated: bool,
    text: String,
}

impl Report {
    fn new(payload: Value) -> Report {
        let text = serde_json::to_string_pretty(&payload).unwrap_or_default();
        Report {
            payload,
            truncated: false,
            text,
        }
    }

    fn with_text(mut self, text: String) -> Report {
        self.text = text;
        self
    }

    fn truncated(mut self, t: bool) -> Report {
        self.truncated |= t;
        self
    }
}

fn growth_value(g: Option<Growth>) -> Value {
    match g {
        Some(g) => json!(g.to_string()),
        None => json!("mixed"),
    }
}

fn root_json(r: &superkac::roots::Root) -> Value {
    json!({
        "coords": io::int_vec_to_value(&r.coords),
        "parity": match r.parity { cartan::Parity::Even => "even", cartan::Parity::Odd => "odd" },
        "kind": match r.kind { roots::RootKind::Real => "real", roots::RootKind::Imaginary => "imaginary" },
        "mult": [r.mult.0, r.mult.1],
        "isotropic": r.isotropic,
        "coroot": io::rat_vec_to_value(&r.coroot),
    })
}

fn series_report(s: &TruncatedSeries) -> Report {
    Report::new(io::series_to_json(s))
}

fn run_command(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Validate {
            algebra,
            matrix,
            parity,
            bound,
        } => {
            let (a, p) = match (algebra, matrix, parity) {
                (Some(path), None, None) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
                    let input = io::AlgebraInput::parse(&text)?;
                    (input.a, input.parity)
                }
                (None, Some(m), Some(p)) => {
                    let av: Value = serde_json::from_str(m)
                        .map_err(|e| Error::Input(format!("bad --A: {e}")))?;
                    let a = av
                        .as_array()
                        .ok_or_else(|| Error::Input("--A must be an array of rows".into()))?
                        .iter()
                        .map(io::rat_vec_from_value)
                        .collect::<Result<Vec<_>>>()?;
                    let pv: Value = serde_json::from_str(p)
                        .map_err(|e| Error::Input(format!("bad --p: {e}")))?;
                    let parity = pv
                        .as_array()
                        .ok_or_else(|| Error::Input("--p must be an array".into()))?
                        .iter()
                        .map(|x| match x.as_i64() {
                            Some(0) => Ok(cartan::Parity::Even),
                            Some(1) => Ok(cartan::Parity::Odd),
                            _ => Err(Error::Input("parities must be 0 or 1".into())),
                        })
                        .collect::<Result<Vec<_>>>()?;
                    (a, parity)
                }
                _ => {
                    return Err(Error::Input(
                        "give either an algebra file or both --A and --p".into(),
                    ))
                }
            };
            let report = cartan::validate_supermatrix(a, p, *bound)?;
            let payload = json!({
                "valid": report.valid,
                "closed": report.closed,
                "bases_seen": report.bases_seen,
                "violations": report.violations,
            });
            if !report.valid {
                // a machine-readable diagnostic with failure exit
                let out = io::report(payload, json!({"bound": bound}));
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
                std::process::exit(1);
            }
            Ok(Report::new(payload).truncated(!report.closed))
        }
        Command::Bases { algebra, bound } => {
            let alg = algebra.load()?;
            let set = cartan::enumerate_bases(&alg.supermatrix, *bound)?;
            let payload = json!({
                "bound": bound,
                "count": set.bases.len(),
                "closed": set.closed,
                "bases": set.bases.iter().map(|b| json!({
                    "simple_roots": b.simple_roots.iter().map(|r| io::int_vec_to_value(r)).collect::<Vec<_>>(),
                    "coroots": b.coroots.iter().map(|c| io::rat_vec_to_value(c)).collect::<Vec<_>>(),
                    "parity": b.parity.iter().map(|p| json!(matches!(p, cartan::Parity::Odd) as u8)).collect::<Vec<_>>(),
                    "matrix": b.matrix.iter().map(|row| io::rat_vec_to_value(row)).collect::<Vec<_>>(),
                    "rho_offset": io::int_vec_to_value(&b.rho_offset),
                })).collect::<Vec<_>>(),
            });
            Ok(Report::new(payload).truncated(!set.closed))
        }
        Command::Classify { algebra } => {
            let alg = algebra.load()?;
            let payload = json!({
                "isotropy": match alg.isotropy() {
                    Isotropy::NonIsotropic => "NonIsotropic",
                    Isotropy::Isotropic => "Isotropic",
                },
                "growth": growth_value(alg.growth()),
                "components": alg.type_tag.components.iter().map(|(idx, g)| json!({
                    "indices": idx,
                    "growth": g.to_string(),
                })).collect::<Vec<_>>(),
            });
            let text = format!(
                "isotropy: {}\ngrowth:   {}",
                if alg.isotropy() == Isotropy::Isotropic {
                    "Isotropic"
                } else {
                    "NonIsotropic"
                },
                alg.growth()
                    .map(|g| g.to_string())
                    .unwrap_or_else(|| "mixed".into()),
            );
            Ok(Report::new(payload).with_text(text))
        }
        Command::Roots {
            algebra,
            height,
            orbit,
            word_bound,
        } => {
            let alg = algebra.load()?;
            let table = roots::generate_roots(&alg, *height)?;
            let orbit_json = match orbit {
                None => Value::Null,
                Some(v) => {
                    let coords = parse_coords(v)?;
                    let orbit = roots::weyl_orbit(&alg, &coords, *word_bound)?;
                    json!(orbit
                        .iter()
                        .map(|(pt, w)| json!({
                            "point": io::int_vec_to_value(pt),
                            "word": w.0,
                        }))
                        .collect::<Vec<_>>())
                }
            };
            let payload = json!({
                "height": height,
                "complete": table.complete,
                "roots": table.iter().map(root_json).collect::<Vec<_>>(),
                "orbit": orbit_json,
            });
            Ok(Report::new(payload).truncated(!table.complete))
        }
        Command::Principal { algebra } => {
            let alg = algebra.load()?;
            let payload = json!({
                "principal_roots": alg.principal.iter().map(|p| json!({
                    "coords": io::int_vec_to_value(&p.coords),
                    "coroot": io::rat_vec_to_value(&p.coroot),
                })).collect::<Vec<_>>(),
                "B": alg.b_matrix.iter().map(|row| io::rat_vec_to_value(row)).collect::<Vec<_>>(),
                "growth": growth_value(alg.growth()),
                "bases_closed": alg.bases.closed,
            });
            Ok(Report::new(payload).truncated(!alg.bases.closed))
        }
        Command::Integral {
            algebra,
            lambda,
            height,
            super_variant,
        } => {
            let alg = algebra.load()?;
            let lam = load_weight_for(&alg, lambda)?;
            let variant = if *super_variant {
                IntegralVariant::Super
            } else {
                IntegralVariant::Plain
            };
            let slice = subsystems::integral_subsystem(&alg, &lam, *height, variant)?;
            let payload = json!({
                "height": height,
                "complete": slice.complete,
                "positive_roots": slice.positive_roots.iter()
                    .map(|r| io::int_vec_to_value(&r.coords)).collect::<Vec<_>>(),
            });
            Ok(Report::new(payload).truncated(!slice.complete))
        }
        Command::BaseOf {
            algebra,
            lambda,
            height,
        } => {
            let alg = algebra.load()?;
            let lam = load_weight_for(&alg, lambda)?;
            let slice =
                subsystems::integral_subsystem(&alg, &lam, *height, IntegralVariant::Plain)?;
            let base = subsystems::subsystem_base(&alg, &slice)?;
            let payload = json!({
                "horizon": base.horizon,
                "complete": base.complete,
                "base": base.elements.iter().map(|e| json!({
                    "coords": io::int_vec_to_value(&e.root.coords),
                    "certified": e.certified,
                })).collect::<Vec<_>>(),
            });
            Ok(Report::new(payload).truncated(!base.all_certified()))
        }
        Command::Friendly {
            algebra,
            lambda,
            beta,
            word,
            height,
        } => {
            let alg = algebra.load()?;
            let lam = load_weight_for(&alg, lambda)?;
            match (beta, word) {
                (_, Some(w)) => {
                    let word = parse_word(w)?;
                    let friendly = subsystems::is_friendly(&alg, &lam, &word.0)?;
                    Ok(Report::new(json!({"friendly": friendly})))
                }
                (Some(b), None) => {
                    let coords = parse_coords(b)?;
                    let slice = subsystems::integral_subsystem(
                        &alg,
                        &lam,
                        *height,
                        IntegralVariant::Plain,
                    )?;
                    let base = subsystems::subsystem_base(&alg, &slice)?;
                    let elem = base
                        .elements
                        .iter()
                        .find(|e| e.root.coords == coords)
                        .ok_or_else(|| {
                            Error::Precondition(format!(
                                "{coords:?} is not in the base of the integral subsystem"
                            ))
                        })?;
                    if !elem.certified {
                        return Err(Error::Precondition(format!(
                            "{coords:?} is not certified at height {height}"
                        )));
                    }
                    let fw = subsystems::friendly_word_to_pr(&alg, &lam, &elem.root)?;
                    Ok(Report::new(json!({
                        "height": height,
                        "word": fw.word,
                        "word_roots": fw.word.iter()
                            .map(|&g| io::int_vec_to_value(&alg.principal[g].coords))
                            .collect::<Vec<_>>(),
                        "image": io::int_vec_to_value(&fw.image),
                    })))
                }
                (None, None) => Err(Error::Input("give --beta or --word".into())),
            }
        }
        Command::Snowflake {
            algebra,
            lambda,
            height,
        } => {
            let alg = algebra.load()?;
            let lam = load_weight_for(&alg, lambda)?;
            let v = weights::is_snowflake_hw(&alg, &lam, *height)?;
            let payload = json!({
                "snowflake": v.is_snowflake,
                "certified": v.certified,
                "horizon": v.horizon,
                "values": v.values.iter().map(|(c, x)| json!({
                    "root": io::int_vec_to_value(c),
                    "value": fmt_rat(x),
                })).collect::<Vec<_>>(),
            });
            Ok(Report::new(payload).truncated(!v.certified))
        }
        Command::Typical {
            algebra,
            lambda,
            height,
        } => {
            let alg = algebra.load()?;
            let lam = load_weight_for(&alg, lambda)?;
            let v = weights::is_typical(&alg, &lam, *height)?;
            let (verdict, witness, truncated) = match &v {
                weights::TypicalVerdict::Typical => ("typical", None, false),
                weights::TypicalVerdict::Atypical { witness } => {
                    ("atypical", Some(io::int_vec_to_value(witness)), false)
                }
                weights::TypicalVerdict::TypicalUpTo { .. } => ("typical-up-to-height", None, true),
            };
            let payload = json!({
                "verdict": verdict,
                "witness": witness,
                "height": height,
            });
            Ok(Report::new(payload).truncated(truncated))
        }
        Command::Critical { algebra, lambda } => {
            let alg = algebra.load()?;
            let lam = load_weight_for(&alg, lambda)?;
            let payload = if alg.is_affine() {
                json!({
                    "level": fmt_rat(&weights::level(&alg, &lam)?),
                    "dual_coxeter": fmt_rat(&alg.affine()?.dual_coxeter),
                    "critical_weight": weights::is_critical_weight(&alg, &lam)?,
                    "critical_module": weights::is_critical_module(&alg, &lam)?,
                })
            } else {
                json!({
                    "level": null,
                    "critical_weight": weights::is_critical_weight(&alg, &lam)?,
                    "critical_module": weights::is_critical_module(&alg, &lam)?,
                })
            };
            Ok(Report::new(payload))
        }
        Command::Kk {
            algebra,
            lambda,
            height,
        } => {
            let alg = algebra.load()?;
            let lam = load_weight_for(&alg, lambda)?;
            let pairs = weights::kk_pairs(&alg, &lam, *height)?;
            let payload = json!({
                "height": height,
                "pairs": pairs.iter().map(|p| json!({
                    "alpha": io::int_vec_to_value(&p.alpha.coords),
                    "m": p.m,
                    "target": io::weight_to_json(&p.target),
                })).collect::<Vec<_>>(),
            });
            Ok(Report::new(payload))
        }
        Command::Linkage {
            algebra,
            lambda,
            nu,
            depth,
            height,
        } => {
            let alg = algebra.load()?;
            let lam = load_weight_for(&alg, lambda)?;
            let nu = load_weight_for(&alg, nu)?;
            let v = weights::linkage_closure(&alg, &lam, &nu, *depth, *height)?;
            let (linked, d, truncated) = match v {
                weights::LinkageVerdict::Linked { depth } => (true, depth, false),
                weights::LinkageVerdict::NotLinkedUpTo { depth, .. } => (false, depth, true),
            };
            let payload = json!({
                "linked": linked,
                "depth": d,
                "bounded_negative": truncated,
            });
            Ok(Report::new(payload).truncated(truncated))
        }
        Command::Admissible {
            algebra,
            lambda,
            level,
            height,
        } => {
            let alg = algebra.load()?;
            let v = match (lambda, level) {
                (Some(path), None) => {
                    weights::is_admissible(&alg, &load_weight_for(&alg, path)?, *height)?
                }
                (None, Some(k)) => {
                    let k = parse_rat(k).ok_or_else(|| Error::Input("bad level".into()))?;
                    weights::admissible_level(&alg, &k, *height)?
                }
                _ => {
                    return Err(Error::Input(
                        "give exactly one of --lambda or --level".into(),
                    ))
                }
            };
            let payload = json!({
                "height": height,
                "admissible": v.admissible,
                "rank_full": v.rank_full,
                "snowflake": v.snowflake.is_snowflake,
                "certified": v.snowflake.certified,
                "values": v.snowflake.values.iter().map(|(c, x)| json!({
                    "root": io::int_vec_to_value(c),
                    "value": fmt_rat(x),
                })).collect::<Vec<_>>(),
            });
            Ok(Report::new(payload).truncated(!v.snowflake.certified))
        }
        Command::Enumerate {
            algebra,
            level,
            height,
        } => {
            let alg = algebra.load()?;
            let k = parse_rat(level).ok_or_else(|| Error::Input("bad level".into()))?;
            let lam0 = weights::k_lambda0(&alg, &k)?;
            let (h, _) = weights::snowflake_effective_height(&alg, &lam0, *height)?;
            let table = roots::generate_roots_real_only(&alg, h)?;
            let slice =
                subsystems::integral_subsystem_in(&alg, &table, &lam0, h, IntegralVariant::Plain)?;
            let found = weights::enumerate_snowflake_weights(&alg, &k, &slice, *height)?;
            let payload = json!({
                "level": fmt_rat(&k),
                "height": height,
                "count": found.len(),
                "weights": found.iter().map(io::weight_to_json).collect::<Vec<_>>(),
            });
            Ok(Report::new(payload))
        }
        Command::Char {
            algebra,
            kind,
            lambda,
            height,
            super_variant,
            part,
        } => {
            let alg = algebra.load()?;
            match kind {
                CharKind::Denominator => {
                    let part = match part.as_str() {
                        "full" => DenominatorPart::Full,
                        "even" => DenominatorPart::EvenPart,
                        "odd" => DenominatorPart::OddPart,
                        other => return Err(Error::Input(format!("unknown part {other:?}"))),
                    };
                    let s = characters::weyl_denominator(&alg, *height, part, *super_variant)?;
                    Ok(series_report(&s))
                }
                CharKind::Verma => {
                    let lam = load_weight_for(
                        &alg,
                        lambda.as_deref().ok_or_else(|| {
                            Error::Input("--lambda is required for Verma characters".into())
                        })?,
                    )?;
                    let s = characters::verma_character(&alg, &lam, *height, *super_variant)?;
                    Ok(series_report(&s))
                }
                CharKind::Snowflake => {
                    let lam = load_weight_for(
                        &alg,
                        lambda.as_deref().ok_or_else(|| {
                            Error::Input("--lambda is required for snowflake characters".into())
                        })?,
                    )?;
                    let s = characters::snowflake_character(&alg, &lam, *height)?;
                    Ok(series_report(&s))
                }
            }
        }
        Command::Enright {
            algebra,
            word,
            series,
            rank1,
            a,
            b,
            alpha,
            flavor,
            lambda,
        } => {
            let alg = algebra.load()?;
            if let Some(flavor_name) = rank1 {
                let flavor = match flavor_name.as_str() {
                    "sl2" => Rank1Flavor::Sl2,
                    "osp12" => Rank1Flavor::Osp12,
                    other => return Err(Error::Input(format!("unknown flavor {other:?}"))),
                };
                let a = parse_rat(
                    a.as_deref()
                        .ok_or_else(|| Error::Input("--a required".into()))?,
                )
                .ok_or_else(|| Error::Input("bad --a".into()))?;
                let b = parse_rat(
                    b.as_deref()
                        .ok_or_else(|| Error::Input("--b required".into()))?,
                )
                .ok_or_else(|| Error::Input("bad --b".into()))?;
                let d = characters::rank1_enright_verma(flavor, &a, &b);
                let constituent = |c: &characters::Constituent| {
                    json!({
                        "highest_weight": fmt_rat(&c.highest_weight),
                        "dual": c.dual,
                        "parity_shift": c.parity_shift,
                    })
                };
                let payload = match d {
                    characters::Rank1Decomposition::Simple => json!({"simple": true}),
                    characters::Rank1Decomposition::Sequence {
                        sub,
                        quotient,
                        singular_vector,
                    } => json!({
                        "simple": false,
                        "submodule": constituent(&sub),
                        "quotient": constituent(&quotient),
                        "singular_vector": {
                            "f_power": fmt_rat(&singular_vector.f_power),
                            "odd_factor": singular_vector.odd_factor,
                        },
                    }),
                };
                return Ok(Report::new(payload));
            }
            if let (Some(lam_path), Some(alpha_str)) = (lambda, alpha) {
                if series.is_none() {
                    let lam = load_weight_for(&alg, lam_path)?;
                    let coords = parse_coords(alpha_str)?;
                    let table = roots::generate_roots_real_only(&alg, height_i(&coords).abs() + 2)?;
                    let root = table
                        .get(&coords)
                        .ok_or_else(|| Error::Input(format!("{coords:?} is not a root")))?
                        .clone();
                    let base = alg
                        .bases
                        .bases
                        .iter()
                        .find(|b| b.rho_offset.iter().all(|&x| x == 0))
                        .ok_or_else(|| Error::Internal("original base missing".into()))?;
                    let img = characters::enright_verma_image(&alg, &lam, &root, base)?;
                    return Ok(Report::new(json!({
                        "image": io::weight_to_json(&img.collapse(&alg)),
                        "offset": io::rat_vec_to_value(&img.offset),
                    })));
                }
            }
            let series_path = series
                .as_deref()
                .ok_or_else(|| Error::Input("--series is required for transforms".into()))?;
            let s = load_series(series_path)?;
            if let Some(w) = word {
                let w = parse_word(w)?;
                let out = characters::enright_numerator_transform(&alg, &s, &w)?;
                return Ok(series_report(&out));
            }
            if let Some(alpha_str) = alpha {
                let coords = parse_coords(alpha_str)?;
                let table = roots::generate_roots_real_only(&alg, height_i(&coords).abs() + 2)?;
                let root = table
                    .get(&coords)
                    .ok_or_else(|| Error::Input(format!("{coords:?} is not a root")))?
                    .clone();
                let flavor = match flavor.as_deref() {
                    Some("sl2") | None => Rank1Flavor::Sl2,
                    Some("osp12") => Rank1Flavor::Osp12,
                    Some(other) => return Err(Error::Input(format!("unknown flavor {other:?}"))),
                };
                let a = parse_rat(
                    a.as_deref()
                        .ok_or_else(|| Error::Input("--a required".into()))?,
                )
                .ok_or_else(|| Error::Input("bad --a".into()))?;
                let out = characters::enright_halfdensity_transform(&alg, &s, &root, flavor, &a)?;
                return Ok(series_report(&out));
            }
            Err(Error::Input(
                "give --word, --alpha (half-density), --rank1, or --lambda with --alpha".into(),
            ))
        }
        Command::Reproduce { properties, filter } => {
            let outcomes = if *properties {
                superkac::reproduce::property_suites()
            } else {
                superkac::reproduce::acceptance_criteria()
            };
            let outcomes: Vec<_> = outcomes
                .into_iter()
                .filter(|o| {
                    filter
                        .as_deref()
                        .map(|f| o.name.contains(f))
                        .unwrap_or(true)
                })
                .collect();
            let all = outcomes.iter().all(|o| o.passed);
            let text = outcomes
                .iter()
                .map(|o| o.line())
                .collect::<Vec<_>>()
                .join("\n");
            let payload = json!({
                "passed": all,
                "cases": outcomes.iter().map(|o| json!({
                    "name": o.name,
                    "passed": o.passed,
                    "millis": o.millis as u64,
                    "details": o.details,
                })).collect::<Vec<_>>(),
            });
            if !all {
                let out = io::report(payload, json!({}));
                match cli.format {
                    Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
                    Format::Text => println!("{text}"),
                }
                std::process::exit(1);
            }
            Ok(Report::new(payload).with_text(text))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let threads = std::env::var("SUPERKAC_THREADS").ok();
    match run_command(&cli) {
        Ok(report) => {
            if cli.strict && report.truncated {
                let out = io::report(
                    report.payload,
                    json!({"threads": threads, "truncated": true}),
                );
                eprintln!("answer certified only up to the given bounds");
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
                std::process::exit(2);
            }
            match cli.format {
                Format::Json => {
                    let out = io::report(
                        report.payload,
                        json!({"threads": threads, "truncated": report.truncated}),
                    );
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                Format::Text => println!("{}", report.text),
            }
        }
        Err(e) => {
            let out = io::report(json!({"error": e.to_string()}), json!({"threads": threads}));
            eprintln!("{e}");
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            std::process::exit(1);
        }
    }
}
