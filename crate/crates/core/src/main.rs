//! Command-line front end. Every subcommand maps to exactly one library
//! operation; no computation lives here. Exit codes: 0 success, 2 argument
//! parse error, 3 domain error (error name printed to stderr).

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use openbook::brieskorn::{self, BrieskornCell, Family};
use openbook::error::Error;
use openbook::farey;
use openbook::fillability::{self, Ambient, Bounds, FillLevel, FillabilityStatus};
use openbook::mcg::{self, Rational};
use openbook::surgery::{self, MixedTorus, TransverseKind};
use openbook::{Slope, Word};

fn parse_rational(text: &str) -> Result<Rational, String> {
    let s: Slope = text.parse().map_err(|e| format!("{e}"))?;
    s.to_rational()
        .ok_or_else(|| "expected a finite rational".to_string())
}

#[derive(Parser)]
#[command(name = "openbook", version, about = "Exact combinatorics of genus-one open books and their fillings")]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Farey-graph arithmetic on slopes.
    #[command(subcommand)]
    Farey(FareyCmd),
    /// Mapping-class words of the once-punctured torus.
    #[command(subcommand)]
    Mcg(McgCmd),
    /// Surgery-coefficient bookkeeping.
    #[command(subcommand)]
    Surgery(SurgeryCmd),
    /// Fillability verdicts.
    #[command(subcommand)]
    Fill(FillCmd),
    /// The Brieskorn-sphere contact-structure atlas.
    #[command(subcommand)]
    Brieskorn(BrieskornCmd),
}

#[derive(Subcommand)]
enum FareyCmd {
    /// Mediant of two slopes.
    Sum {
        #[arg(allow_hyphen_values = true)]
        r: Slope,
        #[arg(allow_hyphen_values = true)]
        s: Slope,
    },
    /// Determinant pairing of two slopes.
    Mult {
        #[arg(allow_hyphen_values = true)]
        r: Slope,
        #[arg(allow_hyphen_values = true)]
        s: Slope,
    },
    /// Whether two slopes span an edge of the Farey graph.
    Edge {
        #[arg(allow_hyphen_values = true)]
        r: Slope,
        #[arg(allow_hyphen_values = true)]
        s: Slope,
    },
    /// Whether T lies in the open clockwise arc from FROM to TO.
    Arc {
        #[arg(allow_hyphen_values = true)]
        t: Slope,
        #[arg(allow_hyphen_values = true)]
        from: Slope,
        #[arg(allow_hyphen_values = true)]
        to: Slope,
    },
    /// Farey neighbors of S0 inside the open clockwise arc from FROM to TO.
    Neighbors {
        #[arg(allow_hyphen_values = true)]
        s0: Slope,
        #[arg(allow_hyphen_values = true)]
        from: Slope,
        #[arg(allow_hyphen_values = true)]
        to: Slope,
    },
}

#[derive(Subcommand)]
enum McgCmd {
    /// Evaluate a word to its integer matrix.
    Eval { word: Word },
    /// Nielsen-Thurston type of a word.
    Classify { word: Word },
    /// Fractional twisting number of the boundary.
    Fdtc { word: Word },
    /// Right-veering verdict.
    Rv { word: Word },
    /// The surgery-window integer n_K of the monodromy.
    Nk { word: Word },
    /// Syntactic match against the six normal-form templates.
    Normalform { word: Word },
}

#[derive(Clone, Copy, ValueEnum)]
enum FramingKind {
    /// Admissible update (coefficient decreases).
    Admissible,
    /// Inadmissible update (coefficient increases).
    Inadmissible,
}

#[derive(Subcommand)]
enum SurgeryCmd {
    /// Topological coefficient of contact (r)-surgery at framing TB.
    Topo {
        #[arg(value_parser = parse_rational, allow_hyphen_values = true)]
        r: Rational,
        #[arg(allow_hyphen_values = true)]
        tb: i64,
    },
    /// Transverse framing update of a slope.
    Framing {
        #[arg(allow_hyphen_values = true)]
        s: Slope,
        kind: FramingKind,
    },
    /// Dividing slope of the n-fold stabilized binding neighborhood.
    BindingSlope {
        word: Word,
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Candidate dividing slopes between the two sides of a mixed torus.
    Menke {
        #[arg(allow_hyphen_values = true)]
        s_minus: Slope,
        #[arg(allow_hyphen_values = true)]
        s_zero: Slope,
        #[arg(allow_hyphen_values = true)]
        s_plus: Slope,
    },
    /// Lens-space fraction produced by mixed (r)-surgery, r < 0.
    Lens {
        #[arg(value_parser = parse_rational, allow_hyphen_values = true)]
        r: Rational,
    },
    /// Seifert coefficient of contact (r)-surgery on a fibered knot, r < 0.
    Seifert {
        word: Word,
        #[arg(value_parser = parse_rational, allow_hyphen_values = true)]
        r: Rational,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Tight,
    Weak,
    Strong,
    Liouville,
    Stein,
}

impl From<LevelArg> for FillLevel {
    fn from(l: LevelArg) -> FillLevel {
        match l {
            LevelArg::Tight => FillLevel::Tight,
            LevelArg::Weak => FillLevel::Weak,
            LevelArg::Strong => FillLevel::Strong,
            LevelArg::Liouville => FillLevel::Liouville,
            LevelArg::Stein => FillLevel::Stein,
        }
    }
}

#[derive(Args)]
struct BaseStatus {
    /// The ambient structure is overtwisted.
    #[arg(long, conflicts_with_all = ["lower", "upper"])]
    overtwisted: bool,
    /// Strongest filling the ambient is known to have.
    #[arg(long, value_enum)]
    lower: Option<LevelArg>,
    /// Strongest filling not excluded for the ambient (default: stein).
    #[arg(long, value_enum)]
    upper: Option<LevelArg>,
}

impl BaseStatus {
    fn status(&self) -> FillabilityStatus {
        if self.overtwisted {
            return FillabilityStatus::Overtwisted;
        }
        FillabilityStatus::Tight(Bounds::new(
            self.lower.map(Into::into),
            self.upper.map_or(FillLevel::Stein, Into::into),
        ))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AmbientArg {
    /// Rational homology sphere.
    Qhs,
    General,
}

#[derive(Subcommand)]
enum FillCmd {
    /// Membership of R in the coefficient window of S.
    Rset {
        #[arg(allow_hyphen_values = true)]
        s: Slope,
        #[arg(allow_hyphen_values = true)]
        r: Slope,
    },
    /// Verdict for contact (r)-surgery on a mixed Legendrian knot.
    Mixed {
        #[arg(value_parser = parse_rational, allow_hyphen_values = true)]
        r: Rational,
        #[command(flatten)]
        base: BaseStatus,
    },
    /// Verdict when the ambient has planar k-torsion.
    Torsion {
        #[arg(allow_hyphen_values = true)]
        k: i64,
        #[arg(value_parser = parse_rational, allow_hyphen_values = true)]
        r: Rational,
    },
    /// Existence verdict for r-surgery on a genus-one fibered knot.
    Fibered {
        word: Word,
        #[arg(allow_hyphen_values = true)]
        r: Slope,
        #[arg(long, value_enum)]
        ambient: AmbientArg,
    },
    /// Status of the rotative torus-bundle structure with n extra turns.
    Rotative {
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Eta,
    Xi,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Eta => Family::Eta,
            FamilyArg::Xi => Family::Xi,
        }
    }
}

#[derive(Subcommand)]
enum BrieskornCmd {
    /// All cells at level n with statuses and stabilization parameters.
    List { family: FamilyArg, n: i64 },
    /// Status of a single cell.
    Status {
        family: FamilyArg,
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(allow_hyphen_values = true)]
        i: i64,
        #[arg(allow_hyphen_values = true)]
        j: i64,
    },
    /// ASCII triangle of the level-n cells.
    Triangle { family: FamilyArg, n: i64 },
    /// Stabilization parameters (l, r) of a cell.
    Lr {
        family: FamilyArg,
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(allow_hyphen_values = true)]
        i: i64,
        #[arg(allow_hyphen_values = true)]
        j: i64,
    },
}

/// Text plus JSON renderings of one command's result.
struct Output {
    text: String,
    json: serde_json::Value,
}

impl Output {
    fn value<T: std::fmt::Display + serde::Serialize>(v: T) -> Output {
        Output {
            text: format!("{v}\n"),
            json: serde_json::to_value(&v).expect("serializable"),
        }
    }

    fn bool(b: bool) -> Output {
        Output {
            text: format!("{b}\n"),
            json: json!(b),
        }
    }
}

fn rational_to_string(r: Rational) -> String {
    Slope::from_rational(r).to_string()
}

fn rational_output(r: Rational) -> Output {
    Output {
        text: format!("{}\n", rational_to_string(r)),
        json: json!(rational_to_string(r)),
    }
}

fn slopes_output(slopes: &[Slope]) -> Output {
    let mut text = String::new();
    for s in slopes {
        text.push_str(&s.to_string());
        text.push('\n');
    }
    Output {
        text,
        json: serde_json::to_value(slopes).expect("serializable"),
    }
}

fn cell_json(cell: &BrieskornCell) -> serde_json::Value {
    let status = brieskorn::status(cell);
    let (l, r) = cell.lr_params();
    json!({
        "family": cell.family(),
        "n": cell.n(),
        "i": cell.i(),
        "j": cell.j(),
        "status": status.kind,
        "l": l,
        "r": r,
        "mixed": cell.mixed(),
        "citations": status.citations,
    })
}

fn cell_text(cell: &BrieskornCell) -> String {
    let status = brieskorn::status(cell);
    let (l, r) = cell.lr_params();
    format!(
        "({}, {}) status={} l={} r={} mixed={}",
        cell.i(),
        cell.j(),
        status.kind.as_str(),
        l,
        r,
        cell.mixed()
    )
}

fn run(cli: &Cli) -> Result<Output, Error> {
    Ok(match &cli.command {
        Command::Farey(cmd) => match *cmd {
            FareyCmd::Sum { r, s } => Output::value(farey::fsum(r, s)),
            FareyCmd::Mult { r, s } => Output {
                text: format!("{}\n", farey::fmult(r, s)),
                json: json!(farey::fmult(r, s).to_string()),
            },
            FareyCmd::Edge { r, s } => Output::bool(farey::has_edge(r, s)),
            FareyCmd::Arc { t, from, to } => Output::bool(farey::in_clockwise_arc(t, from, to)?),
            FareyCmd::Neighbors { s0, from, to } => {
                slopes_output(&farey::neighbors_in_arc(s0, from, to)?)
            }
        },
        Command::Mcg(cmd) => match cmd {
            McgCmd::Eval { word } => {
                let m = mcg::evaluate(word);
                Output {
                    text: format!("[[{}, {}], [{}, {}]]\n", m.m11, m.m12, m.m21, m.m22),
                    json: json!([
                        [m.m11.to_string(), m.m12.to_string()],
                        [m.m21.to_string(), m.m22.to_string()]
                    ]),
                }
            }
            McgCmd::Classify { word } => {
                let t = mcg::nt_classify(word);
                let name = match t {
                    mcg::NTType::Periodic => "periodic",
                    mcg::NTType::Reducible => "reducible",
                    mcg::NTType::PseudoAnosov => "pseudo-anosov",
                };
                Output {
                    text: format!("{name}\n"),
                    json: json!(name),
                }
            }
            McgCmd::Fdtc { word } => rational_output(mcg::fdtc(word)),
            McgCmd::Rv { word } => {
                let name = match mcg::right_veering(word) {
                    mcg::Veering::Yes => "yes",
                    mcg::Veering::No => "no",
                    mcg::Veering::Indeterminate => "indeterminate",
                };
                Output {
                    text: format!("{name}\n"),
                    json: json!(name),
                }
            }
            McgCmd::Nk { word } => Output {
                text: format!("{}\n", mcg::n_k(word)),
                json: json!(mcg::n_k(word)),
            },
            McgCmd::Normalform { word } => match mcg::recognize_normal_form(word) {
                Some(nf) => Output {
                    text: format!("{nf:?}\n"),
                    json: serde_json::to_value(&nf).expect("serializable"),
                },
                None => Output {
                    text: "none\n".to_string(),
                    json: serde_json::Value::Null,
                },
            },
        },
        Command::Surgery(cmd) => match cmd {
            SurgeryCmd::Topo { r, tb } => rational_output(surgery::topological_coefficient(*r, *tb)),
            SurgeryCmd::Framing { s, kind } => {
                let kind = match kind {
                    FramingKind::Admissible => TransverseKind::AdmissibleMinusOne,
                    FramingKind::Inadmissible => TransverseKind::InadmissiblePlusOne,
                };
                Output::value(surgery::transverse_framing_update(*s, kind))
            }
            SurgeryCmd::BindingSlope { word, n } => {
                Output::value(surgery::binding_neighborhood_slope(word, *n)?)
            }
            SurgeryCmd::Menke {
                s_minus,
                s_zero,
                s_plus,
            } => {
                let torus = MixedTorus::new(*s_minus, *s_zero, *s_plus)?;
                slopes_output(&surgery::menke_candidates(&torus))
            }
            SurgeryCmd::Lens { r } => Output::value(surgery::lens_from_mixed_surgery(*r)?),
            SurgeryCmd::Seifert { word, r } => {
                rational_output(surgery::seifert_coefficient(word, *r)?)
            }
        },
        Command::Fill(cmd) => match cmd {
            FillCmd::Rset { s, r } => Output::bool(fillability::r_set_contains(*s, *r)?),
            FillCmd::Mixed { r, base } => {
                Output::value(fillability::mixed_surgery_verdict(&base.status(), *r))
            }
            FillCmd::Torsion { k, r } => Output::value(fillability::planar_torsion_verdict(*k, *r)?),
            FillCmd::Fibered { word, r, ambient } => {
                let ambient = match ambient {
                    AmbientArg::Qhs => Ambient::RationalHomologySphere,
                    AmbientArg::General => Ambient::General,
                };
                Output::value(fillability::fibered_surgery_verdict(word, *r, ambient)?)
            }
            FillCmd::Rotative { n } => Output::value(fillability::rotative_bundle_status(*n)?),
        },
        Command::Brieskorn(cmd) => match cmd {
            BrieskornCmd::List { family, n } => {
                let cells = brieskorn::enumerate((*family).into(), *n)?;
                let mut text = String::new();
                for cell in &cells {
                    text.push_str(&cell_text(cell));
                    text.push('\n');
                }
                Output {
                    text,
                    json: serde_json::Value::Array(cells.iter().map(cell_json).collect()),
                }
            }
            BrieskornCmd::Status { family, n, i, j } => {
                let cell = BrieskornCell::new((*family).into(), *n, *i, *j)?;
                let status = brieskorn::status(&cell);
                let mut text = format!("{}\n", status.kind.as_str());
                for c in &status.citations {
                    text.push_str(&format!("cites: {c}\n"));
                }
                Output {
                    text,
                    json: cell_json(&cell),
                }
            }
            BrieskornCmd::Triangle { family, n } => {
                let text = brieskorn::render_triangle((*family).into(), *n)?;
                Output {
                    json: json!(text),
                    text,
                }
            }
            BrieskornCmd::Lr { family, n, i, j } => {
                let cell = BrieskornCell::new((*family).into(), *n, *i, *j)?;
                let (l, r) = cell.lr_params();
                Output {
                    text: format!("l={} r={} mixed={}\n", l, r, cell.mixed()),
                    json: json!({ "l": l, "r": r, "mixed": cell.mixed() }),
                }
            }
        },
    })
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("valid JSON"));
            } else {
                print!("{}", out.text);
            }
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(3);
        }
    }
}
