//! Command-line front end. Every verb reads JSON files relative to the
//! workspace directory and prints one JSON document.
//!
//! Exit codes: 0 success, 1 invalid input, 2 counterexample found, 3
//! internal invariant violated.

use std::ffi::OsString;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::fincat::FinCategory;
use crate::fixtures::{self, FIXTURES};
use crate::json::{
    builtin, category_to_json, cocone_to_json, components_to_json, cone_to_json, functor_to_json, nat_trans_to_json,
    preorder_to_json, JsonError, Loader,
};
use crate::kan::{Adjunction, Kan, LanAdjunction, RanAdjunction};
use crate::limits::{colimit, filtered_colimit, limit};
use crate::reflect::{canonical_presentation, default_probes, EPrimeVerdict, InducedReflection, ReflectError};
use crate::setval::{NatTrans, SetFunctor};
use crate::sketch::{cat_from_model, cat_sketch, check_lemma51, nerve3, preorder_reflection, SketchError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

const PASS_IS_NOT_PROOF: &str = "pass means no probe refuted membership; it is not a proof";

#[derive(Debug, Parser)]
#[command(name = "setcat", version, about = "Finite categories, Set-valued functors, Kan extensions and induced reflections")]
pub struct Cli {
    /// Seed for randomized fixtures.
    #[arg(long, global = true, env = "SETCAT_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Maximum number of probes for falsification verbs.
    #[arg(long, global = true, env = "SETCAT_PROBE_CAP", default_value_t = 4096)]
    pub probe_cap: usize,
    /// Indent JSON output.
    #[arg(long, global = true, env = "SETCAT_PRETTY")]
    pub pretty: bool,
    /// Directory that relative paths are resolved against.
    #[arg(long, global = true, env = "SETCAT_WORKSPACE", default_value = ".")]
    pub workspace: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Category,
    Functor,
    Nat,
    FinFunctor,
    Preorder,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Side {
    Ran,
    Lan,
}

#[derive(Debug, Args)]
pub struct AdjunctionArg {
    /// `colim` (Δ ⊣ Colim on the input's shape), `ran:<functor file>` or
    /// `lan:<functor file>`.
    #[arg(long, default_value = "colim")]
    pub adjunction: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a JSON document; the kind is inferred from its fields unless given.
    Validate {
        file: String,
        #[arg(long)]
        kind: Option<Kind>,
    },
    /// Print a category (builtin name or file) in the JSON format.
    Show { category: String },
    /// Limit cone of a functor.
    Limit { functor: String },
    /// Colimit cocone of a functor.
    Colimit {
        functor: String,
        /// Use the pseudo-filtered formula.
        #[arg(long)]
        filtered: bool,
    },
    /// Restriction S ∘ K along a functor K.
    Restrict {
        #[arg(long)]
        along: String,
        functor: String,
    },
    /// Pointwise right Kan extension along K.
    Ran {
        #[arg(long)]
        along: String,
        functor: String,
    },
    /// Pointwise left Kan extension along K.
    Lan {
        #[arg(long)]
        along: String,
        functor: String,
    },
    /// Unit of Set^K ⊣ Ran_K (ran) or Lan_K ⊣ Set^K (lan).
    Unit {
        #[arg(long)]
        along: String,
        #[arg(long, value_enum)]
        side: Side,
        functor: String,
    },
    /// Counit of Set^K ⊣ Ran_K (ran) or Lan_K ⊣ Set^K (lan).
    Counit {
        #[arg(long)]
        along: String,
        #[arg(long, value_enum)]
        side: Side,
        functor: String,
    },
    /// Induced reflection I(C) with η_C and μ_C.
    Reflect {
        #[command(flatten)]
        adjunction: AdjunctionArg,
        functor: String,
    },
    /// Whether the unit at C is mono.
    InM {
        #[command(flatten)]
        adjunction: AdjunctionArg,
        functor: String,
    },
    /// Whether I(f) is an isomorphism.
    InEi {
        #[command(flatten)]
        adjunction: AdjunctionArg,
        nat: String,
    },
    /// Whether the unit naturality square at f is a pullback.
    InMi {
        #[command(flatten)]
        adjunction: AdjunctionArg,
        nat: String,
    },
    /// Pull f back along probes and report the first pullback leaving E_I.
    EprimeFalsify {
        #[command(flatten)]
        adjunction: AdjunctionArg,
        nat: String,
        /// Probe maps into the codomain; defaults to subfunctor inclusions
        /// and Yoneda maps.
        #[arg(long)]
        probe: Vec<String>,
    },
    /// Whether the pullback of f along a cover lies in M_I.
    InMstar {
        #[command(flatten)]
        adjunction: AdjunctionArg,
        nat: String,
        /// Cover p: E → cod(f); defaults to the canonical presentation.
        #[arg(long)]
        cover: Option<String>,
    },
    /// Canonical presentation by a coproduct of representables.
    Present { functor: String },
    /// 3-truncated nerve of a category.
    Nerve { category: String },
    /// Category of a model of the category sketch.
    Denerve { functor: String },
    /// Preorder reflection of a category, checked against hom-set oracle.
    Preorder { category: String },
    /// Whether a functor on Δ₃^op is a model of the category sketch.
    CheckModel { functor: String },
    /// Compare Lim D with the image of Lim φ for φ = m ∘ e through D.
    Lemma51 { nat: String },
    /// Run bundled golden checks (`all` for every fixture).
    Fixtures { name: String },
}

/// Result of one command: exit code and the JSON report.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome { code: EXIT_OK, report }
    }

    fn counterexample(report: Value) -> Self {
        Outcome { code: EXIT_COUNTEREXAMPLE, report }
    }
}

/// Parses arguments, runs the command and renders the report. Returns the
/// exit code and the text for stdout.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    let outcome = catch_unwind(AssertUnwindSafe(|| execute(&cli))).unwrap_or_else(|panic| {
        let message = panic
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "unknown panic".into());
        Outcome { code: EXIT_INTERNAL, report: json!({"error": "internal", "message": message}) }
    });
    let text = if cli.pretty {
        serde_json::to_string_pretty(&outcome.report)
    } else {
        serde_json::to_string(&outcome.report)
    }
    .expect("reports serialize");
    (outcome.code, text)
}

fn error_report(e: &JsonError) -> Outcome {
    let mut report = json!({"error": if e.is_validation() { "validation" } else { "malformed" }, "message": e.to_string()});
    if let JsonError::Malformed { pointer, .. } = e {
        report["pointer"] = json!(pointer);
    }
    Outcome { code: EXIT_INVALID, report }
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Outcome {
    let mut ctx = Context { loader: Loader::new(&cli.workspace), probe_cap: cli.probe_cap };
    match ctx.dispatch(cli) {
        Ok(outcome) => outcome,
        Err(Failure::Input(e)) => error_report(&e),
        Err(Failure::Invalid(report)) => Outcome { code: EXIT_INVALID, report },
        Err(Failure::Internal(message)) => Outcome { code: EXIT_INTERNAL, report: json!({"error": "internal", "message": message}) },
    }
}

enum Failure {
    Input(JsonError),
    Invalid(Value),
    Internal(String),
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Self {
        Failure::Input(e)
    }
}

struct Context {
    loader: Loader,
    probe_cap: usize,
}

fn shape_ref(shape: &Arc<FinCategory>) -> Value {
    if Arc::ptr_eq(shape, &crate::sketch::delta3op()) {
        return json!("delta3op");
    }
    ["terminal", "two", "parallel_pair", "cospan", "span", "split_idempotent", "delta_op:0"]
        .into_iter()
        .find(|name| builtin(name).is_ok_and(|c| c == **shape))
        .map_or_else(|| category_to_json(shape), |name| json!(name))
}

fn functor_json(f: &SetFunctor) -> Value {
    functor_to_json(f, shape_ref(f.shape()))
}

fn nat_json(t: &NatTrans) -> Value {
    nat_trans_to_json(t, &shape_ref(t.shape()))
}

impl Context {
    fn functor(&mut self, path: &str) -> Result<SetFunctor, JsonError> {
        self.loader.functor(&json!(path), "")
    }

    fn nat(&mut self, path: &str) -> Result<NatTrans, JsonError> {
        self.loader.nat_trans(&json!(path), "")
    }

    fn kan(&mut self, path: &str) -> Result<Kan, JsonError> {
        Ok(Kan::new(self.loader.fin_functor(&json!(path), "")?))
    }

    fn category(&mut self, r: &str) -> Result<Arc<FinCategory>, JsonError> {
        self.loader.category(&json!(r), "")
    }

    /// The adjunction named by `arg`, with unit on `shape`.
    fn adjunction(&mut self, arg: &AdjunctionArg, shape: &Arc<FinCategory>) -> Result<InducedReflection<Box<dyn Adjunction>>, Failure> {
        let adj: Box<dyn Adjunction> = if arg.adjunction == "colim" {
            Box::new(LanAdjunction::colim(shape))
        } else if let Some(path) = arg.adjunction.strip_prefix("ran:") {
            Box::new(RanAdjunction { kan: self.kan(path)? })
        } else if let Some(path) = arg.adjunction.strip_prefix("lan:") {
            Box::new(LanAdjunction { kan: self.kan(path)? })
        } else {
            return Err(Failure::Invalid(json!({"error": "malformed", "message": format!("unknown adjunction `{}`", arg.adjunction)})));
        };
        if adj.domain_shape() != shape {
            return Err(Failure::Invalid(json!({"error": "validation", "message": "input is not on the adjunction's domain shape"})));
        }
        Ok(InducedReflection::new(adj))
    }

    fn same_shape_kan(&self, kan: &Kan, shape: &Arc<FinCategory>, source_side: bool) -> Result<(), Failure> {
        let expected = if source_side { kan.functor().source() } else { kan.functor().target() };
        if expected != shape {
            return Err(Failure::Invalid(json!({"error": "validation", "message": "functor shape does not match K"})));
        }
        Ok(())
    }

    /// Loads a functor and reattaches it to `shape` so that pointer-shared
    /// shapes line up.
    fn on_shape(&self, f: SetFunctor, shape: &Arc<FinCategory>) -> SetFunctor {
        if Arc::ptr_eq(f.shape(), shape) {
            f
        } else {
            SetFunctor::new(shape.clone(), f.sets().to_vec(), f.maps().to_vec()).expect("same validated data")
        }
    }

    fn dispatch(&mut self, cli: &Cli) -> Result<Outcome, Failure> {
        Ok(match &cli.command {
            Command::Validate { file, kind } => self.validate(file, *kind)?,
            Command::Show { category } => Outcome::ok(category_to_json(&*self.category(category)?)),
            Command::Limit { functor } => {
                let d = self.functor(functor)?;
                let lim = limit(&d);
                Outcome::ok(json!({"size": lim.size(), "cone": cone_to_json(&lim.cone, d.shape())}))
            }
            Command::Colimit { functor, filtered } => {
                let d = self.functor(functor)?;
                let colim = if *filtered {
                    match filtered_colimit(&d) {
                        Ok(c) => c,
                        Err(e) => {
                            return Err(Failure::Invalid(json!({"error": "validation", "message": e.to_string()})))
                        }
                    }
                } else {
                    colimit(&d)
                };
                Outcome::ok(json!({"size": colim.size(), "cocone": cocone_to_json(&colim.cocone, d.shape())}))
            }
            Command::Restrict { along, functor } => {
                let kan = self.kan(along)?;
                let s = self.functor(functor)?;
                self.same_shape_kan(&kan, s.shape(), false)?;
                let s = self.on_shape(s, kan.functor().target());
                Outcome::ok(functor_json(&kan.restrict(&s)))
            }
            Command::Ran { along, functor } | Command::Lan { along, functor } => {
                let kan = self.kan(along)?;
                let t = self.functor(functor)?;
                self.same_shape_kan(&kan, t.shape(), true)?;
                let t = self.on_shape(t, kan.functor().source());
                let out = if matches!(cli.command, Command::Ran { .. }) { kan.ran(&t) } else { kan.lan(&t) };
                Outcome::ok(functor_json(&out))
            }
            Command::Unit { along, side, functor } | Command::Counit { along, side, functor } => {
                let unit = matches!(cli.command, Command::Unit { .. });
                let kan = self.kan(along)?;
                let f = self.functor(functor)?;
                // unit_ran and counit_lan live on Set^A, the others on Set^B
                let on_source = matches!((side, unit), (Side::Ran, false) | (Side::Lan, true));
                self.same_shape_kan(&kan, f.shape(), on_source)?;
                let shape = if on_source { kan.functor().source() } else { kan.functor().target() }.clone();
                let f = self.on_shape(f, &shape);
                let t = match (side, unit) {
                    (Side::Ran, true) => kan.unit_ran(&f),
                    (Side::Ran, false) => kan.counit_ran(&f),
                    (Side::Lan, true) => kan.unit_lan(&f),
                    (Side::Lan, false) => kan.counit_lan(&f),
                };
                Outcome::ok(nat_json(&t))
            }
            Command::Reflect { adjunction, functor } => {
                let c = self.functor(functor)?;
                let r = self.adjunction(adjunction, c.shape())?;
                let c = self.on_shape(c, r.adjunction.domain_shape());
                let rc = r.reflect_object(&c);
                Outcome::ok(json!({
                    "image": functor_json(&rc.image),
                    "eta": components_to_json(&rc.eta),
                    "mu": components_to_json(&rc.mu),
                    "theta": nat_json(&rc.theta),
                    "in_subcategory": rc.eta.is_iso(),
                }))
            }
            Command::InM { adjunction, functor } => {
                let c = self.functor(functor)?;
                let r = self.adjunction(adjunction, c.shape())?;
                let c = self.on_shape(c, r.adjunction.domain_shape());
                Outcome::ok(json!({"in_subcategory": r.in_subcategory(&c)}))
            }
            Command::InEi { adjunction, nat } | Command::InMi { adjunction, nat } => {
                let f = self.nat(nat)?;
                let r = self.adjunction(adjunction, f.shape())?;
                let f = self.reattach(f, r.adjunction.domain_shape());
                if matches!(cli.command, Command::InEi { .. }) {
                    let i_f = r.reflect_morphism(&f);
                    Outcome::ok(json!({"in_e_i": i_f.is_iso(), "reflected": components_to_json(&i_f)}))
                } else {
                    Outcome::ok(json!({"in_m_i": r.is_in_m_i(&f)}))
                }
            }
            Command::EprimeFalsify { adjunction, nat, probe } => {
                let f = self.nat(nat)?;
                let r = self.adjunction(adjunction, f.shape())?;
                let f = self.reattach(f, r.adjunction.domain_shape());
                let probes = if probe.is_empty() {
                    default_probes(f.target(), self.probe_cap)
                } else {
                    let mut out = Vec::new();
                    for p in probe {
                        let t = self.nat(p)?;
                        out.push(self.reattach(t, r.adjunction.domain_shape()));
                    }
                    out
                };
                if let Some(bad) = probes.iter().position(|p| p.target() != f.target()) {
                    return Err(Failure::Invalid(
                        json!({"error": "validation", "message": format!("probe {bad} does not land in the codomain")}),
                    ));
                }
                match r.is_in_e_prime_falsify(&f, &probes) {
                    Err(ReflectError::NotInEI) => {
                        return Err(Failure::Invalid(json!({"error": "validation", "message": "FNotInEI: f is not in E_I"})))
                    }
                    Err(e) => return Err(Failure::Internal(e.to_string())),
                    Ok(EPrimeVerdict::Pass { probes }) => {
                        Outcome::ok(json!({"verdict": "pass", "probes": probes, "note": PASS_IS_NOT_PROOF}))
                    }
                    Ok(EPrimeVerdict::Counterexample { probe, pulled_back }) => Outcome::counterexample(json!({
                        "verdict": "counterexample",
                        "probe": probe,
                        "probe_map": nat_json(&probes[probe]),
                        "pulled_back": nat_json(&pulled_back),
                    })),
                }
            }
            Command::InMstar { adjunction, nat, cover } => {
                let f = self.nat(nat)?;
                let r = self.adjunction(adjunction, f.shape())?;
                let f = self.reattach(f, r.adjunction.domain_shape());
                let p = match cover {
                    Some(path) => {
                        let t = self.nat(path)?;
                        self.reattach(t, r.adjunction.domain_shape())
                    }
                    None => canonical_presentation(f.target()).p,
                };
                match r.is_in_m_star(&f, &p) {
                    Ok(b) => Outcome::ok(json!({"in_m_star": b, "note": "relative to the supplied cover"})),
                    Err(e) => return Err(Failure::Invalid(json!({"error": "validation", "message": e.to_string()}))),
                }
            }
            Command::Present { functor } => {
                let m = self.functor(functor)?;
                let pres = canonical_presentation(&m);
                let shape = m.shape();
                let elements: Vec<Value> =
                    pres.elements.iter().map(|&(j, x)| json!([shape.object_name(j), m.set(j).label(x)])).collect();
                Outcome::ok(json!({"elements": elements, "cover": functor_json(&pres.cover.functor), "p": components_to_json(&pres.p), "epi": pres.p.is_epi()}))
            }
            Command::Nerve { category } => Outcome::ok(functor_json(&nerve3(&*self.category(category)?))),
            Command::Denerve { functor } => {
                let m = self.model_input(functor)?;
                match cat_from_model(&m) {
                    Ok(c) => Outcome::ok(category_to_json(&c)),
                    Err(e) => return Err(sketch_failure(e)),
                }
            }
            Command::Preorder { category } => match preorder_reflection(&*self.category(category)?) {
                Ok(p) => Outcome::ok(preorder_to_json(&p)),
                Err(e @ SketchError::PipelineOracleMismatch(..)) => return Err(Failure::Internal(e.to_string())),
                Err(e) => return Err(sketch_failure(e)),
            },
            Command::CheckModel { functor } => {
                let m = self.model_input(functor)?;
                let failing = cat_sketch().model_failure(&m);
                Outcome::ok(json!({"model": failing.is_none(), "failing_cone": failing}))
            }
            Command::Lemma51 { nat } => {
                let phi = self.nat(nat)?;
                let report = check_lemma51(&phi);
                let body = json!({
                    "holds": report.holds(),
                    "lim_f": report.lim_f,
                    "lim_g": report.lim_g,
                    "lim_d": report.lim_d,
                    "image": report.image,
                    "bijection": report.bijection,
                });
                if report.holds() {
                    Outcome::ok(body)
                } else {
                    Outcome::counterexample(body)
                }
            }
            Command::Fixtures { name } => {
                let names: Vec<&str> = if name == "all" { FIXTURES.to_vec() } else { vec![name.as_str()] };
                let mut reports = Vec::new();
                let mut passed = true;
                for n in names {
                    match fixtures::run(n, cli.seed) {
                        Some(r) => {
                            passed &= r.passed();
                            reports.push(r.to_json());
                        }
                        None => {
                            return Err(Failure::Invalid(
                                json!({"error": "UnknownFixture", "message": format!("unknown fixture `{n}`"), "known": FIXTURES}),
                            ))
                        }
                    }
                }
                let report = json!({"passed": passed, "fixtures": reports});
                Outcome { code: if passed { EXIT_OK } else { EXIT_INTERNAL }, report }
            }
        })
    }

    fn reattach(&self, t: NatTrans, shape: &Arc<FinCategory>) -> NatTrans {
        if Arc::ptr_eq(t.shape(), shape) {
            return t;
        }
        let source = self.on_shape(t.source().clone(), shape);
        let target = self.on_shape(t.target().clone(), shape);
        NatTrans::new(source, target, t.components().to_vec()).expect("same validated data")
    }

    fn model_input(&mut self, path: &str) -> Result<SetFunctor, Failure> {
        let m = self.functor(path)?;
        let carrier = crate::sketch::delta3op();
        if *m.shape() != carrier {
            return Err(Failure::Invalid(json!({"error": "validation", "message": "expected a functor on delta3op"})));
        }
        Ok(self.on_shape(m, &carrier))
    }

    fn validate(&mut self, file: &str, kind: Option<Kind>) -> Result<Outcome, Failure> {
        let doc = self.loader.read(file)?;
        let kind = kind.unwrap_or_else(|| {
            if doc.get("compose").is_some() {
                Kind::Category
            } else if doc.get("components").is_some() {
                Kind::Nat
            } else if doc.get("sets").is_some() {
                Kind::Functor
            } else if doc.get("elements").is_some() {
                Kind::Preorder
            } else {
                Kind::FinFunctor
            }
        });
        let summary = match kind {
            Kind::Category => {
                let c = self.loader.category(&doc, "")?;
                json!({"kind": "category", "objects": c.object_count(), "morphisms": c.morphism_count()})
            }
            Kind::Functor => {
                let f = self.loader.functor(&doc, "")?;
                json!({"kind": "functor", "sizes": f.sizes()})
            }
            Kind::Nat => {
                let t = self.loader.nat_trans(&doc, "")?;
                json!({"kind": "natural transformation", "epi": t.is_epi(), "mono": t.is_mono(), "iso": t.is_iso()})
            }
            Kind::FinFunctor => {
                let k = self.loader.fin_functor(&doc, "")?;
                json!({"kind": "functor between categories", "objects": k.object_map().len()})
            }
            Kind::Preorder => {
                let p = self.loader.preorder(&doc, "")?;
                json!({"kind": "preorder", "elements": p.len()})
            }
        };
        let mut report = json!({"valid": true});
        report["summary"] = summary;
        Ok(Outcome::ok(report))
    }
}

fn sketch_failure(e: SketchError) -> Failure {
    Failure::Invalid(json!({"error": "validation", "message": e.to_string()}))
}
