//! `tubular`: build algebras, modules, tubes and Ziegler closures from the command line.

mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tubular::constructions::{
    build_asnm, one_point_coextension, one_point_extension_labeled, repetitive_window, socle_dim, trivial_extension,
    ExtensionResult,
};
use tubular::covering::galois_covering;
use tubular::fixtures::{verify_example, Check, EXAMPLE_NAMES};
use tubular::quiver_algebra::{BoundQuiverAlgebra, Quiver, StructureAlgebra};
use tubular::representation::{ar_translate, ar_translate_inverse, hom_dim, indecomposability, Representation};
use tubular::tube::{build_gamma, coray_insertion, ray_insertion, to_dot, TubeQuiver};
use tubular::ziegler::{
    cover_e, cover_galois, CoverSubset, SpectrumCover, SymbolicSubset, Trace, TubularType, ZgSpace,
};

use input::{json_argument, json_object, load_module, parse_levels, parse_point, parse_vertex, AlgebraArgs};

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or files; exit code 2.
    Input(String),
    /// A check did not hold; the report goes to stdout and the exit code is 1.
    Verification(String),
}

impl Failure {
    pub fn input(msg: impl Into<String>) -> Failure {
        Failure::Input(msg.into())
    }
}

impl From<tubular::Error> for Failure {
    fn from(e: tubular::Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

#[derive(Parser, Debug)]
#[command(name = "tubular", version, about = "Bound quiver algebras, tubes and Ziegler closures")]
struct Cli {
    /// Output format; `dot` is available for tubes.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bound quiver algebras.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Modules over a bound quiver algebra.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Extensions, trivial extensions and repetitive windows.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Galois coverings of orbit algebras by repetitive windows.
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Tubes `Γ(p, n, m)`.
    #[command(subcommand)]
    Tube(TubeCmd),
    /// Closures of tubes in the Ziegler spectrum.
    #[command(subcommand)]
    Zg(ZgCmd),
    /// Named worked examples.
    Example(ExampleArgs),
}

#[derive(Subcommand, Debug)]
enum AlgebraCmd {
    /// Path basis, nilpotency index and Ext-quiver of `kQ/I`.
    Build(AlgebraArgs),
}

#[derive(Args, Debug)]
struct ModuleArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// `P:v`, `I:v`, `S:v`, `R:λ`, `X`, or a JSON file (or literal) `{algebra?, dims, maps}`.
    #[arg(long)]
    module: String,
}

#[derive(Subcommand, Debug)]
enum RepCmd {
    /// Dimension of `Hom(M, N)`.
    Hom {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Auslander-Reiten translate.
    Tau {
        #[command(flatten)]
        args: ModuleArgs,
        /// Use the inverse translate.
        #[arg(long)]
        inverse: bool,
    },
    /// Indecomposability test.
    Indec(ModuleArgs),
}

#[derive(Subcommand, Debug)]
enum ConstructCmd {
    /// One-point extension `R[X]`.
    Ope {
        #[command(flatten)]
        args: ModuleArgs,
        #[arg(long, default_value = "w")]
        label: String,
    },
    /// One-point coextension `[X]R`.
    Opc(ModuleArgs),
    /// `A[S, n, m]`: n extensions, then m coextensions.
    Asnm {
        #[command(flatten)]
        args: ModuleArgs,
        #[arg(short, default_value_t = 1)]
        n: usize,
        #[arg(short, default_value_t = 1)]
        m: usize,
    },
    /// Trivial extension `R ⋉ DR`.
    Trivext(AlgebraArgs),
    /// Finite window of the repetitive category.
    Repwindow {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        levels: String,
    },
    /// Dimension of the socle.
    Socle(AlgebraArgs),
}

#[derive(Args, Debug)]
struct CoverArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Period `s` of the orbit algebra.
    #[arg(long, default_value_t = 1)]
    period: usize,
    /// Window levels `lo..hi`.
    #[arg(long, allow_hyphen_values = true, default_value = "-1..1")]
    levels: String,
}

#[derive(Subcommand, Debug)]
enum CoverCmd {
    /// Functor and covering properties on the window.
    Check(CoverArgs),
    /// Lift a basis element of the orbit algebra along the covering.
    Lift {
        #[command(flatten)]
        cover: CoverArgs,
        /// Basis label in the orbit algebra, e.g. `b1@0`.
        #[arg(long)]
        element: String,
        /// Window object, e.g. `c2@-1`.
        #[arg(long, allow_hyphen_values = true)]
        object: String,
        /// Fix the codomain instead of the domain.
        #[arg(long)]
        codomain: bool,
    },
    /// Push a module on the window down to the orbit algebra.
    Pushdown {
        #[command(flatten)]
        cover: CoverArgs,
        /// Module over the window, e.g. `P:c2@0`.
        #[arg(long)]
        module: String,
    },
}

#[derive(Args, Debug)]
struct TubeArgs {
    #[arg(short, default_value_t = 0)]
    p: usize,
    #[arg(short, default_value_t = 0)]
    n: usize,
    #[arg(short, default_value_t = 0)]
    m: usize,
    #[arg(long, default_value_t = 4)]
    depth: usize,
}

impl TubeArgs {
    fn build(&self) -> Result<TubeQuiver, Failure> {
        Ok(build_gamma(self.p, self.n, self.m, self.depth)?)
    }
}

#[derive(Subcommand, Debug)]
enum TubeCmd {
    /// Vertices, arrows, translation and projective/injective vertices.
    Build(TubeArgs),
    /// Maximal rays and corays.
    Rays(TubeArgs),
    /// Graphviz drawing.
    Dot(TubeArgs),
    /// Ray or coray insertion at a vertex.
    Insert {
        #[command(flatten)]
        tube: TubeArgs,
        #[arg(long, conflicts_with = "coray", required_unless_present = "coray")]
        ray: Option<String>,
        #[arg(long)]
        coray: Option<String>,
    },
    /// Mesh and translation checks.
    Validate(TubeArgs),
}

#[derive(Args, Debug)]
struct ZgArgs {
    #[arg(short, default_value_t = 0)]
    p: usize,
    #[arg(short, default_value_t = 0)]
    n: usize,
    #[arg(short, default_value_t = 0)]
    m: usize,
}

impl ZgArgs {
    fn space(&self) -> Result<ZgSpace, Failure> {
        Ok(ZgSpace::new(self.p, self.n, self.m)?)
    }
}

#[derive(Subcommand, Debug)]
enum ZgCmd {
    /// Closure of a subset `{vertices, ray_tails, holes, points}`.
    Closure {
        #[command(flatten)]
        space: ZgArgs,
        #[arg(long)]
        subset: String,
    },
    /// Whether a subset is closed.
    Isclosed {
        #[command(flatten)]
        space: ZgArgs,
        #[arg(long)]
        subset: String,
    },
    /// Cantor-Bendixson rank of a point, or the rank table.
    Cbrank {
        #[command(flatten)]
        space: ZgArgs,
        /// `prufer:k`, `adic:k`, `generic` or a vertex such as `X0[2]`.
        #[arg(long)]
        point: Option<String>,
    },
    /// Cover of a spectrum by closed pieces.
    Cover {
        /// Tubular type, e.g. `(3,3,3)`.
        #[arg(long = "type", default_value = "(3,3,3)")]
        ty: String,
        /// Period of the orbit algebra.
        #[arg(long, default_value_t = 1)]
        period: usize,
        /// Cover the spectrum of `E_i` instead.
        #[arg(long, allow_hyphen_values = true)]
        e: Option<i64>,
        /// Traces `{label: subset descriptor | {"closed": bool}}`; reports closedness.
        #[arg(long)]
        subset: Option<String>,
    },
}

#[derive(Args, Debug)]
struct ExampleArgs {
    /// One of the registered examples.
    name: Option<String>,
    /// Run the example's checks.
    #[arg(long)]
    verify: bool,
    /// Machine-readable check report.
    #[arg(long)]
    json: bool,
    /// List the registered examples.
    #[arg(long)]
    list: bool,
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn quiver_json(q: &Quiver) -> Value {
    serde_json::to_value(q.to_spec()).expect("quivers serialize")
}

fn algebra_json(a: &BoundQuiverAlgebra) -> Result<Value, Failure> {
    let q = &a.quiver;
    Ok(json!({
        "quiver": quiver_json(q),
        "relations": a.relations.iter().map(|r| r.display(q)).collect::<Vec<_>>(),
        "dim": a.dim(),
        "nilpotency": a.nilpotency,
        "basis": a.basis.iter().map(|p| p.label(q)).collect::<Vec<_>>(),
        "ext_quiver": quiver_json(&a.structure.ext_quiver()?),
    }))
}

fn module_json(m: &Representation) -> Value {
    serde_json::to_value(m.to_spec()).expect("modules serialize")
}

fn extension_json(res: &ExtensionResult) -> Result<Value, Failure> {
    let mut v = algebra_json(&res.algebra)?;
    v["new_vertex"] = json!(res.algebra.quiver.vertices()[res.vertex]);
    v["new_arrows"] = json!(res
        .new_arrows
        .iter()
        .map(|(k, _, _)| res.algebra.quiver.arrow(*k).label.clone())
        .collect::<Vec<_>>());
    Ok(v)
}

fn run_algebra(cmd: AlgebraCmd) -> Outcome {
    match cmd {
        AlgebraCmd::Build(args) => Ok(pretty(&algebra_json(&args.load()?)?)),
    }
}

fn run_rep(cmd: RepCmd) -> Outcome {
    match cmd {
        RepCmd::Hom { algebra, from, to } => {
            let a = algebra.load_for(&[from.clone(), to.clone()])?;
            let m = load_module(Some(&a), &a.structure, &from)?;
            let n = load_module(Some(&a), &a.structure, &to)?;
            Ok(pretty(&json!({ "hom_dim": hom_dim(&m, &n)? })))
        }
        RepCmd::Tau { args, inverse } => {
            let a = args.algebra.load_for(std::slice::from_ref(&args.module))?;
            let m = load_module(Some(&a), &a.structure, &args.module)?;
            let t = if inverse { ar_translate_inverse(&m)? } else { ar_translate(&m)? };
            Ok(pretty(&module_json(&t)))
        }
        RepCmd::Indec(args) => {
            let a = args.algebra.load_for(std::slice::from_ref(&args.module))?;
            let m = load_module(Some(&a), &a.structure, &args.module)?;
            let verdict = indecomposability(&m)?;
            Ok(pretty(&json!({
                "indecomposable": tubular::representation::is_indecomposable(&m)?,
                "verdict": format!("{verdict:?}"),
            })))
        }
    }
}

fn run_construct(cmd: ConstructCmd) -> Outcome {
    let with_module = |args: &ModuleArgs| -> Result<(BoundQuiverAlgebra, Representation), Failure> {
        let a = args.algebra.load_for(std::slice::from_ref(&args.module))?;
        let x = load_module(Some(&a), &a.structure, &args.module)?;
        Ok((a, x))
    };
    match cmd {
        ConstructCmd::Ope { args, label } => {
            let (a, x) = with_module(&args)?;
            Ok(pretty(&extension_json(&one_point_extension_labeled(&a, &x, &label)?)?))
        }
        ConstructCmd::Opc(args) => {
            let (a, x) = with_module(&args)?;
            Ok(pretty(&extension_json(&one_point_coextension(&a, &x)?)?))
        }
        ConstructCmd::Asnm { args, n, m } => {
            let (a, s) = with_module(&args)?;
            Ok(pretty(&algebra_json(&build_asnm(&a, &s, n, m)?.algebra)?))
        }
        ConstructCmd::Trivext(args) => {
            let a = args.load()?;
            let t = trivial_extension(&a.structure);
            Ok(pretty(&json!({
                "base_dim": a.dim(),
                "dim": t.dim(),
                "ext_quiver": quiver_json(&t.ext_quiver()?),
                "socle_dim": socle_dim(&t)?,
            })))
        }
        ConstructCmd::Repwindow { algebra, levels } => {
            let a = algebra.load()?;
            let (lo, hi) = parse_levels(&levels)?;
            let w = repetitive_window(a.structure.clone(), lo, hi)?;
            Ok(pretty(&json!({
                "levels": [lo, hi],
                "objects": w.algebra.objects(),
                "dim": w.algebra.dim(),
                "ext_quiver": quiver_json(&w.algebra.ext_quiver()?),
            })))
        }
        ConstructCmd::Socle(args) => {
            let a = args.load()?;
            Ok(pretty(&json!({ "dim": a.dim(), "socle_dim": socle_dim(&a.structure)? })))
        }
    }
}

fn basis_label(a: &StructureAlgebra, label: &str) -> Result<usize, Failure> {
    a.labels().iter().position(|l| l == label).ok_or_else(|| Failure::input(format!("unknown basis element {label:?}")))
}

fn run_cover(cmd: CoverCmd) -> Outcome {
    let setup = |c: &CoverArgs| {
        let a = c.algebra.load()?;
        let (lo, hi) = parse_levels(&c.levels)?;
        Ok::<_, Failure>(galois_covering(a.structure.clone(), c.period, lo, hi)?)
    };
    match cmd {
        CoverCmd::Check(c) => {
            let g = setup(&c)?;
            let f = &g.map;
            let functor = f.check_functor();
            let covering = f.check_covering(&g.domain_complete(), &g.codomain_complete());
            let status = |r: &tubular::Result<()>| r.as_ref().map_or_else(|e| e.to_string(), |_| "ok".to_string());
            let report = json!({
                "window_objects": f.source.num_objects(),
                "orbit_objects": f.target.num_objects(),
                "functor": status(&functor),
                "covering": status(&covering),
            });
            if functor.is_ok() && covering.is_ok() {
                Ok(pretty(&report))
            } else {
                Err(Failure::Verification(pretty(&report)))
            }
        }
        CoverCmd::Lift { cover, element, object, codomain } => {
            let g = setup(&cover)?;
            let f = &g.map;
            let beta = f.target.basis_vector(basis_label(&f.target, &element)?);
            let obj = f.source.object_index(&object).ok_or_else(|| Failure::input(format!("unknown object {object:?}")))?;
            let lift = if codomain { f.lift_codomain_fixed(&beta, obj)? } else { f.lift_domain_fixed(&beta, obj)? };
            let parts: Vec<Value> = lift
                .iter()
                .filter(|(_, x)| x.iter().any(|c| !c.is_zero()))
                .map(|(o, x)| json!({ "object": f.source.objects()[*o], "element": f.source.format_element(x) }))
                .collect();
            Ok(pretty(&json!({ "element": element, "fixed": object, "lift": parts })))
        }
        CoverCmd::Pushdown { cover, module } => {
            let g = setup(&cover)?;
            let f = &g.map;
            let m = load_module(None, &f.source, &module)?;
            let down = f.push_down(&m, &g.domain_complete())?;
            Ok(pretty(&json!({ "total_dim": down.total_dim(), "module": module_json(&down) })))
        }
    }
}

fn emit_tube(t: &TubeQuiver, emit: Emit) -> String {
    match emit {
        Emit::Dot => to_dot(t),
        Emit::Json => pretty(&serde_json::to_value(t.to_spec()).expect("tubes serialize")),
    }
}

fn run_tube(cmd: TubeCmd, emit: Emit) -> Outcome {
    match cmd {
        TubeCmd::Build(args) => Ok(emit_tube(&args.build()?, emit)),
        TubeCmd::Dot(args) => Ok(to_dot(&args.build()?)),
        TubeCmd::Rays(args) => {
            let t = args.build()?;
            let names = |rs: Vec<tubular::tube::Ray>| -> Vec<Vec<String>> {
                rs.iter().map(|r| r.vertices.iter().map(ToString::to_string).collect()).collect()
            };
            Ok(pretty(&json!({ "rays": names(t.maximal_rays()), "corays": names(t.maximal_corays()) })))
        }
        TubeCmd::Insert { tube, ray, coray } => {
            let t = tube.build()?;
            let out = match (ray, coray) {
                (Some(v), _) => ray_insertion(&t, &parse_vertex(&v)?)?,
                (None, Some(v)) => coray_insertion(&t, &parse_vertex(&v)?)?,
                (None, None) => return Err(Failure::input("give --ray or --coray")),
            };
            Ok(emit_tube(&out, emit))
        }
        TubeCmd::Validate(args) => match args.build()?.validate() {
            Ok(()) => Ok(pretty(&json!({ "status": "ok", "problems": [] }))),
            Err(problems) => Err(Failure::Verification(pretty(&json!({ "status": "fail", "problems": problems })))),
        },
    }
}

fn subset_json(s: &SymbolicSubset) -> Value {
    serde_json::from_str(&s.to_json()).expect("subset descriptors are JSON")
}

fn cover_subset(cover: &SpectrumCover, text: &str) -> Result<CoverSubset, Failure> {
    let tubes: std::collections::BTreeMap<String, (usize, usize, usize)> =
        cover.tube_pieces().iter().map(|p| (p.label.clone(), p.tube.expect("tube piece"))).collect();
    let mut sub = CoverSubset::default();
    for (label, trace) in json_object(text, "cover subset")? {
        let t = match tubes.get(&label) {
            Some(&(p, n, m)) => Trace::Tube(ZgSpace::new(p, n, m)?.subset_from_json(&trace.to_string())?),
            None => match trace.get("closed").and_then(Value::as_bool) {
                Some(closed) => Trace::Opaque { closed },
                None => return Err(Failure::input(format!("trace of {label:?} needs a boolean \"closed\""))),
            },
        };
        sub.traces.insert(label, t);
    }
    Ok(sub)
}

fn run_zg(cmd: ZgCmd) -> Outcome {
    match cmd {
        ZgCmd::Closure { space, subset } => {
            let s = space.space()?;
            let a = s.subset_from_json(&json_argument(&subset)?)?;
            Ok(pretty(&subset_json(&s.closure(&a))))
        }
        ZgCmd::Isclosed { space, subset } => {
            let s = space.space()?;
            let a = s.subset_from_json(&json_argument(&subset)?)?;
            Ok(pretty(&json!({ "closed": s.is_closed(&a) })))
        }
        ZgCmd::Cbrank { space, point } => {
            let s = space.space()?;
            match point {
                Some(p) => {
                    let pt = parse_point(&p)?;
                    Ok(pretty(&json!({ "point": pt.to_string(), "rank": s.cb_rank(&pt)? })))
                }
                None => Ok(pretty(&serde_json::to_value(s.summary()).expect("summaries serialize"))),
            }
        }
        ZgCmd::Cover { ty, period, e, subset } => {
            let ty: TubularType = ty.parse()?;
            let cover = match e {
                Some(i) => cover_e(i, &ty, 3 * period as i64),
                None => cover_galois(&ty, period)?,
            };
            match subset {
                None => Ok(pretty(&serde_json::to_value(&cover).expect("covers serialize"))),
                Some(arg) => {
                    let sub = cover_subset(&cover, &json_argument(&arg)?)?;
                    Ok(pretty(&json!({ "cover": cover.name, "closed": cover.is_closed(&sub)? })))
                }
            }
        }
    }
}

fn check_json(c: &Check) -> Value {
    json!({ "name": c.name, "expected": c.expected, "got": c.got, "provenance": c.kind })
}

fn example_artifact(name: &str, emit: Emit) -> Outcome {
    match name {
        "gamma-232" => Ok(emit_tube(&build_gamma(2, 3, 2, 4)?, emit)),
        "trivext-333" => {
            let r = input::named_algebra("canonical-333")?;
            let t = trivial_extension(&r.structure);
            Ok(pretty(&json!({ "base_dim": r.dim(), "dim": t.dim(), "ext_quiver": quiver_json(&t.ext_quiver()?) })))
        }
        other => Ok(pretty(&algebra_json(&input::named_algebra(other)?)?)),
    }
}

fn run_example(args: ExampleArgs, emit: Emit) -> Outcome {
    if args.list {
        return Ok(EXAMPLE_NAMES.iter().map(|n| format!("{n}\n")).collect());
    }
    let Some(name) = args.name else {
        return Err(Failure::input("give an example name or --list"));
    };
    if !EXAMPLE_NAMES.contains(&name.as_str()) {
        return Err(Failure::input(format!("unknown example {name:?}; known: {}", EXAMPLE_NAMES.join(", "))));
    }
    if !args.verify {
        return example_artifact(&name, emit);
    }
    check_report(&name, &verify_example(&name)?, args.json)
}

/// Exit 0 with the report when every check passes, exit 1 with a diff otherwise.
fn check_report(name: &str, checks: &[Check], as_json: bool) -> Outcome {
    let ok = checks.iter().all(Check::passed);
    let report = if as_json {
        pretty(&json!({
            "example": name,
            "status": if ok { "pass" } else { "fail" },
            "checks": checks.iter().map(check_json).collect::<Vec<_>>(),
        }))
    } else {
        let mut s = String::new();
        for c in checks {
            if c.passed() {
                s.push_str(&format!("ok    {}: {}\n", c.name, c.got));
            } else {
                s.push_str(&format!("FAIL  {}\n  - expected: {}\n  + got:      {}\n", c.name, c.expected, c.got));
            }
        }
        let failed = checks.iter().filter(|c| !c.passed()).count();
        s.push_str(&format!("{name}: {} checks, {failed} failed\n", checks.len()));
        s
    };
    if ok {
        Ok(report)
    } else {
        Err(Failure::Verification(report))
    }
}

fn run(cli: Cli) -> Outcome {
    let tube_like = matches!(cli.command, Command::Tube(_) | Command::Example(_));
    if cli.emit == Emit::Dot && !tube_like {
        return Err(Failure::input("--emit dot is only available for tubes"));
    }
    match cli.command {
        Command::Algebra(c) => run_algebra(c),
        Command::Rep(c) => run_rep(c),
        Command::Construct(c) => run_construct(c),
        Command::Cover(c) => run_cover(c),
        Command::Tube(c) => run_tube(c, cli.emit),
        Command::Zg(c) => run_zg(c),
        Command::Example(a) => run_example(a, cli.emit),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
