mod cache;
mod golden;
mod registry;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minorgap_core::analysis::GapRow;
use minorgap_core::constructions::{certify_with, CertifyOptions};
use minorgap_core::{
    build_family, classify_connected, edge_spectrum_with, enumerate_free_with, find_minor_model, gap_sequence, graph6,
    is_edge_maximal_free, verify_certificate, Certificate, ConstructionRecipe, EdgeSpectrum, EnumOptions, Error,
    ForbiddenSet, GapMode, GapSequence, Graph, MaximalityVerdict,
};
use serde_json::json;

use cache::{Cache, QueryKey};
use registry::Registry;

#[derive(Parser)]
#[command(name = "minorgap", version, about = "Edge-maximal graphs excluding fixed minors")]
struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
    Json,
}

#[derive(Args)]
struct Forbid {
    /// Excluded minors: names such as k5, claw, k3_3, c5, or graph6. Repeat
    /// the flag or separate with commas.
    #[arg(long = "forbid", short = 'f', required = true)]
    specs: Vec<String>,
    /// Lift the enumeration size guard.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Edge counts of all edge-maximal free graphs on n vertices.
    Spectrum {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        forbid: Forbid,
    },
    /// Gap M+(n) - M-(n), for one n or a range.
    Gap {
        #[arg(short, conflicts_with_all = ["from", "to"])]
        n: Option<usize>,
        #[arg(long, requires = "to")]
        from: Option<usize>,
        #[arg(long, requires = "from")]
        to: Option<usize>,
        /// Bound the rows with certified constructions instead of enumerating.
        #[arg(long)]
        witnessed: bool,
        #[command(flatten)]
        forbid: Forbid,
    },
    /// Every free graph on n vertices up to isomorphism, as graph6.
    Enumerate {
        #[arg(short)]
        n: usize,
        /// Only the edge-maximal ones.
        #[arg(long)]
        maximal: bool,
        #[command(flatten)]
        forbid: Forbid,
    },
    /// Build a member of a construction family.
    Construct {
        /// F1..F20 or the family name.
        #[arg(long)]
        family: String,
        /// Comma-separated key=value pairs.
        #[arg(long, default_value = "")]
        params: String,
        /// Also certify against these excluded minors.
        #[arg(long = "certify")]
        certify: Vec<String>,
        /// Skip the size guard when certifying.
        #[arg(long)]
        force: bool,
        /// Write the certificate here as JSON.
        #[arg(long, requires = "certify")]
        out: Option<PathBuf>,
    },
    /// Certify a graph as edge-maximal free with a predicted edge count, or
    /// re-check a certificate file.
    Certify {
        #[arg(short, long, required_unless_present = "check")]
        graph: Option<String>,
        #[arg(long = "forbid", short = 'f', required_unless_present = "check")]
        specs: Vec<String>,
        #[arg(long, required_unless_present = "check")]
        predicted: Option<usize>,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Certificate JSON to re-verify.
        #[arg(long, conflicts_with_all = ["graph", "specs", "predicted"])]
        check: Option<PathBuf>,
    },
    /// Purity verdict for a connected excluded minor.
    Classify {
        #[arg(long)]
        minor: String,
    },
    /// Run the built-in battery of exact spectra with known values.
    #[command(name = "verify-golden", alias = "verify-paper")]
    VerifyGolden {
        /// Include the ten-vertex K5 spectrum; also enabled by MINORGAP_STRETCH=1.
        #[arg(long)]
        stretch: bool,
    },
    /// Test whether H is a minor of G.
    #[command(disable_help_flag = true)]
    Minor {
        #[arg(short, long)]
        graph: String,
        #[arg(short = 'h', long = "minor")]
        minor: String,
        #[arg(long, action = clap::ArgAction::Help)]
        help: Option<bool>,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotFree { .. }
            | Error::NotMaximal(..)
            | Error::EdgeCountMismatch { .. }
            | Error::SearchBudgetExceeded(_)
            | Error::PreconditionUnmet(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

struct Ctx {
    registry: Registry,
    cache: Option<Cache>,
    format: Format,
}

impl Ctx {
    fn forbidden(&self, specs: &[String]) -> Result<ForbiddenSet, Failure> {
        let graphs = self.registry.resolve_list(specs).map_err(Failure::Usage)?;
        Ok(ForbiddenSet::new(graphs)?)
    }

    fn graph(&self, spec: &str) -> Result<Graph, Failure> {
        self.registry.resolve(spec).map_err(Failure::Usage)
    }

    fn spectrum(&self, n: usize, f: &ForbiddenSet, allow_large: bool) -> minorgap_core::Result<EdgeSpectrum> {
        let key = QueryKey::new(n, f);
        if let Some(hit) = self.cache.as_ref().and_then(|c| c.get(&key)) {
            // the caller's labeling of the forbidden set is what gets reported
            return Ok(EdgeSpectrum { forbidden: f.clone(), ..hit });
        }
        let s = edge_spectrum_with(n, f, &EnumOptions { allow_large, ..EnumOptions::default() })?;
        if let Some(c) = &self.cache {
            if let Err(e) = c.put(&key, &s) {
                eprintln!("warning: cache write failed: {e}");
            }
        }
        Ok(s)
    }
}

fn json_text<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn set_text(values: &[usize]) -> String {
    let items: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn spectrum_cmd(ctx: &Ctx, n: usize, forbid: &Forbid) -> Outcome {
    let f = ctx.forbidden(&forbid.specs)?;
    let s = ctx.spectrum(n, &f, forbid.allow_large)?;
    Ok(match ctx.format {
        Format::Text => format!("E = {}, gap = {}\n", set_text(&s.spectrum), s.gap),
        Format::Tsv => {
            let mut out = String::from("n\tedges\twitness\n");
            for (e, w) in &s.witnesses {
                writeln!(out, "{n}\t{e}\t{w}").unwrap();
            }
            out
        }
        Format::Json => json_text(&s),
    })
}

fn gap_cmd(ctx: &Ctx, n: Option<usize>, range: Option<(usize, usize)>, witnessed: bool, forbid: &Forbid) -> Outcome {
    let f = ctx.forbidden(&forbid.specs)?;
    let (lo, hi) = match (n, range) {
        (Some(n), _) => (n, n),
        (None, Some((a, b))) if a <= b => (a, b),
        (None, Some((a, b))) => return Err(Failure::Usage(format!("empty range {a}..{b}"))),
        (None, None) => return Err(Failure::Usage("give -n or --from/--to".into())),
    };
    let seq = if witnessed {
        gap_sequence(&f, lo..=hi, GapMode::Witnessed)?
    } else {
        let rows = (lo..=hi)
            .map(|n| {
                let s = ctx.spectrum(n, &f, forbid.allow_large)?;
                Ok(GapRow { n, m_minus: s.m_minus, m_plus: s.m_plus, gap: s.gap, exact: true })
            })
            .collect::<minorgap_core::Result<Vec<_>>>()?;
        GapSequence::from_rows(f, rows)
    };
    Ok(match ctx.format {
        Format::Text if n.is_some() => match seq.rows.first() {
            Some(r) if r.exact => format!("gap = {}\n", r.gap),
            Some(r) => format!("gap >= {} (M- <= {}, M+ >= {})\n", r.gap, r.m_minus, r.m_plus),
            None => "no certified witnesses\n".to_string(),
        },
        Format::Text | Format::Tsv => seq.to_tsv(),
        Format::Json => json_text(&seq),
    })
}

fn enumerate_cmd(ctx: &Ctx, n: usize, maximal: bool, forbid: &Forbid) -> Outcome {
    let f = ctx.forbidden(&forbid.specs)?;
    let all = enumerate_free_with(n, &f, &EnumOptions { allow_large: forbid.allow_large, ..EnumOptions::default() })?;
    let rows: Vec<(String, usize, bool)> = all
        .iter()
        .map(|g| (graph6::encode(g), g.edge_count(), is_edge_maximal_free(g, &f) == MaximalityVerdict::Maximal))
        .filter(|r| !maximal || r.2)
        .collect();
    Ok(match ctx.format {
        Format::Text => rows.iter().map(|r| format!("{}\n", r.0)).collect(),
        Format::Tsv => {
            let mut out = String::from("graph6\tedges\tmaximal\n");
            for (g, e, m) in &rows {
                writeln!(out, "{g}\t{e}\t{m}").unwrap();
            }
            out
        }
        Format::Json => {
            let items: Vec<_> = rows.iter().map(|(g, e, m)| json!({"graph6": g, "edges": e, "maximal": m})).collect();
            json_text(&items)
        }
    })
}

fn parse_params(text: &str) -> Result<BTreeMap<String, String>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| match p.split_once('=') {
            Some((k, v)) => Ok((k.trim().to_string(), v.trim().to_string())),
            None => Err(Failure::Usage(format!("parameter '{p}' is not key=value"))),
        })
        .collect()
}

fn write_certificate(path: &PathBuf, c: &Certificate) -> Result<(), Failure> {
    std::fs::write(path, json_text(c)).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn construct_cmd(
    ctx: &Ctx,
    family: &str,
    params: &str,
    specs: &[String],
    force: bool,
    out: Option<&PathBuf>,
) -> Outcome {
    let recipe = ConstructionRecipe::from_params(family, &parse_params(params)?)?;
    let (g, predicted) = build_family(&recipe)?;
    let code = graph6::encode(&g);
    let cert = if specs.is_empty() {
        None
    } else {
        let f = ctx.forbidden(specs)?;
        let c = certify_with(&g, &f, predicted, &CertifyOptions { force })?;
        if let Some(path) = out {
            write_certificate(path, &c)?;
        }
        Some(c)
    };
    Ok(match ctx.format {
        Format::Text => {
            let mut s = format!("{recipe}\nvertices = {}, edges = {predicted}\n{code}\n", g.n());
            if let Some(c) = &cert {
                writeln!(s, "certified: free, {} non-edges each create a minor", c.maximality.len()).unwrap();
            }
            s
        }
        Format::Tsv => format!(
            "family\tvertices\tedges\tgraph6\tcertified\n{}\t{}\t{predicted}\t{code}\t{}\n",
            recipe.name(),
            g.n(),
            cert.is_some()
        ),
        Format::Json => json_text(&json!({
            "recipe": recipe,
            "vertices": g.n(),
            "edges": predicted,
            "graph6": code,
            "certificate": cert,
        })),
    })
}

struct CertifyArgs<'a> {
    graph: Option<&'a str>,
    specs: &'a [String],
    predicted: Option<usize>,
    force: bool,
    out: Option<&'a PathBuf>,
    check: Option<&'a PathBuf>,
}

fn certify_cmd(ctx: &Ctx, a: CertifyArgs) -> Outcome {
    if let Some(path) = a.check {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        let c: Certificate =
            serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("bad certificate: {e}")))?;
        if !verify_certificate(&c) {
            return Err(Failure::Verification("certificate does not verify".into()));
        }
        return Ok(match ctx.format {
            Format::Json => json_text(&json!({"verified": true})),
            _ => "certificate verified\n".to_string(),
        });
    }
    let (Some(spec), Some(predicted)) = (a.graph, a.predicted) else {
        return Err(Failure::Usage("certify needs --graph, --forbid and --predicted".into()));
    };
    let g = ctx.graph(spec)?;
    let f = ctx.forbidden(a.specs)?;
    let c = certify_with(&g, &f, predicted, &CertifyOptions { force: a.force })?;
    if let Some(path) = a.out {
        write_certificate(path, &c)?;
    }
    Ok(match ctx.format {
        Format::Json => json_text(&c),
        Format::Tsv => {
            format!("vertices\tedges\tnon_edges\n{}\t{}\t{}\n", g.n(), c.checked_edge_count, c.maximality.len())
        }
        Format::Text => format!(
            "certified: free, edge-maximal with {} edges ({} non-edges checked)\n",
            c.checked_edge_count,
            c.maximality.len()
        ),
    })
}

fn classify_cmd(ctx: &Ctx, spec: &str) -> Outcome {
    let v = classify_connected(&ctx.graph(spec)?)?;
    Ok(match ctx.format {
        Format::Json => json_text(&v),
        Format::Tsv => format!(
            "verdict\tlimp_lower_bound\tknown_gap\tbasis\n{}\t{}\t{}\t{}\n",
            v.verdict,
            v.limp_lower_bound.map_or(String::new(), |b| b.to_string()),
            v.known_gap.map_or(String::new(), |g| g.to_string()),
            v.basis
        ),
        Format::Text => format!("{v}\n"),
    })
}

fn minor_cmd(ctx: &Ctx, g: &str, h: &str) -> Outcome {
    let (g, h) = (ctx.graph(g)?, ctx.graph(h)?);
    let model = find_minor_model(&g, &h);
    Ok(match ctx.format {
        Format::Json => json_text(&json!({"found": model.is_some(), "witness": model.map(|m| m.witness(&g, &h))})),
        Format::Tsv => format!(
            "found\tbranch_sets\n{}\t{}\n",
            model.is_some(),
            model.map_or(String::new(), |m| format!("{:?}", m.branch_sets))
        ),
        Format::Text => match model {
            Some(m) => format!("minor found: branch sets {:?}\n", m.branch_sets),
            None => "no minor\n".to_string(),
        },
    })
}

fn verify_cmd(ctx: &Ctx, stretch: bool) -> Outcome {
    let stretch = stretch || std::env::var("MINORGAP_STRETCH").is_ok_and(|v| v == "1");
    let outcomes = golden::run(stretch, &|s| ctx.registry.resolve(s), &|n, f| ctx.spectrum(n, f, false));
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let report = match ctx.format {
        Format::Json => json_text(&json!({
            "passed": failed == 0,
            "checks": outcomes.iter().map(|o| json!({"name": o.name, "passed": o.passed, "detail": o.detail})).collect::<Vec<_>>(),
        })),
        _ => {
            let mut s: String = outcomes.iter().map(|o| o.line() + "\n").collect();
            writeln!(s, "{} of {} checks passed", outcomes.len() - failed, outcomes.len()).unwrap();
            s
        }
    };
    if failed > 0 {
        print!("{report}");
        return Err(Failure::Verification(format!("{failed} checks failed")));
    }
    Ok(report)
}

fn run(cli: Cli) -> Outcome {
    let registry =
        Registry::load().map_err(|e| Failure::Verification(format!("graph registry is inconsistent: {e}")))?;
    let ctx = Ctx { registry, cache: Cache::from_env(), format: cli.format };
    match &cli.command {
        Command::Spectrum { n, forbid } => spectrum_cmd(&ctx, *n, forbid),
        Command::Gap { n, from, to, witnessed, forbid } => gap_cmd(&ctx, *n, from.zip(*to), *witnessed, forbid),
        Command::Enumerate { n, maximal, forbid } => enumerate_cmd(&ctx, *n, *maximal, forbid),
        Command::Construct { family, params, certify, force, out } => {
            construct_cmd(&ctx, family, params, certify, *force, out.as_ref())
        }
        Command::Certify { graph, specs, predicted, force, out, check } => certify_cmd(
            &ctx,
            CertifyArgs {
                graph: graph.as_deref(),
                specs,
                predicted: *predicted,
                force: *force,
                out: out.as_ref(),
                check: check.as_ref(),
            },
        ),
        Command::Classify { minor } => classify_cmd(&ctx, minor),
        Command::VerifyGolden { stretch } => verify_cmd(&ctx, *stretch),
        Command::Minor { graph, minor, .. } => minor_cmd(&ctx, graph, minor),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(report.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}
