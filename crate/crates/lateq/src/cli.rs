//! Command implementations behind the `lateq` binary.
//!
//! Exit codes follow one contract across commands: `0` means the check holds
//! (or the requested object was produced), `1` means a definite negative
//! outcome (property fails, hypotheses fail, search missed), `2` means the
//! inputs could not be parsed or validated. Reports are printed in a
//! human-readable text form or as JSON (`--format structured`); both are
//! deterministic byte for byte for fixed inputs and seeds.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::builtins;
use crate::crossing::CrossingProperty;
use crate::game::{GameError, Polarity, SelectionPolicy, TheoremId};
use crate::interchange::{
    self, builtin_workspace, CertificateDoc, CertificateWitness, Workspace, WorkspaceDoc,
};
use crate::lattice::{is_quasisublattice, Verdict};
use crate::optima::FixpointSide;
use crate::properties::{verify_implication, ImplicationOutcome, PropertyId, ALL_PROPERTIES};
use crate::search::{
    find_separating_function, find_separating_game, FunctionSearchOutcome, FunctionSearchSpec,
    GamePredicate, GameSearchOutcome, GameSearchSpec, SearchMode,
};
use crate::DEFAULT_BUDGET;

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Structured,
}

/// Budget resolution order: flag, then `LATEQ_BUDGET`, then the default.
pub fn resolve_budget(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("LATEQ_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_BUDGET)
}

/// Loads the workspace named by `--input`, or the built-in registry when no
/// input file is given.
fn load_workspace(input: Option<&Path>, grid: Option<usize>) -> Result<Workspace, String> {
    match input {
        Some(path) => Workspace::load(path).map_err(|e| e.to_string()),
        None => Workspace::from_doc(&builtin_workspace(grid)).map_err(|e| e.to_string()),
    }
}

fn fail(err: impl std::fmt::Display) -> i32 {
    eprintln!("error: {err}");
    EXIT_ERROR
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Workspace or certificate file; defaults to the built-in registry.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Name of the function, two-variable function, or subset to check.
    #[arg(long)]
    pub object: Option<String>,
    /// Property id: a unary property (e.g. MEET_SUPEREXT), a crossing
    /// property (e.g. SINGLE_CROSSING), or QUASISUBLATTICE for subsets.
    #[arg(long)]
    pub property: Option<String>,
    /// On failure, write a machine-re-checkable witness certificate here.
    #[arg(long)]
    pub certificate: Option<PathBuf>,
    /// Grid subdivisions for built-in grid instances.
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

enum CheckKind {
    Unary(PropertyId),
    Crossing(CrossingProperty),
    Quasisublattice,
}

fn parse_property(s: &str) -> Result<CheckKind, String> {
    if let Ok(p) = PropertyId::from_str(s) {
        return Ok(CheckKind::Unary(p));
    }
    if let Ok(p) = CrossingProperty::from_str(s) {
        return Ok(CheckKind::Crossing(p));
    }
    if s == "QUASISUBLATTICE" {
        return Ok(CheckKind::Quasisublattice);
    }
    Err(format!(
        "unknown property {s:?}; expected a unary property, a crossing property, or QUASISUBLATTICE"
    ))
}

pub fn cmd_check(args: &CheckArgs, out: &mut dyn Write) -> i32 {
    let ws = match load_workspace(args.input.as_deref(), args.grid) {
        Ok(ws) => ws,
        Err(e) => return fail(e),
    };
    // certificate re-check mode: the input names its own object, property,
    // and witness
    if let Some(cert) = ws.certificate.clone() {
        if args.object.is_none() && args.property.is_none() {
            return recheck_certificate(&ws, &cert, args.format, out);
        }
    }
    let (Some(object), Some(property)) = (args.object.as_ref(), args.property.as_ref()) else {
        return fail("check needs --object and --property (or a certificate file as --input)");
    };
    let kind = match parse_property(property) {
        Ok(k) => k,
        Err(e) => return fail(e),
    };
    let (verdict, cert): (Verdict, Option<CertificateDoc>) = match kind {
        CheckKind::Unary(p) => {
            let Some(f) = ws.functions.get(object) else {
                return fail(format!(
                    "no function named {object:?} (unary properties apply to functions)"
                ));
            };
            let v = f.check(p);
            let cert = v.witness.as_ref().map(|w| CertificateDoc {
                kind: "unary".to_string(),
                object: object.clone(),
                property: p.name().to_string(),
                witness: CertificateWitness {
                    x: w.x.clone(),
                    y: w.y.clone(),
                    t: None,
                    t_hi: None,
                    clause: w.clause.clone(),
                },
            });
            (v, cert)
        }
        CheckKind::Crossing(p) => {
            let Some(f) = ws.twovars.get(object) else {
                return fail(format!(
                    "no two-variable function named {object:?} (crossing properties apply to them)"
                ));
            };
            let v = f.check(p);
            let verdict = Verdict {
                holds: v.holds,
                witness: v.witness.as_ref().map(|w| crate::lattice::Witness {
                    x: format!("{} < {}", w.x, w.x_hi),
                    y: format!("{} < {}", w.t, w.t_hi),
                    clause: w.clause.clone(),
                }),
            };
            let cert = v.witness.as_ref().map(|w| CertificateDoc {
                kind: "crossing".to_string(),
                object: object.clone(),
                property: p.name().to_string(),
                witness: CertificateWitness {
                    x: w.x.clone(),
                    y: w.x_hi.clone(),
                    t: Some(w.t.clone()),
                    t_hi: Some(w.t_hi.clone()),
                    clause: w.clause.clone(),
                },
            });
            (verdict, cert)
        }
        CheckKind::Quasisublattice => {
            let Some(s) = ws.subsets.get(object) else {
                return fail(format!(
                    "no subset named {object:?} (QUASISUBLATTICE applies to subsets)"
                ));
            };
            let v = is_quasisublattice(s);
            let cert = v.witness.as_ref().map(|w| CertificateDoc {
                kind: "subset".to_string(),
                object: object.clone(),
                property: "QUASISUBLATTICE".to_string(),
                witness: CertificateWitness {
                    x: w.x.clone(),
                    y: w.y.clone(),
                    t: None,
                    t_hi: None,
                    clause: w.clause.clone(),
                },
            });
            (v, cert)
        }
    };
    let annotations = ws.annotations.get(object).cloned().unwrap_or_default();
    let mut certificate_path = None;
    if let (Some(path), Some(cert)) = (args.certificate.as_ref(), cert) {
        match write_certificate(&ws, path, &cert) {
            Ok(()) => certificate_path = Some(path.display().to_string()),
            Err(e) => return fail(e),
        }
    }
    match args.format {
        OutputFormat::Text => {
            let _ = writeln!(out, "check {object} {property}: {verdict}");
            for a in &annotations {
                let _ = writeln!(out, "note: {a}");
            }
            if let Some(p) = &certificate_path {
                let _ = writeln!(out, "witness certificate written to {p}");
            }
        }
        OutputFormat::Structured => {
            let doc = json!({
                "object": object,
                "property": property,
                "holds": verdict.holds,
                "witness": verdict.witness,
                "annotations": annotations,
                "certificate": certificate_path,
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    if verdict.holds {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}

/// Embeds the checked object (and its order data) next to the certificate so
/// the file re-checks without external references.
fn write_certificate(
    ws: &Workspace,
    path: &Path,
    cert: &CertificateDoc,
) -> Result<(), String> {
    let mut doc = WorkspaceDoc {
        certificate: Some(cert.clone()),
        ..WorkspaceDoc::default()
    };
    match cert.kind.as_str() {
        "unary" => {
            let f = &ws.functions[&cert.object];
            doc.lattices.insert(
                "lattice".to_string(),
                interchange::lattice_to_doc(f.domain()),
            );
            doc.functions.insert(
                cert.object.clone(),
                interchange::function_to_doc(f, "lattice"),
            );
        }
        "crossing" => {
            let f = &ws.twovars[&cert.object];
            doc.lattices
                .insert("xlattice".to_string(), interchange::lattice_to_doc(f.xdomain()));
            doc.posets
                .insert("tposet".to_string(), interchange::poset_to_doc(f.tdomain()));
            doc.twovar.insert(
                cert.object.clone(),
                interchange::twovar_to_doc(f, "xlattice", "tposet"),
            );
        }
        "subset" => {
            let s = &ws.subsets[&cert.object];
            doc.lattices.insert(
                "lattice".to_string(),
                interchange::lattice_to_doc(s.carrier()),
            );
            doc.subsets.insert(
                cert.object.clone(),
                interchange::SubsetDoc {
                    lattice: "lattice".to_string(),
                    members: s.ids(),
                },
            );
        }
        other => return Err(format!("unknown certificate kind {other:?}")),
    }
    let text = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?;
    std::fs::write(path, text + "\n").map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn recheck_certificate(
    ws: &Workspace,
    cert: &CertificateDoc,
    format: OutputFormat,
    out: &mut dyn Write,
) -> i32 {
    let confirmed = match cert.kind.as_str() {
        "unary" => {
            let Some(f) = ws.functions.get(&cert.object) else {
                return fail(format!("certificate object {:?} not in file", cert.object));
            };
            let Ok(p) = PropertyId::from_str(&cert.property) else {
                return fail(format!("unknown unary property {:?}", cert.property));
            };
            let (Some(x), Some(y)) = (
                f.domain().index_of(&cert.witness.x),
                f.domain().index_of(&cert.witness.y),
            ) else {
                return fail("certificate witness names unknown elements");
            };
            f.check_pair(p, x, y) == Some(cert.witness.clause.as_str())
        }
        "crossing" => {
            let Some(f) = ws.twovars.get(&cert.object) else {
                return fail(format!("certificate object {:?} not in file", cert.object));
            };
            let Ok(p) = CrossingProperty::from_str(&cert.property) else {
                return fail(format!("unknown crossing property {:?}", cert.property));
            };
            let (Some(t), Some(t_hi)) = (cert.witness.t.as_ref(), cert.witness.t_hi.as_ref())
            else {
                return fail("crossing certificate needs t and t_hi");
            };
            let (Some(x), Some(xp), Some(ti), Some(tpi)) = (
                f.xdomain().index_of(&cert.witness.x),
                f.xdomain().index_of(&cert.witness.y),
                f.tdomain().index_of(t),
                f.tdomain().index_of(t_hi),
            ) else {
                return fail("certificate witness names unknown elements");
            };
            matches!(f.violated_quad(p, x, xp, ti, tpi), Some((clause, _)) if clause == cert.witness.clause)
        }
        "subset" => {
            let Some(s) = ws.subsets.get(&cert.object) else {
                return fail(format!("certificate object {:?} not in file", cert.object));
            };
            let lat = s.carrier().clone();
            let (Some(x), Some(y)) = (
                lat.index_of(&cert.witness.x),
                lat.index_of(&cert.witness.y),
            ) else {
                return fail("certificate witness names unknown elements");
            };
            s.contains(x)
                && s.contains(y)
                && !s.contains(lat.meet(x, y))
                && !s.contains(lat.join(x, y))
        }
        other => return fail(format!("unknown certificate kind {other:?}")),
    };
    match format {
        OutputFormat::Text => {
            let _ = writeln!(
                out,
                "certificate {} {} at ({}, {}): {}",
                cert.object,
                cert.property,
                cert.witness.x,
                cert.witness.y,
                if confirmed { "confirmed" } else { "REFUTED" }
            );
        }
        OutputFormat::Structured => {
            let doc = json!({
                "object": cert.object,
                "property": cert.property,
                "witness": cert.witness,
                "confirmed": confirmed,
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    if confirmed {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Game name (workspace or built-in).
    #[arg(long)]
    pub object: String,
    #[arg(long, default_value = "least")]
    pub direction: String,
    #[arg(long, default_value = "extremal")]
    pub policy: String,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

fn find_game(
    ws: &Workspace,
    name: &str,
    grid: Option<usize>,
) -> Result<(crate::game::NormalFormGame, Vec<String>), String> {
    if let Some(g) = ws.games.get(name) {
        let notes = ws.annotations.get(name).cloned().unwrap_or_default();
        return Ok((g.clone(), notes));
    }
    if let Some(inst) = builtins::builtin_game(name, grid) {
        return Ok((inst.game, inst.annotations));
    }
    Err(format!("no game named {name:?}"))
}

pub fn cmd_solve(args: &SolveArgs, out: &mut dyn Write) -> i32 {
    let ws = match load_workspace(args.input.as_deref(), args.grid) {
        Ok(ws) => ws,
        Err(e) => return fail(e),
    };
    let (game, annotations) = match find_game(&ws, &args.object, args.grid) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    let side = match FixpointSide::from_str(&args.direction) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let policy = match SelectionPolicy::from_str(&args.policy) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let budget = resolve_budget(args.budget);
    let outcome = match game.solve_fixed_point(side, policy) {
        Ok(o) => o,
        Err(e @ GameError::Budget(_)) => return fail(e),
        Err(e) => {
            eprintln!("solve failed: {e}");
            return EXIT_FAILS;
        }
    };
    let report = match game.analyze_equilibria(budget) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    match args.format {
        OutputFormat::Text => {
            let _ = writeln!(
                out,
                "solve {} ({} fixed point, {} selection): {} after {} iterations{}",
                args.object,
                args.direction,
                args.policy,
                outcome.profile,
                outcome.iterations,
                if outcome.verified_nash {
                    " (verified Nash)"
                } else {
                    ""
                }
            );
            let _ = writeln!(out, "equilibria ({} total): {}", report.count, report.equilibria.join(" "));
            let _ = writeln!(
                out,
                "largest: {}  least: {}",
                report.structure.has_largest.as_deref().unwrap_or("none"),
                report.structure.has_least.as_deref().unwrap_or("none")
            );
            let _ = writeln!(
                out,
                "lattice in induced order: {}  complete: {}",
                report.structure.is_lattice_induced, report.structure.is_complete_lattice_induced
            );
            for a in &annotations {
                let _ = writeln!(out, "note: {a}");
            }
        }
        OutputFormat::Structured => {
            let doc = json!({
                "game": args.object,
                "direction": args.direction,
                "policy": args.policy,
                "solution": outcome,
                "equilibria": report,
                "annotations": annotations,
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    EXIT_HOLDS
}

#[derive(Debug, Args)]
pub struct HypothesesArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub object: String,
    /// EXISTENCE_4.4, LARGEST_4.7, or COMPLETE_4.9.
    #[arg(long)]
    pub theorem: String,
    #[arg(long, default_value = "plain")]
    pub polarity: String,
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

pub fn cmd_hypotheses(args: &HypothesesArgs, out: &mut dyn Write) -> i32 {
    let ws = match load_workspace(args.input.as_deref(), args.grid) {
        Ok(ws) => ws,
        Err(e) => return fail(e),
    };
    let (game, annotations) = match find_game(&ws, &args.object, args.grid) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    let theorem = match TheoremId::from_str(&args.theorem) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    let polarity = match Polarity::from_str(&args.polarity) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let report = game.check_hypotheses(theorem, polarity);
    match args.format {
        OutputFormat::Text => {
            let _ = writeln!(
                out,
                "hypotheses {} ({}) for {}: {}",
                theorem,
                polarity,
                args.object,
                if report.overall { "PASS" } else { "FAIL" }
            );
            for player in &report.players {
                let _ = writeln!(out, "  player {}:", player.player);
                for c in &player.conditions {
                    let mark = if c.holds { "ok  " } else { "FAIL" };
                    let _ = writeln!(out, "    [{}] {} {}", c.id, mark, c.description);
                    if let Some(a) = &c.annotation {
                        let _ = writeln!(out, "          {a}");
                    }
                    if let Some(w) = &c.witness {
                        let _ = writeln!(out, "          witness: {w}");
                    }
                }
            }
            for a in &annotations {
                let _ = writeln!(out, "note: {a}");
            }
        }
        OutputFormat::Structured => {
            let doc = json!({
                "game": args.object,
                "report": report,
                "annotations": annotations,
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    if report.overall {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}

#[derive(Debug, Args)]
pub struct AtlasArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Domain lattice name.
    #[arg(long, default_value = "diamond")]
    pub object: String,
    /// Codomain size (chain {0..k-1}).
    #[arg(long, default_value_t = 3)]
    pub codomain: u32,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Serialize)]
struct AtlasEntry {
    premise: String,
    conclusion: String,
    outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<BTreeMap<String, i64>>,
}

/// Checks every ordered pair of unary properties by exhaustive enumeration
/// over the function space, reporting each implication as confirmed or
/// refuted with the first counterexample.
pub fn cmd_atlas(args: &AtlasArgs, out: &mut dyn Write) -> i32 {
    let ws = match load_workspace(args.input.as_deref(), None) {
        Ok(ws) => ws,
        Err(e) => return fail(e),
    };
    let domain = match ws.lattice(&args.object) {
        Ok(l) => l,
        Err(e) => return fail(e),
    };
    let budget = resolve_budget(args.budget);
    let mut entries = Vec::new();
    let mut confirmed = 0usize;
    for &p in &ALL_PROPERTIES {
        for &q in &ALL_PROPERTIES {
            if p == q {
                continue;
            }
            let outcome = match verify_implication(&[p], &[q], &domain, args.codomain, budget, args.jobs) {
                Ok(o) => o,
                Err(e) => return fail(e),
            };
            match outcome {
                ImplicationOutcome::Confirmed { .. } => {
                    confirmed += 1;
                    entries.push(AtlasEntry {
                        premise: p.name().to_string(),
                        conclusion: q.name().to_string(),
                        outcome: "confirmed".to_string(),
                        counterexample: None,
                    });
                }
                ImplicationOutcome::Counterexample { function, .. } => {
                    let values: BTreeMap<String, i64> = function
                        .domain()
                        .ids()
                        .iter()
                        .enumerate()
                        .map(|(i, id)| (id.clone(), function.value(i)))
                        .collect();
                    entries.push(AtlasEntry {
                        premise: p.name().to_string(),
                        conclusion: q.name().to_string(),
                        outcome: "counterexample".to_string(),
                        counterexample: Some(values),
                    });
                }
            }
        }
    }
    match args.format {
        OutputFormat::Text => {
            let total = (args.codomain as u64).pow(domain.len() as u32);
            let _ = writeln!(
                out,
                "implication atlas on {} with codomain {{0..{}}} ({} functions per pair; {} of {} implications hold)",
                args.object,
                args.codomain - 1,
                total,
                confirmed,
                entries.len()
            );
            for e in &entries {
                match &e.counterexample {
                    None => {
                        let _ = writeln!(out, "{} => {}: confirmed", e.premise, e.conclusion);
                    }
                    Some(values) => {
                        let rendered: Vec<String> =
                            values.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        let _ = writeln!(
                            out,
                            "{} => {}: counterexample {{{}}}",
                            e.premise,
                            e.conclusion,
                            rendered.join(", ")
                        );
                    }
                }
            }
        }
        OutputFormat::Structured => {
            let doc = json!({
                "domain": args.object,
                "codomain": args.codomain,
                "implications": entries,
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    EXIT_HOLDS
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Search specification file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

/// Search document: optional embedded order data plus a `search` block
/// mirroring the search-spec fields.
#[derive(Debug, serde::Deserialize)]
struct SearchDoc {
    #[serde(flatten)]
    workspace: WorkspaceDoc,
    search: SearchBody,
}

#[derive(Debug, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum SearchBody {
    Function {
        lattice: String,
        codomain: u32,
        #[serde(default)]
        satisfy: Vec<String>,
        #[serde(default)]
        violate: Vec<String>,
        #[serde(default)]
        budget: Option<u64>,
        #[serde(default)]
        seed: Option<u64>,
    },
    Game {
        strategies: Vec<String>,
        payoff_levels: i64,
        #[serde(default)]
        satisfy: Vec<String>,
        #[serde(default)]
        violate: Vec<String>,
        #[serde(default)]
        budget: Option<u64>,
        #[serde(default)]
        seed: Option<u64>,
    },
}

fn parse_list<T: FromStr>(items: &[String], what: &str) -> Result<Vec<T>, String>
where
    T::Err: std::fmt::Display,
{
    items
        .iter()
        .map(|s| s.parse::<T>().map_err(|e| format!("{what}: {e}")))
        .collect()
}

pub fn cmd_search(args: &SearchArgs, out: &mut dyn Write) -> i32 {
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => return fail(format!("cannot read {}: {e}", args.input.display())),
    };
    let doc: SearchDoc = match serde_json::from_str(&text) {
        Ok(d) => d,
        Err(e) => return fail(format!("invalid search document: {e}")),
    };
    let ws = match Workspace::from_doc(&doc.workspace) {
        Ok(ws) => ws,
        Err(e) => return fail(e),
    };
    match doc.search {
        SearchBody::Function {
            lattice,
            codomain,
            satisfy,
            violate,
            budget,
            seed,
        } => {
            let domain = match ws.lattice(&lattice) {
                Ok(l) => l,
                Err(e) => return fail(e),
            };
            let satisfy = match parse_list::<PropertyId>(&satisfy, "satisfy") {
                Ok(v) => v,
                Err(e) => return fail(e),
            };
            let violate = match parse_list::<PropertyId>(&violate, "violate") {
                Ok(v) => v,
                Err(e) => return fail(e),
            };
            let spec = FunctionSearchSpec {
                domain,
                codomain_size: codomain,
                satisfy,
                violate,
                budget: args.budget.or(budget).unwrap_or_else(|| resolve_budget(None)),
                seed: args.seed.or(seed).unwrap_or(0),
            };
            match find_separating_function(&spec) {
                FunctionSearchOutcome::Found {
                    function,
                    mode,
                    draws,
                } => {
                    let fdoc = interchange::function_to_doc(&function, &lattice);
                    match args.format {
                        OutputFormat::Text => {
                            let rendered: Vec<String> = fdoc
                                .values
                                .iter()
                                .map(|(k, v)| format!("{k}={v}"))
                                .collect();
                            let _ = writeln!(
                                out,
                                "found after {draws} candidates ({mode:?} mode): {{{}}}",
                                rendered.join(", ")
                            );
                        }
                        OutputFormat::Structured => {
                            let doc = json!({
                                "outcome": "found",
                                "mode": mode,
                                "draws": draws,
                                "function": fdoc,
                            });
                            let _ =
                                writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
                        }
                    }
                    EXIT_HOLDS
                }
                FunctionSearchOutcome::NotFound {
                    exhausted,
                    mode,
                    draws,
                } => {
                    report_miss(args.format, exhausted, mode, draws, out);
                    EXIT_FAILS
                }
            }
        }
        SearchBody::Game {
            strategies,
            payoff_levels,
            satisfy,
            violate,
            budget,
            seed,
        } => {
            let mut lattices = Vec::with_capacity(strategies.len());
            for name in &strategies {
                match ws.lattice(name) {
                    Ok(l) => lattices.push(l),
                    Err(e) => return fail(e),
                }
            }
            let satisfy = match parse_list::<GamePredicate>(&satisfy, "satisfy") {
                Ok(v) => v,
                Err(e) => return fail(e),
            };
            let violate = match parse_list::<GamePredicate>(&violate, "violate") {
                Ok(v) => v,
                Err(e) => return fail(e),
            };
            let spec = GameSearchSpec {
                strategies: lattices,
                payoff_levels,
                satisfy,
                violate,
                budget: args.budget.or(budget).unwrap_or_else(|| resolve_budget(None)),
                seed: args.seed.or(seed).unwrap_or(0),
            };
            match find_separating_game(&spec) {
                Ok(GameSearchOutcome::Found { game, mode, draws }) => {
                    let gdoc = interchange::game_to_doc(&game, &strategies);
                    match args.format {
                        OutputFormat::Text => {
                            let _ = writeln!(out, "found after {draws} candidates ({mode:?} mode)");
                            let _ = writeln!(
                                out,
                                "{}",
                                serde_json::to_string_pretty(&gdoc).unwrap()
                            );
                        }
                        OutputFormat::Structured => {
                            let doc = json!({
                                "outcome": "found",
                                "mode": mode,
                                "draws": draws,
                                "game": gdoc,
                            });
                            let _ =
                                writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
                        }
                    }
                    EXIT_HOLDS
                }
                Ok(GameSearchOutcome::NotFound {
                    exhausted,
                    mode,
                    draws,
                }) => {
                    report_miss(args.format, exhausted, mode, draws, out);
                    EXIT_FAILS
                }
                Err(e) => fail(e),
            }
        }
    }
}

fn report_miss(
    format: OutputFormat,
    exhausted: bool,
    mode: SearchMode,
    draws: u64,
    out: &mut dyn Write,
) {
    match format {
        OutputFormat::Text => {
            let claim = if exhausted {
                "no such object exists at this size (space exhausted)"
            } else {
                "not found within budget (sampled; existence undecided)"
            };
            let _ = writeln!(out, "{claim}; {draws} candidates checked ({mode:?} mode)");
        }
        OutputFormat::Structured => {
            let doc = json!({
                "outcome": "not_found",
                "exhausted": exhausted,
                "mode": mode,
                "draws": draws,
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
}

#[derive(Debug, Args)]
pub struct BuiltinArgs {
    /// Instance to emit (or `all`); omit to list everything.
    #[arg(long)]
    pub object: Option<String>,
    /// Grid subdivisions for the grid families.
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

pub fn cmd_builtin(args: &BuiltinArgs, out: &mut dyn Write) -> i32 {
    let Some(object) = args.object.as_ref() else {
        let _ = writeln!(out, "functions: {}", builtins::builtin_function_names().join(" "));
        let _ = writeln!(out, "twovar: {}", builtins::builtin_twovar_names().join(" "));
        let _ = writeln!(out, "games: {}", builtins::builtin_game_names().join(" "));
        let _ = writeln!(
            out,
            "lattices (catalog): {}",
            crate::catalog::named_lattice_names().join(", ")
        );
        return EXIT_HOLDS;
    };
    let full = builtin_workspace(args.grid);
    let doc = if object == "all" {
        full
    } else {
        // carve out one object with its order data
        let mut doc = WorkspaceDoc::default();
        if let Some(f) = full.functions.get(object) {
            doc.lattices
                .insert(f.lattice.clone(), full.lattices[&f.lattice].clone());
            doc.functions.insert(object.clone(), f.clone());
        } else if let Some(t) = full.twovar.get(object) {
            doc.lattices
                .insert(t.xlattice.clone(), full.lattices[&t.xlattice].clone());
            doc.posets
                .insert(t.tposet.clone(), full.posets[&t.tposet].clone());
            doc.twovar.insert(object.clone(), t.clone());
        } else if let Some(inst) = builtins::builtin_game(object, args.grid) {
            let strategy_names: Vec<String> = (0..inst.game.players().len())
                .map(|i| {
                    let name = format!("{}_s{}", inst.name, i + 1);
                    doc.lattices.insert(
                        name.clone(),
                        interchange::lattice_to_doc(inst.game.strategy_lattice(i)),
                    );
                    name
                })
                .collect();
            doc.games.insert(
                inst.name.clone(),
                interchange::game_to_doc(&inst.game, &strategy_names),
            );
            if !inst.annotations.is_empty() {
                doc.annotations.insert(inst.name.clone(), inst.annotations.clone());
            }
        } else if let Some(l) = crate::catalog::by_name(object) {
            doc.lattices
                .insert(object.clone(), interchange::lattice_to_doc(&l));
        } else {
            return fail(format!("no built-in object named {object:?}"));
        }
        if let Some(notes) = full.annotations.get(object) {
            doc.annotations.insert(object.clone(), notes.clone());
        }
        doc
    };
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
    EXIT_HOLDS
}
