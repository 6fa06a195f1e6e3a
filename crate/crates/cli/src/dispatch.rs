//! Command dispatch: argument parsing, file loading, report rendering,
//! and the exit-status contract.
//!
//! Exit codes: `0` — every requested check passed; `1` — a checked
//! property failed (the first witness is printed); `2` — structural
//! trouble (unreadable/malformed files, bad arguments, exceeded bounds).

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Arg, ArgAction, Command};

use mla_core::algebra::{ElemSet, FiniteMla};
use mla_core::enumeration::{self, StarConstraint, DEFAULT_ENUMERATION_BOUND};
use mla_core::extensions::{self, RelativeExtension};
use mla_core::isoclinism;
use mla_core::structure::{self, Outcome};

use crate::format;

const PASS: i32 = 0;
const FAIL: i32 = 1;
const ERR: i32 = 2;

/// Exit code plus the full textual report.
type Out = (i32, String);

/// Default cap for subalgebra-lattice walks (report, subalgebras).
const DEFAULT_LATTICE_BOUND: usize = 24;

fn command() -> Command {
    let file = |name: &'static str| Arg::new(name).value_name("FILE").required(true);
    Command::new("mla")
        .about("Finite multiplicative Lie algebras: verification, structure, extensions, isoclinism")
        .subcommand_required(true)
        .arg_required_else_help(true)
        .subcommand(
            Command::new("check")
                .about("Verify the group laws and star identities of an algebra file")
                .arg(file("file")),
        )
        .subcommand(
            Command::new("report")
                .about("Centers, commutators, central series, Frattini subalgebra, theorem suite")
                .arg(file("file")),
        )
        .subcommand(
            Command::new("subalgebras")
                .about("List every subalgebra, marking ideals")
                .arg(file("file")),
        )
        .subcommand(
            Command::new("enumerate")
                .about("Enumerate star structures on the group table of an algebra file")
                .arg(
                    Arg::new("group")
                        .long("group")
                        .value_name("FILE")
                        .required(true)
                        .help("Algebra file; its star block is ignored"),
                )
                .arg(
                    Arg::new("constraint")
                        .long("constraint")
                        .value_name("I,J,K")
                        .action(ArgAction::Append)
                        .help("Pin star(I, J) = K; repeatable"),
                ),
        )
        .subcommand(
            Command::new("ext-check")
                .about("Verify a relative central extension file")
                .arg(file("file")),
        )
        .subcommand(
            Command::new("ext-invariants")
                .about("Extension commutator, action center, and kernel placement")
                .arg(file("file")),
        )
        .subcommand(
            Command::new("isoclinic")
                .about("Search for an isoclinism between two extensions and check its consequences")
                .arg(file("first"))
                .arg(file("second")),
        )
        .subcommand(
            Command::new("cover-check")
                .about("Check the covering-pair conditions for an ideal against a multiplier certificate")
                .arg(file("file"))
                .arg(
                    Arg::new("ideal")
                        .long("ideal")
                        .value_name("I,J,...")
                        .required(true)
                        .help("Carrier indices of the candidate ideal"),
                )
                .arg(
                    Arg::new("cert")
                        .long("cert")
                        .value_name("FILE")
                        .required(true)
                        .help("Multiplier certificate: an abelian algebra with trivial star"),
                ),
        )
        .subcommand(
            Command::new("catalog")
                .about("Build the catalog of star structures on the stock groups, up to isomorphism")
                .arg(
                    Arg::new("max-order")
                        .long("max-order")
                        .value_name("N")
                        .default_value("8"),
                )
                .arg(
                    Arg::new("out")
                        .long("out")
                        .value_name("DIR")
                        .help("Also write one canonical .mla file per entry"),
                ),
        )
}

/// Runs one invocation. `args` excludes the program name.
pub fn dispatch(args: &[String]) -> Out {
    let argv = std::iter::once("mla".to_string()).chain(args.iter().cloned());
    let matches = match command().try_get_matches_from(argv) {
        Ok(m) => m,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => PASS,
                _ => ERR,
            };
            return (code, e.render().to_string());
        }
    };
    let arg = |m: &clap::ArgMatches, name: &str| -> String {
        m.get_one::<String>(name).expect("required").clone()
    };
    match matches.subcommand() {
        Some(("check", m)) => cmd_check(&arg(m, "file")),
        Some(("report", m)) => cmd_report(&arg(m, "file")),
        Some(("subalgebras", m)) => cmd_subalgebras(&arg(m, "file")),
        Some(("enumerate", m)) => {
            let pins: Vec<String> = m
                .get_many::<String>("constraint")
                .map(|v| v.cloned().collect())
                .unwrap_or_default();
            cmd_enumerate(&arg(m, "group"), &pins)
        }
        Some(("ext-check", m)) => cmd_ext_check(&arg(m, "file")),
        Some(("ext-invariants", m)) => cmd_ext_invariants(&arg(m, "file")),
        Some(("isoclinic", m)) => cmd_isoclinic(&arg(m, "first"), &arg(m, "second")),
        Some(("cover-check", m)) => {
            cmd_cover_check(&arg(m, "file"), &arg(m, "ideal"), &arg(m, "cert"))
        }
        Some(("catalog", m)) => cmd_catalog(
            &arg(m, "max-order"),
            m.get_one::<String>("out").map(|s| s.as_str()),
        ),
        _ => unreachable!("subcommand_required"),
    }
}

/// `MLA_MAX_ORDER` overrides every order bound the commands use.
fn bound_or(default: usize) -> usize {
    std::env::var("MLA_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}

fn structural(path: &str, message: impl std::fmt::Display) -> Out {
    (ERR, format!("error: {path}: {message}\n"))
}

fn load_mla(path: &str) -> Result<Arc<FiniteMla>, Out> {
    let text = std::fs::read_to_string(path).map_err(|e| structural(path, e))?;
    format::parse_mla(&text)
        .map(Arc::new)
        .map_err(|e| structural(path, e))
}

fn load_rlce(path: &str) -> Result<RelativeExtension, Out> {
    let text = std::fs::read_to_string(path).map_err(|e| structural(path, e))?;
    let dir: PathBuf = Path::new(path).parent().map(PathBuf::from).unwrap_or_default();
    let loader = move |rel: &str| -> Result<String, String> {
        std::fs::read_to_string(dir.join(rel)).map_err(|e| e.to_string())
    };
    format::parse_rlce(&text, &loader).map_err(|e| structural(path, e))
}

/// Parses `i,j,...` into a set over `0..n`.
fn parse_indices(raw: &str, n: usize, what: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for piece in raw.split(',') {
        let v: usize = piece
            .trim()
            .parse()
            .map_err(|_| format!("{what} `{piece}` is not a number"))?;
        if v >= n {
            return Err(format!("{what} {v} is out of range, must be below {n}"));
        }
        out.push(v);
    }
    Ok(out)
}

fn cmd_check(path: &str) -> Out {
    let a = match load_mla(path) {
        Ok(a) => a,
        Err(out) => return out,
    };
    if let Err(v) = a.verify_group() {
        return (FAIL, format!("group law violation: {v}\n"));
    }
    if let Err(v) = a.verify_star_axioms() {
        return (FAIL, format!("star identity violation: {v}\n"));
    }
    (
        PASS,
        format!("ok: {} elements, group and star laws hold\n", a.order()),
    )
}

fn series_line(a: &FiniteMla, terms: &[ElemSet], sep: &str) -> String {
    terms
        .iter()
        .map(|t| a.display_set(t))
        .collect::<Vec<_>>()
        .join(sep)
}

fn cmd_report(path: &str) -> Out {
    let a = match load_mla(path) {
        Ok(a) => a,
        Err(out) => return out,
    };
    let bound = bound_or(DEFAULT_LATTICE_BOUND);
    let report = match structure::structure_report(&a, bound) {
        Ok(r) => r,
        Err(e) => return structural(path, e),
    };
    let frat = structure::frattini(&a, bound).expect("bound already admitted the lattice");
    let cents = structure::centers(&a);
    let derived = structure::pair_commutator(&a, &ElemSet::full(a.order()))
        .expect("the whole carrier is an ideal");

    let mut out = String::new();
    out.push_str(&format!("order: {}\n", a.order()));
    out.push_str(&format!("abelian: {}\n", yes(a.is_abelian())));
    out.push_str(&format!("group center: {}\n", a.display_set(&cents.group)));
    out.push_str(&format!("lie center: {}\n", a.display_set(&cents.lie)));
    out.push_str(&format!(
        "multiplicative center: {}\n",
        a.display_set(&cents.multiplicative)
    ));
    out.push_str(&format!("derived ideal: {}\n", a.display_set(&derived)));
    out.push_str(&format!(
        "lower central series: {}\n",
        series_line(&a, &report.lower.terms, " > ")
    ));
    if let Some(i) = report.series_divergence {
        out.push_str(&format!(
            "plain-bracket lower series diverges at step {i}: {}\n",
            series_line(&a, &report.lower_plain.terms, " > ")
        ));
    }
    out.push_str(&format!(
        "upper central series: {}\n",
        series_line(&a, &report.upper.terms, " < ")
    ));
    match report.nilpotency_class {
        Some(c) => out.push_str(&format!("nilpotency class: {c}\n")),
        None => out.push_str("nilpotency class: none\n"),
    }
    out.push_str(&format!("frattini: {}\n", a.display_set(&frat)));

    let mut pass = 0;
    let mut vacuous = 0;
    let mut failure = None;
    for c in &report.checks {
        match &c.outcome {
            Outcome::Pass => pass += 1,
            Outcome::Vacuous => vacuous += 1,
            Outcome::Fail(w) => {
                failure.get_or_insert((c.name, w.clone()));
            }
        }
    }
    match failure {
        Some((name, witness)) => {
            out.push_str(&format!("theorem suite failure: {name}: {witness}\n"));
            (FAIL, out)
        }
        None => {
            out.push_str(&format!(
                "theorem suite: {pass} checks pass, {vacuous} vacuous\n"
            ));
            (PASS, out)
        }
    }
}

fn cmd_subalgebras(path: &str) -> Out {
    let a = match load_mla(path) {
        Ok(a) => a,
        Err(out) => return out,
    };
    let subs = match structure::all_subalgebras(&a, bound_or(DEFAULT_LATTICE_BOUND)) {
        Ok(s) => s,
        Err(e) => return structural(path, e),
    };
    let mut out = format!("count: {}\n", subs.len());
    for s in &subs {
        out.push_str(&a.display_set(s));
        if a.is_ideal(s) {
            out.push_str(" (ideal)");
        }
        out.push('\n');
    }
    (PASS, out)
}

fn cmd_enumerate(path: &str, pins: &[String]) -> Out {
    let g = match load_mla(path) {
        Ok(a) => a,
        Err(out) => return out,
    };
    let mut pairs = Vec::new();
    for raw in pins {
        let v = match parse_indices(raw, g.order(), "constraint index") {
            Ok(v) => v,
            Err(m) => return (ERR, format!("error: {m}\n")),
        };
        if v.len() != 3 {
            return (
                ERR,
                format!("error: constraint `{raw}` must have exactly three entries i,j,k\n"),
            );
        }
        pairs.push((v[0], v[1], v[2]));
    }
    let constraint = match StarConstraint::new(pairs) {
        Ok(c) => c,
        Err(e) => return (ERR, format!("error: {e}\n")),
    };
    let bound = bound_or(DEFAULT_ENUMERATION_BOUND);
    let res = match enumeration::complete_partial_star(&g, &constraint, bound) {
        Ok(r) => r,
        Err(e) => return structural(path, e),
    };
    let mut out = format!("note: {}\ncompletions: {}\n", res.note, res.algebras.len());
    for alg in &res.algebras {
        out.push_str("star\n");
        let n = alg.order();
        for x in 0..n {
            for y in 0..n {
                if y > 0 {
                    out.push(' ');
                }
                out.push_str(&alg.star(x, y).to_string());
            }
            out.push('\n');
        }
    }
    if res.algebras.is_empty() {
        (FAIL, out)
    } else {
        (PASS, out)
    }
}

fn cmd_ext_check(path: &str) -> Out {
    let e = match load_rlce(path) {
        Ok(e) => e,
        Err(out) => return out,
    };
    match e.verify() {
        Ok(()) => (
            PASS,
            format!(
                "ok: relative central extension verified (|L| = {}, |G| = {}, |H| = {})\n",
                e.l().order(),
                e.g().order(),
                e.h.len()
            ),
        ),
        Err(v) => (FAIL, format!("extension violation: {v}\n")),
    }
}

fn cmd_ext_invariants(path: &str) -> Out {
    let e = match load_rlce(path) {
        Ok(e) => e,
        Err(out) => return out,
    };
    let commutator = extensions::action_commutator(&e);
    let center = extensions::action_center(&e);
    let kernel = extensions::kernel_checks(&e);
    let lx = e.l();
    let mut out = String::new();
    out.push_str(&format!("extension commutator: {}\n", lx.display_set(&commutator)));
    out.push_str(&format!("action center: {}\n", lx.display_set(&center)));
    out.push_str(&format!("kernel: {}\n", lx.display_set(&kernel.kernel)));
    out.push_str(&format!(
        "kernel in multiplicative center: {}\n",
        yes(kernel.in_multiplicative_center)
    ));
    out.push_str(&format!(
        "kernel in action center: {}\n",
        yes(kernel.in_action_center)
    ));
    if kernel.passed() {
        (PASS, out)
    } else {
        (FAIL, out)
    }
}

fn hom_line(map_len: usize, apply: impl Fn(usize) -> usize) -> String {
    (0..map_len)
        .map(|i| apply(i).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_isoclinic(first: &str, second: &str) -> Out {
    let e1 = match load_rlce(first) {
        Ok(e) => e,
        Err(out) => return out,
    };
    let e2 = match load_rlce(second) {
        Ok(e) => e,
        Err(out) => return out,
    };
    if let Err(v) = e1.verify() {
        return (FAIL, format!("first extension violation: {v}\n"));
    }
    if let Err(v) = e2.verify() {
        return (FAIL, format!("second extension violation: {v}\n"));
    }
    let w = match isoclinism::find_isoclinism(&e1, &e2) {
        Some(w) => w,
        None => return (FAIL, "no isoclinism found\n".to_string()),
    };
    let mut out = String::from("isoclinism found\n");
    out.push_str(&format!(
        "theta: {}\n",
        hom_line(e1.g().order(), |i| w.theta.apply(i))
    ));
    out.push_str(&format!(
        "beta (on extension commutators): {}\n",
        hom_line(w.beta.source.order(), |i| w.beta.apply(i))
    ));
    if let Err(v) = isoclinism::isoclinism_consequences(&e1, &e2, &w) {
        out.push_str(&format!("consequence failure: {v}\n"));
        return (FAIL, out);
    }
    out.push_str("consequences: pass\n");
    match isoclinism::equivalence_probe(&e1, &e2) {
        Ok(p) => {
            out.push_str(&format!(
                "equivalence probe: pullback order {}, factor order {}\n",
                p.pullback_order, p.factor_order
            ));
            out.push_str("  projection onto first: epimorphism\n");
            out.push_str("  projection onto second: epimorphism\n");
            out.push_str("  embedding into first product: monomorphism\n");
            out.push_str("  embedding into second product: monomorphism\n");
            (PASS, out)
        }
        Err(f) => {
            out.push_str(&format!("equivalence probe failure: {f}\n"));
            (FAIL, out)
        }
    }
}

fn cmd_cover_check(path: &str, ideal_raw: &str, cert_path: &str) -> Out {
    let e = match load_rlce(path) {
        Ok(e) => e,
        Err(out) => return out,
    };
    let cert = match load_mla(cert_path) {
        Ok(a) => a,
        Err(out) => return out,
    };
    let members = match parse_indices(ideal_raw, e.l().order(), "ideal index") {
        Ok(v) => v,
        Err(m) => return (ERR, format!("error: {m}\n")),
    };
    let ideal = ElemSet::from_members(e.l().order(), members);
    let report = match extensions::covering_pair_check(&e, &ideal, &cert) {
        Ok(r) => r,
        Err(err) => return structural(path, err),
    };
    let mut out = String::new();
    out.push_str(&format!("ideal: {}\n", e.l().display_set(&ideal)));
    out.push_str(&format!("is an ideal: {}\n", yes(report.ideal_ok)));
    out.push_str(&format!(
        "inside action center and extension commutator: {}\n",
        yes(report.central_commutator_ok)
    ));
    out.push_str(&format!(
        "quotient matches the marked ideal: {}\n",
        yes(report.quotient_matches)
    ));
    out.push_str(&format!(
        "multiplier certificate matches: {}\n",
        yes(report.multiplier_matches)
    ));
    out.push_str(&format!("covering pair: {}\n", yes(report.passed())));
    if report.passed() {
        (PASS, out)
    } else {
        (FAIL, out)
    }
}

fn cmd_catalog(max_order_raw: &str, out_dir: Option<&str>) -> Out {
    let requested: usize = match max_order_raw.parse() {
        Ok(v) => v,
        Err(_) => {
            return (
                ERR,
                format!("error: --max-order `{max_order_raw}` is not a number\n"),
            )
        }
    };
    let cap = bound_or(DEFAULT_ENUMERATION_BOUND);
    if requested > cap {
        return (
            ERR,
            format!("error: --max-order {requested} exceeds the bound {cap} (set MLA_MAX_ORDER to raise it)\n"),
        );
    }
    let catalog = match enumeration::build_catalog(requested) {
        Ok(c) => c,
        Err(e) => return (ERR, format!("error: {e}\n")),
    };
    let mut out = String::new();
    for entry in &catalog.entries {
        let class = match entry.nilpotency_class {
            Some(c) => c.to_string(),
            None => "-".to_string(),
        };
        out.push_str(&format!(
            "{} order {} class {} perfect {} frattini {}\n",
            entry.name,
            entry.algebra.order(),
            class,
            yes(entry.perfect),
            entry.algebra.display_set(&entry.frattini)
        ));
    }
    if let Some(dir) = out_dir {
        if let Err(e) = std::fs::create_dir_all(dir) {
            return structural(dir, e);
        }
        for entry in &catalog.entries {
            let file = Path::new(dir).join(format!("{}.mla", entry.name.replace('#', "-")));
            if let Err(e) = std::fs::write(&file, format::emit_mla(&entry.algebra)) {
                return structural(&file.display().to_string(), e);
            }
        }
        out.push_str(&format!(
            "wrote {} files to {dir}\n",
            catalog.entries.len()
        ));
    }
    (PASS, out)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
