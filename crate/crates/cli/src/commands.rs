use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use coalesce_core::coalescence::CoalescenceFamily;
use coalesce_core::indices::{closed_form_audit, index_report, IndexKind};
use coalesce_core::random::random_with_clique;
use coalesce_core::spectra::{
    aalpha_char_poly, adjacency_corollary_rhs, complete_closed_form, complete_spectrum, eigenvalues,
    energy_corollary, identity_check_with, Alpha, EnergyVariant, SubgraphConvention,
};
use coalesce_core::structural::{self, run_sweep, sweep_cases, SearchLimits};
use coalesce_core::verify::VerificationRow;
use coalesce_core::{coalesce, CliqueSpec, FamilyKind, Graph};

use crate::args::*;
use crate::grid::{parse_csv, parse_grid, parse_range};
use crate::report::Fingerprint;

pub enum CliError {
    Usage(String),
    Domain(coalesce_core::Error),
    Io(String),
}

impl From<coalesce_core::Error> for CliError {
    fn from(e: coalesce_core::Error) -> Self {
        CliError::Domain(e)
    }
}

pub struct Outcome {
    pub inputs: Vec<Fingerprint>,
    pub payload: Value,
    pub rows: Vec<VerificationRow>,
    /// Printed verbatim instead of a JSON report.
    pub raw: Option<String>,
}

impl Outcome {
    fn payload(inputs: Vec<Fingerprint>, payload: Value) -> Self {
        Outcome {
            inputs,
            payload,
            rows: Vec::new(),
            raw: None,
        }
    }
}

type Res<T> = std::result::Result<T, CliError>;

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn read_text(path: &Path) -> Res<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    }
}

fn read_graph(path: &Path) -> Res<Graph> {
    Ok(Graph::parse_edge_list(&read_text(path)?)?)
}

fn write_text(path: &Path, text: &str) -> Res<Option<String>> {
    if path == Path::new("-") {
        Ok(Some(text.to_string()))
    } else {
        fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Ok(None)
    }
}

fn usage<T>(r: std::result::Result<T, String>) -> Res<T> {
    r.map_err(CliError::Usage)
}

fn alphas(specs: &[String]) -> Res<Vec<Alpha>> {
    specs
        .iter()
        .map(|s| {
            s.parse::<Alpha>()
                .map_err(|_| CliError::Usage(format!("invalid --alpha `{s}`: expected p/q in [0, 1]")))
        })
        .collect()
}

fn alphas_or_quarters(specs: &[String]) -> Res<Vec<Alpha>> {
    if specs.is_empty() {
        Ok(Alpha::quarters())
    } else {
        alphas(specs)
    }
}

fn limits(l: &LimitArgs) -> SearchLimits {
    match l.limit {
        Some(n) => SearchLimits::default().with_exact(n),
        None => SearchLimits::default(),
    }
}

fn clique(spec: &str) -> Res<CliqueSpec> {
    Ok(CliqueSpec::new(usage(parse_csv(spec))?))
}

pub fn family_graph(family: &str, params: &[usize]) -> Res<Graph> {
    let want = |count: usize| -> Res<()> {
        if params.len() == count {
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "family {family} takes {count} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let simple = |kind: FamilyKind| -> Res<Graph> { Ok(Graph::generate(kind)?) };
    match family {
        "complete" => want(1).and_then(|_| simple(FamilyKind::Complete(params[0]))),
        "cycle" => want(1).and_then(|_| simple(FamilyKind::Cycle(params[0]))),
        "path" => want(1).and_then(|_| simple(FamilyKind::Path(params[0]))),
        "star" => want(1).and_then(|_| simple(FamilyKind::Star(params[0]))),
        _ => Ok(coalescence_family(family, params)?.build()?.result),
    }
}

fn coalescence_family(family: &str, p: &[usize]) -> Res<CoalescenceFamily> {
    let arity = match family {
        "lollipop" | "dandelion" | "kite" => 2,
        "dumbbell" => 3,
        _ => return Err(CliError::Usage(format!("unknown family `{family}`"))),
    };
    if p.len() != arity {
        return Err(CliError::Usage(format!(
            "family {family} takes {arity} parameters, got {}",
            p.len()
        )));
    }
    Ok(match family {
        "lollipop" => CoalescenceFamily::Lollipop { m: p[0], n: p[1] },
        "dumbbell" => CoalescenceFamily::Dumbbell { l: p[0], m: p[1], n: p[2] },
        "dandelion" => CoalescenceFamily::Dandelion { m: p[0], n: p[1] },
        _ => CoalescenceFamily::Kite { n: p[0], m: p[1] },
    })
}

pub fn run(command: &Command) -> Res<Outcome> {
    match command {
        Command::Gen(a) => gen(a),
        Command::Coalesce(a) => coalesce_cmd(a),
        Command::Analyze(a) => {
            let g = read_graph(&a.input.input)?;
            let report = structural::analyze(&g, limits(&a.limit))?;
            let violations = report.sanity_violations();
            Ok(Outcome::payload(
                vec![Fingerprint::of("in", &g)],
                json!({ "report": report, "sanity_violations": violations }),
            ))
        }
        Command::Spectrum(a) => {
            let g = read_graph(&a.input.input)?;
            let reports = alphas(&a.alpha)?
                .iter()
                .map(|alpha| eigenvalues(&g, alpha))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Outcome::payload(vec![Fingerprint::of("in", &g)], to_json(&reports)))
        }
        Command::Charpoly(a) => {
            let g = read_graph(&a.input.input)?;
            let mut out = Vec::new();
            for alpha in alphas(&a.alpha)? {
                let p = aalpha_char_poly(&g, &alpha)?;
                out.push(json!({ "alpha": alpha, "coefficients": p, "polynomial": p.to_string() }));
            }
            Ok(Outcome::payload(vec![Fingerprint::of("in", &g)], Value::Array(out)))
        }
        Command::Indices(a) => {
            let g = read_graph(&a.input)?;
            Ok(Outcome::payload(vec![Fingerprint::of("in", &g)], to_json(&index_report(&g)?)))
        }
        Command::Verify(v) => verify(v),
    }
}

fn gen(a: &GenArgs) -> Res<Outcome> {
    let params = usage(parse_csv(&a.params))?;
    let g = family_graph(&a.family, &params)?;
    let text = g.to_edge_list();
    let raw = match &a.out {
        Some(path) => write_text(path, &text)?,
        None => None,
    };
    let payload = json!({ "family": a.family, "params": params, "n": g.order(), "m": g.size(), "graph": g });
    Ok(Outcome {
        inputs: Vec::new(),
        payload,
        rows: Vec::new(),
        raw,
    })
}

fn coalesce_cmd(a: &CoalesceArgs) -> Res<Outcome> {
    let g1 = read_graph(&a.pair.g1)?;
    let g2 = read_graph(&a.pair.g2)?;
    let rec = coalesce(&g1, &clique(&a.pair.q1)?, &g2, &clique(&a.pair.q2)?)?;
    let raw = match &a.out {
        Some(path) => write_text(path, &rec.result.to_edge_list())?,
        None => None,
    };
    Ok(Outcome {
        inputs: vec![Fingerprint::of("g1", &g1), Fingerprint::of("g2", &g2)],
        payload: to_json(&rec),
        rows: Vec::new(),
        raw,
    })
}

fn read_pair(p: &OptionalPair) -> Res<Option<(Graph, CliqueSpec, Graph, CliqueSpec)>> {
    match (&p.g1, &p.q1, &p.g2, &p.q2) {
        (Some(g1), Some(q1), Some(g2), Some(q2)) => Ok(Some((read_graph(g1)?, clique(q1)?, read_graph(g2)?, clique(q2)?))),
        (None, None, None, None) => Ok(None),
        _ => Err(CliError::Usage("--g1, --q1, --g2 and --q2 go together".into())),
    }
}

fn pair_inputs(g1: &Graph, g2: &Graph) -> Vec<Fingerprint> {
    vec![Fingerprint::of("g1", g1), Fingerprint::of("g2", g2)]
}

/// The small families swept by `verify structure` without explicit inputs.
pub fn sweep_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 3..=6 {
        out.push((format!("C{n}"), Graph::cycle(n).unwrap()));
    }
    for n in 2..=6 {
        out.push((format!("P{n}"), Graph::path(n).unwrap()));
    }
    for n in 2..=6 {
        out.push((format!("K{n}"), Graph::complete(n).unwrap()));
    }
    for n in 3..=6 {
        out.push((format!("S{n}"), Graph::star(n).unwrap()));
    }
    out
}

fn verify(v: &VerifyCommand) -> Res<Outcome> {
    match v {
        VerifyCommand::Structure { pair, k, limit } => {
            let lim = limits(limit);
            match read_pair(pair)? {
                Some((g1, q1, g2, q2)) => {
                    let rows = structural::check_propositions(&g1, &q1, &g2, &q2, lim)?;
                    let payload = json!({ "k": q1.len() });
                    Ok(Outcome { inputs: pair_inputs(&g1, &g2), payload, rows, raw: None })
                }
                None => {
                    let ks = usage(parse_range(k))?;
                    let cases = sweep_cases(&sweep_graphs(), &ks);
                    let rows = run_sweep(&cases, lim)?;
                    let payload = json!({ "cases": cases.len(), "k": ks });
                    Ok(Outcome { inputs: Vec::new(), payload, rows, raw: None })
                }
            }
        }
        VerifyCommand::Decomposition { pair, alpha, convention, corollary, grid, samples, seed } => {
            let convention: SubgraphConvention = convention
                .parse()
                .map_err(|_| CliError::Usage(format!("unknown --convention `{convention}`")))?;
            let alphas = alphas(alpha)?;
            let (inputs, cases) = match read_pair(pair)? {
                Some((g1, q1, g2, q2)) => (pair_inputs(&g1, &g2), vec![(g1, q1, g2, q2)]),
                None => (Vec::new(), random_pairs(grid, *samples, *seed)?),
            };
            let mut payload = Vec::new();
            let mut rows = Vec::new();
            for (g1, q1, g2, q2) in &cases {
                let subject = format!("k={} n1={} n2={}", q1.len(), g1.order(), g2.order());
                if *corollary {
                    let rhs = adjacency_corollary_rhs(g1, q1, g2, q2)?;
                    let lhs = aalpha_char_poly(&coalesce(g1, q1, g2, q2)?.result, &Alpha::zero())?;
                    let equal = lhs == rhs;
                    rows.push(VerificationRow::compare(&subject, "adjacency corollary", &rhs, &lhs, equal));
                    payload.push(json!({ "k": q1.len(), "lhs": lhs, "rhs": rhs, "equal": equal }));
                    continue;
                }
                for a in &alphas {
                    let c = identity_check_with(g1, q1, g2, q2, a, convention)?;
                    let note = format!("n1+n2>3k: {}", c.hypothesis_met);
                    rows.push(
                        VerificationRow::compare(&subject, format!("decomposition alpha={a}"), &c.rhs, &c.lhs, c.equal)
                            .with_note(note),
                    );
                    payload.push(to_json(&c));
                }
            }
            Ok(Outcome { inputs, payload: Value::Array(payload), rows, raw: None })
        }
        VerifyCommand::CompleteForms { grid, alpha } => complete_forms(grid, alpha),
        VerifyCommand::EnergyCorollaries { grid, alpha, variant } => energy_forms(grid, alpha, variant),
        VerifyCommand::IndexForms { family, grid, index } => index_forms(family, grid.as_deref(), index),
    }
}

fn random_pairs(grid: &str, samples: usize, seed: u64) -> Res<Vec<(Graph, CliqueSpec, Graph, CliqueSpec)>> {
    let g = usage(parse_grid(grid))?;
    let ks = g.get("k").cloned().unwrap_or_else(|| vec![2, 3]);
    let ns = g.get("n").cloned().unwrap_or_else(|| (4..=8).collect());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for &k in &ks {
        for &n1 in &ns {
            for &n2 in &ns {
                if n1 < k || n2 < k || n1 > n2 {
                    continue;
                }
                for _ in 0..samples {
                    let (g1, q1) = random_with_clique(&mut rng, n1, k, 0.3)?;
                    let (g2, q2) = random_with_clique(&mut rng, n2, k, 0.3)?;
                    out.push((g1, q1, g2, q2));
                }
            }
        }
    }
    Ok(out)
}

fn mnk_grid(grid: &GridArgs, default_mn: &str) -> Res<BTreeMap<String, Vec<usize>>> {
    let mut g = match &grid.grid {
        Some(spec) => usage(parse_grid(spec))?,
        None => BTreeMap::new(),
    };
    for (name, v) in [("m", &grid.m), ("n", &grid.n), ("k", &grid.k)] {
        if let Some(spec) = v {
            g.insert(name.to_string(), usage(parse_range(spec))?);
        }
    }
    for name in ["m", "n"] {
        if !g.contains_key(name) {
            g.insert(name.to_string(), usage(parse_range(default_mn))?);
        }
    }
    Ok(g)
}

/// Valid `(m, n, k)` triples of the grid, in grid order.
fn triples(g: &BTreeMap<String, Vec<usize>>) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for &m in &g["m"] {
        for &n in &g["n"] {
            let ks: Vec<usize> = match g.get("k") {
                Some(ks) => ks.clone(),
                None => (1..m.min(n)).collect(),
            };
            for k in ks {
                if m >= 2 && n >= 2 && k >= 1 && k < m.min(n) {
                    out.push((m, n, k));
                }
            }
        }
    }
    out
}

fn merged_complete(m: usize, n: usize, k: usize) -> coalesce_core::Result<Graph> {
    let q = CliqueSpec::new((0..k).collect::<Vec<_>>());
    Ok(coalesce(&Graph::complete(m)?, &q, &Graph::complete(n)?, &q)?.result)
}

fn complete_forms(grid: &GridArgs, alpha: &[String]) -> Res<Outcome> {
    let g = mnk_grid(grid, "2..10")?;
    let alphas = alphas_or_quarters(alpha)?;
    let cells: Vec<(usize, usize, usize, Alpha)> = triples(&g)
        .into_iter()
        .flat_map(|(m, n, k)| alphas.iter().map(move |a| (m, n, k, a.clone())))
        .collect();
    let rows: Vec<Vec<VerificationRow>> = cells
        .par_iter()
        .map(|(m, n, k, a)| -> coalesce_core::Result<Vec<VerificationRow>> {
            let subject = format!("m={m} n={n} k={k} alpha={a}");
            let merged = merged_complete(*m, *n, *k)?;
            let closed = complete_closed_form(*m, *n, *k, a)?;
            let direct = aalpha_char_poly(&merged, a)?;
            let (spec, terms) = complete_spectrum(*m, *n, *k, a)?;
            let numeric = eigenvalues(&merged, a)?;
            let worst = spec
                .eigenvalues
                .iter()
                .zip(&numeric.eigenvalues)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max);
            Ok(vec![
                VerificationRow::compare(&subject, "char poly", &closed, &direct, closed == direct),
                VerificationRow::compare(
                    &subject,
                    "spectrum",
                    format!("{} eigenvalues", spec.eigenvalues.len()),
                    format!("max deviation {worst:.3e}"),
                    worst <= 1e-9 && spec.eigenvalues.len() == numeric.eigenvalues.len(),
                )
                .with_note(format!("cubic residual {:.3e}", terms.max_residual)),
            ])
        })
        .collect::<Result<_, _>>()?;
    let rows: Vec<VerificationRow> = rows.into_iter().flatten().collect();
    let payload = json!({ "cells": cells.len() });
    Ok(Outcome { inputs: Vec::new(), payload, rows, raw: None })
}

fn energy_forms(grid: &GridArgs, alpha: &[String], variant: &[String]) -> Res<Outcome> {
    let g = mnk_grid(grid, "3..8")?;
    let alphas = alphas_or_quarters(alpha)?;
    let variants: Vec<EnergyVariant> = if variant.is_empty() {
        EnergyVariant::ALL.to_vec()
    } else {
        variant
            .iter()
            .map(|v| v.parse().map_err(|_| CliError::Usage(format!("unknown --variant `{v}`"))))
            .collect::<Res<_>>()?
    };
    let mut cells = Vec::new();
    for (m, n, k) in triples(&g) {
        for &v in &variants {
            if v.applies(m, n, k) {
                for a in &alphas {
                    cells.push((m, n, k, a.clone(), v));
                }
            }
        }
    }
    let reports = cells
        .par_iter()
        .map(|(m, n, k, a, v)| energy_corollary(*m, *n, *k, a, *v))
        .collect::<Result<Vec<_>, _>>()?;
    let rows = reports
        .iter()
        .map(|r| {
            let subject = format!("{} m={} n={} k={} alpha={}", r.variant, r.m, r.n, r.k, r.alpha);
            let row = VerificationRow::compare(
                subject,
                "energy",
                format!("{:.12}", r.value),
                format!("{:.12}", r.direct),
                r.matches_direct,
            );
            match r.mismatch_location {
                Some(i) => row.with_note(format!("first divergent term: {} ({})", i, r.terms[i].label)),
                None => row,
            }
        })
        .collect();
    Ok(Outcome { inputs: Vec::new(), payload: to_json(&reports), rows, raw: None })
}

/// Default parameter grids for the family audit.
pub fn default_family_cells(family: &str) -> Vec<CoalescenceFamily> {
    let mut out = Vec::new();
    match family {
        "lollipop" => {
            for m in 3..=8 {
                for n in 2..=6 {
                    out.push(CoalescenceFamily::Lollipop { m, n });
                }
            }
        }
        "dumbbell" => {
            for m in 4..=8 {
                for n in 3..=6 {
                    out.push(CoalescenceFamily::Dumbbell { l: m, m, n });
                }
            }
        }
        "dandelion" => {
            for m in 2..=7 {
                for n in 3..=7 {
                    out.push(CoalescenceFamily::Dandelion { m, n });
                }
            }
        }
        _ => {
            for n in 3..=7 {
                for m in 2..=7 {
                    out.push(CoalescenceFamily::Kite { n, m });
                }
            }
        }
    }
    out
}

fn index_forms(families: &[String], grid: Option<&str>, index: &[String]) -> Res<Outcome> {
    const ALL: [&str; 4] = ["lollipop", "dumbbell", "dandelion", "kite"];
    let names: Vec<&str> = if families.is_empty() {
        ALL.to_vec()
    } else {
        families.iter().map(String::as_str).collect()
    };
    let kinds: Vec<IndexKind> = if index.is_empty() {
        IndexKind::ALL.to_vec()
    } else {
        index
            .iter()
            .map(|s| s.parse().map_err(|_| CliError::Usage(format!("unknown --index `{s}`"))))
            .collect::<Res<_>>()?
    };
    let mut cells = Vec::new();
    for name in names {
        if !ALL.contains(&name) {
            return Err(CliError::Usage(format!("unknown family `{name}`")));
        }
        match grid {
            None => cells.extend(default_family_cells(name)),
            Some(spec) => {
                let g = usage(parse_grid(spec))?;
                let get = |key: &str| {
                    g.get(key)
                        .cloned()
                        .ok_or_else(|| CliError::Usage(format!("--grid needs `{key}` for {name}")))
                };
                let (ms, ns) = (get("m")?, get("n")?);
                for &m in &ms {
                    for &n in &ns {
                        let params = match name {
                            "dumbbell" => vec![m, m, n],
                            "kite" => vec![n, m],
                            _ => vec![m, n],
                        };
                        cells.push(coalescence_family(name, &params)?);
                    }
                }
            }
        }
    }
    let audit = closed_form_audit(&cells, &kinds)?;
    let rows = audit.iter().map(|r| r.to_row()).collect();
    Ok(Outcome { inputs: Vec::new(), payload: to_json(&audit), rows, raw: None })
}
