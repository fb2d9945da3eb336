//! Acceptance run: one PASS/FAIL line per criterion, with the tolerance and
//! time budget each one is held to. Exits non-zero if any criterion fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use coalesce_core::indices::{index_report, vertex_composition};
use coalesce_core::random::{random_connected, random_with_clique};
use coalesce_core::spectra::{
    aalpha_char_poly, adjacency_corollary_rhs, complete_spectrum, eigenvalues, energy, energy_corollary,
    identity_check, identity_check_with, lollipop_direct, lollipop_recursion, Alpha, EnergyVariant,
    RationalPolynomial, SubgraphConvention,
};
use coalesce_core::{coalesce, CliqueSpec, Graph};

const BIN: &str = env!("CARGO_BIN_EXE_coalesce");

struct Verdict {
    pass: bool,
    detail: Vec<String>,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            pass,
            detail: vec![detail.into()],
        }
    }

    fn line(mut self, s: impl Into<String>) -> Self {
        self.detail.push(s.into());
        self
    }
}

// ---- oracles ----

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// Determinant by fraction-exact Gaussian elimination.
fn det_gauss(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for j in c..n {
                let d = &f * &m[c][j];
                m[r][j] -= d;
            }
        }
    }
    det
}

/// `det(λI − A_α)` interpolated through `n + 1` integer points.
fn charpoly_oracle(g: &Graph, alpha: &Alpha) -> RationalPolynomial {
    let n = g.order();
    let a = alpha.value();
    let entry = |i: usize, j: usize| -> BigRational {
        if i == j {
            a * int(g.degree(i) as i64)
        } else if g.has_edge(i, j) {
            int(1) - a
        } else {
            BigRational::zero()
        }
    };
    let xs: Vec<BigRational> = (0..=n as i64).map(int).collect();
    let mut out = RationalPolynomial::zero();
    for (i, xi) in xs.iter().enumerate() {
        let shifted = (0..n)
            .map(|r| (0..n).map(|c| if r == c { xi - entry(r, c) } else { -entry(r, c) }).collect())
            .collect();
        let yi = det_gauss(shifted);
        let mut basis = RationalPolynomial::one();
        let mut denom = BigRational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = &basis * &RationalPolynomial::linear(xj.clone());
                denom *= xi - xj;
            }
        }
        out = &out + &basis.scale(&(yi / denom));
    }
    out
}

fn poly(coeffs: &[BigRational]) -> RationalPolynomial {
    RationalPolynomial::new(coeffs.to_vec())
}

fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.order();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// W, WW, F, M1, NK from all-pairs distances and degrees.
fn index_oracle(g: &Graph) -> (u64, BigRational, u64, u64, BigUint) {
    let d = floyd_warshall(g);
    let n = g.order();
    let (mut w, mut sq) = (0u64, 0u64);
    for i in 0..n {
        for j in i + 1..n {
            w += d[i][j];
            sq += d[i][j] * d[i][j];
        }
    }
    let ww = BigRational::new((w + sq).into(), 2.into());
    let degs: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    let f = degs.iter().map(|d| d.pow(3)).sum();
    let m1 = degs.iter().map(|d| d * d).sum();
    let nk = degs.iter().fold(BigUint::one(), |acc, &d| acc * d);
    (w, ww, f, m1, nk)
}

// ---- helpers ----

fn run(args: &[&str]) -> (i32, Value, Duration) {
    let start = Instant::now();
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    let elapsed = start.elapsed();
    let code = out.status.code().unwrap_or(-1);
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, json, elapsed)
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("coalesce-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn rows(report: &Value) -> Vec<&Value> {
    report["rows"].as_array().map(|r| r.iter().collect()).unwrap_or_default()
}

fn row_str<'a>(row: &'a Value, key: &str) -> &'a str {
    row[key].as_str().unwrap_or("")
}

fn alphas(list: &[(i64, i64)]) -> Vec<Alpha> {
    list.iter().map(|&(p, q)| Alpha::ratio(p, q).unwrap()).collect()
}

fn random_vertex(rng: &mut ChaCha8Rng, g: &Graph) -> usize {
    rng.random_range(0..g.order())
}

// ---- criteria ----

fn ac1() -> Verdict {
    let path = scratch("molecule.el");
    let p = path.to_str().unwrap();
    let (gen_code, _, _) = run(&["gen", "--family", "dumbbell", "--params", "6,6,4", "--out", p]);
    let g = Graph::parse_edge_list(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let (code, report, elapsed) = run(&["indices", "--in", p]);
    let got = &report["payload"];
    let expected = serde_json::json!({"W":343,"WW":"1032","F":150,"M1":66,"NK":36864});
    let (w, ww, f, m1, nk) = index_oracle(&g);
    let oracle_ok = w == 343 && ww == int(1032) && f == 150 && m1 == 66 && nk == BigUint::from(36864u32);
    let pass = gen_code == 0 && code == 0 && g.order() == 14 && *got == expected && oracle_ok && elapsed < Duration::from_secs(1);
    Verdict::new(
        pass,
        format!(
            "exact equality, runtime {:.3}s (limit 1s); n={} got {} ; distance oracle agrees: {}",
            elapsed.as_secs_f64(),
            g.order(),
            got,
            oracle_ok
        ),
    )
}

fn complete_grid_cells() -> usize {
    let mut cells = 0;
    for m in 2..=10usize {
        for n in 2..=10usize {
            cells += (m.min(n) - 1) * 5;
        }
    }
    cells
}

fn ac2_ac3() -> (Verdict, Verdict) {
    let (code, report, elapsed) = run(&["verify", "complete-forms"]);
    let all = rows(&report);
    let cells = complete_grid_cells();
    let poly_rows: Vec<_> = all.iter().filter(|r| row_str(r, "check") == "char poly").collect();
    let poly_fail = poly_rows.iter().filter(|r| row_str(r, "status") != "PASS").count();
    let ac2 = Verdict::new(
        code == 0 && poly_rows.len() == cells && poly_fail == 0 && elapsed < Duration::from_secs(120),
        format!(
            "zero tolerance, runtime {:.2}s (limit 120s); {} cells, {} failing, exit {}",
            elapsed.as_secs_f64(),
            poly_rows.len(),
            poly_fail,
            code
        ),
    );

    let spec_rows: Vec<_> = all.iter().filter(|r| row_str(r, "check") == "spectrum").collect();
    let spec_fail = spec_rows.iter().filter(|r| row_str(r, "status") != "PASS").count();
    // Independent pass in-process: closed-form multiset against the numeric eigensolver.
    let mut worst = 0.0f64;
    let mut bad = 0;
    for m in 2..=10 {
        for n in 2..=10 {
            for k in 1..m.min(n) {
                for a in Alpha::quarters() {
                    let (closed, _) = complete_spectrum(m, n, k, &a).unwrap();
                    let q = CliqueSpec::new((0..k).collect::<Vec<_>>());
                    let g = coalesce(&Graph::complete(m).unwrap(), &q, &Graph::complete(n).unwrap(), &q)
                        .unwrap()
                        .result;
                    let numeric = eigenvalues(&g, &a).unwrap();
                    if closed.eigenvalues.len() != numeric.eigenvalues.len() {
                        bad += 1;
                        continue;
                    }
                    let mut x = closed.eigenvalues.clone();
                    let mut y = numeric.eigenvalues.clone();
                    x.sort_by(f64::total_cmp);
                    y.sort_by(f64::total_cmp);
                    let dev = x.iter().zip(&y).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max);
                    worst = worst.max(dev);
                    if dev > 1e-9 {
                        bad += 1;
                    }
                }
            }
        }
    }
    let ac3 = Verdict::new(
        spec_rows.len() == cells && spec_fail == 0 && bad == 0,
        format!(
            "tolerance 1e-9 per eigenvalue; {} cells, {} failing in report, {} failing in-process, worst deviation {:.2e}",
            spec_rows.len(),
            spec_fail,
            bad,
            worst
        ),
    );
    (ac2, ac3)
}

fn ac4() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC4);
    let set = alphas(&[(0, 1), (1, 3), (1, 2), (1, 1)]);
    let mut checks = 0;
    let mut failures = Vec::new();
    for pair in 0..50 {
        let n1 = rng.random_range(1..=10);
        let n2 = rng.random_range(1..=10);
        let g1 = random_connected(&mut rng, n1, 0.3).unwrap();
        let g2 = random_connected(&mut rng, n2, 0.3).unwrap();
        let v1 = random_vertex(&mut rng, &g1);
        let v2 = random_vertex(&mut rng, &g2);
        for a in &set {
            let c = identity_check(&g1, &CliqueSpec::vertex(v1), &g2, &CliqueSpec::vertex(v2), a).unwrap();
            checks += 1;
            if !c.equal {
                failures.push(format!("pair {pair} alpha={a}"));
            }
        }
    }
    let mut lolli = 0;
    for m in 3..=6 {
        for n in 2..=5 {
            for a in &set {
                let rec = lollipop_recursion(m, n, a).unwrap();
                let direct = lollipop_direct(m, n, a).unwrap();
                // L(m, n−1) is C_m with a pendant path of n−1 edges.
                let mut edges: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
                let mut prev = 0;
                for j in 0..n - 1 {
                    edges.push((prev, m + j));
                    prev = m + j;
                }
                let g = Graph::from_edges(m + n - 1, edges).unwrap();
                let oracle = charpoly_oracle(&g, a);
                lolli += 1;
                if rec != direct || direct != oracle {
                    failures.push(format!("lollipop m={m} n={n} alpha={a}"));
                }
            }
        }
    }
    let mut v = Verdict::new(
        failures.is_empty(),
        format!("exact equality; {checks} identity checks over 50 pairs, {lolli} lollipop recursion cells; {} failing", failures.len()),
    );
    for f in failures.iter().take(5) {
        v = v.line(format!("failing: {f}"));
    }
    v
}

fn ac5() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC5);
    let mut summary = Vec::new();
    let mut all_ok = true;
    let mut first = None;
    for k in 1..=3usize {
        let mut equal = 0;
        for _ in 0..20 {
            let n1 = rng.random_range(k.max(2)..=10);
            let n2 = rng.random_range(k.max(2)..=10);
            let (g1, q1) = random_with_clique(&mut rng, n1, k, 0.3).unwrap();
            let (g2, q2) = random_with_clique(&mut rng, n2, k, 0.3).unwrap();
            let rhs = adjacency_corollary_rhs(&g1, &q1, &g2, &q2).unwrap();
            let merged = coalesce(&g1, &q1, &g2, &q2).unwrap().result;
            let lhs = aalpha_char_poly(&merged, &Alpha::zero()).unwrap();
            if lhs == rhs {
                equal += 1;
            } else if first.is_none() {
                first = Some(format!("k={k} n1={n1} n2={n2}: lhs {lhs} vs rhs {rhs}"));
            }
        }
        all_ok &= equal == 20;
        summary.push(format!("k={k}: {equal}/20 equal"));
    }
    // Smallest counterexample, with the left side from the interpolation oracle.
    let k3 = Graph::complete(3).unwrap();
    let p3 = Graph::path(3).unwrap();
    let (q1, q2) = (CliqueSpec::new([0, 1]), CliqueSpec::new([0, 1]));
    let merged = coalesce(&k3, &q1, &p3, &q2).unwrap().result;
    let lhs = charpoly_oracle(&merged, &Alpha::zero());
    let rhs = adjacency_corollary_rhs(&k3, &q1, &p3, &q2).unwrap();
    let mut v = Verdict::new(all_ok, format!("exact equality at alpha=0; {}", summary.join(", ")));
    if let Some(f) = first {
        v = v.line(format!("first counterexample: {f}"));
    }
    v.line(format!("K3 edge P3 edge: oracle lhs {lhs}, corollary rhs {rhs}"))
}

fn ac6() -> Verdict {
    let k3 = Graph::complete(3).unwrap();
    let edge = CliqueSpec::new([0, 1]);
    let half = Alpha::half();
    let lam4 = |c0: BigRational, c1: BigRational, c2: BigRational, c3: BigRational| poly(&[c0, c1, c2, c3, int(1)]);
    let want_rhs = lam4(int(0), int(-1), ratio(3, 2), int(-3));
    let want_lhs = lam4(int(1), int(-5), int(8), int(-5));

    let induced = identity_check_with(&k3, &edge, &k3, &edge, &half, SubgraphConvention::InducedSubgraph).unwrap();
    let principal = identity_check(&k3, &edge, &k3, &edge, &half).unwrap();
    let merged = coalesce(&k3, &edge, &k3, &edge).unwrap().result;
    let oracle_lhs = charpoly_oracle(&merged, &half);
    let desk_ok = !induced.equal
        && !principal.equal
        && induced.rhs == want_rhs
        && induced.lhs == want_lhs
        && oracle_lhs == want_lhs;

    // Grid with n1 + n2 > 3k: the reported flag must agree with the oracle.
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC6);
    let set = alphas(&[(1, 4), (1, 2), (3, 4), (1, 1)]);
    let (mut cells, mut equal, mut misclassified) = (0, 0, 0);
    for k in 2..=3usize {
        for n1 in k..=7 {
            for n2 in k..=7 {
                if n1 + n2 <= 3 * k {
                    continue;
                }
                let (g1, q1) = random_with_clique(&mut rng, n1, k, 0.3).unwrap();
                let (g2, q2) = random_with_clique(&mut rng, n2, k, 0.3).unwrap();
                let merged = coalesce(&g1, &q1, &g2, &q2).unwrap().result;
                for a in &set {
                    let c = identity_check(&g1, &q1, &g2, &q2, a).unwrap();
                    let truth = charpoly_oracle(&merged, a) == c.rhs;
                    cells += 1;
                    if c.equal {
                        equal += 1;
                    }
                    if c.equal != truth || !c.hypothesis_met {
                        misclassified += 1;
                    }
                }
            }
        }
    }
    Verdict::new(
        desk_ok && misclassified == 0 && cells > 0,
        format!("exact; desk counterexample reproduced: {desk_ok}; grid {cells} cells, {equal} equal, {} unequal, {misclassified} misclassified", cells - equal),
    )
    .line(format!("induced: lhs {} | rhs {}", induced.lhs, induced.rhs))
    .line(format!("principal: lhs {} | rhs {}", principal.lhs, principal.rhs))
}

fn ac7() -> Verdict {
    let k3 = Graph::complete(3).unwrap();
    let bowtie = coalesce(&k3, &CliqueSpec::vertex(0), &k3, &CliqueSpec::vertex(0)).unwrap().result;
    let e = energy(&bowtie, &Alpha::zero()).unwrap();
    let bowtie_ok = (e - (3.0 + 17f64.sqrt())).abs() <= 1e-9;

    let mut regular: Vec<Graph> = Vec::new();
    for n in 3..=8 {
        regular.push(Graph::cycle(n).unwrap());
        regular.push(Graph::complete(n).unwrap());
    }
    for n in 5..=8 {
        regular.push(Graph::cycle(n).unwrap().complement());
    }
    let mut worst = 0.0f64;
    for g in &regular {
        let e0 = energy(g, &Alpha::zero()).unwrap();
        for a in Alpha::quarters() {
            let ea = energy(g, &a).unwrap();
            worst = worst.max((ea - (1.0 - a.to_f64()) * e0).abs());
        }
    }
    let regular_ok = worst <= 1e-9;

    let mm1 = energy_corollary(3, 3, 1, &Alpha::zero(), EnergyVariant::Mm1).unwrap();
    let mm1_ok = mm1.matches_direct && (mm1.value - mm1.direct).abs() <= 1e-9;

    let mut localized = None;
    'search: for m in 3..=8 {
        for n in 3..=8 {
            for a in alphas(&[(1, 4), (1, 2), (3, 4), (1, 1)]) {
                let r = energy_corollary(m, n, 2, &a, EnergyVariant::General).unwrap();
                if r.mismatch_location == Some(0) {
                    let t = &r.terms[0];
                    localized = Some(format!(
                        "m={m} n={n} k=2 alpha={a}: term 0 ({}) printed {:.12} vs {:.12}",
                        t.label, t.printed, t.expected
                    ));
                    break 'search;
                }
            }
        }
    }
    Verdict::new(
        bowtie_ok && regular_ok && mm1_ok && localized.is_some(),
        format!(
            "tolerance 1e-9; bowtie {e:.12} vs 3+sqrt(17); regular scaling worst {worst:.2e} over {} graphs; mm_1(3,3,1,0) {:.12} vs {:.12}",
            regular.len(),
            mm1.value,
            mm1.direct
        ),
    )
    .line(format!("general corollary first-term mismatch: {}", localized.unwrap_or_else(|| "not found".into())))
}

fn ac8() -> Verdict {
    let (code, report, elapsed) = run(&["verify", "structure"]);
    let all = rows(&report);
    let count = |s: &str| all.iter().filter(|r| row_str(r, "status") == s).count();
    let mut checks: Vec<&str> = all.iter().map(|r| row_str(r, "check")).collect();
    checks.sort_unstable();
    checks.dedup();
    Verdict::new(
        code == 0 && !all.is_empty() && count("FAIL") == 0 && count("SKIPPED") == 0 && elapsed < Duration::from_secs(60),
        format!(
            "exact, runtime {:.2}s (limit 60s); {} rows: {} pass, {} fail, {} skipped; checks: {}",
            elapsed.as_secs_f64(),
            all.len(),
            count("PASS"),
            count("FAIL"),
            count("SKIPPED"),
            checks.join(", ")
        ),
    )
}

fn ac9() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC9);
    let mut bad = Vec::new();
    for pair in 0..50 {
        let n1 = rng.random_range(1..=12);
        let n2 = rng.random_range(1..=12);
        let g1 = random_connected(&mut rng, n1, 0.25).unwrap();
        let g2 = random_connected(&mut rng, n2, 0.25).unwrap();
        let v1 = random_vertex(&mut rng, &g1);
        let v2 = random_vertex(&mut rng, &g2);
        let composed = match vertex_composition(&g1, v1, &g2, v2) {
            Ok(r) => r,
            Err(e) => {
                bad.push(format!("pair {pair}: {e}"));
                continue;
            }
        };
        let merged = coalesce(&g1, &CliqueSpec::vertex(v1), &g2, &CliqueSpec::vertex(v2)).unwrap().result;
        let direct = index_report(&merged).unwrap();
        let (w, ww, f, m1, nk) = index_oracle(&merged);
        let oracle_ok = composed.w == w && composed.ww == ww && composed.f == f && composed.m1 == m1 && composed.nk == nk;
        if composed != direct || !oracle_ok {
            bad.push(format!("pair {pair}: n1={n1} n2={n2}"));
        }
    }
    let mut v = Verdict::new(bad.is_empty(), format!("exact on W, WW, F, M1, NK; 50 pairs, {} failing", bad.len()));
    for b in bad.iter().take(5) {
        v = v.line(format!("failing: {b}"));
    }
    v
}

/// Cells where the printed closed form is known to carry a typo.
fn expected_typo(subject: &str, index: &str) -> Option<&'static str> {
    if subject.starts_with("kite(") && index == "WW" {
        return Some("clique term");
    }
    for m in [5, 7] {
        if subject.starts_with(&format!("dumbbell(l={m},m={m},")) && index == "W" {
            return Some("cross term");
        }
    }
    None
}

fn ac10() -> Verdict {
    let (code, report, elapsed) = run(&["verify", "index-forms"]);
    let all = rows(&report);
    let mut unexpected = Vec::new();
    let mut listed = Vec::new();
    for r in &all {
        let (subject, index, status) = (row_str(r, "subject"), row_str(r, "check"), row_str(r, "status"));
        let note = row_str(r, "note");
        match (expected_typo(subject, index), status) {
            (None, "PASS") => {}
            (Some(term), "FAIL") if note.contains(&format!("divergent: {term}")) => {
                listed.push(format!("expected FAIL {subject} {index}: {note}"));
            }
            _ => unexpected.push(format!("{subject} {index} {status}: {note}")),
        }
    }
    let anchor = all.iter().any(|r| {
        row_str(r, "subject") == "dumbbell(l=6,m=6,n=4)"
            && row_str(r, "check") == "W"
            && row_str(r, "status") == "PASS"
            && row_str(r, "measured") == "343"
    });
    // Lollipop 3..8 x 2..6, dumbbell 4..8 x 3..6, dandelion 6 x 5, kite 5 x 6; five indices each.
    let cells = (6 * 5 + 5 * 4 + 6 * 5 + 5 * 6) * 5;
    let mut v = Verdict::new(
        code == 3 && all.len() == cells && unexpected.is_empty() && anchor && !listed.is_empty(),
        format!(
            "exact, runtime {:.2}s; {} rows, {} expected typo FAILs, {} unexpected; dumbbell (6,4) W = 343 PASS: {anchor}",
            elapsed.as_secs_f64(),
            all.len(),
            listed.len(),
            unexpected.len()
        ),
    );
    for l in listed {
        v = v.line(l);
    }
    for u in unexpected {
        v = v.line(format!("UNEXPECTED {u}"));
    }
    v
}

fn main() {
    let started = Instant::now();
    let mut results: Vec<(&str, &str, Verdict, Duration)> = Vec::new();
    let mut timed = |id, title, f: &dyn Fn() -> Verdict| {
        let t = Instant::now();
        let v = f();
        results.push((id, title, v, t.elapsed()));
    };
    timed("AC1", "molecule anchor", &ac1);
    // AC2 and AC3 share one run of the grid.
    let t = Instant::now();
    let (v2, v3) = ac2_ac3();
    let shared = t.elapsed();
    results.push(("AC2", "complete closed-form char poly", v2, shared));
    results.push(("AC3", "complete closed-form spectrum", v3, shared));
    let mut timed = |id, title, f: &dyn Fn() -> Verdict| {
        let t = Instant::now();
        let v = f();
        results.push((id, title, v, t.elapsed()));
    };
    timed("AC4", "k=1 identity and lollipop recursion", &ac4);
    timed("AC5", "adjacency corollary, k in 1..3", &ac5);
    timed("AC6", "k>=2 identity counterexample and grid report", &ac6);
    timed("AC7", "energy", &ac7);
    timed("AC8", "structural sweep", &ac8);
    timed("AC9", "index composition", &ac9);
    timed("AC10", "family closed-form audit", &ac10);

    let mut failed = 0;
    for (id, title, v, dt) in &results {
        let status = if v.pass { "PASS" } else { "FAIL" };
        if !v.pass {
            failed += 1;
        }
        println!("{status} {id} {title} [{:.2}s]: {}", dt.as_secs_f64(), v.detail[0]);
        for extra in &v.detail[1..] {
            println!("    {extra}");
        }
    }
    println!(
        "acceptance: {} passed, {} failed in {:.1}s",
        results.len() - failed,
        failed,
        started.elapsed().as_secs_f64()
    );
    let _ = std::fs::remove_dir_all(scratch("x").parent().unwrap());
    if failed > 0 {
        std::process::exit(1);
    }
}
