//! Acceptance criteria, one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the report is always printed. Each
//! criterion also enforces its runtime bound; any failure exits with status 1.

use std::time::{Duration, Instant};

use gpspec::build_field;
use gpspec::families::{paley_spectrum, spectrum_gamma3, spectrum_gamma4};
use gpspec::oracle::{build_adjacency, oracle_spectrum, DEFAULT_ORACLE_CAP};
use gpspec::spectra::{gp_spectrum, Spectrum, EIGEN_TOL};
use gpspec::verify::{self, SuiteReport};

struct Outcome {
    pass: bool,
    detail: String,
}

fn suite_outcome(r: &SuiteReport) -> Outcome {
    let mut detail = r.summary();
    for f in r.failures().take(5) {
        detail.push_str(&format!("\n    failed {}: {}", f.name, f.detail));
    }
    Outcome { pass: r.passed(), detail }
}

fn criterion(number: u32, title: &str, limit: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut out = body();
    let elapsed = start.elapsed();
    if elapsed > limit {
        out.pass = false;
        out.detail.push_str(&format!("; runtime {elapsed:.2?} exceeds {limit:?}"));
    }
    println!(
        "criterion {number} ({title}): {} [{elapsed:.2?}] {}",
        if out.pass { "PASS" } else { "FAIL" },
        out.detail
    );
    out.pass
}

fn equal_spectra(a: &Spectrum, b: &Spectrum) -> bool {
    a.entries == b.entries
}

fn table2() -> Outcome {
    let r = verify::table2(DEFAULT_ORACLE_CAP);
    let mut out = suite_outcome(&r);
    // Two complement rows print e and d swapped; the suite must flag exactly those.
    let flagged: Vec<String> = r.discrepancies().into_iter().map(|(name, _)| name).collect();
    let expected = ["co-Γ(4,7^4)", "co-Γ(5,7^4)"];
    if flagged != expected {
        out.pass = false;
        out.detail.push_str(&format!("; flagged rows {flagged:?}, expected {expected:?}"));
    }
    let sample = r.cases.iter().find(|c| c.name == "Γ(4,3^6)").is_some_and(|c| c.pass);
    out.pass &= sample && r.cases.len() == 20;
    out.detail.push_str(&format!("; printed misprints refuted by counting: {flagged:?}"));
    out
}

fn paley() -> Outcome {
    let mut failures = Vec::new();
    for (p, m) in [(3u64, 2u32), (5, 2), (7, 2), (3, 4), (11, 2), (13, 2)] {
        let q = p.pow(m);
        let ctx = build_field(p, m).unwrap();
        let periods = gp_spectrum(&ctx, 2).unwrap();
        let closed = paley_spectrum(p, m).unwrap();
        let g = build_adjacency(&ctx, 2, DEFAULT_ORACLE_CAP).unwrap();
        let oracle = oracle_spectrum(&ctx, &g).unwrap();
        if !(equal_spectra(&periods, &closed) && equal_spectra(&periods, &oracle.spectrum) && oracle.max_gap <= EIGEN_TOL)
        {
            failures.push(q);
        }
    }
    Outcome { pass: failures.is_empty(), detail: format!("6 fields, failures {failures:?}") }
}

fn gamma34() -> Outcome {
    let mut notes = Vec::new();
    let g3 = spectrum_gamma3(7, 3).unwrap();
    let g4 = spectrum_gamma4(5, 4).unwrap();
    let mut pass = g3.to_string() == "{[114]^1, [9]^114, [2]^114, [-12]^114}"
        && g4.to_string() == "{[156]^1, [16]^156, [1]^156, [-4]^156, [-14]^156}";
    let f343 = build_field(7, 3).unwrap();
    let f625 = build_field(5, 4).unwrap();
    pass &= equal_spectra(&g3, &gp_spectrum(&f343, 3).unwrap());
    pass &= equal_spectra(&g4, &gp_spectrum(&f625, 4).unwrap());
    let o = oracle_spectrum(&f343, &build_adjacency(&f343, 3, DEFAULT_ORACLE_CAP).unwrap()).unwrap();
    pass &= equal_spectra(&g3, &o.spectrum);
    notes.push(format!("Γ(3,7^3) = {g3}"));
    notes.push(format!("Γ(4,5^4) = {g4}"));
    notes.push(format!("oracle gap {:.1e}", o.max_gap));
    Outcome { pass, detail: notes.join("; ") }
}

fn exceptional() -> Outcome {
    let r = verify::exceptional(gpspec::codes::DEFAULT_ENUM_CAP);
    let mut out = suite_outcome(&r);
    let found: Vec<(String, String)> = r
        .discrepancies()
        .into_iter()
        .map(|(name, d)| (name, d.split(':').next().unwrap_or_default().to_string()))
        .collect();
    let expected: Vec<(String, String)> = [
        ("(11,3^5)", "w1"),
        ("(35,3^12)", "w2"),
        ("(37,7^9)", "e"),
        ("(107,3^53)", "e"),
        ("(107,3^53)", "d"),
    ]
    .iter()
    .map(|&(a, b)| (a.to_string(), b.to_string()))
    .collect();
    if found != expected {
        out.pass = false;
        out.detail.push_str(&format!("; discrepancies {found:?}, expected {expected:?}"));
    }
    let w1 = r
        .discrepancies()
        .into_iter()
        .find(|(n, d)| n == "(11,3^5)" && d.starts_with("w1"))
        .map(|(_, d)| d)
        .unwrap_or_default();
    out.pass &= w1.contains("computed 12") && w1.contains("enumeration");
    let row67 = r.cases.iter().find(|c| c.name == "(67,17^33)");
    out.pass &= row67.is_some_and(|c| c.pass && c.discrepancies.is_empty());
    out.detail.push_str(&format!("; reported misprints {found:?}"));
    out
}

fn main() {
    let results = [
        criterion(1, "table of smallest semiprimitive graphs", Duration::from_secs(1), table2),
        criterion(2, "Paley closed form", Duration::from_secs(5), paley),
        criterion(3, "k = 3 and k = 4 examples", Duration::from_secs(10), gamma34),
        criterion(4, "exceptional tables", Duration::from_secs(2), exceptional),
        criterion(5, "bridge suite, q <= 8192", Duration::from_secs(120), || suite_outcome(&verify::bridge(8192))),
        criterion(6, "oracle equivalence, q <= 1024", Duration::from_secs(120), || {
            suite_outcome(&verify::oracle(1024))
        }),
        criterion(7, "Ramanujan case list, p < 50, m <= 12", Duration::from_secs(30), || {
            suite_outcome(&verify::ramanujan(50, 12))
        }),
        criterion(8, "structural invariants", Duration::from_secs(60), || suite_outcome(&verify::invariants(1024, 256))),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria PASS", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
