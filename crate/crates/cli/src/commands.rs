use gpspec::codes::{
    code_params, min_distance_bound, weight_distribution_enumerate, weights_from_spectrum, WeightDistribution,
};
use gpspec::families::{
    classify_semiprimitive, enumerate_semiprimitive_pairs, exceptional_records, exceptional_spectrum, paley_spectrum,
    power_plus_one_exponent, ramanujan_case, semiprimitive_spectrum, spectrum_gamma3, spectrum_gamma4,
    SemiprimitiveInfo,
};
use gpspec::field::{build_field, is_primitive_divisor};
use gpspec::oracle::{build_adjacency, oracle_spectrum};
use gpspec::reference::{EXCEPTIONAL_TABLES, TABLE1};
use gpspec::spectra::{
    complement_spectrum, gp_spectrum, graph_invariants, ihara_zeta, is_connected, is_ramanujan_spectral,
    latin_square_analysis, srg_analysis, GraphSpec, Spectrum, EIGEN_TOL,
};
use gpspec::verify::{self, is_bold, SuiteReport};
use gpspec::{Error, Result};
use num_bigint::BigInt;
use serde_json::json;

use crate::report::RunReport;
use crate::Instance;

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub oracle: u64,
    pub enumerate: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct SpectrumFlags {
    pub oracle: bool,
    pub complement: bool,
    pub invariants: bool,
    pub zeta: bool,
}

fn graph_name(inst: Instance) -> String {
    format!("Γ({},{}^{})", inst.k, inst.p, inst.m)
}

/// Closed form when one applies, the periods path otherwise.
fn best_spectrum(inst: Instance) -> Result<(Spectrum, &'static str)> {
    let Instance { p, m, k } = inst;
    if classify_semiprimitive(k, p, m).is_some() {
        return Ok((semiprimitive_spectrum(k, p, m)?.0, "closed form (semiprimitive)"));
    }
    if k == 2 && m % 2 == 1 {
        if let Ok(s) = paley_spectrum(p, m) {
            return Ok((s, "closed form (Paley)"));
        }
    }
    if k == 3 {
        if let Ok(s) = spectrum_gamma3(p, m) {
            return Ok((s, "closed form (k = 3)"));
        }
    }
    if k == 4 {
        if let Ok(s) = spectrum_gamma4(p, m) {
            return Ok((s, "closed form (k = 4)"));
        }
    }
    if let Some(rec) = exceptional_records().into_iter().find(|r| (r.k, r.p, r.m) == (k, p, m)) {
        return Ok((exceptional_spectrum(&rec)?.spectrum, "closed form (exceptional pair)"));
    }
    Ok((gp_spectrum(&build_field(p, m)?, k)?, "Gaussian periods"))
}

fn connectivity_detail(inst: Instance) -> String {
    let Instance { p, m, k } = inst;
    let mut why = format!("n = (q-1)/{k} is not a primitive divisor of q-1");
    if m % 2 == 0 && power_plus_one_exponent(k, p) == Some(m / 2) {
        why.push_str(&format!("; k = {p}^{} + 1", m / 2));
    }
    why
}

fn semiprimitive_summary(report: &mut RunReport, prefix: &str, s: &Spectrum, info: &SemiprimitiveInfo) {
    if prefix.is_empty() {
        report.row("t, s, σ", format!("{}, {}, {:+}", info.t, info.s, info.sigma));
        report.result("semiprimitive", json!({"t": info.t, "s": info.s, "sigma": info.sigma}));
    }
    if let Ok(l) = latin_square_analysis(s, info) {
        report.row(&format!("{prefix}latin square"), format!("{l} (table label: {})", l.table_label()));
        report.result(&format!("{prefix}latin"), json!({"label": l.table_label(), "kind": format!("{:?}", l.kind), "w": l.w.to_string(), "delta": l.delta.to_string()}));
    }
}

fn structure(report: &mut RunReport, prefix: &str, s: &Spectrum, semi: Option<&SemiprimitiveInfo>) -> Result<()> {
    if let Ok((srg, array)) = srg_analysis(s) {
        report.row(&format!("{prefix}srg"), format!("{srg}, intersection array {array}"));
        report.result(&format!("{prefix}srg"), srg.to_json());
        if let Some(info) = semi {
            semiprimitive_summary(report, prefix, s, info);
        }
    }
    if is_connected(s) {
        let ram = is_ramanujan_spectral(s)?;
        report.row(&format!("{prefix}ramanujan"), if ram { "yes" } else { "no" });
        report.result(&format!("{prefix}ramanujan"), json!(ram));
    }
    Ok(())
}

pub fn spectrum(echo: &str, inst: Instance, caps: Caps, flags: SpectrumFlags) -> Result<RunReport> {
    let spec = GraphSpec::new(inst.p, inst.m, inst.k)?;
    let mut report = RunReport::new(echo);
    let (s, path) = best_spectrum(inst)?;
    let semi = classify_semiprimitive(inst.k, inst.p, inst.m);
    report.row("graph", graph_name(inst));
    report.row("q, n", format!("{}, {}", spec.q, spec.n));
    report.row("path", path);
    report.row("spectrum", &s);
    report.result("spectrum", s.to_json());
    report.result("path", json!(path));

    report.check("spectrum invariants", s.check_invariants().is_ok(), "Σ mult = q, Σ λ mult = 0, Σ λ² mult = q n");
    let connected = is_connected(&s);
    report.check("connected", connected, if connected { String::new() } else { connectivity_detail(inst) });

    if path.starts_with("closed form") && spec.q <= caps.enumerate {
        let periods = gp_spectrum(&build_field(inst.p, inst.m)?, inst.k)?;
        report.check("periods path agrees", periods.same_multiset(&s, EIGEN_TOL), format!("periods give {periods}"));
    }
    if flags.oracle {
        let ctx = build_field(inst.p, inst.m)?;
        let g = build_adjacency(&ctx, inst.k, caps.oracle)?;
        let o = oracle_spectrum(&ctx, &g)?;
        report.result("oracle", json!({"spectrum": o.spectrum.to_json(), "max_gap": o.max_gap}));
        report.check(
            "oracle agrees",
            o.spectrum.same_multiset(&s, EIGEN_TOL),
            format!("oracle {} (paths within {:.1e})", o.spectrum, o.max_gap),
        );
    }
    if flags.invariants {
        structure(&mut report, "", &s, semi.as_ref())?;
        if s.is_exact() {
            let inv = match graph_invariants(&s, 4, semi.as_ref()) {
                Err(Error::ClosedFormMismatch(why)) => {
                    report.check("closed-form invariants agree", false, why);
                    graph_invariants(&s, 4, None)?
                }
                Err(e) => return Err(e),
                Ok(inv) => {
                    if semi.is_some() {
                        report.check("closed-form invariants agree", true, "energy, walks and trees");
                    }
                    inv
                }
            };
            report.row("energy", &inv.energy);
            let walks: Vec<String> = inv.walks.iter().map(BigInt::to_string).collect();
            report.row("closed walks r=1..4", walks.join(", "));
            let trees = inv.spanning_trees.as_ref().map_or_else(|| "not formed".to_string(), BigInt::to_string);
            report.row("spanning trees", &trees);
            report.result(
                "invariants",
                json!({"energy": inv.energy.to_string(), "walks": walks, "spanning_trees": inv.spanning_trees.as_ref().map(BigInt::to_string)}),
            );
        } else {
            report.note("spectrum is not integral; invariants are only formed for exact spectra");
        }
    }
    if flags.complement {
        let bar = match semi {
            Some(_) => semiprimitive_spectrum(inst.k, inst.p, inst.m)?.1,
            None => complement_spectrum(&s),
        };
        report.row("complement", &bar);
        report.result("complement", bar.to_json());
        report.check("complement invariants", bar.check_invariants().is_ok(), "");
        if flags.invariants {
            structure(&mut report, "complement ", &bar, semi.as_ref())?;
        }
    }
    if flags.zeta {
        match ihara_zeta(&s) {
            Ok(z) => {
                report.row("ihara zeta", &z);
                report.result("ihara_zeta", json!(z.to_string()));
            }
            Err(e) => report.note(format!("ihara zeta: {e}")),
        }
    }
    Ok(report)
}

fn printed_weight_notes(report: &mut RunReport, inst: Instance, wd: &WeightDistribution) {
    let Some(row) = EXCEPTIONAL_TABLES.iter().find(|r| (r.k, r.p, r.m) == (inst.k, inst.p, inst.m)) else {
        return;
    };
    let got: Vec<String> = wd.entries.iter().skip(1).map(|(w, _)| w.to_string()).collect();
    for (label, printed) in [("w1", row.w1), ("w2", row.w2)] {
        if !got.iter().any(|w| w == printed) {
            report.note(format!("published {label} = {printed} does not occur; computed weights {}", got.join(", ")));
        }
    }
}

pub fn code(echo: &str, inst: Instance, caps: Caps, enumerate: bool, bridge: bool) -> Result<RunReport> {
    let spec = code_params(inst.p, inst.m, inst.k)?;
    let mut report = RunReport::new(echo);
    report.row("code", format!("C({},{}^{})", inst.k, inst.p, inst.m));
    report.row("length n, N, dimension", format!("{}, {}, {}", spec.n, spec.big_n, spec.dimension));
    report.result(
        "code",
        json!({"p": spec.p, "m": spec.m, "k": spec.k, "N": spec.big_n, "n": spec.n, "dimension": spec.dimension}),
    );
    let (enumerate, bridge) = match (enumerate, bridge) {
        (false, false) => (spec.q() <= caps.enumerate, spec.q() > caps.enumerate),
        flags => flags,
    };

    let enumerated = if enumerate {
        let ctx = build_field(inst.p, inst.m)?;
        let wd = weight_distribution_enumerate(&ctx, inst.k, caps.enumerate)?;
        report.row("enumerated", &wd);
        report.result("enumerated", wd.to_json());
        Some(wd)
    } else {
        None
    };
    let bridged = if bridge {
        if !spec.bridge_applies() {
            return Err(Error::BridgeInapplicable { k: spec.k, n_gcd: spec.big_n });
        }
        GraphSpec::new(inst.p, inst.m, inst.k)?;
        let (s, path) = best_spectrum(Instance { p: inst.p, m: inst.m, k: inst.k })?;
        let wd = weights_from_spectrum(&s, inst.p)?;
        report.row("from spectrum", format!("{wd} via {path}"));
        report.result("bridged", wd.to_json());
        Some(wd)
    } else {
        if enumerate && !spec.bridge_applies() {
            report.note(format!("spectrum bridge refused: N = {} ≠ k = {}", spec.big_n, spec.k));
        }
        None
    };
    if let (Some(a), Some(b)) = (&enumerated, &bridged) {
        report.check("enumeration equals bridge", a == b, format!("{a} vs {b}"));
    }
    if let Some(wd) = enumerated.as_ref().or(bridged.as_ref()) {
        let p1 = BigInt::from(inst.p - 1);
        if spec.bridge_applies() {
            report.check(
                "weights divisible by p-1",
                wd.entries.iter().all(|(w, _)| (w % &p1) == BigInt::from(0)),
                "",
            );
        }
        if let Some(d) = wd.min_distance() {
            let b = min_distance_bound(&wd.n, inst.p, d);
            report.row("minimum distance", format!("{d} (bound {:.3})", b.bound));
            if spec.bridge_applies() && is_primitive_divisor(inst.p, inst.m, inst.k)? && b.hypothesis {
                let ram = GraphSpec::new(inst.p, inst.m, inst.k)
                    .ok()
                    .and_then(|_| best_spectrum(inst).ok())
                    .and_then(|(s, _)| is_ramanujan_spectral(&s).ok());
                if ram == Some(true) {
                    report.check("minimum distance bound (Ramanujan graph)", b.satisfied, format!("d = {d}"));
                }
            }
        }
        printed_weight_notes(&mut report, inst, wd);
    }
    Ok(report)
}

fn suite_report(echo: &str, r: SuiteReport) -> RunReport {
    let mut report = RunReport::new(echo);
    report.result("suite", r.to_json());
    for c in &r.cases {
        let line = if c.detail.is_empty() {
            format!("{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name)
        } else {
            format!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail)
        };
        report.body.push(line);
        for d in &c.discrepancies {
            report.body.push(format!("     printed value refuted: {d}"));
        }
    }
    report.check(r.summary(), r.passed(), "");
    report
}

pub fn verify(echo: &str, suite: &str, max_q: Option<u64>, p_max: u64, m_max: u32, caps: Caps) -> Result<RunReport> {
    let r = match (suite, max_q) {
        ("bridge", Some(q)) => verify::bridge(q),
        ("oracle", Some(q)) => verify::oracle(q.min(caps.oracle)),
        ("invariants", Some(q)) => verify::invariants(q.min(caps.oracle), q.min(256)),
        ("ramanujan", _) => verify::ramanujan(p_max, m_max),
        ("table2", _) => verify::table2(caps.oracle),
        ("exceptional", _) => verify::exceptional(caps.enumerate),
        (name, _) => verify::run_suite(name)?,
    };
    Ok(suite_report(echo, r))
}

pub fn sweep(echo: &str, p_max: u64, m_max: u32, semiprimitive: bool, ramanujan: bool) -> Result<RunReport> {
    let mut report = RunReport::new(echo);
    let mut rows = Vec::new();
    report.body.push(format!(
        "{:>5} {:>3} {:>8} {:>3} {:>3} {:>3} {:>5} {:>9} {:>10}  latin",
        "p", "m", "k", "t", "s", "σ", "bold", "ramanujan", "case"
    ));
    let mut mismatches = 0;
    for p in (2..=p_max).filter(|&p| gpspec::arith::is_prime(p)) {
        for m in (2..=m_max).step_by(2) {
            let pairs = enumerate_semiprimitive_pairs(p, m)?;
            if semiprimitive {
                if let Some(&(_, _, printed)) = TABLE1.iter().find(|r| (r.0, r.1) == (p, m)) {
                    let got: Vec<(u64, bool)> = pairs.iter().map(|(k, _)| (*k, is_bold(*k, p, m))).collect();
                    if got != printed {
                        report.note(format!("{p}^{m}: computed {got:?}, published {printed:?}"));
                    }
                }
            }
            for (k, info) in pairs {
                let (g, _) = semiprimitive_spectrum(k, p, m)?;
                let spectral = is_ramanujan_spectral(&g)?;
                let case = ramanujan_case(k, p, m);
                if case.is_some() != spectral {
                    mismatches += 1;
                }
                if ramanujan && !spectral {
                    continue;
                }
                let label = latin_square_analysis(&g, &info).map(|l| l.table_label()).unwrap_or_else(|_| "no".into());
                report.body.push(format!(
                    "{p:>5} {m:>3} {k:>8} {:>3} {:>3} {:>+3} {:>5} {:>9} {:>10}  {label}",
                    info.t,
                    info.s,
                    info.sigma,
                    if is_bold(k, p, m) { "yes" } else { "" },
                    if spectral { "yes" } else { "no" },
                    case.map_or("-".to_string(), |c| c.to_string()),
                ));
                rows.push(json!({
                    "p": p, "m": m, "k": k, "t": info.t, "s": info.s, "sigma": info.sigma,
                    "bold": is_bold(k, p, m), "ramanujan": spectral,
                    "case": case.map(|c| c.to_string()), "latin": label,
                }));
            }
        }
    }
    report.row("pairs", rows.len());
    report.result("pairs", json!(rows));
    report.check("case list agrees with spectral test", mismatches == 0, format!("{mismatches} disagreements"));
    Ok(report)
}

pub fn exceptional(echo: &str) -> Result<RunReport> {
    let mut report = RunReport::new(echo);
    let mut rows = Vec::new();
    for rec in exceptional_records() {
        let d = exceptional_spectrum(&rec)?;
        report.body.push(format!(
            "({},{}^{}) θ={} t={} ε={:+}: {}, λ = {}, {} with m = {}, {}; w = {}, {}",
            rec.k, rec.p, rec.m, rec.theta, rec.t, rec.epsilon, d.srg, d.lambda1, d.lambda2, d.m1, d.m2, d.w1, d.w2
        ));
        rows.push(json!({
            "k": rec.k, "p": rec.p, "m": rec.m, "theta": rec.theta, "t": rec.t, "epsilon": rec.epsilon,
            "q": d.q.to_string(), "n": d.n.to_string(),
            "lambda1": d.lambda1.to_string(), "lambda2": d.lambda2.to_string(),
            "m1": d.m1.to_string(), "m2": d.m2.to_string(),
            "w1": d.w1.to_string(), "w2": d.w2.to_string(),
            "srg": d.srg.to_json(),
        }));
        report.check(format!("({},{}^{}) feasible", rec.k, rec.p, rec.m), d.srg.feasible(), "");
    }
    report.result("records", json!(rows));
    Ok(report)
}
