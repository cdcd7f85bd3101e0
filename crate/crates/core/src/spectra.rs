//! Spectra of Γ(k,q) and their derived structure.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::json;

use crate::arith::{big_pow, exact_div};
use crate::error::{Error, Result};
use crate::families::SemiprimitiveInfo;
use crate::field::FieldCtx;
use crate::periods::{gaussian_periods, Value};

/// Tolerance for grouping and comparing floating-point eigenvalues.
pub const EIGEN_TOL: f64 = 1e-6;

/// Spanning-tree products larger than this many bits are not formed.
const TREE_BIT_BUDGET: f64 = (1u64 << 24) as f64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub p: u64,
    pub m: u32,
    pub k: u64,
    pub q: u64,
    pub n: u64,
}

impl GraphSpec {
    pub fn new(p: u64, m: u32, k: u64) -> Result<Self> {
        let q = crate::arith::checked_pow(p, m)
            .ok_or_else(|| Error::InvalidParameters(format!("{p}^{m} overflows")))?;
        if k == 0 || (q - 1) % k != 0 {
            return Err(Error::NotADivisor { divisor: k.to_string(), of: (q - 1).to_string() });
        }
        if !simple(p, q, k) {
            return Err(Error::DirectedGraph { k, q: q.to_string() });
        }
        Ok(GraphSpec { p, m, k, q, n: (q - 1) / k })
    }
}

/// R_k = -R_k, i.e. q even or k | (q-1)/2.
pub fn simple(p: u64, q: u64, k: u64) -> bool {
    p == 2 || ((q - 1) / 2).is_multiple_of(k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    ClosedForm,
    Periods,
    Oracle,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::ClosedForm => "closed_form",
            Source::Periods => "periods",
            Source::Oracle => "oracle",
        }
    }
}

/// Eigenvalue multiset of Γ(k,q) or of its complement.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub q: BigInt,
    pub k: u64,
    /// Regularity degree of the graph described: n for Γ, q - 1 - n for the complement.
    pub degree: BigInt,
    pub complement: bool,
    /// Distinct eigenvalues in descending order with multiplicities.
    pub entries: Vec<(Value, BigInt)>,
    /// Number of periods equal to n.
    pub mu: u64,
    pub source: Source,
}

impl Spectrum {
    /// Sorts descending and merges equal (or, for approximations, close) values.
    pub fn new(
        q: BigInt,
        k: u64,
        degree: BigInt,
        complement: bool,
        entries: Vec<(Value, BigInt)>,
        mu: u64,
        source: Source,
    ) -> Self {
        let mut entries: Vec<_> = entries.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        entries.sort_by(|a, b| a.0.cmp_desc(&b.0));
        let mut merged: Vec<(Value, BigInt)> = Vec::with_capacity(entries.len());
        for (v, m) in entries {
            match merged.last_mut() {
                Some((last, lm)) if last.close_to(&v, EIGEN_TOL) => *lm += m,
                _ => merged.push((v, m)),
            }
        }
        Spectrum { q, k, degree, complement, entries: merged, mu, source }
    }

    pub fn is_exact(&self) -> bool {
        self.entries.iter().all(|(v, _)| v.is_exact())
    }

    pub fn exact_entries(&self) -> Result<Vec<(BigInt, BigInt)>> {
        self.entries
            .iter()
            .map(|(v, m)| v.exact().map(|v| (v.clone(), m.clone())).ok_or(Error::InexactSpectrum))
            .collect()
    }

    pub fn multiplicity(&self, lambda: &BigInt) -> BigInt {
        self.entries
            .iter()
            .find(|(v, _)| v.exact() == Some(lambda))
            .map_or_else(BigInt::zero, |(_, m)| m.clone())
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn with_source(mut self, source: Source) -> Self {
        self.source = source;
        self
    }

    /// Σ mult = q, Σ λ·mult = 0, Σ λ²·mult = q·degree, and the degree is the
    /// largest eigenvalue.
    pub fn check_invariants(&self) -> Result<()> {
        let total: BigInt = self.entries.iter().map(|(_, m)| m).sum();
        if total != self.q {
            return Err(Error::InvariantViolated(format!("Σ mult = {total}, q = {}", self.q)));
        }
        match self.exact_entries() {
            Ok(exact) => {
                let s1: BigInt = exact.iter().map(|(v, m)| v * m).sum();
                let s2: BigInt = exact.iter().map(|(v, m)| v * v * m).sum();
                if !s1.is_zero() {
                    return Err(Error::InvariantViolated(format!("Σ λ·mult = {s1}")));
                }
                if s2 != &self.q * &self.degree {
                    return Err(Error::InvariantViolated(format!("Σ λ²·mult = {s2}, q·n = {}", &self.q * &self.degree)));
                }
                if exact.first().map(|(v, _)| v) != Some(&self.degree) {
                    return Err(Error::InvariantViolated("degree is not the largest eigenvalue".into()));
                }
            }
            Err(_) => {
                let s1: f64 = self.entries.iter().map(|(v, m)| v.re() * m.to_f64().unwrap_or(f64::NAN)).sum();
                let s2: f64 = self.entries.iter().map(|(v, m)| v.re() * v.re() * m.to_f64().unwrap_or(f64::NAN)).sum();
                let qn = (&self.q * &self.degree).to_f64().unwrap_or(f64::NAN);
                let scale = qn.max(1.0);
                if s1.abs() > 1e-6 * scale || (s2 - qn).abs() > 1e-6 * scale {
                    return Err(Error::InvariantViolated(format!("approximate sums {s1}, {s2} vs q·n = {qn}")));
                }
            }
        }
        Ok(())
    }

    /// Exact multiset equality, or agreement within `tol` when either side is approximate.
    pub fn same_multiset(&self, other: &Spectrum, tol: f64) -> bool {
        self.q == other.q
            && self.degree == other.degree
            && self.entries.len() == other.entries.len()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|((a, ma), (b, mb))| ma == mb && a.close_to(b, tol))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "q": self.q.to_string(),
            "k": self.k,
            "n": self.degree.to_string(),
            "complement": self.complement,
            "entries": self.entries.iter().map(|(v, m)| json!([v.to_string(), m.to_string()])).collect::<Vec<_>>(),
            "source": self.source.as_str(),
            "exact": self.is_exact(),
        })
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{v}]^{m}")?;
        }
        write!(f, "}}")
    }
}

/// Spectrum of Γ(k,q) grouped from the Gaussian periods of index k.
pub fn gp_spectrum(ctx: &FieldCtx, k: u64) -> Result<Spectrum> {
    let q = ctx.q();
    if k == 0 || !(q - 1).is_multiple_of(k) {
        return Err(Error::NotADivisor { divisor: k.to_string(), of: (q - 1).to_string() });
    }
    if !simple(ctx.p(), q, k) {
        return Err(Error::DirectedGraph { k, q: q.to_string() });
    }
    let n = BigInt::from((q - 1) / k);
    let pv = gaussian_periods(ctx, k)?;
    let mu = pv.values.iter().filter(|v| v.exact() == Some(&n)).count() as u64;
    let mut entries = vec![(Value::Exact(n.clone()), BigInt::one())];
    entries.extend(pv.values.into_iter().map(|v| match v {
        // Periods of a symmetric connection set are real.
        Value::Approx { re, .. } => (Value::Approx { re, im: 0.0 }, n.clone()),
        exact => (exact, n.clone()),
    }));
    Ok(Spectrum::new(BigInt::from(q), k, n, false, entries, mu, Source::Periods))
}

/// Spectrum of the complement: q - 1 - n once, every other λ ↦ -1 - λ.
///
/// For disconnected Γ the extra copies of n map to -1 - n.
pub fn complement_spectrum(s: &Spectrum) -> Spectrum {
    let bar_degree = &s.q - 1u32 - &s.degree;
    let mut entries = vec![(Value::Exact(bar_degree.clone()), BigInt::one())];
    for (i, (v, m)) in s.entries.iter().enumerate() {
        let m = if i == 0 { m - 1u32 } else { m.clone() };
        let image = match v {
            Value::Exact(x) => Value::Exact(-x - 1u32),
            Value::Approx { re, im } => Value::Approx { re: -re - 1.0, im: -im },
        };
        entries.push((image, m));
    }
    Spectrum::new(s.q.clone(), s.k, bar_degree, !s.complement, entries, s.mu, s.source)
}

/// The degree eigenvalue is simple.
pub fn is_connected(s: &Spectrum) -> bool {
    s.entries.first().is_some_and(|(v, m)| v.exact() == Some(&s.degree) && m.is_one())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrgParams {
    pub v: BigInt,
    pub n: BigInt,
    pub e: BigInt,
    pub d: BigInt,
}

impl SrgParams {
    /// n(n - e - 1) = (v - n - 1)d.
    pub fn feasible(&self) -> bool {
        &self.n * (&self.n - &self.e - 1u32) == (&self.v - &self.n - 1u32) * &self.d
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({"v": self.v.to_string(), "n": self.n.to_string(), "e": self.e.to_string(), "d": self.d.to_string()})
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "srg({}, {}, {}, {})", self.v, self.n, self.e, self.d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionArray {
    pub b0: BigInt,
    pub b1: BigInt,
    pub c1: BigInt,
    pub c2: BigInt,
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}; {}, {}}}", self.b0, self.b1, self.c1, self.c2)
    }
}

/// srg parameters from n > λ1 > λ2: d = n + λ1λ2, e = d + λ1 + λ2.
pub fn srg_from_eigenvalues(v: &BigInt, n: &BigInt, l1: &BigInt, l2: &BigInt) -> SrgParams {
    let d = n + l1 * l2;
    let e = &d + l1 + l2;
    SrgParams { v: v.clone(), n: n.clone(), e, d }
}

pub fn srg_analysis(s: &Spectrum) -> Result<(SrgParams, IntersectionArray)> {
    if !is_connected(s) {
        return Err(Error::Disconnected);
    }
    let ex = s.exact_entries().map_err(|_| Error::NotSrg)?;
    if ex.len() != 3 {
        return Err(Error::NotSrg);
    }
    let srg = srg_from_eigenvalues(&s.q, &ex[0].0, &ex[1].0, &ex[2].0);
    let array = IntersectionArray {
        b0: srg.n.clone(),
        b1: &srg.n - &srg.e - 1u32,
        c1: BigInt::one(),
        c2: srg.d.clone(),
    };
    Ok((srg, array))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LatinKind {
    Latin,
    PseudoLatin,
    NegativeLatinShape,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatinSquareParams {
    pub kind: LatinKind,
    pub w: BigInt,
    /// δ for the Latin kinds, h for the negative-Latin shape.
    pub delta: BigInt,
    /// Neumaier's geometricity inequality, when it was evaluated.
    pub neumaier: Option<bool>,
}

impl LatinSquareParams {
    /// Label in the style of the srg tables: `L_δ(w)` for Latin graphs, `no` otherwise.
    pub fn table_label(&self) -> String {
        match self.kind {
            LatinKind::Latin => format!("L_{}({})", self.delta, self.w),
            _ => "no".into(),
        }
    }
}

impl fmt::Display for LatinSquareParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LatinKind::Latin => write!(f, "L_{}({})", self.delta, self.w),
            LatinKind::PseudoLatin => write!(f, "PL_{}({})", self.delta, self.w),
            LatinKind::NegativeLatinShape => write!(f, "NL~_{}({})", self.delta, self.w),
            LatinKind::None => write!(f, "none"),
        }
    }
}

/// L_δ(w) = srg(w², δ(w-1), δ²-3δ+w, δ(δ-1)).
pub fn latin_params(delta: &BigInt, w: &BigInt) -> SrgParams {
    SrgParams {
        v: w * w,
        n: delta * (w - 1u32),
        e: delta * delta - 3u32 * delta + w,
        d: delta * (delta - 1u32),
    }
}

/// srg(w², h(w+1), h²+3h-w, h(h+1)).
pub fn negative_latin_params(h: &BigInt, w: &BigInt) -> SrgParams {
    SrgParams {
        v: w * w,
        n: h * (w + 1u32),
        e: h * h + 3u32 * h - w,
        d: h * (h + 1u32),
    }
}

/// Latin-square classification of a semiprimitive Γ(k,q) or its complement.
///
/// Neumaier's inequality f + 1 <= g(g+1)(d+1)/2 is only evaluated for s >= 3;
/// it fails for some s = 1 graphs that are nonetheless Latin.
pub fn latin_square_analysis(s: &Spectrum, semi: &SemiprimitiveInfo) -> Result<LatinSquareParams> {
    let bad = |why: &str| Error::NotSemiprimitiveSpectrum(why.to_string());
    let (srg, _) = srg_analysis(s).map_err(|_| bad("not a connected 3-eigenvalue spectrum"))?;
    let ex = s.exact_entries()?;
    let (f, g) = (&ex[1].0, &ex[2].0);
    if !f.is_positive() || !g.is_negative() {
        return Err(bad("nontrivial eigenvalues are not of opposite signs"));
    }
    let w: BigInt = f - g;
    if &w * &w != s.q {
        return Err(bad("q is not (f - g)²"));
    }
    if semi.s % 2 == 1 {
        let delta = -g;
        if latin_params(&delta, &w) != srg {
            return Err(bad("parameters are not of Latin-square type"));
        }
        let neumaier = (semi.s >= 3).then(|| {
            let rhs = g * (g + 1u32) * (&srg.d + 1u32);
            BigInt::from(2) * (f + 1u32) <= rhs
        });
        let kind = if neumaier == Some(false) { LatinKind::PseudoLatin } else { LatinKind::Latin };
        Ok(LatinSquareParams { kind, w, delta, neumaier })
    } else {
        let h = f.clone();
        let kind = if negative_latin_params(&h, &w) == srg {
            LatinKind::NegativeLatinShape
        } else {
            LatinKind::None
        };
        Ok(LatinSquareParams { kind, w, delta: h, neumaier: None })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInvariants {
    pub energy: BigInt,
    /// `walks[r - 1]` counts closed walks of length r.
    pub walks: Vec<BigInt>,
    /// `None` when the product is too large to form.
    pub spanning_trees: Option<BigInt>,
}

/// Energy, closed walks and spanning trees of an exact spectrum.
pub fn spectral_invariants(s: &Spectrum, r_max: u32) -> Result<GraphInvariants> {
    let ex = s.exact_entries()?;
    let energy = ex.iter().map(|(v, m)| v.abs() * m).sum();
    let walks = (1..=r_max)
        .map(|r| ex.iter().map(|(v, m)| num_traits::pow(v.clone(), r as usize) * m).sum())
        .collect();
    Ok(GraphInvariants { energy, walks, spanning_trees: spanning_trees(s)? })
}

/// (1/q) Π_{λ ≠ n} (n - λ)^mult, omitting one copy of n.
pub fn spanning_trees(s: &Spectrum) -> Result<Option<BigInt>> {
    let ex = s.exact_entries()?;
    let n = &s.degree;
    let mut bits = 0.0f64;
    for (i, (v, m)) in ex.iter().enumerate() {
        let exp = if i == 0 { m - 1u32 } else { m.clone() };
        if exp.is_zero() {
            continue;
        }
        let base = n - v;
        if base.is_zero() {
            return Ok(Some(BigInt::zero()));
        }
        bits += exp.to_f64().unwrap_or(f64::INFINITY) * base.bits() as f64;
    }
    if bits > TREE_BIT_BUDGET {
        return Ok(None);
    }
    let mut prod = BigInt::one();
    for (i, (v, m)) in ex.iter().enumerate() {
        let exp = if i == 0 { m - 1u32 } else { m.clone() };
        let exp = exp.to_usize().expect("within bit budget");
        prod *= num_traits::pow(n - v, exp);
    }
    Ok(Some(exact_div(&prod, &s.q, "spanning tree count")?))
}

/// Energy, walks and trees in closed form for a semiprimitive Γ(k,q).
pub fn semiprimitive_invariants(semi: &SemiprimitiveInfo, r_max: u32) -> Result<GraphInvariants> {
    let (_, l2) = semi.eigenvalues()?;
    let n = semi.n();
    let sigma = BigInt::from(semi.sigma);
    let root = big_pow(semi.p, semi.m / 2);
    let km1 = BigInt::from(semi.k - 1);
    let a = &root + &sigma * &l2;
    let energy = &n * (BigInt::from(2) * &a + 1u32 + &sigma);
    let walks = (1..=r_max as usize)
        .map(|r| {
            let sr = num_traits::pow(sigma.clone(), r);
            &n * (num_traits::pow(n.clone(), r - 1)
                + sr * (num_traits::pow(a.clone(), r) + &km1 * num_traits::pow(&sigma * &l2, r)))
        })
        .collect();
    let q = semi.q();
    let spanning_trees = q.to_usize().filter(|&q| q <= 1 << 16).map(|qu| {
        let nu = n.to_usize().expect("n < q");
        // (-σ)^{q-1}
        let sign = if semi.sigma == 1 && qu % 2 == 0 { -BigInt::one() } else { BigInt::one() };
        sign * num_traits::pow(root.clone(), qu - 3)
            * num_traits::pow(&l2 + 1u32, nu)
            * num_traits::pow(l2.clone(), (semi.k as usize - 1) * nu)
    });
    Ok(GraphInvariants { energy, walks, spanning_trees })
}

/// Spectral invariants, cross-checked against the closed forms when `semi`
/// describes Γ itself.
pub fn graph_invariants(s: &Spectrum, r_max: u32, semi: Option<&SemiprimitiveInfo>) -> Result<GraphInvariants> {
    let inv = spectral_invariants(s, r_max)?;
    if let Some(semi) = semi.filter(|_| !s.complement) {
        let closed = semiprimitive_invariants(semi, r_max)?;
        if closed.energy != inv.energy {
            return Err(Error::ClosedFormMismatch(format!("energy {} vs {}", closed.energy, inv.energy)));
        }
        if closed.walks != inv.walks {
            return Err(Error::ClosedFormMismatch("closed walk counts".into()));
        }
        if let (Some(a), Some(b)) = (&closed.spanning_trees, &inv.spanning_trees) {
            if a != b {
                return Err(Error::ClosedFormMismatch("spanning tree count".into()));
            }
        }
    }
    Ok(inv)
}

/// ζ(u) = (1-u²)^exponent / Π (1 - λu - (n-1)u²)^mult.
#[derive(Clone, Debug, PartialEq)]
pub struct IharaZeta {
    pub numerator_exponent: BigInt,
    pub degree_minus_one: BigInt,
    pub factors: Vec<(Value, BigInt)>,
}

impl fmt::Display for IharaZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1-u^2)^({}) / [", self.numerator_exponent)?;
        for (i, (v, m)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let lin = match v {
                Value::Exact(x) if x.sign() == Sign::Minus => format!("1+{}u", -x),
                Value::Exact(x) if x.is_zero() => "1".to_string(),
                Value::Exact(x) => format!("1-{x}u"),
                other => format!("1-({other})u"),
            };
            write!(f, "({lin}-{}u^2)", self.degree_minus_one)?;
            if !m.is_one() {
                write!(f, "^{m}")?;
            }
        }
        write!(f, "]")
    }
}

pub fn ihara_zeta(s: &Spectrum) -> Result<IharaZeta> {
    if s.degree <= BigInt::from(2) {
        return Err(Error::DegenerateDegree(s.degree.to_string()));
    }
    let nq = &s.degree * &s.q;
    let (half, rem) = nq.div_rem(&BigInt::from(2));
    debug_assert!(rem.is_zero());
    Ok(IharaZeta {
        numerator_exponent: &s.q - half,
        degree_minus_one: &s.degree - 1u32,
        factors: s.entries.clone(),
    })
}

/// λ(Γ)² <= 4(n - 1) where λ(Γ) is the largest |λ| with |λ| ≠ n.
pub fn is_ramanujan_spectral(s: &Spectrum) -> Result<bool> {
    if !is_connected(s) {
        return Err(Error::Disconnected);
    }
    let n = &s.degree;
    let bound = BigInt::from(4) * (n - 1u32);
    match s.exact_entries() {
        Ok(ex) => {
            let lambda = ex.iter().map(|(v, _)| v.abs()).filter(|a| a != n).max();
            Ok(lambda.is_none_or(|l| &l * &l <= bound))
        }
        Err(_) => {
            let nf = n.to_f64().unwrap_or(f64::INFINITY);
            let lambda = s
                .entries
                .iter()
                .map(|(v, _)| v.re().abs())
                .filter(|a| (a - nf).abs() > EIGEN_TOL)
                .fold(0.0, f64::max);
            Ok(lambda * lambda <= bound.to_f64().unwrap_or(f64::INFINITY) + EIGEN_TOL)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;

    pub(crate) fn spec(entries: &[(i64, i64)], k: u64) -> Spectrum {
        let q: i64 = entries.iter().map(|e| e.1).sum();
        let degree = entries[0].0;
        Spectrum::new(
            q.into(),
            k,
            degree.into(),
            false,
            entries.iter().map(|&(v, m)| (Value::int(v), BigInt::from(m))).collect(),
            0,
            Source::ClosedForm,
        )
    }

    fn show(s: &Spectrum) -> String {
        s.to_string()
    }

    #[test]
    fn paley_81() {
        let s = gp_spectrum(&build_field(3, 4).unwrap(), 2).unwrap();
        assert_eq!(show(&s), "{[40]^1, [4]^40, [-5]^40}");
        s.check_invariants().unwrap();
    }

    #[test]
    fn complete_graph() {
        let s = gp_spectrum(&build_field(7, 1).unwrap(), 1).unwrap();
        assert_eq!(show(&s), "{[6]^1, [-1]^6}");
        assert_eq!(show(&complement_spectrum(&s)), "{[0]^7}");
        assert!(is_connected(&s));
        assert!(!is_connected(&complement_spectrum(&s)));
    }

    #[test]
    fn quartic_625() {
        let s = gp_spectrum(&build_field(5, 4).unwrap(), 4).unwrap();
        assert_eq!(show(&s), "{[156]^1, [16]^156, [1]^156, [-4]^156, [-14]^156}");
    }

    #[test]
    fn directed_rejected() {
        // -1 is a non-square mod 7.
        assert!(matches!(gp_spectrum(&build_field(7, 1).unwrap(), 2), Err(Error::DirectedGraph { .. })));
        assert!(GraphSpec::new(7, 1, 2).is_err());
        assert!(GraphSpec::new(7, 1, 3).is_ok());
        assert_eq!(GraphSpec::new(3, 4, 5).unwrap().n, 16);
    }

    #[test]
    fn complements() {
        let g = spec(&[(5, 1), (1, 10), (-3, 5)], 3);
        assert_eq!(show(&complement_spectrum(&g)), "{[10]^1, [2]^5, [-2]^10}");
        let g = spec(&[(16, 1), (7, 16), (-2, 64)], 5);
        assert_eq!(show(&complement_spectrum(&g)), "{[64]^1, [1]^64, [-8]^16}");
        assert_eq!(complement_spectrum(&complement_spectrum(&g)), g);
    }

    #[test]
    fn disconnected_complement_keeps_simple_principal() {
        // Γ(3,4) is a perfect matching; its complement is the 4-cycle.
        let s = gp_spectrum(&build_field(2, 2).unwrap(), 3).unwrap();
        assert_eq!(s.mu, 1);
        assert_eq!(show(&s), "{[1]^2, [-1]^2}");
        assert!(!is_connected(&s));
        let c = complement_spectrum(&s);
        assert_eq!(show(&c), "{[2]^1, [0]^2, [-2]^1}");
        c.check_invariants().unwrap();
        assert!(is_connected(&c));
    }

    #[test]
    fn srg_examples() {
        let (srg, _) = srg_analysis(&spec(&[(22, 1), (4, 132), (-5, 110)], 11)).unwrap();
        assert_eq!(srg.to_string(), "srg(243, 22, 1, 2)");
        let (srg, arr) = srg_analysis(&spec(&[(21, 1), (5, 21), (-3, 42)], 3)).unwrap();
        assert_eq!(srg.to_string(), "srg(64, 21, 8, 6)");
        assert_eq!(arr.to_string(), "{21, 12; 1, 6}");
        assert!(srg.feasible());
        let four = spec(&[(114, 1), (9, 114), (2, 114), (-12, 114)], 3);
        assert_eq!(srg_analysis(&four).unwrap_err(), Error::NotSrg);
        let matching = spec(&[(1, 2), (-1, 2)], 3);
        assert_eq!(srg_analysis(&matching).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn invariants_of_clebsch_shape() {
        let s = spec(&[(5, 1), (1, 10), (-3, 5)], 3);
        let inv = spectral_invariants(&s, 4).unwrap();
        assert_eq!(inv.energy, BigInt::from(30));
        assert_eq!(inv.walks[1], BigInt::from(80));
        assert_eq!(inv.spanning_trees, Some(BigInt::from(1u64 << 31)));
        let k7 = spec(&[(6, 1), (-1, 6)], 1);
        assert_eq!(spectral_invariants(&k7, 2).unwrap().walks[1], BigInt::from(42));
        // Cayley: K_7 has 7^5 spanning trees.
        assert_eq!(spanning_trees(&k7).unwrap(), Some(BigInt::from(16807)));
    }

    #[test]
    fn zeta_examples() {
        let s = spec(&[(5, 1), (1, 10), (-3, 5)], 3);
        assert_eq!(
            ihara_zeta(&s).unwrap().to_string(),
            "(1-u^2)^(-24) / [(1-5u-4u^2) (1-1u-4u^2)^10 (1+3u-4u^2)^5]"
        );
        let k4 = spec(&[(3, 1), (-1, 3)], 1);
        let z = ihara_zeta(&k4).unwrap();
        assert_eq!(z.numerator_exponent, BigInt::from(-2));
        let p9 = spec(&[(4, 1), (1, 4), (-2, 4)], 2);
        assert_eq!(ihara_zeta(&p9).unwrap().numerator_exponent, BigInt::from(-9));
        let cycle = spec(&[(2, 1), (0, 2), (-2, 1)], 1);
        assert!(matches!(ihara_zeta(&cycle), Err(Error::DegenerateDegree(_))));
    }

    #[test]
    fn ramanujan_examples() {
        assert!(is_ramanujan_spectral(&spec(&[(5, 1), (1, 10), (-3, 5)], 3)).unwrap());
        assert!(is_ramanujan_spectral(&spec(&[(22, 1), (4, 132), (-5, 110)], 11)).unwrap());
        assert!(is_ramanujan_spectral(&spec(&[(6, 1), (-1, 6)], 1)).unwrap());
        // Γ(13,5^4): 23² > 4·47.
        assert!(!is_ramanujan_spectral(&spec(&[(48, 1), (23, 48), (-2, 576)], 13)).unwrap());
    }
}
