//! Irreducible cyclic codes C(k,q) = {(Tr(γω^{ki}))_{i<n} : γ ∈ F_q}.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::arith::{big_pow, checked_pow, exact_div, multiplicative_order};
use crate::error::{Error, Result};
use crate::families::classify_semiprimitive;
use crate::field::{FieldCtx, FieldElement};
use crate::periods::Value;
use crate::spectra::{gp_spectrum, is_connected, srg_analysis, Source, Spectrum};

pub const DEFAULT_ENUM_CAP: u64 = 1 << 20;
/// Trace lookups allowed for one enumeration.
pub const ENUM_BUDGET: u64 = 1 << 34;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    pub p: u64,
    pub m: u32,
    pub k: u64,
    /// gcd((q-1)/(p-1), k).
    pub big_n: u64,
    /// Code length (q-1)/N.
    pub n: u64,
    /// Dimension over F_p: degree of ω^k over F_p.
    pub dimension: u32,
}

impl CodeSpec {
    pub fn q(&self) -> u64 {
        self.p.pow(self.m)
    }

    /// The spectrum bridge needs N = k.
    pub fn bridge_applies(&self) -> bool {
        self.big_n == self.k
    }
}

pub fn code_params(p: u64, m: u32, k: u64) -> Result<CodeSpec> {
    let q = checked_pow(p, m).ok_or_else(|| Error::InvalidParameters(format!("{p}^{m} overflows")))?;
    if k == 0 || (q - 1) % k != 0 {
        return Err(Error::NotADivisor { divisor: k.to_string(), of: (q - 1).to_string() });
    }
    let big_n = ((q - 1) / (p - 1)).gcd(&k);
    let order = (q - 1) / k;
    let dimension = if order == 1 { 1 } else { multiplicative_order(p, order) as u32 };
    Ok(CodeSpec { p, m, k, big_n, n: (q - 1) / big_n, dimension })
}

/// Weight/frequency list, ascending by weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub p: u64,
    pub m: u32,
    pub k: u64,
    pub big_n: u64,
    pub n: BigInt,
    pub entries: Vec<(BigInt, BigInt)>,
}

impl WeightDistribution {
    /// Merges repeated weights, sorts, and checks A_0 = 1, 0 <= w <= n and that
    /// Σ A_w = p^a for some a <= m (a = m unless the code is degenerate).
    pub fn new(p: u64, m: u32, k: u64, big_n: u64, n: BigInt, entries: Vec<(BigInt, BigInt)>) -> Result<Self> {
        let mut merged: BTreeMap<BigInt, BigInt> = BTreeMap::new();
        for (w, a) in entries {
            if !a.is_zero() {
                *merged.entry(w).or_insert_with(BigInt::zero) += a;
            }
        }
        let entries: Vec<_> = merged.into_iter().collect();
        let bad = |why: String| Err(Error::InvalidWeights(why));
        if entries.first().map(|(w, a)| (w.is_zero(), a.is_one())) != Some((true, true)) {
            return bad("A_0 must be 1".into());
        }
        if entries.iter().any(|(w, _)| w.is_negative() || w > &n) {
            return bad("weight outside [0, n]".into());
        }
        let total: BigInt = entries.iter().map(|(_, a)| a).sum();
        if !(0..=m).any(|a| total == big_pow(p, a)) {
            return bad(format!("Σ A_w = {total} is not a power of p up to q"));
        }
        Ok(WeightDistribution { p, m, k, big_n, n, entries })
    }

    pub fn size(&self) -> BigInt {
        self.entries.iter().map(|(_, a)| a).sum()
    }

    pub fn nonzero_weights(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn min_distance(&self) -> Option<&BigInt> {
        self.entries.get(1).map(|(w, _)| w)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "p": self.p,
            "m": self.m,
            "k": self.k,
            "N": self.big_n,
            "n": self.n.to_string(),
            "entries": self.entries.iter().map(|(w, a)| json!([w.to_string(), a.to_string()])).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, a)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}:{a}")?;
        }
        write!(f, "}}")
    }
}

fn spec_for(ctx: &FieldCtx, k: u64) -> Result<CodeSpec> {
    code_params(ctx.p(), ctx.m(), k)
}

/// (Tr(γω^{ki}))_{i=0}^{n-1}.
pub fn codeword(ctx: &FieldCtx, gamma: FieldElement, k: u64) -> Result<Vec<u32>> {
    let spec = spec_for(ctx, k)?;
    let trace = ctx.trace_table()?;
    let Some(j) = gamma.log() else {
        return Ok(vec![0; spec.n as usize]);
    };
    let ord = ctx.order();
    Ok((0..spec.n).map(|i| trace[((j as u128 + k as u128 * i as u128) % ord as u128) as usize]).collect())
}

/// Hamming weight of c_{ω^j}.
fn weight_of_log(trace: &[u32], j: u64, k: u64, n: u64) -> u64 {
    let ord = trace.len() as u64;
    let mut idx = j % ord;
    let step = k % ord;
    let mut w = 0;
    for _ in 0..n {
        w += (trace[idx as usize] != 0) as u64;
        idx += step;
        if idx >= ord {
            idx -= ord;
        }
    }
    w
}

fn enumeration_guard(ctx: &FieldCtx, cap: u64, work: u128) -> Result<()> {
    if ctx.q() > cap || !ctx.has_tables() {
        return Err(Error::FieldTooLarge { q: ctx.q().to_string(), cap });
    }
    if work > ENUM_BUDGET as u128 {
        return Err(Error::FieldTooLarge { q: ctx.q().to_string(), cap });
    }
    Ok(())
}

/// Weight distribution from one codeword per coset of ⟨ω^k⟩.
///
/// Multiplying γ by ω^k cyclically shifts c_γ, so the weight is constant on
/// each of the k cosets.
pub fn weight_distribution_enumerate(ctx: &FieldCtx, k: u64, cap: u64) -> Result<WeightDistribution> {
    let spec = spec_for(ctx, k)?;
    enumeration_guard(ctx, cap, k as u128 * spec.n as u128)?;
    let trace = ctx.trace_table()?;
    let coset = (ctx.order() / k) as u128;
    let mut tally: BTreeMap<u64, u128> = BTreeMap::new();
    let weights: Vec<u64> = (0..k).into_par_iter().map(|j| weight_of_log(trace, j, k, spec.n)).collect();
    for w in weights {
        *tally.entry(w).or_default() += coset;
    }
    *tally.entry(0).or_default() += 1;
    into_distribution(&spec, tally)
}

/// Weight distribution from all q codewords.
pub fn weight_distribution_full(ctx: &FieldCtx, k: u64, cap: u64) -> Result<WeightDistribution> {
    let spec = spec_for(ctx, k)?;
    enumeration_guard(ctx, cap, ctx.q() as u128 * spec.n as u128)?;
    let trace = ctx.trace_table()?;
    let tally = (0..ctx.order())
        .into_par_iter()
        .fold(BTreeMap::<u64, u128>::new, |mut acc, j| {
            *acc.entry(weight_of_log(trace, j, k, spec.n)).or_default() += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (w, c) in b {
                *a.entry(w).or_default() += c;
            }
            a
        });
    let mut tally = tally;
    *tally.entry(0).or_default() += 1;
    into_distribution(&spec, tally)
}

/// Each codeword arises from p^{m-dim} values of γ; frequencies count distinct codewords.
fn into_distribution(spec: &CodeSpec, tally: BTreeMap<u64, u128>) -> Result<WeightDistribution> {
    let fibre = (spec.p as u128).pow(spec.m - spec.dimension);
    if tally.values().any(|a| a % fibre != 0) {
        return Err(Error::InvariantViolated(format!("frequencies not divisible by fibre size {fibre}")));
    }
    WeightDistribution::new(
        spec.p,
        spec.m,
        spec.k,
        spec.big_n,
        BigInt::from(spec.n),
        tally.into_iter().map(|(w, a)| (BigInt::from(w), BigInt::from(a / fibre))).collect(),
    )
}

/// p, m with q = p^m, recovered from the spectrum's q.
fn exponent_of(q: &BigInt, p: u64) -> Result<u32> {
    let mut r = q.clone();
    let mut m = 0;
    let pb = BigInt::from(p);
    while r > BigInt::one() {
        let (quot, rem) = r.div_rem(&pb);
        if !rem.is_zero() {
            return Err(Error::InvalidParameters(format!("{q} is not a power of {p}")));
        }
        r = quot;
        m += 1;
    }
    Ok(m)
}

fn bridge_gcd(q: &BigInt, p: u64, k: u64) -> u64 {
    let s = (q - 1u32) / BigInt::from(p - 1);
    s.gcd(&BigInt::from(k)).to_u64().expect("divides k")
}

/// w = (p-1)(n-λ)/p for each eigenvalue, frequencies from multiplicities.
pub fn weights_from_spectrum(s: &Spectrum, p: u64) -> Result<WeightDistribution> {
    let n_gcd = bridge_gcd(&s.q, p, s.k);
    if n_gcd != s.k || s.complement {
        return Err(Error::BridgeInapplicable { k: s.k, n_gcd });
    }
    if !is_connected(s) {
        return Err(Error::Disconnected);
    }
    let m = exponent_of(&s.q, p)?;
    let pm1 = BigInt::from(p - 1);
    let pb = BigInt::from(p);
    let entries = s
        .exact_entries()?
        .into_iter()
        .map(|(l, mult)| Ok((exact_div(&(&pm1 * (&s.degree - l)), &pb, "weight (p-1)(n-λ)/p")?, mult)))
        .collect::<Result<Vec<_>>>()?;
    WeightDistribution::new(p, m, s.k, n_gcd, s.degree.clone(), entries)
}

/// λ = n - p·w/(p-1), inverse of [`weights_from_spectrum`].
pub fn spectrum_from_weights(wd: &WeightDistribution) -> Result<Spectrum> {
    let q = big_pow(wd.p, wd.m);
    let n_gcd = bridge_gcd(&q, wd.p, wd.k);
    if n_gcd != wd.k {
        return Err(Error::BridgeInapplicable { k: wd.k, n_gcd });
    }
    if wd.entries.len() < 2 {
        return Err(Error::InvalidWeights("no nonzero codewords".into()));
    }
    let pm1 = BigInt::from(wd.p - 1);
    let pb = BigInt::from(wd.p);
    let entries = wd
        .entries
        .iter()
        .map(|(w, a)| Ok((Value::Exact(&wd.n - exact_div(&(&pb * w), &pm1, "eigenvalue n - pw/(p-1)")?), a.clone())))
        .collect::<Result<Vec<_>>>()?;
    let s = Spectrum::new(q, wd.k, wd.n.clone(), false, entries, 0, Source::Periods);
    s.check_invariants()?;
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoWeightReport {
    pub srg: bool,
    pub two_weight: bool,
}

impl TwoWeightReport {
    pub fn agrees(&self) -> bool {
        self.srg == self.two_weight
    }
}

/// Γ(k,q) is strongly regular iff C(k,q) has exactly two nonzero weights,
/// each side computed independently.
pub fn two_weight_srg_check(ctx: &FieldCtx, k: u64, cap: u64) -> Result<TwoWeightReport> {
    let spec = spec_for(ctx, k)?;
    if !spec.bridge_applies() {
        return Err(Error::PreconditionViolated(format!("k = {k} ∤ (q-1)/(p-1)")));
    }
    if !crate::field::is_primitive_divisor(ctx.p(), ctx.m(), k)? {
        return Err(Error::PreconditionViolated(format!("n = {} is not a primitive divisor", spec.n)));
    }
    let srg = srg_analysis(&gp_spectrum(ctx, k)?).is_ok();
    let two_weight = weight_distribution_full(ctx, k, cap)?.nonzero_weights() == 2;
    Ok(TwoWeightReport { srg, two_weight })
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinDistanceBound {
    /// ((p-1)/p)(n - 2√(n-1)), for display only.
    pub bound: f64,
    /// d >= bound, decided exactly.
    pub satisfied: bool,
    /// p·d <= (p-1)n.
    pub hypothesis: bool,
}

/// d >= ((p-1)/p)(n - 2√(n-1)) decided in integers: with X = (p-1)n - pd,
/// the bound holds iff X <= 0 or X² <= 4(n-1)(p-1)².
pub fn min_distance_bound(n: &BigInt, p: u64, d: &BigInt) -> MinDistanceBound {
    let pm1 = BigInt::from(p - 1);
    let x = &pm1 * n - BigInt::from(p) * d;
    let satisfied = !x.is_positive() || &x * &x <= BigInt::from(4) * (n - 1u32) * &pm1 * &pm1;
    let nf = n.to_f64().unwrap_or(f64::INFINITY);
    let bound = (p - 1) as f64 / p as f64 * (nf - 2.0 * (nf - 1.0).max(0.0).sqrt());
    MinDistanceBound { bound, satisfied, hypothesis: !x.is_negative() }
}

/// ((w1, n), (w2, (k-1)n)) with w1 = (p-1)p^{m/2-1}(p^{m/2} - σ(k-1))/k and
/// w2 = (p-1)p^{m/2-1}(p^{m/2} + σ)/k.
#[allow(clippy::type_complexity)]
pub fn semiprimitive_weights(k: u64, p: u64, m: u32) -> Result<((BigInt, BigInt), (BigInt, BigInt))> {
    let info = classify_semiprimitive(k, p, m).ok_or(Error::NotSemiprimitive { k, p, m })?;
    let kb = BigInt::from(k);
    let sigma = BigInt::from(info.sigma);
    let root = info.sqrt_q();
    let front = BigInt::from(p - 1) * big_pow(p, m / 2 - 1);
    let w1 = exact_div(&(&front * (&root - &sigma * (&kb - 1u32))), &kb, "semiprimitive w1")?;
    let w2 = exact_div(&(&front * (&root + &sigma)), &kb, "semiprimitive w2")?;
    let n = info.n();
    Ok(((w1, n.clone()), (w2, (&kb - 1u32) * n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;

    #[test]
    fn parameters() {
        let c = code_params(3, 5, 11).unwrap();
        assert_eq!((c.big_n, c.n, c.dimension), (11, 22, 5));
        let c = code_params(2, 4, 3).unwrap();
        assert_eq!((c.big_n, c.n), (3, 5));
        let c = code_params(5, 2, 8).unwrap();
        assert_eq!((c.big_n, c.n), (2, 12));
        assert!(!c.bridge_applies());
        assert!(code_params(3, 5, 4).is_err());
        // ω^5 in F_16 has order 3 and lies in F_4.
        assert_eq!(code_params(2, 4, 5).unwrap().dimension, 2);
    }

    #[test]
    fn codewords_of_f16() {
        let ctx = build_field(2, 4).unwrap();
        assert_eq!(codeword(&ctx, FieldElement::Zero, 3).unwrap(), vec![0; 5]);
        let c = codeword(&ctx, ctx.one(), 3).unwrap();
        let w = c.iter().filter(|&&x| x != 0).count();
        assert!(w == 2 || w == 4);
        for j in 0..15 {
            let base = codeword(&ctx, ctx.element(j), 3).unwrap();
            let mut shifted = base.clone();
            shifted.rotate_left(1);
            assert_eq!(codeword(&ctx, ctx.element(j + 3), 3).unwrap(), shifted);
        }
    }

    #[test]
    fn small_distributions() {
        let f16 = build_field(2, 4).unwrap();
        assert_eq!(weight_distribution_enumerate(&f16, 3, DEFAULT_ENUM_CAP).unwrap().to_string(), "{0:1, 2:10, 4:5}");
        let f243 = build_field(3, 5).unwrap();
        let wd = weight_distribution_full(&f243, 11, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(wd.to_string(), "{0:1, 12:132, 18:110}");
        // C(2,9): length 4 ternary, weights from the P(9) spectrum {[1]^4, [-2]^4}.
        let f9 = build_field(3, 2).unwrap();
        assert_eq!(weight_distribution_full(&f9, 2, DEFAULT_ENUM_CAP).unwrap().to_string(), "{0:1, 2:4, 4:4}");
    }

    #[test]
    fn degenerate_code_counts_distinct_codewords() {
        // ω^5 ∈ F_4, so C(5,16) is the binary [3,2] simplex code.
        let wd = weight_distribution_full(&build_field(2, 4).unwrap(), 5, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(wd.to_string(), "{0:1, 2:3}");
        assert_eq!(wd.size(), 4.into());
    }

    #[test]
    fn fast_and_full_paths_agree() {
        for (p, m) in [(2u64, 6u32), (2, 8), (3, 4), (3, 5), (5, 3), (7, 2), (2, 9), (13, 2)] {
            let ctx = build_field(p, m).unwrap();
            for k in crate::arith::divisors(ctx.order()) {
                let fast = weight_distribution_enumerate(&ctx, k, DEFAULT_ENUM_CAP).unwrap();
                let full = weight_distribution_full(&ctx, k, DEFAULT_ENUM_CAP).unwrap();
                assert_eq!(fast, full, "q={p}^{m} k={k}");
            }
        }
    }

    #[test]
    fn enumeration_caps() {
        let ctx = build_field(2, 8).unwrap();
        assert!(matches!(weight_distribution_full(&ctx, 3, 100), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn bridge_examples() {
        let ctx = build_field(3, 5).unwrap();
        let s = gp_spectrum(&ctx, 11).unwrap();
        let wd = weights_from_spectrum(&s, 3).unwrap();
        assert_eq!(wd.to_string(), "{0:1, 12:132, 18:110}");
        assert_eq!(spectrum_from_weights(&wd).unwrap().entries, s.entries);

        let f16 = WeightDistribution::new(
            2,
            4,
            3,
            3,
            5.into(),
            vec![(0.into(), 1.into()), (2.into(), 10.into()), (4.into(), 5.into())],
        )
        .unwrap();
        assert_eq!(spectrum_from_weights(&f16).unwrap().to_string(), "{[5]^1, [1]^10, [-3]^5}");

        let g = gp_spectrum(&build_field(7, 2).unwrap(), 3).unwrap();
        assert!(matches!(weights_from_spectrum(&g, 7), Err(Error::BridgeInapplicable { k: 3, n_gcd: 1 })));
        let zero = WeightDistribution::new(2, 2, 3, 3, 1.into(), vec![(0.into(), 1.into())]).unwrap();
        assert!(matches!(spectrum_from_weights(&zero), Err(Error::InvalidWeights(_))));
        assert!(WeightDistribution::new(2, 2, 3, 3, 1.into(), vec![(0.into(), 2.into()), (1.into(), 2.into())]).is_err());
        assert!(WeightDistribution::new(2, 2, 3, 3, 1.into(), vec![(0.into(), 1.into()), (1.into(), 2.into())]).is_err());
    }

    #[test]
    fn two_weight_examples() {
        let r = two_weight_srg_check(&build_field(3, 4).unwrap(), 5, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(r, TwoWeightReport { srg: true, two_weight: true });
        let r = two_weight_srg_check(&build_field(7, 3).unwrap(), 3, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(r, TwoWeightReport { srg: false, two_weight: false });
        let r = two_weight_srg_check(&build_field(3, 5).unwrap(), 11, DEFAULT_ENUM_CAP).unwrap();
        assert!(r.srg && r.two_weight);
    }

    #[test]
    fn distance_bound_examples() {
        let b = min_distance_bound(&5.into(), 2, &2.into());
        assert!(b.satisfied && b.hypothesis);
        assert!((b.bound - 0.5).abs() < 1e-12);
        let b = min_distance_bound(&16.into(), 3, &6.into());
        assert!(b.satisfied);
        let b = min_distance_bound(&1.into(), 2, &1.into());
        assert!(b.satisfied);
        // n = 48, p = 2: bound ≈ 17.1 so d = 10 fails.
        assert!(!min_distance_bound(&48.into(), 2, &10.into()).satisfied);
    }

    #[test]
    fn semiprimitive_weight_examples() {
        let ((w1, a1), (w2, a2)) = semiprimitive_weights(3, 2, 4).unwrap();
        assert_eq!((w1, a1, w2, a2), (4.into(), 5.into(), 2.into(), 10.into()));
        let ctx = build_field(3, 4).unwrap();
        let wd = weight_distribution_full(&ctx, 2, DEFAULT_ENUM_CAP).unwrap();
        let ((w1, a1), (w2, a2)) = semiprimitive_weights(2, 3, 4).unwrap();
        let expect = WeightDistribution::new(3, 4, 2, 2, 40.into(), vec![(0.into(), 1.into()), (w1, a1), (w2, a2)]).unwrap();
        assert_eq!(wd, expect);
        assert!(semiprimitive_weights(11, 3, 5).is_err());
    }
}
