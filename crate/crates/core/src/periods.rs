//! Gaussian periods η_i = Σ_{x ∈ ω^i⟨ω^N⟩} ζ_p^{Tr(x)}.

use std::cmp::Ordering;
use std::f64::consts::TAU;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{big_pow, exact_div};
use crate::error::{Error, Result};
use crate::families::{classify_semiprimitive, SemiprimitiveInfo};
use crate::field::FieldCtx;

/// A real or complex algebraic quantity: exact when it is a rational integer.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(BigInt),
    Approx { re: f64, im: f64 },
}

impl Value {
    pub fn int(v: impl Into<BigInt>) -> Self {
        Value::Exact(v.into())
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn exact(&self) -> Option<&BigInt> {
        match self {
            Value::Exact(v) => Some(v),
            Value::Approx { .. } => None,
        }
    }

    pub fn re(&self) -> f64 {
        match self {
            Value::Exact(v) => v.to_f64().unwrap_or(f64::NAN),
            Value::Approx { re, .. } => *re,
        }
    }

    pub fn im(&self) -> f64 {
        match self {
            Value::Exact(_) => 0.0,
            Value::Approx { im, .. } => *im,
        }
    }

    /// Within `tol` in both real and imaginary parts.
    pub fn close_to(&self, other: &Value, tol: f64) -> bool {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a == b,
            _ => (self.re() - other.re()).abs() <= tol && (self.im() - other.im()).abs() <= tol,
        }
    }

    /// Descending order by real part, exact integers compared exactly.
    pub fn cmp_desc(&self, other: &Value) -> Ordering {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => b.cmp(a),
            _ => other
                .re()
                .partial_cmp(&self.re())
                .unwrap_or(Ordering::Equal)
                .then_with(|| other.im().partial_cmp(&self.im()).unwrap_or(Ordering::Equal)),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(v) => write!(f, "{v}"),
            Value::Approx { re, im } if *im == 0.0 => write!(f, "{re:.9}"),
            Value::Approx { re, im } => write!(f, "{re:.9}{im:+.9}i"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PeriodVector {
    pub n_classes: u64,
    pub p: u64,
    pub q: BigInt,
    /// `values[i]` is the period of the coset ω^i⟨ω^N⟩.
    pub values: Vec<Value>,
}

impl PeriodVector {
    pub fn all_exact(&self) -> bool {
        self.values.iter().all(Value::is_exact)
    }

    pub fn exact_values(&self) -> Result<Vec<BigInt>> {
        self.values.iter().map(|v| v.exact().cloned().ok_or(Error::InexactPeriods)).collect()
    }
}

/// Neumaier-compensated sum.
pub(crate) fn compensated_sum(terms: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for t in terms {
        let s = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - s) + t;
        } else {
            comp += (t - s) + sum;
        }
        sum = s;
    }
    sum + comp
}

/// Evaluates Σ_a c_a ζ_p^a from sparse tallies `(a, c_a)` with `c_a > 0`.
///
/// Exact iff every nonzero residue has the same tally, in which case the sum
/// is `c_0 - c_1`.
pub(crate) fn cyclotomic_value(p: u64, tallies: &[(u64, u64)]) -> Value {
    let c0 = tallies.iter().find(|&&(a, _)| a == 0).map_or(0, |&(_, c)| c);
    let nonzero: Vec<(u64, u64)> = tallies.iter().copied().filter(|&(a, c)| a != 0 && c > 0).collect();
    let uniform = if nonzero.is_empty() {
        Some(0)
    } else if nonzero.len() as u64 == p - 1 && nonzero.iter().all(|&(_, c)| c == nonzero[0].1) {
        Some(nonzero[0].1)
    } else {
        None
    };
    match uniform {
        Some(c1) => Value::Exact(BigInt::from(c0) - BigInt::from(c1)),
        None => {
            let angle = |a: u64| TAU * a as f64 / p as f64;
            let re = compensated_sum(
                std::iter::once(c0 as f64).chain(nonzero.iter().map(|&(a, c)| c as f64 * angle(a).cos())),
            );
            let im = compensated_sum(nonzero.iter().map(|&(a, c)| c as f64 * angle(a).sin()));
            Value::Approx { re, im }
        }
    }
}

/// Tallies `(trace value, count)` over `count` log indices `start, start + step, ...`
/// taken modulo q - 1. `scratch` has length p and is all zero on entry and exit.
pub(crate) fn tally_traces(
    trace: &[u32],
    start: u64,
    step: u64,
    count: u64,
    scratch: &mut [u64],
    touched: &mut Vec<u64>,
) -> Vec<(u64, u64)> {
    let ord = trace.len() as u64;
    let mut idx = start % ord;
    for _ in 0..count {
        let t = trace[idx as usize] as usize;
        if scratch[t] == 0 {
            touched.push(t as u64);
        }
        scratch[t] += 1;
        idx += step;
        if idx >= ord {
            idx -= ord;
        }
    }
    let out = touched.iter().map(|&a| (a, scratch[a as usize])).collect();
    for &a in touched.iter() {
        scratch[a as usize] = 0;
    }
    touched.clear();
    out
}

/// Gaussian periods of index `n_classes` by tallying traces coset by coset.
pub fn gaussian_periods(ctx: &FieldCtx, n_classes: u64) -> Result<PeriodVector> {
    let ord = ctx.order();
    if n_classes == 0 || !ord.is_multiple_of(n_classes) {
        return Err(Error::NotADivisor { divisor: n_classes.to_string(), of: ord.to_string() });
    }
    let trace = ctx.trace_table().map_err(|_| Error::FieldTooLarge {
        q: ctx.q().to_string(),
        cap: ctx.q().saturating_sub(1),
    })?;
    let p = ctx.p();
    let size = ord / n_classes;
    let values: Vec<Value> = (0..n_classes)
        .into_par_iter()
        .map_init(
            || (vec![0u64; p as usize], Vec::new()),
            |(scratch, touched), i| {
                let tallies = tally_traces(trace, i, n_classes, size, scratch, touched);
                cyclotomic_value(p, &tallies)
            },
        )
        .collect();
    let pv = PeriodVector { n_classes, p, q: BigInt::from(ctx.q()), values };
    if (ord / (p - 1)).is_multiple_of(n_classes) {
        certify(&pv)?;
    }
    Ok(pv)
}

/// Integrality certificate: every value an integer with N·η ≡ -1 (mod p).
pub fn certify(pv: &PeriodVector) -> Result<()> {
    let n = BigInt::from(pv.n_classes);
    let p = BigInt::from(pv.p);
    for (i, v) in pv.values.iter().enumerate() {
        let e = v.exact().ok_or_else(|| Error::CertificateFailed(format!("η_{i} is not an integer")))?;
        let r = (&n * e + 1u32) % &p;
        if !r.is_zero() {
            return Err(Error::CertificateFailed(format!("N·η_{i} + 1 = {} is not divisible by p", &n * e + 1u32)));
        }
    }
    Ok(())
}

/// Dense integer polynomial, coefficients from the constant term upward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    pub coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    /// `X - root`.
    pub fn linear(root: &BigInt) -> Self {
        IntPoly { coeffs: vec![-root, BigInt::one()] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly { coeffs: out }
    }

    pub fn pow(&self, mut e: u64) -> IntPoly {
        let mut acc = IntPoly::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Coefficients reduced into `0..modulus`.
    pub fn reduce_mod(&self, modulus: u64) -> Vec<u64> {
        let m = BigInt::from(modulus);
        self.coeffs
            .iter()
            .map(|c| {
                let r = ((c % &m) + &m) % &m;
                r.to_u64().expect("residue fits")
            })
            .collect()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Ψ(X) = Π_i (X - η_i).
pub fn period_polynomial(pv: &PeriodVector) -> Result<IntPoly> {
    let values = pv.exact_values()?;
    Ok(values.iter().fold(IntPoly::one(), |acc, v| acc.mul(&IntPoly::linear(v))))
}

/// Index of the coset carrying the period λ1 in the closed form.
pub fn distinguished_index(info: &SemiprimitiveInfo) -> u64 {
    let alpha = (big_pow(info.p, info.t) + 1u32) / BigInt::from(info.k);
    let alpha_odd = (&alpha % 2u32).is_one();
    if info.p % 2 == 1 && alpha_odd && info.s % 2 == 1 {
        info.k / 2
    } else {
        0
    }
}

/// Closed-form semiprimitive periods, no field construction.
pub fn semiprimitive_periods(k: u64, p: u64, m: u32) -> Result<PeriodVector> {
    let info = classify_semiprimitive(k, p, m).ok_or(Error::NotSemiprimitive { k, p, m })?;
    let (lambda1, lambda2) = info.eigenvalues()?;
    let special = distinguished_index(&info);
    let values = (0..k)
        .map(|i| Value::Exact(if i == special { lambda1.clone() } else { lambda2.clone() }))
        .collect();
    Ok(PeriodVector { n_classes: k, p, q: big_pow(p, m), values })
}

/// Inverts w = (p-1)(q-1-kη)/(pk) for η.
pub fn period_from_weight(q: &BigInt, k: &BigInt, p: u64, w: &BigInt) -> Result<BigInt> {
    // kη = q - 1 - pk·w/(p-1).
    let pkw = BigInt::from(p) * k * w;
    let t = exact_div(&pkw, &BigInt::from(p - 1), "weight to period")?;
    exact_div(&(q - 1u32 - t), k, "weight to period")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::divisors;
    use crate::field::build_field;

    fn ints(pv: &PeriodVector) -> Vec<i64> {
        pv.exact_values().unwrap().iter().map(|v| v.to_i64().unwrap()).collect()
    }

    #[test]
    fn paley_periods_f81() {
        let pv = gaussian_periods(&build_field(3, 4).unwrap(), 2).unwrap();
        assert_eq!(ints(&pv), vec![-5, 4]);
    }

    #[test]
    fn trivial_index() {
        for (p, m) in [(2, 3), (3, 2), (5, 1), (7, 2)] {
            let pv = gaussian_periods(&build_field(p, m).unwrap(), 1).unwrap();
            assert_eq!(ints(&pv), vec![-1]);
        }
    }

    #[test]
    fn cubic_periods_f16() {
        let pv = gaussian_periods(&build_field(2, 4).unwrap(), 3).unwrap();
        let mut v = ints(&pv);
        assert_eq!(v.iter().sum::<i64>(), -1);
        v.sort();
        assert_eq!(v, vec![-3, 1, 1]);
    }

    #[test]
    fn period_polynomials() {
        let one = PeriodVector { n_classes: 1, p: 2, q: 4.into(), values: vec![Value::int(-1)] };
        assert_eq!(period_polynomial(&one).unwrap().to_string(), "X + 1");
        let f81 = gaussian_periods(&build_field(3, 4).unwrap(), 2).unwrap();
        assert_eq!(period_polynomial(&f81).unwrap().to_string(), "X^2 + X - 20");
        let f16 = gaussian_periods(&build_field(2, 4).unwrap(), 3).unwrap();
        assert_eq!(period_polynomial(&f16).unwrap().to_string(), "X^3 + X^2 - 5X + 3");
        let inexact = PeriodVector {
            n_classes: 1,
            p: 3,
            q: 3.into(),
            values: vec![Value::Approx { re: 0.5, im: 0.0 }],
        };
        assert_eq!(period_polynomial(&inexact), Err(Error::InexactPeriods));
    }

    #[test]
    fn semiprimitive_closed_forms() {
        let pv = semiprimitive_periods(3, 2, 4).unwrap();
        assert_eq!(ints(&pv), vec![-3, 1, 1]);
        let pv = semiprimitive_periods(5, 3, 4).unwrap();
        assert_eq!(ints(&pv), vec![7, -2, -2, -2, -2]);
        assert!(semiprimitive_periods(11, 3, 5).is_err());
    }

    #[test]
    fn closed_form_matches_tally_per_index() {
        // C_0 is the subgroup of k-th powers and C_{k/2} contains -1, so the
        // placement does not depend on the primitive element.
        for (p, m) in [(2u64, 4u32), (2, 6), (2, 8), (3, 2), (3, 4), (3, 6), (5, 2), (5, 4), (7, 2), (7, 4), (11, 2), (13, 2), (17, 2), (19, 2), (23, 2), (29, 2), (31, 2), (37, 2), (41, 2), (43, 2), (47, 2), (53, 2), (59, 2), (61, 2)] {
            let ctx = build_field(p, m).unwrap();
            for k in divisors(ctx.order()).into_iter().filter(|&k| k >= 2) {
                if classify_semiprimitive(k, p, m).is_none() {
                    continue;
                }
                let closed = semiprimitive_periods(k, p, m).unwrap();
                let tallied = gaussian_periods(&ctx, k).unwrap();
                assert_eq!(closed.values, tallied.values, "k={k} q={p}^{m}");
            }
        }
    }

    #[test]
    fn inexact_periods_are_flagged() {
        // Over F_7 with N = 3 each coset is {x, -x}, giving 2cos(2πa/7).
        let pv = gaussian_periods(&build_field(7, 1).unwrap(), 3).unwrap();
        assert!(!pv.all_exact());
        let sum_re = compensated_sum(pv.values.iter().map(Value::re));
        let sum_im = compensated_sum(pv.values.iter().map(Value::im));
        assert!((sum_re + 1.0).abs() < 1e-12 && sum_im.abs() < 1e-12);
    }

    #[test]
    fn sums_and_certificates_exhaustive() {
        let mut tested = 0;
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61] {
            let mut m = 1;
            while p.pow(m) <= 1 << 12 {
                let ctx = build_field(p, m).unwrap();
                for n_classes in divisors(ctx.order()) {
                    let pv = gaussian_periods(&ctx, n_classes).unwrap();
                    let re = compensated_sum(pv.values.iter().map(Value::re));
                    let im = compensated_sum(pv.values.iter().map(Value::im));
                    assert!((re + 1.0).abs() < 1e-6 && im.abs() < 1e-6, "N={n_classes} q={}", ctx.q());
                    if pv.all_exact() {
                        let s: BigInt = pv.exact_values().unwrap().iter().sum();
                        assert_eq!(s, BigInt::from(-1));
                    }
                    tested += 1;
                }
                m += 1;
            }
        }
        assert!(tested > 100);
    }

    #[test]
    fn weight_period_inverse() {
        // C(3,16): η = -3 gives weight (1/6)(15 + 9) = 4.
        let q = BigInt::from(16);
        let k = BigInt::from(3);
        assert_eq!(period_from_weight(&q, &k, 2, &BigInt::from(4)).unwrap(), BigInt::from(-3));
        assert_eq!(period_from_weight(&q, &k, 2, &BigInt::from(2)).unwrap(), BigInt::from(1));
    }
}
