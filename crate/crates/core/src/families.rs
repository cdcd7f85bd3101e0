//! Closed-form spectra: semiprimitive pairs, k = 3, k = 4, and the eleven
//! exceptional two-weight pairs.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use crate::arith::{big_pow, checked_pow, divisors, exact_div, pow_mod};
use crate::codes::WeightDistribution;
use crate::error::{Error, Result};
use crate::periods::Value;
use crate::spectra::{complement_spectrum, is_ramanujan_spectral, srg_analysis, Source, Spectrum, SrgParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemiprimitiveInfo {
    pub k: u64,
    pub p: u64,
    pub m: u32,
    /// Least positive t with k | p^t + 1.
    pub t: u32,
    /// m / (2t).
    pub s: u32,
    /// (-1)^(s+1).
    pub sigma: i8,
}

impl SemiprimitiveInfo {
    pub fn q(&self) -> BigInt {
        big_pow(self.p, self.m)
    }

    pub fn n(&self) -> BigInt {
        (self.q() - 1u32) / BigInt::from(self.k)
    }

    /// p^(m/2).
    pub fn sqrt_q(&self) -> BigInt {
        big_pow(self.p, self.m / 2)
    }

    /// (λ1, λ2) with λ1 = (σ(k-1)√q - 1)/k of multiplicity n and
    /// λ2 = -(σ√q + 1)/k of multiplicity (k-1)n.
    pub fn eigenvalues(&self) -> Result<(BigInt, BigInt)> {
        let k = BigInt::from(self.k);
        let sigma = BigInt::from(self.sigma);
        let root = self.sqrt_q();
        let l1 = exact_div(&(&sigma * (&k - 1u32) * &root - 1u32), &k, "semiprimitive λ1")?;
        let l2 = exact_div(&(-(&sigma * &root) - 1u32), &k, "semiprimitive λ2")?;
        Ok((l1, l2))
    }

    /// s odd forces k | p^(m/2) + 1, s even forces k | p^(m/2) - 1.
    pub fn sign_divisibility_holds(&self) -> bool {
        let r = self.sqrt_q() % BigInt::from(self.k);
        let target = if self.s % 2 == 1 { BigInt::from(self.k - 1) } else { BigInt::one() % BigInt::from(self.k) };
        r == target
    }
}

/// `Some` iff (k, p^m) is a semiprimitive pair: m even, k >= 2, k | p^t + 1
/// for some t | m/2, and k ≠ p^(m/2) + 1 when k > 2.
pub fn classify_semiprimitive(k: u64, p: u64, m: u32) -> Option<SemiprimitiveInfo> {
    if k < 2 || m == 0 || m % 2 == 1 || pow_mod(p, m as u64, k) != 1 {
        return None;
    }
    let half = m / 2;
    if k > 2 && checked_pow(p, half).and_then(|r| r.checked_add(1)) == Some(k) {
        return None;
    }
    let t = (1..=half).find(|&t| pow_mod(p, t as u64, k) == k - 1)?;
    if !half.is_multiple_of(t) {
        return None;
    }
    let s = half / t;
    let sigma = if s % 2 == 1 { 1 } else { -1 };
    Some(SemiprimitiveInfo { k, p, m, t, s, sigma })
}

/// `Some(ℓ)` when k = p^ℓ + 1.
pub fn power_plus_one_exponent(k: u64, p: u64) -> Option<u32> {
    let mut pl = p;
    let mut l = 1;
    while pl < k {
        if pl + 1 == k {
            return Some(l);
        }
        pl = pl.checked_mul(p)?;
        l += 1;
    }
    (pl + 1 == k).then_some(l)
}

/// All semiprimitive k for the given p^m, ascending.
pub fn enumerate_semiprimitive_pairs(p: u64, m: u32) -> Result<Vec<(u64, SemiprimitiveInfo)>> {
    if m % 2 == 1 {
        return Err(Error::OddM(m));
    }
    let half = m / 2;
    let mut ks = Vec::new();
    for t in (1..=half).filter(|t| half.is_multiple_of(*t)) {
        let base = checked_pow(p, t)
            .and_then(|v| v.checked_add(1))
            .ok_or_else(|| Error::InvalidParameters(format!("{p}^{t} + 1 overflows")))?;
        ks.extend(divisors(base));
    }
    ks.sort_unstable();
    ks.dedup();
    Ok(ks
        .into_iter()
        .filter_map(|k| classify_semiprimitive(k, p, m).map(|info| (k, info)))
        .collect())
}

fn info_or_err(k: u64, p: u64, m: u32) -> Result<SemiprimitiveInfo> {
    classify_semiprimitive(k, p, m).ok_or(Error::NotSemiprimitive { k, p, m })
}

/// {[n]^1, [λ1]^n, [λ2]^{(k-1)n}} and the complement
/// {[(k-1)n]^1, [(k-1)λ2]^n, [-1-λ2]^{(k-1)n}}.
pub fn semiprimitive_spectrum(k: u64, p: u64, m: u32) -> Result<(Spectrum, Spectrum)> {
    let info = info_or_err(k, p, m)?;
    let (l1, l2) = info.eigenvalues()?;
    let q = info.q();
    let n = info.n();
    let km1 = BigInt::from(k - 1);
    let gamma = Spectrum::new(
        q.clone(),
        k,
        n.clone(),
        false,
        vec![
            (Value::Exact(n.clone()), BigInt::one()),
            (Value::Exact(l1.clone()), n.clone()),
            (Value::Exact(l2.clone()), &km1 * &n),
        ],
        0,
        Source::ClosedForm,
    );
    let bar = Spectrum::new(
        q,
        k,
        &km1 * &n,
        true,
        vec![
            (Value::Exact(&km1 * &n), BigInt::one()),
            (Value::Exact(&km1 * &l2), n.clone()),
            (Value::Exact(-&l2 - 1u32), &km1 * &n),
        ],
        0,
        Source::ClosedForm,
    );
    if &km1 * &l2 != -&l1 - 1u32 {
        return Err(Error::ClosedFormMismatch("(k-1)λ2 ≠ -1-λ1".into()));
    }
    debug_assert_eq!(complement_spectrum(&gamma), bar);
    Ok((gamma, bar))
}

/// Ramanujan property by the case list alone: Paley, or one of
/// (a) k=3, p=2, m>=4; (b) k=3, p≡2 (3), p≠2; (c) k=4, p=3, m>=4;
/// (d) k=4, p≡3 (4), p≠3; (e) k=5, p=2, 4|m, m>=8;
/// (f) k=5, p≡2,3 (5), p≠2, 4|m; (g) k=5, p≡4 (5).
pub fn ramanujan_classification(k: u64, p: u64, m: u32) -> Result<bool> {
    info_or_err(k, p, m)?;
    Ok(ramanujan_case(k, p, m).is_some())
}

/// The case letter of the list above, with 'P' for the Paley graphs.
pub fn ramanujan_case(k: u64, p: u64, m: u32) -> Option<char> {
    match k {
        2 => Some('P'),
        3 if p == 2 && m >= 4 => Some('a'),
        3 if p != 2 && p % 3 == 2 && m >= 2 => Some('b'),
        4 if p == 3 && m >= 4 => Some('c'),
        4 if p != 3 && p % 4 == 3 && m >= 2 => Some('d'),
        5 if p == 2 && m >= 8 && m.is_multiple_of(4) => Some('e'),
        5 if p != 2 && (p % 5 == 2 || p % 5 == 3) && m >= 4 && m.is_multiple_of(4) => Some('f'),
        5 if p % 5 == 4 && m >= 2 => Some('g'),
        _ => None,
    }
}

/// Direct spectral test of the complement; `false` would contradict the theory.
pub fn complement_always_ramanujan_check(k: u64, p: u64, m: u32) -> Result<bool> {
    let (_, bar) = semiprimitive_spectrum(k, p, m)?;
    is_ramanujan_spectral(&bar)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiophantineK3 {
    pub a: i128,
    pub b: i128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiophantineK4 {
    pub c: i128,
    pub d: i128,
}

fn gcd_i(a: i128, b: i128) -> i128 {
    a.abs().gcd(&b.abs())
}

/// Every `(x, y)` with `target = x² + coeff·y²`, `y > 0`, x ≡ 1 (mod modulus) and gcd(x, p) = 1.
fn scan_representations(target: i128, coeff: i128, modulus: i128, p: i128) -> Vec<(i128, i128)> {
    let mut out = Vec::new();
    let mut y = 1i128;
    while coeff * y * y <= target {
        let rest = target - coeff * y * y;
        let x = rest.sqrt();
        if x * x == rest {
            for x in [x, -x] {
                if x.rem_euclid(modulus) == 1 % modulus && gcd_i(x, p) == 1 && !out.contains(&(x, y)) {
                    out.push((x, y));
                }
            }
        }
        y += 1;
    }
    out
}

fn small_power(p: u64, e: u32) -> Result<i128> {
    let mut acc = 1i128;
    for _ in 0..e {
        acc = acc
            .checked_mul(p as i128)
            .filter(|&v| v < 1 << 100)
            .ok_or_else(|| Error::InvalidParameters(format!("{p}^{e} too large for an exhaustive scan")))?;
    }
    Ok(acc)
}

/// 4·p^(m/3) = a² + 27b², a ≡ 1 (mod 3), gcd(a, p) = 1, b > 0, by exhaustive scan.
pub fn solve_k3_diophantine(p: u64, m: u32) -> Result<DiophantineK3> {
    if p % 3 != 1 || !m.is_multiple_of(3) {
        return Err(Error::PreconditionViolated(format!("need p ≡ 1 (mod 3) and 3 | m, got p={p}, m={m}")));
    }
    let target = 4 * small_power(p, m / 3)?;
    match scan_representations(target, 27, 3, p as i128).as_slice() {
        [(a, b)] => Ok(DiophantineK3 { a: *a, b: *b }),
        [] => Err(Error::NoSolution(format!("4·{p}^{} = a² + 27b²", m / 3))),
        many => Err(Error::NoSolution(format!("{} normalized solutions", many.len()))),
    }
}

/// p^(m/2) = c² + 4d², c ≡ 1 (mod 4), gcd(c, p) = 1, d > 0, by exhaustive scan.
pub fn solve_k4_diophantine(p: u64, m: u32) -> Result<DiophantineK4> {
    if p % 4 != 1 || !m.is_multiple_of(4) {
        return Err(Error::PreconditionViolated(format!("need p ≡ 1 (mod 4) and 4 | m, got p={p}, m={m}")));
    }
    let target = small_power(p, m / 2)?;
    match scan_representations(target, 4, 4, p as i128).as_slice() {
        [(c, d)] => Ok(DiophantineK4 { c: *c, d: *d }),
        [] => Err(Error::NoSolution(format!("{p}^{} = c² + 4d²", m / 2))),
        many => Err(Error::NoSolution(format!("{} normalized solutions", many.len()))),
    }
}

fn closed_spectrum(k: u64, p: u64, m: u32, parts: Vec<(BigInt, BigInt)>) -> Spectrum {
    let q = big_pow(p, m);
    let n = (&q - 1u32) / BigInt::from(k);
    let mut entries = vec![(Value::Exact(n.clone()), BigInt::one())];
    entries.extend(parts.into_iter().map(|(v, mult)| (Value::Exact(v), mult)));
    Spectrum::new(q, k, n, false, entries, 0, Source::ClosedForm)
}

/// Paley graph P(q), q ≡ 1 (mod 4):
/// {[(q-1)/2]^1, [(√q-1)/2]^n, [(-√q-1)/2]^n} with n = (q-1)/2.
/// The nontrivial eigenvalues are exact for even m and irrational otherwise.
pub fn paley_spectrum(p: u64, m: u32) -> Result<Spectrum> {
    let q = big_pow(p, m);
    if (&q % 4u32) != BigInt::one() {
        return Err(Error::PreconditionViolated(format!("{p}^{m} ≢ 1 (mod 4)")));
    }
    let n = (&q - 1u32) / 2u32;
    if m.is_multiple_of(2) {
        let root = big_pow(p, m / 2);
        return Ok(closed_spectrum(2, p, m, vec![((&root - 1u32) / 2u32, n.clone()), ((-&root - 1u32) / 2u32, n)]));
    }
    let root = (p as f64).powf(m as f64 / 2.0);
    let entries = vec![
        (Value::Exact(n.clone()), BigInt::one()),
        (Value::Approx { re: (root - 1.0) / 2.0, im: 0.0 }, n.clone()),
        (Value::Approx { re: (-root - 1.0) / 2.0, im: 0.0 }, n.clone()),
    ];
    Ok(Spectrum::new(q, 2, n, false, entries, 0, Source::ClosedForm))
}

fn geometric_sum_divisible(p: u64, m: u32, k: u64) -> bool {
    // (q-1)/(p-1) = 1 + p + ... + p^(m-1) modulo k.
    let mut acc = 0u64;
    let mut pw = 1 % k;
    for _ in 0..m {
        acc = (acc + pw) % k;
        pw = ((pw as u128 * p as u128) % k as u128) as u64;
    }
    acc == 0
}

/// Spectrum of Γ(3,q) when 3 | (q-1)/(p-1).
pub fn spectrum_gamma3(p: u64, m: u32) -> Result<Spectrum> {
    if !geometric_sum_divisible(p, m, 3) {
        return Err(Error::PreconditionViolated(format!("3 ∤ (q-1)/(p-1) for q = {p}^{m}")));
    }
    let q = big_pow(p, m);
    if q < BigInt::from(5) {
        return Err(Error::QTooSmall(q.to_string()));
    }
    let n = (&q - 1u32) / 3u32;
    let three = BigInt::from(3);
    let parts = if p % 3 == 1 {
        let DiophantineK3 { a, b } = solve_k3_diophantine(p, m)?;
        let r = big_pow(p, m / 3);
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let half = |x: BigInt| exact_div(&x, &BigInt::from(2), "k=3 half");
        vec![
            (exact_div(&(&a * &r - 1u32), &three, "k=3 eigenvalue")?, n.clone()),
            (exact_div(&(-half(&a + 9u32 * &b)? * &r - 1u32), &three, "k=3 eigenvalue")?, n.clone()),
            (exact_div(&(-half(&a - 9u32 * &b)? * &r - 1u32), &three, "k=3 eigenvalue")?, n.clone()),
        ]
    } else {
        let root = big_pow(p, m / 2);
        let div3 = |x: BigInt| exact_div(&x, &three, "k=3 eigenvalue");
        if m.is_multiple_of(4) {
            vec![(div3(&root - 1u32)?, 2u32 * &n), (div3(-2i32 * &root - 1u32)?, n.clone())]
        } else {
            vec![(div3(2u32 * &root - 1u32)?, n.clone()), (div3(-&root - 1u32)?, 2u32 * &n)]
        }
    };
    Ok(closed_spectrum(3, p, m, parts))
}

/// Spectrum of Γ(4,q) when 4 | (q-1)/(p-1), q ≠ 9.
pub fn spectrum_gamma4(p: u64, m: u32) -> Result<Spectrum> {
    if !geometric_sum_divisible(p, m, 4) {
        return Err(Error::PreconditionViolated(format!("4 ∤ (q-1)/(p-1) for q = {p}^{m}")));
    }
    let q = big_pow(p, m);
    if q == BigInt::from(9) {
        return Err(Error::ExcludedQ);
    }
    if q < BigInt::from(5) {
        return Err(Error::QTooSmall(q.to_string()));
    }
    let n = (&q - 1u32) / 4u32;
    let four = BigInt::from(4);
    let div4 = |x: BigInt| exact_div(&x, &four, "k=4 eigenvalue");
    let root = big_pow(p, m / 2);
    let parts = if p % 4 == 1 {
        let DiophantineK4 { c, d } = solve_k4_diophantine(p, m)?;
        let r = big_pow(p, m / 4);
        let (c, d) = (BigInt::from(c), BigInt::from(d));
        vec![
            (div4(&root + 4u32 * &d * &r - 1u32)?, n.clone()),
            (div4(&root - 4u32 * &d * &r - 1u32)?, n.clone()),
            (div4(-&root + 2u32 * &c * &r - 1u32)?, n.clone()),
            (div4(-&root - 2u32 * &c * &r - 1u32)?, n.clone()),
        ]
    } else if m.is_multiple_of(4) {
        vec![(div4(&root - 1u32)?, 3u32 * &n), (div4(-(3u32 * &root + 1u32))?, n.clone())]
    } else {
        vec![(div4(3u32 * &root - 1u32)?, n.clone()), (div4(-&root - 1u32)?, 3u32 * &n)]
    };
    Ok(closed_spectrum(4, p, m, parts))
}

/// One of the eleven exceptional pairs with its (θ, t, ε) parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExceptionalRecord {
    pub k: u64,
    pub p: u64,
    pub m: u32,
    pub theta: u32,
    pub t: u64,
    pub epsilon: i8,
}

const EXCEPTIONAL: [(u64, u64, u32, u32, u64, i8); 11] = [
    (11, 3, 5, 2, 5, 1),
    (19, 5, 9, 4, 9, 1),
    (35, 3, 12, 5, 17, 1),
    (37, 7, 9, 4, 9, 1),
    (43, 11, 7, 3, 21, 1),
    (67, 17, 33, 16, 33, 1),
    (107, 3, 53, 25, 53, 1),
    (133, 5, 18, 8, 33, -1),
    (163, 41, 81, 40, 81, 1),
    (323, 3, 144, 70, 161, 1),
    (499, 5, 249, 123, 249, 1),
];

pub fn exceptional_records() -> Vec<ExceptionalRecord> {
    EXCEPTIONAL
        .iter()
        .map(|&(k, p, m, theta, t, epsilon)| ExceptionalRecord { k, p, m, theta, t, epsilon })
        .collect()
}

/// Derived data of an exceptional pair. λ1, m1 and w1 belong together.
#[derive(Clone, Debug, PartialEq)]
pub struct ExceptionalData {
    pub record: ExceptionalRecord,
    pub q: BigInt,
    pub n: BigInt,
    pub w1: BigInt,
    pub w2: BigInt,
    pub lambda1: BigInt,
    pub lambda2: BigInt,
    pub m1: BigInt,
    pub m2: BigInt,
    pub srg: SrgParams,
    pub spectrum: Spectrum,
    pub weights: WeightDistribution,
}

/// Weights, eigenvalues, srg parameters and multiplicities of an exceptional
/// pair, every division checked for exactness.
///
/// Multiplicities use m(λ1) = ((q-1) - (2n + (q-1)(e-d))/Δ)/2 with Δ = λ1 - λ2.
pub fn exceptional_spectrum(rec: &ExceptionalRecord) -> Result<ExceptionalData> {
    let p = BigInt::from(rec.p);
    let k = BigInt::from(rec.k);
    let q = big_pow(rec.p, rec.m);
    let n = exact_div(&(&q - 1u32), &k, "n = (q-1)/k")?;
    let eps = BigInt::from(rec.epsilon);
    let pm1 = &p - 1u32;
    let step = &pm1 * big_pow(rec.p, rec.theta - 1);
    let w1 = exact_div(&(&step * (big_pow(rec.p, rec.m - rec.theta) - &eps * BigInt::from(rec.t))), &k, "w1")?;
    let w2 = &w1 + &eps * &step;
    let lambda = |w: &BigInt| -> Result<BigInt> { Ok(&n - exact_div(&(&p * w), &pm1, "λ = n - p w/(p-1)")?) };
    let lambda1 = lambda(&w1)?;
    let lambda2 = lambda(&w2)?;
    let sum = &lambda1 + &lambda2;
    let delta = &lambda1 - &lambda2;
    let d = &n - exact_div(&(&delta * &delta - &sum * &sum), &BigInt::from(4), "d")?;
    let e = &d + &sum;
    let qm1 = &q - 1u32;
    let frac = exact_div(&(2u32 * &n + &qm1 * (&e - &d)), &delta, "multiplicity quotient by Δ")?;
    let m1 = exact_div(&(&qm1 - &frac), &BigInt::from(2), "multiplicity halving")?;
    let m2 = &qm1 - &m1;
    if m1.is_negative() || m2.is_negative() {
        return Err(Error::InvariantViolated("negative multiplicity".into()));
    }
    if &n + &m1 * &lambda1 + &m2 * &lambda2 != BigInt::zero() {
        return Err(Error::InvariantViolated("n + m1 λ1 + m2 λ2 ≠ 0".into()));
    }
    let spectrum = Spectrum::new(
        q.clone(),
        rec.k,
        n.clone(),
        false,
        vec![
            (Value::Exact(n.clone()), BigInt::one()),
            (Value::Exact(lambda1.clone()), m1.clone()),
            (Value::Exact(lambda2.clone()), m2.clone()),
        ],
        0,
        Source::ClosedForm,
    );
    spectrum.check_invariants()?;
    let (srg, _) = srg_analysis(&spectrum)?;
    if srg.d != d || srg.e != e {
        return Err(Error::InvariantViolated("srg parameters from the two routes differ".into()));
    }
    let weights = WeightDistribution::new(
        rec.p,
        rec.m,
        rec.k,
        rec.k,
        n.clone(),
        vec![(BigInt::zero(), BigInt::one()), (w1.clone(), m1.clone()), (w2.clone(), m2.clone())],
    )?;
    Ok(ExceptionalData { record: *rec, q, n, w1, w2, lambda1, lambda2, m1, m2, srg, spectrum, weights })
}
