//! Explicit construction of F_{p^m}.
//!
//! Elements are stored by discrete logarithm with respect to a fixed primitive
//! element ω, the class of `x` modulo the lexicographically smallest monic
//! primitive polynomial of degree `m`. Vector ("code") form writes an element
//! as `c_0 + c_1 p + ... + c_{m-1} p^{m-1}` for its coefficients in the
//! polynomial basis `1, ω, ..., ω^{m-1}`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::arith::{checked_pow, is_prime, pow_mod, prime_factors};
use crate::error::{Error, Result};

pub const DEFAULT_TABLE_CAP: u64 = 1 << 24;
/// Environment variable naming the modulus-cache directory.
pub const CACHE_DIR_ENV: &str = "GPSPEC_CACHE_DIR";
const CACHE_FILE: &str = "modulus.cache";
const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct FieldConfig {
    /// Largest q for which log/antilog/Zech/trace tables are built.
    pub table_cap: u64,
    /// When false no tables are built and element addition is unavailable.
    pub build_tables: bool,
    pub cache_dir: Option<PathBuf>,
}

impl Default for FieldConfig {
    fn default() -> Self {
        Self { table_cap: DEFAULT_TABLE_CAP, build_tables: true, cache_dir: None }
    }
}

impl FieldConfig {
    pub fn from_env() -> Self {
        Self { cache_dir: std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from), ..Self::default() }
    }
}

/// A nonzero element is `Pow(i)`, meaning ω^i with `i < q - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElement {
    Zero,
    Pow(u64),
}

impl FieldElement {
    pub fn log(self) -> Option<u64> {
        match self {
            FieldElement::Zero => None,
            FieldElement::Pow(i) => Some(i),
        }
    }

    pub fn is_zero(self) -> bool {
        self == FieldElement::Zero
    }
}

struct Tables {
    /// `antilog[i]` is the code of ω^i.
    antilog: Vec<u32>,
    /// `log[c]` is the discrete log of the element with code `c`; `log[0]` unused.
    log: Vec<u32>,
    /// `zech[i] = log(1 + ω^i)`, `NONE` when the sum vanishes.
    zech: Vec<u32>,
    /// `trace[i] = Tr(ω^i)`.
    trace: Vec<u32>,
}

pub struct FieldCtx {
    p: u64,
    m: u32,
    q: u64,
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

impl std::fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .field("tables", &self.tables.is_some())
            .finish()
    }
}

/// Builds F_{p^m} with tables, using the default configuration.
pub fn build_field(p: u64, m: u32) -> Result<FieldCtx> {
    FieldCtx::new(p, m, &FieldConfig::default())
}

impl FieldCtx {
    pub fn new(p: u64, m: u32, cfg: &FieldConfig) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidParameters("m must be positive".into()));
        }
        let q = checked_pow(p, m)
            .filter(|&q| q < 1 << 62)
            .ok_or_else(|| Error::FieldTooLarge { q: format!("{p}^{m}"), cap: 1 << 62 })?;
        if cfg.build_tables && q > cfg.table_cap {
            return Err(Error::FieldTooLarge { q: q.to_string(), cap: cfg.table_cap });
        }
        let order_factors = prime_factors(q - 1);
        let modulus = match cfg.cache_dir.as_deref().and_then(|d| read_cached(d, p, m)) {
            Some(f) if is_primitive_poly(&f, p, q, &order_factors) => f,
            _ => {
                let f = find_primitive_poly(p, m, q, &order_factors)?;
                if let Some(dir) = cfg.cache_dir.as_deref() {
                    // Cache writes are best effort.
                    let _ = write_cached(dir, p, m, &f);
                }
                f
            }
        };
        let mut ctx = FieldCtx { p, m, q, modulus, tables: None };
        if cfg.build_tables {
            ctx.tables = Some(ctx.build_tables());
        }
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Order of the multiplicative group, q - 1.
    pub fn order(&self) -> u64 {
        self.q - 1
    }

    /// Coefficients `c_0..=c_m` of the defining primitive polynomial.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn omega(&self) -> FieldElement {
        self.element(1)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::Pow(0)
    }

    /// ω^i for any integer exponent.
    pub fn element(&self, i: u64) -> FieldElement {
        FieldElement::Pow(i % (self.q - 1))
    }

    /// Nonzero elements in log order ω^0, ω^1, ...
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q - 1).map(FieldElement::Pow)
    }

    fn tables(&self) -> Result<&Tables> {
        self.tables.as_ref().ok_or(Error::TablesUnavailable)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match (a, b) {
            (FieldElement::Pow(i), FieldElement::Pow(j)) => self.element(i + j),
            _ => FieldElement::Zero,
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        match a {
            FieldElement::Zero => Err(Error::ZeroElement),
            FieldElement::Pow(i) => Ok(self.element(self.q - 1 - i)),
        }
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        match a {
            FieldElement::Zero if e == 0 => self.one(),
            FieldElement::Zero => FieldElement::Zero,
            FieldElement::Pow(i) => {
                let ord = self.q - 1;
                FieldElement::Pow(((i as u128 * e as u128) % ord as u128) as u64)
            }
        }
    }

    /// -1 is ω^{(q-1)/2} in odd characteristic and 1 otherwise.
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            a
        } else {
            self.mul(a, self.element((self.q - 1) / 2))
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        let t = self.tables()?;
        Ok(match (a, b) {
            (FieldElement::Zero, x) | (x, FieldElement::Zero) => x,
            (FieldElement::Pow(i), FieldElement::Pow(j)) => {
                let ord = self.q - 1;
                let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
                match t.zech[(hi - lo) as usize] {
                    NONE => FieldElement::Zero,
                    z => FieldElement::Pow((lo + z as u64) % ord),
                }
            }
        })
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.add(a, self.neg(b))
    }

    /// Absolute trace Tr_{q/p}(x) as a residue in `0..p`.
    pub fn trace(&self, x: FieldElement) -> u64 {
        let i = match x {
            FieldElement::Zero => return 0,
            FieldElement::Pow(i) => i,
        };
        if let Some(t) = &self.tables {
            return t.trace[i as usize] as u64;
        }
        let mut y = self.poly_power_of_x(i);
        let mut acc = y.clone();
        for _ in 1..self.m {
            y = self.poly_pow(&y, self.p);
            for (a, b) in acc.iter_mut().zip(&y) {
                *a = (*a + b) % self.p;
            }
        }
        debug_assert!(acc[1..].iter().all(|&c| c == 0));
        acc[0]
    }

    /// Index `i` with `x` in ω^i⟨ω^N⟩.
    pub fn power_coset_index(&self, x: FieldElement, n_cosets: u64) -> Result<u64> {
        if n_cosets == 0 || !(self.q - 1).is_multiple_of(n_cosets) {
            return Err(Error::NotADivisor {
                divisor: n_cosets.to_string(),
                of: (self.q - 1).to_string(),
            });
        }
        match x {
            FieldElement::Zero => Err(Error::ZeroElement),
            FieldElement::Pow(i) => Ok(i % n_cosets),
        }
    }

    /// Polynomial-basis coefficients `c_0..c_{m-1}` of `x`.
    pub fn coefficients(&self, x: FieldElement) -> Vec<u64> {
        match x {
            FieldElement::Zero => vec![0; self.m as usize],
            FieldElement::Pow(i) => match &self.tables {
                Some(t) => self.decode(t.antilog[i as usize] as u64),
                None => self.poly_power_of_x(i),
            },
        }
    }

    pub fn from_coefficients(&self, coeffs: &[u64]) -> Result<FieldElement> {
        let code = self.encode(coeffs);
        self.element_from_code(code)
    }

    /// Code of `x` (see the module docs). Requires tables.
    pub fn code(&self, x: FieldElement) -> Result<u64> {
        let t = self.tables()?;
        Ok(match x {
            FieldElement::Zero => 0,
            FieldElement::Pow(i) => t.antilog[i as usize] as u64,
        })
    }

    pub fn element_from_code(&self, code: u64) -> Result<FieldElement> {
        let t = self.tables()?;
        if code >= self.q {
            return Err(Error::InvalidParameters(format!("code {code} out of range")));
        }
        Ok(if code == 0 { FieldElement::Zero } else { FieldElement::Pow(t.log[code as usize] as u64) })
    }

    /// Sum of two codes, digit-wise modulo p.
    pub fn add_codes(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    /// Difference `a - b` of two codes.
    pub fn sub_codes(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            out += ((a % self.p + self.p - b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    /// Tr(ω^i) for every `i` in `0..q-1`.
    pub fn trace_table(&self) -> Result<&[u32]> {
        Ok(&self.tables()?.trace)
    }

    pub fn antilog_table(&self) -> Result<&[u32]> {
        Ok(&self.tables()?.antilog)
    }

    fn decode(&self, mut code: u64) -> Vec<u64> {
        (0..self.m)
            .map(|_| {
                let d = code % self.p;
                code /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, coeffs: &[u64]) -> u64 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c % self.p)
    }

    fn poly_power_of_x(&self, e: u64) -> Vec<u64> {
        let mut x = vec![0; self.m as usize];
        if self.m == 1 {
            // x ≡ -c_0 modulo x + c_0.
            x[0] = (self.p - self.modulus[0]) % self.p;
        } else {
            x[1] = 1;
        }
        self.poly_pow(&x, e)
    }

    fn poly_pow(&self, base: &[u64], e: u64) -> Vec<u64> {
        poly_pow_mod(base, e, &self.modulus, self.p)
    }

    fn build_tables(&self) -> Tables {
        let p = self.p;
        let m = self.m as usize;
        let q = self.q as usize;
        let ord = q - 1;
        let mut antilog = vec![0u32; ord];
        let mut log = vec![NONE; q];
        if p == 2 {
            let low: u64 = self.modulus[..m].iter().enumerate().map(|(i, &c)| c << i).sum();
            let top = 1u64 << m;
            let mut cur = 1u64;
            for (i, slot) in antilog.iter_mut().enumerate() {
                *slot = cur as u32;
                log[cur as usize] = i as u32;
                cur <<= 1;
                if cur & top != 0 {
                    cur = (cur ^ top) ^ low;
                }
            }
        } else {
            let mut digits = vec![0u64; m];
            digits[0] = 1;
            for (i, slot) in antilog.iter_mut().enumerate() {
                let code = self.encode(&digits);
                *slot = code as u32;
                log[code as usize] = i as u32;
                let top = digits[m - 1];
                for j in (1..m).rev() {
                    digits[j] = digits[j - 1];
                }
                digits[0] = 0;
                if top != 0 {
                    for (d, &c) in digits.iter_mut().zip(&self.modulus) {
                        *d = (*d + p - (top * c) % p) % p;
                    }
                }
            }
        }
        let zech = antilog
            .iter()
            .map(|&code| {
                let code = code as u64;
                let d0 = code % p;
                let bumped = code - d0 + (d0 + 1) % p;
                if bumped == 0 {
                    NONE
                } else {
                    log[bumped as usize]
                }
            })
            .collect();

        // Trace of each basis vector ω^j, j < m, via the Frobenius orbit.
        let basis_trace: Vec<u64> = (0..m as u64)
            .map(|j| {
                let mut acc = 0u64;
                let mut e = j;
                for _ in 0..m {
                    acc = self.add_codes(acc, antilog[(e % ord as u64) as usize] as u64);
                    e = ((e as u128 * p as u128) % ord as u128) as u64;
                }
                assert!(acc < p, "trace of a basis element left F_p");
                acc
            })
            .collect();
        let trace = if p == 2 {
            let mask: u64 = basis_trace.iter().enumerate().map(|(i, &t)| t << i).sum();
            antilog.iter().map(|&c| (c as u64 & mask).count_ones() & 1).collect()
        } else {
            antilog
                .iter()
                .map(|&c| {
                    let mut c = c as u64;
                    let mut acc = 0u64;
                    for &t in &basis_trace {
                        acc += (c % p) * t;
                        c /= p;
                    }
                    (acc % p) as u32
                })
                .collect()
        };
        Tables { antilog, log, zech, trace }
    }
}

fn poly_mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let m = f.len() - 1;
    let mut prod = vec![0u64; 2 * m];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u128 + ai as u128 * bj as u128) % p as u128) as u64;
        }
    }
    for deg in (m..2 * m).rev() {
        let top = prod[deg];
        if top == 0 {
            continue;
        }
        prod[deg] = 0;
        for k in 0..m {
            let sub = (top as u128 * f[k] as u128 % p as u128) as u64;
            let idx = deg - m + k;
            prod[idx] = (prod[idx] + p - sub) % p;
        }
    }
    prod.truncate(m);
    prod
}

fn poly_pow_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let m = f.len() - 1;
    let mut acc = vec![0u64; m];
    acc[0] = 1;
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, f, p);
        }
        b = poly_mul_mod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

/// True iff the monic `f` (coefficients `c_0..=c_m`) is primitive over F_p,
/// i.e. `x` has multiplicative order exactly `q - 1` modulo `f`.
fn is_primitive_poly(f: &[u64], p: u64, q: u64, order_factors: &[u64]) -> bool {
    let m = f.len() - 1;
    if m == 0 || f[m] != 1 || f.iter().any(|&c| c >= p) || f[0] == 0 {
        return false;
    }
    if m == 1 {
        let root = (p - f[0]) % p;
        return pow_mod(root, q - 1, p) == 1
            && order_factors.iter().all(|&r| pow_mod(root, (q - 1) / r, p) != 1);
    }
    // The norm (-1)^m c_0 of a primitive element generates F_p^*.
    let norm = if m.is_multiple_of(2) { f[0] } else { (p - f[0]) % p };
    if p > 2 && prime_factors(p - 1).iter().any(|&r| pow_mod(norm, (p - 1) / r, p) == 1) {
        return false;
    }
    let mut x = vec![0u64; m];
    x[1] = 1;
    let is_one = |v: &[u64]| v[0] == 1 && v[1..].iter().all(|&c| c == 0);
    is_one(&poly_pow_mod(&x, q - 1, f, p))
        && order_factors.iter().all(|&r| !is_one(&poly_pow_mod(&x, (q - 1) / r, f, p)))
}

/// Smallest monic primitive polynomial, comparing `(c_0, c_1, ..., c_{m-1})`
/// lexicographically.
fn find_primitive_poly(p: u64, m: u32, q: u64, order_factors: &[u64]) -> Result<Vec<u64>> {
    let m_us = m as usize;
    let mut coeffs = vec![0u64; m_us + 1];
    coeffs[m_us] = 1;
    coeffs[0] = 1;
    loop {
        if is_primitive_poly(&coeffs, p, q, order_factors) {
            return Ok(coeffs);
        }
        // Odometer where c_{m-1} moves fastest and c_0 slowest.
        let mut pos = m_us;
        loop {
            if pos == 0 {
                return Err(Error::NoPrimitivePolynomialFound { p, m });
            }
            pos -= 1;
            coeffs[pos] += 1;
            if coeffs[pos] < p {
                break;
            }
            coeffs[pos] = 0;
        }
    }
}

fn read_cached(dir: &Path, p: u64, m: u32) -> Option<Vec<u64>> {
    let text = fs::read_to_string(dir.join(CACHE_FILE)).ok()?;
    text.lines().find_map(|line| {
        let nums: Vec<u64> = line.split_whitespace().map(|t| t.parse().ok()).collect::<Option<_>>()?;
        (nums.len() == m as usize + 3 && nums[0] == p && nums[1] == m as u64).then(|| nums[2..].to_vec())
    })
}

fn write_cached(dir: &Path, p: u64, m: u32, f: &[u64]) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut file = fs::OpenOptions::new().create(true).append(true).open(dir.join(CACHE_FILE))?;
    let coeffs: Vec<String> = f.iter().map(u64::to_string).collect();
    writeln!(file, "{p} {m} {}", coeffs.join(" "))
}

/// True iff `n = (p^m - 1)/k` divides no `p^a - 1` with `1 <= a < m`.
pub fn is_primitive_divisor(p: u64, m: u32, k: u64) -> Result<bool> {
    let q = checked_pow(p, m).ok_or_else(|| Error::InvalidParameters(format!("{p}^{m} overflows")))?;
    if k == 0 || (q - 1) % k != 0 {
        return Err(Error::NotADivisor { divisor: k.to_string(), of: (q - 1).to_string() });
    }
    let n = (q - 1) / k;
    if n == 1 {
        return Ok(false);
    }
    Ok((1..m).all(|a| pow_mod(p, a as u64, n) != 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fields_upto(limit: u64) -> Vec<FieldCtx> {
        let mut out = Vec::new();
        for p in (2..=limit).filter(|&p| is_prime(p)) {
            let mut m = 1;
            while p.pow(m) <= limit {
                out.push(build_field(p, m).unwrap());
                m += 1;
            }
        }
        out
    }

    #[test]
    fn orders_of_small_fields() {
        assert_eq!(build_field(3, 5).unwrap().q(), 243);
        let f16 = build_field(2, 4).unwrap();
        assert_eq!(f16.q(), 16);
        assert_eq!(f16.modulus().len(), 5);
        assert_eq!(build_field(7, 3).unwrap().order(), 342);
    }

    #[test]
    fn smallest_primitive_polynomials() {
        // x^4 + x^3 + 1 is (1,0,0,1,1); x^4 + 1 is not even irreducible.
        assert_eq!(build_field(2, 4).unwrap().modulus(), &[1, 0, 0, 1, 1]);
        // x + 1 over F_3: root -1 = 2 generates F_3^*.
        assert_eq!(build_field(3, 1).unwrap().modulus(), &[1, 1]);
        // Over F_7, c_0 = 1 gives root 6 of order 2; c_0 = 2 gives the primitive root 5.
        let f7 = build_field(7, 1).unwrap();
        let root = (7 - f7.modulus()[0]) % 7;
        assert_eq!(multiplicative_order_mod(root, 7), 6);
        assert_eq!(f7.modulus()[0], 2);
    }

    fn multiplicative_order_mod(a: u64, p: u64) -> u64 {
        (1..p).find(|&e| pow_mod(a, e, p) == 1).unwrap()
    }

    #[test]
    fn unknown_primes_and_caps() {
        assert_eq!(build_field(4, 2).unwrap_err(), Error::NotPrime(4));
        let cfg = FieldConfig { table_cap: 100, ..FieldConfig::default() };
        assert!(matches!(FieldCtx::new(3, 5, &cfg), Err(Error::FieldTooLarge { .. })));
        let cfg = FieldConfig { build_tables: false, ..FieldConfig::default() };
        let big = FieldCtx::new(2, 40, &cfg).unwrap();
        assert!(big.add(big.one(), big.one()).is_err());
    }

    #[test]
    fn omega_has_full_order() {
        for ctx in fields_upto(1 << 10) {
            let ord = ctx.order();
            assert_eq!(ctx.pow(ctx.omega(), ord), ctx.one());
            for r in prime_factors(ord) {
                assert_ne!(ctx.pow(ctx.omega(), ord / r), ctx.one());
            }
        }
    }

    #[test]
    fn antilog_multiplication_is_consistent() {
        // Multiply codes as polynomials and compare with exponent addition.
        for ctx in fields_upto(1 << 8) {
            let f = ctx.modulus().to_vec();
            for i in 0..ctx.order() {
                for j in (0..ctx.order()).step_by(7) {
                    let a = ctx.coefficients(ctx.element(i));
                    let b = ctx.coefficients(ctx.element(j));
                    let prod = poly_mul_mod(&a, &b, &f, ctx.p());
                    assert_eq!(prod, ctx.coefficients(ctx.element(i + j)));
                }
            }
        }
    }

    #[test]
    fn zech_addition_matches_vector_addition() {
        for ctx in fields_upto(1 << 9) {
            for i in 0..ctx.order() {
                for j in (0..ctx.order()).step_by(5) {
                    let (a, b) = (ctx.element(i), ctx.element(j));
                    let sum = ctx.add(a, b).unwrap();
                    let expect = ctx.add_codes(ctx.code(a).unwrap(), ctx.code(b).unwrap());
                    assert_eq!(ctx.code(sum).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn trace_basics() {
        let f243 = build_field(3, 5).unwrap();
        assert_eq!(f243.trace(FieldElement::Zero), 0);
        assert_eq!(f243.trace(f243.one()), 2);
        let f16 = build_field(2, 4).unwrap();
        let balance: i64 = std::iter::once(FieldElement::Zero)
            .chain(f16.nonzero_elements())
            .map(|x| if f16.trace(x) == 0 { 1 } else { -1 })
            .sum();
        assert_eq!(balance, 0);
    }

    #[test]
    fn trace_is_linear_balanced_and_frobenius_invariant() {
        for ctx in fields_upto(1 << 12) {
            let p = ctx.p();
            let mut fiber = vec![0u64; p as usize];
            fiber[0] += 1;
            for x in ctx.nonzero_elements() {
                fiber[ctx.trace(x) as usize] += 1;
                assert_eq!(ctx.trace(ctx.pow(x, p)), ctx.trace(x));
            }
            let expected = ctx.q() / p;
            assert!(fiber.iter().all(|&c| c == expected), "q = {}", ctx.q());
            for i in (0..ctx.order()).step_by(3) {
                for j in (0..ctx.order()).step_by(11) {
                    let (a, b) = (ctx.element(i), ctx.element(j));
                    let s = ctx.add(a, b).unwrap();
                    assert_eq!(ctx.trace(s), (ctx.trace(a) + ctx.trace(b)) % p);
                }
            }
        }
    }

    #[test]
    fn tableless_trace_agrees_with_tables() {
        let cfg = FieldConfig { build_tables: false, ..FieldConfig::default() };
        for (p, m) in [(2, 6), (3, 4), (5, 3), (7, 2)] {
            let with = build_field(p, m).unwrap();
            let without = FieldCtx::new(p, m, &cfg).unwrap();
            assert_eq!(with.modulus(), without.modulus());
            for x in with.nonzero_elements() {
                assert_eq!(with.trace(x), without.trace(x));
                assert_eq!(with.coefficients(x), without.coefficients(x));
            }
        }
    }

    #[test]
    fn coset_indices() {
        let f243 = build_field(3, 5).unwrap();
        assert_eq!(f243.power_coset_index(f243.element(7), 3), Err(Error::NotADivisor {
            divisor: "3".into(),
            of: "242".into()
        }));
        let f16 = build_field(2, 4).unwrap();
        assert_eq!(f16.power_coset_index(f16.element(7), 3).unwrap(), 1);
        for x in f16.nonzero_elements() {
            assert_eq!(f16.power_coset_index(f16.pow(x, 3), 3).unwrap(), 0);
        }
        let mut sizes = [0u32; 11];
        for x in f243.nonzero_elements() {
            sizes[f243.power_coset_index(x, 11).unwrap() as usize] += 1;
        }
        assert!(sizes.iter().all(|&s| s == 22));
        assert_eq!(f243.power_coset_index(FieldElement::Zero, 11), Err(Error::ZeroElement));
    }

    #[test]
    fn primitive_divisors() {
        assert!(is_primitive_divisor(3, 5, 11).unwrap());
        assert!(!is_primitive_divisor(2, 2, 3).unwrap());
        assert!(is_primitive_divisor(5, 4, 4).unwrap());
        // Oracle: trial division over a = 1..m-1.
        for (p, m) in [(2u64, 6u32), (3, 4), (5, 4), (7, 3), (2, 12)] {
            let q = p.pow(m);
            for k in crate::arith::divisors(q - 1) {
                let n = (q - 1) / k;
                let oracle = n > 1 && (1..m).all(|a| (p.pow(a) - 1) % n != 0);
                assert_eq!(is_primitive_divisor(p, m, k).unwrap(), oracle);
            }
        }
        assert!(is_primitive_divisor(3, 5, 4).is_err());
    }

    #[test]
    fn modulus_cache_roundtrip() {
        let dir = std::env::temp_dir().join(format!("gpspec-cache-{}", std::process::id()));
        let cfg = FieldConfig { cache_dir: Some(dir.clone()), ..FieldConfig::default() };
        let first = FieldCtx::new(5, 3, &cfg).unwrap();
        let text = fs::read_to_string(dir.join(CACHE_FILE)).unwrap();
        assert!(text.starts_with("5 3 "));
        let second = FieldCtx::new(5, 3, &cfg).unwrap();
        assert_eq!(first.modulus(), second.modulus());
        assert_eq!(first.modulus(), build_field(5, 3).unwrap().modulus());
        let _ = fs::remove_dir_all(dir);
    }
}
