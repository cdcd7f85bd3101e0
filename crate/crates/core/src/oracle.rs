//! Brute-force oracles on the explicit Cayley graph.

use std::collections::BTreeSet;

use faer::{Mat, Side};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{is_prime, mul_mod, pow_mod};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::periods::{cyclotomic_value, tally_traces, IntPoly, Value};
use crate::spectra::{simple, Source, Spectrum, EIGEN_TOL};

pub const DEFAULT_ORACLE_CAP: u64 = 1 << 12;

/// Γ(k,q) with vertices labelled by element codes.
#[derive(Clone, Debug)]
pub struct AdjacencyGraph {
    pub q: usize,
    pub k: u64,
    pub degree: usize,
    /// Row-major `q × degree` neighbour codes.
    neighbours: Vec<u32>,
}

impl AdjacencyGraph {
    pub fn neighbours(&self, v: usize) -> &[u32] {
        &self.neighbours[v * self.degree..(v + 1) * self.degree]
    }

    /// One bit per vertex, `words` u64 words per row.
    fn bit_rows(&self) -> (Vec<u64>, usize) {
        let words = self.q.div_ceil(64);
        let mut rows = vec![0u64; self.q * words];
        for v in 0..self.q {
            for &u in self.neighbours(v) {
                rows[v * words + u as usize / 64] |= 1 << (u % 64);
            }
        }
        (rows, words)
    }

    pub fn is_undirected(&self) -> bool {
        let (rows, words) = self.bit_rows();
        (0..self.q).all(|v| {
            self.neighbours(v).iter().all(|&u| rows[u as usize * words + v / 64] >> (v % 64) & 1 == 1)
        })
    }

    fn dense(&self) -> Mat<f64> {
        let mut a = Mat::<f64>::zeros(self.q, self.q);
        for v in 0..self.q {
            for &u in self.neighbours(v) {
                a[(v, u as usize)] = 1.0;
            }
        }
        a
    }

    /// Adjacency matrix reduced modulo `prime`.
    fn dense_mod(&self, laplacian: bool) -> Vec<Vec<u64>> {
        (0..self.q)
            .map(|v| {
                let mut row = vec![0u64; self.q];
                for &u in self.neighbours(v) {
                    row[u as usize] = 1;
                }
                if laplacian {
                    for x in row.iter_mut() {
                        *x = if *x == 1 { u64::MAX } else { 0 };
                    }
                    row[v] = self.degree as u64;
                }
                row
            })
            .collect()
    }
}

/// Cayley graph on F_q with connection set R_k, the nonzero k-th powers.
pub fn build_adjacency(ctx: &FieldCtx, k: u64, cap: u64) -> Result<AdjacencyGraph> {
    let q = ctx.q();
    if k == 0 || !(q - 1).is_multiple_of(k) {
        return Err(Error::NotADivisor { divisor: k.to_string(), of: (q - 1).to_string() });
    }
    if !simple(ctx.p(), q, k) {
        return Err(Error::DirectedGraph { k, q: q.to_string() });
    }
    if q > cap || !ctx.has_tables() {
        return Err(Error::FieldTooLarge { q: q.to_string(), cap });
    }
    let degree = ((q - 1) / k) as usize;
    let antilog = ctx.antilog_table()?;
    let connection: Vec<u64> = (0..degree).map(|j| antilog[j * k as usize] as u64).collect();
    let mut neighbours = Vec::with_capacity(q as usize * degree);
    for v in 0..q {
        neighbours.extend(connection.iter().map(|&r| ctx.add_codes(v, r) as u32));
    }
    Ok(AdjacencyGraph { q: q as usize, k, degree, neighbours })
}

#[derive(Clone, Debug)]
pub struct OracleSpectrum {
    pub spectrum: Spectrum,
    /// λ_γ = Σ_{y ∈ R_k} ζ_p^{Tr(γy)}, sorted descending.
    pub character_sums: Vec<f64>,
    /// Dense symmetric eigensolver output, sorted descending.
    pub eigenvalues: Vec<f64>,
    /// Largest gap between the two sorted lists.
    pub max_gap: f64,
}

/// Eigenvalues two ways: additive character sums and a dense eigensolve.
pub fn oracle_spectrum(ctx: &FieldCtx, g: &AdjacencyGraph) -> Result<OracleSpectrum> {
    let p = ctx.p();
    let ord = ctx.order();
    let trace = ctx.trace_table()?;
    let k = g.k;
    let mut chars: Vec<f64> = std::iter::once(g.degree as f64)
        .chain((0..ord).into_par_iter().map_init(
            || (vec![0u64; p as usize], Vec::new()),
            |(scratch, touched), a| {
                cyclotomic_value(p, &tally_traces(trace, a, k, g.degree as u64, scratch, touched)).re()
            },
        ).collect::<Vec<_>>())
        .collect();
    chars.sort_by(|a, b| b.total_cmp(a));

    let mut eig = g
        .dense()
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| Error::OracleDisagreement(format!("eigensolver failed: {e:?}")))?;
    eig.sort_by(|a, b| b.total_cmp(a));

    let max_gap = chars.iter().zip(&eig).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    if chars.len() != eig.len() || max_gap > EIGEN_TOL {
        return Err(Error::OracleDisagreement(format!("character sums and eigensolver differ by {max_gap:e}")));
    }

    let mut entries: Vec<(Value, BigInt)> = Vec::new();
    let mut i = 0;
    while i < eig.len() {
        let mut j = i + 1;
        while j < eig.len() && (eig[j] - eig[i]).abs() <= EIGEN_TOL {
            j += 1;
        }
        let mean = eig[i..j].iter().sum::<f64>() / (j - i) as f64;
        let rounded = mean.round();
        let value = if (mean - rounded).abs() <= EIGEN_TOL {
            Value::int(rounded as i64)
        } else {
            Value::Approx { re: mean, im: 0.0 }
        };
        entries.push((value, BigInt::from(j - i)));
        i = j;
    }
    let degree = BigInt::from(g.degree);
    let top = entries.first().map_or_else(BigInt::zero, |(_, m)| m.clone());
    let mu = if g.degree == 0 { 0 } else { ((top - 1u32) / &degree).to_u64().unwrap_or(0) };
    let spectrum = Spectrum::new(BigInt::from(g.q), k, degree, false, entries, mu, Source::Oracle);
    Ok(OracleSpectrum { spectrum, character_sums: chars, eigenvalues: eig, max_gap })
}

/// Common-neighbour counts over all adjacent and all non-adjacent vertex pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonNeighbours {
    pub adjacent: BTreeSet<u64>,
    pub nonadjacent: BTreeSet<u64>,
}

impl CommonNeighbours {
    /// `(e, d)` when both counts are constant.
    pub fn srg_constants(&self) -> Option<(u64, u64)> {
        let single = |s: &BTreeSet<u64>| (s.len() == 1).then(|| *s.iter().next().unwrap());
        Some((single(&self.adjacent)?, single(&self.nonadjacent)?))
    }
}

pub fn common_neighbours(g: &AdjacencyGraph) -> CommonNeighbours {
    let (rows, words) = g.bit_rows();
    let q = g.q;
    let (adjacent, nonadjacent) = (0..q)
        .into_par_iter()
        .map(|u| {
            let mut adj = BTreeSet::new();
            let mut non = BTreeSet::new();
            let ru = &rows[u * words..(u + 1) * words];
            for v in u + 1..q {
                let rv = &rows[v * words..(v + 1) * words];
                let c: u32 = ru.iter().zip(rv).map(|(a, b)| (a & b).count_ones()).sum();
                if ru[v / 64] >> (v % 64) & 1 == 1 {
                    adj.insert(c as u64);
                } else {
                    non.insert(c as u64);
                }
            }
            (adj, non)
        })
        .reduce(
            || (BTreeSet::new(), BTreeSet::new()),
            |mut a, b| {
                a.0.extend(b.0);
                a.1.extend(b.1);
                a
            },
        );
    CommonNeighbours { adjacent, nonadjacent }
}

/// The `count` largest primes below 2^61.
pub fn oracle_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c = (1u64 << 61) - 1;
    while out.len() < count {
        if is_prime(c) {
            out.push(c);
        }
        c -= 2;
    }
    out
}

fn inv_mod(a: u64, prime: u64) -> u64 {
    pow_mod(a, prime - 2, prime)
}

/// Determinant modulo `prime` by Gaussian elimination. Entries equal to
/// `u64::MAX` stand for -1.
fn det_mod(mut a: Vec<Vec<u64>>, prime: u64) -> u64 {
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x = if *x == u64::MAX { prime - 1 } else { *x % prime };
        }
    }
    let n = a.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(piv, col);
            det = (prime - det) % prime;
        }
        det = mul_mod(det, a[col][col], prime);
        let inv = inv_mod(a[col][col], prime);
        let pivot_row = a[col].clone();
        for row in a.iter_mut().skip(col + 1) {
            if row[col] == 0 {
                continue;
            }
            let f = mul_mod(row[col], inv, prime);
            for (x, &pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = (*x + prime - mul_mod(f, pv, prime)) % prime;
            }
        }
    }
    det
}

/// Kirchhoff: the (0,0) cofactor of the Laplacian, modulo `prime`.
pub fn laplacian_cofactor_mod(g: &AdjacencyGraph, prime: u64) -> u64 {
    let lap = g.dense_mod(true);
    let minor: Vec<Vec<u64>> = lap.into_iter().skip(1).map(|row| row[1..].to_vec()).collect();
    det_mod(minor, prime)
}

/// Kirchhoff's cofactor computed exactly by fraction-free Bareiss elimination.
pub fn laplacian_cofactor_exact(g: &AdjacencyGraph) -> BigInt {
    let lap = g.dense_mod(true);
    let mut a: Vec<Vec<BigInt>> = lap
        .into_iter()
        .skip(1)
        .map(|row| row[1..].iter().map(|&x| if x == u64::MAX { BigInt::from(-1) } else { BigInt::from(x) }).collect())
        .collect();
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if piv != col {
            a.swap(piv, col);
            sign = -sign;
        }
        for r in col + 1..n {
            for c in col + 1..n {
                let v = (&a[r][c] * &a[col][col] - &a[r][col] * &a[col][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[col][col].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

/// Polynomial product modulo `prime`, coefficients from the constant term upward.
pub fn poly_mul_mod_prime(a: &[u64], b: &[u64], prime: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let t = &mut out[i + j];
            *t = (*t + mul_mod(x, y, prime)) % prime;
        }
    }
    out
}

pub fn poly_pow_mod_prime(base: &[u64], mut e: u64, prime: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod_prime(&acc, &b, prime);
        }
        e >>= 1;
        if e > 0 {
            b = poly_mul_mod_prime(&b, &b, prime);
        }
    }
    acc
}

fn residue(x: &BigInt, prime: u64) -> u64 {
    let p = BigInt::from(prime);
    (((x % &p) + &p) % &p).to_u64().expect("residue fits")
}

/// Π (X - λ)^mult modulo `prime` for an exact spectrum.
pub fn charpoly_from_spectrum_mod(s: &Spectrum, prime: u64) -> Result<Vec<u64>> {
    let mut acc = vec![1u64];
    for (v, m) in s.exact_entries()? {
        let lin = [(prime - residue(&v, prime)) % prime, 1];
        let m = m.to_u64().ok_or(Error::InexactSpectrum)?;
        acc = poly_mul_mod_prime(&acc, &poly_pow_mod_prime(&lin, m, prime), prime);
    }
    Ok(acc)
}

/// (X - n) Ψ(X)^n modulo `prime`.
pub fn charpoly_from_periods_mod(psi: &IntPoly, n: u64, prime: u64) -> Vec<u64> {
    let base = psi.reduce_mod(prime);
    let lin = [(prime - n % prime) % prime, 1];
    poly_mul_mod_prime(&lin, &poly_pow_mod_prime(&base, n, prime), prime)
}

/// det(X·I - A) modulo `prime` via reduction to upper Hessenberg form.
pub fn hessenberg_charpoly_mod(g: &AdjacencyGraph, prime: u64) -> Vec<u64> {
    let mut h = g.dense_mod(false);
    let n = h.len();
    for col in 0..n.saturating_sub(2) {
        let Some(piv) = (col + 1..n).find(|&r| h[r][col] != 0) else {
            continue;
        };
        if piv != col + 1 {
            h.swap(piv, col + 1);
            for row in h.iter_mut() {
                row.swap(piv, col + 1);
            }
        }
        let inv = inv_mod(h[col + 1][col], prime);
        for r in col + 2..n {
            if h[r][col] == 0 {
                continue;
            }
            let f = mul_mod(h[r][col], inv, prime);
            // Row r -= f · row (col+1); column (col+1) += f · column r.
            let pivot_row = h[col + 1].clone();
            for (x, &pv) in h[r].iter_mut().zip(&pivot_row) {
                *x = (*x + prime - mul_mod(f, pv, prime)) % prime;
            }
            for row in h.iter_mut() {
                row[col + 1] = (row[col + 1] + mul_mod(f, row[r], prime)) % prime;
            }
        }
    }
    // p_{i+1}(X) = (X - h_ii) p_i - Σ_{j<i} h_ji (Π_{l=j+1}^{i} h_{l,l-1}) p_j.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for i in 0..n {
        let mut next = poly_mul_mod_prime(&polys[i], &[(prime - h[i][i]) % prime, 1], prime);
        let mut sub = 1u64;
        for j in (0..i).rev() {
            sub = mul_mod(sub, h[j + 1][j], prime);
            let coef = mul_mod(sub, h[j][i], prime);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[j].iter().enumerate() {
                next[d] = (next[d] + prime - mul_mod(coef, c, prime)) % prime;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}
