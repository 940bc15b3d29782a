//! Exact integer spectra.
//!
//! The characteristic polynomial `det(xI - M)` is computed with the
//! Faddeev–LeVerrier recurrence over big integers. Integer roots are then
//! peeled off by synthetic division, and each multiplicity is certified by an
//! exact rank computation (fraction-free elimination). A cyclic Jacobi
//! eigensolver provides an independent floating-point cross-check.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{distance_matrix, IntMatrix};

/// Default Jacobi stopping tolerance, relative to the Frobenius norm.
pub const DEFAULT_JACOBI_TOL: f64 = 1e-12;

/// Monic characteristic polynomial; `coeffs[k]` is the coefficient of `x^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// Builds a polynomial from ascending coefficients; the leading one must be 1.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        match coeffs.last() {
            Some(lead) if lead.is_one() => Ok(CharPoly { coeffs }),
            _ => Err(Error::invalid("polynomial must be monic")),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Divides by `(x - r)`, returning the quotient when the remainder is zero.
    fn deflate(&self, r: &BigInt) -> Option<CharPoly> {
        let d = self.degree();
        let mut quotient = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for k in (0..d).rev() {
            carry = &carry * r + &self.coeffs[k + 1];
            quotient[k] = carry.clone();
        }
        let remainder = carry * r + &self.coeffs[0];
        remainder.is_zero().then_some(CharPoly { coeffs: quotient })
    }

    /// Upper bound on the absolute value of any root (Fujiwara).
    fn root_bound(&self) -> BigInt {
        let d = self.degree();
        let mut best = BigInt::zero();
        for k in 1..=d {
            let mut c = self.coeffs[d - k].abs();
            if k == d {
                c = (c + 1u32) / 2u32;
            }
            if c.is_zero() {
                continue;
            }
            let root = c.nth_root(k as u32) + 1u32;
            if root > best {
                best = root;
            }
        }
        best * 2u32
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Exact integer spectrum: `(eigenvalue, multiplicity)` pairs, values strictly
/// decreasing, multiplicities positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Spectrum {
    entries: Vec<(i64, usize)>,
}

impl Spectrum {
    /// Normalizes arbitrary pairs: equal values merge, zero multiplicities drop.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let mut entries: Vec<(i64, usize)> = Vec::new();
        let mut raw: Vec<(i64, usize)> = pairs.into_iter().filter(|&(_, m)| m > 0).collect();
        raw.sort_by(|a, b| b.0.cmp(&a.0));
        for (v, m) in raw {
            match entries.last_mut() {
                Some(last) if last.0 == v => last.1 += m,
                _ => entries.push((v, m)),
            }
        }
        Spectrum { entries }
    }

    pub fn entries(&self) -> &[(i64, usize)] {
        &self.entries
    }

    pub fn dimension(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn multiplicity(&self, value: i64) -> usize {
        self.entries
            .iter()
            .find(|&&(v, _)| v == value)
            .map_or(0, |&(_, m)| m)
    }

    /// Distinct eigenvalues, descending.
    pub fn support(&self) -> Vec<i64> {
        self.entries.iter().map(|&(v, _)| v).collect()
    }

    pub fn largest(&self) -> Option<(i64, usize)> {
        self.entries.first().copied()
    }

    /// `Σ λ·m`.
    pub fn first_moment(&self) -> i128 {
        self.entries
            .iter()
            .map(|&(v, m)| v as i128 * m as i128)
            .sum()
    }

    /// `Σ λ²·m`.
    pub fn second_moment(&self) -> i128 {
        self.entries
            .iter()
            .map(|&(v, m)| (v as i128) * (v as i128) * m as i128)
            .sum()
    }

    pub fn negated(&self) -> Spectrum {
        Spectrum::from_pairs(self.entries.iter().map(|&(v, m)| (-v, m)))
    }

    /// Multiset union.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        Spectrum::from_pairs(self.entries.iter().chain(other.entries.iter()).copied())
    }

    /// Serialized form: `[["value", multiplicity], ...]` with decimal-string values.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|&(v, m)| json!([v.to_string(), m]))
                .collect(),
        )
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, (v, m)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "[{v},{m}]")?;
        }
        f.write_str("]")
    }
}

/// Result of the integer-root search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootOutcome {
    Integral(Spectrum),
    /// The polynomial does not split over the integers; `found` holds the
    /// integer roots that were extracted and `residual` the unsplit factor.
    NotIntegral {
        found: Spectrum,
        residual: CharPoly,
    },
}

impl RootOutcome {
    pub fn integral(self) -> Option<Spectrum> {
        match self {
            RootOutcome::Integral(s) => Some(s),
            RootOutcome::NotIntegral { .. } => None,
        }
    }

    pub fn is_integral(&self) -> bool {
        matches!(self, RootOutcome::Integral(_))
    }

    pub fn residual_degree(&self) -> usize {
        match self {
            RootOutcome::Integral(_) => 0,
            RootOutcome::NotIntegral { residual, .. } => residual.degree(),
        }
    }
}

/// `A · M` for a small-integer `A` and a big-integer `M`, both `n × n`.
///
/// Rows of `A` are grouped by entry value so that each group costs only
/// additions plus one scalar multiple per column.
fn mul_small_big(a: &IntMatrix, m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.dim();
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut groups: Vec<(i64, Vec<usize>)> = Vec::new();
            for (k, &v) in a.row(i).iter().enumerate() {
                if v == 0 {
                    continue;
                }
                match groups.iter_mut().find(|(g, _)| *g == v) {
                    Some((_, ks)) => ks.push(k),
                    None => groups.push((v, vec![k])),
                }
            }
            let mut out = vec![BigInt::zero(); n];
            let mut partial = vec![BigInt::zero(); n];
            for (value, ks) in groups {
                for p in partial.iter_mut() {
                    p.set_zero();
                }
                for &k in &ks {
                    for (p, x) in partial.iter_mut().zip(&m[k]) {
                        *p += x;
                    }
                }
                for (o, p) in out.iter_mut().zip(&partial) {
                    if value == 1 {
                        *o += p;
                    } else {
                        *o += p * value;
                    }
                }
            }
            out
        })
        .collect()
}

/// `det(xI - M)` by the Faddeev–LeVerrier recurrence
/// `M_k = A·M_{k-1} + c_{n-k+1}·I`, `c_{n-k} = -tr(A·M_k) / k`.
///
/// Every division by `k` must be exact; a remainder means a bug and is
/// reported as [`Error::ArithmeticFault`].
pub fn char_poly(m: &IntMatrix) -> Result<CharPoly> {
    let n = m.dim();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut current: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = if k == 1 {
            vec![vec![BigInt::zero(); n]; n]
        } else {
            mul_small_big(m, &current)
        };
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        // tr(A·M_k) = Σ_i Σ_j a_ij · (M_k)_ji
        let mut trace = BigInt::zero();
        for i in 0..n {
            for (j, &a) in m.row(i).iter().enumerate() {
                if a != 0 {
                    trace += &next[j][i] * a;
                }
            }
        }
        let (q, r) = trace.div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::ArithmeticFault(format!(
                "trace {trace} not divisible by {k} at step {k}"
            )));
        }
        coeffs[n - k] = -q;
        current = next;
    }
    Ok(CharPoly { coeffs })
}

/// Extracts all integer roots with multiplicity.
///
/// Zero roots are stripped first as a power of `x`; the remaining candidates
/// are divisors of the constant term, tried in increasing absolute value (both
/// signs) up to a root bound, each deflated repeatedly until it no longer
/// divides.
pub fn integer_roots(p: &CharPoly) -> RootOutcome {
    let mut found: Vec<(i64, usize)> = Vec::new();
    let zeros = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut rest = CharPoly {
        coeffs: p.coeffs[zeros..].to_vec(),
    };
    if zeros > 0 {
        found.push((0, zeros));
    }
    if rest.degree() > 0 {
        let bound = rest.root_bound();
        let mut r = BigInt::one();
        while rest.degree() > 0 && r <= bound {
            for candidate in [r.clone(), -r.clone()] {
                if !(&rest.coeffs[0] % &candidate).is_zero() {
                    continue;
                }
                let mut mult = 0;
                while rest.degree() > 0 {
                    match rest.deflate(&candidate) {
                        Some(q) => {
                            rest = q;
                            mult += 1;
                        }
                        None => break,
                    }
                }
                if mult > 0 {
                    let v = candidate.to_i64().expect("integer root fits in i64");
                    found.push((v, mult));
                }
            }
            r += 1u32;
        }
    }
    let found = Spectrum::from_pairs(found);
    if rest.degree() == 0 {
        RootOutcome::Integral(found)
    } else {
        RootOutcome::NotIntegral {
            found,
            residual: rest,
        }
    }
}

fn to_big_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Rank of a (possibly rectangular) integer matrix by fraction-free
/// Bareiss elimination.
pub fn rank(rows: &[Vec<i64>]) -> Result<usize> {
    Ok(bareiss(to_big_rows(rows))?.0)
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    let (rank, det) = bareiss(to_big_rows(&m.to_rows()))?;
    Ok(if rank < m.dim() { BigInt::zero() } else { det })
}

/// Returns the rank and, for full-rank square input, the determinant.
fn bareiss(mut a: Vec<Vec<BigInt>>) -> Result<(usize, BigInt)> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            sign = -sign;
        }
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[c].clone();
        let results: Result<Vec<()>> = bottom
            .par_iter_mut()
            .map(|row| {
                let factor = row[c].clone();
                for j in c + 1..cols {
                    let num = &row[j] * &pivot - &factor * &pivot_row[j];
                    let (q, r) = num.div_rem(&prev);
                    if !r.is_zero() {
                        return Err(Error::ArithmeticFault(
                            "inexact division in fraction-free elimination".into(),
                        ));
                    }
                    row[j] = q;
                }
                row[c].set_zero();
                Ok(())
            })
            .collect();
        results?;
        prev = pivot;
        rank += 1;
    }
    let det = if sign < 0 { -prev } else { prev };
    Ok((rank, det))
}

/// `dim - rank(M - λI)`.
pub fn nullity(m: &IntMatrix, lambda: i64) -> Result<usize> {
    Ok(m.dim() - rank(&m.shift(lambda).to_rows())?)
}

/// Characteristic polynomial, integer roots, then a nullity certificate for
/// every root. Symmetric input is required because the certificate relies on
/// geometric and algebraic multiplicities agreeing.
pub fn exact_integer_spectrum(m: &IntMatrix) -> Result<RootOutcome> {
    if !m.is_symmetric() {
        return Err(Error::invalid("exact spectrum requires a symmetric matrix"));
    }
    let outcome = integer_roots(&char_poly(m)?);
    if let RootOutcome::Integral(spec) = &outcome {
        certify(m, spec)?;
    }
    Ok(outcome)
}

/// Like [`exact_integer_spectrum`] but a non-integral spectrum is an error.
pub fn integral_spectrum(m: &IntMatrix) -> Result<Spectrum> {
    match exact_integer_spectrum(m)? {
        RootOutcome::Integral(s) => Ok(s),
        RootOutcome::NotIntegral { residual, .. } => Err(Error::invalid(format!(
            "spectrum is not integral (residual degree {})",
            residual.degree()
        ))),
    }
}

fn certify(m: &IntMatrix, spec: &Spectrum) -> Result<()> {
    spec.entries()
        .par_iter()
        .map(|&(value, mult)| {
            let geo = nullity(m, value)?;
            if geo != mult {
                return Err(Error::CertificateFailure(format!(
                    "eigenvalue {value}: algebraic multiplicity {mult}, nullity {geo}"
                )));
            }
            Ok(())
        })
        .collect::<Result<Vec<()>>>()?;
    Ok(())
}

/// True iff the distance matrix has an integral spectrum.
pub fn is_distance_integral(g: &Graph) -> Result<bool> {
    Ok(exact_integer_spectrum(&distance_matrix(g)?)?.is_integral())
}

/// Floating-point spectrum with clustered multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxSpectrum {
    entries: Vec<(f64, usize)>,
    merge_threshold: f64,
}

impl ApproxSpectrum {
    pub fn entries(&self) -> &[(f64, usize)] {
        &self.entries
    }

    pub fn merge_threshold(&self) -> f64 {
        self.merge_threshold
    }

    pub fn dimension(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    /// Largest deviation between matching clusters, or `None` if the cluster
    /// structure differs from `exact` (count or multiplicities).
    pub fn max_deviation(&self, exact: &Spectrum) -> Option<f64> {
        if self.entries.len() != exact.entries().len() {
            return None;
        }
        let mut worst = 0.0f64;
        for (&(approx, am), &(value, em)) in self.entries.iter().zip(exact.entries()) {
            if am != em {
                return None;
            }
            worst = worst.max((approx - value as f64).abs());
        }
        Some(worst)
    }

    pub fn agrees_with(&self, exact: &Spectrum, max_err: f64) -> bool {
        self.max_deviation(exact).is_some_and(|d| d < max_err)
    }
}

impl fmt::Display for ApproxSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, (v, m)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "[{v:.10},{m}]")?;
        }
        f.write_str("]")
    }
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps stop once the off-diagonal Frobenius mass falls below
/// `tol × ‖M‖_F`; eigenvalues closer than `10³ · tol · ‖M‖_F` are clustered.
pub fn float_spectrum(m: &IntMatrix, tol: f64) -> Result<ApproxSpectrum> {
    if !m.is_symmetric() {
        return Err(Error::invalid("Jacobi eigensolver requires a symmetric matrix"));
    }
    if !(tol > 0.0) {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let mut values = jacobi_eigenvalues(m, tol);
    values.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    let norm = m.frobenius_norm();
    let merge_threshold = 1e3 * tol * if norm > 0.0 { norm } else { 1.0 };

    let mut clusters: Vec<Vec<f64>> = Vec::new();
    for v in values {
        match clusters.last_mut() {
            Some(c) if (c[c.len() - 1] - v).abs() < merge_threshold => c.push(v),
            _ => clusters.push(vec![v]),
        }
    }
    let entries = clusters
        .into_iter()
        .map(|c| (c.iter().sum::<f64>() / c.len() as f64, c.len()))
        .collect();
    Ok(ApproxSpectrum {
        entries,
        merge_threshold,
    })
}

fn jacobi_eigenvalues(m: &IntMatrix, tol: f64) -> Vec<f64> {
    const MAX_SWEEPS: usize = 100;
    let n = m.dim();
    let mut a: Vec<f64> = m.rows().flatten().map(|&x| x as f64).collect();
    let total = m.frobenius_norm();
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };
    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= tol * total {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}
