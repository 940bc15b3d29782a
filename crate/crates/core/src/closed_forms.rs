//! Closed-form spectra for `K_n`, `Cr(n)` and `L(Cr(n))`, and the per-`n`
//! driver that compares each of them with the exact computation.
//!
//! The distance spectrum of `L(Cr(n))` is carried in two forms. The printed
//! form gives both `1` and `-1` the multiplicity `(n² - 3n + 1)/2`, which is
//! never an integer because `n(n - 3)` is always even. The corrected form
//! splits the `-2` eigenspace of `A` by the eigenvalue of `A3` on it:
//!
//! * `A3` is an involution with zero trace, so its `+1` and `-1` eigenspaces
//!   both have dimension `m/2`, where `m = n(n - 1)`.
//! * The `+1` space holds the all-ones vector, the `(n - 4)`-eigenspace of `A`
//!   (dimension `n - 1`) and the part of the `-2`-eigenspace on which the
//!   distance matrix acts as `1`. Hence `a4 = m/2 - n = n(n - 3)/2`.
//! * The `-1` space holds the `(n - 2)`-eigenspace of `A` (dimension `n - 1`)
//!   and the part of the `-2`-eigenspace on which the distance matrix acts as
//!   `-1`. Hence `a5 = m/2 - (n - 1) = (n - 1)(n - 2)/2`.
//!
//! So `a4 + a5 = n² - 3n + 1` and `a5 - a4 = 1`.

use std::collections::BTreeSet;
use std::time::Instant;

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::automorphism::{check_a3_structure, check_commuting_family};
use crate::error::{Error, Result};
use crate::graph::{make_crown, make_line_crown};
use crate::matrix::{
    adjacency_matrix, check_diameter3_identity, check_distance_decomposition, distance_i_from,
    distance_matrix, IntMatrix,
};
use crate::report::{ClaimId, ClaimRecord, Status, VerificationReport};
use crate::spectra::{float_spectrum, integral_spectrum, rank, Spectrum, DEFAULT_JACOBI_TOL};

/// Largest per-eigenvalue error accepted between the Jacobi and exact spectra.
pub const FLOAT_AGREEMENT: f64 = 1e-8;

/// `{(n-1)^1, (-1)^(n-1)}`.
pub fn spec_complete(n: usize) -> Result<Spectrum> {
    if n < 2 {
        return Err(Error::invalid("complete-graph spectrum needs n >= 2"));
    }
    let n = n as i64;
    Ok(Spectrum::from_pairs([(n - 1, 1), (-1, (n - 1) as usize)]))
}

/// Spectrum of `G × K_2` from the spectrum of `G`: every `λ` contributes `±λ`.
pub fn spec_double_cover(s: &Spectrum) -> Spectrum {
    s.union(&s.negated())
}

/// `{(n-1)^1, 1^(n-1), (-1)^(n-1), (1-n)^1}`.
pub fn spec_crown(n: usize) -> Result<Spectrum> {
    if n < 3 {
        return Err(Error::invalid("crown spectrum needs n >= 3"));
    }
    let k = n as i64 - 1;
    Ok(Spectrum::from_pairs([(k, 1), (1, n - 1), (-1, n - 1), (-k, 1)]))
}

/// Adjacency spectrum of the line graph of a `k`-regular graph on `order`
/// vertices: `2k - 2` once, `k - 2 + λ` for every other eigenvalue `λ`, and
/// `-2` with multiplicity `m - order` where `m = order·k/2`.
pub fn spec_line_of_regular(s: &Spectrum, k: usize, order: usize) -> Result<Spectrum> {
    if k < 2 {
        return Err(Error::invalid("line-graph spectrum rule needs k >= 2"));
    }
    if s.largest() != Some((k as i64, 1)) {
        return Err(Error::invalid(format!(
            "top eigenvalue must be ({k}, 1), got {:?}",
            s.largest()
        )));
    }
    if s.dimension() != order || (order * k) % 2 != 0 {
        return Err(Error::invalid("spectrum does not describe a k-regular graph of this order"));
    }
    let edges = order * k / 2;
    let k = k as i64;
    let shifted = s.entries().iter().skip(1).map(|&(v, m)| (k - 2 + v, m));
    Ok(Spectrum::from_pairs(
        std::iter::once((2 * k - 2, 1))
            .chain(shifted)
            .chain(std::iter::once((-2, edges.saturating_sub(order)))),
    ))
}

fn require_n4(n: usize, what: &str) -> Result<()> {
    if n < 4 {
        return Err(Error::invalid(format!("{what} needs n >= 4")));
    }
    Ok(())
}

/// `{(2n-4)^1, (n-2)^(n-1), (n-4)^(n-1), (-2)^(n²-3n+1)}`.
pub fn spec_line_crown_adjacency(n: usize) -> Result<Spectrum> {
    require_n4(n, "line-crown adjacency spectrum")?;
    let v = n as i64;
    Ok(Spectrum::from_pairs([
        (2 * v - 4, 1),
        (v - 2, n - 1),
        (v - 4, n - 1),
        (-2, n * n - 3 * n + 1),
    ]))
}

/// `{1^(m/2), (-1)^(m/2)}` with `m = n(n-1)`.
pub fn spec_a3(n: usize) -> Result<Spectrum> {
    require_n4(n, "distance-3 spectrum")?;
    let half = n * (n - 1) / 2;
    Ok(Spectrum::from_pairs([(1, half), (-1, half)]))
}

/// Distinct distance eigenvalues of `L(Cr(n))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueSet {
    pub values: BTreeSet<i64>,
    /// Set when two of the five listed values coincide.
    pub collision: Option<String>,
}

/// `{-n-1, -n+3, -1, 1, 2n²-4n+3}`; at `n = 4` the values `-n+3` and `-1` coincide.
pub fn distance_eigenvalue_set(n: usize) -> Result<EigenvalueSet> {
    require_n4(n, "distance eigenvalue set")?;
    let v = n as i64;
    let listed = [-v - 1, -v + 3, -1, 1, 2 * v * v - 4 * v + 3];
    let values: BTreeSet<i64> = listed.iter().copied().collect();
    let collision = (values.len() < listed.len()).then(|| {
        format!(
            "at n={n} the value -n+3 = {} coincides with -1; {} distinct values",
            -v + 3,
            values.len()
        )
    });
    Ok(EigenvalueSet { values, collision })
}

/// A closed form whose multiplicities may fail to be non-negative integers.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormResult {
    pub parameter_n: usize,
    /// Terms as stated, `(value, multiplicity)`.
    pub terms: Vec<(i64, Ratio<i64>)>,
    /// Normalized spectrum, present only when `wellformed`.
    pub spectrum: Option<Spectrum>,
    pub wellformed: bool,
    pub note: Option<String>,
}

impl ClosedFormResult {
    pub fn terms_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(v, m)| json!([v.to_string(), m.to_string()]))
                .collect(),
        )
    }
}

/// Distance spectrum as printed:
/// `{(2n²-4n+3)^1, 1^i, (-1)^i, (-n+3)^(n-1), (-n-1)^(n-1)}`, `i = (n²-3n+1)/2`.
pub fn spec_distance_line_crown_paper(n: usize) -> ClosedFormResult {
    let v = n as i64;
    let i = Ratio::new(v * v - 3 * v + 1, 2);
    let terms = vec![
        (2 * v * v - 4 * v + 3, Ratio::from_integer(1)),
        (1, i),
        (-1, i),
        (-v + 3, Ratio::from_integer(v - 1)),
        (-v - 1, Ratio::from_integer(v - 1)),
    ];
    let bad: Vec<String> = terms
        .iter()
        .filter(|(_, m)| !m.is_integer() || *m < Ratio::from_integer(0))
        .map(|(val, m)| format!("{val}^({m})"))
        .collect();
    let wellformed = bad.is_empty();
    let spectrum = wellformed.then(|| {
        Spectrum::from_pairs(
            terms
                .iter()
                .map(|(val, m)| (*val, m.to_integer().to_usize().unwrap_or(0))),
        )
    });
    let note = (!wellformed).then(|| {
        format!(
            "multiplicity i = (n^2-3n+1)/2 = {i} is not an integer (n^2-3n+1 = {} is odd); offending terms: {}",
            v * v - 3 * v + 1,
            bad.join(", ")
        )
    });
    ClosedFormResult {
        parameter_n: n,
        terms,
        spectrum,
        wellformed,
        note,
    }
}

/// Multiplicities `(a4, a5)` of the distance eigenvalues `1` and `-1` coming
/// from the `-2` eigenspace of `A`, obtained from the balance of the `±1`
/// eigenspaces of `A3` (see the module docs).
pub fn corrected_split(n: usize) -> (usize, usize) {
    let half = n * (n - 1) / 2;
    let plus_side = 1 + (n - 1);
    let minus_side = n - 1;
    (half - plus_side, half - minus_side)
}

/// Distance spectrum of `L(Cr(n))` with the corrected multiplicities
/// `a4 = n(n-3)/2` for `1` and `a5 = (n-1)(n-2)/2` for `-1`.
pub fn spec_distance_line_crown_corrected(n: usize) -> Result<Spectrum> {
    if n < 3 {
        return Err(Error::invalid("line-crown distance spectrum needs n >= 3"));
    }
    let v = n as i64;
    let (a4, a5) = corrected_split(n);
    Ok(Spectrum::from_pairs([
        (2 * v * v - 4 * v + 3, 1),
        (1, a4),
        (-1, a5),
        (-v + 3, n - 1),
        (-v - 1, n - 1),
    ]))
}

/// Dimension of `{x : (A - λI)x = 0, (A3 - σI)x = 0}`.
pub fn joint_eigenspace_dim(a: &IntMatrix, lambda: i64, a3: &IntMatrix, sigma: i64) -> Result<usize> {
    let mut rows = a.shift(lambda).to_rows();
    rows.extend(a3.shift(sigma).to_rows());
    Ok(a.dim() - rank(&rows)?)
}

fn set_json(values: &BTreeSet<i64>) -> Value {
    Value::Array(values.iter().rev().map(|v| json!(v.to_string())).collect())
}

/// Everything needed by the distance-spectrum checks for one `n`.
struct LineCrownData {
    n: usize,
    a: IntMatrix,
    d: IntMatrix,
    a3: IntMatrix,
    adjacency_spectrum: Spectrum,
    distance_spectrum: Spectrum,
}

impl LineCrownData {
    fn compute(n: usize) -> Result<Self> {
        let g = make_line_crown(n)?;
        let a = adjacency_matrix(&g);
        let d = distance_matrix(&g)?;
        let a3 = distance_i_from(&d, 3);
        let (adjacency_spectrum, distance_spectrum) =
            rayon::join(|| integral_spectrum(&a), || integral_spectrum(&d));
        Ok(LineCrownData {
            n,
            a,
            d,
            a3,
            adjacency_spectrum: adjacency_spectrum?,
            distance_spectrum: distance_spectrum?,
        })
    }
}

/// Checks of a distance spectrum (and its matrix) against the closed forms for `n`.
fn distance_spectrum_records(n: usize, d: &IntMatrix, computed: &Spectrum) -> Result<Vec<ClaimRecord>> {
    let mut out = Vec::new();
    let v = n as i64;
    let top = 2 * v * v - 4 * v + 3;

    let started = Instant::now();
    let set = distance_eigenvalue_set(n)?;
    let support: BTreeSet<i64> = computed.support().into_iter().collect();
    let status = match (support == set.values, &set.collision) {
        (false, _) => Status::Fail,
        (true, Some(_)) => Status::Flagged,
        (true, None) => Status::Pass,
    };
    out.push(
        ClaimRecord::new(ClaimId::DistanceEigenvalueSet, n, status)
            .expected(set_json(&set.values))
            .computed(set_json(&support))
            .note(set.collision.clone().unwrap_or_default())
            .elapsed_since(started),
    );

    let started = Instant::now();
    let printed = spec_distance_line_crown_paper(n);
    let printed_status = match &printed.spectrum {
        Some(s) if s == computed => Status::Pass,
        Some(_) => Status::Fail,
        None => Status::Flagged,
    };
    out.push(
        ClaimRecord::new(ClaimId::DistanceSpectrumPrinted, n, printed_status)
            .expected(printed.terms_json())
            .computed(computed.to_json())
            .note(printed.note.clone().unwrap_or_default())
            .elapsed_since(started),
    );

    let started = Instant::now();
    let corrected = spec_distance_line_crown_corrected(n)?;
    out.push(
        ClaimRecord::check(ClaimId::DistanceSpectrumCorrected, n, &corrected == computed)
            .expected(corrected.to_json())
            .computed(computed.to_json())
            .elapsed_since(started),
    );

    let started = Instant::now();
    let sums = d.row_sums();
    let constant = sums.iter().all(|&s| s == top);
    out.push(
        ClaimRecord::check(ClaimId::DistanceRowSum, n, constant)
            .expected(json!(top))
            .computed(json!({
                "min": sums.iter().min(),
                "max": sums.iter().max(),
            }))
            .elapsed_since(started),
    );

    let started = Instant::now();
    let (lead, lead_mult) = computed.largest().unwrap_or((0, 0));
    let dominant = computed.support().iter().all(|x| x.abs() <= lead);
    out.push(
        ClaimRecord::check(ClaimId::PerronEigenvalue, n, lead == top && lead_mult == 1 && dominant)
            .expected(json!({ "value": top.to_string(), "multiplicity": 1, "dominant": true }))
            .computed(json!({ "value": lead.to_string(), "multiplicity": lead_mult, "dominant": dominant }))
            .elapsed_since(started),
    );
    Ok(out)
}

/// Runs every closed-form comparison for one `n >= 4`.
pub fn verify_all(n: usize) -> Result<VerificationReport> {
    require_n4(n, "verification")?;
    let mut report = VerificationReport::new();

    // Crown graph.
    let started = Instant::now();
    let crown_expected = spec_crown(n)?;
    let crown_adj = adjacency_matrix(&make_crown(n)?);
    let crown_computed = integral_spectrum(&crown_adj)?;
    report.push(
        ClaimRecord::check(ClaimId::CrownSpectrum, n, crown_computed == crown_expected)
            .expected(crown_expected.to_json())
            .computed(crown_computed.to_json())
            .elapsed_since(started),
    );
    let started = Instant::now();
    let cover = spec_double_cover(&spec_complete(n)?);
    report.push(
        ClaimRecord::check(ClaimId::CrownDoubleCover, n, cover == crown_expected)
            .expected(crown_expected.to_json())
            .computed(cover.to_json())
            .elapsed_since(started),
    );

    // Line graph of the crown graph.
    let started = Instant::now();
    let data = LineCrownData::compute(n)?;
    let line_expected = spec_line_crown_adjacency(n)?;
    report.push(
        ClaimRecord::check(
            ClaimId::LineCrownAdjacencySpectrum,
            n,
            data.adjacency_spectrum == line_expected,
        )
        .expected(line_expected.to_json())
        .computed(data.adjacency_spectrum.to_json())
        .elapsed_since(started),
    );
    let started = Instant::now();
    let via_rule = spec_line_of_regular(&crown_expected, n - 1, 2 * n)?;
    report.push(
        ClaimRecord::check(
            ClaimId::LineOfRegularSpectrum,
            n,
            via_rule == line_expected && via_rule == data.adjacency_spectrum,
        )
        .expected(data.adjacency_spectrum.to_json())
        .computed(via_rule.to_json())
        .elapsed_since(started),
    );

    let started = Instant::now();
    let diam = data.d.max_entry().unwrap_or(0);
    report.push(
        ClaimRecord::check(ClaimId::DiameterThree, n, diam == 3)
            .expected(json!(3))
            .computed(json!(diam))
            .elapsed_since(started),
    );

    let g = make_line_crown(n)?;
    report.push(check_distance_decomposition(&g)?.with_n(n));
    report.push(check_diameter3_identity(&g)?.with_n(n));
    report.extend(check_a3_structure(n)?);
    report.push(check_commuting_family(n)?);

    for record in distance_spectrum_records(n, &data.d, &data.distance_spectrum)? {
        report.push(record);
    }

    report.push(multiplicity_balance(&data)?);
    report.push(eigenvector_split(&data)?);
    report.push(float_cross_check(n, &[
        ("D", &data.d, &data.distance_spectrum),
        ("A", &data.a, &data.adjacency_spectrum),
        ("Cr(n) adjacency", &crown_adj, &crown_computed),
    ])?);

    // Keep catalog order regardless of evaluation order.
    report
        .records
        .sort_by_key(|r| ClaimId::ALL.iter().position(|c| *c == r.claim_id));
    Ok(report)
}

/// Counts the `-2` eigenvectors of `A` on which `A3` acts as `+1` (`a4`) and
/// as `-1` (`a5`). Their sum must be `n² - 3n + 1`; the printed statement also
/// asserts `a4 = a5`, which is flagged when it fails.
fn multiplicity_balance(data: &LineCrownData) -> Result<ClaimRecord> {
    let started = Instant::now();
    let n = data.n;
    let a4 = joint_eigenspace_dim(&data.a, -2, &data.a3, 1)?;
    let a5 = joint_eigenspace_dim(&data.a, -2, &data.a3, -1)?;
    let total = n * n - 3 * n + 1;
    let status = match (a4 + a5 == total, a4 == a5) {
        (false, _) => Status::Fail,
        (true, true) => Status::Pass,
        (true, false) => Status::Flagged,
    };
    let note = if status == Status::Flagged {
        format!(
            "a4 + a5 = {total} holds; the printed a4 = a5 fails (a4 = {a4}, a5 = {a5}, a5 - a4 = {})",
            a5 as i64 - a4 as i64
        )
    } else {
        String::new()
    };
    Ok(ClaimRecord::new(ClaimId::DistanceMultiplicityBalance, n, status)
        .expected(json!({ "a4+a5": total, "a4=a5": true }))
        .computed(json!({ "a4": a4, "a5": a5, "a4+a5": a4 + a5, "a4=a5": a4 == a5 }))
        .note(note)
        .elapsed_since(started))
}

/// On the `(n-2)`-eigenspace of `A`, `A3` acts as `-1`; on the
/// `(n-4)`-eigenspace it acts as `+1`; the `-2`-eigenspace splits as
/// `(a4, a5)` from [`corrected_split`].
fn eigenvector_split(data: &LineCrownData) -> Result<ClaimRecord> {
    let started = Instant::now();
    let n = data.n;
    let v = n as i64;
    let (a4, a5) = corrected_split(n);
    let expected = [
        (v - 2, -1, n - 1),
        (v - 2, 1, 0),
        (v - 4, 1, n - 1),
        (v - 4, -1, 0),
        (-2, 1, a4),
        (-2, -1, a5),
    ];
    let mut computed = Vec::with_capacity(expected.len());
    let mut ok = true;
    for &(lambda, sigma, want) in &expected {
        let got = joint_eigenspace_dim(&data.a, lambda, &data.a3, sigma)?;
        ok &= got == want;
        computed.push(json!({ "A": lambda, "A3": sigma, "dim": got }));
    }
    Ok(ClaimRecord::check(ClaimId::EigenvectorSplit, n, ok)
        .expected(Value::Array(
            expected
                .iter()
                .map(|&(l, s, w)| json!({ "A": l, "A3": s, "dim": w }))
                .collect(),
        ))
        .computed(Value::Array(computed))
        .elapsed_since(started))
}

/// Compares Jacobi spectra with exact spectra for the given matrices.
pub fn float_cross_check(n: usize, items: &[(&str, &IntMatrix, &Spectrum)]) -> Result<ClaimRecord> {
    let started = Instant::now();
    let mut ok = true;
    let mut computed = serde_json::Map::new();
    for (name, m, exact) in items {
        let approx = float_spectrum(m, DEFAULT_JACOBI_TOL)?;
        let dev = approx.max_deviation(exact);
        ok &= dev.is_some_and(|d| d < FLOAT_AGREEMENT);
        computed.insert(
            name.to_string(),
            match dev {
                Some(d) => json!({ "clusters": approx.entries().len(), "max-error": d }),
                None => json!({ "clusters": approx.entries().len(), "max-error": null }),
            },
        );
    }
    Ok(ClaimRecord::check(ClaimId::FloatCrossCheck, n, ok)
        .expected(json!({ "max-error-below": FLOAT_AGREEMENT }))
        .computed(Value::Object(computed))
        .elapsed_since(started))
}

/// Checks an externally supplied distance matrix of `L(Cr(n))`, `n` inferred
/// from the dimension `n(n-1)`.
pub fn verify_distance_matrix(d: &IntMatrix) -> Result<VerificationReport> {
    let dim = d.dim();
    let n = (2..=dim + 1)
        .find(|&n| n * (n - 1) == dim)
        .filter(|&n| n >= 4)
        .ok_or_else(|| Error::invalid(format!("dimension {dim} is not n(n-1) for any n >= 4")))?;
    let spectrum = integral_spectrum(d)?;
    let mut report = VerificationReport::new();
    for record in distance_spectrum_records(n, d, &spectrum)? {
        report.push(record);
    }
    report.push(float_cross_check(n, &[("D", d, &spectrum)])?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_complete;

    #[test]
    fn complete_and_crown_forms() {
        assert_eq!(spec_complete(4).unwrap(), Spectrum::from_pairs([(3, 1), (-1, 3)]));
        assert_eq!(spec_complete(2).unwrap(), Spectrum::from_pairs([(1, 1), (-1, 1)]));
        assert!(spec_complete(1).is_err());
        assert_eq!(
            spec_crown(4).unwrap(),
            Spectrum::from_pairs([(3, 1), (1, 3), (-1, 3), (-3, 1)])
        );
        assert!(spec_crown(2).is_err());
        for n in 3..=12 {
            assert_eq!(spec_double_cover(&spec_complete(n).unwrap()), spec_crown(n).unwrap());
        }
    }

    #[test]
    fn double_cover_merges() {
        let k3 = Spectrum::from_pairs([(2, 1), (-1, 2)]);
        assert_eq!(
            spec_double_cover(&k3),
            Spectrum::from_pairs([(2, 1), (1, 2), (-1, 2), (-2, 1)])
        );
        let sym = Spectrum::from_pairs([(1, 1), (-1, 1)]);
        assert_eq!(spec_double_cover(&sym), Spectrum::from_pairs([(1, 2), (-1, 2)]));
    }

    #[test]
    fn line_of_regular_examples() {
        let k4 = spec_complete(4).unwrap();
        assert_eq!(
            spec_line_of_regular(&k4, 3, 4).unwrap(),
            Spectrum::from_pairs([(4, 1), (0, 3), (-2, 2)])
        );
        let c6 = Spectrum::from_pairs([(2, 1), (1, 2), (-1, 2), (-2, 1)]);
        assert_eq!(spec_line_of_regular(&c6, 2, 6).unwrap(), c6);
        for n in 4..=12 {
            assert_eq!(
                spec_line_of_regular(&spec_crown(n).unwrap(), n - 1, 2 * n).unwrap(),
                spec_line_crown_adjacency(n).unwrap()
            );
        }
        assert!(spec_line_of_regular(&k4, 2, 4).is_err());
        let not_simple = Spectrum::from_pairs([(3, 2), (-1, 2)]);
        assert!(spec_line_of_regular(&not_simple, 3, 4).is_err());
    }

    #[test]
    fn octahedron_oracle() {
        let oct = crate::graph::line_graph(&make_complete(4).unwrap()).unwrap();
        let s = integral_spectrum(&adjacency_matrix(&oct)).unwrap();
        assert_eq!(s, spec_line_of_regular(&spec_complete(4).unwrap(), 3, 4).unwrap());
    }

    #[test]
    fn line_crown_adjacency_form() {
        assert_eq!(
            spec_line_crown_adjacency(4).unwrap(),
            Spectrum::from_pairs([(4, 1), (2, 3), (0, 3), (-2, 5)])
        );
        assert_eq!(
            spec_line_crown_adjacency(5).unwrap(),
            Spectrum::from_pairs([(6, 1), (3, 4), (1, 4), (-2, 11)])
        );
        assert!(spec_line_crown_adjacency(3).is_err());
    }

    #[test]
    fn a3_form() {
        assert_eq!(spec_a3(4).unwrap(), Spectrum::from_pairs([(1, 6), (-1, 6)]));
        assert_eq!(spec_a3(5).unwrap(), Spectrum::from_pairs([(1, 10), (-1, 10)]));
        assert!(spec_a3(3).is_err());
    }

    #[test]
    fn eigenvalue_set_forms() {
        let s5 = distance_eigenvalue_set(5).unwrap();
        assert_eq!(s5.values, BTreeSet::from([-6, -2, -1, 1, 33]));
        assert!(s5.collision.is_none());
        let s4 = distance_eigenvalue_set(4).unwrap();
        assert_eq!(s4.values, BTreeSet::from([-5, -1, 1, 19]));
        assert!(s4.collision.is_some());
        assert!(distance_eigenvalue_set(3).is_err());
    }

    #[test]
    fn printed_form_is_never_wellformed() {
        let r5 = spec_distance_line_crown_paper(5);
        assert!(!r5.wellformed);
        assert_eq!(r5.terms[1].1, Ratio::new(11, 2));
        assert!(r5.note.as_deref().unwrap().contains("11/2"));
        let r4 = spec_distance_line_crown_paper(4);
        assert_eq!(r4.terms[1].1, Ratio::new(5, 2));
        for n in 3..=50 {
            let r = spec_distance_line_crown_paper(n);
            assert!(!r.wellformed && r.spectrum.is_none() && r.note.is_some(), "n={n}");
        }
    }

    #[test]
    fn corrected_form_examples() {
        assert_eq!(
            spec_distance_line_crown_corrected(5).unwrap(),
            Spectrum::from_pairs([(33, 1), (1, 5), (-1, 6), (-2, 4), (-6, 4)])
        );
        assert_eq!(
            spec_distance_line_crown_corrected(4).unwrap(),
            Spectrum::from_pairs([(19, 1), (1, 2), (-1, 6), (-5, 3)])
        );
        assert_eq!(
            spec_distance_line_crown_corrected(3).unwrap(),
            Spectrum::from_pairs([(9, 1), (0, 2), (-1, 1), (-4, 2)])
        );
        assert!(spec_distance_line_crown_corrected(2).is_err());
        for n in 3..=40 {
            let (a4, a5) = corrected_split(n);
            assert_eq!(2 * a4, n * (n - 3));
            assert_eq!(2 * a5, (n - 1) * (n - 2));
            assert_eq!(a4 + a5, n * n - 3 * n + 1);
            assert_eq!(a5 - a4, 1);
            assert_eq!(spec_distance_line_crown_corrected(n).unwrap().dimension(), n * (n - 1));
        }
    }

    #[test]
    fn verify_all_small() {
        let r5 = verify_all(5).unwrap();
        assert!(!r5.has_failures(), "{}", r5.summary_table());
        assert_eq!(r5.get(ClaimId::DistanceSpectrumPrinted, 5).unwrap().status, Status::Flagged);
        assert_eq!(r5.get(ClaimId::DistanceMultiplicityBalance, 5).unwrap().status, Status::Flagged);
        assert_eq!(r5.get(ClaimId::DistanceEigenvalueSet, 5).unwrap().status, Status::Pass);
        assert_eq!(r5.get(ClaimId::DistanceSpectrumCorrected, 5).unwrap().status, Status::Pass);
        assert_eq!(r5.records.len(), ClaimId::ALL.len());

        let r4 = verify_all(4).unwrap();
        assert!(!r4.has_failures());
        assert_eq!(r4.get(ClaimId::DistanceEigenvalueSet, 4).unwrap().status, Status::Flagged);
        assert_eq!(r4.count(Status::Flagged), 3);
        assert!(verify_all(3).is_err());
    }

    #[test]
    fn external_distance_matrix() {
        let d = distance_matrix(&make_line_crown(5).unwrap()).unwrap();
        let rep = verify_distance_matrix(&d).unwrap();
        assert!(!rep.has_failures());
        assert_eq!(rep.get(ClaimId::DistanceSpectrumCorrected, 5).unwrap().status, Status::Pass);
        assert!(verify_distance_matrix(&IntMatrix::identity(7)).is_err());
    }
}
