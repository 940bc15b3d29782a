//! Dense integer matrices and the graph matrices built on them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::{ClaimId, ClaimRecord, Status};

/// Square matrix with `i64` entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    /// All-ones matrix `J`.
    pub fn ones(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![1; dim * dim],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::invalid("matrix rows must all have length equal to the row count"));
        }
        Ok(IntMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        IntMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.dim, |i, j| self.get(j, i))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn max_entry(&self) -> Option<i64> {
        self.entries.iter().copied().max()
    }

    pub fn scale(&self, factor: i64) -> Self {
        IntMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|&x| x * factor).collect(),
        }
    }

    /// `M - λI`.
    pub fn shift(&self, lambda: i64) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            m.set(i, i, m.get(i, i) - lambda);
        }
        m
    }

    /// First coordinate where the two matrices differ, as `(row, col, self, other)`.
    pub fn first_mismatch(&self, other: &IntMatrix) -> Option<(usize, usize, i64, i64)> {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.dim, k % self.dim, self.entries[k], other.entries[k]))
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|&x| (x as f64) * (x as f64))
            .sum::<f64>()
            .sqrt()
    }

    /// Dump format: first line `N`, then `N` rows of space-separated integers.
    pub fn to_dump(&self) -> String {
        let mut out = format!("{}\n", self.dim);
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_dump(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (first_no, first) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "empty matrix dump".into(),
        })?;
        let dim: usize = first.trim().parse().map_err(|e| Error::Parse {
            line: first_no + 1,
            message: format!("bad dimension: {e}"),
        })?;
        let mut rows = Vec::with_capacity(dim);
        for (idx, line) in lines {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse {
                    line: idx + 1,
                    message: format!("bad entry: {e}"),
                })?;
            if row.len() != dim {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("expected {dim} entries, found {}", row.len()),
                });
            }
            rows.push(row);
        }
        if rows.len() != dim {
            return Err(Error::Parse {
                line: 0,
                message: format!("expected {dim} rows, found {}", rows.len()),
            });
        }
        IntMatrix::from_rows(rows)
    }

    fn zip_with(&self, other: &IntMatrix, f: impl Fn(i64, i64) -> i64) -> IntMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        IntMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dump())
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        self.scale(-1)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let src = rhs.row(k);
                let dst = &mut out.entries[i * n..(i + 1) * n];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d += a * b;
                }
            }
        }
        out
    }
}

/// 0/1 adjacency matrix.
pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.order(), |i, j| i64::from(g.has_edge(i, j)))
}

/// Breadth-first distances from `source`; `-1` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<i64>> {
    if source >= g.order() {
        return Err(Error::invalid(format!(
            "source {source} out of range for order {}",
            g.order()
        )));
    }
    let mut dist = vec![-1i64; g.order()];
    let mut queue = std::collections::VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v) {
            if dist[u] < 0 {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    Ok(dist)
}

/// Distance matrix of a connected graph, one BFS per vertex.
pub fn distance_matrix(g: &Graph) -> Result<IntMatrix> {
    let n = g.order();
    let rows = (0..n)
        .into_par_iter()
        .map(|v| bfs_distances(g, v))
        .collect::<Result<Vec<_>>>()?;
    if rows.iter().flatten().any(|&d| d < 0) {
        return Err(Error::NotConnected);
    }
    IntMatrix::from_rows(rows)
}

/// 0/1 matrix marking pairs at distance exactly `i`.
pub fn distance_i_matrix(g: &Graph, i: usize) -> Result<IntMatrix> {
    let d = distance_matrix(g)?;
    Ok(distance_i_from(&d, i))
}

pub(crate) fn distance_i_from(d: &IntMatrix, i: usize) -> IntMatrix {
    IntMatrix::from_fn(d.dim(), |r, c| i64::from(d.get(r, c) == i as i64))
}

pub fn diameter(g: &Graph) -> Result<usize> {
    Ok(distance_matrix(g)?.max_entry().unwrap_or(0) as usize)
}

fn mismatch_record(
    claim: ClaimId,
    n: usize,
    what: &str,
    mismatch: Option<(usize, usize, i64, i64)>,
    started: Instant,
) -> ClaimRecord {
    match mismatch {
        None => ClaimRecord::new(claim, n, Status::Pass)
            .expected(json!(what))
            .computed(json!("entrywise equal")),
        Some((r, c, lhs, rhs)) => ClaimRecord::new(claim, n, Status::Fail)
            .expected(json!({ "row": r, "col": c, "value": rhs }))
            .computed(json!({ "row": r, "col": c, "value": lhs }))
            .note(format!("{what} fails first at ({r},{c}): {lhs} != {rhs}")),
    }
    .elapsed_since(started)
}

/// Checks `Σ_{i=0..d} A_i = J` and `D = Σ_{i=1..d} i·A_i`. The record's `n`
/// is the graph order.
pub fn check_distance_decomposition(g: &Graph) -> Result<ClaimRecord> {
    let started = Instant::now();
    let d = distance_matrix(g)?;
    let diam = d.max_entry().unwrap_or(0) as usize;
    let n = g.order();
    let parts: Vec<IntMatrix> = (0..=diam).map(|i| distance_i_from(&d, i)).collect();

    let sum = parts.iter().fold(IntMatrix::zeros(n), |acc, a| &acc + a);
    if let Some(bad) = sum.first_mismatch(&IntMatrix::ones(n)) {
        return Ok(mismatch_record(
            ClaimId::DistanceDecomposition,
            n,
            "sum of distance-i matrices equals J",
            Some(bad),
            started,
        ));
    }
    let weighted = parts
        .iter()
        .enumerate()
        .skip(1)
        .fold(IntMatrix::zeros(n), |acc, (i, a)| &acc + &a.scale(i as i64));
    Ok(mismatch_record(
        ClaimId::DistanceDecomposition,
        n,
        "D equals the weighted sum of distance-i matrices",
        weighted.first_mismatch(&d),
        started,
    ))
}

/// Checks `D = -A + 2J - 2I + A_3` for a graph of diameter 3.
pub fn check_diameter3_identity(g: &Graph) -> Result<ClaimRecord> {
    let started = Instant::now();
    let d = distance_matrix(g)?;
    let diam = d.max_entry().unwrap_or(0) as usize;
    if diam != 3 {
        return Err(Error::WrongDiameter {
            expected: 3,
            found: diam,
        });
    }
    let n = g.order();
    let rhs = diameter3_form(&adjacency_matrix(g), &distance_i_from(&d, 3));
    Ok(mismatch_record(
        ClaimId::Diameter3Identity,
        n,
        "D = -A + 2J - 2I + A3",
        d.first_mismatch(&rhs),
        started,
    ))
}

/// `-A + 2J - 2I + A3`.
pub fn diameter3_form(a: &IntMatrix, a3: &IntMatrix) -> IntMatrix {
    let n = a.dim();
    let two_j = IntMatrix::ones(n).scale(2);
    let two_i = IntMatrix::identity(n).scale(2);
    &(&(&two_j - a) - &two_i) + a3
}

/// Two pairs at distance 2 with different numbers of common neighbours,
/// which shows the graph is not distance-regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRegularityWitness {
    pub first: (usize, usize),
    pub first_common: usize,
    pub second: (usize, usize),
    pub second_common: usize,
}

pub fn non_distance_regular_witness(g: &Graph) -> Result<Option<DistanceRegularityWitness>> {
    let d = distance_matrix(g)?;
    let a = adjacency_matrix(g);
    let a2 = &a * &a;
    let mut seen: Option<((usize, usize), usize)> = None;
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if d.get(u, v) != 2 {
                continue;
            }
            let common = a2.get(u, v) as usize;
            match seen {
                None => seen = Some(((u, v), common)),
                Some((first, first_common)) if first_common != common => {
                    return Ok(Some(DistanceRegularityWitness {
                        first,
                        first_common,
                        second: (u, v),
                        second_common: common,
                    }))
                }
                Some(_) => {}
            }
        }
    }
    Ok(None)
}
