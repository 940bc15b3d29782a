//! Verification records and the append-only ledger.

use std::fmt;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

/// Registered claim catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimId {
    /// Adjacency spectrum of `Cr(n)` against its closed form.
    CrownSpectrum,
    /// Closed form of `Cr(n)` against the double cover of `K_n`.
    CrownDoubleCover,
    /// Adjacency spectrum of `L(Cr(n))` against its closed form.
    LineCrownAdjacencySpectrum,
    /// Line-graph spectrum rule applied to the crown spectrum.
    LineOfRegularSpectrum,
    DiameterThree,
    DistanceDecomposition,
    Diameter3Identity,
    /// `A3` is the permutation matrix of `(i,j) -> (j,i)`.
    A3ReversalPermutation,
    A3Involution,
    A3CommutesWithAdjacency,
    A3TraceZero,
    A3Spectrum,
    CommutingFamily,
    DistanceEigenvalueSet,
    /// The printed distance spectrum with multiplicity `(n^2-3n+1)/2`.
    DistanceSpectrumPrinted,
    /// Split of the `-2` eigenspace between the distance eigenvalues `1` and `-1`.
    DistanceMultiplicityBalance,
    DistanceSpectrumCorrected,
    EigenvectorSplit,
    DistanceRowSum,
    PerronEigenvalue,
    FloatCrossCheck,
}

impl ClaimId {
    pub const ALL: [ClaimId; 21] = [
        ClaimId::CrownSpectrum,
        ClaimId::CrownDoubleCover,
        ClaimId::LineCrownAdjacencySpectrum,
        ClaimId::LineOfRegularSpectrum,
        ClaimId::DiameterThree,
        ClaimId::DistanceDecomposition,
        ClaimId::Diameter3Identity,
        ClaimId::A3ReversalPermutation,
        ClaimId::A3Involution,
        ClaimId::A3CommutesWithAdjacency,
        ClaimId::A3TraceZero,
        ClaimId::A3Spectrum,
        ClaimId::CommutingFamily,
        ClaimId::DistanceEigenvalueSet,
        ClaimId::DistanceSpectrumPrinted,
        ClaimId::DistanceMultiplicityBalance,
        ClaimId::DistanceSpectrumCorrected,
        ClaimId::EigenvectorSplit,
        ClaimId::DistanceRowSum,
        ClaimId::PerronEigenvalue,
        ClaimId::FloatCrossCheck,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::CrownSpectrum => "crown-spectrum",
            ClaimId::CrownDoubleCover => "crown-double-cover",
            ClaimId::LineCrownAdjacencySpectrum => "line-crown-adjacency-spectrum",
            ClaimId::LineOfRegularSpectrum => "line-of-regular-spectrum",
            ClaimId::DiameterThree => "diameter-three",
            ClaimId::DistanceDecomposition => "distance-decomposition",
            ClaimId::Diameter3Identity => "diameter3-identity",
            ClaimId::A3ReversalPermutation => "a3-reversal-permutation",
            ClaimId::A3Involution => "a3-involution",
            ClaimId::A3CommutesWithAdjacency => "a3-commutes-with-adjacency",
            ClaimId::A3TraceZero => "a3-trace-zero",
            ClaimId::A3Spectrum => "a3-spectrum",
            ClaimId::CommutingFamily => "commuting-family",
            ClaimId::DistanceEigenvalueSet => "distance-eigenvalue-set",
            ClaimId::DistanceSpectrumPrinted => "distance-spectrum-printed",
            ClaimId::DistanceMultiplicityBalance => "distance-multiplicity-balance",
            ClaimId::DistanceSpectrumCorrected => "distance-spectrum-corrected",
            ClaimId::EigenvectorSplit => "eigenvector-split",
            ClaimId::DistanceRowSum => "distance-row-sum",
            ClaimId::PerronEigenvalue => "perron-eigenvalue",
            ClaimId::FloatCrossCheck => "float-cross-check",
        }
    }

    /// Claims that may legitimately end up `flagged`.
    pub fn may_flag(self) -> bool {
        matches!(
            self,
            ClaimId::DistanceSpectrumPrinted
                | ClaimId::DistanceMultiplicityBalance
                | ClaimId::DistanceEigenvalueSet
        )
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The claim as printed is not well formed or needs a caveat; recorded, not failed.
    Flagged,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimRecord {
    #[serde(rename = "claim-id")]
    pub claim_id: ClaimId,
    pub n: usize,
    pub status: Status,
    pub expected: Value,
    pub computed: Value,
    pub note: String,
    pub elapsed: u64,
}

impl ClaimRecord {
    pub fn new(claim_id: ClaimId, n: usize, status: Status) -> Self {
        ClaimRecord {
            claim_id,
            n,
            status,
            expected: Value::Null,
            computed: Value::Null,
            note: String::new(),
            elapsed: 0,
        }
    }

    /// Pass or fail depending on `ok`.
    pub fn check(claim_id: ClaimId, n: usize, ok: bool) -> Self {
        ClaimRecord::new(claim_id, n, if ok { Status::Pass } else { Status::Fail })
    }

    pub fn expected(mut self, v: Value) -> Self {
        self.expected = v;
        self
    }

    pub fn computed(mut self, v: Value) -> Self {
        self.computed = v;
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    pub fn elapsed_since(mut self, started: Instant) -> Self {
        self.elapsed = started.elapsed().as_millis() as u64;
        self
    }

    /// The record with `elapsed` zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Self {
        ClaimRecord {
            elapsed: 0,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub records: Vec<ClaimRecord>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport::default()
    }

    pub fn push(&mut self, record: ClaimRecord) {
        self.records.push(record);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.records.extend(other.records);
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn has_failures(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    pub fn get(&self, claim: ClaimId, n: usize) -> Option<&ClaimRecord> {
        self.records.iter().find(|r| r.claim_id == claim && r.n == n)
    }

    /// One JSON object per line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("record serializes"));
            out.push('\n');
        }
        out
    }

    pub fn from_jsonl(text: &str) -> Result<Self> {
        let records = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .enumerate()
            .map(|(i, l)| {
                serde_json::from_str(l).map_err(|e| crate::Error::Parse {
                    line: i + 1,
                    message: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VerificationReport { records })
    }

    /// Appends every record to the ledger file in a single write.
    pub fn append_to_ledger(&self, path: &Path) -> Result<()> {
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        file.write_all(self.to_jsonl().as_bytes())?;
        file.flush()?;
        Ok(())
    }

    /// Fixed-width summary table, rows in the order of the records.
    pub fn summary_table(&self) -> String {
        let mut out = format!("{:<32} {:>4}  {:<8} {}\n", "claim", "n", "status", "note");
        for r in &self.records {
            out.push_str(&format!(
                "{:<32} {:>4}  {:<8} {}\n",
                r.claim_id.as_str(),
                r.n,
                r.status.to_string(),
                r.note
            ));
        }
        out.push_str(&format!(
            "total {}  pass {}  flagged {}  fail {}\n",
            self.records.len(),
            self.count(Status::Pass),
            self.count(Status::Flagged),
            self.count(Status::Fail)
        ));
        out
    }
}
