//! Line-oriented JSON records.

use serde::{Deserialize, Serialize};

use phang_core::construct::ConstructionReport;
use phang_core::search::SearchOutcome;
use phang_core::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Removed nails, ascending.
    pub removed: Vec<u8>,
    pub expected: String,
    pub got: String,
}

impl Counterexample {
    pub fn from_verdict(v: &Verdict) -> Option<Counterexample> {
        match v {
            Verdict::Ok => None,
            Verdict::Counterexample {
                removed,
                expected,
                got,
            } => Some(Counterexample {
                removed: removed.iter().map(|n| n.index()).collect(),
                expected: expected.to_string(),
                got: got.to_string(),
            }),
        }
    }
}

fn verdict_tag(v: &Verdict) -> String {
    if v.is_ok() { "ok" } else { "counterexample" }.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionRecord {
    pub method: String,
    /// Demaine threshold.
    pub k: u32,
    pub n: u8,
    pub word: String,
    pub unreduced: u64,
    pub reduced: u64,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl From<&ConstructionReport> for ConstructionRecord {
    fn from(r: &ConstructionReport) -> Self {
        ConstructionRecord {
            method: r.method.clone(),
            k: r.k,
            n: r.n,
            word: r.word.to_string(),
            unreduced: r.unreduced,
            reduced: r.reduced,
            verdict: verdict_tag(&r.verdict),
            counterexample: Counterexample::from_verdict(&r.verdict),
        }
    }
}

/// Input accepted by `check` on stdin: any record with a word, optionally
/// naming its Demaine puzzle.
#[derive(Clone, Debug, Deserialize)]
pub struct WordInput {
    pub word: String,
    pub k: Option<u32>,
    pub n: Option<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub word: String,
    pub puzzle: String,
    pub mode: String,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl CheckRecord {
    pub fn new(word: String, puzzle: String, mode: String, v: &Verdict) -> Self {
        CheckRecord {
            word,
            puzzle,
            mode,
            verdict: verdict_tag(v),
            counterexample: Counterexample::from_verdict(v),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sharding {
    pub shards: u32,
    /// `None` when every shard ran in this process.
    pub shard_id: Option<u32>,
    pub threads: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub spec: String,
    pub length: usize,
    pub solutions: Vec<String>,
    pub nodes: u64,
    pub seconds: f64,
    pub sharding: Sharding,
}

impl SearchRecord {
    pub fn new(o: &SearchOutcome, seconds: f64, sharding: Sharding) -> Self {
        SearchRecord {
            spec: o.spec.to_string(),
            length: o.length,
            solutions: o.solutions.iter().map(|s| s.to_string()).collect(),
            nodes: o.nodes_explored,
            seconds,
            sharding,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRecord {
    pub k: u32,
    pub i: u32,
    pub n: u64,
    /// Decimal string: lengths outgrow JSON's safe integers.
    pub length: String,
    pub ratio: Option<f64>,
}
