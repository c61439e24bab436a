//! Betti tables with an explicit validity range.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Result of looking up a degree in a [`BettiTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BettiEntry {
    Valid(u64),
    /// The degree lies outside the range where the formula is known to hold.
    OutsideRange,
}

impl BettiEntry {
    pub fn valid(self) -> Option<u64> {
        match self {
            BettiEntry::Valid(v) => Some(v),
            BettiEntry::OutsideRange => None,
        }
    }
}

/// Ranks by cohomological degree.
///
/// When `valid_below` is `Some(b)` the ranks are only asserted for `p < b` and
/// `ranks` holds exactly those degrees. When it is `None` the table is exact in
/// every degree and degrees past the end read as zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    #[serde(serialize_with = "ser_ranks", rename = "betti")]
    ranks: Vec<u64>,
    pub valid_below: Option<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn ser_ranks<S: Serializer>(ranks: &[u64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(ranks.len()))?;
    for (p, r) in ranks.iter().enumerate() {
        seq.serialize_element(&(p, r))?;
    }
    seq.end()
}

impl BettiTable {
    /// A table exact in all degrees.
    pub fn exact(mut ranks: Vec<u64>) -> Self {
        while ranks.last() == Some(&0) {
            ranks.pop();
        }
        BettiTable { ranks, valid_below: None, notes: Vec::new() }
    }

    /// A table asserted for `p < valid_below` only. `ranks` is truncated to
    /// that range.
    pub fn range_limited(mut ranks: Vec<u64>, valid_below: u32) -> Self {
        ranks.truncate(valid_below as usize);
        BettiTable { ranks, valid_below: Some(valid_below), notes: Vec::new() }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn get(&self, p: u32) -> BettiEntry {
        match self.valid_below {
            Some(b) if p >= b => BettiEntry::OutsideRange,
            _ => BettiEntry::Valid(self.ranks.get(p as usize).copied().unwrap_or(0)),
        }
    }

    /// Ranks in the valid range (all stored degrees).
    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    pub fn is_exact(&self) -> bool {
        self.valid_below.is_none()
    }

    /// True when the validity range is empty.
    pub fn is_empty_range(&self) -> bool {
        self.valid_below == Some(0)
    }

    pub fn total(&self) -> u64 {
        self.ranks.iter().sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,rank\n");
        for (p, r) in self.ranks.iter().enumerate() {
            out.push_str(&format!("{p},{r}\n"));
        }
        out
    }
}

/// Parses comma-separated ranks such as `"1,0,1,0,1"`.
pub fn parse_ranks(s: &str) -> Result<Vec<u64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse::<u64>().map_err(|e| format!("bad rank {x:?}: {e}"))).collect()
}
