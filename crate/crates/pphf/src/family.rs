//! Hash functions `[n] -> [b]`, ordered families of them, and the per-edge
//! coverage check that decides whether a family is a system for a hypergraph.
//!
//! A function is *partially p-perfect* on a vertex set `S` when it attains at
//! least `min(p, |S|)` distinct buckets on `S`. A family is a system for `G`
//! at level `p` when every edge has at least one such member.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::hypergraph::Hypergraph;

/// A total assignment of bucket ids `1..=b` to vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HashFunction {
    b: usize,
    values: Vec<usize>,
}

impl HashFunction {
    pub fn new(b: usize, values: Vec<usize>) -> Result<Self, Error> {
        if b == 0 {
            return Err(Error::InvalidParameter("bucket count b must be >= 1".into()));
        }
        if let Some(&v) = values.iter().find(|&&v| v == 0 || v > b) {
            return Err(Error::InvalidParameter(format!(
                "bucket value {v} out of range [1, {b}]"
            )));
        }
        Ok(HashFunction { b, values })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn bucket_count(&self) -> usize {
        self.b
    }

    /// Bucket values indexed by vertex id minus one.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn bucket_of(&self, v: usize) -> Result<usize, Error> {
        if v == 0 || v > self.values.len() {
            return Err(Error::VertexOutOfRange { v, n: self.values.len() });
        }
        Ok(self.values[v - 1])
    }

    /// `|h(S)|` — the number of distinct buckets attained on `set`.
    pub fn image_size(&self, set: &[usize]) -> Result<usize, Error> {
        self.check_range(set)?;
        Ok(self.image_size_unchecked(set))
    }

    /// True iff `|h(S)| >= min(p, |S|)`.
    pub fn is_partially_p_perfect(&self, set: &[usize], p: usize) -> Result<bool, Error> {
        self.check_range(set)?;
        Ok(self.covers_unchecked(set, p))
    }

    /// Applies a permutation of `[1, b]` to the bucket labels.
    pub fn relabeled(&self, perm: &[usize]) -> Result<HashFunction, Error> {
        let mut seen = vec![false; self.b];
        if perm.len() != self.b || !perm.iter().all(|&x| x >= 1 && x <= self.b && !std::mem::replace(&mut seen[x - 1], true)) {
            return Err(Error::InvalidPermutation { n: self.b });
        }
        let values = self.values.iter().map(|&v| perm[v - 1]).collect();
        HashFunction::new(self.b, values)
    }

    /// Reinterprets the function as mapping into a larger bucket range.
    pub fn with_bucket_count(&self, b: usize) -> Result<HashFunction, Error> {
        if b < self.b {
            return Err(Error::InvalidParameter(format!(
                "cannot shrink bucket count from {} to {b}",
                self.b
            )));
        }
        Ok(HashFunction { b, values: self.values.clone() })
    }

    fn check_range(&self, set: &[usize]) -> Result<(), Error> {
        match set.iter().find(|&&v| v == 0 || v > self.values.len()) {
            Some(&v) => Err(Error::VertexOutOfRange { v, n: self.values.len() }),
            None => Ok(()),
        }
    }

    pub(crate) fn image_size_unchecked(&self, set: &[usize]) -> usize {
        if self.b <= 128 {
            let mut mask: u128 = 0;
            for &v in set {
                mask |= 1u128 << (self.values[v - 1] - 1);
            }
            mask.count_ones() as usize
        } else {
            set.iter().map(|&v| self.values[v - 1]).collect::<BTreeSet<_>>().len()
        }
    }

    pub(crate) fn covers_unchecked(&self, set: &[usize], p: usize) -> bool {
        self.image_size_unchecked(set) >= p.min(set.len())
    }
}

/// An ordered list of hash functions sharing one ground set and bucket count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FamilyWire", into = "FamilyWire")]
pub struct HashFamily {
    n: usize,
    b: usize,
    functions: Vec<HashFunction>,
}

/// JSON shape: `{"b": int, "functions": [[int, ...], ...], "n": int}` with
/// 1-based bucket ids and every inner array of length `n`.
#[derive(Serialize, Deserialize)]
struct FamilyWire {
    b: usize,
    functions: Vec<Vec<usize>>,
    n: usize,
}

impl From<HashFamily> for FamilyWire {
    fn from(f: HashFamily) -> FamilyWire {
        FamilyWire {
            b: f.b,
            functions: f.functions.into_iter().map(|h| h.values).collect(),
            n: f.n,
        }
    }
}

impl TryFrom<FamilyWire> for HashFamily {
    type Error = Error;

    fn try_from(wire: FamilyWire) -> Result<HashFamily, Error> {
        let functions = wire
            .functions
            .into_iter()
            .map(|values| HashFunction::new(wire.b, values))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidFamily(e.to_string()))?;
        HashFamily::new(wire.n, wire.b, functions)
    }
}

impl HashFamily {
    pub fn new(n: usize, b: usize, functions: Vec<HashFunction>) -> Result<Self, Error> {
        if b == 0 {
            return Err(Error::InvalidFamily("bucket count b must be >= 1".into()));
        }
        for (i, h) in functions.iter().enumerate() {
            if h.n() != n {
                return Err(Error::InvalidFamily(format!(
                    "function {i} assigns {} vertices, expected n = {n}",
                    h.n()
                )));
            }
            if h.bucket_count() != b {
                return Err(Error::InvalidFamily(format!(
                    "function {i} has bucket count {}, expected b = {b}",
                    h.bucket_count()
                )));
            }
        }
        Ok(HashFamily { n, b, functions })
    }

    /// Builds a family from a non-empty list, taking `n` and `b` from it.
    pub fn from_functions(functions: Vec<HashFunction>) -> Result<Self, Error> {
        let first = functions.first().ok_or(Error::EmptyFamily)?;
        let (n, b) = (first.n(), first.bucket_count());
        HashFamily::new(n, b, functions)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bucket_count(&self) -> usize {
        self.b
    }

    pub fn functions(&self) -> &[HashFunction] {
        &self.functions
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    /// Reinterprets every member as mapping into a larger bucket range.
    pub fn with_bucket_count(&self, b: usize) -> Result<HashFamily, Error> {
        let functions = self
            .functions
            .iter()
            .map(|h| h.with_bucket_count(b))
            .collect::<Result<Vec<_>, _>>()?;
        HashFamily::new(self.n, b, functions)
    }

    /// Checks every edge of `graph` against the family at level `p`.
    ///
    /// Each covered edge records the first (lowest-index) function that is
    /// partially p-perfect on it; the uncovered list is empty exactly when the
    /// family is a system for `graph` at level `p`.
    pub fn covers(&self, graph: &Hypergraph, p: usize) -> Result<SystemReport, Error> {
        if self.functions.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if self.n != graph.n() {
            return Err(Error::DimensionMismatch { family_n: self.n, graph_n: graph.n() });
        }
        let mut covered = Vec::with_capacity(graph.edge_count());
        let mut uncovered = Vec::new();
        for (i, edge) in graph.edges().iter().enumerate() {
            let hit = self.functions.iter().position(|h| h.covers_unchecked(edge, p));
            if hit.is_none() {
                uncovered.push(i);
            }
            covered.push(hit);
        }
        Ok(SystemReport { covered, uncovered })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("family serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let wire: FamilyWire = serde_json::from_str(text)?;
        HashFamily::try_from(wire)
    }
}

/// Per-edge coverage verdicts for one family against one hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemReport {
    /// For each edge index, the first covering function index, if any.
    pub covered: Vec<Option<usize>>,
    /// Edge indices with no covering function.
    pub uncovered: Vec<usize>,
}

impl SystemReport {
    /// True when every edge has a covering function.
    pub fn is_covering(&self) -> bool {
        self.uncovered.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}
