//! Walk algebra: concatenation, reversal, prunes, spider moves, prune
//! normal forms, and a bounded rewriting oracle for homotopy rel endpoints.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A walk `v0 v1 ... vn` with consecutive vertices adjacent in `base`.
/// A single vertex is a valid length-0 walk and acts as an identity arrow.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Walk {
    base: Arc<Graph>,
    seq: Vec<VertexId>,
}

/// Replacing the interior vertex at `position` by `replacement`, which must
/// be adjacent to both neighbors in the walk. Endpoints stay fixed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WalkSpiderMove {
    pub position: usize,
    pub replacement: VertexId,
}

impl Walk {
    pub fn new(base: Arc<Graph>, seq: Vec<VertexId>) -> Result<Walk> {
        if seq.is_empty() {
            return Err(Error::EmptyWalk);
        }
        for pair in seq.windows(2) {
            if !base.has_edge(pair[0], pair[1]) {
                return Err(Error::NotAdjacent {
                    a: base.token(pair[0]).to_string(),
                    b: base.token(pair[1]).to_string(),
                });
            }
        }
        Ok(Walk { base, seq })
    }

    /// Parses whitespace-separated vertex tokens, e.g. `"c 1 2 3 4 c"`.
    pub fn from_tokens(base: &Arc<Graph>, text: &str) -> Result<Walk> {
        let seq = text
            .split_whitespace()
            .map(|t| base.vertex_or_err(t))
            .collect::<Result<Vec<_>>>()?;
        Walk::new(base.clone(), seq)
    }

    pub fn identity(base: &Arc<Graph>, v: VertexId) -> Walk {
        Walk { base: base.clone(), seq: vec![v] }
    }

    pub fn base(&self) -> &Arc<Graph> {
        &self.base
    }

    pub fn seq(&self) -> &[VertexId] {
        &self.seq
    }

    /// Length in edges.
    pub fn len(&self) -> usize {
        self.seq.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> VertexId {
        self.seq[0]
    }

    pub fn end(&self) -> VertexId {
        *self.seq.last().unwrap()
    }

    pub fn display(&self) -> String {
        self.seq
            .iter()
            .map(|&v| self.base.token(v))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Concatenation; the shared endpoint is written once.
    pub fn concat(&self, other: &Walk) -> Result<Walk> {
        if *self.base != *other.base {
            return Err(Error::BaseMismatch);
        }
        if self.end() != other.start() {
            return Err(Error::EndpointMismatch(
                self.base.token(self.end()).to_string(),
                self.base.token(other.start()).to_string(),
            ));
        }
        let mut seq = self.seq.clone();
        seq.extend_from_slice(&other.seq[1..]);
        Ok(Walk { base: self.base.clone(), seq })
    }

    pub fn reverse(&self) -> Walk {
        let mut seq = self.seq.clone();
        seq.reverse();
        Walk { base: self.base.clone(), seq }
    }

    /// Deletes the vertices at `i` and `i+1` when `seq[i] == seq[i+2]`.
    pub fn prune_once(&self, i: usize) -> Result<Walk> {
        if i + 2 >= self.seq.len() || self.seq[i] != self.seq[i + 2] {
            return Err(Error::NotPrunable(i));
        }
        let mut seq = self.seq.clone();
        seq.drain(i..i + 2);
        Ok(Walk { base: self.base.clone(), seq })
    }

    pub fn is_prune_free(&self) -> bool {
        !self.seq.windows(3).any(|w| w[0] == w[2])
    }

    /// Prunes at the leftmost prunable index until prune-free. The result is
    /// the canonical non-backtracking representative for this prune order.
    pub fn prune_normal_form(&self) -> Walk {
        let mut seq = self.seq.clone();
        loop {
            let Some(i) = (0..seq.len().saturating_sub(2)).find(|&i| seq[i] == seq[i + 2]) else {
                break;
            };
            seq.drain(i..i + 2);
        }
        Walk { base: self.base.clone(), seq }
    }

    /// Length of the prune normal form, in edges.
    pub fn reduced_len(&self) -> usize {
        self.prune_normal_form().len()
    }

    /// Every admissible spider move on an interior position. Endpoints are
    /// never moved.
    pub fn spider_moves(&self) -> Vec<WalkSpiderMove> {
        let mut out = Vec::new();
        for i in 1..self.seq.len().saturating_sub(1) {
            let (prev, cur, next) = (self.seq[i - 1], self.seq[i], self.seq[i + 1]);
            for &cand in self.base.neighbors(prev) {
                if cand != cur && self.base.has_edge(cand, next) {
                    out.push(WalkSpiderMove { position: i, replacement: cand });
                }
            }
        }
        out
    }

    pub fn apply_spider(&self, mv: WalkSpiderMove) -> Result<Walk> {
        if mv.position == 0 || mv.position >= self.len() {
            return Err(Error::SpiderPosition(mv.position));
        }
        let mut seq = self.seq.clone();
        seq[mv.position] = mv.replacement;
        Walk::new(self.base.clone(), seq)
    }
}

/// Verdict of the bounded rewriting oracle. `NoWithinBounds` is not a proof
/// of inequivalence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleVerdict {
    Yes,
    NoWithinBounds,
}

/// Search bounds for the rewriting oracle.
#[derive(Clone, Copy, Debug)]
pub struct OracleBounds {
    pub max_len: usize,
    pub max_states: usize,
}

impl OracleBounds {
    /// Default bounds for a pair: `max_len = len(a)+len(b)+4`, a million states.
    pub fn for_pair(a: &Walk, b: &Walk) -> OracleBounds {
        OracleBounds { max_len: a.len() + b.len() + 4, max_states: 1_000_000 }
    }
}

fn moves_of(base: &Graph, seq: &[VertexId], max_len: usize, out: &mut Vec<Vec<VertexId>>) {
    out.clear();
    // Spider moves on interior positions.
    for i in 1..seq.len().saturating_sub(1) {
        let (prev, cur, next) = (seq[i - 1], seq[i], seq[i + 1]);
        for &cand in base.neighbors(prev) {
            if cand != cur && base.has_edge(cand, next) {
                let mut s = seq.to_vec();
                s[i] = cand;
                out.push(s);
            }
        }
    }
    // Prunes.
    for i in 0..seq.len().saturating_sub(2) {
        if seq[i] == seq[i + 2] {
            let mut s = seq.to_vec();
            s.drain(i..i + 2);
            out.push(s);
        }
    }
    // Unprunes: insert (w, seq[i]) after position i, for any neighbor w.
    if seq.len() + 2 <= max_len + 1 {
        for i in 0..seq.len() {
            let x = seq[i];
            for &w in base.neighbors(x) {
                let mut s = seq.to_vec();
                s.splice(i + 1..i + 1, [w, x]);
                out.push(s);
            }
        }
    }
}

/// Breadth-first search over the rewriting system {spider move, prune,
/// unprune} restricted to walks of length at most `max_len`, exploring at
/// most `max_states` states. Returns `Yes` iff `b` is reached from `a`.
pub fn oracle_homotopic_rel_endpoints(a: &Walk, b: &Walk, bounds: OracleBounds) -> Result<OracleVerdict> {
    if **a.base() != **b.base() {
        return Err(Error::BaseMismatch);
    }
    if a.start() != b.start() || a.end() != b.end() {
        return Err(Error::EndpointMismatch(
            a.base().token(a.start()).to_string(),
            b.base().token(b.start()).to_string(),
        ));
    }
    if a.seq == b.seq {
        return Ok(OracleVerdict::Yes);
    }
    let mut found = false;
    explore(a, bounds, |seq| {
        if seq == b.seq.as_slice() {
            found = true;
            true
        } else {
            false
        }
    });
    Ok(if found { OracleVerdict::Yes } else { OracleVerdict::NoWithinBounds })
}

/// Runs the oracle BFS from `a`, invoking `visit` on every discovered walk
/// sequence (excluding `a` itself). Stops early when `visit` returns true.
/// This is the engine behind [`oracle_homotopic_rel_endpoints`]; tests use it
/// to certify many pairs from one search.
pub fn explore<F: FnMut(&[VertexId]) -> bool>(a: &Walk, bounds: OracleBounds, mut visit: F) {
    let base = a.base();
    let mut seen: HashSet<Box<[VertexId]>> = HashSet::new();
    let mut queue: VecDeque<Vec<VertexId>> = VecDeque::new();
    seen.insert(a.seq.clone().into_boxed_slice());
    queue.push_back(a.seq.clone());
    let mut scratch = Vec::new();
    while let Some(cur) = queue.pop_front() {
        moves_of(base, &cur, bounds.max_len, &mut scratch);
        for next in scratch.drain(..) {
            if seen.len() >= bounds.max_states {
                return;
            }
            if seen.insert(next.clone().into_boxed_slice()) {
                if visit(&next) {
                    return;
                }
                queue.push_back(next);
            }
        }
    }
}

/// Enumerates all prune-free walks from `v` of length at most `max_len`,
/// in depth-first vertex order.
pub fn prune_free_walks(base: &Arc<Graph>, v: VertexId, max_len: usize) -> Vec<Walk> {
    let mut out = Vec::new();
    let mut stack = vec![vec![v]];
    while let Some(seq) = stack.pop() {
        if seq.len() <= max_len {
            let last = *seq.last().unwrap();
            let forbidden = if seq.len() >= 2 { Some(seq[seq.len() - 2]) } else { None };
            for &w in base.neighbors(last).iter().rev() {
                if Some(w) != forbidden {
                    let mut s = seq.clone();
                    s.push(w);
                    stack.push(s);
                }
            }
        }
        out.push(Walk { base: base.clone(), seq });
    }
    out
}

/// Groups equal-endpoint walks into oracle-certified equivalence classes:
/// runs one bounded BFS per walk and joins walks discovered along the way.
/// Used by differential tests against the lifting decider.
pub fn oracle_certified_pairs(walks: &[Walk], bounds: OracleBounds) -> Vec<(usize, usize)> {
    let index: HashMap<&[VertexId], usize> =
        walks.iter().enumerate().map(|(i, w)| (w.seq.as_slice(), i)).collect();
    let mut pairs = Vec::new();
    for (i, w) in walks.iter().enumerate() {
        explore(w, bounds, |seq| {
            if let Some(&j) = index.get(seq) {
                if j != i {
                    pairs.push((i, j));
                }
            }
            false
        });
    }
    pairs
}
