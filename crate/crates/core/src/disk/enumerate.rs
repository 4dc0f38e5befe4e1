//! Exhaustive enumeration of disk angulations and the flip graph.
//!
//! [`enumerate_angulations`] searches maximal noncrossing sets of m-diagonals
//! by backtracking and never calls the flip code; [`flip_graph`] explores by
//! flips from the fan and never consults the backtracking search. The two are
//! meant to be compared.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use super::{Diagonal, DiskAngulation, DiskConfig, DiskError};

/// Default upper bound on the rank accepted by exhaustive searches.
pub const DEFAULT_GUARD: usize = 12;
/// Environment variable overriding [`DEFAULT_GUARD`].
pub const GUARD_ENV: &str = "ANGULATOR_GUARD";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub max_rank: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_rank: DEFAULT_GUARD,
        }
    }
}

impl Guard {
    pub fn new(max_rank: usize) -> Self {
        Guard { max_rank }
    }

    /// Reads [`GUARD_ENV`], falling back to the default when unset or
    /// unparsable.
    pub fn from_env() -> Self {
        std::env::var(GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Guard::new)
            .unwrap_or_default()
    }

    pub fn check(&self, config: DiskConfig) -> Result<(), DiskError> {
        if config.rank() > self.max_rank {
            Err(DiskError::GuardExceeded {
                rank: config.rank(),
                limit: self.max_rank,
            })
        } else {
            Ok(())
        }
    }
}

/// Result of the backtracking search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Number of maximal noncrossing sets.
    pub count: u64,
    /// How many maximal sets were found at each cardinality.
    pub sizes: BTreeMap<usize, u64>,
    /// The maximal sets themselves, when requested.
    pub angulations: Option<Vec<DiskAngulation>>,
}

#[derive(Clone)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(bits: usize) -> Self {
        BitSet(vec![0; bits.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

struct Search<'a> {
    candidates: &'a [Diagonal],
    crossing: Vec<BitSet>,
    /// `last_crosser[i]`: largest index of a candidate crossing candidate `i`.
    last_crosser: Vec<Option<usize>>,
    chosen: Vec<usize>,
    skipped: Vec<usize>,
    sizes: BTreeMap<usize, u64>,
    found: Option<Vec<Vec<Diagonal>>>,
}

impl Search<'_> {
    fn run(&mut self, idx: usize, blocked: &BitSet) {
        if idx == self.candidates.len() {
            if self.skipped.iter().all(|&s| blocked.get(s)) {
                *self.sizes.entry(self.chosen.len()).or_insert(0) += 1;
                if let Some(found) = self.found.as_mut() {
                    found.push(self.chosen.iter().map(|&i| self.candidates[i]).collect());
                }
            }
            return;
        }
        // A skipped candidate must be blocked by something chosen later.
        if self
            .skipped
            .iter()
            .any(|&s| !blocked.get(s) && self.last_crosser[s].is_none_or(|l| l < idx))
        {
            return;
        }
        if blocked.get(idx) {
            self.run(idx + 1, blocked);
            return;
        }
        let mut with = blocked.clone();
        with.union_with(&self.crossing[idx]);
        self.chosen.push(idx);
        self.run(idx + 1, &with);
        self.chosen.pop();

        self.skipped.push(idx);
        self.run(idx + 1, blocked);
        self.skipped.pop();
    }
}

/// Counts maximal noncrossing sets of m-diagonals by backtracking over the
/// canonically ordered candidates, optionally returning them.
pub fn enumerate_angulations(
    config: DiskConfig,
    guard: Guard,
    keep: bool,
) -> Result<Enumeration, DiskError> {
    guard.check(config)?;
    let candidates = config.all_diagonals();
    let n = candidates.len();
    let mut crossing = vec![BitSet::new(n); n];
    let mut last_crosser = vec![None; n];
    for i in 0..n {
        for j in 0..n {
            if candidates[i].crosses(&candidates[j]) {
                crossing[i].set(j);
                last_crosser[i] = Some(j);
            }
        }
    }
    let mut search = Search {
        candidates: &candidates,
        crossing,
        last_crosser,
        chosen: Vec::new(),
        skipped: Vec::new(),
        sizes: BTreeMap::new(),
        found: keep.then(Vec::new),
    };
    search.run(0, &BitSet::new(n));
    let angulations = match search.found {
        Some(sets) => Some(
            sets.into_iter()
                .map(|s| DiskAngulation::new(config, s))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        None => None,
    };
    Ok(Enumeration {
        count: search.sizes.values().sum(),
        sizes: search.sizes,
        angulations,
    })
}

/// `1/(k m + 1) * binom((m + 1) k, k)`: the number of dissections of a
/// `(k m + 2)`-gon into (m+2)-gons.
pub fn fuss_catalan(m: u32, k: u32) -> u128 {
    let n = u128::from((m + 1) * k);
    let k = u128::from(k);
    let mut binom: u128 = 1;
    for i in 0..k {
        binom = binom * (n - i) / (i + 1);
    }
    binom / (k * u128::from(m) + 1)
}

/// Angulations connected by single flips.
#[derive(Debug, Clone)]
pub struct FlipGraph {
    pub nodes: Vec<DiskAngulation>,
    /// Undirected edges `(i, j)` with `i < j`.
    pub edges: BTreeSet<(usize, usize)>,
}

impl FlipGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes.len()];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// Graphviz rendering; nodes are labeled by their diagonal lists.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph flips {\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let label: Vec<String> = node.diagonals().iter().map(|d| d.to_string()).collect();
            let _ = writeln!(out, "  {i} [label=\"{}\"];", label.join(" "));
        }
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "  {i} -- {j};");
        }
        out.push_str("}\n");
        out
    }
}

/// Breadth-first exploration by flips from the initial fan.
pub fn flip_graph(config: DiskConfig, guard: Guard) -> Result<FlipGraph, DiskError> {
    guard.check(config)?;
    let start = config.initial_fan();
    let mut index: HashMap<DiskAngulation, usize> = HashMap::from([(start.clone(), 0)]);
    let mut nodes = vec![start];
    let mut edges = BTreeSet::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let current = nodes[u].clone();
        for &d in current.diagonals() {
            let next = current.flip(d)?;
            let v = match index.get(&next) {
                Some(&v) => v,
                None => {
                    let v = nodes.len();
                    index.insert(next.clone(), v);
                    nodes.push(next);
                    queue.push_back(v);
                    v
                }
            };
            if u != v {
                edges.insert((u.min(v), u.max(v)));
            }
        }
    }
    Ok(FlipGraph { nodes, edges })
}
