//! Two-colorings of complete graphs, monochromatic copy search, and exact
//! Ramsey numbers of small patterns.
//!
//! Colorings serialize as `{"n": N, "bits": "..."}` where `bits` lists the
//! pairs `(0,1), (0,2), ..., (0,N-1), (1,2), ...` in lexicographic order and
//! `1` means red.

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subgraph::{PatternPlan, WordRows};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// Which color classes a search looks in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorChoice {
    Only(Color),
    Both,
}

/// A red/blue coloring of every edge of `K_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoColoring {
    n: usize,
    red: Vec<FixedBitSet>,
}

impl TwoColoring {
    pub fn monochromatic(n: usize, color: Color) -> Self {
        Self::from_fn(n, |_, _| color)
    }

    /// `f(u, v)` is called once per pair with `u < v`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Color) -> Self {
        let mut c = TwoColoring { n, red: vec![FixedBitSet::with_capacity(n); n] };
        for u in 0..n {
            for v in u + 1..n {
                c.set(u, v, f(u, v));
            }
        }
        c
    }

    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Self {
        Self::from_fn(n, |_, _| if rng.random::<bool>() { Color::Red } else { Color::Blue })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn color(&self, u: usize, v: usize) -> Color {
        assert_ne!(u, v, "no color on the diagonal");
        if self.red[u].contains(v) {
            Color::Red
        } else {
            Color::Blue
        }
    }

    pub fn set(&mut self, u: usize, v: usize, color: Color) {
        assert_ne!(u, v, "no color on the diagonal");
        let on = color == Color::Red;
        self.red[u].set(v, on);
        self.red[v].set(u, on);
    }

    /// Neighbors of `u` along edges of `color`.
    pub fn neighbors(&self, u: usize, color: Color) -> FixedBitSet {
        match color {
            Color::Red => self.red[u].clone(),
            Color::Blue => {
                let mut row = self.red[u].clone();
                row.toggle_range(..);
                row.set(u, false);
                row
            }
        }
    }

    pub fn class_graph(&self, color: Color) -> Graph {
        let pairs: Vec<_> = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.color(u, v) == color)
            .collect();
        Graph::from_canonical_pairs(self.n, &pairs)
    }

    /// Colors swapped.
    pub fn swapped(&self) -> TwoColoring {
        TwoColoring::from_fn(self.n, |u, v| self.color(u, v).other())
    }

    pub fn to_bits(&self) -> String {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .map(|(u, v)| if self.color(u, v) == Color::Red { '1' } else { '0' })
            .collect()
    }

    pub fn from_bits(n: usize, bits: &str) -> Result<Self> {
        let expected = n * n.saturating_sub(1) / 2;
        if bits.len() != expected {
            return Err(Error::InvalidArgument(format!("coloring of K_{n} needs {expected} bits, got {}", bits.len())));
        }
        let mut chars = bits.chars();
        let mut bad = None;
        let c = TwoColoring::from_fn(n, |_, _| match chars.next() {
            Some('1') => Color::Red,
            Some('0') => Color::Blue,
            other => {
                bad = other;
                Color::Blue
            }
        });
        match bad {
            Some(ch) => Err(Error::InvalidArgument(format!("unexpected character `{ch}` in coloring bits"))),
            None => Ok(c),
        }
    }

    fn word_rows(&self, color: Color) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| {
            (0..self.n)
                .map(|u| {
                    let mut w = 0u64;
                    for v in 0..self.n {
                        if v != u && self.color(u, v) == color {
                            w |= 1 << v;
                        }
                    }
                    w
                })
                .collect()
        })
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringRecord {
    n: usize,
    bits: String,
}

impl Serialize for TwoColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ColoringRecord { n: self.n, bits: self.to_bits() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TwoColoring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = ColoringRecord::deserialize(d)?;
        TwoColoring::from_bits(rec.n, &rec.bits).map_err(serde::de::Error::custom)
    }
}

/// A monochromatic copy: its color and the embedding of the pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoCopy {
    pub color: Color,
    pub embedding: Embedding,
}

/// Searches the requested color classes (red first) for a copy of `pattern`.
/// `None` means the search was exhaustive and found nothing.
pub fn find_mono_copy(coloring: &TwoColoring, pattern: &Graph, which: ColorChoice) -> Option<MonoCopy> {
    let colors: &[Color] = match which {
        ColorChoice::Only(Color::Red) => &[Color::Red],
        ColorChoice::Only(Color::Blue) => &[Color::Blue],
        ColorChoice::Both => &[Color::Red, Color::Blue],
    };
    let plan = PatternPlan::new(pattern);
    for &color in colors {
        let found = match coloring.word_rows(color) {
            Some(rows) => plan.find(&WordRows(&rows), &[]),
            None => plan.find(&coloring.class_graph(color), &[]),
        };
        if let Some(map) = found {
            let embedding = Embedding::from_total(map);
            debug_assert!(embedding.verify(pattern, &coloring.class_graph(color), None).is_ok());
            return Some(MonoCopy { color, embedding });
        }
    }
    None
}

/// Counters from one exhaustive search at a fixed `N`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub n: usize,
    /// Partial colorings visited.
    pub nodes: u64,
    /// Top-level branches (red-prefix lengths on vertex 0's edges).
    pub branches: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RamseyResult {
    pub value: usize,
    /// A coloring of `K_{value-1}` without a monochromatic copy.
    pub lower_witness: TwoColoring,
    /// The exhausted search at `N = value`.
    pub upper_certificate: SearchStats,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum RamseyOutcome {
    Known(RamseyResult),
    /// Every `N <= n_max` admits an avoiding coloring.
    Unknown {
        n_max: usize,
        best_witness: Option<TwoColoring>,
    },
}

/// Incremental exhaustive search over colorings of `K_n`.
struct Avoider<'a> {
    pattern: &'a Graph,
    n: usize,
    /// One plan per oriented pattern edge, with that edge matched first.
    edge_plans: Vec<PatternPlan>,
    pairs: Vec<(usize, usize)>,
}

struct PartialColoring {
    rows: [Vec<u64>; 2],
}

impl PartialColoring {
    fn new(n: usize) -> Self {
        PartialColoring { rows: [vec![0; n], vec![0; n]] }
    }
    fn paint(&mut self, u: usize, v: usize, c: usize) {
        self.rows[c][u] |= 1 << v;
        self.rows[c][v] |= 1 << u;
    }
    fn erase(&mut self, u: usize, v: usize, c: usize) {
        self.rows[c][u] &= !(1 << v);
        self.rows[c][v] &= !(1 << u);
    }
}

impl<'a> Avoider<'a> {
    fn new(pattern: &'a Graph, n: usize) -> Self {
        let edge_plans = pattern
            .edges()
            .flat_map(|(a, b)| [(a, b), (b, a)])
            .map(|(a, b)| PatternPlan::with_prefix(pattern, &[a, b]))
            .collect();
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Avoider { pattern, n, edge_plans, pairs }
    }

    /// Whether a copy in color `c` uses the edge `(u, v)`.
    fn closes_copy(&self, col: &PartialColoring, u: usize, v: usize, c: usize) -> bool {
        let host = WordRows(&col.rows[c]);
        self.edge_plans.iter().any(|plan| plan.find(&host, &[u, v]).is_some())
    }

    /// Tries every completion of the branch where vertex 0 has `reds` red edges first.
    fn branch(&self, reds: usize, nodes: &mut u64) -> Option<TwoColoring> {
        let mut col = PartialColoring::new(self.n);
        for (k, v) in (1..self.n).enumerate() {
            let c = usize::from(k >= reds);
            col.paint(0, v, c);
            *nodes += 1;
            if self.closes_copy(&col, 0, v, c) {
                return None;
            }
        }
        let start = self.n - 1;
        if self.dfs(&mut col, start, nodes) {
            let rows = &col.rows[0];
            Some(TwoColoring::from_fn(self.n, |u, v| if rows[u] >> v & 1 == 1 { Color::Red } else { Color::Blue }))
        } else {
            None
        }
    }

    fn dfs(&self, col: &mut PartialColoring, idx: usize, nodes: &mut u64) -> bool {
        if idx == self.pairs.len() {
            return true;
        }
        let (u, v) = self.pairs[idx];
        for c in 0..2 {
            *nodes += 1;
            col.paint(u, v, c);
            if !self.closes_copy(col, u, v, c) && self.dfs(col, idx + 1, nodes) {
                return true;
            }
            col.erase(u, v, c);
        }
        false
    }

    fn run(&self) -> (Option<TwoColoring>, SearchStats) {
        let mut stats = SearchStats { n: self.n, nodes: 0, branches: 0 };
        if self.n < self.pattern.n() {
            return (Some(TwoColoring::monochromatic(self.n, Color::Red)), stats);
        }
        if self.pattern.edge_count() == 0 {
            return (None, stats);
        }
        stats.branches = self.n;
        // Relabelling vertices 1..n permutes vertex 0's edges, so only the
        // sorted patterns (k red edges, then blue) need to be tried.
        let results: Vec<(Option<TwoColoring>, u64)> = (0..self.n)
            .into_par_iter()
            .rev()
            .map(|reds| {
                let mut nodes = 0;
                let found = self.branch(reds, &mut nodes);
                (found, nodes)
            })
            .collect();
        stats.nodes = results.iter().map(|r| r.1).sum();
        let witness = results.into_iter().find_map(|r| r.0);
        (witness, stats)
    }
}

/// Largest host for the exhaustive search.
pub const EXACT_MAX_N: usize = 64;

/// A coloring of `K_n` with no monochromatic copy of `pattern`, if one exists,
/// together with the search counters. The search is exhaustive.
pub fn avoiding_coloring(pattern: &Graph, n: usize) -> Result<(Option<TwoColoring>, SearchStats)> {
    if n > EXACT_MAX_N {
        return Err(Error::TooLarge(format!("exhaustive search supports N <= {EXACT_MAX_N}")));
    }
    let (witness, stats) = Avoider::new(pattern, n).run();
    if let Some(w) = &witness {
        if find_mono_copy(w, pattern, ColorChoice::Both).is_some() {
            return Err(Error::Invariant("avoiding coloring contains a monochromatic copy".into()));
        }
    }
    Ok((witness, stats))
}

/// Smallest `N` for which every coloring of `K_N` has a monochromatic copy
/// of `pattern`, searching `N = 1, 2, ..., n_max`.
pub fn ramsey_exact(pattern: &Graph, n_max: usize) -> Result<RamseyOutcome> {
    let mut last: Option<TwoColoring> = None;
    for n in 1..=n_max {
        let (witness, stats) = avoiding_coloring(pattern, n)?;
        match witness {
            Some(w) => last = Some(w),
            None => {
                let lower_witness = last.unwrap_or_else(|| TwoColoring::monochromatic(n - 1, Color::Red));
                return Ok(RamseyOutcome::Known(RamseyResult { value: n, lower_witness, upper_certificate: stats }));
            }
        }
    }
    Ok(RamseyOutcome::Unknown { n_max, best_witness: last })
}

/// Local search for a coloring of `K_n` without a monochromatic copy.
///
/// Each restart draws a random coloring, then repeatedly flips an edge lying
/// in the most monochromatic copies (ties broken at random) for up to
/// `max_flips` steps. A returned coloring has been checked with
/// [`find_mono_copy`]; `None` only means nothing was found.
pub fn ramsey_lower_search(
    pattern: &Graph,
    n: usize,
    restarts: u32,
    max_flips: u32,
    seed: u64,
) -> Result<Option<TwoColoring>> {
    if n > EXACT_MAX_N {
        return Err(Error::TooLarge(format!("local search supports N <= {EXACT_MAX_N}")));
    }
    let plan = PatternPlan::new(pattern);
    let index = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        a * n - a * (a + 1) / 2 + (b - a - 1)
    };
    let pair_count = n * n.saturating_sub(1) / 2;
    for restart in 0..restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(restart as u64);
        let mut coloring = TwoColoring::random(n, &mut rng);
        for _ in 0..=max_flips {
            let mut hits = vec![0u64; pair_count];
            let mut total = 0u64;
            for color in [Color::Red, Color::Blue] {
                let rows = coloring.word_rows(color).expect("n <= 64");
                plan.search(&WordRows(&rows), &[], &mut |map| {
                    total += 1;
                    for (a, b) in pattern.edges() {
                        hits[index(map[a], map[b])] += 1;
                    }
                    false
                });
            }
            if total == 0 {
                if find_mono_copy(&coloring, pattern, ColorChoice::Both).is_some() {
                    return Err(Error::Invariant("local search accepted a coloring with a copy".into()));
                }
                return Ok(Some(coloring));
            }
            let worst = *hits.iter().max().expect("a copy implies an edge");
            let tied: Vec<usize> = (0..pair_count).filter(|&i| hits[i] == worst).collect();
            let pick = tied[rng.random_range(0..tied.len())];
            let (u, v) = pair_at(n, pick);
            let c = coloring.color(u, v);
            coloring.set(u, v, c.other());
        }
    }
    Ok(None)
}

fn pair_at(n: usize, mut idx: usize) -> (usize, usize) {
    let mut u = 0;
    while idx >= n - u - 1 {
        idx -= n - u - 1;
        u += 1;
    }
    (u, u + 1 + idx)
}

/// The 5-cycle `0-1-2-3-4-0` in red and its complement in blue.
pub fn pentagon_coloring() -> TwoColoring {
    TwoColoring::from_fn(5, |u, v| if (v - u) % 5 == 1 || (v - u) % 5 == 4 { Color::Red } else { Color::Blue })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_round_trip() {
        let c = pentagon_coloring();
        assert_eq!(c.to_bits(), "1001100101");
        assert_eq!(TwoColoring::from_bits(5, &c.to_bits()).unwrap(), c);
        assert!(TwoColoring::from_bits(5, "101").is_err());
        assert!(TwoColoring::from_bits(3, "1x1").is_err());
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"n":5,"bits":"1001100101"}"#);
    }

    #[test]
    fn pair_index_inverse() {
        let n = 7;
        let mut idx = 0;
        for u in 0..n {
            for v in u + 1..n {
                assert_eq!(pair_at(n, idx), (u, v));
                idx += 1;
            }
        }
    }

    #[test]
    fn mono_copy_examples() {
        let red = TwoColoring::monochromatic(6, Color::Red);
        let found = find_mono_copy(&red, &Graph::complete(3), ColorChoice::Both).unwrap();
        assert_eq!(found.color, Color::Red);
        assert!(find_mono_copy(&pentagon_coloring(), &Graph::complete(3), ColorChoice::Both).is_none());
        assert!(
            find_mono_copy(&TwoColoring::monochromatic(1, Color::Red), &Graph::empty(1), ColorChoice::Both).is_some()
        );
    }

    #[test]
    fn small_ramsey_numbers() {
        let k2 = ramsey_exact(&Graph::complete(2), 4).unwrap();
        let RamseyOutcome::Known(r) = k2 else { panic!("K2 is decided") };
        assert_eq!(r.value, 2);
        let RamseyOutcome::Known(r) = ramsey_exact(&Graph::path(4), 8).unwrap() else { panic!() };
        assert_eq!(r.value, 5);
        assert_eq!(r.lower_witness.n(), 4);
        assert!(find_mono_copy(&r.lower_witness, &Graph::path(4), ColorChoice::Both).is_none());
    }

    #[test]
    fn cap_gives_unknown() {
        let out = ramsey_exact(&Graph::complete(3), 4).unwrap();
        assert!(matches!(out, RamseyOutcome::Unknown { n_max: 4, .. }));
    }

    #[test]
    fn edgeless_pattern() {
        let RamseyOutcome::Known(r) = ramsey_exact(&Graph::empty(3), 5).unwrap() else { panic!() };
        assert_eq!(r.value, 3);
    }

    #[test]
    fn lower_search() {
        let k3 = Graph::complete(3);
        let c = ramsey_lower_search(&k3, 5, 20, 200, 7).unwrap().unwrap();
        assert!(find_mono_copy(&c, &k3, ColorChoice::Both).is_none());
        assert!(ramsey_lower_search(&Graph::complete(2), 2, 5, 50, 0).unwrap().is_none());
        assert!(ramsey_lower_search(&k3, 6, 5, 200, 0).unwrap().is_none());
    }
}
