//! Backtracking search for (not necessarily induced) copies of a small
//! pattern graph inside a host.
//!
//! Pattern vertices are matched in a connectivity-first order: the first is
//! a vertex of maximum degree, and each later one is the unmatched vertex
//! with the most already-matched neighbors (then higher degree, then smaller
//! index). Candidates for a vertex are host neighbors of the image of its
//! first matched neighbor, filtered by adjacency to the other matched
//! neighbors and by degree, in increasing host index.

use crate::graph::Graph;

/// Host adjacency as seen by the matcher.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn adjacent(&self, u: usize, v: usize) -> bool;
    fn degree_of(&self, u: usize) -> usize;
    /// Appends the neighbors of `u` to `out` in increasing order.
    fn neighbors_into(&self, u: usize, out: &mut Vec<usize>);
}

impl Adjacency for Graph {
    fn vertex_count(&self) -> usize {
        self.n()
    }
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }
    fn degree_of(&self, u: usize) -> usize {
        self.degree(u)
    }
    fn neighbors_into(&self, u: usize, out: &mut Vec<usize>) {
        out.extend_from_slice(self.neighbors(u));
    }
}

/// Single-word adjacency rows for hosts on at most 64 vertices.
#[derive(Clone, Copy)]
pub struct WordRows<'a>(pub &'a [u64]);

impl Adjacency for WordRows<'_> {
    fn vertex_count(&self) -> usize {
        self.0.len()
    }
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.0[u] >> v & 1 == 1
    }
    fn degree_of(&self, u: usize) -> usize {
        self.0[u].count_ones() as usize
    }
    fn neighbors_into(&self, u: usize, out: &mut Vec<usize>) {
        let mut row = self.0[u];
        while row != 0 {
            out.push(row.trailing_zeros() as usize);
            row &= row - 1;
        }
    }
}

/// A matching order for one pattern, optionally starting with a fixed prefix.
#[derive(Clone, Debug)]
pub struct PatternPlan {
    order: Vec<usize>,
    /// For each step, the steps of earlier-matched pattern neighbors.
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl PatternPlan {
    pub fn new(pattern: &Graph) -> Self {
        Self::with_prefix(pattern, &[])
    }

    /// Plan whose first steps match `prefix` in the given order.
    pub fn with_prefix(pattern: &Graph, prefix: &[usize]) -> Self {
        let n = pattern.n();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for &v in prefix {
            placed[v] = true;
            order.push(v);
        }
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let linked = pattern.neighbors(v).iter().filter(|&&u| placed[u]).count();
                    (linked, pattern.degree(v), std::cmp::Reverse(v))
                })
                .expect("an unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        let mut step = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            step[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut b: Vec<usize> = pattern.neighbors(v).iter().map(|&u| step[u]).filter(|&j| j < i).collect();
                b.sort_unstable();
                b
            })
            .collect();
        PatternPlan { order, back, degree: pattern.degrees() }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Calls `visit` with each copy (as a pattern-vertex to host-vertex map)
    /// whose first `fixed.len()` steps map to `fixed`. Stops early when
    /// `visit` returns `true`; returns whether it stopped.
    pub fn search<A: Adjacency>(&self, host: &A, fixed: &[usize], visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.order.len();
        if n > host.vertex_count() {
            return false;
        }
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; host.vertex_count()];
        for (i, &h) in fixed.iter().enumerate() {
            let v = self.order[i];
            if used[h] || host.degree_of(h) < self.degree[v] {
                return false;
            }
            if !self.back[i].iter().all(|&j| host.adjacent(image[self.order[j]], h)) {
                return false;
            }
            image[v] = h;
            used[h] = true;
        }
        let mut by_pattern = vec![0usize; n];
        self.extend(host, fixed.len(), &mut image, &mut used, &mut by_pattern, visit)
    }

    fn extend<A: Adjacency>(
        &self,
        host: &A,
        step: usize,
        image: &mut [usize],
        used: &mut [bool],
        out: &mut [usize],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if step == self.order.len() {
            out.copy_from_slice(image);
            return visit(out);
        }
        let v = self.order[step];
        let back = &self.back[step];
        let mut cands = Vec::new();
        match back.first() {
            Some(&j) => host.neighbors_into(image[self.order[j]], &mut cands),
            None => cands.extend(0..host.vertex_count()),
        }
        for h in cands {
            if used[h] || host.degree_of(h) < self.degree[v] {
                continue;
            }
            if !back.iter().skip(1).all(|&j| host.adjacent(image[self.order[j]], h)) {
                continue;
            }
            image[v] = h;
            used[h] = true;
            let stop = self.extend(host, step + 1, image, used, out, visit);
            used[h] = false;
            image[v] = usize::MAX;
            if stop {
                return true;
            }
        }
        false
    }

    pub fn find<A: Adjacency>(&self, host: &A, fixed: &[usize]) -> Option<Vec<usize>> {
        let mut found = None;
        self.search(host, fixed, &mut |m| {
            found = Some(m.to_vec());
            true
        });
        found
    }
}

/// First copy of `pattern` in `host`, as `map[pattern vertex] = host vertex`.
pub fn find_copy<A: Adjacency>(pattern: &Graph, host: &A) -> Option<Vec<usize>> {
    PatternPlan::new(pattern).find(host, &[])
}
