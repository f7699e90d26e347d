//! Exhaustive search over small connected graphs for those whose line graph
//! is fully regular.
//!
//! Connected graphs on `n` vertices are produced from connected graphs on
//! `n - 1` vertices by adding a vertex joined to a nonempty subset; every
//! connected graph has a non-cut vertex, so nothing is missed. Candidates
//! are deduplicated by an exact canonical form.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use svo_core::oracle::check_fully_regular;
use svo_core::{line_graph, Error, SimpleGraph};

use crate::report::VerificationReport;

pub const MAX_CLASSIFY_VERTICES: usize = 8;

/// A graph on at most 8 vertices as adjacency rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmallGraph {
    n: usize,
    rows: [u8; MAX_CLASSIFY_VERTICES],
}

impl SmallGraph {
    pub fn single_vertex() -> Self {
        SmallGraph { n: 1, rows: [0; MAX_CLASSIFY_VERTICES] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn from_simple(g: &SimpleGraph) -> Self {
        assert!(g.vertex_count() <= MAX_CLASSIFY_VERTICES);
        let mut rows = [0u8; MAX_CLASSIFY_VERTICES];
        for (v, row) in rows.iter_mut().enumerate().take(g.vertex_count()) {
            *row = g.neighbor_mask(v) as u8;
        }
        SmallGraph { n: g.vertex_count(), rows }
    }

    fn with_new_vertex(&self, nbrs: u8) -> Self {
        let mut g = *self;
        let v = self.n;
        g.n += 1;
        g.rows[v] = nbrs;
        for u in 0..self.n {
            if nbrs >> u & 1 == 1 {
                g.rows[u] |= 1 << v;
            }
        }
        g
    }

    fn degree(&self, v: usize) -> u32 {
        self.rows[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v) as usize).sum::<usize>() / 2
    }

    pub fn to_simple(&self) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| (u + 1..self.n).filter(move |&v| self.rows[u] >> v & 1 == 1).map(move |v| (u, v)))
            .collect();
        SimpleGraph::from_edges(self.n, &edges).expect("valid adjacency")
    }

    /// Upper-triangle adjacency bits under the relabeling `perm[new] = old`.
    fn code_under(&self, perm: &[usize]) -> u32 {
        let mut code = 0u32;
        let mut bit = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.rows[perm[i]] >> perm[j] & 1 == 1 {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        code
    }

    /// Canonical form: the largest adjacency code over all relabelings that
    /// list vertices by increasing invariant (degree, then sorted neighbor
    /// degrees). The invariant is preserved by isomorphisms, so two graphs
    /// are isomorphic iff their canonical forms agree.
    pub fn canonical(&self) -> (usize, u32) {
        let invariant = |v: usize| -> (u32, Vec<u32>) {
            let mut nd: Vec<u32> = (0..self.n).filter(|&u| self.rows[v] >> u & 1 == 1).map(|u| self.degree(u)).collect();
            nd.sort_unstable();
            (self.degree(v), nd)
        };
        let mut order: Vec<(usize, (u32, Vec<u32>))> = (0..self.n).map(|v| (v, invariant(v))).collect();
        order.sort_by(|a, b| a.1.cmp(&b.1));
        // cells of equal invariant, in order
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for (i, (v, inv)) in order.iter().enumerate() {
            if i > 0 && order[i - 1].1 == *inv {
                cells.last_mut().expect("nonempty").push(*v);
            } else {
                cells.push(vec![*v]);
            }
        }
        let mut best = 0u32;
        let mut perm = Vec::with_capacity(self.n);
        self.search(&cells, 0, &mut vec![false; self.n], &mut perm, &mut best);
        (self.n, best)
    }

    fn search(&self, cells: &[Vec<usize>], cell: usize, used: &mut [bool], perm: &mut Vec<usize>, best: &mut u32) {
        if cell == cells.len() {
            *best = (*best).max(self.code_under(perm));
            return;
        }
        let placed_in_cell = perm.len() - cells[..cell].iter().map(Vec::len).sum::<usize>();
        if placed_in_cell == cells[cell].len() {
            self.search(cells, cell + 1, used, perm, best);
            return;
        }
        for &v in &cells[cell] {
            if !used[v] {
                used[v] = true;
                perm.push(v);
                self.search(cells, cell, used, perm, best);
                perm.pop();
                used[v] = false;
            }
        }
    }

    /// `K_n`, `K_{m,n}` (with `m <= n`) or `C_5`, when the graph is one of
    /// those; `None` otherwise.
    pub fn name(&self) -> Option<String> {
        let n = self.n;
        if self.edge_count() == n * (n - 1) / 2 {
            return Some(format!("K_{n}"));
        }
        // 2-colour from vertex 0 (the graph is connected).
        let mut colour = [u8::MAX; MAX_CLASSIFY_VERTICES];
        colour[0] = 0;
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if self.rows[u] >> v & 1 == 1 {
                    if colour[v] == u8::MAX {
                        colour[v] = 1 - colour[u];
                        stack.push(v);
                    } else if colour[v] == colour[u] {
                        return self.is_c5().then(|| "C_5".to_string());
                    }
                }
            }
        }
        let a = colour[..n].iter().filter(|&&c| c == 0).count();
        let b = n - a;
        if self.edge_count() == a * b {
            return Some(format!("K_{{{},{}}}", a.min(b), a.max(b)));
        }
        None
    }

    fn is_c5(&self) -> bool {
        self.n == 5 && (0..5).all(|v| self.degree(v) == 2)
    }
}

/// One representative per class of connected graphs on `n` vertices, given
/// the representatives on `n - 1`.
fn extend_connected(reps: &[SmallGraph]) -> Vec<SmallGraph> {
    let found: BTreeSet<((usize, u32), SmallGraph)> = reps
        .par_iter()
        .flat_map_iter(|g| {
            let n = g.vertex_count();
            (1u16..1 << n).map(move |nbrs| {
                let h = g.with_new_vertex(nbrs as u8);
                (h.canonical(), h)
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    let mut seen = BTreeSet::new();
    found.into_iter().filter(|(c, _)| seen.insert(*c)).map(|(_, g)| g).collect()
}

/// One representative per isomorphism class of connected graphs with
/// `1..=max_vertices` vertices.
pub fn connected_graphs(max_vertices: usize) -> Vec<SmallGraph> {
    let mut all = Vec::new();
    if max_vertices == 0 {
        return all;
    }
    let mut level = vec![SmallGraph::single_vertex()];
    all.extend(level.iter().copied());
    for _ in 2..=max_vertices {
        level = extend_connected(&level);
        all.extend(level.iter().copied());
    }
    all
}

/// The positives predicted for `max_vertices`: complete graphs, complete
/// bipartite graphs and `C_5`.
pub fn expected_positives(max_vertices: usize) -> BTreeSet<(usize, u32)> {
    let mut out = BTreeSet::new();
    for n in 1..=max_vertices {
        out.insert(SmallGraph::from_simple(&SimpleGraph::complete(n)).canonical());
        for m in 1..=n / 2 {
            out.insert(SmallGraph::from_simple(&SimpleGraph::complete_bipartite(m, n - m)).canonical());
        }
    }
    if max_vertices >= 5 {
        out.insert(SmallGraph::from_simple(&SimpleGraph::cycle(5)).canonical());
    }
    out
}

fn display_name(g: &SmallGraph) -> String {
    g.name().unwrap_or_else(|| format!("graph:{}", g.to_simple()))
}

/// Runs the fully-regular test on the line graph of every connected graph
/// with at most `max_vertices` vertices and compares the positives with
/// [`expected_positives`]. Findings list the positives by name.
pub fn classify_fully_regular_line_graphs(max_vertices: usize) -> Result<VerificationReport, Error> {
    if max_vertices > MAX_CLASSIFY_VERTICES {
        return Err(Error::CapExceeded {
            what: "classification vertex count",
            size: max_vertices as u128,
            cap: MAX_CLASSIFY_VERTICES,
        });
    }
    let start = Instant::now();
    let graphs = connected_graphs(max_vertices);
    let verdicts: Vec<Result<bool, Error>> = graphs
        .par_iter()
        .map(|g| {
            let h = g.to_simple().as_hypergraph();
            let lg = line_graph(&h, usize::MAX)?;
            Ok(check_fully_regular(&lg)?.is_fully_regular())
        })
        .collect();

    let mut report = VerificationReport::new("classify");
    report.instances_checked = graphs.len() as u64;
    let expected = expected_positives(max_vertices);
    let mut found = BTreeSet::new();
    for (g, verdict) in graphs.iter().zip(verdicts) {
        let key = g.canonical();
        let predicted = expected.contains(&key);
        match verdict {
            Ok(regular) => {
                if regular {
                    found.insert(key);
                    report.findings.push(display_name(g));
                }
                if regular != predicted {
                    let show = |b: bool| if b { "fully regular line graph" } else { "not fully regular" };
                    report.record(display_name(g), show(predicted), show(regular));
                }
            }
            Err(e) => report.record(display_name(g), "a verdict", format!("error: {e}")),
        }
    }
    for missing in expected.difference(&found) {
        if !graphs.iter().any(|g| g.canonical() == *missing) {
            report.record(format!("canonical {missing:?}"), "enumerated", "never generated");
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        // Connected graphs up to isomorphism on 1..=7 vertices (OEIS A001349).
        let per_n = [1, 1, 2, 6, 21, 112, 853];
        let graphs = connected_graphs(7);
        for (n, &count) in per_n.iter().enumerate() {
            assert_eq!(graphs.iter().filter(|g| g.vertex_count() == n + 1).count(), count, "n = {}", n + 1);
        }
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let b = SimpleGraph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(SmallGraph::from_simple(&a).canonical(), SmallGraph::from_simple(&b).canonical());
        let p = SimpleGraph::path(5);
        assert_ne!(SmallGraph::from_simple(&a).canonical(), SmallGraph::from_simple(&p).canonical());
    }

    #[test]
    fn names() {
        assert_eq!(SmallGraph::from_simple(&SimpleGraph::complete(4)).name().unwrap(), "K_4");
        assert_eq!(SmallGraph::from_simple(&SimpleGraph::complete_bipartite(3, 2)).name().unwrap(), "K_{2,3}");
        assert_eq!(SmallGraph::from_simple(&SimpleGraph::cycle(5)).name().unwrap(), "C_5");
        assert_eq!(SmallGraph::from_simple(&SimpleGraph::path(4)).name(), None);
        assert_eq!(SmallGraph::from_simple(&SimpleGraph::cycle(7)).name(), None);
    }

    #[test]
    fn classify_small() {
        let r = classify_fully_regular_line_graphs(1).unwrap();
        assert!(r.passed());
        assert_eq!(r.findings, ["K_1"]);

        let r = classify_fully_regular_line_graphs(3).unwrap();
        assert!(r.passed());
        assert_eq!(r.findings, ["K_1", "K_2", "K_{1,2}", "K_3"]);

        let r = classify_fully_regular_line_graphs(5).unwrap();
        assert!(r.passed(), "{:?}", r.mismatches);
        let mut names = r.findings.clone();
        names.sort();
        assert_eq!(
            names,
            ["C_5", "K_1", "K_2", "K_3", "K_4", "K_5", "K_{1,2}", "K_{1,3}", "K_{1,4}", "K_{2,2}", "K_{2,3}"]
        );

        assert!(classify_fully_regular_line_graphs(9).is_err());
    }
}
