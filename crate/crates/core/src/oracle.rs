//! Brute-force ground truth, independent of every closed form.
//!
//! Orderings are counted by dynamic programming over vertex (or hyperedge)
//! subsets, so the work is `2^n * n` rather than `n!`. Counts are kept in
//! `u128`, which holds `34!`, well past the largest table we allow.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::families::{FullyRegularParams, Hypergraph, SimpleGraph};
use crate::numerics::{binomial, ExactInteger};
use crate::{Error, Result};

/// Largest subset-DP table we are willing to allocate (`2^26` entries).
pub const MAX_DP_SIZE: usize = 26;

/// Independent-set enumeration works on `u64` bitmasks.
pub const MAX_BITMASK_VERTICES: usize = 64;

/// Edge-regularity extraction is polynomial apart from the matching search.
pub const MAX_EDGE_REGULARITY_EDGES: usize = 128;

fn check_dp_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if cap > MAX_DP_SIZE {
        return Err(Error::InvalidArgument(format!(
            "oracle cap {cap} is above the supported maximum {MAX_DP_SIZE}"
        )));
    }
    if size > cap {
        return Err(Error::CapExceeded { what, size: size as u128, cap });
    }
    Ok(())
}

/// Number of successive vertex orderings of `g`.
///
/// `count(S)` is the number of successive orderings of the induced subgraph
/// on `S`. The last vertex `v` of such an ordering must have a neighbor in
/// `S - v`, and `S - v` must itself be ordered successively, so
/// `count(S) = sum over such v of count(S - v)` with singletons counting 1.
pub fn count_successive_orderings(g: &SimpleGraph, cap: usize) -> Result<ExactInteger> {
    let n = g.vertex_count();
    check_dp_cap("graph", n, cap)?;
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let nbr: Vec<u32> = (0..n).map(|v| g.neighbor_mask(v) as u32).collect();
    let full = (1usize << n) - 1;
    let mut table = vec![0u128; full + 1];
    for v in 0..n {
        table[1 << v] = 1;
    }
    for set in 1..=full {
        if set & (set - 1) == 0 {
            continue;
        }
        let s = set as u32;
        let mut total = 0u128;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = s & !(1 << v);
            if nbr[v] & without != 0 {
                total += table[without as usize];
            }
        }
        table[set] = total;
    }
    Ok(BigInt::from(table[full]))
}

/// Calls `visit(size, members, closed)` for every independent set, where
/// `closed` is the set itself together with all its neighbors.
fn for_each_independent_set(g: &SimpleGraph, mut visit: impl FnMut(usize, u64, u64)) -> Result<()> {
    let n = g.vertex_count();
    if n > MAX_BITMASK_VERTICES {
        return Err(Error::CapExceeded { what: "graph", size: n as u128, cap: MAX_BITMASK_VERTICES });
    }
    let closed_nbr: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v) | (1 << v)).collect();

    fn go(
        candidates: u64,
        members: u64,
        closed: u64,
        size: usize,
        closed_nbr: &[u64],
        visit: &mut impl FnMut(usize, u64, u64),
    ) {
        visit(size, members, closed);
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // later candidates only, to visit each set once
            let next = rest & !closed_nbr[v];
            go(next, members | (1 << v), closed | closed_nbr[v], size + 1, closed_nbr, visit);
        }
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    go(all, 0, 0, 0, &closed_nbr, &mut visit);
    Ok(())
}

/// Number of independent sets of each size `0..=alpha(g)`.
pub fn independent_set_counts(g: &SimpleGraph) -> Result<Vec<ExactInteger>> {
    let mut counts: Vec<u64> = Vec::new();
    for_each_independent_set(g, |size, _, _| {
        if counts.len() <= size {
            counts.resize(size + 1, 0);
        }
        counts[size] += 1;
    })?;
    Ok(counts.into_iter().map(BigInt::from).collect())
}

/// Two independent sets of equal size whose non-neighbor counts differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrregularityWitness {
    pub first: Vec<usize>,
    pub first_outside: usize,
    pub second: Vec<usize>,
    pub second_outside: usize,
}

impl IrregularityWitness {
    /// Re-checks the witness against `g`.
    pub fn holds_for(&self, g: &SimpleGraph) -> bool {
        let outside = |set: &[usize]| -> Option<usize> {
            for (i, &u) in set.iter().enumerate() {
                if set[i + 1..].iter().any(|&v| g.is_adjacent(u, v)) {
                    return None;
                }
            }
            let hit = (0..g.vertex_count())
                .filter(|&w| set.contains(&w) || set.iter().any(|&u| g.is_adjacent(u, w)))
                .count();
            Some(g.vertex_count() - hit)
        };
        self.first.len() == self.second.len()
            && self.first_outside != self.second_outside
            && outside(&self.first) == Some(self.first_outside)
            && outside(&self.second) == Some(self.second_outside)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegularityCertificate {
    Regular(FullyRegularParams),
    Irregular(IrregularityWitness),
}

impl RegularityCertificate {
    pub fn is_fully_regular(&self) -> bool {
        matches!(self, RegularityCertificate::Regular(_))
    }

    pub fn params(&self) -> Option<&FullyRegularParams> {
        match self {
            RegularityCertificate::Regular(p) => Some(p),
            RegularityCertificate::Irregular(_) => None,
        }
    }
}

fn mask_members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Decides full regularity directly from the definition: every independent
/// set of a given size must leave the same number of vertices outside its
/// closed neighborhood.
pub fn check_fully_regular(g: &SimpleGraph) -> Result<RegularityCertificate> {
    let n = g.vertex_count();
    // per size: (outside count, representative set)
    let mut seen: Vec<(usize, u64)> = Vec::new();
    let mut witness: Option<IrregularityWitness> = None;
    for_each_independent_set(g, |size, members, closed| {
        if witness.is_some() {
            return;
        }
        let outside = n - closed.count_ones() as usize;
        if seen.len() <= size {
            seen.resize(size + 1, (usize::MAX, 0));
        }
        let (known, rep) = seen[size];
        if known == usize::MAX {
            seen[size] = (outside, members);
        } else if known != outside {
            witness = Some(IrregularityWitness {
                first: mask_members(rep),
                first_outside: known,
                second: mask_members(members),
                second_outside: outside,
            });
        }
    })?;
    if let Some(w) = witness {
        return Ok(RegularityCertificate::Irregular(w));
    }
    let a = seen.into_iter().map(|(outside, _)| BigInt::from(outside)).collect();
    let params = FullyRegularParams::new(a)
        .map_err(|e| Error::InvariantViolation(format!("regular graph produced bad parameters: {e}")))?;
    Ok(RegularityCertificate::Regular(params))
}

/// Edge-regularity data of a base graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeRegularity {
    /// Every edge is adjacent to exactly `d` other edges.
    pub d: u64,
    /// Every independent pair of edges is joined by exactly `lambda` edges;
    /// `None` when there is no independent pair.
    pub lambda: Option<u64>,
    /// Matching number.
    pub nu: u64,
}

impl EdgeRegularity {
    /// Line-graph parameters `a_i = |E| - i(d+1) + C(i,2) lambda` for
    /// `0 <= i <= nu`.
    pub fn line_graph_params(&self, edge_count: u64) -> Result<FullyRegularParams> {
        let lambda = self.lambda.unwrap_or(0);
        let a = (0..=self.nu)
            .map(|i| {
                BigInt::from(edge_count) - BigInt::from(i) * (self.d + 1) + binomial(i as i64, 2) * lambda
            })
            .collect();
        FullyRegularParams::new(a)
    }
}

/// Size of a maximum matching, by branching on the lowest unmatched vertex.
fn matching_number(g: &SimpleGraph) -> u64 {
    fn go(g: &SimpleGraph, from: usize, used: &mut [bool], size: u64, free: usize, best: &mut u64) {
        if size + (free / 2) as u64 <= *best {
            return;
        }
        let Some(u) = (from..g.vertex_count()).find(|&u| !used[u]) else {
            *best = (*best).max(size);
            return;
        };
        used[u] = true;
        for &v in g.neighbors(u) {
            if !used[v] {
                used[v] = true;
                go(g, u + 1, used, size + 1, free - 2, best);
                used[v] = false;
            }
        }
        // leave u unmatched
        go(g, u + 1, used, size, free - 1, best);
        used[u] = false;
    }
    let mut used: Vec<bool> = (0..g.vertex_count()).map(|v| g.degree(v) == 0).collect();
    let free = used.iter().filter(|&&u| !u).count();
    let mut best = 0;
    go(g, 0, &mut used, 0, free, &mut best);
    best
}

/// Returns `(d, lambda, nu)` when every edge of `g` meets the same number
/// of other edges and every independent edge pair is joined by the same
/// number of edges; `None` otherwise or when `g` has no edges.
pub fn extract_edge_regularity(g: &SimpleGraph) -> Result<Option<EdgeRegularity>> {
    let edges = g.edges();
    if edges.len() > MAX_EDGE_REGULARITY_EDGES {
        return Err(Error::CapExceeded {
            what: "edge set",
            size: edges.len() as u128,
            cap: MAX_EDGE_REGULARITY_EDGES,
        });
    }
    let Some(&(u0, v0)) = edges.first() else {
        return Ok(None);
    };
    let d = g.degree(u0) + g.degree(v0) - 2;
    if edges.iter().any(|&(u, v)| g.degree(u) + g.degree(v) - 2 != d) {
        return Ok(None);
    }
    let touches = |(a, b): (usize, usize), (u, v): (usize, usize)| a == u || a == v || b == u || b == v;
    let mut lambda = None;
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if touches(e, f) {
                continue;
            }
            let joining = edges.iter().filter(|&&x| touches(x, e) && touches(x, f)).count() as u64;
            match lambda {
                None => lambda = Some(joining),
                Some(l) if l != joining => return Ok(None),
                _ => {}
            }
        }
    }
    Ok(Some(EdgeRegularity { d: d as u64, lambda, nu: matching_number(g) }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShellingMode {
    /// For every earlier `E_i` there is an earlier `E_k` with
    /// `E_i ∩ E_j ⊆ E_k ∩ E_j` and `|E_k ∩ E_j| = d - 1`.
    Shelling,
    /// Only: some earlier hyperedge meets `E_j` in `d - 1` vertices.
    Weak,
}

/// Number of hyperedge orderings that are shellings (or weak shellings).
///
/// Whether `E_j` may follow a prefix depends only on the set of earlier
/// hyperedges, so the count is a DP over subsets of hyperedges.
pub fn count_hypergraph_shellings(h: &Hypergraph, mode: ShellingMode, cap: usize) -> Result<ExactInteger> {
    let m = h.len();
    check_dp_cap("hypergraph", m, cap)?;
    if m == 0 {
        return Ok(BigInt::from(1));
    }
    let d = h.uniformity();
    let edges = h.hyperedges();
    let meet = |i: usize, j: usize| -> Vec<usize> {
        edges[i].iter().copied().filter(|v| edges[j].binary_search(v).is_ok()).collect()
    };

    // ridge[j]: earlier hyperedges that meet E_j in exactly d - 1 vertices.
    // rules[j]: (group, cover) pairs; if the prefix contains a member of
    // `group` it must also contain a member of `cover`.
    let mut ridge = vec![0u32; m];
    let mut rules: Vec<Vec<(u32, u32)>> = vec![Vec::new(); m];
    for j in 0..m {
        let inter: Vec<Vec<usize>> = (0..m).map(|i| if i == j { Vec::new() } else { meet(i, j) }).collect();
        for (k, meet_k) in inter.iter().enumerate() {
            if k != j && meet_k.len() + 1 == d {
                ridge[j] |= 1 << k;
            }
        }
        if mode == ShellingMode::Shelling {
            for i in (0..m).filter(|&i| i != j) {
                let cover = (0..m)
                    .filter(|&k| ridge[j] >> k & 1 == 1 && inter[i].iter().all(|v| inter[k].contains(v)))
                    .fold(0u32, |acc, k| acc | (1 << k));
                match rules[j].iter_mut().find(|(_, c)| *c == cover) {
                    Some((group, _)) => *group |= 1 << i,
                    None => rules[j].push((1 << i, cover)),
                }
            }
        }
    }

    let full = (1usize << m) - 1;
    let mut table = vec![0u128; full + 1];
    table[0] = 1;
    for set in 0..full {
        let ways = table[set];
        if ways == 0 {
            continue;
        }
        let s = set as u32;
        let mut rest = !s & full as u32;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let allowed = s == 0
                || (s & ridge[j] != 0 && rules[j].iter().all(|&(group, cover)| s & group == 0 || s & cover != 0));
            if allowed {
                table[set | 1 << j] += ways;
            }
        }
    }
    Ok(BigInt::from(table[full]))
}
