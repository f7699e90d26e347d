//! Complete multipartite uniform hypergraph families and the explicit graphs
//! the oracles run on.
//!
//! A family is a list of parts `(d_j, s_j)`: a vertex class of size `s_j`
//! that every hyperedge meets in exactly `d_j` vertices. The line graph of
//! such a hypergraph is fully regular with parameters
//! `a_i = prod_j C(s_j - i d_j, d_j)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::numerics::{binomial, ExactInteger};
use crate::{Error, Result};

/// One vertex class of a family: hyperedges meet `size` vertices in exactly
/// `degree` of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Part {
    pub degree: u32,
    pub size: u32,
}

/// A complete multipartite uniform hypergraph family, parts kept sorted by
/// `(degree, size)` so equal families compare and print identically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilySpec {
    parts: Vec<Part>,
}

impl FamilySpec {
    pub fn new(mut parts: Vec<Part>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidArgument("a family needs at least one part".into()));
        }
        if let Some(p) = parts.iter().find(|p| p.degree == 0) {
            return Err(Error::InvalidArgument(format!(
                "part degrees must be positive, got {}:{}",
                p.degree, p.size
            )));
        }
        parts.sort_unstable();
        Ok(FamilySpec { parts })
    }

    /// `K_n`, the complete graph.
    pub fn complete_graph(n: u32) -> Self {
        Self::from_pairs(&[(2, n)])
    }

    /// `K_{m,n}`.
    pub fn complete_bipartite(m: u32, n: u32) -> Self {
        Self::from_pairs(&[(1, m), (1, n)])
    }

    /// The complete 3-partite 3-uniform hypergraph `K_{m,n,p}`.
    pub fn complete_tripartite(m: u32, n: u32, p: u32) -> Self {
        Self::from_pairs(&[(1, m), (1, n), (1, p)])
    }

    /// The complete 3-uniform hypergraph `K_n^(3)`.
    pub fn complete_triple(n: u32) -> Self {
        Self::from_pairs(&[(3, n)])
    }

    /// `K_{m,n}^(1,2)`: one vertex from the `m`-class, two from the `n`-class.
    pub fn mixed_triple(m: u32, n: u32) -> Self {
        Self::from_pairs(&[(1, m), (2, n)])
    }

    fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        let parts = pairs.iter().map(|&(degree, size)| Part { degree, size }).collect();
        Self::new(parts).expect("static family shapes are valid")
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    /// Hyperedge size `d = sum_j d_j`.
    pub fn uniformity(&self) -> u32 {
        self.parts.iter().map(|p| p.degree).sum()
    }

    pub fn vertex_count(&self) -> u64 {
        self.parts.iter().map(|p| u64::from(p.size)).sum()
    }

    /// `prod_j C(s_j, d_j)`.
    pub fn hyperedge_count(&self) -> ExactInteger {
        self.parts
            .iter()
            .map(|p| binomial(i64::from(p.size), u64::from(p.degree)))
            .product()
    }

    /// Sizes of the parts, in canonical order, when every part has the given
    /// list of degrees (also in canonical order).
    pub fn sizes_if_shape(&self, degrees: &[u32]) -> Option<Vec<u32>> {
        if self.parts.len() != degrees.len() {
            return None;
        }
        self.parts
            .iter()
            .zip(degrees)
            .map(|(p, &d)| (p.degree == d).then_some(p.size))
            .collect()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("parts=")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", p.degree, p.size)?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `parts=d1:s1,d2:s2,...`.
    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s
            .trim()
            .strip_prefix("parts=")
            .ok_or_else(|| fail("expected the form parts=d1:s1,d2:s2,..."))?;
        let mut parts = Vec::new();
        for item in body.split(',') {
            let (d, n) = item
                .trim()
                .split_once(':')
                .ok_or_else(|| fail("each part must be degree:size"))?;
            let degree = d.trim().parse::<u32>().map_err(|_| fail("bad part degree"))?;
            let size = n.trim().parse::<u32>().map_err(|_| fail("bad class size"))?;
            parts.push(Part { degree, size });
        }
        FamilySpec::new(parts).map_err(|e| match e {
            Error::InvalidArgument(reason) => fail(&reason),
            other => other,
        })
    }
}

/// The parameter sequence `a_0 > a_1 > ... > a_alpha = 0` of a fully
/// regular graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FullyRegularParams {
    a: Vec<ExactInteger>,
}

impl FullyRegularParams {
    /// Validates positivity before `alpha`, `a_alpha = 0` and strict decrease.
    pub fn new(a: Vec<ExactInteger>) -> Result<Self> {
        let Some(last) = a.last() else {
            return Err(Error::InvalidArgument("parameter sequence is empty".into()));
        };
        if !last.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "last parameter must be 0, got {last}"
            )));
        }
        if let Some(bad) = a[..a.len() - 1].iter().find(|v| !v.is_positive()) {
            return Err(Error::InvalidArgument(format!(
                "parameters before the last must be positive, got {bad}"
            )));
        }
        if a.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::InvalidArgument("parameters must strictly decrease".into()));
        }
        Ok(FullyRegularParams { a })
    }

    /// The parameters of the empty graph: `a = (0)`.
    pub fn degenerate() -> Self {
        FullyRegularParams { a: vec![BigInt::zero()] }
    }

    pub fn from_u64s(a: &[u64]) -> Result<Self> {
        Self::new(a.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn values(&self) -> &[ExactInteger] {
        &self.a
    }

    /// Independence number of the described graph.
    pub fn alpha(&self) -> usize {
        self.a.len() - 1
    }

    /// Vertex count of the described graph.
    pub fn a0(&self) -> &ExactInteger {
        &self.a[0]
    }

    /// Number of independent sets of each size `0..=alpha`, which is
    /// `a_0 a_1 ... a_{i-1} / i!`.
    pub fn independent_set_counts(&self) -> Vec<ExactInteger> {
        let mut out = Vec::with_capacity(self.a.len());
        let mut count = BigInt::one();
        out.push(count.clone());
        for i in 1..self.a.len() {
            count = count * &self.a[i - 1] / BigInt::from(i);
            out.push(count.clone());
        }
        out
    }
}

impl fmt::Display for FullyRegularParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.a.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parameters of the line graph of the family's hypergraph.
///
/// A family with some `s_j < d_j` has no hyperedges; it yields the
/// degenerate sequence `(0)`.
pub fn derive_params(spec: &FamilySpec) -> FullyRegularParams {
    let alpha = spec
        .parts()
        .iter()
        .map(|p| p.size / p.degree)
        .min()
        .expect("family has a part");
    if alpha == 0 {
        return FullyRegularParams::degenerate();
    }
    let a = (0..=i64::from(alpha))
        .map(|i| {
            spec.parts()
                .iter()
                .map(|p| {
                    let d = i64::from(p.degree);
                    binomial(i64::from(p.size) - i * d, d as u64)
                })
                .product()
        })
        .collect();
    FullyRegularParams::new(a).expect("family parameters are strictly decreasing")
}

/// `b_i = mn + np + mp - i(m + n + p - i)`.
pub fn b_value(m: i64, n: i64, p: i64, i: i64) -> i64 {
    m * n + n * p + m * p - i * (m + n + p - i)
}

/// `b_1, ..., b_{m+n+p-1}` for the tripartite family; equal to
/// `(a_0 - a_i) / i` with `a_i = (m-i)(n-i)(p-i)` for every `i`.
pub fn b_sequence(m: u32, n: u32, p: u32) -> Vec<ExactInteger> {
    let (m, n, p) = (i64::from(m), i64::from(n), i64::from(p));
    (1..m + n + p).map(|i| BigInt::from(b_value(m, n, p, i))).collect()
}

/// An explicit uniform hypergraph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    uniformity: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Checks that every hyperedge has `uniformity` distinct in-range
    /// vertices and that no hyperedge repeats. Hyperedges are stored sorted.
    pub fn new(vertex_count: usize, uniformity: usize, hyperedges: Vec<Vec<usize>>) -> Result<Self> {
        if uniformity == 0 {
            return Err(Error::InvalidArgument("uniformity must be positive".into()));
        }
        let mut seen = BTreeSet::new();
        let mut sorted = Vec::with_capacity(hyperedges.len());
        for mut e in hyperedges {
            e.sort_unstable();
            e.dedup();
            if e.len() != uniformity {
                return Err(Error::InvalidArgument(format!(
                    "hyperedge {e:?} does not have {uniformity} distinct vertices"
                )));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidArgument(format!(
                    "vertex {v} out of range for {vertex_count} vertices"
                )));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::InvalidArgument(format!("hyperedge {e:?} repeated")));
            }
            sorted.push(e);
        }
        Ok(Hypergraph { vertex_count, uniformity, hyperedges: sorted })
    }

    /// Infers the uniformity from the first hyperedge.
    pub fn from_edge_lists(vertex_count: usize, hyperedges: Vec<Vec<usize>>) -> Result<Self> {
        let d = hyperedges.first().map(|e| e.len()).ok_or_else(|| {
            Error::InvalidArgument("cannot infer uniformity without hyperedges".into())
        })?;
        Self::new(vertex_count, d, hyperedges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    pub fn len(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperedges.is_empty()
    }
}

/// Calls `f` with every `k`-subset of `lo..hi` in lexicographic order.
fn for_each_combination(lo: usize, hi: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(next: usize, hi: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        if next + need > hi {
            return;
        }
        for v in next..=hi - need {
            cur.push(v);
            go(v + 1, hi, k, cur, f);
            cur.pop();
        }
    }
    go(lo, hi, k, &mut Vec::with_capacity(k), f);
}

/// All hyperedges of the family. Class `j` occupies the next `s_j`
/// consecutive vertex indices, in canonical part order.
pub fn build_hypergraph(spec: &FamilySpec, cap: usize) -> Result<Hypergraph> {
    let count = spec.hyperedge_count();
    if count > BigInt::from(cap) {
        return Err(Error::CapExceeded {
            what: "hypergraph",
            size: u128::try_from(&count).unwrap_or(u128::MAX),
            cap,
        });
    }
    let mut edges: Vec<Vec<usize>> = vec![Vec::new()];
    let mut offset = 0usize;
    for part in spec.parts() {
        let size = part.size as usize;
        let mut choices = Vec::new();
        for_each_combination(offset, offset + size, part.degree as usize, &mut |c| {
            choices.push(c.to_vec())
        });
        edges = edges
            .iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut e = prefix.clone();
                    e.extend_from_slice(c);
                    e
                })
            })
            .collect();
        offset += size;
    }
    Hypergraph::new(offset, spec.uniformity() as usize, edges)
}

/// A simple undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn empty(vertex_count: usize) -> Self {
        SimpleGraph { adjacency: vec![Vec::new(); vertex_count] }
    }

    /// Rejects loops and out-of-range endpoints; repeated edges collapse.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(vertex_count);
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            g.adjacency[u].push(v);
            g.adjacency[v].push(u);
        }
        for nbrs in &mut g.adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_edges(n, &edges).expect("valid")
    }

    /// `K_{m,n}` with classes `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let edges: Vec<_> = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))).collect();
        Self::from_edges(m + n, &edges).expect("valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|u| (u, (u + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|u| (u - 1, u)).collect();
        Self::from_edges(n, &edges).expect("valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Neighbor bitmask of `v`; requires `vertex_count <= 64`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        debug_assert!(self.vertex_count() <= 64);
        self.adjacency[v].iter().fold(0u64, |m, &u| m | (1 << u))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    /// The graph's edges as a 2-uniform hypergraph.
    pub fn as_hypergraph(&self) -> Hypergraph {
        let edges = self.edges().into_iter().map(|(u, v)| vec![u, v]).collect();
        Hypergraph::new(self.vertex_count(), 2, edges).expect("graph edges form a 2-uniform hypergraph")
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "graph on {} vertices [{}]", self.vertex_count(), edges.join(" "))
    }
}

/// One vertex per hyperedge; two are adjacent iff the hyperedges intersect.
pub fn line_graph(h: &Hypergraph, cap: usize) -> Result<SimpleGraph> {
    if h.len() > cap {
        return Err(Error::CapExceeded { what: "line graph", size: h.len() as u128, cap });
    }
    let sets: Vec<BTreeSet<usize>> = h.hyperedges().iter().map(|e| e.iter().copied().collect()).collect();
    let mut edges = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if !sets[i].is_disjoint(&sets[j]) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::from_edges(sets.len(), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_ORACLE_CAP;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn parse_and_print_canonically() {
        let spec: FamilySpec = "parts=1:3,1:2".parse().unwrap();
        assert_eq!(spec.to_string(), "parts=1:2,1:3");
        assert_eq!(spec, FamilySpec::complete_bipartite(2, 3));
        let spec: FamilySpec = " parts=2:3 , 1:4".parse().unwrap();
        assert_eq!(spec.to_string(), "parts=1:4,2:3");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "parts=", "1:2", "parts=1", "parts=0:3", "parts=a:3", "parts=1:-1", "parts=1:2;1:3"] {
            assert!(matches!(bad.parse::<FamilySpec>(), Err(Error::Parse { .. })), "{bad}");
        }
    }

    #[test]
    fn derive_params_examples() {
        assert_eq!(derive_params(&FamilySpec::complete_bipartite(2, 3)).values(), ints(&[6, 2, 0]));
        assert_eq!(derive_params(&FamilySpec::complete_graph(4)).values(), ints(&[6, 1, 0]));
        assert_eq!(derive_params(&FamilySpec::complete_tripartite(2, 2, 2)).values(), ints(&[8, 1, 0]));
        assert_eq!(derive_params(&FamilySpec::complete_triple(5)).values(), ints(&[10, 0]));
        assert_eq!(derive_params(&FamilySpec::complete_bipartite(3, 3)).values(), ints(&[9, 4, 1, 0]));
    }

    #[test]
    fn derive_params_degenerate() {
        for spec in [FamilySpec::complete_graph(1), FamilySpec::complete_bipartite(0, 4), FamilySpec::mixed_triple(3, 1)] {
            let params = derive_params(&spec);
            assert_eq!(params, FullyRegularParams::degenerate());
            assert_eq!(params.alpha(), 0);
        }
    }

    #[test]
    fn params_validation() {
        assert!(FullyRegularParams::from_u64s(&[6, 2, 0]).is_ok());
        assert!(FullyRegularParams::from_u64s(&[]).is_err());
        assert!(FullyRegularParams::from_u64s(&[6, 2]).is_err());
        assert!(FullyRegularParams::from_u64s(&[6, 6, 0]).is_err());
        assert!(FullyRegularParams::from_u64s(&[6, 0, 0]).is_err());
    }

    #[test]
    fn b_sequence_examples() {
        assert_eq!(b_sequence(2, 2, 2), ints(&[7, 4, 3, 4, 7]));
        assert_eq!(b_sequence(8, 2, 2)[5], BigInt::zero());
    }

    #[test]
    fn build_hypergraph_examples() {
        let h = build_hypergraph(&FamilySpec::complete_bipartite(2, 2), DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(h.hyperedges(), &[vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);
        assert_eq!(build_hypergraph(&FamilySpec::complete_triple(5), DEFAULT_ORACLE_CAP).unwrap().len(), 10);
        let h = build_hypergraph(&FamilySpec::mixed_triple(2, 3), DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(h.len(), 6);
        assert_eq!(h.uniformity(), 3);
        assert!(h.hyperedges().iter().all(|e| e.iter().filter(|&&v| v < 2).count() == 1));
        let err = build_hypergraph(&FamilySpec::complete_graph(7), DEFAULT_ORACLE_CAP).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { size: 21, cap: 20, .. }));
    }

    #[test]
    fn line_graph_examples() {
        let tri = SimpleGraph::complete(3).as_hypergraph();
        assert_eq!(line_graph(&tri, 20).unwrap(), SimpleGraph::complete(3));

        let sq = build_hypergraph(&FamilySpec::complete_bipartite(2, 2), 20).unwrap();
        let l = line_graph(&sq, 20).unwrap();
        assert_eq!(l.edge_count(), 4);
        assert!((0..4).all(|v| l.degree(v) == 2));
        assert!(l.is_connected());

        let c5 = SimpleGraph::cycle(5).as_hypergraph();
        let l = line_graph(&c5, 20).unwrap();
        assert_eq!(l.edge_count(), 5);
        assert!((0..5).all(|v| l.degree(v) == 2) && l.is_connected());

        assert!(matches!(line_graph(&c5, 4), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn hypergraph_validation() {
        assert!(Hypergraph::new(4, 2, vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(Hypergraph::new(4, 3, vec![vec![0, 1]]).is_err());
        assert!(Hypergraph::new(2, 2, vec![vec![0, 2]]).is_err());
        assert!(Hypergraph::new(3, 2, vec![vec![1, 1]]).is_err());
        assert!(Hypergraph::new(3, 0, vec![]).is_err());
    }

    fn small_family() -> impl Strategy<Value = FamilySpec> {
        prop::collection::vec((1u32..4, 0u32..10), 1..4).prop_map(|pairs| {
            FamilySpec::new(pairs.into_iter().map(|(degree, size)| Part { degree, size }).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn a0_is_hyperedge_count(spec in small_family()) {
            let params = derive_params(&spec);
            let count = spec.hyperedge_count();
            if params.alpha() == 0 {
                prop_assert!(count.is_zero());
            } else {
                prop_assert_eq!(params.a0(), &count);
            }
            if count <= BigInt::from(200) {
                let h = build_hypergraph(&spec, 200).unwrap();
                prop_assert_eq!(BigInt::from(h.len()), count);
            }
        }

        #[test]
        fn family_roundtrip(spec in small_family()) {
            prop_assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        }

        #[test]
        fn tripartite_b_relation(m in 1u32..25, n in 1u32..25, p in 1u32..25) {
            let params = derive_params(&FamilySpec::complete_tripartite(m, n, p));
            let b = b_sequence(m, n, p);
            let a = params.values();
            for i in 1..=params.alpha() {
                prop_assert_eq!(&b[i - 1] * BigInt::from(i) + &a[i], a[0].clone());
            }
            let s = (m + n + p) as usize;
            for i in 1..s {
                prop_assert_eq!(&b[i - 1], &b[s - i - 1]);
            }
        }
    }
}
