//! Finite simple graphs and their chromatic symmetric functions.
//!
//! `X_G` is computed two independent ways: as a signed sum over edge
//! subsets in the power-sum basis, and as a sum over stable set partitions
//! in the monomial basis. A brute-force colouring count serves as the
//! specialization oracle.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{factorial, Partition};
use crate::symfunc::{to_rational, Basis, Rational, SymFunc};

/// A finite simple graph on vertices `1..=n`.
///
/// Edges are stored as `(a, b)` with `a < b`, sorted and without repeats.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Wire form: `{"n": 4, "edges": [[1,2],[2,3]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Self> {
        Graph::new(json.n, json.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

/// Enumeration limits for the two expansions of `X_G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest edge count for the `2^|E|` edge-subset sum.
    pub max_edges: usize,
    /// Largest vertex count for the stable-partition sum.
    pub max_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_edges: 24,
            max_vertices: 12,
        }
    }
}

impl Graph {
    /// Validates a graph on `1..=n`. Loops, repeated edges and out-of-range
    /// endpoints are rejected, as is `n = 0`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidGraph(format!(
                    "edge {a}-{b} has an endpoint outside 1..={n}"
                )));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "edge {}-{} is repeated",
                w[0].0, w[0].1
            )));
        }
        Ok(Graph { n, edges: out })
    }

    /// `K_n`, `n ≥ 1`.
    pub fn complete(n: usize) -> Result<Self> {
        let edges = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b)));
        Graph::new(n, edges)
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        Graph::new(n, [])
    }

    /// `self ∪ other`, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        Graph {
            n: self.n + other.n,
            edges,
        }
    }

    /// `K_{α_1} ∪ ⋯ ∪ K_{α_ℓ}` for positive sizes.
    pub fn union_of_complete(sizes: &[usize]) -> Result<Self> {
        let mut parts = sizes.iter().map(|&a| Graph::complete(a));
        let first = parts
            .next()
            .ok_or_else(|| Error::InvalidGraph("empty union".into()))??;
        parts.try_fold(first, |acc, g| Ok(acc.disjoint_union(&g?)))
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Neighbour sets as bitmasks over 0-based vertices.
    fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
        }
        adj
    }

    /// `λ(S)`: component orders of the spanning subgraph `(V, S)`.
    pub fn components_partition(&self, subset: &[(usize, usize)]) -> Result<Partition> {
        let mut uf = UnionFind::new(self.n);
        for &(a, b) in subset {
            if !self.has_edge(a, b) {
                return Err(Error::NotAnEdge(a, b));
            }
            uf.union(a - 1, b - 1);
        }
        Ok(Partition::from_unsorted(uf.component_sizes()))
    }

    /// `X_G = Σ_{S ⊆ E} (-1)^{|S|} p_{λ(S)}`.
    pub fn chromatic_sym_edges(&self, caps: &Caps) -> Result<SymFunc> {
        let m = self.edges.len();
        if m > caps.max_edges || m >= 64 {
            return Err(Error::EdgeCapExceeded {
                edges: m,
                cap: caps.max_edges,
            });
        }
        let total: u64 = 1 << m;
        let chunk = (total / 64).max(1 << 10);
        let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
        let tally = starts
            .into_par_iter()
            .map(|start| {
                let mut local: HashMap<Vec<usize>, i64> = HashMap::new();
                let mut uf = UnionFind::new(self.n);
                for mask in start..(start + chunk).min(total) {
                    uf.reset();
                    for (k, &(a, b)) in self.edges.iter().enumerate() {
                        if mask >> k & 1 == 1 {
                            uf.union(a - 1, b - 1);
                        }
                    }
                    let mut sizes = uf.component_sizes();
                    sizes.sort_unstable_by(|a, b| b.cmp(a));
                    let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
                    *local.entry(sizes).or_insert(0) += sign;
                }
                local
            })
            .reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            });
        Ok(SymFunc::from_p_terms(tally.into_iter().map(|(parts, c)| {
            (
                Partition::new(parts).expect("sorted sizes"),
                Rational::from_integer(BigInt::from(c)),
            )
        })))
    }

    /// `X_G = Σ_π (π_1! π_2! ⋯) m_{μ(π)}` over stable set partitions `π`.
    pub fn chromatic_sym_stable(&self, caps: &Caps) -> Result<SymFunc> {
        Ok(SymFunc::from_basis_terms(Basis::M, self.stable_monomial_terms(caps)?))
    }

    /// Monomial coefficients of `X_G` from the stable-partition sum.
    pub fn stable_monomial_terms(&self, caps: &Caps) -> Result<Vec<(Partition, Rational)>> {
        if self.n > caps.max_vertices || self.n > 64 {
            return Err(Error::VertexCapExceeded {
                vertices: self.n,
                cap: caps.max_vertices,
            });
        }
        let mut counts: HashMap<Partition, u64> = HashMap::new();
        let adj = self.adjacency();
        let mut blocks: Vec<u64> = Vec::new();
        stable_partitions(&adj, 0, &mut blocks, &mut |blocks| {
            let mu = Partition::from_unsorted(blocks.iter().map(|b| b.count_ones() as usize).collect());
            *counts.entry(mu).or_insert(0) += 1;
        });
        let mut terms: Vec<(Partition, Rational)> = counts
            .into_iter()
            .map(|(mu, c)| {
                let weight = to_rational(mu.multiplicity_factorials()) * Rational::from_integer(BigInt::from(c));
                (mu, weight)
            })
            .collect();
        terms.sort();
        Ok(terms)
    }

    /// `X_G` by whichever expansion is cheaper within the caps: `2^|E|`
    /// edge subsets against roughly `n!` stable-partition candidates.
    pub fn chromatic_sym(&self, caps: &Caps) -> Result<SymFunc> {
        let edges_ok = self.edges.len() <= caps.max_edges;
        let stable_ok = self.n <= caps.max_vertices;
        let prefer_stable = stable_ok
            && (!edges_ok || bell_number(self.n) < (1u128 << self.edges.len().min(127)));
        if prefer_stable {
            self.chromatic_sym_stable(caps)
        } else {
            self.chromatic_sym_edges(caps)
        }
    }

    /// Number of maps `V → {1..k}` giving adjacent vertices different colours.
    pub fn count_proper_colourings(&self, k: usize) -> u64 {
        fn go(g: &Graph, v: usize, k: usize, colour: &mut Vec<usize>) -> u64 {
            if v == g.n {
                return 1;
            }
            let mut total = 0;
            for c in 0..k {
                let clash = g
                    .edges
                    .iter()
                    .any(|&(a, b)| b == v + 1 && a <= v && colour[a - 1] == c);
                if !clash {
                    colour[v] = c;
                    total += go(g, v + 1, k, colour);
                }
            }
            total
        }
        go(self, 0, k, &mut vec![0; self.n])
    }
}

fn bell_number(n: usize) -> u128 {
    // Bell triangle.
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().expect("nonempty")];
        for x in &row {
            let last = *next.last().expect("nonempty");
            next.push(last.saturating_add(*x));
        }
        row = next;
    }
    row[0]
}

/// Restricted-growth enumeration of set partitions into independent sets.
fn stable_partitions(adj: &[u64], v: usize, blocks: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64])) {
    if v == adj.len() {
        visit(blocks);
        return;
    }
    for i in 0..blocks.len() {
        if adj[v] & blocks[i] == 0 {
            blocks[i] |= 1 << v;
            stable_partitions(adj, v + 1, blocks, visit);
            blocks[i] &= !(1 << v);
        }
    }
    blocks.push(1 << v);
    stable_partitions(adj, v + 1, blocks, visit);
    blocks.pop();
}

impl fmt::Display for Graph {
    /// `G(4; 1-2, 2-3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({};", self.n)?;
        for (i, (a, b)) in self.edges.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{a}-{b}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Disjoint-set forest with union by size and path halving.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
        self.size.fill(1);
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Sizes of the components, in order of their root index.
    pub fn component_sizes(&mut self) -> Vec<usize> {
        (0..self.parent.len())
            .filter(|&i| self.parent[i] == i)
            .map(|i| self.size[i])
            .collect()
    }
}

/// `n!` as a rational, handy for scaling `e_n`.
pub fn factorial_rational(n: usize) -> Rational {
    to_rational(factorial(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn path3() -> Graph {
        Graph::new(3, [(1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn constructors() {
        assert_eq!(Graph::complete(1).unwrap().num_edges(), 0);
        assert_eq!(Graph::complete(2).unwrap().num_edges(), 1);
        assert_eq!(Graph::complete(4).unwrap().num_edges(), 6);
        assert!(Graph::complete(0).is_err());
        let k1 = Graph::complete(1).unwrap();
        let u = k1.disjoint_union(&k1);
        assert_eq!((u.num_vertices(), u.num_edges()), (2, 0));
        let u = Graph::complete(2).unwrap().disjoint_union(&k1);
        assert_eq!((u.num_vertices(), u.num_edges()), (3, 1));
        let u = Graph::union_of_complete(&[2, 3]).unwrap();
        assert_eq!((u.num_vertices(), u.num_edges()), (5, 4));
        assert!(u.has_edge(3, 5));
    }

    #[test]
    fn rejects_non_simple() {
        assert!(Graph::new(2, [(1, 1)]).is_err());
        assert!(Graph::new(2, [(1, 2), (2, 1)]).is_err());
        assert!(Graph::new(2, [(1, 3)]).is_err());
        assert!(Graph::new(0, []).is_err());
    }

    #[test]
    fn components() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.components_partition(&[]).unwrap(), part("[1,1,1]"));
        assert_eq!(k3.components_partition(&[(1, 2)]).unwrap(), part("[2,1]"));
        assert_eq!(
            k3.components_partition(&[(1, 2), (1, 3), (2, 3)]).unwrap(),
            part("[3]")
        );
        assert_eq!(path3().components_partition(&[(1, 3)]), Err(Error::NotAnEdge(1, 3)));
    }

    #[test]
    fn edge_expansion() {
        let caps = Caps::default();
        let x = Graph::complete(1).unwrap().chromatic_sym_edges(&caps).unwrap();
        assert_eq!(x, SymFunc::power_sum(part("[1]")));
        let x = Graph::complete(2).unwrap().chromatic_sym_edges(&caps).unwrap();
        assert_eq!(x, SymFunc::from_p_terms([(part("[1,1]"), q(1)), (part("[2]"), q(-1))]));
        let x = path3().chromatic_sym_edges(&caps).unwrap();
        assert_eq!(
            x,
            SymFunc::from_p_terms([
                (part("[1,1,1]"), q(1)),
                (part("[2,1]"), q(-2)),
                (part("[3]"), q(1))
            ])
        );
        let tight = Caps {
            max_edges: 2,
            max_vertices: 12,
        };
        assert_eq!(
            Graph::complete(3).unwrap().chromatic_sym_edges(&tight),
            Err(Error::EdgeCapExceeded { edges: 3, cap: 2 })
        );
    }

    #[test]
    fn stable_expansion() {
        let caps = Caps::default();
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.stable_monomial_terms(&caps).unwrap(), vec![(part("[1,1]"), q(2))]);
        let mut terms = Graph::edgeless(2).unwrap().stable_monomial_terms(&caps).unwrap();
        terms.sort();
        assert_eq!(terms, vec![(part("[2]"), q(1)), (part("[1,1]"), q(2))]);
        for n in 1..=6 {
            let kn = Graph::complete(n).unwrap();
            let x = kn.chromatic_sym_stable(&caps).unwrap();
            assert_eq!(
                x.to_basis(Basis::M),
                [(Partition::column(n), factorial_rational(n))].into_iter().collect()
            );
        }
        let tight = Caps {
            max_edges: 24,
            max_vertices: 3,
        };
        assert_eq!(
            Graph::edgeless(4).unwrap().chromatic_sym_stable(&tight),
            Err(Error::VertexCapExceeded { vertices: 4, cap: 3 })
        );
    }

    #[test]
    fn routes_agree_on_small_graphs() {
        let caps = Caps::default();
        for g in [path3(), Graph::complete(4).unwrap(), Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap()] {
            assert_eq!(g.chromatic_sym_edges(&caps).unwrap(), g.chromatic_sym_stable(&caps).unwrap(), "{g}");
            assert_eq!(g.chromatic_sym(&caps).unwrap(), g.chromatic_sym_edges(&caps).unwrap());
        }
    }

    #[test]
    fn colourings() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.count_proper_colourings(3), 6);
        assert_eq!(k3.count_proper_colourings(0), 0);
        assert_eq!(Graph::edgeless(3).unwrap().count_proper_colourings(4), 64);
        assert_eq!(path3().count_proper_colourings(3), 12);
    }

    #[test]
    fn json_and_text() {
        let g: Graph = serde_json::from_str(r#"{"n": 4, "edges": [[1,2],[2,3]]}"#).unwrap();
        assert_eq!(g.to_string(), "G(4; 1-2, 2-3)");
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"n":4,"edges":[[1,2],[2,3]]}"#);
        assert!(serde_json::from_str::<Graph>(r#"{"n": 2, "edges": [[1,1]]}"#).is_err());
        assert_eq!(Graph::edgeless(3).unwrap().to_string(), "G(3;)");
    }

    #[test]
    fn bell() {
        let expected = [1u128, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, b) in expected.iter().enumerate() {
            assert_eq!(bell_number(n), *b);
        }
    }
}
