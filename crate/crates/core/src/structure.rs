//! Structural predicates on the source graph: cut vertices and cut edges,
//! bridge chains, vertex connectivity, and recognition of the special
//! graphs the connectivity criteria single out.

use serde::Serialize;

use crate::canon::are_isomorphic;
use crate::graph::{BitIter, Graph};
use crate::special::{self, ExceptionSpider};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralProfile {
    pub connected: bool,
    pub bipartite: bool,
    pub is_cycle: bool,
    pub is_tree: bool,
    pub is_path: bool,
    pub is_theta0: bool,
    pub exception_spider: Option<ExceptionSpider>,
    /// Longest `k` such that the graph contains a `k`-bridge; 1 when the
    /// only bridges are lone cut vertices, 0 when there is no cut vertex.
    pub max_bridge_length: usize,
    pub cut_vertices: Vec<usize>,
}

pub fn classify(g: &Graph) -> StructuralProfile {
    let (cut_vertices, _) = articulation(g);
    StructuralProfile {
        connected: g.is_connected(),
        bipartite: g.is_bipartite(),
        is_cycle: is_cycle(g),
        is_tree: is_tree(g),
        is_path: is_path(g),
        is_theta0: is_theta0(g),
        exception_spider: exception_spider(g),
        max_bridge_length: max_bridge_length(g),
        cut_vertices,
    }
}

/// Cut vertices (sorted) and cut edges (`u < v`, sorted), by DFS lowlink.
pub fn articulation(g: &Graph) -> (Vec<usize>, Vec<(usize, usize)>) {
    struct Dfs<'a> {
        g: &'a Graph,
        order: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        cut_vertex: Vec<bool>,
        cut_edges: Vec<(usize, usize)>,
    }

    impl Dfs<'_> {
        fn visit(&mut self, v: usize, parent: Option<usize>) {
            self.timer += 1;
            self.order[v] = self.timer;
            self.low[v] = self.timer;
            let mut children = 0;
            for w in self.g.neighbors(v) {
                if Some(w) == parent {
                    continue;
                }
                if self.order[w] == 0 {
                    children += 1;
                    self.visit(w, Some(v));
                    self.low[v] = self.low[v].min(self.low[w]);
                    if parent.is_some() && self.low[w] >= self.order[v] {
                        self.cut_vertex[v] = true;
                    }
                    if self.low[w] > self.order[v] {
                        self.cut_edges.push((v.min(w), v.max(w)));
                    }
                } else {
                    self.low[v] = self.low[v].min(self.order[w]);
                }
            }
            if parent.is_none() && children > 1 {
                self.cut_vertex[v] = true;
            }
        }
    }

    let n = g.n();
    let mut dfs = Dfs {
        g,
        order: vec![0; n],
        low: vec![0; n],
        timer: 0,
        cut_vertex: vec![false; n],
        cut_edges: Vec::new(),
    };
    for v in 0..n {
        if dfs.order[v] == 0 {
            dfs.visit(v, None);
        }
    }
    let cuts = (0..n).filter(|&v| dfs.cut_vertex[v]).collect();
    let mut edges = dfs.cut_edges;
    edges.sort_unstable();
    (cuts, edges)
}

pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    articulation(g).0
}

/// Largest `k` for which `g` has a `k`-bridge.
///
/// A `k`-bridge is a path on `k` vertices whose edges are all cut edges,
/// whose interior vertices have degree 2 and whose ends are not leaves. A
/// lone cut vertex counts as a 1-bridge. Chains are found by walking from
/// every end along cut edges through degree-2 vertices.
pub fn max_bridge_length(g: &Graph) -> usize {
    let (cuts, cut_edges) = articulation(g);
    if cuts.is_empty() {
        return 0;
    }
    let n = g.n();
    // cut edges with both ends of degree >= 2
    let mut inner = vec![0u64; n];
    for &(u, v) in &cut_edges {
        if g.degree(u) >= 2 && g.degree(v) >= 2 {
            inner[u] |= 1 << v;
            inner[v] |= 1 << u;
        }
    }
    let mut best = 1;
    for start in 0..n {
        for first in BitIter(inner[start]) {
            let (mut prev, mut cur, mut len) = (start, first, 2);
            while g.degree(cur) == 2 {
                let rest = inner[cur] & !(1 << prev);
                if rest == 0 {
                    break;
                }
                let next = rest.trailing_zeros() as usize;
                prev = cur;
                cur = next;
                len += 1;
            }
            best = best.max(len);
        }
    }
    best
}

/// Minimum number of vertices whose removal disconnects `g`; `n - 1` for
/// complete graphs. Computed as the minimum, over non-adjacent pairs, of
/// the number of internally vertex-disjoint paths (max flow on the
/// vertex-split network).
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n.saturating_sub(1);
    for t in 1..n {
        for s in 0..t {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t));
            }
        }
    }
    best
}

/// Number of internally vertex-disjoint `s`-`t` paths for non-adjacent `s`, `t`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    let size = 2 * n;
    let big = n as i32 + 1;
    // vertex v splits into v_in = 2v and v_out = 2v + 1
    let mut cap = vec![0i32; size * size];
    let idx = |a: usize, b: usize| a * size + b;
    for v in 0..n {
        cap[idx(2 * v, 2 * v + 1)] = if v == s || v == t { big } else { 1 };
        for w in g.neighbors(v) {
            cap[idx(2 * v + 1, 2 * w)] = big;
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut parent = vec![usize::MAX; size];
    loop {
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for b in 0..size {
                if parent[b] == usize::MAX && cap[idx(a, b)] > 0 {
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return flow;
        }
        let mut b = sink;
        while b != source {
            let a = parent[b];
            cap[idx(a, b)] -= 1;
            cap[idx(b, a)] += 1;
            b = a;
        }
        flow += 1;
    }
}

pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && (0..g.n()).all(|v| g.degree(v) == 2) && g.is_connected()
}

pub fn is_tree(g: &Graph) -> bool {
    g.edge_count() + 1 == g.n() && g.is_connected()
}

pub fn is_path(g: &Graph) -> bool {
    is_tree(g) && (0..g.n()).all(|v| g.degree(v) <= 2)
}

pub fn is_theta0(g: &Graph) -> bool {
    g.n() == 7 && g.edge_count() == 8 && are_isomorphic(g, &special::theta0())
}

/// Matches a tree with exactly one vertex of degree 3, all others of
/// degree at most 2, against the leg-length multisets of the exceptions.
pub fn exception_spider(g: &Graph) -> Option<ExceptionSpider> {
    if !(6..=8).contains(&g.n()) || !is_tree(g) {
        return None;
    }
    let degrees = g.degrees();
    if degrees.iter().any(|&d| d > 3) || degrees.iter().filter(|&&d| d == 3).count() != 1 {
        return None;
    }
    let center = degrees.iter().position(|&d| d == 3)?;
    let mut legs: Vec<usize> = g
        .neighbors(center)
        .map(|first| {
            let (mut prev, mut cur, mut len) = (center, first, 1);
            while g.degree(cur) == 2 {
                let next = g.neighbors(cur).find(|&w| w != prev).expect("degree 2");
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    legs.sort_unstable_by(|a, b| b.cmp(a));
    ExceptionSpider::ALL
        .into_iter()
        .find(|e| e.legs()[..] == legs[..])
}
