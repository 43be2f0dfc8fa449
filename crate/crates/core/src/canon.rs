//! Canonical forms for small graphs.
//!
//! Vertices are first split into cells by iterated color refinement
//! (degree, then multisets of neighbor colors). The canonical labeling is
//! the cell-respecting ordering whose upper-triangle bit string, read
//! column by column, is lexicographically smallest. Refinement is
//! isomorphism-invariant, so two graphs are isomorphic exactly when their
//! forms agree.

use crate::graph::Graph;

/// Largest vertex count whose upper triangle fits a `u128`.
pub const CANON_MAX_VERTICES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: u8,
    pub code: u128,
}

/// Stable color classes from iterated refinement, numbered so that the
/// numbering itself is isomorphism-invariant.
pub fn refine_colors(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut colors: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut classes = count_distinct(&colors);
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut around: Vec<u32> = g.neighbors(v).map(|w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present") as u32)
            .collect();
        colors = next;
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    g: &'a Graph,
    colors: Vec<u32>,
    slot_colors: Vec<u32>,
    total_bits: u32,
    order: Vec<usize>,
    used: u64,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize, prefix: u128, bits: u32, strictly_better: bool) {
        let n = self.g.n();
        if depth == n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        let want = self.slot_colors[depth];
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.colors[v] != want {
                continue;
            }
            let mut column = 0u128;
            for &u in &self.order {
                column = column << 1 | self.g.has_edge(u, v) as u128;
            }
            let next_prefix = prefix << depth | column;
            let next_bits = bits + depth as u32;
            let mut better = strictly_better;
            if !better {
                if let Some((b, _)) = &self.best {
                    let best_prefix = b >> (self.total_bits - next_bits);
                    if next_prefix > best_prefix {
                        continue;
                    }
                    better = next_prefix < best_prefix;
                }
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.descend(depth + 1, next_prefix, next_bits, better);
            self.used &= !(1 << v);
            self.order.pop();
        }
    }
}

/// Returns `(form, order)` where `order[i]` is the vertex placed at
/// canonical position `i`.
fn search(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    assert!(
        n <= CANON_MAX_VERTICES,
        "canonical form supports at most {CANON_MAX_VERTICES} vertices"
    );
    let colors = refine_colors(g);
    let mut slot_colors = colors.clone();
    slot_colors.sort_unstable();
    let mut s = Search {
        g,
        colors,
        slot_colors,
        total_bits: (n * (n - 1) / 2) as u32,
        order: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    s.descend(0, 0, 0, false);
    let (code, order) = s.best.expect("at least one labeling");
    (CanonicalForm { n: n as u8, code }, order)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    search(g).0
}

/// `g` relabeled into canonical position order.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = search(g);
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    g.relabel(&position)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}
