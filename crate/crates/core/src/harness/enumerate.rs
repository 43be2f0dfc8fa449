//! Isomorphism-class enumeration of small graphs.
//!
//! Graphs on `n` vertices are grown from graphs on `n - 1` by adding a
//! vertex with every possible neighborhood; deleting any vertex of a graph
//! gives a graph one size smaller, so this reaches every class. Duplicates
//! are collapsed by canonical form.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::graph::Graph;

/// Largest `n` the builtin enumerator serves; beyond that, read graph6 files.
pub const BUILTIN_MAX_VERTICES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("builtin enumeration supports 1 <= n <= {BUILTIN_MAX_VERTICES}, got {0}; supply a graph6 file instead")]
pub struct EnumerationLimit(pub usize);

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, sorted by canonical form.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, EnumerationLimit> {
    if n == 0 || n > BUILTIN_MAX_VERTICES {
        return Err(EnumerationLimit(n));
    }
    let mut level = vec![Graph::empty(1).expect("one vertex")];
    for size in 2..=n {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0u64..(1 << (size - 1)) {
                let mut masks: Vec<u64> = (0..size - 1).map(|v| g.neighbor_mask(v)).collect();
                masks.push(mask);
                let h = Graph::from_adjacency_masks(&masks).expect("valid extension");
                next.entry(canonical_form(&h))
                    .or_insert_with(|| canonical_graph(&h));
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Connected isomorphism classes on `n` vertices.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, EnumerationLimit> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}
