//! Constructors for the named graph families used throughout the lab.

use std::fmt;

use crate::graph::{Graph, GraphError};
use crate::partition::Partition;

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter(msg.into())
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        for u in 0..v {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

/// Cycle `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = path(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// Star with center 0 and `n - 1` leaves.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(0, v)?;
    }
    Ok(g)
}

/// `K_{k_1,...,k_t}` with classes in consecutive blocks.
pub fn complete_multipartite(p: &Partition) -> Result<Graph, GraphError> {
    let labels = p.class_labels();
    let mut g = Graph::empty(p.n())?;
    for v in 1..labels.len() {
        for u in 0..v {
            if labels[u] != labels[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Complete bipartite graph whose first class is `{0, ..., first - 1}`,
/// regardless of which class is larger.
pub fn complete_bipartite(first: usize, n: usize) -> Result<Graph, GraphError> {
    if first == 0 || first >= n {
        return Err(invalid(format!(
            "complete bipartite needs 1 <= first < n, got first={first}, n={n}"
        )));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..first {
        for v in first..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// The 7-vertex theta graph: a 6-cycle `0..5` plus the path `0 - 6 - 3`.
pub fn theta0() -> Graph {
    Graph::from_edges(
        7,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (0, 6),
            (6, 3),
        ],
    )
    .expect("fixed graph is valid")
}

/// `(n-1)`-cycle on `1..n` plus the pendant edge `0 - 1`.
pub fn stopwatch(n: usize) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(invalid(format!("stopwatch needs n >= 4, got {n}")));
    }
    let mut g = Graph::empty(n)?;
    g.add_edge(0, 1)?;
    for v in 2..n {
        g.add_edge(v - 1, v)?;
    }
    g.add_edge(n - 1, 1)?;
    Ok(g)
}

/// Path `0 - 1 - ... - (len-1)` with two extra vertices `len` and `len + 1`
/// both hanging off the last path vertex.
pub fn snake_tongue(len: usize) -> Result<Graph, GraphError> {
    if len < 2 {
        return Err(invalid(format!(
            "snake tongue needs a path of length >= 2, got {len}"
        )));
    }
    let mut g = Graph::empty(len + 2)?;
    for v in 1..len {
        g.add_edge(v - 1, v)?;
    }
    g.add_edge(len - 1, len)?;
    g.add_edge(len - 1, len + 1)?;
    Ok(g)
}

/// Book graph: `K_{k, n-k}` with the size-`k` side made complete, which is
/// the complete multipartite graph on `k` singletons and one class of `n - k`.
pub fn book(k: usize, n: usize) -> Result<Graph, GraphError> {
    if k == 0 || k >= n {
        return Err(invalid(format!(
            "book graph needs 1 <= k < n, got k={k}, n={n}"
        )));
    }
    complete_multipartite(&book_partition(k, n)?)
}

pub fn book_partition(k: usize, n: usize) -> Result<Partition, GraphError> {
    if k == 0 || k >= n {
        return Err(invalid(format!(
            "book graph needs 1 <= k < n, got k={k}, n={n}"
        )));
    }
    let mut parts = vec![1; k];
    parts.push(n - k);
    Partition::new(parts).map_err(|e| invalid(e.to_string()))
}

/// `K_{k, n-k}` plus the edge `{0, 1}` inside the size-`k` class.
pub fn bipartite_plus_edge(k: usize, n: usize) -> Result<Graph, GraphError> {
    if k < 2 || 2 * k > n {
        return Err(invalid(format!("needs 2 <= k <= n - k, got k={k}, n={n}")));
    }
    let mut g = complete_bipartite(k, n)?;
    g.add_edge(0, 1)?;
    Ok(g)
}

/// Tree with one center `0` and one path per entry of `legs`.
pub fn spider(legs: &[usize]) -> Result<Graph, GraphError> {
    if legs.contains(&0) {
        return Err(invalid("spider legs must be nonempty"));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut g = Graph::empty(n)?;
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

/// The three spider trees that have six components instead of two.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
pub enum ExceptionSpider {
    T6,
    T7,
    T8,
}

impl ExceptionSpider {
    pub const ALL: [ExceptionSpider; 3] = [
        ExceptionSpider::T6,
        ExceptionSpider::T7,
        ExceptionSpider::T8,
    ];

    /// Leg lengths, longest first.
    pub fn legs(self) -> [usize; 3] {
        match self {
            ExceptionSpider::T6 => [2, 2, 1],
            ExceptionSpider::T7 => [2, 2, 2],
            ExceptionSpider::T8 => [3, 2, 2],
        }
    }

    pub fn graph(self) -> Graph {
        spider(&self.legs()).expect("fixed legs are valid")
    }

    pub fn n(self) -> usize {
        1 + self.legs().iter().sum::<usize>()
    }
}

impl fmt::Display for ExceptionSpider {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Named constructions, as accepted by [`construct_special`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialGraph {
    Theta0,
    Stopwatch(usize),
    SnakeTongue(usize),
    Book { k: usize, n: usize },
    BipartitePlusEdge { k: usize, n: usize },
    Cycle(usize),
    Path(usize),
    Exception(ExceptionSpider),
}

pub fn construct_special(kind: SpecialGraph) -> Result<Graph, GraphError> {
    match kind {
        SpecialGraph::Theta0 => Ok(theta0()),
        SpecialGraph::Stopwatch(n) => stopwatch(n),
        SpecialGraph::SnakeTongue(len) => snake_tongue(len),
        SpecialGraph::Book { k, n } => book(k, n),
        SpecialGraph::BipartitePlusEdge { k, n } => bipartite_plus_edge(k, n),
        SpecialGraph::Cycle(n) => cycle(n),
        SpecialGraph::Path(n) => path(n),
        SpecialGraph::Exception(e) => Ok(e.graph()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn multipartite_shapes() {
        assert_eq!(
            complete_multipartite(&part(&[1, 1, 1])).unwrap(),
            complete(3).unwrap()
        );
        let k22 = complete_multipartite(&part(&[2, 2])).unwrap();
        assert_eq!(k22.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        let k12 = complete_multipartite(&part(&[2, 1])).unwrap();
        assert!(k12.has_edge(0, 1) && k12.has_edge(0, 2) && !k12.has_edge(1, 2));
    }

    #[test]
    fn stopwatch_four_is_paw() {
        let w = stopwatch(4).unwrap();
        assert_eq!(w.edges(), vec![(0, 1), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(w.degrees(), vec![1, 3, 2, 2]);
    }

    #[test]
    fn snake_tongue_two_is_claw() {
        let y = snake_tongue(2).unwrap();
        assert_eq!(y.edges(), vec![(0, 1), (1, 2), (1, 3)]);
        assert_eq!(snake_tongue(3).unwrap().n(), 5);
        assert!(snake_tongue(1).is_err());
    }

    #[test]
    fn book_is_multipartite_with_singletons() {
        let b = book(2, 5).unwrap();
        assert_eq!(b, complete_multipartite(&part(&[1, 1, 3])).unwrap());
        // K_{2,3} plus the edge inside the size-2 side
        let mut expected = complete_bipartite(2, 5).unwrap();
        expected.add_edge(0, 1).unwrap();
        assert_eq!(b, expected);
        assert!(book(5, 5).is_err());
    }

    #[test]
    fn bipartite_plus_edge_shape() {
        let g = bipartite_plus_edge(2, 5).unwrap();
        assert_eq!(g.edge_count(), 7);
        assert!(g.has_edge(0, 1) && !g.has_edge(2, 3));
        assert!(bipartite_plus_edge(3, 5).is_err());
    }

    #[test]
    fn exception_spiders() {
        assert_eq!(ExceptionSpider::T6.graph().n(), 6);
        assert_eq!(ExceptionSpider::T7.graph().n(), 7);
        assert_eq!(ExceptionSpider::T8.graph().n(), 8);
        assert_eq!(ExceptionSpider::T8.graph().edge_count(), 7);
    }
}
