//! Exhaustive exploration of the friends-and-strangers state space.
//!
//! A state is a bijection `σ: V(X) -> V(Y)`. Two states are adjacent when
//! they differ by swapping the values on the ends of an `X`-edge whose two
//! values are adjacent in `Y`. States are indexed by their Lehmer rank, so
//! the whole space is a flat array of `n!` slots and the rank order is the
//! lexicographic order of image lists.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::perm::parity;

/// A state one friendly swap away, tagged with the `X`-edge swapped across.
pub type Neighbor = ((usize, usize), Bijection);

/// Default ceiling on `n` for exhaustive exploration (10! states).
pub const DEFAULT_MAX_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FsError {
    #[error("X has {x} vertices but Y has {y}")]
    SizeMismatch { x: usize, y: usize },
    #[error("n = {n} exceeds the exploration cap of {cap} ({states} states, roughly {mib} MiB of tables)")]
    OverCap {
        n: usize,
        cap: usize,
        states: u128,
        mib: u128,
    },
    #[error("{0:?} is not a permutation of 0..{len}", len = .0.len())]
    InvalidBijection(Vec<usize>),
    #[error("bijection has length {found}, expected {expected}")]
    BijectionLength { expected: usize, found: usize },
    #[error("cannot parse bijection {0:?}")]
    Parse(String),
    #[error("u and v must differ (both {0})")]
    SameVertex(usize),
    #[error("vertex {v} out of range for n = {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("Y is not a spanning subgraph of the larger target graph")]
    NotSpanningSubgraph,
    #[error("step {step} of the swap sequence is not a friendly swap")]
    IllegalSwap { step: usize },
    #[error("exchange criterion passed but component vertex sets differ")]
    CriterionInconsistent,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "Vec<u8>")]
pub struct Bijection(Vec<u8>);

impl From<Bijection> for Vec<u8> {
    fn from(b: Bijection) -> Self {
        b.0
    }
}

impl Bijection {
    pub fn new(images: Vec<usize>) -> Result<Self, FsError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &y in &images {
            if y >= n || seen[y] || n > u8::MAX as usize {
                return Err(FsError::InvalidBijection(images));
            }
            seen[y] = true;
        }
        Ok(Bijection(images.into_iter().map(|y| y as u8).collect()))
    }

    pub fn identity(n: usize) -> Self {
        Bijection((0..n as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `Y`-vertex placed on `X`-vertex `x`.
    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// The `X`-vertex carrying `Y`-vertex `y`.
    pub fn preimage(&self, y: usize) -> usize {
        self.0
            .iter()
            .position(|&v| v as usize == y)
            .expect("bijection covers every vertex")
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&y| y as usize).collect()
    }

    /// The state after swapping the values on `X`-vertices `a` and `b`.
    pub fn swap_across(&self, a: usize, b: usize) -> Bijection {
        let mut next = self.0.clone();
        next.swap(a, b);
        Bijection(next)
    }

    /// `(u v) ∘ σ`: exchange where `Y`-vertices `u` and `v` stand.
    pub fn transpose_values(&self, u: usize, v: usize) -> Bijection {
        self.swap_across(self.preimage(u), self.preimage(v))
    }

    /// 0 for even permutations, 1 for odd.
    pub fn parity(&self) -> u8 {
        parity(&self.images())
    }

    pub fn rank(&self) -> usize {
        rank_of(&self.0)
    }

    pub fn unrank(n: usize, mut rank: usize) -> Bijection {
        let mut pool: Vec<u8> = (0..n as u8).collect();
        let mut out = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let f = factorial(i);
            out.push(pool.remove(rank / f));
            rank %= f;
        }
        Bijection(out)
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, y) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{y}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ[{self}]")
    }
}

impl FromStr for Bijection {
    type Err = FsError;

    /// Comma-separated image list, e.g. `"2,0,1,3"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| FsError::Parse(s.to_string()))?;
        Bijection::new(images)
    }
}

pub fn factorial(k: usize) -> usize {
    (1..=k).product()
}

#[inline]
fn rank_of(images: &[u8]) -> usize {
    let n = images.len();
    let mut used = 0u32;
    let mut rank = 0;
    for (i, &y) in images.iter().enumerate() {
        let smaller_free = ((1u32 << y) - 1) & !used;
        rank = rank * (n - i) + smaller_free.count_ones() as usize;
        used |= 1 << y;
    }
    rank
}

/// Steps to the lexicographically next permutation; false after the last.
fn next_permutation(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Ordered swap steps: each entry is the `X`-edge swapped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapSequence {
    pub start: Bijection,
    pub edges: Vec<(usize, usize)>,
}

impl SwapSequence {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Component label for every state, with labels numbered in order of each
/// component's lexicographically least state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMap {
    n: usize,
    labels: Vec<u32>,
    sizes: Vec<usize>,
    representatives: Vec<usize>,
}

impl ComponentMap {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn label_of_rank(&self, rank: usize) -> usize {
        self.labels[rank] as usize
    }

    pub fn component_of(&self, sigma: &Bijection) -> usize {
        self.label_of_rank(sigma.rank())
    }

    pub fn representative(&self, component: usize) -> Bijection {
        Bijection::unrank(self.n, self.representatives[component])
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    /// graph6 of `X` and `Y`.
    pub x: String,
    pub y: String,
    pub component_count: usize,
    /// Sizes in representative order.
    pub component_sizes: Vec<usize>,
    pub representatives: Vec<Bijection>,
}

struct DisjointSet {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a as usize] < self.size[b as usize] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b as usize] = a;
        self.size[a as usize] += self.size[b as usize];
    }
}

/// The friends-and-strangers graph of a pair `(X, Y)`.
pub struct FsGraph<'a> {
    x: &'a Graph,
    y: &'a Graph,
    x_edges: Vec<(usize, usize)>,
}

impl<'a> FsGraph<'a> {
    pub fn new(x: &'a Graph, y: &'a Graph) -> Result<Self, FsError> {
        Self::with_cap(x, y, DEFAULT_MAX_VERTICES)
    }

    pub fn with_cap(x: &'a Graph, y: &'a Graph, cap: usize) -> Result<Self, FsError> {
        if x.n() != y.n() {
            return Err(FsError::SizeMismatch { x: x.n(), y: y.n() });
        }
        let n = x.n();
        // u32 state indices and u32 bitmask ranks
        let cap = cap.min(12);
        if n > cap {
            let states: u128 = (1..=n as u128).product();
            return Err(FsError::OverCap {
                n,
                cap,
                states,
                mib: (states * 12) >> 20,
            });
        }
        Ok(FsGraph {
            x,
            y,
            x_edges: x.edges(),
        })
    }

    pub fn n(&self) -> usize {
        self.x.n()
    }

    pub fn state_count(&self) -> usize {
        factorial(self.n())
    }

    fn check(&self, sigma: &Bijection) -> Result<(), FsError> {
        if sigma.len() != self.n() {
            return Err(FsError::BijectionLength {
                expected: self.n(),
                found: sigma.len(),
            });
        }
        Ok(())
    }

    #[inline]
    fn friendly(&self, images: &[u8], a: usize, b: usize) -> bool {
        self.y.has_edge(images[a] as usize, images[b] as usize)
    }

    /// Every state one friendly swap away, tagged with the `X`-edge used.
    pub fn friendly_neighbors(&self, sigma: &Bijection) -> Result<Vec<Neighbor>, FsError> {
        self.check(sigma)?;
        Ok(self
            .x_edges
            .iter()
            .filter(|&&(a, b)| self.friendly(&sigma.0, a, b))
            .map(|&(a, b)| ((a, b), sigma.swap_across(a, b)))
            .collect())
    }

    /// Labels every state with its component via union-find over all
    /// friendly swaps; each undirected swap edge is joined once.
    pub fn components(&self) -> ComponentMap {
        let n = self.n();
        let total = self.state_count();
        let mut dsu = DisjointSet::new(total);
        let mut state: Vec<u8> = (0..n as u8).collect();
        let mut rank = 0usize;
        loop {
            for &(a, b) in &self.x_edges {
                if self.friendly(&state, a, b) {
                    state.swap(a, b);
                    let other = rank_of(&state);
                    state.swap(a, b);
                    if other > rank {
                        dsu.union(rank as u32, other as u32);
                    }
                }
            }
            if !next_permutation(&mut state) {
                break;
            }
            rank += 1;
        }
        debug_assert_eq!(rank + 1, total);

        const UNSET: u32 = u32::MAX;
        let mut label_of_root = vec![UNSET; total];
        let mut labels = vec![0u32; total];
        let mut sizes = Vec::new();
        let mut representatives = Vec::new();
        for (r, slot) in labels.iter_mut().enumerate() {
            let root = dsu.find(r as u32) as usize;
            if label_of_root[root] == UNSET {
                label_of_root[root] = sizes.len() as u32;
                sizes.push(0);
                representatives.push(r);
            }
            let label = label_of_root[root];
            *slot = label;
            sizes[label as usize] += 1;
        }
        ComponentMap {
            n,
            labels,
            sizes,
            representatives,
        }
    }

    pub fn summary(&self) -> ComponentSummary {
        let map = self.components();
        ComponentSummary {
            x: encode_graph6(self.x),
            y: encode_graph6(self.y),
            component_count: map.count(),
            component_sizes: map.sizes.clone(),
            representatives: (0..map.count()).map(|c| map.representative(c)).collect(),
        }
    }

    /// Breadth-first search from `start`; returns the swap edges of a
    /// shortest route to `target` if one exists.
    fn bfs(&self, start: &Bijection, target: &Bijection) -> Option<Vec<(usize, usize)>> {
        let n = self.n();
        let (start_rank, target_rank) = (start.rank(), target.rank());
        if start_rank == target_rank {
            return Some(Vec::new());
        }
        const UNSEEN: u32 = u32::MAX;
        let mut parent = vec![UNSEEN; self.state_count()];
        let mut via = vec![0u8; self.state_count()];
        parent[start_rank] = start_rank as u32;
        let mut queue = std::collections::VecDeque::from([start_rank]);
        while let Some(r) = queue.pop_front() {
            let mut state = Bijection::unrank(n, r).0;
            for (e, &(a, b)) in self.x_edges.iter().enumerate() {
                if !self.friendly(&state, a, b) {
                    continue;
                }
                state.swap(a, b);
                let next = rank_of(&state);
                state.swap(a, b);
                if parent[next] != UNSEEN {
                    continue;
                }
                parent[next] = r as u32;
                via[next] = e as u8;
                if next == target_rank {
                    let mut edges = Vec::new();
                    let mut cur = next;
                    while cur != start_rank {
                        edges.push(self.x_edges[via[cur] as usize]);
                        cur = parent[cur] as usize;
                    }
                    edges.reverse();
                    return Some(edges);
                }
                queue.push_back(next);
            }
        }
        None
    }

    pub fn same_component(&self, sigma: &Bijection, tau: &Bijection) -> Result<bool, FsError> {
        self.check(sigma)?;
        self.check(tau)?;
        Ok(self.bfs(sigma, tau).is_some())
    }

    /// A shortest swap sequence from `sigma` to `tau`, replayed and checked
    /// before it is returned; `None` when they lie in different components.
    pub fn swap_path(
        &self,
        sigma: &Bijection,
        tau: &Bijection,
    ) -> Result<Option<SwapSequence>, FsError> {
        self.check(sigma)?;
        self.check(tau)?;
        let Some(edges) = self.bfs(sigma, tau) else {
            return Ok(None);
        };
        let end = self.replay(sigma, &edges)?;
        assert_eq!(&end, tau, "swap path replay diverged");
        Ok(Some(SwapSequence {
            start: sigma.clone(),
            edges,
        }))
    }

    /// Applies the swaps in order, failing on the first one that is not a
    /// friendly swap across an `X`-edge.
    pub fn replay(
        &self,
        start: &Bijection,
        edges: &[(usize, usize)],
    ) -> Result<Bijection, FsError> {
        self.check(start)?;
        let mut state = start.clone();
        for (step, &(a, b)) in edges.iter().enumerate() {
            if a >= self.n()
                || b >= self.n()
                || !self.x.has_edge(a, b)
                || !self.friendly(&state.0, a, b)
            {
                return Err(FsError::IllegalSwap { step });
            }
            state = state.swap_across(a, b);
        }
        Ok(state)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), FsError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(FsError::VertexOutOfRange { v: w, n });
            }
        }
        if u == v {
            return Err(FsError::SameVertex(u));
        }
        Ok(())
    }

    /// Whether some swap sequence from `sigma` exchanges `Y`-vertices `u`
    /// and `v`, i.e. reaches `(u v) ∘ σ`.
    pub fn exchangeable(&self, u: usize, v: usize, sigma: &Bijection) -> Result<bool, FsError> {
        self.check(sigma)?;
        self.check_pair(u, v)?;
        self.same_component(sigma, &sigma.transpose_values(u, v))
    }
}

pub fn friendly_neighbors(
    x: &Graph,
    y: &Graph,
    sigma: &Bijection,
) -> Result<Vec<Neighbor>, FsError> {
    FsGraph::new(x, y)?.friendly_neighbors(sigma)
}

pub fn component_count(x: &Graph, y: &Graph) -> Result<ComponentSummary, FsError> {
    Ok(FsGraph::new(x, y)?.summary())
}

pub fn same_component(
    x: &Graph,
    y: &Graph,
    sigma: &Bijection,
    tau: &Bijection,
) -> Result<bool, FsError> {
    FsGraph::new(x, y)?.same_component(sigma, tau)
}

pub fn swap_path(
    x: &Graph,
    y: &Graph,
    sigma: &Bijection,
    tau: &Bijection,
) -> Result<Option<SwapSequence>, FsError> {
    FsGraph::new(x, y)?.swap_path(sigma, tau)
}

pub fn exchangeable(
    x: &Graph,
    y: &Graph,
    u: usize,
    v: usize,
    sigma: &Bijection,
) -> Result<bool, FsError> {
    FsGraph::new(x, y)?.exchangeable(u, v, sigma)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ExchangeVerdict {
    Pass,
    Counterexample {
        sigma: Bijection,
        u: usize,
        v: usize,
    },
}

/// Checks that every edge `{u, v}` of `y_wide` is `(X, Y)`-exchangeable from
/// every state placing `u` and `v` on adjacent `X`-vertices. On a pass the
/// components of `FS(X, Y)` and `FS(X, y_wide)` must have the same vertex
/// sets; a pass without that is reported as [`FsError::CriterionInconsistent`].
pub fn verify_exchange_criterion(
    x: &Graph,
    y: &Graph,
    y_wide: &Graph,
) -> Result<ExchangeVerdict, FsError> {
    if !y.is_spanning_subgraph_of(y_wide) {
        return Err(FsError::NotSpanningSubgraph);
    }
    let fs = FsGraph::new(x, y)?;
    let map = fs.components();
    let n = fs.n();
    let mut state: Vec<u8> = (0..n as u8).collect();
    let mut rank = 0usize;
    loop {
        for &(a, b) in &fs.x_edges {
            let (u, v) = (state[a] as usize, state[b] as usize);
            if !y_wide.has_edge(u, v) {
                continue;
            }
            state.swap(a, b);
            let exchanged = rank_of(&state);
            state.swap(a, b);
            if map.labels[rank] != map.labels[exchanged] {
                return Ok(ExchangeVerdict::Counterexample {
                    sigma: Bijection(state),
                    u,
                    v,
                });
            }
        }
        if !next_permutation(&mut state) {
            break;
        }
        rank += 1;
    }
    let wide = FsGraph::new(x, y_wide)?.components();
    if wide.labels != map.labels {
        return Err(FsError::CriterionInconsistent);
    }
    Ok(ExchangeVerdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::special::{complete, complete_multipartite, cycle, path};

    fn kp(p: &[usize]) -> Graph {
        complete_multipartite(&Partition::new(p.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn rank_is_lexicographic() {
        let mut p: Vec<u8> = (0..5).collect();
        let mut r = 0;
        loop {
            assert_eq!(rank_of(&p), r);
            assert_eq!(Bijection::unrank(5, r).0, p);
            if !next_permutation(&mut p) {
                break;
            }
            r += 1;
        }
        assert_eq!(r + 1, 120);
    }

    #[test]
    fn neighbor_examples() {
        let p3 = path(3).unwrap();
        let id = Bijection::identity(3);
        let n = friendly_neighbors(&p3, &kp(&[1, 2]), &id).unwrap();
        assert_eq!(n.len(), 1);
        assert_eq!(n[0].0, (0, 1));
        assert_eq!(n[0].1.images(), vec![1, 0, 2]);
        assert_eq!(
            friendly_neighbors(&p3, &complete(3).unwrap(), &id)
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            friendly_neighbors(
                &path(2).unwrap(),
                &complete(2).unwrap(),
                &Bijection::identity(2)
            )
            .unwrap()
            .len(),
            1
        );
    }

    #[test]
    fn size_mismatch_and_cap() {
        let err = FsGraph::new(&path(3).unwrap(), &path(4).unwrap()).err();
        assert_eq!(err, Some(FsError::SizeMismatch { x: 3, y: 4 }));
        let big = path(11).unwrap();
        assert!(matches!(
            FsGraph::new(&big, &big),
            Err(FsError::OverCap { n: 11, cap: 10, .. })
        ));
        let p3 = path(3).unwrap();
        let fs = FsGraph::new(&p3, &p3).unwrap();
        assert_eq!(
            fs.friendly_neighbors(&Bijection::identity(4)).err(),
            Some(FsError::BijectionLength {
                expected: 3,
                found: 4
            })
        );
    }

    #[test]
    fn component_counts() {
        assert_eq!(
            component_count(&complete(4).unwrap(), &kp(&[2, 2]))
                .unwrap()
                .component_count,
            1
        );
        assert_eq!(
            component_count(&cycle(4).unwrap(), &kp(&[2, 2]))
                .unwrap()
                .component_count,
            2
        );
        assert_eq!(
            component_count(&cycle(5).unwrap(), &kp(&[2, 3]))
                .unwrap()
                .component_count,
            2
        );
        let s = component_count(&path(4).unwrap(), &kp(&[2, 2])).unwrap();
        assert_eq!(s.component_sizes.iter().sum::<usize>(), 24);
        assert!(s.component_count > 1);
        // representatives are least in their component and sorted
        assert_eq!(s.representatives[0], Bijection::identity(4));
        assert!(s.representatives.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn same_component_and_paths() {
        let c4 = cycle(4).unwrap();
        let y = kp(&[2, 2]);
        let id = Bijection::identity(4);
        assert!(same_component(&c4, &y, &id, &id).unwrap());
        let swapped = id.transpose_values(0, 1);
        assert!(!same_component(&c4, &y, &id, &swapped).unwrap());
        assert_eq!(swap_path(&c4, &y, &id, &swapped).unwrap(), None);
        assert_eq!(swap_path(&c4, &y, &id, &id).unwrap().unwrap().len(), 0);

        let k4 = complete(4).unwrap();
        let fs = FsGraph::new(&k4, &y).unwrap();
        for ((a, b), next) in fs.friendly_neighbors(&id).unwrap() {
            let seq = fs.swap_path(&id, &next).unwrap().unwrap();
            assert_eq!(seq.edges, vec![(a, b)]);
        }
        let far = Bijection::new(vec![1, 0, 3, 2]).unwrap();
        let seq = fs.swap_path(&id, &far).unwrap().unwrap();
        assert_eq!(fs.replay(&id, &seq.edges).unwrap(), far);
    }

    #[test]
    fn replay_rejects_unfriendly_swaps() {
        let p3 = path(3).unwrap();
        let y = kp(&[1, 2]);
        let fs = FsGraph::new(&p3, &y).unwrap();
        assert_eq!(
            fs.replay(&Bijection::identity(3), &[(1, 2)]),
            Err(FsError::IllegalSwap { step: 0 })
        );
        assert_eq!(
            fs.replay(&Bijection::identity(3), &[(0, 2)]),
            Err(FsError::IllegalSwap { step: 0 })
        );
    }

    #[test]
    fn exchangeability_examples() {
        let y = kp(&[2, 2]);
        let k4 = complete(4).unwrap();
        // adjacent in Y and placed on an X-edge: one swap
        let id = Bijection::identity(4);
        assert!(exchangeable(&k4, &y, 0, 2, &id).unwrap());
        assert!(exchangeable(&k4, &y, 0, 1, &id).unwrap());
        assert!(!exchangeable(&path(4).unwrap(), &y, 0, 1, &id).unwrap());
        assert_eq!(
            exchangeable(&k4, &y, 1, 1, &id),
            Err(FsError::SameVertex(1))
        );
        assert_eq!(
            exchangeable(&k4, &y, 1, 4, &id),
            Err(FsError::VertexOutOfRange { v: 4, n: 4 })
        );
    }

    #[test]
    fn exchange_criterion_examples() {
        let y = kp(&[2, 2]);
        let k4 = complete(4).unwrap();
        assert_eq!(
            verify_exchange_criterion(&k4, &y, &y).unwrap(),
            ExchangeVerdict::Pass
        );
        assert_eq!(
            verify_exchange_criterion(&k4, &y, &k4).unwrap(),
            ExchangeVerdict::Pass
        );
        let p4 = path(4).unwrap();
        assert!(matches!(
            verify_exchange_criterion(&p4, &y, &k4).unwrap(),
            ExchangeVerdict::Counterexample { .. }
        ));
        assert_eq!(
            verify_exchange_criterion(&p4, &k4, &y),
            Err(FsError::NotSpanningSubgraph)
        );
    }

    #[test]
    fn bijection_parsing() {
        let b: Bijection = "2,0,1,3".parse().unwrap();
        assert_eq!(b.image(0), 2);
        assert_eq!(b.preimage(0), 1);
        assert_eq!(b.to_string(), "2,0,1,3");
        assert!("2,0,0".parse::<Bijection>().is_err());
        assert!("a,b".parse::<Bijection>().is_err());
    }
}
