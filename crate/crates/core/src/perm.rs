//! Permutations and subgroup closure.
//!
//! Elements of a direct product `S_a x S_b x ...` are stored as one
//! permutation acting on consecutive index blocks; the caller tracks the
//! block boundaries.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::partition::Partition;

/// Default bound on the number of elements a closure may enumerate.
pub const DEFAULT_ELEMENT_CAP: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("images {0:?} do not form a permutation")]
    NotBijective(Vec<usize>),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("cycle {cycle:?} is invalid on {degree} points")]
    BadCycle { cycle: Vec<usize>, degree: usize },
    #[error("closure exceeded {0} elements")]
    CapExceeded(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("closed form {closed_form} disagrees with closure order {closure}")]
    FormulaMismatch { closed_form: u64, closure: u64 },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &i in &images {
            if i >= m || seen[i] {
                return Err(PermError::NotBijective(images));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// The cyclic permutation `c[0] -> c[1] -> ... -> c[last] -> c[0]`.
    pub fn cycle(degree: usize, cycle: &[usize]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = HashSet::new();
        for (i, &a) in cycle.iter().enumerate() {
            if a >= degree || !seen.insert(a) {
                return Err(PermError::BadCycle {
                    cycle: cycle.to_vec(),
                    degree,
                });
            }
            images[a] = cycle[(i + 1) % cycle.len()];
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        if parity(&self.images()) == 0 {
            1
        } else {
            -1
        }
    }

    pub fn restricted_sign(&self, block: std::ops::Range<usize>) -> i8 {
        let start = block.start;
        let local: Vec<usize> = block.map(|i| self.apply(i) - start).collect();
        if parity(&local) == 0 {
            1
        } else {
            -1
        }
    }
}

/// Parity (0 even, 1 odd) of a permutation given by its image list.
pub fn parity(images: &[usize]) -> u8 {
    let mut seen = vec![false; images.len()];
    let mut transpositions = 0usize;
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = images[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    (transpositions % 2) as u8
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    degree: usize,
    generators: Vec<Permutation>,
}

impl GeneratorSet {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch(degree, g.degree()));
        }
        Ok(GeneratorSet { degree, generators })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }
}

/// Every element of the generated subgroup, by breadth-first closure under
/// right multiplication by generators.
pub fn closure(gens: &GeneratorSet, cap: usize) -> Result<HashSet<Permutation>, PermError> {
    let identity = Permutation::identity(gens.degree);
    let mut elements = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(p) = queue.pop_front() {
        for g in &gens.generators {
            let q = p.compose_unchecked(g);
            if !elements.contains(&q) {
                if elements.len() >= cap {
                    return Err(PermError::CapExceeded(cap));
                }
                elements.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    Ok(elements)
}

pub fn closure_order(gens: &GeneratorSet) -> Result<u64, PermError> {
    closure_order_capped(gens, DEFAULT_ELEMENT_CAP)
}

pub fn closure_order_capped(gens: &GeneratorSet, cap: usize) -> Result<u64, PermError> {
    Ok(closure(gens, cap)?.len() as u64)
}

/// The rotation `offset + (i -> i+1 mod len)` restricted to `range`,
/// optionally inverted, written into `images`.
fn rotate_block(images: &mut [usize], range: std::ops::Range<usize>, inverse: bool) {
    let len = range.len();
    let start = range.start;
    for i in 0..len {
        let to = if inverse {
            (i + len - 1) % len
        } else {
            (i + 1) % len
        };
        images[start + i] = start + to;
    }
}

/// The two generators of the stopwatch swap group on `S_k x S_l`, with the
/// `S_k` factor on points `0..k` and the `S_l` factor on `k..k+l`:
///
/// * alpha rotates `1..k` forward and all of the second block backward;
/// * beta rotates all of the first block backward and `k+1..k+l` forward.
pub fn alpha_beta_generators(k: usize, l: usize) -> Result<GeneratorSet, PermError> {
    if k < 2 || l < 2 {
        return Err(PermError::InvalidParameter(format!(
            "need k, l >= 2, got k={k}, l={l}"
        )));
    }
    let m = k + l;
    let mut alpha: Vec<usize> = (0..m).collect();
    rotate_block(&mut alpha, 1..k, false);
    rotate_block(&mut alpha, k..m, true);
    let mut beta: Vec<usize> = (0..m).collect();
    rotate_block(&mut beta, 0..k, true);
    rotate_block(&mut beta, k + 1..m, false);
    GeneratorSet::new(m, vec![Permutation::new(alpha)?, Permutation::new(beta)?])
}

pub fn alpha_beta_order(k: usize, l: usize) -> Result<u64, PermError> {
    closure_order(&alpha_beta_generators(k, l)?)
}

/// Generators of the cycle-swap subgroup of `S_{k_1} x ... x S_{k_t}`:
/// for every ordered pair of classes `(i, j)`, rotate class `i` forward and
/// class `j` backward.
pub fn cycle_subgroup_generators(p: &Partition) -> Result<GeneratorSet, PermError> {
    let n = p.n();
    let mut gens = Vec::new();
    for i in 0..p.t() {
        for j in 0..p.t() {
            if i == j {
                continue;
            }
            let mut images: Vec<usize> = (0..n).collect();
            rotate_block(&mut images, p.class_range(i), false);
            rotate_block(&mut images, p.class_range(j), true);
            let g = Permutation::new(images)?;
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
    }
    GeneratorSet::new(n, gens)
}

/// `prod k_i / gcd(k_1, ..., k_t)`.
pub fn cycle_subgroup_closed_form(p: &Partition) -> u64 {
    p.parts().iter().map(|&k| k as u64).product::<u64>() / p.gcd() as u64
}

/// Order of the cycle-swap subgroup, computed by closure and checked
/// against the closed form.
pub fn cycle_subgroup_order(p: &Partition) -> Result<u64, PermError> {
    if p.t() < 2 {
        return Err(PermError::InvalidParameter(format!(
            "need at least two classes, got {p}"
        )));
    }
    let closure = closure_order(&cycle_subgroup_generators(p)?)?;
    let closed_form = cycle_subgroup_closed_form(p);
    if closure != closed_form {
        return Err(PermError::FormulaMismatch {
            closed_form,
            closure,
        });
    }
    Ok(closure)
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Number of components of the swap graph of a cycle against
/// `K_{k_1,...,k_t}`: `gcd(k_1, ..., k_t) * prod (k_i - 1)!`.
pub fn cycle_component_formula(p: &Partition) -> u64 {
    p.gcd() as u64 * p.parts().iter().map(|&k| factorial(k - 1)).product::<u64>()
}
