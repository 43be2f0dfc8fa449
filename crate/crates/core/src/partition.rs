//! Class sizes of a complete multipartite graph.
//!
//! A partition `k_1 <= ... <= k_t` lays its classes out in consecutive
//! blocks: class `i` owns vertex ids `offset(i)..offset(i) + k_i`. Every
//! oracle and the explorer assume this labeling.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition has no parts")]
    Empty,
    #[error("partition part {0} is zero")]
    ZeroPart(usize),
    #[error("cannot parse partition {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the sizes ascending; rejects empty lists and zero sizes.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut parts = parts.into();
        if parts.is_empty() {
            return Err(PartitionError::Empty);
        }
        if let Some(i) = parts.iter().position(|&k| k == 0) {
            return Err(PartitionError::ZeroPart(i));
        }
        parts.sort_unstable();
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn t(&self) -> usize {
        self.parts.len()
    }

    pub fn smallest(&self) -> usize {
        self.parts[0]
    }

    pub fn largest(&self) -> usize {
        self.parts[self.parts.len() - 1]
    }

    /// First vertex id of class `i`.
    pub fn offset(&self, i: usize) -> usize {
        self.parts[..i].iter().sum()
    }

    pub fn class_range(&self, i: usize) -> std::ops::Range<usize> {
        let start = self.offset(i);
        start..start + self.parts[i]
    }

    /// Class index of every vertex, in vertex order.
    pub fn class_labels(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(i, k))
            .collect()
    }

    pub fn gcd(&self) -> usize {
        self.parts.iter().copied().fold(0, gcd)
    }

    pub fn all_singletons(&self) -> bool {
        self.largest() == 1
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Comma-separated sizes, e.g. `"1,2,3"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| PartitionError::Parse {
                text: s.to_string(),
                reason: e.to_string(),
            })?;
        Partition::new(parts)
    }
}
