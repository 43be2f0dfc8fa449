use crate::partition::Partition;

/// Ascending integer partitions of `n` with at least `min_parts` parts,
/// ordered by part count, then lexicographically.
pub fn partitions_of(n: usize, min_parts: usize) -> Vec<Partition> {
    fn grow(remaining: usize, floor: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for k in floor..=remaining {
            // a part k leaves either nothing or something >= k
            if remaining - k != 0 && remaining - k < k {
                continue;
            }
            current.push(k);
            grow(remaining - k, k, current, out);
            current.pop();
        }
    }
    if n == 0 {
        return Vec::new();
    }
    let mut raw = Vec::new();
    grow(n, 1, &mut Vec::new(), &mut raw);
    let mut parts: Vec<Vec<usize>> = raw.into_iter().filter(|p| p.len() >= min_parts).collect();
    parts.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    parts
        .into_iter()
        .map(|p| Partition::new(p).expect("positive parts"))
        .collect()
}
