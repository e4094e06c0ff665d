use super::Graph;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_labeled_graphs`]: `2^21` graphs.
pub const MAX_ENUMERATION_N: usize = 7;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `{u, v}` in the order `{0,1}, {0,2}, .., {0,n-1}, {1,2}, ..`.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Every labeled simple graph on `n` vertices, by ascending edge mask.
pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::Capacity(format!(
            "refusing to enumerate labeled graphs on {n} > {MAX_ENUMERATION_N} vertices"
        )));
    }
    Ok(LabeledGraphs { n, next: 0, end: 1u64 << pair_count(n) })
}

#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = Graph::from_mask(self.n, self.next as u128).expect("mask within range");
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(enumerate_labeled_graphs(6).unwrap().count(), 32768);
        assert_eq!(enumerate_labeled_graphs(0).unwrap().count(), 1);
        assert!(matches!(enumerate_labeled_graphs(8), Err(Error::Capacity(_))));
    }

    #[test]
    fn order_is_mask_ascending() {
        let masks: Vec<u128> = enumerate_labeled_graphs(4).unwrap().map(|g| g.to_mask().unwrap()).collect();
        assert!(masks.windows(2).all(|w| w[0] + 1 == w[1]));
    }

    #[test]
    fn pair_index_is_dense() {
        for n in 0..9 {
            let mut seen = vec![false; pair_count(n)];
            for u in 0..n {
                for v in u + 1..n {
                    let i = pair_index(n, v, u);
                    assert!(!seen[i]);
                    seen[i] = true;
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }
}
