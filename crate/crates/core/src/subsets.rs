//! Bitmask subset enumeration for the exhaustive checkers.
//!
//! Bit `b` of a mask stands for node `b + 1`.

use crate::NodeIndex;

/// All `k`-subsets of `n` bits in increasing numeric order (Gosper's hack).
#[derive(Debug, Clone)]
pub struct FixedWeight {
    next: Option<u64>,
    limit: u64,
}

impl FixedWeight {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n < 64, "bitmask enumeration supports at most 63 elements");
        let next = if k > n {
            None
        } else if k == 0 {
            Some(0)
        } else {
            Some((1u64 << k) - 1)
        };
        FixedWeight {
            next,
            limit: 1u64 << n,
        }
    }
}

impl Iterator for FixedWeight {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < self.limit).then_some(nxt)
        };
        Some(cur)
    }
}

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Node labels encoded by `mask`, offset so bit 0 maps to `base`.
pub fn mask_to_nodes(mask: u64, base: NodeIndex) -> Vec<NodeIndex> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        out.push(base + b);
        m &= m - 1;
    }
    out
}

/// Precomputed unions of per-element masks over any subset, split into a low
/// and high half so a query is two lookups.
pub(crate) struct UnionTable {
    split: usize,
    low: Vec<u64>,
    high: Vec<u64>,
}

impl UnionTable {
    pub(crate) fn new(masks: &[u64]) -> Self {
        let split = masks.len() / 2;
        UnionTable {
            split,
            low: Self::table(&masks[..split]),
            high: Self::table(&masks[split..]),
        }
    }

    fn table(masks: &[u64]) -> Vec<u64> {
        let mut t = vec![0u64; 1 << masks.len()];
        for s in 1..t.len() {
            let b = s.trailing_zeros() as usize;
            t[s] = t[s & (s - 1)] | masks[b];
        }
        t
    }

    #[inline]
    pub(crate) fn union(&self, subset: u64) -> u64 {
        let lo = subset & ((1u64 << self.split) - 1);
        self.low[lo as usize] | self.high[(subset >> self.split) as usize]
    }
}
