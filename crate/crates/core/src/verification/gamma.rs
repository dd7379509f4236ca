use crate::NodeIndex;

/// Prefix counts of removed nodes: `removed[k]` = |S ∩ [1, k]|.
fn removed_prefix(s: &[NodeIndex], n: usize) -> Vec<usize> {
    let mut mark = vec![false; n + 1];
    for &x in s {
        if (1..=n).contains(&x) {
            mark[x] = true;
        }
    }
    let mut prefix = vec![0usize; n + 1];
    for k in 1..=n {
        prefix[k] = prefix[k - 1] + mark[k] as usize;
    }
    prefix
}

fn good_with(prefix: &[usize], x: NodeIndex, gamma: f64, n: usize) -> bool {
    let keeps = |lo: usize, hi: usize| {
        let size = hi + 1 - lo;
        let kept = size - (prefix[hi] - prefix[lo - 1]);
        kept as f64 >= gamma * size as f64 - 1e-12
    };
    // backward windows {x-r+1, …, x}; beyond r = x they stop changing
    (1..=x).all(|r| keeps(x + 1 - r, x)) && (x + 1..=n).all(|hi| keeps(x + 1, hi))
}

/// Whether `x` keeps at least a `gamma` fraction of every backward window
/// `{x-r+1, …, x}` and forward window `{x+1, …, x+r}` outside `s`, with
/// windows clipped to `[1, n]`.
pub fn gamma_good(x: NodeIndex, s: &[NodeIndex], gamma: f64, n: usize) -> bool {
    if x == 0 || x > n {
        return false;
    }
    good_with(&removed_prefix(s, n), x, gamma, n)
}

/// Number of nodes outside `s` that are `gamma`-good.
pub fn count_gamma_good(s: &[NodeIndex], gamma: f64, n: usize) -> usize {
    let prefix = removed_prefix(s, n);
    (1..=n)
        .filter(|&x| prefix[x] == prefix[x - 1] && good_with(&prefix, x, gamma, n))
        .count()
}
