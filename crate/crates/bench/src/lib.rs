//! Input grids shared by the benchmarks.

use seifert_core::{gcd, FiberPair, SeifertInvariant};

/// Coprime pairs with `1 <= alpha <= max_alpha` and `|beta| <= max_beta`.
pub fn coprime_pairs(max_alpha: i64, max_beta: i64) -> Vec<FiberPair> {
    (1..=max_alpha)
        .flat_map(|a| (-max_beta..=max_beta).map(move |b| FiberPair::new(a, b)))
        .filter(|p| gcd(p.alpha, p.beta) == 1)
        .collect()
}

/// Closed invariants of the given genus with exactly `len` pairs drawn as a
/// multiset from `pairs`, truncated to `limit` entries.
pub fn closed_invariants(genus_code: i64, pairs: &[FiberPair], len: usize, limit: usize) -> Vec<SeifertInvariant> {
    let mut out = Vec::new();
    let mut idx = vec![0usize; len];
    loop {
        if out.len() >= limit {
            return out;
        }
        let chosen = idx.iter().map(|&i| pairs[i]).collect();
        out.push(SeifertInvariant::new(genus_code, 0, chosen).expect("pairs are coprime"));
        // Next non-decreasing index vector.
        let mut k = len;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if idx[k] + 1 < pairs.len() {
                let v = idx[k] + 1;
                for slot in &mut idx[k..] {
                    *slot = v;
                }
                break;
            }
        }
    }
}
