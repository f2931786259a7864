//! Enumeration of all n-element lattices up to isomorphism.
//!
//! Elements are added one at a time in a linear-extension order, keeping the
//! prefix a meet-semilattice at every step: a new element picks a down-set D
//! containing the bottom such that D intersected with any existing down-set
//! has a greatest element. The final element must lie above everything, so
//! each leaf is a finite meet-semilattice with top, hence a lattice.
//! Isomorphic duplicates are removed with a lexicographically minimal
//! adjacency certificate over invariant-respecting relabelings.

use std::collections::HashSet;

use super::{guard_limit, FiniteLattice, LatticeError};

/// All isomorphism classes of lattices with exactly `n` elements.
/// Guarded at n <= 8 by default (override via `LATTICEFORGE_GUARD`).
pub fn enumerate_lattices(n: usize) -> Result<Vec<FiniteLattice>, LatticeError> {
    let limit = guard_limit(8);
    if n > limit {
        return Err(LatticeError::SizeLimitExceeded {
            requested: n,
            limit,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut down = vec![0u64; n];
    down[0] = 1;
    extend(n, 1, &mut down, &mut seen, &mut out);
    Ok(out)
}

fn extend(
    n: usize,
    k: usize,
    down: &mut Vec<u64>,
    seen: &mut HashSet<Vec<u64>>,
    out: &mut Vec<FiniteLattice>,
) {
    if k == n {
        emit(n, down, seen, out);
        return;
    }
    let full: u64 = (1 << k) - 1;
    if k == n - 1 {
        // The last element is the top: its down-set is the whole prefix.
        if candidate_ok(k, full, down) {
            down[k] = full | (1 << k);
            extend(n, k + 1, down, seen, out);
            down[k] = 0;
        }
        return;
    }
    // Any down-closed subset containing the bottom can be the strict
    // down-set of the new element, provided meets with the prefix exist.
    let mut d = 1u64;
    loop {
        if candidate_ok(k, d, down) {
            down[k] = d | (1 << k);
            extend(n, k + 1, down, seen, out);
            down[k] = 0;
        }
        if d == full {
            break;
        }
        d = (d + 2) | 1; // next subset containing bit 0
    }
}

/// D is a valid strict down-set for the next element: down-closed, and its
/// intersection with every existing down-set is itself a down-set of its
/// greatest member (so the meet exists).
fn candidate_ok(k: usize, d: u64, down: &[u64]) -> bool {
    for u in 0..k {
        if d & (1 << u) != 0 && down[u] | d != d {
            return false;
        }
    }
    for u in 0..k {
        let i = d & down[u];
        let m = 63 - i.leading_zeros() as usize;
        if i != down[m] {
            return false;
        }
    }
    true
}

fn emit(n: usize, down: &[u64], seen: &mut HashSet<Vec<u64>>, out: &mut Vec<FiniteLattice>) {
    let cert = certificate(n, down);
    if seen.insert(cert) {
        let mut leq = vec![false; n * n];
        for y in 0..n {
            for x in 0..n {
                if down[y] & (1 << x) != 0 {
                    leq[x * n + y] = true;
                }
            }
        }
        let lattice = FiniteLattice::from_leq(n, leq, None)
            .expect("generated meet-semilattice with top must be a lattice");
        out.push(lattice);
    }
}

/// Minimal relabeled adjacency bits over permutations that respect the
/// per-element invariant (|down|, #lower covers, #upper covers); prefixed by
/// the sorted invariant sequence so unequal profiles never collide.
fn certificate(n: usize, down: &[u64]) -> Vec<u64> {
    let leq = |x: usize, y: usize| down[y] & (1 << x) != 0;
    let mut inv = Vec::with_capacity(n);
    for x in 0..n {
        let d = down[x].count_ones() as u64;
        let mut lc = 0u64;
        let mut uc = 0u64;
        for z in 0..n {
            if z != x && leq(z, x) && is_cover(n, down, z, x) {
                lc += 1;
            }
            if z != x && leq(x, z) && is_cover(n, down, x, z) {
                uc += 1;
            }
        }
        inv.push((d << 16) | (lc << 8) | uc);
    }
    // Group elements into blocks of equal invariant, ordered by invariant.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| inv[x]);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &x in &order {
        match blocks.last_mut() {
            Some(b) if inv[b[0]] == inv[x] => b.push(x),
            _ => blocks.push(vec![x]),
        }
    }
    let mut best: Option<Vec<u64>> = None;
    let mut perm = Vec::with_capacity(n);
    min_bits_over_blocks(n, down, &blocks, 0, &mut perm, &mut best);
    let bits = best.expect("at least one permutation exists");
    let mut cert: Vec<u64> = order.iter().map(|&x| inv[x]).collect();
    cert.extend(bits);
    cert
}

fn min_bits_over_blocks(
    n: usize,
    down: &[u64],
    blocks: &[Vec<usize>],
    bi: usize,
    perm: &mut Vec<usize>,
    best: &mut Option<Vec<u64>>,
) {
    if bi == blocks.len() {
        let leq = |x: usize, y: usize| down[y] & (1 << x) != 0;
        let mut bits = vec![0u64; (n * n + 63) / 64];
        let mut pos = 0;
        for p in 0..n {
            for q in 0..n {
                if leq(perm[p], perm[q]) {
                    bits[pos / 64] |= 1 << (pos % 64);
                }
                pos += 1;
            }
        }
        if best.as_ref().map_or(true, |b| bits < *b) {
            *best = Some(bits);
        }
        return;
    }
    permute_block(n, down, blocks, bi, 0, &mut blocks[bi].clone(), perm, best);
}

fn permute_block(
    n: usize,
    down: &[u64],
    blocks: &[Vec<usize>],
    bi: usize,
    i: usize,
    remaining: &mut Vec<usize>,
    perm: &mut Vec<usize>,
    best: &mut Option<Vec<u64>>,
) {
    if i == blocks[bi].len() {
        min_bits_over_blocks(n, down, blocks, bi + 1, perm, best);
        return;
    }
    for idx in 0..remaining.len() {
        let x = remaining.remove(idx);
        perm.push(x);
        permute_block(n, down, blocks, bi, i + 1, remaining, perm, best);
        perm.pop();
        remaining.insert(idx, x);
    }
}

fn is_cover(n: usize, down: &[u64], x: usize, y: usize) -> bool {
    let leq = |a: usize, b: usize| down[b] & (1 << a) != 0;
    (0..n).all(|z| z == x || z == y || !(leq(x, z) && leq(z, y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{are_isomorphic, chain, m3, n5};

    #[test]
    fn tiny_counts() {
        assert_eq!(enumerate_lattices(1).unwrap().len(), 1);
        assert_eq!(enumerate_lattices(2).unwrap().len(), 1);
        assert_eq!(enumerate_lattices(3).unwrap().len(), 1);
        assert_eq!(enumerate_lattices(4).unwrap().len(), 2);
    }

    #[test]
    fn five_element_classes() {
        let ls = enumerate_lattices(5).unwrap();
        assert_eq!(ls.len(), 5);
        assert!(ls.iter().any(|l| are_isomorphic(l, &m3()).is_some()));
        assert!(ls.iter().any(|l| are_isomorphic(l, &n5()).is_some()));
        assert!(ls.iter().any(|l| are_isomorphic(l, &chain(5)).is_some()));
    }

    #[test]
    fn six_element_count() {
        assert_eq!(enumerate_lattices(6).unwrap().len(), 15);
    }

    #[test]
    fn classes_are_pairwise_nonisomorphic() {
        let ls = enumerate_lattices(5).unwrap();
        for i in 0..ls.len() {
            for j in 0..i {
                assert!(are_isomorphic(&ls[i], &ls[j]).is_none());
            }
        }
    }

    #[test]
    fn guard_rejects_oversized_requests() {
        assert!(matches!(
            enumerate_lattices(9),
            Err(LatticeError::SizeLimitExceeded { .. })
        ));
    }
}
