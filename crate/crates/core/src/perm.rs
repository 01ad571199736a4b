//! Permutation utilities: reduced words, shuffles, compositions.
//!
//! Permutations on `n` letters are stored in one-line notation as a
//! `Vec<usize>` of images of `0..n`. All enumerations are in a fixed
//! lexicographic order so that downstream matrix sums are reproducible.

use alloc::vec;
use alloc::vec::Vec;

pub fn is_permutation(sigma: &[usize]) -> bool {
    let n = sigma.len();
    let mut seen = vec![false; n];
    for &v in sigma {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

pub fn inverse(sigma: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; sigma.len()];
    for (i, &v) in sigma.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

pub fn inversions(sigma: &[usize]) -> usize {
    let n = sigma.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if sigma[i] > sigma[j] {
                count += 1;
            }
        }
    }
    count
}

/// A reduced word for `sigma` as a sequence of adjacent transpositions,
/// computed by bubble-sort inversion elimination (smallest descent first).
/// The entries are 0-based: letter `i` swaps positions `i` and `i+1`.
/// Reading the word left to right gives `sigma` as a composite of functions
/// with the leftmost letter applied last.
pub fn reduced_word(sigma: &[usize]) -> Vec<usize> {
    debug_assert!(is_permutation(sigma));
    let mut s = sigma.to_vec();
    let mut collected = Vec::new();
    loop {
        let Some(i) = (0..s.len().saturating_sub(1)).find(|&i| s[i] > s[i + 1]) else {
            break;
        };
        s.swap(i, i + 1);
        collected.push(i);
    }
    collected.reverse();
    collected
}

/// All permutations of `n` letters in lexicographic order of their one-line
/// notation.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        if n < 2 {
            break;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// All (a,b)-shuffles: permutations of `a + b` letters increasing on the
/// first `a` positions and on the last `b` positions, enumerated in
/// lexicographic order of the image set of the first block.
pub fn shuffles(a: usize, b: usize) -> Vec<Vec<usize>> {
    let n = a + b;
    let mut out = Vec::new();
    for subset in combinations(n, a) {
        let mut sigma = vec![0; n];
        let mut in_first = vec![false; n];
        for (i, &pos) in subset.iter().enumerate() {
            sigma[i] = pos;
            in_first[pos] = true;
        }
        let rest: Vec<usize> = (0..n).filter(|&p| !in_first[p]).collect();
        for (j, &pos) in rest.iter().enumerate() {
            sigma[a + j] = pos;
        }
        out.push(sigma);
    }
    out
}

/// k-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        if k == 0 {
            break;
        }
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// The permutation moving a leading block of `a` factors past a trailing
/// block of `b` factors.
pub fn block_transposition(a: usize, b: usize) -> Vec<usize> {
    let mut sigma = Vec::with_capacity(a + b);
    for i in 0..a {
        sigma.push(i + b);
    }
    for j in 0..b {
        sigma.push(j);
    }
    sigma
}

/// Compositions of `total` into exactly `parts` summands, each at least
/// `min`, in lexicographic order.
pub fn compositions(total: usize, parts: usize, min: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = Vec::with_capacity(parts);
    fn rec(total: usize, parts: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            if total >= min {
                cur.push(total);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let reserve = min * (parts - 1);
        if total < min + reserve {
            return;
        }
        for first in min..=total - reserve {
            cur.push(first);
            rec(total - first, parts - 1, min, cur, out);
            cur.pop();
        }
    }
    rec(total, parts, min, &mut cur, &mut out);
    out
}
