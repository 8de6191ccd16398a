#![allow(dead_code)]

use pointfree::{all_posets, clopup_frame, Frame, Poset};

/// Every finite frame with at most `max_elements` elements, once up to
/// isomorphism, smallest duals first.
pub fn frames_with_at_most(max_elements: usize) -> Vec<Frame> {
    let mut out = Vec::new();
    // a dual with n points has at least n + 1 upsets
    for n in 1..=(max_elements - 1).min(7) {
        for p in &all_posets(n).unwrap().representatives {
            if upset_count(p) <= max_elements {
                out.push(clopup_frame(p).into_frame());
            }
        }
    }
    out
}

fn upset_count(p: &Poset) -> usize {
    p.upsets().len()
}

/// Every relation on `n` points, as a matrix, that is a partial order.
pub fn labelled_posets(n: usize) -> Vec<Vec<Vec<bool>>> {
    let off: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << off.len() {
        let mut le = vec![vec![false; n]; n];
        for i in 0..n {
            le[i][i] = true;
        }
        for (b, &(i, j)) in off.iter().enumerate() {
            le[i][j] = mask >> b & 1 == 1;
        }
        if is_partial_order(&le) {
            out.push(le);
        }
    }
    out
}

/// Partial orders on `n` points in which `i <= j` implies `i <= j` as
/// integers. Every poset has such a labelling.
pub fn naturally_labelled_posets(n: usize) -> Vec<Vec<Vec<bool>>> {
    let upper: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << upper.len() {
        let mut le = vec![vec![false; n]; n];
        for i in 0..n {
            le[i][i] = true;
        }
        for (b, &(i, j)) in upper.iter().enumerate() {
            le[i][j] = mask >> b & 1 == 1;
        }
        if is_partial_order(&le) {
            out.push(le);
        }
    }
    out
}

pub fn is_partial_order(le: &[Vec<bool>]) -> bool {
    let n = le.len();
    for i in 0..n {
        if !le[i][i] {
            return false;
        }
        for j in 0..n {
            if i != j && le[i][j] && le[j][i] {
                return false;
            }
            for k in 0..n {
                if le[i][j] && le[j][k] && !le[i][k] {
                    return false;
                }
            }
        }
    }
    true
}

/// Lexicographically least row-major matrix over all `n!` relabellings.
pub fn brute_canonical(le: &[Vec<bool>]) -> Vec<bool> {
    let n = le.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    permute(&mut perm, 0, &mut |p| {
        let enc: Vec<bool> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| le[p[i]][p[j]]).collect();
        if best.as_ref().is_none_or(|b| enc < *b) {
            best = Some(enc);
        }
    });
    best.unwrap()
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

pub fn matrix(p: &Poset) -> Vec<Vec<bool>> {
    (0..p.len()).map(|i| (0..p.len()).map(|j| p.le(i, j)).collect()).collect()
}

/// All functions `[0, n) -> [0, m)` as tables.
pub fn all_tables(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (0..m).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}
