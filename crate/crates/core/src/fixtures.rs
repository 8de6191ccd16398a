//! Small named lattices and posets used throughout tests, docs and the CLI.

use crate::frames::Frame;
use crate::order::Poset;

/// The chain with `n` elements as a frame. `n >= 1`.
pub fn chain_frame(n: usize) -> Frame {
    Frame::from_poset(Poset::chain(n)).expect("chains are frames")
}

/// Two-element frame `{0 < 1}`.
pub fn c2() -> Frame {
    chain_frame(2)
}

/// Three-element chain `{0 < m < 1}`, indexed `0, 1, 2`.
pub fn c3() -> Frame {
    chain_frame(3)
}

/// Four-element Boolean algebra `{0, a, b, 1}`, indexed `0, 1, 2, 3`.
pub fn b4() -> Frame {
    boolean_frame(2)
}

/// Boolean algebra of subsets of a `k`-element set; element `i` is the
/// subset with bitmask `i`.
pub fn boolean_frame(k: usize) -> Frame {
    let n = 1usize << k;
    let poset = Poset::from_fn(n, |i, j| i & !j == 0).expect("subset order");
    Frame::from_poset(poset).expect("Boolean algebras are frames")
}

/// The diamond M3: `0 < a, b, c < 1`. Modular but not distributive.
pub fn m3() -> Poset {
    Poset::from_pairs(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)]).expect("M3")
}

/// The pentagon N5: `0 < a < b < 1`, `0 < c < 1`.
pub fn n5() -> Poset {
    Poset::from_pairs(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 4), (3, 4)])
        .expect("N5")
}
