//! Graphviz output: one node per element, edges for the covering relation
//! only, drawn bottom to top.

use std::fmt::Write;

use crate::bitset::BitSet;
use crate::order::Poset;

const FILLS: [&str; 4] = ["lightblue", "palegreen", "khaki", "lightpink"];

/// Hasse diagram of `poset`. Elements of `highlight[k]` are filled with the
/// `k`-th colour; an element in several sets takes the first.
pub fn poset_dot(poset: &Poset, name: &str, highlight: &[BitSet]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph {} {{", quote(name));
    s.push_str("  rankdir=BT;\n  node [shape=circle];\n");
    for i in 0..poset.len() {
        let _ = write!(s, "  n{i} [label={}", quote(&poset.label(i)));
        if let Some(k) = highlight.iter().position(|set| set.contains(i)) {
            let _ = write!(s, ", style=filled, fillcolor={}", FILLS[k % FILLS.len()]);
        }
        s.push_str("];\n");
    }
    for (lo, hi) in poset.covers() {
        let _ = writeln!(s, "  n{lo} -> n{hi};");
    }
    s.push_str("}\n");
    s
}

fn quote(text: &str) -> String {
    format!("\"{}\"", text.replace('\\', "\\\\").replace('"', "\\\""))
}
