//! Graphviz output for Hasse diagrams.

use std::fmt::Write;

use crate::bp::BpPoset;
use crate::bruhat::BruhatInterval;
use crate::system::CoxeterSystem;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

/// Hasse diagram of an interval, bottom to top.
pub fn interval_dot(sys: &CoxeterSystem, interval: &BruhatInterval) -> String {
    let mut out = String::from("digraph interval {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for (i, v) in interval.elements().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(&sys.format_element(v)));
    }
    for (k, rank) in interval.ranks.iter().enumerate() {
        let start: usize = interval.ranks[..k].iter().map(Vec::len).sum();
        let ids: Vec<String> = (start..start + rank.len()).map(|i| format!("n{i}")).collect();
        let _ = writeln!(out, "  {{ rank=same; {} }}", ids.join("; "));
    }
    for [lo, hi] in interval.covers(sys) {
        let _ = writeln!(out, "  n{lo} -> n{hi} [arrowhead=none];");
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of a BP poset; blocks are labelled by their generators.
pub fn bp_poset_dot(sys: &CoxeterSystem, poset: &BpPoset) -> String {
    let mut out = String::from("digraph bp {\n  rankdir=BT;\n  node [shape=circle];\n");
    for (i, b) in poset.blocks.iter().enumerate() {
        let names: Vec<&str> = b.iter().map(|s| sys.label(s)).collect();
        let _ = writeln!(out, "  b{i} [label={}];", quote(&names.join(",")));
    }
    for [lo, hi] in poset.covers() {
        let _ = writeln!(out, "  b{lo} -> b{hi} [arrowhead=none];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genset::GenSet;

    #[test]
    fn dot_shapes() {
        let a2 = CoxeterSystem::build("A", Some(2)).unwrap();
        let w0 = a2.longest_element(a2.all()).unwrap();
        let iv = a2.interval(&w0, GenSet::EMPTY).unwrap();
        let dot = interval_dot(&a2, &iv);
        assert_eq!(dot.matches("->").count(), 8);
        assert!(dot.contains("\"321\""));
        let a3 = CoxeterSystem::build("A", Some(3)).unwrap();
        let w = a3.from_permutation(&[4, 2, 3, 1]).unwrap();
        let dot = bp_poset_dot(&a3, &a3.bp_poset(&w).unwrap());
        assert_eq!(dot.matches("->").count(), 2);
    }
}
