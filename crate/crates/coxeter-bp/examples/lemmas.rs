//! Root-system lemmas checked over every parabolic subset.

use coxeter_bp::RootSystem;

fn main() -> coxeter_bp::Result<()> {
    for (tag, rank) in [("A", 4), ("B", 4), ("D", 5), ("E", 6), ("F", 4), ("G", 2)] {
        let rs = RootSystem::build(tag, Some(rank))?;
        let simple = rs.verify_simple_root_lemma_all();
        let union = rs.verify_union_lemma_all();
        println!(
            "{}: simple-root lemma {} cases ({} violations), union lemma {} cases ({} violations)",
            rs.system().name(),
            simple.checked,
            simple.violations.len(),
            union.checked,
            union.violations.len()
        );
    }
    Ok(())
}
