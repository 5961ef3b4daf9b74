//! The pattern-based BP test for permutations against the exhaustive one.

use coxeter_bp::bp::type_a;
use coxeter_bp::{CoxeterSystem, GenSet};

fn main() -> coxeter_bp::Result<()> {
    let p = [4, 2, 3, 1];
    // position interval [a, b] stands for J = {s_a, ..., s_(b-1)}
    for (a, b) in [(1, 2), (2, 3), (1, 3)] {
        match type_a::find_bad_pattern(&p, a, b) {
            Some(occ) => println!("positions [{a},{b}]: not BP, {:?} at {:?}", occ.pattern, occ.positions),
            None => println!("positions [{a},{b}]: BP"),
        }
    }

    let a5 = CoxeterSystem::build("A", Some(5))?;
    let mut checked = 0;
    for perm in coxeter_bp::perm::all_permutations(6) {
        let w = a5.from_permutation(&perm)?;
        for j in a5.all().subsets() {
            assert_eq!(type_a::is_bp(&perm, j), a5.is_bp(&w, j)?);
            checked += 1;
        }
        assert_eq!(a5.typea_bp_poset(&w)?, a5.bp_poset(&w)?);
    }
    println!("pattern test agrees with the definition on {checked} pairs in S6");
    println!("closure of {{3}} for 351624: {:?}", type_a::closure(&[3, 5, 1, 6, 2, 4], GenSet::from_labels([3]))?.labels());
    Ok(())
}
