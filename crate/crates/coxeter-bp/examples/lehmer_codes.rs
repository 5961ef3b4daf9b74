//! Generalized Lehmer codes: explicit constructions and exhaustive search.

use coxeter_bp::lehmer::{SearchOptions, SearchOutcome};
use coxeter_bp::{CoxeterSystem, GenSet};

fn main() -> coxeter_bp::Result<()> {
    let a4 = CoxeterSystem::build("A", Some(4))?;
    let w = a4.from_permutation(&[5, 2, 1, 3, 4])?;
    let code = a4.quotient_lehmer_code(&w, GenSet::from_labels([4]))?;
    println!("[e, 52134]^J with J = {{4}}: chains {:?}", code.chains);
    for entry in &code.entries {
        println!("  {:?} -> {}", entry.tuple, a4.format_element(&entry.element));
    }

    let options = SearchOptions::default();
    for (tag, rank) in [("B", 3), ("H", 3), ("F", 4)] {
        let sys = CoxeterSystem::build(tag, Some(rank))?;
        let w0 = sys.longest_element(sys.all())?;
        let iv = sys.interval_capped(&w0, GenSet::EMPTY, w0.length())?;
        match sys.search_code(&iv, &options) {
            SearchOutcome::Found { code } => println!("{}: code with chains {:?}", sys.name(), code.chains),
            SearchOutcome::NoneExists { candidates } => {
                println!("{}: no code exists, refuted chain multisets {candidates:?}", sys.name())
            }
            SearchOutcome::Unknown { .. } => println!("{}: undecided within the budget", sys.name()),
        }
    }
    Ok(())
}
