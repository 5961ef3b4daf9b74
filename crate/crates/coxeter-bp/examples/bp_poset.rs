//! BP families, closures and BP posets.

use coxeter_bp::export::bp_poset_dot;
use coxeter_bp::{CoxeterSystem, GenSet};

fn show(sys: &CoxeterSystem, j: GenSet) -> String {
    let names: Vec<&str> = j.iter().map(|s| sys.label(s)).collect();
    format!("{{{}}}", names.join(","))
}

fn main() -> coxeter_bp::Result<()> {
    let a3 = CoxeterSystem::build("A", Some(3))?;
    for p in [[4, 2, 3, 1], [3, 4, 1, 2]] {
        let w = a3.from_permutation(&p)?;
        let family = a3.bp_family(&w)?;
        let members: Vec<String> = family.members.iter().map(|&m| show(&a3, m)).collect();
        println!("BP({}) = {{{}}}", a3.format_element(&w), members.join(", "));
        println!("  closure of {{2}}: {}", show(&a3, a3.closure(&w, GenSet::from_labels([2]))?));
    }

    let w = a3.from_permutation(&[4, 2, 3, 1])?;
    let poset = a3.bp_poset(&w)?;
    println!("BP poset of 4231: {}", serde_json::to_string(&poset.to_json()).expect("serializable"));
    print!("{}", bp_poset_dot(&a3, &poset));

    let a7 = CoxeterSystem::build("A", Some(7))?;
    let w = a7.from_permutation(&[6, 5, 1, 7, 8, 4, 3, 2])?;
    let poset = a7.bp_poset(&w)?;
    let blocks: Vec<String> = poset.blocks.iter().map(|&b| show(&a7, b)).collect();
    println!("65178432 has blocks {} and {} order ideals", blocks.join(" "), poset.ideals().len());
    Ok(())
}
