//! Grassmannian BP decompositions and the affine C2 counterexample.

use coxeter_bp::{CoxeterSystem, GenSet};

fn main() -> coxeter_bp::Result<()> {
    let a3 = CoxeterSystem::build("A", Some(3))?;
    for p in [[4, 2, 3, 1], [3, 4, 1, 2], [2, 3, 4, 1]] {
        let w = a3.from_permutation(&p)?;
        println!(
            "{}: rationally smooth {}, Grassmannian BP leaf {}",
            a3.format_element(&w),
            a3.is_rationally_smooth(&w, GenSet::EMPTY)?,
            a3.grassmannian_bp(&w)?.map_or("none", |s| a3.label(s))
        );
    }

    let c2 = CoxeterSystem::build("affineC2", None)?;
    let w = c2.parse_word("srstrsr")?;
    println!("affine C2, w = {}", c2.format_element(&w));
    println!("  P(w) = {}", c2.poincare(&w, GenSet::EMPTY)?);
    println!("  rationally smooth: {}", c2.is_rationally_smooth(&w, GenSet::EMPTY)?);
    for label in ["r", "s", "t"] {
        let leaf = c2.parse_genset(label)?;
        let j = c2.all().difference(leaf);
        println!("  J = S \\ {{{label}}}: BP {}", c2.is_bp(&w, j)?);
    }
    Ok(())
}
