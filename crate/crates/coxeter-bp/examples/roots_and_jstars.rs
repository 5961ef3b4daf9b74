//! Positive roots, J-stars and non-BP witnesses.

use coxeter_bp::{GenSet, RootSystem};

fn main() -> coxeter_bp::Result<()> {
    let b3 = RootSystem::build("B", Some(3))?;
    println!("B3 has {} positive roots", b3.len());
    for r in b3.positive_roots() {
        println!("  {r:?} (height {})", r.height());
    }

    let j = GenSet::from_labels([1]);
    for star in b3.enumerate_jstars(j) {
        let arms: Vec<String> = star.arms.iter().map(|&(c, g)| format!("{c}*{:?}", b3.root(g))).collect();
        println!("J-star: beta = {:?}, arms [{}], tau = {:?}", b3.root(star.beta), arms.join(", "), b3.root(star.tau));
    }

    let a3 = RootSystem::build("A", Some(3))?;
    let sys = a3.system();
    let w = sys.from_permutation(&[4, 2, 3, 1])?;
    for label in 1..=3 {
        let j = GenSet::from_labels([label]);
        println!("4231 with J = {{{label}}}: BP by J-stars = {}", a3.jstar_bp_test(&w, j)?);
    }
    Ok(())
}
