//! Normal forms, products and parabolic decompositions.

use coxeter_bp::{CoxeterSystem, GenSet, Side};

fn main() -> coxeter_bp::Result<()> {
    let a3 = CoxeterSystem::build("A", Some(3))?;
    let w = a3.from_permutation(&[4, 2, 3, 1])?;
    println!("4231 has normal form {:?}, length {}", w.labels(), w.length());

    let s1 = a3.generator(0)?;
    let s2 = a3.generator(1)?;
    let p = a3.multiply(&s1, &s2)?;
    println!("s1 s2 = {}", a3.format_element(&p));

    let j = GenSet::from_labels([1, 2]);
    let d = a3.parabolic_decompose(&w, j, Side::Right)?;
    println!(
        "w = w^J w_J with w^J = {} and w_J = {}",
        a3.format_element(&d.quotient_part),
        a3.format_element(&d.parabolic_part)
    );

    let h3 = CoxeterSystem::build("H", Some(3))?;
    let w0 = h3.longest_element(h3.all())?;
    println!("{} has {} elements and w0 has length {}", h3.name(), h3.elements(None)?.len(), w0.length());

    let c2 = CoxeterSystem::build("affineC2", None)?;
    let w = c2.parse_word("srstrsr")?;
    println!("in {}, srstrsr reduces to {}", c2.name(), c2.format_element(&w));
    Ok(())
}
