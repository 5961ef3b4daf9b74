//! Factoring w along a linear extension of its BP poset.

use coxeter_bp::CoxeterSystem;

fn main() -> coxeter_bp::Result<()> {
    let a7 = CoxeterSystem::build("A", Some(7))?;
    let w = a7.from_permutation(&[6, 5, 1, 7, 8, 4, 3, 2])?;
    let order = [2, 0, 3, 5, 1, 6, 4];
    // generators listed 0-based, top of the BP poset first
    let factors = a7.linear_extension_factorization(&w, &order)?;
    let mut product = a7.identity();
    for (i, f) in factors.iter().enumerate() {
        println!("w^({}) = {}", i + 1, a7.format_element(f));
        product = a7.multiply(&product, f)?;
    }
    assert_eq!(product, w);
    let total: usize = factors.iter().map(|f| f.length()).sum();
    println!("lengths add up: {total} = {}", w.length());
    Ok(())
}
