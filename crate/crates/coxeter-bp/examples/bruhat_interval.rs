//! Lower Bruhat intervals, Poincare polynomials and Graphviz export.

use coxeter_bp::export::interval_dot;
use coxeter_bp::{CoxeterSystem, GenSet};

fn main() -> coxeter_bp::Result<()> {
    let a3 = CoxeterSystem::build("A", Some(3))?;
    for p in [[4, 2, 3, 1], [3, 4, 1, 2], [2, 4, 1, 3]] {
        let w = a3.from_permutation(&p)?;
        let iv = a3.interval(&w, GenSet::EMPTY)?;
        let poly = iv.poincare();
        println!(
            "{}: {} elements, P = {poly}, rationally smooth: {}",
            a3.format_element(&w),
            iv.len(),
            poly.is_palindromic()
        );
    }

    let u = a3.from_permutation(&[2, 1, 3, 4])?;
    let w = a3.from_permutation(&[3, 4, 1, 2])?;
    println!("2134 <= 3412: {}", a3.bruhat_leq(&u, &w)?);

    let w0 = a3.longest_element(a3.all())?;
    let j = GenSet::from_labels([2, 3]);
    let wj = a3.quotient_part(&w0, j);
    let quotient = a3.interval(&wj, j)?;
    println!("quotient [e, w0^J] for J = {{2,3}}: ranks {:?}", quotient.rank_sizes());
    print!("{}", interval_dot(&a3, &quotient));
    Ok(())
}
