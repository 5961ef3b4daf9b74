//! Schubert polynomials, structure constants and structure matrices.

use coxeter_bp::schubert::{schubert_polynomial, SchubertCalculus};
use coxeter_bp::CoxeterSystem;

fn main() -> coxeter_bp::Result<()> {
    for w in [vec![1, 3, 2], vec![2, 3, 1], vec![1, 4, 3, 2]] {
        println!("S_{w:?} = {}", schubert_polynomial(&w)?.poly);
    }

    let calc = SchubertCalculus::new();
    let c = calc.structure_constant(&[1, 3, 2], &[1, 3, 2], &[2, 3, 1]);
    println!("coefficient of S_231 in S_132^2: {c}");

    let a3 = CoxeterSystem::build("A", Some(3))?;
    let w = a3.from_permutation(&[2, 4, 3, 1])?;
    for k in 1..w.length() {
        let m = a3.structure_matrix_with(&calc, &w, k)?;
        println!(
            "k = {k}: {}x{} matrix, upper unitriangular {}",
            m.rows.len(),
            m.cols.len(),
            m.is_upper_unitriangular()
        );
        for (u, v) in a3.canonical_bijection(&w, k)? {
            println!("  {} <-> {}", a3.format_element(&u), a3.format_element(&v));
        }
    }

    let a7 = CoxeterSystem::build("A", Some(7))?;
    let w = a7.from_permutation(&[6, 5, 1, 7, 8, 4, 3, 2])?;
    let u = a7.from_permutation(&[3, 6, 1, 5, 2, 7, 8, 4])?;
    let dual = a7.poincare_dual(&w, &u, &[2, 0, 3, 5, 1, 6, 4])?;
    println!("dual of 36152784 in [e, 65178432]: {}", a7.format_element(&dual.image));
    Ok(())
}
