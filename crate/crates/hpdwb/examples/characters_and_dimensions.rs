//! Irreducible characters of GL(n) and Sp(2q) and their dimensions.
//!
//! Run with: cargo run --example characters_and_dimensions

use hpdwb::characters::{dim_irrep, schur_gl, schur_sp, Group, Label};
use hpdwb::partition::{enumerate_rect, Partition};

fn main() {
    let lambda = Partition::of(&[2, 1]);

    // GL(3): the character is the Schur polynomial s_{21}(x1,x2,x3)
    let gl = schur_gl(&lambda, 3).unwrap();
    println!("s_{{2,1}} in GL(3): {} monomials, dimension {}", gl.num_terms(), gl.eval_at_ones());

    // Sp(4): Laurent polynomial invariant under signed permutations
    let sp = schur_sp(&lambda, 2).unwrap();
    println!("sp_{{2,1}} in Sp(4): {} monomials, dimension {}", sp.num_terms(), sp.eval_at_ones());

    // evaluation at 1 agrees with the product formula; dim_irrep checks
    // both routes internally and errors on any mismatch
    println!("\ndimensions in Sp(6) for shapes in a 3x2 box:");
    for shape in enumerate_rect(3, 2) {
        let d = dim_irrep(Group::Sp(3), &Label::One(shape.clone())).unwrap();
        println!("  {:?}: {d}", shape.parts());
    }
}
