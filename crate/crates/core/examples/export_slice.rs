//! One homogeneous slice of the W₁ coboundary as an exact sparse matrix,
//! with its rank and kernel.

use leibniz_cohomology::algebra::builtin;
use leibniz_cohomology::cochain::{build_slice, export_slice};
use leibniz_cohomology::{kernel_basis, rank, Theory};

fn main() {
    let w1 = builtin("w1", 1).unwrap();
    let slice = build_slice(&w1, 2, 0, Theory::Leibniz).unwrap();
    print!("{}", export_slice(&slice));
    println!("rank {}", rank(&slice.matrix));
    for v in kernel_basis(&slice.matrix) {
        let terms: Vec<String> = v
            .entries()
            .iter()
            .map(|(i, c)| format!("({c})ε{:?}", slice.basis[*i]))
            .collect();
        println!("cocycle {}", terms.join(" + "));
    }
}
