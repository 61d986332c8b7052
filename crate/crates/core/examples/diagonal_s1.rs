//! Diagonal Leibniz cohomology of Vect S¹ assembled from the W₁ table.
//! Degrees up to `computed` come from the engine, the rest from the closed
//! form one class in each degree ≡ 0, 3 mod 4.

use leibniz_cohomology::algebra::builtin;
use leibniz_cohomology::cohomology::{
    cohomology_with, diagonal_s1_dims, w1_closed_form_dim, EngineOptions,
};
use leibniz_cohomology::Theory;

fn main() {
    let computed = 6;
    let top = 12;
    let w1 = builtin("w1", 1).unwrap();
    let opts = EngineOptions {
        representative_budget: 0,
        ..Default::default()
    };
    let engine = cohomology_with(&w1, Theory::Leibniz, computed, &opts)
        .unwrap()
        .dims();
    let table: Vec<usize> = (0..=top + 1)
        .map(|q| {
            engine
                .get(q)
                .copied()
                .unwrap_or_else(|| w1_closed_form_dim(q))
        })
        .collect();

    let asm = diagonal_s1_dims(&table, top).unwrap();
    println!("degree 0: {}", asm.degree_zero);
    for d in &asm.degrees {
        let names: Vec<String> = d
            .generators
            .iter()
            .map(|g| format!("{} [{}]", g.name, g.kind))
            .collect();
        println!("degree {:>2}: {}  {}", d.degree, d.dim, names.join(", "));
    }
}
