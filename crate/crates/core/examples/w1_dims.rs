//! Leibniz and Lie cohomology of W₁ on the zero-weight subcomplex.
//!
//!     cargo run --release --example w1_dims -- 8

use leibniz_cohomology::algebra::builtin;
use leibniz_cohomology::cohomology::{cohomology_with, EngineOptions};
use leibniz_cohomology::Theory;

fn main() {
    let top: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let w1 = builtin("w1", 1).expect("builtin");
    let opts = EngineOptions {
        representative_budget: 40,
        ..Default::default()
    };

    for theory in [Theory::Leibniz, Theory::Lie] {
        let report = cohomology_with(&w1, theory, top, &opts).expect("within limits");
        println!("{theory}: d² = 0 checked: {}", report.d_squared_verified);
        println!("  q  cochains  rank d_q  dim");
        for d in &report.degrees {
            println!(
                "{:>3} {:>9} {:>9} {:>4}",
                d.degree, d.cochains, d.rank_out, d.dim
            );
        }
        for d in report.degrees.iter().filter(|d| d.dim > 0 && d.degree > 0) {
            for rep in &d.representatives {
                let terms: Vec<String> = rep
                    .entries()
                    .iter()
                    .map(|(k, v)| format!("({v})ε{k:?}"))
                    .collect();
                println!("  class in degree {}: {}", d.degree, terms.join(" + "));
            }
        }
    }
}
