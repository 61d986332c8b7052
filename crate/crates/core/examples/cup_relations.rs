//! The half-shuffle cup product on W₁ cochains and the relations among θ
//! and α.

use leibniz_cohomology::algebra::builtin;
use leibniz_cohomology::cohomology::{alpha_cocycle, theta_cocycle};
use leibniz_cohomology::cup::{cup, w1_relations, zinbiel_defect};
use leibniz_cohomology::Theory;

fn main() {
    let w1 = builtin("w1", 1).unwrap();
    let theta = theta_cocycle(&w1, Theory::Leibniz).unwrap();
    let alpha = alpha_cocycle(&w1).unwrap();
    println!("θ has {} entries, α has {}", theta.len(), alpha.len());
    println!("θ ∪ α has {} entries", cup(&theta, &alpha).unwrap().len());

    let z = zinbiel_defect(&alpha, &alpha, &alpha, &w1).unwrap();
    println!(
        "Zinbiel defect on (α, α, α): strictly zero = {}",
        z.strict_zero
    );

    for r in w1_relations(&w1).unwrap() {
        println!(
            "[{}] {}: {}",
            if r.passed { "ok" } else { "FAIL" },
            r.relation,
            r.detail
        );
    }
}
