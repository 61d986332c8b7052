//! The diagonal cocycles ω and β₁ on the Witt algebra: closedness on a
//! window of modes and a certificate that no zero-weight primitive exists.
//!
//!     cargo run --release --example witt_cocycles -- 6

use leibniz_cohomology::witt::{certify_nontrivial, verify_cocycle, WindowDecision, WittCocycle};
use leibniz_cohomology::Functional;

fn main() {
    let window: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    println!("ω(e₂, e₋₂) = {}", WittCocycle::OMEGA.eval(&[2, -2]));
    println!("β₁(e₁, e₁, e₋₂) = {}", WittCocycle::BETA1.eval(&[1, 1, -2]));

    for name in WittCocycle::NAMES {
        let c = WittCocycle::by_name(name).unwrap();
        let check = verify_cocycle(&c, window).unwrap();
        print!(
            "{name:<12} d = 0 on {} tuples: {:<5}",
            check.tuples_checked,
            check.passed()
        );
        match certify_nontrivial(&c, window.min(5)).unwrap() {
            WindowDecision::NotExact { certificate } => {
                println!(
                    "  nontrivial, certificate with {} chain terms",
                    certificate.len()
                )
            }
            WindowDecision::PrimitiveCandidate { .. } => {
                println!("  primitive found on the window")
            }
        }
    }
}
