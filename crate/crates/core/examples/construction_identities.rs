//! How the diagonal cocycles come from the local ones: contracting the
//! rotated-and-averaged θ and α with e₀ gives ω and β₁ up to a scalar, and
//! the φ-derivatives of θ_φ and α_φ are coboundaries of the ω and β₁
//! densities.

use leibniz_cohomology::witt::{
    compare_up_to_scalar, integral_contraction, verify_second_method, window_tuples, LocalFamily,
    WittCocycle,
};
use leibniz_cohomology::Functional;

fn main() {
    let pairs = [
        (LocalFamily::Theta, WittCocycle::OMEGA, 6, "ω"),
        (LocalFamily::ThetaTilde, WittCocycle::OMEGA, 6, "ω"),
        (LocalFamily::Alpha, WittCocycle::BETA1, 5, "β₁"),
    ];
    for (family, target, window, label) in pairs {
        let c = integral_contraction(family);
        let tuples = window_tuples(target.degree(), window);
        let cmp = compare_up_to_scalar(|t| c.eval(t), |t| target.eval(t), &tuples);
        println!(
            "i_e0 ∮ {family:?} = ({}) · {label}  on {} tuples, mismatches {}",
            cmp.scalar.as_deref().unwrap_or("none"),
            cmp.tuples_checked,
            cmp.mismatches.len()
        );
    }
    for check in verify_second_method(5, 4) {
        println!(
            "{}: scalar {} on {} tuples, mismatches {}",
            check.identity,
            check.scalar.as_deref().unwrap_or("none"),
            check.tuples_checked,
            check.mismatches.len()
        );
    }
}
