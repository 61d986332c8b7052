//! Local cocycles on Vect S¹: pull θ and α back from W₁ along the Taylor
//! jet at φ = 0 and compare with the densities evaluated at that point.

use leibniz_cohomology::algebra::builtin;
use leibniz_cohomology::cohomology::{alpha_cocycle, theta_cocycle};
use leibniz_cohomology::witt::{compare_up_to_scalar, taylor_pullback, window_tuples, WittCocycle};
use leibniz_cohomology::{Functional, Theory};

fn main() {
    let w1 = builtin("w1", 1).unwrap();
    let theta = taylor_pullback(&theta_cocycle(&w1, Theory::Leibniz).unwrap()).unwrap();
    let alpha = taylor_pullback(&alpha_cocycle(&w1).unwrap()).unwrap();

    let t = compare_up_to_scalar(
        |k| theta.eval(k),
        |k| WittCocycle::THETA.eval(k),
        &window_tuples(3, 4),
    );
    let a = compare_up_to_scalar(
        |k| alpha.eval(k),
        |k| WittCocycle::ALPHA.eval(k),
        &window_tuples(4, 3),
    );
    println!(
        "π*θ = ({}) θ_local on {} tuples",
        t.scalar.as_deref().unwrap_or("none"),
        t.tuples_checked
    );
    println!(
        "π*α = ({}) α_local on {} tuples",
        a.scalar.as_deref().unwrap_or("none"),
        a.tuples_checked
    );
}
