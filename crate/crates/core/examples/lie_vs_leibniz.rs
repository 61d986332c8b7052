//! Lie against Leibniz cohomology in low degrees for the finite builtins and
//! W₁. The two agree in degrees 0 and 1 and H² sits inside HL².

use leibniz_cohomology::algebra::builtin;
use leibniz_cohomology::cohomology::pirashvili_report;

fn main() {
    for name in ["w1", "sl2", "abelian1", "abelian2", "heisenberg"] {
        let alg = builtin(name, 1).unwrap();
        let r = pirashvili_report(&alg, 4).unwrap();
        let lie: Vec<_> = r.rows.iter().map(|row| row.lie).collect();
        let leib: Vec<_> = r.rows.iter().map(|row| row.leibniz).collect();
        println!("{name:<11} H  {lie:?}");
        println!("{:<11} HL {leib:?}", "");
        println!(
            "{:<11} H⁰,H¹ agree: {}  H² ⊂ HL²: {}",
            "", r.low_degrees_agree, r.h2_injects
        );
    }
}
