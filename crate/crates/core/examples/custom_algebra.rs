//! A graded algebra read from TOML: the 3-dimensional Heisenberg algebra
//! written out as a table, then its cohomology in both theories.

use leibniz_cohomology::cohomology::cohomology_dims;
use leibniz_cohomology::{validate, AlgebraSpec, Theory};

const SPEC: &str = r#"
name = "heisenberg-from-toml"
support = [1, 2, 3]
# [e_1, e_2] = e_3; the (2, 1) entry follows by antisymmetry
constants = [[1, 2, 1]]
"#;

fn main() {
    let spec = AlgebraSpec::parse_toml(SPEC).unwrap();
    let alg = spec.build(4).unwrap();
    println!("{:?}", validate(&alg, 4));
    for theory in [Theory::Lie, Theory::Leibniz] {
        println!(
            "{theory:<8} {:?}",
            cohomology_dims(&alg, theory, 4).unwrap().dims()
        );
    }

    // a non-Lie table is refused
    let broken = AlgebraSpec::parse_toml(
        "name = \"x\"\nsupport = [1, 2, 3]\nconstants = [[1, 2, 1], [1, 3, 1]]\n",
    )
    .unwrap();
    println!("broken spec: {}", broken.build(4).unwrap_err());
}
