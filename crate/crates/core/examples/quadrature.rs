//! Gauss-Jacobi rules for singular weights, and the interpolatory weights
//! of the collocation node families.

use fracsuper::orthopoly::{gauss_jacobi_rule, interpolatory_weights, node_family_points};
use fracsuper::{JacobiParam, NodeFamily};

fn main() -> fracsuper::Result<()> {
    // ∫ (1-x)^{-1/2} x^{15} dx, exact with 8 points
    let rule = gauss_jacobi_rule(JacobiParam::new(-0.5, 0.0), 8)?;
    println!("∫(1-x)^(-1/2) x^15 = {:.17}", rule.integrate(|x| x.powi(15)));
    println!("reference            0.40171515298551076");

    let rule = gauss_jacobi_rule(JacobiParam::new(0.55, -0.55), 6)?;
    println!("\nGauss-Jacobi (0.55, -0.55), 6 points");
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        println!("  {x:>22.16}  {w:>22.16e}");
    }

    for family in [NodeFamily::LegendreLobatto, NodeFamily::LegendreRadauLeft] {
        let nodes = node_family_points(family, 4)?;
        let w = interpolatory_weights(&nodes)?;
        println!("\n{family}, N = 4");
        for (x, w) in nodes.iter().zip(&w) {
            println!("  {x:>22.16}  {w:>22.16}");
        }
    }
    Ok(())
}
