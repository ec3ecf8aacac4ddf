//! Superconvergence points of the fractional derivative of interpolants,
//! and of the Petrov-Galerkin solution and its derivative.

use fracsuper::superpoints::{interp_superpoints, pg_fracderiv_superpoints, pg_value_superpoints};
use fracsuper::{FracKind, FracSpec, NodeFamily, Side};

fn show(label: &str, pts: &[f64]) {
    let s: Vec<String> = pts.iter().map(|x| format!("{x:.5}")).collect();
    println!("{label:<28} [{}]", s.join(", "));
}

fn main() -> fracsuper::Result<()> {
    let n = 12;
    for family in [
        NodeFamily::LegendreGauss,
        NodeFamily::LegendreLobatto,
        NodeFamily::LegendreRadauLeft,
    ] {
        println!("{family}, N = {n}, left RL");
        for mu in [0.1, 0.5, 0.9] {
            let set = interp_superpoints(family, n, FracSpec::left_rl(mu)?)?;
            show(&format!("  μ = {mu} ({} points)", set.len()), &set.points);
        }
    }

    // Caputo sets lose interior zeros for small μ
    println!("legendre-gauss, N = 4, left Caputo");
    for mu in [0.1, 0.5, 0.9] {
        let set = interp_superpoints(
            NodeFamily::LegendreGauss,
            4,
            FracSpec::new(mu, Side::Left, FracKind::Caputo)?,
        )?;
        show(&format!("  μ = {mu}"), &set.points);
    }

    println!("Petrov-Galerkin, N = 9");
    for s in [0.1, 0.55, 0.9] {
        show(&format!("  value points, s = {s}"), &pg_value_superpoints(s, 9)?.points);
    }
    show("  derivative points", &pg_fracderiv_superpoints(9)?.points);
    Ok(())
}
