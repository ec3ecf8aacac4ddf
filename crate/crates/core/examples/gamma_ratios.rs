//! Gamma-function ratios and power-rule coefficients Γ(p+1)/Γ(p+1-μ).

use fracsuper::specialfn::{gamma, gamma_ratio, ln_gamma, power_rule_coeff};

fn main() -> fracsuper::Result<()> {
    println!(
        "Γ(1/2)^2 = {:.17}  (π = {:.17})",
        gamma(0.5)?.powi(2),
        std::f64::consts::PI
    );
    println!("ln Γ(500.25) = {:.15e}", ln_gamma(500.25)?);

    // the large-argument branch of gamma_ratio avoids overflow of Γ
    for (a, b) in [(12.55, 12.0), (180.3, 179.8), (1000.0, 999.5)] {
        println!("Γ({a})/Γ({b}) = {:.15e}", gamma_ratio(a, b)?);
    }

    println!("\n  p     μ=0.1       μ=0.5       μ=0.9");
    for p in [0.0, 1.0, 3.0, 10.15] {
        let row: Vec<String> = [0.1, 0.5, 0.9]
            .iter()
            .map(|&mu| format!("{:>11.6}", power_rule_coeff(p, mu)))
            .collect();
        println!("{p:>5}  {}", row.join(" "));
    }
    Ok(())
}
