//! Three independent routes to D^μ w_{N+1}: the Jacobi closed form, the
//! shifted-power rule in double-double arithmetic, and Gauss-Jacobi
//! quadrature of the defining integral. Also the GJF derivative identity.

use fracsuper::fracderiv::{frac_deriv_node_poly, frac_deriv_power, gjf_eval, gjf_frac_deriv, FracOracle, GjfBasisId};
use fracsuper::{FracKind, FracSpec, NodeFamily, Side};

fn main() -> fracsuper::Result<()> {
    let (family, n) = (NodeFamily::LegendreLobatto, 8);
    for kind in [FracKind::RiemannLiouville, FracKind::Caputo] {
        let spec = FracSpec::new(0.5, Side::Left, kind)?;
        let closed = frac_deriv_node_poly(family, n, spec)?;
        let power = frac_deriv_power(&family.node_power_poly(n, Side::Left)?, spec)?;
        let oracle = FracOracle::new(spec, 0.0, 64)?;
        println!("{kind} D^0.5 w_9 for {family}");
        println!("     x            closed form            power rule            quadrature");
        for x in [-0.9, -0.3, 0.2, 0.75] {
            let q = oracle.eval(
                &|y| family.node_poly_eval(n, y),
                &|y| family.node_poly_derivative(n, y),
                x,
            )?;
            println!(
                "{x:>6}  {:>22.15e}  {:>22.15e}  {:>22.15e}",
                closed.eval(x)?,
                power.eval(x)?,
                q
            );
        }
        println!();
    }

    // right RL derivative of order α of ⁺J_n^{(-α,β)} is a Jacobi polynomial
    let id = GjfBasisId::plus(0.3, 0.4, 5);
    let image = gjf_frac_deriv(id)?;
    let oracle = FracOracle::new(FracSpec::right_rl(0.3)?, 0.3, 48)?;
    println!("D^0.3 of (1-x)^0.3 P_5^(0.3,0.4): closed vs quadrature");
    for x in [-0.5, 0.1, 0.6] {
        let p = |y: f64| fracsuper::orthopoly::jacobi_eval(fracsuper::JacobiParam::new(0.3, 0.4), 5, y);
        let dp = |y: f64| fracsuper::orthopoly::jacobi_derivative(fracsuper::JacobiParam::new(0.3, 0.4), 5, y);
        println!(
            "  x={x:>5}  {:>20.15}  {:>20.15}   J(x) = {:.6}",
            image.eval(x),
            oracle.eval(&p, &dp, x)?,
            gjf_eval(id, x)?
        );
    }
    Ok(())
}
