//! D^s u + u = f with the exact solution (1-x)^{12+s}: the reaction term
//! couples the modes, so the system is assembled and solved densely.

use fracsuper::builtins::{remark45_rhs, remark45_solution};
use fracsuper::pgsolver::{galerkin_residuals, pg_error_curves, solve_reaction_fivp, FivpProblem};

fn main() -> fracsuper::Result<()> {
    println!("   s   condition   residual   value ratio   deriv ratio");
    for s in [0.1, 0.3, 0.55, 0.7, 0.9] {
        let f = remark45_rhs(s)?;
        let p = FivpProblem::new(|x| f.eval(x), s)?.with_reaction();
        let sol = solve_reaction_fivp(&p, 9)?;
        let u = remark45_solution(s);
        let du = u.frac_deriv(p.spec())?;
        let c = pg_error_curves(&sol, |x| Ok(u.eval(x)), |x| Ok(du.eval(x)), 1001)?;
        let r = galerkin_residuals(&sol, |x| f.eval(x), true)?
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs()));
        println!(
            "{s:>5}  {:>9.2}  {r:>9.1e}  {:>12.4}  {:>12.4}",
            sol.condition.unwrap_or(f64::NAN),
            c.value_ratio(),
            c.deriv_ratio()
        );
    }
    Ok(())
}
