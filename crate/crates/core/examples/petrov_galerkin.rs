//! The GJF Petrov-Galerkin solver for D^s u = f, u(1) = 0, with
//! f = 1 + x + cos x + sin x: spectral decay and superconvergence.

use fracsuper::builtins::ex41;
use fracsuper::pgsolver::{pg_error_curves_vs_reference, solve, FivpProblem};

fn main() -> fracsuper::Result<()> {
    let s = 0.55;
    let p = FivpProblem::new(ex41, s)?;
    let reference = solve(&p, 41)?;
    println!("max |u - u_N| against N = 41, s = {s}");
    for n in [5, 10, 15, 20] {
        let u = solve(&p, n)?;
        let err = (0..=1000)
            .map(|i| -1.0 + 0.002 * i as f64)
            .map(|x| Ok((reference.eval(x)? - u.eval(x)?).abs()))
            .collect::<fracsuper::Result<Vec<_>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        println!("  N = {n:>2}  {err:.3e}");
    }

    println!("\nratio of max error at superpoints to global max error");
    println!("   s     values (N=9)   derivatives (N=12)");
    for s in [0.1, 0.3, 0.55, 0.7, 0.9] {
        let p = FivpProblem::new(ex41, s)?;
        let v = pg_error_curves_vs_reference(&p, 9, 41, 1001)?;
        let d = pg_error_curves_vs_reference(&p, 12, 41, 1001)?;
        println!("{s:>5}  {:>14.4}  {:>18.4}", v.value_ratio(), d.deriv_ratio());
    }
    Ok(())
}
