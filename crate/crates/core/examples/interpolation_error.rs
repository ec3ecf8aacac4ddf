//! Error of D^μ(u - u_N) for u = (1+x)^{10.15}/100 and N = 12: global max
//! against the max over the predicted superconvergence points.

use fracsuper::builtins::ex31;
use fracsuper::interp::frac_error_curve;
use fracsuper::{FracSpec, NodeFamily};

fn main() -> fracsuper::Result<()> {
    let u = ex31();
    println!(
        "{:<22} {:>4} {:>12} {:>12} {:>10}",
        "family", "μ", "global", "at points", "gain"
    );
    for family in [
        NodeFamily::LegendreGauss,
        NodeFamily::LegendreLobatto,
        NodeFamily::LegendreRadauLeft,
    ] {
        for mu in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let spec = FracSpec::left_rl(mu)?;
            let du = u.frac_deriv(spec)?;
            let c = frac_error_curve(|x| u.eval(x), |x| du.eval(x), family, 12, spec, 2001)?;
            println!(
                "{:<22} {mu:>4} {:>12.3e} {:>12.3e} {:>10.1}",
                family.to_string(),
                c.global_max,
                c.max_at_superpoints,
                c.gain_ratio
            );
        }
    }
    Ok(())
}
