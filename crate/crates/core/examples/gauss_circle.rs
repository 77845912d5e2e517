//! Lattice points in discs: R(100000), the error bound at a few radii, and
//! an empirical fit of the error exponent.

use growthkit::gauss::{dyadic_grid, error_exponent_fit, gauss_bound_check, R2};

fn main() -> growthkit::Result<()> {
    println!("R(100000) = {}", R2(100_000));
    let report = gauss_bound_check(&[10, 1000, 100_000, 10_000_000], 50)?;
    print!("{}", report.to_csv());
    let fit = error_exponent_fit(&dyadic_grid(1 << 22))?;
    println!("fitted exponent {:.3} (rms residual {:.3})", fit.alpha, fit.residual);
    Ok(())
}
