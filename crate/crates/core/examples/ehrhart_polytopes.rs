//! Lattice points in dilates of the cross-polytope and of the A_n root
//! polytope, next to their closed-form Ehrhart series.

use growthkit::ehrhart::{cross_polytope_series, ehrhart_sequence, legendre, root_polytope_series, LatticePolytope};

fn main() -> growthkit::Result<()> {
    for n in 1..=3 {
        let p = LatticePolytope::cross_polytope(n)?;
        println!("cross n={n}: {}  series {}", ehrhart_sequence(&p, 6)?, cross_polytope_series(n as i64)?);
    }
    for n in 1..=3 {
        let p = LatticePolytope::root_polytope(n)?;
        println!("root  A{n}: {}  series {}", ehrhart_sequence(&p, 5)?, root_polytope_series(n as i64)?);
    }
    for n in 0..=4 {
        println!("P_{n}(x) = {}", legendre(n).coefficients().format_with("x"));
    }
    Ok(())
}
