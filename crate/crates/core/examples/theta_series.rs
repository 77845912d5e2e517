//! Theta coefficients of Z^n, the A_2 lattice and a skewed form, compared
//! with powers of theta_3 where they apply.

use growthkit::theta::{compare_sequences, theta3_power, theta_coefficients, IntegralLattice};

fn main() -> growthkit::Result<()> {
    for n in 1..=4 {
        let theta = theta_coefficients(&IntegralLattice::standard(n)?, 12);
        let m = compare_sequences(&theta.to_sequence(), &theta3_power(n as u32, 12));
        println!("Z^{n}: {:?}  matches theta3^{n}: {}", theta.counts, m.is_full_match());
    }
    let a2 = IntegralLattice::new(vec![vec![2, -1], vec![-1, 2]])?;
    println!("A2:  {:?}", theta_coefficients(&a2, 12).counts);
    let skew = IntegralLattice::new(vec![vec![2, 1], vec![1, 3]])?;
    println!("[[2,1],[1,3]]: {:?}", theta_coefficients(&skew, 12).counts);
    Ok(())
}
