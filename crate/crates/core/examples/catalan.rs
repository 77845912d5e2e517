//! Catalan numbers from the convolution recurrence, checked against
//! C(2k,k)/(k+1) and the functional equation C = 1 + zC^2.

use growthkit::series::{binomial, catalan, satisfies_catalan_identity};
use num_bigint::BigInt;

fn main() {
    let c = catalan(15);
    for (k, v) in c.coeffs().iter().enumerate() {
        let closed = binomial(2 * k as u64, k as u64) / BigInt::from(k + 1);
        println!("c_{k:<2} = {v:>8}   C(2k,k)/(k+1) = {closed}");
    }
    println!("C = 1 + zC^2 to order 15: {}", satisfies_catalan_identity(&c));
}
