//! Free group of rank 2: spheres 4·3^(k-1), series (1+z)/(1-3z) and the
//! running upper bound min beta(k)^(1/k) for the exponential growth rate 3.

use growthkit::analysis::exponential_rate;
use growthkit::group::MarkedGroup;
use growthkit::growth::{enumerate_balls, DEFAULT_ELEMENT_BUDGET};
use growthkit::series::{recognize_rational, CoefficientSequence, DEFAULT_GUARD};

fn main() -> growthkit::Result<()> {
    let table = enumerate_balls(&MarkedGroup::free_group(2)?, 12, DEFAULT_ELEMENT_BUDGET)?;
    let seq = CoefficientSequence::from_biguints(&table.sphere_sizes)?;
    println!("sigma: {seq}");
    if let Some(f) = recognize_rational(&seq, DEFAULT_GUARD)? {
        println!("series: {f}");
    }
    let rate = exponential_rate(&table, 30)?;
    for (k, (e, m)) in rate.radii.iter().zip(rate.estimates.iter().zip(&rate.running_min)) {
        println!("k={k:>2}  beta^(1/k) = {}  running min = {}", e.to_string_digits(8), m.to_string_digits(8));
    }
    Ok(())
}
