//! Growth of Z^2 with a non-standard generating set. The numerator changes
//! with the generators, the denominator stays a power of (1 - z).

use growthkit::group::MarkedGroup;
use growthkit::growth::{enumerate_balls, DEFAULT_ELEMENT_BUDGET};
use growthkit::series::{recognize_rational, CoefficientSequence, DEFAULT_GUARD};

fn main() -> growthkit::Result<()> {
    let sets: [&[Vec<i64>]; 3] = [
        &[vec![1, 0], vec![0, 1]],
        &[vec![1, 0], vec![0, 1], vec![1, 1]],
        &[vec![2, 1], vec![1, 1], vec![0, 2]],
    ];
    for gens in sets {
        let group = MarkedGroup::free_abelian_with(2, gens)?;
        let table = enumerate_balls(&group, 30, DEFAULT_ELEMENT_BUDGET)?;
        let seq = CoefficientSequence::from_biguints(&table.sphere_sizes)?;
        match recognize_rational(&seq, DEFAULT_GUARD)? {
            Some(f) => println!(
                "{gens:?}: {f}, denominator divides (1-z)^3: {}",
                f.denominator_divides_one_minus_z_pow(3)
            ),
            None => println!("{gens:?}: not recognized from 31 terms"),
        }
    }
    Ok(())
}
