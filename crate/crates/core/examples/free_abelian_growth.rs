//! Sphere sizes of Z^n with the standard generators and the recognized
//! growth series, compared with ((1+z)/(1-z))^n.

use growthkit::group::MarkedGroup;
use growthkit::growth::{enumerate_balls, DEFAULT_ELEMENT_BUDGET};
use growthkit::series::{closed_form_free_abelian, recognize_rational, CoefficientSequence, DEFAULT_GUARD};

fn main() -> growthkit::Result<()> {
    for n in 1..=3 {
        let table = enumerate_balls(&MarkedGroup::free_abelian(n)?, 20, DEFAULT_ELEMENT_BUDGET)?;
        let seq = CoefficientSequence::from_biguints(&table.sphere_sizes)?;
        let found = recognize_rational(&seq, DEFAULT_GUARD)?.expect("rational");
        let expected = closed_form_free_abelian(n as i64)?;
        println!("Z^{n}: sigma = {seq}");
        println!("      series {found} (closed form agrees: {})", found == expected);
    }
    Ok(())
}
