//! The Dye quantity min h_2k / (h_1 + ... + h_k) for amenable and
//! non-amenable examples, under both readings of the finite set F.

use growthkit::analysis::{dye_quantity, dye_quantity_as_given};
use growthkit::group::MarkedGroup;
use growthkit::growth::{enumerate_balls, DEFAULT_ELEMENT_BUDGET};

fn main() -> growthkit::Result<()> {
    let groups = [
        ("Z", MarkedGroup::free_abelian(1)?),
        ("Z^2", MarkedGroup::free_abelian(2)?),
        ("Heisenberg", MarkedGroup::heisenberg()?),
        ("F2", MarkedGroup::free_group(2)?),
    ];
    for (name, g) in &groups {
        let table = enumerate_balls(g, 10, DEFAULT_ELEMENT_BUDGET)?;
        let values: Vec<String> = (1..=5).map(|k| dye_quantity(&table, k).map(|d| d.value.to_string())).collect::<growthkit::Result<_>>()?;
        let given = dye_quantity_as_given(g, 4, DEFAULT_ELEMENT_BUDGET)?;
        println!("{name:<10} K=1..5: {}   F as given, K=4: {}", values.join(", "), given.value);
    }
    Ok(())
}
