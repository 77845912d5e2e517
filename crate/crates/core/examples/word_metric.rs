//! Word lengths and distances in the Heisenberg group and in Z^2.

use growthkit::group::{GroupElement, MarkedGroup};
use growthkit::growth::{word_distance, word_length};

fn main() -> growthkit::Result<()> {
    let h = MarkedGroup::heisenberg()?;
    // the central element with corner entry m^2 has length 4m
    for c in [1, 4, 9, 16] {
        let z = GroupElement::matrix(&[vec![1, 0, c], vec![0, 1, 0], vec![0, 0, 1]])?;
        println!("central element c={c:>2}: length {:?}", word_length(&h, &z, 20)?);
    }
    let z2 = MarkedGroup::free_abelian_with(2, &[vec![1, 1], vec![1, -1]])?;
    let a = GroupElement::abelian([0, 0]);
    let b = GroupElement::abelian([2, 0]);
    println!("Z^2 with (1,1),(1,-1): d((0,0),(2,0)) = {:?}", word_distance(&z2, &a, &b, 10)?);
    Ok(())
}
