//! S_3 generated by adjacent transpositions: growth polynomial 1+2z+2z^2+z^3
//! whose value at 1 is the group order.

use growthkit::group::{GroupElement, MarkedGroup};
use growthkit::growth::{enumerate_balls, spheres, DEFAULT_ELEMENT_BUDGET};
use growthkit::poly::Poly;

fn main() -> growthkit::Result<()> {
    let s3 = MarkedGroup::symmetric_coxeter(3)?;
    for (k, sphere) in spheres(&s3, 4, DEFAULT_ELEMENT_BUDGET)?.iter().enumerate() {
        let names: Vec<String> = sphere.iter().map(GroupElement::to_string).collect();
        println!("length {k}: {}", names.join(" "));
    }
    let table = enumerate_balls(&s3, 4, DEFAULT_ELEMENT_BUDGET)?;
    let coeffs: Vec<i64> = (0..=4).map(|k| table.sphere(k).try_into().unwrap()).collect();
    let p = Poly::from_ints(coeffs);
    println!("growth polynomial {}, value at 1 = {}", p.format_with("z"), p.eval(&growthkit::poly::rat(1)));
    Ok(())
}
