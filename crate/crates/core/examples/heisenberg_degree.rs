//! Discrete Heisenberg group: ball sizes and the degree estimates
//! ln beta(k) / ln k, which creep toward 4, with the overall verdict.

use growthkit::analysis::{classify, Thresholds};
use growthkit::group::MarkedGroup;
use growthkit::growth::{enumerate_balls, DEFAULT_ELEMENT_BUDGET};

fn main() -> growthkit::Result<()> {
    let table = enumerate_balls(&MarkedGroup::heisenberg()?, 20, DEFAULT_ELEMENT_BUDGET)?;
    let report = classify(&table, &Thresholds::default())?;
    for (k, d) in report.degree.radii.iter().zip(&report.degree.values) {
        println!("k={k:>2}  beta={:>7}  degree estimate {}", table.ball(*k), d.to_string_digits(6));
    }
    println!("verdict: {:?}", report.verdict);
    Ok(())
}
