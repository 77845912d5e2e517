//! Recognizing rational generating functions from coefficient prefixes.

use growthkit::series::{recognize_rational, CoefficientSequence, DEFAULT_GUARD};

fn main() -> growthkit::Result<()> {
    let fib: Vec<i64> = (0..20)
        .scan((1i64, 1i64), |s, _| {
            let v = s.0;
            *s = (s.1, s.0 + s.1);
            Some(v)
        })
        .collect();
    let examples = [
        ("Fibonacci", fib),
        ("squares", (0..20).map(|k| k * k).collect()),
        ("period 3", (0..20).map(|k| [1, 0, -1][k as usize % 3]).collect()),
        ("primes", vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43]),
    ];
    for (name, xs) in examples {
        let seq = CoefficientSequence::from_ints(xs)?;
        match recognize_rational(&seq, DEFAULT_GUARD)? {
            Some(f) => println!("{name}: {f}"),
            None => println!("{name}: no rational function fits with guard {DEFAULT_GUARD}"),
        }
    }
    Ok(())
}
