use std::sync::Arc;

use superpoisson::graded::{random_poly, Chart, Parity, RandomSpec};
use superpoisson::verify::check_weight_identities;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let chart = Arc::new(Chart::standard(2, 1));
    let spec = RandomSpec::multivector(2, 3).terms(3);
    for seed in 0..4 {
        let p = random_poly(&chart, &spec, Parity::Even, seed)?;
        let q = random_poly(&chart, &spec, Parity::Odd, 100 + seed)?;
        println!("{}", check_weight_identities(&p, &q)?.to_line());
    }
    Ok(())
}
