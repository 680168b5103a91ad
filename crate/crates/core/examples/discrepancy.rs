use std::sync::Arc;

use superpoisson::brackets::schouten;
use superpoisson::graded::{random_poly, Chart, Parity, RandomSpec};
use superpoisson::verify::{check_discrepancy, default_forms};

// The Koszul bracket of P fails to be a derivation by a term built from [P,P].
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let chart = Arc::new(Chart::standard(2, 2));
    let forms = default_forms(&chart);
    for seed in 0..6 {
        let p = random_poly(
            &chart,
            &RandomSpec::multivector(2, 3).terms(4),
            Parity::Even,
            seed,
        )?;
        let pp = schouten(&p, &p)?;
        let report = check_discrepancy(&p, &forms)?;
        println!(
            "seed {seed}: [P,P] {} -> {}",
            if pp.is_zero() { "= 0" } else { "!= 0" },
            report.to_line()
        );
    }
    Ok(())
}
