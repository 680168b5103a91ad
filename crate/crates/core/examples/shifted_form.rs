//! omega = d chi + omega_2. The inverse transform is P_2 with shifted momenta.

use superpoisson::brackets::{higher_poisson, HigherBracketRequest};
use superpoisson::fixtures;
use superpoisson::graded::DEFAULT_TRUNCATION;
use superpoisson::legendre::legendre_inverse;
use superpoisson::verify;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = fixtures::shifted()?;
    let t = DEFAULT_TRUNCATION;
    let p = legendre_inverse(&s.omega, &t)?;
    println!("chi   = {}", s.chi);
    println!("omega = {}", s.omega);
    println!("P     = {p}");
    println!(
        "{}",
        verify::check_equal("closed form", &p, &s.closed_form()?)?
    );
    println!("{}", verify::check_roundtrip(&s.omega, &t)?);

    let zero = higher_poisson(&HigherBracketRequest::new(p.clone(), vec![])?)?;
    println!("{{}} = {zero}");
    let x1 = superpoisson::graded::GradedPoly::var(&s.chart, s.chart.base(0));
    let one = higher_poisson(&HigherBracketRequest::new(p, vec![x1.clone()])?)?;
    println!("{{{x1}}} = {one}");
    Ok(())
}
