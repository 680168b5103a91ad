//! The plane with P = x*_2 x*_1: Legendre dual form and the binary bracket.

use superpoisson::brackets::{higher_poisson, HigherBracketRequest};
use superpoisson::fixtures;
use superpoisson::graded::{GradedPoly, VarKind, DEFAULT_TRUNCATION};
use superpoisson::legendre::{legendre_transform, phi_pullback};
use superpoisson::verify;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (chart, p) = fixtures::classical();
    println!("P = {p}");

    for a in 0..2 {
        let dx = GradedPoly::var(&chart, chart.var(VarKind::Fiber, a));
        println!("phi*({dx}) = {}", phi_pullback(&p, &dx)?);
    }

    let w = legendre_transform(&p, &DEFAULT_TRUNCATION)?;
    println!("omega = {w}");

    let x1 = GradedPoly::var(&chart, chart.base(0));
    let x2 = GradedPoly::var(&chart, chart.base(1));
    let f = &x1 * &x1;
    let g = &x1 * &x2;
    let b = higher_poisson(&HigherBracketRequest::new(
        p.clone(),
        vec![f.clone(), g.clone()],
    )?)?;
    println!("{{{f}, {g}}} = {b}");

    println!(
        "{}",
        verify::check_classical(&p, &verify::default_functions(&chart))?
    );
    Ok(())
}
