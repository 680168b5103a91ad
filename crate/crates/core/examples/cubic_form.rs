use superpoisson::fixtures;
use superpoisson::graded::{Grading, Truncation};
use superpoisson::legendre::{hessian_nondegenerate, legendre_inverse};
use superpoisson::verify;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cubic = fixtures::cubic();
    let t = Truncation::new(6, 1, 4);
    println!("omega = {}", cubic.omega);

    let p = legendre_inverse(&cubic.omega, &t)?;
    println!(
        "nondegenerate: {}",
        hessian_nondegenerate(&p, &[])?.nondegenerate
    );

    let first_order = p.degree_slice(Grading::LambdaDegree, 1);
    for k in 0..=4 {
        let slice = first_order.degree_slice(Grading::FiberDegree, k);
        if !slice.is_zero() {
            println!("lambda^1, degree {k}: {slice}");
        }
    }

    println!("{}", verify::check_domega(&p, &t)?);
    println!("{}", verify::check_roundtrip(&cubic.omega, &t)?);
    Ok(())
}
