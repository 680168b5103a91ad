use std::sync::Arc;

use superpoisson::brackets::{canonical_poisson, de_rham};
use superpoisson::graded::{ratio, Chart, GradedPoly, VarKind};
use superpoisson::koszul::{self, DifferentialPattern, EpsilonRule};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = Arc::new(Chart::standard(2, 2));
    let v = |k, a| GradedPoly::var(&c, c.var(k, a));
    let x1 = v(VarKind::Base, 0);
    let x2 = v(VarKind::Base, 1);
    let p = &x1 * &(&v(VarKind::AntiFiber, 1) * &v(VarKind::AntiFiber, 0))
        + v(VarKind::AntiFiber, 2).pow(2).scale(&ratio(1, 2));
    println!("P = {p}");

    let k = koszul::alpha(&p)?;
    println!("K = {}", k.k());
    println!("(K,K) = {}", canonical_poisson(k.k(), k.k())?);

    let dx2 = de_rham(&x2)?;
    println!(
        "[x1, dx2] = {}",
        koszul::higher_koszul(&p, &[x1.clone(), dx2.clone()])?
    );
    println!(
        "[dx1, dx2] = {}",
        koszul::higher_koszul(&p, &[de_rham(&x1)?, dx2])?
    );

    let fs = [x1.clone(), &x2 * &x2];
    for rule in [EpsilonRule::Displayed, EpsilonRule::Calibrated] {
        let cmp = koszul::koszul_on_differentials_with(
            &p,
            &fs,
            DifferentialPattern::LeadingFunction,
            rule,
        )?;
        println!(
            "{rule:?}: eps = {}, difference = {}",
            cmp.epsilon, cmp.difference
        );
    }
    Ok(())
}
