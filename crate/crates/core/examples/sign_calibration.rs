//! Runs every sign candidate for the Schouten and canonical Poisson brackets
//! against the validation identities.

use superpoisson::brackets::calibration::{calibrate, poisson_candidates, schouten_candidates};
use superpoisson::brackets::CALIBRATED;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, cands) in [
        ("schouten", schouten_candidates()?),
        ("poisson", poisson_candidates()?),
    ] {
        let survivors: Vec<_> = cands.iter().filter(|c| c.passes()).collect();
        println!(
            "{name}: {} candidates, {} survive",
            cands.len(),
            survivors.len()
        );
        for c in survivors {
            println!("  {} / {}", c.signs[0], c.signs[1]);
        }
    }
    match calibrate()? {
        Some(found) if found == CALIBRATED => println!("frozen convention matches"),
        Some(found) => println!("calibration found a different convention: {found:?}"),
        None => println!("no unique survivor"),
    }
    Ok(())
}
