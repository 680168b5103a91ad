//! Exhaustive search over the two-term sign ansatz. Each candidate pair of
//! exponents is run against the validation identities; the unique survivor
//! is the frozen [`CALIBRATED`](super::CALIBRATED) convention.

use std::sync::Arc;

use serde::Serialize;

use super::{canonical_poisson_with, de_rham, kappa, schouten_with, BracketSigns, SignExponent};
use super::{SignConvention, CALIBRATED};
use crate::error::Result;
use crate::graded::{random_poly, Chart, GradedPoly, Parity, RandomSpec, VarKind};
use crate::koszul::{alpha, higher_koszul_with};
use crate::legendre::{self, linalg};
use crate::verify::symplectic_bracket;

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub signs: BracketSigns,
    /// Name of the first failing identity, `None` when all pass.
    pub failed: Option<&'static str>,
}

impl Candidate {
    pub fn passes(&self) -> bool {
        self.failed.is_none()
    }
}

fn all_pairs() -> impl Iterator<Item = BracketSigns> {
    SignExponent::all().flat_map(|s1| SignExponent::all().map(move |s2| [s1, s2]))
}

fn parity(p: &GradedPoly) -> Parity {
    p.parity_of().expect("fixtures are homogeneous")
}

fn flip(sign_bit: u8, u: GradedPoly) -> GradedPoly {
    if sign_bit % 2 == 0 {
        u
    } else {
        -u
    }
}

struct Fixtures {
    multivectors: Vec<GradedPoly>,
    quadratic: Vec<GradedPoly>,
    functions: Vec<GradedPoly>,
    forms: Vec<GradedPoly>,
    /// Bivector on R^2 with its Legendre dual inverse matrix.
    planar: (GradedPoly, linalg::Matrix, Vec<GradedPoly>),
    hamiltonians: Vec<GradedPoly>,
    planar_quadratic: GradedPoly,
}

fn fixtures() -> Result<Fixtures> {
    let sup = Arc::new(Chart::standard(1, 1));
    let mv = RandomSpec::multivector(2, 3).terms(3);
    let mut multivectors = Vec::new();
    for seed in 0..6u64 {
        let parity = if seed % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        };
        multivectors.push(random_poly(&sup, &mv, parity, 100 + seed)?);
    }
    let mut quadratic = Vec::new();
    for seed in 0..3u64 {
        let p = random_poly(
            &sup,
            &RandomSpec::multivector(2, 2).terms(4),
            Parity::Even,
            200 + seed,
        )?;
        quadratic.push(p.degree_slice(crate::graded::Grading::FiberDegree, 2));
    }
    let fun = RandomSpec::function(3).terms(3);
    let functions = vec![
        random_poly(&sup, &fun, Parity::Even, 300)?,
        random_poly(&sup, &fun, Parity::Odd, 301)?,
        GradedPoly::var(&sup, sup.base(0)),
        GradedPoly::var(&sup, sup.base(1)),
    ];
    let forms = vec![
        GradedPoly::var(&sup, sup.fiber(0)),
        GradedPoly::var(&sup, sup.fiber(1)),
        &GradedPoly::var(&sup, sup.base(1)) * &GradedPoly::var(&sup, sup.fiber(0)),
        random_poly(&sup, &RandomSpec::form(2, 2).terms(3), Parity::Even, 400)?,
    ];

    let r2 = Arc::new(Chart::standard(2, 0));
    let p = GradedPoly::product(&r2, &[r2.antifiber(1), r2.antifiber(0)]);
    let w = legendre::legendre_transform(&p, &crate::graded::Truncation::none())?;
    let w_inv = linalg::invert(&legendre::constant_matrix(&legendre::form_components(&w)?))
        .expect("classical form is invertible");
    let planar_functions = vec![
        random_poly(&r2, &RandomSpec::function(3).terms(3), Parity::Even, 500)?,
        random_poly(&r2, &RandomSpec::function(3).terms(3), Parity::Even, 501)?,
        GradedPoly::var(&r2, r2.base(0)),
    ];
    let x1 = GradedPoly::var(&r2, r2.base(0));
    let x2 = GradedPoly::var(&r2, r2.base(1));
    let planar_quadratic = &(&x1.pow(2) + &x2) * &p;

    let ham = RandomSpec::new(&[
        (VarKind::Base, 2),
        (VarKind::Fiber, 2),
        (VarKind::MomentumBase, 1),
        (VarKind::MomentumFiber, 2),
    ])
    .terms(3);
    let mut hamiltonians = Vec::new();
    for seed in 0..6u64 {
        let parity = if seed % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        };
        hamiltonians.push(random_poly(&sup, &ham, parity, 600 + seed)?);
    }
    Ok(Fixtures {
        multivectors,
        quadratic,
        functions,
        forms,
        planar: (p, w_inv, planar_functions),
        hamiltonians,
        planar_quadratic,
    })
}

fn schouten_failure(signs: &BracketSigns, fx: &Fixtures) -> Result<Option<&'static str>> {
    let br = |a: &GradedPoly, b: &GradedPoly| schouten_with(signs, a, b);
    let mv = &fx.multivectors;
    for p in mv {
        for q in mv {
            let (pp, qp) = (parity(p).bit(), parity(q).bit());
            // V1: [P,Q] = -(-1)^{(P+1)(Q+1)} [Q,P]
            let lhs = br(p, q)?;
            let rhs = flip(1 + (pp + 1) * (qp + 1), br(q, p)?);
            if lhs != rhs {
                return Ok(Some("antisymmetry"));
            }
            if !lhs.is_homogeneous_of(Parity::from_bit(pp + qp + 1)) {
                return Ok(Some("parity"));
            }
        }
    }
    for p in mv {
        for q in mv {
            for r in mv.iter().take(3) {
                let (pp, qp) = (parity(p).bit(), parity(q).bit());
                // V2: [P,QR] = [P,Q]R + (-1)^{(P+1)Q} Q[P,R]
                let lhs = br(p, &(q * r))?;
                let rhs = &br(p, q)? * r + flip((pp + 1) * qp, q * &br(p, r)?);
                if lhs != rhs {
                    return Ok(Some("leibniz"));
                }
                // V3: [P,[Q,R]] = [[P,Q],R] + (-1)^{(P+1)(Q+1)} [Q,[P,R]]
                let lhs = br(p, &br(q, r)?)?;
                let rhs = br(&br(p, q)?, r)? + flip((pp + 1) * (qp + 1), br(q, &br(p, r)?)?);
                if lhs != rhs {
                    return Ok(Some("jacobi"));
                }
            }
        }
    }
    // V4: [P,f] = phi_P^*(df) for fiber-quadratic P
    for p in &fx.quadratic {
        for f in &fx.functions {
            if br(p, f)? != legendre::phi_pullback(p, &de_rham(f)?)? {
                return Ok(Some("pullback of differentials"));
            }
        }
    }
    // V5: {f,g} from the symplectic form dual to P
    let (p, w_inv, funs) = &fx.planar;
    for f in funs {
        for g in funs {
            let nested = br(&br(p, f)?, g)?.restrict(&[VarKind::AntiFiber]);
            if nested != symplectic_bracket(w_inv, f, g)? {
                return Ok(Some("symplectic bracket"));
            }
        }
    }
    // V6: phi^* d w - [P, phi^* w] + 1/2 phi^* kappa_{[P,P]} w = 0
    for p in fx.multivectors.iter().filter(|p| parity(p) == Parity::Even) {
        let pp = br(p, p)?;
        for w in &fx.forms {
            let lhs = legendre::phi_pullback(p, &de_rham(w)?)?;
            let mid = br(p, &legendre::phi_pullback(p, w)?)?;
            let corr = legendre::phi_pullback(p, &kappa(&pp, w)?)?;
            let residual = lhs - mid + corr.scale(&crate::graded::ratio(1, 2));
            if !residual.is_zero() {
                return Ok(Some("discrepancy"));
            }
        }
    }
    Ok(None)
}

fn poisson_failure(signs: &BracketSigns, fx: &Fixtures) -> Result<Option<&'static str>> {
    let br = |a: &GradedPoly, b: &GradedPoly| canonical_poisson_with(signs, a, b);
    let hs = &fx.hamiltonians;
    for f in hs {
        for g in hs {
            let (fp, gp) = (parity(f).bit(), parity(g).bit());
            if br(f, g)? != flip(1 + fp * gp, br(g, f)?) {
                return Ok(Some("antisymmetry"));
            }
        }
    }
    for f in hs {
        for g in hs {
            for h in hs.iter().take(3) {
                let (fp, gp) = (parity(f).bit(), parity(g).bit());
                let lhs = br(f, &(g * h))?;
                let rhs = &br(f, g)? * h + flip(fp * gp, g * &br(f, h)?);
                if lhs != rhs {
                    return Ok(Some("leibniz"));
                }
                let lhs = br(f, &br(g, h)?)?;
                let rhs = br(&br(f, g)?, h)? + flip(fp * gp, br(g, &br(f, h)?)?);
                if lhs != rhs {
                    return Ok(Some("jacobi"));
                }
            }
        }
    }
    // Koszul relations for P = g(x) x*_2 x*_1, i.e. P^{12} = g
    let p = &fx.planar_quadratic;
    let c = p.chart();
    let comps = legendre::bivector_components(p)?;
    for a in 0..2 {
        for b in 0..2 {
            let xa = GradedPoly::var(c, c.base(a));
            let xb = GradedPoly::var(c, c.base(b));
            let da = GradedPoly::var(c, c.fiber(a));
            let db = GradedPoly::var(c, c.fiber(b));
            if !higher_koszul_with(signs, p, &[xa.clone(), xb])?.is_zero()
                || higher_koszul_with(signs, p, &[xa, db.clone()])? != -comps[a][b].clone()
                || higher_koszul_with(signs, p, &[da, db])? != de_rham(&comps[a][b])?
            {
                return Ok(Some("koszul relations"));
            }
        }
    }
    // alpha([P,Q]) = s (alpha P, alpha Q)
    for p in &fx.multivectors {
        for q in &fx.multivectors {
            let lhs = alpha(&super::schouten(p, q)?)?.into_poly();
            let rhs = br(alpha(p)?.k(), alpha(q)?.k())?;
            if lhs != rhs.scale_int(crate::koszul::morphism_sign(parity(p), parity(q))) {
                return Ok(Some("alpha morphism"));
            }
        }
    }
    Ok(None)
}

/// Every Schouten candidate with its first failing identity.
pub fn schouten_candidates() -> Result<Vec<Candidate>> {
    let fx = fixtures()?;
    all_pairs()
        .map(|signs| {
            Ok(Candidate {
                signs,
                failed: schouten_failure(&signs, &fx)?,
            })
        })
        .collect()
}

/// Every canonical Poisson candidate with its first failing identity,
/// evaluated with the calibrated Schouten bracket.
pub fn poisson_candidates() -> Result<Vec<Candidate>> {
    let fx = fixtures()?;
    all_pairs()
        .map(|signs| {
            Ok(Candidate {
                signs,
                failed: poisson_failure(&signs, &fx)?,
            })
        })
        .collect()
}

/// Survivors of both searches; `Ok(Some(..))` only when each is unique.
pub fn calibrate() -> Result<Option<SignConvention>> {
    let pick = |cands: Vec<Candidate>| {
        let mut passing = cands.into_iter().filter(Candidate::passes);
        match (passing.next(), passing.next()) {
            (Some(c), None) => Some(c.signs),
            _ => None,
        }
    };
    let schouten = pick(schouten_candidates()?);
    let poisson = pick(poisson_candidates()?);
    Ok(schouten
        .zip(poisson)
        .map(|(schouten, poisson)| SignConvention { schouten, poisson }))
}

/// Whether the frozen constant is the unique calibrated convention.
pub fn frozen_is_calibrated() -> Result<bool> {
    Ok(calibrate()? == Some(CALIBRATED))
}
