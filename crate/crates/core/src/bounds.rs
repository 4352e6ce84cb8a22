//! Closed-form constants and inequalities for multi-twists and cusp regions
//! on hyperbolic surfaces. All functions are pure double-precision
//! evaluations of explicit formulas; none of them fabricates a constant that
//! is only known to exist abstractly (in particular the comparison constant
//! `K1` is always an input, never synthesized).

use crate::error::{Error, Result};

/// Distortion factor of geodesic length functions at Teichmüller distance
/// `d`: `e^{2d}`.
pub fn wolpert_factor(d: f64) -> Result<f64> {
    if d.is_nan() || d < 0.0 {
        return Err(Error::Domain(format!("distance must be >= 0, got {d}")));
    }
    Ok((2.0 * d).exp())
}

/// Lower bound `log 2 / (12h - 12)` for the translation distance of a
/// pseudo-Anosov class on a genus-`h` surface.
pub fn penner_bound(h: u32) -> Result<f64> {
    if h < 2 {
        return Err(Error::Domain(format!("genus must be >= 2, got {h}")));
    }
    Ok(2f64.ln() / (12.0 * f64::from(h) - 12.0))
}

/// Systole bound `2 log 2 / (12h - 12)` for a base surface with essentially
/// purely pseudo-Anosov monodromy into genus-`h` moduli space.
pub fn eppa_systole_bound(h: u32) -> Result<f64> {
    Ok(2.0 * penner_bound(h)?)
}

/// `l_max(h, μ) = 63 (h - 1) (1 + e^{16μ})`: an upper bound for the length
/// of any twisting curve of a multi-twist that moves a marked surface by
/// Teichmüller distance at most `2μ`.
pub fn lmax(h: u32, mu: u32) -> Result<f64> {
    if h < 2 {
        return Err(Error::Domain(format!("genus must be >= 2, got {h}")));
    }
    if mu == 0 {
        return Err(Error::Domain("mu must be positive".into()));
    }
    Ok(63.0 * (f64::from(h) - 1.0) * (1.0 + (16.0 * f64::from(mu)).exp()))
}

/// Minimal length of a closed geodesic crossing a geodesic of length `l`:
/// the partner length `L` with `sinh(l/2) sinh(L/2) = 1`. An involution.
pub fn collar_partner(l: f64) -> Result<f64> {
    if l.is_nan() || l <= 0.0 {
        return Err(Error::Domain(format!("length must be positive, got {l}")));
    }
    Ok(2.0 * (1.0 / (l / 2.0).sinh()).asinh())
}

/// The two additive constants comparing cusp coordinates of linked cusp
/// regions:
///
/// ```text
/// K_{5,1,2} = ½ log( K1·μ1 / asinh(1 / sinh(K1·μ2)) )
/// K_{5,2,1} = ½ log( K1·μ2 / asinh(1 / sinh(K1·μ1)) )
/// ```
///
/// `K1` is the (caller-supplied) length-comparison constant.
pub fn k5_constants(k1: f64, mu1: u32, mu2: u32) -> Result<(f64, f64)> {
    if k1.is_nan() || k1 <= 0.0 {
        return Err(Error::Domain(format!("K1 must be positive, got {k1}")));
    }
    if mu1 == 0 || mu2 == 0 {
        return Err(Error::Domain("mu1 and mu2 must be positive".into()));
    }
    let part = |a: u32, b: u32| {
        let num = k1 * f64::from(a);
        let den = (1.0 / (k1 * f64::from(b)).sinh()).asinh();
        0.5 * (num / den).ln()
    };
    Ok((part(mu1, mu2), part(mu2, mu1)))
}

/// Bracket for the distance of points on horocycles of lengths `ε1`, `ε2`
/// inside a cusp region bounded by a horocycle of length 2:
/// `(max(0, |log(ε1/ε2)| - 4), |log(ε1/ε2)| + 4)`. The lower bound clamps at
/// zero, since a negative metric lower bound carries no information.
pub fn cusp_distance_bracket(eps1: f64, eps2: f64) -> Result<(f64, f64)> {
    for (name, eps) in [("eps1", eps1), ("eps2", eps2)] {
        if eps.is_nan() || eps <= 0.0 || eps > 2.0 {
            return Err(Error::Domain(format!("{name} must lie in (0, 2], got {eps}")));
        }
    }
    let gap = (eps1 / eps2).ln().abs();
    Ok(((gap - 4.0).max(0.0), gap + 4.0))
}
