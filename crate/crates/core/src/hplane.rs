//! Upper half-plane geometry: points, geodesics, the hyperbolic distance,
//! and a Monte-Carlo check of the geodesic separation bound (two points
//! separated by both `γ̃2` and `φ^k(γ̃2)`, `k ≥ 3`, are at distance at least
//! the translation length of `φ`).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::verify::{VerificationReport, Witness};

/// A point `x + iy` with `y > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HPoint {
    pub x: f64,
    pub y: f64,
}

impl HPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() || y <= 0.0 {
            return Err(Error::Domain(format!(
                "point must have finite coordinates and y > 0, got ({x}, {y})"
            )));
        }
        Ok(HPoint { x, y })
    }
}

/// A complete geodesic: a vertical line or a half-circle centred on the
/// boundary line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum HGeodesic {
    Vertical { x: f64 },
    Circular { center: f64, radius: f64 },
}

impl HGeodesic {
    pub fn circular(center: f64, radius: f64) -> Result<Self> {
        if radius.is_nan() || radius <= 0.0 {
            return Err(Error::Domain(format!("radius must be positive, got {radius}")));
        }
        Ok(HGeodesic::Circular { center, radius })
    }

    /// Signed side value: zero exactly on the geodesic. For a vertical line
    /// this is the horizontal offset; for a circle it is the quadratic form
    /// `|p - c|² - r²`.
    fn side(&self, p: HPoint) -> f64 {
        match *self {
            HGeodesic::Vertical { x } => p.x - x,
            HGeodesic::Circular { center, radius } => {
                let dx = p.x - center;
                dx * dx + p.y * p.y - radius * radius
            }
        }
    }
}

/// Hyperbolic distance via `cosh d = 1 + |p - q|² / (2 y_p y_q)`.
pub fn hdistance(p: HPoint, q: HPoint) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    let c = 1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y);
    c.max(1.0).acosh()
}

/// True iff `p` and `q` lie on opposite sides of `g`. Errors when either
/// point lies on `g`, detected as a side value of magnitude at most 1e-12.
pub fn separates(g: &HGeodesic, p: HPoint, q: HPoint) -> Result<bool> {
    let sp = g.side(p);
    let sq = g.side(q);
    if sp.abs() <= 1e-12 || sq.abs() <= 1e-12 {
        return Err(Error::Precondition(
            "point lies on the geodesic (within 1e-12)".into(),
        ));
    }
    Ok(sp.signum() != sq.signum())
}

/// Number of re-draws allowed per sample before it is skipped.
const MAX_REJECTIONS: u32 = 64;

/// Monte-Carlo check of the separation bound.
///
/// Per sample: draw a translation length `l ∈ [0.1, 3]` for the isometry
/// `φ: z ↦ e^l z` along the imaginary axis, a circular geodesic `γ̃2` with
/// feet `0 < u < v < e^l u` (so `γ̃2` is disjoint from the axis and from
/// `φ(γ̃2)`, with a 1e-9 margin excluding tangencies), an exponent
/// `k ∈ {3, …, 6}`, and points `p1` inside the half-disc of `γ̃2` and `p2`
/// inside the half-disc of `φ^k(γ̃2)`, so both geodesics separate them.
/// The bound `d(p1, p2) ≥ l - 1e-9` is then asserted. Samples whose
/// hypotheses cannot be met within a bounded number of re-draws are skipped
/// and counted, never silently dropped.
pub fn mc_check_separation_lemma(samples: u64, seed: u64) -> VerificationReport {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut skipped: u64 = 0;
    let mut tested: u64 = 0;
    let mut violations: u64 = 0;
    let mut min_margin = f64::INFINITY;
    let mut first_violation: Option<String> = None;

    'samples: for _ in 0..samples {
        for _attempt in 0..MAX_REJECTIONS {
            let l: f64 = rng.gen_range(0.1..=3.0);
            let scale = l.exp();
            let u: f64 = rng.gen_range(0.1..=5.0);
            // Feet ratio strictly inside (1, e^l), 5% relative margins.
            let t: f64 = rng.gen();
            let rho = 1.0 + (scale - 1.0) * (0.05 + 0.9 * t);
            let v = u * rho;
            if v - u < 1e-9 || scale * u - v < 1e-9 {
                continue;
            }
            let k: u32 = rng.gen_range(3..=6);
            let gamma2 = HGeodesic::Circular {
                center: (u + v) / 2.0,
                radius: (v - u) / 2.0,
            };
            let pow = (f64::from(k) * l).exp();
            let gamma2_k = HGeodesic::Circular {
                center: pow * (u + v) / 2.0,
                radius: pow * (v - u) / 2.0,
            };
            let draw_inside = |rng: &mut ChaCha12Rng, g: &HGeodesic| -> HPoint {
                let (center, radius) = match *g {
                    HGeodesic::Circular { center, radius } => (center, radius),
                    HGeodesic::Vertical { .. } => unreachable!(),
                };
                let theta: f64 = rng.gen_range(0.05..=(std::f64::consts::PI - 0.05));
                let s: f64 = rng.gen_range(0.05..=0.95);
                HPoint {
                    x: center + s * radius * theta.cos(),
                    y: s * radius * theta.sin(),
                }
            };
            let p1 = draw_inside(&mut rng, &gamma2);
            let p2 = draw_inside(&mut rng, &gamma2_k);
            let hypotheses = separates(&gamma2, p1, p2).unwrap_or(false)
                && separates(&gamma2_k, p1, p2).unwrap_or(false);
            if !hypotheses {
                continue;
            }
            let d = hdistance(p1, p2);
            let margin = d - l;
            tested += 1;
            if margin < min_margin {
                min_margin = margin;
            }
            if margin < -1e-9 {
                violations += 1;
                if first_violation.is_none() {
                    first_violation = Some(format!(
                        "d = {d:.12} < l = {l:.12} at p1 = ({}, {}), p2 = ({}, {}), k = {k}",
                        p1.x, p1.y, p2.x, p2.y
                    ));
                }
            }
            continue 'samples;
        }
        skipped += 1;
    }

    let passed = violations == 0;
    let min_margin_text = if tested == 0 {
        "n/a".to_string()
    } else {
        format!("{min_margin:.9}")
    };
    VerificationReport {
        name: "hplane-lemma".into(),
        passed,
        witness: first_violation.map(Witness::Note),
        detail: format!(
            "trials: {tested}\nskips: {skipped}\nviolations: {violations}\nmin (d - l) margin: {min_margin_text}"
        ),
    }
}
