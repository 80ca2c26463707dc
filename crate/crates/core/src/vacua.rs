//! Critical points of V₁, false/true vacuum classification, and the
//! Bogomil'nyi gap with its associated separation length.

use serde::Serialize;
use std::cmp::Ordering;
use std::f64::consts::PI;

use crate::error::VacuaError;
use crate::potential::PotentialParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CriticalKind {
    Minimum,
    Maximum,
    Inflection,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalPoint {
    pub phi: f64,
    pub value: f64,
    pub curvature: f64,
    pub kind: CriticalKind,
}

impl CriticalPoint {
    pub fn is_minimum(&self) -> bool {
        self.kind == CriticalKind::Minimum
    }
}

/// Tuning knobs for [`scan_critical_points`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    /// Required |V₁′| at a refined point.
    pub residual_tol: f64,
    /// Curvature band treated as an inflection.
    pub curvature_tol: f64,
    /// Cap on refinement iterations per bracket.
    pub max_iterations: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            residual_tol: 1e-10,
            curvature_tol: 1e-8,
            max_iterations: 200,
        }
    }
}

pub const MIN_GRID_N: usize = 16;
const BISECTION_STEPS: usize = 12;

/// The default search window [φ* − 2π, φ* + 2π].
pub fn default_window(params: &PotentialParams) -> (f64, f64) {
    (params.phi_star - 2.0 * PI, params.phi_star + 2.0 * PI)
}

/// Finds every sign change of V₁′ on a `grid_n`-cell grid over `[lo, hi]`
/// and refines it to a critical point.
///
/// An empty result means V₁′ has no sign change in the window.
pub fn scan_critical_points(
    params: &PotentialParams,
    lo: f64,
    hi: f64,
    grid_n: usize,
) -> Result<Vec<CriticalPoint>, VacuaError> {
    scan_critical_points_with(params, lo, hi, grid_n, &ScanOptions::default())
}

pub fn scan_critical_points_with(
    params: &PotentialParams,
    lo: f64,
    hi: f64,
    grid_n: usize,
    opts: &ScanOptions,
) -> Result<Vec<CriticalPoint>, VacuaError> {
    params.validate()?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi && grid_n >= MIN_GRID_N) {
        return Err(VacuaError::InvalidWindow { lo, hi, grid_n });
    }
    let cell = (hi - lo) / grid_n as f64;
    let node = |i: usize| if i == grid_n { hi } else { lo + cell * i as f64 };

    let mut roots = Vec::new();
    let mut x0 = node(0);
    let mut f0 = params.dv1(x0);
    if f0 == 0.0 {
        roots.push(x0);
    }
    for i in 1..=grid_n {
        let x1 = node(i);
        let f1 = params.dv1(x1);
        if f1 == 0.0 {
            roots.push(x1);
        } else if f0 != 0.0 && (f0 < 0.0) != (f1 < 0.0) {
            roots.push(refine_root(params, x0, x1, f0, opts)?);
        }
        x0 = x1;
        f0 = f1;
    }

    roots.sort_by(f64::total_cmp);
    let mut kept: Vec<f64> = Vec::with_capacity(roots.len());
    for r in roots {
        match kept.last() {
            Some(&prev) if r - prev < cell => {}
            _ => kept.push(r),
        }
    }

    Ok(kept
        .into_iter()
        .map(|phi| {
            let curvature = params.d2v1(phi);
            let kind = if curvature > opts.curvature_tol {
                CriticalKind::Minimum
            } else if curvature < -opts.curvature_tol {
                CriticalKind::Maximum
            } else {
                CriticalKind::Inflection
            };
            CriticalPoint {
                phi,
                value: params.v1(phi),
                curvature,
                kind,
            }
        })
        .collect())
}

/// Bisection to shrink the bracket, then Newton steps that fall back to
/// bisection whenever they leave it.
fn refine_root(
    params: &PotentialParams,
    mut a: f64,
    mut b: f64,
    fa: f64,
    opts: &ScanOptions,
) -> Result<f64, VacuaError> {
    let neg_at_a = fa < 0.0;
    let mut x = 0.5 * (a + b);
    for iter in 0..opts.max_iterations {
        let fx = params.dv1(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if (fx < 0.0) == neg_at_a {
            a = x;
        } else {
            b = x;
        }
        let scale = x.abs().max(1.0);
        let collapsed = (b - a) <= 4.0 * f64::EPSILON * scale;
        if iter < BISECTION_STEPS {
            x = 0.5 * (a + b);
            continue;
        }
        let slope = params.d2v1(x);
        let newton = x - fx / slope;
        let step_ok = slope != 0.0 && newton.is_finite() && newton > a && newton < b;
        let next = if step_ok { newton } else { 0.5 * (a + b) };
        let step = (next - x).abs();
        if fx.abs() < opts.residual_tol && (step <= 1e-13 * scale || collapsed) {
            // one last Newton polish when it stays inside the bracket
            return Ok(if step_ok && params.dv1(next).abs() <= fx.abs() {
                next
            } else {
                x
            });
        }
        if collapsed && fx.abs() >= opts.residual_tol {
            break;
        }
        x = next;
    }
    Err(VacuaError::FailedConvergence {
        phi: x,
        iterations: opts.max_iterations,
    })
}

/// A classified false/true vacuum pair with the Bogomil'nyi quantities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VacuumPair {
    pub phi_false: f64,
    pub phi_true: f64,
    /// V(φ_F) − V(φ_T).
    pub gap_potential: f64,
    /// ({}_A − {}_B)/2.
    pub gap_bogomilnyi: f64,
    pub brace_a: f64,
    pub brace_b: f64,
    /// 1/gap_bogomilnyi, absent when the gap is not positive.
    pub length_scale: Option<f64>,
}

impl VacuumPair {
    /// Builds the pair quantities for given vacuum positions, without
    /// checking that they are minima.
    pub fn from_fields(params: &PotentialParams, phi_false: f64, phi_true: f64) -> Self {
        let brace_a = brace_a(params.mass_ratio());
        let brace_b = brace_b(phi_true, phi_false, params.planck_mass);
        let gap_bogomilnyi = (brace_a - brace_b) / 2.0;
        Self {
            phi_false,
            phi_true,
            gap_potential: params.v_total(phi_false) - params.v_total(phi_true),
            gap_bogomilnyi,
            brace_a,
            brace_b,
            length_scale: length_scale_from_gap(gap_bogomilnyi),
        }
    }

    /// The full bracket {} = {}_A − {}_B.
    pub fn bracket(&self) -> f64 {
        self.brace_a - self.brace_b
    }

    pub fn require_length_scale(&self) -> Result<f64, VacuaError> {
        self.length_scale.ok_or(VacuaError::NonPositiveGap {
            gap: self.gap_bogomilnyi,
        })
    }
}

/// {}_A = (m⁻² + 1)/(2m⁻²), m in units of M_p.
pub fn brace_a(mass_ratio: f64) -> f64 {
    let inv_sq = 1.0 / (mass_ratio * mass_ratio);
    (inv_sq + 1.0) / (2.0 * inv_sq)
}

/// {}_B = φ_T·φ_F·M_p²/6.
pub fn brace_b(phi_true: f64, phi_false: f64, planck_mass: f64) -> f64 {
    phi_true * phi_false * planck_mass * planck_mass / 6.0
}

pub fn length_scale_from_gap(gap: f64) -> Option<f64> {
    (gap > 0.0).then(|| 1.0 / gap)
}

fn by_value_then_phi(a: &CriticalPoint, b: &CriticalPoint) -> Ordering {
    a.value
        .total_cmp(&b.value)
        .then_with(|| a.phi.total_cmp(&b.phi))
}

/// Picks the true vacuum (lowest minimum) and the false vacuum (highest of
/// the remaining minima; ties go to the candidate nearest φ_T).
///
/// A non-positive Bogomil'nyi gap is not an error here: the pair comes back
/// with `length_scale == None` and [`VacuumPair::require_length_scale`]
/// reports it.
pub fn classify_vacua(
    points: &[CriticalPoint],
    params: &PotentialParams,
) -> Result<VacuumPair, VacuaError> {
    let mut minima: Vec<CriticalPoint> = points.iter().copied().filter(|p| p.is_minimum()).collect();
    if minima.len() < 2 {
        return Err(VacuaError::InsufficientMinima {
            found: minima.len(),
        });
    }
    minima.sort_by(by_value_then_phi);
    let truth = minima[0];
    let top = minima[1..]
        .iter()
        .map(|p| p.value)
        .fold(f64::NEG_INFINITY, f64::max);
    let falsity = minima[1..]
        .iter()
        .filter(|p| p.value == top)
        .min_by(|a, b| {
            (a.phi - truth.phi)
                .abs()
                .total_cmp(&(b.phi - truth.phi).abs())
                .then_with(|| a.phi.total_cmp(&b.phi))
        })
        .copied()
        .expect("at least one remaining minimum");
    Ok(VacuumPair::from_fields(params, falsity.phi, truth.phi))
}

/// Scan the window and classify in one go.
pub fn locate_vacua(
    params: &PotentialParams,
    lo: f64,
    hi: f64,
    grid_n: usize,
) -> Result<VacuumPair, VacuaError> {
    let points = scan_critical_points(params, lo, hi, grid_n)?;
    classify_vacua(&points, params)
}

/// Bogomil'nyi lower bound |Q| + ½(φ₀ − φ_C)²·{} on the Euclidean Lagrangian.
pub fn lagrangian_bound(phi0: f64, phi_c: f64, brace: f64, charge_q: f64) -> f64 {
    let d = phi0 - phi_c;
    charge_q.abs() + 0.5 * d * d * brace
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimum(phi: f64, value: f64) -> CriticalPoint {
        CriticalPoint {
            phi,
            value,
            curvature: 1.0,
            kind: CriticalKind::Minimum,
        }
    }

    #[test]
    fn pure_quadratic_has_single_minimum() {
        let p = PotentialParams::baseline()
            .with_cosine_amplitude(0.0)
            .with_phi_star(1.7);
        let pts = scan_critical_points(&p, -3.0, 5.0, 64).unwrap();
        assert_eq!(pts.len(), 1);
        assert!((pts[0].phi - 1.7).abs() < 1e-12);
        assert_eq!(pts[0].kind, CriticalKind::Minimum);
    }

    #[test]
    fn no_sign_change_is_empty() {
        let p = PotentialParams::baseline()
            .with_cosine_amplitude(0.0)
            .with_phi_star(10.0);
        assert!(scan_critical_points(&p, -1.0, 1.0, 32).unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_window() {
        let p = PotentialParams::baseline();
        assert!(matches!(
            scan_critical_points(&p, 1.0, 1.0, 32),
            Err(VacuaError::InvalidWindow { .. })
        ));
        assert!(matches!(
            scan_critical_points(&p, 0.0, 1.0, 8),
            Err(VacuaError::InvalidWindow { .. })
        ));
    }

    #[test]
    fn iteration_cap_reports_failure() {
        let p = PotentialParams::baseline();
        let opts = ScanOptions {
            max_iterations: 3,
            ..ScanOptions::default()
        };
        assert!(matches!(
            scan_critical_points_with(&p, -1.0, 7.0, 64, &opts),
            Err(VacuaError::FailedConvergence { .. })
        ));
    }

    #[test]
    fn defaults_have_two_minima_and_a_barrier() {
        let p = PotentialParams::baseline();
        let pts = scan_critical_points(&p, -1.0, 7.0, 400).unwrap();
        let minima: Vec<_> = pts.iter().filter(|c| c.is_minimum()).collect();
        assert!(minima.len() >= 2);
        let (a, b) = (minima[0].phi, minima[minima.len() - 1].phi);
        assert!(pts
            .iter()
            .any(|c| c.kind == CriticalKind::Maximum && c.phi > a && c.phi < b));
    }

    #[test]
    fn brace_arithmetic_at_printed_fields() {
        let p = PotentialParams::baseline();
        let pair = VacuumPair::from_fields(&p, 0.5472, 5.457);
        assert!((pair.brace_a - 0.597_240_5).abs() < 1e-7);
        assert!((pair.brace_b - 0.497_678_4).abs() < 1e-7);
        assert!((pair.gap_bogomilnyi - 0.049_781_05).abs() < 1e-7);
        assert_eq!(pair.gap_bogomilnyi, (pair.brace_a - pair.brace_b) / 2.0);
        assert_eq!(pair.length_scale, Some(1.0 / pair.gap_bogomilnyi));
    }

    #[test]
    fn printed_gap_gives_printed_length() {
        let l = length_scale_from_gap(0.041).unwrap();
        assert!((l - 24.39).abs() < 5e-3);
        assert_eq!(length_scale_from_gap(0.0), None);
        assert_eq!(length_scale_from_gap(-1.0), None);
    }

    #[test]
    fn degenerate_pair_has_no_length() {
        let p = PotentialParams::baseline();
        // choose φ_T·φ_F/6 = {}_A so the bracket vanishes
        let phi_t = 2.0;
        let phi_f = 6.0 * brace_a(p.mass_ratio()) / phi_t;
        let pair = classify_vacua(&[minimum(phi_t, 0.3), minimum(phi_f, 0.3)], &p).unwrap();
        assert!(pair.gap_bogomilnyi.abs() < 1e-15);
        if pair.gap_bogomilnyi <= 0.0 {
            assert!(pair.length_scale.is_none());
            assert!(matches!(
                pair.require_length_scale(),
                Err(VacuaError::NonPositiveGap { .. })
            ));
        }
        let exact = VacuumPair::from_fields(&p, 1.0, 6.0 * brace_a(p.mass_ratio()));
        assert_eq!(exact.gap_bogomilnyi, 0.0);
        assert!(matches!(
            exact.require_length_scale(),
            Err(VacuaError::NonPositiveGap { gap }) if gap == 0.0
        ));
    }

    #[test]
    fn classification_needs_two_minima() {
        let p = PotentialParams::baseline();
        let err = classify_vacua(&[minimum(1.0, 0.2)], &p).unwrap_err();
        assert_eq!(err, VacuaError::InsufficientMinima { found: 1 });
        let max = CriticalPoint {
            kind: CriticalKind::Maximum,
            ..minimum(2.0, 1.0)
        };
        assert!(classify_vacua(&[minimum(1.0, 0.2), max], &p).is_err());
    }

    #[test]
    fn false_vacuum_tie_goes_to_nearest() {
        let p = PotentialParams::baseline();
        let pts = [minimum(0.0, 0.1), minimum(3.0, 0.5), minimum(-1.0, 0.5), minimum(8.0, 0.2)];
        let pair = classify_vacua(&pts, &p).unwrap();
        assert_eq!(pair.phi_true, 0.0);
        assert_eq!(pair.phi_false, -1.0);
    }

    #[test]
    fn classification_ignores_input_order() {
        let p = PotentialParams::baseline();
        let mut pts = scan_critical_points(&p, -4.0, 10.0, 300).unwrap();
        let base = classify_vacua(&pts, &p).unwrap();
        pts.reverse();
        assert_eq!(classify_vacua(&pts, &p).unwrap(), base);
        pts.rotate_left(1);
        assert_eq!(classify_vacua(&pts, &p).unwrap(), base);
    }

    #[test]
    fn lagrangian_bound_values() {
        assert_eq!(lagrangian_bound(1.2, 1.2, 0.3, 0.0), 0.0);
        assert!((lagrangian_bound(3.0, 1.0, 0.0995, 0.0) - 0.199).abs() < 1e-15);
        assert_eq!(lagrangian_bound(1.2, 1.2, 0.3, -1.0), 1.0);
    }
}
