//! Exit criteria. Prints one PASS/FAIL line per criterion and fails the
//! target if any criterion fails.

use rand::{rngs::StdRng, Rng, SeedableRng};
use std::f64::consts::PI;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use vacuakit::inflation::slow_roll_report;
use vacuakit::nucleation::{
    cdl_surface_term, garriga_density, normalization_constant, tunneling_amplitude,
    GarrigaInputs, TunnelInputs,
};
use vacuakit::vacua::{brace_a, brace_b, classify_vacua, default_window, scan_critical_points, CriticalKind};
use vacuakit::wavefunctional::{box_profile, thin_wall_basis, BOX_HEIGHT};
use vacuakit::PotentialParams;
use vacuakit_cli::report::build_report;
use vacuakit_cli::RunConfig;

type Outcome = Result<String, String>;

fn check(cond: bool, ok: impl Into<String>, fail: impl Into<String>) -> Outcome {
    if cond {
        Ok(ok.into())
    } else {
        Err(fail.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Outcome {
    check(
        elapsed < limit,
        format!("{elapsed:?}"),
        format!("took {elapsed:?}, limit {limit:?}"),
    )
}

/// 1. dv1, d2v1 vs central differences at 1000 random points.
fn derivative_correctness() -> Outcome {
    let start = Instant::now();
    let p = PotentialParams::baseline();
    let mut rng = StdRng::seed_from_u64(1);
    let h = 1e-6;
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let phi = rng.gen_range(-2.0 * PI..4.0 * PI);
        let fd1 = (p.v1(phi + h) - p.v1(phi - h)) / (2.0 * h);
        let fd2 = (p.dv1(phi + h) - p.dv1(phi - h)) / (2.0 * h);
        // relative to max(|exact|, 1) so zeros of the derivative do not divide by ~0
        let e1 = (p.dv1(phi) - fd1).abs() / p.dv1(phi).abs().max(1.0);
        let e2 = (p.d2v1(phi) - fd2).abs() / p.d2v1(phi).abs().max(1.0);
        worst = worst.max(e1).max(e2);
    }
    let t = within(start.elapsed(), Duration::from_secs(1))?;
    check(worst < 1e-6, format!("max rel err {worst:.2e}, {t}"), format!("max rel err {worst:.2e}"))
}

/// 2. ≥ 2 minima in [φ*−2π, φ*+2π], matching a 10⁶-point grid scan.
fn vacuum_location() -> Outcome {
    let start = Instant::now();
    let p = PotentialParams::baseline();
    let (lo, hi) = default_window(&p);
    let pts = scan_critical_points(&p, lo, hi, RunConfig::default().grid_n).map_err(|e| e.to_string())?;
    let minima: Vec<f64> = pts.iter().filter(|c| c.kind == CriticalKind::Minimum).map(|c| c.phi).collect();

    let n = 1_000_000;
    let cell = (hi - lo) / (n - 1) as f64;
    let v: Vec<f64> = (0..n).map(|i| p.v1(lo + cell * i as f64)).collect();
    let oracle: Vec<f64> = (1..n - 1)
        .filter(|&i| v[i] < v[i - 1] && v[i] <= v[i + 1])
        .map(|i| lo + cell * i as f64)
        .collect();

    if minima.len() < 2 {
        return Err(format!("found {} minima", minima.len()));
    }
    if minima.len() != oracle.len() {
        return Err(format!("{} minima vs {} in oracle", minima.len(), oracle.len()));
    }
    for (m, o) in minima.iter().zip(&oracle) {
        if p.dv1(*m).abs() >= 1e-10 || p.d2v1(*m) <= 0.0 || (m - o).abs() > cell {
            return Err(format!("minimum {m} (oracle {o}): dv1 {:.1e}, d2v1 {}", p.dv1(*m), p.d2v1(*m)));
        }
    }
    let t = within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("minima {minima:?}, {t}"))
}

/// 3. {}_A − {}_B = 2·gap exactly, gap ∈ [0.04, 0.06], report flags the gap.
fn bogomilnyi_algebra() -> Outcome {
    let a = brace_a(0.441);
    let b = brace_b(5.457, 0.5472, 1.0);
    let pair = vacuakit::VacuumPair::from_fields(&PotentialParams::baseline(), 0.5472, 5.457);
    if a - b != 2.0 * pair.gap_bogomilnyi || pair.brace_a != a || pair.brace_b != b {
        return Err(format!("identity broken: {a} - {b} vs 2*{}", pair.gap_bogomilnyi));
    }
    let g = pair.gap_bogomilnyi;
    if !(0.04..=0.06).contains(&g) {
        return Err(format!("gap {g} outside [0.04, 0.06]"));
    }
    let report = build_report(&RunConfig::default()).map_err(|e| e.to_string())?;
    let q = report.quantities.get("gap_bogomilnyi_printed_fields").ok_or("quantity missing")?;
    check(
        q.discrepancy_flag && q.reference_value == Some(0.041) && q.computed_value == Some(g),
        format!("gap {g:.6}, flagged against 0.041"),
        "report does not flag the gap discrepancy",
    )
}

/// 4. |V″|/H² < 0.15 at the three printed field values.
fn flat_slow_roll() -> Outcome {
    let p = PotentialParams::baseline();
    let mut ratios = Vec::new();
    for phi in [0.5472, 5.457, 0.99 * PI] {
        let r = slow_roll_report(&p, phi).map_err(|e| e.to_string())?;
        if !(r.flatness_ratio < 0.15) {
            return Err(format!("ratio {} at {phi}", r.flatness_ratio));
        }
        ratios.push(r.flatness_ratio);
    }
    Ok(format!("ratios {ratios:.4?}"))
}

/// 5. ε < 1e-6 and |η| < 0.1 at the computed minima.
fn negative_pressure() -> Outcome {
    let p = PotentialParams::baseline();
    let (lo, hi) = default_window(&p);
    let pts = scan_critical_points(&p, lo, hi, 1024).map_err(|e| e.to_string())?;
    let pair = classify_vacua(&pts, &p).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for phi in [pair.phi_false, pair.phi_true] {
        let r = slow_roll_report(&p, phi).map_err(|e| e.to_string())?;
        if !(r.epsilon < 1e-6 && r.eta.abs() < 0.1) {
            return Err(format!("at {phi}: epsilon {}, eta {}", r.epsilon, r.eta));
        }
        out.push(format!("({:.2e}, {:.4})", r.epsilon, r.eta));
    }
    Ok(format!("(epsilon, eta) {}", out.join(" ")))
}

/// 6. Normalization integral vs the erf closed form on 100 random inputs.
fn quadrature() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(6);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let b = 10f64.powf(rng.gen_range(-3.0..1.0));
        let l = 10f64.powf(rng.gen_range(-1.0..2.0));
        let c = normalization_constant(b, l).map_err(|e| e.to_string())?;
        let integral = (PI / (8.0 * b)).sqrt() * libm::erf((2.0 * b).sqrt() * l);
        let oracle = 1.0 / (l * l / (2.0 * PI) * integral).sqrt();
        worst = worst.max((c - oracle).abs() / oracle);
    }
    let t = within(start.elapsed(), Duration::from_secs(1))?;
    check(worst < 1e-9, format!("max rel err {worst:.2e}, {t}"), format!("max rel err {worst:.2e}"))
}

/// 7. Trapezoid FT of the sampled box vs the thin-wall basis.
fn thin_wall_basis_check() -> Outcome {
    let l = 24.39;
    let g = box_profile(l, BOX_HEIGHT, 4096).map_err(|e| e.to_string())?;
    let (xs, vs) = (g.xs(), g.values());
    let peak = thin_wall_basis(0.0, l);
    let mut worst: f64 = 0.0;
    for n in 1..=10 {
        let k = n as f64 * PI / l;
        // about the box center, so the transform is real
        let f = |j: usize| vs[j] * (k * (xs[j] - l / 2.0)).cos();
        let re: f64 = (1..xs.len()).map(|j| 0.5 * (xs[j] - xs[j - 1]) * (f(j - 1) + f(j))).sum();
        let numeric = re / (2.0 * PI).sqrt() / BOX_HEIGHT;
        let basis = thin_wall_basis(k, l);
        let scale = if basis.abs() > 1e-12 { basis.abs() } else { peak };
        worst = worst.max((numeric - basis).abs() / scale);
    }
    let lim_err = (thin_wall_basis(0.0, l) - (2.0 / PI).sqrt() * l / 2.0).abs();
    check(
        worst < 0.01 && lim_err < 1e-10,
        format!("max rel err {worst:.2e}, k->0 err {lim_err:.1e}"),
        format!("max rel err {worst:.2e}, k->0 err {lim_err:.1e}"),
    )
}

/// 8. Closed-form spot values.
fn spot_values() -> Outcome {
    let s_t = cdl_surface_term(0.9286);
    let n = garriga_density(&GarrigaInputs::default()).map_err(|e| e.to_string())?;
    let t = TunnelInputs::new(0.37, 0.81, 8.676e-20, 24.39 / 2.0, 24.39);
    let amp = tunneling_amplitude(&t).map_err(|e| e.to_string())?;
    let expect = t.norm_c1 * t.norm_c2 / t.mstar * (-t.alpha * t.length_l).exp();
    let ok = (s_t + 0.3482).abs() <= 1e-4
        && (n - 1.0 / (2.0 * PI)).abs() <= 1e-12
        && (amp - expect).abs() <= 1e-12 * expect.max(1.0);
    check(
        ok,
        format!("S_t {s_t:.6}, n {n:.12}, T(x=L/2) {amp:.6e}"),
        format!("S_t {s_t}, n {n}, T {amp} vs {expect}"),
    )
}

/// 9. |T_IF| and n computed under defaults and their ratio recorded.
fn pipeline_ratio() -> Outcome {
    let r = build_report(&RunConfig::default()).map_err(|e| e.to_string())?;
    let nuc = &r.nucleation;
    let (t, n, ratio) = match (nuc.t_if, nuc.garriga_n, nuc.t_if_over_n) {
        (Some(t), Some(n), Some(q)) => (t, n, q),
        _ => return Err(format!("missing pipeline values: {nuc:?}")),
    };
    let recorded = r.quantities.get("t_if_over_n").and_then(|q| q.computed_value) == Some(ratio);
    check(
        t.is_finite() && n.is_finite() && ratio == t / n && recorded,
        format!(
            "|T_IF| {t:.4e}, n {n:.4e}, ratio 10^{:.2} (within one order: {:?})",
            nuc.log10_t_if_over_n.unwrap_or(f64::NAN),
            nuc.within_order_of_magnitude
        ),
        "ratio not recorded consistently",
    )
}

fn run_bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_vacuakit"))
        .args(args)
        .env_remove("VACUAKIT_THREADS")
        .output()
        .expect("spawn vacuakit")
}

/// 10. Byte-identical reports and the exit-code contract.
fn cli_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cfg = dir.path().join("run.json");
    std::fs::write(&cfg, r#"{"m": 0.441, "grid_n": 2048, "sb": 1.5, "prefactor": 2.0}"#).map_err(|e| e.to_string())?;
    let outs: Vec<_> = ["a.json", "b.json"].iter().map(|f| dir.path().join(f)).collect();
    for o in &outs {
        let r = run_bin(&["report", "--config", s(&cfg), "--out", s(o)]);
        if r.status.code() != Some(0) {
            return Err(format!("report exit {:?}", r.status.code()));
        }
    }
    let (a, b) = (std::fs::read(&outs[0]).unwrap(), std::fs::read(&outs[1]).unwrap());
    if a != b {
        return Err("reports differ".into());
    }
    let usage = run_bin(&["sweep", "--param", "mass", "--values", "1"]).status.code();
    let io = run_bin(&["scan", "--out", s(&dir.path().join("missing/dir/x.csv"))]).status.code();
    let compute = run_bin(&["report", "--m", "-1"]).status.code();
    let warn = run_bin(&["report", "--window", "0:0.1"]);
    let warned = String::from_utf8_lossy(&warn.stdout).contains("InsufficientMinima");
    check(
        usage == Some(2) && io == Some(1) && compute == Some(1) && warn.status.code() == Some(0) && warned,
        format!("{} identical bytes; exits usage=2 io=1 compute=1 warn=0", a.len()),
        format!("exits usage={usage:?} io={io:?} compute={compute:?} warn={:?} annotated={warned}", warn.status.code()),
    )
}

fn s(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 derivative correctness", derivative_correctness),
        ("2 vacuum location", vacuum_location),
        ("3 Bogomil'nyi algebra", bogomilnyi_algebra),
        ("4 flat slow roll", flat_slow_roll),
        ("5 negative pressure", negative_pressure),
        ("6 quadrature", quadrature),
        ("7 thin-wall basis", thin_wall_basis_check),
        ("8 closed-form spot values", spot_values),
        ("9 pipeline order of magnitude", pipeline_ratio),
        ("10 CLI determinism and exit codes", cli_determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
