//! The reconciliation report: every computed quantity next to the value
//! printed for it (when one was printed), with a discrepancy flag.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use vacuakit::error::VacuaError;
use vacuakit::inflation::{
    dilaton_report, phi0_threshold, phi_star_estimate, slow_roll_report_with, DilatonCoupling,
    SlowRollOptions,
};
use vacuakit::nucleation::{
    cdl_rate, cdl_surface_term, garriga_density, normalization_constant,
    orders_of_magnitude_apart, rho_t_lower_bound, tunneling_amplitude,
};
use vacuakit::reference::{self, is_discrepant, Printed};
use vacuakit::units::{
    default_units, effective_mass, ELECTRON_MASS_PLANCK, FRW_PLANCK_EPOCH_SIZE_CM,
    FRW_PLANCK_EPOCH_TIME_S,
};
use vacuakit::vacua::{classify_vacua, scan_critical_points};
use vacuakit::{
    CdlInputs, CriticalPoint, GarrigaInputs, PotentialParams, SlowRollReport, TunnelInputs,
    UnitSystem, VacuumPair,
};

use crate::config::{OutputFormat, RunConfig};
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Quantity {
    pub reference_value: Option<f64>,
    pub reference_tag: Option<&'static str>,
    pub computed_value: Option<f64>,
    pub discrepancy_flag: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

impl Quantity {
    fn against(printed: Printed, computed: Option<f64>) -> Self {
        Self {
            reference_value: Some(printed.value),
            reference_tag: Some(printed.tag),
            computed_value: computed,
            discrepancy_flag: computed.map_or(true, |c| is_discrepant(printed.value, c)),
            note: None,
        }
    }

    fn computed(value: Option<f64>) -> Self {
        Self {
            reference_value: None,
            reference_tag: None,
            computed_value: value,
            discrepancy_flag: false,
            note: None,
        }
    }

    fn with_note(self, note: &'static str) -> Self {
        Self {
            note: Some(note),
            ..self
        }
    }
}

/// Quantities in insertion order, serialized as a JSON object.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Quantities(pub Vec<(&'static str, Quantity)>);

impl Quantities {
    fn push(&mut self, name: &'static str, q: Quantity) {
        self.0.push((name, q));
    }

    pub fn get(&self, name: &str) -> Option<&Quantity> {
        self.0.iter().find(|(n, _)| *n == name).map(|(_, q)| q)
    }
}

impl Serialize for Quantities {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Warning,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Annotation {
    pub section: &'static str,
    pub severity: Severity,
    pub kind: &'static str,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnitsSection {
    pub system: UnitSystem,
    pub electron_mass: f64,
    pub effective_mass: f64,
    pub frw_size_cm: f64,
    pub frw_time_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamsSection {
    pub potential: PotentialParams,
    pub window: [f64; 2],
    pub grid_n: usize,
    pub flatness_threshold: f64,
    pub heavy_inflaton_warning: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlowRollRow {
    pub at: &'static str,
    #[serde(flatten)]
    pub report: SlowRollReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NucleationSection {
    pub rho_t: f64,
    pub s_t: f64,
    pub cdl_rate: Option<f64>,
    pub cdl_saturated: bool,
    pub garriga_n: Option<f64>,
    pub length_l: Option<f64>,
    pub length_source: &'static str,
    pub alpha: Option<f64>,
    pub x: Option<f64>,
    pub x_source: &'static str,
    pub mstar: f64,
    pub c1: Option<f64>,
    pub c2: Option<f64>,
    pub t_if: Option<f64>,
    pub t_if_over_n: Option<f64>,
    pub log10_t_if_over_n: Option<f64>,
    pub within_order_of_magnitude: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceSection {
    pub phi0_threshold: f64,
    pub phi_star_estimate: f64,
    pub phi_star_quoted: Vec<f64>,
    pub dilaton_at_phi_star: DilatonCoupling,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub units: UnitsSection,
    pub params: ParamsSection,
    pub critical_points: Vec<CriticalPoint>,
    pub vacua: Option<VacuumPair>,
    pub printed_field_vacua: VacuumPair,
    pub slow_roll: Vec<SlowRollRow>,
    pub nucleation: NucleationSection,
    pub reference: ReferenceSection,
    pub quantities: Quantities,
    pub interpretations: Vec<&'static str>,
    pub annotations: Vec<Annotation>,
}

impl Report {
    pub fn worst_severity(&self) -> Option<Severity> {
        self.annotations.iter().map(|a| a.severity).max()
    }

    pub fn slow_roll_at(&self, at: &str) -> Option<&SlowRollReport> {
        self.slow_roll.iter().find(|r| r.at == at).map(|r| &r.report)
    }
}

const INTERPRETATIONS: &[&str] = &[
    "cosine amplitude 0.5989: the coefficient quoted as '5989' is read with the decimal point of its second appearance",
    "vacua are ordered by potential value: the true vacuum is the deepest minimum in the window, the false vacuum the highest remaining one",
    "length_l = 1/gap_bogomilnyi; when the computed gap is not positive the quoted fields supply the brace terms",
    "tunneling amplitude read as cosh(2*sqrt(x/(2L)) - sqrt(L/(2x))) * exp(-alpha*L*L/(2x)); the cosh argument vanishes at x = L/2",
    "C1 normalizes with brace_a and C2 with brace_b",
    "x defaults to V1(phi_F) of the computed false vacuum rather than the printed 0.663",
    "initial-state integrand [phi_T]^2 taken as the difference form; the final functional is centered on phi_T inside [0, L] and phi_F outside",
    "e in e*E0^2/H^2 is the electric charge; the whole term is field_term, default 0",
    "quoted FRW estimate, not computed: universe size ~1e-2 cm at t ~ 1e-42 s",
];

fn annotate_vacua(err: &VacuaError, section: &'static str) -> Annotation {
    let (severity, kind) = match err {
        VacuaError::InsufficientMinima { .. } => (Severity::Warning, "InsufficientMinima"),
        VacuaError::NonPositiveGap { .. } => (Severity::Warning, "NonPositiveGap"),
        VacuaError::FailedConvergence { .. } => (Severity::Error, "FailedConvergence"),
        VacuaError::InvalidWindow { .. } => (Severity::Error, "InvalidWindow"),
        VacuaError::Params(_) => (Severity::Error, "InvalidParams"),
    };
    Annotation {
        section,
        severity,
        kind,
        message: err.to_string(),
    }
}

fn error_note(section: &'static str, kind: &'static str, e: impl ToString) -> Annotation {
    Annotation {
        section,
        severity: Severity::Error,
        kind,
        message: e.to_string(),
    }
}

/// Runs the whole pipeline. Only configuration and parameter problems are
/// fatal; failures inside a section become annotations.
pub fn build_report(cfg: &RunConfig) -> Result<Report, CliError> {
    cfg.validate()?;
    let p = cfg.params;
    p.validate().map_err(|e| CliError::Compute(e.to_string()))?;
    let (lo, hi) = cfg.window();
    let mut notes = Vec::new();
    let mut q = Quantities::default();

    let critical_points = match scan_critical_points(&p, lo, hi, cfg.grid_n) {
        Ok(pts) => pts,
        Err(e) => {
            notes.push(annotate_vacua(&e, "vacua"));
            Vec::new()
        }
    };
    let vacua = if notes.is_empty() {
        match classify_vacua(&critical_points, &p) {
            Ok(v) => Some(v),
            Err(e) => {
                notes.push(annotate_vacua(&e, "vacua"));
                None
            }
        }
    } else {
        None
    };
    if let Some(v) = &vacua {
        if let Err(e) = v.require_length_scale() {
            notes.push(annotate_vacua(&e, "vacua"));
        }
    }
    let printed = VacuumPair::from_fields(&p, reference::PHI_FALSE.value, reference::PHI_TRUE.value);

    q.push("phi_false", Quantity::against(reference::PHI_FALSE, vacua.map(|v| v.phi_false)));
    q.push("phi_true", Quantity::against(reference::PHI_TRUE, vacua.map(|v| v.phi_true)));
    q.push("gap_potential", Quantity::against(reference::GAP, vacua.map(|v| v.gap_potential)));
    q.push("gap_bogomilnyi", Quantity::against(reference::GAP, vacua.map(|v| v.gap_bogomilnyi)));
    q.push(
        "gap_bogomilnyi_printed_fields",
        Quantity::against(reference::GAP, Some(printed.gap_bogomilnyi))
            .with_note("quoted potential gap vs brace-formula gap at the quoted fields"),
    );
    q.push("brace_a", Quantity::computed(vacua.map(|v| v.brace_a)));
    q.push("brace_b", Quantity::computed(vacua.map(|v| v.brace_b)));

    // slow roll
    let sr_opts = SlowRollOptions {
        flatness_threshold: cfg.flatness_threshold,
        ..SlowRollOptions::default()
    };
    let mut fields: Vec<(&'static str, f64)> = Vec::new();
    if let Some(v) = &vacua {
        fields.push(("computed_false", v.phi_false));
        fields.push(("computed_true", v.phi_true));
    }
    fields.push(("printed_false", reference::PHI_FALSE.value));
    fields.push(("printed_true", reference::PHI_TRUE.value));
    fields.push(("phi_star", p.phi_star));
    let mut slow_roll = Vec::new();
    for (at, phi) in fields {
        match slow_roll_report_with(&p, phi, &sr_opts) {
            Ok(report) => slow_roll.push(SlowRollRow { at, report }),
            Err(e) => notes.push(error_note("slow_roll", "SlowRoll", format!("{at}: {e}"))),
        }
    }
    let sr = |at: &str| slow_roll.iter().find(|r| r.at == at).map(|r| r.report);
    let triples = [
        ("true", "printed_true", reference::CURVATURE_AT_TRUE, reference::HUBBLE_SQ_AT_TRUE),
        ("false", "printed_false", reference::CURVATURE_AT_FALSE, reference::HUBBLE_SQ_AT_FALSE),
        ("phi_star", "phi_star", reference::CURVATURE_AT_PHI_STAR, reference::HUBBLE_SQ_AT_PHI_STAR),
    ];
    for (name, at, curv, h2) in triples {
        let r = sr(at);
        let ratio = Printed {
            value: curv.value / h2.value,
            tag: curv.tag,
        };
        let (kc, kh, kr) = match name {
            "true" => ("curvature_at_true", "hubble_sq_at_true", "flatness_ratio_at_true"),
            "false" => ("curvature_at_false", "hubble_sq_at_false", "flatness_ratio_at_false"),
            _ => ("curvature_at_phi_star", "hubble_sq_at_phi_star", "flatness_ratio_at_phi_star"),
        };
        q.push(kc, Quantity::against(curv, r.map(|r| r.d2v.abs())));
        q.push(kh, Quantity::against(h2, r.map(|r| r.hubble_sq)));
        q.push(kr, Quantity::against(ratio, r.map(|r| r.flatness_ratio)));
    }
    for (at, ke, kn) in [
        ("computed_false", "epsilon_at_false", "eta_at_false"),
        ("computed_true", "epsilon_at_true", "eta_at_true"),
    ] {
        q.push(ke, Quantity::computed(sr(at).map(|r| r.epsilon)));
        q.push(kn, Quantity::computed(sr(at).map(|r| r.eta)));
    }

    // reference constants
    let reference_section = ReferenceSection {
        phi0_threshold: phi0_threshold(),
        phi_star_estimate: phi_star_estimate(p.inflaton_mass, p.planck_mass),
        phi_star_quoted: std::iter::once(reference::PHI_STAR.value)
            .chain(reference::PHI_STAR_ALTERNATIVES.iter().map(|r| r.value))
            .collect(),
        dilaton_at_phi_star: dilaton_report(p.phi_star),
    };
    q.push("phi0_threshold", Quantity::against(reference::PHI0_THRESHOLD, Some(reference_section.phi0_threshold)));
    q.push("phi_star_estimate", Quantity::against(reference::PHI_STAR, Some(reference_section.phi_star_estimate)));

    let nucleation = nucleation_section(cfg, vacua.as_ref(), &printed, &mut notes);
    q.push("length_scale", Quantity::against(reference::LENGTH_SCALE, nucleation.length_l));
    q.push("x_vantage", Quantity::against(reference::X_VANTAGE, nucleation.x));
    q.push("m_star", Quantity::against(reference::MSTAR, Some(nucleation.mstar)));
    q.push("rho_t", Quantity::computed(Some(nucleation.rho_t)));
    q.push("s_t", Quantity::computed(Some(nucleation.s_t)));
    q.push("cdl_rate", Quantity::computed(nucleation.cdl_rate));
    q.push("garriga_n", Quantity::computed(nucleation.garriga_n));
    q.push("c1", Quantity::computed(nucleation.c1));
    q.push("c2", Quantity::computed(nucleation.c2));
    q.push("t_if", Quantity::computed(nucleation.t_if));
    q.push(
        "t_if_over_n",
        Quantity::computed(nucleation.t_if_over_n)
            .with_note("claimed to be within an order of magnitude; audited, not assumed"),
    );

    Ok(Report {
        units: UnitsSection {
            system: default_units(),
            electron_mass: ELECTRON_MASS_PLANCK,
            effective_mass: effective_mass(),
            frw_size_cm: FRW_PLANCK_EPOCH_SIZE_CM,
            frw_time_s: FRW_PLANCK_EPOCH_TIME_S,
        },
        params: ParamsSection {
            potential: p,
            window: [lo, hi],
            grid_n: cfg.grid_n,
            flatness_threshold: cfg.flatness_threshold,
            heavy_inflaton_warning: p.heavy_inflaton_warning(),
        },
        critical_points,
        vacua,
        printed_field_vacua: printed,
        slow_roll,
        nucleation,
        reference: reference_section,
        quantities: q,
        interpretations: INTERPRETATIONS.to_vec(),
        annotations: notes,
    })
}

fn nucleation_section(
    cfg: &RunConfig,
    vacua: Option<&VacuumPair>,
    printed: &VacuumPair,
    notes: &mut Vec<Annotation>,
) -> NucleationSection {
    let p: &PotentialParams = &cfg.params;
    let n = &cfg.nucleation;
    let rho_t = rho_t_lower_bound(p.inflaton_mass, p.planck_mass);
    let s_t = cdl_surface_term(rho_t);
    let cdl = cdl_rate(&CdlInputs {
        prefactor_a: n.prefactor_a,
        bounce_action_sb: n.bounce_action_sb,
        true_vacuum_density_rho: rho_t,
    });
    if let Err(e) = &cdl {
        notes.push(error_note("nucleation", "DomainError", e));
    }
    let garriga = garriga_density(&GarrigaInputs {
        mass_m: n.garriga_mass,
        field_term: n.field_term,
        euclidean_action_se: n.euclidean_action_se,
    });
    if let Err(e) = &garriga {
        notes.push(error_note("nucleation", "DomainError", e));
    }

    let (pair, length_source) = match vacua {
        Some(v) if v.length_scale.is_some() => (Some(*v), "computed_vacua"),
        _ if printed.length_scale.is_some() => (Some(*printed), "printed_fields"),
        _ => (None, "unavailable"),
    };
    let length_l = pair.and_then(|v| v.length_scale);
    let (x, x_source) = match (n.vantage_x, vacua) {
        (Some(x), _) => (Some(x), "config"),
        (None, Some(v)) => (Some(p.v1(v.phi_false)), "computed_false_vacuum"),
        (None, None) => (Some(p.v1(reference::PHI_FALSE.value)), "printed_false_vacuum"),
    };

    let mut norm = |over: Option<f64>, brace: Option<f64>| -> Option<f64> {
        over.or_else(|| {
            let (b, l) = (brace?, length_l?);
            normalization_constant(b, l)
                .map_err(|e| notes.push(error_note("nucleation", "Normalization", e)))
                .ok()
        })
    };
    let c1 = norm(n.norm_c1, pair.map(|v| v.brace_a));
    let c2 = norm(n.norm_c2, pair.map(|v| v.brace_b));
    let mstar = effective_mass();

    let t_if = match (c1, c2, x, length_l) {
        (Some(c1), Some(c2), Some(x), Some(l)) => {
            match tunneling_amplitude(&TunnelInputs::new(c1, c2, mstar, x, l)) {
                Ok(t) => Some(t),
                Err(e) => {
                    notes.push(error_note("nucleation", "DomainError", e));
                    None
                }
            }
        }
        _ => None,
    };
    let garriga_n = garriga.ok();
    let ratio = t_if.zip(garriga_n).map(|(t, n)| t / n);
    let log_ratio = t_if.zip(garriga_n).map(|(t, n)| orders_of_magnitude_apart(t, n));
    NucleationSection {
        rho_t,
        s_t,
        cdl_rate: cdl.as_ref().ok().map(|r| r.value),
        cdl_saturated: cdl.map(|r| r.saturated).unwrap_or(false),
        garriga_n,
        length_l,
        length_source,
        alpha: length_l.map(|l| 1.0 / l),
        x,
        x_source,
        mstar,
        c1,
        c2,
        t_if,
        t_if_over_n: ratio,
        log10_t_if_over_n: log_ratio,
        within_order_of_magnitude: log_ratio.filter(|r| r.is_finite()).map(|r| r.abs() <= 1.0),
    }
}

/// Rendered report plus the worst annotation severity, for the exit code.
pub struct Rendered {
    pub text: String,
    pub severity: Option<Severity>,
    pub report: Report,
}

pub fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => crate::jsonfmt::to_string(report),
        OutputFormat::Csv => {
            use vacuakit::format::sig17;
            let opt = |v: Option<f64>| v.map(sig17).unwrap_or_default();
            let mut s = String::from("quantity,reference_value,reference_tag,computed_value,discrepancy_flag\n");
            for (name, q) in &report.quantities.0 {
                s.push_str(&format!(
                    "{name},{},{},{},{}\n",
                    opt(q.reference_value),
                    q.reference_tag.unwrap_or(""),
                    opt(q.computed_value),
                    q.discrepancy_flag
                ));
            }
            s
        }
    }
}

pub fn cmd_report(cfg: &RunConfig) -> Result<Rendered, CliError> {
    let report = build_report(cfg)?;
    Ok(Rendered {
        text: render(&report, cfg.format_or(OutputFormat::Json)),
        severity: report.worst_severity(),
        report,
    })
}
