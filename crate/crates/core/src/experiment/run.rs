use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Serialize;

use super::potential::{external_potential, ExternalCharge};
use super::state::{normalize_kg_state, sampled_inner_product, KgState};
use crate::error::{Error, Result};
use crate::numerics::{BallGrid, Resolution};
use crate::report::{sig17, sig17_complex, sig17_vec, Check, ClaimReport};
use crate::tolerances::{NORMALIZATION_ABS, ORTHOGONALITY_ABS, SIGNIFICANCE_FACTOR};

/// Inputs of the orthogonality experiment, natural units.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    #[serde(serialize_with = "sig17")]
    pub radius: f64,
    #[serde(serialize_with = "sig17")]
    pub mass: f64,
    /// Charge `e` of the confined particle.
    #[serde(serialize_with = "sig17")]
    pub charge: f64,
    /// Charge `q` of the external particle.
    #[serde(serialize_with = "sig17")]
    pub external_charge: f64,
    #[serde(serialize_with = "sig17_vec")]
    pub distances: Vec<f64>,
    pub resolution: Resolution,
    pub sigma: i8,
    #[serde(serialize_with = "sig17")]
    pub time: f64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            radius: 1.0,
            mass: 1.0,
            charge: 1.0,
            external_charge: 1.0,
            distances: vec![1.5, 2.0, 4.0],
            resolution: Resolution::default(),
            sigma: 1,
            time: 0.0,
        }
    }
}

/// A value at the configured resolution and `|fine − base|` from one refinement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    #[serde(serialize_with = "sig17_complex")]
    pub value: Complex64,
    #[serde(serialize_with = "sig17")]
    pub error: f64,
}

impl Estimate {
    fn from_pair(base: Complex64, fine: Complex64) -> Self {
        Estimate {
            value: base,
            error: (fine - base).norm(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StateSummary {
    pub l: u32,
    pub m: i32,
    #[serde(serialize_with = "sig17")]
    pub k: f64,
    #[serde(serialize_with = "sig17")]
    pub omega: f64,
    #[serde(serialize_with = "sig17_complex")]
    pub norm: Complex64,
}

/// `U` at one charge distance, for unit-prefactor and for normalized states.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InteractionPoint {
    #[serde(serialize_with = "sig17")]
    pub d: f64,
    pub raw: Estimate,
    pub normalized: Estimate,
}

/// Sign and modelling conventions the numbers depend on.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Conventions {
    pub time_dependence: String,
    pub sigma: i8,
    /// Sign of a normalized state's own inner product, `−σ`.
    pub self_product_sign: i8,
    pub potential: String,
    pub interaction: String,
    pub normalization: String,
    pub conjugation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub parameters: ExperimentConfig,
    pub refined_resolution: Resolution,
    pub conventions: Conventions,
    pub states: [StateSummary; 2],
    /// Potential-free inner product of the two normalized states.
    pub i01: Estimate,
    pub self_products: [Estimate; 2],
    pub interaction: Vec<InteractionPoint>,
    pub checks: ClaimReport,
}

impl ExperimentReport {
    pub fn passed(&self) -> bool {
        self.checks.passed()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `d,re_u,im_u,error` for the normalized states.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("d,re_u,im_u,error\n");
        for p in &self.interaction {
            let _ = writeln!(
                out,
                "{:.16e},{:.16e},{:.16e},{:.16e}",
                p.d, p.normalized.value.re, p.normalized.value.im, p.normalized.error
            );
        }
        out
    }
}

struct Pass {
    states: [KgState; 2],
    i01: Complex64,
    own: [Complex64; 2],
    raw_u: Vec<Complex64>,
    u: Vec<Complex64>,
}

fn one_pass(config: &ExperimentConfig, resolution: Resolution) -> Result<Pass> {
    let grid = BallGrid::new(config.radius, resolution)?;
    let raw = [
        KgState::lowest(0, config.radius, config.mass, config.sigma)?,
        KgState::lowest(1, config.radius, config.mass, config.sigma)?,
    ];
    let states = [
        normalize_kg_state(&raw[0], &grid)?,
        normalize_kg_state(&raw[1], &grid)?,
    ];
    let t = config.time;
    let e = config.charge;
    let f = [states[0].sample(&grid, t), states[1].sample(&grid, t)];
    let scale = [raw[0].norm / states[0].norm, raw[1].norm / states[1].norm];
    let zeros = vec![0.0; grid.len()];
    let ip = |i: usize, j: usize, v: &[f64]| {
        sampled_inner_product(&states[i], &states[j], &f[i], &f[j], v, e, &grid)
    };
    let i01 = ip(0, 1, &zeros)?.total;
    let own = [ip(0, 0, &zeros)?.total, ip(1, 1, &zeros)?.total];
    let mut raw_u = Vec::new();
    let mut u = Vec::new();
    for &d in &config.distances {
        let v = external_potential(
            &ExternalCharge {
                q: config.external_charge,
                d,
            },
            &grid,
        )?;
        let cross = ip(0, 1, &v)?.interaction;
        // U is bilinear in the prefactors.
        raw_u.push(cross * scale[0].conj() * scale[1]);
        u.push(cross);
    }
    Ok(Pass {
        states,
        i01,
        own,
        raw_u,
        u,
    })
}

/// Builds the `l = 0` and `l = 1` well states, checks their orthogonality
/// without a potential, and measures the interaction term `U` for the
/// external charge at each configured distance. Every number comes with a
/// one-refinement error estimate.
pub fn run_orthogonality_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    if config.distances.is_empty() {
        return Err(Error::InvalidConfiguration(
            "no charge distances given".into(),
        ));
    }
    let refined = config.resolution.refined();
    let base = one_pass(config, config.resolution)?;
    let fine = one_pass(config, refined)?;

    let i01 = Estimate::from_pair(base.i01, fine.i01);
    let self_products = [
        Estimate::from_pair(base.own[0], fine.own[0]),
        Estimate::from_pair(base.own[1], fine.own[1]),
    ];
    let interaction: Vec<InteractionPoint> = config
        .distances
        .iter()
        .enumerate()
        .map(|(n, &d)| InteractionPoint {
            d,
            raw: Estimate::from_pair(base.raw_u[n], fine.raw_u[n]),
            normalized: Estimate::from_pair(base.u[n], fine.u[n]),
        })
        .collect();

    let mut checks = ClaimReport::default();
    checks.push(
        Check::new(
            "orthogonality_without_potential",
            "the two states are orthogonal when no external potential acts",
            i01.value.norm() <= ORTHOGONALITY_ABS,
            format!(
                "|I01| = {:.3e} (limit {ORTHOGONALITY_ABS:.0e})",
                i01.value.norm()
            ),
        )
        .with_value("abs_i01", i01.value.norm())
        .with_value("error", i01.error),
    );
    let worst_norm = self_products
        .iter()
        .map(|p| (p.value.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    checks.push(Check::new(
        "normalization",
        "each state's own inner product has modulus 1",
        worst_norm <= NORMALIZATION_ABS,
        format!("max ||self| - 1| = {worst_norm:.3e}"),
    ));

    if config.charge == 0.0 || config.external_charge == 0.0 {
        let vanishes = interaction
            .iter()
            .all(|p| p.normalized.value.norm() <= p.normalized.error);
        checks.push(Check::new(
            "interaction_vanishes",
            "with no coupling the potential term contributes nothing",
            vanishes,
            "U = 0 at every distance".to_string(),
        ));
    } else {
        let mut significant = Check::new(
            "interaction_significant",
            "the potential term spoils orthogonality by more than its numerical uncertainty",
            interaction
                .iter()
                .all(|p| p.normalized.value.norm() > SIGNIFICANCE_FACTOR * p.normalized.error),
            format!("|U| > {SIGNIFICANCE_FACTOR} x refinement error at every distance"),
        );
        for p in &interaction {
            significant = significant
                .with_value(format!("abs_u(d={})", p.d), p.normalized.value.norm())
                .with_value(format!("error(d={})", p.d), p.normalized.error);
        }
        checks.push(significant);

        let mut by_distance: Vec<&InteractionPoint> = interaction.iter().collect();
        by_distance.sort_by(|a, b| a.d.total_cmp(&b.d));
        let monotone = by_distance
            .windows(2)
            .all(|w| w[0].normalized.value.norm() > w[1].normalized.value.norm());
        checks.push(Check::new(
            "interaction_grows_toward_ball",
            "|U| increases as the external charge approaches",
            monotone,
            "|U| strictly decreasing in d".to_string(),
        ));
    }

    let summary = |s: &KgState| StateSummary {
        l: s.l,
        m: s.m,
        k: s.radial.k,
        omega: s.omega,
        norm: s.norm,
    };
    let sigma = config.sigma;
    Ok(ExperimentReport {
        parameters: config.clone(),
        refined_resolution: refined,
        conventions: Conventions {
            time_dependence: "phi = N f(r) Y_lm exp(i sigma omega t)".into(),
            sigma,
            self_product_sign: -sigma,
            potential: "V = q / |x - d z|, vector potential neglected (static snapshot)".into(),
            interaction: "U = -2 e integral V conj(phi0) phi1 over the ball".into(),
            normalization: "raw: unit prefactor; normalized: |own inner product| = 1".into(),
            conjugation: "first slot conjugated".into(),
        },
        states: [summary(&base.states[0]), summary(&base.states[1])],
        i01,
        self_products,
        interaction,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes() {
        let r = run_orthogonality_experiment(&ExperimentConfig::default()).unwrap();
        assert!(r.passed(), "{}", r.checks.to_table());
        let u: Vec<f64> = r
            .interaction
            .iter()
            .map(|p| p.normalized.value.norm())
            .collect();
        assert!(u[0] > u[1] && u[1] > u[2] && u[2] > 0.0);
        // Both profiles positive inside, e q > 0: U < 0.
        assert!(r.interaction.iter().all(|p| p.normalized.value.re < 0.0));
        assert_eq!(r.conventions.self_product_sign, -1);
    }

    #[test]
    fn uncoupled_run_reports_zero() {
        let config = ExperimentConfig {
            charge: 0.0,
            ..ExperimentConfig::default()
        };
        let r = run_orthogonality_experiment(&config).unwrap();
        assert!(r.passed(), "{}", r.checks.to_table());
        assert!(r
            .interaction
            .iter()
            .all(|p| p.normalized.value == Complex64::new(0.0, 0.0)));
    }

    #[test]
    fn bad_configurations() {
        let inside = ExperimentConfig {
            distances: vec![2.0, 0.9],
            ..ExperimentConfig::default()
        };
        assert!(matches!(
            run_orthogonality_experiment(&inside),
            Err(Error::InvalidConfiguration(_))
        ));
        let empty = ExperimentConfig {
            distances: vec![],
            ..ExperimentConfig::default()
        };
        assert!(run_orthogonality_experiment(&empty).is_err());
    }

    #[test]
    fn serialization_is_deterministic() {
        let config = ExperimentConfig {
            resolution: Resolution {
                panels: 4,
                order: 6,
                n_theta: 8,
                n_phi: 2,
            },
            ..ExperimentConfig::default()
        };
        let a = run_orthogonality_experiment(&config).unwrap();
        let b = run_orthogonality_experiment(&config).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        let csv = a.to_csv();
        assert_eq!(csv.lines().next(), Some("d,re_u,im_u,error"));
        assert_eq!(csv.lines().count(), 4);
        let v: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(v["parameters"]["distances"][1].as_f64(), Some(2.0));
    }
}
