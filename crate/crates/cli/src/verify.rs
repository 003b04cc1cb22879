use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt::Write as _;

use rand::Rng;
use serde_json::json;
use tripartite::entanglement::{concurrence_sq_bipartition, concurrence_sq_pair, three_tangle};
use tripartite::evolution::{
    alpha_scan, case1_pair, case1_state, case1_tangle_closed_form, geodesic_state,
    ghz_phase_family, time_average,
};
use tripartite::sampling::{haar_unitary, Ensemble, RngStream};
use tripartite::{PureState3Q, Qubit};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::Format;

/// Outcome of one invariant suite.
#[derive(Debug, Clone, PartialEq)]
pub struct Suite {
    pub name: &'static str,
    pub worst: f64,
    pub limit: f64,
}

impl Suite {
    pub fn passed(&self) -> bool {
        self.worst < self.limit
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub seed: u64,
    pub suites: Vec<Suite>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(Suite::passed)
    }

    /// Comma-separated names of the failing suites, if any.
    pub fn suite_failures(&self) -> Option<String> {
        let failed: Vec<&str> = self
            .suites
            .iter()
            .filter(|s| !s.passed())
            .map(|s| s.name)
            .collect();
        (!failed.is_empty()).then(|| failed.join(", "))
    }

    pub fn suite(&self, name: &str) -> Option<&Suite> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "# command: verify\n# seed: {}\n# version: {}\n",
            self.seed,
            env!("CARGO_PKG_VERSION")
        );
        for s in &self.suites {
            let status = if s.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{status} {:<20} worst {:.3e}  limit {:.0e}",
                s.name, s.worst, s.limit
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        let suites: Vec<_> = self
            .suites
            .iter()
            .map(|s| json!({"name": s.name, "passed": s.passed(), "worst": s.worst, "limit": s.limit}))
            .collect();
        let doc = json!({
            "metadata": {"command": "verify", "seed": self.seed.to_string(), "version": env!("CARGO_PKG_VERSION")},
            "passed": self.passed(),
            "suites": suites,
        });
        serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n"
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

fn stream(config: &RunConfig, suite: u64) -> impl Rng {
    RngStream::new(config.seed, config.stream_base.wrapping_add(suite)).generator()
}

fn haar_state<R: Rng>(rng: &mut R) -> Result<PureState3Q, CliError> {
    let column = haar_unitary(8, rng)?.column(0);
    Ok(PureState3Q::from_normalized(
        column.try_into().expect("eight amplitudes"),
    )?)
}

fn monogamy(config: &RunConfig) -> Result<Suite, CliError> {
    let mut rng = stream(config, 0);
    let mut worst = 0.0f64;
    for _ in 0..config.n_samples {
        let s = haar_state(&mut rng)?;
        let tau = three_tangle(&s);
        for cut in Qubit::ALL {
            let [p, q] = cut.others();
            let residual = concurrence_sq_bipartition(&s, cut)
                - concurrence_sq_pair(&s, cut, p)?
                - concurrence_sq_pair(&s, cut, q)?
                - tau;
            worst = worst.max(residual.abs());
        }
    }
    Ok(Suite {
        name: "monogamy",
        worst,
        limit: 1e-8,
    })
}

fn haar_unitarity(config: &RunConfig) -> Result<Suite, CliError> {
    let mut rng = stream(config, 1);
    let mut worst = 0.0f64;
    for dim in [4, 8] {
        for _ in 0..1000 {
            worst = worst.max(haar_unitary(dim, &mut rng)?.unitarity_defect());
        }
    }
    Ok(Suite {
        name: "haar-unitarity",
        worst,
        limit: 1e-12,
    })
}

fn reference_tangles() -> Suite {
    let worst = (three_tangle(&PureState3Q::ghz()) - 1.0)
        .abs()
        .max(three_tangle(&PureState3Q::w()).abs());
    Suite {
        name: "reference-tangles",
        worst,
        limit: 1e-12,
    }
}

fn closed_form() -> Suite {
    let mut worst = 0.0f64;
    for i in 0..50 {
        for j in 0..50 {
            let xi = FRAC_PI_2 * i as f64 / 49.0;
            let alpha = FRAC_PI_2 * j as f64 / 49.0;
            let gap = case1_tangle_closed_form(xi, alpha) - three_tangle(&case1_state(xi, alpha));
            worst = worst.max(gap.abs());
        }
    }
    Suite {
        name: "closed-form",
        worst,
        limit: 1e-12,
    }
}

fn ghz_family(config: &RunConfig) -> Result<Suite, CliError> {
    let mut rng = stream(config, 2);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let (pa, pb) = (rng.random::<f64>() * TAU, rng.random::<f64>() * TAU);
        let klm = [rng.random(), rng.random(), rng.random()];
        let pair = ghz_phase_family(pa, pb, klm);
        for k in 0..50 {
            let s = geodesic_state(&pair, pair.xi_max() * k as f64 / 49.0)?;
            worst = worst.max((three_tangle(&s) - 1.0).abs());
            for (p, q) in [
                (Qubit::A, Qubit::B),
                (Qubit::A, Qubit::C),
                (Qubit::B, Qubit::C),
            ] {
                worst = worst.max(concurrence_sq_pair(&s, p, q)?);
            }
        }
    }
    Ok(Suite {
        name: "ghz-phase-family",
        worst,
        limit: 1e-10,
    })
}

/// Norm along the path and the prescribed overlap of sampled pairs.
fn sampled_geodesics(config: &RunConfig) -> Result<[Suite; 3], CliError> {
    let mut rng = stream(config, 3);
    let (mut norm, mut overlap, mut ends) = (0.0f64, 0.0f64, 0.0f64);
    for ensemble in [Ensemble::Symmetric, Ensemble::General] {
        for theta in [PI / 4.0, PI / 2.0, 3.0 * PI / 4.0, PI] {
            for _ in 0..100 {
                let pair = ensemble.sample_pair(theta, &mut rng)?;
                let ov = pair.initial().inner_product(pair.final_state());
                overlap = overlap.max((ov.re - (theta / 2.0).cos()).abs().max(ov.im.abs()));
                for k in 0..100 {
                    let s = geodesic_state(&pair, pair.xi_max() * k as f64 / 99.0)?;
                    norm = norm.max((s.norm() - 1.0).abs());
                }
                let first = geodesic_state(&pair, 0.0)?;
                let last = geodesic_state(&pair, pair.xi_max())?;
                for (a, b) in [(&first, pair.initial()), (&last, pair.final_state())] {
                    for (x, y) in a.amplitudes().iter().zip(b.amplitudes()) {
                        ends = ends.max((x - y).norm());
                    }
                }
            }
        }
    }
    Ok([
        Suite {
            name: "pair-overlap",
            worst: overlap,
            limit: 1e-10,
        },
        Suite {
            name: "geodesic-norm",
            worst: norm,
            limit: 1e-10,
        },
        Suite {
            name: "geodesic-endpoints",
            worst: ends,
            limit: 1e-12,
        },
    ])
}

fn published_averages(config: &RunConfig) -> Result<Suite, CliError> {
    let scan = alpha_scan(&[0.0, FRAC_PI_2], config.nodes)?;
    let worst = (scan[0].1 - 0.7215).abs().max((scan[1].1 - 0.1667).abs());
    Ok(Suite {
        name: "published-averages",
        worst,
        limit: 5e-4,
    })
}

/// Adaptive quadrature against a 10⁶-point midpoint sum on the kinked case (i) integrand.
fn quadrature(config: &RunConfig) -> Result<Suite, CliError> {
    const PANELS: usize = 1_000_000;
    let mut worst = 0.0f64;
    for alpha in [0.0, 0.7, 1.3] {
        let pair = case1_pair(alpha)?;
        let quad = time_average(&pair, three_tangle, config.nodes)?;
        let h = pair.xi_max() / PANELS as f64;
        let riemann = (0..PANELS)
            .map(|k| case1_tangle_closed_form((k as f64 + 0.5) * h, alpha))
            .sum::<f64>()
            / PANELS as f64;
        worst = worst.max((quad - riemann).abs());
    }
    Ok(Suite {
        name: "quadrature",
        worst,
        limit: 1e-6,
    })
}

pub fn run_suites(config: &RunConfig) -> Result<Report, CliError> {
    let mut suites = vec![
        monogamy(config)?,
        haar_unitarity(config)?,
        reference_tangles(),
        closed_form(),
        ghz_family(config)?,
    ];
    suites.extend(sampled_geodesics(config)?);
    suites.push(published_averages(config)?);
    suites.push(quadrature(config)?);
    Ok(Report {
        seed: config.seed,
        suites,
    })
}
