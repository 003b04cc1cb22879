use std::f64::consts::{FRAC_PI_2, PI};

use tripartite::entanglement::{concurrence_sq_bipartition, concurrence_sq_pair, three_tangle};
use tripartite::evolution::{
    alpha_scan, classify_trivial, duration, geodesic_state, time_averages_with, EvolutionPair,
    EvolutionParams, GaussLegendre, Triviality,
};
use tripartite::sampling::RNG_ALGORITHM;
use tripartite::statistics::{run_campaign_multi, CampaignConfig, Measure};
use tripartite::{PureState3Q, Qubit};

use crate::config::{Command, RunConfig};
use crate::error::CliError;
use crate::output::Table;

/// The metadata lines every output file starts with.
fn header(config: &RunConfig, n: usize, bins: Option<usize>) -> Table {
    let mut t = Table::default();
    t.meta("command", config.command.name());
    t.meta("seed", config.seed);
    t.meta("stream-base", config.stream_base);
    t.meta("n", n);
    t.meta(
        "bins",
        bins.map_or_else(|| "n/a".to_owned(), |b| b.to_string()),
    );
    t.meta("nodes", config.nodes);
    t.meta("version", env!("CARGO_PKG_VERSION"));
    t.meta("rng", RNG_ALGORITHM);
    t
}

/// Label of a half-angle in column names, e.g. `0.125pi`.
pub fn theta_label(theta_half: f64) -> String {
    format!("{theta_half}pi")
}

/// `(alpha, avg_tangle)` on a uniform grid over `[0, π/2]`.
pub fn cmd_scan_alpha(config: &RunConfig) -> Result<Table, CliError> {
    let Command::ScanAlpha { points } = config.command else {
        unreachable!("scan-alpha dispatched with {:?}", config.command);
    };
    let alphas: Vec<f64> = (0..points)
        .map(|k| FRAC_PI_2 * k as f64 / (points - 1) as f64)
        .collect();
    let mut t = header(config, points, None);
    t.columns = vec!["alpha".into(), "avg_tangle".into()];
    t.rows = alpha_scan(&alphas, config.nodes)?
        .into_iter()
        .map(|(a, v)| vec![a, v])
        .collect();
    Ok(t)
}

/// One density column per (θ, measure), all sharing the bin grid.
///
/// Every angle draws from the same RNG streams, so the columns differ only
/// through θ.
pub fn cmd_pdf(config: &RunConfig) -> Result<Table, CliError> {
    let measures = [Measure::Tau, Measure::C2];
    let mut t = header(config, config.n_samples, Some(config.bins));
    t.meta("ensemble", config.ensemble);
    let halves: Vec<String> = config.theta_half.iter().map(|h| h.to_string()).collect();
    t.meta("theta-half", halves.join(","));

    let mut edges: Option<Vec<f64>> = None;
    let mut series = Vec::new();
    for (&half, theta) in config.theta_half.iter().zip(config.thetas()) {
        let campaign = CampaignConfig {
            samples: config.n_samples,
            seed: config.seed,
            stream_base: config.stream_base,
            workers: config.workers,
            bins: config.bins,
            nodes: config.nodes,
            ..CampaignConfig::new(config.ensemble, theta, Measure::Tau)
        };
        let pdfs = run_campaign_multi(&campaign, &measures)?;
        for (pdf, m) in pdfs.iter().zip(measures) {
            let name = format!("{m}_{}", theta_label(half));
            t.meta(&format!("mode.{name}"), format!("{:.11e}", pdf.mode()));
            edges.get_or_insert_with(|| pdf.bin_edges().to_vec());
            series.push((name, pdf.densities().to_vec()));
        }
    }

    let edges = edges.unwrap_or_default();
    t.columns = ["bin_lo", "bin_hi"].map(String::from).to_vec();
    t.columns
        .extend(series.iter().map(|(name, _)| format!("density_{name}")));
    t.rows = edges
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let mut row = vec![w[0], w[1]];
            row.extend(series.iter().map(|(_, d)| d[i]));
            row
        })
        .collect();
    Ok(t)
}

/// The per-point entanglement profile of one geodesic.
pub fn cmd_evolve(config: &RunConfig) -> Result<Table, CliError> {
    let Command::Evolve {
        initial,
        final_state,
        points,
    } = &config.command
    else {
        unreachable!("evolve dispatched with {:?}", config.command);
    };
    let verdict = classify_trivial(initial, final_state);
    let mut t = header(config, *points, None);
    t.meta("initial", initial.to_text());
    t.meta("final", final_state.to_text());
    t.meta("verdict", verdict);
    t.columns = [
        "xi", "tau", "c2_a_bc", "c2_ab", "c2_ac", "c2_bc", "residual",
    ]
    .map(String::from)
    .to_vec();
    if verdict == Triviality::Identical {
        t.meta("theta-half", 0);
        t.meta("duration", 0);
        return Ok(t);
    }

    let pair = EvolutionPair::from_states(*initial, *final_state)?;
    let params = EvolutionParams::new(1.0, config.nodes)?;
    t.meta("theta-half", format!("{:.11e}", pair.theta() / (2.0 * PI)));
    t.meta("omega", params.omega());
    t.meta("duration", format!("{:.11e}", duration(&pair, &params)));

    let rule = GaussLegendre::new(config.nodes)?;
    let mut averages = [0.0; 2];
    time_averages_with(
        &pair,
        &[&three_tangle, &|s: &PureState3Q| {
            concurrence_sq_bipartition(s, Qubit::A)
        }],
        &rule,
        &mut averages,
    )?;
    t.meta("avg.tau", format!("{:.11e}", averages[0]));
    t.meta("avg.c2_a_bc", format!("{:.11e}", averages[1]));

    let end = pair.xi_max();
    for k in 0..*points {
        let xi = end * k as f64 / (*points - 1) as f64;
        let s = geodesic_state(&pair, xi)?;
        let tau = three_tangle(&s);
        let c2_a = concurrence_sq_bipartition(&s, Qubit::A);
        let c2_ab = concurrence_sq_pair(&s, Qubit::A, Qubit::B)?;
        let c2_ac = concurrence_sq_pair(&s, Qubit::A, Qubit::C)?;
        let c2_bc = concurrence_sq_pair(&s, Qubit::B, Qubit::C)?;
        t.rows.push(vec![
            xi,
            tau,
            c2_a,
            c2_ab,
            c2_ac,
            c2_bc,
            c2_a - c2_ab - c2_ac - tau,
        ]);
    }
    Ok(t)
}
