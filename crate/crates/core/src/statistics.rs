//! Histogram densities of time-averaged entanglement over random evolutions.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::entanglement::{concurrence_sq_bipartition, three_tangle};
use crate::error::{Error, Result};
use crate::evolution::{time_averages_with, GaussLegendre, DEFAULT_NODES, MIN_NODES};
use crate::sampling::{Ensemble, RngStream};
use crate::states::{PureState3Q, Qubit};

pub const DEFAULT_BINS: usize = 50;
pub const DEFAULT_SAMPLES: usize = 100_000;
pub const MIN_BINS: usize = 10;
pub const MIN_SAMPLES: usize = 100;

/// Samples per random stream. Sample `i` is always drawn from stream
/// `stream_base + i / SHARD_SIZE`, whatever the worker count.
pub const SHARD_SIZE: usize = 1024;

/// Quantity averaged along each evolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    /// Three-tangle τ.
    Tau,
    /// `C²_{A(BC)}`.
    C2,
}

impl Measure {
    pub fn evaluate(self, s: &PureState3Q) -> f64 {
        match self {
            Measure::Tau => three_tangle(s),
            Measure::C2 => concurrence_sq_bipartition(s, Qubit::A),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Measure::Tau => "tau",
            Measure::C2 => "c2",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tau" => Ok(Measure::Tau),
            "c2" => Ok(Measure::C2),
            other => Err(format!("unknown measure {other:?} (tau|c2)")),
        }
    }
}

/// Where a density came from. Fields are unset for ad hoc estimates.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PdfMetadata {
    pub ensemble: Option<Ensemble>,
    pub measure: Option<Measure>,
    pub theta: Option<f64>,
    pub seed: Option<u64>,
    pub stream_base: Option<u64>,
    pub nodes: Option<usize>,
}

/// Equal-width histogram density on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PdfEstimate {
    bin_edges: Vec<f64>,
    densities: Vec<f64>,
    counts: Vec<u64>,
    n_samples: usize,
    pub metadata: PdfMetadata,
}

impl PdfEstimate {
    pub fn bin_edges(&self) -> &[f64] {
        &self.bin_edges
    }

    pub fn densities(&self) -> &[f64] {
        &self.densities
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn n_samples(&self) -> usize {
        self.n_samples
    }

    pub fn bins(&self) -> usize {
        self.densities.len()
    }

    pub fn bin_midpoints(&self) -> impl Iterator<Item = f64> + '_ {
        self.bin_edges.windows(2).map(|w| 0.5 * (w[0] + w[1]))
    }

    /// `Σ densityᵢ · widthᵢ`, one up to rounding.
    pub fn integral(&self) -> f64 {
        self.bin_edges
            .windows(2)
            .zip(&self.densities)
            .map(|(w, d)| d * (w[1] - w[0]))
            .sum()
    }

    pub fn mode(&self) -> f64 {
        mode_of(self)
    }
}

/// Histogram of `samples` (each in `[0, 1]`) with `bins` equal bins,
/// normalized to unit integral. A sample equal to 1 lands in the last bin.
pub fn estimate_pdf(samples: &[f64], bins: usize) -> Result<PdfEstimate> {
    if samples.len() < MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            needed: MIN_SAMPLES,
            got: samples.len(),
        });
    }
    if bins < MIN_BINS {
        return Err(Error::OutOfRange {
            name: "bins",
            value: bins as f64,
            range: "[10, ∞)",
        });
    }
    let mut counts = vec![0u64; bins];
    for (index, &value) in samples.iter().enumerate() {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::SampleOutOfRange { index, value });
        }
        let bin = ((value * bins as f64) as usize).min(bins - 1);
        counts[bin] += 1;
    }
    let bin_edges: Vec<f64> = (0..=bins).map(|i| i as f64 / bins as f64).collect();
    let n = samples.len() as f64;
    let width = 1.0 / bins as f64;
    let densities = counts.iter().map(|&c| c as f64 / (n * width)).collect();
    Ok(PdfEstimate {
        bin_edges,
        densities,
        counts,
        n_samples: samples.len(),
        metadata: PdfMetadata::default(),
    })
}

/// Midpoint of the highest bin. Ties go to the lowest such bin.
pub fn mode_of(pdf: &PdfEstimate) -> f64 {
    // Bins share one width, so counts order the same way as densities
    // without rounding noise.
    let mut best = 0;
    for (i, &c) in pdf.counts.iter().enumerate() {
        if c > pdf.counts[best] {
            best = i;
        }
    }
    0.5 * (pdf.bin_edges[best] + pdf.bin_edges[best + 1])
}

/// Settings of one Monte Carlo run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CampaignConfig {
    pub ensemble: Ensemble,
    /// Separation angle θ (not θ/2).
    pub theta: f64,
    pub samples: usize,
    pub measure: Measure,
    pub seed: u64,
    pub stream_base: u64,
    pub workers: usize,
    pub bins: usize,
    pub nodes: usize,
}

impl CampaignConfig {
    pub fn new(ensemble: Ensemble, theta: f64, measure: Measure) -> Self {
        Self {
            ensemble,
            theta,
            samples: DEFAULT_SAMPLES,
            measure,
            seed: 0,
            stream_base: 0,
            workers: 1,
            bins: DEFAULT_BINS,
            nodes: DEFAULT_NODES,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.samples < MIN_SAMPLES {
            return Err(Error::TooFewSamples {
                needed: MIN_SAMPLES,
                got: self.samples,
            });
        }
        if self.nodes < MIN_NODES {
            return Err(Error::OutOfRange {
                name: "quadrature nodes",
                value: self.nodes as f64,
                range: "[16, ∞)",
            });
        }
        if self.workers == 0 {
            return Err(Error::OutOfRange {
                name: "workers",
                value: 0.0,
                range: "[1, ∞)",
            });
        }
        Ok(())
    }

    fn metadata(&self, measure: Measure) -> PdfMetadata {
        PdfMetadata {
            ensemble: Some(self.ensemble),
            measure: Some(measure),
            theta: Some(self.theta),
            seed: Some(self.seed),
            stream_base: Some(self.stream_base),
            nodes: Some(self.nodes),
        }
    }
}

type BoxedMeasure = Box<dyn Fn(&PureState3Q) -> f64 + Sync>;

/// Draws `config.samples` pairs and returns, for each requested measure,
/// its time average along every pair (in sample order).
///
/// Every measure is evaluated on the same pairs. The output depends only on
/// the seed, stream base and sample count.
pub fn campaign_samples(config: &CampaignConfig, measures: &[Measure]) -> Result<Vec<Vec<f64>>> {
    config.validate()?;
    let rule = GaussLegendre::new(config.nodes)?;
    let shards = config.samples.div_ceil(SHARD_SIZE);
    let closures: Vec<BoxedMeasure> = measures
        .iter()
        .map(|&m| Box::new(move |s: &PureState3Q| m.evaluate(s)) as Box<_>)
        .collect();

    let run_shard = |shard: usize| -> Result<Vec<f64>> {
        let start = shard * SHARD_SIZE;
        let end = (start + SHARD_SIZE).min(config.samples);
        let mut rng =
            RngStream::new(config.seed, config.stream_base.wrapping_add(shard as u64)).generator();
        let refs: Vec<&dyn Fn(&PureState3Q) -> f64> = closures
            .iter()
            .map(|b| b.as_ref() as &dyn Fn(&PureState3Q) -> f64)
            .collect();
        let mut out = Vec::with_capacity((end - start) * measures.len());
        let mut row = vec![0.0; measures.len()];
        for index in start..end {
            let wrap = |e| Error::Sample {
                index,
                source: Box::new(e),
            };
            let pair = config
                .ensemble
                .sample_pair(config.theta, &mut rng)
                .map_err(wrap)?;
            time_averages_with(&pair, &refs, &rule, &mut row).map_err(wrap)?;
            out.extend_from_slice(&row);
        }
        Ok(out)
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::WorkerPool(e.to_string()))?;
    let per_shard: Vec<Vec<f64>> = pool.install(|| {
        (0..shards)
            .into_par_iter()
            .map(run_shard)
            .collect::<Result<_>>()
    })?;

    let mut columns = vec![Vec::with_capacity(config.samples); measures.len()];
    for shard in per_shard {
        for row in shard.chunks_exact(measures.len().max(1)) {
            for (col, &v) in columns.iter_mut().zip(row) {
                col.push(v);
            }
        }
    }
    Ok(columns)
}

/// Density of the time-averaged `config.measure` over `config.samples` random evolutions.
pub fn run_campaign(config: &CampaignConfig) -> Result<PdfEstimate> {
    let values = campaign_samples(config, &[config.measure])?
        .pop()
        .expect("one measure requested");
    let mut pdf = estimate_pdf(&values, config.bins)?;
    pdf.metadata = config.metadata(config.measure);
    Ok(pdf)
}

/// Densities for several measures from one shared set of evolutions.
pub fn run_campaign_multi(
    config: &CampaignConfig,
    measures: &[Measure],
) -> Result<Vec<PdfEstimate>> {
    campaign_samples(config, measures)?
        .iter()
        .zip(measures)
        .map(|(values, &m)| {
            let mut pdf = estimate_pdf(values, config.bins)?;
            pdf.metadata = config.metadata(m);
            Ok(pdf)
        })
        .collect()
}
