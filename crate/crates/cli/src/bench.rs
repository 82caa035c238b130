//! Empirical scaling: wall time per solver over a doubling schedule of
//! synthetic workloads.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use coverchain::AnchorSet;

use crate::synth::Workload;
use crate::Mode;

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub seed: u64,
    pub min_log2: u32,
    pub max_log2: u32,
    /// The quadratic solvers stop at this size.
    pub brute_max_log2: u32,
    pub max_len: i64,
    pub span_factor: i64,
    /// Rounds; each round times every size once, and a size's timing is
    /// the median over rounds.
    pub repetitions: usize,
    /// Fast sizes run several times per sample so that a sample lasts at
    /// least this long; the sample is the mean.
    pub min_sample_seconds: f64,
    pub modes: Vec<Mode>,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            seed: 1,
            min_log2: 10,
            max_log2: 17,
            brute_max_log2: 13,
            max_len: 30,
            span_factor: 16,
            repetitions: 7,
            min_sample_seconds: 0.05,
            modes: vec![Mode::Weak, Mode::Strict, Mode::OneSided, Mode::BruteStrict],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub mode: Mode,
    pub n: usize,
    pub seconds: f64,
    /// `t(n) / t(n / 2)` when the previous size was measured.
    pub ratio: Option<f64>,
}

fn time_once(mode: Mode, set: &AnchorSet) -> Duration {
    let start = Instant::now();
    let result = mode
        .run(set)
        .expect("synthetic workloads satisfy equal match length");
    let elapsed = start.elapsed();
    std::hint::black_box(result.best_score());
    elapsed
}

fn sample(mode: Mode, set: &AnchorSet, runs: u32) -> f64 {
    let total: Duration = (0..runs).map(|_| time_once(mode, set)).sum();
    total.as_secs_f64() / f64::from(runs)
}

pub fn bench(opts: &BenchOptions) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for &mode in &opts.modes {
        let top = if mode.is_brute() {
            opts.max_log2.min(opts.brute_max_log2)
        } else {
            opts.max_log2
        };
        let sizes: Vec<(usize, AnchorSet, u32)> = (opts.min_log2..=top)
            .map(|log2| {
                let n = 1usize << log2;
                let set = Workload::scaled(n, opts.max_len, opts.span_factor)
                    .generate(opts.seed.wrapping_add(log2 as u64));
                let first = time_once(mode, &set).as_secs_f64().max(1e-7);
                let runs = (opts.min_sample_seconds / first)
                    .ceil()
                    .clamp(1.0, 10_000.0);
                (n, set, runs as u32)
            })
            .collect();
        // Interleaved rounds spread slow drift in machine speed over all sizes.
        let mut samples: Vec<Vec<f64>> = vec![Vec::new(); sizes.len()];
        for _ in 0..opts.repetitions.max(1) {
            for (k, (_, set, runs)) in sizes.iter().enumerate() {
                samples[k].push(sample(mode, set, *runs));
            }
        }
        let mut prev: Option<f64> = None;
        for ((n, _, _), mut times) in sizes.into_iter().zip(samples) {
            times.sort_unstable_by(f64::total_cmp);
            let seconds = times[times.len() / 2];
            rows.push(BenchRow {
                mode,
                n,
                seconds,
                ratio: prev.map(|p| seconds / p),
            });
            prev = Some(seconds);
        }
    }
    rows
}

pub fn render(rows: &[BenchRow]) -> String {
    let mut out = String::from("#mode\tn\tseconds\tratio\n");
    for r in rows {
        let ratio = r
            .ratio
            .map_or_else(|| "-".to_string(), |x| format!("{x:.3}"));
        writeln!(out, "{}\t{}\t{:.6}\t{}", r.mode, r.n, r.seconds, ratio).unwrap();
    }
    out
}
