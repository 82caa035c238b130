use coverchain::{Anchor, Chain, ChainingResult};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Tsv,
    Jsonl,
}

#[derive(Serialize)]
struct Row {
    j: usize,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    #[serde(rename = "C")]
    score: i64,
    #[serde(rename = "Cplus")]
    score_plus: i64,
}

#[derive(Serialize)]
struct Best {
    best: i64,
    index: Option<usize>,
}

#[derive(Serialize)]
struct ChainLine<'a> {
    chain: &'a [usize],
}

/// Renders a chaining result. Anchor indices are printed 1-based.
pub fn render(
    anchors: &[Anchor],
    result: &ChainingResult,
    chain: Option<&Chain>,
    format: Format,
) -> String {
    let mut out = String::new();
    let best_index = result.best.map(|j| j + 1);
    let chain_ids: Option<Vec<usize>> = chain.map(|c| c.indices.iter().map(|j| j + 1).collect());
    match format {
        Format::Tsv => {
            out.push_str("#j\ta\tb\tc\td\tC\tCplus\n");
            for (j, x) in anchors.iter().enumerate() {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    j + 1,
                    x.a,
                    x.b,
                    x.c,
                    x.d,
                    result.c[j],
                    result.c_plus[j]
                )
                .unwrap();
            }
            match best_index {
                Some(j) => writeln!(out, "best\t{}\t{}", result.best_score(), j).unwrap(),
                None => out.push_str("best\t0\n"),
            }
            if let Some(ids) = chain_ids {
                out.push_str("chain");
                for j in ids {
                    write!(out, "\t{j}").unwrap();
                }
                out.push('\n');
            }
        }
        Format::Jsonl => {
            for (j, x) in anchors.iter().enumerate() {
                let row = Row {
                    j: j + 1,
                    a: x.a,
                    b: x.b,
                    c: x.c,
                    d: x.d,
                    score: result.c[j],
                    score_plus: result.c_plus[j],
                };
                out.push_str(&serde_json::to_string(&row).unwrap());
                out.push('\n');
            }
            let best = Best {
                best: result.best_score(),
                index: best_index,
            };
            out.push_str(&serde_json::to_string(&best).unwrap());
            out.push('\n');
            if let Some(ids) = chain_ids {
                out.push_str(&serde_json::to_string(&ChainLine { chain: &ids }).unwrap());
                out.push('\n');
            }
        }
    }
    out
}
