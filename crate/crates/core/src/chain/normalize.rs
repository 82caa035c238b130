use crate::anchor::{coverage_of, Anchor, AnchorSet, Chain, Precedence};
use crate::error::{Error, Result};

/// Turns a weak chain into a strict chain of trimmed anchors with the same
/// coverage.
///
/// Working right to left, whenever the next anchor is nested in the current
/// one in some dimension, the current anchor is cut back on the right by the
/// larger of the two end overhangs plus one, in both dimensions. Start points
/// stay put, so every coverage term is unchanged. Needs equal match length
/// on the chain's anchors.
pub fn normalize_weak_chain(chain: &Chain, set: &AnchorSet) -> Result<(Vec<Anchor>, i64)> {
    let weak = Chain::new(chain.indices.clone(), Precedence::Weak);
    let mut anchors = weak.resolve(set)?;
    if let Some(pos) = anchors.iter().position(|x| !x.is_eml()) {
        return Err(Error::NotEqualMatchLength {
            index: chain.indices[pos],
            anchor: anchors[pos].to_string(),
        });
    }
    for j in (1..anchors.len()).rev() {
        let next = anchors[j];
        let cur = &mut anchors[j - 1];
        let overhang = (cur.b - next.b).max(cur.d - next.d);
        if overhang >= 0 {
            cur.b -= overhang + 1;
            cur.d -= overhang + 1;
        }
    }
    let score = coverage_of(&anchors, Precedence::Strict)?;
    Ok((anchors, score))
}
