use super::{AtomSet, Frame, LatticeError, Proposition};

/// Largest frame [`enumerate_hyper_power_set`] accepts.
pub const ENUMERATION_CAP: usize = 4;

/// Every canonical proposition over `frame`, Empty first, in canonical order.
///
/// Walks all families of non-empty atom sets and keeps the antichains. With
/// four atoms that is 2^15 families, which is why the frame size is capped.
pub fn enumerate_hyper_power_set(frame: &Frame) -> Result<Vec<Proposition>, LatticeError> {
    let n = frame.len();
    if n > ENUMERATION_CAP {
        return Err(LatticeError::FrameTooLarge(n));
    }
    let subsets: Vec<AtomSet> = (1u64..(1 << n)).map(AtomSet::from_bits).collect();
    // above[i]: family bits of the strict supersets of subsets[i]
    let above: Vec<u64> = subsets
        .iter()
        .map(|&s| {
            subsets
                .iter()
                .enumerate()
                .filter(|&(_, &t)| t != s && s.is_subset(t))
                .fold(0, |acc, (j, _)| acc | (1 << j))
        })
        .collect();
    let mut out = Vec::new();
    for family in 0u64..(1 << subsets.len()) {
        let antichain =
            (0..subsets.len()).all(|i| family & (1 << i) == 0 || family & above[i] == 0);
        if antichain {
            let mut terms: Vec<AtomSet> = (0..subsets.len())
                .filter(|&i| family & (1 << i) != 0)
                .map(|i| subsets[i])
                .collect();
            terms.sort_unstable();
            out.push(Proposition::from_canonical(frame.clone(), terms));
        }
    }
    out.sort();
    Ok(out)
}
