//! Hyper-power-set elements as reduced monotone DNF.
//!
//! A [`Proposition`] is a union of intersections of atoms. Each intersection
//! is an [`AtomSet`] and the union is stored as an antichain under inclusion,
//! sorted by (size, lexicographic) so that two propositions denote the same
//! lattice element exactly when their term lists are identical.
//!
//! Only `∪` and `∩` exist here; there is no complement.

mod enumerate;
mod model;
mod parse;

pub use enumerate::{enumerate_hyper_power_set, ENUMERATION_CAP};
pub use model::{EmptinessMode, Model};
pub use parse::parse_expression;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

/// Largest frame a bitmask [`AtomSet`] can address.
pub const MAX_ATOMS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("frame must contain at least one atom")]
    EmptyFrame,
    #[error("frame has {0} atoms, at most {MAX_ATOMS} are supported")]
    FrameTooWide(usize),
    #[error("invalid atom label {0:?}")]
    InvalidAtomLabel(String),
    #[error("duplicate atom label {0:?}")]
    DuplicateAtom(String),
    #[error("propositions belong to different frames")]
    FrameMismatch,
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("unknown atom {token:?} at column {column}")]
    UnknownAtom { token: String, column: usize },
    #[error("frame has {0} atoms; enumeration is capped at {ENUMERATION_CAP}")]
    FrameTooLarge(usize),
    #[error("constraint {0} denotes the empty proposition")]
    EmptyConstraint(String),
    #[error("the model makes total ignorance {0} empty")]
    IgnoranceEmpty(String),
}

pub(crate) fn is_atom_label(label: &str) -> bool {
    let mut chars = label.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// The frame of discernment: a non-empty set of atom labels in lexicographic order.
///
/// Cloning is cheap; clones share the label storage.
#[derive(Clone)]
pub struct Frame {
    atoms: Arc<[String]>,
}

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self, LatticeError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut atoms: Vec<String> = labels.into_iter().map(Into::into).collect();
        if atoms.is_empty() {
            return Err(LatticeError::EmptyFrame);
        }
        if let Some(bad) = atoms.iter().find(|a| !is_atom_label(a)) {
            return Err(LatticeError::InvalidAtomLabel(bad.clone()));
        }
        atoms.sort();
        if let Some(pair) = atoms.windows(2).find(|w| w[0] == w[1]) {
            return Err(LatticeError::DuplicateAtom(pair[0].clone()));
        }
        if atoms.len() > MAX_ATOMS {
            return Err(LatticeError::FrameTooWide(atoms.len()));
        }
        Ok(Self {
            atoms: atoms.into(),
        })
    }

    /// Frame with atoms `A`, `B`, `C`, ... (up to 26).
    pub fn alphabetic(n: usize) -> Result<Self, LatticeError> {
        if n > 26 {
            return Err(LatticeError::FrameTooWide(n));
        }
        Self::new((0..n).map(|i| char::from(b'A' + i as u8).to_string()))
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.atoms.binary_search_by(|a| a.as_str().cmp(label)).ok()
    }

    /// Every atom as a single-atom set.
    pub fn full_set(&self) -> AtomSet {
        if self.len() == MAX_ATOMS {
            AtomSet(u64::MAX)
        } else {
            AtomSet((1u64 << self.len()) - 1)
        }
    }

    /// The union of all atoms (total ignorance).
    pub fn ignorance(&self) -> Proposition {
        let terms = (0..self.len()).map(AtomSet::singleton).collect();
        Proposition::from_canonical(self.clone(), terms)
    }

    pub fn empty_proposition(&self) -> Proposition {
        Proposition::from_canonical(self.clone(), Vec::new())
    }

    pub fn atom(&self, label: &str) -> Option<Proposition> {
        self.index_of(label)
            .map(|i| Proposition::from_canonical(self.clone(), vec![AtomSet::singleton(i)]))
    }

    pub(crate) fn same_as(&self, other: &Frame) -> bool {
        Arc::ptr_eq(&self.atoms, &other.atoms) || self.atoms == other.atoms
    }

    pub(crate) fn check(&self, other: &Frame) -> Result<(), LatticeError> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(LatticeError::FrameMismatch)
        }
    }
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Frame {}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Frame").field(&&*self.atoms).finish()
    }
}

/// A non-empty set of atom indices, read as the intersection of those atoms.
///
/// Ordered by size, then lexicographically over ascending indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct AtomSet(u64);

impl AtomSet {
    pub fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn singleton(index: usize) -> Self {
        Self(1u64 << index)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Self(indices.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 & (1u64 << index) != 0
    }

    pub fn is_subset(self, other: AtomSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 | other.0)
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }
}

impl Ord for AtomSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // equal sizes: whoever owns the lowest differing index sorts first
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for AtomSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

/// Sorts, deduplicates and drops every term that contains another term.
pub(crate) fn reduce_terms(terms: &mut Vec<AtomSet>) {
    terms.sort_unstable();
    terms.dedup();
    let mut kept = 0;
    for i in 0..terms.len() {
        let t = terms[i];
        if !terms[..kept].iter().any(|s| s.is_subset(t)) {
            terms[kept] = t;
            kept += 1;
        }
    }
    terms.truncate(kept);
}

/// A canonical element of the hyper-power set, or the empty proposition.
#[derive(Clone)]
pub struct Proposition {
    frame: Frame,
    terms: Vec<AtomSet>,
}

impl Proposition {
    pub(crate) fn from_canonical(frame: Frame, terms: Vec<AtomSet>) -> Self {
        Self { frame, terms }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn terms(&self) -> &[AtomSet] {
        &self.terms
    }

    /// True for the distinguished empty proposition (no terms), regardless of model.
    pub fn is_bottom(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn intersect(&self, other: &Proposition) -> Result<Proposition, LatticeError> {
        self.frame.check(&other.frame)?;
        Ok(self.meet(other))
    }

    pub fn unite(&self, other: &Proposition) -> Result<Proposition, LatticeError> {
        self.frame.check(&other.frame)?;
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        terms.extend_from_slice(&self.terms);
        terms.extend_from_slice(&other.terms);
        reduce_terms(&mut terms);
        Ok(Proposition::from_canonical(self.frame.clone(), terms))
    }

    /// Lattice order: every term of `self` contains some term of `other`.
    pub fn leq(&self, other: &Proposition) -> Result<bool, LatticeError> {
        self.frame.check(&other.frame)?;
        Ok(terms_leq(&self.terms, &other.terms))
    }

    pub(crate) fn meet(&self, other: &Proposition) -> Proposition {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &t in &self.terms {
            for &s in &other.terms {
                terms.push(t.union(s));
            }
        }
        if terms.len() > 1 {
            reduce_terms(&mut terms);
        }
        Proposition::from_canonical(self.frame.clone(), terms)
    }
}

pub(crate) fn terms_leq(lower: &[AtomSet], upper: &[AtomSet]) -> bool {
    lower.iter().all(|&t| upper.iter().any(|&s| s.is_subset(t)))
}

/// Builds the canonical proposition for a union of atom-set intersections.
pub fn canonicalize<I>(frame: &Frame, raw_terms: I) -> Proposition
where
    I: IntoIterator<Item = AtomSet>,
{
    let full = frame.full_set();
    let mut terms: Vec<AtomSet> = raw_terms.into_iter().collect();
    debug_assert!(terms.iter().all(|t| !t.is_empty() && t.is_subset(full)));
    reduce_terms(&mut terms);
    Proposition::from_canonical(frame.clone(), terms)
}

impl PartialEq for Proposition {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.frame == other.frame
    }
}

impl Eq for Proposition {}

impl Hash for Proposition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Ord for Proposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms
            .cmp(&other.terms)
            .then_with(|| self.frame.atoms.cmp(&other.frame.atoms))
    }
}

impl PartialOrd for Proposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.pad("0");
        }
        let wrap = self.terms.len() > 1;
        let mut out = String::new();
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" | ");
            }
            let paren = wrap && term.len() > 1;
            if paren {
                out.push('(');
            }
            for (j, atom) in term.indices().enumerate() {
                if j > 0 {
                    out.push_str(" & ");
                }
                out.push_str(&self.frame.atoms[atom]);
            }
            if paren {
                out.push(')');
            }
        }
        f.pad(&out)
    }
}

impl fmt::Debug for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Proposition({self})")
    }
}
