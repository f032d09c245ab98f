use std::fmt;
use std::str::FromStr;

use super::{AtomSet, Frame, LatticeError, Proposition};

/// How declared constraints decide emptiness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EmptinessMode {
    /// A proposition is empty only if it is canonically equal to a declared constraint.
    #[default]
    Declared,
    /// Anything below a declared-empty proposition is empty too.
    Propagated,
}

impl EmptinessMode {
    pub fn as_str(self) -> &'static str {
        match self {
            EmptinessMode::Declared => "declared",
            EmptinessMode::Propagated => "propagated",
        }
    }
}

impl fmt::Display for EmptinessMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EmptinessMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "declared" => Ok(EmptinessMode::Declared),
            "propagated" => Ok(EmptinessMode::Propagated),
            other => Err(format!(
                "unknown emptiness mode {other:?}, expected \"declared\" or \"propagated\""
            )),
        }
    }
}

/// A hybrid model: the frame plus the propositions declared empty.
#[derive(Debug, Clone)]
pub struct Model {
    frame: Frame,
    declared_empty: Vec<Proposition>,
    mode: EmptinessMode,
    // product terms of every constraint, for propagated mode
    empty_terms: Vec<AtomSet>,
}

impl Model {
    pub fn new(
        frame: Frame,
        constraints: Vec<Proposition>,
        mode: EmptinessMode,
    ) -> Result<Self, LatticeError> {
        let mut declared_empty = Vec::with_capacity(constraints.len());
        for c in constraints {
            frame.check(c.frame())?;
            if c.is_bottom() {
                return Err(LatticeError::EmptyConstraint(c.to_string()));
            }
            if !declared_empty.contains(&c) {
                declared_empty.push(c);
            }
        }
        declared_empty.sort();
        let mut empty_terms: Vec<AtomSet> = declared_empty
            .iter()
            .flat_map(|c| c.terms().iter().copied())
            .collect();
        super::reduce_terms(&mut empty_terms);
        let model = Self {
            frame,
            declared_empty,
            mode,
            empty_terms,
        };
        let ignorance = model.frame.ignorance();
        if model.is_empty_unchecked(&ignorance) {
            return Err(LatticeError::IgnoranceEmpty(ignorance.to_string()));
        }
        Ok(model)
    }

    /// The free model: nothing is declared empty.
    pub fn free(frame: Frame) -> Self {
        Self {
            frame,
            declared_empty: Vec::new(),
            mode: EmptinessMode::Declared,
            empty_terms: Vec::new(),
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn declared_empty(&self) -> &[Proposition] {
        &self.declared_empty
    }

    pub fn mode(&self) -> EmptinessMode {
        self.mode
    }

    /// Same constraints read under another emptiness mode.
    pub fn with_mode(&self, mode: EmptinessMode) -> Result<Self, LatticeError> {
        Self::new(self.frame.clone(), self.declared_empty.clone(), mode)
    }

    pub fn is_empty(&self, p: &Proposition) -> Result<bool, LatticeError> {
        self.frame.check(p.frame())?;
        Ok(self.is_empty_unchecked(p))
    }

    pub(crate) fn is_empty_unchecked(&self, p: &Proposition) -> bool {
        if p.is_bottom() {
            return true;
        }
        match self.mode {
            EmptinessMode::Declared => self.declared_empty.iter().any(|c| c.terms() == p.terms()),
            EmptinessMode::Propagated => super::terms_leq(p.terms(), &self.empty_terms),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::parse_expression;

    fn hybrid(mode: EmptinessMode) -> Model {
        let f = Frame::new(["A", "B", "C"]).unwrap();
        let cs = ["A & C", "C & (A | B)"]
            .iter()
            .map(|e| parse_expression(e, &f).unwrap())
            .collect();
        Model::new(f, cs, mode).unwrap()
    }

    #[test]
    fn declared_mode_matches_constraints_exactly() {
        let m = hybrid(EmptinessMode::Declared);
        let f = m.frame().clone();
        let p = |e| parse_expression(e, &f).unwrap();
        assert!(m.is_empty(&p("A & C")).unwrap());
        assert!(m.is_empty(&p("(B & C) | (C & A)")).unwrap());
        assert!(!m.is_empty(&p("B & C")).unwrap());
        assert!(!m.is_empty(&p("A & B & C")).unwrap());
        assert!(m.is_empty(&f.empty_proposition()).unwrap());
    }

    #[test]
    fn propagated_mode_closes_downward() {
        let m = hybrid(EmptinessMode::Propagated);
        let f = m.frame().clone();
        let p = |e| parse_expression(e, &f).unwrap();
        assert!(m.is_empty(&p("B & C")).unwrap());
        assert!(m.is_empty(&p("A & B & C")).unwrap());
        assert!(m.is_empty(&p("(A & C) | (B & C)")).unwrap());
        assert!(!m.is_empty(&p("C")).unwrap());
        assert!(!m.is_empty(&p("(A & B) | (B & C)")).unwrap());
    }

    #[test]
    fn rejects_bad_constraints() {
        let f = Frame::new(["A", "B"]).unwrap();
        let a = f.atom("A").unwrap();
        let b = f.atom("B").unwrap();
        assert!(matches!(
            Model::new(
                f.clone(),
                vec![f.empty_proposition()],
                EmptinessMode::Declared
            ),
            Err(LatticeError::EmptyConstraint(_))
        ));
        assert!(matches!(
            Model::new(f.clone(), vec![f.ignorance()], EmptinessMode::Declared),
            Err(LatticeError::IgnoranceEmpty(_))
        ));
        // both atoms empty drags the ignorance down with them
        assert!(matches!(
            Model::new(
                f.clone(),
                vec![a.clone(), b.clone()],
                EmptinessMode::Propagated
            ),
            Err(LatticeError::IgnoranceEmpty(_))
        ));
        assert!(Model::new(f.clone(), vec![a, b], EmptinessMode::Declared).is_ok());
        let g = Frame::new(["X"]).unwrap();
        assert_eq!(
            Model::new(f, vec![g.atom("X").unwrap()], EmptinessMode::Declared).err(),
            Some(LatticeError::FrameMismatch)
        );
    }

    #[test]
    fn mode_parses() {
        assert_eq!("declared".parse(), Ok(EmptinessMode::Declared));
        assert_eq!("propagated".parse(), Ok(EmptinessMode::Propagated));
        assert!("both".parse::<EmptinessMode>().is_err());
    }
}
