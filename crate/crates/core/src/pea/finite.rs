//! Explicit finite pseudo effect algebras: an element set, a partial
//! addition table, a zero and a unit.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axiom {
    /// `a+b` and `(a+b)+c` exist iff `b+c` and `a+(b+c)` exist, and then
    /// both associations agree.
    Pe1,
    /// Every element has exactly one right and exactly one left complement:
    /// `a + d = e + a = 1`.
    Pe2,
    /// A defined sum `a+b` can be rewritten with the summands on either
    /// side: `a+b = d+a = b+e` for some d, e.
    Pe3,
    /// `a+1` or `1+a` defined forces `a = 0`.
    Pe4,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::Pe1 => write!(f, "PE1"),
            Axiom::Pe2 => write!(f, "PE2"),
            Axiom::Pe3 => write!(f, "PE3"),
            Axiom::Pe4 => write!(f, "PE4"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomCheck {
    Valid,
    Violation { axiom: Axiom, witness: Vec<String> },
}

impl AxiomCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, AxiomCheck::Valid)
    }
}

#[derive(Clone, Debug)]
pub struct FinitePea {
    names: Vec<String>,
    index: HashMap<String, usize>,
    zero: usize,
    unit: usize,
    /// Row-major n*n table; `None` marks an undefined sum.
    add: Vec<Option<usize>>,
    /// Cached order relation: a <= b iff some c has a + c = b.
    leq: Vec<bool>,
}

impl FinitePea {
    pub fn new(
        names: Vec<String>,
        zero: &str,
        unit: &str,
        triples: &[(String, String, String)],
    ) -> Result<FinitePea> {
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::PeaFormat(format!("duplicate element id `{n}`")));
            }
        }
        let look = |n: &str| -> Result<usize> {
            index
                .get(n)
                .copied()
                .ok_or_else(|| Error::UnknownId(n.to_string()))
        };
        let zero = look(zero)?;
        let unit = look(unit)?;
        let n = names.len();
        let mut add = vec![None; n * n];
        for (x, y, z) in triples {
            let (xi, yi, zi) = (look(x)?, look(y)?, look(z)?);
            match add[xi * n + yi] {
                None => add[xi * n + yi] = Some(zi),
                Some(prev) if prev == zi => {}
                Some(prev) => {
                    return Err(Error::PeaFormat(format!(
                        "conflicting triples: {x} + {y} = {} and {z}",
                        names[prev]
                    )))
                }
            }
        }
        let mut pea = FinitePea {
            names,
            index,
            zero,
            unit,
            add,
            leq: Vec::new(),
        };
        pea.rebuild_order();
        Ok(pea)
    }

    fn rebuild_order(&mut self) {
        let n = self.len();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for c in 0..n {
                if let Some(b) = self.add[a * n + c] {
                    leq[a * n + b] = true;
                }
            }
        }
        self.leq = leq;
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownId(name.to_string()))
    }

    pub fn try_add(&self, a: usize, b: usize) -> Option<usize> {
        self.add[a * self.len() + b]
    }

    /// Cached order: a <= b iff a + c = b for some c.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// All defined triples (a, b, a+b), row-major.
    pub fn defined_sums(&self) -> Vec<(usize, usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if let Some(c) = self.add[a * n + b] {
                    out.push((a, b, c));
                }
            }
        }
        out
    }

    // ---------------------------------------------------------------
    // Axiom scan
    // ---------------------------------------------------------------

    /// Full scan of the four defining axioms, O(n^3) over triples. Returns
    /// the first violation in a deterministic order (axioms in numeric
    /// order, witnesses in id order).
    pub fn check_axioms(&self) -> AxiomCheck {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                let ab = self.try_add(a, b);
                for c in 0..n {
                    let bc = self.try_add(b, c);
                    let left = ab.and_then(|x| self.try_add(x, c));
                    let right = bc.and_then(|x| self.try_add(a, x));
                    if left.is_some() != right.is_some() || left != right {
                        return AxiomCheck::Violation {
                            axiom: Axiom::Pe1,
                            witness: vec![
                                self.names[a].clone(),
                                self.names[b].clone(),
                                self.names[c].clone(),
                            ],
                        };
                    }
                }
            }
        }
        for a in 0..n {
            let rights: Vec<usize> =
                (0..n).filter(|&d| self.try_add(a, d) == Some(self.unit)).collect();
            let lefts: Vec<usize> =
                (0..n).filter(|&e| self.try_add(e, a) == Some(self.unit)).collect();
            if rights.len() != 1 || lefts.len() != 1 {
                return AxiomCheck::Violation {
                    axiom: Axiom::Pe2,
                    witness: vec![self.names[a].clone()],
                };
            }
        }
        for a in 0..n {
            for b in 0..n {
                if let Some(s) = self.try_add(a, b) {
                    let has_d = (0..n).any(|d| self.try_add(d, a) == Some(s));
                    let has_e = (0..n).any(|e| self.try_add(b, e) == Some(s));
                    if !has_d || !has_e {
                        return AxiomCheck::Violation {
                            axiom: Axiom::Pe3,
                            witness: vec![self.names[a].clone(), self.names[b].clone()],
                        };
                    }
                }
            }
        }
        for a in 0..n {
            if a != self.zero
                && (self.try_add(a, self.unit).is_some() || self.try_add(self.unit, a).is_some())
            {
                return AxiomCheck::Violation {
                    axiom: Axiom::Pe4,
                    witness: vec![self.names[a].clone()],
                };
            }
        }
        AxiomCheck::Valid
    }

    // ---------------------------------------------------------------
    // Derived operations
    // ---------------------------------------------------------------

    /// The x with x + a = b, when one exists (unique on valid algebras).
    pub fn solve_left(&self, a: usize, b: usize) -> Option<usize> {
        (0..self.len()).find(|&x| self.try_add(x, a) == Some(b))
    }

    /// The x with a + x = b, when one exists.
    pub fn solve_right(&self, a: usize, b: usize) -> Option<usize> {
        (0..self.len()).find(|&x| self.try_add(a, x) == Some(b))
    }

    /// b minus a on the left: the d with d + a = b; requires a <= b.
    pub fn left_minus(&self, a: usize, b: usize) -> Result<usize> {
        self.solve_left(a, b).ok_or_else(|| {
            Error::Precondition(format!(
                "{} is not left-below {}",
                self.names[a], self.names[b]
            ))
        })
    }

    /// a under b on the right: the d with a + d = b; requires a <= b.
    pub fn right_minus(&self, a: usize, b: usize) -> Result<usize> {
        self.solve_right(a, b).ok_or_else(|| {
            Error::Precondition(format!(
                "{} is not below {}",
                self.names[a], self.names[b]
            ))
        })
    }

    /// Left complement: the e with e + a = 1.
    pub fn comp_left(&self, a: usize) -> Result<usize> {
        self.left_minus(a, self.unit)
    }

    /// Right complement: the d with a + d = 1.
    pub fn comp_right(&self, a: usize) -> Result<usize> {
        self.right_minus(a, self.unit)
    }

    /// n-fold sum, `None` when some partial sum is undefined.
    pub fn nfold(&self, a: usize, n: u32) -> Option<usize> {
        let mut acc = self.zero;
        for _ in 0..n {
            acc = self.try_add(acc, a)?;
        }
        Some(acc)
    }

    pub fn is_commutative(&self) -> (bool, Option<(usize, usize)>) {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                if self.try_add(a, b) != self.try_add(b, a) {
                    return (false, Some((a, b)));
                }
            }
        }
        (true, None)
    }

    // ---------------------------------------------------------------
    // Ideals
    // ---------------------------------------------------------------

    /// All proper ideals: nonempty, downward closed, closed under defined
    /// sums. Exhaustive over subsets; guarded to small algebras.
    pub fn ideals(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.len();
        if n > 20 {
            return Err(Error::BudgetExceeded(format!(
                "ideal enumeration over {n} elements"
            )));
        }
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            if mask == (1 << n) - 1 {
                continue; // proper subsets only
            }
            if self.is_ideal_mask(mask) {
                let set: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                out.push(set);
            }
        }
        out.sort_by_key(|s| (s.len(), s.clone()));
        Ok(out)
    }

    fn is_ideal_mask(&self, mask: u32) -> bool {
        let n = self.len();
        let held = |i: usize| mask & (1 << i) != 0;
        for a in 0..n {
            if !held(a) {
                continue;
            }
            for b in 0..n {
                if held(b) {
                    if let Some(s) = self.try_add(a, b) {
                        if !held(s) {
                            return false;
                        }
                    }
                }
                if self.leq(b, a) && !held(b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn maximal_ideals(&self) -> Result<Vec<Vec<usize>>> {
        let ideals = self.ideals()?;
        let mut out = Vec::new();
        'outer: for i in &ideals {
            for j in &ideals {
                if i != j && i.iter().all(|x| j.contains(x)) {
                    continue 'outer;
                }
            }
            out.push(i.clone());
        }
        Ok(out)
    }

    // ---------------------------------------------------------------
    // Homomorphisms
    // ---------------------------------------------------------------

    /// Checks `map` (domain id -> codomain id) for the homomorphism
    /// conditions: unit goes to unit, and every defined sum is preserved.
    /// Returns the first failing pair otherwise.
    pub fn is_homomorphism(
        &self,
        map: &[usize],
        target: &FinitePea,
    ) -> Result<std::result::Result<(), (usize, usize)>> {
        if map.len() != self.len() {
            return Err(Error::Precondition(format!(
                "map covers {} of {} elements",
                map.len(),
                self.len()
            )));
        }
        for &img in map {
            if img >= target.len() {
                return Err(Error::UnknownId(format!("target id {img}")));
            }
        }
        if map[self.unit] != target.unit {
            return Ok(Err((self.unit, self.unit)));
        }
        for (a, b, s) in self.defined_sums() {
            match target.try_add(map[a], map[b]) {
                Some(t) if t == map[s] => {}
                _ => return Ok(Err((a, b))),
            }
        }
        Ok(Ok(()))
    }
}
