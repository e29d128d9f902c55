//! Interval pseudo effect algebras: the elements between 0 and a positive
//! unit u of a po-group, with the group addition restricted to sums that
//! stay below u.

use super::finite::FinitePea;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::PoGroup;

#[derive(Clone, Debug)]
pub struct IntervalPea {
    group: PoGroup,
    unit: Element,
}

/// The interval algebra on [0, u]. The unit must be positive.
pub fn gamma(group: &PoGroup, unit: &Element) -> Result<IntervalPea> {
    if !group.in_cone(unit)? {
        return Err(Error::NotPositive(group.format_element(unit)));
    }
    Ok(IntervalPea {
        group: group.clone(),
        unit: unit.clone(),
    })
}

impl IntervalPea {
    pub fn group(&self) -> &PoGroup {
        &self.group
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn zero(&self) -> Element {
        self.group.zero()
    }

    pub fn contains(&self, x: &Element) -> Result<bool> {
        Ok(self.group.in_cone(x)? && self.group.leq(x, &self.unit)?)
    }

    fn check_member(&self, x: &Element) -> Result<()> {
        if self.contains(x)? {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "{} is not in the interval [0, {}]",
                self.group.format_element(x),
                self.group.format_element(&self.unit)
            )))
        }
    }

    /// Partial addition: defined iff the group sum stays below the unit.
    pub fn try_add(&self, a: &Element, b: &Element) -> Result<Option<Element>> {
        self.check_member(a)?;
        self.check_member(b)?;
        let s = self.group.add(a, b)?;
        if self.group.leq(&s, &self.unit)? {
            Ok(Some(s))
        } else {
            Ok(None)
        }
    }

    pub fn leq(&self, a: &Element, b: &Element) -> Result<bool> {
        self.group.leq(a, b)
    }

    /// b minus a on the left: the d with d + a = b; requires a <= b.
    pub fn left_minus(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_member(a)?;
        self.check_member(b)?;
        if !self.group.leq(a, b)? {
            return Err(Error::Precondition(format!(
                "{} is not below {}",
                self.group.format_element(a),
                self.group.format_element(b)
            )));
        }
        self.group.diff_right(b, a)
    }

    /// a under b on the right: the d with a + d = b; requires a <= b.
    pub fn right_minus(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_member(a)?;
        self.check_member(b)?;
        if !self.group.leq(a, b)? {
            return Err(Error::Precondition(format!(
                "{} is not below {}",
                self.group.format_element(a),
                self.group.format_element(b)
            )));
        }
        self.group.diff_left(a, b)
    }

    pub fn comp_left(&self, a: &Element) -> Result<Element> {
        let u = self.unit.clone();
        self.left_minus(a, &u)
    }

    pub fn comp_right(&self, a: &Element) -> Result<Element> {
        let u = self.unit.clone();
        self.right_minus(a, &u)
    }

    pub fn nfold(&self, a: &Element, n: u32) -> Result<Option<Element>> {
        self.check_member(a)?;
        let mut acc = self.zero();
        for _ in 0..n {
            match self.try_add(&acc, a)? {
                Some(next) => acc = next,
                None => return Ok(None),
            }
        }
        Ok(Some(acc))
    }

    /// Every element of the interval, in the certified enumeration order.
    pub fn elements(&self, budget: usize) -> Result<Vec<Element>> {
        self.group.interval_from_zero(&self.unit, budget)
    }

    /// Explicit finite table equal to this interval algebra. Element ids are
    /// the group's canonical renderings. Fails when the interval is infinite
    /// or larger than the budget.
    pub fn materialize(&self, budget: usize) -> Result<FinitePea> {
        let elems = self.elements(budget)?;
        let names: Vec<String> = elems
            .iter()
            .map(|e| self.group.format_element(e))
            .collect();
        let mut triples = Vec::new();
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let s = self.group.add(a, b)?;
                if self.group.leq(&s, &self.unit)? {
                    let k = elems
                        .iter()
                        .position(|e| *e == s)
                        .ok_or_else(|| {
                            Error::Precondition(format!(
                                "sum {} escaped the enumerated interval",
                                self.group.format_element(&s)
                            ))
                        })?;
                    triples.push((names[i].clone(), names[j].clone(), names[k].clone()));
                }
            }
        }
        let zero = self.group.format_element(&self.zero());
        let unit = self.group.format_element(&self.unit);
        FinitePea::new(names, &zero, &unit, &triples)
    }
}
