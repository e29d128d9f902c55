//! Extension of interval-level refinement to the enclosing unital group.
//!
//! Given a refinement oracle for the unit interval [0, u] of a lattice
//! unital group, a quadruple a1 + a2 = b1 + b2 of positive elements is
//! refined by a double induction on how many unit-bounded chunks a1 and b1
//! decompose into:
//! - base (a1, b1 <= u): interpolate z between {a1, b1} and {a1+a2, u} (the
//!   join, since the group is a lattice), refine a1 + x = z = b1 + y inside
//!   the interval, and absorb the excess v = -z + (a1+a2) into c22;
//! - b1 too large: split b1 = b1' + t with t = b1 meet u, refine against
//!   (b1', t + b2), then refine the produced (c12, c22) column against
//!   (t, b2) and recombine. The recombination commutes c21 past the new
//!   c11-part, which the com guarantee of the inner tables licenses;
//! - a1 too large, b1 small: swap the sides and transpose.

use super::{
    lex_factor, lex_over, lift_pea_refine, validate_quad, validate_table, GroupQuad, GroupTable,
    RefineOracle,
};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::PoGroup;

/// A refinement source for the unit interval of a unital group. For the
/// carriers lex(Z, G) with unit (1, 0) the interval tables come from
/// `lift_pea_refine` over a right-factor oracle; for lattice and linear
/// groups the group oracle itself stays inside the interval (every table
/// entry is below some input).
#[derive(Clone, Debug)]
pub enum IntervalOracle {
    FromGroup {
        oracle: RefineOracle,
        unit: Element,
    },
    LexUnit {
        factor: RefineOracle,
    },
}

/// Picks the interval refinement route for Γ(group, unit).
pub fn interval_oracle(group: &PoGroup, unit: &Element) -> Result<IntervalOracle> {
    if !group.in_cone(unit)? {
        return Err(Error::NotPositive(group.format_element(unit)));
    }
    if let Some(factor) = lex_factor(group) {
        let lex_unit = Element::pair(Element::int(1), factor.zero());
        if *unit == lex_unit {
            return Ok(IntervalOracle::LexUnit {
                factor: RefineOracle::builtin(factor)?,
            });
        }
    }
    Ok(IntervalOracle::FromGroup {
        oracle: RefineOracle::builtin(group)?,
        unit: unit.clone(),
    })
}

impl IntervalOracle {
    pub fn group(&self) -> PoGroup {
        match self {
            IntervalOracle::FromGroup { oracle, .. } => oracle.group().clone(),
            IntervalOracle::LexUnit { factor } => lex_over(factor.group()),
        }
    }

    pub fn unit(&self) -> Element {
        match self {
            IntervalOracle::FromGroup { unit, .. } => unit.clone(),
            IntervalOracle::LexUnit { factor } => {
                Element::pair(Element::int(1), factor.group().zero())
            }
        }
    }

    pub fn com_flagged(&self) -> bool {
        match self {
            IntervalOracle::FromGroup { oracle, .. } => oracle.com_flagged(),
            IntervalOracle::LexUnit { factor } => factor.com_flagged(),
        }
    }

    /// Refines a quadruple of interval elements; the result stays in the
    /// interval.
    pub fn refine(&self, q: &GroupQuad) -> Result<GroupTable> {
        match self {
            IntervalOracle::FromGroup { oracle, unit } => {
                let g = oracle.group();
                let table = oracle.refine(q)?;
                for c in table.entries() {
                    if !g.leq(c, unit)? {
                        return Err(Error::Oracle(format!(
                            "table entry {} escaped the interval",
                            g.format_element(c)
                        )));
                    }
                }
                Ok(table)
            }
            IntervalOracle::LexUnit { factor } => lift_pea_refine(factor, q),
        }
    }
}

struct Extender {
    group: PoGroup,
    unit: Element,
    steps: u64,
    budget: u64,
}

/// Extends an interval refinement oracle to arbitrary positive quadruples
/// of its unital group. Needs the lattice capability (for interpolation and
/// for the greedy unit decomposition) and a strong unit for termination.
pub fn extend_to_group(o_e: &IntervalOracle, q: &GroupQuad) -> Result<GroupTable> {
    let group = o_e.group();
    if !group.caps().lattice {
        return Err(Error::Hypothesis(format!(
            "{} is not certified as a lattice; interpolation is unavailable",
            group.describe()
        )));
    }
    validate_quad(&group, q)?;
    let mut ext = Extender {
        unit: o_e.unit(),
        group,
        steps: 0,
        budget: 1_000_000,
    };
    let table = ext.refine(o_e, q)?;
    validate_table(&ext.group, q, &table)?;
    Ok(table)
}

impl Extender {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::Decomposition(format!(
                "unit decomposition exceeded {} steps",
                self.budget
            )));
        }
        Ok(())
    }

    fn refine(&mut self, o_e: &IntervalOracle, q: &GroupQuad) -> Result<GroupTable> {
        self.tick()?;
        let g = self.group.clone();
        let a1_small = g.leq(&q.a1, &self.unit)?;
        let b1_small = g.leq(&q.b1, &self.unit)?;
        let table = if a1_small && b1_small {
            self.base(o_e, q)?
        } else if !b1_small {
            // b1 = b1' + t with t = b1 meet u: t is the largest chunk below
            // both, and b1' = b1 - t stays positive.
            let t = g.meet(&q.b1, &self.unit)?;
            if t == g.zero() {
                return Err(Error::Decomposition(format!(
                    "no unit-bounded chunk of {}",
                    g.format_element(&q.b1)
                )));
            }
            let b1_rest = g.diff_right(&q.b1, &t)?;
            let widened = GroupQuad::new(
                q.a1.clone(),
                q.a2.clone(),
                b1_rest,
                g.add(&t, &q.b2)?,
            );
            let first = self.refine(o_e, &widened)?;
            let column = GroupQuad::new(
                first.c12.clone(),
                first.c22.clone(),
                t,
                q.b2.clone(),
            );
            let second = self.refine(o_e, &column)?;
            GroupTable {
                c11: g.add(&first.c11, &second.c11)?,
                c12: second.c12,
                c21: g.add(&first.c21, &second.c21)?,
                c22: second.c22,
                com_ok: first.com_ok && second.com_ok,
            }
        } else {
            // a1 exceeds the unit: swap sides, recurse, transpose.
            self.refine(o_e, &q.swapped())?.transposed()
        };
        validate_table(&g, q, &table)?;
        Ok(table)
    }

    /// Base case a1, b1 <= u: interpolate, refine inside the interval,
    /// absorb the remainder into c22.
    fn base(&mut self, o_e: &IntervalOracle, q: &GroupQuad) -> Result<GroupTable> {
        let g = &self.group;
        let total = g.add(&q.a1, &q.a2)?;
        let z = g.join(&q.a1, &q.b1)?;
        let x = g.diff_left(&q.a1, &z)?;
        let y = g.diff_left(&q.b1, &z)?;
        let v = g.diff_left(&z, &total)?;
        let inner = o_e.refine(&GroupQuad::new(q.a1.clone(), x, q.b1.clone(), y))?;
        Ok(GroupTable {
            c11: inner.c11,
            c12: inner.c12,
            c21: inner.c21,
            c22: g.add(&inner.c22, &v)?,
            com_ok: inner.com_ok,
        })
    }
}
