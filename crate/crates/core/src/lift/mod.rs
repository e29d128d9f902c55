//! Constructive refinement machinery: deterministic 2x2 refinement oracles
//! for lattice- and linearly-ordered groups, lifting of refinements through
//! lexicographic products with the integers (both at the unit-interval level
//! and over the whole product group), extension of interval-level
//! refinements to the enclosing unital group, and growth of 2x2 refinements
//! to m x n matrices.

pub mod extend;
pub mod mn;
pub mod sample;
#[cfg(test)]
mod tests;

pub use extend::{extend_to_group, interval_oracle, IntervalOracle};
pub use mn::{mn_refine, validate_group_matrix};
pub use sample::{com_sampled, parse_quad, sample_lex_quads};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::{GroupKind, IntCone, PoGroup};

/// A quadruple a1 + a2 = b1 + b2 of positive group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupQuad {
    pub a1: Element,
    pub a2: Element,
    pub b1: Element,
    pub b2: Element,
}

impl GroupQuad {
    pub fn new(a1: Element, a2: Element, b1: Element, b2: Element) -> GroupQuad {
        GroupQuad { a1, a2, b1, b2 }
    }

    pub fn swapped(&self) -> GroupQuad {
        GroupQuad {
            a1: self.b1.clone(),
            a2: self.b2.clone(),
            b1: self.a1.clone(),
            b2: self.a2.clone(),
        }
    }

    pub fn render(&self, g: &PoGroup) -> String {
        format!(
            "{};{}={};{}",
            g.format_element(&self.a1),
            g.format_element(&self.a2),
            g.format_element(&self.b1),
            g.format_element(&self.b2)
        )
    }
}

/// A 2x2 refinement table: rows sum to a1, a2 and columns to b1, b2.
/// `com_ok` records whether the construction guarantees that everything
/// below c12 commutes with everything below c21.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub c11: Element,
    pub c12: Element,
    pub c21: Element,
    pub c22: Element,
    pub com_ok: bool,
}

impl GroupTable {
    pub fn entries(&self) -> [&Element; 4] {
        [&self.c11, &self.c12, &self.c21, &self.c22]
    }

    /// Transpose swaps the roles of rows and columns; the com guarantee is
    /// symmetric in the off-diagonal pair.
    pub fn transposed(&self) -> GroupTable {
        GroupTable {
            c11: self.c11.clone(),
            c12: self.c21.clone(),
            c21: self.c12.clone(),
            c22: self.c22.clone(),
            com_ok: self.com_ok,
        }
    }

    pub fn render(&self, g: &PoGroup) -> String {
        format!(
            "[{} {} / {} {}]",
            g.format_element(&self.c11),
            g.format_element(&self.c12),
            g.format_element(&self.c21),
            g.format_element(&self.c22)
        )
    }
}

/// Checks positivity of all four elements and the sum equation.
pub fn validate_quad(g: &PoGroup, q: &GroupQuad) -> Result<()> {
    for (name, x) in [
        ("a1", &q.a1),
        ("a2", &q.a2),
        ("b1", &q.b1),
        ("b2", &q.b2),
    ] {
        if !g.in_cone(x)? {
            return Err(Error::NotPositive(format!(
                "{name} = {}",
                g.format_element(x)
            )));
        }
    }
    let left = g.add(&q.a1, &q.a2)?;
    let right = g.add(&q.b1, &q.b2)?;
    if left != right {
        return Err(Error::Precondition(format!(
            "unequal sums: {} vs {}",
            g.format_element(&left),
            g.format_element(&right)
        )));
    }
    Ok(())
}

/// Full table revalidation: all entries positive, rows and columns
/// reproduce the quadruple in order.
pub fn validate_table(g: &PoGroup, q: &GroupQuad, t: &GroupTable) -> Result<()> {
    for c in t.entries() {
        if !g.in_cone(c)? {
            return Err(Error::Oracle(format!(
                "table entry {} is not positive",
                g.format_element(c)
            )));
        }
    }
    let checks = [
        (g.add(&t.c11, &t.c12)?, &q.a1, "row 1"),
        (g.add(&t.c21, &t.c22)?, &q.a2, "row 2"),
        (g.add(&t.c11, &t.c21)?, &q.b1, "column 1"),
        (g.add(&t.c12, &t.c22)?, &q.b2, "column 2"),
    ];
    for (got, want, what) in checks {
        if got != *want {
            return Err(Error::Oracle(format!(
                "{what} sums to {} instead of {}",
                g.format_element(&got),
                g.format_element(want)
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum OracleKind {
    /// c11 is the meet of a1 and b1; the remaining entries are forced.
    Lattice,
    /// Branch on the comparison of a1 and b1; a zero lands on the
    /// off-diagonal, which makes the com side condition trivial.
    Linear,
}

/// Deterministic 2x2 refinement source for a concrete group. Every builtin
/// oracle is com-flagged: the linear branch zeroes an off-diagonal entry,
/// and the lattice branch only applies to abelian builtins.
#[derive(Clone, Debug)]
pub struct RefineOracle {
    group: PoGroup,
    kind: OracleKind,
    com_flagged: bool,
}

impl RefineOracle {
    pub fn builtin(group: &PoGroup) -> Result<RefineOracle> {
        let caps = group.caps();
        if caps.linear {
            return Ok(RefineOracle {
                group: group.clone(),
                kind: OracleKind::Linear,
                com_flagged: true,
            });
        }
        if caps.lattice {
            if !caps.abelian {
                // The meet construction below solves the column equation by
                // commuting subtraction; a non-abelian lattice group would
                // need its own rule.
                return Err(Error::Hypothesis(format!(
                    "no builtin refinement rule for the non-abelian non-linear lattice group {}",
                    group.describe()
                )));
            }
            return Ok(RefineOracle {
                group: group.clone(),
                kind: OracleKind::Lattice,
                com_flagged: true,
            });
        }
        Err(Error::Hypothesis(format!(
            "{} is not certified lattice- or linearly-ordered; refinement needs a supplied oracle",
            group.describe()
        )))
    }

    pub fn group(&self) -> &PoGroup {
        &self.group
    }

    pub fn com_flagged(&self) -> bool {
        self.com_flagged
    }

    pub fn lower_bound(&self, xs: &[Element]) -> Result<Element> {
        self.group.lower_bound(xs)
    }

    /// Refines a1 + a2 = b1 + b2 over the positive cone. The output is
    /// revalidated before it is returned.
    pub fn refine(&self, q: &GroupQuad) -> Result<GroupTable> {
        validate_quad(&self.group, q)?;
        let g = &self.group;
        let table = match self.kind {
            OracleKind::Linear => {
                if q.a1 == q.b1 {
                    // Canonical tie-break: the diagonal table.
                    GroupTable {
                        c11: q.a1.clone(),
                        c12: g.zero(),
                        c21: g.zero(),
                        c22: q.a2.clone(),
                        com_ok: true,
                    }
                } else if g.leq(&q.a1, &q.b1)? {
                    let c21 = g.diff_left(&q.a1, &q.b1)?;
                    let c22 = g.diff_left(&c21, &q.a2)?;
                    GroupTable {
                        c11: q.a1.clone(),
                        c12: g.zero(),
                        c21,
                        c22,
                        com_ok: true,
                    }
                } else {
                    let c12 = g.diff_left(&q.b1, &q.a1)?;
                    GroupTable {
                        c11: q.b1.clone(),
                        c12,
                        c21: g.zero(),
                        c22: q.a2.clone(),
                        com_ok: true,
                    }
                }
            }
            OracleKind::Lattice => {
                let c11 = g.meet(&q.a1, &q.b1)?;
                let c12 = g.diff_left(&c11, &q.a1)?;
                let c21 = g.diff_left(&c11, &q.b1)?;
                let c22 = g.diff_left(&c21, &q.a2)?;
                GroupTable {
                    c11,
                    c12,
                    c21,
                    c22,
                    com_ok: true,
                }
            }
        };
        validate_table(g, q, &table)?;
        Ok(table)
    }
}

/// First coordinate of a lexicographic pair over the integers.
fn first_int(x: &Element) -> Result<i64> {
    match x {
        Element::LexPair(l, _) => l.as_int().ok_or_else(|| Error::CarrierMismatch {
            expected: "lex(Z,_) element".into(),
            got: format!("{x}"),
        }),
        other => Err(Error::CarrierMismatch {
            expected: "lex(Z,_) element".into(),
            got: format!("{other}"),
        }),
    }
}

fn second(x: &Element) -> Result<Element> {
    match x {
        Element::LexPair(_, r) => Ok((**r).clone()),
        other => Err(Error::CarrierMismatch {
            expected: "lex pair".into(),
            got: format!("{other}"),
        }),
    }
}

fn pair(m: i64, g: Element) -> Element {
    Element::pair(Element::int(m), g)
}

/// The lexicographic product of the integers with the oracle's group.
pub fn lex_over(g: &PoGroup) -> PoGroup {
    PoGroup::lex(PoGroup::int(), g.clone())
}

/// Is this the carrier lex(Z, G)? Returns the right factor.
pub fn lex_factor(g: &PoGroup) -> Option<&PoGroup> {
    if let GroupKind::Lex(l, r) = &g.kind {
        if let GroupKind::IntVec {
            rank: 1,
            cone: IntCone::Product,
        } = &l.kind
        {
            return Some(r);
        }
    }
    None
}

/// Lifts refinement into the unit interval of lex(Z, G): a validated table
/// for a quadruple of interval elements whose first coordinates are 0 or 1.
/// The right-factor oracle supplies refinements and lower bounds of G.
///
/// Case split on the first coordinates of (a1, a2; b1, b2):
/// - all zero: pass the second components through the oracle;
/// - (1,0;1,0): pick d below both negative parts, refine the shifted
///   quadruple, and absorb d into c11;
/// - (0,1;0,1): the mirror image, absorbing d into c22 on the right;
/// - (1,0;0,1): the explicit table ((0,b1),(1,-b1+a1);(0,0),(0,a2)), whose
///   zero entry makes the com condition trivial;
/// - (0,1;1,0): the previous case with the sides swapped, transposed back.
pub fn lift_pea_refine(o: &RefineOracle, q: &GroupQuad) -> Result<GroupTable> {
    let gf = o.group();
    let lex = lex_over(gf);
    let unit = pair(1, gf.zero());
    for x in [&q.a1, &q.a2, &q.b1, &q.b2] {
        if !lex.in_cone(x)? || !lex.leq(x, &unit)? {
            return Err(Error::Precondition(format!(
                "{} is outside the unit interval of {}",
                lex.format_element(x),
                lex.describe()
            )));
        }
    }
    validate_quad(&lex, q)?;
    let (m1, m2) = (first_int(&q.a1)?, first_int(&q.a2)?);
    let (n1, n2) = (first_int(&q.b1)?, first_int(&q.b2)?);
    let (va1, va2) = (second(&q.a1)?, second(&q.a2)?);
    let (vb1, vb2) = (second(&q.b1)?, second(&q.b2)?);
    let table = match (m1, m2, n1, n2) {
        (0, 0, 0, 0) => {
            let inner = o.refine(&GroupQuad::new(va1, va2, vb1, vb2))?;
            GroupTable {
                c11: pair(0, inner.c11),
                c12: pair(0, inner.c12),
                c21: pair(0, inner.c21),
                c22: pair(0, inner.c22),
                com_ok: inner.com_ok,
            }
        }
        (1, 0, 1, 0) => {
            let d = o.lower_bound(&[va1.clone(), vb1.clone()])?;
            let inner = o.refine(&GroupQuad::new(
                gf.diff_left(&d, &va1)?,
                va2,
                gf.diff_left(&d, &vb1)?,
                vb2,
            ))?;
            GroupTable {
                c11: pair(1, gf.add(&d, &inner.c11)?),
                c12: pair(0, inner.c12),
                c21: pair(0, inner.c21),
                c22: pair(0, inner.c22),
                com_ok: inner.com_ok,
            }
        }
        (0, 1, 0, 1) => {
            let d = o.lower_bound(&[va2.clone(), vb2.clone()])?;
            let inner = o.refine(&GroupQuad::new(
                va1,
                gf.diff_right(&va2, &d)?,
                vb1,
                gf.diff_right(&vb2, &d)?,
            ))?;
            GroupTable {
                c11: pair(0, inner.c11),
                c12: pair(0, inner.c12),
                c21: pair(0, inner.c21),
                c22: pair(1, gf.add(&inner.c22, &d)?),
                com_ok: inner.com_ok,
            }
        }
        (1, 0, 0, 1) => GroupTable {
            c11: pair(0, vb1.clone()),
            c12: pair(1, gf.diff_left(&vb1, &va1)?),
            c21: pair(0, gf.zero()),
            c22: pair(0, va2),
            com_ok: true,
        },
        (0, 1, 1, 0) => lift_pea_refine(o, &q.swapped())?.transposed(),
        _ => {
            return Err(Error::Precondition(format!(
                "first coordinates ({m1},{m2};{n1},{n2}) do not describe a unit-interval quadruple"
            )))
        }
    };
    validate_table(&lex, q, &table)?;
    Ok(table)
}

/// Lifts refinement over the whole group lex(Z, G) for a directed G with a
/// refinement oracle.
///
/// Case split on the first coordinates:
/// - (i) all zero: oracle pass-through on the second components;
/// - (ii) a zero somewhere with a positive total: explicit tables anchored
///   at the side holding the zero; when the zero sits only on the b side,
///   the quadruple is swapped and the result transposed;
/// - (iii) everything at least 1: pick d below all four second components,
///   refine (-d+a1) + (a2-d) = (-d+b1) + (b2-d) in the factor, and spread
///   the first coordinates per the comparison of m1 and n1.
pub fn lift_group_refine(o: &RefineOracle, q: &GroupQuad) -> Result<GroupTable> {
    let gf = o.group();
    let lex = lex_over(gf);
    validate_quad(&lex, q)?;
    let (m1, m2) = (first_int(&q.a1)?, first_int(&q.a2)?);
    let (n1, n2) = (first_int(&q.b1)?, first_int(&q.b2)?);
    let (va1, va2) = (second(&q.a1)?, second(&q.a2)?);
    let (vb1, vb2) = (second(&q.b1)?, second(&q.b2)?);
    let abelian = gf.caps().abelian;
    let table = if m1 >= 1 && m2 >= 1 && n1 >= 1 && n2 >= 1 {
        let d = o.lower_bound(&[va1.clone(), va2.clone(), vb1.clone(), vb2.clone()])?;
        let inner = o.refine(&GroupQuad::new(
            gf.diff_left(&d, &va1)?,
            gf.diff_right(&va2, &d)?,
            gf.diff_left(&d, &vb1)?,
            gf.diff_right(&vb2, &d)?,
        ))?;
        if m1 >= n1 {
            GroupTable {
                c11: pair(n1, gf.add(&d, &inner.c11)?),
                c12: pair(m1 - n1, inner.c12),
                c21: pair(0, inner.c21),
                c22: pair(m2, gf.add(&inner.c22, &d)?),
                com_ok: abelian && inner.com_ok,
            }
        } else {
            GroupTable {
                c11: pair(m1, gf.add(&d, &inner.c11)?),
                c12: pair(0, inner.c12),
                c21: pair(n1 - m1, inner.c21),
                c22: pair(n2, gf.add(&inner.c22, &d)?),
                com_ok: abelian && inner.com_ok,
            }
        }
    } else if m1 == 0 && m2 == 0 {
        // Sum of first coordinates is zero on both sides: pure factor case.
        let inner = o.refine(&GroupQuad::new(va1, va2, vb1, vb2))?;
        GroupTable {
            c11: pair(0, inner.c11),
            c12: pair(0, inner.c12),
            c21: pair(0, inner.c21),
            c22: pair(0, inner.c22),
            com_ok: inner.com_ok,
        }
    } else if m2 == 0 && m1 >= 1 {
        if n2 > 0 {
            GroupTable {
                c11: pair(n1, vb1.clone()),
                c12: pair(n2, gf.diff_left(&vb1, &va1)?),
                c21: pair(0, gf.zero()),
                c22: pair(0, va2),
                com_ok: true,
            }
        } else {
            let d = o.lower_bound(&[va1.clone(), vb1.clone()])?;
            let inner = o.refine(&GroupQuad::new(
                gf.diff_left(&d, &va1)?,
                va2,
                gf.diff_left(&d, &vb1)?,
                vb2,
            ))?;
            GroupTable {
                c11: pair(n1, gf.add(&d, &inner.c11)?),
                c12: pair(0, inner.c12),
                c21: pair(0, inner.c21),
                c22: pair(0, inner.c22),
                com_ok: inner.com_ok,
            }
        }
    } else if m1 == 0 && m2 >= 1 {
        if n1 >= 1 {
            GroupTable {
                c11: pair(0, va1.clone()),
                c12: pair(0, gf.zero()),
                c21: pair(n1, gf.diff_left(&va1, &vb1)?),
                c22: pair(n2, vb2),
                com_ok: true,
            }
        } else {
            let d = o.lower_bound(&[va2.clone(), vb2.clone()])?;
            let inner = o.refine(&GroupQuad::new(
                va1,
                gf.diff_right(&va2, &d)?,
                vb1,
                gf.diff_right(&vb2, &d)?,
            ))?;
            GroupTable {
                c11: pair(0, inner.c11),
                c12: pair(0, inner.c12),
                c21: pair(0, inner.c21),
                c22: pair(m2, gf.add(&inner.c22, &d)?),
                com_ok: inner.com_ok,
            }
        }
    } else {
        // Zeros sit only on the b side: swap, lift, transpose back.
        lift_group_refine(o, &q.swapped())?.transposed()
    };
    validate_table(&lex, q, &table)?;
    Ok(table)
}
