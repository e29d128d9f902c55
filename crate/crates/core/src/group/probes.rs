//! Bounded order-theoretic probes.
//!
//! The global properties probed here (directedness, strong units, strict
//! interpolation) are undecidable for arbitrary cones, so every probe
//! returns a three-valued verdict: `Certified` only from declared analytic
//! metadata, `Refuted` only with a witness whose search region is certified
//! sufficient, and `Inconclusive` otherwise.

use super::{GroupKind, IntCone, PoGroup, PresetCone};
use crate::element::Element;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Certified { note: String },
    Refuted { witness: Vec<Element>, note: String },
    Inconclusive,
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified { .. })
    }
    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted { .. })
    }
}

/// Is the group directed: do any two elements admit a common upper bound?
pub fn is_directed_bounded(g: &PoGroup, radius: i64) -> Result<Verdict> {
    if g.caps().directed {
        return Ok(Verdict::Certified {
            note: directedness_note(g),
        });
    }
    // Certified refutation 1: finite carrier, exhaustive search.
    if let Ok(all) = g.enumerate_all(4096) {
        for x in &all {
            for y in &all {
                let mut bounded = false;
                for z in &all {
                    if g.leq(x, z)? && g.leq(y, z)? {
                        bounded = true;
                        break;
                    }
                }
                if !bounded {
                    return Ok(Verdict::Refuted {
                        witness: vec![x.clone(), y.clone()],
                        note: "exhaustive search over the finite carrier".into(),
                    });
                }
            }
        }
        return Ok(Verdict::Certified {
            note: "exhaustive search over the finite carrier".into(),
        });
    }
    // Certified refutation 2: lexicographic product whose left factor has the
    // trivial order but more than one element. An upper bound (c,z) of
    // (a,0),(b,0) needs c >= a and c >= b, and trivially ordered factors only
    // compare equal elements, so distinct a,b admit no bound.
    if let GroupKind::Lex(a, b) = &g.kind {
        if !a.is_trivial() && a.strictly_positive_sample().is_none() {
            if let Ok(all_left) = a.enumerate_all(4096) {
                let distinct: Vec<&Element> =
                    all_left.iter().filter(|x| **x != a.zero()).collect();
                if !distinct.is_empty() {
                    let w1 = Element::pair(a.zero(), b.zero());
                    let w2 = Element::pair((*distinct[0]).clone(), b.zero());
                    return Ok(Verdict::Refuted {
                        witness: vec![w1, w2],
                        note: "trivially ordered left factor: upper bounds must agree with both first components".into(),
                    });
                }
            }
        }
    }
    let _ = radius;
    Ok(Verdict::Inconclusive)
}

fn directedness_note(g: &PoGroup) -> String {
    if g.caps().linear {
        "linear order: the larger of the two is an upper bound".into()
    } else if let GroupKind::IntVec {
        cone: IntCone::Product,
        ..
    } = &g.kind
    {
        "componentwise max is an upper bound".into()
    } else if let Some(u) = g.strong_unit() {
        format!(
            "strong unit {}: both elements sit below a common multiple",
            g.format_element(u)
        )
    } else {
        "declared capability".into()
    }
}

/// Is u a strong unit: does every g satisfy g <= n*u for some n >= 1?
pub fn is_strong_unit_bounded(g: &PoGroup, u: &Element, radius: i64) -> Result<Verdict> {
    if !g.in_cone(u)? {
        return Err(Error::NotPositive(g.format_element(u)));
    }
    strong_unit_inner(g, u, radius)
}

fn strong_unit_inner(g: &PoGroup, u: &Element, radius: i64) -> Result<Verdict> {
    match &g.kind {
        GroupKind::Finite(f) => {
            if f.order() == 1 {
                Ok(Verdict::Certified {
                    note: "trivial group".into(),
                })
            } else {
                // Trivial order: g <= n*0 = 0 only for g = 0.
                Ok(Verdict::Refuted {
                    witness: vec![Element::Finite(1)],
                    note: "trivial order compares only equal elements".into(),
                })
            }
        }
        GroupKind::IntVec {
            cone: IntCone::Product,
            rank,
        } => {
            let coords = match u {
                Element::IntVec(v) => v,
                _ => unreachable!(),
            };
            if let Some(j) = coords.iter().position(|&c| c == 0) {
                let mut w = vec![0i64; *rank];
                w[j] = 1;
                Ok(Verdict::Refuted {
                    witness: vec![Element::IntVec(w)],
                    note: format!("coordinate {} of n*u stays 0 for every n", j + 1),
                })
            } else {
                Ok(Verdict::Certified {
                    note: "n exceeding every coordinate ratio dominates componentwise".into(),
                })
            }
        }
        GroupKind::IntVec {
            cone: IntCone::Formula { preset, .. },
            ..
        } => match preset {
            Some(PresetCone::Ex29) => {
                let s: i64 = u.int_entries().iter().sum();
                if s >= 1 {
                    Ok(Verdict::Certified {
                        note: "sum branch: n*sum(u) - sum(g) >= 2 for n large".into(),
                    })
                } else {
                    Ok(Verdict::Refuted {
                        witness: vec![Element::vec(&[1, 0])],
                        note: "u = 0: the difference never reaches the jump threshold".into(),
                    })
                }
            }
            Some(PresetCone::Ex210) => {
                let s: i64 = u.int_entries().iter().sum();
                if s >= 1 {
                    Ok(Verdict::Certified {
                        note: "n*sum(u) > sum(g) for n large".into(),
                    })
                } else {
                    Ok(Verdict::Refuted {
                        witness: vec![Element::vec(&[1, 0])],
                        note: "u = 0: sums never increase".into(),
                    })
                }
            }
            None => Ok(Verdict::Inconclusive),
        },
        GroupKind::Heisenberg => {
            let (a, b) = match u {
                Element::Tri(a, b, _) => (*a, *b),
                _ => unreachable!(),
            };
            if a >= 1 {
                Ok(Verdict::Certified {
                    note: "first entry of n*u grows without bound".into(),
                })
            } else if b >= 1 {
                Ok(Verdict::Refuted {
                    witness: vec![Element::tri(1, 0, 0)],
                    note: "first entry of n*u stays 0, witness has first entry 1".into(),
                })
            } else {
                Ok(Verdict::Refuted {
                    witness: vec![Element::tri(0, 1, 0)],
                    note: "first two entries of n*u stay 0, witness has second entry 1".into(),
                })
            }
        }
        GroupKind::Lex(ga, gb) => {
            let (u1, u2) = u.as_pair().expect("checked element");
            if ga.is_trivial() {
                return Ok(match strong_unit_inner(gb, u2, radius)? {
                    Verdict::Certified { note } => Verdict::Certified { note },
                    Verdict::Refuted { witness, note } => Verdict::Refuted {
                        witness: witness
                            .into_iter()
                            .map(|w| Element::pair(ga.zero(), w))
                            .collect(),
                        note,
                    },
                    Verdict::Inconclusive => Verdict::Inconclusive,
                });
            }
            if *u1 == ga.zero() {
                // (h, 0) <= n*(0, u2) would need h < 0 or h = 0 in the left
                // factor; any h that is neither works as a witness.
                let h = ga
                    .strictly_positive_sample()
                    .or_else(|| ga.nonzero_sample());
                return Ok(match h {
                    Some(h) => Verdict::Refuted {
                        witness: vec![Element::pair(h, gb.zero())],
                        note: "first component of n*u stays 0".into(),
                    },
                    None => Verdict::Inconclusive,
                });
            }
            match strong_unit_inner(ga, u1, radius)? {
                Verdict::Certified { note } => Ok(Verdict::Certified {
                    note: format!("left factor dominates strictly: {note}"),
                }),
                Verdict::Refuted { witness, note } => Ok(Verdict::Refuted {
                    witness: witness
                        .into_iter()
                        .map(|w| Element::pair(w, gb.zero()))
                        .collect(),
                    note: format!("left factor refutation: {note}"),
                }),
                Verdict::Inconclusive => Ok(Verdict::Inconclusive),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SripVerdict {
    /// a < b in the box with no strict interpolant; the order interval
    /// [a, b] was enumerated by a certified-complete enumeration.
    Refuted {
        witness: (Element, Element, Element, Element),
        note: String,
    },
    NoViolationFound,
}

/// Searches for a strict-interpolation violation among pairs a < b with
/// entries in the radius box. A pair refutes strict interpolation when the
/// order interval [a,b] is certifiably enumerable and has no interior.
/// Pairs whose interval cannot be enumerated are skipped, so
/// `NoViolationFound` is not a proof.
pub fn srip_bounded(g: &PoGroup, radius: i64) -> Result<SripVerdict> {
    if radius <= 0 {
        return Ok(SripVerdict::NoViolationFound);
    }
    let elems = g.box_elements(radius);
    let mut pairs: Vec<(&Element, &Element)> = Vec::new();
    for x in &elems {
        for y in &elems {
            if g.lt(x, y)? {
                pairs.push((x, y));
            }
        }
    }
    let zero = g.zero();
    pairs.sort_by_key(|(x, y)| {
        let n: i64 = x
            .int_entries()
            .iter()
            .chain(y.int_entries().iter())
            .map(|v| v.abs())
            .sum();
        (**x != zero, n, format!("{x}|{y}"))
    });
    for (x, y) in pairs {
        if let Ok(interval) = g.enumerate_interval(x, y, 10_000) {
            let has_interior = interval.iter().any(|c| c != x && c != y);
            if !has_interior {
                return Ok(SripVerdict::Refuted {
                    witness: (x.clone(), x.clone(), y.clone(), y.clone()),
                    note: "certified interval enumeration has no interior point".into(),
                });
            }
        }
    }
    Ok(SripVerdict::NoViolationFound)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RipOutcome {
    Interpolant(Element),
    /// No interpolant exists; the candidate region was certified sufficient
    /// (an order interval [a_i, b_j] was enumerated completely).
    CertifiedNone {
        note: String,
    },
    Inconclusive,
}

/// Searches for c with a1,a2 <= c <= b1,b2. Any interpolant lies in each
/// order interval [a_i, b_j]; if one of the four is certifiably enumerable,
/// scanning it decides the quadruple.
pub fn rip_interpolant_search(
    g: &PoGroup,
    a1: &Element,
    a2: &Element,
    b1: &Element,
    b2: &Element,
) -> Result<RipOutcome> {
    for (lo, hi) in [(a1, b1), (a1, b2), (a2, b1), (a2, b2)] {
        if !g.leq(lo, hi)? {
            // The quadruple does not satisfy a_i <= b_j; nothing to interpolate.
            return Err(Error::Precondition(format!(
                "{} is not below {}",
                g.format_element(lo),
                g.format_element(hi)
            )));
        }
    }
    for (lo, hi) in [(a1, b1), (a1, b2), (a2, b1), (a2, b2)] {
        if let Ok(candidates) = g.enumerate_interval(lo, hi, 100_000) {
            for c in &candidates {
                if g.leq(a1, c)?
                    && g.leq(a2, c)?
                    && g.leq(c, b1)?
                    && g.leq(c, b2)?
                {
                    return Ok(RipOutcome::Interpolant(c.clone()));
                }
            }
            return Ok(RipOutcome::CertifiedNone {
                note: format!(
                    "certified enumeration of [{}, {}] contains no interpolant",
                    g.format_element(lo),
                    g.format_element(hi)
                ),
            });
        }
    }
    Ok(RipOutcome::Inconclusive)
}
