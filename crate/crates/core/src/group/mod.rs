//! Computable partially ordered groups.
//!
//! A `PoGroup` bundles a concrete carrier (integer vectors, finite group
//! labels, unitriangular triples, lexicographic pairs), the group operations,
//! a positive-cone membership test, and capability metadata. Capabilities are
//! declared for builtins, each backed by the analytic argument recorded on
//! the constructor; they are spot-checked by tests and never assumed for
//! user-defined cones.

pub mod cone;
pub mod descriptor;
pub mod finite;
pub mod probes;
#[cfg(test)]
mod tests;

use crate::element::Element;
use crate::error::{Error, Result};
pub use cone::ConeSpec;
pub use finite::FiniteGroup;

/// Capability metadata. A `true` flag means the property is certified by an
/// analytic argument for the builtin; `false` means it is not certified
/// (the property may still hold).
#[derive(Clone, Debug)]
pub struct Capabilities {
    pub abelian: bool,
    pub directed: bool,
    pub lattice: bool,
    pub linear: bool,
    pub torsion_free: bool,
    pub strong_unit: Option<Element>,
}

#[derive(Clone, Debug)]
pub enum PresetCone {
    /// Componentwise order relaxed by jumps: `(a,b) <= (c,d)` iff `a<=c` and
    /// `b<=d`, or `(c+d)-(a+b) >= 2`.
    Ex29,
    /// Discrete order with total-sum comparison: `(a,b) <= (c,d)` iff equal
    /// or `a+b < c+d`.
    Ex210,
}

#[derive(Clone, Debug)]
pub enum IntCone {
    /// Componentwise positivity.
    Product,
    /// Cone given by a linear-constraint formula; `preset` unlocks the
    /// certified searches documented on the enumeration routines.
    Formula {
        spec: ConeSpec,
        preset: Option<PresetCone>,
    },
}

#[derive(Clone, Debug)]
pub enum GroupKind {
    IntVec { rank: usize, cone: IntCone },
    Finite(FiniteGroup),
    Heisenberg,
    Lex(Box<PoGroup>, Box<PoGroup>),
}

#[derive(Clone, Debug)]
pub struct PoGroup {
    pub(crate) kind: GroupKind,
    caps: Capabilities,
    desc: String,
}

impl PoGroup {
    // ---------------------------------------------------------------
    // Builtin constructors
    // ---------------------------------------------------------------

    /// The integers with the natural order.
    ///
    /// Abelian, linearly ordered (hence a lattice and directed),
    /// torsion-free, strong unit 1.
    pub fn int() -> PoGroup {
        PoGroup {
            kind: GroupKind::IntVec {
                rank: 1,
                cone: IntCone::Product,
            },
            caps: Capabilities {
                abelian: true,
                directed: true,
                lattice: true,
                linear: true,
                torsion_free: true,
                strong_unit: Some(Element::int(1)),
            },
            desc: "Z".to_string(),
        }
    }

    /// Z^k with the componentwise (product) order.
    ///
    /// Abelian and torsion-free as a group. Directed: the componentwise max
    /// dominates any pair. Lattice: the componentwise min is the infimum.
    /// Linear only for k = 1. Strong unit (1,...,1): g <= n(1,..,1) once n
    /// exceeds every coordinate.
    pub fn int_vec(rank: usize) -> Result<PoGroup> {
        if rank == 0 {
            return Err(Error::Parse("Z^k requires k >= 1".into()));
        }
        Ok(PoGroup {
            kind: GroupKind::IntVec {
                rank,
                cone: IntCone::Product,
            },
            caps: Capabilities {
                abelian: true,
                directed: true,
                lattice: true,
                linear: rank == 1,
                torsion_free: true,
                strong_unit: Some(Element::IntVec(vec![1; rank])),
            },
            desc: if rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{rank}:product")
            },
        })
    }

    /// Z^2 ordered by `(a,b) <= (c,d)` iff componentwise, or the total sum
    /// jumps by at least 2.
    ///
    /// Abelian, torsion-free (the group is Z^2). Directed: (1,0) is a strong
    /// unit, since g <= n(1,0) via the sum branch once n >= sum(g) + 2, and a
    /// unital po-group is directed. Not a lattice and not linear:
    /// interpolation fails, e.g. between (1,0),(0,1) and (0,3),(3,0).
    pub fn cone_ex29() -> PoGroup {
        let spec = ConeSpec::parse(2, "x1>=0&x2>=0|x1+x2>=2").expect("builtin cone parses");
        PoGroup {
            kind: GroupKind::IntVec {
                rank: 2,
                cone: IntCone::Formula {
                    spec,
                    preset: Some(PresetCone::Ex29),
                },
            },
            caps: Capabilities {
                abelian: true,
                directed: true,
                lattice: false,
                linear: false,
                torsion_free: true,
                strong_unit: Some(Element::vec(&[1, 0])),
            },
            desc: "Z^2:cone=ex2.9".to_string(),
        }
    }

    /// Z^2 ordered by `(a,b) <= (c,d)` iff equal or `a+b < c+d`.
    ///
    /// Abelian, torsion-free. Directed with strong unit (1,0): g < n(1,0)
    /// once n exceeds sum(g). Not a lattice, not linear.
    pub fn cone_ex210() -> PoGroup {
        let spec = ConeSpec::parse(2, "x1=0&x2=0|x1+x2>=1").expect("builtin cone parses");
        PoGroup {
            kind: GroupKind::IntVec {
                rank: 2,
                cone: IntCone::Formula {
                    spec,
                    preset: Some(PresetCone::Ex210),
                },
            },
            caps: Capabilities {
                abelian: true,
                directed: true,
                lattice: false,
                linear: false,
                torsion_free: true,
                strong_unit: Some(Element::vec(&[1, 0])),
            },
            desc: "Z^2:cone=ex2.10".to_string(),
        }
    }

    /// Z^k with a user-supplied cone formula. The formula is spot-checked on
    /// a sampled box (reflexivity, antisymmetry, closure under addition); no
    /// capability beyond abelian/torsion-free (group-level facts) is claimed.
    pub fn custom_cone(rank: usize, spec: ConeSpec) -> Result<PoGroup> {
        if spec.rank != rank {
            return Err(Error::ConeSpec(format!(
                "cone rank {} does not match carrier rank {rank}",
                spec.rank
            )));
        }
        spec.validate_on_box(3)?;
        let desc = format!("Z^{rank}:cone={{{}}}", spec.source());
        Ok(PoGroup {
            kind: GroupKind::IntVec {
                rank,
                cone: IntCone::Formula { spec, preset: None },
            },
            caps: Capabilities {
                abelian: true,
                directed: false,
                lattice: false,
                linear: false,
                torsion_free: true,
                strong_unit: None,
            },
            desc,
        })
    }

    /// A finite builtin group with the trivial order (cone = identity).
    ///
    /// Directed/lattice/linear only in the one-element case. Nontrivial
    /// finite groups have torsion.
    pub fn finite(g: FiniteGroup) -> PoGroup {
        let trivial = g.order() == 1;
        let desc = g.describe();
        PoGroup {
            caps: Capabilities {
                abelian: g.is_abelian(),
                directed: trivial,
                lattice: trivial,
                linear: trivial,
                torsion_free: trivial,
                strong_unit: trivial.then(|| Element::Finite(0)),
            },
            kind: GroupKind::Finite(g),
            desc,
        }
    }

    pub fn s3() -> PoGroup {
        PoGroup::finite(FiniteGroup::S3)
    }

    pub fn cyclic(k: u8) -> Result<PoGroup> {
        if k == 0 {
            return Err(Error::Parse("cyclic group order must be >= 1".into()));
        }
        Ok(PoGroup::finite(FiniteGroup::Cyclic(k)))
    }

    /// UT(3,Z): triples (a,b,c) with product
    /// `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b')` and cone
    /// `{(a,b,c): (a,b) > (0,0) lexicographically, or (a,b)=(0,0), c >= 0}`.
    ///
    /// Non-abelian. Linearly ordered: the cone test is a trichotomy, and the
    /// cone is closed under conjugation (conjugating (a,b,c) changes only c,
    /// and only when (a,b) != (0,0)). Linear implies lattice and directed.
    /// Torsion-free: n(a,b,c) has first two entries (na,nb), and if a=b=0
    /// then n(0,0,c) = (0,0,nc). Strong unit (1,0,0): any (a,b,c) is below
    /// (n,0,0) once n > a.
    pub fn heisenberg() -> PoGroup {
        PoGroup {
            kind: GroupKind::Heisenberg,
            caps: Capabilities {
                abelian: false,
                directed: true,
                lattice: true,
                linear: true,
                torsion_free: true,
                strong_unit: Some(Element::tri(1, 0, 0)),
            },
            desc: "heis".to_string(),
        }
    }

    /// Lexicographic product: pairs with componentwise addition, ordered by
    /// `(a,b) >= 0` iff `a > 0`, or `a = 0` and `b >= 0` in the right factor.
    ///
    /// Capability derivation:
    /// - directed: a trivial left factor reduces to the right factor;
    ///   otherwise the product is directed iff the left factor is (an upper
    ///   bound with strictly larger first component dominates regardless of
    ///   the second).
    /// - linear: both factors linear (first-difference comparison is total).
    /// - lattice: a linear left factor with a lattice right factor (meet by
    ///   first-difference, ties resolved in the right factor); trivial
    ///   factors reduce.
    /// - abelian / torsion-free: both factors (the group is the direct
    ///   product; the order plays no role).
    /// - strong unit: (u1, 0) for a strong unit u1 of a nontrivial left
    ///   factor: g1 <= n*u1 gives g1 + u1 <= (n+1)*u1 strictly below in the
    ///   first component.
    pub fn lex(g1: PoGroup, g2: PoGroup) -> PoGroup {
        let c1 = &g1.caps;
        let c2 = &g2.caps;
        let directed = if g1.is_trivial() {
            c2.directed
        } else {
            c1.directed
        };
        let lattice = if g1.is_trivial() {
            c2.lattice
        } else if g2.is_trivial() {
            c1.lattice
        } else {
            c1.linear && c2.lattice
        };
        let strong_unit = if g1.is_trivial() {
            c2.strong_unit
                .clone()
                .map(|u2| Element::pair(g1.zero(), u2))
        } else {
            c1.strong_unit.clone().and_then(|u1| {
                (u1 != g1.zero()).then(|| Element::pair(u1, g2.zero()))
            })
        };
        let caps = Capabilities {
            abelian: c1.abelian && c2.abelian,
            directed,
            lattice,
            linear: c1.linear && c2.linear,
            torsion_free: c1.torsion_free && c2.torsion_free,
            strong_unit,
        };
        let desc = format!("lex({},{})", g1.desc, g2.desc);
        PoGroup {
            kind: GroupKind::Lex(Box::new(g1), Box::new(g2)),
            caps,
            desc,
        }
    }

    /// All builtin groups exercised by the test registry.
    pub fn registry() -> Vec<PoGroup> {
        vec![
            PoGroup::int(),
            PoGroup::int_vec(2).unwrap(),
            PoGroup::cone_ex29(),
            PoGroup::cone_ex210(),
            PoGroup::heisenberg(),
            PoGroup::s3(),
            PoGroup::cyclic(1).unwrap(),
            PoGroup::cyclic(4).unwrap(),
            PoGroup::lex(PoGroup::int(), PoGroup::int()),
            PoGroup::lex(PoGroup::int(), PoGroup::s3()),
            PoGroup::lex(PoGroup::int(), PoGroup::int_vec(2).unwrap()),
            PoGroup::lex(PoGroup::int(), PoGroup::heisenberg()),
            PoGroup::lex(PoGroup::s3(), PoGroup::int()),
        ]
    }

    // ---------------------------------------------------------------
    // Accessors
    // ---------------------------------------------------------------

    pub fn caps(&self) -> &Capabilities {
        &self.caps
    }

    pub fn describe(&self) -> &str {
        &self.desc
    }

    pub fn is_trivial(&self) -> bool {
        match &self.kind {
            GroupKind::IntVec { .. } | GroupKind::Heisenberg => false,
            GroupKind::Finite(f) => f.order() == 1,
            GroupKind::Lex(a, b) => a.is_trivial() && b.is_trivial(),
        }
    }

    pub fn strong_unit(&self) -> Option<&Element> {
        self.caps.strong_unit.as_ref()
    }

    /// A strictly positive element, when one is certified to exist.
    pub fn strictly_positive_sample(&self) -> Option<Element> {
        match &self.kind {
            GroupKind::IntVec {
                cone: IntCone::Product,
                rank,
            } => {
                let mut v = vec![0; *rank];
                v[0] = 1;
                Some(Element::IntVec(v))
            }
            GroupKind::IntVec {
                cone: IntCone::Formula { preset, .. },
                ..
            } => preset.as_ref().map(|_| Element::vec(&[1, 0])),
            GroupKind::Finite(_) => None,
            GroupKind::Heisenberg => Some(Element::tri(1, 0, 0)),
            GroupKind::Lex(a, b) => {
                if let Some(p) = a.strictly_positive_sample() {
                    Some(Element::pair(p, b.zero()))
                } else if a.is_trivial() {
                    b.strictly_positive_sample()
                        .map(|p| Element::pair(a.zero(), p))
                } else {
                    None
                }
            }
        }
    }

    /// Any element that is not zero, when the carrier certifies one.
    pub fn nonzero_sample(&self) -> Option<Element> {
        match &self.kind {
            GroupKind::Finite(f) => (f.order() > 1).then_some(Element::Finite(1)),
            GroupKind::Lex(a, b) => {
                if let Some(x) = a.nonzero_sample() {
                    Some(Element::pair(x, b.zero()))
                } else {
                    b.nonzero_sample().map(|y| Element::pair(a.zero(), y))
                }
            }
            _ => self.strictly_positive_sample(),
        }
    }

    // ---------------------------------------------------------------
    // Group operations
    // ---------------------------------------------------------------

    pub fn zero(&self) -> Element {
        match &self.kind {
            GroupKind::IntVec { rank, .. } => Element::IntVec(vec![0; *rank]),
            GroupKind::Finite(_) => Element::Finite(0),
            GroupKind::Heisenberg => Element::tri(0, 0, 0),
            GroupKind::Lex(a, b) => Element::pair(a.zero(), b.zero()),
        }
    }

    pub fn check_element(&self, x: &Element) -> Result<()> {
        let mismatch = || Error::CarrierMismatch {
            expected: self.desc.clone(),
            got: format!("{x}"),
        };
        match (&self.kind, x) {
            (GroupKind::IntVec { rank, .. }, Element::IntVec(v)) if v.len() == *rank => Ok(()),
            (GroupKind::Finite(f), Element::Finite(id)) => f.check_id(*id),
            (GroupKind::Heisenberg, Element::Tri(..)) => Ok(()),
            (GroupKind::Lex(a, b), Element::LexPair(l, r)) => {
                a.check_element(l)?;
                b.check_element(r)
            }
            _ => Err(mismatch()),
        }
    }

    pub fn add(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        self.add_unchecked(x, y)
    }

    fn add_unchecked(&self, x: &Element, y: &Element) -> Result<Element> {
        match (&self.kind, x, y) {
            (GroupKind::IntVec { .. }, Element::IntVec(a), Element::IntVec(b)) => {
                let mut out = Vec::with_capacity(a.len());
                for (p, q) in a.iter().zip(b) {
                    out.push(p.checked_add(*q).ok_or(Error::Overflow)?);
                }
                Ok(Element::IntVec(out))
            }
            (GroupKind::Finite(f), Element::Finite(a), Element::Finite(b)) => {
                Ok(Element::Finite(f.mul(*a, *b)?))
            }
            (GroupKind::Heisenberg, Element::Tri(a, b, c), Element::Tri(d, e, f)) => {
                let a2 = a.checked_add(*d).ok_or(Error::Overflow)?;
                let b2 = b.checked_add(*e).ok_or(Error::Overflow)?;
                let cross = a.checked_mul(*e).ok_or(Error::Overflow)?;
                let c2 = c
                    .checked_add(*f)
                    .and_then(|v| v.checked_add(cross))
                    .ok_or(Error::Overflow)?;
                Ok(Element::tri(a2, b2, c2))
            }
            (GroupKind::Lex(ga, gb), Element::LexPair(xl, xr), Element::LexPair(yl, yr)) => Ok(
                Element::pair(ga.add_unchecked(xl, yl)?, gb.add_unchecked(xr, yr)?),
            ),
            _ => unreachable!("check_element validated shapes"),
        }
    }

    pub fn neg(&self, x: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.neg_unchecked(x)
    }

    fn neg_unchecked(&self, x: &Element) -> Result<Element> {
        match (&self.kind, x) {
            (GroupKind::IntVec { .. }, Element::IntVec(v)) => {
                let mut out = Vec::with_capacity(v.len());
                for p in v {
                    out.push(p.checked_neg().ok_or(Error::Overflow)?);
                }
                Ok(Element::IntVec(out))
            }
            (GroupKind::Finite(f), Element::Finite(a)) => Ok(Element::Finite(f.inv(*a)?)),
            (GroupKind::Heisenberg, Element::Tri(a, b, c)) => {
                let na = a.checked_neg().ok_or(Error::Overflow)?;
                let nb = b.checked_neg().ok_or(Error::Overflow)?;
                let ab = a.checked_mul(*b).ok_or(Error::Overflow)?;
                let nc = ab.checked_sub(*c).ok_or(Error::Overflow)?;
                Ok(Element::tri(na, nb, nc))
            }
            (GroupKind::Lex(ga, gb), Element::LexPair(l, r)) => {
                Ok(Element::pair(ga.neg_unchecked(l)?, gb.neg_unchecked(r)?))
            }
            _ => unreachable!("check_element validated shapes"),
        }
    }

    /// The element d with x + d = y.
    pub fn diff_left(&self, x: &Element, y: &Element) -> Result<Element> {
        let nx = self.neg(x)?;
        self.add(&nx, y)
    }

    /// The element d with d + x = y.
    pub fn diff_right(&self, y: &Element, x: &Element) -> Result<Element> {
        let nx = self.neg(x)?;
        self.add(y, &nx)
    }

    /// Sum of several elements, left to right.
    pub fn sum(&self, xs: &[Element]) -> Result<Element> {
        let mut acc = self.zero();
        for x in xs {
            acc = self.add(&acc, x)?;
        }
        Ok(acc)
    }

    /// n-fold sum of x for n >= 0.
    pub fn scale(&self, n: i64, x: &Element) -> Result<Element> {
        if n < 0 {
            let pos = self.scale(-n, x)?;
            return self.neg(&pos);
        }
        let mut acc = self.zero();
        for _ in 0..n {
            acc = self.add(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn in_cone(&self, x: &Element) -> Result<bool> {
        self.check_element(x)?;
        self.in_cone_unchecked(x)
    }

    fn in_cone_unchecked(&self, x: &Element) -> Result<bool> {
        match (&self.kind, x) {
            (
                GroupKind::IntVec {
                    cone: IntCone::Product,
                    ..
                },
                Element::IntVec(v),
            ) => Ok(v.iter().all(|&p| p >= 0)),
            (
                GroupKind::IntVec {
                    cone: IntCone::Formula { spec, .. },
                    ..
                },
                Element::IntVec(v),
            ) => spec.contains(v),
            (GroupKind::Finite(_), Element::Finite(id)) => Ok(*id == 0),
            (GroupKind::Heisenberg, Element::Tri(a, b, c)) => {
                Ok(*a > 0 || (*a == 0 && *b > 0) || (*a == 0 && *b == 0 && *c >= 0))
            }
            (GroupKind::Lex(ga, gb), Element::LexPair(l, r)) => {
                let lzero = ga.zero();
                if **l == lzero {
                    gb.in_cone_unchecked(r)
                } else {
                    ga.in_cone_unchecked(l)
                }
            }
            _ => unreachable!("check_element validated shapes"),
        }
    }

    /// Order induced by the cone: x <= y iff -x + y is positive.
    pub fn leq(&self, x: &Element, y: &Element) -> Result<bool> {
        let d = self.diff_left(x, y)?;
        self.in_cone_unchecked(&d)
    }

    pub fn lt(&self, x: &Element, y: &Element) -> Result<bool> {
        Ok(x != y && self.leq(x, y)?)
    }

    // ---------------------------------------------------------------
    // Lattice operations
    // ---------------------------------------------------------------

    /// Order-theoretic infimum; requires the lattice capability.
    pub fn meet(&self, x: &Element, y: &Element) -> Result<Element> {
        if !self.caps.lattice {
            return Err(Error::CapabilityMissing(format!(
                "{} is not certified as a lattice",
                self.desc
            )));
        }
        self.check_element(x)?;
        self.check_element(y)?;
        self.meet_unchecked(x, y)
    }

    fn meet_unchecked(&self, x: &Element, y: &Element) -> Result<Element> {
        match (&self.kind, x, y) {
            (
                GroupKind::IntVec {
                    cone: IntCone::Product,
                    ..
                },
                Element::IntVec(a),
                Element::IntVec(b),
            ) => Ok(Element::IntVec(
                a.iter().zip(b).map(|(p, q)| (*p).min(*q)).collect(),
            )),
            (GroupKind::Heisenberg, _, _) => {
                // Linear order: the smaller of the two.
                if self.leq(x, y)? {
                    Ok(x.clone())
                } else {
                    Ok(y.clone())
                }
            }
            (GroupKind::Finite(_), _, _) => {
                // Lattice capability on a finite builtin means the trivial group.
                Ok(x.clone())
            }
            (GroupKind::Lex(ga, gb), Element::LexPair(xl, xr), Element::LexPair(yl, yr)) => {
                if ga.is_trivial() {
                    return Ok(Element::pair(ga.zero(), gb.meet_unchecked(xr, yr)?));
                }
                if gb.is_trivial() {
                    return Ok(Element::pair(ga.meet_unchecked(xl, yl)?, gb.zero()));
                }
                // Left factor is linear here (lattice capability derivation).
                if xl == yl {
                    Ok(Element::pair((**xl).clone(), gb.meet_unchecked(xr, yr)?))
                } else if ga.leq(xl, yl)? {
                    Ok(x.clone())
                } else {
                    Ok(y.clone())
                }
            }
            _ => Err(Error::CapabilityMissing(format!(
                "no meet rule for {}",
                self.desc
            ))),
        }
    }

    /// Order-theoretic supremum, via x v y = -((-x) ^ (-y)).
    pub fn join(&self, x: &Element, y: &Element) -> Result<Element> {
        let nx = self.neg(x)?;
        let ny = self.neg(y)?;
        let m = self.meet(&nx, &ny)?;
        self.neg(&m)
    }

    /// An element below every listed element. For lattice groups this is the
    /// iterated meet; other groups must certify a rule or the call fails.
    pub fn lower_bound(&self, xs: &[Element]) -> Result<Element> {
        let mut iter = xs.iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::Precondition("lower_bound of empty list".into()))?;
        let mut acc = first.clone();
        for x in iter {
            acc = self.meet(&acc, x)?;
        }
        Ok(acc)
    }

    // ---------------------------------------------------------------
    // Element text forms
    // ---------------------------------------------------------------

    pub fn format_element(&self, x: &Element) -> String {
        match (&self.kind, x) {
            (GroupKind::IntVec { .. }, Element::IntVec(v)) if v.len() == 1 => v[0].to_string(),
            (GroupKind::IntVec { .. }, Element::IntVec(v)) => {
                let parts: Vec<String> = v.iter().map(|p| p.to_string()).collect();
                format!("({})", parts.join(","))
            }
            (GroupKind::Finite(f), Element::Finite(id)) => f.name(*id),
            (GroupKind::Heisenberg, Element::Tri(a, b, c)) => format!("({a},{b},{c})"),
            (GroupKind::Lex(ga, gb), Element::LexPair(l, r)) => {
                format!("({},{})", ga.format_element(l), gb.format_element(r))
            }
            _ => format!("{x}"),
        }
    }

    pub fn parse_element(&self, s: &str) -> Result<Element> {
        let s = s.trim();
        match &self.kind {
            GroupKind::IntVec { rank, .. } => {
                if *rank == 1 {
                    let n: i64 = s
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad integer `{s}`")))?;
                    Ok(Element::int(n))
                } else {
                    let parts = split_tuple(s, *rank)?;
                    let mut v = Vec::with_capacity(*rank);
                    for p in parts {
                        v.push(
                            p.trim()
                                .parse()
                                .map_err(|_| Error::Parse(format!("bad integer `{p}`")))?,
                        );
                    }
                    Ok(Element::IntVec(v))
                }
            }
            GroupKind::Finite(f) => Ok(Element::Finite(f.parse(s)?)),
            GroupKind::Heisenberg => {
                let parts = split_tuple(s, 3)?;
                let nums: Vec<i64> = parts
                    .iter()
                    .map(|p| {
                        p.trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad integer `{p}`")))
                    })
                    .collect::<Result<_>>()?;
                Ok(Element::tri(nums[0], nums[1], nums[2]))
            }
            GroupKind::Lex(ga, gb) => {
                let parts = split_tuple(s, 2)?;
                Ok(Element::pair(
                    ga.parse_element(&parts[0])?,
                    gb.parse_element(&parts[1])?,
                ))
            }
        }
    }

    // ---------------------------------------------------------------
    // Bounded enumeration
    // ---------------------------------------------------------------

    /// All elements whose integer entries lie in [-radius, radius]; finite
    /// factors contribute all their elements. Deterministic order.
    pub fn box_elements(&self, radius: i64) -> Vec<Element> {
        match &self.kind {
            GroupKind::IntVec { rank, .. } => int_box(*rank, radius)
                .into_iter()
                .map(Element::IntVec)
                .collect(),
            GroupKind::Finite(f) => (0..f.order()).map(Element::Finite).collect(),
            GroupKind::Heisenberg => int_box(3, radius)
                .into_iter()
                .map(|v| Element::tri(v[0], v[1], v[2]))
                .collect(),
            GroupKind::Lex(a, b) => {
                let left = a.box_elements(radius);
                let right = b.box_elements(radius);
                let mut out = Vec::with_capacity(left.len() * right.len());
                for l in &left {
                    for r in &right {
                        out.push(Element::pair(l.clone(), r.clone()));
                    }
                }
                out
            }
        }
    }

    /// Every element of the whole carrier, or an error when it is infinite.
    pub fn enumerate_all(&self, budget: usize) -> Result<Vec<Element>> {
        match &self.kind {
            GroupKind::IntVec { .. } | GroupKind::Heisenberg => Err(Error::BudgetExceeded(
                format!("carrier of {} is infinite", self.desc),
            )),
            GroupKind::Finite(f) => {
                let n = f.order() as usize;
                if n > budget {
                    return Err(Error::BudgetExceeded(format!(
                        "{n} elements exceed budget {budget}"
                    )));
                }
                Ok((0..f.order()).map(Element::Finite).collect())
            }
            GroupKind::Lex(a, b) => {
                let left = a.enumerate_all(budget)?;
                let right = b.enumerate_all(budget)?;
                let total = left.len().checked_mul(right.len()).unwrap_or(usize::MAX);
                if total > budget {
                    return Err(Error::BudgetExceeded(format!(
                        "{total} elements exceed budget {budget}"
                    )));
                }
                let mut out = Vec::with_capacity(total);
                for l in &left {
                    for r in &right {
                        out.push(Element::pair(l.clone(), r.clone()));
                    }
                }
                Ok(out)
            }
        }
    }

    /// Every positive element, or an error when the cone is infinite.
    pub fn enumerate_cone(&self, budget: usize) -> Result<Vec<Element>> {
        match &self.kind {
            GroupKind::IntVec { .. } | GroupKind::Heisenberg => Err(Error::BudgetExceeded(
                format!("positive cone of {} is infinite", self.desc),
            )),
            GroupKind::Finite(_) => Ok(vec![Element::Finite(0)]),
            GroupKind::Lex(a, b) => {
                // Cone = {(l, r): l strictly positive, r arbitrary}
                //      + {(0, r): r positive}.
                let strict: Vec<Element> = a
                    .enumerate_cone(budget)?
                    .into_iter()
                    .filter(|l| *l != a.zero())
                    .collect();
                let mut out = Vec::new();
                if !strict.is_empty() {
                    let all_right = b.enumerate_all(budget)?;
                    for l in &strict {
                        for r in &all_right {
                            out.push(Element::pair(l.clone(), r.clone()));
                        }
                    }
                }
                for r in b.enumerate_cone(budget)? {
                    out.push(Element::pair(a.zero(), r));
                }
                if out.len() > budget {
                    return Err(Error::BudgetExceeded(format!(
                        "{} cone elements exceed budget {budget}",
                        out.len()
                    )));
                }
                Ok(out)
            }
        }
    }

    /// All x with lo <= x <= hi, or an error when the order interval is
    /// infinite or exceeds the budget. The enumeration is certified complete
    /// for the carriers that implement it; custom cone formulas are refused.
    pub fn enumerate_interval(
        &self,
        lo: &Element,
        hi: &Element,
        budget: usize,
    ) -> Result<Vec<Element>> {
        if !self.leq(lo, hi)? {
            return Ok(Vec::new());
        }
        // Translate: [lo, hi] = lo + [0, -lo + hi].
        let u = self.diff_left(lo, hi)?;
        let base = self.interval_from_zero(&u, budget)?;
        base.into_iter().map(|x| self.add(lo, &x)).collect()
    }

    /// All x with 0 <= x <= u (u must be positive).
    pub fn interval_from_zero(&self, u: &Element, budget: usize) -> Result<Vec<Element>> {
        if !self.in_cone(u)? {
            return Err(Error::NotPositive(self.format_element(u)));
        }
        let out = self.interval_inner(u, budget)?;
        if out.len() > budget {
            return Err(Error::BudgetExceeded(format!(
                "{} interval elements exceed budget {budget}",
                out.len()
            )));
        }
        Ok(out)
    }

    fn interval_inner(&self, u: &Element, budget: usize) -> Result<Vec<Element>> {
        match (&self.kind, u) {
            (
                GroupKind::IntVec {
                    cone: IntCone::Product,
                    ..
                },
                Element::IntVec(v),
            ) => {
                let mut size: usize = 1;
                for &c in v {
                    size = size
                        .checked_mul((c + 1) as usize)
                        .ok_or_else(|| Error::BudgetExceeded("interval too large".into()))?;
                    if size > budget {
                        return Err(Error::BudgetExceeded(format!(
                            "product interval has {size}+ elements, budget {budget}"
                        )));
                    }
                }
                let mut out = vec![vec![]];
                for &c in v {
                    let mut next = Vec::new();
                    for p in &out {
                        for val in 0..=c {
                            let mut q = p.clone();
                            q.push(val);
                            next.push(q);
                        }
                    }
                    out = next;
                }
                Ok(out.into_iter().map(Element::IntVec).collect())
            }
            (
                GroupKind::IntVec {
                    cone: IntCone::Formula { spec, preset },
                    ..
                },
                Element::IntVec(v),
            ) => match preset {
                Some(PresetCone::Ex29) => interval_ex29(spec, v, budget),
                Some(PresetCone::Ex210) => interval_ex210(spec, v),
                None => Err(Error::NotEnumerable(
                    "no certified interval enumeration for custom cone formulas".into(),
                )),
            },
            (GroupKind::Finite(_), Element::Finite(_)) => {
                // Trivial order: the only positive element is the identity.
                Ok(vec![Element::Finite(0)])
            }
            (GroupKind::Heisenberg, Element::Tri(a, b, c)) => {
                if *a != 0 || *b != 0 {
                    // [0, u] contains (0, q, r) for every q > 0 and every r
                    // once the first difference is strictly positive.
                    return Err(Error::BudgetExceeded(
                        "heisenberg interval above a non-central element is infinite".into(),
                    ));
                }
                Ok((0..=*c).map(|t| Element::tri(0, 0, t)).collect())
            }
            (GroupKind::Lex(ga, gb), Element::LexPair(m, g)) => {
                let lzero = ga.zero();
                let left_vals = ga.interval_from_zero(m, budget)?;
                let mut out = Vec::new();
                for l in left_vals {
                    let is_bottom = l == lzero;
                    let is_top = l == **m;
                    let rights: Vec<Element> = match (is_bottom, is_top) {
                        (true, true) => gb.interval_from_zero(g, budget)?,
                        (true, false) => gb.enumerate_cone(budget)?,
                        (false, true) => {
                            // {r: r <= g} = {g - c: c positive}, reversed cone.
                            let cone = gb.enumerate_cone(budget)?;
                            cone.into_iter()
                                .map(|c| gb.diff_right(g, &c))
                                .collect::<Result<_>>()?
                        }
                        (false, false) => gb.enumerate_all(budget)?,
                    };
                    for r in rights {
                        out.push(Element::pair(l.clone(), r));
                        if out.len() > budget {
                            return Err(Error::BudgetExceeded(format!(
                                "interval exceeds budget {budget}"
                            )));
                        }
                    }
                }
                Ok(out)
            }
            _ => Err(Error::CarrierMismatch {
                expected: self.desc.clone(),
                got: format!("{u}"),
            }),
        }
    }
}

/// Certified enumeration of [0, u] for the ex2.9-style cone
/// `C = {x: x componentwise >= 0} u {x: sum(x) >= 2}`.
///
/// Region derivation. The coordinate sum s is additive and nonnegative on C,
/// so any x in [0,u] has 0 <= s(x) <= s(u). If s(u) >= 4, the interval is
/// infinite: every x = (k, 2-k) lies in C via the sum branch, and u - x has
/// sum s(u) - 2 >= 2, so u - x lies in C via the sum branch for every k.
/// If s(u) <= 3, for each x in [0,u] either x is in the componentwise branch
/// (0 <= x_i <= s(x) <= s(u)), or s(x) >= 2 forces s(u-x) <= 1 < 2, so u - x
/// is componentwise with entries in [0,1], giving x_i in [u_i - 1, u_i].
/// Either way x lies in the box [min(0, u_i-1), max(s(u), u_i)] per
/// coordinate, which is scanned exhaustively.
fn interval_ex29(spec: &ConeSpec, u: &[i64], budget: usize) -> Result<Vec<Element>> {
    let s: i64 = u.iter().sum();
    if s >= 4 {
        return Err(Error::BudgetExceeded(
            "interval in the ex2.9 cone is infinite for units of coordinate sum >= 4".into(),
        ));
    }
    let mut out = Vec::new();
    let los: Vec<i64> = u.iter().map(|&c| 0.min(c - 1)).collect();
    let his: Vec<i64> = u.iter().map(|&c| s.max(c)).collect();
    let mut stack = vec![vec![]];
    for i in 0..u.len() {
        let mut next = Vec::new();
        for p in &stack {
            for v in los[i]..=his[i] {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        stack = next;
    }
    for x in stack {
        let diff: Vec<i64> = u.iter().zip(&x).map(|(a, b)| a - b).collect();
        if spec.contains(&x)? && spec.contains(&diff)? {
            out.push(Element::IntVec(x));
            if out.len() > budget {
                return Err(Error::BudgetExceeded(format!(
                    "interval exceeds budget {budget}"
                )));
            }
        }
    }
    Ok(out)
}

/// Certified enumeration of [0, u] for the ex2.10-style cone
/// `C = {0} u {x: sum(x) >= 1}`.
///
/// Region derivation. If s(u) >= 2, x = (k, 1-k) lies in C for every k and
/// u - x has sum s(u) - 1 >= 1, so the interval is infinite. If s(u) <= 1,
/// any x in [0,u] other than 0 and u would force s(x) >= 1 and
/// s(u-x) >= 1, hence s(u) >= 2; so [0,u] = {0, u}.
fn interval_ex210(_spec: &ConeSpec, u: &[i64]) -> Result<Vec<Element>> {
    let s: i64 = u.iter().sum();
    if s >= 2 {
        return Err(Error::BudgetExceeded(
            "interval in the ex2.10 cone is infinite for units of coordinate sum >= 2".into(),
        ));
    }
    let zero = Element::IntVec(vec![0; u.len()]);
    let top = Element::IntVec(u.to_vec());
    if zero == top {
        Ok(vec![zero])
    } else {
        Ok(vec![zero, top])
    }
}

fn int_box(rank: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        let mut next = Vec::new();
        for p in &out {
            for v in -radius..=radius {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Splits `(a,b,...)` into exactly `n` top-level comma-separated parts.
fn split_tuple(s: &str, n: usize) -> Result<Vec<String>> {
    let s = s.trim();
    if !s.starts_with('(') || !s.ends_with(')') {
        return Err(Error::Parse(format!("expected a parenthesized tuple: `{s}`")));
    }
    let inner = &s[1..s.len() - 1];
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced parens in `{s}`")))?
            }
            ',' if depth == 0 => {
                parts.push(inner[start..i].to_string());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(inner[start..].to_string());
    if parts.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} components, found {} in `{s}`",
            parts.len()
        )));
    }
    Ok(parts)
}
