//! Positive cones on integer vector groups given by linear-constraint
//! formulas: a disjunction of conjunctions of integer linear inequalities
//! over the coordinates `x1..xk`.

use crate::element::Element;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CmpOp {
    Le,
    Ge,
    Lt,
    Gt,
    Eq,
}

/// One atom `c1*x1 + ... + ck*xk OP rhs`.
#[derive(Clone, Debug)]
pub struct LinearAtom {
    pub coeffs: Vec<i64>,
    pub op: CmpOp,
    pub rhs: i64,
}

impl LinearAtom {
    fn eval(&self, point: &[i64]) -> Result<bool> {
        let mut acc: i64 = 0;
        for (c, x) in self.coeffs.iter().zip(point) {
            let term = c.checked_mul(*x).ok_or(Error::Overflow)?;
            acc = acc.checked_add(term).ok_or(Error::Overflow)?;
        }
        Ok(match self.op {
            CmpOp::Le => acc <= self.rhs,
            CmpOp::Ge => acc >= self.rhs,
            CmpOp::Lt => acc < self.rhs,
            CmpOp::Gt => acc > self.rhs,
            CmpOp::Eq => acc == self.rhs,
        })
    }
}

/// Cone membership formula over Z^k: disjuncts separated by `|`,
/// conjuncts by `&`, atoms as integer linear inequalities over `x1..xk`.
#[derive(Clone, Debug)]
pub struct ConeSpec {
    pub rank: usize,
    pub disjuncts: Vec<Vec<LinearAtom>>,
    source: String,
}

impl ConeSpec {
    /// Parses a formula such as `x1>=0&x2>=0|x1+x2>=2`.
    pub fn parse(rank: usize, input: &str) -> Result<ConeSpec> {
        if rank == 0 {
            return Err(Error::ConeSpec("rank must be at least 1".into()));
        }
        let mut disjuncts = Vec::new();
        for clause in input.split('|') {
            let mut atoms = Vec::new();
            for raw in clause.split('&') {
                atoms.push(parse_atom(rank, raw.trim())?);
            }
            if atoms.is_empty() {
                return Err(Error::ConeSpec("empty conjunction".into()));
            }
            disjuncts.push(atoms);
        }
        if disjuncts.is_empty() {
            return Err(Error::ConeSpec("empty formula".into()));
        }
        Ok(ConeSpec {
            rank,
            disjuncts,
            source: input.trim().to_string(),
        })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn contains(&self, point: &[i64]) -> Result<bool> {
        if point.len() != self.rank {
            return Err(Error::CarrierMismatch {
                expected: format!("Z^{}", self.rank),
                got: format!("Z^{}", point.len()),
            });
        }
        for clause in &self.disjuncts {
            let mut all = true;
            for atom in clause {
                if !atom.eval(point)? {
                    all = false;
                    break;
                }
            }
            if all {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn contains_element(&self, x: &Element) -> Result<bool> {
        match x {
            Element::IntVec(v) => self.contains(v),
            other => Err(Error::CarrierMismatch {
                expected: format!("Z^{}", self.rank),
                got: format!("{other}"),
            }),
        }
    }

    /// Spot-checks that the induced relation is a partial order on a sampled
    /// box: zero lies in the cone, the cone is closed under addition within
    /// the box (transitivity), and it meets its negation only in zero
    /// (antisymmetry). This cannot certify the global property; it rejects
    /// formulas that are visibly not order cones.
    pub fn validate_on_box(&self, radius: i64) -> Result<()> {
        let zero = vec![0i64; self.rank];
        if !self.contains(&zero)? {
            return Err(Error::ConeSpec("zero is not in the cone".into()));
        }
        let pts = box_points(self.rank, radius);
        let members: Vec<&Vec<i64>> = {
            let mut m = Vec::new();
            for p in &pts {
                if self.contains(p)? {
                    m.push(p);
                }
            }
            m
        };
        for x in &members {
            let neg: Vec<i64> = x.iter().map(|v| -v).collect();
            if self.contains(&neg)? && x.iter().any(|&v| v != 0) {
                return Err(Error::ConeSpec(format!(
                    "antisymmetry fails: both {x:?} and its negation are in the cone"
                )));
            }
        }
        for x in &members {
            for y in &members {
                let sum: Vec<i64> = x.iter().zip(y.iter()).map(|(a, b)| a + b).collect();
                if !self.contains(&sum)? {
                    return Err(Error::ConeSpec(format!(
                        "cone not closed under addition on the sampled box: {x:?} + {y:?}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn box_points(rank: usize, radius: i64) -> Vec<Vec<i64>> {
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

/// Parses `<linear-combination> <op> <linear-combination>` and normalizes it
/// to `coeffs . x OP rhs` by moving variables left and constants right.
fn parse_atom(rank: usize, s: &str) -> Result<LinearAtom> {
    let (op, lhs, rhs) = split_cmp(s)?;
    let (lc, lk) = parse_lin(rank, lhs)?;
    let (rc, rk) = parse_lin(rank, rhs)?;
    let mut coeffs = vec![0i64; rank];
    for i in 0..rank {
        coeffs[i] = lc[i]
            .checked_sub(rc[i])
            .ok_or(Error::Overflow)?;
    }
    let rhs_val = rk.checked_sub(lk).ok_or(Error::Overflow)?;
    Ok(LinearAtom {
        coeffs,
        op,
        rhs: rhs_val,
    })
}

fn split_cmp(s: &str) -> Result<(CmpOp, &str, &str)> {
    for (pat, op) in [
        ("<=", CmpOp::Le),
        (">=", CmpOp::Ge),
        ("<", CmpOp::Lt),
        (">", CmpOp::Gt),
        ("=", CmpOp::Eq),
    ] {
        if let Some(pos) = s.find(pat) {
            return Ok((op, &s[..pos], &s[pos + pat.len()..]));
        }
    }
    Err(Error::ConeSpec(format!("no comparison operator in `{s}`")))
}

/// Parses a linear combination like `2x1-x3+4` into (coefficients, constant).
fn parse_lin(rank: usize, s: &str) -> Result<(Vec<i64>, i64)> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::ConeSpec("empty side of comparison".into()));
    }
    let mut coeffs = vec![0i64; rank];
    let mut konst: i64 = 0;
    let bytes = compact.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let sign: i64 = match bytes[i] {
            b'+' => {
                i += 1;
                1
            }
            b'-' => {
                i += 1;
                -1
            }
            _ => 1,
        };
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let mag: i64 = if start == i {
            1
        } else {
            compact[start..i]
                .parse()
                .map_err(|_| Error::ConeSpec(format!("bad integer in `{s}`")))?
        };
        if i < bytes.len() && bytes[i] == b'x' {
            i += 1;
            let vstart = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let idx: usize = compact[vstart..i]
                .parse()
                .map_err(|_| Error::ConeSpec(format!("bad variable in `{s}`")))?;
            if idx == 0 || idx > rank {
                return Err(Error::ConeSpec(format!(
                    "variable x{idx} out of range 1..{rank}"
                )));
            }
            coeffs[idx - 1] = coeffs[idx - 1]
                .checked_add(sign * mag)
                .ok_or(Error::Overflow)?;
        } else {
            if start == i {
                return Err(Error::ConeSpec(format!("dangling sign in `{s}`")));
            }
            konst = konst.checked_add(sign * mag).ok_or(Error::Overflow)?;
        }
    }
    Ok((coeffs, konst))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_evaluates_preset_formula() {
        let spec = ConeSpec::parse(2, "x1>=0&x2>=0|x1+x2>=2").unwrap();
        assert!(spec.contains(&[0, 0]).unwrap());
        assert!(spec.contains(&[1, 0]).unwrap());
        assert!(spec.contains(&[5, -3]).unwrap());
        assert!(!spec.contains(&[1, -1]).unwrap());
        assert!(!spec.contains(&[-1, 0]).unwrap());
    }

    #[test]
    fn parses_coefficients_and_constants() {
        let spec = ConeSpec::parse(3, "2x1-x2+3>=x3+1").unwrap();
        // 2a - b + 3 >= c + 1  <=>  2a - b - c >= -2
        assert!(spec.contains(&[0, 0, 0]).unwrap());
        assert!(spec.contains(&[0, 1, 1]).unwrap());
        assert!(!spec.contains(&[0, 2, 1]).unwrap());
    }

    #[test]
    fn equality_atoms() {
        let spec = ConeSpec::parse(2, "x1=0&x2=0|x1+x2>=1").unwrap();
        assert!(spec.contains(&[0, 0]).unwrap());
        assert!(!spec.contains(&[0, -1]).unwrap());
        assert!(spec.contains(&[3, -2]).unwrap());
    }

    #[test]
    fn box_validation_accepts_presets_rejects_junk() {
        ConeSpec::parse(2, "x1>=0&x2>=0|x1+x2>=2")
            .unwrap()
            .validate_on_box(3)
            .unwrap();
        ConeSpec::parse(2, "x1=0&x2=0|x1+x2>=1")
            .unwrap()
            .validate_on_box(3)
            .unwrap();
        // x1 >= -1 admits both (1,0)-ish and its negation: not antisymmetric.
        let bad = ConeSpec::parse(1, "x1>=-1").unwrap();
        assert!(bad.validate_on_box(3).is_err());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(ConeSpec::parse(2, "x1").is_err());
        assert!(ConeSpec::parse(2, "x3>=0").is_err());
        assert!(ConeSpec::parse(0, "x1>=0").is_err());
    }
}
