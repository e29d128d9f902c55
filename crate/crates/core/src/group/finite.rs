//! Finite builtin groups carrying the trivial partial order (the positive
//! cone is the identity alone, so the only comparabilities are equalities).

use crate::error::{Error, Result};

/// S3 elements as permutations of {0,1,2} in one-line notation,
/// indexed 0..=5. Composition is `(g*h)(x) = g(h(x))`.
const S3_PERMS: [[u8; 3]; 6] = [
    [0, 1, 2], // e
    [1, 0, 2], // (12)
    [2, 1, 0], // (13)
    [0, 2, 1], // (23)
    [1, 2, 0], // (123)
    [2, 0, 1], // (132)
];

const S3_NAMES: [&str; 6] = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FiniteGroup {
    S3,
    Cyclic(u8),
}

impl FiniteGroup {
    pub fn order(&self) -> u8 {
        match self {
            FiniteGroup::S3 => 6,
            FiniteGroup::Cyclic(k) => *k,
        }
    }

    pub fn is_abelian(&self) -> bool {
        !matches!(self, FiniteGroup::S3)
    }

    pub fn check_id(&self, id: u8) -> Result<()> {
        if id < self.order() {
            Ok(())
        } else {
            Err(Error::CarrierMismatch {
                expected: self.describe(),
                got: format!("element id {id}"),
            })
        }
    }

    pub fn mul(&self, a: u8, b: u8) -> Result<u8> {
        self.check_id(a)?;
        self.check_id(b)?;
        Ok(match self {
            FiniteGroup::S3 => {
                let (g, h) = (S3_PERMS[a as usize], S3_PERMS[b as usize]);
                let composed = [g[h[0] as usize], g[h[1] as usize], g[h[2] as usize]];
                S3_PERMS
                    .iter()
                    .position(|p| *p == composed)
                    .expect("composition of permutations is a permutation") as u8
            }
            FiniteGroup::Cyclic(k) => ((a as u16 + b as u16) % *k as u16) as u8,
        })
    }

    pub fn inv(&self, a: u8) -> Result<u8> {
        self.check_id(a)?;
        for b in 0..self.order() {
            if self.mul(a, b)? == 0 {
                return Ok(b);
            }
        }
        unreachable!("every finite group element has an inverse")
    }

    pub fn name(&self, id: u8) -> String {
        match self {
            FiniteGroup::S3 => S3_NAMES[id as usize].to_string(),
            FiniteGroup::Cyclic(_) => id.to_string(),
        }
    }

    pub fn parse(&self, token: &str) -> Result<u8> {
        match self {
            FiniteGroup::S3 => S3_NAMES
                .iter()
                .position(|n| *n == token)
                .map(|i| i as u8)
                .ok_or_else(|| Error::Parse(format!("unknown S3 element `{token}`"))),
            FiniteGroup::Cyclic(k) => {
                let v: u8 = token
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad cyclic element `{token}`")))?;
                if v < *k {
                    Ok(v)
                } else {
                    Err(Error::Parse(format!("element {v} out of range for C{k}")))
                }
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            FiniteGroup::S3 => "finite:S3".to_string(),
            FiniteGroup::Cyclic(k) => format!("finite:C{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_group_laws() {
        let g = FiniteGroup::S3;
        for a in 0..6 {
            assert_eq!(g.mul(a, 0).unwrap(), a);
            assert_eq!(g.mul(0, a).unwrap(), a);
            let ai = g.inv(a).unwrap();
            assert_eq!(g.mul(a, ai).unwrap(), 0);
            assert_eq!(g.mul(ai, a).unwrap(), 0);
            for b in 0..6 {
                for c in 0..6 {
                    let lhs = g.mul(g.mul(a, b).unwrap(), c).unwrap();
                    let rhs = g.mul(a, g.mul(b, c).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn s3_is_noncommutative() {
        let g = FiniteGroup::S3;
        let t12 = g.parse("(12)").unwrap();
        let t13 = g.parse("(13)").unwrap();
        assert_ne!(g.mul(t12, t13).unwrap(), g.mul(t13, t12).unwrap());
    }

    #[test]
    fn s3_conjugate_of_transposition() {
        let g = FiniteGroup::S3;
        let t12 = g.parse("(12)").unwrap();
        let t13 = g.parse("(13)").unwrap();
        let conj = g
            .mul(g.mul(g.inv(t13).unwrap(), t12).unwrap(), t13)
            .unwrap();
        assert_eq!(g.name(conj), "(23)");
    }

    #[test]
    fn cyclic_arithmetic() {
        let g = FiniteGroup::Cyclic(4);
        assert_eq!(g.mul(3, 2).unwrap(), 1);
        assert_eq!(g.inv(1).unwrap(), 3);
        assert!(g.parse("5").is_err());
    }
}
