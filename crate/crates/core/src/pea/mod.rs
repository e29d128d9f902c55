//! Pseudo effect algebras as partial algebras: explicit finite tables,
//! interval algebras over po-groups, the defining axioms, derived
//! operations, ideals, and homomorphisms.

pub mod finite;
pub mod format;
pub mod interval;

pub use finite::{Axiom, AxiomCheck, FinitePea};
pub use interval::{gamma, IntervalPea};

use crate::element::Element;
use crate::error::Result;
use crate::group::PoGroup;

/// The (k+1)-element chain: the interval [0, k] of the integers.
pub fn chain(k: i64) -> FinitePea {
    let g = PoGroup::int();
    gamma(&g, &Element::int(k))
        .and_then(|e| e.materialize(k.unsigned_abs() as usize + 2))
        .expect("chain construction is finite")
}

/// The four-element diamond: the interval [0, (1,1)] of Z^2.
pub fn diamond() -> FinitePea {
    let g = PoGroup::int_vec(2).expect("rank 2");
    gamma(&g, &Element::vec(&[1, 1]))
        .and_then(|e| e.materialize(8))
        .expect("diamond construction is finite")
}

/// The interval [0, (m, e)] of the lexicographic product of the integers
/// with the trivially ordered S3.
pub fn lex_s3_interval(m: i64) -> Result<FinitePea> {
    let g = PoGroup::lex(PoGroup::int(), PoGroup::s3());
    let u = Element::pair(Element::int(m), Element::Finite(0));
    gamma(&g, &u)?.materialize(6 * m.unsigned_abs() as usize + 4)
}

#[cfg(test)]
mod tests;
