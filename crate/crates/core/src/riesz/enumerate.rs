//! Small-model enumeration: all pseudo effect algebras on up to six
//! elements, deduplicated up to isomorphism by a canonical table form.
//!
//! The search space is cut down by facts that hold in every valid algebra
//! (all derivable from the axioms, so no table is missed):
//! - zero is neutral on both sides;
//! - sums with the unit are undefined except for zero;
//! - x + y = 1 exactly when y is the unique right complement of x, and the
//!   right-complement map is a bijection fixing {0 -> 1, 1 -> 0};
//! - addition is cancellative in both arguments, and x + y never equals
//!   x or y unless the other summand is zero.
//!
//! Candidate tables are then scanned cell by cell with partial-consistency
//! pruning, and every leaf is confirmed by the full axiom checker before
//! emission. The one-element algebra (0 = 1) is degenerate and excluded.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::pea::FinitePea;

const NODE_BUDGET: u64 = 500_000_000;

struct Enumerator {
    n: usize,
    zero: usize,
    unit: usize,
    table: Vec<Option<usize>>,
    known: Vec<bool>,
    nodes: u64,
    found: BTreeSet<Vec<u8>>,
}

impl Enumerator {
    fn new(n: usize) -> Enumerator {
        Enumerator {
            n,
            zero: 0,
            unit: n - 1,
            table: vec![None; n * n],
            known: vec![false; n * n],
            nodes: 0,
            found: BTreeSet::new(),
        }
    }

    fn idx(&self, a: usize, b: usize) -> usize {
        a * self.n + b
    }

    fn set(&mut self, a: usize, b: usize, v: Option<usize>) {
        let i = self.idx(a, b);
        self.table[i] = v;
        self.known[i] = true;
    }

    fn run(&mut self, sigma: &[usize]) -> Result<()> {
        let n = self.n;
        self.table.fill(None);
        self.known.fill(false);
        // Zero is neutral.
        for x in 0..n {
            self.set(0, x, Some(x));
            if x != 0 {
                self.set(x, 0, Some(x));
            }
        }
        // Unit row and column are undefined away from zero.
        for x in 1..n {
            if x != self.unit {
                self.set(x, self.unit, None);
                self.set(self.unit, x, None);
            }
        }
        self.set(self.unit, self.unit, None);
        // Complement pairs.
        for a in 1..n - 1 {
            self.set(a, sigma[a], Some(self.unit));
        }
        // Remaining free cells: middle pairs off the complement graph.
        let mut free = Vec::new();
        for a in 1..n - 1 {
            for b in 1..n - 1 {
                if sigma[a] != b {
                    free.push((a, b));
                }
            }
        }
        self.dfs(&free, 0)
    }

    fn dfs(&mut self, free: &[(usize, usize)], pos: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > NODE_BUDGET {
            return Err(Error::BudgetExceeded(
                "model enumeration node budget".into(),
            ));
        }
        if pos == free.len() {
            self.leaf();
            return Ok(());
        }
        let (a, b) = free[pos];
        let mut values: Vec<Option<usize>> = vec![None];
        for v in 1..self.n - 1 {
            if v != a && v != b {
                values.push(Some(v));
            }
        }
        for v in values {
            let i = self.idx(a, b);
            self.table[i] = v;
            self.known[i] = true;
            if self.consistent(a, b) {
                self.dfs(free, pos + 1)?;
            }
            self.table[i] = None;
            self.known[i] = false;
        }
        Ok(())
    }

    /// Sound pruning after assigning cell (a,b): cancellation within the
    /// touched row and column, and the associativity axiom restricted to
    /// triples whose relevant cells are all decided.
    fn consistent(&self, row: usize, col: usize) -> bool {
        let n = self.n;
        if let Some(v) = self.table[self.idx(row, col)] {
            for b2 in 0..n {
                if b2 != col && self.table[self.idx(row, b2)] == Some(v) {
                    return false;
                }
                if b2 != row && self.table[self.idx(b2, col)] == Some(v) {
                    return false;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !self.pe1_ok(a, b, c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Tri-state check of the associativity axiom on one triple; unknown
    /// cells make the triple inconclusive (checked again at the leaf).
    fn pe1_ok(&self, a: usize, b: usize, c: usize) -> bool {
        let cell = |x: usize, y: usize| -> (bool, Option<usize>) {
            let i = self.idx(x, y);
            (self.known[i], self.table[i])
        };
        let (ab_known, ab) = cell(a, b);
        if !ab_known {
            return true;
        }
        let (bc_known, bc) = cell(b, c);
        match ab {
            None => {
                // Left chain dead: the right chain must not complete.
                if !bc_known {
                    return true;
                }
                match bc {
                    None => true,
                    Some(v) => {
                        let (r_known, r) = cell(a, v);
                        !r_known || r.is_none()
                    }
                }
            }
            Some(u) => {
                let (l2_known, l2) = cell(u, c);
                if !l2_known {
                    return true;
                }
                match l2 {
                    Some(lv) => {
                        if !bc_known {
                            return true;
                        }
                        match bc {
                            None => false,
                            Some(v) => {
                                let (r_known, r) = cell(a, v);
                                !r_known || r == Some(lv)
                            }
                        }
                    }
                    None => {
                        if !bc_known {
                            return true;
                        }
                        match bc {
                            None => true,
                            Some(v) => {
                                let (r_known, r) = cell(a, v);
                                !r_known || r.is_none()
                            }
                        }
                    }
                }
            }
        }
    }

    fn leaf(&mut self) {
        let pea = self.build();
        if !pea.check_axioms().is_valid() {
            return;
        }
        self.found.insert(self.canonical_form());
    }

    fn build(&self) -> FinitePea {
        build_pea(self.n, &self.table)
    }

    /// Lexicographically minimal serialization over all element
    /// permutations fixing zero and unit.
    fn canonical_form(&self) -> Vec<u8> {
        let n = self.n;
        let mids: Vec<usize> = (1..n - 1).collect();
        let mut best: Option<Vec<u8>> = None;
        for perm in permutations(&mids) {
            // pi maps old id -> new id.
            let mut pi: Vec<usize> = (0..n).collect();
            for (slot, &old) in perm.iter().enumerate() {
                pi[old] = mids[slot];
            }
            let mut ser = vec![0u8; n * n];
            for a in 0..n {
                for b in 0..n {
                    if let Some(v) = self.table[self.idx(a, b)] {
                        ser[pi[a] * n + pi[b]] = pi[v] as u8 + 1;
                    }
                }
            }
            if best.as_ref().is_none_or(|b| ser < *b) {
                best = Some(ser);
            }
        }
        best.expect("at least the identity permutation")
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

fn element_names(n: usize) -> Vec<String> {
    let mut names = vec!["0".to_string()];
    for i in 0..n.saturating_sub(2) {
        names.push(((b'a' + i as u8) as char).to_string());
    }
    names.push("1".to_string());
    names
}

fn build_pea(n: usize, table: &[Option<usize>]) -> FinitePea {
    let names = element_names(n);
    let mut triples = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if let Some(c) = table[a * n + b] {
                triples.push((names[a].clone(), names[b].clone(), names[c].clone()));
            }
        }
    }
    FinitePea::new(names, "0", "1", &triples).expect("enumerated table is well-formed")
}

fn from_serialization(n: usize, ser: &[u8]) -> FinitePea {
    let table: Vec<Option<usize>> = ser
        .iter()
        .map(|&v| if v == 0 { None } else { Some(v as usize - 1) })
        .collect();
    build_pea(n, &table)
}

/// All pseudo effect algebras with 2..=max_size elements, one representative
/// per isomorphism class, in a deterministic order. Every emitted algebra
/// passes the axiom checker by construction.
pub fn enumerate_peas(max_size: usize) -> Result<Vec<FinitePea>> {
    if max_size > 6 {
        return Err(Error::BudgetExceeded(
            "model enumeration is budgeted to at most 6 elements".into(),
        ));
    }
    let mut out = Vec::new();
    for n in 2..=max_size {
        let mut e = Enumerator::new(n);
        if n == 2 {
            e.run(&[1, 0])?;
        } else {
            let mids: Vec<usize> = (1..n - 1).collect();
            for perm in permutations(&mids) {
                let mut sigma: Vec<usize> = (0..n).collect();
                sigma[0] = n - 1;
                sigma[n - 1] = 0;
                for (&slot, &img) in mids.iter().zip(&perm) {
                    sigma[slot] = img;
                }
                e.run(&sigma)?;
            }
        }
        for ser in &e.found {
            out.push(from_serialization(n, ser));
        }
    }
    Ok(out)
}
