use std::fmt;

/// A value in a concrete group carrier.
///
/// Elements are plain data; which operations apply to them is decided by the
/// group they are used with. Using an element with a group whose carrier does
/// not match its shape is a `CarrierMismatch` error, never a silent coercion.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Element {
    /// Integer vector of fixed rank (rank 1 is the integers).
    IntVec(Vec<i64>),
    /// Pair in a lexicographic product carrier.
    LexPair(Box<Element>, Box<Element>),
    /// Element id within a finite builtin group.
    Finite(u8),
    /// Upper unitriangular 3x3 integer matrix, stored as the strictly
    /// upper entries (a, b, c) for rows (1 a c / 0 1 b / 0 0 1).
    Tri(i64, i64, i64),
}

impl Element {
    pub fn int(n: i64) -> Element {
        Element::IntVec(vec![n])
    }

    pub fn vec(v: &[i64]) -> Element {
        Element::IntVec(v.to_vec())
    }

    pub fn pair(left: Element, right: Element) -> Element {
        Element::LexPair(Box::new(left), Box::new(right))
    }

    pub fn tri(a: i64, b: i64, c: i64) -> Element {
        Element::Tri(a, b, c)
    }

    /// The integer value of a rank-1 vector, if this is one.
    pub fn as_int(&self) -> Option<i64> {
        match self {
            Element::IntVec(v) if v.len() == 1 => Some(v[0]),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Element, &Element)> {
        match self {
            Element::LexPair(l, r) => Some((l, r)),
            _ => None,
        }
    }

    /// All integer entries of the element, in a fixed traversal order.
    /// Finite-group labels contribute nothing.
    pub fn int_entries(&self) -> Vec<i64> {
        let mut out = Vec::new();
        self.collect_entries(&mut out);
        out
    }

    fn collect_entries(&self, out: &mut Vec<i64>) {
        match self {
            Element::IntVec(v) => out.extend_from_slice(v),
            Element::LexPair(l, r) => {
                l.collect_entries(out);
                r.collect_entries(out);
            }
            Element::Finite(_) => {}
            Element::Tri(a, b, c) => out.extend_from_slice(&[*a, *b, *c]),
        }
    }
}

impl fmt::Display for Element {
    /// Display without group context: tuples in parentheses, finite labels
    /// as `#id`. Groups render their own elements with proper names via
    /// `PoGroup::format_element`; this impl is a debugging fallback.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::IntVec(v) if v.len() == 1 => write!(f, "{}", v[0]),
            Element::IntVec(v) => {
                write!(f, "(")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Element::LexPair(l, r) => write!(f, "({l},{r})"),
            Element::Finite(id) => write!(f, "#{id}"),
            Element::Tri(a, b, c) => write!(f, "({a},{b},{c})"),
        }
    }
}
