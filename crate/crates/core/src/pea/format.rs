//! Line-oriented `pea v1` file format.
//!
//! ```text
//! pea v1
//! elements: <id> <id> ...
//! zero: <id>
//! unit: <id>
//! add: <x> <y> <z>     # one defined triple x+y=z per line
//! ```
//!
//! Unlisted pairs are undefined. Duplicate triples with conflicting results
//! are rejected.

use super::finite::FinitePea;
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<FinitePea> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    match lines.next() {
        Some("pea v1") => {}
        other => {
            return Err(Error::PeaFormat(format!(
                "expected header `pea v1`, found `{}`",
                other.unwrap_or("")
            )))
        }
    }
    let mut elements: Option<Vec<String>> = None;
    let mut zero: Option<String> = None;
    let mut unit: Option<String> = None;
    let mut triples: Vec<(String, String, String)> = Vec::new();
    for line in lines {
        if let Some(rest) = line.strip_prefix("elements:") {
            elements = Some(rest.split_whitespace().map(str::to_string).collect());
        } else if let Some(rest) = line.strip_prefix("zero:") {
            zero = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("unit:") {
            unit = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("add:") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(Error::PeaFormat(format!(
                    "add line needs exactly three ids: `{line}`"
                )));
            }
            triples.push((
                parts[0].to_string(),
                parts[1].to_string(),
                parts[2].to_string(),
            ));
        } else {
            return Err(Error::PeaFormat(format!("unrecognized line `{line}`")));
        }
    }
    let elements = elements.ok_or_else(|| Error::PeaFormat("missing `elements:` line".into()))?;
    let zero = zero.ok_or_else(|| Error::PeaFormat("missing `zero:` line".into()))?;
    let unit = unit.ok_or_else(|| Error::PeaFormat("missing `unit:` line".into()))?;
    FinitePea::new(elements, &zero, &unit, &triples)
}

pub fn render(pea: &FinitePea) -> String {
    let mut out = String::from("pea v1\n");
    out.push_str("elements:");
    for n in pea.names() {
        out.push(' ');
        out.push_str(n);
    }
    out.push('\n');
    out.push_str(&format!("zero: {}\n", pea.name(pea.zero())));
    out.push_str(&format!("unit: {}\n", pea.name(pea.unit())));
    for (a, b, c) in pea.defined_sums() {
        out.push_str(&format!(
            "add: {} {} {}\n",
            pea.name(a),
            pea.name(b),
            pea.name(c)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CHAIN4: &str = "pea v1\n\
        elements: 0 1 2 3\n\
        zero: 0\n\
        unit: 3\n\
        add: 0 0 0\nadd: 0 1 1\nadd: 0 2 2\nadd: 0 3 3\n\
        add: 1 0 1\nadd: 1 1 2\nadd: 1 2 3\n\
        add: 2 0 2\nadd: 2 1 3\n\
        add: 3 0 3\n";

    #[test]
    fn parse_render_round_trip() {
        let pea = parse(CHAIN4).unwrap();
        assert_eq!(pea.len(), 4);
        assert!(pea.check_axioms().is_valid());
        let rendered = render(&pea);
        let back = parse(&rendered).unwrap();
        assert_eq!(back.defined_sums(), pea.defined_sums());
        assert_eq!(render(&back), rendered);
    }

    #[test]
    fn consistent_duplicates_allowed_conflicts_rejected() {
        let dup = format!("{CHAIN4}add: 1 1 2\n");
        assert!(parse(&dup).is_ok());
        let conflict = format!("{CHAIN4}add: 1 1 3\n");
        assert!(parse(&conflict).is_err());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse("pea v2\nelements: a\nzero: a\nunit: a\n").is_err());
        assert!(parse("pea v1\nzero: a\nunit: a\n").is_err());
        assert!(parse("pea v1\nelements: a\nzero: a\nunit: b\n").is_err());
        assert!(parse("pea v1\nelements: a b\nzero: a\nunit: b\nadd: a a\n").is_err());
        assert!(parse("pea v1\nelements: a b\nzero: a\nunit: b\nbogus: x\n").is_err());
    }
}
