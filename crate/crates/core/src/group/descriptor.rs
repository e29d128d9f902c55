//! Group descriptor strings:
//! `Z`, `Z^k:product`, `Z^2:cone=ex2.9`, `Z^2:cone=ex2.10`,
//! `Z^k:cone={<formula>}`, `heis`, `finite:S3`, `finite:C<k>`,
//! and `lex(<desc>,<desc>)`.

use super::{ConeSpec, PoGroup};
use crate::error::{Error, Result};

pub fn parse_group(desc: &str) -> Result<PoGroup> {
    let d = desc.trim();
    if d == "Z" {
        return PoGroup::int_vec(1);
    }
    if d == "heis" {
        return Ok(PoGroup::heisenberg());
    }
    if let Some(rest) = d.strip_prefix("finite:") {
        if rest == "S3" {
            return Ok(PoGroup::s3());
        }
        if let Some(k) = rest.strip_prefix('C') {
            let k: u8 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad cyclic order in `{d}`")))?;
            return PoGroup::cyclic(k);
        }
        return Err(Error::Parse(format!("unknown finite group `{rest}`")));
    }
    if let Some(rest) = d.strip_prefix("lex(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parens in `{d}`")))?;
        let (left, right) = split_lex_args(inner)?;
        return Ok(PoGroup::lex(parse_group(left)?, parse_group(right)?));
    }
    if let Some(rest) = d.strip_prefix("Z^") {
        let (rank_str, cone_str) = match rest.find(':') {
            Some(pos) => (&rest[..pos], Some(&rest[pos + 1..])),
            None => (rest, None),
        };
        let rank: usize = rank_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in `{d}`")))?;
        return match cone_str {
            None | Some("product") => PoGroup::int_vec(rank),
            Some(c) => {
                let body = c
                    .strip_prefix("cone=")
                    .ok_or_else(|| Error::Parse(format!("expected `cone=...` in `{d}`")))?;
                match body {
                    "ex2.9" => {
                        if rank != 2 {
                            return Err(Error::Parse("cone ex2.9 requires rank 2".into()));
                        }
                        Ok(PoGroup::cone_ex29())
                    }
                    "ex2.10" => {
                        if rank != 2 {
                            return Err(Error::Parse("cone ex2.10 requires rank 2".into()));
                        }
                        Ok(PoGroup::cone_ex210())
                    }
                    formula => {
                        let formula = formula
                            .strip_prefix('{')
                            .and_then(|f| f.strip_suffix('}'))
                            .ok_or_else(|| {
                                Error::Parse(
                                    "custom cone formulas are written `cone={...}`".into(),
                                )
                            })?;
                        PoGroup::custom_cone(rank, ConeSpec::parse(rank, formula)?)
                    }
                }
            }
        };
    }
    Err(Error::Parse(format!("unknown group descriptor `{d}`")))
}

/// Splits `a,b` at the top-level comma, respecting nested `lex(...)`.
fn split_lex_args(inner: &str) -> Result<(&str, &str)> {
    let mut depth = 0usize;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced parens in `{inner}`")))?
            }
            ',' if depth == 0 => return Ok((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    Err(Error::Parse(format!(
        "lex(...) needs two comma-separated factors: `{inner}`"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_builtins() {
        for d in [
            "Z",
            "Z^2:product",
            "Z^3:product",
            "Z^2:cone=ex2.9",
            "Z^2:cone=ex2.10",
            "heis",
            "finite:S3",
            "finite:C4",
            "lex(Z,finite:S3)",
            "lex(Z,lex(Z,Z))",
            "lex(Z,Z^2:product)",
        ] {
            let g = parse_group(d).unwrap();
            // Round trip through the canonical description.
            parse_group(g.describe()).unwrap();
        }
    }

    #[test]
    fn parses_custom_cone() {
        let g = parse_group("Z^2:cone={x1>=0&x2>=0|x1+x2>=2}").unwrap();
        assert!(g.in_cone(&crate::element::Element::vec(&[5, -3])).unwrap());
        assert!(!g.caps().directed);
    }

    #[test]
    fn rejects_bad_descriptors() {
        assert!(parse_group("Q").is_err());
        assert!(parse_group("Z^0").is_err());
        assert!(parse_group("finite:A5").is_err());
        assert!(parse_group("lex(Z)").is_err());
        assert!(parse_group("Z^2:cone=x1>=0").is_err());
    }
}
