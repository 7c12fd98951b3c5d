//! Textual algebra descriptions.
//!
//! ```text
//! # comments and blank lines are ignored
//! vertices 2
//! arrow <id> <source> <target> <degree>
//! rel <coef> <id> <id> ... [+|- <coef> <id> <id> ...]...
//! ```
//!
//! Relation paths list arrow ids in product order: `rel 1 3 5` is the product
//! `a3·a5`, i.e. arrow 5 followed by arrow 3. Coefficients are integers or
//! fractions `p/q`; the first may carry a sign, later ones are separated by a
//! standalone `+` or `-`. The `vertices` line comes first.

use num::rational::BigRational;
use num::{Signed, Zero};

use super::quiver::{Arrow, Quiver, Relation, RelationSet};
use super::AlgebraError;
use crate::linalg::field::parse_rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDescription {
    pub quiver: Quiver,
    pub relations: RelationSet,
}

fn parse_err(line: usize, msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { line, message: msg.into() }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize, AlgebraError> {
    tok.parse().map_err(|_| parse_err(line, format!("expected {what}, found `{tok}`")))
}

pub fn parse(text: &str) -> Result<AlgebraDescription, AlgebraError> {
    let mut vertices: Option<usize> = None;
    let mut arrows = Vec::new();
    let mut raw_rels: Vec<(usize, Vec<(BigRational, Vec<usize>)>)> = Vec::new();

    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "vertices" => {
                if vertices.is_some() || toks.len() != 2 {
                    return Err(parse_err(lineno, "expected a single `vertices <n>` line"));
                }
                vertices = Some(parse_usize(toks[1], lineno, "a vertex count")?);
            }
            "arrow" => {
                if vertices.is_none() {
                    return Err(parse_err(lineno, "`vertices` must come first"));
                }
                if toks.len() != 5 {
                    return Err(parse_err(lineno, "expected `arrow <id> <source> <target> <degree>`"));
                }
                arrows.push(Arrow {
                    id: parse_usize(toks[1], lineno, "an arrow id")?,
                    source: parse_usize(toks[2], lineno, "a source vertex")?,
                    target: parse_usize(toks[3], lineno, "a target vertex")?,
                    degree: parse_usize(toks[4], lineno, "a degree")?,
                });
            }
            "rel" => raw_rels.push((lineno, parse_relation_terms(&toks[1..], lineno)?)),
            other => return Err(parse_err(lineno, format!("unknown directive `{other}`"))),
        }
    }
    let vertices = vertices.ok_or_else(|| parse_err(0, "missing `vertices` line"))?;
    let quiver = Quiver::new(vertices, arrows)?;
    let mut relations = Vec::new();
    for (lineno, terms) in raw_rels {
        let terms = terms
            .into_iter()
            .map(|(c, ids)| quiver.path(&ids).map(|p| (c, p)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| parse_err(lineno, e.to_string()))?;
        relations.push(Relation::new(terms).map_err(|e| parse_err(lineno, e.to_string()))?);
    }
    Ok(AlgebraDescription { quiver, relations: RelationSet::new(relations) })
}

fn parse_relation_terms(toks: &[&str], line: usize) -> Result<Vec<(BigRational, Vec<usize>)>, AlgebraError> {
    let mut terms = Vec::new();
    let mut i = 0;
    let mut sign_positive = true;
    let mut first = true;
    while i < toks.len() {
        if !first {
            match toks[i] {
                "+" => sign_positive = true,
                "-" => sign_positive = false,
                t => return Err(parse_err(line, format!("expected `+` or `-`, found `{t}`"))),
            }
            i += 1;
        }
        let coef_tok = toks.get(i).ok_or_else(|| parse_err(line, "dangling sign"))?;
        if !first && coef_tok.starts_with(['+', '-']) {
            return Err(parse_err(line, "only the first coefficient may carry a sign"));
        }
        let mut coef =
            parse_rational(coef_tok).ok_or_else(|| parse_err(line, format!("bad coefficient `{coef_tok}`")))?;
        if !sign_positive {
            coef = -coef;
        }
        i += 1;
        let mut ids = Vec::new();
        while i < toks.len() && toks[i] != "+" && toks[i] != "-" {
            ids.push(parse_usize(toks[i], line, "an arrow id")?);
            i += 1;
        }
        if ids.is_empty() {
            return Err(parse_err(line, "a term needs at least one arrow"));
        }
        if coef.is_zero() {
            return Err(parse_err(line, "zero coefficients are not allowed"));
        }
        terms.push((coef, ids));
        first = false;
    }
    if terms.is_empty() {
        return Err(parse_err(line, "empty relation"));
    }
    Ok(terms)
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Canonical text form; `parse(&serialize(d)) == d` and serializing a parsed
/// canonical text reproduces it byte for byte.
pub fn serialize(quiver: &Quiver, relations: &RelationSet) -> String {
    let mut out = format!("vertices {}\n", quiver.vertex_count());
    for a in quiver.arrows() {
        out.push_str(&format!("arrow {} {} {} {}\n", a.id, a.source, a.target, a.degree));
    }
    for r in &relations.relations {
        out.push_str("rel");
        for (k, (c, p)) in r.terms.iter().enumerate() {
            let ids: Vec<String> = p.arrows.iter().map(|a| a.to_string()).collect();
            if k == 0 {
                out.push_str(&format!(" {} {}", fmt_rational(c), ids.join(" ")));
            } else {
                let sign = if c.is_negative() { "-" } else { "+" };
                out.push_str(&format!(" {sign} {} {}", fmt_rational(&c.abs()), ids.join(" ")));
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const COMMUTATIVE: &str = "vertices 1\narrow 0 0 0 1\narrow 1 0 0 1\nrel 1 0 1 - 1 1 0\n";

    #[test]
    fn canonical_round_trip() {
        let d = parse(COMMUTATIVE).unwrap();
        assert_eq!(serialize(&d.quiver, &d.relations), COMMUTATIVE);
        assert_eq!(parse(&serialize(&d.quiver, &d.relations)).unwrap(), d);
    }

    #[test]
    fn fractions_and_comments() {
        let text = "# dual numbers with a twist\nvertices 1\narrow 7 0 0 1\nrel -3/2 7 7\n";
        let d = parse(text).unwrap();
        assert_eq!(serialize(&d.quiver, &d.relations), "vertices 1\narrow 7 0 0 1\nrel -3/2 7 7\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "vertices 1\narrow 0 0 0 1\nrel 1 0 0 + 2\n";
        match parse(bad) {
            Err(AlgebraError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse("arrow 0 0 0 1\n").is_err());
        assert!(parse("vertices 2\narrow 0 0 1 1\narrow 1 0 1 2\nrel 1 0 + 1 1\n").is_err());
    }
}
