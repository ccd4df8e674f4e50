//! Text formats for ideals and ring maps.
//!
//! An ideal file is a header of `key: value` lines followed by one
//! generator per line:
//!
//! ```text
//! # comments and blank lines are ignored
//! vars: x, y, z
//! field: fp:32003
//! order: grevlex
//! grading: 3 4 5
//! x^3 - y*z
//! y^2 - x*z
//! ```
//!
//! Only `vars` is required. `grading` may repeat, one row per line. A map
//! file declares `source` and `target` variable lists, optional `relation`
//! lines (polynomials in the target), and one `name -> image` line per
//! source variable.

use std::collections::HashMap;

use spreadsplit::{
    Error, Field, FieldSpec, Ideal, Multigrading, PolyRing, Polynomial, RingMap, RingRef, TermOrder,
};

/// A parsed header plus the raw generator lines, before the field is fixed.
#[derive(Clone, Debug, Default)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub field: Option<FieldSpec>,
    pub order: Option<TermOrder>,
    pub grading: Vec<Vec<i64>>,
    /// `(line number, text)`.
    pub body: Vec<(usize, String)>,
}

#[derive(Clone, Debug, Default)]
pub struct MapFile {
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub field: Option<FieldSpec>,
    pub order: Option<TermOrder>,
    pub relations: Vec<(usize, String)>,
    pub images: Vec<(usize, String, String)>,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn split_list(s: &str) -> Vec<String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect()
}

/// Splits `key: value`, returning `None` for lines without a header key.
fn header(line: &str) -> Option<(&str, &str)> {
    let (k, v) = line.split_once(':')?;
    let k = k.trim();
    if !k.is_empty() && k.chars().all(|c| c.is_ascii_alphabetic()) {
        Some((k, v.trim()))
    } else {
        None
    }
}

fn meaningful(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_field(n: usize, v: &str) -> Result<FieldSpec, Error> {
    v.parse().map_err(|e: Error| parse_error(n, 1, e.to_string()))
}

fn parse_order(n: usize, v: &str) -> Result<TermOrder, Error> {
    v.parse().map_err(|e: Error| parse_error(n, 1, e.to_string()))
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut out = IdealFile::default();
        for (n, line) in meaningful(text) {
            match header(line) {
                Some(("vars", v)) => out.vars = split_list(v),
                Some(("field", v)) => out.field = Some(parse_field(n, v)?),
                Some(("order", v)) => out.order = Some(parse_order(n, v)?),
                Some(("grading", v)) => {
                    let row = split_list(v)
                        .iter()
                        .map(|w| w.parse::<i64>().map_err(|_| parse_error(n, 1, format!("bad weight `{w}`"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    out.grading.push(row);
                }
                Some((k, _)) => return Err(parse_error(n, 1, format!("unknown header `{k}`"))),
                None => out.body.push((n, line.to_string())),
            }
        }
        if out.vars.is_empty() {
            return Err(parse_error(1, 1, "missing `vars:` header"));
        }
        Ok(out)
    }

    /// Builds the ring and parses the generators. Command-line choices of
    /// field and order take precedence over the header.
    pub fn build<F: Field>(&self, field: F, order: Option<&TermOrder>) -> Result<Ideal<F>, Error> {
        let order = order.cloned().or_else(|| self.order.clone()).unwrap_or(TermOrder::GrevLex);
        let ring = if self.grading.is_empty() {
            PolyRing::new(&self.vars, field, order)?
        } else {
            PolyRing::with_grading(&self.vars, field, order, Multigrading::new(self.grading.clone())?)?
        };
        let gens = parse_lines(&ring, &self.body)?;
        Ideal::new(&ring, gens)
    }
}

/// Parses each line, moving error positions to file lines.
pub fn parse_lines<F: Field>(ring: &RingRef<F>, lines: &[(usize, String)]) -> Result<Vec<Polynomial<F>>, Error> {
    lines
        .iter()
        .map(|(n, text)| {
            spreadsplit::parse_polynomial(ring, text).map_err(|e| match e {
                Error::Parse { column, message, .. } => parse_error(*n, column, message),
                Error::UnknownVariable(v) => parse_error(*n, 1, format!("unknown variable `{v}`")),
                other => other,
            })
        })
        .collect()
}

/// The ideal file for `ideal`; parsing it back yields the same generators.
pub fn render_ideal<F: Field>(ideal: &Ideal<F>) -> String {
    let ring = ideal.ring();
    let mut s = format!("vars: {}\n", ring.vars().join(", "));
    s.push_str(&format!("field: {}\n", ring.field().spec()));
    if matches!(ring.order(), TermOrder::Lex | TermOrder::GrevLex) {
        s.push_str(&format!("order: {}\n", ring.order()));
    }
    if let Some(g) = ring.grading() {
        for row in g.weights() {
            let w: Vec<String> = row.iter().map(i64::to_string).collect();
            s.push_str(&format!("grading: {}\n", w.join(" ")));
        }
    }
    for g in ideal.generators() {
        s.push_str(&format!("{g}\n"));
    }
    s
}

impl MapFile {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut out = MapFile::default();
        for (n, line) in meaningful(text) {
            if let Some((lhs, rhs)) = line.split_once("->") {
                out.images.push((n, lhs.trim().to_string(), rhs.trim().to_string()));
                continue;
            }
            match header(line) {
                Some(("source", v)) => out.source = split_list(v),
                Some(("target", v)) => out.target = split_list(v),
                Some(("field", v)) => out.field = Some(parse_field(n, v)?),
                Some(("order", v)) => out.order = Some(parse_order(n, v)?),
                Some(("relation", v)) => out.relations.push((n, v.to_string())),
                Some((k, _)) => return Err(parse_error(n, 1, format!("unknown header `{k}`"))),
                None => return Err(parse_error(n, 1, "expected `name -> image` or a header")),
            }
        }
        if out.source.is_empty() || out.target.is_empty() {
            return Err(parse_error(1, 1, "missing `source:` or `target:` header"));
        }
        Ok(out)
    }

    /// Source variables without an image line map to the target variable of
    /// the same name.
    pub fn build<F: Field>(&self, field: F, order: Option<&TermOrder>) -> Result<RingMap<F>, Error> {
        let order = order.cloned().or_else(|| self.order.clone()).unwrap_or(TermOrder::GrevLex);
        let source = PolyRing::new(&self.source, field.clone(), order.clone())?;
        let target = PolyRing::new(&self.target, field, order)?;
        let mut given: HashMap<&str, (usize, &str)> = HashMap::new();
        for (n, name, img) in &self.images {
            source.var_index(name).map_err(|_| parse_error(*n, 1, format!("`{name}` is not a source variable")))?;
            if given.insert(name.as_str(), (*n, img.as_str())).is_some() {
                return Err(parse_error(*n, 1, format!("second image for `{name}`")));
            }
        }
        let mut images = Vec::with_capacity(self.source.len());
        for name in &self.source {
            let line = match given.get(name.as_str()) {
                Some(&(n, img)) => (n, img.to_string()),
                None => {
                    target
                        .var_index(name)
                        .map_err(|_| parse_error(1, 1, format!("no image for `{name}`")))?;
                    (0, name.clone())
                }
            };
            images.extend(parse_lines(&target, &[line])?);
        }
        let relations = parse_lines(&target, &self.relations)?;
        RingMap::new(&source, &target, images, relations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use spreadsplit::{PrimeField, Rationals};

    #[test]
    fn ideal_file_round_trip() {
        let text = "# toric\nvars: x y z\ngrading: 3 4 5\nx^3 - y*z\ny^2 - x*z\nz^2 - x^2*y\n0\n";
        let i = IdealFile::parse(text).unwrap().build(Rationals, None).unwrap();
        let again = IdealFile::parse(&render_ideal(&i)).unwrap().build(Rationals, None).unwrap();
        assert_eq!(i.generators(), again.generators());
        assert_eq!(again.generators().len(), 4);
        assert!(again.ring().grading().is_some());
    }

    #[test]
    fn errors_carry_file_lines() {
        let text = "vars: x, y\nx + y\nx + w\n";
        let err = IdealFile::parse(text).unwrap().build(PrimeField::default(), None).unwrap_err();
        assert_eq!(err.to_string(), "3:1: unknown variable `w`");
        let err = IdealFile::parse("vars: x\nx +* 1\n").unwrap().build(Rationals, None).unwrap_err();
        assert!(err.to_string().starts_with("2:"), "{err}");
        assert!(IdealFile::parse("x + y\n").is_err());
        assert!(IdealFile::parse("vars: x\ncolour: red\n").is_err());
    }

    #[test]
    fn map_file_defaults_to_identity() {
        let text = "source: x, y, z\ntarget: t, z\nx -> t^3\ny -> t^4\n";
        let m = MapFile::parse(text).unwrap().build(Rationals, None).unwrap();
        assert_eq!(m.images()[2].to_string(), "z");
        assert!(MapFile::parse("source: x\ntarget: t\nw -> t\n").unwrap().build(Rationals, None).is_err());
    }
}
