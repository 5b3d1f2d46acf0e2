//! Text and JSON input formats.
//!
//! Text files hold a ring line and an ideal line:
//!
//! ```text
//! ring n=4 char=2
//! ideal: x1^2, x2^4
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. Polynomial ideals use
//! the same layout with generators such as `x1^2 - 3/2*x2*x3`. The JSON form
//! of a monomial ideal is `{"n":4,"char":0,"generators":[[2,0,0,0],[0,4,0,0]]}`.

use num::{BigInt, BigRational, One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groebner::{RationalPoly, RationalPolyIdeal};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};

/// Character cursor that reports 1-based columns.
struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    /// Column of `chars[0]` in the source line.
    offset: usize,
}

impl Cursor {
    fn new(src: &str, line: usize, offset: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line,
            offset,
        }
    }

    fn column(&self) -> usize {
        self.offset + self.pos
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.column(), message)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn unsigned(&mut self, what: &str) -> Result<u64> {
        if self.peek() == Some('-') {
            return Err(self.error(format!("negative {what}")));
        }
        let col = self.column();
        let d = self.digits().ok_or_else(|| self.error(format!("expected {what}")))?;
        d.parse()
            .map_err(|_| Error::parse(self.line, col, format!("{what} {d} is too large")))
    }

    /// `x<i>[^<e>]`, returning `(index, exponent)`.
    fn factor(&mut self, n: usize) -> Result<(usize, u32)> {
        if !self.eat('x') {
            return Err(self.error("expected a variable like x1"));
        }
        let col = self.column();
        let i = self.unsigned("variable index")? as usize;
        if i == 0 || i > n {
            return Err(Error::parse(
                self.line,
                col,
                format!("variable index {i} out of range 1..={n}"),
            ));
        }
        let mut e = 1u32;
        if self.eat('^') {
            let col = self.column();
            let v = self.unsigned("exponent")?;
            e = u32::try_from(v).map_err(|_| Error::parse(self.line, col, "exponent too large"))?;
        }
        Ok((i, e))
    }

    /// A product of factors, or the literal `1`.
    fn monomial(&mut self, n: usize) -> Result<Monomial> {
        let mut exps = vec![0u32; n];
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(Monomial::new(exps));
        }
        loop {
            let (i, e) = self.factor(n)?;
            exps[i - 1] += e;
            if !self.eat('*') {
                break;
            }
        }
        Ok(Monomial::new(exps))
    }

    fn coefficient(&mut self) -> Result<BigRational> {
        let num = self.digits().ok_or_else(|| self.error("expected a coefficient"))?;
        let mut value = BigRational::from_integer(num.parse::<BigInt>().expect("digits"));
        if self.eat('/') {
            let col = self.column();
            let den = self.digits().ok_or_else(|| self.error("expected a denominator"))?;
            let den: BigInt = den.parse().expect("digits");
            if den.is_zero() {
                return Err(Error::parse(self.line, col, "zero denominator"));
            }
            value /= BigRational::from_integer(den);
        }
        Ok(value)
    }

    fn polynomial(&mut self, n: usize) -> Result<RationalPoly> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let mut sign = BigRational::one();
            if self.eat('-') {
                sign = -sign;
            } else if !first && !self.eat('+') {
                break;
            }
            first = false;
            let coeff = match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let c = self.coefficient()?;
                    if self.eat('*') {
                        Some(c)
                    } else {
                        terms.push((Monomial::one(n), sign * c));
                        continue;
                    }
                }
                _ => None,
            };
            let mut exps = vec![0u32; n];
            loop {
                let (i, e) = self.factor(n)?;
                exps[i - 1] += e;
                if !self.eat('*') {
                    break;
                }
            }
            terms.push((Monomial::new(exps), sign * coeff.unwrap_or_else(BigRational::one)));
        }
        Ok(RationalPoly::from_terms(n, terms))
    }
}

/// Splits on commas, keeping the starting column of each piece.
fn split_list(body: &str, base: usize) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (k, c) in body.char_indices() {
        if c == ',' {
            out.push((&body[start..k], base + body[..start].chars().count()));
            start = k + 1;
        }
    }
    out.push((&body[start..], base + body[..start].chars().count()));
    out
}

fn content_lines(src: &str) -> Vec<(usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .collect()
}

fn key_value(line: usize, l: &str, key: &str) -> Result<(u64, usize)> {
    let pat = format!("{key}=");
    let at = l
        .find(&pat)
        .ok_or_else(|| Error::parse(line, 1, format!("missing `{key}=` on the ring line")))?;
    let col = l[..at + pat.len()].chars().count() + 1;
    let rest = &l[at + pat.len()..];
    let mut c = Cursor::new(rest, line, col);
    Ok((c.unsigned(key)?, col))
}

/// Parses `ring n=<int> char=<0|p>`.
pub fn parse_ring_line(line: usize, l: &str) -> Result<RingContext> {
    let trimmed = l.trim_start();
    if !trimmed.starts_with("ring") {
        return Err(Error::parse(line, 1, "expected `ring n=<int> char=<0|p>`"));
    }
    let (n, ncol) = key_value(line, l, "n")?;
    let (ch, ccol) = if l.contains("char=") { key_value(line, l, "char")? } else { (0, ncol) };
    let col = if n == 0 { ncol } else { ccol };
    RingContext::new(n as usize, ch).map_err(|e| match e {
        Error::InvalidContext(msg) => Error::parse(line, col, msg),
        other => other,
    })
}

fn ideal_body<'s>(lines: &[(usize, &'s str)]) -> Result<(usize, &'s str, usize)> {
    let (line, l) = *lines
        .get(1)
        .ok_or_else(|| Error::parse(lines.first().map_or(1, |x| x.0 + 1), 1, "missing `ideal:` line"))?;
    let at = l
        .find("ideal:")
        .ok_or_else(|| Error::parse(line, 1, "expected `ideal: m1, m2, ...`"))?;
    if let Some(&(extra, _)) = lines.get(2) {
        return Err(Error::parse(extra, 1, "unexpected content after the ideal line"));
    }
    let start = at + "ideal:".len();
    Ok((line, &l[start..], l[..start].chars().count() + 1))
}

/// Parses one monomial written like `x1^2*x3`.
pub fn parse_monomial(src: &str, n: usize) -> Result<Monomial> {
    let mut c = Cursor::new(src, 1, 1);
    let m = c.monomial(n)?;
    if !c.at_end() {
        return Err(c.error("unexpected trailing input"));
    }
    Ok(m)
}

/// Parses a polynomial written like `x1^2 - 3/2*x2*x3`.
pub fn parse_polynomial(src: &str, n: usize) -> Result<RationalPoly> {
    parse_polynomial_at(src, n, 1, 1)
}

fn parse_polynomial_at(src: &str, n: usize, line: usize, col: usize) -> Result<RationalPoly> {
    let mut c = Cursor::new(src, line, col);
    let p = c.polynomial(n)?;
    if !c.at_end() {
        return Err(c.error("unexpected input in polynomial"));
    }
    Ok(p)
}

fn parse_monomial_text(src: &str) -> Result<MonomialIdeal> {
    let lines = content_lines(src);
    let (l1, ring) = *lines.first().ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    let ctx = parse_ring_line(l1, ring)?;
    let (line, body, col) = ideal_body(&lines)?;
    let mut gens = Vec::new();
    if !body.trim().is_empty() {
        for (piece, pcol) in split_list(body, col) {
            let mut c = Cursor::new(piece, line, pcol);
            let m = c.monomial(ctx.n())?;
            if !c.at_end() {
                return Err(c.error("expected `,` between generators"));
            }
            gens.push(m);
        }
    }
    MonomialIdeal::minimalize(gens, ctx)
}

/// Finds the position of the `k`-th inner array of `"generators"` in raw JSON.
fn locate_generator(src: &str, k: usize) -> (usize, usize) {
    let Some(key) = src.find("\"generators\"") else {
        return (1, 1);
    };
    let mut depth = 0;
    let mut seen = 0;
    for (off, c) in src[key..].char_indices() {
        match c {
            '[' => {
                depth += 1;
                if depth == 2 {
                    if seen == k {
                        let at = key + off;
                        let line = src[..at].matches('\n').count() + 1;
                        let col = src[..at].rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
                        return (line, col);
                    }
                    seen += 1;
                }
            }
            ']' => {
                depth -= 1;
                if depth == 0 {
                    break;
                }
            }
            _ => {}
        }
    }
    (1, 1)
}

/// Parses `{"n":4,"char":0,"generators":[[2,0,1,0],...]}`.
pub fn parse_ideal_json(src: &str) -> Result<MonomialIdeal> {
    let v: Value = serde_json::from_str(src).map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    let field = |name: &str| v.get(name);
    let n = field("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::parse(1, 1, "`n` must be a positive integer"))?;
    let ch = match field("char") {
        None => 0,
        Some(c) => c
            .as_u64()
            .ok_or_else(|| Error::parse(1, 1, "`char` must be 0 or a prime"))?,
    };
    let ctx = RingContext::new(n as usize, ch).map_err(|e| match e {
        Error::InvalidContext(msg) => Error::parse(1, 1, msg),
        other => other,
    })?;
    let gens = field("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse(1, 1, "`generators` must be a list of exponent vectors"))?;
    let mut out = Vec::with_capacity(gens.len());
    for (k, g) in gens.iter().enumerate() {
        let (line, col) = locate_generator(src, k);
        let entries = g
            .as_array()
            .ok_or_else(|| Error::parse(line, col, "a generator must be a list of exponents"))?;
        if entries.len() != ctx.n() {
            return Err(Error::parse(
                line,
                col,
                format!("generator has {} exponents, expected {}", entries.len(), ctx.n()),
            ));
        }
        let mut exps = Vec::with_capacity(entries.len());
        for e in entries {
            match e.as_i64() {
                Some(x) if x < 0 => return Err(Error::parse(line, col, format!("negative exponent {x}"))),
                Some(x) if x <= u32::MAX as i64 => exps.push(x as u32),
                _ => return Err(Error::parse(line, col, "exponents must be non-negative integers")),
            }
        }
        out.push(Monomial::new(exps));
    }
    MonomialIdeal::minimalize(out, ctx)
}

/// Parses a monomial ideal in either format; JSON is recognised by a leading `{`.
pub fn parse_ideal(src: &str) -> Result<MonomialIdeal> {
    if src.trim_start().starts_with('{') {
        parse_ideal_json(src)
    } else {
        parse_monomial_text(src)
    }
}

/// Parses a polynomial ideal in the text layout; `char` must be 0.
pub fn parse_poly_ideal(src: &str) -> Result<RationalPolyIdeal> {
    if src.trim_start().starts_with('{') {
        return Ok(RationalPolyIdeal::from_monomial_ideal(&parse_ideal_json(src)?));
    }
    let lines = content_lines(src);
    let (l1, ring) = *lines.first().ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    let ctx = parse_ring_line(l1, ring)?;
    let (line, body, col) = ideal_body(&lines)?;
    let mut gens = Vec::new();
    if !body.trim().is_empty() {
        for (piece, pcol) in split_list(body, col) {
            let p = parse_polynomial_at(piece, ctx.n(), line, pcol)?;
            if p.is_zero() {
                continue;
            }
            if p.homogeneous_degree().is_none() {
                return Err(Error::parse(line, pcol, format!("{} is not homogeneous", piece.trim())));
            }
            gens.push(p);
        }
    }
    RationalPolyIdeal::new(ctx, gens)
}

/// The text form accepted by [`parse_ideal`].
pub fn ideal_to_text(ideal: &MonomialIdeal) -> String {
    let gens: Vec<String> = ideal.generators().iter().map(ToString::to_string).collect();
    format!(
        "ring n={} char={}\nideal: {}\n",
        ideal.n(),
        ideal.context().char_marker(),
        gens.join(", ")
    )
}

/// The JSON form accepted by [`parse_ideal`].
pub fn ideal_to_json(ideal: &MonomialIdeal) -> Value {
    json!({
        "n": ideal.n(),
        "char": ideal.context().char_marker(),
        "generators": ideal.generators().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>(),
    })
}

/// Parses a comma-separated list of 1-based indices such as `2,3,4`.
pub fn parse_index_list(src: &str) -> Result<Vec<usize>> {
    split_list(src, 1)
        .into_iter()
        .map(|(piece, col)| {
            let mut c = Cursor::new(piece, 1, col);
            let v = c.unsigned("index")?;
            if !c.at_end() {
                return Err(c.error("expected `,`"));
            }
            Ok(v as usize)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let src = "ring n=4 char=2\nideal: x1^2, x2^4\n";
        let i = parse_ideal(src).unwrap();
        assert_eq!(i.context().char_marker(), 2);
        assert_eq!(i.generators().len(), 2);
        assert_eq!(parse_ideal(&ideal_to_text(&i)).unwrap(), i);
        let j = parse_ideal(&ideal_to_json(&i).to_string()).unwrap();
        assert_eq!(j, i);
    }

    #[test]
    fn comments_and_products() {
        let src = "# conic\n\nring n=3 char=0\nideal: x1*x2*x1, x3^2 * x2\n";
        let i = parse_ideal(src).unwrap();
        assert!(i.generators().contains(&Monomial::new(vec![2, 1, 0])));
        assert!(i.generators().contains(&Monomial::new(vec![0, 1, 2])));
    }

    #[test]
    fn diagnostics_carry_positions() {
        assert_eq!(
            parse_ideal("ring n=2 char=0\nideal: x1^2, x3"),
            Err(Error::Parse {
                line: 2,
                column: 15,
                message: "variable index 3 out of range 1..=2".into()
            })
        );
        match parse_ideal("ring n=2 char=0\nideal: x1^-2") {
            Err(Error::Parse { line: 2, column: 11, message }) => assert!(message.contains("negative")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_ideal("ring n=2 char=4\nideal: x1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_ideal("ring n=2\n"), Err(Error::Parse { .. })));
        assert_eq!(parse_ideal("ring n=2 char=0\nideal: 1"), Err(Error::ImproperIdeal));
    }

    #[test]
    fn json_diagnostics() {
        let src = "{\"n\": 2, \"char\": 0,\n \"generators\": [[1, 0],\n   [0, -1]]}";
        match parse_ideal(src) {
            Err(Error::Parse { line: 3, column: 4, message }) => assert!(message.contains("negative")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_ideal("{\"n\": 2, \"generators\": [[1, 0, 0]]}"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_ideal("{\"n\": 2,"), Err(Error::Parse { .. })));
    }

    #[test]
    fn zero_ideal_text() {
        let i = parse_ideal("ring n=3 char=0\nideal:\n").unwrap();
        assert!(i.is_zero());
    }

    #[test]
    fn polynomials() {
        let p = parse_polynomial("x1^2 - 3/2*x2*x3", 3).unwrap();
        assert_eq!(p.to_string(), "x1^2 - 3/2*x2*x3");
        let q = parse_polynomial("-x1 + 2*x2 - x1", 2).unwrap();
        assert_eq!(q.to_string(), "-2*x1 + 2*x2");
        assert!(parse_polynomial("x1 +", 2).is_err());
        assert!(parse_polynomial("1/0*x1", 2).is_err());
        let i = parse_poly_ideal("ring n=2 char=0\nideal: x1^2 - x2^2, x1*x2").unwrap();
        assert_eq!(i.generators().len(), 2);
        assert!(matches!(
            parse_poly_ideal("ring n=2 char=0\nideal: x1^2 - x2"),
            Err(Error::Parse { line: 2, column: 7, .. })
        ));
    }

    #[test]
    fn index_lists() {
        assert_eq!(parse_index_list("2,3, 4").unwrap(), vec![2, 3, 4]);
        assert!(parse_index_list("2,,3").is_err());
    }
}
