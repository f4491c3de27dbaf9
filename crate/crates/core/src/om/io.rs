//! Text input: rational arrangements (`n d` header, then one normal per line)
//! and covector lists (one sign string per line).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::arrangement::Arrangement;
use super::matroid::OrientedMatroid;
use super::sign::SignVector;

/// A parsed input together with its realization when one was given.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub matroid: OrientedMatroid,
    pub arrangement: Option<Arrangement>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

fn is_sign_line(l: &str) -> bool {
    l.chars().all(|c| matches!(c, '+' | '-' | '0'))
}

pub fn parse_rational(token: &str, line: usize) -> Result<BigRational> {
    let (num, den) = match token.split_once('/') {
        Some((p, q)) => (p, q),
        None => (token, "1"),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| parse_err(line, format!("invalid number {token:?}")))?;
    let q: BigInt = den
        .parse()
        .map_err(|_| parse_err(line, format!("invalid number {token:?}")))?;
    if q.is_zero() {
        return Err(parse_err(line, format!("zero denominator in {token:?}")));
    }
    Ok(BigRational::new(p, q))
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let lines = content_lines(text);
    let Some(&(hl, header)) = lines.first() else {
        return Err(parse_err(1, "empty input"));
    };
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(parse_err(hl, "expected header \"n d\""));
    }
    let n: usize = head[0]
        .parse()
        .map_err(|_| parse_err(hl, format!("invalid count {:?}", head[0])))?;
    let d: usize = head[1]
        .parse()
        .map_err(|_| parse_err(hl, format!("invalid dimension {:?}", head[1])))?;
    let body = &lines[1..];
    if body.len() != n {
        let at = body.get(n).map_or(hl + body.len(), |(l, _)| *l);
        return Err(parse_err(
            at,
            format!("expected {n} normal vectors, found {}", body.len()),
        ));
    }
    let mut normals = Vec::with_capacity(n);
    for &(ln, l) in body {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        if tokens.len() != d {
            return Err(parse_err(
                ln,
                format!("expected {d} entries, found {}", tokens.len()),
            ));
        }
        let v = tokens
            .iter()
            .map(|t| parse_rational(t, ln))
            .collect::<Result<Vec<_>>>()?;
        if v.iter().all(Zero::is_zero) {
            return Err(parse_err(ln, "zero normal vector"));
        }
        normals.push(v);
    }
    Arrangement::new(d, normals)
}

pub fn parse_covectors(text: &str) -> Result<OrientedMatroid> {
    let lines = content_lines(text);
    let Some(&(_, first)) = lines.first() else {
        return Err(parse_err(1, "empty input"));
    };
    let n = first.chars().count();
    let mut list = Vec::with_capacity(lines.len());
    for &(ln, l) in &lines {
        if !is_sign_line(l) {
            return Err(parse_err(ln, format!("not a sign vector: {l:?}")));
        }
        if l.chars().count() != n {
            return Err(parse_err(
                ln,
                format!("expected length {n}, found {}", l.len()),
            ));
        }
        list.push(SignVector::parse(l).map_err(|e| parse_err(ln, e.to_string()))?);
    }
    OrientedMatroid::from_covectors(n, list)
}

/// Detects the format: a file whose lines are all sign strings is a covector list.
pub fn parse_input(text: &str) -> Result<Parsed> {
    let lines = content_lines(text);
    if lines.is_empty() {
        return Err(parse_err(1, "empty input"));
    }
    if lines.iter().all(|(_, l)| is_sign_line(l)) {
        Ok(Parsed {
            matroid: parse_covectors(text)?,
            arrangement: None,
        })
    } else {
        let arrangement = parse_arrangement(text)?;
        Ok(Parsed {
            matroid: arrangement.oriented_matroid()?,
            arrangement: Some(arrangement),
        })
    }
}
