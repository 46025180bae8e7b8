//! Parsers for exact grids (`dyadic:[-1,0):9`, `0,1/2,1`) and integer
//! ranges (`4`, `2..=8`, `1..5`, `1,3,5`).

use dualroots_core::polycore::rational::{int, parse_rational};
use dualroots_core::{Error, Rational, Result};

fn bad(input: &str, reason: &str) -> Error {
    Error::Domain(format!("bad grid `{input}`: {reason}"))
}

/// A uniform grid spec `dyadic:[lo,hi]:N` takes `N` equally spaced points
/// including both ends; a `(` or `)` drops that end. Anything else is a
/// comma-separated list of exact rationals.
pub fn parse_grid(input: &str) -> Result<Vec<Rational>> {
    let s = input.trim();
    let points = match s.strip_prefix("dyadic:") {
        Some(spec) => uniform(input, spec)?,
        None => s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?,
    };
    if points.is_empty() {
        return Err(bad(input, "grid is empty"));
    }
    Ok(points)
}

fn uniform(input: &str, spec: &str) -> Result<Vec<Rational>> {
    let open_lo = match spec.chars().next() {
        Some('[') => false,
        Some('(') => true,
        _ => return Err(bad(input, "expected `[` or `(`")),
    };
    let close = spec
        .find([']', ')'])
        .ok_or_else(|| bad(input, "expected `]` or `)`"))?;
    let open_hi = &spec[close..close + 1] == ")";
    let (lo, hi) = spec[1..close]
        .split_once(',')
        .ok_or_else(|| bad(input, "expected `lo,hi`"))?;
    let (lo, hi) = (parse_rational(lo)?, parse_rational(hi)?);
    let count: u32 = spec[close + 1..]
        .strip_prefix(':')
        .ok_or_else(|| bad(input, "expected `:N` after the interval"))?
        .trim()
        .parse()
        .map_err(|_| bad(input, "point count must be a positive integer"))?;
    if lo >= hi {
        return Err(bad(input, "need lo < hi"));
    }
    if count < 2 {
        return Err(bad(input, "need at least 2 points"));
    }
    let step = (&hi - &lo) / int(count as i64 - 1);
    let mut out = Vec::new();
    for k in 0..count {
        if (k == 0 && open_lo) || (k == count - 1 && open_hi) {
            continue;
        }
        out.push(&lo + &step * int(k as i64));
    }
    Ok(out)
}

/// `4`, `2..=8` (inclusive), `1..5` (exclusive), or `1,3,5`.
pub fn parse_range(input: &str) -> Result<Vec<u32>> {
    let s = input.trim();
    let num = |t: &str| -> Result<u32> {
        t.trim()
            .parse()
            .map_err(|_| Error::Domain(format!("bad integer range `{input}`")))
    };
    let out: Vec<u32> = if let Some((a, b)) = s.split_once("..=") {
        (num(a)?..=num(b)?).collect()
    } else if let Some((a, b)) = s.split_once("..") {
        (num(a)?..num(b)?).collect()
    } else {
        s.split(',').map(num).collect::<Result<_>>()?
    };
    if out.is_empty() {
        return Err(Error::Domain(format!("range `{input}` is empty")));
    }
    Ok(out)
}
