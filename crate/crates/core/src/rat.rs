//! Exact rational helpers.

use crate::error::{Error, Result};
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Q = Ratio<i128>;

pub fn q(n: i128) -> Q {
    Q::from_integer(n)
}

pub fn frac(n: i128, d: i128) -> Q {
    Q::new(n, d)
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let r: Q = t.parse().map_err(|_| Error::Parse(format!("bad rational '{t}'")))?;
    Ok(r)
}

pub fn parse_q_list(s: &str) -> Result<Vec<Q>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_q).collect()
}

pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

pub fn fmt_q_list(xs: &[Q]) -> String {
    xs.iter().map(fmt_q).collect::<Vec<_>>().join(",")
}

/// True when every element of `vals` is equal (vacuously for 0 or 1 values).
pub fn all_equal(vals: &[Q]) -> bool {
    vals.windows(2).all(|w| w[0] == w[1])
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}
