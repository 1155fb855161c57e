//! Inclusive grid ranges written `lo..hi`, or a single value.
//!
//! Half-integer ranges step by one, so `5/2..11/2` is `5/2, 7/2, 9/2, 11/2`.
//! `..` alone means "use the command's default range". `lo > hi` is an
//! empty range.

use std::str::FromStr;

use relbranch_core::HalfInt;

use crate::commands::CommandError;

/// Largest number of points any table may produce.
pub const MAX_GRID_POINTS: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Range<T> {
    Default,
    Inclusive(T, T),
}

impl<T: FromStr + Copy> FromStr for Range<T> {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s == ".." {
            return Ok(Range::Default);
        }
        let parse = |t: &str| t.trim().parse::<T>().map_err(|_| format!("bad range bound {t:?} in {s:?}"));
        match s.split_once("..") {
            Some((lo, hi)) => Ok(Range::Inclusive(parse(lo)?, parse(hi)?)),
            None => {
                let v = parse(s)?;
                Ok(Range::Inclusive(v, v))
            }
        }
    }
}

impl<T: Copy> Range<T> {
    pub fn or(self, lo: T, hi: T) -> (T, T) {
        match self {
            Range::Default => (lo, hi),
            Range::Inclusive(a, b) => (a, b),
        }
    }
}

pub fn int_points(lo: i64, hi: i64) -> Result<Vec<i64>, CommandError> {
    if lo > hi {
        return Ok(Vec::new());
    }
    check_cap((hi - lo) as u128 + 1)?;
    Ok((lo..=hi).collect())
}

pub fn half_points(lo: HalfInt, hi: HalfInt) -> Result<Vec<HalfInt>, CommandError> {
    if lo > hi {
        return Ok(Vec::new());
    }
    let span = hi.twice() - lo.twice();
    if span % 2 != 0 {
        return Err(CommandError::Validation(format!(
            "range {lo}..{hi} does not step by whole units"
        )));
    }
    check_cap(span as u128 / 2 + 1)?;
    Ok((0..=span / 2).map(|i| lo + HalfInt::from_int(i)).collect())
}

/// Fails once a grid would exceed [`MAX_GRID_POINTS`].
pub fn check_cap(points: u128) -> Result<(), CommandError> {
    if points > MAX_GRID_POINTS as u128 {
        return Err(CommandError::Validation(format!(
            "grid of {points} points exceeds the cap of {MAX_GRID_POINTS}"
        )));
    }
    Ok(())
}
