//! Exact bookkeeping of the discrete-series parameters of `X±` and `Y±`.
//!
//! A parameter lives either on the big group `G = U(p,q)` or on the
//! subgroup `G'` (`U(p-1,q)` for the `+` side, `U(p,q-1)` for the `-` side).
//! In both cases it is a half-integer `a` with `a - (r-1)/2 ∈ ℕ`, where `r`
//! is the rank of the group it lives on. Integrality of that difference is
//! the parity clause of property RB, non-negativity the good-range clause.

mod halfint;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use halfint::HalfInt;

use crate::error::{Error, Result};

/// Signature `(p,q)` of `U(p,q)`.
///
/// The default constructor enforces `p ≥ 3` and `q ≥ 3`; [`Signature::relaxed`]
/// only asks for `p, q ≥ 1` and is needed for the small worked examples.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Signature {
    p: u32,
    q: u32,
    relaxed: bool,
}

impl Signature {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p < 3 || q < 3 {
            return Err(Error::SignatureAssumption { p, q });
        }
        Ok(Signature {
            p,
            q,
            relaxed: false,
        })
    }

    pub fn relaxed(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidSignature { p, q });
        }
        Ok(Signature { p, q, relaxed: true })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn q(self) -> u32 {
        self.q
    }

    pub fn is_relaxed(self) -> bool {
        self.relaxed
    }

    pub fn rank(self) -> u32 {
        self.p + self.q
    }

    /// Same group, ignoring how the signature was validated.
    pub fn same_group(self, other: Signature) -> bool {
        self.p == other.p && self.q == other.q
    }

    /// Lower end of the good range on this group: `(p+q-1)/2`.
    pub fn good_range_bound(self) -> HalfInt {
        HalfInt::from_twice(self.rank() as i64 - 1)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U({},{})", self.p, self.q)
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U({},{}){}", self.p, self.q, if self.relaxed { "~" } else { "" })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Plus, Side::Minus];

    pub fn symbol(self) -> char {
        match self {
            Side::Plus => '+',
            Side::Minus => '-',
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Which group of the pair `G ⊃ G'` a parameter lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Level {
    G,
    GPrime,
}

/// A validated discrete-series parameter. `sig` is always the signature of
/// the big group `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DiscreteSeriesParam {
    sig: Signature,
    side: Side,
    level: Level,
    a: HalfInt,
}

/// Validates `a` against property RB at the given level.
pub fn make_param(sig: Signature, side: Side, level: Level, a: HalfInt) -> Result<DiscreteSeriesParam> {
    let rank = match level {
        Level::G => sig.rank(),
        Level::GPrime => sig.rank() - 1,
    };
    let shift = HalfInt::from_twice(rank as i64 - 1);
    let diff = a - shift;
    if !diff.is_integer() {
        return Err(Error::Parity {
            sig,
            value: a,
            shift,
        });
    }
    if diff.twice() < 0 {
        return Err(Error::GoodRange {
            sig,
            value: a,
            bound: shift,
        });
    }
    Ok(DiscreteSeriesParam { sig, side, level, a })
}

impl DiscreteSeriesParam {
    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn a(&self) -> HalfInt {
        self.a
    }

    /// Signature of the group the representation lives on.
    pub fn group_signature(&self) -> (u32, u32) {
        let (p, q) = (self.sig.p, self.sig.q);
        match (self.level, self.side) {
            (Level::G, _) => (p, q),
            (Level::GPrime, Side::Plus) => (p - 1, q),
            (Level::GPrime, Side::Minus) => (p, q - 1),
        }
    }

    fn rank(&self) -> u32 {
        let (p, q) = self.group_signature();
        p + q
    }

    /// `a₀ = a - (r-1)/2 ∈ ℕ`.
    pub fn a_zero(&self) -> HalfInt {
        self.a - HalfInt::from_twice(self.rank() as i64 - 1)
    }

    /// Highest weights of the minimal K-type on `U(p) × U(q)`, for the group
    /// the parameter lives on.
    pub fn minimal_k_type(&self) -> Result<(HighestWeight, HighestWeight)> {
        let (p, q) = self.group_signature();
        let a0 = self.a_zero();
        let spherical = |len: u32, top: HalfInt| -> Result<HighestWeight> {
            if len < 2 {
                return Err(Error::Range(format!(
                    "minimal K-type needs a factor of size >= 2, got U({len})"
                )));
            }
            Ok(HighestWeight::spherical(len as usize, top))
        };
        match self.side {
            Side::Plus => Ok((
                spherical(p, a0 + HalfInt::from_int(q as i64))?,
                HighestWeight::trivial(q as usize),
            )),
            Side::Minus => Ok((
                HighestWeight::trivial(p as usize),
                spherical(q, a0 + HalfInt::from_int(p as i64))?,
            )),
        }
    }

    /// `(a, (r-3)/2, (r-3)/2 - 1, …, -(r-3)/2, -a)`.
    pub fn infinitesimal_character(&self) -> Result<Vec<HalfInt>> {
        let r = self.rank() as i64;
        let mut out = Vec::with_capacity(r as usize);
        out.push(self.a);
        out.extend((0..r - 2).map(|i| HalfInt::from_twice(r - 3 - 2 * i)));
        out.push(-self.a);
        for (i, x) in out.iter().enumerate() {
            if out[i + 1..].contains(x) {
                return Err(Error::Range(format!("singular infinitesimal character at {x}")));
            }
        }
        Ok(out)
    }

    pub fn epsilon(&self) -> EpsilonCharacter {
        epsilon_of(self.side)
    }

    /// The center acts trivially iff the minimal K-type weights sum to zero.
    pub fn center_lift_check(&self) -> Result<bool> {
        let (u, v) = self.minimal_k_type()?;
        Ok(center_acts_trivially(&[u, v]))
    }
}

pub fn center_acts_trivially(weights: &[HighestWeight]) -> bool {
    weights.iter().map(HighestWeight::total).fold(HalfInt::ZERO, |s, x| s + x) == HalfInt::ZERO
}

/// `U(p,q)+a=7/2` on `G`, `U(p,q)+b=2` on `G'` (same big-group signature).
impl fmt::Display for DiscreteSeriesParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.level {
            Level::G => 'a',
            Level::GPrime => 'b',
        };
        write!(f, "{}{}{}={}", self.sig, self.side, letter, self.a)
    }
}

impl DiscreteSeriesParam {
    /// Parses the canonical text form. With `relaxed` the signature is only
    /// required to be positive.
    pub fn parse(s: &str, relaxed: bool) -> Result<Self> {
        let bad = || Error::Parse(format!("expected U(p,q)[+|-]a=<rational>, got {s:?}"));
        let s = s.trim();
        let rest = s.strip_prefix("U(").ok_or_else(bad)?;
        let (pq, rest) = rest.split_once(')').ok_or_else(bad)?;
        let (p, q) = pq.split_once(',').ok_or_else(bad)?;
        let p: u32 = p.trim().parse().map_err(|_| bad())?;
        let q: u32 = q.trim().parse().map_err(|_| bad())?;
        let mut chars = rest.chars();
        let side = match chars.next() {
            Some('+') => Side::Plus,
            Some('-') => Side::Minus,
            _ => return Err(bad()),
        };
        let level = match chars.next() {
            Some('a') => Level::G,
            Some('b') => Level::GPrime,
            _ => return Err(bad()),
        };
        let value = chars.as_str().strip_prefix('=').ok_or_else(bad)?;
        let a: HalfInt = value.parse()?;
        let sig = if relaxed {
            Signature::relaxed(p, q)?
        } else {
            Signature::new(p, q)?
        };
        make_param(sig, side, level, a)
    }
}

impl FromStr for DiscreteSeriesParam {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DiscreteSeriesParam::parse(s, false)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn pow_minus_one(k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A character of `A(φ) = ℤ₂ × ℤ₂`, given by its values on the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EpsilonCharacter {
    pub on_e1: Sign,
    pub on_e2: Sign,
}

impl EpsilonCharacter {
    /// Labels `Π⁺`.
    pub const EPS1: EpsilonCharacter = EpsilonCharacter {
        on_e1: Sign::Plus,
        on_e2: Sign::Minus,
    };
    /// Labels `Π⁻`.
    pub const EPS2: EpsilonCharacter = EpsilonCharacter {
        on_e1: Sign::Minus,
        on_e2: Sign::Plus,
    };

    /// All four characters; the trivial one and `(-1,-1)` label no
    /// symmetric-space discrete series.
    pub fn all() -> [EpsilonCharacter; 4] {
        let c = |on_e1, on_e2| EpsilonCharacter { on_e1, on_e2 };
        [
            c(Sign::Plus, Sign::Plus),
            Self::EPS1,
            Self::EPS2,
            c(Sign::Minus, Sign::Minus),
        ]
    }

    pub fn side(self) -> Option<Side> {
        match self {
            Self::EPS1 => Some(Side::Plus),
            Self::EPS2 => Some(Side::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for EpsilonCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:+},{:+})", self.on_e1.value(), self.on_e2.value())
    }
}

pub fn epsilon_of(side: Side) -> EpsilonCharacter {
    match side {
        Side::Plus => EpsilonCharacter::EPS1,
        Side::Minus => EpsilonCharacter::EPS2,
    }
}

/// A weakly decreasing highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HighestWeight {
    entries: Vec<HalfInt>,
}

impl HighestWeight {
    pub fn new(entries: Vec<HalfInt>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant);
        }
        Ok(HighestWeight { entries })
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| HalfInt::from_int(x)).collect())
    }

    pub fn trivial(len: usize) -> Self {
        HighestWeight {
            entries: vec![HalfInt::ZERO; len],
        }
    }

    /// `(x, 0, …, 0, -x)` of length `len ≥ 2`, for `x ≥ 0`.
    pub fn spherical(len: usize, x: HalfInt) -> Self {
        debug_assert!(len >= 2 && x >= HalfInt::ZERO);
        let mut entries = vec![HalfInt::ZERO; len];
        entries[0] = x;
        entries[len - 1] = -x;
        HighestWeight { entries }
    }

    pub fn entries(&self) -> &[HalfInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> HalfInt {
        self.entries.iter().fold(HalfInt::ZERO, |s, &x| s + x)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
