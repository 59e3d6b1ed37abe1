use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use num_complex::Complex64;

use super::PolyError;

/// One of the nine trace coordinates `t(±1) .. t(±4), t(5)`.
///
/// Ordered by the fixed variable order `t1, t-1, t2, t-2, t3, t-3, t4, t-4, t5`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Coordinate(i8);

impl Coordinate {
    pub const T1: Self = Self(1);
    pub const TM1: Self = Self(-1);
    pub const T2: Self = Self(2);
    pub const TM2: Self = Self(-2);
    pub const T3: Self = Self(3);
    pub const TM3: Self = Self(-3);
    pub const T4: Self = Self(4);
    pub const TM4: Self = Self(-4);
    pub const T5: Self = Self(5);

    pub const ALL: [Self; 9] = [
        Self::T1,
        Self::TM1,
        Self::T2,
        Self::TM2,
        Self::T3,
        Self::TM3,
        Self::T4,
        Self::TM4,
        Self::T5,
    ];

    /// The eight coordinates of the base ring (everything except `t5`).
    pub const BASE: [Self; 8] = [
        Self::T1,
        Self::TM1,
        Self::T2,
        Self::TM2,
        Self::T3,
        Self::TM3,
        Self::T4,
        Self::TM4,
    ];

    pub fn new(index: i64) -> Result<Self, PolyError> {
        match index {
            1..=5 | -4..=-1 => Ok(Self(index as i8)),
            _ => Err(PolyError::InvalidCoordinate(index)),
        }
    }

    pub fn index(self) -> i8 {
        self.0
    }

    /// Position in the fixed variable order (0 for `t1`, 8 for `t5`).
    pub fn slot(self) -> usize {
        let k = self.0.unsigned_abs() as usize;
        if self.0 > 0 {
            2 * (k - 1)
        } else {
            2 * (k - 1) + 1
        }
    }

    pub fn from_slot(slot: usize) -> Self {
        Self::ALL[slot]
    }

    pub fn is_base(self) -> bool {
        self.0 != 5
    }

    /// `t(k) <-> t(-k)`; `None` for `t5`, whose partner `t-5` is not a variable.
    pub fn partner(self) -> Option<Self> {
        self.is_base().then(|| Self(-self.0))
    }
}

impl PartialOrd for Coordinate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coordinate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.slot().cmp(&other.slot())
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}", self.0)
    }
}

impl FromStr for Coordinate {
    type Err = PolyError;

    /// Accepts `t3`, `t-3`, `t(3)` and `t(-3)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let body = s.strip_prefix('t').ok_or(PolyError::InvalidCoordinate(0))?;
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        let index: i64 = body.parse().map_err(|_| PolyError::InvalidCoordinate(0))?;
        Self::new(index)
    }
}

impl serde::Serialize for Coordinate {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A complex value for each of the nine coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoordinatePoint([Complex64; 9]);

impl CoordinatePoint {
    /// `values` is indexed by [`Coordinate::slot`].
    pub fn new(values: [Complex64; 9]) -> Self {
        Self(values)
    }

    pub fn uniform(value: Complex64) -> Self {
        Self([value; 9])
    }

    pub fn values(&self) -> &[Complex64; 9] {
        &self.0
    }

    pub fn set(&mut self, c: Coordinate, value: Complex64) {
        self.0[c.slot()] = value;
    }
}

impl Index<Coordinate> for CoordinatePoint {
    type Output = Complex64;

    fn index(&self, c: Coordinate) -> &Complex64 {
        &self.0[c.slot()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slots_follow_fixed_order() {
        for (i, c) in Coordinate::ALL.iter().enumerate() {
            assert_eq!(c.slot(), i);
            assert_eq!(Coordinate::from_slot(i), *c);
        }
    }

    #[test]
    fn rejects_non_coordinates() {
        assert!(Coordinate::new(0).is_err());
        assert!(Coordinate::new(-5).is_err());
        assert!(Coordinate::new(6).is_err());
        assert_eq!(Coordinate::new(-4).unwrap(), Coordinate::TM4);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("t-3".parse::<Coordinate>().unwrap(), Coordinate::TM3);
        assert_eq!("t(4)".parse::<Coordinate>().unwrap(), Coordinate::T4);
        assert!("t-5".parse::<Coordinate>().is_err());
        assert!("x1".parse::<Coordinate>().is_err());
        assert_eq!(Coordinate::TM2.to_string(), "t-2");
    }

    #[test]
    fn partners() {
        assert_eq!(Coordinate::T3.partner(), Some(Coordinate::TM3));
        assert_eq!(Coordinate::T5.partner(), None);
    }
}
