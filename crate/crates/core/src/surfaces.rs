//! Topological bookkeeping for `SL3(C)`-character varieties of surfaces.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::words::Word;

/// Size of the matrices in the representation.
pub const MATRIX_SIZE: u32 = 3;

/// The two surfaces with free fundamental group of rank 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Surface {
    /// Sphere with three boundary components.
    Trinion,
    /// Torus with one boundary component.
    Torus,
}

impl Surface {
    pub const ALL: [Self; 2] = [Self::Trinion, Self::Torus];

    pub fn topology(self) -> SurfaceTopology {
        match self {
            Self::Trinion => SurfaceTopology {
                genus: 0,
                boundaries: 3,
            },
            Self::Torus => SurfaceTopology {
                genus: 1,
                boundaries: 1,
            },
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Trinion => "trinion",
            Self::Torus => "torus",
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Surface {
    type Err = SurfaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "trinion" | "pants" => Ok(Self::Trinion),
            "torus" | "one-holed-torus" => Ok(Self::Torus),
            other => Err(SurfaceError::UnknownSurface(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("a surface needs at least one boundary component")]
    NoBoundary,
    #[error("rank {0} is too small: the variety dimension formula needs rank >= 2")]
    RankTooSmall(u32),
    #[error("no boundary presentation for genus {genus} with {boundaries} boundary components")]
    Unsupported { genus: u32, boundaries: u32 },
    #[error("unknown surface {0:?}; expected trinion or torus")]
    UnknownSurface(String),
}

/// An orientable surface of genus `g` with `n >= 1` boundary components.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SurfaceTopology {
    genus: u32,
    boundaries: u32,
}

impl SurfaceTopology {
    pub fn new(genus: u32, boundaries: u32) -> Result<Self, SurfaceError> {
        if boundaries == 0 {
            return Err(SurfaceError::NoBoundary);
        }
        Ok(Self { genus, boundaries })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn boundaries(&self) -> u32 {
        self.boundaries
    }

    pub fn euler_char(&self) -> i64 {
        2 - 2 * i64::from(self.genus) - i64::from(self.boundaries)
    }

    /// Rank of the (free) fundamental group.
    pub fn rank(&self) -> u32 {
        2 * self.genus + self.boundaries - 1
    }

    /// `(m^2 - 1)(r - 1)` with `m = 3`.
    pub fn dim_character_variety(&self) -> Result<u64, SurfaceError> {
        let r = self.rank();
        if r <= 1 {
            return Err(SurfaceError::RankTooSmall(r));
        }
        Ok(u64::from(MATRIX_SIZE * MATRIX_SIZE - 1) * u64::from(r - 1))
    }

    /// Number of independent boundary trace functions, `(m - 1) n`.
    pub fn boundary_casimir_count(&self) -> u64 {
        u64::from(MATRIX_SIZE - 1) * u64::from(self.boundaries)
    }

    /// `-(m^2 - 1) chi - (m - 1) n`, i.e. `16(g - 1) + 6n`.
    pub fn generic_leaf_dimension(&self) -> i64 {
        let m = i64::from(MATRIX_SIZE);
        -(m * m - 1) * self.euler_char() - (m - 1) * i64::from(self.boundaries)
    }

    pub fn surface(&self) -> Option<Surface> {
        Surface::ALL.into_iter().find(|s| s.topology() == *self)
    }

    /// Boundary words in the standard presentation with free generators
    /// `x1, x2`.
    pub fn boundary_words(&self) -> Result<Vec<Word>, SurfaceError> {
        match self.surface() {
            Some(Surface::Trinion) => Ok(vec![
                Word::from_indices(&[1]),
                Word::from_indices(&[2]),
                Word::from_indices(&[-1, -2]),
            ]),
            Some(Surface::Torus) => Ok(vec![Word::from_indices(&[2, 1, -2, -1])]),
            None => Err(SurfaceError::Unsupported {
                genus: self.genus,
                boundaries: self.boundaries,
            }),
        }
    }
}

/// Function form of [`SurfaceTopology::euler_char`].
pub fn euler_char(g: u32, n: u32) -> Result<i64, SurfaceError> {
    Ok(SurfaceTopology::new(g, n)?.euler_char())
}

/// Function form of [`SurfaceTopology::rank`].
pub fn rank(g: u32, n: u32) -> Result<u32, SurfaceError> {
    Ok(SurfaceTopology::new(g, n)?.rank())
}

/// Function form of [`SurfaceTopology::dim_character_variety`].
pub fn dim_character_variety(g: u32, n: u32) -> Result<u64, SurfaceError> {
    SurfaceTopology::new(g, n)?.dim_character_variety()
}

/// Function form of [`SurfaceTopology::generic_leaf_dimension`].
pub fn generic_leaf_dimension(g: u32, n: u32) -> Result<i64, SurfaceError> {
    Ok(SurfaceTopology::new(g, n)?.generic_leaf_dimension())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_surfaces() {
        for s in Surface::ALL {
            let t = s.topology();
            assert_eq!(t.euler_char(), -1);
            assert_eq!(t.rank(), 2);
            assert_eq!(t.dim_character_variety().unwrap(), 8);
            assert_eq!(t.surface(), Some(s));
        }
        assert_eq!(Surface::Trinion.topology().generic_leaf_dimension(), 2);
        assert_eq!(Surface::Torus.topology().generic_leaf_dimension(), 6);
    }

    #[test]
    fn small_rank_rejected() {
        assert_eq!(
            dim_character_variety(0, 2),
            Err(SurfaceError::RankTooSmall(1))
        );
        assert_eq!(
            dim_character_variety(0, 1),
            Err(SurfaceError::RankTooSmall(0))
        );
        assert_eq!(SurfaceTopology::new(2, 0), Err(SurfaceError::NoBoundary));
    }

    #[test]
    fn leaf_dimension_formula() {
        for g in 0..5 {
            for n in 1..5 {
                let t = SurfaceTopology::new(g, n).unwrap();
                assert_eq!(
                    t.generic_leaf_dimension(),
                    16 * (g as i64 - 1) + 6 * n as i64
                );
            }
        }
    }

    #[test]
    fn boundary_words_only_for_rank_two() {
        assert_eq!(
            Surface::Trinion.topology().boundary_words().unwrap().len(),
            3
        );
        assert!(SurfaceTopology::new(2, 1)
            .unwrap()
            .boundary_words()
            .is_err());
    }
}
