use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use super::fibonacci;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tile {
    Square,
    Domino,
}

impl Tile {
    pub fn width(self) -> usize {
        match self {
            Tile::Square => 1,
            Tile::Domino => 2,
        }
    }
}

/// A tiling of a 1 x n strip, left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tiling(pub Vec<Tile>);

impl Tiling {
    /// Length of the covered strip.
    pub fn len(&self) -> usize {
        self.0.iter().map(|t| t.width()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Tile> {
        self.0.first().copied()
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.0 {
            f.write_str(match t {
                Tile::Square => "S",
                Tile::Domino => "D",
            })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("tiling does not start with a domino")]
    DoesNotStartWithDomino,
}

/// All tilings of length `n`, lexicographic with `Square < Domino`.
pub fn enumerate_tilings(n: usize) -> Vec<Tiling> {
    fn go(left: usize, cur: &mut Vec<Tile>, out: &mut Vec<Tiling>) {
        if left == 0 {
            out.push(Tiling(cur.clone()));
            return;
        }
        for tile in [Tile::Square, Tile::Domino] {
            if tile.width() <= left {
                cur.push(tile);
                go(left - tile.width(), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// `F(n + 1)`.
pub fn count_tilings(n: usize) -> BigInt {
    fibonacci(n as i64 + 1)
}

/// Tilings of length `n >= 1` whose first tile is a square, i.e. `F(n)`;
/// one for the empty strip.
pub fn count_square_first(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::from(1);
    }
    count_tilings(n - 1)
}

/// Drops the leading domino: domino-first tilings of length `n + 1`
/// correspond one-to-one to tilings of length `n - 1`.
pub fn delete_leading_domino(t: &Tiling) -> Result<Tiling, TilingError> {
    match t.0.split_first() {
        Some((Tile::Domino, rest)) => Ok(Tiling(rest.to_vec())),
        _ => Err(TilingError::DoesNotStartWithDomino),
    }
}

/// Inverse of [`delete_leading_domino`].
pub fn prepend_domino(t: &Tiling) -> Tiling {
    let mut tiles = Vec::with_capacity(t.0.len() + 1);
    tiles.push(Tile::Domino);
    tiles.extend_from_slice(&t.0);
    Tiling(tiles)
}
