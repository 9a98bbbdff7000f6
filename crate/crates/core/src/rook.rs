//! Ferrers boards and full rook placements.
//!
//! Coordinates are 1-indexed `(column, row)` pairs in French (Cartesian)
//! orientation: column 1 is leftmost, row 1 is the bottom row. A board is
//! stored as its column heights only.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Left-justified board with weakly decreasing column heights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FerrersBoard {
    heights: Vec<usize>,
}

impl FerrersBoard {
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        if heights.contains(&0) {
            return Err(Error::InvalidBoard("column heights must be positive".into()));
        }
        if heights.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidBoard(format!(
                "heights {heights:?} are not weakly decreasing"
            )));
        }
        Ok(FerrersBoard { heights })
    }

    pub fn square(n: usize) -> Self {
        FerrersBoard { heights: vec![n; n] }
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn columns(&self) -> usize {
        self.heights.len()
    }

    pub fn rows(&self) -> usize {
        self.heights.first().copied().unwrap_or(0)
    }

    /// Height of 1-indexed column `c`.
    pub fn height(&self, c: usize) -> usize {
        self.heights[c - 1]
    }

    pub fn has_cell(&self, column: usize, row: usize) -> bool {
        column >= 1 && column <= self.columns() && row >= 1 && row <= self.height(column)
    }

    pub fn cell_count(&self) -> usize {
        self.heights.iter().sum()
    }

    /// Upper-right corners: cells `(i, h_i)` where `i` is the last column or
    /// the next column is strictly shorter.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let n = self.columns();
        (1..=n)
            .filter(|&i| i == n || self.height(i + 1) < self.height(i))
            .map(|i| (i, self.height(i)))
            .collect()
    }
}

/// Full rook placement: one rook in each row and each column of a Ferrers
/// board with as many rows as columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PlacementRepr", into = "PlacementRepr")]
pub struct RookPlacement {
    board: FerrersBoard,
    /// `rows[c - 1]` is the row of the rook in column `c`.
    rows: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PlacementRepr {
    heights: Vec<usize>,
    rooks: Vec<(usize, usize)>,
}

impl RookPlacement {
    /// Build a placement from a board and its rook cells in any order.
    pub fn new(board: FerrersBoard, rooks: &[(usize, usize)]) -> Result<Self> {
        let n = board.columns();
        if rooks.len() != n {
            return Err(Error::InvalidPlacement(format!(
                "{} rooks on a board with {n} columns",
                rooks.len()
            )));
        }
        if board.rows() != n {
            return Err(Error::InvalidPlacement(format!(
                "board has {} rows but {n} columns",
                board.rows()
            )));
        }
        let mut rows = vec![0; n];
        let mut row_used = vec![false; n + 1];
        for &(c, r) in rooks {
            if !board.has_cell(c, r) {
                return Err(Error::InvalidPlacement(format!("rook ({c},{r}) is off the board")));
            }
            if rows[c - 1] != 0 {
                return Err(Error::InvalidPlacement(format!("two rooks in column {c}")));
            }
            if std::mem::replace(&mut row_used[r], true) {
                return Err(Error::InvalidPlacement(format!("two rooks in row {r}")));
            }
            rows[c - 1] = r;
        }
        Ok(RookPlacement { board, rows })
    }

    pub fn board(&self) -> &FerrersBoard {
        &self.board
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Rook cells ordered by column.
    pub fn rooks(&self) -> Vec<(usize, usize)> {
        self.rows.iter().enumerate().map(|(i, &r)| (i + 1, r)).collect()
    }

    /// Row of the rook in 1-indexed column `c`.
    pub fn rook_row(&self, c: usize) -> usize {
        self.rows[c - 1]
    }

    pub fn has_rook(&self, column: usize, row: usize) -> bool {
        column >= 1 && column <= self.size() && self.rows[column - 1] == row
    }

    /// Square placement of a permutation: rook `(i, π(i))` on the `n × n` board.
    pub fn square(perm: &Permutation) -> Result<Self> {
        if perm.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        Ok(RookPlacement {
            board: FerrersBoard::square(perm.len()),
            rows: perm.entries().to_vec(),
        })
    }

    /// Board-minimal placement of a permutation: column `i` has height
    /// `max_{j >= i} π(j)`.
    pub fn chi(perm: &Permutation) -> Result<Self> {
        if perm.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        let mut heights = perm.entries().to_vec();
        for i in (0..heights.len().saturating_sub(1)).rev() {
            heights[i] = heights[i].max(heights[i + 1]);
        }
        Ok(RookPlacement {
            board: FerrersBoard { heights },
            rows: perm.entries().to_vec(),
        })
    }

    /// True iff every upper-right corner of the board holds a rook.
    pub fn is_board_minimal(&self) -> bool {
        self.board.corners().into_iter().all(|(c, r)| self.has_rook(c, r))
    }

    /// Permutation read off column by column.
    pub fn read_permutation(&self) -> Permutation {
        Permutation::from_vec_unchecked(self.rows.clone())
    }

    /// Containment of the square placement of `pattern`.
    ///
    /// A choice of `k` rooks in increasing columns whose rows are order
    /// isomorphic to the pattern survives deletion of all other rows and
    /// columns as a full `k × k` square exactly when the cell in its last
    /// column and topmost row lies on the board.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        let k = pattern.len();
        if k == 0 {
            return true;
        }
        if k > self.size() {
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        self.search(pattern.entries(), 0, &mut chosen)
    }

    fn search(&self, pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        let k = pattern.len();
        let d = chosen.len();
        if d == k {
            let last_col = *chosen.last().unwrap();
            let top = chosen.iter().map(|&c| self.rows[c]).max().unwrap();
            return top <= self.board.heights[last_col];
        }
        let n = self.size();
        for c in start..=n - (k - d) {
            let r = self.rows[c];
            let consistent = chosen
                .iter()
                .zip(pattern)
                .all(|(&cc, &pv)| (self.rows[cc] < r) == (pv < pattern[d]));
            if !consistent {
                continue;
            }
            chosen.push(c);
            if self.search(pattern, c + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Convenience wrapper for [`RookPlacement::square`].
pub fn square_placement(perm: &Permutation) -> Result<RookPlacement> {
    RookPlacement::square(perm)
}

/// Convenience wrapper for [`RookPlacement::chi`].
pub fn chi(perm: &Permutation) -> Result<RookPlacement> {
    RookPlacement::chi(perm)
}

impl TryFrom<PlacementRepr> for RookPlacement {
    type Error = Error;

    fn try_from(r: PlacementRepr) -> Result<Self> {
        RookPlacement::new(FerrersBoard::new(r.heights)?, &r.rooks)
    }
}

impl From<RookPlacement> for PlacementRepr {
    fn from(p: RookPlacement) -> Self {
        PlacementRepr {
            rooks: p.rooks(),
            heights: p.board.heights,
        }
    }
}

impl fmt::Display for RookPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let heights: Vec<String> = self.board.heights.iter().map(|h| h.to_string()).collect();
        let rooks: Vec<String> = self.rooks().iter().map(|(c, r)| format!("({c},{r})")).collect();
        write!(f, "heights={}; rooks={}", heights.join(","), rooks.join(","))
    }
}

impl FromStr for RookPlacement {
    type Err = Error;

    /// Parses `"heights=5,5,5,3,3; rooks=(1,4),(2,2),(3,5),(4,1),(5,3)"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected \"heights=...; rooks=...\", got {s:?}"));
        let (h, r) = s.split_once(';').ok_or_else(bad)?;
        let h = h.trim().strip_prefix("heights=").ok_or_else(bad)?;
        let r = r.trim().strip_prefix("rooks=").ok_or_else(bad)?;
        let heights = h
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let mut rooks = Vec::new();
        for cell in r.split(')') {
            let cell = cell.trim().trim_start_matches(',').trim();
            if cell.is_empty() {
                continue;
            }
            let inner = cell.strip_prefix('(').ok_or_else(bad)?;
            let (c, rr) = inner.split_once(',').ok_or_else(bad)?;
            let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| Error::Parse(e.to_string()));
            rooks.push((parse(c)?, parse(rr)?));
        }
        RookPlacement::new(FerrersBoard::new(heights)?, &rooks)
    }
}
