use std::fmt;

use super::{FillingError, SigmaSeq};
use crate::sequences::BitString;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    One,
    Zero,
    Star,
}

impl Cell {
    fn symbol(self) -> char {
        match self {
            Cell::One => '1',
            Cell::Zero => '0',
            Cell::Star => '*',
        }
    }
}

/// An admissible `r × N` grid: every column is some zeros, then optionally a
/// single `1` with only `*` below it. Row 0 is the top row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filling {
    rows: usize,
    cols: usize,
    /// column-major: `cells[c * rows + r]`
    cells: Vec<Cell>,
}

/// Number of leading zeros of an admissible column, `None` if not admissible.
fn column_sigma(col: &[Cell]) -> Option<usize> {
    let zeros = col.iter().take_while(|c| **c == Cell::Zero).count();
    match col.get(zeros) {
        None => Some(zeros),
        Some(Cell::One) if col[zeros + 1..].iter().all(|c| *c == Cell::Star) => Some(zeros),
        _ => None,
    }
}

fn column_of(sigma: u32, rows: usize) -> Vec<Cell> {
    let s = sigma as usize;
    (0..rows)
        .map(|r| match r.cmp(&s) {
            std::cmp::Ordering::Less => Cell::Zero,
            std::cmp::Ordering::Equal => Cell::One,
            std::cmp::Ordering::Greater => Cell::Star,
        })
        .collect()
}

impl Filling {
    /// Builds from rows listed top to bottom, checking admissibility.
    pub fn from_rows(rows: Vec<Vec<Cell>>) -> Result<Self, FillingError> {
        let r = rows.len();
        if r == 0 {
            return Err(FillingError::Admissibility("a filling needs at least one row".into()));
        }
        let n = rows[0].len();
        if rows.iter().any(|row| row.len() != n) {
            return Err(FillingError::Admissibility("rows have different lengths".into()));
        }
        let mut cells = Vec::with_capacity(r * n);
        for c in 0..n {
            for row in &rows {
                cells.push(row[c]);
            }
        }
        let f = Filling { rows: r, cols: n, cells };
        for c in 0..n {
            if column_sigma(f.column(c)).is_none() {
                return Err(FillingError::Admissibility(format!("column {} is not admissible", c + 1)));
            }
        }
        Ok(f)
    }

    pub fn from_sigma(s: &SigmaSeq) -> Self {
        let rows = s.r() as usize;
        let cells = s.entries().iter().flat_map(|&x| column_of(x, rows)).collect();
        Filling {
            rows,
            cols: s.len(),
            cells,
        }
    }

    fn from_columns(rows: usize, columns: Vec<Vec<Cell>>) -> Self {
        Filling {
            rows,
            cols: columns.len(),
            cells: columns.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Cell at `row` (0 = top) and `col` (0 = left).
    pub fn cell(&self, row: usize, col: usize) -> Cell {
        self.cells[col * self.rows + row]
    }

    fn column(&self, c: usize) -> &[Cell] {
        &self.cells[c * self.rows..(c + 1) * self.rows]
    }

    pub fn sigma(&self) -> SigmaSeq {
        let entries = (0..self.cols)
            .map(|c| column_sigma(self.column(c)).expect("admissible by construction") as u32)
            .collect();
        SigmaSeq::new(self.rows as u32, entries).expect("entries are at most r")
    }

    /// Occupied columns.
    pub fn v(&self) -> BitString {
        BitString::new(
            (0..self.cols)
                .map(|c| self.column(c).contains(&Cell::One))
                .collect(),
        )
    }

    /// Entries read left to right, bottom row first, skipping `*`.
    pub fn w(&self) -> BitString {
        let mut bits = Vec::new();
        for r in (0..self.rows).rev() {
            for c in 0..self.cols {
                match self.cell(r, c) {
                    Cell::One => bits.push(true),
                    Cell::Zero => bits.push(false),
                    Cell::Star => {}
                }
            }
        }
        BitString::new(bits)
    }

    /// Rebuilds the filling from its `w` word by reading `w` right to left and
    /// filling cells right to left, top row first.
    pub fn from_w(rows: usize, cols: usize, w: &BitString) -> Result<Self, FillingError> {
        if rows == 0 {
            return Err(FillingError::Reconstruction("a filling needs at least one row".into()));
        }
        let mut cells = vec![Cell::Zero; rows * cols];
        let mut occupied = vec![false; cols];
        let mut word = w.bits().iter().rev();
        for r in 0..rows {
            for c in (0..cols).rev() {
                let cell = if occupied[c] {
                    Cell::Star
                } else {
                    match word.next() {
                        Some(true) => {
                            occupied[c] = true;
                            Cell::One
                        }
                        Some(false) => Cell::Zero,
                        None => {
                            return Err(FillingError::Reconstruction(format!(
                                "`{w}` is too short for a {rows}x{cols} filling"
                            )))
                        }
                    }
                };
                cells[c * rows + r] = cell;
            }
        }
        if word.next().is_some() {
            return Err(FillingError::Reconstruction(format!(
                "`{w}` is too long for a {rows}x{cols} filling"
            )));
        }
        Ok(Filling { rows, cols, cells })
    }

    /// One step of rotation: drop the top-right entry and move every label to
    /// its successor (right along a row, then up to the left end of the next
    /// row).
    ///
    /// * right column `1,*,...,*`: the column is removed;
    /// * right column occupied lower down: it moves to the far left, one row
    ///   up, with `*` in the vacated bottom cell;
    /// * right column empty: as above, with the bottom-left cell set to `fill`.
    ///
    /// `fill` must be given exactly in the last case.
    pub fn rotate(&self, fill: Option<bool>) -> Result<Filling, FillingError> {
        if self.cols == 0 {
            return Err(FillingError::FillArg("cannot rotate a filling with no columns".into()));
        }
        let last = self.column(self.cols - 1);
        let occupied_at = last.iter().position(|c| *c == Cell::One);
        let mut columns: Vec<Vec<Cell>> = (0..self.cols - 1).map(|c| self.column(c).to_vec()).collect();
        let bottom = match (occupied_at, fill) {
            (Some(0), None) => {
                return Ok(Filling::from_columns(self.rows, columns));
            }
            (Some(_), None) => Cell::Star,
            (None, Some(b)) => {
                if b {
                    Cell::One
                } else {
                    Cell::Zero
                }
            }
            (Some(_), Some(_)) => {
                return Err(FillingError::FillArg(
                    "the right-most column is occupied; no fill bit is allowed".into(),
                ))
            }
            (None, None) => {
                return Err(FillingError::FillArg(
                    "the right-most column is empty; a fill bit is required".into(),
                ))
            }
        };
        let mut moved: Vec<Cell> = last[1..].to_vec();
        moved.push(bottom);
        columns.insert(0, moved);
        Ok(Filling::from_columns(self.rows, columns))
    }

    /// Both rotations when the right-most column is empty.
    pub fn rotate_both(&self) -> Option<(Filling, Filling)> {
        Some((self.rotate(Some(false)).ok()?, self.rotate(Some(true)).ok()?))
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.cell(r, c).symbol().to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
