//! The atlas of tight contact structures on the two families of small
//! Seifert-fibered homology spheres indexed by a single integer `n`, laid
//! out as triangular arrays of cells `(i, j)` with a fillability status for
//! each cell.

use serde::Serialize;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Which triangle the cell lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// The family on the boundary orientation with cells for `n >= 2`.
    Eta,
    /// The family on the reversed orientation with cells for `n >= 1`.
    Xi,
}

impl Family {
    /// Width parameter of row `i`: `|j|` ranges up to this, stepping by 2.
    fn row_span(&self, n: i64, i: i64) -> i64 {
        match self {
            Family::Eta => n - i - 2,
            Family::Xi => n - i - 1,
        }
    }

    fn min_n(&self) -> i64 {
        match self {
            Family::Eta => 2,
            Family::Xi => 1,
        }
    }
}

/// One tight contact structure in a triangle: family, level `n`, row `i`,
/// column `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BrieskornCell {
    family: Family,
    n: i64,
    i: i64,
    j: i64,
}

impl BrieskornCell {
    pub fn new(family: Family, n: i64, i: i64, j: i64) -> Result<BrieskornCell> {
        if n < family.min_n() {
            return Err(Error::InvalidParameter("level n below the family minimum"));
        }
        let span = family.row_span(n, i);
        if i < 0 || span < 0 {
            return Err(Error::InvalidParameter("row index out of range"));
        }
        if j.abs() > span {
            return Err(Error::InvalidParameter("column index out of range"));
        }
        // Parity: j steps by 2 across a row, pinned to the row span's parity.
        if (j - span).rem_euclid(2) != 0 {
            return Err(Error::InvalidParameter("column parity mismatch"));
        }
        Ok(BrieskornCell { family, n, i, j })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn i(&self) -> i64 {
        self.i
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    /// The two half-sums `(l, r)` with `l + r = row span`, `l - r = j`.
    pub fn lr_params(&self) -> (i64, i64) {
        let span = self.family.row_span(self.n, self.i);
        ((span + self.j) / 2, (span - self.j) / 2)
    }

    /// Whether both half-sums are positive: the structure uses stabilizations
    /// of both signs.
    pub fn mixed(&self) -> bool {
        let (l, r) = self.lr_params();
        l > 0 && r > 0
    }
}

/// Reconstruct a cell from its half-sum parameters.
pub fn cell_from_lr(family: Family, n: i64, i: i64, l: i64, r: i64) -> Result<BrieskornCell> {
    if l < 0 || r < 0 {
        return Err(Error::InvalidParameter("half-sums must be non-negative"));
    }
    if l + r != family.row_span(n, i) {
        return Err(Error::InvalidParameter("half-sums do not match the row span"));
    }
    BrieskornCell::new(family, n, i, l - r)
}

/// All cells at level `n`, rows `i` descending from the top of the triangle,
/// columns `j` ascending within each row.
pub fn enumerate(family: Family, n: i64) -> Result<Vec<BrieskornCell>> {
    if n < family.min_n() {
        return Err(Error::InvalidParameter("level n below the family minimum"));
    }
    let mut cells = Vec::new();
    let top = match family {
        Family::Eta => n - 2,
        Family::Xi => n - 1,
    };
    for i in (0..=top).rev() {
        let span = family.row_span(n, i);
        let mut j = -span;
        while j <= span {
            cells.push(BrieskornCell { family, n, i, j });
            j += 2;
        }
    }
    Ok(cells)
}

/// Number of cells at level `n`: `n(n-1)/2` for [`Family::Eta`],
/// `n(n+1)/2` for [`Family::Xi`].
pub fn cell_count(family: Family, n: i64) -> Result<i64> {
    if n < family.min_n() {
        return Err(Error::InvalidParameter("level n below the family minimum"));
    }
    Ok(match family {
        Family::Eta => n * (n - 1) / 2,
        Family::Xi => n * (n + 1) / 2,
    })
}

/// Classification of a cell's fillability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StatusKind {
    /// Stein fillable.
    Stein,
    /// Strongly fillable but admits no Liouville filling.
    StrongNotLiouville,
    /// Edge cell: conjectured Stein fillable, unresolved.
    EdgeConjecturedStein,
}

impl StatusKind {
    pub fn code(&self) -> char {
        match self {
            StatusKind::Stein => 'S',
            StatusKind::StrongNotLiouville => 'N',
            StatusKind::EdgeConjecturedStein => 'C',
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            StatusKind::Stein => "stein",
            StatusKind::StrongNotLiouville => "strong-not-liouville",
            StatusKind::EdgeConjecturedStein => "edge-conjectured-stein",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellStatus {
    pub kind: StatusKind,
    pub citations: Vec<&'static str>,
}

pub const CITE_BOTTOM_ROW_STEIN: &str =
    "fact:bottom-row — the i = 0 row consists of the structures with Stein-fillable surgery descriptions";
pub const CITE_INTERIOR_SNL: &str =
    "thm:interior — interior cells are strongly fillable with no Liouville filling";
pub const CITE_CENTRAL_SNL: &str =
    "thm:central-column — central cells above the bottom row are strongly fillable with no Liouville filling";
pub const CITE_EDGE_CONJECTURE: &str =
    "conj:edges — non-central boundary cells above the bottom row are conjectured Stein fillable";
pub const CITE_SPORADIC_STEIN: &str =
    "fact:sporadic (announced) — the level-4 cells (1, ±1) in the first family are Stein fillable";

/// Fillability status of a single cell.
pub fn status(cell: &BrieskornCell) -> CellStatus {
    let BrieskornCell { family, n, i, j } = *cell;
    if i == 0 {
        return CellStatus {
            kind: StatusKind::Stein,
            citations: vec![CITE_BOTTOM_ROW_STEIN],
        };
    }
    match family {
        Family::Eta => {
            if n == 4 && i == 1 && j.abs() == 1 {
                return CellStatus {
                    kind: StatusKind::Stein,
                    citations: vec![CITE_SPORADIC_STEIN],
                };
            }
            if j == 0 && i == n - 2 {
                return CellStatus {
                    kind: StatusKind::StrongNotLiouville,
                    citations: vec![CITE_CENTRAL_SNL],
                };
            }
            if j.abs() < n - i - 2 {
                return CellStatus {
                    kind: StatusKind::StrongNotLiouville,
                    citations: vec![CITE_INTERIOR_SNL],
                };
            }
        }
        Family::Xi => {
            if j == 0 {
                return CellStatus {
                    kind: StatusKind::StrongNotLiouville,
                    citations: vec![CITE_CENTRAL_SNL],
                };
            }
            if j.abs() < n - i - 1 {
                return CellStatus {
                    kind: StatusKind::StrongNotLiouville,
                    citations: vec![CITE_INTERIOR_SNL],
                };
            }
        }
    }
    CellStatus {
        kind: StatusKind::EdgeConjecturedStein,
        citations: vec![CITE_EDGE_CONJECTURE],
    }
}

/// ASCII rendering of the level-`n` triangle: rows `i` descending, each cell
/// printed as `(i,j)X` where `X` is the status code, rows centered.
pub fn render_triangle(family: Family, n: i64) -> Result<String> {
    let cells = enumerate(family, n)?;
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut current_i = None;
    let mut width = 0;
    for cell in &cells {
        let label = format!("({},{}){}", cell.i, cell.j, status(cell).kind.code());
        width = width.max(label.len());
        if current_i != Some(cell.i) {
            rows.push(Vec::new());
            current_i = Some(cell.i);
        }
        rows.last_mut().unwrap().push(label);
    }
    let max_cells = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    for row in &rows {
        let indent = (max_cells - row.len()) * (width + 2) / 2;
        for _ in 0..indent {
            out.push(' ');
        }
        let padded: Vec<String> = row.iter().map(|l| format!("{l:width$}")).collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    }
    Ok(out)
}
