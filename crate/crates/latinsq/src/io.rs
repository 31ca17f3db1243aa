//! Grid file formats.
//!
//! Text format: n lines, each holding n whitespace-separated base-10
//! integers; the order is inferred from the line count and a trailing
//! newline is optional. Pair grids use the same shape with `a,b` tokens
//! (comma, no spaces).
//!
//! Structured format: a JSON document `{"order": n, "rows": [[...], ...]}`
//! with an optional `"kind"` tag (`"grid"`, `"latin"`, `"magic"`, or
//! `"pairs"` for pair grids, whose rows hold two-element arrays).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Grid, PairGrid};

/// Optional tag carried by the structured format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKind {
    Grid,
    Latin,
    Magic,
}

impl fmt::Display for GridKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridKind::Grid => write!(f, "grid"),
            GridKind::Latin => write!(f, "latin"),
            GridKind::Magic => write!(f, "magic"),
        }
    }
}

impl FromStr for GridKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grid" => Ok(GridKind::Grid),
            "latin" => Ok(GridKind::Latin),
            "magic" => Ok(GridKind::Magic),
            other => Err(Error::Parse(format!("unknown grid kind {other:?}"))),
        }
    }
}

/// Any value the file formats can carry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Ints(Grid, Option<GridKind>),
    Pairs(PairGrid),
}

pub fn parse_grid_text(input: &str) -> Result<Grid> {
    let lines: Vec<&str> = input.lines().collect();
    if lines.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let order = lines.len();
    let mut rows = Vec::with_capacity(order);
    for (i, line) in lines.iter().enumerate() {
        let mut row = Vec::with_capacity(order);
        for token in line.split_whitespace() {
            let value: i64 = token
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: invalid integer {token:?}", i + 1)))?;
            row.push(value);
        }
        if row.len() != order {
            return Err(Error::Parse(format!(
                "line {}: expected {} cells, found {}",
                i + 1,
                order,
                row.len()
            )));
        }
        rows.push(row);
    }
    Grid::new(order, rows)
}

pub fn grid_to_text(grid: &Grid) -> String {
    grid.to_string()
}

pub fn parse_pairs_text(input: &str) -> Result<PairGrid> {
    let lines: Vec<&str> = input.lines().collect();
    if lines.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let order = lines.len();
    let mut rows = Vec::with_capacity(order);
    for (i, line) in lines.iter().enumerate() {
        let mut row = Vec::with_capacity(order);
        for token in line.split_whitespace() {
            let (a, b) = token.split_once(',').ok_or_else(|| {
                Error::Parse(format!("line {}: expected a pair token, found {token:?}", i + 1))
            })?;
            let left: i64 = a
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: invalid integer {a:?}", i + 1)))?;
            let right: i64 = b
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: invalid integer {b:?}", i + 1)))?;
            row.push((left, right));
        }
        if row.len() != order {
            return Err(Error::Parse(format!(
                "line {}: expected {} pairs, found {}",
                i + 1,
                order,
                row.len()
            )));
        }
        rows.push(row);
    }
    PairGrid::new(order, rows)
}

pub fn pairs_to_text(grid: &PairGrid) -> String {
    grid.to_string()
}

#[derive(Serialize, Deserialize)]
struct GridDoc {
    order: usize,
    rows: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<GridKind>,
}

#[derive(Serialize, Deserialize)]
struct PairDoc {
    order: usize,
    rows: Vec<Vec<(i64, i64)>>,
    kind: String,
}

pub fn parse_grid_json(input: &str) -> Result<(Grid, Option<GridKind>)> {
    let doc: GridDoc =
        serde_json::from_str(input).map_err(|e| Error::Parse(format!("invalid document: {e}")))?;
    let grid = Grid::new(doc.order, doc.rows)?;
    Ok((grid, doc.kind))
}

pub fn grid_to_json(grid: &Grid, kind: Option<GridKind>) -> String {
    let doc = GridDoc {
        order: grid.order(),
        rows: grid.rows().map(|r| r.to_vec()).collect(),
        kind,
    };
    serde_json::to_string(&doc).expect("grid document serializes")
}

pub fn parse_pairs_json(input: &str) -> Result<PairGrid> {
    let doc: PairDoc =
        serde_json::from_str(input).map_err(|e| Error::Parse(format!("invalid document: {e}")))?;
    if doc.kind != "pairs" {
        return Err(Error::Parse(format!(
            "expected kind \"pairs\", found {:?}",
            doc.kind
        )));
    }
    PairGrid::new(doc.order, doc.rows)
}

pub fn pairs_to_json(grid: &PairGrid) -> String {
    let doc = PairDoc {
        order: grid.order(),
        rows: grid.rows().map(|r| r.to_vec()).collect(),
        kind: "pairs".into(),
    };
    serde_json::to_string(&doc).expect("pair document serializes")
}

/// Parses either format, auto-detected: JSON when the first non-blank byte
/// is `{`, text otherwise; pair cells are recognized by shape.
pub fn parse_document(input: &str) -> Result<Document> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') {
        // peek at the row shape to decide between int and pair cells
        if let Ok(pairs) = parse_pairs_json(input) {
            return Ok(Document::Pairs(pairs));
        }
        let (grid, kind) = parse_grid_json(input)?;
        Ok(Document::Ints(grid, kind))
    } else if trimmed
        .split_whitespace()
        .next()
        .is_some_and(|t| t.contains(','))
    {
        Ok(Document::Pairs(parse_pairs_text(input)?))
    } else {
        Ok(Document::Ints(parse_grid_text(input)?, None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let g = Grid::from_rows(vec![vec![5, 6, 4], vec![4, 5, 6], vec![6, 4, 5]]).unwrap();
        assert_eq!(parse_grid_text(&grid_to_text(&g)).unwrap(), g);
        // trailing newline is optional
        assert_eq!(parse_grid_text("5 6 4\n4 5 6\n6 4 5").unwrap(), g);
    }

    #[test]
    fn text_rejects_ragged_and_garbage() {
        assert!(matches!(parse_grid_text("1 2\n1\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_grid_text("1 x\n2 1\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_grid_text(""), Err(Error::Parse(_))));
    }

    #[test]
    fn pairs_round_trip() {
        let p = PairGrid::from_fn(2, |r, c| ((r + 1) as i64, (c + 1) as i64));
        assert_eq!(parse_pairs_text(&pairs_to_text(&p)).unwrap(), p);
        assert_eq!(parse_pairs_json(&pairs_to_json(&p)).unwrap(), p);
        assert!(parse_pairs_text("1,2 3\n1,1 2,2\n").is_err());
    }

    #[test]
    fn json_round_trip_keeps_kind() {
        let g = Grid::from_rows(vec![vec![1, 2], vec![2, 1]]).unwrap();
        let s = grid_to_json(&g, Some(GridKind::Latin));
        let (back, kind) = parse_grid_json(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(kind, Some(GridKind::Latin));
        // kind is optional
        let (back, kind) = parse_grid_json("{\"order\":1,\"rows\":[[7]]}").unwrap();
        assert_eq!(back.get(0, 0), 7);
        assert_eq!(kind, None);
    }

    #[test]
    fn json_rejects_inconsistent_order() {
        assert!(parse_grid_json("{\"order\":2,\"rows\":[[1,2]]}").is_err());
        assert!(parse_grid_json("{\"order\":2,\"rows\":[[1,2],[3]]}").is_err());
    }

    #[test]
    fn document_detection() {
        assert!(matches!(
            parse_document("1 2\n2 1\n").unwrap(),
            Document::Ints(_, None)
        ));
        assert!(matches!(
            parse_document("1,1 2,2\n2,2 1,1\n").unwrap(),
            Document::Pairs(_)
        ));
        assert!(matches!(
            parse_document("{\"order\":1,\"rows\":[[1]],\"kind\":\"magic\"}").unwrap(),
            Document::Ints(_, Some(GridKind::Magic))
        ));
        assert!(matches!(
            parse_document("{\"order\":1,\"rows\":[[[1,1]]],\"kind\":\"pairs\"}").unwrap(),
            Document::Pairs(_)
        ));
    }
}
