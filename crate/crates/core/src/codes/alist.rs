//! The "alist" sparse text format for parity-check matrices and a small JSON
//! descriptor.
//!
//! Layout: `n m`, then `max_col_weight max_row_weight`, then the n column
//! weights, the m row weights, one line of 1-based check indices per column
//! (zero-padded to the maximum weight) and one line of 1-based variable
//! indices per row.

use super::{Code, CodeError};

pub fn write_alist(code: &Code) -> String {
    let n = code.n();
    let m = code.m();
    let max_col = (0..n).map(|i| code.col_support(i).len()).max().unwrap_or(0);
    let max_row = code.max_row_weight();
    let mut out = String::new();
    out.push_str(&format!("{} {}\n{} {}\n", n, m, max_col, max_row));
    let col_weights: Vec<String> = (0..n)
        .map(|i| code.col_support(i).len().to_string())
        .collect();
    out.push_str(&col_weights.join(" "));
    out.push('\n');
    let row_weights: Vec<String> = (0..m)
        .map(|j| code.row_support(j).len().to_string())
        .collect();
    out.push_str(&row_weights.join(" "));
    out.push('\n');
    for i in 0..n {
        let mut entries: Vec<String> = code
            .col_support(i)
            .iter()
            .map(|&j| (j + 1).to_string())
            .collect();
        entries.resize(max_col, "0".to_string());
        out.push_str(&entries.join(" "));
        out.push('\n');
    }
    for j in 0..m {
        let mut entries: Vec<String> = code
            .row_support(j)
            .iter()
            .map(|&i| (i + 1).to_string())
            .collect();
        entries.resize(max_row, "0".to_string());
        out.push_str(&entries.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_alist(text: &str) -> Result<Code, CodeError> {
    let mut numbers = text.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| CodeError::Parse(format!("bad token '{t}'")))
    });
    let mut next = |what: &str| {
        numbers
            .next()
            .unwrap_or_else(|| Err(CodeError::Parse(format!("missing {what}"))))
    };
    let n = next("n")?;
    let m = next("m")?;
    if n == 0 || m == 0 {
        return Err(CodeError::Parse("n and m must be positive".into()));
    }
    let max_col = next("max column weight")?;
    let max_row = next("max row weight")?;
    let mut col_weights = Vec::with_capacity(n);
    for _ in 0..n {
        col_weights.push(next("column weight")?);
    }
    let mut row_weights = Vec::with_capacity(m);
    for _ in 0..m {
        row_weights.push(next("row weight")?);
    }
    // column blocks are read only to keep the cursor aligned; the rows are
    // reconstructed from the row blocks below
    for &w in &col_weights {
        if w > max_col {
            return Err(CodeError::Parse("column weight exceeds maximum".into()));
        }
        for _ in 0..max_col {
            next("column entry")?;
        }
    }
    let mut rows = Vec::with_capacity(m);
    for &w in &row_weights {
        if w > max_row {
            return Err(CodeError::Parse("row weight exceeds maximum".into()));
        }
        let mut sup = Vec::with_capacity(w);
        for k in 0..max_row {
            let e = next("row entry")?;
            if e == 0 {
                continue;
            }
            if e > n {
                return Err(CodeError::Parse(format!(
                    "variable index {e} exceeds n = {n}"
                )));
            }
            if k >= w {
                return Err(CodeError::Parse(
                    "nonzero entry past declared row weight".into(),
                ));
            }
            sup.push(e - 1);
        }
        if sup.len() != w {
            return Err(CodeError::Parse(
                "row weight does not match entry count".into(),
            ));
        }
        rows.push(sup);
    }
    Code::from_row_supports(n, rows)
}

/// JSON descriptor `{"n": .., "m": .., "rows": [[col indices]]}`.
pub fn write_json_descriptor(code: &Code) -> String {
    let rows: Vec<serde_json::Value> = code
        .row_supports()
        .iter()
        .map(|sup| serde_json::Value::from(sup.clone()))
        .collect();
    serde_json::json!({ "n": code.n(), "m": code.m(), "rows": rows }).to_string()
}

pub fn read_json_descriptor(text: &str) -> Result<Code, CodeError> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CodeError::Parse(e.to_string()))?;
    let n = v["n"]
        .as_u64()
        .ok_or_else(|| CodeError::Parse("missing n".into()))? as usize;
    let m = v["m"]
        .as_u64()
        .ok_or_else(|| CodeError::Parse("missing m".into()))? as usize;
    let rows_v = v["rows"]
        .as_array()
        .ok_or_else(|| CodeError::Parse("missing rows".into()))?;
    if rows_v.len() != m {
        return Err(CodeError::Parse("row count does not match m".into()));
    }
    let mut rows = Vec::with_capacity(m);
    for r in rows_v {
        let sup = r
            .as_array()
            .ok_or_else(|| CodeError::Parse("row is not an array".into()))?
            .iter()
            .map(|e| {
                e.as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| CodeError::Parse("index is not an integer".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(sup);
    }
    Code::from_row_supports(n, rows)
}
