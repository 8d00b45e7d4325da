//! Ingestion of the external text formats: matrices as CSV (decimal or
//! `p/q` tokens) or JSON `{"n": .., "rows": [[..]]}`, regions as flag
//! keywords or JSON, and second-order / fractional systems as JSON. The
//! rational path round-trips exactly.

use std::path::Path;

use num_traits::ToPrimitive;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::matrix::RealMatrix;
use crate::linalg::rational::{parse_rat, Rat, RationalMatrix};
use crate::regions::LmiRegion;
use crate::systems::SecondOrderSystem;
use crate::tol::Tol;

/// A matrix parsed from text: always usable as floating point, and exact
/// when every token was ingested as a rational.
#[derive(Debug, Clone)]
pub struct ParsedMatrix {
    pub real: RealMatrix,
    pub rational: Option<RationalMatrix>,
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

type TokenRows = Vec<Vec<(f64, Option<Rat>)>>;

fn token_to_pair(token: &str, location: &str) -> Result<(f64, Option<Rat>)> {
    match parse_rat(token) {
        Ok(r) => {
            let f = r.to_f64().ok_or(Error::NonFinite)?;
            Ok((f, Some(r)))
        }
        Err(_) => {
            let f: f64 = token
                .trim()
                .parse()
                .map_err(|_| parse_err(location, format!("bad numeric token '{token}'")))?;
            Ok((f, None))
        }
    }
}

fn rows_from_tokens(token_rows: TokenRows) -> Result<ParsedMatrix> {
    let real_rows: Vec<Vec<f64>> = token_rows
        .iter()
        .map(|r| r.iter().map(|(f, _)| *f).collect())
        .collect();
    let real = RealMatrix::from_rows(&real_rows)?;
    let rational = if token_rows
        .iter()
        .all(|r| r.iter().all(|(_, q)| q.is_some()))
    {
        Some(RationalMatrix::from_rows(
            token_rows
                .into_iter()
                .map(|r| r.into_iter().map(|(_, q)| q.unwrap()).collect())
                .collect(),
        )?)
    } else {
        None
    };
    Ok(ParsedMatrix { real, rational })
}

fn json_rows_to_tokens(rows: &Value, location: &str) -> Result<TokenRows> {
    let arr = rows
        .as_array()
        .ok_or_else(|| parse_err(location, "'rows' must be an array of arrays"))?;
    let mut out = Vec::with_capacity(arr.len());
    collect_json_rows(arr, location, &mut out)?;
    Ok(out)
}

fn collect_json_rows(arr: &[Value], location: &str, out: &mut TokenRows) -> Result<()> {
    for (i, row) in arr.iter().enumerate() {
        let cells = row
            .as_array()
            .ok_or_else(|| parse_err(format!("{location} row {i}"), "row must be an array"))?;
        let mut parsed = Vec::with_capacity(cells.len());
        for (j, cell) in cells.iter().enumerate() {
            let loc = format!("{location} row {i} col {j}");
            let pair = match cell {
                Value::Number(n) => {
                    let f = n.as_f64().ok_or(Error::NonFinite)?;
                    (f, Rat::from_float(f))
                }
                Value::String(s) => token_to_pair(s, &loc)?,
                other => return Err(parse_err(loc, format!("unsupported cell {other}"))),
            };
            parsed.push(pair);
        }
        out.push(parsed);
    }
    Ok(())
}

/// Parse matrix text: JSON object with `rows`, or CSV (one row per line,
/// `#` comments allowed).
pub fn parse_matrix_str(content: &str, location: &str) -> Result<ParsedMatrix> {
    let trimmed = content.trim_start();
    if trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(content)
            .map_err(|e| parse_err(location, format!("invalid JSON: {e}")))?;
        let rows = v
            .get("rows")
            .ok_or_else(|| parse_err(location, "missing 'rows' field"))?;
        let tokens = json_rows_to_tokens(rows, location)?;
        if let Some(n) = v.get("n").and_then(|n| n.as_u64()) {
            if tokens.len() as u64 != n {
                return Err(parse_err(
                    location,
                    format!("'n' = {n} does not match {} rows", tokens.len()),
                ));
            }
        }
        return rows_from_tokens(tokens);
    }
    let mut tokens = Vec::new();
    for (i, line) in content.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for (j, tok) in line.split(',').enumerate() {
            row.push(token_to_pair(tok, &format!("{location}:{} field {j}", i + 1))?);
        }
        tokens.push(row);
    }
    if tokens.is_empty() {
        return Err(parse_err(location, "no rows found"));
    }
    rows_from_tokens(tokens)
}

pub fn parse_matrix(path: &Path) -> Result<ParsedMatrix> {
    let content = std::fs::read_to_string(path)?;
    parse_matrix_str(&content, &path.display().to_string())
}

/// Serialize a matrix back to the CSV form, exact in rational mode.
pub fn matrix_to_csv(m: &ParsedMatrix) -> String {
    use crate::linalg::rational::format_rat;
    match &m.rational {
        Some(q) => q
            .rows()
            .iter()
            .map(|row| row.iter().map(format_rat).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("\n"),
        None => m
            .real
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| format!("{v}"))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

/// Serialize a matrix to the JSON form {"n": .., "rows": [[..]]}; rational
/// entries become exact `p/q` strings.
pub fn matrix_to_json(m: &ParsedMatrix) -> String {
    use crate::linalg::rational::format_rat;
    use serde_json::json;
    let rows: Vec<Vec<Value>> = match &m.rational {
        Some(q) => q
            .rows()
            .iter()
            .map(|row| row.iter().map(|v| Value::String(format_rat(v))).collect())
            .collect(),
        None => m
            .real
            .rows()
            .iter()
            .map(|row| row.iter().map(|v| json!(v)).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&json!({"n": m.real.dim(), "rows": rows}))
        .expect("matrix serialization")
}

/// Region from the JSON form
/// {"type": "half_plane" | "shifted" | "sector" | "general", ...}.
pub fn parse_region_json(content: &str, location: &str, tol: Tol) -> Result<LmiRegion> {
    let v: Value = serde_json::from_str(content)
        .map_err(|e| parse_err(location, format!("invalid JSON: {e}")))?;
    let kind = v
        .get("type")
        .and_then(|t| t.as_str())
        .ok_or_else(|| parse_err(location, "missing 'type'"))?;
    match kind {
        "half_plane" => Ok(LmiRegion::half_plane()),
        "shifted" => {
            let alpha = v
                .get("alpha")
                .and_then(|a| a.as_f64())
                .ok_or_else(|| parse_err(location, "shifted region needs numeric 'alpha'"))?;
            Ok(LmiRegion::shifted_half_plane(alpha))
        }
        "sector" => {
            let theta = v
                .get("theta")
                .and_then(|a| a.as_f64())
                .ok_or_else(|| parse_err(location, "sector region needs numeric 'theta'"))?;
            LmiRegion::sector(theta)
        }
        "general" => {
            let l = v
                .get("L")
                .ok_or_else(|| parse_err(location, "general region needs 'L' rows"))?;
            let m = v
                .get("M")
                .ok_or_else(|| parse_err(location, "general region needs 'M' rows"))?;
            let l = rows_from_tokens(json_rows_to_tokens(l, location)?)?.real;
            let m = rows_from_tokens(json_rows_to_tokens(m, location)?)?.real;
            let region = LmiRegion::general(l, m)?;
            if region.symmetrization_delta() > tol.band(1.0) {
                eprintln!(
                    "warning: L symmetrized; entries changed by up to {:.3e}",
                    region.symmetrization_delta()
                );
            }
            Ok(region)
        }
        other => Err(parse_err(location, format!("unknown region type '{other}'"))),
    }
}

/// Parsed system input: either a mechanical triple (or eq6 pair) or a
/// fractional-order problem.
pub enum SystemInput {
    Mechanical(SecondOrderSystem),
    Eq6 { state: RealMatrix },
    Fractional { matrix: ParsedMatrix, gamma: f64 },
}

pub fn parse_system_str(content: &str, location: &str, tol: Tol) -> Result<SystemInput> {
    let v: Value = serde_json::from_str(content)
        .map_err(|e| parse_err(location, format!("invalid JSON: {e}")))?;
    if let Some(rows) = v.get("matrix") {
        let gamma = v
            .get("gamma")
            .and_then(|g| g.as_f64())
            .ok_or_else(|| parse_err(location, "fractional system needs numeric 'gamma'"))?;
        let matrix = rows_from_tokens(json_rows_to_tokens(rows, location)?)?;
        return Ok(SystemInput::Fractional { matrix, gamma });
    }
    if v.get("convention").and_then(|c| c.as_str()) == Some("eq6") {
        let b = v
            .get("B")
            .ok_or_else(|| parse_err(location, "eq6 system needs 'B'"))?;
        let c = v
            .get("C")
            .ok_or_else(|| parse_err(location, "eq6 system needs 'C'"))?;
        let b = rows_from_tokens(json_rows_to_tokens(b, location)?)?.real;
        let c = rows_from_tokens(json_rows_to_tokens(c, location)?)?.real;
        let state = crate::systems::to_first_order_eq6(&b, &c)?;
        return Ok(SystemInput::Eq6 { state });
    }
    let get_matrix = |key: &str| -> Result<RealMatrix> {
        let rows = v
            .get(key)
            .ok_or_else(|| parse_err(location, format!("mechanical system needs '{key}'")))?;
        Ok(rows_from_tokens(json_rows_to_tokens(rows, location)?)?.real)
    };
    let sys = SecondOrderSystem::new(
        get_matrix("mass")?,
        get_matrix("damping")?,
        get_matrix("stiffness")?,
        tol,
    )?;
    Ok(SystemInput::Mechanical(sys))
}

pub fn parse_system(path: &Path, tol: Tol) -> Result<SystemInput> {
    let content = std::fs::read_to_string(path)?;
    parse_system_str(&content, &path.display().to_string(), tol)
}
