use serde::Serialize;
use serde_json::Value;

use odcodes::Limits;

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub threads: usize,
    pub limits: Limits,
}

/// What every command prints: the command line, the configuration, the
/// results payload and the wall-clock time.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub config: RunConfig,
    pub results: Value,
    pub duration_ms: u128,
}

/// Longest value printed inline by the table renderer.
const MAX_CELL: usize = 240;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Plain-text rendering: `rows` arrays become aligned tables, other
/// top-level entries become `key: value` lines.
pub fn render_table(report: &RunReport) -> String {
    let mut out = format!("# {}\n", report.command);
    let Value::Object(map) = &report.results else {
        out.push_str(&scalar(&report.results));
        out.push('\n');
        return out;
    };
    for (key, value) in map {
        match value {
            Value::Array(rows) if key == "rows" && rows.iter().all(Value::is_object) && !rows.is_empty() => {
                let cols: Vec<String> = rows[0].as_object().unwrap().keys().cloned().collect();
                let cells: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| cols.iter().map(|c| r.get(c).map(scalar).unwrap_or_default()).collect())
                    .collect();
                let widths: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap())
                    .collect();
                let line = |row: &[String]| {
                    row.iter()
                        .zip(&widths)
                        .map(|(s, w)| format!("{s:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                out.push_str(&line(&cols));
                out.push('\n');
                for r in &cells {
                    out.push_str(&line(r));
                    out.push('\n');
                }
            }
            other => {
                let text = scalar(other);
                if text.len() > MAX_CELL {
                    out.push_str(&format!("{key}: ({} bytes; use --format json)\n", text.len()));
                } else {
                    out.push_str(&format!("{key}: {text}\n"));
                }
            }
        }
    }
    out.push_str(&format!("({} ms)\n", report.duration_ms));
    out
}
