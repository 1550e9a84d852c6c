//! Text, CSV and JSON renderings of a run.

use fmadm_registry::{RankingView, RunRecord, RunRow};

/// Fixed-width plain-text table. Columns flagged in `numeric` are right-aligned.
pub fn table(headers: &[String], rows: &[Vec<String>], numeric: &[bool]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let mut out = String::new();
        for (k, cell) in cells.iter().enumerate() {
            let pad = " ".repeat(widths[k] - cell.chars().count());
            if k > 0 {
                out.push_str("  ");
            }
            if numeric.get(k).copied().unwrap_or(false) {
                out.push_str(&pad);
                out.push_str(cell);
            } else {
                out.push_str(cell);
                out.push_str(&pad);
            }
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
        out
    };
    let mut out = line(headers);
    for row in rows {
        out.push_str(&line(row));
    }
    out
}

fn heads(fixed: &[&str], criteria: &[String]) -> Vec<String> {
    fixed.iter().map(|s| s.to_string()).chain(criteria.iter().cloned()).collect()
}

fn flags(text: usize, numbers: usize) -> Vec<bool> {
    std::iter::repeat_n(false, text).chain(std::iter::repeat_n(true, numbers)).collect()
}

/// Rows in matrix (input) order.
fn matrix_order(view: &RankingView, record: &RunRecord) -> Vec<RunRow> {
    let mut rows = view.rows.clone();
    let position = |nim: &str| record.outcome.crisp.alternatives().iter().position(|a| a == nim);
    rows.sort_by_key(|r| position(&r.nim));
    rows
}

fn ranking_rows(view: &RankingView, all: bool) -> Vec<&RunRow> {
    view.rows.iter().filter(|r| all || r.recipient).collect()
}

/// Score to six decimals. Full precision is in the JSON and CSV outputs.
pub fn score6(v: f64) -> String {
    format!("{v:.6}")
}

pub fn text(record: &RunRecord, view: &RankingView, trace: bool) -> String {
    let criteria = &view.criteria;
    let m = criteria.len();
    let mut out = String::new();
    if trace {
        let ordered = matrix_order(view, record);
        out.push_str("Crisp ratings\n");
        let rows: Vec<Vec<String>> = ordered
            .iter()
            .map(|r| {
                let mut cells = vec![r.nim.clone(), r.name.clone()];
                cells.extend(r.crisp.iter().map(|x| x.to_string()));
                cells
            })
            .collect();
        out.push_str(&table(&heads(&["nim", "name"], criteria), &rows, &flags(2, m)));

        out.push_str("\nNormalized ratings\n");
        let rows: Vec<Vec<String>> = ordered
            .iter()
            .map(|r| {
                let mut cells = vec![r.nim.clone(), r.name.clone()];
                cells.extend(r.normalized.iter().map(|x| score6(*x)));
                cells
            })
            .collect();
        out.push_str(&table(&heads(&["nim", "name"], criteria), &rows, &flags(2, m)));

        let weights: Vec<String> = criteria
            .iter()
            .zip(&view.weights)
            .map(|(c, w)| format!("{c}={w}"))
            .collect();
        out.push_str(&format!("\nWeights: {}\n", weights.join(" ")));
        match view.quota {
            Some(q) => out.push_str(&format!("Quota: {q}\n")),
            None => out.push_str("Quota: all eligible\n"),
        }

        if !view.ineligible.is_empty() {
            out.push_str("\nIneligible\n");
            let rows: Vec<Vec<String>> = view
                .ineligible
                .iter()
                .map(|i| {
                    let reasons: Vec<String> = i
                        .violations
                        .iter()
                        .map(|v| format!("{} value {} outside table", v.criterion, v.value))
                        .collect();
                    vec![i.nim.clone(), i.name.clone(), reasons.join("; ")]
                })
                .collect();
            out.push_str(&table(&heads(&["nim", "name", "reason"], &[]), &rows, &[]));
        }

        out.push_str("\nRanking\n");
        let rows: Vec<Vec<String>> = ranking_rows(view, true)
            .iter()
            .zip(std::iter::once(&false).chain(&view.tie_break_applied))
            .map(|(r, tie)| {
                vec![
                    r.rank.to_string(),
                    r.nim.clone(),
                    r.name.clone(),
                    score6(r.score),
                    if r.recipient { "yes" } else { "no" }.to_string(),
                    if *tie { "tie-break" } else { "" }.to_string(),
                ]
            })
            .collect();
        let h = heads(&["rank", "nim", "name", "score", "recipient", "note"], &[]);
        out.push_str(&table(&h, &rows, &[true, false, false, true]));
    } else {
        let rows: Vec<Vec<String>> = ranking_rows(view, false)
            .iter()
            .map(|r| vec![r.rank.to_string(), r.nim.clone(), r.name.clone(), score6(r.score)])
            .collect();
        out.push_str(&table(&heads(&["rank", "nim", "name", "score"], &[]), &rows, &[true, false, false, true]));
    }
    out
}

/// CSV in rank order. Scores use the shortest text that reads back to the
/// same double. With `trace`, crisp and normalized columns follow.
pub fn csv(view: &RankingView, trace: bool) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["rank".to_string(), "nim".into(), "name".into(), "score".into(), "recipient".into()];
    if trace {
        header.extend(view.criteria.iter().map(|c| format!("crisp_{c}")));
        header.extend(view.criteria.iter().map(|c| format!("normalized_{c}")));
    }
    w.write_record(&header)?;
    for r in ranking_rows(view, trace) {
        let mut rec = vec![
            r.rank.to_string(),
            r.nim.clone(),
            r.name.clone(),
            r.score.to_string(),
            r.recipient.to_string(),
        ];
        if trace {
            rec.extend(r.crisp.iter().map(f64::to_string));
            rec.extend(r.normalized.iter().map(f64::to_string));
        }
        w.write_record(&rec)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

pub fn json(record: &RunRecord) -> String {
    let mut s = serde_json::to_string_pretty(record).expect("run serializes");
    s.push('\n');
    s
}
