//! Markdown, CSV and JSON emitters for tables and verification records.

use anyhow::Result;
use mcgdim_core::table::{BroughtonTableRow, SphereTableRow};
use mcgdim_core::VerificationRecord;
use serde_json::json;

pub fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&format!("| {} |\n", header.join(" | ")));
    out.push_str(&format!("|{}\n", "---|".repeat(header.len())));
    for row in rows {
        out.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    out
}

pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header)?;
    for row in rows {
        writer.write_record(row)?;
    }
    Ok(String::from_utf8(writer.into_inner()?)?)
}

pub fn sphere_cells(rows: &[SphereTableRow]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| {
            vec![
                r.case.clone(),
                r.group_label(),
                r.n_f.to_string(),
                r.vcd_wf.to_string(),
                r.lambda.to_string(),
            ]
        })
        .collect()
}

pub fn sphere_markdown(rows: &[SphereTableRow]) -> String {
    let mut cells = sphere_cells(rows);
    let mut footnotes = Vec::new();
    for (cell_row, row) in cells.iter_mut().zip(rows) {
        if let Some(note) = &row.note {
            cell_row[3].push('*');
            footnotes.push(format!("\\* {note}"));
        }
    }
    let mut out = markdown_table(&["case", "group", "n_F", "vcd(WF)", "lambda"], &cells);
    for line in footnotes {
        out.push_str(&format!("\n{line}\n"));
    }
    out
}

pub const SPHERE_CSV_HEADER: [&str; 5] = ["case", "group", "nF", "vcdWF", "lambda"];

pub fn sphere_csv(rows: &[SphereTableRow]) -> Result<String> {
    csv_table(&SPHERE_CSV_HEADER, &sphere_cells(rows))
}

pub fn sphere_json(rows: &[SphereTableRow]) -> Result<String> {
    Ok(serde_json::to_string_pretty(rows)?)
}

fn broughton_cells(rows: &[BroughtonTableRow], eval_at: Option<u64>) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| {
            let mut cells = vec![
                r.group.clone(),
                r.order.to_string(),
                r.signature.to_string(),
                r.nf_bound.symbolic(),
                r.vcd_bound.symbolic(),
                r.lambda_bound.to_string(),
            ];
            if let Some(n) = eval_at {
                cells.push(r.nf_bound.eval(n).to_string());
                cells.push(r.vcd_bound.eval(n).to_string());
            }
            cells
        })
        .collect()
}

fn broughton_header(eval_at: Option<u64>) -> Vec<&'static str> {
    let mut header = vec![
        "group",
        "order",
        "signature",
        "nF_bound",
        "vcdWF_bound",
        "lambda_bound",
    ];
    if eval_at.is_some() {
        header.push("nF_bound_at_n");
        header.push("vcdWF_bound_at_n");
    }
    header
}

pub fn broughton_markdown(rows: &[BroughtonTableRow], eval_at: Option<u64>) -> String {
    markdown_table(&broughton_header(eval_at), &broughton_cells(rows, eval_at))
}

pub fn broughton_csv(rows: &[BroughtonTableRow], eval_at: Option<u64>) -> Result<String> {
    csv_table(&broughton_header(eval_at), &broughton_cells(rows, eval_at))
}

pub fn broughton_json(rows: &[BroughtonTableRow], eval_at: Option<u64>) -> Result<String> {
    match eval_at {
        None => Ok(serde_json::to_string_pretty(rows)?),
        Some(n) => {
            let values: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(r).expect("rows serialize");
                    let obj = v.as_object_mut().unwrap();
                    obj.insert("n".into(), json!(n));
                    obj.insert(
                        "nf_bound_at_n".into(),
                        json!(r.nf_bound.eval(n).to_string()),
                    );
                    obj.insert(
                        "vcd_bound_at_n".into(),
                        json!(r.vcd_bound.eval(n).to_string()),
                    );
                    v
                })
                .collect();
            Ok(serde_json::to_string_pretty(&values)?)
        }
    }
}

pub fn record_lines_json(records: &[VerificationRecord]) -> Result<String> {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r)?);
        out.push('\n');
    }
    Ok(out)
}

pub fn records_csv(records: &[VerificationRecord]) -> Result<String> {
    let header = [
        "genus",
        "punctures",
        "group",
        "order",
        "nF",
        "vcdWF",
        "lambda",
        "sum",
        "budget",
        "status",
    ];
    let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            vec![
                r.ambient.genus.to_string(),
                r.ambient.punctures.to_string(),
                r.group.clone(),
                r.order.to_string(),
                opt(r.n_f),
                opt(r.vcd_wf),
                r.lambda.to_string(),
                opt(r.sum),
                r.budget.to_string(),
                format!("{:?}", r.status).to_lowercase(),
            ]
        })
        .collect();
    csv_table(&header, &rows)
}
