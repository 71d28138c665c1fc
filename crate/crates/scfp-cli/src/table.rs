//! Fixed-width table rendering: CSV for machine use and whitespace-separated
//! plot data for gnuplot-style tooling.

pub fn cell(v: f64) -> String {
    format!("{v:.15}")
}

pub fn to_csv(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::with_capacity(rows.len() * 64);
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Same grid as the CSV with a comment header; empty cells become `nan`,
/// which plotting tools skip.
pub fn to_plot_data(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = format!("# {}\n", header.join(" "));
    for row in rows {
        let rendered: Vec<&str> =
            row.iter().map(|c| if c.is_empty() { "nan" } else { c.as_str() }).collect();
        out.push_str(&rendered.join(" "));
        out.push('\n');
    }
    out
}
