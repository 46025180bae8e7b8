//! Buffered emitters. Everything is rendered into a `String` before output
//! so the bytes never depend on scheduling.

use dualroots_core::veritas::{Report, Verdict};
use serde::Serialize;

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// RFC 4180 CSV with a header row.
pub fn csv<S: AsRef<str>>(header: &[&str], rows: impl IntoIterator<Item = Vec<S>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row.iter().map(|c| c.as_ref()))
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn verdict_tag(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Inconclusive => "INCONCLUSIVE",
        Verdict::Fail => "FAIL",
    }
}

fn inputs_text(r: &Report) -> String {
    r.inputs
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn walk<'a>(r: &'a Report, path: String, out: &mut Vec<(String, &'a Report)>) {
    let children = r.checks.iter().enumerate();
    out.push((path.clone(), r));
    for (i, c) in children {
        let p = if path.is_empty() {
            i.to_string()
        } else {
            format!("{path}.{i}")
        };
        walk(c, p, out);
    }
}

/// One row per report node, depth first; `path` locates the node.
pub fn report_csv(r: &Report) -> String {
    let mut nodes = Vec::new();
    walk(r, String::new(), &mut nodes);
    csv(
        &["path", "theorem_id", "verdict", "detail", "inputs", "witnesses"],
        nodes.into_iter().map(|(path, n)| {
            vec![
                path,
                n.theorem_id.clone(),
                verdict_tag(n.verdict).to_string(),
                n.detail.clone(),
                inputs_text(n),
                n.witnesses.join("; "),
            ]
        }),
    )
}

pub fn report_text(r: &Report) -> String {
    fn go(r: &Report, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        out.push_str(&format!(
            "{pad}[{}] {} {} {}\n",
            verdict_tag(r.verdict),
            r.theorem_id,
            r.detail,
            inputs_text(r)
        ));
        for w in &r.witnesses {
            out.push_str(&format!("{pad}  ! {w}\n"));
        }
        for c in &r.checks {
            go(c, depth + 1, out);
        }
    }
    let mut out = String::new();
    go(r, 0, &mut out);
    out.push_str(&format!(
        "summary: {} pass, {} inconclusive, {} fail\n",
        r.count(Verdict::Pass),
        r.count(Verdict::Inconclusive),
        r.count(Verdict::Fail)
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_commas_and_quotes() {
        let s = csv(&["a", "b"], vec![vec!["1,2", "say \"hi\""]]);
        assert_eq!(s, "a,b\r\n\"1,2\",\"say \"\"hi\"\"\"\r\n");
    }
}
