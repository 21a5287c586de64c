//! Text and CSV renderings of a report envelope.

use std::fmt::Write as _;

use serde_json::Value;

use crate::envelope::ReportEnvelope;
use crate::schema::Mode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

impl Format {
    pub fn supports(self, verb: Mode) -> bool {
        self != Format::Csv || matches!(verb, Mode::Atlas | Mode::Verify)
    }
}

pub fn render(env: &ReportEnvelope, verb: Mode, format: Format) -> Result<String, String> {
    match format {
        Format::Json => Ok(env.to_json()),
        Format::Text => Ok(text(env, verb)),
        Format::Csv => csv_table(env, verb),
    }
}

fn s(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn text(env: &ReportEnvelope, verb: Mode) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}: {:?}", env.engine.name, env.verb, env.status);
    for d in &env.diagnostics {
        let _ = writeln!(out, "  [{}] {}", d.code, d.message);
    }
    let Some(r) = &env.result else {
        return out;
    };
    let fields: &[&str] = match verb {
        Mode::Decompose => &[
            "group_order", "levi", "wm_order", "wm0_order", "wm1_order", "phi0", "delta0", "wm1",
        ],
        Mode::DecidePs | Mode::DecideGps => &[
            "mode", "verdict", "reason", "stabilizer_order", "w0_order", "r_order", "r", "phi0",
            "walls",
        ],
        Mode::ProductCount => &["count", "verdict", "r_order"],
        Mode::Predict => &["prediction", "abstain_reason", "r_sigma_order", "failing", "decide_gps"],
        Mode::Verify => &["levis", "passed", "ok"],
        Mode::Atlas => &["points"],
    };
    for f in fields {
        let _ = writeln!(out, "{f}: {}", s(&r[*f]));
    }
    if let Some(clauses) = r["clauses"].as_array() {
        let _ = writeln!(out, "clauses:");
        for c in clauses {
            let _ = writeln!(out, "  {} {}: {}", s(&c["status"]), s(&c["name"]), s(&c["detail"]));
        }
    }
    if verb == Mode::Verify {
        for t in r["types"].as_array().into_iter().flatten() {
            let _ = writeln!(
                out,
                "  {}{} |W|={} levis={} passed={} fixtures={}",
                s(&t["family"]),
                s(&t["rank"]),
                s(&t["group_order"]),
                s(&t["levis"]),
                s(&t["passed"]),
                t["fixtures"].as_array().map_or(0, Vec::len)
            );
        }
    }
    if verb == Mode::Atlas {
        for row in r["rows"].as_array().into_iter().flatten() {
            let _ = writeln!(
                out,
                "  q={} t={} {} {} |R|={}",
                s(&row["q_part"]),
                s(&row["t_part"]),
                s(&row["verdict"]),
                s(&row["reason"]),
                s(&row["r_order"])
            );
        }
    }
    out
}

fn csv_table(env: &ReportEnvelope, verb: Mode) -> Result<String, String> {
    let Some(r) = &env.result else {
        return Ok(String::new());
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    let e = |e: csv::Error| e.to_string();
    match verb {
        Mode::Atlas => {
            let rows = r["rows"].as_array().cloned().unwrap_or_default();
            let n = env.input.as_ref().map_or(0, |i| i.rank);
            let mut header: Vec<String> = (1..=n).map(|i| format!("q{i}")).collect();
            header.extend((1..=n).map(|i| format!("t{i}")));
            header.extend(["verdict", "reason", "r_order", "walls"].map(String::from));
            w.write_record(&header).map_err(e)?;
            for row in rows {
                let mut rec: Vec<String> = Vec::new();
                for key in ["q_part", "t_part"] {
                    rec.extend(row[key].as_array().into_iter().flatten().map(s));
                }
                for key in ["verdict", "reason", "r_order", "walls"] {
                    rec.push(s(&row[key]));
                }
                w.write_record(&rec).map_err(e)?;
            }
        }
        Mode::Verify => {
            w.write_record(["family", "rank", "group_order", "levis", "passed", "failures", "fixtures"])
                .map_err(e)?;
            for t in r["types"].as_array().into_iter().flatten() {
                let count = |k: &str| t[k].as_array().map_or(0, Vec::len).to_string();
                w.write_record([
                    s(&t["family"]),
                    s(&t["rank"]),
                    s(&t["group_order"]),
                    s(&t["levis"]),
                    s(&t["passed"]),
                    count("failures"),
                    count("fixtures"),
                ])
                .map_err(e)?;
            }
        }
        other => return Err(format!("csv output is not available for {}", other.as_str())),
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}
