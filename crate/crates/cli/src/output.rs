use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use serde_json::Value;

use crate::report::RunReport;

/// Pretty JSON with every double printed to 17 significant digits, which
/// round-trips exactly.
struct ExactFloats<'a>(PrettyFormatter<'a>);

impl Formatter for ExactFloats<'_> {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn begin_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_array(writer)
    }

    fn end_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array(writer)
    }

    fn begin_array_value<W: ?Sized + Write>(
        &mut self,
        writer: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.0.begin_array_value(writer, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array_value(writer)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object(writer)
    }

    fn end_object<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object(writer)
    }

    fn begin_object_key<W: ?Sized + Write>(
        &mut self,
        writer: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.0.begin_object_key(writer, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object_value(writer)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object_value(writer)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser =
        serde_json::Serializer::with_formatter(&mut out, ExactFloats(PrettyFormatter::new()));
    value.serialize(&mut ser).expect("reports serialize");
    out.push(b'\n');
    String::from_utf8(out).expect("serde_json writes UTF-8")
}

/// Six significant digits, fixed or scientific like C's `%g`.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{}", if x == 0.0 { 0.0 } else { x });
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..6).contains(&exp) {
        let s = format!("{:.*}", (5 - exp).max(0) as usize, x);
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.')
        } else {
            &s
        };
        s.to_string()
    } else {
        let s = format!("{x:.5e}");
        let (mantissa, exponent) = s.split_once('e').expect("scientific format");
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{exponent}")
    }
}

fn inline(value: &Value) -> String {
    match value {
        Value::Number(n) => sig6(n.as_f64().unwrap_or(f64::NAN)),
        Value::Array(items) => format!(
            "({})",
            items.iter().map(inline).collect::<Vec<_>>().join(", ")
        ),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_flat(value: &Value) -> bool {
    match value {
        Value::Array(items) => items
            .iter()
            .all(|v| !v.is_object() && !v.is_array() || is_flat(v)),
        Value::Object(_) => false,
        _ => true,
    }
}

fn write_value(out: &mut String, key: &str, value: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match value {
        Value::Object(map) => {
            out.push_str(&format!("{pad}{key}\n"));
            for (k, v) in map {
                write_value(out, k, v, indent + 2);
            }
        }
        Value::Array(items) if !is_flat(value) => {
            out.push_str(&format!("{pad}{key}\n"));
            for (i, v) in items.iter().enumerate() {
                write_value(out, &format!("[{i}]"), v, indent + 2);
            }
        }
        _ => out.push_str(&format!("{pad}{key:<20} {}\n", inline(value))),
    }
}

/// Human-readable rendering. Arcs are summarized by their point counts.
pub fn to_table(report: &RunReport) -> String {
    let mut value = serde_json::to_value(report).expect("reports serialize");
    let map = value.as_object_mut().expect("report is an object");
    map.remove("input");
    let checks = map.remove("checks");
    let error = map.remove("error");
    if let Some(Value::Array(arcs)) = map.get_mut("arcs") {
        for arc in arcs.iter_mut() {
            let n = arc["points"].as_array().map_or(0, Vec::len);
            arc["points"] = Value::from(format!("{n} points"));
        }
    }

    let mut out = String::new();
    for (k, v) in map.iter() {
        write_value(&mut out, k, v, 0);
    }
    if let Some(Value::Array(checks)) = checks {
        out.push_str(&format!(
            "checks\n  {:<34} {:>12} {:>12}  status\n",
            "name", "residual", "tolerance"
        ));
        for c in &checks {
            out.push_str(&format!(
                "  {:<34} {:>12} {:>12}  {}\n",
                inline(&c["name"]),
                inline(&c["residual"]),
                inline(&c["tolerance"]),
                if c["passed"].as_bool() == Some(true) {
                    "pass"
                } else {
                    "FAIL"
                }
            ));
        }
    }
    if let Some(e) = error {
        out.push_str(&format!("error                {}\n", inline(&e)));
    }
    out
}

/// The arcs of a trace report as `arc_label,i,x,y,z` rows.
pub fn arcs_to_csv(report: &RunReport) -> csv::Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["arc_label", "i", "x", "y", "z"])?;
    for arc in report.arcs.iter().flatten() {
        for (i, p) in arc.points.iter().enumerate() {
            writer.write_record([
                arc.label.clone(),
                i.to_string(),
                format!("{:.16e}", p[0]),
                format!("{:.16e}", p[1]),
                format!("{:.16e}", p[2]),
            ])?;
        }
    }
    let bytes = writer.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv of UTF-8 fields"))
}
