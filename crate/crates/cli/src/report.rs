//! Report values and their two renderings: machine (JSON, 12 significant
//! digits) and human (indented text, 6 significant digits).

use serde_json::{json, Map, Value};

use screw_core::{Pitch, Point, Screw, ScrewAxis, Vec3};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

impl Format {
    pub fn digits(self) -> usize {
        match self {
            Format::Human => 6,
            Format::Machine => 12,
        }
    }
}

/// Rounds to `digits` significant decimal digits. Negative zero becomes zero.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Applies [`round_sig`] to every number in the tree.
pub fn round_value(v: &Value, digits: usize) -> Value {
    match v {
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => json!(round_sig(x, digits)),
            _ => v.clone(),
        },
        Value::Array(a) => Value::Array(a.iter().map(|x| round_value(x, digits)).collect()),
        Value::Object(o) => Value::Object(
            o.iter()
                .map(|(k, x)| (k.clone(), round_value(x, digits)))
                .collect::<Map<_, _>>(),
        ),
        _ => v.clone(),
    }
}

/// Renders a report tree. Machine output is pretty-printed JSON with keys
/// in sorted order; human output is an indented `key: value` listing.
pub fn render(v: &Value, format: Format) -> String {
    let rounded = round_value(v, format.digits());
    let mut out = match format {
        Format::Machine => serde_json::to_string_pretty(&rounded).expect("report serializes"),
        Format::Human => {
            let mut s = String::new();
            human(&rounded, 0, &mut s);
            s.truncate(s.trim_end().len());
            s
        }
    };
    out.push('\n');
    out
}

/// One compact JSON line, for streamed records.
pub fn render_line(v: &Value, format: Format) -> String {
    let rounded = round_value(v, format.digits());
    match format {
        Format::Machine => serde_json::to_string(&rounded).expect("report serializes") + "\n",
        Format::Human => {
            let Value::Object(o) = &rounded else {
                return scalar(&rounded) + "\n";
            };
            let fields: Vec<String> = o
                .iter()
                .map(|(k, x)| format!("{k}={}", inline(x)))
                .collect();
            fields.join("  ") + "\n"
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => human_number(x),
            _ => n.to_string(),
        },
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn human_number(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || (1e-4..1e6).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn is_inline(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(inline).collect();
            format!("[{}]", items.join(", "))
        }
        Value::Object(o) => {
            let items: Vec<String> = o
                .iter()
                .map(|(k, x)| format!("{k}: {}", inline(x)))
                .collect();
            format!("{{{}}}", items.join(", "))
        }
        _ => scalar(v),
    }
}

fn human(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                if is_inline(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    human(x, indent + 1, out);
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                if is_inline(x) {
                    out.push_str(&format!("{pad}- {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    human(x, indent + 1, out);
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v))),
    }
}

pub fn vec_json(v: Vec3) -> Value {
    json!(v.to_array())
}

pub fn point_json(p: Point) -> Value {
    vec_json(p.coords)
}

pub fn screw_json(s: &Screw) -> Value {
    json!({
        "resultant": vec_json(s.resultant()),
        "moment_at_origin": vec_json(s.moment_at_origin()),
    })
}

pub fn axis_json(a: &ScrewAxis) -> Value {
    match a {
        ScrewAxis::Degenerate => json!({ "kind": "degenerate" }),
        ScrewAxis::Line { point, direction } => json!({
            "kind": "line",
            "point": point_json(*point),
            "direction": vec_json(*direction),
        }),
    }
}

pub fn pitch_json(p: &Pitch) -> Value {
    match p {
        Pitch::Finite(x) => json!(x),
        Pitch::Infinite => json!("infinite"),
        Pitch::ZeroScrew => json!("zero_screw"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round_sig(1.0 / 3.0, 6), 0.333333);
        assert_eq!(round_sig(-0.0, 12), 0.0);
        assert!(round_sig(-0.0, 12).is_sign_positive());
        assert_eq!(round_sig(123456.789, 3), 123000.0);
        assert_eq!(round_sig(2.0 / 3.0, 12), 0.666666666667);
    }

    #[test]
    fn human_listing() {
        let v = json!({ "a": [1.0, 2.5, 0.0], "b": { "c": "line" }, "d": null });
        assert_eq!(
            render(&v, Format::Human),
            "a: [1, 2.5, 0]\nb:\n  c: line\nd: none\n"
        );
    }

    #[test]
    fn machine_numbers_keep_twelve_digits() {
        let v = json!({ "x": std::f64::consts::PI });
        assert_eq!(
            render(&v, Format::Machine),
            "{\n  \"x\": 3.14159265359\n}\n"
        );
    }
}
