use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::numeric::{fmt_rational, fmt_sig, BoundValue};

/// Report node. Maps are key-sorted, reals print with 12 significant digits,
/// so rendering is byte-stable.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Null,
    Bool(bool),
    Int(BigInt),
    Real(f64),
    Rational(BigRational),
    Text(String),
    List(Vec<Value>),
    Map(BTreeMap<String, Value>),
}

/// Output flavour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    /// Indented `key: value` text.
    #[default]
    Text,
    /// JSON with the same tree.
    Structured,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Map(BTreeMap<String, Value>);

impl Map {
    pub fn new() -> Self {
        Map::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), value.into());
        self
    }

    pub fn insert(&mut self, key: &str, value: impl Into<Value>) {
        self.0.insert(key.to_string(), value.into());
    }
}

impl From<Map> for Value {
    fn from(m: Map) -> Self {
        Value::Map(m.0)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

macro_rules! int_value {
    ($($t:ty),*) => {$(
        impl From<$t> for Value {
            fn from(v: $t) -> Self {
                Value::Int(BigInt::from(v))
            }
        }
    )*};
}
int_value!(u32, u64, usize, i64);

impl From<BigInt> for Value {
    fn from(v: BigInt) -> Self {
        Value::Int(v)
    }
}

impl From<&BigInt> for Value {
    fn from(v: &BigInt) -> Self {
        Value::Int(v.clone())
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Real(v)
    }
}

impl From<BigRational> for Value {
    fn from(v: BigRational) -> Self {
        Value::Rational(v)
    }
}

impl From<&BigRational> for Value {
    fn from(v: &BigRational) -> Self {
        Value::Rational(v.clone())
    }
}

impl From<&BoundValue> for Value {
    fn from(v: &BoundValue) -> Self {
        match &v.exact {
            Some(r) => Value::Rational(r.clone()),
            None => Value::Real(v.value),
        }
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(v: Vec<T>) -> Self {
        Value::List(v.into_iter().map(Into::into).collect())
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        v.map_or(Value::Null, Into::into)
    }
}

impl Value {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = String::new();
                match self {
                    Value::Map(m) => write_map(&mut out, m, 0),
                    other => {
                        out.push_str(&scalar_text(other));
                        out.push('\n');
                    }
                }
                out
            }
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable tree");
                s.push('\n');
                s
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::Value as J;
        match self {
            Value::Null => J::Null,
            Value::Bool(b) => J::Bool(*b),
            Value::Int(i) => match i.to_i64() {
                Some(v) => J::from(v),
                None => J::String(i.to_string()),
            },
            Value::Real(x) => real_json(*x),
            Value::Rational(r) => {
                let mut m = serde_json::Map::new();
                m.insert("exact".into(), J::String(fmt_rational(r)));
                m.insert("value".into(), real_json(r.to_f64().unwrap_or(f64::NAN)));
                J::Object(m)
            }
            Value::Text(s) => J::String(s.clone()),
            Value::List(items) => J::Array(items.iter().map(Value::to_json).collect()),
            Value::Map(m) => J::Object(m.iter().map(|(k, v)| (k.clone(), v.to_json())).collect()),
        }
    }

    /// Looks up a `/`-separated path of map keys and list indices.
    pub fn at(&self, path: &str) -> Option<&Value> {
        path.split('/').filter(|p| !p.is_empty()).try_fold(self, |node, key| match node {
            Value::Map(m) => m.get(key),
            Value::List(items) => key.parse::<usize>().ok().and_then(|i| items.get(i)),
            _ => None,
        })
    }
}

fn real_json(x: f64) -> serde_json::Value {
    let text = fmt_sig(x);
    match text.parse::<f64>() {
        Ok(v) if v.is_finite() => serde_json::Number::from_f64(v).map_or(serde_json::Value::String(text), Into::into),
        _ => serde_json::Value::String(text),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::Bool(b) => b.to_string(),
        Value::Int(i) => i.to_string(),
        Value::Real(x) => fmt_sig(*x),
        Value::Rational(r) => {
            let exact = fmt_rational(r);
            if r.is_integer() {
                exact
            } else {
                format!("{exact} ({})", fmt_sig(r.to_f64().unwrap_or(f64::NAN)))
            }
        }
        Value::Text(s) => s.clone(),
        Value::List(l) if l.is_empty() => "[]".into(),
        Value::Map(m) if m.is_empty() => "{}".into(),
        Value::List(_) | Value::Map(_) => unreachable!("containers are written by write_map/write_list"),
    }
}

fn is_scalar(v: &Value) -> bool {
    match v {
        Value::List(l) => l.is_empty(),
        Value::Map(m) => m.is_empty(),
        _ => true,
    }
}

fn write_map(out: &mut String, m: &BTreeMap<String, Value>, depth: usize) {
    let pad = "  ".repeat(depth);
    for (k, v) in m {
        if is_scalar(v) {
            out.push_str(&format!("{pad}{k}: {}\n", scalar_text(v)));
        } else {
            out.push_str(&format!("{pad}{k}:\n"));
            write_container(out, v, depth + 1);
        }
    }
}

fn write_container(out: &mut String, v: &Value, depth: usize) {
    match v {
        Value::Map(m) => write_map(out, m, depth),
        Value::List(items) => {
            let pad = "  ".repeat(depth);
            for item in items {
                if is_scalar(item) {
                    out.push_str(&format!("{pad}- {}\n", scalar_text(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    write_container(out, item, depth + 1);
                }
            }
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn sample() -> Value {
        Map::new()
            .with("b", vec![1u64, 2])
            .with("a", Map::new().with("alpha", rat(6, 7)).with("x", 0.5))
            .with("c", Vec::<Value>::new())
            .with("d", Option::<u64>::None)
            .into()
    }

    #[test]
    fn text_is_sorted_and_indented() {
        assert_eq!(
            sample().render(Format::Text),
            "a:\n  alpha: 6/7 (0.857142857143)\n  x: 0.5\nb:\n  - 1\n  - 2\nc: []\nd: -\n"
        );
    }

    #[test]
    fn json_mirrors_tree() {
        let j = sample().render(Format::Structured);
        let parsed: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(parsed["a"]["alpha"]["exact"], "6/7");
        assert_eq!(parsed["a"]["x"], 0.5);
        assert_eq!(parsed["b"][1], 2);
        assert!(parsed["d"].is_null());
    }

    #[test]
    fn path_lookup() {
        let v = sample();
        assert_eq!(v.at("b/1"), Some(&Value::Int(2.into())));
        assert_eq!(v.at("a/x"), Some(&Value::Real(0.5)));
        assert_eq!(v.at("a/missing"), None);
    }
}
