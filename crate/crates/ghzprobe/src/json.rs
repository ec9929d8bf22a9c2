//! JSON emission with every double written to 17 significant digits.

use std::io;

use serde::ser::{Serialize, SerializeMap, Serializer};
use serde_json::ser::{Formatter, PrettyFormatter};

/// Formats `v` with 17 significant digits. Magnitudes in `[1e-5, 1e17)`
/// use positional notation, everything else scientific. Non-finite values
/// give `None`.
pub fn format_f64(v: f64) -> Option<String> {
    if !v.is_finite() {
        return None;
    }
    if v == 0.0 {
        return Some(if v.is_sign_negative() { "-0.0" } else { "0.0" }.to_string());
    }
    let sci = format!("{v:.16e}");
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..]
        .parse()
        .expect("integer exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp).max(1) as usize;
        Some(format!("{v:.decimals$}"))
    } else {
        Some(sci)
    }
}

/// [`format_f64`] with `NaN`/`inf` spelled out, for text and CSV output.
pub fn format_f64_text(v: f64) -> String {
    format_f64(v).unwrap_or_else(|| v.to_string())
}

#[derive(Default)]
struct Digits17<'a> {
    pretty: PrettyFormatter<'a>,
}

impl Formatter for Digits17<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        match format_f64(value) {
            Some(s) => writer.write_all(s.as_bytes()),
            None => writer.write_all(b"null"),
        }
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.begin_array(writer)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_array(writer)
    }

    fn begin_array_value<W: ?Sized + io::Write>(
        &mut self,
        writer: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.pretty.begin_array_value(writer, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_array_value(writer)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.begin_object(writer)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_object(writer)
    }

    fn begin_object_key<W: ?Sized + io::Write>(
        &mut self,
        writer: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.pretty.begin_object_key(writer, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.begin_object_value(writer)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_object_value(writer)
    }
}

/// Pretty-printed JSON followed by a newline.
pub fn to_string<T: Serialize + ?Sized>(value: &T) -> serde_json::Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Digits17::default());
    value.serialize(&mut ser)?;
    out.push(b'\n');
    Ok(String::from_utf8(out).expect("serde_json writes UTF-8"))
}

/// A JSON object whose keys keep insertion order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct OrderedMap<V>(pub Vec<(String, V)>);

impl<V: Serialize> Serialize for OrderedMap<V> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_f64(2f64.sqrt()).unwrap(), "1.4142135623730951");
        assert_eq!(format_f64(2.0).unwrap(), "2.0000000000000000");
        assert_eq!(format_f64(0.1).unwrap(), "0.10000000000000001");
        assert_eq!(format_f64(1e-20).unwrap(), "9.9999999999999995e-21");
        assert_eq!(
            format_f64(2f64.powi(-70)).unwrap(),
            "8.4703294725430034e-22"
        );
        assert_eq!(format_f64(-3.0e20).unwrap(), "-3.0000000000000000e20");
        assert_eq!(format_f64(0.0).unwrap(), "0.0");
        assert_eq!(format_f64(f64::NAN), None);
    }

    #[test]
    fn round_trips() {
        for v in [
            0.1,
            1.0 / 3.0,
            123456.789,
            1e-300,
            -2.5e-7,
            9.99999999999999e16,
            f64::MAX,
        ] {
            let s = format_f64(v).unwrap();
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
    }

    #[test]
    fn json_output() {
        let map = OrderedMap(vec![
            ("b".to_string(), 0.5),
            ("a".to_string(), f64::INFINITY),
        ]);
        let s = to_string(&map).unwrap();
        assert_eq!(s, "{\n  \"b\": 0.50000000000000000,\n  \"a\": null\n}\n");
        let back: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["b"], 0.5);
    }
}
