use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use crate::opts::Format;

/// One cell of a row, carrying its own deterministic rendering.
pub enum Field {
    UInt(u64),
    Int(i64),
    /// Rendered with exactly 6 fractional digits, round-half-even.
    Float(f64),
    Bool(bool),
    Str(&'static str),
    /// Empty CSV cell / JSON null when absent.
    OptUInt(Option<u64>),
}

impl Field {
    fn csv(&self) -> String {
        match self {
            Field::UInt(x) => x.to_string(),
            Field::Int(x) => x.to_string(),
            Field::Float(x) => fmt_f64(*x),
            Field::Bool(x) => x.to_string(),
            Field::Str(s) => (*s).to_string(),
            Field::OptUInt(x) => x.map(|v| v.to_string()).unwrap_or_default(),
        }
    }

    fn json(&self) -> String {
        match self {
            Field::Str(s) => json_string(s),
            Field::OptUInt(None) => "null".to_string(),
            _ => self.csv(),
        }
    }
}

/// Exactly 6 fractional digits; negative zero is normalized away so equal
/// values never print differently.
pub fn fmt_f64(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Open the output target: the given file, or standard output.
pub fn open_sink(out: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

/// Row writer for one command's output: CSV with a leading header and
/// `#`-prefixed comments, or JSON with one object per row and comments as
/// `{"comment": ...}` objects. Lines always end with `\n`.
pub struct Emitter {
    sink: Box<dyn Write>,
    format: Format,
    columns: Vec<&'static str>,
}

impl Emitter {
    pub fn new(sink: Box<dyn Write>, format: Format, columns: &[&'static str]) -> io::Result<Self> {
        let mut emitter = Emitter {
            sink,
            format,
            columns: columns.to_vec(),
        };
        if emitter.format == Format::Csv {
            writeln!(emitter.sink, "{}", emitter.columns.join(","))?;
        }
        Ok(emitter)
    }

    pub fn row(&mut self, fields: &[Field]) -> io::Result<()> {
        debug_assert_eq!(fields.len(), self.columns.len());
        match self.format {
            Format::Csv => {
                let cells: Vec<String> = fields.iter().map(Field::csv).collect();
                writeln!(self.sink, "{}", cells.join(","))
            }
            Format::Json => {
                let pairs: Vec<String> = self
                    .columns
                    .iter()
                    .zip(fields)
                    .map(|(name, field)| format!("{}:{}", json_string(name), field.json()))
                    .collect();
                writeln!(self.sink, "{{{}}}", pairs.join(","))
            }
        }
    }

    pub fn comment(&mut self, text: &str) -> io::Result<()> {
        match self.format {
            Format::Csv => writeln!(self.sink, "# {text}"),
            Format::Json => writeln!(self.sink, "{{\"comment\":{}}}", json_string(text)),
        }
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.sink.flush()
    }
}
