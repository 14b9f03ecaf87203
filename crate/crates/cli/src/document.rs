//! JSON file formats: semi-brace documents and matched-product data.

use std::fmt::Write as _;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use semibrace::constructions::MatchedData;
use semibrace::{LeftSemiBrace, OpTable};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocumentError {
    #[error("line {line}: field `{field}`: {message}")]
    SchemaError {
        line: usize,
        field: String,
        message: String,
    },
    #[error(
        "field `{field}` row {row} column {col}: entry {value} is out of range for size {size}"
    )]
    RangeError {
        field: String,
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
}

/// A semi-brace on `0..size` given by its two Cayley tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemibraceDocument {
    pub name: String,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub dot: Vec<Vec<usize>>,
    pub circ: Vec<Vec<usize>>,
}

/// First line mentioning `"key"`, or 1.
fn line_of_key(text: &str, key: &str) -> usize {
    let quoted = format!("\"{key}\"");
    text.lines()
        .position(|l| l.contains(&quoted))
        .map_or(1, |i| i + 1)
}

fn parse_strict<T: DeserializeOwned>(text: &str) -> Result<T, DocumentError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        let message = inner.to_string();
        // missing and unknown fields are reported against the enclosing object
        let field = ["missing field `", "unknown field `"]
            .iter()
            .find_map(|p| message.strip_prefix(p))
            .and_then(|rest| rest.split('`').next())
            .map(str::to_string)
            .unwrap_or(if path == "." {
                "<document>".into()
            } else {
                path
            });
        DocumentError::SchemaError {
            line: inner.line(),
            field,
            message,
        }
    })
}

fn check_matrix(
    text: &str,
    field: &str,
    m: &[Vec<usize>],
    size: usize,
) -> Result<(), DocumentError> {
    let schema = |message: String| DocumentError::SchemaError {
        line: line_of_key(text, field),
        field: field.to_string(),
        message,
    };
    if m.len() != size {
        return Err(schema(format!("expected {size} rows, found {}", m.len())));
    }
    for (row, r) in m.iter().enumerate() {
        if r.len() != size {
            return Err(schema(format!(
                "row {row} has {} entries, expected {size}",
                r.len()
            )));
        }
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= size) {
            return Err(DocumentError::RangeError {
                field: field.to_string(),
                row,
                col,
                value,
                size,
            });
        }
    }
    Ok(())
}

impl SemibraceDocument {
    /// Parses and checks shapes and ranges. Does not check any algebra.
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: Self = parse_strict(text)?;
        doc.check_shape(text)?;
        Ok(doc)
    }

    fn check_shape(&self, text: &str) -> Result<(), DocumentError> {
        if self.size == 0 {
            return Err(DocumentError::SchemaError {
                line: line_of_key(text, "size"),
                field: "size".into(),
                message: "size must be positive".into(),
            });
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.size {
                return Err(DocumentError::SchemaError {
                    line: line_of_key(text, "labels"),
                    field: "labels".into(),
                    message: format!("expected {} labels, found {}", self.size, labels.len()),
                });
            }
        }
        check_matrix(text, "dot", &self.dot, self.size)?;
        check_matrix(text, "circ", &self.circ, self.size)
    }

    pub fn from_brace(name: impl Into<String>, b: &LeftSemiBrace) -> Self {
        Self {
            name: name.into(),
            size: b.size(),
            labels: None,
            dot: b.dot_table().to_rows(),
            circ: b.circ_group().table().to_rows(),
        }
    }

    pub fn dot_table(&self) -> OpTable {
        OpTable::from_rows(&self.dot).expect("shape checked on parse")
    }

    pub fn circ_table(&self) -> OpTable {
        OpTable::from_rows(&self.circ).expect("shape checked on parse")
    }

    pub fn to_brace(&self) -> semibrace::Result<LeftSemiBrace> {
        semibrace::semibrace::verify_left_semibrace(&self.dot_table(), &self.circ_table())
    }

    /// Canonical text: fixed key order, two-space indent, one matrix row
    /// per line, trailing newline.
    pub fn serialize(&self) -> String {
        let mut out = String::from("{\n");
        writeln!(out, "  \"name\": {},", json(&self.name)).unwrap();
        writeln!(out, "  \"size\": {},", self.size).unwrap();
        if let Some(labels) = &self.labels {
            writeln!(out, "  \"labels\": {},", json(labels)).unwrap();
        }
        write_matrix(&mut out, "dot", &self.dot);
        out.push_str(",\n");
        write_matrix(&mut out, "circ", &self.circ);
        out.push_str("\n}\n");
        out
    }

    /// Display name of element `x`.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("strings and vectors serialize")
}

fn write_matrix(out: &mut String, key: &str, m: &[Vec<usize>]) {
    writeln!(out, "  \"{key}\": [").unwrap();
    for (k, row) in m.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let sep = if k + 1 < m.len() { "," } else { "" };
        writeln!(out, "    [{}]{sep}", cells.join(", ")).unwrap();
    }
    out.push_str("  ]");
}

/// Input of `construct matched`: two semi-braces and the action tables,
/// `delta[a][x] = δ_a(x)` and `sigma[x][a] = σ_x(a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchedDocument {
    pub name: String,
    pub b: SemibraceDocument,
    pub s: SemibraceDocument,
    pub delta: Vec<Vec<usize>>,
    pub sigma: Vec<Vec<usize>>,
}

impl MatchedDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: Self = parse_strict(text)?;
        doc.b.check_shape(text)?;
        doc.s.check_shape(text)?;
        Ok(doc)
    }

    pub fn to_data(&self) -> semibrace::Result<MatchedData> {
        Ok(MatchedData {
            b: self.b.to_brace()?,
            s: self.s.to_brace()?,
            delta: self.delta.clone(),
            sigma: self.sigma.clone(),
        })
    }
}

/// Reads a bare `n×n` JSON matrix, or takes the `dot` table of a document.
pub fn parse_dot_table(text: &str) -> Result<OpTable, DocumentError> {
    if let Ok(doc) = SemibraceDocument::parse(text) {
        return Ok(doc.dot_table());
    }
    let rows: Vec<Vec<usize>> = parse_strict(text)?;
    check_matrix(text, "dot", &rows, rows.len())?;
    if rows.is_empty() {
        return Err(DocumentError::SchemaError {
            line: 1,
            field: "dot".into(),
            message: "table is empty".into(),
        });
    }
    Ok(OpTable::from_rows(&rows).expect("shape checked"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"{"name": "t", "size": 2, "dot": [[0,1],[0,1]], "circ": [[0,1],[1,0]]}"#;

    #[test]
    fn parses_and_canonicalizes() {
        let d = SemibraceDocument::parse(SMALL).unwrap();
        let text = d.serialize();
        assert_eq!(
            text,
            "{\n  \"name\": \"t\",\n  \"size\": 2,\n  \"dot\": [\n    [0, 1],\n    [0, 1]\n  ],\n  \"circ\": [\n    [0, 1],\n    [1, 0]\n  ]\n}\n"
        );
        assert_eq!(SemibraceDocument::parse(&text).unwrap(), d);
        assert!(d.to_brace().is_ok());
    }

    #[test]
    fn range_error() {
        let bad = SMALL.replace("[[0,1],[1,0]]", "[[0,1],[1,2]]");
        assert_eq!(
            SemibraceDocument::parse(&bad),
            Err(DocumentError::RangeError {
                field: "circ".into(),
                row: 1,
                col: 1,
                value: 2,
                size: 2
            })
        );
    }

    #[test]
    fn schema_errors_name_the_field() {
        let missing = r#"{"name": "t",
"size": 1,
"dot": [[0]]}"#;
        match SemibraceDocument::parse(missing) {
            Err(DocumentError::SchemaError { field, line, .. }) => {
                assert_eq!(field, "circ");
                assert_eq!(line, 3);
            }
            other => panic!("{other:?}"),
        }
        let unknown = SMALL.replace("\"size\"", "\"extra\": 1, \"size\"");
        assert!(matches!(
            SemibraceDocument::parse(&unknown),
            Err(DocumentError::SchemaError { field, .. }) if field == "extra"
        ));
        let wrong_type = SMALL.replace("\"size\": 2", "\"size\": \"two\"");
        assert!(matches!(
            SemibraceDocument::parse(&wrong_type),
            Err(DocumentError::SchemaError { field, .. }) if field == "size"
        ));
        let short_row = SMALL.replace("[[0,1],[0,1]]", "[[0,1],[0]]");
        assert!(matches!(
            SemibraceDocument::parse(&short_row),
            Err(DocumentError::SchemaError { field, .. }) if field == "dot"
        ));
    }

    #[test]
    fn labels_must_match_size() {
        let labelled = SMALL.replace("\"size\": 2,", "\"size\": 2, \"labels\": [\"e\"],");
        assert!(SemibraceDocument::parse(&labelled).is_err());
        let ok = SMALL.replace("\"size\": 2,", "\"size\": 2, \"labels\": [\"e\", \"s\"],");
        let d = SemibraceDocument::parse(&ok).unwrap();
        assert_eq!(d.label(1), "s");
        assert!(d.serialize().contains("\"labels\": [\"e\",\"s\"],"));
    }
}
