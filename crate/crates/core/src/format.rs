//! Relation documents: a JSON form for tooling and a 0/1 matrix form for people.
//!
//! JSON: `{"n": 3, "pairs": [[0,0],[1,1],[2,0],[2,1]]}`.
//! Matrix: `n` lines of `n` characters, row `x` column `y` is `1` iff `⟨x,y⟩ ∈ f`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::relation::{PointSet, Relation, MAX_POINTS};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDocument {
    pub n: usize,
    pub pairs: Vec<[usize; 2]>,
}

impl From<&Relation> for RelationDocument {
    fn from(f: &Relation) -> Self {
        RelationDocument {
            n: f.n(),
            pairs: f.pairs().map(|(x, y)| [x, y]).collect(),
        }
    }
}

impl Serialize for Relation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RelationDocument::from(self).serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{location}: malformed input: {detail}")]
    Malformed { location: String, detail: String },
    #[error("carrier must be nonempty")]
    EmptyCarrier,
    #[error("carrier of {n} points exceeds the supported maximum of {MAX_POINTS}")]
    CarrierTooLarge { n: usize },
    #[error("{location}: point {point} out of range 0..{n}")]
    OutOfRange {
        location: String,
        point: usize,
        n: usize,
    },
    #[error("{location}: duplicate pair [{x},{y}]")]
    Duplicate {
        location: String,
        x: usize,
        y: usize,
    },
}

impl ParseError {
    /// Stable short tag per error kind, used in diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            ParseError::Malformed { .. } => "malformed",
            ParseError::EmptyCarrier => "empty-carrier",
            ParseError::CarrierTooLarge { .. } => "carrier-too-large",
            ParseError::OutOfRange { .. } => "out-of-range",
            ParseError::Duplicate { .. } => "duplicate-pair",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Form {
    #[default]
    Json,
    Matrix,
}

impl RelationDocument {
    pub fn into_relation(self) -> Result<Relation, ParseError> {
        let n = self.n;
        match PointSet::new(n) {
            Ok(_) => {}
            Err(crate::relation::RelationError::EmptyCarrier) => {
                return Err(ParseError::EmptyCarrier)
            }
            Err(_) => return Err(ParseError::CarrierTooLarge { n }),
        }
        let mut rows = vec![0u64; n];
        for (i, &[x, y]) in self.pairs.iter().enumerate() {
            let location = format!("pairs[{i}]");
            for point in [x, y] {
                if point >= n {
                    return Err(ParseError::OutOfRange { location, point, n });
                }
            }
            if rows[x] >> y & 1 == 1 {
                return Err(ParseError::Duplicate { location, x, y });
            }
            rows[x] |= 1 << y;
        }
        Ok(Relation::from_rows(rows).expect("validated"))
    }
}

/// Parses either form; a leading `{` selects JSON.
pub fn parse_relation(text: &str) -> Result<Relation, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_matrix(text)
    }
}

fn parse_json(text: &str) -> Result<Relation, ParseError> {
    let doc: RelationDocument = serde_json::from_str(text).map_err(|e| ParseError::Malformed {
        location: format!("line {}, column {}", e.line(), e.column()),
        detail: e.to_string(),
    })?;
    doc.into_relation()
}

fn parse_matrix(text: &str) -> Result<Relation, ParseError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let n = lines.len();
    if n == 0 {
        return Err(ParseError::EmptyCarrier);
    }
    if n > MAX_POINTS {
        return Err(ParseError::CarrierTooLarge { n });
    }
    let mut rows = vec![0u64; n];
    for (x, &(lineno, line)) in lines.iter().enumerate() {
        let width = line.chars().count();
        if width != n {
            return Err(ParseError::Malformed {
                location: format!("line {lineno}"),
                detail: format!("expected {n} characters, found {width}"),
            });
        }
        for (y, c) in line.chars().enumerate() {
            match c {
                '0' => {}
                '1' => rows[x] |= 1 << y,
                other => {
                    return Err(ParseError::Malformed {
                        location: format!("line {lineno}, column {}", y + 1),
                        detail: format!("expected '0' or '1', found {other:?}"),
                    })
                }
            }
        }
    }
    Ok(Relation::from_rows(rows).expect("validated"))
}

pub fn serialize_relation(f: &Relation, form: Form) -> String {
    match form {
        Form::Json => {
            let mut s = serde_json::to_string(&RelationDocument::from(f)).expect("serializable");
            s.push('\n');
            s
        }
        Form::Matrix => {
            let mut s = String::with_capacity(f.n() * (f.n() + 1));
            for x in 0..f.n() {
                for y in 0..f.n() {
                    s.push(if f.contains(x, y) { '1' } else { '0' });
                }
                s.push('\n');
            }
            s
        }
    }
}
