//! Input and output document schemas for the CLI.
//!
//! Documents are single-line JSON objects. Floats that may be infinite
//! (NFA edge labels) are written as the strings `"inf"` / `"-inf"`;
//! everything else is a plain JSON number. See the README for the full
//! format reference.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::geom::{Circle, HyperRect, Polygon};
use crate::nfa::{Nfa, NfaEdge, NfaState, SequenceInput, SequencePoint};
use crate::{Error, Result};

/// An `f64` whose JSON form spells infinities out as `"inf"` / `"-inf"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtFloat(pub f64);

impl Serialize for ExtFloat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0 == f64::INFINITY {
            s.serialize_str("inf")
        } else if self.0 == f64::NEG_INFINITY {
            s.serialize_str("-inf")
        } else {
            s.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for ExtFloat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(ExtFloat(v)),
            Raw::Text(t) => match t.as_str() {
                "inf" | "+inf" => Ok(ExtFloat(f64::INFINITY)),
                "-inf" => Ok(ExtFloat(f64::NEG_INFINITY)),
                other => Err(serde::de::Error::custom(format!(
                    "expected a number, \"inf\" or \"-inf\", got \"{other}\""
                ))),
            },
        }
    }
}

/// Box corners in a document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoxCorners {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

/// One weighted sequence point; the weight defaults to 1.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SequencePointDoc {
    pub coords: Vec<f64>,
    #[serde(default = "default_weight")]
    pub weight: f64,
}

fn default_weight() -> f64 {
    1.0
}

/// Automaton state flags in a document.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct NfaStateDoc {
    #[serde(default)]
    pub initial: bool,
    #[serde(default, rename = "final")]
    pub accepting: bool,
}

/// Automaton edge in a document; label endpoints may be `"inf"`/`"-inf"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NfaEdgeDoc {
    pub from: usize,
    pub to: usize,
    pub labels: Vec<[ExtFloat; 2]>,
}

/// A whole automaton, as read from `--nfa` files or inline in an
/// `nfa-instance` document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NfaDoc {
    pub states: Vec<NfaStateDoc>,
    pub edges: Vec<NfaEdgeDoc>,
}

impl NfaDoc {
    pub fn to_nfa(&self) -> Nfa {
        Nfa::new(
            self.states
                .iter()
                .map(|s| NfaState {
                    initial: s.initial,
                    accepting: s.accepting,
                })
                .collect(),
            self.edges
                .iter()
                .map(|e| NfaEdge {
                    from: e.from,
                    to: e.to,
                    labels: e.labels.iter().map(|[a, b]| (a.0, b.0)).collect(),
                })
                .collect(),
        )
    }

    pub fn from_nfa(nfa: &Nfa) -> Self {
        NfaDoc {
            states: nfa
                .states()
                .iter()
                .map(|s| NfaStateDoc {
                    initial: s.initial,
                    accepting: s.accepting,
                })
                .collect(),
            edges: nfa
                .edges()
                .iter()
                .map(|e| NfaEdgeDoc {
                    from: e.from,
                    to: e.to,
                    labels: e
                        .labels
                        .iter()
                        .map(|&(a, b)| [ExtFloat(a), ExtFloat(b)])
                        .collect(),
                })
                .collect(),
        }
    }
}

/// The kinds of input the CLI understands, tagged by `"kind"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum InputDocument {
    #[serde(rename = "points2d")]
    Points2d { points: Vec<[f64; 2]> },
    #[serde(rename = "circles")]
    Circles { circles: Vec<[f64; 3]> },
    #[serde(rename = "polygons")]
    Polygons { polygons: Vec<Vec<[f64; 2]>> },
    #[serde(rename = "boxes")]
    Boxes { d: usize, boxes: Vec<BoxCorners> },
    #[serde(rename = "nfa-instance")]
    NfaInstance {
        d: usize,
        points: Vec<SequencePointDoc>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        nfa: Option<NfaDoc>,
    },
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serialization cannot fail")
    }

    fn kind(&self) -> &'static str {
        match self {
            InputDocument::Points2d { .. } => "points2d",
            InputDocument::Circles { .. } => "circles",
            InputDocument::Polygons { .. } => "polygons",
            InputDocument::Boxes { .. } => "boxes",
            InputDocument::NfaInstance { .. } => "nfa-instance",
        }
    }

    fn wrong_kind(&self, wanted: &str) -> Error {
        Error::invalid(format!(
            "expected a \"{wanted}\" document, got \"{}\"",
            self.kind()
        ))
    }

    pub fn into_points2d(self) -> Result<Vec<[f64; 2]>> {
        match self {
            InputDocument::Points2d { points } => {
                if points.iter().flatten().any(|c| !c.is_finite()) {
                    return Err(Error::invalid("points must be finite"));
                }
                Ok(points)
            }
            other => Err(other.wrong_kind("points2d")),
        }
    }

    pub fn into_circles(self) -> Result<Vec<Circle>> {
        match self {
            InputDocument::Circles { circles } => circles
                .into_iter()
                .map(|[cx, cy, r]| Circle::new(cx, cy, r))
                .collect(),
            other => Err(other.wrong_kind("circles")),
        }
    }

    pub fn into_polygons(self) -> Result<Vec<Polygon>> {
        match self {
            InputDocument::Polygons { polygons } => {
                polygons.into_iter().map(Polygon::new).collect()
            }
            other => Err(other.wrong_kind("polygons")),
        }
    }

    pub fn into_boxes(self) -> Result<(usize, Vec<HyperRect>)> {
        match self {
            InputDocument::Boxes { d, boxes } => {
                let rects: Vec<HyperRect> = boxes
                    .into_iter()
                    .map(|b| HyperRect::new(b.lo, b.hi))
                    .collect::<Result<_>>()?;
                for r in &rects {
                    if r.dim() != d {
                        return Err(Error::DimensionMismatch {
                            expected: d,
                            got: r.dim(),
                        });
                    }
                }
                Ok((d, rects))
            }
            other => Err(other.wrong_kind("boxes")),
        }
    }

    /// The sequence and, when present, the inline automaton.
    pub fn into_sequence(self) -> Result<(SequenceInput, Option<Nfa>)> {
        match self {
            InputDocument::NfaInstance { d, points, nfa } => {
                let input = SequenceInput::new(
                    d,
                    points
                        .into_iter()
                        .map(|p| SequencePoint {
                            coords: p.coords,
                            weight: p.weight,
                        })
                        .collect(),
                )?;
                Ok((input, nfa.map(|doc| doc.to_nfa())))
            }
            other => Err(other.wrong_kind("nfa-instance")),
        }
    }
}

/// Verification block appended by `--verify`.
#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub method: String,
    pub matches: bool,
    pub detail: String,
}

/// The document every subcommand prints: the command echo, its result
/// payload, and optional timing/verification blocks.
#[derive(Debug, Serialize)]
pub struct OutputDocument {
    pub command: String,
    pub result: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
}

impl OutputDocument {
    pub fn new(command: &str, result: serde_json::Value) -> Self {
        OutputDocument {
            command: command.to_string(),
            result,
            timing_ms: None,
            verification: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serialization cannot fail")
    }
}
