//! JSON documents for every structure family. Parsing validates through each family's own
//! constructor, so a parsed [`Structure`] always satisfies its axioms.

use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::arithmetic::{from_presentation, AbelianPresentation, ArithMatroid};
use crate::colored::ColoredMatroid;
use crate::delta_persp::{DMPerspective, FeasibleFamily, Perspective};
use crate::graph::EdgeGraph;
use crate::matroid::RankTable;
use crate::minors::{Subset, MAX_GROUND};
use crate::polysub::SubmodTable;
use crate::relative::RelMatroid;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("invalid structure: {0}")]
    Invalid(String),
}

fn invalid(e: impl std::fmt::Display) -> IoError {
    IoError::Invalid(e.to_string())
}

#[derive(Deserialize)]
struct RawMatroid {
    n: usize,
    #[serde(default)]
    rank: Option<Vec<u8>>,
    #[serde(default)]
    bases: Option<Vec<Vec<usize>>>,
}

#[derive(Deserialize)]
struct RawDelta {
    n: usize,
    feasible: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum RawDoc {
    Matroid(RawMatroid),
    Graph {
        vertices: usize,
        edges: Vec<[usize; 2]>,
    },
    Delta(RawDelta),
    Perspective {
        #[serde(rename = "M")]
        m: RawMatroid,
        #[serde(rename = "Mprime")]
        mp: RawMatroid,
    },
    Dmp {
        #[serde(rename = "M")]
        m: RawMatroid,
        #[serde(rename = "D")]
        d: RawDelta,
        #[serde(rename = "Mprime")]
        mp: RawMatroid,
    },
    Relative {
        matroid: RawMatroid,
        zero_set: Vec<usize>,
    },
    Submodular {
        n: usize,
        rank: Vec<i64>,
        #[serde(default)]
        polymatroid: bool,
    },
    Colored {
        matroid: RawMatroid,
        colors: Vec<String>,
    },
    Arithmetic {
        matroid: RawMatroid,
        multiplicity: Vec<u64>,
    },
    ArithmeticPresentation {
        free_rank: usize,
        torsion: Vec<i64>,
        columns: Vec<Vec<i64>>,
    },
}

/// A validated structure of any family.
#[derive(Clone, Debug, PartialEq)]
pub enum Structure {
    Matroid(RankTable),
    Graph(EdgeGraph),
    Delta(FeasibleFamily),
    Perspective(Perspective),
    Dmp(DMPerspective),
    Relative(RelMatroid),
    Submodular(SubmodTable),
    Colored(ColoredMatroid),
    Arithmetic(ArithMatroid),
    /// Keeps the presentation for serialization next to the matroid it induces.
    Presentation(AbelianPresentation, ArithMatroid),
}

fn mask(elems: &[usize], n: usize) -> Result<Subset, IoError> {
    let mut out: Subset = 0;
    for &e in elems {
        if e >= n {
            return Err(IoError::Schema(format!("element {e} outside a ground set of size {n}")));
        }
        out |= 1 << e;
    }
    Ok(out)
}

fn ground(n: usize) -> Result<(), IoError> {
    if n > MAX_GROUND {
        return Err(IoError::Schema(format!("ground set of size {n} exceeds {MAX_GROUND}")));
    }
    Ok(())
}

fn matroid(raw: RawMatroid) -> Result<RankTable, IoError> {
    ground(raw.n)?;
    match (raw.rank, raw.bases) {
        (Some(rk), None) => RankTable::new(raw.n, rk).map_err(invalid),
        (None, Some(bases)) => {
            let masks = bases.iter().map(|b| mask(b, raw.n)).collect::<Result<Vec<_>, _>>()?;
            RankTable::from_bases(raw.n, &masks).map_err(invalid)
        }
        _ => Err(IoError::Schema("a matroid needs exactly one of \"rank\" or \"bases\"".into())),
    }
}

fn delta(raw: RawDelta) -> Result<FeasibleFamily, IoError> {
    ground(raw.n)?;
    let sets = raw.feasible.iter().map(|s| mask(s, raw.n)).collect::<Result<Vec<_>, _>>()?;
    FeasibleFamily::new(raw.n, sets).map_err(invalid)
}

impl Structure {
    pub fn parse_str(text: &str) -> Result<Self, IoError> {
        let v: Value = serde_json::from_str(text)?;
        Structure::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Self, IoError> {
        let raw: RawDoc = serde_json::from_value(v.clone()).map_err(|e| IoError::Schema(e.to_string()))?;
        Ok(match raw {
            RawDoc::Matroid(m) => Structure::Matroid(matroid(m)?),
            RawDoc::Graph { vertices, edges } => {
                let edges = edges.into_iter().map(|[s, t]| (s, t)).collect();
                Structure::Graph(EdgeGraph::new(vertices, edges).map_err(invalid)?)
            }
            RawDoc::Delta(d) => Structure::Delta(delta(d)?),
            RawDoc::Perspective { m, mp } => {
                Structure::Perspective(Perspective::new(matroid(m)?, matroid(mp)?).map_err(invalid)?)
            }
            RawDoc::Dmp { m, d, mp } => {
                Structure::Dmp(DMPerspective::new(matroid(m)?, delta(d)?, matroid(mp)?).map_err(invalid)?)
            }
            RawDoc::Relative { matroid: m, zero_set } => {
                let m = matroid(m)?;
                let z = mask(&zero_set, m.size())?;
                Structure::Relative(RelMatroid::new(m, z).map_err(invalid)?)
            }
            RawDoc::Submodular { n, rank, polymatroid } => {
                ground(n)?;
                let t = if polymatroid { SubmodTable::polymatroid(n, rank) } else { SubmodTable::new(n, rank) };
                Structure::Submodular(t.map_err(invalid)?)
            }
            RawDoc::Colored { matroid: m, colors } => {
                Structure::Colored(ColoredMatroid::new(matroid(m)?, colors).map_err(IoError::Invalid)?)
            }
            RawDoc::Arithmetic { matroid: m, multiplicity } => {
                Structure::Arithmetic(ArithMatroid::new(matroid(m)?, multiplicity).map_err(invalid)?)
            }
            RawDoc::ArithmeticPresentation { free_rank, torsion, columns } => {
                let p = AbelianPresentation::new(free_rank, torsion, columns).map_err(invalid)?;
                let a = from_presentation(&p).map_err(invalid)?;
                Structure::Presentation(p, a)
            }
        })
    }

    pub fn to_json(&self) -> Value {
        match self {
            Structure::Matroid(m) => m.to_json(),
            Structure::Graph(g) => g.to_json(),
            Structure::Delta(d) => d.to_json(),
            Structure::Perspective(p) => p.to_json(),
            Structure::Dmp(t) => t.to_json(),
            Structure::Relative(r) => r.to_json(),
            Structure::Submodular(s) => s.to_json(),
            Structure::Colored(c) => c.to_json(),
            Structure::Arithmetic(a) => a.to_json(),
            Structure::Presentation(p, _) => p.to_json(),
        }
    }

    /// Size of the ground set that minors act on.
    pub fn size(&self) -> usize {
        match self {
            Structure::Matroid(m) => m.size(),
            Structure::Graph(g) => g.size(),
            Structure::Delta(d) => d.size(),
            Structure::Perspective(p) => p.size(),
            Structure::Dmp(t) => t.size(),
            Structure::Relative(r) => r.size(),
            Structure::Submodular(s) => s.size(),
            Structure::Colored(c) => c.size(),
            Structure::Arithmetic(a) | Structure::Presentation(_, a) => a.size(),
        }
    }

    /// The `"type"` discriminator.
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Matroid(_) => "matroid",
            Structure::Graph(_) => "graph",
            Structure::Delta(_) => "delta",
            Structure::Perspective(_) => "perspective",
            Structure::Dmp(_) => "dmp",
            Structure::Relative(_) => "relative",
            Structure::Submodular(_) => "submodular",
            Structure::Colored(_) => "colored",
            Structure::Arithmetic(_) => "arithmetic",
            Structure::Presentation(..) => "arithmetic_presentation",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn roundtrip(v: Value) -> Structure {
        let s = Structure::from_json(&v).unwrap();
        let again = Structure::from_json(&s.to_json()).unwrap();
        assert_eq!(s, again);
        assert_eq!(s.to_json(), again.to_json());
        s
    }

    #[test]
    fn every_schema_round_trips() {
        let u12 = json!({"type": "matroid", "n": 2, "rank": [0, 1, 1, 1]});
        let s = roundtrip(json!({"type": "matroid", "n": 2, "bases": [[0], [1]]}));
        assert_eq!(s, Structure::Matroid(RankTable::uniform(1, 2)));
        roundtrip(u12.clone());
        roundtrip(json!({"type": "graph", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 0]]}));
        roundtrip(json!({"type": "delta", "n": 2, "feasible": [[], [0], [1], [0, 1]]}));
        let coloop = json!({"type": "matroid", "n": 1, "rank": [0, 1]});
        let lp = json!({"type": "matroid", "n": 1, "rank": [0, 0]});
        roundtrip(json!({"type": "perspective", "M": coloop, "Mprime": lp}));
        roundtrip(json!({"type": "dmp", "M": coloop, "D": {"n": 1, "feasible": [[], [0]]}, "Mprime": lp}));
        roundtrip(json!({"type": "relative", "matroid": u12, "zero_set": [0]}));
        roundtrip(json!({"type": "submodular", "n": 1, "rank": [0, -2]}));
        roundtrip(json!({"type": "colored", "matroid": u12, "colors": ["red", "blue"]}));
        roundtrip(json!({"type": "arithmetic", "matroid": coloop, "multiplicity": [1, 2]}));
        let s = roundtrip(json!({"type": "arithmetic_presentation", "free_rank": 0, "torsion": [6], "columns": [[1], [8]]}));
        assert_eq!(s.to_json()["columns"], json!([[1], [2]]));
    }

    #[test]
    fn invalid_documents_are_rejected() {
        let bad = [
            json!({"type": "matroid", "n": 2, "rank": [0, 1, 1, 3]}),
            json!({"type": "matroid", "n": 2}),
            json!({"type": "nonsense"}),
            json!({"type": "delta", "n": 3, "feasible": [[0, 1], [2]]}),
            json!({"type": "delta", "n": 1, "feasible": [[4]]}),
            json!({"type": "submodular", "n": 1, "rank": [0, -1], "polymatroid": true}),
            json!({"type": "arithmetic", "matroid": {"n": 1, "rank": [0, 1]}, "multiplicity": [2, 3]}),
            json!({"type": "arithmetic_presentation", "free_rank": 0, "torsion": [1], "columns": []}),
        ];
        for v in bad {
            assert!(Structure::from_json(&v).is_err(), "{v}");
        }
        assert!(matches!(Structure::parse_str("{"), Err(IoError::Json(_))));
    }
}
