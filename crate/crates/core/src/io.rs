//! JSON interchange for quivers and angulations, and DOT export.
//!
//! Output is canonical: object keys sorted, arrows and arcs in canonical
//! order, so equal values serialize to identical bytes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::annulus::{AnnulusAngulation, AnnulusConfig, ArcClass};
use crate::disk::{Diagonal, DiskAngulation, DiskConfig};
use crate::quiver::{Color, ColoredQuiver};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowJson {
    from: usize,
    to: usize,
    color: Color,
    mult: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverJson {
    m: Color,
    vertices: usize,
    arrows: Vec<ArrowJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum AngulationJson {
    Disk {
        m: u32,
        sides: u32,
        diagonals: Vec<[u32; 2]>,
    },
    Annulus {
        m: u32,
        p: u32,
        q: u32,
        arcs: Vec<ArcClass>,
    },
}

/// A disk or annulus angulation read from JSON.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyAngulation {
    Disk(DiskAngulation),
    Annulus(AnnulusAngulation),
}

impl From<DiskAngulation> for AnyAngulation {
    fn from(a: DiskAngulation) -> Self {
        AnyAngulation::Disk(a)
    }
}

impl From<AnnulusAngulation> for AnyAngulation {
    fn from(a: AnnulusAngulation) -> Self {
        AnyAngulation::Annulus(a)
    }
}

fn canonical<T: Serialize>(value: &T) -> String {
    // Round-tripping through `Value` sorts object keys.
    let v = serde_json::to_value(value).expect("model types serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

pub fn quiver_to_json(q: &ColoredQuiver) -> String {
    canonical(&QuiverJson {
        m: q.m(),
        vertices: q.vertex_count(),
        arrows: q
            .arrows()
            .map(|(from, to, color, mult)| ArrowJson {
                from,
                to,
                color,
                mult,
            })
            .collect(),
    })
}

/// Parses a quiver without checking the axioms; see
/// [`ColoredQuiver::validate`]. Repeated arrows add up.
pub fn quiver_from_json(text: &str) -> Result<ColoredQuiver, Error> {
    let j: QuiverJson = serde_json::from_str(text)?;
    let mut q = ColoredQuiver::new(j.m, j.vertices)?;
    for a in j.arrows {
        q.add_arrows(a.from, a.to, a.color, a.mult)?;
    }
    Ok(q)
}

pub fn angulation_to_json(a: &AnyAngulation) -> String {
    match a {
        AnyAngulation::Disk(d) => disk_to_json(d),
        AnyAngulation::Annulus(x) => annulus_to_json(x),
    }
}

pub fn disk_to_json(a: &DiskAngulation) -> String {
    let c = a.config();
    canonical(&AngulationJson::Disk {
        m: c.m(),
        sides: c.sides(),
        diagonals: a.diagonals().iter().map(|d| [d.a(), d.b()]).collect(),
    })
}

pub fn annulus_to_json(a: &AnnulusAngulation) -> String {
    let c = a.config();
    canonical(&AngulationJson::Annulus {
        m: c.m(),
        p: c.p(),
        q: c.q(),
        arcs: a.arcs().to_vec(),
    })
}

/// Parses and validates an angulation. Syntax errors are
/// [`Error::Parse`]; well-formed but invalid angulations carry the model
/// error.
pub fn angulation_from_json(text: &str) -> Result<AnyAngulation, Error> {
    Ok(match serde_json::from_str::<AngulationJson>(text)? {
        AngulationJson::Disk {
            m,
            sides,
            diagonals,
        } => {
            let config = DiskConfig::new(m, sides)?;
            let diagonals = diagonals
                .into_iter()
                .map(|[a, b]| {
                    if config.is_m_diagonal(a, b)? {
                        Ok(Diagonal::new(a, b))
                    } else {
                        Err(crate::disk::DiskError::NotMDiagonal { a, b })
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            AnyAngulation::Disk(DiskAngulation::new(config, diagonals)?)
        }
        AngulationJson::Annulus { m, p, q, arcs } => {
            let config = AnnulusConfig::new(m, p, q)?;
            AnyAngulation::Annulus(AnnulusAngulation::new(config, arcs)?)
        }
    })
}

/// One node per vertex and one edge per arrow, labeled with its color and
/// drawn with width equal to its multiplicity.
pub fn quiver_to_dot(q: &ColoredQuiver) -> String {
    let mut out = String::from("digraph quiver {\n");
    for v in 0..q.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (i, j, c, mult) in q.arrows() {
        let _ = writeln!(out, "  {i} -> {j} [label=\"({c})\", penwidth={mult}];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quiver_round_trip_and_key_order() {
        let mut q = ColoredQuiver::new(2, 3).unwrap();
        q.add_pair(0, 1, 0, 1).unwrap();
        q.add_pair(2, 1, 1, 2).unwrap();
        let text = quiver_to_json(&q);
        assert_eq!(quiver_from_json(&text).unwrap(), q);
        let first = text.find("\"color\"").unwrap();
        assert!(first < text.find("\"from\"").unwrap());
        assert!(text.find("\"arrows\"").unwrap() < text.find("\"m\"").unwrap());
    }

    #[test]
    fn angulation_round_trips() {
        let disk: AnyAngulation = DiskConfig::new(2, 10).unwrap().initial_fan().into();
        assert_eq!(
            angulation_from_json(&angulation_to_json(&disk)).unwrap(),
            disk
        );
        let ann: AnyAngulation = AnnulusConfig::new(2, 4, 3)
            .unwrap()
            .initial_bridges()
            .into();
        let text = angulation_to_json(&ann);
        assert!(text.contains("\"kind\": \"bridge\""));
        assert_eq!(angulation_from_json(&text).unwrap(), ann);
    }

    #[test]
    fn parses_the_documented_shapes() {
        let a =
            angulation_from_json(r#"{"type":"disk","m":1,"sides":5,"diagonals":[[1,3],[4,1]]}"#)
                .unwrap();
        let AnyAngulation::Disk(a) = a else { panic!() };
        assert_eq!(a.diagonals(), &[Diagonal::new(1, 3), Diagonal::new(1, 4)]);
        let b = angulation_from_json(
            r#"{"type":"annulus","m":1,"p":2,"q":1,"arcs":[
                {"kind":"bridge","outer":1,"inner":1,"winding":0},
                {"kind":"bridge","outer":1,"inner":1,"winding":1},
                {"kind":"outer_chord","start":1,"span":2}]}"#,
        );
        assert!(b.is_ok(), "{b:?}");
    }

    #[test]
    fn malformed_and_invalid_inputs_differ() {
        assert!(matches!(angulation_from_json("{"), Err(Error::Parse(_))));
        assert!(matches!(
            angulation_from_json(r#"{"type":"cube"}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            angulation_from_json(r#"{"type":"disk","m":1,"sides":5,"diagonals":[[1,3],[2,4]]}"#),
            Err(Error::Disk(_))
        ));
        assert!(matches!(
            angulation_from_json(r#"{"type":"annulus","m":1,"p":1,"q":1,"arcs":[]}"#),
            Err(Error::Annulus(_))
        ));
    }

    #[test]
    fn dot_has_one_edge_per_arrow() {
        let q = DiskConfig::new(1, 5).unwrap().initial_fan().quiver();
        let dot = quiver_to_dot(&q);
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.contains("label=\"(0)\""));
        assert!(dot.contains("penwidth=1"));
    }
}
