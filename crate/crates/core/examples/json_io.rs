//! Reads an angulation from JSON and writes its quiver as JSON and DOT.

use angulator::io::{
    angulation_from_json, angulation_to_json, quiver_to_dot, quiver_to_json, AnyAngulation,
};

const INPUT: &str = r#"{"type": "annulus", "m": 1, "p": 2, "q": 1, "arcs": [
    {"kind": "bridge", "outer": 1, "inner": 1, "winding": 0},
    {"kind": "bridge", "outer": 1, "inner": 1, "winding": 1},
    {"kind": "outer_chord", "start": 1, "span": 2}
]}"#;

fn main() -> Result<(), angulator::Error> {
    let a = angulation_from_json(INPUT)?;
    print!("{}", angulation_to_json(&a));
    let q = match &a {
        AnyAngulation::Disk(d) => d.quiver(),
        AnyAngulation::Annulus(x) => x.quiver(),
    };
    print!("{}", quiver_to_json(&q));
    print!("{}", quiver_to_dot(&q));
    Ok(())
}
