//! Cuts a disk along an ear and an annulus along a bridge and a chord, and
//! transports the compatible arcs.

use angulator::annulus::{AnnulusConfig, AnnulusCut, ArcClass};
use angulator::disk::{Diagonal, DiskConfig};

fn main() -> Result<(), angulator::Error> {
    let config = DiskConfig::new(1, 6)?;
    let a = config.complete(&[
        Diagonal::new(1, 3),
        Diagonal::new(1, 4),
        Diagonal::new(1, 5),
    ])?;
    let cut = config.cut_along(Diagonal::new(1, 3))?;
    let [left, right] = cut.split(&a)?;
    println!("{a} cut along (1,3): {left} and {right}");
    for d in config.all_diagonals() {
        if let Some((piece, local)) = cut.transport(d) {
            println!("  {d} -> {local} in {piece:?}");
        }
    }

    let annulus = AnnulusConfig::new(1, 3, 1)?;
    let x = annulus.initial_bridges();
    match annulus.cut_along(ArcClass::bridge(1, 1, 0))? {
        AnnulusCut::Bridge(b) => println!("{x} cut along {}: {}", b.bridge(), b.split(&x)?),
        AnnulusCut::Chord(_) => unreachable!(),
    }
    let y = x.flip(&ArcClass::bridge(2, 1, 1))?;
    let chord = *y
        .arcs()
        .iter()
        .find(|a| !a.is_bridge())
        .expect("a chord appears");
    if let AnnulusCut::Chord(c) = annulus.cut_along(chord)? {
        let (small, disk) = c.split(&y)?;
        println!("{y} cut along {chord}: {small} and {disk}");
    }
    Ok(())
}
