//! Flips in an annulus: bridges change winding, chords appear, and the
//! quiver follows by mutation.

use angulator::annulus::AnnulusConfig;
use angulator::verify::random_walk;

fn main() -> Result<(), angulator::Error> {
    let config = AnnulusConfig::new(1, 1, 1)?;
    let a = config.initial_bridges();
    println!("{a}");
    let b = a.flip(&a.arcs()[0])?;
    println!("flip {} -> {b}", a.arcs()[0]);
    for (i, j, c, n) in a.quiver().arrows() {
        println!("  Kronecker arrow {i}-({c})->{j} x{n}");
    }

    let config = AnnulusConfig::new(2, 2, 1)?;
    let walk = random_walk(&config.initial_bridges(), 6, 7)?;
    for a in &walk {
        let ears: Vec<String> = a.ears().map(ToString::to_string).collect();
        println!("{a}  ears: [{}]", ears.join(" "));
    }
    Ok(())
}
