//! Counts angulations, compares with Fuss-Catalan numbers and writes one
//! flip graph as DOT.
//!
//! cargo run --example flip_graph > hexagon.dot

use angulator::disk::{enumerate_angulations, flip_graph, fuss_catalan, DiskConfig, Guard};

fn main() -> Result<(), angulator::Error> {
    let guard = Guard::default();
    for (m, sides) in [(1, 5), (1, 6), (1, 7), (2, 8), (2, 10), (3, 11), (3, 14)] {
        let config = DiskConfig::new(m, sides)?;
        let e = enumerate_angulations(config, guard, false)?;
        let g = flip_graph(config, guard)?;
        eprintln!(
            "m={m} S={sides:>2}: {:>4} angulations, Fuss-Catalan {:>4}, flip graph {:>4} nodes, connected {}",
            e.count,
            fuss_catalan(m, config.rank() as u32 + 1),
            g.node_count(),
            g.is_connected()
        );
    }
    print!("{}", flip_graph(DiskConfig::new(1, 6)?, guard)?.to_dot());
    Ok(())
}
