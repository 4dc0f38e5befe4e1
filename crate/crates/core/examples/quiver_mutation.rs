//! Mutates a small colored quiver and walks once around its period.

use angulator::quiver::ColoredQuiver;

fn main() -> Result<(), angulator::Error> {
    // 0 -(0)-> 1 -(0)-> 2 with m = 2, plus the symmetric color-2 arrows.
    let mut q = ColoredQuiver::new(2, 3)?;
    q.add_pair(0, 1, 0, 1)?;
    q.add_pair(1, 2, 0, 1)?;
    println!("start:\n{}", angulator::io::quiver_to_json(&q));

    let mut cur = q.clone();
    for step in 1..=3 {
        cur = cur.mutate(1)?;
        let arrows: Vec<String> = cur
            .arrows()
            .map(|(i, j, c, n)| format!("{i}-({c})->{j} x{n}"))
            .collect();
        println!("mu_1^{step}: {}", arrows.join(", "));
    }
    assert_eq!(cur, q);
    assert_eq!(q.mutate(1)?, q.mutate_procedural(1)?);
    println!("period 3 at vertex 1; closed formula and procedure agree");
    Ok(())
}
