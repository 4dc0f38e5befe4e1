//! Flips every diagonal of the fan of an octagon into quadrilaterals and
//! checks each flip against quiver mutation.

use angulator::disk::DiskConfig;

fn main() -> Result<(), angulator::Error> {
    let config = DiskConfig::new(2, 8)?;
    let fan = config.initial_fan();
    println!("{fan}");
    for (k, d) in fan.diagonals().iter().enumerate() {
        let completions: Vec<String> = fan
            .completions(*d)?
            .iter()
            .map(ToString::to_string)
            .collect();
        let flipped = fan.flip(*d)?;
        let mut order = fan.diagonals().to_vec();
        order[k] = fan.twist(*d)?;
        let agrees = flipped.quiver_ordered(&order)? == fan.quiver().mutate(k)?;
        println!(
            "flip {d}: cycle [{}] -> {flipped}  mutation agrees: {agrees}",
            completions.join(" ")
        );
    }
    Ok(())
}
