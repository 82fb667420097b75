//! How many grid points stay on a latitude circle after tilting the pole.

use bivalent::sphere::grid_overlap_count;
use bivalent::GridSpec;

fn main() -> bivalent::Result<()> {
    for n in [4, 8, 16] {
        let grid = GridSpec::new(n)?;
        let counts: Vec<String> = [0.0, 0.3, 0.7731, 1.1]
            .iter()
            .map(|&t| format!("tilt {t}: {}", grid_overlap_count(&grid, t)))
            .collect();
        println!("N = {n:>2} ({} points): {}", grid.point_count(), counts.join(", "));
    }
    Ok(())
}
