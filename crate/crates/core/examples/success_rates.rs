//! Runs both sweeps (growing m at n = 20, growing n in a 20-gon) and
//! prints the CSV tables.

use polycycle::bench::{to_csv, ExperimentGrid};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2024);
    for grid in [ExperimentGrid::sides_sweep(seed), ExperimentGrid::points_sweep(seed)] {
        print!("{}", to_csv(&grid.run(), true));
        println!();
    }
}
