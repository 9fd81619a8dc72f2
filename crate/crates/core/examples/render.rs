//! Renders a random instance and its embedding to `embedding.svg`.

use polycycle::generators::{generate_instance, GenConfig};
use polycycle::io::{render_svg, SvgOptions};
use polycycle::pipeline::embed_cycle;

fn main() {
    let inst = generate_instance(&GenConfig::new(8, 12, 3)).unwrap();
    let result = embed_cycle(&inst).unwrap();
    let svg = render_svg(&inst, Some(&result), &SvgOptions { labels: true, ..SvgOptions::default() });
    std::fs::write("embedding.svg", svg).unwrap();
    println!("{:?}; wrote embedding.svg", result.outcome);
}
