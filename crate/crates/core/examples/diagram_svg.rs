//! Write the canonical diagram of a form as SVG.
//!
//! `cargo run --example diagram_svg -- "(5/2,5/2,5/2)" out.svg`

use schubert3::diagram::{oriented_diagram, render_svg, SvgOptions};
use schubert3::SchubertForm;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let form: SchubertForm = args.next().as_deref().unwrap_or("(4/2,4/1,3/1)").parse()?;
    let path = args.next().unwrap_or_else(|| "diagram.svg".to_string());
    let d = oriented_diagram(&form)?;
    let svg = render_svg(&d, &SvgOptions { labels: true, ..SvgOptions::default() });
    std::fs::write(&path, svg)?;
    println!(
        "{form}: {} crossings, {} components, {} stray intersections, written to {path}",
        d.crossing_count(),
        d.component_count(),
        d.stray_intersections()
    );
    Ok(())
}
