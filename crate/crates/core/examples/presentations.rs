//! Over and under presentations of a knot, a two-component link and a
//! three-component link, with the peripheral system of the knot.

use schubert3::presentation::Format;
use schubert3::{over_presentation, over_relations, peripheral_system, under_presentation, SchubertForm};

fn main() -> schubert3::Result<()> {
    for text in ["(4/2,4/1,3/1)", "(4/1,4/2,3/1)", "(5/2,5/2,5/2)"] {
        let form: SchubertForm = text.parse()?;
        println!("== {form}");
        println!("{}", over_relations(&form)?.export(Format::Text));
        println!("{}", over_presentation(&form)?.export(Format::Text));
        let under = under_presentation(&form)?;
        println!("{}", under.export(Format::Text));
        println!("without the longest relator:");
        println!("{}", under.drop_longest().export(Format::GapLike));
    }

    let knot: SchubertForm = "(4/2,4/1,3/1)".parse()?;
    let ps = peripheral_system(&knot)?;
    println!("meridian {}, longitude {}", ps.meridian, ps.longitude);
    Ok(())
}
