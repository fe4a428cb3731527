//! Words of the symmetric family (p/n,p/n,p/n) and the torus link report.

use schubert3::family::{match_word, worked_example_word};
use schubert3::{family_word, torus_report, SchubertForm};

fn main() -> schubert3::Result<()> {
    for text in ["(5/2,5/2,5/2)", "(4/1,4/1,4/1)", "(6/3,6/3,6/3)", "(7/3,7/3,7/3)"] {
        let form: SchubertForm = text.parse()?;
        let fw = family_word(&form)?;
        print!("{form}: w = {}", fw.display_word());
        if let Some(expected) = worked_example_word(&form) {
            match match_word(&fw, &expected) {
                Some(m) => print!("  (published {expected}: {m})"),
                None => print!("  (published {expected}: no match)"),
            }
        }
        println!();
    }
    println!();
    print!("{}", torus_report(2, 10)?);
    Ok(())
}
