//! Parse a few Schubert forms and check the butterfly conditions.

use schubert3::{parse_schubert_form, validate_butterfly};

fn main() -> schubert3::Result<()> {
    for text in ["(4/2,4/1,3/1)", "4 1 4 2 3 1", "(5/1,5/2,5/1)", "(3/1,2/2,2/2)"] {
        let form = parse_schubert_form(text)?;
        let report = validate_butterfly(&form);
        println!("{report}");
        if report.ok {
            println!("  {} crossings", form.crossing_count());
        }
    }
    Ok(())
}
