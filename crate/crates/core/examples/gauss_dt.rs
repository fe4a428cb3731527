//! Gauss and Dowker-Thistlethwaite codes.

use schubert3::{dt_code, gauss_code, SchubertForm};

fn main() -> schubert3::Result<()> {
    for text in ["(4/2,4/1,3/1)", "(5/2,5/2,5/2)", "(6/3,6/3,6/3)", "(7/1,5/2,3/1)"] {
        let form: SchubertForm = text.parse()?;
        let code = gauss_code(&form)?;
        println!("{form}: {code}");
        if code.components.len() == 1 {
            println!("  DT {}", dt_code(&form)?);
        }
    }
    Ok(())
}
