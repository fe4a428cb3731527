//! Alexander polynomials from the over presentation and from the Gauss code,
//! and the first homology of a few link groups.

use schubert3::oracle::{abelianization, alexander_from_gauss, alexander_polynomial};
use schubert3::{gauss_code, over_presentation, SchubertForm};

fn main() -> schubert3::Result<()> {
    for text in ["(4/2,4/1,3/1)", "(6/3,6/3,6/3)", "(5/3,5/1,4/1)", "(7/1,5/2,3/1)"] {
        let form: SchubertForm = text.parse()?;
        let g = over_presentation(&form)?;
        let h = abelianization(&g);
        println!("{form}: {} free rank {}", g.shape, h.free_rank);
        if g.generators.len() == 3 && h.free_rank == 1 {
            let a = alexander_polynomial(&g)?;
            let b = alexander_from_gauss(&gauss_code(&form)?)?;
            println!("  from group   {}", a.normalize());
            println!("  from diagram {}", b.normalize());
        }
    }
    Ok(())
}
