//! Tally valid forms by number of components.

use std::collections::BTreeMap;

use schubert3::oracle::enumerate::enumerate_forms;

fn main() -> schubert3::Result<()> {
    let p_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let records = enumerate_forms(p_max)?;
    let mut tally: BTreeMap<Option<u8>, usize> = BTreeMap::new();
    for r in &records {
        *tally.entry(r.components).or_default() += 1;
    }
    println!("{} valid forms with p <= {p_max}", records.len());
    for (k, n) in tally {
        match k {
            Some(k) => println!("  {k} components: {n}"),
            None => println!("  not reduced: {n}"),
        }
    }
    Ok(())
}
