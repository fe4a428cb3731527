//! Classify reduced forms and run the orientation algorithm on them.

use schubert3::{classify, orient, Butterfly, SchubertForm};

fn main() -> schubert3::Result<()> {
    for text in ["(4/2,4/1,3/1)", "(4/1,4/2,3/1)", "(5/2,5/2,5/2)", "(5/1,5/2,5/1)"] {
        let form: SchubertForm = text.parse()?;
        let class = classify(&form)?;
        println!("{form}: {class}");
        if !class.reduced {
            continue;
        }
        let o = orient(&Butterfly::new(form)?)?;
        for (i, tau) in o.tau.iter().enumerate() {
            let cycle: Vec<String> = tau.iter().map(|v| v.to_string()).collect();
            println!("  tau{} = ({})", i + 1, cycle.join(" "));
        }
        println!("  endpoints {}", o.endpoint_pattern().join(" "));
        println!("  delta_b = {}, delta_c = {}", o.delta_b, o.delta_c);
    }
    Ok(())
}
