//! Acceptance gate: one PASS/FAIL line per criterion.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use schubert3::butterfly::forbidden_bicycle_check;
use schubert3::diagram::build_diagram_of;
use schubert3::family::{family_word, match_word, torus_report, worked_example_word};
use schubert3::oracle::enumerate::{candidate_forms, valid_forms};
use schubert3::oracle::fox::{abelianization, alexander_polynomial, meridian_images};
use schubert3::presentation::{
    over_presentation_of, over_relations_of, peripheral_system_of, under_presentation_of,
};
use schubert3::{classify, orient, validate_butterfly, Butterfly, SchubertForm, Shape};

/// Wall-clock budgets, checked against the measured time of each criterion.
const BUDGET_C1: Duration = Duration::from_secs(1);
const BUDGET_C2: Duration = Duration::from_secs(60);
const BUDGET_C3: Duration = Duration::from_secs(120);
const BUDGET_C5: Duration = Duration::from_secs(300);
/// Largest `p` of the exhaustive sweeps.
const P_COUNTING: u32 = 8;
const P_EQUIVALENCE: u32 = 6;
const P_ORIENTATION: u32 = 8;
const P_ALEXANDER: u32 = 6;
const P_PERIPHERAL: u32 = 6;
const P_FAMILY: u32 = 8;

type Outcome = Result<String, String>;

fn form(text: &str) -> SchubertForm {
    text.parse().expect("literal form")
}

fn reduced_forms(p_max: u32) -> Vec<(SchubertForm, Butterfly)> {
    valid_forms(p_max)
        .into_iter()
        .filter_map(|f| {
            let bf = Butterfly::new(f).ok()?;
            schubert3::classify::is_reduced(&bf).then_some((f, bf))
        })
        .collect()
}

fn c1_examples() -> Outcome {
    let class = |t: &str| classify(&form(t)).map_err(|e| e.to_string());
    for (text, components) in [("(4/2,4/1,3/1)", Some(1)), ("(4/1,4/2,3/1)", Some(2)), ("(5/1,5/2,5/1)", None)] {
        let c = class(text)?;
        if c.components != components || c.reduced != components.is_some() {
            return Err(format!("{text}: {c}"));
        }
    }
    let mut notes = Vec::new();
    for (text, components) in [("(5/2,5/2,5/2)", 3), ("(4/1,4/1,4/1)", 1), ("(6/3,6/3,6/3)", 1)] {
        let f = form(text);
        let c = class(text)?;
        if c.components != Some(components) {
            return Err(format!("{text}: {c}"));
        }
        let fw = family_word(&f).map_err(|e| e.to_string())?;
        let published = worked_example_word(&f).ok_or("no published word")?;
        match match_word(&fw, &published) {
            Some(m) => notes.push(format!("{text} {} ~ {} by {m}", fw.display_word(), published.in_variables())),
            None => return Err(format!("{text}: w = {} does not match {}", fw.display_word(), published.in_variables())),
        }
    }
    Ok(notes.join("; "))
}

fn c2_counting() -> Outcome {
    let forms = reduced_forms(P_COUNTING);
    for (f, bf) in &forms {
        let (p, q, s) = (f.p() as usize, f.q() as usize, f.s() as usize);
        let o = orient(bf).map_err(|e| e.to_string())?;
        let d = build_diagram_of(bf, Some(&o));
        if d.crossing_count() != p + q + s - 3 {
            return Err(format!("{f}: {} crossings", d.crossing_count()));
        }
        let g = over_relations_of(bf, &o).map_err(|e| e.to_string())?;
        let w: usize = g.relations.iter().flatten().map(|r| r.word.len()).sum();
        if w != p + q + s - 3 {
            return Err(format!("{f}: sum |w_i| = {w}"));
        }
        let u = under_presentation_of(bf, &o).map_err(|e| e.to_string())?;
        let ul: Vec<usize> = u.relations.iter().flatten().map(|r| r.word.len()).collect();
        if ul != [p - 1, q - 1, s - 1] {
            return Err(format!("{f}: |u| = {ul:?}"));
        }
        let tau: usize = o.tau.iter().map(Vec::len).sum();
        if tau != 2 * (p + q + s) {
            return Err(format!("{f}: sum |tau_i| = {tau}"));
        }
        let set = bf.vertex_set();
        for t in &o.tau {
            if t.iter().filter(|v| set.is_endpoint(**v)).count() != 2 {
                return Err(format!("{f}: a cycle meets E in other than 2 points"));
            }
        }
    }
    Ok(format!("{} reduced forms with p <= {P_COUNTING}", forms.len()))
}

fn c3_equivalences() -> Outcome {
    let candidates = candidate_forms(P_EQUIVALENCE);
    let mut valid = 0;
    for f in &candidates {
        let bf = Butterfly::new(*f).map_err(|e| e.to_string())?;
        let v = validate_butterfly(f).ok;
        if v != forbidden_bicycle_check(bf.phi()) {
            return Err(format!("{f}: validation {v} disagrees with the bicycle check"));
        }
        valid += v as usize;
    }
    let forms = reduced_forms(P_EQUIVALENCE);
    for (f, bf) in &forms {
        let k = classify(f).map_err(|e| e.to_string())?.components.unwrap() as usize;
        let o = orient(bf).map_err(|e| e.to_string())?;
        let traced = build_diagram_of(bf, Some(&o)).component_count();
        let rank = abelianization(&over_presentation_of(bf, &o).map_err(|e| e.to_string())?).free_rank;
        if traced != k || rank != k {
            return Err(format!("{f}: components {k}, traced {traced}, rank {rank}"));
        }
    }
    Ok(format!(
        "{} in-range tuples ({valid} valid), {} reduced forms with p <= {P_EQUIVALENCE}",
        candidates.len(),
        forms.len()
    ))
}

/// `I1 F1 I2 F2 I3 F3 δb δc`.
const TABLE_KNOTS: [&str; 8] = [
    "ap b0 bq c0 cs a0 1 1",
    "ap b0 bq cs c0 a0 1 -1",
    "ap bq b0 c0 cs a0 -1 1",
    "ap bq b0 cs c0 a0 -1 -1",
    "ap c0 cs b0 bq a0 1 1",
    "ap c0 cs bq b0 a0 -1 1",
    "ap cs c0 b0 bq a0 1 -1",
    "ap cs c0 bq b0 a0 -1 -1",
];
const TABLE_TWO_COMPONENTS: [&str; 6] = [
    "ap b0 bq a0 cs c0 1 1",
    "ap bq b0 a0 cs c0 -1 1",
    "ap c0 cs a0 bq b0 1 1",
    "ap cs c0 a0 bq b0 1 -1",
    "ap a0 bq c0 cs b0 1 1",
    "ap a0 bq cs c0 b0 1 -1",
];
const THREE_COMPONENTS: &str = "ap a0 bq b0 cs c0 1 1";

fn c4_orientation() -> Outcome {
    let forms = reduced_forms(P_ORIENTATION);
    let mut seen = std::collections::BTreeSet::new();
    for (f, bf) in &forms {
        let o = orient(bf).map_err(|e| e.to_string())?;
        let row = format!("{} {} {}", o.endpoint_pattern().join(" "), o.delta_b, o.delta_c);
        let k = classify(f).map_err(|e| e.to_string())?.components.unwrap();
        let ok = match k {
            1 => TABLE_KNOTS.contains(&row.as_str()),
            2 => TABLE_TWO_COMPONENTS.contains(&row.as_str()),
            _ => row == THREE_COMPONENTS,
        };
        if !ok {
            return Err(format!("{f}: pattern {row} not in the table for {k} components"));
        }
        seen.insert(row);
    }
    Ok(format!("{} forms, {} distinct rows realized", forms.len(), seen.len()))
}

fn c5_alexander() -> Outcome {
    let mut knots = 0;
    for (f, bf) in reduced_forms(P_ALEXANDER) {
        let o = orient(&bf).map_err(|e| e.to_string())?;
        let over = over_presentation_of(&bf, &o).map_err(|e| e.to_string())?;
        if over.shape != Shape::Knot {
            continue;
        }
        knots += 1;
        let under = under_presentation_of(&bf, &o).map_err(|e| e.to_string())?;
        let a = alexander_polynomial(&over).map_err(|e| e.to_string())?;
        let b = alexander_polynomial(&under).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("{f}: over {a} vs under {b}"));
        }
        if !schubert3::oracle::fox::is_unit_at_one(&a) {
            return Err(format!("{f}: Delta(1) != +-1 for {a}"));
        }
        if !a.is_symmetric() {
            return Err(format!("{f}: {a} is not symmetric"));
        }
    }
    Ok(format!("{knots} knot forms with p <= {P_ALEXANDER}"))
}

fn c6_peripheral() -> Outcome {
    let mut knots = 0;
    for (f, bf) in reduced_forms(P_PERIPHERAL) {
        let o = orient(&bf).map_err(|e| e.to_string())?;
        let g = over_relations_of(&bf, &o).map_err(|e| e.to_string())?;
        if g.shape != Shape::Knot {
            continue;
        }
        knots += 1;
        let ps = peripheral_system_of(&g).map_err(|e| format!("{f}: {e}"))?;
        if ps.steps.len() != 4 {
            return Err(format!("{f}: rewrite took {} steps", ps.steps.len() - 1));
        }
        let images = meridian_images(&g).map_err(|e| e.to_string())?;
        let ab = ps.longitude.abelianize();
        let image: i64 = (0..3).map(|i| ab[i] * images[i]).sum();
        if image != 0 {
            return Err(format!("{f}: longitude has meridian exponent {image}"));
        }
    }
    Ok(format!("{knots} knot forms with p <= {P_PERIPHERAL}"))
}

fn c7_family() -> Outcome {
    let mut count = 0;
    for (f, _) in reduced_forms(P_FAMILY) {
        let (p, n, q, m, s, l) = f.as_tuple();
        if p == q && q == s && n == m && m == l {
            family_word(&f).map_err(|e| e.to_string())?;
            count += 1;
        }
    }
    let report = torus_report(2, 10).map_err(|e| e.to_string())?;
    if report.rows.len() != 9 || report.rows.iter().any(|r| r.checks.len() != 3) {
        return Err("torus report incomplete".into());
    }
    let list = |v: &[u32]| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.iter().map(|r| format!("r={r}")).collect::<Vec<_>>().join(",")
        }
    };
    Ok(format!(
        "{count} symmetric forms with p <= {P_FAMILY}; torus report: components consistent under {}, words under {}",
        list(&report.components_consistent),
        list(&report.words_consistent)
    ))
}

fn c8_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_schubert3");
    let run = |args: &[&str]| -> Result<(i32, Vec<u8>), String> {
        let out = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        Ok((out.status.code().unwrap_or(-1), out.stdout))
    };
    let inputs = [
        "(5/2,5/2,5/2)",
        "(4/1,4/1,4/1)",
        "(6/3,6/3,6/3)",
        "(4/2,4/1,3/1)",
        "(4/1,4/2,3/1)",
        "(5/1,5/2,5/1)",
    ];
    let mut runs = 0;
    for f in inputs {
        let commands: Vec<Vec<&str>> = vec![
            vec!["validate", f],
            vec!["validate", "--json", f],
            vec!["classify", f],
            vec!["classify", "--json", f],
            vec!["orient", f],
            vec!["group", "--over", f],
            vec!["group", "--over", "--relations", f],
            vec!["group", "--over", "--relations", "--format", "json", f],
            vec!["group", "--under", "--format", "gap-like", f],
            vec!["group", "--over", "--drop-longest", f],
            vec!["diagram", "--svg", "--labels", f],
            vec!["diagram", "--json", f],
            vec!["gauss", f],
            vec!["dt", f],
            vec!["family", f],
        ];
        for args in commands {
            let a = run(&args)?;
            let b = run(&args)?;
            if a != b {
                return Err(format!("{} differs between runs", args.join(" ")));
            }
            runs += 1;
        }
    }
    let (a, b) = run(&["family", "--torus-report"])?;
    let (c, d) = run(&["family", "--torus-report"])?;
    if (a, b) != (c, d) {
        return Err("family --torus-report differs between runs".into());
    }
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let mut files = Vec::new();
    for k in 0..2 {
        let path = dir.join(format!("acceptance-enumerate-{k}.csv"));
        let path_s = path.to_string_lossy().to_string();
        run(&["enumerate", "--pmax", "5", "--out", &path_s])?;
        files.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    if files[0] != files[1] {
        return Err("enumerate output differs between runs".into());
    }
    Ok(format!("{} command lines run twice, byte-identical", runs + 2))
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 paper examples", c1_examples, Some(BUDGET_C1)),
        ("2 counting lemmas", c2_counting, Some(BUDGET_C2)),
        ("3 theorem equivalences", c3_equivalences, Some(BUDGET_C3)),
        ("4 orientation tables", c4_orientation, None),
        ("5 presentation duality", c5_alexander, Some(BUDGET_C5)),
        ("6 peripheral system", c6_peripheral, None),
        ("7 family symmetry", c7_family, None),
        ("8 determinism", c8_determinism, None),
    ];
    let mut failed = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {name} [{elapsed:.2?}]: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name} [{elapsed:.2?}]: {detail}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
