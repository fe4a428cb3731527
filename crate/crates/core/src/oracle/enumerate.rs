//! Exhaustive enumeration of small Schubert forms.

use std::io::Write;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::butterfly::Butterfly;
use crate::classify::{component_count, is_reduced};
use crate::diagram::build_diagram_of;
use crate::error::{Error, Result};
use crate::form::{validate_butterfly, SchubertForm};
use crate::orient::orient;
use crate::presentation::{
    over_presentation_of, raw_over_relations, under_presentation_of, Relation, Shape,
};

use super::fox::alexander_polynomial;

/// Every six-tuple with `2 ≤ s ≤ q ≤ p ≤ p_max`, `1 ≤ n ≤ p`, `1 ≤ m ≤ q`,
/// `1 ≤ l ≤ s` and `p + 1 ≤ q + s`, in lexicographic order.
pub fn candidate_forms(p_max: u32) -> Vec<SchubertForm> {
    let mut out = Vec::new();
    for p in 2..=p_max {
        for n in 1..=p {
            for q in 2..=p {
                for m in 1..=q {
                    for s in 2..=q {
                        if p + 1 > q + s {
                            continue;
                        }
                        for l in 1..=s {
                            out.push(SchubertForm::new(p, n, q, m, s, l).expect("positive"));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Candidates passing [`validate_butterfly`].
pub fn valid_forms(p_max: u32) -> Vec<SchubertForm> {
    candidate_forms(p_max)
        .into_iter()
        .filter(|f| validate_butterfly(f).ok)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormRecord {
    pub form: SchubertForm,
    pub valid: bool,
    pub reduced: bool,
    pub components: Option<u8>,
    pub crossings: usize,
    /// `|w_1|, |w_2|, |w_3|` of the over presentation.
    pub w_lengths: Option<[usize; 3]>,
    /// `|u_a|, |u_b|, |u_c|` of the under presentation.
    pub u_lengths: Option<[usize; 3]>,
    /// `I_1 F_1 I_2 F_2 I_3 F_3`.
    pub pattern: Option<[&'static str; 6]>,
    pub delta: Option<[i8; 3]>,
    pub under_variant: Option<String>,
    /// Normalized Alexander polynomial of a knot, lowest degree first.
    pub alexander: Option<Vec<i64>>,
}

pub fn form_record(form: &SchubertForm) -> Result<FormRecord> {
    let valid = validate_butterfly(form).ok;
    let bf = Butterfly::new(*form)?;
    let reduced = valid && is_reduced(&bf);
    let mut rec = FormRecord {
        form: *form,
        valid,
        reduced,
        components: None,
        crossings: build_diagram_of(&bf, None).crossing_count(),
        w_lengths: None,
        u_lengths: None,
        pattern: None,
        delta: None,
        under_variant: None,
        alexander: None,
    };
    if !reduced {
        return Ok(rec);
    }
    let o = orient(&bf)?;
    let over = over_presentation_of(&bf, &o)?;
    let under = under_presentation_of(&bf, &o)?;
    let lengths = |rel: &[Relation]| [0, 1, 2].map(|i| rel[i].word.len());
    rec.components = Some(component_count(&bf)?);
    rec.w_lengths = Some(lengths(&raw_over_relations(&o)?));
    rec.u_lengths = Some(lengths(under.relations.as_deref().unwrap_or_default()));
    rec.pattern = Some(o.endpoint_pattern());
    rec.delta = Some(o.deltas());
    rec.under_variant = under.variant.clone();
    if over.shape == Shape::Knot {
        let a = alexander_polynomial(&over)?;
        let coeffs = a
            .normalized_coefficients()
            .iter()
            .map(|c| {
                c.to_i64()
                    .ok_or_else(|| Error::Internal(format!("{form}: coefficient {c} overflows")))
            })
            .collect::<Result<Vec<i64>>>()?;
        rec.alexander = Some(coeffs);
    }
    Ok(rec)
}

/// Records of every valid form with `p ≤ p_max`, in lexicographic order.
pub fn enumerate_forms(p_max: u32) -> Result<Vec<FormRecord>> {
    valid_forms(p_max).par_iter().map(form_record).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Jsonl,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "jsonl" | "json" => Ok(OutputFormat::Jsonl),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct CsvRow {
    form: String,
    valid: bool,
    reduced: bool,
    components: Option<u8>,
    crossings: usize,
    w1: Option<usize>,
    w2: Option<usize>,
    w3: Option<usize>,
    u_a: Option<usize>,
    u_b: Option<usize>,
    u_c: Option<usize>,
    pattern: String,
    delta_b: Option<i8>,
    delta_c: Option<i8>,
    under_variant: String,
    alexander: String,
}

impl From<&FormRecord> for CsvRow {
    fn from(r: &FormRecord) -> Self {
        let join = |v: &[String]| v.join(" ");
        CsvRow {
            form: r.form.to_string(),
            valid: r.valid,
            reduced: r.reduced,
            components: r.components,
            crossings: r.crossings,
            w1: r.w_lengths.map(|w| w[0]),
            w2: r.w_lengths.map(|w| w[1]),
            w3: r.w_lengths.map(|w| w[2]),
            u_a: r.u_lengths.map(|u| u[0]),
            u_b: r.u_lengths.map(|u| u[1]),
            u_c: r.u_lengths.map(|u| u[2]),
            pattern: r
                .pattern
                .map(|p| join(&p.map(str::to_string)))
                .unwrap_or_default(),
            delta_b: r.delta.map(|d| d[1]),
            delta_c: r.delta.map(|d| d[2]),
            under_variant: r.under_variant.clone().unwrap_or_default(),
            alexander: r
                .alexander
                .as_ref()
                .map(|a| join(&a.iter().map(i64::to_string).collect::<Vec<_>>()))
                .unwrap_or_default(),
        }
    }
}

pub fn write_records<W: Write>(records: &[FormRecord], format: OutputFormat, out: W) -> Result<()> {
    let io = |e: std::io::Error| Error::Internal(format!("write failed: {e}"));
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(CsvRow::from(r))
                    .map_err(|e| Error::Internal(format!("write failed: {e}")))?;
            }
            w.flush().map_err(io)?;
        }
        OutputFormat::Jsonl => {
            let mut out = out;
            for r in records {
                let line = serde_json::to_string(r).expect("record serializes");
                writeln!(out, "{line}").map_err(io)?;
            }
            out.flush().map_err(io)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'a>(recs: &'a [FormRecord], text: &str) -> &'a FormRecord {
        let f: SchubertForm = text.parse().unwrap();
        recs.iter().find(|r| r.form == f).unwrap()
    }

    #[test]
    fn small_streams() {
        let recs = enumerate_forms(5).unwrap();
        assert!(recs.iter().all(|r| r.valid));
        assert_eq!(find(&recs, "(5/2,5/2,5/2)").components, Some(3));
        assert_eq!(find(&recs, "(4/2,4/1,3/1)").components, Some(1));
        assert_eq!(find(&recs, "(4/1,4/2,3/1)").components, Some(2));
        assert!(!find(&recs, "(5/1,5/2,5/1)").reduced);
        let forms: Vec<_> = recs.iter().map(|r| r.form).collect();
        let mut sorted = forms.clone();
        sorted.sort();
        assert_eq!(forms, sorted);
    }

    #[test]
    fn csv_and_jsonl() {
        let recs = enumerate_forms(4).unwrap();
        let mut csv = Vec::new();
        write_records(&recs, OutputFormat::Csv, &mut csv).unwrap();
        let text = String::from_utf8(csv).unwrap();
        assert!(text.starts_with("form,valid,reduced,components,crossings,"));
        assert_eq!(text.lines().count(), recs.len() + 1);
        assert!(text.contains("\"(4/2,4/1,3/1)\",true,true,1,8,"));
        let mut jl = Vec::new();
        write_records(&recs, OutputFormat::Jsonl, &mut jl).unwrap();
        let text = String::from_utf8(jl).unwrap();
        assert_eq!(text.lines().count(), recs.len());
        for line in text.lines() {
            serde_json::from_str::<serde_json::Value>(line).unwrap();
        }
    }
}
