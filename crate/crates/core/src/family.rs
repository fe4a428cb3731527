//! The symmetric family `(p/n,p/n,p/n)` and its single relation word
//! `w(x, y, z)` with `w_1 = w(a,b,c)`, `w_2 = w(b,c,a)`, `w_3 = w(c,a,b)`.

use std::fmt;

use serde::Serialize;

use crate::classify::reduced_butterfly;
use crate::error::{Error, Result};
use crate::form::{validate_butterfly, SchubertForm};
use crate::orient::orient;
use crate::presentation::{
    apply_renaming, over_relations_of, raw_over_relations, shape_renamings, Shape,
};
use crate::word::{Generator, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyWord {
    pub form: SchubertForm,
    pub shape: Shape,
    /// `w(x, y, z)`, read off `w_1` after renaming.
    pub word: Word,
    /// `w_1 = Γ(τ̃_1)` before renaming.
    pub raw_word: Word,
    /// Original generator name to presented name.
    pub substitution: [Generator; 3],
}

impl FamilyWord {
    pub fn display_word(&self) -> String {
        self.word.in_variables().to_string()
    }
}

fn is_cyclic(ws: &[Word]) -> bool {
    ws.len() == 3 && ws[1] == ws[0].cyclic_shift() && ws[2] == ws[1].cyclic_shift()
}

pub fn family_word(form: &SchubertForm) -> Result<FamilyWord> {
    let (p, n, q, m, s, l) = form.as_tuple();
    if !(p == q && q == s && n == m && m == l) {
        return Err(Error::InvalidForm {
            form: *form,
            reason: "not of the shape (p/n,p/n,p/n)".into(),
        });
    }
    let bf = reduced_butterfly(form)?;
    let o = orient(&bf)?;
    let g = over_relations_of(&bf, &o)?;
    let raw = raw_over_relations(&o)?;
    for renaming in shape_renamings(&raw, g.shape) {
        let rels = apply_renaming(&raw, renaming);
        let ws: Vec<Word> = rels.iter().map(|r| r.word.clone()).collect();
        if is_cyclic(&ws) {
            return Ok(FamilyWord {
                form: *form,
                shape: g.shape,
                word: ws[0].clone(),
                raw_word: raw[0].word.clone(),
                substitution: renaming.map,
            });
        }
    }
    let shown: Vec<String> = g
        .relations
        .iter()
        .flatten()
        .map(|r| format!("{} = {}", r.word_name, r.word))
        .collect();
    Err(Error::NotSymmetric {
        form: *form,
        detail: shown.join(", "),
    })
}

/// How a published word relates to the engine's word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Transform {
    Identity,
    /// `w ↦ w⁻¹`.
    Inverse,
    /// Every letter inverted in place, the effect of reversing all meridians.
    Mirror,
    /// Letters in reverse order.
    Reverse,
}

impl Transform {
    pub const ALL: [Transform; 4] = [
        Transform::Identity,
        Transform::Inverse,
        Transform::Mirror,
        Transform::Reverse,
    ];

    pub fn apply(self, w: &Word) -> Word {
        match self {
            Transform::Identity => w.clone(),
            Transform::Inverse => w.inverse(),
            Transform::Mirror => w.mirror(),
            Transform::Reverse => w.reverse(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Frame {
    /// Generators after the renaming into standard shape.
    Renamed,
    /// Generators named after the bridges.
    Raw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WordMatch {
    pub frame: Frame,
    pub transform: Transform,
}

impl fmt::Display for WordMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let frame = match self.frame {
            Frame::Renamed => "renamed",
            Frame::Raw => "raw",
        };
        let t = match self.transform {
            Transform::Identity => "identity",
            Transform::Inverse => "inverse",
            Transform::Mirror => "mirror",
            Transform::Reverse => "reverse",
        };
        write!(f, "{t} in the {frame} frame")
    }
}

/// First `(frame, transform)` under which `expected` equals the engine word.
pub fn match_word(fw: &FamilyWord, expected: &Word) -> Option<WordMatch> {
    for (frame, w) in [(Frame::Renamed, &fw.word), (Frame::Raw, &fw.raw_word)] {
        for t in Transform::ALL {
            if &t.apply(w) == expected {
                return Some(WordMatch { frame, transform: t });
            }
        }
    }
    None
}

fn x() -> Letter {
    Letter::pos(Generator::A)
}
fn y() -> Letter {
    Letter::pos(Generator::B)
}
fn z() -> Letter {
    Letter::pos(Generator::C)
}

/// `(zyx)^k` followed by `tail`.
fn zyx_power(k: usize, tail: &[Letter]) -> Word {
    let mut w = Word(vec![z(), y(), x()]).power(k);
    for &l in tail {
        w.push(l);
    }
    w
}

/// Published case split for the torus family `(p/1,p/1,p/1)`, indexed by
/// the residue it is stated for: `1` (three components, `(zyx)^{p/3}`),
/// `2` (`(zyx)^{[p/3]} z`) and `0` (`(zyx)^{[p/3]} zy`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorusCase {
    pub components: u8,
    /// `None` when the stated word does not exist, i.e. `(zyx)^{p/3}` with
    /// `p/3` not an integer.
    pub word: Option<Word>,
}

pub fn torus_case(label: u32, p: u32) -> TorusCase {
    let k = (p / 3) as usize;
    match label % 3 {
        1 => TorusCase {
            components: 3,
            word: p.is_multiple_of(3).then(|| zyx_power(k, &[])),
        },
        2 => TorusCase {
            components: 1,
            word: Some(zyx_power(k, &[z()])),
        },
        _ => TorusCase {
            components: 1,
            word: Some(zyx_power(k, &[z(), y()])),
        },
    }
}

/// Comparison of one torus form against one relabeling `r` of the
/// published residues: residue `p mod 3` is read as the case stated for
/// `(p − r) mod 3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelabelingCheck {
    pub relabeling: u32,
    pub case_label: u32,
    pub expected_components: u8,
    pub expected_word: Option<String>,
    pub components_match: bool,
    pub word_match: Option<WordMatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorusRow {
    pub p: u32,
    pub form: SchubertForm,
    pub components: Option<u8>,
    pub word: Option<String>,
    pub raw_word: Option<String>,
    pub checks: Vec<RelabelingCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorusReport {
    pub rows: Vec<TorusRow>,
    /// Relabelings under which every row's component count matches.
    pub components_consistent: Vec<u32>,
    /// Relabelings under which every row's word matches (some transform).
    pub words_consistent: Vec<u32>,
}

pub fn torus_report(p_min: u32, p_max: u32) -> Result<TorusReport> {
    let mut rows = Vec::new();
    for p in p_min..=p_max {
        let form = SchubertForm::new(p, 1, p, 1, p, 1)?;
        let fw = if validate_butterfly(&form).ok {
            match family_word(&form) {
                Ok(fw) => Some(fw),
                Err(Error::NotReduced(_)) => None,
                Err(e) => return Err(e),
            }
        } else {
            None
        };
        let checks = (0..3)
            .map(|r| {
                let label = (p + 3 - r) % 3;
                let case = torus_case(label, p);
                let components = fw.as_ref().map(|f| f.shape.components());
                RelabelingCheck {
                    relabeling: r,
                    case_label: label,
                    expected_components: case.components,
                    expected_word: case.word.as_ref().map(|w| w.in_variables().to_string()),
                    components_match: components == Some(case.components),
                    word_match: match (&fw, &case.word) {
                        (Some(f), Some(w)) => match_word(f, w),
                        _ => None,
                    },
                }
            })
            .collect();
        rows.push(TorusRow {
            p,
            form,
            components: fw.as_ref().map(|f| f.shape.components()),
            word: fw.as_ref().map(FamilyWord::display_word),
            raw_word: fw.as_ref().map(|f| f.raw_word.in_variables().to_string()),
            checks,
        });
    }
    let consistent = |pred: &dyn Fn(&RelabelingCheck) -> bool| -> Vec<u32> {
        (0..3)
            .filter(|&r| {
                rows.iter()
                    .filter(|row| row.components.is_some())
                    .all(|row| pred(&row.checks[r as usize]))
            })
            .collect()
    };
    let components_consistent = consistent(&|c| c.components_match);
    let words_consistent = consistent(&|c| c.word_match.is_some());
    Ok(TorusReport {
        rows,
        components_consistent,
        words_consistent,
    })
}

impl fmt::Display for TorusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "torus family (p/1,p/1,p/1)")?;
        for row in &self.rows {
            let comps = row
                .components
                .map_or("not reduced".to_string(), |c| format!("{c} comp"));
            writeln!(
                f,
                "p={:<2} {:<7} w = {}",
                row.p,
                comps,
                row.word.as_deref().unwrap_or("-")
            )?;
            for c in &row.checks {
                let word = match (&c.expected_word, c.word_match) {
                    (None, _) => "stated word undefined".to_string(),
                    (Some(w), Some(m)) => format!("{w} matches ({m})"),
                    (Some(w), None) => format!("{w} differs"),
                };
                writeln!(
                    f,
                    "    r={} case {}: components {} ({}), {}",
                    c.relabeling,
                    c.case_label,
                    c.expected_components,
                    if c.components_match { "match" } else { "differ" },
                    word
                )?;
            }
        }
        let list = |v: &[u32]| {
            if v.is_empty() {
                "none".to_string()
            } else {
                v.iter().map(|r| format!("r={r}")).collect::<Vec<_>>().join(", ")
            }
        };
        writeln!(f, "component counts consistent under: {}", list(&self.components_consistent))?;
        writeln!(f, "words consistent under: {}", list(&self.words_consistent))
    }
}

/// Published words for the three worked examples.
pub fn worked_example_word(form: &SchubertForm) -> Option<Word> {
    let text = match form.as_tuple() {
        (5, 2, 5, 2, 5, 2) => "yz^-1y^-1z",
        (4, 1, 4, 1, 4, 1) => "zyx",
        (6, 3, 6, 3, 6, 3) => "z^-1xz^-1yz^-1",
        _ => return None,
    };
    Some(text.parse().expect("literal word"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(text: &str) -> FamilyWord {
        family_word(&text.parse().unwrap()).unwrap()
    }

    #[test]
    fn worked_examples() {
        let b = fw("(5/2,5/2,5/2)");
        assert_eq!(b.shape, Shape::ThreeComponent);
        let m = match_word(&b, &worked_example_word(&b.form).unwrap()).unwrap();
        assert_eq!(m.transform, Transform::Inverse);

        let t = fw("(4/1,4/1,4/1)");
        let m = match_word(&t, &worked_example_word(&t.form).unwrap()).unwrap();
        assert_eq!((m.frame, m.transform), (Frame::Raw, Transform::Mirror));

        let k = fw("(6/3,6/3,6/3)");
        assert_eq!(k.display_word(), "z^-1xz^-1yz^-1");
        let m = match_word(&k, &worked_example_word(&k.form).unwrap()).unwrap();
        assert_eq!(m.transform, Transform::Identity);
    }

    #[test]
    fn rejects_other_shapes() {
        let f = "(4/2,4/1,3/1)".parse().unwrap();
        assert!(matches!(family_word(&f), Err(Error::InvalidForm { .. })));
    }

    #[test]
    fn torus_cases() {
        assert_eq!(torus_case(1, 4).word, None);
        assert_eq!(torus_case(1, 6).word.unwrap().to_string(), "cbacba");
        assert_eq!(torus_case(2, 5).word.unwrap().to_string(), "cbac");
        assert_eq!(torus_case(0, 6).word.unwrap().to_string(), "cbacbacb");
    }
}
