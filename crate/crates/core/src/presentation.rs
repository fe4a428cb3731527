//! Over and under presentations of the link group.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::butterfly::Butterfly;
use crate::classify::{component_count, reduced_butterfly};
use crate::error::{Error, Result};
use crate::form::SchubertForm;
use crate::orient::{orient, OrientationData};
use crate::vertex::{Vertex, VertexSet};
use crate::word::{Generator, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Over,
    Under,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    Knot,
    TwoComponent,
    ThreeComponent,
}

impl Shape {
    pub fn from_components(k: u8) -> Shape {
        match k {
            1 => Shape::Knot,
            2 => Shape::TwoComponent,
            _ => Shape::ThreeComponent,
        }
    }

    pub fn components(self) -> u8 {
        match self {
            Shape::Knot => 1,
            Shape::TwoComponent => 2,
            Shape::ThreeComponent => 3,
        }
    }

    /// `(left, right)` generators of the three relations `x w = w y`.
    fn target(self) -> [(Generator, Generator); 3] {
        use Generator::*;
        match self {
            Shape::Knot => [(A, B), (B, C), (C, A)],
            Shape::TwoComponent => [(A, B), (B, A), (C, C)],
            Shape::ThreeComponent => [(A, A), (B, B), (C, C)],
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Knot => "knot",
            Shape::TwoComponent => "2-component link",
            Shape::ThreeComponent => "3-component link",
        })
    }
}

/// `left · word = word · right`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub name: String,
    pub word_name: String,
    pub left: Letter,
    pub word: Word,
    pub right: Letter,
}

impl Relation {
    /// `left · word · right⁻¹ · word⁻¹`.
    pub fn relator(&self) -> Word {
        let mut out = vec![self.left];
        out.extend_from_slice(self.word.letters());
        out.push(self.right.inverse());
        out.extend_from_slice(self.word.inverse().letters());
        Word(out)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = &self.word_name;
        write!(f, "{} {w} = {w} {}", self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub kind: Kind,
    pub form: SchubertForm,
    pub shape: Shape,
    pub generators: Vec<Generator>,
    pub relators: Vec<Word>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<Relation>>,
    pub meridian: Generator,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub longitude: Option<Word>,
    /// Original generator name to presented name.
    pub substitution: BTreeMap<Generator, Generator>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
}

impl GroupPresentation {
    pub fn total_relator_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    /// Drops the longest relator (the first of several equally long ones)
    /// together with its relation.
    pub fn drop_longest(&self) -> GroupPresentation {
        let mut out = self.clone();
        let longest = (0..self.relators.len())
            .rev()
            .max_by_key(|&i| self.relators[i].len());
        if let Some(i) = longest {
            out.relators.remove(i);
            if let Some(rel) = out.relations.as_mut() {
                rel.remove(i);
            }
        }
        out
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn exponent_matrix(&self) -> Vec<[i64; 3]> {
        self.relators.iter().map(Word::abelianize).collect()
    }

    pub fn export(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("presentation serializes");
                s.push('\n');
                s
            }
            Format::GapLike => self.to_gap(),
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        let kind = match self.kind {
            Kind::Over => "over",
            Kind::Under => "under",
        };
        let _ = writeln!(out, "{kind} presentation of {} ({})", self.form, self.shape);
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        match &self.relations {
            Some(rels) => {
                let body: Vec<String> = rels.iter().map(|r| r.to_string()).collect();
                let _ = writeln!(out, "< {} | {} >", gens.join(", "), body.join(", "));
                for r in rels {
                    let _ = writeln!(out, "{} = {}", r.word_name, r.word);
                }
            }
            None => {
                let names: Vec<String> =
                    (1..=self.relators.len()).map(|i| format!("r{i}")).collect();
                let _ = writeln!(out, "< {} | {} >", gens.join(", "), names.join(", "));
                for (name, r) in names.iter().zip(&self.relators) {
                    let _ = writeln!(out, "{name} = {r}");
                }
            }
        }
        if self.substitution.iter().any(|(k, v)| k != v) {
            let map: Vec<String> = self
                .substitution
                .iter()
                .map(|(k, v)| format!("{k}->{v}"))
                .collect();
            let _ = writeln!(out, "substitution: {}", map.join(", "));
        }
        if let Some(v) = &self.variant {
            let _ = writeln!(out, "variant: {v}");
        }
        let _ = writeln!(out, "meridian: {}", self.meridian);
        if let Some(l) = &self.longitude {
            let _ = writeln!(out, "longitude: {l}");
        }
        out
    }

    fn to_gap(&self) -> String {
        let gap_word = |w: &Word| -> String {
            if w.is_empty() {
                return "One(F)".into();
            }
            w.letters()
                .iter()
                .map(|l| {
                    let i = l.gen.index() + 1;
                    if l.exp < 0 {
                        format!("F.{i}^-1")
                    } else {
                        format!("F.{i}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        };
        let rels: Vec<String> = self.relators.iter().map(gap_word).collect();
        let mut out = String::new();
        let _ = writeln!(out, "F := FreeGroup(3);;");
        let _ = writeln!(out, "G := F / [ {} ];;", rels.join(", "));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    GapLike,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "gap-like" | "gap" => Ok(Format::GapLike),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Γ: the bridge of `x` and whether `x` lies on the bridge's side of the
/// butterfly, corrected by the bridge direction.
pub fn gamma_letter(x: Vertex, o: &OrientationData) -> Letter {
    let set = VertexSet::of(&o.form);
    let delta = o.delta(x.bridge);
    let inside = x.index > 0 && x.index <= set.half(x.bridge);
    let exp = if inside { delta } else { -delta };
    Letter::new(Generator::of_bridge(x.bridge), exp)
}

fn gamma_word(vs: &[Vertex], o: &OrientationData) -> Word {
    vs.iter().map(|&x| gamma_letter(x, o)).collect()
}

/// Over relators `Γ(τ_1), Γ(τ_2), Γ(τ_3)`.
pub fn over_presentation(form: &SchubertForm) -> Result<GroupPresentation> {
    let bf = reduced_butterfly(form)?;
    let o = orient(&bf)?;
    over_presentation_of(&bf, &o)
}

pub fn over_presentation_of(bf: &Butterfly, o: &OrientationData) -> Result<GroupPresentation> {
    let shape = Shape::from_components(component_count(bf)?);
    Ok(GroupPresentation {
        kind: Kind::Over,
        form: o.form,
        shape,
        generators: Generator::ALL.to_vec(),
        relators: o.tau.iter().map(|t| gamma_word(t, o)).collect(),
        relations: None,
        meridian: Generator::A,
        longitude: None,
        substitution: identity_map(),
        variant: None,
    })
}

fn identity_map() -> BTreeMap<Generator, Generator> {
    Generator::ALL.iter().map(|&g| (g, g)).collect()
}

/// The relations `Γ(I_i) w_i = w_i Γ(F_i)⁻¹` with `w_i = Γ(z_1 ⋯ z_k)`,
/// in the cycle order and original generator names.
pub fn raw_over_relations(o: &OrientationData) -> Result<Vec<Relation>> {
    (0..3)
        .map(|i| {
            let seg = o.initial_segment(i);
            let left = gamma_letter(o.initial[i], o);
            let right = gamma_letter(o.final_[i], o).inverse();
            if !left.is_positive() || !right.is_positive() {
                return Err(Error::Internal(format!(
                    "{}: relation {} has a negative end letter",
                    o.form,
                    i + 1
                )));
            }
            Ok(Relation {
                name: format!("r{}", i + 1),
                word_name: format!("w{}", i + 1),
                left,
                word: gamma_word(&seg[1..], o),
                right,
            })
        })
        .collect()
}

/// A generator renaming together with a reordering of the relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Renaming {
    pub map: [Generator; 3],
    pub order: [usize; 3],
}

const RENAMES: [[Generator; 3]; 6] = {
    use Generator::*;
    [
        [A, B, C],
        [A, C, B],
        [B, A, C],
        [C, B, A],
        [B, C, A],
        [C, A, B],
    ]
};

const ORDERS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Every renaming that puts the raw relations into the standard shape, in
/// a fixed preference order (identity first).
pub fn shape_renamings(raw: &[Relation], shape: Shape) -> Vec<Renaming> {
    let target = shape.target();
    let mut out = Vec::new();
    for map in RENAMES {
        for order in ORDERS {
            let ok = order.iter().zip(target).all(|(&i, (l, r))| {
                map[raw[i].left.gen.index()] == l && map[raw[i].right.gen.index()] == r
            });
            if ok {
                out.push(Renaming { map, order });
            }
        }
    }
    out
}

pub fn apply_renaming(raw: &[Relation], r: Renaming) -> Vec<Relation> {
    r.order
        .iter()
        .enumerate()
        .map(|(k, &i)| {
            let rel = &raw[i];
            Relation {
                name: rel.name.clone(),
                word_name: format!("w{}", k + 1),
                left: Letter::new(r.map[rel.left.gen.index()], rel.left.exp),
                word: rel.word.substitute(&r.map),
                right: Letter::new(r.map[rel.right.gen.index()], rel.right.exp),
            }
        })
        .collect()
}

/// Standard-shape relations `a w_1 = w_1 b, …` (knot), `a w_1 = w_1 b,
/// b w_2 = w_2 a, c w_3 = w_3 c` (2 components) or `x w = w x` (3
/// components), after the recorded renaming.
pub fn over_relations(form: &SchubertForm) -> Result<GroupPresentation> {
    let bf = reduced_butterfly(form)?;
    let o = orient(&bf)?;
    over_relations_of(&bf, &o)
}

pub fn over_relations_of(bf: &Butterfly, o: &OrientationData) -> Result<GroupPresentation> {
    let shape = Shape::from_components(component_count(bf)?);
    let raw = raw_over_relations(o)?;
    let renaming = *shape_renamings(&raw, shape).first().ok_or_else(|| {
        Error::Internal(format!("{}: relations fit no standard shape", o.form))
    })?;
    let relations = apply_renaming(&raw, renaming);
    let longitude = (shape == Shape::Knot).then(|| longitude_of(&relations));
    Ok(GroupPresentation {
        kind: Kind::Over,
        form: o.form,
        shape,
        generators: Generator::ALL.to_vec(),
        relators: relations.iter().map(Relation::relator).collect(),
        meridian: Generator::A,
        longitude,
        substitution: Generator::ALL
            .iter()
            .map(|&g| (g, renaming.map[g.index()]))
            .collect(),
        relations: Some(relations),
        variant: None,
    })
}

fn longitude_of(relations: &[Relation]) -> Word {
    let product = relations
        .iter()
        .fold(Word::new(), |acc, r| acc.concat(&r.word));
    let k = product.total_exponent();
    let tail = Letter::new(Generator::A, if k > 0 { -1 } else { 1 });
    let mut l = product;
    for _ in 0..k.unsigned_abs() {
        l.push(tail);
    }
    l
}

/// Meridian `a` and longitude `w_1 w_2 w_3 a^{-k}` of a knot, with the
/// rewrite `a·w_1w_2w_3 → w_1 b w_2 w_3 → w_1 w_2 c w_3 → w_1w_2w_3·a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeripheralSystem {
    pub form: SchubertForm,
    pub meridian: Generator,
    pub longitude: Word,
    pub k: i64,
    pub steps: Vec<Word>,
}

pub fn peripheral_system(form: &SchubertForm) -> Result<PeripheralSystem> {
    let g = over_relations(form)?;
    peripheral_system_of(&g)
}

pub fn peripheral_system_of(g: &GroupPresentation) -> Result<PeripheralSystem> {
    if g.shape != Shape::Knot {
        return Err(Error::NotAKnot {
            form: g.form,
            components: g.shape.components(),
        });
    }
    let rels = g.relations.as_ref().ok_or_else(|| {
        Error::Internal("peripheral system needs the relation form".into())
    })?;
    let product = rels.iter().fold(Word::new(), |acc, r| acc.concat(&r.word));
    let k = product.total_exponent();

    let mut current = vec![Letter::pos(g.meridian)];
    current.extend_from_slice(product.letters());
    let mut steps = vec![Word(current.clone())];
    let mut cursor = 0;
    for rel in rels {
        let n = rel.word.len();
        let window = &current[cursor..cursor + 1 + n];
        if window[0] != rel.left || &window[1..] != rel.word.letters() {
            return Err(Error::Internal(format!(
                "{}: relation {} does not apply at position {cursor}",
                g.form, rel.name
            )));
        }
        let mut replaced = rel.word.letters().to_vec();
        replaced.push(rel.right);
        current.splice(cursor..cursor + 1 + n, replaced);
        cursor += n;
        steps.push(Word(current.clone()));
    }
    let mut expected = product.letters().to_vec();
    expected.push(Letter::pos(g.meridian));
    if current != expected {
        return Err(Error::Internal(format!(
            "{}: rewrite ends at {} instead of w1w2w3a",
            g.form,
            Word(current)
        )));
    }
    Ok(PeripheralSystem {
        form: g.form,
        meridian: g.meridian,
        longitude: g.longitude.clone().unwrap_or_else(|| longitude_of(rels)),
        k,
        steps,
    })
}

/// ρ: the underarc through `x` (or through `γ(x)` with the inverse sign).
pub fn rho(x: Vertex, bf: &Butterfly, o: &OrientationData) -> Result<Letter> {
    let set = bf.vertex_set();
    let deltas = o.deltas();
    let segs = o.initial_segments();
    let letter = |i: usize, inside: bool| {
        let d = deltas[i];
        Letter::new(Generator::from_index(i), if inside { d } else { -d })
    };
    if set.is_endpoint(x) {
        let i = o.cycle_of(x);
        return Ok(letter(i, segs[i].contains(&x)));
    }
    let gx = bf.gamma().apply(x);
    let hits: Vec<(usize, bool)> = (0..3)
        .flat_map(|i| {
            let mut v = Vec::new();
            if segs[i].contains(&x) {
                v.push((i, true));
            }
            if segs[i].contains(&gx) {
                v.push((i, false));
            }
            v
        })
        .collect();
    match hits.as_slice() {
        [(i, inside)] => Ok(letter(*i, *inside)),
        _ => Err(Error::Internal(format!(
            "{}: {x} and its reflection meet {} initial segments",
            o.form,
            hits.len()
        ))),
    }
}

const PAPER_KNOT_1: [(Generator, Generator); 3] = {
    use Generator::*;
    [(C, A), (A, B), (B, C)]
};
const PAPER_KNOT_2: [(Generator, Generator); 3] = {
    use Generator::*;
    [(B, A), (C, A), (A, C)]
};

/// Under presentation for any butterfly whose `μ` is reduced, ordered or
/// not.
pub fn under_presentation(form: &SchubertForm) -> Result<GroupPresentation> {
    let bf = Butterfly::new(*form)?;
    let o = orient(&bf)?;
    under_presentation_of(&bf, &o)
}

/// Relators `s_X = ρ(x_0 ⋯ x_{2N−1})` for the three butterflies, written
/// as relations `ρ(x_0)⁻¹ u_X = u_X ρ(x_N)` with `u_X = ρ(x_1 ⋯ x_{N−1})`.
pub fn under_presentation_of(bf: &Butterfly, o: &OrientationData) -> Result<GroupPresentation> {
    let shape = Shape::from_components(component_count(bf)?);
    let set = bf.vertex_set();
    let mut relators = Vec::with_capacity(3);
    let mut relations = Vec::with_capacity(3);
    for bridge in crate::vertex::Bridge::ALL {
        let n = set.half(bridge) as i64;
        let rho_at = |i: i64| rho(set.vertex(bridge, i), bf, o);
        let full: Word = (0..2 * n).map(rho_at).collect::<Result<_>>()?;
        let u: Word = (1..n).map(rho_at).collect::<Result<_>>()?;
        let first = rho_at(0)?;
        let middle = rho_at(n)?;
        let mut expected = vec![first];
        expected.extend_from_slice(u.letters());
        expected.push(middle);
        expected.extend_from_slice(u.inverse().letters());
        if full.letters() != expected.as_slice() {
            return Err(Error::Internal(format!(
                "{}: boundary word of butterfly {bridge} is not x u y u^-1",
                o.form
            )));
        }
        relators.push(full);
        relations.push(Relation {
            name: format!("s_{bridge}"),
            word_name: format!("u_{bridge}"),
            left: first.inverse(),
            word: u,
            right: middle,
        });
    }
    let pairs: Vec<(Generator, Generator)> =
        relations.iter().map(|r| (r.left.gen, r.right.gen)).collect();
    let variant = match shape {
        Shape::ThreeComponent if pairs.iter().all(|(l, r)| l == r) => "x u_x = u_x x".to_string(),
        Shape::Knot if pairs == PAPER_KNOT_1 => "knot triple 1".to_string(),
        Shape::Knot if pairs == PAPER_KNOT_2 => "knot triple 2".to_string(),
        _ => {
            let ps: Vec<String> = pairs.iter().map(|(l, r)| format!("{l}{r}")).collect();
            format!("pairs {}", ps.join(" "))
        }
    };
    Ok(GroupPresentation {
        kind: Kind::Under,
        form: o.form,
        shape,
        generators: Generator::ALL.to_vec(),
        relators,
        relations: Some(relations),
        meridian: Generator::A,
        longitude: None,
        substitution: identity_map(),
        variant: Some(variant),
    })
}

/// Convenience: validated reduced form to `(butterfly, orientation)`.
pub fn oriented(form: &SchubertForm) -> Result<(Butterfly, OrientationData)> {
    let bf = reduced_butterfly(form)?;
    let o = orient(&bf)?;
    Ok((bf, o))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(text: &str) -> SchubertForm {
        text.parse().unwrap()
    }

    #[test]
    fn gamma_letters() {
        let (_, o) = oriented(&f("(4/1,4/1,4/1)")).unwrap();
        let set = VertexSet::of(&o.form);
        use crate::vertex::Bridge;
        assert_eq!(gamma_letter(set.vertex(Bridge::A, 1), &o), Letter::new(Generator::A, 1));
        assert_eq!(gamma_letter(set.vertex(Bridge::A, 5), &o), Letter::new(Generator::A, -1));
        let (_, o) = oriented(&f("(4/1,4/2,3/1)")).unwrap();
        assert_eq!(o.delta_c, -1);
        assert_eq!(gamma_letter(set.vertex(Bridge::C, 1), &o), Letter::new(Generator::C, -1));
    }

    #[test]
    fn over_lengths() {
        let g = over_presentation(&f("(4/2,4/1,3/1)")).unwrap();
        assert_eq!(g.total_relator_length(), 22);
        let g = over_relations(&f("(4/2,4/1,3/1)")).unwrap();
        let ws: usize = g.relations.as_ref().unwrap().iter().map(|r| r.word.len()).sum();
        assert_eq!(ws, 8);
    }

    #[test]
    fn over_shapes() {
        assert_eq!(over_relations(&f("(5/2,5/2,5/2)")).unwrap().shape, Shape::ThreeComponent);
        let g = over_relations(&f("(4/1,4/2,3/1)")).unwrap();
        assert_eq!(g.shape, Shape::TwoComponent);
        let rels = g.relations.unwrap();
        let pairs: Vec<_> = rels.iter().map(|r| (r.left.gen, r.right.gen)).collect();
        use Generator::*;
        assert_eq!(pairs, [(A, B), (B, A), (C, C)]);
    }

    #[test]
    fn torus_knot_relations() {
        let g = over_relations(&f("(4/1,4/1,4/1)")).unwrap();
        let text = g.export(Format::Text);
        assert!(text.contains("< a, b, c | a w1 = w1 b, b w2 = w2 c, c w3 = w3 a >"));
        assert!(text.contains("substitution: a->a, b->c, c->b"));
        let p = peripheral_system_of(&g).unwrap();
        assert_eq!(p.steps.len(), 4);
        assert_eq!(p.longitude.total_exponent(), 0);
    }

    #[test]
    fn peripheral_needs_knot() {
        let g = over_relations(&f("(5/2,5/2,5/2)")).unwrap();
        assert!(matches!(peripheral_system_of(&g), Err(Error::NotAKnot { components: 3, .. })));
    }

    #[test]
    fn under_lengths_and_shape() {
        let g = under_presentation(&f("(5/2,5/2,5/2)")).unwrap();
        let lens: Vec<_> = g.relations.as_ref().unwrap().iter().map(|r| r.word.len()).collect();
        assert_eq!(lens, [4, 4, 4]);
        assert_eq!(g.variant.as_deref(), Some("x u_x = u_x x"));
        let g = under_presentation(&f("(5/3,4/1,3/2)")).unwrap();
        let lens: Vec<_> = g.relations.as_ref().unwrap().iter().map(|r| r.word.len()).collect();
        assert_eq!(lens, [4, 3, 2]);
    }

    #[test]
    fn rho_is_antisymmetric() {
        for text in ["(4/1,4/1,4/1)", "(6/3,6/3,6/3)", "(4/1,4/2,3/1)"] {
            let (bf, o) = oriented(&f(text)).unwrap();
            for x in bf.vertex_set().iter() {
                let gx = bf.gamma().apply(x);
                if gx != x {
                    assert_eq!(rho(gx, &bf, &o).unwrap(), rho(x, &bf, &o).unwrap().inverse());
                }
            }
            assert_eq!(rho(o.initial[0], &bf, &o).unwrap(), Letter::pos(Generator::A));
        }
    }

    #[test]
    fn exports() {
        let g = over_relations(&f("(4/1,4/1,4/1)")).unwrap();
        let json = g.export(Format::Json);
        let back: GroupPresentation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        let gap = g.export(Format::GapLike);
        assert!(gap.starts_with("F := FreeGroup(3);;\nG := F / [ F.1*"));
        assert!(matches!("tex".parse::<Format>(), Err(Error::UnsupportedFormat(_))));
    }

    #[test]
    fn drop_longest_removes_one() {
        let g = under_presentation(&f("(4/2,4/1,3/1)")).unwrap();
        let d = g.drop_longest();
        assert_eq!(d.relators.len(), 2);
        assert_eq!(d.relations.as_ref().unwrap().len(), 2);
        assert_eq!(d.relations.as_ref().unwrap()[0].name, "s_b");
    }
}
