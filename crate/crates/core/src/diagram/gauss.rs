//! Signed Gauss codes and Dowker–Thistlethwaite codes of the canonical
//! diagram.
//!
//! Each component is read underarc by underarc: the under-passes of
//! `z_1, …, z_k` along `τ̃_i`, then the over-passes of the bridge from
//! `F_i` to `σ(F_i)`, which is where the next underarc starts.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::form::SchubertForm;
use crate::presentation::oriented;
use crate::vertex::VertexSet;

use super::{build_diagram_of, CanonicalDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GaussEntry {
    pub crossing: usize,
    pub over: bool,
    pub sign: i8,
}

impl fmt::Display for GaussEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ou = if self.over { 'O' } else { 'U' };
        let s = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{ou}{}{s}", self.crossing)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaussCode {
    pub components: Vec<Vec<GaussEntry>>,
}

impl GaussCode {
    pub fn crossing_count(&self) -> usize {
        let mut ids: Vec<usize> = self.components.iter().flatten().map(|e| e.crossing).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.len()
    }

    pub fn symbol_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    /// Every crossing occurs exactly twice, once over and once under, with
    /// the same sign.
    pub fn is_well_formed(&self) -> bool {
        let n = self.crossing_count();
        let mut over = vec![0usize; n + 1];
        let mut under = vec![0usize; n + 1];
        let mut sign = vec![0i8; n + 1];
        for e in self.components.iter().flatten() {
            if e.crossing == 0 || e.crossing > n {
                return false;
            }
            if e.over {
                over[e.crossing] += 1;
            } else {
                under[e.crossing] += 1;
            }
            if sign[e.crossing] != 0 && sign[e.crossing] != e.sign {
                return false;
            }
            sign[e.crossing] = e.sign;
        }
        (1..=n).all(|c| over[c] == 1 && under[c] == 1)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, comp) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            for (j, e) in comp.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

pub fn gauss_code(form: &SchubertForm) -> Result<GaussCode> {
    let (bf, o) = oriented(form)?;
    let d = build_diagram_of(&bf, Some(&o));
    gauss_code_of(&d, &o, bf.sigma())
}

pub fn gauss_code_of(
    d: &CanonicalDiagram,
    o: &crate::orient::OrientationData,
    sigma: &crate::perm::Permutation,
) -> Result<GaussCode> {
    let set = VertexSet::of(&d.form);
    let sign_of = |id: usize| d.crossings[id - 1].sign.unwrap_or(0);
    let mut visited = [false; 3];
    let mut components = Vec::new();
    for first in 0..3 {
        if visited[first] {
            continue;
        }
        let mut comp = Vec::new();
        let mut i = first;
        while !visited[i] {
            visited[i] = true;
            for &z in &o.initial_segment(i)[1..] {
                let id = d.crossing_id(z).ok_or_else(|| {
                    Error::Internal(format!("{}: endpoint {z} inside an underarc", d.form))
                })?;
                comp.push(GaussEntry {
                    crossing: id,
                    over: false,
                    sign: sign_of(id),
                });
            }
            let f = o.final_[i];
            let bridge = f.bridge;
            let half = set.half(bridge);
            let positions: Vec<u32> = if f.index == 0 {
                (1..half).collect()
            } else {
                (1..half).rev().collect()
            };
            for pos in positions {
                let id = d
                    .crossing_id(set.vertex(bridge, pos as i64))
                    .expect("interior vertex");
                comp.push(GaussEntry {
                    crossing: id,
                    over: true,
                    sign: sign_of(id),
                });
            }
            let next = sigma.apply(f);
            i = (0..3).find(|&j| o.initial[j] == next).ok_or_else(|| {
                Error::Internal(format!("{}: no underarc starts at {next}", d.form))
            })?;
        }
        components.push(comp);
    }
    let code = GaussCode { components };
    if !code.is_well_formed() {
        return Err(Error::Internal(format!("{}: malformed Gauss code", d.form)));
    }
    Ok(code)
}

/// Dowker–Thistlethwaite code: the even label paired with each odd label
/// `1, 3, …, 2N−1`, negated when the even visit is an over-pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DtCode {
    pub evens: Vec<i64>,
}

impl DtCode {
    pub fn pairs(&self) -> Vec<(i64, i64)> {
        self.evens
            .iter()
            .enumerate()
            .map(|(k, &e)| (2 * k as i64 + 1, e))
            .collect()
    }

    /// Over/under flag for each position `1..2N` of the traversal.
    pub fn decode(&self) -> Result<Vec<bool>> {
        let n = self.evens.len();
        let mut over = vec![None; 2 * n];
        for (odd, even) in self.pairs() {
            let e = even.unsigned_abs() as usize;
            if e == 0 || e > 2 * n || !e.is_multiple_of(2) || over[e - 1].is_some() {
                return Err(Error::Internal("malformed DT code".into()));
            }
            let even_over = even < 0;
            over[e - 1] = Some(even_over);
            over[odd as usize - 1] = Some(!even_over);
        }
        over.into_iter()
            .map(|x| x.ok_or_else(|| Error::Internal("DT code misses a label".into())))
            .collect()
    }
}

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.evens.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn dt_code(form: &SchubertForm) -> Result<DtCode> {
    let code = gauss_code(form)?;
    dt_from_gauss(form, &code)
}

pub fn dt_from_gauss(form: &SchubertForm, code: &GaussCode) -> Result<DtCode> {
    if code.components.len() != 1 {
        return Err(Error::NotAKnot {
            form: *form,
            components: code.components.len() as u8,
        });
    }
    let seq = &code.components[0];
    let n = code.crossing_count();
    let mut labels: Vec<[Option<usize>; 2]> = vec![[None, None]; n + 1];
    for (k, e) in seq.iter().enumerate() {
        let slot = if labels[e.crossing][0].is_none() { 0 } else { 1 };
        labels[e.crossing][slot] = Some(k + 1);
    }
    let mut evens = vec![0i64; n];
    for (c, pair) in labels.iter().enumerate().skip(1) {
        let [Some(x), Some(y)] = *pair else {
            return Err(Error::Internal(format!("crossing {c} not visited twice")));
        };
        if (x + y) % 2 == 0 {
            return Err(Error::Internal(format!(
                "crossing {c} has labels {x}, {y} of equal parity"
            )));
        }
        let (odd, even) = if x % 2 == 1 { (x, y) } else { (y, x) };
        let even_over = seq[even - 1].over;
        evens[(odd - 1) / 2] = if even_over { -(even as i64) } else { even as i64 };
    }
    Ok(DtCode { evens })
}
