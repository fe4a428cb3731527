//! Orientation of the underarcs (the three cycles of `μ`).

use serde::Serialize;

use crate::butterfly::Butterfly;
use crate::classify::is_reduced;
use crate::error::{Error, Result};
use crate::form::SchubertForm;
use crate::vertex::{Bridge, Vertex};

/// The cycles `τ_1, τ_2, τ_3` of `μ`, each anchored at its initial point
/// `I_i` and passing through its final point `F_i` halfway round.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientationData {
    pub form: SchubertForm,
    pub tau: [Vec<Vertex>; 3],
    pub initial: [Vertex; 3],
    #[serde(rename = "final")]
    pub final_: [Vertex; 3],
    pub delta_b: i8,
    pub delta_c: i8,
}

#[derive(Serialize)]
struct OrientationJson<'a> {
    form: SchubertForm,
    cycles: &'a [Vec<Vertex>; 3],
    endpoints: Vec<EndpointJson>,
    pattern: [&'static str; 6],
    delta_a: i8,
    delta_b: i8,
    delta_c: i8,
    initial_segments: Vec<&'a [Vertex]>,
}

#[derive(Serialize)]
struct EndpointJson {
    initial: Vertex,
    #[serde(rename = "final")]
    final_: Vertex,
}

impl OrientationData {
    /// `τ̃_i = (I_i, z_1, …, z_k)`, the half of `τ_i` before `F_i`.
    pub fn initial_segment(&self, i: usize) -> &[Vertex] {
        &self.tau[i][..self.tau[i].len() / 2]
    }

    pub fn initial_segments(&self) -> [&[Vertex]; 3] {
        [0, 1, 2].map(|i| self.initial_segment(i))
    }

    /// `(δ_a, δ_b, δ_c)` with `δ_a = 1`.
    pub fn deltas(&self) -> [i8; 3] {
        [1, self.delta_b, self.delta_c]
    }

    pub fn delta(&self, bridge: Bridge) -> i8 {
        self.deltas()[bridge.index()]
    }

    /// Index of the cycle containing `v`.
    pub fn cycle_of(&self, v: Vertex) -> usize {
        (0..3)
            .find(|&i| self.tau[i].contains(&v))
            .expect("cycles cover every vertex")
    }

    /// `(I_1, F_1, I_2, F_2, I_3, F_3)` as symbolic endpoint names.
    pub fn endpoint_pattern(&self) -> [&'static str; 6] {
        let set = crate::vertex::VertexSet::of(&self.form);
        let name = |v| set.endpoint_name(v).expect("endpoints lie in E");
        [
            name(self.initial[0]),
            name(self.final_[0]),
            name(self.initial[1]),
            name(self.final_[1]),
            name(self.initial[2]),
            name(self.final_[2]),
        ]
    }

    /// Rebuilds `τ_i` as `τ̃_i · F_i · γ(z_k) ⋯ γ(z_1)`.
    pub fn reconstruct(&self, bf: &Butterfly, i: usize) -> Vec<Vertex> {
        let head = self.initial_segment(i);
        let mut out = head.to_vec();
        out.push(self.final_[i]);
        out.extend(head[1..].iter().rev().map(|&z| bf.gamma().apply(z)));
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let json = OrientationJson {
            form: self.form,
            cycles: &self.tau,
            endpoints: (0..3)
                .map(|i| EndpointJson {
                    initial: self.initial[i],
                    final_: self.final_[i],
                })
                .collect(),
            pattern: self.endpoint_pattern(),
            delta_a: 1,
            delta_b: self.delta_b,
            delta_c: self.delta_c,
            initial_segments: self.initial_segments().to_vec(),
        };
        serde_json::to_value(json).expect("orientation serializes")
    }
}

/// Runs the orientation algorithm on a reduced butterfly.
///
/// `I_1 = a_p`. After closing cycle `i` at `F_i` the walk crosses the bridge
/// to `σ(F_i)`; if that returns to an already used endpoint, the next cycle
/// starts at the remaining one of `b_q`, `c_s`.
pub fn orient(bf: &Butterfly) -> Result<OrientationData> {
    if !is_reduced(bf) {
        return Err(Error::NotReduced(*bf.form()));
    }
    let set = bf.vertex_set();
    let sigma = bf.sigma();
    let (bq, cs) = (set.end(Bridge::B), set.end(Bridge::C));

    let walk = |start: Vertex| -> Result<(Vec<Vertex>, Vertex)> {
        let tau = bf.mu().orbit(start);
        if !tau.len().is_multiple_of(2) || tau.len() < 4 {
            return Err(Error::Internal(format!(
                "{}: cycle through {start} has length {}",
                bf.form(),
                tau.len()
            )));
        }
        let fin = tau[tau.len() / 2];
        if !set.is_endpoint(fin) {
            return Err(Error::Internal(format!(
                "{}: midpoint {fin} of the cycle through {start} is not an endpoint",
                bf.form()
            )));
        }
        Ok((tau, fin))
    };

    let i1 = set.end(Bridge::A);
    let (t1, f1) = walk(i1)?;
    let i2 = if sigma.apply(f1) == i1 { bq } else { sigma.apply(f1) };
    let (t2, f2) = walk(i2)?;
    let used = [i1, f1, i2, f2];
    let next = sigma.apply(f2);
    let i3 = if !used.contains(&next) {
        next
    } else {
        let rest: Vec<_> = [bq, cs].into_iter().filter(|v| !used.contains(v)).collect();
        match rest.as_slice() {
            [v] => *v,
            _ => {
                return Err(Error::Internal(format!(
                    "{}: no unique starting point for the third cycle",
                    bf.form()
                )))
            }
        }
    };
    let (t3, f3) = walk(i3)?;

    let finals = [f1, f2, f3];
    let delta = |b: Bridge| if finals.contains(&set.start(b)) { 1 } else { -1 };
    let data = OrientationData {
        form: *bf.form(),
        tau: [t1, t2, t3],
        initial: [i1, i2, i3],
        final_: finals,
        delta_b: delta(Bridge::B),
        delta_c: delta(Bridge::C),
    };
    let mut ends: Vec<_> = data.initial.iter().chain(&data.final_).copied().collect();
    ends.sort();
    ends.dedup();
    if ends.len() != 6 {
        return Err(Error::Internal(format!(
            "{}: cycle endpoints do not exhaust E",
            bf.form()
        )));
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::reduced_butterfly;

    fn data(text: &str) -> (Butterfly, OrientationData) {
        let bf = reduced_butterfly(&text.parse().unwrap()).unwrap();
        let o = orient(&bf).unwrap();
        (bf, o)
    }

    #[test]
    fn borromean() {
        let (_, o) = data("(5/2,5/2,5/2)");
        assert_eq!(o.endpoint_pattern(), ["ap", "a0", "bq", "b0", "cs", "c0"]);
        assert_eq!((o.delta_b, o.delta_c), (1, 1));
    }

    #[test]
    fn torus_knot_row() {
        let (_, o) = data("(4/1,4/1,4/1)");
        assert_eq!(o.endpoint_pattern(), ["ap", "c0", "cs", "b0", "bq", "a0"]);
        assert_eq!((o.delta_b, o.delta_c), (1, 1));
    }

    #[test]
    fn two_component_row() {
        let (_, o) = data("(4/1,4/2,3/1)");
        assert_eq!(o.endpoint_pattern(), ["ap", "a0", "bq", "cs", "c0", "b0"]);
        assert_eq!((o.delta_b, o.delta_c), (1, -1));
    }

    #[test]
    fn halves_mirror() {
        for text in ["(4/2,4/1,3/1)", "(6/3,6/3,6/3)", "(5/2,5/2,5/2)"] {
            let (bf, o) = data(text);
            for i in 0..3 {
                assert_eq!(o.reconstruct(&bf, i), o.tau[i]);
                assert_eq!(o.initial_segment(i).len() * 2, o.tau[i].len());
                assert_eq!(bf.mu().power_apply(o.initial[i], o.tau[i].len() / 2), o.final_[i]);
            }
        }
    }

    #[test]
    fn rejects_unreduced() {
        let bf = Butterfly::new("(5/1,5/2,5/1)".parse().unwrap()).unwrap();
        assert!(matches!(orient(&bf), Err(Error::NotReduced(_))));
    }

    #[test]
    fn json_labels() {
        let (_, o) = data("(5/2,5/2,5/2)");
        let v = o.to_json();
        assert_eq!(v["cycles"][0][0], "a5");
        assert_eq!(v["delta_b"], 1);
        assert_eq!(v["pattern"][1], "a0");
    }
}
