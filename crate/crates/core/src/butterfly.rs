//! The permutations `γ`, `φ`, `μ = φγ` and `σ` of a 3-butterfly.

use crate::error::{Error, Result};
use crate::form::SchubertForm;
use crate::perm::Permutation;
use crate::vertex::{Bridge, Vertex, VertexSet};

/// A 3-butterfly with its vertex permutations.
///
/// Construction only needs `n ≤ p`, `m ≤ q`, `l ≤ s` and `t, v, w ≥ 1`, so
/// unordered forms are accepted; the classification conditions are checked
/// separately.
#[derive(Debug, Clone)]
pub struct Butterfly {
    form: SchubertForm,
    set: VertexSet,
    gamma: Permutation,
    phi: Permutation,
    mu: Permutation,
    sigma: Permutation,
}

impl Butterfly {
    pub fn new(form: SchubertForm) -> Result<Butterfly> {
        let (p, n, q, m, s, l) = form.as_tuple();
        if n > p || m > q || l > s {
            return Err(Error::InvalidForm {
                form,
                reason: "bridge offsets must satisfy n<=p, m<=q, l<=s".into(),
            });
        }
        if form.t() < 1 || form.v() < 1 || form.w() < 1 {
            return Err(Error::InvalidForm {
                form,
                reason: "each pair of butterflies must share at least one arc".into(),
            });
        }
        let set = VertexSet::of(&form);
        let gamma = gamma_of(set);
        let phi = Permutation::from_transpositions(set, arcs(&form))?;
        let mu = phi.compose(&gamma);
        let sigma = sigma_of(set);
        Ok(Butterfly {
            form,
            set,
            gamma,
            phi,
            mu,
            sigma,
        })
    }

    pub fn form(&self) -> &SchubertForm {
        &self.form
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.set
    }

    pub fn gamma(&self) -> &Permutation {
        &self.gamma
    }

    pub fn phi(&self) -> &Permutation {
        &self.phi
    }

    /// `μ = φ ∘ γ`, `γ` applied first.
    pub fn mu(&self) -> &Permutation {
        &self.mu
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn endpoints(&self) -> [Vertex; 6] {
        self.set.endpoints()
    }

    /// Transpositions of `φ` that lie in the forbidden set.
    pub fn forbidden_bicycles(&self) -> Vec<(Vertex, Vertex)> {
        forbidden_set(self.set)
            .into_iter()
            .filter(|&(x, y)| self.phi.apply(x) == y)
            .collect()
    }
}

/// `γ(x_i) = x_{2N−i}` on each butterfly.
pub fn gamma_of(set: VertexSet) -> Permutation {
    Permutation::from_fn(set, |v| set.vertex(v.bridge, -(v.index as i64)))
        .expect("reflection is a bijection")
}

/// `σ = (a_0 a_p)(b_0 b_q)(c_0 c_s)`.
pub fn sigma_of(set: VertexSet) -> Permutation {
    let pairs = Bridge::ALL.map(|b| (set.start(b), set.end(b)));
    Permutation::from_transpositions(set, pairs).expect("disjoint transpositions")
}

/// The `t + v + w` arcs of the diagram as vertex pairs: the transpositions
/// of `φ`. Listed as the families `a–b` (`i = 1..t`), `a–c` (`j = 0..w−1`),
/// `b–c` (`h = 1..v`).
pub fn arcs(form: &SchubertForm) -> Vec<(Vertex, Vertex)> {
    let set = VertexSet::of(form);
    let (n, m, l) = (form.n() as i64, form.m() as i64, form.l() as i64);
    let a = |i: i64| set.vertex(Bridge::A, i);
    let b = |i: i64| set.vertex(Bridge::B, i);
    let c = |i: i64| set.vertex(Bridge::C, i);
    let mut out = Vec::with_capacity((form.t() + form.v() + form.w()) as usize);
    for i in 1..=form.t() {
        out.push((a(n - i), b(m + i - 1)));
    }
    for j in 0..form.w() {
        out.push((a(n + j), c(l - j - 1)));
    }
    for h in 1..=form.v() {
        out.push((b(m - h), c(l + h - 1)));
    }
    out
}

/// The twelve endpoint pairs on different bridges.
pub fn forbidden_set(set: VertexSet) -> Vec<(Vertex, Vertex)> {
    let e = set.endpoints();
    let mut out = Vec::with_capacity(12);
    for (i, &x) in e.iter().enumerate() {
        for &y in &e[i + 1..] {
            if x.bridge != y.bridge {
                out.push((x, y));
            }
        }
    }
    out
}

/// True iff `φ` contains none of the forbidden transpositions.
pub fn forbidden_bicycle_check(phi: &Permutation) -> bool {
    forbidden_set(phi.vertex_set())
        .into_iter()
        .all(|(x, y)| phi.apply(x) != y)
}
