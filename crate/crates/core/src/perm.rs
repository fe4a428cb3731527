use crate::error::{Error, Result};
use crate::vertex::{Vertex, VertexSet};

/// A bijection of a [`VertexSet`] with its cycle decomposition.
///
/// Cycles are listed in order of their smallest member (in the dense layout
/// `A`, `B`, `C`), each starting at that member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    set: VertexSet,
    images: Vec<usize>,
    cycles: Vec<Vec<Vertex>>,
}

impl Permutation {
    pub fn identity(set: VertexSet) -> Permutation {
        Self::from_images(set, (0..set.len()).collect()).expect("identity is a bijection")
    }

    /// Builds the permutation `x ↦ f(x)`; fails if `f` is not a bijection.
    pub fn from_fn(set: VertexSet, f: impl Fn(Vertex) -> Vertex) -> Result<Permutation> {
        let images = set.iter().map(|v| set.position(f(v))).collect();
        Self::from_images(set, images)
    }

    /// Builds a product of disjoint transpositions; unlisted points are fixed.
    pub fn from_transpositions(
        set: VertexSet,
        pairs: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Permutation> {
        let mut images: Vec<Option<usize>> = vec![None; set.len()];
        for (x, y) in pairs {
            let (i, j) = (set.position(x), set.position(y));
            if images[i].is_some() || images[j].is_some() {
                return Err(Error::Internal(format!(
                    "transposition ({x} {y}) overlaps an earlier one"
                )));
            }
            images[i] = Some(j);
            images[j] = Some(i);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, img)| img.unwrap_or(i))
            .collect();
        Self::from_images(set, images)
    }

    fn from_images(set: VertexSet, images: Vec<usize>) -> Result<Permutation> {
        let mut hit = vec![false; set.len()];
        for &img in &images {
            if img >= set.len() || std::mem::replace(&mut hit[img], true) {
                return Err(Error::Internal("map is not a bijection".into()));
            }
        }
        let mut seen = vec![false; set.len()];
        let mut cycles = Vec::new();
        for start in 0..set.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(set.at(x));
                x = images[x];
            }
            cycles.push(cycle);
        }
        Ok(Permutation {
            set,
            images,
            cycles,
        })
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.set
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.set.at(self.images[self.set.position(v)])
    }

    /// The `k`-th iterate applied to `v`.
    pub fn power_apply(&self, v: Vertex, k: usize) -> Vertex {
        let mut x = self.set.position(v);
        for _ in 0..k {
            x = self.images[x];
        }
        self.set.at(x)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &Permutation) -> Permutation {
        assert_eq!(self.set, first.set, "permutations on different vertex sets");
        let images = first.images.iter().map(|&i| self.images[i]).collect();
        Self::from_images(self.set, images).expect("composition of bijections")
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Self::from_images(self.set, images).expect("inverse of a bijection")
    }

    pub fn cycles(&self) -> &[Vec<Vertex>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// The orbit `v, π(v), π²(v), …` in traversal order, starting at `v`.
    pub fn orbit(&self, v: Vertex) -> Vec<Vertex> {
        let start = self.set.position(v);
        let mut orbit = vec![v];
        let mut x = self.images[start];
        while x != start {
            orbit.push(self.set.at(x));
            x = self.images[x];
        }
        orbit
    }

    pub fn fixed_points(&self) -> Vec<Vertex> {
        self.cycles
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| c[0])
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| self.images[j] == i)
    }

    /// The 2-cycles, each written with its smaller member first.
    pub fn transpositions(&self) -> Vec<(Vertex, Vertex)> {
        self.cycles
            .iter()
            .filter(|c| c.len() == 2)
            .map(|c| (c[0], c[1]))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex::Bridge;
    use proptest::prelude::*;

    fn set() -> VertexSet {
        VertexSet::new(2, 2, 2)
    }

    #[test]
    fn rejects_non_bijection() {
        let r = Permutation::from_fn(set(), |_| Vertex::new(Bridge::A, 0));
        assert!(r.is_err());
        let a0 = Vertex::new(Bridge::A, 0);
        let a1 = Vertex::new(Bridge::A, 1);
        let a2 = Vertex::new(Bridge::A, 2);
        assert!(Permutation::from_transpositions(set(), [(a0, a1), (a1, a2)]).is_err());
    }

    #[test]
    fn cycle_of_a_rotation() {
        let s = set();
        let rot = Permutation::from_fn(s, |v| {
            if v.bridge == Bridge::A {
                s.vertex(Bridge::A, v.index as i64 + 1)
            } else {
                v
            }
        })
        .unwrap();
        assert_eq!(rot.cycle_count(), 1 + 8);
        assert_eq!(rot.cycles()[0].len(), 4);
        assert_eq!(rot.power_apply(Vertex::new(Bridge::A, 3), 2), Vertex::new(Bridge::A, 1));
        assert!(rot.compose(&rot.inverse()).is_identity());
        assert!(!rot.is_involution());
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        Just((0..12usize).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|images| Permutation::from_images(set(), images).unwrap())
    }

    proptest! {
        #[test]
        fn cycles_partition_and_close(pi in arb_perm()) {
            let total: usize = pi.cycles().iter().map(Vec::len).sum();
            prop_assert_eq!(total, 12);
            for cycle in pi.cycles() {
                for &v in cycle {
                    prop_assert_eq!(pi.power_apply(v, cycle.len()), v);
                }
                prop_assert_eq!(&pi.orbit(cycle[0]), cycle);
            }
        }

        #[test]
        fn composition_is_associative(a in arb_perm(), b in arb_perm(), c in arb_perm()) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }
    }
}
