use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::form::SchubertForm;

/// One of the three bridges; also names the butterfly around it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bridge {
    A,
    B,
    C,
}

impl Bridge {
    pub const ALL: [Bridge; 3] = [Bridge::A, Bridge::B, Bridge::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Bridge::A => 'a',
            Bridge::B => 'b',
            Bridge::C => 'c',
        }
    }

    pub fn from_letter(c: char) -> Option<Bridge> {
        match c {
            'a' => Some(Bridge::A),
            'b' => Some(Bridge::B),
            'c' => Some(Bridge::C),
            _ => None,
        }
    }
}

impl fmt::Display for Bridge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A labelled boundary point `a_i`, `b_j` or `c_k` of a butterfly.
///
/// The index is always reduced into `0..2N` where `N` is `p`, `q` or `s`;
/// see [`VertexSet::vertex`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub bridge: Bridge,
    pub index: u32,
}

impl Vertex {
    pub fn new(bridge: Bridge, index: u32) -> Vertex {
        Vertex { bridge, index }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.bridge.letter(), self.index)
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Vertex> {
        let mut chars = s.chars();
        let bridge = chars.next().and_then(Bridge::from_letter);
        let index = chars.as_str().parse::<u32>().ok();
        match (bridge, index) {
            (Some(bridge), Some(index)) => Ok(Vertex { bridge, index }),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "expected a vertex label such as a3".into(),
            }),
        }
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// The vertex set `A ∪ B ∪ C` with `|A| = 2p`, `|B| = 2q`, `|C| = 2s`, laid
/// out densely as `A`, then `B`, then `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    half: [u32; 3],
}

impl VertexSet {
    pub fn new(p: u32, q: u32, s: u32) -> VertexSet {
        VertexSet { half: [p, q, s] }
    }

    pub fn of(form: &SchubertForm) -> VertexSet {
        VertexSet::new(form.p(), form.q(), form.s())
    }

    /// `p`, `q` or `s`.
    pub fn half(&self, bridge: Bridge) -> u32 {
        self.half[bridge.index()]
    }

    /// `2p`, `2q` or `2s`.
    pub fn modulus(&self, bridge: Bridge) -> u32 {
        2 * self.half(bridge)
    }

    pub fn len(&self) -> usize {
        self.half.iter().map(|&h| 2 * h as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The vertex with the given index taken modulo the butterfly size.
    pub fn vertex(&self, bridge: Bridge, index: i64) -> Vertex {
        let modulus = self.modulus(bridge) as i64;
        Vertex::new(bridge, index.rem_euclid(modulus) as u32)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.index < self.modulus(v.bridge)
    }

    fn offset(&self, bridge: Bridge) -> usize {
        Bridge::ALL[..bridge.index()]
            .iter()
            .map(|&b| self.modulus(b) as usize)
            .sum()
    }

    pub fn position(&self, v: Vertex) -> usize {
        debug_assert!(self.contains(v), "{v} outside {self:?}");
        self.offset(v.bridge) + v.index as usize
    }

    pub fn at(&self, position: usize) -> Vertex {
        let mut rest = position;
        for bridge in Bridge::ALL {
            let modulus = self.modulus(bridge) as usize;
            if rest < modulus {
                return Vertex::new(bridge, rest as u32);
            }
            rest -= modulus;
        }
        panic!("position {position} outside vertex set of size {}", self.len());
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        Bridge::ALL
            .into_iter()
            .flat_map(move |b| (0..self.modulus(b)).map(move |i| Vertex::new(b, i)))
    }

    /// Start of the bridge: `a_0`, `b_0` or `c_0`.
    pub fn start(&self, bridge: Bridge) -> Vertex {
        Vertex::new(bridge, 0)
    }

    /// End of the bridge: `a_p`, `b_q` or `c_s`.
    pub fn end(&self, bridge: Bridge) -> Vertex {
        Vertex::new(bridge, self.half(bridge))
    }

    /// The six bridge endpoints `E = {a_0, a_p, b_0, b_q, c_0, c_s}`.
    pub fn endpoints(&self) -> [Vertex; 6] {
        [
            self.start(Bridge::A),
            self.end(Bridge::A),
            self.start(Bridge::B),
            self.end(Bridge::B),
            self.start(Bridge::C),
            self.end(Bridge::C),
        ]
    }

    pub fn is_endpoint(&self, v: Vertex) -> bool {
        v.index == 0 || v.index == self.half(v.bridge)
    }

    /// Symbolic endpoint name (`a0`, `ap`, `b0`, `bq`, `c0`, `cs`) used when
    /// comparing endpoint patterns across forms.
    pub fn endpoint_name(&self, v: Vertex) -> Option<&'static str> {
        match (v.bridge, v.index) {
            (b, 0) => Some(["a0", "b0", "c0"][b.index()]),
            (b, i) if i == self.half(b) => Some(["ap", "bq", "cs"][b.index()]),
            _ => None,
        }
    }
}
