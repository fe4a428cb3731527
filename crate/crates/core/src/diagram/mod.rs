//! The canonical 3-bridge diagram of a Schubert form.
//!
//! Butterfly `P` (bridge `a`) is centred above the origin, `Q` (bridge `b`)
//! lower left and `S` (bridge `c`) lower right. Boundary points sit on a
//! circle of radius [`VERTEX_RADIUS`] around each centre; `a_0` is at the
//! bottom of `P` and indices increase counterclockwise. Each arc leaves its
//! vertex on a spiral out to [`RING_RADIUS`], then runs straight to the
//! facing butterfly. The straight parts between two butterflies are mirror
//! images across the perpendicular bisector of the centres, so they are
//! parallel and never meet.

pub mod gauss;
pub mod svg;

use serde::{Serialize, Serializer};

use crate::butterfly::Butterfly;
use crate::classify::is_reduced;
use crate::error::{Error, Result};
use crate::form::SchubertForm;
use crate::orient::{orient, OrientationData};
use crate::vertex::{Bridge, Vertex, VertexSet};

pub use gauss::{dt_code, gauss_code, DtCode, GaussCode, GaussEntry};
pub use svg::{render_svg, SvgOptions};

pub const CENTER_DISTANCE: f64 = 250.0;
pub const VERTEX_RADIUS: f64 = 90.0;
pub const RING_RADIUS: f64 = 110.0;
const SPIRAL_STEPS: usize = 12;
/// Largest angle in degrees swept by one segment of a spiral.
const SPIRAL_MAX_STEP: f64 = 1.0;
/// Half-width in degrees of the block of arc exits facing a neighbour.
const BLOCK_HALF_WIDTH: f64 = 25.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Point {
        Point { x, y }
    }

    fn polar(center: Point, radius: f64, degrees: f64) -> Point {
        let r = degrees.to_radians();
        Point::new(center.x + radius * r.cos(), center.y + radius * r.sin())
    }

    pub fn minus(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }

    pub fn lerp(self, o: Point, t: f64) -> Point {
        Point::new(self.x + (o.x - self.x) * t, self.y + (o.y - self.y) * t)
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }
}

fn round2(x: f64) -> f64 {
    let r = (x * 100.0).round() / 100.0;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [round2(self.x), round2(self.y)].serialize(s)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BridgeGeometry {
    pub bridge: Bridge,
    pub center: Point,
    pub start: Point,
    pub end: Point,
    /// Boundary points of the butterfly, in index order.
    pub vertices: Vec<(Vertex, Point)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ArcFamily {
    #[serde(rename = "ab")]
    AB,
    #[serde(rename = "bc")]
    BC,
    #[serde(rename = "ca")]
    CA,
}

#[derive(Debug, Clone, Serialize)]
pub struct Arc {
    pub family: ArcFamily,
    pub from: Vertex,
    pub to: Vertex,
    pub path: Vec<Point>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Crossing {
    pub id: usize,
    pub bridge: Bridge,
    /// `1..N−1` counted from `x_0` along the bridge.
    pub position: u32,
    /// The under-strand in traversal direction when the diagram is
    /// oriented, otherwise `(x_i, x_{2N−i})`.
    pub under: (Vertex, Vertex),
    pub at: Point,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CanonicalDiagram {
    pub form: SchubertForm,
    pub bridges: [BridgeGeometry; 3],
    pub arcs: Vec<Arc>,
    pub crossings: Vec<Crossing>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<[i8; 3]>,
}

fn center(bridge: Bridge) -> Point {
    let angle = [90.0, 210.0, 330.0][bridge.index()];
    Point::polar(Point::new(0.0, 0.0), CENTER_DISTANCE, angle)
}

/// Angle of `x_0` around its centre; the bridge runs from there across.
fn base_angle(bridge: Bridge) -> f64 {
    [270.0, 30.0, 150.0][bridge.index()]
}

fn vertex_angle(set: &VertexSet, v: Vertex) -> f64 {
    base_angle(v.bridge) + v.index as f64 * 180.0 / set.half(v.bridge) as f64
}

fn vertex_point(set: &VertexSet, v: Vertex) -> Point {
    Point::polar(center(v.bridge), VERTEX_RADIUS, vertex_angle(set, v))
}

/// Direction in degrees from the centre of `from` towards `to`.
fn facing(from: Bridge, to: Bridge) -> f64 {
    let d = center(to).minus(center(from));
    d.y.atan2(d.x).to_degrees().rem_euclid(360.0)
}

/// The arc families as `(x, y)` pairs together with the exit angles of
/// both ends on their rings.
struct ArcPlan {
    family: ArcFamily,
    from: Vertex,
    to: Vertex,
    from_angle: f64,
    to_angle: f64,
}

fn plan_arcs(form: &SchubertForm) -> Vec<ArcPlan> {
    let set = VertexSet::of(form);
    let (n, m, l) = (form.n() as i64, form.m() as i64, form.l() as i64);
    let (t, v, w) = (form.t(), form.v(), form.w());
    let a = |i: i64| set.vertex(Bridge::A, i);
    let b = |i: i64| set.vertex(Bridge::B, i);
    let c = |i: i64| set.vertex(Bridge::C, i);
    let offset = |j: i64, count: i64| (j as f64 - 0.5) * 2.0 * BLOCK_HALF_WIDTH / count as f64;
    let pq = facing(Bridge::A, Bridge::B);
    let ps = facing(Bridge::A, Bridge::C);
    let qp = facing(Bridge::B, Bridge::A);
    let qs = facing(Bridge::B, Bridge::C);
    let sp = facing(Bridge::C, Bridge::A);
    let sq = facing(Bridge::C, Bridge::B);
    let mut out = Vec::new();
    for j in 1..=t {
        out.push(ArcPlan {
            family: ArcFamily::AB,
            from: a(n - j),
            to: b(m + j - 1),
            from_angle: pq + BLOCK_HALF_WIDTH - offset(j, t),
            to_angle: qp - BLOCK_HALF_WIDTH + offset(j, t),
        });
    }
    for j in 1..=v {
        out.push(ArcPlan {
            family: ArcFamily::BC,
            from: b(m - j),
            to: c(l + j - 1),
            from_angle: qs + BLOCK_HALF_WIDTH - offset(j, v),
            to_angle: sq - BLOCK_HALF_WIDTH + offset(j, v),
        });
    }
    for j in 1..=w {
        out.push(ArcPlan {
            family: ArcFamily::CA,
            from: c(l - j),
            to: a(n + j - 1),
            from_angle: sp + BLOCK_HALF_WIDTH - offset(j, w),
            to_angle: ps - BLOCK_HALF_WIDTH + offset(j, w),
        });
    }
    out
}

/// Vertex angle lifted by a multiple of 360 so that the spirals of one
/// butterfly keep their cyclic order and stay short on average.
fn lifted_angles(set: &VertexSet, exits: &[(Vertex, f64)]) -> Vec<f64> {
    let bridge = exits[0].0.bridge;
    let modulus = set.modulus(bridge) as i64;
    // order exits by block angle; vertex indices then increase cyclically
    let mut idx: Vec<usize> = (0..exits.len()).collect();
    idx.sort_by(|&i, &j| exits[i].1.total_cmp(&exits[j].1));
    let first = exits[idx[0]].0.index as i64;
    let step = 180.0 / set.half(bridge) as f64;
    let raw: Vec<f64> = idx
        .iter()
        .map(|&i| {
            let k = (exits[i].0.index as i64 - first).rem_euclid(modulus);
            base_angle(bridge) + (first + k) as f64 * step
        })
        .collect();
    let mean_diff: f64 = idx
        .iter()
        .zip(&raw)
        .map(|(&i, th)| th - exits[i].1)
        .sum::<f64>()
        / raw.len() as f64;
    let lift = -(mean_diff / 360.0).round() * 360.0;
    let mut out = vec![0.0; exits.len()];
    for (&i, th) in idx.iter().zip(raw) {
        out[i] = th + lift;
    }
    out
}

fn spiral(c: Point, from_angle: f64, to_angle: f64) -> Vec<Point> {
    let steps = SPIRAL_STEPS.max(((to_angle - from_angle).abs() / SPIRAL_MAX_STEP).ceil() as usize);
    (0..=steps)
        .map(|k| {
            let s = k as f64 / steps as f64;
            let r = VERTEX_RADIUS + (RING_RADIUS - VERTEX_RADIUS) * s;
            Point::polar(c, r, from_angle + (to_angle - from_angle) * s)
        })
        .collect()
}

/// Builds the diagram of a butterfly; crossing signs are included when the
/// butterfly is reduced.
pub fn build_diagram(form: &SchubertForm) -> Result<CanonicalDiagram> {
    let bf = Butterfly::new(*form)?;
    let o = if is_reduced(&bf) { Some(orient(&bf)?) } else { None };
    Ok(build_diagram_of(&bf, o.as_ref()))
}

pub fn build_diagram_of(bf: &Butterfly, o: Option<&OrientationData>) -> CanonicalDiagram {
    let form = *bf.form();
    let set = bf.vertex_set();
    let bridges = Bridge::ALL.map(|b| BridgeGeometry {
        bridge: b,
        center: center(b),
        start: vertex_point(&set, set.start(b)),
        end: vertex_point(&set, set.end(b)),
        vertices: (0..set.modulus(b))
            .map(|i| {
                let v = Vertex::new(b, i);
                (v, vertex_point(&set, v))
            })
            .collect(),
    });

    let plans = plan_arcs(&form);
    let mut exits: [Vec<(usize, bool, Vertex, f64)>; 3] = Default::default();
    for (k, p) in plans.iter().enumerate() {
        exits[p.from.bridge.index()].push((k, true, p.from, p.from_angle));
        exits[p.to.bridge.index()].push((k, false, p.to, p.to_angle));
    }
    let mut starts = vec![Vec::new(); plans.len()];
    let mut ends = vec![Vec::new(); plans.len()];
    for (b, list) in exits.iter().enumerate() {
        let pairs: Vec<(Vertex, f64)> = list.iter().map(|&(_, _, v, a)| (v, a)).collect();
        let lifted = lifted_angles(&set, &pairs);
        for (&(k, is_from, _, exit), &th) in list.iter().zip(&lifted) {
            let path = spiral(center(Bridge::ALL[b]), th, exit);
            if is_from {
                starts[k] = path;
            } else {
                ends[k] = path;
            }
        }
    }
    let arcs = plans
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let mut path = std::mem::take(&mut starts[k]);
            path.extend(std::mem::take(&mut ends[k]).into_iter().rev());
            Arc {
                family: p.family,
                from: p.from,
                to: p.to,
                path,
            }
        })
        .collect();

    let mut crossings = Vec::new();
    for b in Bridge::ALL {
        let half = set.half(b);
        let delta = o.map(|o| o.delta(b));
        let dir = bridges[b.index()].end.minus(bridges[b.index()].start);
        for i in 1..half {
            let x = Vertex::new(b, i);
            let y = bf.gamma().apply(x);
            let (px, py) = (vertex_point(&set, x), vertex_point(&set, y));
            let (under, sign) = match o {
                Some(o) => {
                    let segs = o.initial_segments();
                    let forward = segs.iter().any(|s| s.contains(&x));
                    let (from, to) = if forward { (x, y) } else { (y, x) };
                    let under_dir = vertex_point(&set, to).minus(vertex_point(&set, from));
                    let over_dir = Point::new(dir.x * delta.unwrap() as f64, dir.y * delta.unwrap() as f64);
                    let s = if over_dir.cross(under_dir) > 0.0 { 1 } else { -1 };
                    ((from, to), Some(s))
                }
                None => ((x, y), None),
            };
            crossings.push(Crossing {
                id: crossings.len() + 1,
                bridge: b,
                position: i,
                under,
                at: px.lerp(py, 0.5),
                sign,
            });
        }
    }
    CanonicalDiagram {
        form,
        bridges,
        arcs,
        crossings,
        delta: o.map(|o| o.deltas()),
    }
}

impl CanonicalDiagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Crossing id of the chord through `x` (a non-endpoint vertex).
    pub fn crossing_id(&self, x: Vertex) -> Option<usize> {
        let set = VertexSet::of(&self.form);
        let half = set.half(x.bridge);
        if set.is_endpoint(x) {
            return None;
        }
        let pos = if x.index < half { x.index } else { 2 * half - x.index };
        let offset: u32 = Bridge::ALL[..x.bridge.index()]
            .iter()
            .map(|&b| set.half(b) - 1)
            .sum();
        Some((offset + pos) as usize)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("diagram serializes");
        s.push('\n');
        s
    }

    /// Number of proper intersections between segments of distinct arcs,
    /// and between arcs and chords or bridges. Zero for a valid drawing.
    pub fn stray_intersections(&self) -> usize {
        let mut segments: Vec<(usize, Point, Point)> = Vec::new();
        for (k, arc) in self.arcs.iter().enumerate() {
            for w in arc.path.windows(2) {
                segments.push((k, w[0], w[1]));
            }
        }
        let mut strands: Vec<(Point, Point)> = Vec::new();
        for b in &self.bridges {
            strands.push((b.start, b.end));
        }
        let set = VertexSet::of(&self.form);
        for c in &self.crossings {
            strands.push((vertex_point(&set, c.under.0), vertex_point(&set, c.under.1)));
        }
        let min_x = |a: Point, b: Point| a.x.min(b.x);
        let max_x = |a: Point, b: Point| a.x.max(b.x);
        segments.sort_by(|s, t| min_x(s.1, s.2).total_cmp(&min_x(t.1, t.2)));
        let mut count = 0;
        for i in 0..segments.len() {
            let (ki, a, b) = segments[i];
            let right = max_x(a, b);
            for &(kj, c, d) in &segments[i + 1..] {
                if min_x(c, d) > right {
                    break;
                }
                if ki != kj && proper_intersection(a, b, c, d) {
                    count += 1;
                }
            }
            for &(c, d) in &strands {
                if proper_intersection(a, b, c, d) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Closed curves of the diagram, traced through arcs, chords and
    /// bridges. Each curve is listed as the vertices it passes, starting at
    /// its smallest vertex.
    pub fn trace_components(&self) -> Vec<Vec<Vertex>> {
        let set = VertexSet::of(&self.form);
        let size = set.len();
        let mut arc_mate = vec![usize::MAX; size];
        for arc in &self.arcs {
            let (i, j) = (set.position(arc.from), set.position(arc.to));
            arc_mate[i] = j;
            arc_mate[j] = i;
        }
        let mut inner_mate = vec![usize::MAX; size];
        for c in &self.crossings {
            let (i, j) = (set.position(c.under.0), set.position(c.under.1));
            inner_mate[i] = j;
            inner_mate[j] = i;
        }
        for b in &self.bridges {
            let (i, j) = (set.position(set.start(b.bridge)), set.position(set.end(b.bridge)));
            inner_mate[i] = j;
            inner_mate[j] = i;
        }
        let mut seen = vec![false; size];
        let mut out = Vec::new();
        for start in 0..size {
            if seen[start] {
                continue;
            }
            let mut curve = Vec::new();
            let mut x = start;
            loop {
                let y = arc_mate[x];
                seen[x] = true;
                seen[y] = true;
                curve.push(set.at(x));
                curve.push(set.at(y));
                x = inner_mate[y];
                if x == start {
                    break;
                }
            }
            out.push(curve);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.trace_components().len()
    }
}

fn orientation(a: Point, b: Point, c: Point) -> f64 {
    b.minus(a).cross(c.minus(a))
}

/// Segments cross at a point interior to both.
fn proper_intersection(a: Point, b: Point, c: Point, d: Point) -> bool {
    const EPS: f64 = 1e-9;
    let d1 = orientation(c, d, a);
    let d2 = orientation(c, d, b);
    let d3 = orientation(a, b, c);
    let d4 = orientation(a, b, d);
    ((d1 > EPS && d2 < -EPS) || (d1 < -EPS && d2 > EPS))
        && ((d3 > EPS && d4 < -EPS) || (d3 < -EPS && d4 > EPS))
}

/// Like [`build_diagram`] but fails on forms that are not reduced.
pub fn oriented_diagram(form: &SchubertForm) -> Result<CanonicalDiagram> {
    let d = build_diagram(form)?;
    if d.delta.is_none() {
        return Err(Error::NotReduced(*form));
    }
    Ok(d)
}
