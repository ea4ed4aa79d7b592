use crate::error::{Error, Result};
use crate::geometry::{Hyperplane, Vector};
use crate::tolerance::EPS_GEO;

/// A closed line segment between two points of equal dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    pub a: Vector,
    pub b: Vector,
}

impl Segment {
    pub fn new(a: Vector, b: Vector) -> Result<Self> {
        b.check_dim(a.dim())?;
        Ok(Segment { a, b })
    }

    pub fn length(&self) -> f64 {
        self.a.distance(&self.b)
    }

    pub fn point_at(&self, t: f64) -> Vector {
        self.a.lerp(&self.b, t)
    }

    /// Smallest segment parameter `t ∈ [0, 1]` whose point lies on `plane`.
    pub fn first_hit_parameter(&self, plane: &Hyperplane) -> Option<f64> {
        segment_hit(&self.a, &self.b, plane)
    }
}

fn segment_hit(a: &Vector, b: &Vector, plane: &Hyperplane) -> Option<f64> {
    // ⟨n, x(t)⟩ − ρ is affine in t.
    let s0 = plane.signed_distance(a);
    if s0.abs() <= EPS_GEO {
        return Some(0.0);
    }
    let s1 = plane.signed_distance(b);
    if s1.abs() <= EPS_GEO || (s0 < 0.0) != (s1 < 0.0) {
        Some((s0 / (s0 - s1)).clamp(0.0, 1.0))
    } else {
        None
    }
}

/// First point where a curve meets a hyperplane.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveHit {
    /// Arc length travelled from the curve start to `point`.
    pub arc_length: f64,
    pub point: Vector,
}

/// A piecewise linear curve. Closed curves carry an implicit wrap segment
/// from the last vertex back to the first.
#[derive(Debug, Clone, PartialEq)]
pub struct PolylineCurve {
    vertices: Vec<Vector>,
    closed: bool,
}

impl PolylineCurve {
    /// Requires at least 2 vertices (3 if closed), all of one dimension.
    pub fn new(vertices: Vec<Vector>, closed: bool) -> Result<Self> {
        let min = if closed { 3 } else { 2 };
        if vertices.len() < min {
            return Err(Error::InvalidCurve(format!(
                "{} curve needs at least {min} vertices, got {}",
                if closed { "closed" } else { "open" },
                vertices.len()
            )));
        }
        let dim = vertices[0].dim();
        for v in &vertices[1..] {
            v.check_dim(dim)?;
        }
        Ok(PolylineCurve { vertices, closed })
    }

    pub fn open(vertices: Vec<Vector>) -> Result<Self> {
        Self::new(vertices, false)
    }

    pub fn closed(vertices: Vec<Vector>) -> Result<Self> {
        Self::new(vertices, true)
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn start(&self) -> &Vector {
        &self.vertices[0]
    }

    pub fn segment_count(&self) -> usize {
        if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len() - 1
        }
    }

    /// Endpoint pairs of every segment in traversal order, wrap segment last.
    pub fn segment_endpoints(&self) -> impl Iterator<Item = (&Vector, &Vector)> + '_ {
        let n = self.vertices.len();
        (0..self.segment_count()).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.segment_endpoints().map(|(a, b)| Segment {
            a: a.clone(),
            b: b.clone(),
        })
    }

    pub fn length(&self) -> f64 {
        self.segment_endpoints().map(|(a, b)| a.distance(b)).sum()
    }

    pub fn scaled(&self, factor: f64) -> PolylineCurve {
        PolylineCurve {
            vertices: self.vertices.iter().map(|v| v.scaled(factor)).collect(),
            closed: self.closed,
        }
    }

    /// Applies `f` to every vertex, e.g. an orthogonal map.
    pub fn map_vertices<F: FnMut(&Vector) -> Vector>(&self, f: F) -> Result<PolylineCurve> {
        Self::new(self.vertices.iter().map(f).collect(), self.closed)
    }

    /// The point at arc length `s` from the start, clamped to the curve.
    pub fn point_at_arc_length(&self, s: f64) -> Vector {
        let mut remaining = s.max(0.0);
        let mut last = self.start();
        for (a, b) in self.segment_endpoints() {
            let len = a.distance(b);
            if remaining <= len {
                let t = if len > 0.0 { remaining / len } else { 0.0 };
                return a.lerp(b, t);
            }
            remaining -= len;
            last = b;
        }
        last.clone()
    }

    /// The open sub-curve between arc lengths `from ≤ to`.
    pub fn sub_curve(&self, from: f64, to: f64) -> Result<PolylineCurve> {
        if !(from.is_finite() && to.is_finite()) || from > to {
            return Err(Error::InvalidParameter(format!(
                "invalid arc length range [{from}, {to}]"
            )));
        }
        let mut out = vec![self.point_at_arc_length(from)];
        let mut travelled = 0.0;
        for (a, b) in self.segment_endpoints() {
            travelled += a.distance(b);
            if travelled > from && travelled < to {
                out.push(b.clone());
            }
        }
        out.push(self.point_at_arc_length(to));
        PolylineCurve::open(out)
    }

    /// The open prefix of arc length `s` (clamped to the full length).
    pub fn prefix(&self, s: f64) -> Result<PolylineCurve> {
        self.sub_curve(0.0, s.min(self.length()))
    }

    /// Cuts the curve into the minimum number `n = ⌈length / max_len⌉` of
    /// contiguous portions of equal arc length.
    pub fn chop(&self, max_len: f64) -> Result<Vec<PolylineCurve>> {
        if max_len.is_nan() || max_len <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "portion length {max_len} must be positive"
            )));
        }
        let total = self.length();
        let n = ((total / max_len).ceil() as usize).max(1);
        let step = total / n as f64;
        (0..n)
            .map(|i| {
                let to = if i + 1 == n {
                    total
                } else {
                    (i + 1) as f64 * step
                };
                self.sub_curve(i as f64 * step, to)
            })
            .collect()
    }

    /// Vertices plus `2^depth − 1` evenly spaced interior points per segment.
    pub fn subdivided_vertices(&self, depth: u32) -> Vec<Vector> {
        let pieces = 1usize << depth;
        let mut out = Vec::with_capacity(self.segment_count() * pieces + 1);
        for (a, b) in self.segment_endpoints() {
            for k in 0..pieces {
                out.push(a.lerp(b, k as f64 / pieces as f64));
            }
        }
        if !self.closed {
            out.push(self.vertices[self.vertices.len() - 1].clone());
        }
        out
    }
}

/// Smallest arc length at which `curve` lies on `plane`, with the point.
///
/// Each segment is solved as a linear equation in its parameter; segments
/// are scanned in traversal order so the first hit found is the earliest.
pub fn first_hit(curve: &PolylineCurve, plane: &Hyperplane) -> Option<CurveHit> {
    let mut travelled = 0.0;
    for (a, b) in curve.segment_endpoints() {
        let len = a.distance(b);
        if let Some(t) = segment_hit(a, b, plane) {
            return Some(CurveHit {
                arc_length: travelled + t * len,
                point: a.lerp(b, t),
            });
        }
        travelled += len;
    }
    None
}
