//! The cross-polytope inspection tour.
//!
//! The cross-polytope scaled by `√d` has vertices `±√d·e_i` and contains the
//! unit sphere (`‖x‖₁ ≤ √d·‖x‖₂`). Its graph is the cocktail-party graph:
//! every vertex is adjacent to every other vertex except its antipode. A
//! Hamiltonian cycle of that graph walks `2d` edges of length `√(2d)`, giving
//! a closed curve of length `(2d)^{3/2}` that inspects the sphere.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{PolylineCurve, Vector};

/// One vertex `±e_axis` of the cross-polytope, `axis` zero based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexLabel {
    pub axis: usize,
    pub positive: bool,
}

impl VertexLabel {
    pub fn plus(axis: usize) -> Self {
        VertexLabel {
            axis,
            positive: true,
        }
    }

    pub fn minus(axis: usize) -> Self {
        VertexLabel {
            axis,
            positive: false,
        }
    }

    pub fn antipode(self) -> Self {
        VertexLabel {
            axis: self.axis,
            positive: !self.positive,
        }
    }

    /// Position in the label order `+1, …, +d, −1, …, −d`.
    pub fn index(self, dim: usize) -> usize {
        if self.positive {
            self.axis
        } else {
            dim + self.axis
        }
    }

    pub fn vertex(self, dim: usize, scale: f64) -> Vector {
        Vector::axis(dim, self.axis, if self.positive { scale } else { -scale })
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.positive { '+' } else { '-' };
        write!(f, "{sign}{}", self.axis + 1)
    }
}

/// A cyclic order of all `2d` cross-polytope vertices in which no two
/// cyclically consecutive labels are antipodal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianOrder {
    dim: usize,
    order: Vec<VertexLabel>,
}

impl HamiltonianOrder {
    pub fn new(dim: usize, order: Vec<VertexLabel>) -> Result<Self> {
        if order.len() != 2 * dim {
            return Err(Error::InvalidParameter(format!(
                "order has {} labels, expected {}",
                order.len(),
                2 * dim
            )));
        }
        let mut seen = vec![false; 2 * dim];
        for label in &order {
            if label.axis >= dim {
                return Err(Error::InvalidParameter(format!(
                    "label {label} out of range"
                )));
            }
            let slot = &mut seen[label.index(dim)];
            if *slot {
                return Err(Error::InvalidParameter(format!("label {label} repeated")));
            }
            *slot = true;
        }
        for (i, label) in order.iter().enumerate() {
            let next = order[(i + 1) % order.len()];
            if next == label.antipode() {
                return Err(Error::InvalidParameter(format!(
                    "antipodal labels {label} and {next} are adjacent"
                )));
            }
        }
        Ok(HamiltonianOrder { dim, order })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.order
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if dim < 2 {
        Err(Error::DimensionTooSmall { dim, min: 2 })
    } else {
        Ok(())
    }
}

/// The explicit cycle `+1, +2, …, +d, −1, −2, …, −d`.
pub fn hamiltonian_cycle(dim: usize) -> Result<HamiltonianOrder> {
    check_dim(dim)?;
    let order = (0..dim)
        .map(VertexLabel::plus)
        .chain((0..dim).map(VertexLabel::minus))
        .collect();
    HamiltonianOrder::new(dim, order)
}

/// Builds the cycle by induction on the dimension: starting from the square
/// `+1, +2, −1, −2`, each new pair `±e_k` is spliced into two distinct edges
/// of the previous cycle. Both new vertices are adjacent to every old one,
/// and the two splices are separated by old vertices.
pub fn inductive_hamiltonian_cycle(dim: usize) -> Result<HamiltonianOrder> {
    check_dim(dim)?;
    let mut order = vec![
        VertexLabel::plus(0),
        VertexLabel::plus(1),
        VertexLabel::minus(0),
        VertexLabel::minus(1),
    ];
    for axis in 2..dim {
        // Edge (order[m], order[m+1]) receives −e_k, edge (order[0], order[1]) +e_k.
        let m = order.len() / 2;
        order.insert(m + 1, VertexLabel::minus(axis));
        order.insert(1, VertexLabel::plus(axis));
    }
    HamiltonianOrder::new(dim, order)
}

/// A cross-polytope `{x : ‖x‖₁ ≤ scale}` in dimension `dim`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossPolytopeSpec {
    pub dim: usize,
    pub scale: f64,
}

impl CrossPolytopeSpec {
    /// The `√d` scaling, whose hull contains the unit sphere.
    pub fn inspecting(dim: usize) -> Self {
        CrossPolytopeSpec {
            dim,
            scale: (dim as f64).sqrt(),
        }
    }

    pub fn with_scale(dim: usize, scale: f64) -> Self {
        CrossPolytopeSpec { dim, scale }
    }

    fn validate(&self) -> Result<()> {
        check_dim(self.dim)?;
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "scale {} must be positive and finite",
                self.scale
            )));
        }
        Ok(())
    }
}

/// The `2d` vertices `±scale·e_i` in label order `+1..+d, −1..−d`.
pub fn cross_polytope_vertices(spec: &CrossPolytopeSpec) -> Result<Vec<Vector>> {
    spec.validate()?;
    Ok((0..spec.dim)
        .map(VertexLabel::plus)
        .chain((0..spec.dim).map(VertexLabel::minus))
        .map(|l| l.vertex(spec.dim, spec.scale))
        .collect())
}

/// The closed tour visiting the cross-polytope vertices in `order`.
pub fn build_tour(spec: &CrossPolytopeSpec, order: &HamiltonianOrder) -> Result<PolylineCurve> {
    spec.validate()?;
    if order.dim() != spec.dim {
        return Err(Error::DimensionMismatch {
            expected: spec.dim,
            found: order.dim(),
        });
    }
    PolylineCurve::closed(
        order
            .labels()
            .iter()
            .map(|l| l.vertex(spec.dim, spec.scale))
            .collect(),
    )
}

/// The closed curve of length `(2d)^{3/2}` inspecting `S^{d−1}`. It starts
/// at `+√d·e₁`.
pub fn build_inspection_tour(dim: usize) -> Result<PolylineCurve> {
    build_tour(
        &CrossPolytopeSpec::inspecting(dim),
        &hamiltonian_cycle(dim)?,
    )
}

/// `(2d)^{3/2}`.
pub fn inspection_tour_length(dim: usize) -> f64 {
    (2.0 * dim as f64).powf(1.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Vector;

    #[test]
    fn square_vertices() {
        let r2 = 2f64.sqrt();
        let vs = cross_polytope_vertices(&CrossPolytopeSpec::inspecting(2)).unwrap();
        let expect = [[r2, 0.0], [0.0, r2], [-r2, 0.0], [0.0, -r2]];
        assert_eq!(vs.len(), 4);
        for (v, e) in vs.iter().zip(expect) {
            assert_eq!(v.coords(), &e);
        }
        let unit = cross_polytope_vertices(&CrossPolytopeSpec::with_scale(2, 1.0)).unwrap();
        assert!(unit.iter().all(|v| v.norm_l1() == 1.0));
    }

    #[test]
    fn cube_vertices_have_norm_sqrt_d() {
        let vs = cross_polytope_vertices(&CrossPolytopeSpec::inspecting(3)).unwrap();
        assert_eq!(vs.len(), 6);
        assert!(vs.iter().all(|v| (v.norm() - 3f64.sqrt()).abs() < 1e-15));
    }

    #[test]
    fn dimension_one_rejected() {
        assert!(cross_polytope_vertices(&CrossPolytopeSpec::inspecting(1)).is_err());
        assert!(hamiltonian_cycle(1).is_err());
        assert!(inductive_hamiltonian_cycle(0).is_err());
        assert!(build_inspection_tour(1).is_err());
        assert!(cross_polytope_vertices(&CrossPolytopeSpec::with_scale(3, -1.0)).is_err());
    }

    #[test]
    fn explicit_cycles() {
        let fmt = |o: &HamiltonianOrder| {
            o.labels()
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        assert_eq!(fmt(&hamiltonian_cycle(2).unwrap()), "+1,+2,-1,-2");
        assert_eq!(fmt(&hamiltonian_cycle(3).unwrap()), "+1,+2,+3,-1,-2,-3");
    }

    #[test]
    fn inductive_cycles_are_valid() {
        for d in 2..60 {
            let o = inductive_hamiltonian_cycle(d).unwrap();
            assert_eq!(o.labels().len(), 2 * d);
        }
        assert_eq!(
            inductive_hamiltonian_cycle(3).unwrap().labels(),
            &[
                VertexLabel::plus(0),
                VertexLabel::plus(2),
                VertexLabel::plus(1),
                VertexLabel::minus(0),
                VertexLabel::minus(2),
                VertexLabel::minus(1),
            ]
        );
    }

    #[test]
    fn order_validation() {
        let bad = vec![
            VertexLabel::plus(0),
            VertexLabel::minus(0),
            VertexLabel::plus(1),
            VertexLabel::minus(1),
        ];
        assert!(HamiltonianOrder::new(2, bad).is_err());
        let repeated = vec![VertexLabel::plus(0); 4];
        assert!(HamiltonianOrder::new(2, repeated).is_err());
        let short = vec![VertexLabel::plus(0), VertexLabel::plus(1)];
        assert!(HamiltonianOrder::new(2, short).is_err());
    }

    #[test]
    fn tour_lengths() {
        let t2 = build_inspection_tour(2).unwrap();
        assert!((t2.length() - 8.0).abs() < 1e-12);
        assert!((t2.vertices()[0].distance(&t2.vertices()[1]) - 2.0).abs() < 1e-15);
        let t3 = build_inspection_tour(3).unwrap();
        assert!((t3.length() - 6.0 * 6f64.sqrt()).abs() < 1e-12);
        assert_eq!(t3.start(), &Vector::axis(3, 0, 3f64.sqrt()));
    }
}
