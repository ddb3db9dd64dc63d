//! Classical bivariate splines on pinwheel triangulations (a single interior
//! vertex with triangles radiating around it). The dual graph of a pinwheel
//! is a cycle whose edges are labeled by the squared equations of the
//! interior edges, which hands the dimension question to the cycle pipeline
//! and the oracle.
//!
//! Only smoothness `r = 1` (quadratic labels) is implemented end to end.

use crate::algebra::{LinForm, Rat};
use crate::error::PinwheelError;
use crate::graph::{CycleGraph, EdgeLabeledGraph};
use crate::mgs_cycle::mgs_cycle_quadratic;
use crate::oracle::{count_monomials_upto, spline_space_dimension};
use serde::{Deserialize, Serialize};

/// Number of bivariate monomials of degree at most `d`:
/// `(d+1)(d+2)/2`, zero for negative `d`.
pub fn m(d: i64) -> usize {
    count_monomials_upto(2, d)
}

/// A pinwheel triangulation described by its center and the cyclically
/// ordered lines containing its interior edges (one affine linear form per
/// ray).
#[derive(Clone, Debug)]
pub struct Pinwheel {
    center: (Rat, Rat),
    rays: Vec<LinForm>,
    r: u32,
}

impl Pinwheel {
    /// Validates the geometry the dual-cycle construction relies on: at
    /// least three rays, every ray through the center with a nonzero linear
    /// part, no two consecutive rays collinear (the closing pair included),
    /// and no line used more than twice.
    pub fn new(center: (Rat, Rat), rays: Vec<LinForm>, r: u32) -> Result<Self, PinwheelError> {
        if r != 1 {
            return Err(PinwheelError::UnsupportedSmoothness(r));
        }
        let n = rays.len();
        if n < 3 {
            return Err(PinwheelError::TooFewRays(n));
        }
        let point = [center.0.clone(), center.1.clone()];
        let mut homogeneous = Vec::with_capacity(n);
        for (i, ray) in rays.iter().enumerate() {
            if !ray.eval(&point).is_zero() {
                return Err(PinwheelError::RayMissesCenter(i));
            }
            let hom = ray
                .homogeneous_part()
                .map_err(|_| PinwheelError::DegenerateRay(i))?;
            homogeneous.push(hom);
        }
        for i in 0..n {
            let j = (i + 1) % n;
            if homogeneous[i].proportional(&homogeneous[j]) {
                return Err(PinwheelError::CollinearAdjacentRays(i, j));
            }
        }
        for i in 0..n {
            let copies = homogeneous
                .iter()
                .filter(|h| homogeneous[i].proportional(h))
                .count();
            if copies > 2 {
                return Err(PinwheelError::LineAppearsTooOften(i));
            }
        }
        Ok(Pinwheel { center, rays, r })
    }

    pub fn center(&self) -> &(Rat, Rat) {
        &self.center
    }

    pub fn rays(&self) -> &[LinForm] {
        &self.rays
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn num_triangles(&self) -> usize {
        self.rays.len()
    }

    /// The dual cycle: one vertex per triangle, consecutive triangles joined
    /// by an edge labeled with the square of the shared ray's line equation,
    /// translated so the center sits at the origin.
    pub fn dual_cycle(&self) -> Result<CycleGraph, PinwheelError> {
        let n = self.rays.len();
        let verts: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
        let mut edges = Vec::with_capacity(n);
        for i in 0..n {
            // Triangle i sits between rays i and i+1; it shares ray i+1 with
            // triangle i+1. Translating the center to the origin leaves just
            // the homogeneous part of the ray form.
            let shared = (i + 1) % n;
            let form = self.rays[shared]
                .homogeneous_part()
                .expect("validated at construction")
                .to_poly(2);
            let label = form.pow(self.r + 1);
            edges.push((verts[i].clone(), verts[(i + 1) % n].clone(), label, None));
        }
        let graph = EdgeLabeledGraph::new(verts, edges).map_err(crate::error::MgsError::Graph)?;
        Ok(CycleGraph::from_graph(graph).map_err(crate::error::MgsError::Graph)?)
    }
}

/// Which branch of the dimension formula applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaBranch {
    Singular,
    General,
}

/// The dimension of the space of once-differentiable splines of degree at
/// most `d` on a pinwheel with `n` triangles.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimReport {
    pub n: usize,
    pub d: u32,
    pub r: u32,
    pub singular: bool,
    pub dimension: usize,
    pub branch: FormulaBranch,
}

/// Dimension formulas for `r = 1`. With `m` vanishing on negative
/// arguments, each piecewise display collapses to a single expression:
/// singular four-triangle pinwheels give `m_d + 2 m_{d-2} + m_{d-4}`, all
/// others `m_d + (n-3) m_{d-2} + 2 m_{d-3}`.
pub fn pinwheel_dimension(n: usize, d: u32, singular: bool) -> Result<DimReport, PinwheelError> {
    if singular && n != 4 {
        return Err(PinwheelError::SingularNeedsFour(n));
    }
    if n < 3 {
        return Err(PinwheelError::TooFewRays(n));
    }
    let d_i = d as i64;
    let (dimension, branch) = if singular {
        (
            m(d_i) + 2 * m(d_i - 2) + m(d_i - 4),
            FormulaBranch::Singular,
        )
    } else {
        (
            m(d_i) + (n - 3) * m(d_i - 2) + 2 * m(d_i - 3),
            FormulaBranch::General,
        )
    };
    Ok(DimReport {
        n,
        d,
        r: 1,
        singular,
        dimension,
        branch,
    })
}

/// A singular vertex corresponds to the alternating two-label four-cycle:
/// two crossing lines.
pub fn is_singular_vertex(cycle: &CycleGraph) -> bool {
    cycle.n() == 4
        && cycle.distinct_labels().len() == 2
        && cycle.edge_label(0) == cycle.edge_label(2)
        && cycle.edge_label(1) == cycle.edge_label(3)
        && cycle.edge_label(0) != cycle.edge_label(1)
}

/// Can this labeled cycle arise as the dual of a pinwheel triangulation?
/// Each label class at most twice, never on adjacent edges, and at least
/// three distinct labels unless the cycle is the alternating two-label
/// four-cycle.
pub fn is_geometrically_realizable(cycle: &CycleGraph) -> bool {
    let n = cycle.n();
    for i in 0..n {
        let label = cycle.edge_label(i);
        if cycle.edge_label((i + 1) % n) == label {
            return false;
        }
        let copies = (0..n).filter(|&j| cycle.edge_label(j) == label).count();
        if copies > 2 {
            return false;
        }
    }
    cycle.distinct_labels().len() >= 3 || is_singular_vertex(cycle)
}

/// Upper bound on the number of basis elements a new interior cell with `k`
/// triangles can add: the dimension of its nonconstant splines.
pub fn lower_bound_increment(k: usize, d: u32, singular: bool) -> Result<usize, PinwheelError> {
    Ok(pinwheel_dimension(k, d, singular)?.dimension - m(d as i64))
}

/// One degree of the three-way agreement check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PinwheelCheck {
    pub degree: u32,
    pub from_generators: usize,
    pub from_formula: usize,
    pub from_oracle: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PinwheelReport {
    pub n: usize,
    pub singular: bool,
    pub degree_sequence: Vec<usize>,
    pub rows: Vec<PinwheelCheck>,
    pub pass: bool,
}

/// Build the dual cycle, run the cycle pipeline, and check for every degree
/// up to `d_max` that three independent counts agree: the generating set's
/// degree-sequence prediction, the closed-form dimension formula, and the
/// brute-force oracle.
pub fn pinwheel_full_pipeline(
    pinwheel: &Pinwheel,
    d_max: u32,
) -> Result<PinwheelReport, PinwheelError> {
    let dual = pinwheel.dual_cycle()?;
    debug_assert!(is_geometrically_realizable(&dual));
    let singular = is_singular_vertex(&dual);
    let set = mgs_cycle_quadratic(&dual)?;
    let degree_sequence = set
        .degree_sequence()
        .map_err(crate::error::MgsError::Spline)?;
    let n = pinwheel.num_triangles();
    let mut rows = Vec::with_capacity(d_max as usize + 1);
    for d in 0..=d_max {
        let from_generators: usize = degree_sequence
            .iter()
            .enumerate()
            .map(|(j, &count)| count * m(d as i64 - j as i64))
            .sum();
        let from_formula = pinwheel_dimension(n, d, singular)?.dimension;
        let from_oracle = spline_space_dimension(dual.graph(), d);
        let pass = from_generators == from_formula && from_formula == from_oracle;
        rows.push(PinwheelCheck {
            degree: d,
            from_generators,
            from_formula,
            from_oracle,
            pass,
        });
    }
    let pass = rows.iter().all(|r| r.pass);
    Ok(PinwheelReport {
        n,
        singular,
        degree_sequence,
        rows,
        pass,
    })
}
