//! Splines on edge-labeled graphs: vertex labelings satisfying the GKM
//! condition, their pointwise ring structure, and generating-set metadata.
//!
//! A `Spline` is validated at construction, so every value in the system
//! satisfies the GKM condition; downstream algorithms re-check only in debug
//! builds.

use std::sync::Arc;

use crate::algebra::{HomDegree, Poly, Rat};
use crate::error::{GkmViolation, SplineError};
use crate::graph::EdgeLabeledGraph;

/// A vertex labeling satisfying the GKM condition: across every edge the
/// difference of endpoint values is divisible by the edge's generator.
#[derive(Clone, Debug, PartialEq)]
pub struct Spline {
    graph: Arc<EdgeLabeledGraph>,
    entries: Vec<Poly>,
}

/// Check the GKM condition for a candidate labeling; returns the constructed
/// spline or the full list of violating edges.
pub fn verify_gkm(
    graph: &Arc<EdgeLabeledGraph>,
    entries: Vec<Poly>,
) -> Result<Spline, SplineError> {
    if entries.len() != graph.num_vertices() {
        return Err(SplineError::EntryCount {
            expected: graph.num_vertices(),
            got: entries.len(),
        });
    }
    let nvars = graph
        .nvars()
        .max(entries.iter().map(|p| p.used_vars()).max().unwrap_or(0));
    let entries: Vec<Poly> = entries.into_iter().map(|p| p.with_nvars(nvars)).collect();
    let mut violations = Vec::new();
    for e in graph.edges() {
        let diff = entries[e.u]
            .checked_sub(&entries[e.v])
            .expect("uniform nvars");
        let label = e.label.with_nvars(nvars);
        match diff.divide_exact(&label) {
            Ok(Some(_)) => {}
            _ => violations.push(GkmViolation {
                u: graph.vertex_id(e.u).to_string(),
                v: graph.vertex_id(e.v).to_string(),
                label: e.label.clone(),
                difference: diff,
            }),
        }
    }
    if violations.is_empty() {
        Ok(Spline {
            graph: graph.clone(),
            entries,
        })
    } else {
        Err(SplineError::GkmViolations(violations))
    }
}

impl Spline {
    /// The trivial spline: one at every vertex.
    pub fn trivial(graph: &Arc<EdgeLabeledGraph>) -> Spline {
        let nvars = graph.nvars();
        Spline {
            graph: graph.clone(),
            entries: vec![Poly::one(nvars); graph.num_vertices()],
        }
    }

    pub fn zero(graph: &Arc<EdgeLabeledGraph>) -> Spline {
        Spline {
            graph: graph.clone(),
            entries: vec![Poly::zero(graph.nvars()); graph.num_vertices()],
        }
    }

    /// A spline supported on one vertex. The value must make the GKM
    /// condition hold, so this verifies.
    pub fn indicator(
        graph: &Arc<EdgeLabeledGraph>,
        vertex: usize,
        value: Poly,
    ) -> Result<Spline, SplineError> {
        let mut entries = vec![Poly::zero(graph.nvars()); graph.num_vertices()];
        entries[vertex] = value;
        verify_gkm(graph, entries)
    }

    pub fn graph(&self) -> &Arc<EdgeLabeledGraph> {
        &self.graph
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn entry(&self, v: usize) -> &Poly {
        &self.entries[v]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    fn same_graph(&self, other: &Spline) -> Result<(), SplineError> {
        if Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph {
            Ok(())
        } else {
            Err(SplineError::GraphMismatch)
        }
    }

    fn from_closure_parts(graph: Arc<EdgeLabeledGraph>, entries: Vec<Poly>) -> Spline {
        let s = Spline { graph, entries };
        // Pointwise ring operations preserve the GKM condition; re-check in
        // debug builds only.
        #[cfg(debug_assertions)]
        {
            let re = verify_gkm(&s.graph, s.entries.clone());
            debug_assert!(re.is_ok(), "ring operation broke the GKM condition");
        }
        s
    }

    fn zip_entries(&self, other: &Spline, op: impl Fn(&Poly, &Poly) -> Poly) -> Vec<Poly> {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| {
                let n = a.nvars().max(b.nvars());
                op(&a.with_nvars(n), &b.with_nvars(n))
            })
            .collect()
    }

    pub fn add(&self, other: &Spline) -> Result<Spline, SplineError> {
        self.same_graph(other)?;
        let entries = self.zip_entries(other, |a, b| a.checked_add(b).expect("unified nvars"));
        Ok(Spline::from_closure_parts(self.graph.clone(), entries))
    }

    pub fn sub(&self, other: &Spline) -> Result<Spline, SplineError> {
        self.same_graph(other)?;
        let entries = self.zip_entries(other, |a, b| a.checked_sub(b).expect("unified nvars"));
        Ok(Spline::from_closure_parts(self.graph.clone(), entries))
    }

    pub fn mul(&self, other: &Spline) -> Result<Spline, SplineError> {
        self.same_graph(other)?;
        let entries = self.zip_entries(other, |a, b| a.checked_mul(b).expect("unified nvars"));
        Ok(Spline::from_closure_parts(self.graph.clone(), entries))
    }

    /// Multiply every entry by a ring element.
    pub fn scalar_mul(&self, r: &Poly) -> Spline {
        let entries = self
            .entries
            .iter()
            .map(|p| {
                let n = p.nvars().max(r.nvars());
                p.with_nvars(n)
                    .checked_mul(&r.with_nvars(n))
                    .expect("unified nvars")
            })
            .collect();
        Spline::from_closure_parts(self.graph.clone(), entries)
    }

    pub fn scale(&self, r: &Rat) -> Spline {
        let entries = self.entries.iter().map(|p| p.scale(r)).collect();
        Spline::from_closure_parts(self.graph.clone(), entries)
    }

    /// Shared homogeneous degree of the entries: `Deg(d)` if every nonzero
    /// entry is homogeneous of degree `d`, `Zero` for the zero spline, `None`
    /// otherwise.
    pub fn homogeneous_degree(&self) -> Option<HomDegree> {
        let mut deg: Option<u32> = None;
        for p in &self.entries {
            match p.homogeneous_degree()? {
                HomDegree::Zero => {}
                HomDegree::Deg(d) => match deg {
                    None => deg = Some(d),
                    Some(existing) if existing == d => {}
                    Some(_) => return None,
                },
            }
        }
        Some(deg.map_or(HomDegree::Zero, HomDegree::Deg))
    }

    /// Largest total degree over the entries; `None` for the zero spline.
    pub fn max_degree(&self) -> Option<u32> {
        self.entries.iter().filter_map(|p| p.total_degree()).max()
    }

    /// First vertex (under the given ordering) with a nonzero entry.
    pub fn pivot(&self, ordering: &[usize]) -> Option<usize> {
        ordering
            .iter()
            .copied()
            .find(|&v| !self.entries[v].is_zero())
    }
}

/// An ordered list of splines over one graph, with cached per-element
/// homogeneous degrees and the vertex ordering used by the construction
/// (when one applies).
#[derive(Clone, Debug)]
pub struct GeneratingSet {
    graph: Arc<EdgeLabeledGraph>,
    elements: Vec<Spline>,
    degrees: Vec<Option<HomDegree>>,
    construction_order: Option<Vec<usize>>,
}

impl GeneratingSet {
    pub fn new(
        graph: Arc<EdgeLabeledGraph>,
        elements: Vec<Spline>,
        construction_order: Option<Vec<usize>>,
    ) -> Result<Self, SplineError> {
        for s in &elements {
            if !(Arc::ptr_eq(s.graph(), &graph) || *s.graph().as_ref() == *graph) {
                return Err(SplineError::GraphMismatch);
            }
        }
        let degrees = elements.iter().map(|s| s.homogeneous_degree()).collect();
        Ok(GeneratingSet {
            graph,
            elements,
            degrees,
            construction_order,
        })
    }

    pub fn graph(&self) -> &Arc<EdgeLabeledGraph> {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Spline] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Spline {
        &self.elements[i]
    }

    pub fn construction_order(&self) -> Option<&[usize]> {
        self.construction_order.as_deref()
    }

    pub fn cached_degrees(&self) -> &[Option<HomDegree>] {
        &self.degrees
    }

    /// Homogeneous degree of element `i`, erroring when undefined.
    pub fn element_degree(&self, i: usize) -> Result<u32, SplineError> {
        match self.degrees[i] {
            Some(HomDegree::Deg(d)) => Ok(d),
            _ => Err(SplineError::NonHomogeneousElement(i)),
        }
    }

    /// Counts of elements by homogeneous degree, trailing zeros trimmed.
    /// Every element must be homogeneous of a well-defined degree.
    pub fn degree_sequence(&self) -> Result<Vec<usize>, SplineError> {
        let mut counts = Vec::new();
        for i in 0..self.elements.len() {
            let d = self.element_degree(i)? as usize;
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Ok(counts)
    }

    /// Is the matrix of entries triangular with nonzero diagonal under this
    /// vertex ordering (columns may be permuted)? Equivalently: every element
    /// has a pivot, and pivots are pairwise distinct.
    pub fn is_triangular(&self, ordering: &[usize]) -> bool {
        let mut seen = std::collections::HashSet::new();
        for s in &self.elements {
            match s.pivot(ordering) {
                None => return false,
                Some(p) => {
                    if !seen.insert(p) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Assemble a generating set for a disjoint union from per-component
    /// sets: each component generator is extended by zeros elsewhere.
    /// `parts[i].1` maps component vertex indices to `graph` indices.
    pub fn direct_sum(
        graph: Arc<EdgeLabeledGraph>,
        parts: Vec<(GeneratingSet, Vec<usize>)>,
    ) -> Result<GeneratingSet, SplineError> {
        let n = graph.num_vertices();
        let mut covered = vec![false; n];
        for (part, map) in &parts {
            if map.len() != part.graph().num_vertices() {
                return Err(SplineError::BadPartition);
            }
            for &v in map {
                if v >= n || covered[v] {
                    return Err(SplineError::BadPartition);
                }
                covered[v] = true;
            }
        }
        if covered.iter().any(|c| !c) {
            return Err(SplineError::BadPartition);
        }
        let mut elements = Vec::new();
        for (part, map) in &parts {
            for s in part.elements() {
                let mut entries = vec![Poly::zero(graph.nvars()); n];
                for (ci, &gi) in map.iter().enumerate() {
                    entries[gi] = s.entry(ci).clone();
                }
                elements.push(verify_gkm(&graph, entries)?);
            }
        }
        GeneratingSet::new(graph, elements, None)
    }
}
