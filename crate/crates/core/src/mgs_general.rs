//! Minimum generating sets for connected graphs with one or two distinct
//! edge-labels, and a dispatcher that handles disconnected inputs by direct
//! sums and routes quadratic-label cycles to the cycle pipeline.

use std::sync::Arc;

use crate::algebra::Poly;
use crate::error::MgsError;
use crate::graph::{CycleGraph, EdgeLabeledGraph};
use crate::mgs_cycle;
use crate::spline::{verify_gkm, GeneratingSet, Spline};

/// The one-label construction: the trivial spline plus an indicator spline
/// at every vertex after the first in connectivity order. Also covers the
/// single-vertex graph, which has no labels at all.
pub fn mgs_one_label(graph: &Arc<EdgeLabeledGraph>) -> Result<GeneratingSet, MgsError> {
    let labels = graph.distinct_labels();
    if labels.len() > 1 {
        return Err(MgsError::WrongLabelCount {
            expected: 1,
            found: labels.len(),
        });
    }
    let order = graph
        .connectivity_order()
        .map_err(|_| MgsError::Disconnected)?;
    let mut elements = vec![Spline::trivial(graph)];
    if let Some(label) = labels.first() {
        for &v in &order[1..] {
            elements.push(Spline::indicator(graph, v, label.clone())?);
        }
    }
    Ok(GeneratingSet::new(graph.clone(), elements, Some(order))?)
}

/// The two-label construction. For each vertex `v_i` (in connectivity
/// order) pick the lowest-ordered earlier neighbor, call its edge-label `k`,
/// and look at the component of `v_i` once all `k`-labeled edges are
/// removed. If that component only contains vertices ordered at or after
/// `v_i`, the generator is `k` on the component and zero elsewhere;
/// otherwise it is an indicator with value `lcm` of the two labels.
pub fn mgs_two_labels(graph: &Arc<EdgeLabeledGraph>) -> Result<GeneratingSet, MgsError> {
    let labels = graph.distinct_labels();
    if labels.len() != 2 {
        return Err(MgsError::WrongLabelCount {
            expected: 2,
            found: labels.len(),
        });
    }
    let order = graph
        .connectivity_order()
        .map_err(|_| MgsError::Disconnected)?;
    let n = graph.num_vertices();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let lcm = || -> Result<Poly, MgsError> {
        let factored = |label: &Poly| {
            graph
                .edges()
                .iter()
                .find(|e| e.label == *label)
                .and_then(|e| e.factors.as_ref())
                .ok_or_else(|| MgsError::MissingFactors(label.to_string()))
        };
        Ok(factored(&labels[0])?
            .lcm(factored(&labels[1])?)
            .expand()
            .with_nvars(graph.nvars()))
    };

    let mut elements = vec![Spline::trivial(graph)];
    for (i, &vi) in order.iter().enumerate().skip(1) {
        // Lowest-ordered earlier neighbor.
        let vj = graph
            .neighbors(vi)
            .iter()
            .map(|&(u, _)| u)
            .filter(|&u| pos[u] < i)
            .min_by_key(|&u| pos[u])
            .expect("connectivity order guarantees an earlier neighbor");
        let k = graph.edge_between(vi, vj).expect("adjacent").label.clone();
        let component = graph.component_after_label_deletion(vi, &k)?;
        if component.iter().all(|&u| pos[u] >= i) {
            let mut entries = vec![Poly::zero(graph.nvars()); n];
            for &u in &component {
                entries[u] = k.clone();
            }
            elements.push(verify_gkm(graph, entries)?);
        } else {
            elements.push(Spline::indicator(graph, vi, lcm()?)?);
        }
    }
    Ok(GeneratingSet::new(graph.clone(), elements, Some(order))?)
}

/// Route a connected graph to the construction that covers it.
fn dispatch_connected(graph: &Arc<EdgeLabeledGraph>) -> Result<GeneratingSet, MgsError> {
    match graph.distinct_labels().len() {
        0 | 1 => mgs_one_label(graph),
        2 => mgs_two_labels(graph),
        k => {
            let cycle = CycleGraph::from_graph(graph.as_ref().clone()).map_err(|_| {
                MgsError::OutOfSupportedClass(format!("{k} distinct labels on a non-cycle graph"))
            })?;
            mgs_cycle::mgs_cycle_quadratic(&cycle)
        }
    }
}

/// Construct a generating set for an arbitrary graph: per component, one of
/// the supported constructions; components are then merged by direct sum.
pub fn mgs_dispatch(graph: &Arc<EdgeLabeledGraph>) -> Result<GeneratingSet, MgsError> {
    let components = graph.components();
    if components.len() == 1 {
        return dispatch_connected(graph);
    }
    let mut parts = Vec::with_capacity(components.len());
    for (sub, map) in components {
        let sub = Arc::new(sub);
        let set = dispatch_connected(&sub)?;
        parts.push((set, map));
    }
    Ok(GeneratingSet::direct_sum(graph.clone(), parts)?)
}
