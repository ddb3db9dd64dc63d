//! Edge-labeled graphs and the combinatorial subroutines the generating-set
//! algorithms need: connectivity orderings, components, label-deletion
//! components, and cycle reduction with a replayable log.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::algebra::{factor_generator, FactoredGen, Poly, Rat};
use crate::error::GraphError;

/// One edge with its canonical (monic) principal-ideal generator.
#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: Poly,
    /// Factored form of the label, when the label is auto-factorable or a
    /// factorization was supplied with the input.
    pub factors: Option<FactoredGen>,
}

/// A finite simple graph whose edges carry nonzero canonical polynomial
/// generators. Vertex ids are opaque strings; all outputs follow input order.
#[derive(Clone, Debug)]
pub struct EdgeLabeledGraph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, usize)>>, // (neighbor, edge index), sorted by neighbor
    nvars: usize,
}

impl PartialEq for EdgeLabeledGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl EdgeLabeledGraph {
    /// Build and canonicalize. Labels are normalized to monic form; each is
    /// factored automatically when its shape allows, and a supplied
    /// factorization (checked against the label) takes precedence.
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<(String, String, Poly, Option<FactoredGen>)>,
    ) -> Result<Self, GraphError> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        // The ambient polynomial ring is the widest one any label was
        // declared in; a label like x^2 built inside k[x,y] keeps both
        // variables even though it only uses one.
        let nvars = edges
            .iter()
            .map(|(_, _, p, _)| p.nvars())
            .max()
            .unwrap_or(0);
        let mut seen = HashSet::new();
        let mut out_edges = Vec::with_capacity(edges.len());
        for (us, vs, label, factors) in edges {
            let &u = index
                .get(&us)
                .ok_or_else(|| GraphError::UnknownVertex(us.clone()))?;
            let &v = index
                .get(&vs)
                .ok_or_else(|| GraphError::UnknownVertex(vs.clone()))?;
            if u == v {
                return Err(GraphError::LoopEdge(us));
            }
            if label.is_zero() {
                return Err(GraphError::ZeroLabel(us, vs));
            }
            let (u, v) = if u < v { (u, v) } else { (v, u) };
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge(us, vs));
            }
            let (label, _unit) = label.with_nvars(nvars).monic();
            let factors = match factors {
                Some(fg) => {
                    let (expanded, _) = fg.expand().monic();
                    if expanded != label {
                        return Err(GraphError::BadFactors(us, vs));
                    }
                    // The monic label is exactly the product of the monic
                    // factors, so the canonical unit is one.
                    FactoredGen::new(Rat::one(), fg.factors().to_vec())
                        .and_then(|g| g.with_unit(Rat::one()))
                        .ok()
                }
                None => factor_generator(&label).ok(),
            };
            out_edges.push(Edge {
                u,
                v,
                label,
                factors,
            });
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (ei, e) in out_edges.iter().enumerate() {
            adj[e.u].push((e.v, ei));
            adj[e.v].push((e.u, ei));
        }
        for list in &mut adj {
            list.sort();
        }
        Ok(EdgeLabeledGraph {
            vertices,
            index,
            edges: out_edges,
            adj,
            nvars,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_id(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Same graph considered over a polynomial ring with more variables.
    /// The ambient ring is normally inferred from the labels; this widens it.
    pub fn with_ambient_nvars(&self, nvars: usize) -> EdgeLabeledGraph {
        assert!(nvars >= self.nvars && nvars <= crate::algebra::MAX_VARS);
        let mut g = self.clone();
        g.nvars = nvars;
        for e in &mut g.edges {
            e.label = e.label.with_nvars(nvars);
        }
        g
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<&Edge> {
        self.adj[u]
            .iter()
            .find(|(n, _)| *n == v)
            .map(|&(_, ei)| &self.edges[ei])
    }

    /// Breadth-first ordering from the first vertex in input order, visiting
    /// neighbors in input order. Every vertex after the first is adjacent to
    /// an earlier one.
    pub fn connectivity_order(&self) -> Result<Vec<usize>, GraphError> {
        if self.vertices.is_empty() {
            return Ok(vec![]);
        }
        let mut order = Vec::with_capacity(self.vertices.len());
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::new();
        queue.push_back(0);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(n, _) in &self.adj[v] {
                if !seen[n] {
                    seen[n] = true;
                    queue.push_back(n);
                }
            }
        }
        if order.len() != self.vertices.len() {
            return Err(GraphError::Disconnected);
        }
        Ok(order)
    }

    /// Maximal connected induced subgraphs, in order of first vertex
    /// appearance, each with the map back to original vertex indices.
    pub fn components(&self) -> Vec<(EdgeLabeledGraph, Vec<usize>)> {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            comp[start] = count;
            while let Some(v) = queue.pop_front() {
                for &(u, _) in &self.adj[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = count;
                        queue.push_back(u);
                    }
                }
            }
            count += 1;
        }
        (0..count)
            .map(|c| {
                let verts: Vec<usize> = (0..n).filter(|&v| comp[v] == c).collect();
                let sub = self.induced(&verts);
                (sub, verts)
            })
            .collect()
    }

    fn induced(&self, verts: &[usize]) -> EdgeLabeledGraph {
        let vset: HashSet<usize> = verts.iter().copied().collect();
        let names: Vec<String> = verts.iter().map(|&v| self.vertices[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| vset.contains(&e.u) && vset.contains(&e.v))
            .map(|e| {
                (
                    self.vertices[e.u].clone(),
                    self.vertices[e.v].clone(),
                    e.label.clone(),
                    e.factors.clone(),
                )
            })
            .collect();
        EdgeLabeledGraph::new(names, edges).expect("induced subgraph of a valid graph")
    }

    /// The connected component of `v` after deleting every edge whose label
    /// equals `label` (compared in monic canonical form).
    pub fn component_after_label_deletion(
        &self,
        v: usize,
        label: &Poly,
    ) -> Result<Vec<usize>, GraphError> {
        if v >= self.vertices.len() {
            return Err(GraphError::UnknownVertex(format!("#{v}")));
        }
        let (canon, _) = label.monic();
        let mut seen = vec![false; self.vertices.len()];
        seen[v] = true;
        let mut queue = VecDeque::from([v]);
        let mut out = vec![v];
        while let Some(w) = queue.pop_front() {
            for &(n, ei) in &self.adj[w] {
                if !seen[n] && self.edges[ei].label != canon {
                    seen[n] = true;
                    queue.push_back(n);
                    out.push(n);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Distinct canonical edge labels, sorted.
    pub fn distinct_labels(&self) -> Vec<Poly> {
        let mut labels: Vec<Poly> = Vec::new();
        for e in &self.edges {
            if !labels.contains(&e.label) {
                labels.push(e.label.clone());
            }
        }
        labels.sort();
        labels
    }
}

/// A cycle with an explicit cyclic vertex order. Edge `i` joins
/// `order[i]` and `order[(i+1) % n]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleGraph {
    graph: EdgeLabeledGraph,
    order: Vec<usize>,
}

/// One removed vertex: its position in the cycle order at removal time, its
/// id, and the repeated label both its edges carried.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionStep {
    pub position: usize,
    pub vertex: String,
    pub label: Poly,
}

pub type ReductionLog = Vec<ReductionStep>;

impl CycleGraph {
    /// Interpret a graph as a cycle: connected, every vertex of degree two,
    /// at least three vertices. The cyclic order starts at the first vertex
    /// and walks toward its lowest-indexed neighbor.
    pub fn from_graph(graph: EdgeLabeledGraph) -> Result<Self, GraphError> {
        let n = graph.num_vertices();
        if n < 3 {
            return Err(GraphError::NotACycle(format!("{n} vertices")));
        }
        if graph.edges().len() != n {
            return Err(GraphError::NotACycle(format!(
                "{} edges for {} vertices",
                graph.edges().len(),
                n
            )));
        }
        for v in 0..n {
            if graph.degree(v) != 2 {
                return Err(GraphError::NotACycle(format!(
                    "vertex `{}` has degree {}",
                    graph.vertex_id(v),
                    graph.degree(v)
                )));
            }
        }
        let mut order = vec![0usize];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut prev = usize::MAX;
        let mut cur = 0usize;
        for _ in 1..n {
            let next = graph
                .neighbors(cur)
                .iter()
                .map(|&(u, _)| u)
                .find(|&u| u != prev)
                .expect("degree two");
            if seen[next] {
                // Closed early: the graph is a union of several cycles.
                return Err(GraphError::NotACycle(
                    "edges form more than one cycle".into(),
                ));
            }
            seen[next] = true;
            order.push(next);
            prev = cur;
            cur = next;
        }
        // The walk must close up: the last vertex is adjacent to the first.
        if graph.edge_between(cur, 0).is_none() {
            return Err(GraphError::NotACycle(
                "edges do not close a single cycle".into(),
            ));
        }
        Ok(CycleGraph { graph, order })
    }

    /// Assemble from parts already known to satisfy the cycle invariants.
    pub(crate) fn from_parts(graph: EdgeLabeledGraph, order: Vec<usize>) -> CycleGraph {
        debug_assert_eq!(order.len(), graph.num_vertices());
        debug_assert!((0..order.len()).all(|i| {
            graph
                .edge_between(order[i], order[(i + 1) % order.len()])
                .is_some()
        }));
        CycleGraph { graph, order }
    }

    /// Same cycle with every edge label replaced by `map(label)`; the cyclic
    /// order is preserved.
    pub fn relabel(&self, mut map: impl FnMut(&Poly) -> Poly) -> Result<CycleGraph, GraphError> {
        let vertices: Vec<String> = self.graph.vertex_ids().to_vec();
        let edges = self
            .graph
            .edges()
            .iter()
            .map(|e| {
                (
                    self.graph.vertex_id(e.u).to_string(),
                    self.graph.vertex_id(e.v).to_string(),
                    map(&e.label),
                    None,
                )
            })
            .collect();
        let graph = EdgeLabeledGraph::new(vertices, edges)?;
        Ok(CycleGraph {
            graph,
            order: self.order.clone(),
        })
    }

    pub fn graph(&self) -> &EdgeLabeledGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn vertex_at(&self, pos: usize) -> usize {
        self.order[pos]
    }

    /// Label of edge `i`, joining positions `i` and `i+1 (mod n)`.
    pub fn edge_label(&self, i: usize) -> &Poly {
        let n = self.n();
        let u = self.order[i % n];
        let v = self.order[(i + 1) % n];
        &self.graph.edge_between(u, v).expect("cycle edge").label
    }

    pub fn edge(&self, i: usize) -> &Edge {
        let n = self.n();
        let u = self.order[i % n];
        let v = self.order[(i + 1) % n];
        self.graph.edge_between(u, v).expect("cycle edge")
    }

    /// Same cycle presented with the order rotated left by `offset`.
    pub fn rotated(&self, offset: usize) -> CycleGraph {
        let n = self.n();
        let order = (0..n).map(|i| self.order[(i + offset) % n]).collect();
        CycleGraph {
            graph: self.graph.clone(),
            order,
        }
    }

    /// Same cycle walked in the opposite direction.
    pub fn reversed(&self) -> CycleGraph {
        let mut order = self.order.clone();
        order[1..].reverse();
        CycleGraph {
            graph: self.graph.clone(),
            order,
        }
    }

    pub fn distinct_labels(&self) -> Vec<Poly> {
        self.graph.distinct_labels()
    }

    /// Remove vertices whose two incident edges carry the same label until
    /// none remain, recording a replayable log. Scanning is greedy in cyclic
    /// order, restarting after each removal; the scan begins at
    /// `scan_start`. Requires at least three distinct labels.
    pub fn reduce_from(&self, scan_start: usize) -> Result<(CycleGraph, ReductionLog), GraphError> {
        if self.distinct_labels().len() < 3 {
            return Err(GraphError::TooFewLabels);
        }
        let mut cur = self.rotated(0);
        let mut log = ReductionLog::new();
        'outer: loop {
            let n = cur.n();
            for k in 0..n {
                let pos = (scan_start + k) % n;
                let before = cur.edge_label((pos + n - 1) % n).clone();
                let after = cur.edge_label(pos).clone();
                if before == after {
                    let vid = cur.graph.vertex_id(cur.order[pos]).to_string();
                    log.push(ReductionStep {
                        position: pos,
                        vertex: vid.clone(),
                        label: before,
                    });
                    cur = cur.remove_at(pos);
                    continue 'outer;
                }
            }
            break;
        }
        debug_assert!(cur.n() >= 3);
        Ok((cur, log))
    }

    pub fn reduce(&self) -> Result<(CycleGraph, ReductionLog), GraphError> {
        self.reduce_from(0)
    }

    /// Is every vertex incident to two distinctly-labeled edges?
    pub fn is_reduced(&self) -> bool {
        let n = self.n();
        (0..n).all(|pos| self.edge_label((pos + n - 1) % n) != self.edge_label(pos))
    }

    fn remove_at(&self, pos: usize) -> CycleGraph {
        let n = self.n();
        assert!(n > 3, "cannot reduce a triangle");
        let gone = self.order[pos];
        let prev = self.order[(pos + n - 1) % n];
        let next = self.order[(pos + 1) % n];
        let label = self.edge_label(pos).clone();
        let factors = self.edge(pos).factors.clone();
        let vertices: Vec<String> = self
            .order
            .iter()
            .filter(|&&v| v != gone)
            .map(|&v| self.graph.vertex_id(v).to_string())
            .collect();
        // Keep the surviving edges, then close the gap with the merged edge.
        let mut edges: Vec<(String, String, Poly, Option<FactoredGen>)> = self
            .graph
            .edges()
            .iter()
            .filter(|e| e.u != gone && e.v != gone)
            .map(|e| {
                (
                    self.graph.vertex_id(e.u).to_string(),
                    self.graph.vertex_id(e.v).to_string(),
                    e.label.clone(),
                    e.factors.clone(),
                )
            })
            .collect();
        edges.push((
            self.graph.vertex_id(prev).to_string(),
            self.graph.vertex_id(next).to_string(),
            label,
            factors,
        ));
        let graph = EdgeLabeledGraph::new(vertices.clone(), edges).expect("merged cycle");
        // `vertices` is the old cyclic order with index `pos` dropped, so the
        // identity order keeps replay positions consistent.
        let order = vertices
            .iter()
            .map(|id| graph.vertex_index(id).expect("kept vertex"))
            .collect();
        CycleGraph { graph, order }
    }

    /// First edge index `i` such that edges `i`, `i+1`, `i+2` carry pairwise
    /// distinct labels. Requires a reduced cycle with at least three distinct
    /// labels.
    pub fn find_three_successive_distinct(&self) -> Result<usize, GraphError> {
        if !self.is_reduced() {
            return Err(GraphError::NotReduced);
        }
        if self.distinct_labels().len() < 3 {
            return Err(GraphError::TooFewLabels);
        }
        let n = self.n();
        for i in 0..n {
            let a = self.edge_label(i);
            let b = self.edge_label((i + 1) % n);
            let c = self.edge_label((i + 2) % n);
            if a != b && b != c && a != c {
                return Ok(i);
            }
        }
        Err(GraphError::NoDistinctWindow)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn graph(verts: &[&str], edges: &[(&str, &str, &str)]) -> EdgeLabeledGraph {
        EdgeLabeledGraph::new(
            verts.iter().map(|s| s.to_string()).collect(),
            edges
                .iter()
                .map(|(u, v, l)| (u.to_string(), v.to_string(), p(l), None))
                .collect(),
        )
        .unwrap()
    }

    fn cycle(labels: &[&str]) -> CycleGraph {
        let n = labels.len();
        let verts: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let edges = (0..n)
            .map(|i| {
                (
                    verts[i].clone(),
                    verts[(i + 1) % n].clone(),
                    p(labels[i]),
                    None,
                )
            })
            .collect();
        CycleGraph::from_graph(EdgeLabeledGraph::new(verts, edges).unwrap()).unwrap()
    }

    #[test]
    fn connectivity_order_examples() {
        let single = graph(&["a"], &[]);
        assert_eq!(single.connectivity_order().unwrap(), vec![0]);

        let path = graph(&["a", "b", "c"], &[("a", "b", "x"), ("b", "c", "x")]);
        assert_eq!(path.connectivity_order().unwrap(), vec![0, 1, 2]);

        // On a 4-cycle the BFS tie-break visits both neighbors of v1 first.
        let c4 = graph(
            &["v1", "v2", "v3", "v4"],
            &[
                ("v1", "v2", "x"),
                ("v2", "v3", "x"),
                ("v3", "v4", "x"),
                ("v4", "v1", "x"),
            ],
        );
        assert_eq!(c4.connectivity_order().unwrap(), vec![0, 1, 3, 2]);

        let disconnected = graph(&["a", "b"], &[]);
        assert!(matches!(
            disconnected.connectivity_order(),
            Err(GraphError::Disconnected)
        ));
    }

    #[test]
    fn connectivity_order_property() {
        let g = graph(
            &["a", "b", "c", "d", "e"],
            &[
                ("a", "c", "x"),
                ("c", "b", "y"),
                ("b", "e", "x"),
                ("e", "d", "y"),
                ("d", "a", "x"),
            ],
        );
        let order = g.connectivity_order().unwrap();
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for (i, &v) in order.iter().enumerate().skip(1) {
            assert!(
                g.neighbors(v).iter().any(|&(u, _)| pos[u] < i),
                "vertex {v} has no earlier neighbor"
            );
        }
    }

    #[test]
    fn components_examples() {
        let connected = graph(&["a", "b"], &[("a", "b", "x")]);
        assert_eq!(connected.components().len(), 1);

        let two_edges = graph(&["a", "b", "c", "d"], &[("a", "b", "x"), ("c", "d", "y")]);
        let comps = two_edges.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].1, vec![0, 1]);
        assert_eq!(comps[1].1, vec![2, 3]);

        let edgeless = graph(&["a", "b", "c"], &[]);
        assert_eq!(edgeless.components().len(), 3);
    }

    #[test]
    fn label_deletion_component() {
        // Square with i on top/bottom and j on the sides: deleting i-labeled
        // edges around v2 leaves the j-path to v4.
        let g = graph(
            &["v1", "v2", "v3", "v4"],
            &[
                ("v1", "v2", "(x+y)^2"),
                ("v1", "v3", "(x+2y)^2"),
                ("v2", "v4", "(x+2y)^2"),
                ("v3", "v4", "(x+y)^2"),
            ],
        );
        let comp = g.component_after_label_deletion(1, &p("(x+y)^2")).unwrap();
        assert_eq!(comp, vec![1, 3]);

        // Deleting the only label isolates the vertex.
        let one = graph(&["a", "b"], &[("a", "b", "x")]);
        assert_eq!(
            one.component_after_label_deletion(0, &p("x")).unwrap(),
            vec![0]
        );

        // Deleting an absent label keeps the whole component.
        assert_eq!(
            one.component_after_label_deletion(0, &p("y")).unwrap(),
            vec![0, 1]
        );
    }

    #[test]
    fn label_deletion_component_boundary() {
        // Every edge leaving the component carries the deleted label, and
        // the component always contains the start vertex.
        let g = graph(
            &["a", "b", "c", "d", "e"],
            &[
                ("a", "b", "(x+y)^2"),
                ("b", "c", "(x+2y)^2"),
                ("c", "d", "(x+y)^2"),
                ("d", "e", "(x+2y)^2"),
                ("e", "a", "(x+y)^2"),
                ("b", "d", "(x+y)^2"),
            ],
        );
        let k = p("(x+y)^2");
        for v in 0..g.num_vertices() {
            let comp = g.component_after_label_deletion(v, &k).unwrap();
            assert!(comp.contains(&v));
            for e in g.edges() {
                let inside = (comp.contains(&e.u), comp.contains(&e.v));
                if inside.0 != inside.1 {
                    assert_eq!(e.label, k, "boundary edge must carry the deleted label");
                }
            }
        }
    }

    #[test]
    fn distinct_labels_counts() {
        let tri = graph(
            &["a", "b", "c"],
            &[("a", "b", "x^2"), ("b", "c", "x^2"), ("c", "a", "x^2")],
        );
        assert_eq!(tri.distinct_labels().len(), 1);

        let six = cycle(&[
            "(x+y)^2", "(x+y)^2", "(x+2y)^2", "(x+2y)^2", "(x+3y)^2", "(x+3y)^2",
        ]);
        assert_eq!(six.distinct_labels().len(), 3);

        let edgeless = graph(&["a"], &[]);
        assert!(edgeless.distinct_labels().is_empty());

        // Labels are compared in canonical monic form.
        let assoc = graph(&["a", "b", "c"], &[("a", "b", "2x"), ("b", "c", "x")]);
        assert_eq!(assoc.distinct_labels().len(), 1);
    }

    #[test]
    fn cycle_recognition() {
        let c = cycle(&["x", "y", "z"]);
        assert_eq!(c.n(), 3);
        assert!(CycleGraph::from_graph(graph(&["a", "b"], &[("a", "b", "x")])).is_err());
        let path = graph(&["a", "b", "c"], &[("a", "b", "x"), ("b", "c", "x")]);
        assert!(CycleGraph::from_graph(path).is_err());
        // Two disjoint triangles have all degrees two but are not a cycle.
        let two_triangles = graph(
            &["a", "b", "c", "d", "e", "f"],
            &[
                ("a", "b", "x"),
                ("b", "c", "x"),
                ("c", "a", "x"),
                ("d", "e", "x"),
                ("e", "f", "x"),
                ("f", "d", "x"),
            ],
        );
        assert!(matches!(
            CycleGraph::from_graph(two_triangles),
            Err(GraphError::NotACycle(_))
        ));
    }

    #[test]
    fn reduce_six_cycle_to_triangle() {
        // Labels k,k,j,j,i,i around a six-cycle reduce to a triangle.
        let six = cycle(&[
            "(x+3y)^2", "(x+3y)^2", "(x+2y)^2", "(x+2y)^2", "(x+y)^2", "(x+y)^2",
        ]);
        let (tri, log) = six.reduce().unwrap();
        assert_eq!(tri.n(), 3);
        assert_eq!(log.len(), 3);
        assert!(tri.is_reduced());
        assert_eq!(tri.distinct_labels().len(), 3);
    }

    #[test]
    fn reduce_already_reduced() {
        let tri = cycle(&["(x+y)^2", "(x+2y)^2", "(x+3y)^2"]);
        let (same, log) = tri.reduce().unwrap();
        assert!(log.is_empty());
        assert_eq!(same.n(), 3);
    }

    #[test]
    fn reduce_five_cycle_one_repeat() {
        let five = cycle(&["(x+y)^2", "(x+y)^2", "(x+2y)^2", "(x+3y)^2", "(x+4y)^2"]);
        let (four, log) = five.reduce().unwrap();
        assert_eq!(four.n(), 4);
        assert_eq!(log.len(), 1);
    }

    #[test]
    fn reduce_requires_three_labels() {
        let two = cycle(&["(x+y)^2", "(x+2y)^2", "(x+y)^2", "(x+2y)^2"]);
        assert!(matches!(two.reduce(), Err(GraphError::TooFewLabels)));
    }

    #[test]
    fn three_successive_distinct() {
        let tri = cycle(&["(x+y)^2", "(x+2y)^2", "(x+3y)^2"]);
        assert_eq!(tri.find_three_successive_distinct().unwrap(), 0);

        // Labels a,b,a,c: the valid windows contain b,a,c or c,a,b.
        let four = cycle(&["(x+y)^2", "(x+2y)^2", "(x+y)^2", "(x+3y)^2"]);
        let i = four.find_three_successive_distinct().unwrap();
        let a = four.edge_label(i).clone();
        let b = four.edge_label((i + 1) % 4).clone();
        let c = four.edge_label((i + 2) % 4).clone();
        assert!(a != b && b != c && a != c);

        let alternating = cycle(&["(x+y)^2", "(x+2y)^2", "(x+y)^2", "(x+2y)^2"]);
        assert!(alternating.find_three_successive_distinct().is_err());
    }
}
