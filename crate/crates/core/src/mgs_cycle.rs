//! Generating sets for cycles labeled by squares of linear forms in `x, y`.
//!
//! The pipeline for three or more distinct labels: normalize every label to
//! the shape `(x+ay)^2` with `a != 0` by an invertible change of variables,
//! reduce the cycle by deleting vertices whose incident edges repeat a
//! label, build the explicit basis on the reduced cycle, reinsert the
//! deleted vertices one by one, and finally map everything back through the
//! inverse substitution. One- and two-label cycles go straight to the
//! general constructions, which need no normalization.

use std::sync::Arc;

use crate::algebra::{invert, Monomial, Poly, Rat};
use crate::error::{GraphError, MgsError};
use crate::graph::{CycleGraph, EdgeLabeledGraph, ReductionStep};
use crate::linsolve::{solve_cubic_split, solve_quadratic_dependence};
use crate::mgs_general::{mgs_one_label, mgs_two_labels};
use crate::spline::{verify_gkm, GeneratingSet, Spline};

/// A quadratic edge-label `(x + a y)^2`, tracked by its slope parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadLabel {
    a: Rat,
}

impl QuadLabel {
    pub fn new(a: Rat) -> QuadLabel {
        QuadLabel { a }
    }

    pub fn slope(&self) -> &Rat {
        &self.a
    }

    /// The generator `(x + a y)^2`, expanded in canonical form.
    pub fn generator(&self) -> Poly {
        let form = Poly::var(0, 2)
            .checked_add(&Poly::var(1, 2).scale(&self.a))
            .expect("same nvars");
        form.pow(2)
    }

    /// Recognize a canonical monic label of the shape `(x + a y)^2`.
    pub fn from_label(label: &Poly) -> Option<QuadLabel> {
        if label.homogeneous_degree() != Some(crate::algebra::HomDegree::Deg(2)) {
            return None;
        }
        // (x + a y)^2 = x^2 + 2a xy + a^2 y^2.
        let x2 = label.coeff(&Monomial::from_exps(&[2, 0]));
        if !x2.is_one() {
            return None;
        }
        let a = &label.coeff(&Monomial::from_exps(&[1, 1])) / &Rat::from_int(2);
        let expect = QuadLabel::new(a);
        if &expect.generator() == label {
            Some(expect)
        } else {
            None
        }
    }
}

/// An invertible linear change of variables on `x, y`, kept with its
/// inverse so generating sets can be mapped back to original coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Substitution {
    matrix: Vec<Vec<Rat>>,
    inverse: Vec<Vec<Rat>>,
}

impl Substitution {
    pub fn identity() -> Substitution {
        let id = vec![vec![Rat::one(), Rat::zero()], vec![Rat::zero(), Rat::one()]];
        Substitution {
            matrix: id.clone(),
            inverse: id,
        }
    }

    fn from_matrix(matrix: Vec<Vec<Rat>>) -> Substitution {
        let inverse = invert(&matrix).expect("invertible by construction");
        Substitution { matrix, inverse }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Substitution::identity().matrix
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.matrix
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        p.with_nvars(2)
            .substitute_linear(&self.matrix, &[Rat::zero(), Rat::zero()])
            .expect("invertible")
    }

    pub fn unapply(&self, p: &Poly) -> Poly {
        p.with_nvars(2)
            .substitute_linear(&self.inverse, &[Rat::zero(), Rat::zero()])
            .expect("invertible")
    }
}

/// The linear form squared in each label, as coefficient pairs `(p, q)`.
fn label_forms(cycle: &CycleGraph) -> Result<Vec<(Rat, Rat)>, MgsError> {
    (0..cycle.n())
        .map(|i| {
            let edge = cycle.edge(i);
            let form = edge
                .factors
                .as_ref()
                .and_then(|f| f.squared_linear_form())
                .ok_or_else(|| MgsError::LabelNotSquaredLinear(edge.label.to_string()))?;
            if form.used_vars() > 2 {
                return Err(MgsError::LabelNotSquaredLinear(edge.label.to_string()));
            }
            let p = form.coeff(&Monomial::var(0));
            let q = form.coeff(&Monomial::from_exps(&[0, 1]));
            Ok((p, q))
        })
        .collect()
}

/// Change variables so every label becomes `(x + a y)^2` with `a != 0`,
/// preserving equality and distinctness of labels. Two integer shears are
/// searched over small parameters: first `y -> y + t x` to make every
/// x-coefficient nonzero, then `x -> x + t y` to make every y-coefficient
/// (hence every slope) nonzero.
pub fn normalize_labels(cycle: &CycleGraph) -> Result<(CycleGraph, Substitution), MgsError> {
    let forms = label_forms(cycle)?;
    let t1 = (0i64..)
        .map(Rat::from_int)
        .find(|t| forms.iter().all(|(p, q)| !(&(q * t) + p).is_zero()))
        .expect("finitely many excluded shear parameters");
    let sheared: Vec<(Rat, Rat)> = forms
        .iter()
        .map(|(p, q)| (&(q * &t1) + p, q.clone()))
        .collect();
    let t2 = (0i64..)
        .map(Rat::from_int)
        .find(|t| sheared.iter().all(|(p, q)| !(&(p * t) + q).is_zero()))
        .expect("finitely many excluded shear parameters");
    let m1 = vec![vec![Rat::one(), Rat::zero()], vec![t1.clone(), Rat::one()]];
    let m2 = vec![vec![Rat::one(), t2.clone()], vec![Rat::zero(), Rat::one()]];
    let combined = mat_mul(&m1, &m2);
    let subst = Substitution::from_matrix(combined);
    let relabeled = cycle.relabel(|label| subst.apply(label))?;
    // Fail closed: every new label must have the target shape with a nonzero
    // slope, and distinctness must be preserved.
    for i in 0..relabeled.n() {
        let label = relabeled.edge_label(i);
        let quad = QuadLabel::from_label(label)
            .ok_or_else(|| MgsError::LabelNotSquaredLinear(label.to_string()))?;
        if quad.slope().is_zero() {
            return Err(MgsError::LabelNotSquaredLinear(label.to_string()));
        }
    }
    debug_assert_eq!(
        relabeled.distinct_labels().len(),
        cycle.distinct_labels().len()
    );
    Ok((relabeled, subst))
}

fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = Rat::zero();
                    for (k, row) in b.iter().enumerate() {
                        acc += &(&a[i][k] * &row[j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn slope_of(label: &Poly) -> Result<QuadLabel, MgsError> {
    QuadLabel::from_label(label).ok_or_else(|| MgsError::LabelNotSquaredLinear(label.to_string()))
}

/// Explicit basis on a reduced cycle whose labels are `(x+ay)^2`, presented
/// so that the window of three successive pairwise-distinct labels starting
/// at edge `offset` sits at the seam of the construction.
pub fn mgs_reduced_cycle(cycle: &CycleGraph, offset: usize) -> Result<GeneratingSet, MgsError> {
    let n = cycle.n();
    if !cycle.is_reduced() {
        return Err(GraphError::NotReduced.into());
    }
    if cycle.distinct_labels().len() < 3 {
        return Err(GraphError::TooFewLabels.into());
    }
    {
        let a = cycle.edge_label(offset % n);
        let b = cycle.edge_label((offset + 1) % n);
        let c = cycle.edge_label((offset + 2) % n);
        if a == b || b == c || a == c {
            return Err(GraphError::NoDistinctWindow.into());
        }
    }
    // Rotate so the distinct window becomes the last two edges plus the
    // closing edge.
    let rot = cycle.rotated((offset + 3) % n);
    let graph = Arc::new(rot.graph().clone());
    // Edge label j joins rotated positions j and j+1; in the construction's
    // 1-based indexing, label a_1 closes the cycle and a_i (i >= 2) joins
    // positions i-2 and i-1.
    let label_at = |i: usize| -> &Poly {
        if i == 1 {
            rot.edge_label(n - 1)
        } else {
            rot.edge_label(i - 2)
        }
    };
    let slope_at =
        |i: usize| -> Result<Rat, MgsError> { Ok(slope_of(label_at(i))?.slope().clone()) };
    let vertex = |j: usize| rot.vertex_at(j - 1); // 1-based position -> graph index

    let s_nm1 = slope_at(n - 1)?;
    let s_n = slope_at(n)?;
    let s_1 = slope_at(1)?;

    let mut elements = vec![Spline::trivial(&graph)];
    let nv = graph.nvars();
    for i in 2..=n.saturating_sub(2) {
        let s_i = slope_at(i)?;
        let (ca, cb, _cc) = solve_quadratic_dependence(&s_nm1, &s_n, &s_1, &s_i, &Rat::one())?;
        let gen_i = label_at(i).clone();
        let gen_nm1 = label_at(n - 1);
        let gen_n = label_at(n);
        let mut entries = vec![Poly::zero(nv); n];
        for j in i..=n - 2 {
            entries[vertex(j)] = gen_i.clone();
        }
        let at_nm1 = gen_i.checked_sub(&gen_nm1.scale(&ca)).expect("same nvars");
        let at_n = at_nm1.checked_sub(&gen_n.scale(&cb)).expect("same nvars");
        entries[vertex(n - 1)] = at_nm1;
        entries[vertex(n)] = at_n;
        elements.push(verify_gkm(&graph, entries)?);
    }
    // Seam generators from the degree-three split x*a_{n-1} = f1*a_n + g1*a_1
    // and y*a_{n-1} = f2*a_n + g2*a_1.
    let x = Poly::var(0, nv.max(2));
    let y = Poly::var(1, nv.max(2));
    let lin = |u: &Rat, v: &Rat| x.scale(u).checked_add(&y.scale(v)).expect("same nvars");
    let (_f11, _f12, g11, g12) = solve_cubic_split(&s_n, &s_1, &s_nm1, &Rat::one(), &Rat::zero())?;
    let (_f21, _f22, g21, g22) = solve_cubic_split(&s_n, &s_1, &s_nm1, &Rat::zero(), &Rat::one())?;
    let gen_nm1 = label_at(n - 1).clone();
    let gen_1 = label_at(1).clone();
    for (mult, g1, g2) in [(&x, &g11, &g12), (&y, &g21, &g22)] {
        let mut entries = vec![Poly::zero(nv); n];
        entries[vertex(n - 1)] = mult.checked_mul(&gen_nm1).expect("same nvars");
        entries[vertex(n)] = lin(g1, g2).checked_mul(&gen_1).expect("same nvars");
        elements.push(verify_gkm(&graph, entries)?);
    }
    Ok(GeneratingSet::new(
        graph,
        elements,
        Some(rot.order().to_vec()),
    )?)
}

/// The triangle base case: for distinct slopes the basis is the trivial
/// spline plus two degree-three generators, with degree sequence
/// `(1, 0, 0, 2)`.
pub fn mgs_triangle(
    a: &QuadLabel,
    b: &QuadLabel,
    c: &QuadLabel,
) -> Result<GeneratingSet, MgsError> {
    if a.slope() == b.slope() || a.slope() == c.slope() || b.slope() == c.slope() {
        return Err(crate::error::LinSolveError::NonDistinctParameters.into());
    }
    let verts: Vec<String> = vec!["v1".into(), "v2".into(), "v3".into()];
    let edges = vec![
        ("v1".to_string(), "v2".to_string(), a.generator(), None),
        ("v2".to_string(), "v3".to_string(), b.generator(), None),
        ("v3".to_string(), "v1".to_string(), c.generator(), None),
    ];
    let graph = EdgeLabeledGraph::new(verts, edges)?;
    let cycle = CycleGraph::from_graph(graph)?;
    mgs_reduced_cycle(&cycle, 0)
}

/// Reinsert one reduced-away vertex: every generator copies its value at the
/// reinserted vertex's predecessor, and one new indicator generator carries
/// the repeated label. Returns the extended set and the grown cycle.
pub fn reinsert_vertex(
    set: &GeneratingSet,
    cycle: &CycleGraph,
    step: &ReductionStep,
) -> Result<(GeneratingSet, CycleGraph), MgsError> {
    let m_old = cycle.n();
    if step.position > m_old {
        return Err(GraphError::BadLogEntry(format!(
            "position {} out of range for a {}-cycle",
            step.position, m_old
        ))
        .into());
    }
    if cycle.graph().vertex_index(&step.vertex).is_some() {
        return Err(GraphError::BadLogEntry(format!(
            "vertex `{}` is already present",
            step.vertex
        ))
        .into());
    }
    let m = m_old + 1;
    // New cyclic order: old order with the vertex back at its position.
    let mut names: Vec<String> = cycle
        .order()
        .iter()
        .map(|&v| cycle.graph().vertex_id(v).to_string())
        .collect();
    names.insert(step.position, step.vertex.clone());
    let pred = names[(step.position + m - 1) % m].clone();
    let succ = names[(step.position + 1) % m].clone();
    // The edge being split must exist and carry the repeated label.
    let (pu, su) = (
        cycle.graph().vertex_index(&pred).expect("old vertex"),
        cycle.graph().vertex_index(&succ).expect("old vertex"),
    );
    let (canon_label, _) = step.label.monic();
    match cycle.graph().edge_between(pu, su) {
        Some(e) if e.label == canon_label => {}
        _ => {
            return Err(GraphError::BadLogEntry(format!(
                "no edge {pred}-{succ} labeled `{}`",
                step.label
            ))
            .into())
        }
    }
    let mut edges: Vec<(String, String, Poly, Option<crate::algebra::FactoredGen>)> = cycle
        .graph()
        .edges()
        .iter()
        .filter(|e| !(e.u == pu && e.v == su || e.u == su && e.v == pu))
        .map(|e| {
            (
                cycle.graph().vertex_id(e.u).to_string(),
                cycle.graph().vertex_id(e.v).to_string(),
                e.label.clone(),
                e.factors.clone(),
            )
        })
        .collect();
    edges.push((pred.clone(), step.vertex.clone(), canon_label.clone(), None));
    edges.push((step.vertex.clone(), succ.clone(), canon_label.clone(), None));
    let graph = EdgeLabeledGraph::new(names.clone(), edges)?;
    let order = names
        .iter()
        .map(|id| graph.vertex_index(id).expect("inserted vertex"))
        .collect();
    let grown = CycleGraph::from_parts(graph, order);
    let garc = Arc::new(grown.graph().clone());

    let mut elements = Vec::with_capacity(set.len() + 1);
    for s in set.elements() {
        let mut entries = vec![Poly::zero(garc.nvars()); m];
        for (old_idx, old_id) in cycle.graph().vertex_ids().iter().enumerate() {
            entries[garc.vertex_index(old_id).expect("kept")] = s.entry(old_idx).clone();
        }
        let pred_value = s
            .entry(cycle.graph().vertex_index(&pred).expect("old vertex"))
            .clone();
        entries[garc.vertex_index(&step.vertex).expect("new")] = pred_value;
        elements.push(verify_gkm(&garc, entries)?);
    }
    let new_idx = garc.vertex_index(&step.vertex).expect("new");
    elements.push(Spline::indicator(&garc, new_idx, canon_label)?);
    Ok((GeneratingSet::new(garc, elements, None)?, grown))
}

/// Generating set for any cycle whose labels are squares of linear forms in
/// `x, y`: one- and two-label cycles use the general constructions, three or
/// more labels run the normalize/reduce/solve/reinsert pipeline, with the
/// result mapped back to original coordinates and re-verified.
pub fn mgs_cycle_quadratic(cycle: &CycleGraph) -> Result<GeneratingSet, MgsError> {
    // Every label must be the square of a linear form.
    label_forms(cycle)?;
    let graph = Arc::new(cycle.graph().clone());
    match cycle.distinct_labels().len() {
        0 | 1 => return mgs_one_label(&graph),
        2 => return mgs_two_labels(&graph),
        _ => {}
    }
    let (normalized, subst) = normalize_labels(cycle)?;
    let (reduced, log) = normalized.reduce()?;
    let offset = reduced.find_three_successive_distinct()?;
    let mut set = mgs_reduced_cycle(&reduced, offset)?;
    let mut current = reduced;
    for step in log.iter().rev() {
        let (grown_set, grown_cycle) = reinsert_vertex(&set, &current, step)?;
        set = grown_set;
        current = grown_cycle;
    }
    // Map entries back through the inverse substitution, re-keyed onto the
    // original graph, and re-verify against the original labels.
    let mut elements = Vec::with_capacity(set.len());
    for s in set.elements() {
        let mut entries = vec![Poly::zero(graph.nvars().max(2)); graph.num_vertices()];
        for (i, id) in set.graph().vertex_ids().iter().enumerate() {
            let target = graph
                .vertex_index(id)
                .expect("same vertex set as the input cycle");
            entries[target] = subst.unapply(s.entry(i));
        }
        elements.push(verify_gkm(&graph, entries)?);
    }
    Ok(GeneratingSet::new(graph, elements, None)?)
}

/// Predicted degree sequence for an `n`-cycle with quadratic labels, by the
/// number of distinct labels (counts of 3 or more all behave alike).
pub fn predicted_degree_sequence(n: usize, label_count: usize) -> Vec<usize> {
    assert!(n >= 3, "cycles have at least three vertices");
    assert!(label_count >= 1);
    match label_count {
        1 => vec![1, 0, n - 1],
        2 => vec![1, 0, n - 2, 0, 1],
        _ => vec![1, 0, n - 3, 2],
    }
}

/// Parse helper shared by the unit tests.
#[cfg(test)]
pub(crate) fn quad_cycle(labels: &[&str]) -> CycleGraph {
    let n = labels.len();
    let verts: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let edges = (0..n)
        .map(|i| {
            (
                verts[i].clone(),
                verts[(i + 1) % n].clone(),
                crate::algebra::parse_poly(labels[i]).expect("label"),
                None,
            )
        })
        .collect();
    CycleGraph::from_graph(EdgeLabeledGraph::new(verts, edges).expect("simple cycle"))
        .expect("cycle")
}
