//! Pants decompositions: verified cutting into three-holed spheres, the
//! adjacency graph of a decomposition, dimension bookkeeping for the finite
//! complex, the replacement table for nonadjacent pairs, and the named
//! decomposition families used by the batch checkers.
//!
//! Purpose: everything here treats a pants decomposition as a *verified*
//! object — a curve system is only wrapped in `PantsDecomposition` after
//! `verify_pants` has cut the model surface along it and confirmed that every
//! complementary piece is a three-holed sphere.  Downstream structure (the
//! adjacency graph, linearity, successor walks, replacement witnesses) is
//! derived from the stored cut report rather than recomputed ad hoc.
//!
//! Why this design: the checkers in this module are *evidence producers*, not
//! proofs.  Each `check_*` function sweeps a concrete finite family of
//! decompositions on one surface and reports every instance it examined plus
//! every violation it found, so a caller can distinguish "passed vacuously"
//! from "passed on 40 instances".  Constructions (`fan_top_pants`,
//! `build_linear_p`, `minimal_pants`) always run through `verify_pants`, so a
//! bad formula fails loudly instead of producing an unverified object.
//!
//! Notes: curve systems are kept as `Curve` values (not realized positions) so
//! reports and witnesses print with stable names.  Enumeration of all
//! decompositions inside a complex goes through maximal cliques of the
//! disjointness graph: distinct vertices of the standard complex are pairwise
//! non-isotopic, so no pants decomposition can extend inside the complex and
//! every decomposition is a maximal clique (the converse is checked by
//! cutting).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::{build_x, SimplicialComplex};
use crate::curves::{classify_type, cut_along, rat, Curve, CutSurface, Face, TopType, Transit, Word};
use crate::intersection::intersect;
use crate::surface_model::{ModelPolygon, SurfaceSpec};
use crate::{Error, Result};

/// A curve system together with the verified report of cutting the surface
/// along it.  Only constructed through [`verify_pants`], so every component
/// of `cut_report` is a three-holed sphere.
#[derive(Debug, Clone)]
pub struct PantsDecomposition {
    pub curves: Vec<Curve>,
    pub cut_report: CutSurface,
}

impl PantsDecomposition {
    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn contains(&self, curve: &Curve) -> bool {
        self.curves.iter().any(|c| c == curve)
    }

    /// Curves of the decomposition with one member replaced (for substitution
    /// checks).  The replaced curve must be present.
    fn with_replacement(&self, out: &Curve, into: &Curve) -> Vec<Curve> {
        self.curves
            .iter()
            .map(|c| if c == out { into.clone() } else { c.clone() })
            .collect()
    }
}

/// Dual graph of a pants decomposition: one node per curve, one arc between
/// two curves whenever some complementary pair of pants touches both.
/// Multiple shared pants collapse to a single arc and a pair of pants seeing
/// the same curve twice contributes no self-loop.
#[derive(Debug, Clone)]
pub struct AdjacencyGraph {
    pub nodes: Vec<Curve>,
    pub arcs: BTreeSet<(usize, usize)>,
}

impl AdjacencyGraph {
    pub fn node_index(&self, curve: &Curve) -> Option<usize> {
        self.nodes.iter().position(|c| c == curve)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.arcs.contains(&(a, b))
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.arcs {
            if a == u {
                out.push(b);
            } else if b == u {
                out.push(a);
            }
        }
        out
    }

    pub fn valency(&self, u: usize) -> usize {
        self.neighbors(u).len()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.nodes.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn has_triangle(&self) -> bool {
        for &(a, b) in &self.arcs {
            for c in 0..self.nodes.len() {
                if c != a && c != b && self.has_arc(a, c) && self.has_arc(b, c) {
                    return true;
                }
            }
        }
        false
    }
}

/// The inclusive range of dimensions realized by pants decompositions viewed
/// as simplices: a decomposition with k curves spans a (k-1)-simplex, and the
/// possible counts run from `a_r + 1` up to `b_r + 1` where `r = g / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DimensionRange {
    pub a_r: i64,
    pub b_r: i64,
    pub r: u32,
}

/// Replacement witness for a nonadjacent pair in a top-dimensional
/// decomposition: curves outside the decomposition that meet exactly one of
/// the pair each and keep every substitution a pants decomposition.
#[derive(Debug, Clone)]
pub struct NonadjacencyWitness {
    pub pair: (Curve, Curve),
    pub delta_alpha: Curve,
    pub delta_beta: Curve,
}

/// Outcome of one batch checker: how many concrete instances were examined
/// and a description of every violation.  `notes` records context that is not
/// a failure (realized dimension gaps, skipped sweeps).
#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub instances_checked: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl LemmaReport {
    pub(crate) fn new(lemma: &str) -> Self {
        LemmaReport {
            lemma: lemma.to_string(),
            instances_checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn instance(&mut self) {
        self.instances_checked += 1;
    }

    pub(crate) fn ensure(&mut self, cond: bool, msg: impl FnOnce() -> String) {
        if !cond {
            self.failures.push(msg());
        }
    }

    pub(crate) fn note(&mut self, msg: String) {
        self.notes.push(msg);
    }
}

pub(crate) fn names(curves: &[Curve]) -> String {
    let list: Vec<String> = curves.iter().map(|c| c.name()).collect();
    format!("{{{}}}", list.join(", "))
}

/// Cut the surface along the given curves and verify that every
/// complementary component is a pair of pants.  The curves must be valid on
/// the model, pairwise distinct and pairwise disjoint.
pub fn verify_pants(model: &ModelPolygon, curves: &[Curve]) -> Result<PantsDecomposition> {
    if curves.is_empty() {
        return Err(Error::VerificationFailed(
            "a pants decomposition needs at least one curve".into(),
        ));
    }
    let spec = model.spec;
    let mut seen = BTreeSet::new();
    for c in curves {
        c.validate(spec)?;
        if !seen.insert(c.name()) {
            return Err(Error::InvalidCurve(format!(
                "duplicate curve {} in candidate decomposition",
                c.name()
            )));
        }
    }
    for (k, a) in curves.iter().enumerate() {
        for b in &curves[k + 1..] {
            let result = intersect(model, a, b)?;
            if result.value != 0 {
                return Err(Error::VerificationFailed(format!(
                    "curves {} and {} intersect {} times",
                    a.name(),
                    b.name(),
                    result.value
                )));
            }
        }
    }
    let realized = curves
        .iter()
        .map(|c| c.realize(model))
        .collect::<Result<Vec<_>>>()?;
    let cut = cut_along(model, &realized)?;
    for comp in &cut.components {
        if !comp.is_pants() {
            return Err(Error::VerificationFailed(format!(
                "cutting along {} leaves a non-pants piece: orientable={}, genus={}, boundary circles={}",
                names(curves),
                comp.orientable,
                comp.genus,
                comp.boundary_count
            )));
        }
    }
    Ok(PantsDecomposition {
        curves: curves.to_vec(),
        cut_report: cut,
    })
}

/// Whether the decomposition has the maximal number of curves, `2g + n - 3`.
/// A maximal decomposition must contain exactly `g` one-sided curves; if the
/// count is right but the one-sided tally is not, that is reported as an
/// error rather than a plain `false`.
pub fn is_top_dimensional(model: &ModelPolygon, p: &PantsDecomposition) -> Result<bool> {
    let spec = model.spec;
    let slots = 2 * spec.genus as usize + spec.holes as usize;
    if slots < 3 || p.curves.len() != slots - 3 {
        return Ok(false);
    }
    let mut one_sided = 0u32;
    for c in &p.curves {
        if c.realize(model)?.is_one_sided(model) {
            one_sided += 1;
        }
    }
    if one_sided != spec.genus {
        return Err(Error::VerificationFailed(format!(
            "maximal decomposition {} has {} one-sided curves, expected {}",
            names(&p.curves),
            one_sided,
            spec.genus
        )));
    }
    Ok(true)
}

/// Inclusive range of simplex dimensions spanned by pants decompositions on
/// N_{g,n}.  Undefined on the closed Klein bottle, where no curve system
/// cuts the surface into pants.
pub fn dimension_range(spec: SurfaceSpec) -> Result<DimensionRange> {
    let g = spec.genus as i64;
    let n = spec.holes as i64;
    if g == 2 && n == 0 {
        return Err(Error::InvalidSurface(
            "the closed genus-2 surface admits no pants decomposition".into(),
        ));
    }
    let r = (g / 2) as u32;
    let (a_r, b_r) = if g == 0 {
        (n - 4, n - 4)
    } else if g == 1 {
        (n - 2, n - 2)
    } else if g % 2 == 0 {
        (3 * (g / 2) + n - 4, 4 * (g / 2) + n - 4)
    } else {
        (3 * (g / 2) + n - 2, 4 * (g / 2) + n - 2)
    };
    Ok(DimensionRange { a_r, b_r, r })
}

/// Build the dual adjacency graph from the stored cut report.
pub fn adjacency_graph(p: &PantsDecomposition) -> AdjacencyGraph {
    let mut arcs = BTreeSet::new();
    for comp in &p.cut_report.components {
        let owners: BTreeSet<usize> = comp.cut_circle_owners.iter().copied().collect();
        let owners: Vec<usize> = owners.into_iter().collect();
        for x in 0..owners.len() {
            for y in x + 1..owners.len() {
                arcs.insert((owners[x], owners[y]));
            }
        }
    }
    AdjacencyGraph {
        nodes: p.curves.clone(),
        arcs,
    }
}

/// Whether the adjacency graph is a simple path (a single node counts).
pub fn is_linear(graph: &AdjacencyGraph) -> bool {
    let n = graph.nodes.len();
    if n == 0 {
        return false;
    }
    if n == 1 {
        return graph.arcs.is_empty();
    }
    graph.arcs.len() == n - 1
        && graph.is_connected()
        && (0..n).all(|u| graph.valency(u) <= 2)
}

/// The curve reached from `start` by walking `k` arcs away from a valency-one
/// node through valency-two interior nodes.  `k = 0` returns `start` itself.
/// Errors if `start` is missing, has valency other than one, or the walk hits
/// a branch point before taking its last step.
pub fn linear_successor(graph: &AdjacencyGraph, start: &Curve, k: usize) -> Result<Curve> {
    let s = graph.node_index(start).ok_or_else(|| {
        Error::InvalidCurve(format!("{} is not a curve of the decomposition", start.name()))
    })?;
    if k == 0 {
        return Ok(graph.nodes[s].clone());
    }
    if graph.valency(s) != 1 {
        return Err(Error::VerificationFailed(format!(
            "{} has valency {}, not 1",
            start.name(),
            graph.valency(s)
        )));
    }
    let mut prev = s;
    let mut cur = graph.neighbors(s)[0];
    for step in 1..k {
        if graph.valency(cur) != 2 {
            return Err(Error::VerificationFailed(format!(
                "walk from {} stops after {} steps: {} has valency {}",
                start.name(),
                step,
                graph.nodes[cur].name(),
                graph.valency(cur)
            )));
        }
        let next = graph
            .neighbors(cur)
            .into_iter()
            .find(|&v| v != prev)
            .expect("valency-two node has a second neighbor");
        prev = cur;
        cur = next;
    }
    Ok(graph.nodes[cur].clone())
}

/// For every nonadjacent pair in a top-dimensional decomposition, search the
/// complex for a replacement witness: curves `delta_alpha`, `delta_beta`
/// outside the decomposition with
///   - `delta_alpha` meeting the first curve of the pair and nothing else,
///   - `delta_beta` meeting the second curve of the pair and nothing else,
///   - `delta_alpha` and `delta_beta` disjoint,
/// such that replacing either curve or both still cuts the surface into
/// pants.  Errors on the first pair with no witness.
pub fn check_nonadjacency_condition(
    model: &ModelPolygon,
    p: &PantsDecomposition,
    universe: &SimplicialComplex,
) -> Result<Vec<NonadjacencyWitness>> {
    if !is_top_dimensional(model, p)? {
        return Err(Error::VerificationFailed(format!(
            "decomposition {} is not top-dimensional",
            names(&p.curves)
        )));
    }
    let mut member = Vec::with_capacity(p.curves.len());
    for c in &p.curves {
        member.push(universe.vertex_index(c).ok_or_else(|| {
            Error::InvalidCurve(format!("{} is not a vertex of the complex", c.name()))
        })?);
    }
    let graph = adjacency_graph(p);
    let member_set: BTreeSet<usize> = member.iter().copied().collect();
    let mut witnesses = Vec::new();
    for a in 0..p.curves.len() {
        for b in a + 1..p.curves.len() {
            if graph.has_arc(a, b) {
                continue;
            }
            let rest: Vec<usize> = member
                .iter()
                .copied()
                .filter(|&m| m != member[a] && m != member[b])
                .collect();
            // Candidate replacements for one curve of the pair: outside the
            // decomposition, crossing that curve, disjoint from everything
            // else in it.
            let candidates = |target: usize, other: usize| -> Vec<usize> {
                (0..universe.vertex_count())
                    .filter(|&v| {
                        !member_set.contains(&v)
                            && !universe.has_edge(v, member[target])
                            && universe.has_edge(v, member[other])
                            && rest.iter().all(|&m| universe.has_edge(v, m))
                    })
                    .collect()
            };
            let cand_a = candidates(a, b);
            let cand_b = candidates(b, a);
            let mut found = None;
            'search: for &da in &cand_a {
                for &db in &cand_b {
                    if da == db || !universe.has_edge(da, db) {
                        continue;
                    }
                    let delta_a = universe.vertices[da].clone();
                    let delta_b = universe.vertices[db].clone();
                    let sub_a = p.with_replacement(&p.curves[a], &delta_a);
                    if verify_pants(model, &sub_a).is_err() {
                        continue;
                    }
                    let sub_b = p.with_replacement(&p.curves[b], &delta_b);
                    if verify_pants(model, &sub_b).is_err() {
                        continue;
                    }
                    let mut sub_ab = p.with_replacement(&p.curves[a], &delta_a);
                    let slot = sub_ab
                        .iter()
                        .position(|c| c == &p.curves[b])
                        .expect("pair member still present");
                    sub_ab[slot] = delta_b.clone();
                    if verify_pants(model, &sub_ab).is_err() {
                        continue;
                    }
                    found = Some((delta_a, delta_b));
                    break 'search;
                }
            }
            match found {
                Some((delta_alpha, delta_beta)) => witnesses.push(NonadjacencyWitness {
                    pair: (p.curves[a].clone(), p.curves[b].clone()),
                    delta_alpha,
                    delta_beta,
                }),
                None => {
                    return Err(Error::VerificationFailed(format!(
                        "no replacement witness for the nonadjacent pair ({}, {}) in {}",
                        p.curves[a].name(),
                        p.curves[b].name(),
                        names(&p.curves)
                    )))
                }
            }
        }
    }
    Ok(witnesses)
}

/// Replacement table for members of a linear decomposition on the genus-one
/// model: given the curve to replace and its neighbors along the path, return
/// the unique listed substitute.  Rows are keyed by the chord spans, with
/// `k = j - i` the hole count of the disc side:
///   - `k = 2` rows depend on the successor only;
///   - `2 < k < n-1` rows depend on predecessor and successor;
///   - `k = n-1` rows (the two widest chords) depend on the predecessor;
///   - the core curve's row depends on the predecessor and yields an arc to
///     the crosscap.
pub fn delta_table(
    spec: SurfaceSpec,
    gamma: &Curve,
    predecessor: Option<&Curve>,
    successor: Option<&Curve>,
) -> Result<Curve> {
    if spec.genus != 1 || spec.holes < 4 {
        return Err(Error::Unsupported(
            "the replacement table applies to genus one with at least four holes".into(),
        ));
    }
    let n = spec.holes;
    let describe = |c: Option<&Curve>| c.map(|c| c.name()).unwrap_or_else(|| "-".into());
    let no_row = || {
        Error::VerificationFailed(format!(
            "no replacement row matches gamma={} predecessor={} successor={}",
            gamma.name(),
            describe(predecessor),
            describe(successor)
        ))
    };
    let result = match *gamma {
        Curve::Alpha { i: 1 } => match predecessor {
            Some(&Curve::Beta { i: 1, j }) if j == n => Some(Curve::alpha_arc(1, n)),
            Some(&Curve::Beta { i: 2, j }) if j == n + 1 => Some(Curve::alpha_arc(1, 2)),
            _ => None,
        },
        Curve::Beta { i, j } => {
            let k = j - i;
            if k == n - 1 {
                match (i, predecessor) {
                    (1, Some(&Curve::Beta { i: 2, j: pj })) if pj == n => {
                        Some(Curve::beta(2, n + 1))
                    }
                    (1, Some(&Curve::Beta { i: 1, j: pj })) if pj == n - 1 => {
                        Some(Curve::beta(n - 1, n + 1))
                    }
                    (2, Some(&Curve::Beta { i: 2, j: pj })) if pj == n => Some(Curve::beta(1, n)),
                    (2, Some(&Curve::Beta { i: 3, j: pj })) if pj == n + 1 => {
                        Some(Curve::beta(1, 3))
                    }
                    _ => None,
                }
            } else if k == 2 {
                match successor {
                    Some(&Curve::Beta { i: si, j: sj }) if si == i && sj == j + 1 => {
                        Some(Curve::beta(i + 1, j + 1))
                    }
                    Some(&Curve::Beta { i: si, j: sj }) if si + 1 == i && sj == j => {
                        Some(Curve::beta(i - 1, i + 1))
                    }
                    _ => None,
                }
            } else if k > 2 && k < n - 1 {
                match (predecessor, successor) {
                    (
                        Some(&Curve::Beta { i: pi, j: pj }),
                        Some(&Curve::Beta { i: si, j: sj }),
                    ) => {
                        if pi == i && pj == j - 1 {
                            if si == i && sj == j + 1 {
                                Some(Curve::beta(j - 1, j + 1))
                            } else if si + 1 == i && sj == j {
                                Some(Curve::beta(i - 1, j - 1))
                            } else {
                                None
                            }
                        } else if pi == i + 1 && pj == j {
                            if si == i && sj == j + 1 {
                                Some(Curve::beta(i + 1, j + 1))
                            } else if si + 1 == i && sj == j {
                                Some(Curve::beta(i - 1, i + 1))
                            } else {
                                None
                            }
                        } else {
                            None
                        }
                    }
                    _ => None,
                }
            } else {
                None
            }
        }
        _ => None,
    };
    let delta = result.ok_or_else(no_row)?;
    delta.validate(spec)?;
    Ok(delta)
}

/// The linear decomposition on the genus-one model determined by a chord
/// between holes `i` and `j`: the core curve plus a path of nested chords
/// through the given one.  Verified to cut into pants and to have a path as
/// adjacency graph.
pub fn build_linear_p(model: &ModelPolygon, i: u32, j: u32) -> Result<PantsDecomposition> {
    let spec = model.spec;
    if spec.genus != 1 || spec.holes < 4 {
        return Err(Error::Unsupported(
            "linear decompositions are built on genus one with at least four holes".into(),
        ));
    }
    let n = spec.holes;
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    Curve::beta(i, j).validate(spec)?;
    let mut set = BTreeSet::new();
    set.insert(Curve::alpha(1));
    if i == 1 {
        for m in 3..=n {
            set.insert(Curve::beta(1, m));
        }
    } else {
        for m in j..=n + 1 {
            set.insert(Curve::beta(2, m));
        }
        for l in 3..=i {
            set.insert(Curve::beta(l, j));
        }
        for m in i + 2..=j - 1 {
            set.insert(Curve::beta(i, m));
        }
    }
    let curves: Vec<Curve> = set.into_iter().collect();
    let p = verify_pants(model, &curves)?;
    let graph = adjacency_graph(&p);
    if !is_linear(&graph) {
        return Err(Error::VerificationFailed(format!(
            "decomposition {} built for chord ({i}, {j}) is not linear",
            names(&curves)
        )));
    }
    Ok(p)
}

fn wrap_index(total: u32, raw: i64) -> u32 {
    let t = total as i64;
    let mut m = raw % t;
    if m <= 0 {
        m += t;
    }
    m as u32
}

fn circular_distance(total: u32, a: u32, b: u32) -> u32 {
    let d = if a > b { a - b } else { b - a };
    d.min(total - d)
}

/// Chord between holes `a` and `b` (indices taken modulo the edge cycle),
/// or `None` when the endpoints are too close for the chord to be essential.
fn chord_if_valid(spec: SurfaceSpec, a: i64, b: i64) -> Option<Curve> {
    let total = spec.genus + spec.holes;
    let a = wrap_index(total, a);
    let b = wrap_index(total, b);
    if a == b {
        return None;
    }
    let curve = Curve::beta(a.min(b), a.max(b));
    curve.validate(spec).ok().map(|_| curve)
}

/// Two-sided curve running once through the crosscaps `s_a` and `s_b`.
fn crosscap_pair_curve(model: &ModelPolygon, a: u32, b: u32) -> Result<Curve> {
    let word = Word::new(
        vec![
            Transit::new(model.s_position(a)?, rat(1, 2)),
            Transit::new(model.s_position(b)?, rat(1, 2)),
        ],
        Face::Plus,
    )?;
    Ok(Curve::from_word(model, &word))
}

/// Top-dimensional decomposition anchored at hole `anchor`: all one-sided
/// cores plus every essential chord out of that hole.  The chords nest, each
/// gap between consecutive chords holds a single crosscap or boundary
/// circle, and the result always has `2g + n - 3` curves.
pub fn fan_top_pants(model: &ModelPolygon, anchor: u32) -> Result<PantsDecomposition> {
    let spec = model.spec;
    let total = spec.genus + spec.holes;
    if anchor < 1 || anchor > total {
        return Err(Error::InvalidCurve(format!(
            "anchor hole {anchor} is out of range 1..={total}"
        )));
    }
    let mut curves: Vec<Curve> = (1..=spec.genus).map(Curve::alpha).collect();
    for m in 1..=total {
        if circular_distance(total, anchor, m) >= 2 {
            curves.push(Curve::beta(anchor.min(m), anchor.max(m)));
        }
    }
    verify_pants(model, &curves)
}

/// The standard top-dimensional decomposition: the fan anchored at `e_{g-1}`
/// for genus at least two, at the last hole for genus one, and at the first
/// hole for planar surfaces.
pub fn standard_top_pants(model: &ModelPolygon) -> Result<PantsDecomposition> {
    let spec = model.spec;
    let anchor = if spec.genus >= 2 {
        spec.genus - 1
    } else if spec.genus == 1 {
        spec.genus + spec.holes
    } else {
        1
    };
    fan_top_pants(model, anchor)
}

/// A decomposition with the minimal number of curves, `a_r + 1`.  For genus
/// zero and one the extremes coincide and the fan is reused; otherwise the
/// construction pairs up crosscaps with two-sided curves through two
/// crosscaps each, which trade one curve against the fan per pair.
pub fn minimal_pants(model: &ModelPolygon) -> Result<PantsDecomposition> {
    let spec = model.spec;
    let g = spec.genus;
    let n = spec.holes;
    let range = dimension_range(spec)?;
    let mut set: BTreeSet<Curve> = BTreeSet::new();
    match g {
        0 | 1 => return standard_top_pants(model),
        2 => {
            set.insert(crosscap_pair_curve(model, 1, 2)?);
            for k in 1..=n {
                if let Some(c) = chord_if_valid(spec, 2, (2 + k) as i64) {
                    set.insert(c);
                }
            }
        }
        3 => {
            set.insert(crosscap_pair_curve(model, 2, 3)?);
            set.insert(Curve::alpha(1));
            for k in 1..=n {
                if let Some(c) = chord_if_valid(spec, 1, (2 + k) as i64) {
                    set.insert(c);
                }
            }
        }
        _ => {
            let r = g / 2;
            for k in 1..=r {
                set.insert(crosscap_pair_curve(model, 2 * k - 1, 2 * k)?);
            }
            for k in 2..=r {
                if let Some(c) = chord_if_valid(spec, (2 * k - 2) as i64, (2 * k) as i64) {
                    set.insert(c);
                }
                if let Some(c) = chord_if_valid(spec, 2, (2 * k) as i64) {
                    set.insert(c);
                }
            }
            for k in 1..=n {
                if let Some(c) = chord_if_valid(spec, 2, (g + k) as i64) {
                    set.insert(c);
                }
            }
            if g % 2 == 1 {
                set.insert(Curve::alpha(g));
                if let Some(c) = chord_if_valid(spec, 2, g as i64) {
                    set.insert(c);
                }
            }
        }
    }
    let curves: Vec<Curve> = set.into_iter().collect();
    let expected = (range.a_r + 1) as usize;
    if curves.len() != expected {
        return Err(Error::Internal(format!(
            "minimal construction produced {} curves, expected {}",
            curves.len(),
            expected
        )));
    }
    verify_pants(model, &curves)
}

/// All pants decompositions whose curves are vertices of the given complex.
/// Every such decomposition is a maximal clique of the disjointness graph,
/// so the search filters maximal cliques through `verify_pants`.
pub fn enumerate_pants(
    model: &ModelPolygon,
    universe: &SimplicialComplex,
) -> Result<Vec<PantsDecomposition>> {
    let mut out = Vec::new();
    for clique in universe.maximal_cliques() {
        let curves: Vec<Curve> = clique
            .iter()
            .map(|&v| universe.vertices[v].clone())
            .collect();
        if let Ok(p) = verify_pants(model, &curves) {
            out.push(p);
        }
    }
    Ok(out)
}

/// All strictly nested chord chains on the genus-one model: interval
/// sequences `[i_2, j_2] ⊂ ... ⊂ [i_{n-1}, j_{n-1}]` growing one endpoint per
/// step, ending at `[1, n]` or `[2, n+1]`.  Together with the core curve each
/// chain is a linear decomposition, ordered from the two-holed chord up.
fn nested_chord_chains(n: u32) -> Vec<Vec<(u32, u32)>> {
    fn chains_ending_at(lo: u32, hi: u32) -> Vec<Vec<(u32, u32)>> {
        if hi - lo == 2 {
            return vec![vec![(lo, hi)]];
        }
        let mut out = Vec::new();
        for (slo, shi) in [(lo + 1, hi), (lo, hi - 1)] {
            for mut chain in chains_ending_at(slo, shi) {
                chain.push((lo, hi));
                out.push(chain);
            }
        }
        out
    }
    let mut out = chains_ending_at(1, n);
    out.extend(chains_ending_at(2, n + 1));
    out
}

// ---------------------------------------------------------------------------
// Batch checkers.  Each sweeps a finite family on one surface and returns a
// report;`Err(Unsupported)` means the surface is outside the checker's range.
// ---------------------------------------------------------------------------

fn constructed_top_family(model: &ModelPolygon) -> Result<Vec<PantsDecomposition>> {
    let spec = model.spec;
    let total = spec.genus + spec.holes;
    let mut family = Vec::new();
    for anchor in 1..=total {
        // Every anchor with at least one essential chord, or with enough
        // cores to decompose the surface on its own, yields a fan.
        match fan_top_pants(model, anchor) {
            Ok(p) => family.push(p),
            Err(Error::VerificationFailed(_)) | Err(Error::InvalidCurve(_)) => {}
            Err(e) => return Err(e),
        }
    }
    if spec.genus == 1 && spec.holes >= 4 {
        for i in 1..=total {
            for j in i + 2..=total {
                if Curve::beta(i, j).validate(spec).is_ok() {
                    family.push(build_linear_p(model, i, j)?);
                }
            }
        }
    }
    if family.is_empty() {
        return Err(Error::Unsupported(format!(
            "no top-dimensional family is constructed on N_{{{},{}}}",
            spec.genus, spec.holes
        )));
    }
    Ok(family)
}

fn require(cond: bool, msg: String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Unsupported(msg))
    }
}

/// Range gate shared by the decomposition-size checkers.
fn sizes_gate(spec: SurfaceSpec) -> Result<()> {
    let g = spec.genus;
    let n = spec.holes;
    let ok = (g >= 1 && g + n >= 3 && !(g == 2 && n == 0)) || (g == 0 && n >= 4);
    require(
        ok,
        format!("decomposition size checks do not apply to N_{{{g},{n}}}"),
    )
}

/// Check the dimension formulas: the fan realizes the upper endpoint, the
/// minimal construction realizes the lower endpoint, and (when the complex is
/// small enough to sweep) no decomposition inside it exceeds the upper bound.
pub fn check_numberofcurve(model: &ModelPolygon) -> Result<LemmaReport> {
    let spec = model.spec;
    sizes_gate(spec)?;
    let mut report = LemmaReport::new("numberofcurve");
    let range = dimension_range(spec)?;
    report.note(format!(
        "expected decomposition sizes {}..={} (r = {})",
        range.a_r + 1,
        range.b_r + 1,
        range.r
    ));

    report.instance();
    let top = standard_top_pants(model)?;
    report.ensure(top.len() as i64 == range.b_r + 1, || {
        format!(
            "fan decomposition has {} curves, expected {}",
            top.len(),
            range.b_r + 1
        )
    });
    report.ensure(is_top_dimensional(model, &top)?, || {
        "fan decomposition is not top-dimensional".into()
    });

    report.instance();
    let min = minimal_pants(model)?;
    report.ensure(min.len() as i64 == range.a_r + 1, || {
        format!(
            "minimal decomposition has {} curves, expected {}",
            min.len(),
            range.a_r + 1
        )
    });

    let universe = build_x(spec)?;
    if universe.vertex_count() <= 20 {
        report.instance();
        let all = enumerate_pants(model, &universe)?;
        let sizes: BTreeSet<usize> = all.iter().map(|p| p.len()).collect();
        report.note(format!(
            "decomposition sizes realized inside the complex: {:?} over {} decompositions",
            sizes,
            all.len()
        ));
        if let Some(&max) = sizes.iter().max() {
            report.ensure(max as i64 == range.b_r + 1, || {
                format!("largest decomposition in the complex has {max} curves")
            });
        }
        report.ensure(
            sizes
                .iter()
                .all(|&s| (s as i64) >= range.a_r + 1 && (s as i64) <= range.b_r + 1),
            || format!("a decomposition size outside the predicted range occurred: {sizes:?}"),
        );
        let missing: Vec<i64> = (range.a_r + 1..=range.b_r + 1)
            .filter(|&s| !sizes.contains(&(s as usize)))
            .collect();
        if !missing.is_empty() {
            report.note(format!(
                "sizes {missing:?} are not realized by curves of the complex; the minimal construction witnesses the lower endpoint with curves outside it"
            ));
        }
    } else {
        report.note(format!(
            "complex has {} vertices; the full decomposition sweep is skipped",
            universe.vertex_count()
        ));
    }
    Ok(report)
}

/// Check that every constructed maximal decomposition has `2g + n - 3`
/// curves, exactly `g` of them one-sided, and cuts into `g + n - 2` pants.
pub fn check_toppants(model: &ModelPolygon) -> Result<LemmaReport> {
    let spec = model.spec;
    sizes_gate(spec)?;
    let mut report = LemmaReport::new("toppants");
    let slots = 2 * spec.genus as usize + spec.holes as usize - 3;
    for p in constructed_top_family(model)? {
        report.instance();
        report.ensure(p.len() == slots, || {
            format!("{} has {} curves, expected {slots}", names(&p.curves), p.len())
        });
        report.ensure(is_top_dimensional(model, &p)?, || {
            format!("{} is not top-dimensional", names(&p.curves))
        });
        report.ensure(
            p.cut_report.components.len() == spec.genus as usize + spec.holes as usize - 2,
            || {
                format!(
                    "{} cuts into {} pieces",
                    names(&p.curves),
                    p.cut_report.components.len()
                )
            },
        );
    }
    if dimension_range(spec)?.a_r < dimension_range(spec)?.b_r {
        report.instance();
        let min = minimal_pants(model)?;
        report.ensure(!is_top_dimensional(model, &min)?, || {
            "sub-maximal decomposition reported as top-dimensional".into()
        });
    }
    Ok(report)
}

/// Check that no member of a constructed maximal decomposition has one of
/// the four impossible types: two-sided nonseparating (either complement),
/// one-sided with orientable complement, or mixed separating.
pub fn check_curvetype(model: &ModelPolygon) -> Result<LemmaReport> {
    let spec = model.spec;
    require(
        spec.genus >= 1,
        format!(
            "curve type restrictions concern non-orientable surfaces, not N_{{0,{}}}",
            spec.holes
        ),
    )?;
    sizes_gate(spec)?;
    let mut report = LemmaReport::new("curvetype");
    for p in constructed_top_family(model)? {
        for c in &p.curves {
            report.instance();
            let t = classify_type(model, &c.realize(model)?)?;
            let excluded = matches!(
                t,
                TopType::Trivial
                    | TopType::TwoSidedNonsepOrientable
                    | TopType::TwoSidedNonsepNonorientable
                    | TopType::OneSidedOrientableComplement
                    | TopType::SeparatingMixed { .. }
            );
            report.ensure(!excluded, || {
                format!(
                    "curve {} in {} has impossible type {t}",
                    c.name(),
                    names(&p.curves)
                )
            });
        }
    }
    Ok(report)
}

fn linear_family_gate(spec: SurfaceSpec) -> Result<()> {
    require(
        spec.genus == 1 && spec.holes >= 4,
        format!(
            "the linear family lives on genus one with at least four holes, not N_{{{},{}}}",
            spec.genus, spec.holes
        ),
    )
}

/// Check the explicit linear decomposition attached to each chord: it cuts
/// into pants, is linear, contains the core curve and the chord, and has
/// exactly `n - 1` curves.
pub fn check_cccc(model: &ModelPolygon) -> Result<LemmaReport> {
    let spec = model.spec;
    linear_family_gate(spec)?;
    let n = spec.holes;
    let mut report = LemmaReport::new("cccc");
    for i in 1..=n + 1 {
        for j in i + 2..=n + 1 {
            if Curve::beta(i, j).validate(spec).is_err() {
                continue;
            }
            report.instance();
            let p = build_linear_p(model, i, j)?;
            report.ensure(p.len() == n as usize - 1, || {
                format!("P_{i}^{j} has {} curves, expected {}", p.len(), n - 1)
            });
            report.ensure(p.contains(&Curve::alpha(1)), || {
                format!("P_{i}^{j} does not contain the core curve")
            });
            report.ensure(p.contains(&Curve::beta(i, j)), || {
                format!("P_{i}^{j} does not contain its own chord")
            });
            report.ensure(is_top_dimensional(model, &p)?, || {
                format!("P_{i}^{j} is not top-dimensional")
            });
        }
    }
    Ok(report)
}

fn for_each_linear_p(
    model: &ModelPolygon,
    mut body: impl FnMut(&PantsDecomposition, &AdjacencyGraph) -> Result<()>,
) -> Result<()> {
    let spec = model.spec;
    let total = spec.genus + spec.holes;
    for i in 1..=total {
        for j in i + 2..=total {
            if Curve::beta(i, j).validate(spec).is_err() {
                continue;
            }
            let p = build_linear_p(model, i, j)?;
            let graph = adjacency_graph(&p);
            body(&p, &graph)?;
        }
    }
    Ok(())
}

/// Check that in every linear decomposition a curve has valency two exactly
/// when it bounds a disc with at least three holes.
pub fn check_valency2(model: &ModelPolygon) -> Result<LemmaReport> {
    linear_family_gate(model.spec)?;
    let mut report = LemmaReport::new("valency2");
    for_each_linear_p(model, |p, graph| {
        for (idx, c) in p.curves.iter().enumerate() {
            report.instance();
            let t = classify_type(model, &c.realize(model)?)?;
            let wide_disc = matches!(t, TopType::Separating { p: 0, q } if q >= 3);
            report.ensure((graph.valency(idx) == 2) == wide_disc, || {
                format!(
                    "{} in {} has valency {} but type {t}",
                    c.name(),
                    names(&p.curves),
                    graph.valency(idx)
                )
            });
        }
        Ok(())
    })?;
    Ok(report)
}

/// Check that every linear decomposition has exactly two valency-one ends:
/// the one-sided core and a curve bounding a disc with two holes.
pub fn check_valency1(model: &ModelPolygon) -> Result<LemmaReport> {
    linear_family_gate(model.spec)?;
    let spec = model.spec;
    let mut report = LemmaReport::new("valency1");
    for_each_linear_p(model, |p, graph| {
        report.instance();
        let ends: Vec<usize> = (0..p.curves.len())
            .filter(|&u| graph.valency(u) == 1)
            .collect();
        report.ensure(ends.len() == 2, || {
            format!("{} has {} valency-one curves", names(&p.curves), ends.len())
        });
        let mut one_sided = 0;
        let mut two_holed = 0;
        for &u in &ends {
            let t = classify_type(model, &p.curves[u].realize(model)?)?;
            if t.is_one_sided() {
                one_sided += 1;
            }
            if t.is_separating_of_type(spec, 0, 2) {
                two_holed += 1;
            }
        }
        report.ensure(one_sided == 1 && two_holed == 1, || {
            format!(
                "{} has ends of the wrong types ({} one-sided, {} two-holed)",
                names(&p.curves),
                one_sided,
                two_holed
            )
        });
        Ok(())
    })?;
    Ok(report)
}

/// Check the typing of a linear decomposition along its path: starting from
/// the two-holed end, the curve at (1-based) position `p` bounds a disc with
/// `p + 1` holes, and the far end is the one-sided core.
pub fn check_lingraph(model: &ModelPolygon) -> Result<LemmaReport> {
    linear_family_gate(model.spec)?;
    let spec = model.spec;
    let n = spec.holes;
    let mut report = LemmaReport::new("lingraph");
    for_each_linear_p(model, |p, graph| {
        let mut start = None;
        for (idx, c) in p.curves.iter().enumerate() {
            if graph.valency(idx) == 1
                && classify_type(model, &c.realize(model)?)?.is_separating_of_type(spec, 0, 2)
            {
                start = Some(c.clone());
            }
        }
        let start = start.ok_or_else(|| {
            Error::VerificationFailed(format!("{} has no two-holed end", names(&p.curves)))
        })?;
        for pos in 1..=n - 1 {
            report.instance();
            let c = linear_successor(graph, &start, pos as usize - 1)?;
            let t = classify_type(model, &c.realize(model)?)?;
            let ok = if pos <= n - 2 {
                t.is_separating_of_type(spec, 0, pos + 1)
            } else {
                t.is_one_sided()
            };
            report.ensure(ok, || {
                format!(
                    "position {pos} of {} is {} of type {t}",
                    names(&p.curves),
                    c.name()
                )
            });
        }
        Ok(())
    })?;
    Ok(report)
}

/// Exhaustive check on a small genus-one complex: every pants decomposition
/// inside it whose adjacency graph is triangle-free is linear.
pub fn check_notriangle(model: &ModelPolygon) -> Result<LemmaReport> {
    let spec = model.spec;
    require(
        spec.genus == 1 && (4..=5).contains(&spec.holes),
        format!(
            "the exhaustive triangle sweep is sized for genus one with 4 or 5 holes, not N_{{{},{}}}",
            spec.genus, spec.holes
        ),
    )?;
    let mut report = LemmaReport::new("notriangle");
    let universe = build_x(spec)?;
    let all = enumerate_pants(model, &universe)?;
    let mut linear_count = 0u64;
    for p in &all {
        report.instance();
        let graph = adjacency_graph(p);
        if !graph.has_triangle() {
            report.ensure(is_linear(&graph), || {
                format!(
                    "{} is triangle-free but not linear",
                    names(&p.curves)
                )
            });
        }
        if is_linear(&graph) {
            linear_count += 1;
        }
    }
    report.note(format!(
        "{} decompositions inside the complex, {} of them linear",
        all.len(),
        linear_count
    ));
    Ok(report)
}

/// Check every row of the replacement table over every nested chord chain:
/// each listed substitute crosses the curve it replaces, misses the rest of
/// the decomposition, and all single and double substitutions cut into
/// pants.  Nonadjacent pairs additionally get disjoint substitutes.
pub fn check_delta_table(model: &ModelPolygon) -> Result<LemmaReport> {
    let spec = model.spec;
    require(
        spec.genus == 1 && (4..=6).contains(&spec.holes),
        format!(
            "the replacement table sweep is sized for genus one with 4..6 holes, not N_{{{},{}}}",
            spec.genus, spec.holes
        ),
    )?;
    let n = spec.holes;
    let mut report = LemmaReport::new("delta-table");
    for chain in nested_chord_chains(n) {
        // Path order: gamma_2, ..., gamma_{n-1}, core curve.
        let mut path: Vec<Curve> = chain
            .iter()
            .map(|&(lo, hi)| Curve::beta(lo, hi))
            .collect();
        path.push(Curve::alpha(1));
        let p = verify_pants(model, &path)?;
        let neighbor = |idx: usize, offset: i64| -> Option<&Curve> {
            let pos = idx as i64 + offset;
            if pos < 0 || pos >= path.len() as i64 {
                None
            } else {
                Some(&path[pos as usize])
            }
        };
        let mut deltas = Vec::with_capacity(path.len());
        for idx in 0..path.len() {
            report.instance();
            let gamma = &path[idx];
            let delta = delta_table(spec, gamma, neighbor(idx, -1), neighbor(idx, 1))?;
            report.ensure(!p.contains(&delta), || {
                format!("substitute {} already lies in {}", delta.name(), names(&path))
            });
            report.ensure(
                intersect(model, &delta, gamma)?.value != 0,
                || {
                    format!(
                        "substitute {} is disjoint from the curve {} it replaces",
                        delta.name(),
                        gamma.name()
                    )
                },
            );
            for other in path.iter().filter(|c| *c != gamma) {
                report.ensure(intersect(model, &delta, other)?.value == 0, || {
                    format!(
                        "substitute {} for {} crosses {}",
                        delta.name(),
                        gamma.name(),
                        other.name()
                    )
                });
            }
            let substituted = p.with_replacement(gamma, &delta);
            let sub = verify_pants(model, &substituted)?;
            report.ensure(is_top_dimensional(model, &sub)?, || {
                format!(
                    "substituting {} for {} leaves a non-maximal decomposition",
                    delta.name(),
                    gamma.name()
                )
            });
            deltas.push(delta);
        }
        // Nonadjacent pairs along the path are exactly those more than one
        // step apart; their substitutes must be disjoint and jointly valid.
        for a in 0..path.len() {
            for b in a + 2..path.len() {
                report.instance();
                report.ensure(
                    intersect(model, &deltas[a], &deltas[b])?.value == 0,
                    || {
                        format!(
                            "substitutes {} and {} for the pair ({}, {}) cross",
                            deltas[a].name(),
                            deltas[b].name(),
                            path[a].name(),
                            path[b].name()
                        )
                    },
                );
                let mut joint = p.with_replacement(&path[a], &deltas[a]);
                let slot = joint
                    .iter()
                    .position(|c| c == &path[b])
                    .expect("pair member present");
                joint[slot] = deltas[b].clone();
                report.ensure(verify_pants(model, &joint).is_ok(), || {
                    format!(
                        "double substitution for ({}, {}) does not cut into pants",
                        path[a].name(),
                        path[b].name()
                    )
                });
            }
        }
    }
    Ok(report)
}

/// Check successor typing from a valency-one end of any constructed maximal
/// decomposition: the k-th successor of a one-sided end cuts off genus one
/// with k extra circles, and the k-th successor of a two-holed end bounds a
/// disc with k + 2 holes.
pub fn check_cor_linpath(model: &ModelPolygon) -> Result<LemmaReport> {
    let spec = model.spec;
    require(
        spec.holes >= 1 && spec.genus + spec.holes >= 4,
        format!(
            "successor typing needs a boundary and at least four slots, not N_{{{},{}}}",
            spec.genus, spec.holes
        ),
    )?;
    let mut report = LemmaReport::new("cor-linpath");
    for p in constructed_top_family(model)? {
        let graph = adjacency_graph(&p);
        for (idx, start) in p.curves.iter().enumerate() {
            if graph.valency(idx) != 1 {
                continue;
            }
            let t0 = classify_type(model, &start.realize(model)?)?;
            let one_sided_start = t0.is_one_sided();
            let two_holed_start = t0.is_separating_of_type(spec, 0, 2);
            if !one_sided_start && !two_holed_start {
                continue;
            }
            // Walk while the k-th successor is defined (interior nodes have
            // valency two).
            let mut prev = idx;
            let mut cur = graph.neighbors(idx)[0];
            let mut k = 1u32;
            loop {
                report.instance();
                let t = classify_type(model, &p.curves[cur].realize(model)?)?;
                if t.is_one_sided() {
                    // A one-sided successor carries no (p, q) type; it can
                    // only be the far end of the path.
                    report.ensure(graph.valency(cur) == 1, || {
                        format!(
                            "one-sided successor {} of {} in {} is not a path end",
                            p.curves[cur].name(),
                            start.name(),
                            names(&p.curves)
                        )
                    });
                } else {
                    let ok = if one_sided_start {
                        t.is_separating_of_type(spec, 1, k)
                    } else {
                        t.is_separating_of_type(spec, 0, k + 2)
                    };
                    report.ensure(ok, || {
                        format!(
                            "successor {k} of {} in {} is {} of type {t}",
                            start.name(),
                            names(&p.curves),
                            p.curves[cur].name()
                        )
                    });
                }
                if graph.valency(cur) != 2 {
                    break;
                }
                let next = graph
                    .neighbors(cur)
                    .into_iter()
                    .find(|&v| v != prev)
                    .expect("valency-two node has a second neighbor");
                prev = cur;
                cur = next;
                k += 1;
            }
        }
    }
    Ok(report)
}

/// Closed-surface valency pattern: in every fan on N_{g,0} a curve has
/// valency two exactly when it is one-sided, and every chord has valency
/// four.
pub fn check_nonadjforclo(model: &ModelPolygon) -> Result<LemmaReport> {
    let spec = model.spec;
    require(
        spec.holes == 0 && spec.genus >= 5,
        format!(
            "the closed valency pattern needs a closed surface of genus at least five, not N_{{{},{}}}",
            spec.genus, spec.holes
        ),
    )?;
    let mut report = LemmaReport::new("nonadjforclo");
    for anchor in 1..=spec.genus {
        let p = fan_top_pants(model, anchor)?;
        let graph = adjacency_graph(&p);
        for (idx, c) in p.curves.iter().enumerate() {
            report.instance();
            let one_sided = c.realize(model)?.is_one_sided(model);
            report.ensure((graph.valency(idx) == 2) == one_sided, || {
                format!(
                    "{} in the fan at {anchor} has valency {} (one-sided: {one_sided})",
                    c.name(),
                    graph.valency(idx)
                )
            });
            if !one_sided {
                report.ensure(graph.valency(idx) == 4, || {
                    format!(
                        "two-sided {} in the fan at {anchor} has valency {}",
                        c.name(),
                        graph.valency(idx)
                    )
                });
            }
        }
    }
    Ok(report)
}

/// Bounded-surface valency pattern: in every constructed maximal
/// decomposition with boundary, a valency-one curve is one-sided or bounds a
/// disc with two holes.
pub fn check_nonadjforn2(model: &ModelPolygon) -> Result<LemmaReport> {
    let spec = model.spec;
    require(
        spec.genus >= 1 && spec.holes >= 1 && spec.genus + spec.holes >= 5,
        format!(
            "the bounded valency pattern needs a boundary and g + n >= 5, not N_{{{},{}}}",
            spec.genus, spec.holes
        ),
    )?;
    let mut report = LemmaReport::new("nonadjforn2");
    for p in constructed_top_family(model)? {
        let graph = adjacency_graph(&p);
        for (idx, c) in p.curves.iter().enumerate() {
            if graph.valency(idx) != 1 {
                continue;
            }
            report.instance();
            let t = classify_type(model, &c.realize(model)?)?;
            report.ensure(
                t.is_one_sided() || t.is_separating_of_type(spec, 0, 2),
                || {
                    format!(
                        "valency-one curve {} in {} has type {t}",
                        c.name(),
                        names(&p.curves)
                    )
                },
            );
        }
    }
    Ok(report)
}

/// Structure of the standard fan on a surface with boundary: the last core
/// curve has valency one with the first chord as unique neighbor, the chords
/// towards the boundary holes form the successor chain, and every
/// nonadjacent pair has a replacement witness in the complex.
pub fn check_g3ct(model: &ModelPolygon) -> Result<LemmaReport> {
    let spec = model.spec;
    let g = spec.genus;
    let n = spec.holes;
    require(
        g >= 1 && n >= 1 && g + n >= 4,
        format!("the fan structure checks need g >= 1, n >= 1, g + n >= 4, not N_{{{g},{n}}}"),
    )?;
    let mut report = LemmaReport::new("g3ct");
    let p = standard_top_pants(model)?;
    report.instance();
    report.ensure(is_top_dimensional(model, &p)?, || {
        "the standard fan is not top-dimensional".into()
    });
    let graph = adjacency_graph(&p);
    let last_core = Curve::alpha(g);
    let core_idx = graph
        .node_index(&last_core)
        .ok_or_else(|| Error::Internal("fan misses its last core curve".into()))?;
    report.instance();
    report.ensure(graph.valency(core_idx) == 1, || {
        format!("core curve {} has valency {}", last_core.name(), graph.valency(core_idx))
    });
    let anchor = if g >= 2 { g - 1 } else { g + n };
    // Chords towards the boundary holes that are wide enough to be
    // essential; the k-th of them is the k-th successor of the last core.
    let mut expected_chain = Vec::new();
    for k in 1..=n {
        if let Some(c) = chord_if_valid(spec, anchor as i64, (g + k) as i64) {
            expected_chain.push(c);
        }
    }
    report.instance();
    report.ensure(!expected_chain.is_empty(), || {
        "the fan has no chord towards the boundary holes".into()
    });
    for (k, expected) in expected_chain.iter().enumerate() {
        report.instance();
        match linear_successor(&graph, &last_core, k + 1) {
            Ok(c) => report.ensure(c == *expected, || {
                format!(
                    "successor {} of {} is {}, expected {}",
                    k + 1,
                    last_core.name(),
                    c.name(),
                    expected.name()
                )
            }),
            Err(e) => report.failures.push(format!(
                "successor {} of {} is undefined: {e}",
                k + 1,
                last_core.name()
            )),
        }
    }
    let universe = build_x(spec)?;
    let witnesses = check_nonadjacency_condition(model, &p, &universe)?;
    report.instance();
    report.note(format!(
        "replacement witnesses found for {} nonadjacent pairs",
        witnesses.len()
    ));
    Ok(report)
}

/// Structure around a chord cutting off two crosscaps: the fan through it
/// contains a triangle formed by the chord and the two enclosed cores, the
/// chord is the only two-sided curve adjacent to both, and the fan has full
/// replacement witnesses.
pub fn check_lemma_2_0(model: &ModelPolygon) -> Result<LemmaReport> {
    let spec = model.spec;
    let g = spec.genus;
    let n = spec.holes;
    require(
        g >= 2 && n >= 1 && g + n >= 5,
        format!(
            "the two-crosscap chord checks need g >= 2, n >= 1, g + n >= 5, not N_{{{g},{n}}}"
        ),
    )?;
    let mut report = LemmaReport::new("lemma-2-0");
    let universe = build_x(spec)?;
    for i in 1..=g - 1 {
        let anchor = wrap_index(g + n, i as i64 - 1);
        let beta = chord_if_valid(spec, anchor as i64, (i + 1) as i64)
            .ok_or_else(|| Error::Internal("two-crosscap chord is not essential".into()))?;
        let p = fan_top_pants(model, anchor)?;
        report.instance();
        report.ensure(p.contains(&beta), || {
            format!("fan at {anchor} misses the chord {}", beta.name())
        });
        let t = classify_type(model, &beta.realize(model)?)?;
        report.ensure(t.is_separating_of_type(spec, 2, 0), || {
            format!("chord {} has type {t}, expected to cut off two crosscaps", beta.name())
        });
        let graph = adjacency_graph(&p);
        let bi = graph.node_index(&beta).expect("chord present");
        let ai = graph.node_index(&Curve::alpha(i)).expect("core present");
        let aj = graph.node_index(&Curve::alpha(i + 1)).expect("core present");
        report.instance();
        report.ensure(
            graph.has_arc(bi, ai) && graph.has_arc(bi, aj) && graph.has_arc(ai, aj),
            || {
                format!(
                    "no triangle on ({}, a_{i}, a_{}) in the fan at {anchor}",
                    beta.name(),
                    i + 1
                )
            },
        );
        for (idx, c) in p.curves.iter().enumerate() {
            if idx == bi || c.realize(model)?.is_one_sided(model) {
                continue;
            }
            report.instance();
            report.ensure(!(graph.has_arc(idx, ai) && graph.has_arc(idx, aj)), || {
                format!(
                    "two-sided {} is also adjacent to both enclosed cores",
                    c.name()
                )
            });
        }
        let witnesses = check_nonadjacency_condition(model, &p, &universe)?;
        report.instance();
        report.note(format!(
            "fan at {anchor}: replacement witnesses for {} nonadjacent pairs",
            witnesses.len()
        ));
    }
    Ok(report)
}

/// Closed-surface fan evidence: every fan on N_{g,0} is top-dimensional and
/// has full replacement witnesses inside the complex.
pub fn check_cloct(model: &ModelPolygon) -> Result<LemmaReport> {
    let spec = model.spec;
    require(
        spec.holes == 0 && spec.genus >= 5,
        format!(
            "closed-surface fan evidence needs genus at least five, not N_{{{},{}}}",
            spec.genus, spec.holes
        ),
    )?;
    let mut report = LemmaReport::new("cloct");
    let universe = build_x(spec)?;
    for anchor in 1..=spec.genus {
        let p = fan_top_pants(model, anchor)?;
        report.instance();
        report.ensure(is_top_dimensional(model, &p)?, || {
            format!("fan at {anchor} is not top-dimensional")
        });
        let witnesses = check_nonadjacency_condition(model, &p, &universe)?;
        report.note(format!(
            "fan at {anchor}: replacement witnesses for {} nonadjacent pairs",
            witnesses.len()
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface_model::build_model;

    fn model(g: u32, n: u32) -> ModelPolygon {
        build_model(SurfaceSpec::new(g, n)).unwrap()
    }

    fn beta(i: u32, j: u32) -> Curve {
        Curve::beta(i, j)
    }

    fn alpha(i: u32) -> Curve {
        Curve::alpha(i)
    }

    #[test]
    fn dimension_ranges_follow_the_parity_formulas() {
        let range = |g, n| dimension_range(SurfaceSpec::new(g, n)).unwrap();
        assert_eq!(range(1, 4), DimensionRange { a_r: 2, b_r: 2, r: 0 });
        assert_eq!(range(2, 3), DimensionRange { a_r: 2, b_r: 3, r: 1 });
        assert_eq!(range(3, 4), DimensionRange { a_r: 5, b_r: 6, r: 1 });
        assert_eq!(range(5, 0), DimensionRange { a_r: 4, b_r: 6, r: 2 });
        assert_eq!(range(0, 5), DimensionRange { a_r: 1, b_r: 1, r: 0 });
        assert_eq!(range(4, 1), DimensionRange { a_r: 3, b_r: 5, r: 2 });
        assert!(dimension_range(SurfaceSpec::new(2, 0)).is_err());
    }

    #[test]
    fn small_curve_systems_verify_or_fail_as_expected() {
        let m = model(1, 4);
        let good = verify_pants(&m, &[alpha(1), beta(1, 3), beta(1, 4)]).unwrap();
        assert_eq!(good.len(), 3);
        assert!(is_top_dimensional(&m, &good).unwrap());
        assert!(verify_pants(&m, &[alpha(1)]).is_err());
        assert!(verify_pants(&m, &[alpha(1), alpha(1)]).is_err());
        assert!(verify_pants(&m, &[beta(1, 3), beta(2, 4)]).is_err());

        let m05 = model(0, 5);
        let chain = verify_pants(&m05, &[beta(1, 3), beta(1, 4)]).unwrap();
        assert!(is_top_dimensional(&m05, &chain).unwrap());
    }

    #[test]
    fn standard_fans_are_top_dimensional() {
        for (g, n) in [(1u32, 3u32), (1, 4), (2, 2), (2, 3), (3, 2), (3, 4), (4, 0), (5, 0)] {
            let m = model(g, n);
            let p = standard_top_pants(&m).unwrap();
            assert_eq!(p.len(), (2 * g + n - 3) as usize, "size at ({g}, {n})");
            assert!(is_top_dimensional(&m, &p).unwrap(), "top at ({g}, {n})");
        }
        let p32 = standard_top_pants(&model(3, 2)).unwrap();
        let mut names: Vec<String> = p32.curves.iter().map(|c| c.name()).collect();
        names.sort();
        assert_eq!(names, ["a_1", "a_2", "a_3", "b_2_4", "b_2_5"]);
    }

    #[test]
    fn nested_chain_adjacency_is_a_path_with_an_end_triangle() {
        let m = model(3, 4);
        let curves = vec![
            alpha(1),
            alpha(2),
            alpha(3),
            beta(1, 6),
            beta(1, 5),
            beta(1, 4),
            beta(1, 3),
        ];
        let p = verify_pants(&m, &curves).unwrap();
        assert!(is_top_dimensional(&m, &p).unwrap());
        let graph = adjacency_graph(&p);
        let idx = |c: &Curve| graph.node_index(c).unwrap();
        let expected: BTreeSet<(usize, usize)> = [
            (idx(&alpha(1)), idx(&beta(1, 6))),
            (idx(&beta(1, 6)), idx(&beta(1, 5))),
            (idx(&beta(1, 5)), idx(&beta(1, 4))),
            (idx(&beta(1, 4)), idx(&beta(1, 3))),
            (idx(&beta(1, 3)), idx(&alpha(2))),
            (idx(&beta(1, 3)), idx(&alpha(3))),
            (idx(&alpha(2)), idx(&alpha(3))),
        ]
        .into_iter()
        .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
        .collect();
        assert_eq!(graph.arcs, expected);
        assert!(!is_linear(&graph));
        assert!(graph.has_triangle());

        assert_eq!(linear_successor(&graph, &alpha(1), 0).unwrap(), alpha(1));
        assert_eq!(linear_successor(&graph, &alpha(1), 1).unwrap(), beta(1, 6));
        assert_eq!(linear_successor(&graph, &alpha(1), 4).unwrap(), beta(1, 3));
        assert!(linear_successor(&graph, &alpha(1), 5).is_err());
        assert!(linear_successor(&graph, &alpha(2), 1).is_err());
    }

    #[test]
    fn linear_family_matches_the_displayed_formulas() {
        let m = model(1, 4);
        let p13 = build_linear_p(&m, 1, 3).unwrap();
        let mut names13: Vec<String> = p13.curves.iter().map(|c| c.name()).collect();
        names13.sort();
        assert_eq!(names13, ["a_1", "b_1_3", "b_1_4"]);

        let m15 = model(1, 5);
        let p24 = build_linear_p(&m15, 2, 4).unwrap();
        let mut names24: Vec<String> = p24.curves.iter().map(|c| c.name()).collect();
        names24.sort();
        assert_eq!(names24, ["a_1", "b_2_4", "b_2_5", "b_2_6"]);

        // The fan anchored at the last hole is the widest member of the family.
        let fan = standard_top_pants(&m15).unwrap();
        let wide = build_linear_p(&m15, 4, 6).unwrap();
        let fan_set: BTreeSet<Curve> = fan.curves.iter().cloned().collect();
        let wide_set: BTreeSet<Curve> = wide.curves.iter().cloned().collect();
        assert_eq!(fan_set, wide_set);

        assert!(check_cccc(&m).unwrap().passed());
        assert!(check_cccc(&m15).unwrap().passed());
    }

    #[test]
    fn linear_family_valency_and_typing_checks_pass() {
        for n in [4, 5] {
            let m = model(1, n);
            assert!(check_valency2(&m).unwrap().passed(), "valency2 at n={n}");
            assert!(check_valency1(&m).unwrap().passed(), "valency1 at n={n}");
            assert!(check_lingraph(&m).unwrap().passed(), "lingraph at n={n}");
        }
    }

    #[test]
    fn replacement_table_matches_the_listed_rows() {
        let spec = SurfaceSpec::new(1, 4);
        let row = |g: &Curve, pred: Option<&Curve>, succ: Option<&Curve>| {
            delta_table(spec, g, pred, succ).unwrap()
        };
        // Core curve rows.
        assert_eq!(row(&alpha(1), Some(&beta(1, 4)), None), Curve::alpha_arc(1, 4));
        assert_eq!(row(&alpha(1), Some(&beta(2, 5)), None), Curve::alpha_arc(1, 2));
        // Widest chord rows (k = n - 1 = 3).
        assert_eq!(row(&beta(1, 4), Some(&beta(2, 4)), Some(&alpha(1))), beta(2, 5));
        assert_eq!(row(&beta(1, 4), Some(&beta(1, 3)), Some(&alpha(1))), beta(3, 5));
        assert_eq!(row(&beta(2, 5), Some(&beta(2, 4)), Some(&alpha(1))), beta(1, 4));
        assert_eq!(row(&beta(2, 5), Some(&beta(3, 5)), Some(&alpha(1))), beta(1, 3));
        // Narrow chord rows (k = 2) keyed on the successor.
        assert_eq!(row(&beta(2, 4), None, Some(&beta(2, 5))), beta(3, 5));
        assert_eq!(row(&beta(2, 4), None, Some(&beta(1, 4))), beta(1, 3));
        // Interior rows on a wider surface.
        let spec6 = SurfaceSpec::new(1, 6);
        let row6 = |g: &Curve, pred: &Curve, succ: &Curve| {
            delta_table(spec6, g, Some(pred), Some(succ)).unwrap()
        };
        assert_eq!(row6(&beta(2, 5), &beta(2, 4), &beta(2, 6)), beta(4, 6));
        assert_eq!(row6(&beta(2, 5), &beta(2, 4), &beta(1, 5)), beta(1, 4));
        assert_eq!(row6(&beta(2, 5), &beta(3, 5), &beta(2, 6)), beta(3, 6));
        assert_eq!(row6(&beta(2, 5), &beta(3, 5), &beta(1, 5)), beta(1, 3));
        // No row: unmatched neighbors.
        assert!(delta_table(spec, &beta(2, 4), None, None).is_err());
    }

    #[test]
    fn replacement_sweep_passes_on_small_genus_one_surfaces() {
        for n in [4, 5] {
            let m = model(1, n);
            let report = check_delta_table(&m).unwrap();
            assert!(report.passed(), "failures at n={n}: {:?}", report.failures);
            assert!(report.instances_checked > 0);
        }
    }

    #[test]
    fn nonadjacency_witnesses_exist_on_small_decompositions() {
        let m = model(1, 3);
        let universe = build_x(m.spec).unwrap();
        let p = verify_pants(&m, &[alpha(1), beta(1, 3)]).unwrap();
        // The two curves share a pair of pants, so there is nothing to witness.
        assert!(check_nonadjacency_condition(&m, &p, &universe)
            .unwrap()
            .is_empty());

        let m32 = model(3, 2);
        let universe32 = build_x(m32.spec).unwrap();
        let p32 = standard_top_pants(&m32).unwrap();
        let witnesses = check_nonadjacency_condition(&m32, &p32, &universe32).unwrap();
        assert!(!witnesses.is_empty());
        for w in &witnesses {
            assert_ne!(w.delta_alpha, w.delta_beta);
        }
    }

    #[test]
    fn minimal_decompositions_realize_the_low_endpoint() {
        for (g, n) in [(2u32, 2u32), (2, 3), (3, 2), (3, 4), (4, 0), (4, 1), (5, 0), (5, 1)] {
            let m = model(g, n);
            let p = minimal_pants(&m).unwrap();
            let range = dimension_range(m.spec).unwrap();
            assert_eq!(p.len() as i64, range.a_r + 1, "minimal size at ({g}, {n})");
        }
    }

    #[test]
    fn exhaustive_sweep_confirms_triangle_free_implies_linear() {
        let m = model(1, 4);
        let report = check_notriangle(&m).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
        assert!(report.instances_checked >= 4);
        assert!(check_notriangle(&model(2, 3)).is_err());
    }

    #[test]
    fn valency_patterns_hold_on_fans() {
        assert!(check_nonadjforclo(&model(5, 0)).unwrap().passed());
        assert!(check_nonadjforclo(&model(4, 0)).is_err());
        assert!(check_nonadjforn2(&model(3, 2)).unwrap().passed());
        assert!(check_nonadjforn2(&model(2, 3)).unwrap().passed());
        assert!(check_cor_linpath(&model(3, 4)).unwrap().passed());
        assert!(check_cor_linpath(&model(1, 4)).unwrap().passed());
        assert!(check_cor_linpath(&model(3, 2)).unwrap().passed());
    }

    #[test]
    fn fan_structure_and_two_crosscap_chord_checks_pass() {
        let report = check_g3ct(&model(3, 2)).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
        let report23 = check_g3ct(&model(2, 3)).unwrap();
        assert!(report23.passed(), "failures: {:?}", report23.failures);

        let lemma = check_lemma_2_0(&model(3, 2)).unwrap();
        assert!(lemma.passed(), "failures: {:?}", lemma.failures);
        let lemma23 = check_lemma_2_0(&model(2, 3)).unwrap();
        assert!(lemma23.passed(), "failures: {:?}", lemma23.failures);
    }

    #[test]
    fn size_checks_pass_on_reference_surfaces() {
        for (g, n) in [(1u32, 4u32), (2, 3), (3, 2), (0, 5)] {
            let m = model(g, n);
            let number = check_numberofcurve(&m).unwrap();
            assert!(number.passed(), "numberofcurve at ({g}, {n}): {:?}", number.failures);
            let top = check_toppants(&m).unwrap();
            assert!(top.passed(), "toppants at ({g}, {n}): {:?}", top.failures);
        }
        let types = check_curvetype(&model(3, 2)).unwrap();
        assert!(types.passed(), "{:?}", types.failures);
        assert!(check_curvetype(&model(0, 5)).is_err());
    }
}
