//! Self-maps of the finite complex: simplicial and locally injective map
//! checking, the symmetry group of the polygon model, exhaustive enumeration
//! of locally injective self-maps on small vertex sets, the explicit
//! non-induced map that exists exactly when crosscaps + holes = 4, and the
//! star configuration that pins a one-sided vertex down by its complement.
//!
//! Purpose: decide, for concrete small surfaces, whether every locally
//! injective simplicial self-map of the canonical complex comes from a
//! homeomorphism of the model.  The module supplies the map predicates
//! (`check_simplicial`, `check_locally_injective`, `check_dimension_preserved`,
//! `check_type_preservation`), the reference group to compare against
//! (`model_symmetries`), the exhaustive search (`enumerate_li_self_maps`), and
//! the two opposite certificates: matching a map to a symmetry
//! (`is_induced_by_symmetry`) or exhibiting a changed intersection number
//! (`non_induced_certificate`).
//!
//! Why this design: a map is stored as a plain vertex assignment
//! (`SimplicialMap`) and every property is re-checked from geometry — images
//! are intersected and cut on the model, never trusted from the construction
//! that produced them.  Symmetry candidates are generated syntactically (face
//! swap plus boundary-cycle relabelings) but admitted only after their action
//! is verified on every vertex and edge of the complex.  The enumeration is a
//! plain backtracking search over vertex images with two sound pruning rules
//! (degrees cannot drop; vertices sharing a closed star must stay distinct),
//! so it finds exactly the locally injective simplicial self-maps and refuses
//! vertex sets large enough to make exhaustiveness doubtful.
//!
//! Notes: type mismatches are returned as data, not errors — on the rigid
//! surfaces the caller asserts the list is empty, on the non-rigid ones it
//! inspects the list.  The absence of a `non_induced_certificate` is
//! inconclusive; only a found certificate proves anything.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::{build_x, SimplicialComplex};
use crate::curves::{
    classify_type, cut_along, rat, Curve, CutComponent, Realized, TopType, Transit, Word,
};
use crate::intersection::{dehn_twist, intersect};
use crate::pants::{
    adjacency_graph, check_nonadjacency_condition, enumerate_pants, is_linear,
    is_top_dimensional, linear_successor, names, verify_pants, LemmaReport,
};
use crate::position::is_isotopic;
use crate::surface_model::{build_model, EdgeKind, ModelPolygon, SurfaceSpec};
use crate::{Error, Result};

/// Largest vertex set the exhaustive self-map search accepts by default.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 16;

/// A vertex assignment out of a finite flag complex: vertex `v` of `domain`
/// is sent to `assignment[v]`, a curve on the same surface (not necessarily a
/// vertex of the domain).
#[derive(Debug, Clone)]
pub struct SimplicialMap {
    pub domain: SimplicialComplex,
    pub assignment: Vec<Curve>,
}

impl SimplicialMap {
    /// The identity assignment on a complex.
    pub fn identity(domain: &SimplicialComplex) -> Self {
        SimplicialMap {
            domain: domain.clone(),
            assignment: domain.vertices.clone(),
        }
    }

    pub fn image_of(&self, v: usize) -> &Curve {
        &self.assignment[v]
    }

    /// The map as a vertex-index table, when every image is itself a named
    /// vertex of the domain; `None` as soon as one image is not.
    pub fn as_vertex_table(&self) -> Option<Vec<usize>> {
        self.assignment
            .iter()
            .map(|c| self.domain.vertex_index(c))
            .collect()
    }
}

/// How a symmetry of the polygon model arises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SymmetryKind {
    /// Exchanging the two faces of the polygon.  Fixes every named vertex,
    /// so it acts as the identity permutation.
    FaceSwap,
    /// An orientation-reversing relabeling of the boundary cycle.
    EdgeReflection,
    /// An orientation-preserving relabeling (a rotation of the boundary
    /// cycle), i.e. a composite of two reflections.
    Composite,
}

/// A homeomorphism of the model surface recorded by its action on the
/// vertices of the canonical complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelSymmetry {
    pub kind: SymmetryKind,
    /// `vertex_permutation[v]` is the index of the image of vertex `v`.
    pub vertex_permutation: Vec<usize>,
}

/// A partition of the vertex set into the part a self-map fixes and the part
/// it moves by a fixed twist product.
#[derive(Debug, Clone, Serialize)]
pub struct ABSplit {
    pub a_set: Vec<Curve>,
    pub b_set: Vec<Curve>,
}

/// A pair of vertices whose geometric intersection number changes under a
/// map — proof that no homeomorphism induces the map.
#[derive(Debug, Clone, Serialize)]
pub struct NonInducedCertificate {
    pub gamma: Curve,
    pub delta: Curve,
    pub i_before: u64,
    pub i_after: u64,
}

/// A vertex whose image has a different topological type.
#[derive(Debug, Clone, Serialize)]
pub struct TypeMismatch {
    pub vertex: Curve,
    pub vertex_type: TopType,
    pub image_type: TopType,
}

/// The three curve families whose union cuts the surface into pants plus one
/// genus-one piece carrying a distinguished one-sided vertex and its
/// companion.
#[derive(Debug, Clone)]
pub struct StarConfiguration {
    /// Every one-sided core except the distinguished one.
    pub p1: Vec<Curve>,
    /// Chords hanging off the edge cyclically preceding the crosscap.
    pub p2: Vec<Curve>,
    /// Chords hanging off the crosscap's own edge.
    pub p3: Vec<Curve>,
    /// The distinguished one-sided core.
    pub core: Curve,
    /// The one-sided companion through the same crosscap and the chosen edge.
    pub arc: Curve,
}

impl StarConfiguration {
    /// The cut set `p1 + p2 + p3` in construction order.
    pub fn cut_set(&self) -> Vec<Curve> {
        self.p1
            .iter()
            .chain(&self.p2)
            .chain(&self.p3)
            .cloned()
            .collect()
    }
}

/// Equality of curves on the model up to isotopy, with a fast path for
/// identical descriptions.
fn same_curve(model: &ModelPolygon, a: &Curve, b: &Curve) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    is_isotopic(model, &a.realize(model)?, &b.realize(model)?)
}

/// Whether every edge of the domain lands on a disjoint pair.  Equal images
/// are allowed: a simplicial map may collapse an edge to a vertex.
pub fn check_simplicial(model: &ModelPolygon, map: &SimplicialMap) -> Result<bool> {
    for &(u, v) in &map.domain.edges {
        let a = &map.assignment[u];
        let b = &map.assignment[v];
        if same_curve(model, a, b)? {
            continue;
        }
        if intersect(model, a, b)?.value != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the map is injective on every closed star: two vertices that are
/// adjacent or share a neighbour must keep distinct images.
pub fn check_locally_injective(model: &ModelPolygon, map: &SimplicialMap) -> Result<bool> {
    let n = map.domain.vertex_count();
    let mut pairs = BTreeSet::new();
    for c in 0..n {
        let mut star = map.domain.neighbors(c);
        star.push(c);
        star.sort_unstable();
        for (k, &u) in star.iter().enumerate() {
            for &v in &star[k + 1..] {
                pairs.insert((u, v));
            }
        }
    }
    for (u, v) in pairs {
        if same_curve(model, &map.assignment[u], &map.assignment[v])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every maximal simplex lands on a simplex of the same dimension
/// (distinct, pairwise disjoint images), and every maximal simplex that is a
/// pants decomposition lands on a pants decomposition.
pub fn check_dimension_preserved(model: &ModelPolygon, map: &SimplicialMap) -> Result<bool> {
    for clique in map.domain.maximal_cliques() {
        let source: Vec<Curve> = clique
            .iter()
            .map(|&v| map.domain.vertices[v].clone())
            .collect();
        let images: Vec<Curve> = clique.iter().map(|&v| map.assignment[v].clone()).collect();
        for a in 0..images.len() {
            for b in a + 1..images.len() {
                if same_curve(model, &images[a], &images[b])? {
                    return Ok(false);
                }
                if intersect(model, &images[a], &images[b])?.value != 0 {
                    return Ok(false);
                }
            }
        }
        if verify_pants(model, &source).is_ok() && verify_pants(model, &images).is_err() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compare the topological type of every vertex with the type of its image.
/// Mismatches are data for the caller, not failures.
pub fn check_type_preservation(
    model: &ModelPolygon,
    map: &SimplicialMap,
) -> Result<Vec<TypeMismatch>> {
    let mut out = Vec::new();
    for (v, image) in map.assignment.iter().enumerate() {
        let vertex = &map.domain.vertices[v];
        let before = classify_type(model, &vertex.realize(model)?)?;
        let after = classify_type(model, &image.realize(model)?)?;
        if before != after {
            out.push(TypeMismatch {
                vertex: vertex.clone(),
                vertex_type: before,
                image_type: after,
            });
        }
    }
    Ok(out)
}

/// The mirror image of a realized curve under the face swap.  Boundary
/// points of the polygon are fixed, so transits keep their positions; the
/// crosscap gluing is parameter-reversing, so s-edge parameters flip to
/// `1 - u`; arcs move to the other face, so the starting face flips.
fn face_swapped(model: &ModelPolygon, realized: &Realized) -> Result<Realized> {
    match realized {
        Realized::Locus { .. } => Ok(realized.clone()),
        Realized::Word(w) => {
            let transits = w
                .transits
                .iter()
                .map(|t| {
                    let param = if model.label_at(t.pos).kind == EdgeKind::S {
                        rat(1, 1) - t.param.clone()
                    } else {
                        t.param.clone()
                    };
                    Transit::new(t.pos, param)
                })
                .collect();
            Ok(Realized::Word(Word::new(transits, w.start_face.flip())?))
        }
    }
}

/// The image of a named curve under a relabeling of the boundary positions.
fn relabeled(model: &ModelPolygon, curve: &Curve, pos_map: &[usize]) -> Result<Curve> {
    let index_at = |pos: usize| model.label_at(pos_map[pos]).index;
    match curve {
        Curve::Alpha { i } => Ok(Curve::alpha(index_at(model.s_position(*i)?))),
        Curve::AlphaArc { i, j } => Ok(Curve::alpha_arc(
            index_at(model.s_position(*i)?),
            index_at(model.e_position(*j)?),
        )),
        Curve::Beta { i, j } => {
            let a = index_at(model.e_position(*i)?);
            let b = index_at(model.e_position(*j)?);
            Ok(Curve::beta(a.min(b), a.max(b)))
        }
        Curve::General { .. } => Err(Error::Unsupported(
            "relabeling acts on named curves only".into(),
        )),
    }
}

/// Push a position relabeling through every vertex of the complex.  `None`
/// when some image is not itself a vertex or the map fails to be injective.
fn induced_vertex_permutation(
    model: &ModelPolygon,
    universe: &SimplicialComplex,
    pos_map: &[usize],
) -> Result<Option<Vec<usize>>> {
    let mut perm = Vec::with_capacity(universe.vertex_count());
    for vertex in &universe.vertices {
        let image = match relabeled(model, vertex, pos_map) {
            Ok(c) => c,
            Err(_) => return Ok(None),
        };
        match universe.vertex_index(&image) {
            Some(ix) => perm.push(ix),
            None => return Ok(None),
        }
    }
    let distinct: BTreeSet<usize> = perm.iter().copied().collect();
    if distinct.len() != perm.len() {
        return Ok(None);
    }
    Ok(Some(perm))
}

/// Whether a vertex permutation maps every edge to an edge.  For a bijection
/// on a finite edge set this is equivalent to being an automorphism.
fn permutation_preserves_edges(universe: &SimplicialComplex, perm: &[usize]) -> bool {
    universe.edges.iter().all(|&(u, v)| {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        universe.edges.contains(&(a, b))
    })
}

/// All symmetries of the polygon model acting on the canonical complex: the
/// face swap (verified to fix every vertex by mirroring its word) plus every
/// relabeling of the boundary cycle that keeps crosscap edges on crosscap
/// edges and induces a vertex permutation preserving all edges.  Each
/// candidate is verified, never assumed; distinct vertex actions are listed
/// once.
pub fn model_symmetries(spec: SurfaceSpec) -> Result<Vec<ModelSymmetry>> {
    let model = build_model(spec)?;
    let universe = build_x(spec)?;
    let nv = universe.vertex_count();

    for vertex in &universe.vertices {
        let realized = vertex.realize(&model)?;
        let mirrored = face_swapped(&model, &realized)?;
        if !is_isotopic(&model, &realized, &mirrored)? {
            return Err(Error::Internal(format!(
                "the face swap moved {}",
                vertex.name()
            )));
        }
    }
    let mut out = vec![ModelSymmetry {
        kind: SymmetryKind::FaceSwap,
        vertex_permutation: (0..nv).collect(),
    }];

    let l = model.edge_count();
    for reflect in [false, true] {
        for c in 0..l {
            if !reflect && c == 0 {
                continue; // identity relabeling: already listed via the face swap
            }
            let pos_map: Vec<usize> = (0..l)
                .map(|p| if reflect { (c + l - p) % l } else { (p + c) % l })
                .collect();
            if (0..l).any(|p| model.label_at(p).kind != model.label_at(pos_map[p]).kind) {
                continue;
            }
            let Some(perm) = induced_vertex_permutation(&model, &universe, &pos_map)? else {
                continue;
            };
            if !permutation_preserves_edges(&universe, &perm) {
                continue;
            }
            if out.iter().any(|s| s.vertex_permutation == perm) {
                continue;
            }
            let kind = if reflect {
                SymmetryKind::EdgeReflection
            } else {
                SymmetryKind::Composite
            };
            out.push(ModelSymmetry {
                kind,
                vertex_permutation: perm,
            });
        }
    }
    Ok(out)
}

/// Exhaustively enumerate the locally injective simplicial self-maps of a
/// complex (vertices to vertices).  Refuses vertex sets larger than the
/// budget — 16 by default — since the search space is exponential.  The
/// result is sorted by assignment table, so the order is deterministic.
pub fn enumerate_li_self_maps(
    complex: &SimplicialComplex,
    budget: Option<usize>,
) -> Result<Vec<SimplicialMap>> {
    let limit = budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET);
    let n = complex.vertex_count();
    if n > limit {
        return Err(Error::BudgetExceeded(format!(
            "{} vertices exceed the self-map enumeration budget of {}",
            n, limit
        )));
    }
    // Pairs that must keep distinct images: adjacent vertices (local
    // injectivity forbids collapsing an edge) and vertices sharing a
    // neighbour (they lie in a common closed star).
    let mut conflicts: Vec<Vec<usize>> = vec![Vec::new(); n];
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let close = complex.has_edge(u, v)
                || (0..n).any(|w| w != u && w != v && complex.has_edge(u, w) && complex.has_edge(v, w));
            if close {
                conflicts[u].push(v);
            }
        }
    }
    let degrees: Vec<usize> = (0..n).map(|v| complex.degree(v)).collect();
    // Assign high-degree vertices first: their candidate lists are shortest.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(degrees[v]));

    let mut assignment = vec![usize::MAX; n];
    let mut found: Vec<Vec<usize>> = Vec::new();
    search(complex, &order, &conflicts, &degrees, 0, &mut assignment, &mut found);
    found.sort();

    Ok(found
        .into_iter()
        .map(|table| SimplicialMap {
            domain: complex.clone(),
            assignment: table
                .into_iter()
                .map(|ix| complex.vertices[ix].clone())
                .collect(),
        })
        .collect())
}

fn search(
    complex: &SimplicialComplex,
    order: &[usize],
    conflicts: &[Vec<usize>],
    degrees: &[usize],
    depth: usize,
    assignment: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    if depth == order.len() {
        found.push(assignment.clone());
        return;
    }
    let v = order[depth];
    'candidate: for w in 0..complex.vertex_count() {
        // Neighbours of v map to distinct neighbours of w, so the degree
        // cannot drop.
        if degrees[w] < degrees[v] {
            continue;
        }
        for &u in &conflicts[v] {
            let fu = assignment[u];
            if fu == usize::MAX {
                continue;
            }
            if fu == w {
                continue 'candidate;
            }
            if complex.has_edge(v, u) && !complex.has_edge(w, fu) {
                continue 'candidate;
            }
        }
        assignment[v] = w;
        search(complex, order, conflicts, degrees, depth + 1, assignment, found);
        assignment[v] = usize::MAX;
    }
}

/// Match a self-map against a symmetry list by vertex table.  `None` when
/// some image is not a named vertex or no listed symmetry acts identically.
pub fn is_induced_by_symmetry(
    map: &SimplicialMap,
    symmetries: &[ModelSymmetry],
) -> Option<ModelSymmetry> {
    let table = map.as_vertex_table()?;
    symmetries
        .iter()
        .find(|s| s.vertex_permutation == table)
        .cloned()
}

/// The interval-exchange of curve names used by the explicit non-induced
/// map: the vertices the twist product moves, per crosscap count.
fn counterexample_split(g: u32) -> Option<(Vec<Curve>, Vec<Curve>)> {
    let a = |i| Curve::alpha(i);
    let arc = |i, j| Curve::alpha_arc(i, j);
    let b = |i, j| Curve::beta(i, j);
    match g {
        1 => Some((
            vec![a(1), arc(1, 2), b(2, 4)],
            vec![arc(1, 3), b(1, 3)],
        )),
        2 => Some((
            vec![a(1), a(2), arc(1, 2), arc(2, 4), b(2, 4)],
            vec![arc(1, 3), arc(2, 3), b(1, 3)],
        )),
        3 => Some((
            vec![a(1), a(2), a(3), arc(1, 2), arc(2, 4), arc(3, 4), b(2, 4)],
            vec![arc(1, 3), arc(2, 3), arc(3, 1), b(1, 3)],
        )),
        4 => Some((
            vec![
                a(1),
                a(2),
                a(3),
                a(4),
                arc(1, 2),
                arc(2, 4),
                arc(3, 4),
                arc(4, 2),
                b(2, 4),
            ],
            vec![arc(1, 3), arc(2, 3), arc(3, 1), arc(4, 1), b(1, 3)],
        )),
        _ => None,
    }
}

/// Build the explicit locally injective self-map that no homeomorphism
/// induces, on a surface with crosscaps + holes = 4: the identity on one
/// part of the vertex set and the twist product `t_{b_2^4} t_{b_1^3}
/// t_{b_2^4}` on the rest.  The returned map has been verified simplicial
/// and locally injective.
pub fn build_counterexample(spec: SurfaceSpec) -> Result<(ABSplit, SimplicialMap)> {
    let (g, n) = (spec.genus, spec.holes);
    if g + n != 4 || g < 1 {
        return Err(Error::InvalidSurface(format!(
            "the twisted self-map is defined when crosscaps + holes = 4 with at least one \
             crosscap, not on N_{{{g},{n}}}"
        )));
    }
    let model = build_model(spec)?;
    let universe = build_x(spec)?;
    let (a_set, b_set) = counterexample_split(g).expect("crosscap count was checked");

    let mut seen = BTreeSet::new();
    for c in a_set.iter().chain(&b_set) {
        c.validate(spec)?;
        if !seen.insert(c.clone()) {
            return Err(Error::Internal(format!("duplicated vertex {}", c.name())));
        }
    }
    let expected: BTreeSet<Curve> = universe.vertices.iter().cloned().collect();
    if seen != expected {
        return Err(Error::Internal(
            "the two parts do not tile the vertex set of the complex".into(),
        ));
    }

    let outer = Curve::beta(2, 4);
    let inner = Curve::beta(1, 3);
    let moved: BTreeSet<Curve> = b_set.iter().cloned().collect();
    let mut assignment = Vec::with_capacity(universe.vertex_count());
    for vertex in &universe.vertices {
        if moved.contains(vertex) {
            let once = dehn_twist(&model, vertex, &outer, 1)?;
            let twice = dehn_twist(&model, &once, &inner, 1)?;
            assignment.push(dehn_twist(&model, &twice, &outer, 1)?);
        } else {
            assignment.push(vertex.clone());
        }
    }
    let map = SimplicialMap {
        domain: universe,
        assignment,
    };
    if !check_simplicial(&model, &map)? {
        return Err(Error::VerificationFailed(
            "the twisted self-map is not simplicial".into(),
        ));
    }
    if !check_locally_injective(&model, &map)? {
        return Err(Error::VerificationFailed(
            "the twisted self-map is not locally injective".into(),
        ));
    }
    Ok((ABSplit { a_set, b_set }, map))
}

/// Search every vertex pair for an intersection number the map changes.  The
/// first changed pair (in vertex order) certifies that no homeomorphism
/// induces the map; `None` is inconclusive.
pub fn non_induced_certificate(
    model: &ModelPolygon,
    map: &SimplicialMap,
) -> Result<Option<NonInducedCertificate>> {
    let n = map.domain.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            let before = intersect(model, &map.domain.vertices[u], &map.domain.vertices[v])?.value;
            let after = intersect(model, &map.assignment[u], &map.assignment[v])?.value;
            if before != after {
                return Ok(Some(NonInducedCertificate {
                    gamma: map.domain.vertices[u].clone(),
                    delta: map.domain.vertices[v].clone(),
                    i_before: before,
                    i_after: after,
                }));
            }
        }
    }
    Ok(None)
}

fn wrap_index(total: u32, v: i64) -> u32 {
    let t = total as i64;
    (((v - 1).rem_euclid(t)) + 1) as u32
}

fn push_valid_chord(spec: SurfaceSpec, a: u32, b: u32, out: &mut Vec<Curve>) {
    if a == b {
        return;
    }
    let c = Curve::beta(a.min(b), a.max(b));
    if c.validate(spec).is_ok() && !out.contains(&c) {
        out.push(c);
    }
}

/// Build the star configuration around crosscap `i` and edge `j`: every
/// other one-sided core, the chords off the preceding edge with superscripts
/// walking forward from `j` until they reach the anchor, and the chords off
/// edge `i` with superscripts from `i + 2` forward up to `j`.  Superscript
/// arithmetic is cyclic and chords that degenerate (adjacent endpoints) are
/// dropped.
pub fn build_star_configuration(spec: SurfaceSpec, i: u32, j: u32) -> Result<StarConfiguration> {
    let (g, n) = (spec.genus, spec.holes);
    let total = g + n;
    if g + n < 5 {
        return Err(Error::Unsupported(format!(
            "the star configuration needs crosscaps + holes >= 5, got N_{{{g},{n}}}"
        )));
    }
    let core = Curve::alpha(i);
    core.validate(spec)?;
    let arc = Curve::alpha_arc(i, j);
    arc.validate(spec)?;

    let p1: Vec<Curve> = (1..=g).filter(|&k| k != i).map(Curve::alpha).collect();

    let anchor = wrap_index(total, i as i64 - 1);
    let mut p2 = Vec::new();
    let mut m = j;
    while m != anchor {
        push_valid_chord(spec, anchor, m, &mut p2);
        m = wrap_index(total, m as i64 + 1);
    }

    let mut p3 = Vec::new();
    let ahead = (j as i64 - i as i64).rem_euclid(total as i64) as u32;
    for t in 2..=ahead {
        push_valid_chord(spec, i, wrap_index(total, i as i64 + t as i64), &mut p3);
    }

    Ok(StarConfiguration {
        p1,
        p2,
        p3,
        core,
        arc,
    })
}

/// Verify the star configuration at `(i, j)`: the cut set is an honest curve
/// system, the distinguished core and its companion stay off it, cutting
/// leaves exactly one non-pants piece — non-orientable of genus one with two
/// boundary circles — and adding either distinguished curve to the cut set
/// flattens everything to pants.
pub fn verify_star_configuration(model: &ModelPolygon, i: u32, j: u32) -> Result<LemmaReport> {
    let spec = model.spec;
    let config = build_star_configuration(spec, i, j)?;
    let mut report = LemmaReport::new("idenonstar");
    let cut_set = config.cut_set();
    report.note(format!("cut set {}", names(&cut_set)));

    for a in 0..cut_set.len() {
        for b in a + 1..cut_set.len() {
            report.instance();
            let v = intersect(model, &cut_set[a], &cut_set[b])?.value;
            report.ensure(v == 0, || {
                format!(
                    "cut curves {} and {} intersect {} times",
                    cut_set[a].name(),
                    cut_set[b].name(),
                    v
                )
            });
        }
    }
    for special in [&config.core, &config.arc] {
        for c in &cut_set {
            report.instance();
            let v = intersect(model, special, c)?.value;
            report.ensure(v == 0, || {
                format!(
                    "{} meets cut curve {} ({} times)",
                    special.name(),
                    c.name(),
                    v
                )
            });
        }
    }
    if !report.passed() {
        return Ok(report);
    }

    let realized: Vec<Realized> = cut_set
        .iter()
        .map(|c| c.realize(model))
        .collect::<Result<_>>()?;
    let cut = cut_along(model, &realized)?;
    let exceptional: Vec<&CutComponent> =
        cut.components.iter().filter(|c| !c.is_pants()).collect();
    report.instance();
    report.ensure(exceptional.len() == 1, || {
        format!(
            "expected exactly one non-pants piece, found {}",
            exceptional.len()
        )
    });
    if let [piece] = exceptional[..] {
        report.instance();
        report.ensure(
            !piece.orientable && piece.genus == 1 && piece.boundary_count == 2,
            || {
                format!(
                    "the exceptional piece is orientable={}, genus={}, boundaries={}",
                    piece.orientable, piece.genus, piece.boundary_count
                )
            },
        );
        report.note(format!(
            "exceptional piece: non-orientable, genus {}, {} boundary circles",
            piece.genus, piece.boundary_count
        ));
    }

    // Both distinguished curves live on the exceptional piece and cut it
    // down to a pair of pants: adding either one to the cut set must leave
    // pants only.
    for special in [&config.core, &config.arc] {
        let mut extended = realized.clone();
        extended.push(special.realize(model)?);
        let finer = cut_along(model, &extended)?;
        report.instance();
        report.ensure(finer.components.iter().all(|c| c.is_pants()), || {
            format!(
                "cutting additionally along {} still leaves a non-pants piece",
                special.name()
            )
        });
    }
    Ok(report)
}

/// Apply a map to a list of domain-vertex curves.
fn map_curves(map: &SimplicialMap, curves: &[Curve]) -> Result<Vec<Curve>> {
    curves
        .iter()
        .map(|c| {
            map.domain
                .vertex_index(c)
                .map(|ix| map.assignment[ix].clone())
                .ok_or_else(|| Error::Internal(format!("{} is not a domain vertex", c.name())))
        })
        .collect()
}

fn rigid_range_gate(spec: SurfaceSpec) -> Result<()> {
    let (g, n) = (spec.genus, spec.holes);
    if g + n < 5 {
        return Err(Error::Unsupported(format!(
            "the rigidity sweep covers crosscaps + holes >= 5; N_{{{g},{n}}} is outside \
             (crosscaps + holes = 4 is the non-rigid range — see the twisted self-map)"
        )));
    }
    Ok(())
}

/// Sweep every enumerated locally injective self-map: each one must preserve
/// every vertex type and must be induced by a model symmetry.
pub fn check_mainxx(model: &ModelPolygon, budget: Option<usize>) -> Result<LemmaReport> {
    let spec = model.spec;
    rigid_range_gate(spec)?;
    let universe = build_x(spec)?;
    let maps = enumerate_li_self_maps(&universe, budget)?;
    let symmetries = model_symmetries(spec)?;
    let mut report = LemmaReport::new("mainxx");
    for (k, map) in maps.iter().enumerate() {
        report.instance();
        let mismatches = check_type_preservation(model, map)?;
        report.ensure(mismatches.is_empty(), || {
            format!(
                "self-map {} changes the type of {} ({} -> {})",
                k, mismatches[0].vertex.name(), mismatches[0].vertex_type, mismatches[0].image_type
            )
        });
        report.instance();
        report.ensure(is_induced_by_symmetry(map, &symmetries).is_some(), || {
            format!("self-map {} is induced by no model symmetry", k)
        });
    }
    report.note(format!(
        "{} locally injective self-maps, {} model symmetries",
        maps.len(),
        symmetries.len()
    ));
    Ok(report)
}

/// On one-crosscap surfaces, every enumerated self-map preserves every
/// vertex type.
pub fn check_g1ct(model: &ModelPolygon, budget: Option<usize>) -> Result<LemmaReport> {
    let spec = model.spec;
    if spec.genus != 1 || spec.holes < 4 {
        return Err(Error::Unsupported(format!(
            "the one-crosscap type sweep covers N_{{1,n}} with n >= 4, not N_{{{},{}}}",
            spec.genus, spec.holes
        )));
    }
    let universe = build_x(spec)?;
    let maps = enumerate_li_self_maps(&universe, budget)?;
    let mut report = LemmaReport::new("g1ct");
    for (k, map) in maps.iter().enumerate() {
        report.instance();
        let mismatches = check_type_preservation(model, map)?;
        report.ensure(mismatches.is_empty(), || {
            format!(
                "self-map {} changes the type of {}",
                k,
                mismatches[0].vertex.name()
            )
        });
    }
    report.note(format!("{} locally injective self-maps", maps.len()));
    Ok(report)
}

/// Every enumerated self-map sends every one-sided core to a one-sided
/// essential curve.
pub fn check_all_alpha_i(model: &ModelPolygon, budget: Option<usize>) -> Result<LemmaReport> {
    let spec = model.spec;
    if spec.genus < 1 {
        return Err(Error::Unsupported(
            "the one-sided-core sweep needs at least one crosscap".into(),
        ));
    }
    rigid_range_gate(spec)?;
    let universe = build_x(spec)?;
    let maps = enumerate_li_self_maps(&universe, budget)?;
    let mut report = LemmaReport::new("all-alpha-i");
    for (k, map) in maps.iter().enumerate() {
        for i in 1..=spec.genus {
            let ix = universe
                .vertex_index(&Curve::alpha(i))
                .ok_or_else(|| Error::Internal(format!("a_{i} missing from the complex")))?;
            let image_type = classify_type(model, &map.assignment[ix].realize(model)?)?;
            report.instance();
            report.ensure(image_type.is_one_sided(), || {
                format!(
                    "self-map {} sends a_{} to a curve of type {}",
                    k, i, image_type
                )
            });
        }
    }
    report.note(format!("{} locally injective self-maps", maps.len()));
    Ok(report)
}

/// Which verified decompositions pass the replacement condition; failures of
/// the search are reported back as skips so the sweep stays honest.
fn condition_passing_pants(
    model: &ModelPolygon,
    universe: &SimplicialComplex,
    report: &mut LemmaReport,
) -> Result<Vec<crate::pants::PantsDecomposition>> {
    let mut out = Vec::new();
    for p in enumerate_pants(model, universe)? {
        if !is_top_dimensional(model, &p)? {
            continue;
        }
        match check_nonadjacency_condition(model, &p, universe) {
            Ok(_) => out.push(p),
            Err(Error::VerificationFailed(msg)) => {
                report.note(format!(
                    "skipped {} (replacement condition unmet: {})",
                    names(&p.curves),
                    msg
                ));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// For every top-dimensional decomposition passing the replacement condition
/// and every enumerated self-map: images form a top-dimensional
/// decomposition again, and nonadjacent pairs stay nonadjacent.
pub fn check_nonadjacency(model: &ModelPolygon, budget: Option<usize>) -> Result<LemmaReport> {
    let spec = model.spec;
    if spec.genus + spec.holes > 5 {
        return Err(Error::Unsupported(format!(
            "the nonadjacency sweep is sized for crosscaps + holes <= 5, got N_{{{},{}}}",
            spec.genus, spec.holes
        )));
    }
    let universe = build_x(spec)?;
    let maps = enumerate_li_self_maps(&universe, budget)?;
    let mut report = LemmaReport::new("nonadjacency");
    let pants = condition_passing_pants(model, &universe, &mut report)?;
    for p in &pants {
        let graph = adjacency_graph(p);
        for map in &maps {
            let images = map_curves(map, &p.curves)?;
            report.instance();
            let image_p = match verify_pants(model, &images) {
                Ok(ip) => ip,
                Err(e) => {
                    report.ensure(false, || {
                        format!("images of {} are not a decomposition: {e}", names(&p.curves))
                    });
                    continue;
                }
            };
            let image_graph = adjacency_graph(&image_p);
            for a in 0..p.curves.len() {
                for b in a + 1..p.curves.len() {
                    if graph.has_arc(a, b) {
                        continue;
                    }
                    report.instance();
                    report.ensure(!image_graph.has_arc(a, b), || {
                        format!(
                            "nonadjacent pair ({}, {}) becomes adjacent under a self-map",
                            p.curves[a].name(),
                            p.curves[b].name()
                        )
                    });
                }
            }
        }
    }
    report.note(format!(
        "{} decompositions x {} self-maps",
        pants.len(),
        maps.len()
    ));
    Ok(report)
}

/// Every enumerated self-map carries decompositions with a path-shaped
/// adjacency graph to decompositions with a path-shaped adjacency graph.
pub fn check_lintolin(model: &ModelPolygon, budget: Option<usize>) -> Result<LemmaReport> {
    let spec = model.spec;
    if spec.genus != 1 || spec.holes < 4 {
        return Err(Error::Unsupported(format!(
            "the linearity sweep covers N_{{1,n}} with n >= 4, not N_{{{},{}}}",
            spec.genus, spec.holes
        )));
    }
    let universe = build_x(spec)?;
    let maps = enumerate_li_self_maps(&universe, budget)?;
    let mut report = LemmaReport::new("lintolin");
    let mut linear_count = 0u64;
    for p in enumerate_pants(model, &universe)? {
        if !is_top_dimensional(model, &p)? || !is_linear(&adjacency_graph(&p)) {
            continue;
        }
        linear_count += 1;
        for map in &maps {
            let images = map_curves(map, &p.curves)?;
            report.instance();
            match verify_pants(model, &images) {
                Ok(ip) => {
                    report.ensure(is_linear(&adjacency_graph(&ip)), || {
                        format!(
                            "images of the path-shaped {} are not path-shaped",
                            names(&p.curves)
                        )
                    });
                }
                Err(e) => report.ensure(false, || {
                    format!("images of {} are not a decomposition: {e}", names(&p.curves))
                }),
            }
        }
    }
    report.note(format!(
        "{} path-shaped decompositions x {} self-maps",
        linear_count,
        maps.len()
    ));
    Ok(report)
}

/// Every enumerated self-map preserves valency-one vertices and k-th
/// successors inside decompositions with a path-shaped adjacency graph.
pub fn check_linpath(model: &ModelPolygon, budget: Option<usize>) -> Result<LemmaReport> {
    let spec = model.spec;
    if spec.genus + spec.holes > 5 {
        return Err(Error::Unsupported(format!(
            "the successor sweep is sized for crosscaps + holes <= 5, got N_{{{},{}}}",
            spec.genus, spec.holes
        )));
    }
    let universe = build_x(spec)?;
    let maps = enumerate_li_self_maps(&universe, budget)?;
    let mut report = LemmaReport::new("linpath");
    let pants = condition_passing_pants(model, &universe, &mut report)?;
    let mut swept = 0u64;
    for p in &pants {
        let graph = adjacency_graph(p);
        if !is_linear(&graph) {
            continue;
        }
        swept += 1;
        for map in &maps {
            let images = map_curves(map, &p.curves)?;
            report.instance();
            let image_p = match verify_pants(model, &images) {
                Ok(ip) => ip,
                Err(e) => {
                    report.ensure(false, || {
                        format!("images of {} are not a decomposition: {e}", names(&p.curves))
                    });
                    continue;
                }
            };
            let image_graph = adjacency_graph(&image_p);
            report.instance();
            report.ensure(is_linear(&image_graph), || {
                format!("images of {} are not path-shaped", names(&p.curves))
            });
            if !is_linear(&image_graph) {
                continue;
            }
            for (start_ix, start) in p.curves.iter().enumerate() {
                if graph.valency(start_ix) != 1 {
                    continue;
                }
                let image_start = &images[start_ix];
                let image_start_ix = image_graph
                    .node_index(image_start)
                    .ok_or_else(|| Error::Internal("image node missing from its graph".into()))?;
                report.instance();
                report.ensure(image_graph.valency(image_start_ix) == 1, || {
                    format!(
                        "the image of path end {} has valency {}",
                        start.name(),
                        image_graph.valency(image_start_ix)
                    )
                });
                if image_graph.valency(image_start_ix) != 1 {
                    continue;
                }
                for k in 0..p.curves.len() {
                    let step = match linear_successor(&graph, start, k) {
                        Ok(c) => c,
                        Err(_) => break,
                    };
                    let step_ix = graph
                        .node_index(&step)
                        .ok_or_else(|| Error::Internal("successor missing from graph".into()))?;
                    let expected = images[step_ix].clone();
                    let image_step = linear_successor(&image_graph, image_start, k)?;
                    report.instance();
                    report.ensure(image_step == expected, || {
                        format!(
                            "step {} from {} maps to {} instead of {}",
                            k,
                            start.name(),
                            image_step.name(),
                            expected.name()
                        )
                    });
                }
            }
        }
    }
    report.note(format!(
        "{} path-shaped decompositions x {} self-maps",
        swept,
        maps.len()
    ));
    Ok(report)
}

/// Sweep the star configuration over every crosscap and every admissible
/// edge choice on one surface.
pub fn check_idenonstar(model: &ModelPolygon) -> Result<LemmaReport> {
    let spec = model.spec;
    let (g, n) = (spec.genus, spec.holes);
    if g < 1 {
        return Err(Error::Unsupported(
            "the star configuration needs at least one crosscap".into(),
        ));
    }
    rigid_range_gate(spec)?;
    let mut report = LemmaReport::new("idenonstar");
    let mut configurations = 0u64;
    for i in 1..=g {
        for j in 1..=(g + n) {
            if Curve::alpha_arc(i, j).validate(spec).is_err() {
                continue;
            }
            configurations += 1;
            let sub = verify_star_configuration(model, i, j)?;
            report.instances_checked += sub.instances_checked;
            report
                .failures
                .extend(sub.failures.into_iter().map(|f| format!("(i={i}, j={j}): {f}")));
        }
    }
    report.note(format!(
        "{configurations} star configurations on N_{{{g},{n}}}"
    ));
    Ok(report)
}
