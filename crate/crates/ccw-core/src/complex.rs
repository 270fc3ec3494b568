//! Finite disjointness complexes on named curves: the standard vertex
//! family for each surface, links and stars, maximal cliques, and the
//! edge-preserving identification of a crosscap-core link with the complex
//! of the cut surface.
//!
//! Purpose: the curves that matter here form a finite flag complex whose
//! edges are exactly the disjoint pairs. Storing the vertex list and the
//! edge set is enough: simplices are the cliques, so they never need to be
//! enumerated eagerly.
//!
//! Why this design: edges are always recomputed from geometric
//! intersection numbers, never hardcoded, so every structural statement
//! about a complex (cycle shapes, degrees, link identifications) is a
//! check against the intersection engine rather than an assumption.
//!
//! Notes: cutting the surface along the last crosscap core turns its
//! s-edge into a boundary hole and keeps every e-edge label, so the link
//! of that core maps to the smaller surface's complex by keeping names.
//! That map being an isomorphism is a theorem, and `link_cut_iso` verifies
//! it edge by edge on both surfaces instead of assuming it.

use std::collections::BTreeSet;

use crate::curves::Curve;
use crate::intersection;
use crate::surface_model::{build_model, SurfaceSpec};
use crate::{Error, Result};

/// A finite flag complex: ordered vertices and the disjointness edges.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    pub spec: SurfaceSpec,
    pub vertices: Vec<Curve>,
    /// Unordered pairs of vertex indices, stored with the smaller first.
    pub edges: BTreeSet<(usize, usize)>,
}

impl SimplicialComplex {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, c: &Curve) -> Option<usize> {
        self.vertices.iter().position(|v| v == c)
    }

    fn require_vertex(&self, c: &Curve) -> Result<usize> {
        self.vertex_index(c)
            .ok_or_else(|| Error::InvalidCurve(format!("{c} is not a vertex of this complex")))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Whether two vertex curves span an edge (i.e. are disjoint).
    pub fn are_adjacent(&self, a: &Curve, b: &Curve) -> Result<bool> {
        Ok(self.has_edge(self.require_vertex(a)?, self.require_vertex(b)?))
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.has_edge(u, v)).collect()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).len()
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &u)| set[k + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Full subcomplex on a subset of vertices (given by parent indices,
    /// kept in parent order).
    pub fn full_subcomplex(&self, keep: &[usize]) -> SimplicialComplex {
        let vertices: Vec<Curve> = keep.iter().map(|&u| self.vertices[u].clone()).collect();
        let mut edges = BTreeSet::new();
        for (x, &u) in keep.iter().enumerate() {
            for (y, &v) in keep.iter().enumerate().skip(x + 1) {
                if self.has_edge(u, v) {
                    edges.insert((x.min(y), x.max(y)));
                }
            }
        }
        SimplicialComplex { spec: self.spec, vertices, edges }
    }

    /// Full subcomplex on the neighbors of `v`.
    pub fn link(&self, v: &Curve) -> Result<SimplicialComplex> {
        let u = self.require_vertex(v)?;
        Ok(self.full_subcomplex(&self.neighbors(u)))
    }

    /// Full subcomplex on `v` and its neighbors.
    pub fn star(&self, v: &Curve) -> Result<SimplicialComplex> {
        let u = self.require_vertex(v)?;
        let mut keep = self.neighbors(u);
        keep.push(u);
        keep.sort_unstable();
        Ok(self.full_subcomplex(&keep))
    }

    /// All maximal cliques, each sorted, in deterministic order
    /// (Bron–Kerbosch with pivoting on the vertex of highest degree).
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let nbr: Vec<BTreeSet<usize>> =
            (0..n).map(|u| self.neighbors(u).into_iter().collect()).collect();
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut r: Vec<usize> = Vec::new();
        fn recurse(
            nbr: &[BTreeSet<usize>],
            r: &mut Vec<usize>,
            p: BTreeSet<usize>,
            x: BTreeSet<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if p.is_empty() && x.is_empty() {
                let mut clique = r.clone();
                clique.sort_unstable();
                out.push(clique);
                return;
            }
            let pivot = p
                .iter()
                .chain(x.iter())
                .copied()
                .max_by_key(|&u| p.intersection(&nbr[u]).count())
                .expect("p or x nonempty");
            let candidates: Vec<usize> =
                p.iter().copied().filter(|u| !nbr[pivot].contains(u)).collect();
            let mut p = p;
            let mut x = x;
            for u in candidates {
                r.push(u);
                let p2: BTreeSet<usize> = p.intersection(&nbr[u]).copied().collect();
                let x2: BTreeSet<usize> = x.intersection(&nbr[u]).copied().collect();
                recurse(nbr, r, p2, x2, out);
                r.pop();
                p.remove(&u);
                x.insert(u);
            }
        }
        recurse(&nbr, &mut r, (0..n).collect(), BTreeSet::new(), &mut out);
        out.sort();
        out
    }
}

/// Build a flag complex over an explicit vertex list: edges are exactly the
/// disjoint pairs. Vertex order is kept; duplicates are rejected.
pub fn build_complex(spec: SurfaceSpec, vertices: &[Curve]) -> Result<SimplicialComplex> {
    let model = build_model(spec)?;
    for (k, v) in vertices.iter().enumerate() {
        if vertices[k + 1..].contains(v) {
            return Err(Error::InvalidCurve(format!("duplicate vertex {v}")));
        }
    }
    let mut edges = BTreeSet::new();
    for u in 0..vertices.len() {
        for v in (u + 1)..vertices.len() {
            if intersection::intersect(&model, &vertices[u], &vertices[v])?.value == 0 {
                edges.insert((u, v));
            }
        }
    }
    Ok(SimplicialComplex { spec, vertices: vertices.to_vec(), edges })
}

/// The standard vertex family on (g, n), in canonical order: crosscap
/// cores a_i, then arcs a_i^j over 1 <= j <= g+n with j distinct from i and
/// i-1 cyclically, then chords b_i^j with 2 <= j-i <= g+n-2. A handful of
/// small surfaces use explicit shorter lists instead.
pub fn standard_vertices(spec: SurfaceSpec) -> Result<Vec<Curve>> {
    let g = spec.genus;
    let n = spec.holes;
    if g + n == 0 {
        return Err(Error::InvalidSurface("empty surface".into()));
    }
    let sporadic: Option<Vec<Curve>> = match (g, n) {
        (1, 0) | (1, 1) => Some(vec![Curve::alpha(1)]),
        (1, 2) => Some(vec![Curve::alpha(1), Curve::alpha_arc(1, 2)]),
        (2, 0) | (2, 1) => Some(vec![Curve::alpha(1), Curve::alpha(2)]),
        (3, 0) => Some(vec![Curve::alpha(1), Curve::alpha(2), Curve::alpha(3)]),
        _ => None,
    };
    if let Some(list) = sporadic {
        return Ok(list);
    }
    let total = g + n;
    let mut out: Vec<Curve> = Vec::new();
    for i in 1..=g {
        out.push(Curve::alpha(i));
    }
    for i in 1..=g {
        for j in 1..=total {
            let c = Curve::alpha_arc(i, j);
            if c.validate(spec).is_ok() {
                out.push(c);
            }
        }
    }
    for i in 1..=total {
        for j in (i + 1)..=total {
            let c = Curve::beta(i, j);
            if c.validate(spec).is_ok() {
                out.push(c);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The standard finite complex on (g, n).
pub fn build_x(spec: SurfaceSpec) -> Result<SimplicialComplex> {
    build_complex(spec, &standard_vertices(spec)?)
}

/// A vertex bijection between two complexes that preserves edges both
/// ways, as returned by `link_cut_iso`.
#[derive(Debug, Clone)]
pub struct VertexBijection {
    pub source: SurfaceSpec,
    pub target: SurfaceSpec,
    /// Pairs (link vertex, cut-surface vertex), in canonical order.
    pub pairs: Vec<(Curve, Curve)>,
}

impl VertexBijection {
    pub fn image_of(&self, c: &Curve) -> Option<&Curve> {
        self.pairs.iter().find(|(s, _)| s == c).map(|(_, t)| t)
    }

    pub fn preimage_of(&self, c: &Curve) -> Option<&Curve> {
        self.pairs.iter().find(|(_, t)| t == c).map(|(s, _)| s)
    }
}

/// Identify the link of the last crosscap core a_g inside the standard
/// complex on (g, n) with the standard complex on (g-1, n+1). Cutting
/// along a_g replaces the s_g edge by a hole and keeps every e-edge, so
/// the identification keeps curve names; this routine verifies that it is
/// a bijection and that both it and its inverse preserve edges, and fails
/// otherwise.
pub fn link_cut_iso(spec: SurfaceSpec) -> Result<VertexBijection> {
    let g = spec.genus;
    let n = spec.holes;
    if g == 0 {
        return Err(Error::InvalidSurface(
            "link-cut identification needs at least one crosscap".into(),
        ));
    }
    let target_spec = SurfaceSpec::new(g - 1, n + 1);
    let source = build_x(spec)?;
    let link = source.link(&Curve::alpha(g))?;
    let target = build_x(target_spec)?;

    if link.vertices.len() != target.vertices.len() {
        return Err(Error::VerificationFailed(format!(
            "link of a_{g} has {} vertices but the cut surface complex has {}",
            link.vertices.len(),
            target.vertices.len()
        )));
    }
    let mut pairs: Vec<(Curve, Curve)> = Vec::with_capacity(link.vertices.len());
    for v in &link.vertices {
        let w = target
            .vertex_index(v)
            .ok_or_else(|| {
                Error::VerificationFailed(format!(
                    "link vertex {v} has no same-named vertex on the cut surface"
                ))
            })
            .map(|k| target.vertices[k].clone())?;
        pairs.push((v.clone(), w));
    }
    for u in 0..link.vertices.len() {
        for v in (u + 1)..link.vertices.len() {
            let tu = target.vertex_index(&pairs[u].1).expect("paired vertex");
            let tv = target.vertex_index(&pairs[v].1).expect("paired vertex");
            if link.has_edge(u, v) != target.has_edge(tu, tv) {
                return Err(Error::VerificationFailed(format!(
                    "cutting does not preserve the pair {} , {}: link edge {} vs cut edge {}",
                    pairs[u].0,
                    pairs[v].0,
                    link.has_edge(u, v),
                    target.has_edge(tu, tv)
                )));
            }
        }
    }
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(VertexBijection { source: spec, target: target_spec, pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{classify_type, TopType};

    fn names(c: &SimplicialComplex) -> Vec<String> {
        c.vertices.iter().map(|v| v.name()).collect()
    }

    #[test]
    fn pentagon_complex_is_a_five_cycle() {
        let c = build_x(SurfaceSpec::new(0, 5)).unwrap();
        assert_eq!(names(&c), ["b_1_3", "b_1_4", "b_2_4", "b_2_5", "b_3_5"]);
        let expect: BTreeSet<(usize, usize)> =
            [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)].into_iter().collect();
        assert_eq!(c.edges, expect);
        assert!((0..5).all(|u| c.degree(u) == 2));
        // Every maximal clique of a cycle is one of its edges.
        let cliques = c.maximal_cliques();
        assert_eq!(cliques.len(), 5);
        assert!(cliques.iter().all(|q| q.len() == 2));
    }

    #[test]
    fn vertex_counts_follow_the_index_ranges() {
        let cases = [
            ((0, 5), 5),
            ((1, 3), 5),
            ((1, 4), 9),
            ((2, 2), 8),
            ((2, 3), 13),
            ((3, 1), 11),
            ((3, 2), 17),
            ((4, 0), 14),
            ((5, 0), 25),
            ((1, 6), 20),
        ];
        for ((g, n), count) in cases {
            let c = build_x(SurfaceSpec::new(g, n)).unwrap();
            assert_eq!(c.vertex_count(), count, "({g},{n})");
        }
    }

    #[test]
    fn small_surfaces_use_the_explicit_lists() {
        let cases: [((u32, u32), &[&str]); 6] = [
            ((1, 0), &["a_1"]),
            ((1, 1), &["a_1"]),
            ((1, 2), &["a_1", "a_1_2"]),
            ((2, 0), &["a_1", "a_2"]),
            ((2, 1), &["a_1", "a_2"]),
            ((3, 0), &["a_1", "a_2", "a_3"]),
        ];
        for ((g, n), expect) in cases {
            let c = build_x(SurfaceSpec::new(g, n)).unwrap();
            assert_eq!(names(&c), expect, "({g},{n})");
        }
        // The two crosscap cores are disjoint, so the explicit lists still
        // carry their edges.
        let c = build_x(SurfaceSpec::new(2, 1)).unwrap();
        assert_eq!(c.edge_count(), 1);
    }

    #[test]
    fn nine_vertex_complex_has_the_expected_degrees() {
        let c = build_x(SurfaceSpec::new(1, 4)).unwrap();
        assert_eq!(c.vertex_count(), 9);
        assert_eq!(c.edge_count(), 18);
        let expect = [
            ("a_1", 5),
            ("a_1_2", 3),
            ("a_1_3", 2),
            ("a_1_4", 3),
            ("b_1_3", 5),
            ("b_1_4", 4),
            ("b_2_4", 5),
            ("b_2_5", 4),
            ("b_3_5", 5),
        ];
        for (name, degree) in expect {
            let u = c.vertices.iter().position(|v| v.name() == name).unwrap();
            assert_eq!(c.degree(u), degree, "{name}");
        }
    }

    #[test]
    fn links_are_full_subcomplexes_on_the_neighbors() {
        // The core of the single crosscap is disjoint from exactly the
        // e-to-e chords.
        let c = build_x(SurfaceSpec::new(1, 4)).unwrap();
        let link = c.link(&Curve::alpha(1)).unwrap();
        assert_eq!(names(&link), ["b_1_3", "b_1_4", "b_2_4", "b_2_5", "b_3_5"]);
        // Link edges agree with the parent complex (full subcomplex).
        for u in 0..link.vertex_count() {
            for v in (u + 1)..link.vertex_count() {
                let pu = c.vertex_index(&link.vertices[u]).unwrap();
                let pv = c.vertex_index(&link.vertices[v]).unwrap();
                assert_eq!(link.has_edge(u, v), c.has_edge(pu, pv));
            }
        }
        // The star adds the vertex itself back.
        let star = c.star(&Curve::alpha(1)).unwrap();
        assert_eq!(star.vertex_count(), 6);
        assert!(star.vertex_index(&Curve::alpha(1)).is_some());
        // Dropping a_2 and its three arcs leaves the nine disjoint ones.
        let c = build_x(SurfaceSpec::new(2, 3)).unwrap();
        let link = c.link(&Curve::alpha(2)).unwrap();
        assert_eq!(link.vertex_count(), 9);
        for name in ["a_2", "a_2_3", "a_2_4", "a_2_5"] {
            assert!(link.vertices.iter().all(|v| v.name() != name), "{name}");
        }
    }

    #[test]
    fn cutting_the_last_crosscap_matches_the_smaller_complex() {
        for (g, n) in [(1u32, 4u32), (2, 3), (3, 2)] {
            let bij = link_cut_iso(SurfaceSpec::new(g, n)).unwrap();
            assert_eq!(bij.target, SurfaceSpec::new(g - 1, n + 1));
            // Identity on names, and a genuine bijection.
            for (s, t) in &bij.pairs {
                assert_eq!(s.name(), t.name());
                assert_eq!(bij.image_of(s), Some(t));
                assert_eq!(bij.preimage_of(t), Some(s));
            }
        }
        let pentagon = link_cut_iso(SurfaceSpec::new(1, 4)).unwrap();
        assert_eq!(pentagon.pairs.len(), 5);
        let nine = link_cut_iso(SurfaceSpec::new(2, 3)).unwrap();
        assert_eq!(nine.pairs.len(), 9);
        let thirteen = link_cut_iso(SurfaceSpec::new(3, 2)).unwrap();
        assert_eq!(thirteen.pairs.len(), 13);
    }

    #[test]
    fn no_standard_vertex_is_trivial_through_total_seven() {
        for g in 0..=7u32 {
            for n in 0..=(7 - g) {
                if g + n == 0 || (g == 0 && n < 4) {
                    continue;
                }
                let spec = SurfaceSpec::new(g, n);
                let model = build_model(spec).unwrap();
                for v in standard_vertices(spec).unwrap() {
                    let t = classify_type(&model, &v.realize(&model).unwrap()).unwrap();
                    assert_ne!(t, TopType::Trivial, "({g},{n}): {v}");
                    if matches!(v, Curve::Beta { .. }) {
                        assert!(t.is_separating(), "({g},{n}): {v} should separate");
                    } else {
                        assert!(t.is_one_sided(), "({g},{n}): {v} should be one-sided");
                    }
                }
            }
        }
    }
}
