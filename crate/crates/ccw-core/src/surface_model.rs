//! Polygon model of the non-orientable surface N_{g,n}.
//!
//! Purpose: N_{g,n} is modeled by a convex disc R whose boundary is a
//! (2g+n)-gon with edges labeled s_1, e_1, s_2, e_2, ..., s_g, e_g,
//! e_{g+1}, ..., e_{g+n} in counterclockwise order. Two copies of R (the
//! "plus" and "minus" faces) are glued: each e-edge pointwise to its copy
//! (`(e,u)+ ~ (e,u)-`), each s-edge to its copy with a flip
//! (`(s,u)+ ~ (s,1-u)-`). The result is a closed surface of Euler
//! characteristic 2-g; deleting a small disc around each corner z_k between
//! e_{g+k-1} and e_{g+k} produces N_{g,n} with n holes. The glued s_i edge
//! is a one-sided loop: the core of the i-th crosscap.
//!
//! Why this design: keeping both faces abstractly identical (same labels,
//! same counterclockwise parametrization) makes every curve computation a
//! statement about chords of a single convex polygon plus a face bit, which
//! is exact and easy to reason about.
//!
//! Notes: positions index the edge cycle; corner c is the polygon vertex
//! between edge c-1 and edge c (cyclically). After gluing, the two corners
//! flanking s_i merge (all four face copies) into a single vertex, and each
//! z-corner merges with its copy into a degree-2 vertex.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A surface N_{g,n}: non-orientable genus `genus` with `holes` holes
/// (`genus == 0` gives the sphere with holes, used as a cut piece and as the
/// target of link isomorphisms).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub genus: u32,
    pub holes: u32,
}

impl SurfaceSpec {
    pub fn new(genus: u32, holes: u32) -> Self {
        SurfaceSpec { genus, holes }
    }

    /// Euler characteristic of the surface with holes: 2 - g - n.
    pub fn euler_characteristic(&self) -> i64 {
        2 - self.genus as i64 - self.holes as i64
    }

    /// Number of polygon edges, 2g + n.
    pub fn edge_count(&self) -> usize {
        2 * self.genus as usize + self.holes as usize
    }
}

/// Kind of a polygon edge: `S` edges glue with a flip (crosscaps), `E` edges
/// glue pointwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeKind {
    S,
    E,
}

/// A labeled polygon edge: s_i (1 <= i <= g) or e_j (1 <= j <= g+n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeLabel {
    pub kind: EdgeKind,
    pub index: u32,
}

impl EdgeLabel {
    pub fn s(index: u32) -> Self {
        EdgeLabel { kind: EdgeKind::S, index }
    }

    pub fn e(index: u32) -> Self {
        EdgeLabel { kind: EdgeKind::E, index }
    }
}

impl std::fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            EdgeKind::S => write!(f, "s{}", self.index),
            EdgeKind::E => write!(f, "e{}", self.index),
        }
    }
}

impl std::str::FromStr for EdgeLabel {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (head, tail) = text.split_at(1);
        let index: u32 = tail
            .parse()
            .map_err(|_| Error::InvalidCurve(format!("bad edge label {text:?}")))?;
        match head {
            "s" => Ok(EdgeLabel::s(index)),
            "e" => Ok(EdgeLabel::e(index)),
            _ => Err(Error::InvalidCurve(format!("bad edge label {text:?}"))),
        }
    }
}

/// A vertex of the glued surface: the merged corner pair flanking s_i, or
/// the marked corner z_k (the k-th hole).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelVertex {
    S(u32),
    Z(u32),
}

/// The polygon model for one surface: the labeled edge cycle plus derived
/// position lookups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelPolygon {
    pub spec: SurfaceSpec,
    pub edge_cycle: Vec<EdgeLabel>,
}

/// Build the polygon model for N_{g,n}. Fails for g = n = 0 (no polygon).
pub fn build_model(spec: SurfaceSpec) -> Result<ModelPolygon> {
    if spec.genus == 0 && spec.holes == 0 {
        return Err(Error::InvalidSurface(
            "g = 0, n = 0 has no polygon model".into(),
        ));
    }
    let g = spec.genus;
    let n = spec.holes;
    let mut edge_cycle = Vec::with_capacity(spec.edge_count());
    for i in 1..=g {
        edge_cycle.push(EdgeLabel::s(i));
        edge_cycle.push(EdgeLabel::e(i));
    }
    for j in (g + 1)..=(g + n) {
        edge_cycle.push(EdgeLabel::e(j));
    }
    Ok(ModelPolygon { spec, edge_cycle })
}

impl ModelPolygon {
    /// Number of polygon edges (= number of corners).
    pub fn edge_count(&self) -> usize {
        self.edge_cycle.len()
    }

    pub fn label_at(&self, pos: usize) -> EdgeLabel {
        self.edge_cycle[pos % self.edge_count()]
    }

    /// Position of s_i in the edge cycle.
    pub fn s_position(&self, i: u32) -> Result<usize> {
        if i == 0 || i > self.spec.genus {
            return Err(Error::InvalidCurve(format!(
                "s{} does not exist on (g, n) = ({}, {})",
                i, self.spec.genus, self.spec.holes
            )));
        }
        Ok(2 * (i as usize - 1))
    }

    /// Position of e_j in the edge cycle.
    pub fn e_position(&self, j: u32) -> Result<usize> {
        let g = self.spec.genus;
        if j == 0 || j > g + self.spec.holes {
            return Err(Error::InvalidCurve(format!(
                "e{} does not exist on (g, n) = ({}, {})",
                j, g, self.spec.holes
            )));
        }
        if j <= g {
            Ok(2 * j as usize - 1)
        } else {
            Ok(g as usize + j as usize - 1)
        }
    }

    pub fn position_of(&self, label: EdgeLabel) -> Result<usize> {
        match label.kind {
            EdgeKind::S => self.s_position(label.index),
            EdgeKind::E => self.e_position(label.index),
        }
    }

    /// The corner carrying the k-th hole marker z_k (between e_{g+k-1} and
    /// e_{g+k}).
    pub fn z_corner(&self, k: u32) -> Result<usize> {
        if k == 0 || k > self.spec.holes {
            return Err(Error::InvalidCurve(format!(
                "z{} does not exist on (g, n) = ({}, {})",
                k, self.spec.genus, self.spec.holes
            )));
        }
        Ok(2 * self.spec.genus as usize + k as usize - 1)
    }

    /// Which glued vertex the polygon corner `c` belongs to. Corners 2i-2 and
    /// 2i-1 both map to the s_i vertex; corner 2g+k-1 maps to z_k.
    pub fn vertex_of_corner(&self, c: usize) -> ModelVertex {
        let c = c % self.edge_count();
        let g = self.spec.genus as usize;
        if c < 2 * g {
            ModelVertex::S((c / 2 + 1) as u32)
        } else {
            ModelVertex::Z((c - 2 * g + 1) as u32)
        }
    }

    /// All glued vertices, in order: s-vertices then z-vertices.
    pub fn vertices(&self) -> Vec<ModelVertex> {
        let mut out = Vec::new();
        for i in 1..=self.spec.genus {
            out.push(ModelVertex::S(i));
        }
        for k in 1..=self.spec.holes {
            out.push(ModelVertex::Z(k));
        }
        out
    }

    /// The polygon corners merged into the given glued vertex.
    pub fn corners_of_vertex(&self, v: ModelVertex) -> Vec<usize> {
        match v {
            ModelVertex::S(i) => vec![2 * (i as usize - 1), 2 * (i as usize - 1) + 1],
            ModelVertex::Z(k) => vec![2 * self.spec.genus as usize + k as usize - 1],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_surface() {
        assert!(build_model(SurfaceSpec::new(0, 0)).is_err());
    }

    #[test]
    fn edge_cycle_layouts() {
        let m = build_model(SurfaceSpec::new(2, 3)).unwrap();
        let labels: Vec<String> = m.edge_cycle.iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["s1", "e1", "s2", "e2", "e3", "e4", "e5"]);

        let m = build_model(SurfaceSpec::new(0, 5)).unwrap();
        let labels: Vec<String> = m.edge_cycle.iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["e1", "e2", "e3", "e4", "e5"]);

        let m = build_model(SurfaceSpec::new(1, 3)).unwrap();
        let labels: Vec<String> = m.edge_cycle.iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["s1", "e1", "e2", "e3", "e4"]);
    }

    #[test]
    fn positions_match_cycle() {
        for (g, n) in [(1u32, 4u32), (2, 3), (3, 2), (0, 5), (5, 0)] {
            let spec = SurfaceSpec::new(g, n);
            let m = build_model(spec).unwrap();
            for i in 1..=g {
                let p = m.s_position(i).unwrap();
                assert_eq!(m.edge_cycle[p], EdgeLabel::s(i));
                assert_eq!(p, 2 * (i as usize - 1));
            }
            for j in 1..=(g + n) {
                let p = m.e_position(j).unwrap();
                assert_eq!(m.edge_cycle[p], EdgeLabel::e(j));
            }
        }
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(SurfaceSpec::new(1, 4).euler_characteristic(), -3);
        assert_eq!(SurfaceSpec::new(0, 5).euler_characteristic(), -3);
        assert_eq!(SurfaceSpec::new(3, 0).euler_characteristic(), -1);
    }

    #[test]
    fn corner_vertex_merging() {
        let m = build_model(SurfaceSpec::new(1, 3)).unwrap();
        assert_eq!(m.vertex_of_corner(0), ModelVertex::S(1));
        assert_eq!(m.vertex_of_corner(1), ModelVertex::S(1));
        assert_eq!(m.vertex_of_corner(2), ModelVertex::Z(1));
        assert_eq!(m.vertex_of_corner(3), ModelVertex::Z(2));
        assert_eq!(m.vertex_of_corner(4), ModelVertex::Z(3));
        assert_eq!(m.z_corner(2).unwrap(), 3);
        assert_eq!(m.vertices().len(), 4);
    }

    #[test]
    fn label_round_trip() {
        for text in ["s1", "e7", "s12"] {
            let label: EdgeLabel = text.parse().unwrap();
            assert_eq!(label.to_string(), text);
        }
        assert!("q3".parse::<EdgeLabel>().is_err());
        assert!("sx".parse::<EdgeLabel>().is_err());
    }
}
