//! Exact cell decomposition of the surface around a family of placed
//! curves, and analysis of the pieces after cutting.
//!
//! Purpose: given curves drawn on the polygon model (words as chords, the
//! crosscap cores as edge loci), build the cell complex the curves induce:
//! each face of the model is subdivided by its chords into planar cells, and
//! the two faces are glued along "edgelets" (the intervals between
//! consecutive marked points on each glued edge). Cutting the surface along
//! all curve segments (and along the locus edges) and regrouping cells gives
//! the pieces of the complement; for each piece the analysis computes the
//! Euler characteristic, orientability, the boundary circles with the curve
//! that each circle came from, and the hole marks it contains.
//!
//! Why this design: all incidence data is derived from exact rational
//! angles and a concrete convex embedding (vertex k of the polygon at
//! (k, k^2)), so cell tracing, crossing order along chords, and vertex
//! rotations are computed without any epsilon reasoning. Vertex links on the
//! glued surface are constructed case by case (transit points, chord
//! crossings, crosscap corners, hole corners) and every constructed sector
//! is cross-checked against the face-level cell it must equal, so a mistake
//! in the gluing combinatorics fails loudly instead of corrupting the
//! topology.
//!
//! Notes: crossings are only permitted between curves of different
//! `family` values; curves within one family must be pairwise disjoint as
//! drawn, which the builder verifies. The boundary walk counts each
//! geometric boundary circle once per direction, so circle counts are half
//! the directed orbit count.

use std::collections::HashMap;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::curves::{transit_angle, Face, Realized, Word};
use crate::surface_model::{EdgeKind, ModelPolygon, ModelVertex};
use crate::{Error, Result};

/// A curve placed in the arrangement. Crossings are allowed only between
/// curves of different families.
#[derive(Debug, Clone)]
pub struct PlacedCurve {
    pub realized: Realized,
    pub family: u8,
}

impl PlacedCurve {
    pub fn new(realized: Realized, family: u8) -> Self {
        PlacedCurve { realized, family }
    }
}

// ---------------------------------------------------------------------
// Exact geometry on a private convex embedding (vertex k at (k, k^2)).
// ---------------------------------------------------------------------

type Pt = (BigRational, BigRational);

fn embed_vertex(k: usize, m: usize) -> Pt {
    let k = (k % m) as i64;
    (
        BigRational::from(BigInt::from(k)),
        BigRational::from(BigInt::from(k * k)),
    )
}

/// Embed a boundary point given by its angle (edge position + local t).
fn embed_angle(angle: &BigRational, m: usize) -> Pt {
    let floor = angle.floor();
    let pos = floor
        .to_integer()
        .try_into()
        .unwrap_or(0usize);
    let t = angle - floor;
    let (ax, ay) = embed_vertex(pos, m);
    let (bx, by) = embed_vertex(pos + 1, m);
    let s = BigRational::one() - &t;
    (&s * &ax + &t * &bx, &s * &ay + &t * &by)
}

/// Twice the signed area of the triangle abc.
fn area2(a: &Pt, b: &Pt, c: &Pt) -> BigRational {
    (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0)
}

// ---------------------------------------------------------------------
// Face-level subdivision.
// ---------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum BPointKind {
    Corner(usize),
    Transit { curve: usize, t: usize },
}

#[derive(Debug, Clone)]
struct FChord {
    curve: usize,
    arc: usize,
    bp_start: usize,
    bp_end: usize,
    /// Crossing ids along this chord, sorted from the start endpoint.
    crossings: Vec<usize>,
    /// Face-segment ids along this chord (crossings.len() + 1 of them).
    segments: Vec<usize>,
}

#[derive(Debug, Clone)]
struct FCross {
    chord_a: usize,
    chord_b: usize,
}

struct FaceSub {
    bpoints: Vec<(BigRational, BPointKind)>,
    corner_bp: Vec<usize>,
    transit_bp: HashMap<(usize, usize), usize>,
    chords: Vec<FChord>,
    crossings: Vec<FCross>,
    segment_count: usize,
    /// CCW rotation of out-darts at each face vertex.
    rotations: Vec<Vec<usize>>,
    /// Face cell id per dart (usize::MAX for the outer region).
    dart_cell: Vec<usize>,
    cell_count: usize,
}

const OUTER: usize = usize::MAX;

impl FaceSub {
    fn fwd_dart(&self, boundary_idx: usize) -> usize {
        2 * boundary_idx
    }

    fn bwd_dart(&self, boundary_idx: usize) -> usize {
        2 * boundary_idx + 1
    }

    fn seg_dart(&self, seg: usize, reversed: bool) -> usize {
        2 * self.bpoints.len() + 2 * seg + usize::from(reversed)
    }

    fn dart_is_boundary(&self, dart: usize) -> bool {
        dart < 2 * self.bpoints.len()
    }

    fn twin(&self, dart: usize) -> usize {
        dart ^ 1
    }

    fn cell_of(&self, dart: usize) -> usize {
        self.dart_cell[dart]
    }
}

fn build_face(
    model: &ModelPolygon,
    face: Face,
    words: &[(usize, &Word, u8)],
) -> Result<FaceSub> {
    let m = model.edge_count();

    // Boundary points: corners at integer angles plus transit points.
    let mut bpoints: Vec<(BigRational, BPointKind)> = (0..m)
        .map(|c| (BigRational::from(BigInt::from(c as i64)), BPointKind::Corner(c)))
        .collect();
    for (curve, word, _) in words {
        for (t, transit) in word.transits.iter().enumerate() {
            bpoints.push((
                transit_angle(model, transit, face),
                BPointKind::Transit { curve: *curve, t },
            ));
        }
    }
    bpoints.sort_by(|a, b| a.0.cmp(&b.0));
    for pair in bpoints.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(Error::Internal(
                "coincident boundary points in a face; placement must keep parameters distinct"
                    .into(),
            ));
        }
    }
    let mut corner_bp = vec![0usize; m];
    let mut transit_bp = HashMap::new();
    for (idx, (_, kind)) in bpoints.iter().enumerate() {
        match kind {
            BPointKind::Corner(c) => corner_bp[*c] = idx,
            BPointKind::Transit { curve, t } => {
                transit_bp.insert((*curve, *t), idx);
            }
        }
    }

    // Chords: the arcs of each word that live in this face.
    let mut chords: Vec<FChord> = Vec::new();
    let mut chord_family: Vec<u8> = Vec::new();
    for (curve, word, family) in words {
        for arc in 0..word.len() {
            if word.arc_face(arc) != face {
                continue;
            }
            let bp_start = transit_bp[&(*curve, arc)];
            let bp_end = transit_bp[&(*curve, (arc + 1) % word.len())];
            chords.push(FChord {
                curve: *curve,
                arc,
                bp_start,
                bp_end,
                crossings: Vec::new(),
                segments: Vec::new(),
            });
            chord_family.push(*family);
        }
    }

    // Crossings between chords of different families, with exact parameters
    // along each chord for ordering.
    let interleave = |a: &FChord, b: &FChord| -> bool {
        let (lo, hi) = if bpoints[a.bp_start].0 < bpoints[a.bp_end].0 {
            (&bpoints[a.bp_start].0, &bpoints[a.bp_end].0)
        } else {
            (&bpoints[a.bp_end].0, &bpoints[a.bp_start].0)
        };
        let inside = |x: &BigRational| x > lo && x < hi;
        inside(&bpoints[b.bp_start].0) != inside(&bpoints[b.bp_end].0)
    };
    let mut crossings: Vec<FCross> = Vec::new();
    let mut chord_cross_params: Vec<Vec<(BigRational, usize)>> = vec![Vec::new(); chords.len()];
    for ia in 0..chords.len() {
        for ib in (ia + 1)..chords.len() {
            if !interleave(&chords[ia], &chords[ib]) {
                continue;
            }
            if chord_family[ia] == chord_family[ib] {
                return Err(Error::Internal(format!(
                    "curves {} and {} cross within one family",
                    chords[ia].curve, chords[ib].curve
                )));
            }
            let a1 = embed_angle(&bpoints[chords[ia].bp_start].0, m);
            let a2 = embed_angle(&bpoints[chords[ia].bp_end].0, m);
            let b1 = embed_angle(&bpoints[chords[ib].bp_start].0, m);
            let b2 = embed_angle(&bpoints[chords[ib].bp_end].0, m);
            let oa1 = area2(&b1, &b2, &a1);
            let oa2 = area2(&b1, &b2, &a2);
            let ob1 = area2(&a1, &a2, &b1);
            let ob2 = area2(&a1, &a2, &b2);
            if (oa1.is_positive() == oa2.is_positive()) || (ob1.is_positive() == ob2.is_positive())
            {
                return Err(Error::Internal(
                    "interleaved chords without a proper crossing".into(),
                ));
            }
            let t_a = &oa1 / (&oa1 - &oa2);
            let t_b = &ob1 / (&ob1 - &ob2);
            let id = crossings.len();
            crossings.push(FCross { chord_a: ia, chord_b: ib });
            chord_cross_params[ia].push((t_a, id));
            chord_cross_params[ib].push((t_b, id));
        }
    }
    for params in &mut chord_cross_params {
        params.sort_by(|x, y| x.0.cmp(&y.0));
        for pair in params.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::Internal(
                    "two crossings coincide along a chord".into(),
                ));
            }
        }
    }

    // Segments: chords split at their crossings. Face vertices are boundary
    // points (0..B) then crossings (B..B+C).
    let bcount = bpoints.len();
    let mut segment_count = 0usize;
    for (ci, chord) in chords.iter_mut().enumerate() {
        chord.crossings = chord_cross_params[ci].iter().map(|(_, id)| *id).collect();
        for _ in 0..chord.crossings.len() + 1 {
            chord.segments.push(segment_count);
            segment_count += 1;
        }
    }

    let mut sub = FaceSub {
        bpoints,
        corner_bp,
        transit_bp,
        chords,
        crossings,
        segment_count,
        rotations: Vec::new(),
        dart_cell: Vec::new(),
        cell_count: 0,
    };

    // Rotations. Boundary vertex: [forward, chord end if any, backward];
    // crossing vertex: the four segment darts sorted by the boundary angle
    // of the chord endpoint each one points toward.
    let vcount = bcount + sub.crossings.len();
    let mut rotations: Vec<Vec<usize>> = vec![Vec::new(); vcount];
    for bp in 0..bcount {
        let mut rot = vec![sub.fwd_dart(bp)];
        if let BPointKind::Transit { .. } = sub.bpoints[bp].1 {
            // Exactly one chord of this face ends here.
            let mut end_dart = None;
            for chord in &sub.chords {
                if chord.bp_start == bp {
                    end_dart = Some(sub.seg_dart(chord.segments[0], false));
                } else if chord.bp_end == bp {
                    end_dart = Some(sub.seg_dart(*chord.segments.last().unwrap(), true));
                }
            }
            rot.push(end_dart.ok_or_else(|| {
                Error::Internal("transit boundary point without a chord end".into())
            })?);
        }
        rot.push(sub.bwd_dart((bp + bcount - 1) % bcount));
        rotations[bp] = rot;
    }
    for (xid, cross) in sub.crossings.iter().enumerate() {
        let v = bcount + xid;
        let mut darts: Vec<(BigRational, usize)> = Vec::with_capacity(4);
        for &chord_id in &[cross.chord_a, cross.chord_b] {
            let chord = &sub.chords[chord_id];
            let k = chord.crossings.iter().position(|&c| c == xid).unwrap();
            // Toward the chord start: the reversed dart of segment k;
            // toward the end: the forward dart of segment k + 1.
            darts.push((
                sub.bpoints[chord.bp_start].0.clone(),
                sub.seg_dart(chord.segments[k], true),
            ));
            darts.push((
                sub.bpoints[chord.bp_end].0.clone(),
                sub.seg_dart(chord.segments[k + 1], false),
            ));
        }
        darts.sort_by(|x, y| x.0.cmp(&y.0));
        rotations[v] = darts.into_iter().map(|(_, d)| d).collect();
    }
    sub.rotations = rotations;

    // Trace cells: the face left of dart d continues with the rotation
    // predecessor of twin(d) at the head vertex.
    let dart_count = 2 * bcount + 2 * sub.segment_count;
    let mut rot_prev: Vec<usize> = vec![usize::MAX; dart_count];
    for rot in &sub.rotations {
        for (i, &d) in rot.iter().enumerate() {
            rot_prev[d] = rot[(i + rot.len() - 1) % rot.len()];
        }
    }
    let mut dart_cell = vec![usize::MAX; dart_count];
    let mut cell_count = 0usize;
    for start in 0..dart_count {
        if dart_cell[start] != usize::MAX {
            continue;
        }
        // Walk the orbit once to see if it is the outer region.
        let mut orbit = vec![start];
        let mut d = rot_prev[sub.twin(start)];
        while d != start {
            orbit.push(d);
            d = rot_prev[sub.twin(d)];
        }
        let is_outer = orbit
            .iter()
            .any(|&d| sub.dart_is_boundary(d) && d % 2 == 1);
        let cell = if is_outer { OUTER } else { cell_count };
        if !is_outer {
            cell_count += 1;
        }
        for &d in &orbit {
            dart_cell[d] = cell;
        }
        if is_outer {
            // The outer orbit must be exactly the backward boundary darts.
            for &d in &orbit {
                if !(sub.dart_is_boundary(d) && d % 2 == 1) {
                    return Err(Error::Internal(
                        "outer region touched an interior dart".into(),
                    ));
                }
            }
            if orbit.len() != bcount {
                return Err(Error::Internal("outer region is not the full boundary".into()));
            }
        }
    }
    sub.dart_cell = dart_cell;
    sub.cell_count = cell_count;

    // Euler check for the disc: V - E + (cells + outer) = 2.
    let v = vcount as i64;
    let e = (bcount + sub.segment_count) as i64;
    let f = sub.cell_count as i64 + 1;
    if v - e + f != 2 {
        return Err(Error::Internal(format!(
            "face subdivision has V - E + F = {}",
            v - e + f
        )));
    }
    Ok(sub)
}

// ---------------------------------------------------------------------
// Glued surface complex.
// ---------------------------------------------------------------------

/// Reference to a 1-cell of the glued complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellRef {
    Edgelet(usize),
    Segment(usize),
}

/// An end of a 1-cell: `A` is the low-parameter / chord-start end, `B` the
/// other one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum End {
    A,
    B,
}

/// One of the two sides of a 1-cell: for edgelets the Plus/Minus face side,
/// for segments the left/right side of the start-to-end orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    First,
    Second,
}

impl Side {
    fn other(self) -> Side {
        match self {
            Side::First => Side::Second,
            Side::Second => Side::First,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Edgelet {
    pub pos: usize,
    pub lo: BigRational,
    pub hi: BigRational,
    /// Cell on the plus-face side (`Side::First`).
    pub plus_cell: usize,
    /// Cell on the minus-face side (`Side::Second`).
    pub minus_cell: usize,
}

#[derive(Debug, Clone)]
pub struct Segment {
    pub curve: usize,
    pub face: Face,
    pub arc: usize,
    /// Cell on the left of start-to-end (`Side::First`).
    pub cell_left: usize,
    /// Cell on the right (`Side::Second`).
    pub cell_right: usize,
}

impl Segment {
    pub fn side_cell(&self, side: Side) -> usize {
        match side {
            Side::First => self.cell_left,
            Side::Second => self.cell_right,
        }
    }
}

impl Edgelet {
    pub fn side_cell(&self, side: Side) -> usize {
        match side {
            Side::First => self.plus_cell,
            Side::Second => self.minus_cell,
        }
    }
}

/// What a surface vertex is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexKind {
    /// A curve transit across a glued edge.
    Transit { curve: usize, t: usize },
    /// A crossing of two chords inside a face.
    Crossing { face: Face, curve_a: usize, arc_a: usize, curve_b: usize, arc_b: usize },
    /// A glued polygon vertex.
    Model(ModelVertex),
}

/// One incident 1-cell end in a vertex link, with the side of that 1-cell
/// each neighbouring sector touches.
#[derive(Debug, Clone)]
pub struct LinkEnd {
    pub cell: CellRef,
    pub end: End,
    /// Side of `cell` adjacent to the cyclically previous sector.
    pub before_side: Side,
    /// Side of `cell` adjacent to the next sector.
    pub after_side: Side,
}

#[derive(Debug, Clone)]
pub struct SurfVertex {
    pub kind: VertexKind,
    /// Cyclic link: ends[i] is followed by sectors[i] (a 2-cell id), which
    /// is followed by ends[i + 1].
    pub ends: Vec<LinkEnd>,
    pub sectors: Vec<usize>,
}

/// The assembled complex.
pub struct Arrangement {
    pub model: ModelPolygon,
    pub curves: Vec<PlacedCurve>,
    pub cell_count: usize,
    pub edgelets: Vec<Edgelet>,
    pub segments: Vec<Segment>,
    pub vertices: Vec<SurfVertex>,
    /// Locator: (1-cell, end) -> (vertex id, index in that vertex's link).
    end_at: HashMap<(CellRef, End), (usize, usize)>,
    /// Edgelet ids per edge position, in increasing parameter order.
    pub edgelets_by_pos: Vec<Vec<usize>>,
    /// Segment ids per (curve, arc), ordered from chord start.
    pub segments_by_arc: HashMap<(usize, usize), Vec<usize>>,
    /// Curve indices whose realization is a crosscap core locus.
    locus_curves: Vec<(usize, u32)>,
}

pub fn build(model: &ModelPolygon, curves: &[PlacedCurve]) -> Result<Arrangement> {
    let mut words: Vec<(usize, &Word, u8)> = Vec::new();
    let mut locus_curves: Vec<(usize, u32)> = Vec::new();
    for (idx, pc) in curves.iter().enumerate() {
        match &pc.realized {
            Realized::Word(w) => {
                if w.is_empty() {
                    return Err(Error::Internal(
                        "cannot build an arrangement around an empty word".into(),
                    ));
                }
                words.push((idx, w, pc.family));
            }
            Realized::Locus { i } => locus_curves.push((idx, *i)),
        }
    }

    let plus = build_face(model, Face::Plus, &words)?;
    let minus = build_face(model, Face::Minus, &words)?;
    let face_sub = |f: Face| -> &FaceSub {
        match f {
            Face::Plus => &plus,
            Face::Minus => &minus,
        }
    };
    let cell_count = plus.cell_count + minus.cell_count;
    let global_cell = |f: Face, cell: usize| -> usize {
        match f {
            Face::Plus => cell,
            Face::Minus => plus.cell_count + cell,
        }
    };

    let m = model.edge_count();

    // ----- edgelets -----
    let mut edge_marks: Vec<Vec<(BigRational, usize, usize)>> = vec![Vec::new(); m];
    for (curve, word, _) in &words {
        for (t, transit) in word.transits.iter().enumerate() {
            edge_marks[transit.pos].push((transit.param.clone(), *curve, t));
        }
    }
    for marks in &mut edge_marks {
        marks.sort_by(|a, b| a.0.cmp(&b.0));
    }

    // The boundary arc of a face starting at a given angle: its forward
    // dart, for reading off the adjacent cell.
    let arc_cell = |f: Face, start_angle: &BigRational| -> Result<usize> {
        let sub = face_sub(f);
        let idx = sub
            .bpoints
            .binary_search_by(|(a, _)| a.cmp(start_angle))
            .map_err(|_| Error::Internal("boundary arc start angle not found".into()))?;
        Ok(global_cell(f, sub.cell_of(sub.fwd_dart(idx))))
    };
    let rational = |v: i64| BigRational::from(BigInt::from(v));

    let mut edgelets: Vec<Edgelet> = Vec::new();
    let mut edgelets_by_pos: Vec<Vec<usize>> = vec![Vec::new(); m];
    for pos in 0..m {
        let kind = model.label_at(pos).kind;
        let mut bounds = vec![BigRational::zero()];
        bounds.extend(edge_marks[pos].iter().map(|(p, _, _)| p.clone()));
        bounds.push(BigRational::one());
        for w in bounds.windows(2) {
            let (lo, hi) = (w[0].clone(), w[1].clone());
            let plus_cell = arc_cell(Face::Plus, &(rational(pos as i64) + &lo))?;
            let minus_start = match kind {
                EdgeKind::E => rational(pos as i64) + &lo,
                EdgeKind::S => rational(pos as i64) + (BigRational::one() - &hi),
            };
            let minus_cell = arc_cell(Face::Minus, &minus_start)?;
            edgelets_by_pos[pos].push(edgelets.len());
            edgelets.push(Edgelet { pos, lo, hi, plus_cell, minus_cell });
        }
    }

    // ----- segments -----
    let mut segments: Vec<Segment> = Vec::new();
    let mut segments_by_arc: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    // (face, face-segment id) -> global segment id
    let mut seg_global: HashMap<(Face, usize), usize> = HashMap::new();
    for f in [Face::Plus, Face::Minus] {
        let sub = face_sub(f);
        for chord in &sub.chords {
            let mut ids = Vec::with_capacity(chord.segments.len());
            for &fs in &chord.segments {
                let d = sub.seg_dart(fs, false);
                let id = segments.len();
                seg_global.insert((f, fs), id);
                ids.push(id);
                segments.push(Segment {
                    curve: chord.curve,
                    face: f,
                    arc: chord.arc,
                    cell_left: global_cell(f, sub.cell_of(d)),
                    cell_right: global_cell(f, sub.cell_of(sub.twin(d))),
                });
            }
            segments_by_arc.insert((chord.curve, chord.arc), ids);
        }
    }

    // ----- vertices with links -----
    let mut vertices: Vec<SurfVertex> = Vec::new();
    let mut end_at: HashMap<(CellRef, End), (usize, usize)> = HashMap::new();
    let push_vertex = |v: SurfVertex, end_at: &mut HashMap<(CellRef, End), (usize, usize)>,
                           vertices: &mut Vec<SurfVertex>|
     -> Result<usize> {
        let id = vertices.len();
        for (i, e) in v.ends.iter().enumerate() {
            if end_at.insert((e.cell, e.end), (id, i)).is_some() {
                return Err(Error::Internal("1-cell end attached to two vertices".into()));
            }
        }
        vertices.push(v);
        Ok(id)
    };

    // Corner sector cell: at the face copy of polygon corner c, the interior
    // sector is left of the forward boundary dart.
    let corner_cell = |f: Face, c: usize| -> usize {
        let sub = face_sub(f);
        global_cell(f, sub.cell_of(sub.fwd_dart(sub.corner_bp[c % m])))
    };

    // Edgelet lookup around a transit: the edgelets just below and just
    // above parameter `u` on edge `pos`.
    let edgelet_below_above = |pos: usize, u: &BigRational| -> Result<(usize, usize)> {
        let ids = &edgelets_by_pos[pos];
        for w in 0..ids.len() {
            if &edgelets[ids[w]].hi == u {
                return Ok((ids[w], ids[w + 1]));
            }
        }
        Err(Error::Internal("transit parameter is not an edgelet boundary".into()))
    };

    // Transit vertices.
    for (curve, word, _) in &words {
        for (t, transit) in word.transits.iter().enumerate() {
            let pos = transit.pos;
            let kind = model.label_at(pos).kind;
            let (lo_edgelet, hi_edgelet) = edgelet_below_above(pos, &transit.param)?;
            // The two chords at this transit: the arcs t-1 and t, one per
            // face.
            let len = word.len();
            let arcs = [(t + len - 1) % len, t];
            let seg_end = |f: Face| -> Result<(usize, End, Side, Side)> {
                let arc = if word.arc_face(arcs[0]) == f { arcs[0] } else { arcs[1] };
                debug_assert_eq!(word.arc_face(arc), f);
                let ids = &segments_by_arc[&(*curve, arc)];
                let is_start = arc == t;
                let (seg, end) = if is_start {
                    (ids[0], End::A)
                } else {
                    (*ids.last().unwrap(), End::B)
                };
                // Sector before this end is the low-angle side of the germ,
                // which is the left of the outgoing dart; translate to the
                // segment's own left/right. In the minus face the low-angle
                // side is the low-parameter side for e-edges and the
                // high-parameter side for s-edges.
                let left_of_germ: Side = if is_start { Side::First } else { Side::Second };
                let (before, after) = match (f, kind) {
                    // before-sector = low-param side = left of germ.
                    (Face::Plus, _) | (Face::Minus, EdgeKind::S) => {
                        // For Minus/S the before-sector is the
                        // high-parameter side, which is the low-angle side =
                        // left of germ; see below for the pairing.
                        (left_of_germ, left_of_germ.other())
                    }
                    // Minus face, e-edge: before-sector (high param side)
                    // is the high-angle side = right of germ.
                    (Face::Minus, EdgeKind::E) => (left_of_germ.other(), left_of_germ),
                };
                Ok((seg, end, before, after))
            };
            let (seg_p, end_p, before_p, after_p) = seg_end(Face::Plus)?;
            let (seg_m, end_m, before_m, after_m) = seg_end(Face::Minus)?;

            // Sector cells, from the face rotations at the corresponding
            // boundary points: [plus-lo, plus-hi, minus-hi, minus-lo] in
            // parameter terms.
            let cell_at = |f: Face, low_angle_side: bool| -> usize {
                let sub = face_sub(f);
                let bp = sub.transit_bp[&(*curve, t)];
                // rotation at a transit bpoint: [fwd, chord, bwd]; sector
                // after fwd is the high-angle side, after chord the
                // low-angle side.
                let rot = &sub.rotations[bp];
                let dart = if low_angle_side { rot[1] } else { rot[0] };
                global_cell(f, sub.cell_of(dart))
            };
            let plus_lo = cell_at(Face::Plus, true);
            let plus_hi = cell_at(Face::Plus, false);
            let (minus_lo, minus_hi) = match kind {
                EdgeKind::E => (cell_at(Face::Minus, true), cell_at(Face::Minus, false)),
                // s-edge: low parameter = high angle in the minus face.
                EdgeKind::S => (cell_at(Face::Minus, false), cell_at(Face::Minus, true)),
            };

            let v = SurfVertex {
                kind: VertexKind::Transit { curve: *curve, t },
                ends: vec![
                    LinkEnd {
                        cell: CellRef::Edgelet(lo_edgelet),
                        end: End::B,
                        before_side: Side::Second,
                        after_side: Side::First,
                    },
                    LinkEnd {
                        cell: CellRef::Segment(seg_p),
                        end: end_p,
                        before_side: before_p,
                        after_side: after_p,
                    },
                    LinkEnd {
                        cell: CellRef::Edgelet(hi_edgelet),
                        end: End::A,
                        before_side: Side::First,
                        after_side: Side::Second,
                    },
                    LinkEnd {
                        cell: CellRef::Segment(seg_m),
                        end: end_m,
                        before_side: before_m,
                        after_side: after_m,
                    },
                ],
                sectors: vec![plus_lo, plus_hi, minus_hi, minus_lo],
            };
            push_vertex(v, &mut end_at, &mut vertices)?;
        }
    }

    // Crossing vertices.
    for f in [Face::Plus, Face::Minus] {
        let sub = face_sub(f);
        for (xid, cross) in sub.crossings.iter().enumerate() {
            let vfid = sub.bpoints.len() + xid;
            let rot = &sub.rotations[vfid];
            let mut ends = Vec::with_capacity(4);
            let mut sectors = Vec::with_capacity(4);
            for &germ in rot {
                let rel = germ - 2 * sub.bpoints.len();
                let fs = rel / 2;
                let forward = rel % 2 == 0;
                let seg = seg_global[&(f, fs)];
                // After-sector is left of the germ: the segment's left side
                // when the germ points start-to-end.
                let (end, after) = if forward {
                    (End::A, Side::First)
                } else {
                    (End::B, Side::Second)
                };
                ends.push(LinkEnd {
                    cell: CellRef::Segment(seg),
                    end,
                    before_side: after.other(),
                    after_side: after,
                });
                sectors.push(global_cell(f, sub.cell_of(germ)));
            }
            let ca = &sub.chords[cross.chord_a];
            let cb = &sub.chords[cross.chord_b];
            let v = SurfVertex {
                kind: VertexKind::Crossing {
                    face: f,
                    curve_a: ca.curve,
                    arc_a: ca.arc,
                    curve_b: cb.curve,
                    arc_b: cb.arc,
                },
                ends,
                sectors,
            };
            push_vertex(v, &mut end_at, &mut vertices)?;
        }
    }

    // Model vertices.
    for mv in model.vertices() {
        match mv {
            ModelVertex::S(i) => {
                let p = model.s_position(i)?;
                let prev = (p + m - 1) % m;
                let next = (p + 1) % m;
                let ends = vec![
                    // Top end of the previous e-edge.
                    LinkEnd {
                        cell: CellRef::Edgelet(*edgelets_by_pos[prev].last().unwrap()),
                        end: End::B,
                        before_side: Side::Second,
                        after_side: Side::First,
                    },
                    // Low end of the s-edge.
                    LinkEnd {
                        cell: CellRef::Edgelet(edgelets_by_pos[p][0]),
                        end: End::A,
                        before_side: Side::First,
                        after_side: Side::Second,
                    },
                    // Low end of the next e-edge.
                    LinkEnd {
                        cell: CellRef::Edgelet(edgelets_by_pos[next][0]),
                        end: End::A,
                        before_side: Side::Second,
                        after_side: Side::First,
                    },
                    // Top end of the s-edge.
                    LinkEnd {
                        cell: CellRef::Edgelet(*edgelets_by_pos[p].last().unwrap()),
                        end: End::B,
                        before_side: Side::First,
                        after_side: Side::Second,
                    },
                ];
                let sectors = vec![
                    corner_cell(Face::Plus, p),
                    corner_cell(Face::Minus, p + 1),
                    corner_cell(Face::Plus, p + 1),
                    corner_cell(Face::Minus, p),
                ];
                push_vertex(
                    SurfVertex { kind: VertexKind::Model(mv), ends, sectors },
                    &mut end_at,
                    &mut vertices,
                )?;
            }
            ModelVertex::Z(k) => {
                let c = model.z_corner(k)?;
                let prev = (c + m - 1) % m;
                let ends = vec![
                    LinkEnd {
                        cell: CellRef::Edgelet(*edgelets_by_pos[prev].last().unwrap()),
                        end: End::B,
                        before_side: Side::Second,
                        after_side: Side::First,
                    },
                    LinkEnd {
                        cell: CellRef::Edgelet(edgelets_by_pos[c][0]),
                        end: End::A,
                        before_side: Side::First,
                        after_side: Side::Second,
                    },
                ];
                let sectors = vec![corner_cell(Face::Plus, c), corner_cell(Face::Minus, c)];
                push_vertex(
                    SurfVertex { kind: VertexKind::Model(mv), ends, sectors },
                    &mut end_at,
                    &mut vertices,
                )?;
            }
        }
    }

    let arr = Arrangement {
        model: model.clone(),
        curves: curves.to_vec(),
        cell_count,
        edgelets,
        segments,
        vertices,
        end_at,
        edgelets_by_pos,
        segments_by_arc,
        locus_curves,
    };
    arr.validate()?;
    Ok(arr)
}

impl Arrangement {
    /// The two side cells of a 1-cell.
    pub fn side_cell(&self, cell: CellRef, side: Side) -> usize {
        match cell {
            CellRef::Edgelet(id) => self.edgelets[id].side_cell(side),
            CellRef::Segment(id) => self.segments[id].side_cell(side),
        }
    }

    /// The vertex a 1-cell end is attached to, and the end's index in
    /// that vertex's link.
    pub fn end_vertex(&self, cell: CellRef, end: End) -> (usize, usize) {
        self.end_at[&(cell, end)]
    }

    /// The vertex at the head of a directed boundary dart.
    pub fn head_vertex(&self, d: &BDart) -> (usize, usize) {
        let head_end = if d.forward { End::B } else { End::A };
        self.end_at[&(d.cell, head_end)]
    }

    /// The vertex where word transit `t` of curve `curve` sits.
    pub fn transit_vertex(&self, curve: usize, t: usize) -> Option<usize> {
        self.vertices.iter().position(|v| match v.kind {
            VertexKind::Transit { curve: c, t: tt } => c == curve && tt == t,
            _ => false,
        })
    }

    /// How many transverse chord-crossing points the arrangement has.
    pub fn crossing_count(&self) -> usize {
        self.vertices
            .iter()
            .filter(|v| matches!(v.kind, VertexKind::Crossing { .. }))
            .count()
    }

    fn locus_of_pos(&self, pos: usize) -> Option<usize> {
        let label = self.model.label_at(pos);
        if label.kind != EdgeKind::S {
            return None;
        }
        self.locus_curves
            .iter()
            .find(|(_, i)| self.model.s_position(*i).ok() == Some(pos))
            .map(|(idx, _)| *idx)
    }

    /// Whether a 1-cell is cut: all curve segments, plus the edgelets of
    /// every crosscap-core locus in the curve family.
    pub fn is_cut(&self, cell: CellRef) -> bool {
        match cell {
            CellRef::Segment(_) => true,
            CellRef::Edgelet(id) => self.locus_of_pos(self.edgelets[id].pos).is_some(),
        }
    }

    /// The curve a cut 1-cell belongs to.
    pub fn cut_owner(&self, cell: CellRef) -> Option<usize> {
        match cell {
            CellRef::Segment(id) => Some(self.segments[id].curve),
            CellRef::Edgelet(id) => self.locus_of_pos(self.edgelets[id].pos),
        }
    }

    /// Structural validation: every sector cell must equal the matching
    /// side cell of its neighbouring 1-cell ends, and the closed surface
    /// must have the right Euler characteristic.
    fn validate(&self) -> Result<()> {
        for v in &self.vertices {
            let n = v.ends.len();
            if v.sectors.len() != n {
                return Err(Error::Internal("link sector/end count mismatch".into()));
            }
            for i in 0..n {
                let end = &v.ends[i];
                let after = v.sectors[i];
                let before = v.sectors[(i + n - 1) % n];
                if self.side_cell(end.cell, end.after_side) != after {
                    return Err(Error::Internal(format!(
                        "link end after-side cell mismatch at {:?}",
                        v.kind
                    )));
                }
                if self.side_cell(end.cell, end.before_side) != before {
                    return Err(Error::Internal(format!(
                        "link end before-side cell mismatch at {:?}",
                        v.kind
                    )));
                }
            }
        }
        // Every 1-cell end must be attached to exactly one vertex.
        let expected = 2 * (self.edgelets.len() + self.segments.len());
        if self.end_at.len() != expected {
            return Err(Error::Internal(format!(
                "{} of {} 1-cell ends attached",
                self.end_at.len(),
                expected
            )));
        }
        // Closed-surface Euler characteristic: 2 - g.
        let chi = self.vertices.len() as i64
            - (self.edgelets.len() + self.segments.len()) as i64
            + self.cell_count as i64;
        if chi != 2 - self.model.spec.genus as i64 {
            return Err(Error::Internal(format!(
                "glued complex has Euler characteristic {chi}, expected {}",
                2 - self.model.spec.genus as i64
            )));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------
// Cut analysis.
// ---------------------------------------------------------------------

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// A vertex copy after cutting: a maximal run of sectors between two cut
/// ends in the link (or the whole link when nothing at the vertex is cut).
#[derive(Debug, Clone)]
pub struct VertexCopy {
    pub vertex: usize,
    /// Sector indices of the run, in cyclic link order.
    pub sectors: Vec<usize>,
    /// Link-end indices bounding the run (`None` for an interior vertex).
    pub bounds: Option<(usize, usize)>,
    pub component: usize,
}

/// One directed boundary-circle dart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BDart {
    pub cell: CellRef,
    pub side: Side,
    /// Traversal direction: true = from end A toward end B.
    pub forward: bool,
}

/// One boundary circle of a cut component (one orientation of it).
#[derive(Debug, Clone)]
pub struct Circle {
    pub component: usize,
    pub darts: Vec<BDart>,
    /// Indices of the curves whose pieces make up this circle.
    pub owners: Vec<usize>,
}

/// One piece of the cut surface.
#[derive(Debug, Clone)]
pub struct Component {
    pub cells: Vec<usize>,
    /// Compact Euler characteristic, hole marks counted as interior points.
    pub euler: i64,
    pub orientable: bool,
    /// Hole marks z_k inside this piece.
    pub z_marks: Vec<u32>,
    /// Boundary circles created by the cutting (each geometric circle
    /// once).
    pub circles: Vec<Circle>,
    /// Genus: orientable genus if orientable, crosscap count otherwise,
    /// of the piece with its hole marks opened into boundary circles.
    pub genus: u32,
    /// Boundary circles of the compact piece including opened hole marks.
    pub boundary_count: u32,
}

pub struct Analysis {
    pub components: Vec<Component>,
    pub cell_component: Vec<usize>,
    pub vertex_copies: Vec<VertexCopy>,
    /// Map from (vertex, sector index) to the vertex copy containing it.
    pub copy_of_sector: HashMap<(usize, usize), usize>,
}

impl Arrangement {
    pub fn analyze(&self) -> Result<Analysis> {
        // ----- components: merge across non-cut edgelets -----
        let mut uf = UnionFind::new(self.cell_count);
        for (id, e) in self.edgelets.iter().enumerate() {
            if !self.is_cut(CellRef::Edgelet(id)) {
                uf.union(e.plus_cell, e.minus_cell);
            }
        }
        let mut comp_ids: HashMap<usize, usize> = HashMap::new();
        let mut cell_component = vec![0usize; self.cell_count];
        for cell in 0..self.cell_count {
            let root = uf.find(cell);
            let next = comp_ids.len();
            let comp = *comp_ids.entry(root).or_insert(next);
            cell_component[cell] = comp;
        }
        let comp_count = comp_ids.len();

        // ----- faces and interior edges per component -----
        let mut faces = vec![0i64; comp_count];
        for cell in 0..self.cell_count {
            faces[cell_component[cell]] += 1;
        }
        let mut edges = vec![0i64; comp_count];
        let mut boundary_darts_per_comp = vec![0i64; comp_count];
        for (id, e) in self.edgelets.iter().enumerate() {
            if self.is_cut(CellRef::Edgelet(id)) {
                boundary_darts_per_comp[cell_component[e.plus_cell]] += 1;
                boundary_darts_per_comp[cell_component[e.minus_cell]] += 1;
            } else {
                edges[cell_component[e.plus_cell]] += 1;
            }
        }
        for s in &self.segments {
            boundary_darts_per_comp[cell_component[s.cell_left]] += 1;
            boundary_darts_per_comp[cell_component[s.cell_right]] += 1;
        }
        for c in 0..comp_count {
            edges[c] += boundary_darts_per_comp[c];
        }

        // ----- vertex copies -----
        let mut vertex_copies: Vec<VertexCopy> = Vec::new();
        let mut copy_of_sector: HashMap<(usize, usize), usize> = HashMap::new();
        let mut verts = vec![0i64; comp_count];
        for (vid, v) in self.vertices.iter().enumerate() {
            let n = v.ends.len();
            let cut_ends: Vec<usize> =
                (0..n).filter(|&i| self.is_cut(v.ends[i].cell)).collect();
            let comp_of = |sector: usize| cell_component[v.sectors[sector]];
            if cut_ends.is_empty() {
                let comp = comp_of(0);
                for s in 1..n {
                    if comp_of(s) != comp {
                        return Err(Error::Internal(
                            "interior vertex with sectors in two components".into(),
                        ));
                    }
                }
                verts[comp] += 1;
                let id = vertex_copies.len();
                for s in 0..n {
                    copy_of_sector.insert((vid, s), id);
                }
                vertex_copies.push(VertexCopy {
                    vertex: vid,
                    sectors: (0..n).collect(),
                    bounds: None,
                    component: comp,
                });
            } else {
                for (pos, &a) in cut_ends.iter().enumerate() {
                    let b = cut_ends[(pos + 1) % cut_ends.len()];
                    // Run of sectors from end a forward to end b.
                    let mut sectors = Vec::new();
                    let mut s = a;
                    loop {
                        sectors.push(s);
                        let next_end = (s + 1) % n;
                        if next_end == b {
                            break;
                        }
                        s = next_end;
                        if sectors.len() > n {
                            return Err(Error::Internal("runaway sector run".into()));
                        }
                    }
                    let comp = comp_of(sectors[0]);
                    for &s in &sectors {
                        if comp_of(s) != comp {
                            return Err(Error::Internal(
                                "vertex run with sectors in two components".into(),
                            ));
                        }
                    }
                    verts[comp] += 1;
                    let id = vertex_copies.len();
                    for &s in &sectors {
                        copy_of_sector.insert((vid, s), id);
                    }
                    vertex_copies.push(VertexCopy {
                        vertex: vid,
                        sectors,
                        bounds: Some((a, b)),
                        component: comp,
                    });
                }
            }
        }

        // ----- orientability: parity BFS across non-cut edgelets -----
        // Crossing an e-edgelet flips local orientation, an s-edgelet does
        // not.
        let mut parity: Vec<Option<bool>> = vec![None; self.cell_count];
        let mut orientable = vec![true; comp_count];
        let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); self.cell_count];
        for (id, e) in self.edgelets.iter().enumerate() {
            if self.is_cut(CellRef::Edgelet(id)) {
                continue;
            }
            let flip = self.model.label_at(e.pos).kind == EdgeKind::E;
            adj[e.plus_cell].push((e.minus_cell, flip));
            adj[e.minus_cell].push((e.plus_cell, flip));
        }
        for start in 0..self.cell_count {
            if parity[start].is_some() {
                continue;
            }
            parity[start] = Some(false);
            let mut stack = vec![start];
            while let Some(c) = stack.pop() {
                let pc = parity[c].unwrap();
                for &(d, flip) in &adj[c] {
                    let pd = pc ^ flip;
                    match parity[d] {
                        None => {
                            parity[d] = Some(pd);
                            stack.push(d);
                        }
                        Some(existing) => {
                            if existing != pd {
                                orientable[cell_component[c]] = false;
                            }
                        }
                    }
                }
            }
        }

        // ----- hole marks -----
        let mut z_marks: Vec<Vec<u32>> = vec![Vec::new(); comp_count];
        for v in &self.vertices {
            if let VertexKind::Model(ModelVertex::Z(k)) = v.kind {
                let comp = cell_component[v.sectors[0]];
                z_marks[comp].push(k);
            }
        }
        for marks in &mut z_marks {
            marks.sort_unstable();
        }

        // ----- boundary circles -----
        let circles = self.trace_circles(&cell_component, &vertex_copies, &copy_of_sector)?;
        let mut comp_circles: Vec<Vec<Circle>> = vec![Vec::new(); comp_count];
        for c in circles {
            comp_circles[c.component].push(c);
        }

        // ----- assemble -----
        let mut components = Vec::with_capacity(comp_count);
        for comp in 0..comp_count {
            let euler = verts[comp] - edges[comp] + faces[comp];
            let b_cut = comp_circles[comp].len() as i64;
            let p = z_marks[comp].len() as i64;
            let chi_eff = euler - p;
            let b_eff = b_cut + p;
            let genus_raw = if orientable[comp] {
                let twice = 2 - chi_eff - b_eff;
                if twice % 2 != 0 || twice < 0 {
                    return Err(Error::Internal(format!(
                        "orientable piece with impossible genus data: chi = {chi_eff}, b = {b_eff}"
                    )));
                }
                twice / 2
            } else {
                let k = 2 - chi_eff - b_eff;
                if k <= 0 {
                    return Err(Error::Internal(format!(
                        "non-orientable piece with crosscap count {k}"
                    )));
                }
                k
            };
            components.push(Component {
                cells: (0..self.cell_count).filter(|&c| cell_component[c] == comp).collect(),
                euler,
                orientable: orientable[comp],
                z_marks: z_marks[comp].clone(),
                circles: comp_circles[comp].clone(),
                genus: genus_raw as u32,
                boundary_count: b_eff as u32,
            });
        }

        Ok(Analysis { components, cell_component, vertex_copies, copy_of_sector })
    }

    /// Walk directed boundary darts of the cut complex into circles; return
    /// each geometric circle once.
    fn trace_circles(
        &self,
        cell_component: &[usize],
        vertex_copies: &[VertexCopy],
        copy_of_sector: &HashMap<(usize, usize), usize>,
    ) -> Result<Vec<Circle>> {
        // All directed boundary darts.
        let mut all: Vec<BDart> = Vec::new();
        for id in 0..self.edgelets.len() {
            if self.is_cut(CellRef::Edgelet(id)) {
                for side in [Side::First, Side::Second] {
                    for forward in [true, false] {
                        all.push(BDart { cell: CellRef::Edgelet(id), side, forward });
                    }
                }
            }
        }
        for id in 0..self.segments.len() {
            for side in [Side::First, Side::Second] {
                for forward in [true, false] {
                    all.push(BDart { cell: CellRef::Segment(id), side, forward });
                }
            }
        }

        let next_dart = |d: &BDart| -> Result<BDart> {
            // Head end of the dart.
            let head_end = if d.forward { End::B } else { End::A };
            let &(vid, end_idx) = self
                .end_at
                .get(&(d.cell, head_end))
                .ok_or_else(|| Error::Internal("dangling 1-cell end".into()))?;
            let v = &self.vertices[vid];
            let n = v.ends.len();
            let end = &v.ends[end_idx];
            // Sector adjacent to the dart's side at this end.
            let sector = if end.after_side == d.side {
                end_idx
            } else if end.before_side == d.side {
                (end_idx + n - 1) % n
            } else {
                return Err(Error::Internal("dart side matches neither link side".into()));
            };
            let copy = &vertex_copies[copy_of_sector[&(vid, sector)]];
            let (a, b) = copy
                .bounds
                .ok_or_else(|| Error::Internal("boundary walk reached an interior vertex".into()))?;
            if a != end_idx && b != end_idx {
                return Err(Error::Internal("entered a vertex copy away from its bounds".into()));
            }
            // Exit along the other bound (or U-turn when a == b).
            let exit = if end_idx == a { b } else { a };
            let exit_end = &v.ends[exit];
            // Side of the exit 1-cell facing the run: the run's sector
            // adjacent to the exit end.
            let exit_side = if exit == a {
                // run starts with sector a, which is exit's after-sector
                exit_end.after_side
            } else {
                exit_end.before_side
            };
            let forward = exit_end.end == End::A;
            Ok(BDart { cell: exit_end.cell, side: exit_side, forward })
        };

        let mut seen: HashMap<BDart, bool> = HashMap::new();
        let mut orbits: Vec<Vec<BDart>> = Vec::new();
        for start in &all {
            if seen.contains_key(start) {
                continue;
            }
            let mut orbit = vec![*start];
            seen.insert(*start, true);
            let mut d = next_dart(start)?;
            while d != *start {
                if seen.contains_key(&d) {
                    return Err(Error::Internal("boundary orbits collided".into()));
                }
                seen.insert(d, true);
                orbit.push(d);
                d = next_dart(&d)?;
            }
            orbits.push(orbit);
        }

        // Pair each orbit with its reversal and keep one of the two.
        let canonical = |orbit: &[BDart]| -> Vec<(CellRef, Side)> {
            let mut key: Vec<(CellRef, Side)> =
                orbit.iter().map(|d| (d.cell, d.side)).collect();
            key.sort();
            key
        };
        let mut kept: Vec<Vec<BDart>> = Vec::new();
        let mut seen_keys: HashMap<Vec<(CellRef, Side)>, usize> = HashMap::new();
        for orbit in orbits {
            let key = canonical(&orbit);
            match seen_keys.get(&key) {
                None => {
                    seen_keys.insert(key, orbit.len());
                    kept.push(orbit);
                }
                Some(&len) => {
                    if len != orbit.len() {
                        return Err(Error::Internal("orbit reversal length mismatch".into()));
                    }
                }
            }
        }

        let mut circles = Vec::with_capacity(kept.len());
        for orbit in kept {
            // Component: the side cell of any dart.
            let comp = cell_component[self.side_cell(orbit[0].cell, orbit[0].side)];
            let mut owners: Vec<usize> = orbit
                .iter()
                .map(|d| {
                    self.cut_owner(d.cell)
                        .ok_or_else(|| Error::Internal("boundary dart on a non-cut cell".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            owners.sort_unstable();
            owners.dedup();
            for d in &orbit {
                if cell_component[self.side_cell(d.cell, d.side)] != comp {
                    return Err(Error::Internal("boundary circle crosses components".into()));
                }
            }
            circles.push(Circle { component: comp, darts: orbit, owners });
        }
        Ok(circles)
    }
}
