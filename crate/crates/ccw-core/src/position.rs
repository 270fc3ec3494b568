//! Minimal position for pairs and families of curves.
//!
//! Purpose: put transit words into minimal position with respect to a frozen
//! family of disjoint curves, count the crossings that survive, decide
//! isotopy of curve pairs, and place whole families so that they are
//! pairwise disjoint on the glued surface.
//!
//! Why this design: a pair of transverse simple closed curves realizes its
//! minimal crossing number exactly when the complement of their union has no
//! bigon piece — a disc bounded by one run of each curve meeting at two
//! distinct crossings.  The cut analysis of `arrangement` already produces
//! every complementary piece with its Euler characteristic, boundary circles
//! and puncture content, so a bigon is simply a piece with a recognizable
//! signature, and removing it is a local rewrite of the mobile word: the run
//! of the mobile curve bounding the bigon is replaced by a parallel copy of
//! the other curve's run, pushed to the flank away from the bigon.  Each
//! rewrite removes exactly two crossings, so the loop terminates and its
//! progress can be asserted.
//!
//! Notes: crossings with a crosscap core locus cannot be rewritten this way,
//! but they never need to be: a word's crossing count with a core is its
//! transit count on the glued s-edge, and counts 0 and 1 are already minimal
//! because the parity of the count is an invariant of the curve.  Words that
//! meet a core more than once are rejected as unsupported rather than
//! reported with an uncertified count.

use std::collections::HashMap;

use num::BigRational;

use crate::arrangement::{self, Analysis, Arrangement, CellRef, PlacedCurve, VertexKind};
use crate::curves::{rat, Face, Realized, Transit, Word};
use crate::surface_model::ModelPolygon;
use crate::{Error, Result};

/// Reassign every word parameter on every glued edge to evenly spaced
/// fractions, keeping the relative order of all marks (ties broken by curve
/// index, then transit index). Order-preserving reparameterization does not
/// change any curve or any crossing, but it guarantees that all marks are
/// distinct, which the arrangement builder requires.
fn place_all(model: &ModelPolygon, items: &[Realized]) -> Vec<Realized> {
    let _ = model;
    let mut out: Vec<Realized> = items.to_vec();
    let mut marks: HashMap<usize, Vec<(BigRational, usize, usize)>> = HashMap::new();
    for (ci, item) in out.iter().enumerate() {
        if let Realized::Word(w) = item {
            for (ti, t) in w.transits.iter().enumerate() {
                marks.entry(t.pos).or_default().push((t.param.clone(), ci, ti));
            }
        }
    }
    for (_, mut v) in marks {
        v.sort();
        let total = v.len() as i64;
        for (slot, (_, ci, ti)) in v.into_iter().enumerate() {
            if let Realized::Word(w) = &mut out[ci] {
                w.transits[ti].param = rat(slot as i64 + 1, total + 1);
            }
        }
    }
    out
}

/// How many cut 1-cells belong to curve `idx` in the arrangement: its word
/// segments, or the edgelets of its glued s-edge for a crosscap core.
fn piece_count(arr: &Arrangement, idx: usize) -> usize {
    let segs = arr.segments.iter().filter(|s| s.curve == idx).count();
    let edgelets = (0..arr.edgelets.len())
        .filter(|&eid| arr.cut_owner(CellRef::Edgelet(eid)) == Some(idx))
        .count();
    segs + edgelets
}

/// A mobile word in minimal position against a frozen family, together with
/// the final arrangement. `placed` lists the frozen curves first (orders
/// preserved, parameters reassigned coherently) and the reduced mobile word
/// last.
pub(crate) struct ReducedPair {
    pub placed: Vec<Realized>,
    pub arrangement: Arrangement,
    pub analysis: Analysis,
    pub crossings: u64,
}

/// Reduce `mobile` to minimal position against the pairwise disjoint frozen
/// family, by removing one innermost bigon at a time.
pub(crate) fn reduce_against(
    model: &ModelPolygon,
    frozen: &[Realized],
    mobile: &Word,
) -> Result<ReducedPair> {
    let mut w = mobile.skeleton_reduced();
    // Locus crossings are counted, not reduced; certify them up front.
    let mut locus_positions = Vec::new();
    for f in frozen {
        if let Realized::Locus { i } = f {
            let pos = model.s_position(*i)?;
            locus_positions.push(pos);
            if w.transit_count_at(pos) >= 2 {
                return Err(Error::Unsupported(format!(
                    "word crosses crosscap core {i} more than once; \
                     the count cannot be certified minimal"
                )));
            }
        }
    }
    let mobile_idx = frozen.len();
    // One coordinate frame for the whole loop: re-rank all marks once, and
    // keep every later rewrite in that same frame. Re-ranking per round would
    // move the frozen marks relative to the surgered mobile marks and could
    // flip a pushed-off strand to the wrong flank of the curve it parallels.
    let frozen_frame: Vec<Realized> = {
        let mut items: Vec<Realized> = frozen.to_vec();
        items.push(Realized::Word(w.clone()));
        let mut placed_once = place_all(model, &items);
        w = match placed_once.pop() {
            Some(Realized::Word(x)) => x,
            _ => return Err(Error::Internal("mobile curve is not a word".into())),
        };
        placed_once
    };
    let mut prev_crossings: Option<usize> = None;
    loop {
        let mut items: Vec<Realized> = frozen_frame.clone();
        items.push(Realized::Word(w.clone()));
        let placed: Vec<PlacedCurve> = items
            .iter()
            .enumerate()
            .map(|(ci, r)| PlacedCurve {
                realized: r.clone(),
                family: u8::from(ci == mobile_idx),
            })
            .collect();
        let arr = arrangement::build(model, &placed)?;
        let analysis = arr.analyze()?;
        let chord_crossings = arr.crossing_count();
        if let Some(p) = prev_crossings {
            if chord_crossings + 2 > p {
                return Err(Error::Internal(format!(
                    "bigon removal did not reduce crossings: {p} -> {chord_crossings}"
                )));
            }
        }
        match try_reduce(&arr, &analysis, mobile_idx)? {
            Some(next) => {
                // Each successful rewrite must drop the crossing count by at
                // least two (asserted above), so the loop runs at most half
                // the initial count of rounds.
                w = next.skeleton_reduced();
                prev_crossings = Some(chord_crossings);
            }
            None => {
                let locus_meets: usize = locus_positions
                    .iter()
                    .map(|&pos| w.transit_count_at(pos))
                    .sum();
                // Hand back an evenly re-ranked snapshot. Re-ranking the now
                // coherent family preserves the order of all marks, so the
                // crossing picture cannot change; assert that it did not.
                let items = place_all(model, &items);
                let placed: Vec<PlacedCurve> = items
                    .iter()
                    .enumerate()
                    .map(|(ci, r)| PlacedCurve {
                        realized: r.clone(),
                        family: u8::from(ci == mobile_idx),
                    })
                    .collect();
                let arr = arrangement::build(model, &placed)?;
                let analysis = arr.analyze()?;
                if arr.crossing_count() != chord_crossings {
                    return Err(Error::Internal(
                        "re-ranking a reduced family changed its crossings".into(),
                    ));
                }
                return Ok(ReducedPair {
                    placed: items,
                    arrangement: arr,
                    analysis,
                    crossings: (chord_crossings + locus_meets) as u64,
                });
            }
        }
    }
}

/// Find one bigon piece bounded by the mobile curve and a frozen curve, and
/// return the rewritten mobile word with that bigon removed. Returns `None`
/// when no such piece exists, i.e. the configuration is minimal.
fn try_reduce(arr: &Arrangement, an: &Analysis, mobile: usize) -> Result<Option<Word>> {
    let b_word = arr.curves[mobile]
        .realized
        .as_word()
        .ok_or_else(|| Error::Internal("mobile curve is not a word".into()))?;
    let len_b = b_word.len();
    for (comp_idx, comp) in an.components.iter().enumerate() {
        if comp.euler != 1
            || !comp.orientable
            || !comp.z_marks.is_empty()
            || comp.circles.len() != 1
        {
            continue;
        }
        let circle = &comp.circles[0];
        if circle.owners.len() != 2 || !circle.owners.contains(&mobile) {
            continue;
        }
        let l = circle.darts.len();
        let owners: Vec<usize> = circle
            .darts
            .iter()
            .map(|d| {
                arr.cut_owner(d.cell)
                    .ok_or_else(|| Error::Internal("boundary dart on a non-cut cell".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let corners: Vec<usize> = (0..l).filter(|&i| owners[i] != owners[(i + 1) % l]).collect();
        if corners.len() != 2 {
            continue;
        }
        let (i1, i2) = (corners[0], corners[1]);
        let (v1, _) = arr.head_vertex(&circle.darts[i1]);
        let (v2, _) = arr.head_vertex(&circle.darts[i2]);
        if v1 == v2 {
            // A disc whose two corners coincide witnesses two curves crossing
            // once, not a removable bigon.
            continue;
        }
        if !matches!(arr.vertices[v1].kind, VertexKind::Crossing { .. })
            || !matches!(arr.vertices[v2].kind, VertexKind::Crossing { .. })
        {
            continue;
        }
        // The two runs between the corners, in walk order.
        let run = |from: usize, to: usize| -> Vec<usize> {
            let mut d = Vec::new();
            let mut j = (from + 1) % l;
            loop {
                d.push(j);
                if j == to {
                    break;
                }
                j = (j + 1) % l;
            }
            d
        };
        let run1 = run(i1, i2);
        let run2 = run(i2, i1);
        let (b_run, a_run) = if owners[run1[0]] == mobile {
            (run1, run2)
        } else {
            (run2, run1)
        };
        let fixed = owners[a_run[0]];
        let a_word = match arr.curves[fixed].realized.as_word() {
            Some(w) => w,
            // Runs meeting at chord crossings always belong to words.
            None => return Err(Error::Internal("bigon run on a crosscap core".into())),
        };
        let len_a = a_word.len();
        // Mobile-run traversal direction and the transits it passes.
        let b_forward = match circle.darts[b_run[0]].cell {
            CellRef::Segment(_) => circle.darts[b_run[0]].forward,
            CellRef::Edgelet(_) => {
                return Err(Error::Internal("mobile run starts on an edgelet".into()))
            }
        };
        let walk_transits = |run: &[usize], curve: usize| -> Result<Vec<usize>> {
            let mut ts = Vec::new();
            for &j in &run[..run.len() - 1] {
                let (v, _) = arr.head_vertex(&circle.darts[j]);
                match arr.vertices[v].kind {
                    VertexKind::Transit { curve: c, t } if c == curve => ts.push(t),
                    _ => {
                        return Err(Error::Internal(
                            "bigon run passes through a foreign vertex".into(),
                        ))
                    }
                }
            }
            Ok(ts)
        };
        let b_ts = walk_transits(&b_run, mobile)?;
        let a_ts_walk = walk_transits(&a_run, fixed)?;
        let removed = b_ts.len();
        for j in 1..removed {
            let expected = if b_forward {
                (b_ts[j - 1] + 1) % len_b
            } else {
                (b_ts[j - 1] + len_b - 1) % len_b
            };
            if b_ts[j] != expected {
                return Err(Error::Internal("mobile run is not contiguous".into()));
            }
        }
        let kept_start = if removed > 0 {
            let block_end = if b_forward { *b_ts.last().unwrap() } else { b_ts[0] };
            (block_end + 1) % len_b
        } else {
            // Both corners lie on the same mobile arc; splice within it.
            let arc_of = |v: usize| -> Result<usize> {
                match arr.vertices[v].kind {
                    VertexKind::Crossing { curve_a, arc_a, curve_b, arc_b, .. } => {
                        if curve_a == mobile {
                            Ok(arc_a)
                        } else if curve_b == mobile {
                            Ok(arc_b)
                        } else {
                            Err(Error::Internal("corner does not involve the mobile curve".into()))
                        }
                    }
                    _ => Err(Error::Internal("corner is not a crossing".into())),
                }
            };
            let k1 = arc_of(v1)?;
            let k2 = arc_of(v2)?;
            if k1 != k2 {
                return Err(Error::Internal("empty mobile run spans two arcs".into()));
            }
            (k1 + 1) % len_b.max(1)
        };
        // Shadow: the fixed run's transits, ordered the way the rewritten
        // mobile curve traverses them, each pushed off to the flank of the
        // fixed curve away from the bigon.
        let mut shadow_src = a_ts_walk;
        if b_forward {
            shadow_src.reverse();
        }
        let third = rat(1, 3);
        let mut shadow: Vec<Transit> = Vec::with_capacity(shadow_src.len());
        for &t in &shadow_src {
            let tr = &a_word.transits[t];
            let v = arr
                .transit_vertex(fixed, t)
                .ok_or_else(|| Error::Internal("fixed run transit has no vertex".into()))?;
            let copy = an
                .vertex_copies
                .iter()
                .find(|c| c.vertex == v && c.component == comp_idx)
                .ok_or_else(|| {
                    Error::Internal("fixed run transit has no copy inside the bigon".into())
                })?;
            let lo_side = copy.sectors.iter().any(|&s| s == 0 || s == 3);
            let hi_side = copy.sectors.iter().any(|&s| s == 1 || s == 2);
            if lo_side == hi_side {
                return Err(Error::Internal("ambiguous flank at a bigon transit".into()));
            }
            let param = if lo_side {
                // Bigon below the fixed strand: push the copy upward.
                let hi = arr.edgelets_by_pos[tr.pos]
                    .iter()
                    .map(|&eid| &arr.edgelets[eid])
                    .find(|e| e.lo == tr.param)
                    .map(|e| e.hi.clone())
                    .ok_or_else(|| Error::Internal("no edgelet above a transit".into()))?;
                &tr.param + (hi - &tr.param) * &third
            } else {
                let lo = arr.edgelets_by_pos[tr.pos]
                    .iter()
                    .map(|&eid| &arr.edgelets[eid])
                    .find(|e| e.hi == tr.param)
                    .map(|e| e.lo.clone())
                    .ok_or_else(|| Error::Internal("no edgelet below a transit".into()))?;
                &tr.param - (&tr.param - lo) * &third
            };
            shadow.push(Transit::new(tr.pos, param));
        }
        // Splice: keep everything outside the removed block, then append the
        // shadow between the junction arcs.
        let keep = len_b - removed;
        let mut ts: Vec<Transit> = Vec::with_capacity(keep + shadow.len());
        for step in 0..keep {
            ts.push(b_word.transits[(kept_start + step) % len_b].clone());
        }
        ts.extend(shadow);
        let start_face = if keep > 0 {
            b_word.arc_face(kept_start)
        } else if shadow_src.len() >= 2 {
            let (a1, a2) = (shadow_src[0], shadow_src[1]);
            let arc = if a2 == (a1 + 1) % len_a { a1 } else { a2 };
            a_word.arc_face(arc)
        } else {
            Face::Plus
        };
        return Ok(Some(Word::new(ts, start_face)?));
    }
    Ok(None)
}

/// Minimal number of transverse crossings between two curves, i.e. their
/// geometric intersection number computed on the glued surface.
pub fn minimal_crossings(model: &ModelPolygon, a: &Realized, b: &Realized) -> Result<u64> {
    match (a, b) {
        (Realized::Locus { i }, Realized::Locus { i: k }) => Ok(u64::from(i == k)),
        (Realized::Locus { i }, Realized::Word(w))
        | (Realized::Word(w), Realized::Locus { i }) => {
            let pos = model.s_position(*i)?;
            let count = w.skeleton_reduced().transit_count_at(pos);
            if count <= 1 {
                Ok(count as u64)
            } else {
                Err(Error::Unsupported(format!(
                    "word crosses crosscap core {i} {count} times; \
                     the count cannot be certified minimal"
                )))
            }
        }
        (Realized::Word(wa), Realized::Word(wb)) => {
            let ra = wa.skeleton_reduced();
            let rb = wb.skeleton_reduced();
            if ra.is_empty() || rb.is_empty() {
                return Ok(0);
            }
            let red = reduce_against(model, &[Realized::Word(ra)], &rb)?;
            Ok(red.crossings)
        }
    }
}

/// Whether a minimal pair arrangement contains a disc bounded by one full
/// run of each curve, meeting at the unique crossing. Two one-sided curves
/// crossing once are isotopic exactly when such a disc exists.
fn has_witness_disc(arr: &Arrangement, an: &Analysis) -> bool {
    let totals = [piece_count(arr, 0), piece_count(arr, 1)];
    an.components.iter().any(|comp| {
        if comp.euler != 1
            || !comp.orientable
            || !comp.z_marks.is_empty()
            || comp.circles.len() != 1
        {
            return false;
        }
        let circle = &comp.circles[0];
        if circle.owners != vec![0, 1] {
            return false;
        }
        let owners: Vec<usize> = circle
            .darts
            .iter()
            .filter_map(|d| arr.cut_owner(d.cell))
            .collect();
        if owners.len() != circle.darts.len() {
            return false;
        }
        let l = owners.len();
        let corner_count = (0..l).filter(|&i| owners[i] != owners[(i + 1) % l]).count();
        let c0 = owners.iter().filter(|&&o| o == 0).count();
        let c1 = l - c0;
        corner_count == 2 && c0 == totals[0] && c1 == totals[1]
    })
}

/// Whether a disjoint pair arrangement contains an annulus piece bounded by
/// one full copy of each curve. Two disjoint two-sided curves are isotopic
/// exactly when such an annulus exists.
fn has_witness_annulus(arr: &Arrangement, an: &Analysis) -> bool {
    let totals = [piece_count(arr, 0), piece_count(arr, 1)];
    an.components.iter().any(|comp| {
        if comp.euler != 0
            || !comp.orientable
            || !comp.z_marks.is_empty()
            || comp.circles.len() != 2
        {
            return false;
        }
        let full = |circle: &arrangement::Circle, idx: usize| -> bool {
            circle.owners == vec![idx] && circle.darts.len() == totals[idx]
        };
        (full(&comp.circles[0], 0) && full(&comp.circles[1], 1))
            || (full(&comp.circles[0], 1) && full(&comp.circles[1], 0))
    })
}

/// Whether two curves are isotopic on the glued surface.
pub fn is_isotopic(model: &ModelPolygon, a: &Realized, b: &Realized) -> Result<bool> {
    let one_sided = a.is_one_sided(model);
    if one_sided != b.is_one_sided(model) {
        return Ok(false);
    }
    if let (Realized::Locus { i }, Realized::Locus { i: k }) = (a, b) {
        return Ok(i == k);
    }
    if let (Some(wa), Some(wb)) = (a.as_word(), b.as_word()) {
        if wa.skeleton_reduced().normal_form() == wb.skeleton_reduced().normal_form() {
            return Ok(true);
        }
    }
    // Put the pair in minimal position, keeping any crosscap core frozen.
    let (fixed, mobile) = if matches!(b, Realized::Locus { .. }) { (b, a) } else { (a, b) };
    let mobile_word = mobile
        .as_word()
        .ok_or_else(|| Error::Internal("mobile curve is not a word".into()))?;
    let red = reduce_against(model, &[fixed.clone()], mobile_word)?;
    if one_sided {
        Ok(red.crossings == 1 && has_witness_disc(&red.arrangement, &red.analysis))
    } else {
        Ok(red.crossings == 0 && has_witness_annulus(&red.arrangement, &red.analysis))
    }
}

/// Place a family of curves so that they are pairwise disjoint: each word is
/// reduced to minimal position against the already placed part of the
/// family, and any crossing that survives makes the family invalid. Returns
/// the placed family in input order.
pub fn place_family(model: &ModelPolygon, curves: &[Realized]) -> Result<Vec<Realized>> {
    // Crosscap cores are immovable; place them first.
    let mut order: Vec<usize> = (0..curves.len()).collect();
    order.sort_by_key(|&i| (u8::from(matches!(curves[i], Realized::Word(_))), i));
    let mut done: Vec<(usize, Realized)> = Vec::new();
    for &idx in &order {
        match &curves[idx] {
            Realized::Locus { i } => {
                if done
                    .iter()
                    .any(|(_, r)| matches!(r, Realized::Locus { i: k } if k == i))
                {
                    return Err(Error::VerificationFailed(format!(
                        "family lists crosscap core {i} twice"
                    )));
                }
                done.push((idx, curves[idx].clone()));
            }
            Realized::Word(w) => {
                let frozen: Vec<Realized> = done.iter().map(|(_, r)| r.clone()).collect();
                let red = reduce_against(model, &frozen, w)?;
                if red.crossings != 0 {
                    return Err(Error::VerificationFailed(format!(
                        "family curve {idx} still meets the rest of the family \
                         in {} points after reduction",
                        red.crossings
                    )));
                }
                done = done
                    .iter()
                    .enumerate()
                    .map(|(j, (oi, _))| (*oi, red.placed[j].clone()))
                    .collect();
                done.push((idx, red.placed[frozen.len()].clone()));
            }
        }
    }
    let mut out: Vec<Option<Realized>> = vec![None; curves.len()];
    for (oi, r) in done {
        out[oi] = Some(r);
    }
    Ok(out.into_iter().map(|r| r.expect("every curve placed")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::Curve;
    use crate::surface_model::{build_model, SurfaceSpec};

    fn realize(model: &ModelPolygon, c: &Curve) -> Realized {
        c.realize(model).expect("realizable")
    }

    #[test]
    fn sharing_an_edge_costs_nothing_after_reduction() {
        // On the five-holed sphere the chords from hole 1 to hole 3 and from
        // hole 1 to hole 4 share the glued edge around hole 1; any drawing
        // with both at distinct parameters crosses twice, and both crossings
        // cancel through one bigon.
        let model = build_model(SurfaceSpec { genus: 0, holes: 5 }).unwrap();
        let a = realize(&model, &Curve::beta(1, 3));
        let b = realize(&model, &Curve::beta(1, 4));
        assert_eq!(minimal_crossings(&model, &a, &b).unwrap(), 0);
    }

    #[test]
    fn crossing_chords_stay_crossed() {
        let model = build_model(SurfaceSpec { genus: 0, holes: 5 }).unwrap();
        let a = realize(&model, &Curve::beta(1, 3));
        let b = realize(&model, &Curve::beta(2, 4));
        assert_eq!(minimal_crossings(&model, &a, &b).unwrap(), 2);
    }

    #[test]
    fn parallel_copies_of_a_two_sided_curve_are_disjoint() {
        let model = build_model(SurfaceSpec { genus: 1, holes: 3 }).unwrap();
        let a = realize(&model, &Curve::beta(2, 4));
        assert_eq!(minimal_crossings(&model, &a, &a).unwrap(), 0);
    }

    #[test]
    fn parallel_copies_of_a_one_sided_curve_cross_once() {
        let model = build_model(SurfaceSpec { genus: 1, holes: 3 }).unwrap();
        let a = realize(&model, &Curve::alpha_arc(1, 2));
        assert_eq!(minimal_crossings(&model, &a, &a).unwrap(), 1);
    }

    #[test]
    fn one_crossing_one_sided_pairs_need_a_witness_disc() {
        // a_1^2 and a_1^3 both cross the crosscap core once, and they cross
        // each other once, but no disc run witnesses an isotopy.
        let model = build_model(SurfaceSpec { genus: 1, holes: 4 }).unwrap();
        let a = realize(&model, &Curve::alpha_arc(1, 2));
        let b = realize(&model, &Curve::alpha_arc(1, 3));
        assert_eq!(minimal_crossings(&model, &a, &b).unwrap(), 1);
        assert!(!is_isotopic(&model, &a, &b).unwrap());
        assert!(is_isotopic(&model, &a, &a).unwrap());
    }

    #[test]
    fn disjoint_two_sided_pairs_need_a_witness_annulus() {
        let model = build_model(SurfaceSpec { genus: 0, holes: 5 }).unwrap();
        let a = realize(&model, &Curve::beta(1, 3));
        let b = realize(&model, &Curve::beta(1, 4));
        assert!(!is_isotopic(&model, &a, &b).unwrap());
        assert!(is_isotopic(&model, &a, &a).unwrap());
    }

    #[test]
    fn arc_words_are_not_isotopic_to_the_core_locus() {
        let model = build_model(SurfaceSpec { genus: 1, holes: 4 }).unwrap();
        let locus = realize(&model, &Curve::alpha(1));
        let arc = realize(&model, &Curve::alpha_arc(1, 2));
        assert_eq!(minimal_crossings(&model, &locus, &arc).unwrap(), 1);
        assert!(!is_isotopic(&model, &locus, &arc).unwrap());
    }

    #[test]
    fn pants_family_on_the_five_holed_sphere_places_disjointly() {
        let model = build_model(SurfaceSpec { genus: 0, holes: 5 }).unwrap();
        let family = vec![
            realize(&model, &Curve::beta(1, 3)),
            realize(&model, &Curve::beta(1, 4)),
        ];
        let placed = place_family(&model, &family).unwrap();
        assert_eq!(placed.len(), 2);
        for r in &placed {
            assert!(matches!(r, Realized::Word(_)));
        }
    }

    #[test]
    fn crossing_family_is_rejected() {
        let model = build_model(SurfaceSpec { genus: 0, holes: 5 }).unwrap();
        let family = vec![
            realize(&model, &Curve::beta(1, 3)),
            realize(&model, &Curve::beta(2, 4)),
        ];
        assert!(matches!(
            place_family(&model, &family),
            Err(Error::VerificationFailed(_))
        ));
    }

    #[test]
    fn repeated_core_crossings_are_unsupported() {
        let model = build_model(SurfaceSpec { genus: 1, holes: 3 }).unwrap();
        let locus = Realized::Locus { i: 1 };
        let w = Word::new(
            vec![
                Transit::new(0, rat(1, 5)),
                Transit::new(1, rat(1, 2)),
                Transit::new(0, rat(4, 5)),
                Transit::new(2, rat(1, 2)),
            ],
            Face::Plus,
        )
        .unwrap();
        assert!(matches!(
            minimal_crossings(&model, &locus, &Realized::Word(w)),
            Err(Error::Unsupported(_))
        ));
    }
}
