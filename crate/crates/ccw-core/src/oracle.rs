//! Brute-force crossing oracle: exact segment geometry on a concrete convex
//! polygon.
//!
//! Purpose: provide an intersection-number route that shares no reasoning
//! with the closed-form chord rules or the bigon-reduction engine. Curves
//! are drawn with the polygon realized concretely: vertex k of the m-gon is
//! placed at (k, k^2) on a parabola (so the vertices are in strictly convex
//! position), boundary points are linear interpolations along the edges,
//! arcs are straight segments, and crossings are counted with exact
//! rational orientation predicates. The minimal crossing number of a pair is
//! the minimum of the count over all ways to interleave the two curves'
//! transit points along shared edges (each curve's own order along an edge
//! is part of its isotopy class and stays fixed).
//!
//! Notes: the crosscap core loci are not drawn; their intersection numbers
//! are definitional (a curve meets the core of crosscap i once per s_i
//! transit, and the cores are pairwise disjoint, each meeting itself once).

use num::{BigInt, BigRational, One, Zero};

use crate::curves::{local_param, Face, Realized, Word};
use crate::surface_model::ModelPolygon;
use crate::{Error, Result};

type Pt = (BigRational, BigRational);

fn int(v: i64) -> BigRational {
    BigRational::from(BigInt::from(v))
}

/// Vertex k of the m-gon, on the parabola y = x^2.
fn polygon_vertex(k: usize) -> Pt {
    let k = k as i64;
    (int(k), int(k * k))
}

/// The point at local coordinate t along edge `pos` (from vertex pos to
/// vertex pos+1).
fn edge_point(model: &ModelPolygon, pos: usize, t: &BigRational) -> Pt {
    let m = model.edge_count();
    let (ax, ay) = polygon_vertex(pos % m);
    let (bx, by) = polygon_vertex((pos + 1) % m);
    let s = BigRational::one() - t;
    (&s * &ax + t * &bx, &s * &ay + t * &by)
}

/// Sign of the cross product (b - a) x (c - a).
fn orient(a: &Pt, b: &Pt, c: &Pt) -> i32 {
    let v = (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0);
    if v > BigRational::zero() {
        1
    } else if v < BigRational::zero() {
        -1
    } else {
        0
    }
}

/// Proper (interior, transversal) crossing of segments ab and cd.
fn segments_cross(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> bool {
    orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0
}

fn arc_endpoints(model: &ModelPolygon, w: &Word, k: usize, face: Face) -> (Pt, Pt) {
    let m = w.len();
    let t0 = &w.transits[k];
    let t1 = &w.transits[(k + 1) % m];
    let k0 = model.label_at(t0.pos).kind;
    let k1 = model.label_at(t1.pos).kind;
    (
        edge_point(model, t0.pos, &local_param(k0, face, &t0.param)),
        edge_point(model, t1.pos, &local_param(k1, face, &t1.param)),
    )
}

/// Count the crossings between the drawn arcs of two words with their
/// parameters exactly as given. Both words must have pairwise distinct
/// parameters on every edge they share.
pub fn fixed_position_crossings(model: &ModelPolygon, a: &Word, b: &Word) -> u64 {
    let mut total = 0u64;
    for ka in 0..a.len() {
        for kb in 0..b.len() {
            let fa = a.arc_face(ka);
            let fb = b.arc_face(kb);
            if fa != fb {
                continue;
            }
            let (p1, p2) = arc_endpoints(model, a, ka, fa);
            let (p3, p4) = arc_endpoints(model, b, kb, fb);
            if segments_cross(&p1, &p2, &p3, &p4) {
                total += 1;
            }
        }
    }
    total
}

/// All ways to choose which of `k + l` merged slots belong to the first
/// sequence, as boolean masks (true = first sequence).
fn interleavings(k: usize, l: usize) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    let mut mask = vec![false; k + l];
    fn rec(mask: &mut Vec<bool>, slot: usize, remaining: usize, out: &mut Vec<Vec<bool>>) {
        let total = mask.len();
        if remaining > total - slot {
            return;
        }
        if slot == total {
            out.push(mask.clone());
            return;
        }
        mask[slot] = false;
        rec(mask, slot + 1, remaining, out);
        if remaining > 0 {
            mask[slot] = true;
            rec(mask, slot + 1, remaining - 1, out);
            mask[slot] = false;
        }
    }
    rec(&mut mask, 0, k, &mut out);
    out
}

fn binomial(k: usize, l: usize) -> usize {
    let n = k + l;
    let r = k.min(l);
    let mut value = 1usize;
    for idx in 0..r {
        value = value.saturating_mul(n - idx) / (idx + 1);
    }
    value
}

/// Minimal crossing count between two words over all shared-edge
/// interleavings, with the configuration count capped by `budget`.
pub fn minimal_word_crossings(
    model: &ModelPolygon,
    a: &Word,
    b: &Word,
    budget: usize,
) -> Result<u64> {
    // Transit indices per shared edge, in increasing-parameter order.
    let mut shared: Vec<(usize, Vec<usize>, Vec<usize>)> = Vec::new();
    for pos in 0..model.edge_count() {
        let mut ia: Vec<usize> = (0..a.len()).filter(|&k| a.transits[k].pos == pos).collect();
        let mut ib: Vec<usize> = (0..b.len()).filter(|&k| b.transits[k].pos == pos).collect();
        if ia.is_empty() || ib.is_empty() {
            continue;
        }
        ia.sort_by(|&x, &y| a.transits[x].param.cmp(&a.transits[y].param));
        ib.sort_by(|&x, &y| b.transits[x].param.cmp(&b.transits[y].param));
        shared.push((pos, ia, ib));
    }

    let mut configs = 1usize;
    for (_, ia, ib) in &shared {
        configs = configs.saturating_mul(binomial(ia.len(), ib.len()));
        if configs > budget {
            return Err(Error::BudgetExceeded(format!(
                "{configs} shared-edge interleavings exceed the oracle budget of {budget}"
            )));
        }
    }

    let per_edge: Vec<Vec<Vec<bool>>> = shared
        .iter()
        .map(|(_, ia, ib)| interleavings(ia.len(), ib.len()))
        .collect();

    let mut best: Option<u64> = None;
    let mut choice = vec![0usize; shared.len()];
    loop {
        let mut wa = a.clone();
        let mut wb = b.clone();
        for (edge_idx, (_, ia, ib)) in shared.iter().enumerate() {
            let mask = &per_edge[edge_idx][choice[edge_idx]];
            let total = mask.len();
            let mut next_a = 0usize;
            let mut next_b = 0usize;
            for (slot, &is_a) in mask.iter().enumerate() {
                let param = BigRational::new(
                    BigInt::from(slot as i64 + 1),
                    BigInt::from(total as i64 + 1),
                );
                if is_a {
                    wa.transits[ia[next_a]].param = param;
                    next_a += 1;
                } else {
                    wb.transits[ib[next_b]].param = param;
                    next_b += 1;
                }
            }
        }
        let count = fixed_position_crossings(model, &wa, &wb);
        best = Some(best.map_or(count, |b| b.min(count)));

        // Advance the mixed-radix choice vector.
        let mut idx = 0;
        loop {
            if idx == shared.len() {
                return Ok(best.unwrap_or(0));
            }
            choice[idx] += 1;
            if choice[idx] < per_edge[idx].len() {
                break;
            }
            choice[idx] = 0;
            idx += 1;
        }
        if shared.is_empty() {
            return Ok(best.unwrap());
        }
    }
}

/// Minimal crossing count between two realized curves.
pub fn minimal_crossings(
    model: &ModelPolygon,
    a: &Realized,
    b: &Realized,
    budget: usize,
) -> Result<u64> {
    match (a, b) {
        (Realized::Locus { i }, Realized::Locus { i: k }) => Ok(u64::from(i == k)),
        (Realized::Locus { i }, Realized::Word(w)) | (Realized::Word(w), Realized::Locus { i }) => {
            Ok(w.transit_count_at(model.s_position(*i)?) as u64)
        }
        (Realized::Word(wa), Realized::Word(wb)) => minimal_word_crossings(model, wa, wb, budget),
    }
}

/// Self-intersection number of an embedded curve: 1 if one-sided, else 0.
pub fn self_intersection_number(model: &ModelPolygon, a: &Realized) -> u64 {
    u64::from(a.is_one_sided(model))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::Curve;
    use crate::surface_model::{build_model, SurfaceSpec};

    fn realized(model: &ModelPolygon, c: &Curve) -> Realized {
        c.realize(model).unwrap()
    }

    fn pair(model: &ModelPolygon, a: &Curve, b: &Curve) -> u64 {
        minimal_crossings(model, &realized(model, a), &realized(model, b), 10_000).unwrap()
    }

    #[test]
    fn orientation_predicate() {
        let a = (int(0), int(0));
        let b = (int(2), int(0));
        let c = (int(1), int(1));
        assert_eq!(orient(&a, &b, &c), 1);
        assert_eq!(orient(&b, &a, &c), -1);
        assert_eq!(orient(&a, &b, &(int(1), int(0))), 0);
    }

    #[test]
    fn segment_crossing_predicate() {
        let cross = segments_cross(
            &(int(0), int(0)),
            &(int(2), int(2)),
            &(int(0), int(2)),
            &(int(2), int(0)),
        );
        assert!(cross);
        let touch = segments_cross(
            &(int(0), int(0)),
            &(int(2), int(2)),
            &(int(1), int(1)),
            &(int(2), int(0)),
        );
        assert!(!touch);
    }

    #[test]
    fn interleaving_counts() {
        assert_eq!(interleavings(1, 1).len(), 2);
        assert_eq!(interleavings(2, 1).len(), 3);
        assert_eq!(interleavings(2, 2).len(), 6);
        assert_eq!(binomial(2, 2), 6);
    }

    // Frozen values, derived by hand from the polygon picture.

    #[test]
    fn frozen_pentagon_values() {
        let m = build_model(SurfaceSpec::new(0, 5)).unwrap();
        // Chords sharing an endpoint edge can be nested: disjoint.
        assert_eq!(pair(&m, &Curve::beta(1, 3), &Curve::beta(1, 4)), 0);
        assert_eq!(pair(&m, &Curve::beta(1, 3), &Curve::beta(3, 5)), 0);
        // Chords with interleaved endpoint edges cross twice (once per
        // face).
        assert_eq!(pair(&m, &Curve::beta(1, 3), &Curve::beta(2, 4)), 2);
        assert_eq!(pair(&m, &Curve::beta(1, 3), &Curve::beta(2, 5)), 2);
        assert_eq!(pair(&m, &Curve::beta(1, 4), &Curve::beta(2, 5)), 2);
    }

    #[test]
    fn frozen_one_sided_values() {
        let m = build_model(SurfaceSpec::new(1, 4)).unwrap();
        // Two one-sided arcs through the same crosscap always cross once.
        assert_eq!(pair(&m, &Curve::alpha_arc(1, 2), &Curve::alpha_arc(1, 3)), 1);
        assert_eq!(pair(&m, &Curve::alpha_arc(1, 2), &Curve::alpha_arc(1, 4)), 1);
        // Sharing an e-edge lets the chords nest.
        assert_eq!(pair(&m, &Curve::alpha_arc(1, 3), &Curve::beta(1, 3)), 0);
        // The crosscap core meets arcs through its crosscap once and
        // everything else not at all.
        assert_eq!(pair(&m, &Curve::alpha(1), &Curve::alpha_arc(1, 2)), 1);
        assert_eq!(pair(&m, &Curve::alpha(1), &Curve::beta(1, 3)), 0);
        assert_eq!(pair(&m, &Curve::alpha(1), &Curve::alpha(1)), 1);
    }

    #[test]
    fn frozen_two_crosscap_values() {
        let m = build_model(SurfaceSpec::new(2, 3)).unwrap();
        // Arcs through different crosscaps with interleaved endpoints cross
        // twice.
        assert_eq!(pair(&m, &Curve::alpha_arc(1, 2), &Curve::alpha_arc(2, 4)), 2);
        // Same pair of crosscaps, nested endpoints: disjoint.
        assert_eq!(pair(&m, &Curve::alpha_arc(1, 3), &Curve::alpha_arc(2, 3)), 0);
        assert_eq!(pair(&m, &Curve::alpha(1), &Curve::alpha(2)), 0);
        assert_eq!(pair(&m, &Curve::alpha(1), &Curve::alpha_arc(2, 4)), 0);
    }

    #[test]
    fn self_numbers() {
        let m = build_model(SurfaceSpec::new(2, 3)).unwrap();
        for (curve, expected) in [
            (Curve::alpha(1), 1),
            (Curve::alpha_arc(1, 3), 1),
            (Curve::beta(1, 3), 0),
        ] {
            let r = realized(&m, &curve);
            assert_eq!(self_intersection_number(&m, &r), expected, "{curve}");
        }
    }
}
