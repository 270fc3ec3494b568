//! Geometric intersection numbers of named curves by closed-form chord
//! rules, with a dispatching entry point, and Dehn twists along two-sided
//! curves.
//!
//! Purpose: for the named curve families, the minimal crossing number
//! follows from the polygon picture directly. The crosscap cores are
//! pairwise disjoint and meet a word once per matching s-transit. Two
//! chord-words that share no edge cross twice if their endpoint edges
//! interleave around the polygon and not at all otherwise; two chords
//! through the same crosscap cross exactly once (the s-gluing forces one
//! crossing in exactly one face, whichever way the two s-points are
//! ordered); two chords sharing an e-edge can always be nested along that
//! edge and become disjoint.
//!
//! Why this design: these rules are a route to the intersection number that
//! is independent of both the drawing oracle and the bigon-reduction
//! engine, so the three can be checked against each other.
//!
//! Notes: the twist reroutes the target around a collar of the twisting
//! curve. Every rerouted strand is a line of the same slope in collar
//! coordinates (position along the twisting curve against collar height),
//! so the strands are pairwise disjoint and the rerouted word is embedded
//! by construction; this is asserted, not assumed.

use std::collections::HashMap;

use num::rational::BigRational;
use num::{BigInt, One};
use serde::{Deserialize, Serialize};

use crate::arrangement::{CellRef, End, VertexKind};
use crate::curves::{rat, transit_angle, Curve, Face, Realized, Transit, Word};
use crate::surface_model::{EdgeKind, ModelPolygon, SurfaceSpec};
use crate::{oracle, position, Error, Result};

/// Which route produced an intersection number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ChordCalculus,
    Reduction,
    Oracle,
}

/// An intersection number together with the route that computed it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionResult {
    pub value: u64,
    pub method: Method,
}

/// Whether the closed position pairs {a1, a2} and {b1, b2} interleave
/// cyclically (exactly one of b1, b2 lies strictly between a1 and a2).
fn positions_interleave(a1: usize, a2: usize, b1: usize, b2: usize) -> bool {
    let (lo, hi) = if a1 < a2 { (a1, a2) } else { (a2, a1) };
    let inside = |x: usize| x > lo && x < hi;
    inside(b1) != inside(b2)
}

/// Closed-form intersection number for named curves; `None` when either
/// argument is a general word (those go through the reduction engine).
pub fn chord_calculus(model: &ModelPolygon, a: &Curve, b: &Curve) -> Result<Option<u64>> {
    a.validate(model.spec)?;
    b.validate(model.spec)?;
    if matches!(a, Curve::General { .. }) || matches!(b, Curve::General { .. }) {
        return Ok(None);
    }
    if a == b {
        // Self-intersection: 1 for one-sided curves, 0 for two-sided.
        let value = match a {
            Curve::Alpha { .. } | Curve::AlphaArc { .. } => 1,
            Curve::Beta { .. } => 0,
            Curve::General { .. } => unreachable!(),
        };
        return Ok(Some(value));
    }
    let value = match (a, b) {
        (Curve::Alpha { i }, Curve::Alpha { i: k }) => u64::from(i == k),
        (Curve::Alpha { i }, Curve::AlphaArc { i: k, .. })
        | (Curve::AlphaArc { i: k, .. }, Curve::Alpha { i }) => u64::from(i == k),
        (Curve::Alpha { .. }, Curve::Beta { .. }) | (Curve::Beta { .. }, Curve::Alpha { .. }) => 0,
        (Curve::AlphaArc { i, j }, Curve::AlphaArc { i: k, j: l }) => {
            if i == k {
                // Both chords pass through crosscap i: one forced crossing.
                1
            } else if j == l {
                // Shared e-edge: nest along it.
                0
            } else {
                let p1 = model.s_position(*i)?;
                let p2 = model.e_position(*j)?;
                let q1 = model.s_position(*k)?;
                let q2 = model.e_position(*l)?;
                2 * u64::from(positions_interleave(p1, p2, q1, q2))
            }
        }
        (Curve::AlphaArc { i, j }, Curve::Beta { i: k, j: l })
        | (Curve::Beta { i: k, j: l }, Curve::AlphaArc { i, j }) => {
            if j == k || j == l {
                0
            } else {
                let p1 = model.s_position(*i)?;
                let p2 = model.e_position(*j)?;
                let q1 = model.e_position(*k)?;
                let q2 = model.e_position(*l)?;
                2 * u64::from(positions_interleave(p1, p2, q1, q2))
            }
        }
        (Curve::Beta { i, j }, Curve::Beta { i: k, j: l }) => {
            if i == k || i == l || j == k || j == l {
                0
            } else {
                let p1 = model.e_position(*i)?;
                let p2 = model.e_position(*j)?;
                let q1 = model.e_position(*k)?;
                let q2 = model.e_position(*l)?;
                2 * u64::from(positions_interleave(p1, p2, q1, q2))
            }
        }
        (Curve::General { .. }, _) | (_, Curve::General { .. }) => unreachable!(),
    };
    Ok(Some(value))
}

/// Intersection number via the drawing oracle.
pub fn intersection_oracle(model: &ModelPolygon, a: &Curve, b: &Curve) -> Result<IntersectionResult> {
    let ra = a.realize(model)?;
    let rb = b.realize(model)?;
    let value = if a == b {
        oracle::self_intersection_number(model, &ra)
    } else {
        oracle::minimal_crossings(model, &ra, &rb, 10_000)?
    };
    Ok(IntersectionResult { value, method: Method::Oracle })
}

/// Intersection number via placement and bigon reduction.
pub fn intersection_reduction(
    model: &ModelPolygon,
    a: &Curve,
    b: &Curve,
) -> Result<IntersectionResult> {
    let ra = a.realize(model)?;
    let rb = b.realize(model)?;
    let value = if a == b {
        oracle::self_intersection_number(model, &ra)
    } else {
        position::minimal_crossings(model, &ra, &rb)?
    };
    Ok(IntersectionResult { value, method: Method::Reduction })
}

/// Main entry point: named pairs use the closed-form rules, anything else
/// goes through placement and bigon reduction.
pub fn intersect(model: &ModelPolygon, a: &Curve, b: &Curve) -> Result<IntersectionResult> {
    if let Some(value) = chord_calculus(model, a, b)? {
        return Ok(IntersectionResult { value, method: Method::ChordCalculus });
    }
    intersection_reduction(model, a, b)
}

/// Intersection number on the surface (g, n) without constructing the model
/// by hand.
pub fn intersect_on(spec: SurfaceSpec, a: &Curve, b: &Curve) -> Result<IntersectionResult> {
    let model = crate::surface_model::build_model(spec)?;
    intersect(&model, a, b)
}

/// Convenience predicate: the two curves have disjoint representatives.
pub fn disjoint(model: &ModelPolygon, a: &Curve, b: &Curve) -> Result<bool> {
    Ok(intersect(model, a, b)?.value == 0)
}

// ---------------------------------------------------------------------
// Dehn twists.
// ---------------------------------------------------------------------

/// Sign of d(angle)/d(param) for a glued-edge point as seen from one face:
/// the s-gluing reverses the minus-face coordinate, e-gluings do not.
fn angle_direction(model: &ModelPolygon, pos: usize, face: Face) -> i64 {
    if model.label_at(pos).kind == EdgeKind::S && face == Face::Minus {
        -1
    } else {
        1
    }
}

/// Whether x lies strictly inside the open counterclockwise boundary arc
/// from a to b. All angles live in [0, edge count), so the arc may wrap.
fn between_ccw(a: &BigRational, x: &BigRational, b: &BigRational) -> bool {
    if a < b {
        x > a && x < b
    } else {
        x > a || x < b
    }
}

/// Collar side pattern of a word: sign[j] says on which side of transit j
/// (in glued parameters) the chosen collar side sits. A chord pushed off a
/// word chord must displace its two endpoint angles in opposite rotational
/// directions to stay parallel, which propagates the signs along the word.
/// For a two-sided word the pattern closes up around the cycle; for a
/// one-sided word it cannot, and there is no well-defined twist.
fn collar_signs(model: &ModelPolygon, w: &Word) -> Result<Vec<i64>> {
    let q = w.len();
    let mut sign = vec![1i64; q];
    for j in 0..q {
        let f = w.arc_face(j);
        let here = angle_direction(model, w.transits[j].pos, f);
        let next = angle_direction(model, w.transits[(j + 1) % q].pos, f);
        let propagated = -sign[j] * here * next;
        if j + 1 < q {
            sign[j + 1] = propagated;
        } else if propagated != sign[0] {
            return Err(Error::InvalidCurve(
                "cannot twist along a one-sided curve: its collar does not close up".into(),
            ));
        }
    }
    Ok(sign)
}

/// Reroute the reduced mobile word of `red` around the frozen word `power`
/// times at every crossing. At a crossing on frozen arc `m`, one positive
/// turn crosses the frozen transits m+1, m+2, ..., once around; a negative
/// turn runs the other way starting at transit m. The r-th rerouted pass
/// sits at collar height 2(r - phase)/steps - 1, so all strands of all
/// crossings are parallel lines in collar coordinates and never meet.
fn reroute_around(
    model: &ModelPolygon,
    red: &position::ReducedPair,
    power: i64,
) -> Result<Word> {
    debug_assert!(power != 0);
    debug_assert_eq!(red.placed.len(), 2);
    let internal = |msg: &str| Error::Internal(format!("twist rerouting: {msg}"));
    let about = red.placed[0]
        .as_word()
        .ok_or_else(|| internal("the twisting curve is not a word"))?
        .clone();
    let target = red.placed[1]
        .as_word()
        .ok_or_else(|| internal("the target curve is not a word"))?
        .clone();
    let arr = &red.arrangement;
    let q = about.len();
    let signs = collar_signs(model, &about)?;

    // Free space around each frozen transit on its glued edge: half the
    // smaller gap to the neighbouring marks, taken from the arrangement's
    // edge subdivision. All rerouted passes stay inside these windows.
    let mut gaps: Vec<BigRational> = Vec::with_capacity(q);
    for t in &about.transits {
        let mut below: Option<BigRational> = None;
        let mut above: Option<BigRational> = None;
        for &id in &arr.edgelets_by_pos[t.pos] {
            let e = &arr.edgelets[id];
            if e.hi == t.param {
                below = Some(e.lo.clone());
            }
            if e.lo == t.param {
                above = Some(e.hi.clone());
            }
        }
        let below = below.ok_or_else(|| internal("no edge piece below a transit"))?;
        let above = above.ok_or_else(|| internal("no edge piece above a transit"))?;
        let lo_gap = &t.param - below;
        let hi_gap = above - &t.param;
        let gap = if lo_gap < hi_gap { lo_gap } else { hi_gap };
        gaps.push(gap * rat(1, 2));
    }

    // Crossing vertices in order along each target arc (a segment's B end
    // is the crossing between it and the next segment of the same chord).
    let lt = target.len();
    let mut by_target_arc: Vec<Vec<usize>> = vec![Vec::new(); lt];
    for (c, row) in by_target_arc.iter_mut().enumerate() {
        if let Some(segs) = arr.segments_by_arc.get(&(1usize, c)) {
            for &seg in segs.iter().take(segs.len().saturating_sub(1)) {
                let (v, _) = arr.end_vertex(CellRef::Segment(seg), End::B);
                row.push(v);
            }
        }
    }

    // Crossing order along the frozen word, and from it a distinct phase in
    // (0, 1) per crossing. Phases keep the order of crossings sharing an
    // arc, so the rerouted passes stack at each frozen transit exactly as
    // the continuous picture stacks them.
    let mut w_rank: HashMap<usize, (usize, usize)> = HashMap::new();
    for mw in 0..q {
        if let Some(segs) = arr.segments_by_arc.get(&(0usize, mw)) {
            for (r, &seg) in segs.iter().take(segs.len().saturating_sub(1)).enumerate() {
                let (v, _) = arr.end_vertex(CellRef::Segment(seg), End::B);
                w_rank.insert(v, (mw, r));
            }
        }
    }
    let total = w_rank.len();
    debug_assert_eq!(total as u64, red.crossings);
    let mut order: Vec<usize> = w_rank.keys().copied().collect();
    order.sort_by_key(|v| w_rank[v]);
    let phase_of: HashMap<usize, BigRational> = order
        .iter()
        .enumerate()
        .map(|(gi, &v)| (v, rat(gi as i64 + 1, total as i64 + 1)))
        .collect();

    let steps = power.unsigned_abs() as usize * q;
    let steps_rat = BigRational::from(BigInt::from(steps as i64));

    let mut out: Vec<Transit> = Vec::new();
    for c in 0..lt {
        out.push(target.transits[c].clone());
        for &v in &by_target_arc[c] {
            let (face, w_arc) = match arr.vertices[v].kind {
                VertexKind::Crossing { face, curve_a, arc_a, curve_b, arc_b } => {
                    if curve_a == 0 && curve_b == 1 {
                        debug_assert_eq!(arc_b, c);
                        (face, arc_a)
                    } else if curve_a == 1 && curve_b == 0 {
                        debug_assert_eq!(arc_a, c);
                        (face, arc_b)
                    } else {
                        return Err(internal("crossing between unexpected curves"));
                    }
                }
                _ => return Err(internal("segment end is not a crossing")),
            };
            // Which collar side the target enters this crossing from: the
            // chord start of its arc sits strictly on the entry side of the
            // frozen chord, and the plus collar side is the side reached by
            // rotating the frozen chord start by sign[w_arc].
            let wa = transit_angle(model, &about.transits[w_arc], face);
            let wb = transit_angle(model, &about.transits[(w_arc + 1) % q], face);
            let ge = transit_angle(model, &target.transits[c], face);
            let plus_is_ccw =
                angle_direction(model, about.transits[w_arc].pos, face) * signs[w_arc] > 0;
            let entry_plus = between_ccw(&wa, &ge, &wb) == plus_is_ccw;
            let phase = if power > 0 {
                phase_of[&v].clone()
            } else {
                BigRational::one() - &phase_of[&v]
            };
            let insert_pass = |r: usize, out: &mut Vec<Transit>| {
                let j = if power > 0 {
                    (w_arc + r) % q
                } else {
                    (w_arc + 1 + steps - r) % q
                };
                let height = rat(2, 1) * (BigRational::from(BigInt::from(r as i64)) - &phase)
                    / &steps_rat
                    - BigRational::one();
                let offset = height * BigRational::from(BigInt::from(signs[j])) * &gaps[j];
                out.push(Transit::new(
                    about.transits[j].pos,
                    &about.transits[j].param + offset,
                ));
            };
            // Entering from the minus side, the twisted strand runs from
            // collar height -1 upward (passes in increasing order); from
            // the plus side it runs downward through the same passes.
            if entry_plus {
                for r in (1..=steps).rev() {
                    insert_pass(r, &mut out);
                }
            } else {
                for r in 1..=steps {
                    insert_pass(r, &mut out);
                }
            }
        }
    }
    let word = Word::new(out, target.start_face)?;
    if !word.is_embedded(model) {
        return Err(internal("the rerouted word has a self-crossing"));
    }
    Ok(word.skeleton_reduced())
}

/// Dehn twist of `target` along the two-sided curve `about`, applied
/// `power` times (negative powers twist the other way). The result is the
/// input curve itself whenever nothing needs to move: zero power, or a
/// target disjoint from the twisting curve.
pub fn dehn_twist(
    model: &ModelPolygon,
    target: &Curve,
    about: &Curve,
    power: i64,
) -> Result<Curve> {
    let about_realized = about.realize(model)?;
    let about_word = match &about_realized {
        Realized::Locus { .. } => {
            return Err(Error::InvalidCurve(
                "cannot twist along a one-sided curve: a crosscap core has no collar".into(),
            ))
        }
        Realized::Word(w) => {
            if w.is_one_sided(model) {
                return Err(Error::InvalidCurve(
                    "cannot twist along a one-sided curve: its collar does not close up".into(),
                ));
            }
            w
        }
    };
    let target_word = match target.realize(model)? {
        Realized::Locus { i } => {
            let pos = model.s_position(i)?;
            if about_word.transit_count_at(pos) == 0 {
                return Ok(target.clone());
            }
            return Err(Error::Unsupported(
                "twisting a crosscap core along a curve that meets it is not supported".into(),
            ));
        }
        Realized::Word(w) => w,
    };
    if power == 0 {
        return Ok(target.clone());
    }
    let red = position::reduce_against(model, &[about_realized], &target_word)?;
    if red.crossings == 0 {
        return Ok(target.clone());
    }
    let word = reroute_around(model, &red, power)?;
    Ok(Curve::from_word(model, &word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface_model::{build_model, SurfaceSpec};

    fn calc(model: &ModelPolygon, a: &Curve, b: &Curve) -> u64 {
        chord_calculus(model, a, b).unwrap().expect("named pair")
    }

    #[test]
    fn pentagon_pattern() {
        let m = build_model(SurfaceSpec::new(0, 5)).unwrap();
        let b = |i, j| Curve::beta(i, j);
        assert_eq!(calc(&m, &b(1, 3), &b(1, 4)), 0);
        assert_eq!(calc(&m, &b(1, 3), &b(3, 5)), 0);
        assert_eq!(calc(&m, &b(1, 3), &b(2, 4)), 2);
        assert_eq!(calc(&m, &b(1, 3), &b(2, 5)), 2);
        // b_2^4 and b_3^5 share no edge and interleave: a pentagon non-edge.
        assert_eq!(calc(&m, &b(2, 4), &b(3, 5)), 2);
        assert_eq!(calc(&m, &b(2, 5), &b(3, 5)), 0);
    }

    #[test]
    fn crosscap_rules() {
        let m = build_model(SurfaceSpec::new(2, 3)).unwrap();
        assert_eq!(calc(&m, &Curve::alpha(1), &Curve::alpha(1)), 1);
        assert_eq!(calc(&m, &Curve::alpha(1), &Curve::alpha(2)), 0);
        assert_eq!(calc(&m, &Curve::alpha(1), &Curve::alpha_arc(1, 3)), 1);
        assert_eq!(calc(&m, &Curve::alpha(1), &Curve::alpha_arc(2, 4)), 0);
        assert_eq!(calc(&m, &Curve::alpha(2), &Curve::beta(1, 3)), 0);
        assert_eq!(calc(&m, &Curve::alpha_arc(1, 2), &Curve::alpha_arc(1, 4)), 1);
        assert_eq!(calc(&m, &Curve::alpha_arc(1, 2), &Curve::alpha_arc(2, 4)), 2);
        assert_eq!(calc(&m, &Curve::alpha_arc(1, 3), &Curve::alpha_arc(2, 3)), 0);
    }

    #[test]
    fn zero_power_and_disjoint_twists_are_identities() {
        let m = build_model(SurfaceSpec::new(1, 3)).unwrap();
        // a_1^3 and b_1^3 share the edge e_3 and are disjoint.
        let arc = Curve::alpha_arc(1, 3);
        let beta = Curve::beta(1, 3);
        assert_eq!(intersect(&m, &arc, &beta).unwrap().value, 0);
        assert_eq!(dehn_twist(&m, &arc, &beta, 1).unwrap(), arc);
        assert_eq!(dehn_twist(&m, &arc, &beta, -2).unwrap(), arc);
        // The crosscap core never meets a chord between e-edges.
        let core = Curve::alpha(1);
        assert_eq!(dehn_twist(&m, &core, &beta, 1).unwrap(), core);
        // Zero power fixes even a crossing pair.
        let crossing = Curve::alpha_arc(1, 2);
        assert_eq!(intersect(&m, &crossing, &beta).unwrap().value, 2);
        assert_eq!(dehn_twist(&m, &crossing, &beta, 0).unwrap(), crossing);
        // Twisting a disjoint curve keeps intersection numbers in place.
        let twisted = dehn_twist(&m, &arc, &beta, 1).unwrap();
        assert_eq!(intersect(&m, &twisted, &arc).unwrap().value, 1);
        assert_eq!(intersection_oracle(&m, &twisted, &arc).unwrap().value, 1);
    }

    #[test]
    fn rejects_one_sided_twisting_curves() {
        let m = build_model(SurfaceSpec::new(1, 3)).unwrap();
        let target = Curve::beta(1, 3);
        assert!(dehn_twist(&m, &target, &Curve::alpha(1), 1).is_err());
        assert!(dehn_twist(&m, &target, &Curve::alpha_arc(1, 2), 1).is_err());
    }

    #[test]
    fn twisted_crossing_numbers_match_the_drawing_oracle() {
        let m = build_model(SurfaceSpec::new(1, 3)).unwrap();
        // (target, twisting curve, power, crossings of the image with the
        // original target). The targets meet each twisting curve twice, so
        // the images must stay within i(target, target) of 4|power|.
        let cases = [
            (Curve::alpha_arc(1, 2), Curve::beta(1, 3), 1i64, 3u64),
            (Curve::alpha_arc(1, 2), Curve::beta(1, 3), -1, 3),
            (Curve::alpha_arc(1, 2), Curve::beta(1, 3), 2, 7),
            (Curve::alpha_arc(1, 2), Curve::beta(1, 3), -2, 7),
            (Curve::beta(2, 4), Curve::beta(1, 3), 1, 4),
            (Curve::beta(2, 4), Curve::beta(1, 3), 2, 8),
            (Curve::alpha_arc(1, 3), Curve::beta(2, 4), 1, 3),
            (Curve::alpha_arc(1, 3), Curve::beta(2, 4), 2, 7),
        ];
        for (target, about, power, expected) in cases {
            let image = dehn_twist(&m, &target, &about, power).unwrap();
            let engine = intersect(&m, &image, &target).unwrap();
            assert_eq!(engine.method, Method::Reduction);
            assert_eq!(engine.value, expected, "{target} about {about} power {power}");
            let check = intersection_oracle(&m, &image, &target).unwrap().value;
            assert_eq!(check, expected, "oracle disagrees: {target} about {about}");
            // A homeomorphism supported off its own core keeps the count
            // with the twisting curve itself.
            let vs_about = intersect(&m, &image, &about).unwrap().value;
            assert_eq!(vs_about, intersect(&m, &target, &about).unwrap().value);
        }
    }

    #[test]
    fn twists_invert() {
        let m = build_model(SurfaceSpec::new(1, 3)).unwrap();
        for (target, about) in [
            (Curve::alpha_arc(1, 2), Curve::beta(1, 3)),
            (Curve::beta(2, 4), Curve::beta(1, 3)),
            (Curve::alpha_arc(1, 3), Curve::beta(2, 4)),
        ] {
            for power in [1i64, 2] {
                let image = dehn_twist(&m, &target, &about, power).unwrap();
                let back = dehn_twist(&m, &image, &about, -power).unwrap();
                let same = crate::position::is_isotopic(
                    &m,
                    &back.realize(&m).unwrap(),
                    &target.realize(&m).unwrap(),
                )
                .unwrap();
                assert!(same, "{target} about {about} power {power} did not invert");
            }
        }
    }

    #[test]
    fn simultaneous_twists_preserve_intersection_numbers() {
        let m = build_model(SurfaceSpec::new(1, 3)).unwrap();
        let family = [
            Curve::alpha(1),
            Curve::alpha_arc(1, 2),
            Curve::alpha_arc(1, 3),
            Curve::beta(1, 3),
            Curve::beta(2, 4),
        ];
        for about in [Curve::beta(1, 3), Curve::beta(2, 4)] {
            for power in [-1i64, 1] {
                let images: Vec<Curve> = family
                    .iter()
                    .map(|c| dehn_twist(&m, c, &about, power).unwrap())
                    .collect();
                for x in 0..family.len() {
                    for y in x..family.len() {
                        let before = intersect(&m, &family[x], &family[y]).unwrap().value;
                        let after = intersect(&m, &images[x], &images[y]).unwrap().value;
                        assert_eq!(
                            before, after,
                            "{} vs {} about {about} power {power}",
                            family[x], family[y]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn chord_rules_match_oracle_small_surfaces() {
        for (g, n) in [(0u32, 5u32), (1, 3), (1, 4), (2, 2), (2, 3), (3, 1)] {
            let spec = SurfaceSpec::new(g, n);
            let m = build_model(spec).unwrap();
            let mut curves: Vec<Curve> = Vec::new();
            for i in 1..=g {
                curves.push(Curve::alpha(i));
                for j in 1..=(g + n) {
                    let c = Curve::alpha_arc(i, j);
                    if c.validate(spec).is_ok() {
                        curves.push(c);
                    }
                }
            }
            for i in 1..=(g + n) {
                for j in (i + 1)..=(g + n) {
                    let c = Curve::beta(i, j);
                    if c.validate(spec).is_ok() {
                        curves.push(c);
                    }
                }
            }
            for a in &curves {
                for b in &curves {
                    let lhs = calc(&m, a, b);
                    let rhs = intersection_oracle(&m, a, b).unwrap().value;
                    assert_eq!(lhs, rhs, "({g},{n}): {a} vs {b}");
                }
            }
        }
    }
}

