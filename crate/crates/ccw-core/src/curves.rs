//! Curves on the polygon model: named families, transit words, and
//! topological types.
//!
//! Purpose: a simple closed curve is stored either as a *locus* (the glued
//! s_i edge itself, the core of the i-th crosscap) or as a *transit word*: a
//! cyclic list of crossings of the glued polygon edges, each with an exact
//! rational edge parameter, drawn as straight chords that alternate between
//! the two faces. The named families are a_i (crosscap core), a_i^j (a
//! one-sided curve crossing s_i and e_j once each) and b_i^j (a two-sided
//! curve crossing e_i and e_j once each).
//!
//! Why this design: the crosscap core cannot be drawn as a chord word (any
//! closed chord path crosses s_i an even number of times with cancelling
//! directions), so it is kept as a locus and handled specially; every other
//! curve in the pipeline is a word. Words support exact operations: skeleton
//! reduction (removing an adjacent same-edge transit pair is an isotopy when
//! no other transit separates the pair), a cyclic normal form for fast
//! equality-up-to-isotopy checks, and face-aware angle computations shared
//! by the arrangement machinery.
//!
//! Notes: a word with parameter p crosses an s-edge at local coordinate p in
//! the plus face and 1-p in the minus face; e-edges use p in both faces.
//! Words always have an even number of transits. An empty word (after
//! reduction) denotes a contractible curve.

use std::cmp::Ordering;

use num::{BigInt, BigRational, One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::surface_model::{EdgeKind, EdgeLabel, ModelPolygon, SurfaceSpec};
use crate::{Error, Result};

/// Convenience constructor for small exact rationals.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// One of the two polygon faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Face {
    Plus,
    Minus,
}

impl Face {
    pub fn flip(self) -> Face {
        match self {
            Face::Plus => Face::Minus,
            Face::Minus => Face::Plus,
        }
    }

    /// The face reached from `self` after `k` edge crossings.
    pub fn flipped(self, k: usize) -> Face {
        if k % 2 == 0 {
            self
        } else {
            self.flip()
        }
    }
}

/// One crossing of a glued polygon edge. `param` is the position along the
/// edge in glued coordinates (the plus-face parametrization), strictly
/// between 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transit {
    pub pos: usize,
    pub param: BigRational,
}

impl Transit {
    pub fn new(pos: usize, param: BigRational) -> Self {
        Transit { pos, param }
    }
}

/// Local coordinate of a glued-edge point as seen from one face: s-edges are
/// glued with a flip, so their minus-face coordinate is 1 - param.
pub fn local_param(kind: EdgeKind, face: Face, param: &BigRational) -> BigRational {
    match (kind, face) {
        (EdgeKind::S, Face::Minus) => BigRational::one() - param,
        _ => param.clone(),
    }
}

/// Boundary angle of a glued-edge point inside one face: edge position plus
/// the local coordinate, measured counterclockwise in units of one edge.
pub fn transit_angle(model: &ModelPolygon, transit: &Transit, face: Face) -> BigRational {
    let kind = model.label_at(transit.pos).kind;
    BigRational::from(BigInt::from(transit.pos as i64)) + local_param(kind, face, &transit.param)
}

/// A closed curve drawn as straight chords: the curve crosses the glued
/// edges at `transits[0], transits[1], ...` cyclically, and the arc from
/// transit k to transit k+1 is a chord of the face `start_face` flipped k
/// times. The transit count is even, so the curve closes up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub transits: Vec<Transit>,
    pub start_face: Face,
}

impl Word {
    pub fn new(transits: Vec<Transit>, start_face: Face) -> Result<Self> {
        if transits.len() % 2 != 0 {
            return Err(Error::InvalidCurve(format!(
                "transit word must have even length, got {}",
                transits.len()
            )));
        }
        for t in &transits {
            if t.param <= BigRational::zero() || t.param >= BigRational::one() {
                return Err(Error::InvalidCurve(format!(
                    "transit parameter {} is not strictly between 0 and 1",
                    t.param
                )));
            }
        }
        Ok(Word { transits, start_face })
    }

    pub fn len(&self) -> usize {
        self.transits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transits.is_empty()
    }

    /// Face containing the arc from transit k to transit k+1.
    pub fn arc_face(&self, k: usize) -> Face {
        self.start_face.flipped(k)
    }

    /// Number of transits across s-edges; the curve is one-sided exactly
    /// when this is odd.
    pub fn s_transit_count(&self, model: &ModelPolygon) -> usize {
        self.transits
            .iter()
            .filter(|t| model.label_at(t.pos).kind == EdgeKind::S)
            .count()
    }

    /// Number of transits across the specific edge s_i.
    pub fn transit_count_at(&self, pos: usize) -> usize {
        self.transits.iter().filter(|t| t.pos == pos).count()
    }

    pub fn is_one_sided(&self, model: &ModelPolygon) -> bool {
        self.s_transit_count(model) % 2 == 1
    }

    /// Rewrite the word so that `start_face` is `Plus` (rotating the cycle
    /// by one transit flips the start face; the curve is unchanged).
    pub fn normalized_start(&self) -> Word {
        if self.start_face == Face::Plus || self.is_empty() {
            return Word { transits: self.transits.clone(), start_face: Face::Plus };
        }
        let mut transits = self.transits.clone();
        transits.rotate_left(1);
        Word { transits, start_face: Face::Plus }
    }

    /// Remove one cancelling transit pair if possible: transits k and k+1 on
    /// the same edge with no other transit of this word strictly between
    /// their parameters. Such a pair can be pushed off the edge by an
    /// isotopy. Returns true if a pair was removed.
    fn reduce_once(&mut self) -> bool {
        let m = self.len();
        if m < 2 {
            return false;
        }
        for k in 0..m {
            let a = &self.transits[k];
            let b = &self.transits[(k + 1) % m];
            if a.pos != b.pos {
                continue;
            }
            let (lo, hi) = if a.param < b.param {
                (a.param.clone(), b.param.clone())
            } else {
                (b.param.clone(), a.param.clone())
            };
            let blocked = self.transits.iter().enumerate().any(|(idx, t)| {
                idx != k && idx != (k + 1) % m && t.pos == a.pos && t.param > lo && t.param < hi
            });
            if blocked {
                continue;
            }
            // Drop transits k and k+1; the remaining cycle starts at k+2,
            // whose outgoing arc kept its original face parity.
            let mut rest = Vec::with_capacity(m - 2);
            let mut idx = (k + 2) % m;
            while idx != k {
                rest.push(self.transits[idx].clone());
                idx = (idx + 1) % m;
            }
            self.start_face = self.arc_face((k + 2) % m);
            self.transits = rest;
            return true;
        }
        false
    }

    /// Fully skeleton-reduce the word. A word that reduces to nothing is a
    /// contractible curve.
    pub fn skeleton_reduced(&self) -> Word {
        let mut w = self.clone();
        while w.reduce_once() {}
        w.normalized_start()
    }

    /// Combinatorial cyclic normal form: for each transit, its edge
    /// position, the rank of its parameter among this word's transits on the
    /// same edge, and the face of the outgoing arc. Minimized
    /// lexicographically over all rotations and over the reversed traversal.
    /// Equal normal forms imply the words are the same curve up to isotopy.
    pub fn normal_form(&self) -> Vec<(usize, usize, bool)> {
        let m = self.len();
        if m == 0 {
            return Vec::new();
        }
        let rank: Vec<usize> = (0..m)
            .map(|k| {
                self.transits
                    .iter()
                    .filter(|t| {
                        t.pos == self.transits[k].pos && t.param < self.transits[k].param
                    })
                    .count()
            })
            .collect();
        let entry = |idx: usize, face: Face| -> (usize, usize, bool) {
            (self.transits[idx].pos, rank[idx], face == Face::Minus)
        };
        let mut best: Option<Vec<(usize, usize, bool)>> = None;
        for r in 0..m {
            // Forward traversal starting at transit r.
            let mut seq = Vec::with_capacity(m);
            for j in 0..m {
                let idx = (r + j) % m;
                seq.push(entry(idx, self.arc_face(idx)));
            }
            if best.as_ref().is_none_or(|b| seq < *b) {
                best = Some(seq);
            }
            // Reversed traversal starting at transit r: the arc leaving
            // transit idx backwards is the arc arriving at idx, which lives
            // in the face of arc idx-1.
            let mut seq = Vec::with_capacity(m);
            for j in 0..m {
                let idx = (r + m - j) % m;
                seq.push(entry(idx, self.arc_face((idx + m - 1) % m)));
            }
            if best.as_ref().is_none_or(|b| seq < *b) {
                best = Some(seq);
            }
        }
        best.unwrap()
    }

    /// True when the straight-chord drawing has no self-crossing inside
    /// either face (two chords of a convex disc cross exactly when their
    /// endpoint angles interleave).
    pub fn is_embedded(&self, model: &ModelPolygon) -> bool {
        let m = self.len();
        if m == 0 {
            return true;
        }
        let mut chords: Vec<(Face, BigRational, BigRational)> = Vec::with_capacity(m);
        for k in 0..m {
            let face = self.arc_face(k);
            let a = transit_angle(model, &self.transits[k], face);
            let b = transit_angle(model, &self.transits[(k + 1) % m], face);
            chords.push((face, a, b));
        }
        for i in 0..m {
            for j in (i + 1)..m {
                if chords[i].0 != chords[j].0 {
                    continue;
                }
                if angles_interleave(&chords[i].1, &chords[i].2, &chords[j].1, &chords[j].2) {
                    return false;
                }
            }
        }
        true
    }
}

/// Whether the chord with boundary angles {a1, a2} crosses the chord with
/// boundary angles {b1, b2} inside the disc: exactly one of b1, b2 lies in
/// the open arc from a1 to a2. All four angles must be distinct.
pub fn angles_interleave(
    a1: &BigRational,
    a2: &BigRational,
    b1: &BigRational,
    b2: &BigRational,
) -> bool {
    let (lo, hi) = if a1 < a2 { (a1, a2) } else { (a2, a1) };
    let inside1 = b1 > lo && b1 < hi;
    let inside2 = b2 > lo && b2 < hi;
    inside1 != inside2
}

/// Internal realization of a curve: the crosscap core locus, or a transit
/// word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realized {
    Locus { i: u32 },
    Word(Word),
}

impl Realized {
    pub fn as_word(&self) -> Option<&Word> {
        match self {
            Realized::Word(w) => Some(w),
            Realized::Locus { .. } => None,
        }
    }

    pub fn is_one_sided(&self, model: &ModelPolygon) -> bool {
        match self {
            Realized::Locus { .. } => true,
            Realized::Word(w) => w.is_one_sided(model),
        }
    }
}

/// A simple closed curve by name or by explicit word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Curve {
    /// a_i: the core of the i-th crosscap (one-sided).
    Alpha { i: u32 },
    /// a_i^j: crosses s_i and e_j once each (one-sided).
    AlphaArc { i: u32, j: u32 },
    /// b_i^j: crosses e_i and e_j once each (two-sided).
    Beta { i: u32, j: u32 },
    /// An explicit transit word.
    General { transits: Vec<(EdgeLabel, BigRational)> },
}

impl Curve {
    pub fn alpha(i: u32) -> Self {
        Curve::Alpha { i }
    }

    pub fn alpha_arc(i: u32, j: u32) -> Self {
        Curve::AlphaArc { i, j }
    }

    /// Two-sided chord between e_i and e_j, stored with i < j.
    pub fn beta(i: u32, j: u32) -> Self {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        Curve::Beta { i, j }
    }

    /// Validate the curve's indices against a surface.
    pub fn validate(&self, spec: SurfaceSpec) -> Result<()> {
        let g = spec.genus;
        let total = g + spec.holes;
        match *self {
            Curve::Alpha { i } => {
                if i == 0 || i > g {
                    return Err(Error::InvalidCurve(format!(
                        "a_{i} needs 1 <= i <= g = {g}"
                    )));
                }
            }
            Curve::AlphaArc { i, j } => {
                if i == 0 || i > g {
                    return Err(Error::InvalidCurve(format!(
                        "a_{i}^{j} needs 1 <= i <= g = {g}"
                    )));
                }
                if j == 0 || j > total {
                    return Err(Error::InvalidCurve(format!(
                        "a_{i}^{j} needs 1 <= j <= g + n = {total}"
                    )));
                }
                let prev = if i == 1 { total } else { i - 1 };
                if j == i || j == prev {
                    return Err(Error::InvalidCurve(format!(
                        "a_{i}^{j} is degenerate (j = i or j = i - 1 cyclically)"
                    )));
                }
            }
            Curve::Beta { i, j } => {
                if i == 0 || j > total || i >= j {
                    return Err(Error::InvalidCurve(format!(
                        "b_{i}^{j} needs 1 <= i < j <= g + n = {total}"
                    )));
                }
                let d = j - i;
                if d < 2 || d + 2 > total {
                    return Err(Error::InvalidCurve(format!(
                        "b_{i}^{j} is trivial or degenerate (needs 2 <= j - i <= g + n - 2)"
                    )));
                }
            }
            Curve::General { ref transits } => {
                if transits.len() % 2 != 0 {
                    return Err(Error::InvalidCurve(
                        "general curve word must have even length".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Realize the curve on the model: loci stay loci, named chords become
    /// two-transit words at edge midpoints, general words are checked.
    pub fn realize(&self, model: &ModelPolygon) -> Result<Realized> {
        self.validate(model.spec)?;
        match *self {
            Curve::Alpha { i } => Ok(Realized::Locus { i }),
            Curve::AlphaArc { i, j } => {
                let w = Word::new(
                    vec![
                        Transit::new(model.s_position(i)?, rat(1, 2)),
                        Transit::new(model.e_position(j)?, rat(1, 2)),
                    ],
                    Face::Plus,
                )?;
                Ok(Realized::Word(w))
            }
            Curve::Beta { i, j } => {
                let w = Word::new(
                    vec![
                        Transit::new(model.e_position(i)?, rat(1, 2)),
                        Transit::new(model.e_position(j)?, rat(1, 2)),
                    ],
                    Face::Plus,
                )?;
                Ok(Realized::Word(w))
            }
            Curve::General { ref transits } => {
                let ts = transits
                    .iter()
                    .map(|(label, param)| {
                        Ok(Transit::new(model.position_of(*label)?, param.clone()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let w = Word::new(ts, Face::Plus)?;
                if !w.is_embedded(model) {
                    return Err(Error::InvalidCurve(
                        "general curve word has a self-crossing".into(),
                    ));
                }
                Ok(Realized::Word(w))
            }
        }
    }

    /// Wrap a word back into a curve value (start face normalized to plus).
    pub fn from_word(model: &ModelPolygon, word: &Word) -> Curve {
        let w = word.normalized_start();
        Curve::General {
            transits: w
                .transits
                .iter()
                .map(|t| (model.label_at(t.pos), t.param.clone()))
                .collect(),
        }
    }

    /// Stable display name: a_1, a_1_3, b_1_3; general words get a composite
    /// name from their labels.
    pub fn name(&self) -> String {
        match self {
            Curve::Alpha { i } => format!("a_{i}"),
            Curve::AlphaArc { i, j } => format!("a_{i}_{j}"),
            Curve::Beta { i, j } => format!("b_{i}_{j}"),
            Curve::General { transits } => {
                let parts: Vec<String> = transits
                    .iter()
                    .map(|(label, param)| format!("{label}@{param}"))
                    .collect();
                format!("w[{}]", parts.join(","))
            }
        }
    }

}

impl std::fmt::Display for Curve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl PartialOrd for Curve {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Curve {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |c: &Curve| -> (u8, u32, u32, String) {
            match c {
                Curve::Alpha { i } => (0, *i, 0, String::new()),
                Curve::AlphaArc { i, j } => (1, *i, *j, String::new()),
                Curve::Beta { i, j } => (2, *i, *j, String::new()),
                Curve::General { .. } => (3, 0, 0, c.name()),
            }
        };
        key(self).cmp(&key(other))
    }
}

impl Serialize for Curve {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde_json::json;
        let value = match self {
            Curve::Alpha { i } => json!({ "kind": "alpha", "i": i }),
            Curve::AlphaArc { i, j } => json!({ "kind": "alpha_arc", "i": i, "j": j }),
            Curve::Beta { i, j } => json!({ "kind": "beta", "i": i, "j": j }),
            Curve::General { transits } => {
                let word: Vec<serde_json::Value> = transits
                    .iter()
                    .map(|(label, param)| json!([label.to_string(), param.to_string()]))
                    .collect();
                json!({ "kind": "general", "word": word })
            }
        };
        value.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Curve {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        let kind = value
            .get("kind")
            .and_then(|k| k.as_str())
            .ok_or_else(|| D::Error::custom("curve object needs a string `kind`"))?;
        let get_index = |field: &str| -> std::result::Result<u32, D::Error> {
            value
                .get(field)
                .and_then(|v| v.as_u64())
                .map(|v| v as u32)
                .ok_or_else(|| D::Error::custom(format!("curve needs integer `{field}`")))
        };
        match kind {
            "alpha" => Ok(Curve::Alpha { i: get_index("i")? }),
            "alpha_arc" => Ok(Curve::AlphaArc { i: get_index("i")?, j: get_index("j")? }),
            "beta" => Ok(Curve::Beta { i: get_index("i")?, j: get_index("j")? }),
            "general" => {
                let word = value
                    .get("word")
                    .and_then(|w| w.as_array())
                    .ok_or_else(|| D::Error::custom("general curve needs a `word` array"))?;
                let mut transits = Vec::with_capacity(word.len());
                for item in word {
                    let pair = item
                        .as_array()
                        .filter(|a| a.len() == 2)
                        .ok_or_else(|| D::Error::custom("word entries are [label, param]"))?;
                    let label: EdgeLabel = pair[0]
                        .as_str()
                        .ok_or_else(|| D::Error::custom("edge label must be a string"))?
                        .parse()
                        .map_err(|e| D::Error::custom(format!("{e}")))?;
                    let param: BigRational = pair[1]
                        .as_str()
                        .ok_or_else(|| D::Error::custom("param must be a num/den string"))?
                        .parse()
                        .map_err(|_| D::Error::custom("param must be a num/den string"))?;
                    transits.push((label, param));
                }
                Ok(Curve::General { transits })
            }
            other => Err(D::Error::custom(format!("unknown curve kind {other:?}"))),
        }
    }
}

/// Topological type of a simple closed curve on N_{g,n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum TopType {
    /// Bounds a disc with at most one hole, or a Moebius band.
    Trivial,
    /// One-sided with g = 1, or one-sided with non-orientable complement.
    OneSidedEssential,
    /// One-sided with orientable complement (only when g is odd).
    OneSidedOrientableComplement,
    /// Two-sided nonseparating, complement non-orientable.
    TwoSidedNonsepNonorientable,
    /// Two-sided nonseparating, complement orientable (only when g is even).
    TwoSidedNonsepOrientable,
    /// Separating with one complement side of genus p and q+1 boundary
    /// circles (for p >= 1 both sides are non-orientable; p = 0 means that
    /// side is planar). Stored normalized with p <= g - p, ties broken by
    /// q <= n - q; a curve of type (p, q) is equally of type (g-p, n-q).
    Separating { p: u32, q: u32 },
    /// Separating with an orientable side of genus k >= 1 (not a (p, q)
    /// type).
    SeparatingMixed { k: u32 },
}

impl TopType {
    pub fn is_one_sided(&self) -> bool {
        matches!(
            self,
            TopType::OneSidedEssential | TopType::OneSidedOrientableComplement
        )
    }

    pub fn is_separating(&self) -> bool {
        matches!(self, TopType::Separating { .. } | TopType::SeparatingMixed { .. })
    }

    /// Whether this is the separating type (p, q) on N_{g,n}, accepting both
    /// the stored reading and its complement reading (g-p, n-q).
    pub fn is_separating_of_type(&self, spec: SurfaceSpec, p: u32, q: u32) -> bool {
        match *self {
            TopType::Separating { p: sp, q: sq } => {
                (sp == p && sq == q)
                    || (p <= spec.genus
                        && q <= spec.holes
                        && sp == spec.genus - p
                        && sq == spec.holes - q)
            }
            _ => false,
        }
    }
}

impl std::fmt::Display for TopType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TopType::Trivial => write!(f, "trivial"),
            TopType::OneSidedEssential => write!(f, "one-sided essential"),
            TopType::OneSidedOrientableComplement => {
                write!(f, "one-sided with orientable complement")
            }
            TopType::TwoSidedNonsepNonorientable => {
                write!(f, "two-sided nonseparating with non-orientable complement")
            }
            TopType::TwoSidedNonsepOrientable => {
                write!(f, "two-sided nonseparating with orientable complement")
            }
            TopType::Separating { p, q } => write!(f, "separating of type ({p}, {q})"),
            TopType::SeparatingMixed { k } => {
                write!(f, "separating with an orientable genus-{k} side")
            }
        }
    }
}

/// One component of a surface cut along curves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutComponent {
    pub orientable: bool,
    /// Orientable genus if `orientable`, crosscap count otherwise.
    pub genus: u32,
    /// Total boundary circles of the compact piece: circles created by the
    /// cutting plus one per hole mark contained in the component.
    pub boundary_count: u32,
    /// Hole marks z_k carried by this component.
    pub contains_corners: Vec<u32>,
    /// For each boundary circle created by the cutting, the index (into the
    /// cut set) of the curve it came from.
    pub cut_circle_owners: Vec<usize>,
}

impl CutComponent {
    /// Euler characteristic of the compact piece with its boundary circles.
    pub fn euler_characteristic(&self) -> i64 {
        let b = self.boundary_count as i64;
        if self.orientable {
            2 - 2 * self.genus as i64 - b
        } else {
            2 - self.genus as i64 - b
        }
    }

    pub fn is_pants(&self) -> bool {
        self.orientable && self.genus == 0 && self.boundary_count == 3
    }

    /// A disc with at most one hole, or a Moebius band: the pieces whose
    /// existence makes the cut curve trivial.
    pub fn is_trivial_side(&self) -> bool {
        let disc_like = self.orientable && self.genus == 0 && self.boundary_count <= 2;
        let moebius = !self.orientable && self.genus == 1 && self.boundary_count == 1;
        disc_like || moebius
    }
}

/// Result of cutting the surface along a set of disjoint curves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutSurface {
    pub components: Vec<CutComponent>,
}

impl CutSurface {
    pub fn total_euler_characteristic(&self) -> i64 {
        self.components.iter().map(|c| c.euler_characteristic()).sum()
    }
}

/// Cut the surface along a family of pairwise disjoint curves and classify
/// every resulting piece. Fails when the family cannot be made disjoint.
pub fn cut_along(model: &ModelPolygon, curves: &[Realized]) -> Result<CutSurface> {
    let placed: Vec<crate::arrangement::PlacedCurve> =
        crate::position::place_family(model, curves)?
            .into_iter()
            .map(|realized| crate::arrangement::PlacedCurve { realized, family: 0 })
            .collect();
    let arr = crate::arrangement::build(model, &placed)?;
    let analysis = arr.analyze()?;
    let mut components = Vec::with_capacity(analysis.components.len());
    for comp in &analysis.components {
        let mut owners = Vec::with_capacity(comp.circles.len());
        for circle in &comp.circles {
            if circle.owners.len() != 1 {
                return Err(Error::Internal(
                    "cut circle with several owners in a disjoint family".into(),
                ));
            }
            owners.push(circle.owners[0]);
        }
        owners.sort_unstable();
        components.push(CutComponent {
            orientable: comp.orientable,
            genus: comp.genus,
            boundary_count: comp.boundary_count,
            contains_corners: comp.z_marks.clone(),
            cut_circle_owners: owners,
        });
    }
    Ok(CutSurface { components })
}

/// Topological type of a single curve, decided by cutting the surface along
/// it and classifying the complement.
pub fn classify_type(model: &ModelPolygon, curve: &Realized) -> Result<TopType> {
    let spec = model.spec;
    let (g, n) = (spec.genus, spec.holes);
    let reduced = match curve {
        Realized::Locus { i } => Realized::Locus { i: *i },
        Realized::Word(w) => {
            let r = w.skeleton_reduced();
            if r.is_empty() {
                return Ok(TopType::Trivial);
            }
            Realized::Word(r)
        }
    };
    let one_sided = reduced.is_one_sided(model);
    let cut = cut_along(model, std::slice::from_ref(&reduced))?;
    if one_sided {
        if cut.components.len() != 1 {
            return Err(Error::Internal("one-sided curve separated the surface".into()));
        }
        // One-sided curves are always essential; the only distinction is
        // whether the complement carries any crosscap.
        if g == 1 || !cut.components[0].orientable {
            return Ok(TopType::OneSidedEssential);
        }
        return Ok(TopType::OneSidedOrientableComplement);
    }
    match cut.components.len() {
        1 => {
            if cut.components[0].orientable {
                Ok(TopType::TwoSidedNonsepOrientable)
            } else {
                Ok(TopType::TwoSidedNonsepNonorientable)
            }
        }
        2 => {
            let (s1, s2) = (&cut.components[0], &cut.components[1]);
            if s1.is_trivial_side() || s2.is_trivial_side() {
                return Ok(TopType::Trivial);
            }
            if g >= 1 && s1.orientable && s2.orientable {
                return Err(Error::Internal(
                    "both complement sides orientable on a non-orientable surface".into(),
                ));
            }
            for (a, b) in [(s1, s2), (s2, s1)] {
                if a.orientable && a.genus >= 1 {
                    let k = a.genus;
                    if b.orientable || g < 2 * k || b.genus != g - 2 * k {
                        return Err(Error::Internal(format!(
                            "orientable genus-{k} side paired with an impossible \
                             complement on N_{{{g},{n}}}"
                        )));
                    }
                    return Ok(TopType::SeparatingMixed { k });
                }
            }
            // Read each side as a (p, q) pair: crosscap count and hole count.
            // A planar side reads as p = 0.
            let read = |side: &CutComponent| -> (u32, u32) {
                let q = side.contains_corners.len() as u32;
                if side.orientable {
                    (0, q)
                } else {
                    (side.genus, q)
                }
            };
            let (p1, q1) = read(s1);
            let (p2, q2) = read(s2);
            if p1 + p2 != g || q1 + q2 != n {
                return Err(Error::Internal(format!(
                    "separating sides ({p1},{q1}) and ({p2},{q2}) do not add up \
                     on N_{{{g},{n}}}"
                )));
            }
            let (p, q) = std::cmp::min((p1, q1), (p2, q2));
            Ok(TopType::Separating { p, q })
        }
        m => Err(Error::Internal(format!("cutting along one curve left {m} pieces"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface_model::build_model;

    fn model(g: u32, n: u32) -> ModelPolygon {
        build_model(SurfaceSpec::new(g, n)).unwrap()
    }

    #[test]
    fn named_curve_validation() {
        let spec = SurfaceSpec::new(1, 4);
        assert!(Curve::alpha(1).validate(spec).is_ok());
        assert!(Curve::alpha(2).validate(spec).is_err());
        // a_1^j on (1,4): j must avoid 1 and 5 (= i-1 cyclically).
        assert!(Curve::alpha_arc(1, 2).validate(spec).is_ok());
        assert!(Curve::alpha_arc(1, 3).validate(spec).is_ok());
        assert!(Curve::alpha_arc(1, 4).validate(spec).is_ok());
        assert!(Curve::alpha_arc(1, 1).validate(spec).is_err());
        assert!(Curve::alpha_arc(1, 5).validate(spec).is_err());
        // b_i^j on (1,4): 2 <= j - i <= 3.
        assert!(Curve::beta(1, 3).validate(spec).is_ok());
        assert!(Curve::beta(1, 4).validate(spec).is_ok());
        assert!(Curve::beta(1, 5).validate(spec).is_err());
        assert!(Curve::beta(1, 2).validate(spec).is_err());
        assert!(Curve::beta(3, 5).validate(spec).is_ok());
    }

    #[test]
    fn realize_named_curves() {
        let m = model(2, 3);
        match Curve::alpha(2).realize(&m).unwrap() {
            Realized::Locus { i } => assert_eq!(i, 2),
            _ => panic!("a_2 must realize as a locus"),
        }
        match Curve::alpha_arc(2, 4).realize(&m).unwrap() {
            Realized::Word(w) => {
                assert_eq!(w.len(), 2);
                assert_eq!(w.transits[0].pos, m.s_position(2).unwrap());
                assert_eq!(w.transits[1].pos, m.e_position(4).unwrap());
                assert!(w.is_one_sided(&m));
            }
            _ => panic!("a_2^4 must realize as a word"),
        }
        match Curve::beta(1, 3).realize(&m).unwrap() {
            Realized::Word(w) => {
                assert_eq!(w.len(), 2);
                assert!(!w.is_one_sided(&m));
            }
            _ => panic!("b_1^3 must realize as a word"),
        }
    }

    #[test]
    fn skeleton_reduction_cancels_adjacent_pairs() {
        let m = model(1, 3);
        let s = m.s_position(1).unwrap();
        // A "hug" word crossing s_1 twice in opposite directions is
        // contractible: the pair cancels.
        let hug = Word::new(
            vec![Transit::new(s, rat(1, 3)), Transit::new(s, rat(2, 3))],
            Face::Plus,
        )
        .unwrap();
        assert!(hug.skeleton_reduced().is_empty());

        // A pair separated by another transit on the same edge does not
        // cancel.
        let e2 = m.e_position(2).unwrap();
        let e4 = m.e_position(4).unwrap();
        let e1 = m.e_position(1).unwrap();
        let blocked = Word::new(
            vec![
                Transit::new(e2, rat(1, 4)),
                Transit::new(e2, rat(3, 4)),
                Transit::new(e4, rat(1, 3)),
                Transit::new(e2, rat(1, 2)),
                Transit::new(e4, rat(2, 3)),
                Transit::new(e1, rat(1, 2)),
            ],
            Face::Plus,
        )
        .unwrap();
        assert_eq!(blocked.skeleton_reduced().len(), 6);
    }

    #[test]
    fn reduction_keeps_face_parity() {
        let m = model(1, 3);
        let e1 = m.e_position(1).unwrap();
        let e3 = m.e_position(3).unwrap();
        let s1 = m.s_position(1).unwrap();
        // Word: s1, e1, e1, e3 — the adjacent e1 pair cancels, leaving the
        // s1 -> e3 arcs with their original faces.
        let w = Word::new(
            vec![
                Transit::new(s1, rat(1, 2)),
                Transit::new(e1, rat(1, 3)),
                Transit::new(e1, rat(2, 3)),
                Transit::new(e3, rat(1, 2)),
            ],
            Face::Plus,
        )
        .unwrap();
        let r = w.skeleton_reduced();
        assert_eq!(r.len(), 2);
        assert_eq!(r.start_face, Face::Plus);
        assert_eq!(r.transits[0].pos, s1);
        assert_eq!(r.transits[1].pos, e3);
        let direct = Word::new(
            vec![Transit::new(s1, rat(1, 2)), Transit::new(e3, rat(1, 2))],
            Face::Plus,
        )
        .unwrap();
        assert_eq!(r.normal_form(), direct.normal_form());
    }

    #[test]
    fn normal_form_invariances() {
        let m = model(2, 2);
        let w = match Curve::beta(1, 3).realize(&m).unwrap() {
            Realized::Word(w) => w,
            _ => unreachable!(),
        };
        // Rotation by one transit (with flipped start face) is the same
        // curve.
        let mut rotated = w.transits.clone();
        rotated.rotate_left(1);
        let rotated = Word { transits: rotated, start_face: Face::Minus };
        assert_eq!(w.normal_form(), rotated.normal_form());
        // Reversal is the same curve.
        let mut reversed = w.transits.clone();
        reversed.reverse();
        reversed.rotate_right(1);
        let reversed = Word { transits: reversed, start_face: Face::Minus };
        assert_eq!(w.normal_form(), reversed.normal_form());
        // A different curve has a different normal form.
        let other = match Curve::beta(2, 4).realize(&m).unwrap() {
            Realized::Word(w) => w,
            _ => unreachable!(),
        };
        assert_ne!(w.normal_form(), other.normal_form());
    }

    #[test]
    fn embedding_check_catches_interleaved_self_chords() {
        let m = model(0, 5);
        // Two chords in the plus face with interleaved endpoints: e1-e3 and
        // e2-e4 as one word visiting e1, e3 via minus face back... build a
        // 4-transit word whose plus-face chords interleave: e1 -> e3 (arc 0,
        // plus), e3 -> e2 (arc 1, minus), e2 -> e4 (arc 2, plus), e4 -> e1
        // (arc 3, minus). Arcs 0 and 2 interleave (1 < 2 < 3 < 4).
        let w = Word::new(
            vec![
                Transit::new(0, rat(1, 2)),
                Transit::new(2, rat(1, 2)),
                Transit::new(1, rat(1, 2)),
                Transit::new(3, rat(1, 2)),
            ],
            Face::Plus,
        )
        .unwrap();
        assert!(!w.is_embedded(&m));
        let curve = Curve::General {
            transits: vec![
                (EdgeLabel::e(1), rat(1, 2)),
                (EdgeLabel::e(3), rat(1, 2)),
                (EdgeLabel::e(2), rat(1, 2)),
                (EdgeLabel::e(4), rat(1, 2)),
            ],
        };
        assert!(curve.realize(&m).is_err());
    }

    #[test]
    fn curve_serialization_round_trip() {
        let curves = vec![
            Curve::alpha(1),
            Curve::alpha_arc(1, 3),
            Curve::beta(2, 5),
            Curve::General {
                transits: vec![(EdgeLabel::s(1), rat(1, 2)), (EdgeLabel::e(3), rat(2, 7))],
            },
        ];
        for c in curves {
            let text = serde_json::to_string(&c).unwrap();
            let back: Curve = serde_json::from_str(&text).unwrap();
            assert_eq!(c, back);
        }
        let text = serde_json::to_string(&Curve::alpha_arc(1, 3)).unwrap();
        assert!(text.contains("\"kind\":\"alpha_arc\""));
    }

    #[test]
    fn curve_ordering_is_family_then_indices() {
        let mut curves = vec![
            Curve::beta(1, 3),
            Curve::alpha(2),
            Curve::alpha_arc(1, 2),
            Curve::alpha(1),
            Curve::alpha_arc(1, 4),
        ];
        curves.sort();
        let names: Vec<String> = curves.iter().map(|c| c.name()).collect();
        assert_eq!(names, ["a_1", "a_2", "a_1_2", "a_1_4", "b_1_3"]);
    }

    #[test]
    fn separating_type_matching_accepts_both_readings() {
        let spec = SurfaceSpec::new(2, 3);
        let t = TopType::Separating { p: 0, q: 3 };
        assert!(t.is_separating_of_type(spec, 0, 3));
        assert!(t.is_separating_of_type(spec, 2, 0));
        assert!(!t.is_separating_of_type(spec, 1, 1));
        assert!(!TopType::SeparatingMixed { k: 1 }.is_separating_of_type(spec, 0, 3));
    }

    #[test]
    fn cut_component_shape_predicates() {
        let pants = CutComponent {
            orientable: true,
            genus: 0,
            boundary_count: 3,
            contains_corners: vec![],
            cut_circle_owners: vec![0, 0, 1],
        };
        assert!(pants.is_pants());
        assert_eq!(pants.euler_characteristic(), -1);
        let moebius = CutComponent {
            orientable: false,
            genus: 1,
            boundary_count: 1,
            contains_corners: vec![],
            cut_circle_owners: vec![0],
        };
        assert!(moebius.is_trivial_side());
        assert_eq!(moebius.euler_characteristic(), 0);
    }

    fn word(model: &ModelPolygon, transits: Vec<(usize, i64, i64)>) -> Realized {
        let _ = model;
        let transits =
            transits.into_iter().map(|(pos, a, b)| Transit::new(pos, rat(a, b))).collect();
        Realized::Word(Word::new(transits, Face::Plus).unwrap())
    }

    #[test]
    fn edge_hugging_words_are_trivial() {
        let model = build_model(SurfaceSpec::new(1, 3)).unwrap();
        let hug = word(&model, vec![(0, 1, 3), (0, 2, 3)]);
        assert_eq!(classify_type(&model, &hug).unwrap(), TopType::Trivial);
    }

    #[test]
    fn crosscap_neighbourhood_boundaries_are_trivial() {
        // The chord cutting off both polygon corners of the s_1 vertex runs
        // from the previous edge to the next one; it bounds a Moebius band.
        let model = build_model(SurfaceSpec::new(1, 3)).unwrap();
        let boundary = word(&model, vec![(4, 3, 4), (1, 1, 4)]);
        assert_eq!(classify_type(&model, &boundary).unwrap(), TopType::Trivial);
    }

    #[test]
    fn hole_parallel_curves_are_trivial() {
        // The chord cutting off the corner carrying hole mark z_1.
        let model = build_model(SurfaceSpec::new(1, 3)).unwrap();
        let around = word(&model, vec![(1, 3, 4), (2, 1, 4)]);
        assert_eq!(classify_type(&model, &around).unwrap(), TopType::Trivial);
    }

    #[test]
    fn crosscap_cores_and_arcs_are_essential() {
        let model = build_model(SurfaceSpec::new(2, 3)).unwrap();
        let core = Curve::alpha(1).realize(&model).unwrap();
        assert_eq!(classify_type(&model, &core).unwrap(), TopType::OneSidedEssential);
        let model = build_model(SurfaceSpec::new(2, 2)).unwrap();
        let arc = Curve::alpha_arc(1, 2).realize(&model).unwrap();
        assert_eq!(classify_type(&model, &arc).unwrap(), TopType::OneSidedEssential);
    }

    #[test]
    fn word_through_all_three_crosscaps_has_orientable_complement() {
        let model = build_model(SurfaceSpec::new(3, 1)).unwrap();
        let w = word(&model, vec![(0, 1, 2), (2, 1, 2), (4, 1, 2), (6, 1, 2)]);
        assert_eq!(
            classify_type(&model, &w).unwrap(),
            TopType::OneSidedOrientableComplement
        );
    }

    #[test]
    fn words_through_two_crosscaps_do_not_separate() {
        let model = build_model(SurfaceSpec::new(2, 2)).unwrap();
        let w = word(&model, vec![(0, 1, 2), (2, 1, 2)]);
        assert_eq!(
            classify_type(&model, &w).unwrap(),
            TopType::TwoSidedNonsepOrientable
        );
        let model = build_model(SurfaceSpec::new(3, 1)).unwrap();
        let w = word(&model, vec![(0, 1, 2), (2, 1, 2)]);
        assert_eq!(
            classify_type(&model, &w).unwrap(),
            TopType::TwoSidedNonsepNonorientable
        );
    }

    #[test]
    fn chords_between_crosscap_edges_separate() {
        let model = build_model(SurfaceSpec::new(2, 3)).unwrap();
        let b = Curve::beta(1, 3).realize(&model).unwrap();
        let t = classify_type(&model, &b).unwrap();
        assert_eq!(t, TopType::Separating { p: 1, q: 1 });
        assert!(t.is_separating_of_type(SurfaceSpec::new(2, 3), 1, 1));
        assert!(t.is_separating_of_type(SurfaceSpec::new(2, 3), 1, 2));

        let model = build_model(SurfaceSpec::new(0, 5)).unwrap();
        let b = Curve::beta(1, 3).realize(&model).unwrap();
        assert_eq!(
            classify_type(&model, &b).unwrap(),
            TopType::Separating { p: 0, q: 2 }
        );
    }

    #[test]
    fn cutting_along_a_pants_family_yields_pants() {
        let model = build_model(SurfaceSpec::new(0, 5)).unwrap();
        let family = vec![
            Curve::beta(1, 3).realize(&model).unwrap(),
            Curve::beta(1, 4).realize(&model).unwrap(),
        ];
        let cut = cut_along(&model, &family).unwrap();
        assert_eq!(cut.components.len(), 3);
        assert!(cut.components.iter().all(CutComponent::is_pants));
        assert_eq!(cut.total_euler_characteristic(), -3);
    }
}
