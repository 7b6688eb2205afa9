//! The ten-point, ten-line Desargues configuration.
//!
//! Points carry two-element subsets of {1,...,5} as labels and blocks carry
//! the three-element subsets; the point (ij) lies on the block [ijk] exactly
//! when {i,j} is contained in {i,j,k}. Complementation of subsets is then a
//! polarity of the abstract configuration, and because both label families
//! are enumerated in lexicographic order it is the map rank -> 9 - rank.
//!
//! Concretely a configuration arises from two triangles in perspective: with
//! vertex V = (12), first triangle A = (13), B = (14), C = (15), second
//! triangle A' = (23), B' = (24), C' = (25), the derived crossing points are
//! P = AB ^ A'B' = (34), R = AC ^ A'C' = (35), Q = BC ^ B'C' = (45), and the
//! axis [345] = PRQ. Every incidence demanded by the labels except the axis
//! is forced by the construction; the axis alone is the theorem, so it is
//! asserted, not reported as an error.

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::geometry::{ProjPoint, ProjectiveSpace, Subspace};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

/// Two-element subsets of {1,...,5} in lexicographic order; `PAIRS[r]` is the
/// label of point rank `r`.
pub const PAIRS: [(u8, u8); 10] =
    [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)];

/// Three-element subsets of {1,...,5} in lexicographic order; `TRIPLES[t]` is
/// the label of block rank `t`.
pub const TRIPLES: [(u8, u8, u8); 10] = [
    (1, 2, 3),
    (1, 2, 4),
    (1, 2, 5),
    (1, 3, 4),
    (1, 3, 5),
    (1, 4, 5),
    (2, 3, 4),
    (2, 3, 5),
    (2, 4, 5),
    (3, 4, 5),
];

/// Point ranks of the three pairs inside each triple.
pub const BLOCK_MEMBERS: [[usize; 3]; 10] = [
    [0, 1, 4],
    [0, 2, 5],
    [0, 3, 6],
    [1, 2, 7],
    [1, 3, 8],
    [2, 3, 9],
    [4, 5, 7],
    [4, 6, 8],
    [5, 6, 9],
    [7, 8, 9],
];

/// Classical names for the point ranks, perspective-triangle style.
pub const POINT_NAMES: [&str; 10] = ["V", "A", "B", "C", "A'", "B'", "C'", "P", "R", "Q"];

/// Rank of the pair {i,j} (i < j) in `PAIRS`.
pub fn pair_rank(i: u8, j: u8) -> usize {
    PAIRS
        .iter()
        .position(|&p| p == (i.min(j), i.max(j)))
        .unwrap_or_else(|| panic!("({i},{j}) is not a pair of distinct symbols in 1..=5"))
}

/// Rank of the triple {i,j,k} in `TRIPLES`.
pub fn triple_rank(i: u8, j: u8, k: u8) -> usize {
    let mut s = [i, j, k];
    s.sort_unstable();
    TRIPLES
        .iter()
        .position(|&t| t == (s[0], s[1], s[2]))
        .unwrap_or_else(|| panic!("({i},{j},{k}) is not a triple of distinct symbols in 1..=5"))
}

/// The complementation polarity on ranks: pair rank r <-> triple rank 9 - r.
pub fn polarity(rank: usize) -> usize {
    debug_assert!(rank < 10);
    9 - rank
}

/// Printable block label, e.g. `"[134]"`.
pub fn block_name(t: usize) -> String {
    let (i, j, k) = TRIPLES[t];
    format!("[{i}{j}{k}]")
}

/// Serialized pair label: two digits, e.g. `"12"`.
pub fn pair_label(r: usize) -> String {
    let (i, j) = PAIRS[r];
    format!("{i}{j}")
}

/// Serialized triple label: three digits, e.g. `"345"`.
pub fn triple_label(t: usize) -> String {
    let (i, j, k) = TRIPLES[t];
    format!("{i}{j}{k}")
}

fn label_symbols(s: &str, len: usize) -> Result<Vec<u8>> {
    let digits: Option<Vec<u8>> = s
        .chars()
        .map(|c| c.to_digit(10).and_then(|d| u8::try_from(d).ok()).filter(|d| (1..=5).contains(d)))
        .collect();
    match digits {
        Some(d) if d.len() == len => Ok(d),
        _ => Err(Error::Parse(format!(
            "label {s:?} is not {len} distinct symbols from 1..=5"
        ))),
    }
}

/// Parse a two-digit pair label like `"12"` into its rank.
pub fn parse_pair_label(s: &str) -> Result<usize> {
    let d = label_symbols(s, 2)?;
    if d[0] >= d[1] {
        return Err(Error::Parse(format!("pair label {s:?} must be strictly increasing")));
    }
    Ok(pair_rank(d[0], d[1]))
}

/// Parse a three-digit triple label like `"345"` into its rank.
pub fn parse_triple_label(s: &str) -> Result<usize> {
    let d = label_symbols(s, 3)?;
    if !(d[0] < d[1] && d[1] < d[2]) {
        return Err(Error::Parse(format!("triple label {s:?} must be strictly increasing")));
    }
    Ok(triple_rank(d[0], d[1], d[2]))
}

/// Label-free fingerprint of an embedded configuration: sorted point ids and
/// sorted blocks of sorted ids. Invariant under all 120 relabelings, so two
/// configurations are the same subset-with-blocks of the space iff their keys
/// are equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ConfigKey {
    pub points: [u32; 10],
    pub blocks: [[u32; 3]; 10],
}

/// A Desargues configuration embedded in PG(2,q) or PG(3,q): ten labeled
/// points and ten labeled block lines, validated or derived by
/// [`perspective_config`].
#[derive(Clone, Debug)]
pub struct DesarguesConfiguration {
    space: Arc<ProjectiveSpace>,
    points: [ProjPoint; 10],
    blocklines: [Subspace; 10],
    spatial: bool,
}

impl DesarguesConfiguration {
    pub fn space(&self) -> &Arc<ProjectiveSpace> {
        &self.space
    }

    /// Point at a pair rank (see `PAIRS` / `POINT_NAMES`).
    pub fn point(&self, pair_rank: usize) -> &ProjPoint {
        &self.points[pair_rank]
    }

    pub fn points(&self) -> &[ProjPoint; 10] {
        &self.points
    }

    /// Block line at a triple rank (see `TRIPLES`).
    pub fn blockline(&self, triple_rank: usize) -> &Subspace {
        &self.blocklines[triple_rank]
    }

    pub fn blocklines(&self) -> &[Subspace; 10] {
        &self.blocklines
    }

    /// Whether the ten points span a solid (only possible in PG(3,q)).
    pub fn spatial(&self) -> bool {
        self.spatial
    }

    pub fn canonical_key(&self) -> ConfigKey {
        let mut points = [0u32; 10];
        for (slot, p) in points.iter_mut().zip(&self.points) {
            *slot = p.index() as u32;
        }
        points.sort_unstable();
        let mut blocks = [[0u32; 3]; 10];
        for (slot, members) in blocks.iter_mut().zip(&BLOCK_MEMBERS) {
            for (s, &m) in slot.iter_mut().zip(members) {
                *s = self.points[m].index() as u32;
            }
            slot.sort_unstable();
        }
        blocks.sort_unstable();
        ConfigKey { points, blocks }
    }

    /// Apply a permutation of the symbols 1..=5 to all labels: the point at
    /// pair (i,j) moves to pair (perm[i-1], perm[j-1]). The canonical key is
    /// invariant under this.
    pub fn relabel(&self, perm: [u8; 5]) -> Self {
        let mut seen = [false; 5];
        for &s in &perm {
            assert!((1..=5).contains(&s), "relabel symbols must lie in 1..=5");
            assert!(!std::mem::replace(&mut seen[s as usize - 1], true), "relabel needs a permutation");
        }
        let mut points = self.points.clone();
        for (r, &(i, j)) in PAIRS.iter().enumerate() {
            points[pair_rank(perm[i as usize - 1], perm[j as usize - 1])] = self.points[r].clone();
        }
        let mut blocklines = self.blocklines.clone();
        for (t, &(i, j, k)) in TRIPLES.iter().enumerate() {
            let dest = triple_rank(
                perm[i as usize - 1],
                perm[j as usize - 1],
                perm[k as usize - 1],
            );
            blocklines[dest] = self.blocklines[t].clone();
        }
        DesarguesConfiguration {
            space: self.space.clone(),
            points,
            blocklines,
            spatial: self.spatial,
        }
    }

    /// Pair ranks r whose point lies on the block line of its complementary
    /// triple (rank 9 - r) — the absolute points of the labeling polarity.
    pub fn self_conjugate_points(&self) -> Vec<usize> {
        (0..10)
            .filter(|&r| self.space.incident(&self.points[r], &self.blocklines[polarity(r)]))
            .collect()
    }

    /// For each block line, every configuration point on it (sorted pair
    /// ranks). Each subset holds the three block members; a subset grows to
    /// four exactly when the line's pole is self-conjugate, and for a
    /// configuration without self-conjugate points the structure is the block
    /// list itself.
    pub fn blockline_structure(&self) -> BlocklineStructure {
        let subsets = std::array::from_fn(|t| {
            (0..10)
                .filter(|&r| self.space.incident(&self.points[r], &self.blocklines[t]))
                .collect()
        });
        BlocklineStructure { subsets }
    }

    /// Span of all ten points (a plane for planar, a solid for spatial ones).
    pub fn span(&self) -> Subspace {
        self.space.span(self.points.iter()).expect("own points")
    }

    /// Structural re-validation for tests: distinctness and every labeled
    /// incidence. Violations indicate a construction bug, not bad input.
    pub fn check(&self) -> std::result::Result<(), String> {
        let mut ids: Vec<usize> = self.points.iter().map(ProjPoint::index).collect();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != 10 {
            return Err("points are not pairwise distinct".into());
        }
        if self.blocklines.iter().collect::<HashSet<_>>().len() != 10 {
            return Err("block lines are not pairwise distinct".into());
        }
        for (t, line) in self.blocklines.iter().enumerate() {
            if !line.is_line() {
                return Err(format!("block {} is not a line", block_name(t)));
            }
            for &m in &BLOCK_MEMBERS[t] {
                if !self.space.incident(&self.points[m], line) {
                    return Err(format!(
                        "point {} is not on its block {}",
                        POINT_NAMES[m],
                        block_name(t)
                    ));
                }
            }
        }
        let expect_spatial =
            self.space.n() == 3 && self.space.rank_of(self.points.iter()) == 4;
        if self.spatial != expect_spatial {
            return Err("spatial flag disagrees with the span of the points".into());
        }
        Ok(())
    }

    pub fn to_document(&self) -> ConfigDocument {
        let field = self.space.field();
        let non_default = field.spec() != &FieldSpec::of_order(field.order() as u64)
            .expect("a live field has a valid order");
        let points: BTreeMap<String, String> = (0..10)
            .map(|r| (pair_label(r), self.points[r].to_string()))
            .collect();
        let blocks: Vec<[String; 3]> = (0..10)
            .map(|t| BLOCK_MEMBERS[t].map(pair_label))
            .collect();
        let blocklines: BTreeMap<String, String> = (0..10)
            .map(|t| (triple_label(t), self.blocklines[t].to_string()))
            .collect();
        let self_conjugate = self.self_conjugate_points().into_iter().map(pair_label).collect();
        ConfigDocument {
            q: field.order() as u64,
            n: self.space.n(),
            field: non_default.then(|| field.spec().to_string()),
            spatial: self.spatial,
            points,
            blocks,
            blocklines,
            self_conjugate,
        }
    }
}

/// The point subsets cut out on the ten block lines of a configuration, as
/// sorted pair ranks per triple rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlocklineStructure {
    pub subsets: [Vec<usize>; 10],
}

/// Construct and fully validate the configuration generated by two triangles
/// `first` = (A,B,C) and `second` = (A',B',C') in perspective from `vertex`.
///
/// Input degeneracies (coincident seeds, flat triangles, merged derived
/// points or lines) come back as errors; the collinearity of the derived axis
/// is a theorem over any field and is asserted.
pub fn perspective_config(
    space: &Arc<ProjectiveSpace>,
    vertex: &ProjPoint,
    first: [&ProjPoint; 3],
    second: [&ProjPoint; 3],
) -> Result<DesarguesConfiguration> {
    let n = space.n();
    if !(2..=3).contains(&n) {
        return Err(Error::WrongDimension(format!(
            "perspective triangles live in PG(2,q) or PG(3,q), not PG({n},q)"
        )));
    }
    for k in 0..3 {
        if first[k] == vertex || second[k] == vertex {
            return Err(Error::Degenerate(format!(
                "triangle vertex {} coincides with the perspective vertex",
                POINT_NAMES[1 + k]
            )));
        }
        if first[k] == second[k] {
            return Err(Error::Degenerate(format!(
                "corresponding vertices {} and {} coincide",
                POINT_NAMES[1 + k],
                POINT_NAMES[4 + k]
            )));
        }
        // v must lie on the line joining the corresponding vertices
        if space.rank_of([vertex, first[k], second[k]]) != 2 {
            return Err(Error::NotInPerspective);
        }
    }
    if space.rank_of(first) != 3 {
        return Err(Error::Degenerate("first triangle is flat".into()));
    }
    if space.rank_of(second) != 3 {
        return Err(Error::Degenerate("second triangle is flat".into()));
    }

    let cross = |x: usize, y: usize| -> Result<ProjPoint> {
        let side1 = space.span([first[x], first[y]])?;
        let side2 = space.span([second[x], second[y]])?;
        let m = space.meet(&side1, &side2)?;
        if !m.is_point() {
            return Err(Error::Degenerate(format!(
                "sides {}{} and {}{} do not meet in a single point",
                POINT_NAMES[1 + x],
                POINT_NAMES[1 + y],
                POINT_NAMES[4 + x],
                POINT_NAMES[4 + y]
            )));
        }
        space.normalize(&m.basis()[0])
    };
    let p = cross(0, 1)?;
    let r = cross(0, 2)?;
    let q = cross(1, 2)?;

    let points: [ProjPoint; 10] = [
        vertex.clone(),
        first[0].clone(),
        first[1].clone(),
        first[2].clone(),
        second[0].clone(),
        second[1].clone(),
        second[2].clone(),
        p,
        r,
        q,
    ];
    let mut ids: Vec<usize> = points.iter().map(ProjPoint::index).collect();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != 10 {
        return Err(Error::Degenerate("configuration points are not pairwise distinct".into()));
    }

    let mut blocklines: Vec<Subspace> = Vec::with_capacity(10);
    for (t, members) in BLOCK_MEMBERS.iter().enumerate() {
        let line = space.span(members.iter().map(|&m| &points[m]))?;
        // ranks 0..=8 are lines by construction; rank 9 is the Desargues axis
        assert!(
            line.is_line(),
            "block {} of a validated perspective pair must be collinear",
            block_name(t)
        );
        blocklines.push(line);
    }
    if blocklines.iter().collect::<HashSet<_>>().len() != 10 {
        return Err(Error::Degenerate("configuration block lines are not pairwise distinct".into()));
    }
    let blocklines: [Subspace; 10] = blocklines.try_into().expect("ten blocks");

    let spatial = n == 3 && space.rank_of([vertex, first[0], first[1], first[2]]) == 4;

    Ok(DesarguesConfiguration { space: space.clone(), points, blocklines, spatial })
}

/// JSON form of an embedded configuration, keyed by digit labels: points by
/// pair ("12"), block lines by triple ("345"), blocks as label triples in
/// triple-rank order. Coordinates and basis rows are comma-separated
/// field-element indices. `field` records the modulus only when it is not
/// the default one for q. Maps are ordered, so output is deterministic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigDocument {
    pub q: u64,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub spatial: bool,
    pub points: BTreeMap<String, String>,
    pub blocks: Vec<[String; 3]>,
    pub blocklines: BTreeMap<String, String>,
    pub self_conjugate: Vec<String>,
}

impl ConfigDocument {
    pub(crate) fn field_for(&self) -> Result<Field> {
        let field = match &self.field {
            Some(spec) => Field::new(spec.parse()?)?,
            None => Field::of_order(self.q)?,
        };
        if field.order() as u64 != self.q {
            return Err(Error::Parse(format!(
                "field {} has order {}, document says q = {}",
                field.spec(),
                field.order(),
                self.q
            )));
        }
        Ok(field)
    }

    /// Rebuild the configuration from the seven generating points and check
    /// every remaining declared field against the derived structure.
    pub fn restore(&self) -> Result<DesarguesConfiguration> {
        let field = Arc::new(self.field_for()?);
        let space = Arc::new(ProjectiveSpace::new(field, self.n)?);
        let labeled = |r: usize| -> Result<ProjPoint> {
            let label = pair_label(r);
            let coords = self
                .points
                .get(&label)
                .ok_or_else(|| Error::Parse(format!("document is missing point {label:?}")))?;
            space.point_from_str(coords)
        };
        let pts: Vec<ProjPoint> = (0..10).map(labeled).collect::<Result<_>>()?;
        let config = perspective_config(
            &space,
            &pts[0],
            [&pts[1], &pts[2], &pts[3]],
            [&pts[4], &pts[5], &pts[6]],
        )?;
        for r in 7..10 {
            if config.point(r) != &pts[r] {
                return Err(Error::Parse(format!(
                    "declared point {} = {} disagrees with the derived crossing {}",
                    pair_label(r),
                    pts[r],
                    config.point(r)
                )));
            }
        }
        if config.spatial() != self.spatial {
            return Err(Error::Parse("declared spatial flag disagrees with the span".into()));
        }
        if self.blocks.len() != 10 {
            return Err(Error::Parse("a configuration has exactly ten blocks".into()));
        }
        for (t, members) in self.blocks.iter().enumerate() {
            let want = BLOCK_MEMBERS[t].map(pair_label);
            if members != &want {
                return Err(Error::Parse(format!(
                    "block {} must contain {want:?}",
                    triple_label(t)
                )));
            }
        }
        for t in 0..10 {
            let label = triple_label(t);
            if let Some(decl) = self.blocklines.get(&label) {
                if &space.subspace_from_str(decl)? != config.blockline(t) {
                    return Err(Error::Parse(format!(
                        "declared block line {label} disagrees with the derived one"
                    )));
                }
            }
        }
        let derived: Vec<String> =
            config.self_conjugate_points().into_iter().map(pair_label).collect();
        if derived != self.self_conjugate {
            return Err(Error::Parse("declared self-conjugate points disagree".into()));
        }
        Ok(config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn plane(q: u64) -> Arc<ProjectiveSpace> {
        Arc::new(ProjectiveSpace::new(Arc::new(Field::of_order(q).unwrap()), 2).unwrap())
    }

    /// First valid configuration in a deterministic scan order.
    fn first_config(space: &Arc<ProjectiveSpace>) -> DesarguesConfiguration {
        let v = space.point(0);
        let lines = space.lines_at(0).to_vec();
        for combo in lines.iter().combinations(3) {
            let others: Vec<Vec<u32>> = combo
                .iter()
                .map(|&&l| space.line(l).points.iter().copied().filter(|&p| p != 0).collect())
                .collect();
            for a in others[0].iter().copied().tuple_combinations::<(_, _)>() {
                for b in others[1].iter().copied().tuple_combinations::<(_, _)>() {
                    for c in others[2].iter().copied().tuple_combinations::<(_, _)>() {
                        for (sb, sc) in [(false, false), (false, true), (true, false), (true, true)] {
                            let (b0, b1) = if sb { (b.1, b.0) } else { b };
                            let (c0, c1) = if sc { (c.1, c.0) } else { c };
                            let cfg = perspective_config(
                                space,
                                v,
                                [space.point(a.0), space.point(b0), space.point(c0)],
                                [space.point(a.1), space.point(b1), space.point(c1)],
                            );
                            if let Ok(cfg) = cfg {
                                return cfg;
                            }
                        }
                    }
                }
            }
        }
        panic!("no configuration found");
    }

    #[test]
    fn label_tables_are_consistent() {
        for (r, &(i, j)) in PAIRS.iter().enumerate() {
            assert!(i < j);
            assert_eq!(pair_rank(i, j), r);
        }
        for (t, &(i, j, k)) in TRIPLES.iter().enumerate() {
            assert!(i < j && j < k);
            assert_eq!(triple_rank(i, j, k), t);
            let members: Vec<usize> =
                [(i, j), (i, k), (j, k)].iter().map(|&(a, b)| pair_rank(a, b)).collect();
            assert_eq!(members, BLOCK_MEMBERS[t]);
        }
        // each point lies in exactly three blocks: a 10_3 structure
        for r in 0..10 {
            let degree = BLOCK_MEMBERS.iter().filter(|m| m.contains(&r)).count();
            assert_eq!(degree, 3);
        }
    }

    #[test]
    fn polarity_is_complementation() {
        for (r, &(i, j)) in PAIRS.iter().enumerate() {
            let complement: Vec<u8> = (1..=5).filter(|&s| s != i && s != j).collect();
            let t = triple_rank(complement[0], complement[1], complement[2]);
            assert_eq!(t, polarity(r));
            assert_eq!(polarity(polarity(r)), r);
            // a point is never on its polar block: {i,j} meets its complement trivially
            assert!(!BLOCK_MEMBERS[t].contains(&r));
        }
    }

    #[test]
    fn first_plane_config_is_valid() {
        let space = plane(3);
        let cfg = first_config(&space);
        cfg.check().unwrap();
        assert!(!cfg.spatial());
        assert_eq!(cfg.span().proj_dim(), 2);
        // over GF(3) every configuration has exactly four self-conjugate points
        assert_eq!(cfg.self_conjugate_points().len(), 4);
    }

    #[test]
    fn relabel_preserves_key_and_structure() {
        let space = plane(3);
        let cfg = first_config(&space);
        let key = cfg.canonical_key();
        for perm in (1..=5u8).permutations(5) {
            let perm: [u8; 5] = perm.try_into().unwrap();
            let relabeled = cfg.relabel(perm);
            relabeled.check().unwrap();
            assert_eq!(relabeled.canonical_key(), key);
        }
        // swapping the two triangles: symbols 1 and 2 exchange
        let swapped = cfg.relabel([2, 1, 3, 4, 5]);
        assert_eq!(swapped.point(pair_rank(1, 3)), cfg.point(pair_rank(2, 3)));
        assert_eq!(swapped.point(pair_rank(1, 2)), cfg.point(pair_rank(1, 2)));
    }

    #[test]
    fn self_conjugate_set_is_relabel_covariant() {
        let space = plane(4);
        let cfg = first_config(&space);
        let perm = [3u8, 1, 4, 2, 5];
        let relabeled = cfg.relabel(perm);
        let base: HashSet<usize> = cfg.self_conjugate_points().into_iter().collect();
        let moved: HashSet<usize> = base
            .iter()
            .map(|&r| {
                let (i, j) = PAIRS[r];
                pair_rank(perm[i as usize - 1], perm[j as usize - 1])
            })
            .collect();
        let got: HashSet<usize> = relabeled.self_conjugate_points().into_iter().collect();
        assert_eq!(got, moved);
    }

    #[test]
    fn document_round_trip() {
        let space = plane(3);
        let cfg = first_config(&space);
        let doc = cfg.to_document();
        let json = serde_json::to_string_pretty(&doc).unwrap();
        let parsed: ConfigDocument = serde_json::from_str(&json).unwrap();
        let restored = parsed.restore().unwrap();
        assert_eq!(restored.canonical_key(), cfg.canonical_key());
        assert_eq!(restored.points(), cfg.points());
    }

    #[test]
    fn tampered_document_is_rejected() {
        let space = plane(3);
        let cfg = first_config(&space);
        // point (34) is the derived crossing P; move it somewhere else
        let mut doc = cfg.to_document();
        let honest = doc.points["34"].clone();
        let lie = if honest == *"0,0,1" { "0,1,1" } else { "0,0,1" };
        doc.points.insert("34".into(), lie.into());
        let err = doc.restore().unwrap_err();
        assert!(matches!(err, Error::Parse(_) | Error::Degenerate(_) | Error::NotInPerspective));
    }

    #[test]
    fn digit_labels_round_trip() {
        for r in 0..10 {
            assert_eq!(parse_pair_label(&pair_label(r)).unwrap(), r);
            assert_eq!(parse_triple_label(&triple_label(r)).unwrap(), r);
        }
        assert_eq!(pair_label(0), "12");
        assert_eq!(triple_label(9), "345");
        assert!(parse_pair_label("21").is_err());
        assert!(parse_pair_label("16").is_err());
        assert!(parse_pair_label("123").is_err());
        assert!(parse_triple_label("12").is_err());
    }

    #[test]
    fn blockline_structure_extends_blocks_by_self_conjugate_poles() {
        let space = plane(3);
        let cfg = first_config(&space);
        let structure = cfg.blockline_structure();
        let sc: HashSet<usize> = cfg.self_conjugate_points().into_iter().collect();
        for (t, subset) in structure.subsets.iter().enumerate() {
            let mut want: Vec<usize> = BLOCK_MEMBERS[t].to_vec();
            // the pole joins its polar line exactly when it is self-conjugate
            if sc.contains(&polarity(t)) {
                want.push(polarity(t));
            }
            want.sort_unstable();
            assert_eq!(subset, &want, "blockline {}", block_name(t));
        }
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        let space = plane(3);
        let cfg = first_config(&space);
        let p = |r: usize| cfg.point(r);
        // a corresponding pair collapsed
        assert!(matches!(
            perspective_config(&space, p(0), [p(1), p(2), p(3)], [p(1), p(5), p(6)]),
            Err(Error::Degenerate(_))
        ));
        // second triangle replaced by unrelated points: perspectivity fails
        let off = space
            .points()
            .iter()
            .find(|x| {
                !cfg.points().contains(x) && space.rank_of([p(0), p(1), *x]) == 3
            })
            .unwrap();
        assert_eq!(
            perspective_config(&space, p(0), [p(1), p(2), p(3)], [off, p(5), p(6)])
                .unwrap_err(),
            Error::NotInPerspective
        );
        // flat "triangle": A, B collinear with C on line AB
        let a = p(1);
        let b = p(2);
        let line_ab = space.line_through(a.index() as u32, b.index() as u32);
        let on_ab = space
            .line(line_ab)
            .points
            .iter()
            .map(|&i| space.point(i))
            .find(|x| *x != a && *x != b && *x != p(0))
            .unwrap();
        assert!(perspective_config(&space, p(0), [a, b, on_ab], [p(4), p(5), p(6)]).is_err());
    }

    #[test]
    fn wrong_dimension_rejected() {
        let field = Arc::new(Field::of_order(2).unwrap());
        let space = Arc::new(ProjectiveSpace::new(field, 4).unwrap());
        let pts = space.points();
        let err = perspective_config(
            &space,
            &pts[0],
            [&pts[1], &pts[2], &pts[3]],
            [&pts[4], &pts[5], &pts[6]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::WrongDimension(_)));
    }
}
