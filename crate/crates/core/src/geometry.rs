//! Projective spaces PG(n,q) for 2 <= n <= 4.
//!
//! Points are canonical coordinate vectors (first nonzero coordinate 1) and
//! carry their rank under the lexicographic ordering of coordinate tuples, so
//! point identity is a single integer compare. Flats are reduced row-echelon
//! bases, which makes subspace equality structural. Meets use the Zassenhaus
//! block-matrix trick; everything is exact table arithmetic, no floats.
//!
//! Each space lazily builds a line table (line through two points, lines
//! through a point, point lists per line) the first time an enumeration asks
//! for it; the table is immutable afterwards and safe to share across worker
//! threads.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// A projective point: canonical homogeneous coordinates plus its rank in the
/// space's point enumeration.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<FieldElement>,
    index: u32,
}

impl ProjPoint {
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub(crate) fn id(&self) -> u32 {
        self.index
    }
}

impl fmt::Display for ProjPoint {
    /// Coordinates as element indices, comma separated: `"1,0,2"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}({self})", self.index)
    }
}

/// A flat of any dimension, stored as a reduced row-echelon basis.
/// The empty flat (no rows) has projective dimension -1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<FieldElement>>,
}

impl Subspace {
    pub fn proj_dim(&self) -> isize {
        self.basis.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_point(&self) -> bool {
        self.basis.len() == 1
    }

    pub fn is_line(&self) -> bool {
        self.basis.len() == 2
    }

    /// Reduced row-echelon basis rows.
    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.basis
    }

    pub fn ambient_width(&self) -> usize {
        self.ambient
    }
}

impl fmt::Display for Subspace {
    /// Basis rows as element indices: `"1,0,0;0,1,2"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace[{self}]")
    }
}

/// One line of a space: its flat and the sorted ids of its q+1 points.
#[derive(Debug)]
pub struct LineInfo {
    pub subspace: Subspace,
    pub points: Vec<u32>,
}

impl LineInfo {
    pub fn contains(&self, point_id: u32) -> bool {
        self.points.binary_search(&point_id).is_ok()
    }
}

#[derive(Debug)]
struct LineTables {
    lines: Vec<LineInfo>,
    /// point-pair -> line id, row-major over point ids; u32::MAX on the diagonal
    by_pair: Vec<u32>,
    at_point: Vec<Vec<u32>>,
    index_of: HashMap<Subspace, u32>,
}

/// PG(n,q) with a precomputed canonical point enumeration.
pub struct ProjectiveSpace {
    field: Arc<Field>,
    n: usize,
    points: Vec<ProjPoint>,
    index_of: HashMap<Vec<FieldElement>, u32>,
    tables: OnceLock<LineTables>,
}

impl fmt::Debug for ProjectiveSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PG({},{})", self.n, self.field.order())
    }
}

/// Shorthand for `PG(n, q)` with the default modulus for q.
pub fn space_of_order(q: u64, n: usize) -> Result<Arc<ProjectiveSpace>> {
    Ok(Arc::new(ProjectiveSpace::new(Arc::new(Field::of_order(q)?), n)?))
}

impl ProjectiveSpace {
    pub fn new(field: Arc<Field>, n: usize) -> Result<Self> {
        if !(2..=4).contains(&n) {
            return Err(Error::WrongDimension(format!(
                "projective dimension must be 2, 3, or 4, got {n}"
            )));
        }
        let q = field.order();
        let width = n + 1;
        let total = q.pow(width as u32);
        let mut points = Vec::new();
        let mut index_of = HashMap::new();
        // big-endian digit decomposition walks coordinate tuples in lex order
        for raw in 0..total {
            let mut coords = vec![FieldElement(0); width];
            let mut v = raw;
            for c in coords.iter_mut().rev() {
                *c = FieldElement((v % q) as u16);
                v /= q;
            }
            let first_nz = coords.iter().position(|c| !c.is_zero());
            if first_nz.map(|i| coords[i].index() == 1) == Some(true) {
                let index = points.len() as u32;
                index_of.insert(coords.clone(), index);
                points.push(ProjPoint { coords, index });
            }
        }
        debug_assert_eq!(points.len(), (q.pow(width as u32) - 1) / (q - 1));
        Ok(ProjectiveSpace { field, n, points, index_of, tables: OnceLock::new() })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.order()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn width(&self) -> usize {
        self.n + 1
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    /// All points in canonical (lexicographic) order.
    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn point(&self, id: u32) -> &ProjPoint {
        &self.points[id as usize]
    }

    /// Scale a raw coordinate vector to its canonical representative.
    pub fn normalize(&self, raw: &[FieldElement]) -> Result<ProjPoint> {
        if raw.len() != self.width() {
            return Err(Error::MixedSpaces(format!(
                "expected {} coordinates, got {}",
                self.width(),
                raw.len()
            )));
        }
        let q = self.q();
        if let Some(c) = raw.iter().find(|c| c.index() >= q) {
            return Err(Error::MixedSpaces(format!(
                "coordinate {c} is not an element of GF({q})"
            )));
        }
        let first_nz = raw.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroVector)?;
        let s = self.field.inv(raw[first_nz]).expect("nonzero by construction");
        let coords: Vec<FieldElement> = raw.iter().map(|&c| self.field.mul(s, c)).collect();
        let index = self.index_of[&coords];
        Ok(ProjPoint { coords, index })
    }

    /// Parse `"1,0,2"` (coordinates as element indices) into a point.
    pub fn point_from_str(&self, s: &str) -> Result<ProjPoint> {
        let coords = s
            .split(',')
            .map(|part| {
                let v: usize = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coordinate {part:?} in point {s:?}")))?;
                self.field
                    .element(v)
                    .ok_or_else(|| Error::Parse(format!("coordinate {v} out of range for GF({})", self.q())))
            })
            .collect::<Result<Vec<_>>>()?;
        self.normalize(&coords)
    }

    /// Parse `"1,0,0;0,1,2"` as the span of the given raw row vectors.
    pub fn subspace_from_str(&self, s: &str) -> Result<Subspace> {
        let pts = s
            .split(';')
            .map(|row| self.point_from_str(row))
            .collect::<Result<Vec<_>>>()?;
        self.span(&pts)
    }

    // ---- exact linear algebra ----

    fn rref(&self, mut rows: Vec<Vec<FieldElement>>) -> Vec<Vec<FieldElement>> {
        let f = &*self.field;
        let width = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..width {
            let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pivot);
            let s = f.inv(rows[rank][col]).expect("pivot nonzero");
            for c in col..width {
                rows[rank][c] = f.mul(s, rows[rank][c]);
            }
            for i in 0..rows.len() {
                if i != rank && !rows[i][col].is_zero() {
                    let factor = rows[i][col];
                    for c in col..width {
                        let t = f.mul(factor, rows[rank][c]);
                        rows[i][c] = f.sub(rows[i][c], t);
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        rows
    }

    fn check_point(&self, p: &ProjPoint) -> Result<()> {
        if p.coords.len() != self.width() || p.index as usize >= self.points.len() {
            return Err(Error::MixedSpaces(format!(
                "point {p} does not belong to PG({},{})",
                self.n,
                self.q()
            )));
        }
        Ok(())
    }

    /// Smallest flat containing the given points.
    pub fn span<'a, I>(&self, points: I) -> Result<Subspace>
    where
        I: IntoIterator<Item = &'a ProjPoint>,
    {
        let mut rows = Vec::new();
        for p in points {
            self.check_point(p)?;
            rows.push(p.coords.clone());
        }
        let basis = self.rref(rows);
        Ok(Subspace { ambient: self.width(), basis })
    }

    /// Rank of the coordinate matrix of the given points (proj. dim + 1 of span).
    pub fn rank_of<'a, I>(&self, points: I) -> usize
    where
        I: IntoIterator<Item = &'a ProjPoint>,
    {
        let rows: Vec<Vec<FieldElement>> = points.into_iter().map(|p| p.coords.clone()).collect();
        self.rref(rows).len()
    }

    /// Intersection flat, possibly empty (Zassenhaus block elimination).
    pub fn meet(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        let w = self.width();
        if a.ambient != w || b.ambient != w {
            return Err(Error::MixedSpaces(format!(
                "meet of flats with ambient widths {} and {} in PG({},{})",
                a.ambient,
                b.ambient,
                self.n,
                self.q()
            )));
        }
        let zero = FieldElement(0);
        let mut rows = Vec::with_capacity(a.basis.len() + b.basis.len());
        for r in &a.basis {
            let mut row = r.clone();
            row.extend_from_slice(r);
            rows.push(row);
        }
        for r in &b.basis {
            let mut row = r.clone();
            row.resize(2 * w, zero);
            rows.push(row);
        }
        let reduced = self.rref(rows);
        let inter: Vec<Vec<FieldElement>> = reduced
            .into_iter()
            .filter(|row| row[..w].iter().all(|c| c.is_zero()))
            .map(|row| row[w..].to_vec())
            .collect();
        let basis = self.rref(inter);
        Ok(Subspace { ambient: w, basis })
    }

    fn reduces_to_zero(&self, s: &Subspace, coords: &[FieldElement]) -> bool {
        let f = &*self.field;
        let mut v = coords.to_vec();
        for row in &s.basis {
            let pivot = row.iter().position(|c| !c.is_zero()).expect("no zero rows in a basis");
            let factor = v[pivot];
            if !factor.is_zero() {
                for (vc, rc) in v.iter_mut().zip(row) {
                    let t = f.mul(factor, *rc);
                    *vc = f.sub(*vc, t);
                }
            }
        }
        v.iter().all(|c| c.is_zero())
    }

    /// Point-flat incidence.
    pub fn incident(&self, p: &ProjPoint, s: &Subspace) -> bool {
        assert_eq!(p.coords.len(), s.ambient, "incidence across different spaces");
        self.reduces_to_zero(s, &p.coords)
    }

    /// Whether `inner` is contained in `outer`.
    pub fn contains(&self, outer: &Subspace, inner: &Subspace) -> bool {
        assert_eq!(outer.ambient, inner.ambient, "containment across different spaces");
        inner.basis.iter().all(|row| self.reduces_to_zero(outer, row))
    }

    /// All points of a flat, sorted by index.
    pub fn flat_points(&self, s: &Subspace) -> Vec<ProjPoint> {
        let f = &*self.field;
        let q = self.q();
        let r = s.basis.len();
        let mut out = Vec::new();
        if r == 0 {
            return out;
        }
        // canonical coefficient vectors: first nonzero coefficient is 1
        let mut coeff = vec![0usize; r];
        let total = q.pow(r as u32);
        for raw in 1..total {
            let mut v = raw;
            for c in coeff.iter_mut() {
                *c = v % q;
                v /= q;
            }
            let first_nz = coeff.iter().position(|&c| c != 0).unwrap();
            if coeff[first_nz] != 1 {
                continue;
            }
            let mut vec = vec![FieldElement(0); s.ambient];
            for (ci, row) in coeff.iter().zip(&s.basis) {
                if *ci == 0 {
                    continue;
                }
                let c = FieldElement(*ci as u16);
                for (acc, rc) in vec.iter_mut().zip(row) {
                    let t = f.mul(c, *rc);
                    *acc = f.add(*acc, t);
                }
            }
            out.push(self.normalize(&vec).expect("combination of basis rows is nonzero"));
        }
        out.sort_by_key(ProjPoint::id);
        out.dedup_by_key(|p| p.id());
        debug_assert_eq!(out.len(), (q.pow(r as u32) - 1) / (q - 1));
        out
    }

    // ---- line tables ----

    fn tables(&self) -> &LineTables {
        self.tables.get_or_init(|| {
            let count = self.points.len();
            let mut lines = Vec::new();
            let mut by_pair = vec![u32::MAX; count * count];
            let mut at_point = vec![Vec::new(); count];
            let mut index_of = HashMap::new();
            for i in 0..count {
                for j in i + 1..count {
                    if by_pair[i * count + j] != u32::MAX {
                        continue;
                    }
                    let subspace = self
                        .span([&self.points[i], &self.points[j]])
                        .expect("own points span");
                    debug_assert!(subspace.is_line());
                    let members: Vec<u32> =
                        self.flat_points(&subspace).iter().map(ProjPoint::id).collect();
                    let id = lines.len() as u32;
                    for (a, &pa) in members.iter().enumerate() {
                        at_point[pa as usize].push(id);
                        for &pb in &members[a + 1..] {
                            by_pair[pa as usize * count + pb as usize] = id;
                            by_pair[pb as usize * count + pa as usize] = id;
                        }
                    }
                    index_of.insert(subspace.clone(), id);
                    lines.push(LineInfo { subspace, points: members });
                }
            }
            LineTables { lines, by_pair, at_point, index_of }
        })
    }

    /// All lines of the space; built once on first use.
    pub fn lines(&self) -> &[LineInfo] {
        &self.tables().lines
    }

    pub fn line(&self, id: u32) -> &LineInfo {
        &self.tables().lines[id as usize]
    }

    /// Id of the unique line through two distinct points.
    pub fn line_through(&self, a: u32, b: u32) -> u32 {
        assert_ne!(a, b, "no unique line through a repeated point");
        self.tables().by_pair[a as usize * self.points.len() + b as usize]
    }

    /// Ids of the lines through a point.
    pub fn lines_at(&self, p: u32) -> &[u32] {
        &self.tables().at_point[p as usize]
    }

    /// Id of a dim-1 flat in the line table.
    pub fn line_index(&self, s: &Subspace) -> Option<u32> {
        self.tables().index_of.get(s).copied()
    }

    // ---- affine charts ----

    /// The hyperplane with last coordinate zero.
    pub fn hyperplane_at_infinity(&self) -> Subspace {
        let w = self.width();
        let basis = (0..w - 1)
            .map(|i| {
                let mut row = vec![FieldElement(0); w];
                row[i] = FieldElement(1);
                row
            })
            .collect();
        Subspace { ambient: w, basis }
    }

    pub fn affine_chart(&self, hyperplane: &Subspace) -> Result<AffineChart> {
        if hyperplane.ambient != self.width() || hyperplane.proj_dim() != self.n as isize - 1 {
            return Err(Error::WrongDimension(format!(
                "affine chart needs a hyperplane of PG({},{})",
                self.n,
                self.q()
            )));
        }
        let points = self
            .points
            .iter()
            .filter(|p| !self.incident(p, hyperplane))
            .map(ProjPoint::id)
            .collect();
        Ok(AffineChart { hyperplane: hyperplane.clone(), points })
    }

    /// Chart relative to the last-coordinate-zero hyperplane.
    pub fn default_affine_chart(&self) -> AffineChart {
        self.affine_chart(&self.hyperplane_at_infinity()).expect("canonical hyperplane")
    }
}

/// The affine points left after removing a hyperplane.
#[derive(Debug, Clone)]
pub struct AffineChart {
    hyperplane: Subspace,
    points: Vec<u32>,
}

impl AffineChart {
    pub fn hyperplane(&self) -> &Subspace {
        &self.hyperplane
    }

    /// Ids of the q^n affine points, in canonical order.
    pub fn point_ids(&self) -> &[u32] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(q: u64, n: usize) -> ProjectiveSpace {
        ProjectiveSpace::new(Arc::new(Field::of_order(q).unwrap()), n).unwrap()
    }

    #[test]
    fn point_counts() {
        for (q, n, want) in [
            (2, 2, 7),
            (3, 2, 13),
            (4, 2, 21),
            (5, 2, 31),
            (9, 2, 91),
            (2, 3, 15),
            (3, 3, 40),
            (2, 4, 31),
            (3, 4, 121),
        ] {
            assert_eq!(space(q, n).point_count(), want, "PG({n},{q})");
        }
    }

    #[test]
    fn line_counts() {
        assert_eq!(space(3, 2).lines().len(), 13);
        assert_eq!(space(5, 2).lines().len(), 31);
        assert_eq!(space(2, 3).lines().len(), 35);
        assert_eq!(space(3, 3).lines().len(), 130);
        assert_eq!(space(2, 4).lines().len(), 155);
    }

    #[test]
    fn canonical_enumeration_is_lexicographic() {
        let s = space(3, 2);
        assert_eq!(s.point(0).to_string(), "0,0,1");
        assert_eq!(s.point(1).to_string(), "0,1,0");
        assert_eq!(s.point((s.point_count() - 1) as u32).to_string(), "1,2,2");
        for (i, p) in s.points().iter().enumerate() {
            assert_eq!(p.index(), i);
        }
    }

    #[test]
    fn normalize_scales_to_leading_one() {
        let s = space(3, 2);
        let e = |i: usize| s.field().element(i).unwrap();
        let p = s.normalize(&[e(0), e(2), e(1)]).unwrap();
        assert_eq!(p.to_string(), "0,1,2");
        assert_eq!(s.normalize(&[e(0), e(0), e(0)]).unwrap_err(), Error::ZeroVector);
        assert!(matches!(s.normalize(&[e(1), e(0)]).unwrap_err(), Error::MixedSpaces(_)));
    }

    #[test]
    fn two_points_span_a_line_with_q_plus_one_points() {
        let s = space(4, 2);
        let l = s.span([s.point(0), s.point(5)]).unwrap();
        assert!(l.is_line());
        let pts = s.flat_points(&l);
        assert_eq!(pts.len(), 5);
        assert!(pts.iter().all(|p| s.incident(p, &l)));
    }

    #[test]
    fn plane_lines_meet_in_one_point() {
        let s = space(3, 2);
        let l1 = s.line(0).subspace.clone();
        let l2 = s.line(5).subspace.clone();
        let m = s.meet(&l1, &l2).unwrap();
        assert!(m.is_point());
        assert!(s.contains(&l1, &m) && s.contains(&l2, &m));
    }

    #[test]
    fn meet_is_idempotent_and_contained() {
        let s = space(3, 3);
        let plane = s.span([s.point(0), s.point(1), s.point(17)]).unwrap();
        let m = s.meet(&plane, &plane).unwrap();
        assert_eq!(m, plane);
        assert_eq!(s.flat_points(&plane).len(), 13);
    }

    #[test]
    fn four_generic_points_span_pg3() {
        let s = space(2, 3);
        let ids: Vec<&ProjPoint> = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
            .iter()
            .map(|&(a, b, c, d)| {
                let e = |i: usize| s.field().element(i).unwrap();
                s.points()
                    .iter()
                    .find(|p| p.coords() == [e(a), e(b), e(c), e(d)])
                    .unwrap()
            })
            .collect();
        let all = s.span(ids).unwrap();
        assert_eq!(all.proj_dim(), 3);
    }

    #[test]
    fn affine_chart_has_q_to_the_n_points() {
        assert_eq!(space(3, 3).default_affine_chart().len(), 27);
        assert_eq!(space(2, 4).default_affine_chart().len(), 16);
        assert_eq!(space(5, 2).default_affine_chart().len(), 25);
        let s = space(3, 2);
        let chart = s.default_affine_chart();
        for &id in chart.point_ids() {
            assert!(!s.incident(s.point(id), chart.hyperplane()));
        }
    }

    #[test]
    fn line_tables_are_consistent_with_incidence() {
        let s = space(3, 2);
        for info in s.lines() {
            for &pid in &info.points {
                assert!(s.incident(s.point(pid), &info.subspace));
            }
            assert_eq!(info.points.len(), 4);
        }
        let l = s.line_through(0, 1);
        assert!(s.line(l).contains(0) && s.line(l).contains(1));
        assert_eq!(s.lines_at(0).len(), 4);
        assert_eq!(s.line_index(&s.line(7).subspace), Some(7));
    }

    #[test]
    fn string_round_trips() {
        let s = space(5, 2);
        let p = s.point_from_str("1,2,4").unwrap();
        assert_eq!(p.to_string(), "1,2,4");
        let sub = s.subspace_from_str("1,0,0;0,1,3").unwrap();
        assert_eq!(s.subspace_from_str(&sub.to_string()).unwrap(), sub);
        assert!(s.point_from_str("1,2,9").is_err());
        assert!(s.point_from_str("1,x,0").is_err());
    }

    #[test]
    fn wrong_dimension_rejected() {
        let f = Arc::new(Field::of_order(3).unwrap());
        assert!(ProjectiveSpace::new(f.clone(), 1).is_err());
        assert!(ProjectiveSpace::new(f, 5).is_err());
    }
}
