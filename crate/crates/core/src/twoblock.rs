//! Tangential 2-blocks of PG(3,2), by exhaustive scan of all 2^15 point
//! subsets against precomputed line bitmasks.
//!
//! A set S is a tangential 2-block when (a) every line of the space meets S
//! and (b) every point of S lies on some line meeting S in that point alone.
//! The scan buckets each hit as a hyperplane, as the point set of a spatial
//! Desargues configuration, or as OTHER. A nonempty OTHER bucket flags a gap
//! in the two-condition definition (a minimality clause some formulations
//! add), not an arithmetic failure, so it is reported rather than asserted.

use crate::enumeration::{spatial_census, ScaleLimits};
use crate::error::{Error, Result};
use crate::geometry::{space_of_order, ProjectiveSpace};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::time::Instant;

const POINTS: usize = 15;
const LINES: usize = 35;

/// Subset of the 15 points of PG(3,2); bit i is point id i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(pub u16);

impl PointSet {
    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> PointSet {
        let mut mask = 0u16;
        for id in ids {
            assert!((id as usize) < POINTS, "point id {id} outside PG(3,2)");
            mask |= 1 << id;
        }
        PointSet(mask)
    }

    pub fn ids(self) -> Vec<u32> {
        (0..POINTS as u32).filter(|&i| self.0 >> i & 1 == 1).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn hex(self) -> String {
        format!("0x{:04x}", self.0)
    }
}

fn require_pg32(space: &ProjectiveSpace) -> Result<()> {
    if space.n() != 3 || space.q() != 2 {
        return Err(Error::WrongSpace);
    }
    Ok(())
}

fn line_masks(space: &ProjectiveSpace) -> Result<[u16; LINES]> {
    require_pg32(space)?;
    let lines = space.lines();
    debug_assert_eq!(lines.len(), LINES);
    let mut masks = [0u16; LINES];
    for (mask, line) in masks.iter_mut().zip(lines) {
        *mask = PointSet::from_ids(line.points.iter().copied()).0;
    }
    Ok(masks)
}

fn tangential(lines: &[u16; LINES], s: u16) -> bool {
    // (a) no line may miss S
    if lines.iter().any(|&l| l & s == 0) {
        return false;
    }
    // (b) a line meeting S in a single point is a tangent there; every point
    // of S must collect one
    let mut touched = 0u16;
    for &l in lines {
        let m = l & s;
        if m.count_ones() == 1 {
            touched |= m;
        }
    }
    touched == s
}

/// Both defining conditions, against the 35 lines of PG(3,2).
pub fn is_tangential_two_block(space: &ProjectiveSpace, s: PointSet) -> Result<bool> {
    let lines = line_masks(space)?;
    Ok(tangential(&lines, s.0))
}

/// The counts-and-examples summary, shaped for JSON output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwoBlockReport {
    pub total_subsets: u64,
    pub hyperplane: u64,
    pub spatial_desargues: u64,
    pub other: u64,
    /// Bitmask hex strings of unclassified tangential 2-blocks, capped at 10.
    pub other_examples: Vec<String>,
}

/// Full classification: the report plus every bucket member, sorted.
#[derive(Debug, Clone)]
pub struct TwoBlockClassification {
    pub report: TwoBlockReport,
    pub hyperplanes: Vec<PointSet>,
    pub spatial_desargues: Vec<PointSet>,
    pub other: Vec<PointSet>,
    pub elapsed_ms: u128,
}

/// The 15 plane masks, straight from the linear forms over GF(2)^4 — kept
/// independent of the subspace machinery on purpose.
fn hyperplane_masks(space: &ProjectiveSpace) -> [u16; POINTS] {
    let mut planes = [0u16; POINTS];
    for (f, plane) in planes.iter_mut().enumerate() {
        let f = (f + 1) as u32;
        let mut mask = 0u16;
        for (id, p) in space.points().iter().enumerate() {
            let bits: u32 = p
                .coords()
                .iter()
                .enumerate()
                .map(|(i, c)| (c.index() as u32) << i)
                .sum();
            if (bits & f).count_ones() % 2 == 0 {
                mask |= 1 << id;
            }
        }
        debug_assert_eq!(mask.count_ones(), 7);
        *plane = mask;
    }
    planes
}

/// Scan all 2^15 subsets of PG(3,2) and classify every tangential 2-block.
pub fn classify_two_blocks() -> Result<TwoBlockClassification> {
    let start = Instant::now();
    let space = space_of_order(2, 3)?;
    let lines = line_masks(&space)?;
    let planes: HashSet<u16> = hyperplane_masks(&space).into_iter().collect();
    // reference point sets from the independent configuration census
    let census = spatial_census(&space, None, &ScaleLimits::default())?;
    let config_sets: HashSet<u16> = census
        .stats
        .iter()
        .map(|stat| PointSet::from_ids(stat.key.points.iter().copied()).0)
        .collect();

    #[derive(Default)]
    struct Buckets {
        hyperplanes: Vec<u16>,
        spatial: Vec<u16>,
        other: Vec<u16>,
    }
    let buckets = (0u32..1 << POINTS)
        .into_par_iter()
        .fold(Buckets::default, |mut acc, raw| {
            let s = raw as u16;
            if tangential(&lines, s) {
                if planes.contains(&s) {
                    acc.hyperplanes.push(s);
                } else if config_sets.contains(&s) {
                    acc.spatial.push(s);
                } else {
                    acc.other.push(s);
                }
            }
            acc
        })
        .reduce(Buckets::default, |mut a, mut b| {
            a.hyperplanes.append(&mut b.hyperplanes);
            a.spatial.append(&mut b.spatial);
            a.other.append(&mut b.other);
            a
        });

    let sort = |mut v: Vec<u16>| -> Vec<PointSet> {
        v.sort_unstable();
        v.into_iter().map(PointSet).collect()
    };
    let hyperplanes = sort(buckets.hyperplanes);
    let spatial_desargues = sort(buckets.spatial);
    let other = sort(buckets.other);

    let report = TwoBlockReport {
        total_subsets: 1 << POINTS,
        hyperplane: hyperplanes.len() as u64,
        spatial_desargues: spatial_desargues.len() as u64,
        other: other.len() as u64,
        other_examples: other.iter().take(10).map(|s| s.hex()).collect(),
    };
    Ok(TwoBlockClassification {
        report,
        hyperplanes,
        spatial_desargues,
        other,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
