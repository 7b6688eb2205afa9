//! Closed-form counts of Desargues configurations and 5-compressors, plus the
//! exhaustive oracles that confirm them by enumerating the actual objects.
//!
//! The two halves are deliberately independent: the closed forms are exact
//! big-integer formula evaluations, while the oracles build every candidate
//! with [`perspective_config`] (or a raw rank scan, for compressors and arcs)
//! and dedupe by canonical key. Agreement between the halves is the point.

use crate::compressor::{no_four_coplanar, FiveCompressor};
use crate::desargues::{
    perspective_config, polarity, ConfigKey, DesarguesConfiguration, BLOCK_MEMBERS, PAIRS,
};
use crate::error::{Error, Result};
use crate::field::{prime_power, Field};
use crate::geometry::{AffineChart, ProjPoint, ProjectiveSpace};
use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

// ---------------------------------------------------------------------------
// quantities and closed forms
// ---------------------------------------------------------------------------

/// The counted quantities. Each has a closed form in q and (except the last)
/// an exhaustive oracle reproducing it at small q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Quantity {
    /// Affine fifth points completing the standard frame to a 5-compressor:
    /// (q−2)(q²−2q+2).
    #[serde(rename = "P5_CHOICES")]
    P5Choices,
    /// 5-compressors of PG(3,q) through a fixed affine point pair:
    /// (q³−q)(q³−q²)(q−2)(q²−2q+2)/6.
    #[serde(rename = "THETA_PLANAR")]
    ThetaPlanar,
    /// All Desargues configurations of PG(2,q):
    /// q³(q³−1)(q²−1)(q−2)(q²−2q+2)/120.
    #[serde(rename = "TOTAL_PLANAR")]
    TotalPlanar,
    /// 5-arcs of PG(4,q) through a fixed affine point pair:
    /// (q⁴−q)(q⁴−q²)(q⁴−q³)/6.
    #[serde(rename = "THETA_SPATIAL")]
    ThetaSpatial,
    /// All spatial Desargues configurations of PG(3,q):
    /// (q³+q²+q+1)(q⁴−q)(q⁴−q²)(q⁴−q³)/120.
    #[serde(rename = "TOTAL_SPATIAL")]
    TotalSpatial,
    /// Spatial configurations through a fixed point, counted directly from
    /// the vertex-scan skeleton: (q²+q+1)(q²+q)q²·C(q,2)³·4/6. Identical to
    /// THETA_SPATIAL/2 for every q.
    #[serde(rename = "SPATIAL_THROUGH_POINT")]
    SpatialThroughPoint,
    /// A tempting but wrong count of planar configurations through a point:
    /// C(q+1,3)·C(q,2)²·2(q−1)(q−2). Kept as a documented pitfall; the oracle
    /// disagrees with it for every q ≥ 3.
    #[serde(rename = "NAIVE_PLANAR_THROUGH_POINT")]
    NaivePlanarThroughPoint,
}

pub const QUANTITIES: [Quantity; 7] = [
    Quantity::P5Choices,
    Quantity::ThetaPlanar,
    Quantity::TotalPlanar,
    Quantity::ThetaSpatial,
    Quantity::TotalSpatial,
    Quantity::SpatialThroughPoint,
    Quantity::NaivePlanarThroughPoint,
];

impl Quantity {
    pub fn tag(self) -> &'static str {
        match self {
            Quantity::P5Choices => "P5_CHOICES",
            Quantity::ThetaPlanar => "THETA_PLANAR",
            Quantity::TotalPlanar => "TOTAL_PLANAR",
            Quantity::ThetaSpatial => "THETA_SPATIAL",
            Quantity::TotalSpatial => "TOTAL_SPATIAL",
            Quantity::SpatialThroughPoint => "SPATIAL_THROUGH_POINT",
            Quantity::NaivePlanarThroughPoint => "NAIVE_PLANAR_THROUGH_POINT",
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        QUANTITIES
            .into_iter()
            .find(|quantity| quantity.tag() == norm)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown quantity {s:?}; expected one of {}",
                    QUANTITIES.iter().map(|quantity| quantity.tag()).join(", ")
                ))
            })
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn qpow(q: u64, k: u32) -> BigUint {
    big(q).pow(k)
}

/// Numerator and denominator of the closed form, before the exact division.
/// Kept separate so divisibility itself can be checked as a property rather
/// than assumed.
pub(crate) fn closed_form_parts(quantity: Quantity, q: u64) -> (BigUint, BigUint) {
    // (q−1)² + 1 = q² − 2q + 2, written without intermediate negatives
    let core = (big(q - 1)).pow(2) + 1u32;
    match quantity {
        Quantity::P5Choices => (big(q - 2) * core, big(1)),
        Quantity::ThetaPlanar => (
            (qpow(q, 3) - q) * (qpow(q, 3) - qpow(q, 2)) * big(q - 2) * core,
            big(6),
        ),
        Quantity::TotalPlanar => (
            qpow(q, 3) * (qpow(q, 3) - 1u32) * (qpow(q, 2) - 1u32) * big(q - 2) * core,
            big(120),
        ),
        Quantity::ThetaSpatial => (
            (qpow(q, 4) - q) * (qpow(q, 4) - qpow(q, 2)) * (qpow(q, 4) - qpow(q, 3)),
            big(6),
        ),
        Quantity::TotalSpatial => (
            (qpow(q, 3) + qpow(q, 2) + q + 1u32)
                * (qpow(q, 4) - q)
                * (qpow(q, 4) - qpow(q, 2))
                * (qpow(q, 4) - qpow(q, 3)),
            big(120),
        ),
        Quantity::SpatialThroughPoint => (
            // (q²+q+1)(q²+q)q² · (q(q−1)/2)³ · 4, the /2³ folded into the denominator
            (qpow(q, 2) + q + 1u32)
                * (qpow(q, 2) + q)
                * qpow(q, 2)
                * (big(q) * big(q - 1)).pow(3)
                * 4u32,
            big(48),
        ),
        Quantity::NaivePlanarThroughPoint => (
            // C(q+1,3)·C(q,2)²·2(q−1)(q−2) with the binomials expanded
            big(2) * qpow(q, 3) * big(q + 1) * big(q - 1).pow(4) * big(q - 2),
            big(24),
        ),
    }
}

/// Exact value of the closed form. Divisibility of the numerator is a
/// consequence of the counting theorems, so a remainder is a hard error.
pub fn closed_form(quantity: Quantity, q: u64) -> Result<BigUint> {
    if prime_power(q).is_none() {
        return Err(Error::InvalidOrder(q));
    }
    let (num, den) = closed_form_parts(quantity, q);
    let rem = &num % &den;
    assert!(
        rem.is_zero(),
        "{quantity} closed form is not integral at q = {q}; divisibility is part of the theorem"
    );
    Ok(num / den)
}

// ---------------------------------------------------------------------------
// scale limits
// ---------------------------------------------------------------------------

/// Largest q each exhaustive mode runs at. The defaults are the desk-scale
/// envelope; raise them through a key=value override file if you have the
/// patience.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaleLimits {
    pub planar_global_max_q: u64,
    pub planar_through_max_q: u64,
    pub spatial_global_max_q: u64,
    pub spatial_through_max_q: u64,
    pub compressor_max_q: u64,
    pub arc_max_q: u64,
    pub p5_max_q: u64,
}

impl Default for ScaleLimits {
    fn default() -> Self {
        ScaleLimits {
            planar_global_max_q: 4,
            planar_through_max_q: 5,
            spatial_global_max_q: 2,
            spatial_through_max_q: 3,
            compressor_max_q: 4,
            arc_max_q: 3,
            p5_max_q: 9,
        }
    }
}

impl ScaleLimits {
    /// Apply `key = value` overrides, one per line; `#` starts a comment.
    pub fn apply_overrides(&mut self, text: &str) -> Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("limits line {}: expected key=value", lineno + 1))
            })?;
            let value: u64 = value.trim().parse().map_err(|_| {
                Error::Parse(format!("limits line {}: bad value {:?}", lineno + 1, value.trim()))
            })?;
            let slot = match key.trim() {
                "planar_global_max_q" => &mut self.planar_global_max_q,
                "planar_through_max_q" => &mut self.planar_through_max_q,
                "spatial_global_max_q" => &mut self.spatial_global_max_q,
                "spatial_through_max_q" => &mut self.spatial_through_max_q,
                "compressor_max_q" => &mut self.compressor_max_q,
                "arc_max_q" => &mut self.arc_max_q,
                "p5_max_q" => &mut self.p5_max_q,
                other => {
                    return Err(Error::Parse(format!(
                        "limits line {}: unknown key {other:?}",
                        lineno + 1
                    )))
                }
            };
            *slot = value;
        }
        Ok(())
    }
}

fn ensure_scale(q: u64, max_q: u64, what: &str) -> Result<()> {
    if q > max_q {
        return Err(Error::ScaleLimit(format!(
            "{what} at q = {q} exceeds the exhaustive envelope q <= {max_q}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// configuration census
// ---------------------------------------------------------------------------

/// Label-free facts about one configuration, recorded once per canonical key.
/// Everything here is a function of the configuration as a set system, so
/// per-vertex scans that rediscover the same key produce identical stats.
#[derive(Debug, Clone)]
pub struct ConfigStats {
    pub key: ConfigKey,
    pub spatial: bool,
    pub sc_count: usize,
    /// Every pair of self-conjugate points lies on a common block
    /// (equivalently: their pair labels share a symbol).
    pub sc_pairs_share_block: bool,
    /// Every blockline carrying a 4th configuration point carries exactly the
    /// pole of that blockline as the extra.
    pub fourth_points_are_poles: bool,
    pub max_blockline_points: usize,
    /// Line-table ids of the 10 blocklines, sorted.
    pub blockline_ids: [u32; 10],
}

impl ConfigStats {
    pub fn of(config: &DesarguesConfiguration) -> ConfigStats {
        let space = config.space();
        let sc = config.self_conjugate_points();
        let sc_pairs_share_block = sc.iter().tuple_combinations().all(|(&r, &s)| {
            let (a, b) = PAIRS[r];
            let (c, d) = PAIRS[s];
            a == c || a == d || b == c || b == d
        });

        let structure = config.blockline_structure();
        let mut fourth_points_are_poles = true;
        let mut max_blockline_points = 0;
        for (t, subset) in structure.subsets.iter().enumerate() {
            max_blockline_points = max_blockline_points.max(subset.len());
            match subset.len() {
                3 => {}
                4 => {
                    let extra = subset
                        .iter()
                        .copied()
                        .find(|r| !BLOCK_MEMBERS[t].contains(r))
                        .expect("4-point blockline must carry a point outside its block");
                    fourth_points_are_poles &= extra == polarity(t);
                }
                _ => fourth_points_are_poles = false,
            }
        }

        let mut blockline_ids = [0u32; 10];
        for (slot, line) in blockline_ids.iter_mut().zip(config.blocklines()) {
            *slot = space
                .line_index(line)
                .expect("a blockline is a line of its own space");
        }
        blockline_ids.sort_unstable();

        ConfigStats {
            key: config.canonical_key(),
            spatial: config.spatial(),
            sc_count: sc.len(),
            sc_pairs_share_block,
            fourth_points_are_poles,
            max_blockline_points,
            blockline_ids,
        }
    }
}

/// Result of an exhaustive configuration scan: either all configurations of
/// the space (`through: None`) or all through one fixed point.
#[derive(Debug, Clone)]
pub struct Census {
    pub q: u64,
    pub n: usize,
    pub through: Option<u32>,
    pub count: u64,
    /// One entry per distinct configuration, sorted by canonical key.
    pub stats: Vec<ConfigStats>,
    pub elapsed_ms: u128,
}

/// Enumerate every configuration with vertex at `v_id`: choose 3 lines
/// through it (non-coplanar when the host is a solid — coplanar triples give
/// planar configurations, which are counted in their own plane), an unordered
/// point pair on each, and one of 4 pairings (swapping a whole triangle gives
/// the same configuration, so one pair stays fixed). Validation and dedupe do
/// the rest; the skeleton deliberately over-generates.
fn scan_vertex(
    space: &Arc<ProjectiveSpace>,
    v_id: u32,
    out: &mut HashMap<ConfigKey, ConfigStats>,
) {
    let v = space.point(v_id);
    let solid = space.n() == 3;
    let line_ids = space.lines_at(v_id);
    let other = |line_id: u32| {
        let info = space.line(line_id);
        let id = info
            .points
            .iter()
            .copied()
            .find(|&p| p != v_id)
            .expect("a line has more points than just the vertex");
        space.point(id)
    };

    for (i1, i2, i3) in line_ids.iter().copied().tuple_combinations() {
        if solid && space.rank_of([v, other(i1), other(i2), other(i3)]) != 4 {
            continue;
        }
        let pool = |line_id: u32| -> Vec<u32> {
            space
                .line(line_id)
                .points
                .iter()
                .copied()
                .filter(|&p| p != v_id)
                .collect()
        };
        let (pool1, pool2, pool3) = (pool(i1), pool(i2), pool(i3));
        for (a0, a1) in pool1.iter().copied().tuple_combinations() {
            for (b0, b1) in pool2.iter().copied().tuple_combinations() {
                for (c0, c1) in pool3.iter().copied().tuple_combinations() {
                    for (bf, bs) in [(b0, b1), (b1, b0)] {
                        for (cf, cs) in [(c0, c1), (c1, c0)] {
                            let first = [space.point(a0), space.point(bf), space.point(cf)];
                            let second = [space.point(a1), space.point(bs), space.point(cs)];
                            if let Ok(config) = perspective_config(space, v, first, second) {
                                out.entry(config.canonical_key())
                                    .or_insert_with(|| ConfigStats::of(&config));
                            }
                        }
                    }
                }
            }
        }
    }
}

fn census_scan(space: &Arc<ProjectiveSpace>, through: Option<u32>) -> (u64, Vec<ConfigStats>) {
    let merged: HashMap<ConfigKey, ConfigStats> = match through {
        Some(v_id) => {
            let mut out = HashMap::new();
            scan_vertex(space, v_id, &mut out);
            out
        }
        None => (0..space.point_count() as u32)
            .into_par_iter()
            .fold(HashMap::new, |mut out, v_id| {
                scan_vertex(space, v_id, &mut out);
                out
            })
            // equal keys carry equal stats, so plain union is associative
            .reduce(HashMap::new, |mut a, b| {
                a.extend(b);
                a
            }),
    };
    let mut stats: Vec<ConfigStats> = merged.into_values().collect();
    stats.sort_unstable_by(|a, b| a.key.cmp(&b.key));
    (stats.len() as u64, stats)
}

fn check_through(space: &ProjectiveSpace, through: Option<u32>) -> Result<()> {
    if let Some(v_id) = through {
        if v_id as usize >= space.point_count() {
            return Err(Error::Parse(format!(
                "point id {v_id} out of range for {space:?}"
            )));
        }
    }
    Ok(())
}

/// Exhaustive census of Desargues configurations in a plane PG(2,q), globally
/// or through one fixed point.
pub fn planar_census(
    space: &Arc<ProjectiveSpace>,
    through: Option<u32>,
    limits: &ScaleLimits,
) -> Result<Census> {
    if space.n() != 2 {
        return Err(Error::WrongDimension(format!(
            "planar census runs in PG(2,q), not PG({},q)",
            space.n()
        )));
    }
    check_through(space, through)?;
    let q = space.q() as u64;
    match through {
        Some(_) => ensure_scale(q, limits.planar_through_max_q, "planar through-point census")?,
        None => ensure_scale(q, limits.planar_global_max_q, "planar global census")?,
    }
    let start = Instant::now();
    let (count, stats) = census_scan(space, through);
    Ok(Census {
        q,
        n: 2,
        through,
        count,
        stats,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Exhaustive census of spatial (non-planar) Desargues configurations in
/// PG(3,q), globally or through one fixed point. Planar configurations lying
/// inside the solid are skipped by the non-coplanarity cut in the scan.
pub fn spatial_census(
    space: &Arc<ProjectiveSpace>,
    through: Option<u32>,
    limits: &ScaleLimits,
) -> Result<Census> {
    if space.n() != 3 {
        return Err(Error::WrongDimension(format!(
            "spatial census runs in PG(3,q), not PG({},q)",
            space.n()
        )));
    }
    check_through(space, through)?;
    let q = space.q() as u64;
    match through {
        Some(_) => ensure_scale(q, limits.spatial_through_max_q, "spatial through-point census")?,
        None => ensure_scale(q, limits.spatial_global_max_q, "spatial global census")?,
    }
    let start = Instant::now();
    let (count, stats) = census_scan(space, through);
    debug_assert!(stats.iter().all(|s| s.spatial));
    Ok(Census {
        q,
        n: 3,
        through,
        count,
        stats,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

// ---------------------------------------------------------------------------
// point-scan oracles
// ---------------------------------------------------------------------------

/// The fixed affine pair (0,…,0,1), (1,0,…,0,1) used as the default apex for
/// the scans through a pair.
pub fn standard_affine_pair(space: &ProjectiveSpace) -> (ProjPoint, ProjPoint) {
    let width = space.n() + 1;
    let mut s1 = vec!["0"; width];
    s1[width - 1] = "1";
    let mut s2 = s1.clone();
    s2[0] = "1";
    let p1 = space.point_from_str(&s1.join(",")).expect("unit point");
    let p2 = space.point_from_str(&s2.join(",")).expect("unit point");
    (p1, p2)
}

/// Count affine points P5 completing the standard frame
/// (0,0,0,1),(1,0,0,1),(0,1,0,1),(0,0,1,1) of AG(3,q) to a 5-compressor.
pub fn count_fifth_points(field: &Arc<Field>, limits: &ScaleLimits) -> Result<u64> {
    let q = field.spec().order();
    ensure_scale(q, limits.p5_max_q, "fifth-point scan")?;
    let space = Arc::new(ProjectiveSpace::new(field.clone(), 3)?);
    let frame: Vec<ProjPoint> = ["0,0,0,1", "1,0,0,1", "0,1,0,1", "0,0,1,1"]
        .iter()
        .map(|s| space.point_from_str(s).expect("frame point"))
        .collect();
    let chart = space.default_affine_chart();
    let count = chart
        .point_ids()
        .iter()
        .filter(|&&id| {
            let p5 = space.point(id);
            !frame.contains(p5)
                && no_four_coplanar(&space, [&frame[0], &frame[1], &frame[2], &frame[3], p5])
        })
        .count();
    Ok(count as u64)
}

fn check_apex_pair(chart: &AffineChart, p1: &ProjPoint, p2: &ProjPoint) -> Result<()> {
    if p1 == p2 {
        return Err(Error::Degenerate("apex pair must be two distinct points".into()));
    }
    for p in [p1, p2] {
        if chart.point_ids().binary_search(&p.id()).is_err() {
            return Err(Error::Parse(format!(
                "apex point {p} is not an affine point of the chart"
            )));
        }
    }
    Ok(())
}

/// Every 5-compressor of PG(3,q) containing the affine pair {p1, p2}, found
/// by scanning unordered affine triples {P3,P4,P5} with the no-4-coplanar
/// test. Sorted by point ids; the length must equal THETA_PLANAR.
pub fn compressors_through(
    space: &Arc<ProjectiveSpace>,
    chart: &AffineChart,
    p1: &ProjPoint,
    p2: &ProjPoint,
    limits: &ScaleLimits,
) -> Result<Vec<FiveCompressor>> {
    if space.n() != 3 {
        return Err(Error::WrongDimension(format!(
            "the 5-compressor scan runs in PG(3,q), not PG({},q)",
            space.n()
        )));
    }
    ensure_scale(space.q() as u64, limits.compressor_max_q, "5-compressor scan")?;
    check_apex_pair(chart, p1, p2)?;

    let ids: Vec<u32> = chart
        .point_ids()
        .iter()
        .copied()
        .filter(|&id| id != p1.id() && id != p2.id())
        .collect();
    let mut found: Vec<[u32; 3]> = (0..ids.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let ids = &ids;
            (i + 1..ids.len())
                .flat_map(move |j| (j + 1..ids.len()).map(move |k| (ids[i], ids[j], ids[k])))
                .filter(|&(x, y, z)| {
                    no_four_coplanar(
                        space,
                        [p1, p2, space.point(x), space.point(y), space.point(z)],
                    )
                })
                .map(|(x, y, z)| [x, y, z])
        })
        .collect();
    found.sort_unstable();

    found
        .into_iter()
        .map(|[x, y, z]| {
            FiveCompressor::new(
                space,
                [
                    p1.clone(),
                    p2.clone(),
                    space.point(x).clone(),
                    space.point(y).clone(),
                    space.point(z).clone(),
                ],
            )
        })
        .collect()
}

/// Count the 5-arcs of PG(4,q) containing the affine pair {p1, p2}. An arc is
/// a rank-5 quintuple, which already forbids any coplanar quadruple. The
/// count must equal THETA_SPATIAL.
pub fn count_arcs_through(
    space: &Arc<ProjectiveSpace>,
    chart: &AffineChart,
    p1: &ProjPoint,
    p2: &ProjPoint,
    limits: &ScaleLimits,
) -> Result<u64> {
    if space.n() != 4 {
        return Err(Error::WrongDimension(format!(
            "the 5-arc scan runs in PG(4,q), not PG({},q)",
            space.n()
        )));
    }
    ensure_scale(space.q() as u64, limits.arc_max_q, "5-arc scan")?;
    check_apex_pair(chart, p1, p2)?;

    let ids: Vec<u32> = chart
        .point_ids()
        .iter()
        .copied()
        .filter(|&id| id != p1.id() && id != p2.id())
        .collect();
    let count: u64 = (0..ids.len())
        .into_par_iter()
        .map(|i| {
            let mut local = 0u64;
            for j in i + 1..ids.len() {
                for k in j + 1..ids.len() {
                    let quintuple = [
                        p1,
                        p2,
                        space.point(ids[i]),
                        space.point(ids[j]),
                        space.point(ids[k]),
                    ];
                    if space.rank_of(quintuple) == 5 {
                        local += 1;
                    }
                }
            }
            local
        })
        .sum();
    Ok(count)
}

// ---------------------------------------------------------------------------
// blockline injectivity
// ---------------------------------------------------------------------------

/// A group of configurations sharing both point set and blockline set while
/// disagreeing on blocks. Expected never to exist.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InjectivityCollision {
    pub points: [u32; 10],
    pub blocklines: [u32; 10],
    pub distinct_block_sets: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InjectivityReport {
    pub q: u64,
    pub through: u32,
    pub configurations: u64,
    pub collisions: Vec<InjectivityCollision>,
    pub elapsed_ms: u128,
}

/// Over all configurations through one point of PG(2,q), group by
/// (point set, blockline set) and report groups whose blocks differ —
/// i.e. failures of the map configuration → blockline structure to be
/// injective.
pub fn blockline_injectivity(
    space: &Arc<ProjectiveSpace>,
    through: u32,
    limits: &ScaleLimits,
) -> Result<InjectivityReport> {
    let start = Instant::now();
    let census = planar_census(space, Some(through), limits)?;
    let mut groups: HashMap<([u32; 10], [u32; 10]), HashSet<[[u32; 3]; 10]>> = HashMap::new();
    for stat in &census.stats {
        groups
            .entry((stat.key.points, stat.blockline_ids))
            .or_default()
            .insert(stat.key.blocks);
    }
    let mut collisions: Vec<InjectivityCollision> = groups
        .into_iter()
        .filter(|(_, blocks)| blocks.len() > 1)
        .map(|((points, blocklines), blocks)| InjectivityCollision {
            points,
            blocklines,
            distinct_block_sets: blocks.len(),
        })
        .collect();
    collisions.sort_unstable_by_key(|c| c.points);
    Ok(InjectivityReport {
        q: census.q,
        through,
        configurations: census.count,
        collisions,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

// ---------------------------------------------------------------------------
// count reports
// ---------------------------------------------------------------------------

/// One quantity at one q: the closed form, and the oracle count when one ran.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CountReport {
    pub quantity: Quantity,
    pub q: u64,
    pub closed_form: String,
    pub brute_force: Option<String>,
    pub agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

/// Closed form only; no oracle.
pub fn count_report(quantity: Quantity, q: u64) -> Result<CountReport> {
    let start = Instant::now();
    let value = closed_form(quantity, q)?;
    Ok(CountReport {
        quantity,
        q,
        closed_form: value.to_string(),
        brute_force: None,
        agree: None,
        elapsed_ms: Some(start.elapsed().as_millis()),
    })
}

fn resolve_through(space: &ProjectiveSpace, through: Option<&str>) -> Result<u32> {
    match through {
        None => Ok(0),
        Some(s) => Ok(space.point_from_str(s)?.id()),
    }
}

/// Run the exhaustive oracle for `quantity` over the field and compare with
/// the closed form. `through` fixes the scanned point (coordinate string) for
/// the two through-point quantities and is rejected elsewhere.
pub fn oracle_report(
    field: &Arc<Field>,
    quantity: Quantity,
    through: Option<&str>,
    limits: &ScaleLimits,
) -> Result<CountReport> {
    let q = field.spec().order();
    let takes_through = matches!(
        quantity,
        Quantity::SpatialThroughPoint | Quantity::NaivePlanarThroughPoint
    );
    if through.is_some() && !takes_through {
        return Err(Error::Parse(format!(
            "--through-point does not apply to {quantity}"
        )));
    }

    let start = Instant::now();
    let closed_value = closed_form(quantity, q)?;
    let space = |n: usize| -> Result<Arc<ProjectiveSpace>> {
        Ok(Arc::new(ProjectiveSpace::new(field.clone(), n)?))
    };
    let brute: BigUint = match quantity {
        Quantity::P5Choices => count_fifth_points(field, limits)?.into(),
        Quantity::ThetaPlanar => {
            let space = space(3)?;
            let chart = space.default_affine_chart();
            let (p1, p2) = standard_affine_pair(&space);
            (compressors_through(&space, &chart, &p1, &p2, limits)?.len() as u64).into()
        }
        Quantity::TotalPlanar => planar_census(&space(2)?, None, limits)?.count.into(),
        Quantity::ThetaSpatial => {
            let space = space(4)?;
            let chart = space.default_affine_chart();
            let (p1, p2) = standard_affine_pair(&space);
            count_arcs_through(&space, &chart, &p1, &p2, limits)?.into()
        }
        Quantity::TotalSpatial => spatial_census(&space(3)?, None, limits)?.count.into(),
        Quantity::SpatialThroughPoint => {
            let space = space(3)?;
            let v = resolve_through(&space, through)?;
            spatial_census(&space, Some(v), limits)?.count.into()
        }
        Quantity::NaivePlanarThroughPoint => {
            // the oracle is the true through-point census; the closed form is
            // the documented wrong answer, so agree is false for q >= 3
            let space = space(2)?;
            let v = resolve_through(&space, through)?;
            planar_census(&space, Some(v), limits)?.count.into()
        }
    };

    Ok(CountReport {
        quantity,
        q,
        closed_form: closed_value.to_string(),
        agree: Some(brute == closed_value),
        brute_force: Some(brute.to_string()),
        elapsed_ms: Some(start.elapsed().as_millis()),
    })
}
