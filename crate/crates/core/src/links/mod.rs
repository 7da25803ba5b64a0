//! Arithmetic modular link families built from Farey paths.
//!
//! A target slope determines the shortest Farey path from the base triangle;
//! the path's `2 + x` vertices, closed under the order-3 rotation V, give
//! `3x` slopes forming a cyclic Farey chain. Each consecutive pair of the
//! chain bounds one regular ideal octahedron upstairs in the unit tangent
//! bundle of the punctured torus; the six-fold cover then leaves `x`
//! octahedra for the complement of the `x` modular geodesics.

mod census;
mod report;
mod table;
mod volume;

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::cutting::slope_to_word;
use crate::error::{Error, Result};
use crate::farey::{self, FareyPath, Slope};
use crate::psl2z::{self, GeodesicWord};

pub use census::{census, Census, CensusOptions};
pub use report::{CountsRecord, FamilyRecord, OrbitRecordJson};
pub use table::{volume_length_table, VolumeReport, VolumeRow, CSV_HEADER};
pub use volume::{catalan, lobachevsky, v_oct};

/// One V-orbit of slopes, projecting to a single modular geodesic.
#[derive(Debug, Clone)]
pub struct OrbitRecord {
    /// The three slopes, ascending.
    pub slopes: Vec<Slope>,
    /// Nonnegative member the word was computed from.
    pub representative: Slope,
    pub word: GeodesicWord,
    pub trace: BigInt,
    pub length: f64,
    /// `None` when the trace is beyond the trial-division bound.
    pub discriminant: Option<u128>,
}

/// Block between two Farey-neighbour levels; `chart` has columns
/// `(bottom.p, bottom.q)` and `(top.p, top.q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OctahedralBlock {
    pub bottom: Slope,
    pub top: Slope,
    pub chart: [[i64; 2]; 2],
}

impl OctahedralBlock {
    pub fn new(bottom: Slope, top: Slope) -> OctahedralBlock {
        OctahedralBlock {
            bottom,
            top,
            chart: [[bottom.p(), top.p()], [bottom.q(), top.q()]],
        }
    }

    pub fn determinant(&self) -> i128 {
        let [[a, c], [b, d]] = self.chart;
        a as i128 * d as i128 - c as i128 * b as i128
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OctahedronCounts {
    /// In the unit tangent bundle of the modular surface.
    pub modular: u64,
    /// Punctured-torus unit tangent bundle, one orientation per curve.
    pub unit_tangent_single_orientation: u64,
    /// Punctured-torus unit tangent bundle, both orientations.
    pub unit_tangent_both_orientations: u64,
}

impl OctahedronCounts {
    pub fn for_path_length(x: u64) -> OctahedronCounts {
        OctahedronCounts {
            modular: x,
            unit_tangent_single_orientation: 3 * x,
            unit_tangent_both_orientations: 6 * x,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LinkFamily {
    pub target: Slope,
    pub path: FareyPath,
    /// Number of Farey triangles on the path.
    pub x: u64,
    /// The `3x` slopes in Farey-chain order.
    pub slopes: Vec<Slope>,
    /// Base orbit first, then one orbit per new path vertex.
    pub orbits: Vec<OrbitRecord>,
    /// Cyclically consecutive chain pairs.
    pub blocks: Vec<OctahedralBlock>,
    pub counts: OctahedronCounts,
    pub volume_modular: f64,
    pub total_length: f64,
}

impl LinkFamily {
    /// The alternative `x·v_oct/2` figure, reported next to `x·v_oct`.
    pub fn volume_paper_formula(&self) -> f64 {
        self.volume_modular / 2.0
    }

    /// `volume_modular / √total_length`.
    pub fn ratio(&self) -> f64 {
        self.volume_modular / self.total_length.sqrt()
    }

    pub fn words(&self) -> Vec<GeodesicWord> {
        self.orbits.iter().map(|o| o.word.clone()).collect()
    }

    /// Canonical word strings, sorted.
    pub fn word_set(&self) -> BTreeSet<String> {
        self.orbits.iter().map(|o| o.word.to_string()).collect()
    }

    /// Re-checks every structural invariant of the family.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Invariant(format!("family {}: {msg}", self.target)));
        let x = self.x as usize;
        if self.path.len() != x || x == 0 {
            return fail(format!("path has {} triangles, x = {x}", self.path.len()));
        }
        if self.slopes.len() != 3 * x {
            return fail(format!("{} slopes, expected {}", self.slopes.len(), 3 * x));
        }
        let set: BTreeSet<Slope> = self.slopes.iter().copied().collect();
        if set.len() != self.slopes.len() {
            return fail("repeated slope".into());
        }
        if let Some(s) = self
            .slopes
            .iter()
            .find(|s| !set.contains(&farey::v_rotate(**s)))
        {
            return fail(format!("V({s}) missing"));
        }
        match farey::order_as_farey_chain(self.slopes.iter().copied()) {
            Ok(chain) if chain == self.slopes => {}
            Ok(_) => return fail("slopes not in chain order".into()),
            Err(e) => return fail(e.to_string()),
        }
        if self.orbits.len() != x {
            return fail(format!("{} orbits", self.orbits.len()));
        }
        let mut covered = BTreeSet::new();
        for orbit in &self.orbits {
            let expected: Vec<Slope> = farey::v_orbit(orbit.representative).into_iter().collect();
            if orbit.slopes != expected || !orbit.representative.is_nonnegative() {
                return fail(format!("bad orbit {:?}", orbit.slopes));
            }
            covered.extend(orbit.slopes.iter().copied());
        }
        if covered != set {
            return fail("orbits do not partition the slopes".into());
        }
        let lr: GeodesicWord = "LR".parse().expect("literal word");
        if self.orbits[0].word != lr || !self.orbits[0].slopes.contains(&Slope::ONE) {
            return fail("base orbit is not {0/1, 1/1, 1/0} with word LR".into());
        }
        if self.blocks.len() != 3 * x {
            return fail(format!("{} blocks", self.blocks.len()));
        }
        for (i, block) in self.blocks.iter().enumerate() {
            let next = self.slopes[(i + 1) % self.slopes.len()];
            if block.bottom != self.slopes[i] || block.top != next || block.determinant().abs() != 1
            {
                return fail(format!("bad block {i}"));
            }
        }
        if self.counts != OctahedronCounts::for_path_length(self.x) {
            return fail("octahedron counts".into());
        }
        if (self.volume_modular - self.x as f64 * v_oct()).abs() > 1e-9 * self.x as f64 {
            return fail("volume".into());
        }
        Ok(())
    }
}

fn orbit_record(representative: Slope, word: GeodesicWord) -> Result<OrbitRecord> {
    let matrix = psl2z::word_to_matrix(&word);
    let trace = matrix.trace();
    let length = psl2z::geodesic_length(&matrix)?;
    let discriminant = match psl2z::field_discriminant(&matrix) {
        Ok(d) => Some(d),
        Err(Error::TooLargeToFactor(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(OrbitRecord {
        slopes: farey::v_orbit(representative).into_iter().collect(),
        representative,
        word,
        trace,
        length,
        discriminant,
    })
}

/// Builds the link family of a nonnegative target slope.
pub fn build_family(target: Slope) -> Result<LinkFamily> {
    let path = farey::farey_path(target)?;
    let x = path.len() as u64;

    let closed: BTreeSet<Slope> = path
        .vertices()
        .into_iter()
        .flat_map(farey::v_orbit)
        .collect();
    if closed.len() as u64 != 3 * x {
        return Err(Error::Invariant(format!(
            "V-closure of the path to {target} has {} slopes, expected {}",
            closed.len(),
            3 * x
        )));
    }
    let slopes = farey::order_as_farey_chain(closed)
        .map_err(|e| Error::Invariant(format!("V-closure of the path to {target}: {e}")))?;

    let mut orbits = Vec::with_capacity(x as usize);
    let base_word = GeodesicWord::new(vec![psl2z::Letter::L, psl2z::Letter::R])?;
    orbits.push(orbit_record(Slope::ONE, base_word)?);
    for &vertex in path.new_vertices() {
        orbits.push(orbit_record(vertex, slope_to_word(vertex)?)?);
    }

    let blocks = (0..slopes.len())
        .map(|i| OctahedralBlock::new(slopes[i], slopes[(i + 1) % slopes.len()]))
        .collect();
    let total_length = orbits.iter().map(|o| o.length).sum();

    let family = LinkFamily {
        target,
        path,
        x,
        slopes,
        orbits,
        blocks,
        counts: OctahedronCounts::for_path_length(x),
        volume_modular: x as f64 * v_oct(),
        total_length,
    };
    family.validate()?;
    Ok(family)
}

/// The family `Γ_n` of the geodesics `LR(RL)^(k−1)`, `k = 1..n`: the family
/// of the slope `1/n`, checked to carry exactly those words.
pub fn gamma_sequence(n: u32) -> Result<LinkFamily> {
    if n == 0 {
        return Err(Error::OutOfRange("gamma_sequence needs n ≥ 1".into()));
    }
    let family = build_family(Slope::new(1, n as i64)?)?;
    for (k, orbit) in family.orbits.iter().enumerate() {
        if orbit.word != GeodesicWord::gamma(k + 1) {
            return Err(Error::Invariant(format!(
                "orbit {} of Γ_{n} has word {}, expected LR(RL)^{k}",
                k + 1,
                orbit.word
            )));
        }
    }
    Ok(family)
}

/// Octahedron counts and volume of the preimage under a degree-`d` cover of
/// the modular unit tangent bundle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverCounts {
    pub degree: u64,
    pub octahedra: u64,
    pub unit_tangent_single_orientation: u64,
    pub unit_tangent_both_orientations: u64,
    pub volume: f64,
}

pub fn cover_scale(family: &LinkFamily, degree: u64) -> Result<CoverCounts> {
    if degree == 0 {
        return Err(Error::OutOfRange("cover degree must be ≥ 1".into()));
    }
    Ok(CoverCounts {
        degree,
        octahedra: family.counts.modular * degree,
        unit_tangent_single_orientation: family.counts.unit_tangent_single_orientation * degree,
        unit_tangent_both_orientations: family.counts.unit_tangent_both_orientations * degree,
        volume: family.volume_modular * degree as f64,
    })
}
