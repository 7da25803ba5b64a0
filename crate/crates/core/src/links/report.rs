//! JSON shape of a [`LinkFamily`].

use serde::Serialize;

use super::LinkFamily;
use crate::farey::Slope;
use crate::numfmt::round_sig12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrbitRecordJson {
    pub representative: Slope,
    pub slopes: Vec<Slope>,
    pub word: String,
    /// Decimal string; traces grow without bound.
    pub trace: String,
    pub length: f64,
    pub discriminant: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountsRecord {
    pub modular: u64,
    pub ut_single: u64,
    pub ut_both: u64,
}

/// Serialised family. Reals are rounded to 12 significant digits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyRecord {
    pub target: Slope,
    pub x: u64,
    pub slopes: Vec<Slope>,
    pub orbits: Vec<OrbitRecordJson>,
    pub counts: CountsRecord,
    pub volume_modular: f64,
    pub volume_paper_formula: f64,
    pub total_length: f64,
    pub ratio: f64,
}

impl LinkFamily {
    pub fn to_record(&self) -> FamilyRecord {
        FamilyRecord {
            target: self.target,
            x: self.x,
            slopes: self.slopes.clone(),
            orbits: self
                .orbits
                .iter()
                .map(|o| OrbitRecordJson {
                    representative: o.representative,
                    slopes: o.slopes.clone(),
                    word: o.word.to_string(),
                    trace: o.trace.to_string(),
                    length: round_sig12(o.length),
                    discriminant: o.discriminant,
                })
                .collect(),
            counts: CountsRecord {
                modular: self.counts.modular,
                ut_single: self.counts.unit_tangent_single_orientation,
                ut_both: self.counts.unit_tangent_both_orientations,
            },
            volume_modular: round_sig12(self.volume_modular),
            volume_paper_formula: round_sig12(self.volume_paper_formula()),
            total_length: round_sig12(self.total_length),
            ratio: round_sig12(self.ratio()),
        }
    }

    /// Single-line JSON, as used for JSONL streams.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("family records serialise")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_record()).expect("family records serialise")
    }
}
