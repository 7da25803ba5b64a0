use std::io;

use num_bigint::BigInt;

use super::v_oct;
use crate::cutting::slope_to_word;
use crate::error::Result;
use crate::farey::Slope;
use crate::numfmt::sig12;
use crate::psl2z::{self, GeodesicWord};

pub const CSV_HEADER: [&str; 9] = [
    "n",
    "word",
    "trace",
    "length",
    "cumulative_length",
    "octahedra",
    "volume",
    "volume_paper_formula",
    "ratio",
];

/// Row `n` describes `γ_n = LR(RL)^(n−1)` and the union `Γ_n` of the
/// first `n` of them.
#[derive(Debug, Clone)]
pub struct VolumeRow {
    pub n: u32,
    pub word: GeodesicWord,
    pub trace: BigInt,
    /// `ℓ(γ_n)`.
    pub length: f64,
    /// `ℓ(Γ_n)`.
    pub cumulative_length: f64,
    pub octahedra: u64,
    pub volume: f64,
    pub volume_paper_formula: f64,
    /// `volume / √ℓ(Γ_n)`.
    pub ratio: f64,
}

#[derive(Debug, Clone)]
pub struct VolumeReport {
    pub v_oct: f64,
    pub rows: Vec<VolumeRow>,
}

pub fn volume_length_table(n_max: u32) -> Result<VolumeReport> {
    let v = v_oct();
    let mut rows = Vec::with_capacity(n_max as usize);
    let mut cumulative = 0.0;
    for n in 1..=n_max {
        let word = slope_to_word(Slope::new(1, n as i64)?)?;
        // canonical rotation of LR(RL)^(n−1): conjugate, same trace
        let matrix = psl2z::word_to_matrix(&word);
        let trace = matrix.trace();
        let length = psl2z::geodesic_length(&matrix)?;
        cumulative += length;
        let volume = n as f64 * v;
        rows.push(VolumeRow {
            n,
            word,
            trace,
            length,
            cumulative_length: cumulative,
            octahedra: n as u64,
            volume,
            volume_paper_formula: volume / 2.0,
            ratio: volume / cumulative.sqrt(),
        });
    }
    Ok(VolumeReport { v_oct: v, rows })
}

impl VolumeReport {
    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record(CSV_HEADER)?;
        for row in &self.rows {
            writer.write_record([
                row.n.to_string(),
                row.word.to_string(),
                row.trace.to_string(),
                sig12(row.length),
                sig12(row.cumulative_length),
                row.octahedra.to_string(),
                sig12(row.volume),
                sig12(row.volume_paper_formula),
                sig12(row.ratio),
            ])?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }
}
