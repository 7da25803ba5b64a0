//! Continued fractions, AB- and LR-cutting sequences of simple closed curves
//! on the once-punctured torus.
//!
//! Letter conventions: in an AB word, `A` records a crossing of a vertical
//! lattice line and `B` a crossing of a horizontal one, so the slope `0`
//! line is all `A`s and slope `1/n` reads `BAⁿ`.
//!
//! Besides the continued-fraction algorithm there is an exact simulation of
//! the line `y = (p/q)x + ε` through the triangulated lattice
//! ([`trace_line`]); it gives independent AB and LR words for checking.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::farey::Slope;
use crate::necklace;
use crate::psl2z::{GeodesicWord, Letter};

/// Largest `max(p, q)` for which words are materialised.
pub const MAX_WORD_SCALE: i64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    terms: Vec<u64>,
}

impl ContinuedFraction {
    /// `[a₁, …, a_k]` with `a₁ ≥ 0`, later terms `≥ 1`.
    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// Sum of the partial quotients.
    pub fn digit_sum(&self) -> u64 {
        self.terms.iter().sum()
    }

    /// Folds the expansion back into `p/q`.
    pub fn value(&self) -> Result<Slope> {
        let (mut p, mut q) = (1i128, 0i128);
        for &a in self.terms.iter().rev() {
            (p, q) = (a as i128 * p + q, p);
        }
        let p = i64::try_from(p).map_err(|_| Error::OutOfRange(self.to_string()))?;
        let q = i64::try_from(q).map_err(|_| Error::OutOfRange(self.to_string()))?;
        Slope::new(p, q)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Serialize for ContinuedFraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms.serialize(serializer)
    }
}

/// Euclidean expansion of a nonnegative finite slope.
pub fn continued_fraction(s: Slope) -> Result<ContinuedFraction> {
    if s.is_infinite() || !s.is_nonnegative() {
        return Err(Error::Unsupported {
            op: "continued_fraction",
            slope: s,
        });
    }
    let (mut p, mut q) = (s.p() as u64, s.q() as u64);
    let mut terms = Vec::new();
    while q != 0 {
        terms.push(p / q);
        (p, q) = (q, p % q);
    }
    Ok(ContinuedFraction { terms })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AbLetter {
    A,
    B,
}

impl AbLetter {
    fn swapped(self) -> AbLetter {
        match self {
            AbLetter::A => AbLetter::B,
            AbLetter::B => AbLetter::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            AbLetter::A => 'A',
            AbLetter::B => 'B',
        }
    }
}

/// One period of a periodic AB-cutting sequence. Compares equal up to
/// rotation; displays its least rotation.
#[derive(Debug, Clone)]
pub struct AbWord {
    letters: Vec<AbLetter>,
}

impl AbWord {
    pub fn new(letters: Vec<AbLetter>) -> Result<AbWord> {
        if letters.is_empty() {
            return Err(Error::MalformedWord(String::new()));
        }
        Ok(AbWord { letters })
    }

    pub fn letters(&self) -> &[AbLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn count(&self, letter: AbLetter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    pub fn canonical(&self) -> AbWord {
        AbWord {
            letters: necklace::canonical_rotation(&self.letters),
        }
    }

    pub fn as_written(&self) -> String {
        self.letters.iter().map(|l| l.as_char()).collect()
    }
}

impl PartialEq for AbWord {
    fn eq(&self, other: &Self) -> bool {
        necklace::is_rotation_of(&self.letters, &other.letters)
    }
}

impl Eq for AbWord {}

impl fmt::Display for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical().as_written())
    }
}

impl FromStr for AbWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<AbWord> {
        let letters = s
            .chars()
            .map(|c| match c {
                'A' => Ok(AbLetter::A),
                'B' => Ok(AbLetter::B),
                _ => Err(Error::MalformedWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        AbWord::new(letters).map_err(|_| Error::MalformedWord(s.to_string()))
    }
}

impl Serialize for AbWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn require_positive(op: &'static str, s: Slope) -> Result<()> {
    if s.p() < 0 {
        return Err(Error::NegativeSlope(s));
    }
    if s.p() == 0 || s.q() == 0 {
        return Err(Error::Unsupported { op, slope: s });
    }
    if s.p().max(s.q()) > MAX_WORD_SCALE {
        return Err(Error::OutOfRange(format!(
            "{s}: cutting sequences are limited to max(p, q) ≤ {MAX_WORD_SCALE}"
        )));
    }
    Ok(())
}

/// AB-cutting sequence by continued-fraction insertion.
///
/// Starting from the slope-0 word `A`, walk the partial quotients from last
/// to first: insert `a_j` copies of `B` into every gap between cyclically
/// successive `A`s, then exchange `A` and `B` before the next quotient.
pub fn ab_sequence(s: Slope) -> Result<AbWord> {
    require_positive("ab_sequence", s)?;
    let cf = continued_fraction(s)?;
    let mut word = vec![AbLetter::A];
    for (j, &a) in cf.terms().iter().enumerate().rev() {
        let a = a as usize;
        let mut next = Vec::with_capacity(word.len() * (a + 1));
        for &letter in &word {
            next.push(letter);
            if letter == AbLetter::A {
                next.extend(std::iter::repeat_n(AbLetter::B, a));
            }
        }
        word = next;
        if j > 0 {
            word.iter_mut().for_each(|l| *l = l.swapped());
        }
    }
    AbWord::new(word)
}

/// Translation of one AB period into the LR word of the projected modular
/// geodesic, reading every cyclically consecutive pair (the wrap included):
/// `AB → L`, `BA → R`, `AA → RL`, `BB → LR`.
pub fn ab_to_lr(w: &AbWord) -> GeodesicWord {
    use AbLetter::{A, B};
    let n = w.letters.len();
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        match (w.letters[i], w.letters[(i + 1) % n]) {
            (A, B) => out.push(Letter::L),
            (B, A) => out.push(Letter::R),
            (A, A) => out.extend([Letter::R, Letter::L]),
            (B, B) => out.extend([Letter::L, Letter::R]),
        }
    }
    GeodesicWord::new(out)
        .expect("nonempty AB word gives a nonempty LR word")
        .canonical()
}

/// Canonical LR word of the modular geodesic covered by the slope.
///
/// `0/1` and `1/0` both give `LR`. Negative slopes are refused; map them to
/// a nonnegative member of their V-orbit first.
pub fn slope_to_word(s: Slope) -> Result<GeodesicWord> {
    if !s.is_nonnegative() {
        return Err(Error::NegativeSlope(s));
    }
    if s.p() == 0 || s.q() == 0 {
        return GeodesicWord::new(vec![Letter::L, Letter::R]);
    }
    Ok(ab_to_lr(&ab_sequence(s)?))
}

/// Which family of lattice lines a crossing belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineFamily {
    /// `x = k`; emits `A`.
    Vertical,
    /// `y = m`; emits `B`.
    Horizontal,
    /// `y = x + c`; only separates the two triangles of a unit square.
    Diagonal,
}

pub type LatticePoint = (i64, i64);

/// A crossing of the offset line with a lattice edge.
#[derive(Debug, Clone, PartialEq)]
pub struct Crossing {
    pub family: LineFamily,
    /// Approximate x-coordinate of the crossing (ε dropped), for drawing.
    pub x: f64,
    /// Endpoints of the crossed edge.
    pub edge: [LatticePoint; 2],
}

/// A triangle of the lattice triangulation traversed by the line, and
/// the side on which its cut-off vertex lies.
#[derive(Debug, Clone, PartialEq)]
pub struct Turn {
    pub letter: Letter,
    /// Vertex shared by the entry and exit edges.
    pub vertex: LatticePoint,
    pub triangle: [LatticePoint; 3],
}

/// One period of the line `y = (p/q)x + ε` crossing the lattice triangulated
/// by verticals, horizontals and slope-1 diagonals.
#[derive(Debug, Clone)]
pub struct LineTrace {
    pub slope: Slope,
    /// Crossings ordered along the line over `x ∈ (0, q]`.
    pub crossings: Vec<Crossing>,
    /// `turns[i]` is the triangle between `crossings[i]` and the next crossing.
    pub turns: Vec<Turn>,
}

impl LineTrace {
    pub fn ab_word(&self) -> AbWord {
        let letters = self
            .crossings
            .iter()
            .filter_map(|c| match c.family {
                LineFamily::Vertical => Some(AbLetter::A),
                LineFamily::Horizontal => Some(AbLetter::B),
                LineFamily::Diagonal => None,
            })
            .collect();
        AbWord::new(letters).expect("a positive slope crosses at least one vertical")
    }

    pub fn lr_word(&self) -> GeodesicWord {
        let letters = self.turns.iter().map(|t| t.letter).collect();
        GeodesicWord::new(letters).expect("at least one triangle per period")
    }
}

/// Crossing position `x = r + e·ε`, with `r` and `e` both scaled by a common
/// denominator so the key is integral. Lexicographic order is the order
/// along the line.
type Key = (i128, i128);

/// Exact simulation of the offset line through one period.
///
/// All positions are exact rationals with a symbolic infinitesimal; a line
/// through a lattice point, lifted by ε, meets the horizontal line there
/// just before the vertical one.
pub fn trace_line(s: Slope) -> Result<LineTrace> {
    require_positive("trace_line", s)?;
    let (p, q) = (s.p() as i128, s.q() as i128);
    let d = p - q;
    let scale = if d == 0 { p } else { p * d.abs() };

    let mut events: Vec<(Key, LineFamily, [LatticePoint; 2])> = Vec::new();
    for k in 1..=q {
        let fl = Integer::div_floor(&(p * k), &q);
        events.push((
            (k * scale, 0),
            LineFamily::Vertical,
            [pt(k, fl), pt(k, fl + 1)],
        ));
    }
    for m in 1..=p {
        // x = mq/p − (q/p)ε sits just left of mq/p.
        let fx = Integer::div_floor(&(m * q - 1), &p);
        let key = (m * q * scale / p, -q * scale / p);
        events.push((key, LineFamily::Horizontal, [pt(fx, m), pt(fx + 1, m)]));
    }
    if d != 0 {
        // y − x = (d/q)x + ε runs from ε to d + ε; crossings of y = x + c
        // sit at x = q(c − ε)/d.
        let cs: Vec<i128> = if d > 0 {
            (1..=d).collect()
        } else {
            (d + 1..=0).collect()
        };
        for c in cs {
            let (r_num, e) = (q * c * scale / d, -q * scale / d);
            let fx = if r_num % scale == 0 && e < 0 {
                r_num / scale - 1
            } else {
                Integer::div_floor(&r_num, &scale)
            };
            events.push((
                (r_num, e),
                LineFamily::Diagonal,
                [pt(fx, fx + c), pt(fx + 1, fx + 1 + c)],
            ));
        }
    }
    let window_end = (q * scale, 0);
    debug_assert!(events
        .iter()
        .all(|(k, _, _)| *k > (0, 0) && *k <= window_end));
    events.sort_by_key(|(k, _, _)| *k);

    let crossings: Vec<Crossing> = events
        .iter()
        .map(|(key, family, edge)| Crossing {
            family: *family,
            x: key.0 as f64 / scale as f64,
            edge: *edge,
        })
        .collect();

    let shift = |e: [LatticePoint; 2]| e.map(|(x, y)| (x + s.q(), y + s.p()));
    let mut turns = Vec::with_capacity(crossings.len());
    for i in 0..crossings.len() {
        let entry = crossings[i].edge;
        let exit = match crossings.get(i + 1) {
            Some(next) => next.edge,
            None => shift(crossings[0].edge),
        };
        let shared: Vec<LatticePoint> =
            entry.iter().copied().filter(|v| exit.contains(v)).collect();
        let [vertex] = shared[..] else {
            return Err(Error::Invariant(format!(
                "edges {entry:?} and {exit:?} do not bound a common triangle"
            )));
        };
        let apex = exit
            .into_iter()
            .find(|v| *v != vertex)
            .expect("edge has two endpoints");
        let far = entry
            .into_iter()
            .find(|v| *v != vertex)
            .expect("edge has two endpoints");
        // Left of the direction (q, p), measured from the lifted start (0, ε):
        // q·(y − ε) − p·x > 0, so a vertex on the unlifted line counts as right.
        let side = s.q() as i128 * vertex.1 as i128 - s.p() as i128 * vertex.0 as i128;
        turns.push(Turn {
            letter: if side > 0 { Letter::L } else { Letter::R },
            vertex,
            triangle: [far, vertex, apex],
        });
    }

    Ok(LineTrace {
        slope: s,
        crossings,
        turns,
    })
}

fn pt(x: i128, y: i128) -> LatticePoint {
    (x as i64, y as i64)
}

/// AB word read off the exact line simulation.
pub fn ab_sequence_geometric(s: Slope) -> Result<AbWord> {
    Ok(trace_line(s)?.ab_word())
}

/// LR word read off the exact line simulation, one letter per triangle.
pub fn lr_geometric_oracle(s: Slope) -> Result<GeodesicWord> {
    Ok(trace_line(s)?.lr_word().canonical())
}
