//! Slopes on the once-punctured torus and the combinatorics of the Farey
//! tessellation.
//!
//! A slope `p/q` is a vertex of the tessellation; two slopes span an edge
//! exactly when `|p·s − q·r| = 1`. The dual graph of the tessellation is a
//! tree, so shortest triangle paths are unique and can be found by mediant
//! descent from the base triangle `(0/1, 1/1, 1/0)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest accepted magnitude for either component of a user-supplied slope.
///
/// Keeps `q − p` and the V-images of any accepted slope inside `i64`.
pub const MAX_COMPONENT: i64 = (1 << 62) - 1;

/// Longest Farey path `farey_path` will materialise.
pub const MAX_PATH_LEN: u64 = 1 << 20;

/// A reduced slope `p/q` with `q ≥ 0`; `1/0` is the slope at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const ZERO: Slope = Slope { p: 0, q: 1 };
    pub const ONE: Slope = Slope { p: 1, q: 1 };
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };

    /// Normalises `p/q`: divides out the gcd, moves the sign to the
    /// numerator and maps every `p/0` to `1/0`. Rejects `0/0`.
    pub fn new(p: i64, q: i64) -> Result<Slope> {
        if p.unsigned_abs() > MAX_COMPONENT as u64 || q.unsigned_abs() > MAX_COMPONENT as u64 {
            return Err(Error::OutOfRange(format!("{p}/{q}")));
        }
        Slope::normalize(p as i128, q as i128)
            .ok_or_else(|| Error::MalformedSlope(format!("{p}/{q}")))
    }

    pub fn integer(n: i64) -> Result<Slope> {
        Slope::new(n, 1)
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    /// `p ≥ 0`; includes `1/0`.
    pub fn is_nonnegative(&self) -> bool {
        self.p >= 0
    }

    /// Panics if the reduced result does not fit in `i64`; never happens for
    /// slopes built from components within [`MAX_COMPONENT`] and their
    /// V-images.
    fn normalize(p: i128, q: i128) -> Option<Slope> {
        if q == 0 {
            return if p == 0 { None } else { Some(Slope::INFINITY) };
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        let p = i64::try_from(p).expect("slope numerator overflows i64");
        let q = i64::try_from(q).expect("slope denominator overflows i64");
        Some(Slope { p, q })
    }

    fn from_wide(p: i128, q: i128) -> Slope {
        Slope::normalize(p, q).expect("0/0 cannot arise from a unimodular map")
    }

    pub fn to_f64(&self) -> f64 {
        if self.q == 0 {
            f64::INFINITY
        } else {
            self.p as f64 / self.q as f64
        }
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.q == 0, other.q == 0) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => {
                let lhs = self.p as i128 * other.q as i128;
                let rhs = other.p as i128 * self.q as i128;
                lhs.cmp(&rhs)
            }
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `p/q` with an optional leading sign on `p`, or a bare integer.
    fn from_str(s: &str) -> Result<Slope> {
        let malformed = || Error::MalformedSlope(s.to_string());
        let trimmed = s.trim();
        let (num, den) = match trimmed.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (trimmed, "1"),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let unsigned_num = num.strip_prefix(['+', '-']).unwrap_or(num);
        if !digits(unsigned_num) || !digits(den) {
            return Err(malformed());
        }
        let out_of_range = || Error::OutOfRange(s.to_string());
        let p: i64 = num.parse().map_err(|_| out_of_range())?;
        let q: i64 = den.parse().map_err(|_| out_of_range())?;
        Slope::new(p, q)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `|a.p·b.q − a.q·b.p| = 1`.
pub fn is_farey_neighbour(a: Slope, b: Slope) -> bool {
    intersection_number(a, b) == 1
}

/// Geometric intersection number of the two simple closed curves.
pub fn intersection_number(a: Slope, b: Slope) -> u128 {
    (a.p as i128 * b.q as i128 - a.q as i128 * b.p as i128).unsigned_abs()
}

pub fn mediant(a: Slope, b: Slope) -> Result<Slope> {
    if !is_farey_neighbour(a, b) {
        return Err(Error::NotNeighbours { a, b });
    }
    let m = Slope::from_wide(a.p as i128 + b.p as i128, a.q as i128 + b.q as i128);
    Ok(m)
}

/// The order-3 rotation `p/q ↦ q/(q − p)`.
pub fn v_rotate(s: Slope) -> Slope {
    Slope::from_wide(s.q as i128, s.q as i128 - s.p as i128)
}

/// `V²(p/q) = (p − q)/p`, computed directly.
pub fn v_rotate_twice(s: Slope) -> Slope {
    Slope::from_wide(s.p as i128 - s.q as i128, s.p as i128)
}

/// `{s, V(s), V²(s)}`. V has no rational fixed point, so this always has
/// three members.
pub fn v_orbit(s: Slope) -> BTreeSet<Slope> {
    [s, v_rotate(s), v_rotate_twice(s)].into_iter().collect()
}

/// Least member of the V-orbit with `p, q ≥ 0`.
pub fn nonnegative_representative(s: Slope) -> Slope {
    v_orbit(s)
        .into_iter()
        .find(Slope::is_nonnegative)
        .expect("every V-orbit meets the closed first quadrant")
}

/// An ideal triangle of the Farey tessellation, vertices ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FareyTriangle {
    vertices: [Slope; 3],
}

impl FareyTriangle {
    pub const BASE: FareyTriangle = FareyTriangle {
        vertices: [Slope::ZERO, Slope::ONE, Slope::INFINITY],
    };

    pub fn new(a: Slope, b: Slope, c: Slope) -> Result<FareyTriangle> {
        for (u, v) in [(a, b), (b, c), (a, c)] {
            if !is_farey_neighbour(u, v) {
                return Err(Error::NotNeighbours { a: u, b: v });
            }
        }
        let mut vertices = [a, b, c];
        vertices.sort();
        Ok(FareyTriangle { vertices })
    }

    pub fn vertices(&self) -> [Slope; 3] {
        self.vertices
    }

    pub fn contains(&self, s: Slope) -> bool {
        self.vertices.contains(&s)
    }

    /// Number of shared vertices.
    pub fn shared_vertices(&self, other: &FareyTriangle) -> usize {
        self.vertices.iter().filter(|v| other.contains(**v)).count()
    }
}

impl fmt::Display for FareyTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.vertices;
        write!(f, "({a}, {b}, {c})")
    }
}

/// Shortest sequence of Farey triangles from the base triangle to one
/// having `target` as a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyPath {
    triangles: Vec<FareyTriangle>,
    target: Slope,
    new_vertices: Vec<Slope>,
}

impl FareyPath {
    pub fn triangles(&self) -> &[FareyTriangle] {
        &self.triangles
    }

    pub fn target(&self) -> Slope {
        self.target
    }

    /// The vertex contributed by each triangle after the first.
    pub fn new_vertices(&self) -> &[Slope] {
        &self.new_vertices
    }

    /// Number of triangles on the path.
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All `2 + x` distinct vertices, in path order.
    pub fn vertices(&self) -> Vec<Slope> {
        let mut out = FareyTriangle::BASE.vertices().to_vec();
        out.extend_from_slice(&self.new_vertices);
        out
    }
}

/// Sum of the Euclidean partial quotients of `p/q` (`p ≥ 0`, `q ≥ 1`).
fn partial_quotient_sum(mut p: u64, mut q: u64) -> u64 {
    let mut sum = 0u64;
    while q != 0 {
        sum = sum.saturating_add(p / q);
        (p, q) = (q, p % q);
    }
    sum
}

/// Mediant descent from the base triangle. Every step crosses into the
/// triangle on the far side of the Farey interval containing `target`.
pub fn farey_path(target: Slope) -> Result<FareyPath> {
    if !target.is_nonnegative() {
        return Err(Error::NegativeSlope(target));
    }
    let base = FareyTriangle::BASE;
    let mut path = FareyPath {
        triangles: vec![base],
        target,
        new_vertices: Vec::new(),
    };
    if base.contains(target) {
        return Ok(path);
    }
    let steps = partial_quotient_sum(target.p as u64, target.q as u64);
    if steps > MAX_PATH_LEN {
        return Err(Error::OutOfRange(format!(
            "Farey path to {target} has {steps} triangles (limit {MAX_PATH_LEN})"
        )));
    }

    let (mut lo, mut hi) = if target < Slope::ONE {
        (Slope::ZERO, Slope::ONE)
    } else {
        (Slope::ONE, Slope::INFINITY)
    };
    loop {
        let m = mediant(lo, hi)?;
        path.triangles.push(FareyTriangle {
            vertices: [lo, m, hi],
        });
        path.new_vertices.push(m);
        match target.cmp(&m) {
            Ordering::Equal => break,
            Ordering::Less => hi = m,
            Ordering::Greater => lo = m,
        }
    }
    Ok(path)
}

/// Sorts the slopes ascending (`1/0` last) and checks that every cyclically
/// consecutive pair is a Farey edge. The sorted list is the witness.
pub fn order_as_farey_chain<I>(slopes: I) -> Result<Vec<Slope>>
where
    I: IntoIterator<Item = Slope>,
{
    let sorted: Vec<Slope> = slopes
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if sorted.len() < 2 {
        return Err(Error::ChainTooShort);
    }
    for i in 0..sorted.len() {
        let (a, b) = (sorted[i], sorted[(i + 1) % sorted.len()]);
        if !is_farey_neighbour(a, b) {
            return Err(Error::NotAChain { a, b });
        }
    }
    Ok(sorted)
}
