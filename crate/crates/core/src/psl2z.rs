//! Words in the parabolic generators `L` and `R` of PSL(2,ℤ), their
//! matrices, traces, geodesic lengths and quadratic-field discriminants.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::necklace;

/// Generators of PSL(2,ℤ) used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    L,
    R,
    U,
    V,
}

/// A 2×2 integer matrix of determinant 1, stored as its normalised
/// PSL(2,ℤ) representative: positive trace, or for trace zero the first
/// nonzero of `(a, b, c)` positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModularMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl ModularMatrix {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<ModularMatrix> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if &a * &d - &b * &c != BigInt::one() {
            return Err(Error::NotUnimodular {
                a: a.to_string(),
                b: b.to_string(),
                c: c.to_string(),
                d: d.to_string(),
            });
        }
        Ok(ModularMatrix { a, b, c, d }.normalized())
    }

    pub fn identity() -> ModularMatrix {
        ModularMatrix {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn generator(g: Generator) -> ModularMatrix {
        let (a, b, c, d) = match g {
            Generator::L => (1, 1, 0, 1),
            Generator::R => (1, 0, 1, 1),
            Generator::U => (0, -1, 1, 0),
            Generator::V => (0, -1, 1, -1),
        };
        ModularMatrix::new(a, b, c, d).expect("generators are unimodular")
    }

    fn normalized(self) -> ModularMatrix {
        let trace = &self.a + &self.d;
        let flip = match trace.sign() {
            Sign::Minus => true,
            Sign::Plus => false,
            Sign::NoSign => [&self.a, &self.b, &self.c]
                .into_iter()
                .find(|x| !x.is_zero())
                .is_some_and(|x| x.is_negative()),
        };
        if flip {
            ModularMatrix {
                a: -self.a,
                b: -self.b,
                c: -self.c,
                d: -self.d,
            }
        } else {
            self
        }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn determinant(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn is_identity(&self) -> bool {
        *self == ModularMatrix::identity()
    }

    pub fn pow(&self, mut n: u32) -> ModularMatrix {
        let mut base = self.clone();
        let mut acc = ModularMatrix::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }
}

impl Mul for &ModularMatrix {
    type Output = ModularMatrix;

    fn mul(self, rhs: &ModularMatrix) -> ModularMatrix {
        ModularMatrix {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
        .normalized()
    }
}

impl fmt::Display for ModularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

pub fn generator(g: Generator) -> ModularMatrix {
    ModularMatrix::generator(g)
}

pub fn trace(m: &ModularMatrix) -> BigInt {
    m.trace()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn swapped(self) -> Letter {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
        }
    }

    fn matrix(self) -> ModularMatrix {
        match self {
            Letter::L => ModularMatrix::generator(Generator::L),
            Letter::R => ModularMatrix::generator(Generator::R),
        }
    }
}

/// A cyclic word in positive powers of `L` and `R`.
///
/// The letters are kept in the order given, since the matrix product
/// depends on it. Equality, ordering and hashing go through the canonical
/// (least) rotation, so two words compare equal exactly when they are
/// rotations of each other.
#[derive(Debug, Clone)]
pub struct GeodesicWord {
    letters: Vec<Letter>,
}

impl GeodesicWord {
    pub fn new(letters: Vec<Letter>) -> Result<GeodesicWord> {
        if letters.is_empty() {
            return Err(Error::MalformedWord(String::new()));
        }
        Ok(GeodesicWord { letters })
    }

    /// `LR(RL)^(n−1)`, the word of the slope `1/n`.
    pub fn gamma(n: usize) -> GeodesicWord {
        assert!(n >= 1, "gamma words start at n = 1");
        let mut letters = vec![Letter::L, Letter::R];
        for _ in 1..n {
            letters.extend([Letter::R, Letter::L]);
        }
        GeodesicWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Contains both letters; `L^k` and `R^k` are parabolic.
    pub fn is_hyperbolic(&self) -> bool {
        self.letters.contains(&Letter::L) && self.letters.contains(&Letter::R)
    }

    pub fn rotated(&self, k: usize) -> GeodesicWord {
        let k = k % self.letters.len();
        let letters = self.letters[k..]
            .iter()
            .chain(&self.letters[..k])
            .copied()
            .collect();
        GeodesicWord { letters }
    }

    pub fn canonical(&self) -> GeodesicWord {
        GeodesicWord {
            letters: necklace::canonical_rotation(&self.letters),
        }
    }

    /// Exchange `L` and `R` (the mirror image).
    pub fn mirrored(&self) -> GeodesicWord {
        GeodesicWord {
            letters: self.letters.iter().map(|l| l.swapped()).collect(),
        }
    }

    /// The letters exactly as stored.
    pub fn as_written(&self) -> String {
        self.letters.iter().map(|l| l.as_char()).collect()
    }
}

impl PartialEq for GeodesicWord {
    fn eq(&self, other: &Self) -> bool {
        necklace::is_rotation_of(&self.letters, &other.letters)
    }
}

impl Eq for GeodesicWord {}

impl Hash for GeodesicWord {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().letters.hash(state);
    }
}

impl PartialOrd for GeodesicWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Shorter words first, then the canonical rotations lexicographically.
impl Ord for GeodesicWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.canonical().letters.cmp(&other.canonical().letters))
    }
}

/// Prints the canonical rotation.
impl fmt::Display for GeodesicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical().as_written())
    }
}

impl FromStr for GeodesicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<GeodesicWord> {
        let letters = s
            .chars()
            .map(|c| match c {
                'L' => Ok(Letter::L),
                'R' => Ok(Letter::R),
                _ => Err(Error::MalformedWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        GeodesicWord::new(letters).map_err(|_| Error::MalformedWord(s.to_string()))
    }
}

impl Serialize for GeodesicWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn canonical_cyclic(w: &GeodesicWord) -> GeodesicWord {
    w.canonical()
}

/// Left-to-right product of the letter matrices.
pub fn word_to_matrix(w: &GeodesicWord) -> ModularMatrix {
    w.letters
        .iter()
        .fold(ModularMatrix::identity(), |acc, l| &acc * &l.matrix())
}

fn check_hyperbolic_trace(t: &BigInt) -> Result<()> {
    match t.to_u8() {
        Some(2) => Err(Error::Parabolic),
        Some(small) if small < 2 => Err(Error::Elliptic(small)),
        _ => Ok(()),
    }
}

fn check_hyperbolic(m: &ModularMatrix) -> Result<BigInt> {
    if m.is_identity() {
        return Err(Error::Identity);
    }
    let t = m.trace();
    check_hyperbolic_trace(&t)?;
    Ok(t)
}

/// Natural logarithm of a positive big integer.
fn ln_big(t: &BigInt) -> f64 {
    let bits = t.bits();
    if bits <= 1000 {
        return t.to_f64().expect("finite below 2^1000").ln();
    }
    let shift = bits - 64;
    let top = (t >> shift).to_u64().expect("64 leading bits");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// `2·ln|λ|` where `|λ| = (t + √(t² − 4))/2`.
pub fn length_from_trace(t: &BigInt) -> Result<f64> {
    let t = &t.abs();
    check_hyperbolic_trace(t)?;
    if t.bits() <= 52 {
        let t = t.to_f64().expect("exact below 2^52");
        let root = ((t - 2.0) * (t + 2.0)).sqrt();
        return Ok(2.0 * ((t + root) / 2.0).ln());
    }
    // |λ| = t·(1 + √(1 − 4/t²))/2 and the second factor is 1 − u/(2(1 + √(1 − u))).
    let t_f = t.to_f64().unwrap_or(f64::INFINITY);
    let u = 4.0 / (t_f * t_f);
    let correction = (-u / (2.0 * (1.0 + (1.0 - u).sqrt()))).ln_1p();
    Ok(2.0 * (ln_big(t) + correction))
}

pub fn geodesic_length(m: &ModularMatrix) -> Result<f64> {
    let t = check_hyperbolic(m)?;
    length_from_trace(&t)
}

/// Largest trace [`field_discriminant`] will factor.
pub const MAX_FACTOR_TRACE: u64 = 1 << 63;

/// Squarefree part of `n ≥ 1`.
///
/// Trial division only runs while `p³ ≤ n`; what remains has at most two
/// prime factors, so it contributes itself unless it is a perfect square.
pub fn squarefree_part(mut n: u64) -> u64 {
    assert!(n >= 1);
    let mut out = 1u64;
    let mut p = 2u64;
    while p.checked_pow(3).is_some_and(|c| c <= n) {
        if n.is_multiple_of(p) {
            let mut odd = false;
            while n.is_multiple_of(p) {
                n /= p;
                odd = !odd;
            }
            if odd {
                out *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = n.sqrt();
    if root * root != n {
        out *= n;
    }
    out
}

/// Squarefree part of `t² − 4`, the discriminant of the real quadratic
/// field attached to a hyperbolic matrix of trace `t`.
pub fn discriminant_from_trace(t: &BigInt) -> Result<u128> {
    let t = &t.abs();
    check_hyperbolic_trace(t)?;
    let t = t
        .to_u64()
        .filter(|&t| t <= MAX_FACTOR_TRACE)
        .ok_or_else(|| Error::TooLargeToFactor(t.to_string()))?;
    // gcd(t − 2, t + 2) divides 4, so the two squarefree parts share at most a 2.
    let lo = squarefree_part(t - 2) as u128;
    let hi = squarefree_part(t + 2) as u128;
    let g = lo.gcd(&hi);
    Ok(lo * hi / (g * g))
}

pub fn field_discriminant(m: &ModularMatrix) -> Result<u128> {
    let t = check_hyperbolic(m)?;
    discriminant_from_trace(&t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GeodesicWord {
        s.parse().unwrap()
    }

    fn m(a: i64, b: i64, c: i64, d: i64) -> ModularMatrix {
        ModularMatrix::new(a, b, c, d).unwrap()
    }

    #[test]
    fn generator_relations() {
        let l = generator(Generator::L);
        let r = generator(Generator::R);
        assert_eq!(&l * &r, m(2, 1, 1, 1));
        assert_eq!(trace(&(&l * &r)), BigInt::from(3));
        assert!(generator(Generator::V).pow(3).is_identity());
        assert!(generator(Generator::U).pow(2).is_identity());
        // L = V²U and R = VU in PSL(2,ℤ).
        let u = generator(Generator::U);
        let v = generator(Generator::V);
        assert_eq!(&v.pow(2) * &u, l);
        assert_eq!(&v * &u, r);
    }

    #[test]
    fn normalization() {
        assert_eq!(m(-1, 0, 0, -1), ModularMatrix::identity());
        assert_eq!(m(0, 1, -1, 0), m(0, -1, 1, 0));
        assert_eq!(
            m(-2, -1, -1, -1).entries().map(|x| x.to_string()),
            ["2", "1", "1", "1"]
        );
        assert!(matches!(
            ModularMatrix::new(2, 0, 0, 1),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn word_matrices() {
        assert_eq!(word_to_matrix(&w("LLRR")), m(5, 2, 2, 1));
        assert_eq!(word_to_matrix(&w("LRLLRR")), m(12, 5, 7, 3));
        assert_eq!(word_to_matrix(&w("LRRLLR")), m(10, 7, 7, 5));
        assert_eq!(trace(&word_to_matrix(&w("LRLLRR"))), BigInt::from(15));
        assert_eq!(trace(&word_to_matrix(&w("LRRLLR"))), BigInt::from(15));
        assert_eq!(trace(&ModularMatrix::identity()), BigInt::from(2));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_cyclic(&w("RRLL")).as_written(), "LLRR");
        assert_eq!(canonical_cyclic(&w("RL")).as_written(), "LR");
        assert_eq!(canonical_cyclic(&w("LRRLLR")).as_written(), "LLRLRR");
        assert_eq!(w("RL"), w("LR"));
        assert_ne!(w("LLRLRR"), w("LLRRLR"));
        assert_eq!(w("LRRL").to_string(), "LLRR");
    }

    #[test]
    fn word_parsing() {
        assert!(matches!(
            "".parse::<GeodesicWord>(),
            Err(Error::MalformedWord(_))
        ));
        assert!(matches!(
            "LRx".parse::<GeodesicWord>(),
            Err(Error::MalformedWord(_))
        ));
        assert!(matches!(
            "lr".parse::<GeodesicWord>(),
            Err(Error::MalformedWord(_))
        ));
        assert!(w("LR").is_hyperbolic());
        assert!(!w("LLL").is_hyperbolic());
        assert_eq!(GeodesicWord::gamma(3).as_written(), "LRRLRL");
    }

    #[test]
    fn length_of_trace_three() {
        let len = geodesic_length(&word_to_matrix(&w("LR"))).unwrap();
        assert!((len - 1.9248473002).abs() < 1e-10, "{len}");
        assert!((len - 2.0 * 1.5f64.acosh()).abs() < 1e-12);
    }

    #[test]
    fn non_hyperbolic_lengths() {
        assert_eq!(
            geodesic_length(&word_to_matrix(&w("LL"))),
            Err(Error::Parabolic)
        );
        assert_eq!(
            geodesic_length(&ModularMatrix::identity()),
            Err(Error::Identity)
        );
        assert_eq!(
            geodesic_length(&generator(Generator::U)),
            Err(Error::Elliptic(0))
        );
        assert_eq!(
            geodesic_length(&generator(Generator::V)),
            Err(Error::Elliptic(1))
        );
        assert_eq!(
            field_discriminant(&generator(Generator::R)),
            Err(Error::Parabolic)
        );
    }

    #[test]
    fn gamma_seven_length_bounds() {
        let len = geodesic_length(&word_to_matrix(&GeodesicWord::gamma(7))).unwrap();
        assert!(7.0 * 1.5f64.ln() <= len && len <= 14.0 * 4f64.ln());
    }

    #[test]
    fn huge_trace_length_uses_big_log() {
        // (LR)^n has trace F(2n+2) + F(2n−2); its length is exactly n·ℓ(LR).
        let lr = word_to_matrix(&w("LR"));
        let base = geodesic_length(&lr).unwrap();
        for n in [30u32, 200, 1000, 3000] {
            let len = geodesic_length(&lr.pow(n)).unwrap();
            let expected = n as f64 * base;
            assert!(
                ((len - expected) / expected).abs() < 1e-12,
                "n = {n}: {len} vs {expected}"
            );
        }
    }

    #[test]
    fn discriminants() {
        assert_eq!(field_discriminant(&word_to_matrix(&w("LR"))).unwrap(), 5);
        assert_eq!(field_discriminant(&word_to_matrix(&w("LLRR"))).unwrap(), 2);
        assert_eq!(
            field_discriminant(&word_to_matrix(&w("LRLLRR"))).unwrap(),
            221
        );
        assert_eq!(
            field_discriminant(&word_to_matrix(&w("LRRLLR"))).unwrap(),
            221
        );
        let big = BigInt::from(u64::MAX);
        assert!(matches!(
            discriminant_from_trace(&big),
            Err(Error::TooLargeToFactor(_))
        ));
    }

    #[test]
    fn squarefree_against_brute_force() {
        fn brute(n: u64) -> u64 {
            let mut best = 1;
            let mut k = 1;
            while k * k <= n {
                if n.is_multiple_of(k * k) {
                    best = k * k;
                }
                k += 1;
            }
            n / best
        }
        for n in 1..5000u64 {
            assert_eq!(squarefree_part(n), brute(n), "n = {n}");
        }
        // Products of two large primes and squares of a large prime.
        let p = 1_000_003u64;
        let q = 999_983u64;
        assert_eq!(squarefree_part(p * q), p * q);
        assert_eq!(squarefree_part(p * p), 1);
        assert_eq!(squarefree_part(12 * p * p), 3);
    }
}
