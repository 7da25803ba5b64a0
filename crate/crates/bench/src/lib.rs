//! Shared inputs for the criterion benches.

use modlinks::Slope;

/// Consecutive Fibonacci ratios `F(n+1)/F(n)`; every partial quotient is 1.
pub fn fibonacci_slope(n: u32) -> Slope {
    let (mut a, mut b) = (1i64, 1i64);
    for _ in 0..n {
        (a, b) = (a + b, a);
    }
    Slope::new(a, b).expect("small Fibonacci numbers fit")
}

/// `1/n`: the longest Farey path for its size.
pub fn unit_fraction(n: i64) -> Slope {
    Slope::new(1, n).expect("n ≥ 1")
}
