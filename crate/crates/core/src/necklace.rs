//! Lexicographically least rotation of a cyclic word.

/// Start index of the lexicographically least rotation (Booth's algorithm,
/// linear time). Returns the smallest such index when the word is periodic.
pub fn least_rotation<T: Ord>(word: &[T]) -> usize {
    let n = word.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &word[i % n];
    let mut failure: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let mut i = failure[j - k - 1];
        while i != -1 && at(j) != at(k + i as usize + 1) {
            if at(j) < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = failure[i as usize];
        }
        if i == -1 && at(j) != at(k) {
            if at(j) < at(k) {
                k = j;
            }
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    k % n
}

/// Copy of `word` rotated to start at its least rotation.
pub fn canonical_rotation<T: Ord + Clone>(word: &[T]) -> Vec<T> {
    let k = least_rotation(word);
    word[k..].iter().chain(&word[..k]).cloned().collect()
}

/// Whether `a` and `b` are rotations of each other.
pub fn is_rotation_of<T: Ord + Clone>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len() && canonical_rotation(a) == canonical_rotation(b)
}
