use std::collections::{BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;

use super::{build_family, LinkFamily};
use crate::error::Result;
use crate::farey::{mediant, Slope};

#[derive(Debug, Clone, Copy, Default)]
pub struct CensusOptions {
    /// Merge families whose word sets coincide up to exchanging `L` and `R`.
    pub dedupe_mirror: bool,
}

/// Families for every Farey path of length `1..=max_x`, in order of depth
/// and then of the left/right choice string (left first).
///
/// Each depth is evaluated in parallel and emitted in order.
pub struct Census {
    max_x: u32,
    depth: u32,
    options: CensusOptions,
    pending: VecDeque<Result<LinkFamily>>,
    seen: HashSet<BTreeSet<String>>,
}

pub fn census(max_x: u32, options: CensusOptions) -> Census {
    Census {
        max_x,
        depth: 0,
        options,
        pending: VecDeque::new(),
        seen: HashSet::new(),
    }
}

/// End vertex of the path selected by `choices` (bit `i` from the top set
/// means the right-hand branch at step `i + 1`).
fn target_for_choices(depth: u32, choices: u64) -> Slope {
    if depth == 1 {
        return Slope::ONE;
    }
    let steps = depth - 1;
    let (mut lo, mut hi) = (Slope::ZERO, Slope::INFINITY);
    let mut mid = Slope::ONE;
    for i in (0..steps).rev() {
        if choices >> i & 1 == 0 {
            hi = mid;
        } else {
            lo = mid;
        }
        mid = mediant(lo, hi).expect("ends of a Farey interval are neighbours");
    }
    mid
}

fn mirror_key(family: &LinkFamily) -> BTreeSet<String> {
    let words = family.word_set();
    let mirrored: BTreeSet<String> = family
        .orbits
        .iter()
        .map(|o| o.word.mirrored().to_string())
        .collect();
    words.min(mirrored)
}

impl Census {
    fn fill(&mut self) {
        while self.pending.is_empty() && self.depth < self.max_x {
            self.depth += 1;
            let depth = self.depth;
            let count = 1u64 << (depth - 1);
            let families: Vec<Result<LinkFamily>> = (0..count)
                .into_par_iter()
                .map(|c| build_family(target_for_choices(depth, c)))
                .collect();
            for family in families {
                if self.options.dedupe_mirror {
                    if let Ok(f) = &family {
                        if !self.seen.insert(mirror_key(f)) {
                            continue;
                        }
                    }
                }
                self.pending.push_back(family);
            }
        }
    }
}

impl Iterator for Census {
    type Item = Result<LinkFamily>;

    fn next(&mut self) -> Option<Self::Item> {
        self.fill();
        self.pending.pop_front()
    }
}
