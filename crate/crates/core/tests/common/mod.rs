//! Test oracles shared by the integration suites.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use modlinks::{FareyTriangle, Slope};
use num_integer::Integer;

pub const BOUND: i64 = 40;

pub type Tri = [(i64, i64); 3];

fn norm(p: i64, q: i64) -> (i64, i64) {
    let g = p.gcd(&q);
    let (p, q) = (p / g, q / g);
    if q < 0 || (q == 0 && p < 0) {
        (-p, -q)
    } else {
        (p, q)
    }
}

fn sorted(mut t: Tri) -> Tri {
    t.sort();
    t
}

fn in_bounds(t: &Tri) -> bool {
    t.iter().all(|&(p, q)| p.abs() <= BOUND && q <= BOUND)
}

/// Breadth-first search over the dual tree of the Farey tessellation,
/// restricted to triangles whose vertices have components within `BOUND`.
pub fn bfs_parents() -> HashMap<Tri, Option<Tri>> {
    let base = sorted([(0, 1), (1, 1), (1, 0)]);
    let mut parent: HashMap<Tri, Option<Tri>> = HashMap::from([(base, None)]);
    let mut queue = VecDeque::from([base]);
    while let Some(t) = queue.pop_front() {
        for skip in 0..3 {
            let edge: Vec<(i64, i64)> = (0..3).filter(|&i| i != skip).map(|i| t[i]).collect();
            let ((a, b), (c, d)) = (edge[0], edge[1]);
            for third in [norm(a + c, b + d), norm(a - c, b - d)] {
                if third == t[skip] {
                    continue;
                }
                let next = sorted([edge[0], edge[1], third]);
                if !in_bounds(&next) {
                    continue;
                }
                if parent[&t] == Some(next) {
                    continue;
                }
                assert!(
                    !parent.contains_key(&next),
                    "dual graph is not a tree at {next:?}"
                );
                parent.insert(next, Some(t));
                queue.push_back(next);
            }
        }
    }
    parent
}

pub fn bfs_path(
    parent: &HashMap<Tri, Option<Tri>>,
    depth: &HashMap<Tri, usize>,
    target: (i64, i64),
) -> Vec<Tri> {
    let mut candidates: Vec<&Tri> = depth.keys().filter(|t| t.contains(&target)).collect();
    candidates.sort_by_key(|t| depth[*t]);
    assert!(!candidates.is_empty());
    if candidates.len() > 1 {
        assert!(
            depth[candidates[0]] < depth[candidates[1]],
            "tie for {target:?}"
        );
    }
    let mut path = vec![*candidates[0]];
    while let Some(Some(p)) = parent.get(path.last().unwrap()) {
        path.push(*p);
    }
    path.reverse();
    path
}

pub fn as_tri(t: &FareyTriangle) -> Tri {
    sorted(t.vertices().map(|s| (s.p(), s.q())))
}

pub fn nonnegative_slopes(bound: i64) -> Vec<Slope> {
    let mut out = vec![Slope::INFINITY];
    for p in 0..=bound {
        for q in 1..=bound {
            if p.gcd(&q) == 1 {
                out.push(Slope::new(p, q).unwrap());
            }
        }
    }
    out
}

/// Depth of every triangle in the tree returned by [`bfs_parents`].
pub fn bfs_depths(parent: &HashMap<Tri, Option<Tri>>) -> HashMap<Tri, usize> {
    let mut depth = HashMap::new();
    for &t in parent.keys() {
        let mut d = 0;
        let mut cur = t;
        while let Some(Some(p)) = parent.get(&cur) {
            cur = *p;
            d += 1;
        }
        depth.insert(t, d);
    }
    depth
}

/// Triangles of the shortest dual-tree path from the base triangle to the
/// nearest triangle containing `s`.
pub fn shortest_path(
    parent: &HashMap<Tri, Option<Tri>>,
    depth: &HashMap<Tri, usize>,
    s: Slope,
) -> Vec<Tri> {
    bfs_path(parent, depth, (s.p(), s.q()))
}

/// Reduced `p/q` with `1 ≤ p, q ≤ bound`.
pub fn positive_slopes(bound: i64) -> Vec<Slope> {
    (1..=bound)
        .flat_map(move |p| (1..=bound).map(move |q| (p, q)))
        .filter(|(p, q)| p.gcd(q) == 1)
        .map(|(p, q)| Slope::new(p, q).unwrap())
        .collect()
}
