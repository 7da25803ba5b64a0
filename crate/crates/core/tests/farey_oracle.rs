mod common;

use std::collections::BTreeSet;

use common::{as_tri, bfs_depths, bfs_parents, nonnegative_slopes, shortest_path, Tri, BOUND};

use modlinks::cutting::continued_fraction;
use modlinks::farey::{
    farey_path, is_farey_neighbour, mediant, nonnegative_representative, order_as_farey_chain,
    v_orbit, v_rotate, v_rotate_twice,
};
use modlinks::{FareyTriangle, Slope};
use num_integer::Integer;

#[test]
fn descent_matches_breadth_first_search() {
    let parent = bfs_parents();
    let depth = bfs_depths(&parent);
    for s in nonnegative_slopes(BOUND) {
        let expected = shortest_path(&parent, &depth, s);
        let path = farey_path(s).unwrap();
        let got: Vec<Tri> = path.triangles().iter().map(as_tri).collect();
        assert_eq!(got, expected, "path to {s}");
        assert_eq!(path.len(), expected.len());
    }
}

#[test]
fn path_length_is_continued_fraction_sum() {
    for s in nonnegative_slopes(BOUND) {
        let x = farey_path(s).unwrap().len() as u64;
        if s.p() == 0 || s.q() == 0 {
            assert_eq!(x, 1, "{s}");
        } else {
            assert_eq!(x, continued_fraction(s).unwrap().digit_sum(), "{s}");
        }
    }
}

#[test]
fn path_structure() {
    for s in nonnegative_slopes(25) {
        let path = farey_path(s).unwrap();
        let tris = path.triangles();
        assert_eq!(tris[0], FareyTriangle::BASE);
        assert!(tris.last().unwrap().contains(s));
        for w in tris.windows(2) {
            assert_eq!(w[0].shared_vertices(&w[1]), 2);
        }
        let vertices = path.vertices();
        assert_eq!(vertices.len(), 2 + path.len());
        assert_eq!(
            vertices.iter().collect::<BTreeSet<_>>().len(),
            vertices.len()
        );
        assert!(vertices.iter().all(|v| v.is_nonnegative()));
    }
}

#[test]
fn rotation_has_order_three() {
    for p in -100..=100i64 {
        for q in 0..=100i64 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let s = Slope::new(p, q).unwrap();
            assert_eq!(v_rotate(v_rotate(v_rotate(s))), s);
            assert_eq!(v_rotate_twice(s), v_rotate(v_rotate(s)));
            assert_eq!(v_orbit(s).len(), 3, "{s}");
        }
    }
}

#[test]
fn orbits_have_nonnegative_members() {
    for p in -100..=100i64 {
        for q in 0..=100i64 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let s = Slope::new(p, q).unwrap();
            let r = nonnegative_representative(s);
            assert!(r.is_nonnegative());
            assert!(v_orbit(s).contains(&r));
            assert_eq!(Some(&r), v_orbit(s).iter().find(|m| m.is_nonnegative()));
        }
    }
}

#[test]
fn mediant_is_neighbour_of_both() {
    for s in nonnegative_slopes(30) {
        for t in nonnegative_slopes(30) {
            if is_farey_neighbour(s, t) {
                let m = mediant(s, t).unwrap();
                assert!(is_farey_neighbour(m, s) && is_farey_neighbour(m, t));
                assert!(s.min(t) < m && m < s.max(t));
            } else {
                assert!(mediant(s, t).is_err());
            }
        }
    }
}

#[test]
fn closed_paths_form_farey_chains() {
    for s in nonnegative_slopes(20) {
        let path = farey_path(s).unwrap();
        let closed: BTreeSet<Slope> = path.vertices().into_iter().flat_map(v_orbit).collect();
        assert_eq!(closed.len(), 3 * path.len(), "{s}");
        let chain = order_as_farey_chain(closed.iter().copied()).unwrap();
        assert_eq!(chain.len(), closed.len());
        for i in 0..chain.len() {
            assert!(is_farey_neighbour(chain[i], chain[(i + 1) % chain.len()]));
        }
        assert!(chain.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn slopes_round_trip_through_text() {
    for s in nonnegative_slopes(30)
        .into_iter()
        .chain([Slope::new(-7, 3).unwrap()])
    {
        assert_eq!(s.to_string().parse::<Slope>().unwrap(), s);
    }
    assert_eq!("4/6".parse::<Slope>().unwrap(), Slope::new(2, 3).unwrap());
    assert_eq!("-3/6".parse::<Slope>().unwrap(), Slope::new(-1, 2).unwrap());
    assert!("0/0".parse::<Slope>().is_err());
    assert!("x".parse::<Slope>().is_err());
}
