use std::collections::BTreeSet;

use modlinks::farey::{is_farey_neighbour, v_orbit};
use modlinks::links::CSV_HEADER;
use modlinks::{
    build_family, census, cover_scale, gamma_sequence, v_oct, volume_length_table, CensusOptions,
    GeodesicWord, LinkFamily, Slope,
};
use num_integer::Integer;
use serde_json::Value;

fn targets(bound: i64) -> Vec<Slope> {
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

/// Independent restatement of the family invariants.
fn check_family(f: &LinkFamily) {
    let x = f.x as usize;
    assert_eq!(f.path.len(), x);
    assert_eq!(f.slopes.len(), 3 * x);
    let set: BTreeSet<Slope> = f.slopes.iter().copied().collect();
    assert_eq!(set.len(), 3 * x);
    for s in &set {
        assert!(v_orbit(*s).is_subset(&set));
    }
    for v in f.path.vertices() {
        assert!(set.contains(&v));
    }
    for i in 0..f.slopes.len() {
        assert!(is_farey_neighbour(
            f.slopes[i],
            f.slopes[(i + 1) % f.slopes.len()]
        ));
    }
    assert_eq!(f.orbits.len(), x);
    assert_eq!(f.orbits[0].word, "LR".parse::<GeodesicWord>().unwrap());
    let mut union = BTreeSet::new();
    for o in &f.orbits {
        assert_eq!(o.slopes.len(), 3);
        assert!(union.insert(o.slopes.clone()));
        assert!(o.length > 0.0);
    }
    assert_eq!(f.counts.modular, f.x);
    assert_eq!(f.counts.unit_tangent_single_orientation, 3 * f.x);
    assert_eq!(f.counts.unit_tangent_both_orientations, 6 * f.x);
    assert_eq!(f.blocks.len(), 3 * x);
    assert!(f.blocks.iter().all(|b| b.determinant().abs() == 1));
    assert!((f.volume_modular - f.x as f64 * v_oct()).abs() < 1e-9);
    assert!((f.volume_paper_formula() * 2.0 - f.volume_modular).abs() < 1e-12);
    f.validate().unwrap();
}

#[test]
fn families_up_to_thirty() {
    for t in targets(30) {
        let f = build_family(t).unwrap();
        check_family(&f);
        assert!(f.path.triangles().last().unwrap().contains(t));
    }
}

#[test]
fn unit_fraction_families_are_gamma_sequences() {
    for n in 1..=20u32 {
        let f = gamma_sequence(n).unwrap();
        assert_eq!(f.x, n as u64);
        for (k, o) in f.orbits.iter().enumerate() {
            assert_eq!(o.word, GeodesicWord::gamma(k + 1));
        }
        assert!((f.volume_modular - n as f64 * v_oct()).abs() < 1e-9);
    }
}

#[test]
fn census_sizes_double_with_depth() {
    let families: Vec<LinkFamily> = census(8, CensusOptions::default())
        .map(Result::unwrap)
        .collect();
    assert_eq!(families.len(), (1 << 8) - 1);
    for x in 1..=8u64 {
        let at_depth = families.iter().filter(|f| f.x == x).count();
        assert_eq!(at_depth, 1 << (x - 1));
    }
    assert!(families.windows(2).all(|w| w[0].x <= w[1].x));
    let targets: BTreeSet<Slope> = families.iter().map(|f| f.target).collect();
    assert_eq!(targets.len(), families.len());
    families.iter().for_each(check_family);
}

#[test]
fn census_is_deterministic() {
    let a: Vec<String> = census(6, CensusOptions::default())
        .map(|f| f.unwrap().to_json_line())
        .collect();
    let b: Vec<String> = census(6, CensusOptions::default())
        .map(|f| f.unwrap().to_json_line())
        .collect();
    assert_eq!(a, b);
}

#[test]
fn mirror_dedupe_keeps_one_of_each_pair() {
    let all: Vec<LinkFamily> = census(6, CensusOptions::default())
        .map(Result::unwrap)
        .collect();
    let kept: Vec<LinkFamily> = census(
        6,
        CensusOptions {
            dedupe_mirror: true,
        },
    )
    .map(Result::unwrap)
    .collect();
    assert!(kept.len() < all.len());
    let key = |f: &LinkFamily| {
        let words = f.word_set();
        let mirrored: BTreeSet<String> =
            f.words().iter().map(|w| w.mirrored().to_string()).collect();
        words.min(mirrored)
    };
    let all_keys: BTreeSet<_> = all.iter().map(key).collect();
    let kept_keys: Vec<_> = kept.iter().map(key).collect();
    assert_eq!(kept_keys.len(), all_keys.len());
    assert_eq!(
        kept_keys.iter().collect::<BTreeSet<_>>().len(),
        kept_keys.len()
    );
}

#[test]
fn json_records_round_trip_slopes() {
    for f in census(5, CensusOptions::default()).map(Result::unwrap) {
        let v: Value = serde_json::from_str(&f.to_json_line()).unwrap();
        let slopes: Vec<Slope> = v["slopes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_str().unwrap().parse().unwrap())
            .collect();
        assert_eq!(slopes, f.slopes);
        assert_eq!(v["orbits"].as_array().unwrap().len() as u64, f.x);
        for (o, rec) in f.orbits.iter().zip(v["orbits"].as_array().unwrap()) {
            assert_eq!(rec["trace"].as_str().unwrap(), o.trace.to_string());
            assert_eq!(
                rec["representative"]
                    .as_str()
                    .unwrap()
                    .parse::<Slope>()
                    .unwrap(),
                o.representative
            );
        }
    }
}

#[test]
fn cover_scaling() {
    let f = build_family("5/3".parse().unwrap()).unwrap();
    let c = cover_scale(&f, 6).unwrap();
    assert_eq!(c.octahedra, 6 * f.x);
    assert_eq!(c.unit_tangent_both_orientations, 36 * f.x);
    assert!((c.volume - 6.0 * f.volume_modular).abs() < 1e-9);
    assert!(cover_scale(&f, 0).is_err());
}

#[test]
fn volume_table_shape() {
    let report = volume_length_table(50).unwrap();
    assert_eq!(report.rows.len(), 50);
    let csv = report.to_csv_string();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
    assert_eq!(lines.count(), 50);
    let mut total = 0.0;
    for (i, row) in report.rows.iter().enumerate() {
        assert_eq!(row.n as usize, i + 1);
        assert_eq!(row.word, GeodesicWord::gamma(i + 1));
        total += row.length;
        assert!((row.cumulative_length - total).abs() < 1e-9);
        assert_eq!(row.octahedra, row.n as u64);
    }
}
