use std::time::Instant;

use cuspkit::codes::{barth_configuration, coplanar_subsets, enumerate_divisible_families};

#[test]
fn barth_enumeration_finds_the_four_sets() {
    let t = Instant::now();
    let cfg = barth_configuration();
    let e = enumerate_divisible_families(&cfg);
    eprintln!("{} codes, {:?}, {:?}", e.codes_examined, e.families, t.elapsed());
    assert_eq!(e.codes_examined, 13440);
    assert_eq!(e.three_dimensional_extensions, 0);
    let expected = vec![
        vec![1, 2, 3, 4, 5, 6],
        vec![1, 2, 3, 4, 7, 8],
        vec![1, 4, 5, 6, 7, 8],
        vec![2, 3, 5, 6, 7, 8],
    ];
    assert_eq!(e.families, vec![expected.clone()]);
    let four = coplanar_subsets(cfg.points(), 4);
    let five = coplanar_subsets(cfg.points(), 5);
    for s in &expected {
        assert!(four.iter().any(|q| q.iter().all(|i| s.contains(i))));
        assert!(!five.iter().any(|q| q.iter().all(|i| s.contains(i))));
    }
}
