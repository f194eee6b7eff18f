use proptest::prelude::*;

use twisted::group::*;

#[test]
fn cyclic_tables() {
    let g = make_cyclic(5).unwrap();
    assert_eq!(g.order(), 5);
    assert_eq!(g.mul(3, 4), 2);
    assert_eq!(g.inv(2), 3);
    assert_eq!(g.element_order(1), 5);
    assert_eq!(g.power(2, -1), 3);
    assert!(g.is_abelian());
    g.check_axioms().unwrap();
    assert!(make_cyclic(0).is_err());
}

#[test]
fn product_indexing() {
    let g = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(4).unwrap()).unwrap();
    assert_eq!(g.order(), 8);
    // index a·4 + b
    assert_eq!(g.mul(4 + 3, 4 + 2), 1);
    assert_eq!(g.element_order(4 + 1), 4);
    assert_eq!(g.element_order(4), 2);
    g.check_axioms().unwrap();
}

#[test]
fn bad_tables_rejected() {
    let labels: Vec<String> = ["e", "x"].iter().map(|s| s.to_string()).collect();
    // no identity row
    assert!(GroupTable::from_table(vec![vec![1, 0], vec![0, 1]], labels.clone()).is_err());
    // not a latin square
    assert!(GroupTable::from_table(vec![vec![0, 1], vec![1, 1]], labels.clone()).is_err());
    assert!(GroupTable::from_table(vec![vec![0, 1], vec![1, 0]], labels).is_ok());
}

#[test]
fn subsets_multiply_by_symmetric_difference() {
    let s = make_subset_group(&["1", "2", "3"]).unwrap();
    assert_eq!(s.size(), 3);
    let g = s.group();
    assert_eq!(g.order(), 8);
    let a = s.mask_of(&["1", "2"]).unwrap();
    let b = s.mask_of(&["2", "3"]).unwrap();
    assert_eq!(g.mul(a, b), s.mask_of(&["1", "3"]).unwrap());
    assert_eq!(s.singleton(2), 4);
    assert_eq!(s.full(), 7);
    for t in 0..8 {
        assert_eq!(g.inv(t), t);
    }
    assert!(make_subset_group(&["1", "1"]).is_err());
    assert!(s.mask_of(&["4"]).is_err());
}

#[test]
fn subsets_match_z2_power() {
    for n in 0..5 {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let s = make_subset_group(&labels).unwrap().into_group();
        let p = z2_power(n).unwrap();
        assert_eq!(s.order(), p.order());
        // same bit layout: XOR
        for a in 0..s.order() {
            for b in 0..s.order() {
                assert_eq!(s.mul(a, b), a ^ b);
                assert_eq!(p.mul(a, b), a ^ b);
            }
        }
    }
}

#[test]
fn subgroups() {
    let g = make_cyclic(6).unwrap();
    let (h, emb) = g.subgroup(&[0, 2, 4]).unwrap();
    assert_eq!(h.order(), 3);
    assert_eq!(emb, vec![0, 2, 4]);
    assert!(g.subgroup(&[0, 1, 2]).is_err());
}

proptest! {
    #[test]
    fn product_axioms(n in 1usize..7, m in 1usize..7) {
        let g = direct_product(&make_cyclic(n).unwrap(), &make_cyclic(m).unwrap()).unwrap();
        prop_assert!(g.check_axioms().is_ok());
        for a in 0..g.order() {
            prop_assert_eq!(g.mul(a, g.inv(a)), 0);
            prop_assert_eq!(g.power(a, g.element_order(a) as i64), 0);
        }
    }
}
