use hurwitz::catalog;
use hurwitz::census::{hurwitz_census, order_for_genus, CensusConfig, Source, SIMPLE_ORDERS};
use hurwitz::dessin::{OrderMode, TriangleType};
use hurwitz::homol::klein_extension;

#[test]
fn census_to_genus_17() {
    let c = hurwitz_census(&CensusConfig::default()).unwrap();
    let counts: Vec<(u64, usize)> = c.entries.iter().filter(|e| e.count > 0).map(|e| (e.genus, e.count)).collect();
    assert_eq!(counts, vec![(3, 1), (7, 1), (14, 3), (17, 2)]);
    let e17 = c.entries.iter().find(|e| e.genus == 17).unwrap();
    assert_eq!(e17.groups.len(), 1);
    let g17 = &e17.groups[0];
    assert_eq!(g17.source, Source::Homol);
    assert_eq!(g17.split, Some(false));
    assert!(g17.characters.iter().all(|x| x.consistent()));
    // the second kernel gives the same group again
    assert!(e17.duplicates.iter().any(|d| d.isomorphic_to == g17.name));
    for o in &c.unchecked_orders {
        assert!(SIMPLE_ORDERS.iter().any(|s| o % s == 0), "{o}");
    }
}

#[test]
fn genus_order_relation() {
    let h = TriangleType::HURWITZ;
    assert_eq!(order_for_genus(h, 3), Some(168));
    assert_eq!(order_for_genus(h, 17), Some(1344));
    assert_eq!(order_for_genus(h, 4), Some(252));
    assert_eq!(order_for_genus(h, 1), None);
    // 2g - 2 = n/24 for (2,3,8)
    let t = TriangleType::new(2, 3, 8).unwrap();
    assert_eq!(order_for_genus(t, 2), Some(48));
}

#[test]
fn data_pack_groups_are_deduplicated() {
    let ext = klein_extension(2).unwrap().group.with_name("pack-ext");
    let agl =
        catalog::load_group(&std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/agl_3_2.gens"), 10_000)
            .unwrap();
    let cfg = CensusConfig { data_pack: vec![ext, agl], homol_sweep: false, ..CensusConfig::default() };
    let c = hurwitz_census(&cfg).unwrap();
    let e17 = c.entries.iter().find(|e| e.genus == 17).unwrap();
    assert_eq!(e17.groups.len(), 1);
    assert_eq!(c.count(17), 2);
    assert_eq!(e17.groups[0].source, Source::DataPack);
    assert!(e17.searched_groups.iter().any(|n| n.contains("GL(3,2)")));
}

#[test]
fn without_sweep_only_agl_is_searched_at_1344() {
    let cfg = CensusConfig { homol_sweep: false, ..CensusConfig::default() };
    let c = hurwitz_census(&cfg).unwrap();
    assert_eq!(c.count(17), 0);
    let e17 = c.entries.iter().find(|e| e.genus == 17).unwrap();
    assert!(e17.groups.is_empty());
    assert!(!e17.searched_groups.is_empty());
}

#[test]
fn dividing_mode_matches_exact_for_hurwitz() {
    let cfg = CensusConfig { mode: OrderMode::Dividing, max_genus: 14, ..CensusConfig::default() };
    let a = hurwitz_census(&cfg).unwrap();
    let b = hurwitz_census(&CensusConfig { max_genus: 14, ..CensusConfig::default() }).unwrap();
    for g in 2..=14 {
        assert_eq!(a.count(g), b.count(g));
    }
}
