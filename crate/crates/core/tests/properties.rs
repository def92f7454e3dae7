use f1rep::colored::{chromatic_homs, gamma_of, key_rep, rep_key, rep_of};
use f1rep::corr::{is_type_alpha, rep_to_module};
use f1rep::f1lin::enumerate_maps;
use f1rep::hall::{coproduct_of, hall_row};
use f1rep::quiver::{loop_quiver, path_quiver};
use f1rep::rep::{
    aut_count, decompose, direct_sum_all, direct_sum_rep, find_isomorphism, hom_count, is_indecomposable,
    is_nilpotent_rep, subrepresentations,
};
use f1rep::{Quiver, Representation};
use proptest::prelude::*;

fn quivers() -> Vec<Quiver> {
    vec![
        loop_quiver(1),
        loop_quiver(2),
        path_quiver(&[true]),
        path_quiver(&[true, false]),
        Quiver::named("K2").unwrap(),
        Quiver::named("C2").unwrap(),
    ]
}

/// A representation picked by seeds: quiver, dimension vector (each entry at
/// most 2, total at most 4), then one map per arrow.
fn rep_from_seeds(qi: usize, dims: &[usize], picks: &[usize]) -> Representation {
    let q = quivers()[qi % 6].clone();
    let mut d: Vec<usize> = dims.iter().take(q.num_vertices()).copied().collect();
    while d.iter().sum::<usize>() > 4 {
        let i = d.iter().position(|&x| x > 0).unwrap();
        d[i] -= 1;
    }
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            let all = enumerate_maps(d[s], d[t]);
            all[picks[a] % all.len()].clone()
        })
        .collect();
    Representation::new(q, d, maps).unwrap()
}

fn arb_rep() -> impl Strategy<Value = Representation> {
    (0usize..6, proptest::collection::vec(0usize..3, 3), proptest::collection::vec(0usize..1000, 3))
        .prop_map(|(q, d, p)| rep_from_seeds(q, &d, &p))
}

/// Several representations over one quiver.
fn arb_reps(k: usize) -> impl Strategy<Value = Vec<Representation>> {
    let one = (proptest::collection::vec(0usize..3, 3), proptest::collection::vec(0usize..1000, 3));
    (0usize..6, proptest::collection::vec(one, k))
        .prop_map(|(q, seeds)| seeds.iter().map(|(d, p)| rep_from_seeds(q, d, p)).collect())
}

fn arb_perm(d: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=d).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn key_is_a_relabeling_invariant(r in arb_rep(), seed in any::<u64>()) {
        let perms: Vec<Vec<usize>> = r
            .dims()
            .iter()
            .enumerate()
            .map(|(v, &d)| {
                let mut p: Vec<usize> = (1..=d).collect();
                p.rotate_left(((seed >> (8 * v)) as usize) % d.max(1));
                p
            })
            .collect();
        let s = r.relabel(&perms).unwrap();
        prop_assert_eq!(rep_key(&r), rep_key(&s));
        prop_assert!(find_isomorphism(&r, &s).unwrap().is_some());
    }

    #[test]
    fn key_decodes_to_the_same_class(r in arb_rep()) {
        let k = rep_key(&r);
        let back = key_rep(&k, r.quiver()).unwrap();
        prop_assert_eq!(rep_key(&back), k.clone());
        prop_assert!(find_isomorphism(&r, &back).unwrap().is_some());
        prop_assert_eq!(k.total_dim(), r.total_dim());
        prop_assert_eq!(aut_count(&r), aut_count(&back));
    }

    #[test]
    fn keys_separate_classes(v in arb_reps(2)) {
        let (a, b) = (&v[0], &v[1]);
        let iso = find_isomorphism(a, b).unwrap().is_some();
        prop_assert_eq!(iso, rep_key(a) == rep_key(b));
    }

    #[test]
    fn decomposition_round_trip(r in arb_rep()) {
        let parts = decompose(&r);
        prop_assert!(parts.iter().all(is_indecomposable));
        let sum = direct_sum_all(r.quiver(), &parts).unwrap();
        prop_assert_eq!(rep_key(&sum), rep_key(&r));
        prop_assert_eq!(parts.iter().map(Representation::total_dim).sum::<usize>(), r.total_dim());
    }

    #[test]
    fn colored_quiver_round_trip(r in arb_rep()) {
        prop_assume!(is_nilpotent_rep(&r));
        let back = rep_of(&gamma_of(&r)).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn chromatic_maps_count_homs(v in arb_reps(2)) {
        let (a, b) = (&v[0], &v[1]);
        prop_assume!(is_nilpotent_rep(a) && is_nilpotent_rep(b));
        prop_assert_eq!(chromatic_homs(a, b).unwrap(), hom_count(a, b).unwrap());
    }

    #[test]
    fn homs_are_additive(v in arb_reps(3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assume!(a.total_dim() + b.total_dim() <= 5);
        // Hom(A ⊕ B, C) counts pairs of homs with disjoint images
        let ab = direct_sum_rep(a, b).unwrap();
        let lhs = hom_count(&ab, c).unwrap();
        prop_assert!(lhs <= hom_count(a, c).unwrap() * hom_count(b, c).unwrap());
        prop_assert!(lhs >= hom_count(a, c).unwrap().max(hom_count(b, c).unwrap()));
    }

    #[test]
    fn hall_row_counts_every_subrepresentation(r in arb_rep()) {
        prop_assume!(is_nilpotent_rep(&r));
        let row = hall_row(&r).unwrap();
        prop_assert_eq!(row.values().sum::<u64>(), subrepresentations(&r).len() as u64);
    }

    #[test]
    fn coproduct_is_cocommutative(r in arb_rep()) {
        prop_assume!(is_nilpotent_rep(&r));
        let d = coproduct_of(&r).unwrap();
        prop_assert_eq!(d.flip(), d.clone());
        let prim = d.terms().len() == 2;
        prop_assert_eq!(prim, r.total_dim() > 0 && is_indecomposable(&r));
    }

    #[test]
    fn modules_are_type_alpha(r in arb_rep()) {
        let m = rep_to_module(&r);
        prop_assert!(m.satisfies_relations());
        prop_assert!(is_type_alpha(&m));
    }

    #[test]
    fn relabeled_chain_keeps_its_key(p in arb_perm(3)) {
        let l1 = loop_quiver(1);
        let chain = Representation::from_images(l1, vec![3], vec![vec![0, 1, 2]]).unwrap();
        let s = chain.relabel(&[p]).unwrap();
        prop_assert_eq!(rep_key(&s), rep_key(&chain));
    }
}
