use std::sync::OnceLock;

use proptest::prelude::*;

use mckay_core::arith::{rat, Cyc};
use mckay_core::chartab::character_table;
use mckay_core::group::{all_subgroups, PermGroup, Subgroup, DEFAULT_CAP};
use mckay_core::mckay::{check_hypotheses, navarro_star};
use mckay_core::showcase::{corpus, InstanceKind};

const CONDUCTORS: [u32; 5] = [3, 4, 8, 12, 24];

fn cyc_strategy() -> impl Strategy<Value = Cyc> {
    (
        prop::sample::select(CONDUCTORS.to_vec()),
        prop::collection::vec((-3i64..=3, 1i64..=3, 0i64..24), 0..4),
    )
        .prop_map(|(n, terms)| {
            terms.into_iter().fold(Cyc::zero(), |acc, (a, b, k)| {
                &acc + &Cyc::root_of_unity(n, k).scale(&rat(a, b))
            })
        })
}

proptest! {
    #[test]
    fn cyc_field_axioms(a in cyc_strategy(), b in cyc_strategy(), c in cyc_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Cyc::zero(), a.clone());
        prop_assert_eq!(&a * &Cyc::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn cyc_reduction_and_display_are_canonical(a in cyc_strategy(), m in prop::sample::select(vec![24u32, 48, 72])) {
        let big = a.embed(m);
        prop_assert_eq!(&big, &a);
        prop_assert_eq!(big.reduced().conductor(), a.reduced().conductor());
        prop_assert_eq!(big.to_string(), a.to_string());
    }

    #[test]
    fn cyc_galois_is_a_ring_map(a in cyc_strategy(), b in cyc_strategy(), k in prop::sample::select(vec![1i64, 5, 7, 11, 13, 17, 19, 23])) {
        let s = |x: &Cyc| x.embed(24).galois(k).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }
}

fn load(key: &str) -> PermGroup {
    corpus()
        .into_iter()
        .find(|e| e.key == key)
        .unwrap()
        .load(DEFAULT_CAP)
        .unwrap()
}

fn chains() -> &'static Vec<(Subgroup, Subgroup)> {
    static CHAINS: OnceLock<Vec<(Subgroup, Subgroup)>> = OnceLock::new();
    CHAINS.get_or_init(|| {
        let mut out = Vec::new();
        for key in ["s4", "sl23", "f21", "s3xs3"] {
            let g = load(key).whole();
            for h in all_subgroups(&g) {
                out.push((h, g.clone()));
            }
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frobenius_reciprocity(pick in any::<prop::sample::Index>(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let (h, g) = pick.get(chains());
        let ht = character_table(h).unwrap();
        let gt = character_table(g).unwrap();
        let theta = ht.irreducible(i.index(ht.len()));
        let chi = gt.irreducible(j.index(gt.len()));
        let lhs = theta.induce(g).unwrap().inner_product(&chi).unwrap();
        let rhs = theta.inner_product(&chi.restrict(h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn corpus_tables_satisfy_invariants() {
    for key in mckay_core::showcase::builtin_keys() {
        let g = load(key).whole();
        let t = character_table(&g).unwrap();
        assert!(
            t.row_orthogonality_holds() && t.column_orthogonality_holds(),
            "{key}"
        );
        assert_eq!(
            t.degrees().iter().map(|d| d * d).sum::<u64>() as usize,
            g.order()
        );
        assert!(t.values(0).iter().all(|v| *v == Cyc::one()));
        assert!(t.degrees().windows(2).all(|w| w[0] <= w[1]));
        for i in 1..t.len() {
            if t.degrees()[i] == t.degrees()[i - 1] && i > 1 {
                assert!(t.values(i - 1) < t.values(i), "{key}: row order");
            }
        }
        for i in 0..t.len() {
            assert_eq!(t.values(i)[0], Cyc::from_int(t.degrees()[i] as i64));
        }
    }
}

#[test]
fn star_map_is_bijective_on_positive_instances() {
    for e in corpus()
        .into_iter()
        .filter(|e| e.kind == InstanceKind::Positive)
    {
        let inst = check_hypotheses(&e.load(DEFAULT_CAP).unwrap().whole(), e.p).unwrap();
        let mut images: Vec<usize> = character_table(&inst.group)
            .unwrap()
            .p_prime_irreducibles(e.p)
            .into_iter()
            .map(|chi| navarro_star(&inst, chi).unwrap().star)
            .collect();
        images.sort_unstable();
        assert_eq!(
            images,
            character_table(&inst.sylow).unwrap().linear_characters(),
            "{}",
            e.key
        );
    }
}

#[test]
fn fixed_point_free_action_gives_self_normalizing_sylow() {
    use mckay_core::group::{centralizer_of, o_p_residual};
    let g = load("c25c3").whole();
    let inst = check_hypotheses(&g, 3).unwrap();
    let k = o_p_residual(&g, 3);
    assert_eq!(k.order(), 25);
    assert!(centralizer_of(&k, &inst.sylow).is_trivial());
    assert!(inst.self_normalizing);
    assert!(mckay_core::mckay::check_complement_criterion(&g, &k, &inst.sylow).unwrap());
}
