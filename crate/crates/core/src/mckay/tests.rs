use super::*;
use crate::arith::Cyc;
use crate::chartab::character_table;
use crate::group::{
    closure, conjugate_subgroup, normal_subgroups, sylow, Perm, PermGroup, DEFAULT_CAP,
};
use crate::showcase::corpus;

fn load(key: &str) -> PermGroup {
    corpus()
        .into_iter()
        .find(|e| e.key == key)
        .expect("corpus key")
        .load(DEFAULT_CAP)
        .unwrap()
}

fn instance(key: &str, p: u64) -> McKayInstance {
    check_hypotheses(&load(key).whole(), p).unwrap()
}

fn standard_s4(table: &crate::chartab::CharacterTable) -> usize {
    // the degree-3 irreducible with value 1 on transpositions (class 2b)
    (0..table.len())
        .find(|&i| table.degrees()[i] == 3 && table.values(i)[2] == Cyc::from_int(1))
        .unwrap()
}

#[test]
fn hypothesis_flags() {
    let s4 = instance("s4", 2);
    assert!(s4.solvable && s4.self_normalizing && s4.parity);
    let f21 = instance("f21", 3);
    assert!(f21.solvable && f21.self_normalizing && f21.parity);
    let f7 = instance("f21", 7);
    assert!(!f7.self_normalizing);
    assert_eq!(f7.normalizer.order(), 21);
    let sl = instance("sl23", 3);
    assert!(!sl.self_normalizing);
    assert_eq!(sl.normalizer.order(), 6);
    assert!(!sl.parity);
    assert_eq!(
        check_hypotheses(&load("s4").whole(), 4).unwrap_err(),
        McKayError::NotPrime(4)
    );
}

#[test]
fn star_map_on_s4() {
    let inst = instance("s4", 2);
    let table = character_table(&inst.group).unwrap();
    let ptab = character_table(&inst.sylow).unwrap();
    assert_eq!(navarro_star(&inst, 0).unwrap().star, 0);
    let chi = standard_s4(&table);
    let img = navarro_star(&inst, chi).unwrap();
    let beta: Vec<Cyc> = [1, 1, -1, 1, -1]
        .iter()
        .map(|&v| Cyc::from_int(v))
        .collect();
    assert_eq!(ptab.values(img.star), &beta[..]);
    assert_eq!(img.delta.len(), 1);
    assert_eq!(ptab.degrees()[img.delta[0].0], 2);
    // the degree-2 character is excluded
    let two = (0..table.len()).find(|&i| table.degrees()[i] == 2).unwrap();
    assert!(matches!(
        navarro_star(&inst, two),
        Err(McKayError::Precondition(_))
    ));
}

#[test]
fn linear_characters_restrict_to_their_star() {
    for (key, p) in [("s4", 2), ("f21", 3), ("s3xs3", 2)] {
        let inst = instance(key, p);
        let table = character_table(&inst.group).unwrap();
        let ptab = character_table(&inst.sylow).unwrap();
        for chi in table.linear_characters() {
            let star = navarro_star(&inst, chi).unwrap().star;
            let r = table.irreducible(chi).restrict(&inst.sylow).unwrap();
            assert_eq!(ptab.irreducible(star), r);
        }
    }
}

#[test]
fn descent_on_s4_standard() {
    let inst = instance("s4", 2);
    let table = character_table(&inst.group).unwrap();
    let chi = standard_s4(&table);
    let (xi, trace) = isaacs_descent(&inst, chi).unwrap();
    assert_eq!(trace.steps.len(), 1);
    let step = &trace.steps[0];
    assert_eq!(step.k.order(), 12);
    assert_eq!(step.l.order(), 4);
    assert_eq!(step.h, inst.sylow);
    let theta = character_table(&step.l).unwrap().irreducible(step.theta);
    assert!(theta.is_linear() && theta != crate::chartab::ClassFunction::trivial(&step.l));
    assert_eq!(xi, navarro_star(&inst, chi).unwrap().star);
}

#[test]
fn descent_on_f21_linear() {
    let inst = instance("f21", 3);
    let table = character_table(&inst.group).unwrap();
    for chi in table.linear_characters().into_iter().skip(1) {
        let (xi, trace) = isaacs_descent(&inst, chi).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].k.order(), 7);
        assert!(trace.steps[0].l.is_trivial());
        assert_eq!(trace.steps[0].theta, 0);
        let r = table.irreducible(chi).restrict(&inst.sylow).unwrap();
        assert_eq!(character_table(&inst.sylow).unwrap().irreducible(xi), r);
    }
}

#[test]
fn descent_on_p_group_is_identity() {
    let inst = instance("d8", 2);
    for chi in character_table(&inst.group).unwrap().linear_characters() {
        let (xi, trace) = isaacs_descent(&inst, chi).unwrap();
        assert_eq!(xi, chi);
        assert!(trace.steps.is_empty());
    }
}

#[test]
fn descent_refuses_without_hypotheses() {
    let sl = instance("sl23", 3);
    assert!(matches!(
        isaacs_descent(&sl, 0),
        Err(McKayError::Hypothesis(_))
    ));
    assert!(matches!(
        navarro_star(&sl, 0),
        Err(McKayError::Hypothesis(_))
    ));
    let f7 = instance("f21", 7);
    let err = verify_main(&f7, VerifyOptions::default()).unwrap_err();
    assert!(err
        .to_string()
        .contains("self-normalizing hypothesis fails"));
}

#[test]
fn extension_examples() {
    let inst = instance("s4", 2);
    let table = character_table(&inst.group).unwrap();
    let chi = standard_s4(&table);
    let v4 = normal_subgroups(&inst.group)
        .into_iter()
        .find(|n| n.order() == 4)
        .unwrap();
    let vt = character_table(&v4).unwrap();
    let lambda = (1..vt.len())
        .map(|i| vt.irreducible(i))
        .find(|t| t.invariant_under(inst.sylow.generators()).unwrap())
        .unwrap();
    let (w, stab) = check_extension(&inst, &v4, chi, &lambda).unwrap();
    assert_eq!(stab, inst.sylow);
    let ext = character_table(&stab).unwrap().irreducible(w);
    assert_eq!(ext.restrict(&v4).unwrap(), lambda);

    let triv = crate::chartab::ClassFunction::trivial(&v4);
    let (w, stab) = check_extension(&inst, &v4, 0, &triv).unwrap();
    assert_eq!(stab, inst.group);
    assert_eq!(w, 0);

    let f21 = instance("f21", 3);
    let c7 = normal_subgroups(&f21.group)
        .into_iter()
        .find(|n| n.order() == 7)
        .unwrap();
    let (w, stab) =
        check_extension(&f21, &c7, 1, &crate::chartab::ClassFunction::trivial(&c7)).unwrap();
    assert_eq!((w, stab.order()), (0, 21));
}

#[test]
fn glauberman_examples() {
    // C2 inverting C3: S3 with P = <(0 1)>, N = 1, K = C3
    let s3 = load("s3");
    let g = s3.whole();
    let pp = sylow(&g, 2);
    let k = normal_subgroups(&g)
        .into_iter()
        .find(|n| n.order() == 3)
        .unwrap();
    let one = s3.trivial();
    let c =
        check_glauberman_unique(&pp, 2, &k, &crate::chartab::ClassFunction::trivial(&one)).unwrap();
    assert_eq!(
        c,
        GlaubermanCount {
            count: 1,
            fixed_points: 1
        }
    );
    // trivial P, K = N
    let c =
        check_glauberman_unique(&one, 2, &k, &crate::chartab::ClassFunction::trivial(&k)).unwrap();
    assert_eq!(c.count, 1);
    // K/N must be a p'-group
    let err = check_glauberman_unique(&one, 3, &k, &crate::chartab::ClassFunction::trivial(&one));
    assert!(matches!(err, Err(McKayError::Precondition(_))));
}

#[test]
fn counts() {
    let c = mckay_count(&instance("s4", 2)).unwrap();
    assert_eq!(
        c,
        McKayCount {
            group: 4,
            normalizer: 4,
            equal: true
        }
    );
    let c = mckay_count(&instance("f21", 3)).unwrap();
    assert_eq!((c.group, c.normalizer), (3, 3));
    let c = mckay_count(&instance("c7", 7)).unwrap();
    assert_eq!((c.group, c.normalizer), (7, 7));
    let c = mckay_count(&instance("sl23", 3)).unwrap();
    assert!(c.equal);
}

#[test]
fn verify_small_instances() {
    for (key, p, n) in [("s4", 2, 4), ("f21", 3, 3), ("d8", 2, 4)] {
        let r = verify_main(&instance(key, p), VerifyOptions::default()).unwrap();
        assert!(r.verdict, "{key}");
        assert_eq!(r.pairs.len(), n);
        assert!(r
            .pairs
            .iter()
            .all(|x| x.restriction_multiplicity == Some(1)));
    }
}

#[test]
fn serial_and_parallel_agree() {
    let inst = instance("s3xs3", 2);
    let a = verify_main(&inst, VerifyOptions { parallel: false }).unwrap();
    let b = verify_main(&inst, VerifyOptions { parallel: true }).unwrap();
    assert_eq!(a.to_json().to_string(), b.to_json().to_string());
}

#[test]
fn conjugated_sylow_gives_same_verdict() {
    let g = load("s4");
    let whole = g.whole();
    let pp = sylow(&whole, 2);
    let x = (0..g.order())
        .find(|&x| conjugate_subgroup(&pp, x) != pp)
        .unwrap();
    let q = conjugate_subgroup(&pp, x);
    let a = verify_main(
        &McKayInstance::with_sylow(&whole, 2, &pp).unwrap(),
        VerifyOptions::default(),
    )
    .unwrap();
    let b = verify_main(
        &McKayInstance::with_sylow(&whole, 2, &q).unwrap(),
        VerifyOptions::default(),
    )
    .unwrap();
    assert!(a.verdict && b.verdict);
    let not_sylow = closure(&g, &[pp.generators()[0]]);
    assert!(McKayInstance::with_sylow(&whole, 2, &not_sylow).is_err());
}

#[test]
fn galois_equivariance_small() {
    assert!(check_galois_equivariance(&instance("f21", 3)).unwrap() > 0);
    assert!(check_galois_equivariance(&instance("c7", 7)).unwrap() > 0);
}

#[test]
fn lemma_drivers_on_s4() {
    let inst = instance("s4", 2);
    let s = check_lemmas(&inst).unwrap();
    assert!(s.restriction_configs > 0 && s.conjugacy_checks > 0);
    assert!(s.coprime_unique > 0 && s.complement_checks > 0);
    assert!(check_extensions(&inst).unwrap() > 0);
}

#[test]
fn complement_criterion_on_s3() {
    let s3 = load("s3");
    let g = s3.whole();
    let k = normal_subgroups(&g)
        .into_iter()
        .find(|n| n.order() == 3)
        .unwrap();
    let h = sylow(&g, 2);
    assert!(check_complement_criterion(&g, &k, &h).unwrap());
    let c6 = PermGroup::from_generators(
        "C6",
        5,
        vec![Perm::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap()],
        DEFAULT_CAP,
    )
    .unwrap();
    let g = c6.whole();
    let k = normal_subgroups(&g)
        .into_iter()
        .find(|n| n.order() == 3)
        .unwrap();
    let h = sylow(&g, 2);
    assert!(!check_complement_criterion(&g, &k, &h).unwrap());
}
