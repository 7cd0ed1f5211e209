//! Executable forms of the auxiliary facts the descent relies on, plus
//! drivers that run them over every configuration a group offers.

use serde::Serialize;

use super::{check_extension, check_glauberman_unique, falsified, McKayError, McKayInstance};
use crate::chartab::{character_table, ClassFunction};
use crate::group::{
    all_subgroups, centralizer_of, intersection, is_normal, normal_subgroups, normalizer,
    normalizes, sylow, Subgroup,
};

/// Groups up to this order get exhaustive subgroup enumeration in the
/// configuration drivers; larger groups use [`candidate_subgroups`].
pub const EXHAUSTIVE_SUBGROUP_LIMIT: usize = 200;

fn is_product(g: &Subgroup, k: &Subgroup, h: &Subgroup) -> bool {
    k.order() * h.order() / intersection(k, h).order() == g.order()
}

/// For `K ⊴ G`, `G = KH`, `N = K ∩ H`: for every `G`-invariant `phi` of
/// `K` restricting irreducibly to `N`, restriction to `H` maps
/// `Irr(G|phi)` bijectively onto `Irr(H|phi_N)`. Returns
/// `(phi checked, characters matched)`.
pub fn check_restriction_bijection(
    g: &Subgroup,
    k: &Subgroup,
    h: &Subgroup,
) -> Result<(usize, usize), McKayError> {
    if !is_normal(g, k) || !h.is_subgroup_of(g) || !is_product(g, k, h) {
        return Err(McKayError::Precondition("need K normal and G = KH".into()));
    }
    let n = intersection(k, h);
    let gt = character_table(g)?;
    let kt = character_table(k)?;
    let ht = character_table(h)?;
    let (mut phis, mut pairs) = (0, 0);
    for phi in kt.irreducibles() {
        if !phi.invariant_under(g.generators())? {
            continue;
        }
        let theta = phi.restrict(&n)?;
        if theta.irreducible_index()?.is_none() {
            continue;
        }
        phis += 1;
        let over_phi: Vec<usize> = (0..gt.len())
            .filter_map(|i| match gt.irreducible(i).lies_over(&phi) {
                Ok(true) => Some(Ok(i)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<_, _>>()?;
        let over_theta: Vec<usize> = (0..ht.len())
            .filter_map(|i| match ht.irreducible(i).lies_over(&theta) {
                Ok(true) => Some(Ok(i)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<_, _>>()?;
        let mut images = Vec::new();
        for &c in &over_phi {
            let r = gt.irreducible(c).restrict(h)?;
            match ht.index_of(&r) {
                Some(i) if over_theta.contains(&i) => images.push(i),
                _ => {
                    return Err(falsified(
                        "restriction sends Irr(G|phi) into Irr(H|theta)",
                        format!(
                            "|G| = {}, |K| = {}, |H| = {}, chi = {c}",
                            g.order(),
                            k.order(),
                            h.order()
                        ),
                    ))
                }
            }
        }
        images.sort_unstable();
        images.dedup();
        if images.len() != over_phi.len() || images != over_theta {
            return Err(falsified(
                "restriction is a bijection Irr(G|phi) -> Irr(H|theta)",
                format!(
                    "|G| = {}, |K| = {}, |H| = {}, over phi = {over_phi:?}, over theta = {over_theta:?}, images = {images:?}",
                    g.order(),
                    k.order(),
                    h.order()
                ),
            ));
        }
        pairs += over_phi.len();
    }
    Ok((phis, pairs))
}

/// Any two `P`-invariant constituents of `chi_N` are conjugate under
/// `N_G(P)`; a `p'`-degree `chi` has at least one. Returns the number of
/// `P`-invariant constituents.
pub fn check_invariant_constituents_conjugate(
    inst: &McKayInstance,
    n: &Subgroup,
    chi: usize,
) -> Result<usize, McKayError> {
    let g = &inst.group;
    if !is_normal(g, n) {
        return Err(McKayError::Precondition("N is not normal".into()));
    }
    let gt = character_table(g)?;
    let nt = character_table(n)?;
    let pgens = inst.sylow.generators();
    let mut inv = Vec::new();
    for (i, _) in gt.irreducible(chi).restrict(n)?.constituents()? {
        if nt.irreducible(i).invariant_under(pgens)? {
            inv.push(i);
        }
    }
    if gt.degrees()[chi] % inst.p != 0 && inv.is_empty() {
        return Err(falsified(
            "a p'-degree character has a P-invariant constituent on N",
            format!("chi = {chi}, |N| = {}", n.order()),
        ));
    }
    if let Some(&first) = inv.first() {
        let theta = nt.irreducible(first);
        let mut orbit = Vec::new();
        for &x in inst.normalizer.members() {
            if let Some(j) = nt.index_of(&theta.conjugate_by(x)?) {
                orbit.push(j);
            }
        }
        if let Some(&bad) = inv.iter().find(|i| !orbit.contains(i)) {
            return Err(falsified(
                "P-invariant constituents are N_G(P)-conjugate",
                format!(
                    "chi = {chi}, |N| = {}, {first} and {bad} are not conjugate",
                    n.order()
                ),
            ));
        }
    }
    Ok(inv.len())
}

/// For `K ⊴ G` complemented by `H`: `N_G(H) = H` exactly when
/// `C_K(H) = 1`. Returns whether `H` is self-normalizing.
pub fn check_complement_criterion(
    g: &Subgroup,
    k: &Subgroup,
    h: &Subgroup,
) -> Result<bool, McKayError> {
    if !is_normal(g, k)
        || !h.is_subgroup_of(g)
        || !intersection(k, h).is_trivial()
        || k.order() * h.order() != g.order()
    {
        return Err(McKayError::Precondition(
            "H is not a complement of K".into(),
        ));
    }
    let self_normalizing = normalizer(g, h) == *h;
    let centralizer_trivial = centralizer_of(k, h).is_trivial();
    if self_normalizing != centralizer_trivial {
        return Err(falsified(
            "N_G(H) = H iff C_K(H) = 1",
            format!(
                "|G| = {}, |K| = {}, |H| = {}, self-normalizing = {self_normalizing}, C_K(H) trivial = {centralizer_trivial}",
                g.order(),
                k.order(),
                h.order()
            ),
        ));
    }
    Ok(self_normalizing)
}

/// Subgroups used as `H` in the configuration drivers: all of them for
/// small groups, otherwise the normal subgroups, Sylow subgroups and their
/// normalizers, and the stabilizer of the first point.
pub fn candidate_subgroups(g: &Subgroup) -> Vec<Subgroup> {
    if g.order() <= EXHAUSTIVE_SUBGROUP_LIMIT {
        return all_subgroups(g);
    }
    let mut out = normal_subgroups(g);
    let push = |s: Subgroup, out: &mut Vec<Subgroup>| {
        if !out.contains(&s) {
            out.push(s);
        }
    };
    for q in crate::arith::prime_divisors(g.order() as u64) {
        let s = sylow(g, q);
        push(normalizer(g, &s), &mut out);
        push(s, &mut out);
    }
    let grp = g.parent();
    let stab: Vec<usize> = g
        .members()
        .iter()
        .copied()
        .filter(|&x| grp.element(x).apply(0) == 0)
        .collect();
    push(grp.subgroup_from_members(stab), &mut out);
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members().cmp(b.members()))
    });
    out
}

/// Tallies from [`check_lemmas`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LemmaSummary {
    /// `(K, H)` pairs with `K` normal and `G = KH`
    pub restriction_configs: usize,
    pub restriction_characters: usize,
    /// `(N, chi)` pairs checked for conjugacy of invariant constituents
    pub conjugacy_checks: usize,
    /// `(N, K, theta)` triples checked for invariant constituents
    pub coprime_checks: usize,
    /// of those, the triples where `P` fixes no nontrivial coset
    pub coprime_unique: usize,
    /// `(K, H)` complement pairs
    pub complement_checks: usize,
}

/// Runs the four auxiliary checks over every configuration of the
/// instance's group.
pub fn check_lemmas(inst: &McKayInstance) -> Result<LemmaSummary, McKayError> {
    let g = &inst.group;
    let normals = normal_subgroups(g);
    let subs = candidate_subgroups(g);
    let mut s = LemmaSummary::default();

    for k in &normals {
        for h in &subs {
            if !is_product(g, k, h) {
                continue;
            }
            let (_, pairs) = check_restriction_bijection(g, k, h)?;
            s.restriction_configs += 1;
            s.restriction_characters += pairs;
            if intersection(k, h).is_trivial() {
                check_complement_criterion(g, k, h)?;
                s.complement_checks += 1;
            }
        }
    }

    let gt = character_table(g)?;
    for n in &normals {
        for chi in 0..gt.len() {
            check_invariant_constituents_conjugate(inst, n, chi)?;
            s.conjugacy_checks += 1;
        }
    }

    let pp = &inst.sylow;
    for k in &normals {
        for n in normals.iter().filter(|n| n.is_subgroup_of(k)) {
            if !((k.order() / n.order()) as u64).is_multiple_of(inst.p)
                && normalizes(pp.generators(), k)
                && normalizes(pp.generators(), n)
            {
                for theta in character_table(n)?.irreducibles() {
                    if !theta.invariant_under(pp.generators())? {
                        continue;
                    }
                    let c = check_glauberman_unique(pp, inst.p, k, &theta)?;
                    s.coprime_checks += 1;
                    if c.fixed_points == 1 {
                        s.coprime_unique += 1;
                    }
                }
            }
        }
    }
    Ok(s)
}

/// Runs the extension check for every normal subgroup, every `p'`-degree
/// irreducible and every `P`-invariant constituent beneath it. Returns the
/// number of witnesses found.
pub fn check_extensions(inst: &McKayInstance) -> Result<usize, McKayError> {
    inst.require_star()?;
    let g = &inst.group;
    let gt = character_table(g)?;
    let mut found = 0;
    for n in normal_subgroups(g) {
        let nt = character_table(&n)?;
        for chi in gt.p_prime_irreducibles(inst.p) {
            for (i, _) in gt.irreducible(chi).restrict(&n)?.constituents()? {
                let theta: ClassFunction = nt.irreducible(i);
                if theta.invariant_under(inst.sylow.generators())? {
                    check_extension(inst, &n, chi, &theta)?;
                    found += 1;
                }
            }
        }
    }
    Ok(found)
}
