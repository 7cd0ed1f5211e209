//! Subgroup-level algorithms by direct enumeration.

use std::collections::BTreeSet;

use crate::arith::p_part;

use super::{GroupError, PermGroup, Subgroup};

fn closure_members(g: &PermGroup, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut list = vec![0usize];
    let gens: Vec<usize> = gens.iter().copied().filter(|&x| x != 0).collect();
    let mut head = 0;
    while head < list.len() {
        let x = list[head];
        for &s in &gens {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                list.push(y);
            }
        }
        head += 1;
    }
    list
}

/// The subgroup generated by a set of elements.
pub fn closure(g: &PermGroup, gens: &[usize]) -> Subgroup {
    g.subgroup_from_members(closure_members(g, gens))
}

/// The smallest subgroup of `ambient` that contains `gens` and is normalized
/// by `ambient`.
pub fn normal_closure(ambient: &Subgroup, gens: &[usize]) -> Subgroup {
    let g = ambient.parent();
    let mut gens: Vec<usize> = gens.to_vec();
    loop {
        let members = closure_members(g, &gens);
        let mut mask = vec![false; g.order()];
        for &m in &members {
            mask[m] = true;
        }
        let mut extra = Vec::new();
        for &s in &gens {
            for &a in ambient.generators() {
                let c = g.conjugate(s, a);
                if !mask[c] && !extra.contains(&c) {
                    extra.push(c);
                }
            }
        }
        if extra.is_empty() {
            return g.subgroup_from_members(members);
        }
        gens.extend(extra);
    }
}

/// Whether `n` is a normal subgroup of `g`.
pub fn is_normal(g: &Subgroup, n: &Subgroup) -> bool {
    n.is_subgroup_of(g) && normalizes(g.generators(), n)
}

/// Whether every listed element normalizes `h`.
pub fn normalizes(elems: &[usize], h: &Subgroup) -> bool {
    let grp = h.parent();
    elems.iter().all(|&x| {
        h.generators()
            .iter()
            .all(|&s| h.contains(grp.conjugate(s, x)))
    })
}

/// `N_G(H) = {g in G : H^g = H}`.
pub fn normalizer(g: &Subgroup, h: &Subgroup) -> Subgroup {
    let members = g
        .members()
        .iter()
        .copied()
        .filter(|&x| normalizes(&[x], h))
        .collect();
    g.parent().subgroup_from_members(members)
}

/// `C_G(x)`.
pub fn centralizer(g: &Subgroup, x: usize) -> Subgroup {
    let grp = g.parent();
    let members = g
        .members()
        .iter()
        .copied()
        .filter(|&y| grp.mul(x, y) == grp.mul(y, x))
        .collect();
    grp.subgroup_from_members(members)
}

/// `C_G(H)`, the elements of `g` commuting with all of `h`.
pub fn centralizer_of(g: &Subgroup, h: &Subgroup) -> Subgroup {
    let grp = g.parent();
    let members = g
        .members()
        .iter()
        .copied()
        .filter(|&y| {
            h.generators()
                .iter()
                .all(|&s| grp.mul(s, y) == grp.mul(y, s))
        })
        .collect();
    grp.subgroup_from_members(members)
}

pub fn center(g: &Subgroup) -> Subgroup {
    centralizer_of(g, g)
}

pub fn intersection(a: &Subgroup, b: &Subgroup) -> Subgroup {
    let members = a
        .members()
        .iter()
        .copied()
        .filter(|&x| b.contains(x))
        .collect();
    a.parent().subgroup_from_members(members)
}

/// The subgroup generated by `a` and `b`.
pub fn join(a: &Subgroup, b: &Subgroup) -> Subgroup {
    let gens: Vec<usize> = a
        .generators()
        .iter()
        .chain(b.generators())
        .copied()
        .collect();
    closure(a.parent(), &gens)
}

/// The set product `AB`, which must itself be a subgroup.
pub fn product_subgroup(a: &Subgroup, b: &Subgroup) -> Result<Subgroup, GroupError> {
    let grp = a.parent();
    let mut set = BTreeSet::new();
    for &x in a.members() {
        for &y in b.members() {
            set.insert(grp.mul(x, y));
        }
    }
    let joined = join(a, b);
    if joined.order() != set.len() {
        return Err(GroupError::NotClosed {
            left: a.order(),
            right: b.order(),
        });
    }
    Ok(joined)
}

/// `H^g`.
pub fn conjugate_subgroup(h: &Subgroup, g: usize) -> Subgroup {
    let grp = h.parent();
    grp.subgroup_from_members(h.members().iter().map(|&x| grp.conjugate(x, g)).collect())
}

pub fn derived_subgroup(h: &Subgroup) -> Subgroup {
    let grp = h.parent();
    let gens = h.generators();
    let mut comms = Vec::new();
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i + 1..] {
            let c = grp.commutator(x, y);
            if c != 0 && !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    normal_closure(h, &comms)
}

/// `H = H^(0) > H' > H'' > ...` down to the first repeated term.
pub fn derived_series(h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let next = derived_subgroup(series.last().unwrap());
        if next == *series.last().unwrap() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_solvable(h: &Subgroup) -> bool {
    derived_series(h).last().unwrap().is_trivial()
}

fn is_p_power(mut n: usize, p: u64) -> bool {
    let p = p as usize;
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

pub fn is_p_group(h: &Subgroup, p: u64) -> bool {
    is_p_power(h.order(), p)
}

/// `O^p(H)`: generated by the elements of order coprime to `p`.
pub fn o_p_residual(h: &Subgroup, p: u64) -> Subgroup {
    let grp = h.parent();
    let gens: Vec<usize> = h
        .members()
        .iter()
        .copied()
        .filter(|&x| !(grp.element_order(x) as u64).is_multiple_of(p))
        .collect();
    closure(grp, &gens)
}

/// `O^{p'}(H)`: generated by the `p`-elements.
pub fn o_p_prime_residual(h: &Subgroup, p: u64) -> Subgroup {
    let grp = h.parent();
    let gens: Vec<usize> = h
        .members()
        .iter()
        .copied()
        .filter(|&x| is_p_power(grp.element_order(x) as usize, p))
        .collect();
    closure(grp, &gens)
}

/// Every composition factor is a `p`-group or a `p'`-group. Peels off
/// `O^{p'}` and `O^p` alternately until nothing changes.
pub fn is_p_solvable(h: &Subgroup, p: u64) -> bool {
    let mut x = h.clone();
    loop {
        let y = o_p_residual(&o_p_prime_residual(&x, p), p);
        if y == x {
            return x.is_trivial();
        }
        x = y;
    }
}

/// A Sylow `p`-subgroup, grown greedily: starting from the trivial group,
/// repeatedly adjoin the first `p`-element (in canonical order) that
/// normalizes but is not in the current subgroup.
pub fn sylow(h: &Subgroup, p: u64) -> Subgroup {
    let grp = h.parent();
    let target = p_part(h.order() as u64, p) as usize;
    let p_elements: Vec<usize> = h
        .members()
        .iter()
        .copied()
        .filter(|&x| x != 0 && is_p_power(grp.element_order(x) as usize, p))
        .collect();
    let mut q = grp.trivial();
    while q.order() < target {
        let x = p_elements
            .iter()
            .copied()
            .find(|&x| !q.contains(x) && normalizes(&[x], &q))
            .expect("a proper p-subgroup has a p-element normalizing it");
        let mut gens = q.generators().to_vec();
        gens.push(x);
        q = closure(grp, &gens);
    }
    q
}

/// Normal subgroups of `g`, as joins of normal closures of classes, sorted
/// by order and then members.
pub fn normal_subgroups(g: &Subgroup) -> Vec<Subgroup> {
    let cls = g.classes();
    let mut found: Vec<Subgroup> = vec![g.parent().trivial()];
    let push = |s: Subgroup, found: &mut Vec<Subgroup>| {
        if !found.contains(&s) {
            found.push(s);
        }
    };
    for c in 1..cls.len() {
        push(closure(g.parent(), cls.members(c)), &mut found);
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let s = join(&found[i], &found[j]);
            push(s, &mut found);
        }
        i += 1;
    }
    found.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members().cmp(b.members()))
    });
    found
}

/// Every subgroup of `g`, built from cyclic subgroups by repeated joins.
/// Only sensible for small groups.
pub fn all_subgroups(g: &Subgroup) -> Vec<Subgroup> {
    let grp = g.parent();
    let mut cyclic: Vec<Subgroup> = Vec::new();
    for &x in g.members() {
        let c = closure(grp, &[x]);
        if !cyclic.contains(&c) {
            cyclic.push(c);
        }
    }
    let mut found = cyclic.clone();
    let mut i = 0;
    while i < found.len() {
        for c in &cyclic {
            if c.is_subgroup_of(&found[i]) {
                continue;
            }
            let s = join(&found[i], c);
            if !found.contains(&s) {
                found.push(s);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members().cmp(b.members()))
    });
    found
}

/// Number of cosets `kN` of `N` in `K` fixed by every element of `P`
/// acting by conjugation, i.e. `|C_{K/N}(P)|`.
pub fn fixed_points_on_cosets(
    p: &Subgroup,
    k: &Subgroup,
    n: &Subgroup,
) -> Result<usize, GroupError> {
    if !is_normal(k, n) {
        return Err(GroupError::Precondition("N is not normal in K".into()));
    }
    if !normalizes(p.generators(), k) || !normalizes(p.generators(), n) {
        return Err(GroupError::Precondition(
            "P does not normalize both K and N".into(),
        ));
    }
    let grp = k.parent();
    let mut covered = vec![false; grp.order()];
    let mut count = 0;
    for &x in k.members() {
        if covered[x] {
            continue;
        }
        for &y in n.members() {
            covered[grp.mul(x, y)] = true;
        }
        let fixed = p.generators().iter().all(|&a| {
            let moved = grp.conjugate(x, a);
            n.contains(grp.mul(grp.inv(x), moved))
        });
        if fixed {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Perm, DEFAULT_CAP};

    fn group(name: &str, degree: usize, cycles: &[&[&[u32]]]) -> PermGroup {
        let gens = cycles
            .iter()
            .map(|c| Perm::from_cycles(degree, c).unwrap())
            .collect();
        PermGroup::from_generators(name, degree, gens, DEFAULT_CAP).unwrap()
    }

    fn s4() -> PermGroup {
        group("S4", 4, &[&[&[0, 1]], &[&[0, 1, 2, 3]]])
    }

    fn f21() -> PermGroup {
        // x -> x+1, x -> 2x on Z/7
        group(
            "F21",
            7,
            &[&[&[0, 1, 2, 3, 4, 5, 6]], &[&[1, 2, 4], &[3, 6, 5]]],
        )
    }

    fn s3() -> PermGroup {
        group("S3", 3, &[&[&[0, 1, 2]], &[&[1, 2]]])
    }

    /// Brute-force normalizer: test H^g = H as sets.
    fn normalizer_brute(g: &Subgroup, h: &Subgroup) -> Vec<usize> {
        let grp = g.parent();
        g.members()
            .iter()
            .copied()
            .filter(|&x| {
                let mut c: Vec<usize> = h.members().iter().map(|&y| grp.conjugate(y, x)).collect();
                c.sort_unstable();
                c == h.members()
            })
            .collect()
    }

    #[test]
    fn sylow_orders() {
        let g = s4().whole();
        assert_eq!(sylow(&g, 2).order(), 8);
        assert_eq!(sylow(&g, 3).order(), 3);
        assert_eq!(sylow(&g, 5).order(), 1);
        let f = f21().whole();
        let p3 = sylow(&f, 3);
        assert_eq!(p3.order(), 3);
        // seven conjugates
        let mut conj: Vec<Vec<usize>> = f
            .members()
            .iter()
            .map(|&x| conjugate_subgroup(&p3, x).members().to_vec())
            .collect();
        conj.sort();
        conj.dedup();
        assert_eq!(conj.len(), 7);
    }

    #[test]
    fn normalizers() {
        let g = s4().whole();
        let p = sylow(&g, 2);
        let n = normalizer(&g, &p);
        assert_eq!(n, p);
        assert_eq!(n.members(), normalizer_brute(&g, &p).as_slice());
        assert_eq!(normalizer(&g, &g), g);
        let f = f21().whole();
        let p3 = sylow(&f, 3);
        assert_eq!(normalizer(&f, &p3), p3);
        let p7 = sylow(&f, 7);
        assert_eq!(normalizer(&f, &p7), f);
    }

    #[test]
    fn derived_subgroups() {
        let g = s4().whole();
        let series = derived_series(&g);
        let orders: Vec<usize> = series.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert!(is_solvable(&g));
        let c7 = sylow(&f21().whole(), 7);
        assert!(derived_subgroup(&c7).is_trivial());
        // brute-force commutator closure agrees
        let grp = g.parent();
        let all: Vec<usize> = (0..24)
            .flat_map(|x| (0..24).map(move |y| (x, y)))
            .map(|(x, y)| grp.commutator(x, y))
            .collect();
        assert_eq!(closure(grp, &all), series[1]);
    }

    #[test]
    fn residuals() {
        let g = s4().whole();
        assert_eq!(o_p_residual(&g, 2).order(), 12);
        assert_eq!(o_p_residual(&g, 2), derived_subgroup(&g));
        let d8 = sylow(&g, 2);
        assert!(o_p_residual(&d8, 2).is_trivial());
        let f = f21().whole();
        assert_eq!(o_p_residual(&f, 3), sylow(&f, 7));
        assert!(is_p_solvable(&g, 2) && is_p_solvable(&f, 3));
    }

    #[test]
    fn centralizers_products_normals() {
        let s = s3().whole();
        let grp = s.parent();
        let c3 = sylow(&s, 3);
        let inv = *s
            .members()
            .iter()
            .find(|&&x| grp.element_order(x) == 2)
            .unwrap();
        assert!(intersection(&centralizer(&s, inv), &c3).is_trivial());

        let g = s4().whole();
        let p = sylow(&g, 2);
        let v4 = derived_subgroup(&derived_subgroup(&g));
        assert_eq!(v4.order(), 4);
        let pl = product_subgroup(&p, &v4).unwrap();
        assert_eq!(pl.order(), 8);
        let orders: Vec<usize> = normal_subgroups(&g).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        // two distinct Sylow 3-subgroups do not multiply to a subgroup
        let p3 = sylow(&g, 3);
        let other = g
            .members()
            .iter()
            .map(|&x| conjugate_subgroup(&p3, x))
            .find(|q| *q != p3)
            .unwrap();
        assert!(matches!(
            product_subgroup(&p3, &other),
            Err(GroupError::NotClosed { .. })
        ));
    }

    #[test]
    fn coset_fixed_points() {
        let s = s3().whole();
        let grp = s.parent();
        let c3 = sylow(&s, 3);
        let c2 = sylow(&s, 2);
        assert_eq!(fixed_points_on_cosets(&c2, &c3, &grp.trivial()).unwrap(), 1);
        assert_eq!(
            fixed_points_on_cosets(&grp.trivial(), &c3, &grp.trivial()).unwrap(),
            3
        );
        assert!(fixed_points_on_cosets(&c2, &s, &c2).is_err());
    }

    #[test]
    fn subgroup_lattice_s4() {
        let g = s4().whole();
        assert_eq!(all_subgroups(&g).len(), 30);
        for h in all_subgroups(&g) {
            assert_eq!(24 % h.order(), 0);
        }
    }
}
