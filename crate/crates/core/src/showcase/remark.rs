//! The order-648 group `K ⋊ SL(2,3)` with `K` extraspecial of order 27
//! and exponent 3, acting on the 27 elements of `K`.
//!
//! `K` is modelled as pairs `(v, c)` with `v` in `F_3^2` and `c` in `F_3`,
//! multiplied by `(v, c)(w, d) = (v + w, c + d + 2 det(v, w))`. The point
//! `(a, b, c)` has index `9a + 3b + c`. `K` acts by right translation and
//! `SL(2,3)` by `(v, c) -> (Mv, c)`, which is an automorphism because the
//! matrices have determinant one.

use serde::Serialize;

use super::ShowcaseError;
use crate::arith::Cyc;
use crate::chartab::{character_table, ClassFunction};
use crate::group::{
    center, centralizer_of, closure, derived_subgroup, fixed_points_on_cosets, intersection,
    normalizer, product_subgroup, sylow, Perm, PermGroup, Subgroup,
};
use crate::mckay::check_glauberman_unique;

type Point = (i64, i64, i64);

fn index((a, b, c): Point) -> u32 {
    (9 * a.rem_euclid(3) + 3 * b.rem_euclid(3) + c.rem_euclid(3)) as u32
}

fn points() -> Vec<Point> {
    let mut v = Vec::with_capacity(27);
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                v.push((a, b, c));
            }
        }
    }
    v
}

fn heisenberg_mul((a, b, c): Point, (a2, b2, c2): Point) -> Point {
    (a + a2, b + b2, c + c2 + 2 * (a * b2 - b * a2))
}

fn translation(y: Point) -> Perm {
    Perm::new(
        points()
            .into_iter()
            .map(|x| index(heisenberg_mul(x, y)))
            .collect(),
    )
    .expect("translation is a bijection")
}

fn automorphism(m: [[i64; 2]; 2]) -> Perm {
    Perm::new(
        points()
            .into_iter()
            .map(|(a, b, c)| index((m[0][0] * a + m[0][1] * b, m[1][0] * a + m[1][1] * b, c)))
            .collect(),
    )
    .expect("automorphism is a bijection")
}

/// Generators of the showcase group: two translations generating `K`,
/// then the two matrices `[[0,2],[1,0]]` and `[[1,1],[0,1]]` generating
/// `SL(2,3)`.
pub fn remark_generators() -> Vec<Perm> {
    vec![
        translation((1, 0, 0)),
        translation((0, 1, 0)),
        automorphism([[0, 2], [1, 0]]),
        automorphism([[1, 1], [0, 1]]),
    ]
}

/// The group with its distinguished subgroups.
#[derive(Debug, Clone)]
pub struct RemarkData {
    pub group: PermGroup,
    pub g: Subgroup,
    /// extraspecial normal subgroup of order 27
    pub k: Subgroup,
    /// `Z(K)`
    pub l: Subgroup,
    /// the `SL(2,3)` complement, stabilizer of the identity point
    pub h: Subgroup,
    /// Sylow 2-subgroup of `h`
    pub sylow: Subgroup,
    /// `N_G(P)`
    pub n: Subgroup,
    /// first nontrivial irreducible of `L` in table order
    pub theta: usize,
}

fn require(cond: bool, what: &str) -> Result<(), ShowcaseError> {
    if cond {
        Ok(())
    } else {
        Err(ShowcaseError::Invariant(what.to_string()))
    }
}

/// Builds the group and checks its structural invariants.
pub fn build_remark_group(cap: usize) -> Result<RemarkData, ShowcaseError> {
    let group = PermGroup::from_generators("Remark648", 27, remark_generators(), cap)?;
    let g = group.whole();
    let gens = group.generator_indices();
    let k = closure(&group, &gens[..2]);
    let h = closure(&group, &gens[2..]);
    let l = center(&k);
    let pp = sylow(&h, 2);
    let n = normalizer(&g, &pp);

    require(g.order() == 648, "|G| = 648")?;
    require(k.order() == 27, "|K| = 27")?;
    require(l.order() == 3, "|L| = 3")?;
    require(h.order() == 24, "|H| = 24")?;
    require(pp.order() == 8, "|P| = 8")?;
    require(n.order() == 72, "|N_G(P)| = 72")?;
    require(
        intersection(&k, &h).is_trivial() && k.order() * h.order() == g.order(),
        "G = K ⋊ H",
    )?;
    require(derived_subgroup(&k) == l, "K' = Z(K)")?;
    require(
        k.members()
            .iter()
            .all(|&x| x == 0 || group.element_order(x) == 3),
        "K has exponent 3",
    )?;
    require(
        product_subgroup(&l, &h)? == n
            && intersection(&l, &h).is_trivial()
            && centralizer_of(&n, &l) == n
            && l.is_subgroup_of(&centralizer_of(&n, &h)),
        "N_G(P) = L × H",
    )?;
    for &x in pp.members().iter().filter(|&&x| x != 0) {
        let cx = closure(&group, &[x]);
        require(
            fixed_points_on_cosets(&cx, &k, &l)? == 1,
            "C_{K/L}(x) = 1 for every nonidentity x in P",
        )?;
    }
    Ok(RemarkData {
        group,
        g,
        k,
        l,
        h,
        sylow: pp,
        n,
        theta: 1,
    })
}

/// How `theta^K` decomposes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ramification {
    /// `theta^K = e phi` and `phi_L = e theta`
    FullyRamified {
        phi: usize,
        e: u64,
    },
    NotFullyRamified {
        constituents: Vec<(usize, u64)>,
    },
}

pub fn ramification(
    data: &RemarkData,
    theta: &ClassFunction,
) -> Result<Ramification, ShowcaseError> {
    let cons = theta.induce(&data.k)?.constituents()?;
    if let [(phi, e)] = cons[..] {
        let index = (data.k.order() / data.l.order()) as u64;
        let phi_chi = character_table(&data.k)?.irreducible(phi);
        if e * e == index && phi_chi.restrict(&data.l)? == theta.scale(e as i64) {
            return Ok(Ramification::FullyRamified { phi, e });
        }
    }
    Ok(Ramification::NotFullyRamified { constituents: cons })
}

/// `(phi, e)` for the pinned `theta`.
pub fn verify_fully_ramified(data: &RemarkData) -> Result<(usize, u64), ShowcaseError> {
    let theta = character_table(&data.l)?.irreducible(data.theta);
    if !theta.invariant_under(data.g.generators())? {
        return Err(ShowcaseError::falsified(
            "theta is G-invariant",
            format!("{theta:?}"),
        ));
    }
    match ramification(data, &theta)? {
        Ramification::FullyRamified { phi, e } => Ok((phi, e)),
        Ramification::NotFullyRamified { constituents } => Err(ShowcaseError::falsified(
            "theta is fully ramified in K",
            format!("theta^K constituents: {constituents:?}"),
        )),
    }
}

/// One candidate `psi = alpha + beta` on `H`.
#[derive(Debug, Clone, PartialEq)]
pub struct PsiCandidate {
    /// linear irreducible of `H`
    pub alpha: usize,
    /// degree-2 irreducible of `H`
    pub beta: usize,
    pub psi: ClassFunction,
    /// `(chi, xi)` with `chi_N = psi_N xi`; indices into the tables of `G` and `N`
    pub pairs: Vec<(usize, usize)>,
    /// the relation is a bijection between the two odd-degree sets
    pub viable: bool,
    /// degree 3, `-1` on involutions, `1` on elements of order 4,
    /// `±(1+2 z3)` on elements of order 3
    pub matches_stated_values: bool,
    pub faithful: bool,
}

#[derive(Debug, Clone)]
pub struct PsiRecovery {
    pub phi: usize,
    /// odd-degree irreducibles of `G` over `phi`
    pub upper: Vec<usize>,
    /// odd-degree irreducibles of `N` over `theta`
    pub lower: Vec<usize>,
    pub candidates: Vec<PsiCandidate>,
}

impl PsiRecovery {
    /// First viable candidate matching the stated values, in candidate order.
    pub fn chosen(&self) -> Option<&PsiCandidate> {
        self.candidates
            .iter()
            .find(|c| c.viable && c.matches_stated_values && c.faithful)
    }
}

/// `psi` on `H` pulled back to `N = L × H` along the projection.
pub fn inflate_to_n(data: &RemarkData, psi: &ClassFunction) -> ClassFunction {
    let grp = &data.group;
    let ncl = data.n.classes();
    let hcl = data.h.classes();
    let values = ncl
        .representatives()
        .iter()
        .map(|&x| {
            let hpart = data
                .l
                .members()
                .iter()
                .map(|&l| grp.mul(grp.inv(l), x))
                .find(|&y| data.h.contains(y))
                .expect("N = L H");
            psi.values()[hcl.class_of_local(data.h.local_index(hpart).unwrap())].clone()
        })
        .collect();
    ClassFunction::new(&data.n, values)
}

fn stated_values(data: &RemarkData, psi: &ClassFunction) -> bool {
    let cl = data.h.classes();
    let root = Cyc::from_int(1) + Cyc::root_of_unity(3, 1).scale(&crate::arith::rat(2, 1));
    (0..cl.len()).all(|c| {
        let v = &psi.values()[c];
        match cl.element_orders()[c] {
            1 => *v == Cyc::from_int(3),
            2 => *v == Cyc::from_int(-1),
            4 => *v == Cyc::from_int(1),
            3 => *v == root || *v == -&root,
            _ => true,
        }
    })
}

fn irreducibles_over(group: &Subgroup, under: &ClassFunction) -> Result<Vec<usize>, ShowcaseError> {
    let t = character_table(group)?;
    let mut out = Vec::new();
    for i in 0..t.len() {
        if t.degrees()[i] % 2 == 1 && t.irreducible(i).lies_over(under)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// Searches the candidates `alpha + beta` for those making
/// `chi_N = psi_N xi` a bijection between odd-degree characters over `phi`
/// and over `theta`.
pub fn recover_psi(data: &RemarkData, phi: usize) -> Result<PsiRecovery, ShowcaseError> {
    let gt = character_table(&data.g)?;
    let nt = character_table(&data.n)?;
    let ht = character_table(&data.h)?;
    let phi_chi = character_table(&data.k)?.irreducible(phi);
    let theta = character_table(&data.l)?.irreducible(data.theta);
    let upper = irreducibles_over(&data.g, &phi_chi)?;
    let lower = irreducibles_over(&data.n, &theta)?;
    let upper_n: Vec<ClassFunction> = upper
        .iter()
        .map(|&c| gt.irreducible(c).restrict(&data.n))
        .collect::<Result<_, _>>()?;

    let mut candidates = Vec::new();
    for alpha in ht.linear_characters() {
        for beta in (0..ht.len()).filter(|&b| ht.degrees()[b] == 2) {
            let psi = ht.irreducible(alpha).add(&ht.irreducible(beta))?;
            let psi_n = inflate_to_n(data, &psi);
            let mut pairs = Vec::new();
            for (ci, chi_n) in upper.iter().zip(&upper_n) {
                for &xi in &lower {
                    if psi_n.mul(&nt.irreducible(xi))? == *chi_n {
                        pairs.push((*ci, xi));
                    }
                }
            }
            let bijective = pairs.len() == upper.len()
                && upper.len() == lower.len()
                && upper
                    .iter()
                    .all(|c| pairs.iter().filter(|p| p.0 == *c).count() == 1)
                && lower
                    .iter()
                    .all(|x| pairs.iter().filter(|p| p.1 == *x).count() == 1);
            candidates.push(PsiCandidate {
                alpha,
                beta,
                matches_stated_values: stated_values(data, &psi),
                faithful: psi.kernel().is_trivial(),
                psi,
                pairs,
                viable: bijective,
            });
        }
    }
    Ok(PsiRecovery {
        phi,
        upper,
        lower,
        candidates,
    })
}

/// `<chi_N, xi>` for one matched pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InnerProductRow {
    pub chi: usize,
    pub xi: usize,
    pub xi_degree: u64,
    pub inner_product: i64,
    /// `<chi_N, chi_N>`
    pub norm: i64,
}

/// Computes `<chi_N, xi>` for every pair of `cand`, asserting it vanishes
/// whenever `xi` is linear.
pub fn verify_non_constituent(
    data: &RemarkData,
    cand: &PsiCandidate,
) -> Result<Vec<InnerProductRow>, ShowcaseError> {
    let gt = character_table(&data.g)?;
    let nt = character_table(&data.n)?;
    let mut rows = Vec::new();
    for &(chi, xi) in &cand.pairs {
        let chi_n = gt.irreducible(chi).restrict(&data.n)?;
        let ip = chi_n.multiplicity(&nt.irreducible(xi))?;
        let norm = chi_n.multiplicity(&chi_n)?;
        let xi_degree = nt.degrees()[xi];
        if xi_degree == 1 && ip != 0 {
            return Err(ShowcaseError::falsified(
                "a linear xi is not a constituent of chi_N",
                format!("chi = {chi}, xi = {xi}, <chi_N, xi> = {ip}"),
            ));
        }
        if norm < 1 {
            return Err(ShowcaseError::falsified(
                "<chi_N, chi_N> >= 1",
                format!("chi = {chi}"),
            ));
        }
        rows.push(InnerProductRow {
            chi,
            xi,
            xi_degree,
            inner_product: ip,
            norm,
        });
    }
    Ok(rows)
}

/// Number of `P`-invariant constituents of `theta^K` for the pinned `theta`.
pub fn glauberman_count(data: &RemarkData) -> Result<usize, ShowcaseError> {
    let theta = character_table(&data.l)?.irreducible(data.theta);
    Ok(check_glauberman_unique(&data.sylow, 2, &data.k, &theta)?.count)
}
