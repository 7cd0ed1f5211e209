//! The two McKay bijections for groups with a self-normalizing Sylow
//! subgroup, and the checks that tie them together.
//!
//! - [`navarro_star`] sends `chi` in `Irr_p'(G)` to the unique linear
//!   constituent of its restriction to `P`.
//! - [`isaacs_descent`] walks down `G > PL > ...` with `K = O^p(G)`,
//!   `L = K'`, keeping at each step the unique constituent over the unique
//!   `P`-invariant character of `L`, until it reaches `P`.
//!
//! Every "unique" in these procedures is asserted. A failed assertion is a
//! [`McKayError::Falsification`], never silently resolved.

mod lemmas;
mod report;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{is_prime, Cyc};
use crate::chartab::{character_table, orbit_and_stabilizer, CharTableError, ClassFunction};
use crate::group::{
    derived_subgroup, fixed_points_on_cosets, intersection, is_normal, is_p_group, is_p_solvable,
    is_solvable, normalizer, normalizes, o_p_residual, product_subgroup, sylow, GroupError,
    Subgroup,
};

pub use lemmas::*;
pub use report::*;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum McKayError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("claim falsified: {claim}\n{forensics}")]
    Falsification { claim: String, forensics: String },
    #[error(transparent)]
    CharTable(#[from] CharTableError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

impl McKayError {
    pub fn is_falsification(&self) -> bool {
        matches!(self, McKayError::Falsification { .. })
    }
}

fn falsified(claim: impl Into<String>, forensics: impl Into<String>) -> McKayError {
    McKayError::Falsification {
        claim: claim.into(),
        forensics: forensics.into(),
    }
}

/// A group, a prime and a chosen Sylow subgroup, with the hypothesis flags
/// computed from scratch.
#[derive(Clone, Debug)]
pub struct McKayInstance {
    pub group: Subgroup,
    pub p: u64,
    pub sylow: Subgroup,
    pub normalizer: Subgroup,
    pub solvable: bool,
    pub p_solvable: bool,
    /// `N_G(P) = P`
    pub self_normalizing: bool,
    /// `p = 2` or `|G|` odd
    pub parity: bool,
}

/// Builds the instance for the canonical Sylow `p`-subgroup.
pub fn check_hypotheses(g: &Subgroup, p: u64) -> Result<McKayInstance, McKayError> {
    if !is_prime(p) {
        return Err(McKayError::NotPrime(p));
    }
    McKayInstance::with_sylow(g, p, &sylow(g, p))
}

impl McKayInstance {
    /// Builds the instance for a given Sylow subgroup, which is validated.
    pub fn with_sylow(g: &Subgroup, p: u64, pp: &Subgroup) -> Result<Self, McKayError> {
        if !is_prime(p) {
            return Err(McKayError::NotPrime(p));
        }
        let full = crate::arith::p_part(g.order() as u64, p) as usize;
        if !pp.is_subgroup_of(g) || pp.order() != full || !is_p_group(pp, p) {
            return Err(McKayError::Precondition(format!(
                "subgroup of order {} is not a Sylow {p}-subgroup",
                pp.order()
            )));
        }
        let norm = normalizer(g, pp);
        let solvable = is_solvable(g);
        Ok(McKayInstance {
            group: g.clone(),
            p,
            sylow: pp.clone(),
            self_normalizing: norm == *pp,
            normalizer: norm,
            solvable,
            p_solvable: solvable || is_p_solvable(g, p),
            parity: p == 2 || g.order() % 2 == 1,
        })
    }

    /// Flags required by the restriction map (p-solvable, self-normalizing).
    pub fn require_star(&self) -> Result<(), McKayError> {
        if !self.p_solvable {
            return Err(McKayError::Hypothesis("group is not p-solvable".into()));
        }
        if !self.self_normalizing {
            return Err(McKayError::Hypothesis(format!(
                "self-normalizing hypothesis fails: |N_G(P)| = {} > |P| = {}",
                self.normalizer.order(),
                self.sylow.order()
            )));
        }
        Ok(())
    }

    /// Flags required by the descent (adds solvability and parity).
    pub fn require_descent(&self) -> Result<(), McKayError> {
        if !self.solvable {
            return Err(McKayError::Hypothesis("group is not solvable".into()));
        }
        self.require_star()?;
        if !self.parity {
            return Err(McKayError::Hypothesis(
                "parity hypothesis fails: p is odd and |G| is even".into(),
            ));
        }
        Ok(())
    }

    fn require_p_prime(&self, chi: usize) -> Result<ClassFunction, McKayError> {
        let table = character_table(&self.group)?;
        if chi >= table.len() {
            return Err(McKayError::Precondition(format!("no irreducible {chi}")));
        }
        if table.degrees()[chi] % self.p == 0 {
            return Err(McKayError::Precondition(format!(
                "irreducible {chi} has degree {} divisible by {}",
                table.degrees()[chi],
                self.p
            )));
        }
        Ok(table.irreducible(chi))
    }
}

/// Result of the restriction map for one character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarImage {
    /// index of the linear constituent in the table of `P`
    pub star: usize,
    /// remaining constituents `(index, multiplicity)` of the restriction
    pub delta: Vec<(usize, u64)>,
}

/// The unique linear constituent of `chi_P`. Also asserts that every other
/// constituent has degree divisible by `p`.
pub fn navarro_star(inst: &McKayInstance, chi: usize) -> Result<StarImage, McKayError> {
    inst.require_star()?;
    let x = inst.require_p_prime(chi)?;
    let ptab = character_table(&inst.sylow)?;
    let cons = x.restrict(&inst.sylow)?.constituents()?;
    let linear: Vec<&(usize, u64)> = cons
        .iter()
        .filter(|(i, _)| ptab.degrees()[*i] == 1)
        .collect();
    let forensics = || format!("chi = {chi} ({x:?}); constituents on P: {cons:?}");
    if linear.len() != 1 || linear[0].1 != 1 {
        return Err(falsified(
            "restriction to P has exactly one linear constituent, of multiplicity one",
            forensics(),
        ));
    }
    let star = linear[0].0;
    let delta: Vec<(usize, u64)> = cons.iter().copied().filter(|&(i, _)| i != star).collect();
    if delta.iter().any(|&(i, _)| ptab.degrees()[i] % inst.p != 0) {
        return Err(falsified(
            "every other constituent of the restriction has degree divisible by p",
            forensics(),
        ));
    }
    Ok(StarImage { star, delta })
}

/// One level of the descent.
#[derive(Debug, Clone)]
pub struct DescentStep {
    pub group: Subgroup,
    /// `O^p` of the current group
    pub k: Subgroup,
    /// derived subgroup of `k`
    pub l: Subgroup,
    /// `P L`
    pub h: Subgroup,
    /// current character, index in the current group's table
    pub chi: usize,
    /// the `P`-invariant constituent, index in `l`'s table
    pub theta: usize,
    /// successor, index in `h`'s table
    pub eta: usize,
    pub eta_degree: u64,
    /// `|C_{K_theta/L}(P)|`
    pub fixed_points: usize,
}

#[derive(Debug, Clone, Default)]
pub struct DescentTrace {
    pub steps: Vec<DescentStep>,
}

impl DescentTrace {
    pub fn summary(&self) -> Vec<DescentStepSummary> {
        self.steps
            .iter()
            .map(|s| DescentStepSummary {
                group_order: s.group.order(),
                k_order: s.k.order(),
                l_order: s.l.order(),
                h_order: s.h.order(),
                chi: s.chi,
                theta: s.theta,
                eta: s.eta,
                eta_degree: s.eta_degree,
                fixed_points: s.fixed_points,
            })
            .collect()
    }
}

/// Serializable view of a [`DescentStep`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescentStepSummary {
    pub group_order: usize,
    pub k_order: usize,
    pub l_order: usize,
    pub h_order: usize,
    pub chi: usize,
    pub theta: usize,
    pub eta: usize,
    pub eta_degree: u64,
    pub fixed_points: usize,
}

/// Descends from `chi` to a linear character of `P`, returning its index
/// in the table of `P` and the trace.
pub fn isaacs_descent(
    inst: &McKayInstance,
    chi: usize,
) -> Result<(usize, DescentTrace), McKayError> {
    inst.require_descent()?;
    inst.require_p_prime(chi)?;
    let p = inst.p;
    let pp = &inst.sylow;
    let mut trace = DescentTrace::default();
    let mut cur = inst.group.clone();
    let mut cur_chi = chi;
    let dump = |trace: &DescentTrace| format!("chi = {chi}; trace so far: {:?}", trace.summary());

    while cur != *pp {
        let table = character_table(&cur)?;
        let x = table.irreducible(cur_chi);
        let k = o_p_residual(&cur, p);
        let l = derived_subgroup(&k);
        let h = product_subgroup(pp, &l)?;

        if !(l.order() < k.order() && k.order() < cur.order()) {
            return Err(falsified("L < K < G", dump(&trace)));
        }
        let kp = intersection(&k, pp).order();
        if k.order() * pp.order() / kp != cur.order() {
            return Err(falsified("G = K P", dump(&trace)));
        }
        if ((k.order() / l.order()) as u64).is_multiple_of(p) {
            return Err(falsified("K/L has order coprime to p", dump(&trace)));
        }

        let ltab = character_table(&l)?;
        let restricted = x.restrict(&l)?;
        let mut invariant = Vec::new();
        for (i, _) in restricted.constituents()? {
            if ltab.irreducible(i).invariant_under(pp.generators())? {
                invariant.push(i);
            }
        }
        if invariant.len() != 1 {
            return Err(falsified(
                format!(
                    "restriction to L has a unique P-invariant constituent (found {:?})",
                    invariant
                ),
                dump(&trace),
            ));
        }
        let theta_idx = invariant[0];
        let theta = ltab.irreducible(theta_idx);

        let (_, k_theta) = orbit_and_stabilizer(&k, &theta)?;
        let fixed_points = fixed_points_on_cosets(pp, &k_theta, &l)?;
        if fixed_points != 1 {
            return Err(falsified(
                format!(
                    "P acts fixed-point-freely on K_theta/L (found {fixed_points} fixed cosets)"
                ),
                dump(&trace),
            ));
        }

        let htab = character_table(&h)?;
        let mut over = Vec::new();
        for (i, m) in x.restrict(&h)?.constituents()? {
            if htab.irreducible(i).lies_over(&theta)? {
                over.push((i, m));
            }
        }
        if over.len() != 1 || over[0].1 != 1 {
            return Err(falsified(
                format!(
                    "restriction to PL has a unique constituent over theta, of multiplicity one (found {:?})",
                    over
                ),
                dump(&trace),
            ));
        }
        let eta = over[0].0;
        let eta_degree = htab.degrees()[eta];
        if eta_degree % p == 0 {
            return Err(falsified("the successor has p'-degree", dump(&trace)));
        }
        trace.steps.push(DescentStep {
            group: cur.clone(),
            k,
            l,
            h: h.clone(),
            chi: cur_chi,
            theta: theta_idx,
            eta,
            eta_degree,
            fixed_points,
        });
        cur = h;
        cur_chi = eta;
    }
    let ptab = character_table(pp)?;
    if ptab.degrees()[cur_chi] != 1 {
        return Err(falsified(
            "the descent ends in a linear character",
            dump(&trace),
        ));
    }
    Ok((cur_chi, trace))
}

/// Finds an irreducible of the inertia group `G_theta` restricting to
/// `theta` on `N`; returns its index in the table of `G_theta` together
/// with `G_theta`.
pub fn check_extension(
    inst: &McKayInstance,
    n: &Subgroup,
    chi: usize,
    theta: &ClassFunction,
) -> Result<(usize, Subgroup), McKayError> {
    inst.require_star()?;
    let x = inst.require_p_prime(chi)?;
    if !is_normal(&inst.group, n) || theta.group() != n {
        return Err(McKayError::Precondition(
            "theta must live on a normal subgroup".into(),
        ));
    }
    if !x.lies_over(theta)? {
        return Err(McKayError::Precondition(
            "theta does not lie under chi".into(),
        ));
    }
    if !theta.invariant_under(inst.sylow.generators())? {
        return Err(McKayError::Precondition("theta is not P-invariant".into()));
    }
    let (_, stab) = orbit_and_stabilizer(&inst.group, theta)?;
    let stab_table = character_table(&stab)?;
    let deg = theta.degree() as u64;
    for i in 0..stab_table.len() {
        if stab_table.degrees()[i] == deg && stab_table.irreducible(i).restrict(n)? == *theta {
            return Ok((i, stab));
        }
    }
    Err(falsified(
        "theta extends to its inertia group",
        format!(
            "chi = {chi}; theta = {theta:?} on N of order {}; G_theta of order {}",
            n.order(),
            stab.order()
        ),
    ))
}

/// Outcome of the coprime-action uniqueness check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GlaubermanCount {
    /// number of `P`-invariant irreducible constituents of `theta^K`
    pub count: usize,
    /// `|C_{K/N}(P)|`
    pub fixed_points: usize,
}

/// Counts the `P`-invariant constituents of `theta^K`, asserting there is
/// at least one and that there is exactly one when `P` fixes no nontrivial
/// coset of `N` in `K`.
pub fn check_glauberman_unique(
    pp: &Subgroup,
    p: u64,
    k: &Subgroup,
    theta: &ClassFunction,
) -> Result<GlaubermanCount, McKayError> {
    let n = theta.group();
    if !is_normal(k, n) {
        return Err(McKayError::Precondition("N is not normal in K".into()));
    }
    if !normalizes(pp.generators(), k) || !normalizes(pp.generators(), n) {
        return Err(McKayError::Precondition(
            "P does not stabilize N and K".into(),
        ));
    }
    if !is_p_group(pp, p) {
        return Err(McKayError::Precondition("P is not a p-group".into()));
    }
    if ((k.order() / n.order()) as u64).is_multiple_of(p) {
        return Err(McKayError::Precondition("K/N is not a p'-group".into()));
    }
    if !theta.invariant_under(pp.generators())? {
        return Err(McKayError::Precondition("theta is not P-invariant".into()));
    }
    let fixed_points = fixed_points_on_cosets(pp, k, n)?;
    let ktab = character_table(k)?;
    let mut count = 0;
    for (i, _) in theta.induce(k)?.constituents()? {
        if ktab.irreducible(i).invariant_under(pp.generators())? {
            count += 1;
        }
    }
    let forensics = || {
        format!(
            "|K| = {}, |N| = {}, |P| = {}, theta = {theta:?}, count = {count}, fixed points = {fixed_points}",
            k.order(),
            n.order(),
            pp.order()
        )
    };
    if count == 0 {
        return Err(falsified(
            "theta^K has a P-invariant constituent",
            forensics(),
        ));
    }
    if fixed_points == 1 && count != 1 {
        return Err(falsified(
            "the P-invariant constituent is unique when C_{K/N}(P) = 1",
            forensics(),
        ));
    }
    Ok(GlaubermanCount {
        count,
        fixed_points,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct McKayCount {
    pub group: usize,
    pub normalizer: usize,
    pub equal: bool,
}

/// `|Irr_p'(G)|` against `|Irr_p'(N_G(P))|`.
pub fn mckay_count(inst: &McKayInstance) -> Result<McKayCount, McKayError> {
    let a = character_table(&inst.group)?
        .p_prime_irreducibles(inst.p)
        .len();
    let b = character_table(&inst.normalizer)?
        .p_prime_irreducibles(inst.p)
        .len();
    Ok(McKayCount {
        group: a,
        normalizer: b,
        equal: a == b,
    })
}

/// Execution options for [`verify_main`].
#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    pub parallel: bool,
}

fn verify_one(inst: &McKayInstance, chi: usize) -> Result<PairRecord, McKayError> {
    let degree = character_table(&inst.group)?.degrees()[chi];
    let star = navarro_star(inst, chi);
    let descent = isaacs_descent(inst, chi);
    let mut failure = Vec::new();
    let star_idx = match &star {
        Ok(s) => Some(s.star),
        Err(e) if e.is_falsification() => {
            failure.push(e.to_string());
            None
        }
        Err(e) => return Err(e.clone()),
    };
    let (xi, trace) = match descent {
        Ok((xi, t)) => (Some(xi), t.summary()),
        Err(e) if e.is_falsification() => {
            failure.push(e.to_string());
            (None, Vec::new())
        }
        Err(e) => return Err(e),
    };
    let restriction_multiplicity = match xi {
        Some(xi) => {
            let ptab = character_table(&inst.sylow)?;
            let x = character_table(&inst.group)?.irreducible(chi);
            Some(
                x.restrict(&inst.sylow)?
                    .multiplicity(&ptab.irreducible(xi))?,
            )
        }
        None => None,
    };
    Ok(PairRecord {
        chi,
        degree,
        star: star_idx,
        descent: xi,
        coincide: star_idx.is_some() && star_idx == xi,
        restriction_multiplicity,
        trace,
        failure: (!failure.is_empty()).then(|| failure.join("\n")),
    })
}

/// Runs both maps on every `p'`-degree irreducible and compares them.
pub fn verify_main(
    inst: &McKayInstance,
    opts: VerifyOptions,
) -> Result<CorrespondenceReport, McKayError> {
    inst.require_descent()?;
    let table = character_table(&inst.group)?;
    let ptab = character_table(&inst.sylow)?;
    let chars = table.p_prime_irreducibles(inst.p);
    let pairs: Vec<PairRecord> = if opts.parallel {
        chars
            .par_iter()
            .map(|&c| verify_one(inst, c))
            .collect::<Result<_, _>>()?
    } else {
        chars
            .iter()
            .map(|&c| verify_one(inst, c))
            .collect::<Result<_, _>>()?
    };
    let linear = ptab.linear_characters();
    let is_bijection = |f: &dyn Fn(&PairRecord) -> Option<usize>| {
        let mut img: Vec<usize> = pairs.iter().filter_map(f).collect();
        if img.len() != pairs.len() {
            return false;
        }
        img.sort_unstable();
        img.dedup();
        img == linear
    };
    let star_bijective = is_bijection(&|r| r.star);
    let descent_bijective = is_bijection(&|r| r.descent);
    let count = mckay_count(inst)?;
    let verdict =
        pairs.iter().all(|r| r.coincide) && count.equal && star_bijective && descent_bijective;
    Ok(CorrespondenceReport {
        instance: InstanceRecord::from_instance(inst),
        pairs,
        count,
        star_bijective,
        descent_bijective,
        verdict,
    })
}

/// Galois equivariance of the star map: for every `k` coprime to the
/// exponent of `G`, the image of `chi^k` is the `k`-th conjugate of the
/// image of `chi`. Returns the number of `(k, chi)` pairs checked.
pub fn check_galois_equivariance(inst: &McKayInstance) -> Result<usize, McKayError> {
    inst.require_star()?;
    let table = character_table(&inst.group)?;
    let ptab = character_table(&inst.sylow)?;
    let e = inst
        .group
        .classes()
        .element_orders()
        .iter()
        .fold(1u64, |acc, &o| num_integer::lcm(acc, o as u64));
    let mut checked = 0;
    for k in 1..=e {
        if num_integer::gcd(k, e) != 1 {
            continue;
        }
        for chi in table.p_prime_irreducibles(inst.p) {
            let conj = table.irreducible(chi).galois(k as i64);
            let chi_k = table.index_of(&conj).ok_or_else(|| {
                falsified(
                    "Galois conjugates of irreducibles are irreducible",
                    format!("k = {k}, chi = {chi}"),
                )
            })?;
            let star = navarro_star(inst, chi)?.star;
            let star_k = navarro_star(inst, chi_k)?.star;
            let image_k = ptab.irreducible(star).galois(k as i64);
            if ptab.index_of(&image_k) != Some(star_k) {
                return Err(falsified(
                    "(chi^k)* = (chi*)^k",
                    format!(
                        "k = {k}, chi = {chi}, chi^k = {chi_k}, chi* = {star}, (chi^k)* = {star_k}"
                    ),
                ));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// The descent character at the end must also be a constituent of the
/// restriction; exposed for direct inspection.
pub fn restriction_multiplicity(
    inst: &McKayInstance,
    chi: usize,
    xi: usize,
) -> Result<Cyc, McKayError> {
    let x = character_table(&inst.group)?.irreducible(chi);
    let lin = character_table(&inst.sylow)?.irreducible(xi);
    Ok(x.restrict(&inst.sylow)?.inner_product(&lin)?)
}

#[cfg(test)]
mod tests;
