//! The order-648 example outside the coincidence hypotheses, and the
//! shipped corpus of verification targets.

mod corpus;
mod remark;

use std::fmt::Write as _;

use serde::Serialize;

use crate::chartab::{character_table, class_names, CharTableError};
use crate::group::GroupError;
use crate::mckay::McKayError;

pub use corpus::*;
pub use remark::*;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShowcaseError {
    #[error("construction invariant failed: {0}")]
    Invariant(String),
    #[error("claim falsified: {claim}\n{forensics}")]
    Falsification { claim: String, forensics: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    CharTable(#[from] CharTableError),
    #[error(transparent)]
    McKay(#[from] McKayError),
}

impl ShowcaseError {
    fn falsified(claim: &str, forensics: String) -> Self {
        ShowcaseError::Falsification {
            claim: claim.to_string(),
            forensics,
        }
    }

    pub fn is_falsification(&self) -> bool {
        match self {
            ShowcaseError::Falsification { .. } | ShowcaseError::Invariant(_) => true,
            ShowcaseError::McKay(e) => e.is_falsification(),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupOrders {
    pub g: usize,
    pub k: usize,
    pub l: usize,
    pub h: usize,
    pub p: usize,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateRecord {
    pub alpha: usize,
    pub beta: usize,
    pub values: Vec<String>,
    pub viable: bool,
    pub matches_stated_values: bool,
    pub faithful: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsiValue {
    pub class: String,
    pub order: u32,
    pub value: String,
}

/// Everything the showcase verifies, in serializable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemarkReport {
    pub orders: SubgroupOrders,
    pub theta: usize,
    pub phi: usize,
    pub phi_degree: u64,
    pub ramification_index: u64,
    pub conjugate_ramification_index: u64,
    pub trivial_theta_constituents: usize,
    pub invariant_constituents: usize,
    pub upper: Vec<usize>,
    pub lower: Vec<usize>,
    pub candidates: Vec<CandidateRecord>,
    pub chosen: CandidateRecord,
    pub psi: Vec<PsiValue>,
    pub pairs: Vec<InnerProductRow>,
}

/// Builds the group and checks every claim about it, failing on the first
/// one that does not hold.
pub fn run_remark(cap: usize) -> Result<RemarkReport, ShowcaseError> {
    let data = build_remark_group(cap)?;
    let (phi, e) = verify_fully_ramified(&data)?;
    let ltab = character_table(&data.l)?;
    let conj_e = match ramification(&data, &ltab.irreducible(data.theta).conj())? {
        Ramification::FullyRamified { e, .. } => e,
        Ramification::NotFullyRamified { constituents } => {
            return Err(ShowcaseError::falsified(
                "the conjugate of theta is fully ramified",
                format!("{constituents:?}"),
            ))
        }
    };
    let trivial = match ramification(&data, &ltab.irreducible(0))? {
        Ramification::NotFullyRamified { constituents } => constituents.len(),
        Ramification::FullyRamified { .. } => {
            return Err(ShowcaseError::falsified(
                "the trivial character of L is not fully ramified",
                String::new(),
            ))
        }
    };
    let invariant = glauberman_count(&data)?;
    let recovery = recover_psi(&data, phi)?;
    let chosen = recovery
        .chosen()
        .ok_or_else(|| {
            ShowcaseError::falsified(
                "some candidate psi is viable with the stated values",
                format!(
                    "viable: {:?}",
                    recovery
                        .candidates
                        .iter()
                        .map(|c| (c.alpha, c.beta, c.viable, c.matches_stated_values))
                        .collect::<Vec<_>>()
                ),
            )
        })?
        .clone();
    let pairs = verify_non_constituent(&data, &chosen)?;

    let record = |c: &PsiCandidate| CandidateRecord {
        alpha: c.alpha,
        beta: c.beta,
        values: c.psi.values().iter().map(ToString::to_string).collect(),
        viable: c.viable,
        matches_stated_values: c.matches_stated_values,
        faithful: c.faithful,
    };
    let htab = character_table(&data.h)?;
    let names = class_names(&htab);
    let hcl = data.h.classes();
    let psi = (0..hcl.len())
        .map(|c| PsiValue {
            class: names[c].clone(),
            order: hcl.element_orders()[c],
            value: chosen.psi.values()[c].to_string(),
        })
        .collect();
    Ok(RemarkReport {
        orders: SubgroupOrders {
            g: data.g.order(),
            k: data.k.order(),
            l: data.l.order(),
            h: data.h.order(),
            p: data.sylow.order(),
            n: data.n.order(),
        },
        theta: data.theta,
        phi,
        phi_degree: character_table(&data.k)?.degrees()[phi],
        ramification_index: e,
        conjugate_ramification_index: conj_e,
        trivial_theta_constituents: trivial,
        invariant_constituents: invariant,
        upper: recovery.upper.clone(),
        lower: recovery.lower.clone(),
        candidates: recovery.candidates.iter().map(record).collect(),
        chosen: record(&chosen),
        psi,
        pairs,
    })
}

impl RemarkReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report is serializable")
    }

    pub fn render_text(&self) -> String {
        let o = &self.orders;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "|G| = {}, |K| = {}, |L| = {}, |H| = {}, |P| = {}, |N_G(P)| = {}",
            o.g, o.k, o.l, o.h, o.p, o.n
        );
        let _ = writeln!(
            s,
            "theta = L.{} induces to {} x phi (phi = K.{}, degree {}); conjugate index {}",
            self.theta + 1,
            self.ramification_index,
            self.phi + 1,
            self.phi_degree,
            self.conjugate_ramification_index
        );
        let _ = writeln!(
            s,
            "trivial theta: {} distinct constituents; P-invariant constituents of theta^K: {}",
            self.trivial_theta_constituents, self.invariant_constituents
        );
        let viable = self.candidates.iter().filter(|c| c.viable).count();
        let _ = writeln!(
            s,
            "psi candidates: {} searched, {} viable; chosen H.{} + H.{}",
            self.candidates.len(),
            viable,
            self.chosen.alpha + 1,
            self.chosen.beta + 1
        );
        for c in &self.candidates {
            let _ = writeln!(
                s,
                "  H.{} + H.{}: viable {}, stated values {}, faithful {}",
                c.alpha + 1,
                c.beta + 1,
                c.viable,
                c.matches_stated_values,
                c.faithful
            );
        }
        let _ = writeln!(s, "psi on H:");
        for v in &self.psi {
            let _ = writeln!(s, "  {:>4} (order {}): {}", v.class, v.order, v.value);
        }
        let _ = writeln!(s, "pairs (chi in G, xi in N_G(P)):");
        for r in &self.pairs {
            let _ = writeln!(
                s,
                "  X.{} <-> Y.{} (degree {}): <chi_N, xi> = {}, <chi_N, chi_N> = {}",
                r.chi + 1,
                r.xi + 1,
                r.xi_degree,
                r.inner_product,
                r.norm
            );
        }
        s
    }
}
