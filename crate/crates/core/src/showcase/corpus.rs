use serde::Serialize;

use crate::group::{load_group, parse_group_description, GroupError, PermGroup};

/// How an instance is expected to behave under the verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    /// satisfies every hypothesis of the coincidence check
    Positive,
    /// fails a hypothesis on purpose; only counts are compared
    NegativeControl,
    /// the order-648 example, outside the hypotheses
    Showcase,
}

#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    /// file stem under `corpus/`
    pub key: &'static str,
    pub p: u64,
    pub kind: InstanceKind,
}

impl CorpusEntry {
    pub fn text(&self) -> &'static str {
        builtin_text(self.key).expect("corpus entries are embedded")
    }

    pub fn load(&self, cap: usize) -> Result<PermGroup, GroupError> {
        load_group(&parse_group_description(self.text())?, cap)
    }
}

const FILES: &[(&str, &str)] = &[
    ("c13c3", include_str!("../../../../corpus/c13c3.toml")),
    ("c25c3", include_str!("../../../../corpus/c25c3.toml")),
    ("c7", include_str!("../../../../corpus/c7.toml")),
    ("d8", include_str!("../../../../corpus/d8.toml")),
    ("dic12", include_str!("../../../../corpus/dic12.toml")),
    ("f21", include_str!("../../../../corpus/f21.toml")),
    ("gl23", include_str!("../../../../corpus/gl23.toml")),
    (
        "remark648",
        include_str!("../../../../corpus/remark648.toml"),
    ),
    ("s3", include_str!("../../../../corpus/s3.toml")),
    ("s3xs3", include_str!("../../../../corpus/s3xs3.toml")),
    ("s4", include_str!("../../../../corpus/s4.toml")),
    ("sl23", include_str!("../../../../corpus/sl23.toml")),
];

/// Contents of a shipped group file, by stem.
pub fn builtin_text(key: &str) -> Option<&'static str> {
    FILES.iter().find(|(k, _)| *k == key).map(|(_, t)| *t)
}

pub fn builtin_keys() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(k, _)| *k)
}

/// The verification targets, in a fixed order.
pub fn corpus() -> Vec<CorpusEntry> {
    use InstanceKind::*;
    let e = |key, p, kind| CorpusEntry { key, p, kind };
    vec![
        e("s3", 2, Positive),
        e("s4", 2, Positive),
        e("d8", 2, Positive),
        e("f21", 3, Positive),
        e("c13c3", 3, Positive),
        e("c25c3", 3, Positive),
        e("s3xs3", 2, Positive),
        e("dic12", 2, Positive),
        e("gl23", 2, Positive),
        e("c7", 7, Positive),
        e("sl23", 3, NegativeControl),
        e("f21", 7, NegativeControl),
        e("remark648", 2, Showcase),
    ]
}
