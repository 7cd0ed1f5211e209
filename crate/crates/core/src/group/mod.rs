//! Finite permutation groups at desk scale.
//!
//! A [`PermGroup`] is fully enumerated: every element gets a stable index in
//! breadth-first order from the generators. Subgroups are member sets of
//! those indices ([`Subgroup`]); every set-level operation (normalizers,
//! Sylow subgroups, residuals, coset fixed points) works directly on indices.

mod classes;
mod io;
mod ops;
mod perm;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

pub use classes::ConjClasses;
pub use io::{load_group, parse_group_description, GroupDescription};
pub use ops::*;
pub use perm::Perm;

use crate::chartab::TableData;

/// Default bound on the number of enumerated elements.
pub const DEFAULT_CAP: usize = 20_000;

/// Above this order no multiplication table is stored.
const MUL_TABLE_LIMIT: usize = 2_500;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("image list {0:?} is not a permutation")]
    NotBijective(Vec<u32>),
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group too large: more than {cap} elements")]
    TooLarge { cap: usize },
    #[error("set product of subgroups of orders {left} and {right} is not a subgroup")]
    NotClosed { left: usize, right: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed group description: {0}")]
    Parse(String),
}

struct GroupInner {
    name: String,
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverse: Vec<usize>,
    orders: Vec<u32>,
    mul_table: Option<Vec<u16>>,
    subgroups: Mutex<HashMap<Vec<usize>, Arc<SubgroupData>>>,
}

/// A fully enumerated permutation group. Cloning is cheap.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<GroupInner>,
}

impl PermGroup {
    /// Enumerates `<generators>` by breadth-first closure, failing once more
    /// than `cap` elements have been found.
    pub fn from_generators(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Perm>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        // parent[i] = (j, k) with elements[i] = elements[j] * generators[k]
        let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
        let mut head = 0;
        while head < elements.len() {
            for (k, g) in generators.iter().enumerate() {
                let y = elements[head].compose(g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(GroupError::TooLarge { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                    parent.push((head, k));
                }
            }
            head += 1;
        }
        let n = elements.len();
        let inverse: Vec<usize> = elements.iter().map(|x| index[&x.inverse()]).collect();

        let mul_table = (n <= MUL_TABLE_LIMIT).then(|| {
            // right[i][k] = elements[i] * generators[k]
            let right: Vec<Vec<usize>> = elements
                .iter()
                .map(|x| generators.iter().map(|g| index[&x.compose(g)]).collect())
                .collect();
            let mut table = vec![0u16; n * n];
            for a in 0..n {
                table[a * n] = a as u16;
                for b in 1..n {
                    let (pb, k) = parent[b];
                    let ap = table[a * n + pb] as usize;
                    table[a * n + b] = right[ap][k] as u16;
                }
            }
            table
        });

        let mut inner = GroupInner {
            name: name.into(),
            degree,
            generators,
            elements,
            index,
            inverse,
            orders: Vec::new(),
            mul_table,
            subgroups: Mutex::new(HashMap::new()),
        };
        inner.orders = (0..n).map(|i| element_order(&inner, i)).collect();
        Ok(PermGroup {
            inner: Arc::new(inner),
        })
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.inner.generators
    }

    pub fn order(&self) -> usize {
        self.inner.elements.len()
    }

    /// Elements in canonical (breadth-first) order; index 0 is the identity.
    pub fn elements(&self) -> &[Perm] {
        &self.inner.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.inner.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.inner.index.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        mul_inner(&self.inner, a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inner.inverse[a]
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x^-1 y^-1 x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: usize, e: u64) -> usize {
        let ord = self.element_order(x) as u64;
        let mut r = 0;
        for _ in 0..(e % ord) {
            r = self.mul(r, x);
        }
        r
    }

    pub fn element_order(&self, x: usize) -> u32 {
        self.inner.orders[x]
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        use num_integer::Integer;
        self.inner
            .orders
            .iter()
            .fold(1u64, |acc, &o| acc.lcm(&(o as u64)))
    }

    /// Indices of the generators as elements.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.inner
            .generators
            .iter()
            .map(|g| self.inner.index[g])
            .filter(|&i| i != 0)
            .collect()
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(&self) -> Subgroup {
        self.subgroup_from_members((0..self.order()).collect())
    }

    pub fn trivial(&self) -> Subgroup {
        self.subgroup_from_members(vec![0])
    }

    /// Interns a subgroup given by a set of element indices that is already
    /// known to be closed. Use [`closure`] when it is not.
    pub fn subgroup_from_members(&self, mut members: Vec<usize>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        debug_assert!(members.first() == Some(&0));
        let mut cache = self.inner.subgroups.lock().unwrap();
        if let Some(data) = cache.get(&members) {
            return Subgroup {
                group: self.clone(),
                data: data.clone(),
            };
        }
        let data = Arc::new(SubgroupData::new(self, members.clone()));
        cache.insert(members, data.clone());
        Subgroup {
            group: self.clone(),
            data,
        }
    }

    pub fn same_as(&self, other: &PermGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }
}

fn mul_inner(inner: &GroupInner, a: usize, b: usize) -> usize {
    match &inner.mul_table {
        Some(t) => t[a * inner.elements.len() + b] as usize,
        None => inner.index[&inner.elements[a].compose(&inner.elements[b])],
    }
}

fn element_order(inner: &GroupInner, x: usize) -> u32 {
    let mut y = x;
    let mut k = 1;
    while y != 0 {
        y = mul_inner(inner, y, x);
        k += 1;
    }
    k
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup({}, degree {}, order {})",
            self.name(),
            self.degree(),
            self.order()
        )
    }
}

pub(crate) struct SubgroupData {
    members: Vec<usize>,
    mask: Vec<u64>,
    generators: Vec<usize>,
    classes: OnceLock<ConjClasses>,
    pub(crate) table: OnceLock<Arc<TableData>>,
}

impl SubgroupData {
    fn new(group: &PermGroup, members: Vec<usize>) -> Self {
        let n = group.order();
        let mut mask = vec![0u64; n.div_ceil(64)];
        for &m in &members {
            mask[m / 64] |= 1 << (m % 64);
        }
        // Greedy generating set: walk members in order, keep those not yet
        // in the closure of the ones kept so far.
        let mut generators = Vec::new();
        let mut span = vec![false; n];
        span[0] = true;
        let mut span_list = vec![0usize];
        for &m in &members {
            if span[m] {
                continue;
            }
            generators.push(m);
            // extend the closure in place
            let mut head = 0;
            span_list.clear();
            span_list.extend((0..n).filter(|&i| span[i]));
            while head < span_list.len() {
                let x = span_list[head];
                for &g in &generators {
                    let y = group.mul(x, g);
                    if !span[y] {
                        span[y] = true;
                        span_list.push(y);
                    }
                }
                head += 1;
            }
        }
        debug_assert_eq!(span_list.len().max(1), members.len());
        SubgroupData {
            members,
            mask,
            generators,
            classes: OnceLock::new(),
            table: OnceLock::new(),
        }
    }
}

/// A subgroup of an enumerated [`PermGroup`], given by its member indices.
/// Its own element order is ascending parent index. Cloning is cheap.
#[derive(Clone)]
pub struct Subgroup {
    group: PermGroup,
    data: Arc<SubgroupData>,
}

impl Subgroup {
    /// The enumerated group containing this subgroup.
    pub fn parent(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.data.members.len()
    }

    /// Parent indices of the members, ascending.
    pub fn members(&self) -> &[usize] {
        &self.data.members
    }

    /// Member indices of a small generating set.
    pub fn generators(&self) -> &[usize] {
        &self.data.generators
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.data.mask[x / 64] >> (x % 64) & 1 == 1
    }

    /// Position of a parent element within this subgroup's element order.
    #[inline]
    pub fn local_index(&self, x: usize) -> Option<usize> {
        self.data.members.binary_search(&x).ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.group.same_as(&other.group) && self.members().iter().all(|&x| other.contains(x))
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Conjugacy classes of this subgroup (computed once).
    pub fn classes(&self) -> &ConjClasses {
        self.data.classes.get_or_init(|| ConjClasses::compute(self))
    }

    pub(crate) fn data(&self) -> &SubgroupData {
        &self.data
    }

    /// Materializes the subgroup as a standalone permutation group.
    pub fn to_perm_group(&self, name: impl Into<String>) -> PermGroup {
        let gens = self
            .generators()
            .iter()
            .map(|&g| self.group.element(g).clone())
            .collect();
        PermGroup::from_generators(name, self.group.degree(), gens, usize::MAX)
            .expect("subgroup of an enumerated group")
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.data.members == other.data.members
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subgroup(order {} of {})",
            self.order(),
            self.group.name()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn s4() -> PermGroup {
        let a = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        PermGroup::from_generators("S4", 4, vec![a, b], DEFAULT_CAP).unwrap()
    }

    #[test]
    fn enumeration_orders() {
        let r = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let s = Perm::from_cycles(4, &[&[0, 2]]).unwrap();
        let d8 = PermGroup::from_generators("D8", 4, vec![r, s], DEFAULT_CAP).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(s4().order(), 24);
        assert!(s4().element(0).is_identity());
    }

    #[test]
    fn cap_is_enforced() {
        let a = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        assert_eq!(
            PermGroup::from_generators("S4", 4, vec![a, b], 23).unwrap_err(),
            GroupError::TooLarge { cap: 23 }
        );
    }

    #[test]
    fn multiplication_matches_composition() {
        let g = s4();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let p = g.element(a).compose(g.element(b));
                assert_eq!(g.mul(a, b), g.index_of(&p).unwrap());
            }
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
    }

    #[test]
    fn deterministic_enumeration() {
        let a = s4();
        let b = s4();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn exponent_and_orders() {
        let g = s4();
        assert_eq!(g.exponent(), 12);
        let mut counts = [0usize; 5];
        for x in 0..g.order() {
            counts[g.element_order(x) as usize] += 1;
        }
        assert_eq!(counts, [0, 1, 9, 8, 6]);
    }
}
