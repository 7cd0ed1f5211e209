//! Exact character tables and class-function arithmetic.
//!
//! Tables are computed once per subgroup and cached on it. A
//! [`ClassFunction`] carries its group, so restriction, induction and inner
//! products check that their arguments live where they should.

mod dixon;
mod export;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{Cyc, Rat};
use crate::group::{is_normal, normalizes, PermGroup, Subgroup};

pub use export::{class_names, render_table_text, table_record};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharTableError {
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("subgroup of order {sub} is not contained in the group of order {parent}")]
    NotSubgroup { sub: usize, parent: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element does not normalize the subgroup")]
    NotNormalizing,
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("eigenspace splitting failed: {0}")]
    SplittingFailed(String),
    #[error("value lift failed: {0}")]
    Lift(String),
}

/// Cached table contents; holds no reference to its group.
#[derive(Debug)]
pub(crate) struct TableData {
    prime: u64,
    rows: Vec<Vec<Cyc>>,
    degrees: Vec<u64>,
}

/// A function on the conjugacy classes of a subgroup, indexed in canonical
/// class order.
#[derive(Clone)]
pub struct ClassFunction {
    group: Subgroup,
    values: Vec<Cyc>,
}

impl ClassFunction {
    pub fn new(group: &Subgroup, values: Vec<Cyc>) -> Self {
        assert_eq!(values.len(), group.classes().len(), "one value per class");
        ClassFunction {
            group: group.clone(),
            values,
        }
    }

    pub fn trivial(group: &Subgroup) -> Self {
        Self::new(group, vec![Cyc::one(); group.classes().len()])
    }

    /// `|G|` at the identity, zero elsewhere.
    pub fn regular(group: &Subgroup) -> Self {
        let mut values = vec![Cyc::zero(); group.classes().len()];
        values[0] = Cyc::from_int(group.order() as i64);
        Self::new(group, values)
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn values(&self) -> &[Cyc] {
        &self.values
    }

    /// Value at a parent element lying in the group.
    pub fn value_at(&self, x: usize) -> Option<&Cyc> {
        self.group.class_of(x).map(|c| &self.values[c])
    }

    /// The value at the identity, as an integer.
    pub fn degree(&self) -> i64 {
        self.values[0].as_integer().expect("integral degree")
    }

    pub fn is_linear(&self) -> bool {
        self.values[0] == Cyc::one()
    }

    fn same_group(&self, other: &ClassFunction) -> Result<(), CharTableError> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(CharTableError::GroupMismatch)
        }
    }

    /// `(1/|G|) sum_g a(g) conj(b(g))`.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Cyc, CharTableError> {
        self.same_group(other)?;
        let sizes = self.group.classes().sizes();
        let mut acc = Cyc::zero();
        for ((a, b), &s) in self.values.iter().zip(&other.values).zip(sizes) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let t = (a * &b.conj()).scale(&Rat::from_integer(BigInt::from(s)));
            acc += &t;
        }
        Ok(acc.scale(&Rat::new(1.into(), BigInt::from(self.group.order()))))
    }

    /// Inner product that must be a rational integer (both arguments are
    /// characters or virtual characters).
    pub fn multiplicity(&self, other: &ClassFunction) -> Result<i64, CharTableError> {
        let ip = self.inner_product(other)?;
        ip.as_integer().ok_or_else(|| {
            CharTableError::NotACharacter(format!("inner product {ip} is not an integer"))
        })
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction, CharTableError> {
        self.same_group(other)?;
        Ok(Self::new(
            &self.group,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction, CharTableError> {
        self.same_group(other)?;
        Ok(Self::new(
            &self.group,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    /// Pointwise product.
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction, CharTableError> {
        self.same_group(other)?;
        Ok(Self::new(
            &self.group,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        ))
    }

    pub fn scale(&self, k: i64) -> ClassFunction {
        let k = Cyc::from_int(k);
        Self::new(&self.group, self.values.iter().map(|a| a * &k).collect())
    }

    pub fn conj(&self) -> ClassFunction {
        Self::new(&self.group, self.values.iter().map(Cyc::conj).collect())
    }

    /// Applies `z -> z^k` to every value; `k` must be coprime to the group
    /// exponent.
    pub fn galois(&self, k: i64) -> ClassFunction {
        Self::new(
            &self.group,
            self.values
                .iter()
                .map(|a| {
                    a.galois(k)
                        .expect("exponent coprime to every element order")
                })
                .collect(),
        )
    }

    /// Restriction to a subgroup.
    pub fn restrict(&self, h: &Subgroup) -> Result<ClassFunction, CharTableError> {
        let fusion = FusionMap::new(h, &self.group)?;
        Ok(Self::new(
            h,
            fusion.map.iter().map(|&c| self.values[c].clone()).collect(),
        ))
    }

    /// Induction to an overgroup: `f^G(g) = (|C_G(g)|/|H|) sum f(h)` over
    /// `h` in `H` conjugate in `G` to `g`.
    pub fn induce(&self, g: &Subgroup) -> Result<ClassFunction, CharTableError> {
        let fusion = FusionMap::new(&self.group, g)?;
        let gcl = g.classes();
        let hcl = self.group.classes();
        let mut sums = vec![Cyc::zero(); gcl.len()];
        for (d, &c) in fusion.map.iter().enumerate() {
            let t = self.values[d].scale(&Rat::from_integer(BigInt::from(hcl.sizes()[d])));
            sums[c] += &t;
        }
        let values = sums
            .into_iter()
            .enumerate()
            .map(|(c, s)| {
                // |G| / (|H| |C|)
                let factor = Rat::new(
                    BigInt::from(g.order()),
                    BigInt::from(self.group.order() * gcl.sizes()[c]),
                );
                s.scale(&factor)
            })
            .collect();
        Ok(Self::new(g, values))
    }

    /// `f^x(h) = f(x h x^-1)` for an element `x` of the parent group that
    /// normalizes the group of `f`.
    pub fn conjugate_by(&self, x: usize) -> Result<ClassFunction, CharTableError> {
        let h = &self.group;
        if !normalizes(&[x], h) {
            return Err(CharTableError::NotNormalizing);
        }
        let grp = h.parent();
        let xi = grp.inv(x);
        let values = h
            .classes()
            .representatives()
            .iter()
            .map(|&r| self.value_at(grp.conjugate(r, xi)).unwrap().clone())
            .collect();
        Ok(Self::new(h, values))
    }

    /// Whether `f^x = f` for every listed element.
    pub fn invariant_under(&self, elems: &[usize]) -> Result<bool, CharTableError> {
        for &x in elems {
            if self.conjugate_by(x)? != *self {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `{g : f(g) = f(1)}` as a set of parent elements.
    pub fn kernel(&self) -> Subgroup {
        let cl = self.group.classes();
        let members = (0..cl.len())
            .filter(|&c| self.values[c] == self.values[0])
            .flat_map(|c| cl.members(c).iter().copied())
            .collect();
        self.group.parent().subgroup_from_members(members)
    }

    /// Multiplicities against every irreducible of the group, which must all
    /// be integers (negative ones allowed).
    pub fn decompose(&self) -> Result<Vec<i64>, CharTableError> {
        let table = character_table(&self.group)?;
        (0..table.len())
            .map(|i| self.multiplicity(&table.irreducible(i)))
            .collect()
    }

    /// Irreducible constituents `(index, multiplicity)`; fails unless every
    /// multiplicity is a non-negative integer.
    pub fn constituents(&self) -> Result<Vec<(usize, u64)>, CharTableError> {
        let mults = self.decompose()?;
        if let Some((i, m)) = mults.iter().enumerate().find(|(_, m)| **m < 0) {
            return Err(CharTableError::NotACharacter(format!(
                "irreducible {i} has multiplicity {m}"
            )));
        }
        Ok(mults
            .into_iter()
            .enumerate()
            .filter(|(_, m)| *m > 0)
            .map(|(i, m)| (i, m as u64))
            .collect())
    }

    /// Index of this function in its group's table, if it is irreducible.
    pub fn irreducible_index(&self) -> Result<Option<usize>, CharTableError> {
        Ok(character_table(&self.group)?.index_of(self))
    }

    /// Whether `theta` (an irreducible of a normal subgroup `N`) lies under
    /// this character.
    pub fn lies_over(&self, theta: &ClassFunction) -> Result<bool, CharTableError> {
        let n = theta.group();
        if !is_normal(&self.group, n) {
            return Err(CharTableError::NotNormal);
        }
        Ok(self.restrict(n)?.inner_product(theta)? != Cyc::zero())
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.values == other.values
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(Cyc::to_string).collect();
        write!(f, "[{}]", vals.join(", "))
    }
}

/// Class fusion from a subgroup into an overgroup.
#[derive(Debug, Clone)]
pub struct FusionMap {
    pub map: Vec<usize>,
}

impl FusionMap {
    pub fn new(sub: &Subgroup, parent: &Subgroup) -> Result<Self, CharTableError> {
        if !sub.is_subgroup_of(parent) {
            return Err(CharTableError::NotSubgroup {
                sub: sub.order(),
                parent: parent.order(),
            });
        }
        let map = sub
            .classes()
            .representatives()
            .iter()
            .map(|&r| parent.class_of(r).unwrap())
            .collect();
        Ok(FusionMap { map })
    }
}

/// The irreducible characters of a subgroup.
#[derive(Clone)]
pub struct CharacterTable {
    group: Subgroup,
    data: Arc<TableData>,
}

/// Computes (or fetches the cached) character table.
pub fn character_table(h: &Subgroup) -> Result<CharacterTable, CharTableError> {
    let cache = &h.data().table;
    if let Some(d) = cache.get() {
        return Ok(CharacterTable {
            group: h.clone(),
            data: d.clone(),
        });
    }
    let data = Arc::new(dixon::compute_table(h)?);
    let data = cache.get_or_init(|| data).clone();
    Ok(CharacterTable {
        group: h.clone(),
        data,
    })
}

impl CharacterTable {
    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.data.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.rows.is_empty()
    }

    /// The prime used for the modular eigenvector phase.
    pub fn prime(&self) -> u64 {
        self.data.prime
    }

    pub fn degrees(&self) -> &[u64] {
        &self.data.degrees
    }

    pub fn values(&self, i: usize) -> &[Cyc] {
        &self.data.rows[i]
    }

    pub fn irreducible(&self, i: usize) -> ClassFunction {
        ClassFunction::new(&self.group, self.data.rows[i].clone())
    }

    pub fn irreducibles(&self) -> Vec<ClassFunction> {
        (0..self.len()).map(|i| self.irreducible(i)).collect()
    }

    pub fn index_of(&self, f: &ClassFunction) -> Option<usize> {
        if f.group != self.group {
            return None;
        }
        self.data.rows.iter().position(|r| *r == f.values)
    }

    /// Rows of degree coprime to `p`.
    pub fn p_prime_irreducibles(&self, p: u64) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !self.data.degrees[i].is_multiple_of(p))
            .collect()
    }

    pub fn linear_characters(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.data.degrees[i] == 1)
            .collect()
    }

    /// Whether `sum_i chi_i(g) conj(chi_i(h)) = |C_G(g)| delta` holds for
    /// every pair of classes.
    pub fn column_orthogonality_holds(&self) -> bool {
        let cl = self.group.classes();
        let r = self.len();
        for a in 0..r {
            for b in a..r {
                let mut acc = Cyc::zero();
                for row in &self.data.rows {
                    acc += &(&row[a] * &row[b].conj());
                }
                let expected = if a == b {
                    (self.group.order() / cl.sizes()[a]) as i64
                } else {
                    0
                };
                if acc != Cyc::from_int(expected) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `<chi_i, chi_j> = delta_ij` for every pair of rows.
    pub fn row_orthogonality_holds(&self) -> bool {
        let irr = self.irreducibles();
        for i in 0..irr.len() {
            for j in i..irr.len() {
                let ip = irr[i].inner_product(&irr[j]).unwrap();
                if ip != Cyc::from_int(i64::from(i == j)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Orbit of an irreducible `theta` of a normal subgroup `N` under
/// conjugation by `G`, as indices into `N`'s table, together with the
/// inertia group `G_theta`.
pub fn orbit_and_stabilizer(
    g: &Subgroup,
    theta: &ClassFunction,
) -> Result<(Vec<usize>, Subgroup), CharTableError> {
    let n = theta.group();
    if !is_normal(g, n) {
        return Err(CharTableError::NotNormal);
    }
    let table = character_table(n)?;
    let mut orbit = Vec::new();
    let mut stab = Vec::new();
    for &x in g.members() {
        let c = theta.conjugate_by(x)?;
        if c == *theta {
            stab.push(x);
        }
        let idx = table
            .index_of(&c)
            .ok_or_else(|| CharTableError::NotACharacter("conjugate is not irreducible".into()))?;
        if !orbit.contains(&idx) {
            orbit.push(idx);
        }
    }
    orbit.sort_unstable();
    Ok((orbit, g.parent().subgroup_from_members(stab)))
}

/// Irreducible constituents of `f` lying over `theta`, an irreducible of a
/// normal subgroup of `f`'s group.
pub fn constituents_over(
    f: &ClassFunction,
    theta: &ClassFunction,
) -> Result<Vec<usize>, CharTableError> {
    let table = character_table(f.group())?;
    let mut out = Vec::new();
    for (i, _) in f.constituents()? {
        if table.irreducible(i).lies_over(theta)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// Checks that every entry of a rational class function is an integer and
/// returns the values; used for degree bookkeeping.
pub fn integer_values(f: &ClassFunction) -> Option<Vec<i64>> {
    f.values()
        .iter()
        .map(|v| {
            let r = v.as_rational()?;
            if r.is_integer() {
                r.to_integer().to_i64()
            } else {
                None
            }
        })
        .collect()
}

/// Convenience: the table of a whole enumerated group.
pub fn group_table(g: &PermGroup) -> Result<CharacterTable, CharTableError> {
    character_table(&g.whole())
}
