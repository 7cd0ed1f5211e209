use super::Subgroup;

/// Conjugacy classes of a subgroup, in canonical order: by representative
/// order, then class size, then smallest member. Class 0 is the identity.
/// Each representative is the smallest member of its class.
#[derive(Debug, Clone)]
pub struct ConjClasses {
    reps: Vec<usize>,
    sizes: Vec<usize>,
    orders: Vec<u32>,
    members: Vec<Vec<usize>>,
    /// class index of each element, by local index
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
}

impl ConjClasses {
    pub(crate) fn compute(h: &Subgroup) -> Self {
        let g = h.parent();
        let n = h.order();
        let gens = h.generators();
        let mut assigned = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for (li, &x) in h.members().iter().enumerate() {
            if assigned[li] != usize::MAX {
                continue;
            }
            let c = raw.len();
            assigned[li] = c;
            let mut orbit = vec![x];
            let mut head = 0;
            while head < orbit.len() {
                let y = orbit[head];
                for &s in gens {
                    let z = g.conjugate(y, s);
                    let lz = h.local_index(z).expect("conjugate stays in subgroup");
                    if assigned[lz] == usize::MAX {
                        assigned[lz] = c;
                        orbit.push(z);
                    }
                }
                head += 1;
            }
            orbit.sort_unstable();
            raw.push(orbit);
        }
        // raw[c][0] is the smallest member, since classes are opened in
        // ascending order
        let mut perm: Vec<usize> = (0..raw.len()).collect();
        perm.sort_by_key(|&c| (g.element_order(raw[c][0]), raw[c].len(), raw[c][0]));
        let mut new_index = vec![0; raw.len()];
        for (new, &old) in perm.iter().enumerate() {
            new_index[old] = new;
        }
        let members: Vec<Vec<usize>> = perm.iter().map(|&c| raw[c].clone()).collect();
        let class_of: Vec<usize> = assigned.iter().map(|&c| new_index[c]).collect();
        let reps: Vec<usize> = members.iter().map(|m| m[0]).collect();
        let sizes = members.iter().map(Vec::len).collect();
        let orders = reps.iter().map(|&r| g.element_order(r)).collect();
        let inverse_class = reps
            .iter()
            .map(|&r| class_of[h.local_index(g.inv(r)).unwrap()])
            .collect();
        ConjClasses {
            reps,
            sizes,
            orders,
            members,
            class_of,
            inverse_class,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Representatives as parent element indices.
    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Order of the elements in each class.
    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    /// Members of class `c` as parent element indices, ascending.
    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    /// Class index of a member, given by its local index in the subgroup.
    pub fn class_of_local(&self, local: usize) -> usize {
        self.class_of[local]
    }

    /// Class containing `g^-1` for a representative `g` of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }
}

impl Subgroup {
    /// Class index of a parent element that lies in this subgroup.
    pub fn class_of(&self, x: usize) -> Option<usize> {
        self.local_index(x)
            .map(|l| self.classes().class_of_local(l))
    }
}

#[cfg(test)]
mod tests {
    use crate::group::{Perm, PermGroup, DEFAULT_CAP};

    fn classes_brute_force(g: &PermGroup) -> Vec<Vec<usize>> {
        let n = g.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut c: Vec<usize> = (0..n).map(|y| g.conjugate(x, y)).collect();
            c.sort_unstable();
            c.dedup();
            for &y in &c {
                seen[y] = true;
            }
            out.push(c);
        }
        out
    }

    fn sorted_sizes(g: &PermGroup) -> Vec<usize> {
        let mut v: Vec<usize> = classes_brute_force(g).iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn s4_classes() {
        let a = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let g = PermGroup::from_generators("S4", 4, vec![a, b], DEFAULT_CAP).unwrap();
        let cl = g.whole().classes().clone();
        assert_eq!(cl.len(), 5);
        let mut sizes = cl.sizes().to_vec();
        assert_eq!(sizes[0], 1);
        // canonical order: (order, size, min member)
        assert_eq!(cl.element_orders(), &[1, 2, 2, 3, 4]);
        assert_eq!(cl.sizes(), &[1, 3, 6, 8, 6]);
        sizes.sort_unstable();
        assert_eq!(sizes, sorted_sizes(&g));
        assert_eq!(sizes.iter().sum::<usize>(), 24);
    }

    #[test]
    fn d8_and_cyclic_classes() {
        let r = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let s = Perm::from_cycles(4, &[&[0, 2]]).unwrap();
        let d8 = PermGroup::from_generators("D8", 4, vec![r, s], DEFAULT_CAP).unwrap();
        assert_eq!(d8.whole().classes().sizes(), &[1, 1, 2, 2, 2]);
        let c = Perm::from_cycles(7, &[&[0, 1, 2, 3, 4, 5, 6]]).unwrap();
        let c7 = PermGroup::from_generators("C7", 7, vec![c], DEFAULT_CAP).unwrap();
        assert_eq!(c7.whole().classes().sizes(), &[1; 7]);
    }
}
