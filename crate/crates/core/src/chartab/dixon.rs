//! Dixon–Schneider: simultaneous eigenvectors of the class matrices over a
//! prime field, followed by an exact lift of every character value.

use num_bigint::BigInt;

use crate::arith::{dixon_prime, Cyc, PrimeField, Rat};
use crate::group::Subgroup;

use super::{CharTableError, TableData};

/// Row-reduced basis of a subspace of `F_q^r`.
#[derive(Debug, Clone)]
struct Space {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(f: &PrimeField, m: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(pr) = (row..nrows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(row, pr);
        let inv = f.inv(m[row][col]);
        for x in m[row].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..nrows {
            if i != row && m[i][col] != 0 {
                let c = m[i][col];
                for j in col..ncols {
                    let v = f.mul(c, m[row][j]);
                    m[i][j] = f.sub(m[i][j], v);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

/// Basis of `{x : A x = 0}` for a square matrix.
fn kernel(f: &PrimeField, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut m = a.to_vec();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[r][fc]);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial (lowest degree first) via reduction to upper
/// Hessenberg form.
fn char_poly(f: &PrimeField, a: &[Vec<u64>]) -> Vec<u64> {
    let n = a.len();
    let mut h = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = f.inv(h[m][m - 1]);
        for i in m + 1..n {
            let u = f.mul(h[i][m - 1], inv);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let v = f.mul(u, h[m][j]);
                h[i][j] = f.sub(h[i][j], v);
            }
            for row in h.iter_mut() {
                let v = f.mul(u, row[i]);
                row[m] = f.add(row[m], v);
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        // (x - h[m-1][m-1]) * p_{m-1}
        let prev = &polys[m - 1];
        let mut p = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            p[k + 1] = f.add(p[k + 1], c);
            p[k] = f.sub(p[k], f.mul(h[m - 1][m - 1], c));
        }
        let mut t = 1u64;
        for i in 1..m {
            t = f.mul(t, h[m - i][m - i - 1]);
            let coef = f.mul(t, h[m - i - 1][m - 1]);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                p[k] = f.sub(p[k], f.mul(coef, c));
            }
        }
        polys.push(p);
    }
    polys.pop().unwrap()
}

fn roots(f: &PrimeField, poly: &[u64]) -> Vec<u64> {
    (0..f.modulus())
        .filter(|&x| {
            poly.iter()
                .rev()
                .fold(0u64, |acc, &c| f.add(f.mul(acc, x), c))
                == 0
        })
        .collect()
}

/// Class matrix `M_j` with `M_j[i][k] = #{x in C_j : x^-1 z_k in C_i}`
/// for a fixed representative `z_k` of class `k`. The central-character
/// vector `w` satisfies `M_j w = w_j w`.
fn class_matrix(h: &Subgroup, j: usize) -> Vec<Vec<u64>> {
    let g = h.parent();
    let cl = h.classes();
    let r = cl.len();
    let mut m = vec![vec![0u64; r]; r];
    for (k, &z) in cl.representatives().iter().enumerate() {
        for &x in cl.members(j) {
            let y = g.mul(g.inv(x), z);
            let i = h.class_of(y).expect("closed under products");
            m[i][k] += 1;
        }
    }
    m
}

fn split_spaces(h: &Subgroup, f: &PrimeField) -> Result<Vec<Vec<u64>>, CharTableError> {
    let r = h.classes().len();
    let mut spaces = vec![Space {
        rows: (0..r)
            .map(|i| {
                let mut v = vec![0u64; r];
                v[i] = 1;
                v
            })
            .collect(),
        pivots: (0..r).collect(),
    }];
    for j in 1..r {
        if spaces.iter().all(|s| s.rows.len() == 1) {
            break;
        }
        let mj: Vec<Vec<u64>> = class_matrix(h, j)
            .into_iter()
            .map(|row| row.into_iter().map(|x| x % f.modulus()).collect())
            .collect();
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            let d = space.rows.len();
            if d == 1 {
                next.push(space);
                continue;
            }
            // images[a] = M_j w_a
            let images: Vec<Vec<u64>> = space
                .rows
                .iter()
                .map(|w| {
                    (0..r)
                        .map(|i| (0..r).fold(0u64, |acc, k| f.add(acc, f.mul(mj[i][k], w[k]))))
                        .collect()
                })
                .collect();
            // restricted[b][a] = coordinate b of M_j w_a
            let restricted: Vec<Vec<u64>> = (0..d)
                .map(|b| (0..d).map(|a| images[a][space.pivots[b]]).collect())
                .collect();
            let poly = char_poly(f, &restricted);
            let mut total = 0;
            for lambda in roots(f, &poly) {
                let shifted: Vec<Vec<u64>> = restricted
                    .iter()
                    .enumerate()
                    .map(|(b, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(a, &x)| if a == b { f.sub(x, lambda) } else { x })
                            .collect()
                    })
                    .collect();
                let mut vecs: Vec<Vec<u64>> = kernel(f, &shifted)
                    .into_iter()
                    .map(|c| {
                        (0..r)
                            .map(|i| {
                                (0..d)
                                    .fold(0u64, |acc, a| f.add(acc, f.mul(c[a], space.rows[a][i])))
                            })
                            .collect()
                    })
                    .collect();
                let pivots = rref(f, &mut vecs);
                total += vecs.len();
                next.push(Space { rows: vecs, pivots });
            }
            if total != d {
                return Err(CharTableError::SplittingFailed(format!(
                    "class matrix {j} is not diagonalizable on a {d}-dimensional eigenspace mod {}",
                    f.modulus()
                )));
            }
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s.rows.len() != 1) {
        return Err(CharTableError::SplittingFailed(format!(
            "a {}-dimensional common eigenspace remains mod {}",
            s.rows.len(),
            f.modulus()
        )));
    }
    Ok(spaces
        .into_iter()
        .map(|s| s.rows.into_iter().next().unwrap())
        .collect())
}

pub(super) fn compute_table(h: &Subgroup) -> Result<TableData, CharTableError> {
    let g = h.parent();
    let cl = h.classes();
    let r = cl.len();
    let order = h.order() as u64;
    let exponent = cl
        .element_orders()
        .iter()
        .fold(1u64, |acc, &o| num_integer::lcm(acc, o as u64));
    let q = dixon_prime(exponent, order);
    let f = PrimeField::new(q);
    let vectors = split_spaces(h, &f)?;

    // power maps: powers[c][j] = class of rep_c^j
    let powers: Vec<Vec<usize>> = cl
        .representatives()
        .iter()
        .zip(cl.element_orders())
        .map(|(&x, &m)| {
            let mut y = 0usize;
            (0..m)
                .map(|_| {
                    let c = h.class_of(y).unwrap();
                    y = g.mul(y, x);
                    c
                })
                .collect()
        })
        .collect();

    let mut rows = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for v in &vectors {
        debug_assert_eq!(v[0], 1);
        let s = (0..r).fold(0u64, |acc, i| {
            let t = f.mul(v[i], v[cl.inverse_class(i)]);
            f.add(acc, f.mul(t, f.inv(cl.sizes()[i] as u64 % q)))
        });
        if s == 0 {
            return Err(CharTableError::Lift("degenerate central character".into()));
        }
        let d2 = f.mul(order % q, f.inv(s));
        let d = f
            .sqrt(d2)
            .ok_or_else(|| CharTableError::Lift("squared degree is not a square mod q".into()))?;
        let d = d.min(q - d);
        if d == 0 || d * d > order || !order.is_multiple_of(d) {
            return Err(CharTableError::Lift(format!(
                "implausible degree {d} mod {q}"
            )));
        }
        let values_mod: Vec<u64> = (0..r)
            .map(|i| f.mul(f.mul(v[i], d), f.inv(cl.sizes()[i] as u64 % q)))
            .collect();
        let mut row = Vec::with_capacity(r);
        for c in 0..r {
            let m = cl.element_orders()[c] as u64;
            let w = f.root_of_unity(m);
            let winv = f.inv(w);
            let minv = f.inv(m % q);
            let mut mult = Vec::with_capacity(m as usize);
            for k in 0..m {
                // c_k = (1/m) sum_j chi(g^j) w^(-jk)
                let step = f.pow(winv, k);
                let mut acc = 0u64;
                let mut tw = 1u64;
                for j in 0..m as usize {
                    acc = f.add(acc, f.mul(values_mod[powers[c][j]], tw));
                    tw = f.mul(tw, step);
                }
                let ck = f.mul(acc, minv);
                if ck > d {
                    return Err(CharTableError::Lift(format!(
                        "eigenvalue multiplicity {ck} exceeds degree {d}"
                    )));
                }
                mult.push(Rat::from_integer(BigInt::from(ck)));
            }
            row.push(Cyc::from_exponent_coeffs(m as u32, &mult));
        }
        rows.push(row);
        degrees.push(d);
    }

    let trivial = |row: &Vec<Cyc>| row.iter().all(|x| *x == Cyc::one());
    let mut order_idx: Vec<usize> = (0..r).collect();
    order_idx.sort_by(|&a, &b| {
        degrees[a]
            .cmp(&degrees[b])
            .then_with(|| trivial(&rows[b]).cmp(&trivial(&rows[a])))
            .then_with(|| rows[a].cmp(&rows[b]))
    });
    let rows: Vec<Vec<Cyc>> = order_idx.iter().map(|&i| rows[i].clone()).collect();
    let degrees: Vec<u64> = order_idx.iter().map(|&i| degrees[i]).collect();

    let sum_sq: u64 = degrees.iter().map(|d| d * d).sum();
    if sum_sq != order {
        return Err(CharTableError::Lift(format!(
            "sum of squared degrees {sum_sq} differs from the order {order}"
        )));
    }
    // each row must have norm 1
    for row in &rows {
        let mut acc = Cyc::zero();
        for (c, x) in row.iter().enumerate() {
            let t = &(x * &x.conj()) * &Cyc::from_int(cl.sizes()[c] as i64);
            acc += &t;
        }
        if acc != Cyc::from_int(order as i64) {
            return Err(CharTableError::Lift("lifted row is not of norm 1".into()));
        }
    }
    Ok(TableData {
        prime: q,
        rows,
        degrees,
    })
}
