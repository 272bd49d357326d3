#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use octachar_core::Partition;

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Integer polynomial in a fixed number of variables, keyed by exponent vector.
#[derive(Clone, Debug, Default)]
pub struct Poly(pub BTreeMap<Vec<u32>, i128>);

impl Poly {
    pub fn one(vars: usize) -> Poly {
        Poly(BTreeMap::from([(vec![0; vars], 1)]))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = BTreeMap::new();
        for (a, ca) in &self.0 {
            for (b, cb) in &other.0 {
                let key: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *out.entry(key).or_insert(0) += ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        Poly(out)
    }

    pub fn power_sum(vars: usize, r: u32) -> Poly {
        let mut out = BTreeMap::new();
        for i in 0..vars {
            let mut e = vec![0; vars];
            e[i] = r;
            out.insert(e, 1);
        }
        Poly(out)
    }

    /// `Π_{i<j} (x_i − x_j)`.
    pub fn vandermonde(vars: usize) -> Poly {
        let mut acc = Poly::one(vars);
        for i in 0..vars {
            for j in i + 1..vars {
                let mut xi = vec![0; vars];
                xi[i] = 1;
                let mut xj = vec![0; vars];
                xj[j] = 1;
                acc = acc.mul(&Poly(BTreeMap::from([(xi, 1), (xj, -1)])));
            }
        }
        acc
    }

    pub fn coefficient(&self, exps: &[u32]) -> i128 {
        self.0.get(exps).copied().unwrap_or(0)
    }
}

/// `χ_λ(ρ)` as the coefficient of `x^{λ+δ}` in `a_δ · p_ρ`, in `ℓ(λ)`
/// variables, passing to the conjugate when it has fewer rows.
pub fn alternant_character(lambda: &[usize], rho: &[usize]) -> i128 {
    let conj: Vec<usize> = (0..lambda.first().copied().unwrap_or(0))
        .map(|j| lambda.iter().filter(|&&r| r > j).count())
        .collect();
    if conj.len() < lambda.len() {
        let sgn = if rho.iter().filter(|&&r| r % 2 == 0).count() % 2 == 0 {
            1
        } else {
            -1
        };
        return sgn * alternant_character_rows(&conj, rho);
    }
    alternant_character_rows(lambda, rho)
}

fn alternant_character_rows(lambda: &[usize], rho: &[usize]) -> i128 {
    let vars = lambda.len().max(1);
    let mut acc = Poly::vandermonde(vars);
    for &r in rho {
        acc = acc.mul(&Poly::power_sum(vars, r as u32));
    }
    let target: Vec<u32> = (0..vars)
        .map(|i| lambda.get(i).copied().unwrap_or(0) as u32 + (vars - 1 - i) as u32)
        .collect();
    acc.coefficient(&target)
}

/// All permutations of `0..n` as image vectors.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse(a: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn cycle_type(a: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; a.len()];
    let mut out = Vec::new();
    for s in 0..a.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = a[i];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

/// A permutation with the given cycle type, cycles on consecutive points.
pub fn representative(cycle_type: &[usize]) -> Vec<usize> {
    let n: usize = cycle_type.iter().sum();
    let mut perm = vec![0; n];
    let mut start = 0;
    for &c in cycle_type {
        for k in 0..c {
            perm[start + k] = start + (k + 1) % c;
        }
        start += c;
    }
    perm
}

pub fn sign(a: &[usize]) -> i128 {
    let evens = cycle_type(a).iter().filter(|&&c| c % 2 == 0).count();
    if evens % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Character table of `S_m` from the Young symmetrizer `e = Σ_{r∈R, c∈C} sgn(c) r c`
/// of the row-reading tableau: `χ(g) = κ⁻¹ Σ_x [x⁻¹ g⁻¹ x] e` with `e² = κ e`.
pub fn young_symmetrizer_character(lambda: &Partition, g: &[usize]) -> i128 {
    let m = lambda.size();
    let mut row_of = vec![0; m];
    let mut col_of = vec![0; m];
    let mut cell = 0;
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            row_of[cell] = r;
            col_of[cell] = c;
            cell += 1;
        }
    }
    let all = permutations(m);
    let rows: Vec<&Vec<usize>> = all
        .iter()
        .filter(|s| (0..m).all(|i| row_of[s[i]] == row_of[i]))
        .collect();
    let cols: Vec<&Vec<usize>> = all
        .iter()
        .filter(|s| (0..m).all(|i| col_of[s[i]] == col_of[i]))
        .collect();
    let mut e: HashMap<Vec<usize>, i128> = HashMap::new();
    for r in &rows {
        for c in &cols {
            *e.entry(compose(r, c)).or_insert(0) += sign(c);
        }
    }
    let coeff = |h: &Vec<usize>| e.get(h).copied().unwrap_or(0);
    let kappa: i128 = e.iter().map(|(h, c)| c * coeff(&inverse(h))).sum();
    let g_inv = inverse(g);
    let total: i128 = all
        .iter()
        .map(|x| coeff(&compose(&inverse(x), &compose(&g_inv, x))))
        .sum();
    assert_eq!(total % kappa, 0);
    total / kappa
}
