//! Dense exact linear algebra over a coefficient field.

use crate::field::Field;

/// Row-reduces in place to reduced row echelon form; returns pivot columns.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                *x = x.mul(&inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let k = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x = x.sub(&k.mul(p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows with `ncols` columns.
pub fn kernel<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (row, &p) in m.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[p] = row[free].neg();
            }
        }
        basis.push(v);
    }
    basis
}

/// Indices of a maximal independent subset of `vectors`, chosen greedily
/// in the given order.
pub fn independent_subset<F: Field>(vectors: &[Vec<F>], ncols: usize) -> Vec<usize> {
    let mut echelon: Vec<(usize, Vec<F>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        for (p, row) in &echelon {
            if !w[*p].is_zero() {
                let k = w[*p].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    *x = x.sub(&k.mul(y));
                }
            }
        }
        if let Some(p) = (0..ncols).find(|&c| !w[c].is_zero()) {
            let inv = w[p].inv();
            for x in w.iter_mut() {
                *x = x.mul(&inv);
            }
            echelon.push((p, w));
            chosen.push(idx);
        }
    }
    chosen
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(F::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
}

/// Linear functionals that vanish on `span(image)`, restrict to independent
/// functionals on `span(space)`, and number `dim space - dim image`.
/// Requires `image ⊆ span(space)`.
pub fn quotient_coordinates<F: Field>(space: &[Vec<F>], image: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let annihilators = kernel(image, ncols);
    let restricted: Vec<Vec<F>> = annihilators
        .iter()
        .map(|l| space.iter().map(|v| dot(l, v)).collect())
        .collect();
    independent_subset(&restricted, space.len())
        .into_iter()
        .map(|i| annihilators[i].clone())
        .collect()
}
