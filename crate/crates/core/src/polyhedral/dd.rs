//! Double description: exact conversion between the constraint and generator
//! representations of rational polyhedral cones. Dimensions here are tiny, so
//! after every insertion step the generator set is re-minimized by exact LP,
//! which keeps the pair canonical regardless of adjacency-test corner cases.

use super::simplex::solve_feasibility;
use crate::num::{cmp_int_vec, dot_rat, int_to_rat, primitive_direction, Int, Rat};
use num_traits::{One, Zero};

/// Generator representation of a cone: extreme rays (primitive integer
/// vectors, modulo the lineality space) plus a basis of the lineality space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generators {
    pub rays: Vec<Vec<Int>>,
    pub lineality: Vec<Vec<Int>>,
}

/// Reduced row echelon basis, each row scaled to a primitive integer vector.
/// Canonical for the spanned subspace.
pub fn canonical_subspace_basis(vecs: &[Vec<Int>], dim: usize) -> Vec<Vec<Int>> {
    let rows: Vec<Vec<Rat>> = vecs.iter().map(|v| int_to_rat(v)).collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let m = crate::lattice::RatMatrix::from_rows(rows);
    let (rref, pivots) = m.rref();
    let mut out = Vec::new();
    for (r, _) in pivots.iter().enumerate() {
        let row = rref.row(r);
        let prim = primitive_direction(&row);
        out.push(prim);
    }
    debug_assert!(out.iter().all(|v| v.len() == dim));
    out
}

/// Canonical representative of v modulo the subspace spanned by `basis`
/// (basis rows in RREF order: leading entries at distinct pivot columns).
fn reduce_mod_subspace(v: &[Rat], basis: &[Vec<Int>]) -> Vec<Rat> {
    let mut out = v.to_vec();
    for b in basis {
        let pivot = b.iter().position(|x| !x.is_zero()).expect("zero basis row");
        if out[pivot].is_zero() {
            continue;
        }
        let factor = &out[pivot] / Rat::from_integer(b[pivot].clone());
        for (o, bi) in out.iter_mut().zip(b) {
            *o = &*o - &factor * Rat::from_integer(bi.clone());
        }
    }
    out
}

fn normalize_ray(v: &[Rat], lineality: &[Vec<Int>]) -> Option<Vec<Int>> {
    let reduced = reduce_mod_subspace(v, lineality);
    let prim = primitive_direction(&reduced);
    if prim.iter().all(|x| x.is_zero()) {
        None
    } else {
        Some(prim)
    }
}

/// Drop duplicate rays and rays that are nonnegative combinations of the
/// remaining rays plus the lineality space.
fn minimize_rays(rays: Vec<Vec<Int>>, lineality: &[Vec<Int>], dim: usize) -> Vec<Vec<Int>> {
    let mut rays = rays;
    rays.sort_by(|a, b| cmp_int_vec(a, b));
    rays.dedup();
    let mut keep = vec![true; rays.len()];
    for i in 0..rays.len() {
        if !keep[i] {
            continue;
        }
        let others: Vec<&Vec<Int>> = rays
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i && keep[*j])
            .map(|(_, r)| r)
            .collect();
        if others.is_empty() && lineality.is_empty() {
            continue;
        }
        // r_i in cone(others) + span(lineality)?
        let n = others.len() + lineality.len();
        let mut eqs = Vec::with_capacity(dim);
        for coord in 0..dim {
            let mut row = Vec::with_capacity(n);
            for r in &others {
                row.push(Rat::from_integer(r[coord].clone()));
            }
            for l in lineality {
                row.push(Rat::from_integer(l[coord].clone()));
            }
            eqs.push((row, Rat::from_integer(rays[i][coord].clone())));
        }
        let mut ges = Vec::new();
        for j in 0..others.len() {
            let mut row = vec![Rat::zero(); n];
            row[j] = Rat::one();
            ges.push((row, Rat::zero()));
        }
        if solve_feasibility(n, &eqs, &ges).is_some() {
            keep[i] = false;
        }
    }
    rays.into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(r, _)| r)
        .collect()
}

/// Generator representation of {x : <a,x> >= 0 for a in ineqs, <e,x> = 0 for
/// e in eqs}.
pub fn generators_from_constraints(dim: usize, ineqs: &[Vec<Rat>], eqs: &[Vec<Rat>]) -> Generators {
    let mut lineality: Vec<Vec<Int>> = (0..dim)
        .map(|i| {
            let mut v = vec![Int::zero(); dim];
            v[i] = Int::one();
            v
        })
        .collect();
    let mut rays: Vec<Vec<Int>> = Vec::new();
    let mut processed: Vec<Vec<Rat>> = Vec::new();

    let mut all: Vec<(Vec<Rat>, bool)> = Vec::new();
    for e in eqs {
        all.push((e.clone(), true));
    }
    for a in ineqs {
        all.push((a.clone(), false));
    }

    for (normal, is_eq) in all {
        if normal.iter().all(|x| x.is_zero()) {
            continue;
        }
        let lin_vals: Vec<Rat> = lineality
            .iter()
            .map(|l| dot_rat(&normal, &int_to_rat(l)))
            .collect();
        if let Some(pidx) = lin_vals.iter().position(|v| !v.is_zero()) {
            // the constraint splits the lineality space
            let pivot = lineality.remove(pidx);
            let pval = lin_vals[pidx].clone();
            let pivot_rat = int_to_rat(&pivot);
            for l in lineality.iter_mut() {
                let lv = dot_rat(&normal, &int_to_rat(l));
                if !lv.is_zero() {
                    let f = &lv / &pval;
                    let adjusted: Vec<Rat> = int_to_rat(l)
                        .iter()
                        .zip(&pivot_rat)
                        .map(|(x, p)| x - &f * p)
                        .collect();
                    *l = primitive_direction(&adjusted);
                }
            }
            // reduce_mod_subspace needs a reduced echelon basis
            lineality = canonical_subspace_basis(&lineality, dim);
            let mut new_rays = Vec::new();
            for r in &rays {
                let rv = dot_rat(&normal, &int_to_rat(r));
                let adjusted: Vec<Rat> = int_to_rat(r)
                    .iter()
                    .zip(&pivot_rat)
                    .map(|(x, p)| x - (&rv / &pval) * p)
                    .collect();
                if let Some(nr) = normalize_ray(&adjusted, &lineality) {
                    new_rays.push(nr);
                }
            }
            if !is_eq {
                // the pivot direction survives on the feasible side
                let oriented: Vec<Rat> = if pval > Rat::zero() {
                    pivot_rat.clone()
                } else {
                    pivot_rat.iter().map(|x| -x.clone()).collect()
                };
                if let Some(nr) = normalize_ray(&oriented, &lineality) {
                    new_rays.push(nr);
                }
            }
            rays = minimize_rays(new_rays, &lineality, dim);
        } else {
            // lineality sits inside the hyperplane; split the rays.
            // Equations are processed before any ray exists, so the equation
            // case here only ever sees an empty ray list.
            debug_assert!(!is_eq || rays.is_empty());
            let vals: Vec<Rat> = rays
                .iter()
                .map(|r| dot_rat(&normal, &int_to_rat(r)))
                .collect();
            let mut new_rays: Vec<Vec<Int>> = Vec::new();
            for (r, v) in rays.iter().zip(&vals) {
                if v.is_zero() || (!is_eq && v > &Rat::zero()) {
                    new_rays.push(r.clone());
                }
            }
            // zero sets over processed inequalities, for the adjacency test
            let zero_sets: Vec<Vec<bool>> = rays
                .iter()
                .map(|r| {
                    processed
                        .iter()
                        .map(|a| dot_rat(a, &int_to_rat(r)).is_zero())
                        .collect()
                })
                .collect();
            for (i, vi) in vals.iter().enumerate() {
                if !(vi > &Rat::zero()) {
                    continue;
                }
                for (j, vj) in vals.iter().enumerate() {
                    if !(vj < &Rat::zero()) {
                        continue;
                    }
                    if !adjacent(&zero_sets, i, j) {
                        continue;
                    }
                    let ri = int_to_rat(&rays[i]);
                    let rj = int_to_rat(&rays[j]);
                    let comb: Vec<Rat> = ri.iter().zip(&rj).map(|(a, b)| vi * b - vj * a).collect();
                    if let Some(nr) = normalize_ray(&comb, &lineality) {
                        new_rays.push(nr);
                    }
                }
            }
            rays = minimize_rays(new_rays, &lineality, dim);
        }
        if !is_eq {
            processed.push(normal);
        }
    }
    lineality = canonical_subspace_basis(&lineality, dim);
    rays = minimize_rays(
        rays.iter()
            .filter_map(|r| normalize_ray(&int_to_rat(r), &lineality))
            .collect(),
        &lineality,
        dim,
    );
    rays.sort_by(|a, b| cmp_int_vec(a, b));
    Generators { rays, lineality }
}

fn adjacent(zero_sets: &[Vec<bool>], i: usize, j: usize) -> bool {
    let common: Vec<bool> = zero_sets[i]
        .iter()
        .zip(&zero_sets[j])
        .map(|(a, b)| *a && *b)
        .collect();
    for (k, z) in zero_sets.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        if common.iter().zip(z).all(|(c, zk)| !*c || *zk) {
            return false;
        }
    }
    true
}

/// Constraint representation of cone(rays) + span(lineality): the dual cone's
/// generators are exactly the constraint normals.
pub fn constraints_from_generators(
    dim: usize,
    rays: &[Vec<Int>],
    lineality: &[Vec<Int>],
) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let ineqs: Vec<Vec<Rat>> = rays.iter().map(|r| int_to_rat(r)).collect();
    let eqs: Vec<Vec<Rat>> = lineality.iter().map(|l| int_to_rat(l)).collect();
    let dual = generators_from_constraints(dim, &ineqs, &eqs);
    (dual.rays, dual.lineality)
}
