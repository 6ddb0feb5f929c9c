//! Exact rational linear-program feasibility via a phase-one simplex with
//! Bland's rule. Small systems only; all arithmetic is exact.

use crate::num::Rat;
use num_traits::{One, Signed, Zero};

/// Find x in Q^n with A_eq x = b_eq and A_ge x >= b_ge, all variables free.
/// Returns a witness point if the system is feasible.
pub fn solve_feasibility(
    n_vars: usize,
    eqs: &[(Vec<Rat>, Rat)],
    ges: &[(Vec<Rat>, Rat)],
) -> Option<Vec<Rat>> {
    // standard form: x = xp - xm, slack s for each >=, all nonnegative
    let n_ge = ges.len();
    let total = 2 * n_vars + n_ge;
    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::with_capacity(eqs.len() + n_ge);
    for (a, b) in eqs {
        assert_eq!(a.len(), n_vars);
        let mut row = vec![Rat::zero(); total];
        for j in 0..n_vars {
            row[j] = a[j].clone();
            row[n_vars + j] = -a[j].clone();
        }
        rows.push((row, b.clone()));
    }
    for (k, (a, b)) in ges.iter().enumerate() {
        assert_eq!(a.len(), n_vars);
        let mut row = vec![Rat::zero(); total];
        for j in 0..n_vars {
            row[j] = a[j].clone();
            row[n_vars + j] = -a[j].clone();
        }
        row[2 * n_vars + k] = -Rat::one();
        rows.push((row, b.clone()));
    }
    let m = rows.len();
    if m == 0 {
        return Some(vec![Rat::zero(); n_vars]);
    }
    // make right-hand sides nonnegative, then add artificials
    for (row, b) in rows.iter_mut() {
        if b.is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
            *b = -b.clone();
        }
    }
    let cols = total + m;
    // tableau[i] = (coefficients, rhs); basis[i] = column of the basic var
    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    for (i, (row, b)) in rows.iter().enumerate() {
        let mut r = vec![Rat::zero(); cols + 1];
        r[..total].clone_from_slice(row);
        r[total + i] = Rat::one();
        r[cols] = b.clone();
        tab.push(r);
        basis.push(total + i);
    }
    // objective: minimize sum of artificials; reduced costs
    let mut obj = vec![Rat::zero(); cols + 1];
    for j in total..cols {
        obj[j] = Rat::one();
    }
    // price out the artificial basis
    for i in 0..m {
        for j in 0..=cols {
            let v = &obj[j] - &tab[i][j];
            obj[j] = v;
        }
    }
    loop {
        // Bland: entering = smallest-index column with negative reduced cost
        let mut enter = None;
        for (j, c) in obj.iter().enumerate().take(cols) {
            if c.is_negative() {
                enter = Some(j);
                break;
            }
        }
        let Some(e) = enter else { break };
        // leaving: min ratio, ties broken by smallest basis column (Bland)
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if tab[i][e].is_positive() {
                let ratio = &tab[i][cols] / &tab[i][e];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((l, _)) = leave else {
            // phase-one objective is bounded below by 0, so this is unreachable
            break;
        };
        // pivot on (l, e)
        let piv = tab[l][e].clone();
        for v in tab[l].iter_mut() {
            *v = &*v / &piv;
        }
        for i in 0..m {
            if i != l && !tab[i][e].is_zero() {
                let f = tab[i][e].clone();
                for j in 0..=cols {
                    let v = &tab[i][j] - &f * &tab[l][j];
                    tab[i][j] = v;
                }
            }
        }
        if !obj[e].is_zero() {
            let f = obj[e].clone();
            for j in 0..=cols {
                let v = &obj[j] - &f * &tab[l][j];
                obj[j] = v;
            }
        }
        basis[l] = e;
    }
    // feasible iff all artificials are zero, i.e. objective value is 0
    let objective = -obj[cols].clone();
    if !objective.is_zero() {
        return None;
    }
    let mut assign = vec![Rat::zero(); cols];
    for i in 0..m {
        assign[basis[i]] = tab[i][cols].clone();
    }
    // an artificial may remain basic at level zero; that is fine
    let x: Vec<Rat> = (0..n_vars)
        .map(|j| &assign[j] - &assign[n_vars + j])
        .collect();
    Some(x)
}
