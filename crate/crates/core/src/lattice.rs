//! Exact integer and rational linear algebra: normal forms, cokernels,
//! primitive vectors, rational system solving.

use crate::error::{Error, Result};
use crate::num::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c));
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += k * row[b]
    fn add_row(&mut self, a: usize, b: usize, k: &Int) {
        for j in 0..self.cols {
            let v = self.get(a, j) + k * self.get(b, j);
            self.set(a, j, v);
        }
    }

    fn add_col(&mut self, a: usize, b: usize, k: &Int) {
        for i in 0..self.rows {
            let v = self.get(i, a) + k * self.get(i, b);
            self.set(i, a, v);
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self.get(a, j).clone();
            self.set(a, j, v);
        }
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| Rat::from_integer(x.clone()))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.to_rat().rank()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c));
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Rat> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn rank(&self) -> usize {
        let (reduced, pivots) = self.rref();
        let _ = reduced;
        pivots.len()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let mut piv = None;
            for i in row..m.rows {
                if !m.get(i, col).is_zero() {
                    piv = Some(i);
                    break;
                }
            }
            let Some(p) = piv else { continue };
            for j in 0..m.cols {
                m.data.swap(row * m.cols + j, p * m.cols + j);
            }
            let inv = m.get(row, col).clone();
            for j in 0..m.cols {
                let v = m.get(row, j) / &inv;
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i != row && !m.get(i, col).is_zero() {
                    let f = m.get(i, col).clone();
                    for j in 0..m.cols {
                        let v = m.get(i, j) - &f * m.get(row, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn determinant(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let mut piv = None;
            for i in col..n {
                if !m.get(i, col).is_zero() {
                    piv = Some(i);
                    break;
                }
            }
            let Some(p) = piv else { return Rat::zero() };
            if p != col {
                for j in 0..n {
                    m.data.swap(col * n + j, p * n + j);
                }
                det = -det;
            }
            let lead = m.get(col, col).clone();
            det *= &lead;
            for i in col + 1..n {
                if !m.get(i, col).is_zero() {
                    let f = m.get(i, col) / &lead;
                    for j in col..n {
                        let v = m.get(i, j) - &f * m.get(col, j);
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }
}

/// Row-style Hermite normal form: returns (H, U) with U unimodular and
/// H = U * M, pivots positive and entries above a pivot reduced.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let (rows, cols) = (h.rows(), h.cols());
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        // clear below pivot_row in this column by gcd row operations
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..rows {
                if !h.get(i, col).is_zero() {
                    let better = match best {
                        None => true,
                        Some(b) => h.get(i, col).abs() < h.get(b, col).abs(),
                    };
                    if better {
                        best = Some(i);
                    }
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(pivot_row, b);
            u.swap_rows(pivot_row, b);
            let mut done = true;
            let p = h.get(pivot_row, col).clone();
            for i in pivot_row + 1..rows {
                if !h.get(i, col).is_zero() {
                    let q = -(h.get(i, col).div_floor(&p));
                    h.add_row(i, pivot_row, &q);
                    u.add_row(i, pivot_row, &q);
                    if !h.get(i, col).is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h.get(pivot_row, col).is_zero() {
            continue;
        }
        if h.get(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let p = h.get(pivot_row, col).clone();
        for i in 0..pivot_row {
            let q = -(h.get(i, col).div_floor(&p));
            if !q.is_zero() {
                h.add_row(i, pivot_row, &q);
                u.add_row(i, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Smith normal form: returns (S, U, V) with S = U * M * V diagonal,
/// d_1 | d_2 | ... and U, V unimodular.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut s = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut v = IntMatrix::identity(m.cols());
    let n = m.rows().min(m.cols());
    let mut t = 0;
    while t < n {
        // find smallest nonzero entry in the remaining block
        let mut piv: Option<(usize, usize)> = None;
        for i in t..s.rows() {
            for j in t..s.cols() {
                if !s.get(i, j).is_zero() {
                    let better = match &piv {
                        None => true,
                        Some((pi, pj)) => s.get(i, j).abs() < s.get(*pi, *pj).abs(),
                    };
                    if better {
                        piv = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = piv else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        let mut clean = true;
        let p = s.get(t, t).clone();
        for i in t + 1..s.rows() {
            if !s.get(i, t).is_zero() {
                let q = -(s.get(i, t).div_floor(&p));
                s.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !s.get(i, t).is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..s.cols() {
            if !s.get(t, j).is_zero() {
                let q = -(s.get(t, j).div_floor(&p));
                s.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !s.get(t, j).is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // pivot must divide every entry of the remaining block
        let p = s.get(t, t).clone();
        let mut divides_all = true;
        'scan: for i in t + 1..s.rows() {
            for j in t + 1..s.cols() {
                if !(s.get(i, j) % &p).is_zero() {
                    // fold the offending row into row t and restart the step
                    s.add_row(t, i, &Int::one());
                    u.add_row(t, i, &Int::one());
                    divides_all = false;
                    break 'scan;
                }
            }
        }
        if !divides_all {
            continue;
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    (s, u, v)
}

/// Finitely generated abelian group Z^free_rank x Z/d_1 x ... x Z/d_k with
/// the divisibility chain d_1 | d_2 | ... and every d_i >= 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<Int>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for d in &self.torsion {
            parts.push(format!("Z/{}", d));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" x ")
        }
    }

    pub fn reduce(&self, el: &mut GroupElement) {
        assert_eq!(el.free.len(), self.free_rank);
        assert_eq!(el.torsion.len(), self.torsion.len());
        for (t, d) in el.torsion.iter_mut().zip(&self.torsion) {
            *t = t.mod_floor(d);
        }
    }
}

/// An element of an `AbelianGroup`; torsion coordinates reduced mod d_i.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupElement {
    pub free: Vec<Int>,
    pub torsion: Vec<Int>,
}

impl GroupElement {
    pub fn zero(group: &AbelianGroup) -> Self {
        GroupElement {
            free: vec![Int::zero(); group.free_rank],
            torsion: vec![Int::zero(); group.torsion.len()],
        }
    }

    pub fn add(&self, other: &Self, group: &AbelianGroup) -> Self {
        let mut out = GroupElement {
            free: self
                .free
                .iter()
                .zip(&other.free)
                .map(|(a, b)| a + b)
                .collect(),
            torsion: self
                .torsion
                .iter()
                .zip(&other.torsion)
                .map(|(a, b)| a + b)
                .collect(),
        };
        group.reduce(&mut out);
        out
    }

    pub fn sub(&self, other: &Self, group: &AbelianGroup) -> Self {
        let mut out = GroupElement {
            free: self
                .free
                .iter()
                .zip(&other.free)
                .map(|(a, b)| a - b)
                .collect(),
            torsion: self
                .torsion
                .iter()
                .zip(&other.torsion)
                .map(|(a, b)| a - b)
                .collect(),
        };
        group.reduce(&mut out);
        out
    }

    pub fn scale(&self, k: &Int, group: &AbelianGroup) -> Self {
        let mut out = GroupElement {
            free: self.free.iter().map(|a| a * k).collect(),
            torsion: self.torsion.iter().map(|a| a * k).collect(),
        };
        group.reduce(&mut out);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|x| x.is_zero()) && self.torsion.iter().all(|x| x.is_zero())
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.free.iter().map(|x| x.to_string()).collect();
        parts.extend(self.torsion.iter().map(|x| format!("{}~", x)));
        format!("[{}]", parts.join(", "))
    }
}

/// Projection Z^domain_dim -> K splitting into free and torsion coordinates.
#[derive(Debug, Clone)]
pub struct GradingMap {
    pub domain_dim: usize,
    pub group: AbelianGroup,
    /// free_rank x domain_dim
    pub matrix_free: IntMatrix,
    /// torsion.len() x domain_dim, row i read mod d_i
    pub matrix_torsion: IntMatrix,
}

impl GradingMap {
    pub fn apply(&self, x: &[Int]) -> GroupElement {
        assert_eq!(x.len(), self.domain_dim);
        let mut el = GroupElement {
            free: self.matrix_free.mul_vec(x),
            torsion: self.matrix_torsion.mul_vec(x),
        };
        self.group.reduce(&mut el);
        el
    }

    pub fn apply_unit(&self, i: usize) -> GroupElement {
        let mut x = vec![Int::zero(); self.domain_dim];
        x[i] = Int::one();
        self.apply(&x)
    }
}

/// Cokernel Z^rows(M) / column-span(M), together with the projection map.
pub fn cokernel(m: &IntMatrix) -> (AbelianGroup, GradingMap) {
    let (s, u, _v) = smith_normal_form(m);
    let n = m.rows();
    let rank_bound = m.rows().min(m.cols());
    let mut torsion_rows = Vec::new();
    let mut torsion = Vec::new();
    let mut rank = 0;
    for t in 0..rank_bound {
        let d = s.get(t, t);
        if d.is_zero() {
            break;
        }
        rank += 1;
        if d.abs() > Int::one() {
            torsion.push(d.abs());
            torsion_rows.push(u.row(t));
        }
    }
    let free_rows: Vec<Vec<Int>> = (rank..n).map(|i| u.row(i)).collect();
    let group = AbelianGroup {
        free_rank: n - rank,
        torsion,
    };
    let map = GradingMap {
        domain_dim: n,
        group: group.clone(),
        matrix_free: IntMatrix::from_rows(if free_rows.is_empty() {
            vec![]
        } else {
            free_rows
        }),
        matrix_torsion: IntMatrix::from_rows(torsion_rows),
    };
    // from_rows of an empty vec has 0 cols; fix up the shape
    let map = GradingMap {
        matrix_free: reshape_empty(map.matrix_free, n),
        matrix_torsion: reshape_empty(map.matrix_torsion, n),
        ..map
    };
    (group, map)
}

fn reshape_empty(m: IntMatrix, cols: usize) -> IntMatrix {
    if m.rows() == 0 {
        IntMatrix::zero(0, cols)
    } else {
        m
    }
}

pub fn make_primitive(v: &[Int]) -> Result<(Vec<Int>, Int)> {
    primitive_int_checked(v)
}

fn primitive_int_checked(v: &[Int]) -> Result<(Vec<Int>, Int)> {
    crate::num::primitive_int(v).ok_or(Error::ZeroVector)
}

/// Exact solution of M x = b over the rationals. Returns None iff the system
/// is inconsistent, otherwise a particular solution and a basis of the kernel.
pub fn solve_rational(m: &RatMatrix, b: &[Rat]) -> Option<(Vec<Rat>, Vec<Vec<Rat>>)> {
    assert_eq!(m.rows(), b.len());
    let rows = m.rows();
    let cols = m.cols();
    let mut aug = RatMatrix::zero(rows, cols + 1);
    for i in 0..rows {
        for j in 0..cols {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, cols, b[i].clone());
    }
    let (red, pivots) = aug.rref();
    // inconsistent iff a pivot lands in the augmented column
    if pivots.contains(&cols) {
        return None;
    }
    let mut particular = vec![Rat::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        particular[pc] = red.get(r, cols).clone();
    }
    let mut basis = Vec::new();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut vec = vec![Rat::zero(); cols];
        vec[free] = Rat::one();
        for (r, &pc) in pivots.iter().enumerate() {
            vec[pc] = -red.get(r, free).clone();
        }
        basis.push(vec);
    }
    Some((particular, basis))
}

/// Basis of the rational nullspace of M.
pub fn nullspace(m: &RatMatrix) -> Vec<Vec<Rat>> {
    let b = vec![Rat::zero(); m.rows()];
    solve_rational(m, &b)
        .expect("homogeneous system is consistent")
        .1
}

/// Integer solvability of M x = b; returns a solution if one exists.
pub fn solve_integer(m: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(m.rows(), b.len());
    let (s, u, v) = smith_normal_form(m);
    let ub = u.mul_vec(b);
    let n = m.cols();
    let rank_bound = m.rows().min(m.cols());
    let mut y = vec![Int::zero(); n];
    for i in 0..m.rows() {
        let d = if i < rank_bound {
            s.get(i, i).clone()
        } else {
            Int::zero()
        };
        if d.is_zero() {
            if !ub[i].is_zero() {
                return None;
            }
        } else {
            let (q, r) = ub[i].div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(v.mul_vec(&y))
}
