//! Data model and validated constructor for varieties given by matrix data
//! (A, P) with a fan or an ample class: relations, gradings, anticanonical
//! class, orbit faces, divisor-class cones, Fano and factoriality tests.

use crate::error::{Error, Result};
use crate::lattice::{
    cokernel, solve_integer, AbelianGroup, GradingMap, GroupElement, IntMatrix, RatMatrix,
};
use crate::num::{int_to_rat, Int, Rat};
use crate::polyhedral::cone::relint_membership;
use crate::polyhedral::{Cone, Fan};
use num_traits::{One, Zero};
use std::sync::OnceLock;

/// Orthant face, as the sorted list of generator indices present in it.
pub type FaceIndex = Vec<usize>;

#[derive(Debug, Clone)]
pub enum Model {
    Fan(Fan),
    AmpleClass(GroupElement),
}

/// One defining relation: a signed-minor coefficient for each monomial block.
#[derive(Debug, Clone)]
pub struct Relation {
    pub index: usize,
    /// (coefficient, exponent vector in Z^{n+m})
    pub terms: Vec<(Rat, Vec<u64>)>,
}

#[derive(Debug, Clone)]
pub struct GavData {
    complexity: usize,
    torus_rank: usize,
    block_sizes: Vec<usize>,
    free_gens: usize,
    exponents: Vec<Vec<u64>>,
    a_mat: RatMatrix,
    p_mat: IntMatrix,
    model: Model,
    grading: OnceLock<(AbelianGroup, GradingMap)>,
    fan: OnceLock<std::result::Result<Fan, String>>,
}

impl GavData {
    /// Build from raw matrices; exponents are read off the upper block of P.
    /// Call `validate` to obtain the full list of violations.
    pub fn new(
        a_mat: RatMatrix,
        p_mat: IntMatrix,
        block_sizes: Vec<usize>,
        free_gens: usize,
        model: Model,
    ) -> Result<GavData> {
        let c = a_mat
            .rows()
            .checked_sub(1)
            .ok_or_else(|| Error::InvalidData("matrix A needs at least one row".into()))?;
        let r = block_sizes
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::InvalidData("at least one block is required".into()))?;
        if a_mat.cols() != r + 1 {
            return Err(Error::InvalidData(format!(
                "A has {} columns, expected {}",
                a_mat.cols(),
                r + 1
            )));
        }
        let n: usize = block_sizes.iter().sum();
        if p_mat.cols() != n + free_gens {
            return Err(Error::InvalidData(format!(
                "P has {} columns, expected {}",
                p_mat.cols(),
                n + free_gens
            )));
        }
        if p_mat.rows() < r {
            return Err(Error::InvalidData(format!(
                "P has {} rows, needs at least {}",
                p_mat.rows(),
                r
            )));
        }
        let s = p_mat.rows() - r;
        // exponents from the upper block; block 0 is stored negated
        let mut exponents = Vec::with_capacity(r + 1);
        let mut col = 0;
        for (i, &ni) in block_sizes.iter().enumerate() {
            let mut li = Vec::with_capacity(ni);
            for _ in 0..ni {
                let e = if i == 0 {
                    if r == 0 {
                        Int::one()
                    } else {
                        -p_mat.get(0, col).clone()
                    }
                } else {
                    p_mat.get(i - 1, col).clone()
                };
                let val: u64 = e.to_string().parse().map_err(|_| {
                    Error::InvalidData(format!("column {} has a nonpositive exponent", col))
                })?;
                li.push(val);
                col += 1;
            }
            exponents.push(li);
        }
        Ok(GavData {
            complexity: c,
            torus_rank: s,
            block_sizes,
            free_gens,
            exponents,
            a_mat,
            p_mat,
            model,
            grading: OnceLock::new(),
            fan: OnceLock::new(),
        })
    }

    pub fn complexity(&self) -> usize {
        self.complexity
    }

    pub fn arrangement_size(&self) -> usize {
        self.block_sizes.len() - 1
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn free_gen_count(&self) -> usize {
        self.free_gens
    }

    pub fn exponents(&self) -> &[Vec<u64>] {
        &self.exponents
    }

    pub fn a_matrix(&self) -> &RatMatrix {
        &self.a_mat
    }

    pub fn p_matrix(&self) -> &IntMatrix {
        &self.p_mat
    }

    pub fn model(&self) -> &Model {
        &self.model
    }

    pub fn dim(&self) -> usize {
        self.torus_rank + self.complexity
    }

    pub fn n_total(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    pub fn gen_count(&self) -> usize {
        self.n_total() + self.free_gens
    }

    pub fn ambient_rank(&self) -> usize {
        self.p_mat.rows()
    }

    /// Column index of generator (block, j), j zero-based within the block.
    pub fn col_index(&self, block: usize, j: usize) -> usize {
        let base: usize = self.block_sizes[..block].iter().sum();
        base + j
    }

    /// (block, j) of a column in the monomial range, or None for a free
    /// generator column.
    pub fn col_block(&self, col: usize) -> Option<(usize, usize)> {
        let mut base = 0;
        for (i, &ni) in self.block_sizes.iter().enumerate() {
            if col < base + ni {
                return Some((i, col - base));
            }
            base += ni;
        }
        None
    }

    pub fn column(&self, col: usize) -> Vec<Int> {
        self.p_mat.col(col)
    }

    /// Full invariant scan; empty list means valid.
    pub fn validate(&self) -> Vec<String> {
        let mut bad = Vec::new();
        let c = self.complexity;
        let r = self.arrangement_size();
        if !(r >= c && c > 0) {
            bad.push(format!("need r >= c > 0, got r = {}, c = {}", r, c));
        }
        // any c+1 columns of A linearly independent
        if c + 1 <= r + 1 {
            for subset in subsets_of_size(r + 1, c + 1) {
                let sub = RatMatrix::from_rows(
                    (0..c + 1)
                        .map(|i| {
                            subset
                                .iter()
                                .map(|&j| self.a_mat.get(i, j).clone())
                                .collect()
                        })
                        .collect(),
                );
                if sub.rank() < c + 1 {
                    bad.push(format!("columns {:?} of A are dependent", subset));
                }
            }
        }
        // columns of P: primitive, pairwise different, spanning
        let cols = self.gen_count();
        for j in 0..cols {
            let col = self.p_mat.col(j);
            if col.iter().all(|x| x.is_zero()) {
                bad.push(format!("column {} of P is zero", j));
                continue;
            }
            let (_, scale) = crate::num::primitive_int(&col).unwrap();
            if scale != Int::one() {
                bad.push(format!("column {} of P is not primitive", j));
            }
        }
        for a in 0..cols {
            for b in a + 1..cols {
                if self.p_mat.col(a) == self.p_mat.col(b) {
                    bad.push(format!("columns {} and {} of P coincide", a, b));
                }
            }
        }
        if self.p_mat.rank() < self.p_mat.rows() {
            bad.push("columns of P do not span the ambient space".into());
        }
        // upper-block pattern
        for j in 0..cols {
            match self.col_block(j) {
                Some((block, jj)) => {
                    let l = Int::from(self.exponents[block][jj]);
                    for row in 0..r {
                        let want = if block == 0 {
                            -l.clone()
                        } else if row + 1 == block {
                            l.clone()
                        } else {
                            Int::zero()
                        };
                        if *self.p_mat.get(row, j) != want {
                            bad.push(format!(
                                "column {} breaks the block pattern at row {}",
                                j, row
                            ));
                        }
                    }
                }
                None => {
                    for row in 0..r {
                        if !self.p_mat.get(row, j).is_zero() {
                            bad.push(format!(
                                "free generator column {} has nonzero block rows",
                                j
                            ));
                        }
                    }
                }
            }
        }
        if let Model::Fan(f) = &self.model {
            if f.ambient_dim != self.ambient_rank() {
                bad.push("fan ambient dimension differs from rank of P".into());
            }
            for (i, ray) in f.rays.iter().enumerate() {
                if (0..cols).all(|j| self.p_mat.col(j) != *ray) {
                    bad.push(format!("fan ray {} is not a column of P", i));
                }
            }
        }
        bad
    }

    pub fn validated(self) -> Result<GavData> {
        let bad = self.validate();
        if bad.is_empty() {
            Ok(self)
        } else {
            Err(Error::InvalidData(bad.join("; ")))
        }
    }

    /// Class group and degree map: cokernel of the transpose of P.
    pub fn grading(&self) -> &(AbelianGroup, GradingMap) {
        self.grading
            .get_or_init(|| cokernel(&self.p_mat.transpose()))
    }

    pub fn class_group(&self) -> &AbelianGroup {
        &self.grading().0
    }

    pub fn degree_map(&self) -> &GradingMap {
        &self.grading().1
    }

    pub fn generator_degree(&self, col: usize) -> GroupElement {
        self.degree_map().apply_unit(col)
    }

    pub fn generator_degrees(&self) -> Vec<GroupElement> {
        (0..self.gen_count())
            .map(|j| self.generator_degree(j))
            .collect()
    }

    /// Signed maximal minor of A over the given block selection, with the
    /// Laplace sign for position k in the bottom row.
    fn relation_coefficient(&self, selected: &[usize], k: usize) -> Rat {
        let c = self.complexity;
        let minor_cols: Vec<usize> = selected
            .iter()
            .enumerate()
            .filter(|(kk, _)| *kk != k)
            .map(|(_, &b)| b)
            .collect();
        let minor = RatMatrix::from_rows(
            (0..c + 1)
                .map(|i| {
                    minor_cols
                        .iter()
                        .map(|&j| self.a_mat.get(i, j).clone())
                        .collect()
                })
                .collect(),
        )
        .determinant();
        let sign = if (c + 1 + k) % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        sign * minor
    }

    /// The r - c defining relations as signed maximal minors of A against
    /// the block monomials.
    pub fn relations(&self) -> Result<Vec<Relation>> {
        let c = self.complexity;
        let r = self.arrangement_size();
        let total = self.gen_count();
        let mut out = Vec::new();
        for t in 1..=r - c {
            let selected: Vec<usize> = (0..=c).chain(std::iter::once(c + t)).collect();
            let mut terms = Vec::with_capacity(c + 2);
            for (k, &blk) in selected.iter().enumerate() {
                let coeff = self.relation_coefficient(&selected, k);
                if coeff.is_zero() {
                    return Err(Error::InvalidData(format!(
                        "vanishing coefficient in relation {}: A columns degenerate",
                        t
                    )));
                }
                let mut exp = vec![0u64; total];
                for j in 0..self.block_sizes[blk] {
                    exp[self.col_index(blk, j)] = self.exponents[blk][j];
                }
                terms.push((coeff, exp));
            }
            out.push(Relation { index: t, terms });
        }
        Ok(out)
    }

    pub fn relation_degree(&self, rel: &Relation) -> GroupElement {
        let q = self.degree_map();
        let exp: Vec<Int> = rel.terms[0].1.iter().map(|&e| Int::from(e)).collect();
        q.apply(&exp)
    }

    /// Every term of every relation must land in the same degree.
    pub fn relations_homogeneous(&self) -> Result<bool> {
        let q = self.degree_map();
        for rel in self.relations()? {
            let d0 = self.relation_degree(&rel);
            for (_, exp) in &rel.terms {
                let e: Vec<Int> = exp.iter().map(|&x| Int::from(x)).collect();
                if q.apply(&e) != d0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// -K_X = sum of generator degrees minus the relation degrees.
    pub fn anticanonical_class(&self) -> Result<GroupElement> {
        let group = self.class_group().clone();
        let mut acc = GroupElement::zero(&group);
        for w in self.generator_degrees() {
            acc = acc.add(&w, &group);
        }
        for rel in self.relations()? {
            let d = self.relation_degree(&rel);
            acc = acc.sub(&d, &group);
        }
        Ok(acc)
    }

    /// Blocks from which the face omits at least one monomial generator.
    pub fn missing_blocks(&self, face: &FaceIndex) -> Vec<usize> {
        let present: std::collections::BTreeSet<usize> = face.iter().copied().collect();
        let mut out = Vec::new();
        for (i, &ni) in self.block_sizes.iter().enumerate() {
            for j in 0..ni {
                if !present.contains(&self.col_index(i, j)) {
                    out.push(i);
                    break;
                }
            }
        }
        out
    }

    /// Combinatorial orbit criterion: the orbit of the face meets the zero
    /// locus of the relations iff at most c blocks are incomplete, or every
    /// block is (then all block monomials vanish and the relations hold
    /// trivially).
    pub fn is_xbar_face(&self, face: &FaceIndex) -> bool {
        let missing = self.missing_blocks(face);
        missing.len() <= self.complexity || missing.len() == self.block_sizes.len()
    }

    /// Exact linear-algebra oracle for the orbit criterion: parametrize the
    /// solution space of the relation system with the prescribed vanishing
    /// pattern and check that no surviving block-monomial coordinate
    /// vanishes identically on it.
    pub fn is_xbar_face_oracle(&self, face: &FaceIndex) -> Result<bool> {
        let c = self.complexity;
        let r = self.arrangement_size();
        let missing = self.missing_blocks(face);
        let missing_set: std::collections::BTreeSet<usize> = missing.iter().copied().collect();
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for t in 1..=r - c {
            let selected: Vec<usize> = (0..=c).chain(std::iter::once(c + t)).collect();
            let mut row = vec![Rat::zero(); r + 1];
            for (k, &blk) in selected.iter().enumerate() {
                row[blk] = self.relation_coefficient(&selected, k);
            }
            rows.push(row);
        }
        for &i in &missing {
            let mut row = vec![Rat::zero(); r + 1];
            row[i] = Rat::one();
            rows.push(row);
        }
        let basis = if rows.is_empty() {
            (0..r + 1)
                .map(|i| {
                    let mut v = vec![Rat::zero(); r + 1];
                    v[i] = Rat::one();
                    v
                })
                .collect()
        } else {
            crate::lattice::nullspace(&RatMatrix::from_rows(rows))
        };
        for i in 0..=r {
            if missing_set.contains(&i) {
                continue;
            }
            if basis.iter().all(|b| b[i].is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn all_faces(&self) -> Vec<FaceIndex> {
        let n = self.gen_count();
        assert!(n < 63, "generator count too large for subset enumeration");
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u64..(1u64 << n) {
            let face: FaceIndex = (0..n).filter(|&j| mask & (1 << j) != 0).collect();
            out.push(face);
        }
        out
    }

    fn free_degrees_of_face(&self, face: &FaceIndex) -> Vec<Vec<Rat>> {
        face.iter()
            .map(|&j| int_to_rat(&self.generator_degree(j).free))
            .collect()
    }

    /// Membership of `u` in the subgroup of K generated by the degrees of
    /// the face generators.
    pub fn in_degree_subgroup(&self, face: &FaceIndex, u: &GroupElement) -> bool {
        let (group, _) = self.grading();
        let rho = group.free_rank;
        let t = group.torsion.len();
        let cols = face.len() + t;
        let rows = rho + t;
        let mut m = IntMatrix::zero(rows, cols);
        for (jj, &col) in face.iter().enumerate() {
            let w = self.generator_degree(col);
            for i in 0..rho {
                m.set(i, jj, w.free[i].clone());
            }
            for i in 0..t {
                m.set(rho + i, jj, w.torsion[i].clone());
            }
        }
        for i in 0..t {
            m.set(rho + i, face.len() + i, group.torsion[i].clone());
        }
        let mut rhs = u.free.clone();
        rhs.extend(u.torsion.iter().cloned());
        solve_integer(&m, &rhs).is_some()
    }

    /// Orbit faces whose degree-cone relative interior contains the free
    /// part of `u`. The test is rational: some positive multiple of `u` is
    /// then automatically representable over the involved degrees including
    /// torsion, so no separate integral condition applies.
    pub fn x_faces(&self, u: &GroupElement) -> Vec<FaceIndex> {
        let rho = self.class_group().free_rank;
        self.all_faces()
            .into_iter()
            .filter(|f| self.is_xbar_face(f))
            .filter(|f| relint_membership(rho, &self.free_degrees_of_face(f), &int_to_rat(&u.free)))
            .collect()
    }

    /// Smallest positive multiple of `u` lying in the subgroup generated by
    /// the degrees of the face generators, if any.
    pub fn degree_subgroup_multiple(&self, face: &FaceIndex, u: &GroupElement) -> Option<u64> {
        let group = self.class_group().clone();
        let mut acc = GroupElement::zero(&group);
        for n in 1..=64u64 {
            acc = acc.add(u, &group);
            if self.in_degree_subgroup(face, &acc) {
                return Some(n);
            }
        }
        None
    }

    /// Faces relevant to the chosen model: for an ample class, its X-faces;
    /// for a fan, the orbit faces whose complement maps into the fan.
    pub fn relevant_faces(&self) -> Result<Vec<FaceIndex>> {
        match &self.model {
            Model::AmpleClass(u) => Ok(self.x_faces(u)),
            Model::Fan(fan) => {
                let mut out = Vec::new();
                for f in self.all_faces() {
                    if !self.is_xbar_face(&f) {
                        continue;
                    }
                    let comp = self.complement_cone(&f);
                    if fan.contains_cone(&comp)? {
                        out.push(f);
                    }
                }
                Ok(out)
            }
        }
    }

    /// P(complement of the face): the cone spanned by the excluded columns.
    pub fn complement_cone(&self, face: &FaceIndex) -> Cone {
        let present: std::collections::BTreeSet<usize> = face.iter().copied().collect();
        let gens: Vec<Vec<Int>> = (0..self.gen_count())
            .filter(|j| !present.contains(j))
            .map(|j| self.p_mat.col(j))
            .collect();
        Cone::from_generators(self.ambient_rank(), gens, Vec::new())
    }

    /// Fan whose maximal cones are the inclusion-maximal complement images
    /// of the X-faces of `u`.
    pub fn fan_from_ample(&self, u: &GroupElement) -> Result<Fan> {
        let xfaces = self.x_faces(u);
        if xfaces.is_empty() {
            return Err(Error::NotAmple);
        }
        let cones: Vec<Cone> = xfaces.iter().map(|f| self.complement_cone(f)).collect();
        for c in &cones {
            if !c.is_pointed() {
                return Err(Error::NotAmple);
            }
        }
        let mut maximal: Vec<&Cone> = Vec::new();
        for c in &cones {
            if cones.iter().any(|d| d != c && d.contains_cone(c)) {
                continue;
            }
            if !maximal.contains(&c) {
                maximal.push(c);
            }
        }
        let dim = self.ambient_rank();
        let columns: Vec<Vec<Int>> = (0..self.gen_count()).map(|j| self.p_mat.col(j)).collect();
        let mut max_cones = Vec::new();
        for c in maximal {
            let mut idx = Vec::new();
            for ray in c.rays() {
                match columns.iter().position(|col| col == ray) {
                    Some(j) => idx.push(j),
                    None => {
                        return Err(Error::Msg(
                            "ample model produced a cone with a non-column ray".into(),
                        ))
                    }
                }
            }
            max_cones.push(idx);
        }
        let fan = Fan::new(dim, columns, max_cones);
        let used: std::collections::BTreeSet<usize> =
            fan.maximal_cones.iter().flatten().copied().collect();
        if used.len() != self.gen_count() {
            return Err(Error::NotAmple);
        }
        Ok(fan)
    }

    /// The fan of the model, constructing it from the ample class if needed.
    pub fn fan(&self) -> Result<&Fan> {
        let res = self.fan.get_or_init(|| match &self.model {
            Model::Fan(f) => Ok(f.clone()),
            Model::AmpleClass(u) => self.fan_from_ample(u).map_err(|e| e.to_string()),
        });
        match res {
            Ok(f) => Ok(f),
            Err(e) => Err(Error::Msg(e.clone())),
        }
    }

    /// Effective cone: spanned by the free parts of all generator degrees.
    pub fn effective_cone(&self) -> Cone {
        let rho = self.class_group().free_rank;
        let gens: Vec<Vec<Int>> = self
            .generator_degrees()
            .iter()
            .map(|w| w.free.clone())
            .filter(|v| !v.iter().all(|x| x.is_zero()))
            .collect();
        Cone::from_generators(rho, gens, Vec::new())
    }

    /// Semiample cone: intersection of the degree cones over the relevant
    /// faces.
    pub fn semiample_cone(&self) -> Result<Cone> {
        let rho = self.class_group().free_rank;
        let mut acc = Cone::full_space(rho);
        for f in self.relevant_faces()? {
            let gens: Vec<Vec<Int>> = self
                .free_degrees_of_face(&f)
                .iter()
                .map(|g| crate::num::primitive_direction(g))
                .filter(|v| !v.iter().all(|x| x.is_zero()))
                .collect();
            let qcone = Cone::from_generators(rho, gens, Vec::new());
            acc = acc.intersect(&qcone)?;
        }
        Ok(acc)
    }

    /// The cones of divisor classes: effective and semiample, both in the
    /// rational class group. The ample cone is the relative interior of the
    /// semiample cone; membership is `ample_contains`.
    pub fn divisor_cones(&self) -> Result<DivisorCones> {
        Ok(DivisorCones {
            effective: self.effective_cone(),
            semiample: self.semiample_cone()?,
        })
    }

    /// Membership in the ample cone: the free part must sit in the relative
    /// interior of every relevant degree cone. A torsion-only class group
    /// has no ample classes (no projective model).
    pub fn ample_contains(&self, w: &GroupElement) -> Result<bool> {
        let rho = self.class_group().free_rank;
        if rho == 0 {
            return Ok(false);
        }
        let faces = self.relevant_faces()?;
        if faces.is_empty() {
            return Ok(false);
        }
        for f in faces {
            if !relint_membership(rho, &self.free_degrees_of_face(&f), &int_to_rat(&w.free)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_fano(&self) -> Result<bool> {
        let mk = self.anticanonical_class()?;
        self.ample_contains(&mk)
    }

    /// Every relevant degree cone of full dimension in K tensor Q.
    pub fn is_q_factorial(&self) -> Result<bool> {
        let rho = self.class_group().free_rank;
        for f in self.relevant_faces()? {
            let gens = self.free_degrees_of_face(&f);
            let rank = if gens.is_empty() {
                0
            } else {
                RatMatrix::from_rows(gens).rank()
            };
            if rank < rho {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn picard_number(&self) -> Result<usize> {
        if !self.is_q_factorial()? {
            return Err(Error::NotQFactorial);
        }
        Ok(self.class_group().free_rank)
    }

    /// Largest q with -K divisible by q in the class group.
    pub fn fano_index(&self) -> Result<Int> {
        if !self.is_fano()? {
            return Err(Error::NotFano);
        }
        let group = self.class_group().clone();
        let mk = self.anticanonical_class()?;
        let mut g = Int::zero();
        for x in &mk.free {
            g = num_integer::Integer::gcd(&g, x);
        }
        let divisible = |q: &Int| -> bool {
            if q.is_zero() {
                return false;
            }
            for x in &mk.free {
                if !(x % q).is_zero() {
                    return false;
                }
            }
            for (a, d) in mk.torsion.iter().zip(&group.torsion) {
                let gcd = num_integer::Integer::gcd(q, d);
                if !(a % &gcd).is_zero() {
                    return false;
                }
            }
            true
        };
        let bound = if g.is_zero() {
            group
                .torsion
                .iter()
                .fold(Int::one(), |acc, d| num_integer::Integer::lcm(&acc, d))
        } else {
            g
        };
        let mut best = Int::one();
        let mut q = Int::one();
        while q <= bound {
            if (bound.clone() % q.clone()).is_zero() && divisible(&q) {
                best = q.clone();
            }
            q += 1;
        }
        Ok(best)
    }

    /// Dimension of the graded piece of the coordinate ring modulo the single
    /// relation: monomial count in degree w minus the count in w - deg(g).
    pub fn graded_component_dim(&self, w: &GroupElement) -> Result<ComponentDim> {
        let rels = self.relations()?;
        if rels.len() != 1 {
            return Err(Error::MultiRelation);
        }
        let group = self.class_group().clone();
        let degg = self.relation_degree(&rels[0]);
        let hi = self.monomial_count(w)?;
        let lo = self.monomial_count(&w.sub(&degg, &group))?;
        match (hi, lo) {
            (ComponentDim::Finite(a), ComponentDim::Finite(b)) => {
                Ok(ComponentDim::Finite(a.saturating_sub(b)))
            }
            _ => Ok(ComponentDim::Infinite),
        }
    }

    /// Number of exponent vectors of degree exactly w (free and torsion).
    pub fn monomial_count(&self, w: &GroupElement) -> Result<ComponentDim> {
        let fiber = crate::dual::fiber_polytope(self.degree_map(), w);
        if fiber.is_empty_set() {
            return Ok(ComponentDim::Finite(0));
        }
        if !fiber.is_bounded() {
            return Ok(ComponentDim::Infinite);
        }
        let q = self.degree_map();
        let count = fiber
            .lattice_points()?
            .into_iter()
            .filter(|x| &q.apply(x) == w)
            .count();
        Ok(ComponentDim::Finite(count))
    }
}

#[derive(Debug, Clone)]
pub struct DivisorCones {
    pub effective: Cone,
    pub semiample: Cone,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentDim {
    Finite(usize),
    Infinite,
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec(0, n, k, &mut cur, &mut out);
    out
}
