//! Exact rational polyhedral cones with lineality, canonical on
//! construction: extreme rays as sorted primitive integer vectors reduced
//! modulo the lineality space, lineality as an echelon basis.

use super::dd;
use super::simplex::solve_feasibility;
use crate::error::{Error, Result};
use crate::num::{dot_rat_int, int_to_rat, Int, Rat};
use num_traits::{One, Signed, Zero};
use std::sync::OnceLock;

#[derive(Debug, Clone)]
pub struct Cone {
    dim: usize,
    rays: Vec<Vec<Int>>,
    lineality: Vec<Vec<Int>>,
    hrep: OnceLock<ConeHRep>,
}

/// Constraint representation: <a,x> >= 0 for a in ineqs, <e,x> = 0 for eqs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeHRep {
    pub ineqs: Vec<Vec<Int>>,
    pub eqs: Vec<Vec<Int>>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.rays == other.rays && self.lineality == other.lineality
    }
}

impl Eq for Cone {}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cone {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.rays, &self.lineality).cmp(&(&other.rays, &other.lineality))
    }
}

impl Cone {
    /// Canonical cone generated by the given rays and lineality vectors.
    /// Hidden lineality (opposite ray pairs) is detected and normalized.
    pub fn from_generators(dim: usize, rays: Vec<Vec<Int>>, lineality: Vec<Vec<Int>>) -> Cone {
        assert!(rays.iter().all(|r| r.len() == dim));
        assert!(lineality.iter().all(|l| l.len() == dim));
        let (ineqs, eqs) = dd::constraints_from_generators(dim, &rays, &lineality);
        let ineqs_rat: Vec<Vec<Rat>> = ineqs.iter().map(|v| int_to_rat(v)).collect();
        let eqs_rat: Vec<Vec<Rat>> = eqs.iter().map(|v| int_to_rat(v)).collect();
        let gens = dd::generators_from_constraints(dim, &ineqs_rat, &eqs_rat);
        let hrep = OnceLock::new();
        let _ = hrep.set(ConeHRep { ineqs, eqs });
        Cone {
            dim,
            rays: gens.rays,
            lineality: gens.lineality,
            hrep,
        }
    }

    pub fn from_rays(dim: usize, rays: Vec<Vec<Int>>) -> Cone {
        Self::from_generators(dim, rays, Vec::new())
    }

    pub fn from_constraints(dim: usize, ineqs: Vec<Vec<Int>>, eqs: Vec<Vec<Int>>) -> Cone {
        let ineqs_rat: Vec<Vec<Rat>> = ineqs.iter().map(|v| int_to_rat(v)).collect();
        let eqs_rat: Vec<Vec<Rat>> = eqs.iter().map(|v| int_to_rat(v)).collect();
        let gens = dd::generators_from_constraints(dim, &ineqs_rat, &eqs_rat);
        // not storing the raw constraints: the cached H-rep is kept minimal
        Cone {
            dim,
            rays: gens.rays,
            lineality: gens.lineality,
            hrep: OnceLock::new(),
        }
    }

    pub fn zero(dim: usize) -> Cone {
        Cone {
            dim,
            rays: Vec::new(),
            lineality: Vec::new(),
            hrep: OnceLock::new(),
        }
    }

    pub fn full_space(dim: usize) -> Cone {
        Self::from_generators(
            dim,
            Vec::new(),
            (0..dim)
                .map(|i| {
                    let mut v = vec![Int::zero(); dim];
                    v[i] = Int::one();
                    v
                })
                .collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<Int>] {
        &self.lineality
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn hrep(&self) -> &ConeHRep {
        self.hrep.get_or_init(|| {
            let (ineqs, eqs) =
                dd::constraints_from_generators(self.dim, &self.rays, &self.lineality);
            ConeHRep { ineqs, eqs }
        })
    }

    pub fn dim(&self) -> usize {
        let mut vecs: Vec<Vec<Rat>> = self.rays.iter().map(|r| int_to_rat(r)).collect();
        vecs.extend(self.lineality.iter().map(|l| int_to_rat(l)));
        if vecs.is_empty() {
            return 0;
        }
        crate::lattice::RatMatrix::from_rows(vecs).rank()
    }

    pub fn contains_point(&self, x: &[Rat]) -> bool {
        assert_eq!(x.len(), self.dim);
        let h = self.hrep();
        h.ineqs.iter().all(|a| !dot_rat_int(x, a).is_negative())
            && h.eqs.iter().all(|e| dot_rat_int(x, e).is_zero())
    }

    pub fn contains_int_point(&self, x: &[Int]) -> bool {
        self.contains_point(&int_to_rat(x))
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains_int_point(r))
            && other.lineality.iter().all(|l| {
                self.contains_int_point(l)
                    && self.contains_point(
                        &int_to_rat(l).iter().map(|x| -x.clone()).collect::<Vec<_>>(),
                    )
            })
    }

    /// Strict version of containment on the relative interior: equations hold
    /// and every non-implicit inequality is strict.
    pub fn relative_interior_contains(&self, x: &[Rat]) -> bool {
        assert_eq!(x.len(), self.dim);
        let h = self.hrep();
        h.ineqs.iter().all(|a| dot_rat_int(x, a).is_positive())
            && h.eqs.iter().all(|e| dot_rat_int(x, e).is_zero())
    }

    /// A rational point in the relative interior (sum of rays; zero for a
    /// linear subspace).
    pub fn interior_point(&self) -> Vec<Rat> {
        let mut p = vec![Rat::zero(); self.dim];
        for r in &self.rays {
            for (pi, ri) in p.iter_mut().zip(r) {
                *pi = &*pi + Rat::from_integer(ri.clone());
            }
        }
        p
    }

    /// {u : <u,v> >= 0 for all v in the cone}.
    pub fn dual(&self) -> Cone {
        let (ineqs, eqs) = dd::constraints_from_generators(self.dim, &self.rays, &self.lineality);
        Cone::from_generators(self.dim, ineqs, eqs)
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let ha = self.hrep();
        let hb = other.hrep();
        let mut ineqs = ha.ineqs.clone();
        ineqs.extend(hb.ineqs.clone());
        let mut eqs = ha.eqs.clone();
        eqs.extend(hb.eqs.clone());
        Ok(Cone::from_constraints(self.dim, ineqs, eqs))
    }

    /// Exact face test: `face` is a face of `self` iff some linear form
    /// vanishes on `face` and is strictly negative on the generators of
    /// `self` outside it. Decided by rational LP feasibility.
    pub fn is_face(face: &Cone, cone: &Cone) -> Result<bool> {
        if face.dim != cone.dim {
            return Err(Error::DimensionMismatch(face.dim, cone.dim));
        }
        if !cone.contains_cone(face) {
            return Err(Error::NotSubcone);
        }
        let dim = cone.dim;
        let mut eqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for g in face.rays.iter().chain(face.lineality.iter()) {
            eqs.push((int_to_rat(g), Rat::zero()));
        }
        let mut ges: Vec<(Vec<Rat>, Rat)> = Vec::new();
        let mut outside = |v: Vec<Rat>| {
            // <u, v> <= -1
            ges.push((v.iter().map(|x| -x.clone()).collect(), Rat::one()));
        };
        for r in &cone.rays {
            if !face.contains_int_point(r) {
                outside(int_to_rat(r));
            }
        }
        for l in &cone.lineality {
            let lr = int_to_rat(l);
            let neg: Vec<Rat> = lr.iter().map(|x| -x.clone()).collect();
            if !face.contains_point(&lr) {
                outside(lr.clone());
            }
            if !face.contains_point(&neg) {
                outside(neg);
            }
        }
        Ok(solve_feasibility(dim, &eqs, &ges).is_some())
    }

    /// Generators as a single list (rays plus +-lineality), for callers that
    /// need a spanning set.
    pub fn generator_vectors(&self) -> Vec<Vec<Int>> {
        let mut out = self.rays.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(l.iter().map(|x| -x.clone()).collect());
        }
        out
    }
}

/// Relative-interior membership for a cone given by generator degrees in a
/// rational vector space (used for ample-cone tests in the class group).
pub fn relint_membership(dim: usize, generators: &[Vec<Rat>], point: &[Rat]) -> bool {
    if dim == 0 {
        return true;
    }
    let int_gens: Vec<Vec<Int>> = generators
        .iter()
        .map(|g| crate::num::primitive_direction(g))
        .collect();
    let cone = Cone::from_rays(
        dim,
        int_gens
            .into_iter()
            .filter(|g| !g.iter().all(|x| x.is_zero()))
            .collect(),
    );
    if cone.is_zero() {
        return point.iter().all(|x| x.is_zero());
    }
    cone.relative_interior_contains(point)
}

/// Membership of `point` in cone(generators) over Q.
pub fn cone_membership(dim: usize, generators: &[Vec<Rat>], point: &[Rat]) -> bool {
    if point.iter().all(|x| x.is_zero()) {
        return true;
    }
    let n = generators.len();
    if n == 0 {
        return false;
    }
    let mut eqs = Vec::with_capacity(dim);
    for coord in 0..dim {
        let row: Vec<Rat> = generators.iter().map(|g| g[coord].clone()).collect();
        eqs.push((row, point[coord].clone()));
    }
    let mut ges = Vec::new();
    for j in 0..n {
        let mut row = vec![Rat::zero(); n];
        row[j] = Rat::one();
        ges.push((row, Rat::zero()));
    }
    solve_feasibility(n, &eqs, &ges).is_some()
}
