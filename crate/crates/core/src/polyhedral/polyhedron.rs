//! Exact rational polyhedra with lazily converted V- and H-representations.
//! Conversions go through the homogenization cone in dimension d+1 and the
//! double-description engine.

use super::dd;
use crate::error::{Error, Result};
use crate::num::{
    cmp_int_vec, cmp_rat_vec, dot_rat, dot_rat_int, int_to_rat, rat_ceil, rat_floor, Int, Rat,
};
use num_traits::{One, Signed, Zero};
use std::sync::OnceLock;

/// <a,x> >= b for every (a, b) in ineqs, <e,x> = b for every (e, b) in eqs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    pub ineqs: Vec<(Vec<Rat>, Rat)>,
    pub eqs: Vec<(Vec<Rat>, Rat)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VRep {
    /// minimal points; for non-pointed polyhedra one representative per
    /// minimal face
    pub vertices: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Int>>,
    pub lineality: Vec<Vec<Int>>,
}

impl VRep {
    pub fn is_empty_set(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct Polyhedron {
    dim: usize,
    hrep: OnceLock<HRep>,
    vrep: OnceLock<VRep>,
}

impl PartialEq for Polyhedron {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vrep() == other.vrep()
    }
}

impl Eq for Polyhedron {}

impl Polyhedron {
    pub fn from_hrep(dim: usize, ineqs: Vec<(Vec<Rat>, Rat)>, eqs: Vec<(Vec<Rat>, Rat)>) -> Self {
        assert!(ineqs.iter().all(|(a, _)| a.len() == dim));
        assert!(eqs.iter().all(|(a, _)| a.len() == dim));
        let cell = OnceLock::new();
        let _ = cell.set(HRep { ineqs, eqs });
        Polyhedron {
            dim,
            hrep: cell,
            vrep: OnceLock::new(),
        }
    }

    /// Convex hull of `points` plus cone(rays) plus span(lineality). The
    /// V-representation is canonicalized eagerly via a round trip.
    pub fn from_generators(
        dim: usize,
        points: Vec<Vec<Rat>>,
        rays: Vec<Vec<Int>>,
        lineality: Vec<Vec<Int>>,
    ) -> Self {
        if points.is_empty() {
            return Self::empty(dim);
        }
        let raw = VRep {
            vertices: points,
            rays,
            lineality,
        };
        let hrep = hrep_from_vrep(dim, &raw);
        let vrep = vrep_from_hrep(dim, &hrep);
        let hcell = OnceLock::new();
        let _ = hcell.set(hrep);
        let vcell = OnceLock::new();
        let _ = vcell.set(vrep);
        Polyhedron {
            dim,
            hrep: hcell,
            vrep: vcell,
        }
    }

    pub fn from_points(dim: usize, points: Vec<Vec<Rat>>) -> Self {
        Self::from_generators(dim, points, Vec::new(), Vec::new())
    }

    pub fn empty(dim: usize) -> Self {
        // canonical infeasible constraint
        let hcell = OnceLock::new();
        let _ = hcell.set(HRep {
            ineqs: vec![(vec![Rat::zero(); dim], Rat::one())],
            eqs: vec![],
        });
        let vcell = OnceLock::new();
        let _ = vcell.set(VRep {
            vertices: vec![],
            rays: vec![],
            lineality: vec![],
        });
        Polyhedron {
            dim,
            hrep: hcell,
            vrep: vcell,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn hrep(&self) -> &HRep {
        self.hrep
            .get_or_init(|| hrep_from_vrep(self.dim, self.vrep.get().expect("no representation")))
    }

    pub fn vrep(&self) -> &VRep {
        self.vrep
            .get_or_init(|| vrep_from_hrep(self.dim, self.hrep.get().expect("no representation")))
    }

    pub fn is_empty_set(&self) -> bool {
        self.vrep().is_empty_set()
    }

    pub fn is_bounded(&self) -> bool {
        self.vrep().is_bounded()
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        assert_eq!(x.len(), self.dim);
        let h = self.hrep();
        h.ineqs.iter().all(|(a, b)| dot_rat(a, x) >= *b)
            && h.eqs.iter().all(|(a, b)| dot_rat(a, x) == *b)
    }

    pub fn contains_int(&self, x: &[Int]) -> bool {
        self.contains(&int_to_rat(x))
    }

    /// Affine dimension; -1 convention is avoided, empty set reports 0 and
    /// must be guarded by `is_empty_set`.
    pub fn affine_dim(&self) -> usize {
        let v = self.vrep();
        if v.vertices.is_empty() {
            return 0;
        }
        let base = &v.vertices[0];
        let mut dirs: Vec<Vec<Rat>> = v.vertices[1..]
            .iter()
            .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        dirs.extend(v.rays.iter().map(|r| int_to_rat(r)));
        dirs.extend(v.lineality.iter().map(|l| int_to_rat(l)));
        if dirs.is_empty() {
            return 0;
        }
        crate::lattice::RatMatrix::from_rows(dirs).rank()
    }

    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let a = self.hrep();
        let b = other.hrep();
        let mut ineqs = a.ineqs.clone();
        ineqs.extend(b.ineqs.clone());
        let mut eqs = a.eqs.clone();
        eqs.extend(b.eqs.clone());
        Ok(Polyhedron::from_hrep(self.dim, ineqs, eqs))
    }

    /// All lattice points of a bounded polyhedron, in lexicographic order.
    pub fn lattice_points(&self) -> Result<Vec<Vec<Int>>> {
        let v = self.vrep();
        if !v.is_bounded() {
            return Err(Error::Unbounded);
        }
        if v.vertices.is_empty() {
            return Ok(Vec::new());
        }
        let mut lo = Vec::with_capacity(self.dim);
        let mut hi = Vec::with_capacity(self.dim);
        for coord in 0..self.dim {
            let mut mn = v.vertices[0][coord].clone();
            let mut mx = mn.clone();
            for p in &v.vertices[1..] {
                if p[coord] < mn {
                    mn = p[coord].clone();
                }
                if p[coord] > mx {
                    mx = p[coord].clone();
                }
            }
            lo.push(rat_ceil(&mn));
            hi.push(rat_floor(&mx));
        }
        let mut out = Vec::new();
        let mut cursor: Vec<Int> = lo.clone();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Ok(out);
        }
        loop {
            if self.contains_int(&cursor) {
                out.push(cursor.clone());
            }
            // increment odometer, last coordinate fastest
            let mut k = self.dim;
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                if cursor[k] < hi[k] {
                    cursor[k] += 1;
                    for j in k + 1..self.dim {
                        cursor[j] = lo[j].clone();
                    }
                    break;
                }
            }
        }
    }

    pub fn minkowski_sum(&self, other: &Polyhedron) -> Result<Polyhedron> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let a = self.vrep();
        let b = other.vrep();
        if a.is_empty_set() || b.is_empty_set() {
            return Ok(Polyhedron::empty(self.dim));
        }
        let mut points = Vec::with_capacity(a.vertices.len() * b.vertices.len());
        for p in &a.vertices {
            for q in &b.vertices {
                points.push(p.iter().zip(q).map(|(x, y)| x + y).collect());
            }
        }
        let mut rays = a.rays.clone();
        rays.extend(b.rays.clone());
        let mut lineality = a.lineality.clone();
        lineality.extend(b.lineality.clone());
        Ok(Polyhedron::from_generators(
            self.dim, points, rays, lineality,
        ))
    }

    pub fn translate(&self, t: &[Rat]) -> Polyhedron {
        assert_eq!(t.len(), self.dim);
        let v = self.vrep();
        Polyhedron::from_generators(
            self.dim,
            v.vertices
                .iter()
                .map(|p| p.iter().zip(t).map(|(x, y)| x + y).collect())
                .collect(),
            v.rays.clone(),
            v.lineality.clone(),
        )
    }

    /// {v : <u,v> >= -1 for all u in self}: vertices give inequalities, rays
    /// give homogeneous inequalities, lineality gives equations.
    pub fn dual_polyhedron(&self) -> Polyhedron {
        let v = self.vrep();
        let mut ineqs = Vec::new();
        for p in &v.vertices {
            ineqs.push((p.clone(), -Rat::one()));
        }
        for r in &v.rays {
            ineqs.push((int_to_rat(r), Rat::zero()));
        }
        let eqs = v
            .lineality
            .iter()
            .map(|l| (int_to_rat(l), Rat::zero()))
            .collect();
        Polyhedron::from_hrep(self.dim, ineqs, eqs)
    }

    /// Vertex set to facet incidence over the minimal H-representation.
    fn facet_incidence(&self) -> (Vec<Vec<Rat>>, Vec<Vec<bool>>) {
        let verts = self.vrep().vertices.clone();
        let h = self.hrep();
        let incidence: Vec<Vec<bool>> = h
            .ineqs
            .iter()
            .map(|(a, b)| verts.iter().map(|p| dot_rat(a, p) == *b).collect())
            .collect();
        (verts, incidence)
    }

    /// All faces of the given dimension, each as a polytope. The polytope
    /// itself appears for `want = affine_dim()`. Requires boundedness.
    pub fn faces_of_dim(&self, want: usize) -> Result<Vec<Polyhedron>> {
        Ok(self
            .all_face_vertex_sets()?
            .into_iter()
            .filter_map(|vs| {
                let pts: Vec<Vec<Rat>> = vs.clone();
                let f = Polyhedron::from_points(self.dim, pts);
                if f.affine_dim() == want && !f.is_empty_set() {
                    Some(f)
                } else {
                    None
                }
            })
            .collect())
    }

    /// Vertex sets of all nonempty faces (including the polytope itself).
    pub fn all_face_vertex_sets(&self) -> Result<Vec<Vec<Vec<Rat>>>> {
        if !self.is_bounded() {
            return Err(Error::Unbounded);
        }
        if self.is_empty_set() {
            return Ok(Vec::new());
        }
        let (verts, inc) = self.facet_incidence();
        let n = verts.len();
        let full: Vec<usize> = (0..n).collect();
        let mut seen: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
        let mut queue = vec![full.clone()];
        seen.insert(full);
        while let Some(cur) = queue.pop() {
            for facet in &inc {
                let sub: Vec<usize> = cur.iter().copied().filter(|&i| facet[i]).collect();
                if sub.is_empty() || seen.contains(&sub) {
                    continue;
                }
                seen.insert(sub.clone());
                queue.push(sub);
            }
        }
        Ok(seen
            .into_iter()
            .map(|is| is.into_iter().map(|i| verts[i].clone()).collect())
            .collect())
    }
}

fn hrep_from_vrep(dim: usize, v: &VRep) -> HRep {
    if v.vertices.is_empty() {
        return HRep {
            ineqs: vec![(vec![Rat::zero(); dim], Rat::one())],
            eqs: vec![],
        };
    }
    // homogenize: cone over {1} x P
    let mut gens_rays: Vec<Vec<Int>> = Vec::new();
    for p in &v.vertices {
        let mut lifted = vec![Rat::one()];
        lifted.extend(p.iter().cloned());
        gens_rays.push(crate::num::primitive_direction(&lifted));
    }
    for r in &v.rays {
        let mut lifted = vec![Int::zero()];
        lifted.extend(r.iter().cloned());
        gens_rays.push(lifted);
    }
    let gens_lin: Vec<Vec<Int>> = v
        .lineality
        .iter()
        .map(|l| {
            let mut lifted = vec![Int::zero()];
            lifted.extend(l.iter().cloned());
            lifted
        })
        .collect();
    let (ineqs, eqs) = dd::constraints_from_generators(dim + 1, &gens_rays, &gens_lin);
    let mut out_ineqs = Vec::new();
    for a in ineqs {
        let beta = -Rat::from_integer(a[0].clone());
        let normal: Vec<Rat> = a[1..]
            .iter()
            .map(|x| Rat::from_integer(x.clone()))
            .collect();
        if normal.iter().all(|x| x.is_zero()) {
            continue; // the t >= 0 constraint of the homogenization
        }
        out_ineqs.push((normal, beta));
    }
    let mut out_eqs = Vec::new();
    for a in eqs {
        let beta = -Rat::from_integer(a[0].clone());
        let normal: Vec<Rat> = a[1..]
            .iter()
            .map(|x| Rat::from_integer(x.clone()))
            .collect();
        if normal.iter().all(|x| x.is_zero()) {
            continue;
        }
        out_eqs.push((normal, beta));
    }
    HRep {
        ineqs: out_ineqs,
        eqs: out_eqs,
    }
}

fn vrep_from_hrep(dim: usize, h: &HRep) -> VRep {
    // lift to (t, x): a.x - b t >= 0, plus t >= 0
    let mut ineqs: Vec<Vec<Rat>> = Vec::with_capacity(h.ineqs.len() + 1);
    for (a, b) in &h.ineqs {
        let mut row = vec![-b.clone()];
        row.extend(a.iter().cloned());
        ineqs.push(row);
    }
    let mut t_row = vec![Rat::zero(); dim + 1];
    t_row[0] = Rat::one();
    ineqs.push(t_row);
    let eqs: Vec<Vec<Rat>> = h
        .eqs
        .iter()
        .map(|(a, b)| {
            let mut row = vec![-b.clone()];
            row.extend(a.iter().cloned());
            row
        })
        .collect();
    let gens = dd::generators_from_constraints(dim + 1, &ineqs, &eqs);
    let mut vertices: Vec<Vec<Rat>> = Vec::new();
    let mut rays: Vec<Vec<Int>> = Vec::new();
    for g in gens.rays {
        if g[0].is_zero() {
            rays.push(g[1..].to_vec());
        } else {
            debug_assert!(g[0].is_positive());
            let t = Rat::from_integer(g[0].clone());
            vertices.push(
                g[1..]
                    .iter()
                    .map(|x| Rat::from_integer(x.clone()) / &t)
                    .collect(),
            );
        }
    }
    let mut lineality: Vec<Vec<Int>> = Vec::new();
    for l in gens.lineality {
        debug_assert!(l[0].is_zero(), "lineality escaped the t >= 0 halfspace");
        lineality.push(l[1..].to_vec());
    }
    if vertices.is_empty() {
        // empty polyhedron
        return VRep {
            vertices: vec![],
            rays: vec![],
            lineality: vec![],
        };
    }
    vertices.sort_by(|a, b| cmp_rat_vec(a, b));
    rays.sort_by(|a, b| cmp_int_vec(a, b));
    VRep {
        vertices,
        rays,
        lineality,
    }
}

/// Brute-force oracle used in tests: lattice points by box scan against the
/// inequality list directly.
pub fn lattice_points_by_scan(
    dim: usize,
    ineqs: &[(Vec<Rat>, Rat)],
    eqs: &[(Vec<Rat>, Rat)],
    lo: i64,
    hi: i64,
) -> Vec<Vec<Int>> {
    let mut out = Vec::new();
    let mut cursor = vec![lo; dim];
    loop {
        let x: Vec<Int> = cursor.iter().map(|&c| Int::from(c)).collect();
        let ok = ineqs.iter().all(|(a, b)| dot_rat_int(a, &x) >= *b)
            && eqs.iter().all(|(a, b)| dot_rat_int(a, &x) == *b);
        if ok {
            out.push(x);
        }
        let mut k = dim;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cursor[k] < hi {
                cursor[k] += 1;
                for j in k + 1..dim {
                    cursor[j] = lo;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{frac, int, rat};

    fn pt(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn unit_square() -> Polyhedron {
        Polyhedron::from_points(2, vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1]), pt(&[1, 1])])
    }

    #[test]
    fn square_roundtrip() {
        let sq = unit_square();
        assert_eq!(sq.vrep().vertices.len(), 4);
        assert!(sq.is_bounded());
        assert_eq!(sq.hrep().ineqs.len(), 4);
        assert!(sq.contains(&[frac(1, 2), frac(1, 2)]));
        assert!(!sq.contains(&[rat(2), rat(0)]));
    }

    #[test]
    fn interior_point_dropped_from_hull() {
        let p = Polyhedron::from_points(
            2,
            vec![pt(&[0, 0]), pt(&[2, 0]), pt(&[0, 2]), pt(&[1, 1]).clone()],
        );
        // (1,1) lies on the edge between (2,0) and (0,2)
        assert_eq!(p.vrep().vertices.len(), 3);
    }

    #[test]
    fn lattice_points_square_and_simplex() {
        let sq = unit_square();
        let pts = sq.lattice_points().unwrap();
        assert_eq!(pts.len(), 4);

        let simplex = Polyhedron::from_points(2, vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])]);
        let pts = simplex.lattice_points().unwrap();
        assert_eq!(
            pts,
            vec![
                vec![int(0), int(0)],
                vec![int(0), int(1)],
                vec![int(1), int(0)]
            ]
        );
    }

    #[test]
    fn unbounded_lattice_enumeration_rejected() {
        let half = Polyhedron::from_hrep(2, vec![(pt(&[1, 0]), rat(0))], vec![]);
        assert!(half.lattice_points().is_err());
        assert!(!half.is_bounded());
    }

    #[test]
    fn minkowski_segments_make_square() {
        let s1 = Polyhedron::from_points(2, vec![pt(&[0, 0]), pt(&[1, 0])]);
        let s2 = Polyhedron::from_points(2, vec![pt(&[0, 0]), pt(&[0, 1])]);
        let sum = s1.minkowski_sum(&s2).unwrap();
        assert_eq!(sum, unit_square());

        let origin = Polyhedron::from_points(2, vec![pt(&[0, 0])]);
        assert_eq!(s1.minkowski_sum(&origin).unwrap(), s1);
    }

    #[test]
    fn dual_of_big_square_is_cross_polytope() {
        let sq = Polyhedron::from_points(
            2,
            vec![pt(&[-1, -1]), pt(&[1, -1]), pt(&[-1, 1]), pt(&[1, 1])],
        );
        let dual = sq.dual_polyhedron();
        let mut verts = dual.vrep().vertices.clone();
        verts.sort_by(|a, b| cmp_rat_vec(a, b));
        assert_eq!(
            verts,
            vec![pt(&[-1, 0]), pt(&[0, -1]), pt(&[0, 1]), pt(&[1, 0])]
        );
    }

    #[test]
    fn dual_of_point_is_full_space() {
        let origin = Polyhedron::from_points(2, vec![pt(&[0, 0])]);
        let dual = origin.dual_polyhedron();
        assert_eq!(dual.vrep().lineality.len(), 2);
    }

    #[test]
    fn faces_of_square_and_simplex() {
        let sq = unit_square();
        assert_eq!(sq.faces_of_dim(1).unwrap().len(), 4);
        assert_eq!(sq.faces_of_dim(0).unwrap().len(), 4);
        assert_eq!(sq.faces_of_dim(2).unwrap().len(), 1);

        let simplex = Polyhedron::from_points(2, vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])]);
        assert_eq!(simplex.faces_of_dim(1).unwrap().len(), 3);
    }

    #[test]
    fn empty_polyhedron() {
        let e = Polyhedron::from_hrep(
            2,
            vec![(pt(&[1, 0]), rat(1)), (pt(&[-1, 0]), rat(0))],
            vec![],
        );
        assert!(e.is_empty_set());
        assert_eq!(e.lattice_points().unwrap(), Vec::<Vec<Int>>::new());
    }

    #[test]
    fn lattice_points_match_box_scan() {
        use rand::prelude::*;
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..25 {
            let dim = rng.gen_range(1..=3);
            let k = rng.gen_range(1..=5);
            let pts: Vec<Vec<Rat>> = (0..k)
                .map(|_| (0..dim).map(|_| rat(rng.gen_range(-4..=4))).collect())
                .collect();
            let p = Polyhedron::from_points(dim, pts);
            let fast = p.lattice_points().unwrap();
            let h = p.hrep();
            let slow = lattice_points_by_scan(dim, &h.ineqs, &h.eqs, -5, 5);
            assert_eq!(fast, slow);
        }
    }
}
