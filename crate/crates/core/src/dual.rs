//! Independent second construction of the anticanonical complex via the
//! dual of a lifted divisor polyhedron; cross-validates the primary
//! construction in the Fano case.

use crate::anticanonical::{build_complex, refinement_cells, AnticanComplex};
use crate::error::{Error, Result};
use crate::lattice::{GradingMap, GroupElement};
use crate::num::{cmp_rat_vec, Int, Rat};
use crate::polyhedral::Polyhedron;
use crate::variety::{GavData, Relation};
use num_traits::{One, Zero};

/// Newton polytope of a relation: hull of its exponent vectors.
pub fn newton_polytope(dim: usize, rel: &Relation) -> Polyhedron {
    let pts: Vec<Vec<Rat>> = rel
        .terms
        .iter()
        .map(|(_, exp)| {
            exp.iter()
                .map(|&e| Rat::from_integer(Int::from(e)))
                .collect()
        })
        .collect();
    debug_assert!(pts.iter().all(|p| p.len() == dim));
    Polyhedron::from_points(dim, pts)
}

/// Rational fiber of the free part of the degree map over w, cut to the
/// nonnegative orthant. Torsion is a lattice condition and is checked where
/// lattice points are consumed, not here.
pub fn fiber_polytope(q: &GradingMap, w: &GroupElement) -> Polyhedron {
    let dim = q.domain_dim;
    let mut ineqs = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut row = vec![Rat::zero(); dim];
        row[i] = Rat::one();
        ineqs.push((row, Rat::zero()));
    }
    let mut eqs = Vec::new();
    for i in 0..q.group.free_rank {
        let row: Vec<Rat> = (0..dim)
            .map(|j| Rat::from_integer(q.matrix_free.get(i, j).clone()))
            .collect();
        eqs.push((row, Rat::from_integer(w.free[i].clone())));
    }
    Polyhedron::from_hrep(dim, ineqs, eqs)
}

#[derive(Debug, Clone)]
pub struct DualData {
    /// fiber of the anticanonical class in the nonnegative orthant
    pub b_minus_k: Polyhedron,
    /// Minkowski sum of the relation Newton polytopes
    pub b: Polyhedron,
    /// representative of the ambient canonical class
    pub e_sigma: Vec<Int>,
    /// preimage of b_minus_k + b - e_sigma under the transpose of P
    pub b_x: Polyhedron,
    /// its dual: the anticanonical polyhedron
    pub a_x: Polyhedron,
}

/// The dual construction; requires the anticanonical class to be ample.
pub fn anticanonical_polyhedron(data: &GavData) -> Result<DualData> {
    anticanonical_polyhedron_with(data, &vec![-Int::one(); data.gen_count()])
}

/// Same construction with an explicit representative of the ambient
/// canonical class (the complex is independent of the choice).
pub fn anticanonical_polyhedron_with(data: &GavData, e_sigma: &[Int]) -> Result<DualData> {
    if !data.is_fano()? {
        return Err(Error::NotFano);
    }
    let total = data.gen_count();
    assert_eq!(e_sigma.len(), total);
    let mk = data.anticanonical_class()?;
    let b_minus_k = fiber_polytope(data.degree_map(), &mk);
    let mut b = Polyhedron::from_points(total, vec![vec![Rat::zero(); total]]);
    for rel in data.relations()? {
        b = b.minkowski_sum(&newton_polytope(total, &rel))?;
    }
    // translate by the canonical-class representative; only this sign puts
    // the sum inside the image of the transpose of P (degree zero)
    let shift: Vec<Rat> = e_sigma
        .iter()
        .map(|x| Rat::from_integer(x.clone()))
        .collect();
    let lifted = b_minus_k.minkowski_sum(&b)?.translate(&shift);
    // preimage under the transpose of P: pull every constraint back
    let p = data.p_matrix();
    let dim = data.ambient_rank();
    let pull = |a: &Vec<Rat>| -> Vec<Rat> {
        (0..dim)
            .map(|i| {
                (0..total)
                    .map(|j| Rat::from_integer(p.get(i, j).clone()) * &a[j])
                    .sum()
            })
            .collect()
    };
    let lh = lifted.hrep();
    let ineqs: Vec<(Vec<Rat>, Rat)> = lh.ineqs.iter().map(|(a, b)| (pull(a), b.clone())).collect();
    let eqs: Vec<(Vec<Rat>, Rat)> = lh.eqs.iter().map(|(a, b)| (pull(a), b.clone())).collect();
    let b_x = Polyhedron::from_hrep(dim, ineqs, eqs);
    let a_x = b_x.dual_polyhedron();
    Ok(DualData {
        b_minus_k,
        b,
        e_sigma: e_sigma.to_vec(),
        b_x,
        a_x,
    })
}

#[derive(Debug, Clone)]
pub struct CellComparison {
    pub cell_rays: Vec<Vec<Int>>,
    pub agrees: bool,
}

#[derive(Debug, Clone)]
pub struct CrossReport {
    pub per_cell: Vec<CellComparison>,
    pub vertex_sets_equal: bool,
}

impl CrossReport {
    pub fn agrees(&self) -> bool {
        self.vertex_sets_equal && self.per_cell.iter().all(|c| c.agrees)
    }
}

/// Compare the primary complex against the dual construction, cell by cell:
/// in each refinement cell the dual polyhedron cut to the cell must equal
/// the cell polyhedron.
pub fn cross_validate(data: &GavData) -> Result<CrossReport> {
    let complex = build_complex(data)?;
    cross_validate_against(data, &complex)
}

/// Test hook: validate an externally supplied (possibly corrupted) complex.
pub fn cross_validate_against(data: &GavData, complex: &AnticanComplex) -> Result<CrossReport> {
    let dual = anticanonical_polyhedron(data)?;
    let cones = refinement_cells(data)?;
    let mut per_cell = Vec::new();
    let mut dual_vertices: Vec<Vec<Rat>> = Vec::new();
    for cone in &cones {
        let restricted = dual
            .a_x
            .intersect(&crate::anticanonical::cone_to_polyhedron(cone))?;
        dual_vertices.extend(restricted.vrep().vertices.iter().cloned());
        let matching = complex.cells.iter().find(|cell| &cell.cone == cone);
        let agrees = match matching {
            Some(cell) => cell.region == restricted,
            None => false,
        };
        per_cell.push(CellComparison {
            cell_rays: cone.rays().to_vec(),
            agrees,
        });
    }
    dual_vertices.sort_by(|a, b| cmp_rat_vec(a, b));
    dual_vertices.dedup();
    let mut primary_vertices = complex.vertices_computed();
    primary_vertices.sort_by(|a, b| cmp_rat_vec(a, b));
    let vertex_sets_equal = dual_vertices == primary_vertices;
    Ok(CrossReport {
        per_cell,
        vertex_sets_equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{frac, int_to_rat, rat};
    use crate::variety::fixtures::*;
    use crate::variety::Model;

    #[test]
    fn newton_polytope_shapes() {
        let d = fano_threefold(Model::Fan(fano_threefold_fan()));
        let rel = &d.relations().unwrap()[0];
        let np = newton_polytope(d.gen_count(), rel);
        assert_eq!(np.vrep().vertices.len(), 4);
        // single monomial: a point
        let mono = Relation {
            index: 1,
            terms: vec![(rat(1), vec![2, 0, 0, 0, 0])],
        };
        let np = newton_polytope(5, &mono);
        assert_eq!(np.vrep().vertices.len(), 1);
        assert!(np.is_bounded());
    }

    #[test]
    fn fiber_polytope_cases() {
        let d = fano_threefold(Model::Fan(fano_threefold_fan()));
        let q = d.degree_map();
        // degree zero: contains the origin
        let zero = GroupElement::zero(d.class_group());
        let fib = fiber_polytope(q, &zero);
        assert!(fib.contains(&vec![rat(0); 5]));
        // anticanonical degree: nonempty polytope
        let mk = d.anticanonical_class().unwrap();
        let fib = fiber_polytope(q, &mk);
        assert!(!fib.is_empty_set());
        assert!(fib.is_bounded());
    }

    #[test]
    fn dual_polyhedron_vertices_contain_complex_vertices() {
        let d = fano_threefold(Model::Fan(fano_threefold_fan()));
        let dual = anticanonical_polyhedron(&d).unwrap();
        let verts = dual.a_x.vrep().vertices.clone();
        assert_eq!(verts.len(), 7);
        for col in 0..d.gen_count() {
            let v = int_to_rat(&d.column(col));
            assert!(verts.contains(&v), "missing column vertex {:?}", v);
        }
        assert!(verts.contains(&vec![rat(0), rat(0), rat(0), frac(1, 5)]));
        assert!(verts.contains(&vec![rat(0), rat(0), rat(0), frac(-1, 3)]));
    }

    #[test]
    fn cross_validation_agrees() {
        let d = fano_threefold(Model::Fan(fano_threefold_fan()));
        let report = cross_validate(&d).unwrap();
        assert!(report.agrees());
        assert_eq!(report.per_cell.len(), 15);
    }

    #[test]
    fn cross_validation_detects_corruption() {
        let d = fano_threefold(Model::Fan(fano_threefold_fan()));
        let mut complex = build_complex(&d).unwrap();
        // shrink one cell with a fake defining form
        let cell = &mut complex.cells[0];
        let bad_form: Vec<Rat> = cell.form.iter().map(|x| x * rat(2)).collect();
        let h = cell.cone.hrep();
        let mut ineqs: Vec<(Vec<Rat>, Rat)> = h
            .ineqs
            .iter()
            .map(|a| (int_to_rat(a), Rat::zero()))
            .collect();
        ineqs.push((bad_form.clone(), -Rat::one()));
        let eqs = h.eqs.iter().map(|e| (int_to_rat(e), Rat::zero())).collect();
        cell.form = bad_form;
        cell.region = Polyhedron::from_hrep(4, ineqs, eqs);
        let report = cross_validate_against(&d, &complex).unwrap();
        assert!(!report.agrees());
    }

    #[test]
    fn representative_shift_translates_lifted_polyhedron() {
        // Changing the canonical-class representative by a row of P moves
        // the lifted polyhedron by exactly the corresponding lattice vector,
        // so the construction is pinned to the standard representative.
        let d = fano_threefold(Model::Fan(fano_threefold_fan()));
        let base = anticanonical_polyhedron(&d).unwrap();
        let mut e_sigma = vec![-Int::one(); d.gen_count()];
        for j in 0..d.gen_count() {
            e_sigma[j] += d.p_matrix().get(0, j);
        }
        let shifted = anticanonical_polyhedron_with(&d, &e_sigma).unwrap();
        let unit = vec![rat(1), rat(0), rat(0), rat(0)];
        assert_eq!(shifted.b_x, base.b_x.translate(&unit));
    }

    #[test]
    fn minkowski_sum_order_invariant() {
        let d = fano_threefold(Model::Fan(fano_threefold_fan()));
        let rel = &d.relations().unwrap()[0];
        let np = newton_polytope(d.gen_count(), rel);
        let a = np.minkowski_sum(&np).unwrap();
        let b = np.minkowski_sum(&np).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn toric_fano_surface_cross_validates() {
        let d = smooth_toric_surface();
        let report = cross_validate(&d).unwrap();
        assert!(report.agrees());
        let dual = anticanonical_polyhedron(&d).unwrap();
        // the dual polytope has the origin in its interior
        for (a, b) in &dual.a_x.hrep().ineqs {
            let at_zero: Rat = a.iter().map(|_| Rat::from_integer(0.into())).sum();
            assert!(at_zero > *b);
        }
    }

    #[test]
    fn non_fano_input_rejected() {
        let d = affine_surface();
        assert!(matches!(anticanonical_polyhedron(&d), Err(Error::NotFano)));
    }
}
