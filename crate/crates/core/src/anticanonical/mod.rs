//! The anticanonical complex: tropical structure, one-ray-per-block cones
//! and their numbers, the refined fan's cells, defining linear forms,
//! lattice-point singularity classification and exponent bounds.

pub mod trop;
pub mod tuples;

pub use trop::{ConeClass, TropStructure};

use crate::error::{Error, Result};
use crate::lattice::{solve_rational, RatMatrix};
use crate::num::{
    cmp_int_vec, cmp_rat_vec, dot_rat, dot_rat_int, int_to_rat, primitive_int, Int, Rat,
};
use crate::polyhedral::{Cone, Polyhedron};
use crate::variety::GavData;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A pointed cone of the fan picking exactly one ray from every block,
/// together with its derived numbers.
#[derive(Debug, Clone)]
pub struct PElemCone {
    /// one column index per block
    pub selection: Vec<usize>,
    /// index of a maximal fan cone having it as a face
    pub host_cone: usize,
    pub ell_i: Vec<Int>,
    pub ell: Int,
    pub v_sigma: Vec<Int>,
    pub c_sigma: Int,
    pub rho_sigma: Vec<Int>,
}

impl PElemCone {
    /// Exit point of the ray through v_sigma, defined whenever ell != 0.
    pub fn exit_point(&self) -> Option<Vec<Rat>> {
        if self.ell.is_zero() {
            return None;
        }
        let ell = Rat::from_integer(self.ell.clone());
        Some(
            self.v_sigma
                .iter()
                .map(|x| Rat::from_integer(x.clone()) / &ell)
                .collect(),
        )
    }

    pub fn discrepancy(&self) -> Rat {
        Rat::new(self.ell.clone(), self.c_sigma.clone()) - Rat::one()
    }
}

/// The numbers attached to an exponent selection: per-block complements of
/// the product, and the alternating total.
pub fn selection_numbers(complexity: usize, ls: &[u64]) -> (Vec<Int>, Int) {
    let r = ls.len() - 1;
    let prod: Int = ls.iter().map(|&l| Int::from(l)).product();
    let ell_i: Vec<Int> = ls.iter().map(|&l| &prod / Int::from(l)).collect();
    let sum: Int = ell_i.iter().sum();
    let ell = Int::from(complexity as i64 - r as i64) * &prod + sum;
    (ell_i, ell)
}

/// All one-ray-per-block faces of the fan's maximal cones.
pub fn p_elementary_cones(data: &GavData) -> Result<Vec<PElemCone>> {
    let fan = data.fan()?;
    let r = data.arrangement_size();
    let mut seen: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for (host, max_cone) in fan.maximal_cones.iter().enumerate() {
        // columns of this cone grouped by block
        let mut per_block: Vec<Vec<usize>> = vec![Vec::new(); r + 1];
        for &ray_idx in max_cone {
            let col = fan.rays[ray_idx].clone();
            let col_idx = (0..data.gen_count())
                .find(|&j| data.column(j) == col)
                .expect("fan ray is a column");
            if let Some((block, _)) = data.col_block(col_idx) {
                per_block[block].push(col_idx);
            }
        }
        if per_block.iter().any(|b| b.is_empty()) {
            continue;
        }
        let host_cone_obj = fan.cone_at(host);
        let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
        for block in per_block.iter() {
            let mut next = Vec::new();
            for partial in &stack {
                for &col in block {
                    let mut sel = partial.clone();
                    sel.push(col);
                    next.push(sel);
                }
            }
            stack = next;
        }
        for selection in stack {
            if seen.contains(&selection) {
                continue;
            }
            let cols: Vec<Vec<Int>> = selection.iter().map(|&j| data.column(j)).collect();
            let cand = Cone::from_rays(data.ambient_rank(), cols.clone());
            if !cand.is_pointed() {
                continue;
            }
            // every selected column must be an extreme ray
            let mut sorted_cols = cols.clone();
            sorted_cols.sort_by(|a, b| cmp_int_vec(a, b));
            if cand.rays() != sorted_cols.as_slice() {
                continue;
            }
            if !Cone::is_face(&cand, &host_cone_obj)? {
                continue;
            }
            seen.insert(selection.clone());
            let ls: Vec<u64> = selection
                .iter()
                .map(|&j| {
                    let (b, jj) = data.col_block(j).expect("monomial column");
                    data.exponents()[b][jj]
                })
                .collect();
            let (ell_i, ell) = selection_numbers(data.complexity(), &ls);
            let mut v_sigma = vec![Int::zero(); data.ambient_rank()];
            for (coeff, col) in ell_i.iter().zip(&cols) {
                for (acc, x) in v_sigma.iter_mut().zip(col) {
                    *acc += coeff * x;
                }
            }
            let (rho, c_sigma) = primitive_int(&v_sigma).ok_or_else(|| {
                Error::Msg("one-ray-per-block cone with vanishing combination".into())
            })?;
            out.push(PElemCone {
                selection,
                host_cone: host,
                ell_i,
                ell,
                v_sigma,
                c_sigma,
                rho_sigma: rho,
            });
        }
    }
    out.sort_by(|a, b| a.selection.cmp(&b.selection));
    Ok(out)
}

/// Rays of the refined fan: the fan's own rays plus the rays through the
/// v_sigma vectors, deduplicated.
pub fn weakly_tropical_rays(data: &GavData) -> Result<Vec<Vec<Int>>> {
    let mut rays: Vec<Vec<Int>> = (0..data.gen_count()).map(|j| data.column(j)).collect();
    for p in p_elementary_cones(data)? {
        rays.push(p.rho_sigma.clone());
    }
    rays.sort_by(|a, b| cmp_int_vec(a, b));
    rays.dedup();
    Ok(rays)
}

/// Inclusion-maximal cells of the common refinement of the fan with the
/// tropical structure.
pub fn refinement_cells(data: &GavData) -> Result<Vec<Cone>> {
    let fan = data.fan()?;
    let t = trop_structure(data);
    let mut cells: Vec<Cone> = Vec::new();
    for max_cone in fan.maximal_cone_objects() {
        for (_, leaf) in t.maximal_leaves() {
            let cell = max_cone.intersect(leaf)?;
            if cell.is_zero() {
                continue;
            }
            if !cells.contains(&cell) {
                cells.push(cell);
            }
        }
    }
    let keep: Vec<bool> = cells
        .iter()
        .map(|c| !cells.iter().any(|d| d != c && d.contains_cone(c)))
        .collect();
    let mut out: Vec<Cone> = cells
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(c, _)| c)
        .collect();
    out.sort();
    Ok(out)
}

pub fn trop_structure(data: &GavData) -> TropStructure {
    TropStructure::new(
        data.complexity(),
        data.arrangement_size(),
        data.torus_rank(),
    )
}

/// A defining linear form for the cell: -1 on fan rays, -ell on the
/// one-ray-per-block vectors whose ray is a face of the cell. None iff the
/// system is inconsistent.
pub fn defining_linear_form(
    data: &GavData,
    cell: &Cone,
    pelems: &[PElemCone],
) -> Result<Option<Vec<Rat>>> {
    let dim = data.ambient_rank();
    let columns: Vec<Vec<Int>> = (0..data.gen_count()).map(|j| data.column(j)).collect();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    for ray in cell.rays() {
        let mut matched = false;
        if columns.iter().any(|c| c == ray) {
            rows.push(int_to_rat(ray));
            rhs.push(-Rat::one());
            matched = true;
        }
        for p in pelems {
            if &p.rho_sigma == ray {
                rows.push(int_to_rat(&p.v_sigma));
                rhs.push(-Rat::from_integer(p.ell.clone()));
                matched = true;
            }
        }
        if !matched {
            return Err(Error::Msg(format!(
                "cell ray {:?} is neither a fan ray nor a one-per-block direction",
                ray
            )));
        }
    }
    if rows.is_empty() {
        return Ok(Some(vec![Rat::zero(); dim]));
    }
    let mut aug_rows = Vec::with_capacity(rows.len());
    for row in rows {
        aug_rows.push(row);
    }
    let m = RatMatrix::from_rows(aug_rows);
    Ok(solve_rational(&m, &rhs).map(|(particular, _)| particular))
}

#[derive(Debug, Clone)]
pub struct ComplexCell {
    pub cone: Cone,
    pub form: Vec<Rat>,
    pub region: Polyhedron,
}

#[derive(Debug, Clone)]
pub struct AnticanComplex {
    pub ambient_dim: usize,
    pub cells: Vec<ComplexCell>,
    pub pelems: Vec<PElemCone>,
    pub bounded: bool,
    /// {0} plus the fan's primitive ray generators plus the exit points of
    /// the one-per-block rays with positive ell
    pub vertex_formula: Vec<Vec<Rat>>,
    pub ray_generators: Vec<Vec<Int>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularityKind {
    NotLogTerminal,
    LogTerminalOnly,
    Canonical,
    Terminal,
}

#[derive(Debug, Clone)]
pub struct SingularityVerdict {
    pub kind: SingularityKind,
    /// unbounded ray direction, interior lattice point, or extra boundary
    /// lattice point, depending on the verdict
    pub witness: Option<Vec<Int>>,
}

/// Build the full complex. Errors if some cell admits no defining form
/// (the anticanonical class is not Q-Cartier there).
pub fn build_complex(data: &GavData) -> Result<AnticanComplex> {
    let fan = data.fan()?.clone();
    let t = trop_structure(data);
    for cone in fan.maximal_cone_objects() {
        if t.classify(&cone).is_none() {
            return Err(Error::InvalidFanCone);
        }
    }
    let pelems = p_elementary_cones(data)?;
    let cones = refinement_cells(data)?;
    let mut cells = Vec::with_capacity(cones.len());
    for cone in cones {
        let form = defining_linear_form(data, &cone, &pelems)?
            .ok_or_else(|| Error::NotQGorenstein(format!("{:?}", cone.rays())))?;
        let h = cone.hrep();
        let mut ineqs: Vec<(Vec<Rat>, Rat)> = h
            .ineqs
            .iter()
            .map(|a| (int_to_rat(a), Rat::zero()))
            .collect();
        ineqs.push((form.clone(), -Rat::one()));
        let eqs = h.eqs.iter().map(|e| (int_to_rat(e), Rat::zero())).collect();
        let region = Polyhedron::from_hrep(data.ambient_rank(), ineqs, eqs);
        cells.push(ComplexCell { cone, form, region });
    }
    let bounded = pelems.iter().all(|p| p.ell.is_positive());
    let ray_generators: Vec<Vec<Int>> = (0..data.gen_count()).map(|j| data.column(j)).collect();
    let mut vertex_formula: Vec<Vec<Rat>> = Vec::new();
    vertex_formula.push(vec![Rat::zero(); data.ambient_rank()]);
    for rgen in &ray_generators {
        vertex_formula.push(int_to_rat(rgen));
    }
    for p in &pelems {
        if p.ell.is_positive() {
            vertex_formula.push(p.exit_point().expect("positive ell"));
        }
    }
    vertex_formula.sort_by(|a, b| cmp_rat_vec(a, b));
    vertex_formula.dedup();
    Ok(AnticanComplex {
        ambient_dim: data.ambient_rank(),
        cells,
        pelems,
        bounded,
        vertex_formula,
        ray_generators,
    })
}

impl AnticanComplex {
    /// Vertices read off the cell polyhedra rather than the closed formula.
    pub fn vertices_computed(&self) -> Vec<Vec<Rat>> {
        let mut out: Vec<Vec<Rat>> = Vec::new();
        for cell in &self.cells {
            out.extend(cell.region.vrep().vertices.iter().cloned());
        }
        out.sort_by(|a, b| cmp_rat_vec(a, b));
        out.dedup();
        out
    }

    pub fn lattice_points(&self) -> Result<Vec<Vec<Int>>> {
        if !self.bounded {
            return Err(Error::Unbounded);
        }
        let mut out: Vec<Vec<Int>> = Vec::new();
        for cell in &self.cells {
            out.extend(cell.region.lattice_points()?);
        }
        out.sort_by(|a, b| cmp_int_vec(a, b));
        out.dedup();
        Ok(out)
    }

    /// Same union computed leaf by leaf; used to cross-check independence of
    /// the decomposition.
    pub fn lattice_points_by_leaf(&self, t: &TropStructure) -> Result<Vec<Vec<Int>>> {
        if !self.bounded {
            return Err(Error::Unbounded);
        }
        let mut out: Vec<Vec<Int>> = Vec::new();
        for (_, leaf) in t.maximal_leaves() {
            for cell in &self.cells {
                if leaf.contains_cone(&cell.cone) {
                    out.extend(cell.region.lattice_points()?);
                }
            }
        }
        out.sort_by(|a, b| cmp_int_vec(a, b));
        out.dedup();
        Ok(out)
    }

    /// Cells whose region contains the point.
    fn cells_containing(&self, x: &[Rat]) -> Vec<&ComplexCell> {
        self.cells
            .iter()
            .filter(|cell| cell.region.contains(x))
            .collect()
    }

    /// Strictly inside: every containing cell evaluates its form above -1.
    pub fn point_is_interior(&self, x: &[Rat]) -> bool {
        let cells = self.cells_containing(x);
        if cells.is_empty() {
            return false;
        }
        cells
            .iter()
            .all(|cell| dot_rat(&cell.form, x) > -Rat::one())
    }

    pub fn singularity_type(&self) -> Result<SingularityVerdict> {
        if !self.bounded {
            let witness = self
                .pelems
                .iter()
                .find(|p| !p.ell.is_positive())
                .map(|p| p.rho_sigma.clone());
            return Ok(SingularityVerdict {
                kind: SingularityKind::NotLogTerminal,
                witness,
            });
        }
        let pts = self.lattice_points()?;
        let origin = vec![Int::zero(); self.ambient_dim];
        for p in &pts {
            if *p == origin {
                continue;
            }
            if self.point_is_interior(&int_to_rat(p)) {
                return Ok(SingularityVerdict {
                    kind: SingularityKind::LogTerminalOnly,
                    witness: Some(p.clone()),
                });
            }
        }
        let mut allowed: Vec<Vec<Int>> = self.ray_generators.clone();
        allowed.push(origin);
        allowed.sort_by(|a, b| cmp_int_vec(a, b));
        allowed.dedup();
        let extra: Vec<&Vec<Int>> = pts.iter().filter(|p| !allowed.contains(p)).collect();
        if extra.is_empty() {
            debug_assert_eq!(pts.len(), allowed.len());
            Ok(SingularityVerdict {
                kind: SingularityKind::Terminal,
                witness: None,
            })
        } else {
            Ok(SingularityVerdict {
                kind: SingularityKind::Canonical,
                witness: Some(extra[0].clone()),
            })
        }
    }

    /// Least common multiple of the denominators of all defining forms; 1
    /// means the anticanonical class is Cartier.
    pub fn gorenstein_index(&self) -> Int {
        let mut acc = Int::one();
        for cell in &self.cells {
            for x in &cell.form {
                acc = acc.lcm(x.denom());
            }
        }
        acc
    }
}

/// Exponent-bound checks equivalent to the discrepancy sign along the
/// one-per-block ray.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    LogTerminal,
    Canonical,
    Terminal,
}

pub fn exponent_bound_check(complexity: usize, ls: &[u64], c_sigma: &Int, kind: BoundKind) -> bool {
    let r = ls.len() - 1;
    let sum: Rat = ls.iter().map(|&l| Rat::new(Int::one(), Int::from(l))).sum();
    let rc = Rat::from_integer(Int::from(r as i64 - complexity as i64));
    let prod: Int = ls.iter().map(|&l| Int::from(l)).product();
    let correction = Rat::new(c_sigma.clone(), prod);
    match kind {
        BoundKind::LogTerminal => sum > rc,
        BoundKind::Canonical => sum >= rc + correction,
        BoundKind::Terminal => sum > rc + correction,
    }
}

/// Piecewise convexity: the convex hull of the vertices meets the tropical
/// support exactly in the complex.
pub fn is_piecewise_convex(complex: &AnticanComplex, t: &TropStructure) -> Result<bool> {
    if !complex.bounded {
        return Err(Error::Unbounded);
    }
    let dim = complex.ambient_dim;
    let hull = Polyhedron::from_points(dim, complex.vertex_formula.clone());
    // every cell inside the hull
    for cell in &complex.cells {
        for v in &cell.region.vrep().vertices {
            if !hull.contains(v) {
                return Ok(false);
            }
        }
    }
    // hull cut to every maximal leaf covered by the cells in that leaf
    for (_, leaf) in t.maximal_leaves() {
        let leaf_poly = cone_to_polyhedron(leaf);
        let region = hull.intersect(&leaf_poly)?;
        if region.is_empty_set() {
            continue;
        }
        let cells: Vec<&Polyhedron> = complex
            .cells
            .iter()
            .filter(|cell| leaf.contains_cone(&cell.cone))
            .map(|cell| &cell.region)
            .collect();
        if !covered_by(&region, &cells)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn cone_to_polyhedron(cone: &Cone) -> Polyhedron {
    let h = cone.hrep();
    Polyhedron::from_hrep(
        cone.ambient_dim(),
        h.ineqs
            .iter()
            .map(|a| (int_to_rat(a), Rat::zero()))
            .collect(),
        h.eqs.iter().map(|e| (int_to_rat(e), Rat::zero())).collect(),
    )
}

/// Exact covering test by recursive carving. A region is covered iff no
/// piece of the region's own dimension survives outside all cells.
/// Constraints tight on the whole piece cannot separate and are skipped.
pub fn covered_by(region: &Polyhedron, cells: &[&Polyhedron]) -> Result<bool> {
    fn tight_on(piece: &Polyhedron, a: &[Rat], b: &Rat) -> bool {
        let v = piece.vrep();
        v.vertices.iter().all(|p| dot_rat(a, p) == *b)
            && v.rays.iter().all(|r| dot_rat_int(a, r).is_zero())
            && v.lineality.iter().all(|l| dot_rat_int(a, l).is_zero())
    }
    fn rec(piece: &Polyhedron, cells: &[&Polyhedron], target: usize) -> Result<bool> {
        if piece.is_empty_set() || piece.affine_dim() < target {
            return Ok(true);
        }
        let Some((first, rest)) = cells.split_first() else {
            return Ok(false);
        };
        let h = first.hrep();
        let mut sides: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for (a, b) in &h.ineqs {
            if tight_on(piece, a, b) {
                continue;
            }
            sides.push((a.iter().map(|x| -x.clone()).collect(), -b.clone()));
        }
        for (a, b) in &h.eqs {
            if tight_on(piece, a, b) {
                continue;
            }
            sides.push((a.iter().map(|x| -x.clone()).collect(), -b.clone()));
            sides.push((a.clone(), b.clone()));
        }
        for (na, nb) in sides {
            let outside = piece.intersect(&Polyhedron::from_hrep(
                piece.ambient_dim(),
                vec![(na, nb)],
                vec![],
            ))?;
            if !rec(&outside, rest, target)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
    rec(region, cells, region.affine_dim())
}

/// Facet-matching completeness test: the fan covers the tropical support iff
/// in every maximal leaf the chambers leave no unmatched interior facet.
pub fn fan_covers_tropical_support(data: &GavData) -> Result<bool> {
    let fan = data.fan()?;
    let t = trop_structure(data);
    for (_, leaf) in t.maximal_leaves() {
        let leaf_dim = leaf.dim();
        let mut chambers: Vec<Cone> = Vec::new();
        for max_cone in fan.maximal_cone_objects() {
            let cell = max_cone.intersect(leaf)?;
            if cell.dim() == leaf_dim && !chambers.contains(&cell) {
                chambers.push(cell);
            }
        }
        if chambers.is_empty() {
            return Ok(false);
        }
        let leaf_h = leaf.hrep();
        for chamber in &chambers {
            let ch = chamber.hrep().clone();
            for facet_normal in &ch.ineqs {
                let mut eqs = ch.eqs.clone();
                eqs.push(facet_normal.clone());
                let facet = Cone::from_constraints(chamber.ambient_dim(), ch.ineqs.clone(), eqs);
                let gens = facet.generator_vectors();
                let on_boundary = leaf_h
                    .ineqs
                    .iter()
                    .any(|a| gens.iter().all(|g| crate::num::dot_int(a, g).is_zero()));
                if on_boundary {
                    continue;
                }
                let matched = chambers
                    .iter()
                    .any(|other| other != chamber && other.contains_cone(&facet));
                if !matched {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{frac, int, rat};
    use crate::variety::fixtures::*;
    use crate::variety::Model;

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn selection_numbers_match_worked_values() {
        let (ell_i, ell) = selection_numbers(2, &[1, 2, 2, 4]);
        assert_eq!(ell_i, iv(&[16, 8, 8, 4]));
        assert_eq!(ell, int(20));
        let (_, ell) = selection_numbers(2, &[2, 2, 2, 4]);
        assert_eq!(ell, int(24));
        let (_, ell) = selection_numbers(1, &[3, 4, 4]);
        assert_eq!(ell, int(-8));
        let (ell_i, ell) = selection_numbers(2, &[1, 1, 1]);
        assert_eq!(ell_i, iv(&[1, 1, 1]));
        assert_eq!(ell, int(3));
    }

    #[test]
    fn p_elementary_cones_of_fano_threefold() {
        let d = fano_threefold(Model::Fan(fano_threefold_fan()));
        let pelems = p_elementary_cones(&d).unwrap();
        assert_eq!(pelems.len(), 2);
        let p1 = &pelems[0];
        assert_eq!(p1.selection, vec![0, 2, 3, 4]);
        assert_eq!(p1.ell, int(20));
        assert_eq!(p1.v_sigma, iv(&[0, 0, 0, 4]));
        assert_eq!(p1.c_sigma, int(4));
        assert_eq!(
            p1.exit_point().unwrap(),
            vec![rat(0), rat(0), rat(0), frac(1, 5)]
        );
        assert_eq!(p1.discrepancy(), rat(4));
        let p2 = &pelems[1];
        assert_eq!(p2.selection, vec![1, 2, 3, 4]);
        assert_eq!(p2.ell, int(24));
        assert_eq!(p2.v_sigma, iv(&[0, 0, 0, -8]));
        assert_eq!(p2.c_sigma, int(8));
        assert_eq!(
            p2.exit_point().unwrap(),
            vec![rat(0), rat(0), rat(0), frac(-1, 3)]
        );
        assert_eq!(p2.discrepancy(), rat(2));
    }

    #[test]
    fn affine_surface_not_log_terminal() {
        let d = affine_surface();
        let pelems = p_elementary_cones(&d).unwrap();
        assert_eq!(pelems.len(), 1);
        let p = &pelems[0];
        assert_eq!(p.ell, int(-8));
        assert_eq!(p.v_sigma, iv(&[0, 0, 40]));
        assert_eq!(p.exit_point().unwrap(), vec![rat(0), rat(0), rat(-5)]);
        assert_eq!(p.c_sigma, int(40));
        assert_eq!(p.discrepancy(), frac(-6, 5));

        let complex = build_complex(&d).unwrap();
        assert!(!complex.bounded);
        let verdict = complex.singularity_type().unwrap();
        assert_eq!(verdict.kind, SingularityKind::NotLogTerminal);
        assert_eq!(verdict.witness, Some(iv(&[0, 0, 1])));
        assert_eq!(complex.cells.len(), 3);
    }

    #[test]
    fn weakly_tropical_rays_of_affine_surface() {
        let d = affine_surface();
        let rays = weakly_tropical_rays(&d).unwrap();
        assert!(rays.contains(&iv(&[0, 0, 1])));
        assert_eq!(rays.len(), 4);
    }

    #[test]
    fn weakly_tropical_rays_of_fano_threefold() {
        let d = fano_threefold(Model::Fan(fano_threefold_fan()));
        let rays = weakly_tropical_rays(&d).unwrap();
        assert!(rays.contains(&iv(&[0, 0, 0, 1])));
        assert!(rays.contains(&iv(&[0, 0, 0, -1])));
        assert_eq!(rays.len(), 7);
    }

    #[test]
    fn fano_threefold_complex() {
        let d = fano_threefold(Model::Fan(fano_threefold_fan()));
        let complex = build_complex(&d).unwrap();
        assert!(complex.bounded);
        assert_eq!(complex.cells.len(), 15);
        assert_eq!(complex.gorenstein_index(), int(1));
        assert_eq!(complex.vertex_formula.len(), 8);
        assert_eq!(complex.vertices_computed(), complex.vertex_formula);
        let verdict = complex.singularity_type().unwrap();
        assert_eq!(verdict.kind, SingularityKind::Canonical);
    }

    #[test]
    fn fano_threefold_lattice_points() {
        let d = fano_threefold(Model::Fan(fano_threefold_fan()));
        let complex = build_complex(&d).unwrap();
        let pts = complex.lattice_points().unwrap();
        let mut expected: Vec<Vec<Int>> = vec![
            iv(&[0, 0, 0, 0]),
            iv(&[-1, -1, -1, -1]),
            iv(&[-2, -2, -2, -3]),
            iv(&[2, 0, 0, 1]),
            iv(&[0, 2, 0, 1]),
            iv(&[0, 0, 4, 1]),
            iv(&[0, 0, 1, 0]),
            iv(&[1, 1, 0, 1]),
            iv(&[1, 0, 2, 1]),
            iv(&[0, 1, 2, 1]),
            iv(&[0, -1, -1, -1]),
            iv(&[-1, 0, -1, -1]),
            iv(&[-1, -1, 0, -1]),
            iv(&[-1, -1, 1, -1]),
        ];
        expected.sort_by(|a, b| cmp_int_vec(a, b));
        assert_eq!(pts, expected);
        let t = trop_structure(&d);
        assert_eq!(pts, complex.lattice_points_by_leaf(&t).unwrap());
    }

    #[test]
    fn smooth_toric_surface_terminal() {
        let d = smooth_toric_surface();
        let complex = build_complex(&d).unwrap();
        assert!(complex.bounded);
        let verdict = complex.singularity_type().unwrap();
        assert_eq!(verdict.kind, SingularityKind::Terminal);
        assert!(verdict.witness.is_none());
    }

    #[test]
    fn defining_forms_reverify() {
        let d = fano_threefold(Model::Fan(fano_threefold_fan()));
        let pelems = p_elementary_cones(&d).unwrap();
        for cell in refinement_cells(&d).unwrap() {
            let form = defining_linear_form(&d, &cell, &pelems)
                .unwrap()
                .expect("Gorenstein example");
            for ray in cell.rays() {
                let val = dot_rat_int(&form, ray);
                let is_column = (0..d.gen_count()).any(|j| d.column(j) == *ray);
                if is_column {
                    assert_eq!(val, rat(-1));
                }
            }
        }
    }

    #[test]
    fn bound_checks_agree_with_worked_cases() {
        assert!(!exponent_bound_check(
            1,
            &[3, 4, 4],
            &int(8),
            BoundKind::LogTerminal
        ));
        assert!(exponent_bound_check(
            2,
            &[1, 2, 2, 4],
            &int(4),
            BoundKind::LogTerminal
        ));
        assert!(exponent_bound_check(
            2,
            &[1, 2, 2, 4],
            &int(4),
            BoundKind::Canonical
        ));
        assert!(exponent_bound_check(
            2,
            &[1, 1, 1],
            &int(1),
            BoundKind::LogTerminal
        ));
    }

    #[test]
    fn piecewise_convexity_of_fano_threefold() {
        let d = fano_threefold(Model::Fan(fano_threefold_fan()));
        let complex = build_complex(&d).unwrap();
        let t = trop_structure(&d);
        assert!(is_piecewise_convex(&complex, &t).unwrap());
    }

    #[test]
    fn non_fano_surface_is_not_piecewise_convex() {
        let d = non_fano_toric_surface();
        assert!(!d.is_fano().unwrap());
        let complex = build_complex(&d).unwrap();
        assert!(complex.bounded);
        assert_eq!(
            complex.singularity_type().unwrap().kind,
            SingularityKind::Terminal
        );
        let t = trop_structure(&d);
        assert!(!is_piecewise_convex(&complex, &t).unwrap());
    }

    #[test]
    fn single_cell_complex_is_piecewise_convex() {
        // one maximal cell per leaf: a product-like surface cut down to a
        // quadrant fan stays convex
        let d = smooth_toric_surface();
        let complex = build_complex(&d).unwrap();
        let t = trop_structure(&d);
        assert!(is_piecewise_convex(&complex, &t).unwrap());
    }

    #[test]
    fn support_completeness() {
        let d = fano_threefold(Model::Fan(fano_threefold_fan()));
        assert!(fan_covers_tropical_support(&d).unwrap());
        let aff = affine_surface();
        assert!(!fan_covers_tropical_support(&aff).unwrap());
    }
}
