//! The fixed quasifan structure on the tropical variety: leaves indexed by
//! subsets of blocks, all sharing the lineality space of the torus factor.

use crate::num::Int;
use crate::polyhedral::Cone;
use num_traits::{One, Zero};

#[derive(Debug, Clone)]
pub struct TropStructure {
    pub complexity: usize,
    pub arrangement_size: usize,
    pub torus_rank: usize,
    /// (index set I, cone lambda_I), all subsets with 1 <= |I| <= c
    pub leaves: Vec<(Vec<usize>, Cone)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeClass {
    Big,
    Leaf(Vec<usize>),
}

impl TropStructure {
    pub fn new(complexity: usize, arrangement_size: usize, torus_rank: usize) -> TropStructure {
        let dim = arrangement_size + torus_rank;
        let mut leaves = Vec::new();
        for k in 1..=complexity {
            for idx in subsets(arrangement_size + 1, k) {
                let cone = leaf_cone(&idx, arrangement_size, torus_rank);
                leaves.push((idx, cone));
            }
        }
        debug_assert!(leaves.iter().all(|(_, c)| c.ambient_dim() == dim));
        TropStructure {
            complexity,
            arrangement_size,
            torus_rank,
            leaves,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.arrangement_size + self.torus_rank
    }

    /// The common lineality space of all leaves.
    pub fn lineality_space(&self) -> Cone {
        leaf_cone(&[], self.arrangement_size, self.torus_rank)
    }

    pub fn maximal_leaves(&self) -> Vec<&(Vec<usize>, Cone)> {
        self.leaves
            .iter()
            .filter(|(i, _)| i.len() == self.complexity)
            .collect()
    }

    pub fn leaf(&self, index_set: &[usize]) -> Option<&Cone> {
        self.leaves
            .iter()
            .find(|(i, _)| i.as_slice() == index_set)
            .map(|(_, c)| c)
    }

    /// Smallest leaf containing the cone, if any.
    pub fn containing_leaf(&self, cone: &Cone) -> Option<Vec<usize>> {
        let mut best: Option<&(Vec<usize>, Cone)> = None;
        for entry in &self.leaves {
            if entry.1.contains_cone(cone) {
                let better = match best {
                    None => true,
                    Some((bi, _)) => {
                        entry.0.len() < bi.len() || (entry.0.len() == bi.len() && entry.0 < *bi)
                    }
                };
                if better {
                    best = Some(entry);
                }
            }
        }
        best.map(|(i, _)| i.clone())
    }

    /// A cone meets the relative interior of every 1-leaf iff for each block
    /// index there is a point of the cone on the open ray of that leaf.
    pub fn is_big(&self, cone: &Cone) -> bool {
        let r = self.arrangement_size;
        let gens = cone.generator_vectors();
        'leafloop: for i in 0..=r {
            // find x in cone with block coordinates equal to the i-th leaf
            // direction: e_i for i >= 1, all-coordinates -1 for i = 0
            let n = gens.len();
            let mut eqs: Vec<(Vec<crate::num::Rat>, crate::num::Rat)> = Vec::new();
            for row in 0..r {
                let coeff: Vec<crate::num::Rat> = gens
                    .iter()
                    .map(|g| crate::num::Rat::from_integer(g[row].clone()))
                    .collect();
                let target = if i == 0 {
                    -crate::num::Rat::one()
                } else if row + 1 == i {
                    crate::num::Rat::one()
                } else {
                    crate::num::Rat::zero()
                };
                eqs.push((coeff, target));
            }
            let mut ges = Vec::new();
            for j in 0..n {
                let mut row = vec![crate::num::Rat::zero(); n];
                row[j] = crate::num::Rat::one();
                ges.push((row, crate::num::Rat::zero()));
            }
            if crate::polyhedral::simplex::solve_feasibility(n, &eqs, &ges).is_some() {
                continue 'leafloop;
            }
            return false;
        }
        true
    }

    pub fn classify(&self, cone: &Cone) -> Option<ConeClass> {
        if let Some(i) = self.containing_leaf(cone) {
            return Some(ConeClass::Leaf(i));
        }
        if self.is_big(cone) {
            return Some(ConeClass::Big);
        }
        None
    }
}

/// lambda_I = cone(e_i : i in I) + lin(torus coordinates), with the zeroth
/// direction represented by minus the sum of the block coordinates.
fn leaf_cone(index_set: &[usize], r: usize, s: usize) -> Cone {
    let dim = r + s;
    let mut rays = Vec::new();
    for &i in index_set {
        let mut v = vec![Int::zero(); dim];
        if i == 0 {
            for entry in v.iter_mut().take(r) {
                *entry = -Int::one();
            }
        } else {
            v[i - 1] = Int::one();
        }
        rays.push(v);
    }
    let mut lineality = Vec::new();
    for k in 0..s {
        let mut v = vec![Int::zero(); dim];
        v[r + k] = Int::one();
        lineality.push(v);
    }
    Cone::from_generators(dim, rays, lineality)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn leaf_count_and_lineality() {
        // c = 2, r = 3, s = 1: leaves of sizes 1 and 2
        let t = TropStructure::new(2, 3, 1);
        assert_eq!(t.leaves.len(), 4 + 6);
        assert_eq!(t.maximal_leaves().len(), 6);
        let lin = t.lineality_space();
        assert_eq!(lin.lineality().len(), 1);
        assert!(lin.rays().is_empty());
    }

    #[test]
    fn classify_rays_of_projective_model() {
        let t = TropStructure::new(2, 3, 1);
        // one ray per block of the worked example
        let v11 = Cone::from_rays(4, vec![iv(&[2, 0, 0, 1])]);
        assert_eq!(t.classify(&v11), Some(ConeClass::Leaf(vec![1])));
        let pair = Cone::from_rays(4, vec![iv(&[2, 0, 0, 1]), iv(&[0, 2, 0, 1])]);
        assert_eq!(t.classify(&pair), Some(ConeClass::Leaf(vec![1, 2])));
        let big = Cone::from_rays(
            4,
            vec![
                iv(&[-1, -1, -1, -1]),
                iv(&[2, 0, 0, 1]),
                iv(&[0, 2, 0, 1]),
                iv(&[0, 0, 4, 1]),
            ],
        );
        assert_eq!(t.classify(&big), Some(ConeClass::Big));
    }

    #[test]
    fn zeroth_leaf_membership() {
        let t = TropStructure::new(2, 3, 1);
        let v01 = Cone::from_rays(4, vec![iv(&[-1, -1, -1, -1])]);
        assert_eq!(t.classify(&v01), Some(ConeClass::Leaf(vec![0])));
        let v02 = Cone::from_rays(4, vec![iv(&[-2, -2, -2, -3])]);
        assert_eq!(t.classify(&v02), Some(ConeClass::Leaf(vec![0])));
    }
}
