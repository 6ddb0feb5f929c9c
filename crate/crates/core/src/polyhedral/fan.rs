//! Fans: finite collections of cones sharing primitive ray generators.

use super::cone::Cone;
use crate::error::Result;
use crate::num::Int;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub ambient_dim: usize,
    /// primitive ray generators, deterministic order
    pub rays: Vec<Vec<Int>>,
    /// each maximal cone as a sorted list of indices into `rays`
    pub maximal_cones: Vec<Vec<usize>>,
    /// shared lineality generators (quasifans); empty for ordinary fans
    pub lineality: Vec<Vec<Int>>,
}

impl Fan {
    pub fn new(ambient_dim: usize, rays: Vec<Vec<Int>>, mut maximal_cones: Vec<Vec<usize>>) -> Fan {
        for c in maximal_cones.iter_mut() {
            c.sort_unstable();
            c.dedup();
        }
        maximal_cones.sort();
        maximal_cones.dedup();
        Fan {
            ambient_dim,
            rays,
            maximal_cones,
            lineality: Vec::new(),
        }
    }

    pub fn cone_at(&self, idx: usize) -> Cone {
        let gens: Vec<Vec<Int>> = self.maximal_cones[idx]
            .iter()
            .map(|&r| self.rays[r].clone())
            .collect();
        Cone::from_generators(self.ambient_dim, gens, self.lineality.clone())
    }

    pub fn maximal_cone_objects(&self) -> Vec<Cone> {
        (0..self.maximal_cones.len())
            .map(|i| self.cone_at(i))
            .collect()
    }

    /// A cone belongs to the fan iff it is a face of some maximal cone.
    pub fn contains_cone(&self, c: &Cone) -> Result<bool> {
        for m in self.maximal_cone_objects() {
            if m.contains_cone(c) && Cone::is_face(c, &m)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Pairwise intersections must be faces of both participants.
    pub fn is_valid_fan(&self) -> Result<bool> {
        let cones = self.maximal_cone_objects();
        for c in &cones {
            if !c.is_pointed() {
                return Ok(false);
            }
        }
        for i in 0..cones.len() {
            for j in i + 1..cones.len() {
                let meet = cones[i].intersect(&cones[j])?;
                if !Cone::is_face(&meet, &cones[i])? || !Cone::is_face(&meet, &cones[j])? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// No maximal cone contained in another.
    pub fn maximal_cones_are_maximal(&self) -> bool {
        let cones = self.maximal_cone_objects();
        for i in 0..cones.len() {
            for j in 0..cones.len() {
                if i != j && cones[j].contains_cone(&cones[i]) {
                    return false;
                }
            }
        }
        true
    }
}
