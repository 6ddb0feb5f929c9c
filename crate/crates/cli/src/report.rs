//! Report payloads. Field order is the serialization order; all lists are
//! sorted upstream, so byte output is deterministic for a fixed input.

use anticanon::lattice::GroupElement;
use anticanon::num::{fmt_rat, Int, Rat};
use serde::Serialize;

#[derive(Serialize)]
pub struct ValidateReport {
    pub command: &'static str,
    pub valid: bool,
    pub violations: Vec<String>,
    pub class_group: Option<String>,
    pub relations: Vec<String>,
}

#[derive(Serialize)]
pub struct AccReport {
    pub command: &'static str,
    pub class_group: String,
    pub dimension: usize,
    pub bounded: bool,
    pub gorenstein_index: String,
    pub vertices: Vec<Vec<String>>,
    pub cells: Vec<CellReport>,
    pub lattice_points: Option<Vec<Vec<i64>>>,
    pub verdict: String,
    pub witness: Option<Vec<i64>>,
    pub piecewise_convex: Option<bool>,
}

#[derive(Serialize)]
pub struct CellReport {
    pub rays: Vec<Vec<i64>>,
    pub form: Vec<String>,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub command: &'static str,
    pub agrees: bool,
    pub vertex_sets_equal: bool,
    pub cells: Vec<OracleCell>,
}

#[derive(Serialize)]
pub struct OracleCell {
    pub rays: Vec<Vec<i64>>,
    pub agrees: bool,
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub command: &'static str,
    pub class_count: usize,
    pub rows: Vec<ClassRow>,
    pub bounds: Option<BoundsReport>,
    pub no_terminal: bool,
}

#[derive(Serialize)]
pub struct ClassRow {
    pub no: usize,
    pub shape: String,
    pub parameters: Vec<i64>,
    pub relation: String,
    pub class_group: String,
    pub degree_matrix_free: Vec<Vec<String>>,
    pub degree_matrix_torsion: Vec<Vec<String>>,
    pub ample_class: Vec<String>,
    pub picard: usize,
    pub fano_index: String,
    pub eff_smooth: bool,
    pub verdict: String,
    pub one_dimensional_components: bool,
    pub merged_parameters: Vec<Vec<i64>>,
}

#[derive(Serialize)]
pub struct BoundsReport {
    pub max_picard: usize,
    pub within_three: bool,
    pub within_three_plus_m: bool,
    pub within_five: bool,
}

#[derive(Serialize)]
pub struct TuplesReport {
    pub command: &'static str,
    pub complexity: usize,
    pub families: Vec<String>,
}

pub fn rat_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(fmt_rat).collect()
}

pub fn int_i64s(v: &[Int]) -> Vec<i64> {
    v.iter()
        .map(|x| x.to_string().parse::<i64>().expect("small integer"))
        .collect()
}

pub fn class_strings(el: &GroupElement) -> Vec<String> {
    let mut parts: Vec<String> = el.free.iter().map(|x| x.to_string()).collect();
    parts.extend(el.torsion.iter().map(|x| format!("{}~", x)));
    parts
}
