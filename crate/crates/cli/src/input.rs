//! Input document: matrices as JSON with rationals encoded as "p/q" strings,
//! blocks, exponents, and exactly one of a fan or an ample class.

use anticanon::lattice::{GroupElement, IntMatrix, RatMatrix};
use anticanon::num::{Int, Rat};
use anticanon::polyhedral::Fan;
use anticanon::variety::{GavData, Model};
use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
pub struct InputDocument {
    /// rows of rationals as strings "p" or "p/q"
    pub a: Vec<Vec<String>>,
    /// rows of integers
    pub p: Vec<Vec<i64>>,
    pub blocks: BlockSpec,
    /// exponent lists per block; validated against P
    pub l: Vec<Vec<u64>>,
    #[serde(default)]
    pub sigma_max: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub ample: Option<AmpleSpec>,
}

#[derive(Debug, Deserialize)]
pub struct BlockSpec {
    pub n: Vec<usize>,
    pub m: usize,
}

#[derive(Debug, Deserialize)]
pub struct AmpleSpec {
    pub free: Vec<i64>,
    #[serde(default)]
    pub torsion: Vec<i64>,
}

pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: Int = num
            .trim()
            .parse()
            .map_err(|_| anyhow!("bad numerator in {:?}", s))?;
        let d: Int = den
            .trim()
            .parse()
            .map_err(|_| anyhow!("bad denominator in {:?}", s))?;
        if d == Int::from(0) {
            bail!("zero denominator in {:?}", s);
        }
        Ok(Rat::new(n, d))
    } else {
        let n: Int = s.parse().map_err(|_| anyhow!("bad integer in {:?}", s))?;
        Ok(Rat::from_integer(n))
    }
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<InputDocument> {
        serde_json::from_str(text).context("cannot parse input document")
    }

    pub fn to_data(&self) -> Result<GavData> {
        let a_rows: Result<Vec<Vec<Rat>>> = self
            .a
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect())
            .collect();
        let a = RatMatrix::from_rows(a_rows?);
        let p_rows: Vec<Vec<Int>> = self
            .p
            .iter()
            .map(|row| row.iter().map(|&x| Int::from(x)).collect())
            .collect();
        let p = IntMatrix::from_rows(p_rows);
        let model = match (&self.sigma_max, &self.ample) {
            (Some(cones), None) => {
                let rays: Vec<Vec<Int>> = (0..p.cols()).map(|j| p.col(j)).collect();
                for cone in cones {
                    for &idx in cone {
                        if idx >= rays.len() {
                            bail!("cone ray index {} out of range", idx);
                        }
                    }
                }
                Model::Fan(Fan::new(p.rows(), rays, cones.clone()))
            }
            (None, Some(spec)) => Model::AmpleClass(GroupElement {
                free: spec.free.iter().map(|&x| Int::from(x)).collect(),
                torsion: spec.torsion.iter().map(|&x| Int::from(x)).collect(),
            }),
            _ => bail!("provide exactly one of sigma_max or ample"),
        };
        let data = GavData::new(a, p, self.blocks.n.clone(), self.blocks.m, model)
            .map_err(|e| anyhow!("{}", e))?;
        if data.exponents() != self.l.as_slice() {
            bail!(
                "exponent lists disagree with the matrix P: given {:?}, derived {:?}",
                self.l,
                data.exponents()
            );
        }
        // an ample class must match the class-group shape
        if let Model::AmpleClass(u) = data.model() {
            let k = data.class_group();
            if u.free.len() != k.free_rank || u.torsion.len() != k.torsion.len() {
                bail!(
                    "ample class has shape ({} free, {} torsion), class group is {}",
                    u.free.len(),
                    u.torsion.len(),
                    k.describe()
                );
            }
        }
        Ok(data)
    }
}
