//! Enumeration of the sorted exponent tuples compatible with log terminality
//! in a given complexity: the tuples (l_0 <= ... <= l_{c+1}) with
//! sum 1/l_i > 1, organized into families with free or bounded tails.

use crate::num::{Int, Rat};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TupleFamily {
    /// prefix fixed, remaining entries free (any value >= the last prefix
    /// entry, kept sorted)
    FreeTail { prefix: Vec<u64>, free: usize },
    /// prefix fixed, one final entry ranging over [last prefix entry .. max]
    BoundedLast { prefix: Vec<u64>, last_max: u64 },
}

impl TupleFamily {
    pub fn contains(&self, tuple: &[u64]) -> bool {
        match self {
            TupleFamily::FreeTail { prefix, free } => {
                tuple.len() == prefix.len() + free
                    && tuple.starts_with(prefix)
                    && tuple.windows(2).all(|w| w[0] <= w[1])
            }
            TupleFamily::BoundedLast { prefix, last_max } => {
                tuple.len() == prefix.len() + 1
                    && tuple.starts_with(prefix)
                    && *tuple.last().unwrap() >= *prefix.last().unwrap()
                    && *tuple.last().unwrap() <= *last_max
            }
        }
    }

    pub fn describe(&self) -> String {
        let letters = ["x", "y", "z", "w"];
        match self {
            TupleFamily::FreeTail { prefix, free } => {
                let mut parts: Vec<String> = prefix.iter().map(|l| l.to_string()).collect();
                for i in 0..*free {
                    parts.push(letters[i.min(3)].to_string());
                }
                format!("({})", parts.join(","))
            }
            TupleFamily::BoundedLast { prefix, last_max } => {
                let mut parts: Vec<String> = prefix.iter().map(|l| l.to_string()).collect();
                parts.push(format!("<={}", last_max));
                format!("({})", parts.join(","))
            }
        }
    }
}

/// Is the sorted tuple compatible with log terminality, i.e. sum 1/l > 1?
pub fn tuple_allowed(tuple: &[u64]) -> bool {
    let sum: Rat = tuple
        .iter()
        .map(|&l| Rat::new(Int::one(), Int::from(l)))
        .sum();
    sum > Rat::one()
}

/// All families of sorted (complexity+2)-tuples with sum of reciprocals
/// above one, derived from the inequality alone.
pub fn log_terminal_tuple_families(complexity: usize) -> Vec<TupleFamily> {
    let k = complexity + 2;
    let mut out = Vec::new();
    let mut prefix: Vec<u64> = Vec::new();
    extend(&mut prefix, k, Rat::zero(), &mut out);
    out
}

fn extend(prefix: &mut Vec<u64>, k: usize, sum: Rat, out: &mut Vec<TupleFamily>) {
    let remaining = k - prefix.len();
    if sum >= Rat::one() {
        // every completion works
        out.push(TupleFamily::FreeTail {
            prefix: prefix.clone(),
            free: remaining,
        });
        return;
    }
    // sum < 1 here and the tail must contribute more than 1 - sum
    let gap = Rat::one() - &sum;
    let min_entry = *prefix.last().unwrap_or(&1);
    if remaining == 1 {
        // 1/l > gap  <=>  l < 1/gap
        let bound = Rat::one() / gap;
        let last_max = if bound.denom().is_one() {
            bound.to_integer() - Int::one()
        } else {
            bound.floor().to_integer()
        };
        let last_max: u64 = match last_max.to_string().parse() {
            Ok(v) => v,
            Err(_) => return,
        };
        if last_max >= min_entry {
            out.push(TupleFamily::BoundedLast {
                prefix: prefix.clone(),
                last_max,
            });
        }
        return;
    }
    // next entry v is feasible iff filling the whole tail with v exceeds the
    // gap: remaining/v > gap  <=>  v < remaining/gap
    let limit = Rat::from_integer(Int::from(remaining as u64)) / gap;
    let mut v = min_entry;
    loop {
        if Rat::from_integer(Int::from(v)) >= limit {
            break;
        }
        prefix.push(v);
        let new_sum = sum.clone() + Rat::new(Int::one(), Int::from(v));
        extend(prefix, k, new_sum, out);
        prefix.pop();
        v += 1;
    }
}

/// Membership test against the enumerated families (used to cross-check the
/// direct inequality).
pub fn allowed_by_families(families: &[TupleFamily], tuple: &[u64]) -> bool {
    families.iter().any(|f| f.contains(tuple))
}
