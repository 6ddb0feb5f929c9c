//! Numeric aliases and small exact-vector helpers used across the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

pub fn int_to_rat(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat_int(a: &[Rat], b: &[Int]) -> Rat {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x * Rat::from_integer(y.clone()))
        .sum()
}

pub fn is_zero_vec_rat(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn is_zero_vec_int(v: &[Int]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Clear denominators and divide by the gcd of the entries; the result is a
/// primitive integer vector pointing in the same direction. Zero vectors are
/// returned unchanged.
pub fn primitive_direction(v: &[Rat]) -> Vec<Int> {
    if is_zero_vec_rat(v) {
        return vec![Int::zero(); v.len()];
    }
    let mut lcm = Int::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = Int::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    ints.iter().map(|x| x / &g).collect()
}

/// Gcd-normalize a nonzero integer vector; returns (primitive, scale) with
/// `scale * primitive == v` and `scale > 0`.
pub fn primitive_int(v: &[Int]) -> Option<(Vec<Int>, Int)> {
    if is_zero_vec_int(v) {
        return None;
    }
    let mut g = Int::zero();
    for x in v {
        g = g.gcd(x);
    }
    let prim: Vec<Int> = v.iter().map(|x| x / &g).collect();
    Some((prim, g))
}

pub fn rat_floor(x: &Rat) -> Int {
    x.floor().to_integer()
}

pub fn rat_ceil(x: &Rat) -> Int {
    x.ceil().to_integer()
}

/// Lexicographic comparison for deterministic ordering of rational vectors.
pub fn cmp_rat_vec(a: &[Rat], b: &[Rat]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

pub fn cmp_int_vec(a: &[Int], b: &[Int]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

pub fn fmt_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn fmt_rat_vec(v: &[Rat]) -> String {
    let body: Vec<String> = v.iter().map(fmt_rat).collect();
    format!("({})", body.join(", "))
}

pub fn fmt_int_vec(v: &[Int]) -> String {
    let body: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", body.join(", "))
}

pub fn sign_of(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
