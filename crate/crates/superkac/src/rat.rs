//! Exact rational scalars and the small linear algebra the rest of the
//! crate needs: heights, pairings, reduced row echelon form, kernels.
//!
//! Everything is over `Rat = Ratio<BigInt>`; no floating point anywhere.

#![allow(clippy::needless_range_loop)] // indexed loops mirror the matrix formulas
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Rat = Ratio<BigInt>;

/// Integer literal as a rational.
pub fn q(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `num/den` as a rational.
pub fn qr(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// True when `x` is congruent to 1/2 mod 1.
pub fn is_half_odd_integer(x: &Rat) -> bool {
    is_integer(&(x + x)) && !is_integer(x)
}

pub fn to_i64(x: &Rat) -> Option<i64> {
    if is_integer(x) {
        i64::try_from(x.numer().clone()).ok()
    } else {
        None
    }
}

/// Parse `"3"`, `"-3"`, or `"num/den"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().ok()?;
            let d = d.trim().parse::<BigInt>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
    }
}

/// Render as `"n"` for integers, `"n/d"` otherwise.
pub fn fmt_rat(x: &Rat) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sum of coordinates of an integer vector.
pub fn height_i(v: &[i64]) -> i64 {
    v.iter().sum()
}

/// Sum of coordinates of a rational vector.
pub fn height_q(v: &[Rat]) -> Rat {
    v.iter().fold(Rat::zero(), |a, b| a + b)
}

pub fn add_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

pub fn neg_vec(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

pub fn zero_vec(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(Rat::is_zero)
}

pub fn i_to_q_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| q(x)).collect()
}

pub fn q_to_i_vec(v: &[Rat]) -> Option<Vec<i64>> {
    v.iter().map(to_i64).collect()
}

/// Dot product.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for cc in 0..cols {
                    let sub = &f * &m[r][cc];
                    m[i][cc] = &m[i][cc] - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(m: &[Vec<Rat>]) -> usize {
    let mut work: Vec<Vec<Rat>> = m.to_vec();
    rref(&mut work).len()
}

/// Kernel basis of `m` (as column vectors `v` with `m v = 0`).
pub fn kernel(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if m.is_empty() {
        return vec![];
    }
    let cols = m[0].len();
    let mut work: Vec<Vec<Rat>> = m.to_vec();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = zero_vec(cols);
        v[f] = Rat::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -work[ri][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// One rational solution of `m x = b`, if the system is consistent.
pub fn solve(m: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = m.len();
    assert_eq!(rows, b.len());
    if rows == 0 {
        return Some(vec![]);
    }
    let cols = m[0].len();
    let mut aug: Vec<Vec<Rat>> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None; // inconsistent
    }
    let mut x = zero_vec(cols);
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[ri][cols].clone();
    }
    Some(x)
}

/// Scale a rational vector to a primitive integer vector (clears
/// denominators, divides by the gcd, keeps the sign).
pub fn primitive_integer(v: &[Rat]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = g.gcd(n);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|n| n / &g).collect()
}
