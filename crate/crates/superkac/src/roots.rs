//! Bounded root generation, reflections through principal roots, Weyl
//! words and orbits, and the partial order on the root lattice.
//!
//! Real roots are generated as the reflection closure of the union of all
//! bases together with the principal roots, restricted to a height window;
//! imaginary roots exist only in affine type and are integer multiples of
//! the null root.

use crate::algebra::Algebra;
use crate::cartan::Parity;
use crate::error::{Error, Result};
use crate::rat::*;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RootKind {
    Real,
    Imaginary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub coords: Vec<i64>,
    pub parity: Parity,
    pub kind: RootKind,
    /// (even dimension, odd dimension); real roots have total 1.
    pub mult: (u32, u32),
    pub isotropic: bool,
    /// Coroot in the original coroot basis.  For isotropic real roots this
    /// is one representative of the scalar class.
    pub coroot: Vec<Rat>,
}

impl Root {
    pub fn height(&self) -> i64 {
        height_i(&self.coords)
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }
}

/// The set of roots generated up to a height bound.
#[derive(Debug, Clone)]
pub struct RootTable {
    pub height_bound: i64,
    roots: BTreeMap<Vec<i64>, Root>,
    /// True when the reflection closure stabilized strictly inside the
    /// window, i.e. the real root set is complete (finite type).
    pub complete: bool,
}

impl RootTable {
    pub fn get(&self, coords: &[i64]) -> Option<&Root> {
        self.roots.get(coords)
    }

    pub fn contains(&self, coords: &[i64]) -> bool {
        self.roots.contains_key(coords)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Root> {
        self.roots.values()
    }

    pub fn real_roots(&self) -> impl Iterator<Item = &Root> {
        self.iter().filter(|r| r.kind == RootKind::Real)
    }

    pub fn positive(&self) -> impl Iterator<Item = &Root> {
        self.iter().filter(|r| r.is_positive())
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Roots in W Pi_pr: even real roots whose orbit meets the principal
    /// roots.  With the enumerated generation these are exactly the real
    /// non-isotropic even roots alpha with alpha/2 not a root.
    pub fn reflection_orbit_roots(&self) -> impl Iterator<Item = &Root> {
        self.iter().filter(move |r| {
            r.kind == RootKind::Real && r.parity == Parity::Even && !r.isotropic && {
                let half: Option<Vec<i64>> = r
                    .coords
                    .iter()
                    .map(|&c| (c % 2 == 0).then_some(c / 2))
                    .collect();
                match half {
                    Some(h) => match self.roots.get(&h) {
                        Some(hr) => hr.parity == Parity::Odd,
                        None => true,
                    },
                    None => true,
                }
            }
        })
    }
}

/// Generate all roots with |height| <= bound.
///
/// Real roots: reflection closure of the union of the bases and the
/// principal roots under the generators r_beta, beta principal.  Imaginary
/// roots: j * delta for affine type with multiplicities from the provider;
/// finite type has none; indefinite type is refused.
pub fn generate_roots(alg: &Algebra, height_bound: i64) -> Result<RootTable> {
    generate_roots_impl(alg, height_bound, true)
}

/// Real roots only; skips the imaginary multiplicity provider so that
/// integrality predicates work even when no table is available.
pub fn generate_roots_real_only(alg: &Algebra, height_bound: i64) -> Result<RootTable> {
    generate_roots_impl(alg, height_bound, false)
}

fn generate_roots_impl(
    alg: &Algebra,
    height_bound: i64,
    with_imaginary: bool,
) -> Result<RootTable> {
    if height_bound < 1 {
        return Err(Error::Input("height bound must be >= 1".into()));
    }
    let growth = alg.growth();
    if growth.is_none() || growth == Some(crate::cartan::Growth::Ind) {
        // real generation is still fine only for FIN/AFF; refuse IND where
        // imaginary data would be needed
        if growth == Some(crate::cartan::Growth::Ind) {
            return Err(Error::IndefiniteImaginary);
        }
    }

    let mut table: BTreeMap<Vec<i64>, Root> = BTreeMap::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();

    let push = |coords: Vec<i64>,
                coroot: Vec<Rat>,
                parity: Parity,
                table: &mut BTreeMap<Vec<i64>, Root>,
                queue: &mut VecDeque<Vec<i64>>| {
        if height_i(&coords).abs() > height_bound {
            return;
        }
        if table.contains_key(&coords) {
            return;
        }
        let pairing = crate::cartan::pair(&alg.supermatrix, &coroot, &coords);
        let isotropic = pairing.is_zero();
        let mult = match parity {
            Parity::Even => (1, 0),
            Parity::Odd => (0, 1),
        };
        table.insert(
            coords.clone(),
            Root {
                coords: coords.clone(),
                parity,
                kind: RootKind::Real,
                mult,
                isotropic,
                coroot,
            },
        );
        queue.push_back(coords);
    };

    // seeds: every simple root of every base, with both signs
    for base in &alg.bases.bases {
        for (i, r) in base.simple_roots.iter().enumerate() {
            push(
                r.clone(),
                base.coroots[i].clone(),
                base.parity[i],
                &mut table,
                &mut queue,
            );
            push(
                r.iter().map(|x| -x).collect(),
                neg_vec(&base.coroots[i]),
                base.parity[i],
                &mut table,
                &mut queue,
            );
        }
    }
    // seeds: principal roots with both signs
    for p in &alg.principal {
        push(
            p.coords.clone(),
            p.coroot.clone(),
            Parity::Even,
            &mut table,
            &mut queue,
        );
        push(
            p.coords.iter().map(|x| -x).collect(),
            neg_vec(&p.coroot),
            Parity::Even,
            &mut table,
            &mut queue,
        );
    }

    // closure under the principal reflections
    while let Some(coords) = queue.pop_front() {
        let (coroot, parity) = {
            let r = &table[&coords];
            (r.coroot.clone(), r.parity)
        };
        for gen in &alg.principal {
            let t = alg.pair(&gen.coroot, &coords);
            if t.is_zero() {
                continue;
            }
            let Some(ti) = to_i64(&t) else {
                return Err(Error::Internal(
                    "non-integral pairing between generated roots".into(),
                ));
            };
            let image: Vec<i64> = coords
                .iter()
                .zip(&gen.coords)
                .map(|(x, g)| x - ti * g)
                .collect();
            if height_i(&image).abs() > height_bound || table.contains_key(&image) {
                continue;
            }
            // (r_beta alpha)^vee = r_beta^vee alpha^vee
            let s = pair_root_q(alg, &coroot, &gen.coords);
            let new_coroot = sub_vec(&coroot, &scale_vec(&s, &gen.coroot));
            push(image, new_coroot, parity, &mut table, &mut queue);
        }
    }

    // completeness: finite type closes strictly inside the window when no
    // root touches the boundary band that a further reflection could leave
    let complete = growth == Some(crate::cartan::Growth::Fin)
        && table.keys().all(|c| height_i(c).abs() < height_bound);

    // imaginary roots for affine type
    if with_imaginary && growth == Some(crate::cartan::Growth::Aff) {
        let aff = alg.affine()?;
        let dh = height_i(&aff.delta);
        let mut j = 1i64;
        while j * dh <= height_bound {
            let mult = alg.imaginary.mult(j)?;
            for sign in [1i64, -1] {
                let coords: Vec<i64> = aff.delta.iter().map(|&x| sign * j * x).collect();
                table.insert(
                    coords.clone(),
                    Root {
                        coords,
                        parity: Parity::Even,
                        kind: RootKind::Imaginary,
                        mult,
                        isotropic: true,
                        coroot: zero_vec(alg.rank()),
                    },
                );
            }
            j += 1;
        }
    }

    Ok(RootTable {
        height_bound,
        roots: table,
        complete,
    })
}

/// alpha(c) where alpha has integer coordinates and c is a coroot.
fn pair_root_q(alg: &Algebra, coroot: &[Rat], root: &[i64]) -> Rat {
    alg.pair(coroot, root)
}

/// Reflect an integer root-lattice vector through a non-isotropic root
/// given by (coords, coroot): r(x) = x - x(beta^vee) beta.
pub fn reflect_root(
    alg: &Algebra,
    x: &[i64],
    beta: &[i64],
    beta_coroot: &[Rat],
) -> Result<Vec<i64>> {
    let self_pairing = alg.pair(beta_coroot, beta);
    if self_pairing.is_zero() {
        return Err(Error::IsotropicReflection);
    }
    let t = alg.pair(beta_coroot, x);
    let Some(ti) = to_i64(&t) else {
        return Err(Error::Internal("reflection leaves the root lattice".into()));
    };
    Ok(x.iter().zip(beta).map(|(a, b)| a - ti * b).collect())
}

/// Reflect a rational vector (e.g. a character exponent offset).
pub fn reflect_vec_q(
    alg: &Algebra,
    x: &[Rat],
    beta: &[i64],
    beta_coroot: &[Rat],
) -> Result<Vec<Rat>> {
    let self_pairing = alg.pair(beta_coroot, beta);
    if self_pairing.is_zero() {
        return Err(Error::IsotropicReflection);
    }
    let t = crate::cartan::pair_q(&alg.supermatrix, beta_coroot, x);
    Ok(x.iter().zip(beta).map(|(a, b)| a - &t * q(*b)).collect())
}

/// A word in the generators r_beta, beta principal (indices into
/// `alg.principal`).  Not necessarily reduced.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(vec![])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sign(&self) -> i64 {
        if self.0.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Apply a word to an integer root-lattice vector (letters act left to
/// right: the first letter is applied first).
pub fn apply_word_root(alg: &Algebra, w: &WeylWord, x: &[i64]) -> Result<Vec<i64>> {
    let mut cur = x.to_vec();
    for &g in &w.0 {
        let p = &alg.principal[g];
        cur = reflect_root(alg, &cur, &p.coords, &p.coroot)?;
    }
    Ok(cur)
}

pub fn apply_word_vec_q(alg: &Algebra, w: &WeylWord, x: &[Rat]) -> Result<Vec<Rat>> {
    let mut cur = x.to_vec();
    for &g in &w.0 {
        let p = &alg.principal[g];
        cur = reflect_vec_q(alg, &cur, &p.coords, &p.coroot)?;
    }
    Ok(cur)
}

/// Orbit of a vector under words of length <= bound in the principal
/// generators, with one witness word per element (first found in BFS).
/// Output is sorted by (height, lex) of the image.
pub fn weyl_orbit(
    alg: &Algebra,
    x: &[i64],
    length_bound: usize,
) -> Result<Vec<(Vec<i64>, WeylWord)>> {
    let mut seen: BTreeMap<Vec<i64>, WeylWord> = BTreeMap::new();
    seen.insert(x.to_vec(), WeylWord::identity());
    let mut frontier = vec![x.to_vec()];
    for _ in 0..length_bound {
        let mut next = Vec::new();
        for cur in frontier {
            let word = seen[&cur].clone();
            for (gi, p) in alg.principal.iter().enumerate() {
                let image = reflect_root(alg, &cur, &p.coords, &p.coroot)?;
                if !seen.contains_key(&image) {
                    let mut w = word.clone();
                    w.0.push(gi);
                    seen.insert(image.clone(), w);
                    next.push(image);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let mut out: Vec<(Vec<i64>, WeylWord)> = seen.into_iter().collect();
    out.sort_by(|a, b| (height_i(&a.0), &a.0).cmp(&(height_i(&b.0), &b.0)));
    Ok(out)
}

/// Decide 0 <= nu, i.e. nu in Z_{>=0} Delta^{++} with
/// Delta^{++} = Delta intersected with the non-negative rational cone over
/// the principal roots.  Exact bounded search; non-integral input is simply
/// not expressible and yields false.
pub fn leq_zero(alg: &Algebra, table: &RootTable, nu: &[Rat]) -> bool {
    if nu.iter().all(Rat::is_zero) {
        return true;
    }
    let Some(nu_int) = q_to_i_vec(nu) else {
        return false;
    };
    if nu_int.iter().any(|&x| x < 0) {
        // Delta^{++} lies in the positive cone of every base
        return false;
    }
    let target_ht = height_i(&nu_int);
    if target_ht <= 0 {
        return nu_int.iter().all(|&x| x == 0);
    }
    // candidates: roots inside the rational cone over the principal roots
    let candidates: Vec<Vec<i64>> = delta_plus_plus(alg, table, target_ht);
    fn search(
        rest: Vec<i64>,
        start: usize,
        candidates: &[Vec<i64>],
        memo: &mut BTreeSet<(Vec<i64>, usize)>,
    ) -> bool {
        if rest.iter().all(|&x| x == 0) {
            return true;
        }
        if memo.contains(&(rest.clone(), start)) {
            return false;
        }
        for (i, c) in candidates.iter().enumerate().skip(start) {
            if c.iter().zip(&rest).all(|(a, b)| a <= b) {
                let next: Vec<i64> = rest.iter().zip(c).map(|(a, b)| a - b).collect();
                if search(next, i, candidates, memo) {
                    return true;
                }
            }
        }
        memo.insert((rest, start));
        false
    }
    let mut memo = BTreeSet::new();
    search(nu_int, 0, &candidates, &mut memo)
}

/// Positive-cone roots over the principal roots, up to a height.
pub fn delta_plus_plus(alg: &Algebra, table: &RootTable, max_height: i64) -> Vec<Vec<i64>> {
    let pr_matrix: Vec<Vec<Rat>> = alg
        .principal
        .iter()
        .map(|p| i_to_q_vec(&p.coords))
        .collect();
    let mut out: Vec<Vec<i64>> = table
        .iter()
        .filter(|r| r.height() > 0 && r.height() <= max_height)
        .filter(|r| in_nonneg_cone(&pr_matrix, &r.coords))
        .map(|r| r.coords.clone())
        .collect();
    out.sort_by_key(|c| (height_i(c), c.clone()));
    out
}

/// Is `x` a non-negative rational combination of the given vectors?
fn in_nonneg_cone(generators: &[Vec<Rat>], x: &[i64]) -> bool {
    // Solve sum c_i g_i = x exactly; generators of a root system slice are
    // few, so the simple approach: solve the linear system and check a
    // non-negative solution exists on the solution affine subspace.
    // The generators of Delta^{++} here are principal roots; in the affine
    // case they are linearly independent or have a one-dimensional positive
    // relation (the null root), so checking the particular solution plus
    // the kernel ray suffices.
    let n = x.len();
    let m = generators.len();
    let mat: Vec<Vec<Rat>> = (0..n)
        .map(|row| (0..m).map(|col| generators[col][row].clone()).collect())
        .collect();
    let b: Vec<Rat> = x.iter().map(|&v| q(v)).collect();
    let Some(sol) = solve(&mat, &b) else {
        return false;
    };
    if sol.iter().all(|c| !c.is_negative()) {
        return true;
    }
    let ker = kernel(&mat);
    if ker.is_empty() {
        return false;
    }
    if ker.len() == 1 {
        // move along the ray to make all coordinates non-negative if possible
        let dir = &ker[0];
        let mut lo: Option<Rat> = None;
        let mut hi: Option<Rat> = None;
        for (s, d) in sol.iter().zip(dir) {
            if d.is_zero() {
                if s.is_negative() {
                    return false;
                }
                continue;
            }
            let bound = -s / d;
            if d.is_positive() {
                // need t >= -s/d
                if lo.as_ref().is_none_or(|l| bound > *l) {
                    lo = Some(bound);
                }
            } else if hi.as_ref().is_none_or(|h| bound < *h) {
                hi = Some(bound);
            }
        }
        return match (lo, hi) {
            (Some(l), Some(h)) => l <= h,
            _ => true,
        };
    }
    // higher-dimensional kernels do not occur for the supported types
    false
}
