//! Cartan supermatrices, odd reflections, base enumeration, and the
//! finite/affine/indefinite trichotomy.
//!
//! A Cartan supermatrix is a pair (A, p) of a square rational matrix and a
//! parity vector subject to the axioms
//!
//!   (A00)  a_ij = 0  implies  a_ji = 0,
//!   (A0)   p(i) even implies  a_ii = 2 and a_ij in Z_{<=0} for j != i,
//!   (A1)   p(i) odd  implies  a_ii = 2 with a_ij in 2 Z_{<=0}, or a_ii = 0,
//!
//! required not just of (A, p) itself but of every pair reachable from it by
//! chains of odd reflections.  An odd reflection at an isotropic odd index i
//! replaces the simple roots, coroots, matrix, and parities by new data; the
//! set of all bases so produced is enumerated by [`enumerate_bases`].

#![allow(clippy::needless_range_loop)] // indexed loops mirror the matrix formulas
use crate::error::{Error, Result};
use crate::rat::*;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Parity of an integer vector under the linear extension of `p`.
    pub fn of_vector(coords: &[i64], p: &[Parity]) -> Parity {
        let odd_sum: i64 = coords
            .iter()
            .zip(p)
            .filter(|(_, par)| **par == Parity::Odd)
            .map(|(c, _)| *c)
            .sum();
        if odd_sum.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The defining pair (A, p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanSupermatrix {
    pub a: Vec<Vec<Rat>>,
    pub parity: Vec<Parity>,
}

impl CartanSupermatrix {
    pub fn new(a: Vec<Vec<Rat>>, parity: Vec<Parity>) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(Error::Shape("matrix must be non-empty".into()));
        }
        if a.iter().any(|row| row.len() != n) {
            return Err(Error::Shape(format!("matrix must be square ({n} rows)")));
        }
        if parity.len() != n {
            return Err(Error::Shape(format!(
                "parity vector has length {} but the matrix has size {n}",
                parity.len()
            )));
        }
        Ok(CartanSupermatrix { a, parity })
    }

    pub fn from_ints(a: &[&[i64]], parity: &[u8]) -> Self {
        CartanSupermatrix::new(
            a.iter()
                .map(|row| row.iter().map(|&x| q(x)).collect())
                .collect(),
            parity
                .iter()
                .map(|&b| if b == 0 { Parity::Even } else { Parity::Odd })
                .collect(),
        )
        .expect("static supermatrix data")
    }

    pub fn size(&self) -> usize {
        self.a.len()
    }

    /// The base spanned by the standard simple roots and coroots.
    pub fn initial_base(&self) -> BaseDatum {
        let n = self.size();
        let simple_roots: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let coroots: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        BaseDatum {
            simple_roots,
            coroots,
            parity: self.parity.clone(),
            matrix: self.a.clone(),
            rho_offset: vec![0; n],
        }
    }
}

/// A base obtained from the original one by odd reflections.  All roots are
/// integer vectors in the coordinates of the *original* simple roots, and all
/// coroots are rational vectors in the original simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseDatum {
    pub simple_roots: Vec<Vec<i64>>,
    pub coroots: Vec<Vec<Rat>>,
    pub parity: Vec<Parity>,
    /// Induced matrix a'_ij = alpha'_j((alpha'_i)^vee).
    pub matrix: Vec<Vec<Rat>>,
    /// rho' - rho, the accumulated sum of reflected isotropic roots.
    pub rho_offset: Vec<i64>,
}

/// Pairing of a root (integer coordinates over the original base) against a
/// coroot (rational coordinates over the original coroot basis), computed
/// through the original matrix: root(coroot) = sum_k sum_l c_k a_kl r_l.
pub fn pair(sm: &CartanSupermatrix, coroot: &[Rat], root_coords: &[i64]) -> Rat {
    let mut acc = Rat::zero();
    for (k, ck) in coroot.iter().enumerate() {
        if ck.is_zero() {
            continue;
        }
        let mut row = Rat::zero();
        for (l, &rl) in root_coords.iter().enumerate() {
            if rl != 0 {
                row += &sm.a[k][l] * q(rl);
            }
        }
        acc += ck * row;
    }
    acc
}

/// Same pairing with rational root coordinates.
pub fn pair_q(sm: &CartanSupermatrix, coroot: &[Rat], root_coords: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (k, ck) in coroot.iter().enumerate() {
        if ck.is_zero() {
            continue;
        }
        let mut row = Rat::zero();
        for (l, rl) in root_coords.iter().enumerate() {
            if !rl.is_zero() {
                row += &sm.a[k][l] * rl;
            }
        }
        acc += ck * row;
    }
    acc
}

impl BaseDatum {
    /// Index set of simple roots at which an odd reflection is defined.
    pub fn isotropic_indices(&self) -> Vec<usize> {
        (0..self.simple_roots.len())
            .filter(|&i| self.parity[i] == Parity::Odd && self.matrix[i][i].is_zero())
            .collect()
    }

    /// Canonical key: the sorted set of simple-root coordinate vectors
    /// (sign-sensitive, so a base and its negative are distinct).
    pub fn key(&self) -> Vec<Vec<i64>> {
        let mut k = self.simple_roots.clone();
        k.sort();
        k
    }

    /// Recompute the induced matrix from the stored roots and coroots.
    fn induced_matrix(
        sm: &CartanSupermatrix,
        roots: &[Vec<i64>],
        coroots: &[Vec<Rat>],
    ) -> Vec<Vec<Rat>> {
        coroots
            .iter()
            .map(|c| roots.iter().map(|r| pair(sm, c, r)).collect())
            .collect()
    }
}

/// Odd reflection of a base at index `i`.
///
/// The reflected simple roots are -alpha_i at i, alpha_i + alpha_j where
/// a_ij != 0, and alpha_j otherwise.  Coroots follow the four-case formula
/// driven by (a_ij, a_jj, a_ji); the reflected index itself uses the scaling
/// rule (c alpha)^vee = c^{-1} alpha^vee.  The isotropic-coroot scale in the
/// case a_jj = 2, a_ji = -1 is chosen so that reflecting twice restores the
/// base exactly.
pub fn odd_reflect(sm: &CartanSupermatrix, base: &BaseDatum, i: usize) -> Result<BaseDatum> {
    let n = base.simple_roots.len();
    if i >= n {
        return Err(Error::Input(format!("index {i} out of range for rank {n}")));
    }
    if base.parity[i] != Parity::Odd || !base.matrix[i][i].is_zero() {
        return Err(Error::NotIsotropicIndex { index: i });
    }
    let a = &base.matrix;
    let mut roots = Vec::with_capacity(n);
    let mut coroots = Vec::with_capacity(n);
    let mut parity = Vec::with_capacity(n);
    let two = q(2);
    for j in 0..n {
        if j == i {
            roots.push(base.simple_roots[i].iter().map(|x| -x).collect());
            coroots.push(neg_vec(&base.coroots[i]));
            parity.push(base.parity[i]);
            continue;
        }
        let aij = &a[i][j];
        if aij.is_zero() {
            roots.push(base.simple_roots[j].clone());
            coroots.push(base.coroots[j].clone());
            parity.push(base.parity[j]);
            continue;
        }
        let sum: Vec<i64> = base.simple_roots[i]
            .iter()
            .zip(&base.simple_roots[j])
            .map(|(x, y)| x + y)
            .collect();
        roots.push(sum);
        parity.push(base.parity[j].flip());
        let aji = &a[j][i];
        let ajj = &a[j][j];
        let combo = add_vec(
            &scale_vec(aij, &base.coroots[j]),
            &scale_vec(aji, &base.coroots[i]),
        );
        let coroot = if *ajj == two {
            if *aji == -Rat::one() {
                neg_vec(&combo)
            } else {
                let denom = aij * (aji + Rat::one());
                if denom.is_zero() {
                    return Err(Error::UnclassifiableEntry { i, j });
                }
                scale_vec(&denom.recip(), &combo)
            }
        } else if ajj.is_zero() {
            let denom = aij * aji;
            if denom.is_zero() {
                return Err(Error::UnclassifiableEntry { i, j });
            }
            scale_vec(&denom.recip(), &combo)
        } else {
            return Err(Error::UnclassifiableEntry { i, j });
        };
        coroots.push(coroot);
    }
    let matrix = BaseDatum::induced_matrix(sm, &roots, &coroots);
    let rho_offset = base
        .rho_offset
        .iter()
        .zip(&base.simple_roots[i])
        .map(|(o, b)| o + b)
        .collect();
    Ok(BaseDatum {
        simple_roots: roots,
        coroots,
        parity,
        matrix,
        rho_offset,
    })
}

/// The set of bases reachable from the initial one, with a closure flag.
#[derive(Debug, Clone)]
pub struct BaseSet {
    pub bases: Vec<BaseDatum>,
    pub closed: bool,
}

/// Breadth-first closure of the initial base under odd reflections,
/// deduplicated by the unordered set of simple roots.  Output order is
/// canonical (sorted by key).  Truncation at `bound` is reported, never
/// silent.
pub fn enumerate_bases(sm: &CartanSupermatrix, bound: usize) -> Result<BaseSet> {
    let start = sm.initial_base();
    let mut seen: BTreeMap<Vec<Vec<i64>>, BaseDatum> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(start.key(), start.clone());
    queue.push_back(start);
    let mut closed = true;
    while let Some(base) = queue.pop_front() {
        for i in base.isotropic_indices() {
            let next = odd_reflect(sm, &base, i)?;
            let key = next.key();
            if seen.contains_key(&key) {
                continue;
            }
            if seen.len() >= bound {
                closed = false;
                continue;
            }
            seen.insert(key, next.clone());
            queue.push_back(next);
        }
    }
    Ok(BaseSet {
        bases: seen.into_values().collect(),
        closed,
    })
}

/// A single axiom violation, with the axiom name and offending indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub row: usize,
    pub col: usize,
    /// Reflection chain (indices) from the original base to the base where
    /// the violation was found; empty for the input itself.
    pub chain: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    /// Whether the odd-reflection closure was fully enumerated.
    pub closed: bool,
    pub bases_seen: usize,
}

fn axiom_violations(a: &[Vec<Rat>], p: &[Parity], chain: &[usize]) -> Vec<Violation> {
    let n = a.len();
    let mut out = Vec::new();
    let two = q(2);
    for i in 0..n {
        for j in 0..n {
            if i != j && a[i][j].is_zero() && !a[j][i].is_zero() {
                out.push(Violation {
                    axiom: "A00".into(),
                    row: i,
                    col: j,
                    chain: chain.to_vec(),
                });
            }
        }
        match p[i] {
            Parity::Even => {
                if a[i][i] != two {
                    out.push(Violation {
                        axiom: "A0".into(),
                        row: i,
                        col: i,
                        chain: chain.to_vec(),
                    });
                }
                for j in 0..n {
                    if j != i && !(is_integer(&a[i][j]) && !a[i][j].is_positive()) {
                        out.push(Violation {
                            axiom: "A0".into(),
                            row: i,
                            col: j,
                            chain: chain.to_vec(),
                        });
                    }
                }
            }
            Parity::Odd => {
                if a[i][i] == two {
                    for j in 0..n {
                        let even_nonpos = is_integer(&(&a[i][j] / &two)) && !a[i][j].is_positive();
                        if j != i && !even_nonpos {
                            out.push(Violation {
                                axiom: "A1".into(),
                                row: i,
                                col: j,
                                chain: chain.to_vec(),
                            });
                        }
                    }
                } else if !a[i][i].is_zero() {
                    out.push(Violation {
                        axiom: "A1".into(),
                        row: i,
                        col: i,
                        chain: chain.to_vec(),
                    });
                }
            }
        }
    }
    out
}

/// Check (A00)/(A0)/(A1) on (A, p) and on every base reachable by odd
/// reflections, up to `base_bound` bases.  Bases that already violate the
/// axioms are reported and not expanded further.
pub fn validate_supermatrix(
    a: Vec<Vec<Rat>>,
    parity: Vec<Parity>,
    base_bound: usize,
) -> Result<ValidationReport> {
    let sm = CartanSupermatrix::new(a, parity)?;
    let start = sm.initial_base();
    let mut violations = Vec::new();
    let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    let mut queue: VecDeque<(BaseDatum, Vec<usize>)> = VecDeque::new();
    seen.insert(start.key());
    queue.push_back((start, vec![]));
    let mut closed = true;
    while let Some((base, chain)) = queue.pop_front() {
        let found = axiom_violations(&base.matrix, &base.parity, &chain);
        let bad = !found.is_empty();
        violations.extend(found);
        if bad {
            continue;
        }
        for i in base.isotropic_indices() {
            match odd_reflect(&sm, &base, i) {
                Ok(next) => {
                    let key = next.key();
                    if seen.contains(&key) {
                        continue;
                    }
                    if seen.len() >= base_bound {
                        closed = false;
                        continue;
                    }
                    seen.insert(key);
                    let mut c = chain.clone();
                    c.push(i);
                    queue.push_back((next, c));
                }
                Err(Error::UnclassifiableEntry { i, j }) => {
                    let mut c = chain.clone();
                    c.push(i);
                    violations.push(Violation {
                        axiom: "A0/A1".into(),
                        row: i,
                        col: j,
                        chain: c,
                    });
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(ValidationReport {
        valid: violations.is_empty(),
        violations,
        closed,
        bases_seen: seen.len(),
    })
}

/// Connected components of the index graph with edges a_ij != 0.
pub fn decompose_components(matrix: &[Vec<Rat>]) -> Vec<Vec<usize>> {
    let n = matrix.len();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        comp[start] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for w in 0..n {
                if comp[w] == usize::MAX && (!matrix[v][w].is_zero() || !matrix[w][v].is_zero()) {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Growth class of an indecomposable generalized Cartan matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Growth {
    Fin,
    Aff,
    Ind,
}

impl std::fmt::Display for Growth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Growth::Fin => write!(f, "FIN"),
            Growth::Aff => write!(f, "AFF"),
            Growth::Ind => write!(f, "IND"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Isotropy {
    NonIsotropic,
    Isotropic,
}

/// Type tag: isotropy of the supermatrix plus growth per component of B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeTag {
    pub isotropy: Isotropy,
    pub components: Vec<(Vec<usize>, Growth)>,
}

impl TypeTag {
    /// The common growth of all components, when they agree.  An empty
    /// principal system (as for gl(1|1)) counts as finite.
    pub fn growth(&self) -> Option<Growth> {
        let mut it = self.components.iter().map(|(_, g)| *g);
        let Some(first) = it.next() else {
            return Some(Growth::Fin);
        };
        it.all(|g| g == first).then_some(first)
    }
}

fn det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut work: Vec<Vec<Rat>> = m.to_vec();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&r| !work[r][c].is_zero()) else {
            return Rat::zero();
        };
        if pr != c {
            work.swap(pr, c);
            d = -d;
        }
        d *= work[c][c].clone();
        let inv = work[c][c].clone().recip();
        for r in c + 1..n {
            if work[r][c].is_zero() {
                continue;
            }
            let f = &work[r][c] * &inv;
            for cc in c..n {
                let sub = &f * &work[c][cc];
                work[r][cc] = &work[r][cc] - sub;
            }
        }
    }
    d
}

fn submatrix(m: &[Vec<Rat>], idx: &[usize]) -> Vec<Vec<Rat>> {
    idx.iter()
        .map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect())
        .collect()
}

/// Verify that `b` has generalized-Cartan-matrix shape: 2 on the diagonal,
/// non-positive integers off it, and symmetric zeros.
pub fn check_gcm_shape(b: &[Vec<Rat>]) -> Result<()> {
    let n = b.len();
    let two = q(2);
    for i in 0..n {
        if b[i].len() != n {
            return Err(Error::NotGcm("matrix is not square".into()));
        }
        if b[i][i] != two {
            return Err(Error::NotGcm(format!("diagonal entry [{i}][{i}] is not 2")));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if !is_integer(&b[i][j]) || b[i][j].is_positive() {
                return Err(Error::NotGcm(format!(
                    "off-diagonal entry [{i}][{j}] is not a non-positive integer"
                )));
            }
            if b[i][j].is_zero() != b[j][i].is_zero() {
                return Err(Error::NotGcm(format!("zeros not symmetric at [{i}][{j}]")));
            }
        }
    }
    Ok(())
}

/// Growth of one indecomposable GCM via principal minors: all principal
/// minors positive means FIN; zero determinant with all proper principal
/// minors positive means AFF; anything else is IND.
pub fn growth_of_indecomposable(b: &[Vec<Rat>]) -> Growth {
    let n = b.len();
    let mut all_proper_positive = true;
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if idx.len() == n {
            continue;
        }
        if !det(&submatrix(b, &idx)).is_positive() {
            all_proper_positive = false;
            break;
        }
    }
    let d = det(b);
    if all_proper_positive && d.is_positive() {
        Growth::Fin
    } else if all_proper_positive && d.is_zero() {
        Growth::Aff
    } else {
        Growth::Ind
    }
}

/// Classify a supermatrix together with its principal-root matrix B.
pub fn classify(sm: &CartanSupermatrix, b: &[Vec<Rat>]) -> Result<TypeTag> {
    check_gcm_shape(b)?;
    let isotropy = if (0..sm.size()).any(|i| sm.a[i][i].is_zero()) {
        Isotropy::Isotropic
    } else {
        Isotropy::NonIsotropic
    };
    let components = decompose_components(b)
        .into_iter()
        .map(|idx| {
            let g = growth_of_indecomposable(&submatrix(b, &idx));
            (idx, g)
        })
        .collect();
    Ok(TypeTag {
        isotropy,
        components,
    })
}

/// Diagonal symmetrization of a supermatrix: d with diag(d) * A symmetric,
/// together with the Gram matrix G = diag(d) * A, so that (alpha_i | alpha_j)
/// = d_i a_ij.  Normalized per connected component so that the first even
/// non-isotropic simple root gamma has (gamma|gamma) = 2; if none exists the
/// first non-isotropic one is used, else d = 1 on that component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symmetrization {
    pub d: Vec<Rat>,
    pub gram: Vec<Vec<Rat>>,
    /// Per component: the index used for normalization, if any.
    pub normalized_at: Vec<Option<usize>>,
}

pub fn symmetrize(sm: &CartanSupermatrix) -> Result<Symmetrization> {
    let a = &sm.a;
    let n = sm.size();
    let mut d: Vec<Option<Rat>> = vec![None; n];
    let comps = decompose_components(a);
    let mut normalized_at = Vec::new();
    for comp in &comps {
        // propagate ratios d_j = d_i * a_ij / a_ji over a spanning tree
        let root = comp[0];
        d[root] = Some(Rat::one());
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in comp {
                if w == v || a[v][w].is_zero() {
                    continue;
                }
                if a[w][v].is_zero() {
                    return Err(Error::NotSymmetrizable { index: w });
                }
                let required = d[v].clone().unwrap() * &a[v][w] / &a[w][v];
                match &d[w] {
                    None => {
                        d[w] = Some(required);
                        stack.push(w);
                    }
                    Some(existing) => {
                        if *existing != required {
                            return Err(Error::NotSymmetrizable { index: w });
                        }
                    }
                }
            }
        }
        // normalization within the component
        let pick = comp
            .iter()
            .copied()
            .find(|&i| sm.parity[i] == Parity::Even && !a[i][i].is_zero())
            .or_else(|| comp.iter().copied().find(|&i| !a[i][i].is_zero()));
        normalized_at.push(pick);
        let scale = match pick {
            Some(i) => {
                // (gamma|gamma) = d_i * a_ii = 2
                let cur = d[i].clone().unwrap() * &a[i][i];
                q(2) / cur
            }
            None => d[comp[0]].clone().unwrap().recip(),
        };
        for &i in comp {
            let v = d[i].take().unwrap();
            d[i] = Some(v * &scale);
        }
    }
    let d: Vec<Rat> = d.into_iter().map(Option::unwrap).collect();
    let gram: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| &d[i] * &a[i][j]).collect())
        .collect();
    for i in 0..n {
        for j in 0..n {
            if gram[i][j] != gram[j][i] {
                return Err(Error::NotSymmetrizable { index: i });
            }
        }
    }
    Ok(Symmetrization {
        d,
        gram,
        normalized_at,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl21() -> CartanSupermatrix {
        CartanSupermatrix::from_ints(&[&[0, 1], &[1, 0]], &[1, 1])
    }

    #[test]
    fn validate_basic_examples() {
        // sl2
        let r = validate_supermatrix(vec![vec![q(2)]], vec![Parity::Even], 100).unwrap();
        assert!(r.valid && r.closed);
        // gl(1|1)
        let r = validate_supermatrix(vec![vec![q(0)]], vec![Parity::Odd], 100).unwrap();
        assert!(r.valid && r.closed);
        assert_eq!(r.bases_seen, 2);
        // (A00) violation at (0, 1)
        let r = validate_supermatrix(
            vec![vec![q(2), q(-1)], vec![q(0), q(2)]],
            vec![Parity::Even, Parity::Even],
            100,
        )
        .unwrap();
        assert!(!r.valid);
        assert!(r
            .violations
            .iter()
            .any(|v| v.axiom == "A00" && v.row == 1 && v.col == 0));
        // odd row with entry not in 2Z: (A1) violation in row 0
        let r = validate_supermatrix(
            vec![vec![q(2), q(-1)], vec![q(-2), q(2)]],
            vec![Parity::Odd, Parity::Even],
            100,
        )
        .unwrap();
        assert!(!r.valid);
        assert!(r.violations.iter().any(|v| v.axiom == "A1" && v.row == 0));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            validate_supermatrix(vec![vec![q(2), q(0)]], vec![Parity::Even], 10),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            validate_supermatrix(vec![vec![q(2)]], vec![], 10),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn sl21_reflection_matches_hand_computation() {
        let sm = sl21();
        let base = sm.initial_base();
        let refl = odd_reflect(&sm, &base, 0).unwrap();
        assert_eq!(refl.simple_roots, vec![vec![-1, 0], vec![1, 1]]);
        assert_eq!(refl.matrix, vec![vec![q(0), q(-1)], vec![q(-1), q(2)]]);
        assert_eq!(refl.parity, vec![Parity::Odd, Parity::Even]);
        assert_eq!(refl.coroots[0], vec![q(-1), q(0)]);
        assert_eq!(refl.coroots[1], vec![q(1), q(1)]);
        assert_eq!(refl.rho_offset, vec![1, 0]);
    }

    #[test]
    fn odd_reflection_is_involution() {
        let sm = sl21();
        let bases = enumerate_bases(&sm, 100).unwrap();
        assert!(bases.closed);
        for base in &bases.bases {
            for i in base.isotropic_indices() {
                let once = odd_reflect(&sm, base, i).unwrap();
                let twice = odd_reflect(&sm, &once, i).unwrap();
                assert_eq!(&twice, base);
            }
        }
    }

    #[test]
    fn reflect_at_even_index_fails() {
        let sm = CartanSupermatrix::from_ints(&[&[2]], &[0]);
        let base = sm.initial_base();
        assert!(matches!(
            odd_reflect(&sm, &base, 0),
            Err(Error::NotIsotropicIndex { index: 0 })
        ));
    }

    #[test]
    fn base_counts() {
        assert_eq!(enumerate_bases(&sl21(), 100).unwrap().bases.len(), 3);
        let gl11 = CartanSupermatrix::from_ints(&[&[0]], &[1]);
        assert_eq!(enumerate_bases(&gl11, 100).unwrap().bases.len(), 2);
        let sl2 = CartanSupermatrix::from_ints(&[&[2]], &[0]);
        assert_eq!(enumerate_bases(&sl2, 100).unwrap().bases.len(), 1);
    }

    #[test]
    fn truncation_is_flagged() {
        let set = enumerate_bases(&sl21(), 2).unwrap();
        assert!(!set.closed);
        assert_eq!(set.bases.len(), 2);
    }

    #[test]
    fn components() {
        let m = vec![vec![q(2), q(0)], vec![q(0), q(2)]];
        assert_eq!(decompose_components(&m), vec![vec![0], vec![1]]);
        let m = vec![vec![q(2), q(-1)], vec![q(-1), q(2)]];
        assert_eq!(decompose_components(&m), vec![vec![0, 1]]);
    }

    #[test]
    fn growth_classification() {
        assert_eq!(growth_of_indecomposable(&[vec![q(2)]]), Growth::Fin);
        let aff = vec![vec![q(2), q(-2)], vec![q(-2), q(2)]];
        assert_eq!(growth_of_indecomposable(&aff), Growth::Aff);
        let ind = vec![vec![q(2), q(-3)], vec![q(-3), q(2)]];
        assert_eq!(growth_of_indecomposable(&ind), Growth::Ind);
    }

    #[test]
    fn gcm_shape_rejected() {
        let bad = vec![vec![q(2), q(1)], vec![q(1), q(2)]];
        assert!(check_gcm_shape(&bad).is_err());
    }

    #[test]
    fn symmetrize_examples() {
        let sym = CartanSupermatrix::from_ints(&[&[2, -2], &[-2, 2]], &[0, 0]);
        let s = symmetrize(&sym).unwrap();
        assert_eq!(s.d, vec![q(1), q(1)]);

        let c2 = CartanSupermatrix::from_ints(&[&[2, -1], &[-2, 2]], &[0, 0]);
        let s = symmetrize(&c2).unwrap();
        assert_eq!(s.d, vec![q(1), qr(1, 2)]);
        assert_eq!(s.gram[0], vec![q(2), q(-1)]);
        assert_eq!(s.gram[1], vec![q(-1), q(1)]);
        // Gram diagonal gives (alpha_1|alpha_1) = 2
        assert_eq!(s.gram[0][0], q(2));
    }

    #[test]
    fn non_symmetrizable_cycle() {
        // 3-cycle with inconsistent products: d propagation around the cycle fails
        let a = vec![
            vec![q(2), q(-1), q(-1)],
            vec![q(-1), q(2), q(-1)],
            vec![q(-2), q(-1), q(2)],
        ];
        let sm = CartanSupermatrix::new(a, vec![Parity::Even; 3]).unwrap();
        assert!(matches!(
            symmetrize(&sm),
            Err(Error::NotSymmetrizable { .. })
        ));
    }

    #[test]
    fn symmetrizability_invariant_under_odd_reflection() {
        let sm = sl21();
        let bases = enumerate_bases(&sm, 100).unwrap();
        for base in &bases.bases {
            let eq = CartanSupermatrix::new(base.matrix.clone(), base.parity.clone()).unwrap();
            assert!(symmetrize(&eq).is_ok());
        }
    }
}
