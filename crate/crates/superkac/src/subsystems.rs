//! Integral root subsystems Delta(lambda), their bases of indecomposable
//! elements, bounded Weyl subgroups, and friendly reduction words.

use crate::algebra::Algebra;
use crate::cartan::{BaseDatum, Parity};
use crate::error::{Error, Result};
use crate::rat::*;
use crate::roots::{generate_roots_real_only, reflect_root, reflect_vec_q, Root, RootTable};
use crate::weights::Weight;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A height-bounded slice of a root subsystem of W Pi_pr.
#[derive(Debug, Clone)]
pub struct RootSubsystemSlice {
    /// Positive members, sorted by (height, lex); each carries its coroot.
    pub positive_roots: Vec<Root>,
    pub height_bound: i64,
    /// True when the ambient real root set is complete below the bound.
    pub complete: bool,
}

impl RootSubsystemSlice {
    pub fn contains(&self, coords: &[i64]) -> bool {
        self.positive_roots.iter().any(|r| r.coords == coords)
    }

    pub fn coords_set(&self) -> BTreeSet<Vec<i64>> {
        self.positive_roots
            .iter()
            .map(|r| r.coords.clone())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralVariant {
    /// alpha in W Pi_pr with lambda(alpha^vee) integral.
    Plain,
    /// Additionally the odd real roots whose double lies in the plain part.
    Super,
}

/// The integral subsystem Delta(lambda) restricted to heights <= the table
/// bound.  The plain variant keeps alpha in W Pi_pr with lambda(alpha^vee)
/// in Z; the super variant adds odd non-isotropic alpha with
/// lambda(alpha^vee) even (equivalently 2 alpha in the plain part).
///
/// Both the direct test and the rho-shifted test ((lambda+rho)(alpha^vee)
/// integral, or in Z + 1/2 when alpha/2 is a root) are evaluated and must
/// agree.
pub fn integral_subsystem(
    alg: &Algebra,
    lambda: &Weight,
    height_bound: i64,
    variant: IntegralVariant,
) -> Result<RootSubsystemSlice> {
    let table = generate_roots_real_only(alg, height_bound)?;
    integral_subsystem_in(alg, &table, lambda, height_bound, variant)
}

/// Same, over a caller-provided table.
pub fn integral_subsystem_in(
    alg: &Algebra,
    table: &RootTable,
    lambda: &Weight,
    height_bound: i64,
    variant: IntegralVariant,
) -> Result<RootSubsystemSlice> {
    let rho = Weight::rho(alg);
    let mut members: Vec<Root> = Vec::new();
    let mut plain_set: BTreeSet<Vec<i64>> = BTreeSet::new();
    for r in table.reflection_orbit_roots() {
        if !r.is_positive() || r.height() > height_bound {
            continue;
        }
        let val = lambda.pair_coroot(&r.coroot);
        let plain = is_integer(&val);
        // rho-shifted characterization
        let shifted = lambda.pair_coroot(&r.coroot) + rho.pair_coroot(&r.coroot);
        let half: Option<Vec<i64>> = r
            .coords
            .iter()
            .map(|&c| (c % 2 == 0).then_some(c / 2))
            .collect();
        let half_is_root = half.as_deref().is_some_and(|h| table.contains(h));
        let by_shift = if half_is_root {
            is_half_odd_integer(&shifted)
        } else {
            is_integer(&shifted)
        };
        if plain != by_shift {
            return Err(Error::Internal(format!(
                "integrality tests disagree at root {:?}",
                r.coords
            )));
        }
        if plain {
            plain_set.insert(r.coords.clone());
            members.push(r.clone());
        }
    }
    if variant == IntegralVariant::Super {
        for r in table.real_roots() {
            if !r.is_positive() || r.height() > height_bound || r.parity != Parity::Odd {
                continue;
            }
            if r.isotropic {
                continue;
            }
            let doubled: Vec<i64> = r.coords.iter().map(|c| 2 * c).collect();
            if plain_set.contains(&doubled) {
                members.push(r.clone());
            }
        }
    }
    members.sort_by_key(|r| (r.height(), r.coords.clone()));
    Ok(RootSubsystemSlice {
        positive_roots: members,
        height_bound,
        complete: table.complete,
    })
}

/// An element of the base Pi(Delta') together with its certification.
#[derive(Debug, Clone)]
pub struct BaseElement {
    pub root: Root,
    /// False when truncation leaves the indecomposability undecided.
    pub certified: bool,
}

#[derive(Debug, Clone)]
pub struct SubsystemBase {
    pub elements: Vec<BaseElement>,
    /// Heights up to which certification holds.
    pub horizon: i64,
    pub complete: bool,
}

impl SubsystemBase {
    pub fn certified(&self) -> impl Iterator<Item = &Root> {
        self.elements
            .iter()
            .filter(|e| e.certified)
            .map(|e| &e.root)
    }

    pub fn all_certified(&self) -> bool {
        self.elements.iter().all(|e| e.certified)
    }

    pub fn coords(&self) -> Vec<Vec<i64>> {
        self.elements
            .iter()
            .map(|e| e.root.coords.clone())
            .collect()
    }
}

/// Indecomposable elements of the positive part of a subsystem slice.
///
/// beta is decomposable when it is a sum of two or more members of the
/// positive part (summands may repeat; their partial sums need not be
/// roots).  This matches the reflection characterization of the base: a
/// reducible beta satisfies beta = r_alpha(beta) + beta(alpha^vee) alpha
/// with both pieces positive members.  On a complete slice the result is
/// cross-checked against that characterization (r_beta permutes the other
/// positive members exactly for base elements) and every element is
/// certified; on a truncated slice only heights h with 2h <= the bound are,
/// since a decomposition uses members of height < h.
pub fn subsystem_base(alg: &Algebra, slice: &RootSubsystemSlice) -> Result<SubsystemBase> {
    let members: Vec<Vec<i64>> = slice
        .positive_roots
        .iter()
        .map(|r| r.coords.clone())
        .collect();
    let horizon = if slice.complete {
        slice.height_bound
    } else {
        slice.height_bound / 2
    };
    // expressible(v): v is a non-empty Z_{>=0}-combination of members
    fn expressible(v: &[i64], members: &[Vec<i64>], memo: &mut BTreeMap<Vec<i64>, bool>) -> bool {
        if let Some(&b) = memo.get(v) {
            return b;
        }
        let mut ans = false;
        for g in members {
            if g.iter().zip(v).all(|(a, b)| a <= b) && height_i(g) <= height_i(v) {
                let rest: Vec<i64> = v.iter().zip(g).map(|(a, b)| a - b).collect();
                if rest.iter().all(|&x| x == 0) || expressible(&rest, members, memo) {
                    ans = true;
                    break;
                }
            }
        }
        memo.insert(v.to_vec(), ans);
        ans
    }
    let mut memo = BTreeMap::new();
    let mut elements = Vec::new();
    for r in &slice.positive_roots {
        let decomposable = members.iter().any(|g| {
            g != &r.coords && g.iter().zip(&r.coords).all(|(a, b)| a <= b) && {
                let rest: Vec<i64> = r.coords.iter().zip(g).map(|(a, b)| a - b).collect();
                !rest.iter().all(|&x| x == 0)
                    && rest.iter().all(|&x| x >= 0)
                    && expressible(&rest, &members, &mut memo)
            }
        });
        if !decomposable {
            elements.push(BaseElement {
                root: r.clone(),
                certified: slice.complete || r.height() <= horizon,
            });
        }
    }
    let all_even = slice
        .positive_roots
        .iter()
        .all(|r| r.parity == Parity::Even);
    if slice.complete && all_even {
        let positives = slice.coords_set();
        let base_set: BTreeSet<&Vec<i64>> = elements.iter().map(|e| &e.root.coords).collect();
        for r in &slice.positive_roots {
            let permutes = slice.positive_roots.iter().all(|g| {
                if g.coords == r.coords {
                    return true;
                }
                match reflect_root(alg, &g.coords, &r.coords, &r.coroot) {
                    Ok(img) => img != r.coords && positives.contains(&img),
                    Err(_) => false,
                }
            });
            if permutes != base_set.contains(&r.coords) {
                return Err(Error::Internal(format!(
                    "indecomposables and the reflection characterization disagree at {:?}",
                    r.coords
                )));
            }
        }
    }
    Ok(SubsystemBase {
        elements,
        horizon,
        complete: slice.complete,
    })
}

/// Friendliness of a reflection word for lambda: every prefix image
/// alpha_1, r_{alpha_1} alpha_2, ... must avoid Delta(lambda).
pub fn is_friendly(alg: &Algebra, lambda: &Weight, word: &[usize]) -> Result<bool> {
    let mut prefix: Vec<(Vec<i64>, Vec<Rat>)> = Vec::new();
    for (k, &g) in word.iter().enumerate() {
        let p = &alg.principal[g];
        let mut root = p.coords.clone();
        let mut coroot = p.coroot.clone();
        // apply r_{alpha_1} ... r_{alpha_{k-1}} to alpha_k
        for &h in word[..k].iter().rev() {
            let q = &alg.principal[h];
            root = reflect_root(alg, &root, &q.coords, &q.coroot)?;
            let s = alg.pair(&coroot, &q.coords);
            coroot = sub_vec(&coroot, &scale_vec(&s, &q.coroot));
        }
        prefix.push((root, coroot));
    }
    for (_, coroot) in &prefix {
        if is_integer(&lambda.pair_coroot(coroot)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A friendly word transporting a base element of Pi(lambda) into Pi_pr.
#[derive(Debug, Clone)]
pub struct FriendlyWord {
    /// Generator indices (into `alg.principal`); the first letter acts first.
    pub word: Vec<usize>,
    /// The image w beta, an element of Pi_pr.
    pub image: Vec<i64>,
}

/// Greedy descent: repeatedly pick the first alpha in Pi_pr with
/// 0 < r_alpha beta < beta, replace beta by r_alpha beta and lambda by
/// r_alpha lambda, until beta is principal.  Each chosen alpha must avoid
/// Delta(lambda); a violation is an internal-consistency error.
pub fn friendly_word_to_pr(alg: &Algebra, lambda: &Weight, beta: &Root) -> Result<FriendlyWord> {
    let principal_coords: BTreeSet<Vec<i64>> =
        alg.principal.iter().map(|p| p.coords.clone()).collect();
    let mut word = Vec::new();
    let mut cur = beta.coords.clone();
    let mut cur_coroot = beta.coroot.clone();
    let mut lam = lambda.clone();
    let mut guard = 0usize;
    while !principal_coords.contains(&cur) {
        guard += 1;
        if guard > 10_000 {
            return Err(Error::Internal("friendly descent did not terminate".into()));
        }
        let mut progressed = false;
        for (gi, p) in alg.principal.iter().enumerate() {
            let t = alg.pair(&p.coroot, &cur);
            if !t.is_positive() {
                continue;
            }
            let image = reflect_root(alg, &cur, &p.coords, &p.coroot)?;
            if height_i(&image) <= 0 || image.iter().any(|&c| c < 0) {
                continue;
            }
            if is_integer(&lam.pair_coroot(&p.coroot)) {
                return Err(Error::Internal(
                    "descent generator lies in the integral subsystem".into(),
                ));
            }
            let s = alg.pair(&cur_coroot, &p.coords);
            cur_coroot = sub_vec(&cur_coroot, &scale_vec(&s, &p.coroot));
            cur = image;
            lam = lam.reflect(alg, &p.coords, &p.coroot)?;
            word.push(gi);
            progressed = true;
            break;
        }
        if !progressed {
            return Err(Error::Internal(
                "no descent step available below a base element".into(),
            ));
        }
    }
    Ok(FriendlyWord { word, image: cur })
}

/// Indices (into `alg.principal`) of the principal roots alpha with alpha
/// or alpha/2 a simple root of the given base.
pub fn sigma_pr(alg: &Algebra, base: &BaseDatum) -> Vec<usize> {
    let simple: BTreeSet<&Vec<i64>> = base.simple_roots.iter().collect();
    alg.principal
        .iter()
        .enumerate()
        .filter(|(_, p)| {
            if simple.contains(&p.coords) {
                return true;
            }
            let half: Option<Vec<i64>> = p
                .coords
                .iter()
                .map(|&c| (c % 2 == 0).then_some(c / 2))
                .collect();
            half.map(|h| simple.contains(&h)).unwrap_or(false)
        })
        .map(|(i, _)| i)
        .collect()
}

/// The W_Sigma Sigma_pr slice: orbit of the Sigma_pr roots under their own
/// reflections, restricted to |height| <= bound; positive part returned.
pub fn w_sigma_slice(
    alg: &Algebra,
    gens: &[usize],
    height_bound: i64,
) -> Result<RootSubsystemSlice> {
    let gen_roots: Vec<(Vec<i64>, Vec<Rat>)> = gens
        .iter()
        .map(|&g| {
            (
                alg.principal[g].coords.clone(),
                alg.principal[g].coroot.clone(),
            )
        })
        .collect();
    let mut seen: BTreeMap<Vec<i64>, Vec<Rat>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for (r, c) in &gen_roots {
        for sign in [1i64, -1] {
            let coords: Vec<i64> = r.iter().map(|x| sign * x).collect();
            let coroot = if sign == 1 { c.clone() } else { neg_vec(c) };
            if seen.insert(coords.clone(), coroot).is_none() {
                queue.push_back(coords);
            }
        }
    }
    let mut truncated = false;
    while let Some(cur) = queue.pop_front() {
        let coroot = seen[&cur].clone();
        for (gr, gc) in &gen_roots {
            let image = reflect_root(alg, &cur, gr, gc)?;
            if height_i(&image).abs() > height_bound {
                truncated = true;
                continue;
            }
            if seen.contains_key(&image) {
                continue;
            }
            let s = alg.pair(&coroot, gr);
            let new_coroot = sub_vec(&coroot, &scale_vec(&s, gc));
            seen.insert(image.clone(), new_coroot);
            queue.push_back(image);
        }
    }
    let mut positive: Vec<Root> = seen
        .into_iter()
        .filter(|(c, _)| height_i(c) > 0)
        .map(|(coords, coroot)| {
            let parity = alg.parity_of(&coords);
            Root {
                isotropic: alg.pair(&coroot, &coords).is_zero(),
                coords,
                parity,
                kind: crate::roots::RootKind::Real,
                mult: (1, 0),
                coroot,
            }
        })
        .collect();
    positive.sort_by_key(|r| (r.height(), r.coords.clone()));
    Ok(RootSubsystemSlice {
        positive_roots: positive,
        height_bound,
        complete: !truncated,
    })
}

/// Sigma(lambda): the base of Delta(lambda) intersected with the
/// W_Sigma Sigma_pr subsystem of the given base.
pub fn sigma_lambda(
    alg: &Algebra,
    lambda: &Weight,
    base: &BaseDatum,
    height_bound: i64,
) -> Result<SubsystemBase> {
    let gens = sigma_pr(alg, base);
    let ambient = w_sigma_slice(alg, &gens, height_bound)?;
    let members: Vec<Root> = ambient
        .positive_roots
        .into_iter()
        .filter(|r| is_integer(&lambda.pair_coroot(&r.coroot)))
        .collect();
    let slice = RootSubsystemSlice {
        positive_roots: members,
        height_bound,
        // finite subgroup orbits close; truncation only matters when the
        // orbit touches the window boundary
        complete: true,
    };
    subsystem_base(alg, &slice)
}

/// One element of a bounded Weyl subgroup enumeration.
#[derive(Debug, Clone)]
pub struct SubgroupElement {
    /// Letters are indices into the generator list passed in.
    pub word: Vec<usize>,
    /// (-1)^{l(w)} with l the BFS depth of first discovery.
    pub sign: i64,
    /// Image of the fixed test vector.
    pub test_image: Vec<Rat>,
}

#[derive(Debug, Clone)]
pub struct SubgroupEnumeration {
    pub elements: Vec<SubgroupElement>,
    /// True when the group closed before the length bound.
    pub closed: bool,
    /// The seeded test vector used for deduplication.
    pub test_vector: Vec<Rat>,
    pub seed: u64,
}

const TEST_VECTOR_SEED: u64 = 0x5eed_cafe;

/// Enumerate W(Delta') for a finite generator list by BFS over products,
/// deduplicating by the action on a seeded generic rational vector.
pub fn weyl_subgroup(
    alg: &Algebra,
    generators: &[Root],
    length_bound: usize,
) -> Result<SubgroupEnumeration> {
    let n = alg.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(TEST_VECTOR_SEED);
    let mut test_vector: Vec<Rat> = Vec::new();
    'draw: for _attempt in 0..64 {
        test_vector = (0..n)
            .map(|_| qr(rng.gen_range(1..10_000), rng.gen_range(1..8)))
            .collect();
        for g in generators {
            if crate::cartan::pair_q(&alg.supermatrix, &g.coroot, &test_vector).is_zero() {
                continue 'draw;
            }
        }
        break;
    }
    let mut seen: BTreeMap<Vec<Rat>, (Vec<usize>, i64)> = BTreeMap::new();
    seen.insert(test_vector.clone(), (vec![], 1));
    let mut frontier = vec![test_vector.clone()];
    let mut closed = true;
    for depth in 0..length_bound {
        let mut next = Vec::new();
        for img in frontier {
            let (word, sign) = seen[&img].clone();
            for (gi, g) in generators.iter().enumerate() {
                let im = reflect_vec_q(alg, &img, &g.coords, &g.coroot)?;
                if seen.contains_key(&im) {
                    continue;
                }
                let mut w = word.clone();
                w.push(gi);
                seen.insert(im.clone(), (w, -sign));
                next.push(im);
            }
        }
        if next.is_empty() {
            break;
        }
        if depth + 1 == length_bound && !next.is_empty() {
            closed = false;
        }
        frontier = next;
    }
    let mut elements: Vec<SubgroupElement> = seen
        .into_iter()
        .map(|(img, (word, sign))| SubgroupElement {
            word,
            sign,
            test_image: img,
        })
        .collect();
    elements.sort_by_key(|e| (e.word.len(), e.word.clone()));
    Ok(SubgroupEnumeration {
        elements,
        closed,
        test_vector,
        seed: TEST_VECTOR_SEED,
    })
}
