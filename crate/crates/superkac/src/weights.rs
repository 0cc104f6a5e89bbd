//! Weight bookkeeping and classification: the Weyl vector, the dot action,
//! levels and criticality, typicality, snowflake and admissible weights,
//! Kac-Kazhdan linkage, and bounded enumeration of snowflake weights at a
//! fixed affine level.
//!
//! A weight is stored through its pairings with the original simple
//! coroots; functionals vanishing on the coroot span (such as delta-shifts
//! in affine type) are quotiented out, which is exactly the equivalence all
//! predicates here factor through.

use crate::algebra::Algebra;
use crate::cartan::Growth;
use crate::error::{Error, Result};
use crate::rat::*;
use crate::roots::{generate_roots_real_only, Root, RootKind, RootTable, WeylWord};
use crate::subsystems::{
    integral_subsystem_in, subsystem_base, IntegralVariant, RootSubsystemSlice, SubsystemBase,
};
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Weight {
    /// (lambda(alpha_1^vee), ..., lambda(alpha_l^vee)).
    pub pairings: Vec<Rat>,
    pub label: Option<String>,
}

impl Weight {
    pub fn new(pairings: Vec<Rat>) -> Weight {
        Weight {
            pairings,
            label: None,
        }
    }

    pub fn labeled(mut self, label: &str) -> Weight {
        self.label = Some(label.to_string());
        self
    }

    pub fn zero(rank: usize) -> Weight {
        Weight::new(zero_vec(rank))
    }

    /// The Weyl vector: pairing 1 with non-isotropic simple coroots, 0 with
    /// isotropic ones.
    pub fn rho(alg: &Algebra) -> Weight {
        Weight::new(
            (0..alg.rank())
                .map(|i| {
                    if alg.supermatrix.a[i][i].is_zero() {
                        Rat::zero()
                    } else {
                        Rat::one()
                    }
                })
                .collect(),
        )
    }

    /// Value on a coroot given in the original coroot basis.
    pub fn pair_coroot(&self, coroot: &[Rat]) -> Rat {
        dot(coroot, &self.pairings)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(add_vec(&self.pairings, &other.pairings))
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(sub_vec(&self.pairings, &other.pairings))
    }

    /// Subtract an integer root-lattice vector (as a functional).
    pub fn sub_lattice(&self, alg: &Algebra, mu: &[i64]) -> Weight {
        let pv = alg.pairing_vector(&i_to_q_vec(mu));
        Weight::new(sub_vec(&self.pairings, &pv))
    }

    /// Reflection through a non-isotropic root (plain, not the dot action).
    pub fn reflect(&self, alg: &Algebra, beta: &[i64], beta_coroot: &[Rat]) -> Result<Weight> {
        if alg.pair(beta_coroot, beta).is_zero() {
            return Err(Error::IsotropicReflection);
        }
        let t = self.pair_coroot(beta_coroot);
        let pv = alg.pairing_vector(&i_to_q_vec(beta));
        Ok(Weight::new(sub_vec(&self.pairings, &scale_vec(&t, &pv))))
    }

    /// (lambda | mu) against a rational root-lattice vector, through the
    /// normalized invariant form.
    pub fn form_lattice(&self, alg: &Algebra, mu: &[Rat]) -> Rat {
        let d = &alg.symmetrization.d;
        let mut acc = Rat::zero();
        for ((m, di), li) in mu.iter().zip(d).zip(&self.pairings) {
            if !m.is_zero() {
                acc += m * di * li;
            }
        }
        acc
    }
}

/// A character exponent: a weight anchor plus a rational root-lattice
/// offset.  Exponents with equal anchors are compared by offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightExp {
    pub anchor: Weight,
    pub offset: Vec<Rat>,
}

impl WeightExp {
    pub fn at_anchor(anchor: Weight, rank: usize) -> WeightExp {
        WeightExp {
            anchor,
            offset: zero_vec(rank),
        }
    }

    /// Value on a coroot: the anchor part plus the offset contracted
    /// against the coroot.
    pub fn pair_coroot(&self, alg: &Algebra, coroot: &[Rat]) -> Rat {
        self.anchor.pair_coroot(coroot)
            + crate::cartan::pair_q(&alg.supermatrix, coroot, &self.offset)
    }

    /// Collapse to a plain weight (pairing vector of anchor + offset).
    pub fn collapse(&self, alg: &Algebra) -> Weight {
        let pv = alg.pairing_vector(&self.offset);
        Weight::new(add_vec(&self.anchor.pairings, &pv))
    }
}

/// The twisted (dot) action w.x = w(x + rho) - rho of a single reflection
/// through a non-isotropic root, on a weight exponent.
pub fn dot_reflect(
    alg: &Algebra,
    beta: &[i64],
    beta_coroot: &[Rat],
    x: &WeightExp,
) -> Result<WeightExp> {
    if alg.pair(beta_coroot, beta).is_zero() {
        return Err(Error::IsotropicReflection);
    }
    let rho = Weight::rho(alg);
    let t = x.pair_coroot(alg, beta_coroot) + rho.pair_coroot(beta_coroot);
    let offset = sub_vec(&x.offset, &scale_vec(&t, &i_to_q_vec(beta)));
    Ok(WeightExp {
        anchor: x.anchor.clone(),
        offset,
    })
}

/// Dot action of a word in the principal generators (first letter acts
/// first).
pub fn dot_action(alg: &Algebra, word: &WeylWord, lambda: &Weight) -> Result<WeightExp> {
    let mut cur = WeightExp::at_anchor(lambda.clone(), alg.rank());
    for &g in &word.0 {
        let p = &alg.principal[g];
        cur = dot_reflect(alg, &p.coords, &p.coroot, &cur)?;
    }
    Ok(cur)
}

/// Level of a weight: (lambda | delta); affine type only.
pub fn level(alg: &Algebra, lambda: &Weight) -> Result<Rat> {
    let aff = alg.affine()?;
    Ok(lambda.form_lattice(alg, &i_to_q_vec(&aff.delta)))
}

/// A weight is critical when 2(lambda|alpha) lands in Z ||alpha||^2 for an
/// imaginary root alpha; in affine type this is (lambda|delta) = 0, and in
/// finite type there are no imaginary roots.
pub fn is_critical_weight(alg: &Algebra, lambda: &Weight) -> Result<bool> {
    match alg.growth() {
        Some(Growth::Fin) => Ok(false),
        Some(Growth::Aff) => Ok(level(alg, lambda)?.is_zero()),
        _ => Err(Error::IndefiniteImaginary),
    }
}

/// Criticality of the simple module L(lambda): lambda + rho critical,
/// equivalently level(lambda) = -h^vee.
pub fn is_critical_module(alg: &Algebra, lambda: &Weight) -> Result<bool> {
    match alg.growth() {
        Some(Growth::Fin) => Ok(false),
        Some(Growth::Aff) => {
            let k = level(alg, lambda)?;
            Ok(k == -alg.affine()?.dual_coxeter.clone())
        }
        _ => Err(Error::IndefiniteImaginary),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypicalVerdict {
    Typical,
    Atypical { witness: Vec<i64> },
    TypicalUpTo { height: i64 },
}

/// Typicality of L(lambda): (lambda + rho)(alpha^vee) != 0 for every real
/// isotropic root alpha, tested up to the height bound.  Exact for finite
/// type when the root set closes.
pub fn is_typical(alg: &Algebra, lambda: &Weight, height_bound: i64) -> Result<TypicalVerdict> {
    let table = generate_roots_real_only(alg, height_bound)?;
    let shifted = lambda.add(&Weight::rho(alg));
    for r in table.real_roots() {
        if !r.isotropic || !r.is_positive() {
            continue;
        }
        if shifted.pair_coroot(&r.coroot).is_zero() {
            return Ok(TypicalVerdict::Atypical {
                witness: r.coords.clone(),
            });
        }
    }
    if table.complete {
        Ok(TypicalVerdict::Typical)
    } else {
        Ok(TypicalVerdict::TypicalUpTo {
            height: height_bound,
        })
    }
}

/// Translation period of the principal root system: the least r > 0 with
/// Delta_pr + r * delta = Delta_pr, detected on a generated slice.
pub fn delta_period(alg: &Algebra) -> Result<i64> {
    let aff = alg.affine()?;
    let dh = height_i(&aff.delta);
    let k0 = height_i(&aff.delta_b) / dh;
    let max_pr = alg
        .principal
        .iter()
        .map(|p| height_i(&p.coords))
        .max()
        .unwrap_or(1);
    for mult in 1..=4i64 {
        let r = k0 * mult;
        let bound = max_pr + r * dh + 1;
        let table = generate_roots_real_only(alg, bound)?;
        let ok = alg.principal.iter().all(|p| {
            let up: Vec<i64> = p
                .coords
                .iter()
                .zip(&aff.delta)
                .map(|(c, d)| c + r * d)
                .collect();
            let down: Vec<i64> = p
                .coords
                .iter()
                .zip(&aff.delta)
                .map(|(c, d)| c - r * d)
                .collect();
            table.contains(&up) && table.contains(&down)
        });
        if ok {
            return Ok(r);
        }
    }
    Err(Error::Internal(
        "could not detect the delta-translation period".into(),
    ))
}

/// The least positive q (a multiple of the translation period) such that
/// alpha is integral for lambda iff alpha + q*delta is, for every weight of
/// level k: needs (2q/||alpha||^2) k in Z across the norm classes of the
/// principal roots.
pub fn integrality_period(alg: &Algebra, k: &Rat) -> Result<i64> {
    let r = delta_period(alg)?;
    let norms: BTreeSet<Rat> = alg
        .principal
        .iter()
        .map(|p| alg.norm2(&i_to_q_vec(&p.coords)))
        .collect();
    for m in 1..=10_000i64 {
        let qv = q(r * m);
        let ok = norms.iter().all(|n| is_integer(&(q(2) * &qv * k / n)));
        if ok {
            return Ok(r * m);
        }
    }
    Err(Error::Internal(
        "no integrality period below the cap".into(),
    ))
}

#[derive(Debug, Clone)]
pub struct SnowflakeVerdict {
    pub is_snowflake: bool,
    /// Base elements with their (lambda + rho)(beta^vee) values.
    pub values: Vec<(Vec<i64>, Rat)>,
    pub horizon: i64,
    /// True when the base is certified complete (finite type closure, or
    /// the affine period bound was reached).
    pub certified: bool,
}

/// Effective height for integral-subsystem computations: in affine type the
/// base of Delta(lambda) lies below q*delta, so heights 2*ht(q delta)
/// certify it.
pub fn snowflake_effective_height(
    alg: &Algebra,
    lambda: &Weight,
    height_bound: i64,
) -> Result<(i64, bool)> {
    if alg.growth() == Some(Growth::Aff) {
        let k = level(alg, lambda)?;
        let qq = integrality_period(alg, &k)?;
        let need = 2 * qq * height_i(&alg.affine()?.delta);
        Ok((height_bound.max(need), true))
    } else {
        Ok((height_bound, false))
    }
}

/// Snowflake test for the simple highest-weight module: positivity of
/// (lambda + rho)(beta^vee) over the certified base of Delta(lambda).
pub fn is_snowflake_hw(
    alg: &Algebra,
    lambda: &Weight,
    height_bound: i64,
) -> Result<SnowflakeVerdict> {
    let (h, raised) = snowflake_effective_height(alg, lambda, height_bound)?;
    let table = generate_roots_real_only(alg, h)?;
    let slice = integral_subsystem_in(alg, &table, lambda, h, IntegralVariant::Plain)?;
    let base = subsystem_base(alg, &slice)?;
    snowflake_from_base(alg, lambda, &base, raised)
}

pub fn snowflake_from_base(
    alg: &Algebra,
    lambda: &Weight,
    base: &SubsystemBase,
    period_certified: bool,
) -> Result<SnowflakeVerdict> {
    let shifted = lambda.add(&Weight::rho(alg));
    let mut values = Vec::new();
    let mut ok = true;
    for e in &base.elements {
        if !e.certified && !period_certified {
            continue;
        }
        let v = shifted.pair_coroot(&e.root.coroot);
        ok &= v.is_positive();
        values.push((e.root.coords.clone(), v));
    }
    Ok(SnowflakeVerdict {
        is_snowflake: ok,
        values,
        horizon: base.horizon,
        certified: base.complete || period_certified,
    })
}

/// One Kac-Kazhdan pair (lambda, lambda - m alpha).
#[derive(Debug, Clone)]
pub struct LinkagePair {
    pub alpha: Root,
    pub m: i64,
    pub target: Weight,
    /// - m alpha, the exponent offset of the target from lambda.
    pub target_offset: Vec<i64>,
}

/// All pairs (alpha, m) with alpha a positive root whose half is not a
/// root, heights of m*alpha within the bound, satisfying
/// 2(lambda + rho | alpha) = m (alpha | alpha) together with the parity
/// conditions (m odd for odd non-isotropic alpha, m = 1 for isotropic).
pub fn kk_pairs(alg: &Algebra, lambda: &Weight, height_bound: i64) -> Result<Vec<LinkagePair>> {
    let table = generate_roots_real_only(alg, height_bound)?;
    kk_pairs_in(alg, &table, lambda, height_bound)
}

pub fn kk_pairs_in(
    alg: &Algebra,
    table: &RootTable,
    lambda: &Weight,
    height_bound: i64,
) -> Result<Vec<LinkagePair>> {
    let shifted = lambda.add(&Weight::rho(alg));
    let mut out = Vec::new();
    let mut imaginary: Vec<Root> = Vec::new();
    if alg.growth() == Some(Growth::Aff) {
        let aff = alg.affine()?;
        let dh = height_i(&aff.delta);
        let mut j = 1i64;
        while j * dh <= height_bound {
            imaginary.push(Root {
                coords: aff.delta.iter().map(|d| d * j).collect(),
                parity: crate::cartan::Parity::Even,
                kind: RootKind::Imaginary,
                mult: (0, 0),
                isotropic: true,
                coroot: zero_vec(alg.rank()),
            });
            j += 1;
        }
    }
    for alpha in table.real_roots().cloned().chain(imaginary) {
        if !alpha.is_positive() || alpha.height() > height_bound {
            continue;
        }
        let half: Option<Vec<i64>> = alpha
            .coords
            .iter()
            .map(|&c| (c % 2 == 0).then_some(c / 2))
            .collect();
        if half.as_deref().is_some_and(|h| table.contains(h)) {
            continue; // alpha/2 is a root: alpha not in the reduced set
        }
        let coords_q = i_to_q_vec(&alpha.coords);
        let norm2 = alg.norm2(&coords_q);
        let lhs = q(2) * shifted.form_lattice(alg, &coords_q);
        let m = if norm2.is_zero() {
            if !lhs.is_zero() {
                continue;
            }
            1
        } else {
            let ratio = lhs / &norm2;
            let Some(m) = to_i64(&ratio) else { continue };
            if m <= 0 {
                continue;
            }
            if alpha.parity == crate::cartan::Parity::Odd && m % 2 == 0 {
                continue;
            }
            m
        };
        if m * alpha.height() > height_bound {
            continue;
        }
        let target_offset: Vec<i64> = alpha.coords.iter().map(|c| -m * c).collect();
        let target =
            lambda.sub_lattice(alg, &alpha.coords.iter().map(|c| m * c).collect::<Vec<_>>());
        out.push(LinkagePair {
            alpha,
            m,
            target,
            target_offset,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkageVerdict {
    Linked { depth: usize },
    NotLinkedUpTo { depth: usize, height: i64 },
}

/// Bidirectional closure of the Kac-Kazhdan relation: sound positives,
/// bounded negatives.
pub fn linkage_closure(
    alg: &Algebra,
    lambda: &Weight,
    nu: &Weight,
    depth: usize,
    height_bound: i64,
) -> Result<LinkageVerdict> {
    let table = generate_roots_real_only(alg, height_bound)?;
    let rho = Weight::rho(alg);
    let neighbors = |w: &Weight| -> Result<Vec<Weight>> {
        let mut out = Vec::new();
        for p in kk_pairs_in(alg, &table, w, height_bound)? {
            out.push(p.target);
        }
        // upward: mu + m alpha is a source when 2(mu + rho|alpha) = -m(alpha|alpha)
        let shifted = w.add(&rho);
        let mut candidates: Vec<(Vec<i64>, crate::cartan::Parity, bool)> = table
            .real_roots()
            .filter(|r| r.is_positive())
            .map(|r| (r.coords.clone(), r.parity, false))
            .collect();
        if alg.growth() == Some(Growth::Aff) {
            let aff = alg.affine()?;
            let dh = height_i(&aff.delta);
            let mut j = 1i64;
            while j * dh <= height_bound {
                candidates.push((
                    aff.delta.iter().map(|d| d * j).collect(),
                    crate::cartan::Parity::Even,
                    true,
                ));
                j += 1;
            }
        }
        for (coords, parity, _imag) in candidates {
            let half: Option<Vec<i64>> = coords
                .iter()
                .map(|&c| (c % 2 == 0).then_some(c / 2))
                .collect();
            if half.as_deref().is_some_and(|h| table.contains(h)) {
                continue;
            }
            let cq = i_to_q_vec(&coords);
            let norm2 = alg.norm2(&cq);
            let lhs = q(2) * shifted.form_lattice(alg, &cq);
            let m = if norm2.is_zero() {
                if !lhs.is_zero() {
                    continue;
                }
                1
            } else {
                let ratio = -lhs / &norm2;
                let Some(m) = to_i64(&ratio) else { continue };
                if m <= 0 {
                    continue;
                }
                if parity == crate::cartan::Parity::Odd && m % 2 == 0 {
                    continue;
                }
                m
            };
            if m * height_i(&coords) > height_bound {
                continue;
            }
            let up: Vec<i64> = coords.iter().map(|c| m * c).collect();
            let pv = alg.pairing_vector(&i_to_q_vec(&up));
            out.push(Weight::new(add_vec(&w.pairings, &pv)));
        }
        Ok(out)
    };

    let key = |w: &Weight| w.pairings.clone();
    let mut left: BTreeSet<Vec<Rat>> = BTreeSet::new();
    let mut right: BTreeSet<Vec<Rat>> = BTreeSet::new();
    left.insert(key(lambda));
    right.insert(key(nu));
    if !left.is_disjoint(&right) {
        return Ok(LinkageVerdict::Linked { depth: 0 });
    }
    let mut lf: Vec<Weight> = vec![lambda.clone()];
    let mut rf: Vec<Weight> = vec![nu.clone()];
    for d in 1..=depth {
        let mut next = Vec::new();
        for w in &lf {
            for n in neighbors(w)? {
                if left.insert(key(&n)) {
                    next.push(n);
                }
            }
        }
        lf = next;
        if !left.is_disjoint(&right) {
            return Ok(LinkageVerdict::Linked { depth: d });
        }
        let mut next = Vec::new();
        for w in &rf {
            for n in neighbors(w)? {
                if right.insert(key(&n)) {
                    next.push(n);
                }
            }
        }
        rf = next;
        if !left.is_disjoint(&right) {
            return Ok(LinkageVerdict::Linked { depth: d });
        }
        if lf.is_empty() && rf.is_empty() {
            break;
        }
    }
    Ok(LinkageVerdict::NotLinkedUpTo {
        depth,
        height: height_bound,
    })
}

#[derive(Debug, Clone)]
pub struct AdmissibleVerdict {
    pub admissible: bool,
    pub rank_full: bool,
    pub snowflake: SnowflakeVerdict,
}

/// Admissibility: full rational rank of Delta(lambda) plus the snowflake
/// positivity; affine non-isotropic type.
pub fn is_admissible(
    alg: &Algebra,
    lambda: &Weight,
    height_bound: i64,
) -> Result<AdmissibleVerdict> {
    if alg.growth() != Some(Growth::Aff) {
        return Err(Error::NotAffine {
            found: alg
                .growth()
                .map(|g| g.to_string())
                .unwrap_or_else(|| "mixed".into()),
        });
    }
    let (h, raised) = snowflake_effective_height(alg, lambda, height_bound)?;
    let table = generate_roots_real_only(alg, h)?;
    let slice = integral_subsystem_in(alg, &table, lambda, h, IntegralVariant::Plain)?;
    let rows: Vec<Vec<Rat>> = slice
        .positive_roots
        .iter()
        .map(|r| i_to_q_vec(&r.coords))
        .collect();
    let rank_full = rank(&rows) == alg.rank();
    let base = subsystem_base(alg, &slice)?;
    let snowflake = snowflake_from_base(alg, lambda, &base, raised)?;
    Ok(AdmissibleVerdict {
        admissible: rank_full && snowflake.is_snowflake,
        rank_full,
        snowflake,
    })
}

/// The weight k * Lambda_0: pairing 1 with the affine-node coroot, 0 with
/// the others, scaled by k.
pub fn k_lambda0(alg: &Algebra, k: &Rat) -> Result<Weight> {
    let aff = alg.affine()?;
    let mut p = zero_vec(alg.rank());
    p[aff.affine_node] = k.clone();
    Ok(Weight::new(p))
}

pub fn admissible_level(alg: &Algebra, k: &Rat, height_bound: i64) -> Result<AdmissibleVerdict> {
    is_admissible(alg, &k_lambda0(alg, k)?, height_bound)
}

/// Express q * delta as a positive integer combination of the subsystem
/// base elements; first witness found.
fn express_delta_multiple(
    alg: &Algebra,
    base: &SubsystemBase,
    mut qmult: i64,
) -> Result<(i64, Vec<i64>)> {
    let aff = alg.affine()?;
    for _ in 0..4 {
        let target: Vec<i64> = aff.delta.iter().map(|d| d * qmult).collect();
        let elems: Vec<&Root> = base.elements.iter().map(|e| &e.root).collect();
        let mut coeffs = vec![0i64; elems.len()];
        if express_rec(&target, &elems, 0, &mut coeffs) {
            return Ok((qmult, coeffs));
        }
        qmult *= 2;
    }
    Err(Error::Internal(
        "could not express a delta multiple over the subsystem base".into(),
    ))
}

// Express `target` as sum c_i * elems_i with every c_i >= 1.
fn express_rec(target: &[i64], elems: &[&Root], idx: usize, coeffs: &mut Vec<i64>) -> bool {
    if idx == elems.len() {
        return target.iter().all(|&t| t == 0);
    }
    let e = elems[idx];
    let max_c = target
        .iter()
        .zip(&e.coords)
        .filter(|(_, &ec)| ec > 0)
        .map(|(&t, &ec)| t / ec)
        .min()
        .unwrap_or(0);
    for c in (1..=max_c).rev() {
        let rest: Vec<i64> = target
            .iter()
            .zip(&e.coords)
            .map(|(&t, &ec)| t - c * ec)
            .collect();
        if rest.iter().any(|&x| x < 0) {
            continue;
        }
        coeffs[idx] = c;
        if express_rec(&rest, elems, idx + 1, coeffs) {
            return true;
        }
    }
    coeffs[idx] = 0;
    false
}

/// All snowflake highest weights of level k whose integral subsystem equals
/// the given slice, modulo delta-shifts.  The box bound comes from
/// m_alpha (lambda + rho | alpha) < q (k + h^vee) with q delta =
/// sum m_beta beta over the base.
pub fn enumerate_snowflake_weights(
    alg: &Algebra,
    k: &Rat,
    target: &RootSubsystemSlice,
    height_bound: i64,
) -> Result<Vec<Weight>> {
    let aff = alg.affine()?;
    let rows: Vec<Vec<Rat>> = target
        .positive_roots
        .iter()
        .map(|r| i_to_q_vec(&r.coords))
        .collect();
    if rank(&rows) != alg.rank() {
        return Err(Error::Precondition(
            "the subsystem does not span the full rational root space".into(),
        ));
    }
    if *k == -aff.dual_coxeter.clone() {
        return Ok(vec![]); // critical level carries no snowflake weights
    }
    let base = subsystem_base(alg, target)?;
    let qmult = integrality_period(alg, k)?;
    let (qmult, marks) = express_delta_multiple(alg, &base, qmult)?;
    let budget = q(qmult) * (k + &aff.dual_coxeter);
    if !budget.is_positive() {
        return Ok(vec![]);
    }
    // box bounds per base element
    let elems: Vec<&Root> = base.elements.iter().map(|e| &e.root).collect();
    let mut bounds = Vec::new();
    for (e, &m) in elems.iter().zip(&marks) {
        let norm = alg.norm2(&i_to_q_vec(&e.coords));
        if !norm.is_positive() {
            return Err(Error::Internal(
                "base element with non-positive norm".into(),
            ));
        }
        // v * m * norm / 2 < budget
        let cap = &budget * q(2) / (q(m) * &norm);
        let mut b = cap.floor().to_integer();
        if Rat::from_integer(b.clone()) == cap {
            b -= 1;
        }
        let b = i64::try_from(b).map_err(|_| Error::Internal("box bound overflow".into()))?;
        if b < 1 {
            return Ok(vec![]);
        }
        bounds.push(b);
    }
    // iterate the integer box with the compatibility equation
    let mut out: Vec<Weight> = Vec::new();
    let mut v = vec![1i64; elems.len()];
    'outer: loop {
        let total: Rat = elems
            .iter()
            .zip(&marks)
            .zip(&v)
            .map(|((e, &m), &vi)| q(m) * alg.norm2(&i_to_q_vec(&e.coords)) / q(2) * q(vi))
            .fold(Rat::zero(), |a, b| a + b);
        if total == budget {
            if let Some(w) = solve_weight_from_values(alg, &elems, &v)? {
                let lvl = level(alg, &w)?;
                if lvl == *k {
                    let slice2 = integral_subsystem(alg, &w, target.height_bound)?;
                    if slice2.coords_set() == target.coords_set() {
                        let verdict = is_snowflake_hw(alg, &w, height_bound)?;
                        if verdict.is_snowflake && !out.iter().any(|o| o.pairings == w.pairings) {
                            out.push(w);
                        }
                    }
                }
            }
        }
        // advance the odometer
        let mut i = 0;
        loop {
            if i == v.len() {
                break 'outer;
            }
            v[i] += 1;
            if v[i] <= bounds[i] {
                break;
            }
            v[i] = 1;
            i += 1;
        }
    }
    out.sort_by(|a, b| a.pairings.cmp(&b.pairings));
    Ok(out)
}

fn integral_subsystem(alg: &Algebra, w: &Weight, h: i64) -> Result<RootSubsystemSlice> {
    let table = generate_roots_real_only(alg, h)?;
    integral_subsystem_in(alg, &table, w, h, IntegralVariant::Plain)
}

/// Solve for the weight with prescribed (lambda + rho)(beta^vee) values on
/// the base elements; unique as a pairing vector when the coroots span.
fn solve_weight_from_values(
    alg: &Algebra,
    elems: &[&Root],
    values: &[i64],
) -> Result<Option<Weight>> {
    let rho = Weight::rho(alg);
    let m: Vec<Vec<Rat>> = elems.iter().map(|e| e.coroot.clone()).collect();
    let b: Vec<Rat> = elems
        .iter()
        .zip(values)
        .map(|(e, &v)| q(v) - rho.pair_coroot(&e.coroot))
        .collect();
    if rank(&m) != alg.rank() {
        return Err(Error::Internal(
            "base coroots do not determine the weight".into(),
        ));
    }
    Ok(solve(&m, &b).map(Weight::new))
}

/// Apply a diagram automorphism, given as a permutation of the simple
/// roots, to a weight via the dot action y.lambda = y(lambda+rho) - rho.
/// The permutation must preserve the supermatrix and parities.
pub fn diagram_automorphism_dot(alg: &Algebra, perm: &[usize], lambda: &Weight) -> Result<Weight> {
    let n = alg.rank();
    if perm.len() != n {
        return Err(Error::Input("permutation length mismatch".into()));
    }
    for i in 0..n {
        if alg.supermatrix.parity[perm[i]] != alg.supermatrix.parity[i] {
            return Err(Error::Input(
                "permutation does not preserve parities".into(),
            ));
        }
        for j in 0..n {
            if alg.supermatrix.a[perm[i]][perm[j]] != alg.supermatrix.a[i][j] {
                return Err(Error::Input(
                    "permutation does not preserve the supermatrix".into(),
                ));
            }
        }
    }
    let rho = Weight::rho(alg);
    let shifted = lambda.add(&rho);
    // (y mu)(alpha_i^vee) = mu(alpha_{perm^{-1}(i)}^vee)
    let mut inv = vec![0usize; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let permuted: Vec<Rat> = (0..n).map(|i| shifted.pairings[inv[i]].clone()).collect();
    Ok(Weight::new(sub_vec(&permuted, &rho.pairings)))
}

/// Permute root coordinates under a diagram automorphism.
pub fn diagram_automorphism_root(perm: &[usize], coords: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; coords.len()];
    for (j, &c) in coords.iter().enumerate() {
        out[perm[j]] = c;
    }
    out
}

/// Report for the finite-dimensional isotropic-type restricted snowflake
/// criterion.
#[derive(Debug, Clone)]
pub struct RestrictedSnowflakeReport {
    pub holds: bool,
    /// Per factor: the base of Delta(lambda) within the factor subsystem
    /// and the positivity values.
    pub factors: Vec<FactorReport>,
    pub type_ii: bool,
}

#[derive(Debug, Clone)]
pub struct FactorReport {
    pub base_rho_offset: Vec<i64>,
    pub values: Vec<(Vec<i64>, Rat)>,
}

/// Restriction to the even part is snowflake iff the transported highest
/// weight satisfies the factor positivity.  Searches the base set for the
/// type I / type II pair.
pub fn restricted_snowflake_findim(
    alg: &Algebra,
    lambda: &Weight,
    height_bound: i64,
) -> Result<RestrictedSnowflakeReport> {
    if alg.growth() != Some(Growth::Fin) || alg.isotropy() != crate::cartan::Isotropy::Isotropic {
        return Err(Error::Precondition(
            "requires finite-dimensional isotropic type".into(),
        ));
    }
    // base paths via BFS with parents
    let paths = base_paths(alg)?;
    let comps = crate::cartan::decompose_components(&alg.b_matrix);
    let all: BTreeSet<usize> = (0..alg.principal.len()).collect();
    // type I: one base whose sigma_pr covers all principal roots
    let mut factors_spec: Vec<(usize, Vec<usize>)> = Vec::new(); // (base index, principal indices)
    let type_i = alg.bases.bases.iter().position(|b| {
        crate::subsystems::sigma_pr(alg, b)
            .into_iter()
            .collect::<BTreeSet<_>>()
            == all
    });
    let type_ii;
    match type_i {
        Some(bi) => {
            type_ii = false;
            factors_spec.push((bi, (0..alg.principal.len()).collect()));
        }
        None => {
            if comps.len() != 2 {
                return Err(Error::Precondition(format!(
                    "no single base covers the principal roots and B has {} components",
                    comps.len()
                )));
            }
            type_ii = true;
            for comp in &comps {
                let compset: BTreeSet<usize> = comp.iter().copied().collect();
                let bi = alg
                    .bases
                    .bases
                    .iter()
                    .position(|b| {
                        let sp: BTreeSet<usize> =
                            crate::subsystems::sigma_pr(alg, b).into_iter().collect();
                        compset.is_subset(&sp)
                    })
                    .ok_or_else(|| {
                        Error::Precondition("no base covers a principal component".into())
                    })?;
                factors_spec.push((bi, comp.clone()));
            }
        }
    }
    let rho = Weight::rho(alg);
    let mut factors = Vec::new();
    let mut holds = true;
    for (bi, comp) in factors_spec {
        let base = &alg.bases.bases[bi];
        let lam_i = transport_highest_weight(alg, lambda, &paths[bi])?;
        let rho_i_pv = add_vec(
            &rho.pairings,
            &alg.pairing_vector(&i_to_q_vec(&base.rho_offset)),
        );
        let shifted = Weight::new(add_vec(&lam_i.pairings, &rho_i_pv));
        // factor subsystem: orbit of the component generators, intersected
        // with the integral subsystem of lambda
        let ambient = crate::subsystems::w_sigma_slice(alg, &comp, height_bound)?;
        let members: Vec<Root> = ambient
            .positive_roots
            .into_iter()
            .filter(|r| is_integer(&lambda.pair_coroot(&r.coroot)))
            .collect();
        let slice = RootSubsystemSlice {
            positive_roots: members,
            height_bound,
            complete: true,
        };
        let fbase = subsystem_base(alg, &slice)?;
        let mut values = Vec::new();
        for e in &fbase.elements {
            let v = shifted.pair_coroot(&e.root.coroot);
            holds &= v.is_positive();
            values.push((e.root.coords.clone(), v));
        }
        factors.push(FactorReport {
            base_rho_offset: base.rho_offset.clone(),
            values,
        });
    }
    Ok(RestrictedSnowflakeReport {
        holds,
        factors,
        type_ii,
    })
}

/// Reflection paths (base index, reflection index) from the original base
/// to each base in enumeration order.
fn base_paths(alg: &Algebra) -> Result<Vec<Vec<(usize, usize)>>> {
    let n = alg.bases.bases.len();
    let key_of: BTreeMap<Vec<Vec<i64>>, usize> = alg
        .bases
        .bases
        .iter()
        .enumerate()
        .map(|(i, b)| (b.key(), i))
        .collect();
    let start = alg
        .bases
        .bases
        .iter()
        .position(|b| b.rho_offset.iter().all(|&x| x == 0))
        .ok_or_else(|| Error::Internal("original base missing from the base set".into()))?;
    let mut paths: Vec<Option<Vec<(usize, usize)>>> = vec![None; n];
    paths[start] = Some(vec![]);
    let mut queue = VecDeque::from([start]);
    while let Some(bi) = queue.pop_front() {
        let base = alg.bases.bases[bi].clone();
        for i in base.isotropic_indices() {
            let next = crate::cartan::odd_reflect(&alg.supermatrix, &base, i)?;
            if let Some(&ni) = key_of.get(&next.key()) {
                if paths[ni].is_none() {
                    let mut p = paths[bi].clone().unwrap();
                    p.push((bi, i));
                    paths[ni] = Some(p);
                    queue.push_back(ni);
                }
            }
        }
    }
    paths
        .into_iter()
        .map(|p| p.ok_or_else(|| Error::Internal("disconnected base set".into())))
        .collect()
}

/// Highest weight of the same simple module with respect to the base at the
/// end of the path: lambda + rho = lambda' + rho' when the pairing with the
/// reflected coroot is non-zero, and lambda' = lambda otherwise.
fn transport_highest_weight(
    alg: &Algebra,
    lambda: &Weight,
    path: &[(usize, usize)],
) -> Result<Weight> {
    let rho = Weight::rho(alg);
    let mut lam = lambda.clone();
    for &(bi, i) in path {
        let base = &alg.bases.bases[bi];
        let rho_b = Weight::new(add_vec(
            &rho.pairings,
            &alg.pairing_vector(&i_to_q_vec(&base.rho_offset)),
        ));
        let t = lam.add(&rho_b).pair_coroot(&base.coroots[i]);
        if !t.is_zero() {
            let pv = alg.pairing_vector(&i_to_q_vec(&base.simple_roots[i]));
            lam = Weight::new(sub_vec(&lam.pairings, &pv));
        }
    }
    Ok(lam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zoo;

    #[test]
    fn dot_action_sl2() {
        let alg = zoo::sl2();
        let lam = Weight::new(vec![q(3)]);
        let w = WeylWord(vec![0]);
        let e = dot_action(&alg, &w, &lam).unwrap();
        assert_eq!(e.offset, vec![q(-4)]);
        assert_eq!(e.collapse(&alg).pairings, vec![q(-5)]);
        // identity word
        let id = dot_action(&alg, &WeylWord::identity(), &lam).unwrap();
        assert_eq!(id.offset, vec![q(0)]);
    }

    #[test]
    fn dot_action_osp12() {
        let alg = zoo::osp12();
        // rho((2 beta)^vee) = 1/2
        let rho = Weight::rho(&alg);
        assert_eq!(rho.pair_coroot(&alg.principal[0].coroot), qr(1, 2));
        let lam = Weight::new(vec![q(4)]);
        let e = dot_action(&alg, &WeylWord(vec![0]), &lam).unwrap();
        // offset = -(lambda+rho)((2beta)^vee) * 2beta = -(5/2)(2beta) = -5 beta
        assert_eq!(e.offset, vec![q(-5)]);
    }

    #[test]
    fn dot_action_is_group_action() {
        let alg = zoo::sp4();
        let lam = Weight::new(vec![qr(2, 3), qr(-1, 5)]);
        let w1 = WeylWord(vec![0, 1]);
        let w2 = WeylWord(vec![1, 0, 0]);
        let seq = dot_action(&alg, &w2, &lam).unwrap();
        let seq = {
            // apply w1 to the exponent
            let mut cur = seq;
            for &g in &w1.0 {
                let p = &alg.principal[g];
                cur = dot_reflect(&alg, &p.coords, &p.coroot, &cur).unwrap();
            }
            cur
        };
        let combined = dot_action(&alg, &WeylWord(vec![1, 0, 0, 0, 1]), &lam).unwrap();
        assert_eq!(seq.offset, combined.offset);
    }

    #[test]
    fn levels_and_criticality() {
        let alg = zoo::sl2_affine();
        let lam = k_lambda0(&alg, &q(-2)).unwrap();
        assert_eq!(level(&alg, &lam).unwrap(), q(-2));
        assert!(is_critical_module(&alg, &lam).unwrap());
        assert!(!is_critical_weight(&alg, &lam).unwrap());
        let lam = k_lambda0(&alg, &qr(-1, 2)).unwrap();
        assert!(!is_critical_module(&alg, &lam).unwrap());
        // finite type: never critical
        let fin = zoo::sp4();
        assert!(!is_critical_module(&fin, &Weight::new(vec![q(1), q(1)])).unwrap());
    }

    #[test]
    fn typicality() {
        let alg = zoo::sp4();
        assert_eq!(
            is_typical(&alg, &Weight::new(vec![q(0), q(0)]), 10).unwrap(),
            TypicalVerdict::Typical
        );
        let alg = zoo::sl21();
        // rho = 0; pairings (1/3, 1/5) miss every isotropic coroot
        let lam = Weight::new(vec![qr(1, 3), qr(1, 5)]);
        assert_eq!(is_typical(&alg, &lam, 10).unwrap(), TypicalVerdict::Typical);
        let lam = Weight::new(vec![q(0), qr(1, 5)]);
        assert_eq!(
            is_typical(&alg, &lam, 10).unwrap(),
            TypicalVerdict::Atypical {
                witness: vec![1, 0]
            }
        );
    }

    #[test]
    fn snowflake_examples() {
        // trivial weight in non-isotropic type
        for alg in [zoo::sl2(), zoo::osp12(), zoo::sp4(), zoo::osp14()] {
            let v = is_snowflake_hw(&alg, &Weight::zero(alg.rank()), 12).unwrap();
            assert!(v.is_snowflake, "{:?}", alg.name);
            assert!(v.certified);
        }
        // sl2 with pairing -3
        let alg = zoo::sl2();
        let v = is_snowflake_hw(&alg, &Weight::new(vec![q(-3)]), 12).unwrap();
        assert!(!v.is_snowflake);
        assert_eq!(v.values, vec![(vec![1], q(-2))]);
        // osp(9|2) with lambda + rho = (1/3)(eps1 + eps3): value 0 on eps1 - eps3
        let alg = zoo::osp9_2();
        let rho = Weight::rho(&alg);
        let lam = Weight::new(sub_vec(
            &[qr(1, 3), qr(1, 3), qr(-1, 3), qr(1, 3), q(0)],
            &rho.pairings,
        ));
        let v = is_snowflake_hw(&alg, &lam, 12).unwrap();
        assert!(!v.is_snowflake);
        assert!(v
            .values
            .iter()
            .any(|(c, val)| c == &vec![0, 1, 1, 0, 0] && val.is_zero()));
    }

    #[test]
    fn kk_pair_examples() {
        let alg = zoo::sl2();
        let pairs = kk_pairs(&alg, &Weight::new(vec![q(3)]), 10).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].alpha.coords, vec![1]);
        assert_eq!(pairs[0].m, 4);
        assert_eq!(pairs[0].target.pairings, vec![q(-5)]);

        let alg = zoo::osp12();
        // (lambda + rho)(beta^vee) = 3 with rho(beta^vee) = 1
        let pairs = kk_pairs(&alg, &Weight::new(vec![q(2)]), 10).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].alpha.coords, vec![1]);
        assert_eq!(pairs[0].m, 3);

        // generic irrational weight: no pairs
        let pairs = kk_pairs(&alg, &Weight::new(vec![qr(1, 3)]), 10).unwrap();
        assert!(pairs.is_empty());
    }

    #[test]
    fn kk_pairs_respect_the_equation() {
        let alg = zoo::osp14();
        let lam = Weight::new(vec![q(2), q(1)]);
        let rho = Weight::rho(&alg);
        for p in kk_pairs(&alg, &lam, 14).unwrap() {
            let a = i_to_q_vec(&p.alpha.coords);
            let lhs = q(2) * lam.add(&rho).form_lattice(&alg, &a);
            let rhs = q(p.m) * alg.norm2(&a);
            assert_eq!(lhs, rhs);
            // norm of lambda + rho is preserved:
            // ||l+r-ma||^2 - ||l+r||^2 = -m(2(l+r|a) - m(a|a)) = 0
        }
    }

    #[test]
    fn linkage_examples() {
        let alg = zoo::sl2();
        let lam = Weight::new(vec![q(3)]);
        assert_eq!(
            linkage_closure(&alg, &lam, &lam, 4, 10).unwrap(),
            LinkageVerdict::Linked { depth: 0 }
        );
        let nu = Weight::new(vec![q(-5)]);
        assert_eq!(
            linkage_closure(&alg, &lam, &nu, 4, 10).unwrap(),
            LinkageVerdict::Linked { depth: 1 }
        );
        let nu = Weight::new(vec![q(1)]);
        assert!(matches!(
            linkage_closure(&alg, &lam, &nu, 4, 10).unwrap(),
            LinkageVerdict::NotLinkedUpTo { .. }
        ));
    }

    #[test]
    fn admissibility_a1_affine() {
        let alg = zoo::sl2_affine();
        let v = admissible_level(&alg, &qr(-1, 2), 24).unwrap();
        assert!(v.admissible, "{:?}", v);
        let mut vals: Vec<(Vec<i64>, Rat)> = v.snowflake.values.clone();
        vals.sort();
        assert_eq!(vals, vec![(vec![0, 1], q(1)), (vec![2, 1], q(2))]);
        let v = admissible_level(&alg, &q(-3), 24).unwrap();
        assert!(!v.admissible);
        let v = admissible_level(&alg, &q(1), 24).unwrap();
        assert!(v.admissible);
        let v = admissible_level(&alg, &q(0), 24).unwrap();
        assert!(v.admissible);
    }

    #[test]
    fn snowflake_weight_enumeration_a1() {
        let alg = zoo::sl2_affine();
        let k = qr(-1, 2);
        let lam0 = k_lambda0(&alg, &k).unwrap();
        let table = generate_roots_real_only(&alg, 24).unwrap();
        let slice = integral_subsystem_in(&alg, &table, &lam0, 24, IntegralVariant::Plain).unwrap();
        let weights = enumerate_snowflake_weights(&alg, &k, &slice, 24).unwrap();
        assert_eq!(weights.len(), 2);
        // values of (lambda + rho) on {alpha_1, 2 delta - alpha_1}: (1,2), (2,1)
        let rho = Weight::rho(&alg);
        let base = subsystem_base(&alg, &slice).unwrap();
        let mut value_sets: Vec<Vec<Rat>> = weights
            .iter()
            .map(|w| {
                base.elements
                    .iter()
                    .map(|e| w.add(&rho).pair_coroot(&e.root.coroot))
                    .collect()
            })
            .collect();
        value_sets.sort();
        assert_eq!(value_sets, vec![vec![q(1), q(2)], vec![q(2), q(1)]]);
        // every member passes the snowflake test
        for w in &weights {
            assert!(is_snowflake_hw(&alg, w, 24).unwrap().is_snowflake);
        }
    }

    #[test]
    fn restricted_snowflake_sl21() {
        let alg = zoo::sl21();
        // (lambda + rho)((a1+a2)^vee) = 2 with rho = 0
        let r = restricted_snowflake_findim(&alg, &Weight::new(vec![q(1), q(1)]), 8).unwrap();
        assert!(r.holds);
        assert!(!r.type_ii);
        let r = restricted_snowflake_findim(&alg, &Weight::new(vec![q(1), q(-1)]), 8).unwrap();
        assert!(!r.holds);
        let r = restricted_snowflake_findim(&alg, &Weight::new(vec![q(0), q(-1)]), 8).unwrap();
        assert!(!r.holds);
    }

    #[test]
    fn restricted_snowflake_osp9_2_is_type_ii() {
        // no single base of osp(9|2) carries both eps4 and 2 delta1, so the
        // criterion runs over the two principal components separately; for a
        // typical weight the transported shifted weights all equal
        // lambda + rho, and the factor values are direct pairings
        let alg = zoo::osp9_2();
        let rho = Weight::rho(&alg);
        // lambda + rho = mu = 4 eps1 + 3 eps2 + 2 eps3 + eps4 + (1/3) delta1:
        // integral regular on the B4 part, irrational on the A1 part,
        // non-orthogonal to every isotropic root delta1 +- eps_i; the first
        // pairing is (mu | eps1 - delta1) for the isotropic coroot scale
        let shifted_pv = vec![q(4) - qr(1, 3), q(1), q(1), q(1), q(2)];
        let lam = Weight::new(sub_vec(&shifted_pv, &rho.pairings));
        assert!(matches!(
            is_typical(&alg, &lam, 16).unwrap(),
            TypicalVerdict::Typical
        ));
        let report = restricted_snowflake_findim(&alg, &lam, 16).unwrap();
        assert!(report.type_ii);
        assert_eq!(report.factors.len(), 2);
        // every factor value equals the direct (lambda + rho) pairing, and
        // the B4 factor sees the full integral base while the A1 factor is
        // empty (irrational pairing with (2 delta1)^vee)
        let all_values: Vec<(Vec<i64>, Rat)> = report
            .factors
            .iter()
            .flat_map(|f| f.values.clone())
            .collect();
        assert!(!all_values.is_empty());
        let shifted = Weight::new(shifted_pv);
        let table = generate_roots_real_only(&alg, 16).unwrap();
        for (coords, value) in &all_values {
            let root = table.get(coords).unwrap();
            assert_eq!(shifted.pair_coroot(&root.coroot), *value);
            assert!(value.is_positive());
        }
        assert!(report.holds);
        assert!(all_values.iter().all(|(c, _)| c != &vec![2, 2, 2, 2, 2]));
    }

    #[test]
    fn enumeration_at_a_denser_level() {
        // k = -4/3 has integrality period 3; the box collapses to the
        // single weight k Lambda0 modulo delta shifts
        let alg = zoo::sl2_affine();
        let k = qr(-4, 3);
        assert_eq!(integrality_period(&alg, &k).unwrap(), 3);
        let lam0 = k_lambda0(&alg, &k).unwrap();
        let (h, _) = snowflake_effective_height(&alg, &lam0, 24).unwrap();
        let table = generate_roots_real_only(&alg, h).unwrap();
        let slice = integral_subsystem_in(&alg, &table, &lam0, h, IntegralVariant::Plain).unwrap();
        let found = enumerate_snowflake_weights(&alg, &k, &slice, 24).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].pairings, lam0.pairings);
    }

    #[test]
    fn diagram_automorphism_symmetry() {
        let alg = zoo::sl2_affine();
        let swap = vec![1usize, 0];
        let lam = Weight::new(vec![qr(1, 2), q(3)]);
        let y = diagram_automorphism_dot(&alg, &swap, &lam).unwrap();
        assert_eq!(y.pairings, vec![q(3), qr(1, 2)]);
        let back = diagram_automorphism_dot(&alg, &swap, &y).unwrap();
        assert_eq!(back.pairings, lam.pairings);
    }

    #[test]
    fn enumeration_commutes_with_diagram_automorphisms() {
        // swapping the two nodes of A1^(1) is a Gram isometry preserving
        // the positive roots of the swapped subsystem, so the snowflake
        // weight sets transport along the dot action
        let alg = zoo::sl2_affine();
        let k = qr(-1, 2);
        let swap = vec![1usize, 0];
        let lam0 = k_lambda0(&alg, &k).unwrap();
        let table = generate_roots_real_only(&alg, 24).unwrap();
        let slice = integral_subsystem_in(&alg, &table, &lam0, 24, IntegralVariant::Plain).unwrap();
        let s1 = enumerate_snowflake_weights(&alg, &k, &slice, 24).unwrap();
        // the swapped subsystem: permute every root's coordinates
        let swapped_members: Vec<Root> = slice
            .positive_roots
            .iter()
            .map(|r| {
                let coords = diagram_automorphism_root(&swap, &r.coords);
                let coroot = vec![r.coroot[1].clone(), r.coroot[0].clone()];
                Root {
                    coords,
                    coroot,
                    ..r.clone()
                }
            })
            .collect();
        let swapped = RootSubsystemSlice {
            positive_roots: swapped_members,
            height_bound: slice.height_bound,
            complete: slice.complete,
        };
        let s2 = enumerate_snowflake_weights(&alg, &k, &swapped, 24).unwrap();
        let transported: BTreeSet<Vec<Rat>> = s1
            .iter()
            .map(|w| diagram_automorphism_dot(&alg, &swap, w).unwrap().pairings)
            .collect();
        let got: BTreeSet<Vec<Rat>> = s2.into_iter().map(|w| w.pairings).collect();
        assert_eq!(got, transported);
    }

    #[test]
    fn period_detection() {
        let alg = zoo::sl2_affine();
        assert_eq!(delta_period(&alg).unwrap(), 1);
        assert_eq!(integrality_period(&alg, &qr(-1, 2)).unwrap(), 2);
        assert_eq!(integrality_period(&alg, &q(1)).unwrap(), 1);
        let alg = zoo::osp12_affine();
        assert_eq!(delta_period(&alg).unwrap(), 1);
    }
}
