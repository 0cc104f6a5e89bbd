//! Truncated formal exponential series with coefficients in
//! `Z[eps]/(eps^2 - 1)`.
//!
//! A series is anchored at a weight (stored through its coroot pairings)
//! and supported on rational root-lattice offsets from that anchor; all the
//! support displacements that matter computationally are explicit lattice
//! vectors, so delta-shifts of the anchor itself are quotiented out exactly
//! as they are for weights.  A window records the drop (height below the
//! anchor) up to which coefficients are certified.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::rat::*;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// c0 + c1 * eps with eps^2 = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperCoeff {
    pub c0: i64,
    pub c1: i64,
}

impl SuperCoeff {
    pub const ZERO: SuperCoeff = SuperCoeff { c0: 0, c1: 0 };
    pub const ONE: SuperCoeff = SuperCoeff { c0: 1, c1: 0 };
    pub const EPS: SuperCoeff = SuperCoeff { c0: 0, c1: 1 };

    pub fn int(n: i64) -> SuperCoeff {
        SuperCoeff { c0: n, c1: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }

    pub fn add(&self, o: &SuperCoeff) -> SuperCoeff {
        SuperCoeff {
            c0: self.c0 + o.c0,
            c1: self.c1 + o.c1,
        }
    }

    pub fn neg(&self) -> SuperCoeff {
        SuperCoeff {
            c0: -self.c0,
            c1: -self.c1,
        }
    }

    pub fn mul(&self, o: &SuperCoeff) -> SuperCoeff {
        SuperCoeff {
            c0: self.c0 * o.c0 + self.c1 * o.c1,
            c1: self.c0 * o.c1 + self.c1 * o.c0,
        }
    }

    /// Evaluate at eps = 1 (character) or eps = -1 (supercharacter).
    pub fn eval(&self, eps: i64) -> i64 {
        self.c0 + eps * self.c1
    }

    /// Inverse when the coefficient is a unit (+-1, +-eps).
    pub fn unit_inverse(&self) -> Option<SuperCoeff> {
        match (self.c0, self.c1) {
            (1, 0) | (-1, 0) | (0, 1) | (0, -1) => Some(*self),
            _ => None,
        }
    }
}

/// Certified window: drops (height below the anchor) up to which the
/// coefficients are exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Window {
    Exact,
    UpTo(Rat),
}

impl Window {
    pub fn min(&self, other: &Window) -> Window {
        match (self, other) {
            (Window::Exact, w) => w.clone(),
            (w, Window::Exact) => w.clone(),
            (Window::UpTo(a), Window::UpTo(b)) => Window::UpTo(a.min(b).clone()),
        }
    }

    pub fn covers(&self, drop: &Rat) -> bool {
        match self {
            Window::Exact => true,
            Window::UpTo(d) => drop <= d,
        }
    }

    pub fn lowered_by(&self, amount: &Rat) -> Window {
        match self {
            Window::Exact => Window::Exact,
            Window::UpTo(d) => Window::UpTo(d - amount),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// Pairing vector of the anchor weight.
    pub anchor: Vec<Rat>,
    /// offset (rational root-lattice coordinates) -> coefficient.
    pub terms: BTreeMap<Vec<Rat>, SuperCoeff>,
    pub window: Window,
}

impl TruncatedSeries {
    pub fn zero(anchor: Vec<Rat>, window: Window) -> TruncatedSeries {
        TruncatedSeries {
            anchor,
            terms: BTreeMap::new(),
            window,
        }
    }

    /// The single term c * e^{anchor + offset}.
    pub fn monomial(anchor: Vec<Rat>, offset: Vec<Rat>, c: SuperCoeff) -> TruncatedSeries {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(offset, c);
        }
        TruncatedSeries {
            anchor,
            terms,
            window: Window::Exact,
        }
    }

    /// e^{anchor}.
    pub fn exponential(anchor: Vec<Rat>, rank: usize) -> TruncatedSeries {
        TruncatedSeries::monomial(anchor, zero_vec(rank), SuperCoeff::ONE)
    }

    pub fn rank(&self) -> usize {
        self.anchor.len()
    }

    pub fn coeff(&self, offset: &[Rat]) -> SuperCoeff {
        self.terms.get(offset).copied().unwrap_or(SuperCoeff::ZERO)
    }

    fn drop_of(offset: &[Rat]) -> Rat {
        -height_q(offset)
    }

    /// Largest support height above the anchor (0 when none).
    fn support_rise(&self) -> Rat {
        self.terms
            .keys()
            .map(|k| height_q(k))
            .filter(|h| h.is_positive())
            .max()
            .unwrap_or_else(Rat::zero)
    }

    fn insert(&mut self, offset: Vec<Rat>, c: SuperCoeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(offset).or_insert(SuperCoeff::ZERO);
        *entry = entry.add(&c);
        if entry.is_zero() {
            let key: Vec<Rat> = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    fn prune_to_window(&mut self) {
        if let Window::UpTo(d) = self.window.clone() {
            self.terms.retain(|k, _| Self::drop_of(k) <= d);
        }
    }

    /// Move the anchor by an explicit rational lattice vector: the anchor
    /// pairing vector gains pv(shift) and all offsets lose it.
    pub fn shift_anchor(&self, alg: &Algebra, shift: &[Rat]) -> TruncatedSeries {
        let pv = alg.pairing_vector(shift);
        let anchor = add_vec(&self.anchor, &pv);
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (sub_vec(k, shift), *v))
            .collect();
        TruncatedSeries {
            anchor,
            terms,
            window: self.window.clone(),
        }
    }

    /// Rebase onto another anchor whose pairing vector differs by the
    /// pairing vector of a rational lattice offset; anything else is an
    /// anchor mismatch.  When the pairing matrix is singular the smallest
    /// solution of the rebasing system is used (null-direction shifts are
    /// not recoverable from pairings).
    pub fn rebased_to(&self, alg: &Algebra, anchor: &[Rat]) -> Result<TruncatedSeries> {
        if self.anchor == anchor {
            return Ok(self.clone());
        }
        let diff = sub_vec(&self.anchor, anchor);
        // solve A nu = diff for nu
        let a = &alg.supermatrix.a;
        let nu = solve(a, &diff).ok_or(Error::AnchorMismatch)?;
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (add_vec(k, &nu), *v))
            .collect();
        Ok(TruncatedSeries {
            anchor: anchor.to_vec(),
            terms,
            window: self.window.clone(),
        })
    }

    pub fn add(&self, alg: &Algebra, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        let other = other.rebased_to(alg, &self.anchor)?;
        let mut out = TruncatedSeries::zero(self.anchor.clone(), self.window.min(&other.window));
        for (k, v) in &self.terms {
            out.insert(k.clone(), *v);
        }
        for (k, v) in &other.terms {
            out.insert(k.clone(), *v);
        }
        out.prune_to_window();
        Ok(out)
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            anchor: self.anchor.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.neg()))
                .collect(),
            window: self.window.clone(),
        }
    }

    pub fn sub(&self, alg: &Algebra, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.add(alg, &other.neg())
    }

    pub fn scale(&self, c: &SuperCoeff) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.anchor.clone(), self.window.clone());
        for (k, v) in &self.terms {
            out.insert(k.clone(), v.mul(c));
        }
        out
    }

    /// Product; anchors add.  The window accounts for support of either
    /// factor rising above its anchor.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let anchor = add_vec(&self.anchor, &other.anchor);
        let window = self
            .window
            .lowered_by(&other.support_rise())
            .min(&other.window.lowered_by(&self.support_rise()));
        let mut out = TruncatedSeries::zero(anchor, window);
        for (k1, v1) in &self.terms {
            for (k2, v2) in &other.terms {
                let k = add_vec(k1, k2);
                if out.window.covers(&Self::drop_of(&k)) {
                    out.insert(k, v1.mul(v2));
                }
            }
        }
        out
    }

    /// Inverse of a series whose top term sits at offset zero with a unit
    /// coefficient and whose support otherwise lies strictly below, via the
    /// geometric series, certified to `depth`.
    pub fn invert_unit(&self, depth: &Rat) -> Result<TruncatedSeries> {
        let rank = self.rank();
        let lead = self.coeff(&zero_vec(rank));
        let inv = lead
            .unit_inverse()
            .ok_or_else(|| Error::NonUnitLeading(format!("{}+{}eps", lead.c0, lead.c1)))?;
        if self.terms.keys().any(|k| height_q(k).is_positive()) {
            return Err(Error::Precondition(
                "inversion requires the support to lie at or below the anchor".into(),
            ));
        }
        // m = 1 - lead^{-1} * self, supported strictly below zero
        let neg_anchor = neg_vec(&self.anchor);
        let window = self.window.min(&Window::UpTo(depth.clone()));
        let mut m = TruncatedSeries::zero(zero_vec(rank), window.clone());
        for (k, v) in &self.terms {
            if k.iter().all(Rat::is_zero) {
                continue;
            }
            m.insert(k.clone(), v.mul(&inv).neg());
        }
        m.prune_to_window();
        let dmin = m
            .terms
            .keys()
            .map(|k| Self::drop_of(k))
            .min()
            .unwrap_or_else(|| depth.clone() + q(1));
        let steps = if dmin.is_positive() {
            let ratio = depth / &dmin;
            to_i64(&ratio.ceil()).unwrap_or(0).max(0) as usize
        } else {
            0
        };
        // Horner: r = 1 + m (1 + m (1 + ...))
        let mut r = TruncatedSeries::zero(zero_vec(rank), window.clone());
        r.insert(zero_vec(rank), SuperCoeff::ONE);
        for _ in 0..steps {
            let t = m.mul(&r);
            let mut next = TruncatedSeries::zero(zero_vec(rank), window.clone());
            next.insert(zero_vec(rank), SuperCoeff::ONE);
            for (k, v) in &t.terms {
                if next.window.covers(&Self::drop_of(k)) {
                    next.insert(k.clone(), *v);
                }
            }
            r = next;
        }
        let mut out = r.scale(&inv);
        out.anchor = neg_anchor;
        out.window = window;
        out.prune_to_window();
        Ok(out)
    }

    /// Evaluate eps to +-1, collapsing coefficients to integers in c0.
    pub fn eval_eps(&self, eps: i64) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.anchor.clone(), self.window.clone());
        for (k, v) in &self.terms {
            out.insert(k.clone(), SuperCoeff::int(v.eval(eps)));
        }
        out
    }

    /// Sum of all coefficients at eps = 1 (total dimension for a character
    /// with full support inside the window).
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().map(|c| c.eval(1)).sum()
    }

    /// Exponent-wise comparison inside the common certified window.
    pub fn agrees_with(&self, alg: &Algebra, other: &TruncatedSeries) -> Result<bool> {
        let other = other.rebased_to(alg, &self.anchor)?;
        let window = self.window.min(&other.window);
        for (k, v) in &self.terms {
            if window.covers(&Self::drop_of(k)) && other.coeff(k) != *v {
                return Ok(false);
            }
        }
        for (k, v) in &other.terms {
            if window.covers(&Self::drop_of(k)) && self.coeff(k) != *v {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zoo;

    fn x_pow(k: i64) -> Vec<Rat> {
        vec![q(-k)]
    }

    #[test]
    fn geometric_inverse() {
        // (1 - x) * (1 + x + x^2 + ...) = 1 with x = e^{-alpha}
        let mut s = TruncatedSeries::zero(vec![q(0)], Window::Exact);
        s.insert(x_pow(0), SuperCoeff::ONE);
        s.insert(x_pow(1), SuperCoeff::int(-1));
        let inv = s.invert_unit(&q(6)).unwrap();
        for k in 0..=6 {
            assert_eq!(inv.coeff(&x_pow(k)), SuperCoeff::ONE, "power {k}");
        }
        let alg = zoo::sl2();
        let prod = s.mul(&inv);
        let one = TruncatedSeries::exponential(vec![q(0)], 1);
        assert!(prod.agrees_with(&alg, &one).unwrap());
    }

    #[test]
    fn eps_inverse() {
        // (1 + eps x)^{-1} = 1 - eps x + x^2 - eps x^3 ...
        let mut s = TruncatedSeries::zero(vec![q(0)], Window::Exact);
        s.insert(x_pow(0), SuperCoeff::ONE);
        s.insert(x_pow(1), SuperCoeff::EPS);
        let inv = s.invert_unit(&q(2)).unwrap();
        assert_eq!(inv.coeff(&x_pow(0)), SuperCoeff::ONE);
        assert_eq!(inv.coeff(&x_pow(1)), SuperCoeff { c0: 0, c1: -1 });
        assert_eq!(inv.coeff(&x_pow(2)), SuperCoeff::ONE);
    }

    #[test]
    fn non_unit_leading_rejected() {
        let mut s = TruncatedSeries::zero(vec![q(0)], Window::Exact);
        s.insert(x_pow(0), SuperCoeff::int(2));
        assert!(matches!(
            s.invert_unit(&q(3)),
            Err(Error::NonUnitLeading(_))
        ));
    }

    #[test]
    fn anchor_rebasing() {
        let alg = zoo::sl2();
        // e^{lambda} with lambda = 2 omega: pairing (2); as a series around
        // pairing (0) it is the offset alpha
        let s = TruncatedSeries::exponential(vec![q(2)], 1);
        let r = s.rebased_to(&alg, &[q(0)]).unwrap();
        assert_eq!(r.coeff(&[q(1)]), SuperCoeff::ONE);
        // mismatched anchors that no lattice vector explains: the affine
        // pairing matrix is singular, with image spanned by (1, -1)
        let aff = zoo::sl2_affine();
        let s = TruncatedSeries::exponential(vec![q(1), q(0)], 2);
        assert!(matches!(
            s.rebased_to(&aff, &[q(0), q(0)]),
            Err(Error::AnchorMismatch)
        ));
        assert!(s.rebased_to(&aff, &[q(0), q(1)]).is_ok());
    }

    #[test]
    fn window_arithmetic_in_products() {
        // windowed times exact-with-rise lowers the window
        let mut f = TruncatedSeries::zero(vec![q(0)], Window::Exact);
        f.insert(vec![qr(1, 2)], SuperCoeff::ONE);
        f.insert(vec![qr(-1, 2)], SuperCoeff::int(-1));
        let mut s = TruncatedSeries::zero(vec![q(0)], Window::UpTo(q(4)));
        s.insert(x_pow(0), SuperCoeff::ONE);
        let p = s.mul(&f);
        assert_eq!(p.window, Window::UpTo(qr(7, 2)));
    }

    #[test]
    fn eval_and_sum() {
        let mut s = TruncatedSeries::zero(vec![q(0)], Window::Exact);
        s.insert(x_pow(0), SuperCoeff::ONE);
        s.insert(x_pow(1), SuperCoeff::EPS);
        let ch = s.eval_eps(1);
        assert_eq!(ch.coeff(&x_pow(1)), SuperCoeff::ONE);
        let sch = s.eval_eps(-1);
        assert_eq!(sch.coeff(&x_pow(1)), SuperCoeff::int(-1));
        assert_eq!(s.coefficient_sum(), 2);
    }
}
