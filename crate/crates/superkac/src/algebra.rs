//! Assembled algebra data: the base set, principal roots with coroots, the
//! matrix B, type classification, the invariant bilinear form, and (for
//! affine type) the null root, dual Coxeter number, and imaginary root
//! multiplicities.

use crate::cartan::{
    classify, enumerate_bases, pair, symmetrize, BaseSet, CartanSupermatrix, Growth, Isotropy,
    Parity, Symmetrization, TypeTag,
};
use crate::error::{Error, Result};
use crate::rat::*;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// An even root together with its coroot (both in original-base coordinates).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalRoot {
    pub coords: Vec<i64>,
    pub coroot: Vec<Rat>,
}

/// Multiplicity provider for imaginary roots j*delta.
#[derive(Debug, Clone)]
pub enum ImaginaryMults {
    /// No imaginary roots (finite type).
    None,
    /// Every j*delta has multiplicity (even, odd) = (rank, 0); valid for
    /// untwisted affinizations.
    UntwistedRank(usize),
    /// User-supplied table: entry j-1 gives the multiplicity of j*delta,
    /// repeated periodically.
    Table(Vec<(u32, u32)>),
    /// Affine, but no trustworthy default (twisted case without a table).
    Unavailable(String),
}

impl ImaginaryMults {
    pub fn mult(&self, j: i64) -> Result<(u32, u32)> {
        let j = j.unsigned_abs() as usize;
        assert!(j > 0, "imaginary multiplicity of 0*delta requested");
        match self {
            ImaginaryMults::None => Ok((0, 0)),
            ImaginaryMults::UntwistedRank(r) => Ok((*r as u32, 0)),
            ImaginaryMults::Table(t) => Ok(t[(j - 1) % t.len()]),
            ImaginaryMults::Unavailable(why) => Err(Error::MissingImaginaryMults(why.clone())),
        }
    }
}

/// Affine structure: the primitive positive null root and derived data.
#[derive(Debug, Clone)]
pub struct AffineData {
    /// Coordinates of delta over the original base.
    pub delta: Vec<i64>,
    /// h^vee = (rho | delta).
    pub dual_coxeter: Rat,
    /// Index of the affine node (deleting it leaves the finite part).
    pub affine_node: usize,
    /// Coordinates of the primitive null root of B expressed over the
    /// original base (a positive multiple of delta).
    pub delta_b: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct Algebra {
    pub supermatrix: CartanSupermatrix,
    pub bases: BaseSet,
    /// Principal roots, sorted by height then lexicographically.
    pub principal: Vec<PrincipalRoot>,
    /// b_ij = beta_j(beta_i^vee) over the principal roots.
    pub b_matrix: Vec<Vec<Rat>>,
    pub type_tag: TypeTag,
    pub symmetrization: Symmetrization,
    pub affine: Option<AffineData>,
    pub imaginary: ImaginaryMults,
    pub name: Option<String>,
}

/// Construction options.
#[derive(Debug, Clone)]
pub struct Options {
    /// Bound on the odd-reflection closure (default 10_000; truncation is
    /// reported, never silent).
    pub base_bound: usize,
    pub affine_node: usize,
    pub imaginary_table: Option<Vec<(u32, u32)>>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            base_bound: 10_000,
            affine_node: 0,
            imaginary_table: None,
        }
    }
}

fn big_to_i64(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter()
        .map(|x| {
            i64::try_from(x.clone()).map_err(|_| Error::Internal("coordinate overflow".into()))
        })
        .collect()
}

impl Algebra {
    pub fn new(sm: CartanSupermatrix, opts: Options) -> Result<Algebra> {
        let bases = enumerate_bases(&sm, opts.base_bound)?;
        let principal = principal_roots(&sm, &bases);
        let b_matrix = matrix_b(&sm, &principal);
        let type_tag = classify(&sm, &b_matrix)?;
        let symmetrization = symmetrize(&sm)?;

        let affine = if type_tag.growth() == Some(Growth::Aff) {
            affine_data(
                &sm,
                &principal,
                &b_matrix,
                &symmetrization,
                opts.affine_node,
            )?
        } else {
            None
        };

        let imaginary = match (&opts.imaginary_table, type_tag.growth(), &affine) {
            (Some(t), _, _) => ImaginaryMults::Table(t.clone()),
            (None, Some(Growth::Fin), _) => ImaginaryMults::None,
            (None, Some(Growth::Aff), Some(aff)) => {
                if aff.delta_b == aff.delta {
                    ImaginaryMults::UntwistedRank(sm.size() - 1)
                } else {
                    ImaginaryMults::Unavailable(
                        "twisted affine case: supply an imaginary multiplicity table".into(),
                    )
                }
            }
            (None, Some(Growth::Aff), None) => ImaginaryMults::Unavailable(
                "affine type without a one-dimensional positive null space".into(),
            ),
            (None, _, _) => ImaginaryMults::Unavailable("growth is not FIN or AFF".into()),
        };

        Ok(Algebra {
            supermatrix: sm,
            bases,
            principal,
            b_matrix,
            type_tag,
            symmetrization,
            affine,
            imaginary,
            name: None,
        })
    }

    pub fn named(mut self, name: &str) -> Algebra {
        self.name = Some(name.to_string());
        self
    }

    pub fn rank(&self) -> usize {
        self.supermatrix.size()
    }

    pub fn growth(&self) -> Option<Growth> {
        self.type_tag.growth()
    }

    pub fn is_affine(&self) -> bool {
        self.growth() == Some(Growth::Aff)
    }

    pub fn affine(&self) -> Result<&AffineData> {
        self.affine.as_ref().ok_or_else(|| Error::NotAffine {
            found: self
                .growth()
                .map(|g| g.to_string())
                .unwrap_or_else(|| "mixed".into()),
        })
    }

    /// (mu | nu) for rational root-lattice vectors, via the Gram form.
    pub fn form(&self, mu: &[Rat], nu: &[Rat]) -> Rat {
        let g = &self.symmetrization.gram;
        let mut acc = Rat::zero();
        for (i, mi) in mu.iter().enumerate() {
            if mi.is_zero() {
                continue;
            }
            let mut row = Rat::zero();
            for (j, nj) in nu.iter().enumerate() {
                if !nj.is_zero() {
                    row += &g[i][j] * nj;
                }
            }
            acc += mi * row;
        }
        acc
    }

    /// ||mu||^2 over the root lattice.
    pub fn norm2(&self, mu: &[Rat]) -> Rat {
        self.form(mu, mu)
    }

    pub fn pair(&self, coroot: &[Rat], root: &[i64]) -> Rat {
        pair(&self.supermatrix, coroot, root)
    }

    /// The pairing vector (alpha(alpha_1^vee), ..., alpha(alpha_l^vee)) of a
    /// root-lattice vector, i.e. its values on the original simple coroots.
    pub fn pairing_vector(&self, coords: &[Rat]) -> Vec<Rat> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                let mut acc = Rat::zero();
                for (j, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        acc += &self.supermatrix.a[i][j] * c;
                    }
                }
                acc
            })
            .collect()
    }

    /// Parity of an integer root-lattice vector.
    pub fn parity_of(&self, coords: &[i64]) -> Parity {
        Parity::of_vector(coords, &self.supermatrix.parity)
    }

    pub fn isotropy(&self) -> Isotropy {
        self.type_tag.isotropy
    }
}

/// All even roots alpha with alpha or alpha/2 a simple root of some base;
/// the coroot of a doubled root alpha = 2 beta is beta^vee / 2.
pub fn principal_roots(_sm: &CartanSupermatrix, bases: &BaseSet) -> Vec<PrincipalRoot> {
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut out: Vec<PrincipalRoot> = Vec::new();
    for base in &bases.bases {
        for (i, root) in base.simple_roots.iter().enumerate() {
            match base.parity[i] {
                Parity::Even => {
                    if seen.insert(root.clone()) {
                        out.push(PrincipalRoot {
                            coords: root.clone(),
                            coroot: base.coroots[i].clone(),
                        });
                    }
                }
                Parity::Odd => {
                    // odd non-isotropic beta contributes 2*beta
                    if !base.matrix[i][i].is_zero() {
                        let doubled: Vec<i64> = root.iter().map(|x| 2 * x).collect();
                        if seen.insert(doubled.clone()) {
                            out.push(PrincipalRoot {
                                coords: doubled,
                                coroot: scale_vec(&qr(1, 2), &base.coroots[i]),
                            });
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| (height_i(&a.coords), &a.coords).cmp(&(height_i(&b.coords), &b.coords)));
    out
}

/// The Cartan matrix of the principal roots, b_ij = beta_j(beta_i^vee).
pub fn matrix_b(sm: &CartanSupermatrix, principal: &[PrincipalRoot]) -> Vec<Vec<Rat>> {
    principal
        .iter()
        .map(|bi| {
            principal
                .iter()
                .map(|bj| pair(sm, &bi.coroot, &bj.coords))
                .collect()
        })
        .collect()
}

fn affine_data(
    sm: &CartanSupermatrix,
    principal: &[PrincipalRoot],
    b_matrix: &[Vec<Rat>],
    sym: &Symmetrization,
    affine_node: usize,
) -> Result<Option<AffineData>> {
    // delta: primitive positive integer null vector of A (as A c = 0).
    let ker = kernel(&sm.a);
    if ker.len() != 1 {
        return Ok(None);
    }
    let prim = primitive_integer(&ker[0]);
    let mut delta = big_to_i64(&prim)?;
    if delta.iter().all(|&x| x <= 0) {
        delta.iter_mut().for_each(|x| *x = -*x);
    }
    if delta.iter().any(|&x| x <= 0) {
        return Ok(None);
    }
    // rho pairings: 1 at non-isotropic simple roots, 0 at isotropic ones
    let rho: Vec<Rat> = (0..sm.size())
        .map(|i| {
            if sm.a[i][i].is_zero() {
                Rat::zero()
            } else {
                Rat::one()
            }
        })
        .collect();
    // (rho | delta) = sum_i delta_i d_i rho(alpha_i^vee)
    let mut h = Rat::zero();
    for i in 0..sm.size() {
        h += q(delta[i]) * &sym.d[i] * &rho[i];
    }
    // primitive null vector of B, pushed to original coordinates
    let ker_b = kernel(b_matrix);
    if ker_b.len() != 1 {
        return Ok(None);
    }
    let prim_b = primitive_integer(&ker_b[0]);
    let marks = big_to_i64(&prim_b)?;
    let sign = if marks.iter().all(|&x| x <= 0) { -1 } else { 1 };
    let n = sm.size();
    let mut delta_b = vec![0i64; n];
    for (k, pr) in principal.iter().enumerate() {
        for (c, x) in delta_b.iter_mut().zip(&pr.coords) {
            *c += sign * marks[k] * x;
        }
    }
    if delta_b.iter().any(|&x| x < 0) {
        return Err(Error::Internal("null root of B is not positive".into()));
    }
    if affine_node >= n {
        return Err(Error::Input(format!(
            "affine node {affine_node} out of range for rank {n}"
        )));
    }
    Ok(Some(AffineData {
        delta,
        dual_coxeter: h,
        affine_node,
        delta_b,
    }))
}

/// Standard examples used throughout the tests and the bundled data files.
pub mod zoo {
    use super::*;

    fn build(a: &[&[i64]], p: &[u8], name: &str) -> Algebra {
        Algebra::new(CartanSupermatrix::from_ints(a, p), Options::default())
            .expect("zoo algebra")
            .named(name)
    }

    /// sl(2): A = (2), even.
    pub fn sl2() -> Algebra {
        build(&[&[2]], &[0], "sl2")
    }

    /// osp(1|2): A = (2), odd.
    pub fn osp12() -> Algebra {
        build(&[&[2]], &[1], "osp(1|2)")
    }

    /// gl(1|1): A = (0), odd.
    pub fn gl11() -> Algebra {
        build(&[&[0]], &[1], "gl(1|1)")
    }

    /// sl(2|1) with both simple roots isotropic.
    pub fn sl21() -> Algebra {
        build(&[&[0, 1], &[1, 0]], &[1, 1], "sl(2|1)")
    }

    /// sp(4) = C2.
    pub fn sp4() -> Algebra {
        build(&[&[2, -1], &[-2, 2]], &[0, 0], "sp4")
    }

    /// osp(1|4): simple roots eps1 - eps2 (even), eps2 (odd non-isotropic).
    pub fn osp14() -> Algebra {
        build(&[&[2, -1], &[-2, 2]], &[0, 1], "osp(1|4)")
    }

    /// osp(9|2) in the distinguished base
    /// {delta1 - eps1, eps1 - eps2, eps2 - eps3, eps3 - eps4, eps4}.
    pub fn osp9_2() -> Algebra {
        build(
            &[
                &[0, 1, 0, 0, 0],
                &[-1, 2, -1, 0, 0],
                &[0, -1, 2, -1, 0],
                &[0, 0, -1, 2, -1],
                &[0, 0, 0, -2, 2],
            ],
            &[1, 0, 0, 0, 0],
            "osp(9|2)",
        )
    }

    /// Twisted affine osp(2|4)^(2) with base
    /// {delta - eps1, eps1 - eps2, eps2}, all attached to the C2^(1)
    /// principal system.
    pub fn osp2_4_twisted() -> Algebra {
        build(
            &[&[2, -2, 0], &[-1, 2, -1], &[0, -2, 2]],
            &[1, 0, 1],
            "osp(2|4)^(2)",
        )
    }

    /// Affine sl(2) = A1^(1); node 0 is the affine node.
    pub fn sl2_affine() -> Algebra {
        build(&[&[2, -2], &[-2, 2]], &[0, 0], "A1^(1)")
    }

    /// Untwisted affine osp(1|2): base {delta - 2 beta, beta}.
    pub fn osp12_affine() -> Algebra {
        build(&[&[2, -1], &[-4, 2]], &[0, 1], "osp(1|2)^(1)")
    }

    /// Untwisted affine osp(1|4): base {delta - 2 eps1, eps1 - eps2, eps2}.
    pub fn osp14_affine() -> Algebra {
        build(
            &[&[2, -1, 0], &[-2, 2, -1], &[0, -2, 2]],
            &[0, 0, 1],
            "osp(1|4)^(1)",
        )
    }
}
