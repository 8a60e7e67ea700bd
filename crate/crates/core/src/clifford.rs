//! Spinor representations of Clifford algebras for arbitrary signature.
//!
//! Generators are built from the 2x2 blocks U, V, E, T by Kronecker
//! products. For m = 2n the generator pair (e_{2j-1}, e_{2j}) places U or V
//! at factor position j counted from the right, fills the j-1 rightmost
//! slots with T and the rest with E, and multiplies by i for timelike
//! directions. For odd m the first m-1 generators are those of the even
//! signature obtained by dropping e_m, and e_m itself acts through the
//! first component of (i T...T, -i T...T).
//!
//! Resulting sign convention: Phi(e_i)Phi(e_j) + Phi(e_j)Phi(e_i) equals
//! -2 eps_i delta_ij Id, where eps is -1 on the first p directions.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{kronecker, ExactMatrix};
use crate::scalar::{GaussianRational, Rational};

/// Signature (p, q): p timelike directions first, then q spacelike.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Self {
        Signature { p, q }
    }

    pub fn m(&self) -> usize {
        self.p + self.q
    }

    /// Number of Kronecker factors: floor(m/2).
    pub fn n(&self) -> usize {
        self.m() / 2
    }

    pub fn spinor_dim(&self) -> usize {
        1 << self.n()
    }

    /// eps_k for 1-based k: -1 on timelike directions, +1 on spacelike.
    pub fn eps(&self, k: usize) -> i64 {
        assert!(k >= 1 && k <= self.m(), "basis index {k} out of range");
        if k <= self.p {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

fn base_u() -> ExactMatrix {
    ExactMatrix::from_str_rows(&[&["0", "i"], &["i", "0"]])
}

fn base_v() -> ExactMatrix {
    ExactMatrix::from_str_rows(&[&["0", "-1"], &["1", "0"]])
}

fn base_t() -> ExactMatrix {
    ExactMatrix::from_str_rows(&[&["-1", "0"], &["0", "1"]])
}

fn base_e() -> ExactMatrix {
    ExactMatrix::identity(2)
}

/// The m generator matrices of the spinor representation, each of size
/// 2^n x 2^n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliffordRep {
    sig: Signature,
    gens: Vec<ExactMatrix>,
}

impl CliffordRep {
    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn generators(&self) -> &[ExactMatrix] {
        &self.gens
    }

    /// Matrix of e_k, 1-based.
    pub fn generator(&self, k: usize) -> &ExactMatrix {
        assert!(
            k >= 1 && k <= self.gens.len(),
            "generator index {k} out of range"
        );
        &self.gens[k - 1]
    }
}

fn even_generator(sig: Signature, k: usize) -> ExactMatrix {
    let n = sig.n();
    let j = k.div_ceil(2);
    let mid = if k % 2 == 1 { base_u() } else { base_v() };
    let mut m = ExactMatrix::identity(1);
    for _ in 0..n - j {
        m = kronecker(&m, &base_e());
    }
    m = kronecker(&m, &mid);
    for _ in 0..j - 1 {
        m = kronecker(&m, &base_t());
    }
    if sig.eps(k) == -1 {
        m = m.scale(&GaussianRational::i());
    }
    m
}

fn last_odd_generator(sig: Signature) -> ExactMatrix {
    let mut m = ExactMatrix::identity(1);
    for _ in 0..sig.n() {
        m = kronecker(&m, &base_t());
    }
    m = m.scale(&GaussianRational::i());
    if sig.eps(sig.m()) == -1 {
        m = m.scale(&GaussianRational::i());
    }
    m
}

pub fn build_rep(sig: Signature) -> Result<CliffordRep> {
    let m = sig.m();
    if m == 0 {
        return Err(Error::InvalidSignature(
            "need at least one basis direction".into(),
        ));
    }
    let gens = if m.is_multiple_of(2) {
        (1..=m).map(|k| even_generator(sig, k)).collect()
    } else if m == 1 {
        vec![last_odd_generator(sig)]
    } else {
        // Drop e_m; the remaining directions form an even signature.
        let base = if sig.q >= 1 {
            Signature::new(sig.p, sig.q - 1)
        } else {
            Signature::new(sig.p - 1, 0)
        };
        let mut gens = build_rep(base)?.gens;
        gens.push(last_odd_generator(sig));
        gens
    };
    Ok(CliffordRep { sig, gens })
}

/// Spinor with exact coordinates over the tensor-product basis
/// u(nu_n, ..., nu_1). The factor nu_k contributes bit 0 for +1 and bit 1
/// for -1, with the leftmost factor u(nu_n) as the most significant bit,
/// so u(1,...,1) is index 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinorVector {
    pub coords: Vec<GaussianRational>,
}

impl SpinorVector {
    pub fn new(coords: Vec<GaussianRational>) -> Self {
        SpinorVector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        SpinorVector {
            coords: vec![GaussianRational::zero(); dim],
        }
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim);
        let mut v = SpinorVector::zero(dim);
        v.coords[index] = GaussianRational::one();
        v
    }

    /// Index of u(nu_n, ..., nu_1); `nus` is given leftmost factor first.
    pub fn basis_index(nus: &[i64]) -> usize {
        nus.iter().fold(0, |acc, &nu| {
            assert!(nu == 1 || nu == -1, "factors must be +1 or -1");
            (acc << 1) | usize::from(nu == -1)
        })
    }

    pub fn from_nus(nus: &[i64]) -> Self {
        SpinorVector::basis(1 << nus.len(), Self::basis_index(nus))
    }

    /// u(1, ..., 1), the first basis spinor.
    pub fn u_plus(n: usize) -> Self {
        SpinorVector::basis(1 << n, 0)
    }

    /// u(-1, ..., -1), the last basis spinor.
    pub fn u_minus(n: usize) -> Self {
        SpinorVector::basis(1 << n, (1 << n) - 1)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(GaussianRational::is_zero)
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        SpinorVector {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim());
        SpinorVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// True when `self == s * rhs` for some nonzero scalar s.
    pub fn is_multiple_of(&self, rhs: &Self) -> bool {
        if self.dim() != rhs.dim() || self.is_zero() != rhs.is_zero() {
            return false;
        }
        let Some(k) = rhs.coords.iter().position(|c| !c.is_zero()) else {
            return self.is_zero();
        };
        if self.coords[k].is_zero() {
            return false;
        }
        let s = &self.coords[k] / &rhs.coords[k];
        self.coords
            .iter()
            .zip(&rhs.coords)
            .all(|(a, b)| *a == b * &s)
    }
}

/// Action of the vector sum(x_k e_k) on a spinor.
pub fn clifford_multiply(
    rep: &CliffordRep,
    x: &[Rational],
    v: &SpinorVector,
) -> Result<SpinorVector> {
    let m = rep.sig.m();
    if x.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "coefficient vector has length {}, signature needs {m}",
            x.len()
        )));
    }
    if v.dim() != rep.sig.spinor_dim() {
        return Err(Error::DimensionMismatch(format!(
            "spinor has dimension {}, representation needs {}",
            v.dim(),
            rep.sig.spinor_dim()
        )));
    }
    let mut out = SpinorVector::zero(v.dim());
    for (k, coeff) in x.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let image = rep.gens[k].mul_vec(&v.coords);
        let s = GaussianRational::real(coeff.clone());
        for (o, c) in out.coords.iter_mut().zip(image) {
            let term = &c * &s;
            *o += &term;
        }
    }
    Ok(out)
}

/// Infinitesimal action of the Spin^c scalar part: v maps to i t v.
pub fn spinc_scalar_action(t: &Rational, v: &SpinorVector) -> SpinorVector {
    v.scale(&GaussianRational::imaginary(t.clone()))
}

/// The invariant pairing <v, w> = i^{p(p-1)/2} (e_1 ... e_p v, w), where
/// (z, z') sums z_k conj(z'_k). Conjugate linear in the second slot.
pub fn hermitian_form(rep: &CliffordRep, v: &SpinorVector, w: &SpinorVector) -> GaussianRational {
    let dim = rep.sig.spinor_dim();
    assert_eq!(v.dim(), dim, "spinor dimension mismatch");
    assert_eq!(w.dim(), dim, "spinor dimension mismatch");
    let p = rep.sig.p;
    let mut prefix = ExactMatrix::identity(dim);
    for k in 1..=p {
        prefix = prefix.mul(rep.generator(k));
    }
    let pv = prefix.mul_vec(&v.coords);
    let mut acc = GaussianRational::zero();
    for (a, b) in pv.iter().zip(&w.coords) {
        let term = a * &b.conj();
        acc += &term;
    }
    &GaussianRational::i_pow(p * p.saturating_sub(1) / 2) * &acc
}
