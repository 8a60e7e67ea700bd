//! Elements of the pseudo-orthogonal Lie algebra so(p,q).
//!
//! A matrix A lies in so(p,q) when A^T G + G A = 0 for the diagonal metric
//! G = diag(eps_1, ..., eps_m). The basis element E_ij (i < j) is
//! -eps_j D_ij + eps_i D_ji with D_ij the matrix unit; E_ij spans the
//! rotation or boost in the (i,j) plane and satisfies E_ji = -E_ij.

use num_traits::Zero;

use crate::clifford::Signature;
use crate::error::{Error, Result};
use crate::matrix::{commutator, ExactMatrix};
use crate::scalar::{GaussianRational, Rational};

/// Diagonal metric matrix diag(eps_1, ..., eps_m).
pub fn metric_matrix(sig: Signature) -> ExactMatrix {
    let m = sig.m();
    let mut g = ExactMatrix::zeros(m, m);
    for k in 1..=m {
        g[(k - 1, k - 1)] = GaussianRational::from_int(sig.eps(k));
    }
    g
}

/// A real m x m matrix verified to be metric-antisymmetric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SOElement {
    sig: Signature,
    mat: ExactMatrix,
}

impl SOElement {
    pub fn new(sig: Signature, mat: ExactMatrix) -> Result<Self> {
        let m = sig.m();
        if mat.rows() != m || mat.cols() != m {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{}, signature {sig} needs {m}x{m}",
                mat.rows(),
                mat.cols()
            )));
        }
        for i in 0..m {
            for j in 0..m {
                if !mat[(i, j)].is_real() {
                    return Err(Error::InvalidInput(format!(
                        "entry ({i},{j}) = {} is not real",
                        mat[(i, j)]
                    )));
                }
            }
        }
        let g = metric_matrix(sig);
        if !mat.transpose().mul(&g).add(&g.mul(&mat)).is_zero() {
            return Err(Error::InvalidInput(format!(
                "matrix is not antisymmetric for the metric of {sig}"
            )));
        }
        Ok(SOElement { sig, mat })
    }

    pub fn zero(sig: Signature) -> Self {
        SOElement {
            sig,
            mat: ExactMatrix::zeros(sig.m(), sig.m()),
        }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.mat
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        SOElement {
            sig: self.sig,
            mat: self.mat.scale(&GaussianRational::real(s.clone())),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        SOElement {
            sig: self.sig,
            mat: self.mat.add(&rhs.mat),
        }
    }

    pub fn neg(&self) -> Self {
        SOElement {
            sig: self.sig,
            mat: self.mat.neg(),
        }
    }

    /// Lie bracket [self, rhs]; the result is again metric-antisymmetric.
    pub fn bracket(&self, rhs: &Self) -> Self {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        SOElement {
            sig: self.sig,
            mat: commutator(&self.mat, &rhs.mat),
        }
    }
}

/// E_ij for 1-based i != j.
pub fn so_element_e(sig: Signature, i: usize, j: usize) -> SOElement {
    let m = sig.m();
    assert!(
        i >= 1 && i <= m && j >= 1 && j <= m && i != j,
        "bad plane ({i},{j})"
    );
    let mut mat = ExactMatrix::zeros(m, m);
    mat[(i - 1, j - 1)] = GaussianRational::from_int(-sig.eps(j));
    mat[(j - 1, i - 1)] = GaussianRational::from_int(sig.eps(i));
    SOElement { sig, mat }
}

/// The m(m-1)/2 basis elements E_ij, i < j, in lexicographic order.
pub fn so_basis(sig: Signature) -> Vec<SOElement> {
    let m = sig.m();
    let mut out = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for i in 1..=m {
        for j in i + 1..=m {
            out.push(so_element_e(sig, i, j));
        }
    }
    out
}

/// Generator (B, t) of a candidate Spin^c holonomy algebra: B acts through
/// the spin representation and t through multiplication by i t.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinCGenerator {
    pub b: SOElement,
    pub t: Rational,
}

impl SpinCGenerator {
    pub fn new(b: SOElement, t: Rational) -> Self {
        SpinCGenerator { b, t }
    }

    /// Generator with no scalar part.
    pub fn traceless(b: SOElement) -> Self {
        SpinCGenerator {
            b,
            t: Rational::zero(),
        }
    }
}
