//! Transfer from so(p,q) to the spin representation and computation of
//! invariant-spinor spaces.
//!
//! The two-form e_i e_j acts on spinors as Phi(e_i)Phi(e_j)/2, so an
//! element B = sum b_ij E_ij of so(p,q) acts as
//! rho(B) = sum_{i<j} b_ij Phi(e_i)Phi(e_j)/2. A Spin^c generator (B, t)
//! adds the scalar i t / 2, and its invariant spinors are the kernel of
//! rho(B) + (i t / 2) Id. The joint kernel over a generator list is built
//! one operator at a time, restricting the working basis at each step.

use num_traits::Zero;

use crate::clifford::{CliffordRep, Signature, SpinorVector};
use crate::error::{Error, Result};
use crate::matrix::{canonical_row_span, ExactMatrix};
use crate::scalar::{rat, GaussianRational, Rational};
use crate::so::{so_element_e, SOElement, SpinCGenerator};

/// Coefficients of an so(p,q) matrix over the basis E_ij, i < j.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivectorDecomposition {
    pub sig: Signature,
    /// Nonzero coefficients (i, j, b_ij) with i < j, 1-based, in
    /// lexicographic order.
    pub coeffs: Vec<(usize, usize, Rational)>,
}

impl BivectorDecomposition {
    /// Reassemble the matrix; inverse of [`decompose_so`].
    pub fn assemble(&self) -> SOElement {
        let mut acc = SOElement::zero(self.sig);
        for (i, j, c) in &self.coeffs {
            acc = acc.add(&so_element_e(self.sig, *i, *j).scale(c));
        }
        acc
    }
}

/// Express a validated element as sum b_ij E_ij. Since E_ij has the entry
/// -eps_j at (i,j), the coefficient is b_ij = -eps_j mat[i,j].
pub fn decompose_element(el: &SOElement) -> BivectorDecomposition {
    let sig = el.signature();
    let m = sig.m();
    let mut coeffs = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            let entry = &el.matrix()[(i - 1, j - 1)];
            if entry.is_zero() {
                continue;
            }
            let b = &entry.re * &rat(-sig.eps(j), 1);
            coeffs.push((i, j, b));
        }
    }
    BivectorDecomposition { sig, coeffs }
}

/// Validate a raw matrix as an element of so(p,q) and decompose it.
pub fn decompose_so(sig: Signature, mat: &ExactMatrix) -> Result<BivectorDecomposition> {
    let el = SOElement::new(sig, mat.clone())?;
    Ok(decompose_element(&el))
}

/// Image of B under the spin representation.
pub fn spin_transfer(rep: &CliffordRep, b: &SOElement) -> ExactMatrix {
    assert_eq!(rep.signature(), b.signature(), "signature mismatch");
    let dim = rep.signature().spinor_dim();
    let mut out = ExactMatrix::zeros(dim, dim);
    // Each Phi is a scaled permutation matrix, so the product of two has
    // one entry per row; accumulate those entries without materializing
    // the product.
    for (i, j, c) in decompose_element(b).coeffs {
        let weight = GaussianRational::real(&c / &rat(2, 1));
        let phi_i = rep.generator(i);
        let phi_j = rep.generator(j);
        for r in 0..dim {
            for k in 0..dim {
                let a = &phi_i[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for s in 0..dim {
                    let b = &phi_j[(k, s)];
                    if b.is_zero() {
                        continue;
                    }
                    let term = &(a * b) * &weight;
                    out[(r, s)] += &term;
                }
            }
        }
    }
    out
}

/// The operator whose kernel is the invariant space of one generator:
/// rho(B) + (i t / 2) Id.
pub fn spinc_operator(rep: &CliffordRep, gen: &SpinCGenerator) -> ExactMatrix {
    let mut out = spin_transfer(rep, &gen.b);
    if !gen.t.is_zero() {
        let dim = rep.signature().spinor_dim();
        let shift = GaussianRational::imaginary(&gen.t / &rat(2, 1));
        for k in 0..dim {
            out[(k, k)] += &shift;
        }
    }
    out
}

/// Joint kernel of the operators of a generator list, with a canonical
/// reduced echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantSpace {
    pub basis: Vec<SpinorVector>,
}

impl InvariantSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinate rows of the basis.
    pub fn rows(&self) -> Vec<Vec<GaussianRational>> {
        self.basis.iter().map(|v| v.coords.clone()).collect()
    }

    /// True when the space equals the span of the given vectors.
    pub fn equals_span(&self, vectors: &[SpinorVector]) -> bool {
        let other: Vec<Vec<GaussianRational>> = vectors.iter().map(|v| v.coords.clone()).collect();
        canonical_row_span(&self.rows()) == canonical_row_span(&other)
    }
}

/// Invariant spinors of a generator list. An empty list leaves the whole
/// spinor space invariant. The returned basis is certified by applying
/// every operator to every basis vector.
pub fn invariant_space(rep: &CliffordRep, gens: &[SpinCGenerator]) -> Result<InvariantSpace> {
    let sig = rep.signature();
    let dim = sig.spinor_dim();
    for g in gens {
        if g.b.signature() != sig {
            return Err(Error::DimensionMismatch(format!(
                "generator over {} paired with representation over {sig}",
                g.b.signature()
            )));
        }
    }
    let mut basis: Vec<Vec<GaussianRational>> = (0..dim)
        .map(|k| SpinorVector::basis(dim, k).coords)
        .collect();
    for g in gens {
        if basis.is_empty() {
            break;
        }
        let op = spinc_operator(rep, g);
        let images: Vec<Vec<GaussianRational>> = basis.iter().map(|v| op.mul_vec(v)).collect();
        let kernel = ExactMatrix::from_columns(&images).kernel_basis();
        basis = kernel
            .iter()
            .map(|coeffs| {
                let mut v = vec![GaussianRational::zero(); dim];
                for (c, b) in coeffs.iter().zip(&basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (vk, bk) in v.iter_mut().zip(b) {
                        let term = c * bk;
                        *vk += &term;
                    }
                }
                v
            })
            .collect();
    }
    let canon = canonical_row_span(&basis);
    for g in gens {
        let op = spinc_operator(rep, g);
        for v in &canon {
            assert!(
                op.mul_vec(v).iter().all(GaussianRational::is_zero),
                "kernel certificate failed"
            );
        }
    }
    Ok(InvariantSpace {
        basis: canon.into_iter().map(SpinorVector::new).collect(),
    })
}
