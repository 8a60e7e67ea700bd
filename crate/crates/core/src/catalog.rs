//! Generator lists for the candidate holonomy algebras: the classical
//! families su, u, sp embedded into so(p,q) through real coordinate
//! pairs, and the exceptional families as calibration-form stabilizers.
//!
//! Complex coordinates map to real pairs z_k = x_{2k-1} + i x_{2k}, so a
//! complex entry a+bi becomes the 2x2 block [[a,-b],[b,a]]. Timelike
//! complex directions expand to two timelike real directions, keeping
//! the sorted metric convention.

use crate::clifford::Signature;
use crate::error::{Error, Result};
use crate::forms::{stabilizer_of_form, FormTable};
use crate::matrix::ExactMatrix;
use crate::scalar::{rat, GaussianRational};
use crate::so::{so_basis, SOElement, SpinCGenerator};

fn matrix_unit(m: usize, k: usize, l: usize, value: GaussianRational) -> ExactMatrix {
    let mut out = ExactMatrix::zeros(m, m);
    out[(k - 1, l - 1)] = value;
    out
}

/// eps vector of the hermitian form diag(-1 x p, +1 x q).
fn form_eps(p: usize, k: usize) -> i64 {
    if k <= p {
        -1
    } else {
        1
    }
}

/// Basis of the antihermitian matrices for diag(-1 x p, +1 x q): the
/// real off-diagonal family, the imaginary symmetric family, then the
/// imaginary diagonal. Dimension (p+q)^2.
fn unitary_basis(p: usize, q: usize) -> Vec<ExactMatrix> {
    let m = p + q;
    let mut out = Vec::with_capacity(m * m);
    for k in 1..=m {
        for l in k + 1..=m {
            let s = GaussianRational::from_int(-form_eps(p, k) * form_eps(p, l));
            out.push(matrix_unit(m, k, l, GaussianRational::one()).add(&matrix_unit(m, l, k, s)));
        }
    }
    for k in 1..=m {
        for l in k + 1..=m {
            let s = GaussianRational::from_int(form_eps(p, k) * form_eps(p, l));
            out.push(
                matrix_unit(m, k, l, GaussianRational::one())
                    .add(&matrix_unit(m, l, k, s))
                    .scale(&GaussianRational::i()),
            );
        }
    }
    for k in 1..=m {
        out.push(matrix_unit(m, k, k, GaussianRational::i()));
    }
    out
}

/// Traceless part of [`unitary_basis`]: the diagonal family is replaced
/// by the consecutive differences i(D_kk - D_{k+1,k+1}).
fn special_unitary_basis(p: usize, q: usize) -> Vec<ExactMatrix> {
    let m = p + q;
    let mut out = unitary_basis(p, q);
    out.truncate(m * m - m);
    for k in 1..m {
        out.push(
            matrix_unit(m, k, k, GaussianRational::i()).sub(&matrix_unit(
                m,
                k + 1,
                k + 1,
                GaussianRational::i(),
            )),
        );
    }
    out
}

fn check_antihermitian(p: usize, q: usize, mat: &ExactMatrix) -> Result<()> {
    let m = p + q;
    if mat.rows() != m || mat.cols() != m {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{}, form needs {m}x{m}",
            mat.rows(),
            mat.cols()
        )));
    }
    for a in 1..=m {
        for b in 1..=m {
            let lhs = mat[(b - 1, a - 1)].conj() * GaussianRational::from_int(form_eps(p, a));
            let rhs = &mat[(a - 1, b - 1)] * &GaussianRational::from_int(form_eps(p, b));
            if !(lhs + rhs).is_zero() {
                return Err(Error::InvalidInput(format!(
                    "matrix is not antihermitian for form signature ({p},{q}) at ({a},{b})"
                )));
            }
        }
    }
    Ok(())
}

/// Realify antihermitian complex matrices into so(2p, 2q) by expanding
/// every complex coordinate into a real pair.
pub fn embed_complex_unitary(p: usize, q: usize, gens: &[ExactMatrix]) -> Result<Vec<SOElement>> {
    let m = p + q;
    let ambient = Signature::new(2 * p, 2 * q);
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        check_antihermitian(p, q, g)?;
        let mut real = ExactMatrix::zeros(2 * m, 2 * m);
        for k in 0..m {
            for l in 0..m {
                let c = &g[(k, l)];
                if c.is_zero() {
                    continue;
                }
                real[(2 * k, 2 * l)] = GaussianRational::real(c.re.clone());
                real[(2 * k, 2 * l + 1)] = GaussianRational::real(-c.im.clone());
                real[(2 * k + 1, 2 * l)] = GaussianRational::real(c.im.clone());
                real[(2 * k + 1, 2 * l + 1)] = GaussianRational::real(c.re.clone());
            }
        }
        out.push(SOElement::new(ambient, real)?);
    }
    Ok(out)
}

/// Image of a basis of su(p', q'), each with t = 0, plus the Spin^c
/// central generator: the image of i D_11 paired with its trace t = 1.
pub fn embed_unitary(p: usize, q: usize) -> Result<(Vec<SOElement>, SpinCGenerator)> {
    if p + q == 0 {
        return Err(Error::InvalidParameter(
            "unitary family needs p+q >= 1".into(),
        ));
    }
    let su = embed_complex_unitary(p, q, &special_unitary_basis(p, q))?;
    let central_complex = matrix_unit(p + q, 1, 1, GaussianRational::i());
    let central = embed_complex_unitary(p, q, &[central_complex])?.remove(0);
    Ok((su, SpinCGenerator::new(central, rat(1, 1))))
}

/// Quaternionic antihermitian basis for diag(-1 x p, +1 x q), realized
/// as pairs (A, B) with X = A + B j: A runs over the antihermitian
/// basis, B over the matrices with G'B complex symmetric.
fn symplectic_basis(p: usize, q: usize) -> Vec<(ExactMatrix, ExactMatrix)> {
    let m = p + q;
    let zero = ExactMatrix::zeros(m, m);
    let mut out: Vec<(ExactMatrix, ExactMatrix)> = unitary_basis(p, q)
        .into_iter()
        .map(|a| (a, zero.clone()))
        .collect();
    let mut push_b = |b: ExactMatrix| out.push((zero.clone(), b));
    for k in 1..=m {
        for l in k + 1..=m {
            let s = GaussianRational::from_int(form_eps(p, k) * form_eps(p, l));
            let b = matrix_unit(m, k, l, GaussianRational::one()).add(&matrix_unit(m, l, k, s));
            push_b(b.scale(&GaussianRational::i()));
            push_b(b);
        }
    }
    for k in 1..=m {
        push_b(matrix_unit(m, k, k, GaussianRational::one()));
        push_b(matrix_unit(m, k, k, GaussianRational::i()));
    }
    out
}

/// X = A + B j maps to the complex matrix [[A, B], [-conj B, conj A]],
/// with the doubled coordinates reordered timelike-first.
fn quaternion_to_complex(p: usize, q: usize, a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let m = p + q;
    // Position of quaternionic coordinate k (1-based) and its j-partner
    // in the sorted doubled coordinate list.
    let slot = |k: usize, partner: bool| -> usize {
        let base = if k <= p {
            k + if partner { p } else { 0 }
        } else {
            2 * p + (k - p) + if partner { q } else { 0 }
        };
        base - 1
    };
    let mut out = ExactMatrix::zeros(2 * m, 2 * m);
    for k in 1..=m {
        for l in 1..=m {
            out[(slot(k, false), slot(l, false))] = a[(k - 1, l - 1)].clone();
            out[(slot(k, false), slot(l, true))] = b[(k - 1, l - 1)].clone();
            out[(slot(k, true), slot(l, false))] = -b[(k - 1, l - 1)].conj();
            out[(slot(k, true), slot(l, true))] = a[(k - 1, l - 1)].conj();
        }
    }
    out
}

/// Image of a basis of sp(p', q') in so(4p', 4q'), through the complex
/// doubling and then the real pair expansion.
pub fn embed_symplectic(p: usize, q: usize) -> Result<Vec<SOElement>> {
    if p + q == 0 {
        return Err(Error::InvalidParameter(
            "symplectic family needs p+q >= 1".into(),
        ));
    }
    let complex: Vec<ExactMatrix> = symplectic_basis(p, q)
        .iter()
        .map(|(a, b)| quaternion_to_complex(p, q, a, b))
        .collect();
    embed_complex_unitary(2 * p, 2 * q, &complex)
}

/// Realify complex-antisymmetric matrices (elements of so(m, C)) into
/// so(m, m): with real coordinates stacked imaginary-first, X + iY maps
/// to [[X, Y], [-Y, X]], and each input yields the images of Z and iZ.
pub fn realify_complex_so(gens: &[ExactMatrix]) -> Result<Vec<SOElement>> {
    let mut out = Vec::with_capacity(2 * gens.len());
    for g in gens {
        let m = g.rows();
        if g.cols() != m {
            return Err(Error::DimensionMismatch(format!(
                "complex generator is {}x{}",
                g.rows(),
                g.cols()
            )));
        }
        if !g.transpose().add(g).is_zero() {
            return Err(Error::InvalidInput(
                "complex generator is not antisymmetric".into(),
            ));
        }
        let ambient = Signature::new(m, m);
        let build = |x: &dyn Fn(usize, usize) -> GaussianRational,
                     y: &dyn Fn(usize, usize) -> GaussianRational|
         -> Result<SOElement> {
            let mut real = ExactMatrix::zeros(2 * m, 2 * m);
            for a in 0..m {
                for b in 0..m {
                    real[(a, b)] = x(a, b);
                    real[(a, m + b)] = y(a, b);
                    real[(m + a, b)] = -y(a, b);
                    real[(m + a, m + b)] = x(a, b);
                }
            }
            SOElement::new(ambient, real)
        };
        let re = |a: usize, b: usize| GaussianRational::real(g[(a, b)].re.clone());
        let im = |a: usize, b: usize| GaussianRational::real(g[(a, b)].im.clone());
        let neg_im = |a: usize, b: usize| GaussianRational::real(-g[(a, b)].im.clone());
        // Z = X + iY and iZ = -Y + iX.
        out.push(build(&re, &im)?);
        out.push(build(&neg_im, &re)?);
    }
    Ok(out)
}

/// The holonomy families of the catalog.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum HolonomyFamily {
    SO,
    SU,
    U,
    Sp,
    G2,
    G2Split,
    G2Complex,
    Spin7,
    Spin43,
    Spin7Complex,
}

impl HolonomyFamily {
    pub const ALL: [HolonomyFamily; 10] = [
        HolonomyFamily::SO,
        HolonomyFamily::SU,
        HolonomyFamily::U,
        HolonomyFamily::Sp,
        HolonomyFamily::G2,
        HolonomyFamily::G2Split,
        HolonomyFamily::G2Complex,
        HolonomyFamily::Spin7,
        HolonomyFamily::Spin43,
        HolonomyFamily::Spin7Complex,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            HolonomyFamily::SO => "SO",
            HolonomyFamily::SU => "SU",
            HolonomyFamily::U => "U",
            HolonomyFamily::Sp => "Sp",
            HolonomyFamily::G2 => "G2",
            HolonomyFamily::G2Split => "G2split",
            HolonomyFamily::G2Complex => "G2complex",
            HolonomyFamily::Spin7 => "Spin7",
            HolonomyFamily::Spin43 => "Spin43",
            HolonomyFamily::Spin7Complex => "Spin7complex",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        HolonomyFamily::ALL
            .iter()
            .copied()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::UnsupportedSpec(format!("unknown family {name:?}")))
    }

    /// Whether the family takes (p', q') parameters.
    pub fn takes_params(&self) -> bool {
        matches!(
            self,
            HolonomyFamily::SO | HolonomyFamily::SU | HolonomyFamily::U | HolonomyFamily::Sp
        )
    }
}

/// A family together with its parameters; fixed families carry (0,0).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HolonomySpec {
    pub family: HolonomyFamily,
    pub params: (usize, usize),
}

impl HolonomySpec {
    pub fn parametric(family: HolonomyFamily, p: usize, q: usize) -> Result<Self> {
        if !family.takes_params() {
            return Err(Error::InvalidParameter(format!(
                "family {} takes no parameters",
                family.name()
            )));
        }
        if p + q == 0 {
            return Err(Error::InvalidParameter(format!(
                "family {} needs p'+q' >= 1",
                family.name()
            )));
        }
        Ok(HolonomySpec {
            family,
            params: (p, q),
        })
    }

    pub fn fixed(family: HolonomyFamily) -> Result<Self> {
        if family.takes_params() {
            return Err(Error::InvalidParameter(format!(
                "family {} needs parameters",
                family.name()
            )));
        }
        Ok(HolonomySpec {
            family,
            params: (0, 0),
        })
    }

    /// Signature of the space the generators really act on.
    pub fn ambient(&self) -> Signature {
        let (p, q) = self.params;
        match self.family {
            HolonomyFamily::SO => Signature::new(p, q),
            HolonomyFamily::SU | HolonomyFamily::U => Signature::new(2 * p, 2 * q),
            HolonomyFamily::Sp => Signature::new(4 * p, 4 * q),
            HolonomyFamily::G2 => Signature::new(0, 7),
            HolonomyFamily::G2Split => Signature::new(4, 3),
            HolonomyFamily::G2Complex => Signature::new(7, 7),
            HolonomyFamily::Spin7 => Signature::new(0, 8),
            HolonomyFamily::Spin43 => Signature::new(4, 4),
            HolonomyFamily::Spin7Complex => Signature::new(8, 8),
        }
    }

    /// Ambient signature as the published table prints it. Two rows
    /// differ from the computed ambient; see the table driver.
    pub fn printed_ambient(&self) -> Signature {
        match self.family {
            HolonomyFamily::G2Complex => Signature::new(0, 7),
            HolonomyFamily::Spin43 => Signature::new(8, 8),
            _ => self.ambient(),
        }
    }

    /// The published invariant-spinor count; None for the generic SO
    /// family, which the table does not list.
    pub fn expected_invariants(&self) -> Option<usize> {
        let (p, q) = self.params;
        match self.family {
            HolonomyFamily::SO => None,
            HolonomyFamily::SU | HolonomyFamily::G2Complex => Some(2),
            HolonomyFamily::U
            | HolonomyFamily::G2
            | HolonomyFamily::G2Split
            | HolonomyFamily::Spin7
            | HolonomyFamily::Spin43
            | HolonomyFamily::Spin7Complex => Some(1),
            HolonomyFamily::Sp => Some(p + q + 1),
        }
    }

    pub fn describe(&self) -> String {
        if self.family.takes_params() {
            format!(
                "{}({},{})",
                self.family.name(),
                self.params.0,
                self.params.1
            )
        } else {
            self.family.name().to_string()
        }
    }
}

/// Generators of the requested holonomy algebra, using the given
/// calibration forms for the exceptional families.
pub fn resolve_with_forms(spec: &HolonomySpec, forms: &FormTable) -> Result<Vec<SpinCGenerator>> {
    let (p, q) = spec.params;
    let traceless = |els: Vec<SOElement>| -> Vec<SpinCGenerator> {
        els.into_iter().map(SpinCGenerator::traceless).collect()
    };
    match spec.family {
        HolonomyFamily::SO => Ok(traceless(so_basis(spec.ambient()))),
        HolonomyFamily::SU => Ok(traceless(embed_unitary(p, q)?.0)),
        HolonomyFamily::U => {
            let (su, central) = embed_unitary(p, q)?;
            let mut gens = traceless(su);
            gens.push(central);
            Ok(gens)
        }
        HolonomyFamily::Sp => Ok(traceless(embed_symplectic(p, q)?)),
        HolonomyFamily::G2 => Ok(traceless(stabilizer_of_form(
            spec.ambient(),
            &forms.g2_compact,
        )?)),
        HolonomyFamily::G2Split => Ok(traceless(stabilizer_of_form(
            spec.ambient(),
            &forms.g2_split,
        )?)),
        HolonomyFamily::Spin7 => Ok(traceless(stabilizer_of_form(
            spec.ambient(),
            &forms.spin7_compact,
        )?)),
        HolonomyFamily::Spin43 => Ok(traceless(stabilizer_of_form(
            spec.ambient(),
            &forms.spin7_split,
        )?)),
        HolonomyFamily::G2Complex => {
            let base = stabilizer_of_form(Signature::new(0, 7), &forms.g2_compact)?;
            let complex: Vec<ExactMatrix> = base.iter().map(|e| e.matrix().clone()).collect();
            Ok(traceless(realify_complex_so(&complex)?))
        }
        HolonomyFamily::Spin7Complex => {
            let base = stabilizer_of_form(Signature::new(0, 8), &forms.spin7_compact)?;
            let complex: Vec<ExactMatrix> = base.iter().map(|e| e.matrix().clone()).collect();
            Ok(traceless(realify_complex_so(&complex)?))
        }
    }
}

/// [`resolve_with_forms`] with the builtin calibration forms.
pub fn resolve(spec: &HolonomySpec) -> Result<Vec<SpinCGenerator>> {
    resolve_with_forms(spec, &FormTable::builtin())
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::matrix::{canonical_row_span, commutator};

    fn flatten_generator(g: &SpinCGenerator) -> Vec<GaussianRational> {
        let m = g.b.matrix();
        let mut out: Vec<GaussianRational> = (0..m.rows())
            .flat_map(|i| (0..m.cols()).map(move |j| m[(i, j)].clone()))
            .collect();
        out.push(GaussianRational::real(g.t.clone()));
        out
    }

    /// Reduce v against reduced-echelon rows; true when it lands in
    /// their span.
    fn reduces_to_zero(rref_rows: &[Vec<GaussianRational>], v: &[GaussianRational]) -> bool {
        let mut v = v.to_vec();
        for row in rref_rows {
            let Some(pivot) = row.iter().position(|c| !c.is_zero()) else {
                continue;
            };
            if v[pivot].is_zero() {
                continue;
            }
            let factor = v[pivot].clone();
            for (vk, rk) in v.iter_mut().zip(row) {
                let term = &factor * rk;
                *vk -= &term;
            }
        }
        v.iter().all(GaussianRational::is_zero)
    }

    fn assert_closed_and_independent(gens: &[SpinCGenerator], label: &str) {
        let flat: Vec<Vec<GaussianRational>> = gens.iter().map(flatten_generator).collect();
        let span = ExactMatrix::from_rows(flat.clone());
        assert_eq!(span.rank(), gens.len(), "{label}: generators are dependent");
        let rref = canonical_row_span(&flat);
        for (i, a) in gens.iter().enumerate() {
            for b in gens.iter().skip(i + 1) {
                let bracket = SpinCGenerator::traceless(a.b.bracket(&b.b));
                assert!(
                    reduces_to_zero(&rref, &flatten_generator(&bracket)),
                    "{label}: bracket escapes the span"
                );
            }
        }
    }

    #[test]
    fn antihermitian_bases_have_the_right_sizes() {
        for (p, q) in [(0, 1), (1, 0), (1, 1), (0, 2), (2, 1)] {
            let m = p + q;
            assert_eq!(unitary_basis(p, q).len(), m * m);
            assert_eq!(special_unitary_basis(p, q).len(), m * m - 1);
            for g in unitary_basis(p, q) {
                check_antihermitian(p, q, &g).unwrap();
            }
            for g in special_unitary_basis(p, q) {
                check_antihermitian(p, q, &g).unwrap();
                let trace: GaussianRational =
                    (0..m).fold(GaussianRational::zero(), |acc, k| acc + g[(k, k)].clone());
                assert!(trace.is_zero());
            }
        }
    }

    #[test]
    fn pair_expansion_of_a_diagonal_antihermitian_matrix() {
        // i diag(1,-1) in u(2) lands in so(0,4) as E_12 - E_34.
        let c = matrix_unit(2, 1, 1, GaussianRational::i()).sub(&matrix_unit(
            2,
            2,
            2,
            GaussianRational::i(),
        ));
        let image = embed_complex_unitary(0, 2, &[c]).unwrap().remove(0);
        let sig = Signature::new(0, 4);
        let expected =
            crate::so::so_element_e(sig, 1, 2).add(&crate::so::so_element_e(sig, 3, 4).neg());
        assert_eq!(image, expected);
    }

    #[test]
    fn pair_expansion_rejects_non_antihermitian_input() {
        let bad = matrix_unit(2, 1, 1, GaussianRational::one());
        assert!(matches!(
            embed_complex_unitary(0, 2, &[bad]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn pair_expansion_is_multiplicative() {
        // The block expansion respects matrix products, hence brackets.
        let a = matrix_unit(2, 1, 2, GaussianRational::one()).add(&matrix_unit(
            2,
            2,
            1,
            -GaussianRational::one(),
        ));
        let b = matrix_unit(2, 1, 2, GaussianRational::i()).add(&matrix_unit(
            2,
            2,
            1,
            GaussianRational::i(),
        ));
        let embed_product = |x: &ExactMatrix, y: &ExactMatrix| -> ExactMatrix {
            let c = commutator(x, y);
            embed_complex_unitary(0, 2, &[c])
                .unwrap()
                .remove(0)
                .matrix()
                .clone()
        };
        let lhs = embed_product(&a, &b);
        let ra = embed_complex_unitary(0, 2, &[a]).unwrap().remove(0);
        let rb = embed_complex_unitary(0, 2, &[b]).unwrap().remove(0);
        assert_eq!(lhs, commutator(ra.matrix(), rb.matrix()));
    }

    #[test]
    fn unitary_embedding_smallest_case() {
        let (su, central) = embed_unitary(0, 1).unwrap();
        assert!(su.is_empty());
        assert_eq!(central.t, rat(1, 1));
        assert_eq!(
            *central.b.matrix(),
            ExactMatrix::from_str_rows(&[&["0", "-1"], &["1", "0"]])
        );
    }

    #[test]
    fn unitary_central_generator_is_the_rotation_block_in_any_signature() {
        // The central matrix is the same rotation block whether the first
        // complex direction is spacelike or timelike; only its E_12
        // coordinate flips sign with the metric.
        let (_, central) = embed_unitary(1, 0).unwrap();
        assert_eq!(
            *central.b.matrix(),
            ExactMatrix::from_str_rows(&[&["0", "-1"], &["1", "0"]])
        );
        let sig = Signature::new(2, 0);
        assert_eq!(central.b, crate::so::so_element_e(sig, 1, 2).neg());
    }

    #[test]
    fn parameterless_unitary_family_is_rejected() {
        assert!(matches!(
            embed_unitary(0, 0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            embed_symplectic(0, 0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn symplectic_embedding_counts() {
        let sp1 = embed_symplectic(0, 1).unwrap();
        assert_eq!(sp1.len(), 3);
        for e in &sp1 {
            assert_eq!(e.signature(), Signature::new(0, 4));
        }
        let sp11 = embed_symplectic(1, 1).unwrap();
        assert_eq!(sp11.len(), 10);
        for e in &sp11 {
            assert_eq!(e.signature(), Signature::new(4, 4));
        }
    }

    #[test]
    fn realify_produces_metric_elements_of_double_size() {
        let z = ExactMatrix::from_str_rows(&[&["0", "1+2*i"], &["-1-2*i", "0"]]);
        let out = realify_complex_so(&[z]).unwrap();
        assert_eq!(out.len(), 2);
        for e in &out {
            assert_eq!(e.signature(), Signature::new(2, 2));
        }
        let zero = ExactMatrix::zeros(3, 3);
        let out = realify_complex_so(&[zero]).unwrap();
        assert!(out[0].is_zero() && out[1].is_zero());
        let bad = ExactMatrix::from_str_rows(&[&["0", "1"], &["1", "0"]]);
        assert!(matches!(
            realify_complex_so(&[bad]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn realify_is_a_bracket_homomorphism() {
        let z1 = ExactMatrix::from_str_rows(&[
            &["0", "i", "2"],
            &["-i", "0", "1-i"],
            &["-2", "-1+i", "0"],
        ]);
        let z2 = ExactMatrix::from_str_rows(&[
            &["0", "3", "-i"],
            &["-3", "0", "1/2"],
            &["i", "-1/2", "0"],
        ]);
        let r1 = realify_complex_so(std::slice::from_ref(&z1))
            .unwrap()
            .remove(0);
        let r2 = realify_complex_so(std::slice::from_ref(&z2))
            .unwrap()
            .remove(0);
        let bracket_then_realify = realify_complex_so(&[commutator(&z1, &z2)])
            .unwrap()
            .remove(0);
        assert_eq!(
            commutator(r1.matrix(), r2.matrix()),
            *bracket_then_realify.matrix()
        );
    }

    #[test]
    fn family_names_round_trip() {
        for f in HolonomyFamily::ALL {
            assert_eq!(HolonomyFamily::from_name(f.name()).unwrap(), f);
        }
        assert!(matches!(
            HolonomyFamily::from_name("E8"),
            Err(Error::UnsupportedSpec(_))
        ));
    }

    #[test]
    fn spec_construction_rules() {
        assert!(HolonomySpec::parametric(HolonomyFamily::SU, 1, 1).is_ok());
        assert!(HolonomySpec::parametric(HolonomyFamily::SU, 0, 0).is_err());
        assert!(HolonomySpec::parametric(HolonomyFamily::G2, 1, 1).is_err());
        assert!(HolonomySpec::fixed(HolonomyFamily::G2).is_ok());
        assert!(HolonomySpec::fixed(HolonomyFamily::U).is_err());
    }

    #[test]
    fn ambients_and_expected_counts() {
        let su = HolonomySpec::parametric(HolonomyFamily::SU, 2, 1).unwrap();
        assert_eq!(su.ambient(), Signature::new(4, 2));
        assert_eq!(su.expected_invariants(), Some(2));
        let sp = HolonomySpec::parametric(HolonomyFamily::Sp, 1, 1).unwrap();
        assert_eq!(sp.ambient(), Signature::new(4, 4));
        assert_eq!(sp.expected_invariants(), Some(3));
        let g2c = HolonomySpec::fixed(HolonomyFamily::G2Complex).unwrap();
        assert_eq!(g2c.ambient(), Signature::new(7, 7));
        assert_eq!(g2c.printed_ambient(), Signature::new(0, 7));
        let s43 = HolonomySpec::fixed(HolonomyFamily::Spin43).unwrap();
        assert_eq!(s43.ambient(), Signature::new(4, 4));
        assert_eq!(s43.printed_ambient(), Signature::new(8, 8));
        assert_eq!(s43.describe(), "Spin43");
        assert_eq!(su.describe(), "SU(2,1)");
    }

    #[test]
    fn resolved_generator_counts() {
        let count = |spec: HolonomySpec| resolve(&spec).unwrap().len();
        assert_eq!(
            count(HolonomySpec::parametric(HolonomyFamily::SU, 1, 1).unwrap()),
            3
        );
        assert_eq!(
            count(HolonomySpec::parametric(HolonomyFamily::U, 1, 0).unwrap()),
            1
        );
        assert_eq!(
            count(HolonomySpec::parametric(HolonomyFamily::Sp, 1, 1).unwrap()),
            10
        );
        assert_eq!(count(HolonomySpec::fixed(HolonomyFamily::G2).unwrap()), 14);
        assert_eq!(
            count(HolonomySpec::fixed(HolonomyFamily::G2Split).unwrap()),
            14
        );
        assert_eq!(
            count(HolonomySpec::fixed(HolonomyFamily::G2Complex).unwrap()),
            28
        );
        assert_eq!(
            count(HolonomySpec::fixed(HolonomyFamily::Spin7).unwrap()),
            21
        );
        assert_eq!(
            count(HolonomySpec::fixed(HolonomyFamily::Spin43).unwrap()),
            21
        );
        assert_eq!(
            count(HolonomySpec::fixed(HolonomyFamily::Spin7Complex).unwrap()),
            42
        );
        assert_eq!(
            count(HolonomySpec::parametric(HolonomyFamily::SO, 1, 2).unwrap()),
            3
        );
    }

    #[test]
    fn central_generator_only_in_the_unitary_family() {
        for spec in [
            HolonomySpec::parametric(HolonomyFamily::SU, 1, 1).unwrap(),
            HolonomySpec::parametric(HolonomyFamily::Sp, 0, 1).unwrap(),
            HolonomySpec::fixed(HolonomyFamily::G2).unwrap(),
        ] {
            for g in resolve(&spec).unwrap() {
                assert!(g.t.is_zero(), "{}: unexpected scalar part", spec.describe());
            }
        }
        let u = HolonomySpec::parametric(HolonomyFamily::U, 1, 1).unwrap();
        let gens = resolve(&u).unwrap();
        let with_t: Vec<&SpinCGenerator> = gens.iter().filter(|g| !g.t.is_zero()).collect();
        assert_eq!(with_t.len(), 1);
        assert_eq!(with_t[0].t, rat(1, 1));
    }

    #[test]
    fn every_family_closes_as_a_lie_algebra() {
        let specs = [
            HolonomySpec::parametric(HolonomyFamily::SO, 1, 2).unwrap(),
            HolonomySpec::parametric(HolonomyFamily::SU, 1, 1).unwrap(),
            HolonomySpec::parametric(HolonomyFamily::SU, 0, 2).unwrap(),
            HolonomySpec::parametric(HolonomyFamily::U, 1, 1).unwrap(),
            HolonomySpec::parametric(HolonomyFamily::Sp, 0, 1).unwrap(),
            HolonomySpec::parametric(HolonomyFamily::Sp, 1, 1).unwrap(),
            HolonomySpec::fixed(HolonomyFamily::G2).unwrap(),
            HolonomySpec::fixed(HolonomyFamily::G2Split).unwrap(),
            HolonomySpec::fixed(HolonomyFamily::G2Complex).unwrap(),
            HolonomySpec::fixed(HolonomyFamily::Spin7).unwrap(),
            HolonomySpec::fixed(HolonomyFamily::Spin43).unwrap(),
            HolonomySpec::fixed(HolonomyFamily::Spin7Complex).unwrap(),
        ];
        for spec in specs {
            let gens = resolve(&spec).unwrap();
            assert_closed_and_independent(&gens, &spec.describe());
        }
    }
}
