//! Exterior forms with rational coefficients, the so(p,q) derivation
//! action on them, and stabilizer subalgebras.
//!
//! The exceptional holonomy algebras are realized as annihilators of
//! calibration forms: B stabilizes phi when the derivation action
//! (B.phi)(X_1,...,X_k) = -sum_r phi(X_1,...,B X_r,...,X_k) vanishes.
//! On coefficients this rewrites each covector factor by
//! B.e^a = -sum_b B[a,b] e^b.
//!
//! The calibration coefficients ship as plain-text data files: a
//! "degree k" line, a "signature p q" line, then one term per line as k
//! strictly increasing 1-based indices followed by a rational
//! coefficient. '#' starts a comment.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_traits::Zero;

use crate::clifford::Signature;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::{format_rational, parse_rational, GaussianRational, Rational};
use crate::so::{so_basis, SOElement};

/// Sort a multi-index, tracking the permutation sign. Repeated indices
/// return None (the wedge term vanishes).
fn canonical_index(idx: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut sorted = idx.to_vec();
    let mut sign = 1i64;
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            match sorted[i].cmp(&sorted[j]) {
                std::cmp::Ordering::Greater => {
                    sorted.swap(i, j);
                    sign = -sign;
                }
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    Some((sorted, sign))
}

/// Alternating k-form, stored on strictly increasing 1-based
/// multi-indices with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExteriorForm {
    degree: usize,
    sig: Signature,
    coeffs: BTreeMap<Vec<usize>, Rational>,
}

impl ExteriorForm {
    pub fn zero(sig: Signature, degree: usize) -> Self {
        ExteriorForm {
            degree,
            sig,
            coeffs: BTreeMap::new(),
        }
    }

    /// Build from terms in any index order; repeated-index terms vanish.
    pub fn new(
        sig: Signature,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, Rational)>,
    ) -> Result<Self> {
        let mut form = ExteriorForm::zero(sig, degree);
        for (idx, c) in terms {
            form.add_term(&idx, &c)?;
        }
        Ok(form)
    }

    /// Accumulate c * e^idx, canonicalizing the index order.
    pub fn add_term(&mut self, idx: &[usize], c: &Rational) -> Result<()> {
        if idx.len() != self.degree {
            return Err(Error::InvalidInput(format!(
                "index {idx:?} has {} entries, form degree is {}",
                idx.len(),
                self.degree
            )));
        }
        for &k in idx {
            if k < 1 || k > self.sig.m() {
                return Err(Error::InvalidInput(format!(
                    "index {k} out of range for signature {}",
                    self.sig
                )));
            }
        }
        if c.is_zero() {
            return Ok(());
        }
        let Some((key, sign)) = canonical_index(idx) else {
            return Ok(());
        };
        let term = if sign < 0 { -c.clone() } else { c.clone() };
        let entry = self.coeffs.entry(key).or_insert_with(Rational::zero);
        *entry += term;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Parse the plain-text data format described in the module docs.
    pub fn parse(text: &str) -> Result<Self> {
        let mut degree: Option<usize> = None;
        let mut sig: Option<Signature> = None;
        let mut form: Option<ExteriorForm> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
            match fields[0] {
                "degree" => {
                    if degree.is_some() || fields.len() != 2 {
                        return Err(bad("malformed degree line"));
                    }
                    degree = Some(fields[1].parse().map_err(|_| bad("bad degree"))?);
                }
                "signature" => {
                    if sig.is_some() || fields.len() != 3 {
                        return Err(bad("malformed signature line"));
                    }
                    let p = fields[1].parse().map_err(|_| bad("bad signature"))?;
                    let q = fields[2].parse().map_err(|_| bad("bad signature"))?;
                    sig = Some(Signature::new(p, q));
                }
                _ => {
                    let (Some(k), Some(s)) = (degree, sig) else {
                        return Err(bad("term before degree and signature lines"));
                    };
                    if fields.len() != k + 1 {
                        return Err(bad(&format!("expected {k} indices and a coefficient")));
                    }
                    let mut idx = Vec::with_capacity(k);
                    for f in &fields[..k] {
                        idx.push(f.parse::<usize>().map_err(|_| bad("bad index"))?);
                    }
                    if !idx.windows(2).all(|w| w[0] < w[1]) {
                        return Err(bad("indices must be strictly increasing"));
                    }
                    let c = parse_rational(fields[k])?;
                    let f = form.get_or_insert_with(|| ExteriorForm::zero(s, k));
                    f.add_term(&idx, &c)?;
                }
            }
        }
        match (degree, sig) {
            (Some(k), Some(s)) => Ok(form.unwrap_or_else(|| ExteriorForm::zero(s, k))),
            _ => Err(Error::Parse("missing degree or signature line".into())),
        }
    }

    /// Render in the same data format (no comments), terms in index order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "degree {}", self.degree);
        let _ = writeln!(out, "signature {} {}", self.sig.p, self.sig.q);
        for (idx, c) in &self.coeffs {
            let idx_str: Vec<String> = idx.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{} {}", idx_str.join(" "), format_rational(c));
        }
        out
    }
}

/// Derivation action of an so(p,q) element on a form.
pub fn exterior_action(b: &SOElement, phi: &ExteriorForm) -> Result<ExteriorForm> {
    if b.signature() != phi.sig {
        return Err(Error::DimensionMismatch(format!(
            "element over {} acting on form over {}",
            b.signature(),
            phi.sig
        )));
    }
    let m = phi.sig.m();
    let mat = b.matrix();
    let mut out = ExteriorForm::zero(phi.sig, phi.degree);
    for (idx, c) in &phi.coeffs {
        for r in 0..idx.len() {
            for col in 1..=m {
                let entry = &mat[(idx[r] - 1, col - 1)];
                if entry.is_zero() {
                    continue;
                }
                let mut rewritten = idx.clone();
                rewritten[r] = col;
                let coeff = -(&entry.re * c);
                out.add_term(&rewritten, &coeff)?;
            }
        }
    }
    Ok(out)
}

fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..=m {
            current.push(v);
            rec(v + 1, m, k, current, out);
            current.pop();
        }
    }
    rec(1, m, k, &mut current, &mut out);
    out
}

/// Basis of {B in so(p,q) : B.phi = 0}, from the exact kernel of the
/// action matrix over the E_ij coordinates.
pub fn stabilizer_of_form(sig: Signature, phi: &ExteriorForm) -> Result<Vec<SOElement>> {
    if phi.sig != sig {
        return Err(Error::DimensionMismatch(format!(
            "form over {} passed with signature {sig}",
            phi.sig
        )));
    }
    let basis = so_basis(sig);
    let rows = k_subsets(sig.m(), phi.degree);
    let row_of: BTreeMap<&[usize], usize> = rows
        .iter()
        .enumerate()
        .map(|(r, idx)| (idx.as_slice(), r))
        .collect();
    let mut system = ExactMatrix::zeros(rows.len(), basis.len());
    for (col, e) in basis.iter().enumerate() {
        let acted = exterior_action(e, phi)?;
        for (idx, c) in acted.coeffs() {
            system[(row_of[idx.as_slice()], col)] = GaussianRational::real(c.clone());
        }
    }
    let kernel = system.kernel_basis();
    let mut out = Vec::with_capacity(kernel.len());
    for coeffs in kernel {
        let mut acc = SOElement::zero(sig);
        for (c, e) in coeffs.iter().zip(&basis) {
            if c.is_zero() {
                continue;
            }
            assert!(
                c.is_real(),
                "rational system produced a complex kernel entry"
            );
            acc = acc.add(&e.scale(&c.re));
        }
        out.push(acc);
    }
    Ok(out)
}

/// The calibration forms shipped with the crate.
#[derive(Clone, Debug)]
pub struct FormTable {
    pub g2_compact: ExteriorForm,
    pub g2_split: ExteriorForm,
    pub spin7_compact: ExteriorForm,
    pub spin7_split: ExteriorForm,
}

impl FormTable {
    /// The embedded copies of the data files.
    pub fn builtin() -> FormTable {
        let parse = |text: &str| ExteriorForm::parse(text).expect("embedded form data");
        FormTable {
            g2_compact: parse(include_str!("../data/g2_associative_0_7.form")),
            g2_split: parse(include_str!("../data/g2_associative_4_3.form")),
            spin7_compact: parse(include_str!("../data/spin7_cayley_0_8.form")),
            spin7_split: parse(include_str!("../data/spin7_cayley_4_4.form")),
        }
    }

    /// Load the four files from a directory, for checking an external
    /// copy of the data against the builtin one.
    pub fn from_dir(dir: &Path) -> Result<FormTable> {
        let load = |name: &str| -> Result<ExteriorForm> {
            let path = dir.join(name);
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            ExteriorForm::parse(&text)
        };
        Ok(FormTable {
            g2_compact: load("g2_associative_0_7.form")?,
            g2_split: load("g2_associative_4_3.form")?,
            spin7_compact: load("spin7_cayley_0_8.form")?,
            spin7_split: load("spin7_cayley_4_4.form")?,
        })
    }
}
