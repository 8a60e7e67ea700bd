//! Built-in verification suites: representation axioms, transfer
//! properties, stabilizer dimensions, and closure of every catalog
//! family. Failures are collected as printable strings instead of
//! panicking so a front end can report them.

use num_traits::Zero;

use crate::catalog::{resolve_with_forms, HolonomyFamily, HolonomySpec};
use crate::clifford::{build_rep, clifford_multiply, hermitian_form, Signature, SpinorVector};
use crate::forms::{stabilizer_of_form, FormTable};
use crate::invariant::{decompose_element, spin_transfer};
use crate::matrix::{canonical_row_span, commutator, ExactMatrix};
use crate::scalar::{rat, GaussianRational, Rational};
use crate::so::{so_basis, so_element_e, SpinCGenerator};

/// Outcome of one suite.
#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.failures.first().map(String::as_str)
    }
}

#[derive(Clone, Debug)]
pub struct SelfCheckReport {
    pub suites: Vec<SuiteResult>,
}

impl SelfCheckReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn total_checks(&self) -> usize {
        self.suites.iter().map(|s| s.checks).sum()
    }

    /// First failure in suite order, with the suite name.
    pub fn first_failure(&self) -> Option<(&'static str, &str)> {
        self.suites
            .iter()
            .find_map(|s| s.first_failure().map(|f| (s.name, f)))
    }
}

/// Run every suite against the given form constants.
pub fn run_selfcheck_with_forms(forms: &FormTable) -> SelfCheckReport {
    SelfCheckReport {
        suites: vec![
            anticommutation_suite(),
            adjointness_suite(),
            eigenvalue_suite(),
            decompose_roundtrip_suite(),
            transfer_homomorphism_suite(),
            stabilizer_dimension_suite(forms),
            closure_suite(forms),
        ],
    }
}

pub fn run_selfcheck() -> SelfCheckReport {
    run_selfcheck_with_forms(&FormTable::builtin())
}

fn signatures_up_to(max_m: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        for p in 0..=m {
            out.push(Signature::new(p, m - p));
        }
    }
    out
}

/// Phi(e_i)Phi(e_j) + Phi(e_j)Phi(e_i) = -2 eps_i delta_ij Id, m <= 8.
fn anticommutation_suite() -> SuiteResult {
    let mut checks = 0;
    let mut failures = Vec::new();
    for sig in signatures_up_to(8) {
        let rep = build_rep(sig).expect("nonempty signature");
        let dim = sig.spinor_dim();
        for i in 1..=sig.m() {
            for j in 1..=sig.m() {
                checks += 1;
                let anti = rep
                    .generator(i)
                    .mul(rep.generator(j))
                    .add(&rep.generator(j).mul(rep.generator(i)));
                let want = if i == j {
                    ExactMatrix::identity(dim).scale(&GaussianRational::from_int(-2 * sig.eps(i)))
                } else {
                    ExactMatrix::zeros(dim, dim)
                };
                if !anti.sub(&want).is_zero() {
                    failures.push(format!("anticommutator of e_{i}, e_{j} over {sig}"));
                }
            }
        }
    }
    SuiteResult {
        name: "anticommutation",
        checks,
        failures,
    }
}

/// <e_k v, w> = (-1)^(p+1) <v, e_k w> over the full basis, m <= 6.
fn adjointness_suite() -> SuiteResult {
    let mut checks = 0;
    let mut failures = Vec::new();
    for sig in signatures_up_to(6) {
        let rep = build_rep(sig).expect("nonempty signature");
        let dim = sig.spinor_dim();
        let sign = GaussianRational::from_int(if (sig.p + 1) % 2 == 0 { 1 } else { -1 });
        for k in 1..=sig.m() {
            checks += 1;
            let mut x = vec![rat(0, 1); sig.m()];
            x[k - 1] = rat(1, 1);
            'pairs: for a in 0..dim {
                for b in 0..dim {
                    let v = SpinorVector::basis(dim, a);
                    let w = SpinorVector::basis(dim, b);
                    let xv = clifford_multiply(&rep, &x, &v).expect("unit coefficient vector");
                    let xw = clifford_multiply(&rep, &x, &w).expect("unit coefficient vector");
                    if hermitian_form(&rep, &xv, &w) != &sign * &hermitian_form(&rep, &v, &xw) {
                        failures.push(format!("adjointness of e_{k} over {sig}"));
                        break 'pairs;
                    }
                }
            }
        }
    }
    SuiteResult {
        name: "adjointness",
        checks,
        failures,
    }
}

/// Action of the first rotation generator on the extreme spinors, every
/// even signature with m <= 8. The transferred operator multiplies
/// u(+1,...,+1) and u(-1,...,-1) by (tau_1 tau_2 / 2) (+-i), so the
/// eigenvalue of eps_1 E_12 is +-i/2 whenever e_1 and e_2 have equal
/// type, while the mixed pair p = 1 turns it real.
fn eigenvalue_suite() -> SuiteResult {
    let mut checks = 0;
    let mut failures = Vec::new();
    for sig in signatures_up_to(8).into_iter().filter(|s| s.m() % 2 == 0) {
        let rep = build_rep(sig).expect("nonempty signature");
        let n = sig.n();
        let element = so_element_e(sig, 1, 2).scale(&rat(sig.eps(1), 1));
        let rho = spin_transfer(&rep, &element);
        for (vector, nu) in [(SpinorVector::u_plus(n), 1), (SpinorVector::u_minus(n), -1)] {
            checks += 1;
            let eigenvalue = if sig.p == 1 {
                // eps_1 E_12 = -E_12 here; rho(E_12) u = -+ u / 2.
                GaussianRational::real(rat(nu, 2))
            } else {
                GaussianRational::new(Rational::zero(), rat(nu, 2))
            };
            if rho.mul_vec(&vector.coords) != vector.scale(&eigenvalue).coords {
                let side = if nu == 1 { "+" } else { "-" };
                failures.push(format!("eigenvalue on u{side} over {sig}"));
            }
        }
    }
    SuiteResult {
        name: "eigenvalue",
        checks,
        failures,
    }
}

/// assemble(decompose(B)) = B for every basis element and for one dense
/// combination per signature, m <= 6.
fn decompose_roundtrip_suite() -> SuiteResult {
    let mut checks = 0;
    let mut failures = Vec::new();
    for sig in signatures_up_to(6) {
        let basis = so_basis(sig);
        for (idx, element) in basis.iter().enumerate() {
            checks += 1;
            if decompose_element(element).assemble() != *element {
                failures.push(format!("round trip of basis element {idx} over {sig}"));
            }
        }
        if basis.is_empty() {
            continue;
        }
        checks += 1;
        let mut combo = basis[0].scale(&rat(1, 1));
        for (idx, element) in basis.iter().enumerate().skip(1) {
            let weight = rat(
                if idx % 2 == 0 {
                    idx as i64 + 1
                } else {
                    -(idx as i64) - 1
                },
                2,
            );
            combo = combo.add(&element.scale(&weight));
        }
        if decompose_element(&combo).assemble() != combo {
            failures.push(format!("round trip of a dense combination over {sig}"));
        }
    }
    SuiteResult {
        name: "decompose-roundtrip",
        checks,
        failures,
    }
}

/// rho([A, B]) = [rho(A), rho(B)] for all basis pairs, m <= 6.
fn transfer_homomorphism_suite() -> SuiteResult {
    let mut checks = 0;
    let mut failures = Vec::new();
    for sig in signatures_up_to(6).into_iter().filter(|s| s.m() >= 2) {
        let rep = build_rep(sig).expect("nonempty signature");
        let basis = so_basis(sig);
        let images: Vec<ExactMatrix> = basis
            .iter()
            .map(|element| spin_transfer(&rep, element))
            .collect();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                checks += 1;
                let lhs = spin_transfer(&rep, &basis[a].bracket(&basis[b]));
                let rhs = commutator(&images[a], &images[b]);
                if !lhs.sub(&rhs).is_zero() {
                    failures.push(format!("bracket of basis pair ({a},{b}) over {sig}"));
                }
            }
        }
    }
    SuiteResult {
        name: "transfer-homomorphism",
        checks,
        failures,
    }
}

/// Dimensions of the calibration-form stabilizers, and of their
/// complexified images.
fn stabilizer_dimension_suite(forms: &FormTable) -> SuiteResult {
    let mut checks = 0;
    let mut failures = Vec::new();
    let direct = [
        (
            "G2 dimension",
            Signature::new(0, 7),
            &forms.g2_compact,
            14usize,
        ),
        (
            "split G2 dimension",
            Signature::new(4, 3),
            &forms.g2_split,
            14,
        ),
        (
            "Spin7 dimension",
            Signature::new(0, 8),
            &forms.spin7_compact,
            21,
        ),
        (
            "split Spin7 dimension",
            Signature::new(4, 4),
            &forms.spin7_split,
            21,
        ),
    ];
    for (name, sig, form, want) in direct {
        checks += 1;
        match stabilizer_of_form(sig, form) {
            Ok(stab) if stab.len() == want => {}
            Ok(stab) => failures.push(format!("{name}: expected {want}, got {}", stab.len())),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    let realified = [
        (
            "complexified G2 dimension",
            HolonomyFamily::G2Complex,
            28usize,
        ),
        (
            "complexified Spin7 dimension",
            HolonomyFamily::Spin7Complex,
            42,
        ),
    ];
    for (name, family, want) in realified {
        checks += 1;
        let spec = HolonomySpec::fixed(family).expect("fixed family");
        match resolve_with_forms(&spec, forms) {
            Ok(gens) if gens.len() == want => {}
            Ok(gens) => failures.push(format!("{name}: expected {want}, got {}", gens.len())),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    SuiteResult {
        name: "stabilizer-dimensions",
        checks,
        failures,
    }
}

fn flatten_generator(g: &SpinCGenerator) -> Vec<GaussianRational> {
    let mat = g.b.matrix();
    let m = g.b.signature().m();
    let mut row = Vec::with_capacity(m * m + 1);
    for r in 0..m {
        for c in 0..m {
            row.push(mat[(r, c)].clone());
        }
    }
    row.push(GaussianRational::real(g.t.clone()));
    row
}

/// Reduce against rows in reduced echelon form; true when v lands on zero.
fn reduces_to_zero(rref: &[Vec<GaussianRational>], mut v: Vec<GaussianRational>) -> bool {
    for row in rref {
        let pivot = row
            .iter()
            .position(|e| !e.is_zero())
            .expect("canonical span never contains a zero row");
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

/// Every resolved generator set is linearly independent and closed under
/// the bracket; the central component never brackets in.
fn closure_suite(forms: &FormTable) -> SuiteResult {
    let mut checks = 0;
    let mut failures = Vec::new();
    let specs = [
        HolonomySpec::parametric(HolonomyFamily::SU, 1, 1),
        HolonomySpec::parametric(HolonomyFamily::SU, 2, 0),
        HolonomySpec::parametric(HolonomyFamily::U, 1, 1),
        HolonomySpec::parametric(HolonomyFamily::Sp, 0, 1),
        HolonomySpec::parametric(HolonomyFamily::Sp, 1, 1),
        HolonomySpec::fixed(HolonomyFamily::G2),
        HolonomySpec::fixed(HolonomyFamily::G2Split),
        HolonomySpec::fixed(HolonomyFamily::G2Complex),
        HolonomySpec::fixed(HolonomyFamily::Spin7),
        HolonomySpec::fixed(HolonomyFamily::Spin43),
        HolonomySpec::fixed(HolonomyFamily::Spin7Complex),
    ];
    for spec in specs {
        let spec = spec.expect("catalog spec");
        checks += 1;
        let gens = match resolve_with_forms(&spec, forms) {
            Ok(gens) => gens,
            Err(e) => {
                failures.push(format!("{}: {e}", spec.describe()));
                continue;
            }
        };
        let rows: Vec<Vec<GaussianRational>> = gens.iter().map(flatten_generator).collect();
        let span = canonical_row_span(&rows);
        if span.len() != gens.len() {
            failures.push(format!(
                "{}: {} generators span only {} dimensions",
                spec.describe(),
                gens.len(),
                span.len()
            ));
            continue;
        }
        'brackets: for a in 0..gens.len() {
            for b in a + 1..gens.len() {
                let bracket = SpinCGenerator::traceless(gens[a].b.bracket(&gens[b].b));
                if !reduces_to_zero(&span, flatten_generator(&bracket)) {
                    failures.push(format!(
                        "{}: bracket of generators {a}, {b} escapes the span",
                        spec.describe()
                    ));
                    break 'brackets;
                }
            }
        }
    }
    SuiteResult {
        name: "closure",
        checks,
        failures,
    }
}
