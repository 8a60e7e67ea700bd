//! Acceptance gate: every published number and structural identity the
//! project promises, one test per claim, each ending in a printed PASS
//! line. Everything here is exact; there are no tolerances.

use std::process::Command;

use holospin_core::{
    build_rep, clifford_multiply, commutator, hermitian_form, invariant_space, invariants_for, rat,
    resolve, run_selfcheck, so_basis, so_element_e, spin_transfer, spinc_operator,
    stabilizer_of_form, ExactMatrix, FormTable, GaussianRational, HolonomyFamily, HolonomySpec,
    Rational, SOElement, Signature, SpinCGenerator, SpinorVector,
};

fn parametric(f: HolonomyFamily, p: usize, q: usize) -> HolonomySpec {
    HolonomySpec::parametric(f, p, q).unwrap()
}

fn fixed(f: HolonomyFamily) -> HolonomySpec {
    HolonomySpec::fixed(f).unwrap()
}

#[test]
fn published_counts_at_minimal_parameters() {
    let cases = [
        (parametric(HolonomyFamily::SU, 1, 1), 2),
        (parametric(HolonomyFamily::SU, 2, 0), 2),
        (parametric(HolonomyFamily::Sp, 0, 1), 2),
        (parametric(HolonomyFamily::Sp, 1, 1), 3),
        (fixed(HolonomyFamily::G2), 1),
        (fixed(HolonomyFamily::G2Split), 1),
        (fixed(HolonomyFamily::G2Complex), 2),
        (fixed(HolonomyFamily::Spin7), 1),
        (fixed(HolonomyFamily::Spin43), 1),
        (fixed(HolonomyFamily::Spin7Complex), 1),
    ];
    for (spec, want) in cases {
        let got = invariants_for(&spec).unwrap().n_invariants();
        assert_eq!(got, want, "{}", spec.describe());
    }
    println!("PASS: invariant counts at minimal parameters match the published table (10 rows)");
}

#[test]
fn unitary_family_fixes_exactly_the_last_spinor() {
    for (p, q) in [(1, 0), (0, 1), (1, 1), (2, 0), (2, 1)] {
        let result = invariants_for(&parametric(HolonomyFamily::U, p, q)).unwrap();
        assert_eq!(result.n_invariants(), 1, "U({p},{q})");
        let minus = SpinorVector::u_minus(result.ambient.n());
        assert!(
            result.space.basis[0].is_multiple_of(&minus),
            "U({p},{q}): basis is not proportional to u(-1,...,-1)"
        );
    }
    println!("PASS: U(p',q') leaves a one-dimensional space spanned by u(-1,...,-1) (5 cases)");
}

#[test]
fn first_rotation_eigenvalues_on_the_extreme_spinors() {
    // The transferred rotation multiplies u(+-1,...,+-1) by
    // (tau_1 tau_2 / 2)(+-i) with tau_k = i exactly for timelike e_k.
    // Hence rho(E_12) has eigenvalues +-i/2 for p = 0; the sign-adjusted
    // element eps_1 E_12 restores them for p >= 2; and for p = 1 the
    // eigenvalues are real, so the p = 0 identity cannot hold there.
    for m in [2usize, 4, 6, 8] {
        for p in 0..=m {
            let sig = Signature::new(p, m - p);
            let rep = build_rep(sig).unwrap();
            let n = sig.n();
            let rho = spin_transfer(&rep, &so_element_e(sig, 1, 2));
            for (v, nu) in [
                (SpinorVector::u_plus(n), 1i64),
                (SpinorVector::u_minus(n), -1),
            ] {
                let image = SpinorVector::new(rho.mul_vec(&v.coords));
                let literal = v.scale(&GaussianRational::imaginary(rat(nu, 2)));
                match p {
                    0 => assert_eq!(image, literal, "{sig}"),
                    1 => {
                        assert_ne!(image, literal, "{sig}: mixed pair cannot act by +-i/2");
                        assert_eq!(
                            image,
                            v.scale(&GaussianRational::real(rat(-nu, 2))),
                            "{sig}"
                        );
                    }
                    _ => {
                        // eps_1 = -1, so rho(eps_1 E_12) v = -image.
                        assert_eq!(
                            image.scale(&GaussianRational::from_int(-1)),
                            literal,
                            "{sig}"
                        );
                    }
                }
            }
        }
    }
    println!(
        "PASS: rotation eigenvalues +-i/2 on u(+-1,...,+-1) hold literally for p = 0, \
         hold for eps_1 E_12 when p >= 2, and are real for p = 1 (all even m <= 8)"
    );
}

#[test]
fn representation_axioms_hold_exactly() {
    let mut anticommutation = 0usize;
    for m in 1..=8usize {
        for p in 0..=m {
            let sig = Signature::new(p, m - p);
            let rep = build_rep(sig).unwrap();
            let dim = sig.spinor_dim();
            for i in 1..=m {
                for j in 1..=m {
                    let anti = rep
                        .generator(i)
                        .mul(rep.generator(j))
                        .add(&rep.generator(j).mul(rep.generator(i)));
                    let want = if i == j {
                        ExactMatrix::identity(dim)
                            .scale(&GaussianRational::from_int(-2 * sig.eps(i)))
                    } else {
                        ExactMatrix::zeros(dim, dim)
                    };
                    assert!(anti.sub(&want).is_zero(), "{sig}: e_{i}, e_{j}");
                    anticommutation += 1;
                }
            }
        }
    }
    let mut adjointness = 0usize;
    for m in 1..=6usize {
        for p in 0..=m {
            let sig = Signature::new(p, m - p);
            let rep = build_rep(sig).unwrap();
            let dim = sig.spinor_dim();
            let sign = GaussianRational::from_int(if (p + 1) % 2 == 0 { 1 } else { -1 });
            for k in 1..=m {
                let mut x = vec![rat(0, 1); m];
                x[k - 1] = rat(1, 1);
                for a in 0..dim {
                    for b in 0..dim {
                        let v = SpinorVector::basis(dim, a);
                        let w = SpinorVector::basis(dim, b);
                        let xv = clifford_multiply(&rep, &x, &v).unwrap();
                        let xw = clifford_multiply(&rep, &x, &w).unwrap();
                        assert_eq!(
                            hermitian_form(&rep, &xv, &w),
                            &sign * &hermitian_form(&rep, &v, &xw),
                            "{sig}: e_{k} on pair ({a},{b})"
                        );
                        adjointness += 1;
                    }
                }
            }
        }
    }
    println!(
        "PASS: anticommutation ({anticommutation} identities, m <= 8) and \
         pairing adjointness ({adjointness} identities, m <= 6) hold exactly"
    );
}

/// Small deterministic generator for coefficient streams.
struct Lcg(u64);

impl Lcg {
    fn next_coeff(&mut self) -> Rational {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let n = (self.0 >> 33) as i64 % 9 - 4;
        let d = (self.0 >> 17) as i64 % 4 + 1;
        rat(n, d)
    }
}

#[test]
fn lie_theoretic_oracles() {
    let forms = FormTable::builtin();
    let dims = [
        (Signature::new(0, 7), &forms.g2_compact, 14usize),
        (Signature::new(4, 3), &forms.g2_split, 14),
        (Signature::new(0, 8), &forms.spin7_compact, 21),
        (Signature::new(4, 4), &forms.spin7_split, 21),
    ];
    for (sig, form, want) in dims {
        assert_eq!(stabilizer_of_form(sig, form).unwrap().len(), want, "{sig}");
    }
    assert_eq!(
        resolve(&fixed(HolonomyFamily::G2Complex)).unwrap().len(),
        28
    );
    assert_eq!(
        resolve(&fixed(HolonomyFamily::Spin7Complex)).unwrap().len(),
        42
    );

    let report = run_selfcheck();
    let closure = report.suites.iter().find(|s| s.name == "closure").unwrap();
    assert!(closure.passed(), "closure failures: {:?}", closure.failures);
    assert!(
        report.passed(),
        "selfcheck failure: {:?}",
        report.first_failure()
    );

    // Transfer respects brackets on pseudorandom pairs.
    let mut lcg = Lcg(20260815);
    let mut pairs = 0usize;
    for (p, q) in [(1, 2), (2, 2), (0, 4), (3, 1)] {
        let sig = Signature::new(p, q);
        let rep = build_rep(sig).unwrap();
        let basis = so_basis(sig);
        for _ in 0..8 {
            let mut a = SOElement::zero(sig);
            let mut b = SOElement::zero(sig);
            for e in &basis {
                a = a.add(&e.scale(&lcg.next_coeff()));
                b = b.add(&e.scale(&lcg.next_coeff()));
            }
            let lhs = spin_transfer(&rep, &a.bracket(&b));
            let rhs = commutator(&spin_transfer(&rep, &a), &spin_transfer(&rep, &b));
            assert!(lhs.sub(&rhs).is_zero(), "{sig}");
            pairs += 1;
        }
    }
    println!(
        "PASS: stabilizer dimensions 14/14/21/21 with complexifications 28/42, \
         every generator set closes, and the transfer respects brackets ({pairs} random pairs)"
    );
}

#[test]
fn negative_controls_shrink_the_space() {
    // Appending the central element (E_12, t=1) to the special unitary
    // generators cuts the two-dimensional space down to one.
    let su = parametric(HolonomyFamily::SU, 1, 1);
    let sig = su.ambient();
    let rep = build_rep(sig).unwrap();
    let mut gens = resolve(&su).unwrap();
    assert_eq!(invariant_space(&rep, &gens).unwrap().dim(), 2);
    gens.push(SpinCGenerator::new(so_element_e(sig, 1, 2), rat(1, 1)));
    assert_eq!(invariant_space(&rep, &gens).unwrap().dim(), 1);

    // A pure central generator over the two-dimensional spinor space:
    // operator diag(i, 0), one invariant spinor.
    let u01 = parametric(HolonomyFamily::U, 0, 1);
    let central = resolve(&u01).unwrap();
    assert_eq!(
        central.len(),
        1,
        "su(0,1) is trivial, only the central part remains"
    );
    assert_ne!(central[0].t, rat(0, 1));
    let rep2 = build_rep(Signature::new(0, 2)).unwrap();
    let op = spinc_operator(&rep2, &central[0]);
    assert_eq!(op, ExactMatrix::from_str_rows(&[&["i", "0"], &["0", "0"]]));
    let space = invariant_space(&rep2, &central).unwrap();
    assert_eq!(space.dim(), 1);
    assert!(space.basis[0].is_multiple_of(&SpinorVector::u_minus(1)));
    println!(
        "PASS: adjoining the central generator drops the special unitary count from 2 to 1, \
         and a pure central generator leaves exactly one spinor (kernel of diag(i,0))"
    );
}

#[test]
fn table_report_is_byte_deterministic() {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_holospin"))
            .args(["table1", "--format", "json"])
            .output()
            .expect("binary runs");
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    let first = run();
    let second = run();
    assert!(!first.is_empty());
    assert_eq!(first, second);
    println!(
        "PASS: two table reports agree byte for byte ({} bytes)",
        first.len()
    );
}
