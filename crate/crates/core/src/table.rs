//! Invariant-spinor counts for whole holonomy specs, and the report
//! reproducing the published table of counts.
//!
//! The published table prints two ambient signatures that disagree with
//! the realification dimensions of their rows; the report carries both
//! the printed and the computed signature so the discrepancy stays
//! visible.

use crate::catalog::{resolve_with_forms, HolonomyFamily, HolonomySpec};
use crate::clifford::{build_rep, CliffordRep, Signature, SpinorVector};
use crate::error::{Error, Result};
use crate::forms::FormTable;
use crate::invariant::{invariant_space, InvariantSpace};
use crate::so::SpinCGenerator;

/// Largest ambient dimension the exact solvers accept: spinor spaces up
/// to 2^8 = 256 complex dimensions.
pub const MAX_AMBIENT_DIMENSION: usize = 16;

/// Guard for user-driven entry points.
pub fn ensure_within_cap(sig: Signature) -> Result<()> {
    if sig.m() > MAX_AMBIENT_DIMENSION {
        return Err(Error::ResourceCap(format!(
            "ambient dimension {} exceeds the cap {MAX_AMBIENT_DIMENSION}",
            sig.m()
        )));
    }
    Ok(())
}

/// Invariant spinors of one holonomy spec.
#[derive(Clone, Debug)]
pub struct InvariantSpaceResult {
    pub spec: HolonomySpec,
    pub ambient: Signature,
    pub space: InvariantSpace,
}

impl InvariantSpaceResult {
    pub fn n_invariants(&self) -> usize {
        self.space.dim()
    }
}

pub fn invariants_for_with_forms(
    spec: &HolonomySpec,
    forms: &FormTable,
) -> Result<InvariantSpaceResult> {
    let ambient = spec.ambient();
    ensure_within_cap(ambient)?;
    let gens = resolve_with_forms(spec, forms)?;
    let rep = build_rep(ambient)?;
    let space = invariant_space(&rep, &gens)?;
    Ok(InvariantSpaceResult {
        spec: *spec,
        ambient,
        space,
    })
}

pub fn invariants_for(spec: &HolonomySpec) -> Result<InvariantSpaceResult> {
    invariants_for_with_forms(spec, &FormTable::builtin())
}

/// True when the su(p', q') image fixes exactly the span of the two
/// extreme basis spinors u(1,...,1) and u(-1,...,-1).
fn su_span_matches(rep: &CliffordRep, gens: &[SpinCGenerator]) -> Result<bool> {
    let inv = invariant_space(rep, gens)?;
    let n = rep.signature().n();
    Ok(inv.dim() == 2 && inv.equals_span(&[SpinorVector::u_plus(n), SpinorVector::u_minus(n)]))
}

pub fn su_fixed_vectors_check(rep: &CliffordRep, p: usize, q: usize) -> Result<bool> {
    let spec = HolonomySpec::parametric(HolonomyFamily::SU, p, q)?;
    assert_eq!(
        rep.signature(),
        spec.ambient(),
        "representation signature mismatch"
    );
    let gens = resolve_with_forms(&spec, &FormTable::builtin())?;
    su_span_matches(rep, &gens)
}

/// One line of the reproduction report.
#[derive(Clone, Debug)]
pub struct Table1Row {
    pub spec: HolonomySpec,
    pub expected: usize,
    pub computed: usize,
}

impl Table1Row {
    pub fn matches(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Clone, Debug)]
pub struct Table1Report {
    pub rows: Vec<Table1Row>,
}

impl Table1Report {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(Table1Row::matches)
    }
}

/// Compute every row of the published table: the parametric families at
/// all parameters with p'+q' up to `bound`, then the six fixed rows.
pub fn table1_with_forms(bound: usize, forms: &FormTable) -> Result<Table1Report> {
    if bound == 0 {
        return Err(Error::InvalidParameter(
            "parameter bound must be at least 1".into(),
        ));
    }
    let mut specs = Vec::new();
    for family in [HolonomyFamily::SU, HolonomyFamily::U, HolonomyFamily::Sp] {
        for total in 1..=bound {
            for p in 0..=total {
                specs.push(HolonomySpec::parametric(family, p, total - p)?);
            }
        }
    }
    for family in [
        HolonomyFamily::G2,
        HolonomyFamily::G2Split,
        HolonomyFamily::G2Complex,
        HolonomyFamily::Spin7,
        HolonomyFamily::Spin43,
        HolonomyFamily::Spin7Complex,
    ] {
        specs.push(HolonomySpec::fixed(family)?);
    }
    let mut rows = Vec::with_capacity(specs.len());
    for spec in specs {
        let result = invariants_for_with_forms(&spec, forms)?;
        let expected = spec
            .expected_invariants()
            .expect("every table family has a published count");
        rows.push(Table1Row {
            spec,
            expected,
            computed: result.n_invariants(),
        });
    }
    Ok(Table1Report { rows })
}

pub fn table1(bound: usize) -> Result<Table1Report> {
    table1_with_forms(bound, &FormTable::builtin())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::resolve;
    use crate::scalar::rat;
    use crate::so::so_element_e;

    fn parametric(f: HolonomyFamily, p: usize, q: usize) -> HolonomySpec {
        HolonomySpec::parametric(f, p, q).unwrap()
    }

    fn fixed(f: HolonomyFamily) -> HolonomySpec {
        HolonomySpec::fixed(f).unwrap()
    }

    #[test]
    fn special_unitary_family_fixes_two_spinors() {
        let result = invariants_for(&parametric(HolonomyFamily::SU, 1, 1)).unwrap();
        assert_eq!(result.n_invariants(), 2);
        assert!(result
            .space
            .equals_span(&[SpinorVector::u_plus(2), SpinorVector::u_minus(2)]));
    }

    #[test]
    fn unitary_family_fixes_the_last_basis_spinor() {
        for (p, q) in [(1, 0), (0, 1), (1, 1), (2, 0), (2, 1)] {
            let result = invariants_for(&parametric(HolonomyFamily::U, p, q)).unwrap();
            assert_eq!(result.n_invariants(), 1, "U({p},{q})");
            let n = result.ambient.n();
            assert!(
                result.space.basis[0].is_multiple_of(&SpinorVector::u_minus(n)),
                "U({p},{q}): basis is not the last spinor"
            );
        }
    }

    #[test]
    fn su_span_check_accepts_the_true_generators() {
        for (p, q) in [(1, 1), (0, 2), (2, 0)] {
            let rep = build_rep(Signature::new(2 * p, 2 * q)).unwrap();
            assert!(su_fixed_vectors_check(&rep, p, q).unwrap(), "SU({p},{q})");
        }
    }

    #[test]
    fn su_span_check_rejects_corrupted_generators() {
        let sig = Signature::new(2, 2);
        let rep = build_rep(sig).unwrap();
        let mut gens = resolve(&parametric(HolonomyFamily::SU, 1, 1)).unwrap();
        // Swap one generator for a rotation outside the embedded algebra.
        gens[0] = SpinCGenerator::traceless(so_element_e(sig, 1, 3));
        assert!(!su_span_matches(&rep, &gens).unwrap());
        // With no constraints every spinor survives and the dimension is off.
        assert!(!su_span_matches(&rep, &[]).unwrap());
    }

    #[test]
    fn central_rescaling_keeps_the_kernel() {
        let spec = parametric(HolonomyFamily::U, 1, 1);
        let rep = build_rep(spec.ambient()).unwrap();
        let gens = resolve(&spec).unwrap();
        let base = invariant_space(&rep, &gens).unwrap();
        let rescaled: Vec<SpinCGenerator> = gens
            .iter()
            .map(|g| SpinCGenerator::new(g.b.scale(&rat(-7, 3)), &g.t * &rat(-7, 3)))
            .collect();
        assert_eq!(invariant_space(&rep, &rescaled).unwrap(), base);
    }

    #[test]
    fn minimal_instances_reproduce_the_published_counts() {
        let cases = [
            (parametric(HolonomyFamily::SU, 1, 1), 2),
            (parametric(HolonomyFamily::SU, 2, 0), 2),
            (parametric(HolonomyFamily::Sp, 0, 1), 2),
            (parametric(HolonomyFamily::Sp, 1, 1), 3),
            (fixed(HolonomyFamily::G2), 1),
            (fixed(HolonomyFamily::G2Split), 1),
            (fixed(HolonomyFamily::Spin7), 1),
            (fixed(HolonomyFamily::Spin43), 1),
        ];
        for (spec, want) in cases {
            let result = invariants_for(&spec).unwrap();
            assert_eq!(result.n_invariants(), want, "{}", spec.describe());
        }
    }

    #[test]
    fn complexified_rows_reproduce_the_published_counts() {
        let g2c = invariants_for(&fixed(HolonomyFamily::G2Complex)).unwrap();
        assert_eq!(g2c.n_invariants(), 2);
        let spin7c = invariants_for(&fixed(HolonomyFamily::Spin7Complex)).unwrap();
        assert_eq!(spin7c.n_invariants(), 1);
    }

    #[test]
    fn report_rows_and_flags() {
        let report = table1(1).unwrap();
        // Three parametric families at (1,0) and (0,1), plus six fixed rows.
        assert_eq!(report.rows.len(), 12);
        assert!(report.all_match(), "{:?}", report.rows);
        let printed: Vec<Signature> = report
            .rows
            .iter()
            .map(|r| r.spec.printed_ambient())
            .collect();
        let computed: Vec<Signature> = report.rows.iter().map(|r| r.spec.ambient()).collect();
        let differing: Vec<usize> = (0..report.rows.len())
            .filter(|&k| printed[k] != computed[k])
            .collect();
        assert_eq!(differing.len(), 2);
        for k in differing {
            let family = report.rows[k].spec.family;
            assert!(family == HolonomyFamily::G2Complex || family == HolonomyFamily::Spin43);
        }
    }

    #[test]
    fn zero_bound_is_rejected() {
        assert!(matches!(table1(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(ensure_within_cap(Signature::new(8, 8)).is_ok());
        assert!(matches!(
            ensure_within_cap(Signature::new(9, 8)),
            Err(Error::ResourceCap(_))
        ));
        let big = parametric(HolonomyFamily::Sp, 5, 0);
        assert!(matches!(invariants_for(&big), Err(Error::ResourceCap(_))));
    }
}
