//! The degree calculators: for a module `V` of a finite group, the smallest
//! degree `d` such that the invariants of degree at most `d` have no common
//! zero besides the origin (`sigma`), and the same requirement restricted to
//! nonzero fixed points (`delta`), each certified degree by degree through
//! the Groebner origin predicate. Also: the closed-form fast path for the
//! regular module, a brute-force number-theory checker, and the report that
//! asserts every theorem-level inequality across computed certificates.

use crate::gb::OriginEngine;
use crate::gf::FieldElement;
use crate::group::{
    normalizer, p_nilpotent_complement, quotient_is_cyclic, sylow_subgroup, Group, Subgroup,
};
use crate::inv::invariant_basis;
use crate::poly::{orbit_sum, Monomial, Polynomial};
use crate::rep::Representation;
use crate::{Error, Limits, Result};
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertKind {
    Sigma,
    Delta,
}

impl CertKind {
    fn name(self) -> &'static str {
        match self {
            CertKind::Sigma => "sigma",
            CertKind::Delta => "delta",
        }
    }
}

/// One row of the degree iteration log.
#[derive(Clone, Debug)]
pub struct DegreeLogEntry {
    pub degree: u32,
    /// Invariant space dimensions for degrees `1..=degree`.
    pub invariant_dims: Vec<usize>,
    pub cuts_out_origin: bool,
}

/// The answer record: the certified value, the per-degree log, and the
/// invariants achieving the value. The verdict at `value` is true and at
/// `value - 1` false (when `value > 1`), and `value <= |G|` always.
#[derive(Clone, Debug)]
pub struct DegreeCertificate {
    pub kind: CertKind,
    pub value: u32,
    pub group_order: usize,
    pub characteristic: u32,
    pub per_degree: Vec<DegreeLogEntry>,
    pub witnesses: Vec<Polynomial>,
}

impl DegreeCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "kind": self.kind.name(),
            "value": self.value,
            "group_order": self.group_order,
            "characteristic": self.characteristic,
            "order": crate::poly::MONOMIAL_ORDER,
            "per_degree": self.per_degree.iter().map(|e| json!({
                "d": e.degree,
                "invariant_dims": e.invariant_dims,
                "cuts_out_origin": e.cuts_out_origin,
            })).collect::<Vec<_>>(),
            "witnesses": self.witnesses.iter().map(|w| w.render()).collect::<Vec<_>>(),
        })
    }
}

/// sigma(G, V): iterates cumulative invariant sets of degree `1..=d` and
/// certifies the first `d` whose invariants cut out the origin. For a finite
/// group this happens at `d <= |G|`; running past the group order is
/// reported as an implementation bug, never as a value.
pub fn sigma(v: &Representation, limits: &Limits) -> Result<DegreeCertificate> {
    degree_certificate(v, CertKind::Sigma, limits)
}

/// delta(G, V): same iteration, but the zero set is intersected with the
/// fixed space, realized by the injective linear substitution
/// `x := sum_j t_j b_j` over a fixed-space basis. A module without nonzero
/// fixed points gets value 0 with an empty log.
pub fn delta(v: &Representation, limits: &Limits) -> Result<DegreeCertificate> {
    degree_certificate(v, CertKind::Delta, limits)
}

fn degree_certificate(
    v: &Representation,
    kind: CertKind,
    limits: &Limits,
) -> Result<DegreeCertificate> {
    let field = v.field().clone();
    let group_order = v.group().order();
    let characteristic = field.characteristic();
    let empty = |value: u32| DegreeCertificate {
        kind,
        value,
        group_order,
        characteristic,
        per_degree: Vec::new(),
        witnesses: Vec::new(),
    };
    if v.dim() == 0 {
        return Ok(empty(0));
    }
    // for delta: parametrize the fixed space by fresh variables
    let substitution: Option<Vec<Polynomial>> = match kind {
        CertKind::Sigma => None,
        CertKind::Delta => {
            let fixed = v.fixed_subspace();
            if fixed.is_empty() {
                return Ok(empty(0));
            }
            let m = fixed.len();
            let forms = (0..v.dim())
                .map(|i| {
                    let terms: Vec<(Monomial, FieldElement)> = fixed
                        .iter()
                        .enumerate()
                        .filter(|(_, b)| !b[i].is_zero())
                        .map(|(j, b)| (Monomial::variable(m, j), b[i].clone()))
                        .collect();
                    Polynomial::from_terms(m, terms, &field)
                })
                .collect();
            Some(forms)
        }
    };
    let engine_vars = match &substitution {
        Some(forms) => forms.first().map(|f| f.nvars()).unwrap_or(0),
        None => v.dim(),
    };
    let mut engine = OriginEngine::new(field.clone(), engine_vars, limits.basis_elements);
    let mut dims: Vec<usize> = Vec::new();
    let mut witnesses: Vec<Polynomial> = Vec::new();
    let mut per_degree: Vec<DegreeLogEntry> = Vec::new();

    for d in 1..=group_order as u32 {
        let basis = invariant_basis(v, d, limits.monomials)?;
        dims.push(basis.dim());
        let gens: Vec<Polynomial> = match &substitution {
            None => basis.basis().to_vec(),
            Some(forms) => basis
                .basis()
                .iter()
                .map(|f| f.substitute(forms, &field))
                .collect::<Result<Vec<_>>>()?,
        };
        witnesses.extend(basis.basis().iter().cloned());
        let verdict = engine.add_and_check(&gens)?;
        per_degree.push(DegreeLogEntry {
            degree: d,
            invariant_dims: dims.clone(),
            cuts_out_origin: verdict,
        });
        if verdict {
            return Ok(DegreeCertificate {
                kind,
                value: d,
                group_order,
                characteristic,
                per_degree,
                witnesses,
            });
        }
    }
    Err(Error::BoundViolation(format!(
        "{} exceeded the group order {group_order}",
        kind.name()
    )))
}

/// Closed-form value and witness for the regular module: the value is the
/// Sylow `p`-order, witnessed by the orbit sum of the product of the Sylow
/// variables, whose value at the all-ones fixed point is `|G|/|P| mod p`.
#[derive(Clone, Debug)]
pub struct RegularDeltaWitness {
    pub value: u32,
    pub sylow_order: usize,
    pub witness: Polynomial,
    pub witness_value: FieldElement,
    pub group_order: usize,
    pub characteristic: u32,
}

impl RegularDeltaWitness {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "kind": "delta_regular_fast",
            "value": self.value,
            "sylow_order": self.sylow_order,
            "group_order": self.group_order,
            "characteristic": self.characteristic,
            "witness": self.witness.render(),
            "witness_value": self.witness_value.to_expr(),
        })
    }
}

pub fn delta_vreg_fast(g: &Group, p: u32, limits: &Limits) -> Result<RegularDeltaWitness> {
    let field = crate::gf::Field::prime(p)?;
    let group = std::sync::Arc::new(g.clone());
    let v = Representation::regular(std::sync::Arc::clone(&group), field.clone(), limits)?;
    let sylow = sylow_subgroup(&group, p as usize);
    let mut exps = vec![0u16; group.order()];
    for &m in sylow.members() {
        exps[m as usize] = 1;
    }
    let m = Monomial::from_exponents(&exps);
    let witness = orbit_sum(&v, &Subgroup::whole(&group), &m)?;
    let ones: Vec<FieldElement> = (0..group.order()).map(|_| field.one()).collect();
    let witness_value = witness.evaluate(&ones, &field)?;
    if witness_value.is_zero() {
        return Err(Error::BoundViolation(
            "regular-module witness vanished at the fixed point".into(),
        ));
    }
    Ok(RegularDeltaWitness {
        value: sylow.order() as u32,
        sylow_order: sylow.order(),
        witness,
        witness_value,
        group_order: group.order(),
        characteristic: p,
    })
}

/// Brute-force confirmation that for coprime `p, q` and `s >= 1`, every
/// `a < q^s` with `a = 1 (mod q)` and `a^p = 1 (mod q^s)` satisfies
/// `a = 1 (mod q^s)`.
pub fn check_lemma_nt(p: u64, q: u64, s: u32) -> Result<bool> {
    if p == 0 || q == 0 || s == 0 {
        return Err(Error::Precondition("p, q, s must be positive".into()));
    }
    if gcd(p, q) != 1 {
        return Err(Error::Precondition(format!("gcd({p}, {q}) != 1")));
    }
    let qs = q
        .checked_pow(s)
        .ok_or_else(|| Error::Precondition("q^s exceeds the machine word".into()))?;
    for a in 0..qs {
        if a % q == 1 % q && pow_mod(a, p, qs) == 1 % qs && a != 1 % qs {
            return Ok(false);
        }
    }
    Ok(true)
}

fn pow_mod(mut b: u64, mut e: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    b %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % n as u128) as u64;
        }
        b = (b as u128 * b as u128 % n as u128) as u64;
        e >>= 1;
    }
    acc
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// One module's certificates inside a bounds report.
#[derive(Clone, Debug)]
pub struct BoundsEntry {
    pub label: String,
    pub sigma: Option<DegreeCertificate>,
    pub delta: Option<DegreeCertificate>,
    /// Marks the twisted-normalizer module whose sigma value realizes the
    /// normalizer lower bound.
    pub twist_lower_bound: bool,
}

#[derive(Clone, Debug)]
pub struct BoundCheck {
    pub name: String,
    pub detail: String,
    pub holds: bool,
}

/// Structured inequality report for one group and characteristic. All
/// asserted inequalities are theorems, so a violation is a hard error.
#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub group_order: usize,
    pub characteristic: u32,
    pub sylow_order: usize,
    pub normalizer_order: usize,
    pub normalizer_quotient_cyclic: bool,
    pub p_nilpotent: bool,
    pub sylow_normal: bool,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "group_order": self.group_order,
            "characteristic": self.characteristic,
            "sylow_order": self.sylow_order,
            "normalizer_order": self.normalizer_order,
            "normalizer_quotient_cyclic": self.normalizer_quotient_cyclic,
            "p_nilpotent": self.p_nilpotent,
            "sylow_normal": self.sylow_normal,
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "detail": c.detail,
                "holds": c.holds,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Asserts every applicable inequality across the supplied certificates:
/// `delta <= sigma` per module, `sigma <= |G|`, the `|G|/l` upper bound for
/// p-nilpotent groups with non-normal Sylow subgroup, and the normalizer
/// lower bound when the twisted module is among the inputs and the
/// normalizer quotient is cyclic. Any violation is an error.
pub fn bounds_report(group: &Group, p: u32, entries: &[BoundsEntry]) -> Result<BoundsReport> {
    let sylow = sylow_subgroup(group, p as usize);
    let nrm = normalizer(group, &sylow);
    let quotient_cyclic = quotient_is_cyclic(group, &nrm, &sylow)?;
    let p_nilpotent = p_nilpotent_complement(group, p as usize).is_some();
    let sylow_normal = sylow.is_normal(group);
    let order = group.order();
    let mut checks: Vec<BoundCheck> = Vec::new();

    for e in entries {
        if let (Some(d), Some(s)) = (&e.delta, &e.sigma) {
            checks.push(BoundCheck {
                name: format!("delta <= sigma [{}]", e.label),
                detail: format!("{} <= {}", d.value, s.value),
                holds: d.value <= s.value,
            });
        }
        if let Some(s) = &e.sigma {
            checks.push(BoundCheck {
                name: format!("sigma <= |G| [{}]", e.label),
                detail: format!("{} <= {}", s.value, order),
                holds: s.value as usize <= order,
            });
        }
    }

    if p_nilpotent && !sylow_normal {
        if let Some(l) = group.smallest_prime_divisor() {
            for e in entries {
                if let Some(s) = &e.sigma {
                    checks.push(BoundCheck {
                        name: format!("p-nilpotent bound sigma <= |G|/l [{}]", e.label),
                        detail: format!("{} <= {}/{} = {}", s.value, order, l, order / l),
                        holds: (s.value as usize) * l <= order,
                    });
                }
            }
        }
    }

    if quotient_cyclic && entries.iter().any(|e| e.twist_lower_bound) {
        let max_sigma = entries
            .iter()
            .filter_map(|e| e.sigma.as_ref().map(|s| s.value))
            .max()
            .unwrap_or(0);
        checks.push(BoundCheck {
            name: "normalizer lower bound max sigma >= |N_G(P)|".into(),
            detail: format!("{} >= {}", max_sigma, nrm.order()),
            holds: max_sigma as usize >= nrm.order(),
        });
    }

    let report = BoundsReport {
        group_order: order,
        characteristic: p,
        sylow_order: sylow.order(),
        normalizer_order: nrm.order(),
        normalizer_quotient_cyclic: quotient_cyclic,
        p_nilpotent,
        sylow_normal,
        checks,
    };
    if let Some(bad) = report.checks.iter().find(|c| !c.holds) {
        return Err(Error::BoundViolation(format!(
            "{}: {}",
            bad.name, bad.detail
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::group::Group;
    use std::sync::Arc;

    fn limits() -> Limits {
        Limits::default()
    }

    fn group(perms: &[Vec<usize>]) -> Arc<Group> {
        Arc::new(Group::from_permutations(perms, 512).unwrap())
    }

    fn s3() -> Arc<Group> {
        group(&[vec![1, 0, 2], vec![1, 2, 0]])
    }

    fn regular(g: &Arc<Group>, p: u32) -> Representation {
        Representation::regular(Arc::clone(g), Field::prime(p).unwrap(), &limits()).unwrap()
    }

    fn a4_paper_rep() -> Representation {
        let f = Field::prime(3).unwrap();
        let rows = |r: [[u32; 3]; 3]| {
            crate::linalg::Matrix::from_rows(
                r.iter()
                    .map(|row| row.iter().map(|&c| f.from_u32(c)).collect())
                    .collect(),
            )
            .unwrap()
        };
        let c = rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
        let d = rows([[2, 0, 0], [0, 2, 0], [0, 0, 1]]);
        crate::rep::group_from_matrices(vec![c, d], f, &limits())
            .unwrap()
            .1
    }

    #[test]
    fn sigma_of_small_regular_modules() {
        // a p-group has sigma equal to its order
        let z2 = group(&[vec![1, 0]]);
        let cert = sigma(&regular(&z2, 2), &limits()).unwrap();
        assert_eq!(cert.value, 2);
        assert!(cert.per_degree.last().unwrap().cuts_out_origin);
        assert!(!cert.per_degree[0].cuts_out_origin);

        let z3 = group(&[vec![1, 2, 0]]);
        assert_eq!(sigma(&regular(&z3, 3), &limits()).unwrap().value, 3);

        let z4 = group(&[vec![1, 2, 3, 0]]);
        assert_eq!(sigma(&regular(&z4, 2), &limits()).unwrap().value, 4);
    }

    #[test]
    fn sigma_s3_characteristic_two() {
        let cert = sigma(&regular(&s3(), 2), &limits()).unwrap();
        assert_eq!(cert.value, 3);
        let verdicts: Vec<bool> = cert.per_degree.iter().map(|e| e.cuts_out_origin).collect();
        assert_eq!(verdicts, vec![false, false, true]);
        assert_eq!(cert.per_degree[2].invariant_dims, vec![1, 5, 10]);
    }

    #[test]
    fn sigma_a4_paper_module() {
        let cert = sigma(&a4_paper_rep(), &limits()).unwrap();
        assert_eq!(cert.value, 4);
        let verdicts: Vec<bool> = cert.per_degree.iter().map(|e| e.cuts_out_origin).collect();
        assert_eq!(verdicts, vec![false, false, false, true]);
        assert_eq!(cert.per_degree[3].invariant_dims, vec![0, 1, 1, 2]);
    }

    #[test]
    fn sigma_of_zqzd_summands() {
        let lim = limits();
        let values: Vec<u32> = (0..3)
            .map(|i| {
                let v = crate::rep::zqzd_summand(3, 2, 2, i, &lim).unwrap();
                sigma(&v, &lim).unwrap().value
            })
            .collect();
        assert_eq!(values, vec![2, 3, 3]);
    }

    #[test]
    fn delta_values() {
        // regular modules: delta equals the Sylow order
        let cert = delta(&regular(&s3(), 3), &limits()).unwrap();
        assert_eq!(cert.value, 3);
        let cert = delta(&regular(&s3(), 2), &limits()).unwrap();
        assert_eq!(cert.value, 2);
        let z4 = group(&[vec![1, 2, 3, 0]]);
        assert_eq!(delta(&regular(&z4, 2), &limits()).unwrap().value, 4);

        // no nonzero fixed points: delta is 0 with an empty log
        let cert = delta(&a4_paper_rep(), &limits()).unwrap();
        assert_eq!(cert.value, 0);
        assert!(cert.per_degree.is_empty());
    }

    #[test]
    fn fast_path_matches_definition() {
        let lim = limits();
        let cases: Vec<(Arc<Group>, u32)> = vec![
            (s3(), 2),
            (s3(), 3),
            (s3(), 5),
            (group(&[vec![1, 2, 3, 0]]), 2),
            (group(&[vec![1, 0, 3, 2], vec![1, 2, 0, 3]]), 2),
        ];
        for (g, p) in cases {
            let fast = delta_vreg_fast(&g, p, &lim).unwrap();
            let slow = delta(&regular(&g, p), &lim).unwrap();
            assert_eq!(fast.value, slow.value, "group order {} p {}", g.order(), p);
            assert!(!fast.witness_value.is_zero());
        }
    }

    #[test]
    fn fast_path_witness_values() {
        let lim = limits();
        let f = delta_vreg_fast(&s3(), 3, &lim).unwrap();
        assert_eq!(f.value, 3);
        assert_eq!(f.witness_value.coeffs()[0], 2); // 6/3 = 2 mod 3

        let a4 = group(&[vec![1, 0, 3, 2], vec![1, 2, 0, 3]]);
        let f = delta_vreg_fast(&a4, 2, &lim).unwrap();
        assert_eq!(f.value, 4);
        assert_eq!(f.witness_value.coeffs()[0], 1); // 12/4 = 3, odd

        let f = delta_vreg_fast(&s3(), 5, &lim).unwrap();
        assert_eq!(f.value, 1);
        assert_eq!(f.witness_value.coeffs()[0], 1); // 6 mod 5
    }

    #[test]
    fn certificate_shape_invariants() {
        for cert in [
            sigma(&regular(&s3(), 2), &limits()).unwrap(),
            delta(&regular(&s3(), 2), &limits()).unwrap(),
        ] {
            assert!(cert.value as usize <= cert.group_order);
            let last = cert.per_degree.last().unwrap();
            assert!(last.cuts_out_origin);
            if cert.value > 1 {
                let prev = &cert.per_degree[cert.per_degree.len() - 2];
                assert!(!prev.cuts_out_origin);
            }
            for w in &cert.witnesses {
                assert!(w.degree().unwrap() <= cert.value);
            }
            let js = cert.to_json();
            assert_eq!(js["value"].as_u64().unwrap() as u32, cert.value);
        }
    }

    #[test]
    fn lemma_checker() {
        assert!(check_lemma_nt(2, 3, 2).unwrap());
        assert!(check_lemma_nt(3, 2, 3).unwrap());
        for (p, q) in [(2u64, 7u64), (5, 4), (7, 6)] {
            assert!(check_lemma_nt(p, q, 1).unwrap());
        }
        assert!(check_lemma_nt(2, 2, 2).is_err()); // not coprime
    }

    #[test]
    fn bounds_report_s3() {
        let lim = limits();
        let g = s3();
        let v = regular(&g, 2);
        let entry = BoundsEntry {
            label: "regular".into(),
            sigma: Some(sigma(&v, &lim).unwrap()),
            delta: Some(delta(&v, &lim).unwrap()),
            twist_lower_bound: false,
        };
        let report = bounds_report(&g, 2, &[entry]).unwrap();
        assert!(report.all_hold());
        assert!(report.p_nilpotent);
        assert!(!report.sylow_normal);
        // the p-nilpotent bound applies and is tight: 3 = 6/2
        assert!(report
            .checks
            .iter()
            .any(|c| c.name.starts_with("p-nilpotent") && c.holds));

        // a fabricated violation is caught
        let mut bad_sigma = sigma(&v, &lim).unwrap();
        bad_sigma.value = 99;
        let bad = BoundsEntry {
            label: "broken".into(),
            sigma: Some(bad_sigma),
            delta: None,
            twist_lower_bound: false,
        };
        assert!(matches!(
            bounds_report(&g, 2, &[bad]),
            Err(Error::BoundViolation(_))
        ));
    }
}
