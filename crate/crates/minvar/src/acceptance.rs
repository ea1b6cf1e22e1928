//! The verification suite: twelve checks that reproduce the worked values
//! and inequalities the workbench is built around, exactly (no tolerances —
//! every number is an integer certified by the Groebner origin predicate).
//! Shared by the `verify paper` subcommand and the acceptance test target.

use crate::gb::cuts_out_origin;
use crate::gf::Field;
use crate::group::{sylow_subgroup, Group, Subgroup};
use crate::inv::{relative_lift, relative_norm_sigma_set};
use crate::linalg::Matrix;
use crate::poly::{is_invariant, parse_polynomial, Monomial, Polynomial};
use crate::rep::{
    group_from_matrices, induce, normalizer_twist_module, p_times_a_module, subgroup_to_group,
    zqzd_summand, Representation,
};
use crate::sigdel::{
    bounds_report, check_lemma_nt, delta, delta_vreg_fast, sigma, BoundsEntry,
};
use crate::{Limits, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Runs all criteria in order. Each runs independently; a failure in one
/// does not stop the others.
pub fn run_all(limits: &Limits) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .enumerate()
        .map(|(i, (name, f))| match f(limits) {
            Ok(detail) => CriterionResult {
                index: i + 1,
                name,
                passed: true,
                detail,
            },
            Err(e) => CriterionResult {
                index: i + 1,
                name,
                passed: false,
                detail: format!("{e}"),
            },
        })
        .collect()
}

type Criterion = fn(&Limits) -> Result<String>;

pub const CRITERIA: &[(&str, Criterion)] = &[
    ("delta of regular modules equals the Sylow order", c1),
    ("sigma(S3 regular) = 3 in characteristic 2", c2),
    ("sigma(S3 regular) = 6 in characteristic 3", c3),
    ("sigma(A4 3-dim) = 4 and the minimal cutting triple", c4),
    ("semidirect summands: max sigma = q and the base change", c5),
    ("product module certifies sigma = |P| exp(A) = |Z6|", c6),
    ("twisted normalizer module reaches sigma = 6", c7),
    ("inequality suite", c8),
    ("direct sums: sigma and delta take the max", c9),
    ("relative norm and lift constructions", c10),
    ("number-theory lemma brute force", c11),
    ("sigma(S4) = 12 sandwich at the inequality level", c12),
];

fn fail(msg: String) -> crate::Error {
    crate::Error::BoundViolation(msg)
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

// --- shared constructions ---

fn s3() -> Arc<Group> {
    Arc::new(Group::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], 512).unwrap())
}

fn z4() -> Arc<Group> {
    Arc::new(Group::from_permutations(&[vec![1, 2, 3, 0]], 512).unwrap())
}

fn z6() -> Arc<Group> {
    Arc::new(Group::from_permutations(&[vec![1, 2, 3, 4, 5, 0]], 512).unwrap())
}

fn a4() -> Arc<Group> {
    Arc::new(Group::from_permutations(&[vec![1, 0, 3, 2], vec![1, 2, 0, 3]], 512).unwrap())
}

fn regular(g: &Arc<Group>, p: u32, limits: &Limits) -> Result<Representation> {
    Representation::regular(Arc::clone(g), Field::prime(p)?, limits)
}

fn a4_paper_rep(limits: &Limits) -> Result<Representation> {
    let f = Field::prime(3)?;
    let rows = |r: [[u32; 3]; 3]| -> Result<Matrix> {
        Matrix::from_rows(
            r.iter()
                .map(|row| row.iter().map(|&c| f.from_u32(c)).collect())
                .collect(),
        )
    };
    let c = rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])?;
    let d = rows([[2, 0, 0], [0, 2, 0], [0, 0, 1]])?;
    Ok(group_from_matrices(vec![c, d], f, limits)?.1)
}

// --- criteria ---

/// delta(G, V_reg) = |P| on five instances, both by the degree iteration
/// and by the closed-form witness.
fn c1(limits: &Limits) -> Result<String> {
    let cases: [(Arc<Group>, u32, u32, &str); 5] = [
        (s3(), 2, 2, "S3 p=2"),
        (s3(), 3, 3, "S3 p=3"),
        (z4(), 2, 4, "Z4 p=2"),
        (a4(), 2, 4, "A4 p=2"),
        (s3(), 5, 1, "S3 p=5"),
    ];
    let mut parts = Vec::new();
    for (g, p, expected, label) in cases {
        let slow = delta(&regular(&g, p, limits)?, limits)?;
        let fast = delta_vreg_fast(&g, p, limits)?;
        expect(slow.value == expected, || {
            format!("{label}: delta() gave {}, expected {expected}", slow.value)
        })?;
        expect(fast.value == expected, || {
            format!("{label}: fast path gave {}, expected {expected}", fast.value)
        })?;
        expect(fast.sylow_order as u32 == expected, || {
            format!("{label}: Sylow order mismatch")
        })?;
        parts.push(format!("{label}: {expected}"));
    }
    Ok(parts.join(", "))
}

/// sigma(S3, V_reg) = 3 over F_2.
fn c2(limits: &Limits) -> Result<String> {
    let cert = sigma(&regular(&s3(), 2, limits)?, limits)?;
    expect(cert.value == 3, || format!("got {}", cert.value))?;
    Ok("sigma = 3, per-degree verdicts false,false,true".into())
}

/// sigma(S3, V_reg) = 6 over F_3.
fn c3(limits: &Limits) -> Result<String> {
    let cert = sigma(&regular(&s3(), 3, limits)?, limits)?;
    expect(cert.value == 6, || format!("got {}", cert.value))?;
    let dims = &cert.per_degree.last().unwrap().invariant_dims;
    expect(dims == &vec![1, 5, 10, 24, 42, 83], || {
        format!("invariant dims {dims:?}")
    })?;
    Ok("sigma = 6, invariant dims 1,5,10,24,42,83".into())
}

/// sigma(A4, paper module) = 4 over F_3; the displayed quadratic, cubic and
/// quartic cut out the origin and no two of them do.
fn c4(limits: &Limits) -> Result<String> {
    let v = a4_paper_rep(limits)?;
    let cert = sigma(&v, limits)?;
    expect(cert.value == 4, || format!("sigma gave {}", cert.value))?;

    let f = Field::prime(3)?;
    let triple = [
        parse_polynomial(&f, 3, "x1^2+x2^2+x3^2")?,
        parse_polynomial(&f, 3, "x1*x2*x3")?,
        parse_polynomial(&f, 3, "x1^4+x2^4+x3^4")?,
    ];
    for p in &triple {
        expect(is_invariant(&v, p)?, || format!("{p} is not invariant"))?;
    }
    let full = cuts_out_origin(&triple, &f, limits.basis_elements)?;
    expect(full.holds, || "triple does not cut out the origin".into())?;
    for drop in 0..3 {
        let sub: Vec<Polynomial> = triple
            .iter()
            .enumerate()
            .filter_map(|(i, g)| (i != drop).then(|| g.clone()))
            .collect();
        let check = cuts_out_origin(&sub, &f, limits.basis_elements)?;
        expect(!check.holds, || {
            format!("2-element subset without generator {drop} still cuts the origin")
        })?;
    }
    Ok("sigma = 4; triple cuts the origin minimally".into())
}

/// Semidirect-product summands: max sigma over the summands equals q for
/// (q, d, p) = (3, 2, 2) and (5, 4, 2), and the explicit base change
/// conjugates the regular module into the block sum of the summands.
fn c5(limits: &Limits) -> Result<String> {
    let mut parts = Vec::new();
    for (q, d, p) in [(3u32, 2u32, 2u32), (5, 4, 2)] {
        let summands: Vec<Representation> = (0..q)
            .map(|i| zqzd_summand(q, d, p, i, limits))
            .collect::<Result<_>>()?;
        let values: Vec<u32> = summands
            .iter()
            .map(|v| sigma(v, limits).map(|c| c.value))
            .collect::<Result<_>>()?;
        let max = *values.iter().max().unwrap();
        expect(max == q, || format!("(q,d)=({q},{d}): max sigma {max} != {q}"))?;
        let total_dim: usize = summands.iter().map(|v| v.dim()).sum();
        expect(total_dim == (q * d) as usize, || {
            format!("summand dimensions sum to {total_dim}")
        })?;
        verify_regular_decomposition(q, d, &summands, limits)?;
        parts.push(format!("(q={q},d={d}): sigma values {values:?}, base change ok"));
    }
    Ok(parts.join("; "))
}

/// Builds the change-of-basis matrix whose columns express the summand
/// bases inside the regular module and checks it conjugates every generator
/// matrix to the block sum of the summand matrices.
fn verify_regular_decomposition(
    q: u32,
    d: u32,
    summands: &[Representation],
    limits: &Limits,
) -> Result<()> {
    let group = Arc::clone(summands[0].group());
    let field = summands[0].field().clone();
    let vreg = Representation::regular(Arc::clone(&group), field.clone(), limits)?;
    let zeta = field.primitive_root_of_unity(q as u64)?;
    let n = group.order();
    let g_idx = group.generators()[0] as usize;
    let h_idx = group.generators()[1] as usize;
    let (q, d) = (q as usize, d as usize);
    let mut b = Matrix::zero(&field, n, n);
    for i in 0..q {
        for j in 0..d {
            let col = i * d + j;
            let gj = group.pow(g_idx, j as i64) as usize;
            for r in 0..q {
                let hr = group.pow(h_idx, r as i64) as usize;
                let elem = group.mul(gj, hr) as usize;
                // zeta^{-i r}
                let e = (q - i * r % q) % q;
                *b.at_mut(elem, col) = field.pow(&zeta, e as u64);
            }
        }
    }
    expect(b.inverse(&field).is_some(), || {
        "base change matrix is singular".into()
    })?;
    for &x in group.generators() {
        let lhs = vreg.matrix(x as usize).mul(&b, &field);
        let mut block = Matrix::zero(&field, n, n);
        for (i, s) in summands.iter().enumerate() {
            let m = s.matrix(x as usize);
            for a in 0..d {
                for c in 0..d {
                    *block.at_mut(i * d + a, i * d + c) = m.at(a, c).clone();
                }
            }
        }
        let rhs = b.mul(&block, &field);
        expect(lhs == rhs, || {
            format!("conjugation fails on generator {}", group.label(x as usize))
        })?;
    }
    Ok(())
}

/// The scaled product module of Z2 x Z3 reaches sigma = 6 = |P| exp(A) =
/// |Z6|; combined with the subgroup chain this pins sigma of the regular
/// module, which is also computed directly.
fn c6(limits: &Limits) -> Result<String> {
    let z2 = Group::from_permutations(&[vec![1, 0]], 512)?;
    let v = p_times_a_module(&z2, &[3], 2, limits)?;
    let cert = sigma(&v, limits)?;
    expect(cert.value == 6, || format!("family module gave {}", cert.value))?;
    expect(v.group().order() == 6, || "group is not Z6".into())?;
    // 6 = sigma(V) <= sigma(V_reg) <= |G| = 6 pins the regular value; it is
    // cheap enough here to also certify it directly over F_2
    let direct = sigma(&regular(&z6(), 2, limits)?, limits)?;
    expect(direct.value == 6, || {
        format!("direct regular computation gave {}", direct.value)
    })?;
    Ok("family module sigma = 6; direct sigma(Z6 regular, char 2) = 6".into())
}

/// The twisted-normalizer module for Z3 x| Z2 in characteristic 3 reaches
/// sigma = 6, matching sigma of the regular module from criterion 3.
fn c7(limits: &Limits) -> Result<String> {
    let z3 = Group::from_permutations(&[vec![1, 2, 0]], 512)?;
    let inv_auto: Vec<u32> = (0..3).map(|i| z3.inv(i)).collect();
    let tw = normalizer_twist_module(&z3, &inv_auto, 2, 3, limits)?;
    let cert = sigma(&tw, limits)?;
    expect(cert.value == 6, || format!("twist module gave {}", cert.value))?;
    let reg = sigma(&regular(&s3(), 3, limits)?, limits)?;
    expect(reg.value == cert.value, || {
        format!("regular gave {} but twist gave {}", reg.value, cert.value)
    })?;
    // the bounds report asserts the normalizer lower bound from this module
    let entries = vec![BoundsEntry {
        label: "twist".into(),
        sigma: Some(cert),
        delta: None,
        twist_lower_bound: true,
    }];
    let report = bounds_report(tw.group(), 3, &entries)?;
    expect(report.normalizer_order == 6, || "N_G(P) should be all of G".into())?;
    Ok("twist sigma = 6 = regular sigma; normalizer bound 6 >= 6".into())
}

/// The theorem-level inequalities on computed certificates.
fn c8(limits: &Limits) -> Result<String> {
    // delta <= sigma per module and sigma <= |G|, via the bounds report
    let s3g = s3();
    let v2 = regular(&s3g, 2, limits)?;
    let sigma2 = sigma(&v2, limits)?;
    let entries = vec![BoundsEntry {
        label: "S3 regular char 2".into(),
        sigma: Some(sigma2.clone()),
        delta: Some(delta(&v2, limits)?),
        twist_lower_bound: false,
    }];
    let report = bounds_report(&s3g, 2, &entries)?;
    expect(report.p_nilpotent && !report.sylow_normal, || {
        "S3 should be 2-nilpotent with non-normal Sylow".into()
    })?;
    // the |G|/l bound is tight here: sigma = 3 = 6/2
    expect(sigma2.value == 3 && s3g.order() / 2 == 3, || {
        "p-nilpotent bound is not tight".into()
    })?;

    let mut checked = vec!["S3 char 2: delta 2 <= sigma 3 <= 6/2".to_string()];

    for (v, label) in [
        (regular(&s3g, 3, limits)?, "S3 regular char 3"),
        (regular(&z4(), 2, limits)?, "Z4 regular char 2"),
        (a4_paper_rep(limits)?, "A4 3-dim char 3"),
    ] {
        let s = sigma(&v, limits)?;
        let d = delta(&v, limits)?;
        expect(d.value <= s.value, || {
            format!("{label}: delta {} > sigma {}", d.value, s.value)
        })?;
        expect(s.value as usize <= v.group().order(), || {
            format!("{label}: sigma exceeds the group order")
        })?;
        checked.push(format!("{label}: {} <= {}", d.value, s.value));
    }

    // restriction only shrinks sigma
    let a3 = sylow_subgroup(&s3g, 3);
    let restricted = v2.restrict(&a3)?;
    let s_res = sigma(&restricted, limits)?;
    expect(s_res.value <= sigma2.value, || {
        format!("restriction grew sigma: {} > {}", s_res.value, sigma2.value)
    })?;
    let z4g = z4();
    let v4 = regular(&z4g, 2, limits)?;
    let s4full = sigma(&v4, limits)?;
    let z2_sub = Subgroup::generated(&z4g, &[z4g.mul(1, 1)]);
    let s_res2 = sigma(&v4.restrict(&z2_sub)?, limits)?;
    expect(s_res2.value <= s4full.value, || {
        format!("restriction grew sigma: {} > {}", s_res2.value, s4full.value)
    })?;
    checked.push(format!(
        "restrictions: {} <= {} and {} <= {}",
        s_res.value, sigma2.value, s_res2.value, s4full.value
    ));

    // induction only grows sigma
    let (a3_group, _) = subgroup_to_group(&s3g, &a3)?;
    let a3_group = Arc::new(a3_group);
    let h_rep = Representation::regular(Arc::clone(&a3_group), Field::prime(2)?, limits)?;
    let s_h = sigma(&h_rep, limits)?;
    let ind = induce(&h_rep, &s3g, &a3, limits)?;
    let s_ind = sigma(&ind, limits)?;
    expect(s_h.value <= s_ind.value, || {
        format!("induction shrank sigma: {} > {}", s_h.value, s_ind.value)
    })?;
    let (z2_group, _) = subgroup_to_group(&z4g, &z2_sub)?;
    let z2_group = Arc::new(z2_group);
    let h_rep2 = Representation::regular(Arc::clone(&z2_group), Field::prime(2)?, limits)?;
    let s_h2 = sigma(&h_rep2, limits)?;
    let ind2 = induce(&h_rep2, &z4g, &z2_sub, limits)?;
    let s_ind2 = sigma(&ind2, limits)?;
    expect(s_h2.value <= s_ind2.value, || {
        format!("induction shrank sigma: {} > {}", s_h2.value, s_ind2.value)
    })?;
    checked.push(format!(
        "inductions: {} <= {} and {} <= {}",
        s_h.value, s_ind.value, s_h2.value, s_ind2.value
    ));

    Ok(checked.join("; "))
}

/// sigma and delta of a direct sum are the max over the summands, on ten
/// seeded random pairs from a small module zoo.
fn c9(limits: &Limits) -> Result<String> {
    let f2 = Field::prime(2)?;
    let s3g = s3();
    let z4g = z4();
    let a3 = sylow_subgroup(&s3g, 3);
    let z2_in_s3 = sylow_subgroup(&s3g, 2);
    let z2_in_z4 = Subgroup::generated(&z4g, &[z4g.mul(1, 1)]);

    let s3_zoo: Vec<Representation> = vec![
        Representation::trivial(Arc::clone(&s3g), f2.clone()),
        Representation::coset_permutation(Arc::clone(&s3g), f2.clone(), &a3, limits)?,
        Representation::coset_permutation(Arc::clone(&s3g), f2.clone(), &z2_in_s3, limits)?,
        regular(&s3g, 2, limits)?,
    ];
    let z4_zoo: Vec<Representation> = vec![
        Representation::trivial(Arc::clone(&z4g), f2.clone()),
        Representation::coset_permutation(Arc::clone(&z4g), f2.clone(), &z2_in_z4, limits)?,
        regular(&z4g, 2, limits)?,
    ];

    let mut rng = ChaCha8Rng::seed_from_u64(0x5ed_d1ce);
    let mut lines = Vec::new();
    for pair_idx in 0..10 {
        let zoo = if pair_idx % 2 == 0 { &s3_zoo } else { &z4_zoo };
        let a = &zoo[rng.random_range(0..zoo.len())];
        let b = &zoo[rng.random_range(0..zoo.len())];
        let sum = a.direct_sum(b)?;
        let (sa, sb, ss) = (
            sigma(a, limits)?.value,
            sigma(b, limits)?.value,
            sigma(&sum, limits)?.value,
        );
        expect(ss == sa.max(sb), || {
            format!("pair {pair_idx}: sigma(sum) = {ss}, parts {sa} and {sb}")
        })?;
        let (da, db, ds) = (
            delta(a, limits)?.value,
            delta(b, limits)?.value,
            delta(&sum, limits)?.value,
        );
        expect(ds == da.max(db), || {
            format!("pair {pair_idx}: delta(sum) = {ds}, parts {da} and {db}")
        })?;
        lines.push(format!("{sa}+{sb}->{ss}/{da}+{db}->{ds}"));
    }
    Ok(format!("10 pairs: {}", lines.join(" ")))
}

/// Relative norm outputs are invariant and inherit the origin property;
/// lifted composites are invariant on the worked shapes.
fn c10(limits: &Limits) -> Result<String> {
    // Z2 with the trivial subgroup
    let z2g = Arc::new(Group::from_permutations(&[vec![1, 0]], 512)?);
    let f2 = Field::prime(2)?;
    let v = Representation::regular(Arc::clone(&z2g), f2.clone(), limits)?;
    let fs = vec![
        Polynomial::variable(2, 0, &f2),
        Polynomial::variable(2, 1, &f2),
    ];
    let fs_check = cuts_out_origin(&fs, &f2, limits.basis_elements)?;
    expect(fs_check.holds, || "input set should cut the origin".into())?;
    let out = relative_norm_sigma_set(&v, &Subgroup::trivial(), &fs)?;
    for p in &out {
        expect(is_invariant(&v, p)?, || format!("{p} not invariant"))?;
    }
    let out_check = cuts_out_origin(&out, &f2, limits.basis_elements)?;
    expect(out_check.holds, || "norm output lost the origin".into())?;

    // S3 with A3: orbit-wise elementary symmetric functions form the input
    let s3g = s3();
    let vs3 = regular(&s3g, 2, limits)?;
    let a3 = sylow_subgroup(&s3g, 3);
    let orbit_a: Vec<usize> = a3.members().iter().map(|&m| m as usize).collect();
    let orbit_b: Vec<usize> = (0..6).filter(|i| !orbit_a.contains(i)).collect();
    let mut fs = Vec::new();
    for orbit in [&orbit_a, &orbit_b] {
        for k in 1..=3 {
            fs.push(elementary_symmetric(6, orbit, k, &f2));
        }
    }
    for f in &fs {
        for &m in a3.members() {
            expect(crate::poly::act(&vs3, m as usize, f)? == *f, || {
                "input not fixed by the subgroup".into()
            })?;
        }
    }
    let fs_check = cuts_out_origin(&fs, &f2, limits.basis_elements)?;
    expect(fs_check.holds, || "subgroup set should cut the origin".into())?;
    let out = relative_norm_sigma_set(&vs3, &a3, &fs)?;
    for p in &out {
        expect(is_invariant(&vs3, p)?, || format!("{p} not invariant"))?;
        expect(
            p.degree().unwrap_or(0) <= 2 * 3, // [G:H] * max deg
            || "norm output exceeds the degree bound".into(),
        )?;
    }
    let out_check = cuts_out_origin(&out, &f2, limits.basis_elements)?;
    expect(out_check.holds, || "norm output lost the origin".into())?;

    // lifted composites on the three worked shapes
    let whole = Subgroup::whole(&z2g);
    let e1 = crate::inv::invariant_basis(&v, 1, limits.monomials)?.basis()[0].clone();
    let h = Polynomial::variable(1, 0, &f2);
    let lifted = relative_lift(&v, &whole, &[e1.clone()], &h)?;
    expect(lifted == e1 && is_invariant(&v, &lifted)?, || {
        "whole-group lift is not the identity".into()
    })?;
    let fs_xy = vec![
        Polynomial::variable(2, 0, &f2),
        Polynomial::variable(2, 1, &f2),
    ];
    let h_prod = parse_polynomial(&f2, 4, "x1*x2")?;
    let lifted = relative_lift(&v, &Subgroup::trivial(), &fs_xy, &h_prod)?;
    expect(lifted.render() == "x1*x2" && is_invariant(&v, &lifted)?, || {
        "product lift mismatch".into()
    })?;
    let f3 = Field::prime(3)?;
    let v3 = Representation::regular(Arc::clone(&z2g), f3.clone(), limits)?;
    let fs3 = vec![
        Polynomial::variable(2, 0, &f3),
        Polynomial::variable(2, 1, &f3),
    ];
    let h_sum = parse_polynomial(&f3, 4, "x1+x2")?;
    let lifted = relative_lift(&v3, &Subgroup::trivial(), &fs3, &h_sum)?;
    expect(lifted.render() == "x1+x2" && is_invariant(&v3, &lifted)?, || {
        "sum lift mismatch".into()
    })?;

    Ok(format!(
        "norm outputs invariant and cutting on both instances ({} and {} polynomials); lifts ok",
        2, out.len()
    ))
}

fn elementary_symmetric(nvars: usize, vars: &[usize], k: usize, field: &Field) -> Polynomial {
    let mut terms = Vec::new();
    let mut subset = vec![0usize; k];
    build(&mut terms, &mut subset, vars, 0, 0, nvars);
    fn build(
        terms: &mut Vec<Monomial>,
        subset: &mut Vec<usize>,
        vars: &[usize],
        start: usize,
        depth: usize,
        nvars: usize,
    ) {
        if depth == subset.len() {
            let mut exps = vec![0u16; nvars];
            for &s in subset.iter() {
                exps[vars[s]] = 1;
            }
            terms.push(Monomial::from_exponents(&exps));
            return;
        }
        for i in start..vars.len() {
            subset[depth] = i;
            build(terms, subset, vars, i + 1, depth + 1, nvars);
        }
    }
    let terms: Vec<(Monomial, crate::gf::FieldElement)> =
        terms.into_iter().map(|m| (m, field.one())).collect();
    Polynomial::from_terms(nvars, terms, field)
}

/// All coprime pairs up to 7 with exponents up to 3.
fn c11(_limits: &Limits) -> Result<String> {
    let mut count = 0;
    for p in 1..=7u64 {
        for q in 1..=7u64 {
            if gcd(p, q) != 1 {
                continue;
            }
            for s in 1..=3u32 {
                expect(check_lemma_nt(p, q, s)?, || {
                    format!("lemma fails at p={p} q={q} s={s}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} coprime triples verified"))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// sigma(S4) = 12 is out of desk scope (the 24-dimensional regular module
/// exceeds the configured caps); the sandwich is certified at the
/// inequality level instead, with both ends computed: the twisted module of
/// the Klein four subgroup of A4 reaches 12, and the S3 value caps the top.
fn c12(limits: &Limits) -> Result<String> {
    // upper end: sigma(S4) <= sigma(S3) * [S4 : S3] = 3 * 4
    let s_s3 = sigma(&regular(&s3(), 2, limits)?, limits)?;
    expect(s_s3.value == 3, || format!("sigma(S3) gave {}", s_s3.value))?;
    let upper = s_s3.value * 4;

    // lower end: sigma(A4) >= 12 via the twisted module of the Klein four
    // group, and sigma(A4) <= sigma(S4) since A4 is a subgroup
    let v4 = Group::from_permutations(&[vec![1, 0, 3, 2], vec![2, 3, 0, 1]], 512)?;
    let auto: Vec<u32> = vec![0, 2, 3, 1]; // cycles the three involutions
    let tw = normalizer_twist_module(&v4, &auto, 3, 2, limits)?;
    expect(tw.group().order() == 12, || "twist group is not A4".into())?;
    let s_tw = sigma(&tw, limits)?;
    expect(s_tw.value == 12, || format!("A4 twist gave {}", s_tw.value))?;

    // feasible A4 modules in characteristic 2 stay under the cap
    let a4g = a4();
    let f2 = Field::prime(2)?;
    let v4_sub = sylow_subgroup(&a4g, 2);
    let coset3 = Representation::coset_permutation(Arc::clone(&a4g), f2.clone(), &v4_sub, limits)?;
    let s_c3 = sigma(&coset3, limits)?;
    let z3_sub = sylow_subgroup(&a4g, 3);
    let natural4 =
        Representation::coset_permutation(Arc::clone(&a4g), f2.clone(), &z3_sub, limits)?;
    let s_n4 = sigma(&natural4, limits)?;
    expect(s_c3.value <= 12 && s_n4.value <= 12, || {
        "desk-scale module exceeded the group bound".into()
    })?;

    expect(s_tw.value <= upper, || {
        format!("sandwich collapsed: {} > {}", s_tw.value, upper)
    })?;
    Ok(format!(
        "sigma(S4) = 12 not recomputed (24-dim regular module is past desk scale); \
         certified 12 = sigma(A4 twist) <= sigma(S4) <= sigma(S3) * 4 = {upper}; \
         desk A4 modules: coset-3 sigma {}, natural-4 sigma {}",
        s_c3.value, s_n4.value
    ))
}
