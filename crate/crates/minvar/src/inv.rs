//! Graded invariant spaces and the constructions that move invariants
//! between groups: averaging, transfer along a transversal, the relative
//! norm (coefficients of a product over cosets), and the lifted composite
//! invariant for a normal subgroup.
//!
//! A graded basis is computed degree by degree as the joint kernel of
//! `act(g) - id` on the degree-`d` coefficient space, generators only (the
//! homomorphism law extends invariance to the whole group). Monomial actions
//! — permutation modules and the diagonal families — take a fast path that
//! walks monomial orbits and solves the scalar consistency constraints
//! along the way; the result is identical to the kernel route, reduced
//! echelon against the grevlex monomial list.

use crate::gf::{Field, FieldElement};
use crate::group::Subgroup;
use crate::linalg::Matrix;
use crate::poly::{
    act, apply_matrix, monomials_of_degree, Monomial, MonomialSubstitution, Polynomial,
};
use crate::rep::Representation;
use crate::{Error, Result};
use std::collections::HashMap;

/// Basis of the degree-`d` invariants of one module: homogeneous, linearly
/// independent, reduced-echelon against the grevlex monomial list, listed by
/// descending leading monomial.
#[derive(Clone, Debug)]
pub struct GradedInvariantBasis {
    degree: u32,
    basis: Vec<Polynomial>,
}

impl GradedInvariantBasis {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Polynomial> {
        self.basis
    }
}

/// Basis of the invariants of degree exactly `d`.
pub fn invariant_basis(
    v: &Representation,
    d: u32,
    monomial_cap: usize,
) -> Result<GradedInvariantBasis> {
    let gens = v.group().generators();
    let field = v.field();
    let monomial_subs: Option<Vec<MonomialSubstitution>> = gens
        .iter()
        .map(|&g| MonomialSubstitution::from_matrix(v.inverse_matrix(g as usize)))
        .collect();
    let basis = match monomial_subs {
        Some(subs) => orbit_basis(v.dim(), d, &subs, field, monomial_cap)?,
        None => kernel_basis_for_degree(v, d, monomial_cap)?,
    };
    Ok(GradedInvariantBasis { degree: d, basis })
}

/// Bases for all degrees `1..=d` (degree-0 constants are never included).
pub fn invariants_up_to(
    v: &Representation,
    d: u32,
    monomial_cap: usize,
) -> Result<Vec<GradedInvariantBasis>> {
    (1..=d).map(|k| invariant_basis(v, k, monomial_cap)).collect()
}

/// Orbit walk for monomial actions. Each orbit of monomials carries scalar
/// constraints `c_{g(m)} = mu_g(m) * c_m`; a consistent orbit contributes one
/// basis element, an inconsistent one contributes nothing.
fn orbit_basis(
    nvars: usize,
    d: u32,
    subs: &[MonomialSubstitution],
    field: &Field,
    monomial_cap: usize,
) -> Result<Vec<Polynomial>> {
    let monomials = monomials_of_degree(nvars, d, monomial_cap)?;
    let index: HashMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut coeff: Vec<Option<FieldElement>> = vec![None; monomials.len()];
    let mut visited = vec![false; monomials.len()];
    let mut basis = Vec::new();

    for start in 0..monomials.len() {
        if visited[start] {
            continue;
        }
        let mut orbit = vec![start];
        coeff[start] = Some(field.one());
        visited[start] = true;
        let mut head = 0;
        let mut consistent = true;
        while head < orbit.len() {
            let cur = orbit[head];
            head += 1;
            let c_cur = coeff[cur].clone().expect("set when enqueued");
            for sub in subs {
                let (img, scalar) = sub.apply(&monomials[cur], field);
                let img_idx = *index.get(&img).expect("action preserves the degree");
                let required = field.mul(&c_cur, &scalar);
                match &coeff[img_idx] {
                    Some(existing) => {
                        if *existing != required {
                            consistent = false;
                        }
                    }
                    None => {
                        coeff[img_idx] = Some(required);
                        visited[img_idx] = true;
                        orbit.push(img_idx);
                    }
                }
            }
        }
        if !consistent {
            continue;
        }
        // normalize so the largest monomial of the orbit has coefficient 1
        orbit.sort_unstable();
        let lead = orbit[0]; // the monomial list is grevlex descending
        let lead_coeff = coeff[lead].clone().unwrap();
        let scale = field.inv(&lead_coeff).expect("orbit scalars are nonzero");
        let terms: Vec<(Monomial, FieldElement)> = orbit
            .iter()
            .map(|&i| {
                (
                    monomials[i].clone(),
                    field.mul(coeff[i].as_ref().unwrap(), &scale),
                )
            })
            .collect();
        basis.push(Polynomial::from_terms(nvars, terms, field));
    }
    basis.sort_unstable_by(|a, b| {
        let (la, _) = a.leading_term().unwrap();
        let (lb, _) = b.leading_term().unwrap();
        lb.cmp(la)
    });
    Ok(basis)
}

/// Definitional route: kernel of the stacked `action - id` on the degree-`d`
/// coefficient space. Works for any matrix action; quadratic in the number
/// of monomials, so only sensible at small dimension.
pub fn kernel_basis_for_degree(
    v: &Representation,
    d: u32,
    monomial_cap: usize,
) -> Result<Vec<Polynomial>> {
    let field = v.field();
    let monomials = monomials_of_degree(v.dim(), d, monomial_cap)?;
    let n = monomials.len();
    let index: HashMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let gens = v.group().generators();
    let mut rows: Vec<Vec<FieldElement>> = Vec::with_capacity(gens.len() * n);
    for &g in gens {
        let mat = v.inverse_matrix(g as usize);
        // action matrix, column per source monomial
        let mut action = vec![vec![field.zero(); n]; n];
        for (j, m) in monomials.iter().enumerate() {
            let image = apply_matrix(&Polynomial::monomial(m.clone(), field.one()), mat, field)?;
            for (im, ic) in image.terms() {
                action[index[im]][j] = ic.clone();
            }
        }
        for (i, mut row) in action.into_iter().enumerate() {
            row[i] = field.sub(&row[i], &field.one());
            rows.push(row);
        }
    }
    let stacked = Matrix::from_rows(rows)?;
    let kernel = stacked.kernel_basis(field);
    Ok(kernel
        .into_iter()
        .map(|vec| {
            let terms: Vec<(Monomial, FieldElement)> = vec
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (monomials[i].clone(), c))
                .collect();
            Polynomial::from_terms(v.dim(), terms, field)
        })
        .collect())
}

/// Classical averaging projection; only defined away from the modular case.
pub fn reynolds(v: &Representation, f: &Polynomial) -> Result<Polynomial> {
    let field = v.field();
    let order = v.group().order();
    let order_in_field = field.from_u32((order as u64 % field.characteristic() as u64) as u32);
    if order_in_field.is_zero() {
        return Err(Error::ModularGroupOrder {
            order,
            p: field.characteristic(),
        });
    }
    let mut acc = Polynomial::zero(f.nvars());
    for g in 0..order {
        acc = acc.add(&act(v, g, f)?, field);
    }
    let scale = field.inv(&order_in_field)?;
    Ok(acc.scale(&scale, field))
}

/// Transfer of an `H`-invariant along the fixed left transversal of `H`:
/// the sum of its translates, a `G`-invariant.
pub fn transfer(v: &Representation, h: &Subgroup, f: &Polynomial) -> Result<Polynomial> {
    require_subgroup_invariant(v, h, f)?;
    let field = v.field();
    let mut acc = Polynomial::zero(f.nvars());
    for &t in &h.left_transversal(v.group()) {
        acc = acc.add(&act(v, t as usize, f)?, field);
    }
    Ok(acc)
}

fn require_subgroup_invariant(v: &Representation, h: &Subgroup, f: &Polynomial) -> Result<()> {
    for &g in &h.generating_set(v.group()) {
        if act(v, g as usize, f)? != *f {
            return Err(Error::NotInvariant(format!(
                "not fixed by subgroup element {}",
                v.group().label(g as usize)
            )));
        }
    }
    Ok(())
}

/// Relative norm construction: forms `z(T) = prod_i t_i(sum_j f_j T^(j-1))`
/// over the left transversal of `H` and returns the distinct nonzero
/// coefficients of `z` as a polynomial in `T`, in ascending `T`-degree of
/// first appearance. Every output is `G`-invariant, of degree at most
/// `[G:H] * max deg(f_j)`; when the input is a sigma-set for `H`, the output
/// is a sigma-set for `G`.
pub fn relative_norm_sigma_set(
    v: &Representation,
    h: &Subgroup,
    fs: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    if fs.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let field = v.field();
    for f in fs {
        require_subgroup_invariant(v, h, f)?;
        if !f.constant_coefficient(field).is_zero() {
            return Err(Error::NotInvariant(
                "relative norm inputs need zero constant term".into(),
            ));
        }
    }
    let nvars = v.dim();
    let t_var = nvars; // T is appended as the last variable
    let reps = h.left_transversal(v.group());
    let mut z = Polynomial::constant(nvars + 1, field.one());
    for &t in &reps {
        let mut factor = Polynomial::zero(nvars + 1);
        for (j, f) in fs.iter().enumerate() {
            let moved = act(v, t as usize, f)?.extended(1);
            let mut exps = vec![0u16; nvars + 1];
            exps[t_var] = j as u16;
            let t_power = Polynomial::monomial(Monomial::from_exponents(&exps), field.one());
            factor = factor.add(&moved.mul(&t_power, field), field);
        }
        z = z.mul(&factor, field);
    }
    // collect coefficients by T-exponent
    let mut by_exp: Vec<Vec<(Monomial, FieldElement)>> = Vec::new();
    for (m, c) in z.terms() {
        let te = m.exponents()[t_var] as usize;
        if by_exp.len() <= te {
            by_exp.resize(te + 1, Vec::new());
        }
        let stripped = Monomial::from_exponents(&m.exponents()[..nvars]);
        by_exp[te].push((stripped, c.clone()));
    }
    let mut out: Vec<Polynomial> = Vec::new();
    for terms in by_exp {
        let p = Polynomial::from_terms(nvars, terms, field);
        if !p.is_zero() && !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Lifted composite invariant for a normal subgroup `N`: substitutes the
/// translates `t_i(f_j)` into an invariant `h` of the induced coset
/// permutation action on the `n*r` slot variables (slot `(i, j)` at index
/// `j*r + i`; a group element sends slot `(i, j)` to `(i', j)` where
/// `g t_i N = t_{i'} N`). The composite is `G`-invariant of degree at most
/// `deg(h) * max deg(f_j)`.
pub fn relative_lift(
    v: &Representation,
    n: &Subgroup,
    fs: &[Polynomial],
    h: &Polynomial,
) -> Result<Polynomial> {
    if fs.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let group = v.group().clone();
    let field = v.field();
    if !n.is_normal(&group) {
        return Err(Error::NotNormal);
    }
    for f in fs {
        require_subgroup_invariant(v, n, f)?;
    }
    let reps = n.left_transversal(&group);
    let r = reps.len();
    let slots = fs.len() * r;
    if h.nvars() != slots {
        return Err(Error::DimensionMismatch {
            expected: slots,
            got: h.nvars(),
        });
    }
    // coset index of each group element
    let mut coset_of = vec![usize::MAX; group.order()];
    for (ci, &t) in reps.iter().enumerate() {
        for &m in n.members() {
            coset_of[group.mul(t as usize, m as usize) as usize] = ci;
        }
    }
    // h must be fixed by every generator's slot permutation
    for &g in group.generators() {
        let mut slot_image = vec![0usize; slots];
        for (i, &t) in reps.iter().enumerate() {
            let i_new = coset_of[group.mul(g as usize, t as usize) as usize];
            for j in 0..fs.len() {
                slot_image[j * r + i] = j * r + i_new;
            }
        }
        if permute_variables(h, &slot_image) != *h {
            return Err(Error::NotInvariant(format!(
                "h is not fixed by the slot action of {}",
                group.label(g as usize)
            )));
        }
    }
    let mut forms = Vec::with_capacity(slots);
    for f in fs {
        for &t in &reps {
            forms.push(act(v, t as usize, f)?);
        }
    }
    h.substitute(&forms, field)
}

/// Applies the coordinate permutation `x_s -> x_{image[s]}`.
fn permute_variables(p: &Polynomial, image: &[usize]) -> Polynomial {
    let mut terms: Vec<(Monomial, FieldElement)> = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = vec![0u16; m.nvars()];
            for (s, &e) in m.exponents().iter().enumerate() {
                exps[image[s]] += e;
            }
            (Monomial::from_exponents(&exps), c.clone())
        })
        .collect();
    terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    Polynomial::from_sorted_terms(p.nvars(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{sylow_subgroup, Group};
    use crate::poly::{is_invariant, parse_polynomial};
    use crate::Limits;
    use std::sync::Arc;

    const CAP: usize = 1_000_000;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    fn z2_swap() -> Representation {
        let g = Arc::new(Group::from_permutations(&[vec![1, 0]], 64).unwrap());
        Representation::regular(g, f2(), &Limits::default()).unwrap()
    }

    fn s3_regular(field: Field) -> Representation {
        let g = Arc::new(Group::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], 64).unwrap());
        Representation::regular(g, field, &Limits::default()).unwrap()
    }

    fn a4_paper_rep() -> Representation {
        let f = f3();
        let c = Matrix::from_rows(vec![
            vec![f.zero(), f.zero(), f.one()],
            vec![f.one(), f.zero(), f.zero()],
            vec![f.zero(), f.one(), f.zero()],
        ])
        .unwrap();
        let d = Matrix::from_rows(vec![
            vec![f.from_u32(2), f.zero(), f.zero()],
            vec![f.zero(), f.from_u32(2), f.zero()],
            vec![f.zero(), f.zero(), f.one()],
        ])
        .unwrap();
        crate::rep::group_from_matrices(vec![c, d], f, &Limits::default())
            .unwrap()
            .1
    }

    #[test]
    fn degree_one_bases() {
        let v = z2_swap();
        let b = invariant_basis(&v, 1, CAP).unwrap();
        assert_eq!(b.dim(), 1);
        assert_eq!(b.basis()[0].render(), "x1+x2");

        let v = s3_regular(f2());
        let b = invariant_basis(&v, 1, CAP).unwrap();
        assert_eq!(b.dim(), 1);
        assert_eq!(b.basis()[0].terms().len(), 6);
    }

    #[test]
    fn z2_swap_degree_two() {
        let v = z2_swap();
        let bases = invariants_up_to(&v, 2, CAP).unwrap();
        let dims: Vec<usize> = bases.iter().map(|b| b.dim()).collect();
        assert_eq!(dims, vec![1, 2]);
        let rendered: Vec<String> = bases[1].basis().iter().map(|p| p.render()).collect();
        assert_eq!(rendered, vec!["x1^2+x2^2", "x1*x2"]);
    }

    #[test]
    fn paper_module_invariants() {
        let v = a4_paper_rep();
        let bases = invariants_up_to(&v, 4, CAP).unwrap();
        let dims: Vec<usize> = bases.iter().map(|b| b.dim()).collect();
        assert_eq!(dims, vec![0, 1, 1, 2]);
        assert_eq!(bases[1].basis()[0].render(), "x1^2+x2^2+x3^2");
        assert_eq!(bases[2].basis()[0].render(), "x1*x2*x3");
        // the quartic power sum lies in the degree-4 invariant space
        let f = f3();
        let mut r = parse_polynomial(&f, 3, "x1^4+x2^4+x3^4").unwrap();
        for b in bases[3].basis() {
            let (lm, _) = b.leading_term().unwrap();
            if let Some((_, c)) = r.terms().iter().find(|(m, _)| m == lm) {
                let c = c.clone();
                r = r.sub(&b.scale(&c, &f), &f);
            }
        }
        assert!(r.is_zero());
    }

    #[test]
    fn every_basis_element_is_invariant() {
        for v in [z2_swap(), s3_regular(f2()), s3_regular(f3()), a4_paper_rep()] {
            for b in invariants_up_to(&v, 3, CAP).unwrap() {
                for p in b.basis() {
                    assert!(is_invariant(&v, p).unwrap());
                    assert!(p.is_homogeneous());
                }
            }
        }
    }

    #[test]
    fn orbit_and_kernel_routes_agree() {
        let reps = [
            z2_swap(),
            s3_regular(f3()),
            a4_paper_rep(),
            crate::rep::zqzd_summand(3, 2, 2, 1, &Limits::default()).unwrap(),
        ];
        for v in reps {
            for d in 1..=4 {
                let fast = invariant_basis(&v, d, CAP).unwrap();
                let slow = kernel_basis_for_degree(&v, d, CAP).unwrap();
                assert_eq!(fast.basis(), &slow[..], "degree {d} disagreement");
            }
        }
    }

    /// Independent orbit-count oracle for permutation modules.
    #[test]
    fn permutation_invariant_dims_match_orbit_counts() {
        let v = s3_regular(f2());
        let g = v.group().clone();
        for d in 1..=4u32 {
            let monomials = monomials_of_degree(6, d, CAP).unwrap();
            let index: HashMap<&Monomial, usize> =
                monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut orbit_count = 0usize;
            let mut seen = vec![false; monomials.len()];
            for start in 0..monomials.len() {
                if seen[start] {
                    continue;
                }
                orbit_count += 1;
                let mut stack = vec![start];
                seen[start] = true;
                while let Some(cur) = stack.pop() {
                    for e in 0..g.order() {
                        let mut exps = vec![0u16; 6];
                        for (j, &ex) in monomials[cur].exponents().iter().enumerate() {
                            exps[g.mul(e, j) as usize] += ex;
                        }
                        let img = Monomial::from_exponents(&exps);
                        let idx = index[&img];
                        if !seen[idx] {
                            seen[idx] = true;
                            stack.push(idx);
                        }
                    }
                }
            }
            let dim = invariant_basis(&v, d, CAP).unwrap().dim();
            assert_eq!(dim, orbit_count, "degree {d}");
        }
    }

    #[test]
    fn reynolds_projection() {
        // Z3 regular over F_2: |G| = 3 is invertible
        let g = Arc::new(Group::from_permutations(&[vec![1, 2, 0]], 64).unwrap());
        let v = Representation::regular(g, f2(), &Limits::default()).unwrap();
        let f = v.field().clone();
        let x = Polynomial::variable(3, 0, &f);
        let avg = reynolds(&v, &x).unwrap();
        assert_eq!(avg.render(), "x1+x2+x3");
        // projection fixes invariants and is idempotent
        assert_eq!(reynolds(&v, &avg).unwrap(), avg);

        // modular case errors out
        let v = s3_regular(f3());
        let x6 = Polynomial::variable(6, 0, &f3());
        assert!(matches!(
            reynolds(&v, &x6),
            Err(Error::ModularGroupOrder { order: 6, p: 3 })
        ));
    }

    #[test]
    fn transfer_examples() {
        let v = z2_swap();
        let f = v.field().clone();
        let x = Polynomial::variable(2, 0, &f);
        // trivial subgroup: transfer is the full orbit sum of a variable
        let t = transfer(&v, &Subgroup::trivial(), &x).unwrap();
        assert_eq!(t.render(), "x1+x2");

        // transfer from the whole group is the identity on invariants
        let v = s3_regular(f2());
        let whole = Subgroup::whole(v.group());
        let inv = invariant_basis(&v, 1, CAP).unwrap().basis()[0].clone();
        assert_eq!(transfer(&v, &whole, &inv).unwrap(), inv);

        // A3-orbit sum of x_e transfers to the S3-orbit sum
        let a3 = sylow_subgroup(v.group(), 3);
        let m = Monomial::variable(6, 0);
        let o_a3 = crate::poly::orbit_sum(&v, &a3, &m).unwrap();
        let transferred = transfer(&v, &a3, &o_a3).unwrap();
        let whole_sum = crate::poly::orbit_sum(&v, &Subgroup::whole(v.group()), &m).unwrap();
        assert_eq!(transferred, whole_sum);

        // non-invariant inputs are rejected
        let x = Polynomial::variable(6, 0, &f2());
        assert!(matches!(transfer(&v, &a3, &x), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn relative_norm_z2() {
        let v = z2_swap();
        let f = v.field().clone();
        let fs = vec![
            Polynomial::variable(2, 0, &f),
            Polynomial::variable(2, 1, &f),
        ];
        let out = relative_norm_sigma_set(&v, &Subgroup::trivial(), &fs).unwrap();
        let rendered: Vec<String> = out.iter().map(|p| p.render()).collect();
        assert_eq!(rendered, vec!["x1*x2", "x1^2+x2^2"]);
        for p in &out {
            assert!(is_invariant(&v, p).unwrap());
        }
        // degree bound [G:H] * max deg
        for p in &out {
            assert!(p.degree().unwrap() <= 2);
        }
    }

    #[test]
    fn relative_norm_from_whole_group_returns_inputs() {
        let v = s3_regular(f2());
        let whole = Subgroup::whole(v.group());
        let fs: Vec<Polynomial> = invariants_up_to(&v, 2, CAP)
            .unwrap()
            .into_iter()
            .flat_map(|b| b.into_basis())
            .collect();
        let out = relative_norm_sigma_set(&v, &whole, &fs).unwrap();
        assert_eq!(out, fs);
    }

    #[test]
    fn relative_lift_examples() {
        // N = G: plain composition h(f1)
        let v = z2_swap();
        let f = v.field().clone();
        let whole = Subgroup::whole(v.group());
        let e1 = invariant_basis(&v, 1, CAP).unwrap().basis()[0].clone(); // x+y
        let h = Polynomial::variable(1, 0, &f);
        let lifted = relative_lift(&v, &whole, &[e1.clone()], &h).unwrap();
        assert_eq!(lifted, e1);

        // G = Z2, N trivial, fs = (x, y), h = X1*X2 on the two slots of f1
        let fs = vec![
            Polynomial::variable(2, 0, &f),
            Polynomial::variable(2, 1, &f),
        ];
        let h = parse_polynomial(&f, 4, "x1*x2").unwrap();
        let lifted = relative_lift(&v, &Subgroup::trivial(), &fs, &h).unwrap();
        assert_eq!(lifted.render(), "x1*x2");
        assert!(is_invariant(&v, &lifted).unwrap());

        // same shape over F_3 with h = X1 + X2
        let g = Arc::new(Group::from_permutations(&[vec![1, 0]], 64).unwrap());
        let v3 = Representation::regular(g, f3(), &Limits::default()).unwrap();
        let fs3 = vec![
            Polynomial::variable(2, 0, &f3()),
            Polynomial::variable(2, 1, &f3()),
        ];
        let h3 = parse_polynomial(&f3(), 4, "x1+x2").unwrap();
        let lifted = relative_lift(&v3, &Subgroup::trivial(), &fs3, &h3).unwrap();
        assert_eq!(lifted.render(), "x1+x2");
        assert!(is_invariant(&v3, &lifted).unwrap());

        // h that is not slot-invariant is rejected
        let bad_h = parse_polynomial(&f, 4, "x1").unwrap();
        assert!(matches!(
            relative_lift(&v, &Subgroup::trivial(), &fs, &bad_h),
            Err(Error::NotInvariant(_))
        ));

        // non-normal subgroup is rejected
        let vs3 = s3_regular(f2());
        let z2_sub = sylow_subgroup(vs3.group(), 2);
        let fs_triv = vec![Polynomial::variable(6, 0, &f2())];
        let h_any = Polynomial::variable(3, 0, &f2());
        assert!(matches!(
            relative_lift(&vs3, &z2_sub, &fs_triv, &h_any),
            Err(Error::NotNormal)
        ));
    }
}
