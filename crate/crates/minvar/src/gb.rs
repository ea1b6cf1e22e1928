//! Buchberger engine over `F_{p^k}` and the origin-certification predicate.
//!
//! The engine decides, exactly and over the algebraic closure, whether a set
//! of polynomials with zero constant term has `{0}` as its only common zero.
//! Radical membership of a single variable is decided by adjoining `t` and
//! testing whether `1` lies in `<gens, 1 - t*f>`; for homogeneous inputs the
//! whole check collapses to one reduced basis plus the staircase criterion
//! (every variable carries a pure-power leading term iff the common zero set
//! over the closure is the origin). Point enumeration over `F_{p^k}` is never
//! used to certify: only ideal-theoretic certificates count.

use crate::gf::{Field, FieldElement};
use crate::poly::{Monomial, Polynomial};
use crate::{Error, Result};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

/// Order tag carried by every basis (one global order, named for reports).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Grevlex,
}

/// Reduced Groebner basis: monic, auto-reduced, leading terms pairwise
/// non-divisible, listed by descending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Does the basis contain a nonzero constant (ideal is the whole ring)?
    pub fn is_unit_ideal(&self) -> bool {
        self.elements
            .iter()
            .any(|f| f.leading_term().is_some_and(|(m, _)| m.is_one()))
    }

    /// For each variable, the smallest exponent `e` such that `x_i^e` is a
    /// leading term of a basis element; `None` when there is none.
    pub fn pure_power_exponents(&self) -> Vec<Option<u32>> {
        let mut out = vec![None; self.nvars];
        for f in &self.elements {
            let (lm, _) = f.leading_term().expect("basis elements are nonzero");
            if lm.is_one() {
                // unit ideal: every variable is covered
                return vec![Some(0); self.nvars];
            }
            let mut support = lm.exponents().iter().enumerate().filter(|(_, &e)| e > 0);
            if let (Some((i, &e)), None) = (support.next(), support.next()) {
                let e = e as u32;
                match out[i] {
                    Some(prev) if prev <= e => {}
                    _ => out[i] = Some(e),
                }
            }
        }
        out
    }
}

/// Complete multivariate division remainder of `f` by `basis` (which need
/// not be a Groebner basis; the first divisor in list order is used, so the
/// result is deterministic).
pub fn normal_form_against(f: &Polynomial, basis: &[Polynomial], field: &Field) -> Polynomial {
    normal_form_skipping(f, basis, usize::MAX, field)
}

fn normal_form_skipping(
    f: &Polynomial,
    basis: &[Polynomial],
    skip: usize,
    field: &Field,
) -> Polynomial {
    let nvars = f.nvars();
    let mut remainder: Vec<(Monomial, FieldElement)> = Vec::new();
    let mut cur = f.clone();
    'outer: while let Some((lm, lc)) = cur.leading_term() {
        let (lm, lc) = (lm.clone(), lc.clone());
        for (bi, b) in basis.iter().enumerate() {
            if bi == skip {
                continue;
            }
            let (blm, blc) = b.leading_term().expect("basis elements are nonzero");
            if blm.divides(&lm) {
                let q = blm.divide_into(&lm);
                let scale = field.div(&lc, blc).expect("leading coefficients are nonzero");
                cur = cur.sub(&b.mul_term(&q, &scale, field), field);
                continue 'outer;
            }
        }
        remainder.push((lm, lc));
        cur = cur.without_leading();
    }
    // terms were collected in strictly decreasing order, no merging needed
    Polynomial::from_sorted_terms(nvars, remainder)
}

#[derive(PartialEq, Eq)]
struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.lcm
            .cmp(&other.lcm)
            .then(self.i.cmp(&other.i))
            .then(self.j.cmp(&other.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Buchberger with the normal selection strategy (minimal lcm in grevlex),
/// the coprime-leading-term criterion, and the chain criterion. `prefix`
/// must already be a reduced Groebner basis: its internal pairs are skipped,
/// which is what makes degree-by-degree extension cheap.
fn buchberger_core(
    prefix: &[Polynomial],
    new_gens: &[Polynomial],
    field: &Field,
    cap: usize,
    stop_on_unit: bool,
) -> Result<Vec<Polynomial>> {
    let nvars = prefix
        .first()
        .or(new_gens.first())
        .map(|f| f.nvars())
        .unwrap_or(0);
    let mut basis: Vec<Polynomial> = prefix.to_vec();
    let mut queue: BinaryHeap<Reverse<Pair>> = BinaryHeap::new();
    let mut considered: HashSet<(usize, usize)> = HashSet::new();
    // pairs internal to the prefix are settled by assumption
    for i in 0..prefix.len() {
        for j in i + 1..prefix.len() {
            considered.insert((i, j));
        }
    }

    fn push_element(
        basis: &mut Vec<Polynomial>,
        queue: &mut BinaryHeap<Reverse<Pair>>,
        considered: &mut HashSet<(usize, usize)>,
        f: Polynomial,
        field: &Field,
        cap: usize,
    ) -> Result<bool> {
        let (lm, lc) = f.leading_term().expect("nonzero");
        let (lm, lc) = (lm.clone(), lc.clone());
        let monic = if lc.is_one() {
            f
        } else {
            let inv = field.inv(&lc).expect("nonzero leading coefficient");
            f.scale(&inv, field)
        };
        let t = basis.len();
        if t >= cap {
            return Err(Error::CapExceeded {
                what: "basis elements",
                cap,
            });
        }
        for (i, b) in basis.iter().enumerate() {
            let (ilm, _) = b.leading_term().unwrap();
            if ilm.is_coprime_with(&lm) {
                considered.insert((i, t));
            } else {
                queue.push(Reverse(Pair {
                    lcm: ilm.lcm(&lm),
                    i,
                    j: t,
                }));
            }
        }
        basis.push(monic);
        Ok(lm.is_one())
    }

    for g in new_gens {
        let r = normal_form_against(g, &basis, field);
        if r.is_zero() {
            continue;
        }
        let unit = push_element(&mut basis, &mut queue, &mut considered, r, field, cap)?;
        if unit && stop_on_unit {
            return Ok(vec![Polynomial::constant(nvars, field.one())]);
        }
    }

    while let Some(Reverse(pair)) = queue.pop() {
        let key = (pair.i, pair.j);
        if considered.contains(&key) {
            continue;
        }
        considered.insert(key);
        // chain criterion: a third element whose leading term divides the
        // lcm, with both sub-pairs already accounted for
        let chain = (0..basis.len()).any(|k| {
            if k == pair.i || k == pair.j {
                return false;
            }
            let (klm, _) = basis[k].leading_term().unwrap();
            if !klm.divides(&pair.lcm) {
                return false;
            }
            let a = (pair.i.min(k), pair.i.max(k));
            let b = (pair.j.min(k), pair.j.max(k));
            considered.contains(&a) && considered.contains(&b)
        });
        if chain {
            continue;
        }
        let one = field.one();
        let s = {
            let fi = &basis[pair.i];
            let fj = &basis[pair.j];
            let (lmi, _) = fi.leading_term().unwrap();
            let (lmj, _) = fj.leading_term().unwrap();
            fi.mul_term(&lmi.divide_into(&pair.lcm), &one, field).sub(
                &fj.mul_term(&lmj.divide_into(&pair.lcm), &one, field),
                field,
            )
        };
        let r = normal_form_against(&s, &basis, field);
        if r.is_zero() {
            continue;
        }
        let unit = push_element(&mut basis, &mut queue, &mut considered, r, field, cap)?;
        if unit && stop_on_unit {
            return Ok(vec![Polynomial::constant(nvars, field.one())]);
        }
    }
    Ok(reduce_basis(basis, field))
}

/// Interreduction: minimalize leading terms, then fully reduce each tail.
fn reduce_basis(mut basis: Vec<Polynomial>, field: &Field) -> Vec<Polynomial> {
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lmi = basis[i].leading_term().unwrap().0.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (lmj, _) = basis[j].leading_term().unwrap();
            // drop j when i's leading term divides j's (ties keep the earlier)
            if lmi.divides(lmj) && (lmi != *lmj || i < j) {
                keep[j] = false;
            }
        }
    }
    let mut minimal: Vec<Polynomial> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(f, k)| k.then_some(f))
        .collect();
    // tail reduction: leading terms are now irreducible against each other
    for i in 0..minimal.len() {
        minimal[i] = normal_form_skipping(&minimal[i], &minimal, i, field);
    }
    minimal.retain(|f| !f.is_zero());
    minimal.sort_unstable_by(|a, b| {
        let (la, _) = a.leading_term().unwrap();
        let (lb, _) = b.leading_term().unwrap();
        lb.cmp(la)
    });
    minimal
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], field: &Field, cap: usize) -> Result<GroebnerBasis> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let nvars = gens[0].nvars();
    if let Some(bad) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            got: bad.nvars(),
        });
    }
    let nonzero: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let elements = buchberger_core(&[], &nonzero, field, cap, true)?;
    Ok(GroebnerBasis {
        nvars,
        order: MonomialOrder::Grevlex,
        elements,
    })
}

/// Extends an existing reduced basis by fresh generators.
pub fn buchberger_extend(
    basis: &GroebnerBasis,
    new_gens: &[Polynomial],
    field: &Field,
    cap: usize,
) -> Result<GroebnerBasis> {
    let elements = buchberger_core(&basis.elements, new_gens, field, cap, true)?;
    Ok(GroebnerBasis {
        nvars: basis.nvars,
        order: MonomialOrder::Grevlex,
        elements,
    })
}

/// Remainder of `f` modulo the basis; zero iff `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis, field: &Field) -> Polynomial {
    normal_form_against(f, &basis.elements, field)
}

/// Does `f` vanish on the common zero set of `gens` over the algebraic
/// closure? Decided by the extra-variable trick: `1 in <gens, 1 - t*f>`.
/// The fresh variable is appended last, so it is smallest in grevlex and
/// the original variables keep their order.
pub fn radical_membership(
    f: &Polynomial,
    gens: &[Polynomial],
    field: &Field,
    cap: usize,
) -> Result<bool> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let nvars = f.nvars();
    let mut all: Vec<Polynomial> = gens.iter().map(|g| g.extended(1)).collect();
    let t = Polynomial::variable(nvars + 1, nvars, field);
    let one = Polynomial::constant(nvars + 1, field.one());
    all.push(one.sub(&t.mul(&f.extended(1), field), field));
    let basis = buchberger(&all, field, cap)?;
    Ok(basis.is_unit_ideal())
}

/// How a per-variable radical membership verdict was certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadicalMethod {
    /// A pure power of the variable is a leading term of the reduced basis.
    Staircase { exponent: u32 },
    /// `x^e` reduced to zero against the basis.
    PowerMembership { exponent: u32 },
    /// Full extra-variable radical membership run.
    Rabinowitsch,
}

#[derive(Clone, Debug)]
pub struct VariableVerdict {
    /// 0-based variable index.
    pub variable: usize,
    pub in_radical: bool,
    pub method: RadicalMethod,
}

/// Result of [`cuts_out_origin`]: the aggregate verdict, the reduced basis
/// of the input ideal, and one certified verdict per variable.
#[derive(Clone, Debug)]
pub struct OriginCheck {
    pub holds: bool,
    pub basis: GroebnerBasis,
    pub variables: Vec<VariableVerdict>,
}

/// Certifies whether the common zero set of `gens` over the algebraic
/// closure is exactly the origin, with a per-variable report. Every
/// generator must have zero constant term (so the origin always lies in the
/// zero set); the verdict is `true` iff every variable lies in the radical.
pub fn cuts_out_origin(gens: &[Polynomial], field: &Field, cap: usize) -> Result<OriginCheck> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    for (i, g) in gens.iter().enumerate() {
        if !g.constant_coefficient(field).is_zero() {
            return Err(Error::NonzeroConstantTerm(i));
        }
    }
    let nvars = gens[0].nvars();
    let basis = buchberger(gens, field, cap)?;
    let homogeneous = gens.iter().all(|g| g.is_homogeneous());

    if homogeneous {
        let pure = basis.pure_power_exponents();
        if pure.iter().all(|e| e.is_some()) {
            let variables = pure
                .iter()
                .enumerate()
                .map(|(i, e)| VariableVerdict {
                    variable: i,
                    in_radical: true,
                    method: RadicalMethod::Staircase {
                        exponent: e.unwrap(),
                    },
                })
                .collect();
            return Ok(OriginCheck {
                holds: true,
                basis,
                variables,
            });
        }
    }

    let mut variables = Vec::with_capacity(nvars);
    let mut holds = true;
    for i in 0..nvars {
        let verdict = variable_verdict(i, gens, &basis, field, cap)?;
        holds &= verdict.in_radical;
        variables.push(verdict);
    }
    Ok(OriginCheck {
        holds,
        basis,
        variables,
    })
}

fn variable_verdict(
    i: usize,
    gens: &[Polynomial],
    basis: &GroebnerBasis,
    field: &Field,
    cap: usize,
) -> Result<VariableVerdict> {
    // power ladder: reduce x, then keep squaring the remainder, up to x^64
    let x = Polynomial::variable(basis.nvars(), i, field);
    let mut r = normal_form(&x, basis, field);
    let mut e = 1u32;
    loop {
        if r.is_zero() {
            return Ok(VariableVerdict {
                variable: i,
                in_radical: true,
                method: RadicalMethod::PowerMembership { exponent: e },
            });
        }
        if e >= 64 {
            break;
        }
        r = normal_form(&r.mul(&r, field), basis, field);
        e *= 2;
    }
    let in_radical = radical_membership(&x, gens, field, cap)?;
    Ok(VariableVerdict {
        variable: i,
        in_radical,
        method: RadicalMethod::Rabinowitsch,
    })
}

/// Incremental origin certification for cumulative homogeneous generator
/// sets, one degree at a time. Keeps the reduced basis between rounds so
/// each degree only pays for its new generators.
pub struct OriginEngine {
    field: Field,
    nvars: usize,
    cap: usize,
    basis: Option<GroebnerBasis>,
}

impl OriginEngine {
    pub fn new(field: Field, nvars: usize, cap: usize) -> OriginEngine {
        OriginEngine {
            field,
            nvars,
            cap,
            basis: None,
        }
    }

    /// Adds homogeneous generators and reports whether everything added so
    /// far cuts out the origin. For homogeneous ideals the staircase
    /// criterion on the reduced basis is equivalent to the per-variable
    /// radical test over the closure, in both directions.
    pub fn add_and_check(&mut self, new_gens: &[Polynomial]) -> Result<bool> {
        for g in new_gens {
            if !g.is_homogeneous() {
                return Err(Error::Precondition(
                    "origin engine requires homogeneous generators".into(),
                ));
            }
            if g.nvars() != self.nvars {
                return Err(Error::DimensionMismatch {
                    expected: self.nvars,
                    got: g.nvars(),
                });
            }
        }
        let nonzero: Vec<Polynomial> =
            new_gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        match (&self.basis, nonzero.is_empty()) {
            (None, true) => return Ok(false),
            (None, false) => {
                self.basis = Some(buchberger(&nonzero, &self.field, self.cap)?);
            }
            (Some(_), false) => {
                let b = self.basis.take().unwrap();
                self.basis = Some(buchberger_extend(&b, &nonzero, &self.field, self.cap)?);
            }
            (Some(_), true) => {}
        }
        let basis = self.basis.as_ref().unwrap();
        Ok(basis.pure_power_exponents().iter().all(|e| e.is_some()))
    }

    pub fn basis(&self) -> Option<&GroebnerBasis> {
        self.basis.as_ref()
    }
}
