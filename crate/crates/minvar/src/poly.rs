//! Sparse multivariate polynomials over a finite field with a fixed global
//! graded reverse lexicographic order (`x1 > x2 > ... > xn`), the group
//! action on polynomial functions, and orbit sums of monomials.
//!
//! Polynomials are term lists sorted strictly descending in grevlex with no
//! zero coefficients, so equality, printing and reduction are all canonical.
//! Arithmetic takes the [`Field`] explicitly; polynomials never carry their
//! coefficient context around.

use crate::gf::{parse_element, Field, FieldElement};
use crate::linalg::Matrix;
use crate::rep::Representation;
use crate::{Error, Result};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// Name of the one monomial order used everywhere.
pub const MONOMIAL_ORDER: &str = "grevlex";

/// Exponent vector; inline for up to 16 variables.
pub type Exponents = SmallVec<[u16; 16]>;

/// A monomial: exponent vector with cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            deg: 0,
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn variable(nvars: usize, index: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[index] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        Monomial {
            deg: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            deg: self.deg + other.deg,
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg
            && self
                .exps
                .iter()
                .zip(other.exps.iter())
                .all(|(&a, &b)| a <= b)
    }

    /// `other / self`; caller must know the division is exact.
    pub fn divide_into(&self, other: &Monomial) -> Monomial {
        Monomial {
            deg: other.deg - self.deg,
            exps: other
                .exps
                .iter()
                .zip(self.exps.iter())
                .map(|(&b, &a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial {
            deg: exps.iter().map(|&e| e as u32).sum(),
            exps,
        }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Appends fresh variables with exponent zero.
    pub fn extended(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial { deg: self.deg, exps }
    }
}

/// Graded reverse lexicographic comparison with `x1 > x2 > ... > xn`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {
                for i in (0..self.exps.len()).rev() {
                    match self.exps[i].cmp(&other.exps[i]) {
                        Ordering::Equal => continue,
                        // smaller entry in the rightmost difference wins
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
            ord => ord,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// `C(n + d - 1, d)` with overflow protection.
pub fn monomial_count(nvars: usize, d: u32) -> u128 {
    let n = nvars as u128;
    let d = d as u128;
    let mut num = 1u128;
    for i in 0..d {
        num = num.saturating_mul(n + d - 1 - i);
        num /= i + 1;
    }
    num
}

/// All monomials of total degree `d` in `nvars` variables, grevlex
/// descending. Errors when the count would exceed `cap`.
pub fn monomials_of_degree(nvars: usize, d: u32, cap: usize) -> Result<Vec<Monomial>> {
    if monomial_count(nvars, d) > cap as u128 {
        return Err(Error::CapExceeded {
            what: "monomials per degree",
            cap,
        });
    }
    let mut out = Vec::with_capacity(monomial_count(nvars, d) as usize);
    let mut exps: Exponents = SmallVec::from_elem(0, nvars);
    fill(&mut out, &mut exps, 0, d);
    fn fill(out: &mut Vec<Monomial>, exps: &mut Exponents, var: usize, rem: u32) {
        if var + 1 == exps.len() {
            exps[var] = rem as u16;
            out.push(Monomial {
                deg: exps.iter().map(|&e| e as u32).sum(),
                exps: exps.clone(),
            });
            exps[var] = 0;
            return;
        }
        for e in (0..=rem).rev() {
            exps[var] = e as u16;
            fill(out, exps, var + 1, rem - e);
        }
        exps[var] = 0;
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Sparse polynomial: strictly descending term list, no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, FieldElement)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Polynomial {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(Monomial::one(nvars), c)],
        }
    }

    pub fn variable(nvars: usize, index: usize, field: &Field) -> Polynomial {
        Polynomial {
            nvars,
            terms: vec![(Monomial::variable(nvars, index), field.one())],
        }
    }

    pub fn monomial(m: Monomial, c: FieldElement) -> Polynomial {
        let nvars = m.nvars();
        if c.is_zero() {
            return Polynomial::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(m, c)],
        }
    }

    /// Builds from unsorted terms, merging duplicates and dropping zeros.
    pub fn from_terms(
        nvars: usize,
        mut terms: Vec<(Monomial, FieldElement)>,
        field: &Field,
    ) -> Polynomial {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(Monomial, FieldElement)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = merged.last_mut() {
                if last.0 == m {
                    last.1 = field.add(&last.1, &c);
                    continue;
                }
            }
            merged.push((m, c));
        }
        merged.retain(|(_, c)| !c.is_zero());
        Polynomial {
            nvars,
            terms: merged,
        }
    }

    /// Builds from terms already strictly descending with no zeros.
    pub fn from_sorted_terms(nvars: usize, terms: Vec<(Monomial, FieldElement)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { nvars, terms }
    }

    /// The polynomial minus its leading term.
    pub fn without_leading(mut self) -> Polynomial {
        if !self.terms.is_empty() {
            self.terms.remove(0);
        }
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn constant_coefficient(&self, field: &Field) -> FieldElement {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => field.zero(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn add(&self, other: &Polynomial, field: &Field) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn neg(&self, field: &Field) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial, field: &Field) -> Polynomial {
        self.add(&other.neg(field), field)
    }

    /// Multiplies through by `c * m` (preserves term order).
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement, field: &Field) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement, field: &Field) -> Polynomial {
        self.mul_term(&Monomial::one(self.nvars), c, field)
    }

    pub fn mul(&self, other: &Polynomial, field: &Field) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let mut acc: HashMap<Monomial, FieldElement> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let v = field.add(e.get(), &c);
                        *e.get_mut() = v;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, FieldElement)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, e: u32, field: &Field) -> Polynomial {
        let mut acc = Polynomial::constant(self.nvars, field.one());
        for _ in 0..e {
            acc = acc.mul(self, field);
        }
        acc
    }

    /// Exact evaluation at a point.
    pub fn evaluate(&self, point: &[FieldElement], field: &Field) -> Result<FieldElement> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v = field.mul(&v, &field.pow(&point[i], e as u64));
                }
            }
            acc = field.add(&acc, &v);
        }
        Ok(acc)
    }

    /// Substitutes `x_i := forms[i]`; the result lives in the forms' ring.
    pub fn substitute(&self, forms: &[Polynomial], field: &Field) -> Result<Polynomial> {
        if forms.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: forms.len(),
            });
        }
        let out_vars = forms.first().map(|f| f.nvars).unwrap_or(0);
        // cache powers of each substituted form
        let mut powers: Vec<Vec<Polynomial>> = forms
            .iter()
            .map(|f| vec![Polynomial::constant(out_vars, field.one()), f.clone()])
            .collect();
        let mut acc = Polynomial::zero(out_vars);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(out_vars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&forms[i], field);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize], field);
            }
            acc = acc.add(&term, field);
        }
        Ok(acc)
    }

    /// Re-reads the polynomial in a ring with `extra` fresh trailing variables.
    pub fn extended(&self, extra: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars + extra,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extended(extra), c.clone()))
                .collect(),
        }
    }

    /// Canonical text form; see the module grammar.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let coeff = c.to_expr();
                let coeff_str = if c.is_multiterm() {
                    format!("({coeff})")
                } else {
                    coeff
                };
                if m.is_one() {
                    coeff_str
                } else if c.is_one() {
                    format!("{m}")
                } else {
                    format!("{coeff_str}*{m}")
                }
            })
            .collect();
        parts.join("+")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Parses the canonical polynomial grammar: terms joined by `+`, factors
/// joined by `*`, factors being integers, `z` powers, parenthesized field
/// element expressions, or `x<i>` / `x<i>^<e>`.
pub fn parse_polynomial(field: &Field, nvars: usize, input: &str) -> Result<Polynomial> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Precondition("empty polynomial".into()));
    }
    let mut terms: Vec<(Monomial, FieldElement)> = Vec::new();
    for term_str in split_top_level(&s, '+')? {
        if term_str.is_empty() {
            return Err(Error::Precondition(format!("malformed polynomial `{input}`")));
        }
        let mut coeff = field.one();
        let mut exps: Exponents = SmallVec::from_elem(0, nvars);
        for factor in split_top_level(&term_str, '*')? {
            if let Some(inner) = factor.strip_prefix('(') {
                let inner = inner
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Precondition(format!("unbalanced parens in `{factor}`")))?;
                coeff = field.mul(&coeff, &parse_element(field, inner)?);
            } else if factor.starts_with('x') {
                let body = &factor[1..];
                let (idx_str, exp) = match body.find('^') {
                    Some(pos) => (&body[..pos], body[pos + 1..].parse::<u16>().map_err(|_| {
                        Error::Precondition(format!("bad exponent in `{factor}`"))
                    })?),
                    None => (body, 1),
                };
                let idx: usize = idx_str
                    .parse()
                    .map_err(|_| Error::Precondition(format!("bad variable `{factor}`")))?;
                if idx == 0 || idx > nvars {
                    return Err(Error::Precondition(format!(
                        "variable x{idx} out of range (nvars = {nvars})"
                    )));
                }
                exps[idx - 1] += exp;
            } else {
                coeff = field.mul(&coeff, &parse_element(field, &factor)?);
            }
        }
        let m = Monomial {
            deg: exps.iter().map(|&e| e as u32).sum(),
            exps,
        };
        terms.push((m, coeff));
    }
    Ok(Polynomial::from_terms(nvars, terms, field))
}

fn split_top_level(s: &str, sep: char) -> Result<Vec<String>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Precondition(format!("unbalanced parens in `{s}`")));
                }
                cur.push(ch);
            }
            c if c == sep && depth == 0 => {
                parts.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::Precondition(format!("unbalanced parens in `{s}`")));
    }
    parts.push(cur);
    Ok(parts)
}

// ---------------------------------------------------------------------------
// Group action on polynomials
// ---------------------------------------------------------------------------

/// A monomial substitution `x_j -> scalar_j * x_{target_j}` read off an
/// invertible monomial matrix.
pub struct MonomialSubstitution {
    map: Vec<(usize, FieldElement)>,
}

impl MonomialSubstitution {
    /// Extracts the substitution when the matrix has at most one nonzero
    /// entry per row (monomial matrices), reading rows as linear forms.
    pub fn from_matrix(m: &Matrix) -> Option<MonomialSubstitution> {
        let mut map = Vec::with_capacity(m.rows());
        for j in 0..m.rows() {
            let mut hit = None;
            for i in 0..m.cols() {
                if !m.at(j, i).is_zero() {
                    if hit.is_some() {
                        return None;
                    }
                    hit = Some((i, m.at(j, i).clone()));
                }
            }
            map.push(hit?); // invertible matrices have no zero row
        }
        Some(MonomialSubstitution { map })
    }

    /// Image of a monomial: a scalar times a monomial.
    pub fn apply(&self, m: &Monomial, field: &Field) -> (Monomial, FieldElement) {
        let mut exps: Exponents = SmallVec::from_elem(0, m.nvars());
        let mut scalar = field.one();
        for (j, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (target, lambda) = &self.map[j];
            exps[*target] += e;
            if *lambda != field.one() {
                scalar = field.mul(&scalar, &field.pow(lambda, e as u64));
            }
        }
        (
            Monomial {
                deg: m.degree(),
                exps,
            },
            scalar,
        )
    }
}

/// Applies the substitution `x_j := (row j of m) . x` to `f`.
pub fn apply_matrix(f: &Polynomial, m: &Matrix, field: &Field) -> Result<Polynomial> {
    if f.nvars() != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            got: f.nvars(),
        });
    }
    if let Some(sub) = MonomialSubstitution::from_matrix(m) {
        let terms = f
            .terms
            .iter()
            .map(|(mono, c)| {
                let (img, scalar) = sub.apply(mono, field);
                (img, field.mul(c, &scalar))
            })
            .collect();
        return Ok(Polynomial::from_terms(f.nvars(), terms, field));
    }
    let nvars = f.nvars();
    let forms: Vec<Polynomial> = (0..nvars)
        .map(|j| {
            let terms = (0..nvars)
                .filter(|&i| !m.at(j, i).is_zero())
                .map(|i| (Monomial::variable(nvars, i), m.at(j, i).clone()))
                .collect();
            Polynomial::from_terms(nvars, terms, field)
        })
        .collect();
    f.substitute(&forms, field)
}

/// The action of a group element on a polynomial function: substitutes the
/// rows of the inverse element's matrix, so `(g . f)(v) = f(g^{-1} v)`.
pub fn act(v: &Representation, g: usize, f: &Polynomial) -> Result<Polynomial> {
    if f.nvars() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: v.dim(),
            got: f.nvars(),
        });
    }
    if g == 0 {
        return Ok(f.clone());
    }
    apply_matrix(f, v.inverse_matrix(g), v.field())
}

/// Is `f` fixed by every generator (hence by the whole group)?
pub fn is_invariant(v: &Representation, f: &Polynomial) -> Result<bool> {
    for &g in v.group().generators() {
        if act(v, g as usize, f)? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The orbit sum of a monomial under a subgroup with a monomial action:
/// the set of distinct scalar-monomial images, summed once each. For
/// permutation modules this is the plain sum over the monomial orbit.
pub fn orbit_sum(
    v: &Representation,
    members: &crate::group::Subgroup,
    m: &Monomial,
) -> Result<Polynomial> {
    let field = v.field();
    if m.nvars() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: v.dim(),
            got: m.nvars(),
        });
    }
    let mut images: Vec<(Monomial, FieldElement)> = Vec::new();
    for &g in members.members() {
        let mat = v.inverse_matrix(g as usize);
        let sub = MonomialSubstitution::from_matrix(mat).ok_or(Error::NotMonomialAction)?;
        let img = sub.apply(m, field);
        if !images.contains(&img) {
            images.push(img);
        }
    }
    Ok(Polynomial::from_terms(m.nvars(), images, field))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{sylow_subgroup, Group, Subgroup};
    use crate::Limits;
    use std::sync::Arc;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    #[test]
    fn grevlex_examples() {
        let ms = monomials_of_degree(2, 2, 1000).unwrap();
        let strs: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(strs, vec!["x1^2", "x1*x2", "x2^2"]);
        assert_eq!(monomials_of_degree(3, 4, 1000).unwrap().len(), 15);
        assert_eq!(monomials_of_degree(6, 3, 1000).unwrap().len(), 56);
    }

    #[test]
    fn monomial_cap() {
        assert!(matches!(
            monomials_of_degree(20, 10, 100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn arithmetic_and_normalization() {
        let f = f3();
        let x = Polynomial::variable(2, 0, &f);
        let y = Polynomial::variable(2, 1, &f);
        let s = x.add(&y, &f);
        let p = s.mul(&s, &f); // (x+y)^2 = x^2 + 2xy + y^2 over F_3
        assert_eq!(p.terms().len(), 3);
        assert_eq!(p.render(), "x1^2+2*x1*x2+x2^2");
        // x - x = 0
        assert!(x.sub(&x, &f).is_zero());
        assert_eq!(Polynomial::zero(2).degree(), None);
    }

    #[test]
    fn evaluation_examples() {
        let f = f2();
        let x = Polynomial::variable(2, 0, &f);
        let y = Polynomial::variable(2, 1, &f);
        let s = x.add(&y, &f);
        let v = s.evaluate(&[f.one(), f.one()], &f).unwrap();
        assert!(v.is_zero());

        let f = f3();
        let xyz = parse_polynomial(&f, 3, "x1*x2*x3").unwrap();
        let ones = vec![f.one(), f.one(), f.one()];
        assert_eq!(xyz.evaluate(&ones, &f).unwrap(), f.one());
        let sq = parse_polynomial(&f, 3, "x1^2+x2^2+x3^2").unwrap();
        assert!(sq.evaluate(&ones, &f).unwrap().is_zero());
    }

    #[test]
    fn parse_render_round_trip() {
        let f4 = Field::with_root_orders(2, &[3]).unwrap();
        let cases = [
            "x1^2+x1*x2+x2^2",
            "z*x1+(z+1)*x2",
            "(z+1)*x1^3+z*x1*x2+1",
            "0",
            "z+1",
            "x1",
        ];
        for s in cases {
            let p = parse_polynomial(&f4, 2, s).unwrap();
            let r = p.render();
            let q = parse_polynomial(&f4, 2, &r).unwrap();
            assert_eq!(p, q, "round trip through `{r}`");
        }
        // canonical form is stable
        let p = parse_polynomial(&f4, 2, "x2^2+x1*x2+x1^2").unwrap();
        assert_eq!(p.render(), "x1^2+x1*x2+x2^2");
    }

    #[test]
    fn parse_rejects_garbage() {
        let f = f2();
        assert!(parse_polynomial(&f, 2, "x3").is_err());
        assert!(parse_polynomial(&f, 2, "x1^").is_err());
        assert!(parse_polynomial(&f, 2, "(x1").is_err());
        assert!(parse_polynomial(&f, 2, "").is_err());
    }

    fn z2_swap() -> Representation {
        let g = Arc::new(Group::from_permutations(&[vec![1, 0]], 64).unwrap());
        Representation::regular(g, f2(), &Limits::default()).unwrap()
    }

    #[test]
    fn action_examples() {
        let v = z2_swap();
        let f = v.field().clone();
        let x = Polynomial::variable(2, 0, &f);
        let y = Polynomial::variable(2, 1, &f);
        assert_eq!(act(&v, 1, &x).unwrap(), y);
        let s = x.add(&y, &f);
        assert_eq!(act(&v, 1, &s).unwrap(), s);
    }

    #[test]
    fn action_is_a_left_action() {
        let g = Arc::new(Group::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], 64).unwrap());
        let v = Representation::regular(Arc::clone(&g), f3(), &Limits::default()).unwrap();
        let f = v.field().clone();
        let test_poly = parse_polynomial(&f, 6, "x1^2*x3+2*x2*x5+x6").unwrap();
        for a in 0..6 {
            for b in 0..6 {
                let ab = g.mul(a, b) as usize;
                let lhs = act(&v, a, &act(&v, b, &test_poly).unwrap()).unwrap();
                let rhs = act(&v, ab, &test_poly).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn action_commutes_with_evaluation() {
        let g = Arc::new(Group::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], 64).unwrap());
        let v = Representation::regular(Arc::clone(&g), f3(), &Limits::default()).unwrap();
        let f = v.field().clone();
        let poly = parse_polynomial(&f, 6, "x1*x2+2*x4^2+x5*x6").unwrap();
        let pts: Vec<Vec<_>> = vec![
            (0..6).map(|i| f.from_u32(i)).collect(),
            (0..6).map(|i| f.from_u32(2 * i + 1)).collect(),
        ];
        for a in 0..6 {
            let moved = act(&v, a, &poly).unwrap();
            for pt in &pts {
                let lhs = moved.evaluate(pt, &f).unwrap();
                let ginv_pt = v.inverse_matrix(a).mul_vec(pt, &f);
                let rhs = poly.evaluate(&ginv_pt, &f).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn orbit_sums() {
        let g = Arc::new(Group::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], 64).unwrap());
        let v = Representation::regular(Arc::clone(&g), f2(), &Limits::default()).unwrap();
        let whole = Subgroup::whole(&g);
        let m = Monomial::variable(6, 0);
        let o = orbit_sum(&v, &whole, &m).unwrap();
        assert_eq!(o.terms().len(), 6); // transitive on the variables
        assert!(is_invariant(&v, &o).unwrap());

        // trivial group: the monomial itself
        let t = Subgroup::trivial();
        let o = orbit_sum(&v, &t, &m).unwrap();
        assert_eq!(o, Polynomial::monomial(m, f2().one()));

        // product over a Sylow subgroup evaluates to |G|/|P| at the all-ones point
        let p = sylow_subgroup(&g, 2);
        let mut exps = vec![0u16; 6];
        for &h in p.members() {
            exps[h as usize] = 1;
        }
        let m = Monomial::from_exponents(&exps);
        let o = orbit_sum(&v, &whole, &m).unwrap();
        let ones: Vec<_> = (0..6).map(|_| f2().one()).collect();
        let val = o.evaluate(&ones, &f2()).unwrap();
        assert_eq!(val, f2().one()); // 6/2 = 3, odd
    }

    #[test]
    fn orbit_sum_rejects_dense_action() {
        // a matrix group whose action mixes variables
        let f = f3();
        let m = Matrix::from_rows(vec![
            vec![f.one(), f.one()],
            vec![f.zero(), f.one()],
        ])
        .unwrap();
        let (g, v) = crate::rep::group_from_matrices(vec![m], f, &Limits::default()).unwrap();
        let whole = Subgroup::whole(&g);
        let mono = Monomial::variable(2, 0);
        assert!(matches!(
            orbit_sum(&v, &whole, &mono),
            Err(Error::NotMonomialAction)
        ));
    }
}
