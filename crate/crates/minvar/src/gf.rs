//! Exact arithmetic in prime fields `F_p` and extensions `F_{p^k}`.
//!
//! A [`Field`] fixes the characteristic `p`, the extension degree `k`, and a
//! monic irreducible modulus of degree `k` over `F_p`. Elements are reduced
//! coefficient vectors of length `k` (low degree first) in the extension
//! generator `z`. Everything is deterministic: for a given `(p, k)` the
//! modulus is the lexicographically smallest monic irreducible (comparing
//! coefficient lists low-to-high), and element enumeration walks coefficient
//! vectors in the same lexicographic order, so witnesses such as roots of
//! unity are reproducible bit for bit.

use crate::{Error, Result};
use smallvec::{smallvec, SmallVec};
use std::fmt;

/// Coefficient vector of a field element, inline up to degree 4 extensions.
pub type Coeffs = SmallVec<[u32; 4]>;

/// An element of `F_{p^k}`: `coeffs[i]` is the coefficient of `z^i`,
/// always reduced (length exactly `k`, entries in `[0, p)`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Coeffs,
}

impl FieldElement {
    /// Reduced coefficients, low degree first; length is the extension degree.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Renders in the `z`-expression grammar: `0`, `2`, `z+1`, `2*z^3+1`, ...
    /// Terms are listed by descending power of `z`.
    pub fn to_expr(&self) -> String {
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let part = match (c, i) {
                (_, 0) => format!("{c}"),
                (1, 1) => "z".to_string(),
                (1, _) => format!("z^{i}"),
                (_, 1) => format!("{c}*z"),
                (_, _) => format!("{c}*z^{i}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    /// True when the expression needs parentheses inside a product.
    pub fn is_multiterm(&self) -> bool {
        self.coeffs.iter().filter(|&&c| c != 0).count() > 1
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}

/// Arithmetic context for `F_{p^k}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Field {
    p: u32,
    k: usize,
    /// Monic modulus, `k + 1` coefficients low-to-high; `X` itself when `k = 1`.
    modulus: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.p, self.k)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    let n = n as u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiplicative order of `a` modulo `n` (requires gcd(a, n) = 1, n > 1).
fn order_mod(a: u64, n: u64) -> u64 {
    let mut x = a % n;
    let mut m = 1;
    while x != 1 {
        x = x * (a % n) % n;
        m += 1;
    }
    m
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// --- dense polynomial helpers over F_p, used only for modulus handling ---

fn poly_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` modulo monic `m`, both low-to-high over F_p.
fn poly_rem(a: &[u32], m: &[u32], p: u64) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() as u64;
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                let idx = i + shift;
                let sub = lead * mc as u64 % p;
                let cur = r[idx] as u64;
                r[idx] = ((cur + p - sub) % p) as u32;
            }
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// True when the monic polynomial `m` (low-to-high) is irreducible over F_p,
/// by trial division against every monic polynomial of degree `<= deg(m)/2`.
fn poly_is_irreducible(m: &[u32], p: u64) -> bool {
    let deg = m.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        // all monic divisor candidates of degree d, low coefficients as odometer
        let mut cand = vec![0u32; d + 1];
        cand[d] = 1;
        loop {
            if poly_rem(m, &cand, p).is_empty() {
                return false;
            }
            // advance the d low coefficients
            let mut i = 0;
            loop {
                if i == d {
                    break;
                }
                cand[i] += 1;
                if (cand[i] as u64) < p {
                    break;
                }
                cand[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `k` over F_p,
/// comparing coefficient lists low-to-high.
fn smallest_irreducible(p: u64, k: usize) -> Vec<u32> {
    if k == 1 {
        return vec![0, 1]; // X
    }
    let mut coeffs = vec![0u32; k]; // low k coefficients; leading 1 implicit
    loop {
        let mut m = coeffs.clone();
        m.push(1);
        if poly_is_irreducible(&m, p) {
            return m;
        }
        // next tuple in lexicographic order: last coordinate fastest
        let mut i = k;
        loop {
            if i == 0 {
                unreachable!("an irreducible of every degree exists over F_p");
            }
            i -= 1;
            coeffs[i] += 1;
            if (coeffs[i] as u64) < p {
                break;
            }
            coeffs[i] = 0;
        }
    }
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field> {
        Field::with_root_orders(p, &[])
    }

    /// Builds the smallest `F_{p^k}` containing primitive `n`-th roots of
    /// unity for every `n` in `root_orders`: `k` is the lcm of the
    /// multiplicative orders of `p` mod `n`. Empty list gives `F_p`.
    pub fn with_root_orders(p: u32, root_orders: &[u32]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut k: u64 = 1;
        for &n in root_orders {
            if n == 0 {
                return Err(Error::Precondition("root order must be positive".into()));
            }
            if n % p == 0 {
                return Err(Error::RootOrderDivisibleByChar { n, p });
            }
            if n > 1 {
                let d = order_mod(p as u64, n as u64);
                k = k / gcd(k, d) * d;
            }
        }
        let k = k as usize;
        Ok(Field {
            p,
            k,
            modulus: smallest_irreducible(p as u64, k),
        })
    }

    /// Field with an explicitly given modulus (validated: monic, irreducible).
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::Precondition(
                "modulus must be monic of degree >= 1".into(),
            ));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::Precondition("modulus coefficient out of range".into()));
        }
        let k = modulus.len() - 1;
        if k == 1 {
            if modulus != vec![0, 1] {
                return Err(Error::Precondition(
                    "degree-1 modulus must be X itself".into(),
                ));
            }
        } else if !poly_is_irreducible(&modulus, p as u64) {
            return Err(Error::Precondition("modulus is reducible".into()));
        }
        Ok(Field { p, k, modulus })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// Modulus coefficients, low-to-high (`k + 1` of them).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// `p^k` as u128 (desk-scale fields only, but avoid silent wraparound).
    pub fn order(&self) -> u128 {
        (0..self.k).fold(1u128, |acc, _| acc * self.p as u128)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: smallvec![0; self.k],
        }
    }

    pub fn one(&self) -> FieldElement {
        let mut coeffs: Coeffs = smallvec![0; self.k];
        coeffs[0] = 1;
        FieldElement { coeffs }
    }

    /// The extension generator `z` (equals `0` image only when `k = 1`,
    /// where `z` reduces to 0 since the modulus is `X`).
    pub fn generator(&self) -> FieldElement {
        let mut coeffs: Coeffs = smallvec![0; self.k];
        if self.k > 1 {
            coeffs[1] = 1;
        }
        FieldElement { coeffs }
    }

    /// Embeds an integer residue.
    pub fn from_u32(&self, n: u32) -> FieldElement {
        let mut coeffs: Coeffs = smallvec![0; self.k];
        coeffs[0] = n % self.p;
        FieldElement { coeffs }
    }

    /// Element from explicit coefficients (length `<= k`, entries reduced).
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.k {
            return Err(Error::FieldMismatch(format!(
                "coefficient vector of length {} in a degree-{} extension",
                coeffs.len(),
                self.k
            )));
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::FieldMismatch(format!(
                "coefficient not reduced mod {}",
                self.p
            )));
        }
        let mut full: Coeffs = smallvec![0; self.k];
        full[..coeffs.len()].copy_from_slice(coeffs);
        Ok(FieldElement { coeffs: full })
    }

    /// Checks that an element structurally belongs to this field.
    pub fn check(&self, a: &FieldElement) -> Result<()> {
        if a.coeffs.len() != self.k || a.coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::FieldMismatch(format!(
                "element {:?} does not belong to {:?}",
                a, self
            )));
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let mut coeffs: Coeffs = smallvec![0; self.k];
        for i in 0..self.k {
            coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % self.p;
        }
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let mut coeffs: Coeffs = smallvec![0; self.k];
        for i in 0..self.k {
            coeffs[i] = (a.coeffs[i] + self.p - b.coeffs[i]) % self.p;
        }
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p as u64;
        if self.k == 1 {
            let c = a.coeffs[0] as u64 * b.coeffs[0] as u64 % p;
            return FieldElement {
                coeffs: smallvec![c as u32],
            };
        }
        // schoolbook product, then reduce by the monic modulus
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, &ac) in a.coeffs.iter().enumerate() {
            if ac == 0 {
                continue;
            }
            for (j, &bc) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ac as u64 * bc as u64) % p;
            }
        }
        for i in (self.k..prod.len()).rev() {
            let lead = prod[i];
            if lead == 0 {
                continue;
            }
            prod[i] = 0;
            let shift = i - self.k;
            for (j, &mc) in self.modulus.iter().take(self.k).enumerate() {
                let idx = j + shift;
                let sub = lead * mc as u64 % p;
                prod[idx] = (prod[idx] + p - sub) % p;
            }
        }
        let mut coeffs: Coeffs = smallvec![0; self.k];
        for i in 0..self.k {
            coeffs[i] = prod[i] as u32;
        }
        FieldElement { coeffs }
    }

    /// Multiplicative inverse by extended Euclid against the modulus.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let p = self.p as u64;
        if self.k == 1 {
            let x = a.coeffs[0] as u64;
            let inv = mod_inv(x, p);
            return Ok(FieldElement {
                coeffs: smallvec![inv as u32],
            });
        }
        // extended Euclid in F_p[X]: r0 = modulus, r1 = a
        let mut r0: Vec<u32> = self.modulus.clone();
        let mut r1: Vec<u32> = a.coeffs.to_vec();
        poly_trim(&mut r1);
        let mut s0: Vec<u32> = vec![];
        let mut s1: Vec<u32> = vec![1];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1, p);
            let qs1 = poly_mul(&q, &s1, p);
            let s = poly_sub(&s0, &qs1, p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 = gcd, a nonzero constant since the modulus is irreducible
        debug_assert_eq!(r0.len(), 1);
        let c_inv = mod_inv(r0[0] as u64, p);
        let mut coeffs: Coeffs = smallvec![0; self.k];
        for (i, &c) in s0.iter().enumerate() {
            coeffs[i] = (c as u64 * c_inv % p) as u32;
        }
        Ok(FieldElement { coeffs })
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Scales by an integer (repeated embedding, not repeated addition).
    pub fn scale(&self, a: &FieldElement, n: u32) -> FieldElement {
        self.mul(a, &self.from_u32(n))
    }

    /// Smallest `m >= 1` with `a^m = 1`, by repeated multiplication.
    pub fn multiplicative_order(&self, a: &FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroHasNoOrder);
        }
        let one = self.one();
        let mut x = a.clone();
        let mut m = 1u64;
        while x != one {
            x = self.mul(&x, a);
            m += 1;
        }
        Ok(m)
    }

    /// All field elements, coefficient vectors in lexicographic order
    /// (`c_0` most significant): `0, z, ..., 1, 1+z, ...` for `k = 2`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let total = self.order();
        let mut cur: Option<Coeffs> = Some(smallvec![0; self.k]);
        let mut count = 0u128;
        std::iter::from_fn(move || {
            let c = cur.clone()?;
            count += 1;
            if count >= total {
                cur = None;
            } else if let Some(next) = cur.as_mut() {
                let mut i = self.k;
                loop {
                    i -= 1;
                    next[i] += 1;
                    if next[i] < self.p {
                        break;
                    }
                    next[i] = 0;
                }
            }
            Some(FieldElement { coeffs: c })
        })
    }

    /// First element, in enumeration order, of multiplicative order exactly
    /// `n`. Requires `n | p^k - 1`.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<FieldElement> {
        if n == 0 || (self.order() - 1) % n as u128 != 0 {
            return Err(Error::NoSuchRootOfUnity { n });
        }
        let prime_divs = prime_divisors(n);
        for a in self.elements() {
            if a.is_zero() {
                continue;
            }
            if self.pow(&a, n) != self.one()
                || prime_divs.iter().any(|&q| self.pow(&a, n / q) == self.one())
            {
                continue;
            }
            return Ok(a);
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime, a nonzero: Fermat
    let mut e = p - 2;
    let mut base = a % p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        divs.push(n);
    }
    divs
}

fn poly_mul(a: &[u32], b: &[u32], p: u64) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ac) in a.iter().enumerate() {
        for (j, &bc) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u64 + ac as u64 * bc as u64) % p) as u32;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[u32], b: &[u32], p: u64) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out = vec![0u32; n];
    for i in 0..n {
        let av = a.get(i).copied().unwrap_or(0) as u64;
        let bv = b.get(i).copied().unwrap_or(0) as u64;
        out[i] = ((av + p - bv) % p) as u32;
    }
    poly_trim(&mut out);
    out
}

fn poly_divmod(a: &[u32], b: &[u32], p: u64) -> (Vec<u32>, Vec<u32>) {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let b_lead_inv = mod_inv(*b.last().unwrap() as u64, p);
    let mut q = vec![0u32; r.len().saturating_sub(db)];
    while r.len() > db || (r.len() == db + 1 && db == 0 && !r.is_empty()) {
        if r.len() < b.len() {
            break;
        }
        let lead = *r.last().unwrap() as u64;
        let c = lead * b_lead_inv % p;
        let shift = r.len() - b.len();
        q[shift] = c as u32;
        for (i, &bc) in b.iter().enumerate() {
            let sub = c * bc as u64 % p;
            let cur = r[i + shift] as u64;
            r[i + shift] = ((cur + p - sub) % p) as u32;
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    poly_trim(&mut q);
    (q, r)
}

/// Parses a `z`-expression: terms joined by `+`, each term an integer, `z`,
/// `z^e`, or `int*z^e`. Whitespace is ignored.
pub fn parse_element(field: &Field, s: &str) -> Result<FieldElement> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Precondition("empty field element expression".into()));
    }
    let mut acc = field.zero();
    for term in s.split('+') {
        if term.is_empty() {
            return Err(Error::Precondition(format!("malformed expression `{s}`")));
        }
        let mut coeff: u64 = 1;
        let mut power: u64 = 0;
        for factor in term.split('*') {
            if let Some(rest) = factor.strip_prefix('z') {
                let e: u64 = if rest.is_empty() {
                    1
                } else if let Some(es) = rest.strip_prefix('^') {
                    es.parse().map_err(|_| {
                        Error::Precondition(format!("bad exponent in `{factor}`"))
                    })?
                } else {
                    return Err(Error::Precondition(format!("bad factor `{factor}`")));
                };
                power += e;
            } else {
                let v: u64 = factor
                    .parse()
                    .map_err(|_| Error::Precondition(format!("bad factor `{factor}`")))?;
                coeff = coeff * v % field.p as u64;
            }
        }
        let c = field.from_u32((coeff % field.p as u64) as u32);
        let zp = if power == 0 {
            field.one()
        } else {
            field.pow(&field.generator(), power)
        };
        acc = field.add(&acc, &field.mul(&c, &zp));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_construction_is_deterministic() {
        let f = Field::with_root_orders(2, &[3]).unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.modulus(), &[1, 1, 1]); // X^2 + X + 1
        let g = Field::with_root_orders(2, &[3]).unwrap();
        assert_eq!(f, g);

        let f = Field::prime(3).unwrap();
        assert_eq!(f.degree(), 1);
        assert_eq!(f.modulus(), &[0, 1]); // X

        let f = Field::with_root_orders(2, &[5]).unwrap();
        assert_eq!(f.degree(), 4);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(Field::prime(6), Err(Error::NotPrime(6))));
        assert!(matches!(
            Field::with_root_orders(2, &[4]),
            Err(Error::RootOrderDivisibleByChar { n: 4, p: 2 })
        ));
    }

    #[test]
    fn arithmetic_examples() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(f2.add(&f2.one(), &f2.one()), f2.zero());

        let f4 = Field::with_root_orders(2, &[3]).unwrap();
        let z = f4.generator();
        // z*z = z + 1 under X^2 + X + 1
        assert_eq!(f4.mul(&z, &z), f4.element(&[1, 1]).unwrap());

        let f7 = Field::prime(7).unwrap();
        let q = f7.div(&f7.from_u32(3), &f7.from_u32(5)).unwrap();
        assert_eq!(q, f7.from_u32(2));
    }

    #[test]
    fn division_by_zero_fails() {
        let f7 = Field::prime(7).unwrap();
        assert!(matches!(
            f7.div(&f7.one(), &f7.zero()),
            Err(Error::ZeroDivision)
        ));
    }

    #[test]
    fn multiplicative_orders() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.multiplicative_order(&f7.one()).unwrap(), 1);
        assert_eq!(f7.multiplicative_order(&f7.from_u32(2)).unwrap(), 3);
        let f4 = Field::with_root_orders(2, &[3]).unwrap();
        assert_eq!(f4.multiplicative_order(&f4.generator()).unwrap(), 3);
        assert!(f4.multiplicative_order(&f4.zero()).is_err());
    }

    #[test]
    fn roots_of_unity() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(f2.primitive_root_of_unity(1).unwrap(), f2.one());

        let f7 = Field::prime(7).unwrap();
        let r = f7.primitive_root_of_unity(3).unwrap();
        assert_eq!(r, f7.from_u32(2)); // brute-force scan: 2^3 = 8 = 1, 2 != 1

        let f4 = Field::with_root_orders(2, &[3]).unwrap();
        let r = f4.primitive_root_of_unity(3).unwrap();
        assert_eq!(r, f4.generator());
        assert_eq!(f4.multiplicative_order(&r).unwrap(), 3);

        assert!(f7.primitive_root_of_unity(4).is_err()); // 4 does not divide 6
    }

    #[test]
    fn root_order_matches_request_exactly() {
        for (p, n) in [(2u32, 15u64), (3, 8), (7, 6), (5, 31)] {
            let f = Field::with_root_orders(p, &[n as u32]).unwrap();
            let r = f.primitive_root_of_unity(n).unwrap();
            assert_eq!(f.pow(&r, n), f.one());
            assert_eq!(f.multiplicative_order(&r).unwrap(), n);
        }
    }

    /// Exhaustive field laws for every field of order at most 64.
    #[test]
    fn field_laws_exhaustive_small() {
        let fields = [
            Field::prime(2).unwrap(),
            Field::prime(3).unwrap(),
            Field::prime(5).unwrap(),
            Field::prime(7).unwrap(),
            Field::prime(31).unwrap(),
            Field::with_root_orders(2, &[3]).unwrap(),  // F_4
            Field::with_root_orders(2, &[7]).unwrap(),  // F_8
            Field::with_root_orders(2, &[5]).unwrap(),  // F_16
            Field::with_root_orders(3, &[8]).unwrap(),  // F_9
            Field::with_root_orders(2, &[9]).unwrap(),  // F_64
            Field::with_root_orders(5, &[24]).unwrap(), // F_25
        ];
        for f in &fields {
            assert!(f.order() <= 64);
            let elems: Vec<_> = f.elements().collect();
            assert_eq!(elems.len() as u128, f.order());
            for a in &elems {
                assert_eq!(f.add(a, &f.zero()), *a);
                assert_eq!(f.mul(a, &f.one()), *a);
                assert_eq!(f.add(a, &f.neg(a)), f.zero());
                if !a.is_zero() {
                    let inv = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, &inv), f.one());
                }
                for b in &elems {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in elems.iter().take(8) {
                        assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
                        assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn expr_round_trip() {
        let f16 = Field::with_root_orders(2, &[5]).unwrap();
        for a in f16.elements() {
            let s = a.to_expr();
            let b = parse_element(&f16, &s).unwrap();
            assert_eq!(a, b, "round trip failed for `{s}`");
        }
        let f9 = Field::with_root_orders(3, &[8]).unwrap();
        for a in f9.elements() {
            assert_eq!(parse_element(&f9, &a.to_expr()).unwrap(), a);
        }
        // z^k and beyond reduce
        let f4 = Field::with_root_orders(2, &[3]).unwrap();
        assert_eq!(
            parse_element(&f4, "z^2").unwrap(),
            f4.element(&[1, 1]).unwrap()
        );
    }
}
