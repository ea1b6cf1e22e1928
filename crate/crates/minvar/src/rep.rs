//! Matrix representations of finite groups over a finite field, and the
//! module constructions the workbench needs: regular and trivial modules,
//! direct sums, restriction and induction, fixed subspaces, plus three
//! bespoke families built from explicit generator images (a semidirect
//! summand of the regular module, a scaled product module, and a
//! twisted-normalizer module).
//!
//! A representation stores one invertible matrix per group element. The
//! constructor extends generator images along the closure tree and then
//! verifies `rho(x) * rho(g) = rho(xg)` for every element `x` and generator
//! `g`; by induction along the closure this certifies the homomorphism law
//! on all pairs.

use crate::gf::{Field, FieldElement};
use crate::group::{close_elements, Group, Subgroup};
use crate::linalg::Matrix;
use crate::{Error, Limits, Result};
use std::sync::Arc;

/// A finite-dimensional module: a group, a field, and a matrix per element.
#[derive(Clone, Debug)]
pub struct Representation {
    group: Arc<Group>,
    field: Field,
    dim: usize,
    matrices: Vec<Matrix>,
}

impl Representation {
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of the given group element.
    pub fn matrix(&self, element: usize) -> &Matrix {
        &self.matrices[element]
    }

    /// Matrix of the inverse element (the one that acts on polynomials).
    pub fn inverse_matrix(&self, element: usize) -> &Matrix {
        &self.matrices[self.group.inv(element) as usize]
    }

    pub fn same_group(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group
    }

    /// Builds a representation from one matrix per closure generator.
    pub fn from_generator_images(
        group: Arc<Group>,
        field: Field,
        images: Vec<Matrix>,
    ) -> Result<Representation> {
        let gens = group.generators();
        if images.len() != gens.len() {
            return Err(Error::DimensionMismatch {
                expected: gens.len(),
                got: images.len(),
            });
        }
        let dim = images.first().map(|m| m.rows()).unwrap_or(0);
        for m in &images {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: m.rows(),
                });
            }
        }
        let mut matrices = vec![Matrix::identity(&field, dim); group.order()];
        for (e, &(parent, gpos)) in group.decomp().iter().enumerate().skip(1) {
            matrices[e] = matrices[parent as usize].mul(&images[gpos as usize], &field);
        }
        let rep = Representation {
            group,
            field,
            dim,
            matrices,
        };
        rep.verify_homomorphism()?;
        Ok(rep)
    }

    /// Builds a representation from an explicit matrix per element.
    pub fn from_element_matrices(
        group: Arc<Group>,
        field: Field,
        matrices: Vec<Matrix>,
    ) -> Result<Representation> {
        if matrices.len() != group.order() {
            return Err(Error::DimensionMismatch {
                expected: group.order(),
                got: matrices.len(),
            });
        }
        let dim = matrices[0].rows();
        let rep = Representation {
            group,
            field,
            dim,
            matrices,
        };
        if !rep.matrices[0].is_identity(&rep.field) {
            return Err(Error::NotAHomomorphism("identity image is not I".into()));
        }
        rep.verify_homomorphism()?;
        Ok(rep)
    }

    /// Checks `rho(x) rho(g) = rho(xg)` for all elements `x` and generators
    /// `g`. Together with `rho(e) = I` this implies the homomorphism law for
    /// every pair, by induction on the closure word length of the second
    /// factor.
    fn verify_homomorphism(&self) -> Result<()> {
        for x in 0..self.group.order() {
            for &g in self.group.generators() {
                let prod = self.matrices[x].mul(&self.matrices[g as usize], &self.field);
                let xg = self.group.mul(x, g as usize) as usize;
                if prod != self.matrices[xg] {
                    return Err(Error::NotAHomomorphism(format!(
                        "rho({}) * rho({}) != rho({})",
                        self.group.label(x),
                        self.group.label(g as usize),
                        self.group.label(xg)
                    )));
                }
            }
        }
        Ok(())
    }

    /// The regular representation: permutation matrices of left translation.
    pub fn regular(group: Arc<Group>, field: Field, limits: &Limits) -> Result<Representation> {
        let n = group.order();
        if n > limits.module_dim {
            return Err(Error::CapExceeded {
                what: "module dimension",
                cap: limits.module_dim,
            });
        }
        let matrices = (0..n)
            .map(|h| {
                let mut m = Matrix::zero(&field, n, n);
                for g in 0..n {
                    let hg = group.mul(h, g) as usize;
                    *m.at_mut(hg, g) = field.one();
                }
                m
            })
            .collect();
        Ok(Representation {
            group,
            field,
            dim: n,
            matrices,
        })
    }

    /// The trivial one-dimensional module.
    pub fn trivial(group: Arc<Group>, field: Field) -> Representation {
        let matrices = vec![Matrix::identity(&field, 1); group.order()];
        Representation {
            group,
            field,
            dim: 1,
            matrices,
        }
    }

    /// The permutation module on the left cosets of a subgroup.
    pub fn coset_permutation(
        group: Arc<Group>,
        field: Field,
        h: &Subgroup,
        limits: &Limits,
    ) -> Result<Representation> {
        let reps = h.left_transversal(&group);
        let r = reps.len();
        if r > limits.module_dim {
            return Err(Error::CapExceeded {
                what: "module dimension",
                cap: limits.module_dim,
            });
        }
        // coset index of each group element
        let mut coset_of = vec![u32::MAX; group.order()];
        for (ci, &t) in reps.iter().enumerate() {
            for &m in h.members() {
                coset_of[group.mul(t as usize, m as usize) as usize] = ci as u32;
            }
        }
        let matrices = (0..group.order())
            .map(|x| {
                let mut m = Matrix::zero(&field, r, r);
                for (ci, &t) in reps.iter().enumerate() {
                    let dst = coset_of[group.mul(x, t as usize) as usize] as usize;
                    *m.at_mut(dst, ci) = field.one();
                }
                m
            })
            .collect();
        Ok(Representation {
            group,
            field,
            dim: r,
            matrices,
        })
    }

    /// Block-diagonal sum of two modules of the same group over the same field.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if !self.same_group(other) {
            return Err(Error::GroupMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                "direct sum over different fields".into(),
            ));
        }
        let dim = self.dim + other.dim;
        let matrices = (0..self.group.order())
            .map(|e| {
                let mut m = Matrix::zero(&self.field, dim, dim);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        *m.at_mut(i, j) = self.matrices[e].at(i, j).clone();
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        *m.at_mut(self.dim + i, self.dim + j) =
                            other.matrices[e].at(i, j).clone();
                    }
                }
                m
            })
            .collect();
        Ok(Representation {
            group: Arc::clone(&self.group),
            field: self.field.clone(),
            dim,
            matrices,
        })
    }

    /// Restriction to a subgroup: same matrices, group replaced by the
    /// subgroup (rebuilt as a group in its own right).
    pub fn restrict(&self, h: &Subgroup) -> Result<Representation> {
        let (sub_group, embedding) = subgroup_to_group(&self.group, h)?;
        let matrices = embedding
            .iter()
            .map(|&parent_idx| self.matrices[parent_idx as usize].clone())
            .collect();
        Ok(Representation {
            group: Arc::new(sub_group),
            field: self.field.clone(),
            dim: self.dim,
            matrices,
        })
    }

    /// Joint fixed space of all group elements: canonical reduced-echelon
    /// kernel basis of the stacked `rho(g) - I` over the generators.
    pub fn fixed_subspace(&self) -> Vec<Vec<FieldElement>> {
        let gens = self.group.generators();
        let mut rows = Vec::with_capacity(gens.len() * self.dim);
        for &g in gens {
            let m = &self.matrices[g as usize];
            for i in 0..self.dim {
                let mut row = m.row(i).to_vec();
                row[i] = self.field.sub(&row[i], &self.field.one());
                rows.push(row);
            }
        }
        let stacked = Matrix::from_rows(rows).expect("uniform row length");
        stacked.kernel_basis(&self.field)
    }
}

/// Turns a subgroup into a [`Group`] of its own: a greedy generating set is
/// chosen (ascending members), closure order is rebuilt from it, and the
/// returned vector maps new indices back to parent element indices.
pub fn subgroup_to_group(parent: &Group, h: &Subgroup) -> Result<(Group, Vec<u32>)> {
    let gens = h.generating_set(parent);
    let mul = |a: &u32, b: &u32| parent.mul(*a as usize, *b as usize);
    let (elements, decomp, gen_indices) =
        close_elements(&gens, 0u32, mul, parent.order() + 1)?;
    if elements.len() != h.order() {
        return Err(Error::NotASubgroup);
    }
    let labels = elements
        .iter()
        .map(|&e| parent.label(e as usize))
        .collect();
    let group = Group::from_closure(&elements, decomp, gen_indices, mul, Some(labels))?;
    Ok((group, elements))
}

/// Closure of matrix generators, returned with the tautological module.
pub fn group_from_matrices(
    gens: Vec<Matrix>,
    field: Field,
    limits: &Limits,
) -> Result<(Arc<Group>, Representation)> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let dim = gens[0].rows();
    for (i, m) in gens.iter().enumerate() {
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: m.rows(),
            });
        }
        if m.inverse(&field).is_none() {
            return Err(Error::SingularGenerator(i));
        }
    }
    let identity = Matrix::identity(&field, dim);
    let mul = |a: &Matrix, b: &Matrix| a.mul(b, &field);
    let (elements, decomp, gen_indices) =
        close_elements(&gens, identity, mul, limits.group_order)?;
    let labels = elements.iter().map(matrix_label).collect();
    let group = Arc::new(Group::from_closure(
        &elements,
        decomp,
        gen_indices,
        mul,
        Some(labels),
    )?);
    let rep = Representation {
        group: Arc::clone(&group),
        field,
        dim,
        matrices: elements,
    };
    Ok((group, rep))
}

fn matrix_label(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let entries: Vec<String> = m.row(i).iter().map(|e| e.to_expr()).collect();
            format!("[{}]", entries.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// The standard induced module along a fixed left transversal. The natural
/// copy of the input module sits in the first block.
pub fn induce(
    h_rep: &Representation,
    g: &Arc<Group>,
    h: &Subgroup,
    limits: &Limits,
) -> Result<Representation> {
    let (h_group, embedding) = subgroup_to_group(g, h)?;
    if *h_rep.group().as_ref() != h_group {
        return Err(Error::GroupMismatch);
    }
    // parent index -> subgroup-group index
    let mut to_sub = vec![u32::MAX; g.order()];
    for (si, &pi) in embedding.iter().enumerate() {
        to_sub[pi as usize] = si as u32;
    }
    let reps = h.left_transversal(g);
    let r = reps.len();
    let d = h_rep.dim();
    let dim = r * d;
    if dim > limits.module_dim {
        return Err(Error::CapExceeded {
            what: "module dimension",
            cap: limits.module_dim,
        });
    }
    let field = h_rep.field().clone();
    let matrices = (0..g.order())
        .map(|x| {
            let mut m = Matrix::zero(&field, dim, dim);
            for (i, &ti) in reps.iter().enumerate() {
                let y = g.mul(x, ti as usize);
                // find the block row j with t_j^{-1} y in H
                let j = reps
                    .iter()
                    .position(|&tj| {
                        let w = g.mul(g.inv(tj as usize) as usize, y as usize);
                        to_sub[w as usize] != u32::MAX
                    })
                    .expect("transversal covers the group");
                let w = g.mul(g.inv(reps[j] as usize) as usize, y as usize);
                let inner = h_rep.matrix(to_sub[w as usize] as usize);
                for a in 0..d {
                    for b in 0..d {
                        *m.at_mut(j * d + a, i * d + b) = inner.at(a, b).clone();
                    }
                }
            }
            m
        })
        .collect();
    Representation::from_element_matrices(Arc::clone(g), field, matrices)
}

// ---------------------------------------------------------------------------
// Bespoke module families
// ---------------------------------------------------------------------------

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg.to_string()))
    }
}

fn is_prime_u32(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// The `i`-th diagonal summand of the regular module of `Z_q x| Z_d` over
/// `F_p(zeta_q)`: the order-`d` generator acts by a cyclic coordinate shift,
/// the order-`q` generator by `diag(zeta^{i k^{-j}})`, where `k` is the
/// smallest positive residue of multiplicative order `d` mod `q`. The direct
/// sum over `i = 0..q` is the regular module; `i = 0` factors through `Z_d`.
pub fn zqzd_summand(q: u32, d: u32, p: u32, i: u32, limits: &Limits) -> Result<Representation> {
    require(is_prime_u32(q), "q must be prime")?;
    require(is_prime_u32(p), "p must be prime")?;
    require(d >= 1 && d % p == 0, "p must divide d")?;
    require((q - 1) % d == 0, "d must divide q - 1")?;
    require(i < q, "summand index must be below q")?;

    let k_res = (2..q)
        .find(|&k| multiplicative_order_mod(k, q) == d)
        .ok_or_else(|| Error::Precondition("no residue of order d mod q".into()))?;

    // G as permutations of Z_q: g multiplies by k, h adds 1
    let g_perm: Vec<usize> = (0..q as usize).map(|x| (x * k_res as usize) % q as usize).collect();
    let h_perm: Vec<usize> = (0..q as usize).map(|x| (x + 1) % q as usize).collect();
    let group = Arc::new(Group::from_permutations(&[g_perm, h_perm], limits.group_order)?);
    debug_assert_eq!(group.order(), (q * d) as usize);

    let field = Field::with_root_orders(p, &[q])?;
    let zeta = field.primitive_root_of_unity(q as u64)?;

    let dd = d as usize;
    let mut g_mat = Matrix::zero(&field, dd, dd);
    for j in 0..dd {
        *g_mat.at_mut((j + 1) % dd, j) = field.one();
    }
    let k_inv = mod_pow(k_res as u64, (d - 1) as u64, q as u64); // k^{-1} mod q
    let mut h_mat = Matrix::zero(&field, dd, dd);
    let mut kmj = 1u64; // k^{-j} mod q
    for j in 0..dd {
        let expo = i as u64 * kmj % q as u64;
        *h_mat.at_mut(j, j) = field.pow(&zeta, expo);
        kmj = kmj * k_inv % q as u64;
    }
    Representation::from_generator_images(group, field, vec![g_mat, h_mat])
}

fn multiplicative_order_mod(a: u32, n: u32) -> u32 {
    let mut x = a as u64 % n as u64;
    let mut m = 1;
    while x != 1 {
        x = x * a as u64 % n as u64;
        m += 1;
    }
    m
}

fn mod_pow(mut b: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1u64;
    b %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % n;
        }
        b = b * b % n;
        e >>= 1;
    }
    acc
}

/// Module of dimension `|P|` for `P x A` (`A` abelian of the given cyclic
/// factor orders, all coprime to the characteristic): `P` acts through its
/// regular representation, each cyclic factor of `A` by the scalar
/// `zeta^{e/n}` where `e = exp(A)` and `zeta` is a primitive `e`-th root.
pub fn p_times_a_module(
    p_group: &Group,
    a_orders: &[u32],
    char_p: u32,
    limits: &Limits,
) -> Result<Representation> {
    require(is_prime_u32(char_p), "characteristic must be prime")?;
    require(
        is_p_power_usize(p_group.order(), char_p as usize),
        "group order must be a power of the characteristic",
    )?;
    for &n in a_orders {
        require(n >= 1, "cyclic factor orders must be positive")?;
        require(n % char_p != 0, "cyclic factor order divisible by the characteristic")?;
    }
    let np = p_group.order();
    if np > limits.module_dim {
        return Err(Error::CapExceeded {
            what: "module dimension",
            cap: limits.module_dim,
        });
    }
    let e = a_orders.iter().fold(1u64, |acc, &n| {
        let n = n as u64;
        acc / gcd_u64(acc, n) * n
    });

    // permutation generators: left translations of P on its own elements,
    // then one cycle per cyclic factor on a fresh block of points
    let total_pts = np + a_orders.iter().map(|&n| n as usize).sum::<usize>();
    let mut perm_gens: Vec<Vec<usize>> = Vec::new();
    for &x in p_group.generators() {
        let mut perm: Vec<usize> = (0..total_pts).collect();
        for g in 0..np {
            perm[g] = p_group.mul(x as usize, g) as usize;
        }
        perm_gens.push(perm);
    }
    let mut offset = np;
    for &n in a_orders {
        let n = n as usize;
        let mut perm: Vec<usize> = (0..total_pts).collect();
        for j in 0..n {
            perm[offset + j] = offset + (j + 1) % n;
        }
        perm_gens.push(perm);
        offset += n;
    }
    let group = Arc::new(Group::from_permutations(&perm_gens, limits.group_order)?);

    let field = Field::with_root_orders(char_p, &[e as u32])?;
    let zeta = field.primitive_root_of_unity(e)?;

    let mut images = Vec::new();
    for &x in p_group.generators() {
        let mut m = Matrix::zero(&field, np, np);
        for g in 0..np {
            *m.at_mut(p_group.mul(x as usize, g) as usize, g) = field.one();
        }
        images.push(m);
    }
    for &n in a_orders {
        let scalar = field.pow(&zeta, e / n as u64);
        images.push(Matrix::identity(&field, np).scale(&scalar, &field));
    }
    Representation::from_generator_images(group, field, images)
}

fn is_p_power_usize(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Module of dimension `|P|` for `P x| <t>` where `t` acts on `P` through the
/// given automorphism (as an index permutation) of exact order `r` coprime to
/// the characteristic: `P` acts through its regular representation and `t`
/// sends the basis vector of `g` to `zeta^{-1}` times the vector of `t(g)`.
pub fn normalizer_twist_module(
    p_group: &Group,
    auto_t: &[u32],
    r: u32,
    char_p: u32,
    limits: &Limits,
) -> Result<Representation> {
    require(is_prime_u32(char_p), "characteristic must be prime")?;
    require(r >= 1 && r % char_p != 0, "twist order divisible by the characteristic")?;
    let np = p_group.order();
    require(auto_t.len() == np, "automorphism must cover the group")?;
    if np > limits.module_dim {
        return Err(Error::CapExceeded {
            what: "module dimension",
            cap: limits.module_dim,
        });
    }
    // automorphism checks: bijection fixing the identity, multiplicative
    let mut seen = vec![false; np];
    for &img in auto_t {
        if img as usize >= np || seen[img as usize] {
            return Err(Error::Precondition("not a bijection of the group".into()));
        }
        seen[img as usize] = true;
    }
    if auto_t[0] != 0 {
        return Err(Error::Precondition("automorphism must fix the identity".into()));
    }
    for a in 0..np {
        for b in 0..np {
            let ab = p_group.mul(a, b) as usize;
            if auto_t[ab] != p_group.mul(auto_t[a] as usize, auto_t[b] as usize) {
                return Err(Error::Precondition("map is not an automorphism".into()));
            }
        }
    }
    // exact order r
    let mut power: Vec<u32> = (0..np as u32).collect();
    let mut ord = 0u32;
    loop {
        power = power.iter().map(|&x| auto_t[x as usize]).collect();
        ord += 1;
        if power.iter().enumerate().all(|(i, &x)| x == i as u32) {
            break;
        }
        if ord > r {
            return Err(Error::Precondition("automorphism order exceeds r".into()));
        }
    }
    if ord != r {
        return Err(Error::Precondition(format!(
            "automorphism has order {ord}, expected {r}"
        )));
    }

    // permutations of the |P| regular points: left translations and the twist
    let mut perm_gens: Vec<Vec<usize>> = Vec::new();
    for &x in p_group.generators() {
        perm_gens.push((0..np).map(|g| p_group.mul(x as usize, g) as usize).collect());
    }
    perm_gens.push(auto_t.iter().map(|&x| x as usize).collect());
    let group = Arc::new(Group::from_permutations(&perm_gens, limits.group_order)?);
    debug_assert_eq!(group.order(), np * r as usize);

    let field = Field::with_root_orders(char_p, &[r])?;
    let zeta = field.primitive_root_of_unity(r as u64)?;
    let zeta_inv = field.inv(&zeta).expect("root of unity is nonzero");

    let mut images = Vec::new();
    for &x in p_group.generators() {
        let mut m = Matrix::zero(&field, np, np);
        for g in 0..np {
            *m.at_mut(p_group.mul(x as usize, g) as usize, g) = field.one();
        }
        images.push(m);
    }
    let mut t_mat = Matrix::zero(&field, np, np);
    for g in 0..np {
        *t_mat.at_mut(auto_t[g] as usize, g) = zeta_inv.clone();
    }
    images.push(t_mat);
    Representation::from_generator_images(group, field, images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    fn s3() -> Arc<Group> {
        Arc::new(Group::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], 512).unwrap())
    }

    fn z4() -> Arc<Group> {
        Arc::new(Group::from_permutations(&[vec![1, 2, 3, 0]], 512).unwrap())
    }

    fn z2() -> Arc<Group> {
        Arc::new(Group::from_permutations(&[vec![1, 0]], 512).unwrap())
    }

    #[test]
    fn regular_rep_is_permutation() {
        let f2 = Field::prime(2).unwrap();
        let v = Representation::regular(s3(), f2.clone(), &limits()).unwrap();
        assert_eq!(v.dim(), 6);
        for e in 0..6 {
            let m = v.matrix(e);
            for i in 0..6 {
                let ones = (0..6).filter(|&j| !m.at(i, j).is_zero()).count();
                assert_eq!(ones, 1);
            }
        }
        // the swap for Z2
        let w = Representation::regular(z2(), f2, &limits()).unwrap();
        assert!(w.matrix(1).at(0, 1) == &w.field().one());
        assert!(w.matrix(1).at(1, 0) == &w.field().one());
    }

    #[test]
    fn regular_fixed_space_is_all_ones() {
        let f3 = Field::prime(3).unwrap();
        for g in [s3(), z4()] {
            let v = Representation::regular(g, f3.clone(), &limits()).unwrap();
            let fixed = v.fixed_subspace();
            assert_eq!(fixed.len(), 1);
            assert!(fixed[0].iter().all(|e| *e == f3.one()));
        }
    }

    #[test]
    fn paper_matrix_group_closes_to_order_12() {
        let f3 = Field::prime(3).unwrap();
        let c = Matrix::from_rows(vec![
            vec![f3.zero(), f3.zero(), f3.one()],
            vec![f3.one(), f3.zero(), f3.zero()],
            vec![f3.zero(), f3.one(), f3.zero()],
        ])
        .unwrap();
        let d = Matrix::from_rows(vec![
            vec![f3.from_u32(2), f3.zero(), f3.zero()],
            vec![f3.zero(), f3.from_u32(2), f3.zero()],
            vec![f3.zero(), f3.zero(), f3.one()],
        ])
        .unwrap();
        let (group, rep) = group_from_matrices(vec![c, d], f3, &limits()).unwrap();
        assert_eq!(group.order(), 12);
        assert_eq!(rep.dim(), 3);
        assert!(rep.fixed_subspace().is_empty());
    }

    #[test]
    fn singular_generator_is_rejected() {
        let f3 = Field::prime(3).unwrap();
        let sing = Matrix::zero(&f3, 2, 2);
        assert!(matches!(
            group_from_matrices(vec![sing], f3, &limits()),
            Err(Error::SingularGenerator(0))
        ));
    }

    #[test]
    fn direct_sum_blocks() {
        let f2 = Field::prime(2).unwrap();
        let v = Representation::regular(z2(), f2, &limits()).unwrap();
        let w = v.direct_sum(&v).unwrap();
        assert_eq!(w.dim(), 4);
        for e in 0..2 {
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(w.matrix(e).at(i, j), v.matrix(e).at(i, j));
                    assert_eq!(w.matrix(e).at(2 + i, 2 + j), v.matrix(e).at(i, j));
                    assert!(w.matrix(e).at(i, 2 + j).is_zero());
                }
            }
        }
    }

    #[test]
    fn mismatched_sum_fails() {
        let f2 = Field::prime(2).unwrap();
        let v = Representation::regular(z2(), f2.clone(), &limits()).unwrap();
        let w = Representation::regular(z4(), f2, &limits()).unwrap();
        assert!(matches!(v.direct_sum(&w), Err(Error::GroupMismatch)));
    }

    #[test]
    fn restriction() {
        let f2 = Field::prime(2).unwrap();
        let s3 = s3();
        let v = Representation::regular(Arc::clone(&s3), f2, &limits()).unwrap();
        let a3 = crate::group::sylow_subgroup(&s3, 3);
        let r = v.restrict(&a3).unwrap();
        assert_eq!(r.group().order(), 3);
        assert_eq!(r.dim(), 6);
        // restriction to the whole group keeps everything
        let w = v.restrict(&Subgroup::whole(&s3)).unwrap();
        assert_eq!(w.group().order(), 6);
        assert_eq!(w.dim(), 6);
        // restriction to the trivial subgroup is all identities
        let t = v.restrict(&Subgroup::trivial()).unwrap();
        assert!(t.matrix(0).is_identity(t.field()));
    }

    #[test]
    fn induction_dimensions_and_embedding() {
        let f2 = Field::prime(2).unwrap();
        let s3 = s3();
        let a3 = crate::group::sylow_subgroup(&s3, 3);
        let (a3_group, _) = subgroup_to_group(&s3, &a3).unwrap();
        let a3_group = Arc::new(a3_group);
        let triv = Representation::trivial(Arc::clone(&a3_group), f2.clone());
        let ind = induce(&triv, &s3, &a3, &limits()).unwrap();
        assert_eq!(ind.dim(), 2);

        // inducing from the whole group is the identity operation
        let whole = Subgroup::whole(&s3);
        let (wg, _) = subgroup_to_group(&s3, &whole).unwrap();
        let reg = Representation::regular(Arc::new(wg), f2.clone(), &limits()).unwrap();
        let same = induce(&reg, &s3, &whole, &limits()).unwrap();
        assert_eq!(same.dim(), reg.dim());

        // H-equivariant embedding: for h in H the first block is rho_H(h)
        let z4 = z4();
        let z2_sub = Subgroup::generated(&z4, &[z4.mul(1, 1)]);
        let (z2g, emb) = subgroup_to_group(&z4, &z2_sub).unwrap();
        let z2g = Arc::new(z2g);
        let vreg = Representation::regular(Arc::clone(&z2g), f2, &limits()).unwrap();
        let ind = induce(&vreg, &z4, &z2_sub, &limits()).unwrap();
        assert_eq!(ind.dim(), 4);
        for (si, &pi) in emb.iter().enumerate() {
            for a in 0..2 {
                for b in 0..2 {
                    assert_eq!(
                        ind.matrix(pi as usize).at(a, b),
                        vreg.matrix(si).at(a, b)
                    );
                }
            }
        }
    }

    #[test]
    fn zqzd_summands_match_the_construction() {
        let lim = limits();
        let v = zqzd_summand(3, 2, 2, 1, &lim).unwrap();
        assert_eq!(v.dim(), 2);
        assert_eq!(v.group().order(), 6);
        let f = v.field();
        assert_eq!(f.order(), 4);
        let zeta = f.primitive_root_of_unity(3).unwrap();
        let gens = v.group().generators();
        let g_mat = v.matrix(gens[0] as usize);
        let h_mat = v.matrix(gens[1] as usize);
        // g swaps coordinates
        assert_eq!(g_mat.at(1, 0), &f.one());
        assert_eq!(g_mat.at(0, 1), &f.one());
        // h is diag(zeta, zeta^2)
        assert_eq!(h_mat.at(0, 0), &zeta);
        assert_eq!(h_mat.at(1, 1), &f.mul(&zeta, &zeta));
        // relations: h^3 = I and g h g^{-1} = h^2
        let h3 = h_mat.mul(h_mat, f).mul(h_mat, f);
        assert!(h3.is_identity(f));
        let g_inv = g_mat.inverse(f).unwrap();
        let conj = g_mat.mul(h_mat, f).mul(&g_inv, f);
        assert_eq!(conj, h_mat.mul(h_mat, f));

        // i = 0 factors through Z_d: h acts trivially
        let v0 = zqzd_summand(3, 2, 2, 0, &lim).unwrap();
        let h0 = v0.matrix(v0.group().generators()[1] as usize);
        assert!(h0.is_identity(v0.field()));

        // dimensions over all i sum to |G|
        let total: usize = (0..3)
            .map(|i| zqzd_summand(3, 2, 2, i, &lim).unwrap().dim())
            .sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn zqzd_preconditions() {
        let lim = limits();
        assert!(zqzd_summand(4, 2, 2, 0, &lim).is_err()); // q not prime
        assert!(zqzd_summand(3, 2, 3, 0, &lim).is_err()); // p does not divide d
        assert!(zqzd_summand(5, 3, 3, 0, &lim).is_err()); // d does not divide q-1
        assert!(zqzd_summand(3, 2, 2, 3, &lim).is_err()); // i out of range
    }

    #[test]
    fn p_times_a_instances() {
        let lim = limits();
        let z2 = z2();
        let v = p_times_a_module(&z2, &[3], 2, &lim).unwrap();
        assert_eq!(v.dim(), 2);
        assert_eq!(v.group().order(), 6);
        assert_eq!(v.field().order(), 4);

        // trivial P gives a one-dimensional scalar module
        let triv = Group::from_permutations(&[vec![0]], 8).unwrap();
        let w = p_times_a_module(&triv, &[3], 2, &lim).unwrap();
        assert_eq!(w.dim(), 1);
        assert_eq!(w.group().order(), 3);

        // order must be coprime to the characteristic
        assert!(p_times_a_module(&z2, &[2], 2, &lim).is_err());
        // p-group must actually be a p-group
        let z3 = Group::from_permutations(&[vec![1, 2, 0]], 8).unwrap();
        assert!(p_times_a_module(&z3, &[5], 2, &lim).is_err());
    }

    #[test]
    fn twist_module_instances() {
        let lim = limits();
        let z3 = Group::from_permutations(&[vec![1, 2, 0]], 8).unwrap();
        // inversion automorphism by element index
        let inv: Vec<u32> = (0..3).map(|i| z3.inv(i)).collect();
        let v = normalizer_twist_module(&z3, &inv, 2, 3, &lim).unwrap();
        assert_eq!(v.dim(), 3);
        assert_eq!(v.group().order(), 6);
        assert_eq!(v.field().characteristic(), 3);
        assert_eq!(v.field().degree(), 1);
        // rho(t)^2 = I and the twist relation rho(t) rho(x) rho(t)^-1 = rho(t(x))
        let t_idx = v.group().generators()[1] as usize;
        let t = v.matrix(t_idx);
        assert!(t.mul(t, v.field()).is_identity(v.field()));

        // identity twist of order 1 is the plain regular module
        let id: Vec<u32> = (0..3).collect();
        let w = normalizer_twist_module(&z3, &id, 1, 3, &lim).unwrap();
        assert_eq!(w.group().order(), 3);
        assert_eq!(w.dim(), 3);

        // wrong order is rejected
        assert!(normalizer_twist_module(&z3, &inv, 4, 3, &lim).is_err());
        // non-automorphism is rejected
        assert!(normalizer_twist_module(&z3, &[0, 0, 1], 2, 3, &lim).is_err());
    }
}
