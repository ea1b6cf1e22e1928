//! Finite groups as Cayley tables obtained by generator closure.
//!
//! Elements are canonical indices `0..order` with index 0 the identity.
//! The index order is the breadth-first closure order from the generators
//! (ties broken by generator position), which makes every downstream
//! construction — transversals, regular representations, induced modules —
//! deterministic.

use crate::{Error, Result};
use std::collections::HashMap;
use std::hash::Hash;

/// A finite group: multiplication table plus closure bookkeeping.
#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    /// `cayley[a * order + b]` is the index of `a * b`.
    cayley: Vec<u32>,
    inverse: Vec<u32>,
    /// Indices of the closure generators, in the order they were given.
    generators: Vec<u32>,
    /// For each non-identity element: `(parent, gen_pos)` with
    /// `element = parent * generators[gen_pos]`, following the BFS tree.
    decomp: Vec<(u32, u32)>,
    /// Display labels captured during closure (cycle notation, matrices, ...).
    labels: Option<Vec<String>>,
    /// The raw generator permutations, kept when the group came from
    /// permutations so it can be serialized back out.
    gen_perms: Option<Vec<Vec<u16>>>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.cayley == other.cayley
    }
}
impl Eq for Group {}

/// Closes a generator list under an associative product, breadth first.
/// Returns the elements in discovery order, the BFS decomposition, and the
/// index of each generator.
pub(crate) fn close_elements<E, M>(
    gens: &[E],
    identity: E,
    mul: M,
    cap: usize,
) -> Result<(Vec<E>, Vec<(u32, u32)>, Vec<u32>)>
where
    E: Clone + Eq + Hash,
    M: Fn(&E, &E) -> E,
{
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<E, u32> = HashMap::new();
    index.insert(identity, 0);
    let mut decomp = vec![(0u32, u32::MAX)];
    let mut head = 0usize;
    while head < elements.len() {
        for (gpos, g) in gens.iter().enumerate() {
            let prod = mul(&elements[head], g);
            if !index.contains_key(&prod) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "group order",
                        cap,
                    });
                }
                index.insert(prod.clone(), elements.len() as u32);
                decomp.push((head as u32, gpos as u32));
                elements.push(prod);
            }
        }
        head += 1;
    }
    let gen_indices = gens.iter().map(|g| index[g]).collect();
    Ok((elements, decomp, gen_indices))
}

impl Group {
    /// Assembles a group from closed element data. Validates the table:
    /// identity row/column, rows and columns permutations, associativity
    /// (exhaustive up to order 128, strided sample above).
    pub(crate) fn from_closure<E, M>(
        elements: &[E],
        decomp: Vec<(u32, u32)>,
        gen_indices: Vec<u32>,
        mul: M,
        labels: Option<Vec<String>>,
    ) -> Result<Group>
    where
        E: Clone + Eq + Hash,
        M: Fn(&E, &E) -> E,
    {
        let order = elements.len();
        let mut index: HashMap<&E, u32> = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            index.insert(e, i as u32);
        }
        let mut cayley = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                let prod = mul(&elements[a], &elements[b]);
                let Some(&idx) = index.get(&prod) else {
                    return Err(Error::NotASubgroup);
                };
                cayley[a * order + b] = idx;
            }
        }
        let mut inverse = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if cayley[a * order + b] == 0 {
                    inverse[a] = b as u32;
                }
            }
        }
        let g = Group {
            order,
            cayley,
            inverse,
            generators: gen_indices,
            decomp,
            labels,
            gen_perms: None,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        let bad = |msg: &str| Err(Error::NotAHomomorphism(format!("cayley table: {msg}")));
        for a in 0..n {
            if self.mul(0, a) != a as u32 || self.mul(a, 0) != a as u32 {
                return bad("identity law fails");
            }
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for b in 0..n {
                let r = self.mul(a, b) as usize;
                let c = self.mul(b, a) as usize;
                if seen_row[r] || seen_col[c] {
                    return bad("row or column is not a permutation");
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
            if self.inverse[a] == u32::MAX {
                return bad("missing inverse");
            }
        }
        // associativity: full check is cubic, sample on larger tables
        let stride = if n <= 128 { 1 } else { n / 64 + 1 };
        for a in (0..n).step_by(stride) {
            for b in (0..n).step_by(stride) {
                for c in (0..n).step_by(stride) {
                    let x = self.mul(self.mul(a, b) as usize, c);
                    let y = self.mul(a, self.mul(b, c) as usize);
                    if x != y {
                        return bad("associativity fails");
                    }
                }
            }
        }
        Ok(())
    }

    /// Group from permutation generators on `{1..n}`, written 0-based
    /// internally. Every generator must be a bijection of the same set.
    pub fn from_permutations(gens: &[Vec<usize>], cap: usize) -> Result<Group> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let n = gens.iter().map(|g| g.len()).max().unwrap();
        let mut perms: Vec<Vec<u16>> = Vec::with_capacity(gens.len());
        for g in gens {
            let mut p: Vec<u16> = (0..n as u16).collect();
            for (i, &img) in g.iter().enumerate() {
                if img >= g.len() {
                    return Err(Error::NotAPermutation(format!(
                        "image {img} out of range in a permutation of {} points",
                        g.len()
                    )));
                }
                p[i] = img as u16;
            }
            let mut seen = vec![false; n];
            for &img in &p {
                if seen[img as usize] {
                    return Err(Error::NotAPermutation("repeated image".into()));
                }
                seen[img as usize] = true;
            }
            perms.push(p);
        }
        let identity: Vec<u16> = (0..n as u16).collect();
        // product a*b acts as `apply b first, then a`
        let mul = |a: &Vec<u16>, b: &Vec<u16>| -> Vec<u16> {
            b.iter().map(|&i| a[i as usize]).collect()
        };
        let (elements, decomp, gen_indices) = close_elements(&perms, identity, mul, cap)?;
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        let mut g = Group::from_closure(&elements, decomp, gen_indices, mul, Some(labels))?;
        g.gen_perms = Some(perms);
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> u32 {
        self.cayley[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> u32 {
        self.inverse[a]
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// The generator permutations, when the group was built from them.
    pub fn generator_permutations(&self) -> Option<&[Vec<u16>]> {
        self.gen_perms.as_deref()
    }

    pub(crate) fn decomp(&self) -> &[(u32, u32)] {
        &self.decomp
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(ls) => ls[i].clone(),
            None => format!("g{i}"),
        }
    }

    pub fn pow(&self, a: usize, e: i64) -> u32 {
        let x = if e < 0 { self.inv(a) } else { a as u32 };
        let mut acc = 0u32;
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(acc as usize, x as usize);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a as u32;
        let mut m = 1;
        while x != 0 {
            x = self.mul(x as usize, a);
            m += 1;
        }
        m
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> usize {
        let mut e: usize = 1;
        for a in 0..self.order {
            let o = self.element_order(a);
            e = e / gcd_usize(e, o) * o;
        }
        e
    }

    pub fn smallest_prime_divisor(&self) -> Option<usize> {
        if self.order == 1 {
            return None;
        }
        let mut d = 2;
        while d * d <= self.order {
            if self.order % d == 0 {
                return Some(d);
            }
            d += 1;
        }
        Some(self.order)
    }

    /// Largest power of `p` dividing the group order.
    pub fn p_part(&self, p: usize) -> usize {
        let mut n = self.order;
        let mut part = 1;
        while n % p == 0 {
            n /= p;
            part *= p;
        }
        part
    }

    /// Closure of a seed set inside this group, sorted ascending.
    pub fn subgroup_closure(&self, seed: &[u32]) -> Vec<u32> {
        let mut members = vec![0u32];
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut queue: Vec<u32> = Vec::new();
        for &s in seed {
            if !in_set[s as usize] {
                in_set[s as usize] = true;
                members.push(s);
                queue.push(s);
            }
        }
        let seeds: Vec<u32> = seed.to_vec();
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &s in &seeds {
                let y = self.mul(x as usize, s as usize);
                if !in_set[y as usize] {
                    in_set[y as usize] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        members
    }
}

fn gcd_usize(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd_usize(b, a % b)
    }
}

/// Cycle notation for display, 1-based points: `(1 2)(3 4)`, identity `()`.
pub fn cycle_notation(p: &[u16]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] as usize == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut cur = p[start] as usize;
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            cur = p[cur] as usize;
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(|&i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// A subgroup given by its sorted member indices in a parent [`Group`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<u32>,
}

impl Subgroup {
    pub fn trivial() -> Subgroup {
        Subgroup { members: vec![0] }
    }

    pub fn whole(group: &Group) -> Subgroup {
        Subgroup {
            members: (0..group.order() as u32).collect(),
        }
    }

    /// Subgroup generated by seed elements.
    pub fn generated(group: &Group, seed: &[u32]) -> Subgroup {
        Subgroup {
            members: group.subgroup_closure(seed),
        }
    }

    /// Validates that a member list is a subgroup (identity, closure).
    pub fn from_members(group: &Group, mut members: Vec<u32>) -> Result<Subgroup> {
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) {
            return Err(Error::NotASubgroup);
        }
        for &a in &members {
            for &b in &members {
                let c = group.mul(a as usize, b as usize);
                if members.binary_search(&c).is_err() {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(Subgroup { members })
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn index_in(&self, group: &Group) -> usize {
        group.order() / self.order()
    }

    pub fn is_whole(&self, group: &Group) -> bool {
        self.order() == group.order()
    }

    pub fn is_normal(&self, group: &Group) -> bool {
        for x in 0..group.order() {
            let xi = group.inv(x) as usize;
            for &h in &self.members {
                let c = group.mul(group.mul(x, h as usize) as usize, xi);
                if !self.contains(c) {
                    return false;
                }
            }
        }
        true
    }

    /// Left-coset representatives: the smallest-index element of each coset,
    /// listed in index order. The identity is always first.
    pub fn left_transversal(&self, group: &Group) -> Vec<u32> {
        let mut covered = vec![false; group.order()];
        let mut reps = Vec::with_capacity(self.index_in(group));
        for g in 0..group.order() {
            if covered[g] {
                continue;
            }
            reps.push(g as u32);
            for &h in &self.members {
                covered[group.mul(g, h as usize) as usize] = true;
            }
        }
        reps
    }

    /// A small generating set: greedy over ascending members.
    pub fn generating_set(&self, group: &Group) -> Vec<u32> {
        let mut gens: Vec<u32> = Vec::new();
        let mut closure = vec![0u32];
        for &m in &self.members {
            if closure.binary_search(&m).is_err() {
                gens.push(m);
                closure = group.subgroup_closure(&gens);
                if closure.len() == self.members.len() {
                    break;
                }
            }
        }
        if gens.is_empty() {
            gens.push(0); // trivial subgroup still needs a generator
        }
        gens
    }
}

/// A Sylow `p`-subgroup: deterministic greedy closure over `p`-elements,
/// smallest index first, with backtracking. Returns the trivial subgroup
/// when `p` does not divide the group order.
pub fn sylow_subgroup(group: &Group, p: usize) -> Subgroup {
    let target = group.p_part(p);
    if target == 1 {
        return Subgroup::trivial();
    }
    let p_elements: Vec<u32> = (1..group.order() as u32)
        .filter(|&x| is_p_power(group.element_order(x as usize), p))
        .collect();

    fn extend(
        group: &Group,
        current: &[u32],
        p_elements: &[u32],
        p: usize,
        target: usize,
    ) -> Option<Vec<u32>> {
        if current.len() == target {
            return Some(current.to_vec());
        }
        for &x in p_elements {
            if current.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed: Vec<u32> = current.iter().copied().filter(|&m| m != 0).collect();
            seed.push(x);
            let closure = group.subgroup_closure(&seed);
            if closure.len() <= target && is_p_power(closure.len(), p) {
                if let Some(found) = extend(group, &closure, p_elements, p, target) {
                    return Some(found);
                }
            }
        }
        None
    }

    let members = extend(group, &[0], &p_elements, p, target)
        .expect("a Sylow subgroup exists for every prime");
    Subgroup { members }
}

fn is_p_power(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// All `x` with `x H x^{-1} = H`, by exhaustive scan.
pub fn normalizer(group: &Group, h: &Subgroup) -> Subgroup {
    let members = (0..group.order() as u32)
        .filter(|&x| {
            let xi = group.inv(x as usize) as usize;
            h.members().iter().all(|&m| {
                let c = group.mul(group.mul(x as usize, m as usize) as usize, xi);
                h.contains(c)
            })
        })
        .collect();
    Subgroup { members }
}

/// Is the quotient `n / p_sub` cyclic? Requires `p_sub` normal in `n`
/// (checked). Decided by looking for a coset whose order equals the index.
pub fn quotient_is_cyclic(group: &Group, n: &Subgroup, p_sub: &Subgroup) -> Result<bool> {
    for &m in p_sub.members() {
        if !n.contains(m) {
            return Err(Error::NotASubgroup);
        }
    }
    let restricted_normal = n.members().iter().all(|&x| {
        let xi = group.inv(x as usize) as usize;
        p_sub.members().iter().all(|&h| {
            p_sub.contains(group.mul(group.mul(x as usize, h as usize) as usize, xi))
        })
    });
    if !restricted_normal {
        return Err(Error::NotNormal);
    }
    let index = n.order() / p_sub.order();
    for &x in n.members() {
        let mut y = x;
        let mut m = 1;
        while !p_sub.contains(y) {
            y = group.mul(y as usize, x as usize);
            m += 1;
        }
        if m == index {
            return Ok(true);
        }
    }
    Ok(index == 1)
}

/// Isomorphism test by backtracking over generator images: candidates are
/// matched by element order, extended along the closure tree, and verified
/// against both multiplication tables. Exhaustive, intended for desk-scale
/// orders.
pub fn are_isomorphic(a: &Group, b: &Group) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let n = a.order();
    // quick invariant: multiset of element orders
    let mut orders_a: Vec<usize> = (0..n).map(|x| a.element_order(x)).collect();
    let mut orders_b: Vec<usize> = (0..n).map(|x| b.element_order(x)).collect();
    let raw_orders_a = orders_a.clone();
    orders_a.sort_unstable();
    orders_b.sort_unstable();
    if orders_a != orders_b {
        return false;
    }

    let gens = &a.generators;
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&g| {
            let want = raw_orders_a[g as usize];
            (0..n as u32)
                .filter(|&y| b.element_order(y as usize) == want)
                .collect()
        })
        .collect();

    fn extend_and_check(a: &Group, b: &Group, images: &[u32]) -> bool {
        let n = a.order();
        let mut phi = vec![u32::MAX; n];
        phi[0] = 0;
        for (e, &(parent, gpos)) in a.decomp.iter().enumerate().skip(1) {
            let p_img = phi[parent as usize];
            phi[e] = b.mul(p_img as usize, images[gpos as usize] as usize);
        }
        let mut seen = vec![false; n];
        for &img in &phi {
            if img == u32::MAX || seen[img as usize] {
                return false;
            }
            seen[img as usize] = true;
        }
        for x in 0..n {
            for y in 0..n {
                if phi[a.mul(x, y) as usize] != b.mul(phi[x] as usize, phi[y] as usize) {
                    return false;
                }
            }
        }
        true
    }

    fn search(
        a: &Group,
        b: &Group,
        candidates: &[Vec<u32>],
        chosen: &mut Vec<u32>,
    ) -> bool {
        if chosen.len() == candidates.len() {
            return extend_and_check(a, b, chosen);
        }
        for &c in &candidates[chosen.len()] {
            chosen.push(c);
            if search(a, b, candidates, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    search(a, b, &candidates, &mut Vec::new())
}

/// When the set of elements of order coprime to `p` is closed under
/// multiplication it forms a normal complement of the Sylow `p`-subgroup;
/// returns it. `None` when the group is not `p`-nilpotent.
pub fn p_nilpotent_complement(group: &Group, p: usize) -> Option<Subgroup> {
    let members: Vec<u32> = (0..group.order() as u32)
        .filter(|&x| group.element_order(x as usize) % p != 0)
        .collect();
    for &a in &members {
        for &b in &members {
            let c = group.mul(a as usize, b as usize);
            if members.binary_search(&c).is_err() {
                return None;
            }
        }
    }
    if members.len() * group.p_part(p) != group.order() {
        return None;
    }
    Some(Subgroup { members })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn s3() -> Group {
        // (1 2) and (1 2 3), 0-based images
        Group::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], 512).unwrap()
    }

    pub(crate) fn z4() -> Group {
        Group::from_permutations(&[vec![1, 2, 3, 0]], 512).unwrap()
    }

    pub(crate) fn a4() -> Group {
        // (1 2)(3 4) and (1 2 3)
        Group::from_permutations(&[vec![1, 0, 3, 2], vec![1, 2, 0, 3]], 512).unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(s3().order(), 6);
        assert_eq!(z4().order(), 4);
        assert_eq!(a4().order(), 12);
    }

    #[test]
    fn closure_cap_is_enforced() {
        let err = Group::from_permutations(&[vec![1, 2, 3, 0]], 3).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Group::from_permutations(&[vec![0, 0, 1]], 64).is_err());
        assert!(Group::from_permutations(&[], 64).is_err());
    }

    #[test]
    fn group_axioms_hold() {
        for g in [s3(), z4(), a4()] {
            let n = g.order();
            for a in 0..n {
                assert_eq!(g.mul(a, g.inv(a) as usize), 0);
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(
                            g.mul(g.mul(a, b) as usize, c),
                            g.mul(a, g.mul(b, c) as usize)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sylow_orders() {
        let s3 = s3();
        assert_eq!(sylow_subgroup(&s3, 3).order(), 3);
        assert_eq!(sylow_subgroup(&s3, 2).order(), 2);
        assert_eq!(sylow_subgroup(&s3, 5).order(), 1);
        let a4 = a4();
        assert_eq!(sylow_subgroup(&a4, 2).order(), 4);
        assert_eq!(sylow_subgroup(&a4, 3).order(), 3);
    }

    #[test]
    fn normalizers() {
        let s3 = s3();
        let p3 = sylow_subgroup(&s3, 3);
        assert!(p3.is_normal(&s3));
        assert_eq!(normalizer(&s3, &p3).order(), 6);
        let p2 = sylow_subgroup(&s3, 2);
        assert!(!p2.is_normal(&s3));
        assert_eq!(normalizer(&s3, &p2).order(), 2);

        let a4 = a4();
        let v4 = sylow_subgroup(&a4, 2);
        assert_eq!(normalizer(&a4, &v4).order(), 12);
    }

    #[test]
    fn transversal_starts_at_identity() {
        let s3 = s3();
        let a3 = sylow_subgroup(&s3, 3);
        let t = a3.left_transversal(&s3);
        assert_eq!(t.len(), 2);
        assert_eq!(t[0], 0);
        // representatives hit distinct cosets
        let c = s3.mul(s3.inv(t[0] as usize) as usize, t[1] as usize);
        assert!(!a3.contains(c));
    }

    #[test]
    fn quotient_cyclicity() {
        let s3 = s3();
        let p3 = sylow_subgroup(&s3, 3);
        // S3 / A3 has order 2: cyclic
        assert!(quotient_is_cyclic(&s3, &Subgroup::whole(&s3), &p3).unwrap());
        let a4 = a4();
        let v4 = sylow_subgroup(&a4, 2);
        // A4 / V4 has order 3: cyclic
        assert!(quotient_is_cyclic(&a4, &Subgroup::whole(&a4), &v4).unwrap());
        // N_{A4}(P3)/P3 for the Sylow 3 is trivial: cyclic by convention
        let p3 = sylow_subgroup(&a4, 3);
        let n = normalizer(&a4, &p3);
        assert_eq!(n.order(), 3);
        assert!(quotient_is_cyclic(&a4, &n, &p3).unwrap());
    }

    #[test]
    fn p_nilpotency() {
        let s3 = s3();
        // S3 is 2-nilpotent with complement A3
        let h = p_nilpotent_complement(&s3, 2).unwrap();
        assert_eq!(h.order(), 3);
        assert!(h.is_normal(&s3));
        // S3 is not 3-nilpotent (no normal subgroup of order 2)
        assert!(p_nilpotent_complement(&s3, 3).is_none());
        // A4 is not 2-nilpotent
        assert!(p_nilpotent_complement(&a4(), 2).is_none());
    }

    #[test]
    fn exponent_and_orders() {
        assert_eq!(s3().exponent(), 6);
        assert_eq!(z4().exponent(), 4);
        assert_eq!(a4().exponent(), 6);
        assert_eq!(s3().smallest_prime_divisor(), Some(2));
    }

    #[test]
    fn isomorphism_testing() {
        // S3 built from different generators is still S3
        let s3a = s3();
        let s3b = Group::from_permutations(&[vec![0, 2, 1], vec![2, 0, 1]], 512).unwrap();
        assert!(are_isomorphic(&s3a, &s3b));
        // but not the cyclic group of the same order
        let z6 = Group::from_permutations(&[vec![1, 2, 3, 4, 5, 0]], 512).unwrap();
        assert!(!are_isomorphic(&s3a, &z6));
        // Klein four vs Z4
        let v4 = Group::from_permutations(&[vec![1, 0, 3, 2], vec![2, 3, 0, 1]], 512).unwrap();
        assert!(!are_isomorphic(&v4, &z4()));
        assert!(are_isomorphic(&v4, &v4));
    }
}
