//! Permutations of `{0..n-1}` and permutation groups given by generators.
//!
//! Composition follows the functional convention: `a.compose(&b)` is the
//! permutation `i -> a(b(i))`. Group orders are computed with a
//! deterministic Schreier–Sims stabilizer chain, so the same generator list
//! always yields the same base, transversals and order.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image array is not a bijection of 0..{0}")]
    NotBijective(usize),
    #[error("permutation of degree {found} used where degree {expected} is required")]
    DegreeMismatch { expected: usize, found: usize },
}

/// A permutation stored as its one-line image array `[σ(0), …, σ(n-1)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            img: (0..n).collect(),
        }
    }

    pub fn from_images(img: Vec<usize>) -> Result<Self, PermError> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            if x >= n || seen[x] {
                return Err(PermError::NotBijective(n));
            }
            seen[x] = true;
        }
        Ok(Perm { img })
    }

    /// Builds a permutation without validation; the caller guarantees bijectivity.
    pub(crate) fn from_images_unchecked(img: Vec<usize>) -> Self {
        debug_assert!(Perm::from_images(img.clone()).is_ok());
        Perm { img }
    }

    /// The cyclic shift `i -> i + 1 mod n`.
    pub fn rotation(n: usize) -> Self {
        Perm {
            img: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    /// Transposition of `a` and `b` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut img: Vec<usize> = (0..n).collect();
        img.swap(a, b);
        Perm { img }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.img[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            img: other.img.iter().map(|&x| self.img[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x] = i;
        }
        Perm { img: inv }
    }

    /// Order of the cyclic subgroup generated by `self`.
    pub fn order(&self) -> BigUint {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut acc = BigUint::one();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.img[x];
                len += 1;
            }
            acc = num_integer::Integer::lcm(&acc, &BigUint::from(len));
        }
        acc
    }

    fn first_moved(&self) -> Option<usize> {
        self.img.iter().enumerate().position(|(i, &x)| i != x)
    }
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = PermError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Perm::from_images(v)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.img
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.img)
    }
}

/// One level of the stabilizer chain.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Perm>,
    /// `transversal[p]` maps `base` to `p` whenever `p` lies in the basic orbit.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(n: usize, base: usize) -> Self {
        let mut transversal = vec![None; n];
        transversal[base] = Some(Perm::identity(n));
        Level {
            base,
            gens: Vec::new(),
            transversal,
            orbit: vec![base],
        }
    }
}

/// Deterministic base and strong generating set.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            chain.insert(g.clone(), 0);
        }
        chain
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Sifts `g` starting at `start`; returns the residue and the level where it stopped.
    fn sift(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let image = g.apply(level.base);
            match &level.transversal[image] {
                Some(u) => g = u.inverse().compose(&g),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        self.sift(g.clone(), 0).0.is_identity()
    }

    fn insert(&mut self, g: Perm, start: usize) {
        let mut queue: VecDeque<(Perm, usize)> = VecDeque::new();
        queue.push_back((g, start));
        while let Some((g, start)) = queue.pop_front() {
            let (h, stuck) = self.sift(g, start);
            if h.is_identity() {
                continue;
            }
            if stuck == self.levels.len() {
                let b = h.first_moved().expect("non-identity residue moves a point");
                self.levels.push(Level::new(self.degree, b));
            }
            // h fixes every base point before `stuck`, so it is a strong
            // generator for all levels up to and including `stuck`.
            for i in 0..=stuck {
                let new_schreier = self.add_strong_generator(i, h.clone());
                for s in new_schreier {
                    queue.push_back((s, i + 1));
                }
            }
        }
    }

    /// Adds `h` to level `i`, extends the basic orbit and returns the Schreier
    /// generators that became available.
    fn add_strong_generator(&mut self, i: usize, h: Perm) -> Vec<Perm> {
        let level = &mut self.levels[i];
        level.gens.push(h);
        let old_len = level.orbit.len();
        let new_gen = level.gens.len() - 1;
        let mut out = Vec::new();

        // Schreier generators for the new generator on the old orbit points.
        for idx in 0..old_len {
            let p = level.orbit[idx];
            let s = &level.gens[new_gen];
            let q = s.apply(p);
            if level.transversal[q].is_none() {
                let t = s.compose(level.transversal[p].as_ref().unwrap());
                level.transversal[q] = Some(t);
                level.orbit.push(q);
            } else {
                let up = level.transversal[p].as_ref().unwrap();
                let uq = level.transversal[q].as_ref().unwrap();
                out.push(uq.inverse().compose(&s.compose(up)));
            }
        }
        // Close the orbit under all generators; newly reached points feed
        // Schreier generators with every generator.
        let mut idx = old_len;
        while idx < level.orbit.len() {
            let p = level.orbit[idx];
            for gi in 0..level.gens.len() {
                let s = &level.gens[gi];
                let q = s.apply(p);
                let up = level.transversal[p].clone().unwrap();
                if level.transversal[q].is_none() {
                    level.transversal[q] = Some(s.compose(&up));
                    level.orbit.push(q);
                } else {
                    let uq = level.transversal[q].as_ref().unwrap();
                    out.push(uq.inverse().compose(&s.compose(&up)));
                }
            }
            idx += 1;
        }
        out.retain(|p| !p.is_identity());
        out
    }
}

/// A permutation group of degree `n` given by a generator list.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<StabilizerChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Perm::transposition(degree, 0, 1));
        }
        if degree >= 3 {
            gens.push(Perm::rotation(degree));
        }
        PermGroup::new(degree, gens).expect("generators have the right degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::new(self.degree, &self.generators))
    }

    /// Exact group order from the stabilizer chain.
    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    /// Orbit partition of the points, each orbit sorted, orbits ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut idx = 0;
            while idx < orbit.len() {
                let p = orbit[idx];
                for g in &self.generators {
                    let q = g.apply(p);
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                    }
                }
                idx += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn orbit_of(&self, point: usize) -> Vec<usize> {
        self.orbits()
            .into_iter()
            .find(|o| o.binary_search(&point).is_ok())
            .unwrap_or_default()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    /// Number of orbits on ordered pairs of distinct points.
    pub fn pair_orbit_count(&self) -> usize {
        let n = self.degree;
        if n < 2 {
            return 0;
        }
        let idx = |a: usize, b: usize| a * n + b;
        let mut seen = vec![false; n * n];
        let mut count = 0;
        for a in 0..n {
            for b in 0..n {
                if a == b || seen[idx(a, b)] {
                    continue;
                }
                count += 1;
                seen[idx(a, b)] = true;
                let mut stack = vec![(a, b)];
                while let Some((x, y)) = stack.pop() {
                    for g in &self.generators {
                        let (gx, gy) = (g.apply(x), g.apply(y));
                        if !seen[idx(gx, gy)] {
                            seen[idx(gx, gy)] = true;
                            stack.push((gx, gy));
                        }
                    }
                }
            }
        }
        count
    }

    /// Doubly transitive iff the action on ordered pairs of distinct points has one orbit.
    pub fn is_doubly_transitive(&self) -> bool {
        self.degree >= 2 && self.pair_orbit_count() == 1
    }

    /// 0, 1 or 2 for intransitive, transitive-only and doubly transitive groups.
    pub fn transitivity(&self) -> u8 {
        if self.is_doubly_transitive() {
            2
        } else if self.is_transitive() {
            1
        } else {
            0
        }
    }
}

/// Exact order of `group` via its stabilizer chain.
pub fn group_order(group: &PermGroup) -> BigUint {
    group.order()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Perm {
        Perm::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_bijection() {
        assert_eq!(
            Perm::from_images(vec![0, 0, 2]),
            Err(PermError::NotBijective(3))
        );
        assert!(Perm::from_images(vec![0, 3]).is_err());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = p(&[1, 2, 0]);
        let b = p(&[1, 0, 2]);
        // a(b(0)) = a(1) = 2
        assert_eq!(a.compose(&b).apply(0), 2);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn trivial_group_has_order_one() {
        let g = PermGroup::trivial(3);
        assert_eq!(g.order(), BigUint::one());
        assert_eq!(g.orbits(), vec![vec![0], vec![1], vec![2]]);
        assert!(!g.is_transitive());
    }

    #[test]
    fn cycle_group_order() {
        for n in 2..10 {
            let g = PermGroup::new(n, vec![Perm::rotation(n)]).unwrap();
            assert_eq!(g.order(), BigUint::from(n));
            assert!(g.is_transitive());
            assert_eq!(g.is_doubly_transitive(), n == 2);
        }
    }

    #[test]
    fn symmetric_group_orders() {
        let mut fact = BigUint::one();
        for n in 1..=12usize {
            fact *= BigUint::from(n);
            let g = PermGroup::symmetric(n);
            assert_eq!(g.order(), fact, "S_{n}");
        }
        assert!(PermGroup::symmetric(6).is_doubly_transitive());
    }

    #[test]
    fn dihedral_and_membership() {
        let rot = Perm::rotation(5);
        let refl = p(&[0, 4, 3, 2, 1]);
        let d5 = PermGroup::new(5, vec![rot.clone(), refl]).unwrap();
        assert_eq!(d5.order(), BigUint::from(10u32));
        assert!(d5.contains(&rot.compose(&rot)));
        assert!(!d5.contains(&Perm::transposition(5, 0, 1)));
        assert_eq!(d5.transitivity(), 1);
    }

    #[test]
    fn element_order_divides_group_order() {
        let g = PermGroup::new(7, vec![p(&[1, 2, 3, 4, 5, 6, 0]), p(&[0, 2, 4, 6, 1, 3, 5])])
            .unwrap();
        // the affine group x -> ax + b over F_7 restricted to squares a
        assert_eq!(g.order(), BigUint::from(21u32));
        for gen in g.generators() {
            assert_eq!(g.order() % gen.order(), BigUint::from(0u32));
        }
    }

    #[test]
    fn serde_round_trip_rejects_bad_images() {
        let q: Perm = serde_json::from_str("[2,0,1]").unwrap();
        assert_eq!(q, p(&[2, 0, 1]));
        assert!(serde_json::from_str::<Perm>("[1,1]").is_err());
    }
}
