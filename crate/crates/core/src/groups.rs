//! Automorphism groups and two-graph groups.
//!
//! `σ` lies in the two-graph group of `Γ` iff relabelling the localization
//! at 0 by `σ` yields the localization at `σ(0)`. The group is therefore
//! assembled from the stabilizer of 0 (automorphisms of the localization at
//! 0 fixing 0) and one isomorphism `⁰Γ → ʲΓ` per vertex `j` in the orbit of 0.
//!
//! Both searches colour each vertex by the number of negative triples
//! through it, which is constant on switching classes and hence preserved by
//! every element of the two-graph group.

use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::{GraphError, SeidelGraph};
use crate::perm::{Perm, PermGroup};
use crate::refine;

/// Largest degree the searches accept by default.
pub const DEFAULT_SEARCH_CAP: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group search refused: {n} vertices exceeds the cap of {cap}")]
    DegreeTooLarge { n: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

fn check_cap(n: usize, cap: usize) -> Result<(), GroupError> {
    let cap = cap.min(DEFAULT_SEARCH_CAP);
    if n > cap {
        return Err(GroupError::DegreeTooLarge { n, cap });
    }
    Ok(())
}

/// Number of negative triples through each vertex (all zero when `n < 3`).
pub fn triple_fingerprint(g: &SeidelGraph) -> Vec<usize> {
    match g.triple_sign() {
        Ok(t) => t.vertex_counts(),
        Err(_) => vec![0; g.n()],
    }
}

fn finish(n: usize, gens: Vec<Perm>, search_order: BigUint) -> Result<PermGroup, GroupError> {
    let group = PermGroup::new(n, gens).map_err(|e| GroupError::Inconsistent(e.to_string()))?;
    let chain_order = group.order();
    if chain_order != search_order {
        return Err(GroupError::Inconsistent(format!(
            "search order {search_order} disagrees with stabilizer chain order {chain_order}"
        )));
    }
    Ok(group)
}

/// `Aut(Γ)`: all `σ` with `conjugate(g, σ) = g`.
pub fn automorphism_group(g: &SeidelGraph) -> Result<PermGroup, GroupError> {
    automorphism_group_capped(g, DEFAULT_SEARCH_CAP)
}

pub fn automorphism_group_capped(g: &SeidelGraph, cap: usize) -> Result<PermGroup, GroupError> {
    let n = g.n();
    check_cap(n, cap)?;
    let colours: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let chain = refine::automorphism_chain(&g.masks(), &colours, &[]);
    for s in &chain.generators {
        if &g.conjugate(s)? != g {
            return Err(GroupError::Inconsistent("generator is not an automorphism".into()));
        }
    }
    let order: BigUint = chain.orbit_sizes.iter().map(|&k| BigUint::from(k)).product();
    finish(n, chain.generators, order)
}

/// Single-index membership test: `σ(⁰Γ) = ^{σ(0)}Γ`.
pub fn in_two_graph_group(g: &SeidelGraph, sigma: &Perm) -> Result<bool, GraphError> {
    if sigma.degree() != g.n() {
        return Err(GraphError::DimensionMismatch {
            expected: g.n(),
            found: sigma.degree(),
        });
    }
    Ok(g.localize(0)?.conjugate(sigma)? == g.localize(sigma.apply(0))?)
}

/// `G(Γ)`: all `σ` such that `conjugate(g, σ)` is switching-equivalent to `g`.
pub fn two_graph_group(g: &SeidelGraph) -> Result<PermGroup, GroupError> {
    two_graph_group_capped(g, DEFAULT_SEARCH_CAP)
}

pub fn two_graph_group_capped(g: &SeidelGraph, cap: usize) -> Result<PermGroup, GroupError> {
    let n = g.n();
    if n < 3 {
        return Err(GraphError::TooFewVertices { needed: 3, n }.into());
    }
    check_cap(n, cap)?;
    let colours = triple_fingerprint(g);
    let loc0 = g.localize(0)?.masks();

    let stab = refine::automorphism_chain(&loc0, &colours, &[0]);
    let stab_order: BigUint = stab.orbit_sizes.iter().map(|&k| BigUint::from(k)).product();
    let mut gens = stab.generators;

    let orbit_of_zero = |gens: &[Perm]| PermGroup::new(n, gens.to_vec()).expect("valid").orbit_of(0);
    let mut orbit = orbit_of_zero(&gens);
    let mut dead: Vec<usize> = Vec::new();
    let base = refine::colour_partition(&colours);
    for j in 1..n {
        if colours[j] != colours[0] || orbit.contains(&j) || dead.contains(&j) {
            continue;
        }
        let locj = g.localize(j)?.masks();
        let (mut pa, mut pb) = (base.clone(), base.clone());
        let mut q = refine::individualize(&mut pa, 0);
        refine::individualize(&mut pb, j);
        q.extend(0..base.len());
        match refine::search(&loc0, &locj, pa, pb, q) {
            Some(map) => {
                gens.push(Perm::from_images_unchecked(map));
                orbit = orbit_of_zero(&gens);
            }
            None => {
                let group = PermGroup::new(n, gens.clone()).expect("valid");
                dead.extend(group.orbit_of(j));
            }
        }
    }
    for s in &gens {
        if !in_two_graph_group(g, s)? {
            return Err(GroupError::Inconsistent("generator fails the membership test".into()));
        }
    }
    let order = BigUint::from(orbit.len()) * stab_order;
    finish(n, gens, order)
}

/// An isomorphism `σ` with `conjugate(g1, σ) = g2`, if any.
pub fn find_isomorphism(g1: &SeidelGraph, g2: &SeidelGraph) -> Result<Option<Perm>, GroupError> {
    let n = g1.n();
    if g2.n() != n {
        return Ok(None);
    }
    check_cap(n, DEFAULT_SEARCH_CAP)?;
    let ca: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let cb: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    Ok(refine::find_isomorphism(&g1.masks(), &g2.masks(), &ca, &cb).map(Perm::from_images_unchecked))
}
