//! Paley graphs on `F_q` and on the projective line `P¹(F_q)`.
//!
//! Points of `P¹(F_q)` are numbered `a ∈ 0..q` for `⟨(a, 1)⟩` and `q` for
//! `⟨(1, 0)⟩`. For a basis `(u, v)` of `F_q²` the graph `Γᵘᵥ` isolates `⟨u⟩`
//! and joins `⟨αu + v⟩` to `⟨βu + v⟩` iff `α - β` is a nonzero square.

use std::collections::{HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldCtx, FieldError, QuadResidues};
use crate::graph::SeidelGraph;
use crate::perm::Perm;

/// Largest `q` for which [`sl2_orbit_check`] enumerates all bases.
pub const SL2_ENUMERATION_LIMIT: usize = 13;

pub type Vector = [usize; 2];

fn require_one_mod_four(q: usize) -> Result<(), FieldError> {
    if q % 4 != 1 {
        return Err(FieldError::NotOneModFour(q));
    }
    Ok(())
}

/// `(|(a + C) ∩ C|, |(a + C) ∩ C̄|)` by direct enumeration.
pub fn quad_residue_counts(f: &FieldCtx, a: usize) -> Result<(usize, usize), FieldError> {
    f.check(a)?;
    if a == 0 {
        return Err(FieldError::Zero);
    }
    require_one_mod_four(f.q())?;
    let r = QuadResidues::new(f);
    let shifted = r.squares.iter().map(|&c| f.add(a, c));
    let (mut in_c, mut in_cbar) = (0, 0);
    for x in shifted {
        if r.is_square(x) {
            in_c += 1;
        } else if r.is_non_square(x) {
            in_cbar += 1;
        }
    }
    Ok((in_c, in_cbar))
}

/// `α ~ β` iff `α - β ∈ C`, on the `q` elements of `F_q`.
pub fn paley_graph(q: usize) -> Result<SeidelGraph, FieldError> {
    let f = FieldCtx::new(q)?;
    paley_graph_in(&f)
}

pub fn paley_graph_in(f: &FieldCtx) -> Result<SeidelGraph, FieldError> {
    require_one_mod_four(f.q())?;
    let r = QuadResidues::new(f);
    let q = f.q();
    let mut edges = Vec::new();
    for a in 0..q {
        for b in a + 1..q {
            if r.is_square(f.sub(a, b)) {
                edges.push((a, b));
            }
        }
    }
    Ok(SeidelGraph::from_edges(q, edges).expect("labels in range"))
}

/// An ordered basis `(u, v)` of `F_q²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Basis {
    pub u: Vector,
    pub v: Vector,
}

impl Basis {
    /// `u = (1, 0)`, `v = (0, 1)`.
    pub fn standard() -> Self {
        Basis { u: [1, 0], v: [0, 1] }
    }

    pub fn swapped(&self) -> Self {
        Basis { u: self.v, v: self.u }
    }
}

fn det(f: &FieldCtx, u: Vector, v: Vector) -> usize {
    f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]))
}

/// Index of the point `⟨x⟩` of `P¹(F_q)`; `None` for the zero vector.
pub fn point_index(f: &FieldCtx, x: Vector) -> Option<usize> {
    match f.inv(x[1]) {
        Some(inv) => Some(f.mul(x[0], inv)),
        None => (x[0] != 0).then_some(f.q()),
    }
}

/// `Γᵘᵥ` on the `q + 1` points of the projective line.
pub fn paley_projective(f: &FieldCtx, basis: &Basis) -> Result<SeidelGraph, FieldError> {
    require_one_mod_four(f.q())?;
    for c in basis.u.iter().chain(&basis.v) {
        f.check(*c)?;
    }
    if det(f, basis.u, basis.v) == 0 {
        return Err(FieldError::Zero);
    }
    let r = QuadResidues::new(f);
    let q = f.q();
    let point = |alpha: usize| {
        let x = [
            f.add(f.mul(alpha, basis.u[0]), basis.v[0]),
            f.add(f.mul(alpha, basis.u[1]), basis.v[1]),
        ];
        point_index(f, x).expect("independent vectors")
    };
    let labels: Vec<usize> = (0..q).map(point).collect();
    let mut edges = Vec::new();
    for a in 0..q {
        for b in a + 1..q {
            if r.is_square(f.sub(a, b)) {
                edges.push((labels[a], labels[b]));
            }
        }
    }
    Ok(SeidelGraph::from_edges(q + 1, edges).expect("labels in range"))
}

/// A 2×2 matrix over `F_q`, rows first, acting on column vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Mat2(pub [[usize; 2]; 2]);

impl Mat2 {
    pub fn apply(&self, f: &FieldCtx, x: Vector) -> Vector {
        let m = &self.0;
        [
            f.add(f.mul(m[0][0], x[0]), f.mul(m[0][1], x[1])),
            f.add(f.mul(m[1][0], x[0]), f.mul(m[1][1], x[1])),
        ]
    }

    pub fn det(&self, f: &FieldCtx) -> usize {
        det(f, [self.0[0][0], self.0[1][0]], [self.0[0][1], self.0[1][1]])
    }

    pub fn apply_basis(&self, f: &FieldCtx, b: &Basis) -> Basis {
        Basis { u: self.apply(f, b.u), v: self.apply(f, b.v) }
    }

    /// The permutation induced on `P¹(F_q)`; `None` if singular.
    pub fn projective_perm(&self, f: &FieldCtx) -> Option<Perm> {
        if self.det(f) == 0 {
            return None;
        }
        let q = f.q();
        let img = (0..=q)
            .map(|k| {
                let x = if k == q { [1, 0] } else { [k, 1] };
                point_index(f, self.apply(f, x)).expect("invertible")
            })
            .collect();
        Some(Perm::from_images(img).expect("invertible maps permute points"))
    }
}

/// Transvections `[[1,a],[0,1]]` and `[[1,0],[a,1]]` with `a` running over
/// an `F_p`-basis of `F_q`; they generate `SL₂(F_q)`.
pub fn sl2_generators(f: &FieldCtx) -> Vec<Mat2> {
    f.prime_basis()
        .into_iter()
        .flat_map(|a| [Mat2([[1, a], [0, 1]]), Mat2([[1, 0], [a, 1]])])
        .collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Sl2Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("q = {0} is above the enumeration limit {SL2_ENUMERATION_LIMIT}")]
    TooLarge(usize),
}

/// Outcome of [`sl2_orbit_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sl2Report {
    pub q: usize,
    pub bases: usize,
    pub distinct_graphs: usize,
    pub orbit_sizes: Vec<usize>,
    /// One orbit is exactly `{ localize(Γ^{e₁}_{e₂}, x) : x ∈ P¹ }`.
    pub localization_orbit: bool,
    /// `Γ^{e₂}_{e₁}` lies in the orbit of `Γ^{e₁}_{e₂}`.
    pub swap_in_orbit: bool,
}

impl Sl2Report {
    pub fn passes(&self) -> bool {
        self.orbit_sizes.len() == 2 && self.localization_orbit && self.swap_in_orbit
    }
}

/// Builds `Γᵘᵥ` for every basis, then splits the distinct graphs into orbits
/// under the transvection generators of `SL₂(F_q)`.
pub fn sl2_orbit_check(q: usize) -> Result<Sl2Report, Sl2Error> {
    if q > SL2_ENUMERATION_LIMIT {
        return Err(Sl2Error::TooLarge(q));
    }
    let f = FieldCtx::new(q)?;
    require_one_mod_four(q)?;
    let mut graphs: Vec<SeidelGraph> = Vec::new();
    let mut index: HashMap<SeidelGraph, usize> = HashMap::new();
    let mut bases = 0;
    for u0 in 0..q {
        for u1 in 0..q {
            for v0 in 0..q {
                for v1 in 0..q {
                    let b = Basis { u: [u0, u1], v: [v0, v1] };
                    if det(&f, b.u, b.v) == 0 {
                        continue;
                    }
                    bases += 1;
                    let g = paley_projective(&f, &b)?;
                    if !index.contains_key(&g) {
                        index.insert(g.clone(), graphs.len());
                        graphs.push(g);
                    }
                }
            }
        }
    }
    let perms: Vec<Perm> = sl2_generators(&f)
        .iter()
        .map(|m| m.projective_perm(&f).expect("determinant one"))
        .collect();
    let mut orbit_id = vec![usize::MAX; graphs.len()];
    let mut orbit_sizes = Vec::new();
    for start in 0..graphs.len() {
        if orbit_id[start] != usize::MAX {
            continue;
        }
        let id = orbit_sizes.len();
        orbit_id[start] = id;
        let mut stack = vec![start];
        let mut size = 0;
        while let Some(k) = stack.pop() {
            size += 1;
            for p in &perms {
                let image = graphs[k].conjugate(p).expect("degree matches");
                let j = *index.get(&image).expect("the set of graphs is closed under GL2");
                if orbit_id[j] == usize::MAX {
                    orbit_id[j] = id;
                    stack.push(j);
                }
            }
        }
        orbit_sizes.push(size);
    }
    let std = paley_projective(&f, &Basis::standard())?;
    let std_orbit = orbit_id[index[&std]];
    let localizations: HashSet<usize> = (0..=q)
        .map(|x| index.get(&std.localize(x).expect("valid vertex")).copied())
        .collect::<Option<HashSet<usize>>>()
        .unwrap_or_default();
    let members: HashSet<usize> = (0..graphs.len()).filter(|&k| orbit_id[k] == std_orbit).collect();
    let swapped = paley_projective(&f, &Basis::standard().swapped())?;
    Ok(Sl2Report {
        q,
        bases,
        distinct_graphs: graphs.len(),
        orbit_sizes,
        localization_orbit: localizations == members,
        swap_in_orbit: orbit_id[index[&swapped]] == std_orbit,
    })
}
