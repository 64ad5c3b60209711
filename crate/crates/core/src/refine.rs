//! Individualization–refinement search for isomorphisms between graphs on
//! at most 64 vertices.
//!
//! Two ordered partitions are refined in lockstep, one per graph. A cell in
//! the first partition only ever maps onto the cell with the same index in
//! the second, so any count mismatch between corresponding cells prunes the
//! branch.

use std::collections::VecDeque;

use crate::perm::Perm;

pub(crate) type Cells = Vec<Vec<usize>>;

fn mask_of(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1u64 << v)
}

/// Cells of equal colour, ordered by colour value.
pub(crate) fn colour_partition(colours: &[usize]) -> Cells {
    let mut keys: Vec<usize> = colours.to_vec();
    keys.sort_unstable();
    keys.dedup();
    keys.iter()
        .map(|&k| (0..colours.len()).filter(|&v| colours[v] == k).collect())
        .collect()
}

/// Refines both partitions to the coarsest equitable refinement, starting
/// from the splitter cells in `queue`. Returns `false` as soon as the two
/// sides stop looking alike.
pub(crate) fn refine(a: &[u64], b: &[u64], pa: &mut Cells, pb: &mut Cells, queue: Vec<usize>) -> bool {
    let mut queued = vec![false; pa.len()];
    let mut work: VecDeque<usize> = VecDeque::new();
    for w in queue {
        if !queued[w] {
            queued[w] = true;
            work.push_back(w);
        }
    }
    while let Some(w) = work.pop_front() {
        queued[w] = false;
        let (wa, wb) = (mask_of(&pa[w]), mask_of(&pb[w]));
        let ncells = pa.len();
        for c in 0..ncells {
            let mut ka: Vec<(u32, usize)> =
                pa[c].iter().map(|&v| ((a[v] & wa).count_ones(), v)).collect();
            let mut kb: Vec<(u32, usize)> =
                pb[c].iter().map(|&v| ((b[v] & wb).count_ones(), v)).collect();
            if ka.len() == 1 {
                if ka[0].0 != kb[0].0 {
                    return false;
                }
                continue;
            }
            ka.sort_by_key(|&(k, _)| k);
            kb.sort_by_key(|&(k, _)| k);
            if ka.iter().zip(&kb).any(|(x, y)| x.0 != y.0) {
                return false;
            }
            if ka.first().map(|x| x.0) == ka.last().map(|x| x.0) {
                continue;
            }
            let split = |k: &[(u32, usize)]| -> Cells {
                let mut groups: Cells = Vec::new();
                let mut last = None;
                for &(count, v) in k {
                    if last != Some(count) {
                        groups.push(Vec::new());
                        last = Some(count);
                    }
                    groups.last_mut().unwrap().push(v);
                }
                groups
            };
            let (ga, gb) = (split(&ka), split(&kb));
            let mut ga = ga.into_iter();
            let mut gb = gb.into_iter();
            pa[c] = ga.next().unwrap();
            pb[c] = gb.next().unwrap();
            if !queued[c] {
                queued[c] = true;
                work.push_back(c);
            }
            for (x, y) in ga.zip(gb) {
                pa.push(x);
                pb.push(y);
                queued.push(true);
                work.push_back(pa.len() - 1);
            }
        }
    }
    true
}

/// Splits `v` off its cell; returns the splitter cells to refine with.
pub(crate) fn individualize(p: &mut Cells, v: usize) -> Vec<usize> {
    let c = p.iter().position(|cell| cell.contains(&v)).expect("vertex in partition");
    if p[c].len() == 1 {
        return vec![c];
    }
    let rest: Vec<usize> = p[c].iter().copied().filter(|&x| x != v).collect();
    p[c] = vec![v];
    p.push(rest);
    vec![c, p.len() - 1]
}

fn target_cell(p: &Cells) -> Option<usize> {
    p.iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
}

fn is_isomorphism(a: &[u64], b: &[u64], map: &[usize]) -> bool {
    (0..a.len()).all(|v| {
        let mut image = 0u64;
        let mut row = a[v];
        while row != 0 {
            let u = row.trailing_zeros() as usize;
            image |= 1u64 << map[u];
            row &= row - 1;
        }
        image == b[map[v]]
    })
}

/// Depth-first search for an isomorphism `a -> b` compatible with the paired
/// partitions. The result maps vertex `v` of `a` to `map[v]` of `b`.
pub(crate) fn search(a: &[u64], b: &[u64], mut pa: Cells, mut pb: Cells, queue: Vec<usize>) -> Option<Vec<usize>> {
    if !refine(a, b, &mut pa, &mut pb, queue) {
        return None;
    }
    match target_cell(&pa) {
        None => {
            let mut map = vec![0; a.len()];
            for (ca, cb) in pa.iter().zip(&pb) {
                map[ca[0]] = cb[0];
            }
            is_isomorphism(a, b, &map).then_some(map)
        }
        Some(c) => {
            let va = pa[c][0];
            for &vb in &pb[c] {
                let (mut pa2, mut pb2) = (pa.clone(), pb.clone());
                let q = individualize(&mut pa2, va);
                individualize(&mut pb2, vb);
                if let Some(map) = search(a, b, pa2, pb2, q) {
                    return Some(map);
                }
            }
            None
        }
    }
}

fn all_cells(p: &Cells) -> Vec<usize> {
    (0..p.len()).collect()
}

/// Isomorphism `a -> b` respecting colours (`colours_a[v] == colours_b[map[v]]`).
pub(crate) fn find_isomorphism(
    a: &[u64],
    b: &[u64],
    colours_a: &[usize],
    colours_b: &[usize],
) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let pa = colour_partition(colours_a);
    let pb = colour_partition(colours_b);
    if pa.len() != pb.len() || pa.iter().zip(&pb).any(|(x, y)| x.len() != y.len()) {
        return None;
    }
    let mut ka: Vec<usize> = colours_a.to_vec();
    let mut kb: Vec<usize> = colours_b.to_vec();
    ka.sort_unstable();
    kb.sort_unstable();
    if ka != kb {
        return None;
    }
    let q = all_cells(&pa);
    search(a, b, pa, pb, q)
}

/// Output of [`automorphism_chain`].
#[derive(Clone, Debug)]
pub(crate) struct Chain {
    #[allow(dead_code)]
    pub base: Vec<usize>,
    pub generators: Vec<Perm>,
    pub orbit_sizes: Vec<usize>,
}

fn orbit(point: usize, gens: &[Perm]) -> Vec<usize> {
    let mut out = vec![point];
    let mut idx = 0;
    while idx < out.len() {
        let p = out[idx];
        for g in gens {
            let q = g.apply(p);
            if !out.contains(&q) {
                out.push(q);
            }
        }
        idx += 1;
    }
    out
}

/// Colour-preserving automorphism group of `a`, restricted to the pointwise
/// stabilizer of `fixed` (in that order).
///
/// The base is the first path of the search tree. Levels are processed from
/// the deepest up; at each level every candidate image of the base point
/// that is not yet in the orbit under the generators found so far is tried
/// once, and the orbit sizes multiply to the exact order.
pub(crate) fn automorphism_chain(a: &[u64], colours: &[usize], fixed: &[usize]) -> Chain {
    let mut p = colour_partition(colours);
    let q = all_cells(&p);
    let mut p2 = p.clone();
    let ok = refine(a, a, &mut p, &mut p2, q);
    debug_assert!(ok);

    let mut base = Vec::new();
    let mut states: Vec<Cells> = Vec::new();
    let mut forced = Vec::new();
    let mut pending = fixed.iter();
    loop {
        let next = match pending.next() {
            Some(&v) => {
                forced.push(true);
                v
            }
            None => match target_cell(&p) {
                Some(c) => {
                    forced.push(false);
                    p[c][0]
                }
                None => break,
            },
        };
        states.push(p.clone());
        base.push(next);
        let q = individualize(&mut p, next);
        let mut p2 = p.clone();
        let ok = refine(a, a, &mut p, &mut p2, q);
        debug_assert!(ok);
    }

    let depth = base.len();
    let mut level_gens: Vec<Vec<Perm>> = vec![Vec::new(); depth];
    let mut orbit_sizes = vec![1; depth];
    for i in (0..depth).rev() {
        if forced[i] {
            continue;
        }
        let b = base[i];
        let state = &states[i];
        let cell = state.iter().find(|c| c.contains(&b)).unwrap().clone();
        let mut gens: Vec<Perm> = level_gens[i..].iter().flatten().cloned().collect();
        let mut orb = orbit(b, &gens);
        let mut dead: Vec<usize> = Vec::new();
        for &c in &cell {
            if orb.contains(&c) || dead.contains(&c) {
                continue;
            }
            let (mut pa, mut pb) = (state.clone(), state.clone());
            let q = individualize(&mut pa, b);
            individualize(&mut pb, c);
            match search(a, a, pa, pb, q) {
                Some(map) => {
                    let g = Perm::from_images_unchecked(map);
                    level_gens[i].push(g.clone());
                    gens.push(g);
                    orb = orbit(b, &gens);
                }
                None => dead.extend(orbit(c, &gens)),
            }
        }
        orbit_sizes[i] = orb.len();
    }
    Chain {
        base,
        generators: level_gens.into_iter().flatten().collect(),
        orbit_sizes,
    }
}
