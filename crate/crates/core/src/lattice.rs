//! Intersection lattices of central arrangements.
//!
//! `cone` embeds the affine input into one dimension higher (every form gets
//! coefficient 0 on the added coordinate) and closes the hyperplanes under
//! intersection. Flats are identified with the set of input hyperplanes
//! containing them, which is a complete combinatorial label: a lattice flat
//! equals the intersection of all hyperplanes through it.

use std::collections::HashMap;

use num_traits::Zero;

use crate::arrangement::ArrangementInput;
use crate::rational::Rat;
use crate::subspace::Subspace;

#[derive(Debug, Clone)]
pub struct Flat {
    pub subspace: Subspace,
    /// Sorted indices of the input hyperplanes containing this flat.
    pub hyperplanes: Vec<usize>,
    /// s(V): total multiplicity of the hyperplanes containing the flat.
    pub s: u64,
}

impl Flat {
    pub fn codim(&self) -> usize {
        self.subspace.codim()
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }
}

#[derive(Debug, Clone)]
pub struct Lattice {
    /// Dimension n of the coned ambient space (affine_dim + 1).
    pub ambient_n: usize,
    /// Every intersection of input hyperplanes, in canonical order
    /// (codimension ascending, then hyperplane label lexicographic).
    /// The ambient space itself is not an element.
    pub flats: Vec<Flat>,
    /// Flat index of each input hyperplane.
    pub hyperplane_flat: Vec<usize>,
    /// d: total degree of the divisor.
    pub d_total: u64,
    /// Flat of dimension 1 (the coned origin) when the affine arrangement is
    /// essential.
    pub apex: Option<usize>,
    /// meet[i][j]: index of the intersection of flats i and j.
    meet: Vec<Vec<usize>>,
}

impl Lattice {
    pub fn flat(&self, idx: usize) -> &Flat {
        &self.flats[idx]
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Intersection of two flats (always again a flat).
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    /// Fold `meet` over a nonempty set of flats.
    pub fn meet_all(&self, flats: &[usize]) -> usize {
        let mut it = flats.iter();
        let first = *it.next().expect("meet of an empty set of flats");
        it.fold(first, |acc, &f| self.meet(acc, f))
    }
}

/// Close a set of hyperplane subspaces under intersection and attach the
/// containing-hyperplane data. Shared by the projective cone and the affine
/// oracle lattice (which passes `include_origin = true` so an essential
/// arrangement keeps its zero-dimensional flat).
pub fn close_under_intersection(
    ambient: usize,
    forms: &[Vec<Rat>],
    mults: &[u32],
    include_origin: bool,
) -> Vec<Flat> {
    let hyperplanes: Vec<Subspace> = forms
        .iter()
        .map(|f| Subspace::from_forms(ambient, vec![f.clone()]))
        .collect();

    let mut seen: HashMap<Subspace, ()> = HashMap::new();
    let mut worklist: Vec<Subspace> = Vec::new();
    for h in &hyperplanes {
        if seen.insert(h.clone(), ()).is_none() {
            worklist.push(h.clone());
        }
    }
    while let Some(current) = worklist.pop() {
        for h in &hyperplanes {
            let meet = current.intersect(h);
            if !include_origin && meet.is_origin() {
                continue;
            }
            if seen.insert(meet.clone(), ()).is_none() {
                worklist.push(meet);
            }
        }
    }

    let mut flats: Vec<Flat> = seen
        .into_keys()
        .map(|subspace| {
            let contained: Vec<usize> = hyperplanes
                .iter()
                .enumerate()
                .filter(|(_, h)| h.contains(&subspace))
                .map(|(i, _)| i)
                .collect();
            let s = contained.iter().map(|&i| mults[i] as u64).sum();
            Flat {
                subspace,
                hyperplanes: contained,
                s,
            }
        })
        .collect();
    flats.sort_by(|a, b| {
        a.codim()
            .cmp(&b.codim())
            .then_with(|| a.hyperplanes.cmp(&b.hyperplanes))
    });
    flats
}

/// Cone the affine arrangement to `C^n` (n = affine_dim + 1) and compute its
/// full intersection lattice with the `r`, `delta`, `s`, `d` data.
pub fn cone(input: &ArrangementInput) -> Lattice {
    let n = input.affine_dim + 1;
    let forms: Vec<Vec<Rat>> = input
        .hyperplanes
        .iter()
        .map(|h| {
            let mut f = h.form.clone();
            f.push(Rat::zero());
            f
        })
        .collect();
    let mults: Vec<u32> = input.hyperplanes.iter().map(|h| h.mult).collect();

    // Every coned form kills the added coordinate's dual, so all flats
    // contain the added axis and the origin never appears.
    let flats = close_under_intersection(n, &forms, &mults, false);

    let index: HashMap<Subspace, usize> = flats
        .iter()
        .enumerate()
        .map(|(i, f)| (f.subspace.clone(), i))
        .collect();
    let hyperplane_flat: Vec<usize> = forms
        .iter()
        .map(|f| index[&Subspace::from_forms(n, vec![f.clone()])])
        .collect();

    let count = flats.len();
    let mut meet = vec![vec![0usize; count]; count];
    for i in 0..count {
        for j in i..count {
            let m = flats[i].subspace.intersect(&flats[j].subspace);
            let idx = *index
                .get(&m)
                .expect("lattice is closed under intersection");
            meet[i][j] = idx;
            meet[j][i] = idx;
        }
    }

    let apex = flats.iter().position(|f| f.dim() == 1);

    Lattice {
        ambient_n: n,
        flats,
        hyperplane_flat,
        d_total: input.total_degree(),
        apex,
        meet,
    }
}
