//! Building sets, nested sets, and the member bookkeeping shared by the ring
//! presentation and the jump criteria.
//!
//! A building set is a subset of the lattice (never the ambient space)
//! together with the distinguished formal zero subspace, which is comparable
//! with, and contained in, every member. Member 0 is always that zero
//! subspace; real members follow in the lattice's canonical order.

use num_traits::Zero;

use crate::arrangement::ArrangementInput;
use crate::lattice::{cone, Lattice};
use crate::matrix::Matrix;
use crate::rational::Rat;
use crate::subspace::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildingKind {
    Full,
    Minimal,
}

impl BuildingKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            BuildingKind::Full => "full",
            BuildingKind::Minimal => "minimal",
        }
    }
}

#[derive(Debug, Clone)]
pub struct BuildingSet {
    pub kind: BuildingKind,
    /// Lattice flat indices of the real members, ascending.
    pub flats: Vec<usize>,
}

impl BuildingSet {
    /// Every lattice element (plus the formal zero subspace).
    pub fn full(lattice: &Lattice) -> Self {
        BuildingSet {
            kind: BuildingKind::Full,
            flats: (0..lattice.len()).collect(),
        }
    }

    /// The irreducible lattice elements (plus the formal zero subspace).
    ///
    /// A flat V is reducible when the normals of the hyperplanes containing
    /// it split into two nonempty parts whose ranks add up to codim(V);
    /// decided by exhaustive search over bipartitions.
    pub fn minimal(lattice: &Lattice, input: &ArrangementInput) -> Self {
        let n = lattice.ambient_n;
        let coned_forms: Vec<Vec<Rat>> = input
            .hyperplanes
            .iter()
            .map(|h| {
                let mut f = h.form.clone();
                f.push(Rat::zero());
                f
            })
            .collect();
        let flats = (0..lattice.len())
            .filter(|&i| {
                let flat = lattice.flat(i);
                let normals: Vec<&Vec<Rat>> = flat
                    .hyperplanes
                    .iter()
                    .map(|&h| &coned_forms[h])
                    .collect();
                irreducible(n, &normals, flat.codim())
            })
            .collect();
        BuildingSet {
            kind: BuildingKind::Minimal,
            flats,
        }
    }
}

fn rank_of(n: usize, normals: &[&Vec<Rat>]) -> usize {
    Matrix::from_rows(n, normals.iter().map(|f| (*f).clone()).collect()).rank()
}

fn irreducible(n: usize, normals: &[&Vec<Rat>], codim: usize) -> bool {
    let m = normals.len();
    if m <= 1 {
        return true;
    }
    // Bipartitions with normal 0 pinned to the first part.
    for mask in 0..(1u64 << (m - 1)) {
        let mut part1 = vec![normals[0]];
        let mut part2 = Vec::new();
        for (j, normal) in normals.iter().enumerate().skip(1) {
            if mask >> (j - 1) & 1 == 1 {
                part1.push(normal);
            } else {
                part2.push(*normal);
            }
        }
        if part2.is_empty() {
            continue;
        }
        if rank_of(n, &part1) + rank_of(n, &part2) == codim {
            return false;
        }
    }
    true
}

/// A lattice with a chosen building set and the per-member constants used by
/// every downstream computation. Immutable once built.
#[derive(Debug, Clone)]
pub struct Model {
    pub lattice: Lattice,
    pub kind: BuildingKind,
    /// Real member index -> lattice flat. Member 0 (the zero subspace) is
    /// implicit and has no flat.
    pub member_flat: Vec<Option<usize>>,
    /// Lattice flat -> member index, when the flat is a member.
    pub flat_member: Vec<Option<usize>>,
    /// Per member: dimension, codimension, multiplicity sum s(V) (0 for the
    /// zero member, which has no s), hyperplane label set.
    pub delta: Vec<usize>,
    pub r: Vec<usize>,
    pub s: Vec<u64>,
    pub label_sets: Vec<Vec<usize>>,
    /// le[i][j]: member i is contained in member j. The zero member is
    /// contained in everything.
    pub le: Vec<Vec<bool>>,
}

/// Identifies either a real member's lattice flat or the ambient space as
/// the top of a gap in a nested-set factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapTop {
    Flat(usize),
    Ambient,
}

impl Model {
    pub fn new(lattice: Lattice, building: BuildingSet) -> Self {
        let count = building.flats.len() + 1;
        let mut member_flat = vec![None; count];
        let mut flat_member = vec![None; lattice.len()];
        let n = lattice.ambient_n;
        let mut delta = vec![0usize; count];
        let mut r = vec![n; count];
        let mut s = vec![0u64; count];
        let mut label_sets = vec![Vec::new(); count];
        for (k, &f) in building.flats.iter().enumerate() {
            let member = k + 1;
            member_flat[member] = Some(f);
            flat_member[f] = Some(member);
            let flat = lattice.flat(f);
            delta[member] = flat.dim();
            r[member] = flat.codim();
            s[member] = flat.s;
            label_sets[member] = flat.hyperplanes.clone();
        }
        let mut le = vec![vec![false; count]; count];
        for i in 0..count {
            for j in 0..count {
                le[i][j] = match (member_flat[i], member_flat[j]) {
                    (None, _) => true,
                    (Some(_), None) => i == j,
                    (Some(fi), Some(fj)) => lattice
                        .flat(fj)
                        .subspace
                        .contains(&lattice.flat(fi).subspace),
                };
            }
        }
        Model {
            lattice,
            kind: building.kind,
            member_flat,
            flat_member,
            delta,
            r,
            s,
            label_sets,
            le,
        }
    }

    /// Cone the input and attach the requested building set.
    pub fn build(input: &ArrangementInput, kind: BuildingKind) -> Self {
        let lattice = cone(input);
        let building = match kind {
            BuildingKind::Full => BuildingSet::full(&lattice),
            BuildingKind::Minimal => BuildingSet::minimal(&lattice, input),
        };
        Model::new(lattice, building)
    }

    pub fn ambient_n(&self) -> usize {
        self.lattice.ambient_n
    }

    /// Number of members including the zero subspace.
    pub fn member_count(&self) -> usize {
        self.member_flat.len()
    }

    /// Real members (everything but the zero subspace).
    pub fn real_members(&self) -> impl Iterator<Item = usize> {
        1..self.member_count()
    }

    pub fn is_zero_member(&self, m: usize) -> bool {
        m == 0
    }

    pub fn subspace_of(&self, m: usize) -> Subspace {
        match self.member_flat[m] {
            Some(f) => self.lattice.flat(f).subspace.clone(),
            None => Subspace::origin(self.ambient_n()),
        }
    }

    pub fn gap_top_dim(&self, top: GapTop) -> usize {
        match top {
            GapTop::Flat(f) => self.lattice.flat(f).dim(),
            GapTop::Ambient => self.ambient_n(),
        }
    }

    /// Member strictly contained in the gap top.
    pub fn member_below_top(&self, m: usize, top: GapTop) -> bool {
        match top {
            GapTop::Ambient => true,
            GapTop::Flat(f) => {
                if m == 0 {
                    return true;
                }
                let fm = self.member_flat[m].unwrap();
                fm != f
                    && self
                        .lattice
                        .flat(f)
                        .subspace
                        .contains(&self.lattice.flat(fm).subspace)
            }
        }
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.le[a][b] || self.le[b][a]
    }

    /// Display label of a member: `"0"` for the zero subspace, otherwise the
    /// set of containing hyperplane indices.
    pub fn label(&self, m: usize) -> String {
        if m == 0 {
            return "0".to_string();
        }
        let parts: Vec<String> = self.label_sets[m].iter().map(|i| i.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn variable_names(&self) -> Vec<String> {
        (0..self.member_count())
            .map(|m| {
                if m == 0 {
                    "c0".to_string()
                } else {
                    format!("c{}", self.label(m))
                }
            })
            .collect()
    }

    /// Whether a set of real members is nested: no subset of pairwise
    /// incomparable members of size >= 2 intersects down to a member of the
    /// building set. The empty set and singletons are nested.
    pub fn is_nested(&self, set: &[usize]) -> bool {
        debug_assert!(set.iter().all(|&m| m != 0));
        let k = set.len();
        if k < 2 {
            return true;
        }
        assert!(k < 64, "nested-set query too large");
        'subsets: for mask in 1u64..(1 << k) {
            if mask.count_ones() < 2 {
                continue;
            }
            let chosen: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
            for a in 0..chosen.len() {
                for b in (a + 1)..chosen.len() {
                    if self.comparable(set[chosen[a]], set[chosen[b]]) {
                        continue 'subsets;
                    }
                }
            }
            let flats: Vec<usize> = chosen
                .iter()
                .map(|&i| self.member_flat[set[i]].unwrap())
                .collect();
            let meet = self.lattice.meet_all(&flats);
            if self.flat_member[meet].is_some() {
                return false;
            }
        }
        true
    }

    /// All nonempty nested subsets of a pool of real members.
    pub fn nested_subsets_of(&self, pool: &[usize]) -> Vec<NestedSet> {
        let k = pool.len();
        assert!(k < 32, "nested-subset pool too large");
        let mut out = Vec::new();
        for mask in 1u64..(1 << k) {
            let subset: Vec<usize> = (0..k)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pool[i])
                .collect();
            if self.is_nested(&subset) {
                out.push(self.nested_set(subset));
            }
        }
        out
    }

    /// Assemble the gap data for a nested set of real members.
    pub fn nested_set(&self, mut members: Vec<usize>) -> NestedSet {
        members.sort_unstable();
        debug_assert!(self.is_nested(&members));
        let n = self.ambient_n();

        // Upper neighbor of each member: intersection of the members
        // strictly above it (ambient when there are none).
        let parent: Vec<GapTop> = members
            .iter()
            .map(|&v| {
                let above: Vec<usize> = members
                    .iter()
                    .filter(|&&w| w != v && self.le[v][w])
                    .map(|&w| self.member_flat[w].unwrap())
                    .collect();
                if above.is_empty() {
                    GapTop::Ambient
                } else {
                    GapTop::Flat(self.lattice.meet_all(&above))
                }
            })
            .collect();

        let bottom_flat = self
            .lattice
            .meet_all(&members.iter().map(|&m| self.member_flat[m].unwrap()).collect::<Vec<_>>());

        // V_S data: subspace sum of the members strictly below V, for each
        // member and for the ambient space.
        let vsub: Vec<Subspace> = members
            .iter()
            .map(|&v| {
                members
                    .iter()
                    .filter(|&&w| w != v && self.le[w][v])
                    .fold(Subspace::origin(n), |acc, &w| {
                        acc.sum(&self.lattice.flat(self.member_flat[w].unwrap()).subspace)
                    })
            })
            .collect();
        let ambient_vsub = members.iter().fold(Subspace::origin(n), |acc, &w| {
            acc.sum(&self.lattice.flat(self.member_flat[w].unwrap()).subspace)
        });

        NestedSet {
            members,
            parent,
            bottom_flat,
            vsub,
            ambient_vsub,
        }
    }
}

/// A nested subset of the building set with its factorization data.
///
/// The series factorization runs over "gaps": one per member V, from V up to
/// the intersection of the members strictly above it, plus the bottom gap
/// from the zero subspace up to the intersection of the whole set. For
/// chains this is exactly the usual (V_S, V) indexing.
#[derive(Debug, Clone)]
pub struct NestedSet {
    /// Real member indices, ascending.
    pub members: Vec<usize>,
    /// Gap top for each member (same order as `members`).
    pub parent: Vec<GapTop>,
    /// Lattice flat: intersection of all members (top of the bottom gap).
    pub bottom_flat: usize,
    /// V_S for each member: subspace sum of the members strictly inside it.
    pub vsub: Vec<Subspace>,
    /// V_S for the ambient space: sum of all members.
    pub ambient_vsub: Subspace,
}

impl NestedSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: usize) -> bool {
        self.members.binary_search(&m).is_ok()
    }

    /// V_S of a member or of the ambient space (`None`).
    pub fn vsub_of(&self, v: Option<usize>) -> &Subspace {
        match v {
            None => &self.ambient_vsub,
            Some(m) => {
                let i = self.members.binary_search(&m).expect("not a member of the nested set");
                &self.vsub[i]
            }
        }
    }
}
