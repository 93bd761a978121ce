//! Presentation of the cohomology ring of the wonderful model and
//! top-degree ideal membership by exact linear algebra.
//!
//! The ideal is generated by squarefree monomials over minimal non-nested
//! subsets, and, for every nested subset H (empty included) and every member
//! W strictly below all of H, by
//!
//! ```text
//!     prod_{V in H} c_V * ( sum_{W' <= W} c_{W'} )^(delta(meet H) - delta(W))
//! ```
//!
//! with `delta(meet of the empty set) = n`. Membership queries only ever
//! happen in degree n-1, where the quotient is one-dimensional, so the whole
//! slice is a row space over the degree-(n-1) monomial basis and membership
//! is a rank question. No Groebner bases anywhere.

use std::collections::HashMap;

use num_traits::Zero;

use crate::building::Model;
use crate::error::Error;
use crate::matrix::RowSpace;
use crate::poly::{Exponents, TruncPoly};
use crate::rational::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Squarefree monomial over a minimal non-nested subset.
    NonNested,
    /// Nested subset H paired with a member W strictly below all of H.
    Nested { w: usize },
}

#[derive(Debug, Clone)]
pub struct Generator {
    pub kind: GeneratorKind,
    /// Member indices of H, ascending.
    pub support: Vec<usize>,
    pub degree: usize,
    /// The generator itself, truncated at total degree n-1 (zero when the
    /// degree exceeds the truncation; such generators cannot meet the slice).
    pub poly: TruncPoly,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    pub nvars: usize,
    /// n - 1: the only degree membership is ever decided in.
    pub top_degree: usize,
    pub generators: Vec<Generator>,
}

/// Enumerate the generators of the ideal for the model's building set.
pub fn build_presentation(model: &Model) -> Presentation {
    let nvars = model.member_count();
    let n = model.ambient_n();
    let top_degree = n - 1;
    let real = nvars - 1; // members 1..=real
    assert!(real < 63, "building set too large");

    // nested[mask] over subsets of the real members; meets folded
    // incrementally. A set is non-nested iff some (size-1)-subset already is,
    // or the set itself is an antichain whose intersection is a member.
    let size = 1usize << real;
    let mut nested = vec![true; size];
    let mut meet_flat = vec![0usize; size];
    let mut masks: Vec<usize> = (1..size).collect();
    masks.sort_by_key(|m| m.count_ones());
    for &mask in &masks {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let low_flat = model.member_flat[low + 1].unwrap();
        meet_flat[mask] = if rest == 0 {
            low_flat
        } else {
            model.lattice.meet(meet_flat[rest], low_flat)
        };
        if mask.count_ones() < 2 {
            continue;
        }
        let mut bad = false;
        let mut bits = mask;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if !nested[mask & !(1 << b)] {
                bad = true;
                break;
            }
        }
        if !bad {
            let members: Vec<usize> = (0..real)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| i + 1)
                .collect();
            let antichain = members
                .iter()
                .all(|&a| members.iter().all(|&b| a == b || !model.comparable(a, b)));
            if antichain && model.flat_member[meet_flat[mask]].is_some() {
                bad = true;
            }
        }
        nested[mask] = !bad;
    }

    let mut generators = Vec::new();

    // Type (1): minimal non-nested subsets.
    for &mask in &masks {
        if nested[mask] {
            continue;
        }
        let mut minimal = true;
        let mut bits = mask;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if !nested[mask & !(1 << b)] {
                minimal = false;
                break;
            }
        }
        if !minimal {
            continue;
        }
        let support: Vec<usize> = (0..real)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| i + 1)
            .collect();
        let mut exps = vec![0u32; nvars];
        for &m in &support {
            exps[m] = 1;
        }
        let degree = support.len();
        generators.push(Generator {
            kind: GeneratorKind::NonNested,
            support,
            degree,
            poly: TruncPoly::monomial(nvars, top_degree, exps, crate::rational::rat_int(1)),
        });
    }

    // Type (2): nested H (including the empty set) and W in G with W
    // strictly below every element of H; W = 0 always qualifies.
    let mut nested_masks: Vec<usize> = vec![0];
    nested_masks.extend(masks.iter().copied().filter(|&m| nested[m]));
    for &mask in &nested_masks {
        let support: Vec<usize> = (0..real)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| i + 1)
            .collect();
        let meet_delta = if mask == 0 {
            n
        } else {
            model.lattice.flat(meet_flat[mask]).dim()
        };
        for w in 0..nvars {
            let strictly_below_all = support
                .iter()
                .all(|&v| w != v && model.le[w][v]);
            if !strictly_below_all {
                continue;
            }
            let d = meet_delta - model.delta[w];
            debug_assert!(d >= 1);
            let degree = support.len() + d;

            let mut poly = TruncPoly::zero(nvars, top_degree);
            if degree <= top_degree {
                let mut linear = TruncPoly::zero(nvars, top_degree);
                for wp in 0..nvars {
                    if model.le[wp][w] {
                        linear = linear.add(&TruncPoly::variable(nvars, top_degree, wp));
                    }
                }
                poly = linear.pow_signed(d as i64).expect("nonnegative power");
                let mut exps = vec![0u32; nvars];
                for &m in &support {
                    exps[m] = 1;
                }
                poly = poly.mul(&TruncPoly::monomial(
                    nvars,
                    top_degree,
                    exps,
                    crate::rational::rat_int(1),
                ));
                debug_assert_eq!(poly.homogeneous_degree(), Some(degree));
            }
            generators.push(Generator {
                kind: GeneratorKind::Nested { w },
                support: support.clone(),
                degree,
                poly,
            });
        }
    }

    Presentation {
        nvars,
        top_degree,
        generators,
    }
}

/// All exponent vectors of the given total degree, lexicographically
/// descending in the first variable. Deterministic.
pub fn monomials_of_degree(nvars: usize, degree: usize) -> Vec<Exponents> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, degree);
    return out;

    fn fill(out: &mut Vec<Exponents>, current: &mut Exponents, var: usize, remaining: usize) {
        if var + 1 == current.len() {
            current[var] = remaining as u32;
            out.push(current.clone());
            return;
        }
        for e in (0..=remaining).rev() {
            current[var] = e as u32;
            fill(out, current, var + 1, remaining - e);
        }
        current[var] = 0;
    }
}

/// The degree-d component of the ideal as a row space in the monomial basis.
#[derive(Debug, Clone)]
pub struct GradedSlice {
    pub degree: usize,
    pub monomials: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
    rowspace: RowSpace,
}

impl GradedSlice {
    /// Span of `{ generator * monomial }` in the given degree.
    pub fn build(p: &Presentation, degree: usize) -> GradedSlice {
        let monomials = monomials_of_degree(p.nvars, degree);
        let index: HashMap<Exponents, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut rowspace = RowSpace::new(monomials.len());
        for g in &p.generators {
            if g.degree > degree || g.poly.is_zero() {
                continue;
            }
            for shift in monomials_of_degree(p.nvars, degree - g.degree) {
                let mut row = vec![Rat::zero(); monomials.len()];
                for (e, c) in g.poly.terms() {
                    let total: Exponents = e.iter().zip(&shift).map(|(a, b)| a + b).collect();
                    row[index[&total]] = c.clone();
                }
                rowspace.insert(&row);
            }
        }
        GradedSlice {
            degree,
            monomials,
            index,
            rowspace,
        }
    }

    pub fn rank(&self) -> usize {
        self.rowspace.rank()
    }

    pub fn quotient_dim(&self) -> usize {
        self.monomials.len() - self.rank()
    }

    fn vector_of(&self, q: &TruncPoly) -> Result<Vec<Rat>, Error> {
        if let Some(d) = q.homogeneous_degree() {
            if d != self.degree {
                return Err(Error::DegreeMismatch {
                    expected: self.degree,
                });
            }
        }
        let mut v = vec![Rat::zero(); self.monomials.len()];
        for (e, c) in q.terms() {
            v[self.index[e]] = c.clone();
        }
        Ok(v)
    }
}

/// The degree-(n-1) slice together with the top-class normalization
/// `(-c0)^(n-1)`. Construction fails unless the quotient in that degree is
/// exactly one-dimensional and the top class survives.
#[derive(Debug, Clone)]
pub struct IdealSlice {
    slice: GradedSlice,
    /// reduce((-c0)^(n-1)); nonzero exactly in the single free column.
    top_reduced: Vec<Rat>,
    free_col: usize,
}

pub fn ideal_slice(p: &Presentation) -> Result<IdealSlice, Error> {
    let slice = GradedSlice::build(p, p.top_degree);
    let q = slice.quotient_dim();
    if q != 1 {
        return Err(Error::TopDimension(q));
    }
    let mut top = vec![Rat::zero(); slice.monomials.len()];
    let mut c0_exps = vec![0u32; p.nvars];
    c0_exps[0] = p.top_degree as u32;
    let sign = if p.top_degree % 2 == 0 { 1 } else { -1 };
    top[slice.index[&c0_exps]] = crate::rational::rat_int(sign);
    let top_reduced = slice.rowspace.reduce(&top);
    let free_col = top_reduced.iter().position(|x| !x.is_zero());
    let Some(free_col) = free_col else {
        return Err(Error::DegenerateTopClass);
    };
    Ok(IdealSlice {
        slice,
        top_reduced,
        free_col,
    })
}

impl IdealSlice {
    pub fn degree(&self) -> usize {
        self.slice.degree
    }

    pub fn monomial_count(&self) -> usize {
        self.slice.monomials.len()
    }

    pub fn rank(&self) -> usize {
        self.slice.rank()
    }

    /// Whether a homogeneous degree-(n-1) polynomial lies in the ideal.
    pub fn is_in_ideal(&self, q: &TruncPoly) -> Result<bool, Error> {
        let v = self.slice.vector_of(q)?;
        Ok(self.slice.rowspace.contains(&v))
    }

    /// The unique lambda with `q = lambda * (-c0)^(n-1)` modulo the ideal.
    pub fn evaluate_top(&self, q: &TruncPoly) -> Result<Rat, Error> {
        let v = self.slice.vector_of(q)?;
        let reduced = self.slice.rowspace.reduce(&v);
        let lambda = &reduced[self.free_col] / &self.top_reduced[self.free_col];
        // With a one-dimensional quotient the reduction is determined by the
        // free coordinate; check it anyway.
        debug_assert!({
            let mut ok = true;
            for (a, b) in reduced.iter().zip(&self.top_reduced) {
                if a != &(&lambda * b) {
                    ok = false;
                }
            }
            ok
        });
        Ok(lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::parse_arrangement;
    use crate::building::{BuildingKind, Model};
    use crate::rational::{rat, rat_int};

    fn three_lines_model() -> Model {
        let input = parse_arrangement(
            r#"{ "affine_dim": 2, "hyperplanes": [
                { "coeffs": [1, -1], "mult": 1 },
                { "coeffs": [1, 1], "mult": 1 },
                { "coeffs": [1, 0], "mult": 1 }
            ]}"#,
        )
        .unwrap();
        Model::build(&input, BuildingKind::Full)
    }

    fn single_hyperplane_model() -> Model {
        let input = parse_arrangement(
            r#"{ "affine_dim": 2, "hyperplanes": [ { "coeffs": [1, 0], "mult": 1 } ]}"#,
        )
        .unwrap();
        Model::build(&input, BuildingKind::Full)
    }

    #[test]
    fn monomial_enumeration() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], vec![2, 0, 0]);
        assert_eq!(ms[5], vec![0, 0, 2]);
    }

    // Variable order in the three-lines model: c0, then the lines V1 V2 V3
    // (codim 1), then the common line L (codim 2).
    fn var(m: &Model, idx: usize) -> TruncPoly {
        TruncPoly::variable(m.member_count(), m.ambient_n() - 1, idx)
    }

    fn l_index(m: &Model) -> usize {
        m.real_members().find(|&i| m.r[i] == 2).unwrap()
    }

    #[test]
    fn three_lines_has_linear_relations() {
        let m = three_lines_model();
        let p = build_presentation(&m);
        // c0 + c_L + c_{Vi} for each line
        let l = l_index(&m);
        let linear: Vec<&Generator> = p.generators.iter().filter(|g| g.degree == 1).collect();
        assert_eq!(linear.len(), 3);
        for g in &linear {
            assert!(matches!(g.kind, GeneratorKind::Nested { w } if m.r[w] == 1));
            assert!(g.support.is_empty());
            let GeneratorKind::Nested { w } = g.kind else {
                unreachable!()
            };
            let expect = var(&m, 0).add(&var(&m, l)).add(&var(&m, w));
            assert_eq!(g.poly, expect);
        }
    }

    #[test]
    fn three_lines_slice_and_membership() {
        let m = three_lines_model();
        let p = build_presentation(&m);
        let slice = ideal_slice(&p).unwrap();
        assert_eq!(slice.monomial_count(), 15);
        assert_eq!(slice.degree(), 2);

        let l = l_index(&m);
        let c0cl = var(&m, 0).mul(&var(&m, l));
        let cl2 = var(&m, l).mul(&var(&m, l));

        // -5/2 c0 c_L lies in the ideal
        assert!(slice.is_in_ideal(&c0cl.scale(&rat(-5, 2))).unwrap());
        // -5/2 c0 c_L + c_L^2 does not
        assert!(!slice.is_in_ideal(&c0cl.scale(&rat(-5, 2)).add(&cl2)).unwrap());
        // zero polynomial is in the ideal
        assert!(slice
            .is_in_ideal(&TruncPoly::zero(m.member_count(), 2))
            .unwrap());

        // top-class evaluations from the fixture
        let q1 = c0cl.scale(&rat(-3, 2)).sub(&cl2);
        assert_eq!(slice.evaluate_top(&q1).unwrap(), rat_int(1));
        let q2 = c0cl.scale(&rat(-3, 2)).sub(&cl2.scale(&rat_int(2)));
        assert_eq!(slice.evaluate_top(&q2).unwrap(), rat_int(2));
        let top = var(&m, 0).mul(&var(&m, 0)); // (-c0)^2 = c0^2
        assert_eq!(slice.evaluate_top(&top).unwrap(), rat_int(1));
    }

    #[test]
    fn three_lines_graded_dims() {
        // isomorphic to Q[c0,cL]/(c0^3, c0 cL, (c0+cL)^2): dims (1, 2, 1)
        let m = three_lines_model();
        let p = build_presentation(&m);
        for (deg, expect) in [(0, 1), (1, 2), (2, 1)] {
            assert_eq!(GradedSlice::build(&p, deg).quotient_dim(), expect);
        }
    }

    #[test]
    fn membership_iff_zero_evaluation() {
        let m = three_lines_model();
        let p = build_presentation(&m);
        let slice = ideal_slice(&p).unwrap();
        let l = l_index(&m);
        for q in [
            var(&m, 0).mul(&var(&m, l)),
            var(&m, 1).mul(&var(&m, 2)),
            var(&m, l).mul(&var(&m, l)),
            var(&m, 0).mul(&var(&m, 1)).scale(&rat(7, 3)),
        ] {
            let in_ideal = slice.is_in_ideal(&q).unwrap();
            let lambda = slice.evaluate_top(&q).unwrap();
            assert_eq!(in_ideal, lambda.is_zero());
        }
    }

    #[test]
    fn single_hyperplane_quotient() {
        let m = single_hyperplane_model();
        let p = build_presentation(&m);
        let slice = ideal_slice(&p).unwrap();
        assert_eq!(slice.rank() + 1, slice.monomial_count());
        let top = var(&m, 0).mul(&var(&m, 0));
        assert_eq!(slice.evaluate_top(&top).unwrap(), rat_int(1));
    }

    #[test]
    fn all_non_nested_vs_minimal_span_the_same_slice() {
        // replacing minimal non-nested supports by all non-nested supports
        // leaves the degree-(n-1) row space unchanged
        let input = parse_arrangement(
            r#"{ "affine_dim": 3, "hyperplanes": [
                { "coeffs": [1, -1, 0], "mult": 1 },
                { "coeffs": [1, 1, 0], "mult": 1 },
                { "coeffs": [1, 0, 1], "mult": 1 },
                { "coeffs": [1, 0, 2], "mult": 1 }
            ]}"#,
        )
        .unwrap();
        let m = Model::build(&input, BuildingKind::Full);
        let p = build_presentation(&m);
        let slice = ideal_slice(&p).unwrap();

        let nvars = m.member_count();
        let top = m.ambient_n() - 1;
        let mut extended = p.clone();
        let members: Vec<usize> = m.real_members().collect();
        let mut added = 0;
        for mask in 1u64..(1 << members.len()) {
            if mask.count_ones() < 2 || mask.count_ones() as usize > top {
                continue;
            }
            let set: Vec<usize> = (0..members.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| members[i])
                .collect();
            if m.is_nested(&set) {
                continue;
            }
            let mut exps = vec![0u32; nvars];
            for &v in &set {
                exps[v] = 1;
            }
            extended.generators.push(Generator {
                kind: GeneratorKind::NonNested,
                support: set,
                degree: mask.count_ones() as usize,
                poly: TruncPoly::monomial(nvars, top, exps, rat_int(1)),
            });
            added += 1;
        }
        assert!(added > 0, "no non-minimal non-nested sets in the fixture");
        let slice2 = ideal_slice(&extended).unwrap();
        assert_eq!(slice.rank(), slice2.rank());
    }
}
