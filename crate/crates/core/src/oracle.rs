//! Independent verification path: multiplier ideals of an affine central
//! arrangement are intersections of powers of the linear-form ideals of its
//! flats, and a degree bound turns jumping-number detection into finite
//! exact linear algebra.
//!
//! c is a jumping number iff some flat V and integer m >= 0 satisfy
//! c = (r'(V) + m) / s'(V) and
//!
//! ```text
//!     intersection over W >= V of I_W^(ceil(c s'(W)) - r'(W))
//!         is not contained in I_V^(m+1),
//! ```
//!
//! tested inside the space of polynomials of degree at most
//! a0' = sum over flats of max(0, s' - r'). Negative exponents impose no
//! condition and are clamped at zero.
//!
//! This module works directly on the affine arrangement and never touches
//! the projective machinery, so agreement with the jump engine is a real
//! two-route check.

use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use crate::arrangement::ArrangementInput;
use crate::lattice::close_under_intersection;
use crate::matrix::{Matrix, RowSpace};
use crate::poly::{Exponents, TruncPoly};
use crate::rational::{rat_int, Rat};
use crate::subspace::Subspace;

#[derive(Debug, Clone)]
pub struct OracleFlat {
    pub subspace: Subspace,
    pub hyperplanes: Vec<usize>,
    /// r'(V): codimension in the affine space.
    pub r: usize,
    /// s'(V): total multiplicity of the hyperplanes containing the flat.
    pub s: u64,
    /// Invertible coordinate change whose first r rows are the flat's
    /// equations: in the new coordinates the flat is y_1 = ... = y_r = 0.
    pub frame: Matrix,
}

#[derive(Debug)]
pub struct Oracle {
    /// Affine ambient dimension (the n-1 of the input).
    pub dim: usize,
    /// Flats of the affine lattice (the ambient space excluded; the origin
    /// included when the arrangement is essential). This full lattice is the
    /// building set of the characterization.
    pub flats: Vec<OracleFlat>,
    /// Degree bound a0'.
    pub bound: usize,
    /// Monomials of degree <= bound, the working basis.
    pub monomials: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
    /// Memoized membership spans and their condition functionals, per
    /// (flat, exponent).
    spans: HashMap<(usize, usize), Matrix>,
    conditions: HashMap<(usize, usize), Matrix>,
}

/// Monomials of degree 0..=bound in `dim` variables, deterministic order.
fn monomials_up_to(dim: usize, bound: usize) -> Vec<Exponents> {
    let mut out = Vec::new();
    for d in 0..=bound {
        out.extend(crate::ring::monomials_of_degree(dim, d));
    }
    out
}

fn adapted_frame(dim: usize, equations: &Matrix) -> Matrix {
    let mut acc = RowSpace::new(dim);
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for row in equations.iter_rows() {
        acc.insert(row);
        rows.push(row.to_vec());
    }
    for i in 0..dim {
        if rows.len() == dim {
            break;
        }
        let mut e = vec![Rat::zero(); dim];
        e[i] = rat_int(1);
        if acc.insert(&e) {
            rows.push(e);
        }
    }
    assert_eq!(rows.len(), dim, "frame completion failed");
    Matrix::from_rows(dim, rows)
}

impl Oracle {
    pub fn new(input: &ArrangementInput) -> Self {
        let dim = input.affine_dim;
        let forms: Vec<Vec<Rat>> = input.hyperplanes.iter().map(|h| h.form.clone()).collect();
        let mults: Vec<u32> = input.hyperplanes.iter().map(|h| h.mult).collect();
        let flats: Vec<OracleFlat> = close_under_intersection(dim, &forms, &mults, true)
            .into_iter()
            .map(|f| {
                let frame = adapted_frame(dim, f.subspace.equations());
                OracleFlat {
                    r: f.subspace.codim(),
                    s: f.s,
                    frame,
                    subspace: f.subspace,
                    hyperplanes: f.hyperplanes,
                }
            })
            .collect();
        let bound: usize = flats
            .iter()
            .map(|f| (f.s as i64 - f.r as i64).max(0) as usize)
            .sum();
        let monomials = monomials_up_to(dim, bound);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Oracle {
            dim,
            flats,
            bound,
            monomials,
            index,
            spans: HashMap::new(),
            conditions: HashMap::new(),
        }
    }

    pub fn space_dim(&self) -> usize {
        self.monomials.len()
    }

    fn vector_of(&self, p: &TruncPoly) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.monomials.len()];
        for (e, c) in p.terms() {
            v[self.index[e]] = c.clone();
        }
        v
    }

    /// The subspace of polynomials of degree <= bound lying in I_V^e, as a
    /// canonical rref matrix. In the adapted frame these are spanned by the
    /// monomials whose total degree in the first r coordinates is at least e.
    pub fn membership_span(&mut self, flat: usize, e: usize) -> Matrix {
        if let Some(m) = self.spans.get(&(flat, e)) {
            return m.clone();
        }
        let span = self.compute_span(&self.flats[flat].frame, self.flats[flat].r, e);
        self.spans.insert((flat, e), span.clone());
        span
    }

    fn compute_span(&self, frame: &Matrix, r: usize, e: usize) -> Matrix {
        if e == 0 {
            return Matrix::identity(self.monomials.len());
        }
        let mut acc = RowSpace::new(self.monomials.len());
        for mono in &self.monomials {
            let lead: usize = mono[..r].iter().map(|&x| x as usize).sum();
            if lead < e {
                continue;
            }
            // expand the y-monomial back into x-coordinates
            let mut poly = TruncPoly::one(self.dim, self.bound);
            for (i, &exp) in mono.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let mut linear = TruncPoly::zero(self.dim, self.bound);
                for (j, coeff) in frame.row(i).iter().enumerate() {
                    if !coeff.is_zero() {
                        linear =
                            linear.add(&TruncPoly::variable(self.dim, self.bound, j).scale(coeff));
                    }
                }
                for _ in 0..exp {
                    poly = poly.mul(&linear);
                }
            }
            acc.insert(&self.vector_of(&poly));
        }
        acc.to_matrix()
    }

    /// Linear conditions cutting out I_V^e inside the working space
    /// (functionals vanishing on the membership span).
    fn membership_conditions(&mut self, flat: usize, e: usize) -> Matrix {
        if let Some(m) = self.conditions.get(&(flat, e)) {
            return m.clone();
        }
        let span = self.membership_span(flat, e);
        let cond = span.null_space();
        self.conditions.insert((flat, e), cond.clone());
        cond
    }

    /// Clamped exponent ceil(c s'(W)) - r'(W).
    fn exponent(&self, flat: usize, c: &Rat) -> usize {
        let cs = c * rat_int(self.flats[flat].s as i64);
        let e = cs.ceil().to_integer() - num_bigint::BigInt::from(self.flats[flat].r);
        if e.is_negative() {
            0
        } else {
            let digits: u64 = (&e).try_into().expect("exponent fits");
            digits as usize
        }
    }

    /// Realizations of c as (r'(V) + m) / s'(V) with m >= 0.
    fn realizations(&self, c: &Rat) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (v, flat) in self.flats.iter().enumerate() {
            let m = c * rat_int(flat.s as i64) - rat_int(flat.r as i64);
            if m.is_integer() && !m.is_negative() {
                let m: u64 = (&m.to_integer()).try_into().expect("m fits");
                out.push((v, m as usize));
            }
        }
        out
    }

    /// The non-containment test of the affine characterization.
    pub fn is_jumping(&mut self, c: &Rat) -> bool {
        self.jump_evidence(c).is_some()
    }

    /// The realization (V, m) witnessing the jump, if any.
    fn jump_evidence(&mut self, c: &Rat) -> Option<(usize, usize, RowSpace)> {
        for (v, m) in self.realizations(c) {
            let mut cond = RowSpace::new(self.monomials.len());
            for w in 0..self.flats.len() {
                if !self.flats[w].subspace.contains(&self.flats[v].subspace) {
                    continue;
                }
                let e = self.exponent(w, c);
                if e == 0 {
                    continue;
                }
                for row in self.membership_conditions(w, e).iter_rows() {
                    cond.insert(row);
                }
            }
            let rank_intersection = cond.rank();
            let mut extended = cond.clone();
            for row in self.membership_conditions(v, m + 1).iter_rows() {
                extended.insert(row);
            }
            if extended.rank() > rank_intersection {
                return Some((v, m, cond));
            }
        }
        None
    }

    /// An explicit polynomial in the multiplier-ideal intersection that
    /// escapes I_V^(m+1), as (exponents, coefficient) terms.
    pub fn witness(&mut self, c: &Rat) -> Option<Vec<(Exponents, Rat)>> {
        let (v, m, cond) = self.jump_evidence(c)?;
        let basis = cond.to_matrix().null_space();
        let viol = self.membership_conditions(v, m + 1);
        for row in basis.iter_rows() {
            let escapes = viol
                .iter_rows()
                .any(|f| !f.iter().zip(row).map(|(a, b)| a * b).sum::<Rat>().is_zero());
            if escapes {
                return Some(
                    row.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(i, x)| (self.monomials[i].clone(), x.clone()))
                        .collect(),
                );
            }
        }
        None
    }

    /// All jumping numbers in (0,1) by exhausting the finitely many
    /// realizable candidates.
    pub fn jumping_set(&mut self) -> Vec<Rat> {
        let mut candidates = BTreeSet::new();
        for flat in &self.flats {
            let s = flat.s as i64;
            let r = flat.r as i64;
            for m in 0..(s - r).max(0) {
                let c = Rat::new((r + m).into(), s.into());
                if c.is_positive() && c < rat_int(1) {
                    candidates.insert(c);
                }
            }
        }
        candidates
            .into_iter()
            .filter(|c| self.is_jumping(c))
            .collect()
    }
}

/// Oracle verdicts for a list of candidate values.
pub fn cross_validate(input: &ArrangementInput, candidates: &[Rat]) -> Vec<bool> {
    let mut oracle = Oracle::new(input);
    candidates.iter().map(|c| oracle.is_jumping(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::parse_arrangement;
    use crate::rational::rat;

    fn oracle_for(doc: &str) -> Oracle {
        Oracle::new(&parse_arrangement(doc).unwrap())
    }

    #[test]
    fn membership_spans_in_the_plane() {
        // two transverse lines: flats are the lines and the origin
        let mut o = oracle_for(
            r#"{ "affine_dim": 2, "hyperplanes": [
                { "coeffs": [1, 0], "mult": 2 },
                { "coeffs": [0, 1], "mult": 2 }
            ]}"#,
        );
        assert_eq!(o.dim, 2);
        // bound: lines contribute 2-1 each, origin 4-2
        assert_eq!(o.bound, 4);
        let origin = o
            .flats
            .iter()
            .position(|f| f.subspace.is_origin())
            .unwrap();
        // I_origin^2 within degree <= bound: codim drops by the number of
        // monomials of degree < 2
        let span = o.membership_span(origin, 2);
        assert_eq!(span.rows(), o.space_dim() - 3);
        let x_axis = o.flats.iter().position(|f| f.r == 1).unwrap();
        let line_span = o.membership_span(x_axis, 1);
        // complement: monomials not involving the adapted first coordinate
        let r = o.flats[x_axis].r;
        let lead_zero = o
            .monomials
            .iter()
            .filter(|m| m[..r].iter().all(|&x| x == 0))
            .count();
        assert_eq!(line_span.rows() + lead_zero, o.space_dim());
    }

    #[test]
    fn slanted_line_span() {
        // flat {x - y = 0} in C^2 with bound 1: the span of I^1 is x - y
        let mut o = oracle_for(
            r#"{ "affine_dim": 2, "hyperplanes": [
                { "coeffs": [1, -1], "mult": 2 }
            ]}"#,
        );
        assert_eq!(o.bound, 1);
        let span = o.membership_span(0, 1);
        assert_eq!(span.rows(), 1);
        let row = span.row(0);
        // proportional to x - y in the (constant, x, y) monomial order
        let x = o.index[&vec![1u32, 0]];
        let y = o.index[&vec![0u32, 1]];
        assert_eq!(row[x], -row[y].clone());
        assert!(row[o.index[&vec![0u32, 0]]].is_zero());
    }

    #[test]
    fn monotone_in_the_exponent() {
        let mut o = oracle_for(
            r#"{ "affine_dim": 2, "hyperplanes": [
                { "coeffs": [1, 0], "mult": 3 },
                { "coeffs": [0, 1], "mult": 1 }
            ]}"#,
        );
        let origin = o
            .flats
            .iter()
            .position(|f| f.subspace.is_origin())
            .unwrap();
        let mut prev = o.membership_span(origin, 0);
        for e in 1..=3 {
            let next = o.membership_span(origin, e);
            assert!(next.rows() < prev.rows());
            for row in next.iter_rows() {
                assert!(prev.row_space_contains(row), "I^{e} inside I^{}", e - 1);
            }
            prev = next;
        }
    }

    #[test]
    fn frame_independence() {
        // the same flat with a different completion order spans the same space
        let mut o = oracle_for(
            r#"{ "affine_dim": 3, "hyperplanes": [
                { "coeffs": [1, 1, 1], "mult": 3 }
            ]}"#,
        );
        let standard = o.membership_span(0, 2);
        let eq = o.flats[0].subspace.equations().clone();
        let mut rows: Vec<Vec<Rat>> = eq.iter_rows().map(|r| r.to_vec()).collect();
        // complete with the standard basis tried in reverse order
        let mut acc = RowSpace::new(3);
        acc.insert(&rows[0]);
        for i in (0..3).rev() {
            let mut e = vec![Rat::zero(); 3];
            e[i] = rat_int(1);
            if acc.insert(&e) {
                rows.push(e);
            }
        }
        let other_frame = Matrix::from_rows(3, rows);
        assert_ne!(other_frame, o.flats[0].frame);
        let alt = o.compute_span(&other_frame, 1, 2);
        assert_eq!(alt, standard);
    }

    #[test]
    fn three_concurrent_lines_verdicts() {
        let mut o = oracle_for(
            r#"{ "affine_dim": 2, "hyperplanes": [
                { "coeffs": [1, -1], "mult": 1 },
                { "coeffs": [1, 1], "mult": 1 },
                { "coeffs": [1, 0], "mult": 1 }
            ]}"#,
        );
        assert!(o.is_jumping(&rat(2, 3)));
        assert!(!o.is_jumping(&rat(1, 3)));
        assert_eq!(o.jumping_set(), vec![rat(2, 3)]);
    }

    #[test]
    fn four_concurrent_lines_jumping_set() {
        let mut o = oracle_for(
            r#"{ "affine_dim": 2, "hyperplanes": [
                { "coeffs": [1, 0], "mult": 1 },
                { "coeffs": [0, 1], "mult": 1 },
                { "coeffs": [1, -1], "mult": 1 },
                { "coeffs": [1, 1], "mult": 1 }
            ]}"#,
        );
        assert_eq!(o.jumping_set(), vec![rat(1, 2), rat(3, 4)]);
    }

    #[test]
    fn single_hyperplane_multiplicities() {
        let mut o = oracle_for(
            r#"{ "affine_dim": 2, "hyperplanes": [ { "coeffs": [1, 0], "mult": 2 } ]}"#,
        );
        assert_eq!(o.jumping_set(), vec![rat(1, 2)]);
        let mut o = oracle_for(
            r#"{ "affine_dim": 2, "hyperplanes": [ { "coeffs": [1, 0], "mult": 3 } ]}"#,
        );
        assert_eq!(o.jumping_set(), vec![rat(1, 3), rat(2, 3)]);
    }

    #[test]
    fn witness_exists_for_jumps() {
        let mut o = oracle_for(
            r#"{ "affine_dim": 2, "hyperplanes": [ { "coeffs": [1, 0], "mult": 3 } ]}"#,
        );
        let w = o.witness(&rat(2, 3)).expect("2/3 jumps");
        assert!(!w.is_empty());
        assert!(o.witness(&rat(1, 2)).is_none());
    }

    #[test]
    fn c_equal_one_is_always_a_jump() {
        for doc in [
            r#"{ "affine_dim": 2, "hyperplanes": [ { "coeffs": [1, 0], "mult": 1 } ]}"#,
            r#"{ "affine_dim": 2, "hyperplanes": [
                { "coeffs": [1, 0], "mult": 1 },
                { "coeffs": [0, 1], "mult": 2 }
            ]}"#,
        ] {
            let mut o = oracle_for(doc);
            assert!(o.is_jumping(&rat_int(1)));
        }
    }
}
