//! The combinatorial jump criteria: constants, candidate numbers, the
//! nested-set Todd series, the criterion polynomial, and inner jumping
//! multiplicities.
//!
//! Everything is decided inside the degree-(n-1) piece of the wonderful
//! model's cohomology ring. A candidate c in (0,1) is a jumping number iff
//! its criterion polynomial does not lie in the ideal; the inner jumping
//! multiplicity at the cone point is the top-class value of the analogous
//! expression with the single nested set at the apex member and the c0
//! coefficient dropped.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arrangement::ArrangementInput;
use crate::building::{BuildingKind, GapTop, Model, NestedSet};
use crate::error::Error;
use crate::oracle::Oracle;
use crate::poly::{substitute_linear, TruncPoly};
use crate::rational::{format_rat, rat_int, Rat};
use crate::ring::{build_presentation, ideal_slice, IdealSlice, Presentation};
use crate::series::{q_series, Series};

#[derive(Debug, Clone, Copy)]
pub struct JumpConstants {
    pub d: u64,
    /// a0 = max{ d - n + 1, sum over real members of max(0, s - r) }.
    pub a0: i64,
}

pub fn constants(model: &Model) -> JumpConstants {
    let n = model.ambient_n() as i64;
    let d = model.lattice.d_total;
    let sum: i64 = model
        .real_members()
        .map(|m| (model.s[m] as i64 - model.r[m] as i64).max(0))
        .sum();
    JumpConstants {
        d,
        a0: (d as i64 - n + 1).max(sum),
    }
}

/// A rational number in (0,1] together with its support set and the
/// coefficients of the twisting linear form.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub c: Rat,
    /// Members V with c * s(V) integral, ascending.
    pub s_c: Vec<usize>,
    /// a_V(c) per member; entry 0 is -a0.
    pub a_values: Vec<Rat>,
}

/// Candidate data for an arbitrary positive rational.
pub fn candidate_for(model: &Model, k: &JumpConstants, c: &Rat) -> Candidate {
    let mut s_c = Vec::new();
    let mut a_values = vec![Rat::zero(); model.member_count()];
    a_values[0] = rat_int(-k.a0);
    for m in model.real_members() {
        let cs = c * rat_int(model.s[m] as i64);
        let r = rat_int(model.r[m] as i64);
        if cs.is_integer() {
            s_c.push(m);
            a_values[m] = r - cs;
        } else {
            a_values[m] = r - rat_int(1) - cs.floor();
        }
    }
    Candidate {
        c: c.clone(),
        s_c,
        a_values,
    }
}

/// All candidates k/s(V) in (0,1], deduplicated and sorted. Numbers below 1
/// feed the jump criterion; 1 itself is listed for the inner multiplicity.
pub fn candidates(model: &Model, k: &JumpConstants) -> Vec<Candidate> {
    let mut values = BTreeSet::new();
    for m in model.real_members() {
        let s = model.s[m] as i64;
        for j in 1..=s {
            values.insert(Rat::new(BigInt::from(j), BigInt::from(s)));
        }
    }
    values
        .into_iter()
        .map(|c| candidate_for(model, k, &c))
        .collect()
}

/// For each member, whether {W} together with the nested set is still
/// nested. The zero subspace and the set's own members always qualify.
fn nested_filter(model: &Model, s: &NestedSet) -> Vec<bool> {
    (0..model.member_count())
        .map(|w| {
            if w == 0 || s.contains(w) {
                return true;
            }
            let mut extended = s.members.clone();
            extended.push(w);
            model.is_nested(&extended)
        })
        .collect()
}

/// Linear form summing the variables of the members inside `within` that
/// pass the nestedness filter, optionally excluding `within` itself.
fn filtered_sum(
    model: &Model,
    filter: &[bool],
    trunc: usize,
    within: usize,
    strict: bool,
) -> TruncPoly {
    let nvars = model.member_count();
    let mut ell = TruncPoly::zero(nvars, trunc);
    for wp in 0..nvars {
        if filter[wp] && model.le[wp][within] && !(strict && wp == within) {
            ell = ell.add(&TruncPoly::variable(nvars, trunc, wp));
        }
    }
    ell
}

/// One factor of the gap product: the series attached to member `w` inside
/// the gap from member `bottom` up to a top of dimension `top_dim`.
fn gap_factor(
    model: &Model,
    filter: &[bool],
    q: &Series,
    trunc: usize,
    bottom: usize,
    top_dim: usize,
    w: usize,
) -> Result<TruncPoly, Error> {
    if w == bottom {
        let e = (top_dim - model.delta[bottom]) as i64;
        let ell = filtered_sum(model, filter, trunc, bottom, false).neg();
        substitute_linear(q, &ell)?.pow_signed(e)
    } else {
        let e = (top_dim - model.delta[w]) as i64;
        let below = substitute_linear(q, &filtered_sum(model, filter, trunc, w, true).neg())?
            .pow_signed(-e)?;
        let own = substitute_linear(
            q,
            &TruncPoly::variable(model.member_count(), trunc, w),
        )?;
        let closed = substitute_linear(q, &filtered_sum(model, filter, trunc, w, false).neg())?
            .pow_signed(e)?;
        Ok(below.mul(&own).mul(&closed))
    }
}

fn gap_product(
    model: &Model,
    filter: &[bool],
    q: &Series,
    trunc: usize,
    bottom: usize,
    top: GapTop,
) -> Result<TruncPoly, Error> {
    let top_dim = model.gap_top_dim(top);
    debug_assert!(top_dim > model.delta[bottom], "degenerate gap");
    let mut acc = TruncPoly::one(model.member_count(), trunc);
    for w in 0..model.member_count() {
        if !model.le[bottom][w] || !model.member_below_top(w, top) {
            continue;
        }
        acc = acc.mul(&gap_factor(model, filter, q, trunc, bottom, top_dim, w)?);
    }
    Ok(acc)
}

/// The series T^S of a nonempty nested set, truncated at degree n-1.
///
/// The product runs over one gap per member (from the member up to the
/// intersection of the members strictly above it) plus the bottom gap from
/// the zero subspace up to the intersection of the whole set. For chains
/// this is the usual indexing by (V_S, V); the gap form also covers the
/// incomparable configurations that smaller building sets admit, where the
/// sum of a member's lower neighbors need not be a member.
pub fn t_series(model: &Model, s: &NestedSet) -> Result<TruncPoly, Error> {
    assert!(!s.is_empty(), "T series of the empty set");
    let trunc = model.ambient_n() - 1;
    let q = q_series(trunc);
    let filter = nested_filter(model, s);
    let mut acc = TruncPoly::one(model.member_count(), trunc);
    for (i, &v) in s.members.iter().enumerate() {
        acc = acc.mul(&gap_product(model, &filter, &q, trunc, v, s.parent[i])?);
    }
    acc = acc.mul(&gap_product(
        model,
        &filter,
        &q,
        trunc,
        0,
        GapTop::Flat(s.bottom_flat),
    )?);
    Ok(acc)
}

/// The factor P_W^{S,V} for V in S (or the ambient space, `None`) and a
/// member W with V_S contained in W strictly inside V.
pub fn p_series(
    model: &Model,
    s: &NestedSet,
    v: Option<usize>,
    w: usize,
) -> Result<TruncPoly, Error> {
    let trunc = model.ambient_n() - 1;
    let q = q_series(trunc);
    let vsub = s.vsub_of(v);
    let wsub = model.subspace_of(w);
    let (v_dim, v_contains_w) = match v {
        None => (model.ambient_n(), true),
        Some(m) => {
            let sub = model.subspace_of(m);
            (model.delta[m], sub.contains(&wsub) && sub != wsub)
        }
    };
    if !wsub.contains(vsub) || !v_contains_w {
        return Err(Error::BadDocument(
            "p_series requires V_S inside W strictly inside V".to_string(),
        ));
    }
    let filter = nested_filter(model, s);
    if wsub == *vsub {
        gap_factor(model, &filter, &q, trunc, w, v_dim, w)
    } else {
        // bottom is irrelevant in the non-bottom branch; pass w's own slot
        let e = (v_dim - model.delta[w]) as i64;
        let below = substitute_linear(&q, &filtered_sum(model, &filter, trunc, w, true).neg())?
            .pow_signed(-e)?;
        let own = substitute_linear(&q, &TruncPoly::variable(model.member_count(), trunc, w))?;
        let closed = substitute_linear(&q, &filtered_sum(model, &filter, trunc, w, false).neg())?
            .pow_signed(e)?;
        Ok(below.mul(&own).mul(&closed))
    }
}

/// The degree-(n-1) polynomial of the jump criterion for a candidate in
/// (0,1); the zero polynomial when the support set is empty.
pub fn criterion_poly(model: &Model, cand: &Candidate) -> Result<TruncPoly, Error> {
    let nvars = model.member_count();
    let trunc = model.ambient_n() - 1;
    if cand.s_c.is_empty() {
        return Ok(TruncPoly::zero(nvars, trunc));
    }
    let mut ell = TruncPoly::zero(nvars, trunc);
    for m in 0..nvars {
        if !cand.a_values[m].is_zero() {
            ell = ell.add(&TruncPoly::variable(nvars, trunc, m).scale(&cand.a_values[m]));
        }
    }
    let mut ell_pows = vec![TruncPoly::one(nvars, trunc)];
    for j in 1..trunc.max(1) {
        ell_pows.push(ell_pows[j - 1].mul(&ell));
    }

    let mut acc = TruncPoly::zero(nvars, trunc);
    for s in model.nested_subsets_of(&cand.s_c) {
        let t = t_series(model, &s)?;
        let mut exps = vec![0u32; nvars];
        for &v in &s.members {
            exps[v] = 1;
        }
        let mono = TruncPoly::monomial(nvars, trunc, exps, rat_int(1));
        let sign = if s.len() % 2 == 1 {
            rat_int(1)
        } else {
            rat_int(-1)
        };
        let mut inv_factorial = Rat::one();
        for j in 0..=(trunc - s.len()) {
            if j > 0 {
                inv_factorial /= rat_int(j as i64);
            }
            let tj = t.homogeneous_part(trunc - s.len() - j);
            if tj.is_zero() {
                continue;
            }
            let term = ell_pows[j]
                .mul(&tj)
                .mul(&mono)
                .scale(&(&sign * &inv_factorial));
            acc = acc.add(&term);
        }
    }
    debug_assert!(
        acc.is_zero() || acc.homogeneous_degree() == Some(trunc),
        "criterion polynomial is not homogeneous of top degree"
    );
    Ok(acc)
}

/// A coned arrangement with its building set, ring slice, and constants.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub model: Model,
    pub presentation: Presentation,
    pub slice: IdealSlice,
    pub constants: JumpConstants,
}

impl Analysis {
    pub fn new(input: &ArrangementInput, kind: BuildingKind) -> Result<Self, Error> {
        input.validate()?;
        let model = Model::build(input, kind);
        let presentation = build_presentation(&model);
        let slice = ideal_slice(&presentation)?;
        let constants = constants(&model);
        Ok(Analysis {
            model,
            presentation,
            slice,
            constants,
        })
    }

    pub fn candidate_for(&self, c: &Rat) -> Candidate {
        candidate_for(&self.model, &self.constants, c)
    }

    pub fn candidates(&self) -> Vec<Candidate> {
        candidates(&self.model, &self.constants)
    }

    /// Theorem verdict for c in (0,1): the criterion polynomial does not lie
    /// in the ideal.
    pub fn is_jumping(&self, cand: &Candidate) -> Result<bool, Error> {
        assert!(
            cand.c.is_positive() && cand.c < rat_int(1),
            "jump criterion applies to c in (0,1)"
        );
        let poly = criterion_poly(&self.model, cand)?;
        Ok(!self.slice.is_in_ideal(&poly)?)
    }

    /// The member that projectivizes to the cone point, when the building
    /// set has one.
    pub fn apex_member(&self) -> Option<usize> {
        self.model
            .lattice
            .apex
            .and_then(|f| self.model.flat_member[f])
    }

    /// Inner jumping multiplicity at the cone point for c in (0,1].
    ///
    /// Zero when c*d is not an integer or the lattice has no dimension-1
    /// flat. Requires the apex flat to be a member; callers fall back to the
    /// full building set when a minimal one dropped it.
    pub fn inner_multiplicity(&self, c: &Rat) -> Result<BigInt, Error> {
        let d = rat_int(self.constants.d as i64);
        if !(c * &d).is_integer() {
            return Ok(BigInt::zero());
        }
        if self.model.lattice.apex.is_none() {
            return Ok(BigInt::zero());
        }
        let vx = self
            .apex_member()
            .expect("inner multiplicity needs the apex member; use the full building set");
        let model = &self.model;
        let nvars = model.member_count();
        let n = model.ambient_n();
        let trunc = n - 1;
        let cand = self.candidate_for(c);

        // linear form without the c0 term
        let mut ell = TruncPoly::zero(nvars, trunc);
        for m in model.real_members() {
            if !cand.a_values[m].is_zero() {
                ell = ell.add(&TruncPoly::variable(nvars, trunc, m).scale(&cand.a_values[m]));
            }
        }

        let s = model.nested_set(vec![vx]);
        let t = t_series(model, &s)?;
        let mut exps = vec![0u32; nvars];
        exps[vx] = 1;
        let mono = TruncPoly::monomial(nvars, trunc, exps, rat_int(1));

        let mut acc = TruncPoly::zero(nvars, trunc);
        let mut ell_pow = TruncPoly::one(nvars, trunc);
        let mut inv_factorial = Rat::one();
        for j in 0..=(n - 2) {
            if j > 0 {
                ell_pow = ell_pow.mul(&ell);
                inv_factorial /= rat_int(j as i64);
            }
            let tj = t.homogeneous_part(n - 2 - j);
            if tj.is_zero() {
                continue;
            }
            acc = acc.add(&ell_pow.mul(&tj).mul(&mono).scale(&inv_factorial));
        }
        let lambda = self.slice.evaluate_top(&acc)?;
        if !lambda.is_integer() || lambda.is_negative() {
            return Err(Error::BadInnerMultiplicity(format_rat(&lambda)));
        }
        Ok(lambda.to_integer())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    pub kind: BuildingKind,
    pub with_oracle: bool,
    pub diagnostics: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            kind: BuildingKind::Full,
            with_oracle: false,
            diagnostics: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CandidateOutcome {
    pub c: Rat,
    /// Hyperplane-index labels of the support members, in member order.
    pub s_c_labels: Vec<Vec<usize>>,
    pub verdict: bool,
    /// True for c = 1, which is a jumping number without any criterion.
    pub trivially_one: bool,
    /// Inner jumping multiplicity, present iff c*d is an integer.
    pub inner: Option<BigInt>,
    pub oracle: Option<bool>,
    /// Rendered criterion polynomial (diagnostics only).
    pub criterion: Option<String>,
}

#[derive(Debug, Clone)]
pub struct JumpReport {
    /// Jumping numbers in the open interval (0,1), ascending.
    pub jumping_numbers: Vec<Rat>,
    /// (c, n_{c,x}) for every candidate c in (0,1] with c*d integral.
    pub inner_multiplicities: Vec<(Rat, BigInt)>,
    pub candidates: Vec<CandidateOutcome>,
    /// Building set the inner multiplicities were computed with (full when
    /// a minimal set lacks the apex member).
    pub inner_building_set: BuildingKind,
    pub oracle_all_agree: Option<bool>,
}

/// Run the whole pipeline: cone, building set, presentation, slice,
/// candidates, verdicts, inner multiplicities, optional oracle comparison.
pub fn analyze(input: &ArrangementInput, options: AnalyzeOptions) -> Result<JumpReport, Error> {
    let analysis = Analysis::new(input, options.kind)?;

    // Theorem 1.4-style evaluations need the apex member; a minimal building
    // set may have dropped it as reducible.
    let needs_fallback =
        analysis.model.lattice.apex.is_some() && analysis.apex_member().is_none();
    let inner_analysis_storage;
    let inner_analysis: &Analysis = if needs_fallback {
        inner_analysis_storage = Analysis::new(input, BuildingKind::Full)?;
        &inner_analysis_storage
    } else {
        &analysis
    };

    let mut oracle = if options.with_oracle {
        Some(Oracle::new(input))
    } else {
        None
    };

    let names = analysis.model.variable_names();
    let one = rat_int(1);
    let d = rat_int(analysis.constants.d as i64);

    // The inner-multiplicity list covers every c in (0,1] with c*d integral,
    // independently of which of these are candidates for the chosen
    // building set.
    let mut inner_multiplicities = Vec::new();
    for k in 1..=analysis.constants.d {
        let c = Rat::new(BigInt::from(k), BigInt::from(analysis.constants.d));
        let n = inner_analysis.inner_multiplicity(&c)?;
        inner_multiplicities.push((c, n));
    }

    let mut outcomes = Vec::new();
    let mut jumping_numbers = Vec::new();
    let mut all_agree = true;

    for cand in analysis.candidates() {
        let trivially_one = cand.c == one;
        let (verdict, criterion) = if trivially_one {
            (true, None)
        } else {
            let poly = criterion_poly(&analysis.model, &cand)?;
            let verdict = !analysis.slice.is_in_ideal(&poly)?;
            let rendered = options.diagnostics.then(|| poly.render(&names));
            (verdict, rendered)
        };
        let inner = if (&cand.c * &d).is_integer() {
            let n = inner_multiplicities
                .iter()
                .find(|(c, _)| c == &cand.c)
                .map(|(_, n)| n.clone())
                .expect("every k/d is in the inner list");
            // a nonzero inner multiplicity below 1 forces a jump
            debug_assert!(n.is_zero() || trivially_one || verdict);
            Some(n)
        } else {
            None
        };
        let oracle_verdict = oracle.as_mut().map(|o| o.is_jumping(&cand.c));
        if let Some(ov) = oracle_verdict {
            if ov != verdict {
                all_agree = false;
            }
        }
        if verdict && !trivially_one {
            jumping_numbers.push(cand.c.clone());
        }
        outcomes.push(CandidateOutcome {
            c: cand.c.clone(),
            s_c_labels: cand
                .s_c
                .iter()
                .map(|&m| analysis.model.label_sets[m].clone())
                .collect(),
            verdict,
            trivially_one,
            inner,
            oracle: oracle_verdict,
            criterion,
        });
    }

    Ok(JumpReport {
        jumping_numbers,
        inner_multiplicities,
        candidates: outcomes,
        inner_building_set: inner_analysis.model.kind,
        oracle_all_agree: oracle.is_some().then_some(all_agree),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::parse_arrangement;
    use crate::rational::rat;

    fn three_lines() -> ArrangementInput {
        parse_arrangement(
            r#"{ "affine_dim": 2, "hyperplanes": [
                { "coeffs": [1, -1], "mult": 1 },
                { "coeffs": [1, 1], "mult": 1 },
                { "coeffs": [1, 0], "mult": 1 }
            ]}"#,
        )
        .unwrap()
    }

    fn analysis() -> Analysis {
        Analysis::new(&three_lines(), BuildingKind::Full).unwrap()
    }

    #[test]
    fn constants_three_lines() {
        let a = analysis();
        assert_eq!(a.constants.d, 3);
        assert_eq!(a.constants.a0, 1);
    }

    #[test]
    fn constants_single_hyperplane_mult_five() {
        let input = parse_arrangement(
            r#"{ "affine_dim": 2, "hyperplanes": [ { "coeffs": [1, 0], "mult": 5 } ]}"#,
        )
        .unwrap();
        let a = Analysis::new(&input, BuildingKind::Full).unwrap();
        assert_eq!(a.constants.d, 5);
        assert_eq!(a.constants.a0, 4);
    }

    #[test]
    fn candidates_three_lines() {
        let a = analysis();
        let cands = a.candidates();
        let cs: Vec<Rat> = cands.iter().map(|c| c.c.clone()).collect();
        assert_eq!(cs, vec![rat(1, 3), rat(2, 3), rat_int(1)]);
        // S_{1/3} = {L}, the only member with 3 | s
        assert_eq!(cands[0].s_c.len(), 1);
        let l = cands[0].s_c[0];
        assert_eq!(a.model.s[l], 3);
        // a-values at c = 1/3: a_L = 2 - 1 = 1, lines 0, a_0 = -1
        assert_eq!(cands[0].a_values[l], rat_int(1));
        assert_eq!(cands[0].a_values[0], rat_int(-1));
    }

    #[test]
    fn candidates_single_mult_one_hyperplane() {
        let input = parse_arrangement(
            r#"{ "affine_dim": 2, "hyperplanes": [ { "coeffs": [1, 0], "mult": 1 } ]}"#,
        )
        .unwrap();
        let a = Analysis::new(&input, BuildingKind::Full).unwrap();
        let cs: Vec<Rat> = a.candidates().iter().map(|c| c.c.clone()).collect();
        assert_eq!(cs, vec![rat_int(1)]);
    }

    fn l_member(a: &Analysis) -> usize {
        a.model.real_members().find(|&m| a.model.delta[m] == 1).unwrap()
    }

    #[test]
    fn p_series_fixture_values() {
        let a = analysis();
        let m = &a.model;
        let l = l_member(&a);
        let s = m.nested_set(vec![l]);

        // P_0^{S,L} = Q(-c0): degree-1 part -c0/2
        let p0 = p_series(m, &s, Some(l), 0).unwrap();
        assert_eq!(p0.coeff(&unit(m, 0, 0)), rat_int(1));
        assert_eq!(p0.coeff(&unit(m, 0, 1)), rat(-1, 2));

        // P_L^{S,C3} = Q(-c0-cL)^2: degree-1 part -(c0 + cL)
        let pl = p_series(m, &s, None, l).unwrap();
        assert_eq!(pl.coeff(&unit(m, 0, 1)), rat_int(-1));
        assert_eq!(pl.coeff(&unit(m, l, 1)), rat_int(-1));

        // P_{Vi}^{S,C3}: degree-1 part vanishes
        for v in m.real_members().filter(|&v| v != l) {
            let pv = p_series(m, &s, None, v).unwrap();
            assert_eq!(pv.coeff(&unit(m, 0, 0)), rat_int(1));
            for w in 0..m.member_count() {
                assert!(pv.coeff(&unit(m, w, 1)).is_zero(), "degree-1 part of P_V");
            }
        }
    }

    fn unit(m: &Model, var: usize, exp: u32) -> Vec<u32> {
        let mut e = vec![0u32; m.member_count()];
        e[var] = exp;
        e
    }

    #[test]
    fn t_series_three_lines_degree_one() {
        // T^S = 1 + (-3/2 c0 - cL) + higher order
        let a = analysis();
        let m = &a.model;
        let l = l_member(&a);
        let t = t_series(m, &m.nested_set(vec![l])).unwrap();
        assert_eq!(t.coeff(&unit(m, 0, 0)), rat_int(1));
        assert_eq!(t.coeff(&unit(m, 0, 1)), rat(-3, 2));
        assert_eq!(t.coeff(&unit(m, l, 1)), rat_int(-1));
        for v in m.real_members().filter(|&v| v != l) {
            assert!(t.coeff(&unit(m, v, 1)).is_zero());
        }
    }

    #[test]
    fn criterion_three_lines() {
        let a = analysis();
        let m = &a.model;
        let l = l_member(&a);
        let cands = a.candidates();

        // c = 1/3: exactly -5/2 c0 cL
        let poly = criterion_poly(m, &cands[0]).unwrap();
        let mut expect_exps = vec![0u32; m.member_count()];
        expect_exps[0] = 1;
        expect_exps[l] = 1;
        assert_eq!(poly.num_terms(), 1);
        assert_eq!(poly.coeff(&expect_exps), rat(-5, 2));

        // c = 2/3: -5/2 c0 cL - cL^2 by the literal criterion
        let poly = criterion_poly(m, &cands[1]).unwrap();
        let mut sq = vec![0u32; m.member_count()];
        sq[l] = 2;
        assert_eq!(poly.coeff(&expect_exps), rat(-5, 2));
        assert_eq!(poly.coeff(&sq), rat_int(-1));
        assert_eq!(poly.num_terms(), 2);

        // verdicts
        assert!(!a.is_jumping(&cands[0]).unwrap());
        assert!(a.is_jumping(&cands[1]).unwrap());
    }

    #[test]
    fn empty_support_criterion_is_zero() {
        let a = analysis();
        let cand = a.candidate_for(&rat(1, 2)); // 1/2 has empty support here
        assert!(cand.s_c.is_empty());
        let poly = criterion_poly(&a.model, &cand).unwrap();
        assert!(poly.is_zero());
        assert!(!a.is_jumping(&cand).unwrap());
    }

    #[test]
    fn inner_multiplicities_three_lines() {
        let a = analysis();
        assert_eq!(a.inner_multiplicity(&rat(2, 3)).unwrap(), BigInt::from(1));
        assert_eq!(a.inner_multiplicity(&rat_int(1)).unwrap(), BigInt::from(2));
        assert_eq!(a.inner_multiplicity(&rat(1, 3)).unwrap(), BigInt::from(0));
        // c d not an integer
        assert_eq!(a.inner_multiplicity(&rat(1, 2)).unwrap(), BigInt::from(0));
    }

    #[test]
    fn analyze_three_lines_report() {
        let report = analyze(&three_lines(), AnalyzeOptions::default()).unwrap();
        assert_eq!(report.jumping_numbers, vec![rat(2, 3)]);
        assert_eq!(
            report.inner_multiplicities,
            vec![
                (rat(1, 3), BigInt::from(0)),
                (rat(2, 3), BigInt::from(1)),
                (rat_int(1), BigInt::from(2)),
            ]
        );
        assert_eq!(report.candidates.len(), 3);
        assert!(report.candidates[2].trivially_one);
        assert!(report.oracle_all_agree.is_none());
    }

    #[test]
    fn single_hyperplane_with_multiplicity_jumps_at_fifths() {
        let input = parse_arrangement(
            r#"{ "affine_dim": 2, "hyperplanes": [ { "coeffs": [1, 0], "mult": 5 } ]}"#,
        )
        .unwrap();
        let report = analyze(&input, AnalyzeOptions::default()).unwrap();
        let expect: Vec<Rat> = (1..5).map(|k| rat(k, 5)).collect();
        assert_eq!(report.jumping_numbers, expect);
        // no dimension-1 flat: all inner multiplicities vanish
        for (_, n) in &report.inner_multiplicities {
            assert!(n.is_zero());
        }
    }

    #[test]
    fn two_transverse_lines_inner_multiplicity_at_one() {
        let input = parse_arrangement(
            r#"{ "affine_dim": 2, "hyperplanes": [
                { "coeffs": [1, 0], "mult": 1 },
                { "coeffs": [0, 1], "mult": 1 }
            ]}"#,
        )
        .unwrap();
        // full building set
        let report = analyze(&input, AnalyzeOptions::default()).unwrap();
        assert!(report.jumping_numbers.is_empty());
        assert_eq!(
            report.inner_multiplicities,
            vec![(rat(1, 2), BigInt::from(0)), (rat_int(1), BigInt::from(1))]
        );
        // minimal building set drops the crossing; Theorem-1.4 data falls
        // back to the full set and the answers are unchanged
        let report2 = analyze(
            &input,
            AnalyzeOptions {
                kind: BuildingKind::Minimal,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(report2.inner_building_set, BuildingKind::Full);
        assert_eq!(report.jumping_numbers, report2.jumping_numbers);
        assert_eq!(report.inner_multiplicities, report2.inner_multiplicities);
    }
}
