//! Equivariant flat families from torus actions, their central fibres and
//! component splits.
//!
//! A family is stored as a t-saturated, weight-homogeneous ideal in the ring
//! `Q[x_1..x_n, t]`. Building one from a fiber ideal substitutes
//! `x_i ↦ t^{-w_i}·x_i`, clears the parameter from each generator and
//! saturates by `t`, so that the `t = 1` slice recovers the input and the
//! `t = 0` slice is the flat limit.

use std::sync::Arc;

use num::{One, Zero};

use crate::budget::Budget;
use crate::chow::{affine_dimension_degree, projective_dimension_degree};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{rat, Polynomial, Rational};
use crate::ring::{Monomial, PolyRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Affine,
    Projective,
}

/// Integer weights of the torus action on the ambient coordinate functions,
/// with the parameter always weighing +1, plus the normalization making the
/// degree-one section weights run from 0 down to -M.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAction {
    /// Raw weight of each non-parameter coordinate.
    pub weights: Vec<i64>,
    /// Shift applied per unit of x-degree so that the maximal normalized
    /// degree-one section weight is exactly 0.
    pub offset: i64,
    /// Span of the normalized degree-one section weights.
    pub span: i64,
}

impl WeightAction {
    fn new(weights: Vec<i64>, mode: Mode) -> WeightAction {
        let max_w = weights.iter().copied().max().unwrap_or(0);
        let min_w = weights.iter().copied().min().unwrap_or(0);
        let (offset, span) = match mode {
            // degree-one sections are the coordinates
            Mode::Projective => (-max_w, max_w - min_w),
            // degree-one sections include the constants (weight 0)
            Mode::Affine => {
                let offset = -max_w.max(0);
                let lowest = (min_w + offset).min(0);
                (offset, -lowest)
            }
        };
        WeightAction { weights, offset, span }
    }

    /// Raw weights for each variable of the given ring, parameter = +1.
    /// Variables unknown to the action (auxiliaries) weigh 0.
    pub fn ring_weights(&self, ring: &PolyRing, fiber_ring: &PolyRing) -> Vec<i64> {
        ring.vars()
            .iter()
            .enumerate()
            .map(|(i, name)| {
                if Some(i) == ring.param() {
                    1
                } else {
                    fiber_ring
                        .var_index(name)
                        .map(|j| self.weights[j])
                        .unwrap_or(0)
                }
            })
            .collect()
    }
}

/// A flat family over the parameter line, invariant under the torus action.
#[derive(Debug, Clone)]
pub struct EquivariantFamily {
    /// Ambient ring `Q[x.., t]`.
    pub ring: Arc<PolyRing>,
    /// The ring of the fibers, `Q[x..]`.
    pub fiber_ring: Arc<PolyRing>,
    pub mode: Mode,
    /// t-saturated, weight-homogeneous ideal of the total space.
    pub ideal: Ideal,
    /// Ideal of the fiber at t = 1 in the fiber ring.
    pub fiber_ideal: Ideal,
    pub action: WeightAction,
    /// Filtration unit: sections of the k-th power live in filtration degree
    /// `k·degree_unit` of the ambient ring's degree weights.
    pub degree_unit: u32,
    pub budget: Budget,
}

impl EquivariantFamily {
    /// Build the family from the fiber ideal and the action weights.
    pub fn build(
        fiber_ideal: &Ideal,
        weights: &[i64],
        mode: Mode,
        budget: &Budget,
    ) -> Result<EquivariantFamily> {
        let fiber_ring = fiber_ideal.ring().clone();
        if fiber_ring.param().is_some() {
            return Err(Error::invalid(
                "fiber ideal must live in a ring without the parameter",
            ));
        }
        if weights.len() != fiber_ring.arity() {
            return Err(Error::WeightArityMismatch {
                expected: fiber_ring.arity(),
                got: weights.len(),
            });
        }
        if mode == Mode::Projective {
            for g in fiber_ideal.gens() {
                if !g.is_x_homogeneous() {
                    return Err(Error::NonHomogeneous("projective family generators"));
                }
            }
        }
        let ring = PolyRing::with_param(fiber_ring.vars().to_vec())?;
        let t = ring.param().unwrap();

        // orbit substitution x_i ↦ t^{-w_i} x_i, then clear the parameter
        let mut gens = Vec::new();
        for g in fiber_ideal.gens() {
            let mut shifts: Vec<i64> = Vec::new();
            let mut terms: Vec<(Monomial, Rational)> = Vec::new();
            for (m, c) in g.terms() {
                let shift: i64 = m
                    .exps()
                    .iter()
                    .zip(weights)
                    .map(|(&e, &w)| -(e as i64) * w)
                    .sum();
                shifts.push(shift);
                let mut exps = m.exps().to_vec();
                exps.push(0); // parameter slot
                terms.push((Monomial::new(exps), c.clone()));
            }
            let min_shift = shifts.iter().copied().min().unwrap_or(0);
            let mut poly = Polynomial::zero(&ring);
            for ((m, c), shift) in terms.into_iter().zip(shifts) {
                let mut exps = m.exps().to_vec();
                exps[t] = (shift - min_shift) as u32;
                poly.add_term(Monomial::new(exps), c);
            }
            gens.push(poly);
        }
        let raw = Ideal::new(&ring, gens);
        let tvar = Polynomial::var(&ring, t);
        let ideal = raw.saturate_poly(&tvar, budget)?;

        let fam = EquivariantFamily {
            ring,
            fiber_ring,
            mode,
            ideal,
            fiber_ideal: fiber_ideal.clone(),
            action: WeightAction::new(weights.to_vec(), mode),
            degree_unit: 1,
            budget: budget.clone(),
        };
        fam.validate()?;
        Ok(fam)
    }

    /// Wrap an already-built total-space ideal (fixture files can supply the
    /// family directly). Saturates by t and slices at t = 1 for the fiber.
    pub fn from_total_space(
        ideal: &Ideal,
        weights: &[i64],
        mode: Mode,
        budget: &Budget,
    ) -> Result<EquivariantFamily> {
        let ring = ideal.ring().clone();
        let t = ring
            .param()
            .ok_or(Error::MissingParameter("family construction"))?;
        let fiber_ring = ring.without(&[t])?;
        if weights.len() != fiber_ring.arity() {
            return Err(Error::WeightArityMismatch {
                expected: fiber_ring.arity(),
                got: weights.len(),
            });
        }
        let tvar = Polynomial::var(&ring, t);
        let sat = ideal.saturate_poly(&tvar, budget)?;
        let one = Rational::one();
        let fiber_gens = sat
            .gens()
            .iter()
            .map(|g| g.substitute_value(t, &one).transfer(&fiber_ring))
            .collect::<Result<Vec<_>>>()?;
        let fam = EquivariantFamily {
            ring,
            fiber_ring: fiber_ring.clone(),
            mode,
            ideal: sat,
            fiber_ideal: Ideal::new(&fiber_ring, fiber_gens),
            action: WeightAction::new(weights.to_vec(), mode),
            degree_unit: 1,
            budget: budget.clone(),
        };
        fam.validate()?;
        Ok(fam)
    }

    /// Assemble a transformed family from parts; invariants are the caller's
    /// responsibility except for weight homogeneity, which is re-checked.
    pub(crate) fn from_parts(
        ring: Arc<PolyRing>,
        mode: Mode,
        ideal: Ideal,
        raw_var_weights: Vec<i64>,
        degree_unit: u32,
        budget: Budget,
    ) -> Result<EquivariantFamily> {
        let t = ring
            .param()
            .ok_or(Error::MissingParameter("family construction"))?;
        let fiber_ring = ring.without(&[t])?;
        let one = Rational::one();
        let fiber_gens = ideal
            .gens()
            .iter()
            .map(|g| g.substitute_value(t, &one).transfer(&fiber_ring))
            .collect::<Result<Vec<_>>>()?;
        let fam = EquivariantFamily {
            ring: ring.clone(),
            fiber_ring: fiber_ring.clone(),
            mode,
            ideal,
            fiber_ideal: Ideal::new(&fiber_ring, fiber_gens),
            action: WeightAction::new(raw_var_weights, mode),
            degree_unit,
            budget,
        };
        fam.validate()?;
        Ok(fam)
    }

    fn validate(&self) -> Result<()> {
        let w = self.ring_weights();
        for g in self.ideal.gens() {
            if !g.is_weight_homogeneous(&w) {
                return Err(Error::invalid(format!(
                    "family generator `{g}` is not weight-homogeneous"
                )));
            }
            if self.mode == Mode::Projective && !g.is_x_homogeneous() {
                return Err(Error::NonHomogeneous("projective family generators"));
            }
        }
        Ok(())
    }

    /// Raw weights per ring variable (parameter = +1).
    pub fn ring_weights(&self) -> Vec<i64> {
        self.action.ring_weights(&self.ring, &self.fiber_ring)
    }

    /// Raw weights of the fiber-ring variables.
    pub fn fiber_weights(&self) -> Vec<i64> {
        self.action.weights.clone()
    }

    /// Normalized weight of a section given its raw weight and x-degree.
    pub fn normalize_weight(&self, raw: i64, x_degree: u64) -> i64 {
        raw + self.action.offset * x_degree as i64
    }

    pub fn param_index(&self) -> usize {
        self.ring.param().expect("family ring has a parameter")
    }

    pub fn param_poly(&self) -> Polynomial {
        Polynomial::var(&self.ring, self.param_index())
    }

    /// Ideal of the central fibre, in the fiber ring.
    pub fn central_fiber(&self) -> Result<Ideal> {
        self.ideal
            .substitute_zero(self.param_index())?
            .transfer(&self.fiber_ring)
    }

    /// Ideal of the fibre at parameter value `c`, in the fiber ring.
    pub fn fiber_at(&self, c: &Rational) -> Result<Ideal> {
        let t = self.param_index();
        let gens = self
            .ideal
            .gens()
            .iter()
            .map(|g| g.substitute_value(t, c).transfer(&self.fiber_ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.fiber_ring, gens))
    }

    /// Dimension of the generic fiber.
    pub fn fiber_dimension(&self) -> Result<usize> {
        let dim = match self.mode {
            Mode::Affine => affine_dimension_degree(&self.fiber_ideal, &self.budget)?,
            Mode::Projective => projective_dimension_degree(&self.fiber_ideal, &self.budget)?,
        };
        dim.map(|(d, _)| d)
            .ok_or_else(|| Error::invalid("fiber is empty"))
    }

    /// Generator-wise check that the rescaling `x_i ↦ c^{w_i} x_i, t ↦ c·t`
    /// maps the family ideal into itself.
    pub fn equivariance_check(&self, c: &Rational) -> Result<bool> {
        if c.is_zero() {
            return Err(Error::invalid("equivariance check needs c ≠ 0"));
        }
        let w = self.ring_weights();
        let scales: Vec<Rational> = w
            .iter()
            .map(|&wi| {
                let mut q = Rational::one();
                if wi >= 0 {
                    for _ in 0..wi {
                        q *= c;
                    }
                } else {
                    for _ in 0..(-wi) {
                        q /= c;
                    }
                }
                q
            })
            .collect();
        for g in self.ideal.gens() {
            let image = g.scale_vars(&scales);
            if !self.ideal.contains(&image, &self.budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Flatness proxy (projective mode): the Hilbert function of the central
    /// fibre equals that of the t = 1 fibre for all k ≤ k_max.
    pub fn flatness_proxy(&self, k_max: u32) -> Result<bool> {
        if self.mode != Mode::Projective {
            return Err(Error::AffineModeUnsupported("flatness proxy"));
        }
        let w = self.central_fiber()?;
        let f1 = self.fiber_at(&Rational::one())?;
        for k in 1..=k_max {
            let a = w.hilbert_function(k, &crate::order::TermOrder::GrevLex, &self.budget)?;
            let b = f1.hilbert_function(k, &crate::order::TermOrder::GrevLex, &self.budget)?;
            if a != b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The central fibre split into the preferred component B, the residual R
/// computed as a saturation, and their intersection D — all in the fiber
/// ring, with the family-ring lift of B alongside.
#[derive(Debug, Clone)]
pub struct ComponentSplit {
    pub i_w: Ideal,
    pub i_b: Ideal,
    pub i_r: Ideal,
    pub i_d: Ideal,
    /// `I_B + (t)` in the family ring.
    pub i_b_fam: Ideal,
    /// (dimension, degree) of B, R, D; `None` for an empty locus.
    pub b_dim_degree: Option<(usize, Rational)>,
    pub r_dim_degree: Option<(usize, Rational)>,
    pub d_dim_degree: Option<(usize, Rational)>,
    /// degree(D) / degree(R), the pole-order bound per unit of section
    /// degree; absent when R or D is empty.
    pub pole_bound: Option<Rational>,
}

/// Split the central fibre along a user-chosen component B.
pub fn split_components(fam: &EquivariantFamily, i_b: &Ideal) -> Result<ComponentSplit> {
    let budget = &fam.budget;
    let i_w = fam.central_fiber()?;
    fam.fiber_ring.expect_same(i_b.ring())?;

    if !i_b.contains_ideal(&i_w, budget)? {
        return Err(Error::BNotComponent(
            "the central fibre ideal is not contained in I_B".into(),
        ));
    }
    let i_r = i_w.saturate_ideal(i_b, budget)?;
    let check = i_b.intersection(&i_r, budget)?;
    if !check.equals(&i_w, budget)? {
        return Err(Error::SplitNotExact(
            "possible non-reduced or embedded structure".into(),
        ));
    }
    if i_b.contains_ideal(&i_r, budget)? && !i_r.is_unit_ideal(budget)? {
        return Err(Error::BNotComponent("B is contained in the residual R".into()));
    }
    let i_d = i_b.plus(&i_r);

    let dim_degree = |i: &Ideal| -> Result<Option<(usize, Rational)>> {
        match fam.mode {
            Mode::Affine => affine_dimension_degree(i, budget),
            Mode::Projective => projective_dimension_degree(i, budget),
        }
    };
    let b_dd = dim_degree(i_b)?;
    let r_dd = dim_degree(&i_r)?;
    let d_dd = dim_degree(&i_d)?;
    let pole_bound = match (&r_dd, &d_dd) {
        (Some((_, rdeg)), Some((_, ddeg))) if !rdeg.is_zero() => Some(ddeg / rdeg),
        _ => None,
    };

    let t = fam.param_poly();
    let i_b_fam = i_b.transfer(&fam.ring)?.plus_polys(&[t]);

    Ok(ComponentSplit {
        i_w,
        i_b: i_b.clone(),
        i_r,
        i_d,
        i_b_fam,
        b_dim_degree: b_dd,
        r_dim_degree: r_dd,
        d_dim_degree: d_dd,
        pole_bound,
    })
}

impl ComponentSplit {
    /// `I_B^k + ℐ` in the family ring: the order-k thickening used for
    /// vanishing orders along B.
    pub fn order_ideal(&self, fam: &EquivariantFamily, k: u32) -> Ideal {
        if k == 0 {
            return Ideal::unit(&fam.ring);
        }
        self.i_b_fam.power(k).plus(&fam.ideal)
    }
}

/// Largest k with `f ∈ I_B^k + ℐ`. Errors when f lies in the family ideal
/// (the order would be infinite). The search is capped by the pole bound
/// when available, otherwise by the budget.
pub fn vanishing_order(
    f: &Polynomial,
    split: &ComponentSplit,
    fam: &EquivariantFamily,
) -> Result<u32> {
    fam.ring.expect_same(f.ring())?;
    let budget = &fam.budget;
    if fam.ideal.contains(f, budget)? {
        return Err(Error::OrderUndefined);
    }
    let cap = order_search_cap(split, fam, f.x_degree().unwrap_or(0));
    let mut order = 0u32;
    for k in 1..=cap {
        if split.order_ideal(fam, k).contains(f, budget)? {
            order = k;
        } else {
            return Ok(order);
        }
    }
    Err(Error::BudgetExceeded {
        stage: "vanishing order search",
        detail: format!("order exceeds cap {cap}"),
    })
}

pub(crate) fn order_search_cap(
    split: &ComponentSplit,
    fam: &EquivariantFamily,
    degree: u32,
) -> u32 {
    match &split.pole_bound {
        Some(c) => {
            let bound = c * rat(degree as i64);
            let ceil = bound.ceil().to_integer();
            let ceil: u32 = ceil.try_into().unwrap_or(fam.budget.max_order);
            (ceil + 1).min(fam.budget.max_order)
        }
        None => fam.budget.max_order,
    }
}

/// One row of the power-condition check.
#[derive(Debug, Clone)]
pub struct PowerConditionRow {
    pub k: u32,
    pub pass: bool,
    /// A witness element of the saturation that is missing from
    /// `I_B^k + ℐ`, when the check fails.
    pub witness: Option<String>,
    pub trials: u32,
}

/// Probabilistic check that ordinary powers of I_B agree with the order
/// filtration: for each k ≤ k_max the ideal `I_B^k + ℐ` must be saturated
/// with respect to random linear forms outside I_B, and with respect to the
/// intersection locus D when present. A failure is a certificate that the
/// ordinary and symbolic powers differ at level k; passes are supporting
/// evidence only.
pub fn check_power_condition(
    split: &ComponentSplit,
    fam: &EquivariantFamily,
    k_max: u32,
    trials: u32,
    seed: u64,
) -> Result<Vec<PowerConditionRow>> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let budget = &fam.budget;
    let xs = fam.ring.x_indices();
    let mut rows = Vec::new();
    for k in 1..=k_max {
        let jk = split.order_ideal(fam, k);
        let mut pass = true;
        let mut witness = None;

        fn check_saturant(
            jk: &Ideal,
            budget: &Budget,
            sat: &Ideal,
            label: &str,
            pass: &mut bool,
            witness: &mut Option<String>,
        ) -> Result<()> {
            if *pass {
                for g in sat.gens() {
                    if !jk.contains(g, budget)? {
                        *pass = false;
                        *witness = Some(format!("{label}: {g}"));
                        break;
                    }
                }
            }
            Ok(())
        }

        for _ in 0..trials {
            // random linear form outside I_B
            let mut h = Polynomial::zero(&fam.ring);
            for _ in 0..8 {
                h = Polynomial::zero(&fam.ring);
                for &i in &xs {
                    let c: i64 = rng.gen_range(-3..=3);
                    if c != 0 {
                        h = &h + &Polynomial::var(&fam.ring, i).scale(&rat(c));
                    }
                }
                if !h.is_zero() && !split.i_b_fam.contains(&h, budget)? {
                    break;
                }
            }
            if h.is_zero() || split.i_b_fam.contains(&h, budget)? {
                continue;
            }
            let sat = jk.saturate_poly(&h, budget)?;
            check_saturant(&jk, budget, &sat, "linear form", &mut pass, &mut witness)?;
            if !pass {
                break;
            }
        }

        // deeper probe: saturate by the ideal of D = B ∩ R, where symbolic
        // and ordinary powers actually diverge when they do
        if pass && !split.i_d.is_unit_ideal(budget)? && !split.i_d.is_zero_ideal() {
            let t = fam.param_poly();
            let i_d_fam = split.i_d.transfer(&fam.ring)?.plus_polys(&[t]);
            let sat = jk.saturate_ideal(&i_d_fam, budget)?;
            check_saturant(&jk, budget, &sat, "intersection locus", &mut pass, &mut witness)?;
        }

        rows.push(PowerConditionRow { k, pass, witness, trials });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn budget() -> Budget {
        Budget::default()
    }

    pub(crate) fn quadric_cone() -> EquivariantFamily {
        let r = PolyRing::new(vec!["x", "y", "z"]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x*y - z").unwrap()]);
        EquivariantFamily::build(&i, &[-1, -1, -3], Mode::Affine, &budget()).unwrap()
    }

    pub(crate) fn cuspidal() -> EquivariantFamily {
        let r = PolyRing::new(vec!["x", "y", "z"]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "y*(x^3 - y^2) - z").unwrap()]);
        EquivariantFamily::build(&i, &[-2, -3, -10], Mode::Affine, &budget()).unwrap()
    }

    #[test]
    fn quadric_cone_family() {
        let fam = quadric_cone();
        let expect = Ideal::new(&fam.ring, vec![parse_poly(&fam.ring, "x*y - t*z").unwrap()]);
        assert!(fam.ideal.equals(&expect, &budget()).unwrap());
        let w = fam.central_fiber().unwrap();
        let expect_w = Ideal::new(
            &fam.fiber_ring,
            vec![parse_poly(&fam.fiber_ring, "x*y").unwrap()],
        );
        assert!(w.equals(&expect_w, &budget()).unwrap());
        assert_eq!(fam.action.offset, 0);
        assert_eq!(fam.action.span, 3);
    }

    #[test]
    fn cuspidal_family() {
        let fam = cuspidal();
        let expect = Ideal::new(
            &fam.ring,
            vec![parse_poly(&fam.ring, "y*(x^3 - y^2) - t*z").unwrap()],
        );
        assert!(fam.ideal.equals(&expect, &budget()).unwrap());
        let w = fam.central_fiber().unwrap();
        let expect_w = Ideal::new(
            &fam.fiber_ring,
            vec![parse_poly(&fam.fiber_ring, "y*(x^3 - y^2)").unwrap()],
        );
        assert!(w.equals(&expect_w, &budget()).unwrap());
    }

    #[test]
    fn trivial_action_gives_product_family() {
        let r = PolyRing::new(vec!["x", "y", "z"]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x*y - z").unwrap()]);
        let fam = EquivariantFamily::build(&i, &[0, 0, 0], Mode::Affine, &budget()).unwrap();
        let expect = Ideal::new(&fam.ring, vec![parse_poly(&fam.ring, "x*y - z").unwrap()]);
        assert!(fam.ideal.equals(&expect, &budget()).unwrap());
        let w = fam.central_fiber().unwrap();
        assert!(w.equals(&fam.fiber_ideal, &budget()).unwrap());
    }

    #[test]
    fn equivariance_and_t1_slice() {
        let fam = cuspidal();
        assert!(fam.equivariance_check(&rat(2)).unwrap());
        assert!(fam.equivariance_check(&(rat(1) / rat(3))).unwrap());
        let f1 = fam.fiber_at(&Rational::one()).unwrap();
        assert!(f1.equals(&fam.fiber_ideal, &budget()).unwrap());
    }

    #[test]
    fn quadric_split() {
        let fam = quadric_cone();
        let i_b = Ideal::new(
            &fam.fiber_ring,
            vec![parse_poly(&fam.fiber_ring, "y").unwrap()],
        );
        let split = split_components(&fam, &i_b).unwrap();
        let expect_r = Ideal::new(
            &fam.fiber_ring,
            vec![parse_poly(&fam.fiber_ring, "x").unwrap()],
        );
        assert!(split.i_r.equals(&expect_r, &budget()).unwrap());
        assert_eq!(split.b_dim_degree, Some((2, rat(1))));
        assert_eq!(split.r_dim_degree, Some((2, rat(1))));
        assert_eq!(split.d_dim_degree, Some((1, rat(1))));
        assert_eq!(split.pole_bound, Some(rat(1)));
    }

    #[test]
    fn cuspidal_split() {
        let fam = cuspidal();
        let i_b = Ideal::new(
            &fam.fiber_ring,
            vec![parse_poly(&fam.fiber_ring, "x^3 - y^2").unwrap()],
        );
        let split = split_components(&fam, &i_b).unwrap();
        let expect_r = Ideal::new(
            &fam.fiber_ring,
            vec![parse_poly(&fam.fiber_ring, "y").unwrap()],
        );
        assert!(split.i_r.equals(&expect_r, &budget()).unwrap());
        // D = (x^3 - y^2, y) = (x^3, y): the triple line along the z-axis
        assert_eq!(split.d_dim_degree, Some((1, rat(3))));
        assert_eq!(split.pole_bound, Some(rat(3)));
    }

    #[test]
    fn split_rejects_non_component() {
        let fam = quadric_cone();
        let i_b = Ideal::new(
            &fam.fiber_ring,
            vec![parse_poly(&fam.fiber_ring, "z").unwrap()],
        );
        assert!(matches!(
            split_components(&fam, &i_b),
            Err(Error::BNotComponent(_))
        ));
    }

    #[test]
    fn irreducible_central_fiber_has_unit_residual() {
        let r = PolyRing::new(vec!["x", "y", "z"]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x*y - z").unwrap()]);
        let fam = EquivariantFamily::build(&i, &[0, 0, 0], Mode::Affine, &budget()).unwrap();
        let i_b = fam.central_fiber().unwrap();
        let split = split_components(&fam, &i_b).unwrap();
        assert!(split.i_r.is_unit_ideal(&budget()).unwrap());
        assert!(split.pole_bound.is_none());
    }

    #[test]
    fn vanishing_orders_cuspidal() {
        let fam = cuspidal();
        let i_b = Ideal::new(
            &fam.fiber_ring,
            vec![parse_poly(&fam.fiber_ring, "x^3 - y^2").unwrap()],
        );
        let split = split_components(&fam, &i_b).unwrap();
        let f = parse_poly(&fam.ring, "x^3 - y^2").unwrap();
        assert_eq!(vanishing_order(&f, &split, &fam).unwrap(), 1);
        let one = Polynomial::one(&fam.ring);
        assert_eq!(vanishing_order(&one, &split, &fam).unwrap(), 0);
        let f2 = parse_poly(&fam.ring, "(x^3 - y^2)^2").unwrap();
        assert_eq!(vanishing_order(&f2, &split, &fam).unwrap(), 2);
        // elements of the family ideal have no defined order
        let g = parse_poly(&fam.ring, "y*(x^3 - y^2) - t*z").unwrap();
        assert!(matches!(
            vanishing_order(&g, &split, &fam),
            Err(Error::OrderUndefined)
        ));
    }

    #[test]
    fn quadric_vanishing_orders() {
        let fam = quadric_cone();
        let i_b = Ideal::new(
            &fam.fiber_ring,
            vec![parse_poly(&fam.fiber_ring, "y").unwrap()],
        );
        let split = split_components(&fam, &i_b).unwrap();
        let y = parse_poly(&fam.ring, "y").unwrap();
        assert_eq!(vanishing_order(&y, &split, &fam).unwrap(), 1);
        let x = parse_poly(&fam.ring, "x").unwrap();
        assert_eq!(vanishing_order(&x, &split, &fam).unwrap(), 0);
        let y2 = parse_poly(&fam.ring, "y^2").unwrap();
        assert_eq!(vanishing_order(&y2, &split, &fam).unwrap(), 2);
    }

    #[test]
    fn power_condition_passes_on_fixtures() {
        for fam in [quadric_cone(), cuspidal()] {
            let b_gen = match fam.fiber_ring.arity() {
                3 if fam.fiber_ideal.gens()[0].to_string().contains("x^3") => "x^3 - y^2",
                _ => "y",
            };
            let i_b = Ideal::new(
                &fam.fiber_ring,
                vec![parse_poly(&fam.fiber_ring, b_gen).unwrap()],
            );
            let split = split_components(&fam, &i_b).unwrap();
            let rows = check_power_condition(&split, &fam, 3, 3, 42).unwrap();
            assert_eq!(rows.len(), 3);
            for row in rows {
                assert!(row.pass, "power condition failed at k = {}", row.k);
            }
        }
    }

    #[test]
    fn power_condition_cartier_case() {
        // trivial action, B = W irreducible: I_B is generated by t modulo
        // the family, so the powers are honest complete intersections
        let r = PolyRing::new(vec!["x", "y", "z"]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x*y - z").unwrap()]);
        let fam = EquivariantFamily::build(&i, &[0, 0, 0], Mode::Affine, &budget()).unwrap();
        let i_b = fam.central_fiber().unwrap();
        let split = split_components(&fam, &i_b).unwrap();
        let rows = check_power_condition(&split, &fam, 3, 2, 7).unwrap();
        for row in rows {
            assert!(row.pass, "failed at k = {}: {:?}", row.k, row.witness);
        }
    }
}
