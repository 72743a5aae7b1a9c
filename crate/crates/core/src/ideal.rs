//! Ideals with cached Gröbner bases and the standard ideal calculus.
//!
//! Everything downstream (families, transforms, traces) is phrased in terms
//! of the operations here: normal forms, elimination, saturation, colon,
//! intersection, powers, radical membership and standard monomials.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num::One;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::groebner::{normal_form, reduced_groebner_basis, try_div_exact};
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::ring::{monomials_of_degree, monomials_up_to_degree, Monomial, PolyRing};

/// An ideal given by generators, with a thread-safe memo of reduced Gröbner
/// bases keyed by term order. Clones share the cache.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    cache: Arc<RwLock<HashMap<TermOrder, Arc<Vec<Polynomial>>>>>,
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring: ring.clone(),
            gens,
            cache: Arc::new(RwLock::new(HashMap::new())),
        }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Gröbner basis for the order, memoized.
    pub fn groebner_basis(
        &self,
        ord: &TermOrder,
        budget: &Budget,
    ) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(gb) = self.cache.read().unwrap().get(ord) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(reduced_groebner_basis(&self.gens, ord, budget)?);
        let mut cache = self.cache.write().unwrap();
        // concurrent fills agree because the reduced basis is unique
        let entry = cache.entry(ord.clone()).or_insert_with(|| gb.clone());
        debug_assert_eq!(entry.as_ref(), gb.as_ref());
        Ok(entry.clone())
    }

    pub fn normal_form(
        &self,
        f: &Polynomial,
        ord: &TermOrder,
        budget: &Budget,
    ) -> Result<Polynomial> {
        self.ring.expect_same(f.ring())?;
        let gb = self.groebner_basis(ord, budget)?;
        if gb.is_empty() {
            return Ok(f.clone());
        }
        normal_form(f, &gb, ord, budget)
    }

    pub fn contains(&self, f: &Polynomial, budget: &Budget) -> Result<bool> {
        Ok(self.normal_form(f, &TermOrder::GrevLex, budget)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        let a = self.groebner_basis(&TermOrder::GrevLex, budget)?;
        let b = other.groebner_basis(&TermOrder::GrevLex, budget)?;
        Ok(a.as_ref() == b.as_ref())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit_ideal(&self, budget: &Budget) -> Result<bool> {
        let gb = self.groebner_basis(&TermOrder::GrevLex, budget)?;
        Ok(gb.len() == 1 && gb[0].total_degree() == Some(0))
    }

    /// Canonical generator list: the reduced grevlex basis unless the ring
    /// asks for another print order.
    pub fn canonical_gens(&self, budget: &Budget) -> Result<Vec<Polynomial>> {
        let ord = self.ring.print_order().clone();
        Ok(self.groebner_basis(&ord, budget)?.as_ref().clone())
    }

    pub fn plus(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn plus_polys(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Ideal generated by all k-fold products of the generators. `k = 0`
    /// yields the unit ideal.
    pub fn power(&self, k: u32) -> Ideal {
        if k == 0 {
            return Ideal::unit(&self.ring);
        }
        let mut products: Vec<Polynomial> = vec![Polynomial::one(&self.ring)];
        for _ in 0..k {
            let mut next = Vec::new();
            for p in &products {
                for g in &self.gens {
                    next.push(p * g);
                }
            }
            // dedupe structurally to keep generator lists small
            next.sort_by(|a, b| format!("{a}").cmp(&format!("{b}")));
            next.dedup();
            products = next;
        }
        Ideal::new(&self.ring, products)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Move to a ring containing the same variables (by name).
    pub fn transfer(&self, target: &Arc<PolyRing>) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.transfer(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(target, gens))
    }

    /// Eliminate the given variables: `I ∩ Q[remaining]`, returned in the
    /// smaller ring.
    pub fn eliminate(&self, vars: &[usize], budget: &Budget) -> Result<Ideal> {
        if vars.is_empty() {
            return Ok(self.clone());
        }
        for &v in vars {
            if v >= self.ring.arity() {
                return Err(Error::invalid("eliminated variable out of range"));
            }
        }
        let ord = TermOrder::eliminating(vars, self.ring.arity());
        let gb = self.groebner_basis(&ord, budget)?;
        let small = self.ring.without(vars)?;
        let kept: Vec<Polynomial> = gb
            .iter()
            .filter(|g| {
                g.terms().all(|(m, _)| vars.iter().all(|&v| m.exp(v) == 0))
            })
            .map(|g| g.transfer(&small))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&small, kept))
    }

    /// Like `eliminate`, but keeps the original ring for the survivors.
    pub fn eliminate_keep_ring(&self, vars: &[usize], budget: &Budget) -> Result<Ideal> {
        let small = self.eliminate(vars, budget)?;
        small.transfer(&self.ring)
    }

    fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        let mut k = 0;
        while self.ring.var_index(&name).is_some() {
            k += 1;
            name = format!("{base}{k}");
        }
        name
    }

    /// Saturation `(I : g^∞)` via the auxiliary-variable method: adjoin `z`,
    /// add `1 - z·g`, eliminate `z`.
    pub fn saturate_poly(&self, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
        self.ring.expect_same(g.ring())?;
        if g.is_zero() {
            return Err(Error::ZeroSaturant);
        }
        let zname = self.fresh_name("zsat");
        let big = self.ring.extended(&[zname.clone()], 0)?;
        let z = Polynomial::var(&big, big.var_index(&zname).unwrap());
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|p| p.transfer(&big))
            .collect::<Result<_>>()?;
        let gt = g.transfer(&big)?;
        gens.push(&Polynomial::one(&big) - &(&z * &gt));
        let extended = Ideal::new(&big, gens);
        let zi = big.var_index(&zname).unwrap();
        let eliminated = extended.eliminate(&[zi], budget)?;
        eliminated.transfer(&self.ring)
    }

    /// Colon `(I : g)` via `(I ∩ (g)) / g`.
    pub fn colon_poly(&self, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
        self.ring.expect_same(g.ring())?;
        if g.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let inter = self.intersection(&Ideal::new(&self.ring, vec![g.clone()]), budget)?;
        let mut gens = Vec::new();
        for h in inter.gens() {
            match try_div_exact(h, g, &TermOrder::GrevLex) {
                Some(q) => gens.push(q),
                None => {
                    return Err(Error::invalid(
                        "internal: intersection generator not divisible in colon",
                    ))
                }
            }
        }
        Ok(Ideal::new(&self.ring, gens))
    }

    /// Colon by an ideal: `(I : J) = ⋂_g (I : g)` over generators of `J`.
    pub fn colon_ideal(&self, other: &Ideal, budget: &Budget) -> Result<Ideal> {
        if other.gens.is_empty() {
            // (I : 0) is the whole ring
            return Ok(Ideal::unit(&self.ring));
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let c = self.colon_poly(g, budget)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersection(&c, budget)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Saturation by an ideal: iterate the colon until it stabilizes.
    pub fn saturate_ideal(&self, other: &Ideal, budget: &Budget) -> Result<Ideal> {
        let mut current = self.clone();
        for _ in 0..budget.max_order {
            let next = current.colon_ideal(other, budget)?;
            if next.equals(&current, budget)? {
                return Ok(current);
            }
            current = next;
        }
        Err(Error::BudgetExceeded {
            stage: "ideal saturation",
            detail: "colon chain did not stabilize".into(),
        })
    }

    /// Intersection via one auxiliary variable: `(u·I + (1-u)·J) ∩ R`.
    pub fn intersection(&self, other: &Ideal, budget: &Budget) -> Result<Ideal> {
        self.ring.expect_same(&other.ring)?;
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        let uname = self.fresh_name("uint");
        let big = self.ring.extended(&[uname.clone()], 0)?;
        let ui = big.var_index(&uname).unwrap();
        let u = Polynomial::var(&big, ui);
        let one_minus_u = &Polynomial::one(&big) - &u;
        let mut gens = Vec::new();
        for p in &self.gens {
            gens.push(&u * &p.transfer(&big)?);
        }
        for q in &other.gens {
            gens.push(&one_minus_u * &q.transfer(&big)?);
        }
        let extended = Ideal::new(&big, gens);
        let eliminated = extended.eliminate(&[ui], budget)?;
        eliminated.transfer(&self.ring)
    }

    /// Radical membership by the Rabinowitsch trick: `f ∈ √I` iff
    /// `1 ∈ I + (1 - z·f)` in the extended ring.
    pub fn radical_contains(&self, f: &Polynomial, budget: &Budget) -> Result<bool> {
        self.ring.expect_same(f.ring())?;
        if f.is_zero() {
            return self.contains(f, budget);
        }
        let zname = self.fresh_name("zrad");
        let big = self.ring.extended(&[zname.clone()], 0)?;
        let z = Polynomial::var(&big, big.var_index(&zname).unwrap());
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|p| p.transfer(&big))
            .collect::<Result<_>>()?;
        gens.push(&Polynomial::one(&big) - &(&z * &f.transfer(&big)?));
        Ideal::new(&big, gens).is_unit_ideal(budget)
    }

    /// Substitute zero for a variable: the image ideal in the smaller ring.
    /// (The quotient map is surjective, so images of generators generate.)
    pub fn substitute_zero(&self, var: usize) -> Result<Ideal> {
        let small = self.ring.without(&[var])?;
        let mut gens = Vec::new();
        for g in &self.gens {
            let sub = g.substitute_value(var, &num::Zero::zero());
            gens.push(sub.transfer(&small)?);
        }
        Ok(Ideal::new(&small, gens))
    }

    /// All generators homogeneous in total degree.
    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| {
            let mut degs = g.terms().map(|(m, _)| m.degree());
            match degs.next() {
                None => true,
                Some(d) => degs.all(|e| e == d),
            }
        })
    }

    /// Degree-`k` monomials outside the leading-term ideal. Requires a
    /// homogeneous ideal so the count is the Hilbert function of the
    /// quotient at `k`.
    pub fn standard_monomials(
        &self,
        k: u32,
        ord: &TermOrder,
        budget: &Budget,
    ) -> Result<Vec<Monomial>> {
        if !self.is_homogeneous() {
            return Err(Error::NonHomogeneous("standard_monomials"));
        }
        let gb = self.groebner_basis(ord, budget)?;
        let leads: Vec<Monomial> = gb
            .iter()
            .map(|g| g.leading_monomial(ord).unwrap().clone())
            .collect();
        Ok(monomials_of_degree(self.ring.arity(), k)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect())
    }

    /// Standard monomials of degree ≤ k under a degree-compatible order;
    /// their count is the affine Hilbert function of the quotient.
    pub fn standard_monomials_up_to(
        &self,
        k: u32,
        budget: &Budget,
    ) -> Result<Vec<Monomial>> {
        let ord = TermOrder::GrevLex;
        let gb = self.groebner_basis(&ord, budget)?;
        let leads: Vec<Monomial> = gb
            .iter()
            .map(|g| g.leading_monomial(&ord).unwrap().clone())
            .collect();
        Ok(monomials_up_to_degree(self.ring.arity(), k)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect())
    }

    pub fn hilbert_function(&self, k: u32, ord: &TermOrder, budget: &Budget) -> Result<usize> {
        Ok(self.standard_monomials(k, ord, budget)?.len())
    }

    pub fn affine_hilbert_function(&self, k: u32, budget: &Budget) -> Result<usize> {
        Ok(self.standard_monomials_up_to(k, budget)?.len())
    }

    /// Leading monomials of the Gröbner basis for the order.
    pub fn lead_monomials(&self, ord: &TermOrder, budget: &Budget) -> Result<Vec<Monomial>> {
        let gb = self.groebner_basis(ord, budget)?;
        Ok(gb
            .iter()
            .map(|g| g.leading_monomial(ord).unwrap().clone())
            .collect())
    }

    /// Oracle used in tests: saturation by iterated colon instead of the
    /// auxiliary-variable route.
    pub fn saturate_poly_by_colon(&self, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
        let gi = Ideal::new(&self.ring, vec![g.clone()]);
        self.saturate_ideal(&gi, budget)
    }
}

impl PartialEq for Ideal {
    /// Structural equality of generator lists; use [`Ideal::equals`] for
    /// mathematical equality.
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.gens == other.gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn membership_examples() {
        let r = PolyRing::new(vec!["x", "y"]).unwrap();
        let i = Ideal::new(
            &r,
            vec![
                parse_poly(&r, "x^2 - y").unwrap(),
                parse_poly(&r, "x^2").unwrap(),
            ],
        );
        // y = x^2 - (x^2 - y)
        assert!(i.contains(&parse_poly(&r, "y").unwrap(), &budget()).unwrap());
        let j = Ideal::new(&r, vec![parse_poly(&r, "y").unwrap()]);
        assert!(!j.contains(&parse_poly(&r, "x").unwrap(), &budget()).unwrap());
        assert!(j.contains(&Polynomial::zero(&r), &budget()).unwrap());
    }

    #[test]
    fn elimination_twisted_cubic_style() {
        // I = (u - x^2, v - x^3), eliminate x → (u^3 - v^2)
        let r = PolyRing::new(vec!["x", "u", "v"]).unwrap();
        let i = Ideal::new(
            &r,
            vec![
                parse_poly(&r, "u - x^2").unwrap(),
                parse_poly(&r, "v - x^3").unwrap(),
            ],
        );
        let e = i.eliminate(&[0], &budget()).unwrap();
        assert_eq!(e.gens().len(), 1);
        assert_eq!(e.gens()[0].to_string(), "u^3 - v^2");
    }

    #[test]
    fn elimination_dominant_projection() {
        // I = (x*t - 1), eliminate t → (0)
        let r = PolyRing::with_param(vec!["x"]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x*t - 1").unwrap()]);
        let e = i.eliminate(&[r.param().unwrap()], &budget()).unwrap();
        assert!(e.is_zero_ideal());
    }

    #[test]
    fn saturation_examples() {
        // ((x t, y t) : t^∞) = (x, y)
        let r = PolyRing::with_param(vec!["x", "y"]).unwrap();
        let t = Polynomial::var(&r, r.param().unwrap());
        let i = Ideal::new(
            &r,
            vec![
                parse_poly(&r, "x*t").unwrap(),
                parse_poly(&r, "y*t").unwrap(),
            ],
        );
        let s = i.saturate_poly(&t, &budget()).unwrap();
        let expect = Ideal::new(
            &r,
            vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "y").unwrap()],
        );
        assert!(s.equals(&expect, &budget()).unwrap());

        // idempotent
        let s2 = s.saturate_poly(&t, &budget()).unwrap();
        assert!(s2.equals(&s, &budget()).unwrap());

        // ((x) : y^∞) = (x); ((x^2) : x^∞) = (1)
        let x = parse_poly(&r, "x").unwrap();
        let y = parse_poly(&r, "y").unwrap();
        let ix = Ideal::new(&r, vec![x.clone()]);
        assert!(ix
            .saturate_poly(&y, &budget())
            .unwrap()
            .equals(&ix, &budget())
            .unwrap());
        let ix2 = Ideal::new(&r, vec![parse_poly(&r, "x^2").unwrap()]);
        assert!(ix2
            .saturate_poly(&x, &budget())
            .unwrap()
            .is_unit_ideal(&budget())
            .unwrap());
    }

    #[test]
    fn colon_and_ideal_saturation() {
        // ((x y, t) : (y, t)^∞) = (x, t) — the residual of the quadric cone
        let r = PolyRing::with_param(vec!["x", "y"]).unwrap();
        let i = Ideal::new(
            &r,
            vec![parse_poly(&r, "x*y").unwrap(), parse_poly(&r, "t").unwrap()],
        );
        let j = Ideal::new(
            &r,
            vec![parse_poly(&r, "y").unwrap(), parse_poly(&r, "t").unwrap()],
        );
        let s = i.saturate_ideal(&j, &budget()).unwrap();
        let expect = Ideal::new(
            &r,
            vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "t").unwrap()],
        );
        assert!(s.equals(&expect, &budget()).unwrap());

        // (I : (1)) = I
        let c = i.colon_ideal(&Ideal::unit(&r), &budget()).unwrap();
        assert!(c.equals(&i, &budget()).unwrap());

        // ((x^2 y) : (x)) = (x y)
        let r2 = PolyRing::new(vec!["x", "y"]).unwrap();
        let i2 = Ideal::new(&r2, vec![parse_poly(&r2, "x^2*y").unwrap()]);
        let j2 = Ideal::new(&r2, vec![parse_poly(&r2, "x").unwrap()]);
        let c2 = i2.colon_ideal(&j2, &budget()).unwrap();
        let expect2 = Ideal::new(&r2, vec![parse_poly(&r2, "x*y").unwrap()]);
        assert!(c2.equals(&expect2, &budget()).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let r = PolyRing::with_param(vec!["x", "y", "z"]).unwrap();
        // (x^3 - y^2, t) ∩ (y, t) = (y*(x^3 - y^2), t)
        let a = Ideal::new(
            &r,
            vec![
                parse_poly(&r, "x^3 - y^2").unwrap(),
                parse_poly(&r, "t").unwrap(),
            ],
        );
        let b = Ideal::new(
            &r,
            vec![parse_poly(&r, "y").unwrap(), parse_poly(&r, "t").unwrap()],
        );
        let inter = a.intersection(&b, &budget()).unwrap();
        let expect = Ideal::new(
            &r,
            vec![
                parse_poly(&r, "y*(x^3 - y^2)").unwrap(),
                parse_poly(&r, "t").unwrap(),
            ],
        );
        assert!(inter.equals(&expect, &budget()).unwrap());

        // I ∩ I = I, I ∩ (1) = I
        assert!(a.intersection(&a, &budget()).unwrap().equals(&a, &budget()).unwrap());
        assert!(a
            .intersection(&Ideal::unit(&r), &budget())
            .unwrap()
            .equals(&a, &budget())
            .unwrap());
    }

    #[test]
    fn powers() {
        let r = PolyRing::with_param(vec!["x", "y"]).unwrap();
        let i = Ideal::new(
            &r,
            vec![parse_poly(&r, "y").unwrap(), parse_poly(&r, "t").unwrap()],
        );
        let sq = i.power(2);
        let expect = Ideal::new(
            &r,
            vec![
                parse_poly(&r, "y^2").unwrap(),
                parse_poly(&r, "y*t").unwrap(),
                parse_poly(&r, "t^2").unwrap(),
            ],
        );
        assert!(sq.equals(&expect, &budget()).unwrap());
        assert!(i.power(0).is_unit_ideal(&budget()).unwrap());
    }

    #[test]
    fn radical_membership() {
        let r = PolyRing::new(vec!["x", "y"]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x^2").unwrap()]);
        assert!(i
            .radical_contains(&parse_poly(&r, "x").unwrap(), &budget())
            .unwrap());
        assert!(!i
            .radical_contains(&parse_poly(&r, "y").unwrap(), &budget())
            .unwrap());
        let j = Ideal::new(&r, vec![parse_poly(&r, "x^2*y^3").unwrap()]);
        assert!(j
            .radical_contains(&parse_poly(&r, "x*y").unwrap(), &budget())
            .unwrap());
    }

    #[test]
    fn standard_monomials_conic() {
        // I = (xz) in 3 variables, degree 2 → 5 standard monomials
        let r = PolyRing::new(vec!["x", "y", "z"]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x*z").unwrap()]);
        let sm = i
            .standard_monomials(2, &TermOrder::GrevLex, &budget())
            .unwrap();
        assert_eq!(sm.len(), 5);
        // I = (1): none; I = (0): all
        assert!(Ideal::unit(&r)
            .standard_monomials(3, &TermOrder::GrevLex, &budget())
            .unwrap()
            .is_empty());
        assert_eq!(
            Ideal::zero(&r)
                .standard_monomials(1, &TermOrder::GrevLex, &budget())
                .unwrap()
                .len(),
            3
        );
    }
}
