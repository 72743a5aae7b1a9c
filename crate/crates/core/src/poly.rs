//! Sparse multivariate polynomials over exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::Result;
use crate::order::TermOrder;
use crate::ring::{Monomial, PolyRing};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `num/den` rendering with the denominator omitted when 1.
pub fn rat_to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A polynomial tied to its ring. Zero coefficients are never stored; the
/// zero polynomial is the empty term map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rational) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.arity()), c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Polynomial {
        Polynomial::from_monomial(ring, Monomial::var(ring.arity(), i))
    }

    pub fn from_monomial(ring: &Arc<PolyRing>, m: Monomial) -> Polynomial {
        let mut terms = BTreeMap::new();
        terms.insert(m, Rational::one());
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn from_terms(
        ring: &Arc<PolyRing>,
        it: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.arity(), self.ring.arity());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Total degree in all variables; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Total degree in the non-parameter variables.
    pub fn x_degree(&self) -> Option<u32> {
        let xs = self.ring.x_indices();
        self.terms.keys().map(|m| m.degree_in(&xs)).max()
    }

    /// Degree in the parameter variable, when the ring has one.
    pub fn param_degree(&self) -> Option<u32> {
        let t = self.ring.param()?;
        self.terms.keys().map(|m| m.exp(t)).max()
    }

    /// Largest power of the parameter dividing every term (0 for zero poly).
    pub fn param_valuation(&self) -> u32 {
        match self.ring.param() {
            Some(t) => self.terms.keys().map(|m| m.exp(t)).min().unwrap_or(0),
            None => 0,
        }
    }

    pub fn leading_monomial(&self, ord: &TermOrder) -> Option<&Monomial> {
        self.terms
            .keys()
            .max_by(|a, b| ord.cmp(a, b))
    }

    pub fn leading_term(&self, ord: &TermOrder) -> Option<(&Monomial, &Rational)> {
        let m = self.leading_monomial(ord)?;
        Some((m, &self.terms[m]))
    }

    /// Terms sorted descending in the given order.
    pub fn sorted_terms(&self, ord: &TermOrder) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        v
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, q)| (m.clone(), q * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, q)| (k.mul(m), q * c))
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Leading coefficient scaled to 1 (zero stays zero).
    pub fn monic(&self, ord: &TermOrder) -> Polynomial {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Rational::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Weighted degree when weight-homogeneous, else `None`. Weights cover
    /// every ring variable, parameter included.
    pub fn weight_degree(&self, w: &[i64]) -> Option<i64> {
        debug_assert_eq!(w.len(), self.ring.arity());
        let mut it = self.terms.keys();
        let first = it.next()?.weighted_degree(w);
        for m in it {
            if m.weighted_degree(w) != first {
                return None;
            }
        }
        Some(first)
    }

    pub fn is_weight_homogeneous(&self, w: &[i64]) -> bool {
        self.is_zero() || self.weight_degree(w).is_some()
    }

    /// Homogeneous in total degree over the non-parameter variables.
    pub fn is_x_homogeneous(&self) -> bool {
        let xs = self.ring.x_indices();
        let mut degs = self.terms.keys().map(|m| m.degree_in(&xs));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The weight-homogeneous part of weight `v` (weights over all vars).
    pub fn weight_part(&self, w: &[i64], v: i64) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.weighted_degree(w) == v)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Substitute each variable by a polynomial in the target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        assert_eq!(images.len(), self.ring.arity());
        let target = images
            .first()
            .map(|p| p.ring().clone())
            .unwrap_or_else(|| self.ring.clone());
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = &term * &images[i].pow(e);
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Scale every variable by a rational: `x_i ↦ c_i · x_i`.
    pub fn scale_vars(&self, scales: &[Rational]) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut q = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    q *= &scales[i];
                }
            }
            out.add_term(m.clone(), q);
        }
        out
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut q = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    q *= &point[i];
                }
            }
            acc += q;
        }
        acc
    }

    /// Substitute a rational constant for one variable, staying in the ring.
    pub fn substitute_value(&self, var: usize, value: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let mut q = c.clone();
            for _ in 0..e {
                q *= value;
            }
            let mut exps = m.exps().to_vec();
            exps[var] = 0;
            out.add_term(Monomial::new(exps), q);
        }
        out
    }

    /// Divide every term by `t^k`; requires the parameter valuation ≥ k.
    pub fn div_param_power(&self, k: u32) -> Polynomial {
        let t = match self.ring.param() {
            Some(t) => t,
            None => return self.clone(),
        };
        debug_assert!(self.param_valuation() >= k);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps().to_vec();
                exps[t] -= k;
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Move this polynomial into a ring that contains all its variables
    /// (matched by name). Fails if a used variable is missing.
    pub fn transfer(&self, target: &Arc<PolyRing>) -> Result<Polynomial> {
        if self.ring.same_ring(target) {
            return Ok(Polynomial { ring: target.clone(), terms: self.terms.clone() });
        }
        let map: Vec<Option<usize>> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.var_index(v))
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.arity()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] = e,
                    None => {
                        return Err(crate::error::Error::invalid(format!(
                            "variable `{}` not present in target ring",
                            self.ring.var_name(i)
                        )))
                    }
                }
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Canonical string with terms descending in the ring's print order.
    pub fn canonical_string(&self) -> String {
        format!("{self}")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        debug_assert!(self.ring.same_ring(&rhs.ring));
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        debug_assert!(self.ring.same_ring(&rhs.ring));
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        debug_assert!(self.ring.same_ring(&rhs.ring));
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sorted = self.sorted_terms(self.ring.print_order());
        for (i, (m, c)) in sorted.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(rat_to_string(&abs));
            }
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.var_name(v).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.var_name(v), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::PolyRing;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(vec!["x", "y"]).unwrap()
    }

    #[test]
    fn add_cancels() {
        let r = ring();
        let f = parse_poly(&r, "x + y").unwrap();
        let g = parse_poly(&r, "x - y").unwrap();
        assert_eq!(&f + &g, parse_poly(&r, "2*x").unwrap());
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let f = parse_poly(&r, "x + y").unwrap();
        let g = parse_poly(&r, "x - y").unwrap();
        assert_eq!(&f * &g, parse_poly(&r, "x^2 - y^2").unwrap());
    }

    #[test]
    fn exact_rational_scaling() {
        let r = ring();
        let f = parse_poly(&r, "x^3 - y^2").unwrap();
        let s = f.scale(&rat_frac(1, 3));
        assert_eq!(s, parse_poly(&r, "1/3*x^3 - 1/3*y^2").unwrap());
    }

    #[test]
    fn printing_canonical() {
        let r = ring();
        let f = parse_poly(&r, "y^2 - 1/2 + x^3").unwrap();
        assert_eq!(f.to_string(), "x^3 + y^2 - 1/2");
    }

    #[test]
    fn weight_homogeneity() {
        let r = PolyRing::with_param(vec!["x", "y", "z"]).unwrap();
        let f = parse_poly(&r, "x*y - t*z").unwrap();
        assert_eq!(f.weight_degree(&[-1, -1, -3, 1]), Some(-2));
        assert_eq!(f.weight_degree(&[1, 0, 0, 0]), None);
    }
}
