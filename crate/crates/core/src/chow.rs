//! Weighted Hilbert/trace tables, exact polynomial fitting and the Chow
//! invariant of a projective variety with a torus action.
//!
//! All fitting is exact: finite differences over the rationals, never least
//! squares. A table "stabilizes" when its tail is reproduced by a polynomial
//! that is over-determined by at least two extra points.

use num::{One, Signed, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::order::TermOrder;
use crate::poly::{rat, rat_to_string, Rational};

/// Dense univariate polynomial over the rationals, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> UniPoly {
        let mut p = UniPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> UniPoly {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, k: i64) -> Rational {
        let x = rat(k);
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|q| q * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn to_display_string(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = rat_to_string(&c.abs());
            let body = match i {
                0 => mag,
                1 if mag == "1" => var.to_string(),
                1 => format!("{mag}*{var}"),
                _ if mag == "1" => format!("{var}^{i}"),
                _ => format!("{mag}*{var}^{i}"),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else if c.is_negative() {
                parts.push(format!("- {body}"));
            } else {
                parts.push(format!("+ {body}"));
            }
        }
        parts.join(" ")
    }
}

/// Interpolating polynomial through `(k0 + i, vs[i])` by Newton forward
/// differences.
fn newton_interpolate(k0: i64, vs: &[Rational]) -> UniPoly {
    // p(k) = Σ_j Δ^j v(k0) · C(k - k0, j)
    let mut diffs: Vec<Rational> = vs.to_vec();
    let mut poly = UniPoly::zero();
    let mut basis = UniPoly::constant(Rational::one());
    for j in 0..vs.len() {
        poly = poly.add(&basis.scale(&diffs[0]));
        for i in 0..diffs.len().saturating_sub(1) {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
        let lin = UniPoly::from_coeffs(vec![rat(-(k0 + j as i64)), Rational::one()]);
        basis = basis.mul(&lin).scale(&(Rational::one() / rat(j as i64 + 1)));
    }
    poly
}

/// A fitted tail of an integer-indexed table.
#[derive(Debug, Clone)]
pub struct TableFit {
    pub poly: UniPoly,
    /// First index from which the polynomial reproduces the table.
    pub regularity: i64,
}

/// Fit the eventual polynomial of a table sampled at consecutive `k`.
/// The fit must be over-determined by at least two points; returns `None`
/// when the tail has not stabilized yet.
pub fn fit_table(k0: i64, vs: &[Rational]) -> Option<TableFit> {
    let n = vs.len();
    if n < 3 {
        return None;
    }
    for r in 0..n.saturating_sub(2) {
        let tail = &vs[r..];
        let poly = newton_interpolate(k0 + r as i64, tail);
        let deg_ok = match poly.degree() {
            None => true,
            Some(d) => d + 3 <= tail.len(),
        };
        if deg_ok {
            return Some(TableFit { poly, regularity: k0 + r as i64 });
        }
    }
    None
}

/// Dimension and weighted trace of the degree-`k` piece of the quotient by a
/// homogeneous ideal: the count of degree-`k` standard monomials and the sum
/// of their weights.
pub fn weighted_trace(
    ideal: &Ideal,
    weights: &[i64],
    k: u32,
    budget: &Budget,
) -> Result<(usize, Rational)> {
    if weights.len() != ideal.ring().arity() {
        return Err(Error::WeightArityMismatch {
            expected: ideal.ring().arity(),
            got: weights.len(),
        });
    }
    let sm = ideal.standard_monomials(k, &TermOrder::GrevLex, budget)?;
    let trace = sm
        .iter()
        .map(|m| rat(m.weighted_degree(weights)))
        .sum::<Rational>();
    Ok((sm.len(), trace))
}

/// Table of `(k, dimension, trace)` rows with fitted Hilbert and trace
/// polynomials once the finite differences stabilize.
#[derive(Debug, Clone)]
pub struct TraceTable {
    pub rows: Vec<(u32, usize, Rational)>,
    pub hilbert: TableFit,
    pub trace: TableFit,
    /// Dimension of the variety: degree of the fitted Hilbert polynomial.
    pub dim: usize,
}

impl TraceTable {
    /// Build from a row source, extending `k` until both fits stabilize or
    /// the budget runs out.
    pub fn build(
        mut row: impl FnMut(u32) -> Result<(usize, Rational)>,
        k_start: u32,
        k_max: u32,
        budget: &Budget,
    ) -> Result<TraceTable> {
        let mut rows: Vec<(u32, usize, Rational)> = Vec::new();
        let mut k = k_max.max(k_start + 2);
        loop {
            while rows.len() < (k - k_start + 1) as usize {
                let kk = k_start + rows.len() as u32;
                let (d, t) = row(kk)?;
                rows.push((kk, d, t));
            }
            let hs: Vec<Rational> = rows.iter().map(|(_, d, _)| rat(*d as i64)).collect();
            let ts: Vec<Rational> = rows.iter().map(|(_, _, t)| t.clone()).collect();
            if let (Some(hf), Some(tf)) = (
                fit_table(k_start as i64, &hs),
                fit_table(k_start as i64, &ts),
            ) {
                let dim = hf.poly.degree().unwrap_or(0);
                return Ok(TraceTable { rows, hilbert: hf, trace: tf, dim });
            }
            if k >= budget.max_table {
                return Err(Error::FitUnstable(rows.len()));
            }
            k += 2;
        }
    }

    pub fn from_ideal(
        ideal: &Ideal,
        weights: &[i64],
        k_max: u32,
        budget: &Budget,
    ) -> Result<TraceTable> {
        TraceTable::build(
            |k| weighted_trace(ideal, weights, k, budget),
            1,
            k_max.max(6),
            budget,
        )
    }
}

/// Normalized leading-order data of a torus action on a projective variety:
/// `ch = trace(1)/N − I/vol`, with `vol` the leading coefficient of the
/// Hilbert polynomial and `I` the leading coefficient of the trace
/// polynomial. The classical degree `vol · n!` is carried alongside.
#[derive(Debug, Clone)]
pub struct ChowReport {
    /// Dimension of the section space at k = 1.
    pub sections: usize,
    /// Trace of the action on that space.
    pub trace_1: Rational,
    /// Leading coefficient of the Hilbert polynomial.
    pub vol: Rational,
    /// Classical degree: `vol · n!`.
    pub degree: Rational,
    /// Leading coefficient of the degree-(n+1) trace polynomial.
    pub leading_trace: Rational,
    /// `trace_1 / sections − leading_trace / vol`.
    pub ch: Rational,
    pub dim: usize,
    pub hilbert_regularity: i64,
}

pub fn factorial(n: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 2..=n {
        acc *= rat(i as i64);
    }
    acc
}

/// Chow invariant from an already-built trace table.
pub fn chow_from_table(table: &TraceTable) -> Result<ChowReport> {
    let (_, n1, t1) = table
        .rows
        .first()
        .cloned()
        .ok_or_else(|| Error::invalid("empty trace table"))?;
    if n1 == 0 {
        return Err(Error::invalid("no sections at k = 1"));
    }
    let n = table.dim;
    let vol = table.hilbert.poly.coeff(n);
    if vol.is_zero() {
        return Err(Error::invalid("zero leading Hilbert coefficient"));
    }
    let leading_trace = table.trace.poly.coeff(n + 1);
    let ch = &t1 / rat(n1 as i64) - &leading_trace / &vol;
    Ok(ChowReport {
        sections: n1,
        trace_1: t1,
        degree: &vol * factorial(n),
        vol,
        leading_trace,
        ch,
        dim: n,
        hilbert_regularity: table.hilbert.regularity,
    })
}

/// Chow invariant of the quotient by `i_w` under per-variable weights
/// (projective: the ideal must be homogeneous).
pub fn chow_invariant(
    i_w: &Ideal,
    weights: &[i64],
    k_max: u32,
    budget: &Budget,
) -> Result<ChowReport> {
    let table = TraceTable::from_ideal(i_w, weights, k_max, budget)?;
    chow_from_table(&table)
}

/// Spread of a generator spectrum: max − min, 0 for an empty spectrum.
pub fn spectrum_spread(spectrum: &[i64]) -> i64 {
    match (spectrum.iter().max(), spectrum.iter().min()) {
        (Some(a), Some(b)) => a - b,
        _ => 0,
    }
}

/// Affine dimension and degree from the affine Hilbert function: the count
/// of standard monomials of degree ≤ k is eventually a polynomial of degree
/// `dim` with leading coefficient `degree / dim!`. `None` for the unit
/// ideal (empty locus).
pub fn affine_dimension_degree(
    ideal: &Ideal,
    budget: &Budget,
) -> Result<Option<(usize, Rational)>> {
    if ideal.is_unit_ideal(budget)? {
        return Ok(None);
    }
    let mut k = 6u32;
    loop {
        let vs: Vec<Rational> = (0..=k)
            .map(|i| Ok(rat(ideal.affine_hilbert_function(i, budget)? as i64)))
            .collect::<Result<_>>()?;
        if let Some(fit) = fit_table(0, &vs) {
            let d = fit.poly.degree().unwrap_or(0);
            let degree = fit.poly.coeff(d) * factorial(d);
            return Ok(Some((d, degree)));
        }
        if k >= budget.max_table {
            return Err(Error::FitUnstable(k as usize));
        }
        k += 4;
    }
}

/// Projective dimension and degree of the quotient by a homogeneous ideal.
/// `None` when the locus is empty (possibly after discarding the irrelevant
/// point).
pub fn projective_dimension_degree(
    ideal: &Ideal,
    budget: &Budget,
) -> Result<Option<(usize, Rational)>> {
    if ideal.is_unit_ideal(budget)? {
        return Ok(None);
    }
    let mut k = 6u32;
    loop {
        let vs: Vec<Rational> = (1..=k)
            .map(|i| {
                Ok(rat(
                    ideal.hilbert_function(i, &TermOrder::GrevLex, budget)? as i64
                ))
            })
            .collect::<Result<_>>()?;
        if let Some(fit) = fit_table(1, &vs) {
            if fit.poly.is_zero() {
                return Ok(None);
            }
            let d = fit.poly.degree().unwrap_or(0);
            let degree = fit.poly.coeff(d) * factorial(d);
            return Ok(Some((d, degree)));
        }
        if k >= budget.max_table {
            return Err(Error::FitUnstable(k as usize));
        }
        k += 4;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::PolyRing;

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn interpolation_recovers_quadratic() {
        // v(k) = (3k^2 + k)/2 sampled at k = 1..6
        let vs: Vec<Rational> = (1..=6).map(|k| rat((3 * k * k + k) / 2)).collect();
        let fit = fit_table(1, &vs).unwrap();
        assert_eq!(fit.poly.degree(), Some(2));
        assert_eq!(fit.poly.coeff(2), rat(3) / rat(2));
        assert_eq!(fit.regularity, 1);
    }

    #[test]
    fn weighted_trace_pair_of_lines() {
        // I = (xz), weights (0, -1, -1): dim = 2k + 1, trace = -(3k^2+k)/2
        let r = PolyRing::new(vec!["x", "y", "z"]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x*z").unwrap()]);
        for k in 1..=8u32 {
            let (d, t) = weighted_trace(&i, &[0, -1, -1], k, &budget()).unwrap();
            assert_eq!(d as i64, 2 * k as i64 + 1);
            let kk = k as i64;
            assert_eq!(t, rat(-(3 * kk * kk + kk)) / rat(2));
        }
    }

    #[test]
    fn chow_of_degenerate_conic() {
        let r = PolyRing::new(vec!["x", "y", "z"]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x*z").unwrap()]);
        let report = chow_invariant(&i, &[0, -1, -1], 8, &budget()).unwrap();
        assert_eq!(report.sections, 3);
        assert_eq!(report.trace_1, rat(-2));
        assert_eq!(report.vol, rat(2));
        assert_eq!(report.degree, rat(2));
        assert_eq!(report.leading_trace, rat(-3) / rat(2));
        assert_eq!(report.ch, rat(1) / rat(12));
        assert_eq!(report.dim, 1);
    }

    #[test]
    fn chow_zero_action() {
        let r = PolyRing::new(vec!["x", "y", "z"]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x*z").unwrap()]);
        let report = chow_invariant(&i, &[0, 0, 0], 8, &budget()).unwrap();
        assert!(report.ch.is_zero());
        assert!(report.leading_trace.is_zero());
    }

    #[test]
    fn shift_invariance_of_chow() {
        let r = PolyRing::new(vec!["x", "y", "z"]).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x*z").unwrap()]);
        let base = chow_invariant(&i, &[0, -1, -1], 8, &budget()).unwrap();
        let shifted = chow_invariant(&i, &[1, 0, 0], 8, &budget()).unwrap();
        assert_eq!(base.ch, shifted.ch);
    }

    #[test]
    fn affine_dim_degree_examples() {
        let r = PolyRing::new(vec!["x", "y", "z"]).unwrap();
        let b = Ideal::new(&r, vec![parse_poly(&r, "y").unwrap()]);
        assert_eq!(
            affine_dimension_degree(&b, &budget()).unwrap(),
            Some((2, rat(1)))
        );
        let c = Ideal::new(&r, vec![parse_poly(&r, "x^3 - y^2").unwrap()]);
        assert_eq!(
            affine_dimension_degree(&c, &budget()).unwrap(),
            Some((2, rat(3)))
        );
        let d = Ideal::new(
            &r,
            vec![parse_poly(&r, "y").unwrap(), parse_poly(&r, "x^3").unwrap()],
        );
        assert_eq!(
            affine_dimension_degree(&d, &budget()).unwrap(),
            Some((1, rat(3)))
        );
        assert_eq!(
            affine_dimension_degree(&Ideal::unit(&r), &budget()).unwrap(),
            None
        );
    }

    #[test]
    fn spectrum_spread_basics() {
        assert_eq!(spectrum_spread(&[]), 0);
        assert_eq!(spectrum_spread(&[0, -1, -2, -3]), 3);
        assert_eq!(spectrum_spread(&[0, 0]), 0);
    }
}
