//! Polynomial rings and monomials.
//!
//! A [`PolyRing`] is a list of named variables with an optional distinguished
//! parameter variable (conventionally `t`, the base coordinate of a family).
//! Coefficients are always exact rationals. Rings are cheap values shared via
//! `Arc`; two rings are the same ring exactly when their variable lists and
//! parameter choice agree.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::order::TermOrder;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
    /// Index of the parameter variable, if any.
    param: Option<usize>,
    /// Filtration weight of each variable for degree-bounded section spaces.
    /// Original ambient coordinates weigh 1; coordinates adjoined by a pole
    /// re-embedding at level `p` weigh `p`. The parameter weighs 0.
    degree_weights: Vec<u32>,
    /// Order used for canonical printing and canonical Gröbner bases.
    print_order: TermOrder,
}

impl PolyRing {
    /// Ring with the given variables, no parameter, all degree weights 1.
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Result<Arc<PolyRing>> {
        Self::with_param_name(vars, None::<&str>)
    }

    /// Ring whose last variable is the parameter `t`.
    pub fn with_param<S: Into<String>>(vars: Vec<S>) -> Result<Arc<PolyRing>> {
        Self::with_param_name(vars, Some("t"))
    }

    fn with_param_name<S: Into<String>>(vars: Vec<S>, param: Option<&str>) -> Result<Arc<PolyRing>> {
        let mut names: Vec<String> = vars.into_iter().map(Into::into).collect();
        if let Some(p) = param {
            names.push(p.to_string());
        }
        let mut seen = std::collections::HashSet::new();
        for v in &names {
            if !seen.insert(v.clone()) {
                return Err(Error::invalid(format!("duplicate variable `{v}`")));
            }
            if v.is_empty() || !v.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::invalid(format!("invalid variable name `{v}`")));
            }
        }
        let param_idx = param.map(|_| names.len() - 1);
        let n = names.len();
        let mut dw = vec![1u32; n];
        if let Some(i) = param_idx {
            dw[i] = 0;
        }
        Ok(Arc::new(PolyRing {
            vars: names,
            param: param_idx,
            degree_weights: dw,
            print_order: TermOrder::GrevLex,
        }))
    }

    /// Assemble a ring explicitly; used by the transform and blow-up passes.
    pub fn assemble(
        vars: Vec<String>,
        param: Option<usize>,
        degree_weights: Vec<u32>,
        print_order: TermOrder,
    ) -> Result<Arc<PolyRing>> {
        if degree_weights.len() != vars.len() {
            return Err(Error::invalid("degree weight arity mismatch"));
        }
        if let Some(i) = param {
            if i >= vars.len() {
                return Err(Error::invalid("parameter index out of range"));
            }
        }
        Ok(Arc::new(PolyRing { vars, param, degree_weights, print_order }))
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn param(&self) -> Option<usize> {
        self.param
    }

    pub fn degree_weights(&self) -> &[u32] {
        &self.degree_weights
    }

    pub fn print_order(&self) -> &TermOrder {
        &self.print_order
    }

    /// Indices of the non-parameter variables.
    pub fn x_indices(&self) -> Vec<usize> {
        (0..self.arity()).filter(|i| Some(*i) != self.param).collect()
    }

    /// Same variables, different canonical print order.
    pub fn with_print_order(self: &Arc<Self>, ord: TermOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            vars: self.vars.clone(),
            param: self.param,
            degree_weights: self.degree_weights.clone(),
            print_order: ord,
        })
    }

    /// Extend by fresh variables (appended before the parameter so that the
    /// parameter stays last). New variables get the given degree weight.
    pub fn extended(self: &Arc<Self>, new_vars: &[String], dw: u32) -> Result<Arc<PolyRing>> {
        let mut vars = self.vars.clone();
        let mut weights = self.degree_weights.clone();
        let at = self.param.unwrap_or(vars.len());
        for (k, v) in new_vars.iter().enumerate() {
            if self.var_index(v).is_some() {
                return Err(Error::invalid(format!("variable `{v}` already present")));
            }
            vars.insert(at + k, v.clone());
            weights.insert(at + k, dw);
        }
        let param = self.param.map(|_| at + new_vars.len());
        Ok(Arc::new(PolyRing {
            vars,
            param,
            degree_weights: weights,
            print_order: self.print_order.clone(),
        }))
    }

    /// Drop the given variables. Dropping the parameter yields a plain ring.
    pub fn without(self: &Arc<Self>, drop: &[usize]) -> Result<Arc<PolyRing>> {
        let mut vars = Vec::new();
        let mut weights = Vec::new();
        let mut param = None;
        for i in 0..self.arity() {
            if drop.contains(&i) {
                continue;
            }
            if Some(i) == self.param {
                param = Some(vars.len());
            }
            vars.push(self.vars[i].clone());
            weights.push(self.degree_weights[i]);
        }
        if let Some(p) = self.param {
            if drop.contains(&p) {
                param = None;
            }
        }
        Ok(Arc::new(PolyRing {
            vars,
            param,
            degree_weights: weights,
            print_order: self.print_order.clone(),
        }))
    }

    pub fn same_ring(&self, other: &PolyRing) -> bool {
        self.vars == other.vars && self.param == other.param
    }

    pub fn expect_same(&self, other: &PolyRing) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                expected: self.vars.clone(),
                got: other.vars.clone(),
            })
        }
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.vars.join(", "))
    }
}

/// Exponent vector with cached total degree.
///
/// The derived-style `Ord` below is the fixed canonical order used for term
/// storage (degree, then lex); term orders for Gröbner runs live in
/// [`crate::order::TermOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(arity: usize) -> Monomial {
        Monomial { exps: vec![0; arity], degree: 0 }
    }

    pub fn var(arity: usize, i: usize) -> Monomial {
        let mut exps = vec![0; arity];
        exps[i] = 1;
        Monomial::new(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Total degree over a subset of the variables.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&i| self.exps[i]).sum()
    }

    /// Weighted degree with one integer weight per variable.
    pub fn weighted_degree(&self, w: &[i64]) -> i64 {
        self.exps
            .iter()
            .zip(w)
            .map(|(&e, &wi)| e as i64 * wi)
            .sum()
    }

    /// Filtration degree of the ring (degree weights are small and unsigned).
    pub fn filtration_degree(&self, dw: &[u32]) -> u64 {
        self.exps
            .iter()
            .zip(dw)
            .map(|(&e, &wi)| e as u64 * wi as u64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(b, a)| b - a)
            .collect();
        Monomial { exps, degree: other.degree - self.degree }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let exps = self.exps.iter().map(|e| e * k).collect();
        Monomial { exps, degree: self.degree * k }
    }
}

/// Enumerate all monomials of exact total degree `d` in `arity` variables.
pub fn monomials_of_degree(arity: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; arity];
    fn rec(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, pos: usize, left: u32) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(out, cur, pos + 1, left - e);
        }
    }
    if arity == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(&mut out, &mut cur, 0, d);
    out
}

/// Enumerate all monomials of total degree at most `d`.
pub fn monomials_up_to_degree(arity: usize, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|k| monomials_of_degree(arity, k)).collect()
}
