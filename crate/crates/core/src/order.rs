//! Term orders on monomials.
//!
//! All four kinds are total and multiplicative. `Lex`, `GrevLex` and `Block`
//! are global orders (every variable exceeds 1), so division and Buchberger
//! terminate unconditionally. `WeightRefined` admits negative weights and is
//! only a well-order on weight-homogeneous slices; the kernel uses it for
//! graded data and guards the general case with the reduction budget.

use std::cmp::Ordering;

use crate::ring::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Pure lexicographic, first variable strongest.
    Lex,
    /// Graded reverse lexicographic.
    GrevLex,
    /// Elimination order: grevlex on the first `block` variables, ties broken
    /// by grevlex on the rest. Any monomial containing a variable from the
    /// block exceeds every monomial without one.
    Block { block: usize },
    /// Compare by an integer weight vector, ties broken by the given order.
    WeightRefined { weights: Vec<i64>, tie: Box<TermOrder> },
}

impl TermOrder {
    /// Elimination order for an arbitrary set of variable indices: compares
    /// the degree in `vars` first (grevlex within), then grevlex overall.
    pub fn eliminating(vars: &[usize], arity: usize) -> TermOrder {
        // Representing a scattered block by a weight vector keeps the
        // comparison simple: weight 1 on the block, 0 elsewhere, grevlex tie.
        let mut w = vec![0i64; arity];
        for &i in vars {
            w[i] = 1;
        }
        TermOrder::WeightRefined { weights: w, tie: Box::new(TermOrder::GrevLex) }
    }

    /// A degree-compatible order that compares the total degree in the
    /// non-parameter variables first. Remainders of division never raise the
    /// x-degree of a term, which the slice-counting machinery relies on.
    pub fn x_degree_first(x_vars: &[usize], arity: usize) -> TermOrder {
        let mut w = vec![0i64; arity];
        for &i in x_vars {
            w[i] = 1;
        }
        TermOrder::WeightRefined { weights: w, tie: Box::new(TermOrder::GrevLex) }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => lex(a.exps(), b.exps()),
            TermOrder::GrevLex => grevlex(a, b),
            TermOrder::Block { block } => {
                let da: u32 = a.exps()[..*block].iter().sum();
                let db: u32 = b.exps()[..*block].iter().sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    o => return o,
                }
                match revlex_tail(&a.exps()[..*block], &b.exps()[..*block]) {
                    Ordering::Equal => {}
                    o => return o,
                }
                let da: u32 = a.exps()[*block..].iter().sum();
                let db: u32 = b.exps()[*block..].iter().sum();
                match da.cmp(&db) {
                    Ordering::Equal => revlex_tail(&a.exps()[*block..], &b.exps()[*block..]),
                    o => o,
                }
            }
            TermOrder::WeightRefined { weights, tie } => {
                let wa = a.weighted_degree(weights);
                let wb = b.weighted_degree(weights);
                match wa.cmp(&wb) {
                    Ordering::Equal => tie.cmp(a, b),
                    o => o,
                }
            }
        }
    }

    /// True when `cmp` can only increase with total degree, so remainders of
    /// division stay inside degree-bounded slices.
    pub fn is_global(&self) -> bool {
        match self {
            TermOrder::Lex | TermOrder::GrevLex | TermOrder::Block { .. } => true,
            TermOrder::WeightRefined { weights, tie } => {
                weights.iter().all(|&w| w >= 0) && tie.is_global()
            }
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => revlex_tail(a.exps(), b.exps()),
        o => o,
    }
}

/// Shared grevlex tie-break: scanning from the last variable, the monomial
/// with the smaller exponent at the first difference is the larger one.
fn revlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Monomial;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_basics() {
        let ord = TermOrder::Lex;
        assert_eq!(ord.cmp(&m(&[2, 0]), &m(&[1, 5])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1]), &m(&[1, 2])), Ordering::Less);
    }

    #[test]
    fn grevlex_basics() {
        let ord = TermOrder::GrevLex;
        // degree wins first
        assert_eq!(ord.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // x^2 y > x z^2 in grevlex(x, y, z)
        assert_eq!(ord.cmp(&m(&[2, 1, 0]), &m(&[1, 0, 2])), Ordering::Greater);
        // x y > z^2? deg equal, last exponent 0 < 2 so xy is larger
        assert_eq!(ord.cmp(&m(&[1, 1, 0]), &m(&[0, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn elimination_dominates() {
        // eliminating y (index 1) in 3 vars: any power of y beats x^k z^l
        let ord = TermOrder::eliminating(&[1], 3);
        assert_eq!(ord.cmp(&m(&[0, 1, 0]), &m(&[9, 0, 9])), Ordering::Greater);
    }

    #[test]
    fn multiplicative() {
        let orders = [
            TermOrder::Lex,
            TermOrder::GrevLex,
            TermOrder::Block { block: 2 },
            TermOrder::WeightRefined {
                weights: vec![-1, 2, 0],
                tie: Box::new(TermOrder::Lex),
            },
        ];
        let u = m(&[1, 2, 0]);
        let v = m(&[0, 3, 1]);
        let w = m(&[2, 1, 1]);
        for ord in &orders {
            let base = ord.cmp(&u, &v);
            assert_eq!(ord.cmp(&u.mul(&w), &v.mul(&w)), base);
        }
    }
}
