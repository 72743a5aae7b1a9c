//! Multivariate division and Buchberger's algorithm.
//!
//! The engine is deliberately plain: normal pair selection (smallest lcm in
//! the active order), the coprime and chain criteria for pair elimination,
//! full inter-reduction at the end. Reduced Gröbner bases are unique per
//! (ideal, order), which is what makes every downstream output reproducible.

use num::{One, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::order::TermOrder;
use crate::poly::{Polynomial, Rational};
use crate::ring::Monomial;

/// Remainder of `f` under division by `basis`. No term of the result is
/// divisible by a leading term of the basis, and `f - result` lies in the
/// ideal generated by it.
pub fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    ord: &TermOrder,
    budget: &Budget,
) -> Result<Polynomial> {
    let leads: Vec<(Monomial, Rational)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term(ord).expect("zero divisor polynomial");
            (m.clone(), c.clone())
        })
        .collect();
    let mut rem = f.clone();
    let mut steps = 0usize;
    'outer: loop {
        // largest reducible term in the active order
        let mut target: Option<(Monomial, Rational, usize)> = None;
        for (m, c) in rem.terms() {
            let hit = leads.iter().position(|(lm, _)| lm.divides(m));
            if let Some(k) = hit {
                let better = match &target {
                    None => true,
                    Some((tm, _, _)) => ord.cmp(m, tm) == std::cmp::Ordering::Greater,
                };
                if better {
                    target = Some((m.clone(), c.clone(), k));
                }
            }
        }
        match target {
            None => break 'outer,
            Some((m, c, k)) => {
                steps += 1;
                budget.check("normal_form", steps, budget.max_reductions)?;
                let (lm, lc) = &leads[k];
                let quot = lm.quotient_of(&m);
                let scale = &c / lc;
                rem = &rem - &basis[k].mul_monomial(&quot, &scale);
            }
        }
    }
    Ok(rem)
}

/// Quotient of an exact single-divisor division, or `None` when not exact.
pub fn try_div_exact(f: &Polynomial, g: &Polynomial, ord: &TermOrder) -> Option<Polynomial> {
    if f.is_zero() {
        return Some(Polynomial::zero(f.ring()));
    }
    let (glm, glc) = g.leading_term(ord)?;
    let (glm, glc) = (glm.clone(), glc.clone());
    let mut rem = f.clone();
    let mut quot = Polynomial::zero(f.ring());
    while let Some((m, c)) = rem.leading_term(ord) {
        if !glm.divides(m) {
            return None;
        }
        let qm = glm.quotient_of(m);
        let qc = c / &glc;
        let piece = Polynomial::from_monomial(f.ring(), qm).scale(&qc);
        rem = &rem - &(g * &piece);
        quot = &quot + &piece;
    }
    Some(quot)
}

fn s_poly(f: &Polynomial, g: &Polynomial, ord: &TermOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(ord).unwrap();
    let (gm, gc) = g.leading_term(ord).unwrap();
    let lcm = fm.lcm(gm);
    let mf = fm.quotient_of(&lcm);
    let mg = gm.quotient_of(&lcm);
    let a = f.mul_monomial(&mf, &(Rational::one() / fc.clone()));
    let b = g.mul_monomial(&mg, &(Rational::one() / gc.clone()));
    &a - &b
}

/// Reduced Gröbner basis of the given generators, monic, sorted by ascending
/// leading monomial. Deterministic: generators are pre-sorted canonically and
/// the reduced basis is unique for a fixed order.
pub fn reduced_groebner_basis(
    gens: &[Polynomial],
    ord: &TermOrder,
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(ord))
        .collect();
    basis.sort_by(|a, b| {
        let la = a.leading_monomial(ord).unwrap();
        let lb = b.leading_monomial(ord).unwrap();
        ord.cmp(la, lb).then_with(|| a.num_terms().cmp(&b.num_terms()))
    });
    basis.dedup();

    if basis.is_empty() {
        return Ok(Vec::new());
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut done: std::collections::HashSet<(usize, usize)> = Default::default();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }

    let lead = |basis: &[Polynomial], i: usize| -> Monomial {
        basis[i].leading_monomial(ord).unwrap().clone()
    };

    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        budget.check("buchberger pairs", processed, budget.max_pairs)?;

        // normal selection: smallest lcm in the active order
        let mut best = 0usize;
        let mut best_lcm = lead(&basis, pairs[0].0).lcm(&lead(&basis, pairs[0].1));
        for (idx, &(i, j)) in pairs.iter().enumerate().skip(1) {
            let l = lead(&basis, i).lcm(&lead(&basis, j));
            if ord.cmp(&l, &best_lcm) == std::cmp::Ordering::Less {
                best = idx;
                best_lcm = l;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        done.insert((i, j));

        let li = lead(&basis, i);
        let lj = lead(&basis, j);
        if li.coprime(&lj) {
            continue;
        }
        let lcm = li.lcm(&lj);
        // chain criterion
        let mut skip = false;
        for k in 0..basis.len() {
            if k == i || k == j {
                continue;
            }
            if lead(&basis, k).divides(&lcm) {
                let a = (i.min(k), i.max(k));
                let b = (j.min(k), j.max(k));
                if done.contains(&a) && done.contains(&b) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }

        let s = s_poly(&basis[i], &basis[j], ord);
        let r = normal_form(&s, &basis, ord, budget)?;
        if !r.is_zero() {
            let r = r.monic(ord);
            let new = basis.len();
            budget.check("buchberger basis", new + 1, budget.max_basis)?;
            for k in 0..new {
                pairs.push((k, new));
            }
            basis.push(r);
        }
    }

    // minimal basis: drop elements whose lead is divisible by another lead
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let li = basis[i].leading_monomial(ord).unwrap();
            let lj = basis[j].leading_monomial(ord).unwrap();
            if lj.divides(li) && (li != lj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // full inter-reduction
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let r = if others.is_empty() {
            minimal[i].clone()
        } else {
            normal_form(&minimal[i], &others, ord, budget)?
        };
        if !r.is_zero() {
            reduced.push(r.monic(ord));
        }
    }
    reduced.sort_by(|a, b| {
        ord.cmp(
            a.leading_monomial(ord).unwrap(),
            b.leading_monomial(ord).unwrap(),
        )
    });
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::PolyRing;

    #[test]
    fn textbook_lex_basis() {
        // I = (x^2 - y, x*y - x), lex x > y  →  {x^2 - y, x*y - x, y^2 - y}
        let r = PolyRing::new(vec!["x", "y"]).unwrap();
        let gens = vec![
            parse_poly(&r, "x^2 - y").unwrap(),
            parse_poly(&r, "x*y - x").unwrap(),
        ];
        let gb = reduced_groebner_basis(&gens, &TermOrder::Lex, &Budget::default()).unwrap();
        let strings: Vec<String> = gb.iter().map(|p| p.to_string()).collect();
        assert_eq!(strings, vec!["y^2 - y", "x*y - x", "x^2 - y"]);
    }

    #[test]
    fn zero_ideal_and_redundant_generator() {
        let r = PolyRing::new(vec!["x", "y"]).unwrap();
        let gb =
            reduced_groebner_basis(&[], &TermOrder::GrevLex, &Budget::default()).unwrap();
        assert!(gb.is_empty());
        let gens = vec![
            parse_poly(&r, "x").unwrap(),
            parse_poly(&r, "x^2").unwrap(),
        ];
        let gb =
            reduced_groebner_basis(&gens, &TermOrder::GrevLex, &Budget::default()).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0].to_string(), "x");
    }

    #[test]
    fn normal_form_single_step() {
        let r = PolyRing::new(vec!["x", "y"]).unwrap();
        let basis = vec![parse_poly(&r, "x^2 - y").unwrap()];
        let f = parse_poly(&r, "x^2").unwrap();
        let nf = normal_form(&f, &basis, &TermOrder::Lex, &Budget::default()).unwrap();
        assert_eq!(nf.to_string(), "y");
    }

    #[test]
    fn exact_division() {
        let r = PolyRing::new(vec!["x", "y"]).unwrap();
        let f = parse_poly(&r, "x^2 - y^2").unwrap();
        let g = parse_poly(&r, "x - y").unwrap();
        let q = try_div_exact(&f, &g, &TermOrder::GrevLex).unwrap();
        assert_eq!(q.to_string(), "x + y");
        let h = parse_poly(&r, "x^2 + y").unwrap();
        assert!(try_div_exact(&h, &g, &TermOrder::GrevLex).is_none());
    }
}
