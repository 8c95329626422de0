//! Buchberger's algorithm and the ideal operations built on it.

mod ideal;

use std::cmp::Ordering;
use std::collections::BTreeSet;

pub use ideal::{sort_ideals, Ideal};

use crate::error::{Error, Result};
use crate::ring::{reduce, spoly, Monomial, MonomialOrder, Polynomial};

/// The reduced Gröbner basis of `gens` under `order`, sorted by leading
/// exponent vector (lexicographically descending). Empty input (or only zeros) gives the empty basis.
pub fn buchberger_reduced(gens: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    if gens.iter().any(|g| !g.ring().same_base(first.ring())) {
        return Err(Error::RingMismatch);
    }
    let ring = first.ring().with_order(order.clone());
    let input: Vec<Polynomial> = gens.iter().map(|g| g.reorder(&ring)).collect();
    let basis = groebner_basis(input);
    Ok(interreduce(basis))
}

/// Unreduced Gröbner basis; all inputs must share one ring (and order).
pub(crate) fn groebner_basis(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if g.is_unit() {
            return vec![g.monic()];
        }
        push_element(&mut basis, &mut pending, g.monic());
    }
    let Some(ring) = basis.first().map(|g| g.ring().clone()) else {
        return basis;
    };
    let order = ring.order().clone();

    while let Some(pair) = select_pair(&basis, &pending, &order) {
        pending.remove(&pair);
        let (i, j) = pair;
        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        if li.is_coprime(lj) {
            continue;
        }
        let lcm = li.lcm(lj);
        if chain_criterion(&basis, &pending, i, j, &lcm) {
            continue;
        }
        let r = reduce(&spoly(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![r.monic()];
        }
        push_element(&mut basis, &mut pending, r.monic());
    }
    basis
}

fn push_element(basis: &mut Vec<Polynomial>, pending: &mut BTreeSet<(usize, usize)>, g: Polynomial) {
    let k = basis.len();
    basis.push(g);
    for i in 0..k {
        pending.insert((i, k));
    }
}

// normal strategy: smallest lcm first, ties by index
fn select_pair(
    basis: &[Polynomial],
    pending: &BTreeSet<(usize, usize)>,
    order: &MonomialOrder,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), Monomial)> = None;
    for &(i, j) in pending {
        let l = basis[i]
            .leading_monomial()
            .unwrap()
            .lcm(basis[j].leading_monomial().unwrap());
        let better = match &best {
            None => true,
            Some((_, bl)) => order.compare(&l, bl) == Ordering::Less,
        };
        if better {
            best = Some(((i, j), l));
        }
    }
    best.map(|(p, _)| p)
}

// Buchberger's second criterion: skip (i, j) if some k has LM_k | lcm and
// both (i, k) and (j, k) were already treated.
fn chain_criterion(
    basis: &[Polynomial],
    pending: &BTreeSet<(usize, usize)>,
    i: usize,
    j: usize,
    lcm: &Monomial,
) -> bool {
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].leading_monomial().unwrap().divides(lcm)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
    })
}

/// Minimalizes and inter-reduces a Gröbner basis into the unique monic
/// reduced basis.
pub(crate) fn interreduce(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    if basis.iter().any(|g| g.is_constant()) {
        let ring = basis[0].ring().clone();
        return vec![Polynomial::one(&ring)];
    }
    let order = match basis.first() {
        Some(g) => g.ring().order().clone(),
        None => return basis,
    };
    // smaller leading monomials first so that duplicates keep the earlier one
    basis.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, g)| g.clone())
            .collect();
        reduced.push(reduce(&minimal[k], &others).monic());
    }
    // presentation order: leading exponent vectors, lexicographically descending
    reduced.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    reduced
}
