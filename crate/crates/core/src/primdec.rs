//! Primary decomposition of monomial ideals.
//!
//! A monomial ideal is split into irreducible components (ideals generated
//! by pure powers of variables) by repeatedly writing a mixed generator
//! `m = u·v` with coprime `u, v` and using `I = (I + (u)) ∩ (I + (v))`.
//! Irreducible components with the same radical are intersected into one
//! primary component.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ring::{Monomial, Ring};

/// A primary ideal together with its radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub component: Ideal,
    pub prime: Ideal,
}

/// An irredundant primary decomposition `I = Q_1 ∩ ... ∩ Q_r` with pairwise
/// distinct radicals, sorted by prime and then by component.
#[derive(Clone, Debug)]
pub struct PrimaryDecomposition {
    components: Vec<PrimaryComponent>,
    source: Ideal,
}

impl PrimaryDecomposition {
    pub fn components(&self) -> &[PrimaryComponent] {
        &self.components
    }

    pub fn source(&self) -> &Ideal {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn primes(&self) -> Vec<Ideal> {
        self.components.iter().map(|c| c.prime.clone()).collect()
    }

    /// Inclusion-minimal primes among the associated primes.
    pub fn minimal_primes(&self) -> Result<Vec<Ideal>> {
        let primes = self.primes();
        let mut out = Vec::new();
        for (k, p) in primes.iter().enumerate() {
            let mut minimal = true;
            for (j, q) in primes.iter().enumerate() {
                if j != k && q.is_subset_of(p)? {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                out.push(p.clone());
            }
        }
        Ok(out)
    }

    /// Validates a decomposition supplied by the caller for an arbitrary
    /// ideal. Checked: the components intersect to `source`, each component
    /// has the stated radical, radicals are distinct, and no component can
    /// be dropped. Primality of the radicals and primariness of the
    /// components are taken on trust.
    pub fn from_components(source: &Ideal, components: Vec<PrimaryComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::invalid("a decomposition needs at least one component"));
        }
        if source.is_unit() {
            return Err(Error::invalid("the unit ideal has no primary decomposition"));
        }
        for c in &components {
            if !c.component.ring().same_base(source.ring()) || !c.prime.ring().same_base(source.ring()) {
                return Err(Error::RingMismatch);
            }
            if c.prime.is_unit() {
                return Err(Error::invalid(format!("radical {} is not proper", c.prime)));
            }
            if !c.component.is_subset_of(&c.prime)? {
                return Err(Error::invalid(format!(
                    "component {} is not contained in its radical {}",
                    c.component, c.prime
                )));
            }
            for g in c.prime.gb() {
                if !c.component.radical_contains(g)? {
                    return Err(Error::invalid(format!(
                        "{g} lies in {} but not in the radical of {}",
                        c.prime, c.component
                    )));
                }
            }
        }
        for (i, a) in components.iter().enumerate() {
            if components[i + 1..].iter().any(|b| b.prime == a.prime) {
                return Err(Error::invalid(format!("prime {} occurs twice", a.prime)));
            }
        }
        let all = intersect_all(source.ring(), components.iter().map(|c| &c.component))?;
        if all != *source {
            return Err(Error::invalid(format!(
                "components intersect to {all}, not {source}"
            )));
        }
        for k in 0..components.len() {
            let rest = intersect_all(
                source.ring(),
                components
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, c)| &c.component),
            )?;
            if rest == *source {
                return Err(Error::invalid(format!(
                    "component {} is redundant",
                    components[k].component
                )));
            }
        }
        let mut components = components;
        sort_components(&mut components);
        Ok(PrimaryDecomposition {
            components,
            source: source.clone(),
        })
    }
}

/// Intersection of ideals; the empty intersection is the unit ideal.
pub fn intersect_all<'a, I>(ring: &Arc<Ring>, ideals: I) -> Result<Ideal>
where
    I: IntoIterator<Item = &'a Ideal>,
{
    let mut acc = Ideal::unit(ring);
    for i in ideals {
        acc = acc.intersect(i)?;
    }
    Ok(acc)
}

/// Product of ideals; the empty product is the unit ideal.
pub fn product_all<'a, I>(ring: &Arc<Ring>, ideals: I) -> Result<Ideal>
where
    I: IntoIterator<Item = &'a Ideal>,
{
    let mut acc = Ideal::unit(ring);
    for i in ideals {
        acc = acc.product(i)?;
    }
    Ok(acc)
}

fn sort_components(components: &mut [PrimaryComponent]) {
    components.sort_by_cached_key(|c| (c.prime.canonical_key(), c.component.canonical_key()));
}

/// Minimal monomial generators of a monomial ideal.
pub fn monomial_generators(ideal: &Ideal) -> Result<Vec<Monomial>> {
    if !ideal.is_monomial() {
        return Err(Error::invalid(format!("{ideal} is not a monomial ideal")));
    }
    Ok(ideal.leading_monomials())
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), m.clone()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

fn monomial_meet(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    minimalize(a.iter().flat_map(|u| b.iter().map(move |v| u.lcm(v))).collect())
}

// pure powers x_i^e, indexed by variable
fn as_pure_powers(gens: &[Monomial]) -> Option<BTreeMap<usize, u32>> {
    let mut out = BTreeMap::new();
    for m in gens {
        let mut support = m.support();
        let i = support.next()?;
        if support.next().is_some() {
            return None;
        }
        out.insert(i, m.exponents()[i]);
    }
    Some(out)
}

fn split(gens: Vec<Monomial>, out: &mut Vec<Vec<Monomial>>) {
    let mixed = gens.iter().find(|m| m.support().nth(1).is_some()).cloned();
    let Some(m) = mixed else {
        out.push(gens);
        return;
    };
    let i = m.support().next().unwrap();
    let u = Monomial::new(
        (0..m.nvars())
            .map(|k| if k == i { m.exponents()[i] } else { 0 })
            .collect(),
    );
    let v = m.checked_div(&u).unwrap();
    for piece in [u, v] {
        let mut next = gens.clone();
        next.push(piece);
        split(minimalize(next), out);
    }
}

// irreducible C' ⊆ C iff every x_i^a in C' has some x_i^b in C with b <= a
fn irreducible_contains(big: &BTreeMap<usize, u32>, small: &BTreeMap<usize, u32>) -> bool {
    small.iter().all(|(i, a)| big.get(i).is_some_and(|b| b <= a))
}

fn irreducible_pieces(ideal: &Ideal) -> Result<Vec<Vec<Monomial>>> {
    let gens = monomial_generators(ideal)?;
    if ideal.is_unit() {
        return Err(Error::invalid("the unit ideal has no irreducible decomposition"));
    }
    if ideal.is_zero() {
        return Err(Error::invalid(
            "the zero ideal is not a monomial ideal with generators",
        ));
    }
    let mut raw = Vec::new();
    split(gens, &mut raw);
    let powers: Vec<BTreeMap<usize, u32>> = raw
        .iter()
        .map(|g| as_pure_powers(g).expect("split ends in pure powers"))
        .collect();
    // drop duplicates and every component that contains another one
    let mut keep: Vec<usize> = Vec::new();
    for k in 0..raw.len() {
        let dominated = (0..raw.len()).any(|j| {
            j != k
                && irreducible_contains(&powers[k], &powers[j])
                && (!irreducible_contains(&powers[j], &powers[k]) || j < k)
        });
        if !dominated {
            keep.push(k);
        }
    }
    let mut out: Vec<Vec<Monomial>> = keep.into_iter().map(|k| raw[k].clone()).collect();
    out.sort();
    Ok(out)
}

/// Irredundant irreducible decomposition of a proper nonzero monomial
/// ideal; each component is generated by pure powers of variables.
pub fn irreducible_decomposition(ideal: &Ideal) -> Result<Vec<Ideal>> {
    let mut out: Vec<Ideal> = irreducible_pieces(ideal)?
        .iter()
        .map(|g| Ideal::from_monomials(ideal.ring(), g))
        .collect();
    crate::groebner::sort_ideals(&mut out);
    Ok(out)
}

/// Primary decomposition of a proper monomial ideal (or the zero ideal,
/// which is prime).
pub fn primary_decomposition(ideal: &Ideal) -> Result<PrimaryDecomposition> {
    let ring = ideal.ring();
    if ideal.is_unit() {
        return Err(Error::invalid("the unit ideal has no primary decomposition"));
    }
    if ideal.is_zero() {
        let zero = Ideal::zero(ring);
        return Ok(PrimaryDecomposition {
            components: vec![PrimaryComponent {
                component: zero.clone(),
                prime: zero,
            }],
            source: ideal.clone(),
        });
    }
    let pieces = irreducible_pieces(ideal)?;
    let mut by_radical: BTreeMap<Vec<usize>, Vec<Monomial>> = BTreeMap::new();
    for piece in pieces {
        let support: Vec<usize> = piece.iter().flat_map(|m| m.support()).collect();
        by_radical
            .entry(support)
            .and_modify(|acc| *acc = monomial_meet(acc, &piece))
            .or_insert(piece);
    }
    let mut groups: Vec<(Vec<usize>, Vec<Monomial>)> = by_radical.into_iter().collect();
    let source = minimalize(monomial_generators(ideal)?);
    // drop-one retest
    let mut k = 0;
    while k < groups.len() {
        let rest = meet_except(&groups, Some(k), ring.nvars());
        if groups.len() > 1 && rest == source {
            groups.remove(k);
        } else {
            k += 1;
        }
    }
    if meet_except(&groups, None, ring.nvars()) != source {
        return Err(Error::TheoremViolation(format!(
            "primary components do not intersect back to {ideal}"
        )));
    }
    let mut components: Vec<PrimaryComponent> = groups
        .into_iter()
        .map(|(vars, gens)| PrimaryComponent {
            component: Ideal::from_monomials(ring, &gens),
            prime: Ideal::from_variables(ring, &vars),
        })
        .collect();
    sort_components(&mut components);
    Ok(PrimaryDecomposition {
        components,
        source: ideal.clone(),
    })
}

fn meet_except(groups: &[(Vec<usize>, Vec<Monomial>)], skip: Option<usize>, n: usize) -> Vec<Monomial> {
    groups
        .iter()
        .enumerate()
        .filter(|(j, _)| Some(*j) != skip)
        .fold(vec![Monomial::one(n)], |acc, (_, (_, g))| monomial_meet(&acc, g))
}

pub fn associated_primes(ideal: &Ideal) -> Result<Vec<Ideal>> {
    Ok(primary_decomposition(ideal)?.primes())
}

pub fn minimal_primes(ideal: &Ideal) -> Result<Vec<Ideal>> {
    primary_decomposition(ideal)?.minimal_primes()
}

/// Radical of a monomial ideal: squarefree parts of the generators.
pub fn monomial_radical(ideal: &Ideal) -> Result<Ideal> {
    let gens = monomial_generators(ideal)?;
    let rad = minimalize(gens.iter().map(|m| m.radical()).collect());
    Ok(Ideal::from_monomials(ideal.ring(), &rad))
}

/// Variables generating a monomial prime, or `None` if the ideal is not of
/// that form.
pub fn prime_variables(prime: &Ideal) -> Option<Vec<usize>> {
    let gens = monomial_generators(prime).ok()?;
    let mut vars = Vec::new();
    for m in gens {
        if m.degree() != 1 {
            return None;
        }
        vars.push(m.support().next().unwrap());
    }
    vars.sort_unstable();
    Some(vars)
}
