use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::field::{format_coeff, is_negative, is_one, Coeff};
use super::{Monomial, MonomialOrder, Ring};
use crate::error::{Error, Result};

/// A polynomial with terms sorted strictly descending under its ring's
/// order. No zero coefficients are stored; the zero polynomial has no terms.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Arc<Ring>, v: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(v))
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i), Coeff::one())
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial) -> Self {
        Self::term(ring, m, Coeff::one())
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length mismatch");
        let c = ring.field().normalize(&c);
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a canonical polynomial from arbitrary terms: sorts, merges
    /// repeated monomials, maps coefficients into the field, drops zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<(Monomial, Coeff)>) -> Self {
        let field = ring.field();
        let order = ring.order();
        let mut terms: Vec<(Monomial, Coeff)> = terms
            .into_iter()
            .map(|(m, c)| {
                assert_eq!(m.nvars(), ring.nvars(), "monomial length mismatch");
                (m, field.normalize(&c))
            })
            .collect();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// A single term (with any nonzero coefficient).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    /// `self + c * m * g`, computed by a single sorted merge.
    pub fn add_scaled(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        debug_assert!(*self.ring == *g.ring);
        let field = self.ring.field();
        let order = self.ring.order();
        if c.is_zero() || g.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut shifted = g
            .terms
            .iter()
            .map(|(gm, gc)| (gm.mul(m), field.mul(gc, c)))
            .peekable();
        while i < self.terms.len() {
            let Some((sm, _)) = shifted.peek() else { break };
            match order.compare(&self.terms[i].0, sm) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => out.push(shifted.next().unwrap()),
                Ordering::Equal => {
                    let (sm, sc) = shifted.next().unwrap();
                    let s = field.add(&self.terms[i].1, &sc);
                    if !s.is_zero() {
                        out.push((sm, s));
                    }
                    i += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(shifted);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(&Coeff::one(), &Monomial::one(self.ring.nvars()), other)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let minus_one = self.ring.field().neg(&Coeff::one());
        self.add_scaled(&minus_one, &Monomial::one(self.ring.nvars()), other)
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .fold(Polynomial::zero(&self.ring), |acc, (m, c)| {
                acc.add_scaled(c, m, big)
            })
    }

    /// Multiplication by a term; keeps the order since orders are
    /// compatible with multiplication.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if is_one(lc) => self.clone(),
            Some(lc) => {
                let inv = self.ring.field().inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// The same polynomial viewed in a ring with the same variables but
    /// possibly a different order.
    pub fn reorder(&self, ring: &Arc<Ring>) -> Polynomial {
        assert!(self.ring.same_base(ring), "reorder across different rings");
        if *self.ring.order() == *ring.order() {
            return Polynomial {
                ring: ring.clone(),
                terms: self.terms.clone(),
            };
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn in_order(&self, order: MonomialOrder) -> Polynomial {
        self.reorder(&self.ring.with_order(order))
    }

    /// Image in a ring with extra trailing variables.
    pub(crate) fn embed(&self, big: &Arc<Ring>) -> Polynomial {
        let extra = big.nvars() - self.ring.nvars();
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.extended(extra), c.clone()))
            .collect();
        let order = big.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial {
            ring: big.clone(),
            terms,
        }
    }

    /// Inverse of [`embed`]: `None` if a trailing variable occurs.
    pub(crate) fn restrict(&self, small: &Arc<Ring>) -> Option<Polynomial> {
        let n = small.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.truncated(n)?, c.clone()));
        }
        let order = small.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Some(Polynomial {
            ring: small.clone(),
            terms,
        })
    }

    /// True if some term involves one of the listed variables.
    pub fn involves_any(&self, vars: &[usize]) -> bool {
        self.terms
            .iter()
            .any(|(m, _)| vars.iter().any(|&v| m.exponents()[v] > 0))
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Option<Polynomial> {
        let field = self.ring.field();
        let (glm, glc) = g.leading_term()?;
        let mut p = self.clone();
        let mut quotient = Vec::new();
        while let Some((lm, lc)) = p.terms.first() {
            let q = lm.checked_div(glm)?;
            let c = field.div(lc, glc).expect("nonzero");
            p = p.add_scaled(&field.neg(&c), &q, g);
            quotient.push((q, c));
        }
        // quotient terms come out in descending order already
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: quotient,
        })
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Coeff)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }
}

/// Remainder of `f` on division by `divisors`, all assumed to live in the
/// same ring (same order). Reducers are tried in list order; the leading
/// term is always reduced first.
pub(crate) fn reduce(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let field = f.ring.field();
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((lm, lc)) = p.terms.first() {
        let hit = divisors.iter().find_map(|g| {
            let (glm, glc) = g.leading_term()?;
            lm.checked_div(glm).map(|q| (q, glc, g))
        });
        match hit {
            Some((q, glc, g)) => {
                let c = field.div(lc, glc).expect("nonzero");
                p = p.add_scaled(&field.neg(&c), &q, g);
            }
            None => rem.push(p.pop_leading().unwrap()),
        }
    }
    Polynomial::from_sorted(&f.ring, rem)
}

/// Multivariate division remainder of `f` by `divisors` under `order`.
/// The result is returned in `f`'s ring.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    if divisors.iter().any(|g| !g.ring.same_base(&f.ring)) {
        return Err(Error::RingMismatch);
    }
    let ring = f.ring.with_order(order.clone());
    let gs: Vec<Polynomial> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.reorder(&ring))
        .collect();
    Ok(reduce(&f.reorder(&ring), &gs).reorder(&f.ring))
}

/// `(lcm/LT(f))·f − (lcm/LT(g))·g` with monic leading terms.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    if !f.ring.same_base(&g.ring) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() || g.is_zero() {
        return Err(Error::invalid("S-polynomial of a zero polynomial"));
    }
    let ring = f.ring.with_order(order.clone());
    let (f, g) = (f.reorder(&ring), g.reorder(&ring));
    Ok(spoly(&f, &g).reorder(&f.ring))
}

pub(crate) fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.ring.field();
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let left = f.mul_term(&l.checked_div(fm).unwrap(), &field.inv(fc).unwrap());
    let right_c = field.neg(&field.inv(gc).unwrap());
    left.add_scaled(&right_c, &l.checked_div(gm).unwrap(), g)
}

pub(crate) fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", format_coeff(&abs))?;
            } else if is_one(&abs) {
                write!(f, "{}", format_monomial(m, self.ring.names()))?;
            } else {
                write!(
                    f,
                    "{}*{}",
                    format_coeff(&abs),
                    format_monomial(m, self.ring.names())
                )?;
            }
        }
        Ok(())
    }
}
