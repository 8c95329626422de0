use std::fmt;
use std::sync::{Arc, OnceLock};

use super::{groebner_basis, interreduce};
use crate::error::{Error, Result};
use crate::ring::{reduce, Monomial, MonomialOrder, Polynomial, Ring};

/// An ideal of a polynomial ring, given by generators. The reduced Gröbner
/// basis for the ring's order is computed on first use and cached.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Ideal> {
        if generators.iter().any(|g| !g.ring().same_base(ring)) {
            return Err(Error::RingMismatch);
        }
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.reorder(ring))
            .collect();
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            gb: OnceLock::new(),
        })
    }

    /// Wraps a list already known to be the reduced basis in `ring`'s order.
    fn from_reduced(ring: &Arc<Ring>, gb: Vec<Polynomial>) -> Ideal {
        let cell = OnceLock::new();
        let _ = cell.set(gb.clone());
        Ideal {
            ring: ring.clone(),
            generators: gb,
            gb: cell,
        }
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::from_reduced(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal::from_reduced(ring, vec![Polynomial::one(ring)])
    }

    /// The irrelevant ideal generated by all variables.
    pub fn maximal(ring: &Arc<Ring>) -> Ideal {
        Ideal::from_variables(ring, &(0..ring.nvars()).collect::<Vec<_>>())
    }

    /// The monomial prime generated by the listed variables.
    pub fn from_variables(ring: &Arc<Ring>, vars: &[usize]) -> Ideal {
        let mut vars = vars.to_vec();
        vars.sort_unstable();
        vars.dedup();
        let gens = vars.iter().map(|&i| Polynomial::var(ring, i)).collect();
        Ideal::from_reduced(ring, gens)
    }

    pub fn from_monomials(ring: &Arc<Ring>, monomials: &[Monomial]) -> Ideal {
        let gens = monomials
            .iter()
            .map(|m| Polynomial::monomial(ring, m.clone()))
            .collect();
        Ideal::new(ring, gens).expect("same ring")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced Gröbner basis under the ring's order.
    pub fn gb(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| {
            let gb = interreduce(groebner_basis(self.generators.clone()));
            debug_assert!(self.generators.iter().all(|g| reduce(g, &gb).is_zero()));
            gb
        })
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().first().is_some_and(|g| g.is_unit())
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gb()
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    /// Generated by monomials (equivalently: its reduced basis consists of
    /// monomials).
    pub fn is_monomial(&self) -> bool {
        self.gb().iter().all(|g| g.is_monomial())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gb().iter().all(|g| g.is_homogeneous())
    }

    fn check_ring(&self, other: &Ring) -> Result<()> {
        if self.ring.same_base(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Ideal membership via normal form against the reduced basis.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.check_ring(f.ring())?;
        Ok(reduce(&f.reorder(&self.ring), self.gb()).is_zero())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_ring(f.ring())?;
        Ok(reduce(&f.reorder(&self.ring), self.gb()))
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(&other.ring)?;
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.ring)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.ring)?;
        let (a, b) = (self.gb(), other.gb());
        let gens = a
            .iter()
            .flat_map(|f| b.iter().map(move |g| f.mul(&g.reorder(f.ring()))))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ k[remaining variables]`, via a block order eliminating `vars`.
    /// The generators returned do not involve any of `vars`.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        if let Some(v) = vars.iter().find(|&&v| v >= self.ring.nvars()) {
            return Err(Error::invalid(format!("variable index {v} out of range")));
        }
        let ering = self.ring.with_order(MonomialOrder::elimination(vars.to_vec()));
        let gens = self.generators.iter().map(|g| g.reorder(&ering)).collect();
        let gb = interreduce(groebner_basis(gens));
        let kept = gb
            .into_iter()
            .filter(|g| !g.involves_any(vars))
            .map(|g| g.reorder(&self.ring))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// `I ∩ J` as `(t·I + (1−t)·J) ∩ R`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit() {
            return Ok(other.clone().reordered(&self.ring));
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let n = self.ring.nvars();
        let big = self.ring.extended(1, MonomialOrder::elimination(vec![n]));
        let t = Polynomial::var(&big, n);
        let one_minus_t = Polynomial::one(&big).sub(&t);
        let mut gens = Vec::new();
        for f in self.gb() {
            gens.push(f.embed(&big).mul(&t));
        }
        for g in other.gb() {
            gens.push(g.embed(&big).mul(&one_minus_t));
        }
        let gb = interreduce(groebner_basis(gens));
        let kept = gb.iter().filter_map(|g| g.restrict(&self.ring)).collect();
        Ok(Ideal::from_reduced(&self.ring, interreduce(kept)))
    }

    /// `I : J`, intersecting `I : g` over the reduced basis of `J`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.ring)?;
        if other.is_zero() {
            return Err(Error::invalid("quotient by the zero ideal"));
        }
        let mut acc = Ideal::unit(&self.ring);
        for g in other.gb() {
            let q = self.quotient_element(&g.reorder(&self.ring))?;
            acc = acc.intersect(&q)?;
        }
        Ok(acc)
    }

    /// `I : g = (1/g)·(I ∩ (g))`.
    pub fn quotient_element(&self, g: &Polynomial) -> Result<Ideal> {
        self.check_ring(g.ring())?;
        if g.is_zero() {
            return Err(Error::invalid("quotient by zero"));
        }
        let g = g.reorder(&self.ring);
        if self.contains(&g)? {
            return Ok(Ideal::unit(&self.ring));
        }
        let principal = Ideal::new(&self.ring, vec![g.clone()])?;
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gb()
            .iter()
            .map(|h| h.exact_div(&g).expect("element of (g) is divisible by g"))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// `I : J^∞`, iterating quotients until the reduced basis stabilizes.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.ring)?;
        if other.is_zero() {
            return Err(Error::invalid("saturation by the zero ideal"));
        }
        let mut current = self.clone();
        loop {
            let next = current.quotient(other)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Saturation through one auxiliary variable per generator:
    /// `I : g^∞ = (I + (1 − t·g)) ∩ R`, intersected over the basis of `J`.
    /// Kept as an independent check on [`Ideal::saturate`].
    pub fn saturate_by_rabinowitsch(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.ring)?;
        if other.is_zero() {
            return Err(Error::invalid("saturation by the zero ideal"));
        }
        let n = self.ring.nvars();
        let big = self.ring.extended(1, MonomialOrder::elimination(vec![n]));
        let t = Polynomial::var(&big, n);
        let mut acc = Ideal::unit(&self.ring);
        for g in other.gb() {
            let mut gens: Vec<Polynomial> = self.gb().iter().map(|f| f.embed(&big)).collect();
            gens.push(Polynomial::one(&big).sub(&t.mul(&g.embed(&big))));
            let gb = interreduce(groebner_basis(gens));
            let kept = gb.iter().filter_map(|h| h.restrict(&self.ring)).collect();
            acc = acc.intersect(&Ideal::from_reduced(&self.ring, interreduce(kept)))?;
        }
        Ok(acc)
    }

    /// `f ∈ Rad(I)` iff `1 ∈ I + (1 − t·f)` in `R[t]`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        self.check_ring(f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        let n = self.ring.nvars();
        let big = self.ring.extended(1, MonomialOrder::GrevLex);
        let t = Polynomial::var(&big, n);
        let mut gens: Vec<Polynomial> = self.gb().iter().map(|g| g.embed(&big)).collect();
        gens.push(Polynomial::one(&big).sub(&t.mul(&f.reorder(&self.ring).embed(&big))));
        let gb = groebner_basis(gens);
        Ok(gb.iter().any(|g| g.is_unit()))
    }

    /// Krull dimension of `R/I`: the largest set of variables none of whose
    /// subsets carries a leading monomial of the basis. The unit ideal has
    /// dimension −1.
    pub fn krull_dim(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let n = self.ring.nvars();
        assert!(n <= 63, "dimension computation supports at most 63 variables");
        let supports: Vec<u64> = self
            .leading_monomials()
            .iter()
            .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
            .collect();
        let mut best = 0;
        for set in 0u64..(1u64 << n) {
            let size = set.count_ones() as i64;
            if size > best && supports.iter().all(|&s| s & !set != 0) {
                best = size;
            }
        }
        best
    }

    fn reordered(self, ring: &Arc<Ring>) -> Ideal {
        if *self.ring == **ring {
            return self;
        }
        Ideal::new(ring, self.generators).expect("same base ring")
    }

    /// Sort key giving a reproducible order on ideals.
    pub fn canonical_key(&self) -> Vec<String> {
        self.gb().iter().map(|g| g.to_string()).collect()
    }

    /// Generators of the reduced basis, printed.
    pub fn to_strings(&self) -> Vec<String> {
        self.canonical_key()
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_base(&other.ring) && {
            let other = if *self.ring.order() == *other.ring.order() {
                other.clone()
            } else {
                other.clone().reordered(&self.ring)
            };
            self.gb() == other.gb()
        }
    }
}

impl Eq for Ideal {}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gb().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        if self.gb().is_empty() {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

/// Sorts ideals by their printed reduced bases.
pub fn sort_ideals(ideals: &mut [Ideal]) {
    ideals.sort_by_cached_key(|i| i.canonical_key());
}
