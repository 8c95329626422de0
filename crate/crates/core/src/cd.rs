//! Cohomological-dimension filtration of a cyclic module `M = R/I` and the
//! annihilator of the top local cohomology module `H^d_a(M)`.
//!
//! Submodules of `M` are represented by ideals `K` with `I ⊆ K ⊆ R`
//! (standing for `K/I`), so `Ann(M/(K/I)) = K`. The maximal ideal of the
//! local theory is replaced by the irrelevant ideal of the graded ring; all
//! computations that depend on `a` require homogeneous data.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{sort_ideals, Ideal};
use crate::primdec::{
    associated_primes, intersect_all, monomial_radical, primary_decomposition, product_all,
    PrimaryDecomposition,
};
use crate::ring::{Polynomial, Ring};

/// The module `R/I` for a proper ideal `I`.
#[derive(Clone, Debug)]
pub struct CyclicModule {
    ideal: Ideal,
    dim: i64,
}

impl CyclicModule {
    pub fn new(ideal: Ideal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::invalid("R/I is the zero module for I = (1)"));
        }
        let dim = ideal.krull_dim();
        Ok(CyclicModule { ideal, dim })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.ideal.ring()
    }

    /// Krull dimension `d` of `R/I`.
    pub fn dim(&self) -> i64 {
        self.dim
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CdTag {
    /// `cd(a, R/p) = d`.
    Top,
    /// `cd(a, R/p) < d`.
    Lower,
}

/// Where the per-component cohomological dimensions come from.
#[derive(Clone, Debug)]
pub enum CdSource {
    /// `a` is the irrelevant ideal, so `cd(a, R/p) = dim R/p`.
    Dimension,
    /// Values supplied by the caller, one per decomposition component.
    User(Vec<i64>),
    /// Only decide whether each component reaches the top degree.
    TopSplit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CdValues {
    Exact(Vec<i64>),
    TopSplit(Vec<CdTag>),
}

/// `cd(a, R/p_j)` for every component of a decomposition of `I`.
#[derive(Clone, Debug)]
pub struct CdTable {
    decomposition: PrimaryDecomposition,
    values: CdValues,
}

impl CdTable {
    pub fn decomposition(&self) -> &PrimaryDecomposition {
        &self.decomposition
    }

    pub fn values(&self) -> &CdValues {
        &self.values
    }

    /// `c = cd(a, M)`, the largest value; only known for exact tables.
    pub fn cd(&self) -> Option<i64> {
        match &self.values {
            CdValues::Exact(v) => v.iter().copied().max(),
            CdValues::TopSplit(_) => None,
        }
    }

    /// Whether component `j` lies in the top stratum: `cd = c` for exact
    /// tables, tagged `Top` otherwise.
    pub fn is_top(&self, j: usize) -> bool {
        match &self.values {
            CdValues::Exact(v) => Some(v[j]) == self.cd(),
            CdValues::TopSplit(tags) => tags[j] == CdTag::Top,
        }
    }
}

fn require_homogeneous(ideal: &Ideal, what: &str) -> Result<()> {
    if ideal.is_homogeneous() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "{what} {ideal} is not homogeneous; the attached-prime criterion is only used for graded data"
        )))
    }
}

fn check_decomposition(module: &CyclicModule, dec: &PrimaryDecomposition) -> Result<()> {
    if dec.source() != module.ideal() {
        return Err(Error::invalid(format!(
            "decomposition is of {}, not of {}",
            dec.source(),
            module.ideal()
        )));
    }
    Ok(())
}

/// `dim R/p = d` and `a + p` is primary to the irrelevant ideal, the graded
/// form of `Rad(a + p) = m`. When true, `cd(a, R/p) = d`.
pub fn top_prime_test(a: &Ideal, prime: &Ideal, d: i64) -> Result<bool> {
    require_homogeneous(a, "ideal a")?;
    require_homogeneous(prime, "prime")?;
    if prime.krull_dim() != d {
        return Ok(false);
    }
    Ok(a.sum(prime)?.krull_dim() == 0)
}

/// Attached primes of `H^d_a(M)`: the top-dimensional associated primes
/// `p` with `a + p` primary to the irrelevant ideal.
pub fn attached_top(module: &CyclicModule, a: &Ideal, dec: &PrimaryDecomposition) -> Result<Vec<Ideal>> {
    check_decomposition(module, dec)?;
    require_homogeneous(module.ideal(), "ideal I")?;
    let mut out = Vec::new();
    for c in dec.components() {
        if top_prime_test(a, &c.prime, module.dim())? {
            out.push(c.prime.clone());
        }
    }
    sort_ideals(&mut out);
    Ok(out)
}

/// `H^d_a(M) ≠ 0`, decided by nonemptiness of the attached primes.
pub fn h_top_nonzero(module: &CyclicModule, a: &Ideal, dec: &PrimaryDecomposition) -> Result<bool> {
    Ok(!attached_top(module, a, dec)?.is_empty())
}

pub fn cd_table(
    module: &CyclicModule,
    a: &Ideal,
    dec: &PrimaryDecomposition,
    source: CdSource,
) -> Result<CdTable> {
    check_decomposition(module, dec)?;
    let values = match source {
        CdSource::Dimension => {
            if *a != Ideal::maximal(a.ring()) {
                return Err(Error::invalid(format!(
                    "dimension oracle needs a = (all variables), got {a}"
                )));
            }
            CdValues::Exact(dec.components().iter().map(|c| c.prime.krull_dim()).collect())
        }
        CdSource::User(values) => {
            validate_user_table(module, a, dec, &values)?;
            CdValues::Exact(values)
        }
        CdSource::TopSplit => {
            require_homogeneous(module.ideal(), "ideal I")?;
            let mut tags = Vec::with_capacity(dec.len());
            for c in dec.components() {
                tags.push(if top_prime_test(a, &c.prime, module.dim())? {
                    CdTag::Top
                } else {
                    CdTag::Lower
                });
            }
            CdValues::TopSplit(tags)
        }
    };
    Ok(CdTable {
        decomposition: dec.clone(),
        values,
    })
}

fn validate_user_table(
    module: &CyclicModule,
    a: &Ideal,
    dec: &PrimaryDecomposition,
    values: &[i64],
) -> Result<()> {
    if values.len() != dec.len() {
        return Err(Error::InconsistentTable(format!(
            "{} values for {} components",
            values.len(),
            dec.len()
        )));
    }
    let comps = dec.components();
    for (c, &v) in comps.iter().zip(values) {
        let dim = c.prime.krull_dim();
        if v < 0 || v > dim {
            return Err(Error::InconsistentTable(format!(
                "cd value {v} for {} outside [0, {dim}]",
                c.prime
            )));
        }
    }
    // cd(a, R/q) <= cd(a, R/p) whenever p ⊆ q
    for (j, cj) in comps.iter().enumerate() {
        for (k, ck) in comps.iter().enumerate() {
            if j != k && cj.prime.is_subset_of(&ck.prime)? && values[k] > values[j] {
                return Err(Error::InconsistentTable(format!(
                    "{} ⊆ {} but cd values {} < {}",
                    cj.prime, ck.prime, values[j], values[k]
                )));
            }
        }
    }
    let graded = a.is_homogeneous() && comps.iter().all(|c| c.prime.is_homogeneous());
    if graded {
        let d = module.dim();
        for (c, &v) in comps.iter().zip(values) {
            let top = top_prime_test(a, &c.prime, d)?;
            if top && v != d {
                return Err(Error::InconsistentTable(format!(
                    "{} meets the top-degree criterion, so its cd is {d}, not {v}",
                    c.prime
                )));
            }
            if !top && v == d {
                return Err(Error::InconsistentTable(format!(
                    "{} fails the top-degree criterion, so its cd is below {d}",
                    c.prime
                )));
            }
        }
    }
    Ok(())
}

/// One level `M_i = K_i/I` of the filtration with both of its witnesses.
#[derive(Clone, Debug)]
pub struct FiltrationLevel {
    pub index: i64,
    /// Product of the primes with `cd ≤ i`.
    pub a_product: Ideal,
    /// `I : a_i^∞`.
    pub by_saturation: Ideal,
    /// Intersection of the components with `cd > i`.
    pub by_intersection: Ideal,
}

impl FiltrationLevel {
    pub fn ideal(&self) -> &Ideal {
        &self.by_saturation
    }
}

#[derive(Clone, Debug)]
pub struct CdFiltration {
    pub module: CyclicModule,
    pub a: Ideal,
    pub table: CdTable,
    pub levels: Vec<FiltrationLevel>,
}

impl CdFiltration {
    pub fn cd(&self) -> i64 {
        self.table.cd().expect("filtrations are built from exact tables")
    }
}

fn exact_values(table: &CdTable) -> Result<&[i64]> {
    match table.values() {
        CdValues::Exact(v) => Ok(v),
        CdValues::TopSplit(_) => Err(Error::invalid("an exact cd table is required")),
    }
}

// I : J^∞ with the convention I : (0)^∞ = R
fn saturate_or_unit(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    if by.is_zero() {
        Ok(Ideal::unit(ideal.ring()))
    } else {
        ideal.saturate(by)
    }
}

/// Builds `M_0 ⊆ ... ⊆ M_c`, computing every level both as a saturation
/// and as an intersection of primary components; a disagreement is
/// reported as a theorem violation.
pub fn filtration(module: &CyclicModule, a: &Ideal, table: &CdTable) -> Result<CdFiltration> {
    check_decomposition(module, table.decomposition())?;
    let values = exact_values(table)?;
    let ring = module.ring();
    let comps = table.decomposition().components();
    let c = table.cd().unwrap_or(0);
    let mut levels = Vec::new();
    for i in 0..=c {
        let a_product = product_all(
            ring,
            comps
                .iter()
                .zip(values)
                .filter(|(_, &v)| v <= i)
                .map(|(c, _)| &c.prime),
        )?;
        let by_saturation = saturate_or_unit(module.ideal(), &a_product)?;
        let by_intersection = intersect_all(
            ring,
            comps
                .iter()
                .zip(values)
                .filter(|(_, &v)| v > i)
                .map(|(c, _)| &c.component),
        )?;
        if by_saturation != by_intersection {
            return Err(Error::TheoremViolation(format!(
                "level {i} of the filtration of R/{}: saturation gives {by_saturation}, \
                 intersection gives {by_intersection}",
                module.ideal()
            )));
        }
        levels.push(FiltrationLevel {
            index: i,
            a_product,
            by_saturation,
            by_intersection,
        });
    }
    for w in levels.windows(2) {
        if !w[0].ideal().is_subset_of(w[1].ideal())? {
            return Err(Error::TheoremViolation(format!(
                "filtration is not increasing at level {}",
                w[1].index
            )));
        }
    }
    if !levels.last().is_some_and(|l| l.ideal().is_unit()) {
        return Err(Error::TheoremViolation(
            "top filtration level is not all of M".into(),
        ));
    }
    Ok(CdFiltration {
        module: module.clone(),
        a: a.clone(),
        table: table.clone(),
        levels,
    })
}

/// The ideal `K` with `T(a, M) = K/I`: computed as `I : b^∞` for the product
/// `b` of the non-top primes and checked against the intersection of the
/// top components.
pub fn t_submodule(module: &CyclicModule, _a: &Ideal, table: &CdTable) -> Result<Ideal> {
    check_decomposition(module, table.decomposition())?;
    let comps = table.decomposition().components();
    let top: Vec<bool> = (0..comps.len()).map(|j| table.is_top(j)).collect();
    if !top.iter().any(|&t| t) {
        return Err(Error::HypothesisNotMet(format!(
            "no component of R/{} reaches the top degree, H^d vanishes",
            module.ideal()
        )));
    }
    let ring = module.ring();
    let b = product_all(
        ring,
        comps.iter().zip(&top).filter(|(_, &t)| !t).map(|(c, _)| &c.prime),
    )?;
    let by_saturation = saturate_or_unit(module.ideal(), &b)?;
    let by_intersection = intersect_all(
        ring,
        comps
            .iter()
            .zip(&top)
            .filter(|(_, &t)| t)
            .map(|(c, _)| &c.component),
    )?;
    if by_saturation != by_intersection {
        return Err(Error::TheoremViolation(format!(
            "T-submodule of R/{}: saturation gives {by_saturation}, intersection gives {by_intersection}",
            module.ideal()
        )));
    }
    Ok(by_saturation)
}

#[derive(Clone, Debug)]
pub struct TopCohomologyReport {
    pub d: i64,
    pub nonvanishing: bool,
    pub attached: Vec<Ideal>,
    /// `K` with `T(a, M) = K/I`; absent when `H^d_a(M) = 0`.
    pub t_ideal: Option<Ideal>,
    pub annihilator: Option<Ideal>,
    pub radical_ann: Option<Ideal>,
    /// `p + a` for every top prime `p`; `Supp H^d_a(M)` lies in their union
    /// of zero sets.
    pub supp_bound: Vec<Ideal>,
}

/// Annihilator of `H^d_a(R/I)` as the annihilator of `M/T(a, M)`, i.e. the
/// intersection of the primary components whose primes are attached.
pub fn ann_top(module: &CyclicModule, a: &Ideal, dec: &PrimaryDecomposition) -> Result<TopCohomologyReport> {
    let attached = attached_top(module, a, dec)?;
    let d = module.dim();
    if attached.is_empty() {
        return Ok(TopCohomologyReport {
            d,
            nonvanishing: false,
            attached,
            t_ideal: None,
            annihilator: None,
            radical_ann: None,
            supp_bound: Vec::new(),
        });
    }
    let table = cd_table(module, a, dec, CdSource::TopSplit)?;
    let k = t_submodule(module, a, &table)?;
    let top: Vec<&Ideal> = dec
        .components()
        .iter()
        .enumerate()
        .filter(|(j, _)| table.is_top(*j))
        .map(|(_, c)| &c.prime)
        .collect();
    let radical_ann = intersect_all(module.ring(), top.iter().copied())?;
    if k.is_monomial() && monomial_radical(&k)? != radical_ann {
        return Err(Error::TheoremViolation(format!(
            "radical of the annihilator {k} differs from the intersection {radical_ann} of top primes"
        )));
    }
    let mut supp_bound = Vec::new();
    for p in &top {
        supp_bound.push(p.sum(a)?);
    }
    Ok(TopCohomologyReport {
        d,
        nonvanishing: true,
        attached,
        t_ideal: Some(k.clone()),
        annihilator: Some(k),
        radical_ann: Some(radical_ann),
        supp_bound,
    })
}

#[derive(Clone, Debug)]
pub struct LevelAss {
    pub index: i64,
    /// `Ass M_i`.
    pub submodule: Vec<Ideal>,
    /// `Ass M/M_i`.
    pub quotient: Vec<Ideal>,
    /// `Ass M_i/M_{i-1}`.
    pub graded_piece: Vec<Ideal>,
    /// `Ass R/K_i` from a fresh decomposition, when `I` is monomial.
    pub quotient_recomputed: Option<Vec<Ideal>>,
}

/// Associated primes along the filtration, read off the cd values. For
/// monomial `I` the quotient primes are recomputed from scratch and must
/// agree.
pub fn ass_filtration_report(filtration: &CdFiltration) -> Result<Vec<LevelAss>> {
    let values = exact_values(&filtration.table)?;
    let comps = filtration.table.decomposition().components();
    let pick = |f: &dyn Fn(i64) -> bool| {
        let mut v: Vec<Ideal> = comps
            .iter()
            .zip(values)
            .filter(|(_, &cd)| f(cd))
            .map(|(c, _)| c.prime.clone())
            .collect();
        sort_ideals(&mut v);
        v
    };
    let monomial = filtration.module.ideal().is_monomial();
    let mut out = Vec::new();
    for level in &filtration.levels {
        let i = level.index;
        let quotient = pick(&|cd| cd > i);
        let quotient_recomputed = if monomial {
            let k = level.ideal();
            let mut fresh = if k.is_unit() {
                Vec::new()
            } else {
                associated_primes(k)?
            };
            sort_ideals(&mut fresh);
            if fresh != quotient {
                return Err(Error::TheoremViolation(format!(
                    "Ass(M/M_{i}) predicted as {} but R/{k} has associated primes {}",
                    fmt_list(&quotient),
                    fmt_list(&fresh)
                )));
            }
            Some(fresh)
        } else {
            None
        };
        out.push(LevelAss {
            index: i,
            submodule: pick(&|cd| cd <= i),
            quotient,
            graded_piece: pick(&|cd| cd == i),
            quotient_recomputed,
        });
    }
    Ok(out)
}

fn fmt_list(ideals: &[Ideal]) -> String {
    let parts: Vec<String> = ideals.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// One multiplier `x` checked against `H^d_a(xM) = 0 ⇔ x·H^d_a(M) = 0`.
#[derive(Clone, Debug)]
pub struct MultiplierCheck {
    pub element: Polynomial,
    pub in_annihilator: bool,
    /// `H^d_a(xM) ≠ 0`, with `xM ≅ R/(I : x)`.
    pub multiple_nonvanishing: bool,
}

impl MultiplierCheck {
    pub fn consistent(&self) -> bool {
        self.in_annihilator != self.multiple_nonvanishing
    }
}

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub multipliers: Vec<MultiplierCheck>,
    /// Every associated prime is attached.
    pub all_primes_attached: bool,
    pub annihilator_is_ideal: bool,
}

impl EquivalenceReport {
    pub fn all_pass(&self) -> bool {
        self.multipliers.iter().all(|m| m.consistent())
            && (!self.all_primes_attached || self.annihilator_is_ideal)
    }
}

// H^d_a(R/J) ≠ 0 for J = I : x, where R/J ≅ xM ⊆ M
fn multiple_nonvanishing(
    module: &CyclicModule,
    a: &Ideal,
    dec: &PrimaryDecomposition,
    colon: &Ideal,
) -> Result<bool> {
    if colon.is_unit() {
        return Ok(false);
    }
    let d = module.dim();
    if colon.is_monomial() {
        let sub = CyclicModule::new(colon.clone())?;
        if sub.dim() != d {
            return Ok(false);
        }
        let fresh = primary_decomposition(colon)?;
        return h_top_nonzero(&sub, a, &fresh);
    }
    // dim R/J = d forces every top prime of R/J to be a top prime of R/I
    // containing J
    for c in dec.components() {
        if top_prime_test(a, &c.prime, d)? && colon.is_subset_of(&c.prime)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Checks, on this instance, that `x` kills `H^d_a(M)` exactly when
/// `H^d_a(xM) = 0` (for the annihilator's generators and each probe), and
/// that the annihilator equals `I` when every associated prime is attached.
pub fn ann_equivalences(
    module: &CyclicModule,
    a: &Ideal,
    dec: &PrimaryDecomposition,
    probes: &[Polynomial],
) -> Result<EquivalenceReport> {
    let report = ann_top(module, a, dec)?;
    let Some(ann) = report.annihilator.as_ref() else {
        return Err(Error::HypothesisNotMet(format!(
            "H^{}_a(R/{}) vanishes",
            report.d,
            module.ideal()
        )));
    };
    let mut elements: Vec<Polynomial> = ann.gb().to_vec();
    elements.extend(probes.iter().filter(|p| !p.is_zero()).cloned());
    let mut multipliers = Vec::new();
    for x in elements {
        let colon = module.ideal().quotient_element(&x)?;
        multipliers.push(MultiplierCheck {
            in_annihilator: ann.contains(&x)?,
            multiple_nonvanishing: multiple_nonvanishing(module, a, dec, &colon)?,
            element: x,
        });
    }
    let mut all = dec.primes();
    sort_ideals(&mut all);
    let out = EquivalenceReport {
        multipliers,
        all_primes_attached: all == report.attached,
        annihilator_is_ideal: ann == module.ideal(),
    };
    if !out.all_pass() {
        let bad: Vec<String> = out
            .multipliers
            .iter()
            .filter(|m| !m.consistent())
            .map(|m| m.element.to_string())
            .collect();
        return Err(Error::TheoremViolation(format!(
            "annihilator equivalences fail for R/{} (multipliers: [{}], all primes attached: {}, annihilator = I: {})",
            module.ideal(),
            bad.join(", "),
            out.all_primes_attached,
            out.annihilator_is_ideal
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_polynomial(s, r).unwrap()).collect()).unwrap()
    }

    fn setup(vars: &[&str], gens: &[&str]) -> (Arc<Ring>, CyclicModule, PrimaryDecomposition) {
        let r = Ring::new(vars, 0).unwrap();
        let i = ideal(&r, gens);
        let dec = primary_decomposition(&i).unwrap();
        (r.clone(), CyclicModule::new(i).unwrap(), dec)
    }

    #[test]
    fn top_prime_examples() {
        let r = Ring::new(&["x", "y", "z"], 0).unwrap();
        let a = ideal(&r, &["x", "z"]);
        assert!(top_prime_test(&a, &ideal(&r, &["y"]), 2).unwrap());
        assert!(!top_prime_test(&a, &ideal(&r, &["x"]), 2).unwrap());
        let m = Ideal::maximal(&r);
        assert!(top_prime_test(&m, &ideal(&r, &["x"]), 2).unwrap());
        assert!(matches!(
            top_prime_test(&ideal(&r, &["x - 1"]), &ideal(&r, &["y"]), 2),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn attached_examples() {
        let (r, m, dec) = setup(&["x", "y", "z"], &["x*y"]);
        let a = ideal(&r, &["x", "z"]);
        assert_eq!(attached_top(&m, &a, &dec).unwrap(), vec![ideal(&r, &["y"])]);
        assert!(h_top_nonzero(&m, &a, &dec).unwrap());

        let (r, m, dec) = setup(&["x", "y"], &["x^2", "x*y"]);
        assert_eq!(
            attached_top(&m, &Ideal::maximal(&r), &dec).unwrap(),
            vec![ideal(&r, &["x"])]
        );

        let (r, m, dec) = setup(&["x"], &["0"]);
        assert_eq!(
            attached_top(&m, &ideal(&r, &["x"]), &dec).unwrap(),
            vec![Ideal::zero(&r)]
        );

        let (r, m, dec) = setup(&["x", "y"], &["x"]);
        assert!(!h_top_nonzero(&m, &ideal(&r, &["x"]), &dec).unwrap());
    }

    #[test]
    fn cd_table_examples() {
        let (r, m, dec) = setup(&["x", "y"], &["x^2", "x*y"]);
        let t = cd_table(&m, &Ideal::maximal(&r), &dec, CdSource::Dimension).unwrap();
        assert_eq!(t.values(), &CdValues::Exact(vec![1, 0]));
        assert!(cd_table(&m, &ideal(&r, &["x"]), &dec, CdSource::Dimension).is_err());

        let (r, m, dec) = setup(&["x", "y", "z"], &["x*y"]);
        let t = cd_table(&m, &ideal(&r, &["x", "z"]), &dec, CdSource::TopSplit).unwrap();
        assert_eq!(t.values(), &CdValues::TopSplit(vec![CdTag::Lower, CdTag::Top]));
    }

    #[test]
    fn user_tables_are_checked() {
        let (r, m, dec) = setup(&["x", "y", "z"], &["x*y"]);
        let a = ideal(&r, &["x", "z"]);
        // (x) fails the top test so its value must be below 2; (y) passes so it is 2
        assert!(cd_table(&m, &a, &dec, CdSource::User(vec![1, 2])).is_ok());
        assert!(matches!(
            cd_table(&m, &a, &dec, CdSource::User(vec![2, 2])),
            Err(Error::InconsistentTable(_))
        ));
        assert!(matches!(
            cd_table(&m, &a, &dec, CdSource::User(vec![1, 1])),
            Err(Error::InconsistentTable(_))
        ));
        assert!(matches!(
            cd_table(&m, &a, &dec, CdSource::User(vec![1])),
            Err(Error::InconsistentTable(_))
        ));
        assert!(matches!(
            cd_table(&m, &a, &dec, CdSource::User(vec![3, 2])),
            Err(Error::InconsistentTable(_))
        ));
        // embedded prime may not exceed the cd of the prime it contains
        let (r, m, dec) = setup(&["x", "y"], &["x^2", "x*y"]);
        let a = Ideal::maximal(&r);
        assert!(matches!(
            cd_table(&m, &a, &dec, CdSource::User(vec![0, 1])),
            Err(Error::InconsistentTable(_))
        ));
    }

    #[test]
    fn filtration_examples() {
        let (r, m, dec) = setup(&["x", "y"], &["x^2", "x*y"]);
        let a = Ideal::maximal(&r);
        let t = cd_table(&m, &a, &dec, CdSource::Dimension).unwrap();
        let f = filtration(&m, &a, &t).unwrap();
        let levels: Vec<Ideal> = f.levels.iter().map(|l| l.ideal().clone()).collect();
        assert_eq!(levels, vec![ideal(&r, &["x"]), Ideal::unit(&r)]);
        assert_eq!(f.levels[0].by_intersection, ideal(&r, &["x"]));

        let (r, m, dec) = setup(&["x", "y", "z"], &["x*y"]);
        let a = Ideal::maximal(&r);
        let t = cd_table(&m, &a, &dec, CdSource::Dimension).unwrap();
        let f = filtration(&m, &a, &t).unwrap();
        let levels: Vec<Ideal> = f.levels.iter().map(|l| l.ideal().clone()).collect();
        let i = ideal(&r, &["x*y"]);
        assert_eq!(levels, vec![i.clone(), i, Ideal::unit(&r)]);

        let (r, m, dec) = setup(&["x", "y", "z"], &["x", "y"]);
        let a = Ideal::maximal(&r);
        let t = cd_table(&m, &a, &dec, CdSource::Dimension).unwrap();
        let f = filtration(&m, &a, &t).unwrap();
        assert_eq!(f.levels.len(), 2);
        assert_eq!(*f.levels[0].ideal(), ideal(&r, &["x", "y"]));
        assert!(f.levels[1].ideal().is_unit());
    }

    #[test]
    fn filtration_of_the_ring_itself() {
        let (r, m, dec) = setup(&["x", "y"], &["0"]);
        let a = Ideal::maximal(&r);
        let t = cd_table(&m, &a, &dec, CdSource::Dimension).unwrap();
        let f = filtration(&m, &a, &t).unwrap();
        assert_eq!(f.levels.len(), 3);
        assert!(f.levels[0].ideal().is_zero());
        assert!(f.levels[1].ideal().is_zero());
        assert!(f.levels[2].ideal().is_unit());
    }

    #[test]
    fn filtration_needs_exact_table() {
        let (r, m, dec) = setup(&["x", "y"], &["x*y"]);
        let a = Ideal::maximal(&r);
        let t = cd_table(&m, &a, &dec, CdSource::TopSplit).unwrap();
        assert!(matches!(filtration(&m, &a, &t), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn t_submodule_examples() {
        let (r, m, dec) = setup(&["x", "y"], &["x^2", "x*y"]);
        let a = Ideal::maximal(&r);
        let t = cd_table(&m, &a, &dec, CdSource::Dimension).unwrap();
        assert_eq!(t_submodule(&m, &a, &t).unwrap(), ideal(&r, &["x"]));

        let (r, m, dec) = setup(&["x", "y", "z"], &["x*y"]);
        let a = ideal(&r, &["x", "z"]);
        let t = cd_table(&m, &a, &dec, CdSource::TopSplit).unwrap();
        assert_eq!(t_submodule(&m, &a, &t).unwrap(), ideal(&r, &["y"]));

        let (r, m, dec) = setup(&["x", "y", "z"], &["x", "y"]);
        let a = Ideal::maximal(&r);
        let t = cd_table(&m, &a, &dec, CdSource::Dimension).unwrap();
        assert_eq!(t_submodule(&m, &a, &t).unwrap(), ideal(&r, &["x", "y"]));

        let (r, m, dec) = setup(&["x", "y"], &["x"]);
        let a = ideal(&r, &["x"]);
        let t = cd_table(&m, &a, &dec, CdSource::TopSplit).unwrap();
        assert!(matches!(t_submodule(&m, &a, &t), Err(Error::HypothesisNotMet(_))));
    }

    #[test]
    fn ann_top_examples() {
        let (r, m, dec) = setup(&["x", "y"], &["x^2", "x*y"]);
        let rep = ann_top(&m, &Ideal::maximal(&r), &dec).unwrap();
        assert!(rep.nonvanishing);
        assert_eq!(rep.annihilator, Some(ideal(&r, &["x"])));
        assert_eq!(rep.radical_ann, Some(ideal(&r, &["x"])));
        assert_eq!(rep.supp_bound, vec![ideal(&r, &["x", "y"])]);

        let (r, m, dec) = setup(&["x", "y", "z"], &["x*y"]);
        let rep = ann_top(&m, &ideal(&r, &["x", "z"]), &dec).unwrap();
        assert_eq!(rep.annihilator, Some(ideal(&r, &["y"])));
        assert_eq!(rep.supp_bound, vec![Ideal::maximal(&r)]);

        let (r, m, dec) = setup(&["x"], &["0"]);
        let rep = ann_top(&m, &ideal(&r, &["x"]), &dec).unwrap();
        assert_eq!(rep.annihilator, Some(Ideal::zero(&r)));

        let (r, m, dec) = setup(&["x", "y"], &["x"]);
        let rep = ann_top(&m, &ideal(&r, &["x"]), &dec).unwrap();
        assert!(!rep.nonvanishing);
        assert!(rep.annihilator.is_none());
    }

    #[test]
    fn ass_report_examples() {
        let (r, m, dec) = setup(&["x", "y"], &["x^2", "x*y"]);
        let a = Ideal::maximal(&r);
        let t = cd_table(&m, &a, &dec, CdSource::Dimension).unwrap();
        let f = filtration(&m, &a, &t).unwrap();
        let rep = ass_filtration_report(&f).unwrap();
        assert_eq!(rep[0].submodule, vec![ideal(&r, &["x", "y"])]);
        assert_eq!(rep[0].quotient, vec![ideal(&r, &["x"])]);
        assert_eq!(rep[0].graded_piece, vec![ideal(&r, &["x", "y"])]);
        assert_eq!(rep[1].graded_piece, vec![ideal(&r, &["x"])]);
        assert!(rep[1].quotient.is_empty());
        assert_eq!(rep[1].quotient_recomputed, Some(vec![]));

        let (r, m, dec) = setup(&["x", "y", "z"], &["x"]);
        let a = Ideal::maximal(&r);
        let t = cd_table(&m, &a, &dec, CdSource::Dimension).unwrap();
        let rep = ass_filtration_report(&filtration(&m, &a, &t).unwrap()).unwrap();
        assert!(rep[0].submodule.is_empty());
        assert!(rep[1].submodule.is_empty());
    }

    #[test]
    fn equivalence_examples() {
        let (r, m, dec) = setup(&["x", "y"], &["x^2", "x*y"]);
        let probes = vec![
            parse_polynomial("y", &r).unwrap(),
            parse_polynomial("y^2", &r).unwrap(),
        ];
        let rep = ann_equivalences(&m, &Ideal::maximal(&r), &dec, &probes).unwrap();
        assert!(rep.all_pass());
        let x = &rep.multipliers[0];
        assert_eq!(x.element.to_string(), "x");
        assert!(x.in_annihilator && !x.multiple_nonvanishing);
        assert!(!rep.multipliers[1].in_annihilator && rep.multipliers[1].multiple_nonvanishing);

        let (r, m, dec) = setup(&["x", "y", "z"], &["x*y"]);
        let rep = ann_equivalences(&m, &ideal(&r, &["x", "z"]), &dec, &[]).unwrap();
        assert_eq!(rep.multipliers[0].element.to_string(), "y");
        assert!(!rep.multipliers[0].multiple_nonvanishing);

        let (r, m, dec) = setup(&["x", "y"], &["0"]);
        let probes = vec![parse_polynomial("x*y + y^2", &r).unwrap()];
        let rep = ann_equivalences(&m, &ideal(&r, &["x", "y"]), &dec, &probes).unwrap();
        assert!(rep.all_primes_attached && rep.annihilator_is_ideal);
        assert!(rep.multipliers.iter().all(|c| c.multiple_nonvanishing));
    }

    #[test]
    fn non_monomial_ideal_with_user_decomposition() {
        use crate::primdec::PrimaryComponent;
        // two lines through the origin in the plane x = y·... : (x^2 - y^2)
        let r = Ring::new(&["x", "y", "z"], 0).unwrap();
        let i = ideal(&r, &["x^2 - y^2"]);
        let comps = vec![
            PrimaryComponent {
                component: ideal(&r, &["x - y"]),
                prime: ideal(&r, &["x - y"]),
            },
            PrimaryComponent {
                component: ideal(&r, &["x + y"]),
                prime: ideal(&r, &["x + y"]),
            },
        ];
        let dec = PrimaryDecomposition::from_components(&i, comps).unwrap();
        let m = CyclicModule::new(i.clone()).unwrap();
        let a = ideal(&r, &["x", "z"]);
        let rep = ann_top(&m, &a, &dec).unwrap();
        assert_eq!(rep.attached.len(), 2);
        assert_eq!(rep.annihilator, Some(i.clone()));
        let probes = vec![parse_polynomial("x - y", &r).unwrap()];
        let eq = ann_equivalences(&m, &a, &dec, &probes).unwrap();
        assert!(eq.all_pass());
        // a = (z) only meets both lines in a curve
        let rep = ann_top(&m, &ideal(&r, &["z"]), &dec).unwrap();
        assert!(!rep.nonvanishing);
    }
}
