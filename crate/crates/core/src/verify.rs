//! Seeded random-instance property suites.
//!
//! Three corpora of monomial ideals are drawn: `standard` (with `a` the
//! irrelevant ideal), `general-a` (with a random monomial `a`) and
//! `squarefree`. Every instance has its own ChaCha stream derived from the
//! seed, the corpus and the index, so results do not depend on the order in
//! which rayon schedules them.

use std::sync::Arc;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cd::{
    ann_equivalences, ann_top, ass_filtration_report, cd_table, filtration, h_top_nonzero, top_prime_test,
    CdSource, CyclicModule,
};
use crate::error::{Error, Result};
use crate::groebner::{sort_ideals, Ideal};
use crate::hochster::top_local_cohomology_ranks;
use crate::primdec::{
    associated_primes, intersect_all, minimal_primes, monomial_radical, primary_decomposition, product_all,
    PrimaryComponent, PrimaryDecomposition,
};
use crate::ring::{Monomial, Polynomial, Ring};

/// Deliberate corruption used to check that the harness reports failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Intersections of primary components computed by the harness omit
    /// the first component.
    DropIntersectionComponent,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyConfig {
    pub seed: u64,
    pub instances: usize,
    pub general_a_instances: usize,
    pub squarefree_instances: usize,
    pub max_vars: usize,
    pub squarefree_max_vars: usize,
    pub max_degree: u32,
    pub max_generators: usize,
    /// Monomials outside the annihilator tried per instance.
    pub probes: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 1,
            instances: 10,
            general_a_instances: 10,
            squarefree_instances: 10,
            max_vars: 4,
            squarefree_max_vars: 6,
            max_degree: 4,
            max_generators: 6,
            probes: 5,
            fault: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Corpus {
    Standard,
    GeneralA,
    Squarefree,
}

impl Corpus {
    fn stream(self) -> u64 {
        match self {
            Corpus::Standard => 1,
            Corpus::GeneralA => 2,
            Corpus::Squarefree => 3,
        }
    }
}

/// A generated test case, printable as a job document for the CLI.
#[derive(Clone, Debug)]
pub struct Instance {
    pub corpus: Corpus,
    pub index: usize,
    pub ideal: Ideal,
    pub a: Ideal,
}

impl Instance {
    pub fn ring(&self) -> &Arc<Ring> {
        self.ideal.ring()
    }

    pub fn to_job(&self) -> Value {
        json!({
            "ring": {"variables": self.ring().names(), "characteristic": self.ring().characteristic()},
            "ideal": self.ideal.to_strings(),
            "a": self.a.to_strings(),
        })
    }
}

pub fn variable_names(n: usize) -> Vec<String> {
    const NAMES: [&str; 6] = ["x", "y", "z", "w", "u", "v"];
    if n <= NAMES.len() {
        NAMES[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// ChaCha stream for one instance of one corpus.
pub fn instance_rng(seed: u64, corpus: Corpus, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(corpus.stream() << 40 | index as u64);
    rng
}

pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, max_degree: u32, squarefree: bool) -> Monomial {
    let mut exps = vec![0u32; n];
    if squarefree {
        let k = rng.gen_range(1..=n.min(max_degree.max(1) as usize));
        for i in sample(rng, n, k) {
            exps[i] = 1;
        }
    } else {
        for _ in 0..rng.gen_range(1..=max_degree.max(1)) {
            exps[rng.gen_range(0..n)] += 1;
        }
    }
    Monomial::new(exps)
}

/// Between one and `max_generators` random monomials of positive degree;
/// the generated ideal is therefore never zero and never the unit ideal.
pub fn random_monomial_ideal<R: Rng>(
    rng: &mut R,
    ring: &Arc<Ring>,
    max_degree: u32,
    max_generators: usize,
    squarefree: bool,
) -> Ideal {
    let n = ring.nvars();
    let count = rng.gen_range(1..=max_generators.max(1));
    let gens: Vec<Monomial> = (0..count)
        .map(|_| random_monomial(rng, n, max_degree, squarefree))
        .collect();
    Ideal::from_monomials(ring, &gens)
}

pub fn generate(config: &VerifyConfig, corpus: Corpus, index: usize) -> Instance {
    let mut rng = instance_rng(config.seed, corpus, index);
    let max_vars = match corpus {
        Corpus::Squarefree => config.squarefree_max_vars,
        _ => config.max_vars,
    }
    .max(1);
    let n = rng.gen_range(1..=max_vars);
    let ring = Ring::new(&variable_names(n), 0).expect("generated names are valid");
    let ideal = random_monomial_ideal(
        &mut rng,
        &ring,
        config.max_degree,
        config.max_generators,
        corpus == Corpus::Squarefree,
    );
    let a = match corpus {
        Corpus::GeneralA => random_monomial_ideal(&mut rng, &ring, 2, n, false),
        _ => Ideal::maximal(&ring),
    };
    Instance {
        corpus,
        index,
        ideal,
        a,
    }
}

pub fn corpus(config: &VerifyConfig, corpus: Corpus) -> Vec<Instance> {
    let count = match corpus {
        Corpus::Standard => config.instances,
        Corpus::GeneralA => config.general_a_instances,
        Corpus::Squarefree => config.squarefree_instances,
    };
    (0..count)
        .into_par_iter()
        .map(|i| generate(config, corpus, i))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    FiltrationDuals,
    AnnihilatorChain,
    FiltrationAssociatedPrimes,
    HochsterAgreement,
    AnnihilatorEquivalences,
    SupportMonotonicity,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::FiltrationDuals,
        Property::AnnihilatorChain,
        Property::FiltrationAssociatedPrimes,
        Property::HochsterAgreement,
        Property::AnnihilatorEquivalences,
        Property::SupportMonotonicity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::FiltrationDuals => "filtration-duals",
            Property::AnnihilatorChain => "annihilator-chain",
            Property::FiltrationAssociatedPrimes => "filtration-associated-primes",
            Property::HochsterAgreement => "hochster-agreement",
            Property::AnnihilatorEquivalences => "annihilator-equivalences",
            Property::SupportMonotonicity => "support-monotonicity",
        }
    }

    fn corpora(self) -> &'static [Corpus] {
        match self {
            Property::FiltrationDuals | Property::FiltrationAssociatedPrimes => &[Corpus::Standard],
            Property::AnnihilatorChain | Property::AnnihilatorEquivalences => {
                &[Corpus::Standard, Corpus::GeneralA]
            }
            Property::HochsterAgreement => &[Corpus::Squarefree],
            Property::SupportMonotonicity => &[Corpus::GeneralA],
        }
    }
}

/// Result of one property on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The hypothesis of the property does not hold on this instance.
    Vacuous,
    Fail(String),
}

fn outcome(r: Result<Option<String>>) -> Outcome {
    match r {
        Ok(None) => Outcome::Pass,
        Ok(Some(msg)) => Outcome::Fail(msg),
        Err(Error::HypothesisNotMet(_)) => Outcome::Vacuous,
        Err(e) => Outcome::Fail(format!("{}: {e}", e.kind())),
    }
}

struct Checker {
    fault: Option<Fault>,
    probes: usize,
    max_degree: u32,
    seed: u64,
}

fn fail_unless(cond: bool, msg: impl FnOnce() -> String) -> Result<Option<String>> {
    Ok(if cond { None } else { Some(msg()) })
}

fn fmt_set(ideals: &[Ideal]) -> String {
    let parts: Vec<String> = ideals.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

impl Checker {
    fn intersection<'a>(
        &self,
        ring: &Arc<Ring>,
        comps: impl IntoIterator<Item = &'a Ideal>,
    ) -> Result<Ideal> {
        let mut comps: Vec<&Ideal> = comps.into_iter().collect();
        if self.fault == Some(Fault::DropIntersectionComponent) && !comps.is_empty() {
            comps.remove(0);
        }
        intersect_all(ring, comps)
    }

    fn run(&self, property: Property, inst: &Instance) -> Outcome {
        let r = (|| {
            let module = CyclicModule::new(inst.ideal.clone())?;
            let dec = primary_decomposition(&inst.ideal)?;
            match property {
                Property::FiltrationDuals => self.filtration_duals(&module, &inst.a, &dec),
                Property::AnnihilatorChain => self.annihilator_chain(&module, &inst.a, &dec),
                Property::FiltrationAssociatedPrimes => self.filtration_ass(&module, &inst.a, &dec),
                Property::HochsterAgreement => self.hochster(&module, &dec),
                Property::AnnihilatorEquivalences => self.equivalences(inst, &module, &dec),
                Property::SupportMonotonicity => self.monotonicity(&inst.a),
            }
        })();
        outcome(r)
    }

    fn filtration_duals(
        &self,
        m: &CyclicModule,
        a: &Ideal,
        dec: &PrimaryDecomposition,
    ) -> Result<Option<String>> {
        let ring = m.ring();
        let values: Vec<i64> = dec.components().iter().map(|c| c.prime.krull_dim()).collect();
        let c = values.iter().copied().max().unwrap_or(0);
        for i in 0..=c {
            let a_i = product_all(
                ring,
                dec.components()
                    .iter()
                    .zip(&values)
                    .filter(|(_, &v)| v <= i)
                    .map(|(c, _)| &c.prime),
            )?;
            let sat = if a_i.is_zero() {
                Ideal::unit(ring)
            } else {
                m.ideal().saturate(&a_i)?
            };
            let int = self.intersection(
                ring,
                dec.components()
                    .iter()
                    .zip(&values)
                    .filter(|(_, &v)| v > i)
                    .map(|(c, _)| &c.component),
            )?;
            if sat != int {
                return Ok(Some(format!("level {i}: saturation {sat} != intersection {int}")));
            }
        }
        let table = cd_table(m, a, dec, CdSource::Dimension)?;
        filtration(m, a, &table)?;
        Ok(None)
    }

    fn annihilator_chain(
        &self,
        m: &CyclicModule,
        a: &Ideal,
        dec: &PrimaryDecomposition,
    ) -> Result<Option<String>> {
        let report = ann_top(m, a, dec)?;
        let Some(ann) = report.annihilator.as_ref() else {
            return Err(Error::HypothesisNotMet("H^d vanishes".into()));
        };
        let ring = m.ring();
        let attached = &report.attached;
        let is_top = |c: &PrimaryComponent| attached.contains(&c.prime);
        let b = product_all(
            ring,
            dec.components().iter().filter(|c| !is_top(c)).map(|c| &c.prime),
        )?;
        let sat = if b.is_zero() {
            Ideal::unit(ring)
        } else {
            m.ideal().saturate(&b)?
        };
        let int = self.intersection(
            ring,
            dec.components()
                .iter()
                .filter(|c| is_top(c))
                .map(|c| &c.component),
        )?;
        if !(*ann == sat && sat == int) {
            return Ok(Some(format!(
                "annihilator {ann}, saturation {sat}, intersection of top components {int}"
            )));
        }
        let top_primes: Vec<&Ideal> = attached.iter().collect();
        let rad = intersect_all(ring, top_primes.iter().copied())?;
        if monomial_radical(ann)? != rad {
            return Ok(Some(format!("radical of {ann} is not {rad}")));
        }
        let mut ass_k = associated_primes(ann)?;
        sort_ideals(&mut ass_k);
        if ass_k != *attached {
            return Ok(Some(format!(
                "Ass(R/{ann}) = {} but attached primes are {}",
                fmt_set(&ass_k),
                fmt_set(attached)
            )));
        }
        let mut min_k = minimal_primes(ann)?;
        sort_ideals(&mut min_k);
        if min_k != *attached {
            return Ok(Some(format!(
                "minimal primes of {ann} are {}, attached primes are {}",
                fmt_set(&min_k),
                fmt_set(attached)
            )));
        }
        // M/T has no proper T-submodule
        let g = CyclicModule::new(ann.clone())?;
        let top_comps: Vec<PrimaryComponent> =
            dec.components().iter().filter(|c| is_top(c)).cloned().collect();
        let g_dec = PrimaryDecomposition::from_components(ann, top_comps)?;
        let g_report = ann_top(&g, a, &g_dec)?;
        fail_unless(g_report.t_ideal.as_ref() == Some(ann), || {
            format!(
                "T of R/{ann} is {:?}, expected the zero submodule",
                g_report.t_ideal.map(|k| k.to_string())
            )
        })
    }

    fn filtration_ass(
        &self,
        m: &CyclicModule,
        a: &Ideal,
        dec: &PrimaryDecomposition,
    ) -> Result<Option<String>> {
        let table = cd_table(m, a, dec, CdSource::Dimension)?;
        let f = filtration(m, a, &table)?;
        for level in ass_filtration_report(&f)? {
            let fresh = level.quotient_recomputed.unwrap_or_default();
            if fresh != level.quotient {
                return Ok(Some(format!(
                    "level {}: predicted {} recomputed {}",
                    level.index,
                    fmt_set(&level.quotient),
                    fmt_set(&fresh)
                )));
            }
        }
        Ok(None)
    }

    fn hochster(&self, m: &CyclicModule, dec: &PrimaryDecomposition) -> Result<Option<String>> {
        let a = Ideal::maximal(m.ring());
        let oracle = top_local_cohomology_ranks(m.ideal(), None)?;
        let engine = h_top_nonzero(m, &a, dec)?;
        if oracle.nonvanishing != engine {
            return Ok(Some(format!(
                "simplicial nonvanishing {} but attached-prime criterion {engine}",
                oracle.nonvanishing
            )));
        }
        if !engine {
            return Ok(None);
        }
        let k = ann_top(m, &a, dec)?
            .t_ideal
            .expect("nonvanishing reports carry the T ideal");
        let quotient = top_local_cohomology_ranks(&k, None)?;
        if quotient.d != oracle.d {
            return Ok(Some(format!(
                "dim R/{k} = {} differs from d = {}",
                quotient.d, oracle.d
            )));
        }
        for ((alpha, r1), (_, r2)) in oracle.ranks.iter().zip(&quotient.ranks) {
            if r1 != r2 {
                return Ok(Some(format!(
                    "degree {alpha:?}: rank {r1} for R/{} but {r2} for R/{k}",
                    m.ideal()
                )));
            }
        }
        Ok(None)
    }

    fn equivalences(
        &self,
        inst: &Instance,
        m: &CyclicModule,
        dec: &PrimaryDecomposition,
    ) -> Result<Option<String>> {
        let report = ann_top(m, &inst.a, dec)?;
        let Some(ann) = report.annihilator.as_ref() else {
            return Err(Error::HypothesisNotMet("H^d vanishes".into()));
        };
        let ring = m.ring();
        let mut rng = instance_rng(self.seed ^ 0x9e37_79b9, inst.corpus, inst.index);
        let mut probes = Vec::new();
        for _ in 0..self.probes * 20 {
            if probes.len() == self.probes {
                break;
            }
            let x = Polynomial::monomial(
                ring,
                random_monomial(&mut rng, ring.nvars(), self.max_degree, false),
            );
            if !ann.contains(&x)? && !probes.contains(&x) {
                probes.push(x);
            }
        }
        ann_equivalences(m, &inst.a, dec, &probes)?;
        Ok(None)
    }

    fn monotonicity(&self, a: &Ideal) -> Result<Option<String>> {
        let ring = a.ring();
        let n = ring.nvars();
        let primes: Vec<(u32, Ideal)> = (0u32..1 << n)
            .map(|s| {
                let vars: Vec<usize> = (0..n).filter(|k| s >> k & 1 == 1).collect();
                (s, Ideal::from_variables(ring, &vars))
            })
            .collect();
        // (dim R/p, whether a + p is primary to the irrelevant ideal)
        let data: Vec<(i64, bool)> = primes
            .iter()
            .map(|(_, p)| Ok((p.krull_dim(), a.sum(p)?.krull_dim() == 0)))
            .collect::<Result<_>>()?;
        for (j, (sp, p)) in primes.iter().enumerate() {
            for (k, (sq, q)) in primes.iter().enumerate() {
                if sp & sq != *sp {
                    continue;
                }
                let (dp, zp) = data[j];
                let (dq, zq) = data[k];
                if dq > dp {
                    return Ok(Some(format!("{p} ⊆ {q} but dim R/{q} = {dq} > {dp}")));
                }
                if zp && !zq {
                    return Ok(Some(format!("a + {p} is m-primary but a + {q} is not")));
                }
                if top_prime_test(a, p, dp)? && !top_prime_test(a, q, dq)? {
                    return Ok(Some(format!("top test holds for {p} but not for {q}")));
                }
            }
        }
        Ok(None)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub corpus: Corpus,
    pub index: usize,
    pub job: Value,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub name: &'static str,
    pub checked: usize,
    pub passed: usize,
    pub vacuous: usize,
    pub failed: usize,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub properties: Vec<PropertyReport>,
    pub all_pass: bool,
}

impl VerifyReport {
    pub fn property(&self, p: Property) -> &PropertyReport {
        self.properties
            .iter()
            .find(|r| r.name == p.name())
            .expect("every property is reported")
    }

    /// One line per property, as printed by the CLI.
    pub fn summary_lines(&self) -> Vec<String> {
        self.properties
            .iter()
            .map(|p| {
                format!(
                    "{} {}: {}/{} passed ({} vacuous)",
                    if p.failed == 0 { "PASS" } else { "FAIL" },
                    p.name,
                    p.passed,
                    p.checked,
                    p.vacuous
                )
            })
            .collect()
    }
}

/// Runs a subset of the properties.
pub fn verify_properties(config: &VerifyConfig, properties: &[Property]) -> VerifyReport {
    let checker = Checker {
        fault: config.fault,
        probes: config.probes,
        max_degree: config.max_degree,
        seed: config.seed,
    };
    let mut corpora: Vec<Corpus> = properties
        .iter()
        .flat_map(|p| p.corpora().iter().copied())
        .collect();
    corpora.sort();
    corpora.dedup();
    let instances: Vec<(Corpus, Vec<Instance>)> = corpora.iter().map(|&c| (c, corpus(config, c))).collect();

    let mut reports = Vec::new();
    for &prop in properties {
        let cases: Vec<&Instance> = instances
            .iter()
            .filter(|(c, _)| prop.corpora().contains(c))
            .flat_map(|(_, v)| v.iter())
            .collect();
        let outcomes: Vec<Outcome> = cases.par_iter().map(|inst| checker.run(prop, inst)).collect();
        let mut rep = PropertyReport {
            name: prop.name(),
            checked: cases.len(),
            passed: 0,
            vacuous: 0,
            failed: 0,
            counterexamples: Vec::new(),
        };
        for (inst, out) in cases.iter().zip(outcomes) {
            match out {
                Outcome::Pass => rep.passed += 1,
                Outcome::Vacuous => rep.vacuous += 1,
                Outcome::Fail(detail) => {
                    rep.failed += 1;
                    rep.counterexamples.push(Counterexample {
                        corpus: inst.corpus,
                        index: inst.index,
                        job: inst.to_job(),
                        detail,
                    });
                }
            }
        }
        reports.push(rep);
    }
    let all_pass = reports.iter().all(|r| r.failed == 0);
    VerifyReport {
        config: config.clone(),
        properties: reports,
        all_pass,
    }
}

pub fn verify(config: &VerifyConfig) -> VerifyReport {
    verify_properties(config, &Property::ALL)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_respects_bounds() {
        let cfg = VerifyConfig::default();
        for i in 0..50 {
            let inst = generate(&cfg, Corpus::Standard, i);
            assert!(inst.ring().nvars() <= 4);
            assert!(!inst.ideal.is_zero() && !inst.ideal.is_unit());
            assert!(inst.ideal.gb().len() <= 6);
            for g in inst.ideal.gb() {
                assert!(g.total_degree().unwrap() <= 4);
            }
            let sq = generate(&cfg, Corpus::Squarefree, i);
            assert!(sq.ring().nvars() <= 6);
            assert!(sq
                .ideal
                .gb()
                .iter()
                .all(|g| g.leading_monomial().unwrap().is_squarefree()));
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let cfg = VerifyConfig::default();
        let a = generate(&cfg, Corpus::GeneralA, 7);
        let b = generate(&cfg, Corpus::GeneralA, 7);
        assert_eq!(a.to_job(), b.to_job());
    }

    #[test]
    fn small_run_passes_with_six_lines() {
        let report = verify(&VerifyConfig::default());
        assert_eq!(report.summary_lines().len(), 6);
        assert!(report.all_pass, "{:#?}", report.properties);
    }

    #[test]
    fn corrupted_intersection_is_caught() {
        let cfg = VerifyConfig {
            fault: Some(Fault::DropIntersectionComponent),
            ..VerifyConfig::default()
        };
        let report = verify_properties(&cfg, &[Property::FiltrationDuals]);
        let rep = report.property(Property::FiltrationDuals);
        assert!(rep.failed > 0);
        let ce = &rep.counterexamples[0];
        assert!(ce.job["ideal"].as_array().is_some_and(|g| !g.is_empty()));
    }
}
