//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
//! if any criterion fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topcoh::cd::{
    ann_top, ass_filtration_report, attached_top, cd_table, filtration, CdSource, CyclicModule,
};
use topcoh::primdec::{intersect_all, monomial_generators, monomial_radical, primary_decomposition};
use topcoh::ring::normal_form;
use topcoh::verify::{
    corpus, random_monomial_ideal, verify_properties, Corpus, Property, VerifyConfig, VerifyReport,
};
use topcoh::{buchberger_reduced, parse_polynomial, Ideal, Monomial, MonomialOrder, Polynomial, Ring};

const SEED: u64 = 20_261_018;

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(n: usize, title: &str, o: &Outcome) {
    println!(
        "criterion {n} [{}] {title}: {}",
        if o.pass { "PASS" } else { "FAIL" },
        o.detail
    );
}

fn config() -> VerifyConfig {
    VerifyConfig {
        seed: SEED,
        instances: 200,
        general_a_instances: 100,
        squarefree_instances: 100,
        max_vars: 4,
        squarefree_max_vars: 6,
        max_degree: 4,
        max_generators: 6,
        probes: 5,
        fault: None,
    }
}

fn property_outcome(rep: &VerifyReport, p: Property, elapsed: Option<(Duration, Duration)>) -> Outcome {
    let r = rep.property(p);
    let mut detail = format!(
        "{}: {} checked, {} passed, {} vacuous, {} failed",
        r.name, r.checked, r.passed, r.vacuous, r.failed
    );
    let mut pass = r.failed == 0;
    if let Some((took, limit)) = elapsed {
        detail.push_str(&format!(
            ", {:.2}s (limit {}s)",
            took.as_secs_f64(),
            limit.as_secs()
        ));
        pass &= took < limit;
    }
    if let Some(ce) = r.counterexamples.first() {
        detail.push_str(&format!("; first counterexample {} : {}", ce.job, ce.detail));
    }
    Outcome { pass, detail }
}

fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|s| parse_polynomial(s, r).unwrap()).collect()).unwrap()
}

fn criterion5() -> Outcome {
    let mut failures = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            failures.push(name.to_string());
        }
    };

    // (a) R = Q[x], I = (0), a = (x)
    let r = Ring::new(&["x"], 0).unwrap();
    let m = CyclicModule::new(Ideal::zero(&r)).unwrap();
    let dec = primary_decomposition(m.ideal()).unwrap();
    let rep = ann_top(&m, &ideal(&r, &["x"]), &dec).unwrap();
    check("(a) annihilator (0)", rep.annihilator == Some(Ideal::zero(&r)));

    // (b) I = (x^2, xy), a = m
    let r = Ring::new(&["x", "y"], 0).unwrap();
    let m = CyclicModule::new(ideal(&r, &["x^2", "x*y"])).unwrap();
    let a = Ideal::maximal(&r);
    let dec = primary_decomposition(m.ideal()).unwrap();
    let rep = ann_top(&m, &a, &dec).unwrap();
    check("(b) annihilator (x)", rep.annihilator == Some(ideal(&r, &["x"])));
    let table = cd_table(&m, &a, &dec, CdSource::Dimension).unwrap();
    let f = filtration(&m, &a, &table).unwrap();
    let levels: Vec<Ideal> = f.levels.iter().map(|l| l.ideal().clone()).collect();
    check(
        "(b) filtration [(x),(1)]",
        levels == vec![ideal(&r, &["x"]), Ideal::unit(&r)],
    );
    let ass = ass_filtration_report(&f).unwrap();
    let xy = ideal(&r, &["x", "y"]);
    let x = ideal(&r, &["x"]);
    check(
        "(b) Ass report",
        ass[0].submodule == vec![xy.clone()]
            && ass[0].quotient == vec![x.clone()]
            && ass[0].graded_piece == vec![xy]
            && ass[1].graded_piece == vec![x]
            && ass[1].quotient.is_empty(),
    );

    // (c) I = (xy) in three variables, a = (x, z)
    let r = Ring::new(&["x", "y", "z"], 0).unwrap();
    let m = CyclicModule::new(ideal(&r, &["x*y"])).unwrap();
    let a = ideal(&r, &["x", "z"]);
    let dec = primary_decomposition(m.ideal()).unwrap();
    check(
        "(c) attached {(y)}",
        attached_top(&m, &a, &dec).unwrap() == vec![ideal(&r, &["y"])],
    );
    let rep = ann_top(&m, &a, &dec).unwrap();
    check("(c) annihilator (y)", rep.annihilator == Some(ideal(&r, &["y"])));

    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            "all exact instances match".into()
        } else {
            format!("mismatched: {}", failures.join(", "))
        },
    }
}

fn criterion7(cfg: &VerifyConfig) -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for inst in corpus(cfg, Corpus::Standard)
        .into_iter()
        .chain(corpus(cfg, Corpus::GeneralA))
    {
        let m = CyclicModule::new(inst.ideal.clone()).unwrap();
        let dec = primary_decomposition(m.ideal()).unwrap();
        let rep = ann_top(&m, &inst.a, &dec).unwrap();
        let Some(ann) = rep.annihilator else { continue };
        checked += 1;
        let top = intersect_all(m.ring(), rep.attached.iter()).unwrap();
        if monomial_radical(&ann).unwrap() != top {
            failures.push(inst.to_job().to_string());
        }
    }
    Outcome {
        pass: failures.is_empty() && checked > 0,
        detail: format!(
            "{checked} nonvanishing instances, {} failed{}",
            failures.len(),
            failures
                .first()
                .map(|f| format!("; first {f}"))
                .unwrap_or_default()
        ),
    }
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, max_terms: usize, max_deg: u32) -> Polynomial {
    let n = ring.nvars();
    let mut p = Polynomial::zero(ring);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let mut e = vec![0u32; n];
        for _ in 0..rng.gen_range(0..=max_deg) {
            e[rng.gen_range(0..n)] += 1;
        }
        let c = ring.field().from_i64(rng.gen_range(-3..=3));
        p = p.add(&Polynomial::term(ring, Monomial::new(e), c));
    }
    p
}

fn lcm_oracle(i: &Ideal, j: &Ideal) -> Ideal {
    let gi = monomial_generators(i).unwrap();
    let gj = monomial_generators(j).unwrap();
    let lcms: Vec<Monomial> = gi.iter().flat_map(|a| gj.iter().map(move |b| a.lcm(b))).collect();
    Ideal::from_monomials(i.ring(), &lcms)
}

fn criterion8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut cases = [0usize; 4];
    let mut failures: Vec<String> = Vec::new();
    let names = ["x", "y", "z"];

    // reduced-basis permutation invariance
    for _ in 0..150 {
        let n = rng.gen_range(2..=3);
        let ring = Ring::new(&names[..n], if rng.gen_bool(0.3) { 32_003 } else { 0 }).unwrap();
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| random_poly(&mut rng, &ring, 3, 2))
            .collect();
        let order = if rng.gen_bool(0.5) {
            MonomialOrder::Lex
        } else {
            MonomialOrder::GrevLex
        };
        let g1 = buchberger_reduced(&gens, &order).unwrap();
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rng);
        let g2 = buchberger_reduced(&shuffled, &order).unwrap();
        cases[0] += 1;
        if g1 != g2 {
            failures.push(format!("permutation changed basis of {gens:?}"));
        }
    }

    // normal form idempotence
    for _ in 0..150 {
        let ring = Ring::new(&names, 0).unwrap();
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| random_poly(&mut rng, &ring, 3, 2))
            .collect();
        let i = Ideal::new(&ring, gens).unwrap();
        let f = random_poly(&mut rng, &ring, 4, 3);
        let nf = i.normal_form(&f).unwrap();
        let nf2 = normal_form(&nf, i.gb(), ring.order()).unwrap();
        cases[1] += 1;
        if nf != nf2 || !i.contains(&f.sub(&nf)).unwrap() {
            failures.push(format!("normal form of {f} modulo {i} is not idempotent"));
        }
    }

    // quotient and saturation identities on monomial and binomial ideals
    for _ in 0..150 {
        let n = rng.gen_range(2..=3);
        let ring = Ring::new(&names[..n], 0).unwrap();
        let i = random_monomial_ideal(&mut rng, &ring, 3, 4, false);
        let j = if rng.gen_bool(0.5) {
            random_monomial_ideal(&mut rng, &ring, 2, 2, false)
        } else {
            let a = Polynomial::monomial(&ring, Monomial::var(n, 0));
            let b = Polynomial::monomial(&ring, Monomial::var(n, 1));
            Ideal::new(&ring, vec![a.sub(&b)]).unwrap()
        };
        let q = i.quotient(&j).unwrap();
        let s = i.saturate(&j).unwrap();
        cases[2] += 1;
        let ok = i.is_subset_of(&q).unwrap()
            && q.product(&j).unwrap().is_subset_of(&i).unwrap()
            && s.quotient(&j).unwrap() == s
            && q.is_subset_of(&s).unwrap()
            && s == i.saturate_by_rabinowitsch(&j).unwrap();
        if !ok {
            failures.push(format!(
                "quotient/saturation identities fail for I = {i}, J = {j}"
            ));
        }
    }

    // intersection against the lcm construction
    for _ in 0..150 {
        let n = rng.gen_range(1..=4);
        let ring = Ring::new(&["x", "y", "z", "w"][..n], 0).unwrap();
        let i = random_monomial_ideal(&mut rng, &ring, 4, 4, false);
        let j = random_monomial_ideal(&mut rng, &ring, 4, 4, false);
        cases[3] += 1;
        if i.intersect(&j).unwrap() != lcm_oracle(&i, &j) {
            failures.push(format!("intersection of {i} and {j} disagrees with lcm oracle"));
        }
    }

    let total: usize = cases.iter().sum();
    Outcome {
        pass: failures.is_empty() && total >= 500,
        detail: format!(
            "{total} cases (permutation {}, normal form {}, quotient/saturation {}, intersection {}), {} failed{}",
            cases[0],
            cases[1],
            cases[2],
            cases[3],
            failures.len(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    }
}

fn main() {
    let cfg = config();
    let mut all = true;
    let mut emit = |n: usize, title: &str, o: Outcome| {
        all &= o.pass;
        report(n, title, &o);
    };

    let t = Instant::now();
    let rep1 = verify_properties(&cfg, &[Property::FiltrationDuals]);
    emit(
        1,
        "filtration levels by saturation equal intersections",
        property_outcome(
            &rep1,
            Property::FiltrationDuals,
            Some((t.elapsed(), Duration::from_secs(120))),
        ),
    );

    let rep = verify_properties(
        &cfg,
        &[
            Property::AnnihilatorChain,
            Property::FiltrationAssociatedPrimes,
            Property::AnnihilatorEquivalences,
        ],
    );
    emit(
        2,
        "annihilator = saturation by non-top primes = top components",
        property_outcome(&rep, Property::AnnihilatorChain, None),
    );
    emit(
        3,
        "predicted Ass(M/M_i) equals fresh decomposition",
        property_outcome(&rep, Property::FiltrationAssociatedPrimes, None),
    );

    let t = Instant::now();
    let rep4 = verify_properties(&cfg, &[Property::HochsterAgreement]);
    emit(
        4,
        "simplicial ranks agree with the attached-prime criterion",
        property_outcome(
            &rep4,
            Property::HochsterAgreement,
            Some((t.elapsed(), Duration::from_secs(300))),
        ),
    );

    emit(5, "exact instances", criterion5());
    emit(
        6,
        "multiplier and full-annihilator equivalences",
        property_outcome(&rep, Property::AnnihilatorEquivalences, None),
    );
    emit(
        7,
        "radical of the annihilator is the top-prime intersection",
        criterion7(&cfg),
    );
    emit(8, "engine health", criterion8());

    if !all {
        std::process::exit(1);
    }
}
