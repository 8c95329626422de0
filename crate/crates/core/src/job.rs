//! JSON job documents and command dispatch for the `topcoh` binary.
//!
//! Outputs are `serde_json::Value`s built from maps with sorted keys, and
//! every ideal is printed as its sorted reduced Gröbner basis, so the same
//! job always produces byte-identical output.

use std::sync::Arc;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::cd::{
    ann_equivalences, ann_top, ass_filtration_report, attached_top, cd_table, filtration, CdSource, CdValues,
    CyclicModule,
};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_reduced, Ideal};
use crate::hochster::top_local_cohomology_ranks;
use crate::parse::parse_polynomial;
use crate::primdec::{primary_decomposition, PrimaryComponent, PrimaryDecomposition};
use crate::ring::{MonomialOrder, Ring};
use crate::verify::{verify, VerifyConfig};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub variables: Vec<String>,
    #[serde(default)]
    pub characteristic: u64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    pub component: Vec<String>,
    pub prime: Vec<String>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobDescription {
    /// Omitted: variables are the identifiers of `ideal` then `a`, in order
    /// of first appearance, over the rationals.
    pub ring: Option<RingSpec>,
    #[serde(default)]
    pub ideal: Vec<String>,
    /// Omitted: the ideal generated by all variables.
    pub a: Option<Vec<String>>,
    pub decomposition: Option<Vec<ComponentSpec>>,
    pub cd_table: Option<Vec<i64>>,
    pub command: Option<String>,
    /// `grevlex` (default) or `lex`, used by `gb`.
    pub order: Option<String>,
    /// Multidegrees for `hochster`; default is the squarefree box.
    pub degrees: Option<Vec<Vec<i64>>>,
    /// Extra multipliers for `equivalences`.
    pub probes: Option<Vec<String>>,
    pub verify: Option<VerifyConfig>,
    pub seed: Option<u64>,
}

pub const COMMANDS: [&str; 9] = [
    "gb",
    "dim",
    "primdec",
    "att-top",
    "ann-top",
    "filtration",
    "hochster",
    "equivalences",
    "verify",
];

/// Parses a job document, reporting JSON syntax errors with a byte offset.
pub fn parse_job(text: &str) -> Result<JobDescription> {
    serde_json::from_str(text).map_err(|e| {
        let position = text
            .split_inclusive('\n')
            .take(e.line().saturating_sub(1))
            .map(str::len)
            .sum::<usize>()
            + e.column().saturating_sub(1);
        Error::Parse {
            position,
            message: format!("job document: {e}"),
        }
    })
}

fn identifiers(text: &str) -> impl Iterator<Item = &str> {
    let bytes = text.as_bytes();
    let mut i = 0;
    std::iter::from_fn(move || {
        while i < bytes.len() {
            if bytes[i].is_ascii_alphabetic() || bytes[i] == b'_' {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                return Some(&text[start..i]);
            }
            i += 1;
        }
        None
    })
}

struct Context {
    ring: Arc<Ring>,
    ideal: Ideal,
    a: Ideal,
}

impl JobDescription {
    fn ring(&self) -> Result<Arc<Ring>> {
        if let Some(ring) = &self.ring {
            return Ring::new(&ring.variables, ring.characteristic);
        }
        let mut names: Vec<&str> = Vec::new();
        for text in self.ideal.iter().chain(self.a.iter().flatten()) {
            for id in identifiers(text) {
                if !names.contains(&id) {
                    names.push(id);
                }
            }
        }
        if names.is_empty() {
            return Err(Error::invalid("no ring given and no variables appear in the job"));
        }
        Ring::new(&names, 0)
    }

    fn context(&self) -> Result<Context> {
        let ring = self.ring()?;
        let ideal = parse_ideal(&ring, &self.ideal)?;
        let a = match &self.a {
            Some(gens) => parse_ideal(&ring, gens)?,
            None => Ideal::maximal(&ring),
        };
        Ok(Context { ring, ideal, a })
    }
}

fn parse_ideal(ring: &Arc<Ring>, gens: &[String]) -> Result<Ideal> {
    let polys = gens
        .iter()
        .map(|g| parse_polynomial(g, ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, polys)
}

fn ideal_json(ideal: &Ideal) -> Value {
    json!(ideal.to_strings())
}

fn ideals_json(ideals: &[Ideal]) -> Value {
    Value::Array(ideals.iter().map(ideal_json).collect())
}

fn decomposition(ctx: &Context, job: &JobDescription) -> Result<PrimaryDecomposition> {
    match &job.decomposition {
        Some(given) => {
            let comps = given
                .iter()
                .map(|c| {
                    Ok(PrimaryComponent {
                        component: parse_ideal(&ctx.ring, &c.component)?,
                        prime: parse_ideal(&ctx.ring, &c.prime)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            PrimaryDecomposition::from_components(&ctx.ideal, comps)
        }
        None if ctx.ideal.is_monomial() => primary_decomposition(&ctx.ideal),
        None => Err(Error::Unsupported(format!(
            "{} is not a monomial ideal; supply a decomposition",
            ctx.ideal
        ))),
    }
}

fn decomposition_json(dec: &PrimaryDecomposition) -> Value {
    Value::Array(
        dec.components()
            .iter()
            .map(|c| json!({"component": ideal_json(&c.component), "prime": ideal_json(&c.prime)}))
            .collect(),
    )
}

/// Executes `command` on `job`. The command argument overrides the one in
/// the document.
pub fn run(command: Option<&str>, job: &JobDescription) -> Result<Value> {
    let command = command
        .or(job.command.as_deref())
        .ok_or_else(|| Error::invalid("no command given"))?;
    if command == "verify" {
        let mut config = job.verify.clone().unwrap_or_default();
        if let Some(seed) = job.seed {
            config.seed = seed;
        }
        let report = verify(&config);
        return serde_json::to_value(report).map_err(|e| Error::Io(e.to_string()));
    }
    let ctx = job.context()?;
    let out = match command {
        "gb" => {
            let order = match job.order.as_deref().unwrap_or("grevlex") {
                "grevlex" => MonomialOrder::GrevLex,
                "lex" => MonomialOrder::Lex,
                other => return Err(Error::invalid(format!("unknown order `{other}`"))),
            };
            let gb = buchberger_reduced(ctx.ideal.generators(), &order)?;
            let mut strings: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
            if strings.is_empty() {
                strings.push("0".into());
            }
            json!({"order": job.order.as_deref().unwrap_or("grevlex"), "gb": strings})
        }
        "dim" => json!({"dim": ctx.ideal.krull_dim()}),
        "primdec" => {
            let dec = decomposition(&ctx, job)?;
            json!({
                "components": decomposition_json(&dec),
                "associated_primes": ideals_json(&dec.primes()),
                "minimal_primes": ideals_json(&dec.minimal_primes()?),
            })
        }
        "att-top" => {
            let module = CyclicModule::new(ctx.ideal.clone())?;
            let dec = decomposition(&ctx, job)?;
            let attached = attached_top(&module, &ctx.a, &dec)?;
            json!({"d": module.dim(), "nonvanishing": !attached.is_empty(), "attached": ideals_json(&attached)})
        }
        "ann-top" => {
            let module = CyclicModule::new(ctx.ideal.clone())?;
            let dec = decomposition(&ctx, job)?;
            let rep = ann_top(&module, &ctx.a, &dec)?;
            let (Some(t), Some(ann), Some(rad)) = (&rep.t_ideal, &rep.annihilator, &rep.radical_ann) else {
                return Err(Error::HypothesisNotMet(format!(
                    "H^{}_a(R/{}) = 0: no associated prime p of top dimension has a + p primary to the irrelevant ideal",
                    rep.d, ctx.ideal
                )));
            };
            json!({
                "d": rep.d,
                "nonvanishing": true,
                "attached": ideals_json(&rep.attached),
                "t_ideal": ideal_json(t),
                "annihilator": ideal_json(ann),
                "radical_ann": ideal_json(rad),
                "supp_bound": ideals_json(&rep.supp_bound),
            })
        }
        "filtration" => {
            let module = CyclicModule::new(ctx.ideal.clone())?;
            let dec = decomposition(&ctx, job)?;
            let source = match &job.cd_table {
                Some(values) => CdSource::User(values.clone()),
                None => CdSource::Dimension,
            };
            let table = cd_table(&module, &ctx.a, &dec, source)?;
            let f = filtration(&module, &ctx.a, &table)?;
            let ass = ass_filtration_report(&f)?;
            let values = match table.values() {
                CdValues::Exact(v) => v.clone(),
                CdValues::TopSplit(_) => unreachable!("filtration succeeded"),
            };
            json!({
                "d": module.dim(),
                "c": f.cd(),
                "cd_table": dec.components().iter().zip(&values).map(|(c, v)| json!({
                    "component": ideal_json(&c.component),
                    "prime": ideal_json(&c.prime),
                    "cd": v,
                })).collect::<Vec<_>>(),
                "levels": f.levels.iter().map(|l| json!({
                    "i": l.index,
                    "a_product": ideal_json(&l.a_product),
                    "by_saturation": ideal_json(&l.by_saturation),
                    "by_intersection": ideal_json(&l.by_intersection),
                })).collect::<Vec<_>>(),
                "ass": ass.iter().map(|l| json!({
                    "i": l.index,
                    "submodule": ideals_json(&l.submodule),
                    "quotient": ideals_json(&l.quotient),
                    "graded_piece": ideals_json(&l.graded_piece),
                    "quotient_recomputed": l.quotient_recomputed.as_deref().map(ideals_json),
                })).collect::<Vec<_>>(),
            })
        }
        "hochster" => {
            let rep = top_local_cohomology_ranks(&ctx.ideal, job.degrees.as_deref())?;
            json!({
                "d": rep.d,
                "nonvanishing": rep.nonvanishing,
                "ranks": rep.ranks.iter().map(|(deg, r)| json!({"degree": deg, "rank": r})).collect::<Vec<_>>(),
            })
        }
        "equivalences" => {
            let module = CyclicModule::new(ctx.ideal.clone())?;
            let dec = decomposition(&ctx, job)?;
            let probes = job
                .probes
                .iter()
                .flatten()
                .map(|p| parse_polynomial(p, &ctx.ring))
                .collect::<Result<Vec<_>>>()?;
            let rep = ann_equivalences(&module, &ctx.a, &dec, &probes)?;
            json!({
                "multipliers": rep.multipliers.iter().map(|m| json!({
                    "element": m.element.to_string(),
                    "in_annihilator": m.in_annihilator,
                    "multiple_nonvanishing": m.multiple_nonvanishing,
                })).collect::<Vec<_>>(),
                "all_primes_attached": rep.all_primes_attached,
                "annihilator_is_ideal": rep.annihilator_is_ideal,
                "pass": rep.all_pass(),
            })
        }
        other => {
            return Err(Error::invalid(format!(
                "unknown command `{other}`; expected one of {}",
                COMMANDS.join(", ")
            )))
        }
    };
    Ok(out)
}

/// The structured error object printed on failure.
pub fn error_json(e: &Error) -> Value {
    let mut body = json!({"kind": e.kind(), "message": e.to_string()});
    if let Error::Parse { position, .. } = e {
        body["position"] = json!(position);
    }
    json!({ "error": body })
}
