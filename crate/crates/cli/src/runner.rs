use std::collections::HashMap;
use std::time::Instant;

use affinemod_core::derivation::{jacobian_derivation, Derivation, DEFAULT_CHAIN_BOUND};
use affinemod_core::grading::{gr_element, graded_ideal, GradedPresentation};
use affinemod_core::ideal::generic_semiregular_extension;
use affinemod_core::ml_certificate::{build_family, ml_report, FamilyParams, RootBlock};
use affinemod_core::modification::{
    basic_step, compose_split, davis_presentation, fiber_product_presentation, largest_ideal,
    modification_ideals, ModificationLocus, PresentationStatus,
};
use affinemod_core::poly::Expr;
use affinemod_core::{
    Budget, Error, Ideal, MonomialOrder, Polynomial, PresentedAlgebra, Ring, WeightFunction,
};
use std::sync::Arc;

use crate::ast::*;
use crate::corpus;
use crate::error::ExitClass;
use crate::report::{Caps, ErrorInfo, Fields, Report, RunOutput};

/// Run settings. Output depends only on the script and these values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Seed for generic choices (`modify ... generic n`).
    pub seed: u64,
    /// Limit on Gröbner reduction steps for ideals declared in the script.
    pub cap_groebner: Option<usize>,
    /// Limit on derivation chains, filtration chains and gr descent steps.
    pub cap_chain: usize,
    /// Record wall-clock time per report.
    pub timing: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            cap_groebner: None,
            cap_chain: DEFAULT_CHAIN_BOUND,
            timing: false,
        }
    }
}

impl Config {
    fn budget(&self) -> Budget {
        match self.cap_groebner {
            Some(n) => Budget {
                max_steps: n,
                ..Budget::default()
            },
            None => Budget::default(),
        }
    }
}

struct PendingLocus {
    base: PresentedAlgebra,
    ideal: Ideal,
    modulus: Polynomial,
    generic: Option<u32>,
    built: Option<ModificationLocus>,
}

enum Value {
    Algebra(PresentedAlgebra),
    Ideal(PresentedAlgebra, Ideal),
    Weights(WeightFunction),
    Derivation(Box<Derivation>),
    Locus(Box<PendingLocus>),
    Family(FamilyParams),
    Graded(Box<GradedPresentation>),
}

struct Env<'c> {
    config: &'c Config,
    values: HashMap<String, Value>,
    current: Option<PresentedAlgebra>,
}

type Out = Result<(Fields, Option<bool>), Error>;

fn missing(name: &Name) -> Error {
    Error::invariant(format!("`{name}` has no value"))
}

fn poly(ring: &Arc<Ring>, e: &Expr) -> Result<Polynomial, Error> {
    e.to_polynomial(ring)
}

fn gb(i: &Ideal) -> Result<Vec<String>, Error> {
    Ok(i.groebner_basis(&MonomialOrder::DegRevLex)?
        .iter()
        .map(|p| p.to_string())
        .collect())
}

fn status_name(s: PresentationStatus) -> &'static str {
    match s {
        PresentationStatus::RegularSequenceCertified => "regular_sequence_certified",
        PresentationStatus::Unverified => "unverified",
    }
}

pub fn family_params(decl: &FamilyDecl) -> FamilyParams {
    FamilyParams {
        k: decl.k,
        l: decl.l,
        n: decl.n.clone(),
        q: decl.q.iter().map(|e| e.to_string()).collect(),
        blocks: decl
            .roots
            .iter()
            .map(|r| RootBlock {
                root: r.root,
                n: r.n.clone(),
                r: r.r.iter().map(|e| e.to_string()).collect(),
            })
            .collect(),
        e: decl.e,
    }
}

impl Env<'_> {
    fn current(&self) -> Result<&PresentedAlgebra, Error> {
        self.current
            .as_ref()
            .ok_or_else(|| Error::invariant("no current ring"))
    }

    fn algebra(&self, name: &Name) -> Result<PresentedAlgebra, Error> {
        match self.values.get(&name.text) {
            Some(Value::Algebra(a)) => Ok(a.clone()),
            Some(Value::Graded(g)) => Ok(g.graded().clone()),
            _ => Err(missing(name)),
        }
    }

    fn graded(&self, name: &Name) -> Result<&GradedPresentation, Error> {
        match self.values.get(&name.text) {
            Some(Value::Graded(g)) => Ok(g),
            _ => Err(missing(name)),
        }
    }

    fn derivation(&self, name: &Name) -> Result<&Derivation, Error> {
        match self.values.get(&name.text) {
            Some(Value::Derivation(d)) => Ok(d),
            _ => Err(missing(name)),
        }
    }

    fn family(&self, name: &Name) -> Result<&FamilyParams, Error> {
        match self.values.get(&name.text) {
            Some(Value::Family(f)) => Ok(f),
            _ => Err(missing(name)),
        }
    }

    /// Loci are validated on first use so that the error is reported by the
    /// command that needs the locus.
    fn locus(&mut self, name: &Name) -> Result<ModificationLocus, Error> {
        let seed = self.config.seed;
        let Some(Value::Locus(p)) = self.values.get_mut(&name.text) else {
            return Err(missing(name));
        };
        if let Some(l) = &p.built {
            return Ok(l.clone());
        }
        let loc = match p.generic {
            None => ModificationLocus::new(&p.base, &p.ideal, &p.modulus)?,
            Some(len) => {
                let seq = generic_semiregular_extension(
                    &p.base,
                    &p.ideal,
                    &p.modulus,
                    len as usize,
                    seed,
                )?;
                ModificationLocus::with_sequence(&p.base, &p.ideal, seq)?
            }
        };
        p.built = Some(loc.clone());
        Ok(loc)
    }

    fn bind(&mut self, name: &Name, v: Value) {
        self.values.insert(name.text.clone(), v);
    }

    fn exec(&mut self, stmt: &StmtKind) -> Out {
        let cap = self.config.cap_chain;
        let mut f = Fields::default();
        let mut certified = None;
        match stmt {
            StmtKind::Ring {
                name,
                vars,
                relations,
            } => {
                let names: Vec<&str> = vars.iter().map(|v| v.text.as_str()).collect();
                let ring = Ring::new(&names)?;
                let rels = relations
                    .iter()
                    .map(|e| poly(&ring, e))
                    .collect::<Result<Vec<_>, _>>()?;
                let alg = PresentedAlgebra::new(
                    Ideal::new(&ring, rels).with_budget(self.config.budget()),
                )?;
                self.current = Some(alg.clone());
                self.bind(name, Value::Algebra(alg));
            }
            StmtKind::Ideal { name, gens } => {
                let alg = self.current()?.clone();
                let gens = gens
                    .iter()
                    .map(|e| poly(alg.ring(), e))
                    .collect::<Result<Vec<_>, _>>()?;
                let ideal = alg.ideal().derive(gens);
                self.bind(name, Value::Ideal(alg, ideal));
            }
            StmtKind::Weights { name, entries } => {
                let ring = self.current()?.ring().clone();
                let named: Vec<(&str, Vec<i64>)> = entries
                    .iter()
                    .map(|(v, w)| (v.text.as_str(), w.clone()))
                    .collect();
                let w = WeightFunction::from_named(&ring, &named)?;
                self.bind(name, Value::Weights(w));
            }
            StmtKind::Derivation { name, body } => {
                let d = match body {
                    DerivationBody::Images(images) => {
                        let alg = self.current()?.clone();
                        let ring = alg.ring();
                        let mut imgs = vec![Polynomial::zero(ring); ring.nvars()];
                        for (v, e) in images {
                            imgs[ring.var_index(&v.text)?] = poly(ring, e)?;
                        }
                        Derivation::new(&alg, imgs)?
                    }
                    DerivationBody::Jacobian {
                        graded,
                        first,
                        second,
                    } => {
                        let gp = self.graded(graded)?;
                        let ring = gp.graded().ring();
                        jacobian_derivation(gp, &poly(ring, first)?, &poly(ring, second)?)?
                    }
                };
                self.bind(name, Value::Derivation(Box::new(d)));
            }
            StmtKind::Modify {
                name,
                ideal,
                modulus,
                generic,
            } => {
                let Some(Value::Ideal(base, i)) = self.values.get(&ideal.text) else {
                    return Err(missing(ideal));
                };
                let modulus = poly(base.ring(), modulus)?;
                let p = PendingLocus {
                    base: base.clone(),
                    ideal: i.clone(),
                    modulus,
                    generic: *generic,
                    built: None,
                };
                self.bind(name, Value::Locus(Box::new(p)));
            }
            StmtKind::Family { name, params } => {
                self.bind(name, Value::Family(family_params(params)));
            }
            StmtKind::Davis { locus, vars } => {
                let loc = self.locus(locus)?;
                let names: Vec<String> = vars.iter().map(|v| v.text.clone()).collect();
                let pres =
                    davis_presentation(&loc, (!names.is_empty()).then_some(names.as_slice()))?;
                f.list("sequence", loc.sequence())
                    .list("new_variables", pres.new_vars())
                    .list("relations", pres.relations())
                    .text("status", status_name(pres.status()))
                    .int("dimension", pres.algebra().dimension()?);
                if !pres.warnings().is_empty() {
                    f.list("warnings", pres.warnings());
                }
                certified = Some(pres.status() == PresentationStatus::RegularSequenceCertified);
            }
            StmtKind::Ideals { locus } => {
                let loc = self.locus(locus)?;
                let pres = davis_presentation(&loc, None)?;
                let mi = modification_ideals(&loc, &pres, None)?;
                f.list("exceptional", &gb(&mi.exceptional)?)
                    .list("divisor", &gb(&mi.divisor)?)
                    .list("center", &gb(&mi.center)?)
                    .list(
                        "geometric_center_closure",
                        &gb(&mi.geometric_center_closure)?,
                    );
            }
            StmtKind::Largest { locus } => {
                let loc = self.locus(locus)?;
                let li = largest_ideal(&loc, cap)?;
                let chain = li
                    .chain
                    .iter()
                    .map(|i| Ok(format!("[{}]", gb(i)?.join(", "))))
                    .collect::<Result<Vec<_>, Error>>()?;
                f.list("chain", &chain);
                match li.stabilized_at {
                    Some(m) => f.int("stabilized_at", m as i64),
                    None => f.text("stabilized_at", "not within cap"),
                };
                f.list("ideal", &gb(&li.ideal)?)
                    .bool("unit", li.ideal.is_unit()?);
                certified = Some(li.stabilized_at.is_some());
            }
            StmtKind::Split {
                locus,
                first,
                second,
            } => {
                let loc = self.locus(locus)?;
                let ring = loc.base().ring().clone();
                let s = compose_split(&loc, &poly(&ring, first)?, &poly(&ring, second)?)?;
                f.list("first_relations", s.first_presentation.relations())
                    .list("second_relations", s.second_presentation.relations())
                    .list("direct_relations", s.direct.relations())
                    .bool("isomorphic", s.isomorphic);
                certified = Some(s.isomorphic);
            }
            StmtKind::Fiber { loci } => {
                let locs = loci
                    .iter()
                    .map(|l| self.locus(l))
                    .collect::<Result<Vec<_>, _>>()?;
                let alg = fiber_product_presentation(&locs, None)?;
                f.list("variables", alg.ring().names())
                    .list("relations", alg.relations())
                    .int("dimension", alg.dimension()?);
            }
            StmtKind::BasicStep {
                name,
                base,
                modulus,
                centers,
                exponent,
                vars,
            } => {
                let alg = self.algebra(base)?;
                let ring = alg.ring().clone();
                let g = poly(&ring, modulus)?;
                let cs = centers
                    .iter()
                    .map(|e| poly(&ring, e))
                    .collect::<Result<Vec<_>, _>>()?;
                let names: Vec<String> = vars.iter().map(|v| v.text.clone()).collect();
                let step = basic_step(
                    &alg,
                    &g,
                    &cs,
                    *exponent,
                    None,
                    (!names.is_empty()).then_some(names.as_slice()),
                )?;
                let next = step.next.algebra().clone();
                f.list("new_variables", step.next.new_vars())
                    .list("relations", step.next.relations())
                    .text("status", status_name(step.next.status()))
                    .text("transferred_modulus", step.transferred.modulus())
                    .list("transferred_sequence", step.transferred.sequence());
                certified =
                    Some(step.next.status() == PresentationStatus::RegularSequenceCertified);
                self.current = Some(next.clone());
                self.bind(name, Value::Algebra(next));
            }
            StmtKind::Graded { name, source } => {
                let gp = match source {
                    GradedSource::Weighted { algebra, weights } => {
                        let alg = self.algebra(algebra)?;
                        let Some(Value::Weights(w)) = self.values.get(&weights.text) else {
                            return Err(missing(weights));
                        };
                        graded_ideal(&alg, w)?
                    }
                    GradedSource::Family(fam) => {
                        let fam = build_family(self.family(fam)?)?;
                        f.int("e", fam.e)
                            .list("principal_system", &fam.principal_system);
                        fam.hat
                    }
                };
                let ring = gp.weights().ring().clone();
                let weights: Vec<String> = ring
                    .names()
                    .iter()
                    .zip(gp.weights().weights())
                    .map(|(v, w)| {
                        let parts: Vec<String> = w.0.iter().map(|x| x.to_string()).collect();
                        format!("{v}: ({})", parts.join(", "))
                    })
                    .collect();
                let lifts: Vec<String> = gp
                    .lifts()
                    .iter()
                    .map(|(g, h)| format!("{g}  =>  {h}"))
                    .collect();
                f.list("weights", &weights)
                    .list("graded_relations", gp.graded().relations())
                    .list("lifts", &lifts)
                    .text("status", status_name(gp.status()));
                certified = Some(gp.status() == PresentationStatus::RegularSequenceCertified);
                self.current = Some(gp.graded().clone());
                self.bind(name, Value::Graded(Box::new(gp)));
            }
            StmtKind::Gr { graded, element } => {
                let gp = self.graded(graded)?;
                let a = poly(gp.source().ring(), element)?;
                let g = gr_element(&a, gp, cap)?;
                let deg: Vec<String> = g.degree.0.iter().map(|x| x.to_string()).collect();
                f.text("element", &a)
                    .text("representative", &g.representative)
                    .text("component", &g.component)
                    .text("degree", format!("({})", deg.join(", ")))
                    .int("steps", g.steps as i64);
            }
            StmtKind::LndCheck { derivation } => {
                let d = self.derivation(derivation)?;
                let v = d.lnd_check(cap)?;
                f.text("derivation", d).text("verdict", &v);
                certified = Some(v.is_certified());
            }
            StmtKind::Degree {
                derivation,
                element,
            } => {
                let d = self.derivation(derivation)?;
                let a = poly(d.ring(), element)?;
                let r = d.degree(&a, cap)?;
                f.text("element", &r.element).int("degree", r.degree as i64);
            }
            StmtKind::Exp {
                derivation,
                element,
            } => {
                let d = self.derivation(derivation)?;
                let a = poly(d.ring(), element)?;
                let t = d.ring().fresh_name("t");
                let img = d.exp_action(&t, &a, cap)?;
                f.text("element", &a)
                    .text("parameter", &t)
                    .text("image", &img);
            }
            StmtKind::Jacobian {
                graded,
                first,
                second,
            } => {
                let gp = self.graded(graded)?;
                let ring = gp.graded().ring();
                let d = jacobian_derivation(gp, &poly(ring, first)?, &poly(ring, second)?)?;
                let v = d.lnd_check(cap)?;
                let images: Vec<String> = ring
                    .names()
                    .iter()
                    .zip(d.images())
                    .map(|(n, p)| format!("D({n}) = {p}"))
                    .collect();
                f.list("images", &images).text("verdict", &v);
                certified = Some(v.is_certified());
            }
            StmtKind::MlCert { family } => {
                let r = ml_report(self.family(family)?)?;
                let json = serde_json::to_value(&r)
                    .map_err(|e| Error::invariant(format!("certificate serialization: {e}")))?;
                f.rich("certificate", r.to_string(), json);
                certified = Some(r.is_certified());
            }
            StmtKind::Corpus => {
                let entries: Vec<String> = corpus::ENTRIES
                    .iter()
                    .map(|e| format!("{}: {}", e.name, e.description))
                    .collect();
                f.list("entries", &entries);
            }
        }
        Ok((f, certified))
    }
}

fn is_declaration(k: &StmtKind) -> bool {
    matches!(
        k,
        StmtKind::Ring { .. }
            | StmtKind::Ideal { .. }
            | StmtKind::Weights { .. }
            | StmtKind::Derivation { .. }
            | StmtKind::Modify { .. }
            | StmtKind::Family { .. }
    )
}

/// Executes the statements in order. Declarations report only when they fail;
/// the run stops at the first failing statement.
pub fn run(script: &Script, config: &Config, script_name: &str) -> RunOutput {
    let mut env = Env {
        config,
        values: HashMap::new(),
        current: None,
    };
    let mut reports = Vec::new();
    let mut exit_class = ExitClass::Success;
    for stmt in &script.statements {
        let start = Instant::now();
        let outcome = env.exec(&stmt.kind);
        let elapsed_ms = config.timing.then(|| start.elapsed().as_millis() as u64);
        let command = stmt.to_string();
        let line = stmt.span.line;
        match outcome {
            Ok((result, certified)) => {
                if !is_declaration(&stmt.kind) {
                    reports.push(Report {
                        command,
                        line,
                        certified,
                        result,
                        error: None,
                        elapsed_ms,
                    });
                }
            }
            Err(e) => {
                exit_class = ExitClass::of(&e);
                reports.push(Report {
                    command,
                    line,
                    certified: None,
                    result: Fields::default(),
                    error: Some(ErrorInfo {
                        class: exit_class,
                        exit_code: exit_class.code(),
                        message: e.to_string(),
                    }),
                    elapsed_ms,
                });
                break;
            }
        }
    }
    RunOutput {
        schema: 1,
        script: script_name.to_string(),
        seed: config.seed,
        caps: Caps {
            groebner_steps: config.cap_groebner,
            chain: config.cap_chain,
        },
        reports,
        exit_class,
        exit_code: exit_class.code(),
    }
}
