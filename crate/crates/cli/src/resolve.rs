use std::collections::HashMap;

use crate::ast::*;
use crate::error::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Algebra,
    Ideal,
    Weights,
    Derivation,
    Locus,
    Family,
    Graded,
}

impl Kind {
    fn describe(self) -> &'static str {
        match self {
            Kind::Algebra => "ring",
            Kind::Ideal => "ideal",
            Kind::Weights => "weights",
            Kind::Derivation => "derivation",
            Kind::Locus => "modification locus",
            Kind::Family => "family",
            Kind::Graded => "graded presentation",
        }
    }
}

struct Scope {
    names: HashMap<String, Kind>,
    has_ring: bool,
}

fn error(name: &Name, message: String) -> ParseError {
    ParseError {
        line: name.span.line,
        column: name.span.column,
        message,
        expected: vec![],
    }
}

impl Scope {
    fn declare(&mut self, name: &Name, kind: Kind) -> Result<(), ParseError> {
        if self.names.contains_key(&name.text) {
            return Err(error(name, format!("`{name}` is already declared")));
        }
        self.names.insert(name.text.clone(), kind);
        Ok(())
    }

    fn lookup(&self, name: &Name, accepted: &[Kind]) -> Result<(), ParseError> {
        match self.names.get(&name.text) {
            None => Err(error(name, format!("`{name}` is not declared"))),
            Some(k) if accepted.contains(k) => Ok(()),
            Some(k) => Err(error(
                name,
                format!(
                    "`{name}` is a {}, expected a {}",
                    k.describe(),
                    accepted[0].describe()
                ),
            )),
        }
    }

    fn need_ring(&self, stmt: &Statement) -> Result<(), ParseError> {
        if self.has_ring {
            Ok(())
        } else {
            Err(ParseError {
                line: stmt.span.line,
                column: stmt.span.column,
                message: format!("`{}` needs a ring declared before it", stmt.kind.keyword()),
                expected: vec![],
            })
        }
    }
}

const ALGEBRA: &[Kind] = &[Kind::Algebra, Kind::Graded];

/// Checks that every referenced name is declared earlier with the right kind
/// and that no name is declared twice.
pub fn resolve(script: &Script) -> Result<(), ParseError> {
    let mut s = Scope {
        names: HashMap::new(),
        has_ring: false,
    };
    for stmt in &script.statements {
        match &stmt.kind {
            StmtKind::Ring { name, .. } => {
                s.declare(name, Kind::Algebra)?;
                s.has_ring = true;
            }
            StmtKind::Ideal { name, .. } => {
                s.need_ring(stmt)?;
                s.declare(name, Kind::Ideal)?;
            }
            StmtKind::Weights { name, .. } => {
                s.need_ring(stmt)?;
                s.declare(name, Kind::Weights)?;
            }
            StmtKind::Derivation { name, body } => {
                match body {
                    DerivationBody::Images(_) => s.need_ring(stmt)?,
                    DerivationBody::Jacobian { graded, .. } => s.lookup(graded, &[Kind::Graded])?,
                }
                s.declare(name, Kind::Derivation)?;
            }
            StmtKind::Modify { name, ideal, .. } => {
                s.lookup(ideal, &[Kind::Ideal])?;
                s.declare(name, Kind::Locus)?;
            }
            StmtKind::Family { name, .. } => s.declare(name, Kind::Family)?,
            StmtKind::Davis { locus, .. }
            | StmtKind::Ideals { locus }
            | StmtKind::Largest { locus }
            | StmtKind::Split { locus, .. } => s.lookup(locus, &[Kind::Locus])?,
            StmtKind::Fiber { loci } => {
                for l in loci {
                    s.lookup(l, &[Kind::Locus])?;
                }
            }
            StmtKind::BasicStep { name, base, .. } => {
                s.lookup(base, ALGEBRA)?;
                s.declare(name, Kind::Algebra)?;
                s.has_ring = true;
            }
            StmtKind::Graded { name, source } => {
                match source {
                    GradedSource::Weighted { algebra, weights } => {
                        s.lookup(algebra, ALGEBRA)?;
                        s.lookup(weights, &[Kind::Weights])?;
                    }
                    GradedSource::Family(f) => s.lookup(f, &[Kind::Family])?,
                }
                s.declare(name, Kind::Graded)?;
                s.has_ring = true;
            }
            StmtKind::Gr { graded, .. } | StmtKind::Jacobian { graded, .. } => {
                s.lookup(graded, &[Kind::Graded])?
            }
            StmtKind::LndCheck { derivation }
            | StmtKind::Degree { derivation, .. }
            | StmtKind::Exp { derivation, .. } => s.lookup(derivation, &[Kind::Derivation])?,
            StmtKind::MlCert { family } => s.lookup(family, &[Kind::Family])?,
            StmtKind::Corpus => {}
        }
    }
    Ok(())
}
