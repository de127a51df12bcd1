use std::fmt;

use affinemod_core::poly::{Expr, Span};

/// An identifier with the place it was written. Equality ignores the span.
#[derive(Debug, Clone, Eq)]
pub struct Name {
    pub text: String,
    pub span: Span,
}

impl Name {
    pub fn new(text: impl Into<String>) -> Self {
        Name {
            text: text.into(),
            span: Span::default(),
        }
    }
}

impl PartialEq for Name {
    fn eq(&self, other: &Self) -> bool {
        self.text == other.text
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Script {
    pub statements: Vec<Statement>,
}

/// One declaration or command; `span` points at its leading keyword.
#[derive(Debug, Clone, Eq)]
pub struct Statement {
    pub kind: StmtKind,
    pub span: Span,
}

impl Statement {
    pub fn new(kind: StmtKind) -> Self {
        Statement {
            kind,
            span: Span::default(),
        }
    }
}

impl PartialEq for Statement {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StmtKind {
    Ring {
        name: Name,
        vars: Vec<Name>,
        relations: Vec<Expr>,
    },
    Ideal {
        name: Name,
        gens: Vec<Expr>,
    },
    Weights {
        name: Name,
        entries: Vec<(Name, Vec<i64>)>,
    },
    Derivation {
        name: Name,
        body: DerivationBody,
    },
    Modify {
        name: Name,
        ideal: Name,
        modulus: Expr,
        /// Length of a generic semi-regular sequence to draw instead of the
        /// generators of the ideal.
        generic: Option<u32>,
    },
    Family {
        name: Name,
        params: FamilyDecl,
    },
    Davis {
        locus: Name,
        vars: Vec<Name>,
    },
    Ideals {
        locus: Name,
    },
    Largest {
        locus: Name,
    },
    Split {
        locus: Name,
        first: Expr,
        second: Expr,
    },
    Fiber {
        loci: Vec<Name>,
    },
    BasicStep {
        name: Name,
        base: Name,
        modulus: Expr,
        centers: Vec<Expr>,
        exponent: u32,
        vars: Vec<Name>,
    },
    Graded {
        name: Name,
        source: GradedSource,
    },
    Gr {
        graded: Name,
        element: Expr,
    },
    LndCheck {
        derivation: Name,
    },
    Degree {
        derivation: Name,
        element: Expr,
    },
    Exp {
        derivation: Name,
        element: Expr,
    },
    Jacobian {
        graded: Name,
        first: Expr,
        second: Expr,
    },
    MlCert {
        family: Name,
    },
    Corpus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerivationBody {
    Images(Vec<(Name, Expr)>),
    Jacobian {
        graded: Name,
        first: Expr,
        second: Expr,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradedSource {
    Weighted { algebra: Name, weights: Name },
    Family(Name),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FamilyDecl {
    pub k: u32,
    pub l: u32,
    pub n: Vec<u32>,
    pub q: Vec<Expr>,
    pub e: Option<i64>,
    pub roots: Vec<RootDecl>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDecl {
    pub root: i64,
    pub n: Vec<u32>,
    pub r: Vec<Expr>,
}

impl StmtKind {
    /// The keyword that starts the statement.
    pub fn keyword(&self) -> &'static str {
        match self {
            StmtKind::Ring { .. } => "ring",
            StmtKind::Ideal { .. } => "ideal",
            StmtKind::Weights { .. } => "weights",
            StmtKind::Derivation { .. } => "derivation",
            StmtKind::Modify { .. } => "modify",
            StmtKind::Family { .. } => "family",
            StmtKind::Davis { .. } => "davis",
            StmtKind::Ideals { .. } => "ideals",
            StmtKind::Largest { .. } => "largest",
            StmtKind::Split { .. } => "split",
            StmtKind::Fiber { .. } => "fiber",
            StmtKind::BasicStep { .. } => "basicstep",
            StmtKind::Graded { .. } => "graded",
            StmtKind::Gr { .. } => "gr",
            StmtKind::LndCheck { .. } => "lndcheck",
            StmtKind::Degree { .. } => "degree",
            StmtKind::Exp { .. } => "exp",
            StmtKind::Jacobian { .. } => "jacobian",
            StmtKind::MlCert { .. } => "mlcert",
            StmtKind::Corpus => "corpus",
        }
    }
}

struct Sep<'a, T>(&'a [T], &'static str);

impl<T: fmt::Display> fmt::Display for Sep<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(self.1)?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

fn list<T: fmt::Display>(xs: &[T]) -> Sep<'_, T> {
    Sep(xs, ", ")
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}

impl fmt::Display for StmtKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kw = self.keyword();
        match self {
            StmtKind::Ring {
                name,
                vars,
                relations,
            } => {
                write!(f, "{kw} {name} = Q[{}]", list(vars))?;
                if !relations.is_empty() {
                    write!(f, " / ({})", list(relations))?;
                }
            }
            StmtKind::Ideal { name, gens } => write!(f, "{kw} {name} = ({})", list(gens))?,
            StmtKind::Weights { name, entries } => {
                write!(f, "{kw} {name} = {{ ")?;
                for (i, (v, w)) in entries.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{v}: ({})", list(w))?;
                }
                f.write_str(" }")?;
            }
            StmtKind::Derivation { name, body } => {
                write!(f, "{kw} {name} = ")?;
                match body {
                    DerivationBody::Images(images) => {
                        f.write_str("{ ")?;
                        for (i, (v, e)) in images.iter().enumerate() {
                            if i > 0 {
                                f.write_str(", ")?;
                            }
                            write!(f, "{v} -> {e}")?;
                        }
                        f.write_str(" }")?;
                    }
                    DerivationBody::Jacobian {
                        graded,
                        first,
                        second,
                    } => write!(f, "jacobian({graded}, {first}, {second})")?,
                }
            }
            StmtKind::Modify {
                name,
                ideal,
                modulus,
                generic,
            } => {
                write!(f, "{kw} {name} = ({ideal}, {modulus})")?;
                if let Some(len) = generic {
                    write!(f, " generic {len}")?;
                }
            }
            StmtKind::Family { name, params } => write!(f, "{kw} {name} {params}")?,
            StmtKind::Davis { locus, vars } => {
                write!(f, "{kw} {locus}")?;
                if !vars.is_empty() {
                    write!(f, " [{}]", list(vars))?;
                }
            }
            StmtKind::Ideals { locus } | StmtKind::Largest { locus } => write!(f, "{kw} {locus}")?,
            StmtKind::Split {
                locus,
                first,
                second,
            } => write!(f, "{kw} {locus} ({first}, {second})")?,
            StmtKind::Fiber { loci } => write!(f, "{kw} {}", list(loci))?,
            StmtKind::BasicStep {
                name,
                base,
                modulus,
                centers,
                exponent,
                vars,
            } => {
                write!(
                    f,
                    "{kw} {name} = ({base}, {modulus}, [{}], {exponent})",
                    list(centers)
                )?;
                if !vars.is_empty() {
                    write!(f, " [{}]", list(vars))?;
                }
            }
            StmtKind::Graded { name, source } => match source {
                GradedSource::Weighted { algebra, weights } => {
                    write!(f, "{kw} {name} = ({algebra}, {weights})")?
                }
                GradedSource::Family(fam) => write!(f, "{kw} {name} = {fam}")?,
            },
            StmtKind::Gr { graded, element } => write!(f, "{kw} {graded} ({element})")?,
            StmtKind::LndCheck { derivation } => write!(f, "{kw} {derivation}")?,
            StmtKind::Degree {
                derivation,
                element,
            }
            | StmtKind::Exp {
                derivation,
                element,
            } => write!(f, "{kw} {derivation} ({element})")?,
            StmtKind::Jacobian {
                graded,
                first,
                second,
            } => write!(f, "{kw} {graded} ({first}, {second})")?,
            StmtKind::MlCert { family } => write!(f, "{kw} {family}")?,
            StmtKind::Corpus => f.write_str(kw)?,
        }
        f.write_str(";")
    }
}

impl fmt::Display for FamilyDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{ k={} l={} n=[{}] q=[{}]",
            self.k,
            self.l,
            list(&self.n),
            list(&self.q)
        )?;
        if let Some(e) = self.e {
            write!(f, " e={e}")?;
        }
        for r in &self.roots {
            write!(
                f,
                " root {} {{ n=[{}] r=[{}] }}",
                r.root,
                list(&r.n),
                list(&r.r)
            )?;
        }
        f.write_str(" }")
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
