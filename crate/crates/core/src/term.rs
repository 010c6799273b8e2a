//! First-order terms: variables, constants and compound terms.

use std::collections::BTreeSet;
use std::fmt;

/// A term is a variable, a constant, or a functor applied to one or more
/// arguments. Arity-0 functors are represented as constants.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Variable(String),
    Constant(String),
    Compound(String, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Variable(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Term {
        Term::Constant(name.into())
    }

    /// Builds a compound term. An empty argument list collapses to a constant.
    pub fn compound(functor: impl Into<String>, args: Vec<Term>) -> Term {
        let functor = functor.into();
        if args.is_empty() {
            Term::Constant(functor)
        } else {
            Term::Compound(functor, args)
        }
    }

    pub fn is_variable(&self) -> bool {
        matches!(self, Term::Variable(_))
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Variable(_) => false,
            Term::Constant(_) => true,
            Term::Compound(_, args) => args.iter().all(Term::is_ground),
        }
    }

    /// Function-free in the sense of depth 1: no functor of arity >= 1.
    pub fn is_function_free(&self) -> bool {
        !matches!(self, Term::Compound(_, _))
    }

    /// Depth of a term: variables and constants have depth 1, a compound term
    /// has depth 1 plus the depth of its deepest argument.
    pub fn depth(&self) -> usize {
        match self {
            Term::Variable(_) | Term::Constant(_) => 1,
            Term::Compound(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    pub fn occurs(&self, var: &str) -> bool {
        match self {
            Term::Variable(v) => v == var,
            Term::Constant(_) => false,
            Term::Compound(_, args) => args.iter().any(|a| a.occurs(var)),
        }
    }

    pub fn collect_variables(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Variable(v) => {
                out.insert(v.clone());
            }
            Term::Constant(_) => {}
            Term::Compound(_, args) => {
                for a in args {
                    a.collect_variables(out);
                }
            }
        }
    }

    /// Variables in first-occurrence order, left to right.
    pub fn push_variables(&self, out: &mut Vec<String>) {
        match self {
            Term::Variable(v) => {
                if !out.iter().any(|x| x == v) {
                    out.push(v.clone());
                }
            }
            Term::Constant(_) => {}
            Term::Compound(_, args) => {
                for a in args {
                    a.push_variables(out);
                }
            }
        }
    }

    pub fn collect_constants(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Variable(_) => {}
            Term::Constant(c) => {
                out.insert(c.clone());
            }
            Term::Compound(_, args) => {
                for a in args {
                    a.collect_constants(out);
                }
            }
        }
    }

    /// The term itself plus all its subterms.
    pub fn collect_subterms(&self, out: &mut BTreeSet<Term>) {
        out.insert(self.clone());
        if let Term::Compound(_, args) = self {
            for a in args {
                a.collect_subterms(out);
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Variable(v) => write!(f, "{v}"),
            Term::Constant(c) => write!(f, "{c}"),
            Term::Compound(functor, args) => {
                write!(f, "{functor}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Reserved namespace for generated variables: `V<digits>` (and the lowercase
/// spelling, which the parser rejects as well).
pub fn is_reserved_variable(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('V') | Some('v')) && {
        let rest = &name[1..];
        !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit())
    }
}

/// Reserved namespace for Skolem constants: `sk<digits>`.
pub fn is_reserved_constant(name: &str) -> bool {
    name.len() > 2
        && (name.starts_with("sk") || name.starts_with("SK"))
        && name[2..].bytes().all(|b| b.is_ascii_digit())
}

/// Deterministic source of fresh variable names from the reserved `V`
/// namespace, skipping any names already in use.
#[derive(Debug, Default, Clone)]
pub struct FreshVars {
    next: usize,
    used: BTreeSet<String>,
}

impl FreshVars {
    pub fn new() -> Self {
        FreshVars::default()
    }

    /// Marks every variable of `names` as taken.
    pub fn reserve<I: IntoIterator<Item = String>>(&mut self, names: I) {
        self.used.extend(names);
    }

    pub fn fresh(&mut self) -> String {
        loop {
            let candidate = format!("V{}", self.next);
            self.next += 1;
            if !self.used.contains(&candidate) {
                self.used.insert(candidate.clone());
                return candidate;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2a() -> Term {
        // f(f(a))
        Term::compound("f", vec![Term::compound("f", vec![Term::constant("a")])])
    }

    #[test]
    fn depth_of_terms() {
        assert_eq!(Term::var("x").depth(), 1);
        assert_eq!(Term::constant("a").depth(), 1);
        let t = Term::compound("f", vec![Term::constant("a"), Term::var("x")]);
        assert_eq!(t.depth(), 2);
        assert_eq!(f2a().depth(), 3);
    }

    #[test]
    fn ground_and_function_free() {
        assert!(f2a().is_ground());
        assert!(!f2a().is_function_free());
        assert!(Term::constant("a").is_function_free());
        assert!(!Term::var("x").is_ground());
    }

    #[test]
    fn subterms_are_closed() {
        let mut out = BTreeSet::new();
        f2a().collect_subterms(&mut out);
        assert_eq!(out.len(), 3); // f(f(a)), f(a), a
        assert!(out.contains(&Term::constant("a")));
    }

    #[test]
    fn reserved_namespaces() {
        assert!(is_reserved_variable("V0"));
        assert!(is_reserved_variable("v12"));
        assert!(!is_reserved_variable("Vx"));
        assert!(!is_reserved_variable("X0"));
        assert!(is_reserved_constant("sk3"));
        assert!(!is_reserved_constant("skolem"));
    }

    #[test]
    fn fresh_vars_skip_used() {
        let mut gen = FreshVars::new();
        gen.reserve(["V0".to_string(), "V2".to_string()]);
        assert_eq!(gen.fresh(), "V1");
        assert_eq!(gen.fresh(), "V3");
    }
}
