//! Signed predicates over terms.

use crate::term::Term;
use std::collections::BTreeSet;
use std::fmt;

/// A literal is an atom or a negated atom. The derived ordering (sign, then
/// predicate, then arguments) is the canonical literal order used everywhere
/// for deterministic iteration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub positive: bool,
    pub predicate: String,
    pub args: Vec<Term>,
}

impl Literal {
    pub fn new(positive: bool, predicate: impl Into<String>, args: Vec<Term>) -> Literal {
        Literal {
            positive,
            predicate: predicate.into(),
            args,
        }
    }

    pub fn pos(predicate: impl Into<String>, args: Vec<Term>) -> Literal {
        Literal::new(true, predicate, args)
    }

    pub fn neg(predicate: impl Into<String>, args: Vec<Term>) -> Literal {
        Literal::new(false, predicate, args)
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    /// Same predicate, same arguments, opposite sign.
    pub fn is_complement_of(&self, other: &Literal) -> bool {
        self.positive != other.positive
            && self.predicate == other.predicate
            && self.args == other.args
    }

    pub fn negated(&self) -> Literal {
        Literal {
            positive: !self.positive,
            predicate: self.predicate.clone(),
            args: self.args.clone(),
        }
    }

    /// True when two literals could be made equal by a substitution: same
    /// sign, predicate and arity.
    pub fn compatible(&self, other: &Literal) -> bool {
        self.positive == other.positive
            && self.predicate == other.predicate
            && self.arity() == other.arity()
    }

    pub fn is_ground(&self) -> bool {
        self.args.iter().all(Term::is_ground)
    }

    pub fn is_function_free(&self) -> bool {
        self.args.iter().all(Term::is_function_free)
    }

    pub fn depth(&self) -> usize {
        self.args.iter().map(Term::depth).max().unwrap_or(0)
    }

    pub fn collect_variables(&self, out: &mut BTreeSet<String>) {
        for a in &self.args {
            a.collect_variables(out);
        }
    }

    pub fn push_variables(&self, out: &mut Vec<String>) {
        for a in &self.args {
            a.push_variables(out);
        }
    }

    pub fn collect_constants(&self, out: &mut BTreeSet<String>) {
        for a in &self.args {
            a.collect_constants(out);
        }
    }

    pub fn collect_subterms(&self, out: &mut BTreeSet<Term>) {
        for a in &self.args {
            a.collect_subterms(out);
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            write!(f, "~")?;
        }
        write!(f, "{}", self.predicate)?;
        if !self.args.is_empty() {
            write!(f, "(")?;
            for (i, a) in self.args.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complements() {
        let p = Literal::pos("p", vec![Term::var("x")]);
        let np = Literal::neg("p", vec![Term::var("x")]);
        assert!(p.is_complement_of(&np));
        assert!(!p.is_complement_of(&p));
        assert_eq!(p.negated(), np);
    }

    #[test]
    fn compatibility_requires_sign_and_arity() {
        let p1 = Literal::pos("p", vec![Term::var("x")]);
        let p2 = Literal::pos("p", vec![Term::constant("a")]);
        let q = Literal::pos("q", vec![Term::var("x")]);
        assert!(p1.compatible(&p2));
        assert!(!p1.compatible(&q));
        assert!(!p1.compatible(&p1.negated()));
    }
}
