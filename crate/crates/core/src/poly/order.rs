use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    DegRevLex,
    DegLex,
    Lex,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::DegRevLex => "degrevlex",
            OrderKind::DegLex => "deglex",
            OrderKind::Lex => "lex",
        })
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degrevlex" | "grevlex" => Ok(OrderKind::DegRevLex),
            "deglex" | "grlex" => Ok(OrderKind::DegLex),
            "lex" => Ok(OrderKind::Lex),
            _ => Err(Error::Parse(format!("unknown monomial order {s}"))),
        }
    }
}

/// A monomial order together with the ranking of the variables.
///
/// `priority[0]` is the flat index of the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    /// `priority` must be a permutation of `0..priority.len()`.
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &p in &priority {
            if p >= seen.len() || seen[p] {
                return Err(Error::Parse(format!(
                    "variable priority {priority:?} is not a permutation"
                )));
            }
            seen[p] = true;
        }
        Ok(MonomialOrder { kind, priority })
    }

    /// Variables ranked `x11 > x12 > ... > x1n > x21 > ... > xnn`.
    pub fn row_major(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            priority: (0..nvars).collect(),
        }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::row_major(OrderKind::DegRevLex, nvars)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    fn lex(&self, u: &Monomial, v: &Monomial) -> Ordering {
        for &i in &self.priority {
            match u.exp(i).cmp(&v.exp(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    // Ties go to the monomial with the smaller exponent in the least significant
    // variable where the two differ.
    fn revlex(&self, u: &Monomial, v: &Monomial) -> Ordering {
        for &i in self.priority.iter().rev() {
            match u.exp(i).cmp(&v.exp(i)) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Ordering {
        debug_assert_eq!(u.nvars(), self.nvars());
        debug_assert_eq!(v.nvars(), self.nvars());
        match self.kind {
            OrderKind::Lex => self.lex(u, v),
            OrderKind::DegLex => u.degree().cmp(&v.degree()).then_with(|| self.lex(u, v)),
            OrderKind::DegRevLex => u.degree().cmp(&v.degree()).then_with(|| self.revlex(u, v)),
        }
    }

    pub fn checked_compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        for m in [u, v] {
            if m.nvars() != self.nvars() {
                return Err(Error::SizeMismatch {
                    expected: self.nvars(),
                    got: m.nvars(),
                });
            }
        }
        Ok(self.compare(u, v))
    }

    pub fn is_row_major(&self) -> bool {
        self.priority.iter().enumerate().all(|(i, &p)| i == p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn degree_dominates() {
        let o = MonomialOrder::degrevlex(3);
        assert_eq!(o.compare(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1, 0]), &m(&[1, 1, 0])), Ordering::Equal);
    }

    #[test]
    fn degrevlex_ties() {
        let o = MonomialOrder::degrevlex(9);
        // x11^2 vs x11*x12
        let a = m(&[2, 0, 0, 0, 0, 0, 0, 0, 0]);
        let b = m(&[1, 1, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(o.compare(&a, &b), Ordering::Greater);
        // x12^2 > x11*x13
        let c = m(&[0, 2, 0, 0, 0, 0, 0, 0, 0]);
        let d = m(&[1, 0, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(o.compare(&c, &d), Ordering::Greater);
        // degrevlex and deglex disagree on x2^2 vs x1*x3 in three variables
        let lex = MonomialOrder::row_major(OrderKind::DegLex, 3);
        let rev = MonomialOrder::degrevlex(3);
        assert_eq!(lex.compare(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Less);
        assert_eq!(rev.compare(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::row_major(OrderKind::Lex, 2);
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn custom_priority() {
        let o = MonomialOrder::new(OrderKind::Lex, vec![1, 0]).unwrap();
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 1])), Ordering::Less);
        assert!(MonomialOrder::new(OrderKind::Lex, vec![0, 0]).is_err());
        assert!(o.checked_compare(&m(&[1]), &m(&[0, 1])).is_err());
    }
}
