//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum MonomialOrder {
    Lex,
    /// Graded reverse lexicographic.
    GrevLex,
    /// Elimination block order: first variable dominates, GrevLex on the rest.
    ElimFirst,
}

impl MonomialOrder {
    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrevLex => "grevlex",
            MonomialOrder::ElimFirst => "elim1-grevlex",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "lex" => Some(MonomialOrder::Lex),
            "grevlex" | "graded-reverse-lex" => Some(MonomialOrder::GrevLex),
            "elim1-grevlex" | "elim1" => Some(MonomialOrder::ElimFirst),
            _ => None,
        }
    }
}

/// Exponent vector aligned with a declared variable sequence.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial {
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, rhs: &Self) -> bool {
        self.exps.iter().zip(&rhs.exps).all(|(a, b)| a <= b)
    }

    /// rhs / self, assuming divisibility.
    pub fn div_into(&self, rhs: &Self) -> Self {
        Monomial {
            exps: rhs
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, rhs: &Self) -> Self {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, rhs: &Self) -> bool {
        self.exps.iter().zip(&rhs.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn cmp_under(&self, rhs: &Self, order: MonomialOrder) -> Ordering {
        match order {
            MonomialOrder::Lex => self.exps.cmp(&rhs.exps),
            MonomialOrder::GrevLex => {
                let (da, db) = (self.total_degree(), rhs.total_degree());
                if da != db {
                    return da.cmp(&db);
                }
                for (a, b) in self.exps.iter().zip(&rhs.exps).rev() {
                    if a != b {
                        // smaller exponent in the last differing variable wins
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::ElimFirst => {
                match self.exps[0].cmp(&rhs.exps[0]) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                let (da, db) = (
                    self.total_degree() - self.exps[0],
                    rhs.total_degree() - rhs.exps[0],
                );
                if da != db {
                    return da.cmp(&db);
                }
                for (a, b) in self.exps.iter().zip(&rhs.exps).skip(1).rev() {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial { exps: e.to_vec() }
    }

    #[test]
    fn lex_order() {
        // x > y: x^1 > y^5 under lex
        assert_eq!(
            m(&[1, 0]).cmp_under(&m(&[0, 5]), MonomialOrder::Lex),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_order() {
        // degree first
        assert_eq!(
            m(&[0, 2]).cmp_under(&m(&[1, 0]), MonomialOrder::GrevLex),
            Ordering::Greater
        );
        // same degree: x^2 y > x y^2 (smaller power of the last variable wins)
        assert_eq!(
            m(&[2, 1]).cmp_under(&m(&[1, 2]), MonomialOrder::GrevLex),
            Ordering::Greater
        );
    }

    #[test]
    fn order_compatible_with_multiplication() {
        let a = m(&[1, 2]);
        let b = m(&[2, 0]);
        let c = m(&[1, 1]);
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            let rel = a.cmp_under(&b, order);
            assert_eq!(a.mul(&c).cmp_under(&b.mul(&c), order), rel);
        }
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0]).divides(&m(&[2, 3])));
        assert!(!m(&[1, 4]).divides(&m(&[2, 3])));
        assert_eq!(m(&[1, 1]).div_into(&m(&[2, 3])), m(&[1, 2]));
        assert_eq!(m(&[2, 0]).lcm(&m(&[1, 3])), m(&[2, 3]));
        assert!(m(&[1, 0]).coprime(&m(&[0, 2])));
    }
}
