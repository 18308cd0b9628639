//! Finite monoids given by multiplication tables, and the small matrix monoids
//! (`H`, `F`, `T`) whose elements are named by enums.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::semiring::{Matrix, Natural, Semiring};

/// An element of a finite monoid realised by concrete 0/1 matrices.
pub trait MatrixElement: Copy + Eq + Debug + 'static {
    /// Every element, identity first.
    const ALL: &'static [Self];

    fn matrix<S: Semiring>(self) -> Matrix<S>;

    fn name(self) -> &'static str;

    /// The element whose matrix equals `m`, if any.
    fn classify<S: Semiring>(m: &Matrix<S>) -> Option<Self> {
        Self::ALL.iter().copied().find(|e| e.matrix::<S>() == *m)
    }
}

/// Multiplication table obtained by multiplying the concrete matrices over the
/// naturals and naming each product. Fails if some product leaves the set.
pub fn multiplication_table<E: MatrixElement>() -> Result<Vec<Vec<E>>> {
    E::ALL
        .iter()
        .map(|&a| {
            E::ALL
                .iter()
                .map(|&b| {
                    let product = &a.matrix::<Natural>() * &b.matrix::<Natural>();
                    E::classify(&product).ok_or_else(|| {
                        Error::NotAMonoid(format!(
                            "{}·{} is not one of the named elements",
                            a.name(),
                            b.name()
                        ))
                    })
                })
                .collect()
        })
        .collect()
}

/// A finite monoid on `0..size` given by its Cayley table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteMonoid {
    names: Vec<String>,
    identity: usize,
    table: Vec<Vec<usize>>,
}

impl FiniteMonoid {
    /// Validates closure, the identity law and associativity.
    pub fn new(names: Vec<String>, identity: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        let size = table.len();
        if names.len() != size {
            return Err(Error::NotAMonoid(format!(
                "{} names for {size} elements",
                names.len()
            )));
        }
        if identity >= size {
            return Err(Error::NotAMonoid("identity index out of range".to_string()));
        }
        for row in &table {
            if row.len() != size || row.iter().any(|&c| c >= size) {
                return Err(Error::NotAMonoid("table is not closed".to_string()));
            }
        }
        for a in 0..size {
            if table[identity][a] != a || table[a][identity] != a {
                return Err(Error::NotAMonoid(format!(
                    "{} is not neutral for {}",
                    names[identity], names[a]
                )));
            }
        }
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAMonoid(format!(
                            "({0}{1}){2} != {0}({1}{2})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteMonoid {
            names,
            identity,
            table,
        })
    }

    pub fn from_elements<E: MatrixElement>() -> Result<Self> {
        let table = multiplication_table::<E>()?;
        let index = |e: E| {
            E::ALL
                .iter()
                .position(|&x| x == e)
                .expect("element listed in ALL")
        };
        FiniteMonoid::new(
            E::ALL.iter().map(|e| e.name().to_string()).collect(),
            0,
            table
                .into_iter()
                .map(|row| row.into_iter().map(index).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self, element: usize) -> &str {
        &self.names[element]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Product of a sequence of elements.
    pub fn product<I: IntoIterator<Item = usize>>(&self, elements: I) -> usize {
        elements
            .into_iter()
            .fold(self.identity, |acc, e| self.table[acc][e])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_associative_tables() {
        let names = || vec!["e".to_string(), "a".to_string(), "b".to_string()];
        // (aa)a = ba = b but a(aa) = ab = a.
        let bad = FiniteMonoid::new(
            names(),
            0,
            vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 2, 1]],
        );
        assert!(matches!(bad, Err(Error::NotAMonoid(_))));
        let not_neutral = FiniteMonoid::new(
            names(),
            0,
            vec![vec![0, 1, 2], vec![0, 1, 2], vec![2, 2, 2]],
        );
        assert!(not_neutral.is_err());
        let not_closed = FiniteMonoid::new(
            names(),
            0,
            vec![vec![0, 1, 2], vec![1, 1, 3], vec![2, 2, 2]],
        );
        assert!(not_closed.is_err());
    }

    #[test]
    fn cyclic_group_of_order_three() {
        let table = (0..3)
            .map(|a| (0..3).map(|b| (a + b) % 3).collect())
            .collect();
        let m = FiniteMonoid::new(vec!["0".into(), "1".into(), "2".into()], 0, table).unwrap();
        assert_eq!(m.product([1, 1, 1]), 0);
        assert_eq!(m.product([]), 0);
        assert_eq!(m.mul(2, 2), 1);
    }
}
