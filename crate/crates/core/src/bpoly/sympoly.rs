use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::numeric::NumericError;
use crate::scalar::Scalar;
use crate::Rational;

/// Model symbols: `x3`, `y5`, `E1 = sqrt(1+2x3)`, `E2 = sqrt(3+4x3-4x3^2)`,
/// `E3 = (1+4y5^2)^(3/2)`, treated as independent indeterminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    X3,
    Y5,
    E1,
    E2,
    E3,
}

impl Sym {
    pub const ALL: [Sym; 5] = [Sym::X3, Sym::Y5, Sym::E1, Sym::E2, Sym::E3];
}

/// Polynomial in the model symbols with rational coefficients. Running the
/// generic model formulas on this type yields their expanded form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymPoly {
    terms: BTreeMap<[u32; 5], Rational>,
}

impl SymPoly {
    pub fn var(s: Sym) -> Self {
        let mut e = [0u32; 5];
        e[s as usize] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, Rational::one());
        SymPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 5], &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, e: [u32; 5], c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn degree_in(&self, s: Sym) -> u32 {
        self.terms.keys().map(|e| e[s as usize]).max().unwrap_or(0)
    }

    /// Evaluates with one value per symbol, in `Sym::ALL` order.
    pub fn eval<T: Scalar>(&self, values: &[T; 5]) -> T {
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut term = T::from_rational(c);
            for (k, &p) in e.iter().enumerate() {
                if p > 0 {
                    term = term * values[k].powi(p);
                }
            }
            acc = acc + term;
        }
        acc
    }
}

impl Add for SymPoly {
    type Output = SymPoly;
    fn add(mut self, rhs: SymPoly) -> SymPoly {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: SymPoly) -> SymPoly {
        self + (-rhs)
    }
}

impl Neg for SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        SymPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: SymPoly) -> SymPoly {
        let mut out = SymPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let mut e = *e1;
                for k in 0..5 {
                    e[k] += e2[k];
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Zero for SymPoly {
    fn zero() -> Self {
        SymPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for SymPoly {
    fn one() -> Self {
        SymPoly::from_rational(&Rational::one())
    }
}

impl Scalar for SymPoly {
    fn from_rational(q: &Rational) -> Self {
        let mut p = SymPoly::default();
        p.add_term([0; 5], q.clone());
        p
    }

    /// Only division by a nonzero constant is supported.
    fn try_div(&self, rhs: &Self) -> Result<Self, NumericError> {
        match rhs.terms.iter().next() {
            Some((e, c)) if rhs.terms.len() == 1 && *e == [0; 5] => Ok(SymPoly {
                terms: self.terms.iter().map(|(k, v)| (*k, v / c)).collect(),
            }),
            None => Err(NumericError::DivisionByZero),
            _ => Err(NumericError::Unsupported(
                "symbolic division by a non-constant",
            )),
        }
    }
}
