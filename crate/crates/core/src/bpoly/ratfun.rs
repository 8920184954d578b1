use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{BiPoly, BpolyError, Sym, SymPoly};
use crate::scalar::Scalar;
use crate::upoly::{UniPoly, Var};
use crate::Rational;

const VARS: [Var; 2] = [Var::S, Var::T];

/// Denominator atoms of the parameterisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// `t`
    T,
    /// `s`
    S,
    /// `2s - 1`
    TwoSMinusOne,
    /// `5s^2 - 4s + 1`
    D,
}

impl Atom {
    pub const ALL: [Atom; 4] = [Atom::T, Atom::S, Atom::TwoSMinusOne, Atom::D];

    pub fn poly(self) -> BiPoly {
        match self {
            Atom::T => BiPoly::generator(1, VARS),
            Atom::S => BiPoly::generator(0, VARS),
            Atom::TwoSMinusOne => {
                BiPoly::from_univariate(&UniPoly::from_i64s(&[-1, 2], Var::S), 0, VARS)
            }
            Atom::D => BiPoly::from_univariate(&UniPoly::from_i64s(&[1, -4, 5], Var::S), 0, VARS),
        }
    }

    fn divide(self, p: &BiPoly) -> Option<BiPoly> {
        match self {
            Atom::T => p.unshift(0, 1),
            Atom::S => p.unshift(1, 0),
            Atom::TwoSMinusOne => p
                .exact_div_univariate(0, &UniPoly::from_i64s(&[-1, 2], Var::S))
                .ok(),
            Atom::D => p
                .exact_div_univariate(0, &UniPoly::from_i64s(&[1, -4, 5], Var::S))
                .ok(),
        }
    }
}

/// `num / (den_const * prod atom^e)` over `Z[s, t]`, with `den_const > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFun2 {
    num: BiPoly,
    den_const: BigInt,
    den_atoms: [u32; 4],
}

impl RatFun2 {
    pub fn new(num: BiPoly, den_const: BigInt, den_atoms: [u32; 4]) -> Result<Self, BpolyError> {
        if den_const.is_zero() {
            return Err(BpolyError::DenominatorZero);
        }
        let (num, den_const) = if den_const.is_negative() {
            (-&num, -den_const)
        } else {
            (num, den_const)
        };
        Ok(RatFun2 {
            num,
            den_const,
            den_atoms,
        })
    }

    pub fn from_poly(num: BiPoly) -> Self {
        RatFun2 {
            num,
            den_const: BigInt::one(),
            den_atoms: [0; 4],
        }
    }

    pub fn from_rational(q: &Rational) -> Self {
        RatFun2 {
            num: BiPoly::constant(q.numer().clone(), VARS),
            den_const: q.denom().clone(),
            den_atoms: [0; 4],
        }
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den_const(&self) -> &BigInt {
        &self.den_const
    }

    pub fn den_atoms(&self) -> [u32; 4] {
        self.den_atoms
    }

    pub fn denominator(&self) -> BiPoly {
        let mut d = BiPoly::constant(self.den_const.clone(), VARS);
        for (a, &e) in Atom::ALL.iter().zip(&self.den_atoms) {
            if e > 0 {
                d = &d * &a.poly().pow(e);
            }
        }
        d
    }

    /// Numerator rewritten over the denominator `(c, atoms)`, which must be a
    /// multiple of this one.
    fn lifted_num(&self, c: &BigInt, atoms: &[u32; 4]) -> BiPoly {
        let mut n = self.num.scale(&(c / &self.den_const));
        for (k, a) in Atom::ALL.iter().enumerate() {
            let extra = atoms[k] - self.den_atoms[k];
            if extra > 0 {
                n = &n * &a.poly().pow(extra);
            }
        }
        n
    }

    /// Sum of many fractions over their least common atomic denominator.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a RatFun2>) -> RatFun2 {
        let items: Vec<&RatFun2> = items.into_iter().collect();
        let mut c = BigInt::one();
        let mut atoms = [0u32; 4];
        for r in &items {
            c = c.lcm(&r.den_const);
            for k in 0..4 {
                atoms[k] = atoms[k].max(r.den_atoms[k]);
            }
        }
        let mut num = BiPoly::zero(VARS);
        for r in &items {
            num = &num + &r.lifted_num(&c, &atoms);
        }
        RatFun2 {
            num,
            den_const: c,
            den_atoms: atoms,
        }
    }

    pub fn add(&self, rhs: &RatFun2) -> RatFun2 {
        RatFun2::sum([self, rhs])
    }

    pub fn neg(&self) -> RatFun2 {
        RatFun2 {
            num: -&self.num,
            ..self.clone()
        }
    }

    pub fn sub(&self, rhs: &RatFun2) -> RatFun2 {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &RatFun2) -> RatFun2 {
        let mut atoms = self.den_atoms;
        for k in 0..4 {
            atoms[k] += rhs.den_atoms[k];
        }
        RatFun2 {
            num: &self.num * &rhs.num,
            den_const: &self.den_const * &rhs.den_const,
            den_atoms: atoms,
        }
    }

    pub fn pow(&self, n: u32) -> RatFun2 {
        let mut acc = RatFun2::from_poly(BiPoly::one(VARS));
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Cancels common atoms and the integer gcd between numerator and
    /// denominator.
    pub fn reduce(&self) -> RatFun2 {
        if self.num.is_zero() {
            return RatFun2::from_poly(BiPoly::zero(VARS));
        }
        let mut num = self.num.clone();
        let mut atoms = self.den_atoms;
        for (k, a) in Atom::ALL.iter().enumerate() {
            while atoms[k] > 0 {
                match a.divide(&num) {
                    Some(q) => {
                        num = q;
                        atoms[k] -= 1;
                    }
                    None => break,
                }
            }
        }
        let g = num.content().gcd(&self.den_const);
        let num = num.div_scalar_exact(&g).expect("gcd divides");
        RatFun2 {
            num,
            den_const: &self.den_const / &g,
            den_atoms: atoms,
        }
    }

    /// Splits the numerator as `c * prod atom^e * core` with `core` primitive
    /// and free of atom factors.
    pub fn numerator_core(&self) -> (BigInt, [u32; 4], BiPoly) {
        let mut num = self.num.clone();
        let mut exps = [0u32; 4];
        for (k, a) in Atom::ALL.iter().enumerate() {
            while let Some(q) = a.divide(&num) {
                if q.is_zero() {
                    break;
                }
                num = q;
                exps[k] += 1;
            }
        }
        let (c, core) = num.content_and_primitive();
        (c, exps, core)
    }

    /// Exact value or enclosure at `(s, t)`.
    pub fn eval<T: Scalar>(&self, s: &T, t: &T) -> Result<T, BpolyError> {
        let n = self.num.eval(s, t);
        let d = self.denominator().eval(s, t);
        n.try_div(&d).map_err(|_| BpolyError::DenominatorZero)
    }
}

/// Substitutes rational functions for the model symbols and returns the
/// reduced fraction.
pub fn ratfun_compose(
    expr: &SymPoly,
    bindings: &BTreeMap<Sym, RatFun2>,
) -> Result<RatFun2, BpolyError> {
    let mut powers: BTreeMap<Sym, Vec<RatFun2>> = BTreeMap::new();
    for s in Sym::ALL {
        let d = expr.degree_in(s);
        if d == 0 {
            continue;
        }
        let b = bindings.get(&s).ok_or(BpolyError::UnboundSymbol(s))?;
        let mut pw = vec![RatFun2::from_poly(BiPoly::one(VARS))];
        for k in 1..=d as usize {
            let next = pw[k - 1].mul(b);
            pw.push(next);
        }
        powers.insert(s, pw);
    }
    let mut terms = Vec::with_capacity(expr.num_terms());
    for (e, c) in expr.terms() {
        let mut term = RatFun2::from_rational(c);
        for s in Sym::ALL {
            let p = e[s as usize];
            if p > 0 {
                term = term.mul(&powers[&s][p as usize]);
            }
        }
        terms.push(term);
    }
    Ok(RatFun2::sum(terms.iter()).reduce())
}
