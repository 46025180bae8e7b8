//! Sturm chains and squarefree decomposition.

use num_traits::One;

use super::rational::Rational;
use super::{IntPoly, UniPoly};
use crate::error::{Error, Result};

/// An endpoint of a counting interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(Rational),
    PosInf,
}

impl From<Rational> for Bound {
    fn from(r: Rational) -> Self {
        Bound::At(r)
    }
}

/// `p, p', -rem(p, p'), ...` with every remainder scaled by a positive
/// rational so that its leading coefficient is `±1`.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<UniPoly>,
    // chain[i] / gcd: a Sturm chain of the squarefree part that stays valid at
    // multiple roots of p, where every chain[i] vanishes.
    reduced: Vec<IntPoly>,
}

impl SturmSequence {
    pub fn new(p: &UniPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial("Sturm sequence"));
        }
        let mut chain = vec![p.clone()];
        let dp = p.derivative();
        if !dp.is_zero() {
            chain.push(dp);
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].div_rem(&chain[n - 1])?;
                if r.is_zero() {
                    break;
                }
                chain.push((-&r).sign_normalized());
            }
        }
        let g = chain.last().expect("nonempty").clone();
        let reduced = chain
            .iter()
            .map(|q| q.exact_div(&g).map(|r| IntPoly::from_uni(&r)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { chain, reduced })
    }

    pub fn chain(&self) -> &[UniPoly] {
        &self.chain
    }

    /// The last chain entry: a gcd of `p` and `p'` up to a positive scalar.
    pub fn gcd(&self) -> &UniPoly {
        self.chain.last().expect("nonempty")
    }

    pub fn variations(&self, at: &Bound) -> usize {
        let signs = self.reduced.iter().map(|q| match at {
            Bound::NegInf => q.sign_at_infinity(false),
            Bound::PosInf => q.sign_at_infinity(true),
            Bound::At(r) => q.sign_at(r),
        });
        let mut count = 0;
        let mut last = 0i8;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    pub fn count_all(&self) -> usize {
        self.count(&Bound::NegInf, &Bound::PosInf)
    }
}

/// Distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &UniPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    Ok(SturmSequence::new(p)?.count(lo, hi))
}

/// Squarefree decomposition `p = c · ∏ f_m^m` with pairwise coprime monic `f_m`.
#[derive(Debug, Clone)]
pub struct Squarefree {
    /// `p / gcd(p, p')`, monic.
    pub part: UniPoly,
    /// Monic `gcd(p, p')`; constant iff all roots of `p` are simple.
    pub gcd: UniPoly,
    /// `(f_m, m)` for every nonconstant factor.
    pub factors: Vec<(UniPoly, usize)>,
}

impl Squarefree {
    /// `(degree of f_m, m)` pairs.
    pub fn profile(&self) -> Vec<(usize, usize)> {
        self.factors
            .iter()
            .map(|(f, m)| (f.degree().unwrap_or(0), *m))
            .collect()
    }

    pub fn all_simple(&self) -> bool {
        self.gcd.degree() == Some(0)
    }
}

/// Yun's algorithm.
pub fn squarefree_part(p: &UniPoly) -> Result<Squarefree> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree decomposition"));
    }
    let dp = p.derivative();
    let g = UniPoly::gcd(p, &dp);
    let part = p.exact_div(&g)?.monic();
    let mut factors = Vec::new();
    if p.degree() > Some(0) {
        let mut b = part.clone();
        let mut d = &dp.exact_div(&g)?.scale(&p.leading().unwrap().recip()) - &b.derivative();
        let mut m = 1;
        while b.degree() > Some(0) {
            let a = UniPoly::gcd(&b, &d);
            b = b.exact_div(&a)?;
            let c = d.exact_div(&a)?;
            d = &c - &b.derivative();
            if a.degree() > Some(0) {
                factors.push((a, m));
            }
            m += 1;
        }
    }
    let gcd = if g.is_zero() {
        UniPoly::constant(Rational::one(), p.var())
    } else {
        g
    };
    Ok(Squarefree { part, gcd, factors })
}
