//! Bipartite cycle indices for the symmetry group of the container ring.
//!
//! A bracelet with `2M` alternations is a ring of `2M` containers (maximal
//! same-colored runs) that alternate white, black, white, ... Its
//! symmetries are the rotations by an even number of steps and the
//! reflections that keep white containers white. That group has order `2M`.
//! Each element permutes the `M` white containers and the `M` black
//! containers separately. Its cycle type is recorded as a monomial
//! `prod x_d^{c_d} * prod y_d^{c'_d}`, where `x_d` marks a `d`-cycle of white
//! containers and `y_d` marks a `d`-cycle of black containers.
//!
//! Substituting `x_d -> f(x^d)` and `y_d -> f(y^d)` turns the averaged
//! index into the generating function that counts orbits by white and black
//! bead totals. [`BipartiteCycleIndex::count_orbits`] extracts one
//! coefficient of that function exactly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{divisors, totient, BigCount};
use crate::series::{product_weight_coeff, SeriesFactor};

/// Cycle type of one group of elements: subscript `d` to exponent.
pub type Monomial = BTreeMap<u64, u64>;

/// One weighted monomial of a bipartite cycle index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub x: Monomial,
    pub y: Monomial,
}

impl Term {
    fn new(coeff: BigRational, x: &[(u64, u64)], y: &[(u64, u64)]) -> Self {
        let collect = |pairs: &[(u64, u64)]| -> Monomial {
            let mut m = Monomial::new();
            for &(d, e) in pairs {
                if e > 0 {
                    *m.entry(d).or_default() += e;
                }
            }
            m
        };
        Term { coeff, x: collect(x), y: collect(y) }
    }

    fn factors(mono: &Monomial) -> Vec<SeriesFactor> {
        mono.iter()
            .map(|(&d, &e)| SeriesFactor { stride: d, power: e })
            .collect()
    }
}

/// Exact rational combination of bipartite monomials. Equal monomials are
/// merged, so two indices compare equal iff they are the same polynomial
/// with terms in the same order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteCycleIndex {
    terms: Vec<Term>,
}

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn check_order(m: i64) -> Result<u64> {
    if m <= 0 {
        return Err(Error::InvalidInput(format!(
            "container count M must be >= 1, got {m}"
        )));
    }
    Ok(m as u64)
}

/// Rotations by `2k` containers, `k = 0..M`, each weighted `weight / M`:
/// `sum_{d | M} phi(d) x_d^{M/d} y_d^{M/d}`.
fn rotation_terms(m: u64, weight: &BigRational) -> Result<Vec<Term>> {
    divisors(m as i64)?
        .into_iter()
        .map(|d| {
            let phi = totient(d as i64)?;
            let c = ratio(phi, m) * weight;
            Ok(Term::new(c, &[(d, m / d)], &[(d, m / d)]))
        })
        .collect()
}

impl BipartiteCycleIndex {
    fn from_terms(raw: Vec<Term>) -> Self {
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            if let Some(existing) = terms.iter_mut().find(|e| e.x == t.x && e.y == t.y) {
                existing.coeff += t.coeff;
            } else {
                terms.push(t);
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        BipartiteCycleIndex { terms }
    }

    /// Index of the rotation subgroup alone: `(1/M) sum_{d|M} phi(d) x_d^{M/d} y_d^{M/d}`.
    pub fn cyclic(m: i64) -> Result<Self> {
        let m = check_order(m)?;
        Ok(Self::from_terms(rotation_terms(m, &BigRational::one())?))
    }

    /// Index of the full rotation and reflection group of order `2M`.
    ///
    /// For odd `M` every reflection axis passes through one white and one
    /// black container, which gives `x_1 y_1 x_2^{(M-1)/2} y_2^{(M-1)/2}` with
    /// weight 1/2. For even `M` half of the axes pass through two white
    /// containers and half through two black ones, each with weight 1/4.
    ///
    /// ```
    /// use polya_necklace::cycle_index::BipartiteCycleIndex;
    /// let z = BipartiteCycleIndex::dihedral(5).unwrap();
    /// assert_eq!(z.to_string(), "1/10·x1^5·y1^5 + 2/5·x5·y5 + 1/2·x1·x2^2·y1·y2^2");
    /// ```
    pub fn dihedral(m: i64) -> Result<Self> {
        let m = check_order(m)?;
        let mut terms = rotation_terms(m, &ratio(1, 2))?;
        if m % 2 == 1 {
            let h = (m - 1) / 2;
            terms.push(Term::new(ratio(1, 2), &[(1, 1), (2, h)], &[(1, 1), (2, h)]));
        } else {
            let (h, g) = ((m - 2) / 2, m / 2);
            terms.push(Term::new(ratio(1, 4), &[(1, 2), (2, h)], &[(2, g)]));
            terms.push(Term::new(ratio(1, 4), &[(2, g)], &[(1, 2), (2, h)]));
        }
        Ok(Self::from_terms(terms))
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Sum of all term coefficients. Equals 1 for a well-formed index.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, t| acc + &t.coeff)
    }

    /// Number of white (equivalently black) containers every term permutes,
    /// or `None` if the terms disagree.
    pub fn container_count(&self) -> Option<u64> {
        let weight = |m: &Monomial| m.iter().map(|(d, e)| d * e).sum::<u64>();
        let first = self.terms.first()?;
        let m = weight(&first.x);
        self.terms
            .iter()
            .all(|t| weight(&t.x) == m && weight(&t.y) == m)
            .then_some(m)
    }

    /// Number of orbits with exactly `n_white` white and `n_black` black beads.
    ///
    /// The coefficient of `x^n_white y^n_black` factorizes per term into an
    /// x-part and a y-part. Those parts are accumulated with the exact rational
    /// term weights. A non-integral total is reported as [`Error::Integrality`].
    pub fn count_orbits(&self, n_white: u64, n_black: u64) -> Result<BigCount> {
        let mut acc = BigRational::zero();
        for t in &self.terms {
            let cx = product_weight_coeff(n_white, &Term::factors(&t.x))?;
            if cx.is_zero() {
                continue;
            }
            let cy = product_weight_coeff(n_black, &Term::factors(&t.y))?;
            if cy.is_zero() {
                continue;
            }
            acc += &t.coeff * BigRational::from_integer(BigInt::from(cx * cy));
        }
        if !acc.is_integer() || acc.is_negative() {
            return Err(Error::Integrality(format!(
                "{acc} for ({n_white}, {n_black}) with index {self}"
            )));
        }
        Ok(acc
            .to_integer()
            .to_biguint()
            .expect("non-negative integer checked above"))
    }
}

/// Renders terms as `coeff·x1^a·x2·y1^b + ...`; a unit coefficient is kept
/// explicit, exponent 1 is omitted.
impl fmt::Display for BipartiteCycleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}", t.coeff)?;
            for (var, mono) in [("x", &t.x), ("y", &t.y)] {
                for (d, e) in mono {
                    if *e == 1 {
                        write!(f, "·{var}{d}")?;
                    } else {
                        write!(f, "·{var}{d}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
