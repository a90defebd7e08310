use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Matrix, MultiIndex, Scalar};
use crate::error::{Error, Result};

/// Which ring a polynomial lives in: the power series side `R` (variables `x`)
/// or the dual polynomial side `P` (variables `y`).
pub trait Side:
    Copy + Clone + Default + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static
{
    const SYMBOL: char;
}

#[derive(Copy, Clone, Default, Debug, PartialEq, Eq, Hash)]
pub struct Series;

#[derive(Copy, Clone, Default, Debug, PartialEq, Eq, Hash)]
pub struct Dual;

impl Side for Series {
    const SYMBOL: char = 'x';
}

impl Side for Dual {
    const SYMBOL: char = 'y';
}

/// Sparse polynomial with exact rational coefficients in the plain monomial basis.
/// No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<S: Side> {
    nvars: usize,
    terms: BTreeMap<MultiIndex, Scalar>,
    side: PhantomData<S>,
}

/// Element of `P = K[y_1..y_m]`.
pub type DualPoly = Poly<Dual>;
/// Polynomial representative of an element of `R = K[[x_1..x_m]]`.
pub type SeriesPoly = Poly<Series>;

impl<S: Side> Poly<S> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
            side: PhantomData,
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(MultiIndex::zero(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn monomial(index: MultiIndex, c: Scalar) -> Self {
        let mut p = Self::zero(index.nvars());
        p.add_term(index, c);
        p
    }

    /// The variable with 0-based index `j`.
    pub fn var(nvars: usize, j: usize) -> Self {
        Self::monomial(MultiIndex::unit(nvars, j), Scalar::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (MultiIndex, Scalar)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Builds a polynomial from its coordinates in the dual basis `y^a / a!`.
    pub fn from_dual_coefficients(
        nvars: usize,
        coords: impl IntoIterator<Item = (MultiIndex, Scalar)>,
    ) -> Self {
        Self::from_terms(
            nvars,
            coords.into_iter().map(|(m, c)| {
                let f = Scalar::from_integer(m.factorial());
                (m, c / f)
            }),
        )
    }

    pub fn add_term(&mut self, index: MultiIndex, c: Scalar) {
        assert_eq!(index.nvars(), self.nvars, "monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, index: &MultiIndex) -> Scalar {
        self.terms.get(index).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coordinate on the dual basis element `y^a / a!`, i.e. `a! * coeff(y^a)`.
    pub fn dual_coefficient(&self, index: &MultiIndex) -> Scalar {
        self.coeff(index) * Scalar::from_integer(index.factorial())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&MultiIndex::zero(self.nvars))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(MultiIndex::degree)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(MultiIndex::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        self.filter(|m| m.degree() == d)
    }

    /// The form of highest degree.
    pub fn top_form(&self) -> Self {
        match self.degree() {
            Some(d) => self.homogeneous_part(d),
            None => self.clone(),
        }
    }

    /// Drops every term of degree greater than `s`.
    pub fn truncated(&self, s: u32) -> Self {
        self.filter(|m| m.degree() <= s)
    }

    pub fn filter(&self, keep: impl Fn(&MultiIndex) -> bool) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            side: PhantomData,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
            side: PhantomData,
        }
    }

    /// Partial derivative with respect to the variable of 0-based index `j`.
    pub fn derivative(&self, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if let Some(lower) = m.with_decrement(j) {
                let e = Scalar::from_integer(BigInt::from(m.exp(j)));
                out.add_term(lower, c * e);
            }
        }
        out
    }

    /// Reinterprets the polynomial in `nvars >= self.nvars()` variables.
    pub fn embed(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars, "embed can only add variables");
        Self {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.padded(nvars), c.clone()))
                .collect(),
            side: PhantomData,
        }
    }

    /// Drops trailing variables; `None` if one of them occurs.
    pub fn restrict(&self, nvars: usize) -> Option<Self> {
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            if m.exps()[nvars..].iter().any(|&e| e > 0) {
                return None;
            }
            out.add_term(MultiIndex::new(m.exps()[..nvars].to_vec()), c.clone());
        }
        Some(out)
    }

    /// Highest variable index (1-based) that occurs, 0 for constants.
    pub fn used_vars(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|m| m.exps().iter().rposition(|&e| e > 0))
            .map(|p| p + 1)
            .max()
            .unwrap_or(0)
    }

    /// Product with every term of degree above `s` discarded.
    pub fn mul_truncated(&self, other: &Self, s: u32) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.degree() + b.degree() <= s {
                    out.add_term(a.add(b), ca * cb);
                }
            }
        }
        out
    }

    pub fn pow_truncated(&self, e: u32, s: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul_truncated(self, s);
        }
        acc
    }

    /// Substitutes `images[j]` for variable `j`, keeping only degrees `<= bound` when given.
    pub fn substitute<T: Side>(&self, images: &[Poly<T>], bound: Option<u32>) -> Poly<T> {
        assert_eq!(images.len(), self.nvars, "one image per variable required");
        let target = images.first().map(Poly::nvars).unwrap_or(0);
        let cap = bound.unwrap_or(u32::MAX);
        let mut powers: Vec<Vec<Poly<T>>> = images.iter().map(|z| vec![Poly::one(z.nvars)]).collect();
        let mut out = Poly::<T>::zero(target);
        for (m, c) in &self.terms {
            let mut term = Poly::<T>::constant(target, c.clone());
            for (j, e) in m.support() {
                while powers[j].len() <= e as usize {
                    let next = powers[j].last().unwrap().mul_truncated(&images[j], cap);
                    powers[j].push(next);
                }
                term = term.mul_truncated(&powers[j][e as usize], cap);
            }
            out = &out + &term;
        }
        out
    }

    /// Linear change of variables `p(y) -> p(Q y)`, i.e. `y_j -> sum_k Q[j][k] y_k`.
    pub fn linear_substitution(&self, q: &Matrix) -> Self {
        assert_eq!(q.rows(), self.nvars);
        let n = q.cols();
        let images: Vec<Self> = (0..q.rows())
            .map(|j| Self::from_terms(n, (0..n).map(|k| (MultiIndex::unit(n, k), q[(j, k)].clone()))))
            .collect();
        self.substitute(&images, None)
    }
}

impl<'a, S: Side> Add<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;

    fn add(self, rhs: &'a Poly<S>) -> Poly<S> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, S: Side> Sub<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;

    fn sub(self, rhs: &'a Poly<S>) -> Poly<S> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, S: Side> Mul<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;

    fn mul(self, rhs: &'a Poly<S>) -> Poly<S> {
        self.mul_truncated(rhs, u32::MAX)
    }
}

impl<S: Side> Neg for &Poly<S> {
    type Output = Poly<S>;

    fn neg(self) -> Poly<S> {
        self.scale(&-Scalar::one())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl<S: Side> $tr<Poly<S>> for Poly<S> {
            type Output = Poly<S>;
            fn $method(self, rhs: Poly<S>) -> Poly<S> {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

fn fmt_coeff(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl<S: Side> fmt::Display for Poly<S> {
    /// Writes the polynomial in the shared grammar, highest-degree terms first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|(m, _)| std::cmp::Reverse(m.degree()));
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m
                .support()
                .map(|(j, e)| {
                    if e == 1 {
                        format!("{}{}", S::SYMBOL, j + 1)
                    } else {
                        format!("{}{}^{}", S::SYMBOL, j + 1, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", fmt_coeff(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_coeff(&abs), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<S: Side> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.nvars, self)
    }
}

fn check_vars(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::VariableMismatch { left, right });
    }
    Ok(())
}

/// The action `f o g = f(d/dy_1, .., d/dy_m)(g)` of series on dual polynomials.
///
/// On monomials `x^a o y^b = b!/(b - a)! y^(b - a)` when `a <= b`, and 0 otherwise;
/// this makes `y^a / a!` the dual basis of `x^a` under [`pairing`].
pub fn contract(f: &SeriesPoly, g: &DualPoly) -> Result<DualPoly> {
    check_vars(f.nvars, g.nvars)?;
    let mut out = DualPoly::zero(g.nvars);
    for (a, ca) in &f.terms {
        for (b, cb) in &g.terms {
            if let Some(rest) = b.checked_sub(a) {
                let k = Scalar::from_integer(b.binom(a) * a.factorial());
                out.add_term(rest, ca * cb * k);
            }
        }
    }
    Ok(out)
}

/// The pairing `<f, g> = (f o g)(0)`.
pub fn pairing(f: &SeriesPoly, g: &DualPoly) -> Result<Scalar> {
    check_vars(f.nvars, g.nvars)?;
    Ok(f.terms
        .iter()
        .filter_map(|(a, ca)| g.terms.get(a).map(|cb| ca * cb * Scalar::from_integer(a.factorial())))
        .fold(Scalar::zero(), |acc, v| acc + v))
}

/// Element of `R / M^{s+1}`: a series polynomial with every degree `<= bound`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct JetElement {
    poly: SeriesPoly,
    bound: u32,
}

impl JetElement {
    pub fn new(poly: SeriesPoly, bound: u32) -> Self {
        Self {
            poly: poly.truncated(bound),
            bound,
        }
    }

    pub fn one(nvars: usize, bound: u32) -> Self {
        Self::new(SeriesPoly::one(nvars), bound)
    }

    pub fn poly(&self) -> &SeriesPoly {
        &self.poly
    }

    pub fn into_poly(self) -> SeriesPoly {
        self.poly
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn is_unit(&self) -> bool {
        !self.poly.constant_term().is_zero()
    }

    pub fn mul(&self, other: &JetElement) -> JetElement {
        let bound = self.bound.min(other.bound);
        JetElement {
            poly: self.poly.mul_truncated(&other.poly, bound),
            bound,
        }
    }

    /// Contraction against a dual polynomial.
    pub fn act(&self, g: &DualPoly) -> Result<DualPoly> {
        contract(&self.poly, g)
    }
}

impl fmt::Display for JetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

impl fmt::Debug for JetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Jet[{};s={}]({})", self.nvars(), self.bound, self.poly)
    }
}
