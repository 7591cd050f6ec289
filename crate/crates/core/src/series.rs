//! Truncated bivariate power series with exact integer coefficients.
//!
//! `x` marks transverse points and `t` non-transverse points. A series
//! truncated at `T` stores every coefficient of total degree `n + k <= T`
//! in a dense triangular table; every operation re-truncates at `T`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiSeries {
    trunc: usize,
    coeffs: Vec<BigInt>,
}

fn index(n: usize, k: usize) -> usize {
    let d = n + k;
    d * (d + 1) / 2 + k
}

impl BiSeries {
    pub fn zero(trunc: usize) -> Self {
        BiSeries {
            trunc,
            coeffs: vec![BigInt::zero(); index(0, trunc + 1)],
        }
    }

    pub fn constant(trunc: usize, c: impl Into<BigInt>) -> Self {
        let mut s = BiSeries::zero(trunc);
        s.set(0, 0, c.into());
        s
    }

    pub fn one(trunc: usize) -> Self {
        BiSeries::constant(trunc, 1)
    }

    /// `c * x^n t^k`, or zero when the degree exceeds the truncation.
    pub fn monomial(trunc: usize, n: usize, k: usize, c: impl Into<BigInt>) -> Self {
        let mut s = BiSeries::zero(trunc);
        if n + k <= trunc {
            s.set(n, k, c.into());
        }
        s
    }

    pub fn x(trunc: usize) -> Self {
        BiSeries::monomial(trunc, 1, 0, 1)
    }

    pub fn t(trunc: usize) -> Self {
        BiSeries::monomial(trunc, 0, 1, 1)
    }

    pub fn from_fn(trunc: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut s = BiSeries::zero(trunc);
        for (n, k) in degrees(trunc) {
            s.coeffs[index(n, k)] = f(n, k);
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    /// Coefficient of `x^n t^k`; zero beyond the truncation.
    pub fn coeff(&self, n: usize, k: usize) -> BigInt {
        if n + k <= self.trunc {
            self.coeffs[index(n, k)].clone()
        } else {
            BigInt::zero()
        }
    }

    pub fn set(&mut self, n: usize, k: usize, c: BigInt) {
        assert!(n + k <= self.trunc, "x^{n} t^{k} beyond truncation {}", self.trunc);
        self.coeffs[index(n, k)] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero terms `(n, k, coeff)` by total degree, then by decreasing `n`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        degrees(self.trunc)
            .map(move |(n, k)| (n, k, &self.coeffs[index(n, k)]))
            .filter(|(_, _, c)| !c.is_zero())
    }

    fn same_truncation(&self, other: &BiSeries) -> Result<()> {
        if self.trunc == other.trunc {
            Ok(())
        } else {
            Err(Error::TruncationMismatch(self.trunc, other.trunc))
        }
    }

    pub fn checked_add(&self, other: &BiSeries) -> Result<BiSeries> {
        self.same_truncation(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &BiSeries) -> Result<BiSeries> {
        self.same_truncation(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    pub fn checked_mul(&self, other: &BiSeries) -> Result<BiSeries> {
        self.same_truncation(other)?;
        let mut out = BiSeries::zero(self.trunc);
        let lhs: Vec<_> = self.terms().collect();
        let rhs: Vec<_> = other.terms().collect();
        for &(n1, k1, a) in &lhs {
            for &(n2, k2, b) in &rhs {
                if n1 + n2 + k1 + k2 <= self.trunc {
                    out.coeffs[index(n1 + n2, k1 + k2)] += a * b;
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &BiSeries, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> BiSeries {
        BiSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale_int(&self, c: impl Into<BigInt>) -> BiSeries {
        let c = c.into();
        BiSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|a| a * &c).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn inverse(&self) -> Result<BiSeries> {
        let a0 = self.coeff(0, 0);
        if a0.abs() != BigInt::one() {
            return Err(Error::NonUnitConstant(a0.to_string()));
        }
        let terms: Vec<_> = self.terms().filter(|&(n, k, _)| n + k > 0).collect();
        let mut inv = BiSeries::zero(self.trunc);
        inv.set(0, 0, a0.clone());
        for (n, k) in degrees(self.trunc).skip(1) {
            let mut acc = BigInt::zero();
            for &(i, j, a) in &terms {
                if i <= n && j <= k {
                    acc += a * &inv.coeffs[index(n - i, k - j)];
                }
            }
            // a0 is its own inverse.
            inv.coeffs[index(n, k)] = -(acc * &a0);
        }
        Ok(inv)
    }

    /// Terms with odd `x`-degree.
    pub fn odd_part(&self) -> BiSeries {
        self.filter_degree(|n, _| n % 2 == 1)
    }

    /// Terms with even `x`-degree.
    pub fn even_part(&self) -> BiSeries {
        self.filter_degree(|n, _| n % 2 == 0)
    }

    /// Same series with the constant term removed.
    pub fn without_constant(&self) -> BiSeries {
        self.filter_degree(|n, k| n + k > 0)
    }

    fn filter_degree(&self, keep: impl Fn(usize, usize) -> bool) -> BiSeries {
        BiSeries::from_fn(self.trunc, |n, k| {
            if keep(n, k) {
                self.coeffs[index(n, k)].clone()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Exact division by two.
    pub fn halve(&self) -> Result<BiSeries> {
        let two = BigInt::from(2);
        let mut out = BiSeries::zero(self.trunc);
        for (n, k, c) in self.terms() {
            if !(c % &two).is_zero() {
                return Err(Error::OddCoefficient {
                    n,
                    k,
                    coeff: c.to_string(),
                });
            }
            out.coeffs[index(n, k)] = c / &two;
        }
        Ok(out)
    }

    /// Substitutes `x ↦ a`, `t ↦ b`. Both must have zero constant term.
    pub fn compose(&self, a: &BiSeries, b: &BiSeries) -> Result<BiSeries> {
        self.same_truncation(a)?;
        self.same_truncation(b)?;
        for (slot, s) in [("x", a), ("t", b)] {
            let c = s.coeff(0, 0);
            if !c.is_zero() {
                return Err(Error::NonZeroConstant {
                    slot,
                    constant: c.to_string(),
                });
            }
        }
        let trunc = self.trunc;
        let mut a_powers = vec![BiSeries::one(trunc)];
        for i in 1..=trunc {
            a_powers.push(&a_powers[i - 1] * a);
        }
        let mut out = BiSeries::zero(trunc);
        let mut b_power = BiSeries::one(trunc);
        for k in 0..=trunc {
            let mut inner = BiSeries::zero(trunc);
            for (n, a_pow) in a_powers.iter().enumerate().take(trunc - k + 1) {
                let c = &self.coeffs[index(n, k)];
                if !c.is_zero() {
                    inner = &inner + &a_pow.scale_int(c.clone());
                }
            }
            if !inner.is_zero() {
                out = &out + &(&inner * &b_power);
            }
            b_power = &b_power * b;
        }
        Ok(out)
    }

    /// `f ⊡ g = f(g⁽¹⁾, g⁽²⁾)`. Under [`Convention::DropEmpty`] the constant of
    /// the even part is removed first.
    pub fn boxdot(&self, g: &BiSeries, convention: Convention) -> Result<BiSeries> {
        let even = match convention {
            Convention::DropEmpty | Convention::SplitUnits => g.even_part().without_constant(),
            Convention::KeepEmpty => g.even_part(),
        };
        self.compose(&g.odd_part(), &even)
    }

    /// Rows `n,k,coeff` for every stored coefficient.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,coeff\n");
        for (n, k) in degrees(self.trunc) {
            out.push_str(&format!("{n},{k},{}\n", self.coeffs[index(n, k)]));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "truncation": self.trunc,
            "terms": self
                .terms()
                .map(|(n, k, c)| json!({"n": n, "k": k, "coeff": c.to_string()}))
                .collect::<Vec<_>>(),
        })
    }

    /// One `coeff * x^n t^k` line per nonzero term.
    pub fn monomial_list(&self) -> String {
        self.terms()
            .map(|(n, k, c)| format!("{c} * x^{n} t^{k}\n"))
            .collect()
    }
}

/// `(n, k)` by total degree, `n` decreasing within a degree.
fn degrees(trunc: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=trunc).flat_map(|d| (0..=d).map(move |k| (d - k, k)))
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, k, c) in self.terms() {
            let negative = c.is_negative();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || n + k == 0 {
                factors.push(mag.to_string());
            }
            for (var, e) in [("x", n), ("t", k)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &BiSeries {
    type Output = BiSeries;

    /// Panics on truncation mismatch; see [`BiSeries::checked_add`].
    fn add(self, rhs: &BiSeries) -> BiSeries {
        self.checked_add(rhs).expect("series truncations differ")
    }
}

impl Sub for &BiSeries {
    type Output = BiSeries;

    fn sub(self, rhs: &BiSeries) -> BiSeries {
        self.checked_sub(rhs).expect("series truncations differ")
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;

    fn mul(self, rhs: &BiSeries) -> BiSeries {
        self.checked_mul(rhs).expect("series truncations differ")
    }
}

impl Neg for &BiSeries {
    type Output = BiSeries;

    fn neg(self) -> BiSeries {
        self.scale_int(-1)
    }
}

/// How the empty meander enters `⊡` in the decomposition identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// The empty meander is excluded from touch slots and from the left side.
    DropEmpty,
    /// The even part keeps its constant term; substitution then diverges and is refused.
    KeepEmpty,
    /// As [`Convention::DropEmpty`], and the one-point meanders `x` and `t`
    /// are counted on their own instead of as iterated-snake hosts, since
    /// inserting into a single point gives back the inserted meander.
    SplitUnits,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::DropEmpty => "drop-empty",
            Convention::KeepEmpty => "keep-empty",
            Convention::SplitUnits => "split-units",
        }
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "drop-empty" => Ok(Convention::DropEmpty),
            "keep-empty" => Ok(Convention::KeepEmpty),
            "split-units" => Ok(Convention::SplitUnits),
            _ => Err(Error::Syntax {
                at: 0,
                msg: format!("unknown convention {s:?}"),
            }),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Generating function of snakes, expanded from its rational form
/// `-x + (-t² + t + x(x + 2)) / ((t - 1)² - x²)`.
pub fn phi_s(trunc: usize) -> BiSeries {
    let x = BiSeries::x(trunc);
    let t = BiSeries::t(trunc);
    let one = BiSeries::one(trunc);
    let two = BiSeries::constant(trunc, 2);
    let numerator = &(&(&t - &(&t * &t)) + &(&x * &(&x + &two)));
    let t_minus_one = &t - &one;
    let denominator = &(&t_minus_one * &t_minus_one) - &(&x * &x);
    let quotient = numerator * &denominator.inverse().expect("constant term is 1");
    &quotient - &x
}

/// One step of the iterated-snake equation
/// `φ ↦ x + t + (φ_S - x - t)(x + (φ⁽¹⁾ - x)/2, t)`.
///
/// The two unit snakes stay as they are: substituting into the single
/// crossing only reproduces its argument, and those meanders are already
/// counted by the longer inverse snakes.
pub fn iterated_snake_step(phi: &BiSeries) -> Result<BiSeries> {
    let trunc = phi.truncation();
    let x = BiSeries::x(trunc);
    let t = BiSeries::t(trunc);
    let long_snakes = &(&phi_s(trunc) - &x) - &t;
    let slot = &x + &(&phi.odd_part() - &x).halve()?;
    Ok(&(&x + &t) + &long_snakes.compose(&slot, &t)?)
}

/// The same equation with `φ_S` substituted as a whole,
/// `φ ↦ φ_S(x + (φ⁽¹⁾ - x)/2, t)`. It has no integral fixed point: the
/// linear term feeds each odd coefficient back into itself with weight 1/2.
pub fn iterated_snake_step_unreduced(phi: &BiSeries) -> Result<BiSeries> {
    let trunc = phi.truncation();
    let x = BiSeries::x(trunc);
    let slot = &x + &(&phi.odd_part() - &x).halve()?;
    phi_s(trunc).compose(&slot, &BiSeries::t(trunc))
}

/// Fixed point of [`iterated_snake_step`] starting from `φ_S`.
pub fn solve_phi_is(trunc: usize) -> Result<BiSeries> {
    let mut phi = phi_s(trunc);
    // Degree d is final after d + 1 steps.
    for _ in 0..=trunc + 1 {
        let next = iterated_snake_step(&phi)?;
        if next == phi {
            return Ok(phi);
        }
        phi = next;
    }
    Ok(phi)
}

/// One coefficient of the decomposition identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub n: usize,
    pub k: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl Residual {
    pub fn residual(&self) -> BigInt {
        &self.lhs - &self.rhs
    }
}

/// Coefficientwise comparison of `ψ` with
/// `φ_IR ⊡ ψ + φ_IS ⊡ (x + t + φ_IR ⊡ ψ)`, or with
/// `x + t + φ_IR ⊡ ψ + (φ_IS - x - t) ⊡ (x + t + φ_IR ⊡ ψ)` under
/// [`Convention::SplitUnits`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasterReport {
    pub truncation: usize,
    pub convention: Convention,
    pub entries: Vec<Residual>,
}

impl MasterReport {
    pub fn all_zero(&self) -> bool {
        self.entries.iter().all(|r| r.lhs == r.rhs)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &Residual> {
        self.entries.iter().filter(|r| r.lhs != r.rhs)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "truncation": self.truncation,
            "convention": self.convention.name(),
            "all_zero": self.all_zero(),
            "entries": self.entries.iter().map(|r| json!({
                "n": r.n,
                "k": r.k,
                "lhs": r.lhs.to_string(),
                "rhs": r.rhs.to_string(),
                "residual": r.residual().to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn verify_master_equation(
    trunc: usize,
    psi: &BiSeries,
    phi_ir: &BiSeries,
    phi_is: &BiSeries,
    convention: Convention,
) -> Result<MasterReport> {
    for s in [psi, phi_ir, phi_is] {
        if s.truncation() != trunc {
            return Err(Error::TruncationMismatch(trunc, s.truncation()));
        }
    }
    let units = &BiSeries::x(trunc) + &BiSeries::t(trunc);
    let irreducible_rooted = phi_ir.boxdot(psi, convention)?;
    let children = &units + &irreducible_rooted;
    let rhs = match convention {
        Convention::SplitUnits => {
            let hosts = phi_is - &units;
            &(&units + &irreducible_rooted) + &hosts.boxdot(&children, convention)?
        }
        _ => &irreducible_rooted + &phi_is.boxdot(&children, convention)?,
    };
    let lhs = match convention {
        Convention::DropEmpty | Convention::SplitUnits => psi.without_constant(),
        Convention::KeepEmpty => psi.clone(),
    };
    let entries = degrees(trunc)
        .map(|(n, k)| Residual {
            n,
            k,
            lhs: lhs.coeff(n, k),
            rhs: rhs.coeff(n, k),
        })
        .collect();
    Ok(MasterReport {
        truncation: trunc,
        convention,
        entries,
    })
}

/// Case formula for the number of snakes of order `(n, k)`.
pub fn snake_count_formula(n: usize, k: usize) -> BigInt {
    match (n, k) {
        (0, 0) => BigInt::zero(),
        (1, 0) => BigInt::one(),
        _ if n.is_multiple_of(2) => binomial(n + k, k),
        _ => binomial(n + k, k) * 2,
    }
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn ring_basics() {
        let x = BiSeries::x(4);
        assert_eq!(&x * &x, BiSeries::monomial(4, 2, 0, 1));
        let a = &(&x + &BiSeries::t(4)) + &BiSeries::constant(4, 3);
        assert_eq!(&a * &BiSeries::one(4), a);
        assert!(matches!(
            x.checked_add(&BiSeries::x(5)),
            Err(Error::TruncationMismatch(4, 5))
        ));
    }

    #[test]
    fn geometric_identity() {
        let trunc = 7;
        let t = BiSeries::t(trunc);
        let x = BiSeries::x(trunc);
        let u = &(&t.scale_int(2) - &(&t * &t)) + &(&x * &x);
        let mut geometric = BiSeries::zero(trunc);
        let mut power = BiSeries::one(trunc);
        for _ in 0..=trunc {
            geometric = &geometric + &power;
            power = &power * &u;
        }
        let one = BiSeries::one(trunc);
        assert_eq!(&(&one - &u) * &geometric, one);
        assert_eq!((&one - &u).inverse().unwrap(), geometric);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(BiSeries::one(3).inverse().unwrap(), BiSeries::one(3));
        let one_minus_x = &BiSeries::one(5) - &BiSeries::x(5);
        let inv = one_minus_x.inverse().unwrap();
        for n in 0..=5 {
            assert_eq!(inv.coeff(n, 0), big(1));
            assert_eq!(inv.coeff(0, n), big(if n == 0 { 1 } else { 0 }));
        }
        let t = BiSeries::t(2);
        let x = BiSeries::x(2);
        let tm1 = &t - &BiSeries::one(2);
        let d = &(&tm1 * &tm1) - &(&x * &x);
        let inv = d.inverse().unwrap();
        assert_eq!(inv.to_string(), "1 + 2*t + x^2 + 3*t^2");
        assert!(matches!(
            BiSeries::constant(3, 2).inverse(),
            Err(Error::NonUnitConstant(_))
        ));
        assert!(BiSeries::constant(3, -1).inverse().is_ok());
    }

    #[test]
    fn parts() {
        let f = &(&BiSeries::x(3) + &BiSeries::monomial(3, 2, 0, 1)) + &BiSeries::t(3);
        assert_eq!(f.odd_part(), BiSeries::x(3));
        assert_eq!(f.even_part().to_string(), "t + x^2");
    }

    #[test]
    fn compose_examples() {
        let trunc = 5;
        let f = BiSeries::from_fn(trunc, |n, k| big((n * 3 + k) as i64 - 4));
        let x = BiSeries::x(trunc);
        let t = BiSeries::t(trunc);
        assert_eq!(f.compose(&x, &t).unwrap(), f);
        let a = &x + &(&t * &t);
        let b = &t.scale_int(3) + &(&x * &t);
        let sq = BiSeries::monomial(trunc, 2, 0, 1);
        assert_eq!(sq.compose(&a, &b).unwrap(), &a * &a);
        assert!(matches!(
            f.compose(&(&x + &BiSeries::one(trunc)), &t),
            Err(Error::NonZeroConstant { slot: "x", .. })
        ));
    }

    #[test]
    fn boxdot_examples() {
        let trunc = 5;
        let x = BiSeries::x(trunc);
        let t = BiSeries::t(trunc);
        let f = BiSeries::from_fn(trunc, |n, k| big((n + 2 * k) as i64));
        let xt = &x + &t;
        assert_eq!(f.boxdot(&xt, Convention::DropEmpty).unwrap(), f);
        let g = BiSeries::from_fn(trunc, |n, k| big((n * n + k) as i64 + 1));
        assert_eq!(x.boxdot(&g, Convention::DropEmpty).unwrap(), g.odd_part());
        assert_eq!(
            t.boxdot(&g, Convention::DropEmpty).unwrap(),
            g.even_part().without_constant()
        );
        assert!(matches!(
            t.boxdot(&g, Convention::KeepEmpty),
            Err(Error::NonZeroConstant { slot: "t", .. })
        ));
    }

    #[test]
    fn phi_s_spot_values() {
        let s = phi_s(6);
        assert_eq!(s.coeff(0, 0), big(0));
        assert_eq!(s.coeff(1, 0), big(1));
        assert_eq!(s.coeff(1, 1), big(4));
        assert_eq!(s.coeff(3, 0), big(2));
        assert_eq!(s.coeff(2, 3), big(10));
        assert_eq!(s.coeff(2, 0), big(1));
    }

    #[test]
    fn phi_is_is_a_fixed_point() {
        let phi = solve_phi_is(8).unwrap();
        assert_eq!(iterated_snake_step(&phi).unwrap(), phi);
        assert_eq!(phi.coeff(1, 0), big(1));
        assert_eq!(phi.coeff(3, 0), big(2));
        assert_eq!(phi.coeff(2, 1), big(7));
        assert_eq!(phi.coeff(8, 0), big(79));
    }

    #[test]
    fn unreduced_step_drifts() {
        let phi = solve_phi_is(4).unwrap();
        let lit = iterated_snake_step_unreduced(&phi).unwrap();
        assert_eq!(lit.coeff(3, 0), big(3));
        assert!(iterated_snake_step_unreduced(&lit).is_err());
    }

    #[test]
    fn halve_rejects_odd() {
        let s = BiSeries::monomial(3, 1, 1, 3);
        assert!(matches!(s.halve(), Err(Error::OddCoefficient { n: 1, k: 1, .. })));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 3), big(10));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(snake_count_formula(1, 1), big(4));
        assert_eq!(snake_count_formula(0, 0), big(0));
    }

    #[test]
    fn display_and_dumps() {
        let s = &BiSeries::monomial(3, 2, 1, -3) + &BiSeries::constant(3, 1);
        assert_eq!(s.to_string(), "1 - 3*x^2*t");
        assert_eq!(s.monomial_list(), "1 * x^0 t^0\n-3 * x^2 t^1\n");
        assert_eq!(BiSeries::zero(2).to_string(), "0");
        assert_eq!(s.to_json()["terms"][1]["coeff"], "-3");
        assert!(s.to_csv().starts_with("n,k,coeff\n0,0,1\n"));
    }
}
