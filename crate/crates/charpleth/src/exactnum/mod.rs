//! Exact arithmetic in abelian number fields.
//!
//! Every character value in this crate is a [`Cyclotomic`]: an element of
//! Q(zeta_n) stored on the square-free-supported basis used by GAP (the
//! Zumbroich basis) with the conductor minimized on construction.  Two
//! equal field elements therefore have identical stored form, and `==` is
//! coefficient-wise.  There is no floating point anywhere in the value
//! domain.

mod parse;

pub use parse::parse_cyclotomic;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

/// An element of the n-th cyclotomic field in canonical form.
///
/// Invariants: the support lies in the Zumbroich basis of the conductor,
/// no stored coefficient is zero, and the conductor is the smallest
/// cyclotomic field containing the element (rationals have conductor 1).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: BTreeMap<u64, Rational>,
}

fn prime_power_factors(n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut q = 1;
            while m % p == 0 {
                m /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, m));
    }
    out
}

fn mod_inv(a: u64, m: u64) -> u64 {
    // extended Euclid; gcd(a, m) = 1 assumed
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "mod_inv of non-unit");
    t.rem_euclid(m as i128) as u64
}

/// True if exponent `i` is allowed at the prime power `(p, q)` of `n`.
fn exponent_clean(i: u64, n: u64, p: u64, q: u64) -> bool {
    let s = (i % q) * mod_inv((n / q) % q, q) % q;
    if p == 2 {
        s < q / 2
    } else {
        // forbidden: centered interval of width q/p around 0
        let half = (q / p - 1) / 2;
        !(s <= half || s >= q - half)
    }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Cyclotomic::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Cyclotomic { conductor: 1, coeffs }
    }

    pub fn from_int(n: i64) -> Self {
        Cyclotomic::from_rational(rat(n))
    }

    /// The primitive root of unity zeta_n^k, canonicalized.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("root of unity needs order n >= 1"));
        }
        let e = k.rem_euclid(n as i64) as u64;
        Ok(Cyclotomic::from_terms(n, [(e, Rational::one())]))
    }

    /// Builds the canonical element `sum c_e zeta_n^e` from arbitrary terms.
    pub fn from_terms<I>(n: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, Rational)>,
    {
        assert!(n >= 1, "conductor must be positive");
        let mut map: BTreeMap<u64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let e = e % n;
            add_coeff(&mut map, e, c);
        }
        reduce_to_basis(n, &mut map);
        let mut out = Cyclotomic { conductor: n, coeffs: map };
        out.minimize_conductor();
        out
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Sparse coefficients on the canonical basis of the conductor field.
    pub fn coefficients(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// The rational value, or a domain error for irrational elements.
    pub fn to_rational(&self) -> Result<Rational> {
        if self.conductor != 1 {
            return Err(Error::domain(format!(
                "value is not rational (conductor {})",
                self.conductor
            )));
        }
        Ok(self.coeffs.get(&0).cloned().unwrap_or_else(Rational::zero))
    }

    /// The rational integer value, or a domain error.
    pub fn to_integer(&self) -> Result<Int> {
        let r = self.to_rational()?;
        if !r.is_integer() {
            return Err(Error::domain(format!("value {} is not an integer", r)));
        }
        Ok(r.to_integer())
    }

    /// Applies the Galois automorphism zeta_n -> zeta_n^j (gcd(j, n) = 1).
    pub fn galois(&self, j: u64) -> Result<Self> {
        let n = self.conductor;
        if num::integer::gcd(j % n, n) != 1 {
            return Err(Error::domain(format!(
                "galois exponent {} is not coprime to conductor {}",
                j, n
            )));
        }
        Ok(Cyclotomic::from_terms(
            n,
            self.coeffs.iter().map(|(e, c)| (e * (j % n) % n, c.clone())),
        ))
    }

    /// Complex conjugation, zeta -> zeta^{-1}.
    pub fn conjugate(&self) -> Self {
        let n = self.conductor;
        Cyclotomic::from_terms(
            n,
            self.coeffs.iter().map(|(e, c)| ((n - e) % n, c.clone())),
        )
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        let coeffs = self.coeffs.iter().map(|(e, c)| (*e, c * r)).collect();
        Cyclotomic { conductor: self.conductor, coeffs }
    }

    /// Multiplicative inverse via the product of all nontrivial Galois
    /// conjugates divided by the norm.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("division by zero"));
        }
        if self.conductor == 1 {
            let r = self.to_rational()?;
            return Ok(Cyclotomic::from_rational(Rational::one() / r));
        }
        let n = self.conductor;
        let mut prod = Cyclotomic::one();
        for j in 2..n {
            if num::integer::gcd(j, n) == 1 {
                prod = &prod * &self.galois(j)?;
            }
        }
        let norm = (self * &prod).to_rational()?;
        debug_assert!(!norm.is_zero());
        Ok(prod.scale(&(Rational::one() / norm)))
    }

    /// A total order used only to fix deterministic output orderings.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.conductor
            .cmp(&other.conductor)
            .then_with(|| {
                let a: Vec<_> = self.coeffs.iter().collect();
                let b: Vec<_> = other.coeffs.iter().collect();
                a.cmp(&b)
            })
    }

    fn minimize_conductor(&mut self) {
        if self.coeffs.is_empty() {
            self.conductor = 1;
            return;
        }
        loop {
            let n = self.conductor;
            if n == 1 {
                return;
            }
            if n % 4 == 2 {
                // Q(zeta_n) = Q(zeta_{n/2}); rewrite unconditionally.
                let m = n / 2;
                let terms: Vec<(u64, Rational)> = self
                    .coeffs
                    .iter()
                    .map(|(&i, c)| {
                        if i % 2 == 0 {
                            ((i / 2) % m, c.clone())
                        } else {
                            // zeta_n^i = -zeta_n^{i - n/2} with i - n/2 even
                            let j = (i + n - m) % n;
                            ((j / 2) % m, -c.clone())
                        }
                    })
                    .collect();
                *self = Cyclotomic::assemble(m, terms);
                continue;
            }
            if let Some(next) = self.try_descend_once() {
                *self = next;
                continue;
            }
            return;
        }
    }

    /// One conductor-reduction step, or None if already minimal.
    fn try_descend_once(&self) -> Option<Cyclotomic> {
        let n = self.conductor;
        for (p, q) in prime_power_factors(n) {
            if q >= p * p || (p == 2 && q == 4) {
                // Removing one factor p (all of 4 when q = 4) requires the
                // support to consist of multiples of p (resp. 4).
                let step = if p == 2 && q == 4 { 4 } else { p };
                if self.coeffs.keys().all(|&i| i % step == 0) {
                    let m = n / step;
                    let terms: Vec<(u64, Rational)> = self
                        .coeffs
                        .iter()
                        .map(|(&i, c)| ((i / step) % m, c.clone()))
                        .collect();
                    return Some(Cyclotomic::assemble(m, terms));
                }
            } else if p > 2 {
                // p exactly divides n: the element descends iff it is fixed
                // by the relative Galois group, generated by j0 with
                // j0 = 1 mod n/p and j0 a primitive root mod p.
                let m = n / p;
                let g = primitive_root_mod_p(p);
                let j0 = crt(1, m, g, p);
                let fixed = self.coeffs.iter().all(|(&i, c)| {
                    self.coeffs.get(&(i * (j0 % n) % n)) == Some(c)
                });
                if !fixed {
                    continue;
                }
                // Each orbit {i : i = a mod m, i != 0 mod p} sums to
                // -zeta_m^{a/p}; keep one representative per orbit.
                let inv_p = mod_inv(p % m, m);
                let mut terms: Vec<(u64, Rational)> = Vec::new();
                let mut seen: BTreeMap<u64, ()> = BTreeMap::new();
                for (&i, c) in &self.coeffs {
                    let a = i % m;
                    if seen.insert(a, ()).is_none() {
                        terms.push((a * inv_p % m, -c.clone()));
                    }
                }
                return Some(Cyclotomic::assemble(m, terms));
            }
        }
        None
    }

    /// Canonicalize terms over conductor m without re-entering
    /// minimize_conductor (the caller loops).
    fn assemble(m: u64, terms: Vec<(u64, Rational)>) -> Cyclotomic {
        let mut map: BTreeMap<u64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if !c.is_zero() {
                add_coeff(&mut map, e % m, c);
            }
        }
        reduce_to_basis(m, &mut map);
        Cyclotomic { conductor: m, coeffs: map }
    }
}

fn crt(a: u64, m: u64, b: u64, p: u64) -> u64 {
    // x = a mod m, x = b mod p, gcd(m, p) = 1
    let mp = m as u128 * p as u128;
    let x = a as u128 * p as u128 % mp * mod_inv(p % m, m) as u128 % mp
        + b as u128 * m as u128 % mp * mod_inv(m % p, p) as u128 % mp;
    (x % mp) as u64
}

fn primitive_root_mod_p(p: u64) -> u64 {
    let factors: Vec<u64> = prime_power_factors(p - 1).iter().map(|&(f, _)| f).collect();
    'g: for g in 2..p {
        for &f in &factors {
            if pow_mod(g, (p - 1) / f, p) == 1 {
                continue 'g;
            }
        }
        return g;
    }
    unreachable!("no primitive root mod {}", p)
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mm = m as u128;
    let mut acc: u128 = 1;
    let mut bb = b as u128 % mm;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % mm;
        }
        bb = bb * bb % mm;
        e >>= 1;
    }
    acc as u64
}

fn add_coeff(map: &mut BTreeMap<u64, Rational>, e: u64, c: Rational) {
    use std::collections::btree_map::Entry;
    match map.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Rewrites arbitrary exponents into the Zumbroich basis of n.
///
/// Processes one prime at a time; the root-of-unity relations used here
/// move exponents into the clean set for that prime without disturbing
/// primes already processed.
fn reduce_to_basis(n: u64, map: &mut BTreeMap<u64, Rational>) {
    if n == 1 {
        return;
    }
    for (p, q) in prime_power_factors(n) {
        let dirty: Vec<u64> = map
            .keys()
            .copied()
            .filter(|&i| !exponent_clean(i, n, p, q))
            .collect();
        for i in dirty {
            let c = map.remove(&i).unwrap();
            if p == 2 {
                // zeta^{n/2} = -1
                add_coeff(map, (i + n / 2) % n, -c);
            } else {
                // 1 + zeta_p + ... + zeta_p^{p-1} = 0
                for t in 1..p {
                    add_coeff(map, (i + t * (n / p)) % n, -c.clone());
                }
            }
        }
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let l = num::integer::lcm(self.conductor, rhs.conductor);
        let terms = self
            .coeffs
            .iter()
            .map(|(e, c)| (e * (l / self.conductor) % l, c.clone()))
            .chain(
                rhs.coeffs
                    .iter()
                    .map(|(e, c)| (e * (l / rhs.conductor) % l, c.clone())),
            );
        Cyclotomic::from_terms(l, terms)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        let coeffs = self.coeffs.iter().map(|(e, c)| (*e, -c)).collect();
        Cyclotomic { conductor: self.conductor, coeffs }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        // rational scalars are the common case in character work
        if self.conductor == 1 {
            return rhs.scale(self.coeffs.get(&0).unwrap());
        }
        if rhs.conductor == 1 {
            return self.scale(rhs.coeffs.get(&0).unwrap());
        }
        let l = num::integer::lcm(self.conductor, rhs.conductor);
        let sa = l / self.conductor;
        let sb = l / rhs.conductor;
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                add_coeff(&mut acc, (ea * sa + eb * sb) % l, ca * cb);
            }
        }
        Cyclotomic::from_terms(l, acc)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", parse::serialize_cyclotomic(self))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k).unwrap()
    }

    #[test]
    fn root_identity_case() {
        assert_eq!(root(1, 0), Cyclotomic::one());
        assert!(Cyclotomic::root_of_unity(0, 1).is_err());
    }

    #[test]
    fn minimal_polynomial_of_zeta3() {
        let s = &root(3, 1) + &root(3, 2);
        assert_eq!(s, Cyclotomic::from_int(-1));
        assert_eq!(s.conductor(), 1);
    }

    #[test]
    fn golden_ratio_conjugate_satisfies_quadratic() {
        // e = zeta_5^2 + zeta_5^3 has value (-1 - sqrt 5)/2, so e^2 + e = 1.
        let e = &root(5, 2) + &root(5, 3);
        assert_eq!(e.conductor(), 5);
        let lhs = &(&e * &e) + &e;
        assert_eq!(lhs, Cyclotomic::one());
    }

    #[test]
    fn inverse_roots_multiply_to_one() {
        assert_eq!(&root(5, 1) * &root(5, 4), Cyclotomic::one());
        assert_eq!(&root(4, 1) * &root(4, 1), Cyclotomic::from_int(-1));
    }

    #[test]
    fn zeta3_sum_acts_as_minus_one() {
        let s = &root(3, 1) + &root(3, 2);
        let x = &(&root(7, 3) + &Cyclotomic::from_int(2)) * &root(5, 1);
        assert_eq!(&s * &x, -&x);
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(root(7, 3).conjugate(), root(7, 4));
        let r = Cyclotomic::from_rational(ratio(-7, 3));
        assert_eq!(r.conjugate(), r);
        let a = &root(5, 1) + &root(7, 2).scale(&ratio(2, 3));
        let n = &a.conjugate() * &a;
        assert_eq!(n.conjugate(), n);
    }

    #[test]
    fn to_rational_detects_irrational() {
        assert_eq!(Cyclotomic::one().to_rational().unwrap(), rat(1));
        let s = &root(3, 1) + &root(3, 2);
        assert_eq!(s.to_rational().unwrap(), rat(-1));
        assert!(root(5, 1).to_rational().is_err());
    }

    #[test]
    fn conductor_minimization_across_operations() {
        // zeta_8 * zeta_8 = i lives in conductor 4
        let z8 = root(8, 1);
        assert_eq!((&z8 * &z8).conductor(), 4);
        // zeta_12^3 = i, conductor 4
        assert_eq!(root(12, 3).conductor(), 4);
        // zeta_12^4 = zeta_3
        assert_eq!(root(12, 4), root(3, 1));
        // sqrt 5 = zeta5 - zeta5^2 - zeta5^3 + zeta5^4 squared is 5
        let sqrt5 = &(&root(5, 1) - &root(5, 2)) - &(&root(5, 3) - &root(5, 4));
        assert_eq!((&sqrt5 * &sqrt5).to_rational().unwrap(), rat(5));
        // sum over all primitive 5th roots is -1, conductor 1
        let s = [1, 2, 3, 4]
            .iter()
            .fold(Cyclotomic::zero(), |acc, &k| &acc + &root(5, k));
        assert_eq!(s, Cyclotomic::from_int(-1));
    }

    #[test]
    fn even_conductors_normalize() {
        // zeta_6 = -zeta_3^2
        assert_eq!(root(6, 1), -&root(3, 2));
        assert_eq!(root(6, 1).conductor(), 3);
        assert_eq!(root(2, 1), Cyclotomic::from_int(-1));
        assert_eq!(root(10, 5), Cyclotomic::from_int(-1));
    }

    #[test]
    fn inverse_of_nonzero() {
        let x = &root(5, 1) + &Cyclotomic::from_int(3);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, Cyclotomic::one());
        assert!(Cyclotomic::zero().inverse().is_err());
        let i = root(4, 1);
        assert_eq!(i.inverse().unwrap(), root(4, 3));
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let x = &root(45, 7) + &root(12, 5).scale(&ratio(3, 2));
        let rebuilt = Cyclotomic::from_terms(
            x.conductor(),
            x.coefficients().map(|(e, c)| (e, c.clone())),
        );
        assert_eq!(x, rebuilt);
    }
}
