//! Decomposition into irreducibles, irreducibility verdicts,
//! Frobenius-Schur indicators, and the indicator-driven containment and
//! index bound checks.

use num::{One, Signed, Zero};

use crate::bounds::BoundReport;
use crate::chartab::{inner_product, ClassFunction};
use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Int, Rational};
use crate::plethysm::{ext_power, sym_power};

/// Integer multiplicities of a virtual character against the
/// irreducibles of its table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub multiplicities: Vec<Int>,
    pub is_proper: bool,
}

impl Decomposition {
    pub fn support(&self) -> Vec<usize> {
        self.multiplicities
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

/// m_i = <f, chi_i>; every multiplicity must come out a rational
/// integer, otherwise f is not a virtual character of the table.
pub fn decompose(f: &ClassFunction) -> Result<Decomposition> {
    let t = f.table();
    let mut multiplicities = Vec::with_capacity(t.irreducible_count());
    for i in 0..t.irreducible_count() {
        let chi = ClassFunction::irreducible(t, i);
        let m = inner_product(f, &chi)?;
        let m = m.to_integer().map_err(|_| {
            Error::domain(format!(
                "<f, chi_{}> = {} is not a rational integer; not a virtual character",
                i, m
            ))
        })?;
        multiplicities.push(m);
    }
    let is_proper = multiplicities.iter().all(|m| !m.is_negative());
    Ok(Decomposition { multiplicities, is_proper })
}

/// True iff the proper character f has norm 1.  Virtual characters that
/// are not proper (for example negated irreducibles) are rejected.
pub fn is_irreducible(f: &ClassFunction) -> Result<bool> {
    let d = decompose(f)?;
    if !d.is_proper || f.is_zero_function() {
        return Err(Error::domain("input is not a proper nonzero character"));
    }
    let n = inner_product(f, f)?.to_rational()?;
    Ok(n == Rational::one())
}

/// Frobenius-Schur indicator type of a self-dual irreducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndicatorType {
    /// +1, orthogonal ("type +")
    Orthogonal,
    /// 0, not self-dual
    NotSelfDual,
    /// -1, symplectic ("type -")
    Symplectic,
}

impl IndicatorType {
    pub fn value(&self) -> i32 {
        match self {
            IndicatorType::Orthogonal => 1,
            IndicatorType::NotSelfDual => 0,
            IndicatorType::Symplectic => -1,
        }
    }
}

/// `(1/|G|) sum_c |c| f(class of g_c^2)` as an exact value, defined for
/// any class function.
pub fn frobenius_schur_value(f: &ClassFunction) -> Result<Cyclotomic> {
    let t = f.table();
    let mut s = Cyclotomic::zero();
    for c in 0..t.class_count() {
        let sq = t.power_class(c, 2)?;
        s = &s + &f.value(sq).scale(&Rational::from_integer(Int::from(t.classes[c].size)));
    }
    Ok(s.scale(&Rational::new(Int::one(), Int::from(t.group_order))))
}

/// The indicator of an irreducible character; anything outside
/// {-1, 0, 1} signals a corrupted table.
pub fn frobenius_schur(f: &ClassFunction) -> Result<IndicatorType> {
    let v = frobenius_schur_value(f)?;
    let r = v
        .to_rational()
        .map_err(|_| Error::domain(format!("indicator {} is not rational", v)))?;
    if r == Rational::one() {
        Ok(IndicatorType::Orthogonal)
    } else if r.is_zero() {
        Ok(IndicatorType::NotSelfDual)
    } else if r == -Rational::one() {
        Ok(IndicatorType::Symplectic)
    } else {
        Err(Error::domain(format!(
            "indicator {} outside {{-1, 0, 1}}; table corrupted or input not irreducible",
            r
        )))
    }
}

/// Outcome of the indicator-driven containment check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentReport {
    pub indicator: IndicatorType,
    pub k: u64,
    /// multiplicity of the trivial character (k even) or of f itself
    /// (k odd) in the relevant power
    pub multiplicity: Int,
    pub holds: bool,
}

/// For an irreducible f of orthogonal type, Sym^k(f) contains the
/// trivial character (k even) or f itself (k odd); for symplectic type
/// the same holds with the exterior power, whose containment statement
/// covers 1 <= k <= f(1) (above that the exterior power vanishes and
/// the report comes back with multiplicity 0).  Returns the exact
/// multiplicity; indicator 0 is rejected.
pub fn containment_by_type(f: &ClassFunction, k: u64) -> Result<ContainmentReport> {
    if k == 0 {
        return Err(Error::domain("containment check needs k >= 1"));
    }
    let indicator = frobenius_schur(f)?;
    let power = match indicator {
        IndicatorType::Orthogonal => sym_power(f, k)?,
        IndicatorType::Symplectic => ext_power(f, k)?,
        IndicatorType::NotSelfDual => {
            return Err(Error::domain("containment check needs indicator +-1"));
        }
    };
    let target = if k % 2 == 0 { ClassFunction::trivial(f.table()) } else { f.clone() };
    let multiplicity = inner_product(&power, &target)?.to_integer()?;
    let holds = multiplicity >= Int::one();
    Ok(ContainmentReport { indicator, k, multiplicity, holds })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KParity {
    Even,
    Odd,
}

/// dim X^k(V) against (G : Z(G)H), or d (G : Z(G)H) for odd k.  The
/// index is supplied by the caller: ambient embeddings are not table
/// data.
pub fn index_bound_check(
    power_dim: &Int,
    degree_d: &Int,
    index: &Int,
    parity: KParity,
) -> BoundReport {
    let rhs = match parity {
        KParity::Even => index.clone(),
        KParity::Odd => degree_d * index,
    };
    BoundReport::new(
        format!(
            "index_bound dim={} d={} index={} ({})",
            power_dim,
            degree_d,
            index,
            match parity {
                KParity::Even => "even",
                KParity::Odd => "odd",
            }
        ),
        Rational::from_integer(power_dim.clone()),
        Rational::from_integer(rhs),
        String::new(),
    )
}
