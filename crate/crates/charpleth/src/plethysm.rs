//! Symmetric powers, exterior powers and Schur functors of class
//! functions, computed classwise through the Adams-operation recursions
//!
//!   k S_k = sum_{m=1}^{k} psi_m S_{k-m}
//!   k E_k = sum_{m=1}^{k} (-1)^{m-1} psi_m E_{k-m}
//!
//! where psi_m(g) = f(g^m).  Everything is exact, so the classwise loop
//! is data-parallel with no ordering sensitivity.

use std::sync::Arc;

use num::{One, Zero};

use crate::chartab::{CharacterTable, ClassFunction};
use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Int, Rational};
use crate::par;

/// A partition: weakly decreasing positive parts; empty is degree 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain("partition parts must be weakly decreasing"));
        }
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        Ok(Partition { parts })
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Partition::new(vec![]);
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::parse(format!("bad partition part {:?}", p)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// The transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let rows = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=rows)
            .map(|col| self.parts.iter().filter(|&&p| p >= col).count() as u64)
            .collect();
        Partition { parts }
    }

    /// All partitions of k, in lexicographically decreasing order.
    pub fn all_of(k: u64) -> Vec<Partition> {
        fn rec(rest: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            let top = rest.min(max);
            for part in (1..=top).rev() {
                prefix.push(part);
                rec(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(k, k, &mut Vec::new(), &mut out);
        out
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// The class-index matrix of g -> g^m for m = 1..=k.
fn power_index_matrix(t: &CharacterTable, k: u64) -> Result<Vec<Vec<usize>>> {
    (0..t.class_count())
        .map(|c| (1..=k).map(|m| t.power_class(c, m as i64)).collect())
        .collect()
}

/// Adams operation psi^m: the class function g -> f(g^m).
pub fn adams(f: &ClassFunction, m: i64) -> Result<ClassFunction> {
    let t = f.table();
    let values = (0..t.class_count())
        .map(|c| Ok(f.value(t.power_class(c, m)?).clone()))
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(Arc::clone(t), values)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Sym,
    Ext,
}

/// Computes all layers S_0..S_k (or E_0..E_k) at once; the recursion
/// reuses every lower layer, so this is the memoized entry point.
fn powers(f: &ClassFunction, k: u64, kind: Kind) -> Result<Vec<ClassFunction>> {
    let t = Arc::clone(f.table());
    let idx = power_index_matrix(&t, k)?;
    let per_class: Vec<Vec<Cyclotomic>> = par::map_indexed(t.class_count(), |c| {
        // psi_m(c) = f(c^m)
        let psi: Vec<&Cyclotomic> = idx[c].iter().map(|&i| f.value(i)).collect();
        let mut layers: Vec<Cyclotomic> = Vec::with_capacity(k as usize + 1);
        layers.push(Cyclotomic::one());
        for j in 1..=k as usize {
            let mut acc = Cyclotomic::zero();
            for m in 1..=j {
                let term = psi[m - 1] * &layers[j - m];
                if kind == Kind::Ext && m % 2 == 0 {
                    acc = &acc - &term;
                } else {
                    acc = &acc + &term;
                }
            }
            layers.push(acc.scale(&Rational::new(Int::one(), Int::from(j))));
        }
        layers
    });
    (0..=k as usize)
        .map(|j| {
            let values = per_class.iter().map(|layers| layers[j].clone()).collect();
            ClassFunction::new(Arc::clone(&t), values)
        })
        .collect()
}

pub fn sym_powers(f: &ClassFunction, k: u64) -> Result<Vec<ClassFunction>> {
    powers(f, k, Kind::Sym)
}

pub fn ext_powers(f: &ClassFunction, k: u64) -> Result<Vec<ClassFunction>> {
    powers(f, k, Kind::Ext)
}

/// The character of Sym^k applied to f.
pub fn sym_power(f: &ClassFunction, k: u64) -> Result<ClassFunction> {
    Ok(sym_powers(f, k)?.pop().expect("k+1 layers"))
}

/// The character of the k-th exterior power of f.
pub fn ext_power(f: &ClassFunction, k: u64) -> Result<ClassFunction> {
    Ok(ext_powers(f, k)?.pop().expect("k+1 layers"))
}

/// Schur functor via the Jacobi-Trudi determinant det(h_{lambda_i - i + j})
/// expanded by cofactors over the symmetric-power characters.
pub fn schur_functor(f: &ClassFunction, lambda: &Partition) -> Result<ClassFunction> {
    let t = Arc::clone(f.table());
    let r = lambda.length();
    if r == 0 {
        return Ok(ClassFunction::trivial(&t));
    }
    let max_h = lambda.parts()[0] + r as u64;
    let hs = sym_powers(f, max_h)?;
    // entry (i, j) of the r x r Jacobi-Trudi matrix, as an index into hs
    // (None encodes h_{negative} = 0)
    let entry = |i: usize, j: usize| -> Option<usize> {
        let shift = lambda.parts()[i] as i64 - i as i64 + j as i64;
        if shift < 0 {
            None
        } else {
            Some(shift as usize)
        }
    };
    let values = par::map_indexed(t.class_count(), |c| {
        let m: Vec<Vec<Cyclotomic>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| match entry(i, j) {
                        Some(s) => hs[s].value(c).clone(),
                        None => Cyclotomic::zero(),
                    })
                    .collect()
            })
            .collect();
        determinant(&m)
    });
    ClassFunction::new(t, values)
}

/// Cofactor expansion; the suites never need more than 6 x 6.
fn determinant(m: &[Vec<Cyclotomic>]) -> Cyclotomic {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Cyclotomic::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Cyclotomic>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &determinant(&minor);
        if j % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

/// C(n, k) over big integers; zero when 0 <= n < k.
pub fn binomial(n: &Int, k: u64) -> Int {
    if n < &Int::from(k) {
        return Int::zero();
    }
    let mut res = Int::one();
    for i in 0..k {
        res = res * (n - Int::from(i)) / Int::from(i + 1);
    }
    res
}

/// dim Sym^k of a d-dimensional space: C(d + k - 1, k).
pub fn sym_dim(d: &Int, k: u64) -> Int {
    binomial(&(d + Int::from(k) - Int::one()), k)
}

/// dim of the k-th exterior power of a d-dimensional space: C(d, k).
pub fn ext_dim(d: &Int, k: u64) -> Int {
    binomial(d, k)
}

pub fn sym_dim_u64(d: u64, k: u64) -> Int {
    sym_dim(&Int::from(d), k)
}

pub fn ext_dim_u64(d: u64, k: u64) -> Int {
    ext_dim(&Int::from(d), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{inner_product, norm};
    use crate::exactnum::rat;
    use crate::tablegen::cyclic_table;

    #[test]
    fn partitions_and_conjugates() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::all_of(4).len(), 5);
        assert_eq!(Partition::parse("2,1").unwrap().size(), 3);
        let empty = Partition::new(vec![]).unwrap();
        assert_eq!(empty.conjugate(), empty);
    }

    #[test]
    fn binomial_dims() {
        assert_eq!(sym_dim_u64(3, 4), Int::from(15));
        assert_eq!(ext_dim_u64(17, 0), Int::from(1));
        assert_eq!(sym_dim_u64(5, 4), Int::from(70));
        assert_eq!(ext_dim_u64(5, 4), Int::from(5));
        assert_eq!(ext_dim_u64(3, 7), Int::from(0));
        assert_eq!(binomial(&Int::from(10), 5), Int::from(252));
    }

    #[test]
    fn adams_on_cyclic_groups() {
        let t = cyclic_table(5).unwrap();
        let chi1 = ClassFunction::irreducible(&t, 1);
        let chi2 = ClassFunction::irreducible(&t, 2);
        assert_eq!(adams(&chi1, 1).unwrap(), chi1);
        assert_eq!(adams(&chi1, 2).unwrap(), chi2);
        let triv = ClassFunction::trivial(&t);
        assert_eq!(adams(&triv, 4).unwrap(), triv);
    }

    #[test]
    fn sym_power_zero_is_trivial() {
        let t = cyclic_table(6).unwrap();
        let f = ClassFunction::irreducible(&t, 1);
        assert_eq!(sym_power(&f, 0).unwrap(), ClassFunction::trivial(&t));
    }

    #[test]
    fn sym_degree_matches_binomial() {
        // degree of Sym^k at the identity is C(f(1)+k-1, k)
        let t = cyclic_table(3).unwrap();
        let f = ClassFunction::irreducible(&t, 1)
            .add(&ClassFunction::irreducible(&t, 2))
            .unwrap()
            .add(&ClassFunction::trivial(&t))
            .unwrap();
        for k in 0..=5 {
            let s = sym_power(&f, k).unwrap();
            assert_eq!(
                s.degree().to_rational().unwrap(),
                num::BigRational::from_integer(sym_dim_u64(3, k))
            );
            let e = ext_power(&f, k).unwrap();
            assert_eq!(
                e.degree().to_rational().unwrap(),
                num::BigRational::from_integer(ext_dim_u64(3, k))
            );
        }
    }

    #[test]
    fn ext_power_beyond_degree_vanishes() {
        let t = cyclic_table(4).unwrap();
        // a genuine 2-dimensional character
        let f = ClassFunction::irreducible(&t, 1)
            .add(&ClassFunction::irreducible(&t, 3))
            .unwrap();
        assert!(ext_power(&f, 3).unwrap().is_zero_function());
        // top exterior power is the determinant: a linear character
        let det = ext_power(&f, 2).unwrap();
        assert_eq!(det.degree().to_rational().unwrap(), rat(1));
        assert_eq!(norm(&det).unwrap(), rat(1));
    }

    #[test]
    fn newton_duality() {
        let t = cyclic_table(6).unwrap();
        let f = ClassFunction::irreducible(&t, 1)
            .add(&ClassFunction::irreducible(&t, 2))
            .unwrap()
            .add(&ClassFunction::irreducible(&t, 5))
            .unwrap();
        let k = 5;
        let hs = sym_powers(&f, k).unwrap();
        let es = ext_powers(&f, k).unwrap();
        for kk in 1..=k as usize {
            let mut acc = ClassFunction::zero(&t);
            for m in 0..=kk {
                let term = es[m].mul(&hs[kk - m]).unwrap();
                acc = if m % 2 == 0 { acc.add(&term).unwrap() } else { acc.sub(&term).unwrap() };
            }
            assert!(acc.is_zero_function(), "Newton identity fails at k={}", kk);
        }
    }

    #[test]
    fn schur_single_row_and_column() {
        let t = cyclic_table(6).unwrap();
        let f = ClassFunction::irreducible(&t, 1)
            .add(&ClassFunction::irreducible(&t, 2))
            .unwrap()
            .add(&ClassFunction::irreducible(&t, 4))
            .unwrap();
        for k in 1..=4u64 {
            let row = Partition::new(vec![k]).unwrap();
            assert_eq!(schur_functor(&f, &row).unwrap(), sym_power(&f, k).unwrap());
            let col = Partition::new(vec![1; k as usize]).unwrap();
            assert_eq!(schur_functor(&f, &col).unwrap(), ext_power(&f, k).unwrap());
        }
    }

    #[test]
    fn schur_hook_degree_on_2_dimensional() {
        let t = cyclic_table(4).unwrap();
        let f = ClassFunction::irreducible(&t, 1)
            .add(&ClassFunction::irreducible(&t, 3))
            .unwrap();
        let s21 = schur_functor(&f, &Partition::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(s21.degree().to_rational().unwrap(), rat(2));
    }

    #[test]
    fn sum_rule_on_cyclic() {
        let t = cyclic_table(5).unwrap();
        let f = ClassFunction::irreducible(&t, 1)
            .add(&ClassFunction::irreducible(&t, 2))
            .unwrap();
        let g = ClassFunction::irreducible(&t, 3);
        let sum = f.add(&g).unwrap();
        for k in 0..=4u64 {
            let lhs = sym_power(&sum, k).unwrap();
            let mut rhs = ClassFunction::zero(&t);
            for i in 0..=k {
                let term = sym_power(&f, i).unwrap().mul(&sym_power(&g, k - i).unwrap()).unwrap();
                rhs = rhs.add(&term).unwrap();
            }
            assert_eq!(lhs, rhs, "Sym sum rule fails at k={}", k);
        }
    }

    #[test]
    fn adams_requires_power_maps() {
        use crate::chartab::{CharacterTable, ConjugacyClass};
        use std::collections::BTreeMap;
        // no prime-2 map: computing f(g^2) on an order-3 class must fail
        let w = Cyclotomic::root_of_unity(3, 1).unwrap();
        let w2 = Cyclotomic::root_of_unity(3, 2).unwrap();
        let t = CharacterTable::new(
            "c3-nomap",
            3,
            vec![
                ConjugacyClass { name: "1a".into(), size: 1, element_order: 1 },
                ConjugacyClass { name: "3a".into(), size: 1, element_order: 3 },
                ConjugacyClass { name: "3b".into(), size: 1, element_order: 3 },
            ],
            BTreeMap::new(),
            vec![
                vec![Cyclotomic::one(), Cyclotomic::one(), Cyclotomic::one()],
                vec![Cyclotomic::one(), w.clone(), w2.clone()],
                vec![Cyclotomic::one(), w2, w],
            ],
        );
        let f = ClassFunction::irreducible(&t, 1);
        assert!(sym_power(&f, 2).is_err());
        // exponents that reduce to 0 or 1 modulo every order still work
        assert!(adams(&f, 3).is_ok());
        assert!(adams(&f, 4).is_ok());
    }

    #[test]
    fn inner_product_of_sym2_on_c2() {
        // Sym^2 of the sign character of C2 is trivial
        let t = cyclic_table(2).unwrap();
        let sgn = ClassFunction::irreducible(&t, 1);
        let s2 = sym_power(&sgn, 2).unwrap();
        assert_eq!(
            inner_product(&s2, &ClassFunction::trivial(&t)).unwrap(),
            Cyclotomic::one()
        );
    }
}
