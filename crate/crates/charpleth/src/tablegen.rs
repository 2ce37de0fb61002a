//! Programmatic character tables: cyclic groups, extraspecial groups,
//! and direct products.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::chartab::{CharacterTable, ConjugacyClass};
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;

/// Primes emitted with every generated table, so that Adams operations
/// psi^m stay available for every m the verification suites use.
const EMITTED_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The table of Z_n: n singleton classes, chi_j(k) = zeta_n^{jk}.
pub fn cyclic_table(n: u64) -> Result<Arc<CharacterTable>> {
    if n == 0 {
        return Err(Error::domain("cyclic group order must be positive"));
    }
    let classes = (0..n)
        .map(|k| ConjugacyClass {
            name: if k == 0 { "1a".to_string() } else { format!("g^{}", k) },
            size: 1,
            element_order: n / num::integer::gcd(n, k),
        })
        .collect();
    let mut power_maps = BTreeMap::new();
    let mut primes: Vec<u64> = EMITTED_PRIMES.to_vec();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if p * p > m {
            p = m;
        }
        if m % p == 0 {
            primes.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        power_maps.insert(p, (0..n).map(|k| (k * (p % n) % n) as usize).collect());
    }
    let irreducibles = (0..n)
        .map(|j| {
            (0..n)
                .map(|k| Cyclotomic::root_of_unity(n, (j * k % n) as i64))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable::new(
        format!("c{}", n),
        n,
        classes,
        power_maps,
        irreducibles,
    ))
}

/// Which extraspecial group of order p^{1+2n} to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtraspecialVariant {
    /// p odd, exponent p (the `+` type).
    OddExponentP,
    /// p = 2, central product of n dihedral groups of order 8.
    EvenPlus,
    /// p = 2, one quaternion factor.
    EvenMinus,
}

impl ExtraspecialVariant {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "odd_exponent_p" | "odd" => Ok(ExtraspecialVariant::OddExponentP),
            "even_plus" | "plus" => Ok(ExtraspecialVariant::EvenPlus),
            "even_minus" | "minus" => Ok(ExtraspecialVariant::EvenMinus),
            _ => Err(Error::parse(format!("unknown extraspecial variant {:?}", s))),
        }
    }
}

/// Enumerates F_p^{2n} vectors in lexicographic order.
fn vectors(p: u64, dim: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::with_capacity((p as usize).pow(dim as u32));
    let mut v = vec![0u64; dim];
    loop {
        out.push(v.clone());
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < p {
                break;
            }
            v[i] = 0;
        }
    }
}

fn vec_name(v: &[u64]) -> String {
    let body: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("v({})", body.join(","))
}

/// Quadratic form on F_2^{2n} whose value is the square of the lifted
/// element: split for the plus type, one anisotropic plane for minus.
fn even_q(v: &[u64], n: usize, minus: bool) -> u64 {
    let mut q = 0;
    for i in 0..n {
        q += v[i] * v[n + i];
    }
    if minus {
        q += v[0] * v[0] + v[n] * v[n];
    }
    q % 2
}

/// The character table of the extraspecial group of order p^{1+2n}.
///
/// Classes: p central classes followed by the p^{2n} - 1 noncentral
/// classes (cosets of the center), ordered lexicographically on the
/// coordinate vector of the image in P/Z.
pub fn extraspecial_table(
    p: u64,
    n: usize,
    variant: ExtraspecialVariant,
) -> Result<Arc<CharacterTable>> {
    if !is_prime(p) || n == 0 {
        return Err(Error::domain("extraspecial table needs a prime p and n >= 1"));
    }
    match variant {
        ExtraspecialVariant::OddExponentP if p == 2 => {
            return Err(Error::domain("odd_exponent_p variant requires p odd"));
        }
        ExtraspecialVariant::EvenPlus | ExtraspecialVariant::EvenMinus if p != 2 => {
            return Err(Error::domain("even variants require p = 2"));
        }
        _ => {}
    }
    let dim = 2 * n;
    let group_order = p.pow(1 + dim as u32);
    let vs = vectors(p, dim);
    let minus = variant == ExtraspecialVariant::EvenMinus;

    let mut classes = Vec::new();
    for j in 0..p {
        classes.push(ConjugacyClass {
            name: if j == 0 {
                "1a".to_string()
            } else if j == 1 {
                "z".to_string()
            } else {
                format!("z^{}", j)
            },
            size: 1,
            element_order: if j == 0 { 1 } else { p },
        });
    }
    for v in vs.iter().skip(1) {
        let element_order = if p == 2 {
            if even_q(v, n, minus) == 0 { 2 } else { 4 }
        } else {
            p
        };
        classes.push(ConjugacyClass { name: vec_name(v), size: p, element_order });
    }

    // class index helpers: central j -> j; noncentral v -> p - 1 + lex index
    let noncentral_index = |v: &[u64]| -> usize {
        let mut idx = 0usize;
        for &x in v {
            idx = idx * p as usize + x as usize;
        }
        // idx is the lex rank of v among all vectors; identity coset is rank 0
        p as usize - 1 + idx
    };

    let mut power_maps = BTreeMap::new();
    let mut primes: Vec<u64> = EMITTED_PRIMES.to_vec();
    primes.push(p);
    primes.sort_unstable();
    primes.dedup();
    for r in primes {
        let mut map = vec![0usize; classes.len()];
        for j in 0..p {
            map[j as usize] = (j * r % p) as usize;
        }
        for v in vs.iter().skip(1) {
            let c = noncentral_index(v);
            if p == 2 {
                if r == 2 {
                    // (v, e)^2 = z^{Q(v)}
                    map[c] = even_q(v, n, minus) as usize;
                } else {
                    // odd powers stay in the coset of v
                    map[c] = c;
                }
            } else if r % p == 0 {
                // exponent p group
                map[c] = 0;
            } else {
                let rv: Vec<u64> = v.iter().map(|&x| x * r % p).collect();
                map[c] = noncentral_index(&rv);
            }
        }
        power_maps.insert(r, map);
    }

    let mut irreducibles = Vec::new();
    // linear characters inflated from P/Z, indexed by mu in F_p^{2n}
    for mu in &vs {
        let mut row = Vec::with_capacity(classes.len());
        for _ in 0..p {
            row.push(Cyclotomic::one());
        }
        for v in vs.iter().skip(1) {
            let dot: u64 = mu.iter().zip(v).map(|(a, b)| a * b).sum();
            row.push(Cyclotomic::root_of_unity(p, (dot % p) as i64)?);
        }
        irreducibles.push(row);
    }
    // faithful characters of degree p^n, vanishing off the center
    let degree = Cyclotomic::from_int(p.pow(n as u32) as i64);
    if p == 2 {
        let mut row = vec![degree.clone(), -&degree];
        row.extend(std::iter::repeat_with(Cyclotomic::zero).take(vs.len() - 1));
        irreducibles.push(row);
    } else {
        for t in 1..p {
            let mut row = Vec::with_capacity(classes.len());
            for j in 0..p {
                row.push(&degree * &Cyclotomic::root_of_unity(p, (j * t % p) as i64)?);
            }
            row.extend(std::iter::repeat_with(Cyclotomic::zero).take(vs.len() - 1));
            irreducibles.push(row);
        }
    }

    let variant_tag = match variant {
        ExtraspecialVariant::OddExponentP => "+",
        ExtraspecialVariant::EvenPlus => "+",
        ExtraspecialVariant::EvenMinus => "-",
    };
    Ok(CharacterTable::new(
        format!("{}^(1+{}){}", p, dim, variant_tag),
        group_order,
        classes,
        power_maps,
        irreducibles,
    ))
}

/// Classes are pairs (a-major), sizes multiply, irreducibles are outer
/// products, power maps act componentwise.
pub fn direct_product_table(
    a: &Arc<CharacterTable>,
    b: &Arc<CharacterTable>,
) -> Result<Arc<CharacterTable>> {
    let ka = a.class_count();
    let kb = b.class_count();
    let mut classes = Vec::with_capacity(ka * kb);
    for ca in &a.classes {
        for cb in &b.classes {
            classes.push(ConjugacyClass {
                name: format!("{}.{}", ca.name, cb.name),
                size: ca.size * cb.size,
                element_order: num::integer::lcm(ca.element_order, cb.element_order),
            });
        }
    }
    let mut power_maps = BTreeMap::new();
    for (&p, map_a) in &a.power_maps {
        if let Some(map_b) = b.power_maps.get(&p) {
            let mut map = Vec::with_capacity(ka * kb);
            for ia in 0..ka {
                for ib in 0..kb {
                    map.push(map_a[ia] * kb + map_b[ib]);
                }
            }
            power_maps.insert(p, map);
        }
    }
    let mut irreducibles = Vec::with_capacity(ka * kb);
    for ia in 0..ka {
        for ib in 0..kb {
            let row_a = a.irreducible_values(ia);
            let row_b = b.irreducible_values(ib);
            let mut row = Vec::with_capacity(ka * kb);
            for va in row_a {
                for vb in row_b {
                    row.push(va * vb);
                }
            }
            irreducibles.push(row);
        }
    }
    Ok(CharacterTable::new(
        format!("{}x{}", a.name, b.name),
        a.group_order * b.group_order,
        classes,
        power_maps,
        irreducibles,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn cyclic_tables_validate() {
        for n in 1..=12 {
            let t = cyclic_table(n).unwrap();
            assert!(t.validate().is_pass(), "c{} fails validation", n);
            assert_eq!(t.class_count(), n as usize);
        }
        assert!(cyclic_table(0).is_err());
    }

    #[test]
    fn cyclic_two_is_sign_table() {
        let t = cyclic_table(2).unwrap();
        assert_eq!(t.irreducible_values(1)[1], Cyclotomic::from_int(-1));
    }

    #[test]
    fn cyclic_five_has_five_linear_characters() {
        let t = cyclic_table(5).unwrap();
        assert!(t.validate().is_pass());
        for i in 0..5 {
            assert_eq!(t.irreducible_values(i)[0].to_rational().unwrap(), rat(1));
        }
    }

    #[test]
    fn extraspecial_27_exponent_3() {
        let t = extraspecial_table(3, 1, ExtraspecialVariant::OddExponentP).unwrap();
        assert_eq!(t.group_order, 27);
        assert_eq!(t.class_count(), 11);
        assert!(t.validate().is_pass());
        let faithful: Vec<usize> = (0..t.irreducible_count())
            .filter(|&i| t.irreducible_values(i)[0].to_rational().unwrap() == rat(3))
            .collect();
        assert_eq!(faithful.len(), 2);
        // faithful characters vanish on all noncentral classes
        for &i in &faithful {
            for c in 3..t.class_count() {
                assert!(t.irreducible_values(i)[c].is_zero());
            }
        }
    }

    #[test]
    fn extraspecial_dihedral_8() {
        let t = extraspecial_table(2, 1, ExtraspecialVariant::EvenPlus).unwrap();
        assert_eq!(t.group_order, 8);
        assert_eq!(t.class_count(), 5);
        assert!(t.validate().is_pass());
        // D8: a unique involution class counted centrally plus two of size 2
        let order4: Vec<_> =
            t.classes.iter().filter(|c| c.element_order == 4).collect();
        assert_eq!(order4.len(), 1);
        let q8 = extraspecial_table(2, 1, ExtraspecialVariant::EvenMinus).unwrap();
        assert!(q8.validate().is_pass());
        let order4q: Vec<_> =
            q8.classes.iter().filter(|c| c.element_order == 4).collect();
        assert_eq!(order4q.len(), 3);
    }

    #[test]
    fn extraspecial_32_plus() {
        let t = extraspecial_table(2, 2, ExtraspecialVariant::EvenPlus).unwrap();
        assert_eq!(t.group_order, 32);
        assert_eq!(t.class_count(), 17);
        assert!(t.validate().is_pass());
        let faithful: Vec<usize> = (0..t.irreducible_count())
            .filter(|&i| t.irreducible_values(i)[0].to_rational().unwrap() == rat(4))
            .collect();
        assert_eq!(faithful.len(), 1);
        assert_eq!(
            t.irreducible_values(faithful[0])[1],
            Cyclotomic::from_int(-4)
        );
    }

    #[test]
    fn extraspecial_sum_of_squares() {
        for (p, n, variant) in [
            (3u64, 1usize, ExtraspecialVariant::OddExponentP),
            (3, 2, ExtraspecialVariant::OddExponentP),
            (5, 1, ExtraspecialVariant::OddExponentP),
            (2, 2, ExtraspecialVariant::EvenMinus),
            (2, 3, ExtraspecialVariant::EvenPlus),
        ] {
            let t = extraspecial_table(p, n, variant).unwrap();
            assert!(t.validate().is_pass(), "{} fails validation", t.name);
            let degrees: Vec<u64> = (0..t.irreducible_count())
                .map(|i| {
                    let d = t.irreducible_values(i)[0].to_integer().unwrap();
                    d.try_into().unwrap()
                })
                .collect();
            let sum: u64 = degrees.iter().map(|d| d * d).sum();
            assert_eq!(sum, t.group_order);
            // exactly p - 1 (odd p) or 1 (p = 2) irreducibles of degree p^n
            let faithful_degree = p.pow(n as u32);
            let faithful = degrees.iter().filter(|&&d| d == faithful_degree).count() as u64;
            assert_eq!(faithful, if p == 2 { 1 } else { p - 1 }, "{}", t.name);
        }
    }

    #[test]
    fn extraspecial_27_matches_unitriangular_brute_force() {
        // the group of upper unitriangular 3x3 matrices over F_3 is the
        // extraspecial group of order 27 and exponent 3; enumerate it
        // and compare the class statistics with the generated table
        type M = [u64; 3]; // (a, b, c) for rows [[1,a,c],[0,1,b],[0,0,1]]
        let mul = |x: &M, y: &M| -> M {
            [(x[0] + y[0]) % 3, (x[1] + y[1]) % 3, (x[2] + y[2] + x[0] * y[1]) % 3]
        };
        let inv = |x: &M| -> M {
            // (I + N)^-1 = I - N + N^2, and N^2 has the single entry ab
            [(3 - x[0]) % 3, (3 - x[1]) % 3, (3 - x[2] + x[0] * x[1]) % 3]
        };
        let mut elements = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    elements.push([a, b, c]);
                }
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut class_stats = Vec::new();
        for g in &elements {
            if seen.contains(g) {
                continue;
            }
            let class: std::collections::BTreeSet<M> = elements
                .iter()
                .map(|x| mul(&mul(x, g), &inv(x)))
                .collect();
            for m in &class {
                seen.insert(*m);
            }
            let order = {
                let mut cur = *g;
                let mut o = 1;
                while cur != [0, 0, 0] {
                    cur = mul(&cur, g);
                    o += 1;
                }
                o
            };
            class_stats.push((order, class.len() as u64));
        }
        class_stats.sort_unstable();
        let t = extraspecial_table(3, 1, ExtraspecialVariant::OddExponentP).unwrap();
        let mut table_stats: Vec<(u64, u64)> = t
            .classes
            .iter()
            .map(|c| (c.element_order, c.size))
            .collect();
        table_stats.sort_unstable();
        assert_eq!(class_stats, table_stats);
    }

    #[test]
    fn extraspecial_rejects_bad_variant() {
        assert!(extraspecial_table(2, 1, ExtraspecialVariant::OddExponentP).is_err());
        assert!(extraspecial_table(3, 1, ExtraspecialVariant::EvenPlus).is_err());
        assert!(extraspecial_table(4, 1, ExtraspecialVariant::OddExponentP).is_err());
    }

    #[test]
    fn product_with_trivial_is_identity() {
        let a = cyclic_table(6).unwrap();
        let triv = cyclic_table(1).unwrap();
        let prod = direct_product_table(&a, &triv).unwrap();
        assert_eq!(prod.group_order, a.group_order);
        assert_eq!(prod.class_count(), a.class_count());
        for i in 0..a.irreducible_count() {
            assert_eq!(prod.irreducible_values(i), a.irreducible_values(i));
        }
    }

    #[test]
    fn klein_four_as_product() {
        let c2 = cyclic_table(2).unwrap();
        let v4 = direct_product_table(&c2, &c2).unwrap();
        assert_eq!(v4.group_order, 4);
        assert_eq!(v4.class_count(), 4);
        assert!(v4.validate().is_pass());
        // every nontrivial character is real of order 2
        for i in 1..4 {
            for c in 0..4 {
                let v = v4.irreducible_values(i)[c].to_rational().unwrap();
                assert!(v == rat(1) || v == rat(-1));
            }
        }
    }

    #[test]
    fn product_class_count_multiplies() {
        let a = cyclic_table(3).unwrap();
        let b = extraspecial_table(2, 1, ExtraspecialVariant::EvenPlus).unwrap();
        let prod = direct_product_table(&a, &b).unwrap();
        assert_eq!(prod.class_count(), 15);
        assert!(prod.validate().is_pass());
    }
}
