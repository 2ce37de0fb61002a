//! Regenerates the committed character-table fixtures.
//!
//! For each group we enumerate the elements of an explicit matrix or
//! permutation realization, compute conjugacy classes and the class
//! multiplication coefficients, run Dixon's algorithm over a prime field
//! F_P with P = 1 (mod exp G) to get the central characters, and lift
//! the character values into exact cyclotomics.  Every generated table
//! must pass the library's full orthogonality validation before it is
//! written.
//!
//! Run from the workspace root:
//!
//!     cargo run -p fixturegen --release

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;

use charpleth::chartab::{table_to_json, CharacterTable, ConjugacyClass, FusionMap};
use charpleth::exactnum::{Cyclotomic, Rational};

// ---------------------------------------------------------------------
// concrete groups
// ---------------------------------------------------------------------

trait ConcreteGroup {
    type El: Clone + Eq + std::hash::Hash + Ord;
    fn id(&self) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn generators(&self) -> Vec<Self::El>;
}

struct PermGroup {
    degree: usize,
    gens: Vec<Vec<u8>>,
}

impl ConcreteGroup for PermGroup {
    type El = Vec<u8>;
    fn id(&self) -> Vec<u8> {
        (0..self.degree as u8).collect()
    }
    fn mul(&self, a: &Vec<u8>, b: &Vec<u8>) -> Vec<u8> {
        // (a * b)(x) = a(b(x))
        b.iter().map(|&x| a[x as usize]).collect()
    }
    fn generators(&self) -> Vec<Vec<u8>> {
        self.gens.clone()
    }
}

/// n x n matrices over F_q, stored row-major.
struct MatGroup {
    n: usize,
    q: u8,
    gens: Vec<Vec<u8>>,
}

impl ConcreteGroup for MatGroup {
    type El = Vec<u8>;
    fn id(&self) -> Vec<u8> {
        let mut m = vec![0u8; self.n * self.n];
        for i in 0..self.n {
            m[i * self.n + i] = 1;
        }
        m
    }
    fn mul(&self, a: &Vec<u8>, b: &Vec<u8>) -> Vec<u8> {
        let n = self.n;
        let q = self.q as u16;
        let mut out = vec![0u8; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = a[i * n + k] as u16;
                if aik == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = (out[i * n + j] as u16 + aik * b[k * n + j] as u16) % q;
                    out[i * n + j] = v as u8;
                }
            }
        }
        out
    }
    fn generators(&self) -> Vec<Vec<u8>> {
        self.gens.clone()
    }
}

/// Symplectic transvection x -> x + w(x, v) v on F_3^4 with
/// w(x, y) = x1 y3 + x2 y4 - x3 y1 - x4 y2, as a matrix.
fn transvection_f3(v: [u8; 4]) -> Vec<u8> {
    let jv = [v[2] as i16, v[3] as i16, -(v[0] as i16), -(v[1] as i16)];
    let mut m = vec![0u8; 16];
    for i in 0..4 {
        for j in 0..4 {
            let mut val = if i == j { 1i16 } else { 0 };
            val += v[i] as i16 * jv[j];
            m[i * 4 + j] = val.rem_euclid(3) as u8;
        }
    }
    m
}

// ---------------------------------------------------------------------
// enumeration and class structure
// ---------------------------------------------------------------------

struct GroupData<El> {
    elements: Vec<El>,
    index: HashMap<El, usize>,
    /// class index of each element
    class_of: Vec<usize>,
    /// representative element index per class (smallest enumeration index)
    reps: Vec<usize>,
    sizes: Vec<u64>,
    orders: Vec<u64>,
    inverse: Vec<usize>,
}

fn enumerate<G: ConcreteGroup>(g: &G) -> GroupData<G::El> {
    let mut elements = vec![g.id()];
    let mut index = HashMap::new();
    index.insert(g.id(), 0usize);
    let gens = g.generators();
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        let x = elements[i].clone();
        for gen in &gens {
            let y = g.mul(&x, gen);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elements.len());
                frontier.push(elements.len());
                elements.push(y);
            }
        }
    }
    let n = elements.len();

    // inverses: walk powers of x until the identity comes around
    let mut inverse = vec![usize::MAX; n];
    for i in 0..n {
        let mut prev = 0usize;
        let mut cur = i;
        loop {
            if cur == 0 {
                inverse[i] = prev;
                break;
            }
            prev = cur;
            cur = index[&g.mul(&elements[cur], &elements[i])];
        }
    }

    // conjugacy classes: orbit closure under conjugation by generators
    let mut class_of = vec![usize::MAX; n];
    let mut raw_classes: Vec<Vec<usize>> = Vec::new();
    let gen_pairs: Vec<(G::El, G::El)> = gens
        .iter()
        .map(|s| (s.clone(), elements[inverse[index[s]]].clone()))
        .collect();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let cid = raw_classes.len();
        let mut members = vec![i];
        class_of[i] = cid;
        let mut stack = vec![i];
        while let Some(j) = stack.pop() {
            for (s, s_inv) in &gen_pairs {
                let conj = g.mul(&g.mul(s_inv, &elements[j]), s);
                let ci = index[&conj];
                if class_of[ci] == usize::MAX {
                    class_of[ci] = cid;
                    members.push(ci);
                    stack.push(ci);
                }
            }
        }
        raw_classes.push(members);
    }

    let order_of = |i: usize| -> u64 {
        let mut cur = i;
        let mut ord = 1u64;
        while cur != 0 {
            cur = index[&g.mul(&elements[cur], &elements[i])];
            ord += 1;
        }
        ord
    };

    // canonical class order: identity, then (element order, size, rep)
    let mut class_meta: Vec<(usize, u64, u64)> = raw_classes
        .iter()
        .map(|members| {
            let rep = *members.iter().min().unwrap();
            (rep, order_of(rep), members.len() as u64)
        })
        .collect();
    let mut perm: Vec<usize> = (0..raw_classes.len()).collect();
    perm.sort_by_key(|&c| {
        let (rep, ord, size) = class_meta[c];
        (ord, size, rep)
    });
    let mut new_of_old = vec![0usize; raw_classes.len()];
    for (new, &old) in perm.iter().enumerate() {
        new_of_old[old] = new;
    }
    for c in class_of.iter_mut() {
        *c = new_of_old[*c];
    }
    class_meta = perm.iter().map(|&old| class_meta[old]).collect();
    let reps: Vec<usize> = class_meta.iter().map(|&(rep, _, _)| rep).collect();
    let orders: Vec<u64> = class_meta.iter().map(|&(_, ord, _)| ord).collect();
    let sizes: Vec<u64> = class_meta.iter().map(|&(_, _, size)| size).collect();

    GroupData { elements, index, class_of, reps, sizes, orders, inverse }
}

impl<El: Clone + Eq + std::hash::Hash + Ord> GroupData<El> {
    fn class_count(&self) -> usize {
        self.reps.len()
    }

    fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    fn power_of_rep<G: ConcreteGroup<El = El>>(&self, g: &G, class: usize, e: u64) -> usize {
        let rep = &self.elements[self.reps[class]];
        let mut cur = g.id();
        for _ in 0..e {
            cur = g.mul(&cur, rep);
        }
        self.class_of[self.index[&cur]]
    }

    fn inverse_class(&self, class: usize) -> usize {
        self.class_of[self.inverse[self.reps[class]]]
    }

    /// `a[i][j][k]`: the number of pairs (x, y) in C_i x C_j with
    /// x y = z_k for the fixed representative z_k.
    fn class_constants<G: ConcreteGroup<El = El>>(&self, g: &G) -> Vec<Vec<Vec<u64>>> {
        let k = self.class_count();
        let mut a = vec![vec![vec![0u64; k]; k]; k];
        for target in 0..k {
            let z = &self.elements[self.reps[target]];
            for (xi, _) in self.elements.iter().enumerate() {
                let i = self.class_of[xi];
                let y = g.mul(&self.elements[self.inverse[xi]], z);
                let j = self.class_of[self.index[&y]];
                a[i][j][target] += 1;
            }
        }
        a
    }
}

// ---------------------------------------------------------------------
// arithmetic mod P
// ---------------------------------------------------------------------

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Kernel basis of a k x k matrix over F_p.
fn kernel(mat: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let k = mat.len();
    let mut m: Vec<Vec<u64>> = mat.to_vec();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let mut pivot = None;
        for r in row..k {
            if m[r][col] != 0 {
                pivot = Some(r);
                break;
            }
        }
        let Some(pr) = pivot else { continue };
        m.swap(row, pr);
        let inv = inv_mod(m[row][col], p);
        for c in col..k {
            m[row][c] = mul_mod(m[row][c], inv, p);
        }
        for r in 0..k {
            if r != row && m[r][col] != 0 {
                let f = m[r][col];
                for c in col..k {
                    let sub = mul_mod(f, m[row][c], p);
                    m[r][c] = (m[r][c] + p - sub) % p;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == k {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..k).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![0u64; k];
        v[fc] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = (p - m[r][fc]) % p;
        }
        basis.push(v);
    }
    basis
}

fn mat_vec(mat: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    mat.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &b)| (acc + mul_mod(a, b, p)) % p)
        })
        .collect()
}

// ---------------------------------------------------------------------
// Dixon's algorithm
// ---------------------------------------------------------------------

struct DixonOutput {
    degrees: Vec<u64>,
    values_mod_p: Vec<Vec<u64>>,
    p: u64,
}

fn dixon<G: ConcreteGroup>(g: &G, data: &GroupData<G::El>) -> DixonOutput {
    let k = data.class_count();
    let exponent = data.orders.iter().fold(1u64, |acc, &o| num::integer::lcm(acc, o));
    let g_order = data.order();
    let isqrt = (g_order as f64).sqrt() as u64 + 1;
    let mut p = exponent + 1;
    while !(is_prime(p) && p > 2 * isqrt + 1) {
        p += exponent;
    }

    let a = data.class_constants(g);
    let matrices: Vec<Vec<Vec<u64>>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| (0..k).map(|t| a[i][j][t] % p).collect())
                .collect()
        })
        .collect();

    // split the class algebra with a deterministic combination of the
    // class matrices; retry with new coefficients if eigenvalues collide
    let mut seed = 0x243F_6A88_85A3_08D3u64;
    let eigenvectors = 'outer: loop {
        let mut coeffs = Vec::with_capacity(k);
        for _ in 0..k {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            coeffs.push(seed >> 11);
        }
        let mut combo = vec![vec![0u64; k]; k];
        for (i, m) in matrices.iter().enumerate() {
            let c = coeffs[i] % p;
            for r in 0..k {
                for t in 0..k {
                    combo[r][t] = (combo[r][t] + mul_mod(c, m[r][t], p)) % p;
                }
            }
        }
        let mut found: Vec<Vec<u64>> = Vec::new();
        for lambda in 0..p {
            let mut shifted = combo.clone();
            for r in 0..k {
                shifted[r][r] = (shifted[r][r] + p - lambda) % p;
            }
            let ker = kernel(&shifted, p);
            if ker.len() > 1 {
                continue 'outer; // eigenvalue collision, new combination
            }
            if let Some(v) = ker.into_iter().next() {
                found.push(v);
                if found.len() == k {
                    break;
                }
            }
        }
        if found.len() == k {
            break found;
        }
    };

    // normalize so the identity-class coordinate is 1; then the vector
    // is omega = (|C_i| chi(g_i) / chi(1))_i and the eigenvalue of M_i
    // on it is omega_i
    let mut degrees = Vec::with_capacity(k);
    let mut values = Vec::with_capacity(k);
    for v in &eigenvectors {
        assert!(v[0] != 0, "eigenvector vanishes at the identity class");
        let inv = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| mul_mod(x, inv, p)).collect();
        for (i, m) in matrices.iter().enumerate() {
            let mv = mat_vec(m, &omega, p);
            let lam = mv[0];
            assert_eq!(
                mv,
                omega.iter().map(|&x| mul_mod(lam, x, p)).collect::<Vec<_>>(),
                "not a common eigenvector of class matrix {}",
                i
            );
            debug_assert_eq!(lam, omega[i]);
        }
        // degrees: d^2 = |G| / sum_i omega_i omega_{i*} / |C_i|
        let mut s = 0u64;
        for i in 0..k {
            let term = mul_mod(
                mul_mod(omega[i], omega[data.inverse_class(i)], p),
                inv_mod(data.sizes[i] % p, p),
                p,
            );
            s = (s + term) % p;
        }
        let d2 = mul_mod(g_order % p, inv_mod(s, p), p);
        let mut degree = 0u64;
        for d in 1..=isqrt {
            if mul_mod(d, d, p) == d2 {
                degree = d;
                break;
            }
        }
        assert!(degree > 0, "no small square root for a character degree");
        let row: Vec<u64> = (0..k)
            .map(|i| {
                mul_mod(
                    mul_mod(degree, omega[i], p),
                    inv_mod(data.sizes[i] % p, p),
                    p,
                )
            })
            .collect();
        degrees.push(degree);
        values.push(row);
    }
    DixonOutput { degrees, values_mod_p: values, p }
}

/// Lifts the mod-P character values into exact cyclotomics: c_j is the
/// multiplicity of the eigenvalue zeta_m^j of the representative, read
/// off by a discrete Fourier transform over F_P.
fn lift_character<G: ConcreteGroup>(
    g: &G,
    data: &GroupData<G::El>,
    out: &DixonOutput,
    chi: usize,
    g0: u64,
) -> Vec<Cyclotomic> {
    let p = out.p;
    let degree = out.degrees[chi];
    let k = data.class_count();
    let mut row = Vec::with_capacity(k);
    for c in 0..k {
        let m = data.orders[c];
        let z_inv = inv_mod(pow_mod(g0, (p - 1) / m, p), p);
        let m_inv = inv_mod(m % p, p);
        let chi_pow: Vec<u64> = (0..m)
            .map(|t| out.values_mod_p[chi][data.power_of_rep(g, c, t)])
            .collect();
        let mut terms = Vec::new();
        for j in 0..m {
            let mut s = 0u64;
            for (t, &v) in chi_pow.iter().enumerate() {
                s = (s + mul_mod(v, pow_mod(z_inv, j * t as u64, p), p)) % p;
            }
            let cj = mul_mod(s, m_inv, p);
            assert!(
                cj <= degree,
                "eigenvalue multiplicity {} exceeds degree {}",
                cj,
                degree
            );
            if cj > 0 {
                terms.push((j, Rational::from_integer(num::BigInt::from(cj))));
            }
        }
        row.push(Cyclotomic::from_terms(m, terms));
    }
    row
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut f = 2;
    while f * f <= m {
        if m % f == 0 {
            factors.push(f);
            while m % f == 0 {
                m /= f;
            }
        }
        f += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&cand| factors.iter().all(|&q| pow_mod(cand, (p - 1) / q, p) != 1))
        .expect("primitive root mod P")
}

// ---------------------------------------------------------------------
// table assembly
// ---------------------------------------------------------------------

const FIXTURE_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

fn build_table<G: ConcreteGroup>(
    name: &str,
    g: &G,
    data: &GroupData<G::El>,
) -> std::sync::Arc<CharacterTable> {
    let k = data.class_count();
    let out = dixon(g, data);
    let g0 = primitive_root(out.p);
    let mut rows: Vec<Vec<Cyclotomic>> = (0..k)
        .map(|chi| lift_character(g, data, &out, chi, g0))
        .collect();
    rows.sort_by(|a, b| {
        let da = a[0].to_rational().unwrap();
        let db = b[0].to_rational().unwrap();
        da.cmp(&db).then_with(|| {
            for (x, y) in a.iter().zip(b) {
                let c = x.canonical_cmp(y);
                if c != std::cmp::Ordering::Equal {
                    return c;
                }
            }
            std::cmp::Ordering::Equal
        })
    });

    let classes: Vec<ConjugacyClass> = (0..k)
        .map(|c| ConjugacyClass {
            name: format!("{}{}", data.orders[c], class_letter(data, c)),
            size: data.sizes[c],
            element_order: data.orders[c],
        })
        .collect();
    let mut power_maps = BTreeMap::new();
    for r in FIXTURE_PRIMES {
        let map: Vec<usize> = (0..k).map(|c| data.power_of_rep(g, c, r)).collect();
        power_maps.insert(r, map);
    }
    let table = CharacterTable::new(name, data.order(), classes, power_maps, rows);
    let report = table.validate();
    assert!(
        report.is_pass(),
        "generated table {} fails validation: {:?}",
        name,
        report.violations
    );
    table
}

/// Classes of the same element order are lettered a, b, c... in order.
fn class_letter<El: Clone + Eq + std::hash::Hash + Ord>(data: &GroupData<El>, c: usize) -> String {
    let nth = (0..c).filter(|&i| data.orders[i] == data.orders[c]).count();
    ((b'a' + nth as u8) as char).to_string()
}

fn fixture_path(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../charpleth/fixtures")
        .join(file)
}

fn write_fixture(file: &str, contents: &str) {
    let path = fixture_path(file);
    std::fs::write(&path, contents).unwrap_or_else(|e| panic!("write {:?}: {}", path, e));
    println!("wrote {}", path.display());
}

fn main() {
    let s5 = PermGroup {
        degree: 5,
        gens: vec![vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]],
    };
    let s5_data = enumerate(&s5);
    assert_eq!(s5_data.order(), 120);
    let s5_table = build_table("s5", &s5, &s5_data);

    let a5 = PermGroup {
        degree: 5,
        gens: vec![vec![1, 2, 0, 3, 4], vec![1, 2, 3, 4, 0]],
    };
    let a5_data = enumerate(&a5);
    assert_eq!(a5_data.order(), 60);
    let a5_table = build_table("a5", &a5, &a5_data);

    // class fusion: every A5 class representative is a permutation that
    // also lives in the S5 enumeration
    let fusion_map: Vec<usize> = (0..a5_data.class_count())
        .map(|c| {
            let rep = &a5_data.elements[a5_data.reps[c]];
            s5_data.class_of[s5_data.index[rep]]
        })
        .collect();
    let fusion = FusionMap::new(a5_table.clone(), s5_table.clone(), fusion_map)
        .expect("a5 -> s5 fusion must check out");

    let sl25 = MatGroup {
        n: 2,
        q: 5,
        gens: vec![vec![1, 1, 0, 1], vec![0, 4, 1, 0]],
    };
    let sl25_data = enumerate(&sl25);
    assert_eq!(sl25_data.order(), 120);
    let sl25_table = build_table("sl2_5", &sl25, &sl25_data);

    let sp43 = MatGroup {
        n: 4,
        q: 3,
        gens: vec![
            transvection_f3([1, 0, 0, 0]),
            transvection_f3([0, 1, 0, 0]),
            transvection_f3([0, 0, 1, 0]),
            transvection_f3([0, 0, 0, 1]),
            transvection_f3([1, 1, 1, 1]),
            transvection_f3([1, 2, 0, 1]),
        ],
    };
    let sp43_data = enumerate(&sp43);
    assert_eq!(sp43_data.order(), 51840, "transvections must generate Sp4(3)");
    let sp43_table = build_table("sp4_3", &sp43, &sp43_data);
    println!(
        "sp4_3: {} classes, exponent {}",
        sp43_data.class_count(),
        sp43_data
            .orders
            .iter()
            .fold(1u64, |acc, &o| num::integer::lcm(acc, o))
    );

    write_fixture("s5.json", &table_to_json(&s5_table));
    write_fixture("a5.json", &table_to_json(&a5_table));
    write_fixture(
        "a5_s5_fusion.json",
        &charpleth::chartab::fusion_to_json(&fusion),
    );
    write_fixture("sl2_5.json", &table_to_json(&sl25_table));
    write_fixture("sp4_3.json", &table_to_json(&sp43_table));
}
