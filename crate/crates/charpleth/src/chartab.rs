//! Character tables, class functions, power maps and fusion maps.
//!
//! A [`CharacterTable`] is immutable once built and shared via `Arc`;
//! class functions carry a handle to their table so that cross-table
//! operations can be rejected.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Int, Rational};
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub name: String,
    pub size: u64,
    pub element_order: u64,
}

/// Group order, conjugacy data, prime power maps and the full list of
/// irreducible characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub name: String,
    pub group_order: u64,
    pub classes: Vec<ConjugacyClass>,
    /// prime p -> image of each class under g -> g^p
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    irreducibles: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    pub fn new(
        name: impl Into<String>,
        group_order: u64,
        classes: Vec<ConjugacyClass>,
        power_maps: BTreeMap<u64, Vec<usize>>,
        irreducibles: Vec<Vec<Cyclotomic>>,
    ) -> Arc<Self> {
        Arc::new(CharacterTable {
            name: name.into(),
            group_order,
            classes,
            power_maps,
            irreducibles,
        })
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn irreducible_count(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn irreducible_values(&self, i: usize) -> &[Cyclotomic] {
        &self.irreducibles[i]
    }

    /// Index of the class of g^m for g in class `c`.
    ///
    /// The exponent is reduced modulo the element order, then the stored
    /// prime maps are composed over its factorization.
    pub fn power_class(&self, c: usize, m: i64) -> Result<usize> {
        let ord = self.classes[c].element_order as i64;
        let mut r = m.rem_euclid(ord) as u64;
        if r == 0 {
            return Ok(0);
        }
        let mut class = c;
        let mut p = 2u64;
        while r > 1 {
            if p * p > r {
                p = r;
            }
            while r % p == 0 {
                let map = self.power_maps.get(&p).ok_or_else(|| {
                    Error::domain(format!(
                        "table {} has no power map for prime {}",
                        self.name, p
                    ))
                })?;
                class = map[class];
                r /= p;
            }
            p += 1;
        }
        Ok(class)
    }

    /// Checks every table invariant; violations come back as a report
    /// rather than an error.
    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();
        let k = self.class_count();
        if k == 0 {
            return ValidationReport { violations: vec!["table has no classes".into()] };
        }
        if self.classes[0].size != 1 || self.classes[0].element_order != 1 {
            v.push("class 0 is not the identity class".to_string());
        }
        let total: u64 = self.classes.iter().map(|c| c.size).sum();
        if total != self.group_order {
            v.push(format!(
                "class sizes sum to {} but the group order is {}",
                total, self.group_order
            ));
        }
        for (i, c) in self.classes.iter().enumerate() {
            if c.size == 0 || self.group_order % c.size != 0 {
                v.push(format!("class {} size {} does not divide |G|", i, c.size));
            }
            if c.element_order == 0 || self.group_order % c.element_order != 0 {
                v.push(format!(
                    "class {} element order {} does not divide |G|",
                    i, c.element_order
                ));
            }
        }
        if self.irreducibles.len() != k {
            v.push(format!(
                "{} irreducibles for {} classes",
                self.irreducibles.len(),
                k
            ));
        }
        for (i, row) in self.irreducibles.iter().enumerate() {
            if row.len() != k {
                v.push(format!("irreducible {} has {} values, expected {}", i, row.len(), k));
            }
        }
        if !v.is_empty() {
            // structure is too broken for the arithmetic checks
            return ValidationReport { violations: v };
        }
        for row in &self.irreducibles {
            match row[0].to_rational() {
                Ok(d) if d.is_integer() && d.is_positive() => {}
                _ => v.push(format!("character degree {} is not a positive integer", row[0])),
            }
        }
        self.validate_power_maps(&mut v);
        self.validate_orthogonality(&mut v);
        ValidationReport { violations: v }
    }

    fn validate_power_maps(&self, v: &mut Vec<String>) {
        let mut needed: BTreeSet<u64> = BTreeSet::new();
        for c in &self.classes {
            let mut o = c.element_order;
            let mut p = 2;
            while o > 1 {
                if p * p > o {
                    p = o;
                }
                if o % p == 0 {
                    needed.insert(p);
                    while o % p == 0 {
                        o /= p;
                    }
                }
                p += 1;
            }
        }
        for p in needed {
            if !self.power_maps.contains_key(&p) {
                v.push(format!("missing power map for prime {} dividing an element order", p));
            }
        }
        for (&p, map) in &self.power_maps {
            if map.len() != self.class_count() {
                v.push(format!("power map for {} has wrong length", p));
                continue;
            }
            if map[0] != 0 {
                v.push(format!("power map for {} does not fix the identity class", p));
            }
            for (c, &img) in map.iter().enumerate() {
                if img >= self.class_count() {
                    v.push(format!("power map for {} sends class {} out of range", p, c));
                    continue;
                }
                let ord = self.classes[c].element_order;
                let expected = ord / num::integer::gcd(ord, p);
                if self.classes[img].element_order != expected {
                    v.push(format!(
                        "power map for {} sends class {} (order {}) to class {} (order {}), expected order {}",
                        p, c, ord, img, self.classes[img].element_order, expected
                    ));
                }
            }
        }
    }

    fn validate_orthogonality(&self, v: &mut Vec<String>) {
        let k = self.class_count();
        let order = Rational::from_integer(Int::from(self.group_order));
        // rows: <chi_i, chi_j> = delta_ij
        let row_viol: Vec<Vec<String>> = par::map_indexed(k, |i| {
            let mut local = Vec::new();
            for j in i..k {
                let mut s = Cyclotomic::zero();
                for (c, cls) in self.classes.iter().enumerate() {
                    let t = &self.irreducibles[i][c] * &self.irreducibles[j][c].conjugate();
                    s = &s + &t.scale(&Rational::from_integer(Int::from(cls.size)));
                }
                let expected = if i == j { order.clone() } else { Rational::zero() };
                if s != Cyclotomic::from_rational(expected) {
                    local.push(format!("row orthogonality fails for characters ({}, {})", i, j));
                }
            }
            local
        });
        v.extend(row_viol.into_iter().flatten());
        // columns: sum_chi chi(c_i) conj(chi(c_j)) = delta_ij |C_G(g_i)|
        let col_viol: Vec<Vec<String>> = par::map_indexed(k, |i| {
            let mut local = Vec::new();
            for j in i..k {
                let mut s = Cyclotomic::zero();
                for row in &self.irreducibles {
                    s = &s + &(&row[i] * &row[j].conjugate());
                }
                let expected = if i == j {
                    Rational::new(Int::from(self.group_order), Int::from(self.classes[i].size))
                } else {
                    Rational::zero()
                };
                if s != Cyclotomic::from_rational(expected) {
                    local.push(format!("column orthogonality fails for classes ({}, {})", i, j));
                }
            }
            local
        });
        v.extend(col_viol.into_iter().flatten());
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self, table_name: &str) -> Result<()> {
        if self.is_pass() {
            Ok(())
        } else {
            Err(Error::validation(format!(
                "table {}: {}",
                table_name,
                self.violations.join("; ")
            )))
        }
    }
}

pub fn same_table(a: &Arc<CharacterTable>, b: &Arc<CharacterTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A vector of cyclotomic values indexed by the conjugacy classes of a
/// fixed table.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    table: Arc<CharacterTable>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.values == other.values
    }
}
impl Eq for ClassFunction {}

impl ClassFunction {
    pub fn new(table: Arc<CharacterTable>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != table.class_count() {
            return Err(Error::domain(format!(
                "class function has {} values for {} classes",
                values.len(),
                table.class_count()
            )));
        }
        Ok(ClassFunction { table, values })
    }

    pub fn irreducible(table: &Arc<CharacterTable>, i: usize) -> Self {
        ClassFunction {
            table: Arc::clone(table),
            values: table.irreducibles[i].clone(),
        }
    }

    pub fn trivial(table: &Arc<CharacterTable>) -> Self {
        ClassFunction {
            table: Arc::clone(table),
            values: vec![Cyclotomic::one(); table.class_count()],
        }
    }

    pub fn zero(table: &Arc<CharacterTable>) -> Self {
        ClassFunction {
            table: Arc::clone(table),
            values: vec![Cyclotomic::zero(); table.class_count()],
        }
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, c: usize) -> &Cyclotomic {
        &self.values[c]
    }

    pub fn degree(&self) -> Cyclotomic {
        self.values[0].clone()
    }

    pub fn is_zero_function(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn conjugate(&self) -> Self {
        ClassFunction {
            table: Arc::clone(&self.table),
            values: self.values.iter().map(|v| v.conjugate()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    /// Pointwise product (the character of the tensor product).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        ClassFunction {
            table: Arc::clone(&self.table),
            values: self.values.iter().map(|v| v.scale(r)).collect(),
        }
    }

    fn zip(
        &self,
        other: &Self,
        f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic,
    ) -> Result<Self> {
        if !same_table(&self.table, &other.table) {
            return Err(Error::domain("class functions live on different tables"));
        }
        Ok(ClassFunction {
            table: Arc::clone(&self.table),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }
}

/// `(1/|G|) sum_c |c| f(c) conj(g(c))`, exactly.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<Cyclotomic> {
    if !same_table(f.table(), g.table()) {
        return Err(Error::domain("inner product across different tables"));
    }
    let t = f.table();
    let mut s = Cyclotomic::zero();
    for (c, cls) in t.classes.iter().enumerate() {
        let term = f.value(c) * &g.value(c).conjugate();
        s = &s + &term.scale(&Rational::from_integer(Int::from(cls.size)));
    }
    Ok(s.scale(&Rational::new(Int::one(), Int::from(t.group_order))))
}

/// `<f, f>`, which is a nonnegative rational for any class function.
pub fn norm(f: &ClassFunction) -> Result<Rational> {
    inner_product(f, f)?.to_rational()
}

/// Class-to-class embedding data from a subgroup table into an
/// overgroup table.
#[derive(Clone, Debug)]
pub struct FusionMap {
    pub subgroup: Arc<CharacterTable>,
    pub overgroup: Arc<CharacterTable>,
    pub map: Vec<usize>,
}

impl FusionMap {
    pub fn new(
        subgroup: Arc<CharacterTable>,
        overgroup: Arc<CharacterTable>,
        map: Vec<usize>,
    ) -> Result<Self> {
        let fus = FusionMap { subgroup, overgroup, map };
        fus.check()?;
        Ok(fus)
    }

    fn check(&self) -> Result<()> {
        if self.map.len() != self.subgroup.class_count() {
            return Err(Error::validation("fusion map length does not match the subgroup"));
        }
        if self.overgroup.group_order % self.subgroup.group_order != 0 {
            return Err(Error::validation("subgroup order does not divide the overgroup order"));
        }
        for (c, &img) in self.map.iter().enumerate() {
            if img >= self.overgroup.class_count() {
                return Err(Error::validation(format!("fusion image {} out of range", img)));
            }
            if self.subgroup.classes[c].element_order != self.overgroup.classes[img].element_order
            {
                return Err(Error::validation(format!(
                    "fusion does not preserve the element order of class {}",
                    c
                )));
            }
        }
        if self.map[0] != 0 {
            return Err(Error::validation("fusion does not send identity to identity"));
        }
        // power maps commute with the fusion for every prime both tables know
        for (&p, sub_map) in &self.subgroup.power_maps {
            if let Some(over_map) = self.overgroup.power_maps.get(&p) {
                for c in 0..self.map.len() {
                    if self.map[sub_map[c]] != over_map[self.map[c]] {
                        return Err(Error::validation(format!(
                            "fusion does not commute with the power map for prime {} at class {}",
                            p, c
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn index(&self) -> u64 {
        self.overgroup.group_order / self.subgroup.group_order
    }
}

/// Pullback of a class function along the fusion.
pub fn restrict(fus: &FusionMap, f: &ClassFunction) -> Result<ClassFunction> {
    if !same_table(f.table(), &fus.overgroup) {
        return Err(Error::domain("restrict: class function is not on the overgroup"));
    }
    let values = fus.map.iter().map(|&img| f.value(img).clone()).collect();
    ClassFunction::new(Arc::clone(&fus.subgroup), values)
}

/// Frobenius induction evaluated through class sizes and the fusion:
/// `(Ind f)(C) = |G| / (|H| |C|) * sum_{c -> C} |c| f(c)`.
pub fn induce(fus: &FusionMap, f: &ClassFunction) -> Result<ClassFunction> {
    if !same_table(f.table(), &fus.subgroup) {
        return Err(Error::domain("induce: class function is not on the subgroup"));
    }
    let g_order = Int::from(fus.overgroup.group_order);
    let h_order = Int::from(fus.subgroup.group_order);
    let mut values = vec![Cyclotomic::zero(); fus.overgroup.class_count()];
    for (c, &img) in fus.map.iter().enumerate() {
        let coeff = Rational::from_integer(Int::from(fus.subgroup.classes[c].size));
        values[img] = &values[img] + &f.value(c).scale(&coeff);
    }
    for (big_c, val) in values.iter_mut().enumerate() {
        let scale = Rational::new(
            g_order.clone(),
            &h_order * Int::from(fus.overgroup.classes[big_c].size),
        );
        *val = val.scale(&scale);
    }
    ClassFunction::new(Arc::clone(&fus.overgroup), values)
}

// --- JSON table format (bit-exact contract) ---

#[derive(Serialize, Deserialize)]
struct ClassJson {
    name: String,
    size: u64,
    order: u64,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    name: String,
    order: u64,
    classes: Vec<ClassJson>,
    powermaps: BTreeMap<String, Vec<usize>>,
    irreducibles: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct FusionJson {
    subgroup: String,
    overgroup: String,
    map: Vec<usize>,
}

pub fn table_from_json(input: &str) -> Result<Arc<CharacterTable>> {
    let parsed: TableJson =
        serde_json::from_str(input).map_err(|e| Error::parse(format!("table JSON: {}", e)))?;
    let mut power_maps = BTreeMap::new();
    for (key, map) in parsed.powermaps {
        let p: u64 = key
            .parse()
            .map_err(|_| Error::parse(format!("power map key {:?} is not a prime", key)))?;
        power_maps.insert(p, map);
    }
    let mut irreducibles = Vec::with_capacity(parsed.irreducibles.len());
    for row in &parsed.irreducibles {
        let mut values = Vec::with_capacity(row.len());
        for lit in row {
            values.push(crate::exactnum::parse_cyclotomic(lit)?);
        }
        irreducibles.push(values);
    }
    let classes = parsed
        .classes
        .into_iter()
        .map(|c| ConjugacyClass { name: c.name, size: c.size, element_order: c.order })
        .collect();
    Ok(CharacterTable::new(
        parsed.name,
        parsed.order,
        classes,
        power_maps,
        irreducibles,
    ))
}

pub fn table_to_json(table: &CharacterTable) -> String {
    let json = TableJson {
        name: table.name.clone(),
        order: table.group_order,
        classes: table
            .classes
            .iter()
            .map(|c| ClassJson { name: c.name.clone(), size: c.size, order: c.element_order })
            .collect(),
        powermaps: table
            .power_maps
            .iter()
            .map(|(p, m)| (p.to_string(), m.clone()))
            .collect(),
        irreducibles: table
            .irreducibles
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&json).expect("table serialization cannot fail")
}

pub fn fusion_from_json(
    input: &str,
    subgroup: Arc<CharacterTable>,
    overgroup: Arc<CharacterTable>,
) -> Result<FusionMap> {
    let parsed: FusionJson =
        serde_json::from_str(input).map_err(|e| Error::parse(format!("fusion JSON: {}", e)))?;
    if parsed.subgroup != subgroup.name {
        return Err(Error::parse(format!(
            "fusion file names subgroup {:?} but table {:?} was supplied",
            parsed.subgroup, subgroup.name
        )));
    }
    if parsed.overgroup != overgroup.name {
        return Err(Error::parse(format!(
            "fusion file names overgroup {:?} but table {:?} was supplied",
            parsed.overgroup, overgroup.name
        )));
    }
    FusionMap::new(subgroup, overgroup, parsed.map)
}

pub fn fusion_to_json(fus: &FusionMap) -> String {
    let json = FusionJson {
        subgroup: fus.subgroup.name.clone(),
        overgroup: fus.overgroup.name.clone(),
        map: fus.map.clone(),
    };
    serde_json::to_string_pretty(&json).expect("fusion serialization cannot fail")
}
