//! Fixed-point-space dimensions of an extraspecial group acting on
//! symmetric and exterior powers of its faithful module.

use num::Signed;

use crate::chartab::{inner_product, ClassFunction};
use crate::error::{Error, Result};
use crate::exactnum::{rat, Int};
use crate::plethysm::{ext_power, sym_power};
use crate::tablegen::{extraspecial_table, ExtraspecialVariant};

/// Builds the table of p^{1+2n}, takes a faithful irreducible of degree
/// p^n (the lowest-index one; the answer is independent of the choice),
/// and returns `(<Sym^k chi, 1>, <wedge^k chi, 1>)`.
pub fn extraspecial_fixed_dims(p: u64, n: usize, k: u64) -> Result<(Int, Int)> {
    let variant = if p == 2 {
        ExtraspecialVariant::EvenPlus
    } else {
        ExtraspecialVariant::OddExponentP
    };
    let table = extraspecial_table(p, n, variant)?;
    let chi = faithful_character(&table, p, n)?;
    fixed_dims_of(&chi, k)
}

pub(crate) fn faithful_character(
    table: &std::sync::Arc<crate::chartab::CharacterTable>,
    p: u64,
    n: usize,
) -> Result<ClassFunction> {
    let degree = rat(p.pow(n as u32) as i64);
    for i in 0..table.irreducible_count() {
        if table.irreducible_values(i)[0].to_rational().ok() == Some(degree.clone()) {
            return Ok(ClassFunction::irreducible(table, i));
        }
    }
    Err(Error::domain("no faithful character of degree p^n found"))
}

pub(crate) fn fixed_dims_of(chi: &ClassFunction, k: u64) -> Result<(Int, Int)> {
    let trivial = ClassFunction::trivial(chi.table());
    let sym_fixed = inner_product(&sym_power(chi, k)?, &trivial)?.to_integer()?;
    let ext_fixed = inner_product(&ext_power(chi, k)?, &trivial)?.to_integer()?;
    if sym_fixed.is_negative() || ext_fixed.is_negative() {
        return Err(Error::domain("negative fixed-space dimension; table corrupted"));
    }
    Ok((sym_fixed, ext_fixed))
}

/// Closed forms for the two cases the suites pin down: (d+1)/2
/// and (d-1)/2 for p = 3, k = 3; (d+1)(d+2)/6 and (d-1)(d-2)/6 for
/// p = 2, k = 4.
pub fn closed_form_fixed_dims(p: u64, n: usize, k: u64) -> Option<(Int, Int)> {
    let d = Int::from(p.pow(n as u32));
    if p == 3 && k == 3 {
        Some(((&d + 1) / 2, (&d - 1) / 2))
    } else if p == 2 && k == 4 {
        Some(((&d + 1) * (&d + 2) / 6, (&d - 1) * (&d - 2) / 6))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_matches_closed_forms() {
        for (p, n, k) in [(3u64, 1usize, 3u64), (3, 2, 3), (2, 1, 4), (2, 2, 4), (2, 3, 4)] {
            let got = extraspecial_fixed_dims(p, n, k).unwrap();
            let expected = closed_form_fixed_dims(p, n, k).unwrap();
            assert_eq!(got, expected, "(p, n, k) = ({}, {}, {})", p, n, k);
        }
    }

    #[test]
    fn expected_values_frozen() {
        assert_eq!(
            extraspecial_fixed_dims(3, 1, 3).unwrap(),
            (Int::from(2), Int::from(1))
        );
        assert_eq!(
            extraspecial_fixed_dims(2, 2, 4).unwrap(),
            (Int::from(5), Int::from(1))
        );
        assert_eq!(
            extraspecial_fixed_dims(3, 2, 3).unwrap(),
            (Int::from(5), Int::from(4))
        );
    }

    #[test]
    fn independent_of_faithful_choice() {
        // odd p has p - 1 faithful irreducibles; all give the same answer
        let table = extraspecial_table(3, 1, ExtraspecialVariant::OddExponentP).unwrap();
        let mut results = Vec::new();
        for i in 0..table.irreducible_count() {
            if table.irreducible_values(i)[0].to_rational().unwrap() == rat(3) {
                let chi = ClassFunction::irreducible(&table, i);
                results.push(fixed_dims_of(&chi, 3).unwrap());
            }
        }
        assert_eq!(results.len(), 2);
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn minus_type_gives_same_fixed_dims() {
        let table = extraspecial_table(2, 2, ExtraspecialVariant::EvenMinus).unwrap();
        let chi = faithful_character(&table, 2, 2).unwrap();
        assert_eq!(
            fixed_dims_of(&chi, 4).unwrap(),
            (Int::from(5), Int::from(1))
        );
    }
}
