//! Closed-form Roman domination numbers of comets, double comets and combs,
//! and explicit labelings that attain them.
//!
//! Values:
//!
//! | family         | residue 0       | residue 1          | residue 2          |
//! |----------------|-----------------|--------------------|--------------------|
//! | comet `C(t,r)` | `2t/3 + 1`      | `2⌈t/3⌉`           | `2⌈t/3⌉`           |
//! | `DC(n,a,b)`    | `2(p/3 + 1)`    | `2⌈p/3⌉`           | `2⌈p/3⌉ + 1`       |
//! | comb `P_n+`    | `4n/3`          | `4⌊n/3⌋ + 2`       | `4⌈n/3⌉ - 1`       |
//!
//! The residue is taken of `t`, `p = n - a - b` and `n` respectively. The
//! double comet value is not defined for `p = 2`.
//!
//! The builders place 2 on every third spine vertex and patch the tail of the
//! spine according to the residue. Where two equally cheap tails exist they
//! are exposed as [`Subcase::I`] and [`Subcase::II`].

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Labeling;

/// Alternative tail constructions of equal weight.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Subcase {
    #[default]
    I,
    II,
}

/// Which branch of the closed form applies to an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FormulaCase {
    /// Governing parameter mod 3.
    pub residue: u8,
    pub subcase: Option<Subcase>,
}

impl FormulaCase {
    /// Resolves the case for `spec`, checking that `subcase` is only given
    /// where two constructions exist (comet with `t ≡ 1`, comb with
    /// `n ≡ 1` or `n ≡ 2`). A missing subcase defaults to [`Subcase::I`]
    /// where one is available.
    pub fn resolve(spec: &FamilySpec, subcase: Option<Subcase>) -> Result<Self> {
        spec.validate()?;
        let (residue, has_alternatives) = match *spec {
            FamilySpec::Comet { t, .. } => ((t % 3) as u8, t % 3 == 1),
            FamilySpec::DoubleComet { n, a, b } => {
                let p = n - a - b;
                if p == 2 {
                    return Err(Error::Excluded);
                }
                ((p % 3) as u8, false)
            }
            FamilySpec::Comb { n } => ((n % 3) as u8, n % 3 != 0),
        };
        let subcase = match (has_alternatives, subcase) {
            (true, s) => Some(s.unwrap_or_default()),
            (false, None | Some(Subcase::I)) => None,
            (false, Some(Subcase::II)) => {
                return Err(Error::Domain(
                    "subcase ii is not available for this instance",
                ))
            }
        };
        Ok(Self { residue, subcase })
    }

    /// Residue class without any subcase.
    pub fn of(spec: &FamilySpec) -> Result<Self> {
        Self::resolve(spec, None)
    }
}

pub fn gamma_comet(t: usize, r: usize) -> Result<u64> {
    FamilySpec::Comet { t, r }.validate()?;
    let t = t as u64;
    Ok(if t.is_multiple_of(3) {
        2 * (t / 3) + 1
    } else {
        2 * t.div_ceil(3)
    })
}

pub fn gamma_double_comet(n: usize, a: usize, b: usize) -> Result<u64> {
    FormulaCase::of(&FamilySpec::DoubleComet { n, a, b })?;
    let p = (n - a - b) as u64;
    Ok(match p % 3 {
        0 => 2 * (p / 3 + 1),
        1 => 2 * p.div_ceil(3),
        _ => 2 * p.div_ceil(3) + 1,
    })
}

pub fn gamma_comb(n: usize) -> Result<u64> {
    FamilySpec::Comb { n }.validate()?;
    let n = n as u64;
    Ok(match n % 3 {
        0 => 4 * (n / 3),
        1 => 4 * (n / 3) + 2,
        _ => 4 * n.div_ceil(3) - 1,
    })
}

pub fn gamma(spec: &FamilySpec) -> Result<u64> {
    match *spec {
        FamilySpec::Comet { t, r } => gamma_comet(t, r),
        FamilySpec::DoubleComet { n, a, b } => gamma_double_comet(n, a, b),
        FamilySpec::Comb { n } => gamma_comb(n),
    }
}

/// 1-based positions `1, 4, 7, ..` up to and including `last`.
fn every_third_from_one(last: isize) -> impl Iterator<Item = usize> {
    (1..=last.max(0) as usize).step_by(3)
}

pub fn construct_comet(t: usize, r: usize, subcase: Option<Subcase>) -> Result<Labeling> {
    let spec = FamilySpec::Comet { t, r };
    let case = FormulaCase::resolve(&spec, subcase)?;
    let mut f = Labeling::zeros(spec.order());
    // path vertex v_i has id i - 1
    let mut label = |i: usize, l: u8| f.put(i - 1, l);
    let t = t as isize;
    match (case.residue, case.subcase) {
        (0, _) => {
            every_third_from_one(t - 2).for_each(|i| label(i, 2));
            label(t as usize, 1);
        }
        (1, Some(Subcase::II)) => {
            every_third_from_one(t - 3).for_each(|i| label(i, 2));
            label(t as usize - 1, 1);
            label(t as usize, 1);
        }
        (1, _) => {
            every_third_from_one(t - 3).for_each(|i| label(i, 2));
            label(t as usize - 1, 2);
        }
        _ => every_third_from_one(t - 1).for_each(|i| label(i, 2)),
    }
    Ok(f)
}

pub fn construct_double_comet(n: usize, a: usize, b: usize) -> Result<Labeling> {
    let spec = FamilySpec::DoubleComet { n, a, b };
    let case = FormulaCase::of(&spec)?;
    let p = n - a - b;
    let mut f = Labeling::zeros(n);
    // spine vertex k_i has id i - 1
    let mut label = |i: usize, l: u8| f.put(i - 1, l);
    let last = p as isize
        - match case.residue {
            0 => 2,
            1 => 3,
            _ => 4,
        };
    every_third_from_one(last).for_each(|i| label(i, 2));
    label(p, 2);
    if case.residue == 2 {
        label(p - 2, 1);
    }
    Ok(f)
}

/// Comb spine vertex at 0-based spine index `j`, i.e. the vertex named
/// `v_{j+1}`. The comb constructions are stated over a 0-based spine
/// `v_0..v_{n-1}`; this and [`comb_pendant`] are the only places where that
/// indexing meets the generator's 1-based names.
pub fn comb_spine(j: usize) -> usize {
    j
}

/// Pendant of the comb spine vertex at 0-based spine index `j` in `P_n+`.
pub fn comb_pendant(n: usize, j: usize) -> usize {
    n + j
}

pub fn construct_comb(n: usize, subcase: Option<Subcase>) -> Result<Labeling> {
    let spec = FamilySpec::Comb { n };
    let case = FormulaCase::resolve(&spec, subcase)?;
    let mut f = Labeling::zeros(2 * n);
    let ni = n as isize;

    // anchors: spine indices j ≡ 1 (mod 3) up to a residue-dependent limit
    let last_anchor = match (case.residue, case.subcase) {
        (0, _) => ni - 2,
        (1, _) => ni - 3,
        (_, Some(Subcase::II)) => ni - 4,
        _ => ni - 1,
    };
    let anchors: Vec<usize> = every_third_from_one(last_anchor).collect();
    for &j in &anchors {
        f.put(comb_spine(j), 2);
        f.put(comb_pendant(n, j - 1), 1);
        if j + 1 < n {
            f.put(comb_pendant(n, j + 1), 1);
        }
    }

    match (case.residue, case.subcase) {
        (1, Some(Subcase::II)) => {
            f.put(comb_spine(n - 1), 1);
            f.put(comb_pendant(n, n - 1), 1);
        }
        (1, _) => f.put(comb_spine(n - 1), 2),
        (2, Some(Subcase::II)) => {
            f.put(comb_spine(n - 2), 2);
            f.put(comb_pendant(n, n - 1), 1);
        }
        _ => {}
    }
    Ok(f)
}

/// Explicit optimal labeling for `spec` on the graph from
/// [`crate::families::generate`].
pub fn construct(spec: &FamilySpec, subcase: Option<Subcase>) -> Result<Labeling> {
    match *spec {
        FamilySpec::Comet { t, r } => construct_comet(t, r, subcase),
        FamilySpec::DoubleComet { n, a, b } => {
            FormulaCase::resolve(spec, subcase)?;
            construct_double_comet(n, a, b)
        }
        FamilySpec::Comb { n } => construct_comb(n, subcase),
    }
}

/// Subcases that yield distinct constructions for `spec`; `[None]` when
/// there is only one.
pub fn subcases(spec: &FamilySpec) -> Result<Vec<Option<Subcase>>> {
    Ok(match FormulaCase::of(spec)?.subcase {
        Some(_) => alloc::vec![Some(Subcase::I), Some(Subcase::II)],
        None => alloc::vec![None],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn twos_and_ones(f: &Labeling) -> (Vec<usize>, Vec<usize>) {
        let p = f.partition();
        (p.v2, p.v1)
    }

    #[test]
    fn comet_values() {
        assert_eq!(gamma_comet(6, 3), Ok(5));
        assert_eq!(gamma_comet(2, 1), Ok(2));
        assert_eq!(gamma_comet(7, 5), Ok(6));
        assert!(matches!(gamma_comet(1, 1), Err(Error::Domain(_))));
        assert!(matches!(gamma_comet(4, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn double_comet_values() {
        assert_eq!(gamma_double_comet(7, 2, 2), Ok(4));
        assert_eq!(gamma_double_comet(6, 1, 1), Ok(4));
        assert_eq!(gamma_double_comet(7, 1, 1), Ok(5));
        assert_eq!(gamma_double_comet(4, 1, 1), Err(Error::Excluded));
        assert_eq!(gamma_double_comet(6, 2, 2), Err(Error::Excluded));
        assert!(matches!(gamma_double_comet(3, 1, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn comb_values() {
        assert_eq!(gamma_comb(3), Ok(4));
        assert_eq!(gamma_comb(1), Ok(2));
        assert_eq!(gamma_comb(4), Ok(6));
        assert_eq!(gamma_comb(2), Ok(3));
        assert!(matches!(gamma_comb(0), Err(Error::Domain(_))));
    }

    #[test]
    fn comet_constructions() {
        // v_1 = 2, v_4 = 2, v_6 = 1
        let f = construct_comet(6, 2, None).unwrap();
        assert_eq!(twos_and_ones(&f), (vec![0, 3], vec![5]));
        assert_eq!(f.weight(), 5);

        let f = construct_comet(4, 1, Some(Subcase::II)).unwrap();
        assert_eq!(twos_and_ones(&f), (vec![0], vec![2, 3]));
        assert_eq!(f.weight(), 4);

        let f = construct_comet(4, 1, Some(Subcase::I)).unwrap();
        assert_eq!(twos_and_ones(&f), (vec![0, 2], vec![]));

        let f = construct_comet(2, 3, None).unwrap();
        assert_eq!(twos_and_ones(&f), (vec![0], vec![]));
        assert_eq!(f.len(), 5);

        assert!(matches!(
            construct_comet(6, 2, Some(Subcase::II)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn double_comet_constructions() {
        let f = construct_double_comet(7, 2, 2).unwrap();
        assert_eq!(twos_and_ones(&f), (vec![0, 2], vec![]));
        let f = construct_double_comet(7, 1, 1).unwrap();
        assert_eq!(twos_and_ones(&f), (vec![0, 4], vec![2]));
        assert_eq!(f.weight(), 5);
        let f = construct_double_comet(6, 1, 1).unwrap();
        assert_eq!(twos_and_ones(&f), (vec![0, 3], vec![]));
        assert_eq!(construct_double_comet(4, 1, 1), Err(Error::Excluded));
    }

    #[test]
    fn comb_constructions() {
        // spine v_2 = 2, pendants v_1+ and v_3+ = 1
        let f = construct_comb(3, None).unwrap();
        assert_eq!(twos_and_ones(&f), (vec![1], vec![3, 5]));
        assert_eq!(f.weight(), 4);

        let f = construct_comb(1, None).unwrap();
        assert_eq!(twos_and_ones(&f), (vec![0], vec![]));
        let f = construct_comb(1, Some(Subcase::II)).unwrap();
        assert_eq!(twos_and_ones(&f), (vec![], vec![0, 1]));

        assert_eq!(construct_comb(4, None).unwrap().weight(), 6);

        let f = construct_comb(2, Some(Subcase::II)).unwrap();
        assert_eq!(twos_and_ones(&f), (vec![0], vec![3]));
        let f = construct_comb(5, Some(Subcase::II)).unwrap();
        assert_eq!(twos_and_ones(&f), (vec![1, 3], vec![5, 7, 9]));

        assert!(matches!(
            construct_comb(3, Some(Subcase::II)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn comb_index_translation() {
        let g = crate::families::gen_comb(4).unwrap();
        assert_eq!(g.name(comb_spine(0)), Some("v_1"));
        assert_eq!(g.name(comb_spine(3)), Some("v_4"));
        assert_eq!(g.name(comb_pendant(4, 0)), Some("v_1+"));
        assert_eq!(g.name(comb_pendant(4, 2)), Some("v_3+"));
    }

    #[test]
    fn case_resolution() {
        let comet = |t| FamilySpec::Comet { t, r: 1 };
        assert_eq!(
            FormulaCase::of(&comet(4)).unwrap(),
            FormulaCase {
                residue: 1,
                subcase: Some(Subcase::I)
            }
        );
        assert_eq!(
            FormulaCase::of(&comet(6)).unwrap(),
            FormulaCase {
                residue: 0,
                subcase: None
            }
        );
        assert_eq!(subcases(&FamilySpec::Comb { n: 5 }).unwrap().len(), 2);
        assert_eq!(subcases(&FamilySpec::Comb { n: 6 }).unwrap(), vec![None]);
        assert_eq!(
            construct(
                &FamilySpec::DoubleComet { n: 7, a: 1, b: 1 },
                Some(Subcase::II)
            ),
            Err(Error::Domain(
                "subcase ii is not available for this instance"
            ))
        );
    }
}
