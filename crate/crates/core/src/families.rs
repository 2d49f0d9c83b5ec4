//! Generators for comets, double comets and combs.
//!
//! Vertex numbering is canonical so that the explicit labelings in
//! [`crate::closed_form`] can address vertices by position:
//!
//! * comet `C(t, r)`: path `v_1..v_t` at ids `0..t`, leaves `u_1..u_r` at ids
//!   `t..t+r`, all attached to `v_1`;
//! * double comet `DC(n, a, b)` with `p = n - a - b`: spine `k_1..k_p` at ids
//!   `0..p`, then `u_1..u_a` hanging off `k_1`, then `v_1..v_b` hanging off
//!   `k_p`;
//! * comb `P_n+`: spine `v_1..v_n` at ids `0..n`, pendant `v_i+` at id
//!   `n + i - 1`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Comet { t: usize, r: usize },
    DoubleComet { n: usize, a: usize, b: usize },
    Comb { n: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Comet { t, r } => {
                if t < 2 {
                    return Err(Error::Domain("comet needs t >= 2"));
                }
                if r < 1 {
                    return Err(Error::Domain("comet needs r >= 1"));
                }
            }
            FamilySpec::DoubleComet { n, a, b } => {
                if a < 1 || b < 1 {
                    return Err(Error::Domain("double comet needs a, b >= 1"));
                }
                if n < a + b + 2 {
                    return Err(Error::Domain("double comet needs n >= a + b + 2"));
                }
            }
            FamilySpec::Comb { n } => {
                if n < 1 {
                    return Err(Error::Domain("comb needs n >= 1"));
                }
            }
        }
        Ok(())
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Comet { t, r } => t + r,
            FamilySpec::DoubleComet { n, .. } => n,
            FamilySpec::Comb { n } => 2 * n,
        }
    }

    /// Short family tag, as used in the compact text form.
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Comet { .. } => "comet",
            FamilySpec::DoubleComet { .. } => "dcomet",
            FamilySpec::Comb { .. } => "comb",
        }
    }

    /// Numeric parameters in compact-form order.
    pub fn params(&self) -> Vec<usize> {
        match *self {
            FamilySpec::Comet { t, r } => alloc::vec![t, r],
            FamilySpec::DoubleComet { n, a, b } => alloc::vec![n, a, b],
            FamilySpec::Comb { n } => alloc::vec![n],
        }
    }

    /// Compact text form with a custom separator between parameters.
    pub fn to_compact_with(&self, sep: &str) -> String {
        let params: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        format!("{}:{}", self.tag(), params.join(sep))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact_with(","))
    }
}

/// Parses `comet:t,r`, `dcomet:n,a,b` or `comb:n`. Only the shape is checked
/// here; call [`FamilySpec::validate`] for the parameter ranges.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadSpec(s.to_string());
        let (tag, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums = rest
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        match (tag.trim(), nums.as_slice()) {
            ("comet", &[t, r]) => Ok(FamilySpec::Comet { t, r }),
            ("dcomet", &[n, a, b]) => Ok(FamilySpec::DoubleComet { n, a, b }),
            ("comb", &[n]) => Ok(FamilySpec::Comb { n }),
            _ => Err(bad()),
        }
    }
}

pub fn gen_comet(t: usize, r: usize) -> Result<Graph> {
    FamilySpec::Comet { t, r }.validate()?;
    let path = (1..t).map(|i| (i - 1, i));
    let leaves = (0..r).map(|j| (0, t + j));
    let names = (1..=t)
        .map(|i| format!("v_{i}"))
        .chain((1..=r).map(|j| format!("u_{j}")))
        .collect();
    Graph::from_edges(t + r, path.chain(leaves))?.with_names(names)
}

pub fn gen_double_comet(n: usize, a: usize, b: usize) -> Result<Graph> {
    FamilySpec::DoubleComet { n, a, b }.validate()?;
    let p = n - a - b;
    let spine = (1..p).map(|i| (i - 1, i));
    let left = (0..a).map(|j| (0, p + j));
    let right = (0..b).map(|j| (p - 1, p + a + j));
    let names = (1..=p)
        .map(|i| format!("k_{i}"))
        .chain((1..=a).map(|j| format!("u_{j}")))
        .chain((1..=b).map(|j| format!("v_{j}")))
        .collect();
    Graph::from_edges(n, spine.chain(left).chain(right))?.with_names(names)
}

pub fn gen_comb(n: usize) -> Result<Graph> {
    FamilySpec::Comb { n }.validate()?;
    let spine = (1..n).map(|i| (i - 1, i));
    let teeth = (0..n).map(|i| (i, n + i));
    let names = (1..=n)
        .map(|i| format!("v_{i}"))
        .chain((1..=n).map(|i| format!("v_{i}+")))
        .collect();
    Graph::from_edges(2 * n, spine.chain(teeth))?.with_names(names)
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Comet { t, r } => gen_comet(t, r),
        FamilySpec::DoubleComet { n, a, b } => gen_double_comet(n, a, b),
        FamilySpec::Comb { n } => gen_comb(n),
    }
}
