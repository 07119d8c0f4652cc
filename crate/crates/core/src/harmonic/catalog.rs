//! Shipped irrep tables.

use num_complex::Complex64;

use super::group::FiniteGroup;
use super::irreps::{Irrep, IrrepTable};
use super::scalar::SMat;
use crate::error::{Error, Result};
use crate::json::{group_from_json, irreps_from_json, AnyIrrepTable};
use crate::rat::Rat;

/// A built-in table in its natural backend.
pub type Builtin = AnyIrrepTable;

const SHIPPED: &[(&str, &str, &str)] = &[
    (
        "c2",
        include_str!("../../data/c2.group.json"),
        include_str!("../../data/c2.irreps.json"),
    ),
    (
        "c2xc2",
        include_str!("../../data/c2xc2.group.json"),
        include_str!("../../data/c2xc2.irreps.json"),
    ),
    (
        "c3",
        include_str!("../../data/c3.group.json"),
        include_str!("../../data/c3.irreps.json"),
    ),
    (
        "c5",
        include_str!("../../data/c5.group.json"),
        include_str!("../../data/c5.irreps.json"),
    ),
    (
        "d4",
        include_str!("../../data/d4.group.json"),
        include_str!("../../data/d4.irreps.json"),
    ),
    (
        "s3",
        include_str!("../../data/s3.group.json"),
        include_str!("../../data/s3.irreps.json"),
    ),
];

/// Names accepted by [`builtin`]; `cN` for any `N >= 1` is also accepted.
pub fn builtin_names() -> Vec<&'static str> {
    let mut names: Vec<&str> = SHIPPED.iter().map(|(n, _, _)| *n).collect();
    names.extend(["trivial", "s3xc2"]);
    names
}

fn exact(name: &str) -> Result<IrrepTable<Rat>> {
    match builtin(name)? {
        AnyIrrepTable::Exact(t) => Ok(t),
        AnyIrrepTable::Complex(_) => Err(Error::InvalidArgument(format!(
            "{name} is not an exact table"
        ))),
    }
}

pub fn builtin(name: &str) -> Result<Builtin> {
    let lower = name.to_ascii_lowercase();
    if let Some((_, group, irreps)) = SHIPPED.iter().find(|(n, _, _)| *n == lower) {
        return irreps_from_json(irreps, group_from_json(group)?);
    }
    match lower.as_str() {
        "trivial" | "c1" => {
            let group = FiniteGroup::cyclic(1)?;
            let irreps = vec![Irrep {
                degree: 1,
                matrices: vec![SMat::identity(1)],
            }];
            Ok(AnyIrrepTable::Exact(IrrepTable::new(group, irreps)?))
        }
        "s3xc2" => Ok(AnyIrrepTable::Exact(
            exact("s3")?.direct_product(&exact("c2")?)?,
        )),
        other => {
            let n = other
                .strip_prefix('c')
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1)
                .ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "unknown group '{name}' (known: {}, cN)",
                        builtin_names().join(", ")
                    ))
                })?;
            Ok(AnyIrrepTable::Complex(cyclic_table(n)?))
        }
    }
}

/// `C_n` with the characters `r^j -> exp(2 pi i j k / n)`.
pub fn cyclic_table(n: usize) -> Result<IrrepTable<Complex64>> {
    let group = FiniteGroup::cyclic(n)?;
    let irreps = (0..n)
        .map(|k| Irrep {
            degree: 1,
            matrices: (0..n)
                .map(|j| {
                    let angle = 2.0 * std::f64::consts::PI * ((j * k) % n) as f64 / n as f64;
                    SMat::from_rows(vec![vec![Complex64::from_polar(1.0, angle)]]).expect("1x1")
                })
                .collect(),
        })
        .collect();
    IrrepTable::new(group, irreps)
}
