//! JSON encodings of polynomials, tensors, Weingarten tables and finite-group
//! data. Decoding errors name the offending path, e.g. `terms[2].coeff`.
//!
//! Output objects use `serde_json::Value`, whose maps keep keys sorted, so
//! serialization is deterministic.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::harmonic::{
    DualElement, FiniteGroup, GroupFunction, Irrep, IrrepTable, ParsevalResult, PoissonReport,
    SMat, Scalar,
};
use crate::poly::{variable_name, Monomial, Poly};
use crate::rat::Rat;
use crate::tensor::{Tensor, Variance};
use crate::weingarten::WeingartenTable;

fn json_error(path: impl Into<String>, message: impl Into<String>) -> Error {
    let path = path.into();
    Error::Json {
        path: if path.is_empty() { ".".into() } else { path },
        message: message.into(),
    }
}

/// Deserializes `text`, reporting the JSON path of the first failure.
pub fn from_str_with_path<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de)
        .map_err(|e| json_error(e.path().to_string(), e.inner().to_string()))
}

/// A scalar written either as a `"p/q"` string, an integer, or `{"re": .., "im": ..}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum JsonScalar {
    Text(String),
    Int(i64),
    Complex { re: f64, im: f64 },
}

impl JsonScalar {
    fn is_complex(&self) -> bool {
        matches!(self, JsonScalar::Complex { .. })
    }

    fn to_rat(&self, path: &str) -> Result<Rat> {
        match self {
            JsonScalar::Text(s) => s.parse().map_err(|e| json_error(path, format!("{e}"))),
            JsonScalar::Int(n) => Ok(Rat::from_int(*n)),
            JsonScalar::Complex { .. } => Err(json_error(
                path,
                "complex entry where an exact rational is required",
            )),
        }
    }

    fn to_complex(&self, path: &str) -> Result<Complex64> {
        match self {
            JsonScalar::Complex { re, im } => Ok(Complex64::new(*re, *im)),
            other => Ok(Complex64::new(other.to_rat(path)?.to_f64(), 0.0)),
        }
    }
}

/// Conversion between backend scalars and JSON.
pub trait ScalarJson: Scalar {
    fn to_json(&self) -> Value;
    fn from_json_scalar(s: &JsonScalar, path: &str) -> Result<Self>;
}

impl ScalarJson for Rat {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json_scalar(s: &JsonScalar, path: &str) -> Result<Self> {
        s.to_rat(path)
    }
}

impl ScalarJson for Complex64 {
    fn to_json(&self) -> Value {
        // normalize -0.0 so equal inputs print identically
        let clean = |x: f64| if x == 0.0 { 0.0 } else { x };
        json!({"re": clean(self.re), "im": clean(self.im)})
    }

    fn from_json_scalar(s: &JsonScalar, path: &str) -> Result<Self> {
        s.to_complex(path)
    }
}

// ---------------------------------------------------------------- polynomials

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyDoc {
    n: usize,
    terms: Vec<TermDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    coeff: JsonScalar,
    #[serde(default)]
    exps: BTreeMap<String, u16>,
}

fn parse_variable(name: &str, n: usize) -> Option<(usize, usize)> {
    let body = name.strip_prefix('x')?;
    let (r, c) = match body.split_once('_') {
        Some((r, c)) => (r.parse::<usize>().ok()?, c.parse::<usize>().ok()?),
        None if body.len() == 2 && n <= 9 => {
            let mut digits = body.chars().map(|ch| ch.to_digit(10));
            (digits.next()?? as usize, digits.next()?? as usize)
        }
        None => return None,
    };
    (1..=n).contains(&r).then_some(())?;
    (1..=n).contains(&c).then_some(())?;
    Some((r - 1, c - 1))
}

pub fn poly_from_json(text: &str) -> Result<Poly> {
    let doc: PolyDoc = from_str_with_path(text)?;
    if doc.n == 0 {
        return Err(json_error("n", "matrix size must be positive"));
    }
    let n = doc.n;
    let mut terms = Vec::with_capacity(doc.terms.len());
    for (t, term) in doc.terms.iter().enumerate() {
        let coeff = term.coeff.to_rat(&format!("terms[{t}].coeff"))?;
        let mut exps = vec![0u16; n * n];
        for (name, &e) in &term.exps {
            let (r, c) = parse_variable(name, n).ok_or_else(|| {
                json_error(
                    format!("terms[{t}].exps.{name}"),
                    format!("not a variable x_ij with 1 <= i, j <= {n}"),
                )
            })?;
            exps[r * n + c] += e;
        }
        terms.push((Monomial::from_exponents(exps), coeff));
    }
    Ok(Poly::from_terms(n, terms))
}

pub fn poly_to_json(p: &Poly) -> Value {
    let n = p.n();
    let terms: Vec<Value> = p
        .terms()
        .rev()
        .map(|(m, c)| {
            let exps: serde_json::Map<String, Value> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| (variable_name("x", n, k / n, k % n), json!(e)))
                .collect();
            json!({"coeff": c.to_string(), "exps": exps})
        })
        .collect();
    json!({"n": n, "terms": terms})
}

// -------------------------------------------------------------------- tensors

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorDoc {
    dim: usize,
    axes: Vec<String>,
    entries: Vec<JsonScalar>,
}

pub fn tensor_from_json(text: &str) -> Result<Tensor> {
    let doc: TensorDoc = from_str_with_path(text)?;
    let axes = doc
        .axes
        .iter()
        .enumerate()
        .map(|(i, a)| match a.as_str() {
            "v" => Ok(Variance::Vector),
            "c" => Ok(Variance::Covector),
            other => Err(json_error(
                format!("axes[{i}]"),
                format!("expected \"v\" or \"c\", got \"{other}\""),
            )),
        })
        .collect::<Result<Vec<_>>>()?;
    let entries = doc
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| e.to_rat(&format!("entries[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Tensor::from_entries(doc.dim, axes, entries).map_err(|e| json_error("entries", e.to_string()))
}

pub fn tensor_to_json(t: &Tensor) -> Value {
    json!({
        "dim": t.dim(),
        "axes": t.axes().iter().map(|a| a.tag()).collect::<Vec<_>>(),
        "entries": t.entries().iter().map(Rat::to_string).collect::<Vec<_>>(),
    })
}

// --------------------------------------------------------- weingarten tables

/// Coefficients listed in ascending lexicographic order of cycle type.
pub fn weingarten_to_json(t: &WeingartenTable) -> Value {
    let mut coeffs = t.coeffs.clone();
    coeffs.sort_by(|a, b| a.0.parts().cmp(b.0.parts()));
    let coeffs: Vec<Value> = coeffs
        .iter()
        .map(|(ct, c)| json!({"cycle_type": ct.parts(), "coeff": c.to_string()}))
        .collect();
    json!({"kind": t.kind.to_string(), "dim": t.dim, "degree": t.degree, "coeffs": coeffs})
}

// ----------------------------------------------------------- finite groups

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDoc {
    order: usize,
    mul: Vec<Vec<usize>>,
    names: Option<Vec<String>>,
}

pub fn group_from_json(text: &str) -> Result<FiniteGroup> {
    let doc: GroupDoc = from_str_with_path(text)?;
    if doc.mul.len() != doc.order {
        return Err(json_error(
            "mul",
            format!("{} rows for order {}", doc.mul.len(), doc.order),
        ));
    }
    FiniteGroup::from_table(doc.mul, doc.names)
}

pub fn group_to_json(g: &FiniteGroup) -> Value {
    json!({"order": g.order(), "mul": g.table(), "names": g.names()})
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IrrepDoc {
    degree: usize,
    matrices: Vec<Vec<Vec<JsonScalar>>>,
}

/// An irrep table in whichever backend its entries call for.
#[derive(Debug, Clone)]
pub enum AnyIrrepTable {
    Exact(IrrepTable<Rat>),
    Complex(IrrepTable<Complex64>),
}

fn convert_irreps<S: ScalarJson>(docs: &[IrrepDoc]) -> Result<Vec<Irrep<S>>> {
    let mut out = Vec::with_capacity(docs.len());
    for (i, doc) in docs.iter().enumerate() {
        let mut matrices = Vec::with_capacity(doc.matrices.len());
        for (g, rows) in doc.matrices.iter().enumerate() {
            let path = format!("[{i}].matrices[{g}]");
            if rows.len() != doc.degree || rows.iter().any(|r| r.len() != doc.degree) {
                return Err(json_error(
                    path,
                    format!("expected a {0}x{0} matrix", doc.degree),
                ));
            }
            let rows = rows
                .iter()
                .enumerate()
                .map(|(r, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(c, x)| S::from_json_scalar(x, &format!("{path}[{r}][{c}]")))
                        .collect::<Result<Vec<S>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            matrices.push(SMat::from_rows(rows).expect("checked square"));
        }
        out.push(Irrep {
            degree: doc.degree,
            matrices,
        });
    }
    Ok(out)
}

/// Parses an irrep list; the exact backend is used unless some entry is a
/// `{"re", "im"}` pair.
pub fn irreps_from_json(text: &str, group: FiniteGroup) -> Result<AnyIrrepTable> {
    let docs: Vec<IrrepDoc> = from_str_with_path(text)?;
    let complex = docs
        .iter()
        .flat_map(|d| d.matrices.iter().flatten().flatten())
        .any(JsonScalar::is_complex);
    if complex {
        Ok(AnyIrrepTable::Complex(IrrepTable::new(
            group,
            convert_irreps(&docs)?,
        )?))
    } else {
        Ok(AnyIrrepTable::Exact(IrrepTable::new(
            group,
            convert_irreps(&docs)?,
        )?))
    }
}

pub fn irreps_to_json<S: ScalarJson>(t: &IrrepTable<S>) -> Value {
    let irreps: Vec<Value> = t
        .irreps()
        .iter()
        .map(|r| json!({"degree": r.degree, "matrices": r.matrices.iter().map(smat_to_json).collect::<Vec<_>>()}))
        .collect();
    Value::Array(irreps)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctionDoc {
    values: Vec<JsonScalar>,
}

/// Raw function values; convert with [`function_for`].
#[derive(Debug, Clone)]
pub struct FunctionValues(Vec<JsonScalar>);

pub fn function_from_json(text: &str) -> Result<FunctionValues> {
    let doc: FunctionDoc = from_str_with_path(text)?;
    Ok(FunctionValues(doc.values))
}

/// Converts parsed values into the backend of `table`.
pub fn function_for<S: ScalarJson>(
    values: &FunctionValues,
    table: &IrrepTable<S>,
) -> Result<GroupFunction<S>> {
    if values.0.len() != table.group().order() {
        return Err(json_error(
            "values",
            format!(
                "{} values for a group of order {}",
                values.0.len(),
                table.group().order()
            ),
        ));
    }
    let values = values
        .0
        .iter()
        .enumerate()
        .map(|(i, x)| S::from_json_scalar(x, &format!("values[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupFunction::new(values))
}

pub fn function_to_json<S: ScalarJson>(f: &GroupFunction<S>) -> Value {
    json!({"values": f.values.iter().map(S::to_json).collect::<Vec<_>>()})
}

pub fn smat_to_json<S: ScalarJson>(m: &SMat<S>) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(S::to_json).collect()))
            .collect(),
    )
}

pub fn dual_to_json<S: ScalarJson>(d: &DualElement<S>) -> Value {
    json!({"blocks": d.blocks.iter().map(smat_to_json).collect::<Vec<_>>()})
}

pub fn parseval_to_json<S: ScalarJson>(p: &ParsevalResult<S>) -> Value {
    json!({"direct": p.direct.to_json(), "spectral": p.spectral.to_json(), "equal": p.equal})
}

pub fn poisson_to_json<S: ScalarJson>(p: &PoissonReport<S>) -> Value {
    json!({"lhs": p.lhs.to_json(), "rhs": p.rhs.to_json(), "equal": p.equal, "quotient_irreps": p.quotient_irreps})
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_det;

    #[test]
    fn poly_roundtrip() {
        let p = poly_det(2);
        let text = poly_to_json(&p).to_string();
        assert!(text.contains("\"x12\":1"));
        assert_eq!(poly_from_json(&text).unwrap(), p);
        let q = poly_from_json(
            r#"{"n": 2, "terms": [{"coeff": "-1/2", "exps": {"x1_2": 2}}, {"coeff": 3}]}"#,
        )
        .unwrap();
        assert_eq!(q.num_terms(), 2);
    }

    #[test]
    fn poly_errors_name_the_path() {
        let err = poly_from_json(
            r#"{"n": 2, "terms": [{"coeff": "1", "exps": {}}, {"coeff": "x/2", "exps": {}}]}"#,
        )
        .unwrap_err();
        assert!(
            matches!(&err, Error::Json { path, .. } if path.starts_with("terms[1].coeff")),
            "{err}"
        );
        let err = poly_from_json(r#"{"n": 2, "terms": [{"coeff": "1", "exps": {"x31": 1}}]}"#)
            .unwrap_err();
        assert!(
            matches!(&err, Error::Json { path, .. } if path == "terms[0].exps.x31"),
            "{err}"
        );
        let err = poly_from_json(r#"{"n": 2, "terms": [{"coeff": "1", "exps": {"x11": -1}}]}"#)
            .unwrap_err();
        assert!(
            matches!(&err, Error::Json { path, .. } if path.contains("terms[0].exps")),
            "{err}"
        );
        assert!(matches!(
            poly_from_json("{\"n\": 2}"),
            Err(Error::Json { .. })
        ));
    }

    #[test]
    fn tensor_roundtrip() {
        let t = Tensor::basis_tensor(2, &[0, 1]).scale(&Rat::new(1, 3));
        let back = tensor_from_json(&tensor_to_json(&t).to_string()).unwrap();
        assert_eq!(back, t);
        let err = tensor_from_json(r#"{"dim": 2, "axes": ["v", "q"], "entries": []}"#).unwrap_err();
        assert!(matches!(err, Error::Json { ref path, .. } if path == "axes[1]"));
        assert!(tensor_from_json(r#"{"dim": 2, "axes": ["v"], "entries": ["1"]}"#).is_err());
    }

    #[test]
    fn group_and_irreps() {
        let g = group_from_json(r#"{"order": 2, "mul": [[0, 1], [1, 0]]}"#).unwrap();
        let t = irreps_from_json(r#"[{"degree": 1, "matrices": [[["1"]], [["1"]]]}, {"degree": 1, "matrices": [[["1"]], [["-1"]]]}]"#, g.clone()).unwrap();
        assert!(matches!(t, AnyIrrepTable::Exact(_)));
        let c = irreps_from_json(
            r#"[{"degree": 1, "matrices": [[[{"re": 1, "im": 0}]], [["1"]]]}, {"degree": 1, "matrices": [[["1"]], [["-1"]]]}]"#,
            g.clone(),
        )
        .unwrap();
        assert!(matches!(c, AnyIrrepTable::Complex(_)));
        let err = irreps_from_json(r#"[{"degree": 1, "matrices": [[["1"]], [["1", "2"]]]}]"#, g)
            .unwrap_err();
        assert!(
            matches!(err, Error::Json { ref path, .. } if path == "[0].matrices[1]"),
            "{err}"
        );
    }
}
