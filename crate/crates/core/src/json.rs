//! JSON encodings. Vertex indices are 1-based on the wire and 0-based in
//! memory; objects are written with sorted keys.

use std::str::FromStr;

use num::complex::Complex64;
use num::{BigRational, Complex, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::charpoly::{IsolatedVertexReport, ProductReport, UniPoly};
use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::parity::{
    Certificate, ColoringObstruction, ColoringOutcome, OddColoring, OddTransversal,
    TransversalObstruction, TransversalOutcome,
};
use crate::scalar::Scalar;
use crate::spectra::{EigenKind, EigenPair, PerronResult, SymmetryReport};
use crate::tensor::{CubicalTensor, TensorError};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{0}")]
    Schema(String),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

fn schema<T>(msg: impl Into<String>) -> Result<T, JsonError> {
    Err(JsonError::Schema(msg.into()))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, JsonError> {
    v.get(key)
        .ok_or_else(|| JsonError::Schema(format!("missing field \"{key}\"")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, JsonError> {
    v.as_u64()
        .map(|u| u as usize)
        .ok_or_else(|| JsonError::Schema(format!("{what} must be a nonnegative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, JsonError> {
    v.as_array()
        .ok_or_else(|| JsonError::Schema(format!("{what} must be an array")))
}

fn as_f64(v: &Value, what: &str) -> Result<f64, JsonError> {
    v.as_f64()
        .ok_or_else(|| JsonError::Schema(format!("{what} must be a number")))
}

/// 1-based index list to 0-based.
fn indices(v: &Value, what: &str) -> Result<Vec<usize>, JsonError> {
    as_array(v, what)?
        .iter()
        .map(|i| match as_usize(i, what)? {
            0 => schema(format!("{what}: indices are 1-based")),
            k => Ok(k - 1),
        })
        .collect()
}

fn one_based(v: &[usize]) -> Value {
    Value::from(v.iter().map(|&i| i + 1).collect::<Vec<_>>())
}

pub fn parse_rational(s: &str) -> Result<BigRational, JsonError> {
    BigRational::from_str(s.trim()).map_err(|_| JsonError::Schema(format!("bad rational \"{s}\"")))
}

pub fn rational_string(q: &BigRational) -> String {
    q.to_string()
}

fn complex_value(c: Complex64) -> Value {
    // adding 0.0 turns -0.0 into 0.0
    json!([c.re + 0.0, c.im + 0.0])
}

fn parse_complex(v: &Value, what: &str) -> Result<Complex64, JsonError> {
    match v.as_array().map(Vec::as_slice) {
        Some([re, im]) => Ok(Complex64::new(as_f64(re, what)?, as_f64(im, what)?)),
        _ => schema(format!("{what} must be [re, im]")),
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Exact(z) if z.im.is_zero() => Value::from(rational_string(&z.re)),
        Scalar::Exact(z) => json!([rational_string(&z.re), rational_string(&z.im)]),
        Scalar::Float(c) => complex_value(*c),
    }
}

/// Accepts `"p/q"`, `["p/q", "p/q"]`, `[re, im]` and bare numbers. Pairs
/// and numbers that are integers are read as exact values.
pub fn scalar_from_json(v: &Value) -> Result<Scalar, JsonError> {
    let exact_int = |x: &Value| x.as_i64().map(|i| BigRational::from_integer(i.into()));
    match v {
        Value::String(s) => Ok(Scalar::rational(parse_rational(s)?)),
        Value::Number(_) => match exact_int(v) {
            Some(q) => Ok(Scalar::rational(q)),
            None => Ok(Scalar::float(as_f64(v, "entry value")?, 0.0)),
        },
        Value::Array(pair) if pair.len() == 2 => match (&pair[0], &pair[1]) {
            (Value::String(re), Value::String(im)) => Ok(Scalar::Exact(Complex::new(
                parse_rational(re)?,
                parse_rational(im)?,
            ))),
            (re, im) => match (exact_int(re), exact_int(im)) {
                (Some(re), Some(im)) => Ok(Scalar::Exact(Complex::new(re, im))),
                _ => Ok(Scalar::float(
                    as_f64(re, "entry value")?,
                    as_f64(im, "entry value")?,
                )),
            },
        },
        _ => schema("entry value must be \"p/q\", [re, im] or a number"),
    }
}

pub fn tensor_to_json(a: &CubicalTensor) -> Value {
    let entries: Vec<Value> = a
        .entries()
        .map(|(t, v)| json!({"i": one_based(t), "v": scalar_to_json(v)}))
        .collect();
    json!({"r": a.r(), "n": a.n(), "entries": entries})
}

pub fn tensor_from_json(v: &Value) -> Result<CubicalTensor, JsonError> {
    let r = as_usize(field(v, "r")?, "r")?;
    let n = as_usize(field(v, "n")?, "n")?;
    let mut entries = Vec::new();
    for e in as_array(field(v, "entries")?, "entries")? {
        entries.push((
            indices(field(e, "i")?, "entry index")?,
            scalar_from_json(field(e, "v")?)?,
        ));
    }
    Ok(CubicalTensor::new(r, n, entries)?)
}

pub fn hypergraph_to_json(g: &Hypergraph) -> Value {
    let edges: Vec<Value> = g.edges().map(one_based).collect();
    json!({"r": g.r(), "n": g.n(), "edges": edges})
}

pub fn hypergraph_from_json(v: &Value) -> Result<Hypergraph, JsonError> {
    let r = as_usize(field(v, "r")?, "r")?;
    let n = as_usize(field(v, "n")?, "n")?;
    let mut edges = Vec::new();
    for e in as_array(field(v, "edges")?, "edges")? {
        let edge = indices(e, "edge")?;
        if edge.windows(2).any(|w| w[0] >= w[1]) {
            return schema("edge vertex lists must be strictly increasing");
        }
        edges.push(edge);
    }
    Ok(Hypergraph::new(r, n, edges)?)
}

/// Either schema; a hypergraph becomes its adjacency tensor.
pub fn load_tensor(v: &Value) -> Result<CubicalTensor, JsonError> {
    if v.get("edges").is_some() {
        Ok(hypergraph_from_json(v)?.adjacency_tensor())
    } else {
        tensor_from_json(v)
    }
}

pub fn certificate_to_json(c: &Certificate) -> Value {
    match c {
        Certificate::Coloring(phi) => json!({"kind": "odd-coloring", "r": phi.r, "phi": phi.phi}),
        Certificate::Transversal(x) => {
            json!({"kind": "odd-transversal", "X": one_based(&x.members)})
        }
    }
}

pub fn certificate_from_json(v: &Value) -> Result<Certificate, JsonError> {
    match field(v, "kind")?.as_str() {
        Some("odd-coloring") => {
            let r = as_usize(field(v, "r")?, "r")?;
            if r == 0 {
                return schema("r must be positive");
            }
            let phi = as_array(field(v, "phi")?, "phi")?
                .iter()
                .map(|p| {
                    p.as_u64()
                        .ok_or_else(|| JsonError::Schema("phi entries must be residues".into()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Certificate::Coloring(OddColoring::new(r, phi)))
        }
        Some("odd-transversal") => Ok(Certificate::Transversal(OddTransversal::new(indices(
            field(v, "X")?,
            "X",
        )?))),
        _ => schema("kind must be \"odd-coloring\" or \"odd-transversal\""),
    }
}

fn coloring_obstruction_to_json(w: &ColoringObstruction) -> Value {
    let combination: Vec<Value> = w
        .combination
        .iter()
        .map(|(t, c)| json!({"i": one_based(t), "w": c}))
        .collect();
    json!({"modulus": w.modulus, "combination": combination})
}

fn transversal_obstruction_to_json(w: &TransversalObstruction) -> Value {
    let patterns: Vec<Value> = w.patterns.iter().map(|t| one_based(t)).collect();
    json!({"patterns": patterns})
}

pub fn coloring_outcome_to_json(o: &ColoringOutcome) -> Value {
    match o {
        ColoringOutcome::Feasible(phi) => {
            json!({"feasible": true, "certificate": certificate_to_json(&Certificate::Coloring(phi.clone()))})
        }
        ColoringOutcome::Infeasible(w) => {
            json!({"feasible": false, "obstruction": coloring_obstruction_to_json(w)})
        }
    }
}

pub fn transversal_outcome_to_json(o: &TransversalOutcome) -> Value {
    match o {
        TransversalOutcome::Feasible(x) => {
            json!({"feasible": true, "certificate": certificate_to_json(&Certificate::Transversal(x.clone()))})
        }
        TransversalOutcome::Infeasible(w) => {
            json!({"feasible": false, "obstruction": transversal_obstruction_to_json(w)})
        }
    }
}

pub fn eigenpair_to_json(p: &EigenPair) -> Value {
    let x: Vec<Value> = p.x.iter().map(|&c| complex_value(c)).collect();
    let kind = match p.kind {
        EigenKind::General => "general",
        EigenKind::H => "H",
    };
    json!({"lambda": complex_value(p.lambda), "x": x, "residual": p.residual, "kind": kind})
}

/// Reads `lambda` and `x`; `residual` and `kind` are ignored since they
/// only mean something relative to a tensor.
pub fn eigenpair_from_json(v: &Value) -> Result<(Complex64, Vec<Complex64>), JsonError> {
    let lambda = parse_complex(field(v, "lambda")?, "lambda")?;
    let x = as_array(field(v, "x")?, "x")?
        .iter()
        .map(|c| parse_complex(c, "x entry"))
        .collect::<Result<_, _>>()?;
    Ok((lambda, x))
}

pub fn perron_to_json(p: &PerronResult) -> Value {
    let mut v = eigenpair_to_json(&p.pair);
    let obj = v.as_object_mut().expect("object");
    obj.insert("lower".into(), p.lower.into());
    obj.insert("upper".into(), p.upper.into());
    obj.insert("iterations".into(), p.iterations.into());
    v
}

pub fn poly_to_json(p: &UniPoly) -> Value {
    json!({"degree": p.degree(), "coeffs": p.coeff_strings()})
}

pub fn poly_from_json(v: &Value) -> Result<UniPoly, JsonError> {
    let coeffs = as_array(field(v, "coeffs")?, "coeffs")?
        .iter()
        .map(|c| {
            c.as_str()
                .ok_or_else(|| JsonError::Schema("coeffs must be strings".into()))
                .and_then(parse_rational)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let p = UniPoly::new(coeffs);
    if let Some(d) = v.get("degree").filter(|d| !d.is_null()) {
        if d.as_u64().map(|d| d as usize) != p.degree() {
            return schema("degree does not match coeffs");
        }
    }
    Ok(p)
}

pub fn symmetry_report_to_json(rep: &SymmetryReport) -> Value {
    let witness: Vec<Value> = rep
        .witness_pairs
        .iter()
        .map(|w| {
            json!({
                "vertices": one_based(&w.vertices),
                "perron": eigenpair_to_json(&w.perron),
                "negated": eigenpair_to_json(&w.negated),
            })
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("symmetric".into(), rep.symmetric.into());
    obj.insert("branch".into(), rep.branch.as_str().into());
    obj.insert(
        "certificate".into(),
        rep.certificate.as_ref().map_or(Value::Null, |phi| {
            certificate_to_json(&Certificate::Coloring(phi.clone()))
        }),
    );
    if let Some(w) = &rep.obstruction {
        obj.insert("obstruction".into(), coloring_obstruction_to_json(w));
    }
    obj.insert("witness_pairs".into(), witness.into());
    Value::Object(obj)
}

pub fn product_report_to_json(rep: &ProductReport) -> Value {
    let factors: Vec<Value> = rep
        .factors
        .iter()
        .map(|f| json!({"vertices": one_based(&f.vertices), "charpoly": poly_to_json(&f.charpoly), "exponent": f.exponent}))
        .collect();
    json!({"equal": rep.equal, "lhs": poly_to_json(&rep.lhs), "rhs": poly_to_json(&rep.rhs), "factors": factors})
}

pub fn isolated_report_to_json(rep: &IsolatedVertexReport) -> Value {
    let nonzero: Vec<Value> = rep
        .nonzero
        .iter()
        .map(|m| {
            json!({
                "factor": poly_to_json(&m.factor),
                "before": m.before,
                "after": m.after,
                "product_formula": m.product_formula,
                "power_rule": m.power_rule,
            })
        })
        .collect();
    json!({
        "r": rep.r,
        "n": rep.n,
        "before": poly_to_json(&rep.before),
        "after": poly_to_json(&rep.after),
        "zero_before": rep.zero_before,
        "zero_after": rep.zero_after,
        "zero_product_formula": rep.zero_product_formula,
        "zero_power_rule": rep.zero_power_rule,
        "nonzero": nonzero,
        "product_formula_holds": rep.product_formula_holds,
        "power_rule_holds": rep.power_rule_holds,
    })
}

/// Compact JSON with sorted keys and a trailing newline.
pub fn to_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_round_trip() {
        let a = CubicalTensor::new(
            3,
            2,
            vec![
                (vec![1, 0, 1], Scalar::ratio(-3, 4)),
                (vec![0, 0, 0], Scalar::float(0.25, -1.5)),
                (
                    vec![0, 1, 1],
                    Scalar::Exact(Complex::new(
                        BigRational::from_integer(2.into()),
                        BigRational::new(1.into(), 3.into()),
                    )),
                ),
            ],
        )
        .unwrap();
        let v = tensor_to_json(&a);
        let text = to_line(&v);
        assert!(text.starts_with("{\"entries\":[{\"i\":[1,1,1],\"v\":[0.25,-1.5]}"));
        let back = tensor_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn tensor_reader_variants() {
        let v: Value = serde_json::from_str(
            r#"{"r":2,"n":2,"entries":[{"i":[2,1],"v":[1,0]},{"i":[1,2],"v":"1/2"},{"i":[2,2],"v":0.5},{"i":[1,1],"v":["1","-1"]}]}"#,
        )
        .unwrap();
        let a = tensor_from_json(&v).unwrap();
        assert_eq!(a.get(&[1, 0]), Some(&Scalar::int(1)));
        assert!(a.get(&[1, 0]).unwrap().is_exact());
        assert_eq!(a.get(&[0, 1]), Some(&Scalar::ratio(1, 2)));
        assert!(!a.get(&[1, 1]).unwrap().is_exact());
        assert!(a.get(&[0, 0]).unwrap().is_exact());
        let bad: Value =
            serde_json::from_str(r#"{"r":2,"n":2,"entries":[{"i":[0,1],"v":"1"}]}"#).unwrap();
        assert!(matches!(tensor_from_json(&bad), Err(JsonError::Schema(_))));
        let far: Value =
            serde_json::from_str(r#"{"r":2,"n":2,"entries":[{"i":[3,1],"v":"1"}]}"#).unwrap();
        assert!(matches!(tensor_from_json(&far), Err(JsonError::Tensor(_))));
    }

    #[test]
    fn hypergraph_round_trip() {
        let g = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let v = hypergraph_to_json(&g);
        assert_eq!(
            to_line(&v),
            "{\"edges\":[[1,2,3],[3,4,5]],\"n\":5,\"r\":3}\n"
        );
        assert_eq!(hypergraph_from_json(&v).unwrap(), g);
        assert_eq!(load_tensor(&v).unwrap(), g.adjacency_tensor());
        let unsorted: Value = serde_json::from_str(r#"{"r":2,"n":2,"edges":[[2,1]]}"#).unwrap();
        assert!(hypergraph_from_json(&unsorted).is_err());
    }

    #[test]
    fn certificate_round_trip() {
        let c = Certificate::Coloring(OddColoring::new(4, vec![1, 3, 0]));
        assert_eq!(
            to_line(&certificate_to_json(&c)),
            "{\"kind\":\"odd-coloring\",\"phi\":[1,3,0],\"r\":4}\n"
        );
        assert_eq!(certificate_from_json(&certificate_to_json(&c)).unwrap(), c);
        let x = Certificate::Transversal(OddTransversal::new([4, 0]));
        assert_eq!(
            to_line(&certificate_to_json(&x)),
            "{\"X\":[1,5],\"kind\":\"odd-transversal\"}\n"
        );
        assert_eq!(certificate_from_json(&certificate_to_json(&x)).unwrap(), x);
    }

    #[test]
    fn poly_and_pair_round_trip() {
        let p = UniPoly::new(vec![
            BigRational::new((-1).into(), 2.into()),
            BigRational::zero(),
            BigRational::from_integer(1.into()),
        ]);
        let v = poly_to_json(&p);
        assert_eq!(
            to_line(&v),
            "{\"coeffs\":[\"-1/2\",\"0\",\"1\"],\"degree\":2}\n"
        );
        assert_eq!(poly_from_json(&v).unwrap(), p);

        let k2 = Hypergraph::new(2, 2, vec![vec![0, 1]])
            .unwrap()
            .adjacency_tensor();
        let pair = EigenPair::from_real(&k2, 1.0, &[1.0, 1.0]).unwrap();
        let v = eigenpair_to_json(&pair);
        assert_eq!(
            to_line(&v),
            "{\"kind\":\"H\",\"lambda\":[1.0,0.0],\"residual\":0.0,\"x\":[[1.0,0.0],[1.0,0.0]]}\n"
        );
        assert_eq!(eigenpair_from_json(&v).unwrap(), (pair.lambda, pair.x));
    }
}
