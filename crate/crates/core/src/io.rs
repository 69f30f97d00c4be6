//! JSON files for rings, modules and computed data.
//!
//! Canonical text is compact JSON with sorted keys, integers reduced into
//! `[0, p)`, and a trailing newline. Input may use any key order and any
//! integer representatives.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::module::{from_presentation, FiniteModule, Presentation};
use crate::resolution::MinimalFreeResolution;
use crate::ring::{validate_general_algebra, RMatrix, ShortGorensteinRing};
use crate::series::{RationalityCertificate, TruncatedIntegerSeries};

/// Compact JSON with sorted keys and a trailing newline.
pub fn canonical(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Any serializable value through [`canonical`].
pub fn to_canonical<T: Serialize>(v: &T) -> String {
    canonical(&serde_json::to_value(v).expect("reports serialize to JSON"))
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::schema("", format!("{}: invalid JSON: {e}", path.display())))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn big_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => match u64::try_from(v) {
            Ok(x) => json!(x),
            Err(_) => json!(v.to_string()),
        },
    }
}

fn object<'a>(v: &'a Value, ptr: &str, keys: &[&str]) -> Result<&'a Map<String, Value>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::schema(ptr, "expected an object"))?;
    if let Some(k) = obj.keys().find(|k| !keys.contains(&k.as_str())) {
        return Err(Error::schema(format!("{ptr}/{k}"), "unknown field"));
    }
    Ok(obj)
}

fn field<'a>(obj: &'a Map<String, Value>, ptr: &str, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::schema(format!("{ptr}/{key}"), "missing field"))
}

fn int(v: &Value, ptr: &str) -> Result<i64> {
    v.as_i64()
        .ok_or_else(|| Error::schema(ptr, "expected an integer"))
}

fn uint(v: &Value, ptr: &str) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| Error::schema(ptr, "expected a nonnegative integer"))
}

fn array<'a>(v: &'a Value, ptr: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::schema(ptr, "expected an array"))
}

fn int_vec(v: &Value, ptr: &str, len: Option<usize>) -> Result<Vec<i64>> {
    let a = array(v, ptr)?;
    if let Some(n) = len {
        if a.len() != n {
            return Err(Error::schema(
                ptr,
                format!("expected {n} integers, got {}", a.len()),
            ));
        }
    }
    a.iter()
        .enumerate()
        .map(|(i, x)| int(x, &format!("{ptr}/{i}")))
        .collect()
}

/// `{"p", "e", "form"}`.
pub fn ring_to_json(r: &ShortGorensteinRing) -> Value {
    json!({"p": r.p(), "e": r.e(), "form": r.form().to_rows()})
}

/// Accepts `{"p", "e", "form"}` or `{"p", "structure"}` with structure
/// constants `structure[a][b][c]`.
pub fn parse_ring(v: &Value, ptr: &str) -> Result<ShortGorensteinRing> {
    let obj = object(v, ptr, &["p", "e", "form", "structure"])?;
    let p = uint(field(obj, ptr, "p")?, &format!("{ptr}/p"))?;
    if let Some(s) = obj.get("structure") {
        let sp = format!("{ptr}/structure");
        let n = array(s, &sp)?.len();
        let mut table = Vec::with_capacity(n);
        for (a, row) in array(s, &sp)?.iter().enumerate() {
            let rp = format!("{sp}/{a}");
            let cols = array(row, &rp)?;
            if cols.len() != n {
                return Err(Error::schema(
                    rp,
                    format!("expected {n} entries, got {}", cols.len()),
                ));
            }
            let mut out = Vec::with_capacity(n);
            for (b, c) in cols.iter().enumerate() {
                let v = int_vec(c, &format!("{rp}/{b}"), Some(n))?;
                out.push(
                    v.iter()
                        .map(|&x| x.rem_euclid(p.max(1) as i64) as u32)
                        .collect(),
                );
            }
            table.push(out);
        }
        let ring = validate_general_algebra(p, &table)?;
        if let Some(e) = obj.get("e") {
            if uint(e, &format!("{ptr}/e"))? as usize != ring.e() {
                return Err(Error::schema(
                    format!("{ptr}/e"),
                    "does not match the structure constants",
                ));
            }
        }
        return Ok(ring);
    }
    let e = uint(field(obj, ptr, "e")?, &format!("{ptr}/e"))? as usize;
    let fp = format!("{ptr}/form");
    let rows = array(field(obj, ptr, "form")?, &fp)?;
    if rows.len() != e {
        return Err(Error::schema(
            fp,
            format!("expected {e} rows, got {}", rows.len()),
        ));
    }
    let form = rows
        .iter()
        .enumerate()
        .map(|(i, r)| int_vec(r, &format!("{fp}/{i}"), Some(e)))
        .collect::<Result<Vec<_>>>()?;
    ShortGorensteinRing::new(p, e, &form)
}

pub fn load_ring(path: &Path) -> Result<ShortGorensteinRing> {
    parse_ring(&read_json(path)?, "")
}

/// How a module file names its ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingRef {
    Inline,
    Path(String),
}

/// A module file: ring plus presentation matrix (rows are generators).
#[derive(Clone, Debug)]
pub struct ModuleDoc {
    pub ring_ref: RingRef,
    pub presentation: Presentation,
}

impl ModuleDoc {
    pub fn inline(presentation: Presentation) -> Self {
        ModuleDoc {
            ring_ref: RingRef::Inline,
            presentation,
        }
    }

    pub fn ring(&self) -> &ShortGorensteinRing {
        self.presentation.ring()
    }

    pub fn module(&self) -> FiniteModule {
        from_presentation(&self.presentation).0
    }

    pub fn to_json(&self) -> Value {
        let ring = match &self.ring_ref {
            RingRef::Inline => ring_to_json(self.ring()),
            RingRef::Path(p) => json!(p),
        };
        json!({"ring": ring, "presentation": self.presentation.matrix.to_nested()})
    }
}

fn parse_element_matrix(ring: &ShortGorensteinRing, v: &Value, ptr: &str) -> Result<RMatrix> {
    let e2 = ring.dim();
    let rows = array(v, ptr)?;
    let cols = rows
        .first()
        .map(|r| array(r, &format!("{ptr}/0")).map(|a| a.len()))
        .transpose()?
        .unwrap_or(0);
    let mut mat = RMatrix::zeros(ring, rows.len(), cols);
    let f = ring.field();
    for (i, row) in rows.iter().enumerate() {
        let rp = format!("{ptr}/{i}");
        let entries = array(row, &rp)?;
        if entries.len() != cols {
            return Err(Error::schema(
                rp,
                format!("expected {cols} entries like row 0, got {}", entries.len()),
            ));
        }
        for (j, x) in entries.iter().enumerate() {
            let c = int_vec(x, &format!("{rp}/{j}"), Some(e2))?;
            let c: Vec<u32> = c.iter().map(|&v| f.reduce(v)).collect();
            mat.set_coeffs(i, j, &c);
        }
    }
    Ok(mat)
}

/// `base` is the directory that relative ring paths are resolved against.
pub fn parse_module(v: &Value, base: Option<&Path>) -> Result<ModuleDoc> {
    let obj = object(v, "", &["ring", "presentation"])?;
    let rv = field(obj, "", "ring")?;
    let (ring, ring_ref) = match rv {
        Value::String(s) => {
            let path = base.map_or_else(|| PathBuf::from(s), |b| b.join(s));
            let ring = load_ring(&path).map_err(|err| match err {
                Error::Schema { pointer, message } => Error::schema(
                    "/ring",
                    format!("in {}: {message} at {pointer:?}", path.display()),
                ),
                other => other,
            })?;
            (ring, RingRef::Path(s.clone()))
        }
        other => (parse_ring(other, "/ring")?, RingRef::Inline),
    };
    let matrix = parse_element_matrix(&ring, field(obj, "", "presentation")?, "/presentation")?;
    Ok(ModuleDoc {
        ring_ref,
        presentation: Presentation::new(matrix),
    })
}

pub fn load_module(path: &Path) -> Result<ModuleDoc> {
    parse_module(&read_json(path)?, path.parent())
}

/// Betti numbers and differentials `∂_1..∂_n` as nested element arrays.
pub fn resolution_to_json(res: &MinimalFreeResolution, n: usize) -> Value {
    let n = n.min(res.length());
    json!({
        "betti": &res.betti()[..=n],
        "differentials": (1..=n).map(|i| res.differential(i).to_nested()).collect::<Vec<_>>(),
    })
}

pub fn certificate_to_json(c: &RationalityCertificate) -> Value {
    json!({
        "s": c.s,
        "numerator": c.numerator.iter().map(big_json).collect::<Vec<_>>(),
        "e": c.e,
    })
}

/// `{"kind", "coefficients", "certificate"}`.
pub fn series_to_json(s: &TruncatedIntegerSeries, cert: Option<&RationalityCertificate>) -> Value {
    json!({
        "kind": s.kind.as_str(),
        "coefficients": s.coefficients.iter().map(big_json).collect::<Vec<_>>(),
        "certificate": cert.map(certificate_to_json),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r3_text() -> &'static str {
        "{\"e\":3,\"form\":[[1,0,0],[0,1,0],[0,0,1]],\"p\":101}\n"
    }

    #[test]
    fn ring_round_trip() {
        let v: Value = serde_json::from_str(r3_text()).unwrap();
        let r = parse_ring(&v, "").unwrap();
        assert_eq!(canonical(&ring_to_json(&r)), r3_text());
        let shuffled: Value =
            serde_json::from_str("{\"p\":101,\"form\":[[1,0,0],[0,-100,0],[0,0,1]],\"e\":3}")
                .unwrap();
        assert_eq!(
            canonical(&ring_to_json(&parse_ring(&shuffled, "").unwrap())),
            r3_text()
        );
    }

    #[test]
    fn ring_errors() {
        let v: Value = serde_json::from_str("{\"p\":101,\"e\":2,\"form\":[[1,1],[1,1]]}").unwrap();
        assert_eq!(parse_ring(&v, "").unwrap_err(), Error::Degenerate);
        let v: Value = serde_json::from_str("{\"p\":101,\"e\":2,\"form\":[[1,0],[0]]}").unwrap();
        assert!(
            matches!(parse_ring(&v, "").unwrap_err(), Error::Schema { pointer, .. } if pointer == "/form/1")
        );
    }

    #[test]
    fn module_pointer_on_bad_element() {
        let text = r#"{"ring":{"p":101,"e":3,"form":[[1,0,0],[0,1,0],[0,0,1]]},
            "presentation":[[[0,1,0,0,0],[0,0,1,0,0,7]]]}"#;
        let v: Value = serde_json::from_str(text).unwrap();
        let err = parse_module(&v, None).unwrap_err();
        assert!(
            matches!(err, Error::Schema { ref pointer, .. } if pointer == "/presentation/0/1"),
            "{err}"
        );
    }

    #[test]
    fn module_round_trip_and_ring_path() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("r3.json"), r3_text()).unwrap();
        let text = "{\"presentation\":[[[0,1,0,0,0]]],\"ring\":\"r3.json\"}\n";
        let path = dir.path().join("m1.json");
        fs::write(&path, text).unwrap();
        let doc = load_module(&path).unwrap();
        assert_eq!(doc.module().dim(), 3);
        assert_eq!(canonical(&doc.to_json()), text);
    }
}
