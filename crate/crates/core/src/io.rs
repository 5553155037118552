//! JSON documents.
//!
//! A document is one object `{"field": "Q" | "F<p>", "blocks": [...]}`. Each
//! block carries a `"kind"` and a `"label"`; composite blocks refer to earlier
//! blocks by label. A bare algebra object (`field`, `dim`, `unit`, `mult`,
//! without `blocks`) is accepted as a one-block document.
//!
//! | kind | fields |
//! |---|---|
//! | `algebra` | `dim`, `unit`, `mult` with `mult[i][j][k] = c_ij^k` |
//! | `bialgebra` | algebra fields, `comult` (n²×n), `counit` |
//! | `hopf` | bialgebra fields, `antipode`, optional `antipode_inv` |
//! | `R`, `Q` | `a`, `b`, `shape`, `matrix` |
//! | `T` | `algebra`, `shape`, `matrix` |
//! | `lrpair` | `r`, `q` |
//! | `bimodule`, `bicomodule` | `h`, `algebra`, `left`, `right` |
//! | `ydl` | `bimodule`, `bicomodule` |
//! | `cocycle` | `h`, `F`, `F_inv` (n²-vectors) |
//! | `twistdata` | `pair`, `mu_l`, `mu_r`, `rho_r`, `rho_l`, `lambda_r`, `lambda_l` |
//! | `triple` | `p1`, `p2`, `p3` |
//!
//! Matrices are lists of rows in the row-major tensor ordering; scalars are
//! strings such as `"-3/4"` or JSON integers. `twisting`, `qmap` and `twistor`
//! are accepted as aliases of `R`, `Q` and `T`.

use std::collections::HashMap;

use serde::Deserialize;
use serde_json::value::RawValue;
use serde_json::{json, Map, Value};

use crate::algebra::Algebra;
use crate::catalog::Payload;
use crate::diagram::LinearMap;
use crate::error::{Error, Result};
use crate::exactfield::{Field, Matrix, Scalar};
use crate::hopf::{Bialgebra, BicomoduleAlgebra, BimoduleAlgebra, HopfAlgebra, YDLAlgebra};
use crate::invariance::{Cocycle, SixMaps, TwistData};
use crate::iterate::TripleData;
use crate::twisted::{LRPair, QMap, TwistingMap, Twistor};

/// A parsed document: its field and the blocks in file order.
#[derive(Clone, Debug)]
pub struct Document {
    pub field: Field,
    pub items: Vec<(String, Payload)>,
}

impl Document {
    pub fn get(&self, label: &str) -> Option<&Payload> {
        self.items.iter().find(|(l, _)| l == label).map(|(_, p)| p)
    }

    /// The last block, which by convention is the document's subject.
    pub fn last(&self) -> Option<&(String, Payload)> {
        self.items.last()
    }

    /// The last block of the given kind.
    pub fn last_of(&self, kind: &str) -> Option<&(String, Payload)> {
        self.items.iter().rev().find(|(_, p)| p.kind() == kind)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Text(String),
}

type Rows = Vec<Vec<Num>>;

#[derive(Deserialize)]
struct AlgebraFields {
    dim: usize,
    unit: Vec<Num>,
    mult: Vec<Vec<Vec<Num>>>,
}

#[derive(Deserialize)]
#[serde(tag = "kind")]
enum Block {
    #[serde(rename = "algebra")]
    Algebra {
        label: String,
        #[serde(flatten)]
        alg: AlgebraFields,
    },
    #[serde(rename = "bialgebra")]
    Bialgebra {
        label: String,
        #[serde(flatten)]
        alg: AlgebraFields,
        comult: Rows,
        counit: Vec<Num>,
    },
    #[serde(rename = "hopf")]
    Hopf {
        label: String,
        #[serde(flatten)]
        alg: AlgebraFields,
        comult: Rows,
        counit: Vec<Num>,
        antipode: Rows,
        antipode_inv: Option<Rows>,
    },
    #[serde(rename = "R", alias = "twisting")]
    R {
        label: String,
        a: String,
        b: String,
        shape: Option<Vec<usize>>,
        matrix: Rows,
    },
    #[serde(rename = "Q", alias = "qmap")]
    Q {
        label: String,
        a: String,
        b: String,
        shape: Option<Vec<usize>>,
        matrix: Rows,
    },
    #[serde(rename = "T", alias = "twistor")]
    T {
        label: String,
        algebra: String,
        shape: Option<Vec<usize>>,
        matrix: Rows,
    },
    #[serde(rename = "lrpair")]
    LRPair { label: String, r: String, q: String },
    #[serde(rename = "bimodule")]
    Bimodule {
        label: String,
        h: String,
        algebra: String,
        left: Rows,
        right: Rows,
    },
    #[serde(rename = "bicomodule")]
    Bicomodule {
        label: String,
        h: String,
        algebra: String,
        left: Rows,
        right: Rows,
    },
    #[serde(rename = "ydl")]
    Ydl {
        label: String,
        bimodule: String,
        bicomodule: String,
    },
    #[serde(rename = "cocycle")]
    Cocycle {
        label: String,
        h: String,
        #[serde(rename = "F")]
        f: Vec<Num>,
        #[serde(rename = "F_inv")]
        f_inv: Vec<Num>,
    },
    #[serde(rename = "twistdata")]
    TwistData {
        label: String,
        pair: String,
        mu_l: Rows,
        mu_r: Rows,
        rho_r: Rows,
        rho_l: Rows,
        lambda_r: Rows,
        lambda_l: Rows,
    },
    #[serde(rename = "triple")]
    Triple {
        label: String,
        p1: String,
        p2: String,
        p3: String,
    },
}

impl Block {
    fn label(&self) -> &str {
        match self {
            Block::Algebra { label, .. }
            | Block::Bialgebra { label, .. }
            | Block::Hopf { label, .. }
            | Block::R { label, .. }
            | Block::Q { label, .. }
            | Block::T { label, .. }
            | Block::LRPair { label, .. }
            | Block::Bimodule { label, .. }
            | Block::Bicomodule { label, .. }
            | Block::Ydl { label, .. }
            | Block::Cocycle { label, .. }
            | Block::TwistData { label, .. }
            | Block::Triple { label, .. } => label,
        }
    }
}

#[derive(Deserialize)]
struct Container<'a> {
    field: String,
    #[serde(borrow)]
    blocks: Option<Vec<&'a RawValue>>,
}

/// 1-based line and column of a byte offset.
fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn located(line: usize, column: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}, column {column}: {msg}"))
}

fn json_error(e: &serde_json::Error, base: (usize, usize)) -> Error {
    let text = e.to_string();
    let msg = text.rsplit_once(" at line ").map_or(text.as_str(), |(m, _)| m);
    let (line, column) = if e.line() <= 1 {
        (base.0, base.1 + e.column().saturating_sub(1))
    } else {
        (base.0 + e.line() - 1, e.column())
    };
    located(line, column, msg)
}

/// Parses a document; errors carry the line and column of the offending
/// token or block.
pub fn parse_document(text: &str) -> Result<Document> {
    let container: Container = serde_json::from_str(text).map_err(|e| json_error(&e, (1, 1)))?;
    let field: Field = container.field.parse().map_err(|e| located(1, 1, e))?;
    let mut reader = Reader {
        field,
        items: Vec::new(),
        index: HashMap::new(),
    };
    match container.blocks {
        Some(blocks) => {
            for raw in blocks {
                let offset = raw.get().as_ptr() as usize - text.as_ptr() as usize;
                let base = position(text, offset);
                let block: Block = serde_json::from_str(raw.get()).map_err(|e| json_error(&e, base))?;
                reader.add(block).map_err(|e| located(base.0, base.1, e))?;
            }
        }
        None => {
            let alg: AlgebraFields = serde_json::from_str(text).map_err(|e| json_error(&e, (1, 1)))?;
            reader
                .add(Block::Algebra { label: "A".into(), alg })
                .map_err(|e| located(1, 1, e))?;
        }
    }
    Ok(Document {
        field,
        items: reader.items,
    })
}

struct Reader {
    field: Field,
    items: Vec<(String, Payload)>,
    index: HashMap<String, usize>,
}

fn wrong_kind(label: &str, want: &str, got: &Payload) -> Error {
    Error::Parse(format!("{label:?} is a {} block, expected {want}", got.kind()))
}

impl Reader {
    fn lookup(&self, label: &str) -> Result<&Payload> {
        self.index
            .get(label)
            .map(|&i| &self.items[i].1)
            .ok_or_else(|| Error::UnknownReference(label.to_string()))
    }

    fn algebra(&self, label: &str) -> Result<Algebra> {
        match self.lookup(label)? {
            Payload::Algebra(a) => Ok(a.clone()),
            Payload::Bialgebra(h) => Ok(h.alg().clone()),
            Payload::Hopf(h) => Ok(h.bialg().alg().clone()),
            other => Err(wrong_kind(label, "an algebra", other)),
        }
    }

    fn bialgebra(&self, label: &str) -> Result<Bialgebra> {
        match self.lookup(label)? {
            Payload::Bialgebra(h) => Ok(h.clone()),
            Payload::Hopf(h) => Ok(h.bialg().clone()),
            other => Err(wrong_kind(label, "a bialgebra", other)),
        }
    }

    fn pair(&self, label: &str) -> Result<LRPair> {
        match self.lookup(label)? {
            Payload::LRPair(p) => Ok(p.clone()),
            other => Err(wrong_kind(label, "an L-R pair", other)),
        }
    }

    fn scalar(&self, n: &Num) -> Result<Scalar> {
        Ok(match n {
            Num::Int(v) => self.field.from_i64(*v),
            Num::Text(t) => self.field.parse_scalar(t)?,
        })
    }

    fn vector(&self, v: &[Num]) -> Result<Vec<Scalar>> {
        v.iter().map(|n| self.scalar(n)).collect()
    }

    fn matrix(&self, rows: &Rows) -> Result<Matrix> {
        let rows = rows.iter().map(|r| self.vector(r)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(self.field, rows)?)
    }

    /// A flat map from a matrix; the structure constructors regroup the legs.
    fn map(&self, rows: &Rows, shape: Option<&[usize]>) -> Result<LinearMap> {
        let m = self.matrix(rows)?;
        if let Some(shape) = shape {
            if shape != [m.rows(), m.cols()] {
                return Err(Error::Shape(format!(
                    "declared shape {shape:?} but the matrix is {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(LinearMap::from_matrix(&m, &[m.cols()], &[m.rows()])?)
    }

    fn algebra_from(&self, label: &str, f: &AlgebraFields) -> Result<Algebra> {
        let unit = self.vector(&f.unit)?;
        if unit.len() != f.dim {
            return Err(Error::Shape(format!(
                "unit has length {}, expected dim = {}",
                unit.len(),
                f.dim
            )));
        }
        let mult = f
            .mult
            .iter()
            .map(|plane| plane.iter().map(|row| self.vector(row)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Algebra::from_constants(label, self.field, &mult, &unit)
    }

    fn bialgebra_from(&self, label: &str, f: &AlgebraFields, comult: &Rows, counit: &[Num]) -> Result<Bialgebra> {
        let alg = self.algebra_from(label, f)?;
        Bialgebra::from_matrices(alg, &self.matrix(comult)?, &self.vector(counit)?)
    }

    fn add(&mut self, block: Block) -> Result<()> {
        let label = block.label().to_string();
        if self.index.contains_key(&label) {
            return Err(Error::Parse(format!("duplicate label {label:?}")));
        }
        let payload = match &block {
            Block::Algebra { alg, .. } => Payload::Algebra(self.algebra_from(&label, alg)?),
            Block::Bialgebra {
                alg, comult, counit, ..
            } => Payload::Bialgebra(self.bialgebra_from(&label, alg, comult, counit)?),
            Block::Hopf {
                alg,
                comult,
                counit,
                antipode,
                antipode_inv,
                ..
            } => {
                let b = self.bialgebra_from(&label, alg, comult, counit)?;
                let s = self.map(antipode, None)?;
                let s_inv = antipode_inv.as_ref().map(|m| self.map(m, None)).transpose()?;
                Payload::Hopf(HopfAlgebra::new(b, s, s_inv)?)
            }
            Block::R {
                a, b, shape, matrix, ..
            } => {
                let map = self.map(matrix, shape.as_deref())?;
                Payload::Twisting(TwistingMap::new(&label, self.algebra(a)?, self.algebra(b)?, map)?)
            }
            Block::Q {
                a, b, shape, matrix, ..
            } => {
                let map = self.map(matrix, shape.as_deref())?;
                Payload::QMap(QMap::new(&label, self.algebra(a)?, self.algebra(b)?, map)?)
            }
            Block::T {
                algebra, shape, matrix, ..
            } => {
                let map = self.map(matrix, shape.as_deref())?;
                Payload::Twistor(Twistor::new(&label, self.algebra(algebra)?, map)?)
            }
            Block::LRPair { r, q, .. } => {
                let r = match self.lookup(r)? {
                    Payload::Twisting(m) => m.clone(),
                    other => return Err(wrong_kind(r, "an R map", other)),
                };
                let q = match self.lookup(q)? {
                    Payload::QMap(m) => m.clone(),
                    other => return Err(wrong_kind(q, "a Q map", other)),
                };
                Payload::LRPair(LRPair::new(&label, r, q)?)
            }
            Block::Bimodule {
                h,
                algebra,
                left,
                right,
                ..
            } => Payload::Bimodule(BimoduleAlgebra::new(
                self.bialgebra(h)?,
                self.algebra(algebra)?,
                self.map(left, None)?,
                self.map(right, None)?,
            )?),
            Block::Bicomodule {
                h,
                algebra,
                left,
                right,
                ..
            } => Payload::Bicomodule(BicomoduleAlgebra::new(
                self.bialgebra(h)?,
                self.algebra(algebra)?,
                self.map(left, None)?,
                self.map(right, None)?,
            )?),
            Block::Ydl {
                bimodule, bicomodule, ..
            } => {
                let m = match self.lookup(bimodule)? {
                    Payload::Bimodule(m) => m.clone(),
                    other => return Err(wrong_kind(bimodule, "a bimodule algebra", other)),
                };
                let c = match self.lookup(bicomodule)? {
                    Payload::Bicomodule(c) => c.clone(),
                    other => return Err(wrong_kind(bicomodule, "a bicomodule algebra", other)),
                };
                Payload::Ydl(YDLAlgebra::new(m, c)?)
            }
            Block::Cocycle { h, f, f_inv, .. } => Payload::Cocycle(Cocycle::new(
                self.bialgebra(h)?,
                &self.vector(f)?,
                &self.vector(f_inv)?,
            )?),
            Block::TwistData {
                pair,
                mu_l,
                mu_r,
                rho_r,
                rho_l,
                lambda_r,
                lambda_l,
                ..
            } => {
                let maps = SixMaps {
                    mu_l: self.map(mu_l, None)?,
                    mu_r: self.map(mu_r, None)?,
                    rho_r: self.map(rho_r, None)?,
                    rho_l: self.map(rho_l, None)?,
                    lambda_r: self.map(lambda_r, None)?,
                    lambda_l: self.map(lambda_l, None)?,
                };
                Payload::TwistData(TwistData::new(&label, self.pair(pair)?, maps)?)
            }
            Block::Triple { p1, p2, p3, .. } => {
                Payload::Triple(TripleData::new(&label, self.pair(p1)?, self.pair(p2)?, self.pair(p3)?)?)
            }
        };
        self.index.insert(label.clone(), self.items.len());
        self.items.push((label, payload));
        Ok(())
    }
}

/// Accumulates blocks, writing each dependency once. A label already taken
/// by a different block gets a numeric suffix.
struct Writer {
    field: Option<Field>,
    blocks: Vec<(String, Value)>,
}

fn text(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn vector(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(text).collect())
}

fn rows(m: &LinearMap) -> Value {
    let m = m.to_matrix();
    Value::Array((0..m.rows()).map(|r| vector(m.row(r))).collect())
}

fn nonempty(label: &str, fallback: &str) -> String {
    if label.is_empty() {
        fallback.to_string()
    } else {
        label.to_string()
    }
}

impl Writer {
    fn new() -> Writer {
        Writer {
            field: None,
            blocks: Vec::new(),
        }
    }

    fn push(&mut self, field: Field, label: &str, kind: &str, body: Map<String, Value>) -> Result<String> {
        match self.field {
            None => self.field = Some(field),
            Some(f) if f != field => {
                return Err(Error::Unsupported(format!(
                    "a document holds one field, got {f} and {field}"
                )));
            }
            Some(_) => {}
        }
        let block = |label: &str| {
            let mut b = Map::new();
            b.insert("kind".into(), json!(kind));
            b.insert("label".into(), json!(label));
            b.extend(body.clone());
            Value::Object(b)
        };
        for n in 1.. {
            let candidate = if n == 1 {
                label.to_string()
            } else {
                format!("{label}-{n}")
            };
            let value = block(&candidate);
            match self.blocks.iter().find(|(l, _)| *l == candidate) {
                Some((_, existing)) if *existing == value => return Ok(candidate),
                Some(_) => continue,
                None => {
                    self.blocks.push((candidate.clone(), value));
                    return Ok(candidate);
                }
            }
        }
        unreachable!("suffixes are unbounded")
    }

    fn algebra_body(a: &Algebra) -> Map<String, Value> {
        let mut b = Map::new();
        b.insert("dim".into(), json!(a.dim()));
        b.insert("unit".into(), vector(&a.unit_vector()));
        let mult = a
            .structure_constants()
            .iter()
            .map(|plane| Value::Array(plane.iter().map(|row| vector(row)).collect()))
            .collect();
        b.insert("mult".into(), Value::Array(mult));
        b
    }

    fn bialgebra_body(h: &Bialgebra) -> Map<String, Value> {
        let mut b = Writer::algebra_body(h.alg());
        b.insert("comult".into(), rows(h.comult()));
        let counit: Vec<Scalar> = (0..h.dim()).map(|i| h.counit().entry(0, i)).collect();
        b.insert("counit".into(), vector(&counit));
        b
    }

    fn algebra(&mut self, a: &Algebra) -> Result<String> {
        self.push(a.field(), &nonempty(a.label(), "A"), "algebra", Writer::algebra_body(a))
    }

    fn bialgebra(&mut self, h: &Bialgebra) -> Result<String> {
        self.push(
            h.field(),
            &nonempty(h.label(), "H"),
            "bialgebra",
            Writer::bialgebra_body(h),
        )
    }

    fn hopf(&mut self, h: &HopfAlgebra) -> Result<String> {
        let mut b = Writer::bialgebra_body(h.bialg());
        b.insert("antipode".into(), rows(h.antipode()));
        if let Some(s) = h.antipode_inv() {
            b.insert("antipode_inv".into(), rows(s));
        }
        self.push(h.bialg().field(), &nonempty(h.label(), "H"), "hopf", b)
    }

    fn map_body(map: &LinearMap) -> Map<String, Value> {
        let mut b = Map::new();
        b.insert("shape".into(), json!([map.out_size(), map.in_size()]));
        b.insert("matrix".into(), rows(map));
        b
    }

    fn two_sided(&mut self, a: &Algebra, b: &Algebra, map: &LinearMap) -> Result<Map<String, Value>> {
        let mut body = Map::new();
        body.insert("a".into(), json!(self.algebra(a)?));
        body.insert("b".into(), json!(self.algebra(b)?));
        body.extend(Writer::map_body(map));
        Ok(body)
    }

    fn twisting(&mut self, r: &TwistingMap) -> Result<String> {
        let body = self.two_sided(r.a(), r.b(), r.map())?;
        self.push(r.a().field(), &nonempty(r.label(), "R"), "R", body)
    }

    fn qmap(&mut self, q: &QMap) -> Result<String> {
        let body = self.two_sided(q.a(), q.b(), q.map())?;
        self.push(q.a().field(), &nonempty(q.label(), "Q"), "Q", body)
    }

    fn pair(&mut self, p: &LRPair) -> Result<String> {
        let mut body = Map::new();
        body.insert("r".into(), json!(self.twisting(&p.r)?));
        body.insert("q".into(), json!(self.qmap(&p.q)?));
        self.push(p.a().field(), &nonempty(p.label(), "pair"), "lrpair", body)
    }

    fn sided(&mut self, h: &Bialgebra, a: &Algebra, left: &LinearMap, right: &LinearMap) -> Result<Map<String, Value>> {
        let mut body = Map::new();
        body.insert("h".into(), json!(self.bialgebra(h)?));
        body.insert("algebra".into(), json!(self.algebra(a)?));
        body.insert("left".into(), rows(left));
        body.insert("right".into(), rows(right));
        Ok(body)
    }

    fn bimodule(&mut self, label: &str, m: &BimoduleAlgebra) -> Result<String> {
        let body = self.sided(m.h(), m.alg(), m.left(), m.right())?;
        self.push(m.alg().field(), label, "bimodule", body)
    }

    fn bicomodule(&mut self, label: &str, c: &BicomoduleAlgebra) -> Result<String> {
        let body = self.sided(c.h(), c.alg(), c.left(), c.right())?;
        self.push(c.alg().field(), label, "bicomodule", body)
    }

    fn payload(&mut self, label: &str, p: &Payload) -> Result<String> {
        match p {
            Payload::Algebra(a) => self.algebra(&a.clone().with_label(label)),
            Payload::Bialgebra(h) => self.bialgebra(h),
            Payload::Hopf(h) => self.hopf(h),
            Payload::Twisting(r) => self.twisting(r),
            Payload::QMap(q) => self.qmap(q),
            Payload::Twistor(t) => {
                let mut body = Map::new();
                body.insert("algebra".into(), json!(self.algebra(t.algebra())?));
                body.extend(Writer::map_body(t.map()));
                self.push(t.algebra().field(), &nonempty(t.label(), "T"), "T", body)
            }
            Payload::LRPair(pair) => self.pair(pair),
            Payload::Bimodule(m) => self.bimodule(label, m),
            Payload::Bicomodule(c) => self.bicomodule(label, c),
            Payload::Ydl(y) => {
                let mut body = Map::new();
                body.insert(
                    "bimodule".into(),
                    json!(self.bimodule(&format!("{label}.bimodule"), y.bimod())?),
                );
                body.insert(
                    "bicomodule".into(),
                    json!(self.bicomodule(&format!("{label}.bicomodule"), y.bicomod())?),
                );
                self.push(y.alg().field(), label, "ydl", body)
            }
            Payload::Cocycle(c) => {
                let mut body = Map::new();
                body.insert("h".into(), json!(self.bialgebra(c.h())?));
                body.insert("F".into(), vector(&c.f_vector()));
                body.insert("F_inv".into(), vector(&c.f_inv_vector()));
                self.push(c.h().field(), label, "cocycle", body)
            }
            Payload::TwistData(d) => {
                let mut body = Map::new();
                body.insert("pair".into(), json!(self.pair(d.pair())?));
                for (name, map) in [
                    ("mu_l", d.mu_l()),
                    ("mu_r", d.mu_r()),
                    ("rho_r", d.rho_r()),
                    ("rho_l", d.rho_l()),
                    ("lambda_r", d.lambda_r()),
                    ("lambda_l", d.lambda_l()),
                ] {
                    body.insert(name.into(), rows(map));
                }
                self.push(d.a().field(), &nonempty(d.label(), label), "twistdata", body)
            }
            Payload::Triple(t) => {
                let mut body = Map::new();
                body.insert("p1".into(), json!(self.pair(&t.p1)?));
                body.insert("p2".into(), json!(self.pair(&t.p2)?));
                body.insert("p3".into(), json!(self.pair(&t.p3)?));
                self.push(t.a().field(), &nonempty(t.label(), label), "triple", body)
            }
        }
    }

    fn finish(self) -> Value {
        let field = self.field.unwrap_or(Field::Rational);
        json!({
            "field": field.to_string(),
            "blocks": self.blocks.into_iter().map(|(_, b)| b).collect::<Vec<_>>(),
        })
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Writes the given structures and everything they refer to; the last
/// block of the output is the last structure given.
pub fn export_document(items: &[(&str, &Payload)]) -> Result<String> {
    let mut w = Writer::new();
    for (label, p) in items {
        w.payload(label, p)?;
    }
    Ok(pretty(&w.finish()))
}

pub fn export_payload(label: &str, p: &Payload) -> Result<String> {
    export_document(&[(label, p)])
}

/// `basis[i]·basis[j] = Σ c_ij^k basis[k]`, one line per nonzero product.
pub fn multiplication_table(a: &Algebra, basis: &[String]) -> Vec<String> {
    let c = a.structure_constants();
    let mut lines = Vec::new();
    for (i, plane) in c.iter().enumerate() {
        for (j, row) in plane.iter().enumerate() {
            let terms: Vec<String> = row
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| {
                    if v.is_one() {
                        basis[k].clone()
                    } else {
                        format!("({v}) {}", basis[k])
                    }
                })
                .collect();
            if !terms.is_empty() {
                lines.push(format!("{} · {} = {}", basis[i], basis[j], terms.join(" + ")));
            }
        }
    }
    lines
}

/// Basis names `e_i⊗f_j` of an `na·nb`-dimensional product, row-major.
pub fn product_basis(na: usize, nb: usize) -> Vec<String> {
    (0..na)
        .flat_map(|i| (0..nb).map(move |j| format!("e_{i}⊗f_{j}")))
        .collect()
}

/// An algebra block with a `"table"` member listing the products of the
/// named basis vectors, e.g. [`product_basis`].
pub fn export_product(label: &str, product: &Algebra, basis: &[String]) -> Result<String> {
    if basis.len() != product.dim() {
        return Err(Error::Shape(format!(
            "{} basis names for a {}-dimensional algebra",
            basis.len(),
            product.dim()
        )));
    }
    let mut w = Writer::new();
    let mut body = Writer::algebra_body(product);
    body.insert("table".into(), json!(multiplication_table(product, basis)));
    w.push(product.field(), label, "algebra", body)?;
    Ok(pretty(&w.finish()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Catalog};

    #[test]
    fn catalog_round_trip() {
        let cat = Catalog::load().unwrap();
        for e in cat.entries() {
            let first = export_payload(&e.id, &e.payload).unwrap();
            let doc = parse_document(&first).unwrap();
            let (_, back) = doc.last().unwrap();
            assert_eq!(back.kind(), e.payload.kind(), "{}", e.id);
            let second = export_payload(&e.id, back).unwrap();
            assert_eq!(first, second, "{}", e.id);
        }
    }

    #[test]
    fn round_trip_is_matrix_identical() {
        let h = catalog::sweedler_h4();
        let doc = parse_document(&export_payload("h4", &Payload::Hopf(h.clone())).unwrap()).unwrap();
        match doc.last().unwrap() {
            (_, Payload::Hopf(back)) => {
                assert_eq!(back, &h);
                assert_eq!(back.antipode().to_matrix(), h.antipode().to_matrix());
            }
            other => panic!("unexpected {}", other.1.kind()),
        }
        let p = catalog::smash_pair_h4();
        let doc = parse_document(&export_payload("p", &Payload::LRPair(p.clone())).unwrap()).unwrap();
        match doc.last().unwrap() {
            (_, Payload::LRPair(back)) => {
                assert_eq!(back.r.matrix(), p.r.matrix());
                assert_eq!(back.q.matrix(), p.q.matrix());
                assert_eq!(back.a(), p.a());
                assert_eq!(back.b(), p.b());
            }
            other => panic!("unexpected {}", other.1.kind()),
        }
    }

    #[test]
    fn bare_algebra_and_integer_scalars() {
        let text = r#"{"field": "F3", "dim": 2, "unit": [1, 0],
            "mult": [[[1, 0], [0, 1]], [[0, 1], ["4", "0"]]]}"#;
        let doc = parse_document(text).unwrap();
        match doc.last().unwrap() {
            (label, Payload::Algebra(a)) => {
                assert_eq!(label, "A");
                assert_eq!(a.field(), Field::Prime(3));
                assert!(a.structure_constant(1, 1, 0).is_one());
            }
            other => panic!("unexpected {}", other.1.kind()),
        }
    }

    #[test]
    fn errors_are_located() {
        let syntax = "{\"field\": \"Q\",\n \"blocks\": [\n  {\"kind\": \"algebra\" \"label\": \"A\"}]}";
        let e = parse_document(syntax).unwrap_err().to_string();
        assert!(e.contains("line 3, column 22"), "{e}");

        let text = "{\"field\": \"Q\", \"blocks\": [\n  {\"kind\": \"algebra\", \"label\": \"A\", \"dim\": 1, \"unit\": [1], \"mult\": [[[1]]]},\n  {\"kind\": \"R\", \"label\": \"R\", \"a\": \"A\", \"b\": \"B\", \"matrix\": [[1]]}]}";
        let e = parse_document(text).unwrap_err().to_string();
        assert!(e.contains("line 3, column 3") && e.contains("\"B\""), "{e}");

        let missing = "{\"field\": \"Q\", \"blocks\": [\n    {\"kind\": \"lrpair\", \"label\": \"p\", \"r\": \"R\"}]}";
        let e = parse_document(missing).unwrap_err().to_string();
        assert!(e.contains("line 2") && e.contains("`q`"), "{e}");

        let kind = "{\"field\": \"Q\", \"blocks\": [{\"kind\": \"monoid\", \"label\": \"M\"}]}";
        assert!(parse_document(kind).unwrap_err().to_string().contains("monoid"));

        let wrong = "{\"field\": \"Q\", \"blocks\": [\n  {\"kind\": \"algebra\", \"label\": \"A\", \"dim\": 1, \"unit\": [1], \"mult\": [[[1]]]},\n  {\"kind\": \"lrpair\", \"label\": \"p\", \"r\": \"A\", \"q\": \"A\"}]}";
        let e = parse_document(wrong).unwrap_err().to_string();
        assert!(e.contains("algebra block"), "{e}");
    }

    #[test]
    fn shape_and_duplicates_are_rejected() {
        let alg = "{\"kind\": \"algebra\", \"label\": \"A\", \"dim\": 1, \"unit\": [1], \"mult\": [[[1]]]}";
        let dup = format!("{{\"field\": \"Q\", \"blocks\": [{alg}, {alg}]}}");
        assert!(parse_document(&dup).unwrap_err().to_string().contains("duplicate"));
        let shape = format!(
            "{{\"field\": \"Q\", \"blocks\": [{alg}, {{\"kind\": \"R\", \"label\": \"R\", \"a\": \"A\", \"b\": \"A\", \"shape\": [2, 2], \"matrix\": [[1]]}}]}}"
        );
        assert!(parse_document(&shape)
            .unwrap_err()
            .to_string()
            .contains("declared shape"));
    }

    #[test]
    fn product_export_has_a_table() {
        let p = catalog::diagonal_pair(2, &Field::Rational.from_i64(2)).unwrap();
        let prod = crate::twisted::build_lr_product(&p).unwrap();
        let text = export_product("product", &prod, &product_basis(2, 2)).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        let table = v["blocks"][0]["table"].as_array().unwrap();
        assert!(
            table.iter().any(|l| l == "e_1⊗f_0 · e_0⊗f_1 = (2) e_1⊗f_1"),
            "{table:?}"
        );
        let doc = parse_document(&text).unwrap();
        match doc.last().unwrap() {
            (_, Payload::Algebra(a)) => assert_eq!(a, &prod),
            other => panic!("unexpected {}", other.1.kind()),
        }
    }
}
