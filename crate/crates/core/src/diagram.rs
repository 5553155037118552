//! Multi-legged linear maps and the wiring engine that evaluates identities
//! between compositions of them.
//!
//! Every structure map in the crate (multiplications, units, twisting maps,
//! coactions, cocycle elements) is a [`LinearMap`] with a list of input legs
//! and output legs. A [`Side`] threads named wires through a sequence of such
//! maps; an [`Identity`] compares two sides on every basis assignment of its
//! input wires and reports the lexicographically first mismatch.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::exactfield::{Field, Matrix, MatrixError, Scalar, TensorShape};
use crate::report::{Outcome, Witness};

/// Sparse vector over a flat tensor index.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// A linear map `V₁⊗…⊗V_m → W₁⊗…⊗W_n` stored column by column.
///
/// Column `j` is the image of the basis tensor with flat index `j`; entries are
/// kept sorted by output index with zeros removed, so structural equality is
/// matrix equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    field: Field,
    inputs: Vec<usize>,
    outputs: Vec<usize>,
    columns: Vec<Vec<(usize, Scalar)>>,
}

fn normalize(entries: impl IntoIterator<Item = (usize, Scalar)>, field: Field) -> Vec<(usize, Scalar)> {
    let mut acc: SparseVec = BTreeMap::new();
    for (i, v) in entries {
        let slot = acc.entry(i).or_insert_with(|| field.zero());
        *slot = &*slot + &v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl LinearMap {
    pub fn from_fn(
        field: Field,
        inputs: &[usize],
        outputs: &[usize],
        mut column: impl FnMut(&[usize]) -> Vec<(Vec<usize>, Scalar)>,
    ) -> LinearMap {
        let in_shape = TensorShape::new(inputs.to_vec());
        let out_shape = TensorShape::new(outputs.to_vec());
        let columns = (0..in_shape.size())
            .map(|j| {
                let multi = in_shape.multi_index(j);
                let entries = column(&multi)
                    .into_iter()
                    .map(|(idx, v)| (out_shape.flat_index(&idx), v));
                normalize(entries, field)
            })
            .collect();
        LinearMap {
            field,
            inputs: inputs.to_vec(),
            outputs: outputs.to_vec(),
            columns,
        }
    }

    pub fn from_columns(field: Field, inputs: &[usize], outputs: &[usize], columns: Vec<SparseVec>) -> LinearMap {
        debug_assert_eq!(columns.len(), inputs.iter().product::<usize>());
        LinearMap {
            field,
            inputs: inputs.to_vec(),
            outputs: outputs.to_vec(),
            columns: columns.into_iter().map(|c| normalize(c, field)).collect(),
        }
    }

    pub fn from_matrix(m: &Matrix, inputs: &[usize], outputs: &[usize]) -> Result<LinearMap, MatrixError> {
        let rows: usize = outputs.iter().product();
        let cols: usize = inputs.iter().product();
        if (m.rows(), m.cols()) != (rows, cols) {
            return Err(MatrixError::Dimensions(format!(
                "expected a {rows}x{cols} matrix for legs {inputs:?} -> {outputs:?}, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let columns = (0..cols)
            .map(|c| {
                (0..rows)
                    .filter(|&r| !m.get(r, c).is_zero())
                    .map(|r| (r, m.get(r, c).clone()))
                    .collect()
            })
            .collect();
        Ok(LinearMap {
            field: m.field(),
            inputs: inputs.to_vec(),
            outputs: outputs.to_vec(),
            columns,
        })
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.out_size(), self.in_size());
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    pub fn identity(field: Field, dims: &[usize]) -> LinearMap {
        let n: usize = dims.iter().product();
        LinearMap {
            field,
            inputs: dims.to_vec(),
            outputs: dims.to_vec(),
            columns: (0..n).map(|i| vec![(i, field.one())]).collect(),
        }
    }

    /// The element `v` of `W₁⊗…⊗W_n` as a map from the ground field.
    pub fn element(field: Field, dims: &[usize], v: &[Scalar]) -> LinearMap {
        LinearMap::from_columns(field, &[], dims, vec![v.iter().cloned().enumerate().collect()])
    }

    /// A linear functional `V₁⊗…⊗V_m → k` given by its values on basis tensors.
    pub fn functional(field: Field, dims: &[usize], values: &[Scalar]) -> LinearMap {
        LinearMap::from_columns(
            field,
            dims,
            &[],
            values
                .iter()
                .map(|v| std::iter::once((0, v.clone())).collect())
                .collect(),
        )
    }

    /// The symmetry `x⊗y ↦ y⊗x` for `x ∈ V` of dimension `m`, `y ∈ W` of dimension `n`.
    pub fn flip(field: Field, m: usize, n: usize) -> LinearMap {
        LinearMap::from_fn(field, &[m, n], &[n, m], |ix| vec![(vec![ix[1], ix[0]], field.one())])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn inputs(&self) -> &[usize] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[usize] {
        &self.outputs
    }

    pub fn in_size(&self) -> usize {
        self.inputs.iter().product()
    }

    pub fn out_size(&self) -> usize {
        self.outputs.iter().product()
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.columns[j]
    }

    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        self.columns[col]
            .iter()
            .find(|(r, _)| *r == row)
            .map_or_else(|| self.field.zero(), |(_, v)| v.clone())
    }

    /// The only value of a map with no input and no output legs.
    pub fn scalar(&self) -> Scalar {
        self.entry(0, 0)
    }

    /// Same matrix, different leg grouping (sizes must agree).
    pub fn regroup(&self, inputs: &[usize], outputs: &[usize]) -> LinearMap {
        assert_eq!(inputs.iter().product::<usize>(), self.in_size(), "regroup inputs");
        assert_eq!(outputs.iter().product::<usize>(), self.out_size(), "regroup outputs");
        LinearMap {
            field: self.field,
            inputs: inputs.to_vec(),
            outputs: outputs.to_vec(),
            columns: self.columns.clone(),
        }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: SparseVec = BTreeMap::new();
        for (j, c) in v {
            for (i, m) in &self.columns[*j] {
                let slot = acc.entry(*i).or_insert_with(|| self.field.zero());
                *slot = &*slot + &(c * m);
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.in_size(), other.out_size(), "composition sizes");
        let columns = other
            .columns
            .iter()
            .map(|col| self.apply(&col.iter().cloned().collect()))
            .collect();
        LinearMap::from_columns(self.field, &other.inputs, &self.outputs, columns)
    }

    /// `self ⊗ other` with legs concatenated.
    pub fn tensor(&self, other: &LinearMap) -> LinearMap {
        let inputs: Vec<usize> = self.inputs.iter().chain(&other.inputs).copied().collect();
        let outputs: Vec<usize> = self.outputs.iter().chain(&other.outputs).copied().collect();
        let on = other.out_size();
        let in_other = other.in_size();
        let columns = (0..self.in_size() * in_other)
            .map(|j| {
                let (j1, j2) = (j / in_other, j % in_other);
                let mut col = SparseVec::new();
                for (i1, v1) in &self.columns[j1] {
                    for (i2, v2) in &other.columns[j2] {
                        col.insert(i1 * on + i2, v1 * v2);
                    }
                }
                col
            })
            .collect();
        LinearMap::from_columns(self.field, &inputs, &outputs, columns)
    }

    pub fn is_identity(&self) -> bool {
        self.in_size() == self.out_size()
            && self
                .columns
                .iter()
                .enumerate()
                .all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    pub fn inverse(&self) -> Result<LinearMap, MatrixError> {
        let inv = self.to_matrix().inverse()?;
        LinearMap::from_matrix(&inv, &self.outputs, &self.inputs)
    }
}

struct Step<'m> {
    map: &'m LinearMap,
    ins: Vec<String>,
    outs: Vec<String>,
}

/// A string diagram: named wires threaded through a sequence of maps.
///
/// Each `apply` consumes the listed wires (in the map's input-leg order) and
/// creates new wires for its outputs. `output` fixes which wires, in which
/// order, form the result; every live wire must be listed.
#[derive(Default)]
pub struct Side<'m> {
    steps: Vec<Step<'m>>,
    output: Vec<String>,
}

struct Compiled<'m> {
    steps: Vec<CompiledStep<'m>>,
    perm: Vec<usize>,
    out_dims: Vec<usize>,
}

struct CompiledStep<'m> {
    map: &'m LinearMap,
    in_pos: Vec<usize>,
    kept: Vec<usize>,
}

impl<'m> Side<'m> {
    pub fn new() -> Side<'m> {
        Side::default()
    }

    pub fn apply(mut self, map: &'m LinearMap, ins: &[&str], outs: &[&str]) -> Side<'m> {
        self.steps.push(Step {
            map,
            ins: ins.iter().map(|s| s.to_string()).collect(),
            outs: outs.iter().map(|s| s.to_string()).collect(),
        });
        self
    }

    pub fn output(mut self, names: &[&str]) -> Side<'m> {
        self.output = names.iter().map(|s| s.to_string()).collect();
        self
    }

    fn compile(&self, inputs: &[(String, usize)]) -> Compiled<'m> {
        let mut layout: Vec<(String, usize)> = inputs.to_vec();
        let mut steps = Vec::with_capacity(self.steps.len());
        for (n, step) in self.steps.iter().enumerate() {
            assert_eq!(
                step.ins.len(),
                step.map.inputs().len(),
                "step {n}: {} wires for {} input legs",
                step.ins.len(),
                step.map.inputs().len()
            );
            assert_eq!(step.outs.len(), step.map.outputs().len(), "step {n}: output arity");
            let in_pos: Vec<usize> = step
                .ins
                .iter()
                .zip(step.map.inputs())
                .map(|(w, &d)| {
                    let p = layout
                        .iter()
                        .position(|(name, _)| name == w)
                        .unwrap_or_else(|| panic!("step {n}: no live wire {w:?}"));
                    assert_eq!(layout[p].1, d, "step {n}: wire {w:?} has the wrong dimension");
                    p
                })
                .collect();
            let kept: Vec<usize> = (0..layout.len()).filter(|p| !in_pos.contains(p)).collect();
            let mut next: Vec<(String, usize)> = kept.iter().map(|&p| layout[p].clone()).collect();
            for (w, &d) in step.outs.iter().zip(step.map.outputs()) {
                assert!(
                    next.iter().all(|(name, _)| name != w),
                    "step {n}: wire {w:?} already live"
                );
                next.push((w.clone(), d));
            }
            layout = next;
            steps.push(CompiledStep {
                map: step.map,
                in_pos,
                kept,
            });
        }
        assert_eq!(self.output.len(), layout.len(), "every live wire must be an output");
        let perm: Vec<usize> = self
            .output
            .iter()
            .map(|w| {
                layout
                    .iter()
                    .position(|(name, _)| name == w)
                    .unwrap_or_else(|| panic!("output wire {w:?} is not live"))
            })
            .collect();
        let out_dims = perm.iter().map(|&p| layout[p].1).collect();
        Compiled { steps, perm, out_dims }
    }

    /// Tabulates the diagram as a map with the given input wires.
    pub fn tabulate(&self, field: Field, inputs: &[(&str, usize)]) -> LinearMap {
        let wires: Vec<(String, usize)> = inputs.iter().map(|(n, d)| (n.to_string(), *d)).collect();
        let compiled = self.compile(&wires);
        let in_dims: Vec<usize> = inputs.iter().map(|(_, d)| *d).collect();
        let shape = TensorShape::new(in_dims.clone());
        let columns: Vec<SparseVec> = (0..shape.size())
            .into_par_iter()
            .map(|j| compiled.evaluate(field, shape.multi_index(j)))
            .collect();
        LinearMap::from_columns(field, &in_dims, &compiled.out_dims, columns)
    }
}

impl Compiled<'_> {
    fn evaluate(&self, field: Field, start: Vec<usize>) -> SparseVec {
        let mut terms: Vec<(Vec<usize>, Scalar)> = vec![(start, field.one())];
        for step in &self.steps {
            let in_shape = TensorShape::new(step.map.inputs().to_vec());
            let out_shape = TensorShape::new(step.map.outputs().to_vec());
            let mut acc: HashMap<Vec<usize>, Scalar> = HashMap::new();
            for (idx, coef) in &terms {
                let sel: Vec<usize> = step.in_pos.iter().map(|&p| idx[p]).collect();
                for (o, v) in step.map.column(in_shape.flat_index(&sel)) {
                    let mut next: Vec<usize> = step.kept.iter().map(|&p| idx[p]).collect();
                    next.extend(out_shape.multi_index(*o));
                    let c = coef * v;
                    match acc.get_mut(&next) {
                        Some(slot) => *slot = &*slot + &c,
                        None => {
                            acc.insert(next, c);
                        }
                    }
                }
            }
            terms = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        let out_shape = TensorShape::new(self.out_dims.clone());
        let mut out = SparseVec::new();
        for (idx, coef) in terms {
            let ordered: Vec<usize> = self.perm.iter().map(|&p| idx[p]).collect();
            let slot = out
                .entry(out_shape.flat_index(&ordered))
                .or_insert_with(|| field.zero());
            *slot = &*slot + &coef;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

/// An input wire of an [`Identity`]: name, dimension and basis symbol.
#[derive(Clone, Debug)]
pub struct Wire {
    pub name: String,
    pub dim: usize,
    pub symbol: String,
}

/// An equation between two diagrams, checked on every basis assignment.
pub struct Identity<'m> {
    label: String,
    field: Field,
    inputs: Vec<Wire>,
    lhs: Side<'m>,
    rhs: Side<'m>,
    symbols: Vec<String>,
}

impl<'m> Identity<'m> {
    pub fn new(label: impl Into<String>, field: Field) -> Identity<'m> {
        Identity {
            label: label.into(),
            field,
            inputs: Vec::new(),
            lhs: Side::new(),
            rhs: Side::new(),
            symbols: Vec::new(),
        }
    }

    pub fn input(mut self, name: &str, dim: usize, symbol: &str) -> Identity<'m> {
        self.inputs.push(Wire {
            name: name.to_string(),
            dim,
            symbol: symbol.to_string(),
        });
        self
    }

    pub fn lhs(mut self, side: Side<'m>) -> Identity<'m> {
        self.lhs = side;
        self
    }

    pub fn rhs(mut self, side: Side<'m>) -> Identity<'m> {
        self.rhs = side;
        self
    }

    /// Basis symbols for the output legs, used when printing witnesses.
    pub fn symbols(mut self, symbols: &[&str]) -> Identity<'m> {
        self.symbols = symbols.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn verify(&self) -> Outcome {
        let wires: Vec<(String, usize)> = self.inputs.iter().map(|w| (w.name.clone(), w.dim)).collect();
        let lhs = self.lhs.compile(&wires);
        let rhs = self.rhs.compile(&wires);
        assert_eq!(
            lhs.out_dims, rhs.out_dims,
            "{}: sides have different output legs",
            self.label
        );
        let shape = TensorShape::new(self.inputs.iter().map(|w| w.dim).collect::<Vec<_>>());
        let total = shape.size();
        let field = self.field;
        let failures: Vec<bool> = (0..total)
            .into_par_iter()
            .map(|j| {
                let start = shape.multi_index(j);
                lhs.evaluate(field, start.clone()) != rhs.evaluate(field, start)
            })
            .collect();
        let violations = failures.iter().filter(|f| **f).count();
        let witness = failures.iter().position(|f| *f).map(|j| {
            let start = shape.multi_index(j);
            let l = lhs.evaluate(field, start.clone());
            let r = rhs.evaluate(field, start.clone());
            Witness {
                assignment: self
                    .inputs
                    .iter()
                    .zip(&start)
                    .map(|(w, i)| (w.name.clone(), format!("{}{}", w.symbol, i)))
                    .collect(),
                lhs: self.render(&l, &lhs.out_dims),
                rhs: self.render(&r, &lhs.out_dims),
            }
        });
        Outcome {
            label: self.label.clone(),
            checked: total as u64,
            violations: violations as u64,
            witness,
            note: None,
        }
    }

    fn render(&self, v: &SparseVec, dims: &[usize]) -> String {
        render_vector(v, dims, &self.symbols)
    }
}

/// Formats a sparse tensor as a sum of basis tensors, e.g. `2·e1⊗f0 + e0⊗f1`.
pub fn render_vector(v: &SparseVec, dims: &[usize], symbols: &[String]) -> String {
    if v.is_empty() {
        return "0".to_string();
    }
    let shape = TensorShape::new(dims.to_vec());
    let terms: Vec<String> = v
        .iter()
        .map(|(flat, c)| {
            let basis: Vec<String> = shape
                .multi_index(*flat)
                .iter()
                .enumerate()
                .map(|(leg, i)| {
                    let sym = symbols.get(leg).map_or("v", String::as_str);
                    format!("{sym}{i}")
                })
                .collect();
            let basis = if basis.is_empty() {
                "1".to_string()
            } else {
                basis.join("⊗")
            };
            if c.is_one() {
                basis
            } else if (-c).is_one() {
                format!("-{basis}")
            } else {
                format!("{c}·{basis}")
            }
        })
        .collect();
    terms.join(" + ")
}

/// Compares two maps with the same legs as an identity, so that a mismatch
/// is reported with the first differing input basis tensor.
pub fn compare_maps(
    label: &str,
    left: &LinearMap,
    right: &LinearMap,
    names: &[(&str, &str)],
    symbols: &[&str],
) -> Outcome {
    assert_eq!(left.inputs(), right.inputs(), "{label}: input legs differ");
    assert_eq!(left.outputs(), right.outputs(), "{label}: output legs differ");
    let ins: Vec<&str> = names.iter().map(|(n, _)| *n).collect();
    let outs: Vec<String> = (0..left.outputs().len()).map(|i| format!("out{i}")).collect();
    let outs: Vec<&str> = outs.iter().map(String::as_str).collect();
    let mut id = Identity::new(label, left.field())
        .lhs(Side::new().apply(left, &ins, &outs).output(&outs))
        .rhs(Side::new().apply(right, &ins, &outs).output(&outs))
        .symbols(symbols);
    for ((name, symbol), dim) in names.iter().zip(left.inputs()) {
        id = id.input(name, *dim, symbol);
    }
    id.verify()
}
