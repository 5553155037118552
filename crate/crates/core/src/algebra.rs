//! Finite-dimensional unital associative algebras given by structure
//! constants, their opposites and tensor products, and algebra morphisms.

use crate::diagram::{Identity, LinearMap, Side, SparseVec};
use crate::error::{Error, Result};
use crate::exactfield::{Field, Matrix, Scalar};
use crate::report::{Outcome, Report};

/// An algebra on `k^dim` with multiplication `e_i·e_j = Σ_k c_ij^k e_k`.
///
/// The multiplication is stored as a map with legs `[dim, dim] → [dim]` and
/// the unit as a map `[] → [dim]`. Equality compares structure only, not
/// labels.
#[derive(Clone, Debug)]
pub struct Algebra {
    label: String,
    dim: usize,
    mult: LinearMap,
    unit: LinearMap,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Algebra) -> bool {
        self.dim == other.dim && self.mult == other.mult && self.unit == other.unit
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Builds from `c[i][j][k]` and a unit vector; shapes are validated.
    pub fn from_constants(
        label: impl Into<String>,
        field: Field,
        c: &[Vec<Vec<Scalar>>],
        unit: &[Scalar],
    ) -> Result<Algebra> {
        let n = unit.len();
        if n == 0 {
            return Err(Error::Shape("an algebra needs dimension at least 1".into()));
        }
        if c.len() != n || c.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(Error::Shape(format!("structure constants must have shape {n}x{n}x{n}")));
        }
        for s in c.iter().flatten().flatten().chain(unit) {
            if s.field() != field {
                return Err(crate::exactfield::FieldError::Mismatch(field, s.field()).into());
            }
        }
        let mult = LinearMap::from_fn(field, &[n, n], &[n], |ij| {
            c[ij[0]][ij[1]]
                .iter()
                .enumerate()
                .map(|(k, v)| (vec![k], v.clone()))
                .collect()
        });
        Ok(Algebra {
            label: label.into(),
            dim: n,
            mult,
            unit: LinearMap::element(field, &[n], unit),
        })
    }

    pub fn from_maps(label: impl Into<String>, mult: LinearMap, unit: LinearMap) -> Result<Algebra> {
        let n = unit.out_size();
        if !unit.inputs().is_empty() || unit.outputs().len() != 1 {
            return Err(Error::Shape("unit must be a map from the ground field to A".into()));
        }
        if mult.inputs() != [n, n] || mult.outputs() != [n] {
            return Err(Error::Shape(format!(
                "multiplication must have legs [{n}, {n}] -> [{n}], got {:?} -> {:?}",
                mult.inputs(),
                mult.outputs()
            )));
        }
        if mult.field() != unit.field() {
            return Err(crate::exactfield::FieldError::Mismatch(mult.field(), unit.field()).into());
        }
        Ok(Algebra {
            label: label.into(),
            dim: n,
            mult,
            unit,
        })
    }

    /// Multiplication given on basis pairs; the unit is basis vector `unit`.
    pub fn from_basis_products(
        label: impl Into<String>,
        field: Field,
        dim: usize,
        unit: usize,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, Scalar)>,
    ) -> Algebra {
        let mult = LinearMap::from_fn(field, &[dim, dim], &[dim], |ij| {
            product(ij[0], ij[1]).into_iter().map(|(k, v)| (vec![k], v)).collect()
        });
        let mut u = vec![field.zero(); dim];
        u[unit] = field.one();
        Algebra {
            label: label.into(),
            dim,
            mult,
            unit: LinearMap::element(field, &[dim], &u),
        }
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Algebra {
        Algebra::from_basis_products("k", field, 1, 0, |_, _| vec![(0, field.one())])
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Algebra {
        self.label = label.into();
        self
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &LinearMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinearMap {
        &self.unit
    }

    pub fn unit_vector(&self) -> Vec<Scalar> {
        (0..self.dim).map(|i| self.unit.entry(i, 0)).collect()
    }

    /// Index of the unit if it is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let col = self.unit.column(0);
        match col {
            [(i, v)] if v.is_one() => Some(*i),
            _ => None,
        }
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.mult.entry(k, i * self.dim + j)
    }

    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| (0..self.dim).map(|k| self.structure_constant(i, j, k)).collect())
                    .collect()
            })
            .collect()
    }

    /// Bilinear extension of the multiplication to coefficient vectors.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::Shape(format!(
                "vectors of length {} and {} in an algebra of dimension {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let mut v = SparseVec::new();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                v.insert(i * self.dim + j, a * b);
            }
        }
        let out = self.mult.apply(&v);
        Ok((0..self.dim)
            .map(|k| out.get(&k).cloned().unwrap_or_else(|| self.field().zero()))
            .collect())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field().zero(); self.dim];
        v[i] = self.field().one();
        v
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim)
            .all(|i| (0..self.dim).all(|j| self.mult.column(i * self.dim + j) == self.mult.column(j * self.dim + i)))
    }
}

/// Unit laws and associativity on all basis elements.
pub fn check_algebra(a: &Algebra) -> Report {
    let n = a.dim();
    let f = a.field();
    let m = a.mult();
    let u = a.unit();
    let mut report = Report::new(format!("algebra {}", a.label()));
    report.push(
        Identity::new("unit.left", f)
            .input("x", n, "e")
            .lhs(
                Side::new()
                    .apply(u, &[], &["1"])
                    .apply(m, &["1", "x"], &["y"])
                    .output(&["y"]),
            )
            .rhs(Side::new().output(&["x"]))
            .symbols(&["e"])
            .verify(),
    );
    report.push(
        Identity::new("unit.right", f)
            .input("x", n, "e")
            .lhs(
                Side::new()
                    .apply(u, &[], &["1"])
                    .apply(m, &["x", "1"], &["y"])
                    .output(&["y"]),
            )
            .rhs(Side::new().output(&["x"]))
            .symbols(&["e"])
            .verify(),
    );
    report.push(
        Identity::new("assoc", f)
            .input("x", n, "e")
            .input("y", n, "e")
            .input("z", n, "e")
            .lhs(
                Side::new()
                    .apply(m, &["x", "y"], &["xy"])
                    .apply(m, &["xy", "z"], &["w"])
                    .output(&["w"]),
            )
            .rhs(
                Side::new()
                    .apply(m, &["y", "z"], &["yz"])
                    .apply(m, &["x", "yz"], &["w"])
                    .output(&["w"]),
            )
            .symbols(&["e"])
            .verify(),
    );
    report
}

/// `A^op`: `c^op_ij^k = c_ji^k`, same unit.
pub fn opposite(a: &Algebra) -> Algebra {
    let n = a.dim();
    let flip = LinearMap::flip(a.field(), n, n);
    Algebra {
        label: format!("{}^op", a.label()),
        dim: n,
        mult: a.mult().compose(&flip),
        unit: a.unit().clone(),
    }
}

/// The componentwise product on `A⊗B` with unit `1⊗1`.
pub fn tensor_algebra(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    if a.field() != b.field() {
        return Err(crate::exactfield::FieldError::Mismatch(a.field(), b.field()).into());
    }
    let (na, nb) = (a.dim(), b.dim());
    let mult = Side::new()
        .apply(a.mult(), &["a", "a'"], &["aa"])
        .apply(b.mult(), &["b", "b'"], &["bb"])
        .output(&["aa", "bb"])
        .tabulate(a.field(), &[("a", na), ("b", nb), ("a'", na), ("b'", nb)])
        .regroup(&[na * nb, na * nb], &[na * nb]);
    let unit = a.unit().tensor(b.unit()).regroup(&[], &[na * nb]);
    Algebra::from_maps(format!("{}⊗{}", a.label(), b.label()), mult, unit)
}

/// A linear map between algebras, to be checked for multiplicativity.
#[derive(Clone, Debug)]
pub struct AlgebraMorphism {
    pub source: Algebra,
    pub target: Algebra,
    map: LinearMap,
}

impl AlgebraMorphism {
    pub fn new(source: Algebra, target: Algebra, map: LinearMap) -> Result<AlgebraMorphism> {
        if map.in_size() != source.dim() || map.out_size() != target.dim() {
            return Err(Error::Shape(format!(
                "morphism matrix is {}x{} but algebras have dimensions {} -> {}",
                map.out_size(),
                map.in_size(),
                source.dim(),
                target.dim()
            )));
        }
        let map = map.regroup(&[source.dim()], &[target.dim()]);
        Ok(AlgebraMorphism { source, target, map })
    }

    pub fn from_matrix(source: Algebra, target: Algebra, m: &Matrix) -> Result<AlgebraMorphism> {
        let map = LinearMap::from_matrix(m, &[source.dim()], &[target.dim()])?;
        AlgebraMorphism::new(source, target, map)
    }

    pub fn identity(a: &Algebra) -> AlgebraMorphism {
        AlgebraMorphism {
            source: a.clone(),
            target: a.clone(),
            map: LinearMap::identity(a.field(), &[a.dim()]),
        }
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn matrix(&self) -> Matrix {
        self.map.to_matrix()
    }

    /// Multiplicativity, unit preservation and bijectivity.
    pub fn isomorphism_report(&self) -> Report {
        let mut r = check_morphism(self);
        let (n, m) = (self.source.dim(), self.target.dim());
        let rank = self.matrix().rank();
        r.push(Outcome::condition(
            "bijective",
            n == m && rank == n,
            format!("rank {rank}, dimensions {n} -> {m}"),
        ));
        r
    }

    pub fn is_isomorphism(&self) -> bool {
        self.isomorphism_report().passed()
    }
}

/// `f(1) = 1` and `f(xy) = f(x)f(y)` on all basis pairs.
pub fn check_morphism(m: &AlgebraMorphism) -> Report {
    let f = m.source.field();
    let n = m.source.dim();
    let mut report = Report::new(format!("morphism {} -> {}", m.source.label(), m.target.label()));
    report.push(
        Identity::new("unit", f)
            .lhs(
                Side::new()
                    .apply(m.source.unit(), &[], &["1"])
                    .apply(&m.map, &["1"], &["y"])
                    .output(&["y"]),
            )
            .rhs(Side::new().apply(m.target.unit(), &[], &["y"]).output(&["y"]))
            .symbols(&["e"])
            .verify(),
    );
    report.push(
        Identity::new("mult", f)
            .input("x", n, "e")
            .input("y", n, "e")
            .lhs(
                Side::new()
                    .apply(m.source.mult(), &["x", "y"], &["xy"])
                    .apply(&m.map, &["xy"], &["z"])
                    .output(&["z"]),
            )
            .rhs(
                Side::new()
                    .apply(&m.map, &["x"], &["fx"])
                    .apply(&m.map, &["y"], &["fy"])
                    .apply(m.target.mult(), &["fx", "fy"], &["z"])
                    .output(&["z"]),
            )
            .symbols(&["e"])
            .verify(),
    );
    report
}

/// Multiplication tables and units compared basis pair by basis pair.
pub fn compare_tables(label: &str, left: &Algebra, right: &Algebra) -> Report {
    let mut r = Report::new(format!("{} = {}", left.label(), right.label()));
    if left.dim() != right.dim() {
        r.push(Outcome::condition(
            label,
            false,
            format!("dimensions {} and {}", left.dim(), right.dim()),
        ));
        return r;
    }
    r.push(crate::diagram::compare_maps(
        label,
        left.mult(),
        right.mult(),
        &[("x", "e"), ("y", "e")],
        &["e"],
    ));
    r.push(Outcome::condition(
        format!("{label}.unit"),
        left.unit() == right.unit(),
        "unit vectors",
    ));
    r
}
