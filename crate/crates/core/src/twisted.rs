//! Twisting maps `R: B⊗A → A⊗B`, Q-maps `Q: A⊗B → A⊗B`, L-R pairs and the
//! algebras they afford, together with twistors, the Q^op correspondence,
//! detwisting and morphisms of L-R-twisted tensor products.
//!
//! Wire conventions: `R(b⊗a) = a_R⊗b_R` has input legs `[dim B, dim A]` and
//! output legs `[dim A, dim B]`; `Q(a⊗b) = a_Q⊗b_Q` has legs `[dim A, dim B]`
//! on both sides. Basis symbols in witnesses are `e` for A and `f` for B.

use crate::algebra::{check_morphism, compare_tables, opposite, tensor_algebra, Algebra, AlgebraMorphism};
use crate::diagram::{compare_maps, Identity, LinearMap, Side};
use crate::error::{require, Error, Result};
use crate::exactfield::Matrix;
use crate::report::{Outcome, Report};

fn same_field(a: &Algebra, b: &Algebra) -> Result<()> {
    if a.field() != b.field() {
        return Err(crate::exactfield::FieldError::Mismatch(a.field(), b.field()).into());
    }
    Ok(())
}

/// `R: B⊗A → A⊗B`.
#[derive(Clone, Debug)]
pub struct TwistingMap {
    label: String,
    a: Algebra,
    b: Algebra,
    map: LinearMap,
}

impl TwistingMap {
    pub fn new(label: impl Into<String>, a: Algebra, b: Algebra, map: LinearMap) -> Result<TwistingMap> {
        same_field(&a, &b)?;
        let (na, nb) = (a.dim(), b.dim());
        if map.in_size() != na * nb || map.out_size() != na * nb {
            return Err(Error::Shape(format!(
                "R must be a {0}x{0} matrix for dimensions ({na}, {nb})",
                na * nb
            )));
        }
        let map = map.regroup(&[nb, na], &[na, nb]);
        Ok(TwistingMap {
            label: label.into(),
            a,
            b,
            map,
        })
    }

    pub fn from_matrix(label: impl Into<String>, a: Algebra, b: Algebra, m: &Matrix) -> Result<TwistingMap> {
        let map = LinearMap::from_matrix(m, &[b.dim(), a.dim()], &[a.dim(), b.dim()])?;
        TwistingMap::new(label, a, b, map)
    }

    /// `b⊗a ↦ a⊗b`, affording the ordinary tensor product.
    pub fn flip(a: &Algebra, b: &Algebra) -> TwistingMap {
        TwistingMap {
            label: "flip".into(),
            map: LinearMap::flip(a.field(), b.dim(), a.dim()),
            a: a.clone(),
            b: b.clone(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn a(&self) -> &Algebra {
        &self.a
    }

    pub fn b(&self) -> &Algebra {
        &self.b
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn matrix(&self) -> Matrix {
        self.map.to_matrix()
    }
}

/// `Q: A⊗B → A⊗B`.
#[derive(Clone, Debug)]
pub struct QMap {
    label: String,
    a: Algebra,
    b: Algebra,
    map: LinearMap,
}

impl QMap {
    pub fn new(label: impl Into<String>, a: Algebra, b: Algebra, map: LinearMap) -> Result<QMap> {
        same_field(&a, &b)?;
        let n = a.dim() * b.dim();
        if map.in_size() != n || map.out_size() != n {
            return Err(Error::Shape(format!(
                "Q must be a {n}x{n} matrix for dimensions ({}, {})",
                a.dim(),
                b.dim()
            )));
        }
        let map = map.regroup(&[a.dim(), b.dim()], &[a.dim(), b.dim()]);
        Ok(QMap {
            label: label.into(),
            a,
            b,
            map,
        })
    }

    pub fn from_matrix(label: impl Into<String>, a: Algebra, b: Algebra, m: &Matrix) -> Result<QMap> {
        let map = LinearMap::from_matrix(m, &[a.dim(), b.dim()], &[a.dim(), b.dim()])?;
        QMap::new(label, a, b, map)
    }

    pub fn identity(a: &Algebra, b: &Algebra) -> QMap {
        QMap {
            label: "id".into(),
            map: LinearMap::identity(a.field(), &[a.dim(), b.dim()]),
            a: a.clone(),
            b: b.clone(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn a(&self) -> &Algebra {
        &self.a
    }

    pub fn b(&self) -> &Algebra {
        &self.b
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn matrix(&self) -> Matrix {
        self.map.to_matrix()
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_identity()
    }
}

/// A twisting map and a Q-map over the same pair of algebras.
#[derive(Clone, Debug)]
pub struct LRPair {
    label: String,
    pub r: TwistingMap,
    pub q: QMap,
}

impl LRPair {
    pub fn new(label: impl Into<String>, r: TwistingMap, q: QMap) -> Result<LRPair> {
        if r.a() != q.a() || r.b() != q.b() {
            return Err(Error::Shape(format!(
                "R is over ({}, {}) but Q is over ({}, {})",
                r.a().label(),
                r.b().label(),
                q.a().label(),
                q.b().label()
            )));
        }
        Ok(LRPair {
            label: label.into(),
            r,
            q,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn a(&self) -> &Algebra {
        self.r.a()
    }

    pub fn b(&self) -> &Algebra {
        self.r.b()
    }
}

/// (tw0), (tw4), (tw5) on all basis tuples.
pub fn check_twisting_map(r: &TwistingMap) -> Report {
    let (a, b) = (r.a(), r.b());
    let (na, nb) = (a.dim(), b.dim());
    let f = a.field();
    let (ma, mb, ua, ub, rm) = (a.mult(), b.mult(), a.unit(), b.unit(), r.map());
    let mut report = Report::new(format!("twisting map {}", r.label()));
    report.push(
        Identity::new("tw0.a", f)
            .input("a", na, "e")
            .lhs(
                Side::new()
                    .apply(ub, &[], &["1"])
                    .apply(rm, &["1", "a"], &["x", "y"])
                    .output(&["x", "y"]),
            )
            .rhs(Side::new().apply(ub, &[], &["1"]).output(&["a", "1"]))
            .symbols(&["e", "f"])
            .verify(),
    );
    report.push(
        Identity::new("tw0.b", f)
            .input("b", nb, "f")
            .lhs(
                Side::new()
                    .apply(ua, &[], &["1"])
                    .apply(rm, &["b", "1"], &["x", "y"])
                    .output(&["x", "y"]),
            )
            .rhs(Side::new().apply(ua, &[], &["1"]).output(&["1", "b"]))
            .symbols(&["e", "f"])
            .verify(),
    );
    report.push(
        Identity::new("tw4", f)
            .input("a", na, "e")
            .input("a'", na, "e")
            .input("b", nb, "f")
            .lhs(
                Side::new()
                    .apply(ma, &["a", "a'"], &["aa'"])
                    .apply(rm, &["b", "aa'"], &["x", "y"])
                    .output(&["x", "y"]),
            )
            .rhs(
                Side::new()
                    .apply(rm, &["b", "a"], &["aR", "bR"])
                    .apply(rm, &["bR", "a'"], &["a'r", "bRr"])
                    .apply(ma, &["aR", "a'r"], &["x"])
                    .output(&["x", "bRr"]),
            )
            .symbols(&["e", "f"])
            .verify(),
    );
    report.push(
        Identity::new("tw5", f)
            .input("a", na, "e")
            .input("b", nb, "f")
            .input("b'", nb, "f")
            .lhs(
                Side::new()
                    .apply(mb, &["b", "b'"], &["bb'"])
                    .apply(rm, &["bb'", "a"], &["x", "y"])
                    .output(&["x", "y"]),
            )
            .rhs(
                Side::new()
                    .apply(rm, &["b'", "a"], &["aR", "b'R"])
                    .apply(rm, &["b", "aR"], &["aRr", "br"])
                    .apply(mb, &["br", "b'R"], &["y"])
                    .output(&["aRr", "y"]),
            )
            .symbols(&["e", "f"])
            .verify(),
    );
    report
}

/// (tw0'), (tw4'), (tw5') on all basis tuples.
pub fn check_qmap(q: &QMap) -> Report {
    let (a, b) = (q.a(), q.b());
    let (na, nb) = (a.dim(), b.dim());
    let f = a.field();
    let (ma, mb, ua, ub, qm) = (a.mult(), b.mult(), a.unit(), b.unit(), q.map());
    let mut report = Report::new(format!("Q-map {}", q.label()));
    report.push(
        Identity::new("tw0'.a", f)
            .input("a", na, "e")
            .lhs(
                Side::new()
                    .apply(ub, &[], &["1"])
                    .apply(qm, &["a", "1"], &["x", "y"])
                    .output(&["x", "y"]),
            )
            .rhs(Side::new().apply(ub, &[], &["1"]).output(&["a", "1"]))
            .symbols(&["e", "f"])
            .verify(),
    );
    report.push(
        Identity::new("tw0'.b", f)
            .input("b", nb, "f")
            .lhs(
                Side::new()
                    .apply(ua, &[], &["1"])
                    .apply(qm, &["1", "b"], &["x", "y"])
                    .output(&["x", "y"]),
            )
            .rhs(Side::new().apply(ua, &[], &["1"]).output(&["1", "b"]))
            .symbols(&["e", "f"])
            .verify(),
    );
    report.push(
        Identity::new("tw4'", f)
            .input("a", na, "e")
            .input("a'", na, "e")
            .input("b", nb, "f")
            .lhs(
                Side::new()
                    .apply(ma, &["a", "a'"], &["aa'"])
                    .apply(qm, &["aa'", "b"], &["x", "y"])
                    .output(&["x", "y"]),
            )
            .rhs(
                Side::new()
                    .apply(qm, &["a'", "b"], &["a'Q", "bQ"])
                    .apply(qm, &["a", "bQ"], &["aq", "bQq"])
                    .apply(ma, &["aq", "a'Q"], &["x"])
                    .output(&["x", "bQq"]),
            )
            .symbols(&["e", "f"])
            .verify(),
    );
    report.push(
        Identity::new("tw5'", f)
            .input("a", na, "e")
            .input("b", nb, "f")
            .input("b'", nb, "f")
            .lhs(
                Side::new()
                    .apply(mb, &["b", "b'"], &["bb'"])
                    .apply(qm, &["a", "bb'"], &["x", "y"])
                    .output(&["x", "y"]),
            )
            .rhs(
                Side::new()
                    .apply(qm, &["a", "b"], &["aQ", "bQ"])
                    .apply(qm, &["aQ", "b'"], &["aQq", "b'q"])
                    .apply(mb, &["bQ", "b'q"], &["y"])
                    .output(&["aQq", "y"]),
            )
            .symbols(&["e", "f"])
            .verify(),
    );
    report
}

/// (comb1) and (comb2) on all basis tuples.
pub fn check_lr_pair(p: &LRPair) -> Report {
    let (na, nb) = (p.a().dim(), p.b().dim());
    let f = p.a().field();
    let (rm, qm) = (p.r.map(), p.q.map());
    let mut report = Report::new(format!("L-R pair {}", p.label()));
    report.push(
        Identity::new("comb1", f)
            .input("b", nb, "f")
            .input("a", na, "e")
            .input("b'", nb, "f")
            .lhs(
                Side::new()
                    .apply(rm, &["b", "a"], &["aR", "bR"])
                    .apply(qm, &["aR", "b'"], &["aRQ", "b'Q"])
                    .output(&["bR", "aRQ", "b'Q"]),
            )
            .rhs(
                Side::new()
                    .apply(qm, &["a", "b'"], &["aQ", "b'Q"])
                    .apply(rm, &["b", "aQ"], &["aQR", "bR"])
                    .output(&["bR", "aQR", "b'Q"]),
            )
            .symbols(&["f", "e", "f"])
            .verify(),
    );
    report.push(
        Identity::new("comb2", f)
            .input("a", na, "e")
            .input("b", nb, "f")
            .input("a'", na, "e")
            .lhs(
                Side::new()
                    .apply(rm, &["b", "a"], &["aR", "bR"])
                    .apply(qm, &["a'", "bR"], &["a'Q", "bRQ"])
                    .output(&["aR", "bRQ", "a'Q"]),
            )
            .rhs(
                Side::new()
                    .apply(qm, &["a'", "b"], &["a'Q", "bQ"])
                    .apply(rm, &["bQ", "a"], &["aR", "bQR"])
                    .output(&["aR", "bQR", "a'Q"]),
            )
            .symbols(&["e", "f", "e"])
            .verify(),
    );
    report
}

/// All eight axioms: (tw0)–(tw5), (tw0')–(tw5'), (comb1), (comb2).
pub fn check_lr_suite(p: &LRPair) -> Report {
    let mut report = Report::new(format!("L-R axioms for {}", p.label()));
    report.outcomes.extend(check_twisting_map(&p.r).outcomes);
    report.outcomes.extend(check_qmap(&p.q).outcomes);
    report.outcomes.extend(check_lr_pair(p).outcomes);
    report
}

fn product_on_pair(label: String, a: &Algebra, b: &Algebra, side: Side<'_>) -> Algebra {
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let mult = side
        .tabulate(a.field(), &[("a", na), ("b", nb), ("a'", na), ("b'", nb)])
        .regroup(&[n, n], &[n]);
    let unit = a.unit().tensor(b.unit()).regroup(&[], &[n]);
    Algebra::from_maps(label, mult, unit).expect("product legs are consistent")
}

/// `A⊗_R B` without checking `R`.
pub fn build_twisted_product_unchecked(r: &TwistingMap) -> Algebra {
    let (a, b) = (r.a(), r.b());
    let side = Side::new()
        .apply(r.map(), &["b", "a'"], &["a'R", "bR"])
        .apply(a.mult(), &["a", "a'R"], &["x"])
        .apply(b.mult(), &["bR", "b'"], &["y"])
        .output(&["x", "y"]);
    product_on_pair(format!("{}⊗_{}{}", a.label(), r.label(), b.label()), a, b, side)
}

/// `A⊗_R B`: `(a⊗b)(a'⊗b') = a a'_R ⊗ b_R b'`.
pub fn build_twisted_product(r: &TwistingMap) -> Result<Algebra> {
    require("twisted tensor product", check_twisting_map(r))?;
    Ok(build_twisted_product_unchecked(r))
}

pub fn build_q_product_unchecked(q: &QMap) -> Algebra {
    let (a, b) = (q.a(), q.b());
    let side = Side::new()
        .apply(q.map(), &["a", "b'"], &["aQ", "b'Q"])
        .apply(a.mult(), &["aQ", "a'"], &["x"])
        .apply(b.mult(), &["b", "b'Q"], &["y"])
        .output(&["x", "y"]);
    product_on_pair(format!("{}_{}⊗{}", a.label(), q.label(), b.label()), a, b, side)
}

/// `A _Q⊗ B`: `(a⊗b)(a'⊗b') = a_Q a' ⊗ b b'_Q`.
pub fn build_q_product(q: &QMap) -> Result<Algebra> {
    require("Q-twisted tensor product", check_qmap(q))?;
    Ok(build_q_product_unchecked(q))
}

pub fn build_lr_product_unchecked(p: &LRPair) -> Algebra {
    let (a, b) = (p.a(), p.b());
    let side = Side::new()
        .apply(p.q.map(), &["a", "b'"], &["aQ", "b'Q"])
        .apply(p.r.map(), &["b", "a'"], &["a'R", "bR"])
        .apply(a.mult(), &["aQ", "a'R"], &["x"])
        .apply(b.mult(), &["bR", "b'Q"], &["y"])
        .output(&["x", "y"]);
    product_on_pair(
        format!("{}_{}⊗_{}{}", a.label(), p.q.label(), p.r.label(), b.label()),
        a,
        b,
        side,
    )
}

/// `A _Q⊗_R B`: `(a⊗b)(a'⊗b') = a_Q a'_R ⊗ b_R b'_Q`.
pub fn build_lr_product(p: &LRPair) -> Result<Algebra> {
    require("L-R-twisted tensor product", check_lr_suite(p))?;
    Ok(build_lr_product_unchecked(p))
}

/// Builds `Q^op(b⊗a) = a_Q⊗b_Q` over `(A^op, B^op)` and checks that `Q` is a
/// Q-map exactly when `Q^op` is a twisting map, and that
/// `A _Q⊗ B = (A^op ⊗_{Q^op} B^op)^op` when both hold.
pub fn qop_correspondence(q: &QMap) -> (TwistingMap, Report) {
    let (a, b) = (q.a(), q.b());
    let flip = LinearMap::flip(a.field(), b.dim(), a.dim());
    let qop = TwistingMap {
        label: format!("{}^op", q.label()),
        a: opposite(a),
        b: opposite(b),
        map: q.map().compose(&flip),
    };
    let q_ok = check_qmap(q).passed();
    let r_ok = check_twisting_map(&qop).passed();
    let mut report = Report::new(format!("Q^op correspondence for {}", q.label()));
    report.push(Outcome::condition(
        "equivalence",
        q_ok == r_ok,
        format!(
            "Q-map axioms {}, twisting axioms for Q^op {}",
            verdict(q_ok),
            verdict(r_ok)
        ),
    ));
    if q_ok && r_ok {
        let left = build_q_product_unchecked(q);
        let right = opposite(&build_twisted_product_unchecked(&qop));
        report.outcomes.extend(compare_tables("table", &left, &right).outcomes);
    }
    (qop, report)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "hold"
    } else {
        "fail"
    }
}

/// A map `T: D⊗D → D⊗D`, candidate for deforming the product to `μ∘T`.
#[derive(Clone, Debug)]
pub struct Twistor {
    label: String,
    d: Algebra,
    map: LinearMap,
}

impl Twistor {
    pub fn new(label: impl Into<String>, d: Algebra, map: LinearMap) -> Result<Twistor> {
        let n = d.dim();
        if map.in_size() != n * n || map.out_size() != n * n {
            return Err(Error::Shape(format!(
                "a twistor on a {n}-dimensional algebra is {0}x{0}",
                n * n
            )));
        }
        let map = map.regroup(&[n, n], &[n, n]);
        Ok(Twistor {
            label: label.into(),
            d,
            map,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn algebra(&self) -> &Algebra {
        &self.d
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }
}

/// Unit conditions and (dec1)–(dec3).
pub fn check_twistor(t: &Twistor) -> Report {
    let d = t.algebra();
    let n = d.dim();
    let f = d.field();
    let (m, u, tm) = (d.mult(), d.unit(), t.map());
    let mut report = Report::new(format!("twistor {}", t.label()));
    report.push(
        Identity::new("T.unit.left", f)
            .input("d", n, "e")
            .lhs(
                Side::new()
                    .apply(u, &[], &["1"])
                    .apply(tm, &["1", "d"], &["x", "y"])
                    .output(&["x", "y"]),
            )
            .rhs(Side::new().apply(u, &[], &["1"]).output(&["1", "d"]))
            .symbols(&["e", "e"])
            .verify(),
    );
    report.push(
        Identity::new("T.unit.right", f)
            .input("d", n, "e")
            .lhs(
                Side::new()
                    .apply(u, &[], &["1"])
                    .apply(tm, &["d", "1"], &["x", "y"])
                    .output(&["x", "y"]),
            )
            .rhs(Side::new().apply(u, &[], &["1"]).output(&["d", "1"]))
            .symbols(&["e", "e"])
            .verify(),
    );
    let triple = |label: &str| {
        Identity::new(label, f)
            .input("x", n, "e")
            .input("y", n, "e")
            .input("z", n, "e")
    };
    report.push(
        triple("dec1")
            .lhs(
                Side::new()
                    .apply(tm, &["x", "y"], &["x1", "y1"])
                    .apply(tm, &["x1", "z"], &["x2", "z1"])
                    .apply(m, &["y1", "z1"], &["w"])
                    .output(&["x2", "w"]),
            )
            .rhs(
                Side::new()
                    .apply(m, &["y", "z"], &["w"])
                    .apply(tm, &["x", "w"], &["p", "q"])
                    .output(&["p", "q"]),
            )
            .symbols(&["e", "e"])
            .verify(),
    );
    report.push(
        triple("dec2")
            .lhs(
                Side::new()
                    .apply(tm, &["y", "z"], &["y1", "z1"])
                    .apply(tm, &["x", "z1"], &["x1", "z2"])
                    .apply(m, &["x1", "y1"], &["w"])
                    .output(&["w", "z2"]),
            )
            .rhs(
                Side::new()
                    .apply(m, &["x", "y"], &["w"])
                    .apply(tm, &["w", "z"], &["p", "q"])
                    .output(&["p", "q"]),
            )
            .symbols(&["e", "e"])
            .verify(),
    );
    report.push(
        triple("dec3")
            .lhs(
                Side::new()
                    .apply(tm, &["y", "z"], &["y1", "z1"])
                    .apply(tm, &["x", "y1"], &["x1", "y2"])
                    .output(&["x1", "y2", "z1"]),
            )
            .rhs(
                Side::new()
                    .apply(tm, &["x", "y"], &["x1", "y1"])
                    .apply(tm, &["y1", "z"], &["y2", "z1"])
                    .output(&["x1", "y2", "z1"]),
            )
            .symbols(&["e", "e", "e"])
            .verify(),
    );
    report
}

/// `D^T` with multiplication `μ∘T` and the same unit, without checks.
pub fn build_twisted_by_twistor_unchecked(t: &Twistor) -> Algebra {
    let d = t.algebra();
    Algebra::from_maps(
        format!("{}^{}", d.label(), t.label()),
        d.mult().compose(t.map()),
        d.unit().clone(),
    )
    .expect("twistor legs match the algebra")
}

pub fn build_twisted_by_twistor(t: &Twistor) -> Result<Algebra> {
    require("twistor deformation", check_twistor(t))?;
    Ok(build_twisted_by_twistor_unchecked(t))
}

/// The three twistors of an L-R pair and the report that each is a twistor
/// and that all four resulting tables coincide with `A _Q⊗_R B`.
pub struct CanonicalTwistors {
    pub t1: Twistor,
    pub t2: Twistor,
    pub t3: Twistor,
    pub report: Report,
}

pub fn canonical_twistors(p: &LRPair) -> Result<CanonicalTwistors> {
    require("canonical twistors", check_lr_suite(p))?;
    let (a, b) = (p.a(), p.b());
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let f = a.field();
    let wires = [("a", na), ("b", nb), ("a'", na), ("b'", nb)];
    let tab = |side: Side<'_>| side.tabulate(f, &wires).regroup(&[n, n], &[n, n]);
    let t1 = tab(Side::new()
        .apply(p.q.map(), &["a", "b'"], &["aQ", "b'Q"])
        .apply(p.r.map(), &["b", "a'"], &["a'R", "bR"])
        .output(&["aQ", "bR", "a'R", "b'Q"]));
    let t2 = tab(Side::new()
        .apply(p.q.map(), &["a", "b'"], &["aQ", "b'Q"])
        .output(&["aQ", "b", "a'", "b'Q"]));
    let t3 = tab(Side::new()
        .apply(p.r.map(), &["b", "a'"], &["a'R", "bR"])
        .output(&["a", "bR", "a'R", "b'"]));
    let t1 = Twistor::new("T1", tensor_algebra(a, b)?, t1)?;
    let t2 = Twistor::new("T2", build_twisted_product_unchecked(&p.r), t2)?;
    let t3 = Twistor::new("T3", build_q_product_unchecked(&p.q), t3)?;
    let lr = build_lr_product_unchecked(p);
    let mut report = Report::new(format!("twistors of {}", p.label()));
    for t in [&t1, &t2, &t3] {
        report.absorb(&format!("{}.", t.label()), check_twistor(t));
    }
    for t in [&t1, &t2, &t3] {
        let deformed = build_twisted_by_twistor_unchecked(t);
        report
            .outcomes
            .extend(compare_tables(&format!("lr=D^{}", t.label()), &lr, &deformed).outcomes);
    }
    Ok(CanonicalTwistors { t1, t2, t3, report })
}

/// Result of [`detwist`]: `P = Q⁻¹∘R` and the isomorphism `Q: A⊗_P B → A _Q⊗_R B`.
pub struct Detwisted {
    pub p: TwistingMap,
    pub iso: AlgebraMorphism,
    pub report: Report,
}

pub fn detwist(pair: &LRPair) -> Result<Detwisted> {
    let q_inv = pair.q.map().inverse()?;
    let p = TwistingMap {
        label: format!("{}^-1∘{}", pair.q.label(), pair.r.label()),
        a: pair.a().clone(),
        b: pair.b().clone(),
        map: q_inv
            .compose(pair.r.map())
            .regroup(&[pair.b().dim(), pair.a().dim()], &[pair.a().dim(), pair.b().dim()]),
    };
    let n = pair.a().dim() * pair.b().dim();
    let iso = AlgebraMorphism::new(
        build_twisted_product_unchecked(&p),
        build_lr_product_unchecked(pair),
        pair.q.map().regroup(&[n], &[n]),
    )?;
    let mut report = Report::new(format!("detwisting {}", pair.label()));
    report.absorb("P.", check_twisting_map(&p));
    report.absorb("iso.", iso.isomorphism_report());
    Ok(Detwisted { p, iso, report })
}

/// For algebra maps `f: A → A'`, `g: B → B'` checks `(f⊗g)∘R = R'∘(g⊗f)`,
/// `(f⊗g)∘Q = Q'∘(f⊗g)` and that `f⊗g` is multiplicative between the
/// L-R-twisted tensor products.
pub fn check_lr_morphism(f: &AlgebraMorphism, g: &AlgebraMorphism, p: &LRPair, p2: &LRPair) -> Result<Report> {
    if f.source != *p.a() || g.source != *p.b() || f.target != *p2.a() || g.target != *p2.b() {
        return Err(Error::Shape(
            "morphisms do not connect the algebras of the two pairs".into(),
        ));
    }
    let field = p.a().field();
    let (na, nb) = (p.a().dim(), p.b().dim());
    let (fm, gm) = (f.map(), g.map());
    let mut report = Report::new(format!("morphism {} -> {}", p.label(), p2.label()));
    report.absorb("f.", check_morphism(f));
    report.absorb("g.", check_morphism(g));
    report.push(
        Identity::new("R-intertwining", field)
            .input("b", nb, "f")
            .input("a", na, "e")
            .lhs(
                Side::new()
                    .apply(p.r.map(), &["b", "a"], &["aR", "bR"])
                    .apply(fm, &["aR"], &["x"])
                    .apply(gm, &["bR"], &["y"])
                    .output(&["x", "y"]),
            )
            .rhs(
                Side::new()
                    .apply(gm, &["b"], &["gb"])
                    .apply(fm, &["a"], &["fa"])
                    .apply(p2.r.map(), &["gb", "fa"], &["x", "y"])
                    .output(&["x", "y"]),
            )
            .symbols(&["e", "f"])
            .verify(),
    );
    report.push(
        Identity::new("Q-intertwining", field)
            .input("a", na, "e")
            .input("b", nb, "f")
            .lhs(
                Side::new()
                    .apply(p.q.map(), &["a", "b"], &["aQ", "bQ"])
                    .apply(fm, &["aQ"], &["x"])
                    .apply(gm, &["bQ"], &["y"])
                    .output(&["x", "y"]),
            )
            .rhs(
                Side::new()
                    .apply(fm, &["a"], &["fa"])
                    .apply(gm, &["b"], &["gb"])
                    .apply(p2.q.map(), &["fa", "gb"], &["x", "y"])
                    .output(&["x", "y"]),
            )
            .symbols(&["e", "f"])
            .verify(),
    );
    let fg = fm.tensor(gm);
    let product_map = AlgebraMorphism::new(build_lr_product_unchecked(p), build_lr_product_unchecked(p2), fg)?;
    report.absorb("f⊗g.", check_morphism(&product_map));
    Ok(report)
}

/// Compares two twisting maps over the same algebras entry by entry.
pub fn compare_twisting_maps(label: &str, left: &TwistingMap, right: &TwistingMap) -> Outcome {
    compare_maps(label, left.map(), right.map(), &[("b", "f"), ("a", "e")], &["e", "f"])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_algebra;
    use crate::exactfield::{Field, Scalar};

    fn q() -> Field {
        Field::Rational
    }

    fn truncated(label: &str, m: usize) -> Algebra {
        Algebra::from_basis_products(label, q(), m, 0, |i, j| {
            if i + j < m {
                vec![(i + j, q().one())]
            } else {
                vec![]
            }
        })
    }

    fn diag_r(a: &Algebra, b: &Algebra, s: &Scalar) -> TwistingMap {
        let map = LinearMap::from_fn(q(), &[b.dim(), a.dim()], &[a.dim(), b.dim()], |ji| {
            vec![(vec![ji[1], ji[0]], s.pow((ji[0] * ji[1]) as u32))]
        });
        TwistingMap::new("R", a.clone(), b.clone(), map).unwrap()
    }

    fn diag_q(a: &Algebra, b: &Algebra, s: &Scalar) -> QMap {
        let map = LinearMap::from_fn(q(), &[a.dim(), b.dim()], &[a.dim(), b.dim()], |ij| {
            vec![(ij.to_vec(), s.pow((ij[0] * ij[1]) as u32))]
        });
        QMap::new("Q", a.clone(), b.clone(), map).unwrap()
    }

    fn xy() -> (Algebra, Algebra) {
        (truncated("k[x]/(x^2)", 2), truncated("k[y]/(y^2)", 2))
    }

    #[test]
    fn flip_is_a_twisting_map_and_gives_the_tensor_algebra() {
        let (a, b) = xy();
        let r = TwistingMap::flip(&a, &b);
        assert!(check_twisting_map(&r).passed());
        assert_eq!(build_twisted_product(&r).unwrap(), tensor_algebra(&a, &b).unwrap());
    }

    #[test]
    fn quantum_plane_map() {
        let (a, b) = xy();
        let r = diag_r(&a, &b, &q().from_i64(2));
        let rep = check_twisting_map(&r);
        assert!(rep.passed());
        let t = build_twisted_product(&r).unwrap();
        // basis index i·2+j for x^i⊗y^j
        let prod = t.multiply(&t.basis_vector(1), &t.basis_vector(2)).unwrap();
        let mut expected = vec![q().zero(); 4];
        expected[3] = q().from_i64(2);
        assert_eq!(prod, expected);
    }

    #[test]
    fn unit_legs_of_a_bad_map_pass_tw0_but_fail_tw4() {
        let (a, b) = xy();
        let mut m = TwistingMap::flip(&a, &b).matrix();
        // column y⊗x (index 1·2+1) gets an extra 1⊗1
        m.set(0, 3, q().one());
        let r = TwistingMap::from_matrix("bad", a, b, &m).unwrap();
        let rep = check_twisting_map(&r);
        assert!(rep.outcome("tw0.a").unwrap().passed());
        assert!(rep.outcome("tw0.b").unwrap().passed());
        let tw4 = rep.outcome("tw4").unwrap();
        assert!(!tw4.passed());
        let w = tw4.witness.as_ref().unwrap();
        assert_eq!(w.lhs, "0");
        assert_eq!(w.rhs, "2·e1⊗f0");
    }

    #[test]
    fn q_map_examples() {
        let (a, b) = xy();
        assert!(check_qmap(&QMap::identity(&a, &b)).passed());
        assert!(check_qmap(&diag_q(&a, &b, &q().from_i64(2))).passed());
        let mut m = Matrix::identity(q(), 4);
        m.set(1, 1, q().zero());
        let killed = QMap::from_matrix("kill", a, b, &m).unwrap();
        let rep = check_qmap(&killed);
        assert!(!rep.outcome("tw0'.b").unwrap().passed());
    }

    #[test]
    fn q_product_with_diagonal_q() {
        let (a, b) = xy();
        let alg = build_q_product(&diag_q(&a, &b, &q().from_i64(2))).unwrap();
        assert!(check_algebra(&alg).passed());
        let x1 = alg.basis_vector(2);
        let y1 = alg.basis_vector(1);
        let mut two_xy = vec![q().zero(); 4];
        two_xy[3] = q().from_i64(2);
        assert_eq!(alg.multiply(&x1, &y1).unwrap(), two_xy);
        assert_eq!(alg.multiply(&y1, &x1).unwrap(), alg.basis_vector(3));
    }

    #[test]
    fn lr_pairs() {
        let (a, b) = xy();
        let any_r = diag_r(&a, &b, &q().from_i64(3));
        let p = LRPair::new("p", any_r.clone(), QMap::identity(&a, &b)).unwrap();
        assert!(check_lr_suite(&p).passed());
        assert_eq!(build_lr_product(&p).unwrap(), build_twisted_product(&any_r).unwrap());
        let d = LRPair::new("d", diag_r(&a, &b, &q().from_i64(2)), diag_q(&a, &b, &q().from_i64(2))).unwrap();
        assert!(check_lr_suite(&d).passed());
        let alg = build_lr_product(&d).unwrap();
        assert!(check_algebra(&alg).passed());
        assert_eq!(
            alg.multiply(&alg.basis_vector(2), &alg.unit_vector()).unwrap(),
            alg.basis_vector(2)
        );
        let plain = LRPair::new("plain", TwistingMap::flip(&a, &b), QMap::identity(&a, &b)).unwrap();
        assert_eq!(build_lr_product(&plain).unwrap(), tensor_algebra(&a, &b).unwrap());
    }

    #[test]
    fn comb1_fails_for_mismatched_parameters() {
        // R diagonal with 2, Q(x⊗y) = -x⊗y + 1⊗1
        let (a, b) = xy();
        let mut m = Matrix::identity(q(), 4);
        m.set(3, 3, q().from_i64(-1));
        m.set(0, 3, q().one());
        let qm = QMap::from_matrix("Q", a.clone(), b.clone(), &m).unwrap();
        assert!(check_qmap(&qm).passed());
        let p = LRPair::new("p", diag_r(&a, &b, &q().from_i64(2)), qm).unwrap();
        let rep = check_lr_suite(&p);
        assert_eq!(rep.failed_labels(), vec!["comb1", "comb2"]);
        assert!(build_lr_product(&p).is_err());
    }

    #[test]
    fn qop_examples() {
        let (a, b) = xy();
        let (qop, rep) = qop_correspondence(&QMap::identity(&a, &b));
        assert!(rep.passed());
        assert_eq!(qop.map(), TwistingMap::flip(&a, &b).map());
        let (_, rep) = qop_correspondence(&diag_q(&a, &b, &q().from_i64(2)));
        assert!(rep.passed());
        assert!(rep.outcome("table").is_some());
        let mut m = Matrix::identity(q(), 4);
        m.set(1, 1, q().zero());
        let (_, rep) = qop_correspondence(&QMap::from_matrix("kill", a, b, &m).unwrap());
        assert!(rep.passed());
        assert!(rep.outcome("table").is_none());
    }

    #[test]
    fn twistors() {
        let (a, b) = xy();
        let t = Twistor::new("id", a.clone(), LinearMap::identity(q(), &[2, 2])).unwrap();
        assert!(check_twistor(&t).passed());
        assert_eq!(build_twisted_by_twistor(&t).unwrap(), a);
        let mut m = Matrix::identity(q(), 4);
        m.set(2, 2, q().from_i64(5));
        let bad = Twistor::new("bad", a.clone(), LinearMap::from_matrix(&m, &[2, 2], &[2, 2]).unwrap()).unwrap();
        assert!(!check_twistor(&bad).outcome("T.unit.right").unwrap().passed());

        let p = LRPair::new("p", diag_r(&a, &b, &q().from_i64(2)), QMap::identity(&a, &b)).unwrap();
        let c = canonical_twistors(&p).unwrap();
        assert!(c.report.passed(), "{}", c.report);
        assert!(c.t2.map().is_identity());
        let p = LRPair::new("p", TwistingMap::flip(&a, &b), diag_q(&a, &b, &q().from_i64(3))).unwrap();
        let c = canonical_twistors(&p).unwrap();
        assert!(c.report.passed(), "{}", c.report);
        assert!(c.t3.map().is_identity());
    }

    #[test]
    fn detwist_examples() {
        let (a, b) = xy();
        let r = diag_r(&a, &b, &q().from_i64(2));
        let p = LRPair::new("p", r.clone(), QMap::identity(&a, &b)).unwrap();
        let d = detwist(&p).unwrap();
        assert!(d.report.passed());
        assert_eq!(d.p.map(), r.map());
        assert!(d.iso.map().is_identity());
        let p = LRPair::new("p", diag_r(&a, &b, &q().from_i64(6)), diag_q(&a, &b, &q().from_i64(2))).unwrap();
        let d = detwist(&p).unwrap();
        assert!(d.report.passed(), "{}", d.report);
        assert_eq!(d.p.map(), diag_r(&a, &b, &q().from_i64(3)).map());
        let mut m = Matrix::identity(q(), 4);
        m.set(3, 3, q().zero());
        let singular = LRPair::new("s", r, QMap::from_matrix("s", a, b, &m).unwrap()).unwrap();
        assert!(detwist(&singular).is_err());
    }

    #[test]
    fn lr_morphisms() {
        let (a, b) = xy();
        let p = LRPair::new("p", diag_r(&a, &b, &q().from_i64(2)), diag_q(&a, &b, &q().from_i64(2))).unwrap();
        let ida = AlgebraMorphism::identity(&a);
        let idb = AlgebraMorphism::identity(&b);
        assert!(check_lr_morphism(&ida, &idb, &p, &p).unwrap().passed());
        let sign = Matrix::from_i64_rows(q(), &[&[1, 0], &[0, -1]]);
        let fa = AlgebraMorphism::from_matrix(a.clone(), a.clone(), &sign).unwrap();
        assert!(check_lr_morphism(&fa, &idb, &p, &p).unwrap().passed());
        let p2 = LRPair::new("p2", diag_r(&a, &b, &q().from_i64(3)), diag_q(&a, &b, &q().from_i64(2))).unwrap();
        let rep = check_lr_morphism(&ida, &idb, &p, &p2).unwrap();
        assert!(!rep.outcome("R-intertwining").unwrap().passed());
        assert!(rep.outcome("Q-intertwining").unwrap().passed());
    }
}
