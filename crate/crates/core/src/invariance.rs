//! Invariance under twisting: 2-cocycles, the Drinfeld twist, the twisted
//! bimodule algebra `_F𝒜_{F⁻¹}` and the isomorphism of L-R-smash products,
//! then the general version for L-R-twisted tensor products built from six
//! auxiliary maps (the bullet algebra Ã, the pair (R̃, Q̃) and the
//! isomorphism Ã _Q̃⊗_R̃ B ≅ A _Q⊗_R B).
//!
//! Leg names for [`TwistData`]:
//! `μ_l: B⊗A → A`, `μ_r: A⊗B → A`, `ρ_r(a) = a(0)⊗a(1) ∈ A⊗B`,
//! `ρ_l(a) = a<-1>⊗a<0> ∈ B⊗A`, `λ_r(a) = a[0]⊗a[1] ∈ A⊗B`,
//! `λ_l(a) = a{-1}⊗a{0} ∈ B⊗A`. In `act-mult` the expression `b_R a(1)·a'` is read
//! as the product `b_R a(1)` in B acting on `a'`.

use rayon::prelude::*;

use crate::algebra::{compare_tables, Algebra, AlgebraMorphism};
use crate::diagram::{compare_maps, Identity, LinearMap, Side};
use crate::error::{require, Error, Result};
use crate::exactfield::Scalar;
use crate::hopf::{
    build_lr_smash_unchecked, check_bialgebra, check_bimodule_algebra, regular_bicomodule, smash_maps, Bialgebra,
    BimoduleAlgebra,
};
use crate::report::Report;
use crate::twisted::{build_lr_product_unchecked, check_lr_pair, check_lr_suite, LRPair, QMap, TwistingMap};

/// An invertible `F ∈ H⊗H` together with `F⁻¹`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cocycle {
    h: Bialgebra,
    f: LinearMap,
    f_inv: LinearMap,
}

impl Cocycle {
    /// `f` and `f_inv` are coefficient vectors of length `n²` on the basis `e_i⊗e_j`.
    pub fn new(h: Bialgebra, f: &[Scalar], f_inv: &[Scalar]) -> Result<Cocycle> {
        let n = h.dim();
        for (name, v) in [("F", f), ("F_inv", f_inv)] {
            if v.len() != n * n {
                return Err(Error::Shape(format!(
                    "{name} has length {}, expected {}",
                    v.len(),
                    n * n
                )));
            }
        }
        let field = h.field();
        Ok(Cocycle {
            f: LinearMap::element(field, &[n, n], f),
            f_inv: LinearMap::element(field, &[n, n], f_inv),
            h,
        })
    }

    /// `F = F⁻¹ = 1⊗1`.
    pub fn trivial(h: &Bialgebra) -> Cocycle {
        let one = h.alg().unit().tensor(h.alg().unit());
        Cocycle {
            h: h.clone(),
            f: one.clone(),
            f_inv: one,
        }
    }

    pub fn h(&self) -> &Bialgebra {
        &self.h
    }

    /// `F` as a map `[] → [n, n]`.
    pub fn f(&self) -> &LinearMap {
        &self.f
    }

    pub fn f_inv(&self) -> &LinearMap {
        &self.f_inv
    }

    pub fn f_vector(&self) -> Vec<Scalar> {
        column_vector(&self.f)
    }

    pub fn f_inv_vector(&self) -> Vec<Scalar> {
        column_vector(&self.f_inv)
    }
}

fn column_vector(m: &LinearMap) -> Vec<Scalar> {
    let mut v = vec![m.field().zero(); m.out_size()];
    for (i, c) in m.column(0) {
        v[*i] = c.clone();
    }
    v
}

pub fn check_cocycle(c: &Cocycle) -> Report {
    let h = c.h();
    let f = h.field();
    let (m, u, d, e) = (h.alg().mult(), h.alg().unit(), h.comult(), h.counit());
    let (ff, gg) = (c.f(), c.f_inv());
    let mut report = Report::new(format!("2-cocycle on {}", h.label()));
    for (label, first, second) in [("inverse.left", ff, gg), ("inverse.right", gg, ff)] {
        report.push(
            Identity::new(label, f)
                .lhs(
                    Side::new()
                        .apply(first, &[], &["f1", "f2"])
                        .apply(second, &[], &["g1", "g2"])
                        .apply(m, &["f1", "g1"], &["x"])
                        .apply(m, &["f2", "g2"], &["y"])
                        .output(&["x", "y"]),
                )
                .rhs(
                    Side::new()
                        .apply(u, &[], &["x"])
                        .apply(u, &[], &["y"])
                        .output(&["x", "y"]),
                )
                .symbols(&["h", "h"])
                .verify(),
        );
    }
    report.push(
        Identity::new("counit.left", f)
            .lhs(
                Side::new()
                    .apply(ff, &[], &["f1", "f2"])
                    .apply(e, &["f1"], &[])
                    .output(&["f2"]),
            )
            .rhs(Side::new().apply(u, &[], &["x"]).output(&["x"]))
            .symbols(&["h"])
            .verify(),
    );
    report.push(
        Identity::new("counit.right", f)
            .lhs(
                Side::new()
                    .apply(ff, &[], &["f1", "f2"])
                    .apply(e, &["f2"], &[])
                    .output(&["f1"]),
            )
            .rhs(Side::new().apply(u, &[], &["x"]).output(&["x"]))
            .symbols(&["h"])
            .verify(),
    );
    report.push(
        Identity::new("cocycle", f)
            .lhs(
                Side::new()
                    .apply(ff, &[], &["x", "y"])
                    .apply(d, &["y"], &["y1", "y2"])
                    .apply(ff, &[], &["p", "q"])
                    .apply(m, &["p", "y1"], &["s"])
                    .apply(m, &["q", "y2"], &["t"])
                    .output(&["x", "s", "t"]),
            )
            .rhs(
                Side::new()
                    .apply(ff, &[], &["x", "y"])
                    .apply(d, &["x"], &["x1", "x2"])
                    .apply(ff, &[], &["p", "q"])
                    .apply(m, &["p", "x1"], &["s"])
                    .apply(m, &["q", "x2"], &["t"])
                    .output(&["s", "t", "y"]),
            )
            .symbols(&["h", "h", "h"])
            .verify(),
    );
    report
}

/// `H_F`: same algebra, `Δ_F(h) = FΔ(h)F⁻¹`.
pub fn drinfeld_twist(h: &Bialgebra, c: &Cocycle) -> Result<Bialgebra> {
    if h != c.h() {
        return Err(Error::Shape("the cocycle lives on a different bialgebra".into()));
    }
    require("2-cocycle", check_cocycle(c))?;
    Ok(drinfeld_twist_unchecked(c))
}

fn drinfeld_twist_unchecked(c: &Cocycle) -> Bialgebra {
    let h = c.h();
    let m = h.alg().mult();
    let comult = Side::new()
        .apply(h.comult(), &["h"], &["h1", "h2"])
        .apply(c.f(), &[], &["f1", "f2"])
        .apply(c.f_inv(), &[], &["g1", "g2"])
        .apply(m, &["f1", "h1"], &["p"])
        .apply(m, &["p", "g1"], &["x"])
        .apply(m, &["f2", "h2"], &["q"])
        .apply(m, &["q", "g2"], &["y"])
        .output(&["x", "y"])
        .tabulate(h.field(), &[("h", h.dim())]);
    let alg = h.alg().clone().with_label(format!("{}_F", h.label()));
    Bialgebra::new(alg, comult, h.counit().clone()).expect("Δ_F has the legs of Δ")
}

/// `_F𝒜_{F⁻¹}`: `φ∙φ' = (G¹·φ·F¹)(G²·φ'·F²)` with the same actions, over `H_F`.
pub fn twist_bimodule_algebra(m: &BimoduleAlgebra, c: &Cocycle) -> Result<BimoduleAlgebra> {
    if m.h() != c.h() {
        return Err(Error::Shape("the cocycle lives on a different bialgebra".into()));
    }
    require("bimodule algebra", check_bimodule_algebra(m))?;
    require("2-cocycle", check_cocycle(c))?;
    Ok(twist_bimodule_algebra_unchecked(m, c))
}

fn twist_bimodule_algebra_unchecked(m: &BimoduleAlgebra, c: &Cocycle) -> BimoduleAlgebra {
    let a = m.alg();
    let na = a.dim();
    let mult = Side::new()
        .apply(c.f(), &[], &["f1", "f2"])
        .apply(c.f_inv(), &[], &["g1", "g2"])
        .apply(m.left(), &["g1", "p"], &["x"])
        .apply(m.right(), &["x", "f1"], &["y"])
        .apply(m.left(), &["g2", "p'"], &["z"])
        .apply(m.right(), &["z", "f2"], &["w"])
        .apply(a.mult(), &["y", "w"], &["v"])
        .output(&["v"])
        .tabulate(a.field(), &[("p", na), ("p'", na)]);
    let alg = Algebra::from_maps(format!("_F{}_F^-1", a.label()), mult, a.unit().clone())
        .expect("twisted product has the legs of the original");
    BimoduleAlgebra::new(drinfeld_twist_unchecked(c), alg, m.left().clone(), m.right().clone())
        .expect("actions are unchanged")
}

/// The candidate map `φ⋉h ↦ G¹·φ·F²⋉G²hF¹` with explicit elements standing in
/// for `F` and `F⁻¹`, as a linear map on `𝒜⊗H`.
pub fn smash_invariance_map(m: &BimoduleAlgebra, f: &LinearMap, g: &LinearMap) -> LinearMap {
    let h = m.h();
    let hm = h.alg().mult();
    let (na, nh) = (m.alg().dim(), h.dim());
    Side::new()
        .apply(f, &[], &["f1", "f2"])
        .apply(g, &[], &["g1", "g2"])
        .apply(m.left(), &["g1", "p"], &["x"])
        .apply(m.right(), &["x", "f2"], &["y"])
        .apply(hm, &["g2", "h"], &["k"])
        .apply(hm, &["k", "f1"], &["l"])
        .output(&["y", "l"])
        .tabulate(h.field(), &[("p", na), ("h", nh)])
        .regroup(&[na * nh], &[na * nh])
}

/// `(_F𝒜_{F⁻¹})⋉H_F → 𝒜⋉H`, `φ⋉h ↦ G¹·φ·F²⋉G²hF¹`, with its isomorphism report.
pub fn smash_invariance_iso(m: &BimoduleAlgebra, c: &Cocycle) -> Result<(AlgebraMorphism, Report)> {
    let twisted = twist_bimodule_algebra(m, c)?;
    let source = build_lr_smash_unchecked(&twisted, &regular_bicomodule(twisted.h()));
    let target = build_lr_smash_unchecked(m, &regular_bicomodule(m.h()));
    let iso = AlgebraMorphism::new(source, target, smash_invariance_map(m, c.f(), c.f_inv()))?;
    let mut report = iso.isomorphism_report();
    report.subject = format!("invariance of {}⋉{} under twisting", m.alg().label(), m.h().label());
    Ok((iso, report))
}

/// The six auxiliary maps on top of an L-R pair over (A, B).
#[derive(Clone, Debug)]
pub struct TwistData {
    label: String,
    pair: LRPair,
    mu_l: LinearMap,
    mu_r: LinearMap,
    rho_r: LinearMap,
    rho_l: LinearMap,
    lambda_r: LinearMap,
    lambda_l: LinearMap,
}

/// The six maps of a [`TwistData`], in the order `μ_l, μ_r, ρ_r, ρ_l, λ_r, λ_l`.
pub struct SixMaps {
    pub mu_l: LinearMap,
    pub mu_r: LinearMap,
    pub rho_r: LinearMap,
    pub rho_l: LinearMap,
    pub lambda_r: LinearMap,
    pub lambda_l: LinearMap,
}

fn legs(what: &str, map: &LinearMap, inputs: &[usize], outputs: &[usize]) -> Result<LinearMap> {
    let (i, o): (usize, usize) = (inputs.iter().product(), outputs.iter().product());
    if map.in_size() != i || map.out_size() != o {
        return Err(Error::Shape(format!(
            "{what} must be {o}x{i}, got {}x{}",
            map.out_size(),
            map.in_size()
        )));
    }
    Ok(map.regroup(inputs, outputs))
}

impl TwistData {
    pub fn new(label: impl Into<String>, pair: LRPair, maps: SixMaps) -> Result<TwistData> {
        let (na, nb) = (pair.a().dim(), pair.b().dim());
        Ok(TwistData {
            label: label.into(),
            mu_l: legs("mu_l", &maps.mu_l, &[nb, na], &[na])?,
            mu_r: legs("mu_r", &maps.mu_r, &[na, nb], &[na])?,
            rho_r: legs("rho_r", &maps.rho_r, &[na], &[na, nb])?,
            rho_l: legs("rho_l", &maps.rho_l, &[na], &[nb, na])?,
            lambda_r: legs("lambda_r", &maps.lambda_r, &[na], &[na, nb])?,
            lambda_l: legs("lambda_l", &maps.lambda_l, &[na], &[nb, na])?,
            pair,
        })
    }

    /// `ρ_r(a) = λ_r(a) = a⊗1`, `ρ_l(a) = λ_l(a) = 1⊗a`, `b·a = ε(b)a = a·b`
    /// for a given character `ε` of B.
    pub fn trivial(pair: LRPair, epsilon: &[Scalar]) -> Result<TwistData> {
        let (a, b) = (pair.a().clone(), pair.b().clone());
        if epsilon.len() != b.dim() {
            return Err(Error::Shape(format!(
                "character has length {}, expected {}",
                epsilon.len(),
                b.dim()
            )));
        }
        let f = a.field();
        let id = LinearMap::identity(f, &[a.dim()]);
        let eps = LinearMap::functional(f, &[b.dim()], epsilon);
        let right = id.tensor(b.unit());
        let left = b.unit().tensor(&id);
        let maps = SixMaps {
            mu_l: eps.tensor(&id),
            mu_r: id.tensor(&eps),
            rho_r: right.clone(),
            rho_l: left.clone(),
            lambda_r: right,
            lambda_l: left,
        };
        TwistData::new(format!("trivial data on {}", pair.label()), pair, maps)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn pair(&self) -> &LRPair {
        &self.pair
    }

    pub fn a(&self) -> &Algebra {
        self.pair.a()
    }

    pub fn b(&self) -> &Algebra {
        self.pair.b()
    }

    pub fn maps(&self) -> SixMaps {
        SixMaps {
            mu_l: self.mu_l.clone(),
            mu_r: self.mu_r.clone(),
            rho_r: self.rho_r.clone(),
            rho_l: self.rho_l.clone(),
            lambda_r: self.lambda_r.clone(),
            lambda_l: self.lambda_l.clone(),
        }
    }

    pub fn mu_l(&self) -> &LinearMap {
        &self.mu_l
    }

    pub fn mu_r(&self) -> &LinearMap {
        &self.mu_r
    }

    pub fn rho_r(&self) -> &LinearMap {
        &self.rho_r
    }

    pub fn rho_l(&self) -> &LinearMap {
        &self.rho_l
    }

    pub fn lambda_r(&self) -> &LinearMap {
        &self.lambda_r
    }

    pub fn lambda_l(&self) -> &LinearMap {
        &self.lambda_l
    }
}

struct Kit<'m> {
    na: usize,
    nb: usize,
    field: crate::exactfield::Field,
    ma: &'m LinearMap,
    mb: &'m LinearMap,
    ua: &'m LinearMap,
    ub: &'m LinearMap,
    r: &'m LinearMap,
    q: &'m LinearMap,
    mul_l: &'m LinearMap,
    mul_r: &'m LinearMap,
    rr: &'m LinearMap,
    rl: &'m LinearMap,
    lr: &'m LinearMap,
    ll: &'m LinearMap,
}

impl<'m> Kit<'m> {
    fn new(d: &'m TwistData) -> Kit<'m> {
        Kit {
            na: d.a().dim(),
            nb: d.b().dim(),
            field: d.a().field(),
            ma: d.a().mult(),
            mb: d.b().mult(),
            ua: d.a().unit(),
            ub: d.b().unit(),
            r: d.pair.r.map(),
            q: d.pair.q.map(),
            mul_l: &d.mu_l,
            mul_r: &d.mu_r,
            rr: &d.rho_r,
            rl: &d.rho_l,
            lr: &d.lambda_r,
            ll: &d.lambda_l,
        }
    }

    /// An identity whose inputs are named after their algebra: names starting
    /// with `a` live in A, names starting with `b` in B.
    fn id(&self, label: &str, inputs: &[&str], symbols: &[&str]) -> Identity<'m> {
        let mut i = Identity::new(label, self.field);
        for w in inputs {
            i = if w.starts_with('a') {
                i.input(w, self.na, "e")
            } else {
                i.input(w, self.nb, "f")
            };
        }
        i.symbols(symbols)
    }

    fn units(&self, with_lambda: bool) -> Vec<Identity<'m>> {
        let mut v = Vec::new();
        let mut pairs = vec![("unit.rho_r", self.rr, true), ("unit.rho_l", self.rl, false)];
        if with_lambda {
            pairs = vec![("unit.lambda_r", self.lr, true), ("unit.lambda_l", self.ll, false)];
        }
        for (label, map, right) in pairs {
            let (sym, rhs) = if right {
                (
                    ["e", "f"],
                    Side::new().apply(self.ua, &[], &["x"]).apply(self.ub, &[], &["y"]),
                )
            } else {
                (
                    ["f", "e"],
                    Side::new().apply(self.ub, &[], &["x"]).apply(self.ua, &[], &["y"]),
                )
            };
            v.push(
                self.id(label, &[], &sym)
                    .lhs(
                        Side::new()
                            .apply(self.ua, &[], &["1"])
                            .apply(map, &["1"], &["x", "y"])
                            .output(&["x", "y"]),
                    )
                    .rhs(rhs.output(&["x", "y"])),
            );
        }
        if with_lambda {
            return v;
        }
        v.push(
            self.id("unit.mu_l", &["a"], &["e"])
                .lhs(
                    Side::new()
                        .apply(self.ub, &[], &["1"])
                        .apply(self.mul_l, &["1", "a"], &["x"])
                        .output(&["x"]),
                )
                .rhs(Side::new().output(&["a"])),
        );
        v.push(
            self.id("unit.mu_r", &["a"], &["e"])
                .lhs(
                    Side::new()
                        .apply(self.ub, &[], &["1"])
                        .apply(self.mul_r, &["a", "1"], &["x"])
                        .output(&["x"]),
                )
                .rhs(Side::new().output(&["a"])),
        );
        v.push(
            self.id("unit.rho_r.counit", &["a"], &["e"])
                .lhs(
                    Side::new()
                        .apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.ua, &[], &["1"])
                        .apply(self.mul_l, &["a1", "1"], &["y"])
                        .apply(self.ma, &["a0", "y"], &["z"])
                        .output(&["z"]),
                )
                .rhs(Side::new().output(&["a"])),
        );
        v.push(
            self.id("unit.rho_l.counit", &["a"], &["e"])
                .lhs(
                    Side::new()
                        .apply(self.rl, &["a"], &["m", "n"])
                        .apply(self.ua, &[], &["1"])
                        .apply(self.mul_r, &["1", "m"], &["x"])
                        .apply(self.ma, &["x", "n"], &["z"])
                        .output(&["z"]),
                )
                .rhs(Side::new().output(&["a"])),
        );
        v
    }

    /// `a∙a'` on wires `a`, `a2`, leaving the result on `out`.
    fn bullet(&self, side: Side<'m>, a: &str, a2: &str, out: &str) -> Side<'m> {
        side.apply(self.rr, &[a], &["bu0", "bu1"])
            .apply(self.rl, &[a2], &["bum", "bun"])
            .apply(self.mul_r, &["bu0", "bum"], &["bux"])
            .apply(self.mul_l, &["bu1", "bun"], &["buy"])
            .apply(self.ma, &["bux", "buy"], &[out])
    }

    fn pregat(&self) -> Vec<Identity<'m>> {
        let s = Side::new;
        vec![
            self.id("act-mult", &["b", "a", "a'"], &["e"])
                .lhs(
                    s().apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.mul_l, &["a1", "a'"], &["x"])
                        .apply(self.ma, &["a0", "x"], &["y"])
                        .apply(self.mul_l, &["b", "y"], &["z"])
                        .output(&["z"]),
                )
                .rhs(
                    s().apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.r, &["b", "a0"], &["a0R", "bR"])
                        .apply(self.mb, &["bR", "a1"], &["c"])
                        .apply(self.mul_l, &["c", "a'"], &["x"])
                        .apply(self.ma, &["a0R", "x"], &["z"])
                        .output(&["z"]),
                ),
            self.id("sup1", &["a", "a'", "b"], &["e"])
                .lhs(
                    s().apply(self.rl, &["a'"], &["m", "n"])
                        .apply(self.mul_r, &["a", "m"], &["x"])
                        .apply(self.ma, &["x", "n"], &["y"])
                        .apply(self.mul_r, &["y", "b"], &["z"])
                        .output(&["z"]),
                )
                .rhs(
                    s().apply(self.rl, &["a'"], &["m", "n"])
                        .apply(self.q, &["n", "b"], &["nQ", "bQ"])
                        .apply(self.mb, &["m", "bQ"], &["c"])
                        .apply(self.mul_r, &["a", "c"], &["x"])
                        .apply(self.ma, &["x", "nQ"], &["z"])
                        .output(&["z"]),
                ),
            self.id("sup2", &["a", "a'"], &["e", "f"])
                .lhs(
                    self.bullet(s(), "a", "a'", "v")
                        .apply(self.rr, &["v"], &["v0", "v1"])
                        .output(&["v0", "v1"]),
                )
                .rhs(
                    s().apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.rr, &["a'"], &["p0", "p1"])
                        .apply(self.r, &["a1", "p0"], &["p0R", "a1R"])
                        .apply(self.rl, &["p0R"], &["m", "n"])
                        .apply(self.mul_r, &["a0", "m"], &["x"])
                        .apply(self.ma, &["x", "n"], &["y"])
                        .apply(self.mb, &["a1R", "p1"], &["c"])
                        .output(&["y", "c"]),
                ),
            self.id("sup3", &["a", "a'"], &["f", "e"])
                .lhs(
                    self.bullet(s(), "a", "a'", "v")
                        .apply(self.rl, &["v"], &["vm", "vn"])
                        .output(&["vm", "vn"]),
                )
                .rhs(
                    s().apply(self.rl, &["a"], &["m", "n"])
                        .apply(self.rl, &["a'"], &["m'", "n'"])
                        .apply(self.q, &["n", "m'"], &["nQ", "m'Q"])
                        .apply(self.mb, &["m", "m'Q"], &["c"])
                        .apply(self.rr, &["nQ"], &["x0", "x1"])
                        .apply(self.mul_l, &["x1", "n'"], &["y"])
                        .apply(self.ma, &["x0", "y"], &["z"])
                        .output(&["c", "z"]),
                ),
            self.id("sup4", &["a"], &["f", "e", "f"])
                .lhs(
                    s().apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.rl, &["a0"], &["m", "n"])
                        .output(&["m", "n", "a1"]),
                )
                .rhs(
                    s().apply(self.rl, &["a"], &["m", "n"])
                        .apply(self.rr, &["n"], &["x0", "x1"])
                        .output(&["m", "x0", "x1"]),
                ),
            self.id("sup5", &["a", "b"], &["e", "f", "f"])
                .lhs(
                    s().apply(self.q, &["a", "b"], &["aQ", "bQ"])
                        .apply(self.rr, &["aQ"], &["x0", "x1"])
                        .output(&["x0", "x1", "bQ"]),
                )
                .rhs(
                    s().apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.q, &["a0", "b"], &["a0Q", "bQ"])
                        .output(&["a0Q", "a1", "bQ"]),
                ),
            self.id("sup6", &["b", "a"], &["f", "e", "f"])
                .lhs(
                    s().apply(self.r, &["b", "a"], &["aR", "bR"])
                        .apply(self.rl, &["aR"], &["m", "n"])
                        .output(&["m", "n", "bR"]),
                )
                .rhs(
                    s().apply(self.rl, &["a"], &["m", "n"])
                        .apply(self.r, &["b", "n"], &["nR", "bR"])
                        .output(&["m", "nR", "bR"]),
                ),
        ]
    }

    fn invundtw(&self) -> Vec<Identity<'m>> {
        let s = Side::new;
        let a_one = |side: Side<'m>| side.apply(self.ub, &[], &["u"]).output(&["a", "u"]);
        let one_a = |side: Side<'m>| side.apply(self.ub, &[], &["u"]).output(&["u", "a"]);
        let mut v = self.units(true);
        v.extend([
            self.id("rho_r-lambda_r", &["a"], &["e", "f"])
                .lhs(
                    s().apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.lr, &["a0"], &["x0", "x1"])
                        .apply(self.mb, &["x1", "a1"], &["c"])
                        .output(&["x0", "c"]),
                )
                .rhs(a_one(s())),
            self.id("lambda_r-rho_r", &["a"], &["e", "f"])
                .lhs(
                    s().apply(self.lr, &["a"], &["x0", "x1"])
                        .apply(self.rr, &["x0"], &["y0", "y1"])
                        .apply(self.mb, &["y1", "x1"], &["c"])
                        .output(&["y0", "c"]),
                )
                .rhs(a_one(s())),
            self.id("extra1", &["a"], &["f", "e"])
                .lhs(
                    s().apply(self.rl, &["a"], &["m", "n"])
                        .apply(self.ll, &["n"], &["p", "q"])
                        .apply(self.mb, &["m", "p"], &["c"])
                        .output(&["c", "q"]),
                )
                .rhs(one_a(s())),
            self.id("extra2", &["a"], &["f", "e"])
                .lhs(
                    s().apply(self.ll, &["a"], &["p", "q"])
                        .apply(self.rl, &["q"], &["m", "n"])
                        .apply(self.mb, &["p", "m"], &["c"])
                        .output(&["c", "n"]),
                )
                .rhs(one_a(s())),
        ]);
        // first: A → A⊗B, second: A → B⊗A
        for (label, first, second) in [
            ("extra6", self.lr, self.ll),
            ("extra11", self.lr, self.rl),
            ("extra13", self.rr, self.ll),
        ] {
            v.push(
                self.id(label, &["a"], &["f", "e", "f"])
                    .lhs(
                        s().apply(first, &["a"], &["x0", "x1"])
                            .apply(second, &["x0"], &["p", "q"])
                            .output(&["p", "q", "x1"]),
                    )
                    .rhs(
                        s().apply(second, &["a"], &["p", "q"])
                            .apply(first, &["q"], &["y0", "y1"])
                            .output(&["p", "y0", "y1"]),
                    ),
            );
        }
        v.extend([
            self.id("lambda_r-mult", &["a", "a'"], &["e", "f"])
                .lhs(
                    s().apply(self.ma, &["a", "a'"], &["p"])
                        .apply(self.lr, &["p"], &["x", "y"])
                        .output(&["x", "y"]),
                )
                .rhs(
                    s().apply(self.lr, &["a"], &["p0", "p1"])
                        .apply(self.r, &["p1", "a'"], &["a'R", "p1R"])
                        .apply(self.rr, &["p0"], &["s0", "s1"])
                        .apply(self.lr, &["a'R"], &["t0", "t1"])
                        .apply(self.mul_l, &["s1", "t0"], &["u"])
                        .apply(self.ma, &["s0", "u"], &["x"])
                        .apply(self.mb, &["t1", "p1R"], &["y"])
                        .output(&["x", "y"]),
                ),
            self.id("extra3", &["a", "a'"], &["f", "e"])
                .lhs(
                    s().apply(self.ma, &["a", "a'"], &["p"])
                        .apply(self.ll, &["p"], &["x", "y"])
                        .output(&["x", "y"]),
                )
                .rhs(
                    s().apply(self.ll, &["a'"], &["p", "q"])
                        .apply(self.q, &["a", "p"], &["aQ", "pQ"])
                        .apply(self.ll, &["aQ"], &["r", "s"])
                        .apply(self.rl, &["q"], &["m", "n"])
                        .apply(self.mul_r, &["s", "m"], &["x"])
                        .apply(self.ma, &["x", "n"], &["y"])
                        .apply(self.mb, &["pQ", "r"], &["c"])
                        .output(&["c", "y"]),
                ),
            self.id("extra4", &["a", "a'"], &["f", "e"])
                .lhs(
                    s().apply(self.rl, &["a'"], &["m", "n"])
                        .apply(self.mul_r, &["a", "m"], &["x"])
                        .apply(self.ma, &["x", "n"], &["y"])
                        .apply(self.rl, &["y"], &["c", "z"])
                        .output(&["c", "z"]),
                )
                .rhs(
                    s().apply(self.rl, &["a"], &["m", "n"])
                        .apply(self.rl, &["a'"], &["m'", "n'"])
                        .apply(self.q, &["n", "m'"], &["nQ", "m'Q"])
                        .apply(self.mb, &["m", "m'Q"], &["c"])
                        .apply(self.ma, &["nQ", "n'"], &["z"])
                        .output(&["c", "z"]),
                ),
        ]);
        let extra5_common = || {
            s().apply(self.rr, &["a"], &["a0", "a1"])
                .apply(self.rl, &["a0"], &["m", "n"])
                .apply(self.rr, &["a'"], &["p0", "p1"])
                .apply(self.rl, &["p0"], &["m'", "n'"])
        };
        v.push(
            self.id("extra5", &["a", "a'"], &["f", "e", "e", "f", "f"])
                .lhs(
                    extra5_common()
                        .apply(self.r, &["m", "n'"], &["n'R", "mR"])
                        .apply(self.q, &["n", "p1"], &["nQ", "p1Q"])
                        .apply(self.mb, &["mR", "p1Q"], &["c"])
                        .output(&["c", "nQ", "n'R", "m'", "a1"]),
                )
                .rhs(
                    extra5_common()
                        .apply(self.mb, &["p1", "m"], &["c"])
                        .output(&["c", "n", "n'", "m'", "a1"]),
                ),
        );
        v.extend([
            self.id("extra7", &["a", "a'", "b"], &["f", "e", "f", "e", "f"])
                .lhs(
                    s().apply(self.rl, &["a'"], &["m", "n"])
                        .apply(self.q, &["n", "b"], &["nQ", "bQ"])
                        .apply(self.ll, &["nQ"], &["p", "s"])
                        .apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.r, &["p", "a0"], &["a0R", "pR"])
                        .apply(self.mb, &["pR", "a1"], &["c"])
                        .output(&["c", "s", "m", "a0R", "bQ"]),
                )
                .rhs(
                    s().apply(self.rl, &["a'"], &["m", "n"])
                        .apply(self.q, &["n", "b"], &["nQ", "bQ"])
                        .apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.q, &["nQ", "a1"], &["nQq", "a1q"])
                        .apply(self.ll, &["nQq"], &["p", "s"])
                        .apply(self.mb, &["a1q", "p"], &["c"])
                        .output(&["c", "s", "m", "a0", "bQ"]),
                ),
            self.id("extra8", &["a", "a'", "b"], &["e", "f", "e", "f", "f"])
                .lhs(
                    s().apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.rl, &["a'"], &["m", "n"])
                        .apply(self.r, &["b", "a0"], &["a0R", "bR"])
                        .apply(self.lr, &["a0R"], &["x0", "x1"])
                        .apply(self.q, &["n", "x1"], &["nQ", "x1Q"])
                        .apply(self.mb, &["m", "x1Q"], &["c"])
                        .output(&["x0", "c", "nQ", "a1", "bR"]),
                )
                .rhs(
                    s().apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.rl, &["a'"], &["m", "n"])
                        .apply(self.r, &["b", "a0"], &["a0r", "br"])
                        .apply(self.r, &["m", "a0r"], &["a0rR", "mR"])
                        .apply(self.lr, &["a0rR"], &["x0", "x1"])
                        .apply(self.mb, &["x1", "mR"], &["c"])
                        .output(&["x0", "c", "n", "a1", "br"]),
                ),
            self.id("extra9", &["a", "b", "b'"], &["e", "f", "f", "f", "f", "f"])
                .lhs(
                    s().apply(self.rl, &["a"], &["m", "n"])
                        .apply(self.q, &["n", "b'"], &["nQ", "b'Q"])
                        .apply(self.ll, &["nQ"], &["p", "s"])
                        .apply(self.rr, &["s"], &["s0", "s1"])
                        .apply(self.r, &["b", "s0"], &["s0R", "bR"])
                        .output(&["s0R", "s1", "m", "p", "bR", "b'Q"]),
                )
                .rhs(
                    s().apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.r, &["b", "a0"], &["a0R", "bR"])
                        .apply(self.rl, &["a0R"], &["m", "n"])
                        .apply(self.q, &["n", "b'"], &["nQ", "b'Q"])
                        .apply(self.ll, &["nQ"], &["p", "s"])
                        .output(&["s", "a1", "m", "p", "bR", "b'Q"]),
                ),
            self.id("extra10", &["a", "b", "b'"], &["f", "e", "f", "f", "f", "f"])
                .lhs(
                    s().apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.r, &["b", "a0"], &["a0R", "bR"])
                        .apply(self.lr, &["a0R"], &["x0", "x1"])
                        .apply(self.rl, &["x0"], &["m", "n"])
                        .apply(self.q, &["n", "b'"], &["nQ", "b'Q"])
                        .output(&["x1", "nQ", "m", "a1", "bR", "b'Q"]),
                )
                .rhs(
                    s().apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.rl, &["a0"], &["m", "n"])
                        .apply(self.r, &["b", "n"], &["nR", "bR"])
                        .apply(self.q, &["nR", "b'"], &["nRQ", "b'Q"])
                        .apply(self.lr, &["nRQ"], &["x0", "x1"])
                        .output(&["x1", "x0", "m", "a1", "bR", "b'Q"]),
                ),
            self.id("extra12", &["a", "b", "b'"], &["e", "f", "f", "f", "f"])
                .lhs(
                    s().apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.mul_r, &["a0", "b'"], &["x"])
                        .apply(self.r, &["b", "x"], &["xR", "bR"])
                        .apply(self.lr, &["xR"], &["y0", "y1"])
                        .apply(self.rr, &["y0"], &["z0", "z1"])
                        .output(&["z0", "z1", "y1", "bR", "a1"]),
                )
                .rhs(
                    s().apply(self.rr, &["a"], &["a0", "a1"])
                        .apply(self.r, &["b", "a0"], &["a0R", "bR"])
                        .apply(self.lr, &["a0R"], &["y0", "y1"])
                        .apply(self.rr, &["y0"], &["z0", "z1"])
                        .apply(self.mul_r, &["z0", "b'"], &["w"])
                        .output(&["w", "z1", "y1", "bR", "a1"]),
                ),
            self.id("extra14", &["a'", "b", "b'"], &["f", "f", "f", "e", "f"])
                .lhs(
                    s().apply(self.rl, &["a'"], &["m", "n"])
                        .apply(self.mul_l, &["b", "n"], &["x"])
                        .apply(self.q, &["x", "b'"], &["xQ", "b'Q"])
                        .apply(self.ll, &["xQ"], &["p", "s"])
                        .apply(self.rl, &["s"], &["u", "v"])
                        .output(&["m", "p", "u", "v", "b'Q"]),
                )
                .rhs(
                    s().apply(self.rl, &["a'"], &["m", "n"])
                        .apply(self.q, &["n", "b'"], &["nQ", "b'Q"])
                        .apply(self.ll, &["nQ"], &["p", "s"])
                        .apply(self.rl, &["s"], &["u", "v"])
                        .apply(self.mul_l, &["b", "v"], &["w"])
                        .output(&["m", "p", "u", "w", "b'Q"]),
                ),
        ]);
        v
    }
}

fn verify_all(subject: String, identities: Vec<Identity<'_>>) -> Report {
    let outcomes = identities.par_iter().map(Identity::verify).collect();
    Report { subject, outcomes }
}

/// Unit normalizations, `act-mult`, `sup1` to `sup6` and `comb1`.
pub fn check_pregat(d: &TwistData) -> Report {
    let kit = Kit::new(d);
    let mut ids = kit.units(false);
    ids.extend(kit.pregat());
    let mut report = verify_all(format!("bullet algebra hypotheses for {}", d.label()), ids);
    report.outcomes.extend(
        check_lr_pair(d.pair())
            .outcomes
            .into_iter()
            .filter(|o| o.label == "comb1"),
    );
    report
}

/// `Ã = (A, ∙, 1)` with `a∙a' = (a(0)·a'<-1>)(a(1)·a'<0>)`.
pub fn build_bullet_algebra(d: &TwistData) -> Result<Algebra> {
    require("bullet algebra", check_pregat(d))?;
    Ok(build_bullet_algebra_unchecked(d))
}

pub fn build_bullet_algebra_unchecked(d: &TwistData) -> Algebra {
    let kit = Kit::new(d);
    let mult = kit
        .bullet(Side::new(), "a", "a'", "v")
        .output(&["v"])
        .tabulate(kit.field, &[("a", kit.na), ("a'", kit.na)]);
    Algebra::from_maps(format!("{}~", d.a().label()), mult, d.a().unit().clone())
        .expect("bullet product has the legs of the original")
}

/// Unit normalizations of `λ_r`, `λ_l` and every hypothesis from `rho_r-lambda_r` to `extra14`.
pub fn check_invundtw(d: &TwistData) -> Result<Report> {
    require("bullet algebra hypotheses", check_pregat(d))?;
    require("L-R pair", check_lr_suite(d.pair()))?;
    let kit = Kit::new(d);
    Ok(verify_all(
        format!("invariance hypotheses for {}", d.label()),
        kit.invundtw(),
    ))
}

/// `R̃(b⊗a) = a(0)_R[0] ⊗ a(0)_R[1] b_R a(1)` and
/// `Q̃(a⊗b) = a<0>_Q{0} ⊗ a<-1> b_Q a<0>_Q{-1}` over `(Ã, B)`, with the
/// report of the full axiom suite.
pub fn build_twisted_pair(d: &TwistData) -> Result<(LRPair, Report)> {
    require("invariance hypotheses", check_invundtw(d)?)?;
    let pair = build_twisted_pair_unchecked(d);
    let report = check_lr_suite(&pair);
    Ok((pair, report))
}

fn build_twisted_pair_unchecked(d: &TwistData) -> LRPair {
    let kit = Kit::new(d);
    let at = build_bullet_algebra_unchecked(d);
    let b = d.b().clone();
    let r = Side::new()
        .apply(kit.rr, &["a"], &["a0", "a1"])
        .apply(kit.r, &["b", "a0"], &["a0R", "bR"])
        .apply(kit.lr, &["a0R"], &["x0", "x1"])
        .apply(kit.mb, &["x1", "bR"], &["c"])
        .apply(kit.mb, &["c", "a1"], &["d"])
        .output(&["x0", "d"])
        .tabulate(kit.field, &[("b", kit.nb), ("a", kit.na)]);
    let q = Side::new()
        .apply(kit.rl, &["a"], &["m", "n"])
        .apply(kit.q, &["n", "b"], &["nQ", "bQ"])
        .apply(kit.ll, &["nQ"], &["p", "s"])
        .apply(kit.mb, &["m", "bQ"], &["c"])
        .apply(kit.mb, &["c", "p"], &["d"])
        .output(&["s", "d"])
        .tabulate(kit.field, &[("a", kit.na), ("b", kit.nb)]);
    let r = TwistingMap::new("R~", at.clone(), b.clone(), r).expect("legs match");
    let q = QMap::new("Q~", at, b, q).expect("legs match");
    LRPair::new(format!("{}~", d.pair().label()), r, q).expect("same algebras")
}

/// Result of [`invariance_iso`].
pub struct InvarianceIso {
    pub pair: LRPair,
    pub iso: AlgebraMorphism,
    pub inverse: LinearMap,
    pub report: Report,
}

/// `Ã _Q̃⊗_R̃ B → A _Q⊗_R B`, `a⊗b ↦ a(0)<0> ⊗ a(1) b a(0)<-1>`, with the
/// stated inverse `a⊗b ↦ a[0]{0} ⊗ a[1] b a[0]{-1}` checked on both sides.
pub fn invariance_iso(d: &TwistData) -> Result<InvarianceIso> {
    let (pair, suite) = build_twisted_pair(d)?;
    require("twisted pair", suite.clone())?;
    let kit = Kit::new(d);
    let wires = [("a", kit.na), ("b", kit.nb)];
    let n = kit.na * kit.nb;
    let map = Side::new()
        .apply(kit.rr, &["a"], &["a0", "a1"])
        .apply(kit.rl, &["a0"], &["m", "n"])
        .apply(kit.mb, &["a1", "b"], &["c"])
        .apply(kit.mb, &["c", "m"], &["d"])
        .output(&["n", "d"])
        .tabulate(kit.field, &wires);
    let inverse = Side::new()
        .apply(kit.lr, &["a"], &["x0", "x1"])
        .apply(kit.ll, &["x0"], &["p", "s"])
        .apply(kit.mb, &["x1", "b"], &["c"])
        .apply(kit.mb, &["c", "p"], &["d"])
        .output(&["s", "d"])
        .tabulate(kit.field, &wires);
    let iso = AlgebraMorphism::new(
        build_lr_product_unchecked(&pair),
        build_lr_product_unchecked(d.pair()),
        map.regroup(&[n], &[n]),
    )?;
    let mut report = Report::new(format!("invariance isomorphism for {}", d.label()));
    report.absorb("pair.", suite);
    report.outcomes.extend(iso.isomorphism_report().outcomes);
    let id = LinearMap::identity(kit.field, &[kit.na, kit.nb]);
    let names = [("a", "e"), ("b", "f")];
    report.push(compare_maps(
        "inverse.left",
        &inverse.compose(&map),
        &id,
        &names,
        &["e", "f"],
    ));
    report.push(compare_maps(
        "inverse.right",
        &map.compose(&inverse),
        &id,
        &names,
        &["e", "f"],
    ));
    Ok(InvarianceIso {
        pair,
        iso,
        inverse,
        report,
    })
}

/// Data with `A = 𝒜`, `B = H`, `R(h⊗φ) = h₁·φ⊗h₂`, `Q(φ⊗h) = φ·h₂⊗h₁`, the
/// actions as `μ_l`, `μ_r`, and `ρ_r(φ) = G¹·φ⊗G²`, `ρ_l(φ) = F¹⊗φ·F²`,
/// `λ_r(φ) = F¹·φ⊗F²`, `λ_l(φ) = G¹⊗φ·G²`.
pub fn specialize_from_hopf(m: &BimoduleAlgebra, c: &Cocycle) -> Result<TwistData> {
    if m.h() != c.h() {
        return Err(Error::Shape("the cocycle lives on a different bialgebra".into()));
    }
    require("bialgebra", check_bialgebra(m.h()))?;
    require("bimodule algebra", check_bimodule_algebra(m))?;
    require("2-cocycle", check_cocycle(c))?;
    let pair = smash_maps(m, &regular_bicomodule(m.h()))?;
    let f = m.alg().field();
    let na = m.alg().dim();
    let acting_left = |el: &LinearMap| {
        Side::new()
            .apply(el, &[], &["x1", "x2"])
            .apply(m.left(), &["x1", "p"], &["y"])
            .output(&["y", "x2"])
            .tabulate(f, &[("p", na)])
    };
    let acting_right = |el: &LinearMap| {
        Side::new()
            .apply(el, &[], &["x1", "x2"])
            .apply(m.right(), &["p", "x2"], &["y"])
            .output(&["x1", "y"])
            .tabulate(f, &[("p", na)])
    };
    let maps = SixMaps {
        mu_l: m.left().clone(),
        mu_r: m.right().clone(),
        rho_r: acting_left(c.f_inv()),
        rho_l: acting_right(c.f()),
        lambda_r: acting_left(c.f()),
        lambda_l: acting_right(c.f_inv()),
    };
    TwistData::new(format!("{} twisted by a cocycle", pair.label()), pair, maps)
}

/// Compares à of the specialized data with `_F𝒜_{F⁻¹}`, the twisted pair's
/// product with `(_F𝒜_{F⁻¹})⋉H_F`, and the two isomorphisms as matrices.
pub fn compare_with_smash_invariance(m: &BimoduleAlgebra, c: &Cocycle) -> Result<Report> {
    let d = specialize_from_hopf(m, c)?;
    let general = invariance_iso(&d)?;
    let twisted = twist_bimodule_algebra(m, c)?;
    let (special, _) = smash_invariance_iso(m, c)?;
    let mut report = Report::new(format!("specialization check for {}", m.alg().label()));
    report.absorb(
        "bullet=",
        compare_tables("twisted", &build_bullet_algebra(&d)?, twisted.alg()),
    );
    report.absorb(
        "product=",
        compare_tables("smash", &general.iso.source, &special.source),
    );
    report.push(compare_maps(
        "iso",
        general.iso.map(),
        special.map(),
        &[("x", "v")],
        &["v"],
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Field;
    use crate::hopf::HopfAlgebra;
    use crate::twisted::build_lr_product;

    fn q() -> Field {
        Field::Rational
    }

    fn s(v: i64) -> Scalar {
        q().from_i64(v)
    }

    // k^(C2×C2) on idempotents δ_(i,j), index 2i+j
    fn dual_klein() -> Bialgebra {
        let n = 4;
        let unit = vec![q().one(); n];
        let alg = Algebra::from_constants(
            "k^(C2xC2)",
            q(),
            &(0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            (0..n)
                                .map(|k| if i == j && j == k { q().one() } else { q().zero() })
                                .collect()
                        })
                        .collect()
                })
                .collect::<Vec<Vec<Vec<Scalar>>>>(),
            &unit,
        )
        .unwrap();
        let d = LinearMap::from_fn(q(), &[n], &[n, n], |g| {
            (0..n).map(|x| (vec![x, x ^ g[0]], q().one())).collect()
        });
        let e = LinearMap::functional(
            q(),
            &[n],
            &(0..n)
                .map(|i| if i == 0 { q().one() } else { q().zero() })
                .collect::<Vec<_>>(),
        );
        Bialgebra::new(alg, d, e).unwrap()
    }

    fn chi(x: usize, y: usize) -> i64 {
        // χ((i,j),(k,l)) = (-1)^{il}
        if (x >> 1) & 1 == 1 && y & 1 == 1 {
            -1
        } else {
            1
        }
    }

    fn bicharacter() -> Cocycle {
        let h = dual_klein();
        let f: Vec<Scalar> = (0..16).map(|k| s(chi(k / 4, k % 4))).collect();
        Cocycle::new(h, &f, &f).unwrap()
    }

    // 𝒜 = k[C2×C2] on u_g (index of g), left grading deg u_g = g, right grading deg u_g = swap(g)
    fn graded_klein(h: &Bialgebra) -> BimoduleAlgebra {
        let alg = Algebra::from_basis_products("k[C2xC2]", q(), 4, 0, |i, j| vec![(i ^ j, q().one())]);
        let swap = |g: usize| ((g & 1) << 1) | (g >> 1);
        let left = LinearMap::from_fn(q(), &[4, 4], &[4], |xg| {
            if xg[0] == xg[1] {
                vec![(vec![xg[1]], q().one())]
            } else {
                vec![]
            }
        });
        let right = LinearMap::from_fn(q(), &[4, 4], &[4], |gx| {
            if gx[1] == swap(gx[0]) {
                vec![(vec![gx[0]], q().one())]
            } else {
                vec![]
            }
        });
        BimoduleAlgebra::new(h.clone(), alg, left, right).unwrap()
    }

    #[test]
    fn cocycle_examples() {
        let c = bicharacter();
        assert!(check_cocycle(&c).passed(), "{}", check_cocycle(&c));
        assert!(check_cocycle(&Cocycle::trivial(c.h())).passed());
        // F² = 1⊗1 componentwise
        assert!(c.f_vector().iter().all(|v| (v * v).is_one()));
        // (ε⊗id)F ≠ 1 after scaling F by 2
        let twice: Vec<Scalar> = c.f_vector().iter().map(|v| v * &s(2)).collect();
        let half: Vec<Scalar> = c
            .f_vector()
            .iter()
            .map(|v| v * &q().from_ratio(1, 2).unwrap())
            .collect();
        let bad = Cocycle::new(c.h().clone(), &twice, &half).unwrap();
        let rep = check_cocycle(&bad);
        assert!(rep.outcome("inverse.left").unwrap().passed());
        assert!(!rep.outcome("counit.left").unwrap().passed());
    }

    #[test]
    fn twist_of_commutative_dual_is_trivial() {
        let c = bicharacter();
        let hf = drinfeld_twist(c.h(), &c).unwrap();
        assert!(check_bialgebra(&hf).passed());
        assert_eq!(hf.comult(), c.h().comult());
        assert_eq!(drinfeld_twist(c.h(), &Cocycle::trivial(c.h())).unwrap(), *c.h());
    }

    #[test]
    fn bicharacter_bullet_table() {
        let c = bicharacter();
        let m = graded_klein(c.h());
        assert!(check_bimodule_algebra(&m).passed(), "{}", check_bimodule_algebra(&m));
        let t = twist_bimodule_algebra(&m, &c).unwrap();
        assert!(crate::algebra::check_algebra(t.alg()).passed());
        assert!(check_bimodule_algebra(&t).passed());
        // u_g ∙ u_h = χ⁻¹(g, h) χ(swap g, swap h) u_{gh}
        let swap = |g: usize| ((g & 1) << 1) | (g >> 1);
        for g in 0..4 {
            for h in 0..4 {
                let expected = chi(g, h) * chi(swap(g), swap(h));
                assert_eq!(t.alg().structure_constant(g, h, g ^ h), s(expected), "g={g} h={h}");
            }
        }
        let same = twist_bimodule_algebra(&m, &Cocycle::trivial(c.h())).unwrap();
        assert_eq!(same.alg(), m.alg());
    }

    #[test]
    fn smash_invariance() {
        let c = bicharacter();
        let m = graded_klein(c.h());
        let (iso, rep) = smash_invariance_iso(&m, &c).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(iso.source.dim(), 16);
        let (iso, rep) = smash_invariance_iso(&m, &Cocycle::trivial(c.h())).unwrap();
        assert!(rep.passed());
        assert!(iso.map().is_identity());
    }

    #[test]
    fn hopf_specialization_pipeline() {
        let c = bicharacter();
        let m = graded_klein(c.h());
        let d = specialize_from_hopf(&m, &c).unwrap();
        assert!(check_pregat(&d).passed(), "{}", check_pregat(&d));
        let inv = check_invundtw(&d).unwrap();
        assert!(inv.passed(), "{inv}");
        let res = invariance_iso(&d).unwrap();
        assert!(res.report.passed(), "{}", res.report);
        let cmp = compare_with_smash_invariance(&m, &c).unwrap();
        assert!(cmp.passed(), "{cmp}");
    }

    #[test]
    fn trivial_data_collapses() {
        let c = Cocycle::trivial(&dual_klein());
        let m = graded_klein(c.h());
        let d = specialize_from_hopf(&m, &c).unwrap();
        let (pair, rep) = build_twisted_pair(&d).unwrap();
        assert!(rep.passed());
        assert_eq!(pair.r.map(), d.pair().r.map());
        assert_eq!(pair.q.map(), d.pair().q.map());
        assert!(invariance_iso(&d).unwrap().iso.map().is_identity());
    }

    #[test]
    fn trivial_data_on_a_diagonal_pair() {
        let a = Algebra::from_basis_products("k[x]/(x^2)", q(), 2, 0, |i, j| {
            if i + j < 2 {
                vec![(i + j, q().one())]
            } else {
                vec![]
            }
        });
        let b = a.clone().with_label("k[y]/(y^2)");
        let r = TwistingMap::new(
            "R",
            a.clone(),
            b.clone(),
            LinearMap::from_fn(q(), &[2, 2], &[2, 2], |ji| {
                vec![(vec![ji[1], ji[0]], s(2).pow((ji[0] * ji[1]) as u32))]
            }),
        )
        .unwrap();
        let pair = LRPair::new("p", r, QMap::identity(&a, &b)).unwrap();
        let d = TwistData::trivial(pair, &[q().one(), q().zero()]).unwrap();
        assert_eq!(build_bullet_algebra(&d).unwrap(), a);
        assert!(check_invundtw(&d).unwrap().passed());
        let (p2, rep) = build_twisted_pair(&d).unwrap();
        assert!(rep.passed());
        assert_eq!(p2.r.map(), d.pair().r.map());
        assert!(p2.q.is_identity());
        assert!(build_lr_product(&p2).is_ok());
    }

    #[test]
    fn sweedler_cocycles() {
        // H4 with basis 1, g, x, gx
        let idx = |g: usize, x: usize| 2 * x + g;
        let alg = Algebra::from_basis_products("H4", q(), 4, 0, |i, j| {
            let (g1, x1) = (i % 2, i / 2);
            let (g2, x2) = (j % 2, j / 2);
            if x1 + x2 > 1 {
                return vec![];
            }
            // g^g1 x^x1 g^g2 x^x2 = (-1)^{x1 g2} g^{g1+g2} x^{x1+x2}
            let sign = if x1 == 1 && g2 == 1 { -1 } else { 1 };
            vec![(idx((g1 + g2) % 2, x1 + x2), s(sign))]
        });
        let d = LinearMap::from_fn(q(), &[4], &[4, 4], |i| match i[0] {
            0 => vec![(vec![0, 0], q().one())],
            1 => vec![(vec![1, 1], q().one())],
            2 => vec![(vec![2, 0], q().one()), (vec![1, 2], q().one())],
            _ => vec![(vec![3, 1], q().one()), (vec![0, 3], q().one())],
        });
        let e = LinearMap::functional(q(), &[4], &[s(1), s(1), s(0), s(0)]);
        let h = Bialgebra::new(alg, d, e).unwrap();
        assert!(check_bialgebra(&h).passed(), "{}", check_bialgebra(&h));
        let vector = |entries: &[(usize, usize, i64)]| {
            let mut v = vec![q().zero(); 16];
            for &(i, j, c) in entries {
                v[4 * i + j] = s(c);
            }
            v
        };
        // F = 1⊗1 + t gx⊗x commutes with Δ(H4)
        let jt = Cocycle::new(
            h.clone(),
            &vector(&[(0, 0, 1), (3, 2, 1)]),
            &vector(&[(0, 0, 1), (3, 2, -1)]),
        )
        .unwrap();
        assert!(check_cocycle(&jt).passed(), "{}", check_cocycle(&jt));
        assert_eq!(drinfeld_twist(&h, &jt).unwrap().comult(), h.comult());
        // coboundary (u⊗u)Δ(u⁻¹) with u = 1 + x
        let f = vector(&[(0, 0, 1), (0, 2, 1), (1, 2, -1), (3, 2, 1)]);
        let g = vector(&[(0, 0, 1), (0, 2, -1), (1, 2, 1), (3, 2, -1)]);
        let c = Cocycle::new(h.clone(), &f, &g).unwrap();
        assert!(check_cocycle(&c).passed(), "{}", check_cocycle(&c));
        let hf = drinfeld_twist(&h, &c).unwrap();
        assert!(check_bialgebra(&hf).passed());
        assert_ne!(hf.comult(), h.comult());
        let swapped = Cocycle::new(h.clone(), &f, &f).unwrap();
        assert!(!check_cocycle(&swapped).outcome("inverse.left").unwrap().passed());
        let anti = LinearMap::from_fn(q(), &[4], &[4], |i| match i[0] {
            0 => vec![(vec![0], q().one())],
            1 => vec![(vec![1], q().one())],
            2 => vec![(vec![3], s(-1))],
            _ => vec![(vec![2], q().one())],
        });
        let hopf = HopfAlgebra::new(h, anti, None).unwrap();
        assert!(crate::hopf::check_hopf(&hopf).passed());
    }
}
