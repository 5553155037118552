//! Concrete instances for every construction, generated by code and validated
//! when the catalog is loaded. [`controls`] holds deliberately broken variants
//! together with the checks expected to reject them.

use rayon::prelude::*;

use crate::algebra::{check_algebra, Algebra};
use crate::diagram::LinearMap;
use crate::error::{require, Error, Result};
use crate::exactfield::{Field, Scalar};
use crate::hopf::{
    check_bialgebra, check_bicomodule_algebra, check_bimodule_algebra, check_hopf, check_ydl, regular_bicomodule,
    smash_maps, Bialgebra, BicomoduleAlgebra, BimoduleAlgebra, HopfAlgebra, YDLAlgebra,
};
use crate::invariance::{check_cocycle, check_invundtw, check_pregat, specialize_from_hopf, Cocycle, TwistData};
use crate::iterate::{check_hexagons, TripleData};
use crate::report::Report;
use crate::twisted::{
    canonical_twistors, check_lr_suite, check_qmap, check_twisting_map, check_twistor, LRPair, QMap, TwistingMap,
    Twistor,
};

fn q() -> Field {
    Field::Rational
}

/// `kCₙ` on `{1, g, …, gⁿ⁻¹}` with `Δg = g⊗g`, `S(g) = g⁻¹`.
pub fn group_algebra(n: usize, field: Field) -> Result<HopfAlgebra> {
    if n == 0 {
        return Err(Error::Shape("a cyclic group needs order at least 1".into()));
    }
    let alg = Algebra::from_basis_products(format!("kC{n}"), field, n, 0, |i, j| vec![((i + j) % n, field.one())]);
    let comult = LinearMap::from_fn(field, &[n], &[n, n], |i| vec![(vec![i[0], i[0]], field.one())]);
    let counit = LinearMap::functional(field, &[n], &vec![field.one(); n]);
    let inverse = LinearMap::from_fn(field, &[n], &[n], |i| vec![(vec![(n - i[0]) % n], field.one())]);
    HopfAlgebra::new(Bialgebra::new(alg, comult, counit)?, inverse.clone(), Some(inverse))
}

/// `k[x]/(xᵐ)` on `{1, x, …, xᵐ⁻¹}`.
pub fn truncated_polynomial(var: &str, m: usize, field: Field) -> Algebra {
    Algebra::from_basis_products(format!("k[{var}]/({var}^{m})"), field, m, 0, |i, j| {
        if i + j < m {
            vec![(i + j, field.one())]
        } else {
            vec![]
        }
    })
}

/// `k[x]/(x²−1)` on `{1, x}`.
pub fn sign_algebra() -> Algebra {
    Algebra::from_basis_products("k[x]/(x^2-1)", q(), 2, 0, |i, j| vec![((i + j) % 2, q().one())])
}

/// `k[x,y]/(x²−1, y²−1)` on `{1, x, y, xy}` (bit 0 is x, bit 1 is y).
pub fn klein_algebra() -> Algebra {
    Algebra::from_basis_products("k[C2xC2]", q(), 4, 0, |i, j| vec![(i ^ j, q().one())])
}

fn swap_bits(i: usize) -> usize {
    ((i & 1) << 1) | (i >> 1)
}

const H4_ONE: usize = 0;
const H4_G: usize = 1;
const H4_X: usize = 2;
const H4_GX: usize = 3;

/// Sweedler's 4-dimensional Hopf algebra on `{1, g, x, gx}`:
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δx = x⊗1 + g⊗x`, `S(x) = −gx`.
pub fn sweedler_h4() -> HopfAlgebra {
    let alg = Algebra::from_basis_products("H4", q(), 4, 0, |i, j| {
        let (g1, x1) = (i % 2, i / 2);
        let (g2, x2) = (j % 2, j / 2);
        if x1 + x2 > 1 {
            return vec![];
        }
        let sign = if x1 == 1 && g2 == 1 { -1 } else { 1 };
        vec![(2 * (x1 + x2) + (g1 + g2) % 2, q().from_i64(sign))]
    });
    let one = q().one();
    let comult = LinearMap::from_fn(q(), &[4], &[4, 4], |i| match i[0] {
        H4_ONE => vec![(vec![H4_ONE, H4_ONE], one.clone())],
        H4_G => vec![(vec![H4_G, H4_G], one.clone())],
        H4_X => vec![(vec![H4_X, H4_ONE], one.clone()), (vec![H4_G, H4_X], one.clone())],
        _ => vec![(vec![H4_GX, H4_G], one.clone()), (vec![H4_ONE, H4_GX], one.clone())],
    });
    let counit = LinearMap::functional(q(), &[4], &[q().one(), q().one(), q().zero(), q().zero()]);
    let antipode = |sx: i64, sgx: i64| {
        LinearMap::from_fn(q(), &[4], &[4], move |i| match i[0] {
            H4_X => vec![(vec![H4_GX], q().from_i64(sx))],
            H4_GX => vec![(vec![H4_X], q().from_i64(sgx))],
            k => vec![(vec![k], q().one())],
        })
    };
    let bialg = Bialgebra::new(alg, comult, counit).expect("H4 legs");
    HopfAlgebra::new(bialg, antipode(-1, 1), Some(antipode(1, -1))).expect("H4 antipode legs")
}

/// `k[x]/(x²−1)` over `kC₂` with `g·x = −x`; the right action is the same
/// sign action or trivial.
pub fn sign_bimodule(two_sided: bool) -> BimoduleAlgebra {
    let h = group_algebra(2, q()).expect("kC2").bialg().clone();
    let a = sign_algebra();
    let left = LinearMap::from_fn(q(), &[2, 2], &[2], |ga| {
        let s = if ga[0] == 1 && ga[1] == 1 { -1 } else { 1 };
        vec![(vec![ga[1]], q().from_i64(s))]
    });
    let right = if two_sided {
        left.compose(&LinearMap::flip(q(), 2, 2))
    } else {
        BimoduleAlgebra::trivial(&h, &a).right().clone()
    };
    BimoduleAlgebra::new(h, a, left, right).expect("sign action legs")
}

/// `k[u,v]/(u², v²)` over H₄ on `{1, u, v, uv}`: `g·u = −u`, `x·u = 1`, H₄
/// acting trivially on v from the left; `v·g = −v`, `v·x = 1`, trivially on u
/// from the right.
pub fn sweedler_bimodule() -> BimoduleAlgebra {
    let h = sweedler_h4().bialg().clone();
    let alg = Algebra::from_basis_products("k[u,v]/(u^2,v^2)", q(), 4, 0, |i, j| {
        if i & j == 0 {
            vec![(i | j, q().one())]
        } else {
            vec![]
        }
    });
    // bit is the variable acted on: 1 for u, 2 for v
    let act = |h: usize, b: usize, bit: usize| -> Vec<(usize, Scalar)> {
        let (g, x) = (h % 2, h / 2);
        let (target, mut sign) = if x == 1 {
            if b & bit == 0 {
                return vec![];
            }
            (b & !bit, 1)
        } else {
            (b, 1)
        };
        if g == 1 && target & bit != 0 {
            sign = -sign;
        }
        vec![(target, q().from_i64(sign))]
    };
    let left = LinearMap::from_fn(q(), &[4, 4], &[4], |hb| {
        act(hb[0], hb[1], 1).into_iter().map(|(t, c)| (vec![t], c)).collect()
    });
    // b·(g^a x^c) = (b·g^a)·x^c
    let right = LinearMap::from_fn(q(), &[4, 4], &[4], |bh| {
        let (g, x) = (bh[1] % 2, bh[1] / 2);
        let mut out = vec![(bh[0], q().one())];
        for (step, on) in [(H4_G, g == 1), (H4_X, x == 1)] {
            if on {
                out = out
                    .into_iter()
                    .flat_map(|(b, c)| act(step, b, 2).into_iter().map(move |(t, d)| (t, &c * &d)))
                    .collect();
            }
        }
        out.into_iter().map(|(t, c)| (vec![t], c)).collect()
    });
    BimoduleAlgebra::new(h, alg, left, right).expect("Sweedler action legs")
}

fn diagonal_r(a: &Algebra, b: &Algebra, r: &Scalar) -> Result<TwistingMap> {
    let (na, nb) = (a.dim(), b.dim());
    let map = LinearMap::from_fn(r.field(), &[nb, na], &[na, nb], |ji| {
        vec![(vec![ji[1], ji[0]], r.pow((ji[0] * ji[1]) as u32))]
    });
    TwistingMap::new(format!("R_{r}"), a.clone(), b.clone(), map)
}

fn diagonal_q(a: &Algebra, b: &Algebra, s: &Scalar) -> Result<QMap> {
    let (na, nb) = (a.dim(), b.dim());
    let map = LinearMap::from_fn(s.field(), &[na, nb], &[na, nb], |ij| {
        vec![(ij.to_vec(), s.pow((ij[0] * ij[1]) as u32))]
    });
    QMap::new(format!("Q_{s}"), a.clone(), b.clone(), map)
}

/// `A = k[x]/(xᵐ)`, `B = k[y]/(yᵐ)`, `R(yʲ⊗xⁱ) = qⁱʲ xⁱ⊗yʲ`, `Q(xⁱ⊗yʲ) = qⁱʲ xⁱ⊗yʲ`.
pub fn diagonal_pair(m: usize, q: &Scalar) -> Result<LRPair> {
    diagonal_pair_general(m, q, q)
}

/// [`diagonal_pair`] with independent parameters `r` for R and `q` for Q.
pub fn diagonal_pair_general(m: usize, r: &Scalar, q: &Scalar) -> Result<LRPair> {
    if m < 2 {
        return Err(Error::Shape(format!("diagonal pairs need m >= 2, got {m}")));
    }
    if r.is_zero() || q.is_zero() {
        return Err(Error::Shape("diagonal parameters must be nonzero".into()));
    }
    let a = truncated_polynomial("x", m, r.field());
    let b = truncated_polynomial("y", m, r.field());
    LRPair::new(
        format!("diagonal(m={m}, r={r}, q={q})"),
        diagonal_r(&a, &b, r)?,
        diagonal_q(&a, &b, q)?,
    )
}

/// `R(y⊗x) = −x⊗y + 1⊗1` on `k[x]/(x²)`, `k[y]/(y²)`, flip on the other basis pairs.
pub fn clifford_map(a: &Algebra, b: &Algebra) -> TwistingMap {
    let map = LinearMap::from_fn(q(), &[2, 2], &[2, 2], |ji| {
        if ji == [1, 1] {
            vec![(vec![1, 1], q().from_i64(-1)), (vec![0, 0], q().one())]
        } else {
            vec![(vec![ji[1], ji[0]], q().one())]
        }
    });
    TwistingMap::new("clifford", a.clone(), b.clone(), map).expect("2x2 legs")
}

/// The Clifford twisting map with `Q = id`.
pub fn clifford_pair() -> LRPair {
    let a = truncated_polynomial("x", 2, q());
    let b = truncated_polynomial("y", 2, q());
    LRPair::new("clifford", clifford_map(&a, &b), QMap::identity(&a, &b)).expect("same algebras")
}

/// Smash pair of the two-sided sign action with `kC₂` coacting on itself.
pub fn smash_pair_kc2() -> LRPair {
    let m = sign_bimodule(true);
    smash_maps(&m, &regular_bicomodule(m.h())).expect("catalog smash pair")
}

/// Smash pair of the one-sided sign action (`Q = id`).
pub fn classical_smash_pair_kc2() -> LRPair {
    let m = sign_bimodule(false);
    smash_maps(&m, &regular_bicomodule(m.h())).expect("catalog smash pair")
}

/// Smash pair of [`sweedler_bimodule`] with H₄ coacting on itself.
pub fn smash_pair_h4() -> LRPair {
    let m = sweedler_bimodule();
    smash_maps(&m, &regular_bicomodule(m.h())).expect("catalog smash pair")
}

fn xyz() -> (Algebra, Algebra, Algebra) {
    (
        truncated_polynomial("x", 2, q()),
        truncated_polynomial("y", 2, q()),
        truncated_polynomial("z", 2, q()),
    )
}

/// Flip maps with `Q = id` on `k[x]/(x²)`, `k[y]/(y²)`, `k[z]/(z²)`.
pub fn trivial_triple() -> TripleData {
    let (a, b, c) = xyz();
    TripleData::new(
        "trivial triple",
        LRPair::new("p1", TwistingMap::flip(&a, &b), QMap::identity(&a, &b)).expect("pair"),
        LRPair::new("p2", TwistingMap::flip(&b, &c), QMap::identity(&b, &c)).expect("pair"),
        LRPair::new("p3", TwistingMap::flip(&a, &c), QMap::identity(&a, &c)).expect("pair"),
    )
    .expect("triple")
}

/// Diagonal maps with R parameters (2, 3, −1) and Q parameters (5, 2, 3).
pub fn diagonal_triple() -> TripleData {
    let (a, b, c) = xyz();
    let s = |v: i64| q().from_i64(v);
    let pair = |label: &str, x: &Algebra, y: &Algebra, r: i64, t: i64| {
        LRPair::new(
            label,
            diagonal_r(x, y, &s(r)).expect("R"),
            diagonal_q(x, y, &s(t)).expect("Q"),
        )
        .expect("pair")
    };
    TripleData::new(
        "diagonal triple",
        pair("p1", &a, &b, 2, 5),
        pair("p2", &b, &c, 3, 2),
        pair("p3", &a, &c, -1, 3),
    )
    .expect("triple")
}

/// Clifford maps on all three pairs with `Q = id`.
pub fn clifford_triple() -> TripleData {
    let (a, b, c) = xyz();
    TripleData::new(
        "clifford triple",
        LRPair::new("p1", clifford_map(&a, &b), QMap::identity(&a, &b)).expect("pair"),
        LRPair::new("p2", clifford_map(&b, &c), QMap::identity(&b, &c)).expect("pair"),
        LRPair::new("p3", clifford_map(&a, &c), QMap::identity(&a, &c)).expect("pair"),
    )
    .expect("triple")
}

fn grading_left(h: &Bialgebra, n: usize, deg: impl Fn(usize) -> usize) -> LinearMap {
    LinearMap::from_fn(h.field(), &[n], &[h.dim(), n], |i| {
        vec![(vec![deg(i[0]), i[0]], h.field().one())]
    })
}

fn grading_right(h: &Bialgebra, n: usize, deg: impl Fn(usize) -> usize) -> LinearMap {
    LinearMap::from_fn(h.field(), &[n], &[n, h.dim()], |i| {
        vec![(vec![i[0], deg(i[0])], h.field().one())]
    })
}

/// `k[x]/(x²−1)` over `kC₂` with the sign action, `λ(x) = g⊗x` and trivial
/// right structures, together with the sign bimodule algebra as `𝒜`.
pub fn ydl_instance() -> (YDLAlgebra, BimoduleAlgebra) {
    let m = sign_bimodule(false);
    let h = m.h().clone();
    let a = m.alg().clone();
    let c = BicomoduleAlgebra::new(
        h.clone(),
        a.clone(),
        grading_left(&h, 2, |i| i),
        BicomoduleAlgebra::trivial(&h, &a).right().clone(),
    )
    .expect("coaction legs");
    (YDLAlgebra::new(m.clone(), c).expect("same algebra"), m)
}

/// All structures trivial on `k[x]/(x²−1)` over `kC₂`.
pub fn ydl_trivial() -> (YDLAlgebra, BimoduleAlgebra) {
    let h = group_algebra(2, q()).expect("kC2").bialg().clone();
    let a = sign_algebra();
    let y =
        YDLAlgebra::new(BimoduleAlgebra::trivial(&h, &a), BicomoduleAlgebra::trivial(&h, &a)).expect("same algebra");
    (y, BimoduleAlgebra::trivial(&h, &a))
}

/// `k[C₂×C₂]` over `kC₂` with g swapping x and y from the left and
/// `deg x = deg y = g` on the left; right structures trivial.
pub fn ydl_swap() -> YDLAlgebra {
    swap_ydl(|i| (i & 1) ^ (i >> 1))
}

fn swap_ydl(deg: impl Fn(usize) -> usize) -> YDLAlgebra {
    let h = group_algebra(2, q()).expect("kC2").bialg().clone();
    let a = klein_algebra();
    let left = LinearMap::from_fn(q(), &[2, 4], &[4], |ga| {
        vec![(vec![if ga[0] == 1 { swap_bits(ga[1]) } else { ga[1] }], q().one())]
    });
    let m = BimoduleAlgebra::new(
        h.clone(),
        a.clone(),
        left,
        BimoduleAlgebra::trivial(&h, &a).right().clone(),
    )
    .expect("legs");
    let c = BicomoduleAlgebra::new(
        h.clone(),
        a.clone(),
        grading_left(&h, 4, deg),
        BicomoduleAlgebra::trivial(&h, &a).right().clone(),
    )
    .expect("legs");
    YDLAlgebra::new(m, c).expect("same algebra")
}

/// `k^(C₂×C₂)` on the idempotents `δ_(i,j)` (index `2i+j`) and the cocycle
/// `F = Σ χ(x,y) δ_x⊗δ_y`, `χ((i,j),(k,l)) = (−1)^{il}`, with `F⁻¹ = F`.
pub fn bicharacter_cocycle() -> (Bialgebra, Cocycle) {
    let h = dual_klein();
    let f: Vec<Scalar> = (0..16).map(|k| q().from_i64(bicharacter(k / 4, k % 4))).collect();
    let c = Cocycle::new(h.clone(), &f, &f).expect("16 entries");
    (h, c)
}

fn bicharacter(x: usize, y: usize) -> i64 {
    if (x >> 1) & 1 == 1 && y & 1 == 1 {
        -1
    } else {
        1
    }
}

/// The dual group algebra `k^(C₂×C₂)`: `δ_x δ_y = [x=y] δ_x`, `Δδ_g = Σ δ_x⊗δ_{x⁻¹g}`.
pub fn dual_klein() -> Bialgebra {
    let n = 4;
    let constants: Vec<Vec<Vec<Scalar>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| if i == j && j == k { q().one() } else { q().zero() })
                        .collect()
                })
                .collect()
        })
        .collect();
    let alg = Algebra::from_constants("k^(C2xC2)", q(), &constants, &vec![q().one(); n]).expect("constants");
    let comult = LinearMap::from_fn(q(), &[n], &[n, n], |g| {
        (0..n).map(|x| (vec![x, x ^ g[0]], q().one())).collect()
    });
    let counit = LinearMap::functional(
        q(),
        &[n],
        &(0..n)
            .map(|i| if i == 0 { q().one() } else { q().zero() })
            .collect::<Vec<_>>(),
    );
    Bialgebra::new(alg, comult, counit).expect("legs")
}

/// `k[C₂×C₂]` graded by `deg u_g = g` on the left and `deg u_g = swap(g)` on
/// the right, as a `k^(C₂×C₂)`-bimodule algebra `δ_x·u_g = [x=g] u_g`.
pub fn graded_klein_bimodule() -> BimoduleAlgebra {
    let h = dual_klein();
    let a = klein_algebra();
    let left = LinearMap::from_fn(q(), &[4, 4], &[4], |xg| {
        if xg[0] == xg[1] {
            vec![(vec![xg[1]], q().one())]
        } else {
            vec![]
        }
    });
    let right = LinearMap::from_fn(q(), &[4, 4], &[4], |gx| {
        if gx[1] == swap_bits(gx[0]) {
            vec![(vec![gx[0]], q().one())]
        } else {
            vec![]
        }
    });
    BimoduleAlgebra::new(h, a, left, right).expect("legs")
}

fn h4_element(entries: &[(usize, usize, i64)]) -> Vec<Scalar> {
    let mut v = vec![q().zero(); 16];
    for &(i, j, c) in entries {
        v[4 * i + j] = q().from_i64(c);
    }
    v
}

/// `F = 1⊗1 + gx⊗x` on H₄, `F⁻¹ = 1⊗1 − gx⊗x`.
pub fn sweedler_cocycle() -> Cocycle {
    Cocycle::new(
        sweedler_h4().bialg().clone(),
        &h4_element(&[(H4_ONE, H4_ONE, 1), (H4_GX, H4_X, 1)]),
        &h4_element(&[(H4_ONE, H4_ONE, 1), (H4_GX, H4_X, -1)]),
    )
    .expect("16 entries")
}

/// The coboundary `F = (u⊗u)Δ(u⁻¹)` on H₄ for `u = 1 + x`; its twist changes Δ.
pub fn sweedler_coboundary() -> Cocycle {
    Cocycle::new(
        sweedler_h4().bialg().clone(),
        &h4_element(&[
            (H4_ONE, H4_ONE, 1),
            (H4_ONE, H4_X, 1),
            (H4_G, H4_X, -1),
            (H4_GX, H4_X, 1),
        ]),
        &h4_element(&[
            (H4_ONE, H4_ONE, 1),
            (H4_ONE, H4_X, -1),
            (H4_G, H4_X, 1),
            (H4_GX, H4_X, -1),
        ]),
    )
    .expect("16 entries")
}

/// One catalog structure.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Payload {
    Algebra(Algebra),
    Bialgebra(Bialgebra),
    Hopf(HopfAlgebra),
    Twisting(TwistingMap),
    QMap(QMap),
    Twistor(Twistor),
    LRPair(LRPair),
    Bimodule(BimoduleAlgebra),
    Bicomodule(BicomoduleAlgebra),
    Ydl(YDLAlgebra),
    Cocycle(Cocycle),
    TwistData(TwistData),
    Triple(TripleData),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Algebra(_) => "algebra",
            Payload::Bialgebra(_) => "bialgebra",
            Payload::Hopf(_) => "hopf",
            Payload::Twisting(_) => "twisting",
            Payload::QMap(_) => "qmap",
            Payload::Twistor(_) => "twistor",
            Payload::LRPair(_) => "lrpair",
            Payload::Bimodule(_) => "bimodule",
            Payload::Bicomodule(_) => "bicomodule",
            Payload::Ydl(_) => "ydl",
            Payload::Cocycle(_) => "cocycle",
            Payload::TwistData(_) => "twistdata",
            Payload::Triple(_) => "triple",
        }
    }
}

/// The full check suite of a structure's kind.
pub fn check_payload(p: &Payload) -> Result<Report> {
    Ok(match p {
        Payload::Algebra(a) => check_algebra(a),
        Payload::Bialgebra(h) => check_bialgebra(h),
        Payload::Hopf(h) => check_hopf(h),
        Payload::Twisting(r) => check_twisting_map(r),
        Payload::QMap(q) => check_qmap(q),
        Payload::Twistor(t) => {
            let mut r = Report::new(format!("twistor {}", t.label()));
            r.absorb("D.", check_algebra(t.algebra()));
            r.outcomes.extend(check_twistor(t).outcomes);
            r
        }
        Payload::LRPair(p) => check_lr_suite(p),
        Payload::Bimodule(m) => {
            let mut r = Report::new(format!("bimodule algebra {}", m.alg().label()));
            r.absorb("H.", check_bialgebra(m.h()));
            r.absorb("A.", check_algebra(m.alg()));
            r.outcomes.extend(check_bimodule_algebra(m).outcomes);
            r
        }
        Payload::Bicomodule(c) => {
            let mut r = Report::new(format!("bicomodule algebra {}", c.alg().label()));
            r.absorb("H.", check_bialgebra(c.h()));
            r.absorb("A.", check_algebra(c.alg()));
            r.outcomes.extend(check_bicomodule_algebra(c).outcomes);
            r
        }
        Payload::Ydl(y) => {
            let mut r = Report::new(format!("YDL algebra {}", y.alg().label()));
            r.absorb("H.", check_bialgebra(y.h()));
            r.absorb("A.", check_algebra(y.alg()));
            r.absorb("bimodule.", check_bimodule_algebra(y.bimod()));
            r.absorb("bicomodule.", check_bicomodule_algebra(y.bicomod()));
            r.outcomes.extend(check_ydl(y).outcomes);
            r
        }
        Payload::Cocycle(c) => {
            let mut r = Report::new(format!("cocycle on {}", c.h().label()));
            r.absorb("H.", check_bialgebra(c.h()));
            r.outcomes.extend(check_cocycle(c).outcomes);
            r
        }
        Payload::TwistData(d) => {
            let mut r = Report::new(format!("twist data {}", d.label()));
            let pregat = check_pregat(d);
            let suite = check_lr_suite(d.pair());
            let ready = pregat.passed() && suite.passed();
            r.absorb("pair.", suite);
            r.outcomes.extend(pregat.outcomes);
            if ready {
                r.outcomes.extend(check_invundtw(d)?.outcomes);
            }
            r
        }
        Payload::Triple(t) => check_hexagons(t)?,
    })
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub payload: Payload,
    pub note: String,
}

/// All entries, each validated by [`check_payload`] when loaded.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

fn entry(id: &str, payload: Payload, note: &str) -> CatalogEntry {
    CatalogEntry {
        id: id.to_string(),
        payload,
        note: note.to_string(),
    }
}

fn entries() -> Vec<CatalogEntry> {
    let s = |v: i64| q().from_i64(v);
    let (ydl, _) = ydl_instance();
    let (_, bichar) = bicharacter_cocycle();
    let twist = specialize_from_hopf(&graded_klein_bimodule(), &bichar).expect("specialization");
    let f5 = Field::prime(5).expect("5 is prime");
    let clifford_twistor = canonical_twistors(&clifford_pair()).expect("twistors").t1;
    vec![
        entry(
            "k",
            Payload::Hopf(group_algebra(1, q()).expect("kC1")),
            "the ground field as a Hopf algebra",
        ),
        entry(
            "kc2",
            Payload::Hopf(group_algebra(2, q()).expect("kC2")),
            "group algebra of C2, S = id",
        ),
        entry(
            "kc4-f5",
            Payload::Hopf(group_algebra(4, f5).expect("kC4")),
            "group algebra of C4 over GF(5)",
        ),
        entry(
            "h4",
            Payload::Hopf(sweedler_h4()),
            "Sweedler's 4-dimensional Hopf algebra, S^4 = id",
        ),
        entry(
            "dual-klein",
            Payload::Bialgebra(dual_klein()),
            "dual group algebra of C2xC2 on idempotents",
        ),
        entry(
            "x2",
            Payload::Algebra(truncated_polynomial("x", 2, q())),
            "dual numbers",
        ),
        entry(
            "x3",
            Payload::Algebra(truncated_polynomial("x", 3, q())),
            "truncated polynomials of degree < 3",
        ),
        entry("sign", Payload::Algebra(sign_algebra()), "k[x]/(x^2-1)"),
        entry("klein", Payload::Algebra(klein_algebra()), "group algebra of C2xC2"),
        entry(
            "sign-bimodule",
            Payload::Bimodule(sign_bimodule(true)),
            "sign action of C2 from both sides",
        ),
        entry(
            "sign-module",
            Payload::Bimodule(sign_bimodule(false)),
            "sign action from the left, trivial from the right",
        ),
        entry(
            "h4-bimodule",
            Payload::Bimodule(sweedler_bimodule()),
            "H4 acting on k[u,v]/(u^2,v^2)",
        ),
        entry(
            "graded-klein",
            Payload::Bimodule(graded_klein_bimodule()),
            "C2xC2-bigraded group algebra as a k^(C2xC2)-bimodule algebra",
        ),
        entry(
            "regular-kc2",
            Payload::Bicomodule(regular_bicomodule(group_algebra(2, q()).expect("kC2").bialg())),
            "kC2 coacting on itself",
        ),
        entry(
            "regular-h4",
            Payload::Bicomodule(regular_bicomodule(sweedler_h4().bialg())),
            "H4 coacting on itself",
        ),
        entry(
            "diagonal-2-2",
            Payload::LRPair(diagonal_pair(2, &s(2)).expect("pair")),
            "quantum-plane pair, m = 2, q = 2",
        ),
        entry(
            "diagonal-3-2-3",
            Payload::LRPair(diagonal_pair_general(3, &s(2), &s(3)).expect("pair")),
            "quantum-plane pair, m = 3, r = 2, q = 3",
        ),
        entry(
            "diagonal-2-1",
            Payload::LRPair(diagonal_pair(2, &s(1)).expect("pair")),
            "flip with Q = id",
        ),
        entry(
            "clifford",
            Payload::LRPair(clifford_pair()),
            "R(y⊗x) = -x⊗y + 1⊗1 with Q = id",
        ),
        entry(
            "smash-kc2",
            Payload::LRPair(smash_pair_kc2()),
            "smash pair of the two-sided sign action",
        ),
        entry(
            "smash-kc2-classical",
            Payload::LRPair(classical_smash_pair_kc2()),
            "smash pair of the one-sided sign action",
        ),
        entry(
            "smash-h4",
            Payload::LRPair(smash_pair_h4()),
            "smash pair of H4 on k[u,v]/(u^2,v^2)",
        ),
        entry(
            "twistor-clifford",
            Payload::Twistor(clifford_twistor),
            "first canonical twistor of the Clifford pair, on A⊗B",
        ),
        entry("ydl", Payload::Ydl(ydl), "sign action with the C2-grading deg x = g"),
        entry("ydl-trivial", Payload::Ydl(ydl_trivial().0), "all structures trivial"),
        entry(
            "ydl-swap",
            Payload::Ydl(ydl_swap()),
            "g swapping x and y, deg x = deg y = g",
        ),
        entry(
            "bicharacter",
            Payload::Cocycle(bichar),
            "chi((i,j),(k,l)) = (-1)^(il) on k^(C2xC2)",
        ),
        entry("h4-cocycle", Payload::Cocycle(sweedler_cocycle()), "1⊗1 + gx⊗x on H4"),
        entry(
            "h4-coboundary",
            Payload::Cocycle(sweedler_coboundary()),
            "(u⊗u)Δ(u^-1) for u = 1 + x",
        ),
        entry(
            "bicharacter-twist",
            Payload::TwistData(twist),
            "bicharacter twist of the graded group algebra",
        ),
        entry("triple-trivial", Payload::Triple(trivial_triple()), "flip maps"),
        entry("triple-diagonal", Payload::Triple(diagonal_triple()), "diagonal maps"),
        entry(
            "triple-clifford",
            Payload::Triple(clifford_triple()),
            "Clifford maps, Q = id",
        ),
    ]
}

impl Catalog {
    /// Builds every entry and runs its checks; the first failing entry is
    /// returned as an error carrying its report.
    pub fn load() -> Result<Catalog> {
        let entries = entries();
        let reports: Vec<Result<Report>> = entries.par_iter().map(|e| check_payload(&e.payload)).collect();
        for (e, r) in entries.iter().zip(reports) {
            require(&format!("catalog entry {}", e.id), r?)?;
        }
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn lr_pairs(&self) -> impl Iterator<Item = (&str, &LRPair)> {
        self.entries.iter().filter_map(|e| match &e.payload {
            Payload::LRPair(p) => Some((e.id.as_str(), p)),
            _ => None,
        })
    }
}

/// Deliberately broken instances and the outcome labels expected to fail.
pub mod controls {
    use super::*;
    use crate::algebra::AlgebraMorphism;
    use crate::hopf::{build_lr_smash_unchecked, iterated_smash};
    use crate::invariance::{smash_invariance_map, twist_bimodule_algebra, SixMaps};

    /// A control: its report and the labels that must be exactly its failures.
    pub struct Control {
        pub id: &'static str,
        pub expected: Vec<String>,
        pub report: Report,
    }

    impl Control {
        pub fn detected(&self) -> bool {
            self.report.failed_labels() == self.expected.iter().map(String::as_str).collect::<Vec<_>>()
        }
    }

    fn control(id: &'static str, expected: &[&str], report: Report) -> Control {
        Control {
            id,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            report,
        }
    }

    /// `k×k` with `e₁e₁ = e₁`, `e₀e₁ = e₁e₀ = 0` but `e₀` declared the unit.
    pub fn broken_unit_algebra() -> Algebra {
        Algebra::from_basis_products("broken unit", q(), 2, 0, |i, j| {
            if i == j {
                vec![(i, q().one())]
            } else {
                vec![]
            }
        })
    }

    pub fn broken_unit_row() -> Control {
        control(
            "broken-unit-row",
            &["unit.left", "unit.right"],
            check_algebra(&broken_unit_algebra()),
        )
    }

    /// [`ydl_swap`] with the left grading `deg x = g`, `deg y = e`, which the
    /// swap action does not preserve.
    pub fn transposed_coaction_ydl() -> YDLAlgebra {
        swap_ydl(|i| i & 1)
    }

    pub fn transposed_coaction() -> Control {
        control(
            "transposed-coaction",
            &["ydl1"],
            check_payload(&Payload::Ydl(transposed_coaction_ydl())).expect("no preconditions"),
        )
    }

    /// `φ⋉h ↦ F¹·φ·F²⋉F²hF¹` for the H₄ cocycle `1⊗1 + gx⊗x`, i.e. F in place of F⁻¹.
    pub fn f_for_f_inverse() -> Control {
        let c = sweedler_cocycle();
        let m = sweedler_bimodule();
        let twisted = twist_bimodule_algebra(&m, &c).expect("valid cocycle");
        let source = build_lr_smash_unchecked(&twisted, &regular_bicomodule(twisted.h()));
        let target = build_lr_smash_unchecked(&m, &regular_bicomodule(m.h()));
        let map = smash_invariance_map(&m, c.f(), c.f());
        let iso = AlgebraMorphism::new(source, target, map).expect("legs");
        control("f-for-f-inverse", &["mult"], iso.isomorphism_report())
    }

    /// Pair 1 diagonal with parameter 2, pairs 2 and 3 Clifford with the
    /// constant term on pair 3 only, all `Q = id`.
    pub fn perturbed_hexagon_triple() -> TripleData {
        let (a, b, c) = xyz();
        TripleData::new(
            "perturbed hexagon",
            LRPair::new(
                "p1",
                diagonal_r(&a, &b, &q().from_i64(2)).expect("R"),
                QMap::identity(&a, &b),
            )
            .expect("pair"),
            LRPair::new("p2", clifford_map(&b, &c), QMap::identity(&b, &c)).expect("pair"),
            LRPair::new("p3", clifford_map(&a, &c), QMap::identity(&a, &c)).expect("pair"),
        )
        .expect("triple")
    }

    pub fn perturbed_hexagon() -> Control {
        control(
            "perturbed-hexagon",
            &["YB"],
            check_hexagons(&perturbed_hexagon_triple()).expect("pairs are valid"),
        )
    }

    /// The four controls of the acceptance suite, in a fixed order.
    pub fn all() -> Vec<Control> {
        vec![
            broken_unit_row(),
            transposed_coaction(),
            f_for_f_inverse(),
            perturbed_hexagon(),
        ]
    }

    /// `R` diagonal with parameter 2, `Q(x⊗y) = −x⊗y + 1⊗1`.
    pub fn comb_failing_pair() -> LRPair {
        let a = truncated_polynomial("x", 2, q());
        let b = truncated_polynomial("y", 2, q());
        let qmap = LinearMap::from_fn(q(), &[2, 2], &[2, 2], |ij| {
            if ij == [1, 1] {
                vec![(vec![1, 1], q().from_i64(-1)), (vec![0, 0], q().one())]
            } else {
                vec![(ij.to_vec(), q().one())]
            }
        });
        LRPair::new(
            "comb-failing",
            diagonal_r(&a, &b, &q().from_i64(2)).expect("R"),
            QMap::new("Q", a, b, qmap).expect("legs"),
        )
        .expect("same algebras")
    }

    /// Right swap action on `k[C₂×C₂]` with the right grading `deg x = g`,
    /// `deg y = e`, so that the right action moves degrees.
    pub fn broken_ydl3() -> YDLAlgebra {
        let h = group_algebra(2, q()).expect("kC2").bialg().clone();
        let a = klein_algebra();
        let right = LinearMap::from_fn(q(), &[4, 2], &[4], |ag| {
            vec![(vec![if ag[1] == 1 { swap_bits(ag[0]) } else { ag[0] }], q().one())]
        });
        let m = BimoduleAlgebra::new(
            h.clone(),
            a.clone(),
            BimoduleAlgebra::trivial(&h, &a).left().clone(),
            right,
        )
        .expect("legs");
        let c = BicomoduleAlgebra::new(
            h.clone(),
            a.clone(),
            BicomoduleAlgebra::trivial(&h, &a).left().clone(),
            grading_right(&h, 4, |i| i & 1),
        )
        .expect("legs");
        YDLAlgebra::new(m, c).expect("same algebra")
    }

    pub fn broken_ydl3_iterated() -> Result<Report> {
        let y = broken_ydl3();
        let a_cal = BimoduleAlgebra::trivial(y.h(), &sign_algebra());
        Ok(iterated_smash(&a_cal, &y)?.report)
    }

    /// The bicharacter specialization with `λ_l(a)` replaced by the flipped `λ_r(a)`.
    pub fn swapped_lambda_l() -> TwistData {
        let (_, c) = bicharacter_cocycle();
        let d = specialize_from_hopf(&graded_klein_bimodule(), &c).expect("specialization");
        let n = d.a().dim();
        let maps = d.maps();
        let flipped = LinearMap::flip(q(), n, d.b().dim()).compose(&maps.lambda_r);
        TwistData::new(
            "swapped lambda_l",
            d.pair().clone(),
            SixMaps {
                lambda_l: flipped,
                ..maps
            },
        )
        .expect("legs")
    }

    /// The bicharacter specialization with the A-leg of `ρ_l` composed with
    /// the automorphism swapping x and y.
    pub fn broken_sup4() -> TwistData {
        let (_, c) = bicharacter_cocycle();
        let d = specialize_from_hopf(&graded_klein_bimodule(), &c).expect("specialization");
        let sigma = LinearMap::from_fn(q(), &[4], &[4], |i| vec![(vec![swap_bits(i[0])], q().one())]);
        let maps = d.maps();
        let rho_l = LinearMap::identity(q(), &[4]).tensor(&sigma).compose(&maps.rho_l);
        TwistData::new("broken sup4", d.pair().clone(), SixMaps { rho_l, ..maps }).expect("legs")
    }
}
