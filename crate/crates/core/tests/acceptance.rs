//! The acceptance suite: eleven criteria, each printed as one PASS/FAIL line.
//! All comparisons are exact.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lrtwist::algebra::{check_algebra, compare_tables, Algebra};
use lrtwist::catalog::{self, controls, Catalog, Payload};
use lrtwist::exactfield::{Field, Matrix, Scalar};
use lrtwist::hopf::{
    build_lr_smash, check_bialgebra, diagonal_crossed, iterated_smash, regular_bicomodule, smash_maps, BimoduleAlgebra,
    HopfAlgebra,
};
use lrtwist::invariance::{
    build_twisted_pair, check_cocycle, check_invundtw, check_pregat, compare_with_smash_invariance, drinfeld_twist,
    invariance_iso, smash_invariance_iso, specialize_from_hopf, twist_bimodule_algebra,
};
use lrtwist::iterate::{build_iterated, check_hexagons, TripleData};
use lrtwist::report::Report;
use lrtwist::search::{census, Mode, SearchConfig, Target};
use lrtwist::twisted::{
    build_lr_product, build_twisted_by_twistor, build_twisted_product, canonical_twistors, check_lr_suite, check_qmap,
    check_twisting_map, check_twistor, detwist, qop_correspondence, LRPair, QMap, TwistingMap,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn passes(what: &str, r: &Report) -> Result<(), String> {
    match r.first_failure() {
        None => Ok(()),
        Some(o) => Err(format!("{what}: {o}")),
    }
}

fn within(what: &str, t: Duration, limit: Duration) -> Result<(), String> {
    ensure(t < limit, format!("{what} took {t:?}, limit {limit:?}"))
}

fn catalog() -> Catalog {
    Catalog::load().expect("catalog validates")
}

/// Every R occurring in the catalog, with where it came from.
fn catalog_rs(cat: &Catalog) -> Vec<(String, TwistingMap)> {
    let mut out = Vec::new();
    for e in cat.entries() {
        match &e.payload {
            Payload::Twisting(r) => out.push((e.id.clone(), r.clone())),
            Payload::LRPair(p) => out.push((e.id.clone(), p.r.clone())),
            Payload::TwistData(d) => out.push((e.id.clone(), d.pair().r.clone())),
            Payload::Triple(t) => {
                for (i, p) in [&t.p1, &t.p2, &t.p3].into_iter().enumerate() {
                    out.push((format!("{}.p{}", e.id, i + 1), p.r.clone()));
                }
            }
            _ => {}
        }
    }
    out
}

fn catalog_pairs(cat: &Catalog) -> Vec<(String, LRPair)> {
    let mut out: Vec<(String, LRPair)> = cat.lr_pairs().map(|(id, p)| (id.to_string(), p.clone())).collect();
    for e in cat.entries() {
        if let Payload::TwistData(d) = &e.payload {
            out.push((format!("{}.pair", e.id), d.pair().clone()));
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let cat = catalog();
    let pairs: Vec<_> = cat.lr_pairs().collect();
    ensure(pairs.len() >= 4, format!("only {} catalog pairs", pairs.len()))?;
    for id in ["diagonal-2-2", "smash-kc2", "smash-h4"] {
        ensure(
            pairs.iter().any(|(i, _)| *i == id),
            format!("catalog pair {id} missing"),
        )?;
    }
    let mut slowest = Duration::ZERO;
    for (id, p) in &pairs {
        let start = Instant::now();
        passes(id, &check_lr_suite(p))?;
        let product = build_lr_product(p).map_err(|e| format!("{id}: {e}"))?;
        passes(id, &check_algebra(&product))?;
        let t = start.elapsed();
        within(id, t, Duration::from_secs(1))?;
        slowest = slowest.max(t);
    }
    Ok(format!("{} pairs, slowest {slowest:?}", pairs.len()))
}

fn criterion_2() -> Outcome {
    let cat = catalog();
    let rs = catalog_rs(&cat);
    for (id, r) in &rs {
        let pair = LRPair::new("Q = id", r.clone(), QMap::identity(r.a(), r.b())).map_err(|e| e.to_string())?;
        let lr = build_lr_product(&pair).map_err(|e| format!("{id}: {e}"))?;
        let tw = build_twisted_product(r).map_err(|e| format!("{id}: {e}"))?;
        ensure(
            lr.structure_constants() == tw.structure_constants() && lr.unit_vector() == tw.unit_vector(),
            format!("{id}: tables differ"),
        )?;
    }
    Ok(format!("{} twisting maps", rs.len()))
}

/// `(φ⋉h)(φ'⋉h') = (φ·h'₂)(h₁·φ') ⋉ h₂h'₁`, computed from dense structure
/// constants, actions and comultiplication.
fn smash_oracle(m: &BimoduleAlgebra) -> Vec<Vec<Vec<Scalar>>> {
    let h = m.h();
    let f = h.field();
    let (na, nh) = (m.alg().dim(), h.dim());
    let ca = m.alg().structure_constants();
    let ch = h.alg().structure_constants();
    let coproduct = |x: usize| -> Vec<(usize, usize, Scalar)> {
        let mut v = Vec::new();
        for i in 0..nh {
            for j in 0..nh {
                let c = h.comult().entry(i * nh + j, x);
                if !c.is_zero() {
                    v.push((i, j, c));
                }
            }
        }
        v
    };
    let left = |g: usize, p: usize| -> Vec<Scalar> { (0..na).map(|k| m.left().entry(k, g * na + p)).collect() };
    let right = |p: usize, g: usize| -> Vec<Scalar> { (0..na).map(|k| m.right().entry(k, p * nh + g)).collect() };
    let n = na * nh;
    let mut c = vec![vec![vec![f.zero(); n]; n]; n];
    for p in 0..na {
        for x in 0..nh {
            for p2 in 0..na {
                for x2 in 0..nh {
                    let out = &mut c[p * nh + x][p2 * nh + x2];
                    for (x_1, x_2, s) in coproduct(x) {
                        for (y_1, y_2, t) in coproduct(x2) {
                            let u = right(p, y_2);
                            let v = left(x_1, p2);
                            for (i, ui) in u.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                                for (j, vj) in v.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                                    for (k, ck) in ca[i][j].iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                                        for (l, hl) in ch[x_2][y_1].iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                                            let term = &s * &t * ui.clone() * vj * ck * hl;
                                            out[k * nh + l] = &out[k * nh + l] + &term;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    c
}

fn criterion_3() -> Outcome {
    let mut notes = Vec::new();
    for (name, m) in [
        ("kC2", catalog::sign_bimodule(true)),
        ("H4", catalog::sweedler_bimodule()),
    ] {
        let start = Instant::now();
        let c = regular_bicomodule(m.h());
        let pair = smash_maps(&m, &c).map_err(|e| format!("{name}: {e}"))?;
        passes(name, &check_lr_suite(&pair))?;
        let smash = build_lr_smash(&m, &c).map_err(|e| format!("{name}: {e}"))?;
        let via_pair = build_lr_product(&pair).map_err(|e| format!("{name}: {e}"))?;
        passes(name, &compare_tables("smash=product", &smash, &via_pair))?;
        ensure(
            smash.structure_constants() == smash_oracle(&m),
            format!("{name}: table differs from the smash formula"),
        )?;
        let t = start.elapsed();
        within(name, t, Duration::from_secs(1))?;
        notes.push(format!("{name} dim {} in {t:?}", smash.dim()));
    }
    Ok(notes.join(", "))
}

/// Upper triangular 2×2 matrices: `e₀ = 1`, `e₁ = E₁₂`, `e₂ = E₂₂`.
fn upper_triangular(f: Field) -> Algebra {
    Algebra::from_basis_products("T2", f, 3, 0, |i, j| match (i, j) {
        (0, k) | (k, 0) => vec![(k, f.one())],
        (1, 2) | (2, 2) => vec![(i, f.one())],
        _ => vec![],
    })
}

fn criterion_4() -> Outcome {
    let f = Field::prime(3).expect("prime");
    let (a, b) = (upper_triangular(f), catalog::truncated_polynomial("y", 2, f));
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut qmaps, mut failures) = (0, 0);
    for k in 0..20 {
        // Q(e₁⊗y) = c₁ e₁⊗y, Q(e₂⊗y) = c₂ e₂⊗y, every other basis tensor fixed
        let (c1, c2) = (rng.gen_range(0..3), rng.gen_range(0..3));
        let mut m = Matrix::identity(f, 6);
        m.set(3, 3, f.from_i64(c1));
        m.set(5, 5, f.from_i64(c2));
        let q = QMap::from_matrix(format!("candidate {k}"), a.clone(), b.clone(), &m).map_err(|e| e.to_string())?;
        let (qop, report) = qop_correspondence(&q);
        let q_ok = check_qmap(&q).passed();
        let r_ok = check_twisting_map(&qop).passed();
        ensure(
            q_ok == r_ok,
            format!("candidate {k} (c1 = {c1}, c2 = {c2}): Q-map {q_ok}, Q^op twisting {r_ok}"),
        )?;
        passes(&format!("candidate {k}"), &report)?;
        if q_ok {
            qmaps += 1;
        } else {
            failures += 1;
        }
    }
    ensure(
        qmaps > 0 && failures > 0,
        format!("{qmaps} passing and {failures} failing candidates"),
    )?;
    let cat = catalog();
    let pairs = catalog_pairs(&cat);
    for (id, p) in &pairs {
        let (_, report) = qop_correspondence(&p.q);
        passes(id, &report)?;
        ensure(
            report.outcome("table").is_some(),
            format!("{id}: table identity not compared"),
        )?;
    }
    Ok(format!(
        "{qmaps} Q-maps, {failures} non-Q-maps, {} catalog Q's",
        pairs.len()
    ))
}

fn criterion_5() -> Outcome {
    let cat = catalog();
    let pairs = catalog_pairs(&cat);
    for (id, p) in &pairs {
        let ct = canonical_twistors(p).map_err(|e| format!("{id}: {e}"))?;
        passes(id, &ct.report)?;
        let lr = build_lr_product(p).map_err(|e| format!("{id}: {e}"))?;
        for t in [&ct.t1, &ct.t2, &ct.t3] {
            passes(&format!("{id} {}", t.label()), &check_twistor(t))?;
            let deformed = build_twisted_by_twistor(t).map_err(|e| format!("{id}: {e}"))?;
            ensure(
                deformed.structure_constants() == lr.structure_constants(),
                format!("{id}: table of {} differs", t.label()),
            )?;
        }
    }
    Ok(format!("{} pairs", pairs.len()))
}

fn criterion_6() -> Outcome {
    let cat = catalog();
    let mut detwisted = 0;
    for (id, p) in catalog_pairs(&cat) {
        if p.q.matrix().rank() < p.q.matrix().rows() {
            continue;
        }
        let d = detwist(&p).map_err(|e| format!("{id}: {e}"))?;
        passes(&id, &check_twisting_map(&d.p))?;
        ensure(d.iso.is_isomorphism(), format!("{id}: Q is not an isomorphism"))?;
        ensure(
            d.iso.matrix() == p.q.matrix(),
            format!("{id}: the isomorphism is not Q"),
        )?;
        detwisted += 1;
    }
    ensure(detwisted >= 4, format!("only {detwisted} pairs with invertible Q"))?;
    let hopf: [(&str, BimoduleAlgebra, HopfAlgebra); 2] = [
        (
            "kC2",
            catalog::sign_bimodule(true),
            catalog::group_algebra(2, Field::Rational).map_err(|e| e.to_string())?,
        ),
        ("H4", catalog::sweedler_bimodule(), catalog::sweedler_h4()),
    ];
    for (name, m, h) in &hopf {
        let dc = diagonal_crossed(m, h).map_err(|e| format!("{name}: {e}"))?;
        passes(name, &dc.report)?;
        let pair = smash_maps(m, &regular_bicomodule(h.bialg())).map_err(|e| e.to_string())?;
        let d = detwist(&pair).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            d.p.matrix() == dc.p.matrix(),
            format!("{name}: P differs from the diagonal crossed product"),
        )?;
        ensure(
            d.iso.matrix() == dc.iso.matrix(),
            format!("{name}: isomorphisms differ"),
        )?;
    }
    Ok(format!(
        "{detwisted} pairs detwisted, kC2 and H4 agree with the diagonal crossed product"
    ))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let (y, a_cal) = catalog::ydl_instance();
    let it = iterated_smash(&a_cal, &y).map_err(|e| e.to_string())?;
    passes("iterated smash", &it.report)?;
    for prefix in ["(i).", "(ii).", "(iii)"] {
        ensure(
            it.report.outcomes.iter().any(|o| o.label.starts_with(prefix)),
            format!("no {prefix} outcome"),
        )?;
    }
    ensure(
        it.outer_left.dim() == 8 && it.outer_left.structure_constants() == it.outer_right.structure_constants(),
        "iterated tables differ",
    )?;
    passes("outer product", &check_algebra(&it.outer_left))?;
    let t = start.elapsed();
    within("iterated smash", t, Duration::from_secs(1))?;
    Ok(format!("dim {} in {t:?}", it.outer_left.dim()))
}

fn r_matrix(p: &LRPair) -> Matrix {
    p.r.matrix()
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b).expect("kron")
}

fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).expect("mul")
}

/// `T1 = (id_A⊗R₂)(R₃⊗id_B)` on `C⊗A⊗B` and `T2 = (R₁⊗id_C)(id_B⊗R₃)` on `B⊗C⊗A`.
fn classical_t(t: &TripleData) -> (Matrix, Matrix) {
    let f = t.a().field();
    let id = |n: usize| Matrix::identity(f, n);
    let (na, nb, nc) = (t.a().dim(), t.b().dim(), t.c().dim());
    let (r1, r2, r3) = (r_matrix(&t.p1), r_matrix(&t.p2), r_matrix(&t.p3));
    let t1 = mul(&kron(&id(na), &r2), &kron(&r3, &id(nb)));
    let t2 = mul(&kron(&r1, &id(nc)), &kron(&id(nb), &r3));
    (t1, t2)
}

fn criterion_8() -> Outcome {
    for (name, t) in [
        ("trivial", catalog::trivial_triple()),
        ("diagonal", catalog::diagonal_triple()),
    ] {
        passes(name, &check_hexagons(&t).map_err(|e| e.to_string())?)?;
        let it = build_iterated(&t).map_err(|e| format!("{name}: {e}"))?;
        passes(name, &it.report)?;
        passes(&format!("{name} (V1,T1)"), &check_lr_suite(&it.outer_left))?;
        passes(&format!("{name} (V2,T2)"), &check_lr_suite(&it.outer_right))?;
        ensure(
            it.left.structure_constants() == it.right.structure_constants(),
            format!("{name}: iterated tables differ"),
        )?;
    }
    let t = catalog::clifford_triple();
    for p in [&t.p1, &t.p2, &t.p3] {
        ensure(p.q.is_identity(), "Clifford triple must have Q = id")?;
    }
    passes("clifford", &check_hexagons(&t).map_err(|e| e.to_string())?)?;
    let it = build_iterated(&t).map_err(|e| e.to_string())?;
    let (t1, t2) = classical_t(&t);
    ensure(
        it.outer_left.q.is_identity() && it.outer_right.q.is_identity(),
        "outer Q's are not identities",
    )?;
    ensure(it.outer_left.r.matrix() == t1, "T1 differs from the classical map")?;
    ensure(it.outer_right.r.matrix() == t2, "T2 differs from the classical map")?;
    let left = build_twisted_product(&it.outer_left.r).map_err(|e| e.to_string())?;
    let right = build_twisted_product(&it.outer_right.r).map_err(|e| e.to_string())?;
    ensure(
        left.structure_constants() == it.left.structure_constants(),
        "left table is not classical",
    )?;
    ensure(
        right.structure_constants() == it.right.structure_constants(),
        "right table is not classical",
    )?;
    ensure(
        left.structure_constants() == right.structure_constants(),
        "classical iterated tables differ",
    )?;
    Ok("trivial and diagonal triples, classical Clifford case".into())
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let (h, c) = catalog::bicharacter_cocycle();
    let m = catalog::graded_klein_bimodule();
    passes("cocycle", &check_cocycle(&c))?;
    let hf = drinfeld_twist(&h, &c).map_err(|e| e.to_string())?;
    passes("H_F", &check_bialgebra(&hf))?;
    let d = specialize_from_hopf(&m, &c).map_err(|e| e.to_string())?;
    passes("pregat", &check_pregat(&d))?;
    let inv = check_invundtw(&d).map_err(|e| e.to_string())?;
    passes("invundtw", &inv)?;
    ensure(
        inv.outcomes.len() >= 18,
        format!("only {} hypotheses checked", inv.outcomes.len()),
    )?;
    let (pair, _) = build_twisted_pair(&d).map_err(|e| e.to_string())?;
    passes("twisted pair", &check_lr_suite(&pair))?;
    let iso = invariance_iso(&d).map_err(|e| e.to_string())?;
    passes("invariance iso", &iso.report)?;
    ensure(iso.iso.is_isomorphism(), "invariance map is not an isomorphism")?;
    let twisted = twist_bimodule_algebra(&m, &c).map_err(|e| e.to_string())?;
    let bullet = lrtwist::invariance::build_bullet_algebra(&d).map_err(|e| e.to_string())?;
    ensure(
        bullet.structure_constants() == twisted.alg().structure_constants(),
        "Ã differs from the twisted bimodule algebra",
    )?;
    let (special, special_report) = smash_invariance_iso(&m, &c).map_err(|e| e.to_string())?;
    passes("smash invariance", &special_report)?;
    ensure(iso.iso.matrix() == special.matrix(), "the two isomorphisms differ")?;
    ensure(
        iso.iso.source.structure_constants() == special.source.structure_constants(),
        "source tables differ",
    )?;
    passes(
        "specialization",
        &compare_with_smash_invariance(&m, &c).map_err(|e| e.to_string())?,
    )?;
    let t = start.elapsed();
    within("pipeline", t, Duration::from_secs(5))?;
    Ok(format!("{} hypotheses in {t:?}", inv.outcomes.len()))
}

fn witness_index(symbol: &str) -> usize {
    symbol[1..].parse().expect("basis symbol")
}

/// First `(i, j)` in lexicographic order with `f(e_i e_j) ≠ f(e_i) f(e_j)`.
fn first_nonmultiplicative(source: &Algebra, target: &Algebra, f: &Matrix) -> Option<(usize, usize)> {
    let n = source.dim();
    let image = |v: &[Scalar]| f.mul_vec(v).expect("dims");
    for i in 0..n {
        for j in 0..n {
            let prod = source
                .multiply(&source.basis_vector(i), &source.basis_vector(j))
                .expect("dims");
            let (fi, fj) = (image(&source.basis_vector(i)), image(&source.basis_vector(j)));
            if image(&prod) != target.multiply(&fi, &fj).expect("dims") {
                return Some((i, j));
            }
        }
    }
    None
}

/// First `(c, b, a)` in lexicographic order on which the two sides of the
/// braid relation on `C⊗B⊗A` differ.
fn first_braid_failure(t: &TripleData) -> Option<(usize, usize, usize)> {
    let f = t.a().field();
    let id = |n: usize| Matrix::identity(f, n);
    let (na, nb, nc) = (t.a().dim(), t.b().dim(), t.c().dim());
    let (r1, r2, r3) = (r_matrix(&t.p1), r_matrix(&t.p2), r_matrix(&t.p3));
    let lhs = mul(&kron(&r1, &id(nc)), &mul(&kron(&id(nb), &r3), &kron(&r2, &id(na))));
    let rhs = mul(&kron(&id(na), &r2), &mul(&kron(&r3, &id(nb)), &kron(&id(nc), &r1)));
    (0..nc * nb * na)
        .find(|&col| lhs.column(col) != rhs.column(col))
        .map(|col| (col / (nb * na), (col / na) % nb, col % na))
}

fn criterion_10() -> Outcome {
    let all = controls::all();
    for c in &all {
        ensure(
            c.detected(),
            format!(
                "{}: failed {:?}, expected exactly {:?}",
                c.id,
                c.report.failed_labels(),
                c.expected
            ),
        )?;
        ensure(
            c.report.first_failure().and_then(|o| o.witness.as_ref()).is_some(),
            format!("{}: no witness", c.id),
        )?;
    }
    let witness = |id: &str| -> Vec<(String, usize)> {
        let c = all.iter().find(|c| c.id == id).expect("control");
        let w = c
            .report
            .first_failure()
            .and_then(|o| o.witness.clone())
            .expect("witness");
        w.assignment
            .iter()
            .map(|(v, s)| (v.clone(), witness_index(s)))
            .collect()
    };
    let named =
        |pairs: &[(&str, usize)]| -> Vec<(String, usize)> { pairs.iter().map(|(v, i)| (v.to_string(), *i)).collect() };

    // e₀ is declared the unit of k×k but e₀e₁ = 0: the first failing x is e₁.
    let broken = controls::broken_unit_algebra();
    let first_unit = (0..broken.dim())
        .find(|&j| broken.multiply(&broken.unit_vector(), &broken.basis_vector(j)).ok() != Some(broken.basis_vector(j)))
        .expect("unit fails");
    ensure(
        witness("broken-unit-row") == named(&[("x", first_unit)]),
        "broken-unit-row witness",
    )?;

    // deg(g·m) = deg m fails first at h = g, m = x (g·x = y, deg y = e).
    let y = controls::transposed_coaction_ydl();
    let act = y.bimod().left();
    let deg = |m: usize| {
        (0..2)
            .find(|&s| !y.bicomod().left().entry(s * 4 + m, m).is_zero())
            .expect("homogeneous")
    };
    let first_ydl = (0..2)
        .flat_map(|h| (0..4).map(move |m| (h, m)))
        .find(|&(h, m)| {
            let image = (0..4)
                .find(|&k| !act.entry(k, h * 4 + m).is_zero())
                .expect("permutation action");
            deg(image) != deg(m)
        })
        .expect("ydl1 fails");
    ensure(
        witness("transposed-coaction") == named(&[("h", first_ydl.0), ("m", first_ydl.1)]),
        "transposed-coaction witness",
    )?;

    let cocycle = catalog::sweedler_cocycle();
    let m = catalog::sweedler_bimodule();
    let twisted = twist_bimodule_algebra(&m, &cocycle).map_err(|e| e.to_string())?;
    let source = build_lr_smash(&twisted, &regular_bicomodule(twisted.h())).map_err(|e| e.to_string())?;
    let target = build_lr_smash(&m, &regular_bicomodule(m.h())).map_err(|e| e.to_string())?;
    let map = lrtwist::invariance::smash_invariance_map(&m, cocycle.f(), cocycle.f()).to_matrix();
    let (i, j) = first_nonmultiplicative(&source, &target, &map).ok_or("F in place of F⁻¹ is multiplicative")?;
    ensure(
        witness("f-for-f-inverse") == named(&[("x", i), ("y", j)]),
        "f-for-f-inverse witness",
    )?;

    let (c, b, a) = first_braid_failure(&controls::perturbed_hexagon_triple()).ok_or("braid relation holds")?;
    ensure(
        witness("perturbed-hexagon") == named(&[("c", c), ("b", b), ("a", a)]),
        "perturbed-hexagon witness",
    )?;

    let run = |threads: usize| -> Vec<String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("pool");
        pool.install(|| {
            let mut out: Vec<String> = controls::all().iter().map(|c| c.report.to_json().to_string()).collect();
            out.push(
                Catalog::load()
                    .map(|_| "catalog ok".to_string())
                    .unwrap_or_else(|e| e.to_string()),
            );
            out
        })
    };
    ensure(run(1) == run(4), "reports differ between 1 and 4 threads")?;
    Ok(format!("{} controls detected with verified witnesses", all.len()))
}

fn criterion_11() -> Outcome {
    let f = Field::prime(2).expect("prime");
    let kc2 = catalog::group_algebra(2, f)
        .map_err(|e| e.to_string())?
        .bialg()
        .alg()
        .clone();
    let config = |mode| SearchConfig {
        a: kc2.clone(),
        b: kc2.clone(),
        target: Target::R,
        mode,
        budget: 1 << 20,
    };
    let exhaustive = census(&config(Mode::Exhaustive)).map_err(|e| e.to_string())?;
    ensure(exhaustive.contains_flip, "flip not among the valid twisting maps")?;
    ensure(!exhaustive.partial, "exhaustive census is partial")?;
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let mut files = Vec::new();
    for run in 0..2 {
        let mut cfg = config(Mode::Random { seed: 11 });
        cfg.target = Target::Rq;
        cfg.budget = 64;
        let path = dir.join(format!("census-{run}.json"));
        std::fs::write(&path, census(&cfg).map_err(|e| e.to_string())?.to_json_string()).map_err(|e| e.to_string())?;
        files.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(files[0] == files[1], "same-seed census files differ")?;
    Ok(format!(
        "{} valid of {} R candidates, flip included",
        exhaustive.valid, exhaustive.evaluated
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("L-R pairs and their products", criterion_1),
        ("Q = id reduces to the twisted product", criterion_2),
        ("L-R-smash products", criterion_3),
        ("Q-maps versus opposite twisting maps", criterion_4),
        ("canonical twistors", criterion_5),
        ("detwisting", criterion_6),
        ("iterated smash product", criterion_7),
        ("iterated L-R-twisted products", criterion_8),
        ("invariance under twisting", criterion_9),
        ("negative controls", criterion_10),
        ("search census", criterion_11),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let n = i + 1;
        match run() {
            Ok(detail) => println!("PASS {n:>2} {name}: {detail}"),
            Err(why) => {
                println!("FAIL {n:>2} {name}: {why}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
