//! Iterating L-R-twisted tensor products over three algebras A, B, C.
//!
//! `p1` lives on (A, B), `p2` on (B, C), `p3` on (A, C). The eight
//! compatibility conditions are checked as identities on triple tensors; the
//! iterated products are both realized on the flat index space of A⊗B⊗C, so
//! "coincide" is literal table equality. Both (V1, T1) and (V2, T2) are
//! checked against the full axiom suite.

use crate::algebra::{compare_tables, Algebra};
use crate::diagram::{Identity, Side};
use crate::error::{require, Error, Result};
use crate::report::Report;
use crate::twisted::{build_lr_product, build_lr_product_unchecked, check_lr_suite, LRPair, QMap, TwistingMap};

#[derive(Clone, Debug)]
pub struct TripleData {
    label: String,
    pub p1: LRPair,
    pub p2: LRPair,
    pub p3: LRPair,
}

impl TripleData {
    pub fn new(label: impl Into<String>, p1: LRPair, p2: LRPair, p3: LRPair) -> Result<TripleData> {
        if p1.a() != p3.a() || p1.b() != p2.a() || p2.b() != p3.b() {
            return Err(Error::Shape(
                "pairs must live on (A, B), (B, C) and (A, C) for common A, B, C".into(),
            ));
        }
        Ok(TripleData {
            label: label.into(),
            p1,
            p2,
            p3,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn a(&self) -> &Algebra {
        self.p1.a()
    }

    pub fn b(&self) -> &Algebra {
        self.p1.b()
    }

    pub fn c(&self) -> &Algebra {
        self.p2.b()
    }
}

fn require_pairs(t: &TripleData) -> Result<()> {
    require("pair on (A, B)", check_lr_suite(&t.p1))?;
    require("pair on (B, C)", check_lr_suite(&t.p2))?;
    require("pair on (A, C)", check_lr_suite(&t.p3))?;
    Ok(())
}

/// (YB), (YBQuri), (comb3)–(comb8); every condition is evaluated.
pub fn check_hexagons(t: &TripleData) -> Result<Report> {
    require_pairs(t)?;
    let (na, nb, nc) = (t.a().dim(), t.b().dim(), t.c().dim());
    let f = t.a().field();
    let (r1, r2, r3) = (t.p1.r.map(), t.p2.r.map(), t.p3.r.map());
    let (q1, q2, q3) = (t.p1.q.map(), t.p2.q.map(), t.p3.q.map());
    let sym = ["e", "f", "g"];
    let id = |label: &str, order: &[&str]| {
        let mut i = Identity::new(label, f);
        for w in order {
            i = match *w {
                "a" => i.input("a", na, "e"),
                "b" => i.input("b", nb, "f"),
                _ => i.input("c", nc, "g"),
            };
        }
        i.symbols(&sym)
    };
    let out = ["a2", "b2", "c2"];
    let mut report = Report::new(format!("hexagon conditions for {}", t.label()));
    report.push(
        id("YB", &["c", "b", "a"])
            .lhs(
                Side::new()
                    .apply(r1, &["b", "a"], &["a1", "b1"])
                    .apply(r3, &["c", "a1"], &["a2", "c1"])
                    .apply(r2, &["c1", "b1"], &["b2", "c2"])
                    .output(&out),
            )
            .rhs(
                Side::new()
                    .apply(r2, &["c", "b"], &["b1", "c1"])
                    .apply(r3, &["c1", "a"], &["a1", "c2"])
                    .apply(r1, &["b1", "a1"], &["a2", "b2"])
                    .output(&out),
            )
            .verify(),
    );
    report.push(
        id("YBQuri", &["a", "b", "c"])
            .lhs(
                Side::new()
                    .apply(q1, &["a", "b"], &["a1", "b1"])
                    .apply(q3, &["a1", "c"], &["a2", "c1"])
                    .apply(q2, &["b1", "c1"], &["b2", "c2"])
                    .output(&out),
            )
            .rhs(
                Side::new()
                    .apply(q2, &["b", "c"], &["b1", "c1"])
                    .apply(q3, &["a", "c1"], &["a1", "c2"])
                    .apply(q1, &["a1", "b1"], &["a2", "b2"])
                    .output(&out),
            )
            .verify(),
    );
    let out = ["a1", "b1", "c1"];
    report.push(
        id("comb3", &["b", "a", "c"])
            .lhs(
                Side::new()
                    .apply(r1, &["b", "a"], &["a1", "b0"])
                    .apply(q2, &["b0", "c"], &["b1", "c1"])
                    .output(&out),
            )
            .rhs(
                Side::new()
                    .apply(q2, &["b", "c"], &["b0", "c1"])
                    .apply(r1, &["b0", "a"], &["a1", "b1"])
                    .output(&out),
            )
            .verify(),
    );
    report.push(
        id("comb4", &["a", "c", "b"])
            .lhs(
                Side::new()
                    .apply(r2, &["c", "b"], &["b0", "c1"])
                    .apply(q1, &["a", "b0"], &["a1", "b1"])
                    .output(&out),
            )
            .rhs(
                Side::new()
                    .apply(q1, &["a", "b"], &["a1", "b0"])
                    .apply(r2, &["c", "b0"], &["b1", "c1"])
                    .output(&out),
            )
            .verify(),
    );
    report.push(
        id("comb5", &["c", "a", "b"])
            .lhs(
                Side::new()
                    .apply(q1, &["a", "b"], &["a0", "b1"])
                    .apply(r3, &["c", "a0"], &["a1", "c1"])
                    .output(&out),
            )
            .rhs(
                Side::new()
                    .apply(r3, &["c", "a"], &["a0", "c1"])
                    .apply(q1, &["a0", "b"], &["a1", "b1"])
                    .output(&out),
            )
            .verify(),
    );
    report.push(
        id("comb6", &["b", "a", "c"])
            .lhs(
                Side::new()
                    .apply(r1, &["b", "a"], &["a0", "b1"])
                    .apply(q3, &["a0", "c"], &["a1", "c1"])
                    .output(&out),
            )
            .rhs(
                Side::new()
                    .apply(q3, &["a", "c"], &["a0", "c1"])
                    .apply(r1, &["b", "a0"], &["a1", "b1"])
                    .output(&out),
            )
            .verify(),
    );
    report.push(
        id("comb7", &["b", "c", "a"])
            .lhs(
                Side::new()
                    .apply(q2, &["b", "c"], &["b1", "c0"])
                    .apply(r3, &["c0", "a"], &["a1", "c1"])
                    .output(&out),
            )
            .rhs(
                Side::new()
                    .apply(r3, &["c", "a"], &["a1", "c0"])
                    .apply(q2, &["b", "c0"], &["b1", "c1"])
                    .output(&out),
            )
            .verify(),
    );
    report.push(
        id("comb8", &["a", "c", "b"])
            .lhs(
                Side::new()
                    .apply(q3, &["a", "c"], &["a1", "c0"])
                    .apply(r2, &["c0", "b"], &["b1", "c1"])
                    .output(&out),
            )
            .rhs(
                Side::new()
                    .apply(r2, &["c", "b"], &["b1", "c0"])
                    .apply(q3, &["a", "c0"], &["a1", "c1"])
                    .output(&out),
            )
            .verify(),
    );
    Ok(report)
}

/// Both iterated products, the pairs that produce them, and the report.
pub struct Iterated {
    /// `(V1, T1)` on `(A _Q₁⊗_R₁ B, C)`.
    pub outer_left: LRPair,
    /// `(V2, T2)` on `(A, B _Q₂⊗_R₂ C)`.
    pub outer_right: LRPair,
    pub left: Algebra,
    pub right: Algebra,
    pub report: Report,
}

/// Builds T1, V1, T2, V2 and both iterated products.
pub fn build_iterated(t: &TripleData) -> Result<Iterated> {
    let hex = check_hexagons(t)?;
    require("iteration", hex.clone())?;
    let (na, nb, nc) = (t.a().dim(), t.b().dim(), t.c().dim());
    let f = t.a().field();
    let (r1, r2, r3) = (t.p1.r.map(), t.p2.r.map(), t.p3.r.map());
    let (q1, q2, q3) = (t.p1.q.map(), t.p2.q.map(), t.p3.q.map());
    let (nab, nbc) = (na * nb, nb * nc);
    let ab = build_lr_product(&t.p1)?;
    let bc = build_lr_product(&t.p2)?;

    let t1 = Side::new()
        .apply(r3, &["c", "a"], &["a1", "c1"])
        .apply(r2, &["c1", "b"], &["b1", "c2"])
        .output(&["a1", "b1", "c2"])
        .tabulate(f, &[("c", nc), ("a", na), ("b", nb)])
        .regroup(&[nc, nab], &[nab, nc]);
    let v1 = Side::new()
        .apply(q3, &["a", "c"], &["a1", "c1"])
        .apply(q2, &["b", "c1"], &["b1", "c2"])
        .output(&["a1", "b1", "c2"])
        .tabulate(f, &[("a", na), ("b", nb), ("c", nc)])
        .regroup(&[nab, nc], &[nab, nc]);
    let t2 = Side::new()
        .apply(r3, &["c", "a"], &["a1", "c1"])
        .apply(r1, &["b", "a1"], &["a2", "b1"])
        .output(&["a2", "b1", "c1"])
        .tabulate(f, &[("b", nb), ("c", nc), ("a", na)])
        .regroup(&[nbc, na], &[na, nbc]);
    let v2 = Side::new()
        .apply(q3, &["a", "c"], &["a1", "c1"])
        .apply(q1, &["a1", "b"], &["a2", "b1"])
        .output(&["a2", "b1", "c1"])
        .tabulate(f, &[("a", na), ("b", nb), ("c", nc)])
        .regroup(&[na, nbc], &[na, nbc]);

    let c = t.c().clone();
    let a = t.a().clone();
    let outer_left = LRPair::new(
        format!("({})⊗{}", ab.label(), c.label()),
        TwistingMap::new("T1", ab.clone(), c.clone(), t1)?,
        QMap::new("V1", ab, c, v1)?,
    )?;
    let outer_right = LRPair::new(
        format!("{}⊗({})", a.label(), bc.label()),
        TwistingMap::new("T2", a.clone(), bc.clone(), t2)?,
        QMap::new("V2", a, bc, v2)?,
    )?;
    let mut report = Report::new(format!("iterated products for {}", t.label()));
    report.outcomes.extend(hex.outcomes);
    report.absorb("(V1,T1).", check_lr_suite(&outer_left));
    report.absorb("(V2,T2).", check_lr_suite(&outer_right));
    let left = build_lr_product_unchecked(&outer_left);
    let right = build_lr_product_unchecked(&outer_right);
    report
        .outcomes
        .extend(compare_tables("coincide", &left, &right).outcomes);
    Ok(Iterated {
        outer_left,
        outer_right,
        left,
        right,
        report,
    })
}
