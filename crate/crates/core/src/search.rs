//! Finite-field census of twisting maps and L-R pairs between two fixed
//! algebras whose unit is the basis vector `e₀`.
//!
//! Unit conditions fix every column of R and Q with a unit leg, so a
//! candidate is the list of remaining entries read as base-p digits (first
//! entry most significant). Candidates are tested in the order tw4, tw5, tw4',
//! tw5', comb1, comb2 and counted under the first identity they violate.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{check_algebra, Algebra};
use crate::diagram::{LinearMap, SparseVec};
use crate::error::{Error, Result};
use crate::exactfield::{Field, Scalar};
use crate::twisted::{
    build_lr_product_unchecked, check_lr_pair, check_qmap, check_twisting_map, LRPair, QMap, TwistingMap,
};

/// Largest algebra dimension accepted by [`census`].
pub const MAX_DIM: usize = 3;

/// Number of valid candidates listed in a census.
pub const REPRESENTATIVES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    /// Twisting maps R alone.
    R,
    /// Pairs (R, Q).
    Rq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random { seed: u64 },
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub a: Algebra,
    pub b: Algebra,
    pub target: Target,
    pub mode: Mode,
    /// Maximal number of candidates to evaluate.
    pub budget: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representative {
    pub digits: String,
    pub r: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub field: String,
    pub a: String,
    pub b: String,
    pub dims: [usize; 2],
    pub target: Target,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub budget: u64,
    pub free_entries: usize,
    pub candidate_space: String,
    pub evaluated: u64,
    pub partial: bool,
    pub valid: u64,
    pub rejected: BTreeMap<String, u64>,
    pub product_check_failures: u64,
    pub contains_flip: bool,
    pub representatives: Vec<Representative>,
}

impl Census {
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("census serializes");
        s.push('\n');
        s
    }
}

struct Space {
    field: Field,
    p: u64,
    na: usize,
    nb: usize,
    target: Target,
    per_map: usize,
}

impl Space {
    fn new(cfg: &SearchConfig) -> Result<Space> {
        let field = cfg.a.field();
        if cfg.b.field() != field {
            return Err(Error::Shape("both algebras must be over the same field".into()));
        }
        let p = match field {
            Field::Prime(p) => p,
            Field::Rational => return Err(Error::Unsupported("search needs a prime field".into())),
        };
        let (na, nb) = (cfg.a.dim(), cfg.b.dim());
        if na > MAX_DIM || nb > MAX_DIM {
            return Err(Error::Unsupported(format!(
                "search is limited to dimensions <= {MAX_DIM}, got ({na}, {nb})"
            )));
        }
        for alg in [&cfg.a, &cfg.b] {
            if alg.unit_index() != Some(0) {
                return Err(Error::Unsupported(format!(
                    "the unit of {} must be the basis vector e0",
                    alg.label()
                )));
            }
        }
        let per_map = (na - 1) * (nb - 1) * na * nb;
        Ok(Space {
            field,
            p,
            na,
            nb,
            target: cfg.target,
            per_map,
        })
    }

    fn free(&self) -> usize {
        match self.target {
            Target::R => self.per_map,
            Target::Rq => 2 * self.per_map,
        }
    }

    fn size(&self) -> BigUint {
        BigUint::from(self.p).pow(self.free() as u32)
    }

    fn digits_of(&self, mut index: u64) -> Vec<u64> {
        let mut d = vec![0; self.free()];
        for slot in d.iter_mut().rev() {
            *slot = index % self.p;
            index /= self.p;
        }
        d
    }

    fn scalar(&self, v: u64) -> Scalar {
        Scalar::Prime {
            value: v,
            modulus: self.p,
        }
    }

    fn r(&self, cfg: &SearchConfig, digits: &[u64]) -> TwistingMap {
        // input (j, i) = e_j ⊗ e_i in B⊗A, unit legs go to e_i ⊗ e_j
        let n = self.na * self.nb;
        let mut free = digits.chunks(n);
        let columns = (0..n)
            .map(|col| {
                let (j, i) = (col / self.na, col % self.na);
                if i == 0 || j == 0 {
                    SparseVec::from([(i * self.nb + j, self.field.one())])
                } else {
                    self.column(free.next().expect("enough digits"))
                }
            })
            .collect();
        let map = LinearMap::from_columns(self.field, &[self.nb, self.na], &[self.na, self.nb], columns);
        TwistingMap::new("R", cfg.a.clone(), cfg.b.clone(), map).expect("legs")
    }

    fn q(&self, cfg: &SearchConfig, digits: &[u64]) -> QMap {
        let n = self.na * self.nb;
        let mut free = digits.chunks(n);
        let columns = (0..n)
            .map(|col| {
                let (i, j) = (col / self.nb, col % self.nb);
                if i == 0 || j == 0 {
                    SparseVec::from([(col, self.field.one())])
                } else {
                    self.column(free.next().expect("enough digits"))
                }
            })
            .collect();
        let map = LinearMap::from_columns(self.field, &[self.na, self.nb], &[self.na, self.nb], columns);
        QMap::new("Q", cfg.a.clone(), cfg.b.clone(), map).expect("legs")
    }

    fn column(&self, digits: &[u64]) -> SparseVec {
        digits
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(row, &d)| (row, self.scalar(d)))
            .collect()
    }

    /// Digits of R = flip (and Q = id).
    fn flip_digits(&self) -> Vec<u64> {
        let mut d = Vec::with_capacity(self.free());
        for j in 1..self.nb {
            for i in 1..self.na {
                d.extend((0..self.na * self.nb).map(|row| u64::from(row == i * self.nb + j)));
            }
        }
        if self.target == Target::Rq {
            for i in 1..self.na {
                for j in 1..self.nb {
                    d.extend((0..self.na * self.nb).map(|row| u64::from(row == i * self.nb + j)));
                }
            }
        }
        d
    }
}

enum Verdict {
    Rejected(&'static str),
    Valid { product_ok: bool },
}

const ORDER: [&str; 6] = ["tw4", "tw5", "tw4'", "tw5'", "comb1", "comb2"];

fn first_failure(labels: &[&'static str], report: &crate::report::Report) -> Option<&'static str> {
    labels
        .iter()
        .copied()
        .find(|l| report.outcome(l).is_some_and(|o| !o.passed()))
}

fn evaluate(space: &Space, cfg: &SearchConfig, digits: &[u64]) -> Verdict {
    let (rd, qd) = digits.split_at(space.per_map);
    let r = space.r(cfg, rd);
    if let Some(l) = first_failure(&ORDER[..2], &check_twisting_map(&r)) {
        return Verdict::Rejected(l);
    }
    let q = match space.target {
        Target::R => QMap::identity(&cfg.a, &cfg.b),
        Target::Rq => {
            let q = space.q(cfg, qd);
            if let Some(l) = first_failure(&ORDER[2..4], &check_qmap(&q)) {
                return Verdict::Rejected(l);
            }
            q
        }
    };
    let pair = LRPair::new("candidate", r, q).expect("same algebras");
    if space.target == Target::Rq {
        if let Some(l) = first_failure(&ORDER[4..], &check_lr_pair(&pair)) {
            return Verdict::Rejected(l);
        }
    }
    Verdict::Valid {
        product_ok: check_algebra(&build_lr_product_unchecked(&pair)).passed(),
    }
}

fn rows(m: &LinearMap) -> Vec<Vec<String>> {
    m.to_matrix()
        .to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

/// Runs a census. Evaluation is parallel; counts and the lexicographically
/// smallest valid candidates do not depend on the number of threads.
pub fn census(cfg: &SearchConfig) -> Result<Census> {
    let space = Space::new(cfg)?;
    let size = space.size();
    let (candidates, partial): (Vec<Vec<u64>>, bool) = match cfg.mode {
        Mode::Exhaustive => {
            let limit = u64::try_from(&size).map_or(cfg.budget, |s| s.min(cfg.budget));
            let partial = BigUint::from(limit) < size;
            ((0..limit).map(|i| space.digits_of(i)).collect(), partial)
        }
        Mode::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let draws = (0..cfg.budget)
                .map(|_| (0..space.free()).map(|_| rng.gen_range(0..space.p)).collect())
                .collect();
            (draws, true)
        }
    };
    let verdicts: Vec<Verdict> = candidates.par_iter().map(|d| evaluate(&space, cfg, d)).collect();

    let mut rejected: BTreeMap<String, u64> = ORDER
        .iter()
        .filter(|l| cfg.target == Target::Rq || !l.ends_with('\'') && !l.starts_with("comb"))
        .map(|l| (l.to_string(), 0))
        .collect();
    let mut valid: Vec<&Vec<u64>> = Vec::new();
    let mut product_check_failures = 0;
    for (d, v) in candidates.iter().zip(&verdicts) {
        match v {
            Verdict::Rejected(l) => *rejected.get_mut(*l).expect("known label") += 1,
            Verdict::Valid { product_ok } => {
                valid.push(d);
                if !product_ok {
                    product_check_failures += 1;
                }
            }
        }
    }
    let flip = space.flip_digits();
    let contains_flip = valid.iter().any(|d| **d == flip);
    let valid_count = valid.len() as u64;
    valid.sort();
    valid.dedup();
    let representatives = valid
        .into_iter()
        .take(REPRESENTATIVES)
        .map(|d| {
            let (rd, qd) = d.split_at(space.per_map);
            Representative {
                digits: d.iter().map(ToString::to_string).collect(),
                r: rows(space.r(cfg, rd).map()),
                q: (cfg.target == Target::Rq).then(|| rows(space.q(cfg, qd).map())),
            }
        })
        .collect();
    let (mode, seed) = match cfg.mode {
        Mode::Exhaustive => ("exhaustive".to_string(), None),
        Mode::Random { seed } => ("random".to_string(), Some(seed)),
    };
    Ok(Census {
        field: space.field.to_string(),
        a: cfg.a.label().to_string(),
        b: cfg.b.label().to_string(),
        dims: [space.na, space.nb],
        target: cfg.target,
        mode,
        seed,
        budget: cfg.budget,
        free_entries: space.free(),
        candidate_space: size.to_string(),
        evaluated: candidates.len() as u64,
        partial,
        valid: valid_count,
        rejected,
        product_check_failures,
        contains_flip,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{group_algebra, truncated_polynomial};

    fn kc2(p: u64) -> Algebra {
        group_algebra(2, Field::prime(p).unwrap())
            .unwrap()
            .bialg()
            .alg()
            .clone()
    }

    fn cfg(a: Algebra, b: Algebra, target: Target, mode: Mode, budget: u64) -> SearchConfig {
        SearchConfig {
            a,
            b,
            target,
            mode,
            budget,
        }
    }

    // brute-force oracle: tw4/tw5 written out on kC2⊗kC2 with R(g⊗g) = Σ c_k e_k
    fn oracle_count() -> u64 {
        let mut count = 0;
        for code in 0..16u32 {
            let c: Vec<u32> = (0..4).map(|k| (code >> (3 - k)) & 1).collect();
            // R(g⊗g) = c0 1⊗1 + c1 1⊗g + c2 g⊗1 + c3 g⊗g; multiplicativity in A:
            // R(g⊗g·g) = R(g⊗1) = 1⊗g must equal (g·g)_R-expansion: applying R twice
            let r = |b: u32, a: u32| -> Vec<(u32, u32, u32)> {
                match (b, a) {
                    (0, a) => vec![(a, 0, 1)],
                    (b, 0) => vec![(0, b, 1)],
                    _ => (0..4)
                        .filter(|&k| c[k as usize] == 1)
                        .map(|k| (k / 2, k % 2, 1))
                        .collect(),
                }
            };
            // tw4: R(b⊗aa') = a_R a'_r ⊗ (b_R)_r, checked for b = g, a = a' = g
            let mut lhs = [0u32; 4];
            for (x, y, v) in r(1, 0) {
                lhs[(x * 2 + y) as usize] += v;
            }
            let mut rhs = [0u32; 4];
            for (a1, b1, v) in r(1, 1) {
                for (a2, b2, w) in r(b1, 1) {
                    rhs[(((a1 + a2) % 2) * 2 + b2) as usize] += v * w;
                }
            }
            let tw4 = lhs.iter().zip(&rhs).all(|(l, r)| l % 2 == r % 2);
            // tw5: R(bb'⊗a) = a_R_r ⊗ b_r b'_R
            let mut rhs5 = [0u32; 4];
            for (a1, b1, v) in r(1, 1) {
                for (a2, b2, w) in r(1, a1) {
                    rhs5[(a2 * 2 + (b2 + b1) % 2) as usize] += v * w;
                }
            }
            let mut lhs5 = [0u32; 4];
            for (x, y, v) in r(0, 1) {
                lhs5[(x * 2 + y) as usize] += v;
            }
            let tw5 = lhs5.iter().zip(&rhs5).all(|(l, r)| l % 2 == r % 2);
            if tw4 && tw5 {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn exhaustive_gf2_kc2() {
        let c = census(&cfg(kc2(2), kc2(2), Target::R, Mode::Exhaustive, 1 << 20)).unwrap();
        assert!(!c.partial);
        assert_eq!(c.evaluated, 16);
        assert_eq!(c.candidate_space, "16");
        assert!(c.contains_flip);
        assert_eq!(c.valid, oracle_count());
        assert_eq!(c.valid + c.rejected.values().sum::<u64>(), 16);
        assert_eq!(c.product_check_failures, 0);
        let pairs = census(&cfg(kc2(2), kc2(2), Target::Rq, Mode::Exhaustive, 1 << 20)).unwrap();
        assert_eq!(pairs.evaluated, 256);
        assert!(pairs.contains_flip);
        assert_eq!(pairs.product_check_failures, 0);
    }

    #[test]
    fn random_mode_is_reproducible() {
        let a = truncated_polynomial("x", 3, Field::prime(3).unwrap());
        let b = truncated_polynomial("y", 2, Field::prime(3).unwrap());
        let run = |seed| {
            census(&cfg(a.clone(), b.clone(), Target::Rq, Mode::Random { seed }, 200))
                .unwrap()
                .to_json_string()
        };
        assert_eq!(run(7), run(7));
        assert_ne!(run(7), run(8));
    }

    #[test]
    fn budget_marks_partial_censuses() {
        let a = truncated_polynomial("x", 3, Field::prime(2).unwrap());
        let c = census(&cfg(a.clone(), a, Target::R, Mode::Exhaustive, 100)).unwrap();
        assert!(c.partial);
        assert_eq!(c.evaluated, 100);
        assert_eq!(c.candidate_space, BigUint::from(2u32).pow(36).to_string());
    }

    #[test]
    fn refusals() {
        let f2 = Field::prime(2).unwrap();
        let big = truncated_polynomial("x", 4, f2);
        let err = census(&cfg(big.clone(), big, Target::R, Mode::Exhaustive, 10)).unwrap_err();
        assert!(err.to_string().contains("<= 3"));
        let rational = truncated_polynomial("x", 2, Field::Rational);
        assert!(census(&cfg(rational.clone(), rational, Target::R, Mode::Exhaustive, 10)).is_err());
    }
}
