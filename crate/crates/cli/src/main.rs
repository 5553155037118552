//! `lrtwist`: load structures from JSON documents, run the checks and
//! builders on them, export catalog entries and run finite-field searches.
//!
//! Exit status is 0 when every requested check passed, 1 when a check (or a
//! precondition of a builder) failed and 2 on any other error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lrtwist::algebra::{check_algebra, compare_tables, Algebra};
use lrtwist::catalog::{self, check_payload, Catalog, Payload};
use lrtwist::exactfield::Field;
use lrtwist::hopf::{
    build_lr_smash_unchecked, check_bicomodule_algebra, check_bimodule_algebra, iterated_smash, regular_bicomodule,
    smash_maps_unchecked, BicomoduleAlgebra, BimoduleAlgebra,
};
use lrtwist::invariance::{
    build_bullet_algebra, build_bullet_algebra_unchecked, build_twisted_pair, check_cocycle, check_invundtw,
    check_pregat, compare_with_smash_invariance, invariance_iso, specialize_from_hopf, TwistData,
};
use lrtwist::io::{export_payload, export_product, parse_document, product_basis, Document};
use lrtwist::iterate::{build_iterated, check_hexagons};
use lrtwist::report::Report;
use lrtwist::search::{census, Mode, SearchConfig, Target};
use lrtwist::twisted::{
    build_lr_product, build_lr_product_unchecked, build_q_product, build_q_product_unchecked, build_twisted_by_twistor,
    build_twisted_by_twistor_unchecked, build_twisted_product, build_twisted_product_unchecked, check_lr_suite,
    detwist,
};

#[derive(Parser)]
#[command(
    name = "lrtwist",
    version,
    about = "Exact checks and constructions for L-R-twisted tensor products"
)]
struct Cli {
    /// Output format of the run report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Expected field of the input, or the field to search over.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Where to write the constructed structure, table or census.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Build even if the preconditions fail.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full check suite of one block.
    Check {
        path: PathBuf,
        /// Kind of the block to check; defaults to the last block's kind.
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        label: Option<String>,
    },
    /// Build a product algebra and write it with its multiplication table.
    Build {
        path: PathBuf,
        #[arg(value_enum)]
        product: Product,
        #[arg(long)]
        label: Option<String>,
    },
    /// Iterated products of a triple of pairs, or the iterated smash product
    /// of a bimodule algebra with a YDL algebra (`--module`).
    Iterate {
        path: PathBuf,
        #[arg(long)]
        label: Option<String>,
        /// Label of the bimodule algebra to smash with the YDL algebra.
        #[arg(long)]
        module: Option<String>,
    },
    /// The smash pair of a bimodule algebra and a bicomodule algebra (H
    /// coacting on itself when the document has none).
    Smash {
        path: PathBuf,
        #[arg(long)]
        label: Option<String>,
    },
    /// Twisting of an L-R pair by twist data, or by a cocycle on the smash
    /// pair of a bimodule algebra.
    Invariance {
        path: PathBuf,
        #[arg(long)]
        label: Option<String>,
    },
    /// Replace an L-R pair with invertible Q by an ordinary twisting map.
    Detwist {
        path: PathBuf,
        #[arg(long)]
        label: Option<String>,
    },
    /// Census of twisting maps or L-R pairs over a prime field.
    Search {
        /// `k`, `kc<n>`, `x<m>`, or a document path with an optional `:label`.
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value_t = SearchTarget::R)]
        target: SearchTarget,
        #[arg(long, value_enum, default_value_t = SearchMode::Exhaustive)]
        mode: SearchMode,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// List or export the built-in structures.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Product {
    Twisted,
    Q,
    Lr,
    Smash,
    Iterated,
    Bullet,
    Twistor,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchTarget {
    R,
    Rq,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchMode {
    Exhaustive,
    Random,
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Export { id: String },
}

/// Reports and notes of one command; `data` carries command-specific JSON.
#[derive(Default)]
struct Run {
    reports: Vec<Report>,
    notes: Vec<String>,
    data: Option<Value>,
    /// Printed verbatim instead of a report.
    raw: Option<String>,
}

impl Run {
    fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

const KINDS: [&str; 13] = [
    "algebra",
    "bialgebra",
    "hopf",
    "twisting",
    "qmap",
    "twistor",
    "lrpair",
    "bimodule",
    "bicomodule",
    "ydl",
    "cocycle",
    "twistdata",
    "triple",
];

fn normalize_kind(kind: &str) -> anyhow::Result<&'static str> {
    let k = match kind {
        "R" => "twisting",
        "Q" => "qmap",
        "T" => "twistor",
        other => other,
    };
    KINDS
        .iter()
        .find(|&&known| known == k)
        .copied()
        .ok_or_else(|| anyhow!("unknown kind {kind:?}; expected one of {}", KINDS.join(", ")))
}

struct Input {
    doc: Document,
}

impl Input {
    fn load(path: &Path, field: Option<&str>) -> anyhow::Result<Input> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let doc = parse_document(&text).with_context(|| format!("parsing {}", path.display()))?;
        if let Some(f) = field {
            let f: Field = f.parse()?;
            if f != doc.field {
                bail!("{} is over {}, not {f}", path.display(), doc.field);
            }
        }
        Ok(Input { doc })
    }

    /// The block with the given label, or the last block of one of `kinds`.
    fn select(&self, label: Option<&str>, kinds: &[&str]) -> anyhow::Result<(String, Payload)> {
        let fits = |p: &Payload| kinds.is_empty() || kinds.contains(&p.kind());
        let found = match label {
            Some(l) => {
                let p = self.doc.get(l).ok_or_else(|| anyhow!("no block labeled {l:?}"))?;
                if !fits(p) {
                    bail!("block {l:?} is a {}, expected {}", p.kind(), kinds.join(" or "));
                }
                (l.to_string(), p.clone())
            }
            None => self
                .doc
                .items
                .iter()
                .rev()
                .find(|(_, p)| fits(p))
                .cloned()
                .ok_or_else(|| anyhow!("no {} block in the document", kinds.join(" or ")))?,
        };
        Ok(found)
    }

    fn bicomodule_over(&self, m: &BimoduleAlgebra) -> Option<BicomoduleAlgebra> {
        self.doc.items.iter().rev().find_map(|(_, p)| match p {
            Payload::Bicomodule(c) if c.h() == m.h() => Some(c.clone()),
            _ => None,
        })
    }

    fn bimodule_over(&self, h: &lrtwist::hopf::Bialgebra) -> Option<BimoduleAlgebra> {
        self.doc.items.iter().rev().find_map(|(_, p)| match p {
            Payload::Bimodule(m) if m.h() == h => Some(m.clone()),
            _ => None,
        })
    }
}

fn write_file(path: &Path, contents: &str, run: &mut Run) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))?;
    run.note(format!("wrote {}", path.display()));
    Ok(())
}

/// Writes the algebra with its table, reads it back and records whether
/// the written table is the built one.
fn write_product(cli: &Cli, label: &str, product: &Algebra, basis: &[String], run: &mut Run) -> anyhow::Result<()> {
    let mut output = check_algebra(product);
    output.subject = format!("output {label} (dimension {})", product.dim());
    if let Some(path) = &cli.out {
        write_file(path, &export_product(label, product, basis)?, run)?;
        let back = parse_document(&fs::read_to_string(path)?)?;
        let same = matches!(back.last(), Some((_, Payload::Algebra(a))) if a == product);
        output.push(lrtwist::report::Outcome::condition(
            "round-trip",
            same,
            "re-read table equals the built one",
        ));
    }
    run.reports.push(output);
    Ok(())
}

fn cmd_check(cli: &Cli, path: &Path, kind: Option<&str>, label: Option<&str>) -> anyhow::Result<Run> {
    let input = Input::load(path, cli.field.as_deref())?;
    let kind = kind.map(normalize_kind).transpose()?;
    let kinds: Vec<&str> = kind.into_iter().collect();
    let (label, payload) = input.select(label, &kinds)?;
    let mut report = check_payload(&payload)?;
    if !report.subject.contains(&label) {
        report.subject = format!("{} {label}: {}", payload.kind(), report.subject);
    }
    Ok(Run {
        reports: vec![report],
        ..Run::default()
    })
}

fn smash_inputs(
    input: &Input,
    label: Option<&str>,
    run: &mut Run,
) -> anyhow::Result<(BimoduleAlgebra, BicomoduleAlgebra)> {
    Ok(match input.select(label, &["bimodule", "ydl"])? {
        (_, Payload::Ydl(y)) => (y.bimod().clone(), y.bicomod().clone()),
        (_, Payload::Bimodule(m)) => {
            let c = match input.bicomodule_over(&m) {
                Some(c) => c,
                None => {
                    run.note(format!("{} coacts on itself", m.h().label()));
                    regular_bicomodule(m.h())
                }
            };
            (m, c)
        }
        _ => unreachable!("selected by kind"),
    })
}

fn basis_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}_{i}")).collect()
}

fn cmd_build(cli: &Cli, path: &Path, product: Product, label: Option<&str>) -> anyhow::Result<Run> {
    let input = Input::load(path, cli.field.as_deref())?;
    let mut run = Run::default();
    if cli.force {
        run.note("preconditions not checked (--force)");
    }
    let force = cli.force;
    let (name, algebra, basis) = match product {
        Product::Twisted | Product::Q | Product::Lr => {
            let kinds: &[&str] = match product {
                Product::Twisted => &["twisting", "lrpair"],
                Product::Q => &["qmap", "lrpair"],
                _ => &["lrpair"],
            };
            let (l, p) = input.select(label, kinds)?;
            let alg = match (product, &p) {
                (Product::Twisted, Payload::Twisting(r))
                | (Product::Twisted, Payload::LRPair(lrtwist::twisted::LRPair { r, .. })) => {
                    if force {
                        build_twisted_product_unchecked(r)
                    } else {
                        build_twisted_product(r)?
                    }
                }
                (Product::Q, Payload::QMap(q)) | (Product::Q, Payload::LRPair(lrtwist::twisted::LRPair { q, .. })) => {
                    if force {
                        build_q_product_unchecked(q)
                    } else {
                        build_q_product(q)?
                    }
                }
                (_, Payload::LRPair(pair)) => {
                    if force {
                        build_lr_product_unchecked(pair)
                    } else {
                        build_lr_product(pair)?
                    }
                }
                _ => unreachable!("selected by kind"),
            };
            let (na, nb) = match &p {
                Payload::Twisting(r) => (r.a().dim(), r.b().dim()),
                Payload::QMap(q) => (q.a().dim(), q.b().dim()),
                Payload::LRPair(pair) => (pair.a().dim(), pair.b().dim()),
                _ => unreachable!("selected by kind"),
            };
            (l, alg, product_basis(na, nb))
        }
        Product::Smash => {
            let (m, c) = smash_inputs(&input, label, &mut run)?;
            let pair = smash_maps_unchecked(&m, &c);
            if !force {
                lrtwist::error::require("bimodule algebra", check_bimodule_algebra(&m))?;
                lrtwist::error::require("bicomodule algebra", check_bicomodule_algebra(&c))?;
                lrtwist::error::require("smash pair", check_lr_suite(&pair))?;
            }
            let name = format!("{}⋉{}", m.alg().label(), m.h().label());
            (
                name,
                build_lr_smash_unchecked(&m, &c),
                product_basis(m.alg().dim(), m.h().dim()),
            )
        }
        Product::Iterated => {
            let (l, p) = input.select(label, &["triple"])?;
            let Payload::Triple(t) = p else {
                unreachable!("selected by kind")
            };
            let it = build_iterated(&t)?;
            run.reports.push(it.report);
            let (na, nb, nc) = (t.a().dim(), t.b().dim(), t.c().dim());
            let basis = (0..na * nb * nc)
                .map(|k| format!("e_{}⊗f_{}⊗g_{}", k / (nb * nc), (k / nc) % nb, k % nc))
                .collect();
            (l, it.left, basis)
        }
        Product::Bullet => {
            let (l, p) = input.select(label, &["twistdata"])?;
            let Payload::TwistData(d) = p else {
                unreachable!("selected by kind")
            };
            let alg = if force {
                build_bullet_algebra_unchecked(&d)
            } else {
                build_bullet_algebra(&d)?
            };
            let n = alg.dim();
            (l, alg, basis_names("e", n))
        }
        Product::Twistor => {
            let (l, p) = input.select(label, &["twistor"])?;
            let Payload::Twistor(t) = p else {
                unreachable!("selected by kind")
            };
            let alg = if force {
                build_twisted_by_twistor_unchecked(&t)
            } else {
                build_twisted_by_twistor(&t)?
            };
            let n = alg.dim();
            (l, alg, basis_names("d", n))
        }
    };
    write_product(cli, &format!("{name} product"), &algebra, &basis, &mut run)?;
    Ok(run)
}

fn cmd_iterate(cli: &Cli, path: &Path, label: Option<&str>, module: Option<&str>) -> anyhow::Result<Run> {
    let input = Input::load(path, cli.field.as_deref())?;
    let mut run = Run::default();
    if let Some(module) = module {
        let (_, y) = input.select(label, &["ydl"])?;
        let (_, m) = input.select(Some(module), &["bimodule"])?;
        let (Payload::Ydl(y), Payload::Bimodule(a_cal)) = (y, m) else {
            unreachable!("selected by kind")
        };
        let it = iterated_smash(&a_cal, &y)?;
        run.reports.push(it.report);
        let basis = (0..it.outer_left.dim())
            .map(|k| {
                let (na, nh) = (y.alg().dim(), y.h().dim());
                format!("φ_{}⊗e_{}⊗h_{}", k / (na * nh), (k / nh) % na, k % nh)
            })
            .collect::<Vec<_>>();
        write_product(cli, "iterated smash product", &it.outer_left, &basis, &mut run)?;
        return Ok(run);
    }
    let (l, p) = input.select(label, &["triple"])?;
    let Payload::Triple(t) = p else {
        unreachable!("selected by kind")
    };
    let hex = check_hexagons(&t)?;
    let ok = hex.passed();
    run.reports.push(hex);
    if ok || cli.force {
        let it = build_iterated(&t)?;
        let mut left = check_lr_suite(&it.outer_left);
        left.subject = format!("(V1, T1) of {l}");
        let mut right = check_lr_suite(&it.outer_right);
        right.subject = format!("(V2, T2) of {l}");
        run.reports.extend([left, right, it.report]);
        let (na, nb, nc) = (t.a().dim(), t.b().dim(), t.c().dim());
        let basis: Vec<String> = (0..na * nb * nc)
            .map(|k| format!("e_{}⊗f_{}⊗g_{}", k / (nb * nc), (k / nc) % nb, k % nc))
            .collect();
        write_product(cli, &format!("{l} iterated product"), &it.left, &basis, &mut run)?;
    }
    Ok(run)
}

fn cmd_smash(cli: &Cli, path: &Path, label: Option<&str>) -> anyhow::Result<Run> {
    let input = Input::load(path, cli.field.as_deref())?;
    let mut run = Run::default();
    let (m, c) = smash_inputs(&input, label, &mut run)?;
    run.reports.push(check_bimodule_algebra(&m));
    run.reports.push(check_bicomodule_algebra(&c));
    let pair = smash_maps_unchecked(&m, &c);
    run.reports.push(check_lr_suite(&pair));
    let smash = build_lr_smash_unchecked(&m, &c);
    let mut same = compare_tables("smash=product", &smash, &build_lr_product_unchecked(&pair));
    same.subject = "smash product against the L-R-twisted product of the smash pair".into();
    run.reports.push(same);
    if let Some(path) = &cli.out {
        write_file(
            path,
            &export_payload(pair.label(), &Payload::LRPair(pair.clone()))?,
            &mut run,
        )?;
    }
    Ok(run)
}

fn invariance_pipeline(d: &TwistData, run: &mut Run) -> anyhow::Result<()> {
    let pregat = check_pregat(d);
    let ready = pregat.passed() && check_lr_suite(d.pair()).passed();
    run.reports.push(pregat);
    if !ready {
        return Ok(());
    }
    let hypotheses = check_invundtw(d)?;
    let ready = hypotheses.passed();
    run.reports.push(hypotheses);
    if !ready {
        return Ok(());
    }
    let (pair, _) = build_twisted_pair(d)?;
    run.reports.push(check_lr_suite(&pair));
    run.reports.push(invariance_iso(d)?.report);
    Ok(())
}

fn cmd_invariance(cli: &Cli, path: &Path, label: Option<&str>) -> anyhow::Result<Run> {
    let input = Input::load(path, cli.field.as_deref())?;
    let mut run = Run::default();
    let d = match input.select(label, &["twistdata", "cocycle"])? {
        (_, Payload::TwistData(d)) => d,
        (l, Payload::Cocycle(c)) => {
            let m = input.bimodule_over(c.h()).ok_or_else(|| {
                anyhow!(
                    "cocycle {l:?} needs a bimodule algebra over {} in the document",
                    c.h().label()
                )
            })?;
            let cocycle = check_cocycle(&c);
            let ok = cocycle.passed();
            run.reports.push(cocycle);
            if !ok {
                return Ok(run);
            }
            run.reports.push(compare_with_smash_invariance(&m, &c)?);
            specialize_from_hopf(&m, &c)?
        }
        _ => unreachable!("selected by kind"),
    };
    invariance_pipeline(&d, &mut run)?;
    if let Some(path) = &cli.out {
        if run.passed() {
            let (pair, _) = build_twisted_pair(&d)?;
            write_file(
                path,
                &export_payload(pair.label(), &Payload::LRPair(pair.clone()))?,
                &mut run,
            )?;
        } else {
            run.note("nothing written: the checks failed");
        }
    }
    Ok(run)
}

fn cmd_detwist(cli: &Cli, path: &Path, label: Option<&str>) -> anyhow::Result<Run> {
    let input = Input::load(path, cli.field.as_deref())?;
    let mut run = Run::default();
    let (l, p) = input.select(label, &["lrpair"])?;
    let Payload::LRPair(pair) = p else {
        unreachable!("selected by kind")
    };
    let suite = check_lr_suite(&pair);
    let ok = suite.passed();
    run.reports.push(suite);
    if !ok && !cli.force {
        return Ok(run);
    }
    let d = detwist(&pair).map_err(|e| anyhow!("{l}: Q is not invertible ({e})"))?;
    run.reports.push(d.report);
    if let Some(path) = &cli.out {
        write_file(
            path,
            &export_payload(d.p.label(), &Payload::Twisting(d.p.clone()))?,
            &mut run,
        )?;
    }
    Ok(run)
}

/// `k`, `kc<n>`, `x<m>` over `field`, or `path[:label]`.
fn search_algebra(name: &str, field: Field) -> anyhow::Result<Algebra> {
    if name == "k" {
        return Ok(Algebra::ground(field));
    }
    if let Some(n) = name.strip_prefix("kc").and_then(|n| n.parse::<usize>().ok()) {
        return Ok(catalog::group_algebra(n, field)?.bialg().alg().clone());
    }
    if let Some(m) = name.strip_prefix('x').and_then(|m| m.parse::<usize>().ok()) {
        return Ok(catalog::truncated_polynomial("x", m, field));
    }
    let (path, label) = match name.rsplit_once(':') {
        Some((p, l)) if Path::new(p).exists() => (p, Some(l)),
        _ => (name, None),
    };
    if !Path::new(path).exists() {
        bail!("{name:?} is neither k, kc<n>, x<m> nor an existing document");
    }
    let input = Input::load(Path::new(path), Some(&field.to_string()))?;
    Ok(match input.select(label, &["algebra", "bialgebra", "hopf"])? {
        (_, Payload::Algebra(a)) => a,
        (_, Payload::Bialgebra(h)) => h.alg().clone(),
        (_, Payload::Hopf(h)) => h.bialg().alg().clone(),
        _ => unreachable!("selected by kind"),
    })
}

fn cmd_search(
    cli: &Cli,
    a: &str,
    b: &str,
    target: SearchTarget,
    mode: SearchMode,
    seed: Option<u64>,
    budget: u64,
) -> anyhow::Result<Run> {
    let field: Field = cli.field.as_deref().unwrap_or("F2").parse()?;
    let mode = match (mode, seed) {
        (SearchMode::Exhaustive, None) => Mode::Exhaustive,
        (SearchMode::Exhaustive, Some(_)) => bail!("--seed applies to --mode random only"),
        (SearchMode::Random, seed) => Mode::Random {
            seed: seed.unwrap_or(0),
        },
    };
    let config = SearchConfig {
        a: search_algebra(a, field)?,
        b: search_algebra(b, field)?,
        target: match target {
            SearchTarget::R => Target::R,
            SearchTarget::Rq => Target::Rq,
        },
        mode,
        budget,
    };
    let found = census(&config)?;
    let mut run = Run::default();
    run.note(format!(
        "{} candidates of {} evaluated, {} valid{}",
        found.evaluated,
        found.candidate_space,
        found.valid,
        if found.partial {
            " (partial: budget exhausted)"
        } else {
            ""
        }
    ));
    for (label, count) in &found.rejected {
        run.note(format!("rejected by {label}: {count}"));
    }
    run.note(format!("flip among the valid maps: {}", found.contains_flip));
    let mut products = Report::new("products of valid candidates");
    products.push(lrtwist::report::Outcome::condition(
        "associative and unital",
        found.product_check_failures == 0,
        format!("{} failures", found.product_check_failures),
    ));
    run.reports.push(products);
    match &cli.out {
        Some(path) => write_file(path, &found.to_json_string(), &mut run)?,
        None => run.data = Some(serde_json::to_value(&found)?),
    }
    Ok(run)
}

fn cmd_catalog(cli: &Cli, action: &CatalogAction) -> anyhow::Result<Run> {
    let cat = Catalog::load()?;
    let mut run = Run::default();
    match action {
        CatalogAction::List => {
            let width = cat.entries().iter().map(|e| e.id.len()).max().unwrap_or(0);
            let mut text = String::new();
            for e in cat.entries() {
                text.push_str(&format!("{:width$}  {:10}  {}\n", e.id, e.payload.kind(), e.note));
            }
            run.data = Some(Value::Array(
                cat.entries()
                    .iter()
                    .map(|e| json!({"id": e.id, "kind": e.payload.kind(), "note": e.note}))
                    .collect(),
            ));
            run.raw = Some(text);
        }
        CatalogAction::Export { id } => {
            let e = cat
                .get(id)
                .ok_or_else(|| anyhow!("no catalog entry {id:?}; see `lrtwist catalog list`"))?;
            let doc = export_payload(&e.id, &e.payload)?;
            match &cli.out {
                Some(path) => write_file(path, &doc, &mut run)?,
                None => run.raw = Some(doc),
            }
        }
    }
    Ok(run)
}

fn run(cli: &Cli) -> anyhow::Result<Run> {
    match &cli.command {
        Command::Check { path, kind, label } => cmd_check(cli, path, kind.as_deref(), label.as_deref()),
        Command::Build { path, product, label } => cmd_build(cli, path, *product, label.as_deref()),
        Command::Iterate { path, label, module } => cmd_iterate(cli, path, label.as_deref(), module.as_deref()),
        Command::Smash { path, label } => cmd_smash(cli, path, label.as_deref()),
        Command::Invariance { path, label } => cmd_invariance(cli, path, label.as_deref()),
        Command::Detwist { path, label } => cmd_detwist(cli, path, label.as_deref()),
        Command::Search {
            a,
            b,
            target,
            mode,
            seed,
            budget,
        } => cmd_search(cli, a, b, *target, *mode, *seed, *budget),
        Command::Catalog { action } => cmd_catalog(cli, action),
    }
}

fn emit(cli: &Cli, command: &str, run: &Run, code: u8) {
    match cli.format {
        Format::Json => {
            let mut v = json!({
                "command": command,
                "passed": code == 0,
                "exit_code": code,
                "reports": run.reports.iter().map(Report::to_json).collect::<Vec<_>>(),
                "notes": run.notes,
            });
            if let Some(data) = &run.data {
                v["data"] = data.clone();
            }
            println!("{}", serde_json::to_string_pretty(&v).expect("values serialize"));
        }
        Format::Text => {
            if let Some(raw) = &run.raw {
                print!("{raw}");
                return;
            }
            for r in &run.reports {
                print!("{}", r.render_text());
            }
            for n in &run.notes {
                println!("{n}");
            }
            println!("{}", if code == 0 { "PASS" } else { "FAIL" });
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let result = run(&cli);
    let elapsed = start.elapsed();
    let code = match result {
        Ok(run) => {
            let code = if run.passed() { 0 } else { 1 };
            emit(&cli, &command, &run, code);
            code
        }
        Err(e) => match e.downcast_ref::<lrtwist::Error>() {
            Some(lrtwist::Error::Precondition { what, report }) => {
                let run = Run {
                    reports: vec![(**report).clone()],
                    notes: vec![format!("precondition failed for {what}")],
                    ..Run::default()
                };
                emit(&cli, &command, &run, 1);
                1
            }
            _ => {
                eprintln!("error: {e:#}");
                2
            }
        },
    };
    eprintln!("elapsed: {} ms", elapsed.as_millis());
    ExitCode::from(code)
}
