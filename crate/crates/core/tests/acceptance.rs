//! End-to-end acceptance checks. Prints one line per criterion and fails
//! if any criterion fails or exceeds its time budget.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use multibranched::bounds::{genus_bounds, s3_obstruction, S3Verdict};
use multibranched::families::{
    lens_spine, random_permutation, random_surface, rose, torus, RandomSurfaceConfig,
};
use multibranched::graphs::{
    genus_extremes, times_circle, verify_product_theorem, xuong_max_genus, Multigraph,
};
use multibranched::homology::{
    h1, h1_cw_oracle, rank_h1, smith_normal_form, smith_normal_form_with_transforms, AbelianGroup,
    IntegerMatrix,
};
use multibranched::neighborhood::{
    genus_range, genus_values, system_count, trace_boundary, SearchMode,
};
use multibranched::{disk_sum, MultibranchedSurface};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn mbs(args: &[&str]) -> (i32, serde_json::Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mbs"))
        .args(args)
        .output()
        .expect("run mbs");
    let text = String::from_utf8(out.stdout).expect("utf-8");
    let json = serde_json::from_str(&text).unwrap_or(serde_json::Value::Null);
    (out.status.code().unwrap_or(-1), json, text)
}

fn rose_family() -> Check {
    for n in [1u64, 2] {
        let file = data(&format!("rose{n}.json"));
        let (_, hom, _) = mbs(&["homology", &file, "--json"]);
        ensure!(
            hom["h1"] == format!("Z^{}", 2 * n + 1),
            "rose n={n}: homology {}",
            hom["h1"]
        );
        let (_, b, _) = mbs(&["boundary", &file, "--enumerate", "--json"]);
        ensure!(
            b["max_genus"] == 2 * n + 1 && b["min_genus"] == 1 && b["exact"] == true,
            "rose n={n}: boundary range {b}"
        );
        let (_, r, _) = mbs(&["bounds", &file, "--json"]);
        ensure!(
            r["lower_bound_min_genus"] == 0 && r["lower_bound_max_genus"] == 2 * n,
            "rose n={n}: bounds {r}"
        );
        let lib =
            genus_range(&rose(n as usize), SearchMode::Exhaustive).map_err(|e| e.to_string())?;
        ensure!(
            lib.max_genus == 2 * n + 1 && lib.min_genus == 1,
            "rose n={n}: library range"
        );
    }
    Ok("n=1,2: Z^3/Z^5, boundary genus 1..3 / 1..5, lower bounds 0 and 2n".into())
}

fn lens_spines() -> Check {
    for p in [2u32, 3, 5] {
        let file = data(&format!("lens{p}.json"));
        let (_, hom, _) = mbs(&["homology", &file, "--json", "--check"]);
        ensure!(
            hom["h1"] == format!("Z/{p}") && hom["oracle_agrees"] == true,
            "lens {p}: {hom}"
        );
        let (_, b, _) = mbs(&["boundary", &file, "--enumerate", "--json"]);
        ensure!(
            b["systems_total"] == "1" && b["max_genus"] == 0,
            "lens {p}: boundary {b}"
        );
        let (_, r, _) = mbs(&["bounds", &file, "--json"]);
        ensure!(
            r["lower_bound_min_genus"] == 0 && r["lower_bound_max_genus"] == 0,
            "lens {p}: bounds {r}"
        );
        let (code, _, text) = mbs(&["s3", &file]);
        ensure!(
            code == 0 && text.contains("no obstruction found"),
            "lens {p}: s3 said {text:?}"
        );
        ensure!(
            h1(&lens_spine(p)).unwrap().to_string() == format!("Z/{p}"),
            "lens {p}: library h1"
        );
    }
    Ok("p=2,3,5: Z/p, boundary genus 0, bounds 0, no obstruction found".into())
}

fn random_surfaces(seed: u64, count: usize) -> Vec<MultibranchedSurface> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = RandomSurfaceConfig::default();
    (0..count).map(|_| random_surface(&mut rng, &cfg)).collect()
}

fn euler_conservation() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut components = 0;
    for (i, x) in random_surfaces(3, 500).iter().enumerate() {
        let p = random_permutation(&mut rng, x);
        let b = trace_boundary(x, &p).map_err(|e| format!("surface {i}: {e}"))?;
        let chi: i64 = b.components.iter().map(|c| c.euler_characteristic).sum();
        ensure!(
            chi == 2 * x.euler_characteristic(),
            "surface {i}: χ(∂N) = {chi}, χ(X) = {}",
            x.euler_characteristic()
        );
        for c in &b.components {
            ensure!(
                c.euler_characteristic % 2 == 0,
                "surface {i}: odd component χ {}",
                c.euler_characteristic
            );
            ensure!(
                2 - 2 * c.genus as i64 == c.euler_characteristic,
                "surface {i}: genus/χ mismatch"
            );
        }
        let sides: usize = b.components.iter().map(|c| c.sides.len()).sum();
        ensure!(
            sides == 2 * x.sectors.len(),
            "surface {i}: {sides} sides for {} sectors",
            x.sectors.len()
        );
        components += b.total_components;
    }
    Ok(format!(
        "500 surfaces, {components} boundary components, all even and summing to 2χ(X)"
    ))
}

fn homology_oracle() -> Check {
    let mut named: Vec<(String, MultibranchedSurface)> = vec![
        ("rose(1)".into(), rose(1)),
        ("rose(2)".into(), rose(2)),
        ("rose(3)".into(), rose(3)),
        ("torus".into(), torus()),
        (
            "rose#rose".into(),
            disk_sum(&rose(1), "e0", &rose(1), "e0").unwrap(),
        ),
        (
            "lens2#lens3".into(),
            disk_sum(&lens_spine(2), "s", &lens_spine(3), "s").unwrap(),
        ),
    ];
    for p in [2, 3, 5] {
        named.push((format!("lens({p})"), lens_spine(p)));
    }
    for (i, x) in random_surfaces(4, 500).into_iter().enumerate() {
        named.push((format!("random #{i}"), x));
    }
    let mut torsion = 0;
    for (name, x) in &named {
        let a = h1(x).map_err(|e| format!("{name}: {e}"))?;
        let b = h1_cw_oracle(x).map_err(|e| format!("{name}: {e}"))?;
        ensure!(a == b, "{name}: formula {a}, cell complex {b}");
        torsion += usize::from(!a.torsion.is_empty());
    }
    Ok(format!(
        "{} surfaces agree ({torsion} with torsion)",
        named.len()
    ))
}

fn direct_sum(a: &AbelianGroup, b: &AbelianGroup) -> AbelianGroup {
    let t: Vec<i128> = a.torsion.iter().chain(&b.torsion).copied().collect();
    let mut m = IntegerMatrix::zeros(t.len(), t.len());
    for (i, &d) in t.iter().enumerate() {
        m[(i, i)] = d;
    }
    let snf = smith_normal_form(&m).unwrap();
    AbelianGroup::from_invariant_factors(a.free_rank + b.free_rank, &snf.diagonal)
}

fn disk_sum_additivity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cfg = RandomSurfaceConfig {
        max_branches: 3,
        max_sectors: 3,
        max_degree: 3,
        max_genus: 1,
        max_boundary: 2,
    };
    let small = |rng: &mut ChaCha8Rng| loop {
        let x = random_surface(rng, &cfg);
        if system_count(&x).unwrap().is_some_and(|n| n <= 120) {
            return x;
        }
    };
    let mut pairs = 0;
    while pairs < 50 {
        let (x1, x2) = (small(&mut rng), small(&mut rng));
        let s1 = x1.sectors[rng.gen_range(0..x1.sectors.len())].id.clone();
        let s2 = x2.sectors[rng.gen_range(0..x2.sectors.len())].id.clone();
        let x = disk_sum(&x1, &s1, &x2, &s2).map_err(|e| e.to_string())?;
        let (g1, g2, g) = (h1(&x1).unwrap(), h1(&x2).unwrap(), h1(&x).unwrap());
        ensure!(
            g.free_rank == g1.free_rank + g2.free_rank,
            "pair {pairs}: rank {g} vs {g1} + {g2}"
        );
        ensure!(
            g == direct_sum(&g1, &g2),
            "pair {pairs}: {g} is not {g1} ⊕ {g2}"
        );
        let (v1, v2, v) = (
            genus_values(&x1).unwrap(),
            genus_values(&x2).unwrap(),
            genus_values(&x).unwrap(),
        );
        let sumset: BTreeSet<u64> = v1
            .iter()
            .flat_map(|a| v2.iter().map(move |b| a + b))
            .collect();
        ensure!(
            v == sumset,
            "pair {pairs}: values {v:?} vs sumset {sumset:?}"
        );
        pairs += 1;
    }
    Ok("50 pairs: H1 is the direct sum, boundary genus values form the sumset".into())
}

fn graph_genus() -> Check {
    let ext = |g: &Multigraph| genus_extremes(g, None).map(|e| (e.min_genus, e.max_genus));
    ensure!(ext(&Multigraph::complete(4)).unwrap() == (0, 1), "K4");
    ensure!(ext(&Multigraph::complete(5)).unwrap() == (1, 3), "K5");
    ensure!(
        ext(&Multigraph::complete_bipartite(3, 3)).unwrap().0 == 1,
        "K3,3"
    );
    for n in 2..=7 {
        ensure!(
            ext(&Multigraph::path(n)).unwrap() == (0, 0),
            "path on {n} vertices"
        );
    }
    let corpus = common::connected_multigraphs(4, 6);
    let mut trees = 0;
    for g in &corpus {
        let (lo, hi) = ext(g).map_err(|e| e.to_string())?;
        let x = xuong_max_genus(g, None).map_err(|e| e.to_string())?;
        ensure!(
            x.max_genus == hi,
            "{g:?}: xuong {} vs exhaustive {hi}",
            x.max_genus
        );
        if common::is_tree(g) {
            ensure!((lo, hi) == (0, 0), "tree {g:?}: {lo}/{hi}");
            trees += 1;
        }
    }
    Ok(format!(
        "K4 0/1, K5 1/3, K3,3 min 1; xuong = exhaustive max on {} graphs ({trees} trees)",
        corpus.len()
    ))
}

fn product_theorem() -> Check {
    let mut graphs = vec![
        ("bouquet(2)".to_string(), Multigraph::bouquet(2)),
        ("bouquet(4)".to_string(), Multigraph::bouquet(4)),
        ("theta".to_string(), Multigraph::theta()),
        ("K4".to_string(), Multigraph::complete(4)),
    ];
    for (i, g) in common::connected_multigraphs(3, 5).into_iter().enumerate() {
        graphs.push((format!("corpus #{i}"), g));
    }
    let mut rotations = 0;
    for (name, g) in &graphs {
        let r = verify_product_theorem(g, None).map_err(|e| format!("{name}: {e}"))?;
        ensure!(r.passed && r.bridge_ok, "{name}: {:?}", r.counterexample);
        ensure!(
            r.rank_h1 == g.betti_number() as u64 + 1,
            "{name}: rank {}",
            r.rank_h1
        );
        rotations += r.rotation_systems;
    }
    Ok(format!(
        "{} graphs, {rotations} rotation systems, one torus per face throughout",
        graphs.len()
    ))
}

fn s3_criterion() -> Check {
    for n in [1usize, 2] {
        let r = genus_bounds(&rose(n), SearchMode::Exhaustive).unwrap();
        ensure!(
            r.max_boundary_genus == r.rank_h1,
            "rose({n}): max {} rank {}",
            r.max_boundary_genus,
            r.rank_h1
        );
        ensure!(
            r.s3_obstruction == S3Verdict::Pass,
            "rose({n}): {}",
            r.s3_obstruction
        );
    }
    let mut cases = vec![
        (
            "rose(1) # rose(1)",
            disk_sum(&rose(1), "e0", &rose(1), "e0").unwrap(),
        ),
        ("K5 x S^1", times_circle(&Multigraph::complete(5)).unwrap()),
        (
            "K3,3 x S^1",
            times_circle(&Multigraph::complete_bipartite(3, 3)).unwrap(),
        ),
        ("K4 x S^1", times_circle(&Multigraph::complete(4)).unwrap()),
    ];
    cases.push((
        "lens(2) # rose(1)",
        disk_sum(&lens_spine(2), "s", &rose(1), "e1").unwrap(),
    ));
    let mut fails = 0;
    let mut summary = Vec::new();
    for (name, x) in &cases {
        let rank = rank_h1(x).unwrap() as u64;
        let max = genus_range(x, SearchMode::Exhaustive).unwrap().max_genus;
        let verdict = s3_obstruction(x, SearchMode::Exhaustive).unwrap();
        let expected = if max < rank {
            S3Verdict::Fail
        } else {
            S3Verdict::Pass
        };
        ensure!(
            verdict == expected,
            "{name}: rank {rank}, max {max}, verdict {verdict}"
        );
        fails += usize::from(verdict == S3Verdict::Fail);
        summary.push(format!("{name} {verdict} ({max} vs {rank})"));
    }
    ensure!(fails >= 2, "expected the K5 and K3,3 products to fail");
    let (code, _, _) = mbs(&["s3", &data("rose2.json")]);
    ensure!(code == 0, "mbs s3 rose2 exit {code}");
    Ok(format!("roses pass with equality; {}", summary.join(", ")))
}

fn snf_self_check() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for t in 0..200 {
        let (rows, cols) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let density = rng.gen_range(0.2..1.0);
        let entries: Vec<i128> = (0..rows * cols)
            .map(|_| {
                if rng.gen_bool(density) {
                    rng.gen_range(-9..=9)
                } else {
                    0
                }
            })
            .collect();
        let m = IntegerMatrix::new(rows, cols, entries).unwrap();
        let snf = smith_normal_form_with_transforms(&m).map_err(|e| format!("matrix {t}: {e}"))?;
        let tr = snf.transforms.as_ref().expect("requested");
        let d = tr
            .left
            .checked_mul(&m)
            .and_then(|lm| lm.checked_mul(&tr.right))
            .unwrap();
        ensure!(
            d == snf.diagonal_matrix(rows, cols),
            "matrix {t}: U M V = {d} is not diagonal {:?}",
            snf.diagonal
        );
        ensure!(
            snf.diagonal.windows(2).all(|w| w[1] % w[0] == 0),
            "matrix {t}: divisibility {:?}",
            snf.diagonal
        );
        ensure!(
            snf.diagonal.iter().all(|&x| x > 0),
            "matrix {t}: nonpositive factor"
        );
        let det_u = common::bareiss(&tr.left).1.unwrap();
        let det_v = common::bareiss(&tr.right).1.unwrap();
        ensure!(
            det_u.abs() == 1 && det_v.abs() == 1,
            "matrix {t}: det U = {det_u}, det V = {det_v}"
        );
        let v_vinv = tr.right.checked_mul(&tr.right_inverse).unwrap();
        ensure!(
            v_vinv == IntegerMatrix::identity(cols),
            "matrix {t}: V V^-1 is not the identity"
        );
        let (rank, _) = common::bareiss(&m);
        ensure!(
            rank == snf.rank,
            "matrix {t}: rank {} vs elimination {rank}",
            snf.rank
        );
    }
    Ok("200 matrices up to 8x8".into())
}

type Criterion = (&'static str, Duration, fn() -> Check);

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 rose family", Duration::from_secs(10), rose_family),
        ("2 lens spines", Duration::from_secs(1), lens_spines),
        (
            "3 Euler conservation",
            Duration::from_secs(60),
            euler_conservation,
        ),
        (
            "4 homology oracle",
            Duration::from_secs(120),
            homology_oracle,
        ),
        (
            "5 disk-sum additivity",
            Duration::from_secs(120),
            disk_sum_additivity,
        ),
        ("6 graph genus", Duration::from_secs(300), graph_genus),
        (
            "7 product theorem",
            Duration::from_secs(300),
            product_theorem,
        ),
        ("8 S^3 criterion", Duration::from_secs(60), s3_criterion),
        ("9 SNF self-check", Duration::from_secs(10), snf_self_check),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let line = match outcome {
            Ok(detail) if took <= budget => {
                format!("PASS  criterion {name} ({took:.2?}): {detail}")
            }
            Ok(detail) => {
                failed += 1;
                format!("FAIL  criterion {name} ({took:.2?}, over budget {budget:?}): {detail}")
            }
            Err(why) => {
                failed += 1;
                format!("FAIL  criterion {name} ({took:.2?}): {why}")
            }
        };
        println!("{line}");
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 9 acceptance criteria passed");
}
