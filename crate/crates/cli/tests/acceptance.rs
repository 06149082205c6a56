//! Acceptance suite: each test checks one numbered claim about the whole
//! laboratory and prints a single PASS/FAIL line with its key numbers.
//! Heavy objects (tables of the larger groups) are shared through a
//! process-wide on-disk cache, so whichever test runs first pays for a
//! table once and everyone else loads it.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use distinction::{
    pair_scan, theorem43_check, Criterion, GroupBundle, PacketLab, PairContext,
};
use distinction_cli::cache::load_or_compute;
use ff_core::{FieldTower, Side};
use group_engine::{
    enumerated_double_cosets, streamed_double_cosets, ConjugacyClasses, GroupKind, MatrixGroup,
};
use tame_parameters::{section5_example, thm11_random_suite, Orientation, TameTower};

// ------------------------------------------------------- shared fixtures --

fn cache_dir() -> &'static Path {
    static DIR: OnceLock<tempfile::TempDir> = OnceLock::new();
    DIR.get_or_init(|| tempfile::tempdir().expect("temp cache dir")).path()
}

fn tower(p: u32, f: u32) -> Arc<FieldTower> {
    Arc::new(FieldTower::build(p, f).expect("tower"))
}

fn bundle(kind: GroupKind, n: u8, side: Side, p: u32) -> GroupBundle {
    let t = tower(p, 1);
    let (b, _) = load_or_compute(kind, n, side, &t, None, Some(cache_dir())).expect("bundle");
    b
}

/// The five-group rank-two laboratory over q = 3.
fn q3_lab() -> &'static PacketLab {
    static LAB: OnceLock<PacketLab> = OnceLock::new();
    LAB.get_or_init(|| {
        PacketLab::from_bundles(
            bundle(GroupKind::GL, 2, Side::Ext, 3),
            bundle(GroupKind::GLplus, 2, Side::Ext, 3),
            bundle(GroupKind::SL, 2, Side::Ext, 3),
            bundle(GroupKind::GL, 2, Side::Base, 3),
            bundle(GroupKind::SL, 2, Side::Base, 3),
        )
        .expect("packet lab over q = 3")
    })
}

fn q3_unitary() -> &'static GroupBundle {
    static U: OnceLock<GroupBundle> = OnceLock::new();
    U.get_or_init(|| bundle(GroupKind::U, 2, Side::Ext, 3))
}

/// (GL_2 over 25 elements, GL_2 over 5 elements).
fn q5_pair() -> &'static (GroupBundle, GroupBundle) {
    static PAIR: OnceLock<(GroupBundle, GroupBundle)> = OnceLock::new();
    PAIR.get_or_init(|| {
        (
            bundle(GroupKind::GL, 2, Side::Ext, 5),
            bundle(GroupKind::GL, 2, Side::Base, 5),
        )
    })
}

/// (SL_3 over 4 elements, SL_3 over 2 elements).
fn sl3_pair() -> &'static (GroupBundle, GroupBundle) {
    static PAIR: OnceLock<(GroupBundle, GroupBundle)> = OnceLock::new();
    PAIR.get_or_init(|| {
        (
            bundle(GroupKind::SL, 3, Side::Ext, 2),
            bundle(GroupKind::SL, 3, Side::Base, 2),
        )
    })
}

fn line(name: &str, ok: bool, detail: &str) {
    println!("[{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
}

// ------------------------------------------------------------- criteria --

#[test]
fn criterion_1_multiplicity_one_for_both_galois_pairs() {
    let t3_start = Instant::now();
    let lab = q3_lab();
    let pc3 = PairContext::new(&lab.g, &lab.h_gl).expect("embedding over q = 3");
    let r3 = pair_scan(&lab.g, &lab.h_gl, &pc3, &[Criterion::Gelfand]);
    let t3 = t3_start.elapsed();

    let t5_start = Instant::now();
    let (g5, h5) = q5_pair();
    let pc5 = PairContext::new(g5, h5).expect("embedding over q = 5");
    let r5 = pair_scan(g5, h5, &pc5, &[Criterion::Gelfand]);
    let t5 = t5_start.elapsed();

    let ok = r3.oracle_ok
        && r3.gelfand_ok == Some(true)
        && r3.rows.len() == 80
        && r5.oracle_ok
        && r5.gelfand_ok == Some(true)
        && r5.rows.len() == 624
        && t3 < Duration::from_secs(60)
        && t5 < Duration::from_secs(600);
    line(
        "criterion 1",
        ok,
        &format!(
            "dim Hom_H(pi, 1) <= 1 across both Galois pairs: max dims {} (q=3, {} irreducibles, \
             {t3:.1?}) and {} (q=5, {} irreducibles, {t5:.1?})",
            r3.max_dim,
            r3.rows.len(),
            r5.max_dim,
            r5.rows.len(),
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_2_unitary_distinction_detects_galois_invariance() {
    let start = Instant::now();
    let lab = q3_lab();
    let u = q3_unitary();
    let pc = PairContext::new(&lab.g, u).expect("unitary embedding");
    let r = pair_scan(&lab.g, u, &pc, &[Criterion::Gelfand, Criterion::Shintani]);
    let elapsed = start.elapsed();

    let fixed = r.rows.iter().filter(|row| row.sigma_fixed == Some(true)).count();
    let distinguished = r.rows.iter().filter(|row| row.dim_trivial != 0).count();
    let ok = r.oracle_ok
        && r.gelfand_ok == Some(true)
        && r.shintani_ok == Some(true)
        && elapsed < Duration::from_secs(60);
    line(
        "criterion 2",
        ok,
        &format!(
            "unitary pair over q = 3: max dim {}, distinguished = Galois-invariant = \
             {distinguished} of {} (invariant count {fixed}), {elapsed:.1?}",
            r.max_dim,
            r.rows.len(),
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_3_distinction_is_sigma_self_duality() {
    let start = Instant::now();
    let lab = q3_lab();
    let pc = PairContext::new(&lab.g, &lab.h_gl).expect("embedding over q = 3");
    let r = pair_scan(
        &lab.g,
        &lab.h_gl,
        &pc,
        &[Criterion::Gelfand, Criterion::GowSigmaDual],
    );
    let elapsed = start.elapsed();

    let ok = r.oracle_ok
        && r.rows.len() == 80
        && r.gow_ok == Some(true)
        && elapsed < Duration::from_secs(60);
    line(
        "criterion 3",
        ok,
        &format!(
            "distinguished <=> Galois twist equals dual on all {} irreducibles over q = 3, \
             {elapsed:.1?}",
            r.rows.len(),
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_4_special_linear_rank_three_multiplicity_one() {
    let start = Instant::now();
    let (g, h) = sl3_pair();
    let pc = PairContext::new(g, h).expect("special linear embedding");
    let r = pair_scan(g, h, &pc, &[Criterion::Thm11Bound]);
    let elapsed = start.elapsed();

    let ok = r.oracle_ok
        && r.gelfand_ok == Some(true)
        && r.group_order == 60_480
        && r.subgroup_order == 168
        && elapsed < Duration::from_secs(900);
    line(
        "criterion 4",
        ok,
        &format!(
            "rank-three special linear pair over q = 2: max dim {} across {} irreducibles, \
             {elapsed:.1?}",
            r.max_dim,
            r.rows.len(),
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_5_double_coset_suite_matches_twisted_involutions() {
    let start = Instant::now();
    let mut detail = Vec::new();
    let mut ok = true;
    for (n, p) in [(2u8, 2u32), (2, 3), (3, 2), (3, 3)] {
        let t = tower(p, 1);
        let h = MatrixGroup::build(GroupKind::GL, n, Side::Base, Arc::clone(&t), None)
            .expect("subgroup");
        let report = if n == 3 && p == 3 {
            streamed_double_cosets(&t, n, &h, 1)
        } else {
            let g = MatrixGroup::build(GroupKind::GL, n, Side::Ext, Arc::clone(&t), None)
                .expect("ambient group");
            let classes = ConjugacyClasses::compute(&g);
            enumerated_double_cosets(&g, &classes, &h)
        };
        ok &= report.all_checks_pass();
        detail.push(format!(
            "n={n} q={p}: |S|={} cosets={}{}",
            report.s_size,
            report.num_cosets,
            if report.all_checks_pass() { "" } else { " FAILED" },
        ));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(300);
    line(
        "criterion 5",
        ok,
        &format!(
            "theta-stability, |S| = |G|/|H| and conjugacy descent on four pairs ({}), \
             {elapsed:.1?}",
            detail.join("; "),
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_6_packet_suite_with_formula_comparison() {
    let start = Instant::now();
    let lab = q3_lab();
    let mut packets_ok = true;
    let mut discrepancies = Vec::new();
    for i in 0..lab.g.k() {
        let p = lab.packet(i).expect("packet");
        packets_ok &= p.restriction_multiplicity_free
            && p.clifford_ok
            && p.prop42_ok
            && p.q.action_closed
            && p.q.action_free
            && p.q.integer().is_some()
            && p.q_oracle_ok.unwrap_or(true);
        let record = theorem43_check(lab, &p);
        if !record.all_equal {
            discrepancies.push(record);
        }
    }
    let elapsed = start.elapsed();

    // A formula mismatch must leave a reproducible trace, not just a red X.
    let mut dump = String::new();
    if !discrepancies.is_empty() {
        let path = std::env::temp_dir().join("formula-discrepancies.json");
        std::fs::write(
            &path,
            serde_json::to_string_pretty(&discrepancies).expect("dump serializes"),
        )
        .expect("dump written");
        dump = format!(", dump at {}", path.display());
    }

    let ok = packets_ok && discrepancies.is_empty() && elapsed < Duration::from_secs(300);
    line(
        "criterion 6",
        ok,
        &format!(
            "all {} packets over q = 3: multiplicity-free restrictions, twist-count identity, \
             equidistribution, integral free-action q, formula discrepancies {}{dump}, \
             {elapsed:.1?}",
            lab.g.k(),
            discrepancies.len(),
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_7_every_table_fully_verified() {
    let lab = q3_lab();
    let (g5, h5) = q5_pair();
    let (sl_big, sl_small) = sl3_pair();
    let tables = [
        &lab.g, &lab.gp, &lab.sl, &lab.h_gl, &lab.h_sl,
        q3_unitary(),
        g5, h5,
        sl_big, sl_small,
    ];

    let mut ok = true;
    let mut oracle_count = 0;
    for b in tables {
        let v = &b.table.verification;
        let small = b.group.order() <= 5000;
        if small {
            oracle_count += 1;
        }
        let this = v.sum_of_squares_ok
            && v.power_galois_ok
            && v.row_orthogonality_ok
            && v.column_orthogonality_ok
            && v.identity_column_ok
            && (!small || v.elementwise_ok == Some(true))
            && v.elementwise_ok != Some(false);
        if !this {
            println!("  table {} failed verification", b.table.tag.slug());
        }
        ok &= this;
    }
    line(
        "criterion 7",
        ok,
        &format!(
            "{} tables: degree sums, row and column orthogonality, Galois power maps all hold; \
             element-by-element oracle on the {oracle_count} groups of order at most 5000",
            tables.len(),
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_8_tame_parameter_chain_and_random_bound() {
    let start = Instant::now();
    let t = TameTower::build(11, None, Orientation::RamifiedE).expect("tame tower");
    let worked = section5_example(&t, 12, None).expect("worked example");
    let example_ok = worked.applicable
        && worked.checks.map(|c| c.all_ok()).unwrap_or(false)
        && worked.q_value == Some(2);

    let records = thm11_random_suite(&t, 0, 100, 3).expect("random suite");
    let suite_ok = records.len() == 100 && records.iter().all(|r| r.checks_pass());
    let elapsed = start.elapsed();

    let ok = example_ok && suite_ok && elapsed < Duration::from_secs(60);
    line(
        "criterion 8",
        ok,
        &format!(
            "worked quadratic-twist example at q = 11 (q(pi) = {:?}) and {} random regular \
             dihedral parameters with injective transfer, trivial meet and zero-or-one bound, \
             {elapsed:.1?}",
            worked.q_value,
            records.len(),
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_9_artifacts_are_byte_identical_across_runs() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_dlab");
    let dir = tempfile::tempdir().expect("artifact dir");
    let cache = cache_dir().to_path_buf();

    // One representative configuration per subcommand family, covering
    // every group scale the other criteria touch.
    let configs: &[(&str, &[&str])] = &[
        ("tower", &["tower", "--p", "5"]),
        ("chartab", &["chartab", "--group", "gl", "--n", "2", "--p", "3", "--side", "base"]),
        ("cosets", &["double-cosets", "--n", "2", "--p", "3"]),
        ("scan-gl", &["pair-scan", "--pair", "GL:GL", "--n", "2", "--p", "3"]),
        ("scan-u", &["pair-scan", "--pair", "GL:U", "--n", "2", "--p", "3"]),
        ("scan-gl5", &["pair-scan", "--pair", "GL:GL", "--n", "2", "--p", "5"]),
        ("scan-sl3", &["pair-scan", "--pair", "SL:SL", "--n", "3", "--p", "2"]),
        ("packet", &["packet", "--rep", "all"]),
        ("theorem43", &["theorem43", "--rep", "all"]),
        ("unitary", &["unitary"]),
        ("padic", &["padic-example", "--q", "11"]),
        ("thm11", &["thm11", "--q", "11", "--n", "3", "--count", "100", "--seed", "0"]),
    ];

    let mut ok = true;
    let mut failed = Vec::new();
    for (label, args) in configs {
        let mut artifacts: Vec<Vec<u8>> = Vec::new();
        for run in 0..2 {
            let out: PathBuf = dir.path().join(format!("{label}-{run}.json"));
            let status = Command::new(bin)
                .args(*args)
                .arg("--cache-dir")
                .arg(&cache)
                .arg("--out")
                .arg(&out)
                .status()
                .expect("binary runs");
            assert!(
                status.success(),
                "run {run} of {label} exited with {status:?}"
            );
            artifacts.push(std::fs::read(&out).expect("artifact readable"));
        }
        if artifacts[0] != artifacts[1] || artifacts[0].is_empty() {
            ok = false;
            failed.push(*label);
        }
    }
    let elapsed = start.elapsed();
    line(
        "criterion 9",
        ok,
        &format!(
            "{} configurations emitted byte-identical artifacts on repeated runs{}, {elapsed:.1?}",
            configs.len(),
            if failed.is_empty() { String::new() } else { format!(" (failed: {failed:?})") },
        ),
    );
    assert!(ok);
}
