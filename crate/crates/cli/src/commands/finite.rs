//! Commands over fully enumerated finite objects: the quadratic tower
//! itself, character tables, double-coset decompositions, and whole-pair
//! distinction scans.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use char_engine::kind_from_name;
use distinction::{pair_scan, Criterion, PairContext};
use ff_core::{FFElem, FieldTower, Side};
use group_engine::{
    enumerated_double_cosets, order_formula, streamed_double_cosets, ConjugacyClasses,
    CosetMethod, DoubleCosetReport, GroupKind, MatrixGroup, DEFAULT_CEILING,
};

use crate::cache::load_or_compute;
use crate::errors::CliError;
use crate::output::{to_canonical_json, CommandOutput, CsvBlock};

use super::{opt_bool, Shared};

fn build_tower(p: u32, f: u32) -> Result<Arc<FieldTower>, CliError> {
    FieldTower::build(p, f)
        .map(Arc::new)
        .map_err(|e| CliError::usage(e.to_string()))
}

pub fn parse_side(side: &str) -> Result<Side, CliError> {
    match side.to_ascii_lowercase().as_str() {
        "base" => Ok(Side::Base),
        "ext" => Ok(Side::Ext),
        other => Err(CliError::usage(format!(
            "unknown side '{other}' (expected 'base' or 'ext')"
        ))),
    }
}

pub fn parse_kind(name: &str) -> Result<GroupKind, CliError> {
    let lowered = name.to_ascii_lowercase();
    let canonical = if lowered == "gl+" { "glplus".to_string() } else { lowered };
    kind_from_name(&canonical)
        .ok_or_else(|| CliError::usage(format!("unknown group family '{name}'")))
}

// ---------------------------------------------------------------- tower --

#[derive(Serialize)]
struct TowerArtifact {
    p: u32,
    f: u32,
    q: u32,
    qq: u32,
    units: u32,
    frobenius_involutive: bool,
    frobenius_fixed_count: u32,
    frobenius_fixes_exactly_base: bool,
    norm_image_size: usize,
    norm_surjective_onto_base: bool,
    trace_kernel_size: u32,
    trace_kernel_expected: bool,
    norm_one_circle_size: u32,
    circle_expected: bool,
    ok: bool,
}

pub fn tower_cmd(p: u32, f: u32) -> Result<CommandOutput, CliError> {
    let t = build_tower(p, f)?;
    let q = t.q();
    let qq = t.qq();

    let frobenius_involutive = t.elements().all(|x| t.frobenius(t.frobenius(x)) == x);
    let frobenius_fixed_count = t.elements().filter(|&x| t.frobenius(x) == x).count() as u32;
    let norm_image: std::collections::BTreeSet<u32> =
        t.units().map(|x| t.norm(x).scan_index()).collect();
    let trace_kernel_size =
        t.elements().filter(|&x| t.rel_trace(x) == FFElem::ZERO).count() as u32;
    let norm_one_circle_size = t.units().filter(|&x| t.norm(x) == FFElem::ONE).count() as u32;

    let artifact = TowerArtifact {
        p,
        f,
        q,
        qq,
        units: qq - 1,
        frobenius_involutive,
        frobenius_fixed_count,
        frobenius_fixes_exactly_base: frobenius_fixed_count == q,
        norm_image_size: norm_image.len(),
        norm_surjective_onto_base: norm_image.len() as u32 == q - 1,
        trace_kernel_size,
        trace_kernel_expected: trace_kernel_size == q,
        norm_one_circle_size,
        circle_expected: norm_one_circle_size == q + 1,
        ok: frobenius_involutive
            && frobenius_fixed_count == q
            && norm_image.len() as u32 == q - 1
            && trace_kernel_size == q
            && norm_one_circle_size == q + 1,
    };

    let text = format!(
        "tower p={p} f={f}: q={q}, q^2={qq}\n\
         frobenius involutive: {}\n\
         frobenius fixes exactly the base field: {} ({} elements)\n\
         norm onto base units: {} (image {})\n\
         relative trace kernel: {} (size {})\n\
         norm-one circle: {} (size {})\n\
         verdict: {}",
        artifact.frobenius_involutive,
        artifact.frobenius_fixes_exactly_base,
        artifact.frobenius_fixed_count,
        artifact.norm_surjective_onto_base,
        artifact.norm_image_size,
        artifact.trace_kernel_expected,
        artifact.trace_kernel_size,
        artifact.circle_expected,
        artifact.norm_one_circle_size,
        if artifact.ok { "ok" } else { "FAILED" },
    );

    Ok(CommandOutput {
        math_ok: artifact.ok,
        csv: Some(CsvBlock {
            header: vec!["p".into(), "f".into(), "q".into(), "qq".into(), "ok".into()],
            rows: vec![vec![
                p.to_string(),
                f.to_string(),
                q.to_string(),
                qq.to_string(),
                artifact.ok.to_string(),
            ]],
        }),
        json: to_canonical_json(&artifact),
        text,
    })
}

// -------------------------------------------------------------- chartab --

#[derive(Serialize)]
struct ChartabArtifact {
    group: String,
    group_order: u64,
    k: usize,
    exponent: u64,
    ell: u64,
    degrees: Vec<u64>,
    sum_of_degree_squares: u64,
    class_sizes: Vec<u64>,
    class_orders: Vec<u64>,
    verification: serde_json::Value,
    verified: bool,
}

pub fn chartab_cmd(
    shared: &Shared,
    group: &str,
    n: u8,
    p: u32,
    f: u32,
    side: &str,
) -> Result<CommandOutput, CliError> {
    let kind = parse_kind(group)?;
    let side = parse_side(side)?;
    let tower = build_tower(p, f)?;
    let (bundle, status) =
        load_or_compute(kind, n, side, &tower, shared.ceiling, shared.cache_dir.as_deref())?;
    eprintln!("info: character table source: cache {}", status.as_str());

    let table = &bundle.table;
    let verified = table.verification.all_ok();
    let artifact = ChartabArtifact {
        group: table.tag.slug(),
        group_order: table.group_order,
        k: table.k(),
        exponent: table.exponent,
        ell: table.ell,
        degrees: table.degrees.clone(),
        sum_of_degree_squares: table.degrees.iter().map(|d| d * d).sum(),
        class_sizes: table.class_sizes.clone(),
        class_orders: table.class_orders.clone(),
        verification: to_canonical_json(&table.verification),
        verified,
    };

    let mut by_degree: BTreeMap<u64, usize> = BTreeMap::new();
    for &d in &table.degrees {
        *by_degree.entry(d).or_insert(0) += 1;
    }
    let histogram = by_degree
        .iter()
        .map(|(d, c)| format!("{c} of degree {d}"))
        .collect::<Vec<_>>()
        .join(", ");
    let text = format!(
        "table {}: |G| = {}, {} irreducibles ({histogram})\n\
         sum of squared degrees: {} (group order: {})\n\
         verification: {}",
        artifact.group,
        artifact.group_order,
        artifact.k,
        artifact.sum_of_degree_squares,
        artifact.group_order,
        if verified { "ok" } else { "FAILED" },
    );

    let rows = (0..table.k())
        .map(|i| vec![i.to_string(), table.degrees[i].to_string()])
        .collect();
    Ok(CommandOutput {
        math_ok: verified && artifact.sum_of_degree_squares == artifact.group_order,
        csv: Some(CsvBlock {
            header: vec!["char_id".into(), "degree".into()],
            rows,
        }),
        json: to_canonical_json(&artifact),
        text,
    })
}

// -------------------------------------------------------- double-cosets --

/// Method selection for the coset decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodArg {
    /// Enumerate when the ambient group fits under the ceiling, stream
    /// otherwise.
    Auto,
    Enumerated,
    Streamed,
}

#[derive(Serialize)]
struct CosetArtifact {
    method: &'static str,
    g_order: u64,
    h_order: u64,
    index: u64,
    num_cosets: usize,
    s_size: u64,
    s_matches_index: bool,
    tau_fibers_ok: bool,
    orbit_bijection_ok: bool,
    g_conj_implies_h_conj: bool,
    all_theta_stable: bool,
    sizes_sum_to_g: bool,
    all_checks: bool,
    coset_sizes: Vec<u64>,
    rep_keys: Vec<u64>,
}

fn coset_artifact(report: &DoubleCosetReport) -> CosetArtifact {
    CosetArtifact {
        method: match report.method {
            CosetMethod::Enumerated => "enumerated",
            CosetMethod::Streamed => "streamed",
        },
        g_order: report.g_order,
        h_order: report.h_order,
        index: report.g_order / report.h_order,
        num_cosets: report.num_cosets,
        s_size: report.s_size,
        s_matches_index: report.s_matches_index,
        tau_fibers_ok: report.tau_fibers_ok,
        orbit_bijection_ok: report.orbit_bijection_ok,
        g_conj_implies_h_conj: report.g_conj_implies_h_conj,
        all_theta_stable: report.all_theta_stable,
        sizes_sum_to_g: report.sizes_sum_to_g,
        all_checks: report.all_checks_pass(),
        coset_sizes: report.coset_sizes.clone(),
        rep_keys: report.rep_keys.clone(),
    }
}

pub fn double_cosets_cmd(
    shared: &Shared,
    n: u8,
    p: u32,
    f: u32,
    method: MethodArg,
) -> Result<CommandOutput, CliError> {
    if !(2..=3).contains(&n) {
        return Err(CliError::usage(format!("rank {n} is out of range (2 or 3)")));
    }
    let tower = build_tower(p, f)?;
    let h = MatrixGroup::build(GroupKind::GL, n, Side::Base, Arc::clone(&tower), shared.ceiling)?;

    let projected = order_formula(GroupKind::GL, n, Side::Ext, &tower);
    let effective_ceiling = shared.ceiling.unwrap_or(DEFAULT_CEILING);
    let chosen = match method {
        MethodArg::Enumerated => MethodArg::Enumerated,
        MethodArg::Streamed => MethodArg::Streamed,
        MethodArg::Auto => {
            if projected <= effective_ceiling {
                MethodArg::Enumerated
            } else {
                MethodArg::Streamed
            }
        }
    };

    let report = match chosen {
        MethodArg::Enumerated => {
            let g =
                MatrixGroup::build(GroupKind::GL, n, Side::Ext, Arc::clone(&tower), shared.ceiling)?;
            let classes = ConjugacyClasses::compute(&g);
            enumerated_double_cosets(&g, &classes, &h)
        }
        MethodArg::Streamed => streamed_double_cosets(&tower, n, &h, shared.threads.max(1)),
        MethodArg::Auto => unreachable!(),
    };

    let artifact = coset_artifact(&report);
    let text = format!(
        "double cosets for rank {n} over q = {} inside q^2 = {} ({} scan)\n\
         |G| = {}, |H| = {}, index = {}\n\
         twisted involutions: {} (index match: {})\n\
         double cosets: {}\n\
         tau fibers: {}, orbit bijection: {}, conjugacy descent: {}, theta stability: {}, size sum: {}\n\
         verdict: {}",
        tower.q(),
        tower.qq(),
        artifact.method,
        artifact.g_order,
        artifact.h_order,
        artifact.index,
        artifact.s_size,
        artifact.s_matches_index,
        artifact.num_cosets,
        artifact.tau_fibers_ok,
        artifact.orbit_bijection_ok,
        artifact.g_conj_implies_h_conj,
        artifact.all_theta_stable,
        artifact.sizes_sum_to_g,
        if artifact.all_checks { "ok" } else { "FAILED" },
    );

    let rows = artifact
        .coset_sizes
        .iter()
        .zip(&artifact.rep_keys)
        .enumerate()
        .map(|(i, (size, key))| vec![i.to_string(), size.to_string(), key.to_string()])
        .collect();
    Ok(CommandOutput {
        math_ok: artifact.all_checks,
        csv: Some(CsvBlock {
            header: vec!["coset".into(), "size".into(), "rep_key".into()],
            rows,
        }),
        json: to_canonical_json(&artifact),
        text,
    })
}

// ------------------------------------------------------------ pair-scan --

/// One symmetric-pair token: ambient family, subgroup family and side,
/// and the criteria the scan should check.
struct PairSpec {
    g_kind: GroupKind,
    h_kind: GroupKind,
    h_side: Side,
    criteria: &'static [Criterion],
}

fn pair_spec(token: &str) -> Result<PairSpec, CliError> {
    let spec = match token {
        "GL:GL" => PairSpec {
            g_kind: GroupKind::GL,
            h_kind: GroupKind::GL,
            h_side: Side::Base,
            criteria: &[Criterion::Gelfand, Criterion::GowSigmaDual],
        },
        "GL:U" => PairSpec {
            g_kind: GroupKind::GL,
            h_kind: GroupKind::U,
            h_side: Side::Ext,
            criteria: &[Criterion::Gelfand, Criterion::Shintani],
        },
        "SL:SL" => PairSpec {
            g_kind: GroupKind::SL,
            h_kind: GroupKind::SL,
            h_side: Side::Base,
            criteria: &[Criterion::Thm11Bound],
        },
        "GL:SLF" => PairSpec {
            g_kind: GroupKind::GL,
            h_kind: GroupKind::SL,
            h_side: Side::Base,
            criteria: &[Criterion::Gelfand],
        },
        "GL:SLE" => PairSpec {
            g_kind: GroupKind::GL,
            h_kind: GroupKind::SL,
            h_side: Side::Ext,
            criteria: &[Criterion::Gelfand, Criterion::TadicMultFree],
        },
        "GL:GL+" => PairSpec {
            g_kind: GroupKind::GL,
            h_kind: GroupKind::GLplus,
            h_side: Side::Ext,
            criteria: &[Criterion::TadicMultFree],
        },
        other => {
            return Err(CliError::usage(format!(
                "unknown pair '{other}' (expected GL:GL, GL:U, SL:SL, GL:SLF, GL:SLE or GL:GL+)"
            )))
        }
    };
    Ok(spec)
}

pub fn pair_scan_cmd(
    shared: &Shared,
    pair: &str,
    n: u8,
    p: u32,
    f: u32,
) -> Result<CommandOutput, CliError> {
    let spec = pair_spec(pair)?;
    let tower = build_tower(p, f)?;
    let (g, _) = load_or_compute(
        spec.g_kind,
        n,
        Side::Ext,
        &tower,
        shared.ceiling,
        shared.cache_dir.as_deref(),
    )?;
    let (h, _) = load_or_compute(
        spec.h_kind,
        n,
        spec.h_side,
        &tower,
        shared.ceiling,
        shared.cache_dir.as_deref(),
    )?;
    let pc = PairContext::new(&g, &h)?;
    let report = pair_scan(&g, &h, &pc, spec.criteria);

    let distinguished = report.rows.iter().filter(|r| r.dim_trivial != 0).count();
    let text = format!(
        "pair {pair}: {}\n\
         |G| = {}, |H| = {}, irreducibles: {}\n\
         max dim Hom_H(pi, 1): {}, distinguished: {distinguished}\n\
         oracle agreement: {}\n\
         multiplicity-one: {}\n\
         dual-twist law: {}\n\
         base-change law: {}\n\
         restriction multiplicity-free: {}\n\
         verdict: {}",
        report.pair,
        report.group_order,
        report.subgroup_order,
        report.rows.len(),
        report.max_dim,
        report.oracle_ok,
        opt_label(report.gelfand_ok),
        opt_label(report.gow_ok),
        opt_label(report.shintani_ok),
        opt_label(report.tadic_multfree_ok),
        if report.verdict() { "ok" } else { "FAILED" },
    );

    let rows = report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.char_id.to_string(),
                r.degree.to_string(),
                r.dim_trivial.to_string(),
                r.dim_oracle.to_string(),
                (r.dim_trivial != 0).to_string(),
                opt_bool(r.sigma_eq_dual),
                opt_bool(r.sigma_fixed),
            ]
        })
        .collect();
    Ok(CommandOutput {
        math_ok: report.verdict(),
        csv: Some(CsvBlock {
            header: vec![
                "char_id".into(),
                "degree".into(),
                "dim_trivial".into(),
                "dim_oracle".into(),
                "distinguished".into(),
                "sigma_eq_dual".into(),
                "sigma_fixed".into(),
            ],
            rows,
        }),
        json: to_canonical_json(&report),
        text,
    })
}

fn opt_label(v: Option<bool>) -> &'static str {
    match v {
        None => "not checked",
        Some(true) => "true",
        Some(false) => "FAILED",
    }
}
