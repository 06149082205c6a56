//! Packet-level commands: the packet decomposition itself, the
//! distinction-multiplicity formula comparison, and the unitary-versus-split
//! relation for descending central characters.

use std::sync::Arc;

use serde::Serialize;

use distinction::{
    theorem43_check, unitary_relation, PacketLab, PacketReport, PairContext, Theorem43Record,
    UnitaryRecord,
};
use ff_core::{FieldTower, Side};
use group_engine::GroupKind;

use crate::cache::load_or_compute;
use crate::errors::CliError;
use crate::output::{to_canonical_json, CommandOutput, CsvBlock};

use super::{opt_bool, Shared};

/// Which irreducibles a packet-level command should process.
pub enum RepSelect {
    All,
    One(usize),
}

pub fn parse_rep(rep: &str) -> Result<RepSelect, CliError> {
    if rep.eq_ignore_ascii_case("all") {
        return Ok(RepSelect::All);
    }
    rep.parse::<usize>()
        .map(RepSelect::One)
        .map_err(|_| CliError::usage(format!("--rep expects 'all' or an index, got '{rep}'")))
}

fn validate_rank_two(n: u8, what: &str) -> Result<(), CliError> {
    if n != 2 {
        return Err(CliError::usage(format!("{what} is implemented for rank 2 only, got {n}")));
    }
    Ok(())
}

/// Builds the five-group packet laboratory with cache-aware tables.
pub fn build_lab(shared: &Shared, p: u32, f: u32) -> Result<PacketLab, CliError> {
    if p == 2 {
        return Err(CliError::usage(
            "packet analysis needs an odd characteristic (the index-two determinant subgroup \
             collapses in characteristic two)",
        ));
    }
    let tower = Arc::new(FieldTower::build(p, f).map_err(|e| CliError::usage(e.to_string()))?);
    let dir = shared.cache_dir.as_deref();
    let (g, _) = load_or_compute(GroupKind::GL, 2, Side::Ext, &tower, shared.ceiling, dir)?;
    let (gp, _) = load_or_compute(GroupKind::GLplus, 2, Side::Ext, &tower, shared.ceiling, dir)?;
    let (sl, _) = load_or_compute(GroupKind::SL, 2, Side::Ext, &tower, shared.ceiling, dir)?;
    let (h_gl, _) = load_or_compute(GroupKind::GL, 2, Side::Base, &tower, shared.ceiling, dir)?;
    let (h_sl, _) = load_or_compute(GroupKind::SL, 2, Side::Base, &tower, shared.ceiling, dir)?;
    PacketLab::from_bundles(g, gp, sl, h_gl, h_sl).map_err(|e| CliError::usage(e.to_string()))
}

fn packet_ok(r: &PacketReport) -> bool {
    r.restriction_multiplicity_free
        && r.clifford_ok
        && r.prop42_ok
        && r.q.action_closed
        && r.q.action_free
        && r.q.integer().is_some()
        && r.q_oracle_ok.unwrap_or(true)
}

// --------------------------------------------------------------- packet --

#[derive(Serialize)]
struct PacketArtifact {
    count: usize,
    all_ok: bool,
    packets: Vec<PacketReport>,
}

pub fn packet_cmd(
    shared: &Shared,
    n: u8,
    p: u32,
    f: u32,
    rep: &str,
) -> Result<CommandOutput, CliError> {
    validate_rank_two(n, "packet analysis")?;
    let select = parse_rep(rep)?;
    let lab = build_lab(shared, p, f)?;

    let ids: Vec<usize> = match select {
        RepSelect::All => (0..lab.g.k()).collect(),
        RepSelect::One(i) => vec![i],
    };
    let mut packets = Vec::with_capacity(ids.len());
    for i in ids {
        packets.push(lab.packet(i).map_err(|e| CliError::usage(e.to_string()))?);
    }
    let all_ok = packets.iter().all(packet_ok);

    let text = {
        let mut lines = vec![format!(
            "packets over q = {} (ambient order {}): {} processed",
            lab.g.group.tower().q(),
            lab.g.group.order(),
            packets.len()
        )];
        for r in &packets {
            lines.push(format!(
                "  pi_{}: degree {}, |X| = {}, |Y| = {}, |Z| = {}, q = {}, pieces {}+{}, {}",
                r.char_id,
                r.degree,
                r.twists.x.len(),
                r.twists.y.len(),
                r.twists.z.len(),
                r.q.integer().map(|v| v.to_string()).unwrap_or_else(|| "?".into()),
                r.plus_constituents.len(),
                r.sl_constituents.len(),
                if packet_ok(r) { "ok" } else { "FAILED" },
            ));
        }
        lines.push(format!("verdict: {}", if all_ok { "ok" } else { "FAILED" }));
        lines.join("\n")
    };

    let rows = packets
        .iter()
        .map(|r| {
            vec![
                r.char_id.to_string(),
                r.degree.to_string(),
                r.twists.x.len().to_string(),
                r.twists.y.len().to_string(),
                r.twists.z.len().to_string(),
                r.q.integer().map(|v| v.to_string()).unwrap_or_default(),
                r.plus_constituents.len().to_string(),
                r.sl_constituents.len().to_string(),
                r.clifford_ok.to_string(),
                r.prop42_ok.to_string(),
                opt_bool(r.q_oracle_ok),
            ]
        })
        .collect();
    let artifact = PacketArtifact { count: packets.len(), all_ok, packets };
    Ok(CommandOutput {
        math_ok: artifact.all_ok,
        csv: Some(CsvBlock {
            header: vec![
                "char_id".into(),
                "degree".into(),
                "x_size".into(),
                "y_size".into(),
                "z_size".into(),
                "q".into(),
                "plus_constituents".into(),
                "sl_constituents".into(),
                "clifford_ok".into(),
                "prop42_ok".into(),
                "q_oracle_ok".into(),
            ],
            rows,
        }),
        json: to_canonical_json(&artifact),
        text,
    })
}

// ------------------------------------------------------------ theorem43 --

#[derive(Serialize)]
struct FormulaArtifact {
    count: usize,
    applicable: usize,
    /// Character ids whose formula comparison failed; the full rows for
    /// them are in `records`, so a failure is reproducible from the
    /// artifact alone.
    discrepancies: Vec<usize>,
    all_equal: bool,
    records: Vec<Theorem43Record>,
}

pub fn theorem43_cmd(
    shared: &Shared,
    n: u8,
    p: u32,
    f: u32,
    rep: &str,
) -> Result<CommandOutput, CliError> {
    validate_rank_two(n, "the multiplicity formula")?;
    let select = parse_rep(rep)?;
    let lab = build_lab(shared, p, f)?;

    let ids: Vec<usize> = match select {
        RepSelect::All => (0..lab.g.k()).collect(),
        RepSelect::One(i) => vec![i],
    };
    let mut records = Vec::with_capacity(ids.len());
    for i in ids {
        let packet = lab.packet(i).map_err(|e| CliError::usage(e.to_string()))?;
        records.push(theorem43_check(&lab, &packet));
    }
    let discrepancies: Vec<usize> =
        records.iter().filter(|r| !r.all_equal).map(|r| r.char_id).collect();
    let artifact = FormulaArtifact {
        count: records.len(),
        applicable: records.iter().filter(|r| r.applicable).count(),
        all_equal: discrepancies.is_empty(),
        discrepancies,
        records,
    };

    let text = format!(
        "multiplicity formula over q = {}: {} packets, {} in scope\n\
         discrepancies: {}\n\
         verdict: {}",
        lab.g.group.tower().q(),
        artifact.count,
        artifact.applicable,
        if artifact.discrepancies.is_empty() {
            "none".to_string()
        } else {
            format!("{:?}", artifact.discrepancies)
        },
        if artifact.all_equal { "ok" } else { "FAILED" },
    );

    let rows = artifact
        .records
        .iter()
        .map(|r| {
            vec![
                r.char_id.to_string(),
                r.applicable.to_string(),
                r.q.to_string(),
                r.rows.len().to_string(),
                r.all_equal.to_string(),
            ]
        })
        .collect();
    Ok(CommandOutput {
        math_ok: artifact.all_equal,
        csv: Some(CsvBlock {
            header: vec![
                "char_id".into(),
                "applicable".into(),
                "q".into(),
                "constituents".into(),
                "all_equal".into(),
            ],
            rows,
        }),
        json: to_canonical_json(&artifact),
        text,
    })
}

// -------------------------------------------------------------- unitary --

#[derive(Serialize)]
struct UnitaryArtifact {
    count: usize,
    applicable: usize,
    all_match: bool,
    records: Vec<UnitaryRecord>,
}

pub fn unitary_cmd(shared: &Shared, n: u8, p: u32, f: u32) -> Result<CommandOutput, CliError> {
    validate_rank_two(n, "the unitary comparison")?;
    if p == 2 {
        return Err(CliError::usage(
            "the unitary comparison needs an odd characteristic (norm-one descent is trivial \
             in characteristic two)",
        ));
    }
    let tower = Arc::new(FieldTower::build(p, f).map_err(|e| CliError::usage(e.to_string()))?);
    let dir = shared.cache_dir.as_deref();
    let (g, _) = load_or_compute(GroupKind::GL, 2, Side::Ext, &tower, shared.ceiling, dir)?;
    let (u, _) = load_or_compute(GroupKind::U, 2, Side::Ext, &tower, shared.ceiling, dir)?;
    let (h_gl, _) = load_or_compute(GroupKind::GL, 2, Side::Base, &tower, shared.ceiling, dir)?;
    let pc_g_u = PairContext::new(&g, &u)?;
    let pc_g_hgl = PairContext::new(&g, &h_gl)?;

    let records: Vec<UnitaryRecord> = (0..g.k())
        .map(|i| unitary_relation(&g, &u, &pc_g_u, &h_gl, &pc_g_hgl, i))
        .collect();
    let applicable = records.iter().filter(|r| r.applicable).count();
    let all_match = records.iter().all(|r| r.matches.unwrap_or(true));
    let artifact = UnitaryArtifact { count: records.len(), applicable, all_match, records };

    let text = format!(
        "unitary-versus-split comparison over q = {}: {} irreducibles, {} with descending \
         central character\n\
         verdict: {}",
        tower.q(),
        artifact.count,
        artifact.applicable,
        if artifact.all_match { "ok" } else { "FAILED" },
    );

    let rows = artifact
        .records
        .iter()
        .map(|r| {
            vec![
                r.char_id.to_string(),
                r.degree.to_string(),
                r.omega_exponent.to_string(),
                r.applicable.to_string(),
                r.mu_exponent.map(|e| e.to_string()).unwrap_or_default(),
                r.dim_unitary.to_string(),
                r.dim_mu_gl.map(|d| d.to_string()).unwrap_or_default(),
                opt_bool(r.matches),
            ]
        })
        .collect();
    Ok(CommandOutput {
        math_ok: artifact.all_match,
        csv: Some(CsvBlock {
            header: vec![
                "char_id".into(),
                "degree".into(),
                "omega_exponent".into(),
                "applicable".into(),
                "mu_exponent".into(),
                "dim_unitary".into(),
                "dim_mu_gl".into(),
                "matches".into(),
            ],
            rows,
        }),
        json: to_canonical_json(&artifact),
        text,
    })
}
