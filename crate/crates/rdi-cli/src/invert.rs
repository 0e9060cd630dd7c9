//! The `invert` command: run the per-point inversion pipeline over the
//! configured grid, write a CSV field map and a JSON summary.
//!
//! Determinism contract: rows are computed in parallel but gathered in
//! grid-index order and formatted with a fixed 17-significant-digit
//! scientific notation, so identical configs produce byte-identical CSV
//! regardless of the thread count.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;

use rdi_core::engine::{dirac_residual, hermiticity_gate, invert_potential, scalar_inversion};
use rdi_core::physicality::{bremsstrahlung_check, synchrotron_check, PhysicalityVerdict};
use rdi_core::states::{SpacetimePoint, SpinorField};
use rdi_core::{CoreError, PhysicalConstants};

use crate::config::Config;
use crate::scenario::{self, PhysicalityCheck, Pipeline};
use crate::AppError;

/// 17 significant digits: round-trippable f64 text.
fn fmt(v: f64) -> String {
    format!("{:.16e}", v)
}

const EM_HEADER: &str = "t,x,y,z,ea0,ea1,ea2,ea3,e1,e2,e3,b1,b2,b3,j0,j1,j2,j3,hermiticity_residual,dirac_residual";
const SCALAR_HEADER: &str = "t,x,y,z,v,residual";

/// Per-point outcome carried back from the workers.
struct Row {
    text: String,
    hermiticity_residual: f64,
    dirac_residual: f64,
    gate_failed: bool,
}

fn em_row(
    field: &dyn SpinorField,
    p: SpacetimePoint,
    k: &PhysicalConstants,
    tol: f64,
) -> Result<Row, CoreError> {
    let raw = invert_potential(field, p, k)?;
    let mut cols: Vec<String> = vec![fmt(p.t), fmt(p.x), fmt(p.y), fmt(p.z)];
    match hermiticity_gate(&raw, tol) {
        Ok(pot) => {
            let ea = pot.ea_values();
            let fs = pot.field_strength(k);
            let j = pot.maxwell_current(k);
            let dres = dirac_residual(field, ea, p, k)?;
            cols.extend(ea.iter().map(|v| fmt(*v)));
            cols.extend(fs.e.iter().map(|v| fmt(*v)));
            cols.extend(fs.b.iter().map(|v| fmt(*v)));
            cols.extend(j.iter().map(|v| fmt(*v)));
            cols.push(fmt(raw.residual));
            cols.push(fmt(dres));
            Ok(Row {
                text: cols.join(","),
                hermiticity_residual: raw.residual,
                dirac_residual: dres,
                gate_failed: false,
            })
        }
        Err(_) => {
            // non-physical point: keep the residual for diagnosis, leave
            // the derived quantities empty
            cols.extend(std::iter::repeat(String::from("nan")).take(14));
            cols.push(fmt(raw.residual));
            cols.push(String::from("nan"));
            Ok(Row {
                text: cols.join(","),
                hermiticity_residual: raw.residual,
                dirac_residual: 0.0,
                gate_failed: true,
            })
        }
    }
}

fn scalar_row(
    field: &dyn SpinorField,
    p: SpacetimePoint,
    k: &PhysicalConstants,
    kappa: f64,
    density_norm: f64,
) -> Result<Row, CoreError> {
    let inv = scalar_inversion(field, p, k, kappa, density_norm)?;
    let cols = [fmt(p.t), fmt(p.x), fmt(p.y), fmt(p.z), fmt(inv.v), fmt(inv.residual)];
    Ok(Row {
        text: cols.join(","),
        hermiticity_residual: inv.residual,
        dirac_residual: 0.0,
        gate_failed: false,
    })
}

fn physicality_json(check: &PhysicalityCheck, k: &PhysicalConstants) -> serde_json::Value {
    let verdict: Option<Result<PhysicalityVerdict, CoreError>> = match check {
        PhysicalityCheck::Rotation(params) => Some(synchrotron_check(params, k)),
        PhysicalityCheck::Translation(params, span) => {
            Some(bremsstrahlung_check(params, *span, k))
        }
        PhysicalityCheck::None => None,
    };
    match verdict {
        None => serde_json::Value::Null,
        Some(Err(e)) => serde_json::json!({ "error": e.to_string() }),
        Some(Ok(v)) => serde_json::json!({
            "superluminal": v.superluminal,
            "radiated_energy": v.radiated_energy,
            "kinetic_energy": v.kinetic_energy,
            "ratio": v.ratio,
            "pass": v.pass,
        }),
    }
}

pub fn run(cfg: &Config, out_dir: &Path, pool: &rayon::ThreadPool) -> Result<(), AppError> {
    let k = cfg.constants.build().map_err(AppError::Config)?;
    let built = scenario::build(&cfg.scenario, &k).map_err(AppError::from)?;

    let times = cfg.grid.t.clone();
    let xs = cfg.grid.x.values();
    let ys = cfg.grid.y.values();
    let zs = cfg.grid.z.values();
    let mut points = Vec::with_capacity(cfg.grid.point_count());
    for &t in &times {
        for &z in &zs {
            for &y in &ys {
                for &x in &xs {
                    points.push(SpacetimePoint::new(t, x, y, z));
                }
            }
        }
    }

    let field = built.field.as_ref();
    let tol = cfg.tolerances.hermiticity;
    let rows: Result<Vec<Row>, CoreError> = pool.install(|| {
        points
            .par_iter()
            .map(|&p| match built.pipeline {
                Pipeline::Electromagnetic => em_row(field, p, &k, tol),
                Pipeline::Scalar { kappa, density_norm } => {
                    scalar_row(field, p, &k, kappa, density_norm)
                }
            })
            .collect()
    });
    let rows = rows.map_err(AppError::from)?;

    std::fs::create_dir_all(out_dir)
        .map_err(|e| AppError::Io(format!("cannot create {}: {e}", out_dir.display())))?;
    let prefix = cfg.output_prefix();
    let csv_path = out_dir.join(format!("{prefix}_fields.csv"));
    let header = match built.pipeline {
        Pipeline::Electromagnetic => EM_HEADER,
        Pipeline::Scalar { .. } => SCALAR_HEADER,
    };
    let mut csv = String::with_capacity(rows.len() * 128);
    csv.push_str(header);
    csv.push('\n');
    for row in &rows {
        csv.push_str(&row.text);
        csv.push('\n');
    }
    write_file(&csv_path, csv.as_bytes())?;

    let gate_failures = rows.iter().filter(|r| r.gate_failed).count();
    let max_h = rows.iter().map(|r| r.hermiticity_residual).fold(0.0, f64::max);
    let max_d = rows.iter().map(|r| r.dirac_residual).fold(0.0, f64::max);
    let summary = serde_json::json!({
        "scenario": built.name,
        "points": rows.len(),
        "gate_failures": gate_failures,
        "max_hermiticity_residual": max_h,
        "max_dirac_residual": max_d,
        "physicality": physicality_json(&built.physicality, &k),
        "fields_csv": csv_path.file_name().and_then(|n| n.to_str()),
    });
    let summary_path = out_dir.join(format!("{prefix}_summary.json"));
    write_file(
        &summary_path,
        format!("{}\n", serde_json::to_string_pretty(&summary).expect("serializable")).as_bytes(),
    )?;

    println!(
        "{}: {} points, max hermiticity residual {:.3e}, output {}",
        built.name,
        rows.len(),
        max_h,
        csv_path.display()
    );
    if gate_failures > 0 {
        return Err(AppError::NonPhysical(format!(
            "{gate_failures}/{} points exceed the hermiticity tolerance {tol:.1e} \
             (max residual {max_h:.3e}); residual map written to {}",
            rows.len(),
            csv_path.display()
        )));
    }
    Ok(())
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), AppError> {
    let mut f = std::fs::File::create(path)
        .map_err(|e| AppError::Io(format!("cannot write {}: {e}", path.display())))?;
    f.write_all(bytes)
        .map_err(|e| AppError::Io(format!("cannot write {}: {e}", path.display())))
}
