//! The `catalog` command: list the scenario kinds, their parameters, and
//! the built-in presets.

use crate::config::PRESET_NAMES;

struct Entry {
    kind: &'static str,
    params: &'static str,
    summary: &'static str,
}

const ENTRIES: &[Entry] = &[
    Entry {
        kind: "rest",
        params: "(none)",
        summary: "free particle at rest; inverts to a vanishing four-potential",
    },
    Entry {
        kind: "rotation",
        params: "b0, r0, omega (optional; defaults to the resonant frequency)",
        summary: "Gaussian packet on a circular orbit of radius r0; inverts to a \
                  uniform magnetic field b0 plus the co-rotating electric field",
    },
    Entry {
        kind: "translation",
        params: "b0, l, t_period, broken (optional)",
        summary: "Gaussian packet carried distance l along y by a smooth start/stop \
                  trajectory; `broken = true` drops the normalization so the \
                  Hermiticity gate rejects the dynamics",
    },
    Entry {
        kind: "confined",
        params: "b0, xi, epsilon (optional)",
        summary: "stationary state confined transversely by b0 and longitudinally \
                  by a soft-core profile of width xi; inverts to a soft-Coulomb \
                  electric potential",
    },
    Entry {
        kind: "rotating-confined",
        params: "b0, r0, omega (optional), xi",
        summary: "the rotating packet additionally confined along z",
    },
    Entry {
        kind: "scalar",
        params: "xi, epsilon",
        summary: "stationary state whose dynamics is reproduced by a purely scalar \
                  interaction V(z) instead of an electromagnetic one",
    },
    Entry {
        kind: "nonlinear",
        params: "xi, kappa (optional)",
        summary: "static state inverting to a scalar interaction with a \
                  density-dependent (nonlinear) coupling kappa",
    },
    Entry {
        kind: "boosted-landau",
        params: "u2, b0",
        summary: "Landau ground state boosted to constant proper velocity u2 along \
                  y; inverts to the boosted uniform magnetic field",
    },
    Entry {
        kind: "accelerated-boost",
        params: "e0, b0",
        summary: "Landau ground state under a uniformly accelerating boost driven \
                  by a constant electric field e0",
    },
    Entry {
        kind: "custom",
        params: "rho, u (3 expressions), theta (3 expressions), beta, epsilon \
                 (optional), params (table)",
        summary: "expression-defined state: density, proper-velocity boost, \
                  rotation angles, and chiral phase are expressions over \
                  (t, x, y, z) and the params table",
    },
];

pub fn print(json: bool) {
    if json {
        let value = serde_json::json!({
            "scenarios": ENTRIES.iter().map(|e| serde_json::json!({
                "kind": e.kind,
                "parameters": e.params,
                "summary": e.summary,
            })).collect::<Vec<_>>(),
            "presets": PRESET_NAMES,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        return;
    }
    println!("Scenarios (set `kind` in the [scenario] table):");
    for e in ENTRIES {
        println!("  {:<20} {}", e.kind, e.summary);
        println!("  {:<20} parameters: {}", "", e.params);
    }
    println!("\nPresets (use with --preset):");
    for name in PRESET_NAMES {
        println!("  {name}");
    }
}
