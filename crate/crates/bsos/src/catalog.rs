//! Built-in benchmark instances.
//!
//! Each entry is the objective and the five constraint generators exactly as
//! listed for the benchmark families; the bounds `x_i >= 0` are appended as
//! generators `g_{5+i} = x_i` when the problem is built. Every listed `g_j`
//! satisfies `g_j <= 1` on the feasible set, which forces `x_i <= 1` there,
//! so the appended bounds also lie in `[0, 1]`.

use bsos_core::{Polynomial, SemialgebraicProblem};

use crate::expr::parse_polynomial;
use crate::Error;

struct Entry {
    name: &'static str,
    num_vars: usize,
    objective: &'static str,
    generators: &'static [&'static str],
}

/// Names accepted by [`builtin`], in catalog order.
pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

pub fn builtin(name: &str) -> Result<SemialgebraicProblem, Error> {
    let entry = CATALOG
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownBuiltin {
            name: name.to_string(),
            catalog: catalog_names().join(", "),
        })?;
    let n = entry.num_vars;
    let objective = parse_polynomial(n, entry.objective)?;
    let mut generators = entry
        .generators
        .iter()
        .map(|g| parse_polynomial(n, g))
        .collect::<Result<Vec<_>, _>>()?;
    generators.extend((0..n).map(|i| Polynomial::variable(n, i)));
    Ok(SemialgebraicProblem::new(
        entry.name, objective, generators,
    )?)
}

/// Raw `(objective, generators)` text of an entry, without the bound generators.
pub fn builtin_source(name: &str) -> Option<(&'static str, &'static [&'static str])> {
    CATALOG
        .iter()
        .find(|e| e.name == name)
        .map(|e| (e.objective, e.generators))
}

#[rustfmt::skip]
const CATALOG: &[Entry] = &[
    Entry {
        name: "P1",
        num_vars: 4,
        objective: "x1^2-x2^2+x3^2-x4^2+x1-x2",
        generators: &[
            "2x1^2+3x2^2+2x1x2+2x3^2+3x4^2+2x3x4",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4",
            "x1^2+6x2^2-4x1x2+x3^2+6x4^2-4x3x4",
            "x1^2+4x2^2-3x1x2+x3^2+4x4^2-3x3x4",
            "2x1^2+5x2^2+3x1x2+2x3^2+5x4^2+3x3x4",
        ],
    },
    Entry {
        name: "P2",
        num_vars: 2,
        objective: "x1^4x2^2+x1^2x2^4-x1^2x2^2",
        generators: &[
            "x1^2+x2^2",
            "3x1^2+2x2^2-4x1x2",
            "x1^2+6x2^4-8x1x2+2.5",
            "x1^4+3x2^4",
            "x1^2+x2^3",
        ],
    },
    Entry {
        name: "C1",
        num_vars: 2,
        objective: "x1^4+x2^4+2x1^2x2^2-x1-x2",
        generators: &[
            "-x1^4-2x2^4+1",
            "-2x1^4-x2^4+1",
            "-x1^4-4x2^2+1.25",
            "-4x1^4-x2^4+1.25",
            "-2x1^4-3x2^2+1.1",
        ],
    },
    Entry {
        name: "P4_2",
        num_vars: 4,
        objective: "x1^2-x2^2+x3^2-x4^2+x1-x2",
        generators: &[
            "2x1^2+3x2^2+2x1x2+2x3^2+3x4^2+2x3x4",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4",
            "x1^2+6x2^2-4x1x2+x3^2+6x4^2-4x3x4",
            "x1^2+4x2^2-3x1x2+x3^2+4x4^2-3x3x4",
            "2x1^2+5x2^2+3x1x2+2x3^2+5x4^2+3x3x4",
        ],
    },
    Entry {
        name: "P4_4",
        num_vars: 4,
        objective: "x1^4-x2^4+x3^4-x4^4",
        generators: &[
            "2x1^4+3x2^2+2x1x2+2x3^4+3x4^2+2x3x4",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4",
            "x1^2+6x2^2-4x1x2+x3^2+6x4^2-4x3x4",
            "x1^2+4x2^4-3x1x2+x3^2+4x4^4-3x3x4",
            "2x1^2+5x2^2+3x1x2+2x3^2+5x4^2+3x3x4",
        ],
    },
    Entry {
        name: "P4_6",
        num_vars: 4,
        objective: "x1^4x2^2+x1^2x2^4-x1^2x2^2+x3^4x4^2+x3^2x4^4-x3^2x4^2",
        generators: &[
            "x1^2+x2^2+x3^2+x4^2",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4",
            "x1^2+6x2^4-8x1x2+x3^2+6x4^4-8x3x4+2.5",
            "x1^4+3x2^4+x3^4+3x4^4",
            "x1^2+x2^3+x3^2+x4^3",
        ],
    },
    Entry {
        name: "P4_8",
        num_vars: 4,
        objective: "x1^4x2^2+x1^2x2^6-x1^2x2^2+x3^4x4^2+x3^2x4^6-x3^2x4^2",
        generators: &[
            "x1^2+x2^2+x3^2+x4^2",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4",
            "x1^2+6x2^4-8x1x2+x3^2+6x4^4-8x3x4+2.5",
            "x1^4+3x2^4+x3^4+3x4^4",
            "x1^2+x2^3+x3^2+x4^3",
        ],
    },
    Entry {
        name: "P6_2",
        num_vars: 6,
        objective: "x1^2-x2^2+x3^2-x4^2+x5^2-x6^2+x1-x2",
        generators: &[
            "2x1^2+3x2^2+2x1x2+2x3^2+3x4^2+2x3x4+2x5^2+3x6^2+2x5x6",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4+3x5^2+2x6^2-4x5x6",
            "x1^2+6x2^2-4x1x2+x3^2+6x4^2-4x3x4+x5^2+6x6^2-4x5x6",
            "x1^2+4x2^2-3x1x2+x3^2+4x4^2-3x3x4+x5^2+4x6^2-3x5x6",
            "2x1^2+5x2^2+3x1x2+2x3^2+5x4^2+3x3x4+2x5^2+5x6^2+3x5x6",
        ],
    },
    Entry {
        name: "P6_4",
        num_vars: 6,
        objective: "x1^4-x2^2+x3^4-x4^2+x5^4-x6^2+x1-x2",
        generators: &[
            "2x1^4+x2^2+2x1x2+2x3^4+x4^2+2x3x4+2x5^4+x6^2+2x5x6",
            "3x1^2+x2^2-4x1x2+3x3^2+x4^2-4x3x4+3x5^2+x6^2-4x5x6",
            "x1^2+6x2^2-4x1x2+x3^2+6x4^2-4x3x4+x5^2+6x6^2-4x5x6",
            "x1^2+3x2^4-3x1x2+x3^2+3x4^4-3x3x4+x5^2+3x6^4-3x5x6",
            "2x1^2+5x2^2+3x1x2+2x3^2+5x4^2+3x3x4+2x5^2+5x6^2+3x5x6",
        ],
    },
    Entry {
        name: "P6_6",
        num_vars: 6,
        objective: "x1^6-x2^6+x3^6-x4^6+x5^6-x6^6+x1-x2",
        generators: &[
            "2x1^6+3x2^2+2x1x2+2x3^6+3x4^2+2x3x4+2x5^6+3x6^2+2x5x6",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4+3x5^2+2x6^2-4x5x6",
            "x1^2+6x2^2-4x1x2+x3^2+6x4^2-4x3x4+x5^2+6x6^2-4x5x6",
            "x1^2+4x2^6-3x1x2+x3^2+4x4^6-3x3x4+x5^2+4x6^6-3x5x6",
            "2x1^2+5x2^2+3x1x2+2x3^2+5x4^2+3x3x4+2x5^2+5x6^2+3x5x6",
        ],
    },
    Entry {
        name: "P6_8",
        num_vars: 6,
        objective: "x1^8-x2^8+x3^8-x4^8+x5^8-x6^8+x1-x2",
        generators: &[
            "2x1^8+3x2^2+2x1x2+2x3^8+3x4^2+2x3x4+2x5^8+3x6^2+2x5x6",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4+3x5^2+2x6^2-4x5x6",
            "x1^2+6x2^2-4x1x2+x3^2+6x4^2-4x3x4+x5^2+6x6^2-4x5x6",
            "x1^2+4x2^8-3x1x2+x3^2+4x4^8-3x3x4+x5^2+4x6^8-3x5x6",
            "2x1^2+5x2^2+3x1x2+2x3^2+5x4^2+3x3x4+2x5^2+5x6^2+3x5x6",
        ],
    },
    Entry {
        name: "P8_2",
        num_vars: 8,
        objective: "x1^2-x2^2+x3^2-x4^2+x5^2-x6^2+x7^2-x8^2+x1-x2",
        generators: &[
            "2x1^2+3x2^2+2x1x2+2x3^2+3x4^2+2x3x4+2x5^2+3x6^2+2x5x6+2x7^2+3x8^2+2x7x8",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4+3x5^2+2x6^2-4x5x6+3x7^2+2x8^2-4x7x8",
            "x1^2+6x2^2-4x1x2+x3^2+6x4^2-4x3x4+x5^2+6x6^2-4x5x6+x7^2+6x8^2-4x7x8",
            "x1^2+4x2^2-3x1x2+x3^2+4x4^2-3x3x4+x5^2+4x6^2-3x5x6+x7^2+4x8^2-3x7x8",
            "2x1^2+5x2^2+3x1x2+2x3^2+5x4^2+3x3x4+2x5^2+5x6^2+3x5x6+2x7^2+5x8^2+3x7x8",
        ],
    },
    Entry {
        name: "P8_4",
        num_vars: 8,
        objective: "x1^4-x2^4+x3^4-x4^4+x5^4-x6^4+x7^4-x8^4+x1-x2",
        generators: &[
            "2x1^4+3x2^2+2x1x2+2x3^4+3x4^2+2x3x4+2x5^4+3x6^2+2x5x6+2x7^4+3x8^2+2x7x8",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4+3x5^2+2x6^2-4x5x6+3x7^2+2x8^2-4x7x8",
            "x1^2+6x2^2-4x1x2+x3^2+6x4^2-4x3x4+x5^2+6x6^2-4x5x6+x7^2+6x8^2-4x7x8",
            "x1^2+4x2^4-3x1x2+x3^2+4x4^4-3x3x4+x5^2+4x6^4-3x5x6+x7^2+4x8^4-3x7x8",
            "2x1^2+5x2^2+3x1x2+2x3^2+5x4^2+3x3x4+2x5^2+5x6^2+3x5x6+2x7^2+5x8^2+3x7x8",
        ],
    },
    Entry {
        name: "P8_6",
        num_vars: 8,
        objective: "x1^6-x2^6+x3^6-x4^6+x5^6-x6^6+x7^6-x8^6+x1-x2",
        generators: &[
            "2x1^6+3x2^2+2x1x2+2x3^6+3x4^2+2x3x4+2x5^6+3x6^2+2x5x6+2x7^6+3x8^2+2x7x8",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4+3x5^2+2x6^2-4x5x6+3x7^2+2x8^2-4x7x8",
            "x1^2+6x2^2-4x1x2+x3^2+6x4^2-4x3x4+x5^2+6x6^2-4x5x6+x7^2+6x8^2-4x7x8",
            "x1^2+4x2^6-3x1x2+x3^2+4x4^6-3x3x4+x5^2+4x6^6-3x5x6+x7^2+4x8^6-3x7x8",
            "2x1^2+5x2^2+3x1x2+2x3^2+5x4^2+3x3x4+2x5^2+5x6^2+3x5x6+2x7^2+5x8^2+3x7x8",
        ],
    },
    Entry {
        name: "P10_2",
        num_vars: 10,
        objective: "x1^2-x2^2+x3^2-x4^2+x5^2-x6^2+x7^2-x8^2+x9^2-x10^2+x1-x2",
        generators: &[
            "2x1^2+3x2^2+2x1x2+2x3^2+3x4^2+2x3x4+2x5^2+3x6^2+2x5x6+2x7^2+3x8^2+2x7x8+2x9^2+3x10^2+2x9x10",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4+3x5^2+2x6^2-4x5x6+3x7^2+2x8^2-4x7x8+3x9^2+2x10^2-4x9x10",
            "x1^2+6x2^2-4x1x2+x3^2+6x4^2-4x3x4+x5^2+6x6^2-4x5x6+x7^2+6x8^2-4x7x8+x9^2+6x10^2-4x9x10",
            "x1^2+4x2^2-3x1x2+x3^2+4x4^2-3x3x4+x5^2+4x6^2-3x5x6+x7^2+4x8^2-3x7x8+x9^2+4x10^2-3x9x10",
            "2x1^2+5x2^2+3x1x2+2x3^2+5x4^2+3x3x4+2x5^2+5x6^2+3x5x6+2x7^2+5x8^2+3x7x8+2x9^2+5x10^2+3x9x10",
        ],
    },
    Entry {
        name: "P10_4",
        num_vars: 10,
        objective: "x1^4-x2^4+x3^4-x4^4+x5^4-x6^4+x7^4-x8^4+x9^4-x10^4+x1-x2",
        generators: &[
            "2x1^4+3x2^2+2x1x2+2x3^4+3x4^2+2x3x4+2x5^4+3x6^2+2x5x6+2x7^4+3x8^2+2x7x8+2x9^4+3x10^2+2x9x10",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4+3x5^2+2x6^2-4x5x6+3x7^2+2x8^2-4x7x8+3x9^2+2x10^2-4x9x10",
            "x1^2+6x2^2-4x1x2+x3^2+6x4^2-4x3x4+x5^2+6x6^2-4x5x6+x7^2+6x8^2-4x7x8+x9^2+6x10^2-4x9x10",
            "x1^2+4x2^4-3x1x2+x3^2+4x4^4-3x3x4+x5^2+4x6^4-3x5x6+x7^2+4x8^4-3x7x8+x9^2+4x10^4-3x9x10",
            "2x1^2+5x2^2+3x1x2+2x3^2+5x4^2+3x3x4+2x5^2+5x6^2+3x5x6+2x7^2+5x8^2+3x7x8+2x9^2+5x10^2+3x9x10",
        ],
    },
    Entry {
        name: "P20_2",
        num_vars: 20,
        objective: "x1^2-x2^2+x3^2-x4^2+x5^2-x6^2+x7^2-x8^2+x9^2-x10^2+x11^2-x12^2+x1-x2+x13^2-x14^2+x15^2-x16^2+x17^2-x18^2+x19^2-x20^2",
        generators: &[
            "2x1^2+3x2^2+2x1x2+2x3^2+3x4^2+2x3x4+2x5^2+3x6^2+2x5x6+2x7^2+3x8^2+2x7x8+2x9^2+3x10^2+2x9x10+2x11^2+3x12^2+2x11x12+2x13^2+3x14^2+2x13x14+2x15^2+3x16^2+2x15x16+2x17^2+3x18^2+2x17x18+2x19^2+3x10^2+2x20x20",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4+3x5^2+2x6^2-4x5x6+3x7^2+2x8^2-4x7x8+3x9^2+2x10^2-4x9x10+3x11^2+2x12^2-4x11x12+3x13^2+2x14^2-4x13x14+3x15^2+2x16^2-4x15x16+3x17^2+2x19^2-4x18x18+3x19^2+2x20^2-4x19x20",
            "x1^2+6x2^2-4x1x2+x3^2+6x4^2-4x3x4+x5^2+6x6^2-4x5x6+x7^2+6x8^2-4x7x8+x9^2+6x10^2-4x9x10+x11^2+6x12^2-4x11x12+x13^2+6x14^2-4x13x14+x15^2+6x17^2-4x16x16+x17^2+6x18^2-4x17x18+x19^2+6x20^2-4x19x20",
            "x1^2+4x2^2-3x1x2+x3^2+4x4^2-3x3x4+x5^2+4x6^2-3x5x6+x7^2+4x8^2-3x7x8+x9^2+4x10^2-3x9x10+x1^2+4x12^2-3x11x12+x13^2+4x14^2-3x15x14+x15^2+4x16^2-3x15x16+x17^2+4x18^2-3x17x18+x19^2+4x20^2-3x19x20",
            "2x1^2+5x2^2+3x1x2+2x3^2+5x4^2+3x3x4+2x5^2+5x6^2+3x5x6+2x7^2+5x8^2+3x7x8+2x9^2+5x10^2+3x9x10+2x11^2+5x13^2+3x12x12+2x13^2+5x14^2+3x13x14+2x15^2+5x16^2+3x15x16+2x17^2+5x18^2+3x17x18+2x19^2+5x20^2+3x19x20",
        ],
    },
    Entry {
        name: "P20_4",
        num_vars: 20,
        objective: "x1^4-x2^4+x3^2-x4^2+x5^2-x6^2+x7^2-x8^2+x9^2-x10^2+x11^2-x12^2+x1-x2+x13^2-x14^2+x15^2-x16^2+x17^2-x18^2+x19^2-x20^2",
        generators: &[
            "2x1^2+3x2^2+2x1x2+2x3^2+3x4^2+2x3x4+2x5^2+3x6^2+2x5x6+2x7^2+3x8^2+2x7x8+2x9^2+3x10^2+2x9x10+2x11^2+3x12^2+2x11x12+2x13^2+3x14^2+2x13x14+2x15^2+3x16^2+2x15x16+2x17^2+3x18^2+2x17x18+2x19^2+3x10^2+2x20x20",
            "3x1^2+2x2^2-4x1x2+3x3^2+2x4^2-4x3x4+3x5^2+2x6^2-4x5x6+3x7^2+2x8^2-4x7x8+3x9^2+2x10^2-4x9x10+3x11^2+2x12^2-4x11x12+3x13^2+2x14^2-4x13x14+3x15^2+2x16^2-4x15x16+3x17^2+2x19^2-4x18x18+3x19^2+2x20^2-4x19x20",
            "x1^2+6x2^2-4x1x2+x3^2+6x4^2-4x3x4+x5^2+6x6^2-4x5x6+x7^2+6x8^2-4x7x8+x9^2+6x10^2-4x9x10+x11^2+6x12^2-4x11x12+x13^2+6x14^2-4x13x14+x15^2+6x17^2-4x16x16+x17^2+6x18^2-4x17x18+x19^2+6x20^2-4x19x20",
            "x1^2+4x2^2-3x1x2+x3^2+4x4^2-3x3x4+x5^2+4x6^2-3x5x6+x7^2+4x8^2-3x7x8+x9^2+4x10^2-3x9x10+x1^2+4x12^2-3x11x12+x13^2+4x14^2-3x15x14+x15^2+4x16^2-3x15x16+x17^2+4x18^2-3x17x18+x19^2+4x20^2-3x19x20",
            "2x1^2+5x2^2+3x1x2+2x3^2+5x4^2+3x3x4+2x5^2+5x6^2+3x5x6+2x7^2+5x8^2+3x7x8+2x9^2+5x10^2+3x9x10+2x11^2+5x13^2+3x12x12+2x13^2+5x14^2+3x13x14+2x15^2+5x16^2+3x15x16+2x17^2+5x18^2+3x17x18+2x19^2+5x20^2+3x19x20",
        ],
    },
    Entry {
        name: "C4_2",
        num_vars: 4,
        objective: "x1^2+x2^2+x3^2+x4^2+2x1x2-x1-x2",
        generators: &[
            "-x1^2-2x2^2-x3^2-2x4^2+1",
            "-2x1^2-x2^2-2x3^2-x4^2+1",
            "-x1^2-4x2^2-x3^2-4x4^2+1.25",
            "-4x1^2-x2^2-4x3^2-x4^2+1.25",
            "-2x1^2-3x2^2-2x3^2-3x4^2+1.1",
        ],
    },
    Entry {
        name: "C4_4",
        num_vars: 4,
        objective: "x1^4+x2^4+x3^4+x4^4+3x1^2x2^2-x1-x2",
        generators: &[
            "-x1^4-2x2^4-x3^4-2x4^4+1",
            "-2x1^4-x2^4-2x3^4-x4^4+1",
            "-x1^4-4x2^4-x3^4-4x4^4+1.25",
            "-4x1^4-x2^4-4x3^4-x4^4+1.25",
            "-2x1^4-3x2^2-2x3^4-3x4^2+1.1",
        ],
    },
    Entry {
        name: "C4_6",
        num_vars: 4,
        objective: "x1^6+x2^6+x3^6+x4^6+10/3x1^3x2^3-x1-x2",
        generators: &[
            "-x1^6-2x2^6-x3^6-2x4^6+1",
            "-2x1^6-x2^6-2x3^6-x4^6+1",
            "-x1^6-4x2^2-x3^6-4x4^2+1.25",
            "-4x1^6-x2^2-4x3^6-x4^2+1.25",
            "-2x1^2-3x2^6-2x3^2-3x4^6+1.1",
        ],
    },
    Entry {
        name: "C6_2",
        num_vars: 6,
        objective: "x1^2+x2^2+x3^2+x4^2+x5^2+x6^2+2x1x2-x1-x2",
        generators: &[
            "-x1^2-2x2^2-x3^2-2x4^2-x5^2-2x6^2+1",
            "-2x1^2-x2^2-2x3^2-x4^2-2x5^2-x6^2+1",
            "-x1^2-4x2^2-x3^2-4x4^2-x5^2-4x6^2+1.25",
            "-4x1^2-x2^2-4x3^2-x4^2-4x5^2-x6^2+1.25",
            "-2x1^2-3x2^2-2x3^2-3x4^2-2x5^2-3x6^2+1.1",
        ],
    },
    Entry {
        name: "C6_4",
        num_vars: 6,
        objective: "x1^4+x2^4+x3^4+x4^4+x5^4+x6^4+3x1^2x2^2-x1-x2",
        generators: &[
            "-x1^4-2x2^4-x3^4-2x4^4-x5^4-2x6^4+1",
            "-2x1^4-x2^4-2x3^4-x4^4-2x5^4-x6^4+1",
            "-x1^4-4x2^4-x3^4-4x4^4-x5^4-4x6^4+1.25",
            "-4x1^4-x2^4-4x3^4-x4^4-4x5^4-x6^4+1.25",
            "-2x1^4-3x2^2-2x3^4-3x4^2-2x5^4-3x6^2+1.1",
        ],
    },
    Entry {
        name: "C6_6",
        num_vars: 6,
        objective: "x1^6+x2^6+x3^6+x4^6+x5^6+x6^6+10/3x1^2x2^3-x1-x2",
        generators: &[
            "-x1^6-2x2^6-x3^6-2x4^6-x5^6-2x6^6+1",
            "-2x1^6-x2^6-2x3^6-x4^6-2x5^6-x6^6+1",
            "-x1^6-4x2^2-x3^6-4x4^2-x5^6-4x6^2+1.25",
            "-4x1^6-x2^2-4x3^6-x4^2-4x5^6-x6^2+1.25",
            "-2x1^2-3x2^6-2x3^2-3x4^6-2x5^2-3x6^6+1.1",
        ],
    },
    Entry {
        name: "C8_2",
        num_vars: 8,
        objective: "x1^2+x2^2+x3^2+x4^2+x5^2+x6^2+x7^2+x8^2+2x1x2-x1-x2",
        generators: &[
            "-x1^2-2x2^2-x3^2-2x4^2-x5^2-2x6^2-x7^2-2x8^2+1",
            "-2x1^2-x2^2-2x3^2-x4^2-2x5^2-x6^2-2x7^2-x8^2+1",
            "-x1^2-4x2^2-x3^2-4x4^2-x5^2-4x6^2-x7^2-4x8^2+1.25",
            "-4x1^2-x2^2-4x3^2-x4^2-4x5^2-x6^2-4x7^2-x8^2+1.25",
            "-2x1^2-3x2^2-2x3^2-3x4^2-2x5^2-3x6^2-2x7^2-3x8^2+1.1",
        ],
    },
    Entry {
        name: "C8_4",
        num_vars: 8,
        objective: "x1^4+x2^4+x3^4+x4^4+x5^4+x6^4+x7^4+x8^4+3x1^2x2^2-x1-x2",
        generators: &[
            "-x1^4-2x2^4-x3^4-2x4^4-x5^2-2x6^4-x7^4-2x8^4+1",
            "-2x1^4-x2^4-2x3^4-x4^4-2x5^2-x6^4-2x7^4-x8^4+1",
            "-x1^4-4x2^4-x3^4-4x4^4-x5^4-4x6^4-x7^4-4x8^4+1.25",
            "-4x1^4-x2^4-4x3^4-x4^4-4x5^4-x6^4-4x7^4-x8^4+1.25",
            "-2x1^4-3x2^2-2x3^4-3x4^2-2x5^4-3x6^2-2x7^4-3x8^2+1.1",
        ],
    },
    Entry {
        name: "C10_2",
        num_vars: 10,
        objective: "x1^2+x2^2+x3^2+x4^2+x5^2+x6^2+x7^2+x8^2+x9^2+x10^2+2x1x2-x1-x2",
        generators: &[
            "-x1^2-2x2^2-x3^2-2x4^2-x5^2-2x6^2-x7^2-2x8^2-x9^2-2x10^2+1",
            "-2x1^2-x2^2-2x3^2-x4^2-2x5^2-x6^2-2x7^2-x8^2-2x9^2-x10^2+1",
            "-x1^2-4x2^2-x3^2-4x4^2-x5^2-4x6^2-x7^2-4x8^2-x9^2-4x10^2+1.25",
            "-4x1^2-x2^2-4x3^2-x4^2-4x5^2-x6^2-4x7^2-x8^2-4x9^2-x10^2+1.25",
            "-2x1^2-3x2^2-2x3^2-3x4^2-2x5^2-3x6^2-2x7^2-3x8^2-2x9^2-3x10^2+1.1",
        ],
    },
    Entry {
        name: "C10_4",
        num_vars: 10,
        objective: "x1^4+x2^4+x3^4+x4^4+x5^4+x6^4+x7^4+x8^4+x9^4+x10^4+3x1^2x2^2-x1-x2",
        generators: &[
            "-x1^4-2x2^4-x3^4-2x4^4-x5^4-2x6^4-x7^4-2x8^4-x9^4-2x10^4+1",
            "-2x1^4-x2^4-2x3^4-x4^4-2x5^4-x6^4-2x7^4-x8^4-2x9^4-x10^4+1",
            "-x1^4-4x2^4-x3^4-4x4^4-x5^4-4x6^4-x7^4-4x8^4-x9^4-4x10^4+1.25",
            "-4x1^4-x2^4-4x3^4-x4^4-4x5^4-x6^4-4x7^4-x8^4-4x9^4-x10^4+1.25",
            "-2x1^4-3x2^2-2x3^4-3x4^2-2x5^4-3x6^2-2x7^4-3x8^2-2x9^4-3x10^2+1.1",
        ],
    },
    Entry {
        name: "C20_2",
        num_vars: 20,
        objective: "x1^2+x2^2+x3^2+x4^2+x5^2+x6^2+x7^2+x8^2+x9^2+x10^2+2x1x2-x1-x2+x11^2+x12^2+x13^2+x14^2+x15^2+x16^2+x17^2+x18^2+x19^2+x20^2",
        generators: &[
            "-x1^2-2x2^2-x3^2-2x4^2-x5^2-2x6^2-x7^2-2x8^2-x9^2-2x10^2-x11^2-2x12^2-x13^2-2x14^2-x15^2-2x16^2-x17^2-2x18^2-x19^2-2x20^2+1",
            "-2x1^2-x2^2-2x3^2-x4^2-2x5^2-x6^2-2x7^2-x8^2-2x9^2-x10^2-2x11^2-x12^2-2x13^2-x14^2-2x15^2-x16^2-2x17^2-x18^2-2x19^2-x20^2+1",
            "-x1^2-4x2^2-x3^2-4x4^2-x5^2-4x6^2-x7^2-4x8^2-x9^2-4x10^2-x11^2-4x12^2-x13^2-4x14^2-x15^2-4x16^2-x17^2-4x18^2-x19^2-4x20^2+1.25",
            "-4x1^2-x2^2-4x3^2-x4^2-4x5^2-x6^2-4x7^2-x8^2-4x9^2-x10^2-4x11^2-x12^2-4x13^2-x14^2-4x15^2-x16^2-4x17^2-x18^2-4x19^2-x20^2+1.25",
            "-2x1^2-3x2^2-2x3^2-3x4^2-2x5^2-3x6^2-2x7^2-3x8^2-2x9^2-3x10^2-2x11^2-3x12^2-2x13^2-3x14^2-2x15^2-3x16^2-2x17^2-3x18^2-2x19^2-3x20^2+1.1",
        ],
    },
];
