//! Small hand-written configurations for unit tests. Integration tests and
//! examples obtain their witnesses from the search oracle instead.

use crate::config::Configuration;

/// Lines `{i, i+d}` for `d` in `base`, modulo `n`: a cyclic configuration.
fn cyclic(n: usize, base: &[usize]) -> Configuration {
    let inc = (0..n)
        .flat_map(|line| base.iter().map(move |d| ((line + d) % n, line)))
        .collect();
    Configuration::new(n, n, base.len(), base.len(), inc)
}

/// The Fano plane, lines `{i, i+1, i+3} mod 7`.
pub fn fano() -> Configuration {
    cyclic(7, &[0, 1, 3])
}

/// The Möbius–Kantor configuration, lines `{i, i+1, i+3} mod 8`.
pub fn mobius_kantor() -> Configuration {
    cyclic(8, &[0, 1, 3])
}

/// Dual of the affine plane of order 3: a `(12,9,3,4)`-configuration.
pub fn affine_plane_dual() -> Configuration {
    // Points (x,y) of Z_3^2 as 3x+y; the lines are y = mx + c and x = c.
    let mut inc = Vec::new();
    let mut line = 0;
    for m in 0..3 {
        for c in 0..3 {
            for x in 0..3 {
                inc.push((3 * x + (m * x + c) % 3, line));
            }
            line += 1;
        }
    }
    for c in 0..3 {
        for y in 0..3 {
            inc.push((3 * c + y, line));
        }
        line += 1;
    }
    Configuration::new(9, 12, 4, 3, inc).dual()
}
