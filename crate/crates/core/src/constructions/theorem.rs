use num_integer::Integer;

use crate::anchors::AnchoredConfiguration;
use crate::config::Configuration;
use crate::error::{Error, Result};

use super::certified;

/// Number of base copies used by [`sm_plus_one`]: `rk / gcd(r,k)`.
pub fn theorem_copies(r: usize, k: usize) -> usize {
    r * k / r.gcd(&k)
}

/// From an anchored configuration with scale factor `m`, builds one with
/// scale factor `s*m + 1`, `s = rk/gcd(r,k)`.
///
/// Copy `i` occupies points `[i*v, (i+1)*v)` and lines `[i*b, (i+1)*b)`.
/// Consecutive copies are chained through their outer anchors, every
/// middle anchor `x_2 y_2` is cut, and `k/g` new points and `r/g` new lines
/// (appended after the copies) take over the cut incidences in groups of
/// `r` and `k` copies respectively.
pub fn sm_plus_one(base: &AnchoredConfiguration) -> Result<Configuration> {
    let c = base.config();
    let (r, k) = (c.r(), c.k());
    if r < 3 || k < 3 {
        return Err(Error::InfeasibleParameters(format!(
            "needs r, k >= 3, got r={r}, k={k}"
        )));
    }
    if base.is_empty() {
        return Err(Error::AnchorNotFound("the base configuration is empty".into()));
    }
    let (v, b) = (c.v(), c.b());
    let g = r.gcd(&k);
    let s = theorem_copies(r, k);
    let new_points = k / g;
    let new_lines = r / g;
    let point = |copy: usize, i: usize| copy * v + i;
    let line = |copy: usize, j: usize| copy * b + j;

    let mut removed = Vec::with_capacity(3 * s);
    for i in 0..s {
        removed.push((point(i, 1), line(i, 1)));
        if i + 1 < s {
            removed.push((point(i, v - 1), line(i, b - 1)));
            removed.push((point(i + 1, 0), line(i + 1, 0)));
        }
    }
    removed.sort_unstable();

    let mut inc = Vec::with_capacity(s * c.incidences().len() + 2 * s);
    for i in 0..s {
        inc.extend(
            c.incidences()
                .iter()
                .map(|&(p, l)| (point(i, p), line(i, l)))
                .filter(|e| removed.binary_search(e).is_err()),
        );
    }
    for i in 0..s - 1 {
        inc.push((point(i, v - 1), line(i + 1, 0)));
        inc.push((point(i + 1, 0), line(i, b - 1)));
    }
    for i in 0..s {
        inc.push((s * v + i / r, line(i, 1)));
        inc.push((point(i, 1), s * b + i / k));
    }
    certified(Configuration::new(
        s * v + new_points,
        s * b + new_lines,
        r,
        k,
        inc,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anchors::find_anchors;
    use crate::config::tuple_of;
    use crate::fixtures::{affine_plane_dual, fano};

    #[test]
    fn fano_gives_twenty_two() {
        let out = sm_plus_one(&find_anchors(&fano()).unwrap()).unwrap();
        let t = tuple_of(&out);
        assert_eq!((t.v, t.b, t.r, t.k, t.d), (22, 22, 3, 3, 22));
    }

    #[test]
    fn three_four_base() {
        // (12,9,3,4): m = 3, s = 12, sm+1 = 37.
        let base = affine_plane_dual();
        assert_eq!(tuple_of(&base).d, 3);
        let out = sm_plus_one(&find_anchors(&base).unwrap()).unwrap();
        assert_eq!(tuple_of(&out).d, 37);
        assert_eq!((out.v(), out.b()), (148, 111));
    }

    #[test]
    fn copies_count() {
        assert_eq!(theorem_copies(3, 3), 3);
        assert_eq!(theorem_copies(3, 4), 12);
        for r in 3..10 {
            for k in 3..10 {
                assert!(theorem_copies(r, k) >= 3);
            }
        }
    }
}
