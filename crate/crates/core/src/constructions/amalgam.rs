use crate::anchors::AnchoredConfiguration;
use crate::config::Configuration;
use crate::error::{Error, Result};

use super::certified;

/// Glues two anchored configurations with the same `(r,k)`.
///
/// The second configuration is placed after the first; the incidences
/// `x_v y_b` (first) and `x'_1 y'_1` (second) are exchanged for `x_v y'_1`
/// and `x'_1 y_b`. The empty configuration is the identity.
pub fn amalgamate(c1: &AnchoredConfiguration, c2: &AnchoredConfiguration) -> Result<Configuration> {
    let (a, b) = (c1.config(), c2.config());
    if (a.r(), a.k()) != (b.r(), b.k()) {
        return Err(Error::ParameterMismatch {
            expected: (a.r(), a.k()),
            found: (b.r(), b.k()),
        });
    }
    if c1.is_empty() {
        return Ok(b.clone());
    }
    if c2.is_empty() {
        return Ok(a.clone());
    }
    let (v, bl) = (a.v(), a.b());
    let last = (v - 1, bl - 1);
    let first = (v, bl);
    let mut inc: Vec<_> = a
        .disjoint_union(b)
        .incidences()
        .iter()
        .copied()
        .filter(|&e| e != last && e != first)
        .collect();
    inc.push((v - 1, bl));
    inc.push((v, bl - 1));
    certified(Configuration::new(v + b.v(), bl + b.b(), a.r(), a.k(), inc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anchors::find_anchors;
    use crate::config::tuple_of;
    use crate::fixtures::{fano, mobius_kantor};

    #[test]
    fn fano_plus_fano() {
        let f = find_anchors(&fano()).unwrap();
        let out = amalgamate(&f, &f).unwrap();
        let t = tuple_of(&out);
        assert_eq!((t.v, t.b, t.r, t.k, t.d), (14, 14, 3, 3, 14));
    }

    #[test]
    fn fano_plus_mobius_kantor() {
        let f = find_anchors(&fano()).unwrap();
        let m = find_anchors(&mobius_kantor()).unwrap();
        let out = amalgamate(&f, &m).unwrap();
        assert_eq!(tuple_of(&out).d, 15);
    }

    #[test]
    fn empty_is_identity() {
        let f = find_anchors(&fano()).unwrap();
        let e = AnchoredConfiguration::empty(3, 3);
        assert_eq!(&amalgamate(&e, &f).unwrap(), f.config());
        assert_eq!(&amalgamate(&f, &e).unwrap(), f.config());
    }

    #[test]
    fn mismatch() {
        let f = find_anchors(&fano()).unwrap();
        let e = AnchoredConfiguration::empty(2, 3);
        assert!(matches!(amalgamate(&f, &e), Err(Error::ParameterMismatch { .. })));
    }
}
