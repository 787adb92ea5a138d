use crate::anchors::{find_anchors, AnchoredConfiguration};
use crate::config::{tuple_of, Configuration};
use crate::error::{Error, Result};

use super::amalgamate;

/// Writes `d` as a sum of the given parts using as few parts as possible.
/// Ties go to the larger part. Returns the parts in descending order.
pub fn decompose(d: usize, parts: &[usize]) -> Option<Vec<usize>> {
    let mut parts: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts.dedup();
    let mut count = vec![usize::MAX; d + 1];
    let mut via = vec![0usize; d + 1];
    count[0] = 0;
    for x in 1..=d {
        for &p in &parts {
            if p <= x && count[x - p] != usize::MAX && count[x - p] + 1 < count[x] {
                count[x] = count[x - p] + 1;
                via[x] = p;
            }
        }
    }
    if count[d] == usize::MAX {
        return None;
    }
    let mut out = Vec::with_capacity(count[d]);
    let mut x = d;
    while x > 0 {
        out.push(via[x]);
        x -= via[x];
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Some(out)
}

/// A configuration with scale factor `d` obtained by repeatedly
/// amalgamating known ones. The accumulated result is re-anchored before
/// each step.
pub fn construct_for_d(
    d: usize,
    r: usize,
    k: usize,
    known: &[(usize, AnchoredConfiguration)],
) -> Result<Configuration> {
    for (di, c) in known {
        let cfg = c.config();
        if (cfg.r(), cfg.k()) != (r, k) {
            return Err(Error::ParameterMismatch {
                expected: (r, k),
                found: (cfg.r(), cfg.k()),
            });
        }
        let actual = tuple_of(cfg).d;
        if actual != *di {
            return Err(Error::InfeasibleParameters(format!(
                "known configuration listed with d={di} has d={actual}"
            )));
        }
    }
    let scales: Vec<usize> = known.iter().map(|(d, _)| *d).collect();
    let Some(parts) = decompose(d, &scales) else {
        let mut generators = scales;
        generators.sort_unstable();
        generators.dedup();
        return Err(Error::NotExpressible { d, generators });
    };
    let mut acc = Configuration::empty(r, k);
    for part in parts {
        let (_, piece) = known
            .iter()
            .find(|(di, _)| *di == part)
            .expect("part comes from known");
        acc = amalgamate(&find_anchors(&acc)?, piece)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::sm_plus_one;
    use crate::fixtures::fano;
    use crate::verify::verify;

    #[test]
    fn decompositions() {
        assert_eq!(decompose(21, &[7]), Some(vec![7, 7, 7]));
        assert_eq!(decompose(20, &[7]), None);
        assert_eq!(decompose(29, &[7, 22]), Some(vec![22, 7]));
        assert_eq!(decompose(0, &[7]), Some(vec![]));
    }

    #[test]
    fn examples() {
        let f = find_anchors(&fano()).unwrap();
        let known = vec![(7, f.clone())];
        let c = construct_for_d(21, 3, 3, &known).unwrap();
        assert_eq!((c.v(), c.b()), (21, 21));
        assert!(verify(&c).is_pass());

        assert!(matches!(
            construct_for_d(20, 3, 3, &known),
            Err(Error::NotExpressible { d: 20, .. })
        ));

        let big = find_anchors(&sm_plus_one(&f).unwrap()).unwrap();
        let known = vec![(7, f), (22, big)];
        let c = construct_for_d(29, 3, 3, &known).unwrap();
        assert_eq!(tuple_of(&c).d, 29);

        let e = construct_for_d(0, 3, 3, &known).unwrap();
        assert!(e.is_empty());
    }

    #[test]
    fn mismatched_known() {
        let f = find_anchors(&fano()).unwrap();
        assert!(matches!(
            construct_for_d(7, 3, 4, &[(7, f)]),
            Err(Error::ParameterMismatch { .. })
        ));
    }
}
