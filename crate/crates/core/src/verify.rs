//! Certification of candidate configurations.
//!
//! [`verify`] never stops at the first problem: it returns every violation it
//! finds, each with a witness, so that a broken construction can be debugged
//! from a single report.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::config::Configuration;

/// One failed invariant. Labels in the `Display` form are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    /// An incidence names a point or line outside the declared ranges.
    DanglingIncidence { point: usize, line: usize },
    DuplicateIncidence { point: usize, line: usize },
    /// `r` or `k` is zero for a nonempty structure.
    ZeroDegree { r: usize, k: usize },
    PointDegree {
        point: usize,
        expected: usize,
        actual: usize,
    },
    LineDegree {
        line: usize,
        expected: usize,
        actual: usize,
    },
    /// Two points joined by two lines.
    FourCycle {
        points: (usize, usize),
        lines: (usize, usize),
    },
    Disconnected { components: usize },
    /// `v*r != b*k`.
    CountBalance { vr: usize, bk: usize },
    /// `v < r(k-1)+1`.
    TooFewPoints { v: usize, required: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::DanglingIncidence { point, line } => {
                write!(f, "dangling incidence x{} -- y{}", point + 1, line + 1)
            }
            Violation::DuplicateIncidence { point, line } => {
                write!(f, "duplicate incidence x{} -- y{}", point + 1, line + 1)
            }
            Violation::ZeroDegree { r, k } => write!(f, "degree parameters r={r}, k={k} must be positive"),
            Violation::PointDegree {
                point,
                expected,
                actual,
            } => write!(f, "point x{} has degree {actual}, expected {expected}", point + 1),
            Violation::LineDegree {
                line,
                expected,
                actual,
            } => write!(f, "line y{} has degree {actual}, expected {expected}", line + 1),
            Violation::FourCycle { points, lines } => write!(
                f,
                "4-cycle: points x{} and x{} share lines y{} and y{}",
                points.0 + 1,
                points.1 + 1,
                lines.0 + 1,
                lines.1 + 1
            ),
            Violation::Disconnected { components } => {
                write!(f, "incidence graph has {components} components")
            }
            Violation::CountBalance { vr, bk } => write!(f, "v*r = {vr} differs from b*k = {bk}"),
            Violation::TooFewPoints { v, required } => {
                write!(f, "v = {v} is below r(k-1)+1 = {required}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn four_cycles(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| matches!(v, Violation::FourCycle { .. }))
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return writeln!(f, "pass");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every configuration invariant and collects all violations.
pub fn verify(config: &Configuration) -> VerificationReport {
    let (v, b, r, k) = (config.v(), config.b(), config.r(), config.k());
    let mut violations = Vec::new();

    let mut point_deg = vec![0usize; v];
    let mut line_deg = vec![0usize; b];
    let mut prev = None;
    for &(p, l) in config.incidences() {
        if p >= v || l >= b {
            violations.push(Violation::DanglingIncidence { point: p, line: l });
            continue;
        }
        if prev == Some((p, l)) {
            violations.push(Violation::DuplicateIncidence { point: p, line: l });
            continue;
        }
        prev = Some((p, l));
        point_deg[p] += 1;
        line_deg[l] += 1;
    }

    if config.is_empty() {
        return VerificationReport { violations };
    }
    if r == 0 || k == 0 {
        violations.push(Violation::ZeroDegree { r, k });
    }

    for (point, &actual) in point_deg.iter().enumerate() {
        if actual != r {
            violations.push(Violation::PointDegree {
                point,
                expected: r,
                actual,
            });
        }
    }
    for (line, &actual) in line_deg.iter().enumerate() {
        if actual != k {
            violations.push(Violation::LineDegree {
                line,
                expected: k,
                actual,
            });
        }
    }

    violations.extend(four_cycles(config));

    let (_, components) = config.incidence_graph().components();
    if components > 1 {
        violations.push(Violation::Disconnected { components });
    }

    if v * r != b * k {
        violations.push(Violation::CountBalance { vr: v * r, bk: b * k });
    }
    if r > 0 && k > 0 && v < r * (k - 1) + 1 {
        violations.push(Violation::TooFewPoints {
            v,
            required: r * (k - 1) + 1,
        });
    }

    VerificationReport { violations }
}

/// Every pair of points on a common line is recorded once; a second line
/// through the same pair is a 4-cycle.
fn four_cycles(config: &Configuration) -> Vec<Violation> {
    let mut first_line: HashMap<(usize, usize), usize> = HashMap::new();
    let mut out = Vec::new();
    for (line, points) in config.points_of_lines().iter().enumerate() {
        for (i, &p) in points.iter().enumerate() {
            for &q in &points[i + 1..] {
                if p == q {
                    continue;
                }
                match first_line.get(&(p, q)) {
                    Some(&other) => out.push(Violation::FourCycle {
                        points: (p, q),
                        lines: (other, line),
                    }),
                    None => {
                        first_line.insert((p, q), line);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fano;

    /// Independent count: for every point pair, the number of lines holding
    /// both.
    fn max_shared_lines(config: &Configuration) -> usize {
        let lines = config.lines_of_points();
        let mut worst = 0;
        for p in 0..config.v() {
            for q in p + 1..config.v() {
                let shared = lines[p].iter().filter(|l| lines[q].contains(l)).count();
                worst = worst.max(shared);
            }
        }
        worst
    }

    #[test]
    fn fano_passes() {
        let report = verify(&fano());
        assert!(report.is_pass(), "{report}");
        assert_eq!(max_shared_lines(&fano()), 1);
    }

    #[test]
    fn empty_passes() {
        assert!(verify(&Configuration::empty(3, 3)).is_pass());
        assert!(verify(&Configuration::empty(1, 7)).is_pass());
    }

    #[test]
    fn k22_has_a_four_cycle() {
        let k22 = Configuration::new(2, 2, 2, 2, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        let report = verify(&k22);
        assert!(!report.is_pass());
        let cycles: Vec<_> = report.four_cycles().collect();
        assert_eq!(
            cycles,
            vec![&Violation::FourCycle {
                points: (0, 1),
                lines: (0, 1)
            }]
        );
        assert_eq!(max_shared_lines(&k22), 2);
    }

    #[test]
    fn removed_incidence_names_degrees() {
        let f = fano();
        let mut inc = f.incidences().to_vec();
        let (p, l) = inc.remove(0);
        let broken = Configuration::new(7, 7, 3, 3, inc);
        let report = verify(&broken);
        assert!(report.violations.contains(&Violation::PointDegree {
            point: p,
            expected: 3,
            actual: 2
        }));
        assert!(report.violations.contains(&Violation::LineDegree {
            line: l,
            expected: 3,
            actual: 2
        }));
    }

    #[test]
    fn dangling_and_duplicate() {
        let c = Configuration::new(1, 1, 1, 1, vec![(0, 0), (0, 0), (3, 0)]);
        let report = verify(&c);
        assert!(report
            .violations
            .contains(&Violation::DanglingIncidence { point: 3, line: 0 }));
        assert!(report
            .violations
            .contains(&Violation::DuplicateIncidence { point: 0, line: 0 }));
    }

    #[test]
    fn disjoint_union_is_disconnected() {
        let two = fano().disjoint_union(&fano());
        let report = verify(&two);
        assert_eq!(report.violations, vec![Violation::Disconnected { components: 2 }]);
    }

    #[test]
    fn necessary_conditions_reported() {
        // A single line with two points, declared with r = 2.
        let c = Configuration::new(2, 1, 2, 2, vec![(0, 0), (1, 0)]);
        let report = verify(&c);
        assert!(report
            .violations
            .contains(&Violation::CountBalance { vr: 4, bk: 2 }));
        assert!(report
            .violations
            .contains(&Violation::TooFewPoints { v: 2, required: 3 }));
    }
}
