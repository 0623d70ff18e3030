//! Framed link diagrams as signed crossing lists.
//!
//! Surgery input needs only pairwise linking numbers and framings, so a
//! diagram here is a list of signed over-crossings plus one framing
//! integer per component; there is no planarity data.
//!
//! Text format, one declaration per line:
//!
//! ```text
//! # comment
//! components N
//! framings f1 ... fN
//! x i j s        # component i crosses over component j with sign s in {+,-}
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use crate::intlinalg::IntMatrix;
use crate::manifold::{ManifoldError, SurgeryPresentation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("line {line}, column {col}: {message}")]
    Malformed {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("line {line}: component index {index} out of range 1..={components}")]
    IndexOutOfRange {
        line: usize,
        index: usize,
        components: usize,
    },
    #[error("line {line}: bad sign token `{token}`, expected `+` or `-`")]
    BadSign { line: usize, token: String },
    #[error(
        "linking-number symmetry violated between components {i} and {j}: \
         {i} over {j} sums to {lk_ij} but {j} over {i} sums to {lk_ji}"
    )]
    SymmetryViolation {
        i: usize,
        j: usize,
        lk_ij: BigInt,
        lk_ji: BigInt,
    },
    #[error("diagram has no `components` declaration")]
    MissingComponents,
    #[error("line {line}: expected {expected} framings, got {got}")]
    FramingCount {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("diagram has no `framings` declaration")]
    MissingFramings,
    #[error("self-crossing queries are not linking numbers; use the framing of component {0}")]
    SelfLinking(usize),
    #[error("subset of components must be nonempty")]
    EmptySubset,
    #[error("duplicate component {0} in subset")]
    DuplicateComponent(usize),
}

/// One crossing: `over` passes over `under` with the given sign.
/// Component indices are zero-based internally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub over: usize,
    pub under: usize,
    pub sign: i8,
}

/// A framed link diagram: component count, signed crossings, and one
/// framing integer per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    components: usize,
    crossings: Vec<Crossing>,
    framings: Vec<BigInt>,
}

impl LinkDiagram {
    /// Validates index ranges, signs, framing count, and the symmetry of
    /// signed over-crossing counts between every pair of components.
    pub fn new(
        components: usize,
        crossings: Vec<Crossing>,
        framings: Vec<BigInt>,
    ) -> Result<Self, DiagramError> {
        if framings.len() != components {
            return Err(DiagramError::FramingCount {
                line: 0,
                expected: components,
                got: framings.len(),
            });
        }
        for c in &crossings {
            for idx in [c.over, c.under] {
                if idx >= components {
                    return Err(DiagramError::IndexOutOfRange {
                        line: 0,
                        index: idx + 1,
                        components,
                    });
                }
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(DiagramError::BadSign {
                    line: 0,
                    token: c.sign.to_string(),
                });
            }
        }
        let d = LinkDiagram {
            components,
            crossings,
            framings,
        };
        d.check_symmetry()?;
        Ok(d)
    }

    fn check_symmetry(&self) -> Result<(), DiagramError> {
        for i in 0..self.components {
            for j in 0..i {
                let lk_ij = self.signed_over_count(i, j);
                let lk_ji = self.signed_over_count(j, i);
                if lk_ij != lk_ji {
                    return Err(DiagramError::SymmetryViolation {
                        i: j + 1,
                        j: i + 1,
                        lk_ij: lk_ji,
                        lk_ji: lk_ij,
                    });
                }
            }
        }
        Ok(())
    }

    fn signed_over_count(&self, over: usize, under: usize) -> BigInt {
        self.crossings
            .iter()
            .filter(|c| c.over == over && c.under == under)
            .map(|c| BigInt::from(c.sign))
            .sum()
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn framings(&self) -> &[BigInt] {
        &self.framings
    }
}

/// Parses the diagram text format. Errors carry the 1-based line and
/// column of the offending token.
pub fn parse_diagram(text: &str) -> Result<LinkDiagram, DiagramError> {
    let mut components: Option<(usize, usize)> = None; // (count, line)
    let mut framings: Option<Vec<BigInt>> = None;
    let mut crossings: Vec<(usize, Crossing)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens = tokenize(raw);
        let malformed = |col: usize, message: String| DiagramError::Malformed {
            line,
            col,
            message,
        };
        match tokens[0].1 {
            "components" => {
                if tokens.len() != 2 {
                    return Err(malformed(
                        tokens[0].0,
                        "expected `components N`".to_string(),
                    ));
                }
                let n = tokens[1]
                    .1
                    .parse::<usize>()
                    .map_err(|_| malformed(tokens[1].0, format!("bad count `{}`", tokens[1].1)))?;
                components = Some((n, line));
            }
            "framings" => {
                let vals = tokens[1..]
                    .iter()
                    .map(|(col, tok)| {
                        tok.parse::<BigInt>()
                            .map_err(|_| malformed(*col, format!("bad framing `{tok}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if let Some((n, _)) = components {
                    if vals.len() != n {
                        return Err(DiagramError::FramingCount {
                            line,
                            expected: n,
                            got: vals.len(),
                        });
                    }
                }
                framings = Some(vals);
            }
            "x" => {
                if tokens.len() != 4 {
                    return Err(malformed(tokens[0].0, "expected `x i j s`".to_string()));
                }
                let parse_idx = |(col, tok): (usize, &str)| {
                    tok.parse::<usize>()
                        .ok()
                        .filter(|&v| v >= 1)
                        .ok_or_else(|| malformed(col, format!("bad component index `{tok}`")))
                };
                let over = parse_idx(tokens[1])?;
                let under = parse_idx(tokens[2])?;
                let sign = match tokens[3].1 {
                    "+" => 1,
                    "-" => -1,
                    tok => {
                        return Err(DiagramError::BadSign {
                            line,
                            token: tok.to_string(),
                        })
                    }
                };
                if let Some((n, _)) = components {
                    for idx in [over, under] {
                        if idx > n {
                            return Err(DiagramError::IndexOutOfRange {
                                line,
                                index: idx,
                                components: n,
                            });
                        }
                    }
                }
                crossings.push((
                    line,
                    Crossing {
                        over: over - 1,
                        under: under - 1,
                        sign,
                    },
                ));
            }
            other => {
                return Err(malformed(
                    tokens[0].0,
                    format!("unknown declaration `{other}`"),
                ));
            }
        }
    }

    let (n, _) = components.ok_or(DiagramError::MissingComponents)?;
    let framings = framings.ok_or(DiagramError::MissingFramings)?;
    if framings.len() != n {
        return Err(DiagramError::FramingCount {
            line: 0,
            expected: n,
            got: framings.len(),
        });
    }
    // crossings may have been read before `components`; re-check ranges
    for (line, c) in &crossings {
        for idx in [c.over, c.under] {
            if idx >= n {
                return Err(DiagramError::IndexOutOfRange {
                    line: *line,
                    index: idx + 1,
                    components: n,
                });
            }
        }
    }
    LinkDiagram::new(n, crossings.into_iter().map(|(_, c)| c).collect(), framings)
}

/// Linking number of two distinct components: the sum of signs of
/// crossings where `i` passes over `j`. Symmetric by the parse-time check.
/// Indices are zero-based.
pub fn linking_number(d: &LinkDiagram, i: usize, j: usize) -> Result<BigInt, DiagramError> {
    if i == j {
        return Err(DiagramError::SelfLinking(i + 1));
    }
    for idx in [i, j] {
        if idx >= d.components {
            return Err(DiagramError::IndexOutOfRange {
                line: 0,
                index: idx + 1,
                components: d.components,
            });
        }
    }
    Ok(d.signed_over_count(i, j))
}

/// A family of framed circles reduced to the data the Hopf invariant
/// needs: per-component self-linking (the framing integer) and the
/// symmetric pairwise linking matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedFamily {
    framings: Vec<BigInt>,
    pairwise_lk: IntMatrix,
}

impl FramedFamily {
    pub fn new(framings: Vec<BigInt>, pairwise_lk: IntMatrix) -> Result<Self, DiagramError> {
        let n = framings.len();
        if pairwise_lk.rows() != n || pairwise_lk.cols() != n {
            return Err(DiagramError::FramingCount {
                line: 0,
                expected: n,
                got: pairwise_lk.rows(),
            });
        }
        for i in 0..n {
            if !pairwise_lk.get(i, i).is_zero() {
                return Err(DiagramError::SelfLinking(i + 1));
            }
            for j in 0..i {
                if pairwise_lk.get(i, j) != pairwise_lk.get(j, i) {
                    return Err(DiagramError::SymmetryViolation {
                        i: j + 1,
                        j: i + 1,
                        lk_ij: pairwise_lk.get(j, i).clone(),
                        lk_ji: pairwise_lk.get(i, j).clone(),
                    });
                }
            }
        }
        Ok(FramedFamily {
            framings,
            pairwise_lk,
        })
    }

    pub fn from_diagram(d: &LinkDiagram) -> Self {
        let n = d.components();
        let mut lk = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    lk.set(i, j, d.signed_over_count(i, j));
                }
            }
        }
        FramedFamily {
            framings: d.framings().to_vec(),
            pairwise_lk: lk,
        }
    }

    pub fn len(&self) -> usize {
        self.framings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.framings.is_empty()
    }

    pub fn pairwise_lk(&self, i: usize, j: usize) -> &BigInt {
        self.pairwise_lk.get(i, j)
    }
}

/// Hopf invariant of the union of the chosen components: the self-linking
/// of the framed 1-submanifold against its framing push-off,
/// `h = sum of framings + 2 * sum of pairwise linking numbers`.
pub fn hopf_invariant(f: &FramedFamily, subset: &[usize]) -> Result<BigInt, DiagramError> {
    if subset.is_empty() {
        return Err(DiagramError::EmptySubset);
    }
    let mut seen = vec![false; f.len()];
    for &i in subset {
        if i >= f.len() {
            return Err(DiagramError::IndexOutOfRange {
                line: 0,
                index: i + 1,
                components: f.len(),
            });
        }
        if seen[i] {
            return Err(DiagramError::DuplicateComponent(i + 1));
        }
        seen[i] = true;
    }
    let mut h: BigInt = subset.iter().map(|&i| f.framings[i].clone()).sum();
    for (a, &i) in subset.iter().enumerate() {
        for &j in &subset[a + 1..] {
            h += BigInt::from(2) * f.pairwise_lk.get(i, j);
        }
    }
    Ok(h)
}

/// Assembles the surgery linking matrix of a diagram: framings on the
/// diagonal, pairwise linking numbers off it.
pub fn surgery_matrix(d: &LinkDiagram) -> SurgeryPresentation {
    surgery_matrix_named(d, "diagram")
}

pub fn surgery_matrix_named(d: &LinkDiagram, name: &str) -> SurgeryPresentation {
    let n = d.components();
    let mut a = IntMatrix::zeros(n, n);
    for i in 0..n {
        a.set(i, i, d.framings()[i].clone());
        for j in 0..n {
            if i != j {
                a.set(i, j, d.signed_over_count(i, j));
            }
        }
    }
    SurgeryPresentation::new(name, a).expect("symmetric by the diagram symmetry check")
}

impl TryFrom<&LinkDiagram> for SurgeryPresentation {
    type Error = ManifoldError;

    fn try_from(d: &LinkDiagram) -> Result<Self, Self::Error> {
        Ok(surgery_matrix(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    const HOPF: &str = "components 2\nframings 0 0\nx 1 2 +\nx 2 1 +\n";

    #[test]
    fn parse_positive_hopf_link() {
        let d = parse_diagram(HOPF).unwrap();
        assert_eq!(d.components(), 2);
        assert_eq!(d.framings(), &[b(0), b(0)]);
        assert_eq!(linking_number(&d, 0, 1).unwrap(), b(1));
        assert_eq!(linking_number(&d, 1, 0).unwrap(), b(1));
    }

    #[test]
    fn parse_framed_unknot() {
        let d = parse_diagram("components 1\nframings 3\n").unwrap();
        assert_eq!(d.components(), 1);
        assert_eq!(d.framings(), &[b(3)]);
        assert!(d.crossings().is_empty());
    }

    #[test]
    fn parse_comments_and_blank_lines() {
        let d = parse_diagram("# a hopf link\n\ncomponents 2\nframings 0 0\nx 1 2 +\nx 2 1 +\n")
            .unwrap();
        assert_eq!(d.components(), 2);
    }

    #[test]
    fn parse_rejects_out_of_range_index() {
        let err = parse_diagram("components 2\nframings 0 0\nx 1 5 +\nx 5 1 +\n").unwrap_err();
        assert!(matches!(
            err,
            DiagramError::IndexOutOfRange { line: 3, index: 5, components: 2 }
        ));
    }

    #[test]
    fn parse_rejects_bad_sign() {
        let err = parse_diagram("components 2\nframings 0 0\nx 1 2 *\n").unwrap_err();
        assert!(matches!(err, DiagramError::BadSign { line: 3, .. }));
    }

    #[test]
    fn parse_rejects_asymmetric_crossings() {
        let err = parse_diagram("components 2\nframings 0 0\nx 1 2 +\n").unwrap_err();
        assert!(matches!(err, DiagramError::SymmetryViolation { .. }));
    }

    #[test]
    fn parse_reports_line_and_column() {
        let err = parse_diagram("components 2\nframings 0 zero\n").unwrap_err();
        match err {
            DiagramError::Malformed { line, col, .. } => {
                assert_eq!(line, 2);
                assert_eq!(col, 12);
            }
            other => panic!("expected Malformed, got {other:?}"),
        }
    }

    #[test]
    fn parse_requires_declarations() {
        assert!(matches!(
            parse_diagram("framings 0\n"),
            Err(DiagramError::MissingComponents)
        ));
        assert!(matches!(
            parse_diagram("components 1\n"),
            Err(DiagramError::MissingFramings)
        ));
        assert!(matches!(
            parse_diagram("components 2\nframings 0\n"),
            Err(DiagramError::FramingCount { expected: 2, got: 1, .. })
        ));
    }

    #[test]
    fn doubled_clasp_links_twice() {
        let d = parse_diagram(
            "components 2\nframings 0 0\nx 1 2 +\nx 1 2 +\nx 2 1 +\nx 2 1 +\n",
        )
        .unwrap();
        assert_eq!(linking_number(&d, 0, 1).unwrap(), b(2));
    }

    #[test]
    fn linking_number_rejects_self() {
        let d = parse_diagram(HOPF).unwrap();
        assert!(matches!(
            linking_number(&d, 1, 1),
            Err(DiagramError::SelfLinking(2))
        ));
    }

    #[test]
    fn hopf_invariant_basics() {
        // a single framed circle: h is the framing integer
        let single = FramedFamily::new(vec![b(7)], IntMatrix::zeros(1, 1)).unwrap();
        assert_eq!(hopf_invariant(&single, &[0]).unwrap(), b(7));
        let untwisted = FramedFamily::new(vec![b(0)], IntMatrix::zeros(1, 1)).unwrap();
        assert_eq!(hopf_invariant(&untwisted, &[0]).unwrap(), b(0));

        // two 0-framed circles with lk = 1: h of the union is 2
        let hopf = FramedFamily::from_diagram(&parse_diagram(HOPF).unwrap());
        assert_eq!(hopf_invariant(&hopf, &[0, 1]).unwrap(), b(2));

        assert!(matches!(
            hopf_invariant(&hopf, &[]),
            Err(DiagramError::EmptySubset)
        ));
        assert!(matches!(
            hopf_invariant(&hopf, &[0, 0]),
            Err(DiagramError::DuplicateComponent(1))
        ));
    }

    #[test]
    fn surgery_matrices() {
        let unknot = parse_diagram("components 1\nframings 0\n").unwrap();
        assert_eq!(
            surgery_matrix(&unknot).matrix(),
            &IntMatrix::from_rows_i64(&[vec![0]])
        );

        // positive Hopf link with framings 0: det = -1, so H1 is trivial
        let hopf = parse_diagram(HOPF).unwrap();
        let p = surgery_matrix(&hopf);
        assert_eq!(p.matrix(), &IntMatrix::from_rows_i64(&[vec![0, 1], vec![1, 0]]));
        assert!(crate::manifold::homology(&p).h1.is_trivial());

        let unlink = parse_diagram("components 2\nframings 5 -3\n").unwrap();
        assert_eq!(
            surgery_matrix(&unlink).matrix(),
            &IntMatrix::from_rows_i64(&[vec![5, 0], vec![0, -3]])
        );
    }
}
