//! Family specifications on the command line.
//!
//! Grammar: `name[:arg[:arg]]`, where a size argument is a number or an
//! inclusive range `a..b`.
//!
//! | spec                       | graphs                                    |
//! |----------------------------|-------------------------------------------|
//! | `petersen`                 | the Petersen graph                        |
//! | `complete:N`               | `K_N`                                     |
//! | `cycle:N`, `path:N`        | `C_N`, `P_N`                              |
//! | `star:N`                   | `K_{1,N-1}` (N vertices, centre last)     |
//! | `kss1:S`                   | `K_{S,S+1}`                               |
//! | `complete_multipartite:P`  | parts from a comma list, e.g. `3,1`       |
//! | `gnp:N:P`                  | `count` seeded draws, draw `i` uses `seed + i` |

use std::ops::RangeInclusive;

use spectough_core::graph::{Family, FamilyError, Graph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` expects {expected}")]
    Arity {
        family: String,
        expected: &'static str,
    },
    #[error("bad number `{0}`")]
    Number(String),
    #[error("empty range `{0}`")]
    EmptyRange(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// A parsed family specification.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Petersen,
    Complete(RangeInclusive<usize>),
    Cycle(RangeInclusive<usize>),
    Path(RangeInclusive<usize>),
    Star(RangeInclusive<usize>),
    Kss1(RangeInclusive<usize>),
    Multipartite(Vec<usize>),
    Gnp { n: RangeInclusive<usize>, p: f64 },
}

impl FamilySpec {
    /// Parses `name:args`; whitespace-separated tokens are accepted in place
    /// of colons, so `cycle 3..6` and `cycle:3..6` are the same spec.
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let joined = text.split_whitespace().collect::<Vec<_>>().join(":");
        let mut parts = joined.split(':');
        let name = parts.next().unwrap_or("").to_ascii_lowercase();
        let args: Vec<&str> = parts.collect();
        let arity = |want: usize, expected: &'static str| {
            if args.len() == want {
                Ok(())
            } else {
                Err(SpecError::Arity {
                    family: name.clone(),
                    expected,
                })
            }
        };
        let spec = match name.as_str() {
            "petersen" => {
                arity(0, "no arguments")?;
                FamilySpec::Petersen
            }
            "complete" | "k" => {
                arity(1, "an order")?;
                FamilySpec::Complete(parse_range(args[0])?)
            }
            "cycle" | "c" => {
                arity(1, "an order")?;
                FamilySpec::Cycle(parse_range(args[0])?)
            }
            "path" | "p" => {
                arity(1, "an order")?;
                FamilySpec::Path(parse_range(args[0])?)
            }
            "star" => {
                arity(1, "an order")?;
                FamilySpec::Star(parse_range(args[0])?)
            }
            "kss1" => {
                arity(1, "a part size s")?;
                FamilySpec::Kss1(parse_range(args[0])?)
            }
            "complete_multipartite" | "multipartite" => {
                arity(1, "a comma-separated part list")?;
                let parts = args[0]
                    .split(',')
                    .map(parse_number)
                    .collect::<Result<Vec<_>, _>>()?;
                FamilySpec::Multipartite(parts)
            }
            "gnp" => {
                arity(2, "an order and an edge probability")?;
                let p = args[1]
                    .parse::<f64>()
                    .map_err(|_| SpecError::Number(args[1].to_string()))?;
                FamilySpec::Gnp {
                    n: parse_range(args[0])?,
                    p,
                }
            }
            _ => return Err(SpecError::UnknownFamily(name)),
        };
        Ok(spec)
    }

    /// Concrete graphs in generation order. `count` and `seed` only affect
    /// `gnp`; draws are numbered consecutively across the order range.
    pub fn expand(&self, count: usize, seed: u64) -> Result<Vec<Graph>, SpecError> {
        let each = |range: &RangeInclusive<usize>, f: &dyn Fn(usize) -> Family| {
            range
                .clone()
                .map(|n| f(n).build().map_err(SpecError::from))
                .collect()
        };
        match self {
            FamilySpec::Petersen => Ok(vec![Family::Petersen.build()?]),
            FamilySpec::Complete(r) => each(r, &Family::Complete),
            FamilySpec::Cycle(r) => each(r, &Family::Cycle),
            FamilySpec::Path(r) => each(r, &Family::Path),
            FamilySpec::Star(r) => each(r, &|n| {
                Family::CompleteMultipartite(vec![n.saturating_sub(1), 1])
            }),
            FamilySpec::Kss1(r) => each(r, &|s| Family::CompleteMultipartite(vec![s, s + 1])),
            FamilySpec::Multipartite(parts) => {
                Ok(vec![Family::CompleteMultipartite(parts.clone()).build()?])
            }
            FamilySpec::Gnp { n, p } => {
                let mut out = Vec::new();
                let mut i = 0u64;
                for order in n.clone() {
                    for _ in 0..count {
                        let draw = Family::Gnp {
                            n: order,
                            p: *p,
                            seed: seed.wrapping_add(i),
                        };
                        out.push(draw.build()?);
                        i += 1;
                    }
                }
                Ok(out)
            }
        }
    }
}

fn parse_number(text: &str) -> Result<usize, SpecError> {
    text.trim()
        .parse()
        .map_err(|_| SpecError::Number(text.to_string()))
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, SpecError> {
    let range = match text.split_once("..") {
        Some((lo, hi)) => parse_number(lo)?..=parse_number(hi.trim_start_matches('='))?,
        None => {
            let n = parse_number(text)?;
            n..=n
        }
    };
    if range.is_empty() {
        return Err(SpecError::EmptyRange(text.to_string()));
    }
    Ok(range)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(text: &str) -> Vec<Graph> {
        FamilySpec::parse(text).unwrap().expand(1, 0).unwrap()
    }

    #[test]
    fn colon_and_space_forms_agree() {
        assert_eq!(
            FamilySpec::parse("cycle 3..6").unwrap(),
            FamilySpec::parse("cycle:3..6").unwrap()
        );
        assert_eq!(expand("cycle:3..6").len(), 4);
        assert_eq!(expand("cycle:3..=6").len(), 4);
    }

    #[test]
    fn named_families() {
        let star = &expand("star:4")[0];
        assert_eq!((star.n(), star.edge_count(), star.max_degree()), (4, 3, 3));
        let k = &expand("complete_multipartite:3,1")[0];
        assert_eq!(k, star);
        let kss1 = expand("kss1:2..6");
        assert_eq!(kss1.len(), 5);
        assert_eq!(kss1[0].n(), 5);
        assert_eq!(kss1[0].edge_count(), 6);
        assert_eq!(expand("petersen")[0].edge_count(), 15);
    }

    #[test]
    fn gnp_draws_are_seeded() {
        let spec = FamilySpec::parse("gnp 8 0.5").unwrap();
        let a = spec.expand(10, 7).unwrap();
        assert_eq!(a.len(), 10);
        assert_eq!(a, spec.expand(10, 7).unwrap());
        assert_eq!(a[1], spec.expand(1, 8).unwrap()[0]);
        assert_ne!(a, spec.expand(10, 8).unwrap());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            FamilySpec::parse("moebius:4"),
            Err(SpecError::UnknownFamily(_))
        ));
        assert!(matches!(
            FamilySpec::parse("cycle"),
            Err(SpecError::Arity { .. })
        ));
        assert!(matches!(
            FamilySpec::parse("cycle:x"),
            Err(SpecError::Number(_))
        ));
        assert!(matches!(
            FamilySpec::parse("cycle:6..3"),
            Err(SpecError::EmptyRange(_))
        ));
        let bad = FamilySpec::parse("cycle:2").unwrap();
        assert!(matches!(bad.expand(1, 0), Err(SpecError::Family(_))));
        let p = FamilySpec::parse("gnp:5:1.5").unwrap();
        assert!(p.expand(1, 0).is_err());
    }
}
