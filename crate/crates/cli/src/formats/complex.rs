//! Complexes of free abelian groups.
//!
//! ```text
//! degrees -1..1          # the range of degrees, inclusive
//! orientation cochain    # or `chain`; optional, cochain by default
//! rank 2                 # one line per degree, in increasing order
//! rank 3
//! rank 1
//! d -1                   # the differential leaving degree -1, a 3 x 2 block in row-major order
//! 1 0
//! 0 2
//! 1 1
//! ```
//!
//! In a chain file `d n` maps degree `n` to degree `n - 1`; the complex is stored with
//! chain degree `n` at cochain degree `-n`. Omitted differentials are zero.

use std::collections::BTreeMap;

use lambda_kernel::dk::{Complex, Orientation};
use lambda_kernel::exact::IntMatrix;
use num_bigint::BigInt;

use super::{parse_int, Line, Source};
use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexFile {
    pub complex: Complex,
    pub orientation: Orientation,
}

fn parse_range(src: &Source<'_>, line: &Line<'_>, word: &str) -> Result<(i64, i64), CliError> {
    let (a, b) = word.split_once("..").ok_or_else(|| src.error_at(line, word, "expected a range lo..hi"))?;
    let lo: i64 = parse_int(src, line, a)?;
    let hi: i64 = parse_int(src, line, b)?;
    if lo > hi {
        return Err(src.error_at(line, word, format!("empty degree range {}", word)));
    }
    Ok((lo, hi))
}

pub fn parse_complex(src: &Source<'_>) -> Result<ComplexFile, CliError> {
    let lines = src.lines();
    let mut range = None;
    let mut orientation = Orientation::Cochain;
    let mut ranks: Vec<usize> = Vec::new();
    let mut blocks: BTreeMap<i64, IntMatrix> = BTreeMap::new();
    let mut i = 0;
    while i < lines.len() {
        let line = lines[i];
        i += 1;
        let words: Vec<&str> = line.words().collect();
        let args = &words[1..];
        let expect = |n: usize| -> Result<(), CliError> {
            if args.len() != n {
                return Err(src.error_at(&line, words[0], format!("`{}` takes {} argument(s)", words[0], n)));
            }
            Ok(())
        };
        match words[0] {
            "degrees" => {
                expect(1)?;
                if range.is_some() {
                    return Err(src.error_at(&line, words[0], "degrees declared twice"));
                }
                range = Some(parse_range(src, &line, args[0])?);
            }
            "orientation" => {
                expect(1)?;
                if !blocks.is_empty() {
                    return Err(src.error_at(&line, words[0], "the orientation must precede the differentials"));
                }
                orientation = match args[0] {
                    "chain" => Orientation::Chain,
                    "cochain" => Orientation::Cochain,
                    other => return Err(src.error_at(&line, other, "expected `chain` or `cochain`")),
                };
            }
            "rank" => {
                expect(1)?;
                let (lo, hi) = range.ok_or_else(|| src.error_at(&line, words[0], "`degrees` must come first"))?;
                if ranks.len() as i64 == hi - lo + 1 {
                    return Err(src.error_at(&line, words[0], "more ranks than degrees"));
                }
                ranks.push(parse_int(src, &line, args[0])?);
            }
            "d" => {
                expect(1)?;
                let (lo, hi) = range.ok_or_else(|| src.error_at(&line, words[0], "`degrees` must come first"))?;
                if ranks.len() as i64 != hi - lo + 1 {
                    return Err(src.error_at(&line, words[0], "every rank must be given before the differentials"));
                }
                let n: i64 = parse_int(src, &line, args[0])?;
                let target = if orientation == Orientation::Chain { n - 1 } else { n + 1 };
                if n < lo || n > hi || target < lo || target > hi {
                    return Err(src.error_at(
                        &line,
                        args[0],
                        format!("no differential leaves degree {} inside {}..{}", n, lo, hi),
                    ));
                }
                if blocks.contains_key(&n) {
                    return Err(src.error_at(&line, args[0], format!("d {} given twice", n)));
                }
                let (rows, cols) = (ranks[(target - lo) as usize], ranks[(n - lo) as usize]);
                let mut m = IntMatrix::zeros(rows, cols);
                if cols > 0 {
                    for r in 0..rows {
                        let row = *lines
                            .get(i)
                            .ok_or_else(|| src.error_at(&line, words[0], format!("d {} needs {} rows", n, rows)))?;
                        i += 1;
                        let entries: Vec<&str> = row.words().collect();
                        if entries.len() != cols || !entries[0].starts_with(|c: char| c == '-' || c.is_ascii_digit()) {
                            return Err(src.error_at(
                                &row,
                                row.text(),
                                format!("row {} of d {} needs {} integer entries", r + 1, n, cols),
                            ));
                        }
                        for (c, e) in entries.iter().enumerate() {
                            let v: BigInt = parse_int(src, &row, e)?;
                            m.set(r, c, v);
                        }
                    }
                }
                blocks.insert(n, m);
            }
            other => return Err(src.error_at(&line, other, format!("unknown keyword {:?}", other))),
        }
    }
    let (lo, hi) = range.ok_or_else(|| src.error("missing `degrees` line"))?;
    if ranks.len() as i64 != hi - lo + 1 {
        return Err(src.error(format!("{} ranks given for {} degrees", ranks.len(), hi - lo + 1)));
    }
    let block =
        |n: i64, rows: usize, cols: usize| blocks.get(&n).cloned().unwrap_or_else(|| IntMatrix::zeros(rows, cols));
    let rank = |n: i64| ranks[(n - lo) as usize];
    let complex = match orientation {
        Orientation::Cochain => {
            let diffs = (lo..hi).map(|n| block(n, rank(n + 1), rank(n))).collect();
            Complex::new(lo, ranks.clone(), diffs)
        }
        Orientation::Chain => {
            let diffs = (lo + 1..=hi).rev().map(|n| block(n, rank(n - 1), rank(n))).collect();
            Complex::new(-hi, ranks.iter().rev().copied().collect(), diffs)
        }
    };
    let complex = complex.map_err(|e| src.error(e.to_string()))?;
    Ok(ComplexFile { complex, orientation })
}

pub fn write_complex(c: &Complex, orientation: Orientation) -> String {
    let (lo, hi) = if c.is_zero() { (0, 0) } else { (c.lo(), c.hi()) };
    let mut out = String::new();
    let degrees: Vec<i64> = match orientation {
        Orientation::Cochain => (lo..=hi).collect(),
        Orientation::Chain => (-hi..=-lo).collect(),
    };
    let cochain = |n: i64| if orientation == Orientation::Chain { -n } else { n };
    out.push_str(&format!("degrees {}..{}\n", degrees[0], degrees[degrees.len() - 1]));
    if orientation == Orientation::Chain {
        out.push_str("orientation chain\n");
    }
    for &n in &degrees {
        out.push_str(&format!("rank {}\n", c.rank(cochain(n))));
    }
    for &n in &degrees {
        let m = match orientation {
            Orientation::Cochain if n < hi => c.diff(n),
            Orientation::Chain if n > -hi => c.diff(-n),
            _ => continue,
        };
        if m.rows() == 0 || m.cols() == 0 {
            continue;
        }
        out.push_str(&format!("d {}\n", n));
        for r in 0..m.rows() {
            let row: Vec<String> = m.row(r).iter().map(ToString::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<ComplexFile, CliError> {
        parse_complex(&Source::new("k.cplx", text))
    }

    #[test]
    fn cochain_file() {
        let f = parse("degrees 0..1\nrank 2\nrank 3\nd 0\n1 0\n0 1\n2 2\n").unwrap();
        assert_eq!(f.complex.euler_char(), -1);
        assert_eq!(f.complex.diff(0), IntMatrix::from_i64(3, 2, &[1, 0, 0, 1, 2, 2]));
    }

    #[test]
    fn chain_file_is_stored_in_negative_degrees() {
        let f = parse("degrees 0..1\norientation chain\nrank 1\nrank 1\nd 1\n2\n").unwrap();
        assert_eq!(f.complex, Complex::new(-1, vec![1, 1], vec![IntMatrix::from_i64(1, 1, &[2])]).unwrap());
        assert_eq!(f.orientation, Orientation::Chain);
    }

    #[test]
    fn round_trip_in_both_orientations() {
        let c =
            Complex::new(-1, vec![2, 1, 0], vec![IntMatrix::from_i64(1, 2, &[3, -1]), IntMatrix::zeros(0, 1)]).unwrap();
        for o in [Orientation::Cochain, Orientation::Chain] {
            let text = write_complex(&c, o);
            assert_eq!(parse(&text).unwrap().complex, c, "{}", text);
        }
    }

    #[test]
    fn errors_carry_positions() {
        match parse("degrees 0..1\nrank 2\nrank 1\nd 0\n1 x\n") {
            Err(CliError::Parse { line, col, .. }) => assert_eq!((line, col), (5, 3)),
            other => panic!("{:?}", other),
        }
        match parse("degrees 0..1\nrank 1\nrank 1\nd 0\n1\n2\n") {
            Err(CliError::Parse { line, .. }) => assert_eq!(line, 6),
            other => panic!("{:?}", other),
        }
        assert!(matches!(parse("rank 1\n"), Err(CliError::Parse { line: 1, col: 1, .. })));
        // d^2 != 0 is reported against the whole file.
        assert!(matches!(
            parse("degrees 0..2\nrank 1\nrank 1\nrank 1\nd 0\n1\nd 1\n1\n"),
            Err(CliError::Parse { line: 0, .. })
        ));
    }
}
