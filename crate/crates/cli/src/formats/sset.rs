//! Dumps of finite simplicial sets.
//!
//! ```text
//! top 1
//! count 0 2              # simplices at level 0
//! count 1 3
//! face 1 0 = 1 1 0       # d_0 at level 1, listed by simplex id
//! face 1 1 = 0 1 0
//! degeneracy 0 0 = 0 1   # s_0 at level 0
//! ```

use lambda_kernel::cone::FiniteSimplicialSet;

use super::{parse_int, Line, Source};
use crate::error::CliError;

fn table(src: &Source<'_>, line: &Line<'_>, words: &[&str], len: usize) -> Result<Vec<usize>, CliError> {
    let values = words.iter().map(|w| parse_int(src, line, w)).collect::<Result<Vec<usize>, _>>()?;
    if values.len() != len {
        return Err(src.error_at(
            line,
            words.first().copied().unwrap_or(line.text()),
            format!("expected {} entries", len),
        ));
    }
    Ok(values)
}

pub fn parse_sset(src: &Source<'_>) -> Result<FiniteSimplicialSet, CliError> {
    let lines = src.lines();
    let mut top = None;
    let mut counts: Vec<Option<usize>> = Vec::new();
    let mut faces: Vec<Vec<Option<Vec<usize>>>> = Vec::new();
    let mut degens: Vec<Vec<Option<Vec<usize>>>> = Vec::new();
    for line in &lines {
        let words: Vec<&str> = line.words().collect();
        let level = |i: usize| -> Result<usize, CliError> {
            let w = words.get(i).copied().ok_or_else(|| src.error_at(line, words[0], "missing level"))?;
            let n: usize = parse_int(src, line, w)?;
            match top {
                Some(t) if n <= t => Ok(n),
                Some(_) => Err(src.error_at(line, w, "level above `top`")),
                None => Err(src.error_at(line, words[0], "`top` must come first")),
            }
        };
        match words[0] {
            "top" => {
                if words.len() != 2 || top.is_some() {
                    return Err(src.error_at(line, words[0], "expected a single `top <n>` line"));
                }
                let t: usize = parse_int(src, line, words[1])?;
                top = Some(t);
                counts = vec![None; t + 1];
                faces = (0..=t).map(|n| vec![None; if n == 0 { 0 } else { n + 1 }]).collect();
                degens = (0..t).map(|n| vec![None; n + 1]).collect();
            }
            "count" => {
                let n = level(1)?;
                if words.len() != 3 {
                    return Err(src.error_at(line, words[0], "expected `count <level> <n>`"));
                }
                counts[n] = Some(parse_int(src, line, words[2])?);
            }
            kw @ ("face" | "degeneracy") => {
                let n = level(1)?;
                if words.len() < 4 || words[3] != "=" {
                    return Err(src.error_at(line, kw, format!("expected `{} <level> <index> = ...`", kw)));
                }
                let i: usize = parse_int(src, line, words[2])?;
                let slot =
                    if kw == "face" { faces[n].get_mut(i) } else { degens.get_mut(n).and_then(|r| r.get_mut(i)) };
                let Some(slot) = slot else {
                    return Err(src.error_at(line, words[2], format!("no {} with index {} at level {}", kw, i, n)));
                };
                let len = counts[n].ok_or_else(|| src.error_at(line, words[1], "count this level first"))?;
                *slot = Some(table(src, line, &words[4..], len)?);
            }
            other => return Err(src.error_at(line, other, format!("unknown keyword {:?}", other))),
        }
    }
    if top.is_none() {
        return Err(src.error("missing `top` line"));
    }
    let counts = counts
        .into_iter()
        .enumerate()
        .map(|(n, c)| c.ok_or_else(|| src.error(format!("missing count for level {}", n))))
        .collect::<Result<Vec<_>, _>>()?;
    let complete = |tables: Vec<Vec<Option<Vec<usize>>>>, what: &str| {
        tables
            .into_iter()
            .enumerate()
            .map(|(n, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(i, t)| t.ok_or_else(|| src.error(format!("missing {} {} {}", what, n, i))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
    };
    let faces = complete(faces, "face")?;
    let degens = complete(degens, "degeneracy")?;
    FiniteSimplicialSet::new(counts, faces, degens).map_err(|e| src.error(e.to_string()))
}

pub fn write_sset(x: &FiniteSimplicialSet) -> String {
    let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let mut out = format!("top {}\n", x.top());
    for n in 0..=x.top() {
        out.push_str(&format!("count {} {}\n", n, x.count(n)));
    }
    for n in 1..=x.top() {
        for i in 0..=n {
            out.push_str(&format!("face {} {} = {}\n", n, i, join(x.face(n, i))));
        }
    }
    for n in 0..x.top() {
        for j in 0..=n {
            out.push_str(&format!("degeneracy {} {} = {}\n", n, j, join(x.degeneracy(n, j))));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use lambda_kernel::cone::{category_zoo, nerve};

    #[test]
    fn nerves_round_trip() {
        for (_, c) in category_zoo().iter().take(6) {
            let x = nerve(c, 2);
            assert_eq!(parse_sset(&Source::new("x.sset", &write_sset(&x))).unwrap(), x);
        }
    }

    #[test]
    fn broken_identities_are_rejected() {
        let mut text = write_sset(&FiniteSimplicialSet::interval(1));
        let broken = text.replace("degeneracy 0 0 = 0 2", "degeneracy 0 0 = 2 0");
        assert_ne!(broken, text);
        text = broken;
        assert!(parse_sset(&Source::new("x.sset", &text)).is_err());
    }
}
