//! Finite categories.
//!
//! ```text
//! objects a b c
//! identity a 1a          # optional: names the identity of `a` (default `id_a`)
//! morphism f: a -> b
//! morphism g: b -> c
//! morphism h: a -> c
//! compose g f = h        # g ∘ f = h
//! ```
//!
//! Composites with identities are implied; every other composable pair of listed
//! morphisms needs a `compose` row. Morphisms are numbered with the undeclared identities
//! first, in object order, followed by `identity` and `morphism` lines in file order.

use std::collections::BTreeMap;

use lambda_kernel::cone::{FiniteCategory, Morphism};

use super::{Line, Source};
use crate::error::CliError;

fn lookup<'a>(
    src: &Source<'_>,
    line: &Line<'_>,
    table: &BTreeMap<&'a str, usize>,
    word: &'a str,
    what: &str,
) -> Result<usize, CliError> {
    table.get(word).copied().ok_or_else(|| src.error_at(line, word, format!("unknown {} {:?}", what, word)))
}

pub fn parse_category(src: &Source<'_>) -> Result<FiniteCategory, CliError> {
    let lines = src.lines();
    let mut objects: Vec<&str> = Vec::new();
    let mut object_index: BTreeMap<&str, usize> = BTreeMap::new();
    let mut declared: Vec<Option<usize>> = Vec::new();
    // `(name, src, dst, line)`; identities have `src == dst` and are recorded in `declared`.
    let mut arrows: Vec<(&str, usize, usize, Line<'_>)> = Vec::new();
    let mut rows: Vec<(&str, &str, &str, Line<'_>)> = Vec::new();
    for line in &lines {
        let words: Vec<&str> = line.words().collect();
        let needs_objects = |kw: &str| -> Result<(), CliError> {
            if objects.is_empty() {
                return Err(src.error_at(line, kw, "`objects` must come first"));
            }
            Ok(())
        };
        match words[0] {
            "objects" => {
                if !objects.is_empty() {
                    return Err(src.error_at(line, words[0], "objects declared twice"));
                }
                if words.len() < 2 {
                    return Err(src.error_at(line, words[0], "a category needs at least one object"));
                }
                for w in &words[1..] {
                    if object_index.insert(w, objects.len()).is_some() {
                        return Err(src.error_at(line, w, format!("object {:?} declared twice", w)));
                    }
                    objects.push(w);
                }
                declared = vec![None; objects.len()];
            }
            "identity" => {
                needs_objects(words[0])?;
                if words.len() != 3 {
                    return Err(src.error_at(line, words[0], "expected `identity <object> <name>`"));
                }
                let x = lookup(src, line, &object_index, words[1], "object")?;
                if declared[x].is_some() {
                    return Err(src.error_at(line, words[1], format!("identity of {:?} declared twice", words[1])));
                }
                declared[x] = Some(arrows.len());
                arrows.push((words[2], x, x, *line));
            }
            "morphism" => {
                needs_objects(words[0])?;
                // `morphism f: a -> b`, with or without a space before the colon.
                let rest = line.text()["morphism".len()..].trim_start();
                let (name, arrow) = rest
                    .split_once(':')
                    .ok_or_else(|| src.error_at(line, words[0], "expected `morphism <name>: <src> -> <dst>`"))?;
                let name = name.trim();
                let ends: Vec<&str> = arrow.split_whitespace().collect();
                if name.is_empty() || name.contains(char::is_whitespace) || ends.len() != 3 || ends[1] != "->" {
                    return Err(src.error_at(line, words[0], "expected `morphism <name>: <src> -> <dst>`"));
                }
                let s = lookup(src, line, &object_index, ends[0], "object")?;
                let d = lookup(src, line, &object_index, ends[2], "object")?;
                arrows.push((name, s, d, *line));
            }
            "compose" => {
                needs_objects(words[0])?;
                if words.len() != 5 || words[3] != "=" {
                    return Err(src.error_at(line, words[0], "expected `compose <g> <f> = <g∘f>`"));
                }
                rows.push((words[1], words[2], words[4], *line));
            }
            other => return Err(src.error_at(line, other, format!("unknown keyword {:?}", other))),
        }
    }
    if objects.is_empty() {
        return Err(src.error("missing `objects` line"));
    }
    let mut morphisms: Vec<Morphism> = Vec::new();
    let mut names: BTreeMap<&str, usize> = BTreeMap::new();
    let default_names: Vec<String> = objects.iter().map(|o| format!("id_{}", o)).collect();
    let undeclared = declared.iter().filter(|d| d.is_none()).count();
    let mut identity_of = vec![0; objects.len()];
    for (x, default) in default_names.iter().enumerate() {
        match declared[x] {
            Some(i) => identity_of[x] = undeclared + i,
            None => {
                if names.insert(default, morphisms.len()).is_some() {
                    return Err(src.error(format!("morphism name {:?} used twice", default)));
                }
                identity_of[x] = morphisms.len();
                morphisms.push(Morphism { name: default.clone(), src: x, dst: x });
            }
        }
    }
    for (name, s, d, line) in &arrows {
        if names.insert(name, morphisms.len()).is_some() {
            return Err(src.error_at(line, name, format!("morphism name {:?} used twice", name)));
        }
        morphisms.push(Morphism { name: name.to_string(), src: *s, dst: *d });
    }
    let n = morphisms.len();
    let mut compose = vec![vec![None; n]; n];
    for f in 0..n {
        compose[identity_of[morphisms[f].dst]][f] = Some(f);
        compose[f][identity_of[morphisms[f].src]] = Some(f);
    }
    for (g, f, h, line) in &rows {
        let (gi, fi, hi) = (
            lookup(src, line, &names, g, "morphism")?,
            lookup(src, line, &names, f, "morphism")?,
            lookup(src, line, &names, h, "morphism")?,
        );
        if morphisms[fi].dst != morphisms[gi].src {
            return Err(src.error_at(line, g, format!("{} ∘ {} is not composable", g, f)));
        }
        match compose[gi][fi] {
            Some(prev) if prev != hi => {
                return Err(src.error_at(line, h, format!("{} ∘ {} is already {}", g, f, morphisms[prev].name)))
            }
            _ => compose[gi][fi] = Some(hi),
        }
    }
    let objects = objects.iter().map(|o| o.to_string()).collect();
    FiniteCategory::new(objects, morphisms, identity_of, compose).map_err(|e| src.error(e.to_string()))
}

/// Writes every identity explicitly, so that parsing restores the morphism numbering.
pub fn write_category(c: &FiniteCategory) -> String {
    let mut out = format!("objects {}\n", c.objects().join(" "));
    let identities: Vec<usize> = (0..c.object_count()).map(|x| c.identity(x)).collect();
    for f in 0..c.morphism_count() {
        let m = c.morphism(f);
        if identities.contains(&f) {
            out.push_str(&format!("identity {} {}\n", c.objects()[m.src], m.name));
        } else {
            out.push_str(&format!("morphism {}: {} -> {}\n", m.name, c.objects()[m.src], c.objects()[m.dst]));
        }
    }
    let proper: Vec<usize> = (0..c.morphism_count()).filter(|f| !identities.contains(f)).collect();
    for &g in &proper {
        for &f in &proper {
            if let Some(h) = c.compose(g, f) {
                out.push_str(&format!(
                    "compose {} {} = {}\n",
                    c.morphism(g).name,
                    c.morphism(f).name,
                    c.morphism(h).name
                ));
            }
        }
    }
    out
}
